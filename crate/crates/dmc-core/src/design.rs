//! Weight-contribution order, antichains and design comparison.
//!
//! The weight-contribution preorder compares `|λ_f|`: equal totals mean the
//! minimum-weight count cannot separate the candidates. Degree-`r` monomials
//! with equal index sum form antichains; the Type I refinement score (the
//! staircase product of a monomial against itself) breaks those ties, with
//! score zero meaning the candidate contributes no higher Type I codewords
//! at all.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::code::DecreasingSet;
use crate::monomial::Monomial;
use crate::orbit::staircase_product;
use crate::profile::{
    count_min_weight, count_type2_census, Budgets, Type2Count, Type2Entry,
};
use crate::type1::{count_type1_total, mu_range, Type1Options};
use crate::{Error, Result};

/// Weight-contribution comparison `f ⪯_{w_min} g ⇔ |λ_f| ≤ |λ_g|`;
/// `Equal` means tied (non-comparable, refinement needed).
pub fn cmp_wmin(f: &Monomial, g: &Monomial) -> Result<Ordering> {
    if f.degree() != g.degree() {
        return Err(Error::DegreeMismatch {
            left: f.degree(),
            right: g.degree(),
        });
    }
    Ok(f.lambda_total().cmp(&g.lambda_total()))
}

/// The antichain `A_{l,r}`: all degree-`r` monomials with index sum `l`.
pub fn antichain(m: u32, r: u32, l: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut choice: Vec<u32> = Vec::with_capacity(r as usize);
    fn rec(m: u32, r: u32, l: u32, from: u32, choice: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let picked: u32 = choice.iter().sum();
        if choice.len() == r as usize {
            if picked == l {
                out.push(Monomial::from_indices(m, choice).expect("indices fit"));
            }
            return;
        }
        for i in from..m {
            if picked + i > l {
                break;
            }
            choice.push(i);
            rec(m, r, l, i + 1, choice, out);
            choice.pop();
        }
    }
    rec(m, r, l, 0, &mut choice, &mut out);
    out
}

/// The Type I refinement score: the staircase product
/// `∏_{j=1}^{deg f} (2^{|J_f(i_j)|} − 2^{j-1})` of a monomial against
/// itself, zero as soon as a factor vanishes.
pub fn type1_refinement_score(f: &Monomial) -> u128 {
    let cols: Vec<u32> = f
        .indices()
        .iter()
        .map(|&i| f.j_count(i).expect("index below m"))
        .collect();
    staircase_product(&cols).expect("supported m")
}

/// One candidate row of a design report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignRow {
    pub f_max: Monomial,
    pub i3: usize,
    pub k: usize,
    pub lambda_total: u32,
    pub refinement_score: u128,
    pub w_min_count: u128,
    /// Type II census at `1.5 w_min` (`μ = 2`).
    pub w_15: Type2Entry,
    /// Type I closed form at `1.75 w_min` (`μ = 3`).
    pub w_175_type1: u128,
    /// Type II census component at `1.75 w_min`.
    pub w_175_type2: Type2Entry,
}

/// Comparison of RMxPolar candidates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignReport {
    pub m: u32,
    pub rows: Vec<DesignRow>,
    /// Ranking by the (|λ_f|, refinement score) key.
    pub notes: Vec<String>,
}

/// Builds the RMxPolar code of each degree-3 candidate and tabulates its
/// counts; infeasible censuses are recorded per cell, never left blank.
pub fn design_compare(
    m: u32,
    candidates: &[Monomial],
    budgets: &Budgets,
) -> Result<DesignReport> {
    let mut rows = Vec::with_capacity(candidates.len());
    for f_max in candidates {
        let set = DecreasingSet::rmxpolar(m, f_max)?;
        let r = set.r_max().expect("rmxpolar is nonempty");
        let w15 = match count_type2_census(&set, 2, budgets) {
            Type2Count::Exact(v) => Type2Entry::Census(v),
            Type2Count::Unavailable(reason) => Type2Entry::Unavailable(reason),
        };
        let type1_at_3 = if mu_range(m, r).is_some_and(|(lo, hi)| (lo..=hi).contains(&3)) {
            count_type1_total(&set, 3, Type1Options::default())?.0
        } else {
            0
        };
        let w175_type2 = if 2 * 3 > m - r + 2 {
            Type2Entry::Forbidden
        } else {
            match count_type2_census(&set, 3, budgets) {
                Type2Count::Exact(v) => Type2Entry::Census(v),
                Type2Count::Unavailable(reason) => Type2Entry::Unavailable(reason),
            }
        };
        rows.push(DesignRow {
            f_max: *f_max,
            i3: set.stratum(3).len(),
            k: set.dimension(),
            lambda_total: f_max.lambda_total(),
            refinement_score: type1_refinement_score(f_max),
            w_min_count: count_min_weight(&set),
            w_15: w15,
            w_175_type1: type1_at_3,
            w_175_type2: w175_type2,
        });
    }
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by_key(|&i| (rows[i].lambda_total, rows[i].refinement_score));
    let notes = order
        .iter()
        .map(|&i| {
            format!(
                "{}: |lambda| = {}, score = {}{}",
                rows[i].f_max,
                rows[i].lambda_total,
                rows[i].refinement_score,
                if rows[i].refinement_score == 0 {
                    " (contributes no higher Type I codewords)"
                } else {
                    ""
                }
            )
        })
        .collect();
    Ok(DesignReport { m, rows, notes })
}
