//! Classification and exact counting of Type I codewords.
//!
//! A Type I codeword of weight `w_μ` comes from a Minkowski sum of two
//! maximum-degree orbits. Valid monomial data splits into three sub-cases:
//!
//! * **A.1** — `f, g` in the set share exactly `r − μ` variables; the orbit
//!   product counts directly.
//! * **A.2** — they share more; a degree-`(r−μ)` factor `h` splits off and
//!   the cofactor `h* = gcd(f,g)/h` must admit a strictly shifted copy
//!   inside the complement of `fg`.
//! * **B.1** — `f = g` outside the set; a factor `h` inside the set and a
//!   shifted copy of `f/h` inside the complement of `f` are required, and
//!   mixing bits leading outside the set are frozen.
//!
//! Counts follow the orbit-size formulas with the pair/set rank
//! restrictions; the self-sum cases halve the product (unordered pairs).
//! A build-time toggle exposes the unhalved B.1 variant so a census can
//! adjudicate the halving; censuses here confirm the halved form.

use alloc::vec::Vec;

use hashbrown::HashSet;

use crate::code::DecreasingSet;
use crate::eval::{wmu, EvalVector};
use crate::monomial::Monomial;
use crate::orbit::{
    census_distinct, lta_orbit_size, orbit_ev_vectors, restricted_pair_size,
    restricted_self_size, CensusFilter, OrbitSpec,
};
use crate::{Error, Result};

/// Admissible `μ` interval for Type I codewords: `[3, min(r, m−r)]`.
pub fn mu_range(m: u32, r: u32) -> Option<(u32, u32)> {
    let hi = r.min(m.saturating_sub(r));
    if hi < 3 {
        None
    } else {
        Some((3, hi))
    }
}

fn check_mu(m: u32, r: u32, mu: u32) -> Result<()> {
    match mu_range(m, r) {
        Some((lo, hi)) if (lo..=hi).contains(&mu) => Ok(()),
        _ => Err(Error::MuOutOfRange { mu }),
    }
}

/// Greedy shift witness: a monomial on the free indices strictly below
/// `h_star` coordinatewise.
///
/// Sorting both sides ascending, the `l` smallest free indices dominate any
/// other choice, so the greedy match decides existence.
pub fn shift_exists(h_star: &Monomial, free_mask: u32) -> Option<Monomial> {
    let targets = h_star.indices();
    let l = targets.len();
    let free = Monomial::new(h_star.m(), free_mask)
        .expect("free mask fits m")
        .indices();
    if free.len() < l {
        return None;
    }
    let picks = &free[..l];
    if picks.iter().zip(targets.iter()).all(|(s, i)| s < i) {
        Some(Monomial::from_indices(h_star.m(), picks).expect("indices fit"))
    } else {
        None
    }
}

/// The degree-`(r−μ)` divisor of `gcd(f, g)` on its smallest indices, the
/// choice that leaves the most shiftable cofactor; `None` when the gcd is
/// too small.
pub fn canonical_h(f: &Monomial, g: &Monomial, mu: u32) -> Result<Option<Monomial>> {
    let r = f.degree();
    if g.degree() != r {
        return Err(Error::DegreeMismatch {
            left: r,
            right: g.degree(),
        });
    }
    if mu > r {
        return Err(Error::MuOutOfRange { mu });
    }
    let gcd = f.gcd(g)?;
    let target = r - mu;
    if gcd.degree() < target {
        return Ok(None);
    }
    let picks = &gcd.indices()[..target as usize];
    Ok(Some(
        Monomial::from_indices(f.m(), picks).expect("indices fit"),
    ))
}

/// A classified Type I case with its exact count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Type1Case {
    pub variant: Type1Variant,
    pub mu: u32,
    pub count: u128,
}

/// The three valid shapes of Type I monomial data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Type1Variant {
    A1 {
        f: Monomial,
        g: Monomial,
        h: Monomial,
    },
    A2 {
        f: Monomial,
        g: Monomial,
        h: Monomial,
        h_star: Monomial,
        shift_witness: Monomial,
    },
    B1 {
        f: Monomial,
        h: Monomial,
        shift_witness: Monomial,
        /// More than one valid factor `h` exists for this `f`; the canonical
        /// one was used and a census should adjudicate the count.
        multiple_h: bool,
    },
}

impl Type1Case {
    /// The pair of maximum-degree monomials spanning the case (`f = g` for
    /// B.1).
    pub fn pair(&self) -> (Monomial, Monomial) {
        match &self.variant {
            Type1Variant::A1 { f, g, .. } | Type1Variant::A2 { f, g, .. } => (*f, *g),
            Type1Variant::B1 { f, .. } => (*f, *f),
        }
    }

    /// The factored-out divisor `h`.
    pub fn h(&self) -> Monomial {
        match &self.variant {
            Type1Variant::A1 { h, .. }
            | Type1Variant::A2 { h, .. }
            | Type1Variant::B1 { h, .. } => *h,
        }
    }
}

/// Sub-case A.1 count: the plain product of the three orbit sizes.
pub fn count_pair_a1(f: &Monomial, g: &Monomial, h: &Monomial) -> Result<u128> {
    let fh = f.quotient(h)?;
    let gh = g.quotient(h)?;
    let parts = [
        lta_orbit_size(h, h)?,
        lta_orbit_size(&fh, f)?,
        lta_orbit_size(&gh, g)?,
    ];
    mul_all(&parts)
}

/// Sub-case A.2 count: free orbit on the `f` side, rank-restricted orbit on
/// the `g` side, halved when `f = g`.
pub fn count_pair_a2(f: &Monomial, g: &Monomial, h: &Monomial, mu: u32) -> Result<u128> {
    let _ = mu;
    let fh = f.quotient(h)?;
    let parts = [
        lta_orbit_size(h, h)?,
        lta_orbit_size(&fh, f)?,
        restricted_pair_size(g, h, f)?,
    ];
    let product = mul_all(&parts)?;
    if f == g {
        debug_assert!(product % 2 == 0);
        Ok(product / 2)
    } else {
        Ok(product)
    }
}

/// Sub-case B.1 count. The shipped default halves the orbit product (the
/// two summands range over the same orbit, so sums come in unordered
/// pairs); `unhalved` exposes the literal product for census comparison.
pub fn count_b1(
    f: &Monomial,
    h: &Monomial,
    set: &DecreasingSet,
    mu: u32,
    unhalved: bool,
) -> Result<u128> {
    let _ = mu;
    let fh = f.quotient(h)?;
    let parts = [
        lta_orbit_size(h, h)?,
        lta_orbit_size(&fh, f)?,
        restricted_self_size(f, h, set)?,
    ];
    let product = mul_all(&parts)?;
    if unhalved {
        Ok(product)
    } else {
        debug_assert!(product % 2 == 0);
        Ok(product / 2)
    }
}

fn mul_all(parts: &[u128]) -> Result<u128> {
    let mut acc: u128 = 1;
    for &p in parts {
        acc = acc.checked_mul(p).ok_or(Error::TooLarge {
            what: "case count exceeds 128 bits",
        })?;
    }
    Ok(acc)
}

/// Classifies an unordered pair of maximum-degree members.
///
/// Returns `None` for invalid pairs: shared degree below `r − μ`, or a
/// cofactor that admits no strictly shifted copy in the complement of `fg`.
pub fn classify_pair(
    set: &DecreasingSet,
    f: &Monomial,
    g: &Monomial,
    mu: u32,
) -> Result<Option<Type1Case>> {
    let r = set.r_max().unwrap_or(0);
    check_mu(set.m(), r, mu)?;
    for mon in [f, g] {
        if mon.degree() != r || !set.contains(mon) {
            return Err(Error::NotMaxDegreeMember { f: *mon });
        }
    }
    let gcd = f.gcd(g)?;
    let target = r - mu;
    if gcd.degree() < target {
        return Ok(None);
    }
    if gcd.degree() == target {
        // h = gcd ∈ I is forced: h divides f and the set is decreasing.
        let count = count_pair_a1(f, g, &gcd)?;
        return Ok(Some(Type1Case {
            variant: Type1Variant::A1 { f: *f, g: *g, h: gcd },
            mu,
            count,
        }));
    }
    let h = canonical_h(f, g, mu)?.expect("gcd degree checked");
    let h_star = gcd.quotient(&h)?;
    let free = f.product(g)?.complement();
    let Some(witness) = shift_exists(&h_star, free.mask()) else {
        return Ok(None);
    };
    let count = count_pair_a2(f, g, &h, mu)?;
    Ok(Some(Type1Case {
        variant: Type1Variant::A2 {
            f: *f,
            g: *g,
            h,
            h_star,
            shift_witness: witness,
        },
        mu,
        count,
    }))
}

/// Classifies a maximum-degree monomial outside the set for sub-case B.1.
///
/// All valid degree-`(r−μ)` divisors are searched; the canonical
/// (smallest-indices) one provides the count and multiplicity is flagged.
pub fn classify_b1(
    set: &DecreasingSet,
    f: &Monomial,
    mu: u32,
) -> Result<Option<Type1Case>> {
    let r = set.r_max().unwrap_or(0);
    check_mu(set.m(), r, mu)?;
    if f.degree() != r {
        return Err(Error::WrongDegree {
            expected: r,
            got: f.degree(),
        });
    }
    if set.contains(f) {
        return Err(Error::UnexpectedMember { f: *f });
    }
    let target = r - mu;
    let free = f.complement();
    let mut valid: Vec<(Monomial, Monomial)> = Vec::new();
    for picks in combinations(&f.indices(), target as usize) {
        let h = Monomial::from_indices(f.m(), &picks).expect("indices fit");
        if !set.contains(&h) {
            continue;
        }
        let fh = f.quotient(&h)?;
        if let Some(witness) = shift_exists(&fh, free.mask()) {
            valid.push((h, witness));
        }
    }
    let Some((h, witness)) = valid.first().copied() else {
        return Ok(None);
    };
    let count = count_b1(f, &h, set, mu, false)?;
    Ok(Some(Type1Case {
        variant: Type1Variant::B1 {
            f: *f,
            h,
            shift_witness: witness,
            multiple_h: valid.len() > 1,
        },
        mu,
        count,
    }))
}

/// Size-`k` subsets of a sorted slice, in lexicographic order.
fn combinations(items: &[u32], k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut choice = Vec::with_capacity(k);
    fn rec(items: &[u32], k: usize, from: usize, choice: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if choice.len() == k {
            out.push(choice.clone());
            return;
        }
        for idx in from..items.len() {
            choice.push(items[idx]);
            rec(items, k, idx + 1, choice, out);
            choice.pop();
        }
    }
    rec(items, k, 0, &mut choice, &mut out);
    out
}

/// Counting options.
#[derive(Debug, Clone, Copy, Default)]
pub struct Type1Options {
    /// Use the unhalved B.1 product instead of the shipped halved form.
    pub b1_unhalved: bool,
}

/// Total number of Type I codewords of weight `w_μ`, with the per-case
/// ledger.
///
/// Sums over unordered pairs of maximum-degree members (including `f = g`)
/// and over all maximum-degree monomials outside the set.
pub fn count_type1_total(
    set: &DecreasingSet,
    mu: u32,
    options: Type1Options,
) -> Result<(u128, Vec<Type1Case>)> {
    let Some(r) = set.r_max() else {
        return Ok((0, Vec::new()));
    };
    check_mu(set.m(), r, mu)?;
    let stratum = set.stratum(r);
    let mut cases = Vec::new();
    let mut total: u128 = 0;
    for (ia, f) in stratum.iter().enumerate() {
        for g in stratum.iter().skip(ia) {
            if let Some(case) = classify_pair(set, f, g, mu)? {
                total += case.count;
                cases.push(case);
            }
        }
    }
    let m = set.m();
    let all_indices: Vec<u32> = (0..m).collect();
    for picks in combinations(&all_indices, r as usize) {
        let f = Monomial::from_indices(m, &picks).expect("indices fit");
        if set.contains(&f) {
            continue;
        }
        if let Some(mut case) = classify_b1(set, &f, mu)? {
            if options.b1_unhalved {
                let h = case.h();
                case.count = count_b1(&f, &h, set, mu, true)?;
            }
            total += case.count;
            cases.push(case);
        }
    }
    Ok((total, cases))
}

/// Census of a classified case: the distinct weight-`w_μ` evaluation vectors
/// of the structured Minkowski sum, restricted to the code span for B.1.
///
/// This is the independent check for the closed forms: its cardinality must
/// equal the case count.
pub fn case_census(
    set: &DecreasingSet,
    case: &Type1Case,
    orbit_budget: u64,
    pair_budget: u128,
    dedup_budget: usize,
) -> Result<HashSet<EvalVector>> {
    let m = set.m();
    let r = set.r_max().expect("classified case implies nonempty set");
    let w = wmu(m, r, case.mu);
    let one = Monomial::one(m)?;
    let h = case.h();
    let (f, g) = case.pair();
    let a = orbit_ev_vectors(&OrbitSpec::full(f, h)?, orbit_budget)?;
    let b = orbit_ev_vectors(&OrbitSpec::full(g, h)?, orbit_budget)?;
    let h_evs = orbit_ev_vectors(&OrbitSpec::full(h, one)?, orbit_budget)?;
    let span_filter = matches!(case.variant, Type1Variant::B1 { .. });
    let filter = CensusFilter {
        weight: Some(w),
        span: span_filter.then_some(set),
    };
    census_distinct(
        &a,
        Some(&b),
        Some(&h_evs),
        &filter,
        pair_budget,
        dedup_budget,
    )
}
