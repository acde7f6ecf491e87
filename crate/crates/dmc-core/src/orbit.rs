//! Lower-triangular affine orbit machinery.
//!
//! The subgroup attached to a context monomial `g` frees the translation bit
//! `ε_i` for `i ∈ ind(g)` and the mixing bits `b_{i,j}` for `i ∈ ind(g)`,
//! `j < i`, `j ∉ ind(g)`; everything else is zero. Acting on a divisor
//! `f/h` of the context uses only the rows `ind(f/h)`, so the orbit size is
//! `2^{deg(f/h) + |λ_ctx(f/h)|}`. Two rank-restricted variants isolate the
//! sub-orbits that keep enough independent linear forms: one against a
//! partner monomial, one against a decreasing set. Censuses materialize
//! elements as evaluation vectors immediately; sums are word-wide XOR, the
//! common factor is AND, and deduplication keys on the vectors, which is
//! sound because evaluation is injective.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use hashbrown::HashSet;

use crate::code::DecreasingSet;
use crate::eval::{EvalVector, Polynomial};
use crate::monomial::Monomial;
use crate::{Error, Result};

/// Rank of a list of bit-mask rows over `F_2`, by elimination.
pub fn f2_rank(rows: &[u64]) -> u32 {
    let mut basis: Vec<u64> = Vec::new();
    for &row in rows {
        let mut v = row;
        for &b in &basis {
            let lead = 63 - b.leading_zeros();
            if v >> lead & 1 == 1 {
                v ^= b;
            }
        }
        if v != 0 {
            basis.push(v);
        }
    }
    basis.len() as u32
}

/// Explicit parameters of one group element restricted to the rows of an
/// acted-on monomial.
///
/// `ctx` is the subgroup's defining monomial (`f ⪯_w ctx`): it fixes which
/// columns are available, `b_{i,j}` free exactly for `j ∈ J_ctx(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineParams {
    f: Monomial,
    ctx: Monomial,
    eps: u32,
    /// Column mask per row, aligned with the ascending indices of `f`.
    rows: Vec<u32>,
}

impl AffineParams {
    /// The identity element on the rows of `f` inside the subgroup of `ctx`.
    pub fn identity(f: &Monomial, ctx: &Monomial) -> Result<Self> {
        if !f.divides(ctx)? {
            return Err(Error::NotDivisor);
        }
        Ok(AffineParams {
            f: *f,
            ctx: *ctx,
            eps: 0,
            rows: alloc::vec![0; f.degree() as usize],
        })
    }

    /// Sets the translation bit of row `i ∈ ind(f)`.
    pub fn set_eps(&mut self, i: u32, value: bool) -> Result<()> {
        if !self.f.contains(i) {
            return Err(Error::IndexOutOfRange { index: i, m: self.f.m() });
        }
        if value {
            self.eps |= 1 << i;
        } else {
            self.eps &= !(1 << i);
        }
        Ok(())
    }

    /// Sets the mixing bit `b_{i,j}`; requires `j ∈ J_ctx(i)`.
    pub fn set_b(&mut self, i: u32, j: u32, value: bool) -> Result<()> {
        if !self.f.contains(i) {
            return Err(Error::IndexOutOfRange { index: i, m: self.f.m() });
        }
        if self.ctx.j_set(i)? >> j & 1 == 0 {
            return Err(Error::IndexOutOfRange { index: j, m: self.f.m() });
        }
        let slot = self
            .f
            .indices()
            .iter()
            .position(|&k| k == i)
            .expect("i is a row");
        if value {
            self.rows[slot] |= 1 << j;
        } else {
            self.rows[slot] &= !(1 << j);
        }
        Ok(())
    }

    /// Number of free parameters: `deg(f) + Σ_{i∈ind(f)} |J_ctx(i)|`.
    pub fn param_count(&self) -> u32 {
        let mut n = self.f.degree();
        for i in self.f.indices() {
            n += self.ctx.j_count(i).expect("row index below m");
        }
        n
    }

    /// Applies the substitution to a divisor of `f`: the ANF expansion of
    /// `∏_{i ∈ ind(target)} (x_i + Σ_j b_{i,j} x_j + ε_i)`.
    pub fn apply(&self, target: &Monomial) -> Result<Polynomial> {
        if !target.divides(&self.f)? {
            return Err(Error::NotDivisor);
        }
        let m = self.f.m();
        let mut acc = Polynomial::one(m)?;
        let f_idx = self.f.indices();
        for i in target.indices() {
            let slot = f_idx.iter().position(|&k| k == i).expect("divisor row");
            let factor = linear_factor(m, i, self.rows[slot], self.eps >> i & 1 == 1)?;
            acc = acc.mul(&factor)?;
        }
        Ok(acc)
    }
}

fn linear_factor(m: u32, i: u32, cols: u32, eps: bool) -> Result<Polynomial> {
    let mut masks = alloc::vec![1u32 << i];
    let mut rest = cols;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        masks.push(1 << j);
    }
    if eps {
        masks.push(0);
    }
    Polynomial::from_term_masks(m, &masks)
}

/// Which sub-orbit to enumerate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrbitKind {
    /// The whole orbit of the subgroup of `f` acting on `f/h`.
    Full,
    /// Rank-restricted against a partner monomial `g`: the rows of
    /// `gcd(f/h, g)` must stay independent over the columns outside `fg`.
    RestrictedPair(Monomial),
    /// Rank-restricted against a decreasing set: mixing bits leading outside
    /// the set are fixed to zero and all rows of `f/h` must stay independent.
    RestrictedSelf(DecreasingSet),
}

/// An orbit specification: the subgroup of `f` acting on `f/h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSpec {
    /// Context monomial; also the acted monomial before factoring.
    pub f: Monomial,
    /// Divisor factored out; the action targets `f/h`.
    pub h: Monomial,
    /// Full or rank-restricted variant.
    pub kind: OrbitKind,
}

impl OrbitSpec {
    /// Full orbit of `f/h` under the subgroup of `f`.
    pub fn full(f: Monomial, h: Monomial) -> Result<Self> {
        if !h.divides(&f)? {
            return Err(Error::NotDivisor);
        }
        Ok(OrbitSpec {
            f,
            h,
            kind: OrbitKind::Full,
        })
    }

    /// Pair-restricted orbit.
    pub fn restricted_pair(f: Monomial, h: Monomial, g: Monomial) -> Result<Self> {
        if !h.divides(&f)? {
            return Err(Error::NotDivisor);
        }
        if f.m() != g.m() {
            return Err(Error::MismatchedVarCount {
                left: f.m(),
                right: g.m(),
            });
        }
        Ok(OrbitSpec {
            f,
            h,
            kind: OrbitKind::RestrictedPair(g),
        })
    }

    /// Set-restricted orbit.
    pub fn restricted_self(f: Monomial, h: Monomial, set: DecreasingSet) -> Result<Self> {
        if !h.divides(&f)? {
            return Err(Error::NotDivisor);
        }
        if f.m() != set.m() {
            return Err(Error::MismatchedVarCount {
                left: f.m(),
                right: set.m(),
            });
        }
        Ok(OrbitSpec {
            f,
            h,
            kind: OrbitKind::RestrictedSelf(set),
        })
    }

    /// The monomial the group acts on, `f/h`.
    pub fn acted(&self) -> Monomial {
        self.f.quotient(&self.h).expect("validated divisor")
    }

    /// Closed-form orbit cardinality.
    pub fn closed_form_size(&self) -> Result<u128> {
        match &self.kind {
            OrbitKind::Full => lta_orbit_size(&self.acted(), &self.f),
            OrbitKind::RestrictedPair(g) => restricted_pair_size(&self.f, &self.h, g),
            OrbitKind::RestrictedSelf(set) => restricted_self_size(&self.f, &self.h, set),
        }
    }

    fn plan(&self) -> Result<EnumPlan> {
        let acted = self.acted();
        let mut rows = Vec::with_capacity(acted.degree() as usize);
        match &self.kind {
            OrbitKind::Full => {
                for i in acted.indices() {
                    rows.push(RowPlan {
                        free: self.f.j_set(i)?,
                        restricted: 0,
                        has_rank: false,
                    });
                }
            }
            OrbitKind::RestrictedPair(g) => {
                let hstar = acted.gcd(g)?;
                let fg = self.f.product(g)?;
                for i in acted.indices() {
                    if hstar.contains(i) {
                        rows.push(RowPlan {
                            free: self.f.j_set(i)? & g.mask(),
                            restricted: fg.j_set(i)?,
                            has_rank: true,
                        });
                    } else {
                        rows.push(RowPlan {
                            free: self.f.j_set(i)?,
                            restricted: 0,
                            has_rank: false,
                        });
                    }
                }
            }
            OrbitKind::RestrictedSelf(set) => {
                for i in acted.indices() {
                    rows.push(RowPlan {
                        free: 0,
                        restricted: set.j_set_restricted(&self.f, i)?,
                        has_rank: true,
                    });
                }
            }
        }
        Ok(EnumPlan {
            m: self.f.m(),
            rows,
        })
    }
}

struct RowPlan {
    /// Freely iterated columns.
    free: u32,
    /// Columns subject to the joint rank condition.
    restricted: u32,
    has_rank: bool,
}

struct EnumPlan {
    m: u32,
    rows: Vec<RowPlan>,
}

impl EnumPlan {
    fn param_count(&self) -> u32 {
        let mut n = self.rows.len() as u32;
        for row in &self.rows {
            n += row.free.count_ones() + row.restricted.count_ones();
        }
        n
    }
}

fn check_budget(params: u32, budget: u64) -> Result<()> {
    if params >= 64 || 1u64 << params > budget {
        let needed = if params >= 128 {
            u128::MAX
        } else {
            1u128 << params
        };
        return Err(Error::BudgetExceeded {
            needed,
            budget: budget as u128,
        });
    }
    Ok(())
}

/// Bit positions of a mask, ascending.
fn bit_list(mask: u32) -> Vec<u32> {
    let mut v = Vec::with_capacity(mask.count_ones() as usize);
    let mut rest = mask;
    while rest != 0 {
        v.push(rest.trailing_zeros());
        rest &= rest - 1;
    }
    v
}

/// Spread the low bits of `value` onto the positions listed in `cols`.
fn spread(value: u32, cols: &[u32]) -> u32 {
    let mut out = 0;
    for (k, &j) in cols.iter().enumerate() {
        if value >> k & 1 == 1 {
            out |= 1 << j;
        }
    }
    out
}

fn reduce(mut v: u32, basis: &[u32]) -> u32 {
    for &b in basis {
        let lead = 31 - b.leading_zeros();
        if v >> lead & 1 == 1 {
            v ^= b;
        }
    }
    v
}

/// Visits every admissible parameter assignment of the plan.
///
/// The callback receives the per-row column masks (aligned with ascending
/// rows) and the translation bits packed low-to-high in row order. The full
/// orbit streams in the documented order: translation bits vary fastest,
/// then mixing bits row-major ascending.
fn for_each_assignment(
    plan: &EnumPlan,
    budget: u64,
    visit: &mut impl FnMut(&[u32], u32),
) -> Result<()> {
    check_budget(plan.param_count(), budget)?;
    let deg = plan.rows.len();
    let restricted_rows = plan.rows.iter().filter(|r| r.has_rank).count();
    if restricted_rows == 0 {
        let col_lists: Vec<Vec<u32>> = plan.rows.iter().map(|r| bit_list(r.free)).collect();
        let b_bits: u32 = col_lists.iter().map(|c| c.len() as u32).sum();
        let mut cols = alloc::vec![0u32; deg];
        for b_val in 0..1u64 << b_bits {
            let mut rest = b_val;
            for (slot, list) in col_lists.iter().enumerate() {
                let take = list.len();
                cols[slot] = spread((rest & ((1 << take) - 1)) as u32, list);
                rest >>= take;
            }
            for eps in 0..1u32 << deg {
                visit(&cols, eps);
            }
        }
        return Ok(());
    }
    let mut cols = alloc::vec![0u32; deg];
    let mut basis: Vec<u32> = Vec::with_capacity(restricted_rows);
    recurse(plan, 0, &mut cols, &mut basis, visit);
    Ok(())
}

fn recurse(
    plan: &EnumPlan,
    slot: usize,
    cols: &mut [u32],
    basis: &mut Vec<u32>,
    visit: &mut impl FnMut(&[u32], u32),
) {
    if slot == plan.rows.len() {
        let deg = plan.rows.len() as u32;
        for eps in 0..1u32 << deg {
            visit(cols, eps);
        }
        return;
    }
    let row = &plan.rows[slot];
    let r_list = bit_list(row.restricted);
    let f_list = bit_list(row.free);
    for r_val in 0..1u32 << r_list.len() {
        let r_mask = spread(r_val, &r_list);
        let mut pushed = false;
        if row.has_rank {
            let reduced = reduce(r_mask, basis);
            if reduced == 0 {
                continue;
            }
            basis.push(reduced);
            pushed = true;
        }
        for f_val in 0..1u32 << f_list.len() {
            cols[slot] = r_mask | spread(f_val, &f_list);
            recurse(plan, slot + 1, cols, basis, visit);
        }
        if pushed {
            basis.pop();
        }
    }
}

/// `|LTA(m,2)_ctx · acted| = 2^{deg(acted) + |λ_ctx(acted)|}` for a divisor
/// `acted ⪯_w ctx`.
pub fn lta_orbit_size(acted: &Monomial, ctx: &Monomial) -> Result<u128> {
    let lambda = ctx.lambda_restrict(acted)?;
    let exp = acted.degree() + lambda.total;
    shl1(exp)
}

fn shl1(exp: u32) -> Result<u128> {
    if exp >= 128 {
        return Err(Error::TooLarge {
            what: "orbit size exceeds 128 bits",
        });
    }
    Ok(1u128 << exp)
}

/// `∏_{j=1}^{l} (2^{c_j} − 2^{j-1})`, evaluated as zero as soon as a factor
/// vanishes (no codewords), matching rank-filtered enumeration.
pub(crate) fn staircase_product(col_counts: &[u32]) -> Result<u128> {
    let mut prod: u128 = 1;
    for (k, &c) in col_counts.iter().enumerate() {
        let j_minus_1 = k as u32;
        if c <= j_minus_1 {
            return Ok(0);
        }
        let factor = shl1(c)? - shl1(j_minus_1)?;
        prod = prod
            .checked_mul(factor)
            .ok_or(Error::TooLarge {
                what: "staircase product exceeds 128 bits",
            })?;
    }
    Ok(prod)
}

/// Closed form for the pair-restricted orbit of `f/h` against `g`:
/// `2^{deg(f/h)+|λ_f(f/h)|−|λ_{fg}(h*)|} ∏ (2^{|J_{fg}(i_j)|} − 2^{j-1})`
/// with `h* = gcd(f/h, g)` and `i_1 < … < i_l` its indices.
pub fn restricted_pair_size(f: &Monomial, h: &Monomial, g: &Monomial) -> Result<u128> {
    let acted = f.quotient(h)?;
    if f.m() != g.m() {
        return Err(Error::MismatchedVarCount {
            left: f.m(),
            right: g.m(),
        });
    }
    let hstar = acted.gcd(g)?;
    if hstar.degree() == 0 {
        return lta_orbit_size(&acted, f);
    }
    let fg = f.product(g)?;
    let lam_acted = f.lambda_restrict(&acted)?.total;
    let lam_hstar_fg = fg.lambda_restrict(&hstar)?.total;
    let base = acted.degree() + lam_acted - lam_hstar_fg;
    let cols: Vec<u32> = hstar
        .indices()
        .iter()
        .map(|&i| fg.j_count(i).expect("index below m"))
        .collect();
    let prod = staircase_product(&cols)?;
    prod.checked_mul(shl1(base)?).ok_or(Error::TooLarge {
        what: "restricted orbit size exceeds 128 bits",
    })
}

/// Closed form for the set-restricted orbit of `f/h`:
/// `2^{deg(f/h)} ∏ (2^{|J_f^I(i_j)|} − 2^{j-1})`.
pub fn restricted_self_size(
    f: &Monomial,
    h: &Monomial,
    set: &DecreasingSet,
) -> Result<u128> {
    let acted = f.quotient(h)?;
    let cols: Vec<u32> = acted
        .indices()
        .iter()
        .map(|&i| set.j_set_restricted(f, i).map(|s| s.count_ones()))
        .collect::<Result<_>>()?;
    let prod = staircase_product(&cols)?;
    prod.checked_mul(shl1(acted.degree())?).ok_or(Error::TooLarge {
        what: "restricted orbit size exceeds 128 bits",
    })
}

/// Enumerates the orbit as ANF polynomials.
///
/// The stream is pairwise distinct (the subgroup acts without stabilizers)
/// and its length equals the closed-form size; budget is compared against
/// the parameter-space size before any work.
pub fn enumerate_orbit(spec: &OrbitSpec, budget: u64) -> Result<Vec<Polynomial>> {
    let plan = spec.plan()?;
    let acted = spec.acted();
    let idx = acted.indices();
    let m = plan.m;
    let mut out = Vec::new();
    for_each_assignment(&plan, budget, &mut |cols, eps| {
        let mut p = Polynomial::one(m).expect("valid m");
        for (slot, &i) in idx.iter().enumerate() {
            let factor =
                linear_factor(m, i, cols[slot], eps >> slot & 1 == 1).expect("valid masks");
            p = p.mul(&factor).expect("same m");
        }
        out.push(p);
    })?;
    Ok(out)
}

/// Enumerates the orbit as evaluation vectors.
pub fn orbit_ev_vectors(spec: &OrbitSpec, budget: u64) -> Result<Vec<EvalVector>> {
    let plan = spec.plan()?;
    let acted = spec.acted();
    let idx = acted.indices();
    let m = plan.m;
    let vars: Vec<EvalVector> = (0..m)
        .map(|t| EvalVector::var(m, t))
        .collect::<Result<_>>()?;
    let ones = EvalVector::ones(m)?;
    let mut out = Vec::new();
    for_each_assignment(&plan, budget, &mut |cols, eps| {
        out.push(element_ev(&vars, &ones, &idx, cols, eps));
    })?;
    Ok(out)
}

fn element_ev(
    vars: &[EvalVector],
    ones: &EvalVector,
    idx: &[u32],
    cols: &[u32],
    eps: u32,
) -> EvalVector {
    let mut acc = ones.clone();
    for (slot, &i) in idx.iter().enumerate() {
        let mut form = vars[i as usize].clone();
        let mut rest = cols[slot];
        while rest != 0 {
            let j = rest.trailing_zeros();
            rest &= rest - 1;
            form.xor_assign(&vars[j as usize]);
        }
        if eps >> slot & 1 == 1 {
            form.xor_assign(ones);
        }
        acc.and_assign(&form);
    }
    acc
}

/// Optional filters applied to census candidates before deduplication.
#[derive(Default)]
pub struct CensusFilter<'a> {
    /// Keep only vectors of exactly this weight.
    pub weight: Option<u64>,
    /// Keep only vectors lying in the span of this set.
    pub span: Option<&'a DecreasingSet>,
}

/// Distinct sums `H · (P + Q)` over materialized orbit element lists, with
/// optional filters. `b = None` censuses `a` alone; `h = None` omits the
/// common factor.
pub fn census_distinct(
    a: &[EvalVector],
    b: Option<&[EvalVector]>,
    h: Option<&[EvalVector]>,
    filter: &CensusFilter<'_>,
    pair_budget: u128,
    dedup_budget: usize,
) -> Result<HashSet<EvalVector>> {
    let ops = a.len() as u128
        * b.map_or(1, |v| v.len() as u128)
        * h.map_or(1, |v| v.len() as u128);
    if ops > pair_budget {
        return Err(Error::BudgetExceeded {
            needed: ops,
            budget: pair_budget,
        });
    }
    let mut seen: HashSet<EvalVector> = HashSet::new();
    let b_slice: &[Option<&EvalVector>] = &[None];
    let b_iter: Vec<Option<&EvalVector>> = match b {
        Some(list) => list.iter().map(Some).collect(),
        None => b_slice.to_vec(),
    };
    let h_iter: Vec<Option<&EvalVector>> = match h {
        Some(list) => list.iter().map(Some).collect(),
        None => alloc::vec![None],
    };
    for p in a {
        for q in &b_iter {
            let mut sum = p.clone();
            if let Some(q) = q {
                sum.xor_assign(q);
            }
            for hv in &h_iter {
                let mut v = sum.clone();
                if let Some(hv) = hv {
                    v.and_assign(hv);
                }
                if let Some(w) = filter.weight {
                    if v.weight() != w {
                        continue;
                    }
                }
                if let Some(span) = filter.span {
                    if !v.in_span(span) {
                        continue;
                    }
                }
                if seen.contains(&v) {
                    continue;
                }
                if seen.len() >= dedup_budget {
                    return Err(Error::BudgetExceeded {
                        needed: seen.len() as u128 + 1,
                        budget: dedup_budget as u128,
                    });
                }
                seen.insert(v);
            }
        }
    }
    Ok(seen)
}

/// Weight census of a Minkowski sum of orbits: for each weight, the number
/// of distinct polynomials `H · (P + Q)`.
pub fn minkowski_weight_census(
    a: &OrbitSpec,
    b: Option<&OrbitSpec>,
    h_orbit: Option<&OrbitSpec>,
    orbit_budget: u64,
    pair_budget: u128,
    dedup_budget: usize,
) -> Result<BTreeMap<u64, u128>> {
    let a_evs = orbit_ev_vectors(a, orbit_budget)?;
    let b_evs = match b {
        Some(spec) => Some(orbit_ev_vectors(spec, orbit_budget)?),
        None => None,
    };
    let h_evs = match h_orbit {
        Some(spec) => Some(orbit_ev_vectors(spec, orbit_budget)?),
        None => None,
    };
    let set = census_distinct(
        &a_evs,
        b_evs.as_deref(),
        h_evs.as_deref(),
        &CensusFilter::default(),
        pair_budget,
        dedup_budget,
    )?;
    let mut hist: BTreeMap<u64, u128> = BTreeMap::new();
    for v in &set {
        *hist.entry(v.weight()).or_insert(0) += 1;
    }
    Ok(hist)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use alloc::collections::BTreeSet;

    fn mono(m: u32, s: &str) -> Monomial {
        Monomial::parse(s, m).unwrap()
    }

    const BUDGET: u64 = 1 << 26;

    #[test]
    fn apply_identity_and_translations() {
        let f = mono(6, "x0x1");
        let id = AffineParams::identity(&f, &f).unwrap();
        assert_eq!(id.apply(&f).unwrap(), Polynomial::monomial(&f));

        // all eps set: (x0+1)(x1+1) = x0x1 + x0 + x1 + 1
        let mut t = AffineParams::identity(&f, &f).unwrap();
        t.set_eps(0, true).unwrap();
        t.set_eps(1, true).unwrap();
        let p = t.apply(&f).unwrap();
        let expect =
            Polynomial::from_term_masks(6, &[0b11, 0b01, 0b10, 0b00]).unwrap();
        assert_eq!(p, expect);
    }

    #[test]
    fn apply_reproduces_refactored_product() {
        // x1x2x3 · (x1+x0)x4x5 = (x0+1)x1x2x3x4x5 + x0x1x2x3x4x5-free part:
        // multiply the orbit element (x1+x0)x4x5 of x1x4x5 by x1x2x3 and
        // compare weights with the refactored form (x0+1)·x1x2x3x4x5.
        let m = 6;
        let g = mono(m, "x1x4x5");
        let mut par = AffineParams::identity(&g, &g).unwrap();
        par.set_b(1, 0, true).unwrap();
        let moved = par.apply(&g).unwrap();
        let prod = moved
            .mul(&Polynomial::monomial(&mono(m, "x1x2x3")))
            .unwrap();
        let lin = Polynomial::from_term_masks(m, &[0b000001, 0]).unwrap();
        let refactored = lin
            .mul(&Polynomial::monomial(&mono(m, "x1x2x3x4x5")))
            .unwrap();
        assert_eq!(prod, refactored);
        assert_eq!(prod.weight().unwrap(), 1);
    }

    #[test]
    fn full_orbit_sizes_and_weights() {
        // |orbit(x1x3x5)| = 2^9 at m = 7; every element has weight 2^{7-3}.
        let f = mono(7, "x1x3x5");
        let spec = OrbitSpec::full(f, mono(7, "1")).unwrap();
        assert_eq!(spec.closed_form_size().unwrap(), 1 << 9);
        let elems = enumerate_orbit(&spec, BUDGET).unwrap();
        assert_eq!(elems.len(), 1 << 9);
        let distinct: BTreeSet<&Polynomial> = elems.iter().collect();
        assert_eq!(distinct.len(), elems.len());
        let evs = orbit_ev_vectors(&spec, BUDGET).unwrap();
        assert!(evs.iter().all(|v| v.weight() == 16));

        let g = mono(7, "x3x5x6");
        let gspec = OrbitSpec::full(g, mono(7, "1")).unwrap();
        assert_eq!(gspec.closed_form_size().unwrap(), 1 << 14);
        assert_eq!(orbit_ev_vectors(&gspec, BUDGET).unwrap().len(), 1 << 14);

        let x0 = OrbitSpec::full(mono(4, "x0"), mono(4, "1")).unwrap();
        let elems = enumerate_orbit(&x0, BUDGET).unwrap();
        assert_eq!(elems.len(), 2);
    }

    #[test]
    fn orbit_size_formula_vs_enumeration_small() {
        // Eq-style size check against distinct enumerated vectors for every
        // monomial with few parameters, m ≤ 6 here (m = 7 in the suite).
        for m in 1..=6u32 {
            for mask in 0..1u32 << m {
                let f = Monomial::new(m, mask).unwrap();
                let spec = OrbitSpec::full(f, mono(m, "1")).unwrap();
                if f.degree() + f.lambda_total() > 16 {
                    continue;
                }
                let size = spec.closed_form_size().unwrap();
                let evs = orbit_ev_vectors(&spec, BUDGET).unwrap();
                let distinct: BTreeSet<&EvalVector> = evs.iter().collect();
                assert_eq!(distinct.len() as u128, size, "m={m} f={f}");
            }
        }
    }

    #[test]
    fn factored_orbit_uses_context_columns() {
        // LTA_g · (g/h) for g = x0x4x5x6, h = x0: columns exclude all of g.
        let g = mono(8, "x0x4x5x6");
        let spec = OrbitSpec::full(g, mono(8, "x0")).unwrap();
        assert_eq!(spec.closed_form_size().unwrap(), 1 << 12);
        assert_eq!(orbit_ev_vectors(&spec, BUDGET).unwrap().len(), 1 << 12);
    }

    #[test]
    fn f2_rank_basics() {
        assert_eq!(f2_rank(&[0b001, 0b010, 0b100]), 3);
        assert_eq!(f2_rank(&[0b011, 0b011]), 1);
        assert_eq!(f2_rank(&[]), 0);
    }

    #[test]
    fn f2_rank_matches_minor_expansion() {
        let mut state = 0x1234_5678_9abc_def0u64;
        for _ in 0..60 {
            let rows: Vec<u64> = (0..5)
                .map(|_| oracle::splitmix64(&mut state) & 0xff)
                .collect();
            assert_eq!(f2_rank(&rows), oracle::rank_by_minors(&rows, 8));
        }
    }

    #[test]
    fn restricted_pair_published_cardinalities() {
        let m = 7;
        let one = mono(m, "1");
        let f = mono(m, "x1x3x5");
        let g = mono(m, "x3x5x6");

        let self_pair = OrbitSpec::restricted_pair(f, one, f).unwrap();
        assert_eq!(self_pair.closed_form_size().unwrap(), 1 << 6);
        assert_eq!(enumerate_orbit(&self_pair, BUDGET).unwrap().len(), 1 << 6);

        let fg_pair = OrbitSpec::restricted_pair(f, one, g).unwrap();
        assert_eq!(fg_pair.closed_form_size().unwrap(), 288);
        assert_eq!(enumerate_orbit(&fg_pair, BUDGET).unwrap().len(), 288);

        // Swapped side: the formula and the enumeration agree at 2^10 * 9;
        // the printed factorization 2^{3+6}(2^2-1)(2^3-2) equals the same.
        let gf_pair = OrbitSpec::restricted_pair(g, one, f).unwrap();
        let size = gf_pair.closed_form_size().unwrap();
        assert_eq!(size, (1u128 << 9) * 3 * 6);
        assert_eq!(size, 9216);
        assert_eq!(enumerate_orbit(&gf_pair, BUDGET).unwrap().len(), 9216);
    }

    #[test]
    fn restricted_pair_coprime_degenerates_to_full() {
        let m = 6;
        let f = mono(m, "x1x2x3");
        let g = mono(m, "x4x5");
        let spec = OrbitSpec::restricted_pair(f, mono(m, "1"), g).unwrap();
        let full = OrbitSpec::full(f, mono(m, "1")).unwrap();
        assert_eq!(
            spec.closed_form_size().unwrap(),
            full.closed_form_size().unwrap()
        );
        assert_eq!(
            orbit_ev_vectors(&spec, BUDGET).unwrap(),
            orbit_ev_vectors(&full, BUDGET).unwrap()
        );
    }

    #[test]
    fn restricted_sizes_match_enumeration_randomized() {
        let mut state = 0x0dad_5eed_f00d_1234u64;
        for _ in 0..120 {
            let m = 4 + (oracle::splitmix64(&mut state) % 4) as u32; // 4..=7
            let full_mask = (1u32 << m) - 1;
            let f = Monomial::new(m, {
                let v = (oracle::splitmix64(&mut state) as u32) & full_mask;
                if v == 0 {
                    1
                } else {
                    v
                }
            })
            .unwrap();
            let g = Monomial::new(m, (oracle::splitmix64(&mut state) as u32) & full_mask)
                .unwrap();
            // random divisor of f as h
            let h = Monomial::new(m, f.mask() & (oracle::splitmix64(&mut state) as u32))
                .unwrap();
            let spec = OrbitSpec::restricted_pair(f, h, g).unwrap();
            let size = spec.closed_form_size().unwrap();
            if size > 1 << 16 {
                continue;
            }
            let elems = orbit_ev_vectors(&spec, BUDGET).unwrap();
            let distinct: BTreeSet<&EvalVector> = elems.iter().collect();
            assert_eq!(distinct.len(), elems.len(), "m={m} f={f} g={g}");
            assert_eq!(elems.len() as u128, size, "m={m} f={f} g={g} h={h}");
        }
    }

    #[test]
    fn restricted_self_example_cases() {
        // m = 6, f = x2x4x5 with the three published exclusion patterns.
        let m = 6;
        let f = mono(m, "x2x4x5");
        let one = mono(m, "1");
        let ia =
            DecreasingSet::closure(m, &[mono(m, "x1x4x5"), mono(m, "x2x3x4")]).unwrap();
        let ib = DecreasingSet::closure(
            m,
            &[mono(m, "x0x4x5"), mono(m, "x1x2x5"), mono(m, "x2x3x4")],
        )
        .unwrap();
        let ic =
            DecreasingSet::closure(m, &[mono(m, "x0x4x5"), mono(m, "x1x2x5")]).unwrap();
        for (set, expect) in [(ia, 3 << 6), (ib, 1 << 6), (ic, 0u128)] {
            let spec = OrbitSpec::restricted_self(f, one, set).unwrap();
            assert_eq!(spec.closed_form_size().unwrap(), expect);
            assert_eq!(
                enumerate_orbit(&spec, BUDGET).unwrap().len() as u128,
                expect
            );
        }
    }

    #[test]
    fn restricted_self_member_equals_pair_with_itself() {
        // When f ∈ I the set restriction is vacuous per row, so the size
        // equals the self-pair restriction.
        let m = 6;
        let rm = DecreasingSet::reed_muller(3, m).unwrap();
        for f in rm.stratum(3) {
            let one = mono(m, "1");
            let a = OrbitSpec::restricted_self(f, one, rm.clone()).unwrap();
            let b = OrbitSpec::restricted_pair(f, one, f).unwrap();
            assert_eq!(
                a.closed_form_size().unwrap(),
                b.closed_form_size().unwrap()
            );
        }
    }

    #[test]
    fn census_of_tiny_orbit_pair() {
        // A = B = orbit of x0 at m = 2: distinct sums are 0 and ev(1).
        let spec = OrbitSpec::full(mono(2, "x0"), mono(2, "1")).unwrap();
        let hist =
            minkowski_weight_census(&spec, Some(&spec), None, BUDGET, 1 << 20, 1 << 20)
                .unwrap();
        assert_eq!(hist, BTreeMap::from([(0, 1), (4, 1)]));
    }

    #[test]
    fn census_single_orbit() {
        let spec = OrbitSpec::full(mono(5, "x1x2"), mono(5, "1")).unwrap();
        let hist = minkowski_weight_census(&spec, None, None, BUDGET, 1 << 20, 1 << 20)
            .unwrap();
        assert_eq!(hist, BTreeMap::from([(8, spec.closed_form_size().unwrap())]));
    }

    #[test]
    fn census_weights_cover_ladder() {
        // f = x1x2x3, g = x1x4x5 at m = 6: the sum contains weights 12, 14, 16.
        let m = 6;
        let a = OrbitSpec::full(mono(m, "x1x2x3"), mono(m, "1")).unwrap();
        let b = OrbitSpec::full(mono(m, "x1x4x5"), mono(m, "1")).unwrap();
        let hist =
            minkowski_weight_census(&a, Some(&b), None, BUDGET, 1 << 26, 1 << 22).unwrap();
        assert!(hist[&12] > 0);
        assert!(hist[&14] > 0);
        assert!(hist[&16] > 0);
    }

    #[test]
    fn no_collision_condition_gives_product_cardinality() {
        // deg(gcd) < r-2 forces |A + B| = |A| * |B|.
        let m = 6;
        let a = OrbitSpec::full(mono(m, "x0x1x2"), mono(m, "1")).unwrap();
        let b = OrbitSpec::full(mono(m, "x3x4x5"), mono(m, "1")).unwrap();
        let hist =
            minkowski_weight_census(&a, Some(&b), None, BUDGET, 1 << 26, 1 << 22).unwrap();
        let total: u128 = hist.values().sum();
        assert_eq!(
            total,
            a.closed_form_size().unwrap() * b.closed_form_size().unwrap()
        );
    }

    #[test]
    fn budget_errors() {
        let f = mono(10, "x5x6x7x8x9");
        let spec = OrbitSpec::full(f, mono(10, "1")).unwrap();
        assert!(matches!(
            enumerate_orbit(&spec, 1 << 10),
            Err(Error::BudgetExceeded { .. })
        ));
        let tiny = OrbitSpec::full(mono(4, "x1x2"), mono(4, "1")).unwrap();
        assert!(matches!(
            minkowski_weight_census(&tiny, Some(&tiny), None, BUDGET, 10, 1 << 20),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
