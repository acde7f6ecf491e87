//! Assembly of the exact weight profile below twice the minimum distance.
//!
//! The ladder of achievable weights below `2 w_min` is
//! `w_μ = 2^{m+1-r} − 2^{m+1-r-μ}`. The minimum weight (`μ = 1`) and all
//! Type I counts (`μ ≥ 3`) come from closed forms; Type II counts are
//! produced by a census over the structured sums of `μ` orbits sharing a
//! degree-`(r−2)` factor, with global deduplication on evaluation vectors.
//! When a census would blow its budget the profile reports an explicit
//! `Unavailable` marker instead of a guess.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use hashbrown::{HashMap, HashSet};

use crate::code::DecreasingSet;
use crate::eval::{full_weight_distribution, wmu, EvalVector};
use crate::monomial::Monomial;
use crate::orbit::{lta_orbit_size, orbit_ev_vectors, OrbitSpec};
use crate::type1::{self, mu_range, Type1Options};
use crate::{Error, Result};

/// Work limits for censuses and full enumeration.
#[derive(Debug, Clone, Copy)]
pub struct Budgets {
    /// Maximum number of sum/product vector operations per census.
    pub pair_ops: u128,
    /// Maximum number of distinct vectors stored by a census.
    pub dedup: usize,
    /// Maximum dimension for the Gray-code full enumeration.
    pub cap_k: u32,
    /// Maximum parameter-space size per orbit enumeration.
    pub orbit: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            pair_ops: 1 << 34,
            dedup: 1 << 27,
            cap_k: 28,
            orbit: 1 << 26,
        }
    }
}

/// Exact count of minimum-weight codewords:
/// `Σ_{f ∈ I_r} 2^{r + |λ_f|}`.
pub fn count_min_weight(set: &DecreasingSet) -> u128 {
    let Some(r) = set.r_max() else {
        return 0;
    };
    set.stratum(r)
        .iter()
        .map(|f| lta_orbit_size(f, f).expect("supported m"))
        .fold(0u128, |acc, n| {
            acc.checked_add(n).expect("count exceeds 128 bits")
        })
}

/// Independent census of minimum-weight codewords: the orbits of all
/// maximum-degree members, deduplicated as evaluation vectors.
pub fn min_weight_census(set: &DecreasingSet, budgets: &Budgets) -> Result<u128> {
    let Some(r) = set.r_max() else {
        return Ok(0);
    };
    let one = Monomial::one(set.m())?;
    let mut seen: HashSet<EvalVector> = HashSet::new();
    for f in set.stratum(r) {
        let spec = OrbitSpec::full(f, one)?;
        for v in orbit_ev_vectors(&spec, budgets.orbit)? {
            if seen.len() >= budgets.dedup && !seen.contains(&v) {
                return Err(Error::BudgetExceeded {
                    needed: seen.len() as u128 + 1,
                    budget: budgets.dedup as u128,
                });
            }
            seen.insert(v);
        }
    }
    Ok(seen.len() as u128)
}

/// A Type II count: exact or explicitly unavailable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Type2Count {
    Exact(u128),
    Unavailable(String),
}

impl Type2Count {
    /// The exact value, if available.
    pub fn value(&self) -> Option<u128> {
        match self {
            Type2Count::Exact(v) => Some(*v),
            Type2Count::Unavailable(_) => None,
        }
    }
}

/// Census of Type II codewords of weight `w_μ`.
///
/// Enumerates every `μ`-subset of maximum-degree members whose pairwise gcd
/// is one common degree-`(r−2)` monomial `h`, materializes the structured
/// sums `H · (P_1 + … + P_μ)`, keeps the vectors of weight exactly `w_μ`
/// and counts distinct vectors across all families. `μ = 1` degenerates to
/// the minimum-weight formula; `2μ > m − r + 2` reports zero.
pub fn count_type2_census(set: &DecreasingSet, mu: u32, budgets: &Budgets) -> Type2Count {
    let Some(r) = set.r_max() else {
        return Type2Count::Exact(0);
    };
    let m = set.m();
    if mu == 0 {
        return Type2Count::Exact(0);
    }
    if mu == 1 {
        return Type2Count::Exact(count_min_weight(set));
    }
    if 2 * mu > m - r + 2 || r < 2 {
        return Type2Count::Exact(0);
    }
    match type2_census_inner(set, mu, budgets) {
        Ok(count) => Type2Count::Exact(count),
        Err(err) => Type2Count::Unavailable(format!("{err}")),
    }
}

fn type2_census_inner(set: &DecreasingSet, mu: u32, budgets: &Budgets) -> Result<u128> {
    let families = type2_family_list(set, mu)?;
    let seen = type2_census_vectors(set, mu, &families, budgets)?;
    Ok(seen.len() as u128)
}

/// The `(h, {f_1, …, f_μ})` families feeding the Type II census: `μ`
/// distinct maximum-degree members with every pairwise gcd equal to the
/// same degree-`(r−2)` monomial `h`. Empty when the weight admits no
/// Type II normal form.
pub fn type2_family_list(
    set: &DecreasingSet,
    mu: u32,
) -> Result<Vec<(Monomial, Vec<Monomial>)>> {
    let Some(r) = set.r_max() else {
        return Ok(Vec::new());
    };
    if mu < 2 || r < 2 || 2 * mu > set.m() - r + 2 {
        return Ok(Vec::new());
    }
    type2_families(set, mu)
}

/// Censuses a subset of families: the distinct weight-`w_μ` vectors of
/// their structured sums. Workers may partition the family list and merge
/// by set union; the merged result is independent of the partitioning.
pub fn type2_census_vectors(
    set: &DecreasingSet,
    mu: u32,
    families: &[(Monomial, Vec<Monomial>)],
    budgets: &Budgets,
) -> Result<HashSet<EvalVector>> {
    let m = set.m();
    let r = set.r_max().expect("families imply a nonempty set");
    let w = wmu(m, r, mu);
    let one = Monomial::one(m)?;

    // Orbit sizes are known in closed form; price the whole census first.
    let mut ops: u128 = 0;
    for (h, members) in families {
        let h_size = lta_orbit_size(h, h)?;
        let mut fam: u128 = h_size;
        for f in members {
            fam = fam.saturating_mul(lta_orbit_size(&f.quotient(h)?, f)?);
        }
        ops = ops.saturating_add(fam);
    }
    if ops > budgets.pair_ops {
        return Err(Error::BudgetExceeded {
            needed: ops,
            budget: budgets.pair_ops,
        });
    }

    let mut orbit_cache: HashMap<(u32, u32), Vec<EvalVector>> = HashMap::new();
    let mut seen: HashSet<EvalVector> = HashSet::new();
    for (h, members) in families {
        let h_evs = orbit_ev_vectors(&OrbitSpec::full(*h, one)?, budgets.orbit)?;
        for f in members {
            let key = (f.mask(), h.mask());
            if !orbit_cache.contains_key(&key) {
                let evs = orbit_ev_vectors(&OrbitSpec::full(*f, *h)?, budgets.orbit)?;
                orbit_cache.insert(key, evs);
            }
        }
        let lists: Vec<&[EvalVector]> = members
            .iter()
            .map(|f| orbit_cache[&(f.mask(), h.mask())].as_slice())
            .collect();
        let mut partial = EvalVector::zeros(m)?;
        sum_family(&lists, &h_evs, &mut partial, 0, w, budgets.dedup, &mut seen)?;
    }
    Ok(seen)
}

fn sum_family(
    lists: &[&[EvalVector]],
    h_evs: &[EvalVector],
    partial: &mut EvalVector,
    depth: usize,
    w: u64,
    dedup_budget: usize,
    seen: &mut HashSet<EvalVector>,
) -> Result<()> {
    if depth == lists.len() {
        for hv in h_evs {
            let mut v = partial.clone();
            v.and_assign(hv);
            if v.weight() != w {
                continue;
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
        return Ok(());
    }
    for p in lists[depth] {
        partial.xor_assign(p);
        sum_family(lists, h_evs, partial, depth + 1, w, dedup_budget, seen)?;
        partial.xor_assign(p);
    }
    Ok(())
}

/// All `(h, {f_1, …, f_μ})` families: `μ` distinct maximum-degree members
/// with every pairwise gcd equal to the same degree-`(r−2)` monomial `h`.
fn type2_families(
    set: &DecreasingSet,
    mu: u32,
) -> Result<Vec<(Monomial, Vec<Monomial>)>> {
    let r = set.r_max().expect("nonempty");
    let tops = set.stratum(r);
    let mut families = Vec::new();
    for h in set.stratum(r - 2) {
        let sharing: Vec<Monomial> = tops
            .iter()
            .filter(|f| h.divides(f).expect("same m"))
            .copied()
            .collect();
        let mut chosen = Vec::with_capacity(mu as usize);
        collect_families(&sharing, &h, mu as usize, 0, &mut chosen, &mut families)?;
    }
    Ok(families)
}

fn collect_families(
    sharing: &[Monomial],
    h: &Monomial,
    mu: usize,
    from: usize,
    chosen: &mut Vec<Monomial>,
    out: &mut Vec<(Monomial, Vec<Monomial>)>,
) -> Result<()> {
    if chosen.len() == mu {
        out.push((*h, chosen.clone()));
        return Ok(());
    }
    for idx in from..sharing.len() {
        let cand = sharing[idx];
        let mut ok = true;
        for prev in chosen.iter() {
            if prev.gcd(&cand)? != *h {
                ok = false;
                break;
            }
        }
        if ok {
            chosen.push(cand);
            collect_families(sharing, h, mu, idx + 1, chosen, out)?;
            chosen.pop();
        }
    }
    Ok(())
}

/// How a profile entry's Type II count was produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Type2Entry {
    /// `μ = 1`: the minimum-weight closed form.
    Formula(u128),
    /// Census value.
    Census(u128),
    /// Structurally zero: the weight admits no Type II normal form.
    Forbidden,
    /// Census infeasible under the current budgets.
    Unavailable(String),
}

impl Type2Entry {
    /// The exact value, if known.
    pub fn value(&self) -> Option<u128> {
        match self {
            Type2Entry::Formula(v) | Type2Entry::Census(v) => Some(*v),
            Type2Entry::Forbidden => Some(0),
            Type2Entry::Unavailable(_) => None,
        }
    }

    /// Method tag for reports.
    pub fn method(&self) -> &'static str {
        match self {
            Type2Entry::Formula(_) => "formula",
            Type2Entry::Census(_) => "census",
            Type2Entry::Forbidden => "none",
            Type2Entry::Unavailable(_) => "census",
        }
    }
}

/// One ladder weight of the profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileEntry {
    pub weight: u64,
    pub mu: u32,
    /// Type I closed-form count; zero outside `3 ≤ μ ≤ min(r, m−r)`.
    pub type1: u128,
    /// Whether `μ` lies in the Type I range (method tag "formula" vs "none").
    pub type1_in_range: bool,
    pub type2: Type2Entry,
}

impl ProfileEntry {
    /// Combined count at this weight, if both components are known.
    pub fn total(&self) -> Option<u128> {
        self.type2.value().map(|t2| self.type1 + t2)
    }
}

/// The exact weight profile below `2 w_min`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightProfile {
    pub m: u32,
    pub r: u32,
    pub k: usize,
    pub w_min: u64,
    pub entries: Vec<ProfileEntry>,
}

impl WeightProfile {
    /// The entry at a given weight, if it is on the ladder.
    pub fn at_weight(&self, w: u64) -> Option<&ProfileEntry> {
        self.entries.iter().find(|e| e.weight == w)
    }
}

/// Profile construction options.
#[derive(Debug, Clone)]
pub struct ProfileOptions {
    pub budgets: Budgets,
    /// Use the unhalved B.1 product (census comparison toggle).
    pub b1_unhalved: bool,
    /// Cap on the largest `μ` reported.
    pub mu_max: Option<u32>,
}

impl Default for ProfileOptions {
    fn default() -> Self {
        ProfileOptions {
            budgets: Budgets::default(),
            b1_unhalved: false,
            mu_max: None,
        }
    }
}

/// Builds the profile: minimum weight by formula, Type I by closed form for
/// every `μ` in range, Type II by census where feasible.
pub fn build_profile(set: &DecreasingSet, options: &ProfileOptions) -> Result<WeightProfile> {
    build_profile_with(set, options, count_type2_census)
}

/// `build_profile` with a pluggable Type II census, so callers can
/// partition census work across workers. The census function is consulted
/// only for `μ ≥ 2` ladder points that admit Type II codewords.
pub fn build_profile_with(
    set: &DecreasingSet,
    options: &ProfileOptions,
    mut census: impl FnMut(&DecreasingSet, u32, &Budgets) -> Type2Count,
) -> Result<WeightProfile> {
    let m = set.m();
    let Some(r) = set.r_max() else {
        return Ok(WeightProfile {
            m,
            r: 0,
            k: 0,
            w_min: 0,
            entries: Vec::new(),
        });
    };
    let t1 = mu_range(m, r);
    // The second normal form needs a degree-(r-2) factor, so for r < 2 the
    // ladder stops at the minimum weight.
    let t2_hi = if r >= 2 { (m - r + 2) / 2 } else { 1 };
    let mut hi = t1.map_or(0, |(_, hi)| hi).max(t2_hi).max(1);
    if let Some(cap) = options.mu_max {
        hi = hi.min(cap.max(1));
    }
    let t1_opts = Type1Options {
        b1_unhalved: options.b1_unhalved,
    };
    let mut entries = Vec::new();
    for mu in 1..=hi {
        let weight = wmu(m, r, mu);
        let type1_in_range = t1.is_some_and(|(lo, hi)| (lo..=hi).contains(&mu));
        let type1 = if type1_in_range {
            type1::count_type1_total(set, mu, t1_opts)?.0
        } else {
            0
        };
        let type2 = if mu == 1 {
            Type2Entry::Formula(count_min_weight(set))
        } else if 2 * mu > m - r + 2 || r < 2 {
            Type2Entry::Forbidden
        } else {
            match census(set, mu, &options.budgets) {
                Type2Count::Exact(v) => Type2Entry::Census(v),
                Type2Count::Unavailable(reason) => Type2Entry::Unavailable(reason),
            }
        };
        entries.push(ProfileEntry {
            weight,
            mu,
            type1,
            type1_in_range,
            type2,
        });
    }
    Ok(WeightProfile {
        m,
        r,
        k: set.dimension(),
        w_min: 1 << (m - r),
        entries,
    })
}

/// Which oracle verifies the profile.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleKind {
    Full,
    Census,
    Both,
}

/// Outcome of a single verification comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckOutcome {
    Match,
    Mismatch,
    Skipped(String),
}

/// One verification comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyCheck {
    pub label: String,
    pub expected: String,
    pub actual: String,
    pub outcome: CheckOutcome,
}

/// Verification report; `ok` means no mismatch (skips allowed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<VerifyCheck>,
    pub ok: bool,
}

impl VerifyReport {
    fn push(&mut self, label: String, expected: u128, actual: u128) {
        let outcome = if expected == actual {
            CheckOutcome::Match
        } else {
            self.ok = false;
            CheckOutcome::Mismatch
        };
        self.checks.push(VerifyCheck {
            label,
            expected: format!("{expected}"),
            actual: format!("{actual}"),
            outcome,
        });
    }

    fn skip(&mut self, label: String, reason: String) {
        self.checks.push(VerifyCheck {
            label,
            expected: String::new(),
            actual: String::new(),
            outcome: CheckOutcome::Skipped(reason),
        });
    }
}

/// Compares every formula-method profile entry against the chosen oracle.
///
/// The full oracle runs the Gray-code distribution and checks every weight
/// below `2 w_min`, including off-ladder weights (which must have count
/// zero). The census oracle re-derives the minimum-weight count from orbit
/// unions and every Type I case count from a structured census, checking
/// case disjointness along the way.
pub fn verify_profile(
    set: &DecreasingSet,
    oracle: OracleKind,
    options: &ProfileOptions,
) -> Result<VerifyReport> {
    let profile = build_profile(set, options)?;
    let mut report = VerifyReport {
        checks: Vec::new(),
        ok: true,
    };
    if set.r_max().is_none() {
        return Ok(report);
    }
    if matches!(oracle, OracleKind::Full | OracleKind::Both) {
        verify_against_full(set, &profile, options, &mut report)?;
    }
    if matches!(oracle, OracleKind::Census | OracleKind::Both) {
        verify_against_census(set, &profile, options, &mut report);
    }
    Ok(report)
}

fn verify_against_full(
    set: &DecreasingSet,
    profile: &WeightProfile,
    options: &ProfileOptions,
    report: &mut VerifyReport,
) -> Result<()> {
    let dist = full_weight_distribution(set, options.budgets.cap_k)?;
    let bound = 2 * profile.w_min;
    for w in 1..bound {
        let oracle_count = dist.get(&w).copied().unwrap_or(0);
        match profile.at_weight(w) {
            Some(entry) => match entry.total() {
                Some(total) => {
                    report.push(format!("weight {w} (mu {})", entry.mu), oracle_count, total)
                }
                None => report.skip(
                    format!("weight {w} (mu {})", entry.mu),
                    String::from("type2 census unavailable"),
                ),
            },
            None => report.push(format!("weight {w} (off ladder)"), oracle_count, 0),
        }
    }
    Ok(())
}

fn verify_against_census(
    set: &DecreasingSet,
    profile: &WeightProfile,
    options: &ProfileOptions,
    report: &mut VerifyReport,
) {
    let budgets = &options.budgets;
    match min_weight_census(set, budgets) {
        Ok(census) => report.push(
            String::from("min weight: formula vs orbit-union census"),
            census,
            count_min_weight(set),
        ),
        Err(err) => report.skip(
            String::from("min weight census"),
            format!("{err}"),
        ),
    }
    let t1_opts = Type1Options {
        b1_unhalved: options.b1_unhalved,
    };
    for entry in &profile.entries {
        if !entry.type1_in_range {
            continue;
        }
        let mu = entry.mu;
        let (total, cases) = match type1::count_type1_total(set, mu, t1_opts) {
            Ok(v) => v,
            Err(err) => {
                report.skip(format!("type1 mu {mu}"), format!("{err}"));
                continue;
            }
        };
        let mut union: HashSet<EvalVector> = HashSet::new();
        let mut sum: u128 = 0;
        let mut feasible = true;
        for (idx, case) in cases.iter().enumerate() {
            match type1::case_census(set, case, budgets.orbit, budgets.pair_ops, budgets.dedup)
            {
                Ok(vectors) => {
                    report.push(
                        format!("type1 mu {mu} case {idx}: formula vs census"),
                        vectors.len() as u128,
                        case.count,
                    );
                    sum += vectors.len() as u128;
                    union.extend(vectors);
                }
                Err(err) => {
                    report.skip(format!("type1 mu {mu} case {idx}"), format!("{err}"));
                    feasible = false;
                }
            }
        }
        if feasible {
            report.push(
                format!("type1 mu {mu}: cases are disjoint"),
                union.len() as u128,
                sum,
            );
            report.push(
                format!("type1 mu {mu}: union vs total"),
                union.len() as u128,
                total,
            );
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(m: u32, s: &str) -> Monomial {
        Monomial::parse(s, m).unwrap()
    }

    fn polar_rate_half() -> DecreasingSet {
        DecreasingSet::closure(6, &[mono(6, "x1x3x4"), mono(6, "x0x2x5")]).unwrap()
    }

    #[test]
    fn min_weight_formula_examples() {
        let rm37 = DecreasingSet::reed_muller(3, 7).unwrap();
        assert_eq!(count_min_weight(&rm37), 94488);
        assert_eq!(count_min_weight(&polar_rate_half()), 920);
        let trivial = DecreasingSet::closure(5, &[mono(5, "1")]).unwrap();
        assert_eq!(count_min_weight(&trivial), 1);
    }

    #[test]
    fn min_weight_census_matches_formula() {
        for set in [
            polar_rate_half(),
            DecreasingSet::reed_muller(2, 5).unwrap(),
            DecreasingSet::closure(6, &[mono(6, "x1x3x5"), mono(6, "x2x3x4")]).unwrap(),
        ] {
            let census = min_weight_census(&set, &Budgets::default()).unwrap();
            assert_eq!(census, count_min_weight(&set));
        }
    }

    #[test]
    fn type2_degenerate_cases() {
        let set = polar_rate_half();
        assert_eq!(
            count_type2_census(&set, 1, &Budgets::default()),
            Type2Count::Exact(920)
        );
        // 2μ > m − r + 2 = 5 forbids μ = 3.
        assert_eq!(
            count_type2_census(&set, 3, &Budgets::default()),
            Type2Count::Exact(0)
        );
    }

    #[test]
    fn polar_rate_half_profile() {
        let profile = build_profile(&polar_rate_half(), &ProfileOptions::default()).unwrap();
        assert_eq!(profile.w_min, 8);
        assert_eq!(profile.k, 31);
        let w8 = profile.at_weight(8).unwrap();
        assert_eq!(w8.type2, Type2Entry::Formula(920));
        assert_eq!(w8.type1, 0);
        let w12 = profile.at_weight(12).unwrap();
        assert_eq!(w12.type2, Type2Entry::Census(25472));
        assert_eq!(w12.type1, 0);
        let w14 = profile.at_weight(14).unwrap();
        assert_eq!(w14.type1, 32768);
        assert_eq!(w14.type2, Type2Entry::Forbidden);
    }

    #[test]
    fn budget_exhaustion_reports_unavailable() {
        let tight = Budgets {
            pair_ops: 16,
            ..Budgets::default()
        };
        let got = count_type2_census(&polar_rate_half(), 2, &tight);
        assert!(matches!(got, Type2Count::Unavailable(_)));
    }

    #[test]
    fn rm1m_profile_is_min_weight_only() {
        let set = DecreasingSet::reed_muller(1, 5).unwrap();
        let profile = build_profile(&set, &ProfileOptions::default()).unwrap();
        assert_eq!(profile.entries.len(), 1);
        let entry = &profile.entries[0];
        assert_eq!(entry.weight, 16);
        assert_eq!(entry.type2, Type2Entry::Formula(count_min_weight(&set)));
    }

    #[test]
    fn empty_profile() {
        let set = DecreasingSet::closure(4, &[]).unwrap();
        let profile = build_profile(&set, &ProfileOptions::default()).unwrap();
        assert!(profile.entries.is_empty());
    }

    #[test]
    fn verify_small_codes_full_oracle() {
        for set in [
            DecreasingSet::reed_muller(1, 4).unwrap(),
            DecreasingSet::reed_muller(2, 4).unwrap(),
            DecreasingSet::closure(5, &[mono(5, "x1x3"), mono(5, "x0x4")]).unwrap(),
        ] {
            let report =
                verify_profile(&set, OracleKind::Full, &ProfileOptions::default()).unwrap();
            assert!(report.ok, "{:?}", report.checks);
        }
    }

    #[test]
    fn verify_polar_with_census_oracle() {
        let report = verify_profile(
            &polar_rate_half(),
            OracleKind::Census,
            &ProfileOptions::default(),
        )
        .unwrap();
        assert!(report.ok, "{:?}", report.checks);
        assert!(report
            .checks
            .iter()
            .any(|c| c.label.contains("disjoint") && c.outcome == CheckOutcome::Match));
    }

    #[test]
    fn unhalved_b1_fails_census_verification() {
        // The census adjudicates the halving question: with the unhalved
        // toggle the rate-0.55 profile must not verify.
        let set =
            DecreasingSet::closure(6, &[mono(6, "x1x3x5"), mono(6, "x2x3x4")]).unwrap();
        let options = ProfileOptions {
            b1_unhalved: true,
            ..ProfileOptions::default()
        };
        let report = verify_profile(&set, OracleKind::Census, &options).unwrap();
        assert!(!report.ok);
        let halved = verify_profile(&set, OracleKind::Census, &ProfileOptions::default())
            .unwrap();
        assert!(halved.ok, "{:?}", halved.checks);
    }
}
