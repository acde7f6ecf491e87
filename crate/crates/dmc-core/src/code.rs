//! Decreasing monomial sets and code constructors.
//!
//! A decreasing set is a monomial set closed downward under `⪯`; it defines
//! a code of length `2^m` and dimension `K = |I|`. Codes are stored on the
//! monomial side; generator-row index views are derived through the
//! row/monomial dictionary of the Kronecker matrix `G_{2^m}`.

use alloc::vec::Vec;
use core::fmt;

use crate::monomial::Monomial;
use crate::{Error, Result};

/// A set of monomials closed downward under `⪯`, defining a code `C(I)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecreasingSet {
    m: u32,
    /// Member masks, sorted ascending.
    masks: Vec<u32>,
}

impl DecreasingSet {
    /// Smallest decreasing set containing all generators.
    pub fn closure(m: u32, generators: &[Monomial]) -> Result<Self> {
        for g in generators {
            if g.m() != m {
                return Err(Error::MismatchedVarCount {
                    left: m,
                    right: g.m(),
                });
            }
        }
        if m > 20 {
            return Err(Error::TooLarge {
                what: "closure needs a membership table over 2^m masks",
            });
        }
        let mut seen = alloc::vec![false; 1usize << m];
        let mut queue: Vec<u32> = Vec::new();
        for g in generators {
            if !seen[g.mask() as usize] {
                seen[g.mask() as usize] = true;
                queue.push(g.mask());
            }
        }
        // One-step moves generate ⪯: delete a variable, or shift one variable
        // down to a free smaller index.
        while let Some(mask) = queue.pop() {
            let mut rest = mask;
            while rest != 0 {
                let i = rest.trailing_zeros();
                rest &= rest - 1;
                let without = mask & !(1 << i);
                if !seen[without as usize] {
                    seen[without as usize] = true;
                    queue.push(without);
                }
                let mut frees = ((1u32 << i) - 1) & !mask;
                while frees != 0 {
                    let j = frees.trailing_zeros();
                    frees &= frees - 1;
                    let shifted = without | 1 << j;
                    if !seen[shifted as usize] {
                        seen[shifted as usize] = true;
                        queue.push(shifted);
                    }
                }
            }
        }
        let masks: Vec<u32> = (0..1u32 << m).filter(|&k| seen[k as usize]).collect();
        Ok(DecreasingSet { m, masks })
    }

    /// Whether the given monomials form a decreasing set.
    pub fn is_decreasing(m: u32, monomials: &[Monomial]) -> bool {
        Self::from_monomials(m, monomials).is_ok()
    }

    /// Builds a set from explicit members, validating the decreasing property.
    pub fn from_monomials(m: u32, monomials: &[Monomial]) -> Result<Self> {
        let set = Self::from_monomials_unchecked(m, monomials)?;
        if let Some((missing, present)) = set.closure_witness() {
            return Err(Error::NotDecreasing { missing, present });
        }
        Ok(set)
    }

    /// Builds a set from explicit members without the decreasing check.
    pub fn from_monomials_unchecked(m: u32, monomials: &[Monomial]) -> Result<Self> {
        if !(1..=32).contains(&m) {
            return Err(Error::VarCount { m });
        }
        let mut masks: Vec<u32> = Vec::with_capacity(monomials.len());
        for mon in monomials {
            if mon.m() != m {
                return Err(Error::MismatchedVarCount {
                    left: m,
                    right: mon.m(),
                });
            }
            masks.push(mon.mask());
        }
        masks.sort_unstable();
        masks.dedup();
        Ok(DecreasingSet { m, masks })
    }

    /// Returns `(missing, present)` violating downward closure, if any.
    ///
    /// Checking one-step predecessors (variable deletion or a single shift to
    /// a free smaller index) suffices: `⪯` is their transitive closure.
    fn closure_witness(&self) -> Option<(Monomial, Monomial)> {
        for &mask in &self.masks {
            let mut rest = mask;
            while rest != 0 {
                let i = rest.trailing_zeros();
                rest &= rest - 1;
                let without = mask & !(1 << i);
                if !self.contains_mask(without) {
                    return Some((self.mono(without), self.mono(mask)));
                }
                let mut frees = ((1u32 << i) - 1) & !mask;
                while frees != 0 {
                    let j = frees.trailing_zeros();
                    frees &= frees - 1;
                    let shifted = without | 1 << j;
                    if !self.contains_mask(shifted) {
                        return Some((self.mono(shifted), self.mono(mask)));
                    }
                }
            }
        }
        None
    }

    /// The Reed-Muller set: all monomials of degree at most `r`.
    pub fn reed_muller(r: u32, m: u32) -> Result<Self> {
        if !(1..=32).contains(&m) {
            return Err(Error::VarCount { m });
        }
        if r > m {
            return Err(Error::BadRange { r, m });
        }
        if m > 20 {
            return Err(Error::TooLarge {
                what: "Reed-Muller set enumerates 2^m masks",
            });
        }
        let masks: Vec<u32> = (0..1u32 << m).filter(|k| k.count_ones() <= r).collect();
        Ok(DecreasingSet { m, masks })
    }

    /// RMxPolar construction: all monomials of degree `≤ 2` plus the degree-3
    /// down-closure of a single maximal monomial.
    pub fn rmxpolar(m: u32, f_max: &Monomial) -> Result<Self> {
        if f_max.degree() != 3 {
            return Err(Error::WrongDegree {
                expected: 3,
                got: f_max.degree(),
            });
        }
        // The top degree-2 monomial pulls in the whole R(2, m) part.
        let top2 = Monomial::from_indices(m, &[m - 2, m - 1])?;
        Self::closure(m, &[*f_max, top2])
    }

    /// Dictionary: generator row `i` of `G_{2^m}` evaluates the monomial with
    /// mask `2^m − 1 − i`.
    pub fn row_to_monomial(m: u32, row: u64) -> Result<Monomial> {
        if !(1..=32).contains(&m) {
            return Err(Error::VarCount { m });
        }
        let n = 1u64 << m;
        if row >= n {
            return Err(Error::RowOutOfRange { row, m });
        }
        Monomial::new(m, (n - 1 - row) as u32)
    }

    /// Inverse dictionary: the generator row index of a monomial.
    pub fn monomial_to_row(f: &Monomial) -> u64 {
        (1u64 << f.m()) - 1 - f.mask() as u64
    }

    /// Builds a set from generator row indices, validating the decreasing
    /// property.
    pub fn from_rows(m: u32, rows: &[u64]) -> Result<Self> {
        let mut monos = Vec::with_capacity(rows.len());
        for &row in rows {
            monos.push(Self::row_to_monomial(m, row)?);
        }
        Self::from_monomials(m, &monos)
    }

    /// Generator row indices, ascending.
    pub fn to_rows(&self) -> Vec<u64> {
        let mut rows: Vec<u64> = self
            .iter()
            .map(|f| Self::monomial_to_row(&f))
            .collect();
        rows.sort_unstable();
        rows
    }

    /// Ambient variable count.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Code dimension `K = |I|`.
    pub fn dimension(&self) -> usize {
        self.masks.len()
    }

    /// Code length `2^m`.
    pub fn length(&self) -> u64 {
        1u64 << self.m
    }

    /// Maximum degree present, or `None` for the empty set.
    pub fn r_max(&self) -> Option<u32> {
        self.masks.iter().map(|k| k.count_ones()).max()
    }

    /// Members, ascending by mask.
    pub fn iter(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.masks.iter().map(move |&k| self.mono(k))
    }

    /// Member masks, ascending.
    pub fn masks(&self) -> &[u32] {
        &self.masks
    }

    /// The stratum `I_d` of degree-`d` members.
    pub fn stratum(&self, d: u32) -> Vec<Monomial> {
        self.masks
            .iter()
            .filter(|k| k.count_ones() == d)
            .map(|&k| self.mono(k))
            .collect()
    }

    /// Membership test.
    pub fn contains(&self, f: &Monomial) -> bool {
        f.m() == self.m && self.contains_mask(f.mask())
    }

    fn contains_mask(&self, mask: u32) -> bool {
        self.masks.binary_search(&mask).is_ok()
    }

    fn mono(&self, mask: u32) -> Monomial {
        Monomial::new(self.m, mask).expect("stored masks are valid")
    }

    /// `J_f^I(i) = {j ∈ [0, i) | j ∉ ind(f), x_j f / x_i ∈ I}` as a bit mask.
    pub fn j_set_restricted(&self, f: &Monomial, i: u32) -> Result<u32> {
        if f.m() != self.m {
            return Err(Error::MismatchedVarCount {
                left: self.m,
                right: f.m(),
            });
        }
        if !f.contains(i) {
            return Err(Error::IndexOutOfRange { index: i, m: self.m });
        }
        let mut out = 0u32;
        let mut frees = f.j_set(i)?;
        while frees != 0 {
            let j = frees.trailing_zeros();
            frees &= frees - 1;
            let replaced = f.mask() & !(1 << i) | 1 << j;
            if self.contains_mask(replaced) {
                out |= 1 << j;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for DecreasingSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, mon) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{mon}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(m: u32, s: &str) -> Monomial {
        Monomial::parse(s, m).unwrap()
    }

    #[test]
    fn closure_small() {
        let set = DecreasingSet::closure(3, &[mono(3, "x1x2")]).unwrap();
        let members: Vec<u32> = set.masks().to_vec();
        // {1, x0, x1, x2, x0x1, x0x2, x1x2}
        assert_eq!(members, alloc::vec![0b000, 0b001, 0b010, 0b011, 0b100, 0b101, 0b110]);
        assert_eq!(set.dimension(), 7);
    }

    #[test]
    fn closure_empty_and_idempotent() {
        let empty = DecreasingSet::closure(4, &[]).unwrap();
        assert_eq!(empty.dimension(), 0);
        assert_eq!(empty.r_max(), None);

        let set = DecreasingSet::closure(5, &[mono(5, "x1x3"), mono(5, "x2x4")]).unwrap();
        let again =
            DecreasingSet::closure(5, &set.iter().collect::<Vec<_>>()).unwrap();
        assert_eq!(set, again);
    }

    #[test]
    fn closure_matches_brute_force() {
        // Smallest decreasing superset equals {g : g ⪯ some generator},
        // spot-checked for m ≤ 6.
        for (m, gens) in [
            (4u32, alloc::vec!["x1x3"]),
            (5, alloc::vec!["x0x2x4"]),
            (6, alloc::vec!["x1x3x4", "x0x2x5"]),
            (6, alloc::vec!["x1x3x5", "x2x3x4"]),
        ] {
            let gens: Vec<Monomial> = gens.iter().map(|s| mono(m, s)).collect();
            let set = DecreasingSet::closure(m, &gens).unwrap();
            for mask in 0..1u32 << m {
                let g = Monomial::new(m, mask).unwrap();
                let in_down_set = gens.iter().any(|f| g.leq(f).unwrap());
                assert_eq!(set.contains(&g), in_down_set, "m={m} g={g}");
            }
        }
    }

    #[test]
    fn polar_rate_half_closure_size() {
        let set =
            DecreasingSet::closure(6, &[mono(6, "x1x3x4"), mono(6, "x0x2x5")]).unwrap();
        assert_eq!(set.dimension(), 31);
        assert_eq!(set.stratum(3).len(), 11);
    }

    #[test]
    fn closure_monotone_in_generators() {
        let small = DecreasingSet::closure(6, &[mono(6, "x1x3x4")]).unwrap();
        let large =
            DecreasingSet::closure(6, &[mono(6, "x1x3x4"), mono(6, "x0x2x5")]).unwrap();
        for f in small.iter() {
            assert!(large.contains(&f));
        }
    }

    #[test]
    fn is_decreasing_checks() {
        let rm = DecreasingSet::reed_muller(2, 5).unwrap();
        let members: Vec<Monomial> = rm.iter().collect();
        assert!(DecreasingSet::is_decreasing(5, &members));

        // {x1} alone misses x0 and 1.
        assert!(!DecreasingSet::is_decreasing(5, &[mono(5, "x1")]));

        let closed = DecreasingSet::closure(5, &[mono(5, "x1x4")]).unwrap();
        assert!(DecreasingSet::is_decreasing(
            5,
            &closed.iter().collect::<Vec<_>>()
        ));
    }

    #[test]
    fn reed_muller_dimensions() {
        assert_eq!(DecreasingSet::reed_muller(3, 7).unwrap().dimension(), 64);
        assert_eq!(DecreasingSet::reed_muller(0, 6).unwrap().dimension(), 1);
        assert_eq!(DecreasingSet::reed_muller(2, 8).unwrap().dimension(), 37);
        assert!(DecreasingSet::reed_muller(9, 8).is_err());
    }

    #[test]
    fn rm_set_equals_closure_of_top_interval() {
        for m in 1..=8u32 {
            for r in 0..=m.min(8) {
                let rm = DecreasingSet::reed_muller(r, m).unwrap();
                let top: Vec<u32> = (m - r..m).collect();
                let gen = Monomial::from_indices(m, &top).unwrap();
                let cl = DecreasingSet::closure(m, &[gen]).unwrap();
                assert_eq!(rm, cl, "r={r} m={m}");
            }
        }
    }

    #[test]
    fn row_monomial_dictionary() {
        assert_eq!(
            DecreasingSet::row_to_monomial(3, 0).unwrap(),
            mono(3, "x0x1x2")
        );
        assert_eq!(DecreasingSet::row_to_monomial(3, 7).unwrap(), mono(3, "1"));
        assert_eq!(DecreasingSet::row_to_monomial(3, 3).unwrap(), mono(3, "x2"));
        assert!(DecreasingSet::row_to_monomial(3, 8).is_err());
        for m in 1..=10u32 {
            for row in 0..1u64 << m {
                let f = DecreasingSet::row_to_monomial(m, row).unwrap();
                assert_eq!(DecreasingSet::monomial_to_row(&f), row);
            }
        }
    }

    #[test]
    fn from_rows_examples() {
        let set = DecreasingSet::from_rows(3, &[3, 5, 6, 7]).unwrap();
        assert_eq!(set, DecreasingSet::reed_muller(1, 3).unwrap());

        assert_eq!(DecreasingSet::from_rows(4, &[]).unwrap().dimension(), 0);

        let err = DecreasingSet::from_rows(3, &[0, 7]).unwrap_err();
        match err {
            Error::NotDecreasing { missing, present } => {
                assert!(missing.leq(&present).unwrap());
                assert_eq!(present, mono(3, "x0x1x2"));
            }
            other => panic!("expected NotDecreasing, got {other:?}"),
        }
    }

    #[test]
    fn from_rows_round_trip() {
        for set in [
            DecreasingSet::reed_muller(2, 5).unwrap(),
            DecreasingSet::closure(6, &[mono(6, "x1x3x4"), mono(6, "x0x2x5")]).unwrap(),
        ] {
            let rows = set.to_rows();
            let back = DecreasingSet::from_rows(set.m(), &rows).unwrap();
            assert_eq!(set, back);
        }
    }

    #[test]
    fn rmxpolar_stratum_sizes() {
        let a = DecreasingSet::rmxpolar(8, &mono(8, "x0x4x7")).unwrap();
        assert_eq!(a.stratum(3).len(), 18);
        let b = DecreasingSet::rmxpolar(8, &mono(8, "x1x3x7")).unwrap();
        assert_eq!(b.stratum(3).len(), 24);
        let c = DecreasingSet::rmxpolar(8, &mono(8, "x0x1x2")).unwrap();
        assert_eq!(c.stratum(3).len(), 1);
        // Degree ≤ 2 part is complete in every case.
        assert_eq!(a.dimension(), 37 + 18);
        assert!(DecreasingSet::rmxpolar(8, &mono(8, "x0x1")).is_err());
    }

    #[test]
    fn j_set_restricted_examples() {
        // f = x2x4x5 at m = 6 with x2x3x5 excluded from I.
        let m = 6;
        let ia = DecreasingSet::closure(m, &[mono(m, "x1x4x5"), mono(m, "x2x3x4")]).unwrap();
        let f = mono(m, "x2x4x5");
        assert!(!ia.contains(&f));
        assert_eq!(ia.j_set_restricted(&f, 4).unwrap(), 0b0011);
        assert_eq!(ia.j_set_restricted(&f, 2).unwrap(), 0b0011);
        assert_eq!(ia.j_set_restricted(&f, 5).unwrap(), 0b1011);
        assert!(ia.j_set_restricted(&f, 3).is_err());

        // Members of a decreasing set restrict to the plain J sets.
        let rm = DecreasingSet::reed_muller(3, 6).unwrap();
        for g in rm.stratum(3) {
            for i in g.indices() {
                assert_eq!(rm.j_set_restricted(&g, i).unwrap(), g.j_set(i).unwrap());
            }
        }
    }
}
