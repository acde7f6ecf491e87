//! Squarefree monomials in `m` variables and the orders that structure
//! decreasing monomial codes.
//!
//! A monomial is stored as a bit set over the variable indices `[0, m)`;
//! the empty set is the constant monomial `1`. Three order relations are
//! provided: divisibility `⪯_w`, the coordinatewise shift order `⪯_sh` (with
//! its strict variant `≺_sh`) on equal-degree monomials, and the full order
//! `⪯` combining both. The `λ`/`J` counts defined here drive every orbit-size
//! and codeword-count formula in the crate.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A squarefree monomial over variables `x_0, …, x_{m-1}`.
///
/// Equality and ordering include the ambient variable count `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    m: u32,
    mask: u32,
}

impl Monomial {
    /// Builds a monomial from its index bit mask.
    pub fn new(m: u32, mask: u32) -> Result<Self> {
        if !(1..=32).contains(&m) {
            return Err(Error::VarCount { m });
        }
        if m < 32 && mask >> m != 0 {
            let index = 31 - mask.leading_zeros();
            return Err(Error::IndexOutOfRange { index, m });
        }
        Ok(Monomial { m, mask })
    }

    /// The constant monomial `1`.
    pub fn one(m: u32) -> Result<Self> {
        Monomial::new(m, 0)
    }

    /// The full monomial `x_0 ⋯ x_{m-1}`.
    pub fn full(m: u32) -> Result<Self> {
        let mask = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
        Monomial::new(m, mask)
    }

    /// Builds a monomial from strictly increasing variable indices.
    pub fn from_indices(m: u32, indices: &[u32]) -> Result<Self> {
        let mut mask = 0u32;
        let mut prev: Option<u32> = None;
        for &i in indices {
            if i >= m {
                return Err(Error::IndexOutOfRange { index: i, m });
            }
            if prev.is_some_and(|p| p >= i) {
                return Err(Error::Parse {
                    reason: "indices must be strictly increasing",
                });
            }
            prev = Some(i);
            mask |= 1 << i;
        }
        Monomial::new(m, mask)
    }

    /// Parses monomial text: `"1"`, `"x1x3x5"` or `"1,3,5"`, indices strictly
    /// increasing.
    pub fn parse(text: &str, m: u32) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse {
                reason: "empty monomial text",
            });
        }
        if text == "1" {
            return Monomial::one(m);
        }
        let mut indices = Vec::new();
        if text.starts_with('x') {
            for piece in text.split('x').skip(1) {
                indices.push(parse_index(piece)?);
            }
        } else {
            for piece in text.split(',') {
                indices.push(parse_index(piece.trim())?);
            }
        }
        if indices.is_empty() {
            return Err(Error::Parse {
                reason: "no variable indices",
            });
        }
        for w in indices.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::Parse {
                    reason: "indices must be strictly increasing",
                });
            }
        }
        Monomial::from_indices(m, &indices)
    }

    /// Variable count of the ambient ring.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Index bit mask: bit `i` is set iff `x_i` divides the monomial.
    pub fn mask(&self) -> u32 {
        self.mask
    }

    /// `deg(f) = |ind(f)|`.
    pub fn degree(&self) -> u32 {
        self.mask.count_ones()
    }

    /// Ascending variable indices.
    pub fn indices(&self) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.degree() as usize);
        let mut rest = self.mask;
        while rest != 0 {
            let i = rest.trailing_zeros();
            v.push(i);
            rest &= rest - 1;
        }
        v
    }

    /// Whether `x_i` divides the monomial.
    pub fn contains(&self, i: u32) -> bool {
        i < self.m && self.mask >> i & 1 == 1
    }

    fn check_same_m(&self, other: &Monomial) -> Result<()> {
        if self.m != other.m {
            return Err(Error::MismatchedVarCount {
                left: self.m,
                right: other.m,
            });
        }
        Ok(())
    }

    /// `gcd(f, g)`: the monomial on `ind(f) ∩ ind(g)`.
    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same_m(other)?;
        Ok(Monomial {
            m: self.m,
            mask: self.mask & other.mask,
        })
    }

    /// The squarefree product `fg`: the monomial on `ind(f) ∪ ind(g)`.
    pub fn product(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same_m(other)?;
        Ok(Monomial {
            m: self.m,
            mask: self.mask | other.mask,
        })
    }

    /// The multiplicative complement `f̌ = x_0 ⋯ x_{m-1} / f`.
    pub fn complement(&self) -> Monomial {
        let full = if self.m == 32 {
            u32::MAX
        } else {
            (1u32 << self.m) - 1
        };
        Monomial {
            m: self.m,
            mask: full & !self.mask,
        }
    }

    /// Divisibility `f ⪯_w g`, i.e. `ind(f) ⊆ ind(g)`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_same_m(other)?;
        Ok(self.mask & !other.mask == 0)
    }

    /// The quotient `f / divisor`; errors when `divisor ∤ f`.
    pub fn quotient(&self, divisor: &Monomial) -> Result<Monomial> {
        if !divisor.divides(self)? {
            return Err(Error::NotDivisor);
        }
        Ok(Monomial {
            m: self.m,
            mask: self.mask & !divisor.mask,
        })
    }

    fn check_same_degree(&self, other: &Monomial) -> Result<()> {
        self.check_same_m(other)?;
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }

    /// Shift order `f ⪯_sh g` on equal-degree monomials: coordinatewise `≤`
    /// on the sorted index lists.
    pub fn leq_sh(&self, other: &Monomial) -> Result<bool> {
        self.check_same_degree(other)?;
        Ok(self
            .indices()
            .iter()
            .zip(other.indices().iter())
            .all(|(a, b)| a <= b))
    }

    /// Strict shift order `f ≺_sh g`: coordinatewise `<` on the sorted index
    /// lists.
    pub fn lt_sh(&self, other: &Monomial) -> Result<bool> {
        self.check_same_degree(other)?;
        Ok(self
            .indices()
            .iter()
            .zip(other.indices().iter())
            .all(|(a, b)| a < b))
    }

    /// The full order `f ⪯ g`: some equal-degree divisor `g*` of `g` has
    /// `f ⪯_sh g*`.
    ///
    /// Decided by top alignment: the `deg(f)` largest indices of `g` dominate
    /// every other equal-degree divisor coordinatewise, so comparing against
    /// them alone suffices.
    pub fn leq(&self, other: &Monomial) -> Result<bool> {
        self.check_same_m(other)?;
        let df = self.degree() as usize;
        let dg = other.degree() as usize;
        if df > dg {
            return Ok(false);
        }
        let gi = other.indices();
        let top = &gi[dg - df..];
        Ok(self.indices().iter().zip(top.iter()).all(|(a, b)| a <= b))
    }

    /// `J_f(i) = {j ∈ [0, i) | j ∉ ind(f)}` as a bit mask, with `self` as the
    /// context monomial.
    pub fn j_set(&self, i: u32) -> Result<u32> {
        if i >= self.m {
            return Err(Error::IndexOutOfRange { index: i, m: self.m });
        }
        let below = (1u32 << i) - 1;
        Ok(below & !self.mask)
    }

    /// `|J_f(i)|`.
    pub fn j_count(&self, i: u32) -> Result<u32> {
        Ok(self.j_set(i)?.count_ones())
    }

    /// The λ profile of the monomial itself.
    pub fn lambda(&self) -> LambdaProfile {
        self.lambda_restrict(self).expect("self divides self")
    }

    /// The λ profile restricted to a divisor `h ⪯_w f`: entries `|J_f(i)|`
    /// for `i ∈ ind(h)`.
    pub fn lambda_restrict(&self, h: &Monomial) -> Result<LambdaProfile> {
        if !h.divides(self)? {
            return Err(Error::NotDivisor);
        }
        let mut entries = Vec::with_capacity(h.degree() as usize);
        let mut total = 0;
        for i in h.indices() {
            let count = self.j_count(i).expect("index below m");
            entries.push((i, count));
            total += count;
        }
        Ok(LambdaProfile { entries, total })
    }

    /// Total number of free smaller positions, `|λ_f|`.
    pub fn lambda_total(&self) -> u32 {
        let d = self.degree();
        if d == 0 {
            return 0;
        }
        self.indices().iter().sum::<u32>() - d * (d - 1) / 2
    }
}

fn parse_index(piece: &str) -> Result<u32> {
    piece.parse::<u32>().map_err(|_| Error::Parse {
        reason: "invalid variable index",
    })
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mask == 0 {
            return write!(f, "1");
        }
        let mut s = String::new();
        for i in self.indices() {
            s.push('x');
            let mut buf = [0u8; 2];
            let mut n = i;
            let mut k = 0;
            loop {
                buf[k] = b'0' + (n % 10) as u8;
                n /= 10;
                k += 1;
                if n == 0 {
                    break;
                }
            }
            while k > 0 {
                k -= 1;
                s.push(buf[k] as char);
            }
        }
        write!(f, "{s}")
    }
}

/// Per-variable free-position counts `|J_f(i)|` for the indices of a divisor,
/// and their sum.
///
/// For the full profile of `f = x_{i_1} ⋯ x_{i_r}` with `i_1 < … < i_r`, the
/// entry at `i_k` equals `i_k − (k−1)` and the total is
/// `Σ i_k − r(r−1)/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaProfile {
    /// `(i, |J_f(i)|)` pairs with `i` ascending.
    pub entries: Vec<(u32, u32)>,
    /// Sum of all entries.
    pub total: u32,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(m: u32, s: &str) -> Monomial {
        Monomial::parse(s, m).unwrap()
    }

    #[test]
    fn degree_basics() {
        assert_eq!(mono(7, "1").degree(), 0);
        assert_eq!(mono(7, "x1x3x5").degree(), 3);
        assert_eq!(Monomial::full(7).unwrap().degree(), 7);
    }

    #[test]
    fn parse_both_grammars() {
        assert_eq!(mono(8, "x1x3x5"), mono(8, "1,3,5"));
        assert_eq!(mono(8, "1").mask(), 0);
        assert!(Monomial::parse("x3x1", 8).is_err());
        assert!(Monomial::parse("3,3", 8).is_err());
        assert!(Monomial::parse("x9", 8).is_err());
        assert!(Monomial::parse("", 8).is_err());
        // "1" is the constant, never the index list [1].
        assert_eq!(mono(8, "1").degree(), 0);
    }

    #[test]
    fn display_round_trip() {
        for s in ["1", "x0", "x1x3x5", "x0x2x4x6"] {
            let f = mono(7, s);
            assert_eq!(alloc::format!("{f}"), s);
        }
    }

    #[test]
    fn gcd_examples() {
        let m = 8;
        assert_eq!(
            mono(m, "x1x2x3").gcd(&mono(m, "x1x4x5")).unwrap(),
            mono(m, "x1")
        );
        let f = mono(m, "x0x2x5");
        assert_eq!(f.gcd(&f).unwrap(), f);
        assert_eq!(
            mono(m, "x0x1x2").gcd(&mono(m, "x3x4x5")).unwrap(),
            mono(m, "1")
        );
        assert!(mono(7, "x1").gcd(&mono(8, "x1")).is_err());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(mono(8, "x1x2x3x4x5").complement(), mono(8, "x0x6x7"));
        assert_eq!(mono(5, "1").complement(), Monomial::full(5).unwrap());
        assert_eq!(mono(7, "x0x2x4x6").complement(), mono(7, "x1x3x5"));
    }

    #[test]
    fn divides_examples() {
        let m = 8;
        assert!(mono(m, "x0").divides(&mono(m, "x0x6x7")).unwrap());
        assert!(mono(m, "1").divides(&mono(m, "x2x3")).unwrap());
        assert!(!mono(m, "x3").divides(&mono(m, "x0x1")).unwrap());
    }

    #[test]
    fn shift_orders() {
        let m = 8;
        assert!(mono(m, "x0x2").leq_sh(&mono(m, "x0x3")).unwrap());
        assert!(!mono(m, "x0x2").lt_sh(&mono(m, "x0x3")).unwrap());
        assert!(mono(m, "x0x2x4").lt_sh(&mono(m, "x1x3x5")).unwrap());
        let f = mono(m, "x1x4");
        assert!(f.leq_sh(&f).unwrap());
        assert!(!f.lt_sh(&f).unwrap());
        assert!(f.leq_sh(&mono(m, "x0x1x2")).is_err());
    }

    #[test]
    fn full_order_examples() {
        let m = 5;
        assert!(mono(m, "x0").leq(&mono(m, "x1x2")).unwrap());
        let f = mono(m, "x1x2");
        assert!(f.leq(&f).unwrap());
        assert!(!mono(m, "x3").leq(&mono(m, "x1x2")).unwrap());
        assert!(mono(m, "1").leq(&mono(m, "x4")).unwrap());
    }

    #[test]
    fn lambda_examples() {
        let f = mono(7, "x1x3x5");
        let p = f.lambda();
        assert_eq!(p.entries, alloc::vec![(1, 1), (3, 2), (5, 3)]);
        assert_eq!(p.total, 6);
        assert_eq!(f.lambda_total(), 6);

        let g = mono(7, "x3x5x6");
        assert_eq!(g.lambda().total, 11);
        assert_eq!(
            g.lambda().entries,
            alloc::vec![(3, 3), (5, 4), (6, 4)]
        );

        let prefix = mono(7, "x0x1x2");
        assert_eq!(prefix.lambda().total, 0);
    }

    #[test]
    fn lambda_restrict_examples() {
        let f = mono(7, "x1x3x5");
        let h = mono(7, "x1x5");
        let p = f.lambda_restrict(&h).unwrap();
        assert_eq!(p.entries, alloc::vec![(1, 1), (5, 3)]);
        assert_eq!(p.total, 4);
        assert!(f.lambda_restrict(&mono(7, "x2")).is_err());
    }

    #[test]
    fn lambda_total_closed_form() {
        // |λ_f| = Σ i_k − r(r−1)/2, checked exhaustively for m ≤ 8.
        for m in 1..=8u32 {
            for mask in 0..1u32 << m {
                let f = Monomial::new(m, mask).unwrap();
                assert_eq!(f.lambda().total, f.lambda_total());
            }
        }
    }

    #[test]
    fn j_set_examples() {
        // fg = x1x3x5 · x3x5x6 collapsed to x1x3x5x6.
        let fg = mono(7, "x1x3x5x6");
        assert_eq!(fg.j_set(3).unwrap(), 0b101);
        assert_eq!(fg.j_count(3).unwrap(), 2);
        assert_eq!(fg.j_set(5).unwrap(), 0b10101);
        // fg = x1x3x5 · x2x4x5 collapsed to x1x2x3x4x5.
        let fg2 = mono(7, "x1x2x3x4x5");
        assert_eq!(fg2.j_set(5).unwrap(), 0b1);
        assert_eq!(fg2.j_set(0).unwrap(), 0);
        assert!(fg2.j_set(7).is_err());
    }

    #[test]
    fn leq_matches_brute_force() {
        // Top alignment vs. search over all equal-degree divisors, m ≤ 5.
        for m in 1..=5u32 {
            for fm in 0..1u32 << m {
                for gm in 0..1u32 << m {
                    let f = Monomial::new(m, fm).unwrap();
                    let g = Monomial::new(m, gm).unwrap();
                    assert_eq!(
                        f.leq(&g).unwrap(),
                        crate::oracle::leq_brute_force(&f, &g),
                        "f={f} g={g}"
                    );
                }
            }
        }
    }

    #[test]
    fn leq_is_partial_order() {
        for m in 1..=5u32 {
            let all: Vec<Monomial> = (0..1u32 << m)
                .map(|mask| Monomial::new(m, mask).unwrap())
                .collect();
            for f in &all {
                assert!(f.leq(f).unwrap());
            }
            for f in &all {
                for g in &all {
                    if f.leq(g).unwrap() && g.leq(f).unwrap() {
                        assert_eq!(f, g);
                    }
                    for h in &all {
                        if f.leq(g).unwrap() && g.leq(h).unwrap() {
                            assert!(f.leq(h).unwrap(), "f={f} g={g} h={h}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn strict_shift_implies_shift() {
        for m in 1..=6u32 {
            for fm in 0..1u32 << m {
                for gm in 0..1u32 << m {
                    let f = Monomial::new(m, fm).unwrap();
                    let g = Monomial::new(m, gm).unwrap();
                    if f.degree() != g.degree() {
                        continue;
                    }
                    if f.lt_sh(&g).unwrap() {
                        assert!(f.leq_sh(&g).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn shift_coprime_lemma() {
        // Coprime pairs: ⪯_sh and ≺_sh coincide. Non-trivial gcd h:
        // f ⪯_sh g iff f/h ≺_sh g/h. Exhaustive for m ≤ 5.
        for m in 1..=5u32 {
            for fm in 1u32..1 << m {
                for gm in 1u32..1 << m {
                    let f = Monomial::new(m, fm).unwrap();
                    let g = Monomial::new(m, gm).unwrap();
                    if f.degree() != g.degree() {
                        continue;
                    }
                    let h = f.gcd(&g).unwrap();
                    if h.degree() == 0 {
                        assert_eq!(f.leq_sh(&g).unwrap(), f.lt_sh(&g).unwrap());
                    } else if h != f {
                        let fq = f.quotient(&h).unwrap();
                        let gq = g.quotient(&h).unwrap();
                        assert_eq!(
                            f.leq_sh(&g).unwrap(),
                            fq.lt_sh(&gq).unwrap(),
                            "f={f} g={g}"
                        );
                    }
                }
            }
        }
    }
}
