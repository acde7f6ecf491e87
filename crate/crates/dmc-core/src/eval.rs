//! ANF polynomials, the evaluation isomorphism and weight kernels.
//!
//! Evaluation vectors follow the decreasing-index point ordering: position
//! `k` of `ev(P)` holds `P(bin(2^m − 1 − k))`, so the bit at `k` for a
//! monomial with index mask `μ` is set iff `k & μ == 0`. Under this ordering
//! `ev` is the subset-sum (Möbius) butterfly composed with index reversal,
//! and the transform is an involution, which also gives cheap ANF recovery
//! from a vector.

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::code::DecreasingSet;
use crate::monomial::Monomial;
use crate::{Error, Result};

/// Largest `m` for which in-memory length-`2^m` bit vectors are allowed.
pub const MAX_EVAL_M: u32 = 24;

const LOW_HALF: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0f0f_0f0f_0f0f_0f0f,
    0x00ff_00ff_00ff_00ff,
    0x0000_ffff_0000_ffff,
    0x0000_0000_ffff_ffff,
];

fn words_for(m: u32) -> usize {
    if m >= 6 {
        1usize << (m - 6)
    } else {
        1
    }
}

fn check_eval_m(m: u32) -> Result<()> {
    if !(1..=32).contains(&m) {
        return Err(Error::VarCount { m });
    }
    if m > MAX_EVAL_M {
        return Err(Error::TooLarge {
            what: "evaluation vectors above 2^24 bits",
        });
    }
    Ok(())
}

/// A `2^m`-bit evaluation vector in machine-word chunks.
///
/// Bits beyond `2^m` in the last word are kept zero, so equality and hashing
/// work directly on the words.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EvalVector {
    m: u32,
    words: Vec<u64>,
}

impl EvalVector {
    /// The zero vector.
    pub fn zeros(m: u32) -> Result<Self> {
        check_eval_m(m)?;
        Ok(EvalVector {
            m,
            words: alloc::vec![0; words_for(m)],
        })
    }

    /// The all-ones vector, `ev(1)`.
    pub fn ones(m: u32) -> Result<Self> {
        let mut v = Self::zeros(m)?;
        for w in &mut v.words {
            *w = u64::MAX;
        }
        v.trim();
        Ok(v)
    }

    /// `ev(x_t)`: bit `k` is set iff bit `t` of `k` is clear.
    pub fn var(m: u32, t: u32) -> Result<Self> {
        check_eval_m(m)?;
        if t >= m {
            return Err(Error::IndexOutOfRange { index: t, m });
        }
        let mut v = Self::zeros(m)?;
        if t < 6 {
            for w in &mut v.words {
                *w = LOW_HALF[t as usize];
            }
        } else {
            let stride = 1usize << (t - 6);
            for (idx, w) in v.words.iter_mut().enumerate() {
                if idx & stride == 0 {
                    *w = u64::MAX;
                }
            }
        }
        v.trim();
        Ok(v)
    }

    /// `ev(f)` for a monomial: bit `k` is set iff `k & mask(f) == 0`.
    pub fn from_monomial(f: &Monomial) -> Result<Self> {
        let mut v = Self::ones(f.m())?;
        for t in f.indices() {
            v.and_assign(&Self::var(f.m(), t)?);
        }
        Ok(v)
    }

    fn trim(&mut self) {
        if self.m < 6 {
            let bits = 1u32 << self.m;
            self.words[0] &= (1u64 << bits) - 1;
        }
    }

    /// Variable count `m`.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Length in bits, `2^m`.
    pub fn len(&self) -> u64 {
        1u64 << self.m
    }

    /// Whether every bit is zero.
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Raw words, least significant first.
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Bit at position `k`.
    pub fn get(&self, k: u64) -> bool {
        self.words[(k >> 6) as usize] >> (k & 63) & 1 == 1
    }

    /// Sets bit `k`.
    pub fn set(&mut self, k: u64, value: bool) {
        let w = &mut self.words[(k >> 6) as usize];
        if value {
            *w |= 1 << (k & 63);
        } else {
            *w &= !(1 << (k & 63));
        }
    }

    /// In-place XOR; vector addition on the evaluation side.
    pub fn xor_assign(&mut self, other: &EvalVector) {
        debug_assert_eq!(self.m, other.m);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a ^= b;
        }
    }

    /// In-place AND; pointwise product on the evaluation side.
    pub fn and_assign(&mut self, other: &EvalVector) {
        debug_assert_eq!(self.m, other.m);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= b;
        }
    }

    /// Hamming weight via hardware population count.
    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// In-place subset-sum butterfly: afterwards bit `c` holds the XOR of the
    /// input bits over all `j ⊆ c`. Involutive over `F_2`.
    pub fn zeta_in_place(&mut self) {
        let m = self.m;
        for t in 0..m.min(6) {
            let shift = 1u32 << t;
            let lo = LOW_HALF[t as usize];
            for w in &mut self.words {
                *w ^= (*w & lo) << shift;
            }
        }
        for t in 6..m {
            let stride = 1usize << (t - 6);
            let block = stride << 1;
            let mut base = 0;
            while base < self.words.len() {
                for i in 0..stride {
                    let low = self.words[base + i];
                    self.words[base + stride + i] ^= low;
                }
                base += block;
            }
        }
        self.trim();
    }

    /// In-place index reversal `k ↦ 2^m − 1 − k`.
    pub fn reverse_in_place(&mut self) {
        self.words.reverse();
        for w in &mut self.words {
            *w = w.reverse_bits();
        }
        if self.m < 6 {
            self.words[0] >>= 64 - (1u64 << self.m);
        }
        self.trim();
    }

    /// Recovers the ANF whose evaluation is this vector.
    pub fn to_polynomial(&self) -> Polynomial {
        let mut bits = self.clone();
        bits.reverse_in_place();
        bits.zeta_in_place();
        let mut terms = BTreeSet::new();
        for (idx, &w) in bits.words.iter().enumerate() {
            let mut rest = w;
            while rest != 0 {
                let b = rest.trailing_zeros() as u64;
                rest &= rest - 1;
                terms.insert(((idx as u64) << 6 | b) as u32);
            }
        }
        Polynomial { m: self.m, terms }
    }

    /// Whether the vector lies in the span of a decreasing set: every ANF
    /// term must be a member.
    pub fn in_span(&self, set: &DecreasingSet) -> bool {
        let mut bits = self.clone();
        bits.reverse_in_place();
        bits.zeta_in_place();
        for (idx, &w) in bits.words.iter().enumerate() {
            let mut rest = w;
            while rest != 0 {
                let b = rest.trailing_zeros() as u64;
                rest &= rest - 1;
                let mask = ((idx as u64) << 6 | b) as u32;
                let mono = Monomial::new(self.m, mask).expect("mask below 2^m");
                if !set.contains(&mono) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for EvalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in 0..self.len() {
            write!(f, "{}", u8::from(self.get(k)))?;
        }
        Ok(())
    }
}

/// An element of the quotient ring in algebraic normal form: a finite set of
/// squarefree monomials with XOR semantics.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Polynomial {
    m: u32,
    /// Monomial index masks present with coefficient 1.
    terms: BTreeSet<u32>,
}

impl Polynomial {
    /// The zero polynomial.
    pub fn zero(m: u32) -> Result<Self> {
        if !(1..=32).contains(&m) {
            return Err(Error::VarCount { m });
        }
        Ok(Polynomial {
            m,
            terms: BTreeSet::new(),
        })
    }

    /// The constant polynomial `1`.
    pub fn one(m: u32) -> Result<Self> {
        let mut p = Self::zero(m)?;
        p.terms.insert(0);
        Ok(p)
    }

    /// A single monomial.
    pub fn monomial(f: &Monomial) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(f.mask());
        Polynomial { m: f.m(), terms }
    }

    /// Builds a polynomial from explicit term masks (duplicates cancel).
    pub fn from_term_masks(m: u32, masks: &[u32]) -> Result<Self> {
        let mut p = Self::zero(m)?;
        for &mask in masks {
            Monomial::new(m, mask)?;
            p.toggle(mask);
        }
        Ok(p)
    }

    fn toggle(&mut self, mask: u32) {
        if !self.terms.insert(mask) {
            self.terms.remove(&mask);
        }
    }

    /// Variable count `m`.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Number of ANF terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Term masks, ascending.
    pub fn term_masks(&self) -> impl Iterator<Item = u32> + '_ {
        self.terms.iter().copied()
    }

    /// Terms as monomials, ascending by mask.
    pub fn terms(&self) -> Vec<Monomial> {
        self.terms
            .iter()
            .map(|&mask| Monomial::new(self.m, mask).expect("stored masks are valid"))
            .collect()
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Algebraic degree; zero polynomial reports 0.
    pub fn degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|mask| mask.count_ones())
            .max()
            .unwrap_or(0)
    }

    /// Ring addition (XOR of term sets).
    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.m != other.m {
            return Err(Error::MismatchedVarCount {
                left: self.m,
                right: other.m,
            });
        }
        let mut out = self.clone();
        for &t in &other.terms {
            out.toggle(t);
        }
        Ok(out)
    }

    /// Ring multiplication in the quotient (squarefree) ring: term products
    /// are support unions, duplicate results cancel.
    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.m != other.m {
            return Err(Error::MismatchedVarCount {
                left: self.m,
                right: other.m,
            });
        }
        let mut out = Polynomial::zero(self.m)?;
        for &a in &self.terms {
            for &b in &other.terms {
                out.toggle(a | b);
            }
        }
        Ok(out)
    }

    /// Evaluation via the Kronecker butterfly.
    pub fn ev(&self) -> Result<EvalVector> {
        let mut bits = EvalVector::zeros(self.m)?;
        for &t in &self.terms {
            bits.set(t as u64, true);
        }
        bits.zeta_in_place();
        bits.reverse_in_place();
        Ok(bits)
    }

    /// Hamming weight of the evaluation.
    pub fn weight(&self) -> Result<u64> {
        Ok(self.ev()?.weight())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, mask) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let mono = Monomial::new(self.m, *mask).expect("stored masks are valid");
            write!(f, "{mono}")?;
        }
        Ok(())
    }
}

/// The weight `w_μ = 2^{m+1-r} − 2^{m+1-r-μ}` of the sub-`2 w_min` ladder.
pub fn wmu(m: u32, r: u32, mu: u32) -> u64 {
    debug_assert!(mu >= 1 && r + mu <= m + 1);
    (1u64 << (m + 1 - r)) - (1u64 << (m + 1 - r - mu))
}

/// Generator matrix rows of `C(I)`, ordered by ascending row index of
/// `G_{2^m}` (descending monomial mask).
pub fn generator_matrix(set: &DecreasingSet) -> Result<Vec<EvalVector>> {
    let mut rows = Vec::with_capacity(set.dimension());
    for &mask in set.masks().iter().rev() {
        let mono = Monomial::new(set.m(), mask)?;
        rows.push(EvalVector::from_monomial(&mono)?);
    }
    Ok(rows)
}

/// Exact weight distribution of the full code by a Gray-code row-XOR walk
/// over all `2^K` messages, including the zero codeword.
pub fn full_weight_distribution(
    set: &DecreasingSet,
    cap_k: u32,
) -> Result<BTreeMap<u64, u128>> {
    let k = set.dimension() as u32;
    if k > cap_k {
        return Err(Error::CapExceeded { needed: k, cap: cap_k });
    }
    let rows = generator_matrix(set)?;
    let mut counts: BTreeMap<u64, u128> = BTreeMap::new();
    let mut current = EvalVector::zeros(set.m())?;
    *counts.entry(0).or_insert(0) += 1;
    for msg in 1u64..1u64 << k {
        let flip = msg.trailing_zeros() as usize;
        current.xor_assign(&rows[flip]);
        *counts.entry(current.weight()).or_insert(0) += 1;
    }
    Ok(counts)
}
