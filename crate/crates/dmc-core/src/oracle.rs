//! Independent reference implementations used to cross-check the fast paths.
//!
//! Everything here follows definitions directly (pointwise evaluation,
//! exhaustive searches, permutation-expansion determinants) and deliberately
//! avoids the butterfly, top-alignment, greedy-shift and elimination code it
//! is used to verify.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::code::DecreasingSet;
use crate::eval::{EvalVector, Polynomial};
use crate::monomial::Monomial;

/// SplitMix64 step; deterministic seeds keep the randomized suites
/// reproducible.
pub fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Pointwise evaluation from the definition: bit `k` holds
/// `P(bin(2^m − 1 − k))`.
pub fn ev_naive(p: &Polynomial) -> EvalVector {
    let m = p.m();
    let mut out = EvalVector::zeros(m).expect("oracle sizes are small");
    for k in 0..1u64 << m {
        let mut acc = false;
        for mask in p.term_masks() {
            // The point bin(2^m-1-k) sets x_t = 1 exactly when bit t of k is 0.
            if k & mask as u64 == 0 {
                acc = !acc;
            }
        }
        out.set(k, acc);
    }
    out
}

/// Weight distribution by direct per-message encoding, no Gray walk.
pub fn weight_distribution_naive(set: &DecreasingSet) -> BTreeMap<u64, u128> {
    let rows: Vec<EvalVector> = set
        .iter()
        .map(|f| ev_naive(&Polynomial::monomial(&f)))
        .collect();
    let k = rows.len();
    assert!(k <= 20, "naive oracle is for small codes");
    let mut counts = BTreeMap::new();
    for msg in 0..1u64 << k {
        let mut word = EvalVector::zeros(set.m()).expect("small m");
        for (bit, row) in rows.iter().enumerate() {
            if msg >> bit & 1 == 1 {
                word.xor_assign(row);
            }
        }
        *counts.entry(word.weight()).or_insert(0u128) += 1;
    }
    counts
}

/// `f ⪯ g` by searching every equal-degree divisor `g*` of `g` for
/// `f ⪯_sh g*`.
pub fn leq_brute_force(f: &Monomial, g: &Monomial) -> bool {
    let fi = f.indices();
    let s = fi.len();
    let gi = g.indices();
    if s > gi.len() {
        return false;
    }
    subsets_of_size(&gi, s)
        .into_iter()
        .any(|choice| fi.iter().zip(choice.iter()).all(|(a, b)| a <= b))
}

/// Shift witness by exhaustive search: a degree-`l` divisor of the free set
/// whose sorted indices are strictly below those of `h_star`.
pub fn shift_brute_force(h_star: &Monomial, free_mask: u32) -> Option<Monomial> {
    let target = h_star.indices();
    let l = target.len();
    let free = Monomial::new(h_star.m(), free_mask)
        .expect("free mask fits m")
        .indices();
    for choice in subsets_of_size(&free, l) {
        if choice.iter().zip(target.iter()).all(|(s, i)| s < i) {
            return Some(
                Monomial::from_indices(h_star.m(), &choice).expect("indices fit m"),
            );
        }
    }
    None
}

fn subsets_of_size(items: &[u32], size: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if size > items.len() {
        return out;
    }
    let mut choice = Vec::with_capacity(size);
    pick(items, size, 0, &mut choice, &mut out);
    out
}

fn pick(
    items: &[u32],
    size: usize,
    from: usize,
    choice: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if choice.len() == size {
        out.push(choice.clone());
        return;
    }
    for idx in from..items.len() {
        choice.push(items[idx]);
        pick(items, size, idx + 1, choice, out);
        choice.pop();
    }
}

/// Matrix rank over `F_2` as the size of the largest non-vanishing minor,
/// with determinants by permutation expansion.
pub fn rank_by_minors(rows: &[u64], cols: u32) -> u32 {
    let n = rows.len();
    let col_list: Vec<u32> = (0..cols).collect();
    let row_list: Vec<u32> = (0..n as u32).collect();
    let max = n.min(cols as usize);
    for size in (1..=max).rev() {
        for rsel in subsets_of_size(&row_list, size) {
            for csel in subsets_of_size(&col_list, size) {
                if determinant_f2(rows, &rsel, &csel) {
                    return size as u32;
                }
            }
        }
    }
    0
}

fn determinant_f2(rows: &[u64], rsel: &[u32], csel: &[u32]) -> bool {
    let n = rsel.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = false;
    permute(&mut perm, 0, &mut |p| {
        let mut prod = true;
        for (i, &pi) in p.iter().enumerate() {
            if rows[rsel[i] as usize] >> csel[pi] & 1 == 0 {
                prod = false;
                break;
            }
        }
        if prod {
            total = !total;
        }
    });
    total
}

fn permute(perm: &mut Vec<usize>, at: usize, visit: &mut impl FnMut(&[usize])) {
    if at == perm.len() {
        visit(perm);
        return;
    }
    for i in at..perm.len() {
        perm.swap(at, i);
        permute(perm, at + 1, visit);
        perm.swap(at, i);
    }
}

/// Random polynomial with up to `max_terms` toggled terms.
pub fn random_polynomial(m: u32, max_terms: u32, state: &mut u64) -> Polynomial {
    let mut p = Polynomial::zero(m).expect("small m");
    let count = splitmix64(state) % (max_terms as u64 + 1);
    let full = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
    for _ in 0..count {
        let mask = (splitmix64(state) as u32) & full;
        let mono = Polynomial::monomial(&Monomial::new(m, mask).expect("masked"));
        p = p.add(&mono).expect("same m");
    }
    p
}

/// Random non-empty decreasing set from a few random generators, retried
/// until the dimension fits `max_k`.
pub fn random_decreasing_set(m: u32, max_k: usize, state: &mut u64) -> DecreasingSet {
    let full = (1u32 << m) - 1;
    loop {
        let gen_count = 1 + splitmix64(state) % 2;
        let mut gens = Vec::new();
        for _ in 0..gen_count {
            let mask = (splitmix64(state) as u32) & full;
            gens.push(Monomial::new(m, mask).expect("masked"));
        }
        let set = DecreasingSet::closure(m, &gens).expect("small m");
        let r = set.r_max().unwrap_or(0);
        if set.dimension() <= max_k && r >= 1 && r < m {
            return set;
        }
    }
}
