//! Oracles that share no code with the library's word-problem engine.
#![allow(dead_code)]

use mixbraid::BraidWord;

const P: u64 = 2_305_843_009_213_693_951; // 2^61 - 1

fn mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn add(a: u64, b: u64) -> u64 {
    (a + b) % P
}

fn sub(a: u64, b: u64) -> u64 {
    (a + P - b) % P
}

fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    r
}

/// Unreduced Burau matrix of a word, evaluated at `t` over `GF(2^61 - 1)`.
/// Row operations are applied letter by letter, left to right.
pub fn burau(w: &BraidWord, t: u64) -> Vec<Vec<u64>> {
    let m = w.strands();
    let tinv = pow(t, P - 2);
    let mut mat = vec![vec![0u64; m]; m];
    for (i, row) in mat.iter_mut().enumerate() {
        row[i] = 1;
    }
    // Right-multiplying by the block [[1-t, t], [1, 0]] (or its inverse
    // [[0, 1], [1/t, 1 - 1/t]]) in columns i, i+1.
    for l in w.letters() {
        let i = l.index - 1;
        for row in mat.iter_mut() {
            let (x, y) = (row[i], row[i + 1]);
            if l.positive {
                row[i] = add(mul(x, sub(1, t)), y);
                row[i + 1] = mul(x, t);
            } else {
                row[i] = mul(y, tinv);
                row[i + 1] = add(x, mul(y, sub(1, tinv)));
            }
        }
    }
    mat
}

/// Fixed evaluation points for the Burau oracle.
pub const BURAU_POINTS: [u64; 3] = [3, 1_234_567_891, 987_654_321_987];

/// Equal Burau matrices at every evaluation point and equal permutations.
pub fn oracle_equal(a: &BraidWord, b: &BraidWord) -> bool {
    a.strands() == b.strands()
        && a.permutation() == b.permutation()
        && BURAU_POINTS.iter().all(|&t| burau(a, t) == burau(b, t))
}

/// Permutation of a cabled braid computed directly from the base permutation:
/// strand `r` of block `i` ends at strand `r` of block `π(i)`.
pub fn inflated_permutation(images: &[usize], k: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(images.len() * k);
    for &target in images {
        for r in 1..=k {
            out.push((target - 1) * k + r);
        }
    }
    out
}

/// Block-swap sign read from a permutation, without the library.
pub fn swaps_blocks(images: &[usize], n: usize) -> Option<bool> {
    let first = |p: usize| p <= n;
    let all_stay = (1..=2 * n).all(|p| first(p) == first(images[p - 1]));
    let all_swap = (1..=2 * n).all(|p| first(p) != first(images[p - 1]));
    match (all_stay, all_swap) {
        (true, _) => Some(false),
        (_, true) => Some(true),
        _ => None,
    }
}
