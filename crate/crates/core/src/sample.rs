//! Seeded random braid words and Artin-relation rewrites for randomized checks.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::braid::{delta, BraidWord, Letter};
use crate::mixed::{bnn_generators, BnnGenerator};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 0x5eed_b4a1d;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform word of length `0..=max_len` on `strands ≥ 2` strands.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, strands: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    random_word_of_len(rng, strands, len)
}

pub fn random_word_of_len<R: Rng + ?Sized>(rng: &mut R, strands: usize, len: usize) -> BraidWord {
    assert!(strands >= 2);
    let letters = (0..len)
        .map(|_| Letter {
            index: rng.gen_range(1..strands),
            positive: rng.gen_bool(0.5),
        })
        .collect();
    BraidWord::new(strands, letters).expect("indices in range")
}

/// Product of `len` random generators of `B_{n,n}` (and inverses), `n ≥ 2`.
pub fn random_bnn_word<R: Rng + ?Sized>(rng: &mut R, n: usize, len: usize) -> BraidWord {
    let gens = bnn_generators(n);
    let mut out = BraidWord::identity(2 * n);
    for _ in 0..len {
        let g: BnnGenerator = gens[rng.gen_range(0..gens.len())];
        let w = g.word(n).expect("generator is valid");
        let w = if rng.gen_bool(0.5) { w } else { w.inverse() };
        out = out.concat(&w).expect("same strands");
    }
    out
}

/// A random element of `B²_{n,n}`: a `B_{n,n}` word, times `Δ_{2n}` half the time.
pub fn random_b2nn_word<R: Rng + ?Sized>(rng: &mut R, n: usize, len: usize) -> BraidWord {
    let b = random_bnn_word(rng, n, len);
    if rng.gen_bool(0.5) {
        let d = delta(2 * n);
        let d = if rng.gen_bool(0.5) { d } else { d.inverse() };
        let (x, y) = if rng.gen_bool(0.5) {
            (&b, &d)
        } else {
            (&d, &b)
        };
        x.concat(y).expect("same strands")
    } else {
        b
    }
}

/// Applies one rewrite that preserves the braid: a braid relation
/// `σᵢσᵢ₊₁σᵢ ↔ σᵢ₊₁σᵢσᵢ₊₁` (either sign), a far commutation, or the insertion
/// of a cancelling pair.
pub fn random_artin_rewrite<R: Rng + ?Sized>(rng: &mut R, w: &BraidWord) -> BraidWord {
    let letters = w.letters();
    let m = w.strands();
    let mut sites: Vec<(usize, u8)> = Vec::new();
    for k in 0..letters.len() {
        if k + 1 < letters.len() {
            let (a, b) = (letters[k], letters[k + 1]);
            if a.index.abs_diff(b.index) >= 2 {
                sites.push((k, 0));
            }
        }
        if k + 2 < letters.len() {
            let (a, b, c) = (letters[k], letters[k + 1], letters[k + 2]);
            if a == c && a.positive == b.positive && a.index.abs_diff(b.index) == 1 {
                sites.push((k, 1));
            }
        }
    }
    let mut out = letters.to_vec();
    if sites.is_empty() || m < 2 || rng.gen_bool(0.2) {
        if m >= 2 {
            let l = Letter {
                index: rng.gen_range(1..m),
                positive: rng.gen_bool(0.5),
            };
            let at = rng.gen_range(0..=out.len());
            out.splice(at..at, [l, l.inverse()]);
        }
    } else {
        let (k, kind) = sites[rng.gen_range(0..sites.len())];
        if kind == 0 {
            out.swap(k, k + 1);
        } else {
            let (a, b) = (out[k], out[k + 1]);
            out[k] = b;
            out[k + 1] = a;
            out[k + 2] = b;
        }
    }
    BraidWord::new(m, out).expect("same indices")
}
