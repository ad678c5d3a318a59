//! Distinguished braids: the pure generators `A_{i,j}`, the half and full
//! twists, the block crossing `ω_n` and the four-strand block swap `Ω`.

use super::word::{BraidWord, Letter};
use crate::error::{Error, Result};

fn run(from: usize, to: usize, positive: bool) -> impl Iterator<Item = Letter> {
    // inclusive, walking up or down
    let v: Vec<usize> = if from <= to {
        (from..=to).collect()
    } else {
        (to..=from).rev().collect()
    };
    v.into_iter().map(move |index| Letter { index, positive })
}

/// `A_{i,j} = σ_{j−1}⋯σ_{i+1} σ_i² σ_{i+1}⁻¹⋯σ_{j−1}⁻¹` on `m` strands.
pub fn a_gen(i: usize, j: usize, m: usize) -> Result<BraidWord> {
    if !(1 <= i && i < j && j <= m) {
        return Err(Error::Index(format!(
            "A_{{{i},{j}}} needs 1 <= i < j <= {m}"
        )));
    }
    let mut letters = Vec::with_capacity(2 * (j - i));
    if j - 1 > i {
        letters.extend(run(j - 1, i + 1, true));
    }
    letters.push(Letter::pos(i));
    letters.push(Letter::pos(i));
    if j - 1 > i {
        letters.extend(run(i + 1, j - 1, false));
    }
    BraidWord::new(m, letters)
}

/// Cross-block form of `A_{i,j}` on `2n` strands, for `i ≤ n < j`:
///
/// `(σ_{j−1}⋯σ_{n+1})(σ_i⁻¹⋯σ_{n−1}⁻¹) σ_n² (σ_{n−1}⋯σ_i)(σ_{n+1}⁻¹⋯σ_{j−1}⁻¹)`,
/// the conjugate of `A_{n,n+1}` by the word that brings strand `i` next to
/// strand `n` and strand `j` next to strand `n + 1`.
///
/// Equal in the group to [`a_gen`]`(i, j, 2n)` but a different word.
pub fn a_gen_cross(i: usize, j: usize, n: usize) -> Result<BraidWord> {
    if n == 0 || !(1 <= i && i <= n && n < j && j <= 2 * n) {
        return Err(Error::Index(format!(
            "cross-block A_{{{i},{j}}} needs 1 <= i <= {n} < j <= {}",
            2 * n
        )));
    }
    let mut letters = Vec::new();
    if j > n + 1 {
        letters.extend(run(j - 1, n + 1, true));
    }
    if i < n {
        letters.extend(run(i, n - 1, false));
    }
    letters.push(Letter::pos(n));
    letters.push(Letter::pos(n));
    if i < n {
        letters.extend(run(n - 1, i, true));
    }
    if j > n + 1 {
        letters.extend(run(n + 1, j - 1, false));
    }
    BraidWord::new(2 * n, letters)
}

/// Half twist `Δ_m = (σ₁⋯σ_{m−1})(σ₁⋯σ_{m−2})⋯(σ₁σ₂)(σ₁)`.
pub fn delta(m: usize) -> BraidWord {
    assert!(m >= 1, "delta needs at least one strand");
    let mut letters = Vec::with_capacity(m * (m - 1) / 2);
    for top in (1..m).rev() {
        letters.extend((1..=top).map(Letter::pos));
    }
    BraidWord::from_letters_unchecked(m, letters)
}

/// Full twist as a product of pure generators,
/// `A_{1,2}(A_{1,3}A_{2,3})⋯(A_{1,m}⋯A_{m−1,m})`.
pub fn full_twist(m: usize) -> BraidWord {
    assert!(m >= 1, "full twist needs at least one strand");
    let mut letters = Vec::new();
    for j in 2..=m {
        for i in 1..j {
            letters.extend_from_slice(a_gen(i, j, m).expect("valid range").letters());
        }
    }
    BraidWord::from_letters_unchecked(m, letters)
}

/// Positive block crossing on `2n` strands,
/// `ω_n = ∏_{j=0}^{n−1} ∏_{i=n−j}^{2n−1−j} σ_i`.
///
/// Sends strand `i` to `i + n mod 2n`; each strand of the first block
/// crosses each strand of the second block exactly once.
pub fn omega(n: usize) -> BraidWord {
    assert!(n >= 1, "omega needs a positive block size");
    let mut letters = Vec::with_capacity(n * n);
    for j in 0..n {
        letters.extend((n - j..=2 * n - 1 - j).map(Letter::pos));
    }
    BraidWord::from_letters_unchecked(2 * n, letters)
}

/// `Ω = σ₂σ₃σ₁⁻¹σ₂⁻¹` on four strands: swaps the blocks `{1,2}`, `{3,4}` and is
/// inverted by conjugation with `Δ₄`.
pub fn reversing_swap() -> BraidWord {
    BraidWord::from_letters_unchecked(
        4,
        vec![
            Letter::pos(2),
            Letter::pos(3),
            Letter::neg(1),
            Letter::neg(2),
        ],
    )
}
