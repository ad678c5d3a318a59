//! Word problem for the Artin braid group via the Garside left normal form.
//!
//! A braid is written as `Δ^inf · s₁ ⋯ s_k` with each `sᵢ` a permutation braid
//! (a positive braid in which any two strands cross at most once) that is
//! neither trivial nor `Δ`, and each consecutive pair left-weighted. Two words
//! represent the same braid iff their normal forms are identical.
//!
//! Permutation braids are handled purely as permutation arrays; words are only
//! materialised on request.

use std::fmt;

use crate::braid::{BraidWord, Letter, Permutation};
use crate::error::{Error, Result};

/// A permutation braid, stored as its permutation together with the inverse.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleBraid {
    // zero-based: perm[start] = end, inv[end] = start
    perm: Vec<u32>,
    inv: Vec<u32>,
}

impl SimpleBraid {
    pub fn identity(m: usize) -> Self {
        let id: Vec<u32> = (0..m as u32).collect();
        SimpleBraid {
            perm: id.clone(),
            inv: id,
        }
    }

    pub fn delta(m: usize) -> Self {
        let rev: Vec<u32> = (0..m as u32).rev().collect();
        SimpleBraid {
            perm: rev.clone(),
            inv: rev,
        }
    }

    /// The permutation braid of `σ_i` (one-based).
    pub fn generator(m: usize, i: usize) -> Self {
        let mut s = SimpleBraid::identity(m);
        s.right_mul_generator(i - 1);
        s
    }

    /// `Δ σ_i⁻¹`, the left complement of `σ_i` in `Δ`.
    fn delta_over_generator(m: usize, i: usize) -> Self {
        let mut s = SimpleBraid::delta(m);
        s.right_mul_generator(i - 1);
        s
    }

    /// The unique permutation braid inducing `p`.
    pub fn from_permutation(p: &Permutation) -> Self {
        let perm = p.zero_based().to_vec();
        let inv = p.inverse().zero_based().to_vec();
        SimpleBraid { perm, inv }
    }

    pub fn strands(&self) -> usize {
        self.perm.len()
    }

    pub fn permutation(&self) -> Permutation {
        Permutation::from_zero_based(self.perm.clone())
    }

    /// Word length, equal to the inversion count of the permutation.
    pub fn len(&self) -> usize {
        self.permutation().inversions()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    pub fn is_delta(&self) -> bool {
        let m = self.perm.len() as u32;
        self.perm
            .iter()
            .enumerate()
            .all(|(i, &x)| x == m - 1 - i as u32)
    }

    /// One-based `i` with `σ_i` a left divisor: the strands starting at
    /// `i` and `i + 1` cross.
    pub fn starting_set(&self) -> Vec<usize> {
        (0..self.perm.len().saturating_sub(1))
            .filter(|&i| self.perm[i] > self.perm[i + 1])
            .map(|i| i + 1)
            .collect()
    }

    /// One-based `i` with `σ_i` a right divisor: the strands ending at
    /// `i` and `i + 1` cross.
    pub fn finishing_set(&self) -> Vec<usize> {
        (0..self.inv.len().saturating_sub(1))
            .filter(|&i| self.inv[i] > self.inv[i + 1])
            .map(|i| i + 1)
            .collect()
    }

    /// A positive word for this permutation braid, peeling left divisors
    /// with the smallest index first.
    pub fn word(&self) -> BraidWord {
        let m = self.perm.len();
        let mut p = self.perm.clone();
        let mut letters = Vec::new();
        'outer: loop {
            for i in 0..m.saturating_sub(1) {
                if p[i] > p[i + 1] {
                    letters.push(Letter::pos(i + 1));
                    p.swap(i, i + 1);
                    continue 'outer;
                }
            }
            break;
        }
        BraidWord::new(m.max(1), letters).expect("indices below strand count")
    }

    /// Conjugation by `Δ`: `σ_i ↦ σ_{m−i}`.
    fn flipped(&self) -> Self {
        let m = self.perm.len() as u32;
        let mut perm = vec![0; m as usize];
        let mut inv = vec![0; m as usize];
        for x in 0..m {
            let y = m - 1 - self.perm[(m - 1 - x) as usize];
            perm[x as usize] = y;
            inv[y as usize] = x;
        }
        SimpleBraid { perm, inv }
    }

    /// `self ← self · σ_{i+1}` for zero-based `i`; valid only when the strands
    /// ending at `i`, `i + 1` have not crossed.
    fn right_mul_generator(&mut self, i: usize) {
        let a = self.inv[i] as usize;
        let b = self.inv[i + 1] as usize;
        self.perm[a] = i as u32 + 1;
        self.perm[b] = i as u32;
        self.inv.swap(i, i + 1);
    }

    /// `self ← σ_{i+1}⁻¹ · self` for zero-based `i`; valid only when `σ_{i+1}`
    /// is a left divisor.
    fn left_div_generator(&mut self, i: usize) {
        self.perm.swap(i, i + 1);
        self.inv[self.perm[i] as usize] = i as u32;
        self.inv[self.perm[i + 1] as usize] = i as u32 + 1;
    }
}

impl fmt::Debug for SimpleBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Simple{}", self.permutation())
    }
}

/// Rewrites the pair `(s, t)` in place so that it is left-weighted, moving
/// every generator that can travel from the front of `t` to the back of `s`.
/// Returns whether anything moved.
fn left_weight(s: &mut SimpleBraid, t: &mut SimpleBraid) -> bool {
    let m = s.perm.len();
    if m < 2 {
        return false;
    }
    let movable = |s: &SimpleBraid, t: &SimpleBraid, i: usize| {
        t.perm[i] > t.perm[i + 1] && s.inv[i] < s.inv[i + 1]
    };
    let mut changed = false;
    let mut stack: Vec<usize> = (0..m - 1).collect();
    while let Some(i) = stack.pop() {
        if movable(s, t, i) {
            s.right_mul_generator(i);
            t.left_div_generator(i);
            changed = true;
            if i > 0 {
                stack.push(i - 1);
            }
            if i + 2 < m {
                stack.push(i + 1);
            }
        }
    }
    changed
}

/// `Δ^inf · factors`, the canonical representative of a braid.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    strands: usize,
    inf: i64,
    factors: Vec<SimpleBraid>,
}

impl NormalForm {
    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Power of `Δ`.
    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn factors(&self) -> &[SimpleBraid] {
        &self.factors
    }

    /// Number of non-`Δ` factors.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    /// Checks the structural invariants: factors are proper and each
    /// consecutive pair is left-weighted.
    pub fn is_canonical(&self) -> bool {
        let proper = self
            .factors
            .iter()
            .all(|f| f.strands() == self.strands && !f.is_identity() && !f.is_delta());
        let weighted = self.factors.windows(2).all(|w| {
            let fin = w[0].finishing_set();
            w[1].starting_set().iter().all(|i| fin.contains(i))
        });
        proper && weighted
    }

    /// Expands back to a word: `Δ^inf` followed by the factor words.
    pub fn to_word(&self) -> BraidWord {
        let d = SimpleBraid::delta(self.strands).word();
        let mut out = d.pow(self.inf);
        for f in &self.factors {
            out = out.concat(&f.word()).expect("same strand count");
        }
        out
    }

    /// Appends a simple factor on the right and restores the left normal form
    /// with one right-to-left pass.
    fn push(&mut self, x: SimpleBraid) {
        if x.is_identity() {
            return;
        }
        self.factors.push(x);
        let mut k = self.factors.len() - 1;
        while k > 0 {
            let (left, right) = self.factors.split_at_mut(k);
            if !left_weight(&mut left[k - 1], &mut right[0]) {
                break;
            }
            k -= 1;
        }
        while self.factors.last().is_some_and(|f| f.is_identity()) {
            self.factors.pop();
        }
        let leading = self.factors.iter().take_while(|f| f.is_delta()).count();
        if leading > 0 {
            self.factors.drain(..leading);
            self.inf += leading as i64;
        }
        debug_assert!(self.factors.iter().all(|f| !f.is_identity()));
    }
}

impl fmt::Debug for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NormalForm(inf={}, {:?})", self.inf, self.factors)
    }
}

/// `inf` on the first line, then one factor permutation per line.
impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "inf: {}", self.inf)?;
        for s in &self.factors {
            write!(f, "\n{}", s.permutation())?;
        }
        Ok(())
    }
}

/// Left normal form of `w`.
///
/// Each `σ_i⁻¹` is written as `Δ⁻¹ · (Δσ_i⁻¹)`; the `Δ⁻¹` are collected on the
/// left by flipping every factor they pass, and the remaining positive
/// factors are multiplied in one at a time.
pub fn normal_form(w: &BraidWord) -> NormalForm {
    let m = w.strands();
    let letters = w.letters();
    let mut nf = NormalForm {
        strands: m,
        inf: 0,
        factors: Vec::new(),
    };
    if m < 2 {
        return nf;
    }
    // negatives strictly to the right of each letter decide whether it is flipped
    let mut flips = vec![false; letters.len()];
    let mut parity = false;
    for (k, l) in letters.iter().enumerate().rev() {
        flips[k] = parity;
        if !l.positive {
            parity = !parity;
        }
    }
    nf.inf = -(letters.iter().filter(|l| !l.positive).count() as i64);
    for (l, &flip) in letters.iter().zip(&flips) {
        let s = if l.positive {
            SimpleBraid::generator(m, l.index)
        } else {
            SimpleBraid::delta_over_generator(m, l.index)
        };
        nf.push(if flip { s.flipped() } else { s });
    }
    nf
}

/// Equality of the braids represented by two words.
pub fn are_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch {
            left: a.strands(),
            right: b.strands(),
        });
    }
    Ok(normal_form(a) == normal_form(b))
}

pub fn is_trivial(w: &BraidWord) -> bool {
    normal_form(w).is_identity()
}
