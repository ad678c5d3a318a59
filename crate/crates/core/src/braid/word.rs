use std::fmt;

use super::perm::Permutation;
use crate::error::{Error, Result};

/// A signed Artin generator `σ_index^{±1}`, with `index` one-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub index: usize,
    pub positive: bool,
}

impl Letter {
    pub fn pos(index: usize) -> Self {
        Letter {
            index,
            positive: true,
        }
    }

    pub fn neg(index: usize) -> Self {
        Letter {
            index,
            positive: false,
        }
    }

    pub fn inverse(self) -> Self {
        Letter {
            index: self.index,
            positive: !self.positive,
        }
    }

    pub fn sign(self) -> i64 {
        if self.positive {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "s{}", self.index)
        } else {
            write!(f, "s{}^-1", self.index)
        }
    }
}

/// A word in the Artin generators on a fixed number of strands.
///
/// Words are kept exactly as built; nothing is cancelled until
/// [`BraidWord::free_reduce`] is called.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Index("a braid needs at least one strand".into()));
        }
        if let Some(bad) = letters.iter().find(|l| l.index == 0 || l.index >= strands) {
            return Err(Error::Index(format!(
                "generator s{} is not defined on {strands} strands",
                bad.index
            )));
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 1, "a braid needs at least one strand");
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// `σ_i` on `strands` strands.
    pub fn generator(strands: usize, i: usize) -> Result<Self> {
        BraidWord::new(strands, vec![Letter::pos(i)])
    }

    /// Builds a word from signed indices: `3` is `σ₃`, `-3` is `σ₃⁻¹`.
    pub fn from_signed(strands: usize, letters: &[i64]) -> Result<Self> {
        let letters = letters
            .iter()
            .map(|&x| {
                if x == 0 {
                    Err(Error::Index("generator index 0".into()))
                } else if x > 0 {
                    Ok(Letter::pos(x as usize))
                } else {
                    Ok(Letter::neg(x.unsigned_abs() as usize))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(strands, letters)
    }

    /// Signed-index form of the letters, inverse of [`BraidWord::from_signed`].
    pub fn signed(&self) -> Vec<i64> {
        self.letters
            .iter()
            .map(|l| l.sign() * l.index as i64)
            .collect()
    }

    pub(crate) fn from_letters_unchecked(strands: usize, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|l| l.index >= 1 && l.index < strands));
        BraidWord { strands, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_strands(&self, other: &BraidWord) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(())
    }

    /// Cancels adjacent `σ_i σ_i⁻¹` and `σ_i⁻¹ σ_i` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match out.last() {
                Some(&top) if top == l.inverse() => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        BraidWord {
            strands: self.strands,
            letters: out,
        }
    }

    /// Literal concatenation `self` then `other`, without cancellation.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check_strands(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Group product `self · other` (read left to right), freely reduced.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        Ok(self.concat(other)?.free_reduce())
    }

    /// Literal product of several words on the same strand count.
    pub fn product<'a, I>(strands: usize, words: I) -> Result<BraidWord>
    where
        I: IntoIterator<Item = &'a BraidWord>,
    {
        let mut acc = BraidWord::identity(strands);
        for w in words {
            acc.check_strands(w)?;
            acc.letters.extend_from_slice(&w.letters);
        }
        Ok(acc)
    }

    /// Reverses the letter order and flips every sign.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `self^k` as a literal word; negative powers use the inverse word.
    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.letters.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// `self · other · self⁻¹`, literal.
    pub fn conjugate(&self, other: &BraidWord) -> Result<BraidWord> {
        BraidWord::product(self.strands, [self, other, &self.inverse()])
    }

    /// The same letters with every index shifted by `offset`, on `strands` strands.
    pub fn shifted(&self, offset: usize, strands: usize) -> Result<BraidWord> {
        BraidWord::new(
            strands,
            self.letters
                .iter()
                .map(|l| Letter {
                    index: l.index + offset,
                    positive: l.positive,
                })
                .collect(),
        )
    }

    /// Image under the projection to the symmetric group: `σ_i ↦ (i, i+1)`.
    pub fn permutation(&self) -> Permutation {
        // track which start position sits at each current position
        let mut at: Vec<u32> = (0..self.strands as u32).collect();
        for l in &self.letters {
            at.swap(l.index - 1, l.index);
        }
        let mut images = vec![0; self.strands];
        for (pos, &start) in at.iter().enumerate() {
            images[start as usize] = pos as u32;
        }
        Permutation::from_zero_based(images)
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    /// Exponent sum, the abelianisation `B_m → ℤ`.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign()).sum()
    }
}

/// Space-separated letters, `e` for the empty word.
impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}
