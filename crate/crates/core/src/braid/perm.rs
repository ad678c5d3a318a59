use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// A bijection of `{1..m}`.
///
/// `image(i)` is the final position of the strand that starts at position `i`.
/// Products follow word order: `&p * &q` applies `p` first, then `q`, so the
/// permutation of a concatenated braid word is the product of the parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // zero-based images
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(size: usize) -> Self {
        Permutation {
            images: (0..size as u32).collect(),
        }
    }

    /// Builds a permutation from one-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let size = images.len();
        let mut seen = vec![false; size];
        for &x in images {
            if x == 0 || x > size {
                return Err(Error::InvalidPermutation(format!(
                    "image {x} outside 1..={size}"
                )));
            }
            if std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::InvalidPermutation(format!("repeated image {x}")));
            }
        }
        Ok(Permutation {
            images: images.iter().map(|&x| (x - 1) as u32).collect(),
        })
    }

    /// Product of disjoint or overlapping transpositions, applied left to right.
    pub fn from_transpositions(size: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut p = Permutation::identity(size);
        for &(a, b) in pairs {
            if a == 0 || b == 0 || a > size || b > size {
                return Err(Error::InvalidPermutation(format!(
                    "transposition ({a} {b}) outside 1..={size}"
                )));
            }
            p = &p * &Permutation::transposition(size, a, b);
        }
        Ok(p)
    }

    pub(crate) fn transposition(size: usize, a: usize, b: usize) -> Self {
        let mut p = Permutation::identity(size);
        p.images.swap(a - 1, b - 1);
        p
    }

    /// Reversal `i ↦ m + 1 − i`, the permutation of the half twist.
    pub fn reversal(size: usize) -> Self {
        Permutation {
            images: (0..size as u32).rev().collect(),
        }
    }

    pub(crate) fn from_zero_based(images: Vec<u32>) -> Self {
        Permutation { images }
    }

    pub(crate) fn zero_based(&self) -> &[u32] {
        &self.images
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// One-based image of the one-based point `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// One-based images `[p(1), .., p(m)]`.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size(), "permutation size mismatch");
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    /// Number of pairs `i < j` with `p(i) > p(j)`.
    pub fn inversions(&self) -> usize {
        let n = self.images.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }
}

impl Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.then(rhs)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images())
    }
}

/// One-line notation: `[3 4 1 2]`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.images().iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(&[1, 1]).is_err());
        assert!(Permutation::from_images(&[0, 1]).is_err());
        assert!(Permutation::from_images(&[3, 1]).is_err());
        assert!(Permutation::from_images(&[2, 3, 1]).is_ok());
    }

    #[test]
    fn product_is_left_to_right() {
        let p = Permutation::from_images(&[2, 3, 1]).unwrap();
        let q = Permutation::from_images(&[1, 3, 2]).unwrap();
        // 1 -p-> 2 -q-> 3
        assert_eq!((&p * &q).image(1), 3);
        assert_eq!((&p * &p.inverse()), Permutation::identity(3));
    }

    #[test]
    fn reversal_inversions() {
        for m in 1..8 {
            assert_eq!(Permutation::reversal(m).inversions(), m * (m - 1) / 2);
        }
    }

    #[test]
    fn display_one_line() {
        let p = Permutation::from_transpositions(4, &[(1, 3), (2, 4)]).unwrap();
        assert_eq!(p.to_string(), "[3 4 1 2]");
    }
}
