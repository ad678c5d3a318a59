//! The subgroups `P_{2n} ⊂ B_{n,n} ⊂ B²_{n,n} ⊂ B_{2n}` as predicates on braid
//! words, the block-swap sign `π: B²_{n,n} → ℤ₂` and the cross-block parity
//! `ε: B_{n,n} → ℤ₂`.

mod presentation;

pub use presentation::{
    bnn_generators, bnn_relations, BnnGenerator, GenLetter, Relation, RelationFamily,
};

use crate::braid::{BraidWord, Permutation};
use crate::error::{Error, Result};
use crate::z2::Z2;

/// Two blocks of `n` strands: `{1..n}` and `{n+1..2n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MixedContext {
    n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum BlockAction {
    Preserves,
    Swaps,
    Mixes,
}

impl MixedContext {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Index("block size must be positive".into()));
        }
        Ok(MixedContext { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn strands(&self) -> usize {
        2 * self.n
    }

    /// Context for the `k`-fold cable, blocks of `n·k` strands.
    pub fn inflated(&self, k: usize) -> Result<Self> {
        MixedContext::new(self.n * k)
    }

    /// `true` for the first block. One-based positions.
    pub fn in_first_block(&self, position: usize) -> bool {
        position <= self.n
    }

    fn check(&self, w: &BraidWord) -> Result<()> {
        if w.strands() != self.strands() {
            return Err(Error::StrandMismatch {
                left: w.strands(),
                right: self.strands(),
            });
        }
        Ok(())
    }

    fn block_action(&self, p: &Permutation) -> BlockAction {
        let first_stays = (1..=self.n).all(|i| p.image(i) <= self.n);
        if first_stays {
            return BlockAction::Preserves;
        }
        let first_moves = (1..=self.n).all(|i| p.image(i) > self.n);
        if first_moves {
            BlockAction::Swaps
        } else {
            BlockAction::Mixes
        }
    }

    /// Membership in `B_{n,n}`: each block is mapped onto itself.
    pub fn in_bnn(&self, w: &BraidWord) -> Result<bool> {
        self.check(w)?;
        Ok(self.block_action(&w.permutation()) == BlockAction::Preserves)
    }

    /// Membership in `B²_{n,n}`: the blocks are preserved or exchanged.
    pub fn in_bnn2(&self, w: &BraidWord) -> Result<bool> {
        self.check(w)?;
        Ok(self.block_action(&w.permutation()) != BlockAction::Mixes)
    }

    /// `0` if the blocks are preserved, `1` if they are swapped.
    pub fn pi_sign(&self, w: &BraidWord) -> Result<Z2> {
        self.check(w)?;
        match self.block_action(&w.permutation()) {
            BlockAction::Preserves => Ok(Z2::ZERO),
            BlockAction::Swaps => Ok(Z2::ONE),
            BlockAction::Mixes => Err(Error::NotInB2nn { n: self.n }),
        }
    }

    /// Signed crossing counts between each strand of the first block and each
    /// strand of the second block, indexed `[a][b]` by starting positions.
    fn cross_block_crossings(&self, w: &BraidWord) -> Vec<Vec<i64>> {
        let n = self.n;
        let mut at: Vec<usize> = (0..2 * n).collect();
        let mut counts = vec![vec![0i64; n]; n];
        for l in w.letters() {
            let (x, y) = (at[l.index - 1], at[l.index]);
            let (first, second) = if x < n { (x, y) } else { (y, x) };
            if first < n && second >= n {
                counts[first][second - n] += l.sign();
            }
            at.swap(l.index - 1, l.index);
        }
        counts
    }

    /// Parity of the total linking between the two blocks: half the signed
    /// number of crossings between strands from different blocks, mod 2.
    ///
    /// On `σ_k` (`k ≠ n`) this is `0`, on `A_{i,j}` it is `1` exactly when
    /// `i` and `j` lie in different blocks.
    pub fn epsilon(&self, w: &BraidWord) -> Result<Z2> {
        if !self.in_bnn(w)? {
            return Err(Error::NotInBnn { n: self.n });
        }
        let counts = self.cross_block_crossings(w);
        let mut total = 0i64;
        for (a, row) in counts.iter().enumerate() {
            for (b, &c) in row.iter().enumerate() {
                // start and end orders agree, so every pair crosses an even number of times
                if c % 2 != 0 {
                    return Err(Error::OddCrossBlockCrossings {
                        first: a + 1,
                        second: self.n + b + 1,
                    });
                }
                total += c / 2;
            }
        }
        Ok(Z2::from_parity(total))
    }
}
