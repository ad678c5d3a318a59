//! Generators and defining relations of `B_{n,n}` for `n ≥ 2`, written in the
//! Artin generators `σ_k` (`k ≠ n`) and all pure generators `A_{i,j}`.

use std::fmt;

use crate::braid::{a_gen, BraidWord};
use crate::error::Result;
use crate::z2::Z2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BnnGenerator {
    Sigma(usize),
    A(usize, usize),
}

impl BnnGenerator {
    /// The generator as a braid word on `2n` strands.
    pub fn word(self, n: usize) -> Result<BraidWord> {
        match self {
            BnnGenerator::Sigma(k) => BraidWord::generator(2 * n, k),
            BnnGenerator::A(i, j) => a_gen(i, j, 2 * n),
        }
    }

    /// Tabulated value of `ε`: `1` on cross-block `A_{i,j}`, `0` otherwise.
    pub fn epsilon_table(self, n: usize) -> Z2 {
        match self {
            BnnGenerator::Sigma(_) => Z2::ZERO,
            BnnGenerator::A(i, j) => Z2::from((i <= n) != (j <= n)),
        }
    }
}

impl fmt::Display for BnnGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BnnGenerator::Sigma(k) => write!(f, "s{k}"),
            BnnGenerator::A(i, j) => write!(f, "A{i},{j}"),
        }
    }
}

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GenLetter {
    pub generator: BnnGenerator,
    pub positive: bool,
}

fn g(generator: BnnGenerator) -> GenLetter {
    GenLetter {
        generator,
        positive: true,
    }
}

fn gi(generator: BnnGenerator) -> GenLetter {
    GenLetter {
        generator,
        positive: false,
    }
}

fn a(i: usize, j: usize) -> BnnGenerator {
    BnnGenerator::A(i, j)
}

fn s(k: usize) -> BnnGenerator {
    BnnGenerator::Sigma(k)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RelationFamily {
    PureBraid,
    Artin,
    SigmaSquare,
    Conjugate,
}

impl fmt::Display for RelationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            RelationFamily::PureBraid => "pure braid",
            RelationFamily::Artin => "artin",
            RelationFamily::SigmaSquare => "sigma square",
            RelationFamily::Conjugate => "conjugate",
        };
        f.write_str(name)
    }
}

/// `lhs = rhs` as words in the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub family: RelationFamily,
    pub lhs: Vec<GenLetter>,
    pub rhs: Vec<GenLetter>,
}

fn expand(side: &[GenLetter], n: usize) -> Result<BraidWord> {
    let mut out = BraidWord::identity(2 * n);
    for l in side {
        let w = l.generator.word(n)?;
        let w = if l.positive { w } else { w.inverse() };
        out = out.concat(&w)?;
    }
    Ok(out)
}

fn side_epsilon(side: &[GenLetter], n: usize) -> Z2 {
    side.iter().map(|l| l.generator.epsilon_table(n)).sum()
}

fn side_string(side: &[GenLetter]) -> String {
    side.iter()
        .map(|l| {
            if l.positive {
                l.generator.to_string()
            } else {
                format!("{}^-1", l.generator)
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

impl Relation {
    pub fn lhs_word(&self, n: usize) -> Result<BraidWord> {
        expand(&self.lhs, n)
    }

    pub fn rhs_word(&self, n: usize) -> Result<BraidWord> {
        expand(&self.rhs, n)
    }

    /// `ε` of both sides computed from the generator table.
    pub fn table_epsilons(&self, n: usize) -> (Z2, Z2) {
        (side_epsilon(&self.lhs, n), side_epsilon(&self.rhs, n))
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {} = {}",
            self.family,
            side_string(&self.lhs),
            side_string(&self.rhs)
        )
    }
}

/// `σ_k` for `k ≠ n`, then every `A_{i,j}` with `1 ≤ i < j ≤ 2n`.
pub fn bnn_generators(n: usize) -> Vec<BnnGenerator> {
    let m = 2 * n;
    let mut gens: Vec<BnnGenerator> = (1..m).filter(|&k| k != n).map(s).collect();
    for j in 2..=m {
        for i in 1..j {
            gens.push(a(i, j));
        }
    }
    gens
}

fn pure_braid_relations(m: usize, out: &mut Vec<Relation>) {
    for r in 1..=m {
        for s_ in r + 1..=m {
            for i in 1..=m {
                for j in i + 1..=m {
                    let rhs = if (i < r && s_ < j) || (s_ < i) {
                        vec![g(a(i, j))]
                    } else if r < i && i == s_ && s_ < j {
                        vec![g(a(r, j)), g(a(i, j)), gi(a(r, j))]
                    } else if i == r && r < s_ && s_ < j {
                        vec![
                            g(a(r, j)),
                            g(a(s_, j)),
                            g(a(i, j)),
                            gi(a(s_, j)),
                            gi(a(r, j)),
                        ]
                    } else if r < i && i < s_ && s_ < j {
                        vec![
                            g(a(r, j)),
                            g(a(s_, j)),
                            gi(a(r, j)),
                            gi(a(s_, j)),
                            g(a(i, j)),
                            g(a(s_, j)),
                            g(a(r, j)),
                            gi(a(s_, j)),
                            gi(a(r, j)),
                        ]
                    } else {
                        continue;
                    };
                    out.push(Relation {
                        family: RelationFamily::PureBraid,
                        lhs: vec![gi(a(r, s_)), g(a(i, j)), g(a(r, s_))],
                        rhs,
                    });
                }
            }
        }
    }
}

fn artin_relations(n: usize, out: &mut Vec<Relation>) {
    let m = 2 * n;
    let gens: Vec<usize> = (1..m).filter(|&k| k != n).collect();
    for &i in &gens {
        if gens.contains(&(i + 1)) {
            out.push(Relation {
                family: RelationFamily::Artin,
                lhs: vec![g(s(i)), g(s(i + 1)), g(s(i))],
                rhs: vec![g(s(i + 1)), g(s(i)), g(s(i + 1))],
            });
        }
        for &j in &gens {
            if j >= i + 2 {
                out.push(Relation {
                    family: RelationFamily::Artin,
                    lhs: vec![g(s(i)), g(s(j))],
                    rhs: vec![g(s(j)), g(s(i))],
                });
            }
        }
    }
}

fn conjugate_relations(n: usize, out: &mut Vec<Relation>) {
    let m = 2 * n;
    for k in (1..m).filter(|&k| k != n) {
        for j in 2..=m {
            for i in 1..j {
                let disjoint = k + 1 != i && k != i && k + 1 != j && k != j;
                let rhs = if disjoint || (k == i && j == k + 1) {
                    vec![g(a(i, j))]
                } else if k == j {
                    vec![g(a(i, k + 1))]
                } else if j == k + 1 && i < k {
                    vec![gi(a(i, k + 1)), g(a(i, k)), g(a(i, k + 1))]
                } else if i == k && k < j - 1 {
                    vec![g(a(i + 1, j))]
                } else if i == k + 1 {
                    vec![gi(a(k + 1, j)), g(a(k, j)), g(a(k + 1, j))]
                } else {
                    unreachable!("conjugate cases are exhaustive")
                };
                out.push(Relation {
                    family: RelationFamily::Conjugate,
                    lhs: vec![g(s(k)), g(a(i, j)), gi(s(k))],
                    rhs,
                });
            }
        }
    }
}

/// Every instance of the four relation families of `B_{n,n}`.
pub fn bnn_relations(n: usize) -> Vec<Relation> {
    assert!(n >= 2, "the presentation is stated for n >= 2");
    let m = 2 * n;
    let mut out = Vec::new();
    pure_braid_relations(m, &mut out);
    artin_relations(n, &mut out);
    for i in (1..m).filter(|&i| i != n) {
        out.push(Relation {
            family: RelationFamily::SigmaSquare,
            lhs: vec![g(s(i)), g(s(i))],
            rhs: vec![g(a(i, i + 1))],
        });
    }
    conjugate_relations(n, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_counts() {
        // 2n − 2 sigmas and n(2n−1) pure generators
        assert_eq!(bnn_generators(2).len(), 2 + 6);
        assert_eq!(bnn_generators(3).len(), 4 + 15);
    }

    #[test]
    fn epsilon_table_values() {
        assert_eq!(a(1, 2).epsilon_table(2), Z2::ZERO);
        assert_eq!(a(3, 4).epsilon_table(2), Z2::ZERO);
        assert_eq!(a(2, 3).epsilon_table(2), Z2::ONE);
        assert_eq!(a(1, 4).epsilon_table(2), Z2::ONE);
        assert_eq!(s(3).epsilon_table(2), Z2::ZERO);
    }

    #[test]
    fn all_families_present() {
        let rels = bnn_relations(2);
        for fam in [
            RelationFamily::PureBraid,
            RelationFamily::Artin,
            RelationFamily::SigmaSquare,
            RelationFamily::Conjugate,
        ] {
            assert!(rels.iter().any(|r| r.family == fam), "{fam}");
        }
    }
}
