//! Braid words on `m` strands, the permutation homomorphism and the
//! distinguished elements built from Artin generators.

mod elements;
mod perm;
mod word;

pub use elements::{a_gen, a_gen_cross, delta, full_twist, omega, reversing_swap};
pub use perm::Permutation;
pub use word::{BraidWord, Letter};
