//! Artin braid groups, their mixed subgroups `B_{n,n} ⊂ B²_{n,n} ⊂ B_{2n}`, and
//! a decision table for the Borsuk–Ulam property of `n`-valued maps.

pub mod braid;
pub mod cabling;
pub mod classifier;
pub mod error;
pub mod garside;
pub mod mixed;
pub mod sample;
pub mod surface;
pub mod z2;

pub use braid::{BraidWord, Letter, Permutation};
pub use error::{Error, Result};
pub use garside::{are_equal, is_trivial, normal_form, NormalForm, SimpleBraid};
pub use mixed::MixedContext;
pub use z2::Z2;
