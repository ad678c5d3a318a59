//! `k`-fold cabling `B²_{n,n} → B²_{nk,nk}`: every strand becomes a ribbon of
//! `k` parallel strands and every crossing a crossing of ribbons.

use crate::braid::{omega, BraidWord};
use crate::error::{Error, Result};
use crate::mixed::MixedContext;

/// Replaces each `σ_i^{±1}` of a word on `M` strands by the block crossing
/// `ω_k^{±1}` moved onto strands `(i−1)k+1 ..= (i+1)k` of `Mk` strands.
pub fn cable(w: &BraidWord, k: usize) -> Result<BraidWord> {
    if k == 0 {
        return Err(Error::Index("cabling multiplicity must be positive".into()));
    }
    let m = w.strands();
    let target = m * k;
    if k == 1 {
        return Ok(w.clone());
    }
    let ribbon = omega(k);
    let mut positive = Vec::with_capacity(m.saturating_sub(1));
    for i in 1..m {
        positive.push(ribbon.shifted((i - 1) * k, target)?);
    }
    let negative: Vec<BraidWord> = positive.iter().map(BraidWord::inverse).collect();
    let mut letters = Vec::with_capacity(w.len() * k * k);
    for l in w.letters() {
        let piece = if l.positive {
            &positive[l.index - 1]
        } else {
            &negative[l.index - 1]
        };
        letters.extend_from_slice(piece.letters());
    }
    BraidWord::new(target, letters)
}

/// Whether the block-swap sign survives cabling: `π(cable(w, k)) = π(w)`.
pub fn check_cabling_diagram(w: &BraidWord, k: usize, ctx: &MixedContext) -> Result<bool> {
    let before = ctx.pi_sign(w)?;
    let after = ctx.inflated(k)?.pi_sign(&cable(w, k)?)?;
    Ok(before == after)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(m: usize, s: &[i64]) -> BraidWord {
        BraidWord::from_signed(m, s).unwrap()
    }

    #[test]
    fn unit_multiplicity_is_identity() {
        let x = w(4, &[1, -3, 2, 2]);
        assert_eq!(cable(&x, 1).unwrap(), x);
    }

    #[test]
    fn single_crossing_becomes_omega() {
        assert_eq!(cable(&w(2, &[1]), 2).unwrap(), omega(2));
        assert_eq!(cable(&w(2, &[1]), 3).unwrap(), omega(3));
        assert_eq!(cable(&w(2, &[-1]), 2).unwrap(), omega(2).inverse());
    }

    #[test]
    fn shifted_ribbons() {
        // σ₂ on 3 strands, doubled: ω₂ on strands 3..6
        assert_eq!(cable(&w(3, &[2]), 2).unwrap(), w(6, &[4, 5, 3, 4]));
    }

    #[test]
    fn zero_multiplicity_rejected() {
        assert!(cable(&w(2, &[1]), 0).is_err());
    }

    #[test]
    fn diagram_examples() {
        let ctx = MixedContext::new(2).unwrap();
        assert!(check_cabling_diagram(&omega(2), 2, &ctx).unwrap());
        assert!(check_cabling_diagram(&BraidWord::identity(4), 3, &ctx).unwrap());
        assert!(check_cabling_diagram(&w(4, &[2]), 2, &ctx).is_err());
    }
}
