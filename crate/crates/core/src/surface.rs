//! One-relator presentations of closed surface groups together with the
//! double-cover class `θ: π₁ → ℤ₂`, kernel generators for `θ`, homomorphisms
//! into `B²_{n,n}` and their verification.

use std::collections::HashMap;
use std::fmt;

use crate::braid::{delta, omega, reversing_swap, BraidWord};
use crate::cabling::cable;
use crate::error::{Error, Result};
use crate::garside::is_trivial;
use crate::mixed::MixedContext;
use crate::z2::Z2;

/// Shape of the orbit-space presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SurfaceKind {
    /// Genus `m ≥ 1`: `⟨a₁..a₂ₘ | [a₁,a₂]⋯[a₂ₘ₋₁,a₂ₘ]⟩`.
    Orientable { m: usize },
    /// Non-orientable of genus `2m + 2`: `⟨u, v, a₁..a₂ₘ | uvuv⁻¹[a₁,a₂]⋯⟩`.
    NonOrientableEven { m: usize },
    /// Non-orientable of genus `2m + 1`: `⟨c, a₁..a₂ₘ | c²[a₁,a₂]⋯⟩`.
    /// `m = 0` is the projective plane.
    NonOrientableOdd { m: usize },
}

impl SurfaceKind {
    pub fn handles(self) -> usize {
        match self {
            SurfaceKind::Orientable { m }
            | SurfaceKind::NonOrientableEven { m }
            | SurfaceKind::NonOrientableOdd { m } => m,
        }
    }

    pub fn is_orientable(self) -> bool {
        matches!(self, SurfaceKind::Orientable { .. })
    }

    /// Genus of the surface; orientable genus for `Orientable`.
    pub fn genus(self) -> usize {
        match self {
            SurfaceKind::Orientable { m } => m,
            SurfaceKind::NonOrientableEven { m } => 2 * m + 2,
            SurfaceKind::NonOrientableOdd { m } => 2 * m + 1,
        }
    }
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceKind::Orientable { m } => write!(f, "orientable genus {m}"),
            SurfaceKind::NonOrientableEven { m } => write!(f, "non-orientable genus {}", 2 * m + 2),
            SurfaceKind::NonOrientableOdd { m } => write!(f, "non-orientable genus {}", 2 * m + 1),
        }
    }
}

/// A generator of the presentation or its inverse, by generator position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupLetter {
    pub generator: usize,
    pub positive: bool,
}

impl GroupLetter {
    fn inverse(self) -> Self {
        GroupLetter {
            generator: self.generator,
            positive: !self.positive,
        }
    }
}

/// A word in the presentation generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GroupWord(pub Vec<GroupLetter>);

impl GroupWord {
    pub fn letter(generator: usize, positive: bool) -> Self {
        GroupWord(vec![GroupLetter {
            generator,
            positive,
        }])
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        GroupWord(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn free_reduce(&self) -> GroupWord {
        let mut out: Vec<GroupLetter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        GroupWord(out)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Orbit-space group `π₁(X_τ)` with the homomorphism `θ` to `ℤ₂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfacePresentation {
    kind: SurfaceKind,
    generators: Vec<String>,
    relator: GroupWord,
    theta: Vec<Z2>,
}

impl SurfacePresentation {
    /// Generator names in presentation order.
    pub fn generator_names(kind: SurfaceKind) -> Vec<String> {
        let mut names = match kind {
            SurfaceKind::Orientable { .. } => vec![],
            SurfaceKind::NonOrientableEven { .. } => vec!["u".to_string(), "v".to_string()],
            SurfaceKind::NonOrientableOdd { .. } => vec!["c".to_string()],
        };
        names.extend((1..=2 * kind.handles()).map(|k| format!("a{k}")));
        names
    }

    /// `theta` lists `θ(g)` in generator order.
    pub fn new(kind: SurfaceKind, theta: Vec<Z2>) -> Result<Self> {
        if let SurfaceKind::Orientable { m: 0 } = kind {
            return Err(Error::InvalidPresentation(
                "orientable orbit space needs genus >= 1".into(),
            ));
        }
        let generators = Self::generator_names(kind);
        if theta.len() != generators.len() {
            return Err(Error::InvalidPresentation(format!(
                "{} generators but {} theta values",
                generators.len(),
                theta.len()
            )));
        }
        let letter = |g: usize, positive: bool| GroupLetter {
            generator: g,
            positive,
        };
        let offset = generators.len() - 2 * kind.handles();
        let mut rel = match kind {
            SurfaceKind::Orientable { .. } => vec![],
            SurfaceKind::NonOrientableEven { .. } => {
                vec![
                    letter(0, true),
                    letter(1, true),
                    letter(0, true),
                    letter(1, false),
                ]
            }
            SurfaceKind::NonOrientableOdd { .. } => vec![letter(0, true), letter(0, true)],
        };
        for h in 0..kind.handles() {
            let (x, y) = (offset + 2 * h, offset + 2 * h + 1);
            rel.extend([
                letter(x, true),
                letter(y, true),
                letter(x, false),
                letter(y, false),
            ]);
        }
        let p = SurfacePresentation {
            kind,
            generators,
            relator: GroupWord(rel),
            theta,
        };
        if p.theta_of(&p.relator) != Z2::ZERO {
            return Err(Error::InvalidPresentation(
                "theta does not vanish on the relator".into(),
            ));
        }
        if p.theta.iter().all(|t| t.is_zero()) {
            return Err(Error::ThetaNotSurjective);
        }
        Ok(p)
    }

    /// `θ` given by name; unnamed generators map to `0`.
    pub fn with_theta_map(kind: SurfaceKind, theta: &HashMap<String, Z2>) -> Result<Self> {
        let names = Self::generator_names(kind);
        if let Some(unknown) = theta.keys().find(|k| !names.contains(k)) {
            return Err(Error::InvalidPresentation(format!(
                "unknown generator {unknown} for {kind}"
            )));
        }
        let values = names
            .iter()
            .map(|g| theta.get(g).copied().unwrap_or(Z2::ZERO))
            .collect();
        SurfacePresentation::new(kind, values)
    }

    pub fn kind(&self) -> SurfaceKind {
        self.kind
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relator(&self) -> &GroupWord {
        &self.relator
    }

    pub fn theta(&self) -> &[Z2] {
        &self.theta
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// `θ` by generator name.
    pub fn theta_at(&self, name: &str) -> Option<Z2> {
        self.generator_index(name).map(|i| self.theta[i])
    }

    pub fn theta_of(&self, w: &GroupWord) -> Z2 {
        w.0.iter().map(|l| self.theta[l.generator]).sum()
    }

    /// The orientation-reversing class `δ`: `u`, `c`, or none when orientable.
    pub fn delta_generator(&self) -> Option<usize> {
        match self.kind {
            SurfaceKind::Orientable { .. } => None,
            SurfaceKind::NonOrientableEven { .. } | SurfaceKind::NonOrientableOdd { .. } => Some(0),
        }
    }

    pub fn format_word(&self, w: &GroupWord) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.0.iter()
            .map(|l| {
                let g = &self.generators[l.generator];
                if l.positive {
                    g.clone()
                } else {
                    format!("{g}^-1")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for SurfacePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let theta: Vec<String> = self
            .generators
            .iter()
            .zip(&self.theta)
            .map(|(g, t)| format!("{g}={t}"))
            .collect();
        write!(
            f,
            "<{} | {}> ({}), theta: {}",
            self.generators.join(", "),
            self.format_word(&self.relator),
            self.kind,
            theta.join(",")
        )
    }
}

/// Value of `θ` on the orientation-reversing class, `None` when the orbit
/// space is orientable.
pub fn theta_hat_delta(p: &SurfacePresentation) -> Option<Z2> {
    p.delta_generator().map(|d| p.theta[d])
}

/// Kernel generators of `θ`, using the first generator with `θ = 1` as the
/// coset representative.
pub fn schreier_kernel_generators(p: &SurfacePresentation) -> Result<Vec<GroupWord>> {
    let t = p
        .theta
        .iter()
        .position(|x| x.is_one())
        .ok_or(Error::ThetaNotSurjective)?;
    schreier_kernel_generators_with(p, t)
}

/// Kernel generators of `θ` for the transversal `{1, t}`: `g` and `tgt⁻¹` when
/// `θ(g) = 0`, `gt⁻¹` and `tg` when `θ(g) = 1`. Trivial words are dropped.
pub fn schreier_kernel_generators_with(
    p: &SurfacePresentation,
    t: usize,
) -> Result<Vec<GroupWord>> {
    if t >= p.generators.len() || p.theta[t].is_zero() {
        let name = p
            .generators
            .get(t)
            .cloned()
            .unwrap_or_else(|| format!("#{t}"));
        return Err(Error::InvalidTransversal(name));
    }
    let tw = GroupWord::letter(t, true);
    let mut out = Vec::new();
    for (g, th) in p.theta.iter().enumerate() {
        let gw = GroupWord::letter(g, true);
        let pair = if th.is_zero() {
            [gw.clone(), tw.concat(&gw).concat(&tw.inverse())]
        } else {
            [gw.concat(&tw.inverse()), tw.concat(&gw)]
        };
        for w in pair {
            let w = w.free_reduce();
            if !w.is_empty() && !out.contains(&w) {
                out.push(w);
            }
        }
    }
    Ok(out)
}

/// Generator images of a homomorphism `π₁(X_τ) → B²_{n,n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    source: SurfacePresentation,
    n: usize,
    images: Vec<BraidWord>,
}

impl GroupHom {
    pub fn new(source: SurfacePresentation, n: usize, images: Vec<BraidWord>) -> Result<Self> {
        if images.len() != source.generators.len() {
            return Err(Error::InvalidPresentation(format!(
                "{} generators but {} images",
                source.generators.len(),
                images.len()
            )));
        }
        let ctx = MixedContext::new(n)?;
        for w in &images {
            if w.strands() != ctx.strands() {
                return Err(Error::StrandMismatch {
                    left: w.strands(),
                    right: ctx.strands(),
                });
            }
        }
        Ok(GroupHom { source, n, images })
    }

    pub fn source(&self) -> &SurfacePresentation {
        &self.source
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn images(&self) -> &[BraidWord] {
        &self.images
    }

    pub fn image_of_generator(&self, name: &str) -> Option<&BraidWord> {
        self.source.generator_index(name).map(|i| &self.images[i])
    }

    /// Image of a word, as the literal product of generator images.
    pub fn apply(&self, w: &GroupWord) -> BraidWord {
        let mut out = BraidWord::identity(2 * self.n);
        for l in &w.0 {
            let img = &self.images[l.generator];
            let piece = if l.positive {
                img.clone()
            } else {
                img.inverse()
            };
            out = out.concat(&piece).expect("images share strand count");
        }
        out
    }

    /// Post-composition with `k`-fold cabling, landing in `B²_{nk,nk}`.
    pub fn cabled(&self, k: usize) -> Result<GroupHom> {
        let images = self
            .images
            .iter()
            .map(|w| cable(w, k))
            .collect::<Result<Vec<_>>>()?;
        GroupHom::new(self.source.clone(), self.n * k, images)
    }
}

/// The three facts consumed by the split / non-split criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomReport {
    /// The relator maps to the trivial braid.
    pub well_defined: bool,
    /// `π ∘ Ψ = θ` on every generator.
    pub commutes: bool,
    /// Every kernel generator of `θ` maps to a pure braid.
    pub kernel_in_pure: bool,
}

impl HomReport {
    pub fn as_tuple(self) -> (bool, bool, bool) {
        (self.well_defined, self.commutes, self.kernel_in_pure)
    }
}

impl fmt::Display for HomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "well-defined: {}, commutes: {}, kernel-in-pure: {}",
            self.well_defined, self.commutes, self.kernel_in_pure
        )
    }
}

pub fn verify_hom(h: &GroupHom) -> Result<HomReport> {
    let ctx = MixedContext::new(h.n)?;
    let mut signs = Vec::with_capacity(h.images.len());
    for (name, w) in h.source.generators.iter().zip(&h.images) {
        if !ctx.in_bnn2(w)? {
            return Err(Error::ImageNotInB2nn {
                generator: name.clone(),
            });
        }
        signs.push(ctx.pi_sign(w)?);
    }
    let well_defined = is_trivial(&h.apply(&h.source.relator));
    let commutes = signs.iter().zip(&h.source.theta).all(|(a, b)| a == b);
    let kernel_in_pure = schreier_kernel_generators(&h.source)?
        .iter()
        .all(|k| h.apply(k).is_pure());
    Ok(HomReport {
        well_defined,
        commutes,
        kernel_in_pure,
    })
}

fn theta_powers(p: &SurfacePresentation, base: &BraidWord) -> Vec<BraidWord> {
    p.theta.iter().map(|t| base.pow(t.value() as i64)).collect()
}

/// `g ↦ ω_n^{θ(g)}`: a homomorphism with pure kernel image when `θ(δ) = 0`.
pub fn split_witness(p: &SurfacePresentation, n: usize) -> Result<GroupHom> {
    GroupHom::new(p.clone(), n, theta_powers(p, &omega(n)))
}

/// `g ↦ (σ₁ω_n)^{θ(g)}`: a homomorphism whose kernel image is not pure when
/// `θ(δ) = 0` and `n ≥ 2`.
pub fn nonsplit_witness(p: &SurfacePresentation, n: usize) -> Result<GroupHom> {
    let base = BraidWord::generator(2 * n, 1)?.concat(&omega(n))?;
    GroupHom::new(p.clone(), n, theta_powers(p, &base))
}

/// Which family of images [`odd_delta_witness`] used.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OddDeltaCase {
    /// `⟨u, v, ..⟩` with `θ(u) = 1`.
    EvenGenus,
    /// `⟨c, ..⟩` with `θ(c) = 1` and `θ` non-zero on `a₁` or `a₂`.
    OddGenusThetaOnFirstHandle,
    /// `⟨c, ..⟩` with `θ(c) = 1` and `θ(a₁) = θ(a₂) = 0`.
    OddGenusThetaOffFirstHandle,
}

/// A homomorphism into `B²_{2,2}` compatible with `θ` when `θ(δ) = 1`,
/// built from `Δ₄` and `Ω = σ₂σ₃σ₁⁻¹σ₂⁻¹` (which satisfy `Δ₄ΩΔ₄⁻¹ = Ω⁻¹`).
pub fn odd_delta_witness(p: &SurfacePresentation) -> Result<(GroupHom, OddDeltaCase)> {
    if theta_hat_delta(p) != Some(Z2::ONE) {
        return Err(Error::HypothesisNotMet(
            "needs a non-orientable orbit space with theta(delta) = 1".into(),
        ));
    }
    if p.kind.handles() == 0 && matches!(p.kind, SurfaceKind::NonOrientableOdd { .. }) {
        return Err(Error::HypothesisNotMet(
            "the projective plane admits no such homomorphism".into(),
        ));
    }
    let om = reversing_swap();
    let d4 = delta(4);
    let i = |name: &str| p.theta_at(name).expect("generator exists").value() as i64;
    let om_pow = |e: i64| om.pow(e);
    let mut images = Vec::with_capacity(p.generators.len());
    let case = match p.kind {
        SurfaceKind::NonOrientableEven { .. } => OddDeltaCase::EvenGenus,
        SurfaceKind::NonOrientableOdd { .. } if i("a1") == 1 || i("a2") == 1 => {
            OddDeltaCase::OddGenusThetaOnFirstHandle
        }
        _ => OddDeltaCase::OddGenusThetaOffFirstHandle,
    };
    for name in &p.generators {
        let img = match (case, name.as_str()) {
            (OddDeltaCase::EvenGenus, "u") => om.clone(),
            (OddDeltaCase::EvenGenus, "v") => d4.concat(&om_pow(1 - i("v")))?,
            (_, "c") => om.clone(),
            (OddDeltaCase::OddGenusThetaOnFirstHandle, "a1") => {
                d4.pow(i("a2")).concat(&om_pow(i("a1") + i("a2") - 2))?
            }
            (OddDeltaCase::OddGenusThetaOnFirstHandle, "a2") => d4.pow(1 - i("a2")).concat(&om)?,
            (OddDeltaCase::OddGenusThetaOffFirstHandle, "a1") => {
                BraidWord::from_signed(4, &[2])?.conjugate(&om.inverse())?
            }
            (OddDeltaCase::OddGenusThetaOffFirstHandle, "a2") => {
                BraidWord::from_signed(4, &[2])?.conjugate(&BraidWord::from_signed(4, &[3, 3])?)?
            }
            (_, other) => om_pow(i(other)),
        };
        images.push(img);
    }
    Ok((GroupHom::new(p.clone(), 2, images)?, case))
}

/// [`odd_delta_witness`] cabled `n/2` times, into `B²_{n,n}` for even `n`.
pub fn odd_delta_witness_cabled(p: &SurfacePresentation, n: usize) -> Result<GroupHom> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::HypothesisNotMet(format!(
            "block size {n} is not even"
        )));
    }
    let (base, _) = odd_delta_witness(p)?;
    base.cabled(n / 2)
}

/// The relator image under `g ↦ b_g Δ^{θ(g)}` (with `b_g ∈ B_{n,n}`), split as
/// a product of `Δ`-conjugates of the `b_g` followed by the total `Δ` power.
#[derive(Debug, Clone)]
pub struct DeltaNormalizedRelator {
    /// Literal substitution into the relator.
    pub direct: BraidWord,
    /// The block-preserving part: `∏ Δ^{c} y Δ^{−c}`.
    pub residual: BraidWord,
    /// Total exponent of `Δ`, `2` for the non-orientable relators.
    pub delta_power: i64,
}

impl DeltaNormalizedRelator {
    /// `residual · Δ^{delta_power}`.
    pub fn rewritten(&self) -> BraidWord {
        let m = self.residual.strands();
        self.residual
            .concat(&delta(m).pow(self.delta_power))
            .expect("same strand count")
    }
}

/// Substitutes `g ↦ b_g Δ_{2n}^{θ(g)}` into the relator and pushes every
/// `Δ` to the right end.
pub fn delta_normalized_relator(
    p: &SurfacePresentation,
    n: usize,
    parts: &[BraidWord],
) -> Result<DeltaNormalizedRelator> {
    let ctx = MixedContext::new(n)?;
    if parts.len() != p.generators.len() {
        return Err(Error::InvalidPresentation(format!(
            "{} generators but {} braids",
            p.generators.len(),
            parts.len()
        )));
    }
    for (name, b) in p.generators.iter().zip(parts) {
        if !ctx.in_bnn(b)? {
            return Err(Error::HypothesisNotMet(format!(
                "image part for {name} is not in B_{{n,n}}"
            )));
        }
    }
    let d = delta(2 * n);
    let images: Vec<BraidWord> = parts
        .iter()
        .zip(&p.theta)
        .map(|(b, t)| b.concat(&d.pow(t.value() as i64)))
        .collect::<Result<_>>()?;
    let hom = GroupHom::new(p.clone(), n, images)?;
    let direct = hom.apply(&p.relator);

    let mut residual = BraidWord::identity(2 * n);
    let mut power = 0i64;
    for l in &p.relator.0 {
        let b = &parts[l.generator];
        let e = p.theta[l.generator].value() as i64;
        // (bΔ^e)⁻¹ = Δ^{-e} b⁻¹
        let (y, shift_before, shift_after) = if l.positive {
            (b.clone(), 0, e)
        } else {
            (b.inverse(), -e, 0)
        };
        power += shift_before;
        let conj = d.pow(power).concat(&y)?.concat(&d.pow(-power))?;
        residual = residual.concat(&conj)?;
        power += shift_after;
    }
    Ok(DeltaNormalizedRelator {
        direct,
        residual,
        delta_power: power,
    })
}
