//! Decision table for the split and non-split Borsuk–Ulam properties of
//! `n`-valued maps `X ⊸ Y` with a free involution on `X`.

use std::fmt;
use std::str::FromStr;

use crate::braid::{delta, full_twist};
use crate::error::{Error, Result};
use crate::mixed::{bnn_generators, MixedContext};
use crate::surface::{
    nonsplit_witness, odd_delta_witness_cabled, split_witness, theta_hat_delta, verify_hom,
    HomReport, SurfaceKind, SurfacePresentation,
};
use crate::z2::Z2;

/// The space carrying the free involution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DomainSpace {
    /// The 2-sphere with the antipodal map.
    Sphere,
    /// A closed surface other than the sphere, described by its orbit space.
    Surface(SurfacePresentation),
}

/// The target surface `Y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    Plane,
    Sphere,
    ProjectivePlane,
    /// Orientable closed surface of genus `≥ 1`.
    OrientableClosed(usize),
    /// Non-orientable closed surface of genus `≥ 2`.
    NonOrientableClosed(usize),
}

impl Target {
    /// Orientable closed surface of genus `g`; genus 0 is the sphere.
    pub fn orientable(g: usize) -> Target {
        if g == 0 {
            Target::Sphere
        } else {
            Target::OrientableClosed(g)
        }
    }

    /// Non-orientable closed surface of genus `g`; genus 1 is the projective plane.
    pub fn non_orientable(g: usize) -> Result<Target> {
        match g {
            0 => Err(Error::InvalidDescriptor(
                "non-orientable genus must be at least 1".into(),
            )),
            1 => Ok(Target::ProjectivePlane),
            g => Ok(Target::NonOrientableClosed(g)),
        }
    }

    pub fn is_closed(self) -> bool {
        self != Target::Plane
    }

    fn normalized(self) -> Result<Target> {
        match self {
            Target::OrientableClosed(g) => Ok(Target::orientable(g)),
            Target::NonOrientableClosed(g) => Target::non_orientable(g),
            t => Ok(t),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Plane => write!(f, "plane"),
            Target::Sphere => write!(f, "sphere"),
            Target::ProjectivePlane => write!(f, "rp2"),
            Target::OrientableClosed(g) => write!(f, "or:{g}"),
            Target::NonOrientableClosed(g) => write!(f, "nonor:{g}"),
        }
    }
}

impl FromStr for Target {
    type Err = Error;

    /// Accepts `plane`, `sphere`, `rp2`, `or:G` and `nonor:G`.
    fn from_str(s: &str) -> Result<Target> {
        let genus = |g: &str| {
            g.parse::<usize>()
                .map_err(|_| Error::InvalidDescriptor(format!("bad genus in target {s:?}")))
        };
        match s.trim() {
            "plane" => Ok(Target::Plane),
            "sphere" => Ok(Target::Sphere),
            "rp2" => Ok(Target::ProjectivePlane),
            t => {
                if let Some(g) = t.strip_prefix("or:") {
                    Ok(Target::orientable(genus(g)?))
                } else if let Some(g) = t.strip_prefix("nonor:") {
                    Target::non_orientable(genus(g)?)
                } else {
                    Err(Error::InvalidDescriptor(format!("unknown target {s:?}")))
                }
            }
        }
    }
}

/// A triple `(X, τ; Y)` together with the number of values `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleDescriptor {
    pub domain: DomainSpace,
    pub target: Target,
    pub n: usize,
}

impl TripleDescriptor {
    pub fn new(domain: DomainSpace, target: Target, n: usize) -> Self {
        TripleDescriptor { domain, target, n }
    }
}

impl fmt::Display for TripleDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.domain {
            DomainSpace::Sphere => write!(f, "sphere/antipodal")?,
            DomainSpace::Surface(p) => write!(f, "{p}")?,
        }
        write!(f, " -> {}, n = {}", self.target, self.n)
    }
}

/// Status of one of the two properties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Has,
    DoesNotHave,
    Unknown,
    /// There are no non-split 1-valued maps, so the property holds trivially.
    Vacuous,
}

impl Status {
    /// `Some(true)` for `Has` and `Vacuous`, `Some(false)` for `DoesNotHave`.
    pub fn holds(self) -> Option<bool> {
        match self {
            Status::Has | Status::Vacuous => Some(true),
            Status::DoesNotHave => Some(false),
            Status::Unknown => None,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Has => "Has",
            Status::DoesNotHave => "DoesNotHave",
            Status::Unknown => "Unknown",
            Status::Vacuous => "Vacuous",
        })
    }
}

/// Rule identifiers recorded in [`BupVerdict::provenance`].
pub mod rules {
    pub const SPHERE_SINGLE_VALUED: &str =
        "sphere-domain/n=1: a map from the antipodal sphere has a coincidence unless the target is the sphere (identity map)";
    pub const SPHERE_MULTI_VALUED: &str =
        "sphere-domain/n>=2: every n-valued map is split, and the n-BUP holds for every target";
    pub const SINGLE_VALUED_NONSPLIT: &str =
        "n=1: every 1-valued map is split, so the non-split property holds vacuously";
    pub const PLANE_EVEN_DELTA: &str =
        "plane-target/orientable-or-theta(delta)=0: power-of-omega homomorphisms give split and non-split maps without coincidence";
    pub const PLANE_ODD_DELTA_EVEN_N: &str =
        "plane-target/theta(delta)=1/n-even: split maps inherit the 1-BUP; a cabled B2(2,2) homomorphism gives a non-split map without coincidence";
    pub const PLANE_ODD_DELTA_ODD_N: &str =
        "plane-target/theta(delta)=1/n-odd: the full-twist parity epsilon = n^2 mod 2 = 1 obstructs every compatible homomorphism";
    pub const CLOSED_FROM_PLANE: &str =
        "closed-target/plane-embedding: a map into the plane without coincidence embeds into any closed target";
    pub const CLOSED_KLEIN_BOTTLE: &str =
        "closed-orientable-target/Klein-bottle-orbit-space/theta(u)=1: the 1-BUP holds, so the n-split BUP holds for all n";
    pub const CLOSED_GENUS_THREE: &str =
        "closed-orientable-target/genus-3-orbit-space/theta(c)=theta(a_i)=1: the 1-BUP holds, so the n-split BUP holds for all n";
    pub const CLOSED_OPEN: &str =
        "closed-target/open: not determined by the plane classification and its known extensions";
}

/// Classification result with the rules that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BupVerdict {
    pub split: Status,
    pub nonsplit: Status,
    pub provenance: Vec<&'static str>,
}

impl BupVerdict {
    /// The `n`-BUP: both properties hold. `None` when either is unknown.
    pub fn has_n_bup(&self) -> Option<bool> {
        match (self.split.holds(), self.nonsplit.holds()) {
            (Some(false), _) | (_, Some(false)) => Some(false),
            (Some(true), Some(true)) => Some(true),
            _ => None,
        }
    }
}

impl fmt::Display for BupVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "split: {}", self.split)?;
        writeln!(f, "nonsplit: {}", self.nonsplit)?;
        for p in &self.provenance {
            writeln!(f, "provenance: {p}")?;
        }
        Ok(())
    }
}

fn validate(t: &TripleDescriptor) -> Result<Target> {
    if t.n == 0 {
        return Err(Error::InvalidDescriptor("n must be positive".into()));
    }
    if let DomainSpace::Surface(p) = &t.domain {
        if p.kind() == (SurfaceKind::NonOrientableOdd { m: 0 }) {
            return Err(Error::InvalidDescriptor(
                "a projective-plane orbit space means the domain is the sphere; use the sphere domain".into(),
            ));
        }
    }
    t.target.normalized()
}

/// Whether the orbit space is non-orientable with `θ(δ) = 1`.
fn odd_delta(p: &SurfacePresentation) -> bool {
    theta_hat_delta(p) == Some(Z2::ONE)
}

fn one_bup_from_orbit_space(p: &SurfacePresentation, target: Target) -> Option<&'static str> {
    if !matches!(target, Target::OrientableClosed(_)) {
        return None;
    }
    let th = |g: &str| p.theta_at(g) == Some(Z2::ONE);
    match p.kind() {
        SurfaceKind::NonOrientableEven { m: 0 } if th("u") => Some(rules::CLOSED_KLEIN_BOTTLE),
        SurfaceKind::NonOrientableOdd { m: 1 } if th("c") && (th("a1") || th("a2")) => {
            Some(rules::CLOSED_GENUS_THREE)
        }
        _ => None,
    }
}

pub fn classify(t: &TripleDescriptor) -> Result<BupVerdict> {
    let target = validate(t)?;
    let n = t.n;
    let mut provenance = Vec::new();
    let (split, mut nonsplit) = match &t.domain {
        DomainSpace::Sphere if n == 1 => {
            provenance.push(rules::SPHERE_SINGLE_VALUED);
            let split = if target == Target::Sphere {
                Status::DoesNotHave
            } else {
                Status::Has
            };
            (split, Status::Vacuous)
        }
        DomainSpace::Sphere => {
            provenance.push(rules::SPHERE_MULTI_VALUED);
            (Status::Has, Status::Has)
        }
        DomainSpace::Surface(p) => {
            let plane = if !odd_delta(p) {
                (
                    rules::PLANE_EVEN_DELTA,
                    Status::DoesNotHave,
                    Status::DoesNotHave,
                )
            } else if n.is_multiple_of(2) {
                (
                    rules::PLANE_ODD_DELTA_EVEN_N,
                    Status::Has,
                    Status::DoesNotHave,
                )
            } else {
                (rules::PLANE_ODD_DELTA_ODD_N, Status::Has, Status::Has)
            };
            if target == Target::Plane {
                provenance.push(plane.0);
                (plane.1, plane.2)
            } else {
                let mut split = Status::Unknown;
                let mut nonsplit = Status::Unknown;
                if plane.1 == Status::DoesNotHave || plane.2 == Status::DoesNotHave {
                    provenance.push(plane.0);
                    provenance.push(rules::CLOSED_FROM_PLANE);
                    if plane.1 == Status::DoesNotHave {
                        split = Status::DoesNotHave;
                    }
                    if plane.2 == Status::DoesNotHave {
                        nonsplit = Status::DoesNotHave;
                    }
                }
                if split == Status::Unknown {
                    if let Some(rule) = one_bup_from_orbit_space(p, target) {
                        provenance.push(rule);
                        split = Status::Has;
                    }
                }
                if split == Status::Unknown || nonsplit == Status::Unknown {
                    provenance.push(rules::CLOSED_OPEN);
                }
                (split, nonsplit)
            }
        }
    };
    if n == 1 && nonsplit != Status::Vacuous {
        nonsplit = Status::Vacuous;
        provenance.push(rules::SINGLE_VALUED_NONSPLIT);
    }
    Ok(BupVerdict {
        split,
        nonsplit,
        provenance,
    })
}

/// One check performed by [`cross_validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessCheck {
    pub name: String,
    pub detail: String,
}

/// The checks that backed a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossValidation {
    pub verdict: BupVerdict,
    pub checks: Vec<WitnessCheck>,
}

fn expect_report(name: &str, got: HomReport, want: (bool, bool, bool)) -> Result<WitnessCheck> {
    if got.as_tuple() != want {
        return Err(Error::WitnessFailure(format!(
            "{name}: expected {want:?}, got {:?}",
            got.as_tuple()
        )));
    }
    Ok(WitnessCheck {
        name: name.to_string(),
        detail: got.to_string(),
    })
}

fn full_twist_parity(n: usize) -> Result<Z2> {
    MixedContext::new(n)?.epsilon(&full_twist(2 * n))
}

/// Parity of `ε` is preserved, up to sign, by conjugation with `Δ`: checked on
/// every generator of the block-preserving presentation.
fn delta_conjugation_parity(n: usize) -> Result<bool> {
    let ctx = MixedContext::new(n)?;
    let d = delta(2 * n);
    for g in bnn_generators(n) {
        let b = g.word(n)?;
        let conj = d.concat(&b)?.concat(&d.inverse())?;
        if ctx.epsilon(&b)? + ctx.epsilon(&conj)? != Z2::ZERO {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Backs every decided plane-target verdict by an explicit computation.
/// Precondition: plane target, `n ≤ 4` and at most two handle pairs.
pub fn cross_validate(t: &TripleDescriptor) -> Result<CrossValidation> {
    let verdict = classify(t)?;
    let p = match (&t.domain, t.target) {
        (DomainSpace::Surface(p), Target::Plane) if t.n <= 4 && p.kind().handles() <= 2 => p,
        _ => {
            return Err(Error::HypothesisNotMet(
                "cross-validation needs a surface domain, plane target, n <= 4 and m <= 2".into(),
            ))
        }
    };
    let n = t.n;
    let mut checks = Vec::new();

    if verdict.split == Status::DoesNotHave {
        let r = verify_hom(&split_witness(p, n)?)?;
        checks.push(expect_report(
            "split witness omega^i",
            r,
            (true, true, true),
        )?);
    }
    if verdict.nonsplit == Status::DoesNotHave {
        let (name, h) = if odd_delta(p) {
            (
                "cabled reversing-swap witness",
                odd_delta_witness_cabled(p, n)?,
            )
        } else {
            ("non-split witness (s1 omega)^i", nonsplit_witness(p, n)?)
        };
        checks.push(expect_report(name, verify_hom(&h)?, (true, true, false))?);
    }
    let has = [verdict.split, verdict.nonsplit].contains(&Status::Has);
    if has && n % 2 == 1 {
        let eps = full_twist_parity(n)?;
        if eps != Z2::ONE {
            return Err(Error::WitnessFailure(format!(
                "epsilon of the full twist on {} strands is {eps}, expected 1",
                2 * n
            )));
        }
        checks.push(WitnessCheck {
            name: "full-twist parity".into(),
            detail: format!("epsilon(full twist on {} strands) = 1", 2 * n),
        });
    }
    if has && n.is_multiple_of(2) {
        let eps = full_twist_parity(n)?;
        if eps != Z2::ZERO || !delta_conjugation_parity(n)? {
            return Err(Error::WitnessFailure(format!(
                "epsilon ingredients inconsistent for n = {n}"
            )));
        }
        checks.push(WitnessCheck {
            name: "epsilon ingredients".into(),
            detail: format!(
                "epsilon(full twist on {} strands) = 0 and epsilon(b) + epsilon(DbD^-1) = 0 on generators",
                2 * n
            ),
        });
    }
    Ok(CrossValidation { verdict, checks })
}

/// All surface presentations with at most `max_m` handle pairs, each kind, and
/// every admissible `θ`. The projective-plane orbit space is excluded.
pub fn surface_domains(max_m: usize) -> Vec<SurfacePresentation> {
    let mut out = Vec::new();
    let mut kinds = Vec::new();
    for m in 0..=max_m {
        if m >= 1 {
            kinds.push(SurfaceKind::Orientable { m });
            kinds.push(SurfaceKind::NonOrientableOdd { m });
        }
        kinds.push(SurfaceKind::NonOrientableEven { m });
    }
    for kind in kinds {
        let len = SurfacePresentation::generator_names(kind).len();
        for mask in 1u32..(1 << len) {
            let theta = (0..len).map(|i| Z2::from(mask >> i & 1 == 1)).collect();
            if let Ok(p) = SurfacePresentation::new(kind, theta) {
                out.push(p);
            }
        }
    }
    out
}
