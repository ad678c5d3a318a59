use mixbraid::classifier::{
    classify, cross_validate, surface_domains, DomainSpace, Status, Target, TripleDescriptor,
};
use mixbraid::surface::{SurfaceKind, SurfacePresentation};
use mixbraid::{Error, Z2};

fn targets() -> Vec<Target> {
    let mut t = vec![Target::Plane, Target::Sphere, Target::ProjectivePlane];
    t.extend((1..=3).map(Target::OrientableClosed));
    t.extend((2..=4).map(Target::NonOrientableClosed));
    t
}

fn domains() -> Vec<DomainSpace> {
    let mut d = vec![DomainSpace::Sphere];
    d.extend(surface_domains(2).into_iter().map(DomainSpace::Surface));
    d
}

#[test]
fn classification_is_total_and_deterministic() {
    for d in domains() {
        for t in targets() {
            for n in 1..=6 {
                let desc = TripleDescriptor::new(d.clone(), t, n);
                let a = classify(&desc).unwrap();
                assert_eq!(a, classify(&desc).unwrap());
                let decided = a.split != Status::Unknown || a.nonsplit != Status::Unknown;
                assert!(!decided || !a.provenance.is_empty(), "{desc}");
            }
        }
    }
}

#[test]
fn plane_target_is_always_decided() {
    for d in domains() {
        for n in 1..=6 {
            let v = classify(&TripleDescriptor::new(d.clone(), Target::Plane, n)).unwrap();
            assert_ne!(v.split, Status::Unknown);
            assert_ne!(v.nonsplit, Status::Unknown);
        }
    }
}

#[test]
fn n_bup_is_the_conjunction() {
    for d in domains() {
        for t in targets() {
            for n in 1..=5 {
                let v = classify(&TripleDescriptor::new(d.clone(), t, n)).unwrap();
                let both = v.split.holds() == Some(true) && v.nonsplit.holds() == Some(true);
                assert_eq!(v.has_n_bup() == Some(true), both);
            }
        }
    }
}

#[test]
fn single_valued_bup_implies_split_bup() {
    for d in domains() {
        for t in targets() {
            let one = classify(&TripleDescriptor::new(d.clone(), t, 1)).unwrap();
            if one.split != Status::Has {
                continue;
            }
            for n in 2..=6 {
                let v = classify(&TripleDescriptor::new(d.clone(), t, n)).unwrap();
                assert_eq!(v.split, Status::Has, "n = {n}, target {t}");
            }
        }
    }
}

#[test]
fn closed_targets_never_beat_the_plane() {
    for d in domains() {
        for n in 1..=5 {
            let plane = classify(&TripleDescriptor::new(d.clone(), Target::Plane, n)).unwrap();
            for t in targets().into_iter().filter(|t| t.is_closed()) {
                let v = classify(&TripleDescriptor::new(d.clone(), t, n)).unwrap();
                if plane.split == Status::DoesNotHave {
                    assert_eq!(v.split, Status::DoesNotHave);
                }
                if plane.nonsplit == Status::DoesNotHave {
                    assert_eq!(v.nonsplit, Status::DoesNotHave);
                }
            }
        }
    }
}

#[test]
fn cross_validation_rejects_out_of_range_descriptors() {
    let p = SurfacePresentation::new(SurfaceKind::Orientable { m: 1 }, vec![Z2::ONE, Z2::ZERO])
        .unwrap();
    let closed = TripleDescriptor::new(DomainSpace::Surface(p.clone()), Target::Sphere, 2);
    assert!(matches!(
        cross_validate(&closed),
        Err(Error::HypothesisNotMet(_))
    ));
    let big = TripleDescriptor::new(DomainSpace::Surface(p), Target::Plane, 5);
    assert!(matches!(
        cross_validate(&big),
        Err(Error::HypothesisNotMet(_))
    ));
}

#[test]
fn cross_validation_records_checks() {
    let klein = SurfacePresentation::new(
        SurfaceKind::NonOrientableEven { m: 0 },
        vec![Z2::ONE, Z2::ZERO],
    )
    .unwrap();
    let d = DomainSpace::Surface(klein);
    let even = cross_validate(&TripleDescriptor::new(d.clone(), Target::Plane, 2)).unwrap();
    assert_eq!(even.checks.len(), 2);
    let odd = cross_validate(&TripleDescriptor::new(d, Target::Plane, 3)).unwrap();
    assert_eq!(odd.checks.len(), 1);
    assert_eq!(odd.checks[0].name, "full-twist parity");
}
