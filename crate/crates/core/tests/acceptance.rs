//! End-to-end acceptance suite: one line per criterion, then a single verdict.

mod common;

use std::time::Instant;

use common::oracle_equal;
use mixbraid::braid::{a_gen, a_gen_cross, delta, full_twist, reversing_swap};
use mixbraid::cabling::{cable, check_cabling_diagram};
use mixbraid::classifier::{
    classify, cross_validate, surface_domains, DomainSpace, Status, Target, TripleDescriptor,
};
use mixbraid::mixed::{bnn_generators, bnn_relations, MixedContext};
use mixbraid::sample::{
    random_artin_rewrite, random_b2nn_word, random_bnn_word, random_word, rng, DEFAULT_SEED,
};
use mixbraid::surface::{
    nonsplit_witness, odd_delta_witness_cabled, split_witness, theta_hat_delta, verify_hom,
    SurfaceKind, SurfacePresentation,
};
use mixbraid::{are_equal, is_trivial, normal_form, BraidWord, Permutation, Z2};
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eq(a: &BraidWord, b: &BraidWord) -> Result<bool, String> {
    are_equal(a, b).map_err(|e| e.to_string())
}

fn relation_corpus() -> Vec<(usize, String, BraidWord, BraidWord)> {
    let mut out = Vec::new();
    for n in 2..=3 {
        for r in bnn_relations(n) {
            out.push((
                n,
                r.to_string(),
                r.lhs_word(n).unwrap(),
                r.rhs_word(n).unwrap(),
            ));
        }
    }
    out
}

fn presentation_soundness() -> Outcome {
    let corpus = relation_corpus();
    for (n, name, l, r) in &corpus {
        ensure(eq(l, r)?, || format!("n = {n}: {name}"))?;
        ensure(oracle_equal(l, r), || {
            format!("Burau oracle disagrees, n = {n}: {name}")
        })?;
    }
    Ok(format!("{} relation instances", corpus.len()))
}

fn delta_conjugation() -> Outcome {
    let mut count = 0;
    for m in 2..=6 {
        let d = delta(m);
        for i in 1..m {
            let s = BraidWord::generator(m, i).unwrap();
            let lhs = d.concat(&s).unwrap().concat(&d.inverse()).unwrap();
            ensure(eq(&lhs, &BraidWord::generator(m, m - i).unwrap())?, || {
                format!("m = {m}, i = {i}")
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} conjugations"))
}

fn full_twist_central() -> Outcome {
    for m in 2..=6 {
        let f = full_twist(m);
        ensure(eq(&f, &delta(m).pow(2))?, || {
            format!("m = {m}: not delta squared")
        })?;
        for i in 1..m {
            let s = BraidWord::generator(m, i).unwrap();
            ensure(eq(&f.concat(&s).unwrap(), &s.concat(&f).unwrap())?, || {
                format!("m = {m}: does not commute with s{i}")
            })?;
        }
    }
    Ok("m = 2..6".into())
}

fn cross_block_generators() -> Outcome {
    let mut count = 0;
    for n in 2..=3 {
        for i in 1..=n {
            for j in n + 1..=2 * n {
                let cross = a_gen_cross(i, j, n).map_err(|e| e.to_string())?;
                let direct = a_gen(i, j, 2 * n).map_err(|e| e.to_string())?;
                ensure(eq(&cross, &direct)?, || format!("n = {n}, ({i},{j})"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} pairs"))
}

fn delta_permutation() -> Outcome {
    for n in 1..=4 {
        let m = 2 * n;
        let pairs: Vec<(usize, usize)> = (1..=n).map(|i| (i, m + 1 - i)).collect();
        let expected = Permutation::from_transpositions(m, &pairs).map_err(|e| e.to_string())?;
        let d = delta(m);
        ensure(d.permutation() == expected, || {
            format!("n = {n}: {}", d.permutation())
        })?;
        let ctx = MixedContext::new(n).unwrap();
        ensure(ctx.in_bnn2(&d).unwrap() && !ctx.in_bnn(&d).unwrap(), || {
            format!("n = {n}: membership")
        })?;
    }
    Ok("n = 1..4".into())
}

fn reversing_swap_identities() -> Outcome {
    let om = reversing_swap();
    let d4 = delta(4);
    let conj = d4.concat(&om).unwrap().concat(&d4.inverse()).unwrap();
    ensure(eq(&conj, &om.inverse())?, || {
        "delta conjugation of the swap".into()
    })?;
    let chain = BraidWord::from_signed(4, &[2, 1, 1, -3, -3, -2]).unwrap();
    ensure(eq(&chain, &om.pow(-2))?, || "squared chain".into())?;
    Ok("both identities exact".into())
}

fn witness_suite() -> Outcome {
    let mut count = 0;
    for p in surface_domains(2) {
        let odd = theta_hat_delta(&p) == Some(Z2::ONE);
        for n in 2..=4 {
            let mut run = |name: &str, h: mixbraid::Result<mixbraid::surface::GroupHom>, want| {
                let h = h.map_err(|e| format!("{p}, n = {n}, {name}: {e}"))?;
                let got = verify_hom(&h).map_err(|e| e.to_string())?.as_tuple();
                count += 1;
                ensure(got == want, || format!("{p}, n = {n}, {name}: {got:?}"))
            };
            if !odd {
                run("split", split_witness(&p, n), (true, true, true))?;
                run("non-split", nonsplit_witness(&p, n), (true, true, false))?;
            } else if n.is_multiple_of(2) {
                run(
                    "cabled",
                    odd_delta_witness_cabled(&p, n),
                    (true, true, false),
                )?;
            }
        }
    }
    Ok(format!("{count} homomorphisms verified"))
}

fn epsilon_suite() -> Outcome {
    for n in 2..=3 {
        let ctx = MixedContext::new(n).unwrap();
        for g in bnn_generators(n) {
            let w = g.word(n).unwrap();
            ensure(ctx.epsilon(&w).unwrap() == g.epsilon_table(n), || {
                format!("n = {n}: {g}")
            })?;
        }
    }
    let mut r = rng(DEFAULT_SEED);
    for k in 0..300 {
        let n = 2 + k % 2;
        let ctx = MixedContext::new(n).unwrap();
        let a = random_bnn_word(&mut r, n, 14);
        let b = random_bnn_word(&mut r, n, 14);
        let ea = ctx.epsilon(&a).map_err(|e| e.to_string())?;
        let eb = ctx.epsilon(&b).map_err(|e| e.to_string())?;
        let eab = ctx
            .epsilon(&a.concat(&b).unwrap())
            .map_err(|e| e.to_string())?;
        ensure(eab == ea + eb, || format!("additivity fails on {a} | {b}"))?;
        let d = delta(2 * n);
        let conj = d.concat(&a).unwrap().concat(&d.inverse()).unwrap();
        ensure(ea + ctx.epsilon(&conj).unwrap() == Z2::ZERO, || {
            format!("conjugation fails on {a}")
        })?;
    }
    for n in 2..=4 {
        let ctx = MixedContext::new(n).unwrap();
        let e = ctx.epsilon(&full_twist(2 * n)).unwrap();
        ensure(e == Z2::from_parity((n * n) as i64), || {
            format!("full twist n = {n}: {e}")
        })?;
    }
    Ok("table, 300 seeded pairs, full twists".into())
}

fn cabling_suite() -> Outcome {
    for (n, name, l, r) in relation_corpus() {
        for k in 2..=3 {
            let (cl, cr) = (cable(&l, k).unwrap(), cable(&r, k).unwrap());
            ensure(eq(&cl, &cr)?, || format!("n = {n}, k = {k}: {name}"))?;
        }
    }
    let mut r = rng(DEFAULT_SEED);
    let ctx = MixedContext::new(2).unwrap();
    for _ in 0..100 {
        let w = random_b2nn_word(&mut r, 2, 12);
        ensure(check_cabling_diagram(&w, 2, &ctx).unwrap(), || {
            format!("diagram fails on {w}")
        })?;
    }
    Ok("relations at k = 2, 3 and 100 diagram checks".into())
}

fn targets() -> Vec<Target> {
    vec![
        Target::Plane,
        Target::Sphere,
        Target::ProjectivePlane,
        Target::OrientableClosed(1),
        Target::OrientableClosed(2),
        Target::NonOrientableClosed(2),
        Target::NonOrientableClosed(3),
    ]
}

/// Expected verdicts written out independently of the library's rule order.
fn expected_surface(p: &SurfacePresentation, target: Target, n: usize) -> (Status, Status) {
    use Status::*;
    let odd = theta_hat_delta(p) == Some(Z2::ONE);
    let ns = |s: Status| if n == 1 { Vacuous } else { s };
    let th = |g: &str| p.theta_at(g) == Some(Z2::ONE);
    let one_bup = matches!(target, Target::OrientableClosed(_))
        && match p.kind() {
            SurfaceKind::NonOrientableEven { m: 0 } => th("u"),
            SurfaceKind::NonOrientableOdd { m: 1 } => th("c") && (th("a1") || th("a2")),
            _ => false,
        };
    match (target, odd, n.is_multiple_of(2)) {
        (Target::Plane, false, _) => (DoesNotHave, ns(DoesNotHave)),
        (Target::Plane, true, true) => (Has, DoesNotHave),
        (Target::Plane, true, false) => (Has, ns(Has)),
        (_, false, _) => (DoesNotHave, ns(DoesNotHave)),
        (_, true, even) => (
            if one_bup { Has } else { Unknown },
            if even { DoesNotHave } else { ns(Unknown) },
        ),
    }
}

fn classifier_suite() -> Outcome {
    let mut rows = 0;
    for target in targets() {
        for n in 1..=5 {
            let v = classify(&TripleDescriptor::new(DomainSpace::Sphere, target, n))
                .map_err(|e| e.to_string())?;
            let want = match n {
                1 if target == Target::Sphere => (Status::DoesNotHave, Status::Vacuous),
                1 => (Status::Has, Status::Vacuous),
                _ => (Status::Has, Status::Has),
            };
            ensure((v.split, v.nonsplit) == want, || {
                format!("sphere -> {target}, n = {n}")
            })?;
            ensure(
                v.has_n_bup() == Some(n >= 2 || target != Target::Sphere),
                || format!("sphere -> {target}, n = {n}: n-BUP"),
            )?;
            rows += 1;
        }
    }
    let domains = surface_domains(2);
    for p in &domains {
        for target in targets() {
            for n in 1..=4 {
                let t = TripleDescriptor::new(DomainSpace::Surface(p.clone()), target, n);
                let v = classify(&t).map_err(|e| e.to_string())?;
                let want = expected_surface(p, target, n);
                ensure((v.split, v.nonsplit) == want, || {
                    format!("{t}: got ({}, {}), want {want:?}", v.split, v.nonsplit)
                })?;
                ensure(!v.provenance.is_empty(), || format!("{t}: no provenance"))?;
                rows += 1;
            }
        }
    }
    let mut validated = 0;
    for p in &domains {
        for n in 1..=4 {
            let t = TripleDescriptor::new(DomainSpace::Surface(p.clone()), Target::Plane, n);
            cross_validate(&t).map_err(|e| format!("{t}: {e}"))?;
            validated += 1;
        }
    }
    Ok(format!(
        "{rows} rows, {validated} plane instances cross-validated"
    ))
}

fn engine_health() -> Outcome {
    let mut r = rng(DEFAULT_SEED);
    for _ in 0..500 {
        let strands = r.gen_range(2..=6);
        let w = random_word(&mut r, strands, 40);
        ensure(is_trivial(&w.concat(&w.inverse()).unwrap()), || {
            format!("w w^-1 for {w}")
        })?;
        let nf = normal_form(&w);
        let mut v = w.clone();
        for _ in 0..20 {
            v = random_artin_rewrite(&mut r, &v);
            ensure(normal_form(&v) == nf, || format!("rewrite {v} of {w}"))?;
        }
    }
    Ok("500 words, 20 rewrites each".into())
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("presentation soundness", presentation_soundness),
        ("delta conjugation reverses generators", delta_conjugation),
        (
            "full twist is delta squared and central",
            full_twist_central,
        ),
        ("cross-block pure generators", cross_block_generators),
        ("permutation of delta", delta_permutation),
        ("reversing-swap identities", reversing_swap_identities),
        ("witness suite", witness_suite),
        ("epsilon suite", epsilon_suite),
        ("cabling", cabling_suite),
        ("classifier", classifier_suite),
        ("word-problem engine health", engine_health),
    ];
    let mut failed = Vec::new();
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match &outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}; {secs:.2}s)", k + 1),
            Err(why) => {
                println!("criterion {}: FAIL  {name}: {why}", k + 1);
                failed.push(k + 1);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", criteria.len());
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
