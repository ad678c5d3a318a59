//! The `verify-paper` regression table: published identities, witness
//! homomorphisms and classifier rows, each run as an independent check.

use mixbraid::braid::{a_gen, a_gen_cross, delta, full_twist, reversing_swap};
use mixbraid::cabling::{cable, check_cabling_diagram};
use mixbraid::classifier::{
    classify, cross_validate, surface_domains, DomainSpace, Status, Target, TripleDescriptor,
};
use mixbraid::mixed::{bnn_generators, bnn_relations, MixedContext};
use mixbraid::sample::{random_artin_rewrite, random_b2nn_word, random_bnn_word, random_word, rng};
use mixbraid::surface::{
    nonsplit_witness, odd_delta_witness, odd_delta_witness_cabled, split_witness, theta_hat_delta,
    verify_hom, SurfaceKind, SurfacePresentation,
};
use mixbraid::{are_equal, is_trivial, normal_form, BraidWord, Permutation, Z2};

use crate::parse::parse_braid;

/// Outcome of one check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Check = Result<String, String>;
type NamedCheck = (&'static str, Box<dyn Fn() -> Check>);

fn fail<T>(msg: impl Into<String>) -> Result<T, String> {
    Err(msg.into())
}

fn lib<T>(r: mixbraid::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn equal(a: &BraidWord, b: &BraidWord) -> Result<bool, String> {
    lib(are_equal(a, b))
}

fn conj(x: &BraidWord, y: &BraidWord) -> Result<BraidWord, String> {
    lib(x.concat(y).and_then(|w| w.concat(&x.inverse())))
}

fn relations(max_n: usize) -> Check {
    let mut count = 0;
    for n in 2..=max_n.max(2) {
        for r in bnn_relations(n) {
            if !equal(&lib(r.lhs_word(n))?, &lib(r.rhs_word(n))?)? {
                return fail(format!("n = {n}: {r}"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} relation instances"))
}

fn delta_conjugation(max_n: usize) -> Check {
    for m in 2..=2 * max_n.max(1) {
        for i in 1..m {
            let lhs = conj(&delta(m), &lib(BraidWord::generator(m, i))?)?;
            if !equal(&lhs, &lib(BraidWord::generator(m, m - i))?)? {
                return fail(format!("m = {m}, i = {i}"));
            }
        }
    }
    Ok(format!("m = 2..{}", 2 * max_n.max(1)))
}

fn full_twist_central(max_n: usize) -> Check {
    for m in 2..=2 * max_n.max(1) {
        let f = full_twist(m);
        if !equal(&f, &delta(m).pow(2))? {
            return fail(format!("m = {m}: full twist differs from delta squared"));
        }
        for i in 1..m {
            let s = lib(BraidWord::generator(m, i))?;
            if !equal(&conj(&s, &f)?, &f)? {
                return fail(format!("m = {m}: s{i} does not commute"));
            }
        }
    }
    Ok("delta squared and central".into())
}

fn cross_block(max_n: usize) -> Check {
    for n in 1..=max_n {
        for i in 1..=n {
            for j in n + 1..=2 * n {
                if !equal(&lib(a_gen_cross(i, j, n))?, &lib(a_gen(i, j, 2 * n))?)? {
                    return fail(format!("n = {n}, A{i},{j}"));
                }
            }
        }
    }
    Ok(format!("n = 1..{max_n}"))
}

fn delta_permutation(max_n: usize) -> Check {
    for n in 1..=max_n.max(4) {
        let pairs: Vec<(usize, usize)> = (1..=n).map(|i| (i, 2 * n + 1 - i)).collect();
        let expected = lib(Permutation::from_transpositions(2 * n, &pairs))?;
        let d = delta(2 * n);
        let ctx = lib(MixedContext::new(n))?;
        if d.permutation() != expected || !lib(ctx.in_bnn2(&d))? || lib(ctx.in_bnn(&d))? {
            return fail(format!("n = {n}"));
        }
    }
    Ok("product of transpositions (i, 2n+1-i)".into())
}

fn reversing_swap_identities() -> Check {
    let om = reversing_swap();
    let d4 = delta(4);
    let mid = lib(BraidWord::from_signed(4, &[2, 1, -3, -2]))?;
    if !equal(&conj(&d4, &om)?, &mid)? || !equal(&mid, &om.inverse())? {
        return fail("delta conjugation of the swap");
    }
    let chain = lib(BraidWord::from_signed(4, &[2, 1, 1, -3, -3, -2]))?;
    if !equal(&chain, &om.pow(-2))? {
        return fail("squared chain");
    }
    let ctx = lib(MixedContext::new(2))?;
    let s2 = lib(BraidWord::from_signed(4, &[2]))?;
    let aux = [
        conj(&s2, &om.inverse())?,
        conj(&s2, &lib(BraidWord::from_signed(4, &[3, 3]))?)?,
    ];
    for w in &aux {
        if !lib(ctx.in_bnn(w))? {
            return fail(format!("{w} is not block-preserving"));
        }
    }
    for i in [1i64, 2] {
        for e in [1i64, -1] {
            let lhs = lib(BraidWord::from_signed(4, &[i * e, i + 1, -i * e]))?;
            let rhs = lib(BraidWord::from_signed(4, &[-(i + 1) * e, i, (i + 1) * e]))?;
            if !equal(&lhs, &rhs)? {
                return fail(format!("Artin consequence i = {i}, sign {e}"));
            }
        }
    }
    Ok("swap inversion, chain, auxiliary braids".into())
}

fn even_delta_witnesses(max_n: usize) -> Check {
    let mut count = 0;
    for p in surface_domains(1) {
        if theta_hat_delta(&p) == Some(Z2::ONE) {
            continue;
        }
        for n in 2..=max_n.max(2) {
            let s = lib(verify_hom(&lib(split_witness(&p, n))?))?.as_tuple();
            let ns = lib(verify_hom(&lib(nonsplit_witness(&p, n))?))?.as_tuple();
            if s != (true, true, true) || ns != (true, true, false) {
                return fail(format!("{p}, n = {n}: {s:?} / {ns:?}"));
            }
            count += 2;
        }
    }
    Ok(format!("{count} homomorphisms"))
}

fn odd_delta_witnesses(max_n: usize) -> Check {
    let mut count = 0;
    for p in surface_domains(1) {
        if theta_hat_delta(&p) != Some(Z2::ONE) {
            continue;
        }
        let (h, _) = lib(odd_delta_witness(&p))?;
        let mut homs = vec![h];
        for n in (4..=max_n).step_by(2) {
            homs.push(lib(odd_delta_witness_cabled(&p, n))?);
        }
        for h in homs {
            let got = lib(verify_hom(&h))?.as_tuple();
            if got != (true, true, false) {
                return fail(format!("{p}, n = {}: {got:?}", h.n()));
            }
            count += 1;
        }
    }
    Ok(format!("{count} homomorphisms"))
}

fn epsilon_suite(max_n: usize, seed: u64) -> Check {
    for n in 2..=max_n.max(2) {
        let ctx = lib(MixedContext::new(n))?;
        for g in bnn_generators(n) {
            if lib(ctx.epsilon(&lib(g.word(n))?))? != g.epsilon_table(n) {
                return fail(format!("n = {n}: table disagrees on {g}"));
            }
        }
        if lib(ctx.epsilon(&full_twist(2 * n)))? != Z2::from_parity((n * n) as i64) {
            return fail(format!("n = {n}: full twist parity"));
        }
    }
    let mut r = rng(seed);
    for k in 0..300 {
        let n = 2 + k % (max_n.max(2) - 1);
        let ctx = lib(MixedContext::new(n))?;
        let a = random_bnn_word(&mut r, n, 12);
        let b = random_bnn_word(&mut r, n, 12);
        let (ea, eb) = (lib(ctx.epsilon(&a))?, lib(ctx.epsilon(&b))?);
        if lib(ctx.epsilon(&lib(a.concat(&b))?))? != ea + eb {
            return fail(format!("additivity on {a} | {b}"));
        }
        if ea + lib(ctx.epsilon(&conj(&delta(2 * n), &a)?))? != Z2::ZERO {
            return fail(format!("delta conjugation on {a}"));
        }
    }
    Ok("table, full twist, 300 seeded pairs".into())
}

fn cabling_suite(max_n: usize, seed: u64) -> Check {
    for n in 2..=max_n.max(2) {
        for r in bnn_relations(n) {
            for k in 2..=3 {
                let l = lib(cable(&lib(r.lhs_word(n))?, k))?;
                let rh = lib(cable(&lib(r.rhs_word(n))?, k))?;
                if !equal(&l, &rh)? {
                    return fail(format!("n = {n}, k = {k}: {r}"));
                }
            }
        }
    }
    let mut r = rng(seed);
    let ctx = lib(MixedContext::new(2))?;
    for _ in 0..100 {
        let w = random_b2nn_word(&mut r, 2, 12);
        if !lib(check_cabling_diagram(&w, 2, &ctx))? {
            return fail(format!("diagram fails on {w}"));
        }
    }
    Ok("relations at k = 2, 3 and 100 seeded block-swap signs".into())
}

fn parser_examples() -> Check {
    let p = |s: &str, m: usize| parse_braid(s, m).map_err(|e| e.to_string());
    if p("s2 s3 s1^-1 s2^-1", 4)? != reversing_swap() {
        return fail("swap literal");
    }
    if !equal(&p("(s1 s2)^3", 3)?, &p("F3", 3)?)? {
        return fail("(s1 s2)^3 differs from the full twist");
    }
    if !equal(
        &p("D4 s2 s3 s1^-1 s2^-1 D4^-1", 4)?,
        &p("(s2 s3 s1^-1 s2^-1)^-1", 4)?,
    )? {
        return fail("swap inversion through the parser");
    }
    Ok("three parsed identities".into())
}

fn klein(theta_u: bool) -> Result<SurfacePresentation, String> {
    lib(SurfacePresentation::new(
        SurfaceKind::NonOrientableEven { m: 0 },
        vec![Z2::from(theta_u), Z2::from(!theta_u)],
    ))
}

fn classifier_rows(max_n: usize) -> Check {
    use Status::*;
    let row = |d: DomainSpace, t: Target, n: usize| -> Result<(Status, Status), String> {
        let v = lib(classify(&TripleDescriptor::new(d, t, n)))?;
        Ok((v.split, v.nonsplit))
    };
    let torus = lib(SurfacePresentation::new(
        SurfaceKind::Orientable { m: 1 },
        vec![Z2::ONE, Z2::ZERO],
    ))?;
    let cases = [
        (
            row(DomainSpace::Sphere, Target::Sphere, 1)?,
            (DoesNotHave, Vacuous),
        ),
        (
            row(DomainSpace::Sphere, Target::ProjectivePlane, 1)?,
            (Has, Vacuous),
        ),
        (row(DomainSpace::Sphere, Target::Sphere, 2)?, (Has, Has)),
        (
            row(DomainSpace::Surface(klein(true)?), Target::Plane, 3)?,
            (Has, Has),
        ),
        (
            row(DomainSpace::Surface(klein(true)?), Target::Plane, 2)?,
            (Has, DoesNotHave),
        ),
        (
            row(DomainSpace::Surface(torus), Target::Plane, 5)?,
            (DoesNotHave, DoesNotHave),
        ),
        (
            row(DomainSpace::Surface(klein(false)?), Target::Plane, 4)?,
            (DoesNotHave, DoesNotHave),
        ),
        (
            row(
                DomainSpace::Surface(klein(true)?),
                Target::OrientableClosed(1),
                4,
            )?,
            (Has, DoesNotHave),
        ),
    ];
    for (k, (got, want)) in cases.iter().enumerate() {
        if got != want {
            return fail(format!("row {}: got {got:?}, want {want:?}", k + 1));
        }
    }
    let mut validated = 0;
    for p in surface_domains(1) {
        for n in 1..=max_n.min(4) {
            let t = TripleDescriptor::new(DomainSpace::Surface(p.clone()), Target::Plane, n);
            cross_validate(&t).map_err(|e| format!("{t}: {e}"))?;
            validated += 1;
        }
    }
    Ok(format!("{} rows, {validated} cross-validated", cases.len()))
}

fn engine_health(seed: u64) -> Check {
    let mut r = rng(seed);
    for k in 0..500 {
        let w = random_word(&mut r, 2 + k % 5, 40);
        if !is_trivial(&lib(w.concat(&w.inverse()))?) {
            return fail(format!("w w^-1 for {w}"));
        }
        let nf = normal_form(&w);
        let mut v = w.clone();
        for _ in 0..20 {
            v = random_artin_rewrite(&mut r, &v);
            if normal_form(&v) != nf {
                return fail(format!("rewrite {v} of {w}"));
            }
        }
    }
    Ok("500 seeded words, 20 rewrites each".into())
}

/// Runs every check; `max_n` bounds block sizes, `seed` drives the sampled ones.
pub fn run_all(max_n: usize, seed: u64) -> Vec<CheckResult> {
    let max_n = max_n.max(1);
    let checks: Vec<NamedCheck> = vec![
        (
            "block-preserving presentation relations",
            Box::new(move || relations(max_n)),
        ),
        (
            "half-twist conjugation reverses generators",
            Box::new(move || delta_conjugation(max_n)),
        ),
        (
            "full twist is the central delta squared",
            Box::new(move || full_twist_central(max_n)),
        ),
        (
            "cross-block pure generators",
            Box::new(move || cross_block(max_n)),
        ),
        (
            "half-twist permutation",
            Box::new(move || delta_permutation(max_n)),
        ),
        (
            "four-strand block swap identities",
            Box::new(reversing_swap_identities),
        ),
        (
            "split and non-split witnesses",
            Box::new(move || even_delta_witnesses(max_n)),
        ),
        (
            "block-swap witnesses and cablings",
            Box::new(move || odd_delta_witnesses(max_n)),
        ),
        (
            "crossing parity epsilon",
            Box::new(move || epsilon_suite(max_n, seed)),
        ),
        ("cabling", Box::new(move || cabling_suite(max_n, seed))),
        ("parser identities", Box::new(parser_examples)),
        (
            "classifier rows and cross-validation",
            Box::new(move || classifier_rows(max_n)),
        ),
        (
            "word-problem engine health",
            Box::new(move || engine_health(seed)),
        ),
    ];
    checks
        .into_iter()
        .map(|(name, run)| {
            let (passed, detail) = match run() {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CheckResult {
                name,
                passed,
                detail,
            }
        })
        .collect()
}
