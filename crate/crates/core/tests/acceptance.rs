//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line (run with `--nocapture` to see them all).

use std::time::Instant;

use liefam::catalog;
use liefam::familyalg::{
    exact_sqrt, transition_action, witness_isomorphism, ProjPoint, Sign, WitnessStatus,
};
use liefam::familygroup::{contraction_limit, group_real_structure_check};
use liefam::involutions::{dual_form_identities, fixed_real_form, standard};
use liefam::liecore::jacobi_check;
use liefam::report::{default_sample, verify, Mode};

fn verdict(criterion: &str, ok: bool) {
    println!(
        "ACCEPTANCE {criterion}: {}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion failed: {criterion}");
}

fn fixed_fingerprints_by_regime(
    case: &catalog::CatalogCase,
    sample: &[ProjPoint],
) -> (
    Vec<liefam::liecore::Fingerprint>,
    Vec<liefam::liecore::Fingerprint>,
    Vec<ProjPoint>,
) {
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    let mut degenerate = Vec::new();
    for p in sample {
        if !p.is_real() {
            continue;
        }
        match p.sign().unwrap() {
            Sign::Zero => degenerate.push(p.clone()),
            sign => {
                let fp = case
                    .family
                    .fixed_fiber_at(p)
                    .unwrap()
                    .fingerprint()
                    .unwrap();
                if sign == Sign::Positive {
                    pos.push(fp);
                } else {
                    neg.push(fp);
                }
            }
        }
    }
    (pos, neg, degenerate)
}

/// Criterion 1: regime trichotomy for the sl(2) case, exact arithmetic,
/// under 5 seconds.
#[test]
fn criterion_1_sl2_regime_trichotomy() {
    let start = Instant::now();
    let case = catalog::build("sl2-split-compact").unwrap();
    let sample = default_sample(42, 0);
    assert_eq!(sample.len(), 10);
    let (pos, neg, degenerate) = fixed_fingerprints_by_regime(&case, &sample);

    let split = fixed_real_form(case.family.base(), case.family.sigma().unwrap()).unwrap();
    let compact =
        fixed_real_form(case.family.base(), case.family.sigma_theta().unwrap()).unwrap();
    let split_fp = split.fingerprint().unwrap();
    let compact_fp = compact.fingerprint().unwrap();

    let mut ok = split_fp.dim == 3 && split_fp.killing_signature == (2, 1, 0);
    ok &= compact_fp.killing_signature == (0, 3, 0);
    ok &= !pos.is_empty() && pos.iter().all(|fp| fp == &split_fp);
    ok &= !neg.is_empty() && neg.iter().all(|fp| fp == &compact_fp);
    ok &= degenerate.len() == 2;
    for p in &degenerate {
        let (_, rep) = liefam::familyalg::degeneration_at(&case.family, p).unwrap();
        ok &= rep.reductive_dim == 1 && rep.ideal_dim == 2 && rep.reductive_matches;
    }
    ok &= start.elapsed().as_secs_f64() < 5.0;
    verdict("1 (sl2 regime trichotomy)", ok);
}

/// Criterion 2: same suite for sl(3) and the gl (1,0,1) case, under 30 s.
#[test]
fn criterion_2_sl3_and_gl_regimes() {
    let start = Instant::now();
    let sample = default_sample(42, 0);

    let case = catalog::build("sl3-split-compact").unwrap();
    let (pos, neg, _) = fixed_fingerprints_by_regime(&case, &sample);
    let split_fp = fixed_real_form(case.family.base(), case.family.sigma().unwrap())
        .unwrap()
        .fingerprint()
        .unwrap();
    let compact_fp = fixed_real_form(case.family.base(), case.family.sigma_theta().unwrap())
        .unwrap()
        .fingerprint()
        .unwrap();
    let mut ok = split_fp.killing_signature == (5, 3, 0);
    ok &= compact_fp.killing_signature == (0, 8, 0);
    ok &= pos.iter().all(|fp| fp == &split_fp) && !pos.is_empty();
    ok &= neg.iter().all(|fp| fp == &compact_fp) && !neg.is_empty();

    let case = catalog::build("gl-upq-1-0-1").unwrap();
    let (pos, neg, _) = fixed_fingerprints_by_regime(&case, &sample);
    let forms = catalog::named_forms().unwrap();
    let fp_of = |n: &str| {
        forms
            .iter()
            .find(|(name, _)| *name == n)
            .unwrap()
            .1
            .fingerprint()
            .unwrap()
    };
    let u2 = fp_of("u(2)");
    let u11 = fp_of("u(1,1)");
    ok &= pos.iter().all(|fp| fp == &u2) && !pos.is_empty();
    ok &= neg.iter().all(|fp| fp == &u11) && !neg.is_empty();
    // u(2) and u(1,1) are separated by the Killing signature of the
    // derived (semisimple) part: (0,3,0) vs (2,1,0).
    ok &= u2 != u11;
    ok &= u2.killing_signature != u11.killing_signature;

    ok &= start.elapsed().as_secs_f64() < 30.0;
    verdict("2 (sl3 and gl regimes)", ok);
}

/// Criterion 3: witness isomorphisms are exact at perfect-square points and
/// float-verified below 1e-9 elsewhere.
#[test]
fn criterion_3_witness_isomorphisms() {
    let mut ok = true;
    for name in ["sl2-split-compact", "gl-upq-1-0-1"] {
        let case = catalog::build(name).unwrap();
        for p in default_sample(42, 0) {
            if !p.is_real() || p.sign().unwrap() == Sign::Zero {
                continue;
            }
            let w = witness_isomorphism(&case.family, &p).unwrap();
            ok &= w.ok();
            let square = exact_sqrt(&p.product()).is_some();
            match w.status {
                WitnessStatus::Exact => ok &= square,
                WitnessStatus::FloatVerified { residual } => {
                    ok &= !square && residual < 1e-9;
                }
            }
        }
    }
    verdict("3 (witness isomorphisms)", ok);
}

/// Criterion 4: closure, Jacobi, grading, and constant dimension across
/// every fiber of the sample.
#[test]
fn criterion_4_grading_and_closure() {
    let mut ok = true;
    for name in ["sl2-split-compact", "sl3-split-compact"] {
        let case = catalog::build(name).unwrap();
        let mut dims = Vec::new();
        for p in default_sample(42, 0) {
            let fiber = case.family.fiber_at(&p).unwrap();
            dims.push(fiber.dim());
            match fiber.check_closure() {
                Ok(sc) => ok &= jacobi_check(&sc),
                Err(_) => ok = false,
            }
            ok &= liefam::familyalg::grading_check(&case.family, &p).unwrap();
        }
        ok &= dims.windows(2).all(|w| w[0] == w[1]);
    }
    verdict("4 (grading and closure)", ok);
}

/// Criterion 5: the transition cocycle is exactly 1 on the X-sector and
/// alpha/beta on the Y-sector at five sample points.
#[test]
fn criterion_5_transition_cocycle() {
    let case = catalog::build("sl2-split-compact").unwrap();
    let points = [(1, 1), (2, 1), (-1, 1), (3, 2), (-9, 4)];
    let mut ok = true;
    for (a, b) in points {
        let p = ProjPoint::from_ints(a, b);
        let t = transition_action(&case.family, &p).unwrap();
        ok &= t.ok && t.x_scalar == "1";
        let expected = p
            .alpha()
            .checked_div(p.beta())
            .unwrap()
            .to_string();
        ok &= t.y_scalar == expected;
    }
    verdict("5 (transition cocycle)", ok);
}

/// Criterion 6: dual-form decompositions and the i-multiplication identity
/// hold exactly for both catalog involution pairs.
#[test]
fn criterion_6_dual_form_identities() {
    let mut ok = true;
    // The split/compact pairs on sl(2) and sl(3).
    for name in ["sl2-split-compact", "sl3-split-compact"] {
        let case = catalog::build(name).unwrap();
        let base = case.family.base();
        let s1 = standard::entrywise_conj(base).unwrap();
        let s2 = standard::neg_conj_transpose(base).unwrap();
        ok &= dual_form_identities(base, &s1, &s2).unwrap().all_ok();
    }
    // The unitary pairs (sigma, sigma theta) of the gl families.
    for name in ["gl-upq-1-0-1", "gl-upq-1-1-1"] {
        let case = catalog::build(name).unwrap();
        let fd = &case.family;
        ok &= dual_form_identities(fd.base(), fd.sigma().unwrap(), fd.sigma_theta().unwrap())
            .unwrap()
            .all_ok();
    }
    verdict("6 (dual-form identities)", ok);
}

/// Criterion 7: contraction rate z^2 and convergence at z = 1e-4, three
/// samples, under 5 seconds.
#[test]
fn criterion_7_group_contraction() {
    use liefam::familygroup::expm::expm;
    use nalgebra::Complex;
    use rand::{Rng, SeedableRng};

    let start = Instant::now();
    let case = catalog::build("sl2-split-compact").unwrap();
    let spec = case.group.as_ref().unwrap();
    let zs = [1e-1, 1e-2, 1e-3, 1e-4];
    let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(42);
    let mut ok = true;
    for _ in 0..3 {
        let mut g_alg = nalgebra::DMatrix::zeros(2, 2);
        for b in spec.basis_theta_plus() {
            g_alg += b * Complex::new(rng.gen_range(-0.5..0.5), 0.0);
        }
        let g = expm(&g_alg);
        let mut x = nalgebra::DMatrix::zeros(2, 2);
        for b in spec.basis_theta_minus() {
            x += b * Complex::new(rng.gen_range(-0.5..0.5), 0.0);
        }
        let rep = contraction_limit(spec, &g, &x, &zs).unwrap();
        ok &= rep.converged;
        ok &= matches!(rep.slope, Some(s) if (1.9..=2.1).contains(&s));
        // Distance at z = 1e-4 below 1e-6.
        ok &= rep.distances.last().copied().unwrap_or(f64::INFINITY) < 1e-6;
    }
    ok &= start.elapsed().as_secs_f64() < 5.0;
    verdict("7 (group contraction)", ok);
}

/// Criterion 8: fixed-point solves at z = ±1 with 50 samples per side, plus
/// the degenerate-fiber parameterization.
#[test]
fn criterion_8_group_fixed_points() {
    let case = catalog::build("sl2-split-compact").unwrap();
    let spec = case.group.as_ref().unwrap();
    let rep = group_real_structure_check(spec, 42, 50).unwrap();
    let ok = rep.positive_fixed_ok
        && rep.negative_fixed_ok
        && rep.generic_unfixed_ok
        && rep.degenerate_fixed_ok
        && rep.degenerate_unfixed_ok
        && rep.max_fixed_residual < 1e-8;
    verdict("8 (group fixed points)", ok);
}

/// Criterion 9: verification reports are byte-identical across runs with
/// the same seed.
#[test]
fn criterion_9_determinism() {
    let case = catalog::build("sl2-split-compact").unwrap();
    let sample = default_sample(42, 3);
    let run = || {
        serde_json::to_vec(&verify(&case, Mode::All, 42, &sample).unwrap()).unwrap()
    };
    let a = run();
    let b = run();
    verdict("9 (deterministic reports)", a == b);
}
