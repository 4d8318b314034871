//! Verification reports: runs the full invariant suite of the family over
//! a deterministic point sample and assembles machine-readable results.

use std::str::FromStr;

use nalgebra::Complex;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde::Serialize;

use crate::catalog::{named_forms, CatalogCase};
use crate::familyalg::{
    degeneration_at, family_theta_check, grading_check, transition_action, witness_isomorphism,
    DegenerationReport, ProjPoint, Sign, TransitionReport, WitnessReport,
};
use crate::familygroup::{
    contraction_limit, differential_consistency_check, fiber_closure_check,
    group_real_structure_check, ClosureReport, ContractionReport, GroupSpec,
    RealStructureReport, TOL_CONSTRUCTION, TOL_LIMIT, TOL_MEMBERSHIP,
};
use crate::involutions::{dual_form_identities, fixed_real_form, DualFormReport};
use crate::liecore::{jacobi_check, Fingerprint};
use crate::Error;

pub const REPORT_VERSION: &str = "1.0";

/// Which parts of the suite to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Algebra,
    Group,
    All,
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "algebra" => Ok(Mode::Algebra),
            "group" => Ok(Mode::Group),
            "all" => Ok(Mode::All),
            other => Err(Error::Parse(format!(
                "mode must be algebra, group or all, got {other:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Tolerances {
    pub construction: f64,
    pub membership: f64,
    pub limit: f64,
    pub witness_float: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            construction: TOL_CONSTRUCTION,
            membership: TOL_MEMBERSHIP,
            limit: TOL_LIMIT,
            witness_float: 1e-9,
        }
    }
}

/// Per-point results of the algebra-level suite.
#[derive(Debug, Clone, Serialize)]
pub struct PointReport {
    pub point: String,
    pub regime: String,
    pub fiber_dim: usize,
    pub closure_ok: bool,
    pub jacobi_ok: bool,
    pub grading_ok: bool,
    pub family_theta_ok: bool,
    pub real_structure_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transition: Option<TransitionReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fixed_fingerprint: Option<Fingerprint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matched_form: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degeneration: Option<DegenerationReport>,
}

/// Summary of one sign regime over the real sample points.
#[derive(Debug, Clone, Serialize)]
pub struct RegimeSummary {
    pub regime: String,
    pub points: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fingerprint: Option<Fingerprint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matched_form: Option<String>,
    pub constant_within_regime: bool,
    pub matches_expected: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupReport {
    pub sanity_ok: bool,
    pub closure: Vec<ClosureReport>,
    pub branch_swap_max_residual: f64,
    pub contraction: Vec<ContractionReport>,
    pub real_structure: RealStructureReport,
    pub differential_residual: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub version: &'static str,
    pub case: String,
    pub mode: Mode,
    pub seed: u64,
    pub tolerances: Tolerances,
    pub points: Vec<PointReport>,
    pub regimes: Vec<RegimeSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual_form: Option<DualFormReport>,
    pub typo_notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupReport>,
    pub failures: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The default sample: ten fixed points covering all regimes, plus seeded
/// random rational points. Sorted and deduplicated.
pub fn default_sample(seed: u64, random_extra: usize) -> Vec<ProjPoint> {
    let mut points = vec![
        ProjPoint::from_ints(1, 1),
        ProjPoint::from_ints(2, 1),
        ProjPoint::from_ints(4, 1),
        ProjPoint::from_ints(-1, 1),
        ProjPoint::from_ints(-2, 1),
        ProjPoint::from_ints(-1, 2),
        ProjPoint::from_ints(0, 1),
        ProjPoint::from_ints(1, 0),
        ProjPoint::from_ints(3, 2),
        ProjPoint::from_ints(-9, 4),
    ];
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    for _ in 0..random_extra {
        let a = rng.gen_range(-12i64..=12);
        let b = rng.gen_range(1i64..=12);
        points.push(ProjPoint::from_ints(a, b));
    }
    sort_points(&mut points);
    points.dedup();
    points
}

pub fn sort_points(points: &mut [ProjPoint]) {
    points.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
}

fn regime_name(p: &ProjPoint) -> String {
    if !p.is_real() {
        return "complex".into();
    }
    match p.sign().expect("real point") {
        Sign::Positive => "positive".into(),
        Sign::Negative => "negative".into(),
        Sign::Zero => "zero".into(),
    }
}

/// Notes about statements that only hold after correcting apparent typos in
/// the source material; recorded so the report is self-explanatory.
pub fn typo_notes() -> Vec<String> {
    vec![
        "gl-upq families use J_theta = diag(I_p, -I_d, I_q); with a plus sign on the middle block the involution would be trivial and no interpolation would occur".into(),
        "the multiplication-by-i identity is verified in the form i*(g^{sigma1} ∩ g^{-sigma2}) = g^{-sigma1} ∩ g^{sigma2}".into(),
        "the degenerate fiber splits off the abelian ideal g^{-theta} ∩ g^{sigma} inside the fixed fiber (not its (-theta,-sigma) counterpart)".into(),
    ]
}

/// Runs the verification suite for a catalog case over the given sample.
pub fn verify(
    case: &CatalogCase,
    mode: Mode,
    seed: u64,
    sample: &[ProjPoint],
) -> crate::Result<VerificationReport> {
    let mut points = sample.to_vec();
    sort_points(&mut points);
    points.dedup();

    let mut failures: Vec<String> = Vec::new();
    let forms = named_forms()?;
    let fd = &case.family;

    // Expected regime fingerprints, computed independently of the fibers.
    let expected_pos = match fd.sigma() {
        Some(sigma) => Some(fixed_real_form(fd.base(), sigma)?.fingerprint()?),
        None => None,
    };
    let expected_neg = match fd.sigma_theta() {
        Some(st) => Some(fixed_real_form(fd.base(), st)?.fingerprint()?),
        None => None,
    };

    let match_form = |fp: &Fingerprint| -> Option<String> {
        for (name, form) in &forms {
            if let Ok(candidate) = form.fingerprint() {
                if &candidate == fp {
                    return Some((*name).to_string());
                }
            }
        }
        None
    };

    let mut point_reports = Vec::with_capacity(points.len());
    let mut fiber_dims = Vec::new();
    for p in &points {
        let regime = regime_name(p);
        let mut closure_ok = true;
        let mut jacobi_ok = true;

        let fiber = match fd.fiber_at(p) {
            Ok(f) => f,
            Err(e) => {
                failures.push(format!("point {p}: fiber construction failed: {e}"));
                continue;
            }
        };
        fiber_dims.push(fiber.dim());
        match fiber.check_closure() {
            Ok(sc) => {
                if !jacobi_check(&sc) {
                    jacobi_ok = false;
                    failures.push(format!("point {p}: Jacobi identity fails"));
                }
            }
            Err(e) => {
                closure_ok = false;
                failures.push(format!("point {p}: closure fails: {e}"));
            }
        }
        let grading_ok = match grading_check(fd, p) {
            Ok(ok) => {
                if !ok {
                    failures.push(format!("point {p}: Z/2-grading violated"));
                }
                ok
            }
            Err(e) => {
                failures.push(format!("point {p}: grading check errored: {e}"));
                false
            }
        };
        let family_theta_ok = match family_theta_check(fd, p) {
            Ok(rep) => {
                if !rep.ok() {
                    failures.push(format!("point {p}: family involution check failed"));
                }
                rep.ok()
            }
            Err(e) => {
                failures.push(format!("point {p}: family involution errored: {e}"));
                false
            }
        };
        let real_structure_ok = if fd.sigma().is_some() {
            let mut ok = true;
            for b in fiber.basis() {
                if let Err(e) = fd.real_structure_apply(p, b) {
                    ok = false;
                    failures.push(format!("point {p}: real structure: {e}"));
                    break;
                }
            }
            ok
        } else {
            true
        };

        let transition = if !p.is_degenerate() {
            match transition_action(fd, p) {
                Ok(t) => {
                    if !t.ok {
                        failures.push(format!("point {p}: transition cocycle mismatch"));
                    }
                    Some(t)
                }
                Err(e) => {
                    failures.push(format!("point {p}: transition errored: {e}"));
                    None
                }
            }
        } else {
            None
        };

        let mut fixed_fingerprint = None;
        let mut matched_form = None;
        let mut witness = None;
        let mut degeneration = None;
        if p.is_real() && fd.sigma().is_some() {
            match fd.fixed_fiber_at(p) {
                Ok(fixed) => match fixed.fingerprint() {
                    Ok(fp) => {
                        matched_form = match_form(&fp);
                        let expected = match p.sign()? {
                            Sign::Positive => expected_pos.as_ref(),
                            Sign::Negative => expected_neg.as_ref(),
                            Sign::Zero => None,
                        };
                        if let Some(exp) = expected {
                            if exp != &fp {
                                failures.push(format!(
                                    "point {p}: fixed fiber fingerprint {fp} differs from the expected real form {exp}"
                                ));
                            }
                        }
                        fixed_fingerprint = Some(fp);
                    }
                    Err(e) => failures.push(format!("point {p}: fixed fingerprint: {e}")),
                },
                Err(e) => failures.push(format!("point {p}: fixed fiber: {e}")),
            }
            match p.sign()? {
                Sign::Zero => match degeneration_at(fd, p) {
                    Ok((_, rep)) => {
                        if !rep.reductive_matches {
                            failures.push(format!(
                                "point {p}: degenerate reductive part does not match g^theta ∩ g^sigma"
                            ));
                        }
                        degeneration = Some(rep);
                    }
                    Err(e) => failures.push(format!("point {p}: degeneration: {e}")),
                },
                _ => match witness_isomorphism(fd, p) {
                    Ok(w) => {
                        if !w.ok() {
                            failures.push(format!("point {p}: witness isomorphism failed"));
                        }
                        witness = Some(w);
                    }
                    Err(e) => failures.push(format!("point {p}: witness: {e}")),
                },
            }
        }

        point_reports.push(PointReport {
            point: p.to_string(),
            regime,
            fiber_dim: fiber.dim(),
            closure_ok,
            jacobi_ok,
            grading_ok,
            family_theta_ok,
            real_structure_ok,
            transition,
            fixed_fingerprint,
            matched_form,
            witness,
            degeneration,
        });
    }

    if fiber_dims.windows(2).any(|w| w[0] != w[1]) {
        failures.push("fiber dimension is not constant across the sample".into());
    }

    // Regime summaries.
    let mut regimes = Vec::new();
    for (regime, expected) in [
        ("negative", expected_neg.as_ref()),
        ("zero", None),
        ("positive", expected_pos.as_ref()),
    ] {
        let in_regime: Vec<&PointReport> = point_reports
            .iter()
            .filter(|pr| pr.regime == regime)
            .collect();
        if in_regime.is_empty() {
            continue;
        }
        let fps: Vec<&Fingerprint> = in_regime
            .iter()
            .filter_map(|pr| pr.fixed_fingerprint.as_ref())
            .collect();
        let constant = fps.windows(2).all(|w| w[0] == w[1]) && fps.len() == in_regime.len();
        if !constant {
            failures.push(format!("regime {regime}: fingerprints vary across the regime"));
        }
        let fingerprint = fps.first().map(|fp| (*fp).clone());
        let matched_form = fingerprint.as_ref().and_then(&match_form);
        let matches_expected = match (expected, fingerprint.as_ref()) {
            (Some(exp), Some(fp)) => exp == fp,
            (None, _) => true,
            (Some(_), None) => false,
        };
        regimes.push(RegimeSummary {
            regime: regime.into(),
            points: in_regime.iter().map(|pr| pr.point.clone()).collect(),
            fingerprint,
            matched_form,
            constant_within_regime: constant,
            matches_expected,
        });
    }

    // Dual-form identities for the commuting antilinear pair (sigma,
    // sigma theta).
    let dual_form = match (fd.sigma(), fd.sigma_theta()) {
        (Some(s1), Some(s2)) => {
            let rep = dual_form_identities(fd.base(), s1, s2)?;
            if !rep.all_ok() {
                failures.push("dual-form identities failed".into());
            }
            Some(rep)
        }
        _ => None,
    };

    // Group-level suite.
    let group = if matches!(mode, Mode::Group | Mode::All) {
        match &case.group {
            None => None,
            Some(spec) => Some(run_group_suite(fd, spec, seed, &points, &mut failures)?),
        }
    } else {
        None
    };

    Ok(VerificationReport {
        version: REPORT_VERSION,
        case: case.name.to_string(),
        mode,
        seed,
        tolerances: Tolerances::default(),
        points: point_reports,
        regimes,
        dual_form,
        typo_notes: typo_notes(),
        group,
        failures,
    })
}

fn run_group_suite(
    fd: &crate::familyalg::FamilyData,
    spec: &GroupSpec,
    seed: u64,
    points: &[ProjPoint],
    failures: &mut Vec<String>,
) -> crate::Result<GroupReport> {
    let sanity_ok = match spec.sanity_check(seed, 20) {
        Ok(()) => true,
        Err(e) => {
            failures.push(format!("group sanity: {e}"));
            false
        }
    };

    // Closure in a few nondegenerate real fibers.
    let mut closure = Vec::new();
    let mut branch_swap_max = 0.0f64;
    let mut rng = ChaCha20Rng::seed_from_u64(seed ^ 0x5eed);
    let mut zs: Vec<f64> = points
        .iter()
        .filter(|p| p.is_real() && !p.is_degenerate())
        .take(3)
        .map(|p| {
            let a = p.alpha().to_c64().re;
            let b = p.beta().to_c64().re;
            a / b
        })
        .collect();
    zs.push(-2.5);
    for z in zs {
        let zc = Complex::new(z, 0.0);
        let rep = fiber_closure_check(spec, zc, 50, seed)?;
        if !rep.ok {
            failures.push(format!("group closure fails at z = {z}"));
        }
        let g = spec.sample_member(&mut rng);
        branch_swap_max = branch_swap_max.max(spec.branch_swap_residual(zc, &g)?);
        closure.push(rep);
    }
    if branch_swap_max > TOL_MEMBERSHIP {
        failures.push(format!(
            "square-root branch independence residual {branch_swap_max:.3e}"
        ));
    }

    // Contraction for three (g, X) samples.
    let z_seq = [1e-1, 1e-2, 1e-3, 1e-4];
    let mut contraction = Vec::new();
    let theta_plus = spec.basis_theta_plus().to_vec();
    let theta_minus = spec.basis_theta_minus().to_vec();
    for i in 0..3 {
        let g = if theta_plus.is_empty() {
            nalgebra::DMatrix::identity(spec.ambient(), spec.ambient())
        } else {
            crate::familygroup::expm::expm(&sample_real_combination(&theta_plus, &mut rng))
        };
        let x = if theta_minus.is_empty() {
            nalgebra::DMatrix::zeros(spec.ambient(), spec.ambient())
        } else {
            sample_real_combination(&theta_minus, &mut rng)
        };
        let rep = contraction_limit(spec, &g, &x, &z_seq)?;
        if !rep.ok() {
            failures.push(format!("contraction sample {i} failed (slope {:?})", rep.slope));
        }
        contraction.push(rep);
    }

    let real_structure = group_real_structure_check(spec, seed, 50)?;
    if !real_structure.ok() {
        failures.push("group real-structure fixed-point checks failed".into());
    }

    let differential_residual = match differential_consistency_check(fd, spec) {
        Ok(r) => r,
        Err(e) => {
            failures.push(format!("group/algebra differential: {e}"));
            f64::INFINITY
        }
    };

    Ok(GroupReport {
        sanity_ok,
        closure,
        branch_swap_max_residual: branch_swap_max,
        contraction,
        real_structure,
        differential_residual,
    })
}

fn sample_real_combination(
    basis: &[nalgebra::DMatrix<Complex<f64>>],
    rng: &mut ChaCha20Rng,
) -> nalgebra::DMatrix<Complex<f64>> {
    let mut acc = nalgebra::DMatrix::zeros(basis[0].nrows(), basis[0].ncols());
    for b in basis {
        let c: f64 = rng.gen_range(-0.5..0.5);
        acc += b * Complex::new(c, 0.0);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn sl2_full_verification_passes() {
        let case = catalog::build("sl2-split-compact").unwrap();
        let sample = default_sample(42, 2);
        let report = verify(&case, Mode::All, 42, &sample).unwrap();
        assert!(report.passed(), "failures: {:?}", report.failures);
        let pos = report.regimes.iter().find(|r| r.regime == "positive").unwrap();
        assert_eq!(pos.matched_form.as_deref(), Some("sl(2,R)"));
        let neg = report.regimes.iter().find(|r| r.regime == "negative").unwrap();
        assert_eq!(neg.matched_form.as_deref(), Some("su(2)"));
    }

    #[test]
    fn reports_are_deterministic() {
        let case = catalog::build("sl2-split-compact").unwrap();
        let sample = default_sample(7, 3);
        let a = serde_json::to_string(&verify(&case, Mode::All, 7, &sample).unwrap()).unwrap();
        let b = serde_json::to_string(&verify(&case, Mode::All, 7, &sample).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn trivial_case_verifies() {
        let case = catalog::build("trivial-constant").unwrap();
        let sample = default_sample(1, 0);
        let report = verify(&case, Mode::All, 1, &sample).unwrap();
        assert!(report.passed(), "failures: {:?}", report.failures);
        // Every regime carries the same form.
        for r in &report.regimes {
            if r.regime != "zero" {
                assert_eq!(r.matched_form.as_deref(), Some("sl(2,R)"));
            }
        }
    }
}
