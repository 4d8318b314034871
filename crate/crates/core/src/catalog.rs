//! Built-in example families: the split/compact interpolation for sl(n)
//! with n = 2, 3, the indefinite-unitary family over gl(n) for signature
//! parameters (p, q, d), and a trivial constant family.

use crate::exactlin::{ExactMatrix, FieldTag, GaussianRational};
use crate::familyalg::FamilyData;
use crate::familygroup::{GroupKind, GroupSpec};
use crate::involutions::{doubling_embedding_for_sigma, standard, InvolutionSpec};
use crate::liecore::LieAlgebraSpec;
use crate::Error;

/// A named example with its family data and optional group-level data.
#[derive(Debug, Clone)]
pub struct CatalogCase {
    pub name: String,
    pub description: String,
    pub family: FamilyData,
    pub group: Option<GroupSpec>,
    /// Expected named real form over the positive regime (alpha*beta > 0).
    pub positive_form: Option<String>,
    /// Expected named real form over the negative regime.
    pub negative_form: Option<String>,
}

pub fn names() -> Vec<&'static str> {
    vec![
        "trivial-constant",
        "sl2-split-compact",
        "sl3-split-compact",
        "gl-upq-1-0-1",
        "gl-upq-1-1-1",
    ]
}

pub fn build(name: &str) -> crate::Result<CatalogCase> {
    match name {
        "trivial-constant" => trivial_constant(),
        "sl2-split-compact" => sl_split_compact(2),
        "sl3-split-compact" => sl_split_compact(3),
        "gl-upq-1-0-1" => gl_upq(1, 0, 1),
        "gl-upq-1-1-1" => gl_upq(1, 1, 1),
        other => Err(Error::Config(format!("unknown catalog case {other:?}"))),
    }
}

pub fn all() -> crate::Result<Vec<CatalogCase>> {
    names().into_iter().map(build).collect()
}

/// Basis of sl(n): off-diagonal units E_ij and the diagonal differences
/// H_i = E_ii - E_{i+1,i+1}.
pub fn sl_basis(n: usize) -> Vec<ExactMatrix> {
    let mut basis = Vec::with_capacity(n * n - 1);
    for i in 0..n - 1 {
        let mut h = ExactMatrix::zero(n, n);
        h.set(i, i, GaussianRational::one());
        h.set(i + 1, i + 1, -&GaussianRational::one());
        basis.push(h);
    }
    for i in 0..n {
        for j in 0..n {
            if i != j {
                basis.push(ExactMatrix::unit(n, i, j));
            }
        }
    }
    basis
}

/// Basis of gl(n): all matrix units.
pub fn gl_basis(n: usize) -> Vec<ExactMatrix> {
    let mut basis = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            basis.push(ExactMatrix::unit(n, i, j));
        }
    }
    basis
}

fn sl_algebra(n: usize) -> crate::Result<LieAlgebraSpec> {
    LieAlgebraSpec::new(n, FieldTag::Complex, sl_basis(n))
}

/// The indefinite-unitary real form u(p, q) of gl(p+q), built from the
/// antilinear involution X -> -J conj(X)^t J with J = diag(I_p, -I_q).
pub fn u_pq(p: usize, q: usize) -> crate::Result<LieAlgebraSpec> {
    let n = p + q;
    let base = LieAlgebraSpec::new(n, FieldTag::Complex, gl_basis(n))?;
    let j = signature_matrix(&[(p, 1), (q, -1)]);
    let sigma = InvolutionSpec::from_map(&base, true, |x| {
        -&(&(&j * &x.conj().transpose()) * &j)
    }, None)?;
    crate::involutions::fixed_real_form(&base, &sigma)
}

/// Block-diagonal ±1 matrix from (block size, sign) runs.
fn signature_matrix(blocks: &[(usize, i64)]) -> ExactMatrix {
    let n: usize = blocks.iter().map(|(k, _)| k).sum();
    let mut m = ExactMatrix::zero(n, n);
    let mut at = 0;
    for (k, s) in blocks {
        for _ in 0..*k {
            m.set(at, at, GaussianRational::from_int(*s));
            at += 1;
        }
    }
    m
}

fn trivial_constant() -> crate::Result<CatalogCase> {
    let base = sl_algebra(2)?;
    let theta = InvolutionSpec::identity(base.dim());
    let sigma = standard::entrywise_conj(&base)?;
    let family = FamilyData::new(base, theta, Some((sigma, ExactMatrix::identity(2))))?;
    Ok(CatalogCase {
        name: "trivial-constant".into(),
        description: "sl(2) with theta = id: the constant family with every fiber sl(2,R)".into(),
        family,
        group: None,
        positive_form: Some("sl(2,R)".into()),
        negative_form: Some("sl(2,R)".into()),
    })
}

fn sl_split_compact(n: usize) -> crate::Result<CatalogCase> {
    let base = sl_algebra(n)?;
    let theta = standard::neg_transpose(&base)?;
    let sigma = standard::entrywise_conj(&base)?;
    let family = FamilyData::new(base, theta, Some((sigma, ExactMatrix::identity(n))))?;
    // On SL(2) the involution g -> (g^t)^{-1} is conjugation by
    // w = [[0,1],[-1,0]]; for n > 2 it is outer and no conjugator exists,
    // so those cases carry algebra-level data only.
    let group = if n == 2 {
        let w = ExactMatrix::from_int_rows(&[&[0, 1], &[-1, 0]]);
        Some(GroupSpec::from_family(&family, w, GroupKind::SpecialLinear)?)
    } else {
        None
    };
    let (name, description, positive_form, negative_form) = match n {
        2 => (
            "sl2-split-compact",
            "sl(2): interpolation between the split form sl(2,R) and the compact form su(2)",
            "sl(2,R)",
            "su(2)",
        ),
        3 => (
            "sl3-split-compact",
            "sl(3): interpolation between the split form sl(3,R) and the compact form su(3)",
            "sl(3,R)",
            "su(3)",
        ),
        _ => return Err(Error::Config(format!("no catalog entry for sl({n})"))),
    };
    Ok(CatalogCase {
        name: name.into(),
        description: description.into(),
        family,
        group,
        positive_form: Some(positive_form.into()),
        negative_form: Some(negative_form.into()),
    })
}

/// The gl(n) family interpolating between u(p+d, q) and u(p, d+q), with
/// n = p + d + q. Realized through the doubling embedding because the
/// relevant sigma is not plain entrywise conjugation.
///
/// Note: taking the middle block of J_theta with a plus sign would make
/// J_theta the identity and theta trivial; the interpolation needs
/// J_theta = diag(I_p, -I_d, I_q).
fn gl_upq(p: usize, q: usize, d: usize) -> crate::Result<CatalogCase> {
    let n = p + q + d;
    let base = LieAlgebraSpec::new(n, FieldTag::Complex, gl_basis(n))?;
    let j_theta = signature_matrix(&[(p, 1), (d, -1), (q, 1)]);
    let j_sigma = signature_matrix(&[(p + d, 1), (q, -1)]);

    let js = j_sigma.clone();
    let sigma0 = InvolutionSpec::from_map(&base, true, move |x| {
        -&(&(&js * &x.conj().transpose()) * &js)
    }, None)?;
    let theta0 = InvolutionSpec::from_conjugator(&base, j_theta.clone(), false)?;

    // Double so sigma becomes plain conjugation by the swap matrix.
    let emb = doubling_embedding_for_sigma(&base, &sigma0)?;
    let zero = ExactMatrix::zero(n, n);
    let t_doubled = ExactMatrix::from_blocks(&j_theta, &zero, &zero, &j_theta);
    let theta = emb.transfer(&theta0, Some(t_doubled.clone()));
    let sigma = emb.transfer(&sigma0, Some(emb.s.clone()));
    let family = FamilyData::new(emb.algebra, theta, Some((sigma, emb.s.clone())))?;
    let group = Some(GroupSpec::from_family(
        &family,
        t_doubled,
        GroupKind::DoubledGeneralLinear {
            half: n,
            j_sigma,
        },
    )?);

    let (name, description, positive_form, negative_form) = match (p, q, d) {
        (1, 0, 1) => (
            "gl-upq-1-0-1",
            "gl(2) unitary family: u(2) over the positive regime, u(1,1) over the negative",
            "u(2)",
            "u(1,1)",
        ),
        (1, 1, 1) => (
            "gl-upq-1-1-1",
            "gl(3) unitary family: u(2,1) over the positive regime, u(1,2) over the negative",
            "u(2,1)",
            "u(1,2)",
        ),
        _ => return Err(Error::Config(format!("no catalog entry for (p,q,d)=({p},{q},{d})"))),
    };
    Ok(CatalogCase {
        name: name.into(),
        description: description.into(),
        family,
        group,
        positive_form: Some(positive_form.into()),
        negative_form: Some(negative_form.into()),
    })
}

/// Reference table of named real forms with independently constructed
/// bases, for fingerprint matching in reports.
pub fn named_forms() -> crate::Result<Vec<(&'static str, LieAlgebraSpec)>> {
    let split = |n: usize| -> crate::Result<LieAlgebraSpec> {
        LieAlgebraSpec::new(n, FieldTag::Real, sl_basis(n))
    };
    let compact = |n: usize| -> crate::Result<LieAlgebraSpec> {
        // su(n): traceless anti-hermitian, spanned by i H_k, E_jk - E_kj,
        // i (E_jk + E_kj).
        let i = GaussianRational::i();
        let mut basis = Vec::new();
        for k in 0..n - 1 {
            let mut h = ExactMatrix::zero(n, n);
            h.set(k, k, i.clone());
            h.set(k + 1, k + 1, -&i);
            basis.push(h);
        }
        for j in 0..n {
            for k in j + 1..n {
                let e = ExactMatrix::unit(n, j, k);
                let f = ExactMatrix::unit(n, k, j);
                basis.push(&e - &f);
                basis.push((&(&e + &f)).scale(&i));
            }
        }
        LieAlgebraSpec::new(n, FieldTag::Real, basis)
    };
    Ok(vec![
        ("sl(2,R)", split(2)?),
        ("su(2)", compact(2)?),
        ("sl(3,R)", split(3)?),
        ("su(3)", compact(3)?),
        ("u(2)", u_pq(2, 0)?),
        ("u(1,1)", u_pq(1, 1)?),
        ("u(2,1)", u_pq(2, 1)?),
        ("u(1,2)", u_pq(1, 2)?),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_builds() {
        for case in all().unwrap() {
            assert!(!case.description.is_empty());
            case.family.base().check_closure().unwrap();
        }
    }

    #[test]
    fn named_form_fingerprints() {
        let forms = named_forms().unwrap();
        let get = |n: &str| {
            forms
                .iter()
                .find(|(name, _)| *name == n)
                .unwrap()
                .1
                .fingerprint()
                .unwrap()
        };
        assert_eq!(get("sl(2,R)").killing_signature, (2, 1, 0));
        assert_eq!(get("su(2)").killing_signature, (0, 3, 0));
        assert_eq!(get("sl(3,R)").killing_signature, (5, 3, 0));
        assert_eq!(get("su(3)").killing_signature, (0, 8, 0));
        // u(p, q) has a 1-dimensional center and Killing signature of
        // u(p,q)/center on the semisimple part plus the radical kernel.
        assert_eq!(get("u(2)").dim, 4);
        assert_eq!(get("u(1,1)").dim, 4);
        assert_eq!(get("u(2)").center_dim, 1);
        assert_ne!(get("u(2)"), get("u(1,1)"));
        assert_ne!(get("u(2,1)"), get("u(2)"));
        // u(2,1) and u(1,2) are isomorphic; the fingerprint cannot separate
        // them.
        assert_eq!(get("u(2,1)"), get("u(1,2)"));
    }

    #[test]
    fn gl_family_regimes() {
        use crate::familyalg::ProjPoint;
        let case = build("gl-upq-1-0-1").unwrap();
        let forms = named_forms().unwrap();
        let fp_of = |n: &str| {
            forms
                .iter()
                .find(|(name, _)| *name == n)
                .unwrap()
                .1
                .fingerprint()
                .unwrap()
        };
        let pos = case
            .family
            .fixed_fiber_at(&ProjPoint::from_ints(1, 1))
            .unwrap()
            .fingerprint()
            .unwrap();
        assert_eq!(pos, fp_of("u(2)"));
        let neg = case
            .family
            .fixed_fiber_at(&ProjPoint::from_ints(-1, 1))
            .unwrap()
            .fingerprint()
            .unwrap();
        assert_eq!(neg, fp_of("u(1,1)"));
    }

    #[test]
    fn trivial_case_is_constant() {
        use crate::familyalg::ProjPoint;
        let case = build("trivial-constant").unwrap();
        let fp1 = case
            .family
            .fixed_fiber_at(&ProjPoint::from_ints(1, 1))
            .unwrap()
            .fingerprint()
            .unwrap();
        let fp2 = case
            .family
            .fixed_fiber_at(&ProjPoint::from_ints(-2, 1))
            .unwrap()
            .fingerprint()
            .unwrap();
        let fp0 = case
            .family
            .fixed_fiber_at(&ProjPoint::from_ints(0, 1))
            .unwrap()
            .fingerprint()
            .unwrap();
        assert_eq!(fp1, fp2);
        assert_eq!(fp1, fp0);
        assert_eq!(case.family.y_dim(), 0);
    }
}
