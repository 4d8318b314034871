//! JSON input documents describing a user-defined family: a complex matrix
//! Lie algebra, involutions given as conjugators or basis-image tables, and
//! optional group data and sample points. Validation errors carry paths
//! into the document.

use serde::Deserialize;

use liefam::catalog::CatalogCase;
use liefam::exactlin::{ExactMatrix, FieldTag, GaussianRational};
use liefam::familyalg::{FamilyData, ProjPoint};
use liefam::familygroup::{GroupKind, GroupSpec};
use liefam::involutions::{compose_commuting_pair, doubling_embedding_for_sigma, InvolutionSpec};
use liefam::liecore::LieAlgebraSpec;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct InputDocument {
    #[serde(default)]
    name: Option<String>,
    ambient: usize,
    /// Basis matrices, each a row-major grid of exact scalar strings.
    basis: Vec<Vec<Vec<String>>>,
    /// Linear Cartan involution (give either theta, or sigma1 and sigma2).
    #[serde(default)]
    theta: Option<InvolutionDoc>,
    /// Antilinear real structure paired with theta.
    #[serde(default)]
    sigma: Option<InvolutionDoc>,
    /// Commuting antilinear pair; theta is their composition.
    #[serde(default)]
    sigma1: Option<InvolutionDoc>,
    #[serde(default)]
    sigma2: Option<InvolutionDoc>,
    /// Optional group data; requires conjugator-realized involutions.
    #[serde(default)]
    group: Option<GroupDoc>,
    /// Optional sample override, points as "a:b" strings.
    #[serde(default)]
    sample: Option<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct InvolutionDoc {
    antilinear: bool,
    #[serde(default)]
    conjugator: Option<Vec<Vec<String>>>,
    /// images[i] = coordinates of the image of basis element i.
    #[serde(default)]
    images: Option<Vec<Vec<String>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupDoc {
    /// Membership relation; "special-linear" is the only supported tag.
    kind: String,
    theta_conjugator: Vec<Vec<String>>,
}

fn parse_scalar(s: &str, path: &str) -> Result<GaussianRational, String> {
    s.parse().map_err(|e| format!("{path}: {e}"))
}

fn parse_matrix(rows: &[Vec<String>], path: &str) -> Result<ExactMatrix, String> {
    let mut parsed = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let mut out = Vec::with_capacity(row.len());
        for (j, entry) in row.iter().enumerate() {
            out.push(parse_scalar(entry, &format!("{path}[{i}][{j}]"))?);
        }
        parsed.push(out);
    }
    ExactMatrix::from_rows(parsed).map_err(|e| format!("{path}: {e}"))
}

fn parse_involution(
    doc: &InvolutionDoc,
    algebra: &LieAlgebraSpec,
    path: &str,
) -> Result<InvolutionSpec, String> {
    match (&doc.conjugator, &doc.images) {
        (Some(rows), None) => {
            let t = parse_matrix(rows, &format!("{path}.conjugator"))?;
            InvolutionSpec::from_conjugator(algebra, t, doc.antilinear)
                .map_err(|e| format!("{path}: {e}"))
        }
        (None, Some(images)) => {
            if images.len() != algebra.dim() {
                return Err(format!(
                    "{path}.images: expected {} rows, got {}",
                    algebra.dim(),
                    images.len()
                ));
            }
            let mut parsed = Vec::with_capacity(images.len());
            for (i, row) in images.iter().enumerate() {
                if row.len() != algebra.dim() {
                    return Err(format!(
                        "{path}.images[{i}]: expected {} coordinates, got {}",
                        algebra.dim(),
                        row.len()
                    ));
                }
                let mut coords = Vec::with_capacity(row.len());
                for (j, entry) in row.iter().enumerate() {
                    coords.push(parse_scalar(entry, &format!("{path}.images[{i}][{j}]"))?);
                }
                parsed.push(coords);
            }
            Ok(InvolutionSpec::from_images(doc.antilinear, parsed, None))
        }
        (Some(_), Some(_)) => Err(format!("{path}: give a conjugator or images, not both")),
        (None, None) => Err(format!("{path}: needs a conjugator or an images table")),
    }
}

/// True when S can realize sigma as plain conjugation X -> S conj(X) S.
fn plain_conjugation_candidate(s: &ExactMatrix) -> bool {
    s.is_square() && s == &s.conj() && &(s * s) == &ExactMatrix::identity(s.nrows())
}

pub fn parse_document(text: &str) -> Result<CatalogCase, String> {
    parse_document_with_sample(text).map(|(case, _)| case)
}

pub fn parse_document_with_sample(
    text: &str,
) -> Result<(CatalogCase, Option<Vec<ProjPoint>>), String> {
    let doc: InputDocument = serde_json::from_str(text).map_err(|e| format!("document: {e}"))?;
    let name = doc.name.clone().unwrap_or_else(|| "user-input".into());

    if doc.basis.is_empty() {
        return Err("basis: must not be empty".into());
    }
    let mut basis = Vec::with_capacity(doc.basis.len());
    for (i, rows) in doc.basis.iter().enumerate() {
        let m = parse_matrix(rows, &format!("basis[{i}]"))?;
        if m.nrows() != doc.ambient || m.ncols() != doc.ambient {
            return Err(format!(
                "basis[{i}]: expected a {0}x{0} matrix",
                doc.ambient
            ));
        }
        basis.push(m);
    }
    let base = LieAlgebraSpec::new(doc.ambient, FieldTag::Complex, basis)
        .map_err(|e| format!("basis: {e}"))?;
    base.check_closure().map_err(|e| format!("basis: {e}"))?;

    // Resolve (theta, sigma) from whichever involution fields are present.
    let (theta, sigma) = match (&doc.theta, &doc.sigma1, &doc.sigma2) {
        (Some(theta_doc), None, None) => {
            if theta_doc.antilinear {
                return Err("theta: must be linear (antilinear = false)".into());
            }
            let theta = parse_involution(theta_doc, &base, "theta")?;
            let sigma = match &doc.sigma {
                Some(sigma_doc) => {
                    if !sigma_doc.antilinear {
                        return Err("sigma: must be antilinear".into());
                    }
                    Some(parse_involution(sigma_doc, &base, "sigma")?)
                }
                None => None,
            };
            (theta, sigma)
        }
        (None, Some(d1), Some(d2)) => {
            if doc.sigma.is_some() {
                return Err("sigma: redundant next to sigma1/sigma2".into());
            }
            for (path, d) in [("sigma1", d1), ("sigma2", d2)] {
                if !d.antilinear {
                    return Err(format!("{path}: must be antilinear"));
                }
            }
            let s1 = parse_involution(d1, &base, "sigma1")?;
            let s2 = parse_involution(d2, &base, "sigma2")?;
            let (theta, sigma) = compose_commuting_pair(&base, &s1, &s2)
                .map_err(|e| format!("sigma1/sigma2: {e}"))?;
            (theta, Some(sigma))
        }
        _ => {
            return Err(
                "involutions: give either theta (with optional sigma) or the pair sigma1, sigma2"
                    .into(),
            )
        }
    };

    // Build the family. A sigma realized by a real conjugator with square I
    // is used directly; any other sigma is routed through the doubling
    // embedding (which drops group data).
    let mut doubled = false;
    let family = match &sigma {
        None => {
            // No real structure: fake a sigma-less family is not supported
            // by FamilyData, so require sigma for now.
            return Err("sigma: a real structure is required".into());
        }
        Some(s) => {
            let direct = s
                .conjugator()
                .filter(|c| plain_conjugation_candidate(c))
                .cloned();
            match direct {
                Some(conj) => FamilyData::new(base.clone(), theta.clone(), Some((s.clone(), conj)))
                    .map_err(|e| format!("family: {e}"))?,
                None => {
                    doubled = true;
                    let emb = doubling_embedding_for_sigma(&base, s)
                        .map_err(|e| format!("sigma: {e}"))?;
                    let theta_d = emb.transfer(&theta, None);
                    let sigma_d = emb.transfer(s, Some(emb.s.clone()));
                    FamilyData::new(emb.algebra.clone(), theta_d, Some((sigma_d, emb.s.clone())))
                        .map_err(|e| format!("family: {e}"))?
                }
            }
        }
    };

    let group = match &doc.group {
        None => None,
        Some(gd) => {
            if doubled {
                return Err(
                    "group: unsupported when sigma requires the doubling embedding".into(),
                );
            }
            if gd.kind != "special-linear" {
                return Err(format!(
                    "group.kind: only \"special-linear\" is supported, got {:?}",
                    gd.kind
                ));
            }
            let t = parse_matrix(&gd.theta_conjugator, "group.theta_conjugator")?;
            Some(
                GroupSpec::from_family(&family, t, GroupKind::SpecialLinear)
                    .map_err(|e| format!("group: {e}"))?,
            )
        }
    };

    let sample = match &doc.sample {
        None => None,
        Some(strings) => {
            let mut points = Vec::with_capacity(strings.len());
            for (i, s) in strings.iter().enumerate() {
                points.push(s.parse().map_err(|e| format!("sample[{i}]: {e}"))?);
            }
            Some(points)
        }
    };

    Ok((
        CatalogCase {
            name,
            description: "user-supplied input document".into(),
            family,
            group,
            positive_form: None,
            negative_form: None,
        },
        sample,
    ))
}
