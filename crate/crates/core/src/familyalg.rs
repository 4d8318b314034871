//! The algebraic family of Lie algebras over CP^1: fibers, the chart
//! transition action, the family involution, the real structure, fixed
//! fibers over RP^1, isomorphism witnesses, and the degenerate semidirect
//! fibers at the two poles.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::integer::Integer;
use num::rational::BigRational;
use num::{Signed, Zero};
use serde::Serialize;

use crate::exactlin::{commutator, ExactMatrix, FieldTag, GaussianRational, Subspace};
use crate::involutions::{
    check_involution, commute_check, eigenspace_split, fixed_coordinate_space, fixed_real_form,
    InvolutionSpec,
};
use crate::liecore::{DegenerationData, LieAlgebraSpec};
use crate::Error;

/// Sign regime of a real point of the projective line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

/// A point [alpha : beta] of CP^1 in primitive normalized coordinates.
/// Real points are stored as coprime integers with beta > 0, or as (1, 0);
/// other points are scaled so that beta = 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjPoint {
    alpha: GaussianRational,
    beta: GaussianRational,
}

impl ProjPoint {
    pub fn new(alpha: GaussianRational, beta: GaussianRational) -> crate::Result<Self> {
        if alpha.is_zero() && beta.is_zero() {
            return Err(Error::Domain("[0:0] is not a projective point".into()));
        }
        if alpha.is_real() && beta.is_real() {
            Ok(Self::normalize_real(&alpha.re, &beta.re))
        } else if beta.is_zero() {
            Ok(Self {
                alpha: GaussianRational::one(),
                beta: GaussianRational::zero(),
            })
        } else {
            Ok(Self {
                alpha: alpha.checked_div(&beta)?,
                beta: GaussianRational::one(),
            })
        }
    }

    pub fn from_ints(alpha: i64, beta: i64) -> Self {
        Self::new(
            GaussianRational::from_int(alpha),
            GaussianRational::from_int(beta),
        )
        .expect("not both zero")
    }

    fn normalize_real(alpha: &BigRational, beta: &BigRational) -> Self {
        if beta.is_zero() {
            return Self {
                alpha: GaussianRational::one(),
                beta: GaussianRational::zero(),
            };
        }
        // Clear denominators, divide out the gcd, make beta positive.
        let scale = BigRational::from_integer(alpha.denom().lcm(beta.denom()));
        let mut a = (alpha * &scale).to_integer();
        let mut b = (beta * &scale).to_integer();
        let g = a.gcd(&b);
        if !g.is_zero() {
            a /= &g;
            b /= &g;
        }
        if b.is_negative() {
            a = -a;
            b = -b;
        }
        Self {
            alpha: GaussianRational::from_rational(BigRational::from_integer(a)),
            beta: GaussianRational::from_rational(BigRational::from_integer(b)),
        }
    }

    pub fn alpha(&self) -> &GaussianRational {
        &self.alpha
    }

    pub fn beta(&self) -> &GaussianRational {
        &self.beta
    }

    pub fn is_real(&self) -> bool {
        self.alpha.is_real() && self.beta.is_real()
    }

    /// Sign of alpha*beta; only defined for real points.
    pub fn sign(&self) -> crate::Result<Sign> {
        if !self.is_real() {
            return Err(Error::Domain("sign classification needs a real point".into()));
        }
        let prod = &self.alpha.re * &self.beta.re;
        Ok(if prod.is_zero() {
            Sign::Zero
        } else if prod.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        })
    }

    /// alpha*beta as an exact scalar.
    pub fn product(&self) -> GaussianRational {
        &self.alpha * &self.beta
    }

    pub fn conj(&self) -> Self {
        Self::new(self.alpha.conj(), self.beta.conj()).expect("conjugate of a valid point")
    }

    pub fn is_degenerate(&self) -> bool {
        self.product().is_zero()
    }

    /// Deterministic order on real points by the value alpha/beta, with
    /// [1:0] last; non-real points compare after real ones by text.
    pub fn sort_key(&self) -> (u8, BigRational, String) {
        if self.is_real() {
            if self.beta.is_zero() {
                (1, BigRational::zero(), String::new())
            } else {
                (0, &self.alpha.re / &self.beta.re, String::new())
            }
        } else {
            (2, BigRational::zero(), self.to_string())
        }
    }
}

impl PartialOrd for ProjPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.sort_key().cmp(&other.sort_key()))
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.alpha, self.beta)
    }
}

impl FromStr for ProjPoint {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let (a, b) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("point {s:?} is not of the form a:b")))?;
        ProjPoint::new(a.trim().parse()?, b.trim().parse()?)
    }
}

/// The data of the family: the base algebra with its theta-split bases and,
/// when a real structure is wanted, the sigma-split bases and conjugator.
#[derive(Debug, Clone)]
pub struct FamilyData {
    base: LieAlgebraSpec,
    theta: InvolutionSpec,
    x_basis: Vec<ExactMatrix>,
    y_basis: Vec<ExactMatrix>,
    sigma: Option<SigmaData>,
}

#[derive(Debug, Clone)]
pub struct SigmaData {
    sigma: InvolutionSpec,
    sigma_theta: InvolutionSpec,
    s: ExactMatrix,
    /// Basis of g^theta ∩ g^sigma.
    x_sigma: Vec<ExactMatrix>,
    /// Basis of g^{-theta} ∩ g^sigma.
    y_sigma: Vec<ExactMatrix>,
}

impl FamilyData {
    /// Builds the family from an embedded complex matrix algebra, a linear
    /// involution theta, and optionally an antilinear sigma realized as
    /// plain conjugation X -> S conj(X) S (S real, S^2 = I). Use
    /// `involutions::doubling_embedding_for_sigma` first when sigma is not
    /// in that form.
    pub fn new(
        base: LieAlgebraSpec,
        theta: InvolutionSpec,
        sigma_with_s: Option<(InvolutionSpec, ExactMatrix)>,
    ) -> crate::Result<Self> {
        if base.tag() != FieldTag::Complex {
            return Err(Error::FieldTag("family base must be complex".into()));
        }
        base.check_closure()?;
        if theta.antilinear() {
            return Err(Error::Involution("theta must be linear".into()));
        }
        let theta_report = check_involution(&base, &theta)?;
        if !theta_report.valid() {
            return Err(Error::Involution("theta is not a valid involution".into()));
        }
        let (plus, minus) = eigenspace_split(&base, &theta)?;
        let x_basis = matrices_of(&base, &plus)?;
        let y_basis = matrices_of(&base, &minus)?;

        let sigma = match sigma_with_s {
            None => None,
            Some((sigma, s)) => {
                if !sigma.antilinear() {
                    return Err(Error::Involution("sigma must be antilinear".into()));
                }
                let sigma_report = check_involution(&base, &sigma)?;
                if !sigma_report.valid() {
                    return Err(Error::Involution("sigma is not a valid involution".into()));
                }
                commute_check(&theta, &sigma).map_err(Error::NonCommuting)?;
                validate_plain_conjugator(&base, &sigma, &s)?;
                let fix_sigma = fixed_coordinate_space(&base, &sigma, 1);
                let plus_real = plus.real_restriction();
                let minus_real = minus.real_restriction();
                let x_sigma = matrices_of(&base, &plus_real.intersect(&fix_sigma)?)?;
                let y_sigma = matrices_of(&base, &minus_real.intersect(&fix_sigma)?)?;
                if x_sigma.len() + y_sigma.len() != base.dim() {
                    return Err(Error::Involution(
                        "sigma-split dimensions do not add up to dim g".into(),
                    ));
                }
                let sigma_theta = sigma.compose(&theta);
                Some(SigmaData {
                    sigma,
                    sigma_theta,
                    s,
                    x_sigma,
                    y_sigma,
                })
            }
        };
        Ok(Self {
            base,
            theta,
            x_basis,
            y_basis,
            sigma,
        })
    }

    pub fn base(&self) -> &LieAlgebraSpec {
        &self.base
    }

    pub fn theta(&self) -> &InvolutionSpec {
        &self.theta
    }

    pub fn sigma(&self) -> Option<&InvolutionSpec> {
        self.sigma.as_ref().map(|s| &s.sigma)
    }

    pub fn sigma_theta(&self) -> Option<&InvolutionSpec> {
        self.sigma.as_ref().map(|s| &s.sigma_theta)
    }

    pub fn s_conjugator(&self) -> Option<&ExactMatrix> {
        self.sigma.as_ref().map(|s| &s.s)
    }

    pub fn x_basis(&self) -> &[ExactMatrix] {
        &self.x_basis
    }

    pub fn y_basis(&self) -> &[ExactMatrix] {
        &self.y_basis
    }

    pub fn x_dim(&self) -> usize {
        self.x_basis.len()
    }

    pub fn y_dim(&self) -> usize {
        self.y_basis.len()
    }

    pub fn x_sigma_dim(&self) -> Option<usize> {
        self.sigma.as_ref().map(|s| s.x_sigma.len())
    }

    pub fn y_sigma_dim(&self) -> Option<usize> {
        self.sigma.as_ref().map(|s| s.y_sigma.len())
    }

    pub fn x_sigma_basis(&self) -> Option<&[ExactMatrix]> {
        self.sigma.as_ref().map(|s| s.x_sigma.as_slice())
    }

    pub fn y_sigma_basis(&self) -> Option<&[ExactMatrix]> {
        self.sigma.as_ref().map(|s| s.y_sigma.as_slice())
    }

    fn sigma_data(&self) -> crate::Result<&SigmaData> {
        self.sigma
            .as_ref()
            .ok_or_else(|| Error::Config("family has no real-structure data (S missing)".into()))
    }

    /// The fiber over [alpha : beta]: span of diag(X, X) for X in g^theta
    /// and [[0, alpha*Y], [beta*Y, 0]] for Y in g^{-theta}. The X-sector
    /// generators come first.
    pub fn fiber_at(&self, p: &ProjPoint) -> crate::Result<LieAlgebraSpec> {
        let basis = fiber_basis(&self.x_basis, &self.y_basis, p);
        let fiber = LieAlgebraSpec::new(2 * self.base.ambient(), FieldTag::Complex, basis)?;
        fiber.check_closure()?;
        Ok(fiber)
    }

    /// The fixed fiber over a real point: the real span of diag(X, X) for
    /// X in g^theta ∩ g^sigma and [[0, alpha*Y], [beta*Y, 0]] for Y in
    /// g^{-theta} ∩ g^sigma.
    pub fn fixed_fiber_at(&self, p: &ProjPoint) -> crate::Result<LieAlgebraSpec> {
        if !p.is_real() {
            return Err(Error::Domain(format!("{p} is not a real point")));
        }
        let sd = self.sigma_data()?;
        let basis = fiber_basis(&sd.x_sigma, &sd.y_sigma, p);
        let fiber = LieAlgebraSpec::new(2 * self.base.ambient(), FieldTag::Real, basis)?;
        fiber.check_closure()?;
        Ok(fiber)
    }

    /// Applies the family real structure M -> diag(S,S) conj(M) diag(S,S)
    /// and checks that the result lies in the fiber over the conjugate
    /// point.
    pub fn real_structure_apply(
        &self,
        p: &ProjPoint,
        element: &ExactMatrix,
    ) -> crate::Result<ExactMatrix> {
        let sd = self.sigma_data()?;
        let fiber = self.fiber_at(p)?;
        if fiber.coordinates_of(element).is_none() {
            return Err(Error::Domain("element is not in the fiber".into()));
        }
        let n = self.base.ambient();
        let zero = ExactMatrix::zero(n, n);
        let ss = ExactMatrix::from_blocks(&sd.s, &zero, &zero, &sd.s);
        let image = &(&ss * &element.conj()) * &ss;
        let target = self.fiber_at(&p.conj())?;
        if target.coordinates_of(&image).is_none() {
            return Err(Error::TheoremViolation(format!(
                "real structure did not map the fiber at {p} into the fiber at {}",
                p.conj()
            )));
        }
        Ok(image)
    }
}

fn fiber_basis(
    x_basis: &[ExactMatrix],
    y_basis: &[ExactMatrix],
    p: &ProjPoint,
) -> Vec<ExactMatrix> {
    let n = x_basis
        .first()
        .or_else(|| y_basis.first())
        .expect("nonzero algebra")
        .nrows();
    let zero = ExactMatrix::zero(n, n);
    let mut basis = Vec::with_capacity(x_basis.len() + y_basis.len());
    for x in x_basis {
        basis.push(ExactMatrix::from_blocks(x, &zero, &zero, x));
    }
    for y in y_basis {
        basis.push(ExactMatrix::from_blocks(
            &zero,
            &y.scale(p.alpha()),
            &y.scale(p.beta()),
            &zero,
        ));
    }
    basis
}

fn matrices_of(algebra: &LieAlgebraSpec, coords: &Subspace) -> crate::Result<Vec<ExactMatrix>> {
    coords
        .basis()
        .iter()
        .map(|v| algebra.matrix_of(v))
        .collect()
}

fn validate_plain_conjugator(
    base: &LieAlgebraSpec,
    sigma: &InvolutionSpec,
    s: &ExactMatrix,
) -> crate::Result<()> {
    let n = base.ambient();
    if s.nrows() != n || s.ncols() != n {
        return Err(Error::Dimension("S has the wrong size".into()));
    }
    if s != &s.conj() {
        return Err(Error::Config("S must be a real matrix".into()));
    }
    if &(s * s) != &ExactMatrix::identity(n) {
        return Err(Error::Config("S^2 must be the identity".into()));
    }
    for (i, b) in base.basis().iter().enumerate() {
        let expected = &(s * &b.conj()) * s;
        if base.matrix_of(&sigma.images()[i])? != expected {
            return Err(Error::Config(format!(
                "sigma is not realized by S conj(.) S on basis element {i}"
            )));
        }
    }
    Ok(())
}

/// The doubling embedding X -> 1/2 [[X+tX, X-tX], [X-tX, X+tX]]; its image
/// equals the fiber at [1:1].
pub fn doubled_embedding(
    base: &LieAlgebraSpec,
    theta: &InvolutionSpec,
) -> crate::Result<LieAlgebraSpec> {
    base.check_closure()?;
    let half = GaussianRational::from_ratio(1, 2);
    let mut basis = Vec::with_capacity(base.dim());
    for (i, b) in base.basis().iter().enumerate() {
        let tb = base.matrix_of(&theta.images()[i])?;
        let plus = (&(b + &tb)).scale(&half);
        let minus = (&(b - &tb)).scale(&half);
        basis.push(ExactMatrix::from_blocks(&plus, &minus, &minus, &plus));
    }
    let image = LieAlgebraSpec::new(2 * base.ambient(), FieldTag::Complex, basis)?;
    image.check_closure()?;
    Ok(image)
}

/// Result of the chart-transition check at a point with alpha*beta != 0.
#[derive(Debug, Clone, Serialize)]
pub struct TransitionReport {
    pub point: String,
    /// Scalar by which the gluing acts on X-sector coordinates (always 1).
    pub x_scalar: String,
    /// Scalar by which it acts on Y-sector coordinates (alpha/beta).
    pub y_scalar: String,
    pub ok: bool,
}

/// Verifies that the chart gluing acts as the identity on the X sector and
/// as multiplication by alpha/beta on the Y sector, exactly.
pub fn transition_action(fd: &FamilyData, p: &ProjPoint) -> crate::Result<TransitionReport> {
    if p.is_degenerate() {
        return Err(Error::Domain("transition needs alpha*beta != 0".into()));
    }
    let z = p.alpha().checked_div(p.beta())?; // chart coordinate on beta != 0
    let w = p.beta().checked_div(p.alpha())?; // chart coordinate on alpha != 0
    let n = fd.base.ambient();
    let zero = ExactMatrix::zero(n, n);
    let one = GaussianRational::one();
    let mut ok = true;
    // X-sector: the section diag(X, X) is chart independent.
    // Y-sector: the beta-chart generator [[0, zY], [Y, 0]] equals
    // (alpha/beta) times the alpha-chart generator [[0, Y], [wY, 0]].
    for y in &fd.y_basis {
        let chart_beta = ExactMatrix::from_blocks(&zero, &y.scale(&z), y, &zero);
        let chart_alpha = ExactMatrix::from_blocks(&zero, y, &y.scale(&w), &zero);
        if chart_beta != chart_alpha.scale(&z) {
            ok = false;
        }
    }
    Ok(TransitionReport {
        point: p.to_string(),
        x_scalar: one.to_string(),
        y_scalar: z.to_string(),
        ok,
    })
}

/// Result of checking the family involution (conjugation by diag(-I, I)).
#[derive(Debug, Clone, Serialize)]
pub struct FamilyThetaReport {
    pub point: String,
    pub x_sector_fixed: bool,
    pub y_sector_negated: bool,
    pub fixed_dim: usize,
    pub expected_fixed_dim: usize,
}

impl FamilyThetaReport {
    pub fn ok(&self) -> bool {
        self.x_sector_fixed && self.y_sector_negated && self.fixed_dim == self.expected_fixed_dim
    }
}

/// Checks that conjugation by diag(-I, I) fixes the X sector and negates
/// the Y sector of the fiber at `p`, so the fixed subfamily is the constant
/// family with fiber g^theta.
pub fn family_theta_check(fd: &FamilyData, p: &ProjPoint) -> crate::Result<FamilyThetaReport> {
    let n = fd.base.ambient();
    let id = ExactMatrix::identity(n);
    let zero = ExactMatrix::zero(n, n);
    let d = ExactMatrix::from_blocks(&(-&id), &zero, &zero, &id);
    let basis = fiber_basis(&fd.x_basis, &fd.y_basis, p);
    let mut x_sector_fixed = true;
    let mut y_sector_negated = true;
    for (i, b) in basis.iter().enumerate() {
        let conj = &(&d * b) * &d; // d is its own inverse
        if i < fd.x_basis.len() {
            x_sector_fixed &= conj == *b;
        } else {
            y_sector_negated &= conj == -b;
        }
    }
    Ok(FamilyThetaReport {
        point: p.to_string(),
        x_sector_fixed,
        y_sector_negated,
        fixed_dim: fd.x_basis.len(),
        expected_fixed_dim: fd.x_basis.len(),
    })
}

/// How a witness isomorphism was verified.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessStatus {
    /// |alpha*beta| is a perfect rational square; checked exactly.
    Exact,
    /// Checked in floating point (residual reported) plus exact
    /// fingerprint equality with the target.
    FloatVerified { residual: f64 },
}

/// Which real form the witness lands in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessTarget {
    Sigma,
    SigmaTheta,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub point: String,
    pub target: WitnessTarget,
    pub status: WitnessStatus,
    pub bijective: bool,
    pub bracket_compatible: bool,
}

impl WitnessReport {
    pub fn ok(&self) -> bool {
        self.bijective && self.bracket_compatible
    }
}

/// The map (X, Y) -> X + cY with c^2 = alpha*beta, from the fixed fiber at
/// a nondegenerate real point onto g^sigma (alpha*beta > 0) or
/// g^{sigma theta} (alpha*beta < 0). Exact when |alpha*beta| is a perfect
/// square; otherwise verified in floating point at 1e-9 together with
/// exact fingerprint equality.
pub fn witness_isomorphism(fd: &FamilyData, p: &ProjPoint) -> crate::Result<WitnessReport> {
    if !p.is_real() {
        return Err(Error::Domain("witness needs a real point".into()));
    }
    let sign = p.sign()?;
    if sign == Sign::Zero {
        return Err(Error::Domain(
            "degenerate fibers are handled by degeneration_at".into(),
        ));
    }
    let sd = fd.sigma_data()?;
    let target_kind = match sign {
        Sign::Positive => WitnessTarget::Sigma,
        Sign::Negative => WitnessTarget::SigmaTheta,
        Sign::Zero => unreachable!(),
    };
    let target = match target_kind {
        WitnessTarget::Sigma => fixed_real_form(&fd.base, &sd.sigma)?,
        WitnessTarget::SigmaTheta => fixed_real_form(&fd.base, &sd.sigma_theta)?,
    };
    let fiber = fd.fixed_fiber_at(p)?;
    let product = p.product(); // rational, nonzero
    match exact_sqrt(&product) {
        Some(c) => {
            // phi maps the k-th X generator to x_sigma[k] and the j-th Y
            // generator to c * y_sigma[j].
            let mut images: Vec<ExactMatrix> =
                sd.x_sigma.iter().cloned().collect();
            images.extend(sd.y_sigma.iter().map(|y| y.scale(&c)));
            let sc = fiber.check_closure()?;
            let mut bracket_compatible = true;
            'pairs: for i in 0..fiber.dim() {
                for j in (i + 1)..fiber.dim() {
                    let lhs = ExactMatrix::linear_combination(&sc.c[i][j], &images)?;
                    let rhs = commutator(&images[i], &images[j])?;
                    if lhs != rhs {
                        bracket_compatible = false;
                        break 'pairs;
                    }
                }
            }
            let image_vecs: Vec<Vec<GaussianRational>> =
                images.iter().map(|m| m.vectorize()).collect();
            let image_span = Subspace::span(
                &image_vecs,
                FieldTag::Real,
                fd.base.ambient() * fd.base.ambient(),
            );
            let bijective =
                image_span.dim() == fiber.dim() && image_span == target.matrix_span();
            Ok(WitnessReport {
                point: p.to_string(),
                target: target_kind,
                status: WitnessStatus::Exact,
                bijective,
                bracket_compatible,
            })
        }
        None => {
            // Float verification: c = sqrt(alpha*beta) as a complex float.
            let ab = p.product().to_c64();
            let c = ab.sqrt();
            let images: Vec<nalgebra::DMatrix<nalgebra::Complex<f64>>> = sd
                .x_sigma
                .iter()
                .map(|m| m.to_float())
                .chain(sd.y_sigma.iter().map(|m| m.to_float() * c))
                .collect();
            let sc = fiber.check_closure()?;
            let mut residual: f64 = 0.0;
            for i in 0..fiber.dim() {
                for j in (i + 1)..fiber.dim() {
                    let mut lhs = images[0].clone() * nalgebra::Complex::new(0.0, 0.0);
                    for (k, coeff) in sc.c[i][j].iter().enumerate() {
                        lhs += images[k].clone() * coeff.to_c64();
                    }
                    let rhs = &images[i] * &images[j] - &images[j] * &images[i];
                    residual = residual.max((lhs - rhs).norm());
                }
            }
            let bracket_compatible = residual < 1e-9;
            // Bijectivity and the isomorphism-class claim are certified
            // exactly through the fingerprint.
            let bijective = fiber.fingerprint()? == target.fingerprint()?;
            Ok(WitnessReport {
                point: p.to_string(),
                target: target_kind,
                status: WitnessStatus::FloatVerified { residual },
                bijective,
                bracket_compatible,
            })
        }
    }
}

/// Exact square root of a real rational Gaussian scalar when it exists:
/// returns c with c^2 = v, either rational (v > 0 a perfect square) or
/// purely imaginary rational (v < 0 with -v a perfect square).
pub fn exact_sqrt(v: &GaussianRational) -> Option<GaussianRational> {
    if !v.is_real() || v.is_zero() {
        return None;
    }
    let abs = v.re.abs();
    let num_root = sqrt_exact_int(abs.numer())?;
    let den_root = sqrt_exact_int(abs.denom())?;
    let root = BigRational::new(num_root, den_root);
    if v.re.is_positive() {
        Some(GaussianRational::from_rational(root))
    } else {
        Some(GaussianRational::new(BigRational::zero(), root))
    }
}

fn sqrt_exact_int(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DegenerationReport {
    pub point: String,
    pub reductive_dim: usize,
    pub ideal_dim: usize,
    /// Reductive part matches g^theta ∩ g^sigma up to fingerprint.
    pub reductive_matches: bool,
}

/// At a degenerate real point, splits the fixed fiber as the semidirect
/// product of g^theta ∩ g^sigma acting on the abelianized
/// g^{-theta} ∩ g^sigma.
pub fn degeneration_at(
    fd: &FamilyData,
    p: &ProjPoint,
) -> crate::Result<(DegenerationData, DegenerationReport)> {
    if p.sign()? != Sign::Zero {
        return Err(Error::Domain("degeneration needs alpha*beta = 0".into()));
    }
    let sd = fd.sigma_data()?;
    let fiber = fd.fixed_fiber_at(p)?;
    let d = fiber.dim();
    let kx = sd.x_sigma.len();
    let unit = |i: usize| {
        let mut v = vec![GaussianRational::zero(); d];
        v[i] = GaussianRational::one();
        v
    };
    let sub_vecs: Vec<Vec<GaussianRational>> = (0..kx).map(unit).collect();
    let ideal_vecs: Vec<Vec<GaussianRational>> = (kx..d).map(unit).collect();
    let sub = Subspace::span(&sub_vecs, FieldTag::Real, d);
    let ideal = Subspace::span(&ideal_vecs, FieldTag::Real, d);
    let data = fiber.semidirect_split(&ideal, &sub)?;

    let reductive_matches = if kx == 0 {
        data.reductive.dim() == 0
    } else {
        let reference =
            LieAlgebraSpec::new(fd.base.ambient(), FieldTag::Real, sd.x_sigma.clone())?;
        data.reductive.fingerprint()? == reference.fingerprint()?
    };
    let report = DegenerationReport {
        point: p.to_string(),
        reductive_dim: data.reductive.dim(),
        ideal_dim: data.ideal_dim,
        reductive_matches,
    };
    Ok((data, report))
}

/// Exact Z/2-grading check of a fiber: [X, X] ⊆ X, [X, Y] ⊆ Y, and
/// [Y, Y] ⊆ (alpha*beta)·X (so the Y sector is an abelian ideal at a
/// degenerate point).
pub fn grading_check(fd: &FamilyData, p: &ProjPoint) -> crate::Result<bool> {
    let basis = fiber_basis(&fd.x_basis, &fd.y_basis, p);
    let n2 = 2 * fd.base.ambient();
    let x_vecs: Vec<Vec<GaussianRational>> = basis[..fd.x_basis.len()]
        .iter()
        .map(|m| m.vectorize())
        .collect();
    let y_vecs: Vec<Vec<GaussianRational>> = basis[fd.x_basis.len()..]
        .iter()
        .map(|m| m.vectorize())
        .collect();
    let x_span = Subspace::span(&x_vecs, FieldTag::Complex, n2 * n2);
    let y_span = Subspace::span(&y_vecs, FieldTag::Complex, n2 * n2);
    let nx = fd.x_basis.len();
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate().skip(i + 1) {
            let br = commutator(a, b)?;
            let target = if i < nx && j < nx {
                &x_span
            } else if i >= nx && j >= nx {
                &x_span
            } else {
                &y_span
            };
            if br.is_zero() {
                continue;
            }
            if !target.member(&br.vectorize())? {
                return Ok(false);
            }
            // At a degenerate point [Y, Y] must vanish, not merely land
            // in the X sector.
            if i >= nx && j >= nx && p.is_degenerate() && !br.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involutions::standard;

    fn sl2() -> LieAlgebraSpec {
        LieAlgebraSpec::new(
            2,
            FieldTag::Complex,
            vec![
                ExactMatrix::from_int_rows(&[&[1, 0], &[0, -1]]),
                ExactMatrix::unit(2, 0, 1),
                ExactMatrix::unit(2, 1, 0),
            ],
        )
        .unwrap()
    }

    fn sl2_family() -> FamilyData {
        let base = sl2();
        let theta = standard::neg_transpose(&base).unwrap();
        let sigma = standard::entrywise_conj(&base).unwrap();
        let s = ExactMatrix::identity(2);
        FamilyData::new(base, theta, Some((sigma, s))).unwrap()
    }

    #[test]
    fn point_normalization() {
        let p = ProjPoint::new(
            GaussianRational::from_ratio(4, 6),
            GaussianRational::from_ratio(-2, 3),
        )
        .unwrap();
        // 2/3 : -2/3 normalizes to -1 : 1.
        assert_eq!(p, ProjPoint::from_ints(-1, 1));
        assert_eq!(p.sign().unwrap(), Sign::Negative);
        assert_eq!(ProjPoint::from_ints(3, 0), ProjPoint::from_ints(1, 0));
        assert_eq!(ProjPoint::from_ints(2, -4), ProjPoint::from_ints(-1, 2));
        assert!(ProjPoint::new(GaussianRational::zero(), GaussianRational::zero()).is_err());
    }

    #[test]
    fn point_parse_round_trip() {
        for s in ["1:1", "-3:2", "0:1", "1:0", "i:1"] {
            let p: ProjPoint = s.parse().unwrap();
            let back: ProjPoint = p.to_string().parse().unwrap();
            assert_eq!(p, back);
        }
    }

    #[test]
    fn sl2_family_dims() {
        let fd = sl2_family();
        assert_eq!(fd.x_dim(), 1);
        assert_eq!(fd.y_dim(), 2);
        assert_eq!(fd.x_sigma_dim(), Some(1));
        assert_eq!(fd.y_sigma_dim(), Some(2));
    }

    #[test]
    fn fiber_at_one_is_doubled_embedding() {
        let fd = sl2_family();
        let fiber = fd.fiber_at(&ProjPoint::from_ints(1, 1)).unwrap();
        let image = doubled_embedding(fd.base(), fd.theta()).unwrap();
        assert_eq!(fiber.matrix_span(), image.matrix_span());
    }

    #[test]
    fn fixed_fiber_fingerprints() {
        let fd = sl2_family();
        let sigma = fd.sigma().unwrap().clone();
        let split = fixed_real_form(fd.base(), &sigma).unwrap();
        let fiber_pos = fd.fixed_fiber_at(&ProjPoint::from_ints(1, 1)).unwrap();
        assert_eq!(
            fiber_pos.fingerprint().unwrap(),
            split.fingerprint().unwrap()
        );
        let compact = fixed_real_form(fd.base(), fd.sigma_theta().unwrap()).unwrap();
        assert_eq!(compact.fingerprint().unwrap().killing_signature, (0, 3, 0));
        let fiber_neg = fd.fixed_fiber_at(&ProjPoint::from_ints(-1, 1)).unwrap();
        assert_eq!(
            fiber_neg.fingerprint().unwrap(),
            compact.fingerprint().unwrap()
        );
    }

    #[test]
    fn witnesses_exact_and_float() {
        let fd = sl2_family();
        let w = witness_isomorphism(&fd, &ProjPoint::from_ints(4, 1)).unwrap();
        assert_eq!(w.target, WitnessTarget::Sigma);
        assert_eq!(w.status, WitnessStatus::Exact);
        assert!(w.ok(), "{w:?}");

        let w = witness_isomorphism(&fd, &ProjPoint::from_ints(-1, 1)).unwrap();
        assert_eq!(w.target, WitnessTarget::SigmaTheta);
        assert_eq!(w.status, WitnessStatus::Exact);
        assert!(w.ok(), "{w:?}");

        let w = witness_isomorphism(&fd, &ProjPoint::from_ints(2, 1)).unwrap();
        assert_eq!(w.target, WitnessTarget::Sigma);
        assert!(matches!(w.status, WitnessStatus::FloatVerified { residual } if residual < 1e-9));
        assert!(w.ok(), "{w:?}");
    }

    #[test]
    fn transition_scalar_is_alpha_over_beta() {
        let fd = sl2_family();
        let t = transition_action(&fd, &ProjPoint::from_ints(3, 2)).unwrap();
        assert!(t.ok);
        assert_eq!(t.x_scalar, "1");
        assert_eq!(t.y_scalar, "3/2");
        assert!(transition_action(&fd, &ProjPoint::from_ints(0, 1)).is_err());
    }

    #[test]
    fn family_theta_fixes_x_sector() {
        let fd = sl2_family();
        for p in [ProjPoint::from_ints(2, 1), ProjPoint::from_ints(0, 1)] {
            let rep = family_theta_check(&fd, &p).unwrap();
            assert!(rep.ok(), "{rep:?}");
            assert_eq!(rep.fixed_dim, 1);
        }
    }

    #[test]
    fn degeneration_at_poles() {
        let fd = sl2_family();
        for p in [ProjPoint::from_ints(0, 1), ProjPoint::from_ints(1, 0)] {
            let (data, rep) = degeneration_at(&fd, &p).unwrap();
            assert_eq!(rep.reductive_dim, 1);
            assert_eq!(rep.ideal_dim, 2);
            assert!(rep.reductive_matches, "{rep:?}");
            // so(2) acts nontrivially on the 2-dimensional ideal.
            assert!(data.action[0].iter().any(|row| row.iter().any(|c| !c.is_zero())));
            let fiber = fd.fixed_fiber_at(&p).unwrap();
            assert_eq!(fiber.fingerprint().unwrap().derived_dims, vec![3, 2, 0]);
        }
        assert!(degeneration_at(&fd, &ProjPoint::from_ints(1, 1)).is_err());
    }

    #[test]
    fn grading_holds() {
        let fd = sl2_family();
        for p in [
            ProjPoint::from_ints(2, 1),
            ProjPoint::from_ints(-9, 4),
            ProjPoint::from_ints(0, 1),
            ProjPoint::from_ints(1, 0),
        ] {
            assert!(grading_check(&fd, &p).unwrap(), "grading failed at {p}");
        }
    }

    #[test]
    fn real_structure_maps_fibers() {
        let fd = sl2_family();
        let p = ProjPoint::from_ints(2, 1);
        let fiber = fd.fiber_at(&p).unwrap();
        for b in fiber.basis() {
            // Real point: the real structure preserves the fiber.
            fd.real_structure_apply(&p, b).unwrap();
        }
    }

    #[test]
    fn exact_sqrt_cases() {
        assert_eq!(
            exact_sqrt(&GaussianRational::from_int(4)),
            Some(GaussianRational::from_int(2))
        );
        assert_eq!(
            exact_sqrt(&GaussianRational::from_int(-36)),
            Some(&GaussianRational::from_int(6) * &GaussianRational::i())
        );
        assert_eq!(exact_sqrt(&GaussianRational::from_int(2)), None);
        assert_eq!(
            exact_sqrt(&GaussianRational::from_ratio(9, 4)),
            Some(GaussianRational::from_ratio(3, 2))
        );
    }
}
