//! The group-level family: fibers G_z obtained by conjugating the embedded
//! group, the degenerate groups at the poles with their semidirect
//! multiplication, the group real structure, and the numerical
//! contraction-limit test. Everything here runs in floating point with a
//! documented tolerance hierarchy: construction identities at 1e-10,
//! membership and closure at 1e-8, limits at 1e-6.

pub mod expm;

use nalgebra::{Complex, DMatrix};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde::Serialize;

use crate::exactlin::ExactMatrix;
use crate::familyalg::FamilyData;
use crate::involutions::fixed_real_form;
use crate::Error;
use expm::expm;

pub type C64 = Complex<f64>;
pub type FMat = DMatrix<C64>;

pub const TOL_CONSTRUCTION: f64 = 1e-10;
pub const TOL_MEMBERSHIP: f64 = 1e-8;
pub const TOL_LIMIT: f64 = 1e-6;

/// Which matrix group the ambient membership test uses.
#[derive(Debug, Clone)]
pub enum GroupKind {
    /// G = SL(n): |det - 1| within tolerance.
    SpecialLinear,
    /// The block-diagonal copy of GL(half) inside SL(2*half) given by
    /// g -> diag(g, J (g^t)^{-1} J); membership checks the block shape.
    DoubledGeneralLinear { half: usize, j_sigma: ExactMatrix },
}

/// A matrix group with involutions given by conjugators, together with the
/// float shadows of the algebra-level subspace bases needed for sampling.
#[derive(Debug, Clone)]
pub struct GroupSpec {
    ambient: usize,
    kind: GroupKind,
    theta_t: FMat,
    theta_t_inv: FMat,
    sigma_s: FMat,
    /// Complex basis of g.
    basis: Vec<FMat>,
    /// Complex bases of g^theta and g^{-theta}.
    basis_theta_plus: Vec<FMat>,
    basis_theta_minus: Vec<FMat>,
    /// Real bases of g^sigma and g^{sigma theta}.
    basis_sigma: Vec<FMat>,
    basis_sigma_theta: Vec<FMat>,
    /// Real bases of g^theta ∩ g^sigma and g^{-theta} ∩ g^sigma.
    basis_k_sigma: Vec<FMat>,
    basis_p_sigma: Vec<FMat>,
}

impl GroupSpec {
    /// Builds the group data over a family. The conjugator `t` must realize
    /// theta exactly on the algebra basis; sigma must be realized by the
    /// family's S. Both are certified here.
    pub fn from_family(fd: &FamilyData, t: ExactMatrix, kind: GroupKind) -> crate::Result<Self> {
        let base = fd.base();
        let n = base.ambient();
        if t.nrows() != n || t.ncols() != n {
            return Err(Error::Dimension("theta conjugator has the wrong size".into()));
        }
        let t_inv = t.inverse()?;
        for (i, b) in base.basis().iter().enumerate() {
            let expected = &(&t * b) * &t_inv;
            if base.matrix_of(&fd.theta().images()[i])? != expected {
                return Err(Error::Involution(format!(
                    "T does not realize theta on basis element {i}"
                )));
            }
        }
        let s = fd
            .s_conjugator()
            .ok_or_else(|| Error::Config("group checks need the family's real structure".into()))?;
        let sigma = fd
            .sigma()
            .cloned()
            .ok_or_else(|| Error::Config("group checks need sigma".into()))?;
        let sigma_theta = fd.sigma_theta().cloned().expect("sigma implies sigma_theta");

        if let GroupKind::DoubledGeneralLinear { half, j_sigma } = &kind {
            if 2 * half != n {
                return Err(Error::Dimension("doubled GL needs ambient 2*half".into()));
            }
            if j_sigma.nrows() != *half || &(j_sigma * j_sigma) != &ExactMatrix::identity(*half) {
                return Err(Error::Config("J_sigma must satisfy J^2 = I".into()));
            }
        }

        let to_float = |ms: &[ExactMatrix]| -> Vec<FMat> { ms.iter().map(|m| m.to_float()).collect() };
        let basis_sigma = to_float(fixed_real_form(base, &sigma)?.basis());
        let basis_sigma_theta = to_float(fixed_real_form(base, &sigma_theta)?.basis());

        Ok(Self {
            ambient: n,
            kind,
            theta_t: t.to_float(),
            theta_t_inv: t_inv.to_float(),
            sigma_s: s.to_float(),
            basis: to_float(base.basis()),
            basis_theta_plus: to_float(fd.x_basis()),
            basis_theta_minus: to_float(fd.y_basis()),
            basis_sigma,
            basis_sigma_theta,
            basis_k_sigma: to_float(fd.x_sigma_basis().unwrap_or(&[])),
            basis_p_sigma: to_float(fd.y_sigma_basis().unwrap_or(&[])),
        })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis_theta_plus(&self) -> &[FMat] {
        &self.basis_theta_plus
    }

    pub fn basis_theta_minus(&self) -> &[FMat] {
        &self.basis_theta_minus
    }

    pub fn theta_group(&self, g: &FMat) -> FMat {
        &self.theta_t * g * &self.theta_t_inv
    }

    pub fn sigma_group(&self, g: &FMat) -> FMat {
        &self.sigma_s * g.map(|e| e.conj()) * &self.sigma_s
    }

    /// Membership residual: 0 means a perfect member.
    pub fn membership_residual(&self, g: &FMat) -> f64 {
        if g.nrows() != self.ambient || g.ncols() != self.ambient {
            return f64::INFINITY;
        }
        match &self.kind {
            GroupKind::SpecialLinear => (g.clone().determinant() - C64::new(1.0, 0.0)).norm(),
            GroupKind::DoubledGeneralLinear { half, j_sigma } => {
                let h = *half;
                let a = g.view((0, 0), (h, h)).into_owned();
                let b = g.view((0, h), (h, h)).into_owned();
                let c = g.view((h, 0), (h, h)).into_owned();
                let d = g.view((h, h), (h, h)).into_owned();
                let j = j_sigma.to_float();
                let a_tinv = match a.transpose().try_inverse() {
                    Some(m) => m,
                    None => return f64::INFINITY,
                };
                let expected_d = &j * a_tinv * &j;
                b.norm() + c.norm() + (d - expected_d).norm()
            }
        }
    }

    pub fn is_member(&self, g: &FMat) -> bool {
        self.membership_residual(g) < TOL_MEMBERSHIP
    }

    /// The embedding g -> 1/2 [[g + tg, g - tg], [g - tg, g + tg]], checked
    /// against the factorization A diag(g, tg) A with
    /// A = (1/sqrt 2) [[I, I], [I, -I]].
    pub fn embed_group(&self, g: &FMat) -> crate::Result<FMat> {
        if !self.is_member(g) {
            return Err(Error::Membership(format!(
                "embed_group input has membership residual {:.3e}",
                self.membership_residual(g)
            )));
        }
        let tg = self.theta_group(g);
        let half = C64::new(0.5, 0.0);
        let plus = (g + &tg) * half;
        let minus = (g - &tg) * half;
        let embedded = blocks(&plus, &minus, &minus, &plus);
        // Factorization route.
        let n = self.ambient;
        let r = C64::new(1.0 / 2f64.sqrt(), 0.0);
        let id = FMat::identity(n, n);
        let a = blocks(&(&id * r), &(&id * r), &(&id * r), &(-&id * r));
        let via_factor = &a * blocks(g, &FMat::zeros(n, n), &FMat::zeros(n, n), &tg) * &a;
        if (&embedded - &via_factor).norm() > TOL_CONSTRUCTION {
            return Err(Error::TheoremViolation(
                "embedding and factorization disagree".into(),
            ));
        }
        let det = embedded.clone().determinant();
        if (det - C64::new(1.0, 0.0)).norm() > TOL_MEMBERSHIP {
            return Err(Error::TheoremViolation(
                "embedded element is not unimodular".into(),
            ));
        }
        Ok(embedded)
    }

    /// Element of the fiber G_z = d(sqrt z) G_1 d(sqrt z)^{-1}, z != 0.
    pub fn fiber_element(&self, z: C64, g: &FMat) -> crate::Result<FMat> {
        if z.norm() < TOL_CONSTRUCTION {
            return Err(Error::Domain(
                "z = 0 has no conjugated fiber; use the degenerate constructors".into(),
            ));
        }
        let e = self.embed_group(g)?;
        Ok(conjugate_by_d(&e, z.sqrt(), self.ambient))
    }

    /// The other square-root branch lands on the same set: it equals the
    /// fiber element of theta(g). Returns the float residual.
    pub fn branch_swap_residual(&self, z: C64, g: &FMat) -> crate::Result<f64> {
        let e = self.embed_group(g)?;
        let other_branch = conjugate_by_d(&e, -z.sqrt(), self.ambient);
        let theta_route = self.fiber_element(z, &self.theta_group(g))?;
        Ok((other_branch - theta_route).norm())
    }

    /// Samples a group element as exp of a random algebra element with
    /// complex coefficients in the square [-1/2, 1/2]^2.
    pub fn sample_member(&self, rng: &mut ChaCha20Rng) -> FMat {
        expm(&random_combination_complex(&self.basis, rng))
    }

    /// exp of a random real combination of the given real basis.
    fn sample_exp_real(basis: &[FMat], n: usize, rng: &mut ChaCha20Rng) -> FMat {
        if basis.is_empty() {
            return FMat::identity(n, n);
        }
        expm(&random_combination_real(basis, rng))
    }

    /// Samples members and checks that membership is preserved by the two
    /// group involutions, within tolerance.
    pub fn sanity_check(&self, seed: u64, samples: usize) -> crate::Result<()> {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        for i in 0..samples {
            let g = self.sample_member(&mut rng);
            for (what, m) in [
                ("sample", g.clone()),
                ("theta image", self.theta_group(&g)),
                ("sigma image", self.sigma_group(&g)),
            ] {
                let r = self.membership_residual(&m);
                if r > TOL_MEMBERSHIP {
                    return Err(Error::Membership(format!(
                        "{what} of sample {i} has residual {r:.3e}"
                    )));
                }
            }
        }
        Ok(())
    }
}

fn blocks(a: &FMat, b: &FMat, c: &FMat, d: &FMat) -> FMat {
    let n = a.nrows();
    FMat::from_fn(2 * n, 2 * n, |i, j| match (i < n, j < n) {
        (true, true) => a[(i, j)],
        (true, false) => b[(i, j - n)],
        (false, true) => c[(i - n, j)],
        (false, false) => d[(i - n, j - n)],
    })
}

/// Conjugation by d(t) = diag(t I, I): scales the upper-right block by t
/// and the lower-left by 1/t.
fn conjugate_by_d(m: &FMat, t: C64, n: usize) -> FMat {
    let mut out = m.clone();
    for i in 0..n {
        for j in n..2 * n {
            out[(i, j)] *= t;
        }
    }
    let t_inv = C64::new(1.0, 0.0) / t;
    for i in n..2 * n {
        for j in 0..n {
            out[(i, j)] *= t_inv;
        }
    }
    out
}

fn random_combination_real(basis: &[FMat], rng: &mut ChaCha20Rng) -> FMat {
    let mut acc = FMat::zeros(basis[0].nrows(), basis[0].ncols());
    for b in basis {
        let c: f64 = rng.gen_range(-0.5..0.5);
        acc += b * C64::new(c, 0.0);
    }
    acc
}

fn random_combination_complex(basis: &[FMat], rng: &mut ChaCha20Rng) -> FMat {
    let mut acc = FMat::zeros(basis[0].nrows(), basis[0].ncols());
    for b in basis {
        let re: f64 = rng.gen_range(-0.5..0.5);
        let im: f64 = rng.gen_range(-0.5..0.5);
        acc += b * C64::new(re, im);
    }
    acc
}

/// Result of the closure test in a fiber.
#[derive(Debug, Clone, Serialize)]
pub struct ClosureReport {
    pub z: String,
    pub pairs: usize,
    pub max_product_residual: f64,
    pub max_inverse_residual: f64,
    pub max_recovery_residual: f64,
    pub ok: bool,
    pub failure: Option<String>,
}

/// Products and inverses of fiber elements stay in G_z: products agree with
/// fiber images of products, and conjugating back by d recovers a group
/// member.
pub fn fiber_closure_check(
    spec: &GroupSpec,
    z: C64,
    pairs: usize,
    seed: u64,
) -> crate::Result<ClosureReport> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let n = spec.ambient;
    let mut max_product = 0.0f64;
    let mut max_inverse = 0.0f64;
    let mut max_recovery = 0.0f64;
    let mut failure = None;
    for i in 0..pairs {
        let g = spec.sample_member(&mut rng);
        let h = spec.sample_member(&mut rng);
        let fg = spec.fiber_element(z, &g)?;
        let fh = spec.fiber_element(z, &h)?;
        let product = &fg * &fh;
        let direct = spec.fiber_element(z, &(&g * &h))?;
        let pr = (&product - &direct).norm();
        max_product = max_product.max(pr);

        let inv = fg
            .clone()
            .try_inverse()
            .ok_or_else(|| Error::Domain("fiber element not invertible".into()))?;
        let direct_inv = spec.fiber_element(
            z,
            &g.clone()
                .try_inverse()
                .ok_or_else(|| Error::Domain("sample not invertible".into()))?,
        )?;
        let ir = (&inv - &direct_inv).norm();
        max_inverse = max_inverse.max(ir);

        // Pull the product back to the z = 1 picture and recover the group
        // element as the sum of the two left blocks.
        let pulled = conjugate_by_d(&product, C64::new(1.0, 0.0) / z.sqrt(), n);
        let recovered = pulled.view((0, 0), (n, n)).into_owned()
            + pulled.view((n, 0), (n, n)).into_owned();
        let rr = spec.membership_residual(&recovered);
        let back = (spec.embed_group(&recovered)? - &pulled).norm();
        let rec = rr.max(back);
        max_recovery = max_recovery.max(rec);

        if (pr > TOL_MEMBERSHIP || ir > TOL_MEMBERSHIP || rec > TOL_MEMBERSHIP)
            && failure.is_none()
        {
            failure = Some(format!("pair {i}"));
        }
    }
    Ok(ClosureReport {
        z: format!("{z}"),
        pairs,
        max_product_residual: max_product,
        max_inverse_residual: max_inverse,
        max_recovery_residual: max_recovery,
        ok: failure.is_none(),
        failure,
    })
}

/// Which pole a degenerate element belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    /// G_0: lower-triangular block form [[k, 0], [kX, k]].
    Zero,
    /// G_infinity: upper-triangular block form [[k, kX], [0, k]].
    Infinity,
}

/// An element (k, X) of a degenerate fiber, k in G^theta, X in g^{-theta}.
#[derive(Debug, Clone)]
pub struct DegenerateElement {
    pub side: Side,
    pub k: FMat,
    pub x: FMat,
}

impl DegenerateElement {
    pub fn identity(side: Side, n: usize) -> Self {
        Self {
            side,
            k: FMat::identity(n, n),
            x: FMat::zeros(n, n),
        }
    }

    /// Realization as a 2n x 2n matrix.
    pub fn realize(&self) -> FMat {
        let n = self.k.nrows();
        let kx = &self.k * &self.x;
        let zero = FMat::zeros(n, n);
        match self.side {
            Side::Zero => blocks(&self.k, &zero, &kx, &self.k),
            Side::Infinity => blocks(&self.k, &kx, &zero, &self.k),
        }
    }
}

/// The semidirect multiplication (k1, X1)(k2, X2) = (k1 k2, k2^-1 X1 k2 + X2),
/// checked against raw matrix multiplication of the realizations at 1e-10.
pub fn degenerate_product(
    a: &DegenerateElement,
    b: &DegenerateElement,
) -> crate::Result<DegenerateElement> {
    if a.side != b.side {
        return Err(Error::Semidirect(
            "cannot multiply across G_0 and G_infinity".into(),
        ));
    }
    let k2_inv = b
        .k
        .clone()
        .try_inverse()
        .ok_or_else(|| Error::Semidirect("k2 not invertible".into()))?;
    let product = DegenerateElement {
        side: a.side,
        k: &a.k * &b.k,
        x: k2_inv * &a.x * &b.k + &b.x,
    };
    let raw = a.realize() * b.realize();
    if (product.realize() - raw).norm() > TOL_CONSTRUCTION {
        return Err(Error::Semidirect(
            "semidirect law disagrees with matrix multiplication".into(),
        ));
    }
    Ok(product)
}

/// Data from the contraction-limit run.
#[derive(Debug, Clone, Serialize)]
pub struct ContractionReport {
    pub zs: Vec<f64>,
    /// Distance of the curve matrix to the limit [[g, 0], [gX, g]].
    pub distances: Vec<f64>,
    /// Norms of the upper-right block, expected O(z^2).
    pub block_norms: Vec<f64>,
    /// Log-log slope fitted over the sequence; None when the block norms
    /// vanish (X = 0).
    pub slope: Option<f64>,
    pub converged: bool,
    pub slope_in_range: bool,
}

impl ContractionReport {
    pub fn ok(&self) -> bool {
        self.converged && self.slope_in_range
    }
}

/// For g in G^theta and X in g^{-theta}, the curve
/// 1/2 [[g e^{zX} + g e^{-zX}, z (g e^{zX} - g e^{-zX})],
///      [z^{-1} (g e^{zX} - g e^{-zX}), g e^{zX} + g e^{-zX}]]
/// converges to [[g, 0], [gX, g]] as z -> 0, with the upper-right block
/// decaying like z^2.
pub fn contraction_limit(
    spec: &GroupSpec,
    g: &FMat,
    x: &FMat,
    zs: &[f64],
) -> crate::Result<ContractionReport> {
    if (spec.theta_group(g) - g).norm() > TOL_MEMBERSHIP {
        return Err(Error::Domain("g must be theta-fixed".into()));
    }
    if zs.iter().any(|z| *z == 0.0) {
        return Err(Error::Domain("the z sequence must avoid 0".into()));
    }
    let n = spec.ambient;
    let zero = FMat::zeros(n, n);
    let gx = g * x;
    let limit = blocks(g, &zero, &gx, g);
    let half = C64::new(0.5, 0.0);
    let mut distances = Vec::with_capacity(zs.len());
    let mut block_norms = Vec::with_capacity(zs.len());
    for &z in zs {
        let zc = C64::new(z, 0.0);
        let p = g * expm(&(x * zc));
        let m = g * expm(&(x * (-zc)));
        let diag = (&p + &m) * half;
        let ur = (&p - &m) * (half * zc);
        let ll = (&p - &m) * (half / zc);
        let curve = blocks(&diag, &ur, &ll, &diag);
        distances.push((&curve - &limit).norm());
        block_norms.push(ur.norm());
    }
    let (min_idx, _) = zs
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.abs().partial_cmp(&b.1.abs()).unwrap())
        .expect("nonempty z sequence");
    let converged = distances[min_idx] < TOL_LIMIT;
    let slope = fit_loglog_slope(zs, &block_norms);
    let slope_in_range = match slope {
        Some(s) => (1.9..=2.1).contains(&s),
        // A vanishing block (X = 0) trivially satisfies any decay rate.
        None => block_norms.iter().all(|b| *b < 1e-14),
    };
    Ok(ContractionReport {
        zs: zs.to_vec(),
        distances,
        block_norms,
        slope,
        converged,
        slope_in_range,
    })
}

fn fit_loglog_slope(zs: &[f64], norms: &[f64]) -> Option<f64> {
    let points: Vec<(f64, f64)> = zs
        .iter()
        .zip(norms.iter())
        .filter(|(_, n)| **n > 1e-14)
        .map(|(z, n)| (z.abs().ln(), n.ln()))
        .collect();
    if points.len() < 2 {
        return None;
    }
    let len = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / len;
    let my = points.iter().map(|p| p.1).sum::<f64>() / len;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Some(sxy / sxx)
}

/// Results of the fixed-point checks of the group real structure.
#[derive(Debug, Clone, Serialize)]
pub struct RealStructureReport {
    pub samples: usize,
    /// sigma-fixed g are fixed in the fiber at z = 1.
    pub positive_fixed_ok: bool,
    /// sigma-theta-twisted g are fixed at z = -1.
    pub negative_fixed_ok: bool,
    /// Generic g (sigma(g) != g, != theta(g)) are fixed at neither.
    pub generic_unfixed_ok: bool,
    /// Degenerate (k, X) with k in G^sigma ∩ G^theta, X in g^{-theta} ∩
    /// g^sigma are fixed; perturbed ones are not.
    pub degenerate_fixed_ok: bool,
    pub degenerate_unfixed_ok: bool,
    pub max_fixed_residual: f64,
}

impl RealStructureReport {
    pub fn ok(&self) -> bool {
        self.positive_fixed_ok
            && self.negative_fixed_ok
            && self.generic_unfixed_ok
            && self.degenerate_fixed_ok
            && self.degenerate_unfixed_ok
    }
}

/// The real structure on 2n x 2n fiber matrices.
fn real_structure(spec: &GroupSpec, m: &FMat) -> FMat {
    let n = spec.ambient;
    let zero = FMat::zeros(n, n);
    let ss = blocks(&spec.sigma_s, &zero, &zero, &spec.sigma_s);
    &ss * m.map(|e| e.conj()) * &ss
}

pub fn group_real_structure_check(
    spec: &GroupSpec,
    seed: u64,
    samples: usize,
) -> crate::Result<RealStructureReport> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let n = spec.ambient;
    let margin = 1e-4;
    let mut positive_fixed_ok = true;
    let mut negative_fixed_ok = true;
    let mut generic_unfixed_ok = true;
    let mut max_fixed_residual = 0.0f64;

    let fixed_residual = |m: &FMat| (real_structure(spec, m) - m).norm();

    for _ in 0..samples {
        // sigma(g) = g -> fixed at z = 1.
        let g = GroupSpec::sample_exp_real(&spec.basis_sigma, n, &mut rng);
        let r = fixed_residual(&spec.fiber_element(C64::new(1.0, 0.0), &g)?);
        max_fixed_residual = max_fixed_residual.max(r);
        positive_fixed_ok &= r < TOL_MEMBERSHIP;

        // sigma(g) = theta(g) -> fixed at z = -1.
        let g = GroupSpec::sample_exp_real(&spec.basis_sigma_theta, n, &mut rng);
        let r = fixed_residual(&spec.fiber_element(C64::new(-1.0, 0.0), &g)?);
        max_fixed_residual = max_fixed_residual.max(r);
        negative_fixed_ok &= r < TOL_MEMBERSHIP;

        // Generic elements are fixed at neither point.
        let g = spec.sample_member(&mut rng);
        if (spec.sigma_group(&g) - &g).norm() > margin {
            let r = fixed_residual(&spec.fiber_element(C64::new(1.0, 0.0), &g)?);
            generic_unfixed_ok &= r > margin;
        }
        if (spec.sigma_group(&g) - spec.theta_group(&g)).norm() > margin {
            let r = fixed_residual(&spec.fiber_element(C64::new(-1.0, 0.0), &g)?);
            generic_unfixed_ok &= r > margin;
        }
    }

    // Degenerate fibers: fixed elements are pairs over the real points.
    let mut degenerate_fixed_ok = true;
    let mut degenerate_unfixed_ok = true;
    for _ in 0..samples {
        let k = GroupSpec::sample_exp_real(&spec.basis_k_sigma, n, &mut rng);
        let x = if spec.basis_p_sigma.is_empty() {
            FMat::zeros(n, n)
        } else {
            random_combination_real(&spec.basis_p_sigma, &mut rng)
        };
        for side in [Side::Zero, Side::Infinity] {
            let el = DegenerateElement { side, k: k.clone(), x: x.clone() };
            let r = fixed_residual(&el.realize());
            max_fixed_residual = max_fixed_residual.max(r);
            degenerate_fixed_ok &= r < TOL_MEMBERSHIP;
        }
        // Perturbing X off the real form breaks fixedness.
        if x.norm() > margin {
            let el = DegenerateElement {
                side: Side::Zero,
                k: k.clone(),
                x: &x * C64::new(1.0, 1.0),
            };
            degenerate_unfixed_ok &= fixed_residual(&el.realize()) > margin;
        }
    }

    Ok(RealStructureReport {
        samples,
        positive_fixed_ok,
        negative_fixed_ok,
        generic_unfixed_ok,
        degenerate_fixed_ok,
        degenerate_unfixed_ok,
        max_fixed_residual,
    })
}

/// Consistency of the group real structure with the algebra-level one: on
/// the exact fiber basis at [1:1] the two formulas agree, and the structure
/// commutes with exp, both to 1e-8.
pub fn differential_consistency_check(
    fd: &FamilyData,
    spec: &GroupSpec,
) -> crate::Result<f64> {
    let p = crate::familyalg::ProjPoint::from_ints(1, 1);
    let fiber = fd.fiber_at(&p)?;
    let mut max_residual = 0.0f64;
    for b in fiber.basis() {
        let exact_image = fd.real_structure_apply(&p, b)?.to_float();
        let float_image = real_structure(spec, &b.to_float());
        max_residual = max_residual.max((exact_image - &float_image).norm());
        // exp intertwines the two levels.
        let lhs = expm(&float_image);
        let rhs = real_structure(spec, &expm(&b.to_float()));
        max_residual = max_residual.max((lhs - rhs).norm());
    }
    if max_residual > TOL_MEMBERSHIP {
        return Err(Error::TheoremViolation(format!(
            "group/algebra real structures disagree, residual {max_residual:.3e}"
        )));
    }
    Ok(max_residual)
}
