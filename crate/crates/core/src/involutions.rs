//! Linear and antilinear involutions of a Lie algebra: eigenspace splits,
//! real forms as fixed-point algebras, the commuting-pair calculus
//! (theta = sigma1 sigma2), the doubling embedding realizing an antilinear
//! involution as plain conjugation, and the dual-real-form identities.

use crate::exactlin::{
    commutator, doubled_operator_rows, kernel_basis, ExactMatrix, FieldTag, GaussianRational,
    Subspace,
};
use crate::liecore::LieAlgebraSpec;
use crate::Error;

/// An (anti)linear involutive map of a Lie algebra, stored as the table of
/// basis images in coordinates, with an optional conjugator matrix
/// certificate (X -> T X T^-1 for linear maps, X -> T conj(X) T^-1 for
/// antilinear ones).
#[derive(Debug, Clone)]
pub struct InvolutionSpec {
    antilinear: bool,
    /// images[i] = coordinates of tau(B_i) in the algebra's basis.
    images: Vec<Vec<GaussianRational>>,
    conjugator: Option<ExactMatrix>,
}

/// Outcome of `check_involution`, one flag per axiom.
#[derive(Debug, Clone)]
pub struct InvolutionReport {
    pub involutive: bool,
    pub automorphism: bool,
    /// None when no conjugator certificate is present.
    pub conjugator_consistent: Option<bool>,
}

impl InvolutionReport {
    pub fn valid(&self) -> bool {
        self.involutive && self.automorphism && self.conjugator_consistent.unwrap_or(true)
    }
}

impl InvolutionSpec {
    pub fn from_images(
        antilinear: bool,
        images: Vec<Vec<GaussianRational>>,
        conjugator: Option<ExactMatrix>,
    ) -> Self {
        Self {
            antilinear,
            images,
            conjugator,
        }
    }

    /// Identity involution.
    pub fn identity(dim: usize) -> Self {
        let images = (0..dim)
            .map(|i| {
                let mut v = vec![GaussianRational::zero(); dim];
                v[i] = GaussianRational::one();
                v
            })
            .collect();
        Self::from_images(false, images, None)
    }

    /// Builds the basis-image table from an arbitrary map on matrices. The
    /// map must send the basis into the span (checked).
    pub fn from_map(
        algebra: &LieAlgebraSpec,
        antilinear: bool,
        f: impl Fn(&ExactMatrix) -> ExactMatrix,
        conjugator: Option<ExactMatrix>,
    ) -> crate::Result<Self> {
        let mut images = Vec::with_capacity(algebra.dim());
        for (i, b) in algebra.basis().iter().enumerate() {
            let img = f(b);
            let coords = algebra.coordinates_of(&img).ok_or_else(|| {
                Error::Involution(format!("image of basis element {i} leaves the span"))
            })?;
            images.push(coords);
        }
        Ok(Self::from_images(antilinear, images, conjugator))
    }

    /// Builds from a conjugator: X -> T X T^-1, with conjugation of X first
    /// in the antilinear case.
    pub fn from_conjugator(
        algebra: &LieAlgebraSpec,
        t: ExactMatrix,
        antilinear: bool,
    ) -> crate::Result<Self> {
        let t_inv = t.inverse()?;
        let tc = t.clone();
        Self::from_map(
            algebra,
            antilinear,
            move |x| {
                let inner = if antilinear { x.conj() } else { x.clone() };
                &(&tc * &inner) * &t_inv
            },
            Some(t),
        )
    }

    pub fn antilinear(&self) -> bool {
        self.antilinear
    }

    pub fn dim(&self) -> usize {
        self.images.len()
    }

    pub fn conjugator(&self) -> Option<&ExactMatrix> {
        self.conjugator.as_ref()
    }

    pub fn images(&self) -> &[Vec<GaussianRational>] {
        &self.images
    }

    /// Action on a coordinate vector: conjugate-then-apply for antilinear
    /// maps (fixed convention).
    pub fn apply_coords(&self, v: &[GaussianRational]) -> Vec<GaussianRational> {
        let d = self.images.len();
        assert_eq!(v.len(), d);
        let mut out = vec![GaussianRational::zero(); d];
        for (i, img) in self.images.iter().enumerate() {
            let coeff = if self.antilinear {
                v[i].conj()
            } else {
                v[i].clone()
            };
            if coeff.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(img.iter()) {
                *o = &*o + &(&coeff * x);
            }
        }
        out
    }

    /// Action realized on matrices through the algebra's basis.
    pub fn apply_matrix(
        &self,
        algebra: &LieAlgebraSpec,
        m: &ExactMatrix,
    ) -> crate::Result<ExactMatrix> {
        let coords = algebra
            .coordinates_of(m)
            .ok_or_else(|| Error::Domain("matrix outside the algebra's span".into()))?;
        algebra.matrix_of(&self.apply_coords(&coords))
    }

    /// Composition self ∘ other, with the antilinearity flags combining by
    /// exclusive or.
    pub fn compose(&self, other: &InvolutionSpec) -> InvolutionSpec {
        let images = other
            .images
            .iter()
            .map(|img| self.apply_coords(img))
            .collect();
        let conjugator = match (&self.conjugator, &other.conjugator) {
            (Some(a), Some(b)) => {
                // (self ∘ other)(X) = A * inner(B * pre(X) * B^-1) * A^-1
                // collapses to conjugation by A*B (linear other) or
                // A*conj(B) (antilinear other).
                let b_eff = if self.antilinear { b.conj() } else { b.clone() };
                Some(a * &b_eff)
            }
            _ => None,
        };
        InvolutionSpec {
            antilinear: self.antilinear ^ other.antilinear,
            images,
            conjugator,
        }
    }

    /// Coordinate matrix (columns are basis images).
    fn coordinate_matrix(&self) -> Vec<Vec<GaussianRational>> {
        let d = self.images.len();
        (0..d)
            .map(|r| (0..d).map(|c| self.images[c][r].clone()).collect())
            .collect()
    }
}

/// Verifies involutivity, the automorphism property, and consistency of an
/// optional conjugator certificate, all exactly.
pub fn check_involution(
    algebra: &LieAlgebraSpec,
    tau: &InvolutionSpec,
) -> crate::Result<InvolutionReport> {
    if tau.dim() != algebra.dim() {
        return Err(Error::Dimension(format!(
            "involution on {} coordinates vs algebra of dimension {}",
            tau.dim(),
            algebra.dim()
        )));
    }
    let d = algebra.dim();
    let mut involutive = true;
    for i in 0..d {
        let mut e = vec![GaussianRational::zero(); d];
        e[i] = GaussianRational::one();
        let twice = tau.apply_coords(&tau.apply_coords(&e));
        if twice != e {
            involutive = false;
            break;
        }
    }
    let mut automorphism = true;
    'outer: for i in 0..d {
        for j in (i + 1)..d {
            let lhs_m = commutator(&algebra.basis()[i], &algebra.basis()[j])?;
            let lhs = tau.apply_matrix(algebra, &lhs_m)?;
            let ti = algebra.matrix_of(&tau.images()[i])?;
            let tj = algebra.matrix_of(&tau.images()[j])?;
            let rhs = commutator(&ti, &tj)?;
            if lhs != rhs {
                automorphism = false;
                break 'outer;
            }
        }
    }
    let conjugator_consistent = match tau.conjugator() {
        None => None,
        Some(t) => {
            let t_inv = t.inverse()?;
            let mut ok = true;
            for (i, b) in algebra.basis().iter().enumerate() {
                let inner = if tau.antilinear() { b.conj() } else { b.clone() };
                let expected = &(t * &inner) * &t_inv;
                if algebra.matrix_of(&tau.images()[i])? != expected {
                    ok = false;
                    break;
                }
            }
            Some(ok)
        }
    };
    Ok(InvolutionReport {
        involutive,
        automorphism,
        conjugator_consistent,
    })
}

/// Checks that two involutions commute on every basis element; returns the
/// witness index of the first failure.
pub fn commute_check(a: &InvolutionSpec, b: &InvolutionSpec) -> Result<(), usize> {
    let d = a.dim();
    for i in 0..d {
        let mut e = vec![GaussianRational::zero(); d];
        e[i] = GaussianRational::one();
        if a.apply_coords(&b.apply_coords(&e)) != b.apply_coords(&a.apply_coords(&e)) {
            return Err(i);
        }
    }
    Ok(())
}

/// From two commuting antilinear involutions produces the commuting pair
/// (theta, sigma) with theta = sigma1 ∘ sigma2 linear and sigma = sigma1.
pub fn compose_commuting_pair(
    algebra: &LieAlgebraSpec,
    sigma1: &InvolutionSpec,
    sigma2: &InvolutionSpec,
) -> crate::Result<(InvolutionSpec, InvolutionSpec)> {
    if !sigma1.antilinear() || !sigma2.antilinear() {
        return Err(Error::Involution(
            "compose_commuting_pair needs two antilinear involutions".into(),
        ));
    }
    for (name, s) in [("sigma1", sigma1), ("sigma2", sigma2)] {
        let rep = check_involution(algebra, s)?;
        if !rep.valid() {
            return Err(Error::Involution(format!("{name} is not a valid involution")));
        }
    }
    commute_check(sigma1, sigma2).map_err(Error::NonCommuting)?;
    let theta = sigma1.compose(sigma2);
    debug_assert!(!theta.antilinear());
    Ok((theta, sigma1.clone()))
}

/// The ±1 eigenspace split g = g^theta ⊕ g^{-theta} of a linear involution,
/// as coordinate subspaces with the algebra's field tag.
pub fn eigenspace_split(
    algebra: &LieAlgebraSpec,
    theta: &InvolutionSpec,
) -> crate::Result<(Subspace, Subspace)> {
    if theta.antilinear() {
        return Err(Error::Involution(
            "eigenspace_split needs a linear involution".into(),
        ));
    }
    let d = algebra.dim();
    let m = theta.coordinate_matrix();
    let eig = |sign: i64| -> Subspace {
        let shift = GaussianRational::from_int(sign);
        let rows: Vec<Vec<GaussianRational>> = (0..d)
            .map(|r| {
                (0..d)
                    .map(|c| {
                        if r == c {
                            &m[r][c] - &shift
                        } else {
                            m[r][c].clone()
                        }
                    })
                    .collect()
            })
            .collect();
        match algebra.tag() {
            FieldTag::Complex => {
                let ker = kernel_basis(&rows, d);
                Subspace::span(&ker, FieldTag::Complex, d)
            }
            FieldTag::Real => real_kernel_of(d, |v| {
                let mv = theta.apply_coords(v);
                mv.iter()
                    .zip(v.iter())
                    .map(|(a, b)| a - &(b * &shift))
                    .collect()
            }),
        }
    };
    Ok((eig(1), eig(-1)))
}

/// Kernel, over the reals, of a real-linear map on complex coordinates.
fn real_kernel_of(
    ambient: usize,
    f: impl Fn(&[GaussianRational]) -> Vec<GaussianRational>,
) -> Subspace {
    let rows = doubled_operator_rows(ambient, f);
    let ker = kernel_basis(&rows, 2 * ambient);
    Subspace::span_doubled(&ker, ambient)
}

/// Fixed points of an antilinear involution in coordinates: a real-tagged
/// subspace of real dimension equal to the complex dimension.
pub fn fixed_coordinate_space(
    algebra: &LieAlgebraSpec,
    sigma: &InvolutionSpec,
    sign: i64,
) -> Subspace {
    let d = algebra.dim();
    let shift = GaussianRational::from_int(sign);
    real_kernel_of(d, |v| {
        let sv = sigma.apply_coords(v);
        sv.iter()
            .zip(v.iter())
            .map(|(a, b)| a - &(b * &shift))
            .collect()
    })
}

/// The real form g^sigma of a complex algebra as a real-tagged Lie algebra
/// on the same ambient matrices.
pub fn fixed_real_form(
    algebra: &LieAlgebraSpec,
    sigma: &InvolutionSpec,
) -> crate::Result<LieAlgebraSpec> {
    if algebra.tag() != FieldTag::Complex {
        return Err(Error::FieldTag("fixed_real_form needs a complex algebra".into()));
    }
    if !sigma.antilinear() {
        return Err(Error::Involution("fixed_real_form needs an antilinear map".into()));
    }
    let fixed = fixed_coordinate_space(algebra, sigma, 1);
    if fixed.dim() != algebra.dim() {
        return Err(Error::Involution(format!(
            "fixed space has real dimension {}, expected {}",
            fixed.dim(),
            algebra.dim()
        )));
    }
    let mats: Vec<ExactMatrix> = fixed
        .basis()
        .iter()
        .map(|v| algebra.matrix_of(v))
        .collect::<crate::Result<_>>()?;
    let form = LieAlgebraSpec::new(algebra.ambient(), FieldTag::Real, mats)?;
    form.check_closure()?;
    Ok(form)
}

/// The doubling embedding X -> diag(X, conj(sigma(X))) realizing sigma as
/// plain conjugation by the swap matrix S = [[0, I], [I, 0]].
#[derive(Debug, Clone)]
pub struct DoubledEmbedding {
    /// The image algebra inside matrices of twice the ambient size.
    pub algebra: LieAlgebraSpec,
    /// Swap conjugator with S^2 = I realizing sigma as S conj(.) S.
    pub s: ExactMatrix,
}

impl DoubledEmbedding {
    /// Transfers an involution along the embedding: basis-image tables are
    /// unchanged, only the conjugator certificate is rebuilt.
    pub fn transfer(&self, tau: &InvolutionSpec, conjugator: Option<ExactMatrix>) -> InvolutionSpec {
        InvolutionSpec::from_images(tau.antilinear(), tau.images().to_vec(), conjugator)
    }
}

pub fn doubling_embedding_for_sigma(
    algebra: &LieAlgebraSpec,
    sigma: &InvolutionSpec,
) -> crate::Result<DoubledEmbedding> {
    if algebra.tag() != FieldTag::Complex || !sigma.antilinear() {
        return Err(Error::Involution(
            "doubling embedding needs a complex algebra and antilinear sigma".into(),
        ));
    }
    let n = algebra.ambient();
    let zero = ExactMatrix::zero(n, n);
    let mut image_basis = Vec::with_capacity(algebra.dim());
    for (i, b) in algebra.basis().iter().enumerate() {
        let sb = algebra.matrix_of(&sigma.images()[i])?;
        image_basis.push(ExactMatrix::from_blocks(b, &zero, &zero, &sb.conj()));
    }
    let id = ExactMatrix::identity(n);
    let zero_n = ExactMatrix::zero(n, n);
    let s = ExactMatrix::from_blocks(&zero_n, &id, &id, &zero_n);
    let doubled = LieAlgebraSpec::new(2 * n, FieldTag::Complex, image_basis)?;
    // Certify: iota(sigma(X)) = S conj(iota(X)) S on the basis, S^2 = I.
    debug_assert_eq!(&s * &s, ExactMatrix::identity(2 * n));
    let s_inv = s.clone();
    for (i, ib) in doubled.basis().iter().enumerate() {
        let lhs = {
            // iota(sigma(B_i)) via the transferred coordinate table.
            let coords = sigma.images()[i].clone();
            doubled.matrix_of(&coords)?
        };
        let rhs = &(&s * &ib.conj()) * &s_inv;
        if lhs != rhs {
            return Err(Error::Involution(format!(
                "doubling embedding does not intertwine sigma on basis element {i}"
            )));
        }
    }
    Ok(DoubledEmbedding {
        algebra: doubled,
        s,
    })
}

/// Results of the dual-real-form identities for a commuting antilinear pair.
#[derive(Debug, Clone, serde::Serialize)]
pub struct DualFormReport {
    pub dim_intersection: usize,
    pub dim_complement1: usize,
    pub dim_complement2: usize,
    /// g^{sigma1} = (g^{sigma1} ∩ g^{sigma2}) ⊕ (g^{sigma1} ∩ g^{-sigma2})
    pub decomposition1_ok: bool,
    /// g^{sigma2} = (g^{sigma1} ∩ g^{sigma2}) ⊕ (g^{-sigma1} ∩ g^{sigma2})
    pub decomposition2_ok: bool,
    /// i·(g^{sigma1} ∩ g^{-sigma2}) = g^{-sigma1} ∩ g^{sigma2}, the
    /// corrected reading of the multiplication-by-i identity.
    pub i_identity_ok: bool,
}

impl DualFormReport {
    pub fn all_ok(&self) -> bool {
        self.decomposition1_ok && self.decomposition2_ok && self.i_identity_ok
    }
}

/// Verifies both direct-sum decompositions of the dual real forms and the
/// corrected multiplication-by-i identity, exactly.
pub fn dual_form_identities(
    algebra: &LieAlgebraSpec,
    sigma1: &InvolutionSpec,
    sigma2: &InvolutionSpec,
) -> crate::Result<DualFormReport> {
    compose_commuting_pair(algebra, sigma1, sigma2)?;
    let fix1 = fixed_coordinate_space(algebra, sigma1, 1);
    let anti1 = fixed_coordinate_space(algebra, sigma1, -1);
    let fix2 = fixed_coordinate_space(algebra, sigma2, 1);
    let anti2 = fixed_coordinate_space(algebra, sigma2, -1);

    let both = fix1.intersect(&fix2)?;
    let comp1 = fix1.intersect(&anti2)?;
    let comp2 = anti1.intersect(&fix2)?;

    let decomposition1_ok = both.dim() + comp1.dim() == fix1.dim()
        && both.sum(&comp1)? == fix1
        && both.intersect(&comp1)?.dim() == 0;
    let decomposition2_ok = both.dim() + comp2.dim() == fix2.dim()
        && both.sum(&comp2)? == fix2
        && both.intersect(&comp2)?.dim() == 0;
    let i_identity_ok = comp1.mul_i() == comp2;

    Ok(DualFormReport {
        dim_intersection: both.dim(),
        dim_complement1: comp1.dim(),
        dim_complement2: comp2.dim(),
        decomposition1_ok,
        decomposition2_ok,
        i_identity_ok,
    })
}

/// Convenience constructors for frequently used involutions.
pub mod standard {
    use super::*;

    /// Entrywise conjugation, conjugator I.
    pub fn entrywise_conj(algebra: &LieAlgebraSpec) -> crate::Result<InvolutionSpec> {
        InvolutionSpec::from_map(
            algebra,
            true,
            |x| x.conj(),
            Some(ExactMatrix::identity(algebra.ambient())),
        )
    }

    /// The linear involution X -> -X^t.
    pub fn neg_transpose(algebra: &LieAlgebraSpec) -> crate::Result<InvolutionSpec> {
        InvolutionSpec::from_map(algebra, false, |x| -&x.transpose(), None)
    }

    /// The antilinear involution X -> -conj(X)^t (compact real structure).
    pub fn neg_conj_transpose(algebra: &LieAlgebraSpec) -> crate::Result<InvolutionSpec> {
        InvolutionSpec::from_map(algebra, true, |x| -&x.conj().transpose(), None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

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

    #[test]
    fn standard_involutions_are_valid() {
        let l = sl2();
        for tau in [
            standard::entrywise_conj(&l).unwrap(),
            standard::neg_transpose(&l).unwrap(),
            standard::neg_conj_transpose(&l).unwrap(),
        ] {
            let rep = check_involution(&l, &tau).unwrap();
            assert!(rep.valid(), "{rep:?}");
        }
    }

    #[test]
    fn compose_pair_gives_neg_transpose() {
        let l = sl2();
        let s1 = standard::entrywise_conj(&l).unwrap();
        let s2 = standard::neg_conj_transpose(&l).unwrap();
        let (theta, sigma) = compose_commuting_pair(&l, &s1, &s2).unwrap();
        assert!(!theta.antilinear());
        assert!(sigma.antilinear());
        let expected = standard::neg_transpose(&l).unwrap();
        assert_eq!(theta.images(), expected.images());
    }

    #[test]
    fn eigenspace_dims_sl2() {
        let l = sl2();
        let theta = standard::neg_transpose(&l).unwrap();
        let (plus, minus) = eigenspace_split(&l, &theta).unwrap();
        // Antisymmetric part so(2) has dimension 1, symmetric traceless 2.
        assert_eq!(plus.dim(), 1);
        assert_eq!(minus.dim(), 2);
    }

    #[test]
    fn real_forms_of_sl2() {
        let l = sl2();
        let split = fixed_real_form(&l, &standard::entrywise_conj(&l).unwrap()).unwrap();
        assert_eq!(split.fingerprint().unwrap().killing_signature, (2, 1, 0));
        let compact = fixed_real_form(&l, &standard::neg_conj_transpose(&l).unwrap()).unwrap();
        assert_eq!(compact.fingerprint().unwrap().killing_signature, (0, 3, 0));
    }

    #[test]
    fn doubling_embedding_sl2() {
        let l = sl2();
        let sigma = standard::neg_conj_transpose(&l).unwrap();
        let emb = doubling_embedding_for_sigma(&l, &sigma).unwrap();
        assert_eq!(emb.algebra.dim(), 3);
        assert_eq!(emb.algebra.ambient(), 4);
        assert_eq!(&emb.s * &emb.s, ExactMatrix::identity(4));
        emb.algebra.check_closure().unwrap();
    }

    #[test]
    fn dual_form_identities_sl2() {
        let l = sl2();
        let s1 = standard::entrywise_conj(&l).unwrap();
        let s2 = standard::neg_conj_transpose(&l).unwrap();
        let rep = dual_form_identities(&l, &s1, &s2).unwrap();
        // sl(2,R) ∩ su(2) = so(2); both complements are 2-dimensional.
        assert_eq!(rep.dim_intersection, 1);
        assert_eq!(rep.dim_complement1, 2);
        assert_eq!(rep.dim_complement2, 2);
        assert!(rep.all_ok());
    }

    #[test]
    fn noncommuting_pair_is_rejected() {
        let l = sl2();
        // Conjugation twisted by T = [[1,1],[0,-1]] (T^2 = I, T neither
        // symmetric nor antisymmetric) fails to commute with -conj(.)^t.
        let t = ExactMatrix::from_int_rows(&[&[1, 1], &[0, -1]]);
        let twisted = InvolutionSpec::from_conjugator(&l, t, true).unwrap();
        // The twisted map is a valid antilinear involution ...
        assert!(check_involution(&l, &twisted).unwrap().valid());
        // ... but it does not commute with -conj(.)^t.
        let s2 = standard::neg_conj_transpose(&l).unwrap();
        assert!(commute_check(&twisted, &s2).is_err());
        match compose_commuting_pair(&l, &twisted, &s2) {
            Err(Error::NonCommuting(_)) => {}
            other => panic!("expected NonCommuting, got {other:?}"),
        }
    }
}

