//! Lie algebras as exact matrix subalgebras: structure constants, closure
//! and Jacobi verification, Killing signature by exact congruence
//! diagonalization, and isomorphism-invariant fingerprints.

use num::rational::BigRational;
use num::{Signed, Zero};
use serde::Serialize;

use crate::exactlin::{
    commutator, double_vector, kernel_basis, rref, solve, ExactMatrix, FieldTag,
    GaussianRational, Subspace,
};
use crate::Error;

/// A Lie algebra given as the span (over the tagged field) of exact basis
/// matrices inside a matrix algebra of size `ambient`.
#[derive(Debug, Clone)]
pub struct LieAlgebraSpec {
    ambient: usize,
    tag: FieldTag,
    basis: Vec<ExactMatrix>,
}

/// Exact structure constants `[B_i, B_j] = sum_k c[i][j][k] B_k`.
#[derive(Debug, Clone)]
pub struct StructureConstants {
    pub dim: usize,
    pub tag: FieldTag,
    pub c: Vec<Vec<Vec<GaussianRational>>>,
}

/// Isomorphism-invariant tuple of a Lie algebra. Equality of fingerprints
/// is a necessary condition for isomorphism, not a sufficient one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub dim: usize,
    /// (p, q, z) with p+q+z = dim. For complex-tagged algebras a symmetric
    /// form is classified by rank alone, so this is (rank, 0, corank).
    pub killing_signature: (usize, usize, usize),
    pub derived_dims: Vec<usize>,
    pub lower_central_dims: Vec<usize>,
    pub center_dim: usize,
}

impl std::fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "dim={} killing=({},{},{}) derived={:?} lcs={:?} center={}",
            self.dim,
            self.killing_signature.0,
            self.killing_signature.1,
            self.killing_signature.2,
            self.derived_dims,
            self.lower_central_dims,
            self.center_dim
        )
    }
}

/// Verified split of an algebra into a subalgebra acting on an abelian
/// ideal, together with the action constants.
#[derive(Debug, Clone)]
pub struct DegenerationData {
    pub reductive: LieAlgebraSpec,
    pub ideal_dim: usize,
    /// action[a][b] = coordinates of [sub_a, ideal_b] in the ideal basis.
    pub action: Vec<Vec<Vec<GaussianRational>>>,
}

impl LieAlgebraSpec {
    /// Checks sizes and linear independence of the basis over the tag.
    /// Closure under the bracket is checked separately by `check_closure`.
    pub fn new(ambient: usize, tag: FieldTag, basis: Vec<ExactMatrix>) -> crate::Result<Self> {
        if basis.is_empty() {
            return Err(Error::Dimension("empty basis".into()));
        }
        if basis
            .iter()
            .any(|b| b.nrows() != ambient || b.ncols() != ambient)
        {
            return Err(Error::Dimension(format!(
                "basis matrices must be {ambient}x{ambient}"
            )));
        }
        let vecs: Vec<Vec<GaussianRational>> = basis.iter().map(|b| b.vectorize()).collect();
        let span = Subspace::span(&vecs, tag, ambient * ambient);
        if span.dim() != basis.len() {
            return Err(Error::Dimension(format!(
                "basis not independent: span dim {} from {} matrices",
                span.dim(),
                basis.len()
            )));
        }
        Ok(Self {
            ambient,
            tag,
            basis,
        })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn tag(&self) -> FieldTag {
        self.tag
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[ExactMatrix] {
        &self.basis
    }

    /// Span of the basis as a subspace of the vectorized matrix space.
    pub fn matrix_span(&self) -> Subspace {
        let vecs: Vec<Vec<GaussianRational>> = self.basis.iter().map(|b| b.vectorize()).collect();
        Subspace::span(&vecs, self.tag, self.ambient * self.ambient)
    }

    /// Exact coordinates of a matrix in this basis over the tagged field,
    /// or `None` if the matrix is outside the span.
    pub fn coordinates_of(&self, m: &ExactMatrix) -> Option<Vec<GaussianRational>> {
        let d = self.basis.len();
        match self.tag {
            FieldTag::Complex => m.coordinates_in(&self.basis),
            FieldTag::Real => {
                // Real-linear solve on doubled coordinates with real unknowns.
                let n2 = self.ambient * self.ambient;
                let mut a = vec![vec![BigRational::zero(); d]; 2 * n2];
                for (bi, b) in self.basis.iter().enumerate() {
                    for (r, val) in double_vector(&b.vectorize()).into_iter().enumerate() {
                        a[r][bi] = val;
                    }
                }
                let b = double_vector(&m.vectorize());
                solve(&a, &b, d).map(|x| {
                    x.into_iter()
                        .map(GaussianRational::from_rational)
                        .collect()
                })
            }
        }
    }

    /// Realizes a coordinate vector as a matrix.
    pub fn matrix_of(&self, coords: &[GaussianRational]) -> crate::Result<ExactMatrix> {
        ExactMatrix::linear_combination(coords, &self.basis)
    }

    /// Structure constants; fails with the offending pair and residual if
    /// some bracket of basis elements leaves the span.
    pub fn check_closure(&self) -> crate::Result<StructureConstants> {
        let d = self.basis.len();
        let zero_row = vec![GaussianRational::zero(); d];
        let mut c = vec![vec![zero_row.clone(); d]; d];
        for i in 0..d {
            for j in (i + 1)..d {
                let br = commutator(&self.basis[i], &self.basis[j])?;
                let coords = self.coordinates_of(&br).ok_or_else(|| Error::NotClosed {
                    i,
                    j,
                    residual: br.to_string(),
                })?;
                c[j][i] = coords.iter().map(|x| -x).collect();
                c[i][j] = coords;
            }
        }
        Ok(StructureConstants {
            dim: d,
            tag: self.tag,
            c,
        })
    }

    /// Exact Killing form matrix B(X,Y) = tr(ad X ad Y) in this basis.
    pub fn killing_matrix(&self, sc: &StructureConstants) -> Vec<Vec<GaussianRational>> {
        let d = sc.dim;
        let mut k = vec![vec![GaussianRational::zero(); d]; d];
        for i in 0..d {
            for j in i..d {
                let mut t = GaussianRational::zero();
                for a in 0..d {
                    for b in 0..d {
                        t = &t + &(&sc.c[i][a][b] * &sc.c[j][b][a]);
                    }
                }
                k[j][i] = t.clone();
                k[i][j] = t;
            }
        }
        k
    }

    /// Exact signature (p, q, z) of the Killing form of a real-tagged
    /// algebra, by symmetric congruence elimination over the rationals.
    pub fn killing_signature(&self) -> crate::Result<(usize, usize, usize)> {
        if self.tag != FieldTag::Real {
            return Err(Error::FieldTag(
                "killing_signature requires a real-tagged algebra".into(),
            ));
        }
        let sc = self.check_closure()?;
        let k = self.killing_matrix(&sc);
        let rational: Vec<Vec<BigRational>> = k
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| {
                        debug_assert!(x.is_real(), "real algebra has rational Killing form");
                        x.re.clone()
                    })
                    .collect()
            })
            .collect();
        Ok(rational_signature(rational))
    }

    pub fn fingerprint(&self) -> crate::Result<Fingerprint> {
        let sc = self.check_closure()?;
        let killing_signature = match self.tag {
            FieldTag::Real => self.killing_signature()?,
            FieldTag::Complex => {
                let k = self.killing_matrix(&sc);
                let mut rows = k;
                let rank = {
                    rref(&mut rows);
                    rows.len()
                };
                (rank, 0, sc.dim - rank)
            }
        };
        Ok(Fingerprint {
            dim: sc.dim,
            killing_signature,
            derived_dims: series_dims(&sc, self.tag, SeriesKind::Derived),
            lower_central_dims: series_dims(&sc, self.tag, SeriesKind::LowerCentral),
            center_dim: center(&sc, self.tag).dim(),
        })
    }

    /// Verifies that `sub` is a subalgebra, `ideal` an abelian ideal, and
    /// that they decompose the algebra as a direct sum; returns the action
    /// of the subalgebra on the ideal. Both candidates are coordinate
    /// subspaces relative to this basis.
    pub fn semidirect_split(
        &self,
        ideal: &Subspace,
        sub: &Subspace,
    ) -> crate::Result<DegenerationData> {
        let sc = self.check_closure()?;
        let d = sc.dim;
        if ideal.ambient() != d || sub.ambient() != d {
            return Err(Error::Dimension(
                "candidates must live in the algebra's coordinate space".into(),
            ));
        }
        let ideal_basis = ideal.basis();
        let sub_basis = sub.basis();
        // Abelian: [ideal, ideal] = 0.
        for u in &ideal_basis {
            for v in &ideal_basis {
                if bracket_coords(&sc, u, v).iter().any(|x| !x.is_zero()) {
                    return Err(Error::Semidirect("ideal candidate is not abelian".into()));
                }
            }
        }
        // Ideal: [g, ideal] ⊆ ideal.
        for j in 0..d {
            let mut e = vec![GaussianRational::zero(); d];
            e[j] = GaussianRational::one();
            for v in &ideal_basis {
                let w = bracket_coords(&sc, &e, v);
                if !ideal.member(&w)? {
                    return Err(Error::Semidirect(format!(
                        "candidate is not an ideal: [B{j}, ideal] leaves the ideal"
                    )));
                }
            }
        }
        // Subalgebra.
        for u in &sub_basis {
            for v in &sub_basis {
                let w = bracket_coords(&sc, u, v);
                if !sub.member(&w)? {
                    return Err(Error::Semidirect(
                        "subalgebra candidate is not closed".into(),
                    ));
                }
            }
        }
        // Direct sum.
        if ideal.dim() + sub.dim() != d || ideal.intersect(sub)?.dim() != 0 {
            return Err(Error::Semidirect(
                "candidates do not form a direct sum decomposition".into(),
            ));
        }
        // Action of the subalgebra on the ideal, in the ideal's basis.
        let ideal_vecs = ideal_basis.clone();
        let mut action = Vec::with_capacity(sub_basis.len());
        for u in &sub_basis {
            let mut row = Vec::with_capacity(ideal_vecs.len());
            for v in &ideal_vecs {
                let w = bracket_coords(&sc, u, v);
                let coords = coords_in_vectors(&w, &ideal_vecs, self.tag).ok_or_else(|| {
                    Error::Semidirect("action does not preserve the ideal".into())
                })?;
                row.push(coords);
            }
            action.push(row);
        }
        let sub_mats: Vec<ExactMatrix> = sub_basis
            .iter()
            .map(|v| self.matrix_of(v))
            .collect::<crate::Result<_>>()?;
        let reductive = LieAlgebraSpec::new(self.ambient, self.tag, sub_mats)?;
        Ok(DegenerationData {
            reductive,
            ideal_dim: ideal.dim(),
            action,
        })
    }

    /// Applies an exact invertible change of basis (coordinates of the new
    /// basis in the old one, rows = new basis elements).
    pub fn change_basis(&self, t: &[Vec<GaussianRational>]) -> crate::Result<LieAlgebraSpec> {
        let mats: Vec<ExactMatrix> = t
            .iter()
            .map(|row| self.matrix_of(row))
            .collect::<crate::Result<_>>()?;
        LieAlgebraSpec::new(self.ambient, self.tag, mats)
    }
}

/// Bracket of coordinate vectors through the structure constants.
pub fn bracket_coords(
    sc: &StructureConstants,
    u: &[GaussianRational],
    v: &[GaussianRational],
) -> Vec<GaussianRational> {
    let d = sc.dim;
    let mut w = vec![GaussianRational::zero(); d];
    for i in 0..d {
        if u[i].is_zero() {
            continue;
        }
        for j in 0..d {
            if v[j].is_zero() {
                continue;
            }
            let f = &u[i] * &v[j];
            for k in 0..d {
                if !sc.c[i][j][k].is_zero() {
                    w[k] = &w[k] + &(&f * &sc.c[i][j][k]);
                }
            }
        }
    }
    w
}

fn coords_in_vectors(
    w: &[GaussianRational],
    basis: &[Vec<GaussianRational>],
    tag: FieldTag,
) -> Option<Vec<GaussianRational>> {
    if basis.is_empty() {
        return if w.iter().all(|x| x.is_zero()) {
            Some(Vec::new())
        } else {
            None
        };
    }
    let n = w.len();
    match tag {
        FieldTag::Complex => {
            let mut a = vec![vec![GaussianRational::zero(); basis.len()]; n];
            for (bi, b) in basis.iter().enumerate() {
                for (r, val) in b.iter().enumerate() {
                    a[r][bi] = val.clone();
                }
            }
            solve(&a, w, basis.len())
        }
        FieldTag::Real => {
            let mut a = vec![vec![BigRational::zero(); basis.len()]; 2 * n];
            for (bi, b) in basis.iter().enumerate() {
                for (r, val) in double_vector(b).into_iter().enumerate() {
                    a[r][bi] = val;
                }
            }
            solve(&a, &double_vector(w), basis.len())
                .map(|x| x.into_iter().map(GaussianRational::from_rational).collect())
        }
    }
}

/// Exact Jacobi identity check over all index triples.
pub fn jacobi_check(sc: &StructureConstants) -> bool {
    jacobi_violation(sc).is_none()
}

/// First violating triple (i, j, k), if any.
pub fn jacobi_violation(sc: &StructureConstants) -> Option<(usize, usize, usize)> {
    let d = sc.dim;
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for l in 0..d {
                    // [[i,j],k] + [[j,k],i] + [[k,i],j] coordinate l.
                    let mut s = GaussianRational::zero();
                    for m in 0..d {
                        s = &s + &(&sc.c[i][j][m] * &sc.c[m][k][l]);
                        s = &s + &(&sc.c[j][k][m] * &sc.c[m][i][l]);
                        s = &s + &(&sc.c[k][i][m] * &sc.c[m][j][l]);
                    }
                    if !s.is_zero() {
                        return Some((i, j, k));
                    }
                }
            }
        }
    }
    None
}

enum SeriesKind {
    Derived,
    LowerCentral,
}

/// Dimensions of the derived or lower central series, truncated once the
/// dimension stabilizes or reaches zero.
fn series_dims(sc: &StructureConstants, tag: FieldTag, kind: SeriesKind) -> Vec<usize> {
    let d = sc.dim;
    let full = Subspace::full_coordinates(tag, d);
    let mut dims = vec![d];
    let mut current = full.clone();
    loop {
        let left = match kind {
            SeriesKind::Derived => &current,
            SeriesKind::LowerCentral => &full,
        };
        let mut brackets = Vec::new();
        for u in left.basis() {
            for v in current.basis() {
                brackets.push(bracket_coords(sc, &u, &v));
            }
        }
        let next = Subspace::span(&brackets, tag, d);
        let prev_dim = *dims.last().unwrap();
        dims.push(next.dim());
        if next.dim() == 0 || next.dim() == prev_dim {
            break;
        }
        current = next;
    }
    // A trailing repeat of zero is redundant; a repeat of a nonzero dim is
    // the witness of stabilization and is kept.
    if dims.len() >= 2 && dims[dims.len() - 1] == 0 && dims[dims.len() - 2] == 0 {
        dims.pop();
    }
    dims
}

/// Center as a coordinate subspace: vectors v with [v, B_j] = 0 for all j.
fn center(sc: &StructureConstants, tag: FieldTag) -> Subspace {
    let d = sc.dim;
    let mut rows = Vec::with_capacity(d * d);
    for j in 0..d {
        for k in 0..d {
            let row: Vec<GaussianRational> = (0..d).map(|i| sc.c[i][j][k].clone()).collect();
            rows.push(row);
        }
    }
    match tag {
        FieldTag::Complex => {
            let ker = kernel_basis(&rows, d);
            Subspace::span(&ker, FieldTag::Complex, d)
        }
        FieldTag::Real => {
            // Constants are real for a real-tagged algebra; the rational
            // kernel is the center.
            let rrows: Vec<Vec<BigRational>> = rows
                .iter()
                .map(|r| r.iter().map(|x| x.re.clone()).collect())
                .collect();
            let ker = kernel_basis(&rrows, d);
            let vecs: Vec<Vec<GaussianRational>> = ker
                .into_iter()
                .map(|v| v.into_iter().map(GaussianRational::from_rational).collect())
                .collect();
            Subspace::span(&vecs, FieldTag::Real, d)
        }
    }
}

impl Subspace {
    /// Full coordinate space of a d-dimensional algebra over its own tag:
    /// the span of the unit coordinate vectors.
    pub fn full_coordinates(tag: FieldTag, d: usize) -> Subspace {
        let units: Vec<Vec<GaussianRational>> = (0..d)
            .map(|i| {
                let mut v = vec![GaussianRational::zero(); d];
                v[i] = GaussianRational::one();
                v
            })
            .collect();
        Subspace::span(&units, tag, d)
    }
}

/// Exact signature of a rational symmetric matrix by congruence
/// elimination with exact pivoting. A zero diagonal with a nonzero
/// off-diagonal entry is handled by the standard hyperbolic move, which
/// contributes (1, 1) to (p, q).
pub fn rational_signature(mut a: Vec<Vec<BigRational>>) -> (usize, usize, usize) {
    let d = a.len();
    let (mut p, mut q, mut z) = (0usize, 0usize, 0usize);
    let mut k = 0;
    while k < d {
        // Prefer a nonzero diagonal pivot.
        if a[k][k].is_zero() {
            if let Some(i) = (k + 1..d).find(|&i| !a[i][i].is_zero()) {
                swap_sym(&mut a, k, i);
            } else if let Some((i, j)) = find_offdiag(&a, k) {
                // Hyperbolic block: add row/col j to row/col i, producing
                // a nonzero diagonal entry 2*a[i][j].
                for c in 0..d {
                    let t = a[j][c].clone();
                    a[i][c] += t;
                }
                for r in 0..d {
                    let t = a[r][j].clone();
                    a[r][i] += t;
                }
                if i != k {
                    swap_sym(&mut a, k, i);
                }
            } else {
                // Remaining block is zero.
                z += d - k;
                break;
            }
        }
        let pivot = a[k][k].clone();
        if pivot.is_positive() {
            p += 1;
        } else {
            q += 1;
        }
        for r in (k + 1)..d {
            if a[r][k].is_zero() {
                continue;
            }
            let f = &a[r][k] / &pivot;
            for c in (k + 1)..d {
                let t = &f * &a[k][c];
                a[r][c] -= t;
            }
        }
        // Only clear the pivot row and column once every row has been
        // reduced; the Schur updates above still read row k.
        for r in (k + 1)..d {
            a[r][k] = BigRational::zero();
            a[k][r] = BigRational::zero();
        }
        k += 1;
    }
    (p, q, z)
}

fn swap_sym(a: &mut [Vec<BigRational>], i: usize, j: usize) {
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

fn find_offdiag(a: &[Vec<BigRational>], k: usize) -> Option<(usize, usize)> {
    let d = a.len();
    for i in k..d {
        for j in (i + 1)..d {
            if !a[i][j].is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    /// Standard basis (h, e, f) of sl(2).
    pub(crate) fn sl2_basis() -> Vec<ExactMatrix> {
        vec![
            ExactMatrix::from_int_rows(&[&[1, 0], &[0, -1]]),
            ExactMatrix::unit(2, 0, 1),
            ExactMatrix::unit(2, 1, 0),
        ]
    }

    fn sl2(tag: FieldTag) -> LieAlgebraSpec {
        LieAlgebraSpec::new(2, tag, sl2_basis()).unwrap()
    }

    #[test]
    fn closure_sl2() {
        let l = sl2(FieldTag::Complex);
        let sc = l.check_closure().unwrap();
        // [h, e] = 2e, [h, f] = -2f, [e, f] = h.
        assert_eq!(sc.c[0][1][1], GaussianRational::from_int(2));
        assert_eq!(sc.c[0][2][2], GaussianRational::from_int(-2));
        assert_eq!(sc.c[1][2][0], GaussianRational::one());
        assert!(jacobi_check(&sc));
    }

    #[test]
    fn closure_failure_reports_pair() {
        let l = LieAlgebraSpec::new(
            2,
            FieldTag::Complex,
            vec![ExactMatrix::unit(2, 0, 1), ExactMatrix::unit(2, 1, 0)],
        )
        .unwrap();
        match l.check_closure() {
            Err(Error::NotClosed { i: 0, j: 1, .. }) => {}
            other => panic!("expected NotClosed, got {other:?}"),
        }
    }

    #[test]
    fn abelian_fingerprint() {
        let l = LieAlgebraSpec::new(
            2,
            FieldTag::Real,
            vec![
                ExactMatrix::from_int_rows(&[&[1, 0], &[0, 0]]),
                ExactMatrix::from_int_rows(&[&[0, 0], &[0, 1]]),
            ],
        )
        .unwrap();
        let fp = l.fingerprint().unwrap();
        assert_eq!(fp.dim, 2);
        assert_eq!(fp.killing_signature, (0, 0, 2));
        assert_eq!(fp.derived_dims, vec![2, 0]);
        assert_eq!(fp.lower_central_dims, vec![2, 0]);
        assert_eq!(fp.center_dim, 2);
    }

    #[test]
    fn sl2_real_fingerprint() {
        let fp = sl2(FieldTag::Real).fingerprint().unwrap();
        assert_eq!(fp.dim, 3);
        assert_eq!(fp.killing_signature, (2, 1, 0));
        assert_eq!(fp.derived_dims, vec![3, 3]);
        assert_eq!(fp.center_dim, 0);
    }

    #[test]
    fn su2_signature() {
        // su(2) basis: i*h, e - f, i(e + f).
        let i = GaussianRational::i();
        let h = ExactMatrix::from_int_rows(&[&[1, 0], &[0, -1]]);
        let e = ExactMatrix::unit(2, 0, 1);
        let f = ExactMatrix::unit(2, 1, 0);
        let basis = vec![h.scale(&i), &e - &f, (&e + &f).scale(&i)];
        let l = LieAlgebraSpec::new(2, FieldTag::Real, basis).unwrap();
        assert_eq!(l.killing_signature().unwrap(), (0, 3, 0));
    }

    #[test]
    fn jacobi_perturbation_detected() {
        let l = sl2(FieldTag::Complex);
        let mut sc = l.check_closure().unwrap();
        sc.c[0][1][0] = &sc.c[0][1][0] + &GaussianRational::one();
        assert!(!jacobi_check(&sc));
        assert!(jacobi_violation(&sc).is_some());
    }

    #[test]
    fn signature_hyperbolic_block() {
        // [[0, 1], [1, 0]] has signature (1, 1, 0).
        let a = vec![vec![q(0), q(1)], vec![q(1), q(0)]];
        assert_eq!(rational_signature(a), (1, 1, 0));
        // Padded with a zero row/column: (1, 1, 1).
        let b = vec![
            vec![q(0), q(1), q(0)],
            vec![q(1), q(0), q(0)],
            vec![q(0), q(0), q(0)],
        ];
        assert_eq!(rational_signature(b), (1, 1, 1));
    }

    #[test]
    fn semidirect_split_examples() {
        // sl(2, R) with ideal candidate span{e} fails: [f, e] = -h.
        let l = sl2(FieldTag::Real);
        let d = l.dim();
        let e_span = Subspace::span(
            &[vec![
                GaussianRational::zero(),
                GaussianRational::one(),
                GaussianRational::zero(),
            ]],
            FieldTag::Real,
            d,
        );
        let hf_span = Subspace::span(
            &[
                vec![
                    GaussianRational::one(),
                    GaussianRational::zero(),
                    GaussianRational::zero(),
                ],
                vec![
                    GaussianRational::zero(),
                    GaussianRational::zero(),
                    GaussianRational::one(),
                ],
            ],
            FieldTag::Real,
            d,
        );
        assert!(matches!(
            l.semidirect_split(&e_span, &hf_span),
            Err(Error::Semidirect(_))
        ));

        // An abelian algebra splits along any complementary pair.
        let ab = LieAlgebraSpec::new(
            2,
            FieldTag::Real,
            vec![
                ExactMatrix::from_int_rows(&[&[1, 0], &[0, 0]]),
                ExactMatrix::from_int_rows(&[&[0, 0], &[0, 1]]),
            ],
        )
        .unwrap();
        let u = Subspace::span(
            &[vec![GaussianRational::one(), GaussianRational::one()]],
            FieldTag::Real,
            2,
        );
        let v = Subspace::span(
            &[vec![GaussianRational::one(), -GaussianRational::one()]],
            FieldTag::Real,
            2,
        );
        let dd = ab.semidirect_split(&u, &v).unwrap();
        assert_eq!(dd.ideal_dim, 1);
        assert!(dd.action[0][0].iter().all(|x| x.is_zero()));
    }
}
