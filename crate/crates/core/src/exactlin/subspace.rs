use num::rational::BigRational;

use super::linalg::{kernel_basis, rref, Scalar};
use super::GaussianRational;
use crate::Error;

/// Ground field of a subspace of a complex coordinate space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldTag {
    Real,
    Complex,
}

/// Doubles a complex vector into real coordinates, re-then-im interleaved:
/// coordinate j lands at positions 2j (re) and 2j+1 (im).
pub fn double_vector(v: &[GaussianRational]) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(2 * v.len());
    for x in v {
        out.push(x.re.clone());
        out.push(x.im.clone());
    }
    out
}

pub fn undouble_vector(v: &[BigRational]) -> Vec<GaussianRational> {
    assert!(v.len() % 2 == 0);
    v.chunks(2)
        .map(|c| GaussianRational::new(c[0].clone(), c[1].clone()))
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
enum Rows {
    /// RREF over the Gaussian rationals, vectors of length `ambient`.
    Complex(Vec<Vec<GaussianRational>>),
    /// RREF over the rationals in doubled coordinates, length `2*ambient`.
    Real(Vec<Vec<BigRational>>),
}

/// A subspace of a complex coordinate space of dimension `ambient`, either
/// a complex span or the real span of complex vectors. Canonical form is
/// the reduced row echelon basis over the tagged field, so equality of
/// subspaces is structural equality.
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace {
    ambient: usize,
    rows: Rows,
}

impl Subspace {
    pub fn span(vectors: &[Vec<GaussianRational>], tag: FieldTag, ambient: usize) -> Self {
        assert!(
            vectors.iter().all(|v| v.len() == ambient),
            "vector length must match ambient dimension"
        );
        match tag {
            FieldTag::Complex => {
                let mut rows: Vec<Vec<GaussianRational>> = vectors.to_vec();
                rref(&mut rows);
                Self {
                    ambient,
                    rows: Rows::Complex(rows),
                }
            }
            FieldTag::Real => {
                let mut rows: Vec<Vec<BigRational>> =
                    vectors.iter().map(|v| double_vector(v)).collect();
                rref(&mut rows);
                Self {
                    ambient,
                    rows: Rows::Real(rows),
                }
            }
        }
    }

    /// Real-tagged span directly from doubled rational coordinates.
    pub fn span_doubled(vectors: &[Vec<BigRational>], ambient: usize) -> Self {
        assert!(vectors.iter().all(|v| v.len() == 2 * ambient));
        let mut rows = vectors.to_vec();
        rref(&mut rows);
        Self {
            ambient,
            rows: Rows::Real(rows),
        }
    }

    pub fn zero(tag: FieldTag, ambient: usize) -> Self {
        Self::span(&[], tag, ambient)
    }

    /// Full coordinate space over the given tag (for a real tag this is the
    /// realification, of real dimension `2*ambient`).
    pub fn full(tag: FieldTag, ambient: usize) -> Self {
        let units: Vec<Vec<GaussianRational>> = (0..ambient)
            .map(|i| {
                let mut v = vec![GaussianRational::zero(); ambient];
                v[i] = GaussianRational::one();
                v
            })
            .collect();
        match tag {
            FieldTag::Complex => Self::span(&units, FieldTag::Complex, ambient),
            FieldTag::Real => {
                let mut all = units.clone();
                all.extend(units.iter().map(|v| {
                    v.iter()
                        .map(|x| x * &GaussianRational::i())
                        .collect::<Vec<_>>()
                }));
                Self::span(&all, FieldTag::Real, ambient)
            }
        }
    }

    pub fn tag(&self) -> FieldTag {
        match self.rows {
            Rows::Complex(_) => FieldTag::Complex,
            Rows::Real(_) => FieldTag::Real,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Dimension over the tagged field.
    pub fn dim(&self) -> usize {
        match &self.rows {
            Rows::Complex(r) => r.len(),
            Rows::Real(r) => r.len(),
        }
    }

    /// Canonical basis as complex coordinate vectors.
    pub fn basis(&self) -> Vec<Vec<GaussianRational>> {
        match &self.rows {
            Rows::Complex(r) => r.clone(),
            Rows::Real(r) => r.iter().map(|v| undouble_vector(v)).collect(),
        }
    }

    pub fn member(&self, v: &[GaussianRational]) -> crate::Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::Dimension(format!(
                "vector length {} vs ambient {}",
                v.len(),
                self.ambient
            )));
        }
        Ok(match &self.rows {
            Rows::Complex(rows) => reduces_to_zero(rows, v.to_vec()),
            Rows::Real(rows) => reduces_to_zero(rows, double_vector(v)),
        })
    }

    pub fn contains(&self, other: &Subspace) -> crate::Result<bool> {
        for v in other.basis() {
            if !self.member(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> crate::Result<Subspace> {
        self.check_compatible(other)?;
        let mut vecs = self.basis();
        vecs.extend(other.basis());
        Ok(Subspace::span(&vecs, self.tag(), self.ambient))
    }

    pub fn intersect(&self, other: &Subspace) -> crate::Result<Subspace> {
        self.check_compatible(other)?;
        match (&self.rows, &other.rows) {
            (Rows::Complex(a), Rows::Complex(b)) => {
                let vecs = intersect_rows(a, b);
                Ok(Subspace::span(&vecs, FieldTag::Complex, self.ambient))
            }
            (Rows::Real(a), Rows::Real(b)) => {
                let vecs = intersect_rows(a, b);
                Ok(Subspace::span_doubled(&vecs, self.ambient))
            }
            _ => unreachable!("tags already checked"),
        }
    }

    /// Image under a map on complex coordinate vectors; the map must be
    /// linear over the tagged field for the result to be well defined.
    pub fn map(&self, f: impl Fn(&[GaussianRational]) -> Vec<GaussianRational>) -> Subspace {
        let vecs: Vec<Vec<GaussianRational>> = self.basis().iter().map(|v| f(v)).collect();
        Subspace::span(&vecs, self.tag(), self.ambient)
    }

    /// Multiplication by i (only changes real-tagged subspaces).
    pub fn mul_i(&self) -> Subspace {
        self.map(|v| v.iter().map(|x| x * &GaussianRational::i()).collect())
    }

    /// Views a complex-tagged subspace as a real one (dimension doubles).
    pub fn real_restriction(&self) -> Subspace {
        let mut vecs = self.basis();
        vecs.extend(
            self.basis()
                .iter()
                .map(|v| v.iter().map(|x| x * &GaussianRational::i()).collect::<Vec<_>>()),
        );
        Subspace::span(&vecs, FieldTag::Real, self.ambient)
    }

    /// Complex span of a (real-tagged) subspace.
    pub fn complex_span(&self) -> Subspace {
        Subspace::span(&self.basis(), FieldTag::Complex, self.ambient)
    }

    fn check_compatible(&self, other: &Subspace) -> crate::Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::Dimension(format!(
                "ambient {} vs {}",
                self.ambient, other.ambient
            )));
        }
        if self.tag() != other.tag() {
            return Err(Error::FieldTag(format!(
                "{:?} vs {:?}",
                self.tag(),
                other.tag()
            )));
        }
        Ok(())
    }
}

fn reduces_to_zero<S: Scalar>(rref_rows: &[Vec<S>], mut v: Vec<S>) -> bool {
    for row in rref_rows {
        let pivot = match row.iter().position(|x| !x.is_zero()) {
            Some(p) => p,
            None => continue,
        };
        if !v[pivot].is_zero() {
            let f = v[pivot].clone();
            for (x, r) in v.iter_mut().zip(row.iter()) {
                let t = f.mul(r);
                *x = x.sub(&t);
            }
        }
    }
    v.iter().all(|x| x.is_zero())
}

/// Intersection of two row spans: solve a*A = b*B via the kernel of
/// [A^T | -B^T] and read off the A-side combinations.
fn intersect_rows<S: Scalar>(a: &[Vec<S>], b: &[Vec<S>]) -> Vec<Vec<S>> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let n = a[0].len();
    let (ka, kb) = (a.len(), b.len());
    let mut system = vec![vec![S::zero(); ka + kb]; n];
    for (i, row) in a.iter().enumerate() {
        for (c, val) in row.iter().enumerate() {
            system[c][i] = val.clone();
        }
    }
    for (i, row) in b.iter().enumerate() {
        for (c, val) in row.iter().enumerate() {
            system[c][ka + i] = val.neg();
        }
    }
    kernel_basis(&system, ka + kb)
        .into_iter()
        .map(|coeffs| {
            let mut v = vec![S::zero(); n];
            for (i, row) in a.iter().enumerate() {
                if coeffs[i].is_zero() {
                    continue;
                }
                for (x, val) in v.iter_mut().zip(row.iter()) {
                    let t = coeffs[i].mul(val);
                    *x = x.add(&t);
                }
            }
            v
        })
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .collect()
}

/// Matrix of a real-linear map on doubled coordinates: column j is the
/// doubled image of the j-th doubled unit vector. Rows are equations for
/// use with `kernel_basis`.
pub(crate) fn doubled_operator_rows(
    ambient: usize,
    f: impl Fn(&[GaussianRational]) -> Vec<GaussianRational>,
) -> Vec<Vec<BigRational>> {
    let d2 = 2 * ambient;
    let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(d2);
    for j in 0..d2 {
        let mut e = vec![<BigRational as num::Zero>::zero(); d2];
        e[j] = num::One::one();
        let img = f(&undouble_vector(&e));
        cols.push(double_vector(&img));
    }
    (0..d2)
        .map(|r| (0..d2).map(|c| cols[c][r].clone()).collect())
        .collect()
}
