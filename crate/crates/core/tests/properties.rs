//! Property-based invariants for the exact layer.

use liefam::catalog::sl_basis;
use liefam::exactlin::{ExactMatrix, FieldTag, GaussianRational, Subspace};
use liefam::liecore::LieAlgebraSpec;
use num::rational::BigRational;
use num::BigInt;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = BigRational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    })
}

fn scalar() -> impl Strategy<Value = GaussianRational> {
    (rational(), rational()).prop_map(|(re, im)| GaussianRational::new(re, im))
}

fn vector(len: usize) -> impl Strategy<Value = Vec<GaussianRational>> {
    proptest::collection::vec(scalar(), len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The scalar text format round-trips exactly.
    #[test]
    fn scalar_text_round_trip(s in scalar()) {
        let text = s.to_string();
        let back: GaussianRational = text.parse().unwrap();
        prop_assert_eq!(s, back);
    }

    /// Field arithmetic: (a + b) * c = a*c + b*c and nonzero a has an
    /// exact inverse.
    #[test]
    fn scalar_field_laws(a in scalar(), b in scalar(), c in scalar()) {
        let lhs = &(&a + &b) * &c;
        let rhs = &(&a * &c) + &(&b * &c);
        prop_assert_eq!(lhs, rhs);
        if !a.is_zero() {
            let inv = a.inv().unwrap();
            prop_assert_eq!(&a * &inv, GaussianRational::one());
        }
    }

    /// dim(U ∩ V) + dim(U + V) = dim U + dim V for complex spans.
    #[test]
    fn subspace_dimension_formula(
        us in proptest::collection::vec(vector(4), 1..4),
        vs in proptest::collection::vec(vector(4), 1..4),
    ) {
        let u = Subspace::span(&us, FieldTag::Complex, 4);
        let v = Subspace::span(&vs, FieldTag::Complex, 4);
        let inter = u.intersect(&v).unwrap();
        let sum = u.sum(&v).unwrap();
        prop_assert_eq!(inter.dim() + sum.dim(), u.dim() + v.dim());
        prop_assert!(u.contains(&inter).unwrap());
        prop_assert!(sum.contains(&u).unwrap());
    }

    /// The fingerprint is invariant under exact changes of basis.
    #[test]
    fn fingerprint_basis_invariance(coeffs in proptest::collection::vec(-3i64..=3, 9)) {
        let l = LieAlgebraSpec::new(2, FieldTag::Real, sl_basis(2)).unwrap();
        // Perturb the identity by a strictly upper-triangular coefficient
        // matrix so the change of basis is always invertible.
        let d = 3;
        let mut t = vec![vec![GaussianRational::zero(); d]; d];
        for i in 0..d {
            t[i][i] = GaussianRational::one();
            for j in (i + 1)..d {
                t[i][j] = GaussianRational::from_int(coeffs[i * d + j]);
            }
        }
        let moved = l.change_basis(&t).unwrap();
        prop_assert_eq!(moved.fingerprint().unwrap(), l.fingerprint().unwrap());
    }

    /// Membership is stable under taking linear combinations of a span.
    #[test]
    fn span_membership_closed_under_combination(
        vs in proptest::collection::vec(vector(3), 1..3),
        c0 in scalar(),
        c1 in scalar(),
    ) {
        let u = Subspace::span(&vs, FieldTag::Complex, 3);
        let combo: Vec<GaussianRational> = (0..3)
            .map(|k| {
                let mut acc = GaussianRational::zero();
                for (i, v) in vs.iter().enumerate() {
                    let c = if i % 2 == 0 { &c0 } else { &c1 };
                    acc = &acc + &(c * &v[k]);
                }
                acc
            })
            .collect();
        prop_assert!(u.member(&combo).unwrap());
    }

    /// vectorize/from_vector round-trips matrices.
    #[test]
    fn matrix_vectorize_round_trip(entries in proptest::collection::vec(scalar(), 6)) {
        let m = ExactMatrix::from_rows(vec![
            entries[0..3].to_vec(),
            entries[3..6].to_vec(),
        ]).unwrap();
        let v = m.vectorize();
        let back = ExactMatrix::from_vector(&v, 2, 3);
        prop_assert_eq!(m, back);
    }
}
