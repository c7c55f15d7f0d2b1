use proptest::prelude::*;
use uqrs_core::linalg::Matrix;
use uqrs_core::scalars::{BiPoly, BigRat, RatFunc, Sampled, Scalar, ScalarError};

fn poly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((-4i64..=4, 0u32..3, 0u32..3), 0..4)
        .prop_map(|terms| BiPoly::from_terms(terms.into_iter().map(|(c, a, b)| ((a, b), BigRat::from_int(c)))))
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), poly()).prop_filter_map("zero denominator", |(n, d)| RatFunc::new(n, d).ok())
}

fn nonzero_ratfunc() -> impl Strategy<Value = RatFunc> {
    ratfunc().prop_filter("zero", |x| !x.is_zero())
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<BigRat>> {
    prop::collection::vec(-3i64..=3, rows * cols).prop_map(move |v| {
        Matrix::from_entries(rows, cols, v.into_iter().enumerate().map(|(k, c)| (k / cols, k % cols, BigRat::from_int(c))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn product_then_quotient_is_identity(a in ratfunc(), b in nonzero_ratfunc()) {
        prop_assert_eq!((&a * &b).checked_div(&b).unwrap(), a);
    }

    #[test]
    fn sum_then_difference_is_identity(a in ratfunc(), b in ratfunc()) {
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn evaluation_is_a_ring_map(a in ratfunc(), b in ratfunc()) {
        for p in [Sampled::default(), Sampled::from_ints(3, 5).unwrap(), Sampled::from_ints(5, 2).unwrap()] {
            if let (Ok(x), Ok(y)) = (p.evaluate(&a), p.evaluate(&b)) {
                prop_assert_eq!(p.evaluate(&(&a * &b)).unwrap(), x.clone() * &y);
                prop_assert_eq!(p.evaluate(&(&a + &b)).unwrap(), x + &y);
            }
        }
    }

    #[test]
    fn specialization_is_a_ring_map(a in ratfunc(), b in ratfunc()) {
        if let (Ok(x), Ok(y)) = (a.specialize_jimbo(), b.specialize_jimbo()) {
            prop_assert_eq!((&a * &b).specialize_jimbo().unwrap(), &x * &y);
            match (&a + &b).specialize_jimbo() {
                Ok(sum) => prop_assert_eq!(sum, &x + &y),
                // cancellation can only remove denominator factors
                Err(e) => prop_assert!(false, "sum of specializable functions failed: {e}"),
            }
        }
    }

    #[test]
    fn denominator_is_monic_and_coprime(a in ratfunc()) {
        let (_, lead) = a.denom().leading_term().unwrap();
        prop_assert!(lead.is_one());
        let g = a.numer().gcd(a.denom());
        prop_assert!(g.as_constant().is_some() || a.is_zero());
    }

    #[test]
    fn kron_mixed_product(
        a in matrix(2, 3), b in matrix(2, 2),
        c in matrix(3, 2), d in matrix(2, 3),
    ) {
        prop_assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
    }

    #[test]
    fn rank_nullity(a in matrix(4, 5)) {
        let kir = a.kernel_image_rank();
        prop_assert_eq!(kir.rank + kir.kernel.dim(), 5);
        for v in kir.kernel.basis() {
            prop_assert!(a.mul_vec(v).is_zero());
        }
        prop_assert_eq!(a.rank(), a.transpose().rank());
    }

    #[test]
    fn projection_after_inclusion_is_identity(a in matrix(3, 5)) {
        let sub = uqrs_core::linalg::Subspace::span(5, a.rows().iter().cloned());
        let q = uqrs_core::linalg::quotient_data(sub.clone());
        prop_assert_eq!(q.projection().mul(&q.inclusion()), Matrix::identity(q.dim()));
        for b in sub.basis() {
            prop_assert!(q.project(b).is_zero());
        }
    }
}

#[test]
fn specialization_rejects_vanishing_denominator() {
    let rs = &RatFunc::r() * &RatFunc::s();
    let f = RatFunc::one().checked_div(&(&rs - &RatFunc::one())).unwrap();
    assert_eq!(f.specialize_jimbo(), Err(ScalarError::DenominatorVanishes));
}
