use polyadica::hypercomplex::{cd_conj, cd_inverse, cd_mul, cd_norm_sq, CdElement};
use polyadica::imaginary::{
    ternary_at, ternary_mul_h, ternary_mul_h_components, two_squares_identity, HalfQuaternion, TernaryAlgebra,
};
use polyadica::norms::polyadic_norm;
use polyadica::numeric::{Field, Rational};
use polyadica::polyadization::dense_chain;
use polyadica::polyadization::{mul_with_at, nary_mul, nary_mul_dense, querelement, ZMatrix};
use polyadica::tower::{build_shape, tower_dimension, TowerSpec};
use polyadica::vectoralg::{poly_product, product_at, quervector, reduced_vectorization, shift_matrix, PolyVector};
use proptest::prelude::*;

type Q = Rational;

fn rational() -> impl Strategy<Value = Q> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Q::new(n, d).unwrap())
}

fn nonzero_rational() -> impl Strategy<Value = Q> {
    rational().prop_filter("nonzero", |q| !Field::is_zero(q))
}

fn cd(level: u32) -> impl Strategy<Value = CdElement<Q>> {
    prop::collection::vec(rational(), 1 << level).prop_map(move |c| CdElement::new(level, c).unwrap())
}

fn complex_matrix(arity: usize) -> impl Strategy<Value = ZMatrix<CdElement<Q>>> {
    prop::collection::vec(cd(1), arity - 1).prop_map(|e| ZMatrix::new(e).unwrap())
}

fn real_matrix(arity: usize) -> impl Strategy<Value = ZMatrix<Q>> {
    prop::collection::vec(nonzero_rational(), arity - 1).prop_map(|e| ZMatrix::new(e).unwrap())
}

fn vector(m: usize) -> impl Strategy<Value = PolyVector<Q>> {
    prop::collection::vec(rational(), m).prop_map(|c| PolyVector::new(c).unwrap())
}

fn half_quaternion() -> impl Strategy<Value = HalfQuaternion<Q>> {
    (rational(), rational()).prop_map(|(c, d)| HalfQuaternion::new(c, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quaternions_associate(x in cd(2), y in cd(2), z in cd(2)) {
        let left = cd_mul(&cd_mul(&x, &y).unwrap(), &z).unwrap();
        let right = cd_mul(&x, &cd_mul(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn octonion_norm_is_multiplicative(x in cd(3), y in cd(3)) {
        prop_assert_eq!(cd_norm_sq(&cd_mul(&x, &y).unwrap()), cd_norm_sq(&x) * cd_norm_sq(&y));
    }

    #[test]
    fn conjugation_is_an_involution(x in cd(3)) {
        prop_assert_eq!(cd_conj(&cd_conj(&x)), x);
    }

    #[test]
    fn octonion_inverse(x in cd(3)) {
        prop_assume!(!x.is_zero());
        prop_assert_eq!(cd_mul(&cd_inverse(&x).unwrap(), &x).unwrap(), CdElement::one(3));
    }

    #[test]
    fn cyclic_product_matches_dense(f in (3usize..=5).prop_flat_map(|n| prop::collection::vec(complex_matrix(n), n))) {
        prop_assert_eq!(nary_mul(&f).unwrap(), nary_mul_dense(&f).unwrap());
    }

    #[test]
    fn querelement_in_every_slot(z in (3usize..=6).prop_flat_map(real_matrix)) {
        let zq = querelement(&z).unwrap();
        for slot in 0..z.arity() {
            prop_assert_eq!(mul_with_at(&z, &zq, slot).unwrap(), z.clone());
        }
    }

    #[test]
    fn polyadic_norm_is_multiplicative(f in prop::collection::vec(complex_matrix(4), 4)) {
        let lhs = polyadic_norm(&nary_mul(&f).unwrap()).unwrap().value_sq;
        let rhs = f.iter().fold(Q::one(), |acc, z| acc * polyadic_norm(z).unwrap().value_sq);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn vector_product_is_a_matrix_product(f in (2usize..=5).prop_flat_map(|m| prop::collection::vec(vector(m), m + 1))) {
        let dense: Vec<_> = f.iter().map(shift_matrix).collect();
        prop_assert_eq!(poly_product(&f).unwrap(), reduced_vectorization(&dense_chain(&dense).unwrap()).unwrap());
    }

    #[test]
    fn quervector_in_every_slot(c in prop::collection::vec(nonzero_rational(), 2..=5)) {
        let v = PolyVector::new(c).unwrap();
        let q = quervector(&v).unwrap();
        for slot in 0..=v.dim() {
            prop_assert_eq!(product_at(&v, &q, slot).unwrap(), v.clone());
        }
    }

    #[test]
    fn towers_are_monomial(stages in prop::collection::vec(3usize..=6, 1..=3)) {
        let spec = TowerSpec::new(stages).unwrap();
        let shape = build_shape(&spec);
        prop_assert!(shape.is_monomial());
        prop_assert_eq!(shape.size(), spec.size());
        prop_assert_eq!(tower_dimension(&spec), shape.size() << spec.level());
    }

    #[test]
    fn half_quaternion_closed_form(x in half_quaternion(), y in half_quaternion(), z in half_quaternion()) {
        prop_assert_eq!(ternary_mul_h(&x, &y, &z), ternary_mul_h_components(&x, &y, &z));
        let (lhs, rhs) = two_squares_identity(&x, &y, &z);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn half_quaternion_querelement(x in half_quaternion()) {
        prop_assume!(!Field::is_zero(&x.norm_sq()));
        let q = x.quer().unwrap();
        for slot in 0..3 {
            prop_assert_eq!(ternary_at(&x, &q, slot), x.clone());
        }
    }

    #[test]
    fn rational_json_round_trip(q in rational()) {
        prop_assert_eq!(Q::from_json(&Field::to_json(&q)).unwrap(), q);
    }
}
