//! Structural laws of the algebra checked on randomized inputs.

use mvfn_core::{Context, GaError, Multivector};
use proptest::prelude::*;

fn close(a: &Multivector, b: &Multivector, tol: f64) -> bool {
    (*a - *b).norm() <= tol * (1.0 + b.norm())
}

fn mv(dim: usize) -> impl Strategy<Value = Multivector> {
    prop::collection::vec(-2.0f64..2.0, 1 << dim)
        .prop_map(move |c| Multivector::new(dim, &c).unwrap())
}

fn dim_pair() -> impl Strategy<Value = (Multivector, Multivector)> {
    (1usize..=4).prop_flat_map(|d| (mv(d), mv(d)))
}

fn dim_triple() -> impl Strategy<Value = (Multivector, Multivector, Multivector)> {
    (1usize..=4).prop_flat_map(|d| (mv(d), mv(d), mv(d)))
}

proptest! {
    #[test]
    fn product_is_associative((a, b, c) in dim_triple()) {
        let left = a.gp(&b).unwrap().gp(&c).unwrap();
        let right = a.gp(&b.gp(&c).unwrap()).unwrap();
        prop_assert!(close(&left, &right, 1e-12));
    }

    #[test]
    fn product_distributes((a, b, c) in dim_triple()) {
        let left = a.gp(&(b + c)).unwrap();
        let right = a.gp(&b).unwrap() + a.gp(&c).unwrap();
        prop_assert!(close(&left, &right, 1e-12));
    }

    #[test]
    fn reversion_reverses_products((a, b) in dim_pair()) {
        let left = a.gp(&b).unwrap().reversion();
        let right = b.reversion().gp(&a.reversion()).unwrap();
        prop_assert!(close(&left, &right, 1e-12));
    }

    #[test]
    fn conjugation_reverses_products((a, b) in dim_pair()) {
        let left = a.gp(&b).unwrap().cliff_conj();
        let right = b.cliff_conj().gp(&a.cliff_conj()).unwrap();
        prop_assert!(close(&left, &right, 1e-12));
    }

    #[test]
    fn space_inversion_is_an_automorphism((a, b) in dim_pair()) {
        let left = a.gp(&b).unwrap().space_inversion();
        let right = a.space_inversion().gp(&b.space_inversion()).unwrap();
        prop_assert!(close(&left, &right, 1e-12));
    }

    #[test]
    fn involutions_are_involutive((a, _) in dim_pair()) {
        prop_assert!(close(&a.reversion().reversion(), &a, 0.0));
        prop_assert!(close(&a.cliff_conj().cliff_conj(), &a, 0.0));
        prop_assert!(close(&a.space_inversion().space_inversion(), &a, 0.0));
    }

    #[test]
    fn grades_partition_the_element((a, _) in dim_pair()) {
        let mut sum = Multivector::zero(a.dim());
        for k in 0..=a.dim() {
            sum = sum + a.grade(k).unwrap().value;
        }
        prop_assert!(close(&sum, &a, 0.0));
    }

    #[test]
    fn radicand_commutes_with_its_element(a in (1usize..=3).prop_flat_map(mv)) {
        // M conj(M) and conj(M) M are the same central element.
        let left = a.gp(&a.cliff_conj()).unwrap();
        let right = a.cliff_conj().gp(&a).unwrap();
        prop_assert!(close(&left, &right, 1e-12));
        prop_assert!(left.noncomplex_residual() <= 1e-12 * (1.0 + a.norm() * a.norm()));
    }

    #[test]
    fn radicand_is_multiplicative((a, b) in (1usize..=3).prop_flat_map(|d| (mv(d), mv(d)))) {
        let lhs = a.gp(&b).unwrap().amplitude_radicand().unwrap();
        let rhs = a.amplitude_radicand().unwrap() * b.amplitude_radicand().unwrap();
        prop_assert!((lhs - rhs).modulus() <= 1e-10 * (1.0 + rhs.modulus()));
    }

    #[test]
    fn inverse_is_two_sided(a in (1usize..=3).prop_flat_map(mv)) {
        let ctx = Context::default();
        match a.inverse(&ctx) {
            Ok(inv) => {
                let one = Multivector::scalar(a.dim(), 1.0);
                prop_assert!(close(&a.gp(&inv).unwrap(), &one, 1e-8));
                prop_assert!(close(&inv.gp(&a).unwrap(), &one, 1e-8));
            }
            Err(GaError::NullAmplitude) => {}
            Err(e) => return Err(TestCaseError::fail(format!("unexpected error: {e}"))),
        }
    }

    #[test]
    fn exp_adds_along_a_ray(a in (1usize..=3).prop_flat_map(mv), s in -1.0f64..1.0, t in -1.0f64..1.0) {
        // exp(sM) exp(tM) = exp((s+t)M): the two arguments commute.
        let a = a.scale(0.6);
        let lhs = a.scale(s).exp().unwrap().gp(&a.scale(t).exp().unwrap()).unwrap();
        let rhs = a.scale(s + t).exp().unwrap();
        prop_assert!(close(&lhs, &rhs, 1e-9));
    }

    #[test]
    fn exp_of_negative_is_the_inverse(a in (1usize..=3).prop_flat_map(mv)) {
        let lhs = a.exp().unwrap().gp(&(-a).exp().unwrap()).unwrap();
        let one = Multivector::scalar(a.dim(), 1.0);
        prop_assert!(close(&lhs, &one, 1e-8));
    }

    #[test]
    fn embedding_preserves_products((a, b) in (1usize..=3).prop_flat_map(|d| (mv(d), mv(d)))) {
        for target in a.dim()..=4 {
            let lhs = a.gp(&b).unwrap().embed_in(target).unwrap();
            let rhs = a.embed_in(target).unwrap().gp(&b.embed_in(target).unwrap()).unwrap();
            prop_assert!(close(&lhs, &rhs, 1e-12));
        }
    }

    #[test]
    fn projection_undoes_embedding(a in (1usize..=3).prop_flat_map(mv)) {
        for target in a.dim()..=4 {
            let (back, dropped) = a.embed_in(target).unwrap().project_to(a.dim()).unwrap();
            prop_assert!(close(&back, &a, 0.0));
            prop_assert_eq!(dropped, 0.0);
        }
    }

    #[test]
    fn scalar_product_embeds_reals(x in -3.0f64..3.0, y in -3.0f64..3.0, d in 1usize..=4) {
        let lhs = Multivector::scalar(d, x).gp(&Multivector::scalar(d, y)).unwrap();
        let rhs = Multivector::scalar(d, x * y);
        prop_assert!(close(&lhs, &rhs, 1e-15));
    }
}
