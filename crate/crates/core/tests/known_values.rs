//! Named isomorphisms, signs and worked examples.

use cliffkit::algebra::{Blade, Multivector, Signature};
use cliffkit::cech::examples;
use cliffkit::groups::{self, SpinComponent};
use cliffkit::linalg::Matrix;
use cliffkit::repr::{self, TargetKind, TargetRing};
use cliffkit::sample;
use cliffkit::scalar::{int, rat, Gaussian, Rational};

fn sig(p: usize, q: usize) -> Signature {
    Signature::new(p, q)
}

#[test]
fn named_isomorphisms() {
    assert_eq!(repr::classify(sig(1, 3)).to_string(), "Mat(2,H)");
    assert_eq!(repr::classify(sig(4, 0)).to_string(), "Mat(2,H)");
    assert_eq!(repr::classify(sig(0, 4)).to_string(), "Mat(2,H)");
    assert_eq!(repr::classify(sig(3, 1)).to_string(), "Mat(4,R)");
    assert_eq!(repr::classify(sig(2, 2)).to_string(), "Mat(4,R)");
    assert_eq!(repr::classify(sig(0, 3)), TargetRing::new(TargetKind::MatHxMatH, 1));
    assert_eq!(repr::classify(sig(2, 0)), repr::classify(sig(1, 1)));
    assert_eq!(repr::classify(sig(0, 2)).to_string(), "Mat(1,H)");
    assert_eq!(repr::classify(sig(0, 1)).to_string(), "Mat(1,C)");
    assert_eq!(repr::classify_complex(4).to_string(), "Mat(4,C)");
    assert_eq!(repr::classify_complex(3).to_string(), "Mat(2,C)⊕Mat(2,C)");
}

#[test]
fn real_irreducible_dimensions() {
    assert_eq!(repr::real_irrep_dim(sig(1, 3)), 8);
    assert_eq!(repr::real_irrep_dim(sig(3, 1)), 4);
    assert_eq!(repr::real_irrep_dim(sig(0, 1)), 2);
}

#[test]
fn three_negative_generators_split_into_two_quaternion_blocks() {
    let rep = repr::compile_rep(sig(0, 3));
    assert_eq!(rep.target(), TargetRing::new(TargetKind::MatHxMatH, 1));
    let repr::AnyRep::Quaternionic(r) = rep else { panic!("quaternionic model expected") };
    for a in 0..3 {
        assert_eq!(r.factor(0)[a], r.factor(1)[a].neg());
    }
}

#[test]
fn pseudoscalar_squares() {
    assert_eq!(groups::total_reflection_square(sig(2, 0)), -1);
    assert_eq!(groups::total_reflection_square(sig(1, 1)), 1);
    assert_eq!(groups::total_reflection_square(sig(1, 3)), -1);
    assert_eq!(groups::total_reflection_square(sig(4, 0)), 1);
}

#[test]
fn pseudoscalar_acts_as_minus_one() {
    for s in [sig(2, 0), sig(1, 1), sig(1, 3), sig(4, 0), sig(3, 3)] {
        let omega = groups::total_reflection_versor(s).unwrap();
        let m = groups::zeta(&omega).unwrap();
        assert_eq!(*m.matrix(), Matrix::<Rational>::identity(s.n()).neg(), "{s}");
    }
}

#[test]
fn one_vector_acts_as_a_total_reflection_times_a_hyperplane_reflection() {
    let s = sig(2, 1);
    let w = Multivector::vector(s, &[int(1), int(2), int(1)]);
    let g = groups::make_versor(s, &[w.clone()]).unwrap();
    let zeta = groups::zeta(&g).unwrap();
    assert_eq!(zeta, groups::reflection_matrix(&w).unwrap().neg());
    // w itself is fixed, the orthogonal complement is negated
    assert_eq!(zeta.matrix().mul_vec(&w.vector_coords()), w.vector_coords());
}

#[test]
fn adjoint_by_a_non_unitary_element_breaks_hermiticity() {
    let s = Signature::euclidean(2);
    let e12 = Blade::from_indices(&[1, 2], 2).unwrap();
    let a = Multivector::from_terms(
        s,
        [(Blade::UNIT, Gaussian::real(rat(5, 4))), (e12, Gaussian::new(int(0), rat(3, 4)))],
    );
    let (h, image) = groups::non_hermitian_witness(&a).unwrap().expect("witness exists");
    assert!(h.is_hermitian());
    assert!(!image.is_hermitian());

    let rotation = Multivector::from_terms(s, [(Blade::UNIT, Gaussian::real(rat(3, 5))), (e12, Gaussian::real(rat(4, 5)))]);
    assert!(groups::non_hermitian_witness(&rotation).unwrap().is_none());
}

#[test]
fn lorentz_spin_elements_have_the_chiral_block_form() {
    let s = sig(1, 3);
    let v = |a: usize| Multivector::generator(s, a);
    let boost = groups::make_versor(s, &[v(0), v(1)]).unwrap();
    let verdict = groups::spin13_block_check(&boost).unwrap();
    assert_eq!(verdict.component, SpinComponent::Minus);
    let rotation = groups::make_versor(s, &[v(1), v(2)]).unwrap();
    assert_eq!(groups::spin13_block_check(&rotation).unwrap().component, SpinComponent::Plus);

    let mut rng = sample::rng(3);
    for len in [2, 4, 2, 4, 2, 4] {
        let g = sample::pin_versor(&mut rng, s, len);
        let verdict = groups::spin13_block_check(&g).unwrap();
        let minus_one = Gaussian::real(int(-1));
        assert!(verdict.det_upper == Gaussian::real(int(1)) || verdict.det_upper == minus_one);
    }
}

#[test]
fn euclidean_spin_elements_are_pairs_of_unimodular_unitaries() {
    let s = sig(4, 0);
    let mut rng = sample::rng(5);
    for len in [2, 4, 2, 4] {
        let g = sample::pin_versor(&mut rng, s, len);
        let verdict = groups::spin13_block_check(&g).unwrap();
        assert_eq!(verdict.component, SpinComponent::Plus);
    }
    let odd = sample::pin_versor(&mut rng, s, 1);
    assert!(groups::spin13_block_check(&odd).is_err());
}

#[test]
fn even_subring_of_four_positive_generators() {
    let es = repr::even_subring_rep(sig(4, 0)).unwrap();
    assert_eq!(es.derived, sig(0, 3));
    // the w generators sit inside the Mat(2,H) model of the ambient algebra
    assert_eq!(es.rep.target(), repr::classify(sig(4, 0)));
    assert!(es.rep.is_injective());
    assert_eq!(repr::classify(es.derived).real_dim(), 8);
}

#[test]
fn projective_plane_counts() {
    let rp2 = examples::projective_plane();
    assert_eq!((rp2.count(0), rp2.count(1), rp2.count(2)), (6, 15, 10));
    assert_eq!(rp2.euler_characteristic(), 1);
}
