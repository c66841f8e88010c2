use cliffkit::algebra::{AnyMultivector, Multivector, Signature};
use cliffkit::cech::{self, examples, Complex};
use cliffkit::groups::{self, PseudoOrthogonalMatrix};
use cliffkit::repr::{self, AnyRep};
use cliffkit::sample;
use cliffkit::scalar::{int, Gaussian, Rational};
use proptest::prelude::*;

fn signature(max_n: usize) -> impl Strategy<Value = Signature> {
    (0..=max_n).prop_flat_map(|n| (0..=n).prop_map(move |p| Signature::new(p, n - p)))
}

fn sparse_coords(dim: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -3i64..=3], dim)
        .prop_map(|v| v.into_iter().map(int).collect())
}

fn element(sig: Signature) -> impl Strategy<Value = Multivector<Rational>> {
    sparse_coords(sig.dim()).prop_map(move |c| Multivector::from_coordinates(sig, &c))
}

fn triple(max_n: usize) -> impl Strategy<Value = (Multivector<Rational>, Multivector<Rational>, Multivector<Rational>)> {
    signature(max_n).prop_flat_map(|s| (element(s), element(s), element(s)))
}

fn complex_element(sig: Signature) -> impl Strategy<Value = Multivector<Gaussian>> {
    (sparse_coords(sig.dim()), sparse_coords(sig.dim())).prop_map(move |(re, im)| {
        let c: Vec<Gaussian> = re.into_iter().zip(im).map(|(a, b)| Gaussian::new(a, b)).collect();
        Multivector::from_coordinates(sig, &c)
    })
}

fn versor_seed() -> impl Strategy<Value = (Signature, u64)> {
    (signature(5).prop_filter("needs a vector", |s| s.n() > 0), any::<u64>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_associative_and_distributive((a, b, c) in triple(5)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(b.add(&c).mul(&a), b.mul(&a).add(&c.mul(&a)));
        prop_assert_eq!(a.mul(&Multivector::one(a.signature())), a.clone());
    }

    #[test]
    fn reversion_reverses_and_involution_preserves((a, b, _) in triple(5)) {
        prop_assert_eq!(a.mul(&b).reversion(), b.reversion().mul(&a.reversion()));
        prop_assert_eq!(a.mul(&b).grade_involution(), a.grade_involution().mul(&b.grade_involution()));
        prop_assert_eq!(a.even_part().add(&a.odd_part()), a.clone());
    }

    #[test]
    fn inverse_is_two_sided((a, _, _) in triple(4)) {
        if let Some(inv) = a.invert() {
            let one = Multivector::one(a.signature());
            prop_assert_eq!(a.mul(&inv), one.clone());
            prop_assert_eq!(inv.mul(&a), one);
        } else {
            prop_assert!(a.left_mul_matrix().rank() < a.signature().dim());
        }
    }

    #[test]
    fn star_is_an_anti_involution((a, b) in signature(4).prop_flat_map(|s| (complex_element(s), complex_element(s)))) {
        prop_assert_eq!(a.mul(&b).star(), b.star().mul(&a.star()));
        prop_assert_eq!(a.star().star(), a.clone());
    }

    #[test]
    fn compiled_models_are_homomorphisms((a, b, _) in triple(5)) {
        let rep = repr::compile_rep(a.signature());
        macro_rules! check {
            ($r:expr) => {{
                let (ia, ib, iab) = ($r.apply(&a), $r.apply(&b), $r.apply(&a.mul(&b)));
                for f in 0..ia.len() {
                    prop_assert_eq!(&iab[f], &ia[f].matmul(&ib[f]));
                }
            }};
        }
        match &rep {
            AnyRep::Real(r) => check!(r),
            AnyRep::Complex(r) => check!(r),
            AnyRep::Quaternionic(r) => check!(r),
        }
    }

    #[test]
    fn vector_representation_is_a_homomorphism((sig, seed) in versor_seed()) {
        let mut rng = sample::rng(seed);
        let g = sample::versor(&mut rng, sig, 1 + (seed % 3) as usize);
        let h = sample::versor(&mut rng, sig, 1 + (seed / 3 % 3) as usize);
        let (zg, zh) = (groups::zeta(&g).unwrap(), groups::zeta(&h).unwrap());
        prop_assert_eq!(groups::zeta(&g.compose(&h)).unwrap(), zg.compose(&zh));
        prop_assert_eq!(groups::zeta(&g.scaled(&int(7))).unwrap(), zg.clone());
        prop_assert!(PseudoOrthogonalMatrix::new(sig, zg.matrix().clone()).is_ok());
    }

    #[test]
    fn reflections_recompose((sig, seed) in versor_seed()) {
        let mut rng = sample::rng(seed);
        let m = sample::reflection_product(&mut rng, sig, (seed % 6) as usize);
        let d = groups::cartan_dieudonne(&m).unwrap();
        prop_assert_eq!(d.recompose(sig).unwrap(), m);
        prop_assert!(d.len() <= 2 * sig.n());
        if d.fallbacks == 0 {
            prop_assert!(d.len() <= sig.n());
        }
    }

    #[test]
    fn lifts_cover((sig, seed) in versor_seed().prop_filter("even dimension", |(s, _)| s.n() % 2 == 0)) {
        let mut rng = sample::rng(seed);
        let m = sample::reflection_product(&mut rng, sig, (seed % 5) as usize);
        let g = groups::lift_to_pin(&m).unwrap();
        prop_assert_eq!(groups::zeta(&g).unwrap(), m.clone());
        prop_assert_eq!(g.parity() % 2 == 0, m.is_special());
    }

    #[test]
    fn multivector_json_round_trip((a, _, _) in triple(5)) {
        let any = AnyMultivector::Real(a);
        prop_assert_eq!(AnyMultivector::from_json_str(&serde_json::to_string(&any.to_json()).unwrap()).unwrap(), any);
    }

    #[test]
    fn relabeling_vertices_keeps_betti_numbers(perm in Just((0..6).collect::<Vec<usize>>()).prop_shuffle()) {
        let rp2 = examples::projective_plane();
        let facets: Vec<Vec<usize>> = rp2
            .simplices(2)
            .iter()
            .map(|t| {
                let mut s: Vec<usize> = t.iter().map(|&v| perm[v]).collect();
                s.sort();
                s
            })
            .collect();
        let moved = Complex::from_facets(6, &facets).unwrap();
        for k in 0..4 {
            prop_assert_eq!(cech::z2_betti(&moved, k), cech::z2_betti(&rp2, k));
        }
    }

    #[test]
    fn coboundary_squares_to_zero(facets in prop::collection::vec(prop::sample::subsequence((0..6).collect::<Vec<usize>>(), 2..=4), 1..8)) {
        let c = Complex::from_facets(6, &facets).unwrap();
        for k in 0..2 {
            prop_assert!(c.coboundary(k + 1).matmul(&c.coboundary(k)).is_zero());
        }
    }
}

#[test]
fn representation_json_round_trip() {
    for sig in Signature::all_up_to(5) {
        let rep = repr::compile_rep(sig);
        let back = AnyRep::from_json(&rep.to_json()).unwrap();
        assert_eq!(back.to_json(), rep.to_json(), "{sig}");
    }
    let c = AnyRep::Complex(repr::compile_complex_rep(4).unwrap());
    assert_eq!(AnyRep::from_json(&c.to_json()).unwrap().to_json(), c.to_json());
}
