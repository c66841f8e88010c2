//! Seeded generators of random test objects with small rational entries.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Blade, Multivector, Signature};
use crate::groups::{make_versor, reflection_matrix, PseudoOrthogonalMatrix, Versor};
use crate::scalar::{Gaussian, Rational};
use crate::spinors::{primitive_idempotent, HermitianIdempotent};

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// Integer coordinates in `-3..=3`, never isotropic.
pub fn anisotropic_vector(rng: &mut SeededRng, sig: Signature) -> Multivector<Rational> {
    loop {
        let coords: Vec<Rational> = (0..sig.n()).map(|_| int(rng.gen_range(-3..=3))).collect();
        let v = Multivector::vector(sig, &coords);
        if v.quadratic() != int(0) {
            return v;
        }
    }
}

/// A vector with `η(v,v) = ±1`: a basis vector pushed through one or two
/// random reflections.
pub fn unit_vector(rng: &mut SeededRng, sig: Signature) -> Multivector<Rational> {
    let a = rng.gen_range(0..sig.n());
    let mut v = Multivector::generator(sig, a);
    for _ in 0..rng.gen_range(1..=2) {
        let w = anisotropic_vector(rng, sig);
        let r = reflection_matrix(&w).expect("anisotropic");
        v = Multivector::vector(sig, &r.matrix().mul_vec(&v.vector_coords()));
    }
    v
}

pub fn versor(rng: &mut SeededRng, sig: Signature, len: usize) -> Versor {
    let vs: Vec<_> = (0..len).map(|_| anisotropic_vector(rng, sig)).collect();
    make_versor(sig, &vs).expect("anisotropic factors")
}

pub fn pin_versor(rng: &mut SeededRng, sig: Signature, len: usize) -> Versor {
    let vs: Vec<_> = (0..len).map(|_| unit_vector(rng, sig)).collect();
    make_versor(sig, &vs).expect("unit factors")
}

/// A composition of `count` random hyperplane reflections.
pub fn reflection_product(rng: &mut SeededRng, sig: Signature, count: usize) -> PseudoOrthogonalMatrix {
    (0..count).fold(PseudoOrthogonalMatrix::identity(sig), |acc, _| {
        acc.compose(&reflection_matrix(&anisotropic_vector(rng, sig)).expect("anisotropic"))
    })
}

/// An invertible `u` with `u u*` a positive scalar: a product of real
/// Euclidean vectors and factors `c + i d e^j`.
pub fn unitary(rng: &mut SeededRng, n: usize) -> Multivector<Gaussian> {
    let sig = Signature::euclidean(n);
    let mut u = Multivector::<Gaussian>::one(sig);
    for _ in 0..rng.gen_range(1..=3) {
        let factor = if rng.gen_bool(0.5) {
            anisotropic_vector(rng, sig).embed()
        } else {
            let c = int(rng.gen_range(1..=3));
            let d = int(rng.gen_range(-3..=3));
            let j = rng.gen_range(0..n);
            Multivector::from_terms(
                sig,
                [(Blade::UNIT, Gaussian::real(c)), (Blade::generator(j), Gaussian::new(int(0), d))],
            )
        };
        u = u.mul(&factor);
    }
    u
}

/// `u p u^{-1}` for a random unitary `u` and the standard primitive `p`.
pub fn minimal_idempotent(rng: &mut SeededRng, n: usize) -> HermitianIdempotent {
    let p0 = primitive_idempotent(n).expect("even n");
    let u = unitary(rng, n);
    let inv = u.invert().expect("unitary elements are invertible");
    HermitianIdempotent::from_element(u.mul(p0.element()).mul(&inv)).expect("conjugate of a Hermitian idempotent")
}
