//! Blade-level arithmetic in real Clifford algebras `C(p,q)` and complex
//! Clifford algebras `CC(n)`.
//!
//! Generators are indexed from zero in the API (`v^1` is generator `0`);
//! blades print and serialize with one-based indices.
//!
//! A complex algebra `CC(n)` is a [`Multivector<Gaussian>`] over the
//! Euclidean signature `(n, 0)`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::Matrix;
use crate::scalar::{Field, Gaussian, Rational, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("blade index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("blade indices must be strictly increasing, got {0:?}")]
    UnsortedBlade(Vec<usize>),
    #[error("signature mismatch: {0} vs {1}")]
    SignatureMismatch(Signature, Signature),
    #[error("grade {k} exceeds n = {n}")]
    GradeOutOfRange { k: usize, n: usize },
    #[error("algebras with more than {max} generators are not supported")]
    TooManyGenerators { max: usize },
}

/// Largest supported `p + q`; blades are `u32` masks.
pub const MAX_GENERATORS: usize = 16;

/// Metric signature: `p` generators squaring to `+e`, then `q` squaring to `-e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Signature {
    pub p: usize,
    pub q: usize,
}

impl Signature {
    pub fn new(p: usize, q: usize) -> Self {
        assert!(p + q <= MAX_GENERATORS, "signature ({p},{q}) exceeds {MAX_GENERATORS} generators");
        Self { p, q }
    }

    /// Euclidean signature `(n, 0)`, the generating metric of `CC(n)`.
    pub fn euclidean(n: usize) -> Self {
        Self::new(n, 0)
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    /// `η^{aa}` for generator `a` (zero-based).
    pub fn metric(&self, a: usize) -> i32 {
        debug_assert!(a < self.n());
        if a < self.p {
            1
        } else {
            -1
        }
    }

    pub fn metric_matrix(&self) -> Matrix<Rational> {
        let mut m = Matrix::zeros(self.n(), self.n());
        for a in 0..self.n() {
            m[(a, a)] = Rational::from_integer(self.metric(a).into());
        }
        m
    }

    /// All `2^n` blades in mask order.
    pub fn blades(&self) -> impl Iterator<Item = Blade> {
        (0..1u32 << self.n()).map(Blade)
    }

    pub fn dim(&self) -> usize {
        1 << self.n()
    }

    /// All 45 signatures with `p + q <= max_n` when `max_n = 8`.
    pub fn all_up_to(max_n: usize) -> Vec<Signature> {
        (0..=max_n).flat_map(|n| (0..=n).map(move |p| Signature::new(p, n - p))).collect()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// Basis monomial `v^{i1} ... v^{ik}` with `i1 < ... < ik`, as a bitmask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Blade(pub u32);

impl Blade {
    pub const UNIT: Blade = Blade(0);

    pub fn generator(a: usize) -> Self {
        Blade(1 << a)
    }

    /// From one-based, strictly increasing indices.
    pub fn from_indices(indices: &[usize], n: usize) -> Result<Self, AlgebraError> {
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(AlgebraError::UnsortedBlade(indices.to_vec()));
        }
        let mut mask = 0u32;
        for &i in indices {
            if i == 0 || i > n {
                return Err(AlgebraError::IndexOutOfRange { index: i, n });
            }
            mask |= 1 << (i - 1);
        }
        Ok(Blade(mask))
    }

    /// One-based indices in increasing order.
    pub fn indices(&self) -> Vec<usize> {
        (0..32).filter(|b| self.0 & (1 << b) != 0).map(|b| b + 1).collect()
    }

    pub fn grade(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_valid(&self, n: usize) -> bool {
        n >= 32 || self.0 >> n == 0
    }

    /// `(-1)^{k(k-1)/2}`, the sign picked up under reversion.
    pub fn reversion_sign(&self) -> i32 {
        let k = self.grade();
        if (k * k.saturating_sub(1) / 2) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Whether the two basis monomials commute (otherwise they anticommute).
    pub fn commutes_with(&self, other: Blade) -> bool {
        let swaps = self.grade() * other.grade() - (self.0 & other.0).count_ones() as usize;
        swaps % 2 == 0
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "e");
        }
        let idx = self.indices();
        if idx.iter().all(|&i| i < 10) {
            write!(f, "v{}", idx.iter().map(|i| i.to_string()).collect::<String>())
        } else {
            write!(f, "v[{}]", idx.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","))
        }
    }
}

/// Sign of reordering the concatenation `b1 b2` into canonical order.
fn reorder_sign(b1: u32, b2: u32) -> i32 {
    let mut a = b1 >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b2).count_ones();
        a >>= 1;
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Product of two basis blades: `(sign, blade)` with `b1 b2 = sign * blade`.
pub fn blade_mul(b1: Blade, b2: Blade, sig: Signature) -> Result<(i32, Blade), AlgebraError> {
    let n = sig.n();
    for b in [b1, b2] {
        if !b.is_valid(n) {
            let bad = b.indices().into_iter().find(|&i| i > n).unwrap_or(0);
            return Err(AlgebraError::IndexOutOfRange { index: bad, n });
        }
    }
    Ok(blade_mul_unchecked(b1, b2, sig))
}

pub(crate) fn blade_mul_unchecked(b1: Blade, b2: Blade, sig: Signature) -> (i32, Blade) {
    let mut sign = reorder_sign(b1.0, b2.0);
    let common = b1.0 & b2.0;
    // generators p.. square to -e
    let negatives = (common >> sig.p).count_ones();
    if negatives % 2 == 1 {
        sign = -sign;
    }
    (sign, Blade(b1.0 ^ b2.0))
}

/// Sparse element `Σ λ_B B` of a Clifford algebra with exact coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Multivector<S> {
    sig: Signature,
    terms: BTreeMap<Blade, S>,
}

impl<S: Scalar> fmt::Debug for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multivector{} {}", self.sig, self)
    }
}

impl<S: Scalar> fmt::Display for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(b, c)| if b.0 == 0 { format!("({c})e") } else { format!("({c}){b}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<S: Scalar> Multivector<S> {
    pub fn zero(sig: Signature) -> Self {
        Self { sig, terms: BTreeMap::new() }
    }

    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, S::one())
    }

    pub fn scalar(sig: Signature, value: S) -> Self {
        Self::term(sig, Blade::UNIT, value)
    }

    pub fn term(sig: Signature, blade: Blade, coeff: S) -> Self {
        assert!(blade.is_valid(sig.n()), "blade {blade} invalid for {sig}");
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(blade, coeff);
        }
        Self { sig, terms }
    }

    /// Generator `v^{a+1}`.
    pub fn generator(sig: Signature, a: usize) -> Self {
        assert!(a < sig.n(), "generator {a} out of range for {sig}");
        Self::term(sig, Blade::generator(a), S::one())
    }

    pub fn blade(sig: Signature, blade: Blade) -> Self {
        Self::term(sig, blade, S::one())
    }

    /// Grade-1 element with the given coordinates.
    pub fn vector(sig: Signature, coords: &[S]) -> Self {
        assert_eq!(coords.len(), sig.n(), "vector length");
        Self::from_terms(sig, coords.iter().enumerate().map(|(a, c)| (Blade::generator(a), c.clone())))
    }

    pub fn from_terms(sig: Signature, terms: impl IntoIterator<Item = (Blade, S)>) -> Self {
        let mut mv = Self::zero(sig);
        for (b, c) in terms {
            mv.add_term(b, c);
        }
        mv
    }

    /// Coordinates in the mask-ordered blade basis.
    pub fn from_coordinates(sig: Signature, coords: &[S]) -> Self {
        assert_eq!(coords.len(), sig.dim());
        Self::from_terms(sig, coords.iter().enumerate().map(|(i, c)| (Blade(i as u32), c.clone())))
    }

    pub fn coordinates(&self) -> Vec<S> {
        let mut v = vec![S::zero(); self.sig.dim()];
        for (b, c) in &self.terms {
            v[b.0 as usize] = c.clone();
        }
        v
    }

    fn add_term(&mut self, blade: Blade, coeff: S) {
        assert!(blade.is_valid(self.sig.n()), "blade {blade} invalid for {}", self.sig);
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&blade) {
            Some(old) => {
                let sum = old + coeff;
                if !sum.is_zero() {
                    self.terms.insert(blade, sum);
                }
            }
            None => {
                self.terms.insert(blade, coeff);
            }
        }
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &S)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, blade: Blade) -> S {
        self.terms.get(&blade).cloned().unwrap_or_else(S::zero)
    }

    pub fn scalar_part(&self) -> S {
        self.coefficient(Blade::UNIT)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Whether the element is `λ e` for some (possibly zero) scalar.
    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|b| b.0 == 0)
    }

    pub fn grades(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.terms.keys().map(Blade::grade).collect();
        g.sort_unstable();
        g.dedup();
        g
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|b| b.grade() % 2 == 0)
    }

    pub fn is_vector(&self) -> bool {
        self.terms.keys().all(|b| b.grade() == 1)
    }

    /// Coordinates of the grade-1 part.
    pub fn vector_coords(&self) -> Vec<S> {
        (0..self.sig.n()).map(|a| self.coefficient(Blade::generator(a))).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.sig, other.sig, "signature mismatch in add");
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(*b, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| -c.clone())
    }

    /// `λ a`.
    pub fn scale(&self, lambda: &S) -> Self {
        self.map_coeffs(|c| lambda.clone() * c)
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.map_coeffs(|c| c.scale(r))
    }

    fn map_coeffs(&self, f: impl Fn(&S) -> S) -> Self {
        Self::from_terms(self.sig, self.terms.iter().map(|(b, c)| (*b, f(c))))
    }

    /// Geometric product; errors on mismatched signatures.
    pub fn geometric_product(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.sig != other.sig {
            return Err(AlgebraError::SignatureMismatch(self.sig, other.sig));
        }
        let mut acc: BTreeMap<Blade, S> = BTreeMap::new();
        for (b1, c1) in &self.terms {
            for (b2, c2) in &other.terms {
                let (sign, b) = blade_mul_unchecked(*b1, *b2, self.sig);
                let mut c = c1.clone() * c2;
                if sign < 0 {
                    c = -c;
                }
                match acc.get_mut(&b) {
                    Some(slot) => *slot = slot.clone() + c,
                    None => {
                        acc.insert(b, c);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Self { sig: self.sig, terms: acc })
    }

    /// Geometric product of elements known to share a signature.
    pub fn mul(&self, other: &Self) -> Self {
        self.geometric_product(other).expect("geometric product of mismatched signatures")
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.sig), |acc, _| acc.mul(self))
    }

    /// Commutator-free check `ab = ba`.
    pub fn commutes_with(&self, other: &Self) -> bool {
        self.mul(other) == other.mul(self)
    }

    pub fn grade_project(&self, k: usize) -> Result<Self, AlgebraError> {
        if k > self.sig.n() {
            return Err(AlgebraError::GradeOutOfRange { k, n: self.sig.n() });
        }
        Ok(self.filter(|b| b.grade() == k))
    }

    pub fn even_part(&self) -> Self {
        self.filter(|b| b.grade() % 2 == 0)
    }

    pub fn odd_part(&self) -> Self {
        self.filter(|b| b.grade() % 2 == 1)
    }

    fn filter(&self, keep: impl Fn(&Blade) -> bool) -> Self {
        Self {
            sig: self.sig,
            terms: self.terms.iter().filter(|(b, _)| keep(b)).map(|(b, c)| (*b, c.clone())).collect(),
        }
    }

    /// Reverses every blade: `v^{i1}...v^{ik} -> v^{ik}...v^{i1}`.
    pub fn reversion(&self) -> Self {
        self.map_blades(|b, c| if b.reversion_sign() < 0 { -c.clone() } else { c.clone() })
    }

    /// Negates odd grades.
    pub fn grade_involution(&self) -> Self {
        self.map_blades(|b, c| if b.grade() % 2 == 1 { -c.clone() } else { c.clone() })
    }

    fn map_blades(&self, f: impl Fn(&Blade, &S) -> S) -> Self {
        Self { sig: self.sig, terms: self.terms.iter().map(|(b, c)| (*b, f(b, c))).collect() }
    }

    /// Matrix of `x -> self * x` in the blade basis.
    pub fn left_mul_matrix(&self) -> Matrix<S> {
        let cols: Vec<Vec<S>> =
            self.sig.blades().map(|b| self.mul(&Multivector::blade(self.sig, b)).coordinates()).collect();
        Matrix::from_columns(self.sig.dim(), &cols)
    }

    /// Matrix of `x -> x * self` in the blade basis.
    pub fn right_mul_matrix(&self) -> Matrix<S> {
        let cols: Vec<Vec<S>> =
            self.sig.blades().map(|b| Multivector::blade(self.sig, b).mul(self).coordinates()).collect();
        Matrix::from_columns(self.sig.dim(), &cols)
    }

    /// Reinterprets the coefficients in a larger scalar ring.
    pub fn embed<T: Scalar>(&self) -> Multivector<T>
    where
        S: crate::scalar::EmbedInto<T>,
    {
        Multivector::from_terms(self.sig, self.terms.iter().map(|(b, c)| (*b, c.embed())))
    }
}

impl<S: Field> Multivector<S> {
    /// The two-sided inverse, found by solving `L_a x = e` in the regular
    /// representation. `None` when `a` is a zero divisor.
    pub fn invert(&self) -> Option<Self> {
        let l = self.left_mul_matrix();
        if l.rank() < self.sig.dim() {
            return None;
        }
        let mut rhs = vec![S::zero(); self.sig.dim()];
        rhs[0] = S::one();
        let x = l.solve(&rhs)?;
        let inv = Multivector::from_coordinates(self.sig, &x);
        debug_assert!(inv.mul(self) == Multivector::one(self.sig));
        Some(inv)
    }
}

impl Multivector<Rational> {
    /// `η(u, v)` for grade-1 elements.
    pub fn inner(&self, other: &Self) -> Rational {
        let sig = self.sig;
        (0..sig.n()).fold(Rational::from_integer(0.into()), |acc, a| {
            let b = Blade::generator(a);
            let prod = self.coefficient(b) * other.coefficient(b);
            if sig.metric(a) > 0 {
                acc + prod
            } else {
                acc - prod
            }
        })
    }

    /// `η(v, v)`.
    pub fn quadratic(&self) -> Rational {
        self.inner(self)
    }
}

impl Multivector<Gaussian> {
    /// `a*`: conjugate every coefficient and reverse every blade.
    pub fn star(&self) -> Self {
        self.map_blades(|b, c| {
            let c = c.conj();
            if b.reversion_sign() < 0 {
                -c
            } else {
                c
            }
        })
    }

    pub fn is_hermitian(&self) -> bool {
        self.star() == *self
    }
}

/// The canonical monomorphism `C(m, n-m) -> CC(n)`:
/// `v^k -> e^k` for `k <= m` and `v^k -> i e^k` for `k > m`.
pub fn complexify_embed(a: &Multivector<Rational>) -> Multivector<Gaussian> {
    let sig = a.signature();
    let target = Signature::euclidean(sig.n());
    let terms = a.terms().map(|(b, c)| {
        // one factor of i per negative generator in the blade
        let k = (b.0 >> sig.p).count_ones() % 4;
        let phase = match k {
            0 => Gaussian::real(c.clone()),
            1 => Gaussian::new(Rational::from_integer(0.into()), c.clone()),
            2 => Gaussian::real(-c.clone()),
            _ => Gaussian::new(Rational::from_integer(0.into()), -c.clone()),
        };
        (*b, phase)
    });
    Multivector::from_terms(target, terms)
}

/// Wire form of a multivector.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct MultivectorJson {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub signature: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub complex_dim: Option<usize>,
    pub ring: String,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct TermJson {
    pub blade: Vec<usize>,
    pub coeff: String,
}

#[derive(Debug, Error)]
pub enum JsonFormatError {
    #[error("invalid json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("exactly one of `signature` and `complex_dim` must be given")]
    AmbiguousAlgebra,
    #[error("ring `{found}` where `{expected}` was expected")]
    WrongRing { expected: String, found: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Scalar(#[from] crate::scalar::ParseScalarError),
    #[error("{0}")]
    Invalid(String),
}

/// Either kind of multivector, as read from JSON.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyMultivector {
    Real(Multivector<Rational>),
    Complex(Multivector<Gaussian>),
}

impl MultivectorJson {
    pub fn from_real(a: &Multivector<Rational>) -> Self {
        Self {
            signature: Some([a.sig.p, a.sig.q]),
            complex_dim: None,
            ring: "rational".into(),
            terms: a.terms().map(|(b, c)| TermJson { blade: b.indices(), coeff: c.to_string() }).collect(),
        }
    }

    pub fn from_complex(a: &Multivector<Gaussian>) -> Self {
        let (signature, complex_dim) =
            if a.sig.q == 0 { (None, Some(a.sig.n())) } else { (Some([a.sig.p, a.sig.q]), None) };
        Self {
            signature,
            complex_dim,
            ring: "gaussian".into(),
            terms: a.terms().map(|(b, c)| TermJson { blade: b.indices(), coeff: c.to_string() }).collect(),
        }
    }

    fn algebra(&self) -> Result<Signature, JsonFormatError> {
        match (self.signature, self.complex_dim) {
            (Some([p, q]), None) => {
                if p + q > MAX_GENERATORS {
                    return Err(AlgebraError::TooManyGenerators { max: MAX_GENERATORS }.into());
                }
                Ok(Signature::new(p, q))
            }
            (None, Some(n)) => {
                if n > MAX_GENERATORS {
                    return Err(AlgebraError::TooManyGenerators { max: MAX_GENERATORS }.into());
                }
                Ok(Signature::euclidean(n))
            }
            _ => Err(JsonFormatError::AmbiguousAlgebra),
        }
    }

    pub fn decode(&self) -> Result<AnyMultivector, JsonFormatError> {
        let sig = self.algebra()?;
        match self.ring.as_str() {
            "rational" if self.complex_dim.is_none() => {
                let mut terms = Vec::new();
                for t in &self.terms {
                    terms.push((Blade::from_indices(&t.blade, sig.n())?, crate::scalar::parse_rational(&t.coeff)?));
                }
                Ok(AnyMultivector::Real(Multivector::from_terms(sig, terms)))
            }
            "rational" | "gaussian" => {
                let mut terms = Vec::new();
                for t in &self.terms {
                    let c: Gaussian = t.coeff.parse()?;
                    terms.push((Blade::from_indices(&t.blade, sig.n())?, c));
                }
                Ok(AnyMultivector::Complex(Multivector::from_terms(sig, terms)))
            }
            other => Err(JsonFormatError::WrongRing { expected: "rational|gaussian".into(), found: other.into() }),
        }
    }

    pub fn decode_real(&self) -> Result<Multivector<Rational>, JsonFormatError> {
        match self.decode()? {
            AnyMultivector::Real(a) => Ok(a),
            AnyMultivector::Complex(_) => {
                Err(JsonFormatError::WrongRing { expected: "rational".into(), found: self.ring.clone() })
            }
        }
    }

    pub fn decode_complex(&self) -> Result<Multivector<Gaussian>, JsonFormatError> {
        match self.decode()? {
            AnyMultivector::Complex(a) => Ok(a),
            AnyMultivector::Real(a) => Ok(a.embed()),
        }
    }
}

impl AnyMultivector {
    pub fn from_json_str(s: &str) -> Result<Self, JsonFormatError> {
        let j: MultivectorJson = serde_json::from_str(s)?;
        j.decode()
    }

    pub fn to_json(&self) -> MultivectorJson {
        match self {
            AnyMultivector::Real(a) => MultivectorJson::from_real(a),
            AnyMultivector::Complex(a) => MultivectorJson::from_complex(a),
        }
    }

    /// `a*`; only defined for complex elements.
    pub fn star(&self) -> Result<Multivector<Gaussian>, JsonFormatError> {
        match self {
            AnyMultivector::Complex(a) => Ok(a.star()),
            AnyMultivector::Real(_) => Err(JsonFormatError::WrongRing {
                expected: "gaussian".into(),
                found: "rational".into(),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn sig(p: usize, q: usize) -> Signature {
        Signature::new(p, q)
    }

    fn b(idx: &[usize], n: usize) -> Blade {
        Blade::from_indices(idx, n).unwrap()
    }

    #[test]
    fn blade_mul_examples() {
        assert_eq!(blade_mul(b(&[1], 2), b(&[1], 2), sig(2, 0)).unwrap(), (1, Blade::UNIT));
        assert_eq!(blade_mul(b(&[2], 2), b(&[1], 2), sig(2, 0)).unwrap(), (-1, b(&[1, 2], 2)));
        assert_eq!(blade_mul(b(&[1], 1), b(&[1], 1), sig(0, 1)).unwrap(), (-1, Blade::UNIT));
    }

    #[test]
    fn blade_mul_rejects_out_of_range() {
        let err = blade_mul(Blade(0b100), Blade::UNIT, sig(2, 0)).unwrap_err();
        assert_eq!(err, AlgebraError::IndexOutOfRange { index: 3, n: 2 });
        assert!(Blade::from_indices(&[2, 1], 3).is_err());
        assert!(Blade::from_indices(&[0], 3).is_err());
    }

    #[test]
    fn zero_divisor_in_split_line() {
        let s = sig(1, 0);
        let e = Multivector::<Rational>::one(s);
        let v = Multivector::generator(s, 0);
        assert!(e.add(&v).mul(&e.sub(&v)).is_zero());
        assert!(e.add(&v).invert().is_none());
    }

    #[test]
    fn bivector_squares_to_minus_one() {
        let s = sig(2, 0);
        let v1 = Multivector::<Rational>::generator(s, 0);
        let v2 = Multivector::generator(s, 1);
        let bv = v1.mul(&v2);
        assert_eq!(bv.mul(&bv), Multivector::scalar(s, int(-1)));
    }

    #[test]
    fn grade_projection_examples() {
        let s = sig(2, 0);
        let a = Multivector::<Rational>::one(s)
            .add(&Multivector::generator(s, 0))
            .add(&Multivector::blade(s, b(&[1, 2], 2)));
        assert_eq!(a.grade_project(1).unwrap(), Multivector::generator(s, 0));
        assert!(a.grade_project(3).is_err());
    }

    #[test]
    fn reversion_of_bivector() {
        let s = sig(2, 0);
        let bv = Multivector::<Rational>::blade(s, b(&[1, 2], 2));
        assert_eq!(bv.reversion(), bv.neg());
    }

    #[test]
    fn star_examples() {
        let s = Signature::euclidean(2);
        let ie1 = Multivector::term(s, b(&[1], 2), Gaussian::i());
        assert_eq!(ie1.star(), ie1.neg());
        let e12 = Multivector::<Gaussian>::blade(s, b(&[1, 2], 2));
        let e2e1 = Multivector::<Gaussian>::generator(s, 1).mul(&Multivector::generator(s, 0));
        assert_eq!(e12.star(), e2e1);
    }

    #[test]
    fn complexify_examples() {
        let s = sig(1, 2);
        let v2 = Multivector::<Rational>::generator(s, 1);
        let img = complexify_embed(&v2);
        assert_eq!(img, Multivector::term(Signature::euclidean(3), Blade::generator(1), Gaussian::i()));
        let v23 = Multivector::<Rational>::blade(s, b(&[2, 3], 3));
        assert_eq!(
            complexify_embed(&v23),
            Multivector::term(Signature::euclidean(3), b(&[2, 3], 3), Gaussian::real(int(-1)))
        );
    }

    #[test]
    fn invert_vector() {
        let s = sig(2, 0);
        let v1 = Multivector::<Rational>::generator(s, 0);
        assert_eq!(v1.invert().unwrap(), v1);
        let w = Multivector::vector(s, &[int(3), rat(1, 2)]);
        let winv = w.invert().unwrap();
        assert_eq!(winv, w.scale_rational(&w.quadratic().recip()));
    }

    #[test]
    fn json_round_trip() {
        let s = sig(1, 2);
        let a = Multivector::from_terms(s, [(Blade::UNIT, rat(3, 5)), (b(&[1, 3], 3), int(-2))]);
        let j = serde_json::to_string(&MultivectorJson::from_real(&a)).unwrap();
        assert_eq!(AnyMultivector::from_json_str(&j).unwrap(), AnyMultivector::Real(a));
        let c = Multivector::from_terms(Signature::euclidean(2), [(b(&[2], 2), Gaussian::new(rat(1, 2), rat(1, 3)))]);
        let j = serde_json::to_string(&MultivectorJson::from_complex(&c)).unwrap();
        assert!(j.contains("\"complex_dim\":2"));
        assert!(j.contains("1/2+1/3i"));
        assert_eq!(AnyMultivector::from_json_str(&j).unwrap(), AnyMultivector::Complex(c));
    }

    #[test]
    fn json_rejects_bad_input() {
        let both = r#"{"signature":[1,1],"complex_dim":2,"ring":"rational","terms":[]}"#;
        assert!(matches!(AnyMultivector::from_json_str(both), Err(JsonFormatError::AmbiguousAlgebra)));
        let bad_blade = r#"{"signature":[1,1],"ring":"rational","terms":[{"blade":[3],"coeff":"1"}]}"#;
        assert!(AnyMultivector::from_json_str(bad_blade).is_err());
        let real = r#"{"signature":[1,1],"ring":"rational","terms":[]}"#;
        assert!(AnyMultivector::from_json_str(real).unwrap().star().is_err());
    }
}
