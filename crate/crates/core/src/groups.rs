//! Clifford, Pin and Spin group elements and the vector representation
//! `ζ(g): v -> g v g^{-1}` onto `O(p,q)`.
//!
//! The adjoint is untwisted, so a single anisotropic vector `w` acts on `V`
//! as minus the hyperplane reflection across `w^⊥`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::Value;
use thiserror::Error;

use crate::algebra::{blade_mul_unchecked, Blade, Multivector, Signature};
use crate::linalg::Matrix;
use crate::repr::{matrix_from_json, matrix_to_json};
use crate::scalar::{signum, Field, Gaussian, Rational, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("factor {index} is isotropic")]
    Isotropic { index: usize },
    #[error("factor {index} is not a vector")]
    NotVector { index: usize },
    #[error("signature mismatch: expected {expected}, found {found}")]
    SignatureMismatch { expected: Signature, found: Signature },
    #[error("matrix is not pseudo-orthogonal for {0}")]
    NotPseudoOrthogonal(Signature),
    #[error("adjoint action does not preserve the vector space")]
    AdjointLeavesV,
    #[error("operation needs an even number of generators, got {0}")]
    OddDimension(usize),
    #[error("element is not invertible")]
    NotInvertible,
    #[error("versor is not a normalized even element")]
    NotSpin,
    #[error("no block model for {0}; expected (1,3) or (4,0)")]
    WrongAmbient(Signature),
    #[error("{0}")]
    Format(String),
}

/// `q -> g q g^{-1}`.
pub fn adjoint_automorphism<S: Field>(g: &Multivector<S>, a: &Multivector<S>) -> Result<Multivector<S>, GroupError> {
    let inv = g.invert().ok_or(GroupError::NotInvertible)?;
    Ok(g.mul(a).mul(&inv))
}

/// A Hermitian basis element of `CC(n)` sent to a non-Hermitian element by
/// the adjoint of `g`, if there is one.
pub fn non_hermitian_witness(
    g: &Multivector<Gaussian>,
) -> Result<Option<(Multivector<Gaussian>, Multivector<Gaussian>)>, GroupError> {
    let sig = g.signature();
    for blade in sig.blades() {
        let unit = if blade.reversion_sign() > 0 { Gaussian::one() } else { Gaussian::i() };
        let h = Multivector::term(sig, blade, unit);
        let image = adjoint_automorphism(g, &h)?;
        if !image.is_hermitian() {
            return Ok(Some((h, image)));
        }
    }
    Ok(None)
}

/// `λ v_1 ... v_k` with anisotropic vectors `v_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Versor {
    sig: Signature,
    scale: Rational,
    factors: Vec<Multivector<Rational>>,
    product: Multivector<Rational>,
    inverse: Multivector<Rational>,
}

pub fn make_versor(sig: Signature, vectors: &[Multivector<Rational>]) -> Result<Versor, GroupError> {
    let mut product = Multivector::one(sig);
    let mut inverse = Multivector::one(sig);
    for (index, v) in vectors.iter().enumerate() {
        if v.signature() != sig {
            return Err(GroupError::SignatureMismatch { expected: sig, found: v.signature() });
        }
        if !v.is_vector() {
            return Err(GroupError::NotVector { index });
        }
        let norm = v.quadratic();
        if norm == Rational::zero() {
            return Err(GroupError::Isotropic { index });
        }
        product = product.mul(v);
        inverse = v.scale_rational(&norm.recip()).mul(&inverse);
    }
    Ok(Versor { sig, scale: Rational::one(), factors: vectors.to_vec(), product, inverse })
}

impl Versor {
    pub fn identity(sig: Signature) -> Self {
        make_versor(sig, &[]).expect("empty versor")
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn factors(&self) -> &[Multivector<Rational>] {
        &self.factors
    }

    pub fn scale(&self) -> &Rational {
        &self.scale
    }

    pub fn product(&self) -> &Multivector<Rational> {
        &self.product
    }

    pub fn inverse(&self) -> &Multivector<Rational> {
        &self.inverse
    }

    /// Number of factors mod 2.
    pub fn parity(&self) -> usize {
        self.factors.len() % 2
    }

    pub fn is_even(&self) -> bool {
        self.parity() == 0
    }

    /// Every factor has `η(v,v) = ±1` and the scale is `±1`.
    pub fn pin_normalized(&self) -> bool {
        let one = Rational::one();
        self.scale.abs() == one && self.factors.iter().all(|v| v.quadratic().abs() == one)
    }

    pub fn is_spin(&self) -> bool {
        self.pin_normalized() && self.is_even()
    }

    /// `λ g`.
    pub fn scaled(&self, lambda: &Rational) -> Versor {
        assert!(*lambda != Rational::zero(), "zero scale");
        Versor {
            sig: self.sig,
            scale: &self.scale * lambda,
            factors: self.factors.clone(),
            product: self.product.scale_rational(lambda),
            inverse: self.inverse.scale_rational(&lambda.recip()),
        }
    }

    pub fn neg(&self) -> Versor {
        self.scaled(&-Rational::one())
    }

    /// The element `λ v_1 ... v_k` itself.
    pub fn element(&self) -> Multivector<Rational> {
        self.product.clone()
    }

    /// `self * other`.
    pub fn compose(&self, other: &Versor) -> Versor {
        assert_eq!(self.sig, other.sig, "versors from different algebras");
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Versor {
            sig: self.sig,
            scale: &self.scale * &other.scale,
            factors,
            product: self.product.mul(&other.product),
            inverse: other.inverse.mul(&self.inverse),
        }
    }

    pub fn to_json(&self) -> Value {
        let factors: Vec<Value> = self
            .factors
            .iter()
            .map(|v| serde_json::to_value(crate::algebra::MultivectorJson::from_real(v)).expect("serializable"))
            .collect();
        Value::Array(factors)
    }

    /// A JSON list of grade-1 multivectors.
    pub fn from_json(sig: Signature, v: &Value) -> Result<Versor, GroupError> {
        let items = v.as_array().ok_or_else(|| GroupError::Format("versor must be a list of vectors".into()))?;
        let mut vectors = Vec::new();
        for item in items {
            let j: crate::algebra::MultivectorJson =
                serde_json::from_value(item.clone()).map_err(|e| GroupError::Format(e.to_string()))?;
            vectors.push(j.decode_real().map_err(|e| GroupError::Format(e.to_string()))?);
        }
        make_versor(sig, &vectors)
    }
}

impl fmt::Display for Versor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.scale != Rational::one() {
            write!(f, "({}) ", self.scale)?;
        }
        if self.factors.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.factors.iter().map(|v| format!("[{v}]")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// `M` with `Mᵀ η M = η`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoOrthogonalMatrix {
    sig: Signature,
    matrix: Matrix<Rational>,
}

impl PseudoOrthogonalMatrix {
    pub fn new(sig: Signature, matrix: Matrix<Rational>) -> Result<Self, GroupError> {
        let n = sig.n();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(GroupError::Format(format!("expected a {n}x{n} matrix, got {}x{}", matrix.rows(), matrix.cols())));
        }
        let eta = sig.metric_matrix();
        if matrix.transpose().matmul(&eta).matmul(&matrix) != eta {
            return Err(GroupError::NotPseudoOrthogonal(sig));
        }
        Ok(Self { sig, matrix })
    }

    pub fn identity(sig: Signature) -> Self {
        Self { sig, matrix: Matrix::identity(sig.n()) }
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn matrix(&self) -> &Matrix<Rational> {
        &self.matrix
    }

    pub fn determinant(&self) -> Rational {
        self.matrix.determinant()
    }

    pub fn is_special(&self) -> bool {
        self.determinant() == Rational::one()
    }

    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.sig, other.sig);
        Self { sig: self.sig, matrix: self.matrix.matmul(&other.matrix) }
    }

    pub fn neg(&self) -> Self {
        Self { sig: self.sig, matrix: self.matrix.neg() }
    }

    pub fn to_json(&self) -> Value {
        matrix_to_json(&self.matrix)
    }

    pub fn from_json(sig: Signature, v: &Value) -> Result<Self, GroupError> {
        let m = matrix_from_json::<Rational>(v).map_err(|e| GroupError::Format(e.to_string()))?;
        Self::new(sig, m)
    }
}

impl fmt::Display for PseudoOrthogonalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.matrix)
    }
}

/// The vector representation: column `a` holds the coordinates of
/// `g v^a g^{-1}`.
pub fn zeta(g: &Versor) -> Result<PseudoOrthogonalMatrix, GroupError> {
    let sig = g.sig;
    let mut cols = Vec::with_capacity(sig.n());
    let small = (small_form(&g.product), small_form(&g.inverse));
    for a in 0..sig.n() {
        let fast = match &small {
            (Some(x), Some(y)) => conjugate_small(sig, x, y, a),
            _ => None,
        };
        let col = match fast {
            Some(col) => Some(col),
            None => {
                let image = g.product.mul(&Multivector::generator(sig, a)).mul(&g.inverse);
                image.is_vector().then(|| image.vector_coords())
            }
        };
        cols.push(col.ok_or(GroupError::AdjointLeavesV)?);
    }
    PseudoOrthogonalMatrix::new(sig, Matrix::from_columns(sig.n(), &cols))
}

/// Common denominator and `i128` numerators, when everything fits.
struct SmallForm {
    denom: i128,
    terms: Vec<(Blade, i128)>,
}

fn small_form(x: &Multivector<Rational>) -> Option<SmallForm> {
    let denom = x.terms().fold(BigInt::from(1), |acc, (_, c)| num_integer::Integer::lcm(&acc, c.denom()));
    let terms = x
        .terms()
        .map(|(b, c)| i128::try_from(c.numer() * (&denom / c.denom())).ok().map(|v| (*b, v)))
        .collect::<Option<Vec<_>>>()?;
    Some(SmallForm { denom: i128::try_from(denom).ok()?, terms })
}

/// `x e^a y` in machine integers; `None` on overflow or a non-vector image.
fn conjugate_small(sig: Signature, x: &SmallForm, y: &SmallForm, a: usize) -> Option<Vec<Rational>> {
    if sig.n() > 12 {
        return None;
    }
    let mut acc = vec![0i128; 1 << sig.n()];
    let ea = Blade::generator(a);
    for (b1, c1) in &x.terms {
        let (s1, left) = blade_mul_unchecked(*b1, ea, sig);
        for (b2, c2) in &y.terms {
            let (s2, b) = blade_mul_unchecked(left, *b2, sig);
            let c = c1.checked_mul(*c2)?;
            let slot = &mut acc[b.0 as usize];
            *slot = if s1 * s2 > 0 { slot.checked_add(c)? } else { slot.checked_sub(c)? };
        }
    }
    let denom = BigInt::from(x.denom) * BigInt::from(y.denom);
    let mut col = vec![Rational::from_integer(0.into()); sig.n()];
    for (mask, c) in acc.into_iter().enumerate() {
        if c == 0 {
            continue;
        }
        let b = Blade(mask as u32);
        if b.grade() != 1 {
            return None;
        }
        col[mask.trailing_zeros() as usize] = Rational::new(c.into(), denom.clone());
    }
    Some(col)
}

/// `v -> v - 2 η(w,v)/η(w,w) w`.
pub fn reflection_matrix(w: &Multivector<Rational>) -> Result<PseudoOrthogonalMatrix, GroupError> {
    let sig = w.signature();
    if !w.is_vector() {
        return Err(GroupError::NotVector { index: 0 });
    }
    let norm = w.quadratic();
    if norm == Rational::zero() {
        return Err(GroupError::Isotropic { index: 0 });
    }
    let coords = w.vector_coords();
    let two = Rational::from_integer(2.into());
    let cols: Vec<Vec<Rational>> = (0..sig.n())
        .map(|a| {
            let eta_wa = &coords[a] * Rational::from_integer(sig.metric(a).into());
            let k = &two * &eta_wa / &norm;
            (0..sig.n())
                .map(|r| {
                    let delta = if r == a { Rational::one() } else { Rational::zero() };
                    delta - &k * &coords[r]
                })
                .collect()
        })
        .collect();
    PseudoOrthogonalMatrix::new(sig, Matrix::from_columns(sig.n(), &cols))
}

/// `ω = v^1 ... v^n`; its adjoint is `-I`.
pub fn total_reflection_versor(sig: Signature) -> Result<Versor, GroupError> {
    if sig.n() % 2 == 1 {
        return Err(GroupError::OddDimension(sig.n()));
    }
    let gens: Vec<_> = (0..sig.n()).map(|a| Multivector::generator(sig, a)).collect();
    make_versor(sig, &gens)
}

/// Reflection vectors `w_1, ..., w_r` with `M = ρ_{w_1} ∘ ... ∘ ρ_{w_r}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub vectors: Vec<Multivector<Rational>>,
    /// Columns that needed the two-step `x + e_a`, `e_a` route.
    pub fallbacks: usize,
}

impl Decomposition {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// The composition of the reflections.
    pub fn recompose(&self, sig: Signature) -> Result<PseudoOrthogonalMatrix, GroupError> {
        self.vectors
            .iter()
            .try_fold(PseudoOrthogonalMatrix::identity(sig), |acc, w| Ok(acc.compose(&reflection_matrix(w)?)))
    }
}

/// Divides `w` by `sqrt|η(w,w)|` when that root is rational.
fn normalize_if_possible(w: Multivector<Rational>) -> Multivector<Rational> {
    let norm = w.quadratic().abs();
    match rational_sqrt(&norm) {
        Some(root) if root != Rational::zero() => w.scale_rational(&root.recip()),
        _ => w,
    }
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    let isqrt = |x: &BigInt| -> Option<BigInt> {
        let s = x.sqrt();
        (&s * &s == *x).then_some(s)
    };
    if signum(r) < 0 {
        return None;
    }
    Some(Rational::new(isqrt(r.numer())?, isqrt(r.denom())?))
}

/// Constructive Cartan–Dieudonné: column by column, reflect `x = N e_a`
/// onto `e_a` through `x - e_a`, or through `x + e_a` then `e_a` when
/// `x - e_a` is isotropic.
pub fn cartan_dieudonne(m: &PseudoOrthogonalMatrix) -> Result<Decomposition, GroupError> {
    let sig = m.sig;
    let m = PseudoOrthogonalMatrix::new(sig, m.matrix.clone())?;
    let mut current = m.matrix.clone();
    let mut vectors = Vec::new();
    let mut fallbacks = 0;
    for a in 0..sig.n() {
        let x = Multivector::vector(sig, &current.column(a));
        let ea = Multivector::generator(sig, a);
        if x == ea {
            continue;
        }
        let diff = x.sub(&ea);
        let step: Vec<Multivector<Rational>> = if diff.quadratic() != Rational::zero() {
            vec![diff]
        } else {
            fallbacks += 1;
            vec![x.add(&ea), ea]
        };
        for w in step {
            let w = normalize_if_possible(w);
            current = reflection_matrix(&w)?.matrix.matmul(&current);
            vectors.push(w);
        }
    }
    debug_assert!(current.is_identity());
    Ok(Decomposition { vectors, fallbacks })
}

/// A versor `g` with `ζ(g) = M`; `-g` is the other lift.
pub fn lift_to_pin(m: &PseudoOrthogonalMatrix) -> Result<Versor, GroupError> {
    let sig = m.sig;
    if sig.n() % 2 == 1 {
        return Err(GroupError::OddDimension(sig.n()));
    }
    let d = cartan_dieudonne(m)?;
    let g = make_versor(sig, &d.vectors)?;
    // ζ(w) = -ρ_w, so an odd count leaves an extra -I to undo.
    let g = if d.len() % 2 == 1 { g.compose(&total_reflection_versor(sig)?) } else { g };
    Ok(g)
}

/// Whether `g` is `λ e`.
pub fn is_scalar_versor(g: &Versor) -> bool {
    g.product.is_scalar()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpinComponent {
    Plus,
    Minus,
}

/// The block form of a Spin element in the chiral model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockVerdict {
    pub sig: Signature,
    pub image: Matrix<Gaussian>,
    pub upper: Matrix<Gaussian>,
    pub lower: Matrix<Gaussian>,
    pub det_upper: Gaussian,
    pub det_lower: Gaussian,
    pub component: SpinComponent,
}

/// Chiral generators: `γ̃0 = [[0,1],[1,0]]`, `γ̃j = [[0,-σj],[σj,0]]` for
/// `C(1,3)`, and `(γ̃0, -i γ̃j)` for `C(4,0)`.
pub fn chiral_generators(sig: Signature) -> Result<Vec<Matrix<Gaussian>>, GroupError> {
    let g = |re: i64, im: i64| Gaussian::new(Rational::from_integer(re.into()), Rational::from_integer(im.into()));
    let m2 = |e: [[(i64, i64); 2]; 2]| Matrix::from_rows(e.iter().map(|r| r.iter().map(|&(a, b)| g(a, b)).collect()).collect());
    let sigma = [
        m2([[(0, 0), (1, 0)], [(1, 0), (0, 0)]]),
        m2([[(0, 0), (0, -1)], [(0, 1), (0, 0)]]),
        m2([[(1, 0), (0, 0)], [(0, 0), (-1, 0)]]),
    ];
    let id = Matrix::<Gaussian>::identity(2);
    let zero = Matrix::<Gaussian>::zeros(2, 2);
    let g0 = Matrix::from_blocks(&zero, &id, &id, &zero);
    let gj: Vec<_> = sigma.iter().map(|s| Matrix::from_blocks(&zero, &s.neg(), s, &zero)).collect();
    match (sig.p, sig.q) {
        (1, 3) => Ok(std::iter::once(g0).chain(gj).collect()),
        (4, 0) => {
            let minus_i = g(0, -1);
            Ok(std::iter::once(g0).chain(gj.iter().map(|m| m.scale_left(&minus_i))).collect())
        }
        _ => Err(GroupError::WrongAmbient(sig)),
    }
}

fn chiral_image(g: &Multivector<Rational>) -> Result<Matrix<Gaussian>, GroupError> {
    let gens = chiral_generators(g.signature())?;
    let mut acc = Matrix::zeros(4, 4);
    for (blade, c) in g.terms() {
        let img = blade
            .indices()
            .iter()
            .fold(Matrix::<Gaussian>::identity(4), |m, &i| m.matmul(&gens[i - 1]));
        acc = acc.add(&img.scale_left(&Gaussian::real(c.clone())));
    }
    Ok(acc)
}

/// Checks that a Spin element of `C(1,3)` is `diag(A, Tr(A†) I - A†)` with
/// `det A = ±1`, or that one of `C(4,0)` is `diag(A, B)` with unitary
/// unimodular blocks.
pub fn spin13_block_check(g: &Versor) -> Result<BlockVerdict, GroupError> {
    let sig = g.sig;
    if sig != Signature::new(1, 3) && sig != Signature::new(4, 0) {
        return Err(GroupError::WrongAmbient(sig));
    }
    if !g.is_spin() {
        return Err(GroupError::NotSpin);
    }
    let image = chiral_image(&g.product)?;
    let upper = image.block(0, 0, 2);
    let lower = image.block(1, 1, 2);
    let off_zero = image.block(0, 1, 2).is_zero() && image.block(1, 0, 2).is_zero();
    let det_upper = upper.determinant();
    let det_lower = lower.determinant();
    let one = Gaussian::one();
    let shape_ok = if sig.p == 1 {
        let adj = upper.adjoint();
        let expected = Matrix::scalar(2, adj.trace()).sub(&adj);
        lower == expected && (det_upper == one || det_upper == -one.clone()) && det_lower == det_upper
    } else {
        let id = Matrix::identity(2);
        det_upper == one
            && det_lower == one
            && upper.matmul(&upper.adjoint()) == id
            && lower.matmul(&lower.adjoint()) == id
    };
    if !off_zero || !shape_ok {
        return Err(GroupError::Format(format!("image is not of the expected block form:\n{image}")));
    }
    let component = if det_upper == one { SpinComponent::Plus } else { SpinComponent::Minus };
    Ok(BlockVerdict { sig, image, upper, lower, det_upper, det_lower, component })
}

/// `ω²` as `±1`.
pub fn total_reflection_square(sig: Signature) -> i32 {
    let all = Blade((1u32 << sig.n()) - 1);
    let (sign, _) = crate::algebra::blade_mul(all, all, sig).expect("valid blade");
    sign
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn vec_of(sig: Signature, c: &[i64]) -> Multivector<Rational> {
        Multivector::vector(sig, &c.iter().map(|&x| int(x)).collect::<Vec<_>>())
    }

    fn diag(d: &[i64]) -> Matrix<Rational> {
        let mut m = Matrix::zeros(d.len(), d.len());
        for (i, &x) in d.iter().enumerate() {
            m[(i, i)] = int(x);
        }
        m
    }

    #[test]
    fn versor_flags() {
        let s = Signature::new(2, 0);
        let g = make_versor(s, &[vec_of(s, &[1, 0])]).unwrap();
        assert!(g.pin_normalized() && !g.is_spin());
        let h = make_versor(s, &[vec_of(s, &[1, 0]), vec_of(s, &[0, 1])]).unwrap();
        assert!(h.is_spin());
        let split = Signature::new(1, 1);
        assert_eq!(make_versor(split, &[vec_of(split, &[1, 1])]), Err(GroupError::Isotropic { index: 0 }));
    }

    #[test]
    fn zeta_examples() {
        let s = Signature::new(2, 0);
        let v1 = make_versor(s, &[vec_of(s, &[1, 0])]).unwrap();
        assert_eq!(zeta(&v1).unwrap().matrix(), &diag(&[1, -1]));
        assert_eq!(zeta(&v1.neg()).unwrap(), zeta(&v1).unwrap());
        let v12 = total_reflection_versor(s).unwrap();
        assert_eq!(zeta(&v12).unwrap().matrix(), &diag(&[-1, -1]));
        let split = Signature::new(1, 1);
        assert_eq!(zeta(&total_reflection_versor(split).unwrap()).unwrap().matrix(), &diag(&[-1, -1]));
        assert!(total_reflection_versor(Signature::new(3, 0)).is_err());
    }

    #[test]
    fn decomposition_examples() {
        let s = Signature::new(2, 0);
        assert!(cartan_dieudonne(&PseudoOrthogonalMatrix::identity(s)).unwrap().is_empty());
        let refl = PseudoOrthogonalMatrix::new(s, diag(&[1, -1])).unwrap();
        let d = cartan_dieudonne(&refl).unwrap();
        assert_eq!(d.vectors, vec![vec_of(s, &[0, -1])]);
        let rot = Matrix::from_rows(vec![vec![rat(3, 5), rat(-4, 5)], vec![rat(4, 5), rat(3, 5)]]);
        let rot = PseudoOrthogonalMatrix::new(s, rot).unwrap();
        let d = cartan_dieudonne(&rot).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d.recompose(s).unwrap(), rot);
    }

    #[test]
    fn lift_examples() {
        let s = Signature::new(2, 0);
        let id = lift_to_pin(&PseudoOrthogonalMatrix::identity(s)).unwrap();
        assert!(is_scalar_versor(&id));
        let refl = PseudoOrthogonalMatrix::new(s, diag(&[1, -1])).unwrap();
        let g = lift_to_pin(&refl).unwrap();
        let e1 = Multivector::generator(s, 0);
        assert!(g.element() == e1 || g.element() == e1.neg());
        let minus = PseudoOrthogonalMatrix::new(s, diag(&[-1, -1])).unwrap();
        let g = lift_to_pin(&minus).unwrap();
        let e12 = Multivector::blade(s, Blade(0b11));
        assert!(g.element() == e12 || g.element() == e12.neg());
    }

    #[test]
    fn omega_squares() {
        assert_eq!(total_reflection_square(Signature::new(2, 0)), -1);
        assert_eq!(total_reflection_square(Signature::new(1, 1)), 1);
        assert_eq!(total_reflection_square(Signature::new(1, 3)), -1);
        assert_eq!(total_reflection_square(Signature::new(4, 0)), 1);
    }

    #[test]
    fn boost_moves_hermitian_elements() {
        let s = Signature::euclidean(2);
        let a = Multivector::from_terms(
            s,
            [(Blade::UNIT, Gaussian::real(rat(5, 4))), (Blade(0b11), Gaussian::new(int(0), rat(3, 4)))],
        );
        let (h, image) = non_hermitian_witness(&a).unwrap().expect("witness");
        assert!(h.is_hermitian() && !image.is_hermitian());
        let rotation = Multivector::from_terms(
            s,
            [(Blade::UNIT, Gaussian::real(rat(3, 5))), (Blade(0b11), Gaussian::real(rat(4, 5)))],
        );
        assert!(non_hermitian_witness(&rotation).unwrap().is_none());
    }

    #[test]
    fn spin13_blocks() {
        let s = Signature::new(1, 3);
        let g = make_versor(s, &[vec_of(s, &[1, 0, 0, 0]), vec_of(s, &[0, 1, 0, 0])]).unwrap();
        let v = spin13_block_check(&g).unwrap();
        assert_eq!(v.component, SpinComponent::Minus);
        let e = spin13_block_check(&Versor::identity(s)).unwrap();
        assert_eq!(e.component, SpinComponent::Plus);
        let s4 = Signature::new(4, 0);
        let g = make_versor(s4, &[vec_of(s4, &[1, 0, 0, 0]), vec_of(s4, &[0, 0, 1, 0])]).unwrap();
        assert!(spin13_block_check(&g).is_ok());
        assert!(matches!(spin13_block_check(&Versor::identity(Signature::new(2, 2))), Err(GroupError::WrongAmbient(_))));
    }
}
