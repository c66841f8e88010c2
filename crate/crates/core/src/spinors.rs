//! Spinor spaces of `CC(n)`: minimal left ideals `CC(n) p` generated by
//! Hermitian idempotents.

use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{Blade, Multivector, MultivectorJson, Signature};
use crate::linalg::{first_invertible, intertwiner_space, Matrix, SpanBasis};
use crate::repr::{compile_complex_rep, Representation};
use crate::scalar::{Gaussian, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpinorError {
    #[error("s does not square to e")]
    NotSquareRoot,
    #[error("element is not Hermitian")]
    NotHermitian,
    #[error("s = e gives the trivial idempotent")]
    IsIdentity,
    #[error("p is not idempotent")]
    NotIdempotent,
    #[error("p is zero")]
    Zero,
    #[error("complex dimension {0} must be even and positive")]
    BadDimension(usize),
    #[error("ideal is not minimal")]
    NotMinimal,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("algebra mismatch: CC({0}) vs CC({1})")]
    DimensionMismatch(usize, usize),
    #[error("no {0} found; the search space was exhausted")]
    SearchFailed(&'static str),
    #[error("{0}")]
    Format(String),
}

type Mv = Multivector<Gaussian>;

/// `p = (e + s)/2` with `s² = e`, `s* = s`, `s ≠ e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianIdempotent {
    n: usize,
    p: Mv,
}

fn half() -> Gaussian {
    Gaussian::real(Rational::new(1.into(), 2.into()))
}

pub fn make_idempotent(s: &Mv) -> Result<HermitianIdempotent, SpinorError> {
    let sig = s.signature();
    let e = Mv::one(sig);
    if s.mul(s) != e {
        return Err(SpinorError::NotSquareRoot);
    }
    if !s.is_hermitian() {
        return Err(SpinorError::NotHermitian);
    }
    if *s == e {
        return Err(SpinorError::IsIdentity);
    }
    HermitianIdempotent::from_element(e.add(s).scale(&half()))
}

impl HermitianIdempotent {
    /// Checks `p² = p`, `p* = p` and `p ∉ {0, e}` directly.
    pub fn from_element(p: Mv) -> Result<Self, SpinorError> {
        let sig = p.signature();
        if sig.q != 0 {
            return Err(SpinorError::Format(format!("expected an element of CC(n), got signature {sig}")));
        }
        if p.is_zero() {
            return Err(SpinorError::Zero);
        }
        if p == Mv::one(sig) {
            return Err(SpinorError::IsIdentity);
        }
        if p.mul(&p) != p {
            return Err(SpinorError::NotIdempotent);
        }
        if !p.is_hermitian() {
            return Err(SpinorError::NotHermitian);
        }
        Ok(Self { n: sig.n(), p })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn element(&self) -> &Mv {
        &self.p
    }

    /// `s = 2p - e`.
    pub fn involution(&self) -> Mv {
        let sig = self.p.signature();
        self.p.scale(&Gaussian::real(Rational::from_integer(2.into()))).sub(&Mv::one(sig))
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(MultivectorJson::from_complex(&self.p)).expect("serializable")
    }

    pub fn from_json(v: &Value) -> Result<Self, SpinorError> {
        let j: MultivectorJson = serde_json::from_value(v.clone()).map_err(|e| SpinorError::Format(e.to_string()))?;
        Self::from_element(j.decode_complex().map_err(|e| SpinorError::Format(e.to_string()))?)
    }
}

/// Hermitian square roots of `e` tried by [`primitive_idempotent`]:
/// `±e^i`, then `±i e^j e^k`.
fn candidates(n: usize) -> Vec<Mv> {
    let sig = Signature::euclidean(n);
    let mut out = Vec::new();
    for a in 0..n {
        for sign in [1, -1] {
            out.push(Mv::term(sig, Blade::generator(a), Gaussian::real(Rational::from_integer(sign.into()))));
        }
    }
    for j in 0..n {
        for k in j + 1..n {
            for sign in [1, -1] {
                let c = Gaussian::new(Rational::from_integer(0.into()), Rational::from_integer(sign.into()));
                out.push(Mv::term(sig, Blade((1 << j) | (1 << k)), c));
            }
        }
    }
    out
}

/// A product of `n/2` commuting factors `(e + s_k)/2`, each halving the
/// ideal.
pub fn primitive_idempotent(n: usize) -> Result<HermitianIdempotent, SpinorError> {
    if n == 0 || n % 2 == 1 {
        return Err(SpinorError::BadDimension(n));
    }
    let sig = Signature::euclidean(n);
    let mut picks: Vec<Mv> = Vec::new();
    let mut p = Mv::one(sig);
    let mut dim = sig.dim();
    for s in candidates(n) {
        if picks.len() == n / 2 {
            break;
        }
        if !picks.iter().all(|t| t.commutes_with(&s)) {
            continue;
        }
        let factor = Mv::one(sig).add(&s).scale(&half());
        let next = p.mul(&factor);
        if next.is_zero() {
            continue;
        }
        let next_dim = ideal_span(&next).len();
        if next_dim < dim {
            picks.push(s);
            p = next;
            dim = next_dim;
        }
    }
    if picks.len() != n / 2 {
        return Err(SpinorError::SearchFailed("primitive idempotent"));
    }
    let idem = HermitianIdempotent::from_element(p)?;
    debug_assert!(is_minimal(&idem));
    Ok(idem)
}

fn ideal_span(p: &Mv) -> SpanBasis<Gaussian> {
    let sig = p.signature();
    let mut span = SpanBasis::new(sig.dim());
    for b in sig.blades() {
        span.insert(Mv::blade(sig, b).mul(p).coordinates());
    }
    span
}

/// The left ideal `CC(n) p` with a basis of elements `B p`, pivots taken in
/// blade order.
#[derive(Clone, Debug)]
pub struct SpinorSpace {
    idempotent: HermitianIdempotent,
    basis: Vec<Mv>,
    span: SpanBasis<Gaussian>,
}

pub fn left_ideal(p: &HermitianIdempotent) -> SpinorSpace {
    let sig = p.p.signature();
    let mut span = SpanBasis::new(sig.dim());
    let mut basis = Vec::new();
    for b in sig.blades() {
        let v = Mv::blade(sig, b).mul(&p.p);
        if span.insert(v.coordinates()) {
            basis.push(v);
        }
    }
    SpinorSpace { idempotent: p.clone(), basis, span }
}

pub fn is_minimal(p: &HermitianIdempotent) -> bool {
    left_ideal(p).dim() == 1 << (p.n / 2)
}

impl SpinorSpace {
    pub fn idempotent(&self) -> &HermitianIdempotent {
        &self.idempotent
    }

    pub fn basis(&self) -> &[Mv] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn n(&self) -> usize {
        self.idempotent.n
    }

    pub fn is_minimal(&self) -> bool {
        self.dim() == 1 << (self.n() / 2)
    }

    pub fn contains(&self, a: &Mv) -> bool {
        self.span.contains(&a.coordinates())
    }

    /// Coordinates of an ideal element in [`SpinorSpace::basis`].
    pub fn coordinates(&self, a: &Mv) -> Option<Vec<Gaussian>> {
        let cols: Vec<Vec<Gaussian>> = self.basis.iter().map(Mv::coordinates).collect();
        Matrix::from_columns(a.signature().dim(), &cols).solve(&a.coordinates())
    }

    /// Matrix of `ψ -> a ψ` on the ideal.
    pub fn action_matrix(&self, a: &Mv) -> Matrix<Gaussian> {
        let cols: Vec<Vec<Gaussian>> = self
            .basis
            .iter()
            .map(|psi| self.coordinates(&a.mul(psi)).expect("left ideal is closed under left multiplication"))
            .collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "idempotent": self.idempotent.to_json(),
            "dim": self.dim(),
            "basis": self.basis.iter().map(|b| serde_json::to_value(MultivectorJson::from_complex(b)).expect("serializable")).collect::<Vec<_>>(),
        })
    }
}

/// The ideal as a module: generator actions and an intertwiner `T` with
/// `T γ(e^i) = ρ(e^i) T` for the compiled column model `ρ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinorModel {
    pub action: Vec<Matrix<Gaussian>>,
    pub column_model: Vec<Matrix<Gaussian>>,
    pub intertwiner: Matrix<Gaussian>,
}

impl SpinorModel {
    pub fn check(&self) -> bool {
        self.intertwiner.is_invertible()
            && self
                .action
                .iter()
                .zip(&self.column_model)
                .all(|(a, r)| self.intertwiner.matmul(a) == r.matmul(&self.intertwiner))
    }
}

pub fn spinor_matrix_model(space: &SpinorSpace) -> Result<SpinorModel, SpinorError> {
    if !space.is_minimal() {
        return Err(SpinorError::NotMinimal);
    }
    let n = space.n();
    let sig = Signature::euclidean(n);
    let rep = compile_complex_rep(n).map_err(|e| SpinorError::Format(e.to_string()))?;
    let action: Vec<_> = (0..n).map(|a| space.action_matrix(&Mv::generator(sig, a))).collect();
    let column_model = rep.factor(0).to_vec();
    let intertwiner = first_invertible(&intertwiner_space(&action, &column_model), Matrix::is_invertible)
        .ok_or(SpinorError::SearchFailed("intertwiner to the column model"))?;
    let model = SpinorModel { action, column_model, intertwiner };
    debug_assert!(model.check());
    Ok(model)
}

/// The element of `CC(n)` whose compiled image is `m`.
pub fn preimage(rep: &Representation<Gaussian>, m: &Matrix<Gaussian>) -> Option<Mv> {
    let sig = rep.signature();
    let images = rep.blade_images();
    let cols: Vec<Vec<Gaussian>> = images[0].iter().map(|b| b.entries().to_vec()).collect();
    let system = Matrix::from_columns(m.rows() * m.cols(), &cols);
    system.solve(m.entries()).map(|x| Mv::from_coordinates(sig, &x))
}

fn is_invertible(g: &Mv) -> bool {
    g.left_mul_matrix().rank() == g.signature().dim()
}

/// An invertible `g` with `g p1 g^{-1} = p2`.
pub fn find_conjugator(p1: &HermitianIdempotent, p2: &HermitianIdempotent) -> Result<Mv, SpinorError> {
    if p1.n != p2.n {
        return Err(SpinorError::DimensionMismatch(p1.n, p2.n));
    }
    if !is_minimal(p1) || !is_minimal(p2) {
        return Err(SpinorError::NotMinimal);
    }
    let sig = p1.p.signature();
    if p1 == p2 {
        return Ok(Mv::one(sig));
    }
    // g p1 - p2 g = 0, linear in the coordinates of g
    let system = p1.p.right_mul_matrix().sub(&p2.p.left_mul_matrix());
    let solutions: Vec<Matrix<Gaussian>> =
        system.nullspace().into_iter().map(|v| Matrix::from_vec(1, v.len(), v)).collect();
    let pick = first_invertible(&solutions, |m| is_invertible(&Mv::from_coordinates(sig, m.entries())))
        .ok_or(SpinorError::SearchFailed("conjugator"))?;
    let g = Mv::from_coordinates(sig, pick.entries());
    debug_assert!(g.mul(&p1.p).mul(&g.invert().expect("invertible")) == p2.p);
    Ok(g)
}

/// Whether the adjoint of `g` maps the ideal into itself.
pub fn stabilizer_membership(g: &Mv, space: &SpinorSpace) -> Result<bool, SpinorError> {
    let inv = g.invert().ok_or(SpinorError::NotInvertible)?;
    Ok(space.basis.iter().all(|psi| space.contains(&g.mul(psi).mul(&inv))))
}

/// Whether the adjoint of `g` carries the first ideal onto the second.
pub fn transports(g: &Mv, from: &SpinorSpace, to: &SpinorSpace) -> Result<bool, SpinorError> {
    let inv = g.invert().ok_or(SpinorError::NotInvertible)?;
    Ok(from.dim() == to.dim() && from.basis.iter().all(|psi| to.contains(&g.mul(psi).mul(&inv))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn e(n: usize, idx: &[usize]) -> Mv {
        Mv::blade(Signature::euclidean(n), Blade::from_indices(idx, n).unwrap())
    }

    #[test]
    fn idempotent_preconditions() {
        assert!(make_idempotent(&e(2, &[1])).is_ok());
        let s = e(2, &[1, 2]).scale(&Gaussian::i());
        assert!(make_idempotent(&s).is_ok());
        assert_eq!(make_idempotent(&Mv::one(Signature::euclidean(2))), Err(SpinorError::IsIdentity));
        assert_eq!(make_idempotent(&e(2, &[1, 2])), Err(SpinorError::NotSquareRoot));
        let boost = e(2, &[1])
            .scale(&Gaussian::real(rat(5, 4)))
            .add(&e(2, &[2]).scale(&Gaussian::new(int(0), rat(3, 4))));
        assert_eq!(make_idempotent(&boost), Err(SpinorError::NotHermitian));
    }

    #[test]
    fn primitive_picks() {
        let p2 = primitive_idempotent(2).unwrap();
        assert_eq!(p2, make_idempotent(&e(2, &[1])).unwrap());
        let p4 = primitive_idempotent(4).unwrap();
        let s2 = e(4, &[2, 3]).scale(&Gaussian::i());
        let expect = make_idempotent(&e(4, &[1])).unwrap().p.mul(&make_idempotent(&s2).unwrap().p);
        assert_eq!(p4.p, expect);
        assert_eq!(left_ideal(&p4).dim(), 4);
        assert!(primitive_idempotent(3).is_err());
    }

    #[test]
    fn non_primitive_ideal() {
        let p = make_idempotent(&e(4, &[1])).unwrap();
        assert_eq!(left_ideal(&p).dim(), 8);
        assert!(!is_minimal(&p));
    }

    #[test]
    fn column_model_n2() {
        let space = left_ideal(&primitive_idempotent(2).unwrap());
        let model = spinor_matrix_model(&space).unwrap();
        assert!(model.check());
        let id = space.action_matrix(&Mv::one(Signature::euclidean(2)));
        assert!(id.is_identity());
    }

    #[test]
    fn conjugator_n2() {
        let p1 = make_idempotent(&e(2, &[1])).unwrap();
        let p2 = make_idempotent(&e(2, &[2])).unwrap();
        let g = find_conjugator(&p1, &p2).unwrap();
        assert!(transports(&g, &left_ideal(&p1), &left_ideal(&p2)).unwrap());
        assert_eq!(find_conjugator(&p1, &p1).unwrap(), Mv::one(Signature::euclidean(2)));
        assert!(!stabilizer_membership(&g, &left_ideal(&p1)).unwrap());
    }

    #[test]
    fn matrix_unit_preimage() {
        let rep = compile_complex_rep(2).unwrap();
        let mut e11 = Matrix::<Gaussian>::zeros(2, 2);
        e11[(0, 0)] = Gaussian::real(int(1));
        let p = preimage(&rep, &e11).unwrap();
        let idem = HermitianIdempotent::from_element(p).unwrap();
        assert!(is_minimal(&idem));
    }
}
