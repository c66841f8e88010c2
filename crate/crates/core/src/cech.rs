//! Finite Čech model: simplicial complexes up to dimension 3, `Z2`
//! cohomology, O(p,q)-valued edge cocycles and the Pin lift obstruction.
//!
//! Simplices are strictly increasing vertex tuples. Over `Z2` no
//! orientation signs are needed.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{Multivector, Signature};
use crate::groups::{lift_to_pin, GroupError, PseudoOrthogonalMatrix, Versor};
use crate::linalg::Matrix;
use crate::repr::matrix_from_json;
use crate::scalar::{signum, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CechError {
    #[error("simplex {0:?} is not strictly increasing or uses a vertex out of range")]
    BadSimplex(Vec<usize>),
    #[error("face {face:?} of {simplex:?} is missing")]
    MissingFace { simplex: Vec<usize>, face: Vec<usize> },
    #[error("simplices above dimension 3 are not supported")]
    TooHighDimension,
    #[error("edge {0:?} has no matrix")]
    MissingEdge((usize, usize)),
    #[error("edge {0:?} is not in the complex")]
    UnknownEdge((usize, usize)),
    #[error("cocycle condition fails on triangle {0:?}")]
    NotCocycle([usize; 3]),
    #[error("h_{0} is not invertible")]
    NotInvertible(usize),
    #[error("discrepancy is not closed; lifts are inconsistent")]
    DiscrepancyNotClosed,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("{0}")]
    Format(String),
}

/// A simplicial complex closed under faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    vertices: usize,
    /// `simplices[k]` lists the `k`-simplices in lexicographic order.
    simplices: [Vec<Vec<usize>>; 4],
}

fn faces(s: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    (0..s.len()).map(move |skip| s.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect())
}

impl Complex {
    /// Validates that every face of every listed simplex is listed.
    pub fn new(vertices: usize, higher: &[Vec<usize>]) -> Result<Self, CechError> {
        let mut sets: [BTreeSet<Vec<usize>>; 4] = Default::default();
        sets[0] = (0..vertices).map(|v| vec![v]).collect();
        for s in higher {
            Self::check_simplex(vertices, s)?;
            if s.len() > 4 {
                return Err(CechError::TooHighDimension);
            }
            sets[s.len() - 1].insert(s.clone());
        }
        for k in (1..4).rev() {
            for s in &sets[k] {
                for face in faces(s) {
                    if !sets[k - 1].contains(&face) {
                        return Err(CechError::MissingFace { simplex: s.clone(), face });
                    }
                }
            }
        }
        Ok(Self { vertices, simplices: sets.map(|s| s.into_iter().collect()) })
    }

    /// The smallest complex containing the given simplices.
    pub fn from_facets(vertices: usize, facets: &[Vec<usize>]) -> Result<Self, CechError> {
        let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut stack: Vec<Vec<usize>> = facets.to_vec();
        while let Some(s) = stack.pop() {
            Self::check_simplex(vertices, &s)?;
            if s.len() > 4 {
                return Err(CechError::TooHighDimension);
            }
            if s.len() >= 2 && all.insert(s.clone()) {
                stack.extend(faces(&s));
            }
        }
        Self::new(vertices, &all.into_iter().collect::<Vec<_>>())
    }

    fn check_simplex(vertices: usize, s: &[usize]) -> Result<(), CechError> {
        if s.is_empty() || s.windows(2).any(|w| w[0] >= w[1]) || s.iter().any(|&v| v >= vertices) {
            return Err(CechError::BadSimplex(s.to_vec()));
        }
        Ok(())
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn simplices(&self, k: usize) -> &[Vec<usize>] {
        &self.simplices[k]
    }

    pub fn count(&self, k: usize) -> usize {
        self.simplices.get(k).map_or(0, Vec::len)
    }

    pub fn euler_characteristic(&self) -> i64 {
        (0..4).map(|k| if k % 2 == 0 { self.count(k) as i64 } else { -(self.count(k) as i64) }).sum()
    }

    pub fn index_of(&self, s: &[usize]) -> Option<usize> {
        self.simplices.get(s.len().checked_sub(1)?)?.binary_search_by(|t| t.as_slice().cmp(s)).ok()
    }

    /// `δ_k: C^k -> C^{k+1}` over `Z2`; row per `(k+1)`-simplex.
    pub fn coboundary(&self, k: usize) -> F2Matrix {
        let cols = self.count(k);
        let rows: Vec<Vec<bool>> = if k + 1 < 4 {
            self.simplices[k + 1]
                .iter()
                .map(|s| {
                    let mut row = vec![false; cols];
                    for f in faces(s) {
                        let i = self.index_of(&f).expect("closed under faces");
                        row[i] ^= true;
                    }
                    row
                })
                .collect()
        } else {
            Vec::new()
        };
        F2Matrix { cols, rows }
    }

    pub fn to_json(&self) -> Value {
        let mut simplices = serde_json::Map::new();
        for k in 1..4 {
            if !self.simplices[k].is_empty() {
                simplices.insert(k.to_string(), json!(self.simplices[k]));
            }
        }
        json!({ "vertices": self.vertices, "simplices": simplices })
    }

    /// Listed simplices are closed under faces, so facets alone suffice.
    pub fn from_json(v: &Value) -> Result<Self, CechError> {
        let bad = |s: &str| CechError::Format(s.into());
        let vertices = v.get("vertices").and_then(Value::as_u64).ok_or_else(|| bad("missing vertex count"))? as usize;
        let mut all = Vec::new();
        if let Some(map) = v.get("simplices") {
            let map = map.as_object().ok_or_else(|| bad("simplices must be an object"))?;
            for (k, list) in map {
                let k: usize = k.parse().map_err(|_| bad("simplex dimension keys must be integers"))?;
                if !(1..=3).contains(&k) {
                    return Err(CechError::TooHighDimension);
                }
                let list: Vec<Vec<usize>> =
                    serde_json::from_value(list.clone()).map_err(|e| CechError::Format(e.to_string()))?;
                if list.iter().any(|s| s.len() != k + 1) {
                    return Err(bad("simplex size does not match its dimension key"));
                }
                all.extend(list);
            }
        }
        Complex::from_facets(vertices, &all)
    }
}

/// A dense matrix over the two-element field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Matrix {
    cols: usize,
    rows: Vec<Vec<bool>>,
}

impl F2Matrix {
    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r][c]
    }

    pub fn mul_vec(&self, v: &[bool]) -> Vec<bool> {
        self.rows.iter().map(|r| r.iter().zip(v).fold(false, |acc, (&a, &b)| acc ^ (a & b))).collect()
    }

    pub fn matmul(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!(self.cols, other.rows());
        let rows = self
            .rows
            .iter()
            .map(|r| (0..other.cols).map(|c| r.iter().enumerate().fold(false, |acc, (k, &a)| acc ^ (a & other.rows[k][c]))).collect())
            .collect();
        F2Matrix { cols: other.cols, rows }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(|&x| !x))
    }

    /// Row echelon form; returns the reduced rows and their pivot columns.
    fn echelon(&self) -> (Vec<Vec<bool>>, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..rows.len()).find(|&i| rows[i][c]) else { continue };
            rows.swap(r, p);
            for i in 0..rows.len() {
                if i != r && rows[i][c] {
                    let pivot_row = rows[r].clone();
                    xor_into(&mut rows[i], &pivot_row);
                }
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        (rows, pivots)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    /// Some `x` with `A x = b`.
    pub fn solve(&self, b: &[bool]) -> Option<Vec<bool>> {
        assert_eq!(b.len(), self.rows());
        let augmented = F2Matrix {
            cols: self.cols + 1,
            rows: self.rows.iter().zip(b).map(|(r, &bi)| r.iter().copied().chain([bi]).collect()).collect(),
        };
        let (rows, pivots) = augmented.echelon();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![false; self.cols];
        for (row, &c) in rows.iter().zip(&pivots) {
            x[c] = row[self.cols];
        }
        Some(x)
    }

    /// A basis of the kernel.
    pub fn kernel(&self) -> Vec<Vec<bool>> {
        let (rows, pivots) = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![false; self.cols];
                v[f] = true;
                for (row, &c) in rows.iter().zip(&pivots) {
                    v[c] = row[f];
                }
                v
            })
            .collect()
    }
}

/// `dim H^k(X; Z2) = dim ker δ_k - rank δ_{k-1}`.
pub fn z2_betti(c: &Complex, k: usize) -> usize {
    let kernel = c.count(k) - c.coboundary(k).rank();
    let image = if k == 0 { 0 } else { c.coboundary(k - 1).rank() };
    kernel - image
}

/// A `k`-cochain with values in `Z2`, indexed like `Complex::simplices(k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Z2Cochain {
    pub degree: usize,
    pub values: Vec<bool>,
}

impl Z2Cochain {
    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&x| !x)
    }

    pub fn coboundary(&self, c: &Complex) -> Z2Cochain {
        Z2Cochain { degree: self.degree + 1, values: c.coboundary(self.degree).mul_vec(&self.values) }
    }

    /// The simplices where the cochain is 1.
    pub fn support<'a>(&self, c: &'a Complex) -> Vec<&'a [usize]> {
        c.simplices(self.degree)
            .iter()
            .zip(&self.values)
            .filter(|(_, &x)| x)
            .map(|(s, _)| s.as_slice())
            .collect()
    }
}

/// Cocycles in degree `k` that are not coboundaries, one per basis class
/// of `H^k`.
pub fn cohomology_representatives(c: &Complex, k: usize) -> Vec<Z2Cochain> {
    let mut span = F2Span::new(c.count(k));
    if k > 0 {
        let d = c.coboundary(k - 1);
        for col in 0..d.cols() {
            span.insert(&(0..d.rows()).map(|r| d.get(r, col)).collect::<Vec<_>>());
        }
    }
    c.coboundary(k)
        .kernel()
        .into_iter()
        .filter(|z| span.insert(z))
        .map(|values| Z2Cochain { degree: k, values })
        .collect()
}

/// A growable reduced basis of a subspace of `Z2^dim`.
struct F2Span {
    dim: usize,
    rows: Vec<(usize, Vec<bool>)>,
}

impl F2Span {
    fn new(dim: usize) -> Self {
        Self { dim, rows: Vec::new() }
    }

    /// Adds `v`; false when it was already in the span.
    fn insert(&mut self, v: &[bool]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if v[*p] {
                xor_into(&mut v, row);
            }
        }
        let Some(p) = v.iter().position(|&x| x) else { return false };
        for (_, row) in self.rows.iter_mut() {
            if row[p] {
                xor_into(row, &v);
            }
        }
        self.rows.push((p, v));
        true
    }
}

fn xor_into(target: &mut [bool], other: &[bool]) {
    for (x, y) in target.iter_mut().zip(other) {
        *x ^= *y;
    }
}

/// Edge matrices `g_ij` for `i < j`; `g_ji = g_ij^{-1}` and `g_ii = I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupCocycle {
    pub complex: Complex,
    pub sig: Signature,
    pub edges: BTreeMap<(usize, usize), PseudoOrthogonalMatrix>,
}

/// Outcome of a check, with the first offending simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict<W> {
    pub ok: bool,
    pub witness: Option<W>,
}

impl<W> Verdict<W> {
    fn pass() -> Self {
        Self { ok: true, witness: None }
    }

    fn fail(w: W) -> Self {
        Self { ok: false, witness: Some(w) }
    }
}

impl GroupCocycle {
    pub fn new(
        complex: Complex,
        sig: Signature,
        edges: BTreeMap<(usize, usize), PseudoOrthogonalMatrix>,
    ) -> Result<Self, CechError> {
        for &(i, j) in edges.keys() {
            if complex.index_of(&[i, j]).is_none() {
                return Err(CechError::UnknownEdge((i, j)));
            }
        }
        for e in complex.simplices(1) {
            let key = (e[0], e[1]);
            match edges.get(&key) {
                None => return Err(CechError::MissingEdge(key)),
                Some(m) if m.signature() != sig => {
                    return Err(CechError::Format(format!("edge {key:?} has signature {}", m.signature())))
                }
                Some(_) => {}
            }
        }
        Ok(Self { complex, sig, edges })
    }

    /// All edges mapped to the identity.
    pub fn trivial(complex: Complex, sig: Signature) -> Self {
        let edges = complex
            .simplices(1)
            .iter()
            .map(|e| ((e[0], e[1]), PseudoOrthogonalMatrix::identity(sig)))
            .collect();
        Self { complex, sig, edges }
    }

    /// `g_ij = M_i M_j^{-1}`.
    pub fn coboundary_of(complex: Complex, vertex_values: &[PseudoOrthogonalMatrix]) -> Result<Self, CechError> {
        assert_eq!(vertex_values.len(), complex.vertices());
        let sig = vertex_values.first().map(|m| m.signature()).ok_or_else(|| CechError::Format("no vertices".into()))?;
        let edges = complex
            .simplices(1)
            .iter()
            .map(|e| {
                let inv = pseudo_inverse(&vertex_values[e[1]]);
                ((e[0], e[1]), vertex_values[e[0]].compose(&inv))
            })
            .collect();
        Self::new(complex, sig, edges)
    }

    pub fn edge(&self, i: usize, j: usize) -> PseudoOrthogonalMatrix {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => PseudoOrthogonalMatrix::identity(self.sig),
            Less => self.edges[&(i, j)].clone(),
            Greater => pseudo_inverse(&self.edges[&(j, i)]),
        }
    }

    pub fn to_json(&self) -> Value {
        let edges: Vec<Value> =
            self.edges.iter().map(|(&(i, j), m)| json!({ "e": [i, j], "matrix": m.to_json() })).collect();
        json!({
            "complex": self.complex.to_json(),
            "signature": [self.sig.p, self.sig.q],
            "edges": edges,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, CechError> {
        let bad = |s: &str| CechError::Format(s.into());
        let complex = Complex::from_json(v.get("complex").ok_or_else(|| bad("missing complex"))?)?;
        let pq: Vec<usize> = serde_json::from_value(v.get("signature").cloned().ok_or_else(|| bad("missing signature"))?)
            .map_err(|e| CechError::Format(e.to_string()))?;
        if pq.len() != 2 || pq[0] + pq[1] > crate::algebra::MAX_GENERATORS {
            return Err(bad("signature must be [p,q]"));
        }
        let sig = Signature::new(pq[0], pq[1]);
        let mut edges = BTreeMap::new();
        for item in v.get("edges").and_then(Value::as_array).ok_or_else(|| bad("missing edges"))? {
            let e: Vec<usize> = serde_json::from_value(item.get("e").cloned().ok_or_else(|| bad("edge without e"))?)
                .map_err(|e| CechError::Format(e.to_string()))?;
            if e.len() != 2 {
                return Err(bad("edge must be [i,j]"));
            }
            let m = matrix_from_json::<Rational>(item.get("matrix").ok_or_else(|| bad("edge without matrix"))?)
                .map_err(|e| CechError::Format(e.to_string()))?;
            let m = PseudoOrthogonalMatrix::new(sig, m)?;
            let (key, m) = if e[0] < e[1] { ((e[0], e[1]), m) } else { ((e[1], e[0]), pseudo_inverse(&m)) };
            edges.insert(key, m);
        }
        Self::new(complex, sig, edges)
    }
}

/// `M^{-1} = η Mᵀ η`.
fn pseudo_inverse(m: &PseudoOrthogonalMatrix) -> PseudoOrthogonalMatrix {
    let eta = m.signature().metric_matrix();
    PseudoOrthogonalMatrix::new(m.signature(), eta.matmul(&m.matrix().transpose()).matmul(&eta))
        .expect("inverse of a pseudo-orthogonal matrix")
}

/// `g_ij g_jk = g_ik` on every triangle.
pub fn check_cocycle(c: &GroupCocycle) -> Verdict<[usize; 3]> {
    for t in c.complex.simplices(2) {
        let (i, j, k) = (t[0], t[1], t[2]);
        if c.edge(i, j).compose(&c.edge(j, k)) != c.edge(i, k) {
            return Verdict::fail([i, j, k]);
        }
    }
    Verdict::pass()
}

/// Whether `h_i^{-1} g_ij h_j` satisfies `member` on every edge.
pub fn subgroup_reduction_check(
    c: &GroupCocycle,
    h: &[Matrix<Rational>],
    member: impl Fn(&Matrix<Rational>) -> bool,
) -> Result<Verdict<(usize, usize)>, CechError> {
    if h.len() != c.complex.vertices() {
        return Err(CechError::Format(format!("{} vertex values for {} vertices", h.len(), c.complex.vertices())));
    }
    let inverses: Vec<Matrix<Rational>> =
        h.iter().enumerate().map(|(i, m)| m.inverse().ok_or(CechError::NotInvertible(i))).collect::<Result<_, _>>()?;
    for (&(i, j), g) in &c.edges {
        let reduced = inverses[i].matmul(g.matrix()).matmul(&h[j]);
        if !member(&reduced) {
            return Ok(Verdict::fail((i, j)));
        }
    }
    Ok(Verdict::pass())
}

/// Result of trying to lift an O(p,q) cocycle to Pin.
#[derive(Clone, Debug)]
pub enum LiftOutcome {
    /// Corrected edge versors `(-e)^{η_ij} ĝ_ij`; there are `2^{h1}`
    /// inequivalent lifts.
    Lifted { lifts: BTreeMap<(usize, usize), Versor>, correction: Z2Cochain, h1: usize },
    /// The discrepancy cochain is not a coboundary.
    Obstructed { class: Z2Cochain },
}

impl LiftOutcome {
    pub fn is_lifted(&self) -> bool {
        matches!(self, LiftOutcome::Lifted { .. })
    }
}

/// `λ` with `a = λ b`, when it exists.
fn proportionality(a: &Multivector<Rational>, b: &Multivector<Rational>) -> Option<Rational> {
    let (blade, coeff) = b.terms().next()?;
    let lambda = a.coefficient(*blade) / coeff;
    (b.scale_rational(&lambda) == *a).then_some(lambda)
}

/// Sign of the triangle discrepancy `ĝ_ij ĝ_jk = λ ĝ_ik`, per triangle.
pub fn discrepancy(c: &GroupCocycle, lifts: &BTreeMap<(usize, usize), Versor>) -> Result<Z2Cochain, CechError> {
    let values = c
        .complex
        .simplices(2)
        .iter()
        .map(|t| {
            let (ij, jk, ik) = (&lifts[&(t[0], t[1])], &lifts[&(t[1], t[2])], &lifts[&(t[0], t[2])]);
            let prod = ij.element().mul(jk.product());
            let lambda = proportionality(&prod, ik.product())
                .ok_or_else(|| CechError::Format(format!("lifts on {t:?} differ by more than a scalar")))?;
            Ok(signum(&lambda) < 0)
        })
        .collect::<Result<Vec<_>, CechError>>()?;
    Ok(Z2Cochain { degree: 2, values })
}

/// Lifts every edge with `lift_to_pin`, then tries to fix the signs.
pub fn pin_lift_cocycle(c: &GroupCocycle) -> Result<LiftOutcome, CechError> {
    let verdict = check_cocycle(c);
    if let Some(t) = verdict.witness {
        return Err(CechError::NotCocycle(t));
    }
    if c.sig.n() % 2 == 1 {
        return Err(GroupError::OddDimension(c.sig.n()).into());
    }
    let lifts: BTreeMap<_, _> =
        c.edges.iter().map(|(&e, m)| Ok((e, lift_to_pin(m)?))).collect::<Result<_, CechError>>()?;
    let w = discrepancy(c, &lifts)?;
    if !w.coboundary(&c.complex).is_zero() {
        return Err(CechError::DiscrepancyNotClosed);
    }
    let Some(eta) = c.complex.coboundary(1).solve(&w.values) else {
        return Ok(LiftOutcome::Obstructed { class: w });
    };
    let corrected: BTreeMap<_, _> = lifts
        .into_iter()
        .zip(&eta)
        .map(|((e, g), &flip)| (e, if flip { g.neg() } else { g }))
        .collect();
    debug_assert!(discrepancy(c, &corrected).map(|d| d.is_zero()).unwrap_or(false));
    Ok(LiftOutcome::Lifted {
        lifts: corrected,
        correction: Z2Cochain { degree: 1, values: eta },
        h1: z2_betti(&c.complex, 1),
    })
}

/// Standard test complexes.
pub mod examples {
    use super::Complex;

    pub fn filled_triangle() -> Complex {
        Complex::from_facets(3, &[vec![0, 1, 2]]).expect("valid")
    }

    pub fn tetrahedron_boundary() -> Complex {
        Complex::from_facets(4, &[vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]).expect("valid")
    }

    /// The six-vertex triangulation of the real projective plane.
    pub fn projective_plane() -> Complex {
        let facets = [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 1, 5],
            [1, 2, 4],
            [2, 3, 5],
            [1, 3, 4],
            [2, 4, 5],
            [1, 3, 5],
        ];
        Complex::from_facets(6, &facets.map(|f| f.to_vec())).expect("valid")
    }
}

#[cfg(test)]
mod tests {
    use super::examples::*;
    use super::*;

    #[test]
    fn betti_numbers() {
        let t = filled_triangle();
        assert_eq!([0, 1, 2].map(|k| z2_betti(&t, k)), [1, 0, 0]);
        let s = tetrahedron_boundary();
        assert_eq!([0, 1, 2].map(|k| z2_betti(&s, k)), [1, 0, 1]);
        let rp2 = projective_plane();
        assert_eq!(rp2.euler_characteristic(), 1);
        assert_eq!([0, 1, 2].map(|k| z2_betti(&rp2, k)), [1, 1, 1]);
        assert_eq!(cohomology_representatives(&rp2, 1).len(), 1);
        assert_eq!(cohomology_representatives(&s, 2).len(), 1);
    }

    #[test]
    fn coboundary_squares_to_zero() {
        for c in [filled_triangle(), tetrahedron_boundary(), projective_plane()] {
            for k in 0..2 {
                assert!(c.coboundary(k + 1).matmul(&c.coboundary(k)).is_zero());
            }
        }
    }

    #[test]
    fn missing_face_rejected() {
        assert!(matches!(Complex::new(3, &[vec![0, 1, 2]]), Err(CechError::MissingFace { .. })));
        assert!(matches!(Complex::new(3, &[vec![1, 0]]), Err(CechError::BadSimplex(_))));
    }

    #[test]
    fn json_round_trip() {
        let c = projective_plane();
        assert_eq!(Complex::from_json(&c.to_json()).unwrap(), c);
        let g = GroupCocycle::trivial(c, Signature::new(2, 0));
        assert_eq!(GroupCocycle::from_json(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn trivial_cocycle_lifts() {
        let g = GroupCocycle::trivial(tetrahedron_boundary(), Signature::new(2, 0));
        assert!(check_cocycle(&g).ok);
        let out = pin_lift_cocycle(&g).unwrap();
        let LiftOutcome::Lifted { correction, h1, .. } = out else { panic!("obstructed") };
        assert!(correction.is_zero());
        assert_eq!(h1, 0);
    }

    #[test]
    fn broken_edge_detected() {
        let sig = Signature::new(2, 0);
        let mut g = GroupCocycle::trivial(tetrahedron_boundary(), sig);
        g.edges.insert((0, 1), PseudoOrthogonalMatrix::identity(sig).neg());
        assert_eq!(check_cocycle(&g).witness, Some([0, 1, 2]));
    }
}
