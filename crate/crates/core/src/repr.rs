//! Matrix models of Clifford algebras.
//!
//! [`classify`] reads the mod-8 table, [`compile_rep`] builds an explicit
//! representation with that target from a handful of base cases, the
//! doubling `C(p,q) -> C(p+1,q+1)` and two signature shifts.
//!
//! Direct-sum targets keep their two factors apart: a [`Representation`]
//! stores one list of generator images per factor.

use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{Blade, Multivector, Signature, MAX_GENERATORS};
use crate::linalg::{first_invertible, intertwiner_space, Matrix};
use crate::scalar::{parse_rational, EmbedInto, Gaussian, Quaternion, Rational, Ring, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReprError {
    #[error("{0} is not a base case")]
    NotBaseCase(Signature),
    #[error("relation fails for generators {a} and {b} in factor {factor}")]
    RelationFails { factor: usize, a: usize, b: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("complex dimension {0} is odd")]
    OddComplexDimension(usize),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("representation is not quaternionic")]
    NotQuaternionic,
    #[error("invalid representation json: {0}")]
    Json(String),
}

/// The shape of a target matrix ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TargetKind {
    MatR,
    MatC,
    MatH,
    MatRxMatR,
    MatCxMatC,
    MatHxMatH,
}

impl TargetKind {
    pub fn ring(self) -> Ring {
        match self {
            TargetKind::MatR | TargetKind::MatRxMatR => Ring::Rational,
            TargetKind::MatC | TargetKind::MatCxMatC => Ring::Gaussian,
            TargetKind::MatH | TargetKind::MatHxMatH => Ring::Quaternion,
        }
    }

    pub fn factors(self) -> usize {
        if self.is_direct_sum() {
            2
        } else {
            1
        }
    }

    pub fn is_direct_sum(self) -> bool {
        matches!(self, TargetKind::MatRxMatR | TargetKind::MatCxMatC | TargetKind::MatHxMatH)
    }

    /// The kind of one factor.
    pub fn factor_kind(self) -> TargetKind {
        match self.ring() {
            Ring::Rational => TargetKind::MatR,
            Ring::Gaussian => TargetKind::MatC,
            Ring::Quaternion => TargetKind::MatH,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TargetKind::MatR => "MatR",
            TargetKind::MatC => "MatC",
            TargetKind::MatH => "MatH",
            TargetKind::MatRxMatR => "MatR+MatR",
            TargetKind::MatCxMatC => "MatC+MatC",
            TargetKind::MatHxMatH => "MatH+MatH",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        [
            TargetKind::MatR,
            TargetKind::MatC,
            TargetKind::MatH,
            TargetKind::MatRxMatR,
            TargetKind::MatCxMatC,
            TargetKind::MatHxMatH,
        ]
        .into_iter()
        .find(|k| k.name() == s)
    }
}

/// `Mat(m, K)` or `Mat(m, K) ⊕ Mat(m, K)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TargetRing {
    pub kind: TargetKind,
    pub m: usize,
}

impl TargetRing {
    pub fn new(kind: TargetKind, m: usize) -> Self {
        Self { kind, m }
    }

    pub fn ring(&self) -> Ring {
        self.kind.ring()
    }

    /// Dimension of the whole ring over the reals.
    pub fn real_dim(&self) -> usize {
        self.kind.factors() * self.m * self.m * self.ring().real_dim()
    }

    /// Real dimension of the column module `K^m` of one factor.
    pub fn column_real_dim(&self) -> usize {
        self.m * self.ring().real_dim()
    }

    pub fn factor(&self) -> TargetRing {
        TargetRing::new(self.kind.factor_kind(), self.m)
    }
}

impl fmt::Display for TargetRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = format!("Mat({},{})", self.m, self.ring().letter());
        if self.kind.is_direct_sum() {
            write!(f, "{one}⊕{one}")
        } else {
            write!(f, "{one}")
        }
    }
}

/// The matrix algebra isomorphic to `C(p,q)`.
pub fn classify(sig: Signature) -> TargetRing {
    let n = sig.n();
    let r = (sig.p as i64 - sig.q as i64).rem_euclid(8);
    let pow = |e: usize| 1usize << e;
    match r {
        0 | 2 => TargetRing::new(TargetKind::MatR, pow(n / 2)),
        1 => TargetRing::new(TargetKind::MatRxMatR, pow((n - 1) / 2)),
        3 | 7 => TargetRing::new(TargetKind::MatC, pow((n - 1) / 2)),
        4 | 6 => TargetRing::new(TargetKind::MatH, pow((n - 2) / 2)),
        _ => TargetRing::new(TargetKind::MatHxMatH, pow((n - 3) / 2)),
    }
}

/// The matrix algebra isomorphic to `CC(n)`.
pub fn classify_complex(n: usize) -> TargetRing {
    if n % 2 == 0 {
        TargetRing::new(TargetKind::MatC, 1 << (n / 2))
    } else {
        TargetRing::new(TargetKind::MatCxMatC, 1 << ((n - 1) / 2))
    }
}

/// Real dimension of the natural column module of one irreducible factor.
pub fn real_irrep_dim(sig: Signature) -> usize {
    classify(sig).column_real_dim()
}

/// Which algebra a representation is of.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Source {
    Real(Signature),
    Complex(usize),
}

impl Source {
    /// The metric of the generators; `CC(n)` is generated by `n` unit vectors.
    pub fn signature(&self) -> Signature {
        match *self {
            Source::Real(s) => s,
            Source::Complex(n) => Signature::euclidean(n),
        }
    }

    pub fn n(&self) -> usize {
        self.signature().n()
    }

    pub fn is_complex(&self) -> bool {
        matches!(self, Source::Complex(_))
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Real(s) => write!(f, "C{s}"),
            Source::Complex(n) => write!(f, "CC({n})"),
        }
    }
}

/// Generator images `ρ(v^a)`, one list per factor of the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation<S: Scalar> {
    source: Source,
    target: TargetRing,
    factors: Vec<Vec<Matrix<S>>>,
}

impl<S: Scalar> Representation<S> {
    /// Builds a representation and checks the generator relations exactly.
    pub fn new(source: Source, target: TargetRing, factors: Vec<Vec<Matrix<S>>>) -> Result<Self, ReprError> {
        if target.ring() != S::RING {
            return Err(ReprError::ShapeMismatch(format!("target {target} over a {:?} scalar type", S::RING)));
        }
        if factors.len() != target.kind.factors() {
            return Err(ReprError::ShapeMismatch(format!("{} factors for target {target}", factors.len())));
        }
        for f in &factors {
            if f.len() != source.n() {
                return Err(ReprError::ShapeMismatch(format!("{} images for {source}", f.len())));
            }
            if f.iter().any(|m| m.rows() != target.m || m.cols() != target.m) {
                return Err(ReprError::ShapeMismatch(format!("image size differs from {target}")));
            }
        }
        let rep = Self { source, target, factors };
        rep.verify_relations()?;
        Ok(rep)
    }

    pub fn source(&self) -> Source {
        self.source
    }

    pub fn signature(&self) -> Signature {
        self.source.signature()
    }

    pub fn target(&self) -> TargetRing {
        self.target
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    /// Generator images in factor `f`.
    pub fn factor(&self, f: usize) -> &[Matrix<S>] {
        &self.factors[f]
    }

    /// `ρ(v^a)` in every factor.
    pub fn generator(&self, a: usize) -> Vec<&Matrix<S>> {
        self.factors.iter().map(|f| &f[a]).collect()
    }

    /// `ρ(v^a)ρ(v^b) + ρ(v^b)ρ(v^a) = 2η^{ab} I` for all pairs.
    pub fn verify_relations(&self) -> Result<(), ReprError> {
        let sig = self.signature();
        let m = self.target.m;
        for (fi, f) in self.factors.iter().enumerate() {
            for a in 0..f.len() {
                for b in a..f.len() {
                    let anti = f[a].matmul(&f[b]).add(&f[b].matmul(&f[a]));
                    let ok = if a == b {
                        let two_eta = S::from_rational(Rational::from_integer((2 * sig.metric(a)).into()));
                        anti == Matrix::scalar(m, two_eta)
                    } else {
                        anti.is_zero()
                    };
                    if !ok {
                        return Err(ReprError::RelationFails { factor: fi, a, b });
                    }
                }
            }
        }
        Ok(())
    }

    /// `ρ(B)` for every blade, per factor, in mask order.
    pub fn blade_images(&self) -> Vec<Vec<Matrix<S>>> {
        let n = self.source.n();
        self.factors
            .iter()
            .map(|gens| {
                let mut images: Vec<Matrix<S>> = Vec::with_capacity(1 << n);
                images.push(Matrix::identity(self.target.m));
                for mask in 1u32..(1 << n) {
                    let low = mask.trailing_zeros() as usize;
                    let rest = &images[(mask & (mask - 1)) as usize];
                    images.push(gens[low].matmul(rest));
                }
                images
            })
            .collect()
    }

    pub fn blade_image(&self, blade: Blade) -> Vec<Matrix<S>> {
        self.factors
            .iter()
            .map(|gens| {
                blade
                    .indices()
                    .iter()
                    .fold(Matrix::identity(self.target.m), |acc, &i| acc.matmul(&gens[i - 1]))
            })
            .collect()
    }

    /// `ρ(a)` per factor.
    pub fn apply<T: Scalar + EmbedInto<S>>(&self, a: &Multivector<T>) -> Vec<Matrix<S>> {
        assert_eq!(a.signature(), self.signature(), "multivector from a different algebra");
        let mut out = vec![Matrix::zeros(self.target.m, self.target.m); self.factors.len()];
        for (blade, coeff) in a.terms() {
            let c: S = coeff.embed();
            for (acc, img) in out.iter_mut().zip(self.blade_image(*blade)) {
                *acc = acc.add(&img.scale_left(&c));
            }
        }
        out
    }

    /// Linear independence of the blade images.
    ///
    /// Over a real source this is independence over the reals; over `CC(n)`
    /// it is independence over the complex numbers.
    pub fn is_injective(&self) -> bool {
        let images = self.blade_images();
        let count = 1usize << self.source.n();
        let vector = |k: usize, unit: &S| -> Vec<Rational> {
            images.iter().flat_map(|f| f[k].scale_left(unit).real_coordinates()).collect()
        };
        let mut units = vec![S::one()];
        if self.source.is_complex() {
            if S::RING == Ring::Rational {
                return false;
            }
            units.push(S::real_unit(1));
        }
        let mut span = crate::linalg::SpanBasis::new(self.target.real_dim());
        for k in 0..count {
            for u in &units {
                if !span.insert(vector(k, u)) {
                    return false;
                }
            }
        }
        true
    }

    /// The representation restricted to one factor of a direct sum.
    pub fn factor_projection(&self, f: usize) -> Representation<S> {
        Representation {
            source: self.source,
            target: self.target.factor(),
            factors: vec![self.factors[f].clone()],
        }
    }

    /// The generators mapped through `map`, as a representation of `map.to`.
    pub fn pull_back(&self, map: &GeneratorMap) -> Result<Representation<S>, ReprError> {
        if Source::Real(map.from) != self.source {
            return Err(ReprError::ShapeMismatch(format!("map from {} applied to {}", map.from, self.source)));
        }
        let mut factors = vec![Vec::with_capacity(map.images.len()); self.factors.len()];
        for img in &map.images {
            for (f, m) in self.apply(img).into_iter().enumerate() {
                factors[f].push(m);
            }
        }
        Representation::new(Source::Real(map.to), self.target, factors)
    }
}

/// `C(p,q) -> C(p+1,q+1)`: `v^+ = [[0,1],[1,0]]`, `v^- = [[0,-1],[1,0]]`
/// and `v^i -> diag(ρ(v^i), -ρ(v^i))`.
///
/// Generators come out as the old positives, `v^+`, the old negatives, `v^-`.
pub fn double_rep<S: Scalar>(r: &Representation<S>) -> Result<Representation<S>, ReprError> {
    let Source::Real(sig) = r.source else {
        return Err(ReprError::Precondition("doubling needs a real source".into()));
    };
    if sig.n() + 2 > MAX_GENERATORS {
        return Err(ReprError::Precondition(format!("{sig} cannot be doubled")));
    }
    r.verify_relations()?;
    let m = r.target.m;
    let id = Matrix::<S>::identity(m);
    let zero = Matrix::<S>::zeros(m, m);
    let plus = Matrix::from_blocks(&zero, &id, &id, &zero);
    let minus = Matrix::from_blocks(&zero, &id.neg(), &id, &zero);
    let factors = r
        .factors
        .iter()
        .map(|gens| {
            let inner = |a: usize| Matrix::from_blocks(&gens[a], &zero, &zero, &gens[a].neg());
            let mut out: Vec<Matrix<S>> = (0..sig.p).map(inner).collect();
            out.push(plus.clone());
            out.extend((sig.p..sig.n()).map(inner));
            out.push(minus.clone());
            out
        })
        .collect();
    Representation::new(
        Source::Real(Signature::new(sig.p + 1, sig.q + 1)),
        TargetRing::new(r.target.kind, 2 * m),
        factors,
    )
}

/// New generators written as elements of the old algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMap {
    pub from: Signature,
    pub to: Signature,
    /// `images[j]` is `w^{j+1}` as an element of `C(from)`.
    pub images: Vec<Multivector<Rational>>,
}

impl GeneratorMap {
    /// Whether the images obey the relations of `C(to)`.
    pub fn verify(&self) -> bool {
        let two = Rational::from_integer(2.into());
        self.images.len() == self.to.n()
            && self.images.iter().enumerate().all(|(a, wa)| {
                self.images.iter().enumerate().skip(a).all(|(b, wb)| {
                    let anti = wa.mul(wb).add(&wb.mul(wa));
                    if a == b {
                        anti == Multivector::scalar(self.from, two.clone() * Rational::from_integer(self.to.metric(a).into()))
                    } else {
                        anti.is_zero()
                    }
                })
            })
    }
}

impl fmt::Display for GeneratorMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, w) in self.images.iter().enumerate() {
            writeln!(f, "w{} = {}", j + 1, w)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shift {
    /// `(p,q) -> (q+1, p-1)` via `w^1 = v^1`, `w^i = v^1 v^i`.
    Flip,
    /// `(p,q) -> (p-4, q+4)`: the first four positive generators become
    /// the trivectors of the other three.
    Mod4,
}

pub fn signature_shift(sig: Signature, which: Shift) -> Result<(Signature, GeneratorMap), ReprError> {
    let v = |a: usize| Multivector::<Rational>::generator(sig, a);
    let (to, images) = match which {
        Shift::Flip => {
            if sig.p == 0 || sig.n() < 2 {
                return Err(ReprError::Precondition(format!("flip needs p > 0 and n > 1, got {sig}")));
            }
            let v1 = v(0);
            let mut images = vec![v1.clone()];
            images.extend((sig.p..sig.n()).map(|a| v1.mul(&v(a))));
            images.extend((1..sig.p).map(|a| v1.mul(&v(a))));
            (Signature::new(sig.q + 1, sig.p - 1), images)
        }
        Shift::Mod4 => {
            if sig.p < 4 {
                return Err(ReprError::Precondition(format!("mod4 needs p >= 4, got {sig}")));
            }
            let mut images: Vec<_> = (4..sig.p).map(v).collect();
            for a in 0..4 {
                let tri = (0..4).filter(|&b| b != a).fold(Multivector::one(sig), |acc, b| acc.mul(&v(b)));
                images.push(tri);
            }
            images.extend((sig.p..sig.n()).map(v));
            (Signature::new(sig.p - 4, sig.q + 4), images)
        }
    };
    let map = GeneratorMap { from: sig, to, images };
    debug_assert!(map.verify());
    Ok((to, map))
}

/// Base cases: `(0,0)`, `(1,0)`, `(0,1)`, `(0,2)`, `(1,1)`, `(2,0)`, `(0,3)`.
pub fn base_rep(sig: Signature) -> Result<AnyRep, ReprError> {
    let src = Source::Real(sig);
    let target = classify(sig);
    let ri = |v: i64| Rational::from_integer(v.into());
    let real = |rows: [[i64; 2]; 2]| Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| ri(x)).collect()).collect());
    let quat = |q: Quaternion| Matrix::from_vec(1, 1, vec![q]);
    let sigma1 = real([[0, 1], [1, 0]]);
    let sigma3 = real([[1, 0], [0, -1]]);
    let tau2 = real([[0, -1], [1, 0]]);
    let rep = match (sig.p, sig.q) {
        (0, 0) => AnyRep::Real(Representation::new(src, target, vec![vec![]])?),
        (1, 0) => AnyRep::Real(Representation::new(
            src,
            target,
            vec![vec![Matrix::scalar(1, ri(1))], vec![Matrix::scalar(1, ri(-1))]],
        )?),
        (0, 1) => AnyRep::Complex(Representation::new(src, target, vec![vec![Matrix::scalar(1, Gaussian::i())]])?),
        (0, 2) => AnyRep::Quaternionic(Representation::new(
            src,
            target,
            vec![vec![quat(Quaternion::tau(1)), quat(Quaternion::tau(2))]],
        )?),
        (1, 1) => AnyRep::Real(Representation::new(src, target, vec![vec![sigma1, tau2]])?),
        (2, 0) => AnyRep::Real(Representation::new(src, target, vec![vec![sigma1, sigma3]])?),
        (0, 3) => {
            let plus = (1..=3).map(|k| quat(Quaternion::tau(k))).collect();
            let minus = (1..=3).map(|k| quat(-Quaternion::tau(k))).collect();
            AnyRep::Quaternionic(Representation::new(src, target, vec![plus, minus])?)
        }
        _ => return Err(ReprError::NotBaseCase(sig)),
    };
    Ok(rep)
}

/// A representation of `C(p,q)` onto `classify(p,q)`.
///
/// Plan: base cases directly; `p, q >= 1` doubles `(p-1, q-1)`; `(p, 0)`
/// with `p >= 3` flips `(1, p-1)`; `(0, q)` with `q >= 4` shifts `(4, q-4)`.
pub fn compile_rep(sig: Signature) -> AnyRep {
    let rep = compile_inner(sig);
    debug_assert_eq!(rep.target(), classify(sig));
    rep
}

fn compile_inner(sig: Signature) -> AnyRep {
    if let Ok(rep) = base_rep(sig) {
        return rep;
    }
    let (p, q) = (sig.p, sig.q);
    let expect = "compiled representation violates its relations";
    if p >= 1 && q >= 1 {
        compile_inner(Signature::new(p - 1, q - 1)).double().expect(expect)
    } else if q == 0 {
        let inner = Signature::new(1, p - 1);
        let (to, map) = signature_shift(inner, Shift::Flip).expect(expect);
        debug_assert_eq!(to, sig);
        compile_inner(inner).pull_back(&map).expect(expect)
    } else {
        let inner = Signature::new(4, q - 4);
        let (to, map) = signature_shift(inner, Shift::Mod4).expect(expect);
        debug_assert_eq!(to, sig);
        compile_inner(inner).pull_back(&map).expect(expect)
    }
}

/// `CC(n)` for even `n`, through the real model of `C(n/2, n/2)`:
/// `e^a = ρ(v^a)` for the positive half and `e^a = -i ρ(v^a)` for the rest.
pub fn compile_complex_rep(n: usize) -> Result<Representation<Gaussian>, ReprError> {
    if n % 2 == 1 {
        return Err(ReprError::OddComplexDimension(n));
    }
    if n == 0 || n > MAX_GENERATORS {
        return Err(ReprError::Precondition(format!("complex dimension {n} out of range")));
    }
    let k = n / 2;
    let AnyRep::Real(real) = compile_rep(Signature::new(k, k)) else {
        unreachable!("split signatures compile to real matrices");
    };
    let minus_i = -Gaussian::i();
    let gens = real.factor(0).iter().enumerate().map(|(a, m)| {
        let g = m.map(|x| Gaussian::real(x.clone()));
        if a < k {
            g
        } else {
            g.scale_left(&minus_i)
        }
    });
    Representation::new(Source::Complex(n), classify_complex(n), vec![gens.collect()])
}

/// Replaces each quaternion by its complex 2×2 block:
/// `τ1 -> [[0,-i],[-i,0]]`, `τ2 -> [[0,-1],[1,0]]`, `τ3 -> [[-i,0],[0,i]]`.
pub fn quaternion_block(q: &Quaternion) -> Matrix<Gaussian> {
    let g = |re: Rational, im: Rational| Gaussian::new(re, im);
    Matrix::from_rows(vec![
        vec![g(q.w.clone(), -q.z.clone()), g(-q.y.clone(), -q.x.clone())],
        vec![g(q.y.clone(), -q.x.clone()), g(q.w.clone(), q.z.clone())],
    ])
}

pub fn complexify_matrix(m: &Matrix<Quaternion>) -> Matrix<Gaussian> {
    let k = m.rows();
    let mut out = Matrix::zeros(2 * k, 2 * m.cols());
    for r in 0..k {
        for c in 0..m.cols() {
            let b = quaternion_block(&m[(r, c)]);
            for (i, j) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                out[(2 * r + i, 2 * c + j)] = b[(i, j)].clone();
            }
        }
    }
    out
}

/// `Mat(m, H) -> Mat(2m, C)` entrywise, factor by factor.
pub fn quaternion_complexify(r: &Representation<Quaternion>) -> Result<Representation<Gaussian>, ReprError> {
    let kind = match r.target.kind {
        TargetKind::MatH => TargetKind::MatC,
        TargetKind::MatHxMatH => TargetKind::MatCxMatC,
        _ => return Err(ReprError::NotQuaternionic),
    };
    let factors = r.factors.iter().map(|f| f.iter().map(complexify_matrix).collect()).collect();
    Representation::new(r.source, TargetRing::new(kind, 2 * r.target.m), factors)
}

/// A real representation read over the Gaussian rationals.
pub fn real_to_complex(r: &Representation<Rational>) -> Representation<Gaussian> {
    let kind = if r.target.kind.is_direct_sum() { TargetKind::MatCxMatC } else { TargetKind::MatC };
    Representation {
        source: r.source,
        target: TargetRing::new(kind, r.target.m),
        factors: r
            .factors
            .iter()
            .map(|f| f.iter().map(|m| m.map(|x| Gaussian::real(x.clone()))).collect())
            .collect(),
    }
}

/// `S ρ1(v^a) S^{-1} = ρ2(v^a)`, one block per factor. With `swapped`,
/// block `f` maps factor `f` of `ρ1` onto the other factor of `ρ2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Intertwiner<S: Scalar> {
    pub blocks: Vec<Matrix<S>>,
    pub swapped: bool,
}

impl<S: Scalar> Intertwiner<S> {
    pub fn check(&self, r1: &Representation<S>, r2: &Representation<S>) -> bool {
        let k = r1.factor_count();
        self.blocks.len() == k
            && self.blocks.iter().enumerate().all(|(f, s)| {
                let g = if self.swapped { (f + 1) % k } else { f };
                s.is_invertible()
                    && r1.factor(f).iter().zip(r2.factor(g)).all(|(a, b)| s.matmul(a) == b.matmul(s))
            })
    }
}

/// An invertible `S` with `S ρ1 = ρ2 S` on every generator, or `None`
/// when the two representations are inequivalent.
pub fn rep_equivalence<S: Scalar>(
    r1: &Representation<S>,
    r2: &Representation<S>,
) -> Result<Option<Intertwiner<S>>, ReprError> {
    if r1.source != r2.source || r1.target != r2.target {
        return Err(ReprError::ShapeMismatch(format!(
            "{} in {} vs {} in {}",
            r1.source, r1.target, r2.source, r2.target
        )));
    }
    let solve = |a: &[Matrix<S>], b: &[Matrix<S>]| -> Option<Matrix<S>> {
        if a.is_empty() {
            return Some(Matrix::identity(r1.target.m));
        }
        first_invertible(&intertwiner_space(a, b), Matrix::is_invertible)
    };
    let k = r1.factor_count();
    for swapped in [false, true] {
        if swapped && k == 1 {
            break;
        }
        let blocks: Option<Vec<_>> =
            (0..k).map(|f| solve(r1.factor(f), r2.factor(if swapped { (f + 1) % k } else { f }))).collect();
        if let Some(blocks) = blocks {
            return Ok(Some(Intertwiner { blocks, swapped }));
        }
    }
    Ok(None)
}

/// The even subring `C^0(p,q)` as a Clifford algebra in its own right.
#[derive(Clone, Debug)]
pub struct EvenSubring {
    /// Signature read off the squares `(v^1 v^i)^2 = -η^{11} η^{ii}`.
    pub derived: Signature,
    /// `(n-p, p-1)` and `(p, n-p-1)` where they are valid signatures.
    pub closed_forms: [Option<Signature>; 2],
    pub map: GeneratorMap,
    /// The `w` generators inside the compiled model of the ambient algebra.
    pub rep: AnyRep,
}

pub fn even_subring_rep(sig: Signature) -> Result<EvenSubring, ReprError> {
    let n = sig.n();
    if n < 2 {
        return Err(ReprError::Precondition(format!("even subring needs n > 1, got {sig}")));
    }
    let v0 = Multivector::<Rational>::generator(sig, 0);
    let ws: Vec<_> = (1..n).map(|i| v0.mul(&Multivector::generator(sig, i))).collect();
    let one = Multivector::one(sig);
    let (pos, neg): (Vec<_>, Vec<_>) = ws.into_iter().partition(|w| w.mul(w) == one);
    let derived = Signature::new(pos.len(), neg.len());
    let images = pos.into_iter().chain(neg).collect();
    let map = GeneratorMap { from: sig, to: derived, images };
    let variant = |a: i64, b: i64| (a >= 0 && b >= 0).then(|| Signature::new(a as usize, b as usize));
    let (n_i, p_i) = (n as i64, sig.p as i64);
    let rep = compile_rep(sig).pull_back(&map)?;
    Ok(EvenSubring {
        derived,
        closed_forms: [variant(n_i - p_i, p_i - 1), variant(p_i, n_i - p_i - 1)],
        map,
        rep,
    })
}

/// A representation over whichever ring its target needs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyRep {
    Real(Representation<Rational>),
    Complex(Representation<Gaussian>),
    Quaternionic(Representation<Quaternion>),
}

macro_rules! each_rep {
    ($self:expr, $r:ident => $body:expr) => {
        match $self {
            AnyRep::Real($r) => $body,
            AnyRep::Complex($r) => $body,
            AnyRep::Quaternionic($r) => $body,
        }
    };
}

macro_rules! map_rep {
    ($self:expr, $r:ident => $body:expr) => {
        match $self {
            AnyRep::Real($r) => AnyRep::Real($body),
            AnyRep::Complex($r) => AnyRep::Complex($body),
            AnyRep::Quaternionic($r) => AnyRep::Quaternionic($body),
        }
    };
}

impl AnyRep {
    pub fn source(&self) -> Source {
        each_rep!(self, r => r.source())
    }

    pub fn target(&self) -> TargetRing {
        each_rep!(self, r => r.target())
    }

    pub fn verify_relations(&self) -> Result<(), ReprError> {
        each_rep!(self, r => r.verify_relations())
    }

    pub fn is_injective(&self) -> bool {
        each_rep!(self, r => r.is_injective())
    }

    pub fn double(&self) -> Result<AnyRep, ReprError> {
        Ok(map_rep!(self, r => double_rep(r)?))
    }

    pub fn pull_back(&self, map: &GeneratorMap) -> Result<AnyRep, ReprError> {
        Ok(map_rep!(self, r => r.pull_back(map)?))
    }

    /// `ρ(B)` per factor, flattened to rational coordinates.
    pub fn blade_coordinates(&self, blade: Blade) -> Vec<Rational> {
        each_rep!(self, r => r.blade_image(blade).iter().flat_map(Matrix::real_coordinates).collect())
    }

    /// `ρ(a)` of a real multivector, flattened to rational coordinates.
    pub fn apply_coordinates(&self, a: &Multivector<Rational>) -> Vec<Rational> {
        each_rep!(self, r => r.apply(a).iter().flat_map(Matrix::real_coordinates).collect())
    }

    pub fn to_json(&self) -> Value {
        each_rep!(self, r => rep_to_json(r))
    }

    pub fn from_json(v: &Value) -> Result<AnyRep, ReprError> {
        let target = v.get("target").ok_or_else(|| ReprError::Json("missing target".into()))?;
        let kind = target
            .get("kind")
            .and_then(Value::as_str)
            .and_then(TargetKind::from_name)
            .ok_or_else(|| ReprError::Json("bad target kind".into()))?;
        Ok(match kind.ring() {
            Ring::Rational => AnyRep::Real(rep_from_json(v)?),
            Ring::Gaussian => AnyRep::Complex(rep_from_json(v)?),
            Ring::Quaternion => AnyRep::Quaternionic(rep_from_json(v)?),
        })
    }
}

impl fmt::Display for AnyRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        each_rep!(self, r => fmt::Display::fmt(r, f))
    }
}

impl<S: Scalar> fmt::Display for Representation<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} -> {}", self.source, self.target)?;
        for a in 0..self.source.n() {
            for (fi, gens) in self.factors.iter().enumerate() {
                if self.factors.len() > 1 {
                    writeln!(f, "v{} [factor {}] =", a + 1, fi + 1)?;
                } else {
                    writeln!(f, "v{} =", a + 1)?;
                }
                write!(f, "{}", gens[a])?;
            }
        }
        Ok(())
    }
}

/// Scalars in the representation wire format.
pub trait JsonScalar: Scalar {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self, ReprError>;
}

fn json_rational(v: &Value) -> Result<Rational, ReprError> {
    let s = v.as_str().ok_or_else(|| ReprError::Json(format!("expected a string, got {v}")))?;
    parse_rational(s).map_err(|e| ReprError::Json(e.to_string()))
}

impl JsonScalar for Rational {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
    fn from_json(v: &Value) -> Result<Self, ReprError> {
        json_rational(v)
    }
}

impl JsonScalar for Gaussian {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
    fn from_json(v: &Value) -> Result<Self, ReprError> {
        let s = v.as_str().ok_or_else(|| ReprError::Json(format!("expected a string, got {v}")))?;
        s.parse().map_err(|e: crate::scalar::ParseScalarError| ReprError::Json(e.to_string()))
    }
}

impl JsonScalar for Quaternion {
    fn to_json(&self) -> Value {
        Value::Array(self.components().iter().map(|c| Value::String(c.to_string())).collect())
    }
    fn from_json(v: &Value) -> Result<Self, ReprError> {
        let parts = v
            .as_array()
            .filter(|a| a.len() == 4)
            .ok_or_else(|| ReprError::Json(format!("expected [a,b,c,d], got {v}")))?;
        let p: Vec<Rational> = parts.iter().map(json_rational).collect::<Result<_, _>>()?;
        Ok(Quaternion::from_real_parts(&p))
    }
}

pub fn matrix_to_json<S: JsonScalar>(m: &Matrix<S>) -> Value {
    Value::Array(m.row_vecs().iter().map(|r| Value::Array(r.iter().map(S::to_json).collect())).collect())
}

pub fn matrix_from_json<S: JsonScalar>(v: &Value) -> Result<Matrix<S>, ReprError> {
    let rows = v.as_array().ok_or_else(|| ReprError::Json("matrix must be an array of rows".into()))?;
    let parsed: Vec<Vec<S>> = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| ReprError::Json("matrix row must be an array".into()))?
                .iter()
                .map(S::from_json)
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let cols = parsed.first().map_or(0, Vec::len);
    if parsed.is_empty() || parsed.iter().any(|r| r.len() != cols) {
        return Err(ReprError::Json("ragged or empty matrix".into()));
    }
    Ok(Matrix::from_rows(parsed))
}

pub fn rep_to_json<S: JsonScalar>(r: &Representation<S>) -> Value {
    let gens: Vec<Value> = (0..r.source.n())
        .map(|a| {
            if r.factors.len() == 1 {
                matrix_to_json(&r.factors[0][a])
            } else {
                Value::Array(r.factors.iter().map(|f| matrix_to_json(&f[a])).collect())
            }
        })
        .collect();
    let mut obj = json!({
        "target": { "kind": r.target.kind.name(), "m": r.target.m },
        "generators": gens,
    });
    match r.source {
        Source::Real(s) => obj["signature"] = json!([s.p, s.q]),
        Source::Complex(n) => obj["complex_dim"] = json!(n),
    }
    obj
}

pub fn rep_from_json<S: JsonScalar>(v: &Value) -> Result<Representation<S>, ReprError> {
    let bad = |s: &str| ReprError::Json(s.into());
    let source = match (v.get("signature"), v.get("complex_dim")) {
        (Some(s), None) => {
            let pq: Vec<usize> = serde_json::from_value(s.clone()).map_err(|e| ReprError::Json(e.to_string()))?;
            if pq.len() != 2 || pq[0] + pq[1] > MAX_GENERATORS {
                return Err(bad("signature must be [p,q] with p+q <= 16"));
            }
            Source::Real(Signature::new(pq[0], pq[1]))
        }
        (None, Some(n)) => {
            let n = n.as_u64().filter(|&n| n as usize <= MAX_GENERATORS).ok_or_else(|| bad("bad complex_dim"))?;
            Source::Complex(n as usize)
        }
        _ => return Err(bad("exactly one of signature and complex_dim is required")),
    };
    let t = v.get("target").ok_or_else(|| bad("missing target"))?;
    let kind = t.get("kind").and_then(Value::as_str).and_then(TargetKind::from_name).ok_or_else(|| bad("bad kind"))?;
    let m = t.get("m").and_then(Value::as_u64).ok_or_else(|| bad("bad m"))? as usize;
    let target = TargetRing::new(kind, m);
    let gens = v.get("generators").and_then(Value::as_array).ok_or_else(|| bad("missing generators"))?;
    let mut factors = vec![Vec::new(); kind.factors()];
    for g in gens {
        if kind.is_direct_sum() {
            let pair = g.as_array().filter(|p| p.len() == 2).ok_or_else(|| bad("direct-sum image must be a pair"))?;
            for (f, m) in pair.iter().enumerate() {
                factors[f].push(matrix_from_json(m)?);
            }
        } else {
            factors[0].push(matrix_from_json(g)?);
        }
    }
    Representation::new(source, target, factors)
}
