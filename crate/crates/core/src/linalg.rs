//! Dense exact matrices and the elimination routines the rest of the crate
//! builds on.
//!
//! Elimination is only offered over commutative fields ([`Field`]). Problems
//! over quaternions are solved through [`Matrix::realify`], which turns a
//! matrix into the rational matrix of the real-linear map it induces.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};


use crate::scalar::{Field, Rational, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} ", self.rows, self.cols)?;
        f.debug_list().entries(self.row_vecs()).finish()
    }
}

impl<S: Scalar> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|x| x.to_string()).collect();
        let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(1);
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", cells[r * self.cols + c])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl<S> Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (r, c): (usize, usize)) -> &S {
        &self.data[r * self.cols + c]
    }
}

impl<S> IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut S {
        &mut self.data[r * self.cols + c]
    }
}

impl<S: Scalar> Matrix<S> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<S>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Self { rows, cols, data }
    }

    /// Builds a matrix from its rows; panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_vec(r, c, rows.into_iter().flatten().collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_vec(rows, cols, vec![S::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, S::one())
    }

    pub fn scalar(n: usize, value: S) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = value.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn row_vecs(&self) -> Vec<Vec<S>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(<[S]>::to_vec).collect()
    }

    pub fn column(&self, c: usize) -> Vec<S> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn from_columns(rows: usize, columns: &[Vec<S>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (r, x) in col.iter().enumerate() {
                m[(r, c)] = x.clone();
            }
        }
        m
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix::from_vec(self.rows, self.cols, self.data.iter().map(f).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(S::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rows)
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[(c, r)] = self[(r, c)].clone();
            }
        }
        m
    }

    /// Transpose with every entry conjugated.
    pub fn adjoint(&self) -> Self {
        let mut m = self.transpose();
        for x in &mut m.data {
            *x = x.conj();
        }
        m
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b).collect();
        Self::from_vec(self.rows, self.cols, data)
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sub");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b).collect();
        Self::from_vec(self.rows, self.cols, data)
    }

    /// `λ M`, scalar on the left.
    pub fn scale_left(&self, lambda: &S) -> Self {
        self.map(|x| lambda.clone() * x)
    }

    /// `M λ`, scalar on the right.
    pub fn scale_right(&self, lambda: &S) -> Self {
        self.map(|x| x.clone() * lambda)
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in matmul");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.clone() * b;
                    let slot = &mut out[(i, j)];
                    *slot = slot.clone() + prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(S::zero(), |acc, k| {
                    if self[(i, k)].is_zero() || v[k].is_zero() {
                        acc
                    } else {
                        acc + self[(i, k)].clone() * &v[k]
                    }
                })
            })
            .collect()
    }

    /// `[[a, b], [c, d]]` assembled from four equally sized square blocks.
    pub fn from_blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        let n = a.rows;
        for blk in [a, b, c, d] {
            assert_eq!((blk.rows, blk.cols), (n, n), "block shape");
        }
        let mut m = Self::zeros(2 * n, 2 * n);
        for r in 0..n {
            for col in 0..n {
                m[(r, col)] = a[(r, col)].clone();
                m[(r, col + n)] = b[(r, col)].clone();
                m[(r + n, col)] = c[(r, col)].clone();
                m[(r + n, col + n)] = d[(r, col)].clone();
            }
        }
        m
    }

    /// The `(bi, bj)` block of size `size`.
    pub fn block(&self, bi: usize, bj: usize, size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for r in 0..size {
            for c in 0..size {
                m[(r, c)] = self[(bi * size + r, bj * size + c)].clone();
            }
        }
        m
    }

    /// All entries' rational coordinates, row-major.
    pub fn real_coordinates(&self) -> Vec<Rational> {
        self.data.iter().flat_map(Scalar::real_parts).collect()
    }

    /// Inverse of [`Matrix::real_coordinates`].
    pub fn from_real_coordinates(rows: usize, cols: usize, coords: &[Rational]) -> Self {
        let d = S::RING.real_dim();
        assert_eq!(coords.len(), rows * cols * d);
        Self::from_vec(rows, cols, coords.chunks(d).map(S::from_real_parts).collect())
    }

    /// The rational matrix of the real-linear map `x -> M x` on column
    /// vectors with entries in `S`.
    pub fn realify(&self) -> Matrix<Rational> {
        let d = S::RING.real_dim();
        let mut out = Matrix::<Rational>::zeros(self.rows * d, self.cols * d);
        for j in 0..self.cols {
            for k in 0..d {
                let unit = S::real_unit(k);
                for i in 0..self.rows {
                    let entry = self[(i, j)].clone() * &unit;
                    for (t, part) in entry.real_parts().into_iter().enumerate() {
                        out[(i * d + t, j * d + k)] = part;
                    }
                }
            }
        }
        out
    }

    /// Invertibility, decided on the realified matrix.
    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.realify().rank() == self.rows * S::RING.real_dim()
    }
}

impl<S: Scalar> Mul for &Matrix<S> {
    type Output = Matrix<S>;
    fn mul(self, rhs: &Matrix<S>) -> Matrix<S> {
        self.matmul(rhs)
    }
}

/// Reduced row echelon form together with the pivot columns.
pub struct Echelon<F> {
    pub reduced: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    pub fn rref(&self) -> Echelon<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.data.swap(p * m.cols + c, row * m.cols + c);
                }
            }
            let inv = m[(row, col)].inv().expect("nonzero pivot");
            for c in col..m.cols {
                if !m[(row, c)].is_zero() {
                    m[(row, c)] = m[(row, c)].clone() * &inv;
                }
            }
            let pivot_support: Vec<usize> = (col..m.cols).filter(|&c| !m[(row, c)].is_zero()).collect();
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for &c in &pivot_support {
                    let delta = factor.clone() * &m[(row, c)];
                    m[(r, c)] = m[(r, c)].clone() - delta;
                }
            }
            pivots.push(col);
            row += 1;
        }
        Echelon { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        let mut basis = SpanBasis::new(self.cols);
        for r in 0..self.rows {
            basis.insert(self.data[r * self.cols..(r + 1) * self.cols].to_vec());
        }
        basis.len()
    }

    /// A basis of `{x : M x = 0}`, one vector per free column, in column order.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let Echelon { reduced, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -reduced[(r, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Some solution of `M x = b`, if one exists.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, self.cols)] = b[r].clone();
        }
        let Echelon { reduced, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = reduced[(r, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, n + r)] = F::one();
        }
        let Echelon { reduced, pivots } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv[(r, c)] = reduced[(r, n + c)].clone();
            }
        }
        Some(inv)
    }

    pub fn determinant(&self) -> F {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = F::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return F::zero();
            };
            if p != col {
                for c in 0..n {
                    m.data.swap(p * n + c, col * n + c);
                }
                det = -det;
            }
            let pivot = m[(col, col)].clone();
            det = det * &pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone() * &inv;
                for c in col..n {
                    let delta = factor.clone() * &m[(col, c)];
                    m[(r, c)] = m[(r, c)].clone() - delta;
                }
            }
        }
        det
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc + &self[(i, i)])
    }
}

/// Incrementally built echelon basis of a subspace of `F^dim`.
#[derive(Clone, Debug)]
pub struct SpanBasis<F> {
    dim: usize,
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> SpanBasis<F> {
    pub fn new(dim: usize) -> Self {
        Self { dim, rows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Remainder of `v` after elimination against the stored rows.
    pub fn reduce(&self, mut v: Vec<F>) -> Vec<F> {
        assert_eq!(v.len(), self.dim);
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let factor = v[*pivot].clone();
            for (c, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    v[c] = v[c].clone() - factor.clone() * x;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v.to_vec()).iter().all(F::is_zero)
    }

    /// Adds `v`; returns whether it enlarged the span.
    pub fn insert(&mut self, v: Vec<F>) -> bool {
        let r = self.reduce(v);
        let Some(pivot) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[pivot].inv().expect("nonzero pivot");
        let row = r.into_iter().map(|x| x * &inv).collect();
        self.rows.push((pivot, row));
        true
    }
}

/// A basis of the real solution space of `X A_k = B_k X` for all `k`, where
/// `X` ranges over `rows x cols` matrices with entries in `S`.
///
/// The equations are real-linear in the rational coordinates of `X`, which
/// makes this work uniformly over rationals, Gaussian rationals and
/// quaternions.
pub fn intertwiner_space<S: Scalar>(a: &[Matrix<S>], b: &[Matrix<S>]) -> Vec<Matrix<S>> {
    assert_eq!(a.len(), b.len(), "generator count mismatch");
    let Some(first) = a.first() else {
        return Vec::new();
    };
    let cols = first.rows;
    let rows = b[0].rows;
    let d = S::RING.real_dim();
    let unknowns = rows * cols * d;
    let mut columns: Vec<Vec<Rational>> = Vec::with_capacity(unknowns);
    for u in 0..unknowns {
        let mut coords = vec![Rational::zero(); unknowns];
        coords[u] = Rational::from_integer(1.into());
        let x = Matrix::<S>::from_real_coordinates(rows, cols, &coords);
        let mut image = Vec::new();
        for (ak, bk) in a.iter().zip(b) {
            image.extend(x.matmul(ak).sub(&bk.matmul(&x)).real_coordinates());
        }
        columns.push(image);
    }
    let system = Matrix::<Rational>::from_columns(columns[0].len(), &columns);
    system
        .nullspace()
        .into_iter()
        .map(|v| Matrix::from_real_coordinates(rows, cols, &v))
        .collect()
}

/// Picks an invertible element of the real span of `basis`: first the basis
/// elements themselves, then fixed small-integer combinations.
pub fn first_invertible<S: Scalar>(basis: &[Matrix<S>], is_invertible: impl Fn(&Matrix<S>) -> bool) -> Option<Matrix<S>> {
    if let Some(m) = basis.iter().find(|m| is_invertible(m)) {
        return Some(m.clone());
    }
    if basis.is_empty() {
        return None;
    }
    // Coefficients from a fixed linear congruential sequence keep the search
    // reproducible without pulling in a generator.
    let mut state: u64 = 0x2545_f491_4f6c_dd1d;
    for attempt in 0..64 {
        let mut acc = Matrix::zeros(basis[0].rows(), basis[0].cols());
        for (k, m) in basis.iter().enumerate() {
            let coeff = if attempt == 0 {
                k as i64 + 1
            } else {
                state = state.wrapping_mul(6_364_136_223_846_793_005).wrapping_add(1_442_695_040_888_963_407);
                ((state >> 33) % 7) as i64 - 3
            };
            if coeff != 0 {
                acc = acc.add(&m.scale_right(&S::from_rational(Rational::from_integer(coeff.into()))));
            }
        }
        if is_invertible(&acc) {
            return Some(acc);
        }
    }
    None
}
