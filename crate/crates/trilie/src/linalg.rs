//! Dense exact linear algebra: vectors, matrices, row reduction, subspaces.

use std::fmt;

use crate::scalar::Scalar;

pub type Vector = Vec<Scalar>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinAlgError {
    #[error("ambient dimensions differ ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("basis labels are not pairwise distinct")]
    DuplicateLabel,
}

pub fn zero_vec(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `y += a * x`
pub fn axpy(y: &mut [Scalar], a: &Scalar, x: &[Scalar]) {
    debug_assert_eq!(y.len(), x.len());
    if a.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += &(a * xi);
        }
    }
}

pub fn scale_vec(a: &Scalar, x: &[Scalar]) -> Vector {
    x.iter().map(|xi| a * xi).collect()
}

pub fn add_vec(x: &[Scalar], y: &[Scalar]) -> Vector {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn sub_vec(x: &[Scalar], y: &[Scalar]) -> Vector {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

/// Indices and values of the nonzero coordinates.
pub fn support(v: &[Scalar]) -> Vec<(usize, &Scalar)> {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

pub fn fmt_vec(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(","))
}

/// A vector space with a chosen, labelled basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasedSpace {
    labels: Vec<String>,
}

impl BasedSpace {
    pub fn new(labels: Vec<String>) -> Result<Self, LinAlgError> {
        let mut sorted = labels.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != labels.len() {
            return Err(LinAlgError::DuplicateLabel);
        }
        Ok(BasedSpace { labels })
    }

    /// Basis `e1, …, en`.
    pub fn standard(n: usize) -> Self {
        Self::with_prefix("e", n)
    }

    pub fn with_prefix(prefix: &str, n: usize) -> Self {
        BasedSpace { labels: (1..=n).map(|i| format!("{prefix}{i}")).collect() }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {}", fmt_vec(self.row(i)))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn scalar(n: usize, c: &Scalar) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn from_rows(cols: usize, rows: &[Vector]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length");
            data.extend(r.iter().cloned());
        }
        Matrix { rows: rows.len(), cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(rows: usize, cols: &[Vector]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    /// Matrix unit with a single `1` at `(i, j)`.
    pub fn unit(rows: usize, cols: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        m.set(i, j, Scalar::one());
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &Scalar) {
        self.data[i * self.cols + j] += v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Row-major entries; the coordinates of the matrix in the matrix-unit basis
    /// ordered by (row, column).
    pub fn flat(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "matrix-vector size");
        let mut out = zero_vec(self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *o += &(a * x);
                }
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product size");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix { rows: self.rows, cols: self.cols, data: add_vec(&self.data, &rhs.data) }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix { rows: self.rows, cols: self.cols, data: sub_vec(&self.data, &rhs.data) }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: scale_vec(c, &self.data) }
    }

    /// `self += c * rhs`
    pub fn axpy(&mut self, c: &Scalar, rhs: &Matrix) {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        axpy(&mut self.data, c, &rhs.data);
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&Scalar::from_int(-1))
    }

    /// `[self, rhs] = self·rhs − rhs·self`
    pub fn commutator(&self, rhs: &Matrix) -> Matrix {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    /// Inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Scalar::one());
        }
        let (r, pivots) = rref(&aug);
        if pivots.len() < n || (n > 0 && pivots[n - 1] >= n) {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows + rhs.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..rhs.rows {
            for j in 0..rhs.cols {
                out.set(self.rows + i, self.cols + j, rhs.get(i, j).clone());
            }
        }
        out
    }
}

/// Incremental Gauss-Jordan elimination. Rows are kept in reduced echelon form
/// at every step, so pushing equations one at a time never needs more memory
/// than the rank.
#[derive(Debug, Clone)]
pub struct RowReducer {
    cols: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl RowReducer {
    pub fn new(cols: usize) -> Self {
        RowReducer { cols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the current rows (in place).
    pub fn reduce(&self, v: &mut [Scalar]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = -v[p].clone();
                axpy(v, &c, row);
            }
        }
    }

    /// Adds a row; returns true when it increased the rank.
    pub fn push(&mut self, mut v: Vector) -> bool {
        assert_eq!(v.len(), self.cols, "row length");
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = v[p].recip().expect("nonzero pivot");
        for c in v.iter_mut() {
            *c *= &inv;
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = -row[p].clone();
                axpy(row, &c, &v);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn into_parts(self) -> (Vec<Vector>, Vec<usize>) {
        (self.rows, self.pivots)
    }

    /// Kernel of the accumulated system, as a canonical subspace.
    pub fn kernel(&self) -> Subspace {
        kernel_from_rref(self.cols, &self.rows, &self.pivots)
    }
}

/// Reduced row echelon form: the nonzero rows and their pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut rr = RowReducer::new(m.cols);
    for i in 0..m.rows {
        rr.push(m.row(i).to_vec());
    }
    let (rows, pivots) = rr.into_parts();
    (Matrix::from_rows(m.cols, &rows), pivots)
}

fn kernel_from_rref(cols: usize, rows: &[Vector], pivots: &[usize]) -> Subspace {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for f in (0..cols).filter(|&j| !is_pivot[j]) {
        let mut v = zero_vec(cols);
        v[f] = Scalar::one();
        for (row, &p) in rows.iter().zip(pivots) {
            v[p] = -row[f].clone();
        }
        basis.push(v);
    }
    Subspace::span(cols, &basis)
}

/// Exact kernel of a matrix.
pub fn nullspace(m: &Matrix) -> Subspace {
    let (r, pivots) = rref(m);
    let rows: Vec<Vector> = (0..r.rows()).map(|i| r.row(i).to_vec()).collect();
    kernel_from_rref(m.cols, &rows, &pivots)
}

/// Particular solution of `m x = b` with every free variable set to zero,
/// or `None` when the system is inconsistent.
pub fn solve(m: &Matrix, b: &[Scalar]) -> Option<Vector> {
    assert_eq!(b.len(), m.rows, "right-hand side length");
    let mut aug = Matrix::zeros(m.rows, m.cols + 1);
    for i in 0..m.rows {
        for j in 0..m.cols {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, m.cols, b[i].clone());
    }
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&m.cols) {
        return None;
    }
    let mut x = zero_vec(m.cols);
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = r.get(i, m.cols).clone();
    }
    Some(x)
}

/// A subspace of `F^n`, stored as the nonzero rows of its reduced row echelon
/// form. Two subspaces are equal exactly when their stored data is equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| unit_vec(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(ambient: usize, vectors: &[Vector]) -> Self {
        let mut rr = RowReducer::new(ambient);
        for v in vectors {
            rr.push(v.clone());
        }
        let (basis, pivots) = rr.into_parts();
        Subspace { ambient, basis, pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    /// `v` minus its component along the pivot directions.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                let c = -w[p].clone();
                axpy(&mut w, &c, row);
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector outside ambient space");
        is_zero_vec(&self.reduce(v))
    }

    /// Coefficients of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|b| other.contains(b))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinAlgError> {
        if self.ambient != other.ambient {
            return Err(LinAlgError::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        self.check_ambient(other)?;
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Ok(Subspace::span(self.ambient, &all))
    }

    /// Intersection via the kernel of `(a, b) ↦ Σ aᵢuᵢ − Σ bⱼvⱼ`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        self.check_ambient(other)?;
        let mut cols = self.basis.clone();
        cols.extend(other.basis.iter().map(|v| scale_vec(&Scalar::from_int(-1), v)));
        let stacked = Matrix::from_cols(self.ambient, &cols);
        let ker = nullspace(&stacked);
        let k = self.dim();
        let vectors: Vec<Vector> = ker
            .basis
            .iter()
            .map(|c| {
                let mut w = zero_vec(self.ambient);
                for (a, u) in c[..k].iter().zip(&self.basis) {
                    axpy(&mut w, a, u);
                }
                w
            })
            .collect();
        Ok(Subspace::span(self.ambient, &vectors))
    }

    /// Image under a linear map.
    pub fn image(&self, m: &Matrix) -> Subspace {
        let vs: Vec<Vector> = self.basis.iter().map(|b| m.apply(b)).collect();
        Subspace::span(m.rows(), &vs)
    }

    /// `{ v : m v ∈ self }`.
    pub fn preimage(&self, m: &Matrix) -> Subspace {
        let q = quotient_basis(self);
        nullspace(&q.project.mul(m))
    }
}

/// Column space of a matrix.
pub fn image(m: &Matrix) -> Subspace {
    let cols: Vec<Vector> = (0..m.cols()).map(|j| m.col(j)).collect();
    Subspace::span(m.rows(), &cols)
}

/// Coset representatives of `F^n / sub` and the projection onto them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    /// The non-pivot coordinates of `sub`, in increasing order.
    pub reps: Vec<usize>,
    /// `reps.len() × n` matrix sending a vector to its coset coordinates.
    pub project: Matrix,
}

impl Quotient {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// The representative `Σ cₖ e_{reps[k]}` of a coset.
    pub fn lift(&self, coords: &[Scalar]) -> Vector {
        let n = self.project.cols();
        let mut v = zero_vec(n);
        for (c, &r) in coords.iter().zip(&self.reps) {
            v[r] = c.clone();
        }
        v
    }

    /// `n × reps.len()` inclusion of the representatives.
    pub fn lift_matrix(&self) -> Matrix {
        let n = self.project.cols();
        let cols: Vec<Vector> = self.reps.iter().map(|&r| unit_vec(n, r)).collect();
        Matrix::from_cols(n, &cols)
    }
}

pub fn quotient_basis(sub: &Subspace) -> Quotient {
    let n = sub.ambient_dim();
    let mut is_pivot = vec![false; n];
    for &p in sub.pivots() {
        is_pivot[p] = true;
    }
    let reps: Vec<usize> = (0..n).filter(|&j| !is_pivot[j]).collect();
    let mut project = Matrix::zeros(reps.len(), n);
    for j in 0..n {
        let w = sub.reduce(&unit_vec(n, j));
        for (k, &r) in reps.iter().enumerate() {
            project.set(k, j, w[r].clone());
        }
    }
    Quotient { reps, project }
}

/// A linear map between based spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearHom {
    pub source: BasedSpace,
    pub target: BasedSpace,
    pub matrix: Matrix,
}

impl LinearHom {
    pub fn new(source: BasedSpace, target: BasedSpace, matrix: Matrix) -> Result<Self, LinAlgError> {
        if matrix.rows() != target.dim() {
            return Err(LinAlgError::DimensionMismatch { expected: target.dim(), got: matrix.rows() });
        }
        if matrix.cols() != source.dim() {
            return Err(LinAlgError::DimensionMismatch { expected: source.dim(), got: matrix.cols() });
        }
        Ok(LinearHom { source, target, matrix })
    }

    pub fn kernel(&self) -> Subspace {
        nullspace(&self.matrix)
    }

    pub fn image(&self) -> Subspace {
        image(&self.matrix)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn kernel_of_zero_and_identity() {
        assert_eq!(nullspace(&Matrix::zeros(2, 2)), Subspace::full(2));
        assert_eq!(nullspace(&Matrix::identity(3)), Subspace::zero(3));
    }

    #[test]
    fn kernel_of_two_row_matrix() {
        let m = Matrix::from_rows(3, &[v(&[1, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(nullspace(&m), Subspace::span(3, &[v(&[1, -1, 0])]));
    }

    #[test]
    fn sum_and_intersection() {
        let u = Subspace::span(3, &[v(&[1, 1, 0]), v(&[0, 0, 1])]);
        let w = Subspace::span(3, &[v(&[0, 1, 1])]);
        assert_eq!(u.intersection(&w).unwrap(), Subspace::zero(3));
        assert_eq!(u.sum(&w).unwrap(), Subspace::full(3));
        assert_eq!(u.sum(&u).unwrap(), u);
        assert_eq!(u.intersection(&u).unwrap(), u);
        assert!(u.sum(&Subspace::zero(2)).is_err());
    }

    #[test]
    fn quotient_reps_are_non_pivots() {
        let s = Subspace::span(3, &[v(&[1, 1, 0])]);
        let q = quotient_basis(&s);
        assert_eq!(q.reps, vec![1, 2]);
        assert_eq!(q.project.mul(&q.lift_matrix()), Matrix::identity(2));
        // e1 ≡ −e2 modulo the line
        assert_eq!(q.project.apply(&v(&[1, 0, 0])), v(&[-1, 0]));
        let full = quotient_basis(&Subspace::full(2));
        assert!(full.reps.is_empty());
        assert_eq!(quotient_basis(&Subspace::zero(2)).project, Matrix::identity(2));
    }

    #[test]
    fn solve_picks_zero_free_variables() {
        let m = Matrix::from_rows(3, &[v(&[1, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(solve(&m, &v(&[2, 3])), Some(v(&[2, 0, 3])));
        let bad = Matrix::from_rows(1, &[v(&[0])]);
        assert_eq!(solve(&bad, &v(&[1])), None);
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_rows(2, &[v(&[2, 1]), v(&[1, 1])]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert!(Matrix::from_rows(2, &[v(&[1, 2]), v(&[2, 4])]).inverse().is_none());
    }

    #[test]
    fn preimage_of_line() {
        let m = Matrix::from_rows(2, &[v(&[1, 0]), v(&[0, 0])]);
        let line = Subspace::span(2, &[v(&[0, 1])]);
        assert_eq!(line.preimage(&m), Subspace::span(2, &[v(&[0, 1])]));
    }
}
