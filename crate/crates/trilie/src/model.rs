//! The algebraic objects: coefficient algebras, 3-Lie and Lie algebras,
//! module structures, anchors and actions.
//!
//! Values here are raw data. Nothing is certified on construction; the
//! checkers in [`crate::axioms`] decide which laws hold.

use crate::linalg::{axpy, support, unit_vec, zero_vec, Matrix, Vector};
use crate::scalar::Scalar;
use crate::structure::{StructureConstants, Symmetry};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("dimension mismatch in {what}: expected {expected}, got {got}")]
    DimensionMismatch { what: &'static str, expected: usize, got: usize },
}

fn check_dim(what: &'static str, expected: usize, got: usize) -> Result<(), ModelError> {
    if expected != got {
        return Err(ModelError::DimensionMismatch { what, expected, got });
    }
    Ok(())
}

/// Commutative algebra with an optional unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommAlgebra {
    pub product: StructureConstants,
    pub unit: Option<Vector>,
}

impl CommAlgebra {
    pub fn new(dim: usize) -> Self {
        CommAlgebra { product: StructureConstants::new(2, dim, Symmetry::Symmetric), unit: None }
    }

    /// The ground field: one basis element `1` with `1·1 = 1`.
    pub fn field() -> Self {
        let mut a = Self::new(1);
        a.product.add(&[0, 0], &unit_vec(1, 0)).unwrap();
        a.unit = Some(unit_vec(1, 0));
        a
    }

    /// `F[t]/(t^n)` with basis `1, t, …, t^(n-1)`.
    pub fn truncated_polynomial(n: usize) -> Self {
        let mut a = Self::new(n);
        for i in 0..n {
            for j in i..n {
                if i + j < n {
                    a.product.add(&[i, j], &unit_vec(n, i + j)).unwrap();
                }
            }
        }
        if n > 0 {
            a.unit = Some(unit_vec(n, 0));
        }
        a
    }

    pub fn dim(&self) -> usize {
        self.product.dim()
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        self.product.mul2(a, b)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> Vector {
        self.product.basis(&[i, j])
    }

    /// Matrix of `b ↦ a·b`.
    pub fn mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(a, &unit_vec(n, j))).collect();
        Matrix::from_cols(n, &cols)
    }
}

/// Skew-symmetric ternary bracket.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeLie {
    pub bracket: StructureConstants,
}

impl ThreeLie {
    pub fn abelian(dim: usize) -> Self {
        ThreeLie { bracket: StructureConstants::new(3, dim, Symmetry::Skew) }
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }

    pub fn br(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
        self.bracket.mul3(x, y, z)
    }

    pub fn br_basis(&self, i: usize, j: usize, k: usize) -> Vector {
        self.bracket.basis(&[i, j, k])
    }

    /// `ad(x, y) = [x, y, ·]`
    pub fn ad(&self, x: &[Scalar], y: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|k| self.br(x, y, &unit_vec(n, k))).collect();
        Matrix::from_cols(n, &cols)
    }

    pub fn ad_basis(&self, i: usize, j: usize) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|k| self.br_basis(i, j, k)).collect();
        Matrix::from_cols(n, &cols)
    }

    /// The family `ad(e_i, e_j)` as a skew pair family on the algebra itself.
    pub fn ad_family(&self) -> PairFamily {
        let n = self.dim();
        let mut f = PairFamily::zero(n, n);
        for i in 0..n {
            for j in i + 1..n {
                f.set(i, j, self.ad_basis(i, j));
            }
        }
        f
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.is_zero()
    }
}

/// Skew-symmetric binary bracket.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlg {
    pub bracket: StructureConstants,
}

impl LieAlg {
    pub fn abelian(dim: usize) -> Self {
        LieAlg { bracket: StructureConstants::new(2, dim, Symmetry::Skew) }
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }

    pub fn br(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.bracket.mul2(x, y)
    }

    pub fn br_basis(&self, i: usize, j: usize) -> Vector {
        self.bracket.basis(&[i, j])
    }

    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|k| self.br(x, &unit_vec(n, k))).collect();
        Matrix::from_cols(n, &cols)
    }

    pub fn ad_family(&self) -> LinearFamily {
        let n = self.dim();
        LinearFamily { target: n, maps: (0..n).map(|i| self.ad(&unit_vec(n, i))).collect() }
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.is_zero()
    }
}

/// The action of a commutative algebra on a vector space: one matrix per
/// basis element of the algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AAction {
    pub maps: Vec<Matrix>,
    module_dim: usize,
}

impl AAction {
    pub fn new(module_dim: usize, maps: Vec<Matrix>) -> Result<Self, ModelError> {
        for m in &maps {
            check_dim("action matrix rows", module_dim, m.rows())?;
            check_dim("action matrix cols", module_dim, m.cols())?;
        }
        Ok(AAction { maps, module_dim })
    }

    pub fn zero(algebra_dim: usize, module_dim: usize) -> Self {
        AAction { maps: vec![Matrix::zeros(module_dim, module_dim); algebra_dim], module_dim }
    }

    /// `1` acts as the identity, every other basis element as zero. This is
    /// the natural action when the first basis element is the unit and the
    /// others span an ideal acting trivially.
    pub fn unit_only(algebra_dim: usize, module_dim: usize) -> Self {
        let mut a = Self::zero(algebra_dim, module_dim);
        if algebra_dim > 0 {
            a.maps[0] = Matrix::identity(module_dim);
        }
        a
    }

    pub fn algebra_dim(&self) -> usize {
        self.maps.len()
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    /// `α(a)` for a general element `a`.
    pub fn op(&self, a: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.module_dim, self.module_dim);
        for (i, c) in support(a) {
            m.axpy(c, &self.maps[i]);
        }
        m
    }

    /// `a·v`
    pub fn act(&self, a: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.module_dim);
        for (i, c) in support(a) {
            axpy(&mut out, c, &self.maps[i].apply(v));
        }
        out
    }

    pub fn act_basis(&self, i: usize, v: &[Scalar]) -> Vector {
        self.maps[i].apply(v)
    }
}

/// A skew family `φ(e_i, e_j)` of `target × target` matrices indexed by
/// pairs of basis elements of an `n`-dimensional space. Only `i<j` is stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairFamily {
    n: usize,
    target: usize,
    maps: Vec<Matrix>,
}

pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// All pairs `i<j` below `n`, in lexicographic order.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

impl PairFamily {
    pub fn zero(n: usize, target: usize) -> Self {
        let count = n * n.saturating_sub(1) / 2;
        PairFamily { n, target, maps: vec![Matrix::zeros(target, target); count] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn target(&self) -> usize {
        self.target
    }

    /// Sets `φ(e_i, e_j)`, storing the negative when `i > j`.
    pub fn set(&mut self, i: usize, j: usize, m: Matrix) {
        assert!(i != j, "diagonal of a skew family");
        if i < j {
            self.maps[pair_index(self.n, i, j)] = m;
        } else {
            self.maps[pair_index(self.n, j, i)] = m.neg();
        }
    }

    pub fn add_entry(&mut self, i: usize, j: usize, row: usize, col: usize, c: &Scalar) {
        assert!(i != j, "diagonal of a skew family");
        if i < j {
            self.maps[pair_index(self.n, i, j)].add_at(row, col, c);
        } else {
            self.maps[pair_index(self.n, j, i)].add_at(row, col, &-c);
        }
    }

    /// `φ(e_i, e_j)` as stored, with the sign to apply; `None` when `i == j`.
    pub fn get_ref(&self, i: usize, j: usize) -> Option<(bool, &Matrix)> {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => Some((false, &self.maps[pair_index(self.n, i, j)])),
            std::cmp::Ordering::Greater => Some((true, &self.maps[pair_index(self.n, j, i)])),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Matrix {
        match self.get_ref(i, j) {
            None => Matrix::zeros(self.target, self.target),
            Some((false, m)) => m.clone(),
            Some((true, m)) => m.neg(),
        }
    }

    /// `φ(e_i, e_j) v`
    pub fn apply_basis(&self, i: usize, j: usize, v: &[Scalar]) -> Vector {
        match self.get_ref(i, j) {
            None => zero_vec(self.target),
            Some((false, m)) => m.apply(v),
            Some((true, m)) => m.apply(v).iter().map(|c| -c).collect(),
        }
    }

    /// Bilinear extension `φ(x, y)`.
    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.target, self.target);
        for (i, a) in support(x) {
            for (j, b) in support(y) {
                if let Some((neg, mij)) = self.get_ref(i, j) {
                    let c = a * b;
                    m.axpy(&if neg { -c } else { c }, mij);
                }
            }
        }
        m
    }

    pub fn apply(&self, x: &[Scalar], y: &[Scalar], v: &[Scalar]) -> Vector {
        self.eval(x, y).apply(v)
    }

    /// Stored matrices for `i<j`, in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &Matrix)> + '_ {
        pairs(self.n).zip(self.maps.iter())
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }
}

/// A family `φ(e_i)` of square matrices, one per basis element; the binary
/// counterpart of [`PairFamily`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFamily {
    pub target: usize,
    pub maps: Vec<Matrix>,
}

impl LinearFamily {
    pub fn zero(n: usize, target: usize) -> Self {
        LinearFamily { target, maps: vec![Matrix::zeros(target, target); n] }
    }

    pub fn n(&self) -> usize {
        self.maps.len()
    }

    pub fn eval(&self, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.target, self.target);
        for (i, c) in support(x) {
            m.axpy(c, &self.maps[i]);
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }
}

/// `(L, A, ρ)` together with the action of `A` on `L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RinehartTriple {
    pub l: ThreeLie,
    pub a: CommAlgebra,
    pub rho: PairFamily,
    pub alpha: AAction,
}

impl RinehartTriple {
    pub fn new(l: ThreeLie, a: CommAlgebra, rho: PairFamily, alpha: AAction) -> Result<Self, ModelError> {
        check_dim("anchor domain", l.dim(), rho.n())?;
        check_dim("anchor target", a.dim(), rho.target())?;
        check_dim("action algebra", a.dim(), alpha.algebra_dim())?;
        check_dim("action module", l.dim(), alpha.module_dim())?;
        Ok(RinehartTriple { l, a, rho, alpha })
    }

    pub fn dim_l(&self) -> usize {
        self.l.dim()
    }

    pub fn dim_a(&self) -> usize {
        self.a.dim()
    }

    /// `ρ(x, y)(a)`
    pub fn rho_eval(&self, x: &[Scalar], y: &[Scalar], a: &[Scalar]) -> Result<Vector, ModelError> {
        check_dim("anchor argument", self.dim_l(), x.len())?;
        check_dim("anchor argument", self.dim_l(), y.len())?;
        check_dim("anchor argument", self.dim_a(), a.len())?;
        Ok(self.rho.apply(x, y, a))
    }

    /// `a·v` for `a ∈ A`, `v ∈ L`.
    pub fn a_act(&self, a: &[Scalar], v: &[Scalar]) -> Result<Vector, ModelError> {
        check_dim("module element", self.dim_a(), a.len())?;
        check_dim("module element", self.dim_l(), v.len())?;
        Ok(self.alpha.act(a, v))
    }

    /// A 3-Lie A-algebra: the same data with zero anchor.
    pub fn with_zero_anchor(l: ThreeLie, a: CommAlgebra, alpha: AAction) -> Result<Self, ModelError> {
        let rho = PairFamily::zero(l.dim(), a.dim());
        Self::new(l, a, rho, alpha)
    }
}

/// Lie-Rinehart data `(G, A, ρ)` with the action of `A` on `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieRinehartPair {
    pub g: LieAlg,
    pub a: CommAlgebra,
    pub rho: LinearFamily,
    pub alpha: AAction,
}

impl LieRinehartPair {
    pub fn new(g: LieAlg, a: CommAlgebra, rho: LinearFamily, alpha: AAction) -> Result<Self, ModelError> {
        check_dim("anchor domain", g.dim(), rho.n())?;
        check_dim("anchor target", a.dim(), rho.target)?;
        check_dim("action algebra", a.dim(), alpha.algebra_dim())?;
        check_dim("action module", g.dim(), alpha.module_dim())?;
        Ok(LieRinehartPair { g, a, rho, alpha })
    }
}

/// `β: L∧L → End(R)` with the target algebra `R` and the action of `A` on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionData {
    pub source: RinehartTriple,
    pub r: ThreeLie,
    pub alpha_r: AAction,
    pub beta: PairFamily,
}

impl ActionData {
    pub fn new(source: RinehartTriple, r: ThreeLie, alpha_r: AAction, beta: PairFamily) -> Result<Self, ModelError> {
        check_dim("action domain", source.dim_l(), beta.n())?;
        check_dim("action target", r.dim(), beta.target())?;
        check_dim("algebra acting on target", source.dim_a(), alpha_r.algebra_dim())?;
        check_dim("target module", r.dim(), alpha_r.module_dim())?;
        Ok(ActionData { source, r, alpha_r, beta })
    }
}

/// An action together with `∂: R → L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossedModuleData {
    pub action: ActionData,
    pub partial: Matrix,
}

impl CrossedModuleData {
    pub fn new(action: ActionData, partial: Matrix) -> Result<Self, ModelError> {
        check_dim("boundary rows", action.source.dim_l(), partial.rows())?;
        check_dim("boundary cols", action.r.dim(), partial.cols())?;
        Ok(CrossedModuleData { action, partial })
    }
}

/// Binary analogue of [`ActionData`]: `β: G → End(R)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieActionData {
    pub source: LieRinehartPair,
    pub r: LieAlg,
    pub alpha_r: AAction,
    pub beta: LinearFamily,
}

impl LieActionData {
    pub fn new(source: LieRinehartPair, r: LieAlg, alpha_r: AAction, beta: LinearFamily) -> Result<Self, ModelError> {
        check_dim("action domain", source.g.dim(), beta.n())?;
        check_dim("action target", r.dim(), beta.target)?;
        check_dim("algebra acting on target", source.a.dim(), alpha_r.algebra_dim())?;
        check_dim("target module", r.dim(), alpha_r.module_dim())?;
        Ok(LieActionData { source, r, alpha_r, beta })
    }
}

/// Binary analogue of [`CrossedModuleData`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieCrossedModule {
    pub action: LieActionData,
    pub partial: Matrix,
}

impl LieCrossedModule {
    pub fn new(action: LieActionData, partial: Matrix) -> Result<Self, ModelError> {
        check_dim("boundary rows", action.source.g.dim(), partial.rows())?;
        check_dim("boundary cols", action.r.dim(), partial.cols())?;
        Ok(LieCrossedModule { action, partial })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_index_is_dense() {
        let n = 5;
        let idx: Vec<usize> = pairs(n).map(|(i, j)| pair_index(n, i, j)).collect();
        assert_eq!(idx, (0..10).collect::<Vec<_>>());
    }

    #[test]
    fn truncated_polynomial_products() {
        let a = CommAlgebra::truncated_polynomial(2);
        assert_eq!(a.mul_basis(1, 1), zero_vec(2));
        assert_eq!(a.mul_basis(0, 1), unit_vec(2, 1));
    }

    #[test]
    fn pair_family_is_skew() {
        let mut f = PairFamily::zero(3, 2);
        f.set(0, 2, Matrix::identity(2));
        assert_eq!(f.get(2, 0), Matrix::identity(2).neg());
        assert!(f.get(1, 1).is_zero());
        let x = unit_vec(3, 0);
        assert!(f.eval(&x, &x).is_zero());
    }
}
