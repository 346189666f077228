//! Structure-constant tensors for binary and ternary products.

use crate::linalg::{axpy, is_zero_vec, support, zero_vec, Vector};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Skew,
    Symmetric,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StructureError {
    #[error("expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("coefficient vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("skew tuple {0:?} has a repeated index")]
    RepeatedIndex(Vec<usize>),
}

/// Multilinear product on `F^dim` given by its values on basis tuples.
///
/// Only canonical tuples are stored (`i<j<k` or `i<j` when skew, `i≤j` when
/// symmetric); every other tuple is obtained by sorting. Storage is a dense
/// table over `dim^arity` slots in which non-canonical slots stay empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StructureConstants {
    arity: usize,
    dim: usize,
    symmetry: Symmetry,
    table: Vec<Vector>,
}

impl StructureConstants {
    pub fn new(arity: usize, dim: usize, symmetry: Symmetry) -> Self {
        assert!(arity == 2 || arity == 3, "arity must be 2 or 3");
        StructureConstants { arity, dim, symmetry, table: vec![Vec::new(); dim.pow(arity as u32)] }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    fn slot(&self, sorted: &[usize]) -> usize {
        sorted.iter().fold(0, |acc, &i| acc * self.dim + i)
    }

    /// Sorts the tuple into a fixed buffer; returns the slot and the sign of
    /// the permutation, or `None` if a skew tuple has a repeated index.
    fn canonical(&self, idx: &[usize]) -> Option<(usize, bool)> {
        let n = idx.len();
        let mut t = [0usize; 3];
        t[..n].copy_from_slice(idx);
        let mut odd = false;
        for i in 0..n {
            for j in 0..n - 1 - i {
                if t[j] > t[j + 1] {
                    t.swap(j, j + 1);
                    odd = !odd;
                }
            }
        }
        if self.symmetry == Symmetry::Skew {
            if t[..n].windows(2).any(|w| w[0] == w[1]) {
                return None;
            }
        } else {
            odd = false;
        }
        Some((self.slot(&t[..n]), odd))
    }

    fn check_index(&self, idx: &[usize]) -> Result<(), StructureError> {
        if idx.len() != self.arity {
            return Err(StructureError::ArityMismatch { expected: self.arity, got: idx.len() });
        }
        if let Some(&i) = idx.iter().find(|&&i| i >= self.dim) {
            return Err(StructureError::IndexOutOfRange { index: i, dim: self.dim });
        }
        Ok(())
    }

    /// Adds `value` to the product of the given basis tuple (any order;
    /// the value is transported to the canonical tuple with the right sign).
    pub fn add(&mut self, idx: &[usize], value: &[Scalar]) -> Result<(), StructureError> {
        self.check_index(idx)?;
        if value.len() != self.dim {
            return Err(StructureError::DimensionMismatch { expected: self.dim, got: value.len() });
        }
        let (s, odd) = self.canonical(idx).ok_or_else(|| StructureError::RepeatedIndex(idx.to_vec()))?;
        let sign = if odd { Scalar::from_int(-1) } else { Scalar::one() };
        let dim = self.dim;
        let entry = &mut self.table[s];
        if entry.is_empty() {
            *entry = zero_vec(dim);
        }
        axpy(entry, &sign, value);
        if is_zero_vec(entry) {
            entry.clear();
        }
        Ok(())
    }

    /// Product of basis elements, as `(negate, stored vector)`; `None` means zero.
    pub fn basis_ref(&self, idx: &[usize]) -> Option<(bool, &Vector)> {
        let (s, odd) = self.canonical(idx)?;
        let e = &self.table[s];
        if e.is_empty() {
            None
        } else {
            Some((odd, e))
        }
    }

    /// Product of basis elements.
    pub fn basis(&self, idx: &[usize]) -> Vector {
        match self.basis_ref(idx) {
            None => zero_vec(self.dim),
            Some((false, v)) => v.clone(),
            Some((true, v)) => v.iter().map(|c| -c).collect(),
        }
    }

    /// `out += c · [e_idx]`
    pub fn accumulate_basis(&self, out: &mut [Scalar], c: &Scalar, idx: &[usize]) {
        if let Some((neg, v)) = self.basis_ref(idx) {
            if neg {
                axpy(out, &-c, v);
            } else {
                axpy(out, c, v);
            }
        }
    }

    /// Multilinear extension on arbitrary vectors.
    pub fn eval(&self, args: &[&[Scalar]]) -> Result<Vector, StructureError> {
        if args.len() != self.arity {
            return Err(StructureError::ArityMismatch { expected: self.arity, got: args.len() });
        }
        if let Some(a) = args.iter().find(|a| a.len() != self.dim) {
            return Err(StructureError::DimensionMismatch { expected: self.dim, got: a.len() });
        }
        Ok(self.eval_unchecked(args))
    }

    pub(crate) fn eval_unchecked(&self, args: &[&[Scalar]]) -> Vector {
        let mut out = zero_vec(self.dim);
        let supports: Vec<Vec<(usize, &Scalar)>> = args.iter().map(|a| support(a)).collect();
        if self.arity == 2 {
            for &(i, a) in &supports[0] {
                for &(j, b) in &supports[1] {
                    self.accumulate_basis(&mut out, &(a * b), &[i, j]);
                }
            }
        } else {
            for &(i, a) in &supports[0] {
                for &(j, b) in &supports[1] {
                    if self.symmetry == Symmetry::Skew && i == j {
                        continue;
                    }
                    let ab = a * b;
                    for &(k, c) in &supports[2] {
                        self.accumulate_basis(&mut out, &(&ab * c), &[i, j, k]);
                    }
                }
            }
        }
        out
    }

    /// Binary product shorthand.
    pub fn mul2(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        debug_assert_eq!(self.arity, 2);
        self.eval_unchecked(&[x, y])
    }

    /// Ternary product shorthand.
    pub fn mul3(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
        debug_assert_eq!(self.arity, 3);
        self.eval_unchecked(&[x, y, z])
    }

    /// Nonzero canonical entries in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, &Vector)> + '_ {
        let (dim, arity) = (self.dim, self.arity);
        self.table.iter().enumerate().filter(|(_, v)| !v.is_empty()).map(move |(s, v)| {
            let mut idx = vec![0; arity];
            let mut r = s;
            for k in (0..arity).rev() {
                idx[k] = r % dim;
                r /= dim;
            }
            (idx, v)
        })
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::unit_vec;

    #[test]
    fn skew_repeated_is_zero() {
        let mut sc = StructureConstants::new(3, 3, Symmetry::Skew);
        sc.add(&[0, 1, 2], &unit_vec(3, 0)).unwrap();
        assert!(is_zero_vec(&sc.basis(&[0, 0, 1])));
        assert_eq!(sc.basis(&[1, 0, 2]), vec![Scalar::from_int(-1), Scalar::zero(), Scalar::zero()]);
        assert_eq!(sc.basis(&[2, 0, 1]), unit_vec(3, 0));
        assert!(sc.add(&[0, 0, 1], &unit_vec(3, 0)).is_err());
    }

    #[test]
    fn non_canonical_input_is_transported() {
        let mut sc = StructureConstants::new(3, 3, Symmetry::Skew);
        sc.add(&[1, 0, 2], &unit_vec(3, 2)).unwrap();
        let (idx, v) = sc.entries().next().unwrap();
        assert_eq!(idx, vec![0, 1, 2]);
        assert_eq!(v[2], Scalar::from_int(-1));
    }

    #[test]
    fn symmetric_product() {
        let mut sc = StructureConstants::new(2, 2, Symmetry::Symmetric);
        sc.add(&[0, 1], &unit_vec(2, 1)).unwrap();
        assert_eq!(sc.basis(&[1, 0]), unit_vec(2, 1));
        assert!(is_zero_vec(&sc.basis(&[1, 1])));
    }

    #[test]
    fn arity_and_range_errors() {
        let sc = StructureConstants::new(3, 2, Symmetry::Skew);
        let x = unit_vec(2, 0);
        assert!(matches!(sc.eval(&[&x, &x]), Err(StructureError::ArityMismatch { .. })));
        let mut sc = sc;
        assert!(matches!(sc.add(&[0, 1, 4], &x), Err(StructureError::IndexOutOfRange { .. })));
    }

    #[test]
    fn cancelling_entries_are_dropped() {
        let mut sc = StructureConstants::new(2, 2, Symmetry::Skew);
        sc.add(&[0, 1], &unit_vec(2, 0)).unwrap();
        sc.add(&[1, 0], &unit_vec(2, 0)).unwrap();
        assert!(sc.is_zero());
    }
}
