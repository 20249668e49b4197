//! Which faces of a degenerate cell are less degenerate than the cell.
//!
//! For simplices, `i` reduces `x` when `dgn(x δ_i) = dgn(x) - 1` and properly
//! reduces `x` when `x = x δ_i σ_i`. For cubes, `i` reduces `x` when
//! `dgn(x α^ι_i) = dgn(x) - 1` for some sign `ι`. All predicates here are
//! computed from these definitions through the action, not read off the
//! stored decomposition.

use alloc::vec::Vec;

use serde::Serialize;

use super::{Cell, ComplexError, SkeletalComplex};
use crate::shape::{Cube, CubeMorphism, Shape, Simplex, SimplexMorphism};

/// Reduction data of a single cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellReductions {
    pub dgn: usize,
    /// Indices that reduce the cell, ascending.
    pub reducing: Vec<usize>,
    /// Indices that properly reduce the cell, ascending (simplices only).
    pub properly_reducing: Vec<usize>,
}

impl SkeletalComplex<Simplex> {
    pub fn reduces(&self, c: &Cell<Simplex>, i: usize) -> Result<bool, ComplexError> {
        let n = c.dim();
        if n == 0 || i > n {
            return Err(ComplexError::IndexOutOfRange { index: i, dim: n });
        }
        let face = self.act(c, &SimplexMorphism::face(n, i))?;
        Ok(face.dgn() + 1 == c.dgn())
    }

    /// `x = x δ_i σ_i`; never true for `i = dim x`, where `σ_i` does not exist.
    pub fn properly_reduces(&self, c: &Cell<Simplex>, i: usize) -> Result<bool, ComplexError> {
        let n = c.dim();
        if n == 0 || i > n {
            return Err(ComplexError::IndexOutOfRange { index: i, dim: n });
        }
        if i == n {
            return Ok(false);
        }
        let loop_map = Simplex::compose(
            &SimplexMorphism::face(n, i),
            &SimplexMorphism::degeneracy(n - 1, i),
        )?;
        Ok(self.act(c, &loop_map)? == *c)
    }

    pub fn reduction_profile(&self, c: &Cell<Simplex>) -> Result<CellReductions, ComplexError> {
        let n = c.dim();
        let mut reducing = Vec::new();
        let mut properly_reducing = Vec::new();
        if n > 0 {
            for i in 0..=n {
                if self.reduces(c, i)? {
                    reducing.push(i);
                }
                if self.properly_reduces(c, i)? {
                    properly_reducing.push(i);
                }
            }
        }
        Ok(CellReductions {
            dgn: c.dgn(),
            reducing,
            properly_reducing,
        })
    }
}

impl SkeletalComplex<Cube> {
    /// Whether `dgn(x α^ι_i) = dgn(x) - 1` for some `ι`; `1 <= i <= dim x`.
    pub fn reduces(&self, c: &Cell<Cube>, i: usize) -> Result<bool, ComplexError> {
        let n = c.dim();
        if i == 0 || i > n {
            return Err(ComplexError::IndexOutOfRange { index: i, dim: n });
        }
        for sign in 0..2 {
            let face = self.act(c, &CubeMorphism::face(n, i, sign))?;
            if face.dgn() + 1 == c.dgn() {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn reduction_profile(&self, c: &Cell<Cube>) -> Result<CellReductions, ComplexError> {
        let mut reducing = Vec::new();
        for i in 1..=c.dim() {
            if self.reduces(c, i)? {
                reducing.push(i);
            }
        }
        Ok(CellReductions {
            dgn: c.dgn(),
            reducing,
            properly_reducing: Vec::new(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_degeneracy_properly_reduces_at_its_index() {
        let mut x: SkeletalComplex<Simplex> = SkeletalComplex::new(1, 5).unwrap();
        let v = x.add_generator("v", 0, Vec::new()).unwrap();
        let w = x.add_generator("w", 0, Vec::new()).unwrap();
        let e = x
            .add_generator("e", 1, alloc::vec![x.nondegenerate(w), x.nondegenerate(v)])
            .unwrap();
        let xe = x.nondegenerate(e);
        for i in 0..=1 {
            let c = x.act(&xe, &SimplexMorphism::degeneracy(1, i)).unwrap();
            assert!(x.properly_reduces(&c, i).unwrap());
            let p = x.reduction_profile(&c).unwrap();
            assert_eq!(p.properly_reducing, alloc::vec![i]);
            assert_eq!(p.dgn, 1);
        }
        assert!(x.reduction_profile(&xe).unwrap().reducing.is_empty());
        assert!(x.reduces(&xe, 2).is_err());
    }
}
