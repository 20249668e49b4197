//! The underlying simplicial set of a cyclic complex: the same cells, acted
//! on by the simplex category only.
//!
//! A cyclic cell can be non-degenerate as a simplex while degenerate as a
//! cyclic cell (a rotated degeneracy). Those cells become simplicial
//! generators, one dimension above the cyclic skeleton at most.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::BoundError;
use crate::complex::{Cell, ComplexError, SkeletalComplex};
use crate::shape::{Cyclic, CyclicMorphism, Shape, Simplex, SimplexMorphism};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Underlying {
    pub complex: SkeletalComplex<Simplex>,
    /// The cyclic cell behind each simplicial generator.
    pub sources: Vec<Cell<Cyclic>>,
    /// Every cyclic cell above the new skeleton is degenerate as a simplex.
    pub higher_all_degenerate: bool,
}

fn loop_at(d: usize, j: usize) -> Result<CyclicMorphism, ComplexError> {
    let f = Simplex::compose(
        &SimplexMorphism::face(d, j),
        &SimplexMorphism::degeneracy(d - 1, j),
    )?;
    Ok(f.into())
}

/// Whether `c = c δ_j σ_j` for some `j`, i.e. `c` is a simplicial degeneracy.
pub fn is_delta_degenerate(
    x: &SkeletalComplex<Cyclic>,
    c: &Cell<Cyclic>,
) -> Result<bool, ComplexError> {
    let d = c.dim();
    for j in 0..d {
        if x.act(c, &loop_at(d, j)?)? == *c {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Simplicial decomposition `c = y · ε` with `y` simplicially non-degenerate
/// and `ε` a simplex epi: `ε` merges exactly the `j` with `c = c δ_j σ_j`,
/// and `y` is `c` restricted along a section of `ε`.
pub fn delta_decompose(
    x: &SkeletalComplex<Cyclic>,
    c: &Cell<Cyclic>,
) -> Result<(Cell<Cyclic>, SimplexMorphism), ComplexError> {
    let d = c.dim();
    let mut merged = Vec::new();
    for j in 0..d {
        if x.act(c, &loop_at(d, j)?)? == *c {
            merged.push(j);
        }
    }
    let eps = SimplexMorphism::new(d, d - merged.len(), &[], &merged)?;
    let mu = Simplex::sections(&eps)?[0];
    let y = x.act(c, &mu.into())?;
    Ok((y, eps))
}

fn generator_name(x: &SkeletalComplex<Cyclic>, c: &Cell<Cyclic>) -> String {
    let id = &x.generator(c.gen).id;
    if Cyclic::is_identity(&c.epi) {
        id.clone()
    } else {
        format!("{id}~{}", format!("{}", c.epi).replace(' ', "."))
    }
}

pub fn underlying_simplicial(x: &SkeletalComplex<Cyclic>) -> Result<Underlying, BoundError> {
    let top = x.skeletal_level() + 1;
    if x.truncation() < top {
        return Err(BoundError::Argument(format!(
            "truncation {} is below the underlying skeleton {top}",
            x.truncation()
        )));
    }
    let mut u: SkeletalComplex<Simplex> = SkeletalComplex::new(top, x.truncation())?;
    let mut sources = Vec::new();
    let mut index: BTreeMap<Cell<Cyclic>, usize> = BTreeMap::new();
    for d in 0..=top {
        for c in x.cells_of_dim(d) {
            if is_delta_degenerate(x, &c)? {
                continue;
            }
            let mut faces = Vec::new();
            if d > 0 {
                for i in 0..=d {
                    let f = x.act(&c, &SimplexMorphism::face(d, i).into())?;
                    let (y, eps) = delta_decompose(x, &f)?;
                    let gen = *index.get(&y).ok_or_else(|| {
                        BoundError::Generation(format!(
                            "face {i} of {} has no simplicial generator",
                            x.cell_literal(&c)
                        ))
                    })?;
                    faces.push(u.cell(gen, eps)?);
                }
            }
            let g = u.add_generator(&generator_name(x, &c), d, faces)?;
            index.insert(c, g);
            sources.push(c);
        }
    }
    let mut higher_all_degenerate = true;
    for d in top + 1..=x.truncation() {
        for c in x.cells_of_dim(d) {
            if !is_delta_degenerate(x, &c)? {
                higher_all_degenerate = false;
            }
        }
    }
    Ok(Underlying {
        complex: u,
        sources,
        higher_all_degenerate,
    })
}
