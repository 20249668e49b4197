//! Seeded random skeletal complexes.
//!
//! Generators are added dimension by dimension. Each new `d`-generator gets a
//! random `d`-sphere as attaching data, drawn by random descent through the
//! cycle-equation search; when descent keeps failing, the boundary of a
//! random existing `d`-cell is used instead, which is always a sphere.

use alloc::format;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::BoundError;
use crate::complex::{default_truncation, SkeletalComplex};
use crate::filler::enumerate::SphereSearch;
use crate::shape::Shape;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomParams {
    /// Largest number of generators per dimension (index = dimension); the
    /// count is drawn uniformly from `1..=max`. Missing entries mean 1.
    pub max_per_dim: Vec<usize>,
    /// Random descents tried per generator before falling back.
    pub attempts: u32,
    /// Largest number of cells tabulated while drawing attaching data.
    pub cell_budget: usize,
}

impl Default for RandomParams {
    fn default() -> Self {
        Self {
            max_per_dim: alloc::vec![3, 3, 2, 2],
            attempts: 64,
            cell_budget: 200_000,
        }
    }
}

impl RandomParams {
    fn max_at(&self, d: usize) -> usize {
        self.max_per_dim.get(d).copied().unwrap_or(1).max(1)
    }
}

/// A valid `n`-skeletal complex with truncation `2n + 2`, determined by `seed`.
pub fn random_skeletal_complex<S: Shape>(
    n: usize,
    params: &RandomParams,
    seed: u64,
) -> Result<SkeletalComplex<S>, BoundError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut x: SkeletalComplex<S> = SkeletalComplex::new(n, default_truncation(n))?;
    for d in 0..=n {
        let count = rng.gen_range(1..=params.max_at(d));
        for i in 0..count {
            let id = format!("g{d}_{i}");
            if d == 0 {
                x.add_generator(&id, 0, Vec::new())?;
                continue;
            }
            let t = x.tabulate(d - 1, params.cell_budget)?;
            let search = SphereSearch::new(&t, d);
            let mut faces = None;
            for _ in 0..params.attempts {
                if let Some(ids) = search.descend(&mut rng) {
                    faces = Some(ids.iter().map(|&c| t.cell(d - 1, c)).collect::<Vec<_>>());
                    break;
                }
            }
            let faces = match faces {
                Some(f) => f,
                None => {
                    let cells = x.cells_of_dim(d);
                    let c = cells[rng.gen_range(0..cells.len())];
                    x.faces(&c)?
                }
            };
            x.add_generator(&id, d, faces)?;
        }
    }
    let report = x.validate();
    if !report.is_valid() {
        return Err(BoundError::Generation(format!("seed {seed}: {report}")));
    }
    Ok(x)
}
