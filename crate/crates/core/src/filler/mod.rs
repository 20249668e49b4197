//! Spheres, their fillers, and the coskeletality check.
//!
//! Two independent routes find fillers: the constructive algorithms, which
//! build a filler out of the least degenerate face and replay every step of
//! the argument as a runtime assertion, and the brute-force oracle, which
//! scans every cell of the right dimension.

mod cubical;
pub(crate) mod enumerate;
mod globular;
mod simplicial;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::Serialize;

use crate::complex::{Cell, ComplexError, SkeletalComplex};
use crate::shape::{CycleEquation, Cyclic, Shape};

pub use enumerate::{coskeletal_up_to, Coverage, LevelReport, SearchOptions, VerificationReport};

/// A `k`-sphere candidate: `(k-1)`-cells in the shape's face listing order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sphere<S: Shape> {
    pub k: usize,
    pub faces: Vec<Cell<S>>,
}

impl<S: Shape> Sphere<S> {
    pub fn new(k: usize, faces: Vec<Cell<S>>) -> Self {
        Self { k, faces }
    }

    /// The sphere in the cell syntax of the complex file format.
    pub fn literal(&self, x: &SkeletalComplex<S>) -> String {
        let parts: Vec<String> = self.faces.iter().map(|c| x.cell_literal(c)).collect();
        parts.join(", ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FillError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("a {k}-sphere needs {expected} faces, found {found}")]
    Arity {
        k: usize,
        expected: usize,
        found: usize,
    },
    #[error("sphere dimension must be at least 1")]
    ZeroSphere,
    #[error("face {index} has dimension {found}, expected {expected}")]
    FaceDimension {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("constructive filler assertion failed: {0}")]
    AlgorithmViolation(String),
    #[error("two distinct degenerate cells share a boundary: {0}")]
    Uniqueness(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FillStatus {
    Filled,
    NoFiller,
    NotApplicable,
    /// More than one cell has the sphere as boundary (oracle only).
    Multiple,
}

impl FillStatus {
    pub fn name(self) -> &'static str {
        match self {
            FillStatus::Filled => "filled",
            FillStatus::NoFiller => "no_filler",
            FillStatus::NotApplicable => "not_applicable",
            FillStatus::Multiple => "multiple",
        }
    }
}

/// The indices that drive a constructive filler.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionProfile {
    /// Minimal degeneracy among the faces.
    pub r: usize,
    /// First position (ordinal, not listing index) attaining `r`.
    pub m: usize,
    /// Sign attaining `r` at `m` (cubes only).
    pub m_sign: Option<u8>,
    /// Ordinals in the degeneracy part of the decomposition of the face at `m`.
    pub big_m: Vec<usize>,
    /// One above the largest element of `big_m` (simplices only).
    pub l: Option<usize>,
}

/// Which branch of the construction justified one face.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub face: String,
    pub branch: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FillResult<S: Shape> {
    pub status: FillStatus,
    pub filler: Option<Cell<S>>,
    /// Every cell whose boundary is the sphere (oracle only).
    pub witnesses: Vec<Cell<S>>,
    pub profile: Option<ReductionProfile>,
    pub trace: Vec<TraceStep>,
    /// Why a constructive filler did not apply.
    pub reason: Option<String>,
}

impl<S: Shape> FillResult<S> {
    pub fn not_applicable(reason: String) -> Self {
        Self {
            status: FillStatus::NotApplicable,
            filler: None,
            witnesses: Vec::new(),
            profile: None,
            trace: Vec::new(),
            reason: Some(reason),
        }
    }

    pub fn filled(
        filler: Cell<S>,
        profile: Option<ReductionProfile>,
        trace: Vec<TraceStep>,
    ) -> Self {
        Self {
            status: FillStatus::Filled,
            filler: Some(filler),
            witnesses: Vec::new(),
            profile,
            trace,
            reason: None,
        }
    }

    pub fn summary(&self, x: &SkeletalComplex<S>) -> FillSummary {
        FillSummary {
            status: self.status,
            filler: self.filler.map(|c| x.cell_literal(&c)),
            witnesses: self.witnesses.iter().map(|c| x.cell_literal(c)).collect(),
            profile: self.profile.clone(),
            trace: self.trace.clone(),
            reason: self.reason.clone(),
        }
    }
}

/// Serializable form of a [`FillResult`], with cells as literals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FillSummary {
    pub status: FillStatus,
    pub filler: Option<String>,
    pub witnesses: Vec<String>,
    pub profile: Option<ReductionProfile>,
    pub trace: Vec<TraceStep>,
    pub reason: Option<String>,
}

fn check_shape<S: Shape>(s: &Sphere<S>) -> Result<(), FillError> {
    if s.k == 0 {
        return Err(FillError::ZeroSphere);
    }
    let expected = S::face_count(s.k);
    if s.faces.len() != expected {
        return Err(FillError::Arity {
            k: s.k,
            expected,
            found: s.faces.len(),
        });
    }
    for (index, c) in s.faces.iter().enumerate() {
        if c.dim() != s.k - 1 {
            return Err(FillError::FaceDimension {
                index,
                expected: s.k - 1,
                found: c.dim(),
            });
        }
    }
    Ok(())
}

/// The first cycle equation the faces violate, or `None` for a sphere.
pub fn first_violation<S: Shape>(
    x: &SkeletalComplex<S>,
    s: &Sphere<S>,
) -> Result<Option<CycleEquation>, FillError> {
    check_shape(s)?;
    if s.k < 2 {
        return Ok(None);
    }
    for eq in S::cycle_equations(s.k) {
        let a = x.act(&s.faces[eq.outer], &S::face_map(s.k - 1, eq.inner))?;
        let b = x.act(&s.faces[eq.outer2], &S::face_map(s.k - 1, eq.inner2))?;
        if a != b {
            return Ok(Some(eq));
        }
    }
    Ok(None)
}

pub fn is_sphere<S: Shape>(x: &SkeletalComplex<S>, s: &Sphere<S>) -> Result<bool, FillError> {
    Ok(first_violation(x, s)?.is_none())
}

/// The faces of a cell of positive dimension, as a sphere.
pub fn boundary<S: Shape>(x: &SkeletalComplex<S>, c: &Cell<S>) -> Result<Sphere<S>, FillError> {
    if c.dim() == 0 {
        return Err(FillError::ZeroSphere);
    }
    Ok(Sphere::new(c.dim(), x.faces(c)?))
}

/// Exhaustive scan of the `k`-cells for those with the given boundary.
/// Refuses when there are more than `cell_budget` candidates.
pub fn brute_force_fill<S: Shape>(
    x: &SkeletalComplex<S>,
    s: &Sphere<S>,
    cell_budget: usize,
) -> Result<FillResult<S>, FillError> {
    check_shape(s)?;
    let count = x.cell_count(s.k);
    if count > cell_budget {
        return Err(ComplexError::Budget {
            what: format!("scanning the {}-cells", s.k),
            limit: cell_budget,
        }
        .into());
    }
    let mut witnesses = Vec::new();
    for c in x.cells_of_dim(s.k) {
        if x.faces(&c)? == s.faces {
            witnesses.push(c);
        }
    }
    let degenerate: Vec<&Cell<S>> = witnesses.iter().filter(|c| c.is_degenerate()).collect();
    if degenerate.len() > 1 {
        return Err(FillError::Uniqueness(format!(
            "{} and {}",
            x.cell_literal(degenerate[0]),
            x.cell_literal(degenerate[1])
        )));
    }
    let status = match witnesses.len() {
        0 => FillStatus::NoFiller,
        1 => FillStatus::Filled,
        _ => FillStatus::Multiple,
    };
    Ok(FillResult {
        status,
        filler: (witnesses.len() == 1).then(|| witnesses[0]),
        witnesses,
        profile: None,
        trace: Vec::new(),
        reason: None,
    })
}

/// Shapes with a constructive filler for sufficiently degenerate spheres.
pub trait ConstructiveFill: Shape {
    /// Builds a filler when the sphere meets the algorithm's preconditions,
    /// checking every intermediate claim. Returns `NotApplicable` otherwise.
    fn constructive_fill(
        x: &SkeletalComplex<Self>,
        s: &Sphere<Self>,
    ) -> Result<FillResult<Self>, FillError>;
}

impl ConstructiveFill for Cyclic {
    fn constructive_fill(
        _: &SkeletalComplex<Self>,
        s: &Sphere<Self>,
    ) -> Result<FillResult<Self>, FillError> {
        check_shape(s)?;
        Ok(FillResult::not_applicable(
            "no constructive filler for cyclic spheres".into(),
        ))
    }
}

pub fn constructive_fill<S: ConstructiveFill>(
    x: &SkeletalComplex<S>,
    s: &Sphere<S>,
) -> Result<FillResult<S>, FillError> {
    S::constructive_fill(x, s)
}

pub(crate) fn violation(msg: String) -> FillError {
    FillError::AlgorithmViolation(msg)
}
