//! Finitely presented skeletal presheaves.
//!
//! A [`SkeletalComplex`] lists non-degenerate generators together with their
//! faces. Every cell is a pair (generator, canonical epimorphism), which is
//! its Eilenberg–Zilber decomposition, so the cells of dimension `k` are in
//! bijection with pairs of a generator `g` and an epi `k -> dim g`.

mod reduce;
mod tabulate;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use serde::Serialize;

use crate::shape::{word_dom_for_cod, CycleEquation, MorphismError, Shape, ShapeKind, MAX_DIM};

pub use reduce::CellReductions;
pub use tabulate::{CellId, TabulatedPresheaf};

/// A cell: `gen · epi`, with `epi` a canonical epimorphism onto the
/// generator's dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell<S: Shape> {
    pub gen: usize,
    pub epi: S::Morphism,
}

impl<S: Shape> Cell<S> {
    pub fn dim(&self) -> usize {
        S::dom(&self.epi)
    }

    /// Degeneracy: dimension minus the generator's dimension.
    pub fn dgn(&self) -> usize {
        S::dom(&self.epi) - S::cod(&self.epi)
    }

    pub fn is_degenerate(&self) -> bool {
        self.dgn() > 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorDecl<S: Shape> {
    pub id: String,
    pub dim: usize,
    /// Faces in the shape's listing order; empty for vertices.
    pub faces: Vec<Cell<S>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComplexError {
    #[error(transparent)]
    Morphism(#[from] MorphismError),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator `{0}` is declared twice")]
    DuplicateGenerator(String),
    #[error("generator `{id}` has dimension {dim} above the skeletal level {skeletal}")]
    AboveSkeleton {
        id: String,
        dim: usize,
        skeletal: usize,
    },
    #[error("generator `{id}` needs {expected} faces, got {found}")]
    Arity {
        id: String,
        expected: usize,
        found: usize,
    },
    #[error("face {face} of `{id}` has dimension {found}, expected {expected}")]
    FaceDimension {
        id: String,
        face: usize,
        expected: usize,
        found: usize,
    },
    #[error("cell refers to generator #{0}, which does not exist")]
    BadGeneratorIndex(usize),
    #[error("cell morphism {epi} is not an epimorphism onto dimension {dim}")]
    BadCell { epi: String, dim: usize },
    #[error("truncation {truncation} is below the skeletal level {skeletal} or above {MAX_DIM}")]
    BadTruncation { truncation: usize, skeletal: usize },
    #[error("dimension {dim} exceeds the truncation {truncation}")]
    Truncation { dim: usize, truncation: usize },
    #[error("morphism has codomain {found} but the cell has dimension {expected}")]
    Dimension { expected: usize, found: usize },
    #[error("index {index} is out of range for a cell of dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("{what} exceeds the budget of {limit}")]
    Budget { what: String, limit: usize },
    #[error("complex is {found}-skeletal at best, expected {expected}-skeletal")]
    NotSkeletal { expected: usize, found: usize },
    #[error("expected a {expected} complex, got {found}")]
    WrongShape {
        expected: ShapeKind,
        found: ShapeKind,
    },
    #[error("{0}")]
    Invalid(String),
}

/// One violated cycle equation or structural problem of a generator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationIssue {
    pub generator: String,
    pub equation: Option<CycleEquation>,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct ValidationReport {
    pub generators: usize,
    pub issues: Vec<ValidationIssue>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid ({} generators)", self.generators);
        }
        writeln!(f, "invalid ({} issues)", self.issues.len())?;
        for issue in &self.issues {
            writeln!(f, "  {}: {}", issue.generator, issue.message)?;
        }
        Ok(())
    }
}

/// Human-readable form of a cycle equation for `k`-spheres, e.g.
/// `c[d2]·d0 = c[d0]·d1`.
pub fn describe_equation<S: Shape>(k: usize, eq: &CycleEquation) -> String {
    format!(
        "c[{}]·{} = c[{}]·{}",
        S::face_gen(k, eq.outer),
        S::face_gen(k - 1, eq.inner),
        S::face_gen(k, eq.outer2),
        S::face_gen(k - 1, eq.inner2)
    )
}

/// A finitely presented `n`-skeletal presheaf, truncated at dimension `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletalComplex<S: Shape> {
    skeletal: usize,
    truncation: usize,
    gens: Vec<GeneratorDecl<S>>,
    ids: BTreeMap<String, usize>,
}

/// Default truncation for an `n`-skeletal complex.
pub fn default_truncation(skeletal: usize) -> usize {
    2 * skeletal + 2
}

fn face_arity<S: Shape>(dim: usize) -> usize {
    if dim == 0 {
        0
    } else {
        S::face_count(dim)
    }
}

impl<S: Shape> SkeletalComplex<S> {
    pub fn new(skeletal: usize, truncation: usize) -> Result<Self, ComplexError> {
        if truncation < skeletal || truncation > MAX_DIM {
            return Err(ComplexError::BadTruncation {
                truncation,
                skeletal,
            });
        }
        Ok(Self {
            skeletal,
            truncation,
            gens: Vec::new(),
            ids: BTreeMap::new(),
        })
    }

    /// An empty complex truncated at `2 n + 2`.
    pub fn with_default_truncation(skeletal: usize) -> Self {
        Self::new(skeletal, default_truncation(skeletal).min(MAX_DIM))
            .expect("default truncation is in range")
    }

    pub fn kind(&self) -> ShapeKind {
        S::KIND
    }

    pub fn skeletal_level(&self) -> usize {
        self.skeletal
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn set_truncation(&mut self, truncation: usize) -> Result<(), ComplexError> {
        if truncation < self.skeletal || truncation > MAX_DIM {
            return Err(ComplexError::BadTruncation {
                truncation,
                skeletal: self.skeletal,
            });
        }
        self.truncation = truncation;
        Ok(())
    }

    /// Largest generator dimension, if any generator exists.
    pub fn top_dim(&self) -> Option<usize> {
        self.gens.iter().map(|g| g.dim).max()
    }

    pub fn generators(&self) -> &[GeneratorDecl<S>] {
        &self.gens
    }

    pub fn generator(&self, idx: usize) -> &GeneratorDecl<S> {
        &self.gens[idx]
    }

    pub fn lookup(&self, id: &str) -> Option<usize> {
        self.ids.get(id).copied()
    }

    /// Adds a generator whose faces refer to previously added generators.
    pub fn add_generator(
        &mut self,
        id: &str,
        dim: usize,
        faces: Vec<Cell<S>>,
    ) -> Result<usize, ComplexError> {
        if self.ids.contains_key(id) {
            return Err(ComplexError::DuplicateGenerator(id.into()));
        }
        if dim > self.skeletal {
            return Err(ComplexError::AboveSkeleton {
                id: id.into(),
                dim,
                skeletal: self.skeletal,
            });
        }
        let expected = face_arity::<S>(dim);
        if faces.len() != expected {
            return Err(ComplexError::Arity {
                id: id.into(),
                expected,
                found: faces.len(),
            });
        }
        for (i, c) in faces.iter().enumerate() {
            self.check_cell(c)?;
            if c.dim() != dim - 1 {
                return Err(ComplexError::FaceDimension {
                    id: id.into(),
                    face: i,
                    expected: dim - 1,
                    found: c.dim(),
                });
            }
        }
        let idx = self.gens.len();
        self.gens.push(GeneratorDecl {
            id: id.into(),
            dim,
            faces,
        });
        self.ids.insert(id.into(), idx);
        Ok(idx)
    }

    fn check_cell(&self, c: &Cell<S>) -> Result<(), ComplexError> {
        let g = self
            .gens
            .get(c.gen)
            .ok_or(ComplexError::BadGeneratorIndex(c.gen))?;
        if !S::is_epi(&c.epi) || S::cod(&c.epi) != g.dim {
            return Err(ComplexError::BadCell {
                epi: c.epi.to_string(),
                dim: g.dim,
            });
        }
        Ok(())
    }

    /// `gen · epi`, checked.
    pub fn cell(&self, gen: usize, epi: S::Morphism) -> Result<Cell<S>, ComplexError> {
        let c = Cell { gen, epi };
        self.check_cell(&c)?;
        Ok(c)
    }

    /// The generator itself as a cell.
    pub fn nondegenerate(&self, gen: usize) -> Cell<S> {
        Cell {
            gen,
            epi: S::identity(self.gens[gen].dim),
        }
    }

    /// `c · f`, for `f` with codomain `dim c`.
    pub fn act(&self, c: &Cell<S>, f: &S::Morphism) -> Result<Cell<S>, ComplexError> {
        if S::cod(f) != c.dim() {
            return Err(ComplexError::Dimension {
                expected: c.dim(),
                found: S::cod(f),
            });
        }
        if S::dom(f) > self.truncation {
            return Err(ComplexError::Truncation {
                dim: S::dom(f),
                truncation: self.truncation,
            });
        }
        let h = S::compose(&c.epi, f)?;
        Ok(self.resolve(c.gen, h))
    }

    /// `gen · h` for an arbitrary `h` into the generator's dimension: the mono
    /// part of `h` is pushed into the attaching data one face at a time.
    fn resolve(&self, gen: usize, h: S::Morphism) -> Cell<S> {
        let (mut mono, mut pending) = S::factor(&h);
        let mut gen = gen;
        while let Some((idx, rest)) = S::split_mono(&mono) {
            let face = self.gens[gen].faces[idx];
            let h2 = S::compose(&face.epi, &rest).expect("attaching data has matching dimensions");
            let (m2, e2) = S::factor(&h2);
            pending = S::compose(&e2, &pending).expect("epis compose");
            gen = face.gen;
            mono = m2;
        }
        Cell { gen, epi: pending }
    }

    /// `c · w` for a word in functional order; the leftmost letter acts first.
    pub fn act_word(&self, c: &Cell<S>, word: &[S::Gen]) -> Result<Cell<S>, ComplexError> {
        let dom = word_dom_for_cod::<S>(c.dim(), word)?;
        let f = S::normalize(dom, word)?;
        self.act(c, &f)
    }

    /// The face of `c` at position `idx` of the face listing.
    pub fn face(&self, c: &Cell<S>, idx: usize) -> Result<Cell<S>, ComplexError> {
        let k = c.dim();
        if k == 0 || idx >= S::face_count(k) {
            return Err(ComplexError::IndexOutOfRange { index: idx, dim: k });
        }
        self.act(c, &S::face_map(k, idx))
    }

    /// All faces of a cell of positive dimension.
    pub fn faces(&self, c: &Cell<S>) -> Result<Vec<Cell<S>>, ComplexError> {
        let k = c.dim();
        (0..face_arity::<S>(k)).map(|i| self.face(c, i)).collect()
    }

    /// `(non-degenerate cell, epi)` with `c = y · epi`.
    pub fn ez_decompose(&self, c: &Cell<S>) -> (Cell<S>, S::Morphism) {
        (self.nondegenerate(c.gen), c.epi)
    }

    pub fn dgn(&self, c: &Cell<S>) -> usize {
        c.dgn()
    }

    /// Every cell of dimension `k`, generators in declaration order and epis
    /// in enumeration order.
    pub fn cells_of_dim(&self, k: usize) -> Vec<Cell<S>> {
        let mut out = Vec::new();
        for (gen, g) in self.gens.iter().enumerate() {
            for epi in S::epis(k, g.dim) {
                out.push(Cell { gen, epi });
            }
        }
        out
    }

    pub fn cell_count(&self, k: usize) -> usize {
        self.gens.iter().map(|g| S::epis(k, g.dim).len()).sum()
    }

    /// Checks dimensions and every cycle equation of every generator.
    pub fn validate(&self) -> ValidationReport {
        let mut issues = Vec::new();
        for g in &self.gens {
            if g.dim > self.skeletal {
                issues.push(ValidationIssue {
                    generator: g.id.clone(),
                    equation: None,
                    message: format!("dimension {} above skeletal level {}", g.dim, self.skeletal),
                });
            }
            if g.dim < 2 {
                continue;
            }
            for eq in S::cycle_equations(g.dim) {
                let lhs = self.act(&g.faces[eq.outer], &S::face_map(g.dim - 1, eq.inner));
                let rhs = self.act(&g.faces[eq.outer2], &S::face_map(g.dim - 1, eq.inner2));
                match (lhs, rhs) {
                    (Ok(a), Ok(b)) if a == b => {}
                    (Ok(a), Ok(b)) => issues.push(ValidationIssue {
                        generator: g.id.clone(),
                        equation: Some(eq),
                        message: format!(
                            "{} fails: {} ≠ {}",
                            describe_equation::<S>(g.dim, &eq),
                            self.cell_literal(&a),
                            self.cell_literal(&b)
                        ),
                    }),
                    (Err(e), _) | (_, Err(e)) => issues.push(ValidationIssue {
                        generator: g.id.clone(),
                        equation: Some(eq),
                        message: e.to_string(),
                    }),
                }
            }
        }
        ValidationReport {
            generators: self.gens.len(),
            issues,
        }
    }

    /// `x` for a generator, `x[s0 s2]` for a degenerate cell.
    pub fn cell_literal(&self, c: &Cell<S>) -> String {
        let id = &self.gens[c.gen].id;
        if S::is_identity(&c.epi) {
            id.clone()
        } else {
            format!("{id}[{}]", c.epi)
        }
    }

    /// Builds the table of all cells up to dimension `up_to`, refusing once
    /// more than `cell_budget` cells would be created.
    pub fn tabulate(
        &self,
        up_to: usize,
        cell_budget: usize,
    ) -> Result<TabulatedPresheaf<S>, ComplexError> {
        TabulatedPresheaf::build(self, up_to, cell_budget)
    }
}
