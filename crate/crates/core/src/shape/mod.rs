//! Shape categories and their morphisms.
//!
//! Four categories are supported: the simplex category (finite non-empty
//! ordinals), the cube category (elementary cubes `I^n`), the reflexive globe
//! category and Connes' cyclic category. Every morphism is held in its
//! canonical form, so equality of morphisms is structural equality.
//!
//! Composition is functional throughout: `S::compose(f, g)` is `f ∘ g`, i.e.
//! `g` is applied first. Words of elementary generators are read the same way,
//! so the rightmost letter of a word acts first on points, while on cells of a
//! presheaf (where the action is contravariant) the leftmost letter acts first.

mod cube;
mod cyclic;
mod globe;
mod simplex;
pub(crate) mod word;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Debug, Display};
use core::hash::Hash;
use core::str::FromStr;

use serde::{Deserialize, Serialize};

pub use cube::{Cube, CubeGen, CubeMorphism, CubePoint};
pub use cyclic::{Cyclic, CyclicGen, CyclicMorphism};
pub use globe::{Globe, GlobeCell, GlobeGen, GlobeMorphism, GlobeSide};
pub use simplex::{Simplex, SimplexGen, SimplexMorphism};

/// Largest object dimension a morphism may touch. Bit masks over `u32` carry
/// the index sets, and a codomain `[n]` has `n + 1` elements.
pub const MAX_DIM: usize = 30;

/// Runtime tag for the four shape categories.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ShapeKind {
    Simplicial,
    Cubical,
    Globular,
    Cyclic,
}

impl ShapeKind {
    pub const ALL: [ShapeKind; 4] = [
        ShapeKind::Simplicial,
        ShapeKind::Cubical,
        ShapeKind::Globular,
        ShapeKind::Cyclic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ShapeKind::Simplicial => "simplicial",
            ShapeKind::Cubical => "cubical",
            ShapeKind::Globular => "globular",
            ShapeKind::Cyclic => "cyclic",
        }
    }
}

impl Display for ShapeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ShapeKind {
    type Err = MorphismError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "simplicial" | "simplex" | "delta" => Ok(ShapeKind::Simplicial),
            "cubical" | "cube" => Ok(ShapeKind::Cubical),
            "globular" | "globe" => Ok(ShapeKind::Globular),
            "cyclic" | "lambda" => Ok(ShapeKind::Cyclic),
            other => Err(MorphismError::UnknownShape(other.into())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MorphismError {
    #[error("cannot compose: left factor has domain {dom} but right factor has codomain {cod}")]
    Composition { dom: usize, cod: usize },
    #[error("cannot compose morphisms of different shape categories ({left} and {right})")]
    Category { left: ShapeKind, right: ShapeKind },
    #[error("generator `{gen}` cannot act at dimension {dim}")]
    Word { gen: String, dim: usize },
    #[error("point {point} is outside the domain of dimension {dim}")]
    Domain { point: String, dim: usize },
    #[error("dimension {0} exceeds the supported maximum {MAX_DIM}")]
    TooLarge(usize),
    #[error("morphism {0} is not an epimorphism")]
    NotEpi(String),
    #[error("unknown shape category `{0}`")]
    UnknownShape(String),
}

/// One instance of the cycle equations for `k`-spheres: face `outer` of the
/// sphere restricted along face `inner` of a `(k-1)`-cell must equal face
/// `outer2` restricted along face `inner2`. Indices are positions in the
/// shape's face listing order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleEquation {
    pub outer: usize,
    pub inner: usize,
    pub outer2: usize,
    pub inner2: usize,
}

/// One defining relation instance `lhs = rhs` between words whose rightmost
/// letters have domain `dom`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation<G> {
    pub dom: usize,
    pub lhs: Vec<G>,
    pub rhs: Vec<G>,
}

impl<G> Relation<G> {
    pub fn new(dom: usize, lhs: Vec<G>, rhs: Vec<G>) -> Self {
        Self { dom, lhs, rhs }
    }
}

/// A shape category: a small category whose objects are the naturals and
/// whose morphisms have a computable canonical form.
pub trait Shape: Copy + Debug + Default + Eq + Ord + Hash + Send + Sync + 'static {
    type Morphism: Copy + Debug + Display + Eq + Ord + Hash + Send + Sync;
    /// Elementary generators (faces, degeneracies, rotations, ...).
    type Gen: Copy + Debug + Display + Eq + Hash + Send + Sync;
    /// Points of an object, for the function semantics.
    type Point: Copy + Debug + Eq;

    const KIND: ShapeKind;

    fn identity(n: usize) -> Self::Morphism;
    fn dom(f: &Self::Morphism) -> usize;
    fn cod(f: &Self::Morphism) -> usize;

    /// `f ∘ g`, in canonical form.
    fn compose(f: &Self::Morphism, g: &Self::Morphism) -> Result<Self::Morphism, MorphismError>;

    /// The unique factorisation `f = mono ∘ epi`, returned as `(mono, epi)`.
    fn factor(f: &Self::Morphism) -> (Self::Morphism, Self::Morphism);

    fn is_epi(f: &Self::Morphism) -> bool;
    fn is_mono(f: &Self::Morphism) -> bool;

    fn is_identity(f: &Self::Morphism) -> bool {
        *f == Self::identity(Self::dom(f))
    }

    /// All canonical epimorphisms `n -> m`, without repetition. Empty when `m > n`.
    fn epis(n: usize, m: usize) -> Vec<Self::Morphism>;

    /// All monomorphisms `m -> n`, without repetition. Empty when `m > n`.
    fn monos(m: usize, n: usize) -> Vec<Self::Morphism>;

    /// Every mono `μ` with `epi ∘ μ = id`.
    fn sections(epi: &Self::Morphism) -> Result<Vec<Self::Morphism>, MorphismError>;

    fn eval(f: &Self::Morphism, point: Self::Point) -> Result<Self::Point, MorphismError>;

    /// Number of codimension-one faces of a `k`-cell (`k >= 1`).
    fn face_count(k: usize) -> usize;

    /// The face inclusion `k - 1 -> k` at position `idx` of the face listing.
    fn face_map(k: usize, idx: usize) -> Self::Morphism;

    /// The generator naming the face at position `idx` of a `k`-cell.
    fn face_gen(k: usize, idx: usize) -> Self::Gen;

    /// Peels the leftmost elementary face off a mono: `f = face ∘ rest`.
    /// Returns the face's position in the listing of `cod(f)`-cells and `rest`.
    /// `None` exactly when `f` has no face letters.
    fn split_mono(f: &Self::Morphism) -> Option<(usize, Self::Morphism)>;

    /// All cycle equations a family of `(k-1)`-cells must satisfy to be a `k`-sphere.
    fn cycle_equations(k: usize) -> Vec<CycleEquation>;

    /// The elementary morphism named by `gen` with the given domain.
    fn gen_morphism(gen: Self::Gen, dom: usize) -> Result<Self::Morphism, MorphismError>;

    /// The domain `gen` must have for its codomain to be `cod`.
    fn gen_dom_for_cod(gen: Self::Gen, cod: usize) -> Result<usize, MorphismError>;

    /// Every elementary generator with the given codomain.
    fn elementary(cod: usize) -> Vec<Self::Gen>;

    /// Normal form of a word (functional order) whose rightmost letter has domain `dom`.
    fn normalize(dom: usize, word: &[Self::Gen]) -> Result<Self::Morphism, MorphismError>;

    /// The canonical word of `f`, in functional order.
    fn word(f: &Self::Morphism) -> Vec<Self::Gen>;

    /// Every instance of the defining relations touching objects of
    /// dimension at most `max_dim`.
    fn relations(max_dim: usize) -> Vec<Relation<Self::Gen>>;
}

/// Domain of a word whose leftmost letter must land in `cod`.
pub fn word_dom_for_cod<S: Shape>(cod: usize, word: &[S::Gen]) -> Result<usize, MorphismError> {
    let mut d = cod;
    for g in word {
        d = S::gen_dom_for_cod(*g, d)?;
    }
    Ok(d)
}

/// Smallest domain at which every letter of `word` applies.
pub fn minimal_dom<S: Shape>(word: &[S::Gen]) -> Option<usize> {
    (0..=MAX_DIM).find(|&d| S::normalize(d, word).is_ok())
}

/// Folds a word through `compose`, one letter at a time.
pub fn compose_word<S: Shape>(dom: usize, word: &[S::Gen]) -> Result<S::Morphism, MorphismError> {
    let mut acc = S::identity(dom);
    let mut d = dom;
    for g in word.iter().rev() {
        let m = S::gen_morphism(*g, d)?;
        d = S::cod(&m);
        acc = S::compose(&m, &acc)?;
    }
    Ok(acc)
}

pub(crate) fn check_dim(n: usize) -> Result<(), MorphismError> {
    if n > MAX_DIM {
        Err(MorphismError::TooLarge(n))
    } else {
        Ok(())
    }
}

/// Writes a word in functional order, `id` when empty.
pub(crate) fn fmt_word<G: Display>(f: &mut fmt::Formatter<'_>, word: &[G]) -> fmt::Result {
    if word.is_empty() {
        return f.write_str("id");
    }
    for (i, g) in word.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{g}")?;
    }
    Ok(())
}

/// Bit subsets of `0..width` with exactly `size` elements, in increasing numeric order.
pub(crate) fn subsets(width: usize, size: usize) -> Vec<u32> {
    let mut out = Vec::new();
    if size > width {
        return out;
    }
    if size == 0 {
        out.push(0);
        return out;
    }
    let limit: u64 = 1u64 << width;
    let mut x: u64 = (1u64 << size) - 1;
    while x < limit {
        out.push(x as u32);
        // Gosper's hack
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    out
}

pub(crate) fn bits(mask: u32) -> impl DoubleEndedIterator<Item = usize> {
    (0..32usize).filter(move |b| mask & (1 << b) != 0)
}
