//! The reflexive globe category: `σ, τ : n -> n+1` and `ι : n+1 -> n` subject
//! to `τσ = σσ`, `ττ = στ` and `ισ = id = ιτ`.
//!
//! Every word rewrites to `σ⋯σ X ι⋯ι` with `X ∈ {σ, τ}`: the morphism goes
//! down to a dimension `through`, then up, and only the first step up can be a
//! `τ`. For the function semantics an object `k` is the globe with one top
//! `k`-cell and a source and target cell in every lower dimension.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::word::{rewrite, Step};
use super::{check_dim, fmt_word, CycleEquation, MorphismError, Relation, Shape, ShapeKind};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Globe;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GlobeGen {
    /// `σ : n -> n+1`, co-source.
    Src,
    /// `τ : n -> n+1`, co-target.
    Tgt,
    /// `ι : n+1 -> n`, reflexivity.
    Refl,
}

impl fmt::Display for GlobeGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GlobeGen::Src => "sig",
            GlobeGen::Tgt => "tau",
            GlobeGen::Refl => "iot",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GlobeSide {
    Src,
    Tgt,
}

/// A cell of the globe of dimension `k`: the top cell, or the source or
/// target cell of dimension `d < k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GlobeCell {
    Top,
    Src(u8),
    Tgt(u8),
}

impl fmt::Display for GlobeCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GlobeCell::Top => f.write_str("top"),
            GlobeCell::Src(d) => write!(f, "src{d}"),
            GlobeCell::Tgt(d) => write!(f, "tgt{d}"),
        }
    }
}

/// A morphism `dom -> cod` in normal form `σ^{cod-through-1} X ι^{dom-through}`.
/// `side` is `X`, absent exactly when `through == cod`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GlobeMorphism {
    dom: u8,
    cod: u8,
    through: u8,
    side: Option<GlobeSide>,
}

impl fmt::Debug for GlobeMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{} ", self.dom, self.cod)?;
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GlobeMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_word(f, &Globe::word(self))
    }
}

impl GlobeMorphism {
    pub fn new(
        dom: usize,
        cod: usize,
        through: usize,
        side: Option<GlobeSide>,
    ) -> Result<Self, MorphismError> {
        check_dim(dom)?;
        check_dim(cod)?;
        if through > dom || through > cod || side.is_some() != (through < cod) {
            return Err(MorphismError::Word {
                gen: format!("through {through} side {side:?}"),
                dim: dom,
            });
        }
        Ok(Self::raw(dom, cod, through, side))
    }

    fn raw(dom: usize, cod: usize, through: usize, side: Option<GlobeSide>) -> Self {
        Self {
            dom: dom as u8,
            cod: cod as u8,
            through: through as u8,
            side,
        }
    }

    pub fn dom(&self) -> usize {
        self.dom as usize
    }

    pub fn cod(&self) -> usize {
        self.cod as usize
    }

    pub fn through(&self) -> usize {
        self.through as usize
    }

    pub fn side(&self) -> Option<GlobeSide> {
        self.side
    }

    pub fn apply(&self, c: GlobeCell) -> GlobeCell {
        let t = self.through;
        let low = match c {
            GlobeCell::Src(d) | GlobeCell::Tgt(d) if d < t => return c,
            _ => GlobeCell::Top,
        };
        match self.side {
            None => low,
            Some(GlobeSide::Src) => GlobeCell::Src(t),
            Some(GlobeSide::Tgt) => GlobeCell::Tgt(t),
        }
    }
}

impl Shape for Globe {
    type Morphism = GlobeMorphism;
    type Gen = GlobeGen;
    type Point = GlobeCell;

    const KIND: ShapeKind = ShapeKind::Globular;

    fn identity(n: usize) -> GlobeMorphism {
        GlobeMorphism::raw(n, n, n, None)
    }

    fn dom(f: &GlobeMorphism) -> usize {
        f.dom()
    }

    fn cod(f: &GlobeMorphism) -> usize {
        f.cod()
    }

    fn compose(f: &GlobeMorphism, g: &GlobeMorphism) -> Result<GlobeMorphism, MorphismError> {
        if f.dom != g.cod {
            return Err(MorphismError::Composition {
                dom: f.dom(),
                cod: g.cod(),
            });
        }
        let mut w = Self::word(f);
        w.extend(Self::word(g));
        Self::normalize(g.dom(), &w)
    }

    fn factor(f: &GlobeMorphism) -> (GlobeMorphism, GlobeMorphism) {
        let t = f.through();
        (
            GlobeMorphism::raw(t, f.cod(), t, f.side),
            GlobeMorphism::raw(f.dom(), t, t, None),
        )
    }

    fn is_epi(f: &GlobeMorphism) -> bool {
        f.side.is_none()
    }

    fn is_mono(f: &GlobeMorphism) -> bool {
        f.through == f.dom
    }

    fn epis(n: usize, m: usize) -> Vec<GlobeMorphism> {
        if m > n {
            return Vec::new();
        }
        vec![GlobeMorphism::raw(n, m, m, None)]
    }

    fn monos(m: usize, n: usize) -> Vec<GlobeMorphism> {
        if m > n {
            Vec::new()
        } else if m == n {
            vec![Self::identity(n)]
        } else {
            vec![
                GlobeMorphism::raw(m, n, m, Some(GlobeSide::Src)),
                GlobeMorphism::raw(m, n, m, Some(GlobeSide::Tgt)),
            ]
        }
    }

    fn sections(epi: &GlobeMorphism) -> Result<Vec<GlobeMorphism>, MorphismError> {
        if !Self::is_epi(epi) {
            return Err(MorphismError::NotEpi(format!("{epi}")));
        }
        // ι cancels every step up
        Ok(Self::monos(epi.cod(), epi.dom()))
    }

    fn eval(f: &GlobeMorphism, c: GlobeCell) -> Result<GlobeCell, MorphismError> {
        match c {
            GlobeCell::Src(d) | GlobeCell::Tgt(d) if d >= f.dom => Err(MorphismError::Domain {
                point: format!("{c}"),
                dim: f.dom(),
            }),
            _ => Ok(f.apply(c)),
        }
    }

    fn face_count(_k: usize) -> usize {
        2
    }

    fn face_map(k: usize, idx: usize) -> GlobeMorphism {
        assert!(k >= 1 && idx < 2);
        let side = if idx == 0 {
            GlobeSide::Src
        } else {
            GlobeSide::Tgt
        };
        GlobeMorphism::raw(k - 1, k, k - 1, Some(side))
    }

    fn face_gen(_k: usize, idx: usize) -> GlobeGen {
        if idx == 0 {
            GlobeGen::Src
        } else {
            GlobeGen::Tgt
        }
    }

    fn split_mono(f: &GlobeMorphism) -> Option<(usize, GlobeMorphism)> {
        let side = f.side?;
        let ups = f.cod - f.through;
        let idx = if ups >= 2 || side == GlobeSide::Src {
            0
        } else {
            1
        };
        let rest_side = if ups >= 2 { Some(side) } else { None };
        Some((
            idx,
            GlobeMorphism::raw(f.dom(), f.cod() - 1, f.through(), rest_side),
        ))
    }

    fn cycle_equations(k: usize) -> Vec<CycleEquation> {
        if k < 2 {
            return Vec::new();
        }
        // both faces share their source and their target
        vec![
            CycleEquation {
                outer: 0,
                inner: 0,
                outer2: 1,
                inner2: 0,
            },
            CycleEquation {
                outer: 0,
                inner: 1,
                outer2: 1,
                inner2: 1,
            },
        ]
    }

    fn gen_morphism(gen: GlobeGen, dom: usize) -> Result<GlobeMorphism, MorphismError> {
        match gen {
            GlobeGen::Src | GlobeGen::Tgt => {
                check_dim(dom + 1)?;
                let side = if gen == GlobeGen::Src {
                    GlobeSide::Src
                } else {
                    GlobeSide::Tgt
                };
                Ok(GlobeMorphism::raw(dom, dom + 1, dom, Some(side)))
            }
            GlobeGen::Refl => {
                check_dim(dom)?;
                if dom == 0 {
                    return Err(MorphismError::Word {
                        gen: format!("{gen}"),
                        dim: dom,
                    });
                }
                Ok(GlobeMorphism::raw(dom, dom - 1, dom - 1, None))
            }
        }
    }

    fn gen_dom_for_cod(gen: GlobeGen, cod: usize) -> Result<usize, MorphismError> {
        match gen {
            GlobeGen::Src | GlobeGen::Tgt if cod >= 1 => Ok(cod - 1),
            GlobeGen::Refl if cod < super::MAX_DIM => Ok(cod + 1),
            _ => Err(MorphismError::Word {
                gen: format!("{gen}"),
                dim: cod,
            }),
        }
    }

    fn elementary(cod: usize) -> Vec<GlobeGen> {
        let mut out = Vec::new();
        if cod >= 1 {
            out.push(GlobeGen::Src);
            out.push(GlobeGen::Tgt);
        }
        if cod < super::MAX_DIM {
            out.push(GlobeGen::Refl);
        }
        out
    }

    fn normalize(dom: usize, word: &[GlobeGen]) -> Result<GlobeMorphism, MorphismError> {
        check_dim(dom)?;
        let mut d = dom;
        for g in word.iter().rev() {
            d = Self::cod(&Self::gen_morphism(*g, d)?);
        }
        let mut w = word.to_vec();
        rewrite(&mut w, globe_rule);
        let downs = w.iter().filter(|g| **g == GlobeGen::Refl).count();
        let through = dom - downs;
        let side = w
            .iter()
            .rev()
            .find(|g| **g != GlobeGen::Refl)
            .map(|g| match g {
                GlobeGen::Tgt => GlobeSide::Tgt,
                _ => GlobeSide::Src,
            });
        Ok(GlobeMorphism::raw(dom, d, through, side))
    }

    fn word(f: &GlobeMorphism) -> Vec<GlobeGen> {
        let mut w = Vec::new();
        if let Some(side) = f.side {
            let ups = f.cod() - f.through();
            w.extend(core::iter::repeat_n(GlobeGen::Src, ups - 1));
            w.push(match side {
                GlobeSide::Src => GlobeGen::Src,
                GlobeSide::Tgt => GlobeGen::Tgt,
            });
        }
        w.extend(core::iter::repeat_n(GlobeGen::Refl, f.dom() - f.through()));
        w
    }

    fn relations(max_dim: usize) -> Vec<Relation<GlobeGen>> {
        use GlobeGen::{Refl as I, Src as S, Tgt as T};
        let mut out = Vec::new();
        for d in 0..=max_dim {
            if d + 2 <= max_dim {
                out.push(Relation::new(d, vec![T, S], vec![S, S]));
                out.push(Relation::new(d, vec![T, T], vec![S, T]));
            }
            if d < max_dim {
                out.push(Relation::new(d, vec![I, S], vec![]));
                out.push(Relation::new(d, vec![I, T], vec![]));
            }
        }
        out
    }
}

fn globe_rule(a: GlobeGen, b: GlobeGen) -> Option<Step<GlobeGen>> {
    use GlobeGen::{Refl, Src, Tgt};
    match (a, b) {
        (Refl, Src | Tgt) => Some(Step::Cancel),
        (Tgt, Src | Tgt) => Some(Step::Two(Src, b)),
        _ => None,
    }
}
