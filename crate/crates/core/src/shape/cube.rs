//! The cube category: objects `I^n = {0,1}^n`, generated by the faces
//! `α^ι_i` (insert the constant `ι` at coordinate `i`) and the projections
//! `β_i` (delete coordinate `i`). Coordinates are 1-based.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::word::{rewrite, Step};
use super::{
    bits, check_dim, fmt_word, subsets, CycleEquation, MorphismError, Relation, Shape, ShapeKind,
};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cube;

/// `Face(i, ι)` is `α^ι_i : I^{n-1} -> I^n`; `Degen(j)` is `β_j : I^{n+1} -> I^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CubeGen {
    Face(u8, u8),
    Degen(u8),
}

impl fmt::Display for CubeGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CubeGen::Face(i, s) => write!(f, "a{s}@{i}"),
            CubeGen::Degen(j) => write!(f, "b{j}"),
        }
    }
}

/// A vertex of `I^n`; coordinate `i` is bit `i - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CubePoint {
    dim: u8,
    bits: u32,
}

impl CubePoint {
    pub fn new(coords: &[u8]) -> Self {
        assert!(coords.len() <= super::MAX_DIM);
        let bits = coords
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &c)| acc | (u32::from(c & 1) << i));
        Self {
            dim: coords.len() as u8,
            bits,
        }
    }

    pub fn from_bits(dim: usize, bits: u32) -> Self {
        assert!(dim <= super::MAX_DIM);
        Self {
            dim: dim as u8,
            bits: bits & ((1u32 << dim) - 1),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    /// Coordinate `i`, 1-based.
    pub fn coord(&self, i: usize) -> u8 {
        ((self.bits >> (i - 1)) & 1) as u8
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }
}

impl fmt::Display for CubePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.dim() {
            write!(f, "{}", self.coord(i))?;
        }
        Ok(())
    }
}

/// A map `I^dom -> I^cod` in canonical form `α^{ι_1}_{i_1}⋯α^{ι_s}_{i_s} β_{j_1}⋯β_{j_t}`
/// with `i_1 > ⋯ > i_s` and `j_1 < ⋯ < j_t`.
///
/// Bit `p - 1` of `inserted` marks an inserted constant at output coordinate
/// `p` (its value in `signs`); bit `q - 1` of `deleted` marks a deleted input
/// coordinate `q`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CubeMorphism {
    dom: u8,
    cod: u8,
    inserted: u32,
    signs: u32,
    deleted: u32,
}

impl fmt::Debug for CubeMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I^{}->I^{} ", self.dom, self.cod)?;
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CubeMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_word(f, &Cube::word(self))
    }
}

// Output coordinate description: 0 and 1 are constants, `q + 2` projects
// input coordinate `q` (1-based).
type Coords = [u8; 32];

impl CubeMorphism {
    /// Builds a morphism from its canonical lists, checking every invariant.
    pub fn new(
        dom: usize,
        cod: usize,
        inserts: &[(usize, u8)],
        deletes: &[usize],
    ) -> Result<Self, MorphismError> {
        check_dim(dom)?;
        check_dim(cod)?;
        let bad = || MorphismError::Word {
            gen: format!("a{inserts:?} b{deletes:?}"),
            dim: dom,
        };
        if !inserts.windows(2).all(|w| w[0].0 > w[1].0)
            || inserts.iter().any(|&(i, s)| i == 0 || i > cod || s > 1)
        {
            return Err(bad());
        }
        if !deletes.windows(2).all(|w| w[0] < w[1]) || deletes.iter().any(|&j| j == 0 || j > dom) {
            return Err(bad());
        }
        if dom + inserts.len() != cod + deletes.len() {
            return Err(bad());
        }
        let mut m = Self::from_masks(dom, cod, 0, 0, 0);
        for &(i, s) in inserts {
            m.inserted |= 1 << (i - 1);
            m.signs |= u32::from(s) << (i - 1);
        }
        m.deleted = deletes.iter().fold(0, |acc, &j| acc | 1 << (j - 1));
        Ok(m)
    }

    pub(crate) fn from_masks(
        dom: usize,
        cod: usize,
        inserted: u32,
        signs: u32,
        deleted: u32,
    ) -> Self {
        Self {
            dom: dom as u8,
            cod: cod as u8,
            inserted,
            signs: signs & inserted,
            deleted,
        }
    }

    /// `α^sign_i : I^{n-1} -> I^n`.
    pub fn face(n: usize, i: usize, sign: u8) -> Self {
        assert!((1..=super::MAX_DIM).contains(&n) && (1..=n).contains(&i) && sign <= 1);
        Self::from_masks(n - 1, n, 1 << (i - 1), u32::from(sign) << (i - 1), 0)
    }

    /// `β_j : I^{n+1} -> I^n`.
    pub fn degeneracy(n: usize, j: usize) -> Self {
        assert!(n < super::MAX_DIM && (1..=n + 1).contains(&j));
        Self::from_masks(n + 1, n, 0, 0, 1 << (j - 1))
    }

    pub fn dom(&self) -> usize {
        self.dom as usize
    }

    pub fn cod(&self) -> usize {
        self.cod as usize
    }

    /// `(position, sign)` of the face letters, positions descending.
    pub fn inserts(&self) -> Vec<(usize, u8)> {
        bits(self.inserted)
            .rev()
            .map(|b| (b + 1, ((self.signs >> b) & 1) as u8))
            .collect()
    }

    /// Projection indices, ascending.
    pub fn deletes(&self) -> Vec<usize> {
        bits(self.deleted).map(|b| b + 1).collect()
    }

    pub fn inserted_mask(&self) -> u32 {
        self.inserted
    }

    pub fn deleted_mask(&self) -> u32 {
        self.deleted
    }

    pub fn is_epi(&self) -> bool {
        self.inserted == 0
    }

    pub fn is_mono(&self) -> bool {
        self.deleted == 0
    }

    fn coords(&self) -> Coords {
        let mut out = [0u8; 32];
        let mut q = 1;
        for p in 1..=self.cod() {
            let b = p - 1;
            if self.inserted & (1 << b) != 0 {
                out[b] = ((self.signs >> b) & 1) as u8;
            } else {
                while self.deleted & (1 << (q - 1)) != 0 {
                    q += 1;
                }
                out[b] = q as u8 + 2;
                q += 1;
            }
        }
        out
    }

    fn from_coords(dom: usize, cod: usize, coords: &Coords) -> Self {
        let mut inserted = 0;
        let mut signs = 0;
        let mut kept = 0u32;
        for p in 0..cod {
            match coords[p] {
                c @ (0 | 1) => {
                    inserted |= 1 << p;
                    signs |= u32::from(c) << p;
                }
                c => kept |= 1 << (c - 3),
            }
        }
        let full = (1u32 << dom) - 1;
        Self::from_masks(dom, cod, inserted, signs, full & !kept)
    }

    pub fn apply(&self, p: CubePoint) -> CubePoint {
        let c = self.coords();
        let mut bits = 0;
        for b in 0..self.cod() {
            let v = match c[b] {
                v @ (0 | 1) => v,
                q => p.coord(q as usize - 2),
            };
            bits |= u32::from(v) << b;
        }
        CubePoint::from_bits(self.cod(), bits)
    }
}

impl Shape for Cube {
    type Morphism = CubeMorphism;
    type Gen = CubeGen;
    type Point = CubePoint;

    const KIND: ShapeKind = ShapeKind::Cubical;

    fn identity(n: usize) -> CubeMorphism {
        CubeMorphism::from_masks(n, n, 0, 0, 0)
    }

    fn dom(f: &CubeMorphism) -> usize {
        f.dom()
    }

    fn cod(f: &CubeMorphism) -> usize {
        f.cod()
    }

    fn compose(f: &CubeMorphism, g: &CubeMorphism) -> Result<CubeMorphism, MorphismError> {
        if f.dom != g.cod {
            return Err(MorphismError::Composition {
                dom: f.dom(),
                cod: g.cod(),
            });
        }
        let cf = f.coords();
        let cg = g.coords();
        let mut out = [0u8; 32];
        for p in 0..f.cod() {
            out[p] = match cf[p] {
                c @ (0 | 1) => c,
                q => cg[q as usize - 3],
            };
        }
        Ok(CubeMorphism::from_coords(g.dom(), f.cod(), &out))
    }

    fn factor(f: &CubeMorphism) -> (CubeMorphism, CubeMorphism) {
        let mid = f.dom() - f.deleted.count_ones() as usize;
        (
            CubeMorphism::from_masks(mid, f.cod(), f.inserted, f.signs, 0),
            CubeMorphism::from_masks(f.dom(), mid, 0, 0, f.deleted),
        )
    }

    fn is_epi(f: &CubeMorphism) -> bool {
        f.is_epi()
    }

    fn is_mono(f: &CubeMorphism) -> bool {
        f.is_mono()
    }

    fn epis(n: usize, m: usize) -> Vec<CubeMorphism> {
        if m > n || n > super::MAX_DIM {
            return Vec::new();
        }
        subsets(n, n - m)
            .into_iter()
            .map(|mask| CubeMorphism::from_masks(n, m, 0, 0, mask))
            .collect()
    }

    fn monos(m: usize, n: usize) -> Vec<CubeMorphism> {
        if m > n || n > super::MAX_DIM {
            return Vec::new();
        }
        let mut out = Vec::new();
        for mask in subsets(n, n - m) {
            let positions: Vec<usize> = bits(mask).collect();
            for choice in 0u32..(1 << positions.len()) {
                let signs = positions
                    .iter()
                    .enumerate()
                    .fold(0, |acc, (k, &b)| acc | (((choice >> k) & 1) << b));
                out.push(CubeMorphism::from_masks(m, n, mask, signs, 0));
            }
        }
        out
    }

    fn sections(epi: &CubeMorphism) -> Result<Vec<CubeMorphism>, MorphismError> {
        if !epi.is_epi() {
            return Err(MorphismError::NotEpi(format!("{epi}")));
        }
        // a section reinserts a constant at every deleted coordinate
        let positions: Vec<usize> = bits(epi.deleted).collect();
        let mut out = Vec::new();
        for choice in 0u32..(1 << positions.len()) {
            let signs = positions
                .iter()
                .enumerate()
                .fold(0, |acc, (k, &b)| acc | (((choice >> k) & 1) << b));
            out.push(CubeMorphism::from_masks(
                epi.cod(),
                epi.dom(),
                epi.deleted,
                signs,
                0,
            ));
        }
        Ok(out)
    }

    fn eval(f: &CubeMorphism, p: CubePoint) -> Result<CubePoint, MorphismError> {
        if p.dim() != f.dom() {
            return Err(MorphismError::Domain {
                point: format!("{p}"),
                dim: f.dom(),
            });
        }
        Ok(f.apply(p))
    }

    fn face_count(k: usize) -> usize {
        2 * k
    }

    fn face_map(k: usize, idx: usize) -> CubeMorphism {
        CubeMorphism::face(k, idx / 2 + 1, (idx % 2) as u8)
    }

    fn face_gen(_k: usize, idx: usize) -> CubeGen {
        CubeGen::Face((idx / 2 + 1) as u8, (idx % 2) as u8)
    }

    fn split_mono(f: &CubeMorphism) -> Option<(usize, CubeMorphism)> {
        if f.inserted == 0 {
            return None;
        }
        let b = 31 - f.inserted.leading_zeros() as usize;
        let sign = ((f.signs >> b) & 1) as usize;
        let rest = CubeMorphism::from_masks(
            f.dom(),
            f.cod() - 1,
            f.inserted & !(1 << b),
            f.signs & !(1 << b),
            f.deleted,
        );
        Some((2 * b + sign, rest))
    }

    fn cycle_equations(k: usize) -> Vec<CycleEquation> {
        let mut out = Vec::new();
        if k < 2 {
            return out;
        }
        let idx = |i: usize, s: usize| 2 * (i - 1) + s;
        // c^ι_j α^υ_i = c^υ_i α^ι_{j-1} for i < j
        for j in 1..=k {
            for i in 1..j {
                for s in 0..2 {
                    for t in 0..2 {
                        out.push(CycleEquation {
                            outer: idx(j, s),
                            inner: idx(i, t),
                            outer2: idx(i, t),
                            inner2: idx(j - 1, s),
                        });
                    }
                }
            }
        }
        out
    }

    fn gen_morphism(gen: CubeGen, dom: usize) -> Result<CubeMorphism, MorphismError> {
        let err = || MorphismError::Word {
            gen: format!("{gen}"),
            dim: dom,
        };
        match gen {
            CubeGen::Face(i, s) => {
                check_dim(dom + 1)?;
                if i == 0 || i as usize > dom + 1 || s > 1 {
                    return Err(err());
                }
                Ok(CubeMorphism::face(dom + 1, i as usize, s))
            }
            CubeGen::Degen(j) => {
                check_dim(dom)?;
                if j == 0 || j as usize > dom {
                    return Err(err());
                }
                Ok(CubeMorphism::degeneracy(dom - 1, j as usize))
            }
        }
    }

    fn gen_dom_for_cod(gen: CubeGen, cod: usize) -> Result<usize, MorphismError> {
        let err = || MorphismError::Word {
            gen: format!("{gen}"),
            dim: cod,
        };
        match gen {
            CubeGen::Face(i, s) if i >= 1 && i as usize <= cod && s <= 1 => Ok(cod - 1),
            CubeGen::Degen(j) if j >= 1 && j as usize <= cod + 1 && cod < super::MAX_DIM => {
                Ok(cod + 1)
            }
            _ => Err(err()),
        }
    }

    fn elementary(cod: usize) -> Vec<CubeGen> {
        let mut out = Vec::new();
        for i in 1..=cod {
            out.push(CubeGen::Face(i as u8, 0));
            out.push(CubeGen::Face(i as u8, 1));
        }
        if cod < super::MAX_DIM {
            out.extend((1..=cod + 1).map(|j| CubeGen::Degen(j as u8)));
        }
        out
    }

    fn normalize(dom: usize, word: &[CubeGen]) -> Result<CubeMorphism, MorphismError> {
        check_dim(dom)?;
        let mut d = dom;
        for g in word.iter().rev() {
            d = Self::cod(&Self::gen_morphism(*g, d)?);
        }
        let mut w = word.to_vec();
        rewrite(&mut w, cube_rule);
        let mut m = CubeMorphism::from_masks(dom, d, 0, 0, 0);
        for g in &w {
            match *g {
                CubeGen::Face(i, s) => {
                    m.inserted |= 1 << (i - 1);
                    m.signs |= u32::from(s) << (i - 1);
                }
                CubeGen::Degen(j) => m.deleted |= 1 << (j - 1),
            }
        }
        Ok(m)
    }

    fn word(f: &CubeMorphism) -> Vec<CubeGen> {
        let mut w: Vec<CubeGen> = f
            .inserts()
            .into_iter()
            .map(|(i, s)| CubeGen::Face(i as u8, s))
            .collect();
        w.extend(f.deletes().into_iter().map(|j| CubeGen::Degen(j as u8)));
        w
    }

    fn relations(max_dim: usize) -> Vec<Relation<CubeGen>> {
        use CubeGen::{Degen as B, Face as A};
        let u = |x: usize| x as u8;
        let mut out = Vec::new();
        for d in 0..=max_dim {
            // α^ι_j α^υ_i = α^υ_i α^ι_{j-1}, i < j; domain I^d
            if d + 2 <= max_dim {
                for j in 2..=d + 2 {
                    for i in 1..j {
                        for s in 0..2 {
                            for t in 0..2 {
                                out.push(Relation::new(
                                    d,
                                    vec![A(u(j), s), A(u(i), t)],
                                    vec![A(u(i), t), A(u(j - 1), s)],
                                ));
                            }
                        }
                    }
                }
            }
            // β_j β_i = β_i β_{j+1}, i <= j
            if d >= 2 {
                for j in 1..d {
                    for i in 1..=j {
                        out.push(Relation::new(
                            d,
                            vec![B(u(j)), B(u(i))],
                            vec![B(u(i)), B(u(j + 1))],
                        ));
                    }
                }
            }
            // β_j α^ι_i
            if d < max_dim {
                for j in 1..=d + 1 {
                    for i in 1..=d + 1 {
                        for s in 0..2 {
                            let rhs = if i < j {
                                vec![A(u(i), s), B(u(j - 1))]
                            } else if i == j {
                                vec![]
                            } else {
                                vec![A(u(i - 1), s), B(u(j))]
                            };
                            out.push(Relation::new(d, vec![B(u(j)), A(u(i), s)], rhs));
                        }
                    }
                }
            }
        }
        out
    }
}

fn cube_rule(a: CubeGen, b: CubeGen) -> Option<Step<CubeGen>> {
    use CubeGen::{Degen, Face};
    match (a, b) {
        (Degen(j), Face(i, s)) => Some(if i < j {
            Step::Two(Face(i, s), Degen(j - 1))
        } else if i == j {
            Step::Cancel
        } else {
            Step::Two(Face(i - 1, s), Degen(j))
        }),
        (Face(j, s), Face(i, t)) if j <= i => Some(Step::Two(Face(i + 1, t), Face(j, s))),
        (Degen(j), Degen(i)) if j >= i => Some(Step::Two(Degen(i), Degen(j + 1))),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projection_after_its_face_is_identity() {
        let h = Cube::compose(
            &CubeMorphism::degeneracy(1, 1),
            &CubeMorphism::face(2, 1, 0),
        )
        .unwrap();
        assert_eq!(h, Cube::identity(1));
        let n = Cube::normalize(1, &[CubeGen::Degen(1), CubeGen::Face(1, 0)]).unwrap();
        assert_eq!(n, Cube::identity(1));
    }

    #[test]
    fn epis_of_the_square_onto_the_interval() {
        let e = Cube::epis(2, 1);
        assert_eq!(
            e,
            vec![
                CubeMorphism::degeneracy(1, 1),
                CubeMorphism::degeneracy(1, 2)
            ]
        );
    }

    #[test]
    fn sections_of_a_projection() {
        let s = Cube::sections(&CubeMorphism::degeneracy(0, 1)).unwrap();
        assert_eq!(
            s,
            vec![CubeMorphism::face(1, 1, 0), CubeMorphism::face(1, 1, 1)]
        );
    }

    #[test]
    fn eval_inserts_and_deletes_coordinates() {
        let f = CubeMorphism::new(2, 2, &[(2, 1)], &[1]).unwrap();
        // delete coordinate 1, then insert 1 at position 2
        let p = CubePoint::new(&[1, 0]);
        assert_eq!(Cube::eval(&f, p).unwrap(), CubePoint::new(&[0, 1]));
        assert!(Cube::eval(&f, CubePoint::new(&[0])).is_err());
    }

    #[test]
    fn faces_sort_descending() {
        let n = Cube::normalize(0, &[CubeGen::Face(1, 1), CubeGen::Face(1, 0)]).unwrap();
        assert_eq!(n.inserts(), vec![(2, 0), (1, 1)]);
        assert_eq!(alloc::format!("{n}"), "a0@2 a1@1");
    }

    #[test]
    fn split_mono_reassembles() {
        let f = CubeMorphism::new(1, 3, &[(3, 1), (1, 0)], &[]).unwrap();
        let (idx, rest) = Cube::split_mono(&f).unwrap();
        assert_eq!(idx, 5);
        assert_eq!(Cube::compose(&Cube::face_map(3, idx), &rest).unwrap(), f);
    }
}
