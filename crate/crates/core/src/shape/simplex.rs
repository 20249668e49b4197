//! The simplex category: ordinals `[n] = {0, ..., n}` and monotone maps.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::word::{rewrite, Step};
use super::{bits, check_dim, fmt_word, subsets, CycleEquation, MorphismError, Shape, ShapeKind};
use crate::shape::Relation;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex;

/// `Face(i)` is `δ_i : [n-1] -> [n]`, skipping `i`; `Degen(j)` is
/// `σ_j : [n+1] -> [n]`, hitting `j` twice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SimplexGen {
    Face(u8),
    Degen(u8),
}

impl fmt::Display for SimplexGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimplexGen::Face(i) => write!(f, "d{i}"),
            SimplexGen::Degen(j) => write!(f, "s{j}"),
        }
    }
}

/// A monotone map `[dom] -> [cod]` in canonical form `δ_{i_1}⋯δ_{i_s} σ_{j_1}⋯σ_{j_t}`
/// with `i_1 > ⋯ > i_s` and `j_1 < ⋯ < j_t`.
///
/// The face indices are the points of `[cod]` missed by the map; the
/// degeneracy indices are the `j` with `f(j) = f(j+1)`. Both are kept as bit
/// sets.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimplexMorphism {
    dom: u8,
    cod: u8,
    missed: u32,
    merged: u32,
}

impl fmt::Debug for SimplexMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]->[{}] ", self.dom, self.cod)?;
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SimplexMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_word(f, &Simplex::word(self))
    }
}

impl SimplexMorphism {
    /// Builds a morphism from its canonical lists, checking every invariant.
    pub fn new(
        dom: usize,
        cod: usize,
        monos: &[usize],
        epis: &[usize],
    ) -> Result<Self, MorphismError> {
        check_dim(dom)?;
        check_dim(cod)?;
        let bad = || MorphismError::Word {
            gen: format!("d{monos:?} s{epis:?}"),
            dim: dom,
        };
        if !monos.windows(2).all(|w| w[0] > w[1]) || monos.iter().any(|&i| i > cod) {
            return Err(bad());
        }
        if !epis.windows(2).all(|w| w[0] < w[1]) || epis.iter().any(|&j| j + 1 > dom) {
            return Err(bad());
        }
        if dom + monos.len() != cod + epis.len() {
            return Err(bad());
        }
        Ok(Self {
            dom: dom as u8,
            cod: cod as u8,
            missed: monos.iter().fold(0, |m, &i| m | 1 << i),
            merged: epis.iter().fold(0, |m, &j| m | 1 << j),
        })
    }

    pub(crate) fn from_masks(dom: usize, cod: usize, missed: u32, merged: u32) -> Self {
        debug_assert_eq!(
            dom + missed.count_ones() as usize,
            cod + merged.count_ones() as usize
        );
        Self {
            dom: dom as u8,
            cod: cod as u8,
            missed,
            merged,
        }
    }

    /// `δ_i : [n-1] -> [n]`.
    pub fn face(n: usize, i: usize) -> Self {
        assert!(
            n >= 1 && i <= n && n <= super::MAX_DIM,
            "δ_{i} does not exist into [{n}]"
        );
        Self::from_masks(n - 1, n, 1 << i, 0)
    }

    /// `σ_j : [n+1] -> [n]`.
    pub fn degeneracy(n: usize, j: usize) -> Self {
        assert!(
            j <= n && n < super::MAX_DIM,
            "σ_{j} does not exist out of [{}]",
            n + 1
        );
        Self::from_masks(n + 1, n, 0, 1 << j)
    }

    pub fn dom(&self) -> usize {
        self.dom as usize
    }

    pub fn cod(&self) -> usize {
        self.cod as usize
    }

    /// Face indices, descending.
    pub fn monos(&self) -> Vec<usize> {
        bits(self.missed).rev().collect()
    }

    /// Degeneracy indices, ascending.
    pub fn epis(&self) -> Vec<usize> {
        bits(self.merged).collect()
    }

    pub fn missed_mask(&self) -> u32 {
        self.missed
    }

    pub fn merged_mask(&self) -> u32 {
        self.merged
    }

    pub fn is_epi(&self) -> bool {
        self.missed == 0
    }

    pub fn is_mono(&self) -> bool {
        self.merged == 0
    }

    /// Value at `x`, for `x <= dom`.
    pub fn apply(&self, x: usize) -> usize {
        debug_assert!(x <= self.dom());
        let y = x - (self.merged & ((1u32 << x) - 1)).count_ones() as usize;
        // the y-th point of [cod] not in `missed`
        let mut seen = 0;
        for p in 0..=self.cod() {
            if self.missed & (1 << p) == 0 {
                if seen == y {
                    return p;
                }
                seen += 1;
            }
        }
        unreachable!("canonical form maps into its codomain")
    }

    /// The full table `x ↦ f(x)`.
    pub fn table(&self) -> [u8; 32] {
        let mut out = [0u8; 32];
        let mut img = [0u8; 32];
        let mut n = 0;
        for p in 0..=self.cod() {
            if self.missed & (1 << p) == 0 {
                img[n] = p as u8;
                n += 1;
            }
        }
        let mut y = 0;
        for x in 0..=self.dom() {
            if x > 0 && self.merged & (1 << (x - 1)) == 0 {
                y += 1;
            }
            out[x] = img[y];
        }
        out
    }

    /// Reads the canonical form back off a monotone table.
    pub fn from_table(dom: usize, cod: usize, table: &[u8]) -> Self {
        let mut image = 0u32;
        let mut merged = 0u32;
        for x in 0..=dom {
            image |= 1 << table[x];
            if x < dom && table[x] == table[x + 1] {
                merged |= 1 << x;
            }
            debug_assert!(x == dom || table[x] <= table[x + 1]);
        }
        let full = if cod >= 31 {
            u32::MAX
        } else {
            (1u32 << (cod + 1)) - 1
        };
        Self::from_masks(dom, cod, full & !image, merged)
    }
}

impl Shape for Simplex {
    type Morphism = SimplexMorphism;
    type Gen = SimplexGen;
    type Point = usize;

    const KIND: ShapeKind = ShapeKind::Simplicial;

    fn identity(n: usize) -> SimplexMorphism {
        SimplexMorphism::from_masks(n, n, 0, 0)
    }

    fn dom(f: &SimplexMorphism) -> usize {
        f.dom()
    }

    fn cod(f: &SimplexMorphism) -> usize {
        f.cod()
    }

    fn compose(f: &SimplexMorphism, g: &SimplexMorphism) -> Result<SimplexMorphism, MorphismError> {
        if f.dom != g.cod {
            return Err(MorphismError::Composition {
                dom: f.dom(),
                cod: g.cod(),
            });
        }
        let tf = f.table();
        let tg = g.table();
        let mut t = [0u8; 32];
        for x in 0..=g.dom() {
            t[x] = tf[tg[x] as usize];
        }
        Ok(SimplexMorphism::from_table(g.dom(), f.cod(), &t))
    }

    fn factor(f: &SimplexMorphism) -> (SimplexMorphism, SimplexMorphism) {
        let mid = f.dom() - f.merged.count_ones() as usize;
        (
            SimplexMorphism::from_masks(mid, f.cod(), f.missed, 0),
            SimplexMorphism::from_masks(f.dom(), mid, 0, f.merged),
        )
    }

    fn is_epi(f: &SimplexMorphism) -> bool {
        f.is_epi()
    }

    fn is_mono(f: &SimplexMorphism) -> bool {
        f.is_mono()
    }

    fn epis(n: usize, m: usize) -> Vec<SimplexMorphism> {
        if m > n || n > super::MAX_DIM {
            return Vec::new();
        }
        subsets(n, n - m)
            .into_iter()
            .map(|mask| SimplexMorphism::from_masks(n, m, 0, mask))
            .collect()
    }

    fn monos(m: usize, n: usize) -> Vec<SimplexMorphism> {
        if m > n || n > super::MAX_DIM {
            return Vec::new();
        }
        subsets(n + 1, n - m)
            .into_iter()
            .map(|mask| SimplexMorphism::from_masks(m, n, mask, 0))
            .collect()
    }

    fn sections(epi: &SimplexMorphism) -> Result<Vec<SimplexMorphism>, MorphismError> {
        if !epi.is_epi() {
            return Err(MorphismError::NotEpi(format!("{epi}")));
        }
        // a section picks one point out of every fibre
        let table = epi.table();
        let mut fibres: Vec<Vec<usize>> = vec![Vec::new(); epi.cod() + 1];
        for x in 0..=epi.dom() {
            fibres[table[x] as usize].push(x);
        }
        let mut out = Vec::new();
        let mut choice = vec![0usize; fibres.len()];
        loop {
            let mut t = [0u8; 32];
            for (v, c) in choice.iter().enumerate() {
                t[v] = fibres[v][*c] as u8;
            }
            out.push(SimplexMorphism::from_table(epi.cod(), epi.dom(), &t));
            // odometer, last fibre fastest
            let mut pos = fibres.len();
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                choice[pos] += 1;
                if choice[pos] < fibres[pos].len() {
                    break;
                }
                choice[pos] = 0;
            }
        }
    }

    fn eval(f: &SimplexMorphism, x: usize) -> Result<usize, MorphismError> {
        if x > f.dom() {
            return Err(MorphismError::Domain {
                point: format!("{x}"),
                dim: f.dom(),
            });
        }
        Ok(f.apply(x))
    }

    fn face_count(k: usize) -> usize {
        k + 1
    }

    fn face_map(k: usize, idx: usize) -> SimplexMorphism {
        SimplexMorphism::face(k, idx)
    }

    fn face_gen(_k: usize, idx: usize) -> SimplexGen {
        SimplexGen::Face(idx as u8)
    }

    fn split_mono(f: &SimplexMorphism) -> Option<(usize, SimplexMorphism)> {
        if f.missed == 0 {
            return None;
        }
        let top = 31 - f.missed.leading_zeros() as usize;
        let rest =
            SimplexMorphism::from_masks(f.dom(), f.cod() - 1, f.missed & !(1 << top), f.merged);
        Some((top, rest))
    }

    fn cycle_equations(k: usize) -> Vec<CycleEquation> {
        let mut out = Vec::new();
        if k < 2 {
            return out;
        }
        // c_j δ_i = c_i δ_{j-1} for i < j
        for j in 0..=k {
            for i in 0..j {
                out.push(CycleEquation {
                    outer: j,
                    inner: i,
                    outer2: i,
                    inner2: j - 1,
                });
            }
        }
        out
    }

    fn gen_morphism(gen: SimplexGen, dom: usize) -> Result<SimplexMorphism, MorphismError> {
        let err = || MorphismError::Word {
            gen: format!("{gen}"),
            dim: dom,
        };
        match gen {
            SimplexGen::Face(i) => {
                check_dim(dom + 1)?;
                if i as usize > dom + 1 {
                    return Err(err());
                }
                Ok(SimplexMorphism::face(dom + 1, i as usize))
            }
            SimplexGen::Degen(j) => {
                check_dim(dom)?;
                if dom == 0 || j as usize >= dom {
                    return Err(err());
                }
                Ok(SimplexMorphism::degeneracy(dom - 1, j as usize))
            }
        }
    }

    fn gen_dom_for_cod(gen: SimplexGen, cod: usize) -> Result<usize, MorphismError> {
        let err = || MorphismError::Word {
            gen: format!("{gen}"),
            dim: cod,
        };
        match gen {
            SimplexGen::Face(i) if cod >= 1 && i as usize <= cod => Ok(cod - 1),
            SimplexGen::Degen(j) if j as usize <= cod && cod < super::MAX_DIM => Ok(cod + 1),
            _ => Err(err()),
        }
    }

    fn elementary(cod: usize) -> Vec<SimplexGen> {
        let mut out = Vec::new();
        if cod >= 1 {
            out.extend((0..=cod).map(|i| SimplexGen::Face(i as u8)));
        }
        if cod < super::MAX_DIM {
            out.extend((0..=cod).map(|j| SimplexGen::Degen(j as u8)));
        }
        out
    }

    fn normalize(dom: usize, word: &[SimplexGen]) -> Result<SimplexMorphism, MorphismError> {
        check_dim(dom)?;
        let mut d = dom;
        for g in word.iter().rev() {
            d = Self::cod(&Self::gen_morphism(*g, d)?);
        }
        let mut w: Vec<SimplexGen> = word.to_vec();
        rewrite(&mut w, simplex_rule);
        let mut missed = 0u32;
        let mut merged = 0u32;
        for g in &w {
            match g {
                SimplexGen::Face(i) => missed |= 1 << i,
                SimplexGen::Degen(j) => merged |= 1 << j,
            }
        }
        Ok(SimplexMorphism::from_masks(dom, d, missed, merged))
    }

    fn word(f: &SimplexMorphism) -> Vec<SimplexGen> {
        let mut w: Vec<SimplexGen> = bits(f.missed)
            .rev()
            .map(|i| SimplexGen::Face(i as u8))
            .collect();
        w.extend(bits(f.merged).map(|j| SimplexGen::Degen(j as u8)));
        w
    }

    fn relations(max_dim: usize) -> Vec<Relation<SimplexGen>> {
        use SimplexGen::{Degen as S, Face as D};
        let mut out = Vec::new();
        let u = |x: usize| x as u8;
        for d in 0..=max_dim {
            // δ_j δ_i = δ_i δ_{j-1}, i < j; domain [d]
            if d + 2 <= max_dim {
                for j in 1..=d + 2 {
                    for i in 0..j {
                        out.push(Relation::new(
                            d,
                            vec![D(u(j)), D(u(i))],
                            vec![D(u(i)), D(u(j - 1))],
                        ));
                    }
                }
            }
            // σ_j σ_i = σ_i σ_{j+1}, i <= j; domain [d]
            if d >= 2 {
                for j in 0..=d - 2 {
                    for i in 0..=j {
                        out.push(Relation::new(
                            d,
                            vec![S(u(j)), S(u(i))],
                            vec![S(u(i)), S(u(j + 1))],
                        ));
                    }
                }
            }
            // σ_j δ_i; domain [d], through [d+1]
            if d < max_dim {
                for j in 0..=d {
                    for i in 0..=d + 1 {
                        let rhs = if i < j {
                            vec![D(u(i)), S(u(j - 1))]
                        } else if i == j || i == j + 1 {
                            vec![]
                        } else {
                            vec![D(u(i - 1)), S(u(j))]
                        };
                        out.push(Relation::new(d, vec![S(u(j)), D(u(i))], rhs));
                    }
                }
            }
        }
        out
    }
}

fn simplex_rule(a: SimplexGen, b: SimplexGen) -> Option<Step<SimplexGen>> {
    use SimplexGen::{Degen, Face};
    match (a, b) {
        (Degen(j), Face(i)) => Some(if i < j {
            Step::Two(Face(i), Degen(j - 1))
        } else if i == j || i == j + 1 {
            Step::Cancel
        } else {
            Step::Two(Face(i - 1), Degen(j))
        }),
        (Face(j), Face(i)) if j <= i => Some(Step::Two(Face(i + 1), Face(j))),
        (Degen(j), Degen(i)) if j >= i => Some(Step::Two(Degen(i), Degen(j + 1))),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use SimplexGen::{Degen as S, Face as D};

    #[test]
    fn composing_two_first_faces() {
        let f = SimplexMorphism::face(2, 0);
        let g = SimplexMorphism::face(1, 0);
        let h = Simplex::compose(&f, &g).unwrap();
        assert_eq!(h.monos(), vec![1, 0]);
        assert!(h.epis().is_empty());
        assert_eq!(alloc::format!("{h}"), "d1 d0");
    }

    #[test]
    fn degeneracy_after_its_face_is_identity() {
        let h = Simplex::compose(
            &SimplexMorphism::degeneracy(0, 0),
            &SimplexMorphism::face(1, 0),
        )
        .unwrap();
        assert_eq!(h, Simplex::identity(0));
        assert_eq!(alloc::format!("{h}"), "id");
    }

    #[test]
    fn degeneracies_commute_into_ascending_order() {
        let h = Simplex::compose(
            &SimplexMorphism::degeneracy(0, 0),
            &SimplexMorphism::degeneracy(1, 0),
        )
        .unwrap();
        assert_eq!(h.epis(), vec![0, 1]);
        let n = Simplex::normalize(3, &[S(1), S(0)]).unwrap();
        assert_eq!(n.epis(), vec![0, 2]);
        assert_eq!((n.dom(), n.cod()), (3, 1));
    }

    #[test]
    fn eval_matches_generator_formulas() {
        assert_eq!(
            Simplex::eval(&SimplexMorphism::degeneracy(1, 1), 2).unwrap(),
            1
        );
        assert_eq!(Simplex::eval(&SimplexMorphism::face(2, 0), 0).unwrap(), 1);
        assert!(Simplex::eval(&SimplexMorphism::face(2, 0), 2).is_err());
        let id = Simplex::identity(4);
        assert!((0..=4).all(|p| Simplex::eval(&id, p).unwrap() == p));
    }

    #[test]
    fn empty_word_is_identity() {
        assert_eq!(Simplex::normalize(3, &[]).unwrap(), Simplex::identity(3));
    }

    #[test]
    fn inconsistent_words_are_rejected() {
        assert!(Simplex::normalize(0, &[S(0)]).is_err());
        assert!(Simplex::normalize(1, &[D(3)]).is_err());
        assert!(
            Simplex::compose(&SimplexMorphism::face(2, 0), &SimplexMorphism::face(3, 0)).is_err()
        );
    }

    #[test]
    fn canonical_constructor_checks_invariants() {
        assert!(SimplexMorphism::new(1, 2, &[2], &[]).is_ok());
        assert!(SimplexMorphism::new(1, 2, &[0, 2], &[0]).is_err());
        assert!(SimplexMorphism::new(3, 1, &[], &[2, 0]).is_err());
        assert!(SimplexMorphism::new(3, 1, &[], &[0, 1]).is_ok());
    }

    #[test]
    fn epi_counts_are_binomial() {
        assert_eq!(Simplex::epis(3, 1).len(), 3);
        assert_eq!(Simplex::epis(5, 2).len(), 10);
        assert_eq!(Simplex::epis(2, 2), vec![Simplex::identity(2)]);
        assert!(Simplex::epis(1, 2).is_empty());
    }

    #[test]
    fn sections_of_a_codegeneracy() {
        let s = Simplex::sections(&SimplexMorphism::degeneracy(0, 0)).unwrap();
        assert_eq!(s.len(), 2);
        assert!(s.contains(&SimplexMorphism::face(1, 0)));
        assert!(s.contains(&SimplexMorphism::face(1, 1)));
        assert!(Simplex::sections(&SimplexMorphism::face(1, 0)).is_err());
    }

    #[test]
    fn split_mono_peels_largest_face() {
        let f = SimplexMorphism::new(1, 3, &[3, 1], &[]).unwrap();
        let (idx, rest) = Simplex::split_mono(&f).unwrap();
        assert_eq!(idx, 3);
        assert_eq!(rest, SimplexMorphism::face(2, 1));
        assert_eq!(
            Simplex::compose(&SimplexMorphism::face(3, 3), &rest).unwrap(),
            f
        );
    }
}
