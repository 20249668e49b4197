//! The cyclic category: the simplex category enlarged by the rotations
//! `τ_n : [n] -> [n]`, `x ↦ x + 1 mod n + 1`.
//!
//! Every morphism factors uniquely as a rotation of its domain followed by a
//! monotone map, which is the stored form. Words may also use the extra
//! degeneracy `σ_n : [n] -> [n-1]`, which is `σ_0 τ_n`.
//!
//! Points are evaluated through the lift of a morphism to an equivariant map
//! `ℤ -> ℤ`: `eval(f, x)` for `x ∈ [dom]` lies in `0..=2 cod + 1`, and the
//! values determine `f`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::simplex::{SimplexGen, SimplexMorphism};
use super::{
    check_dim, fmt_word, CycleEquation, MorphismError, Relation, Shape, ShapeKind, Simplex,
};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cyclic;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CyclicGen {
    Face(u8),
    Degen(u8),
    /// `τ_n`, with `n` read off the position in the word.
    Rot,
    /// The extra degeneracy `σ_n : [n] -> [n-1]`.
    Extra(u8),
}

impl fmt::Display for CyclicGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CyclicGen::Face(i) => write!(f, "d{i}"),
            CyclicGen::Degen(j) => write!(f, "s{j}"),
            CyclicGen::Rot => f.write_str("t"),
            CyclicGen::Extra(n) => write!(f, "s{n}x"),
        }
    }
}

impl From<SimplexGen> for CyclicGen {
    fn from(g: SimplexGen) -> Self {
        match g {
            SimplexGen::Face(i) => CyclicGen::Face(i),
            SimplexGen::Degen(j) => CyclicGen::Degen(j),
        }
    }
}

/// `delta ∘ τ_dom^rotation`, with `rotation < dom + 1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicMorphism {
    rotation: u8,
    delta: SimplexMorphism,
}

impl fmt::Debug for CyclicMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]->[{}] ", self.dom(), self.cod())?;
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CyclicMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_word(f, &Cyclic::word(self))
    }
}

impl From<SimplexMorphism> for CyclicMorphism {
    fn from(delta: SimplexMorphism) -> Self {
        Self { rotation: 0, delta }
    }
}

impl CyclicMorphism {
    /// `delta ∘ τ^rotation`; the rotation is reduced modulo `dom + 1`.
    pub fn new(rotation: usize, delta: SimplexMorphism) -> Self {
        Self {
            rotation: (rotation % (delta.dom() + 1)) as u8,
            delta,
        }
    }

    /// `τ_n`.
    pub fn rotation_of(n: usize) -> Self {
        Self::new(1, Simplex::identity(n))
    }

    /// The extra degeneracy `σ_n : [n] -> [n-1]`.
    pub fn extra_degeneracy(n: usize) -> Self {
        Self::new(1, SimplexMorphism::degeneracy(n - 1, 0))
    }

    pub fn dom(&self) -> usize {
        self.delta.dom()
    }

    pub fn cod(&self) -> usize {
        self.delta.cod()
    }

    pub fn rotation(&self) -> usize {
        self.rotation as usize
    }

    pub fn delta_part(&self) -> SimplexMorphism {
        self.delta
    }

    /// The morphism as a map of the simplex category, when it has no rotation.
    pub fn underlying_simplex_morphism(&self) -> Option<SimplexMorphism> {
        (self.rotation == 0).then_some(self.delta)
    }

    /// Value of the equivariant lift at `x ∈ [dom]`.
    pub fn lift(&self, x: usize) -> usize {
        let n1 = self.dom() + 1;
        let s = x + self.rotation();
        (s / n1) * (self.cod() + 1) + self.delta.apply(s % n1)
    }

    /// The extra-degeneracy spelling of an epimorphism: `Some((None, ε))`
    /// when no rotation is needed, `Some((Some(k), ε))` for `ε σ_k` with `σ_k`
    /// the extra degeneracy of `[k]` applied first, `None` when neither
    /// spelling fits.
    pub fn extra_spelling(&self) -> Option<(Option<usize>, SimplexMorphism)> {
        if !self.delta.is_epi() {
            return None;
        }
        if self.rotation == 0 {
            return Some((None, self.delta));
        }
        let n = self.dom();
        let rest_dom = n.checked_sub(1)?;
        for eps in Simplex::epis(rest_dom, self.cod()) {
            let cand = Cyclic::compose(&eps.into(), &Self::extra_degeneracy(n)).ok()?;
            if cand == *self {
                return Some((Some(n), eps));
            }
        }
        None
    }
}

/// `τ_a ∘ φ = φ' ∘ τ_b^r'` for monotone `φ : [b] -> [a]`.
fn push_rotation(phi: &SimplexMorphism) -> (SimplexMorphism, usize) {
    let (a, b) = (phi.cod(), phi.dom());
    let t = phi.table();
    let top = (0..=b).filter(|&x| t[x] as usize == a).count();
    let mut out = [0u8; 32];
    if top == 0 {
        for x in 0..=b {
            out[x] = t[x] + 1;
        }
    } else {
        for z in 0..=b {
            out[z] = if z < top { 0 } else { t[z - top] + 1 };
        }
    }
    (SimplexMorphism::from_table(b, a, &out), top)
}

impl Shape for Cyclic {
    type Morphism = CyclicMorphism;
    type Gen = CyclicGen;
    type Point = usize;

    const KIND: ShapeKind = ShapeKind::Cyclic;

    fn identity(n: usize) -> CyclicMorphism {
        Simplex::identity(n).into()
    }

    fn dom(f: &CyclicMorphism) -> usize {
        f.dom()
    }

    fn cod(f: &CyclicMorphism) -> usize {
        f.cod()
    }

    fn compose(f: &CyclicMorphism, g: &CyclicMorphism) -> Result<CyclicMorphism, MorphismError> {
        if f.dom() != g.cod() {
            return Err(MorphismError::Composition {
                dom: f.dom(),
                cod: g.cod(),
            });
        }
        // f ∘ g = δf τ^rf δg τ^rg; move the rotations of f to the right of δg
        let mut phi = g.delta;
        let mut rot = g.rotation();
        for _ in 0..f.rotation() {
            let (next, r) = push_rotation(&phi);
            phi = next;
            rot += r;
        }
        let delta = Simplex::compose(&f.delta, &phi)?;
        Ok(CyclicMorphism::new(rot, delta))
    }

    fn factor(f: &CyclicMorphism) -> (CyclicMorphism, CyclicMorphism) {
        let (mono, epi) = Simplex::factor(&f.delta);
        (mono.into(), CyclicMorphism::new(f.rotation(), epi))
    }

    fn is_epi(f: &CyclicMorphism) -> bool {
        f.delta.is_epi()
    }

    fn is_mono(f: &CyclicMorphism) -> bool {
        f.delta.is_mono()
    }

    fn epis(n: usize, m: usize) -> Vec<CyclicMorphism> {
        let deltas = Simplex::epis(n, m);
        (0..=n)
            .flat_map(|r| deltas.iter().map(move |d| CyclicMorphism::new(r, *d)))
            .collect()
    }

    fn monos(m: usize, n: usize) -> Vec<CyclicMorphism> {
        let deltas = Simplex::monos(m, n);
        (0..=m)
            .flat_map(|r| deltas.iter().map(move |d| CyclicMorphism::new(r, *d)))
            .collect()
    }

    /// A section of `δ τ^r` is `τ^{-r} μ` with `μ` a section of `δ`: the
    /// only rotations that are maps of the simplex category are identities.
    fn sections(epi: &CyclicMorphism) -> Result<Vec<CyclicMorphism>, MorphismError> {
        if !epi.delta.is_epi() {
            return Err(MorphismError::NotEpi(format!("{epi}")));
        }
        let n1 = epi.dom() + 1;
        let back = CyclicMorphism::new(n1 - epi.rotation(), Simplex::identity(epi.dom()));
        Simplex::sections(&epi.delta)?
            .into_iter()
            .map(|mu| Self::compose(&back, &mu.into()))
            .collect()
    }

    fn eval(f: &CyclicMorphism, x: usize) -> Result<usize, MorphismError> {
        if x > f.dom() {
            return Err(MorphismError::Domain {
                point: format!("{x}"),
                dim: f.dom(),
            });
        }
        Ok(f.lift(x))
    }

    fn face_count(k: usize) -> usize {
        k + 1
    }

    fn face_map(k: usize, idx: usize) -> CyclicMorphism {
        SimplexMorphism::face(k, idx).into()
    }

    fn face_gen(_k: usize, idx: usize) -> CyclicGen {
        CyclicGen::Face(idx as u8)
    }

    fn split_mono(f: &CyclicMorphism) -> Option<(usize, CyclicMorphism)> {
        let (idx, rest) = Simplex::split_mono(&f.delta)?;
        Some((idx, CyclicMorphism::new(f.rotation(), rest)))
    }

    fn cycle_equations(k: usize) -> Vec<CycleEquation> {
        Simplex::cycle_equations(k)
    }

    fn gen_morphism(gen: CyclicGen, dom: usize) -> Result<CyclicMorphism, MorphismError> {
        match gen {
            CyclicGen::Face(i) => Ok(Simplex::gen_morphism(SimplexGen::Face(i), dom)?.into()),
            CyclicGen::Degen(j) => Ok(Simplex::gen_morphism(SimplexGen::Degen(j), dom)?.into()),
            CyclicGen::Rot => {
                check_dim(dom)?;
                Ok(CyclicMorphism::rotation_of(dom))
            }
            CyclicGen::Extra(n) => {
                check_dim(dom)?;
                if dom == 0 || n as usize != dom {
                    return Err(MorphismError::Word {
                        gen: format!("{gen}"),
                        dim: dom,
                    });
                }
                Ok(CyclicMorphism::extra_degeneracy(dom))
            }
        }
    }

    fn gen_dom_for_cod(gen: CyclicGen, cod: usize) -> Result<usize, MorphismError> {
        match gen {
            CyclicGen::Face(i) => Simplex::gen_dom_for_cod(SimplexGen::Face(i), cod),
            CyclicGen::Degen(j) => Simplex::gen_dom_for_cod(SimplexGen::Degen(j), cod),
            CyclicGen::Rot => {
                check_dim(cod)?;
                Ok(cod)
            }
            CyclicGen::Extra(n) if n as usize == cod + 1 && cod < super::MAX_DIM => Ok(cod + 1),
            CyclicGen::Extra(_) => Err(MorphismError::Word {
                gen: format!("{gen}"),
                dim: cod,
            }),
        }
    }

    fn elementary(cod: usize) -> Vec<CyclicGen> {
        let mut out: Vec<CyclicGen> = Simplex::elementary(cod)
            .into_iter()
            .map(CyclicGen::from)
            .collect();
        out.push(CyclicGen::Rot);
        if cod < super::MAX_DIM {
            out.push(CyclicGen::Extra(cod as u8 + 1));
        }
        out
    }

    /// Folds the word through `compose`; the pair form is already canonical.
    fn normalize(dom: usize, word: &[CyclicGen]) -> Result<CyclicMorphism, MorphismError> {
        check_dim(dom)?;
        super::compose_word::<Self>(dom, word)
    }

    fn word(f: &CyclicMorphism) -> Vec<CyclicGen> {
        let mut w: Vec<CyclicGen> = Simplex::word(&f.delta)
            .into_iter()
            .map(CyclicGen::from)
            .collect();
        w.extend(core::iter::repeat_n(CyclicGen::Rot, f.rotation()));
        w
    }

    fn relations(max_dim: usize) -> Vec<Relation<CyclicGen>> {
        use CyclicGen::{Degen as S, Extra as X, Face as D, Rot as T};
        let lift =
            |w: Vec<SimplexGen>| -> Vec<CyclicGen> { w.into_iter().map(CyclicGen::from).collect() };
        let mut out: Vec<Relation<CyclicGen>> = Simplex::relations(max_dim)
            .into_iter()
            .map(|r| Relation::new(r.dom, lift(r.lhs), lift(r.rhs)))
            .collect();
        let u = |x: usize| x as u8;
        for n in 0..=max_dim {
            // τ_n^{n+1} = id
            out.push(Relation::new(n, vec![T; n + 1], vec![]));
            if n >= 1 {
                // τ_n δ_i = δ_{i+1} τ_{n-1} for i < n, τ_n δ_n = δ_0
                for i in 0..n {
                    out.push(Relation::new(n - 1, vec![T, D(u(i))], vec![D(u(i + 1)), T]));
                }
                out.push(Relation::new(n - 1, vec![T, D(u(n))], vec![D(0)]));
                // the extra degeneracy is σ_0 τ_n, and σ_n δ_0 = τ_{n-1}
                out.push(Relation::new(n, vec![X(u(n))], vec![S(0), T]));
                out.push(Relation::new(n - 1, vec![X(u(n)), D(0)], vec![T]));
            }
            if n < max_dim {
                // τ_n σ_j = σ_{j+1} τ_{n+1} for j < n, τ_n σ_n = σ_0 τ_{n+1}^2
                for j in 0..n {
                    out.push(Relation::new(n + 1, vec![T, S(u(j))], vec![S(u(j + 1)), T]));
                }
                out.push(Relation::new(n + 1, vec![T, S(u(n))], vec![S(0), T, T]));
            }
        }
        out
    }
}
