//! Explicit tables of a truncated complex: every cell up to a dimension and
//! the action of every elementary generator on them.
//!
//! The tables are an independent representation used to cross-check the
//! structural one: degeneracy and Eilenberg–Zilber decompositions are
//! recomputed from the tables alone.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{face_arity, Cell, ComplexError, SkeletalComplex};
use crate::shape::Shape;

pub type CellId = u32;

struct ActionTable<S: Shape> {
    gen: S::Gen,
    dom: usize,
    table: Vec<CellId>,
}

pub struct TabulatedPresheaf<S: Shape> {
    up_to: usize,
    cells: Vec<Vec<Cell<S>>>,
    index: Vec<BTreeMap<Cell<S>, CellId>>,
    /// `faces[k][id * arity + idx]`.
    faces: Vec<Vec<CellId>>,
    /// Tables of the elementary generators with codomain `k`.
    actions: Vec<Vec<ActionTable<S>>>,
    /// Whether a cell lies in the image of an elementary degeneracy table.
    degenerate: Vec<Vec<bool>>,
}

impl<S: Shape> TabulatedPresheaf<S> {
    pub(super) fn build(
        x: &SkeletalComplex<S>,
        up_to: usize,
        cell_budget: usize,
    ) -> Result<Self, ComplexError> {
        if up_to > x.truncation() {
            return Err(ComplexError::Truncation {
                dim: up_to,
                truncation: x.truncation(),
            });
        }
        let mut cells = Vec::with_capacity(up_to + 1);
        let mut index = Vec::with_capacity(up_to + 1);
        let mut total = 0usize;
        for k in 0..=up_to {
            total += x.cell_count(k);
            if total > cell_budget {
                return Err(ComplexError::Budget {
                    what: format!("tabulating up to dimension {k}"),
                    limit: cell_budget,
                });
            }
            let level = x.cells_of_dim(k);
            let idx: BTreeMap<Cell<S>, CellId> = level
                .iter()
                .enumerate()
                .map(|(i, c)| (*c, i as CellId))
                .collect();
            cells.push(level);
            index.push(idx);
        }

        let mut faces = vec![Vec::new(); up_to + 1];
        for k in 1..=up_to {
            let arity = face_arity::<S>(k);
            let mut table = Vec::with_capacity(cells[k].len() * arity);
            for c in &cells[k] {
                for i in 0..arity {
                    let f = x.act(c, &S::face_map(k, i))?;
                    table.push(index[k - 1][&f]);
                }
            }
            faces[k] = table;
        }

        let mut actions = Vec::with_capacity(up_to + 1);
        let mut degenerate: Vec<Vec<bool>> = cells.iter().map(|l| vec![false; l.len()]).collect();
        for k in 0..=up_to {
            let mut level = Vec::new();
            for gen in S::elementary(k) {
                let dom = S::gen_dom_for_cod(gen, k)?;
                if dom > up_to {
                    continue;
                }
                let f = S::gen_morphism(gen, dom)?;
                let mut table = Vec::with_capacity(cells[k].len());
                for c in &cells[k] {
                    let y = x.act(c, &f)?;
                    let id = index[dom][&y];
                    if dom > k {
                        degenerate[dom][id as usize] = true;
                    }
                    table.push(id);
                }
                level.push(ActionTable { gen, dom, table });
            }
            actions.push(level);
        }

        Ok(Self {
            up_to,
            cells,
            index,
            faces,
            actions,
            degenerate,
        })
    }

    pub fn up_to(&self) -> usize {
        self.up_to
    }

    pub fn count(&self, k: usize) -> usize {
        self.cells[k].len()
    }

    pub fn cells(&self, k: usize) -> &[Cell<S>] {
        &self.cells[k]
    }

    pub fn cell(&self, k: usize, id: CellId) -> Cell<S> {
        self.cells[k][id as usize]
    }

    pub fn id_of(&self, c: &Cell<S>) -> Option<CellId> {
        self.index.get(c.dim())?.get(c).copied()
    }

    /// Face ids of a `k`-cell in listing order.
    pub fn faces_of(&self, k: usize, id: CellId) -> &[CellId] {
        let a = face_arity::<S>(k);
        &self.faces[k][id as usize * a..(id as usize + 1) * a]
    }

    pub fn face(&self, k: usize, id: CellId, idx: usize) -> CellId {
        self.faces_of(k, id)[idx]
    }

    /// `x · g` through the table of `g`; `None` when no table reaches that far.
    pub fn act_gen(&self, k: usize, id: CellId, gen: S::Gen) -> Option<(usize, CellId)> {
        let t = self.actions.get(k)?.iter().find(|t| t.gen == gen)?;
        Some((t.dom, t.table[id as usize]))
    }

    /// `x · w` for a word in functional order, letter by letter.
    pub fn act_word(&self, k: usize, id: CellId, word: &[S::Gen]) -> Option<(usize, CellId)> {
        let mut cur = (k, id);
        for g in word {
            cur = self.act_gen(cur.0, cur.1, *g)?;
        }
        Some(cur)
    }

    /// `x · f` through the canonical word of `f`.
    pub fn act_morphism(&self, k: usize, id: CellId, f: &S::Morphism) -> Option<CellId> {
        if S::cod(f) != k {
            return None;
        }
        let (d, y) = self.act_word(k, id, &S::word(f))?;
        debug_assert_eq!(d, S::dom(f));
        Some(y)
    }

    /// Checks every instance of the defining relations on every cell.
    /// Returns the number of (relation, cell) pairs checked.
    pub fn check_relations(&self) -> Result<usize, String> {
        let mut checked = 0;
        for rel in S::relations(self.up_to) {
            let cod_l = S::cod(&S::normalize(rel.dom, &rel.lhs).map_err(|e| format!("{e}"))?);
            let cod_r = S::cod(&S::normalize(rel.dom, &rel.rhs).map_err(|e| format!("{e}"))?);
            if cod_l != cod_r {
                return Err(format!("relation at {} has mismatched codomains", rel.dom));
            }
            for id in 0..self.count(cod_l) as CellId {
                let a = self.act_word(cod_l, id, &rel.lhs);
                let b = self.act_word(cod_l, id, &rel.rhs);
                if a.is_none() || a != b {
                    return Err(format!(
                        "relation {:?} = {:?} (domain {}) fails on cell {} of dimension {}",
                        rel.lhs, rel.rhs, rel.dom, id, cod_l
                    ));
                }
                checked += 1;
            }
        }
        Ok(checked)
    }

    /// Non-degeneracy read off the tables: not the image of any elementary
    /// degeneracy.
    pub fn is_nondegenerate(&self, k: usize, id: CellId) -> bool {
        !self.degenerate[k][id as usize]
    }

    /// Every decomposition `x = y · ε` with `y` non-degenerate (by the tables)
    /// and `ε` a canonical epi, found by trying each section of each epi.
    pub fn ez_decompose_tabulated(
        &self,
        k: usize,
        id: CellId,
    ) -> Vec<(usize, CellId, S::Morphism)> {
        let mut out = Vec::new();
        for m in 0..=k {
            for eps in S::epis(k, m) {
                let Ok(sections) = S::sections(&eps) else {
                    continue;
                };
                for mu in sections {
                    let Some(y) = self.act_morphism(k, id, &mu) else {
                        continue;
                    };
                    if !self.is_nondegenerate(m, y) {
                        continue;
                    }
                    if self.act_morphism(m, y, &eps) == Some(id) && !out.contains(&(m, y, eps)) {
                        out.push((m, y, eps));
                    }
                }
            }
        }
        out
    }
}
