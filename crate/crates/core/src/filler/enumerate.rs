//! Enumeration of spheres over a tabulated complex and the coskeletality
//! report built from it.
//!
//! Faces are chosen position by position in listing order. Each cycle
//! equation constrains the later of its two positions once the earlier one
//! is fixed, and candidates come from an index of cells by face value.
//! Past a node budget the search falls back to seeded random descent plus
//! the boundaries of every cell.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{ConstructiveFill, FillError, FillStatus, Sphere};
use crate::complex::{CellId, ComplexError, SkeletalComplex, TabulatedPresheaf};
use crate::shape::{Shape, ShapeKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    /// Backtracking nodes allowed per level before switching to sampling.
    pub node_budget: u64,
    /// Random descents per level in sampled mode.
    pub samples: u64,
    pub seed: u64,
    /// Largest number of cells tabulated.
    pub cell_budget: usize,
    /// Run the constructive filler on every sphere and compare.
    pub cross_check: bool,
    /// Witness spheres kept per level and kind.
    pub witness_cap: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            node_budget: 1_000_000,
            samples: 20_000,
            seed: 0,
            cell_budget: 2_000_000,
            cross_check: true,
            witness_cap: 8,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Coverage {
    Exhaustive,
    Sampled,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelReport {
    pub k: usize,
    pub mode: Coverage,
    pub spheres: u64,
    pub uniquely_filled: u64,
    pub unfilled: u64,
    pub multiply_filled: u64,
    /// Distinct boundaries of `k`-cells.
    pub boundaries: u64,
    pub nodes: u64,
    /// Random descents tried and completed (sampled mode).
    pub samples_tried: u64,
    pub samples_completed: u64,
    pub constructive_checked: u64,
    pub constructive_agreed: u64,
    pub unfilled_witnesses: Vec<String>,
    pub multiply_filled_witnesses: Vec<String>,
    pub violation_count: u64,
    pub violations: Vec<String>,
}

impl LevelReport {
    fn new(k: usize, mode: Coverage) -> Self {
        Self {
            k,
            mode,
            spheres: 0,
            uniquely_filled: 0,
            unfilled: 0,
            multiply_filled: 0,
            boundaries: 0,
            nodes: 0,
            samples_tried: 0,
            samples_completed: 0,
            constructive_checked: 0,
            constructive_agreed: 0,
            unfilled_witnesses: Vec::new(),
            multiply_filled_witnesses: Vec::new(),
            violation_count: 0,
            violations: Vec::new(),
        }
    }

    /// Every sphere seen had exactly one filler.
    pub fn holds(&self) -> bool {
        self.unfilled == 0 && self.multiply_filled == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub shape: ShapeKind,
    pub skeletal: usize,
    pub truncation: usize,
    pub k_min: usize,
    pub up_to: usize,
    pub levels: Vec<LevelReport>,
    /// Every checked sphere of dimension in `(k_min, up_to]` is uniquely filled.
    pub coskeletal: bool,
    /// Some level was only sampled.
    pub partial: bool,
}

impl VerificationReport {
    pub fn level(&self, k: usize) -> Option<&LevelReport> {
        self.levels.iter().find(|l| l.k == k)
    }

    /// Lowest dimension with an unfilled or multiply filled sphere.
    pub fn first_failure(&self) -> Option<usize> {
        self.levels.iter().find(|l| !l.holds()).map(|l| l.k)
    }

    pub fn violation_count(&self) -> u64 {
        self.levels.iter().map(|l| l.violation_count).sum()
    }

    pub fn constructive_checked(&self) -> u64 {
        self.levels.iter().map(|l| l.constructive_checked).sum()
    }

    pub fn constructive_agreed(&self) -> u64 {
        self.levels.iter().map(|l| l.constructive_agreed).sum()
    }
}

/// Spheres of one dimension over the tables.
pub(crate) struct SphereSearch<'a, S: Shape> {
    t: &'a TabulatedPresheaf<S>,
    k: usize,
    arity: usize,
    /// For position `p`: `(q, inner_p, inner_q)` with `q <= p`, meaning
    /// face `inner_p` of `c_p` equals face `inner_q` of `c_q`.
    constraints: Vec<Vec<(usize, usize, usize)>>,
    /// `by_face[idx][value]`: `(k-1)`-cells whose face `idx` is `value`.
    by_face: Vec<Vec<Vec<CellId>>>,
    all: Vec<CellId>,
}

impl<'a, S: Shape> SphereSearch<'a, S> {
    pub(crate) fn new(t: &'a TabulatedPresheaf<S>, k: usize) -> Self {
        let arity = S::face_count(k);
        let mut constraints = vec![Vec::new(); arity];
        if k >= 2 {
            for eq in S::cycle_equations(k) {
                if eq.outer >= eq.outer2 {
                    constraints[eq.outer].push((eq.outer2, eq.inner, eq.inner2));
                } else {
                    constraints[eq.outer2].push((eq.outer, eq.inner2, eq.inner));
                }
            }
        }
        let d = k - 1;
        let mut by_face = Vec::new();
        if d >= 1 {
            let fa = S::face_count(d);
            by_face = vec![vec![Vec::new(); t.count(d - 1)]; fa];
            for id in 0..t.count(d) as CellId {
                for (idx, &v) in t.faces_of(d, id).iter().enumerate() {
                    by_face[idx][v as usize].push(id);
                }
            }
        }
        Self {
            t,
            k,
            arity,
            constraints,
            by_face,
            all: (0..t.count(d) as CellId).collect(),
        }
    }

    fn fits(&self, p: usize, cand: CellId, chosen: &[CellId]) -> bool {
        let d = self.k - 1;
        self.constraints[p].iter().all(|&(q, ip, iq)| {
            let other = if q == p { cand } else { chosen[q] };
            self.t.face(d, cand, ip) == self.t.face(d, other, iq)
        })
    }

    /// Candidates for position `p` given the faces at earlier positions.
    fn candidates(&self, p: usize, chosen: &[CellId]) -> Vec<CellId> {
        let d = self.k - 1;
        let mut seed: Option<&[CellId]> = None;
        for &(q, ip, iq) in &self.constraints[p] {
            if q == p {
                continue;
            }
            let v = self.t.face(d, chosen[q], iq);
            let list = &self.by_face[ip][v as usize];
            if seed.is_none_or(|s| list.len() < s.len()) {
                seed = Some(list);
            }
        }
        let base = seed.unwrap_or(&self.all);
        base.iter()
            .copied()
            .filter(|&c| self.fits(p, c, chosen))
            .collect()
    }

    /// Depth-first enumeration. Returns `false` when the budget ran out.
    fn exhaust(&self, budget: u64, nodes: &mut u64, visit: &mut dyn FnMut(&[CellId])) -> bool {
        let mut chosen = Vec::with_capacity(self.arity);
        self.dfs(&mut chosen, budget, nodes, visit)
    }

    fn dfs(
        &self,
        chosen: &mut Vec<CellId>,
        budget: u64,
        nodes: &mut u64,
        visit: &mut dyn FnMut(&[CellId]),
    ) -> bool {
        let p = chosen.len();
        if p == self.arity {
            visit(chosen);
            return true;
        }
        for c in self.candidates(p, chosen) {
            *nodes += 1;
            if *nodes > budget {
                return false;
            }
            chosen.push(c);
            let ok = self.dfs(chosen, budget, nodes, visit);
            chosen.pop();
            if !ok {
                return false;
            }
        }
        true
    }

    pub(crate) fn descend(&self, rng: &mut ChaCha8Rng) -> Option<Vec<CellId>> {
        let mut chosen = Vec::with_capacity(self.arity);
        for p in 0..self.arity {
            let c = self.candidates(p, &chosen);
            if c.is_empty() {
                return None;
            }
            chosen.push(c[rng.gen_range(0..c.len())]);
        }
        Some(chosen)
    }
}

struct Judge<'a, S: ConstructiveFill> {
    x: &'a SkeletalComplex<S>,
    t: &'a TabulatedPresheaf<S>,
    k: usize,
    fillers: BTreeMap<Vec<CellId>, Vec<CellId>>,
    opts: &'a SearchOptions,
    boundaries_seen: u64,
}

impl<'a, S: ConstructiveFill> Judge<'a, S> {
    fn note_violation(&self, rep: &mut LevelReport, msg: String) {
        rep.violation_count += 1;
        if rep.violations.len() < self.opts.witness_cap {
            rep.violations.push(msg);
        }
    }

    fn judge(&mut self, ids: &[CellId], rep: &mut LevelReport) {
        let d = self.k - 1;
        rep.spheres += 1;
        let sphere = Sphere::new(self.k, ids.iter().map(|&i| self.t.cell(d, i)).collect());
        let found: &[CellId] = self.fillers.get(ids).map_or(&[], |v| v.as_slice());
        match found.len() {
            0 => {
                rep.unfilled += 1;
                if rep.unfilled_witnesses.len() < self.opts.witness_cap {
                    rep.unfilled_witnesses.push(sphere.literal(self.x));
                }
            }
            1 => {
                rep.uniquely_filled += 1;
                self.boundaries_seen += 1;
            }
            _ => {
                rep.multiply_filled += 1;
                self.boundaries_seen += 1;
                if rep.multiply_filled_witnesses.len() < self.opts.witness_cap {
                    rep.multiply_filled_witnesses.push(sphere.literal(self.x));
                }
                let degenerate = found
                    .iter()
                    .filter(|&&c| self.t.cell(self.k, c).is_degenerate())
                    .count();
                if degenerate > 1 {
                    let msg = format!("two degenerate fillers of {}", sphere.literal(self.x));
                    self.note_violation(rep, msg);
                }
            }
        }
        if !self.opts.cross_check {
            return;
        }
        match S::constructive_fill(self.x, &sphere) {
            Ok(r) if r.status == FillStatus::Filled => {
                rep.constructive_checked += 1;
                let filler = r.filler.and_then(|c| self.t.id_of(&c));
                if found.len() == 1 && filler == Some(found[0]) {
                    rep.constructive_agreed += 1;
                } else {
                    let msg = format!(
                        "constructive filler disagrees with the oracle on {}",
                        sphere.literal(self.x)
                    );
                    self.note_violation(rep, msg);
                }
            }
            Ok(_) => {}
            Err(e) => {
                let msg = format!("{e} on {}", sphere.literal(self.x));
                self.note_violation(rep, msg);
            }
        }
    }
}

fn level_report<S: ConstructiveFill>(
    x: &SkeletalComplex<S>,
    t: &TabulatedPresheaf<S>,
    k: usize,
    opts: &SearchOptions,
) -> LevelReport {
    let search = SphereSearch::new(t, k);
    let mut fillers: BTreeMap<Vec<CellId>, Vec<CellId>> = BTreeMap::new();
    for id in 0..t.count(k) as CellId {
        fillers
            .entry(t.faces_of(k, id).to_vec())
            .or_default()
            .push(id);
    }
    let boundaries = fillers.len() as u64;
    let mut judge = Judge {
        x,
        t,
        k,
        fillers,
        opts,
        boundaries_seen: 0,
    };

    let mut rep = LevelReport::new(k, Coverage::Exhaustive);
    let mut nodes = 0;
    let complete = search.exhaust(opts.node_budget, &mut nodes, &mut |ids| {
        judge.judge(ids, &mut rep)
    });
    rep.nodes = nodes;
    rep.boundaries = boundaries;
    if complete {
        if judge.boundaries_seen != boundaries {
            let msg = format!(
                "enumeration reached {} of {} cell boundaries",
                judge.boundaries_seen, boundaries
            );
            judge.note_violation(&mut rep, msg);
        }
        return rep;
    }

    let mut rep = LevelReport::new(k, Coverage::Sampled);
    rep.nodes = nodes;
    rep.boundaries = boundaries;
    let mut pool: BTreeSet<Vec<CellId>> = judge.fillers.keys().cloned().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ ((k as u64) << 32));
    for _ in 0..opts.samples {
        rep.samples_tried += 1;
        if let Some(s) = search.descend(&mut rng) {
            rep.samples_completed += 1;
            pool.insert(s);
        }
    }
    judge.boundaries_seen = 0;
    for ids in &pool {
        judge.judge(ids, &mut rep);
    }
    rep
}

/// Checks existence and uniqueness of fillers for every sphere of dimension
/// `k` with `k_min < k <= up_to`.
pub fn coskeletal_up_to<S: ConstructiveFill>(
    x: &SkeletalComplex<S>,
    k_min: usize,
    up_to: usize,
    opts: &SearchOptions,
) -> Result<VerificationReport, FillError> {
    if up_to > x.truncation() {
        return Err(ComplexError::Truncation {
            dim: up_to,
            truncation: x.truncation(),
        }
        .into());
    }
    let mut levels = Vec::new();
    if k_min < up_to {
        let t = x.tabulate(up_to, opts.cell_budget)?;
        for k in (k_min + 1)..=up_to {
            levels.push(level_report(x, &t, k, opts));
        }
    }
    let coskeletal = levels.iter().all(|l| l.holds());
    let partial = levels.iter().any(|l| l.mode == Coverage::Sampled);
    Ok(VerificationReport {
        shape: S::KIND,
        skeletal: x.skeletal_level(),
        truncation: x.truncation(),
        k_min,
        up_to,
        levels,
        coskeletal,
        partial,
    })
}
