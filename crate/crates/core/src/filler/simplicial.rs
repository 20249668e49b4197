//! Constructive filler for simplicial spheres whose faces are all at least
//! twice degenerate: with `r` the least face degeneracy and `m` the first
//! face attaining it, `c_m σ_m` fills every `k`-sphere with `k < 2r + 3`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{
    check_shape, violation, ConstructiveFill, FillError, FillResult, ReductionProfile, Sphere,
    TraceStep,
};
use crate::complex::{Cell, SkeletalComplex};
use crate::shape::{Simplex, SimplexGen, SimplexMorphism};

type X = SkeletalComplex<Simplex>;

fn d(i: usize) -> SimplexGen {
    SimplexGen::Face(i as u8)
}

fn s(j: usize) -> SimplexGen {
    SimplexGen::Degen(j as u8)
}

/// Asserts `lhs == rhs` for one link of a chain of equalities.
fn link(x: &X, lhs: &Cell<Simplex>, rhs: &Cell<Simplex>, what: &str) -> Result<(), FillError> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(violation(format!(
            "{what}: {} ≠ {}",
            x.cell_literal(lhs),
            x.cell_literal(rhs)
        )))
    }
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), FillError> {
    if cond {
        Ok(())
    } else {
        Err(violation(what()))
    }
}

impl ConstructiveFill for Simplex {
    fn constructive_fill(
        x: &X,
        sphere: &Sphere<Simplex>,
    ) -> Result<FillResult<Simplex>, FillError> {
        check_shape(sphere)?;
        let k = sphere.k;
        let c = &sphere.faces;
        if let Some(u) = c.iter().position(|f| f.dgn() < 2) {
            return Ok(FillResult::not_applicable(format!(
                "face c_{u} has degeneracy {} < 2",
                c[u].dgn()
            )));
        }
        let r = c.iter().map(|f| f.dgn()).min().unwrap_or(0);
        if k >= 2 * r + 3 {
            return Ok(FillResult::not_applicable(format!(
                "k = {k} is not below 2r + 3 = {}",
                2 * r + 3
            )));
        }
        let m = c.iter().position(|f| f.dgn() == r).unwrap_or(0);
        let cm = c[m];

        // M: ordinals properly reducing c_m, read off the decomposition.
        let big_m = cm.epi.epis();
        ensure(big_m.len() == r, || {
            format!("|M| = {} but r = {r}", big_m.len())
        })?;
        ensure(big_m.iter().all(|&j| m <= j && j + 2 <= k), || {
            format!("M = {big_m:?} not within [{m}, {}]", k as isize - 2)
        })?;
        let properly: Vec<usize> = (0..k)
            .filter(|&j| x.properly_reduces(&cm, j).unwrap_or(false))
            .collect();
        ensure(properly == big_m, || {
            format!("properly reducing set {properly:?} of c_m differs from M = {big_m:?}")
        })?;
        let l = big_m[big_m.len() - 1] + 1;
        ensure(x.reduces(&cm, l)?, || {
            format!("l = {l} does not reduce c_m")
        })?;

        let profile = ReductionProfile {
            r,
            m,
            m_sign: None,
            big_m: big_m.clone(),
            l: Some(l),
        };

        // The r + 2 faces of degeneracy r pinned down by c_m.
        let mut pinned: BTreeSet<usize> = big_m.iter().map(|j| j + 1).collect();
        pinned.insert(m);
        pinned.insert(l + 1);
        ensure(pinned.len() == r + 2, || {
            format!("{} pinned faces, expected {}", pinned.len(), r + 2)
        })?;
        for &j in big_m.iter().chain(core::iter::once(&l)) {
            ensure(x.properly_reduces(&c[j + 1], m)?, || {
                format!("m = {m} does not properly reduce c_{}", j + 1)
            })?;
        }
        for &u in &pinned {
            ensure(c[u].dgn() == r, || {
                format!("pinned face c_{u} has degeneracy {} ≠ {r}", c[u].dgn())
            })?;
            let expect = x.act_word(&cm, &[s(m), d(u)])?;
            link(
                x,
                &c[u],
                &expect,
                &format!("pinned face c_{u} = c_m σ_m δ_u"),
            )?;
        }

        // c_m = c_{m+1}, recording which hypothesis gives it.
        ensure(m < k, || "m is the last face".into())?;
        let next = c[m + 1];
        let subcase = if x.reduces(&cm, m)? {
            "a"
        } else if (0..k - 1).any(|j| {
            x.properly_reduces(&cm, j).unwrap_or(false)
                && x.properly_reduces(&next, j).unwrap_or(false)
        }) {
            "b"
        } else if x.reduces(&next, m)? && next.dgn() == r {
            "c"
        } else {
            "d"
        };
        link(x, &cm, &next, "c_m = c_{m+1}")?;

        let filler = x.act(&cm, &SimplexMorphism::degeneracy(k - 1, m))?;
        let mut trace = Vec::new();
        for u in 0..=k {
            let branch = branch_for(x, c, &big_m, &pinned, r, m, u, subcase)?;
            let want = x.act(&filler, &SimplexMorphism::face(k, u))?;
            link(
                x,
                &c[u],
                &want,
                &format!("face c_{u} of the filler ({branch})"),
            )?;
            trace.push(TraceStep {
                face: format!("c_{u}"),
                branch,
            });
        }
        Ok(FillResult::filled(filler, Some(profile), trace))
    }
}

/// Names the branch of the argument covering face `u` and checks the
/// intermediate equalities it relies on.
#[allow(clippy::too_many_arguments)]
fn branch_for(
    x: &X,
    c: &[Cell<Simplex>],
    big_m: &[usize],
    pinned: &BTreeSet<usize>,
    r: usize,
    m: usize,
    u: usize,
    subcase: &str,
) -> Result<String, FillError> {
    let k = c.len() - 1;
    let cm = c[m];
    if u == m {
        return Ok("direct: σ_m δ_m = id".into());
    }
    if u == m + 1 {
        return Ok(format!("c_m = c_(m+1), subcase ({subcase})"));
    }
    if pinned.contains(&u) {
        return Ok("least r+2 faces".into());
    }
    if u < m {
        // Part I.
        let mut choices: Vec<usize> = Vec::with_capacity(r + 1);
        choices.push(m - 1);
        choices.extend_from_slice(big_m);
        let mut p = None;
        for &q in &choices {
            if x.properly_reduces(&c[u], q)? {
                p = Some(q);
                break;
            }
        }
        let p =
            p.ok_or_else(|| violation(format!("no p in {{m-1}} ∪ M properly reduces c_{u}")))?;
        ensure(u <= p, || format!("p = {p} below u = {u}"))?;
        let chain = x.act_word(&c[p + 1], &[s(p + 1), d(u)])?;
        link(
            x,
            &c[u],
            &chain,
            &format!("c_{u} = c_(p+1) σ_(p+1) δ_{u} with p = {p}"),
        )?;
        let which = if p + 1 == m {
            "p = m-1"
        } else if p == m {
            "p = m"
        } else {
            "p > m"
        };
        return Ok(format!("Part I, {which} (p = {p})"));
    }

    // u > m + 1 and not pinned: Parts II and III share K.
    let big_k = k_set(big_m, m, u);
    ensure(big_k.len() == r + 1, || {
        format!("|K| = {} for u = {u}, expected {}", big_k.len(), r + 1)
    })?;
    let dgn_u = c[u].dgn();
    if dgn_u > r {
        ensure(!big_k.contains(&(k - 1)), || format!("k-1 ∈ K for u = {u}"))?;
        let mut p = None;
        for &q in &big_k {
            if x.properly_reduces(&c[u], q)? {
                p = Some(q);
                break;
            }
        }
        let p =
            p.ok_or_else(|| violation(format!("no p in K = {big_k:?} properly reduces c_{u}")))?;
        let case = if p == m {
            let chain = x.act_word(&cm, &[d(u - 1), s(m)])?;
            link(x, &c[u], &chain, &format!("c_{u} = c_m δ_(u-1) σ_m"))?;
            "Case 1"
        } else if u == p + 1 {
            ensure(x.reduces(&cm, p)?, || {
                format!("p = {p} does not reduce c_m")
            })?;
            "Case 2"
        } else if u > p + 1 {
            ensure(big_m.contains(&(p - 1)), || {
                format!("p - 1 = {} not in M", p - 1)
            })?;
            let chain = x.act_word(&c[p], &[d(u - 1), s(p)])?;
            link(x, &c[u], &chain, &format!("c_{u} = c_{p} δ_(u-1) σ_{p}"))?;
            "Case 3"
        } else {
            ensure(big_m.contains(&p), || format!("p = {p} ≥ u but not in M"))?;
            let chain = x.act_word(&c[p + 1], &[d(u), s(p)])?;
            link(x, &c[u], &chain, &format!("c_{u} = c_(p+1) δ_{u} σ_{p}"))?;
            "Case 4"
        };
        return Ok(format!("Part II, {case} (p = {p}, K = {big_k:?})"));
    }

    // Part III: dgn(c_u) = r.
    ensure(dgn_u == r, || format!("c_{u} has degeneracy {dgn_u} < r"))?;
    let mut p = None;
    for &q in &big_k {
        if q < k && x.reduces(&c[u], q)? {
            p = Some(q);
            break;
        }
    }
    let (p, pathological) = match p {
        Some(p) => (p, false),
        None => {
            let tail_ok =
                (k - 1 - r..=k - 2).all(|q| x.properly_reduces(&c[u], q).unwrap_or(false));
            ensure(tail_ok && m == 0, || {
                format!(
                    "no p in K = {big_k:?} reduces c_{u}, and the exceptional case does not hold"
                )
            })?;
            (r + 1, true)
        }
    };
    ensure(x.reduces(&cm, u - 1)?, || {
        format!("u - 1 = {} does not reduce c_m", u - 1)
    })?;
    let case = if p < u {
        "Case 1"
    } else {
        ensure(!pathological && big_m.contains(&p), || {
            format!("p = {p} ≥ u but not in M")
        })?;
        "Case 2"
    };
    let tag = if pathological { ", pathological" } else { "" };
    Ok(format!("Part III, {case}{tag} (p = {p}, K = {big_k:?})"))
}

/// `{m} ∪ {j+1 : j ∈ M, j+1 < u} ∪ {j : j ∈ M, j+1 > u}`, ascending.
pub(super) fn k_set(big_m: &[usize], m: usize, u: usize) -> Vec<usize> {
    let mut out = BTreeSet::new();
    out.insert(m);
    for &j in big_m {
        if j + 1 < u {
            out.insert(j + 1);
        } else if j + 1 > u {
            out.insert(j);
        }
    }
    out.into_iter().collect()
}
