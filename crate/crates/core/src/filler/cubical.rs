//! Constructive filler for cubical spheres with all faces degenerate: with
//! `r` the least face degeneracy and `m` the least position attaining it,
//! `c_m β_m` fills every `k`-sphere with `k < 2r + 2`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{
    check_shape, violation, ConstructiveFill, FillError, FillResult, ReductionProfile, Sphere,
    TraceStep,
};
use crate::complex::{Cell, SkeletalComplex};
use crate::shape::{Cube, CubeGen, CubeMorphism};

type X = SkeletalComplex<Cube>;

fn a(sign: u8, i: usize) -> CubeGen {
    CubeGen::Face(i as u8, sign)
}

fn b(j: usize) -> CubeGen {
    CubeGen::Degen(j as u8)
}

/// Listing index of `c^ι_i`.
fn at(i: usize, sign: u8) -> usize {
    2 * (i - 1) + sign as usize
}

fn link(x: &X, lhs: &Cell<Cube>, rhs: &Cell<Cube>, what: &str) -> Result<(), FillError> {
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

impl ConstructiveFill for Cube {
    fn constructive_fill(x: &X, sphere: &Sphere<Cube>) -> Result<FillResult<Cube>, FillError> {
        check_shape(sphere)?;
        let k = sphere.k;
        let f = |i: usize, sign: u8| sphere.faces[at(i, sign)];
        if let Some(idx) = sphere.faces.iter().position(|c| !c.is_degenerate()) {
            return Ok(FillResult::not_applicable(format!(
                "face c^{}_{} is non-degenerate",
                idx % 2,
                idx / 2 + 1
            )));
        }
        let r = sphere.faces.iter().map(|c| c.dgn()).min().unwrap_or(0);
        if k >= 2 * r + 2 {
            return Ok(FillResult::not_applicable(format!(
                "k = {k} is not below 2r + 2 = {}",
                2 * r + 2
            )));
        }
        let first = sphere.faces.iter().position(|c| c.dgn() == r).unwrap_or(0);
        let (m, m_sign) = (first / 2 + 1, (first % 2) as u8);

        // M: the ordinals deleted by the decomposition of c^ι_m.
        let big_m = f(m, m_sign).epi.deletes();
        ensure(big_m.len() == r, || {
            format!("|M| = {} but r = {r}", big_m.len())
        })?;
        ensure(big_m.iter().all(|&j| m <= j && j < k), || {
            format!("M = {big_m:?} not within [{m}, {}]", k - 1)
        })?;
        let reducing: Vec<usize> = (1..k)
            .filter(|&j| x.reduces(&f(m, m_sign), j).unwrap_or(false))
            .collect();
        ensure(reducing == big_m, || {
            format!("reducing set {reducing:?} of c_m differs from M = {big_m:?}")
        })?;
        let profile = ReductionProfile {
            r,
            m,
            m_sign: Some(m_sign),
            big_m: big_m.clone(),
            l: None,
        };

        // m reduces c^υ_{j+1} for j ∈ M, and then c^0_m = c^1_m.
        for &j in &big_m {
            for sign in 0..2 {
                ensure(x.reduces(&f(j + 1, sign), m)?, || {
                    format!("m = {m} does not reduce c^{sign}_{}", j + 1)
                })?;
            }
        }
        link(x, &f(m, 0), &f(m, 1), "c^0_m = c^1_m")?;
        let cm = f(m, 0);

        let filler = x.act(&cm, &CubeMorphism::degeneracy(k - 1, m))?;
        let mut trace = Vec::new();
        for u in 1..=k {
            for sign in 0..2u8 {
                let branch = branch_for(x, sphere, &big_m, r, m, u, sign)?;
                let want = x.act(&filler, &CubeMorphism::face(k, u, sign))?;
                link(
                    x,
                    &f(u, sign),
                    &want,
                    &format!("face c^{sign}_{u} of the filler ({branch})"),
                )?;
                trace.push(TraceStep {
                    face: format!("c^{sign}_{u}"),
                    branch,
                });
            }
        }
        Ok(FillResult::filled(filler, Some(profile), trace))
    }
}

fn branch_for(
    x: &X,
    sphere: &Sphere<Cube>,
    big_m: &[usize],
    r: usize,
    m: usize,
    u: usize,
    sign: u8,
) -> Result<String, FillError> {
    let k = sphere.k;
    let f = |i: usize, s: u8| sphere.faces[at(i, s)];
    let cm = f(m, 0);
    let cu = f(u, sign);
    if u == m {
        return Ok("direct: β_m α_m = id".into());
    }
    if u >= 2 && big_m.contains(&(u - 1)) {
        let chain = x.act_word(&cm, &[a(sign, u - 1), b(m)])?;
        link(
            x,
            &cu,
            &chain,
            &format!("c^{sign}_{u} = c_m α^{sign}_{} β_m", u - 1),
        )?;
        return Ok("Part I".into());
    }
    if u < m {
        let mut choices: Vec<usize> = Vec::with_capacity(r + 1);
        if m >= 2 {
            choices.push(m - 1);
        }
        choices.extend_from_slice(big_m);
        let mut p = None;
        for &q in &choices {
            if x.reduces(&cu, q)? {
                p = Some(q);
                break;
            }
        }
        let p = p.ok_or_else(|| violation(format!("no p in {{m-1}} ∪ M reduces c^{sign}_{u}")))?;
        // p reduces c^ι_u, so either sign of the p-th face will do.
        let chain = x.act_word(&f(p + 1, 0), &[b(p + 1), a(sign, u)])?;
        link(
            x,
            &cu,
            &chain,
            &format!("c^{sign}_{u} = c^0_(p+1) β_(p+1) α^{sign}_{u}"),
        )?;
        let which = if p + 1 == m { "p = m-1" } else { "p ∈ M" };
        return Ok(format!("Part II, {which} (p = {p})"));
    }

    // Part III: u > m and u - 1 ∉ M.
    let mut set = BTreeSet::new();
    set.insert(m);
    for &j in big_m {
        if j + 1 < u {
            set.insert(j + 1);
        } else if j + 1 > u {
            set.insert(j);
        }
    }
    let big_k: Vec<usize> = set.into_iter().collect();
    ensure(big_k.len() == r + 1, || {
        format!("|K| = {} for u = {u}, expected {}", big_k.len(), r + 1)
    })?;
    ensure(big_k.iter().all(|&q| (1..k).contains(&q)), || {
        format!("K = {big_k:?} leaves [1, k-1]")
    })?;
    let mut p = None;
    for &q in &big_k {
        if x.reduces(&cu, q)? {
            p = Some(q);
            break;
        }
    }
    let p = p.ok_or_else(|| violation(format!("no p in K = {big_k:?} reduces c^{sign}_{u}")))?;
    let case = if p < u {
        ensure(p == m || big_m.contains(&(p - 1)), || {
            format!("p = {p} < u but neither m nor in M + 1")
        })?;
        let chain = x.act_word(&f(p, sign), &[b(p), a(sign, u)])?;
        link(
            x,
            &cu,
            &chain,
            &format!("c^{sign}_{u} = c^{sign}_{p} β_{p} α^{sign}_{u}"),
        )?;
        if p == m {
            "Case 1, p = m"
        } else {
            "Case 1, p - 1 ∈ M"
        }
    } else {
        ensure(big_m.contains(&p), || format!("p = {p} ≥ u but not in M"))?;
        let chain = x.act_word(&f(p + 1, sign), &[b(p + 1), a(sign, u)])?;
        link(
            x,
            &cu,
            &chain,
            &format!("c^{sign}_{u} = c^{sign}_(p+1) β_(p+1) α^{sign}_{u}"),
        )?;
        "Case 2"
    };
    Ok(format!("Part III, {case} (p = {p}, K = {big_k:?})"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filler::{boundary, brute_force_fill, FillStatus};
    use alloc::vec;

    fn loop_complex() -> X {
        let mut x = SkeletalComplex::new(1, 5).unwrap();
        let v = x.add_generator("v", 0, vec![]).unwrap();
        let p = x.nondegenerate(v);
        x.add_generator("x", 1, vec![p, p]).unwrap();
        x
    }

    #[test]
    fn boundary_of_degenerate_cube_is_refilled() {
        let x = loop_complex();
        let target = x.act_word(&x.nondegenerate(1), &[b(1), b(2)]).unwrap();
        assert_eq!(target.dim(), 3);
        let sphere = boundary(&x, &target).unwrap();
        let got = Cube::constructive_fill(&x, &sphere).unwrap();
        assert_eq!(got.status, FillStatus::Filled);
        assert_eq!(got.filler, Some(target));
        assert_eq!(
            brute_force_fill(&x, &sphere, 10_000).unwrap().witnesses,
            vec![target]
        );
    }

    #[test]
    fn all_boundaries_meeting_the_bound_agree() {
        let x = loop_complex();
        let mut checked = 0;
        for k in 1..=5 {
            for cell in x.cells_of_dim(k) {
                let sphere = boundary(&x, &cell).unwrap();
                let got = Cube::constructive_fill(&x, &sphere).unwrap();
                if got.status == FillStatus::Filled {
                    assert_eq!(got.filler, Some(cell));
                    checked += 1;
                }
            }
        }
        assert!(checked > 10);
    }

    #[test]
    fn sphere_of_two_loops_is_out_of_range() {
        let mut x = loop_complex();
        let p = x.nondegenerate(0);
        let y = x.add_generator("y", 1, vec![p, p]).unwrap();
        let (cx, cy) = (x.nondegenerate(1), x.nondegenerate(y));
        let sphere = Sphere::new(2, vec![cx, cx, cy, cy]);
        assert!(crate::filler::is_sphere(&x, &sphere).unwrap());
        let got = Cube::constructive_fill(&x, &sphere).unwrap();
        assert_eq!(got.status, FillStatus::NotApplicable);
        assert_eq!(
            brute_force_fill(&x, &sphere, 100).unwrap().status,
            FillStatus::NoFiller
        );
    }
}
