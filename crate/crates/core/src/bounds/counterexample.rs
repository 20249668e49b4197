//! Complexes with a sphere one dimension above the lower bound that has no
//! filler.

use alloc::vec;
use alloc::vec::Vec;

use super::BoundError;
use crate::complex::{default_truncation, Cell, SkeletalComplex};
use crate::filler::Sphere;
use crate::shape::{
    Cube, CubeMorphism, Cyclic, CyclicMorphism, Globe, Shape, Simplex, SimplexMorphism,
};

/// A complex together with its designated unfilled sphere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample<S: Shape> {
    pub complex: SkeletalComplex<S>,
    pub sphere: Sphere<S>,
}

/// A vertex `v` and two `n`-cubes `x`, `y` with every face at `v`; the
/// `2n`-sphere has `x` (degenerate in the first `n - 1` directions) on the
/// first `n` coordinates and `y` on the last `n`.
pub fn cubical_counterexample(n: usize) -> Result<Counterexample<Cube>, BoundError> {
    if n == 0 {
        return Err(BoundError::Argument(
            "the cubical counterexample needs n ≥ 1".into(),
        ));
    }
    let mut x: SkeletalComplex<Cube> = SkeletalComplex::new(n, default_truncation(n))?;
    let v = x.add_generator("v", 0, vec![])?;
    let point = x.cell(
        v,
        CubeMorphism::new(n - 1, 0, &[], &(1..n).collect::<Vec<_>>())?,
    )?;
    let gx = x.add_generator("x", n, vec![point; 2 * n])?;
    let gy = x.add_generator("y", n, vec![point; 2 * n])?;
    let k = 2 * n;
    let cx = x.cell(
        gx,
        CubeMorphism::new(k - 1, n, &[], &(1..n).collect::<Vec<_>>())?,
    )?;
    let cy = x.cell(
        gy,
        CubeMorphism::new(k - 1, n, &[], &(n + 1..k).collect::<Vec<_>>())?,
    )?;
    let mut faces = Vec::with_capacity(2 * k);
    for i in 1..=k {
        let c = if i <= n { cx } else { cy };
        faces.push(c);
        faces.push(c);
    }
    Ok(Counterexample {
        complex: x,
        sphere: Sphere::new(k, faces),
    })
}

/// The simplicial generators shared by the simplicial and cyclic examples:
/// `v`, `(n-1)`-simplices `x'`, `y'` with all faces at `v`, and
/// `n`-simplices `x`, `y` with `x δ_0 = x'`, `y δ_n = y'` and every other face at `v`.
fn simplicial_pattern<S: Shape>(
    n: usize,
    lift: impl Fn(SimplexMorphism) -> S::Morphism,
) -> Result<(SkeletalComplex<S>, [usize; 5]), BoundError> {
    let mut x: SkeletalComplex<S> = SkeletalComplex::new(n, default_truncation(n))?;
    let v = x.add_generator("v", 0, vec![])?;
    let at_v = |x: &SkeletalComplex<S>, d: usize| -> Result<Cell<S>, BoundError> {
        let all: Vec<usize> = (0..d).collect();
        Ok(x.cell(v, lift(SimplexMorphism::new(d, 0, &[], &all)?))?)
    };
    let low = at_v(&x, n - 2)?;
    let xp = x.add_generator("x'", n - 1, vec![low; n])?;
    let yp = x.add_generator("y'", n - 1, vec![low; n])?;
    let high = at_v(&x, n - 1)?;
    let mut fx = vec![high; n + 1];
    fx[0] = x.nondegenerate(xp);
    let mut fy = vec![high; n + 1];
    fy[n] = x.nondegenerate(yp);
    let gx = x.add_generator("x", n, fx)?;
    let gy = x.add_generator("y", n, fy)?;
    Ok((x, [v, xp, yp, gx, gy]))
}

/// The `(2n-1)`-sphere with `c_0 = … = c_{n-1} = x σ_0 ⋯ σ_{n-3}` and
/// `c_n = … = c_{2n-1} = y σ_n ⋯ σ_{2n-3}`.
fn pattern_sphere<S: Shape>(
    x: &SkeletalComplex<S>,
    n: usize,
    gx: usize,
    gy: usize,
    lift: impl Fn(SimplexMorphism) -> S::Morphism,
) -> Result<Sphere<S>, BoundError> {
    let k = 2 * n - 1;
    let lo: Vec<usize> = (0..n - 2).collect();
    let hi: Vec<usize> = (n..2 * n - 2).collect();
    let cx = x.cell(gx, lift(SimplexMorphism::new(k - 1, n, &[], &lo)?))?;
    let cy = x.cell(gy, lift(SimplexMorphism::new(k - 1, n, &[], &hi)?))?;
    let faces = (0..=k).map(|i| if i < n { cx } else { cy }).collect();
    Ok(Sphere::new(k, faces))
}

pub fn simplicial_counterexample(n: usize) -> Result<Counterexample<Simplex>, BoundError> {
    if n < 3 {
        return Err(BoundError::Argument(
            "the simplicial counterexample needs n ≥ 3".into(),
        ));
    }
    let (x, [_, _, _, gx, gy]) = simplicial_pattern::<Simplex>(n, |f| f)?;
    let sphere = pattern_sphere(&x, n, gx, gy, |f| f)?;
    Ok(Counterexample { complex: x, sphere })
}

/// The simplicial pattern read as a cyclic set. For `n ≥ 2` the designated
/// sphere is the `(2n-1)`-sphere above; for `n = 1` it is the pair of
/// vertices `(x', y')`, which no edge joins.
pub fn cyclic_counterexample(n: usize) -> Result<Counterexample<Cyclic>, BoundError> {
    if n == 0 {
        return Err(BoundError::Argument(
            "the cyclic counterexample needs n ≥ 1".into(),
        ));
    }
    if n == 1 {
        let mut x: SkeletalComplex<Cyclic> = SkeletalComplex::new(1, default_truncation(1))?;
        let v = x.add_generator("v", 0, vec![])?;
        let xp = x.add_generator("x'", 0, vec![])?;
        let yp = x.add_generator("y'", 0, vec![])?;
        let (pv, px, py) = (x.nondegenerate(v), x.nondegenerate(xp), x.nondegenerate(yp));
        x.add_generator("x", 1, vec![px, pv])?;
        x.add_generator("y", 1, vec![pv, py])?;
        return Ok(Counterexample {
            complex: x,
            sphere: Sphere::new(1, vec![px, py]),
        });
    }
    let lift = CyclicMorphism::from;
    let (x, [_, _, _, gx, gy]) = simplicial_pattern::<Cyclic>(n, lift)?;
    let sphere = pattern_sphere(&x, n, gx, gy, lift)?;
    Ok(Counterexample { complex: x, sphere })
}

/// Two parallel `n`-globs `a`, `b` over a vertex (two bare vertices for `n = 0`).
pub fn globular_counterexample(n: usize) -> Result<Counterexample<Globe>, BoundError> {
    let mut x: SkeletalComplex<Globe> = SkeletalComplex::new(n, default_truncation(n))?;
    let (a, b) = if n == 0 {
        (
            x.add_generator("a", 0, vec![])?,
            x.add_generator("b", 0, vec![])?,
        )
    } else {
        let v = x.add_generator("v", 0, vec![])?;
        let epis = Globe::epis(n - 1, 0);
        let base = x.cell(v, epis[0])?;
        (
            x.add_generator("a", n, vec![base, base])?,
            x.add_generator("b", n, vec![base, base])?,
        )
    };
    let sphere = Sphere::new(n + 1, vec![x.nondegenerate(a), x.nondegenerate(b)]);
    Ok(Counterexample { complex: x, sphere })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filler::{brute_force_fill, is_sphere, FillStatus};
    use crate::shape::{CubeGen, SimplexGen};

    #[test]
    fn cubical_spheres_match_their_words() {
        for n in 1..=3 {
            let ce = cubical_counterexample(n).unwrap();
            assert!(ce.complex.validate().is_valid());
            assert!(is_sphere(&ce.complex, &ce.sphere).unwrap());
            let word: Vec<CubeGen> = (1..n).map(|j| CubeGen::Degen(j as u8)).collect();
            let gx = ce.complex.lookup("x").unwrap();
            assert_eq!(
                ce.complex
                    .act_word(&ce.complex.nondegenerate(gx), &word)
                    .unwrap(),
                ce.sphere.faces[0]
            );
        }
        let ce = cubical_counterexample(1).unwrap();
        let r = brute_force_fill(&ce.complex, &ce.sphere, 1000).unwrap();
        assert_eq!(r.status, FillStatus::NoFiller);
    }

    #[test]
    fn simplicial_spheres_match_their_words() {
        for n in 3..=4 {
            let ce = simplicial_counterexample(n).unwrap();
            assert!(ce.complex.validate().is_valid());
            assert!(is_sphere(&ce.complex, &ce.sphere).unwrap());
            let word: Vec<SimplexGen> =
                (n..2 * n - 2).map(|j| SimplexGen::Degen(j as u8)).collect();
            let gy = ce.complex.lookup("y").unwrap();
            assert_eq!(
                ce.complex
                    .act_word(&ce.complex.nondegenerate(gy), &word)
                    .unwrap(),
                ce.sphere.faces[2 * n - 1]
            );
        }
        assert!(simplicial_counterexample(2).is_err());
    }

    #[test]
    fn cyclic_and_globular_spheres_validate() {
        for n in 1..=2 {
            let ce = cyclic_counterexample(n).unwrap();
            assert!(ce.complex.validate().is_valid());
            assert!(is_sphere(&ce.complex, &ce.sphere).unwrap());
        }
        for n in 0..=3 {
            let ce = globular_counterexample(n).unwrap();
            assert!(ce.complex.validate().is_valid());
            assert!(is_sphere(&ce.complex, &ce.sphere).unwrap());
            let r = brute_force_fill(&ce.complex, &ce.sphere, 1000).unwrap();
            assert_eq!(r.status, FillStatus::NoFiller);
        }
    }
}
