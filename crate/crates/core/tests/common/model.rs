//! Each generator written directly as a function on points, with no use of
//! the library's composition or rewriting.

use core::fmt::Debug;

use aufhebung_core::shape::{
    Cube, CubeGen, CubePoint, Cyclic, CyclicGen, Globe, GlobeCell, GlobeGen, Shape, Simplex,
    SimplexGen,
};

pub trait Model: Shape {
    type P: Clone + Eq + Debug;

    /// A set of points on which morphisms out of `n` are determined.
    fn points(n: usize) -> Vec<Self::P>;

    /// The generator `g` with domain `dom`, applied to `p`.
    fn gen_fn(g: Self::Gen, dom: usize, p: &Self::P) -> Self::P;

    /// The library's evaluation of `f` at `p`.
    fn morph_fn(f: &Self::Morphism, p: &Self::P) -> Self::P;

    /// Whether two value lists over `points(dom)` name the same morphism into `cod`.
    fn same_values(_cod: usize, a: &[Self::P], b: &[Self::P]) -> bool {
        a == b
    }
}

/// Runs a functional-order word on `p`, rightmost letter first.
pub fn run_word<S: Model>(dom: usize, word: &[S::Gen], p: &S::P) -> S::P {
    let mut d = dom;
    let mut q = p.clone();
    for g in word.iter().rev() {
        q = S::gen_fn(*g, d, &q);
        d = S::cod(&S::gen_morphism(*g, d).expect("letter applies"));
    }
    q
}

fn delta_face(i: usize, x: usize) -> usize {
    if x < i {
        x
    } else {
        x + 1
    }
}

fn delta_degen(j: usize, x: usize) -> usize {
    if x <= j {
        x
    } else {
        x - 1
    }
}

impl Model for Simplex {
    type P = usize;

    fn points(n: usize) -> Vec<usize> {
        (0..=n).collect()
    }

    fn gen_fn(g: SimplexGen, _dom: usize, &x: &usize) -> usize {
        match g {
            SimplexGen::Face(i) => delta_face(i as usize, x),
            SimplexGen::Degen(j) => delta_degen(j as usize, x),
        }
    }

    fn morph_fn(f: &Self::Morphism, &x: &usize) -> usize {
        Simplex::eval(f, x).expect("point in domain")
    }
}

impl Model for Cube {
    type P = Vec<u8>;

    fn points(n: usize) -> Vec<Vec<u8>> {
        (0..1u32 << n)
            .map(|b| (0..n).map(|i| ((b >> i) & 1) as u8).collect())
            .collect()
    }

    fn gen_fn(g: CubeGen, _dom: usize, p: &Vec<u8>) -> Vec<u8> {
        let mut q = p.clone();
        match g {
            CubeGen::Face(i, s) => q.insert(i as usize - 1, s),
            CubeGen::Degen(j) => {
                q.remove(j as usize - 1);
            }
        }
        q
    }

    fn morph_fn(f: &Self::Morphism, p: &Vec<u8>) -> Vec<u8> {
        let r = Cube::eval(f, CubePoint::new(p)).expect("point in domain");
        (1..=r.dim()).map(|i| r.coord(i)).collect()
    }
}

impl Model for Globe {
    type P = GlobeCell;

    fn points(n: usize) -> Vec<GlobeCell> {
        let mut out = vec![GlobeCell::Top];
        for d in 0..n as u8 {
            out.push(GlobeCell::Src(d));
            out.push(GlobeCell::Tgt(d));
        }
        out
    }

    fn gen_fn(g: GlobeGen, dom: usize, c: &GlobeCell) -> GlobeCell {
        let n = dom as u8;
        match (g, *c) {
            (GlobeGen::Src, GlobeCell::Top) => GlobeCell::Src(n),
            (GlobeGen::Tgt, GlobeCell::Top) => GlobeCell::Tgt(n),
            (GlobeGen::Src | GlobeGen::Tgt, c) => c,
            // ι : n -> n - 1 collapses the two top-dimensional boundary cells.
            (GlobeGen::Refl, GlobeCell::Src(d) | GlobeCell::Tgt(d)) if d + 1 == n => GlobeCell::Top,
            (GlobeGen::Refl, c) => c,
        }
    }

    fn morph_fn(f: &Self::Morphism, c: &GlobeCell) -> GlobeCell {
        Globe::eval(f, *c).expect("point in domain")
    }
}

/// Lifts `[dom] -> [cod]` to the integers, periodically.
fn periodic(x: i64, dom: usize, cod: usize, f: impl Fn(usize) -> usize) -> i64 {
    let n1 = dom as i64 + 1;
    let q = x.div_euclid(n1);
    let r = x.rem_euclid(n1) as usize;
    q * (cod as i64 + 1) + f(r) as i64
}

impl Model for Cyclic {
    /// Cyclic morphisms act on the integers as equivariant lifts.
    type P = i64;

    fn points(n: usize) -> Vec<i64> {
        (0..=n as i64).collect()
    }

    fn gen_fn(g: CyclicGen, dom: usize, &x: &i64) -> i64 {
        match g {
            CyclicGen::Face(i) => periodic(x, dom, dom + 1, |r| delta_face(i as usize, r)),
            CyclicGen::Degen(j) => periodic(x, dom, dom - 1, |r| delta_degen(j as usize, r)),
            CyclicGen::Rot => x + 1,
            // σ_0 after one rotation.
            CyclicGen::Extra(_) => periodic(x + 1, dom, dom - 1, |r| delta_degen(0, r)),
        }
    }

    fn morph_fn(f: &Self::Morphism, &x: &i64) -> i64 {
        periodic(x, f.dom(), f.cod(), |r| {
            Cyclic::eval(f, r).expect("point in domain")
        })
    }

    /// Lifts differing by a multiple of `cod + 1` everywhere name the same morphism.
    fn same_values(cod: usize, a: &[i64], b: &[i64]) -> bool {
        let shift = match (a.first(), b.first()) {
            (Some(x), Some(y)) => x - y,
            _ => return a.len() == b.len(),
        };
        shift.rem_euclid(cod as i64 + 1) == 0
            && a.len() == b.len()
            && a.iter().zip(b).all(|(x, y)| x - y == shift)
    }
}
