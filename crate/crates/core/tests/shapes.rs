//! Hom-set enumeration against brute force, worked examples, a proptest
//! over random words, and functoriality of the action on complexes.

mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use aufhebung_core::bounds::{
    cubical_counterexample, cyclic_counterexample, globular_counterexample,
    random_skeletal_complex, RandomParams,
};
use aufhebung_core::complex::{Cell, SkeletalComplex};
use aufhebung_core::shape::{
    Cube, CubeGen, CubeMorphism, Cyclic, CyclicGen, Globe, Shape, ShapeKind, Simplex, SimplexGen,
    SimplexMorphism,
};

use common::model::{run_word, Model};
use common::normal_forms::random_word;

const HOM_DIM: usize = 4;

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Every morphism `m -> n` as a mono after an epi, through every middle object.
fn homs<S: Shape>(m: usize, n: usize) -> Vec<S::Morphism> {
    let mut out = Vec::new();
    for k in 0..=m.min(n) {
        for e in S::epis(m, k) {
            for u in S::monos(k, n) {
                out.push(S::compose(&u, &e).unwrap());
            }
        }
    }
    out
}

fn values<S: Model>(f: &S::Morphism) -> Vec<S::P> {
    S::points(S::dom(f))
        .iter()
        .map(|p| S::morph_fn(f, p))
        .collect()
}

/// Distinct morphisms give distinct functions. Factorisations are also
/// unique unless monos and epis share automorphisms, as rotations do.
fn distinct_as_functions<S: Model>(m: usize, n: usize) -> Vec<Vec<S::P>> {
    let fs = homs::<S>(m, n);
    let set: BTreeSet<_> = fs.iter().collect();
    if S::KIND != ShapeKind::Cyclic {
        assert_eq!(set.len(), fs.len(), "repeated factorisation {m} -> {n}");
    }
    let vals: Vec<_> = set.into_iter().map(values::<S>).collect();
    for (i, a) in vals.iter().enumerate() {
        for b in &vals[..i] {
            assert!(
                !S::same_values(n, a, b),
                "two factorisations {m} -> {n} agree as functions"
            );
        }
    }
    vals
}

/// Monotone maps `[m] -> [n]`, by filtering all functions.
fn monotone_tables(m: usize, n: usize) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    let total = (n + 1).pow(m as u32 + 1);
    for code in 0..total {
        let mut c = code;
        let f: Vec<usize> = (0..=m)
            .map(|_| {
                let v = c % (n + 1);
                c /= n + 1;
                v
            })
            .collect();
        if f.windows(2).all(|w| w[0] <= w[1]) {
            out.insert(f);
        }
    }
    out
}

/// Cube maps `[1]^m -> [1]^n`: each output coordinate is a constant or an
/// input coordinate, the inputs used at most once and in increasing order.
fn box_tables(m: usize, n: usize) -> BTreeSet<Vec<Vec<u8>>> {
    let mut out = BTreeSet::new();
    let choices = m + 2;
    for code in 0..choices.pow(n as u32) {
        let mut c = code;
        let coords: Vec<usize> = (0..n)
            .map(|_| {
                let v = c % choices;
                c /= choices;
                v
            })
            .collect();
        let vars: Vec<usize> = coords.iter().filter(|&&v| v >= 2).copied().collect();
        if !vars.windows(2).all(|w| w[0] < w[1]) {
            continue;
        }
        let table = Cube::points(m)
            .iter()
            .map(|p| {
                coords
                    .iter()
                    .map(|&v| if v < 2 { v as u8 } else { p[v - 2] })
                    .collect()
            })
            .collect();
        out.insert(table);
    }
    out
}

#[test]
fn simplex_homs_are_exactly_the_monotone_maps() {
    for m in 0..=HOM_DIM {
        for n in 0..=HOM_DIM {
            let vals: BTreeSet<_> = distinct_as_functions::<Simplex>(m, n).into_iter().collect();
            let brute = monotone_tables(m, n);
            assert_eq!(brute.len(), binom(m + n + 1, m + 1));
            assert_eq!(vals, brute, "{m} -> {n}");
        }
    }
}

#[test]
fn cube_homs_are_exactly_the_box_maps() {
    for m in 0..=HOM_DIM {
        for n in 0..=HOM_DIM {
            let vals: BTreeSet<_> = distinct_as_functions::<Cube>(m, n).into_iter().collect();
            let brute = box_tables(m, n);
            let count: usize = (0..=m.min(n))
                .map(|k| (binom(m, k) * binom(n, k)) << (n - k))
                .sum();
            assert_eq!(brute.len(), count);
            assert_eq!(vals, brute, "{m} -> {n}");
        }
    }
}

#[test]
fn globe_and_cyclic_hom_counts() {
    for m in 0..=HOM_DIM {
        for n in 0..=HOM_DIM {
            // Through each k <= min(m, n): one epi, and one mono if k = n, else two.
            let globe: usize = (0..=m.min(n)).map(|k| if k == n { 1 } else { 2 }).sum();
            assert_eq!(
                distinct_as_functions::<Globe>(m, n).len(),
                globe,
                "{m} -> {n}"
            );
            let cyclic = (m + 1) * monotone_tables(m, n).len();
            assert_eq!(
                distinct_as_functions::<Cyclic>(m, n).len(),
                cyclic,
                "{m} -> {n}"
            );
        }
    }
}

#[test]
fn cube_epis_have_disjoint_section_sets() {
    for m in 0..=HOM_DIM {
        for k in 0..=m {
            let mut seen = BTreeSet::new();
            for e in Cube::epis(m, k) {
                let secs = Cube::sections(&e).unwrap();
                let brute: Vec<_> = Cube::monos(k, m)
                    .into_iter()
                    .filter(|u| Cube::is_identity(&Cube::compose(&e, u).unwrap()))
                    .collect();
                assert_eq!(
                    secs.iter().collect::<BTreeSet<_>>(),
                    brute.iter().collect::<BTreeSet<_>>()
                );
                for s in secs {
                    assert!(seen.insert(s), "{s} is a section of two epis {m} -> {k}");
                }
            }
        }
    }
}

#[test]
fn simplex_worked_examples() {
    use SimplexGen::{Degen as S, Face as D};
    let f = Simplex::normalize(3, &[S(1), S(0)]).unwrap();
    assert_eq!(Simplex::word(&f), vec![S(0), S(2)]);
    assert_eq!(
        Simplex::eval(&SimplexMorphism::degeneracy(1, 1), 2).unwrap(),
        1
    );
    assert_eq!(Simplex::eval(&SimplexMorphism::face(1, 0), 0).unwrap(), 1);
    let secs: BTreeSet<_> = Simplex::sections(&SimplexMorphism::degeneracy(0, 0))
        .unwrap()
        .into_iter()
        .collect();
    let faces: BTreeSet<_> = [SimplexMorphism::face(1, 0), SimplexMorphism::face(1, 1)]
        .into_iter()
        .collect();
    assert_eq!(secs, faces);
    // σ_0 σ_2 : [4] -> [2] merges {0, 1} and {3, 4}: two choices on each block.
    let e = Simplex::normalize(4, &[S(0), S(2)]).unwrap();
    assert_eq!(Simplex::sections(&e).unwrap().len(), 4);
    assert_eq!(Simplex::epis(3, 1).len(), 3);
    // δ_1 σ_0 factors as the identity-free pair (δ_1, σ_0).
    let g = Simplex::normalize(1, &[D(1), S(0)]).unwrap();
    let (mono, epi) = Simplex::factor(&g);
    assert_eq!(
        (Simplex::word(&mono), Simplex::word(&epi)),
        (vec![D(1)], vec![S(0)])
    );
}

#[test]
fn cube_worked_examples() {
    let secs: BTreeSet<_> = Cube::sections(&CubeMorphism::degeneracy(0, 1))
        .unwrap()
        .into_iter()
        .collect();
    let faces: BTreeSet<_> = [CubeMorphism::face(1, 1, 0), CubeMorphism::face(1, 1, 1)]
        .into_iter()
        .collect();
    assert_eq!(secs, faces);
    let epis: BTreeSet<_> = Cube::epis(2, 1).into_iter().collect();
    let betas: BTreeSet<_> = [
        CubeMorphism::degeneracy(1, 1),
        CubeMorphism::degeneracy(1, 2),
    ]
    .into_iter()
    .collect();
    assert_eq!(epis, betas);
    let f = Cube::normalize(2, &[CubeGen::Degen(1), CubeGen::Face(1, 0)]).unwrap();
    assert!(Cube::is_identity(&f));
}

#[test]
fn cyclic_extra_degeneracy_after_the_first_face_is_a_rotation() {
    for n in 1..=5 {
        let f = Cyclic::normalize(n, &[CyclicGen::Extra(n as u8 + 1), CyclicGen::Face(0)]).unwrap();
        assert_eq!(f.rotation(), 1);
        assert!(Simplex::is_identity(&f.delta_part()));
        let lifted: Vec<i64> = Cyclic::points(n)
            .iter()
            .map(|p| run_word::<Cyclic>(n, &[CyclicGen::Extra(n as u8 + 1), CyclicGen::Face(0)], p))
            .collect();
        let rot: Vec<i64> = Cyclic::points(n)
            .iter()
            .map(|p| run_word::<Cyclic>(n, &[CyclicGen::Rot], p))
            .collect();
        assert!(Cyclic::same_values(n, &lifted, &rot));
    }
}

fn normal_form_evaluates_like_the_word<S: Model>(seed: u64) -> Result<(), TestCaseError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (dom, word) = random_word::<S>(&mut rng);
    let f = S::normalize(dom, &word).unwrap();
    let via_library: Vec<_> = S::points(dom).iter().map(|p| S::morph_fn(&f, p)).collect();
    let via_model: Vec<_> = S::points(dom)
        .iter()
        .map(|p| run_word::<S>(dom, &word, p))
        .collect();
    prop_assert!(
        S::same_values(S::cod(&f), &via_library, &via_model),
        "{:?}",
        word
    );
    prop_assert_eq!(S::normalize(dom, &S::word(&f)).unwrap(), f);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn normal_forms_evaluate_like_their_words(seed in any::<u64>()) {
        normal_form_evaluates_like_the_word::<Simplex>(seed)?;
        normal_form_evaluates_like_the_word::<Cube>(seed)?;
        normal_form_evaluates_like_the_word::<Globe>(seed)?;
        normal_form_evaluates_like_the_word::<Cyclic>(seed)?;
    }
}

const TRIPLES: usize = 10_000;

/// `c · (f ∘ g) = (c · f) · g` on random cells and random composable pairs.
fn action_is_functorial<S: Shape>(x: &SkeletalComplex<S>, seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cells: Vec<Vec<Cell<S>>> = (0..=x.truncation()).map(|k| x.cells_of_dim(k)).collect();
    let mut checked = 0;
    while checked < TRIPLES {
        let (dom, word) = random_word::<S>(&mut rng);
        let whole = S::normalize(dom, &word).unwrap();
        if S::cod(&whole) > x.truncation() || dom > x.truncation() {
            continue;
        }
        let cut = rng.gen_range(0..=word.len());
        let g = S::normalize(dom, &word[cut..]).unwrap();
        let f = S::normalize(S::cod(&g), &word[..cut]).unwrap();
        let pool = &cells[S::cod(&f)];
        let c = pool[rng.gen_range(0..pool.len())];
        let lhs = x.act(&c, &S::compose(&f, &g).unwrap()).unwrap();
        let rhs = x.act(&x.act(&c, &f).unwrap(), &g).unwrap();
        assert_eq!(lhs, rhs, "{} along {:?}", x.cell_literal(&c), word);
        assert_eq!(x.act_word(&c, &word).unwrap(), lhs);
        checked += 1;
    }
    checked
}

#[test]
fn the_action_is_functorial() {
    let p = RandomParams::default();
    let mut simplicial: SkeletalComplex<Simplex> = random_skeletal_complex(2, &p, 3).unwrap();
    simplicial.set_truncation(6).unwrap();
    assert_eq!(action_is_functorial(&simplicial, 1), TRIPLES);
    assert_eq!(
        action_is_functorial(&cubical_counterexample(2).unwrap().complex, 2),
        TRIPLES
    );
    assert_eq!(
        action_is_functorial(&globular_counterexample(3).unwrap().complex, 3),
        TRIPLES
    );
    assert_eq!(
        action_is_functorial(&cyclic_counterexample(2).unwrap().complex, 4),
        TRIPLES
    );
}

#[test]
fn random_cubical_complexes_are_valid() {
    let p = RandomParams::default();
    for seed in 0..100 {
        let x: SkeletalComplex<Cube> = random_skeletal_complex(1, &p, seed).unwrap();
        assert!(x.validate().is_valid(), "seed {seed}");
        assert!(x.top_dim().is_none_or(|d| d <= 1));
    }
}
