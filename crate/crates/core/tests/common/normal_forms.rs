//! Fuzzed words checked against the function models: evaluation,
//! associativity, idempotence of the normal form, uniqueness of the
//! epi-mono factorisation, and the defining relations.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use aufhebung_core::shape::{compose_word, word_dom_for_cod, Shape};

use super::model::{run_word, Model};

pub const MAX_DIM: usize = 6;
const MAX_LEN: usize = 9;
const KEEP: usize = 10;

#[derive(Debug, Default)]
pub struct SuiteReport {
    pub words: usize,
    pub relations: usize,
    pub failures: usize,
    pub examples: Vec<String>,
}

impl SuiteReport {
    fn fail(&mut self, msg: String) {
        self.failures += 1;
        if self.examples.len() < KEEP {
            self.examples.push(msg);
        }
    }
}

/// A random composable word `(dom, word)` with every object at most `MAX_DIM`.
pub fn random_word<S: Shape>(rng: &mut ChaCha8Rng) -> (usize, Vec<S::Gen>) {
    let mut cur = rng.gen_range(0..=MAX_DIM);
    let len = rng.gen_range(0..=MAX_LEN);
    let mut word = Vec::with_capacity(len);
    for _ in 0..len {
        let options: Vec<S::Gen> = S::elementary(cur)
            .into_iter()
            .filter(|g| S::gen_dom_for_cod(*g, cur).is_ok_and(|d| d <= MAX_DIM))
            .collect();
        let Some(&g) = options.choose(rng) else { break };
        cur = S::gen_dom_for_cod(g, cur).unwrap();
        word.push(g);
    }
    (cur, word)
}

/// A mono with no automorphism part: peeling faces ends at an identity.
fn is_plain_mono<S: Shape>(m: &S::Morphism) -> bool {
    let mut rest = *m;
    while let Some((_, r)) = S::split_mono(&rest) {
        rest = r;
    }
    S::is_identity(&rest)
}

fn show<S: Shape>(word: &[S::Gen]) -> String {
    let parts: Vec<String> = word.iter().map(|g| g.to_string()).collect();
    if parts.is_empty() {
        "id".into()
    } else {
        parts.join(" ")
    }
}

fn check_word<S: Model>(dom: usize, word: &[S::Gen], rng: &mut ChaCha8Rng, out: &mut SuiteReport) {
    let w = show::<S>(word);
    let f = match S::normalize(dom, word) {
        Ok(f) => f,
        Err(e) => return out.fail(format!("{w} on {dom}: normalize failed: {e}")),
    };
    match compose_word::<S>(dom, word) {
        Ok(g) if g == f => {}
        other => out.fail(format!(
            "{w} on {dom}: composition gives {other:?}, rewriting gives {f:?}"
        )),
    }
    let points = S::points(dom);
    let want: Vec<S::P> = points.iter().map(|p| run_word::<S>(dom, word, p)).collect();
    let got: Vec<S::P> = points.iter().map(|p| S::morph_fn(&f, p)).collect();
    if !S::same_values(S::cod(&f), &want, &got) {
        out.fail(format!("{w} on {dom}: model {want:?}, normal form {got:?}"));
    }

    let canon = S::word(&f);
    match S::normalize(dom, &canon) {
        Ok(g) if g == f && S::word(&g) == canon => {}
        other => out.fail(format!(
            "{w} on {dom}: canonical word {} renormalizes to {other:?}",
            show::<S>(&canon)
        )),
    }

    let a = rng.gen_range(0..=word.len());
    let b = rng.gen_range(a..=word.len());
    let (w1, w2, w3) = (&word[..a], &word[a..b], &word[b..]);
    let cod = S::cod(&f);
    let parts = (|| {
        let d1 = word_dom_for_cod::<S>(cod, w1)?;
        let d2 = word_dom_for_cod::<S>(cod, &word[..b])?;
        Ok::<_, aufhebung_core::shape::MorphismError>((
            S::normalize(d1, w1)?,
            S::normalize(d2, w2)?,
            S::normalize(dom, w3)?,
        ))
    })();
    match parts {
        Ok((x, y, z)) => {
            let left = S::compose(&x, &y).and_then(|xy| S::compose(&xy, &z));
            let right = S::compose(&y, &z).and_then(|yz| S::compose(&x, &yz));
            if left != right || left != Ok(f) {
                out.fail(format!("{w} on {dom}: split at {a},{b} is not associative"));
            }
        }
        Err(e) => out.fail(format!("{w} on {dom}: split at {a},{b} failed: {e}")),
    }

    let (m, e) = S::factor(&f);
    if !(S::is_mono(&m) && S::is_epi(&e) && is_plain_mono::<S>(&m) && S::compose(&m, &e) == Ok(f)) {
        out.fail(format!(
            "{w} on {dom}: factorisation ({m}, {e}) is not mono after epi"
        ));
        return;
    }
    // Any other factorisation m2 ∘ e2 has m2 = f ∘ s for a section s of e2.
    for k in 0..=dom {
        for e2 in S::epis(dom, k) {
            let Some(s) = S::sections(&e2).ok().and_then(|v| v.first().copied()) else {
                out.fail(format!("epi {e2} has no section"));
                continue;
            };
            let Ok(m2) = S::compose(&f, &s) else { continue };
            if S::is_mono(&m2)
                && is_plain_mono::<S>(&m2)
                && S::compose(&m2, &e2) == Ok(f)
                && (m2, e2) != (m, e)
            {
                out.fail(format!("{w} on {dom}: second factorisation ({m2}, {e2})"));
            }
        }
    }
}

/// Runs `words` fuzzed words and every relation instance touching objects up to `MAX_DIM`.
pub fn run_suite<S: Model>(words: usize, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = SuiteReport::default();
    for _ in 0..words {
        let (dom, word) = random_word::<S>(&mut rng);
        check_word::<S>(dom, &word, &mut rng, &mut out);
        out.words += 1;
    }
    for r in S::relations(MAX_DIM) {
        out.relations += 1;
        let (l, rh) = (S::normalize(r.dom, &r.lhs), S::normalize(r.dom, &r.rhs));
        let same_form = matches!((&l, &rh), (Ok(a), Ok(b)) if a == b);
        let points = S::points(r.dom);
        let lv: Vec<S::P> = points
            .iter()
            .map(|p| run_word::<S>(r.dom, &r.lhs, p))
            .collect();
        let rv: Vec<S::P> = points
            .iter()
            .map(|p| run_word::<S>(r.dom, &r.rhs, p))
            .collect();
        let cod = l.as_ref().map(|m| S::cod(m)).unwrap_or(0);
        let same_fn = S::same_values(cod, &lv, &rv);
        if !same_form || !same_fn {
            out.fail(format!(
                "relation {} = {} on {}: forms {l:?} / {rh:?}, functions agree: {same_fn}",
                show::<S>(&r.lhs),
                show::<S>(&r.rhs),
                r.dom
            ));
        }
    }
    out
}
