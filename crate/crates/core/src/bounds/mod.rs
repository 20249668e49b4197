//! Sharpness and soundness of the skeletal-implies-coskeletal bounds:
//! counterexample complexes, random complexes, and certificates.

mod counterexample;
mod random;
mod underlying;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::Serialize;

use crate::complex::{ComplexError, SkeletalComplex};
use crate::filler::{
    brute_force_fill, coskeletal_up_to, ConstructiveFill, FillError, FillStatus, SearchOptions,
    VerificationReport,
};
use crate::shape::{Cube, Cyclic, Globe, MorphismError, ShapeKind, Simplex};

pub use counterexample::{
    cubical_counterexample, cyclic_counterexample, globular_counterexample,
    simplicial_counterexample, Counterexample,
};
pub use random::{random_skeletal_complex, RandomParams};
pub use underlying::{delta_decompose, is_delta_degenerate, underlying_simplicial, Underlying};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoundError {
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Fill(#[from] FillError),
    #[error("random generation failed: {0}")]
    Generation(String),
}

impl From<MorphismError> for BoundError {
    fn from(e: MorphismError) -> Self {
        BoundError::Complex(e.into())
    }
}

/// Shapes with a known bound to certify.
pub trait Bounded: ConstructiveFill {
    /// Least `k` with every `n`-skeletal complex `k`-coskeletal, or the
    /// proven upper estimate where the exact value is open.
    fn expected_upper(n: usize) -> usize;

    /// A `k` at which some `n`-skeletal complex is known not to be
    /// `k`-coskeletal, when a construction is available.
    fn expected_lower(n: usize) -> Option<usize>;

    /// The designated counterexample for `n`, if one is built.
    fn counterexample(n: usize) -> Option<Result<Counterexample<Self>, BoundError>>;

    /// Extra checks for shapes with a comparison functor.
    fn side_check(
        _x: &SkeletalComplex<Self>,
        _k_min: usize,
        _opts: &SearchOptions,
    ) -> Result<Option<SideCheck>, BoundError> {
        Ok(None)
    }

    /// The exact bound the theory expects but does not prove.
    fn conjectured_exact(_n: usize) -> Option<usize> {
        None
    }
}

impl Bounded for Simplex {
    fn expected_upper(n: usize) -> usize {
        match n {
            0 => 1,
            1 => 2,
            _ => 2 * n - 1,
        }
    }

    fn expected_lower(n: usize) -> Option<usize> {
        (n >= 3).then(|| 2 * n - 2)
    }

    fn counterexample(n: usize) -> Option<Result<Counterexample<Self>, BoundError>> {
        (n >= 3).then(|| simplicial_counterexample(n))
    }
}

impl Bounded for Cube {
    fn expected_upper(n: usize) -> usize {
        if n == 0 {
            1
        } else {
            2 * n
        }
    }

    fn expected_lower(n: usize) -> Option<usize> {
        (n >= 1).then(|| 2 * n - 1)
    }

    fn counterexample(n: usize) -> Option<Result<Counterexample<Self>, BoundError>> {
        (n >= 1).then(|| cubical_counterexample(n))
    }
}

impl Bounded for Globe {
    fn expected_upper(n: usize) -> usize {
        n + 1
    }

    fn expected_lower(n: usize) -> Option<usize> {
        Some(n)
    }

    fn counterexample(n: usize) -> Option<Result<Counterexample<Self>, BoundError>> {
        Some(globular_counterexample(n))
    }
}

impl Bounded for Cyclic {
    fn expected_upper(n: usize) -> usize {
        2 * n + 1
    }

    fn expected_lower(n: usize) -> Option<usize> {
        (n >= 1).then(|| 2 * n - 2)
    }

    fn counterexample(n: usize) -> Option<Result<Counterexample<Self>, BoundError>> {
        (n >= 1).then(|| cyclic_counterexample(n))
    }

    fn side_check(
        x: &SkeletalComplex<Self>,
        k_min: usize,
        opts: &SearchOptions,
    ) -> Result<Option<SideCheck>, BoundError> {
        let u = underlying_simplicial(x)?;
        let up_to = x.truncation();
        let cells_agree = (0..=up_to).all(|k| x.cell_count(k) == u.complex.cell_count(k));
        let own = coskeletal_up_to(x, k_min, up_to, opts)?;
        let theirs = coskeletal_up_to(&u.complex, k_min, up_to, opts)?;
        let levels_agree = own.levels.len() == theirs.levels.len()
            && own
                .levels
                .iter()
                .zip(&theirs.levels)
                .all(|(a, b)| a.holds() == b.holds());
        Ok(Some(SideCheck {
            underlying_skeletal: u.complex.top_dim().unwrap_or(0),
            underlying_generators: u.complex.generators().len(),
            cells_agree,
            levels_agree,
            report: theirs,
        }))
    }

    fn conjectured_exact(n: usize) -> Option<usize> {
        (n >= 1).then(|| 2 * n - 1)
    }
}

/// Outcome of certifying a cyclic complex through its underlying simplicial set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SideCheck {
    pub underlying_skeletal: usize,
    pub underlying_generators: usize,
    /// Cell counts agree in every dimension up to truncation.
    pub cells_agree: bool,
    /// Both sides report the same verdict at every checked dimension.
    pub levels_agree: bool,
    pub report: VerificationReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundClaim {
    pub shape: ShapeKind,
    pub n: usize,
    /// Witnessed: the designated sphere of dimension `lower_fail + 1` has no filler.
    pub lower_fail: Option<usize>,
    /// Every tested complex is `upper_hold`-coskeletal up to truncation.
    pub upper_hold: Option<usize>,
    pub expected_lower_fail: Option<usize>,
    pub expected_upper_hold: usize,
    /// Recorded as an outcome only; never asserted.
    pub conjectured_exact: Option<usize>,
}

impl BoundClaim {
    pub fn holds(&self) -> bool {
        self.upper_hold == Some(self.expected_upper_hold)
            && (self.expected_lower_fail.is_none() || self.lower_fail == self.expected_lower_fail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexCertificate {
    pub label: String,
    pub generators: usize,
    pub report: VerificationReport,
    pub side_check: Option<SideCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SphereCheck {
    pub label: String,
    pub k: usize,
    pub sphere: String,
    pub status: FillStatus,
    pub witnesses: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub claim: BoundClaim,
    pub complexes: Vec<ComplexCertificate>,
    pub counterexample: Option<SphereCheck>,
    pub violations: u64,
    pub constructive_checked: u64,
    pub constructive_agreed: u64,
}

impl Certificate {
    /// The claim holds and no internal assertion fired.
    pub fn ok(&self) -> bool {
        self.claim.holds()
            && self.violations == 0
            && self.complexes.iter().all(|c| {
                c.side_check
                    .as_ref()
                    .is_none_or(|s| s.cells_agree && s.levels_agree)
            })
    }
}

/// Checks the upper bound on every complex and the designated sphere's
/// lack of filler, and aggregates both into a claim.
pub fn certify<S: Bounded>(
    n: usize,
    complexes: &[(String, SkeletalComplex<S>)],
    designated: Option<(&str, &Counterexample<S>)>,
    opts: &SearchOptions,
) -> Result<Certificate, BoundError> {
    let upper = S::expected_upper(n);
    let mut out = Vec::new();
    let mut all_hold = true;
    for (label, x) in complexes {
        if x.top_dim().is_some_and(|d| d > n) {
            return Err(BoundError::Argument(format!(
                "complex `{label}` is not {n}-skeletal"
            )));
        }
        let v = x.validate();
        if !v.is_valid() {
            return Err(BoundError::Argument(format!(
                "complex `{label}` is invalid: {v}"
            )));
        }
        if x.truncation() <= upper {
            return Err(BoundError::Argument(format!(
                "complex `{label}` is truncated at {} and cannot witness {upper}-coskeletality",
                x.truncation()
            )));
        }
        let report = coskeletal_up_to(x, upper, x.truncation(), opts)?;
        let side_check = S::side_check(x, upper, opts)?;
        all_hold &= report.coskeletal;
        out.push(ComplexCertificate {
            label: label.clone(),
            generators: x.generators().len(),
            report,
            side_check,
        });
    }

    let mut lower_fail = None;
    let counterexample = match designated {
        Some((label, ce)) => {
            let r = brute_force_fill(&ce.complex, &ce.sphere, opts.cell_budget)?;
            if r.status == FillStatus::NoFiller {
                lower_fail = Some(ce.sphere.k - 1);
            }
            Some(SphereCheck {
                label: label.into(),
                k: ce.sphere.k,
                sphere: ce.sphere.literal(&ce.complex),
                status: r.status,
                witnesses: r
                    .witnesses
                    .iter()
                    .map(|c| ce.complex.cell_literal(c))
                    .collect(),
            })
        }
        None => None,
    };

    let violations = out.iter().map(|c| c.report.violation_count()).sum();
    let constructive_checked = out.iter().map(|c| c.report.constructive_checked()).sum();
    let constructive_agreed = out.iter().map(|c| c.report.constructive_agreed()).sum();
    Ok(Certificate {
        claim: BoundClaim {
            shape: S::KIND,
            n,
            lower_fail,
            upper_hold: (all_hold && !out.is_empty()).then_some(upper),
            expected_lower_fail: S::expected_lower(n),
            expected_upper_hold: upper,
            conjectured_exact: S::conjectured_exact(n),
        },
        complexes: out,
        counterexample,
        violations,
        constructive_checked,
        constructive_agreed,
    })
}

/// Builds the counterexample (when there is one) and `seeds` random
/// complexes, then certifies them together.
pub fn certify_standard<S: Bounded>(
    n: usize,
    seeds: core::ops::Range<u64>,
    params: &RandomParams,
    opts: &SearchOptions,
) -> Result<Certificate, BoundError> {
    let ce = S::counterexample(n).transpose()?;
    let mut complexes = Vec::new();
    if let Some(ce) = &ce {
        complexes.push((String::from("counterexample"), ce.complex.clone()));
    }
    for seed in seeds {
        complexes.push((
            format!("random-{seed}"),
            random_skeletal_complex::<S>(n, params, seed)?,
        ));
    }
    certify(
        n,
        &complexes,
        ce.as_ref().map(|c| ("counterexample", c)),
        opts,
    )
}
