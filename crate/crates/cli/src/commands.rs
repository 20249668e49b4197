//! The subcommands. Each returns its output text and exit code; errors map
//! to exit code 2.

use std::path::{Path, PathBuf};

use aufhebung_core::bounds::{certify, random_skeletal_complex, BoundError, RandomParams};
use aufhebung_core::complex::{describe_equation, ComplexError, SkeletalComplex, ValidationIssue};
use aufhebung_core::filler::{
    brute_force_fill, constructive_fill, coskeletal_up_to, first_violation, FillError, FillStatus,
    FillSummary, Sphere,
};
use aufhebung_core::shape::{minimal_dom, Cube, Cyclic, Globe, MorphismError, ShapeKind, Simplex};
use serde::Serialize;

use crate::config::{Command, RunConfig};
use crate::syntax::{
    parse_document, parse_sphere, parse_word, print_complex, ComplexFile, Document, SyntaxError,
    TextShape,
};

pub const EXIT_HOLDS: u8 = 0;
pub const EXIT_FAILS: u8 = 1;
pub const EXIT_ERROR: u8 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Syntax { path: PathBuf, source: SyntaxError },
    #[error("{0}")]
    Word(SyntaxError),
    #[error(transparent)]
    Morphism(#[from] MorphismError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Fill(#[from] FillError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error("serializing output: {0}")]
    Json(#[from] serde_json::Error),
}

/// What a command printed and how the process should exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub output: String,
}

impl Outcome {
    fn json(holds: bool, value: &impl Serialize) -> Result<Self, CliError> {
        let mut output = serde_json::to_string_pretty(value)?;
        output.push('\n');
        Ok(Self {
            code: if holds { EXIT_HOLDS } else { EXIT_FAILS },
            output,
        })
    }
}

macro_rules! per_shape {
    ($kind:expr, $f:ident ( $($arg:expr),* )) => {
        match $kind {
            ShapeKind::Simplicial => $f::<Simplex>($($arg),*),
            ShapeKind::Cubical => $f::<Cube>($($arg),*),
            ShapeKind::Globular => $f::<Globe>($($arg),*),
            ShapeKind::Cyclic => $f::<Cyclic>($($arg),*),
        }
    };
}

macro_rules! per_document {
    ($doc:expr, $f:ident ( $($arg:expr),* )) => {
        match $doc {
            Document::Simplicial(d) => $f(d, $($arg),*),
            Document::Cubical(d) => $f(d, $($arg),*),
            Document::Globular(d) => $f(d, $($arg),*),
            Document::Cyclic(d) => $f(d, $($arg),*),
        }
    };
}

pub fn run(cfg: &RunConfig) -> Result<Outcome, CliError> {
    match &cfg.command {
        Command::Normalize { word, dom } => per_shape!(required_shape(cfg)?, normalize(word, *dom)),
        Command::Validate => per_document!(&load(cfg)?, validate(cfg)),
        Command::Fill { sphere } => per_document!(&load(cfg)?, fill(sphere.as_deref(), cfg)),
        Command::Coskeletal { from, to } => per_document!(&load(cfg)?, coskeletal(*from, *to, cfg)),
        Command::Verify { seeds } => {
            let n = required_n(cfg)?;
            per_shape!(required_shape(cfg)?, verify(n, *seeds, cfg))
        }
        Command::Counterexample => {
            let n = required_n(cfg)?;
            per_shape!(required_shape(cfg)?, counterexample(n, cfg))
        }
    }
}

fn required_shape(cfg: &RunConfig) -> Result<ShapeKind, CliError> {
    cfg.shape
        .ok_or_else(|| CliError::Usage("this command needs --shape".into()))
}

fn required_n(cfg: &RunConfig) -> Result<usize, CliError> {
    cfg.n
        .ok_or_else(|| CliError::Usage("this command needs --n".into()))
}

fn input(cfg: &RunConfig) -> Result<&Path, CliError> {
    cfg.inputs
        .first()
        .map(PathBuf::as_path)
        .ok_or_else(|| CliError::Usage("this command needs an input file".into()))
}

fn load(cfg: &RunConfig) -> Result<Document, CliError> {
    let path = input(cfg)?;
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.into(),
        source,
    })?;
    let mut doc = parse_document(&text).map_err(|source| CliError::Syntax {
        path: path.into(),
        source,
    })?;
    if let Some(shape) = cfg.shape {
        if shape != doc.shape() {
            return Err(CliError::Usage(format!(
                "--shape {shape} does not match the file's shape {}",
                doc.shape()
            )));
        }
    }
    if let Some(t) = cfg.truncation {
        per_document!(&mut doc, set_truncation(t))?;
    }
    Ok(doc)
}

fn set_truncation<S: TextShape>(f: &mut ComplexFile<S>, t: usize) -> Result<(), CliError> {
    Ok(f.complex.set_truncation(t)?)
}

fn require_valid<S: TextShape>(x: &SkeletalComplex<S>) -> Result<(), CliError> {
    let v = x.validate();
    if v.is_valid() {
        Ok(())
    } else {
        Err(CliError::Usage(format!("the complex is not valid: {v}")))
    }
}

fn normalize<S: TextShape>(word: &str, dom: Option<usize>) -> Result<Outcome, CliError> {
    let w = parse_word::<S>(word, 1, 1).map_err(CliError::Word)?;
    let dom = match dom {
        Some(d) => d,
        None => minimal_dom::<S>(&w)
            .ok_or_else(|| CliError::Usage(format!("no domain makes `{word}` composable")))?,
    };
    let f = S::normalize(dom, &w)?;
    Ok(Outcome {
        code: EXIT_HOLDS,
        output: format!("{f}\n"),
    })
}

#[derive(Serialize)]
struct ValidateOutput {
    shape: ShapeKind,
    skeletal: usize,
    truncation: usize,
    generators: usize,
    valid: bool,
    issues: Vec<ValidationIssue>,
}

fn validate<S: TextShape>(f: &ComplexFile<S>, _cfg: &RunConfig) -> Result<Outcome, CliError> {
    let x = &f.complex;
    let report = x.validate();
    let valid = report.is_valid();
    Outcome::json(
        valid,
        &ValidateOutput {
            shape: S::KIND,
            skeletal: x.skeletal_level(),
            truncation: x.truncation(),
            generators: report.generators,
            valid,
            issues: report.issues,
        },
    )
}

#[derive(Serialize)]
struct FillOutput {
    shape: ShapeKind,
    k: usize,
    sphere: String,
    /// The first failing cycle equation, when the faces do not form a sphere.
    violation: Option<String>,
    oracle: FillSummary,
    constructive: Option<FillSummary>,
    /// Whether the constructive filler equals the unique oracle witness;
    /// absent when the constructive algorithm does not apply.
    agree: Option<bool>,
}

fn fill<S: TextShape>(
    f: &ComplexFile<S>,
    sphere: Option<&str>,
    cfg: &RunConfig,
) -> Result<Outcome, CliError> {
    let x = &f.complex;
    require_valid(x)?;
    let s: Sphere<S> = match sphere {
        Some(text) => parse_sphere(x, text, 1, 1).map_err(CliError::Word)?,
        None => f
            .sphere
            .clone()
            .ok_or_else(|| CliError::Usage("no sphere given and the file names none".into()))?,
    };
    let violation = first_violation(x, &s)?.map(|eq| describe_equation::<S>(s.k, &eq));
    let oracle = brute_force_fill(x, &s, cfg.budget_cells)?;
    let (constructive, agree) = if violation.is_some() {
        (None, None)
    } else {
        let c = constructive_fill(x, &s)?;
        let agree = (c.status != FillStatus::NotApplicable)
            .then(|| c.status == oracle.status && c.filler == oracle.filler);
        let mut summary = c.summary(x);
        if !cfg.trace {
            summary.trace.clear();
        }
        (Some(summary), agree)
    };
    let holds = oracle.status == FillStatus::Filled;
    Outcome::json(
        holds,
        &FillOutput {
            shape: S::KIND,
            k: s.k,
            sphere: s.literal(x),
            violation,
            oracle: oracle.summary(x),
            constructive,
            agree,
        },
    )
}

fn coskeletal<S: TextShape>(
    f: &ComplexFile<S>,
    from: usize,
    to: Option<usize>,
    cfg: &RunConfig,
) -> Result<Outcome, CliError> {
    let x = &f.complex;
    require_valid(x)?;
    let to = to.unwrap_or(x.truncation());
    let report = coskeletal_up_to(x, from, to, &cfg.search_options())?;
    Outcome::json(report.coskeletal, &report)
}

fn verify<S: TextShape>(n: usize, seeds: u64, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let ce = S::counterexample(n).transpose()?;
    let mut complexes = Vec::new();
    if let Some(ce) = &ce {
        complexes.push((String::from("counterexample"), ce.complex.clone()));
    }
    for seed in cfg.seed..cfg.seed + seeds {
        complexes.push((
            format!("random-{seed}"),
            random_skeletal_complex::<S>(n, &RandomParams::default(), seed)?,
        ));
    }
    if let Some(t) = cfg.truncation {
        for (_, x) in &mut complexes {
            x.set_truncation(t)?;
        }
    }
    let cert = certify(
        n,
        &complexes,
        ce.as_ref().map(|c| ("counterexample", c)),
        &cfg.search_options(),
    )?;
    Outcome::json(cert.ok(), &cert)
}

fn counterexample<S: TextShape>(n: usize, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let Some(ce) = S::counterexample(n).transpose()? else {
        return Err(CliError::Usage(format!(
            "no counterexample is built for {} complexes with n = {n}",
            S::KIND
        )));
    };
    let mut x = ce.complex;
    if let Some(t) = cfg.truncation {
        x.set_truncation(t)?;
    }
    Ok(Outcome {
        code: EXIT_HOLDS,
        output: print_complex(&x, Some(&ce.sphere)),
    })
}
