//! Command-line arguments and the run configuration they describe.

use std::ffi::OsString;
use std::path::PathBuf;

use aufhebung_core::filler::SearchOptions;
use aufhebung_core::shape::ShapeKind;
use clap::{Parser, Subcommand};

fn shape_arg(s: &str) -> Result<ShapeKind, String> {
    s.parse::<ShapeKind>().map_err(|_| {
        format!("unknown shape `{s}` (expected simplicial, cubical, globular or cyclic)")
    })
}

#[derive(Debug, Parser)]
#[command(
    name = "aufhebung",
    version,
    about = "Skeletal and coskeletal checks for presheaves on shape categories"
)]
struct Cli {
    #[command(subcommand)]
    command: CommandArgs,
    /// Shape category: simplicial, cubical, globular or cyclic.
    #[arg(long, global = true, value_parser = shape_arg)]
    shape: Option<ShapeKind>,
    /// Skeletal level for `verify` and `counterexample`.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Override the truncation level of the complexes checked.
    #[arg(long, global = true)]
    truncate: Option<usize>,
    /// Seed for sampling and random complexes.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest number of cells tabulated.
    #[arg(long = "budget-cells", global = true, default_value_t = SearchOptions::default().cell_budget)]
    budget_cells: usize,
    /// Backtracking nodes per level before switching to sampling.
    #[arg(long = "budget-spheres", global = true, default_value_t = SearchOptions::default().node_budget)]
    budget_spheres: u64,
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Include the constructive filler's branch for each face.
    #[arg(long, global = true)]
    trace: bool,
}

#[derive(Debug, Subcommand)]
enum CommandArgs {
    /// Print the canonical form of a word (functional order).
    Normalize {
        word: String,
        /// Domain of the rightmost letter; defaults to the least that fits.
        #[arg(long)]
        dom: Option<usize>,
    },
    /// Check the attaching data of every generator in a complex file.
    Validate { file: PathBuf },
    /// Fill a sphere with the oracle and the constructive algorithm.
    Fill {
        file: PathBuf,
        /// Comma-separated cell literals; defaults to the file's sphere.
        sphere: Option<String>,
    },
    /// Check unique filling of every sphere of dimension in (from, to].
    Coskeletal {
        file: PathBuf,
        #[arg(long)]
        from: usize,
        /// Defaults to the truncation level.
        #[arg(long)]
        to: Option<usize>,
    },
    /// Certify the bound for `--shape` and `--n` on the counterexample and random complexes.
    Verify {
        /// Number of random complexes, seeded from `--seed` upward.
        #[arg(long, default_value_t = 10)]
        seeds: u64,
    },
    /// Print the counterexample complex for `--shape` and `--n` with its sphere.
    Counterexample,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Normalize { word: String, dom: Option<usize> },
    Validate,
    Fill { sphere: Option<String> },
    Coskeletal { from: usize, to: Option<usize> },
    Verify { seeds: u64 },
    Counterexample,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub inputs: Vec<PathBuf>,
    pub shape: Option<ShapeKind>,
    pub n: Option<usize>,
    pub truncation: Option<usize>,
    pub seed: u64,
    pub budget_cells: usize,
    pub budget_spheres: u64,
    pub out: Option<PathBuf>,
    pub trace: bool,
}

impl RunConfig {
    /// Parses an argument list that starts with the program name.
    pub fn try_parse_from<I, T>(args: I) -> Result<Self, clap::Error>
    where
        I: IntoIterator<Item = T>,
        T: Into<OsString> + Clone,
    {
        let cli = Cli::try_parse_from(args)?;
        let (command, inputs) = match cli.command {
            CommandArgs::Normalize { word, dom } => (Command::Normalize { word, dom }, vec![]),
            CommandArgs::Validate { file } => (Command::Validate, vec![file]),
            CommandArgs::Fill { file, sphere } => (Command::Fill { sphere }, vec![file]),
            CommandArgs::Coskeletal { file, from, to } => {
                (Command::Coskeletal { from, to }, vec![file])
            }
            CommandArgs::Verify { seeds } => (Command::Verify { seeds }, vec![]),
            CommandArgs::Counterexample => (Command::Counterexample, vec![]),
        };
        Ok(Self {
            command,
            inputs,
            shape: cli.shape,
            n: cli.n,
            truncation: cli.truncate,
            seed: cli.seed,
            budget_cells: cli.budget_cells,
            budget_spheres: cli.budget_spheres,
            out: cli.out,
            trace: cli.trace,
        })
    }

    /// The argument list (without program name) that parses back to `self`.
    pub fn to_args(&self) -> Vec<String> {
        let mut a: Vec<String> = Vec::new();
        let path = |p: &PathBuf| p.to_string_lossy().into_owned();
        match &self.command {
            Command::Normalize { dom, .. } => {
                a.push("normalize".into());
                if let Some(d) = dom {
                    a.extend(["--dom".into(), d.to_string()]);
                }
            }
            Command::Validate => a.push("validate".into()),
            Command::Fill { .. } => a.push("fill".into()),
            Command::Coskeletal { from, to } => {
                a.extend(["coskeletal".into(), "--from".into(), from.to_string()]);
                if let Some(t) = to {
                    a.extend(["--to".into(), t.to_string()]);
                }
            }
            Command::Verify { seeds } => {
                a.extend(["verify".into(), "--seeds".into(), seeds.to_string()])
            }
            Command::Counterexample => a.push("counterexample".into()),
        }
        if let Some(s) = self.shape {
            a.extend(["--shape".into(), s.to_string()]);
        }
        if let Some(n) = self.n {
            a.extend(["--n".into(), n.to_string()]);
        }
        if let Some(t) = self.truncation {
            a.extend(["--truncate".into(), t.to_string()]);
        }
        a.extend(["--seed".into(), self.seed.to_string()]);
        a.extend(["--budget-cells".into(), self.budget_cells.to_string()]);
        a.extend(["--budget-spheres".into(), self.budget_spheres.to_string()]);
        if let Some(o) = &self.out {
            a.extend(["--out".into(), path(o)]);
        }
        if self.trace {
            a.push("--trace".into());
        }
        // Positionals go last, after `--`, so any text is taken literally.
        a.push("--".into());
        a.extend(self.inputs.iter().map(path));
        match &self.command {
            Command::Fill { sphere: Some(s) } => a.push(s.clone()),
            Command::Normalize { word, .. } => a.push(word.clone()),
            _ => {}
        }
        a
    }

    pub fn search_options(&self) -> SearchOptions {
        SearchOptions {
            node_budget: self.budget_spheres,
            seed: self.seed,
            cell_budget: self.budget_cells,
            ..SearchOptions::default()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn round_trip(c: &RunConfig) {
        let mut args = vec!["aufhebung".to_string()];
        args.extend(c.to_args());
        let back = RunConfig::try_parse_from(&args).unwrap_or_else(|e| panic!("{args:?}: {e}"));
        assert_eq!(&back, c, "{args:?}");
    }

    fn base(command: Command, inputs: Vec<PathBuf>) -> RunConfig {
        RunConfig {
            command,
            inputs,
            shape: None,
            n: None,
            truncation: None,
            seed: 0,
            budget_cells: 10,
            budget_spheres: 20,
            out: None,
            trace: false,
        }
    }

    #[test]
    fn configs_round_trip_through_the_printer() {
        let file = vec![PathBuf::from("dir/x.cx")];
        round_trip(&base(
            Command::Normalize {
                word: "s0 d0".into(),
                dom: Some(2),
            },
            vec![],
        ));
        round_trip(&base(
            Command::Normalize {
                word: "".into(),
                dom: None,
            },
            vec![],
        ));
        round_trip(&base(Command::Validate, file.clone()));
        let mut fill = base(
            Command::Fill {
                sphere: Some("x[s0], y".into()),
            },
            file.clone(),
        );
        fill.trace = true;
        fill.out = Some("out.json".into());
        round_trip(&fill);
        round_trip(&base(Command::Fill { sphere: None }, file.clone()));
        let mut cosk = base(
            Command::Coskeletal {
                from: 1,
                to: Some(3),
            },
            file.clone(),
        );
        cosk.truncation = Some(5);
        round_trip(&cosk);
        let mut verify = base(Command::Verify { seeds: 7 }, vec![]);
        verify.shape = Some(ShapeKind::Cyclic);
        verify.n = Some(2);
        verify.seed = 99;
        round_trip(&verify);
        let mut ce = base(Command::Counterexample, vec![]);
        ce.shape = Some(ShapeKind::Globular);
        ce.n = Some(0);
        round_trip(&ce);
    }

    #[test]
    fn flags_may_follow_the_subcommand() {
        let c = RunConfig::try_parse_from(["aufhebung", "verify", "--shape", "cube", "--n", "1"])
            .unwrap();
        assert_eq!(c.shape, Some(ShapeKind::Cubical));
        assert_eq!(c.command, Command::Verify { seeds: 10 });
        assert!(RunConfig::try_parse_from(["aufhebung", "verify", "--shape", "prism"]).is_err());
    }
}
