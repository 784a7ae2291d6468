//! Command-line surface. [`run`] parses arguments and returns what to print
//! together with the exit code, so the binary is a thin wrapper.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use saff_core::catalog::{enumerate_exceptional_candidates, summarize, CatalogConfig};
use saff_core::constructions::{exact_top_forms, linked_cubics};
use saff_core::filtration::{
    check_blocks_containment, check_duality, check_embedding_theorem, filtration, FiltrationKind,
};
use saff_core::matmodel::{
    model_sym_dual, sl_only_model, verify_degree_bound, AffMatrixRep, DEFAULT_MAX_MODEL_DIM,
};
use saff_core::rationality::{decide_rationality, DecideConfig, Outcome, DEFAULT_MAX_W_SLOTS};
use saff_core::repclass::{
    Classifier, StabilizerConfig, DEFAULT_COORD_BOUND, DEFAULT_SEED, DEFAULT_TRIALS,
};
use saff_core::schur::{lr_decompose, pieri_sym, WeightMultiset};
use serde_json::{json, Value};

use crate::format::{self, FiltrationChecks, FormatError};
use crate::{acceptance, render};

const EXIT_CODES: &str = "Exit codes: 0 success (check2step: RationalByA or RationalByB), \
1 parse, validation or cap error, 2 Exceptional, 3 PossiblyNotGenericallyFree.";

#[derive(Parser, Debug)]
#[command(name = "saff", version, about = "Representations of SL_n ⋉ C^n: weights, models, filtrations and rationality checks", after_help = EXIT_CODES)]
pub struct Cli {
    #[command(flatten)]
    pub run: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

/// Reproducibility and resource controls shared by all subcommands.
#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Random points tried by the stabilizer engine.
    #[arg(long, global = true, default_value_t = DEFAULT_TRIALS, value_parser = clap::value_parser!(u32).range(1..))]
    pub trials: u32,
    /// Largest ambient dimension of any matrix model built.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_MODEL_DIM, value_parser = positive)]
    pub max_model_dim: usize,
    /// Largest number of W summands searched exhaustively.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_W_SLOTS, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_w_slots: u32,
    /// Output format; defaults to json for `enumerate` and `model`, text otherwise.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the output to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

impl RunConfig {
    pub fn stabilizer(&self) -> StabilizerConfig {
        StabilizerConfig {
            seed: self.seed,
            trials: self.trials,
            coord_bound: DEFAULT_COORD_BOUND,
            max_model_dim: self.max_model_dim,
        }
    }
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: DEFAULT_SEED,
            trials: DEFAULT_TRIALS,
            max_model_dim: DEFAULT_MAX_MODEL_DIM,
            max_w_slots: DEFAULT_MAX_W_SLOTS,
            format: None,
            out: None,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Socle,
    Radical,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Weyl dimension of an irreducible.
    Dim(WeightArgs),
    /// Label of the dual representation.
    Dual(WeightArgs),
    /// Decomposition of a tensor product of two irreducibles.
    Tensor {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Decomposition of Σ^λ ⊗ Sym^k(C^n).
    Pieri {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long)]
        k: u32,
    },
    /// Good / bad classification of a completely reducible representation.
    Classify {
        /// Multiset JSON file; alternatively give --n and --lambda.
        file: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long, default_value_t = 1)]
        mult: u32,
    },
    /// Socle or radical filtration of a matrix model file.
    Filtrate {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Kind::Socle)]
        kind: Kind,
    },
    /// Emit a matrix model file.
    #[command(subcommand)]
    Model(ModelCommand),
    /// Decide which rationality criterion applies to a two-step extension file.
    Check2step { file: PathBuf },
    /// Catalog of candidate exceptional pairs (Q, S) with W = 0.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Largest dim S of any entry (by default only pairs admitted through
        /// a small S are bounded, by n² + 2n − 1).
        #[arg(long)]
        max_dim_s: Option<u64>,
        /// Largest number of trivial summands in Q.
        #[arg(long)]
        max_trivials: Option<u32>,
        /// Largest number of summands in a bad core of Q.
        #[arg(long)]
        max_core_summands: Option<u32>,
    },
    /// Run the acceptance suite.
    Selftest {
        /// Run a single criterion (1-10).
        #[arg(long)]
        criterion: Option<usize>,
    },
}

#[derive(Args, Debug)]
pub struct WeightArgs {
    #[arg(long)]
    pub n: usize,
    /// Weight as "2,1,0" or "[2,1,0]".
    #[arg(long)]
    pub lambda: String,
}

#[derive(Subcommand, Debug)]
pub enum ModelCommand {
    /// Polynomials of degree at most l on C^n.
    SymDual {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: u32,
    },
    /// Dual of a model file.
    Dual { file: PathBuf },
    /// Tensor product of two model files.
    Tensor { a: PathBuf, b: PathBuf },
    /// Irreducible with translations acting trivially.
    SlOnly(WeightArgs),
    /// 1-forms generated by exact forms of cubics and x_i dx_j − x_j dx_i.
    ExactTopForms {
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// Three-layer model over (Sym^3 ⊕ Σ^(2,1) ⊕ Λ^3)(C^n)^∨.
    LinkedCubics {
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Compute(String),
    #[error("cannot access {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

fn compute<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Compute(e.to_string())
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: i32,
    /// The text is a diagnostic for standard error.
    pub error: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output {
            text,
            code: 0,
            error: false,
        }
    }

    fn with_code(text: String, code: i32) -> Self {
        Output {
            text,
            code,
            error: false,
        }
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn with_seed(mut v: Value, seed: u64) -> Value {
    if let Value::Object(map) = &mut v {
        map.insert("seed".into(), json!(seed));
    }
    v
}

pub fn outcome_exit_code(o: Outcome) -> i32 {
    match o {
        Outcome::RationalByA | Outcome::RationalByB => 0,
        Outcome::Exceptional => 2,
        Outcome::PossiblyNotGenericallyFree => 3,
    }
}

/// Run a parsed command.
pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    let run = &cli.run;
    let text_default = run.format.unwrap_or(Format::Text) == Format::Text;
    match &cli.command {
        Command::Dim(a) => {
            let w = format::parse_weight(Some(a.n), &a.lambda)?;
            let dim = w.weyl_dim();
            Ok(Output::ok(if text_default {
                format!("{dim}\n")
            } else {
                pretty(
                    &json!({ "n": a.n, "lambda": w.parts(), "dim": dim.to_string(), "seed": run.seed }),
                )
            }))
        }
        Command::Dual(a) => {
            let w = format::parse_weight(Some(a.n), &a.lambda)?;
            let d = w.dual();
            Ok(Output::ok(if text_default {
                format!("{d}\n")
            } else {
                pretty(
                    &json!({ "n": a.n, "lambda": w.parts(), "dual": d.parts(), "seed": run.seed }),
                )
            }))
        }
        Command::Tensor { n, a, b } => {
            let a = format::parse_weight(Some(*n), a)?;
            let b = format::parse_weight(Some(*n), b)?;
            Ok(multiset_output(
                &lr_decompose(&a, &b),
                text_default,
                run.seed,
            ))
        }
        Command::Pieri { weight, k } => {
            let w = format::parse_weight(Some(weight.n), &weight.lambda)?;
            Ok(multiset_output(&pieri_sym(&w, *k), text_default, run.seed))
        }
        Command::Classify {
            file,
            n,
            lambda,
            mult,
        } => {
            let rep = match (file, n, lambda) {
                (Some(path), None, None) => format::parse_multiset(&read(path)?)?,
                (None, Some(n), Some(l)) => {
                    let w = format::parse_weight(Some(*n), l)?;
                    WeightMultiset::from_pairs(*n, [(w, *mult)]).map_err(compute)?
                }
                _ => {
                    return Err(CliError::Usage(
                        "classify takes either a multiset file or --n with --lambda".into(),
                    ))
                }
            };
            let mut classifier = Classifier::new(run.stabilizer());
            let report = classifier.classify(&rep).map_err(compute)?;
            Ok(Output::ok(if text_default {
                let mut s = format!("{}: {}\n", render::multiset_name(&rep), report.class);
                if let Some(w) = &report.off_list {
                    s += &format!("summand {w} is not on the bad list");
                    if !report.list_complete {
                        s += " (the list is only known to be complete for n > 9)";
                    }
                    s.push('\n');
                }
                if let Some(st) = &report.stabilizer {
                    s += &format!("stab_dim: {} (trials {})\n", st.stab_dim, st.trials);
                }
                s + &format!("seed: {}\n", run.seed)
            } else {
                pretty(&format::classify_json(&report, &rep, run.seed))
            }))
        }
        Command::Filtrate { file, kind } => {
            let rep = format::parse_model(&read(file)?)?;
            let kind = match kind {
                Kind::Socle => FiltrationKind::Socle,
                Kind::Radical => FiltrationKind::Radical,
            };
            let f = filtration(&rep, kind).map_err(compute)?;
            let checks = FiltrationChecks {
                duality: check_duality(&rep).map_err(compute)?,
                blocks: check_blocks_containment(&f),
                embedding: check_embedding_theorem(&rep).map_err(compute)?,
                degree_bound: verify_degree_bound(&rep, &f),
            };
            Ok(Output::ok(if text_default {
                render::filtration_text(&f, &checks, run.seed)
            } else {
                pretty(&format::filtration_json(&f, &checks, run.seed))
            }))
        }
        Command::Model(m) => {
            let rep = build_model(m, run.max_model_dim)?;
            Ok(Output::ok(format!("{}\n", format::model_json(&rep))))
        }
        Command::Check2step { file } => {
            let ext = format::parse_extension(&read(file)?)?;
            let mut classifier = Classifier::new(run.stabilizer());
            let config = DecideConfig {
                max_w_slots: run.max_w_slots,
            };
            let verdict = decide_rationality(&ext, &mut classifier, &config).map_err(compute)?;
            let text = if text_default {
                render::verdict_text(&verdict)
            } else {
                pretty(&format::verdict_json(&verdict))
            };
            Ok(Output::with_code(text, outcome_exit_code(verdict.outcome)))
        }
        Command::Enumerate {
            n,
            max_dim_s,
            max_trivials,
            max_core_summands,
        } => {
            let mut config = CatalogConfig::for_rank(*n);
            if let Some(v) = max_dim_s {
                config.max_dim_s = *v;
                config.bound_all_s = true;
            }
            if let Some(v) = max_trivials {
                config.max_trivials = *v;
            }
            if let Some(v) = max_core_summands {
                config.max_core_summands = *v;
            }
            let json = run.format.unwrap_or(Format::Json) == Format::Json;
            Ok(Output::ok(enumerate_output(
                *n,
                &config,
                &run.stabilizer(),
                json,
            )?))
        }
        Command::Selftest { criterion } => {
            let results = match criterion {
                Some(k) => vec![acceptance::run_criterion(*k, run)
                    .ok_or_else(|| CliError::Usage(format!("no criterion {k}; use 1-10")))?],
                None => acceptance::run_all(run),
            };
            let all = results.iter().all(|r| r.passed);
            let mut text: String = results.iter().map(|r| format!("{r}\n")).collect();
            text += &format!("seed: {}\n", run.seed);
            Ok(Output::with_code(text, if all { 0 } else { 1 }))
        }
    }
}

fn multiset_output(m: &WeightMultiset, text: bool, seed: u64) -> Output {
    Output::ok(if text {
        format!("{m}\n")
    } else {
        pretty(&with_seed(format::multiset_json(m), seed))
    })
}

fn build_model(m: &ModelCommand, cap: usize) -> Result<AffMatrixRep, CliError> {
    let rank_check = |n: usize| {
        if n == 0 {
            Err(CliError::Usage("--n must be positive".into()))
        } else {
            Ok(())
        }
    };
    match m {
        ModelCommand::SymDual { n, l } => {
            rank_check(*n)?;
            model_sym_dual(*n, *l, cap).map_err(compute)
        }
        ModelCommand::Dual { file } => Ok(format::parse_model(&read(file)?)?.dual()),
        ModelCommand::Tensor { a, b } => {
            let a = format::parse_model(&read(a)?)?;
            let b = format::parse_model(&read(b)?)?;
            if a.rank() != b.rank() {
                return Err(CliError::Usage(format!(
                    "ranks differ: {} and {}",
                    a.rank(),
                    b.rank()
                )));
            }
            a.tensor(&b, cap).map_err(compute)
        }
        ModelCommand::SlOnly(w) => {
            rank_check(w.n)?;
            sl_only_model(&format::parse_weight(Some(w.n), &w.lambda)?, cap).map_err(compute)
        }
        ModelCommand::ExactTopForms { n } => exact_top_forms(*n, cap).map_err(compute),
        ModelCommand::LinkedCubics { n } => linked_cubics(*n, cap).map_err(compute),
    }
}

/// The catalog as JSON lines with a final summary line, or as a text table.
pub fn enumerate_output(
    n: usize,
    config: &CatalogConfig,
    stabilizer: &StabilizerConfig,
    json: bool,
) -> Result<String, CliError> {
    if n < 2 {
        return Err(CliError::Usage("--n must be at least 2".into()));
    }
    let mut classifier = Classifier::new(*stabilizer);
    let entries = enumerate_exceptional_candidates(n, config, &mut classifier).map_err(compute)?;
    let summary = summarize(&entries);
    let mut out = String::new();
    if json {
        for e in &entries {
            out += &format::catalog_entry_json(e).to_string();
            out.push('\n');
        }
        out += &format::catalog_summary_json(&summary, stabilizer.seed).to_string();
        out.push('\n');
    } else {
        for e in &entries {
            out += &render::catalog_row(e);
            out.push('\n');
        }
        out += &render::catalog_footer(&summary, stabilizer.seed);
    }
    Ok(out)
}

/// Parse and run; clap errors become exit code 1 (help and version exit 0).
pub fn run<I, T>(args: I) -> (Output, Option<PathBuf>)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let error = e.use_stderr();
            let code = if error { 1 } else { 0 };
            return (
                Output {
                    text: e.render().to_string(),
                    code,
                    error,
                },
                None,
            );
        }
    };
    match execute(&cli) {
        Ok(out) => (out, cli.run.out.clone()),
        Err(e) => (
            Output {
                text: format!("error: {e}\n"),
                code: 1,
                error: true,
            },
            None,
        ),
    }
}
