//! `fcid`: command-line front end for function-correcting insdel codes.
//!
//! Exit codes: 0 success, 1 verification/decode defect found, 2 invalid
//! input, 3 size cap exceeded.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use fcid_core::bounds::{
    hamming_plotkin_lower, minimal_admissible_n, plotkin_like_lower, published_runs_closed_form,
    runs_redundancy_closed_form, runs_redundancy_lower, sphere_size_bounds, sum_bound_check,
    BoundReport,
};
use fcid_core::channel::{simulate, Adversary};
use fcid_core::constructions::{
    locally_bounded_encoder, runs_as_locally_bounded, runs_construction, three_color_code,
    two_color_code, ConstructionResult,
};
use fcid_core::error::Error;
use fcid_core::fcidc::{
    build_encoder_from_code, optimal_redundancy_exact, redundancy_bracket, verify_by_deletion_sets,
    verify_by_distance, verify_by_insertion_sets, FcidcEncoder, OracleOutcome, VerificationReport,
};
use fcid_core::functions::{max_run_function, runs_function, vt_syndrome, TargetFunction};
use fcid_core::matrices::{
    catalog_estimates, function_matrix, message_matrix, representative_vectors, DistanceMatrix,
    Family, MatrixType,
};
use fcid_core::metric::{
    deletion_sphere, insdel_ball, insdel_distance, insertion_sphere, lcs_length,
};
use fcid_core::rational::Rational;
use fcid_core::search::{
    gv_bound, gv_greedy_construct, search_min_length, verify_code, IrregularCode, SearchMode,
    VerifyOutcome,
};
use fcid_core::word::BinaryWord;

#[derive(Parser)]
#[command(
    name = "fcid",
    version,
    about = "Function-correcting codes for insertion-deletion channels"
)]
struct Cli {
    /// Emit line-delimited JSON instead of human-readable output.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for randomized paths (no ambient entropy is ever used).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Refuse functions with message length above this cap.
    #[arg(long, global = true, default_value_t = 12)]
    max_k: usize,

    /// Search over row permutations in exact code searches.
    #[arg(long, global = true)]
    permutations: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Insdel distance between two words.
    Dist { x: String, y: String },
    /// Longest-common-subsequence length of two words.
    Lcs { x: String, y: String },
    /// Deletion or insertion sphere around a word.
    Sphere {
        #[arg(value_enum)]
        kind: SphereKind,
        x: String,
        t: usize,
    },
    /// Same-length insdel ball around a word.
    Ball { x: String, d: usize },
    /// Generate a requirement matrix.
    Matrix(MatrixArgs),
    /// Exact minimum-length search for a requirement matrix.
    Search {
        /// Matrix JSON file.
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Type1)]
        mode: ModeArg,
        /// Type-2 length floor K.
        #[arg(long)]
        anchor: Option<usize>,
        #[arg(long, default_value_t = 12)]
        cap: usize,
    },
    /// Greedy constructive upper bound (and optional numeric ball bound).
    Gv {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Type1)]
        mode: ModeArg,
        #[arg(long)]
        anchor: Option<usize>,
        #[arg(long, default_value_t = 16)]
        cap: usize,
        /// Also compute the ball-counting numeric bound (small lengths only).
        #[arg(long)]
        numeric: bool,
    },
    /// Closed-form bounds.
    Bound(BoundArgs),
    /// Exact optimal redundancy by exhaustive map search (k <= 3).
    Oracle {
        #[arg(long)]
        function: String,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 4)]
        cap: usize,
    },
    /// Redundancy bracket from the type-1/type-2 matrix pipeline.
    Bracket {
        #[arg(long)]
        function: String,
        #[arg(long)]
        t: usize,
        /// Representative family for the lower side (needed for k > 3).
        #[arg(long, value_enum)]
        representatives: Option<FamilyArg>,
        /// Use catalog closed-form distance estimates on the upper side.
        #[arg(long)]
        estimates: bool,
        #[arg(long, default_value_t = 16)]
        cap: usize,
    },
    /// Build a named construction and report its verification verdict.
    Construct(ConstructArgs),
    /// Verify an encoder file or a codeword assignment against a matrix.
    Verify(VerifyArgs),
    /// Channel simulation against an encoder.
    Simulate {
        /// Encoder JSON file.
        #[arg(long)]
        encoder: PathBuf,
        /// Function specification matching the encoder (vt:K, runs:K,
        /// max-run:K, table:PATH).
        #[arg(long)]
        function: String,
        /// Corruption budget; defaults to the encoder's design t.
        #[arg(long)]
        channel_t: Option<usize>,
        /// Exhaustive adversary (all corruptions up to the budget).
        #[arg(long)]
        exhaustive: bool,
        /// Trial count for the seeded random adversary.
        #[arg(long, default_value_t = 1000)]
        trials: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SphereKind {
    Del,
    Ins,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum ModeArg {
    Type1,
    Type2,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Vt,
    Runs,
    MaxRun,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Vt => Family::Vt,
            FamilyArg::Runs => Family::Runs,
            FamilyArg::MaxRun => Family::MaxRun,
        }
    }
}

#[derive(Args)]
struct MatrixArgs {
    /// Function specification: vt:K, runs:K, max-run:K, or table:PATH.
    #[arg(long)]
    function: String,
    #[arg(long)]
    t: usize,
    #[arg(long, value_enum, default_value_t = ModeArg::Type1)]
    kind: ModeArg,
    /// Build the function-distance matrix over image values instead of a
    /// message-vector matrix.
    #[arg(long)]
    function_level: bool,
    /// Message rows: a representative family...
    #[arg(long, value_enum)]
    representatives: Option<FamilyArg>,
    /// ... or an explicit comma-separated word list (default: all messages).
    #[arg(long)]
    words: Option<String>,
    /// Use catalog closed-form distance estimates (function level only).
    #[arg(long)]
    estimates: bool,
    /// Write matrix JSON here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write a CSV rendering here.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct BoundArgs {
    #[command(subcommand)]
    which: BoundCommand,
}

#[derive(Subcommand)]
enum BoundCommand {
    /// Supersequence Plotkin bound for a matrix, at a given or minimal N.
    Plotkin {
        #[arg(long)]
        matrix: PathBuf,
        /// Supersequence length N; defaults to the minimal admissible value.
        #[arg(long)]
        n: Option<i64>,
    },
    /// Hamming-derived Plotkin bound for a matrix.
    Hamming {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Runs-function redundancy lower bound at budget t.
    RunsLower {
        #[arg(long)]
        t: u64,
    },
    /// Sphere-size bounds for a word and radius.
    Sphere {
        #[arg(long)]
        x: String,
        #[arg(long)]
        t: usize,
    },
    /// Supersequence pair-sum check for an explicit code.
    SumCheck {
        /// Comma-separated codewords.
        #[arg(long)]
        code: String,
        /// Common supersequence.
        #[arg(long)]
        v: String,
    },
}

#[derive(Args)]
struct ConstructArgs {
    #[command(subcommand)]
    which: ConstructCommand,
}

#[derive(Subcommand)]
enum ConstructCommand {
    /// Runs construction with smod-cycled redundancy words.
    RunsSmod {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Runs function through the locally-bounded pipeline (lambda = 4t+1).
    RunsLocal {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Locally-bounded encoder with the two-word inner code (E = 2).
    TwoColor {
        #[arg(long)]
        function: String,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Locally-bounded encoder with the three-word inner code.
    ThreeColor {
        #[arg(long)]
        function: String,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Encoder from an explicit code over the type-2 function matrix.
    FromCode {
        #[arg(long)]
        function: String,
        #[arg(long)]
        t: usize,
        /// Comma-separated codewords, one per image value.
        #[arg(long)]
        code: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Encoder JSON file (requires --function).
    #[arg(long)]
    encoder: Option<PathBuf>,
    /// Function specification for the encoder.
    #[arg(long)]
    function: Option<String>,
    /// Verification route for encoders.
    #[arg(long, value_enum, default_value_t = MethodArg::All)]
    method: MethodArg,
    /// Matrix JSON file (requires --words).
    #[arg(long)]
    matrix: Option<PathBuf>,
    /// Comma-separated codeword assignment for --matrix.
    #[arg(long)]
    words: Option<String>,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum MethodArg {
    Distance,
    Del,
    Ins,
    All,
}

struct Ctx {
    json: bool,
    seed: u64,
    max_k: usize,
    permutations: bool,
}

impl Ctx {
    fn emit(&self, value: serde_json::Value, human: String) {
        if self.json {
            println!("{value}");
        } else {
            println!("{human}");
        }
    }
}

fn parse_word(s: &str) -> Result<BinaryWord, Error> {
    BinaryWord::from_str(s.trim())
}

fn parse_word_list(s: &str) -> Result<Vec<BinaryWord>, Error> {
    s.split(',').map(parse_word).collect()
}

fn parse_function(spec: &str, max_k: usize) -> Result<TargetFunction, Error> {
    let (kind, arg) = spec.split_once(':').ok_or_else(|| {
        Error::Precondition(format!(
            "function spec {spec:?} must be vt:K, runs:K, max-run:K, or table:PATH"
        ))
    })?;
    let f = match kind {
        "vt" | "runs" | "max-run" => {
            let k: usize = arg.parse().map_err(|_| {
                Error::Precondition(format!("function spec {spec:?}: bad message length"))
            })?;
            if k == 0 {
                return Err(Error::Precondition(
                    "message length must be positive".into(),
                ));
            }
            if k > max_k {
                return Err(Error::SizeCap {
                    what: "function message length (--max-k)",
                    requested: k,
                    limit: max_k,
                });
            }
            match kind {
                "vt" => vt_syndrome(k),
                "runs" => runs_function(k),
                _ => max_run_function(k),
            }
        }
        "table" => {
            let text = fs::read_to_string(arg)?;
            let f = TargetFunction::from_table_text(format!("table:{arg}"), &text)?;
            if f.k() > max_k {
                return Err(Error::SizeCap {
                    what: "function message length (--max-k)",
                    requested: f.k(),
                    limit: max_k,
                });
            }
            f
        }
        other => {
            return Err(Error::Precondition(format!(
                "unknown function kind {other:?}"
            )));
        }
    };
    Ok(f)
}

fn catalog_family(f: &TargetFunction) -> Option<Family> {
    match f.name().split(':').next() {
        Some("vt") => Some(Family::Vt),
        Some("runs") => Some(Family::Runs),
        Some("max-run") => Some(Family::MaxRun),
        _ => None,
    }
}

fn load_matrix(path: &PathBuf) -> Result<DistanceMatrix, Error> {
    DistanceMatrix::from_json(&fs::read_to_string(path)?)
}

fn mode_of(mode: ModeArg, anchor: Option<usize>) -> Result<SearchMode, Error> {
    match mode {
        ModeArg::Type1 => Ok(SearchMode::Type1),
        ModeArg::Type2 => {
            let anchor = anchor
                .ok_or_else(|| Error::Precondition("type2 mode requires --anchor K".into()))?;
            Ok(SearchMode::Type2 { anchor })
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::SizeCap { .. } => 3,
        Error::VerificationDefect(_) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx {
        json: cli.json,
        seed: cli.seed,
        max_k: cli.max_k,
        permutations: cli.permutations,
    };
    match run(&ctx, cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn run(ctx: &Ctx, command: Command) -> Result<u8, Error> {
    match command {
        Command::Dist { x, y } => {
            let (x, y) = (parse_word(&x)?, parse_word(&y)?);
            let d = insdel_distance(&x, &y);
            let lcs = lcs_length(&x, &y);
            ctx.emit(
                json!({"x": x.to_string(), "y": y.to_string(), "insdel_distance": d, "lcs": lcs}),
                format!("d_ID({x}, {y}) = {d}   (LCS = {lcs})"),
            );
            Ok(0)
        }
        Command::Lcs { x, y } => {
            let (x, y) = (parse_word(&x)?, parse_word(&y)?);
            let lcs = lcs_length(&x, &y);
            ctx.emit(
                json!({"x": x.to_string(), "y": y.to_string(), "lcs": lcs}),
                format!("LCS({x}, {y}) = {lcs}"),
            );
            Ok(0)
        }
        Command::Sphere { kind, x, t } => {
            let x = parse_word(&x)?;
            let sphere: Vec<String> = match kind {
                SphereKind::Del => deletion_sphere(&x, t)?
                    .iter()
                    .map(|w| w.to_string())
                    .collect(),
                SphereKind::Ins => insertion_sphere(&x, t)
                    .iter()
                    .map(|w| w.to_string())
                    .collect(),
            };
            let label = match kind {
                SphereKind::Del => "deletion",
                SphereKind::Ins => "insertion",
            };
            ctx.emit(
                json!({"center": x.to_string(), "t": t, "kind": label, "size": sphere.len(), "words": sphere}),
                format!("{label} sphere of {x} at radius {t}: {} words\n{}", sphere.len(), sphere.join(" ")),
            );
            Ok(0)
        }
        Command::Ball { x, d } => {
            let x = parse_word(&x)?;
            let ball: Vec<String> = insdel_ball(&x, d)?.iter().map(|w| w.to_string()).collect();
            ctx.emit(
                json!({"center": x.to_string(), "d": d, "size": ball.len(), "words": ball}),
                format!(
                    "insdel ball of {x} at radius {d}: {} words\n{}",
                    ball.len(),
                    ball.join(" ")
                ),
            );
            Ok(0)
        }
        Command::Matrix(args) => run_matrix(ctx, args),
        Command::Search {
            matrix,
            mode,
            anchor,
            cap,
        } => {
            let m = load_matrix(&matrix)?;
            let mode = mode_of(mode, anchor)?;
            let result = search_min_length(&m, mode, ctx.permutations, cap)?;
            let human = match result.min_length() {
                Some(len) => format!(
                    "minimum length {len}; witness: {}  (explored {} nodes)",
                    result
                        .code()
                        .expect("witness")
                        .words
                        .iter()
                        .map(|w| w.to_string())
                        .collect::<Vec<_>>()
                        .join(" "),
                    result.explored
                ),
                None => format!(
                    "infeasible at cap {cap} (explored {} nodes)",
                    result.explored
                ),
            };
            ctx.emit(result.to_json(), human);
            Ok(0)
        }
        Command::Gv {
            matrix,
            mode,
            anchor,
            cap,
            numeric,
        } => {
            let m = load_matrix(&matrix)?;
            let mode = mode_of(mode, anchor)?;
            let (code, len) = gv_greedy_construct(&m, None, mode, cap)?;
            let mut value = json!({
                "greedy_length": len,
                "words": code.words.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            });
            let mut human = format!(
                "greedy length {len}; code: {}",
                code.words
                    .iter()
                    .map(|w| w.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            if numeric {
                let bound = gv_bound(&m, None, mode, cap)?;
                value["numeric_bound"] = json!(bound);
                human.push_str(&format!("\nball-counting bound: {bound}"));
            }
            ctx.emit(value, human);
            Ok(0)
        }
        Command::Bound(args) => run_bound(ctx, args),
        Command::Oracle { function, t, cap } => {
            let f = parse_function(&function, ctx.max_k)?;
            let outcome = optimal_redundancy_exact(&f, t, cap)?;
            match outcome {
                OracleOutcome::Found { r, encoder } => {
                    ctx.emit(
                        json!({"function": f.name(), "t": t, "optimal_redundancy": r, "encoder": encoder.to_json()}),
                        format!("optimal redundancy of {} at t = {t}: {r}", f.name()),
                    );
                }
                OracleOutcome::ExceededCap { cap } => {
                    ctx.emit(
                        json!({"function": f.name(), "t": t, "optimal_redundancy": null, "cap": cap}),
                        format!("no encoder within redundancy cap {cap}"),
                    );
                }
            }
            Ok(0)
        }
        Command::Bracket {
            function,
            t,
            representatives,
            estimates,
            cap,
        } => {
            let f = parse_function(&function, ctx.max_k)?;
            let reps: Option<Vec<BinaryWord>> = match representatives {
                Some(fam) => Some(representative_vectors(fam.into(), f.k())),
                None => catalog_family(&f)
                    .filter(|_| f.k() > 3)
                    .map(|fam| representative_vectors(fam, f.k())),
            };
            let est = if estimates {
                let fam = catalog_family(&f).ok_or_else(|| {
                    Error::Precondition(
                        "--estimates needs a catalog function (vt/runs/max-run)".into(),
                    )
                })?;
                Some(catalog_estimates(fam, f.k()))
            } else {
                None
            };
            let bracket = redundancy_bracket(&f, t, reps.as_deref(), est.as_ref(), cap)?;
            ctx.emit(
                json!({"function": f.name(), "t": t, "bracket": bracket.to_json()}),
                format!(
                    "{} <= r <= {}   (lower: {}, upper: {})",
                    bracket.lower, bracket.upper, bracket.lower_method, bracket.upper_method
                ),
            );
            Ok(0)
        }
        Command::Construct(args) => run_construct(ctx, args),
        Command::Verify(args) => run_verify(ctx, args),
        Command::Simulate {
            encoder,
            function,
            channel_t,
            exhaustive,
            trials,
        } => {
            let f = parse_function(&function, ctx.max_k)?;
            let value: serde_json::Value = serde_json::from_str(&fs::read_to_string(&encoder)?)?;
            let enc = FcidcEncoder::from_json(&value, f)?;
            let budget = channel_t.unwrap_or(enc.t());
            let adversary = if exhaustive {
                Adversary::Exhaustive
            } else {
                Adversary::Random {
                    seed: ctx.seed,
                    trials,
                }
            };
            let summary = simulate(&enc, adversary, budget)?;
            let mut human = format!(
                "trials {}  successes {}  wrong {}  no-candidates {}  mixed {}  rate {}",
                summary.trials,
                summary.successes,
                summary.wrong_value,
                summary.no_candidates,
                summary.mixed,
                summary
                    .success_rate()
                    .map(|r| format!("{r:.6}"))
                    .unwrap_or_else(|| "-".into()),
            );
            for failure in summary.failures.iter().take(10) {
                human.push_str(&format!("\nfailure: {}", failure.to_json()));
            }
            if ctx.json {
                println!("{}", summary.to_json());
                for failure in &summary.failures {
                    println!("{}", failure.to_json());
                }
            } else {
                println!("{human}");
            }
            // Mixed candidates or wrong values are decode defects; pure
            // over-budget losses are expected output of stress runs.
            Ok(if summary.mixed > 0 || summary.wrong_value > 0 {
                1
            } else {
                0
            })
        }
    }
}

fn run_matrix(ctx: &Ctx, args: MatrixArgs) -> Result<u8, Error> {
    let f = parse_function(&args.function, ctx.max_k)?;
    let which = match args.kind {
        ModeArg::Type1 => MatrixType::Type1,
        ModeArg::Type2 => MatrixType::Type2,
    };
    let matrix = if args.function_level {
        let est = args
            .estimates
            .then(|| {
                catalog_family(&f).ok_or_else(|| {
                    Error::Precondition(
                        "--estimates needs a catalog function (vt/runs/max-run)".into(),
                    )
                })
            })
            .transpose()?
            .map(|fam| catalog_estimates(fam, f.k()));
        function_matrix(&f, args.t, which, est.as_ref())?
    } else {
        let words: Vec<BinaryWord> = if let Some(list) = &args.words {
            parse_word_list(list)?
        } else if let Some(fam) = args.representatives {
            representative_vectors(fam.into(), f.k())
        } else if f.k() <= 10 {
            BinaryWord::all_of_length(f.k()).collect()
        } else {
            return Err(Error::SizeCap {
                what: "full message-set matrix",
                requested: f.k(),
                limit: 10,
            });
        };
        message_matrix(&f, args.t, &words, which)?
    };
    if let Some(path) = &args.out {
        fs::write(path, matrix.to_json())?;
    }
    if let Some(path) = &args.csv {
        fs::write(path, matrix.to_csv())?;
    }
    ctx.emit(
        serde_json::to_value(&matrix).expect("matrix serializes"),
        matrix.to_csv(),
    );
    Ok(0)
}

fn run_bound(ctx: &Ctx, args: BoundArgs) -> Result<u8, Error> {
    let report = match args.which {
        BoundCommand::Plotkin { matrix, n } => {
            let m = load_matrix(&matrix)?;
            let n_value = match n {
                Some(n) => Rational::integer(n as i128),
                None => minimal_admissible_n(&m),
            };
            let interval = plotkin_like_lower(&m, n_value)?;
            BoundReport {
                name: "plotkin-supersequence",
                direction: "lower",
                value: interval.lower,
                parameters: json!({
                    "order": m.order,
                    "pair_sum": m.pair_sum(),
                    "n": n_value.to_string(),
                    "interval_upper": interval.upper.to_string(),
                    "premise": "requires a length-N common supersequence of an optimal code",
                }),
            }
        }
        BoundCommand::Hamming { matrix } => {
            let m = load_matrix(&matrix)?;
            BoundReport {
                name: "plotkin-hamming-derived",
                direction: "lower",
                value: hamming_plotkin_lower(&m),
                parameters: json!({"order": m.order, "pair_sum": m.pair_sum()}),
            }
        }
        BoundCommand::RunsLower { t } => BoundReport {
            name: "runs-redundancy",
            direction: "lower",
            value: runs_redundancy_lower(t),
            parameters: json!({
                "t": t,
                "closed_form": runs_redundancy_closed_form(t).to_string(),
                "published_form": published_runs_closed_form(t).to_string(),
            }),
        },
        BoundCommand::Sphere { x, t } => {
            let word = parse_word(&x)?;
            let (dl, du, iu) = sphere_size_bounds(&word, t)?;
            ctx.emit(
                json!({"x": word.to_string(), "t": t, "deletion_lower": dl.to_string(), "deletion_upper": du.to_string(), "insertion_upper": iu.to_string()}),
                format!("deletion sphere in [{dl}, {du}], insertion sphere <= {iu}"),
            );
            return Ok(0);
        }
        BoundCommand::SumCheck { code, v } => {
            let words = parse_word_list(&code)?;
            let v = parse_word(&v)?;
            let holds = sum_bound_check(&words, &v)?;
            ctx.emit(
                json!({"code": code, "v": v.to_string(), "holds": holds}),
                format!("pair-sum inequality holds: {holds}"),
            );
            return Ok(if holds { 0 } else { 1 });
        }
    };
    ctx.emit(
        report.to_json(),
        format!(
            "{:<28} {:<6} {}  {}",
            report.name, report.direction, report.value, report.parameters
        ),
    );
    Ok(0)
}

fn emit_construction(
    ctx: &Ctx,
    result: &ConstructionResult,
    out: Option<&PathBuf>,
) -> Result<u8, Error> {
    if let Some(path) = out {
        fs::write(
            path,
            serde_json::to_string_pretty(&result.encoder.to_json())?,
        )?;
    }
    let verdict = if result.report.passed() {
        "pass"
    } else {
        "fail"
    };
    let human = match &result.report.counterexample {
        Some(ce) => format!(
            "r = {}  verification: {verdict}\ncounterexample: {ce}",
            result.encoder.redundancy_len()
        ),
        None => format!(
            "r = {}  verification: {verdict}",
            result.encoder.redundancy_len()
        ),
    };
    ctx.emit(
        json!({
            "encoder": result.encoder.to_json(),
            "report": result.report.to_json(),
        }),
        human,
    );
    Ok(if result.report.passed() { 0 } else { 1 })
}

fn run_construct(ctx: &Ctx, args: ConstructArgs) -> Result<u8, Error> {
    match args.which {
        ConstructCommand::RunsSmod { k, t, out } => {
            let result = runs_construction(k, t)?;
            emit_construction(ctx, &result, out.as_ref())
        }
        ConstructCommand::RunsLocal { k, t, cap, out } => {
            let result = runs_as_locally_bounded(k, t, cap)?;
            emit_construction(ctx, &result, out.as_ref())
        }
        ConstructCommand::TwoColor { function, t, out } => {
            let f = parse_function(&function, ctx.max_k)?;
            let result = locally_bounded_encoder(&f, t, &two_color_code(t, f.k()))?;
            emit_construction(ctx, &result, out.as_ref())
        }
        ConstructCommand::ThreeColor { function, t, out } => {
            let f = parse_function(&function, ctx.max_k)?;
            let result = locally_bounded_encoder(&f, t, &three_color_code(t, f.k()))?;
            emit_construction(ctx, &result, out.as_ref())
        }
        ConstructCommand::FromCode {
            function,
            t,
            code,
            out,
        } => {
            let f = parse_function(&function, ctx.max_k)?;
            let words = parse_word_list(&code)?;
            let code = IrregularCode::new(words, Some(f.k()))?;
            let verified = build_encoder_from_code(&f, t, &code)?;
            let result = ConstructionResult {
                encoder: verified.encoder,
                report: verified.report,
            };
            emit_construction(ctx, &result, out.as_ref())
        }
    }
}

fn run_verify(ctx: &Ctx, args: VerifyArgs) -> Result<u8, Error> {
    match (&args.encoder, &args.matrix) {
        (Some(path), None) => {
            let spec = args
                .function
                .as_ref()
                .ok_or_else(|| Error::Precondition("--encoder requires --function".into()))?;
            let f = parse_function(spec, ctx.max_k)?;
            let value: serde_json::Value = serde_json::from_str(&fs::read_to_string(path)?)?;
            let enc = FcidcEncoder::from_json(&value, f)?;
            let mut reports: Vec<VerificationReport> = Vec::new();
            if matches!(args.method, MethodArg::Distance | MethodArg::All) {
                reports.push(verify_by_distance(&enc)?);
            }
            if matches!(args.method, MethodArg::Del | MethodArg::All) {
                reports.push(verify_by_deletion_sets(&enc, enc.t())?);
            }
            if matches!(args.method, MethodArg::Ins | MethodArg::All) {
                reports.push(verify_by_insertion_sets(&enc, enc.t())?);
            }
            let all_pass = reports.iter().all(VerificationReport::passed);
            for report in &reports {
                let human = match &report.counterexample {
                    Some(ce) => format!(
                        "{}: {}  ({ce})",
                        report.method.label(),
                        if report.passed() { "pass" } else { "fail" }
                    ),
                    None => format!(
                        "{}: {}",
                        report.method.label(),
                        if report.passed() { "pass" } else { "fail" }
                    ),
                };
                ctx.emit(report.to_json(), human);
            }
            Ok(if all_pass { 0 } else { 1 })
        }
        (None, Some(path)) => {
            let words = parse_word_list(
                args.words
                    .as_ref()
                    .ok_or_else(|| Error::Precondition("--matrix requires --words".into()))?,
            )?;
            let matrix = load_matrix(path)?;
            let outcome = verify_code(&words, &matrix, None)?;
            match outcome {
                VerifyOutcome::Satisfied => {
                    ctx.emit(
                        json!({"verdict": "pass"}),
                        "assignment satisfies the matrix".into(),
                    );
                    Ok(0)
                }
                VerifyOutcome::Violated {
                    i,
                    j,
                    required,
                    actual,
                } => {
                    ctx.emit(
                        json!({"verdict": "fail", "pair": [i, j], "required": required, "actual": actual}),
                        format!("violated at pair ({i}, {j}): distance {actual} < required {required}"),
                    );
                    Ok(1)
                }
            }
        }
        _ => Err(Error::Precondition(
            "verify needs exactly one of --encoder (with --function) or --matrix (with --words)"
                .into(),
        )),
    }
}
