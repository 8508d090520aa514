//! Command-line surface over the brauerlab library: configuration
//! algebras, mutations and the key schedule, diophantine queries, pattern
//! counting, and the configuration automaton. Every command prints a
//! stable plain-text form by default and a versioned JSON payload with
//! `--json`; identical inputs produce byte-identical outputs.

mod formats;

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use brauerlab::algebra::{self, BasisElement};
use brauerlab::automata;
use brauerlab::config::BrauerConfiguration;
use brauerlab::dioph::{self, DioProblem, Frobenius, NumericalSemigroup};
use brauerlab::gt;
use brauerlab::mutation::{self, PeriodOutcome, RconKind, Seed};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use formats::{bytes_to_bits, parse_hex_bytes, parse_hex_string, ConfigFile};

const SCHEMA: &str = "brauerlab/1";

#[derive(Debug)]
struct AppError(String);

impl fmt::Display for AppError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl<E: std::error::Error> From<E> for AppError {
    fn from(e: E) -> Self {
        AppError(e.to_string())
    }
}

type AppResult = Result<(), AppError>;

fn fail(msg: impl Into<String>) -> AppError {
    AppError(msg.into())
}

#[derive(Parser)]
#[command(
    name = "brauerlab",
    version,
    about = "Brauer configuration algebras, mutations, and their diophantine problems"
)]
struct Cli {
    /// Emit a versioned JSON payload instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Configuration algebras from JSON configuration files.
    #[command(subcommand)]
    Brauer(BrauerCmd),
    /// Mutation runs and orbit detection for AES-mode seeds.
    #[command(subcommand)]
    Mutate(MutateCmd),
    /// The AES-128 key schedule.
    #[command(subcommand)]
    Aes(AesCmd),
    /// Numerical semigroups and paired linear systems.
    #[command(subcommand)]
    Dioph(DiophCmd),
    /// Gelfand-Tsetlin patterns, hearts, and equations.
    #[command(subcommand)]
    Gt(GtCmd),
    /// The automaton attached to a configuration algebra.
    #[command(subcommand)]
    Nfa(NfaCmd),
}

#[derive(Subcommand)]
enum BrauerCmd {
    /// Build the quiver and report dimensions and grading.
    Build {
        config: PathBuf,
        /// Write the quiver in DOT format to this path.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Enumerate the path-class basis.
    Basis { config: PathBuf },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RconArg {
    Standard,
    Paper,
}

impl From<RconArg> for RconKind {
    fn from(a: RconArg) -> Self {
        match a {
            RconArg::Standard => RconKind::Standard,
            RconArg::Paper => RconKind::Paper,
        }
    }
}

#[derive(Subcommand)]
enum MutateCmd {
    /// Run mutation rounds on a 16-byte hex seed file.
    Run {
        /// File of whitespace-separated hex bytes, e.g. "AF C0 13 10 ...".
        #[arg(long)]
        seed: PathBuf,
        #[arg(long)]
        rounds: usize,
        #[arg(long, value_enum, default_value_t = RconArg::Standard)]
        rcon: RconArg,
    },
    /// Detect the orbit of a seed under repeated mutation.
    Period {
        #[arg(long)]
        seed: PathBuf,
        #[arg(long)]
        max: usize,
    },
}

#[derive(Subcommand)]
enum AesCmd {
    /// Expand a 128-bit key into its 44 schedule words.
    Schedule {
        /// 32 hex characters.
        #[arg(long)]
        key: String,
    },
}

#[derive(Subcommand)]
enum DiophCmd {
    /// Frobenius number of a generating set.
    Frobenius {
        #[arg(required = true)]
        gens: Vec<u64>,
    },
    /// All positive integers outside the monoid.
    Gaps {
        #[arg(required = true)]
        gens: Vec<u64>,
    },
    /// The minimal generating set.
    Irreducibles {
        #[arg(required = true)]
        gens: Vec<u64>,
    },
    /// Count nonnegative representations of a target.
    Denumerant {
        #[arg(long, value_delimiter = ',', required = true)]
        coins: Vec<u64>,
        #[arg(long)]
        target: u64,
    },
    /// Solve the paired system sum l_i = n1, sum k_i l_i = n2.
    Solve {
        #[arg(long)]
        n1: u64,
        #[arg(long)]
        n2: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<u64>,
        /// Per-variable lower bound, 0 or 1.
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u64).range(0..=1))]
        bound: u64,
        /// Print only the number of solutions.
        #[arg(long)]
        count: bool,
    },
    /// Read a hex message as a valency profile and its paired system.
    FromMessage { hex: String },
}

#[derive(Subcommand)]
enum GtCmd {
    /// Count patterns under a weakly decreasing top row.
    Count {
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        top: Vec<i64>,
        /// Prescribed content (row-sum differences), one entry per row.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        content: Option<Vec<i64>>,
    },
    /// The closed count (r+1)^C(n,2) for arithmetic top rows.
    Formula {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
    },
    /// Monotone triangle counts, total or refined by the apex.
    Monotone {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        refined: bool,
    },
    /// The heart poset of length-4 patterns with spacing r.
    Hearts {
        #[arg(long)]
        r: u64,
        /// List the cover relations.
        #[arg(long)]
        covers: bool,
    },
    /// Coefficients of the equation gt(n).
    Equation {
        #[arg(long)]
        n: u64,
        /// Also print the Frobenius number of the coefficients.
        #[arg(long)]
        frobenius: bool,
    },
    /// The uniform configuration on 2r+1 vertices.
    Config {
        #[arg(long)]
        r: u64,
        /// Print the quiver in DOT format.
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Subcommand)]
enum NfaCmd {
    /// Build the automaton and print its transition table.
    Build {
        config: PathBuf,
        /// Also print the automaton in DOT format.
        #[arg(long)]
        dot: bool,
    },
    /// Decide a comma-separated letter word, e.g. "l1_3,a0_1".
    Accept {
        config: PathBuf,
        #[arg(long)]
        word: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Brauer(cmd) => run_brauer(cmd, cli.json),
        Command::Mutate(cmd) => run_mutate(cmd, cli.json),
        Command::Aes(cmd) => run_aes(cmd, cli.json),
        Command::Dioph(cmd) => run_dioph(cmd, cli.json),
        Command::Gt(cmd) => run_gt(cmd, cli.json),
        Command::Nfa(cmd) => run_nfa(cmd, cli.json),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn load_config(path: &PathBuf) -> Result<BrauerConfiguration, AppError> {
    let text = fs::read_to_string(path)?;
    let file: ConfigFile = serde_json::from_str(&text)?;
    Ok(file.to_config()?)
}

fn load_seed(path: &PathBuf, rcon: RconKind) -> Result<Seed, AppError> {
    let text = fs::read_to_string(path)?;
    let bytes = parse_hex_bytes(&text).map_err(fail)?;
    if bytes.len() != 16 {
        return Err(fail(format!(
            "seed file must hold 16 hex bytes (AES mode), got {}",
            bytes.len()
        )));
    }
    Ok(Seed::aes(&bytes, rcon)?)
}

fn emit(json_mode: bool, payload: Value, plain: String) {
    if json_mode {
        println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
    } else {
        print!("{plain}");
    }
}

fn grading_str(g: Option<u64>) -> String {
    g.map(|n| n.to_string()).unwrap_or_else(|| "none".to_string())
}

fn run_brauer(cmd: BrauerCmd, json_mode: bool) -> AppResult {
    match cmd {
        BrauerCmd::Build { config, dot } => {
            let cfg = load_config(&config)?;
            let summary = algebra::summary(&cfg)?;
            let (quiver, _) = algebra::build_quiver(&cfg)?;
            if let Some(path) = &dot {
                fs::write(path, algebra::quiver_dot(&quiver))?;
            }
            let mut plain = String::new();
            plain.push_str(&format!("polygons: {}\n", summary.node_count));
            plain.push_str(&format!("vertices: {}\n", cfg.vertex_count()));
            plain.push_str(&format!("arrows: {}\n", summary.arrow_count));
            plain.push_str(&format!("loops: {}\n", summary.loop_count));
            plain.push_str(&format!("dimension: {}\n", summary.dim));
            match summary.center_dim {
                Some(c) => plain.push_str(&format!("center-dimension: {c}\n")),
                None => plain.push_str("center-dimension: undefined (disconnected)\n"),
            }
            plain.push_str(&format!("length-grading: {}\n", grading_str(summary.graded)));
            let payload = json!({
                "schema": SCHEMA,
                "polygons": summary.node_count,
                "vertices": cfg.vertex_count(),
                "arrows": summary.arrow_count,
                "loops": summary.loop_count,
                "dimension": summary.dim,
                "center_dimension": summary.center_dim,
                "length_grading": summary.graded,
            });
            emit(json_mode, payload, plain);
            Ok(())
        }
        BrauerCmd::Basis { config } => {
            let cfg = load_config(&config)?;
            let (quiver, _) = algebra::build_quiver(&cfg)?;
            let basis = algebra::enumerate_basis(&cfg)?;
            let label = |arrows: &[usize]| {
                arrows
                    .iter()
                    .map(|&a| quiver.arrows[a].label.clone())
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            let mut lines = Vec::new();
            for b in &basis {
                lines.push(match b {
                    BasisElement::Idempotent { polygon } => {
                        format!("idempotent P{}", polygon + 1)
                    }
                    BasisElement::Path { arrows } => format!("path {}", label(arrows)),
                    BasisElement::FullCycle { polygon, representative } => {
                        format!("cycle P{} {}", polygon + 1, label(representative))
                    }
                });
            }
            let plain = format!("{}\ncount: {}\n", lines.join("\n"), basis.len());
            let payload = json!({
                "schema": SCHEMA,
                "basis": lines,
                "count": basis.len(),
            });
            emit(json_mode, payload, plain);
            Ok(())
        }
    }
}

fn cluster_hex_words(c: &mutation::Cluster) -> Vec<String> {
    (0..4)
        .map(|w| format!("{:08x}", c.word_u32(w).expect("AES words")))
        .collect()
}

fn run_mutate(cmd: MutateCmd, json_mode: bool) -> AppResult {
    match cmd {
        MutateCmd::Run { seed, rounds, rcon } => {
            let seed = load_seed(&seed, rcon.into())?;
            let clusters = seed.clusters(rounds)?;
            let cfg = mutation::cluster_configuration(&seed, rounds)?;
            let summary = algebra::summary(&cfg)?;
            let mut plain = String::new();
            let mut rounds_json = Vec::new();
            for c in &clusters {
                let words = cluster_hex_words(c);
                plain.push_str(&format!("round {}: {}\n", c.index, words.join(" ")));
                rounds_json.push(json!({"round": c.index, "words": words}));
            }
            plain.push_str(&format!(
                "cluster configuration: {} polygons over {{0, 1}}\n",
                cfg.polygon_count()
            ));
            plain.push_str(&format!("reduced: {}\n", cfg.is_reduced()));
            plain.push_str(&format!("connected: {}\n", cfg.is_connected()));
            plain.push_str(&format!("dimension: {}\n", summary.dim));
            match summary.center_dim {
                Some(c) => plain.push_str(&format!("center-dimension: {c}\n")),
                None => plain.push_str("center-dimension: undefined (disconnected)\n"),
            }
            let payload = json!({
                "schema": SCHEMA,
                "rounds": rounds_json,
                "polygons": cfg.polygon_count(),
                "reduced": cfg.is_reduced(),
                "connected": cfg.is_connected(),
                "dimension": summary.dim,
                "center_dimension": summary.center_dim,
                "configuration": ConfigFile::from_config(&cfg),
            });
            emit(json_mode, payload, plain);
            Ok(())
        }
        MutateCmd::Period { seed, max } => {
            let seed = load_seed(&seed, RconKind::Standard)?;
            let outcome = mutation::detect_period(&seed, max)?;
            let (plain, payload) = match outcome {
                PeriodOutcome::Closed(r) => (
                    format!(
                        "preperiod: {}\nperiod: {}\nstates-visited: {}\n",
                        r.preperiod, r.period, r.states_visited
                    ),
                    json!({
                        "schema": SCHEMA,
                        "outcome": "closed",
                        "preperiod": r.preperiod,
                        "period": r.period,
                        "states_visited": r.states_visited,
                    }),
                ),
                PeriodOutcome::Undetermined { steps_taken, reason } => {
                    let reason = match reason {
                        mutation::UndeterminedReason::BudgetExhausted => "budget exhausted",
                        mutation::UndeterminedReason::ShiftScheduleExhausted => {
                            "shift schedule exhausted"
                        }
                    };
                    (
                        format!("undetermined after {steps_taken} steps: {reason}\n"),
                        json!({
                            "schema": SCHEMA,
                            "outcome": "undetermined",
                            "steps_taken": steps_taken,
                            "reason": reason,
                        }),
                    )
                }
            };
            emit(json_mode, payload, plain);
            Ok(())
        }
    }
}

fn run_aes(cmd: AesCmd, json_mode: bool) -> AppResult {
    match cmd {
        AesCmd::Schedule { key } => {
            let bytes = parse_hex_string(&key).map_err(fail)?;
            if bytes.len() != 16 {
                return Err(fail(format!(
                    "key must be 32 hex chars, got {}",
                    bytes.len() * 2
                )));
            }
            let words = mutation::aes_key_schedule(&bytes)?;
            let hex: Vec<String> = words.iter().map(|w| format!("{w:08x}")).collect();
            let plain = hex.join("\n") + "\n";
            let payload = json!({"schema": SCHEMA, "words": hex});
            emit(json_mode, payload, plain);
            Ok(())
        }
    }
}

fn frobenius_json(f: Frobenius) -> Value {
    match f {
        Frobenius::Finite(n) => json!(n),
        Frobenius::Infinite => json!("infinity"),
    }
}

fn run_dioph(cmd: DiophCmd, json_mode: bool) -> AppResult {
    match cmd {
        DiophCmd::Frobenius { gens } => {
            let f = NumericalSemigroup::new(&gens)?.frobenius();
            emit(
                json_mode,
                json!({"schema": SCHEMA, "generators": gens, "frobenius": frobenius_json(f)}),
                format!("{f}\n"),
            );
            Ok(())
        }
        DiophCmd::Gaps { gens } => {
            let gaps = NumericalSemigroup::new(&gens)?.gaps()?;
            let plain = gaps
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join("\n");
            emit(
                json_mode,
                json!({"schema": SCHEMA, "generators": gens, "gaps": gaps}),
                if plain.is_empty() { String::new() } else { plain + "\n" },
            );
            Ok(())
        }
        DiophCmd::Irreducibles { gens } => {
            let irr = NumericalSemigroup::new(&gens)?.irreducibles();
            let plain = irr
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            emit(
                json_mode,
                json!({"schema": SCHEMA, "generators": gens, "irreducibles": irr}),
                plain + "\n",
            );
            Ok(())
        }
        DiophCmd::Denumerant { coins, target } => {
            let count = dioph::denumerant(&coins, target)?;
            emit(
                json_mode,
                json!({
                    "schema": SCHEMA,
                    "coins": coins,
                    "target": target,
                    "count": count.to_string(),
                }),
                format!("{count}\n"),
            );
            Ok(())
        }
        DiophCmd::Solve { n1, n2, k, bound, count } => {
            let problem = DioProblem::new(n1, n2, k.clone(), bound);
            if count {
                let c = problem.count_solutions();
                emit(
                    json_mode,
                    json!({
                        "schema": SCHEMA,
                        "n1": n1, "n2": n2, "k": k, "bound": bound,
                        "count": c.to_string(),
                    }),
                    format!("{c}\n"),
                );
            } else {
                let sols = problem.solve();
                let lines: Vec<String> = sols.iter().map(|s| s.to_string()).collect();
                let plain = if lines.is_empty() {
                    String::new()
                } else {
                    lines.join("\n") + "\n"
                };
                emit(
                    json_mode,
                    json!({
                        "schema": SCHEMA,
                        "n1": n1, "n2": n2, "k": k, "bound": bound,
                        "solutions": sols.iter().map(|s| s.lambdas.clone()).collect::<Vec<_>>(),
                    }),
                    plain,
                );
            }
            Ok(())
        }
        DiophCmd::FromMessage { hex } => {
            let bytes = parse_hex_string(&hex).map_err(fail)?;
            let bits = bytes_to_bits(&bytes);
            let (profile, problem, sol) = dioph::message_to_diophantine(&bits)?;
            let k_str = problem
                .k
                .iter()
                .map(|k| k.to_string())
                .collect::<Vec<_>>()
                .join(",");
            let plain = format!(
                "profile: {profile}\nproblem: D({}, {}, {{{}}})\nlambda: {sol}\n",
                problem.n1, problem.n2, k_str
            );
            let payload = json!({
                "schema": SCHEMA,
                "profile": profile.to_string(),
                "classes": profile.classes.iter().map(|c| json!({
                    "valency": c.valency,
                    "symbols": c.symbols,
                    "size": c.size,
                })).collect::<Vec<_>>(),
                "n1": problem.n1,
                "n2": problem.n2,
                "k": problem.k,
                "lambda": sol.lambdas,
            });
            emit(json_mode, payload, plain);
            Ok(())
        }
    }
}

fn run_gt(cmd: GtCmd, json_mode: bool) -> AppResult {
    match cmd {
        GtCmd::Count { top, content } => {
            let spec = match content {
                Some(mu) => gt::GtWeightSpec::with_content(top.clone(), mu)?,
                None => gt::GtWeightSpec::new(top.clone())?,
            };
            let count = gt::enumerate_patterns_count(&spec)?;
            emit(
                json_mode,
                json!({"schema": SCHEMA, "top": top, "count": count.to_string()}),
                format!("{count}\n"),
            );
            Ok(())
        }
        GtCmd::Formula { n, r } => {
            let count = gt::gt_count_formula(n, r);
            emit(
                json_mode,
                json!({"schema": SCHEMA, "n": n, "r": r, "count": count.to_string()}),
                format!("{count}\n"),
            );
            Ok(())
        }
        GtCmd::Monotone { n, refined } => {
            if n == 0 {
                return Err(fail("n must be positive"));
            }
            // Brute force stays affordable through n = 7; the closed form
            // covers the rest.
            let brute_ok = n <= 7;
            if refined {
                let closed: Vec<String> = (1..=n)
                    .map(|r| gt::asm_refined(n, r).map(|c| c.to_string()))
                    .collect::<Result<_, _>>()?;
                let brute: Option<Vec<u64>> =
                    brute_ok.then(|| gt::monotone_refined_brute(n as usize));
                let mut plain = format!("closed-form: {}\n", closed.join(" "));
                match &brute {
                    Some(b) => plain.push_str(&format!(
                        "brute-force: {}\n",
                        b.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
                    )),
                    None => plain.push_str("brute-force: skipped (n > 7)\n"),
                }
                emit(
                    json_mode,
                    json!({"schema": SCHEMA, "n": n, "refined": closed, "brute": brute}),
                    plain,
                );
            } else {
                let closed = gt::asm_number(n);
                let brute = brute_ok.then(|| gt::monotone_triangles(n as usize).len());
                let mut plain = format!("closed-form: {closed}\n");
                match brute {
                    Some(b) => plain.push_str(&format!("brute-force: {b}\n")),
                    None => plain.push_str("brute-force: skipped (n > 7)\n"),
                }
                emit(
                    json_mode,
                    json!({"schema": SCHEMA, "n": n, "total": closed.to_string(), "brute": brute}),
                    plain,
                );
            }
            Ok(())
        }
        GtCmd::Hearts { r, covers } => {
            let poset = gt::heart_poset(r)?;
            let count = gt::cover_count(&poset);
            let mut plain = format!(
                "elements: {}\ncovers: {}\nformula: {}\n",
                poset.elements.len(),
                count,
                gt::heart_cover_formula(r)
            );
            if covers {
                for &(lo, hi) in &poset.covers {
                    let a = &poset.elements[lo];
                    let b = &poset.elements[hi];
                    plain.push_str(&format!(
                        "{},{},{} -> {},{},{}\n",
                        a.x, a.y, a.z, b.x, b.y, b.z
                    ));
                }
            }
            let payload = json!({
                "schema": SCHEMA,
                "r": r,
                "elements": poset.elements.len(),
                "covers": count,
                "formula": gt::heart_cover_formula(r),
                "cover_list": covers.then(|| poset
                    .covers
                    .iter()
                    .map(|&(lo, hi)| {
                        let a = &poset.elements[lo];
                        let b = &poset.elements[hi];
                        json!([[a.x, a.y, a.z], [b.x, b.y, b.z]])
                    })
                    .collect::<Vec<_>>()),
            });
            emit(json_mode, payload, plain);
            Ok(())
        }
        GtCmd::Equation { n, frobenius } => {
            let coeffs = gt::gt_equation(n)?;
            let coeff_str = coeffs
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            let f = frobenius.then(|| gt::gt_frobenius(n)).transpose()?;
            let plain = match f {
                Some(f) => format!("{coeff_str} / {f}\n"),
                None => format!("{coeff_str}\n"),
            };
            let payload = json!({
                "schema": SCHEMA,
                "n": n,
                "coefficients": coeffs,
                "frobenius": f.map(frobenius_json),
            });
            emit(json_mode, payload, plain);
            Ok(())
        }
        GtCmd::Config { r, dot } => {
            let cfg = gt::build_gt_configuration(r)?;
            let summary = algebra::summary(&cfg)?;
            let mut plain = format!(
                "vertices: {}\npolygons: {}\ndimension: {}\nlength-grading: {}\n",
                cfg.vertex_count(),
                cfg.polygon_count(),
                summary.dim,
                grading_str(summary.graded)
            );
            if dot {
                let (quiver, _) = algebra::build_quiver(&cfg)?;
                plain.push_str(&algebra::quiver_dot(&quiver));
            }
            let payload = json!({
                "schema": SCHEMA,
                "r": r,
                "vertices": cfg.vertex_count(),
                "polygons": cfg.polygon_count(),
                "dimension": summary.dim,
                "length_grading": summary.graded,
                "configuration": ConfigFile::from_config(&cfg),
            });
            emit(json_mode, payload, plain);
            Ok(())
        }
    }
}

fn run_nfa(cmd: NfaCmd, json_mode: bool) -> AppResult {
    match cmd {
        NfaCmd::Build { config, dot } => {
            let cfg = load_config(&config)?;
            let (quiver, _) = algebra::build_quiver(&cfg)?;
            let nfa = automata::build_nfa(&cfg, &quiver)?;
            let mut plain = automata::transition_table(&nfa);
            if dot {
                plain.push_str(&automata::export_dot(&nfa));
            }
            let payload = json!({
                "schema": SCHEMA,
                "states": nfa.state_count(),
                "alphabet": nfa.alphabet(),
                "initial": nfa.initial().iter().collect::<Vec<_>>(),
                "accepting": nfa.accepting().iter().collect::<Vec<_>>(),
                "transitions": nfa
                    .edges()
                    .iter()
                    .enumerate()
                    .map(|(l, &(s, t))| json!([s, nfa.alphabet()[l], t]))
                    .collect::<Vec<_>>(),
            });
            emit(json_mode, payload, plain);
            Ok(())
        }
        NfaCmd::Accept { config, word } => {
            let cfg = load_config(&config)?;
            let (quiver, _) = algebra::build_quiver(&cfg)?;
            let nfa = automata::build_nfa(&cfg, &quiver)?;
            let generators = algebra::ideal_generators(&cfg)?;
            let letters = nfa.word_from_names(&word)?;
            let accepted = automata::accepts(&nfa, &generators, &letters)?;
            let plain = if accepted { "accepted\n" } else { "rejected\n" };
            emit(
                json_mode,
                json!({"schema": SCHEMA, "word": word, "accepted": accepted}),
                plain.to_string(),
            );
            Ok(())
        }
    }
}
