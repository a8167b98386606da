//! `simgap` command-line front end.
//!
//! Exit codes: 0 when a question was decided, 1 on an internal invariant
//! failure, 2 on bad input or usage, 3 when a scale cap was hit.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use simgap::automata::{alpha_map, intersection_nonempty, minimize, Dfa};
use simgap::bench::{bench_scaling, Family};
use simgap::format::{parse_dfa, parse_lts, write_dfa, write_lts, write_partition};
use simgap::pipeline::{
    decide_nei, nei_via_product, sat_via_simulation, NeiPath, DEFAULT_GADGET_VAR_CAP,
};
use simgap::report::{bits, Document};
use simgap::sat::{build_split_dfa, parse_dimacs, Half};
use simgap::sim::{bisimulation_partition, sim_equivalent, simulates};
use simgap::{Error, Lts};

/// Environment variable overriding the variable cap for `sat`.
const CAP_ENV: &str = "SIMGAP_ORACLE_CAP";

#[derive(Parser)]
#[command(
    name = "simgap",
    version,
    about = "DFA intersection, similarity and bisimulation tools"
)]
struct Cli {
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum NeiPathArg {
    Product,
    Sim,
    Simeq,
}

impl From<NeiPathArg> for NeiPath {
    fn from(arg: NeiPathArg) -> Self {
        match arg {
            NeiPathArg::Product => NeiPath::Product,
            NeiPathArg::Sim => NeiPath::Similarity,
            NeiPathArg::Simeq => NeiPath::SimEquivalence,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SatPathArg {
    Sim,
    Simeq,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    RandomLts,
    Gadget,
}

#[derive(Subcommand)]
enum Command {
    /// Is the intersection of two DFA languages non-empty?
    Nei {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_enum, default_value = "sim")]
        path: NeiPathArg,
    },
    /// Satisfiability of a DIMACS CNF formula through the split automata.
    Sat {
        formula: PathBuf,
        #[arg(long, value_enum, default_value = "sim")]
        path: SatPathArg,
    },
    /// Is L(a) contained in L(b)?
    Inclusion { a: PathBuf, b: PathBuf },
    /// Is the initial state of m1 simulated by the initial state of m2?
    Simulate { m1: PathBuf, m2: PathBuf },
    /// Are states s and t of m simulation equivalent?
    Simeq { m: PathBuf, s: usize, t: usize },
    /// Bisimulation classes of m, one block per line.
    Bisim { m: PathBuf },
    /// The LTS embedding of a DFA.
    Alpha { a: PathBuf },
    /// The canonical minimal DFA.
    Minimize { a: PathBuf },
    /// One of the two split automata of a CNF formula.
    Gadget {
        formula: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        half: u8,
    },
    /// Time similarity against bisimulation on growing instances.
    Bench {
        #[arg(long, value_enum, default_value = "random-lts")]
        family: FamilyArg,
        #[arg(long, value_delimiter = ',', default_values_t = [2000usize, 4000, 8000, 16000])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

/// What a command prints: free text, or a document in `--json` mode.
struct Outcome {
    text: String,
    document: Document,
    json_override: Option<String>,
}

impl Outcome {
    fn new(text: String, document: Document) -> Self {
        Outcome {
            text,
            document,
            json_override: None,
        }
    }
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path)
        .map_err(|e| Error::Malformed(format!("cannot read {}: {e}", path.display())))
}

fn load_dfa(path: &Path) -> Result<Dfa, Error> {
    parse_dfa(&read(path)?).map_err(|e| in_file(path, e))
}

fn load_lts(path: &Path) -> Result<Lts, Error> {
    parse_lts(&read(path)?).map_err(|e| in_file(path, e))
}

fn in_file(path: &Path, err: Error) -> Error {
    match err {
        Error::Parse { line, message } => Error::Parse {
            line,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    }
}

fn var_cap() -> Result<usize, Error> {
    match std::env::var(CAP_ENV) {
        Ok(value) => value
            .parse()
            .map_err(|_| Error::Malformed(format!("{CAP_ENV} must be a count, got `{value}`"))),
        Err(_) => Ok(DEFAULT_GADGET_VAR_CAP),
    }
}

fn run(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Nei { a, b, path } => {
            let (a, b) = (load_dfa(&a)?, load_dfa(&b)?);
            let path = NeiPath::from(path);
            let started = std::time::Instant::now();
            let (verdict, witness) = if path == NeiPath::Product {
                let out = nei_via_product(&a, &b)?;
                (out.verdict, out.witness)
            } else {
                (decide_nei(&a, &b, path)?, None)
            };
            let elapsed = started.elapsed().as_secs_f64();
            let mut text = format!("{verdict}\n");
            let mut doc = Document::new("nei");
            doc.path = Some(path.to_string());
            doc.verdict = Some(verdict.to_string());
            if let Some(w) = witness {
                text.push_str(&format!("witness: {w}\n"));
                doc.witness = Some(w.to_string());
            }
            doc.sizes.insert("a_states".into(), a.num_states() as u64);
            doc.sizes.insert("b_states".into(), b.num_states() as u64);
            doc.timings.insert("decide".into(), elapsed);
            Ok(Outcome::new(text, doc))
        }
        Command::Sat { formula, path } => {
            let f = parse_dimacs(&read(&formula)?).map_err(|e| in_file(&formula, e))?;
            let path = match path {
                SatPathArg::Sim => NeiPath::Similarity,
                SatPathArg::Simeq => NeiPath::SimEquivalence,
            };
            let out = sat_via_simulation(&f, path, var_cap()?)?;
            let mut text = format!("{}\n", out.verdict);
            let mut doc = Document::new("sat");
            doc.path = Some(path.to_string());
            doc.verdict = Some(out.verdict.to_string());
            if let (Some(assignment), Some(word)) = (&out.assignment, &out.witness) {
                let word = word.to_string();
                let (head, tail) = word.split_at(f.num_vars());
                let witness = format!("{head}|{tail}");
                text.push_str(&format!(
                    "assignment: {}\nwitness: {witness}\n",
                    bits(assignment)
                ));
                doc.assignment = Some(bits(assignment));
                doc.witness = Some(witness);
            }
            if f.was_padded() {
                text.push_str("note: odd variable count padded with one unused variable\n");
            }
            doc.sizes.insert("variables".into(), f.num_vars() as u64);
            doc.sizes.insert("clauses".into(), f.num_clauses() as u64);
            doc.sizes
                .insert("first_states".into(), out.first_states as u64);
            doc.sizes
                .insert("second_states".into(), out.second_states as u64);
            doc.timings
                .insert("build".into(), out.build_time.as_secs_f64());
            doc.timings
                .insert("decide".into(), out.decide_time.as_secs_f64());
            Ok(Outcome::new(text, doc))
        }
        Command::Inclusion { a, b } => {
            let (a, b) = (load_dfa(&a)?, load_dfa(&b)?);
            let counterexample = intersection_nonempty(&[a.clone(), b.complement()])?;
            let mut doc = Document::new("inclusion");
            doc.path = Some("product".into());
            let verdict = if counterexample.is_none() {
                "INCLUDED"
            } else {
                "NOT INCLUDED"
            };
            doc.verdict = Some(verdict.into());
            let mut text = format!("{verdict}\n");
            if let Some(w) = counterexample {
                text.push_str(&format!("counterexample: {w}\n"));
                doc.witness = Some(w.to_string());
            }
            doc.sizes.insert("a_states".into(), a.num_states() as u64);
            doc.sizes.insert("b_states".into(), b.num_states() as u64);
            Ok(Outcome::new(text, doc))
        }
        Command::Simulate { m1, m2 } => {
            let (m1, m2) = (load_lts(&m1)?, load_lts(&m2)?);
            let verdict = if simulates(&m1, &m2) {
                "SIMULATED"
            } else {
                "NOT SIMULATED"
            };
            let mut doc = Document::new("simulate");
            doc.verdict = Some(verdict.into());
            doc.sizes
                .insert("states".into(), (m1.num_states() + m2.num_states()) as u64);
            Ok(Outcome::new(format!("{verdict}\n"), doc))
        }
        Command::Simeq { m, s, t } => {
            let lts = load_lts(&m)?;
            let verdict = if sim_equivalent(&lts, s, t)? {
                "EQUIVALENT"
            } else {
                "NOT EQUIVALENT"
            };
            let mut doc = Document::new("simeq");
            doc.verdict = Some(verdict.into());
            doc.sizes.insert("states".into(), lts.num_states() as u64);
            Ok(Outcome::new(format!("{verdict}\n"), doc))
        }
        Command::Bisim { m } => {
            let lts = load_lts(&m)?;
            let partition = bisimulation_partition(&lts);
            let text = write_partition(&partition);
            let mut doc = Document::new("bisim");
            doc.sizes.insert("states".into(), lts.num_states() as u64);
            doc.sizes
                .insert("blocks".into(), partition.num_blocks() as u64);
            doc.output = Some(text.clone());
            Ok(Outcome::new(text, doc))
        }
        Command::Alpha { a } => {
            let lts = alpha_map(&load_dfa(&a)?);
            let text = write_lts(&lts);
            let mut doc = Document::new("alpha");
            doc.sizes.insert("states".into(), lts.num_states() as u64);
            doc.sizes
                .insert("transitions".into(), lts.num_transitions() as u64);
            doc.output = Some(text.clone());
            Ok(Outcome::new(text, doc))
        }
        Command::Minimize { a } => {
            let dfa = load_dfa(&a)?;
            let min = minimize(&dfa);
            let text = write_dfa(&min);
            let mut doc = Document::new("minimize");
            doc.sizes
                .insert("input_states".into(), dfa.num_states() as u64);
            doc.sizes.insert("states".into(), min.num_states() as u64);
            doc.output = Some(text.clone());
            Ok(Outcome::new(text, doc))
        }
        Command::Gadget { formula, half } => {
            let f = parse_dimacs(&read(&formula)?).map_err(|e| in_file(&formula, e))?;
            let cap = var_cap()?;
            if f.num_vars() > cap {
                return Err(Error::ScaleCap {
                    what: "variables",
                    actual: f.num_vars() as u128,
                    cap: cap as u128,
                });
            }
            let half = if half == 1 { Half::First } else { Half::Second };
            let dfa = build_split_dfa(&f, half);
            let text = write_dfa(&dfa);
            let mut doc = Document::new("gadget");
            doc.sizes.insert("states".into(), dfa.num_states() as u64);
            doc.output = Some(text.clone());
            Ok(Outcome::new(text, doc))
        }
        Command::Bench {
            family,
            sizes,
            reps,
            seed,
        } => {
            let family = match family {
                FamilyArg::RandomLts => Family::RandomLts,
                FamilyArg::Gadget => Family::Gadget,
            };
            let report = bench_scaling(family, &sizes, reps, seed)?;
            Ok(Outcome {
                text: report.to_string(),
                document: report.document.clone(),
                json_override: Some(report.to_json()),
            })
        }
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::ScaleCap { .. } => 3,
        Error::Contract(_) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(outcome) => {
            if cli.json {
                match outcome.json_override {
                    Some(json) => println!("{json}"),
                    None => println!("{}", outcome.document.to_json()),
                }
            } else {
                print!("{}", outcome.text);
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
