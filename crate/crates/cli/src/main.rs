use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;
use twuality::binary::{from_matrix, intersection_graph};
use twuality::format::{parse_chord_diagram, parse_matrix, parse_set_system, write_set_system};
use twuality::oracle::{
    counterexample_search, delta_matroids, enumerate_proper_set_systems, enumerate_signed_chord_diagrams,
    vf_safe_delta_matroids, EnumerationBudget,
};
use twuality::poly::{polynomial_of, DEFAULT_ENUMERATION_CAP};
use twuality::types::classify;
use twuality::{RWord, SetSystem, TwualWord, WidthPolynomial};

const ALIASES: &str = "\
Word alphabets (ASCII alias = symbol):
  *  = ∗  twist              d  = δ  partial dual
  x  = ×  loop complement    t  = τ  partial Petrial
Words apply left to right, e.g. `*x` twists, then loop-complements.

Property ids for `check` spell `*` as `s`: gap-le-1, table1,
  interpolating-{s,x,sx,xs,sxs}, log-concave-{id,s,x,sx,xs,sxs},
  monomial-{x,sxs}, genus-width, petrial-loop-complement,
  interleavement-graph, graph-determines-polynomial.

Exit codes: 0 success / no witness, 1 witness found, 2 usage or input error.
TWUALITY_MAX_N overrides the polynomial enumeration cap (default 16).";

/// Partial-twuality polynomials of set systems, delta-matroids and bouquets.
#[derive(Parser, Debug)]
#[command(name = "twuality", version, about, after_help = ALIASES)]
struct Cli {
    /// Worker threads for subset sweeps (results do not depend on this).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Input {
    /// Input file; standard input when omitted.
    #[arg(long, short)]
    input: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Size, predicates, width statistics and delta-matroid verdicts of a `.ss` file.
    Info(Input),
    /// Partial-twuality polynomial of a `.ss` file (`--word`) or `.cd` file (`--ribbon-word`).
    Poly {
        #[command(flatten)]
        input: Input,
        /// Word over `*`/`x`.
        #[arg(long, conflicts_with = "ribbon_word", required_unless_present = "ribbon_word")]
        word: Option<String>,
        /// Word over `d`/`t`; the input is then a chord diagram.
        #[arg(long)]
        ribbon_word: Option<String>,
        /// Print `width,count` rows instead of the polynomial.
        #[arg(long)]
        csv: bool,
    },
    /// `<name>: <primal><dual>` for every element of a `.ss` file.
    Types(Input),
    /// Search for a counterexample to a registered property.
    Check {
        #[arg(long)]
        property: String,
        /// Largest exhaustive ground set (or chord count for bouquet properties).
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Seeded samples drawn one size beyond `--n`.
        #[arg(long, default_value_t = 0)]
        samples: usize,
        /// Required whenever `--samples` is positive.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// The delta-matroid of non-singular principal submatrices of a `.gf2` file.
    FromMatrix(Input),
    /// The delta-matroid of a `.cd` chord diagram.
    FromBouquet(Input),
    /// Intersection graph of a normal binary delta-matroid given as `.ss`.
    IntersectionGraph(Input),
    /// Print every instance of a kind and size, in canonical order.
    Enumerate {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    /// Delta-matroids.
    Dm,
    /// vf-safe delta-matroids.
    Vf,
    /// Nonempty set systems.
    Ss,
    /// Signed chord diagrams.
    Cd,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Input { path: String, source: twuality::Error },
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error(transparent)]
    Core(#[from] twuality::Error),
}

fn read_input(input: &Input) -> Result<(String, String), CliError> {
    match &input.input {
        Some(path) => {
            let name = path.display().to_string();
            fs::read_to_string(path)
                .map(|text| (name.clone(), text))
                .map_err(|source| CliError::Io { path: name, source })
        }
        None => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text).map_err(|source| CliError::Io {
                path: "<stdin>".into(),
                source,
            })?;
            Ok(("<stdin>".into(), text))
        }
    }
}

fn parse_with<T>(input: &Input, parse: fn(&str) -> twuality::Result<T>) -> Result<T, CliError> {
    let (path, text) = read_input(input)?;
    parse(&text).map_err(|source| CliError::Input { path, source })
}

fn enumeration_cap() -> Result<usize, CliError> {
    match std::env::var("TWUALITY_MAX_N") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("TWUALITY_MAX_N must be a non-negative integer, found `{v}`"))),
        Err(_) => Ok(DEFAULT_ENUMERATION_CAP),
    }
}

fn render_poly(p: &WidthPolynomial, csv: bool) -> String {
    if csv {
        p.to_csv()
    } else {
        format!("{p}\n")
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn info(d: &SetSystem) -> String {
    let p = d.predicates();
    let mut out = format!(
        "ground size: {}\nfeasible sets: {}\nproper: {}\nnormal: {}\ndual normal: {}\n",
        d.n(),
        d.family().len(),
        yes_no(p.proper),
        yes_no(p.normal),
        yes_no(p.dual_normal)
    );
    match d.width_stats() {
        Ok(s) => out.push_str(&format!("r_min: {}\nr_max: {}\nwidth: {}\n", s.r_min, s.r_max, s.width)),
        Err(_) => out.push_str("width: undefined (improper)\n"),
    }
    let dm = d.is_delta_matroid();
    out.push_str(&format!(
        "delta-matroid: {}\nvf-safe: {}\n",
        yes_no(dm),
        yes_no(dm && d.is_vf_safe())
    ));
    out
}

/// Returns the text to print and the exit code.
fn run(cli: Cli) -> Result<(String, u8), CliError> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let out = match cli.command {
        Command::Info(input) => info(&parse_with(&input, parse_set_system)?),
        Command::Poly {
            input,
            word,
            ribbon_word,
            csv,
        } => {
            let cap = enumeration_cap()?;
            let p = match (word, ribbon_word) {
                (Some(w), _) => {
                    let w: TwualWord = w.parse()?;
                    polynomial_of(&parse_with(&input, parse_set_system)?, w.reduce(), cap)?
                }
                (None, Some(r)) => {
                    let r: RWord = r.parse()?;
                    let b = parse_with(&input, parse_chord_diagram)?;
                    let d = b.delta_matroid_capped(cap)?;
                    polynomial_of(&d, twuality::bouquet::eta(&r).reduce(), cap)?
                }
                (None, None) => unreachable!("clap requires one word flag"),
            };
            render_poly(&p, csv)
        }
        Command::Types(input) => {
            let d = parse_with(&input, parse_set_system)?;
            let mut out = String::new();
            for e in d.ground().elements() {
                out.push_str(&format!("{}: {}\n", e.name, classify(&d, e.index)?));
            }
            out
        }
        Command::Check {
            property,
            n,
            samples,
            seed,
        } => {
            if samples > 0 && seed.is_none() {
                return Err(CliError::Usage("--samples requires --seed".into()));
            }
            let budget = EnumerationBudget {
                max_ground_size: n,
                max_chords: n,
                sample_count: samples,
                seed: seed.unwrap_or(0),
            };
            return Ok(match counterexample_search(&property, &budget)? {
                Some(witness) => (witness.to_string(), 1),
                None => (format!("no witness for {property} within the budget\n"), 0),
            });
        }
        Command::FromMatrix(input) => write_set_system(&from_matrix(&parse_with(&input, parse_matrix)?)),
        Command::FromBouquet(input) => {
            let b = parse_with(&input, parse_chord_diagram)?;
            write_set_system(&b.delta_matroid_capped(enumeration_cap()?)?)
        }
        Command::IntersectionGraph(input) => intersection_graph(&parse_with(&input, parse_set_system)?)?.to_string(),
        Command::Enumerate { kind, n } => {
            let texts: Vec<String> = match kind {
                Kind::Ss => enumerate_proper_set_systems(n)?.map(|d| write_set_system(&d)).collect(),
                Kind::Dm => delta_matroids(n)?.iter().map(write_set_system).collect(),
                Kind::Vf => vf_safe_delta_matroids(n)?.iter().map(write_set_system).collect(),
                Kind::Cd => enumerate_signed_chord_diagrams(n)?
                    .iter()
                    .map(|b| b.to_string())
                    .collect(),
            };
            let mut out = String::new();
            for (i, text) in texts.iter().enumerate() {
                out.push_str(&format!("# {}\n{text}", i + 1));
            }
            out.push_str(&format!("# total: {}\n", texts.len()));
            out
        }
    };
    Ok((out, 0))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
