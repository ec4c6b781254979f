//! Command-line driver. Exit codes: 0 success, 1 bad input or domain error,
//! 2 resource cap exhausted, 64 usage error.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analysis::{analyze, InvariantReport};
use crate::error::{Error, Result};
use crate::families::{antichain, chain, example44_poset, segre_poset};
use crate::ideals::{enumerate_ideals, phi};
use crate::io::{parse_poset_bytes, to_dot, to_json};
use crate::levels::compute_levels;
use crate::limits::Limits;
use crate::oracle::nu;
use crate::paths::{enumerate_paths, path_ranks, satisfies_star, PathQuery};
use crate::poset::Poset;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_CAP: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(
    name = "hibi",
    version,
    about = "Invariants of Hibi rings from poset combinatorics"
)]
struct Cli {
    #[command(flatten)]
    caps: CapArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct CapArgs {
    /// Path-search and oracle state cap [env: HIBI_MAX_STATES]
    #[arg(long, global = true, value_name = "N")]
    max_states: Option<u64>,
    /// Largest poset whose ideal lattice may be enumerated [env: HIBI_MAX_ELEMENTS]
    #[arg(long, global = true, value_name = "N")]
    max_elements: Option<usize>,
    /// Largest poset accepted by the Frobenius oracle
    #[arg(long, global = true, value_name = "N")]
    oracle_max_elements: Option<usize>,
    /// Largest q accepted by the Frobenius oracle
    #[arg(long, global = true, value_name = "Q")]
    oracle_max_q: Option<u64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a poset file and report its size
    Validate {
        file: String,
        /// Print the Hasse diagram in Graphviz format instead
        #[arg(long)]
        dot: bool,
    },
    /// Ring invariants with witnesses
    Invariants {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// List paths on the Hasse diagram
    Paths {
        file: String,
        /// Include paths that stop below a maximal element
        #[arg(long, conflicts_with = "maximal")]
        all: bool,
        /// Only paths ending at a maximal element (default)
        #[arg(long)]
        maximal: bool,
        /// Only paths satisfying condition (*)
        #[arg(long)]
        star_only: bool,
    },
    /// List the ideals of the poset
    Lattice { file: String },
    /// List the ring generators, one per ideal
    Generators { file: String },
    /// Compute nu(q) with the brute-force Frobenius oracle
    Nu {
        file: String,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        json: bool,
    },
    /// F-pure threshold of the maximal ideal
    Fpt {
        file: String,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Emit a poset from a named family as JSON
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        /// Comma-separated parameters: chain/antichain N, segre M,N, example44 A,B,C
        #[arg(long)]
        params: String,
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    Levels,
    Paths,
    Both,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Chain,
    Antichain,
    Segre,
    Example44,
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
}

/// Runs the CLI on `argv` (including the program name) and returns the exit code.
pub fn run<I, T>(
    argv: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{rendered}");
                EXIT_OK
            };
        }
    };
    let mut limits = Limits::from_env();
    if let Some(n) = cli.caps.max_states {
        limits.max_states = n;
    }
    if let Some(n) = cli.caps.max_elements {
        limits.max_elements = n;
    }
    if let Some(n) = cli.caps.oracle_max_elements {
        limits.oracle.max_elements = n;
    }
    if let Some(q) = cli.caps.oracle_max_q {
        limits.oracle.max_q = q;
    }

    let mut io = Io { stdin, out: stdout };
    match execute(cli.command, &limits, &mut io) {
        Ok(()) => EXIT_OK,
        Err(Failure::Domain(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            if e.is_cap_exhaustion() {
                EXIT_CAP
            } else {
                EXIT_DOMAIN
            }
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_DOMAIN
        }
    }
}

enum Failure {
    Domain(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn load(file: &str, io: &mut Io) -> std::result::Result<Poset, Failure> {
    let bytes = if file == "-" {
        let mut buf = Vec::new();
        io.stdin.read_to_end(&mut buf)?;
        buf
    } else {
        std::fs::read(file).map_err(|e| Failure::Io(format!("{file}: {e}")))?
    };
    parse_poset_bytes(&bytes).map_err(|e| Failure::Domain(e.at(display_name(file))))
}

fn display_name(file: &str) -> String {
    if file == "-" {
        "<stdin>".into()
    } else {
        file.into()
    }
}

fn execute(command: Command, limits: &Limits, io: &mut Io) -> std::result::Result<(), Failure> {
    match command {
        Command::Validate { file, dot } => {
            let p = load(&file, io)?;
            if dot {
                write!(io.out, "{}", to_dot(&p))?;
            } else {
                writeln!(
                    io.out,
                    "ok: {} elements, {} covers, {}",
                    p.len(),
                    p.cover_pairs().len(),
                    if p.is_connected() {
                        "connected"
                    } else {
                        "disconnected"
                    }
                )?;
            }
        }
        Command::Invariants { file, json } => {
            let p = load(&file, io)?;
            let report = analyze(&p, limits)?;
            if json {
                writeln!(
                    io.out,
                    "{}",
                    serde_json::to_string(&report).expect("report serializes")
                )?;
            } else {
                write_report(io.out, &report)?;
            }
        }
        Command::Paths {
            file,
            all,
            maximal: _,
            star_only,
        } => {
            let p = load(&file, io)?;
            let query = PathQuery {
                maximal_only: !all,
                star_only,
            };
            for path in enumerate_paths(&p, query, limits)? {
                let mark = if star_only || satisfies_star(&p, &path) {
                    "  (*)"
                } else {
                    ""
                };
                writeln!(
                    io.out,
                    "{}  len*={}{mark}",
                    path.display(&p),
                    path.upper_length()
                )?;
            }
        }
        Command::Lattice { file } => {
            let p = load(&file, io)?;
            for ideal in enumerate_ideals(&p, limits)? {
                writeln!(io.out, "{}", ideal.display(&p))?;
            }
        }
        Command::Generators { file } => {
            let p = load(&file, io)?;
            for ideal in enumerate_ideals(&p, limits)? {
                writeln!(io.out, "{}", phi(&p, &ideal).display(&p))?;
            }
        }
        Command::Nu { file, q, json } => {
            let p = load(&file, io)?;
            let r = nu(&p, q, limits)?;
            if json {
                let v = serde_json::json!({
                    "q": r.q,
                    "nu": r.nu,
                    "predicted": r.predicted,
                    "matches": r.matches,
                    "witness": r.witness.display(&p).to_string(),
                });
                writeln!(io.out, "{v}")?;
            } else {
                let verdict = if r.matches { "MATCH" } else { "MISMATCH" };
                writeln!(
                    io.out,
                    "nu({}) = {} (predicted {}) {verdict}",
                    r.q, r.nu, r.predicted
                )?;
            }
        }
        Command::Fpt { file, method } => {
            let p = load(&file, io)?;
            let by_levels = || compute_levels(&p).bottom_level() as i64;
            let by_paths =
                || -> Result<i64> { Ok(path_ranks(p.extend().poset(), limits)?.1.value) };
            match method {
                Method::Levels => writeln!(io.out, "fpt = {}", by_levels())?,
                Method::Paths => writeln!(io.out, "fpt = {}", by_paths()?)?,
                Method::Both => {
                    let (a, b) = (by_levels(), by_paths()?);
                    if a != b {
                        return Err(Error::InternalDisagreement(format!(
                            "levels give fpt {a}, extended path search gives {b}"
                        ))
                        .into());
                    }
                    writeln!(io.out, "fpt = {a} (levels {a}, paths {b})")?;
                }
            }
        }
        Command::Gen {
            family,
            params,
            output,
        } => {
            let p = generate(family, &params, limits)?;
            let text = format!("{}\n", to_json(&p));
            match output {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?,
                None => io.out.write_all(text.as_bytes())?,
            }
        }
    }
    Ok(())
}

fn generate(family: Family, params: &str, limits: &Limits) -> Result<Poset> {
    let values = params
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|e| Error::BadParameters(format!("`{params}`: {e}")))?;
    let arity = |k: usize| {
        if values.len() == k {
            Ok(())
        } else {
            Err(Error::BadParameters(format!(
                "expected {k} comma-separated values, got `{params}`"
            )))
        }
    };
    match family {
        Family::Chain => arity(1).map(|_| chain(values[0])),
        Family::Antichain => arity(1).map(|_| antichain(values[0])),
        Family::Segre => {
            arity(2)?;
            segre_poset(values[0], values[1])
        }
        Family::Example44 => {
            arity(3)?;
            example44_poset(values[0], values[1], values[2], limits)
        }
    }
}

fn write_report(out: &mut dyn Write, r: &InvariantReport) -> std::io::Result<()> {
    let path = |p: &Option<Vec<String>>| match p {
        Some(v) => format!("({})", v.join(", ")),
        None => "none".into(),
    };
    let levels: Vec<String> = r
        .witnesses
        .levels
        .iter()
        .map(|l| format!("{{{}}}", l.join(", ")))
        .collect();
    let rows: [(&str, String); 16] = [
        ("n_elements", r.n_elements.to_string()),
        ("dim", r.dim.to_string()),
        ("rank", r.rank.to_string()),
        ("upper_rank", r.upper_rank.to_string()),
        ("lower_rank", r.lower_rank.to_string()),
        ("c_diagonal", r.c_diagonal.to_string()),
        ("fpt", r.fpt.to_string()),
        ("minus_a", r.minus_a.to_string()),
        ("min_maximal_chain", r.min_maximal_chain.to_string()),
        ("pure", r.pure.to_string()),
        ("gorenstein", r.gorenstein.to_string()),
        ("inequality_ok", r.inequality_ok.to_string()),
        ("upper_path", path(&r.witnesses.upper_path)),
        ("lower_path", path(&r.witnesses.lower_path)),
        ("level_path", path(&Some(r.witnesses.level_path.clone()))),
        ("levels", levels.join(" ")),
    ];
    for (key, value) in rows {
        writeln!(out, "{key:<18} {value}")?;
    }
    Ok(())
}
