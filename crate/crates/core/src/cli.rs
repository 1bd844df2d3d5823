//! Command-line front end. Every verb prints one JSON document (or a
//! human-readable rendering with `--format pretty`).
//!
//! Exit codes: 0 on success, 1 when a verification sweep has failures,
//! 2 on usage or precondition errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::kspace::{g_poly, k_schur, reduce_to_irreducible};
use crate::partition::{k_bounded_partitions, k_irreducibles, partitions_of, IntVector, Partition};
use crate::schur::{inverse_kostka, kostka_matrix, straighten, SymFunc};
use crate::verify::{sweep, SweepResult};
use crate::vertex::{apply_b_vector, hall_littlewood, kostka_foulkes_matrix};
use crate::TPoly;

#[derive(Parser, Debug)]
#[command(
    name = "kschur",
    version,
    about = "Hall-Littlewood and k-Schur computations over Z[t]"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Specialize t = 1 in the output.
    #[arg(long, global = true)]
    t_one: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Directory for cached (k, degree) tables.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Kschur,
    G,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hall-Littlewood function H_λ in the Schur basis.
    Hl {
        #[arg(long, allow_hyphen_values = true)]
        shape: Partition,
    },
    /// k-Schur function in the Schur basis.
    Kschur {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        shape: Partition,
    },
    /// k-split polynomial G^(k)_λ in the Schur basis.
    Gpoly {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        shape: Partition,
    },
    /// Blocks of the k-split.
    Ksplit {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        shape: Partition,
    },
    /// Straightens a vector index.
    Straighten {
        #[arg(long, allow_hyphen_values = true)]
        vector: IntVector,
    },
    /// Kostka, inverse Kostka or Kostka-Foulkes matrix of one degree.
    Kostka {
        #[arg(long)]
        degree: usize,
        #[arg(long, conflicts_with = "foulkes")]
        inverse: bool,
        #[arg(long)]
        foulkes: bool,
    },
    /// Applies B_v to H_μ, s_μ or 1.
    ApplyB {
        #[arg(long, allow_hyphen_values = true)]
        index: IntVector,
        #[arg(long, conflicts_with = "to_schur")]
        to_hl: Option<Partition>,
        #[arg(long)]
        to_schur: Option<Partition>,
    },
    /// The k-irreducible partitions.
    Irreducibles {
        #[arg(long)]
        k: usize,
    },
    /// Strips k-rectangles down to a k-irreducible index.
    Reduce {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        shape: Partition,
    },
    /// Runs a verification sweep.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        /// Record wall-clock milliseconds per report.
        #[arg(long)]
        timing: bool,
    },
    /// All k-Schur or k-split polynomials of one degree.
    Table {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = TableKind::Kschur)]
        kind: TableKind,
    },
}

/// What a verb produced.
enum Output {
    Func(SymFunc),
    Value(Value),
    Matrix {
        header: Value,
        rows: Vec<Vec<TPoly>>,
        index: Vec<Partition>,
        integer: bool,
    },
    Sweep(SweepResult),
}

/// Parses `argv` (program name first), runs the verb and writes to `out`
/// and `err`. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(output) => {
            let code = match &output {
                Output::Sweep(s) if !s.pass() => 1,
                _ => 0,
            };
            let text = render(output, &cli.global);
            let _ = writeln!(out, "{text}");
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(cli: &Cli) -> Result<Output> {
    let g = &cli.global;
    let func = |f: SymFunc| Ok(Output::Func(if g.t_one { f.at_t_one() } else { f }));
    match &cli.command {
        Command::Hl { shape } => func((*hall_littlewood(shape)).clone()),
        Command::Kschur { k, shape } => func((*k_schur(shape, *k)?).clone()),
        Command::Gpoly { k, shape } => func((*g_poly(shape, *k)?).clone()),
        Command::Ksplit { k, shape } => Ok(Output::Value(to_value(&shape.k_split(*k)?))),
        Command::Straighten { vector } => Ok(Output::Value(match straighten(vector) {
            None => json!({ "zero": true }),
            Some(st) => json!({
                "zero": false,
                "sign": st.sign,
                "index": st.index,
                "negative_tail": st.negative_tail(),
            }),
        })),
        Command::Kostka {
            degree,
            inverse,
            foulkes,
        } => kostka_output(*degree, *inverse, *foulkes, g.t_one),
        Command::ApplyB {
            index,
            to_hl,
            to_schur,
        } => {
            let input = match (to_hl, to_schur) {
                (Some(mu), _) => (*hall_littlewood(mu)).clone(),
                (None, Some(mu)) => SymFunc::schur(mu.clone()),
                (None, None) => SymFunc::one(),
            };
            func(apply_b_vector(index, &input)?)
        }
        Command::Irreducibles { k } => {
            let list = k_irreducibles(*k)?;
            Ok(Output::Value(
                json!({ "k": k, "count": list.len(), "partitions": list }),
            ))
        }
        Command::Reduce { k, shape } => Ok(Output::Value(to_value(&reduce_to_irreducible(shape, *k)?))),
        Command::Verify {
            suite,
            max_degree,
            timing,
        } => Ok(Output::Sweep(sweep(suite, *max_degree, *timing)?)),
        Command::Table { k, degree, kind } => table_output(*k, *degree, *kind, g),
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("plain data serializes")
}

fn kostka_output(n: usize, inverse: bool, foulkes: bool, t_one: bool) -> Result<Output> {
    let (kind, index, rows) = if foulkes {
        let (index, m) = kostka_foulkes_matrix(n);
        let rows = m
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|c| {
                        if t_one {
                            TPoly::constant(c.eval_at_one())
                        } else {
                            c
                        }
                    })
                    .collect()
            })
            .collect();
        ("foulkes", index, rows)
    } else {
        let m = if inverse {
            inverse_kostka(n)
        } else {
            kostka_matrix(n)
        };
        let rows = m
            .entries
            .iter()
            .map(|row| row.iter().map(|c| TPoly::constant(c.clone())).collect())
            .collect();
        (if inverse { "inverse" } else { "kostka" }, m.index.clone(), rows)
    };
    debug_assert_eq!(index, partitions_of(n));
    Ok(Output::Matrix {
        header: json!({ "degree": n, "kind": kind }),
        rows,
        index,
        integer: !foulkes || t_one,
    })
}

fn table_path(dir: &Path, k: usize, n: usize, kind: TableKind) -> PathBuf {
    let name = match kind {
        TableKind::Kschur => "kschur",
        TableKind::G => "g",
    };
    dir.join(format!("{name}-k{k}-n{n}.json"))
}

fn table_output(k: usize, n: usize, kind: TableKind, g: &Global) -> Result<Output> {
    let io = |e: std::io::Error| Error::Parse(format!("cache: {e}"));
    if let Some(dir) = &g.cache_dir {
        let path = table_path(dir, k, n, kind);
        if let Ok(text) = fs::read_to_string(&path) {
            let v: Value =
                serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            return Ok(Output::Value(v));
        }
    }
    let mut entries = Vec::new();
    for lambda in k_bounded_partitions(n, k) {
        let f = match kind {
            TableKind::Kschur => k_schur(&lambda, k)?,
            TableKind::G => g_poly(&lambda, k)?,
        };
        entries.push(json!({ "partition": lambda, "function": *f }));
    }
    let kind_name = if kind == TableKind::Kschur { "kschur" } else { "g" };
    let v = json!({ "k": k, "degree": n, "kind": kind_name, "entries": entries });
    if let Some(dir) = &g.cache_dir {
        fs::create_dir_all(dir).map_err(io)?;
        fs::write(table_path(dir, k, n, kind), v.to_string()).map_err(io)?;
    }
    Ok(Output::Value(v))
}

fn render(output: Output, g: &Global) -> String {
    match (output, g.format) {
        (Output::Func(f), Format::Json) => serde_json::to_string(&f).expect("serializes"),
        (Output::Func(f), Format::Pretty) => f.pretty(),
        (Output::Value(v), Format::Json) => v.to_string(),
        (Output::Value(v), Format::Pretty) => serde_json::to_string_pretty(&v).expect("serializes"),
        (
            Output::Matrix {
                mut header,
                rows,
                index,
                integer,
            },
            Format::Json,
        ) => {
            header["index"] = to_value(&index);
            header["matrix"] = if integer {
                let ints: Vec<Vec<String>> = rows
                    .iter()
                    .map(|row| row.iter().map(|c| c.eval_at_one().to_string()).collect())
                    .collect();
                to_value(&ints)
            } else {
                to_value(&rows)
            };
            header.to_string()
        }
        (
            Output::Matrix {
                header, rows, index, ..
            },
            Format::Pretty,
        ) => {
            let mut lines = vec![format!(
                "{} matrix, degree {}",
                header["kind"].as_str().unwrap_or(""),
                header["degree"]
            )];
            for (p, row) in index.iter().zip(&rows) {
                let cells: Vec<String> = row.iter().map(TPoly::pretty).collect();
                lines.push(format!("{p}: {}", cells.join("  ")));
            }
            lines.join("\n")
        }
        (Output::Sweep(s), Format::Json) => serde_json::to_string(&s).expect("serializes"),
        (Output::Sweep(s), Format::Pretty) => {
            let mut lines = vec![format!(
                "suite {} (max degree {}): {}/{} passed",
                s.suite, s.max_degree, s.passed, s.total
            )];
            for (id, t) in &s.by_id {
                lines.push(format!("  {id}: {}/{}", t.passed, t.total));
            }
            for r in s.failures() {
                lines.push(format!("  FAIL {} {}", r.id, r.params));
            }
            lines.join("\n")
        }
    }
}
