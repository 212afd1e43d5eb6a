//! Command-line front end. `run` is pure over its inputs so it can be tested
//! without spawning a process.

use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bicyclic::{self, ExtremalFamily};
use crate::enumerate;
use crate::error::{Error, Result};
use crate::fmt_num;
use crate::graph::SignedGraph;
use crate::perturb::{self, Operation};
use crate::spectra;
use crate::switching::{self, BalanceCertificate};

/// Environment variable supplying the default sampling seed.
pub const SEED_ENV: &str = "SIGNED_SPECTRA_SEED";

#[derive(Debug, Parser)]
#[command(name = "signed-spectra", version, about = "Spectral analysis of signed graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Largest adjacency eigenvalue.
    Index {
        file: String,
        /// Also print the unit eigenvector.
        #[arg(long)]
        vector: bool,
    },
    /// All adjacency eigenvalues, descending.
    Spectrum { file: String },
    /// Characteristic polynomial, constant term first.
    Charpoly {
        file: String,
        /// Use the vertex recursion instead of the matrix recurrence.
        #[arg(long)]
        schwenk: bool,
        /// Vertex to expand at first (recursion only).
        #[arg(long, default_value_t = 0)]
        vertex: usize,
    },
    /// Balance test with certificate.
    Balance { file: String },
    /// One-negative-edge form of an unbalanced bicyclic graph.
    Canon { file: String },
    /// Base type and cycle signs of a bicyclic graph.
    Classify { file: String },
    /// Members of the five extremal families.
    Family {
        #[arg(long)]
        which: usize,
        #[arg(long)]
        n: usize,
        /// Write the graph to this file instead of stdout.
        #[arg(long, conflicts_with_all = ["charpoly", "index"])]
        emit: Option<String>,
        #[arg(long, conflicts_with = "index")]
        charpoly: bool,
        #[arg(long)]
        index: bool,
    },
    /// Apply a perturbation and report the index change.
    Perturb {
        #[arg(long, value_enum)]
        op: PerturbOp,
        /// `u,v`
        #[arg(long)]
        edge: Option<String>,
        /// `a,b,c` (relocate only)
        #[arg(long)]
        targets: Option<String>,
        /// Tree root (collapse only)
        #[arg(long)]
        root: Option<usize>,
        file: String,
    },
    /// Rank every unbalanced bicyclic graph of a small order.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        top: usize,
        #[arg(long)]
        tsv: bool,
    },
    /// Strict index ordering of the five families over a range of orders.
    VerifyOrdering {
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        /// Cross-check each root against the eigensolver.
        #[arg(long)]
        eigen: bool,
        #[arg(long)]
        tsv: bool,
    },
    /// Random search for graphs outside the families reaching the fifth index.
    VerifyExclusions {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Match reference polynomials against a search space of graphs.
    MatchTable1 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        tsv: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PerturbOp {
    Relocate,
    Alpha,
    Collapse,
    AddNegEdge,
}

/// Exit status with captured output streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Domain(Error),
    Io(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type CmdResult = std::result::Result<String, Failure>;

fn read_graph(path: &str, stdin: &mut dyn Read) -> std::result::Result<SignedGraph, Failure> {
    let mut text = String::new();
    if path == "-" {
        stdin.read_to_string(&mut text).map_err(|e| Failure::Io(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{path}: {e}")))?;
    }
    Ok(SignedGraph::parse_sg(&text)?)
}

fn parse_list(s: &str) -> std::result::Result<Vec<usize>, Failure> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse().map_err(|_| Failure::Usage(format!("expected a vertex number, got `{t}`"))))
        .collect()
}

fn parse_edge(s: Option<&str>) -> std::result::Result<(usize, usize), Failure> {
    let s = s.ok_or_else(|| Failure::Usage("--edge u,v is required for this operation".into()))?;
    match parse_list(s)?.as_slice() {
        [u, v] => Ok((*u, *v)),
        _ => Err(Failure::Usage(format!("expected `u,v`, got `{s}`"))),
    }
}

fn join_nums(xs: &[f64]) -> String {
    xs.iter().map(|x| fmt_num(*x)).collect::<Vec<_>>().join(" ")
}

fn cmd_index(g: &SignedGraph, vector: bool) -> Result<String> {
    let idx = spectra::index(g)?;
    let mut out = format!("{}\n", fmt_num(idx.lambda));
    if vector {
        out.push_str(&join_nums(&idx.vector.coords));
        out.push('\n');
        out.push_str(&format!("multiple: {}\n", idx.multiple));
    }
    Ok(out)
}

fn cmd_balance(g: &SignedGraph) -> String {
    match switching::is_balanced(g) {
        BalanceCertificate::Balanced(theta) => format!("balanced\n{theta}\n"),
        BalanceCertificate::Unbalanced(cycles) => {
            let c = &cycles[0];
            let vs: Vec<String> = c.vertices.iter().map(|v| v.to_string()).collect();
            format!("unbalanced\n{}\n", vs.join(" "))
        }
    }
}

fn cmd_classify(g: &SignedGraph) -> Result<String> {
    let (_, shape) = bicyclic::base(g)?;
    let mut out = format!("{}\n", shape.kind);
    let base: Vec<String> = shape.base_vertices.iter().map(|v| v.to_string()).collect();
    out.push_str(&format!("base: {}\n", base.join(" ")));
    for c in &shape.cycles {
        let vs: Vec<String> = c.vertices.iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("cycle {}: {}\n", c.sign.symbol(), vs.join(" ")));
    }
    out.push_str(if shape.is_unbalanced() { "unbalanced\n" } else { "balanced\n" });
    Ok(out)
}

fn cmd_family(which: usize, n: usize, emit: Option<&str>, charpoly: bool, index: bool) -> CmdResult {
    let fam = ExtremalFamily::new(which)?;
    let g = fam.construct(n)?;
    if charpoly {
        return Ok(format!("{}\n", spectra::charpoly_exact(&g).to_coeff_line()));
    }
    if index {
        return Ok(format!("{}\n", fmt_num(bicyclic::family_index(which, n)?)));
    }
    match emit {
        Some(path) => {
            std::fs::write(path, g.to_sg()).map_err(|e| Failure::Io(format!("{path}: {e}")))?;
            Ok(String::new())
        }
        None => Ok(g.to_sg()),
    }
}

fn ordering_tsv(report: &enumerate::OrderingReport) -> Result<String> {
    let mut out = String::new();
    for (n, l) in &report.rows {
        for (i, lambda) in l.iter().enumerate() {
            let p = ExtremalFamily::new(i + 1)?.charpoly_formula(*n);
            out.push_str(&format!("G{}@{n}\t{}\t{}\n", i + 1, fmt_num(*lambda), p.to_coeff_line()));
        }
    }
    Ok(out)
}

fn dispatch(cli: Cli, stdin: &mut dyn Read) -> CmdResult {
    Ok(match cli.command {
        Command::Index { file, vector } => cmd_index(&read_graph(&file, stdin)?, vector)?,
        Command::Spectrum { file } => {
            let s = spectra::eigenvalues(&read_graph(&file, stdin)?)?;
            format!("{}\n", join_nums(&s.values))
        }
        Command::Charpoly { file, schwenk, vertex } => {
            let g = read_graph(&file, stdin)?;
            let p = if schwenk { spectra::charpoly_schwenk(&g, vertex)? } else { spectra::charpoly_exact(&g) };
            format!("{}\n", p.to_coeff_line())
        }
        Command::Balance { file } => cmd_balance(&read_graph(&file, stdin)?),
        Command::Canon { file } => {
            let g = read_graph(&file, stdin)?;
            let (_, shape) = bicyclic::base(&g)?;
            switching::normalize_signature(&g, &shape)?.to_sg()
        }
        Command::Classify { file } => cmd_classify(&read_graph(&file, stdin)?)?,
        Command::Family { which, n, emit, charpoly, index } => cmd_family(which, n, emit.as_deref(), charpoly, index)?,
        Command::Perturb { op, edge, targets, root, file } => {
            let g = read_graph(&file, stdin)?;
            let operation = match op {
                PerturbOp::Relocate => {
                    let (u, v) = parse_edge(edge.as_deref())?;
                    let targets = parse_list(targets.as_deref().unwrap_or(""))?;
                    Operation::Relocate { u, v, targets }
                }
                PerturbOp::Alpha => {
                    let (u, v) = parse_edge(edge.as_deref())?;
                    Operation::Alpha { u, v }
                }
                PerturbOp::AddNegEdge => {
                    let (u, v) = parse_edge(edge.as_deref())?;
                    Operation::AddNegativeEdge { u, v }
                }
                PerturbOp::Collapse => {
                    let root = root.ok_or_else(|| Failure::Usage("--root R is required for collapse".into()))?;
                    Operation::Collapse { root }
                }
            };
            perturb::perturb(&g, &operation)?.to_string()
        }
        Command::Enumerate { n, top, tsv } => enumerate::enumerate_unbalanced_bicyclic(n)?.render(top, tsv),
        Command::VerifyOrdering { n_min, n_max, eigen, tsv } => {
            let report = enumerate::verify_ordering(n_min, n_max, eigen)?;
            if tsv {
                ordering_tsv(&report)?
            } else {
                report.render()
            }
        }
        Command::VerifyExclusions { n, samples, seed } => {
            let seed = match seed {
                Some(s) => s,
                None => match std::env::var(SEED_ENV) {
                    Ok(v) => v.trim().parse().map_err(|_| Failure::Usage(format!("{SEED_ENV} is not an integer: `{v}`")))?,
                    Err(_) => 0,
                },
            };
            enumerate::verify_exclusions(n, samples, seed)?.render()
        }
        Command::MatchTable1 { n, tsv } => enumerate::match_table1(n)?.render(tsv),
    })
}

/// Runs the CLI on `argv` (including the program name).
pub fn run<I, S>(argv: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(cli, stdin) {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(Failure::Domain(e)) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {}: {e}\n", e.name()) },
        Err(Failure::Io(msg)) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: Io: {msg}\n") },
        Err(Failure::Usage(msg)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_with(args: &[&str], input: &str) -> Outcome {
        let mut argv = vec!["signed-spectra"];
        argv.extend_from_slice(args);
        run(argv, &mut input.as_bytes())
    }

    const NEG_TRIANGLE: &str = "3 3\n0 1 -\n1 2 +\n0 2 +\n";

    #[test]
    fn balance_of_negative_triangle() {
        let o = run_with(&["balance", "-"], NEG_TRIANGLE);
        assert_eq!(o.code, 0);
        assert_eq!(o.stdout, "unbalanced\n0 1 2\n");
    }

    #[test]
    fn family_charpoly_small() {
        let o = run_with(&["family", "--which", "2", "--n", "5", "--charpoly"], "");
        assert_eq!(o.stdout, "0 6 0 -6 0 1\n");
    }

    #[test]
    fn usage_and_domain_errors() {
        assert_eq!(run_with(&["index"], "").code, 2);
        assert_eq!(run_with(&["index", "-", "--bogus"], NEG_TRIANGLE).code, 2);
        let o = run_with(&["family", "--which", "1", "--n", "3"], "");
        assert_eq!(o.code, 1);
        assert!(o.stderr.contains("UnsupportedN"));
        let o = run_with(&["classify", "-"], NEG_TRIANGLE);
        assert_eq!(o.code, 1);
        assert!(o.stderr.contains("NotBicyclic"));
        assert_eq!(run_with(&["perturb", "--op", "alpha", "-"], NEG_TRIANGLE).code, 2);
    }

    #[test]
    fn index_of_negative_triangle_is_one() {
        let o = run_with(&["index", "-"], NEG_TRIANGLE);
        assert_eq!(o.stdout, "1\n");
    }

    #[test]
    fn help_goes_to_stdout() {
        let o = run_with(&["--help"], "");
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("verify-exclusions"));
    }
}
