use std::fmt::{self, Write};
use std::path::Path;

use serde::Serialize;
use tree_assoc::io::{self, TreeFile};
use tree_assoc::monomial::edge_ideal;
use tree_assoc::{assoc, cover, increasing, oracle, random, Error, VertexSet, WeightedGraph};

use crate::{Cli, Command, Format};

/// Why a command did not produce normal output.
#[derive(Debug)]
pub enum Failure {
    /// Bad input, bad flags, or an exhausted budget (exit 1).
    Input(String),
    /// Not a tree / not increasing (exit 2).
    Precondition(String),
    /// Formula and oracle disagree; carries the full report (exit 3).
    Mismatch(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Precondition(_) => 2,
            Failure::Mismatch(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Input(m) | Failure::Precondition(m) | Failure::Mismatch(m) => f.write_str(m),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotATree | Error::NotIncreasingTree | Error::TrivialTree => {
                Failure::Precondition(e.to_string())
            }
            Error::SearchSpaceTooLarge { .. } => {
                Failure::Input(format!("{e} (pass --budget <N>)"))
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

pub fn run(cli: &Cli) -> Outcome {
    let fmt = cli.format;
    match &cli.command {
        Command::Validate { file } => validate(&load(file)?, fmt),
        Command::Roots { file } => roots(&load(file)?, fmt),
        Command::Covers { file, which } => {
            let kind = if which.strong {
                CoverFilter::Strong
            } else if which.minimal {
                CoverFilter::Minimal
            } else {
                CoverFilter::All
            };
            covers(&load(file)?, kind, fmt)
        }
        Command::Ass { file, t, oracle } => ass(&load(file)?, *t, *oracle, cli.budget, fmt),
        Command::OracleAss { file, t } => ass(&load(file)?, *t, true, cli.budget, fmt),
        Command::Astab { file } => astab(&load(file)?, fmt),
        Command::Verify { file, tmax } => verify(&load(file)?, *tmax, cli.budget, fmt),
        Command::Random {
            n,
            wmax,
            seed,
            increasing,
        } => random_tree(*n, *wmax, *seed, *increasing, fmt),
    }
}

fn load(path: &Path) -> Result<WeightedGraph, Failure> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    io::parse_auto(&src).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn labels(g: &WeightedGraph, s: &VertexSet) -> Vec<String> {
    s.labels(g).into_iter().map(String::from).collect()
}

fn label_sets(g: &WeightedGraph, sets: &[VertexSet]) -> Vec<Vec<String>> {
    sets.iter().map(|s| labels(g, s)).collect()
}

fn braces(set: &[String]) -> String {
    format!("{{{}}}", set.join(", "))
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("report types always serialize");
    s.push('\n');
    s
}

fn require_tree(g: &WeightedGraph) -> Result<(), Failure> {
    if g.is_tree() {
        Ok(())
    } else {
        Err(Error::NotATree.into())
    }
}

#[derive(Serialize)]
struct ValidateReport {
    vertices: usize,
    edges: usize,
    tree: bool,
    increasing: bool,
    status: &'static str,
    roots: Vec<String>,
}

fn validate(g: &WeightedGraph, fmt: Format) -> Outcome {
    require_tree(g)?;
    let roots = increasing::valid_roots(g)?;
    let report = ValidateReport {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        tree: true,
        increasing: !roots.is_empty(),
        status: if roots.is_empty() {
            "not increasing"
        } else {
            "increasing"
        },
        roots: labels(g, &roots),
    };
    Ok(match fmt {
        Format::Json => json(&report),
        Format::Table => format!(
            "vertices  {}\nedges     {}\ntree      yes\nstatus    {}\nroots     {}\n",
            report.vertices,
            report.edges,
            report.status,
            braces(&report.roots)
        ),
    })
}

fn roots(g: &WeightedGraph, fmt: Format) -> Outcome {
    require_tree(g)?;
    let roots = labels(g, &increasing::valid_roots(g)?);
    Ok(match fmt {
        Format::Json => json(&roots),
        Format::Table => format!("{}\n", braces(&roots)),
    })
}

#[derive(Debug, Clone, Copy)]
enum CoverFilter {
    All,
    Minimal,
    Strong,
}

fn covers(g: &WeightedGraph, kind: CoverFilter, fmt: Format) -> Outcome {
    let sets = match kind {
        CoverFilter::All => cover::enumerate_vertex_covers(g, false)?,
        CoverFilter::Minimal => cover::enumerate_vertex_covers(g, true)?,
        CoverFilter::Strong => assoc::astab(g)?.ass_infinity,
    };
    let sets = label_sets(g, &sets);
    Ok(match fmt {
        Format::Json => json(&sets),
        Format::Table => sets.iter().map(|s| braces(s) + "\n").collect(),
    })
}

#[derive(Serialize)]
struct AssReport {
    t: u64,
    method: &'static str,
    primes: Vec<Vec<String>>,
}

fn oracle_primes(g: &WeightedGraph, t: u64, budget: u64) -> Result<Vec<VertexSet>, Failure> {
    let ideal = edge_ideal(g).power(t)?;
    let primes = oracle::associated_primes(&ideal, budget)?;
    // supports come back as variable indices, which coincide with vertex ids
    Ok(primes)
}

fn ass(g: &WeightedGraph, t: u64, use_oracle: bool, budget: u64, fmt: Format) -> Outcome {
    if t == 0 {
        return Err(Error::InvalidPower(0).into());
    }
    let (method, primes) = if use_oracle {
        ("oracle", oracle_primes(g, t, budget)?)
    } else {
        ("formula", assoc::ass_power(g, t)?.primes)
    };
    let report = AssReport {
        t,
        method,
        primes: label_sets(g, &primes),
    };
    Ok(match fmt {
        Format::Json => json(&report),
        Format::Table => {
            let mut out = format!("t = {t} ({method}), {} primes\n", report.primes.len());
            for p in &report.primes {
                let _ = writeln!(out, "  {}", braces(p));
            }
            out
        }
    })
}

#[derive(Serialize)]
struct CoverStability {
    cover: Vec<String>,
    first_power: u64,
}

#[derive(Serialize)]
struct AstabReport {
    astab: u64,
    ass_infinity: Vec<Vec<String>>,
    per_cover: Vec<CoverStability>,
}

fn astab(g: &WeightedGraph, fmt: Format) -> Outcome {
    let r = assoc::astab(g)?;
    let report = AstabReport {
        astab: r.astab,
        ass_infinity: label_sets(g, &r.ass_infinity),
        per_cover: r
            .per_cover
            .iter()
            .map(|(c, &first)| CoverStability {
                cover: labels(g, c),
                first_power: first,
            })
            .collect(),
    };
    Ok(match fmt {
        Format::Json => json(&report),
        Format::Table => {
            let mut out = format!("astab = {}\n", report.astab);
            for c in &report.per_cover {
                let _ = writeln!(out, "  {}  from t = {}", braces(&c.cover), c.first_power);
            }
            out
        }
    })
}

#[derive(Serialize)]
struct Mismatch {
    t: u64,
    formula_only: Vec<Vec<String>>,
    oracle_only: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct VerifyReport {
    graph: TreeFile,
    tmax: u64,
    agree: bool,
    mismatches: Vec<Mismatch>,
}

fn verify(g: &WeightedGraph, tmax: u64, budget: u64, fmt: Format) -> Outcome {
    if tmax == 0 {
        return Err(Failure::Input("--tmax must be at least 1".into()));
    }
    if !increasing::is_increasing_tree(g) {
        return Err(Error::NotIncreasingTree.into());
    }
    let mut mismatches = Vec::new();
    if g.edge_count() > 0 {
        for t in 1..=tmax {
            let formula = assoc::ass_power(g, t)?.primes;
            let oracle = oracle_primes(g, t, budget)?;
            let only = |a: &[VertexSet], b: &[VertexSet]| -> Vec<VertexSet> {
                a.iter().filter(|p| !b.contains(p)).cloned().collect()
            };
            let (f_only, o_only) = (only(&formula, &oracle), only(&oracle, &formula));
            if !f_only.is_empty() || !o_only.is_empty() {
                mismatches.push(Mismatch {
                    t,
                    formula_only: label_sets(g, &f_only),
                    oracle_only: label_sets(g, &o_only),
                });
            }
        }
    }
    let report = VerifyReport {
        graph: TreeFile::from_graph(g),
        tmax,
        agree: mismatches.is_empty(),
        mismatches,
    };
    let text = match fmt {
        Format::Json => json(&report),
        Format::Table => {
            let mut out = format!(
                "t = 1..={tmax}: {}\n",
                if report.agree { "agree" } else { "MISMATCH" }
            );
            for m in &report.mismatches {
                let _ = writeln!(
                    out,
                    "  t = {}: formula only {:?}, oracle only {:?}",
                    m.t, m.formula_only, m.oracle_only
                );
            }
            out
        }
    };
    if report.agree {
        Ok(text)
    } else {
        Err(Failure::Mismatch(text))
    }
}

fn random_tree(n: usize, wmax: u64, seed: u64, increasing: bool, fmt: Format) -> Outcome {
    let g = if increasing {
        let (g, rejected) = random::random_increasing_tree(n, wmax, seed)?;
        eprintln!("seed {seed}, {rejected} rejected samples");
        g
    } else {
        random::random_tree(n, wmax, seed)?
    };
    Ok(match fmt {
        Format::Json => io::to_json(&g) + "\n",
        Format::Table => io::to_text(&g),
    })
}
