mod error;
mod report;

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qgraph::cert::{self, Certificate};
use qgraph::graph::{orthogonality_graph, InnerProduct, VectorSet};
use qgraph::par::{self, Exec};
use qgraph::perm::{cayley_graph, find_isomorphism, involutions, verify_isomorphism};
use qgraph::solve::{self, Budget, SolveOptions};
use qgraph::{embed, field, reproduce, spectra, CliquePartition, Graph};

use error::CliError;
use report::RunReport;

#[derive(Parser, Debug)]
#[command(name = "qgraph", version, about = "Exact constructions, solvers and projector certificates for orthogonality graphs")]
struct Cli {
    /// Worker threads for the parallel searches (1 = sequential).
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    /// Output format for graphs.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Piovesan,
    PiovesanFlipped,
    G120,
    CayS4,
    CayS5,
    Er,
    ErPrime,
    G13,
    G14,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Preset {
    S5,
    S6,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Construct a named graph.
    Build {
        #[arg(value_enum)]
        family: Family,
        /// Prime for `er` and `er-prime`.
        #[arg(short = 'p', long)]
        prime: Option<u64>,
        /// Write the graph here instead of stdout.
        #[arg(short = 'o', long)]
        out: Option<PathBuf>,
        /// Also write the underlying vector set (vector families only).
        #[arg(long)]
        vectors_out: Option<PathBuf>,
    },
    /// Exact independence number with a witness coclique.
    Alpha { graph: PathBuf },
    /// Exact chromatic number with a witness colouring.
    Chi {
        graph: PathBuf,
        #[arg(long)]
        ub: Option<usize>,
    },
    /// Exact inertia of the adjacency matrix and the inertia bound.
    Inertia { graph: PathBuf },
    /// Partition the vertices into cliques of size d.
    Partition {
        #[arg(short = 'd')]
        d: usize,
        graph: PathBuf,
        #[arg(short = 'o', long)]
        out: Option<PathBuf>,
    },
    /// Search for a coclique transversal of a clique partition.
    KsCheck {
        graph: PathBuf,
        partition: PathBuf,
        /// Exit 1 unless the outcome matches.
        #[arg(long, value_enum)]
        expect: Option<KsExpect>,
    },
    /// Check a vertex map between two graphs, or search for one.
    VerifyIso {
        g: PathBuf,
        h: PathBuf,
        /// JSON array with the image of each vertex of `g`.
        map: Option<PathBuf>,
    },
    /// Build a coclique certificate from a vector set and a partition.
    MakeCert {
        #[arg(long = "from-partition", num_args = 2, value_names = ["VECTORS", "PARTITION"], required = true)]
        from_partition: Vec<PathBuf>,
        #[arg(short = 'o', long)]
        out: Option<PathBuf>,
    },
    /// Verify every condition of a certificate against a graph.
    VerifyCert { graph: PathBuf, cert: PathBuf },
    /// Recover a classical witness from a certificate, or report Kochen–Specker.
    GapWitness { graph: PathBuf, cert: PathBuf },
    /// Rational vectors orthogonal to a list of integer 4-vectors.
    Nullspace {
        constraints: Option<PathBuf>,
        #[arg(long, value_enum, conflicts_with = "constraints")]
        preset: Option<Preset>,
    },
    /// Run a named reproduction (or `all`).
    Reproduce { claim: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KsExpect {
    Ks,
    Transversal,
}

struct Ctx {
    opts: SolveOptions,
    format: Format,
    inputs: BTreeMap<String, String>,
}

impl Ctx {
    fn read(&mut self, path: &Path) -> Result<String, CliError> {
        let bytes = std::fs::read(path).map_err(|e| CliError::io(path, e))?;
        self.inputs.insert(path.display().to_string(), report::digest(&bytes));
        String::from_utf8(bytes).map_err(|_| CliError::Usage(format!("{} is not UTF-8", path.display())))
    }

    fn graph(&mut self, path: &Path) -> Result<Graph, CliError> {
        Ok(Graph::from_json(&self.read(path)?)?)
    }

    fn json<T: serde::de::DeserializeOwned>(&mut self, path: &Path) -> Result<T, CliError> {
        let s = self.read(path)?;
        serde_json::from_str(&s).map_err(|e| CliError::Core(qgraph::Error::Parse(e.to_string())))
    }

    fn render(&self, g: &Graph) -> String {
        match self.format {
            Format::Json => g.to_json(),
            Format::Dot => g.to_dot(),
        }
    }
}

fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|e| CliError::io(path, e))
}

/// Either a report plus exit status, or raw output for `build` to stdout.
enum Outcome {
    Report { outputs: Value, ok: bool },
    Raw(String),
}

fn budget_from_env() -> Result<Budget, CliError> {
    match std::env::var("QGRAPH_BUDGET_MS") {
        Ok(s) => s
            .trim()
            .parse::<u64>()
            .map(|ms| Budget::time(Duration::from_millis(ms)))
            .map_err(|_| CliError::Usage(format!("QGRAPH_BUDGET_MS must be an integer, got {s:?}"))),
        Err(_) => Ok(Budget::unlimited()),
    }
}

fn build(family: Family, prime: Option<u64>) -> Result<(Graph, Option<VectorSet>), CliError> {
    let need_p = || prime.ok_or_else(|| CliError::Usage("this family needs -p <prime>".into()));
    Ok(match family {
        Family::Piovesan => (embed::gp_graph(), Some(embed::piovesan_vectors())),
        Family::PiovesanFlipped => {
            let vs = embed::sign_flip(&embed::piovesan_vectors(), &embed::piovesan_flip_signs())?;
            (orthogonality_graph(&vs, InnerProduct::Rational)?, Some(vs))
        }
        Family::G120 => (embed::g120_graph(), Some(embed::s5_vectors())),
        Family::CayS4 => (cayley_graph(4, &involutions(4))?, None),
        Family::CayS5 => (cayley_graph(5, &involutions(5))?, None),
        Family::Er => {
            let p = need_p()?;
            (field::er_graph(p)?, Some(field::er_vectors(p)?))
        }
        Family::ErPrime => {
            let p = need_p()?;
            (field::er_prime_graph(p)?, Some(field::er_prime_vectors(p)?))
        }
        Family::G13 => (field::g13(), Some(field::er_prime_vectors(3)?)),
        Family::G14 => (field::g14(), None),
    })
}

fn run(cmd: Command, ctx: &mut Ctx) -> Result<Outcome, CliError> {
    let opts = ctx.opts;
    let out = match cmd {
        Command::Build {
            family,
            prime,
            out,
            vectors_out,
        } => {
            let (g, vs) = build(family, prime)?;
            if let Some(path) = &vectors_out {
                let vs = vs.ok_or_else(|| CliError::Usage(format!("{family:?} has no vector set")))?;
                write(path, &vs.to_json())?;
            }
            let text = ctx.render(&g);
            match out {
                Some(path) => {
                    write(&path, &text)?;
                    Outcome::Report {
                        outputs: json!({"n": g.n(), "edges": g.edge_count(), "written": path}),
                        ok: true,
                    }
                }
                None => Outcome::Raw(text),
            }
        }
        Command::Alpha { graph } => {
            let g = ctx.graph(&graph)?;
            let r = solve::max_independent_set(&g, &opts)?;
            Outcome::Report {
                outputs: serde_json::to_value(&r)?,
                ok: true,
            }
        }
        Command::Chi { graph, ub } => {
            let g = ctx.graph(&graph)?;
            let r = solve::chromatic_number(&g, ub, &opts)?;
            Outcome::Report {
                outputs: serde_json::to_value(&r)?,
                ok: true,
            }
        }
        Command::Inertia { graph } => {
            let g = ctx.graph(&graph)?;
            let i = spectra::graph_inertia(&g);
            Outcome::Report {
                outputs: json!({
                    "n_minus": i.n_minus,
                    "n_zero": i.n_zero,
                    "n_plus": i.n_plus,
                    "bound": i.bound(),
                }),
                ok: true,
            }
        }
        Command::Partition { d, graph, out } => {
            let g = ctx.graph(&graph)?;
            let cp = solve::clique_partition(&g, d, &opts)?;
            if let (Some(path), Some(cp)) = (&out, &cp) {
                write(path, &serde_json::to_string(cp)?)?;
            }
            Outcome::Report {
                outputs: json!({"found": cp.is_some(), "partition": cp}),
                ok: true,
            }
        }
        Command::KsCheck {
            graph,
            partition,
            expect,
        } => {
            let g = ctx.graph(&graph)?;
            let cp: CliquePartition = ctx.json(&partition)?;
            let cp = CliquePartition::new(cp.parts)?;
            let t = solve::ks_transversal_search(&g, &cp, &opts)?;
            let ks = t.is_none();
            let ok = match expect {
                Some(KsExpect::Ks) => ks,
                Some(KsExpect::Transversal) => !ks,
                None => true,
            };
            Outcome::Report {
                outputs: json!({"kochen_specker": ks, "transversal": t}),
                ok,
            }
        }
        Command::VerifyIso { g, h, map } => {
            let gg = ctx.graph(&g)?;
            let hh = ctx.graph(&h)?;
            let (m, source) = match map {
                Some(path) => (Some(ctx.json::<Vec<usize>>(&path)?), "supplied"),
                None => (find_isomorphism(&gg, &hh), "search"),
            };
            let iso = match &m {
                Some(m) => verify_isomorphism(&gg, &hh, m)?,
                None => false,
            };
            Outcome::Report {
                outputs: json!({"isomorphic": iso, "map": m, "map_source": source}),
                ok: iso,
            }
        }
        Command::MakeCert { from_partition, out } => {
            let vs = VectorSet::from_json(&ctx.read(&from_partition[0])?)?;
            let cp: CliquePartition = ctx.json(&from_partition[1])?;
            let cp = CliquePartition::new(cp.parts)?;
            let c = cert::certificate_from_clique_partition(&vs, &cp)?;
            let text = c.to_json();
            match out {
                Some(path) => {
                    write(&path, &text)?;
                    Outcome::Report {
                        outputs: json!({"kind": c.kind(), "d": c.d(), "s": c.s(), "written": path}),
                        ok: true,
                    }
                }
                None => Outcome::Raw(text),
            }
        }
        Command::VerifyCert { graph, cert: path } => {
            let g = ctx.graph(&graph)?;
            let c = Certificate::from_json(&ctx.read(&path)?)?;
            let v = cert::verify(&c, &g)?;
            Outcome::Report {
                outputs: json!({"kind": c.kind(), "d": c.d(), "s": c.s(), "valid": v.valid, "violations": v.violations}),
                ok: v.valid,
            }
        }
        Command::GapWitness { graph, cert: path } => {
            let g = ctx.graph(&graph)?;
            let c = Certificate::from_json(&ctx.read(&path)?)?;
            let w = match c.kind() {
                cert::CertKind::Coclique => cert::alpha_gap_witness(&g, &c, &opts)?,
                cert::CertKind::Coloring => cert::chi_gap_witness(&g, &c, &opts)?,
            };
            Outcome::Report {
                outputs: json!({"kind": c.kind(), "s": c.s(), "result": w}),
                ok: true,
            }
        }
        Command::Nullspace {
            constraints,
            preset,
        } => {
            let cons: Vec<[i64; 4]> = match (constraints, preset) {
                (Some(path), _) => ctx.json(&path)?,
                (None, Some(Preset::S6)) => embed::s6_extension_constraints(),
                (None, Some(Preset::S5)) => {
                    let imgs = embed::TranspositionImages::s4();
                    [(2, 3), (2, 4), (3, 4)]
                        .iter()
                        .map(|&(a, b)| imgs.get(a, b).expect("S_4 image"))
                        .collect()
                }
                (None, None) => return Err(CliError::Usage("give a constraints file or --preset".into())),
            };
            let basis: Vec<Vec<String>> = embed::extension_nullspace(&cons)
                .iter()
                .map(|v| v.iter().map(ToString::to_string).collect())
                .collect();
            Outcome::Report {
                outputs: json!({"constraints": cons, "dimension": basis.len(), "basis": basis}),
                ok: true,
            }
        }
        Command::Reproduce { claim } => {
            let claims: Vec<&str> = if claim == "all" {
                reproduce::CLAIMS.to_vec()
            } else {
                vec![claim.as_str()]
            };
            let mut reports = Vec::new();
            for c in claims {
                reports.push(reproduce::run(c, &opts)?);
            }
            let ok = reports.iter().all(|r| r.pass);
            Outcome::Report {
                outputs: json!({"pass": ok, "claims": reports}),
                ok,
            }
        }
    };
    Ok(out)
}

/// Prints to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}");
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(2),
            };
        }
    };
    let budget = match budget_from_env() {
        Ok(b) => b,
        Err(e) => return e.report(),
    };
    let threads = cli.threads.max(1);
    let mut ctx = Ctx {
        opts: SolveOptions {
            budget,
            exec: Exec::from_threads(threads),
        },
        format: cli.format,
        inputs: BTreeMap::new(),
    };
    let start = Instant::now();
    let result = par::with_threads(threads, || run(cli.command, &mut ctx));
    match result {
        Ok(Outcome::Raw(text)) => {
            emit(&text);
            ExitCode::SUCCESS
        }
        Ok(Outcome::Report { outputs, ok }) => {
            let r = RunReport::new(argv[1..].to_vec(), ctx.inputs, outputs, start.elapsed());
            emit(&r.to_json());
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => e.report(),
    }
}
