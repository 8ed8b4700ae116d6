//! `cographic`: command-line front end. JSON goes to stdout, a short
//! human-readable summary to stderr.
//!
//! Exit codes: 0 success, 1 usage error, 2 unreadable or malformed graph,
//! 3 a search cap was exceeded, 4 a verification failed.

use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cographic::{catalog, report, Error, Graph, Limits};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "cographic", version, about = "Cographic fans and cographic toric face rings of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Caps {
    /// Largest edge count for totally cyclic orientation enumeration.
    #[arg(long, default_value_t = Limits::default().orientation_edges)]
    orientation_cap: usize,
    /// Largest edge count for poset, fan, circuit and ring construction.
    #[arg(long, default_value_t = Limits::default().poset_edges)]
    poset_cap: usize,
    /// Largest poset size for isomorphism searches.
    #[arg(long, default_value_t = Limits::default().poset_elements)]
    element_cap: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Full report: graph, poset, fan, ring and per-chamber semigroups.
    Analyze {
        /// Graph file, or `@NAME` for a bundled example.
        graph: String,
        #[arg(long, default_value_t = Limits::default().degree)]
        degree: usize,
        /// Terms beyond the dimension used by the Hilbert-Samuel computation.
        #[arg(long, default_value_t = Limits::default().hs_extra)]
        hs_extra: usize,
        #[command(flatten)]
        caps: Caps,
    },
    /// Totally cyclic orientations and the poset of pairs (T, phi).
    Orientations {
        graph: String,
        #[command(flatten)]
        caps: Caps,
    },
    /// Oriented circuits and their classes.
    Circuits {
        graph: String,
        #[command(flatten)]
        caps: Caps,
    },
    /// Cones of the cographic fan with rays, facets and faces.
    Fan {
        graph: String,
        #[command(flatten)]
        caps: Caps,
    },
    /// Ring invariants and presentation.
    Ring {
        graph: String,
        #[arg(long, default_value_t = Limits::default().degree)]
        degree: usize,
        #[command(flatten)]
        caps: Caps,
    },
    /// Decide whether two graphs have isomorphic cographic rings.
    Compare {
        g: String,
        h: String,
        #[command(flatten)]
        caps: Caps,
    },
    /// Check the torus-invariant description of the ring up to a degree.
    VerifyInvariantRing {
        graph: String,
        #[arg(long, default_value_t = Limits::default().degree)]
        degree: usize,
    },
    /// List the bundled examples, or print one of them.
    Examples {
        name: Option<String>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => 2,
            Error::Capacity { .. } => 3,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn load(arg: &str) -> Result<Graph, Failure> {
    if let Some(name) = arg.strip_prefix('@') {
        return catalog::by_name(name).ok_or_else(|| Failure {
            code: 1,
            message: format!("unknown example `{name}`; try `cographic examples`"),
        });
    }
    let text = std::fs::read_to_string(Path::new(arg)).map_err(|e| Failure {
        code: 2,
        message: format!("cannot read {arg}: {e}"),
    })?;
    Ok(Graph::parse(&text)?)
}

fn limits(caps: &Caps) -> Limits {
    Limits {
        orientation_edges: caps.orientation_cap,
        poset_edges: caps.poset_cap,
        poset_elements: caps.element_cap,
        ..Limits::default()
    }
}

fn emit<T: Serialize>(value: &T) {
    let text = serde_json::to_string_pretty(value).expect("reports serialize");
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze {
            graph,
            degree,
            hs_extra,
            caps,
        } => {
            let g = load(&graph)?;
            let lim = Limits {
                degree,
                hs_extra,
                ..limits(&caps)
            };
            if degree == 0 {
                return Err(Error::ZeroDegree.into());
            }
            let r = report::analyze(&g, &lim)?;
            eprintln!(
                "{} vertices, {} edges, b1 = {}; {} cones, {} chambers; embedded dimension {}, multiplicity {}",
                g.vertex_count(),
                g.edge_count(),
                r.ring.dimension,
                r.fan.cones,
                r.fan.chambers,
                r.ring.embedded_dimension,
                r.ring.multiplicity
            );
            emit(&r);
        }
        Command::Orientations { graph, caps } => {
            let g = load(&graph)?;
            let r = report::orientations_report(&g, &limits(&caps))?;
            eprintln!(
                "{} totally cyclic orientations; poset has {} elements, {} maximal",
                r.totally_cyclic_orientations.len(),
                r.poset_size,
                r.maximal_elements.len()
            );
            emit(&r);
        }
        Command::Circuits { graph, caps } => {
            let g = load(&graph)?;
            let r = report::circuits_report(&g, &limits(&caps))?;
            eprintln!("{} oriented circuits", r.count);
            emit(&r);
        }
        Command::Fan { graph, caps } => {
            let g = load(&graph)?;
            let r = report::fan_report(&g, &limits(&caps))?;
            eprintln!("{} cones, {} chambers, by dimension {:?}", r.cone_count, r.chamber_count, r.cones_by_dimension);
            emit(&r);
        }
        Command::Ring { graph, degree, caps } => {
            let g = load(&graph)?;
            if degree == 0 {
                return Err(Error::ZeroDegree.into());
            }
            let r = report::ring_full_report(&g, &Limits { degree, ..limits(&caps) })?;
            eprintln!(
                "dimension {}, embedded dimension {}, {} minimal primes, multiplicity {}",
                r.ring.dimension,
                r.ring.embedded_dimension,
                r.ring.minimal_primes.len(),
                r.ring.multiplicity
            );
            emit(&r);
        }
        Command::Compare { g, h, caps } => {
            let (a, b) = (load(&g)?, load(&h)?);
            let r = report::compare(&a, &b, &limits(&caps))?;
            eprintln!("{}", if r.same_ring { "isomorphic cographic rings" } else { "non-isomorphic cographic rings" });
            emit(&r);
        }
        Command::VerifyInvariantRing { graph, degree } => {
            let g = load(&graph)?;
            let r = report::verify_invariant_ring(&g, degree);
            eprintln!(
                "degree <= {}: {} invariant monomials, {} cycles, {}",
                r.degree,
                r.invariant_monomials,
                r.cycles,
                if r.isomorphic { "verified" } else { "MISMATCH" }
            );
            emit(&r);
            if !r.isomorphic {
                return Err(Failure {
                    code: 4,
                    message: "invariant ring check failed".into(),
                });
            }
        }
        Command::Examples { name } => match name {
            None => {
                let names: Vec<&str> = catalog::NAMES.to_vec();
                eprintln!("{} bundled examples; use `@NAME` in place of a file", names.len());
                emit(&names);
            }
            Some(n) => {
                let g = catalog::by_name(&n).ok_or_else(|| Failure {
                    code: 1,
                    message: format!("unknown example `{n}`"),
                })?;
                let _ = write!(std::io::stdout().lock(), "{}", g.to_text());
            }
        },
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
