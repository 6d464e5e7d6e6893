use std::process::ExitCode;

use atomic_core::atomic_graph::{build_bplus, build_bplus_lenient, export, verify_atomic};
use atomic_core::binf::{self, Multisegment};
use atomic_core::crystal::generate_crystal;
use atomic_core::kostka::{atomic_polys, weight_from_omega_or_eps, AtomicVariant, KostkaEngine};
use atomic_core::poset::layer_sum;
use atomic_core::suites::{run_suite, Bounds};
use atomic_core::{Error, Family, RootSystem, TPoly, Weight};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "atomic",
    version,
    about = "Kostka-Foulkes polynomials and atomic decompositions"
)]
struct Cli {
    /// Print domain errors as JSON on stderr.
    #[arg(long, global = true)]
    error_json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct System {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    rank: usize,
}

#[derive(Args)]
struct Lambda {
    /// Highest weight in epsilon coordinates.
    #[arg(
        long,
        value_delimiter = ',',
        allow_negative_numbers = true,
        conflicts_with = "lambda_omega",
        required_unless_present = "lambda_omega"
    )]
    lambda: Option<Vec<i64>>,
    /// Highest weight in fundamental-weight coordinates.
    #[arg(long, value_delimiter = ',')]
    lambda_omega: Option<Vec<i64>>,
}

impl Lambda {
    fn weight(&self, rs: &RootSystem) -> atomic_core::Result<Weight> {
        weight_from_omega_or_eps(rs, self.lambda.as_deref(), self.lambda_omega.as_deref())
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Roots, fundamental weights and Weyl group order.
    Rootsys {
        #[command(flatten)]
        system: System,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Kostka-Foulkes polynomial K_{lambda,mu}(t) as a coefficient array.
    Kostka {
        #[command(flatten)]
        system: System,
        #[command(flatten)]
        lambda: Lambda,
        #[arg(
            long,
            value_delimiter = ',',
            allow_negative_numbers = true,
            conflicts_with = "mu_omega",
            required_unless_present = "mu_omega"
        )]
        mu: Option<Vec<i64>>,
        #[arg(long, value_delimiter = ',')]
        mu_omega: Option<Vec<i64>>,
        /// The modified polynomial t^{ht(lambda-mu)} K(1/t).
        #[arg(long)]
        tilde: bool,
        #[arg(long)]
        pretty: bool,
    },
    /// Atomic polynomials A_{lambda,mu}(t) for every dominant mu <= lambda.
    AtomicPolys {
        #[command(flatten)]
        system: System,
        #[command(flatten)]
        lambda: Lambda,
        #[arg(long)]
        tilde: bool,
        /// Evaluate at this integer value of t.
        #[arg(long, allow_negative_numbers = true)]
        eval: Option<i64>,
        #[arg(long)]
        pretty: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Layer sum w_mu^+(t): dominant nu <= mu with their exponents.
    LayerSum {
        #[command(flatten)]
        system: System,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        mu: Vec<i64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Vertices of the crystal B(lambda).
    Crystal {
        #[command(flatten)]
        system: System,
        #[command(flatten)]
        lambda: Lambda,
        /// Only list vertices of dominant weight.
        #[arg(long)]
        dominant: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The modified crystal graph on the dominant vertices and its atoms.
    Bplus {
        #[command(flatten)]
        system: System,
        #[command(flatten)]
        lambda: Lambda,
        /// Record cocovers outside the base orbit instead of failing.
        #[arg(long)]
        lenient: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run a verification suite; exits non-zero if any case fails.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long)]
        max_rank: Option<usize>,
        #[arg(long)]
        max_height: Option<i64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Atoms of B(infinity) in type A_{n-1}, truncated by number of segments.
    Binf {
        /// Number of letters.
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        max_size: u32,
        /// Print the marginally large tableau of a multisegment given as JSON.
        #[arg(long)]
        tableau: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// M_t(beta) in type A_{n-1} from the sources of B(infinity).
    Mt {
        #[arg(long)]
        n: usize,
        /// beta in simple-root coordinates.
        #[arg(long, value_delimiter = ',')]
        beta: Vec<i64>,
        #[arg(long, default_value_t = binf::DEFAULT_HEIGHT_BOUND)]
        bound: i64,
        #[arg(long)]
        pretty: bool,
    },
}

enum Failure {
    Domain(Error),
    /// A verification suite reported failing cases.
    Checks(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn poly(p: &TPoly, pretty: bool) -> String {
    if pretty {
        p.pretty()
    } else if p.is_zero() {
        "[0]".to_string()
    } else {
        serde_json::to_string(p.coeffs()).expect("integers serialise")
    }
}

fn omega_label(rs: &RootSystem, w: &Weight) -> String {
    match rs.omega_coords(w) {
        Ok(c) => Weight::compact(&c),
        Err(_) => w.to_string(),
    }
}

fn pretty_json(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialise")
}

fn run(command: Command) -> Result<String, Failure> {
    let out = match command {
        Command::Rootsys { system, format } => {
            let rs = RootSystem::new(system.family, system.rank)?;
            let fmt_list = |ws: &[Weight]| ws.iter().map(Weight::to_string).collect::<Vec<_>>();
            let rho2 = rs.rho2().clone();
            match format {
                Format::Json => pretty_json(&json!({
                    "name": rs.name(),
                    "dim": rs.dim(),
                    "simple_roots": rs.simple_roots(),
                    "positive_roots": rs.positive_roots(),
                    "fundamental_weights_doubled": rs.fundamental_weights2(),
                    "rho_doubled": rho2,
                    "highest_root": rs.highest_root(),
                    "weyl_order": rs.weyl_group().len(),
                })),
                _ => {
                    let mut s = format!("{} in dimension {}\n", rs.name(), rs.dim());
                    s += &format!("simple roots: {}\n", fmt_list(rs.simple_roots()).join(" "));
                    s += &format!(
                        "positive roots ({}): {}\n",
                        rs.positive_roots().len(),
                        fmt_list(rs.positive_roots()).join(" ")
                    );
                    s += &format!("2 rho: {rho2}\n");
                    s += &format!("highest root: {}\n", rs.highest_root());
                    s += &format!("|W| = {}", rs.weyl_group().len());
                    s
                }
            }
        }
        Command::Kostka {
            system,
            lambda,
            mu,
            mu_omega,
            tilde,
            pretty,
        } => {
            let rs = RootSystem::new(system.family, system.rank)?;
            let l = lambda.weight(&rs)?;
            let m = weight_from_omega_or_eps(&rs, mu.as_deref(), mu_omega.as_deref())?;
            let mut engine = KostkaEngine::new(&rs);
            let k = if tilde {
                engine.kostka_tilde(&l, &m)?
            } else {
                engine.kostka(&l, &m)?
            };
            poly(&k, pretty)
        }
        Command::AtomicPolys {
            system,
            lambda,
            tilde,
            eval,
            pretty,
            format,
        } => {
            let rs = RootSystem::new(system.family, system.rank)?;
            let l = lambda.weight(&rs)?;
            let variant = if tilde {
                AtomicVariant::Tilde
            } else {
                AtomicVariant::Plain
            };
            let ex = atomic_polys(&rs, &l, variant)?;
            let value = |p: &TPoly| match eval {
                Some(t) => p.eval(t).to_string(),
                None => poly(p, pretty),
            };
            match format {
                Format::Json => pretty_json(&json!(ex
                    .entries
                    .iter()
                    .map(|(mu, p)| json!({
                        "mu": mu,
                        "omega": rs.omega_coords(mu).ok(),
                        "poly": p.coeffs(),
                        "value": eval.map(|t| p.eval(t)),
                    }))
                    .collect::<Vec<_>>())),
                _ => ex
                    .entries
                    .iter()
                    .map(|(mu, p)| format!("{} → {}", omega_label(&rs, mu), value(p)))
                    .collect::<Vec<_>>()
                    .join("\n"),
            }
        }
        Command::LayerSum { system, mu, format } => {
            let rs = RootSystem::new(system.family, system.rank)?;
            let ls = layer_sum(&rs, &Weight(mu))?;
            match format {
                Format::Json => pretty_json(&json!(ls
                    .terms
                    .iter()
                    .map(|(nu, e)| json!({"nu": nu, "exponent": e}))
                    .collect::<Vec<_>>())),
                _ => ls
                    .terms
                    .iter()
                    .map(|(nu, e)| format!("{nu} t^{e}"))
                    .collect::<Vec<_>>()
                    .join("\n"),
            }
        }
        Command::Crystal {
            system,
            lambda,
            dominant,
            format,
        } => {
            let rs = RootSystem::new(system.family, system.rank)?;
            let l = lambda.weight(&rs)?;
            let g = generate_crystal(&rs, &l)?;
            let keep: Vec<usize> = if dominant {
                g.dominant_vertices(&rs)
            } else {
                (0..g.len()).collect()
            };
            match format {
                Format::Json => pretty_json(&json!({
                    "lambda": l,
                    "size": g.len(),
                    "vertices": keep
                        .iter()
                        .map(|&k| json!({"word": g.vertices()[k], "weight": g.weight(k)}))
                        .collect::<Vec<_>>(),
                })),
                _ => {
                    let mut lines = vec![format!("B({l}) has {} vertices", g.len())];
                    lines.extend(
                        keep.iter()
                            .map(|&k| format!("{} {}", g.vertices()[k], g.weight(k))),
                    );
                    lines.join("\n")
                }
            }
        }
        Command::Bplus {
            system,
            lambda,
            lenient,
            format,
        } => {
            let rs = RootSystem::new(system.family, system.rank)?;
            let l = lambda.weight(&rs)?;
            let g = if lenient {
                build_bplus_lenient(&rs, &l)?
            } else {
                build_bplus(&rs, &l)?
            };
            match format {
                Format::Json => export(&g, "json")?,
                Format::Dot => export(&g, "dot")?,
                Format::Text => {
                    let report = verify_atomic(&rs, &g)?;
                    let mut lines = vec![
                        format!("{} vertices, {} edges", g.len(), g.edges().len()),
                        format!("component sizes {:?}", g.component_sizes()),
                    ];
                    for (mu, c) in report.coefficients.iter().filter(|(_, c)| *c > 0) {
                        lines.push(format!("{mu} x{c}"));
                    }
                    lines.push(format!("atomic: {}", report.verdict));
                    lines.join("\n")
                }
            }
        }
        Command::Verify {
            suite,
            max_size,
            max_rank,
            max_height,
            format,
        } => {
            let bounds = Bounds {
                max_size,
                max_rank,
                max_height,
            };
            let report = run_suite(&suite, &bounds)?;
            let text = match format {
                Format::Json => pretty_json(&json!(report)),
                _ => {
                    let mut lines: Vec<String> = report
                        .failures
                        .iter()
                        .map(|f| format!("FAIL {f}"))
                        .collect();
                    lines.push(format!(
                        "{}: {} passed, {} failed",
                        report.suite,
                        report.passed(),
                        report.failures.len()
                    ));
                    lines.join("\n")
                }
            };
            if !report.ok() {
                return Err(Failure::Checks(text));
            }
            text
        }
        Command::Binf {
            n,
            max_size,
            tableau,
            format,
        } => {
            if n < 2 {
                return Err(Error::RankTooSmall {
                    family: 'A',
                    rank: n.saturating_sub(1),
                    min: 1,
                }
                .into());
            }
            if let Some(src) = tableau {
                let m: Multisegment = serde_json::from_str(&src)
                    .map_err(|e| Error::InvalidTableau(format!("bad multisegment JSON: {e}")))?;
                let mut full = Multisegment::empty(n.max(m.n()));
                for ((i, j), k) in m.entries() {
                    full.add(i, j, k);
                }
                return Ok(binf::xi_inverse(&full).to_string());
            }
            let atoms = binf::atoms_up_to(n, max_size);
            match format {
                Format::Json => pretty_json(&json!(atoms)),
                _ => atoms
                    .iter()
                    .map(|a| {
                        format!(
                            "source {} (|S| = {}): {} vertices",
                            a.source,
                            a.source.size(),
                            a.vertices.len()
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n"),
            }
        }
        Command::Mt {
            n,
            beta,
            bound,
            pretty,
        } => {
            if beta.len() + 1 != n {
                return Err(Error::DimensionMismatch(Weight(beta), n - 1).into());
            }
            poly(&binf::mt_via_sources(n, &beta, bound)?, pretty)
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let error_json = cli.error_json;
    match run(cli.command) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Checks(out)) => {
            println!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(e)) => {
            if error_json {
                eprintln!("{}", json!({"error": e.name(), "message": e.to_string()}));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(1)
        }
    }
}
