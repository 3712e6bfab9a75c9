use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use bel::commands::{self, Options, Relabel};
use bel::report::{Report, Results};
use bel::suite::SuiteOptions;
use bel::{Error, FieldKind, Graph};

/// Binomial edge ideals: Gröbner bases, minimal primes, symbolic powers and
/// graph-class recognizers.
#[derive(Parser)]
#[command(name = "bel", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Coefficient field: `q` for the rationals, `fp:<p>` for a prime field.
    #[arg(long, global = true, default_value = "q")]
    field: FieldKind,

    /// Largest vertex count for the 2^n prime enumeration.
    #[arg(long, global = true, default_value_t = bel::decomp::PRIME_ENUMERATION_CAP)]
    max_n: usize,

    /// Largest vertex count for exhaustive labeling searches.
    #[arg(long, global = true, default_value_t = bel::graph::LABELING_SEARCH_CAP)]
    labeling_cap: usize,

    /// Largest vertex count for the exhaustive m-closed minimum.
    #[arg(long, global = true, default_value_t = bel::graph::MIN_DEGREE_SEARCH_CAP)]
    m_closed_cap: usize,

    /// Leave timings out of reports, making output deterministic.
    #[arg(long, global = true)]
    no_timings: bool,
}

#[derive(Args)]
struct GraphArg {
    /// Graph file (`-` for standard input).
    graph: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Run every graph-class recognizer.
    Classify(GraphArg),
    /// Combinatorial Gröbner basis of the binomial edge ideal.
    Gb {
        #[command(flatten)]
        input: GraphArg,
        /// Compare against Buchberger's algorithm.
        #[arg(long)]
        check_buchberger: bool,
        /// Relabel first: none, caterpillar or gencat.
        #[arg(long, default_value = "none")]
        relabel: Relabel,
    },
    /// Minimal primes of the binomial edge ideal.
    Primes(GraphArg),
    /// Compare the t-th ordinary and symbolic powers.
    Powers {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long, default_value_t = 2)]
        t: usize,
    },
    /// Facet complex of the initial ideal.
    Complex {
        #[command(flatten)]
        input: GraphArg,
        /// Search for a special odd cycle.
        #[arg(long)]
        special_odd_cycles: bool,
        #[arg(long, default_value = "none")]
        relabel: Relabel,
    },
    /// Run the verification suite.
    Suite {
        /// Skip the slowest case.
        #[arg(long)]
        quick: bool,
        /// Worker threads (default: one per core).
        #[arg(long)]
        threads: Option<usize>,
        /// Sampled connected graphs on six vertices.
        #[arg(long, default_value_t = 25)]
        samples: usize,
        #[arg(long, default_value_t = bel::corpus::SAMPLE_SEED)]
        seed: u64,
        /// Graph file replacing the built-in net.
        #[arg(long)]
        net: Option<PathBuf>,
    },
}

fn read_graph(arg: &GraphArg) -> Result<Graph, String> {
    let text = if arg.graph.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
        s
    } else {
        std::fs::read_to_string(&arg.graph).map_err(|e| format!("{}: {e}", arg.graph.display()))?
    };
    Graph::parse(&text).map_err(|e| format!("{}: {e}", arg.graph.display()))
}

/// Write to stdout, ignoring a closed pipe.
fn out(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn emit(report: &Report, json: bool) {
    if json {
        out(&(report.to_json() + "\n"));
    } else {
        out(&commands::render_text(report));
    }
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(e.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = Options {
        field: cli.field,
        max_n: cli.max_n,
        labeling_cap: cli.labeling_cap,
        m_closed_cap: cli.m_closed_cap,
        timings: !cli.no_timings,
    };
    let result = match &cli.command {
        Command::Classify(input) => read_graph(input).map(|g| commands::classify(&g, &opts)),
        Command::Gb { input, check_buchberger, relabel } => {
            read_graph(input).map(|g| commands::gb(&g, *relabel, *check_buchberger, &opts))
        }
        Command::Primes(input) => read_graph(input).map(|g| commands::primes(&g, &opts)),
        Command::Powers { input, t } => read_graph(input).map(|g| commands::powers(&g, *t, &opts)),
        Command::Complex { input, special_odd_cycles, relabel } => {
            read_graph(input).map(|g| commands::complex(&g, *relabel, *special_odd_cycles, &opts))
        }
        Command::Suite { quick, threads, samples, seed, net } => {
            let prime = match cli.field {
                FieldKind::Prime(p) => p,
                FieldKind::Rational => bel::poly::DEFAULT_PRIME,
            };
            let net = match net {
                Some(path) => read_graph(&GraphArg { graph: path.clone() }),
                None => Ok(bel::graph::net_graph()),
            };
            let json = cli.json;
            net.map(|net| {
                let suite_opts =
                    SuiteOptions { quick: *quick, samples: *samples, seed: *seed, prime, threads: *threads, net };
                Ok(commands::suite(&suite_opts, &opts, |record| {
                    if !json {
                        out(&(record.line() + "\n"));
                    }
                }))
            })
        }
    };
    let report = match result {
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Ok(Err(e)) => return fail(&e),
        Ok(Ok(report)) => report,
    };
    match &report.results {
        Results::Suite(s) => {
            if cli.json {
                emit(&report, true);
            }
            if !s.all_passed() {
                return ExitCode::from(1);
            }
        }
        Results::Gb(gb) => {
            emit(&report, cli.json);
            if gb.buchberger_agrees == Some(false) {
                eprintln!("combinatorial basis differs from Buchberger's");
                return ExitCode::from(1);
            }
        }
        Results::Powers(p) => {
            emit(&report, cli.json);
            if !p.ordinary_in_symbolic {
                eprintln!("ordinary power is not contained in the symbolic power");
                return ExitCode::from(1);
            }
        }
        _ => emit(&report, cli.json),
    }
    ExitCode::SUCCESS
}
