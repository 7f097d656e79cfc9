use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use mwcp::bench::{run_bench, Algo};
use mwcp::generators::{gen_ngon_family, gen_uniform, WeightRange};
use mwcp::model::{canonicalize, evaluate_any, lift_solution, parse_instance, write_instance};
use mwcp::reduction::{parse_graph, reduce_is_to_mwcp, verify_edge_gadget, DEFAULT_GADGET_VERTEX_LIMIT};
use mwcp::{oracle, EmptyPolicy, Error, Solution};

#[derive(Parser)]
#[command(name = "mwcp", version, about = "Maximum weight convex polytope solvers and instance tools")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    Auto,
    Dp1d,
    Dp2d,
    Oracle,
}

impl From<AlgoArg> for Algo {
    fn from(a: AlgoArg) -> Algo {
        match a {
            AlgoArg::Auto => Algo::Auto,
            AlgoArg::Dp1d => Algo::Dp1d,
            AlgoArg::Dp2d => Algo::Dp2d,
            AlgoArg::Oracle => Algo::Oracle,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Uniform,
    Ngon,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyMode {
    Gadget,
    Solution,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance file.
    Solve {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        algo: AlgoArg,
        /// Report the best nonempty polytope even when it has negative weight.
        #[arg(long)]
        nonempty: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Upper bound on positive points for the oracle.
        #[arg(long, env = "MWCP_ORACLE_LIMIT", default_value_t = oracle::DEFAULT_LIMIT)]
        oracle_limit: usize,
    },
    /// Turn a graph file into a 4D instance whose optimum is its independence number.
    Reduce {
        graph: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Generate an instance family.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = -5, allow_negative_numbers = true)]
        min_weight: i64,
        #[arg(long, default_value_t = 5, allow_negative_numbers = true)]
        max_weight: i64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check the edge gadgets of a reduced instance, or a solution against its instance.
    Verify {
        instance: PathBuf,
        #[arg(long, value_enum)]
        mode: VerifyMode,
        /// Solution file (text or JSON) for `--mode solution`.
        #[arg(long, required_if_eq("mode", "solution"))]
        solution: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_GADGET_VERTEX_LIMIT)]
        max_vertices: usize,
    },
    /// Time a solver on seeded uniform instances and print CSV.
    Bench {
        #[arg(long, value_enum, default_value = "dp2d")]
        algo: AlgoArg,
        #[arg(long, value_delimiter = ',', default_value = "100,200,400")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
    },
}

enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render(solution: &Solution, format: Format) -> String {
    match format {
        Format::Text => solution.to_text(),
        Format::Json => solution.to_json() + "\n",
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Solve {
            input,
            algo,
            nonempty,
            format,
            oracle_limit,
        } => {
            let original = parse_instance(&read(&input)?)?;
            let instance = canonicalize(&original);
            let policy = if nonempty { EmptyPolicy::Forbid } else { EmptyPolicy::Allow };
            let solution = Algo::from(algo).run(&instance, policy, oracle_limit)?;
            let solution = lift_solution(&original, &solution)?;
            emit(None, &render(&solution, format))
        }
        Command::Reduce { graph, out } => {
            let graph = parse_graph(&read(&graph)?)?;
            emit(out.as_deref(), &write_instance(&reduce_is_to_mwcp(&graph)))
        }
        Command::Gen {
            family,
            n,
            dim,
            seed,
            min_weight,
            max_weight,
            out,
        } => {
            let instance = match family {
                Family::Uniform => gen_uniform(n, dim, seed, WeightRange::new(min_weight, max_weight)?)?,
                Family::Ngon => gen_ngon_family(n)?,
            };
            emit(out.as_deref(), &write_instance(&instance))
        }
        Command::Verify {
            instance,
            mode,
            solution,
            max_vertices,
        } => {
            let instance = parse_instance(&read(&instance)?)?;
            match mode {
                VerifyMode::Gadget => {
                    let report = verify_edge_gadget(&instance, max_vertices)?;
                    println!(
                        "subsets: {}\nmembership tests: {}\nviolations: {}",
                        report.subsets,
                        report.membership_tests,
                        report.violations.len()
                    );
                    for v in &report.violations {
                        println!(
                            "  vertices {:?}: point {} {}",
                            v.vertices,
                            v.negative_point,
                            if v.inside { "inside" } else { "outside" }
                        );
                    }
                    if !report.passed() {
                        return Err(Error::Verification("edge gadget violated".into()).into());
                    }
                    Ok(())
                }
                VerifyMode::Solution => {
                    let path = solution.expect("clap enforces --solution");
                    let claimed = Solution::parse(&read(&path)?)?;
                    let actual = evaluate_any(&instance, &claimed.chosen)?;
                    if actual != claimed {
                        return Err(Error::Verification(format!(
                            "solution file does not match its polytope; recomputed:\n{}",
                            actual.to_text()
                        ))
                        .into());
                    }
                    println!("ok: weight {}", actual.weight);
                    Ok(())
                }
            }
        }
        Command::Bench {
            algo,
            sizes,
            seed,
            repeats,
        } => {
            let report = run_bench(algo.into(), &sizes, seed, repeats, WeightRange::default())?;
            print!("{}", report.to_csv());
            match report.slope {
                Some(slope) => eprintln!("slope: {slope:.3}"),
                None => eprintln!("slope: n/a"),
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Io(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Parse { .. } => 2,
                Error::OracleLimit { .. } => 3,
                Error::Verification(_) | Error::NotMaximal { .. } => 4,
                Error::Contract(_) | Error::Construction(_) => 1,
            })
        }
    }
}
