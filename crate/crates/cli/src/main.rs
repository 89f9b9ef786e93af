use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use vsglb_core::bench::{
    generate_one, makespan_csv, ratio_csv, scenario_makespan, scenario_ratio, shuffled_order,
    GenSpec, Scenario, DEFAULT_TRIALS,
};
use vsglb_core::io::{
    parse_assignment, parse_vs_instance, write_assignment, write_glb_instance, write_vs_instance,
};
use vsglb_core::online::{ceil_ln, given_order, OpCounts, SpedUpScheduler};
use vsglb_core::{
    brute_force_opt, encode, glb_to_vs, list_schedule, vs_makespan, GlbAssignment, Tau,
    VsAssignment, VsInstance,
};

/// Online vector scheduling through generalized load balancing.
#[derive(Parser, Debug)]
#[command(name = "vsglb", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Encode a vector scheduling instance as a GLB instance.
    Reduce {
        vs_file: PathBuf,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Map a job assignment of the reduced instance back to partitions.
    Lift {
        /// One machine index per line.
        glb_assignment: PathBuf,
        #[arg(long)]
        instance: PathBuf,
    },
    /// Schedule an instance and print one partition index per line plus the
    /// makespan.
    Solve {
        vs_file: PathBuf,
        #[arg(long, value_enum)]
        algo: AlgoArg,
        /// `given` or `shuffled:<seed>`.
        #[arg(long, default_value = "given")]
        order: String,
        /// Integer norm exponent overriding the default.
        #[arg(long)]
        tau: Option<u32>,
        /// Print operation counters.
        #[arg(long)]
        stats: bool,
    },
    /// Run a simulation scenario and write its CSV.
    Bench {
        #[arg(long, value_enum)]
        scenario: ScenarioArg,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Write one seeded uniform instance.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        trial: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum AlgoArg {
    #[value(name = "alg1-real")]
    Alg1Real,
    #[value(name = "alg1-int")]
    Alg1Int,
    Alg2,
    List,
    Optimal,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ScenarioArg {
    Ratio,
    Makespan,
}

type CliResult<T> = Result<T, String>;

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_instance(path: &Path) -> CliResult<VsInstance> {
    parse_vs_instance(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(output: Option<&Path>, text: &str) -> CliResult<()> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_order(spec: &str, n: usize) -> CliResult<Vec<usize>> {
    match spec.split_once(':') {
        None if spec == "given" => Ok(given_order(n)),
        Some(("shuffled", seed)) => seed
            .parse::<u64>()
            .map(|s| shuffled_order(n, s))
            .map_err(|_| format!("bad shuffle seed {seed:?}")),
        _ => Err(format!(
            "order must be `given` or `shuffled:<seed>`, got {spec:?}"
        )),
    }
}

fn print_counts(c: &OpCounts) {
    println!("additions {}", c.additions);
    println!("multiplications {}", c.multiplications);
    println!("powers {}", c.powers);
    println!("subtractions {}", c.subtractions);
    println!("comparisons {}", c.comparisons);
}

fn print_solution(inst: &VsInstance, asg: &VsAssignment) -> CliResult<()> {
    print!("{}", write_assignment(asg.targets()));
    let makespan = vs_makespan(inst, asg).map_err(|e| e.to_string())?;
    println!("makespan {makespan}");
    Ok(())
}

fn solve(path: &Path, algo: AlgoArg, order: &str, tau: Option<u32>, stats: bool) -> CliResult<()> {
    let inst = read_instance(path)?;
    let order = parse_order(order, inst.n())?;
    let machines = inst.m() * inst.d();
    let err = |e: vsglb_core::Error| e.to_string();
    match algo {
        AlgoArg::Alg1Real | AlgoArg::Alg1Int => {
            let tau = match (tau, algo) {
                (Some(t), _) => Tau::Explicit(f64::from(t)),
                (None, AlgoArg::Alg1Real) => Tau::RealLn,
                (None, _) => Tau::IntCeil,
            };
            let mut counts = OpCounts::default();
            let asg = vsglb_core::online::vs_online_alg1_with(&inst, tau, &order, &mut counts)
                .map_err(err)?;
            print_solution(&inst, &asg)?;
            if stats {
                let exp = tau.exponent(machines).map_err(err)?;
                println!("tau {}", exp.value());
                print_counts(&counts);
            }
        }
        AlgoArg::Alg2 => {
            let mut sched =
                SpedUpScheduler::with_tau(&inst, tau.unwrap_or(ceil_ln(machines))).map_err(err)?;
            sched.run(&order).map_err(err)?;
            let counts = sched.counts();
            let tau = sched.tau();
            let asg = sched.into_assignment().map_err(err)?;
            print_solution(&inst, &asg)?;
            if stats {
                println!("tau {tau}");
                print_counts(&counts);
            }
        }
        AlgoArg::List | AlgoArg::Optimal if tau.is_some() => {
            return Err("--tau only applies to alg1-real, alg1-int and alg2".into());
        }
        AlgoArg::List => {
            let asg = list_schedule(&inst, &order).map_err(err)?;
            print_solution(&inst, &asg)?;
        }
        AlgoArg::Optimal => {
            let res = brute_force_opt(&inst).map_err(err)?;
            print_solution(&inst, &res.witness)?;
            if stats {
                println!("explored {}", res.explored);
            }
        }
    }
    Ok(())
}

fn bench(scenario: Scenario, seed: u64, trials: usize, output: &Path) -> CliResult<bool> {
    match scenario {
        Scenario::Ratio => {
            let report = scenario_ratio(seed, trials).map_err(|e| e.to_string())?;
            emit(Some(output), &ratio_csv(&report.records))?;
            println!("algo,min,q1,median,q3,max,mean");
            for (algo, s) in &report.stats {
                println!(
                    "{algo},{},{},{},{},{},{}",
                    s.min,
                    s.q1,
                    s.median,
                    s.q3,
                    s.max,
                    report.mean_ratio(*algo).unwrap_or(f64::NAN)
                );
            }
            for v in &report.violations {
                eprintln!("bound violated: {v}");
            }
            Ok(report.violations.is_empty())
        }
        Scenario::Makespan => {
            let report = scenario_makespan(seed, trials).map_err(|e| e.to_string())?;
            let csv = makespan_csv(&report.summary);
            emit(Some(output), &csv)?;
            print!("{csv}");
            Ok(true)
        }
    }
}

fn run(cli: Cli) -> CliResult<bool> {
    match cli.command {
        Command::Reduce { vs_file, output } => {
            let inst = read_instance(&vs_file)?;
            emit(output.as_deref(), &write_glb_instance(encode(&inst).glb()))?;
        }
        Command::Lift {
            glb_assignment,
            instance,
        } => {
            let inst = read_instance(&instance)?;
            let targets = parse_assignment(&read(&glb_assignment)?)
                .map_err(|e| format!("{}: {e}", glb_assignment.display()))?;
            let red = encode(&inst);
            let asg = glb_to_vs(&GlbAssignment::new(targets), &red).map_err(|e| e.to_string())?;
            print_solution(&inst, &asg)?;
        }
        Command::Solve {
            vs_file,
            algo,
            order,
            tau,
            stats,
        } => solve(&vs_file, algo, &order, tau, stats)?,
        Command::Bench {
            scenario,
            seed,
            trials,
            output,
        } => {
            let scenario = match scenario {
                ScenarioArg::Ratio => Scenario::Ratio,
                ScenarioArg::Makespan => Scenario::Makespan,
            };
            return bench(scenario, seed, trials, &output);
        }
        Command::Generate {
            n,
            m,
            d,
            seed,
            trial,
            output,
        } => {
            let spec = GenSpec {
                n,
                m,
                d,
                seed,
                trials: trial + 1,
            };
            let inst = generate_one(&spec, trial).map_err(|e| e.to_string())?;
            emit(output.as_deref(), &write_vs_instance(&inst))?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
