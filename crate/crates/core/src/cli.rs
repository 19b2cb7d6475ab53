//! Command-line entry points.
//!
//! Exit codes: 0 success, 1 runtime failure, 2 usage error, 3 time limit
//! exceeded (partial history still written).

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bench::scaling::{scaling_experiment, write_rows};
use crate::bench::{builtin_objective, DimSpec, Instance, ObjectiveSpec};
use crate::dist::{AsyncClient, ControlServer, EvalServer};
use crate::error::{Error, Result};
use crate::history::History;
use crate::noise::{NoiseConfig, NoiseMode};
use crate::parameter::{Algorithm, EmbeddingConfig, Parameter};
use crate::poss::recommended_iterations;
use crate::solution::Solution;
use crate::opt_min;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_TIME_LIMIT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "zeroth", version, about = "Derivative-free optimization toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Optimize in this process and write the evaluation history.
    Run(RunArgs),
    /// Run the control server.
    Control {
        #[arg(long, default_value = "127.0.0.1:7000")]
        listen: String,
    },
    /// Run an evaluation server.
    Evalserver {
        #[arg(long)]
        control: String,
        #[arg(long, default_value = "127.0.0.1:0")]
        listen: String,
    },
    /// Run asynchronous SRacos against leased evaluation servers.
    Client(ClientArgs),
    /// Subset selection with POSS on an instance file.
    Poss(PossArgs),
    /// Time one asynchronous run per evaluation server count.
    ScalingExp(ScalingArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AlgoArg {
    Auto,
    Sracos,
    Racos,
    Poss,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum NoiseArg {
    None,
    Resample,
    Suppression,
    Threshold,
}

#[derive(Args, Debug)]
struct ObjectiveArgs {
    /// sphere, ackley, lowdim_sphere, max_coverage, sparse_regression or cmd
    #[arg(long, default_value = "sphere")]
    func: String,
    #[arg(long, default_value_t = 2)]
    dim: usize,
    /// Box bounds `LO,HI` applied to every coordinate.
    #[arg(long, default_value = "-1,1", allow_hyphen_values = true)]
    bounds: String,
    #[arg(long)]
    effective_dims: Option<usize>,
    /// Instance JSON for max_coverage / sparse_regression.
    #[arg(long)]
    instance: Option<PathBuf>,
    /// Shell command for the `cmd` objective.
    #[arg(long)]
    command: Option<String>,
    #[arg(long, default_value_t = 0)]
    delay_loops: u64,
    /// Additive Gaussian noise on every evaluation.
    #[arg(long)]
    noise_sigma: Option<f64>,
}

#[derive(Args, Debug)]
struct SolverArgs {
    #[arg(long)]
    budget: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    train_size: Option<usize>,
    #[arg(long)]
    positive_size: Option<usize>,
    #[arg(long, value_enum, default_value = "none")]
    noise_mode: NoiseArg,
    #[arg(long)]
    resample_m: Option<usize>,
    #[arg(long)]
    suppress_s: Option<usize>,
    #[arg(long)]
    threshold: Option<f64>,
    /// Wall-clock limit in seconds, checked between evaluations.
    #[arg(long)]
    time_limit: Option<f64>,
    /// History CSV.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct RunArgs {
    #[arg(long, value_enum, default_value = "auto")]
    algo: AlgoArg,
    #[command(flatten)]
    objective: ObjectiveArgs,
    #[command(flatten)]
    solver: SolverArgs,
    /// Cardinality bound for binary subset-selection objectives.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    embed_dlow: Option<usize>,
    #[arg(long)]
    sre_stages: Option<usize>,
}

#[derive(Args, Debug)]
struct ClientArgs {
    #[arg(long)]
    control: String,
    #[arg(long, default_value_t = 1)]
    servers: usize,
    /// Seconds to wait for enough servers to register.
    #[arg(long, default_value_t = 10.0)]
    wait: f64,
    #[command(flatten)]
    objective: ObjectiveArgs,
    #[command(flatten)]
    solver: SolverArgs,
}

#[derive(Args, Debug)]
struct PossArgs {
    #[arg(long)]
    instance: PathBuf,
    #[arg(long)]
    k: usize,
    /// Defaults to one more than the recommended iteration count.
    #[arg(long)]
    budget: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ScalingArgs {
    #[arg(long, value_delimiter = ',', default_value = "1,2,4")]
    servers: Vec<usize>,
    #[arg(long, default_value_t = 400)]
    budget: usize,
    #[arg(long, default_value_t = 200_000)]
    delay_loops: u64,
    #[arg(long, default_value = "ackley")]
    func: String,
    #[arg(long, default_value_t = 10)]
    dim: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "scaling.csv")]
    out: PathBuf,
}

fn parse_bounds(s: &str) -> Result<(f64, f64)> {
    let parts: Vec<&str> = s.split(',').collect();
    let parsed: Vec<f64> = parts.iter().filter_map(|p| p.trim().parse().ok()).collect();
    match parsed[..] {
        [lo, hi] if parts.len() == 2 => Ok((lo, hi)),
        _ => Err(Error::config(format!("bounds must look like LO,HI, got `{s}`"))),
    }
}

impl ObjectiveArgs {
    fn spec(&self) -> Result<ObjectiveSpec> {
        let binary = matches!(self.func.as_str(), "max_coverage" | "sparse_regression");
        let mut spec = if binary {
            let path = self
                .instance
                .as_ref()
                .ok_or_else(|| Error::config(format!("--instance is required for {}", self.func)))?;
            let n = Instance::load(path)?.size();
            ObjectiveSpec::new(&self.func, DimSpec::binary(n))
                .with_param("instance", path.to_string_lossy().into_owned())
        } else {
            let (lo, hi) = parse_bounds(&self.bounds)?;
            ObjectiveSpec::new(&self.func, DimSpec::continuous(self.dim, lo, hi))
        };
        if let Some(e) = self.effective_dims {
            spec = spec.with_param("effective_dims", e);
        }
        if let Some(c) = &self.command {
            spec = spec.with_param("command", c.clone());
        }
        if self.delay_loops > 0 {
            spec = spec.with_param("delay_loops", self.delay_loops);
        }
        if let Some(s) = self.noise_sigma {
            spec = spec.with_param("noise_sigma", s);
        }
        Ok(spec)
    }
}

impl SolverArgs {
    fn parameter(&self) -> Parameter {
        let mut p = Parameter::new(self.budget).with_seed(self.seed);
        if let Some(r) = self.train_size {
            p.train_size = r;
        }
        if let Some(k) = self.positive_size {
            p.positive_size = k;
        }
        let mut noise = NoiseConfig {
            mode: match self.noise_mode {
                NoiseArg::None => NoiseMode::None,
                NoiseArg::Resample => NoiseMode::Resample,
                NoiseArg::Suppression => NoiseMode::Suppression,
                NoiseArg::Threshold => NoiseMode::Threshold,
            },
            ..Default::default()
        };
        if let Some(m) = self.resample_m {
            noise.resample = m;
        }
        if let Some(s) = self.suppress_s {
            noise.suppress_period = s;
        }
        if let Some(t) = self.threshold {
            noise.threshold = t;
        }
        p.noise = noise;
        p.time_limit = self.time_limit.map(Duration::from_secs_f64);
        p
    }
}

fn report(best: &Solution) {
    println!("best value {}", best.score());
    let x: Vec<String> = best.x().iter().map(|v| v.to_string()).collect();
    println!("best x {}", x.join(" "));
}

/// Map an optimization result to an exit code after the history is saved.
fn finish(result: Result<Solution>, history: &History, out: Option<&PathBuf>) -> Result<i32> {
    if let Some(path) = out {
        history.write_csv(path)?;
    }
    match result {
        Ok(best) => {
            report(&best);
            Ok(EXIT_OK)
        }
        Err(e @ Error::TimeLimit { .. }) => {
            if let Some(best) = e.partial_best() {
                report(best);
            }
            eprintln!("{e}");
            Ok(EXIT_TIME_LIMIT)
        }
        Err(e) => Err(e),
    }
}

fn cmd_run(args: RunArgs) -> Result<i32> {
    let spec = args.objective.spec()?;
    let mut objective = builtin_objective(&spec)?;
    if let Some(k) = args.k {
        objective = objective.with_constraint(k);
    }
    let mut parameter = args.solver.parameter();
    parameter.algorithm = match args.algo {
        AlgoArg::Auto => Algorithm::Auto,
        AlgoArg::Sracos => Algorithm::Sracos,
        AlgoArg::Racos => Algorithm::Racos,
        AlgoArg::Poss => Algorithm::Poss,
    };
    if let Some(d_low) = args.embed_dlow {
        let mut config = EmbeddingConfig::new(d_low);
        if let Some(s) = args.sre_stages {
            config.stages = s;
        }
        parameter.embedding = Some(config);
    } else if args.sre_stages.is_some() {
        return Err(Error::config("--sre-stages requires --embed-dlow"));
    }
    let result = opt_min(&mut objective, &parameter);
    finish(result, objective.history_log(), args.solver.out.as_ref())
}

fn cmd_control(listen: &str) -> Result<i32> {
    let server = ControlServer::bind(listen)?;
    println!("listening {}", server.local_addr()?);
    std::io::stdout().flush()?;
    server.serve()?;
    Ok(EXIT_OK)
}

fn cmd_evalserver(control: &str, listen: &str) -> Result<i32> {
    let server = EvalServer::bind(listen, control)?;
    println!("registered {}", server.advertised());
    std::io::stdout().flush()?;
    server.serve()?;
    Ok(EXIT_OK)
}

fn cmd_client(args: ClientArgs) -> Result<i32> {
    let spec = args.objective.spec()?;
    let parameter = args.solver.parameter();
    let mut client = AsyncClient::connect(&args.control, args.servers, &spec, Duration::from_secs_f64(args.wait))?;
    eprintln!("leased {} evaluation servers", client.servers().len());
    let result = client.optimize(&parameter);
    let code = finish(result, client.history(), args.solver.out.as_ref());
    client.close()?;
    code
}

fn cmd_poss(args: PossArgs) -> Result<i32> {
    let instance = Instance::load(&args.instance)?;
    let name = match instance {
        Instance::MaxCoverage { .. } => "max_coverage",
        Instance::SparseRegression { .. } => "sparse_regression",
    };
    let n = instance.size();
    let spec = ObjectiveSpec::new(name, DimSpec::binary(n))
        .with_param("instance", args.instance.to_string_lossy().into_owned());
    let mut objective = builtin_objective(&spec)?.with_constraint(args.k);
    let budget = args.budget.unwrap_or_else(|| recommended_iterations(n, args.k) + 1);
    let parameter = Parameter::new(budget).with_seed(args.seed).with_algorithm(Algorithm::Poss);
    let result = opt_min(&mut objective, &parameter);
    if let Ok(best) = &result {
        let chosen: Vec<String> =
            best.x().iter().enumerate().filter(|(_, &v)| v != 0.0).map(|(i, _)| i.to_string()).collect();
        println!("selected {}", chosen.join(" "));
    }
    finish(result, objective.history_log(), args.out.as_ref())
}

fn cmd_scaling(args: ScalingArgs) -> Result<i32> {
    if args.servers.contains(&0) {
        return Err(Error::config("server counts must be positive"));
    }
    let spec = ObjectiveSpec::new(&args.func, DimSpec::continuous(args.dim, -1.0, 1.0))
        .with_param("delay_loops", args.delay_loops);
    let parameter = Parameter::new(args.budget).with_seed(args.seed);
    let exe = std::env::current_exe()?;
    let rows = scaling_experiment(&exe, &args.servers, &spec, &parameter)?;
    for r in &rows {
        println!("servers {} wall_ms {}", r.servers, r.wall_ms);
    }
    write_rows(&args.out, &rows)?;
    Ok(EXIT_OK)
}

/// Parse `argv` (including the program name) and run the subcommand.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
        }
    };
    let result = match cli.command {
        Cmd::Run(a) => cmd_run(a),
        Cmd::Control { listen } => cmd_control(&listen),
        Cmd::Evalserver { control, listen } => cmd_evalserver(&control, &listen),
        Cmd::Client(a) => cmd_client(a),
        Cmd::Poss(a) => cmd_poss(a),
        Cmd::ScalingExp(a) => cmd_scaling(a),
    };
    match result {
        Ok(code) => code,
        Err(e @ Error::Config(_)) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_FAILURE
        }
    }
}
