use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ifdo_core::applications::antenna::is_feasible;
use ifdo_core::applications::{
    build_scenario, constraint_violation, AntennaProblem, EvacScenario, TimeFormula,
};
use ifdo_core::harness::{
    comparison_table, default_fdo_wf, export_results, export_search_history, export_trace,
    run_experiment, run_experiment_with, summary_row, ExportFormat, SUMMARY_HEADER,
};
use ifdo_core::objectives::{
    antenna_spec, catalog, cec_catalog, evac_spec, resolve, DEFAULT_EVAC_COUNT,
    DEFAULT_EVAC_HEIGHT, DEFAULT_EVAC_WIDTH,
};
use ifdo_core::{
    Error, ExperimentConfig, ExperimentResult, Mode, ObjectiveId, ObjectiveSpec, WfScope,
};

const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(
    name = "ifdo",
    version,
    about = "Fitness-dependent optimizer (FDO / IFDO)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Repeated runs of one algorithm on one objective.
    Run(RunArgs),
    /// Both algorithms over a whole benchmark suite.
    Bench(BenchArgs),
    /// Side-by-side table for every function/algorithm pair given.
    Compare(CompareArgs),
    /// Sidelobe suppression for the 10-element aperiodic array.
    Antenna(AntennaArgs),
    /// Exit placement on the perimeter of a rectangular area.
    Evac(EvacArgs),
    /// Every objective with its dimension, bounds and known floor.
    List,
}

#[derive(Args, Clone)]
struct Common {
    /// Random seed; run k uses seed + k.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Weight-factor bookkeeping in IFDO.
    #[arg(long, default_value = "scout")]
    wf_scope: WfScope,
    /// Fixed FDO weight factor (0 or 1); defaults to 1 on TF2/TF8, 0 elsewhere.
    #[arg(long, value_parser = parse_fdo_wf)]
    fdo_wf: Option<f64>,
    /// Worker threads for independent runs.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: u64,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    function: ObjectiveId,
    #[arg(long, default_value = "ifdo")]
    algo: Mode,
    #[arg(long, default_value_t = 30, value_parser = positive)]
    agents: usize,
    #[arg(long, default_value_t = 500, value_parser = positive)]
    iters: usize,
    #[arg(long, default_value_t = 1, value_parser = positive)]
    runs: usize,
    /// Summary file.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Format of the summary file.
    #[arg(long, default_value = "csv")]
    format: ExportFormat,
    /// Per-iteration best-fitness CSV.
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Per-agent position CSV (enables position recording).
    #[arg(long)]
    history: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Suite {
    Classical,
    Cec2019,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long)]
    suite: Suite,
    #[arg(long, default_value_t = 30, value_parser = positive)]
    agents: usize,
    #[arg(long, default_value_t = 500, value_parser = positive)]
    iters: usize,
    #[arg(long, default_value_t = 30, value_parser = positive)]
    runs: usize,
    /// Summary CSV, one row appended per finished experiment.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct CompareArgs {
    /// Repeatable.
    #[arg(long = "function", required = true)]
    functions: Vec<ObjectiveId>,
    /// Repeatable; defaults to both.
    #[arg(long = "algo")]
    algos: Vec<Mode>,
    #[arg(long, default_value_t = 30, value_parser = positive)]
    agents: usize,
    #[arg(long, default_value_t = 500, value_parser = positive)]
    iters: usize,
    #[arg(long, default_value_t = 30, value_parser = positive)]
    runs: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct AntennaArgs {
    #[arg(long, default_value = "ifdo")]
    algo: Mode,
    #[arg(long, default_value_t = 20, value_parser = positive)]
    agents: usize,
    #[arg(long, default_value_t = 200, value_parser = positive)]
    iters: usize,
    /// Angular sampling step in degrees.
    #[arg(long, default_value_t = 0.25)]
    grid_step: f64,
    #[arg(long)]
    trace: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct EvacArgs {
    #[arg(long, default_value = "ifdo")]
    algo: Mode,
    #[arg(long, default_value_t = 20, value_parser = positive)]
    agents: usize,
    #[arg(long, default_value_t = 200, value_parser = positive)]
    iters: usize,
    #[arg(long, default_value_t = DEFAULT_EVAC_WIDTH)]
    width: f64,
    #[arg(long, default_value_t = DEFAULT_EVAC_HEIGHT)]
    height: f64,
    #[arg(long, default_value_t = DEFAULT_EVAC_COUNT, value_parser = positive)]
    count: usize,
    #[arg(long, default_value = "paper")]
    formula: TimeFormula,
    /// Read pedestrians from this file instead of generating them.
    #[arg(long, conflicts_with_all = ["width", "height", "count"])]
    scenario: Option<PathBuf>,
    /// Seed for the generated scenario.
    #[arg(long, default_value_t = 0)]
    scenario_seed: u64,
    /// Save the scenario that was used.
    #[arg(long)]
    save_scenario: Option<PathBuf>,
    #[arg(long)]
    trace: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_fdo_wf(s: &str) -> Result<f64, String> {
    match s {
        "0" => Ok(0.0),
        "1" => Ok(1.0),
        _ => Err("expected 0 or 1".into()),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Io { .. } | Error::Parse { .. } => EXIT_IO,
        _ => EXIT_USAGE,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Run(a) => cmd_run(a),
        Command::Bench(a) => cmd_bench(a),
        Command::Compare(a) => cmd_compare(a),
        Command::Antenna(a) => cmd_antenna(a),
        Command::Evac(a) => cmd_evac(a),
        Command::List => cmd_list(),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn experiment(
    id: ObjectiveId,
    mode: Mode,
    agents: usize,
    iters: usize,
    runs: usize,
    common: &Common,
) -> ExperimentConfig {
    let fdo_wf = common.fdo_wf.unwrap_or_else(|| default_fdo_wf(&id));
    ExperimentConfig {
        runs,
        population: agents,
        iterations: iters,
        base_seed: common.seed,
        fdo_wf,
        wf_scope: common.wf_scope,
        jobs: common.jobs as usize,
        ..ExperimentConfig::new(id, mode)
    }
}

fn print_runs(result: &ExperimentResult) {
    for (k, r) in result.runs.iter().enumerate() {
        eprintln!("run {k} seed {} done: best {:.16e}", r.seed, r.best_fitness);
    }
}

fn cmd_run(a: RunArgs) -> Result<(), Error> {
    let mut cfg = experiment(a.function, a.algo, a.agents, a.iters, a.runs, &a.common);
    cfg.record_positions = a.history.is_some();
    let result = run_experiment(&cfg)?;
    print_runs(&result);
    println!(
        "{} {} runs={} agents={} iters={} mean={:.16e} std={:.16e}",
        cfg.objective, cfg.mode, cfg.runs, cfg.population, cfg.iterations, result.mean, result.std
    );
    for r in &result.runs {
        println!(
            "seed={} best={:.16e} first_best_iteration={}",
            r.seed, r.best_fitness, r.first_best_iteration
        );
    }
    if let Some(p) = &a.out {
        export_results(&result, a.format, p)?;
    }
    if let Some(p) = &a.trace {
        export_trace(&result, p)?;
    }
    if let Some(p) = &a.history {
        export_search_history(&result, p)?;
    }
    Ok(())
}

struct RowWriter {
    out: Option<(PathBuf, BufWriter<File>)>,
}

impl RowWriter {
    fn create(path: Option<&Path>) -> Result<Self, Error> {
        let out = match path {
            None => None,
            Some(p) => {
                let f = File::create(p).map_err(|e| io_err(p, e))?;
                Some((p.to_path_buf(), BufWriter::new(f)))
            }
        };
        let mut w = RowWriter { out };
        w.line(SUMMARY_HEADER)?;
        Ok(w)
    }

    // Whole rows are flushed one at a time so an interrupted suite leaves valid CSV.
    fn line(&mut self, text: &str) -> Result<(), Error> {
        if let Some((p, w)) = self.out.as_mut() {
            writeln!(w, "{text}")
                .and_then(|_| w.flush())
                .map_err(|e| io_err(p, e))?;
        }
        Ok(())
    }
}

fn io_err(path: &Path, source: std::io::Error) -> Error {
    Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn run_all(configs: &[ExperimentConfig], out: Option<&Path>) -> Result<(), Error> {
    let mut writer = RowWriter::create(out)?;
    let mut results = Vec::with_capacity(configs.len());
    for cfg in configs {
        let r = run_experiment(cfg)?;
        eprintln!("{} {} done: mean {:.16e}", cfg.objective, cfg.mode, r.mean);
        writer.line(&summary_row(&r))?;
        results.push(r);
    }
    print!("{}", comparison_table(&results));
    Ok(())
}

fn cmd_bench(a: BenchArgs) -> Result<(), Error> {
    let specs = match a.suite {
        Suite::Classical => catalog(),
        Suite::Cec2019 => cec_catalog(),
    };
    let configs: Vec<ExperimentConfig> = specs
        .into_iter()
        .flat_map(|s| [Mode::Fdo, Mode::Ifdo].map(|m| (s.id.clone(), m)))
        .map(|(id, m)| experiment(id, m, a.agents, a.iters, a.runs, &a.common))
        .collect();
    run_all(&configs, a.out.as_deref())
}

fn cmd_compare(a: CompareArgs) -> Result<(), Error> {
    let algos = if a.algos.is_empty() {
        vec![Mode::Fdo, Mode::Ifdo]
    } else {
        a.algos
    };
    let configs: Vec<ExperimentConfig> = a
        .functions
        .iter()
        .flat_map(|f| algos.iter().map(move |&m| (f.clone(), m)))
        .map(|(id, m)| experiment(id, m, a.agents, a.iters, a.runs, &a.common))
        .collect();
    if configs.len() < 2 {
        return Err(Error::Config(
            "compare needs at least two function/algorithm pairs".into(),
        ));
    }
    run_all(&configs, a.out.as_deref())
}

fn single_run(
    spec: &ObjectiveSpec,
    mode: Mode,
    agents: usize,
    iters: usize,
    common: &Common,
    trace: Option<&Path>,
) -> Result<ExperimentResult, Error> {
    let cfg = experiment(spec.id.clone(), mode, agents, iters, 1, common);
    let result = run_experiment_with(&cfg, spec)?;
    if let Some(p) = trace {
        export_trace(&result, p)?;
    }
    Ok(result)
}

fn cmd_antenna(a: AntennaArgs) -> Result<(), Error> {
    if !(a.grid_step > 0.0 && a.grid_step <= 180.0) {
        return Err(Error::Argument("--grid-step must lie in (0, 180]".into()));
    }
    let problem = AntennaProblem::new(a.grid_step, AntennaProblem::default().main_lobe_cos);
    let spec = antenna_spec(problem.clone());
    let result = single_run(
        &spec,
        a.algo,
        a.agents,
        a.iters,
        &a.common,
        a.trace.as_deref(),
    )?;
    let run = &result.runs[0];
    let positions: Vec<String> = run
        .best_position
        .iter()
        .map(|v| format!("{v:.6}"))
        .collect();
    println!("algorithm: {}", a.algo);
    println!(
        "positions (wavelengths): {} | fixed {}",
        positions.join(" "),
        problem.fixed_position
    );
    println!("peak sidelobe level (dB): {:.6}", run.best_fitness);
    println!("first best iteration: {}", run.first_best_iteration);
    if !is_feasible(&run.best_position, &problem) {
        println!(
            "INFEASIBLE (violation {:.6})",
            constraint_violation(&run.best_position, &problem)
        );
    }
    Ok(())
}

fn cmd_evac(a: EvacArgs) -> Result<(), Error> {
    let scenario = match &a.scenario {
        Some(p) => EvacScenario::read(p, a.formula)?,
        None => {
            let mut s = build_scenario(a.width, a.height, a.count, a.scenario_seed)?;
            s.formula = a.formula;
            s
        }
    };
    if let Some(p) = &a.save_scenario {
        scenario.write(p)?;
    }
    let spec = evac_spec(scenario.clone());
    let result = single_run(
        &spec,
        a.algo,
        a.agents,
        a.iters,
        &a.common,
        a.trace.as_deref(),
    )?;
    let run = &result.runs[0];
    let s = run.best_position[0];
    let (x, y) = scenario.exit_point(s);
    println!("algorithm: {}", a.algo);
    println!(
        "area: {} x {}, pedestrians: {}",
        scenario.width(),
        scenario.height(),
        scenario.pedestrians().len()
    );
    println!(
        "exit parameter: {s:.6} of perimeter {}",
        scenario.perimeter()
    );
    println!("exit point: ({x:.6}, {y:.6})");
    println!("mean evacuation time: {:.6}", run.best_fitness);
    println!("first best iteration: {}", run.first_best_iteration);
    Ok(())
}

fn fmt_opt(v: Option<f64>) -> String {
    match v {
        None => "-".into(),
        Some(v) if v != 0.0 && v.abs() < 1e-3 => format!("{v:e}"),
        Some(v) => format!("{v}"),
    }
}

fn bounds_text(spec: &ObjectiveSpec) -> String {
    let (lo, hi) = (spec.bounds.lower(), spec.bounds.upper());
    if lo.iter().all(|&v| v == lo[0]) && hi.iter().all(|&v| v == hi[0]) {
        format!("[{},{}]", lo[0], hi[0])
    } else {
        "per-dimension".into()
    }
}

fn cmd_list() -> Result<(), Error> {
    println!(
        "{:<8} {:>4} {:>18} {:>22} {:>12}",
        "id", "dim", "bounds", "known_fmin", "tabulated"
    );
    let apps = [
        resolve(&ObjectiveId::Antenna)?,
        resolve(&ObjectiveId::Evac)?,
    ];
    for spec in catalog()
        .iter()
        .chain(cec_catalog().iter())
        .chain(apps.iter())
    {
        println!(
            "{:<8} {:>4} {:>18} {:>22} {:>12}",
            spec.id.to_string(),
            spec.dimension(),
            bounds_text(spec),
            fmt_opt(spec.known_fmin),
            fmt_opt(spec.tabulated_fmin)
        );
    }
    Ok(())
}
