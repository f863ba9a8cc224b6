//! Command-line front end: simulate trajectories, dump stationary states,
//! sweep convergence speeds over graph families, and run the identity
//! checks, all against graphs given as `cycle:N`, `complete:N`,
//! `circulant:N:k`, or `file:PATH` specs.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tailwalk::operators::{
    adjacency_evolution, adjacency_matrix, incidence_map, intertwining_map, shift_operator,
    truncated_evolution,
};
use tailwalk::sweep::{self, ExperimentConfig, GraphFamily};
use tailwalk::text::{sig12, sig17};
use tailwalk::verify::verify_suite;
use tailwalk::walk::{self, DEFAULT_T_MAX};
use tailwalk::Digraph;

const EXIT_USAGE: u8 = 1;
const EXIT_VERIFY_FAILED: u8 = 2;
const EXIT_NOT_CONVERGED: u8 = 3;

#[derive(Parser)]
#[command(name = "tailwalk", version, about = "Grover walk simulator for graphs with tails")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the dynamics and emit one CSV row per step.
    Simulate {
        /// Graph spec: cycle:N | complete:N | circulant:N:k | file:PATH
        #[arg(long)]
        graph: String,
        /// Number of steps to simulate.
        #[arg(long)]
        steps: usize,
        /// Write the operator matrices as text files in the current directory.
        #[arg(long)]
        dump_operators: bool,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the stationary state and stationary measure.
    Stationary {
        #[arg(long)]
        graph: String,
    },
    /// Sweep convergence speeds over a graph family and emit CSV records.
    Speed {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Inclusive vertex-count range, e.g. 6..30.
        #[arg(long, value_parser = parse_range)]
        n_range: (usize, usize),
        /// Circulant offset (required for --family circulant).
        #[arg(long)]
        k: Option<usize>,
        /// Comma-separated list of thresholds theta (distance < e^-theta).
        #[arg(long, value_delimiter = ',', default_value = "0")]
        theta: Vec<f64>,
        /// Step budget per graph.
        #[arg(long, default_value_t = DEFAULT_T_MAX)]
        tmax: usize,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the identity-check suite against a graph.
    Verify {
        #[arg(long)]
        graph: String,
        /// Seed for the randomized total-variance checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Cycle,
    Complete,
    Circulant,
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own message; fold every parse problem into
            // the usage exit code (help/version included print and exit 0)
            if e.use_stderr() {
                let _ = e.print();
                return ExitCode::from(EXIT_USAGE);
            }
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Simulate {
            graph,
            steps,
            dump_operators,
            out,
        } => simulate(&graph, steps, dump_operators, out),
        Command::Stationary { graph } => stationary(&graph),
        Command::Speed {
            family,
            n_range,
            k,
            theta,
            tmax,
            out,
        } => speed(family, n_range, k, theta, tmax, out),
        Command::Verify { graph, seed, json } => verify(&graph, seed, json),
    }
}

fn parse_graph_spec(spec: &str) -> Result<Digraph, Failure> {
    let usage = || {
        fail(
            EXIT_USAGE,
            format!("bad graph spec {spec:?}: expected cycle:N, complete:N, circulant:N:k, or file:PATH"),
        )
    };
    let (kind, rest) = spec.split_once(':').ok_or_else(usage)?;
    let graph = match kind {
        "cycle" => {
            let n = rest.parse().map_err(|_| usage())?;
            Digraph::cycle(n)
        }
        "complete" => {
            let n = rest.parse().map_err(|_| usage())?;
            Digraph::complete(n)
        }
        "circulant" => {
            let (n, k) = rest.split_once(':').ok_or_else(usage)?;
            let n = n.parse().map_err(|_| usage())?;
            let k = k.parse().map_err(|_| usage())?;
            Digraph::circulant(n, k)
        }
        "file" => {
            let text = std::fs::read_to_string(rest)
                .map_err(|e| fail(EXIT_USAGE, format!("cannot read {rest}: {e}")))?;
            Digraph::parse_edge_list(&text)
        }
        _ => return Err(usage()),
    };
    graph.map_err(|e| fail(EXIT_USAGE, format!("invalid graph {spec:?}: {e}")))
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    if let Some((lo, hi)) = s.split_once("..") {
        let lo = lo.trim().parse().map_err(|_| format!("bad range {s:?}"))?;
        let hi = hi.trim_start_matches('=').trim();
        let hi = hi.parse().map_err(|_| format!("bad range {s:?}"))?;
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok((lo, hi))
    } else {
        let n = s.trim().parse().map_err(|_| format!("bad range {s:?}"))?;
        Ok((n, n))
    }
}

fn write_output(out: Option<PathBuf>, content: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(&path, content)
            .map_err(|e| fail(EXIT_USAGE, format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn simulate(
    spec: &str,
    steps: usize,
    dump_operators: bool,
    out: Option<PathBuf>,
) -> Result<u8, Failure> {
    let g = parse_graph_spec(spec)?;
    if dump_operators {
        dump_operator_files(&g)?;
    }
    let mu_inf = walk::vertex_measure(
        &g,
        &walk::stationary_state(&g)
            .map_err(|e| fail(EXIT_NOT_CONVERGED, format!("stationary state: {e}")))?,
    );

    let trajectory = walk::evolve(&g, steps);
    let n = g.vertex_count();
    let mut csv = String::from("t,psi_min,psi_max,energy,d_t");
    for u in 0..n {
        let _ = write!(csv, ",mu_{u}");
    }
    csv.push('\n');
    for (t, state) in trajectory.states().iter().enumerate() {
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for v in state.values() {
            lo = lo.min(*v);
            hi = hi.max(*v);
        }
        let mu = walk::vertex_measure(&g, state);
        let _ = write!(
            csv,
            "{t},{},{},{},{}",
            sig12(lo),
            sig12(hi),
            sig12(walk::comfortability(&mu)),
            sig12(walk::qtv(&mu, &mu_inf)),
        );
        for v in mu.values() {
            let _ = write!(csv, ",{}", sig12(*v));
        }
        csv.push('\n');
    }
    write_output(out, &csv)?;
    Ok(0)
}

fn dump_operator_files(g: &Digraph) -> Result<(), Failure> {
    let mut files = vec![
        ("adjacency.txt", adjacency_matrix(g).to_text()),
        ("shift.txt", shift_operator(g).to_text()),
        ("evolution.txt", truncated_evolution(g).to_text()),
    ];
    if g.is_regular().is_some() {
        files.push(("incidence.txt", incidence_map(g).expect("regular").to_text()));
        files.push((
            "intertwiner.txt",
            intertwining_map(g).expect("regular").to_text(),
        ));
        files.push((
            "adjacency_evolution.txt",
            adjacency_evolution(g).expect("regular").to_text(),
        ));
    }
    for (name, content) in files {
        std::fs::write(name, content)
            .map_err(|e| fail(EXIT_USAGE, format!("cannot write {name}: {e}")))?;
        eprintln!("wrote {name}");
    }
    Ok(())
}

fn stationary(spec: &str) -> Result<u8, Failure> {
    let g = parse_graph_spec(spec)?;
    let psi = walk::stationary_state(&g)
        .map_err(|e| fail(EXIT_NOT_CONVERGED, format!("stationary state: {e}")))?;
    let mu = walk::vertex_measure(&g, &psi);
    let mut out = String::from("# arc origin terminal psi_inf\n");
    for (i, a) in g.arcs().iter().enumerate() {
        let _ = writeln!(out, "{i} {} {} {}", a.origin, a.terminal, sig17(psi.values()[i]));
    }
    out.push_str("# vertex mu_inf\n");
    for (u, v) in mu.values().iter().enumerate() {
        let _ = writeln!(out, "{u} {}", sig17(*v));
    }
    let _ = writeln!(out, "# energy {}", sig17(walk::comfortability(&mu)));
    print!("{out}");
    Ok(0)
}

fn speed(
    family: FamilyArg,
    (n_min, n_max): (usize, usize),
    k: Option<usize>,
    theta: Vec<f64>,
    tmax: usize,
    out: Option<PathBuf>,
) -> Result<u8, Failure> {
    let family = match family {
        FamilyArg::Cycle => GraphFamily::Cycle,
        FamilyArg::Complete => GraphFamily::Complete,
        FamilyArg::Circulant => {
            let k = k.ok_or_else(|| fail(EXIT_USAGE, "--family circulant requires --k"))?;
            GraphFamily::Circulant { k_min: k, k_max: k }
        }
    };
    let config = ExperimentConfig {
        family,
        n_min,
        n_max,
        thetas: theta,
        t_max: tmax,
        seed: 0,
    };
    let records = sweep::run_sweep(&config).map_err(|e| fail(EXIT_USAGE, e.to_string()))?;

    let mut not_converged = false;
    let mut any_complete = false;
    for r in &records {
        if let Some(message) = &r.error {
            eprintln!("skipping N={} theta={}: {message}", r.n, r.theta);
            if message.contains("steps") {
                not_converged = true;
            }
        } else {
            any_complete = true;
        }
    }
    write_output(out, &sweep::to_csv(&records))?;
    if not_converged {
        return Ok(EXIT_NOT_CONVERGED);
    }
    if !any_complete {
        return Err(fail(EXIT_USAGE, "no record in the sweep produced a speed"));
    }
    Ok(0)
}

fn verify(spec: &str, seed: u64, json: bool) -> Result<u8, Failure> {
    let g = parse_graph_spec(spec)?;
    let report = verify_suite(&g, seed);
    if json {
        let checks: Vec<serde_json::Value> = report
            .checks
            .iter()
            .map(|c| {
                serde_json::json!({
                    "name": c.name,
                    "passed": c.passed,
                    "max_error": c.max_error,
                })
            })
            .collect();
        let doc = serde_json::json!({
            "graph": spec,
            "checks": checks,
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    } else {
        println!("graph {spec} ({})", report.graph_summary);
        for c in &report.checks {
            println!(
                "  {} {:<32} max error {:<12} (tol {:e})",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                sig12(c.max_error),
                c.tolerance,
            );
        }
        for s in &report.skipped {
            println!("  SKIP {:<32} {}", s.name, s.reason);
        }
        let failed = report.checks.iter().filter(|c| !c.passed).count();
        if failed == 0 {
            println!("all {} checks passed", report.checks.len());
        } else {
            println!("{failed} of {} checks FAILED", report.checks.len());
        }
    }
    if report.all_passed() {
        Ok(0)
    } else {
        Ok(EXIT_VERIFY_FAILED)
    }
}
