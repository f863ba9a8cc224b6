//! Experiment sweeps over graph families: one convergence-speed record
//! per (graph, theta), with analytic bounds attached where the graph is
//! regular, plus the fixed CSV serialization downstream tooling relies on.

use std::path::PathBuf;

use rayon::prelude::*;

use crate::error::ConfigError;
use crate::graph::Digraph;
use crate::text::sig12;
use crate::walk::{self, SpeedBounds, DISTANCE_HEAD_LEN};

/// Which graphs a sweep runs over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphFamily {
    /// Cycle graphs over the configured size range.
    Cycle,
    /// Complete graphs over the configured size range.
    Complete,
    /// Circulant graphs over the size range crossed with an offset range.
    Circulant { k_min: usize, k_max: usize },
    /// A single graph loaded from an edge-list file; the size range is
    /// ignored.
    EdgeListFile(PathBuf),
}

/// A sweep description. `seed` feeds the randomized identity checks that
/// accompany a sweep; the speed records themselves are deterministic.
#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub family: GraphFamily,
    pub n_min: usize,
    pub n_max: usize,
    pub thetas: Vec<f64>,
    pub t_max: usize,
    pub seed: u64,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        let uses_range = !matches!(self.family, GraphFamily::EdgeListFile(_));
        if uses_range && self.n_min > self.n_max {
            return Err(ConfigError::EmptyRange {
                min: self.n_min,
                max: self.n_max,
            });
        }
        if self.thetas.is_empty() {
            return Err(ConfigError::NoThetas);
        }
        if let Some(theta) = self.thetas.iter().find(|t| !t.is_finite() || **t < 0.0) {
            return Err(ConfigError::NegativeTheta(*theta));
        }
        if self.t_max == 0 {
            return Err(ConfigError::ZeroBudget);
        }
        Ok(())
    }
}

/// Measured convergence speed for one (graph, theta) pair.
///
/// `kappa` and the bound fields are present only for regular graphs;
/// `error` captures per-record failures (invalid family parameters,
/// budget exhaustion) without aborting the rest of the sweep.
#[derive(Clone, Debug, PartialEq)]
pub struct SpeedRecord {
    pub n: usize,
    pub kappa: Option<usize>,
    pub theta: f64,
    pub t_star: Option<usize>,
    pub bounds: Option<SpeedBounds>,
    pub bounds_satisfied: Option<(bool, bool)>,
    /// First values of the simulated distance sequence, starting at `d_0`.
    pub distance_head: Vec<f64>,
    pub error: Option<String>,
}

impl SpeedRecord {
    /// True when the record measured a speed on a regular graph and can
    /// appear in the CSV output.
    pub fn is_complete(&self) -> bool {
        self.error.is_none() && self.t_star.is_some() && self.kappa.is_some()
    }

    fn failed(n: usize, theta: f64, message: String) -> Self {
        Self {
            n,
            kappa: None,
            theta,
            t_star: None,
            bounds: None,
            bounds_satisfied: None,
            distance_head: Vec::new(),
            error: Some(message),
        }
    }
}

/// Runs the configured sweep and returns records in deterministic order:
/// graphs in configuration order, thetas in list order within each graph.
pub fn run_sweep(config: &ExperimentConfig) -> Result<Vec<SpeedRecord>, ConfigError> {
    config.validate()?;
    let jobs = enumerate_jobs(config);
    let records: Vec<Vec<SpeedRecord>> = jobs
        .into_par_iter()
        .map(|job| run_job(job, config))
        .collect();
    Ok(records.into_iter().flatten().collect())
}

struct Job {
    n: usize,
    graph: Result<Digraph, String>,
}

fn enumerate_jobs(config: &ExperimentConfig) -> Vec<Job> {
    match &config.family {
        GraphFamily::Cycle => (config.n_min..=config.n_max)
            .map(|n| Job {
                n,
                graph: Digraph::cycle(n).map_err(|e| e.to_string()),
            })
            .collect(),
        GraphFamily::Complete => (config.n_min..=config.n_max)
            .map(|n| Job {
                n,
                graph: Digraph::complete(n).map_err(|e| e.to_string()),
            })
            .collect(),
        GraphFamily::Circulant { k_min, k_max } => {
            let mut jobs = Vec::new();
            for n in config.n_min..=config.n_max {
                for k in *k_min..=*k_max {
                    jobs.push(Job {
                        n,
                        graph: Digraph::circulant(n, k).map_err(|e| e.to_string()),
                    });
                }
            }
            jobs
        }
        GraphFamily::EdgeListFile(path) => {
            let graph = std::fs::read_to_string(path)
                .map_err(|e| format!("{}: {e}", path.display()))
                .and_then(|text| Digraph::parse_edge_list(&text).map_err(|e| e.to_string()));
            let n = graph.as_ref().map(Digraph::vertex_count).unwrap_or(0);
            vec![Job { n, graph }]
        }
    }
}

fn run_job(job: Job, config: &ExperimentConfig) -> Vec<SpeedRecord> {
    let graph = match job.graph {
        Ok(g) => g,
        Err(message) => {
            return config
                .thetas
                .iter()
                .map(|theta| SpeedRecord::failed(job.n, *theta, message.clone()))
                .collect()
        }
    };
    let profile = match walk::convergence_profile(&graph, &config.thetas, config.t_max) {
        Ok(p) => p,
        Err(e) => {
            return config
                .thetas
                .iter()
                .map(|theta| SpeedRecord::failed(job.n, *theta, e.to_string()))
                .collect()
        }
    };
    let kappa = graph.is_regular();
    let n = graph.vertex_count();
    let head: Vec<f64> = profile
        .distances
        .iter()
        .take(DISTANCE_HEAD_LEN)
        .copied()
        .collect();

    config
        .thetas
        .iter()
        .zip(&profile.crossings)
        .map(|(&theta, crossing)| {
            let bounds = kappa
                .filter(|k| *k >= 2)
                .map(|k| walk::speed_bounds(k, n, theta));
            match crossing {
                Some(t_star) => SpeedRecord {
                    n,
                    kappa,
                    theta,
                    t_star: Some(*t_star),
                    bounds,
                    bounds_satisfied: bounds.map(|b| b.admits(*t_star)),
                    distance_head: head.clone(),
                    error: None,
                },
                None => SpeedRecord {
                    n,
                    kappa,
                    theta,
                    t_star: None,
                    bounds,
                    bounds_satisfied: None,
                    distance_head: head.clone(),
                    error: Some(format!(
                        "distance still {:e} after {} steps",
                        profile.distances.last().copied().unwrap_or(f64::NAN),
                        config.t_max
                    )),
                },
            }
        })
        .collect()
}

/// Fixed CSV header for speed records.
pub const SPEED_CSV_HEADER: &str =
    "N,kappa,theta,t_star,lower,upper_stated,upper_theta,lower_ok,upper_ok";

/// Serializes complete records to CSV with 12-significant-digit reals.
/// Records that errored or ran on a non-regular graph carry no bound
/// columns and are omitted; callers surface those separately.
pub fn to_csv(records: &[SpeedRecord]) -> String {
    let mut out = String::from(SPEED_CSV_HEADER);
    out.push('\n');
    for r in records.iter().filter(|r| r.is_complete()) {
        let bounds = r.bounds.expect("complete record has bounds");
        let (lower_ok, upper_ok) = r.bounds_satisfied.expect("complete record has flags");
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            r.n,
            r.kappa.expect("complete record is regular"),
            sig12(r.theta),
            r.t_star.expect("complete record has a speed"),
            sig12(bounds.lower),
            sig12(bounds.upper_stated),
            sig12(bounds.upper_theta),
            lower_ok,
            upper_ok,
        ));
    }
    out
}
