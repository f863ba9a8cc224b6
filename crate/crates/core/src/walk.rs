//! Open-system walk dynamics on the internal graph: the constant tail
//! inflow, the step map `psi -> E psi + rho`, stationary states, vertex
//! measures, the quantum total variance, and the convergence speed.

use crate::error::WalkError;
use crate::graph::Digraph;
use crate::linalg::{self, DenseMatrix};
use crate::operators::truncated_evolution;

/// Default step budget for convergence scans.
pub const DEFAULT_T_MAX: usize = 10_000;

/// Brute-force subset enumeration is capped at this many vertices.
pub const BRUTE_FORCE_VERTEX_LIMIT: usize = 20;

/// Convergence scans record at least this many steps so reports can show
/// the head of the distance sequence.
pub const DISTANCE_HEAD_LEN: usize = 10;

/// A real-valued function on the arcs of a fixed graph, indexed by the
/// graph's canonical arc order.
#[derive(Clone, Debug, PartialEq)]
pub struct ArcField {
    values: Vec<f64>,
}

impl ArcField {
    pub fn new(g: &Digraph, values: Vec<f64>) -> Result<Self, WalkError> {
        if values.len() != g.arc_count() {
            return Err(WalkError::DimensionMismatch {
                expected: g.arc_count(),
                got: values.len(),
            });
        }
        if !values.iter().all(|v| v.is_finite()) {
            return Err(WalkError::NonFiniteEntry);
        }
        Ok(Self { values })
    }

    pub fn zeros(g: &Digraph) -> Self {
        Self {
            values: vec![0.0; g.arc_count()],
        }
    }

    pub fn constant(g: &Digraph, value: f64) -> Self {
        Self {
            values: vec![value; g.arc_count()],
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Max-entry distance to another field.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.len(), other.len());
        self.values
            .iter()
            .zip(&other.values)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }
}

/// A nonnegative function on the vertices of a fixed graph.
#[derive(Clone, Debug, PartialEq)]
pub struct VertexMeasure {
    values: Vec<f64>,
}

impl VertexMeasure {
    pub fn new(g: &Digraph, values: Vec<f64>) -> Result<Self, WalkError> {
        if values.len() != g.vertex_count() {
            return Err(WalkError::MeasureDimensionMismatch {
                expected: g.vertex_count(),
                got: values.len(),
            });
        }
        Self::from_values(values)
    }

    /// Builds a measure without a graph at hand; entries must still be
    /// nonnegative and finite.
    pub fn from_values(values: Vec<f64>) -> Result<Self, WalkError> {
        if !values.iter().all(|v| v.is_finite() && *v >= 0.0) {
            return Err(WalkError::InvalidMeasureEntry);
        }
        Ok(Self { values })
    }

    pub fn zeros(g: &Digraph) -> Self {
        Self {
            values: vec![0.0; g.vertex_count()],
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// A run of the dynamics: the states `psi_0 .. psi_T` together with the
/// max-entry step residuals `|psi_{t+1} - psi_t|`.
#[derive(Clone, Debug)]
pub struct Trajectory {
    states: Vec<ArcField>,
    residuals: Vec<f64>,
}

impl Trajectory {
    pub fn states(&self) -> &[ArcField] {
        &self.states
    }

    /// Residual after each step; entry `t` is `|psi_{t+1} - psi_t|_inf`.
    pub fn residuals(&self) -> &[f64] {
        &self.residuals
    }

    pub fn last(&self) -> &ArcField {
        self.states.last().expect("trajectory holds psi_0")
    }

    /// Number of steps taken (states run from `psi_0` to `psi_T`).
    pub fn steps(&self) -> usize {
        self.states.len() - 1
    }
}

/// The constant inflow injected from the tails: `2 / (d(o(a)) + 1)` on
/// each arc, the image of one unit of inbound tail amplitude under the
/// local coin row. On a `kappa`-regular graph this is `2/(kappa+1)`
/// everywhere.
pub fn uniform_inflow(g: &Digraph) -> ArcField {
    let values = g
        .arcs()
        .iter()
        .map(|a| 2.0 / g.augmented_degree(a.origin) as f64)
        .collect();
    ArcField { values }
}

/// Applies the truncated evolution without materializing the matrix:
/// per-vertex incoming sums make the step linear in the arc count.
fn apply_evolution(g: &Digraph, psi: &[f64]) -> Vec<f64> {
    let mut incoming = vec![0.0; g.vertex_count()];
    for (i, a) in g.arcs().iter().enumerate() {
        incoming[a.terminal] += psi[i];
    }
    g.arcs()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            2.0 / g.augmented_degree(a.origin) as f64 * incoming[a.origin] - psi[g.inverse(i)]
        })
        .collect()
}

/// One step of the open dynamics: `E psi + rho`.
pub fn step(g: &Digraph, psi: &ArcField, rho: &ArcField) -> Result<ArcField, WalkError> {
    for field in [psi, rho] {
        if field.len() != g.arc_count() {
            return Err(WalkError::DimensionMismatch {
                expected: g.arc_count(),
                got: field.len(),
            });
        }
    }
    let mut next = apply_evolution(g, psi.values());
    for (x, r) in next.iter_mut().zip(rho.values()) {
        *x += r;
    }
    Ok(ArcField { values: next })
}

/// Runs `steps` steps from `psi_0 = 0` with the uniform inflow.
pub fn evolve(g: &Digraph, steps: usize) -> Trajectory {
    let rho = uniform_inflow(g);
    let mut states = Vec::with_capacity(steps + 1);
    let mut residuals = Vec::with_capacity(steps);
    states.push(ArcField::zeros(g));
    for _ in 0..steps {
        let current = states.last().expect("nonempty");
        let next = step(g, current, &rho).expect("sizes fixed by construction");
        residuals.push(next.max_abs_diff(current));
        states.push(next);
    }
    Trajectory { states, residuals }
}

/// The constant amplitude on every arc of a connected `kappa`-regular
/// graph after `t` steps: `1 - ((kappa-1)/(kappa+1))^t`.
pub fn amplitude_closed_form(kappa: usize, t: usize) -> Result<f64, WalkError> {
    if kappa < 2 {
        return Err(WalkError::KappaOutOfDomain(kappa));
    }
    let r = (kappa as f64 - 1.0) / (kappa as f64 + 1.0);
    Ok(1.0 - r.powi(t as i32))
}

/// The stationary state, solved from `(I - E) psi = rho` by a dense
/// linear solve. It is the fixed point of [`step`].
///
/// On any graph containing a cycle, `I - E` annihilates the antisymmetric
/// circulation space (`E` and its transpose both fix circulations), so
/// the raw system is singular even though a solution exists. The inflow
/// never excites circulations, and neither does the dynamics started at
/// zero, so the wanted fixed point is the solution orthogonal to that
/// space. Rank-one updates from a fundamental-cycle basis make the system
/// nonsingular without moving that solution.
pub fn stationary_state(g: &Digraph) -> Result<ArcField, WalkError> {
    let m = g.arc_count();
    let e = truncated_evolution(g);
    let mut system = &DenseMatrix::identity(m) - &e;
    for circulation in g.circulation_basis() {
        for &(i, ci) in &circulation {
            for &(j, cj) in &circulation {
                system[(i, j)] += ci * cj;
            }
        }
    }
    let rho = uniform_inflow(g);
    let values = linalg::solve(&system, rho.values()).map_err(|_| WalkError::SingularSystem)?;
    Ok(ArcField { values })
}

/// The relative vertex measure: at each vertex, the squared amplitudes of
/// the incoming arcs. Its total mass is generally not 1.
pub fn vertex_measure(g: &Digraph, psi: &ArcField) -> VertexMeasure {
    assert_eq!(psi.len(), g.arc_count(), "field sized to a different graph");
    let mut values = vec![0.0; g.vertex_count()];
    for (i, a) in g.arcs().iter().enumerate() {
        values[a.terminal] += psi.values[i] * psi.values[i];
    }
    VertexMeasure { values }
}

/// Total mass of a vertex measure.
pub fn comfortability(mu: &VertexMeasure) -> f64 {
    mu.values.iter().sum()
}

/// Total-variance distance between two nonnegative vertex measures:
/// half the pointwise L1 distance plus half the gap between total masses.
/// Equals the maximum of `|mu(V') - nu(V')|` over vertex subsets `V'`.
pub fn qtv(mu: &VertexMeasure, nu: &VertexMeasure) -> f64 {
    assert_eq!(mu.len(), nu.len(), "measures on different graphs");
    let l1: f64 = mu
        .values
        .iter()
        .zip(&nu.values)
        .map(|(a, b)| (a - b).abs())
        .sum();
    let mass_gap = (comfortability(mu) - comfortability(nu)).abs();
    0.5 * (l1 + mass_gap)
}

/// Exact subset maximum `max_{V'} |mu(V') - nu(V')|` by enumerating all
/// `2^N` vertex subsets. The independent cross-check for [`qtv`].
pub fn qtv_brute_force(mu: &VertexMeasure, nu: &VertexMeasure) -> Result<f64, WalkError> {
    assert_eq!(mu.len(), nu.len(), "measures on different graphs");
    let n = mu.len();
    if n > BRUTE_FORCE_VERTEX_LIMIT {
        return Err(WalkError::TooManyVertices {
            max: BRUTE_FORCE_VERTEX_LIMIT,
            got: n,
        });
    }
    let diff: Vec<f64> = mu
        .values
        .iter()
        .zip(&nu.values)
        .map(|(a, b)| a - b)
        .collect();
    let mut best = 0.0f64;
    for mask in 0u32..(1u32 << n) {
        let mut sum = 0.0;
        for (u, d) in diff.iter().enumerate() {
            if mask & (1 << u) != 0 {
                sum += d;
            }
        }
        best = best.max(sum.abs());
    }
    Ok(best)
}

/// Distance to the stationary measure after `t` steps on a connected
/// `kappa`-regular graph with `n` vertices:
/// `r^t (2 - r^t) kappa n` with `r = (kappa-1)/(kappa+1)`.
pub fn distance_closed_form(kappa: usize, n: usize, t: usize) -> f64 {
    debug_assert!(kappa >= 2 && n >= 3);
    let r = (kappa as f64 - 1.0) / (kappa as f64 + 1.0);
    let rt = r.powi(t as i32);
    rt * (2.0 - rt) * (kappa * n) as f64
}

/// Analytic convergence-speed estimates for a `kappa`-regular graph on
/// `n` vertices at threshold `e^{-theta}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpeedBounds {
    /// `(ln(kappa n) + theta) / ln((kappa+1)/(kappa-1))`; the speed
    /// strictly exceeds this.
    pub lower: f64,
    /// `ln(2 kappa n) / ln((kappa+1)/(kappa-1))`, without the theta term.
    /// Kept for reporting; at small theta the measured speed can exceed
    /// it by its fractional part.
    pub upper_stated: f64,
    /// `(ln(2 kappa n) + theta) / ln((kappa+1)/(kappa-1))`; the speed is
    /// at most `floor` of this plus one.
    pub upper_theta: f64,
}

impl SpeedBounds {
    /// Smallest step count compatible with the lower bound.
    pub fn min_step(&self) -> usize {
        self.lower.floor() as usize + 1
    }

    /// Largest step count compatible with the theta-augmented upper bound.
    pub fn max_step(&self) -> usize {
        self.upper_theta.floor() as usize + 1
    }

    /// Whether a measured speed satisfies (lower, upper) with integer slack.
    pub fn admits(&self, t_star: usize) -> (bool, bool) {
        (t_star >= self.min_step(), t_star <= self.max_step())
    }
}

/// Evaluates the speed bounds for a `kappa`-regular graph.
pub fn speed_bounds(kappa: usize, n: usize, theta: f64) -> SpeedBounds {
    assert!(kappa >= 2, "bounds need kappa >= 2");
    assert!(theta >= 0.0, "theta must be nonnegative");
    let k = kappa as f64;
    let rate = ((k + 1.0) / (k - 1.0)).ln();
    let kn = (kappa * n) as f64;
    SpeedBounds {
        lower: (kn.ln() + theta) / rate,
        upper_stated: (2.0 * kn).ln() / rate,
        upper_theta: ((2.0 * kn).ln() + theta) / rate,
    }
}

/// A simulated distance scan: `distances[t]` is `d_t = qtv(mu_t, mu_inf)`,
/// and `crossings[i]` is the first `t >= 1` with `d_t < e^{-theta_i}`.
#[derive(Clone, Debug)]
pub struct ConvergenceProfile {
    pub distances: Vec<f64>,
    pub crossings: Vec<Option<usize>>,
}

/// Simulates the dynamics and records the distance to the stationary
/// measure until every threshold in `thetas` has been crossed (or the
/// step budget runs out).
///
/// The stationary measure comes from the linear solve, and the distances
/// from the simulated trajectory; neither side uses the closed forms, so
/// those remain available as independent cross-checks.
pub fn convergence_profile(
    g: &Digraph,
    thetas: &[f64],
    t_max: usize,
) -> Result<ConvergenceProfile, WalkError> {
    let rho = uniform_inflow(g);
    let psi_inf = stationary_state(g)?;
    let mu_inf = vertex_measure(g, &psi_inf);

    let thresholds: Vec<f64> = thetas.iter().map(|theta| (-theta).exp()).collect();
    let mut crossings = vec![None; thetas.len()];

    let mut psi = ArcField::zeros(g);
    let mut distances = vec![qtv(&vertex_measure(g, &psi), &mu_inf)];
    for t in 1..=t_max {
        psi = step(g, &psi, &rho)?;
        let d = qtv(&vertex_measure(g, &psi), &mu_inf);
        distances.push(d);
        for (crossing, threshold) in crossings.iter_mut().zip(&thresholds) {
            if crossing.is_none() && d < *threshold {
                *crossing = Some(t);
            }
        }
        if t >= DISTANCE_HEAD_LEN && crossings.iter().all(Option::is_some) {
            break;
        }
    }
    Ok(ConvergenceProfile {
        distances,
        crossings,
    })
}

/// First step at which the simulated distance to the stationary measure
/// drops below `e^{-theta}`.
pub fn convergence_speed(g: &Digraph, theta: f64, t_max: usize) -> Result<usize, WalkError> {
    assert!(theta >= 0.0, "theta must be nonnegative");
    let profile = convergence_profile(g, &[theta], t_max)?;
    profile.crossings[0].ok_or(WalkError::NotConverged {
        t_max,
        last_distance: *profile.distances.last().expect("nonempty scan"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path4() -> Digraph {
        Digraph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn inflow_values() {
        let c6 = Digraph::cycle(6).unwrap();
        for v in uniform_inflow(&c6).values() {
            assert!((v - 2.0 / 3.0).abs() < 1e-15);
        }
        let k5 = Digraph::complete(5).unwrap();
        for v in uniform_inflow(&k5).values() {
            assert!((v - 0.4).abs() < 1e-15);
        }
        let p4 = path4();
        for (a, v) in p4.arcs().iter().zip(uniform_inflow(&p4).values()) {
            let expected = if p4.degree(a.origin) == 1 { 1.0 } else { 2.0 / 3.0 };
            assert!((v - expected).abs() < 1e-15);
        }
    }

    #[test]
    fn step_examples() {
        let c6 = Digraph::cycle(6).unwrap();
        let rho = uniform_inflow(&c6);
        let one = step(&c6, &ArcField::zeros(&c6), &rho).unwrap();
        assert_eq!(one, rho);
        let two = step(&c6, &one, &rho).unwrap();
        for v in two.values() {
            assert!((v - 8.0 / 9.0).abs() < 1e-14);
        }

        let short = ArcField {
            values: vec![0.0; 3],
        };
        assert!(matches!(
            step(&c6, &short, &rho),
            Err(WalkError::DimensionMismatch { expected: 12, got: 3 })
        ));
    }

    #[test]
    fn step_matches_dense_evolution() {
        for g in [Digraph::petersen(), path4(), Digraph::circulant(8, 2).unwrap()] {
            let e = truncated_evolution(&g);
            let psi = ArcField::new(
                &g,
                (0..g.arc_count()).map(|i| ((i * 13) as f64 * 0.37).sin()).collect(),
            )
            .unwrap();
            let rho = ArcField::zeros(&g);
            let fast = step(&g, &psi, &rho).unwrap();
            let dense = e.matvec(psi.values());
            for (a, b) in fast.values().iter().zip(&dense) {
                assert!((a - b).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn evolve_examples() {
        let c6 = Digraph::cycle(6).unwrap();
        let empty = evolve(&c6, 0);
        assert_eq!(empty.steps(), 0);
        assert_eq!(empty.last(), &ArcField::zeros(&c6));

        let k5 = Digraph::complete(5).unwrap();
        let traj = evolve(&k5, 3);
        for v in traj.last().values() {
            assert!((v - 0.784).abs() < 1e-14);
        }

        let run = evolve(&c6, 30);
        for w in run.residuals().windows(2) {
            assert!(w[1] < w[0], "residuals should decay geometrically");
        }
    }

    #[test]
    fn closed_form_amplitudes() {
        assert_eq!(amplitude_closed_form(2, 0).unwrap(), 0.0);
        assert!((amplitude_closed_form(2, 1).unwrap() - 2.0 / 3.0).abs() < 1e-15);
        assert!((amplitude_closed_form(4, 2).unwrap() - 16.0 / 25.0).abs() < 1e-15);
        assert!(matches!(
            amplitude_closed_form(1, 3),
            Err(WalkError::KappaOutOfDomain(1))
        ));
    }

    #[test]
    fn stationary_states() {
        let c3 = Digraph::cycle(3).unwrap();
        let psi = stationary_state(&c3).unwrap();
        for v in psi.values() {
            assert!((v - 1.0).abs() < 1e-10);
        }

        for g in [Digraph::cycle(6).unwrap(), Digraph::petersen(), path4()] {
            let psi = stationary_state(&g).unwrap();
            let next = step(&g, &psi, &uniform_inflow(&g)).unwrap();
            assert!(next.max_abs_diff(&psi) < 1e-10);
        }
    }

    #[test]
    fn vertex_measure_examples() {
        let c6 = Digraph::cycle(6).unwrap();
        let ones = ArcField::constant(&c6, 1.0);
        for v in vertex_measure(&c6, &ones).values() {
            assert_eq!(*v, 2.0);
        }
        let zero = vertex_measure(&c6, &ArcField::zeros(&c6));
        assert!(zero.values().iter().all(|v| *v == 0.0));

        let mu1 = vertex_measure(&c6, &evolve(&c6, 1).last().clone());
        for v in mu1.values() {
            assert!((v - 8.0 / 9.0).abs() < 1e-14);
        }
        assert!((comfortability(&mu1) - 16.0 / 3.0).abs() < 1e-13);
    }

    #[test]
    fn comfortability_of_stationary_measure() {
        for (g, kappa) in [
            (Digraph::cycle(6).unwrap(), 2usize),
            (Digraph::complete(5).unwrap(), 4),
        ] {
            let mu = vertex_measure(&g, &stationary_state(&g).unwrap());
            let expected = (kappa * g.vertex_count()) as f64;
            assert!((comfortability(&mu) - expected).abs() < 1e-9);
        }
        assert_eq!(comfortability(&VertexMeasure::zeros(&Digraph::cycle(3).unwrap())), 0.0);
    }

    #[test]
    fn qtv_hand_examples() {
        let mu = VertexMeasure::from_values(vec![1.0, 0.0]).unwrap();
        let nu = VertexMeasure::from_values(vec![0.0, 1.0]).unwrap();
        assert_eq!(qtv(&mu, &nu), 1.0);
        assert_eq!(qtv_brute_force(&mu, &nu).unwrap(), 1.0);
        assert_eq!(qtv(&mu, &mu), 0.0);

        let mu = VertexMeasure::from_values(vec![2.0, 0.0]).unwrap();
        let nu = VertexMeasure::from_values(vec![0.0, 1.0]).unwrap();
        assert_eq!(qtv(&mu, &nu), 2.0);
        assert_eq!(qtv_brute_force(&mu, &nu).unwrap(), 2.0);
    }

    #[test]
    fn qtv_against_distance_closed_form() {
        let c6 = Digraph::cycle(6).unwrap();
        let mu_inf = vertex_measure(&c6, &stationary_state(&c6).unwrap());
        let mu1 = vertex_measure(&c6, &evolve(&c6, 1).last().clone());
        let d1 = qtv(&mu_inf, &mu1);
        assert!((d1 - 20.0 / 3.0).abs() < 1e-10);
        assert!((d1 - distance_closed_form(2, 6, 1)).abs() < 1e-10);
    }

    #[test]
    fn brute_force_rejects_large_graphs() {
        let vals = vec![0.0; 21];
        let mu = VertexMeasure::from_values(vals.clone()).unwrap();
        let nu = VertexMeasure::from_values(vals).unwrap();
        assert!(matches!(
            qtv_brute_force(&mu, &nu),
            Err(WalkError::TooManyVertices { max: 20, got: 21 })
        ));
    }

    #[test]
    fn measure_validation() {
        assert!(matches!(
            VertexMeasure::from_values(vec![1.0, -0.5]),
            Err(WalkError::InvalidMeasureEntry)
        ));
        assert!(matches!(
            VertexMeasure::from_values(vec![f64::NAN]),
            Err(WalkError::InvalidMeasureEntry)
        ));
        let c3 = Digraph::cycle(3).unwrap();
        assert!(matches!(
            VertexMeasure::new(&c3, vec![1.0]),
            Err(WalkError::MeasureDimensionMismatch { expected: 3, got: 1 })
        ));
        assert!(matches!(
            ArcField::new(&c3, vec![f64::INFINITY; 6]),
            Err(WalkError::NonFiniteEntry)
        ));
    }

    #[test]
    fn distance_closed_form_values() {
        assert_eq!(distance_closed_form(2, 6, 0), 12.0);
        assert!((distance_closed_form(2, 6, 1) - 20.0 / 3.0).abs() < 1e-12);
        // geometric decay: far past the knee the value is negligible
        for kappa in [2usize, 4, 6] {
            let n = 10;
            let t = 30 * kappa + 1;
            let tail = distance_closed_form(kappa, n, t);
            assert!(tail < 1e-12 * (kappa * n) as f64, "kappa={kappa}: {tail}");
        }
    }

    #[test]
    fn convergence_speed_examples() {
        let c6 = Digraph::cycle(6).unwrap();
        assert_eq!(convergence_speed(&c6, 0.0, DEFAULT_T_MAX).unwrap(), 3);
        let k5 = Digraph::complete(5).unwrap();
        assert_eq!(convergence_speed(&k5, 0.0, DEFAULT_T_MAX).unwrap(), 8);
        // the distances straddling the threshold match the hand values
        let profile = convergence_profile(&c6, &[0.0], DEFAULT_T_MAX).unwrap();
        assert!((profile.distances[2] - 204.0 / 81.0).abs() < 1e-10);
        assert!((profile.distances[3] - 636.0 / 729.0).abs() < 1e-10);
    }

    #[test]
    fn convergence_budget_error() {
        let k5 = Digraph::complete(5).unwrap();
        let err = convergence_speed(&k5, 0.0, 2).unwrap_err();
        assert!(matches!(err, WalkError::NotConverged { t_max: 2, .. }));
    }

    #[test]
    fn speed_grows_linearly_in_theta() {
        let c6 = Digraph::cycle(6).unwrap();
        let thetas: Vec<f64> = (0..=20).map(|i| i as f64).collect();
        let profile = convergence_profile(&c6, &thetas, DEFAULT_T_MAX).unwrap();
        let points: Vec<(f64, f64)> = thetas
            .iter()
            .zip(&profile.crossings)
            .map(|(theta, t)| (*theta, t.unwrap() as f64))
            .collect();
        let slope = least_squares_slope(&points);
        let expected = 1.0 / 3.0f64.ln();
        assert!(
            (slope - expected).abs() < 0.1 * expected,
            "slope {slope} vs {expected}"
        );
    }

    fn least_squares_slope(points: &[(f64, f64)]) -> f64 {
        let n = points.len() as f64;
        let sx: f64 = points.iter().map(|p| p.0).sum();
        let sy: f64 = points.iter().map(|p| p.1).sum();
        let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
        let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
        (n * sxy - sx * sy) / (n * sxx - sx * sx)
    }

    #[test]
    fn speed_bounds_values() {
        let b = speed_bounds(2, 6, 0.0);
        assert!((b.lower - 12.0f64.ln() / 3.0f64.ln()).abs() < 1e-12);
        assert!((b.upper_stated - 24.0f64.ln() / 3.0f64.ln()).abs() < 1e-12);
        assert!((b.lower - 2.2619).abs() < 5e-4);
        assert!((b.upper_stated - 2.8928).abs() < 5e-4);
        assert_eq!(b.upper_stated, b.upper_theta);
        assert_eq!(b.min_step(), 3);
        assert_eq!(b.max_step(), 3);

        // at theta = 0 and kappa = 2 the bound gap is ln 2 / ln 3 for every n
        for n in [6, 10, 20] {
            let b = speed_bounds(2, n, 0.0);
            assert!((b.upper_stated - b.lower - 2.0f64.ln() / 3.0f64.ln()).abs() < 1e-12);
        }

        // lower bound increases with kappa at fixed n, theta
        let mut last = 0.0;
        for kappa in [2usize, 4, 6, 8] {
            let b = speed_bounds(kappa, 12, 1.0);
            assert!(b.lower > last);
            last = b.lower;
        }
    }
}
