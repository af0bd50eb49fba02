use super::candidates::{collect_candidates, CandidateSource, CandidateValue, PointSet};
use super::coords::{minimizer_in_original_coordinates, random_coordinate_change, verify_genericity};
use super::findinf::{accumulate_np, find_infimum, InfimumError, InfimumOutcome};
use crate::arith::{alg_compare, rat, AlgebraicNumber, Interval, Rational, UPoly};
use crate::geometry::{real_sample_points, GeometryError, ProblemGeometry, SampleError};
use crate::groebner::Ideal;
use crate::mpoly::{CoordinateChange, MPoly};
use crate::zerodim::{point_box, rur, RationalParametrization, RurError};
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;
use std::time::{Duration, Instant};
use thiserror::Error;

/// Solver knobs. The defaults match the CLI defaults.
#[derive(Clone, Debug)]
pub struct SolveConfig {
    pub seed: u64,
    pub max_coord_retries: usize,
    pub max_value_retries: usize,
    pub isolation_width: Rational,
    pub check_genericity: bool,
    pub check_assumptions: bool,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            seed: 0,
            max_coord_retries: 8,
            max_value_retries: 2,
            isolation_width: rat(1, 1i64 << 32),
            check_genericity: true,
            check_assumptions: true,
        }
    }
}

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("coordinate retries exhausted after {attempts} attempts; last failure: {last_failure}")]
    CoordinateRetriesExhausted { attempts: usize, last_failure: String },
    #[error("degree bound violated: {what} has degree {degree}, bound {bound}; assumptions likely violated")]
    DegreeBoundExceeded { what: String, degree: usize, bound: u128 },
    #[error(transparent)]
    Sample(#[from] SampleError),
    #[error(transparent)]
    Rur(#[from] RurError),
}

/// Assumption diagnostics: the dimension data plus warnings about the parts
/// that are assumed rather than verified.
#[derive(Debug, Clone)]
pub struct Diagnostics {
    pub var_dim: i64,
    pub sing_dim: i64,
    pub warnings: Vec<String>,
}

/// Checks what can be checked cheaply: the variety dimension (routing the
/// degenerate cases), finiteness of the singular locus, and standing
/// warnings for radicality and equidimensionality, which are assumed.
pub fn check_assumptions(objective: &MPoly, constraints: &[MPoly]) -> Diagnostics {
    let ring = objective.ring();
    let var_dim = if constraints.is_empty() {
        ring.nvars() as i64
    } else {
        Ideal::new(ring, constraints.to_vec()).dimension()
    };
    let mut warnings = vec![
        "radicality of the constraint ideal is assumed, not verified".to_string(),
        "equidimensionality of the constraint variety is assumed, not verified".to_string(),
    ];
    let sing_dim = if var_dim > 0 {
        let geom = ProblemGeometry::new(objective.clone(), constraints.to_vec(), var_dim);
        let d = geom.singular_ideal().dimension();
        if d > 0 {
            warnings.push(format!(
                "singular locus has dimension {d}; the finiteness assumption is violated and results are best-effort"
            ));
        }
        d
    } else {
        -1
    };
    Diagnostics { var_dim, sing_dim, warnings }
}

/// Exact minimizer encoding: a parametrization in the original coordinates,
/// the root picking the point, and interval coordinates.
#[derive(Debug, Clone)]
pub struct Minimizer {
    pub parametrization: RationalParametrization,
    pub root: AlgebraicNumber,
    pub coords: Vec<Interval>,
}

/// The four-way outcome of a solve.
#[derive(Debug, Clone)]
pub enum Outcome {
    /// no real point satisfies the constraints: the infimum is +infinity
    RealEmpty,
    /// the objective is unbounded below on the real variety
    UnboundedBelow,
    Attained { value: AlgebraicNumber, minimizer: Minimizer },
    Unattained { value: AlgebraicNumber, p_np: UPoly, bracketing: Interval },
}

#[derive(Debug, Clone)]
pub struct SolveMetadata {
    pub seed: u64,
    pub matrix: Vec<Vec<Rational>>,
    pub coord_attempts: usize,
    pub max_parametrization_degree: usize,
    pub candidate_count: usize,
    pub degree_bound: u128,
    pub warnings: Vec<String>,
    pub wall: Duration,
}

#[derive(Debug, Clone)]
pub struct OptimizationResult {
    pub outcome: Outcome,
    pub metadata: SolveMetadata,
}

impl OptimizationResult {
    pub fn status_str(&self) -> &'static str {
        match self.outcome {
            Outcome::RealEmpty => "empty",
            Outcome::UnboundedBelow => "unbounded",
            Outcome::Attained { .. } => "attained",
            Outcome::Unattained { .. } => "not_attained",
        }
    }
}

/// Computes a certified representation of the infimum of the objective over
/// the real points of the constraint variety, decides attainment, and
/// produces a minimizer when the infimum is reached.
pub fn optimize(
    objective: &MPoly,
    constraints: &[MPoly],
    config: &SolveConfig,
) -> Result<OptimizationResult, SolveError> {
    assert!(config.max_coord_retries >= 1 && config.max_value_retries >= 1);
    let start = Instant::now();
    let ring = objective.ring().clone();
    let n = ring.nvars();
    let diag = if config.check_assumptions {
        check_assumptions(objective, constraints)
    } else {
        Diagnostics {
            var_dim: if constraints.is_empty() {
                n as i64
            } else {
                Ideal::new(&ring, constraints.to_vec()).dimension()
            },
            sing_dim: -1,
            warnings: vec![],
        }
    };
    let mut metadata = SolveMetadata {
        seed: config.seed,
        matrix: CoordinateChange::identity(n).matrix().clone(),
        coord_attempts: 0,
        max_parametrization_degree: 0,
        candidate_count: 0,
        degree_bound: 0,
        warnings: diag.warnings.clone(),
        wall: Duration::ZERO,
    };

    if diag.var_dim < 0 {
        metadata.wall = start.elapsed();
        return Ok(OptimizationResult { outcome: Outcome::RealEmpty, metadata });
    }
    if diag.var_dim == 0 {
        metadata
            .warnings
            .push("constraint variety is finite; solved by direct enumeration".to_string());
        let outcome = solve_zero_dimensional(objective, constraints, config, &mut metadata)?;
        metadata.wall = start.elapsed();
        return Ok(OptimizationResult { outcome, metadata });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut last_failure = String::from("no attempt made");
    for attempt in 0..config.max_coord_retries {
        metadata.coord_attempts = attempt + 1;
        let change = random_coordinate_change(&mut rng, attempt, n);
        match solve_with_coordinates(objective, constraints, &diag, &change, config, &mut rng, &mut metadata)
        {
            Ok(Some(outcome)) => {
                metadata.matrix = change.matrix().clone();
                metadata.wall = start.elapsed();
                return Ok(OptimizationResult { outcome, metadata });
            }
            Ok(None) => {
                last_failure = "genericity check rejected the coordinates".to_string();
            }
            Err(AttemptError::Retry(reason)) => {
                last_failure = reason;
            }
            Err(AttemptError::Fatal(e)) => return Err(e),
        }
    }
    Err(SolveError::CoordinateRetriesExhausted {
        attempts: config.max_coord_retries,
        last_failure,
    })
}

enum AttemptError {
    /// genericity-failure signal: retry with fresh coordinates
    Retry(String),
    Fatal(SolveError),
}

impl From<GeometryError> for AttemptError {
    fn from(e: GeometryError) -> Self {
        AttemptError::Retry(e.to_string())
    }
}

#[allow(clippy::too_many_arguments)]
fn solve_with_coordinates(
    objective: &MPoly,
    constraints: &[MPoly],
    diag: &Diagnostics,
    change: &CoordinateChange,
    config: &SolveConfig,
    rng: &mut ChaCha8Rng,
    metadata: &mut SolveMetadata,
) -> Result<Option<Outcome>, AttemptError> {
    let f_t = change.apply(objective);
    let cons_t = change.apply_all(constraints);
    let d = diag.var_dim;
    let geometry = ProblemGeometry::new(f_t.clone(), cons_t.clone(), d);
    metadata.degree_bound = geometry.degree_bound();

    if config.check_genericity && !verify_genericity(&cons_t, d) {
        return Ok(None);
    }

    // per-level curves, non-properness factors and finite critical sets
    let mut p_np = UPoly::one();
    let mut level_sets: Vec<(usize, RationalParametrization)> = Vec::new();
    for level in 1..=(d as usize) {
        let curve = geometry.polar_curve(level)?;
        let factor = crate::geometry::set_of_non_properness(&f_t, &curve);
        p_np = accumulate_np(&p_np, &factor);
        let points_ideal = geometry.critical_intersection_ideal(&curve)?;
        let param = rur(&points_ideal, config.seed ^ (level as u64) << 8)
            .map_err(|e| AttemptError::Retry(e.to_string()))?;
        check_degree(&param, &geometry, format!("critical set at level {level}"))
            .map_err(AttemptError::Fatal)?;
        note_degree(metadata, &param);
        level_sets.push((level, param));
    }

    let samples = real_sample_points(&cons_t, d, config.seed)
        .map_err(|e| AttemptError::Retry(e.to_string()))?;
    check_degree(&samples, &geometry, "sample set".to_string()).map_err(AttemptError::Fatal)?;
    note_degree(metadata, &samples);

    let sample_set = PointSet::new(&f_t, &samples);
    let critical_sets: Vec<(usize, PointSet)> = level_sets
        .iter()
        .map(|(level, param)| (*level, PointSet::new(&f_t, param)))
        .collect();
    let candidates = collect_candidates(&f_t, &sample_set, &critical_sets, &p_np);
    metadata.candidate_count = candidates.len();
    if candidates.len() as u128 > geometry.degree_bound() {
        return Err(AttemptError::Fatal(SolveError::DegreeBoundExceeded {
            what: "candidate count".to_string(),
            degree: candidates.len(),
            bound: geometry.degree_bound(),
        }));
    }

    let outcome = match find_infimum(
        &f_t,
        &cons_t,
        &candidates,
        rng,
        config.max_value_retries,
        config.seed,
    ) {
        Ok(o) => o,
        Err(InfimumError::ProbeDisagreement) => {
            return Err(AttemptError::Retry("probe disagreement".to_string()))
        }
        Err(InfimumError::Sample(e)) => return Err(AttemptError::Retry(e.to_string())),
    };

    let outcome = match outcome {
        InfimumOutcome::RealEmpty => Outcome::RealEmpty,
        InfimumOutcome::UnboundedBelow => Outcome::UnboundedBelow,
        InfimumOutcome::Attained { candidate } => {
            let cand = &candidates[candidate];
            let minimizer = extract_minimizer(
                cand,
                &sample_set,
                &critical_sets,
                change,
                &config.isolation_width,
            );
            Outcome::Attained { value: cand.value.clone(), minimizer }
        }
        InfimumOutcome::Unattained { candidate, bracketing } => Outcome::Unattained {
            value: candidates[candidate].value.clone(),
            p_np: p_np.clone(),
            bracketing,
        },
    };
    Ok(Some(outcome))
}

fn check_degree(
    param: &RationalParametrization,
    geometry: &ProblemGeometry,
    what: String,
) -> Result<(), SolveError> {
    let degree = param.degree();
    let bound = geometry.degree_bound();
    if degree as u128 > bound {
        return Err(SolveError::DegreeBoundExceeded { what, degree, bound });
    }
    Ok(())
}

fn extract_minimizer(
    cand: &CandidateValue,
    samples: &PointSet,
    critical: &[(usize, PointSet)],
    change: &CoordinateChange,
    width: &Rational,
) -> Minimizer {
    let source = cand.best_attained_source().expect("attained candidate has a point source");
    let (param, root) = match source {
        CandidateSource::SamplePoint { point } => {
            (samples.param, samples.roots[*point].clone())
        }
        CandidateSource::CriticalLevel { level, point } => {
            let set = &critical.iter().find(|(l, _)| l == level).unwrap().1;
            (set.param, set.roots[*point].clone())
        }
        CandidateSource::NonProperness => unreachable!(),
    };
    let original = minimizer_in_original_coordinates(param, change);
    let coords = point_box(&original, &root, width);
    Minimizer { parametrization: original, root, coords }
}

/// Direct route for finite constraint varieties: enumerate the points,
/// take the minimum of the objective over the real ones.
fn solve_zero_dimensional(
    objective: &MPoly,
    constraints: &[MPoly],
    config: &SolveConfig,
    metadata: &mut SolveMetadata,
) -> Result<Outcome, SolveError> {
    let ring = objective.ring();
    let ideal = Ideal::new(ring, constraints.to_vec());
    let param = rur(&ideal, config.seed)?;
    metadata.max_parametrization_degree = param.degree();
    let geometry = ProblemGeometry::new(objective.clone(), constraints.to_vec(), 0);
    metadata.degree_bound = geometry.degree_bound();
    check_degree(&param, &geometry, "constraint variety".to_string())?;
    let set = PointSet::new(objective, &param);
    if set.roots.is_empty() {
        return Ok(Outcome::RealEmpty);
    }
    let candidates = collect_candidates(objective, &set, &[], &UPoly::one());
    metadata.candidate_count = candidates.len();
    let best = &candidates[0];
    debug_assert!(candidates
        .iter()
        .all(|c| alg_compare(&best.value, &c.value) != Ordering::Greater));
    let minimizer = extract_minimizer(
        best,
        &set,
        &[],
        &CoordinateChange::identity(ring.nvars()),
        &config.isolation_width,
    );
    Ok(Outcome::Attained { value: best.value.clone(), minimizer })
}

/// Records the largest parametrization degree seen, for the degree-bound
/// reporting surface.
pub(crate) fn note_degree(metadata: &mut SolveMetadata, param: &RationalParametrization) {
    metadata.max_parametrization_degree =
        metadata.max_parametrization_degree.max(param.degree());
}
