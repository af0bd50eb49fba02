//! Brute-force sanity oracle: exact enumeration for hypercube-constrained
//! problems, penalized grid descent otherwise. Used to cross-check solver
//! outputs; never part of the certification path.

use crate::arith::{rat, Rational};
use crate::mpoly::MPoly;
use crate::problem::ProblemFile;
use num_traits::{One, Zero};

/// Result of the brute-force oracle.
#[derive(Clone, Debug)]
pub enum OracleEstimate {
    /// every variable is constrained to ±1 and the search space was
    /// enumerated exactly
    Exact { minimum: Rational, minimizer: Vec<Rational> },
    /// penalized grid descent: a certified-by-evaluation upper bound on the
    /// penalized objective, plus the trace of grid values per round
    UpperBound { best: Rational, at: Vec<Rational>, trace: Vec<Rational> },
}

/// Detects the hypercube pattern: each constraint is `x_i^2 - 1` and every
/// variable carries exactly one such constraint.
fn hypercube_pattern(problem: &ProblemFile) -> Option<Vec<usize>> {
    let n = problem.ring.nvars();
    if problem.constraints.len() != n {
        return None;
    }
    let mut seen = vec![false; n];
    for c in &problem.constraints {
        let mut var = None;
        for (m, coeff) in c.terms() {
            if m.is_one() {
                if *coeff != -Rational::one() {
                    return None;
                }
            } else {
                let support: Vec<usize> = m
                    .exponents
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, _)| i)
                    .collect();
                if support.len() != 1 || m.exponents[support[0]] != 2 || !coeff.is_one() {
                    return None;
                }
                var = Some(support[0]);
            }
        }
        let v = var?;
        if c.num_terms() != 2 || seen[v] {
            return None;
        }
        seen[v] = true;
    }
    seen.iter().all(|&b| b).then(|| (0..n).collect())
}

/// Exhaustive minimum over the sign hypercube when the constraints encode
/// one; penalized grid descent otherwise.
pub fn oracle_bruteforce(problem: &ProblemFile, grid: usize, penalty: i64) -> OracleEstimate {
    if hypercube_pattern(problem).is_some() {
        let n = problem.ring.nvars();
        let mut best: Option<(Rational, Vec<Rational>)> = None;
        for mask in 0..(1u64 << n) {
            let point: Vec<Rational> = (0..n)
                .map(|i| if mask & (1 << i) != 0 { Rational::one() } else { -Rational::one() })
                .collect();
            let v = problem.objective.evaluate(&point);
            if best.as_ref().is_none_or(|(b, _)| v < *b) {
                best = Some((v, point));
            }
        }
        let (minimum, minimizer) = best.unwrap();
        return OracleEstimate::Exact { minimum, minimizer };
    }
    penalized_grid_descent(problem, grid.max(3), penalty.max(1))
}

/// Minimizes `objective + M * sum constraint^2` over a shrinking rational
/// grid. Returns evaluation-certified upper bounds only.
fn penalized_grid_descent(problem: &ProblemFile, grid: usize, penalty: i64) -> OracleEstimate {
    let n = problem.ring.nvars();
    let m = Rational::from_integer(penalty.into());
    let penalized = |point: &[Rational]| -> Rational {
        let mut v = problem.objective.evaluate(point);
        for c in &problem.constraints {
            let cv = c.evaluate(point);
            v += &m * &cv * &cv;
        }
        v
    };
    let mut center: Vec<Rational> = vec![Rational::zero(); n];
    let mut radius = rat(4, 1);
    let mut best = penalized(&center);
    let mut best_at = center.clone();
    let mut trace = vec![best.clone()];
    for _round in 0..6 {
        // axis sweeps across the grid around the center
        let steps: Vec<Rational> = (0..=grid)
            .map(|k| -&radius + rat(2, 1) * &radius * rat(k as i64, grid as i64))
            .collect();
        let mut improved = true;
        while improved {
            improved = false;
            for dim in 0..n {
                for s in &steps {
                    let mut cand = best_at.clone();
                    cand[dim] = &center[dim] + s;
                    let v = penalized(&cand);
                    if v < best {
                        best = v;
                        best_at = cand;
                        improved = true;
                    }
                }
            }
        }
        trace.push(best.clone());
        center = best_at.clone();
        radius /= rat(4, 1);
    }
    OracleEstimate::UpperBound { best, at: best_at, trace }
}

/// Evaluates the objective at an exact point when all constraints vanish
/// there; used by tests feeding hand-known feasible points.
pub fn feasible_value(problem: &ProblemFile, point: &[Rational]) -> Option<Rational> {
    for c in &problem.constraints {
        if !c.evaluate(point).is_zero() {
            return None;
        }
    }
    Some(problem.objective.evaluate(point))
}

/// The objective as an `MPoly` evaluated over sign vectors, exposed for the
/// acceptance suite's independent enumeration.
pub fn hypercube_minimum(objective: &MPoly, n: usize) -> (Rational, Vec<Rational>) {
    let mut best: Option<(Rational, Vec<Rational>)> = None;
    for mask in 0..(1u64 << n) {
        let point: Vec<Rational> = (0..n)
            .map(|i| if mask & (1 << i) != 0 { Rational::one() } else { -Rational::one() })
            .collect();
        let v = objective.evaluate(&point);
        if best.as_ref().is_none_or(|(b, _)| v < *b) {
            best = Some((v, point));
        }
    }
    best.unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_i;
    use crate::problem::parse_problem;

    #[test]
    fn hypercube_exact() {
        let text = "vars: a b\nobjective: a*b\nconstraints:\n  a^2 - 1\n  b^2 - 1\n";
        let p = parse_problem(text).unwrap();
        match oracle_bruteforce(&p, 5, 100) {
            OracleEstimate::Exact { minimum, minimizer } => {
                assert_eq!(minimum, rat_i(-1));
                assert_eq!(p.objective.evaluate(&minimizer), rat_i(-1));
            }
            other => panic!("expected exact enumeration, got {other:?}"),
        }
    }

    #[test]
    fn grid_descent_bounds() {
        // unconstrained parabola: descent approaches the minimum value 1 at x=2
        let text = "vars: x\nobjective: (x - 2)^2 + 1\nconstraints:\n";
        let p = parse_problem(text).unwrap();
        match oracle_bruteforce(&p, 8, 1) {
            OracleEstimate::UpperBound { best, trace, .. } => {
                assert!(best >= rat_i(1));
                assert!(best <= rat_i(2));
                assert!(trace.windows(2).all(|w| w[1] <= w[0]));
            }
            other => panic!("expected grid descent, got {other:?}"),
        }
    }

    #[test]
    fn feasible_value_checks_constraints() {
        let text = "vars: x y\nobjective: x + y\nconstraints:\n  x - 1\n";
        let p = parse_problem(text).unwrap();
        assert_eq!(feasible_value(&p, &[rat_i(1), rat_i(2)]), Some(rat_i(3)));
        assert_eq!(feasible_value(&p, &[rat_i(0), rat_i(2)]), None);
    }
}
