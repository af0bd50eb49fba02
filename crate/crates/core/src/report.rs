//! Text and JSON rendering of solver results.

use crate::arith::{AlgebraicNumber, Interval, Rational, UPoly};
use crate::optimize::{Minimizer, OptimizationResult, Outcome};
use num_traits::One;
use serde_json::{json, Value};

pub fn rational_string(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn upoly_json(p: &UPoly) -> Value {
    Value::Array(p.coeffs.iter().map(|c| Value::String(rational_string(c))).collect())
}

fn interval_json(iv: &Interval) -> Value {
    json!([rational_string(&iv.lo), rational_string(&iv.hi)])
}

fn value_json(v: &AlgebraicNumber, digits: usize) -> Value {
    json!({
        "annihilator": upoly_json(v.annihilator()),
        "interval": interval_json(v.interval()),
        "decimal": v.decimal(digits),
    })
}

fn minimizer_json(m: &Minimizer) -> Value {
    json!({
        "q": upoly_json(&m.parametrization.q),
        "q0": upoly_json(&m.parametrization.q0),
        "coords": Value::Array(m.coords.iter().map(interval_json).collect()),
        "root_interval": interval_json(m.root.interval()),
    })
}

/// The stable JSON surface of a solve.
pub fn result_json(result: &OptimizationResult, digits: usize) -> Value {
    let (value, minimizer, p_np) = match &result.outcome {
        Outcome::RealEmpty | Outcome::UnboundedBelow => (Value::Null, Value::Null, Value::Null),
        Outcome::Attained { value, minimizer } => {
            (value_json(value, digits), minimizer_json(minimizer), Value::Null)
        }
        Outcome::Unattained { value, p_np, .. } => {
            (value_json(value, digits), Value::Null, upoly_json(p_np))
        }
    };
    json!({
        "status": result.status_str(),
        "value": value,
        "minimizer": minimizer,
        "p_np": p_np,
        "seed": result.metadata.seed,
        "matrix": Value::Array(
            result.metadata.matrix.iter().map(|row| {
                Value::Array(row.iter().map(|c| Value::String(rational_string(c))).collect())
            }).collect()
        ),
        "retries": result.metadata.coord_attempts.saturating_sub(1),
    })
}

/// Human-readable report.
pub fn result_text(result: &OptimizationResult, digits: usize) -> String {
    let mut out = String::new();
    out.push_str(&format!("status: {}\n", result.status_str()));
    match &result.outcome {
        Outcome::RealEmpty => out.push_str("value: +inf (no real feasible point)\n"),
        Outcome::UnboundedBelow => out.push_str("value: -inf (objective unbounded below)\n"),
        Outcome::Attained { value, minimizer } => {
            out.push_str(&format!("value: root of {} in [{}, {}]\n",
                value.annihilator(),
                rational_string(&value.interval().lo),
                rational_string(&value.interval().hi)));
            out.push_str(&format!("decimal: {}\n", value.decimal(digits)));
            out.push_str("minimizer:\n");
            out.push_str(&format!("  q: {}\n", minimizer.parametrization.q));
            for (i, c) in minimizer.coords.iter().enumerate() {
                out.push_str(&format!(
                    "  x{}: [{}, {}]\n",
                    i + 1,
                    rational_string(&c.lo),
                    rational_string(&c.hi)
                ));
            }
        }
        Outcome::Unattained { value, p_np, bracketing } => {
            out.push_str(&format!("value: root of {} in [{}, {}] (infimum, not attained)\n",
                value.annihilator(),
                rational_string(&value.interval().lo),
                rational_string(&value.interval().hi)));
            out.push_str(&format!("decimal: {}\n", value.decimal(digits)));
            out.push_str(&format!("p_np: {}\n", p_np));
            out.push_str(&format!(
                "bracketing: ]{}, {}[\n",
                rational_string(&bracketing.lo),
                rational_string(&bracketing.hi)
            ));
        }
    }
    out.push_str(&format!("seed: {}\n", result.metadata.seed));
    out.push_str(&format!(
        "matrix: {}\n",
        result
            .metadata
            .matrix
            .iter()
            .map(|row| format!(
                "[{}]",
                row.iter().map(rational_string).collect::<Vec<_>>().join(", ")
            ))
            .collect::<Vec<_>>()
            .join(" ")
    ));
    out.push_str(&format!("coordinate attempts: {}\n", result.metadata.coord_attempts));
    for w in &result.metadata.warnings {
        out.push_str(&format!("warning: {w}\n"));
    }
    out.push_str(&format!("wall time: {:?}\n", result.metadata.wall));
    out
}
