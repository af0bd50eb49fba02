use crate::arith::{rat, Rational};
use crate::groebner::Ideal;
use crate::mpoly::{jacobian, minors, MPoly, Ring};
use crate::zerodim::{rur, RationalParametrization, RurError};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SampleError {
    #[error("distance-critical system stayed positive-dimensional after {0} retries; regularity assumptions likely violated")]
    RetriesExhausted(usize),
    #[error(transparent)]
    Rur(#[from] RurError),
}

/// A finite set meeting every connected component of the real points of the
/// constraint variety: critical points of the distance to a random rational
/// point. Every component contains a distance minimizer, which is either a
/// smooth critical point (caught by the rank condition) or a singular point
/// (where the minors vanish identically).
pub fn real_sample_points(
    constraints: &[MPoly],
    var_dim: i64,
    seed: u64,
) -> Result<RationalParametrization, SampleError> {
    assert!(!constraints.is_empty(), "sample points need at least one constraint");
    let ring = constraints[0].ring().clone();
    let n = ring.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5A4D_50);
    let max_retries = 24usize;
    for attempt in 0..max_retries {
        let center: Vec<Rational> = (0..n)
            .map(|_| {
                let num = rng.gen_range(-8i64..=8);
                let den_pow = rng.gen_range(0u32..=2 + attempt as u32 / 4);
                rat(num, 1i64 << den_pow)
            })
            .collect();
        let ideal = distance_critical_ideal(&ring, constraints, var_dim, &center);
        if ideal.is_zero_dimensional() {
            return Ok(rur(&ideal, seed.wrapping_add(attempt as u64))?);
        }
    }
    Err(SampleError::RetriesExhausted(max_retries))
}

fn distance_critical_ideal(
    ring: &Ring,
    constraints: &[MPoly],
    var_dim: i64,
    center: &[Rational],
) -> Ideal {
    let n = ring.nvars();
    let dist = (0..n).fold(MPoly::zero(ring), |acc, i| {
        let shifted = MPoly::var(ring, i).sub(&MPoly::constant(ring, center[i].clone()));
        acc.add(&shifted.mul(&shifted))
    });
    let mut rows = vec![dist];
    rows.extend(constraints.iter().cloned());
    let size = (n as i64 - var_dim + 1) as usize;
    let mut gens = constraints.to_vec();
    gens.extend(
        minors(&jacobian(&rows), size)
            .into_iter()
            .filter(|m| !m.is_zero())
            .map(|m| m.primitive_part()),
    );
    Ideal::new(ring, gens)
}

/// Decides real emptiness of the zero set of a polynomial system. Complex
/// emptiness and zero-dimensionality are handled directly; positive
/// dimension goes through the sample-point construction.
pub fn is_empty(generators: &[MPoly], seed: u64) -> Result<bool, SampleError> {
    assert!(!generators.is_empty());
    let ring = generators[0].ring().clone();
    let ideal = Ideal::new(&ring, generators.to_vec());
    if ideal.is_unit() {
        return Ok(true);
    }
    let dim = ideal.dimension();
    if dim <= 0 {
        let param = rur(&ideal, seed)?;
        return Ok(!has_real_root(&param));
    }
    let param = real_sample_points(generators, dim, seed)?;
    Ok(!has_real_root(&param))
}

fn has_real_root(param: &RationalParametrization) -> bool {
    if param.is_empty() {
        return false;
    }
    crate::arith::SturmChain::new(&param.q).count_real_roots() > 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_i;
    use crate::zerodim::real_points;

    fn ring2() -> Ring {
        Ring::new(vec!["x1", "x2"])
    }

    #[test]
    fn circle_has_samples() {
        let r = ring2();
        let x1 = MPoly::var(&r, 0);
        let x2 = MPoly::var(&r, 1);
        let circle = x1.pow(2).add(&x2.pow(2)).sub(&MPoly::one(&r));
        let p = real_sample_points(&[circle.clone()], 1, 1).unwrap();
        let pts = real_points(&p, &rat(1, 1 << 20));
        assert!(!pts.is_empty());
        // every sample satisfies the constraint (interval check)
        for pt in &pts {
            assert!(circle.evaluate_box(&pt.coords).contains_zero());
        }
    }

    #[test]
    fn imaginary_circle_has_none() {
        let r = ring2();
        let x1 = MPoly::var(&r, 0);
        let x2 = MPoly::var(&r, 1);
        let imag = x1.pow(2).add(&x2.pow(2)).add(&MPoly::one(&r));
        let p = real_sample_points(&[imag], 1, 1).unwrap();
        assert!(!has_real_root(&p));
    }

    #[test]
    fn two_components_found() {
        // circle times a separated vertical line: at least two components
        let r = ring2();
        let x1 = MPoly::var(&r, 0);
        let x2 = MPoly::var(&r, 1);
        let circle = x1.pow(2).add(&x2.pow(2)).sub(&MPoly::one(&r));
        let f = circle.mul(&x1.sub(&MPoly::constant(&r, rat_i(3))));
        let p = real_sample_points(&[f], 1, 2).unwrap();
        let pts = real_points(&p, &rat(1, 1024));
        let mut on_line = 0;
        let mut on_circle = 0;
        for pt in &pts {
            if pt.coords[0].contains(&rat_i(3)) {
                on_line += 1;
            } else {
                on_circle += 1;
            }
        }
        assert!(on_line >= 1, "line component missed");
        assert!(on_circle >= 1, "circle component missed");
    }

    #[test]
    fn emptiness_decisions() {
        let r = ring2();
        let x1 = MPoly::var(&r, 0);
        let x2 = MPoly::var(&r, 1);
        let imag = x1.pow(2).add(&x2.pow(2)).add(&MPoly::one(&r));
        assert!(is_empty(&[imag], 1).unwrap());
        let circle = x1.pow(2).add(&x2.pow(2)).sub(&MPoly::one(&r));
        assert!(!is_empty(&[circle.clone()], 1).unwrap());
        // complex points exist but no real ones
        let line3 = x1.sub(&MPoly::constant(&r, rat_i(3)));
        assert!(is_empty(&[circle, line3], 1).unwrap());
    }
}
