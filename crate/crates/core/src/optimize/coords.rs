use crate::arith::Rational;
use crate::groebner::{noether_position_check, Ideal};
use crate::mpoly::{CoordinateChange, MPoly};
use crate::zerodim::RationalParametrization;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

/// Sparse random change of coordinates. Attempt 0 is the identity (many
/// problems are already in general position and the check certifies it);
/// attempt `k` adds strictly upper-triangular integer entries drawn from a
/// window that grows with `k`, so the matrix is unimodular by construction.
pub fn random_coordinate_change<R: Rng>(rng: &mut R, attempt: usize, n: usize) -> CoordinateChange {
    if attempt == 0 {
        return CoordinateChange::identity(n);
    }
    let b = 2i64 * attempt as i64;
    let mut m = vec![vec![Rational::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Rational::one();
        for (j, entry) in row.iter_mut().enumerate().skip(i + 1) {
            let _ = j;
            *entry = Rational::from(BigInt::from(rng.gen_range(-b..=b)));
        }
    }
    CoordinateChange::new(m).expect("unit upper-triangular matrix is invertible")
}

/// Certifies that the transformed constraints are in Noether position at the
/// computed dimension: the coordinate projection to the first `d` variables
/// is proper, which is the checkable consequence of a generic change of
/// coordinates. The per-level dimension certificates (curves of dimension at
/// most one, finite critical intersections) are enforced separately by the
/// constructions themselves.
pub fn verify_genericity(transformed_constraints: &[MPoly], var_dim: i64) -> bool {
    if transformed_constraints.is_empty() {
        return true;
    }
    let ring = transformed_constraints[0].ring();
    let ideal = Ideal::new(ring, transformed_constraints.to_vec());
    noether_position_check(&ideal, var_dim)
}

/// Rewrites a parametrization of the transformed problem in the original
/// coordinates: `x_original = A x_new` applied to the coordinate
/// polynomials; `q` and `q0` are untouched.
pub fn minimizer_in_original_coordinates(
    param: &RationalParametrization,
    change: &CoordinateChange,
) -> RationalParametrization {
    assert_eq!(change.dim(), param.coords.len(), "dimension mismatch");
    if change.is_identity() {
        return param.clone();
    }
    let coords = change
        .matrix()
        .iter()
        .map(|row| {
            let mut acc = crate::arith::UPoly::zero();
            for (c, g) in row.iter().zip(&param.coords) {
                if !c.is_zero() {
                    acc = acc.add(&g.scale(c));
                }
            }
            acc
        })
        .collect();
    RationalParametrization {
        ring: param.ring.clone(),
        q: param.q.clone(),
        q0: param.q0.clone(),
        coords,
        separating: param.separating.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat_i, UPoly};
    use crate::mpoly::Ring;
    use rand::SeedableRng;

    #[test]
    fn attempt_zero_is_identity() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        assert!(random_coordinate_change(&mut rng, 0, 3).is_identity());
        let a = random_coordinate_change(&mut rng, 1, 3);
        // unit determinant: inverse exists and is integral, spot-check shape
        assert_eq!(a.matrix()[1][0], rat_i(0));
        assert_eq!(a.matrix()[0][0], rat_i(1));
    }

    #[test]
    fn genericity_examples() {
        let r = Ring::new(vec!["x1", "x2"]);
        let x1 = MPoly::var(&r, 0);
        let x2 = MPoly::var(&r, 1);
        let circle = x1.pow(2).add(&x2.pow(2)).sub(&MPoly::one(&r));
        assert!(verify_genericity(&[circle], 1));
        let hyp = x1.mul(&x2).sub(&MPoly::one(&r));
        assert!(!verify_genericity(&[hyp.clone()], 1));
        // an upper shear (mixing the later variable into the first) fixes it
        let shear = CoordinateChange::new(vec![
            vec![rat_i(1), rat_i(1)],
            vec![rat_i(0), rat_i(1)],
        ])
        .unwrap();
        let sheared = shear.apply(&hyp);
        assert!(verify_genericity(&[sheared], 1));
    }

    #[test]
    fn param_mapping() {
        let r = Ring::new(vec!["x", "y"]);
        let p = RationalParametrization {
            ring: r.clone(),
            q: UPoly::from_i64(&[-2, 0, 1]),
            q0: UPoly::one(),
            coords: vec![UPoly::from_i64(&[0, 1]), UPoly::from_i64(&[1])],
            separating: vec![rat_i(1), rat_i(0)],
        };
        // identity is a no-op
        let id = CoordinateChange::identity(2);
        let same = minimizer_in_original_coordinates(&p, &id);
        assert_eq!(same.coords, p.coords);
        // swap exchanges the coordinate polynomials
        let swap = CoordinateChange::new(vec![
            vec![rat_i(0), rat_i(1)],
            vec![rat_i(1), rat_i(0)],
        ])
        .unwrap();
        let swapped = minimizer_in_original_coordinates(&p, &swap);
        assert_eq!(swapped.coords[0], p.coords[1]);
        assert_eq!(swapped.coords[1], p.coords[0]);
        // shear: new first coordinate is old first plus twice old second
        let shear = CoordinateChange::new(vec![
            vec![rat_i(1), rat_i(2)],
            vec![rat_i(0), rat_i(1)],
        ])
        .unwrap();
        let sheared = minimizer_in_original_coordinates(&p, &shear);
        assert_eq!(sheared.coords[0], p.coords[0].add(&p.coords[1].scale(&rat_i(2))));
    }
}
