use super::radical::zero_dim_radical;
use crate::arith::{Rational, UPoly};
use crate::groebner::{Ideal, Quotient};
use crate::mpoly::{MPoly, MonomialOrder, Ring};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;
use thiserror::Error;

/// Encoding of a finite algebraic set by one univariate polynomial and
/// coordinate fractions: the points are
/// `(coords[0](u)/q0(u), ..., coords[n-1](u)/q0(u))` for the roots `u` of
/// `q`. By convention `q = 1` encodes the empty set.
#[derive(Clone, Debug)]
pub struct RationalParametrization {
    pub ring: Ring,
    pub q: UPoly,
    pub q0: UPoly,
    pub coords: Vec<UPoly>,
    pub separating: Vec<Rational>,
}

impl RationalParametrization {
    pub fn empty(ring: &Ring) -> Self {
        RationalParametrization {
            ring: ring.clone(),
            q: UPoly::one(),
            q0: UPoly::one(),
            coords: vec![UPoly::zero(); ring.nvars()],
            separating: vec![Rational::zero(); ring.nvars()],
        }
    }

    pub fn is_empty(&self) -> bool {
        self.q.is_constant()
    }

    /// Number of distinct (complex) points.
    pub fn degree(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            self.q.degree()
        }
    }

    /// Substitutes the parametrization into a polynomial and reduces modulo
    /// `q`: the numerator of `p(coords/q0)` times the denominator power
    /// `q0^(total_degree p)`, as a residue. Zero exactly when `p` vanishes on
    /// every point of the set.
    pub fn pullback_mod_q(&self, p: &MPoly) -> UPoly {
        assert!(!self.is_empty());
        let deg = p.total_degree() as usize;
        let mut acc = UPoly::zero();
        // memoized powers of the coordinates modulo q
        let mut powers: Vec<Vec<UPoly>> =
            self.coords.iter().map(|c| vec![UPoly::one(), c.rem(&self.q)]).collect();
        let mut q0_powers = vec![UPoly::one(), self.q0.rem(&self.q)];
        for (m, c) in p.terms() {
            let mut t = UPoly::constant(c.clone());
            for (i, &e) in m.exponents.iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&powers[i][1]).rem(&self.q);
                    powers[i].push(next);
                }
                if e > 0 {
                    t = t.mul(&powers[i][e as usize]).rem(&self.q);
                }
            }
            // homogenize with q0 to the common denominator q0^deg
            let missing = deg - m.total_degree() as usize;
            while q0_powers.len() <= missing {
                let next = q0_powers.last().unwrap().mul(&q0_powers[1]).rem(&self.q);
                q0_powers.push(next);
            }
            if missing > 0 {
                t = t.mul(&q0_powers[missing]).rem(&self.q);
            }
            acc = acc.add(&t);
        }
        acc.rem(&self.q)
    }
}

#[derive(Debug, Error)]
pub enum RurError {
    #[error("no separating linear form found after {0} attempts; randomness exhausted")]
    SeparationFailed(usize),
}

/// Rational univariate representation of a zero-dimensional ideal, in shape
/// position (`q0 = 1`). Radicalizes first, draws candidate separating forms
/// (coordinate directions first, then seeded random vectors with growing
/// entries), and certifies the result by the structural degree test
/// `deg q = dim Q[X]/I` plus the generator roundtrip.
pub fn rur(ideal: &Ideal, seed: u64) -> Result<RationalParametrization, RurError> {
    let ring = ideal.ring().clone();
    if ideal.is_unit() {
        return Ok(RationalParametrization::empty(&ring));
    }
    assert!(ideal.is_zero_dimensional(), "rur needs a zero-dimensional ideal");
    let radical = zero_dim_radical(ideal);
    let gb = radical.groebner_basis(&MonomialOrder::GrevLex);
    if gb.len() == 1 && gb[0].is_constant() {
        return Ok(RationalParametrization::empty(&ring));
    }
    let n = ring.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5275_5200);
    let max_attempts = n + 49;
    for attempt in 0..max_attempts {
        let lambda: Vec<Rational> = if attempt < n {
            // coordinate directions first: cheap and often separating
            (0..n).map(|i| if i == attempt { Rational::one() } else { Rational::zero() }).collect()
        } else if attempt == n {
            // binary weights separate any set whose points differ in some
            // coordinate-wise sign pattern
            (0..n).map(|i| Rational::from(BigInt::from(1i64) << i.min(62))).collect()
        } else {
            // random draws with a doubling window
            let b = 2i64 << ((attempt - n) / 4).min(30);
            (0..n)
                .map(|_| Rational::from(BigInt::from(rng.gen_range(-b..=b))))
                .collect()
        };
        if lambda.iter().all(|c| c.is_zero()) {
            continue;
        }
        if let Some(param) = try_lambda(&ring, &gb, &lambda) {
            // certification: every input generator vanishes on the
            // parametrized points
            for g in ideal.generators() {
                let residue = param.pullback_mod_q(g);
                assert!(
                    residue.is_zero(),
                    "parametrization roundtrip failed for generator {g}"
                );
            }
            return Ok(param);
        }
    }
    Err(RurError::SeparationFailed(max_attempts))
}

/// Attempts one separating form; `None` when the form does not separate the
/// points (detected structurally: deg of the minimal polynomial of u falls
/// short of the quotient dimension).
fn try_lambda(
    ring: &Ring,
    gb: &[MPoly],
    lambda: &[Rational],
) -> Option<RationalParametrization> {
    let mut quotient = Quotient::new(ring, gb);
    let dim = quotient.dim();
    let u_poly = lambda
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(MPoly::zero(ring), |acc, (i, c)| acc.add(&MPoly::var(ring, i).scale(c)));
    // powers of u in the quotient, with the dependency giving q
    let mut powers: Vec<Vec<Rational>> = vec![quotient.one_vector()];
    let mut trap = crate::groebner::LinearTrap::new(dim);
    let mut q: Option<UPoly> = None;
    loop {
        let v = powers.last().unwrap().clone();
        if let Some(combo) = trap.offer(v.clone()) {
            q = Some(UPoly::new(combo));
            powers.pop();
            break;
        }
        if powers.len() > dim {
            break;
        }
        powers.push(quotient.mul_poly(&v, &u_poly));
    }
    let q = q?;
    if q.degree() < dim {
        return None;
    }
    // shape position: the powers of u span the quotient, so each coordinate
    // is a polynomial in u
    let mut coords = Vec::with_capacity(ring.nvars());
    for i in 0..ring.nvars() {
        let rhs = quotient.nf_vector(&MPoly::var(ring, i));
        let c = solve_with_columns(&powers, &rhs)?;
        coords.push(UPoly::new(c));
    }
    Some(RationalParametrization {
        ring: ring.clone(),
        q: q.squarefree_part().primitive_part(),
        q0: UPoly::one(),
        coords,
        separating: lambda.to_vec(),
    })
}

/// Solves `sum_j x_j * columns[j] = rhs` exactly; `None` if inconsistent.
fn solve_with_columns(columns: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let rows = rhs.len();
    let cols = columns.len();
    let mut aug: Vec<Vec<Rational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rational> = (0..cols).map(|c| columns[c][r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut row = 0usize;
    for col in 0..cols {
        let pr = (row..rows).find(|&r| !aug[r][col].is_zero());
        let Some(pr) = pr else { continue };
        aug.swap(row, pr);
        let p = aug[row][col].clone();
        for j in col..=cols {
            aug[row][j] /= &p;
        }
        let pivot_row = aug[row].clone();
        for (r, other) in aug.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let f = other[col].clone();
            for j in col..=cols {
                let t = &pivot_row[j] * &f;
                other[j] -= t;
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    // inconsistency: zero row with nonzero rhs
    for r in row..rows {
        if !aug[r][cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rational::zero(); cols];
    for (r, &c) in pivot_cols.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat_i, real_root_isolation};

    #[test]
    fn rur_line_on_parabola_points() {
        let r = Ring::new(vec!["x", "y"]);
        let x = MPoly::var(&r, 0);
        let y = MPoly::var(&r, 1);
        // <x^2 - 2, y - x>: two points (±sqrt2, ±sqrt2)
        let i = Ideal::new(&r, vec![x.pow(2).sub(&MPoly::constant(&r, rat_i(2))), y.sub(&x)]);
        let p = rur(&i, 1).unwrap();
        assert_eq!(p.degree(), 2);
        assert_eq!(p.q.primitive_part(), UPoly::from_i64(&[-2, 0, 1]));
        // separating form x: coords are (u, u)
        assert_eq!(p.coords[0], UPoly::from_i64(&[0, 1]));
        assert_eq!(p.coords[1], UPoly::from_i64(&[0, 1]));
    }

    #[test]
    fn rur_single_point() {
        let r = Ring::new(vec!["x", "y"]);
        let x = MPoly::var(&r, 0);
        let y = MPoly::var(&r, 1);
        let i = Ideal::new(
            &r,
            vec![x.sub(&MPoly::one(&r)), y.sub(&MPoly::constant(&r, rat_i(2)))],
        );
        let p = rur(&i, 1).unwrap();
        assert_eq!(p.degree(), 1);
        // the encoded point is (1, 2)
        let root = -&p.q.coeffs[0] / &p.q.coeffs[1];
        assert_eq!(p.coords[0].eval(&root), rat_i(1));
        assert_eq!(p.coords[1].eval(&root), rat_i(2));
    }

    #[test]
    fn rur_four_points_needs_mixing() {
        let r = Ring::new(vec!["x", "y"]);
        let x = MPoly::var(&r, 0);
        let y = MPoly::var(&r, 1);
        // <x^2 - 2, y^2 - 2>: neither coordinate separates the four points
        let i = Ideal::new(
            &r,
            vec![
                x.pow(2).sub(&MPoly::constant(&r, rat_i(2))),
                y.pow(2).sub(&MPoly::constant(&r, rat_i(2))),
            ],
        );
        let p = rur(&i, 7).unwrap();
        assert_eq!(p.degree(), 4);
        // all four points are real
        assert_eq!(real_root_isolation(&p.q).len(), 4);
    }

    #[test]
    fn rur_empty() {
        let r = Ring::new(vec!["x"]);
        let x = MPoly::var(&r, 0);
        let i = Ideal::new(&r, vec![x.clone(), x.add(&MPoly::one(&r))]);
        let p = rur(&i, 1).unwrap();
        assert!(p.is_empty());
    }

    #[test]
    fn pullback_vanishes_on_generators() {
        let r = Ring::new(vec!["x", "y"]);
        let x = MPoly::var(&r, 0);
        let y = MPoly::var(&r, 1);
        let g1 = x.pow(2).add(&y.pow(2)).sub(&MPoly::constant(&r, rat_i(4)));
        let g2 = x.mul(&y).sub(&MPoly::one(&r));
        let i = Ideal::new(&r, vec![g1.clone(), g2.clone()]);
        let p = rur(&i, 3).unwrap();
        assert!(p.pullback_mod_q(&g1).is_zero());
        assert!(p.pullback_mod_q(&g2).is_zero());
        // and a non-member does not vanish
        assert!(!p.pullback_mod_q(&x).is_zero());
    }
}
