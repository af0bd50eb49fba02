use super::poly::MPoly;
use super::ring::Ring;
use crate::arith::Rational;
use num_traits::{One, Zero};

/// Invertible linear change of coordinates `x -> A x`, with the inverse
/// cached at construction.
#[derive(Clone, Debug)]
pub struct CoordinateChange {
    matrix: Vec<Vec<Rational>>,
    inverse: Vec<Vec<Rational>>,
}

impl CoordinateChange {
    pub fn new(matrix: Vec<Vec<Rational>>) -> Option<Self> {
        let n = matrix.len();
        assert!(matrix.iter().all(|row| row.len() == n), "matrix must be square");
        let inverse = invert(&matrix)?;
        Some(CoordinateChange { matrix, inverse })
    }

    pub fn identity(n: usize) -> Self {
        let mut m = vec![vec![Rational::zero(); n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = Rational::one();
        }
        CoordinateChange { matrix: m.clone(), inverse: m }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, c)| if i == j { c.is_one() } else { c.is_zero() })
        })
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &Vec<Vec<Rational>> {
        &self.matrix
    }

    pub fn inverse(&self) -> &Vec<Vec<Rational>> {
        &self.inverse
    }

    /// The polynomial `p(A x)`.
    pub fn apply(&self, p: &MPoly) -> MPoly {
        let ring = p.ring();
        assert_eq!(self.dim(), ring.nvars(), "dimension mismatch");
        if self.is_identity() {
            return p.clone();
        }
        let images: Vec<MPoly> = (0..self.dim())
            .map(|i| linear_form(ring, &self.matrix[i]))
            .collect();
        p.substitute(&images)
    }

    /// Applies to every polynomial of a system.
    pub fn apply_all(&self, polys: &[MPoly]) -> Vec<MPoly> {
        polys.iter().map(|p| self.apply(p)).collect()
    }

    /// Maps a point `y` of the transformed space back to the original space:
    /// `x = A y`.
    pub fn point_to_original(&self, y: &[Rational]) -> Vec<Rational> {
        mat_vec(&self.matrix, y)
    }
}

fn linear_form(ring: &Ring, coeffs: &[Rational]) -> MPoly {
    let mut acc = MPoly::zero(ring);
    for (j, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            acc = acc.add(&MPoly::var(ring, j).scale(c));
        }
    }
    acc
}

fn mat_vec(m: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Gauss-Jordan inverse over the rationals; `None` for singular input.
fn invert(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a = m.to_vec();
    let mut inv = CoordinateChange::identity(n).matrix;
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let t = &a[col][j] * &f;
                a[r][j] -= t;
                let t = &inv[col][j] * &f;
                inv[r][j] -= t;
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_i;

    #[test]
    fn identity_and_swap() {
        let r = Ring::new(vec!["x", "y"]);
        let x = MPoly::var(&r, 0);
        let id = CoordinateChange::identity(2);
        assert_eq!(id.apply(&x), x);
        let swap = CoordinateChange::new(vec![
            vec![rat_i(0), rat_i(1)],
            vec![rat_i(1), rat_i(0)],
        ])
        .unwrap();
        assert_eq!(swap.apply(&x), MPoly::var(&r, 1));
    }

    #[test]
    fn shear_expansion() {
        let r = Ring::new(vec!["x", "y"]);
        let x = MPoly::var(&r, 0);
        let y = MPoly::var(&r, 1);
        let shear = CoordinateChange::new(vec![
            vec![rat_i(1), rat_i(1)],
            vec![rat_i(0), rat_i(1)],
        ])
        .unwrap();
        // x^2 -> (x+y)^2
        assert_eq!(shear.apply(&x.pow(2)), x.add(&y).pow(2));
        // degree preserved
        assert_eq!(shear.apply(&x.pow(2)).total_degree(), 2);
    }

    #[test]
    fn singular_rejected() {
        assert!(CoordinateChange::new(vec![
            vec![rat_i(1), rat_i(2)],
            vec![rat_i(2), rat_i(4)],
        ])
        .is_none());
    }

    #[test]
    fn composition_law() {
        let r = Ring::new(vec!["x", "y"]);
        let p = MPoly::var(&r, 0).pow(2).add(&MPoly::var(&r, 1).scale(&rat_i(3)));
        let a = CoordinateChange::new(vec![
            vec![rat_i(1), rat_i(2)],
            vec![rat_i(0), rat_i(1)],
        ])
        .unwrap();
        let b = CoordinateChange::new(vec![
            vec![rat_i(1), rat_i(0)],
            vec![rat_i(1), rat_i(1)],
        ])
        .unwrap();
        // (p^A)^B = p^(AB)
        let ab_mat: Vec<Vec<Rational>> = (0..2)
            .map(|i| {
                (0..2)
                    .map(|j| (0..2).map(|k| &a.matrix[i][k] * &b.matrix[k][j]).sum())
                    .collect()
            })
            .collect();
        let ab = CoordinateChange::new(ab_mat).unwrap();
        assert_eq!(b.apply(&a.apply(&p)), ab.apply(&p));
    }
}
