use crate::groebner::{saturate_ideal, Ideal};
use crate::mpoly::{jacobian, minors, truncated_jacobian, MPoly, Ring};
use thiserror::Error;

/// A constraint system prepared for the critical-point machinery: the
/// objective, the constraints, the ambient dimension data and the shared
/// critical ideal.
#[derive(Clone, Debug)]
pub struct ProblemGeometry {
    pub ring: Ring,
    pub objective: MPoly,
    pub constraints: Vec<MPoly>,
    /// dimension of the constraint variety
    pub var_dim: i64,
    /// maximal total degree of the objective and the constraints
    pub max_degree: u32,
}

/// Signals that a construction witnessed a violated genericity expectation;
/// the caller retries with a fresh change of coordinates.
#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("polar curve at level {level} has dimension {dim} > 1; coordinates not generic")]
    CurveDimension { level: usize, dim: i64 },
    #[error("critical intersection at level {level} has dimension {dim} > 0; coordinates not generic")]
    IntersectionDimension { level: usize, dim: i64 },
}

/// The closure of a leveled polar variety minus the critical locus: a curve
/// (dimension at most one) when the coordinates are generic.
#[derive(Clone, Debug)]
pub struct CurveWithFibration {
    pub ideal: Ideal,
    pub level: usize,
    pub dim: i64,
}

impl ProblemGeometry {
    pub fn new(objective: MPoly, constraints: Vec<MPoly>, var_dim: i64) -> Self {
        let ring = objective.ring().clone();
        let max_degree = constraints
            .iter()
            .map(|c| c.total_degree())
            .chain(std::iter::once(objective.total_degree()))
            .max()
            .unwrap_or(1)
            .max(1);
        ProblemGeometry { ring, objective, constraints, var_dim, max_degree }
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    /// Degree bound for every constructed variety:
    /// `D^(n-d) * ((n-d+1)(D-1))^(d+1)`.
    pub fn degree_bound(&self) -> u128 {
        let n = self.nvars() as u32;
        let d = self.var_dim.max(0) as u32;
        let dd = self.max_degree as u128;
        let codim_factor = ((n - d + 1) as u128) * (dd - 1).max(1);
        dd.pow(n - d) * codim_factor.pow(d + 1)
    }

    /// Size of the minors cutting out critical points of the objective:
    /// `n - d + 1` for the extended Jacobian.
    fn crit_minor_size(&self) -> usize {
        (self.nvars() as i64 - self.var_dim + 1) as usize
    }

    /// Minor generators of the critical locus (without the constraints).
    pub fn crit_minors(&self) -> Vec<MPoly> {
        let mut rows = vec![self.objective.clone()];
        rows.extend(self.constraints.iter().cloned());
        minors(&jacobian(&rows), self.crit_minor_size())
            .into_iter()
            .filter(|m| !m.is_zero())
            .map(|m| m.primitive_part())
            .collect()
    }

    /// Vanishing locus of the constraints plus the rank condition on their
    /// Jacobian: the singular points of the variety.
    pub fn singular_ideal(&self) -> Ideal {
        let size = (self.nvars() as i64 - self.var_dim) as usize;
        let mut gens = self.constraints.clone();
        if self.constraints.is_empty() {
            // the full affine space is smooth
            return Ideal::new(&self.ring, vec![MPoly::one(&self.ring)]);
        }
        gens.extend(
            minors(&jacobian(&self.constraints), size)
                .into_iter()
                .filter(|m| !m.is_zero())
                .map(|m| m.primitive_part()),
        );
        Ideal::new(&self.ring, gens)
    }

    /// Critical locus of the objective restricted to the variety, including
    /// the singular points.
    pub fn crit_ideal(&self) -> Ideal {
        let mut gens = self.constraints.clone();
        gens.extend(self.crit_minors());
        Ideal::new(&self.ring, gens)
    }

    /// The level-`i` polar variety: constraints, rank condition on the
    /// Jacobian truncated to the variables `X_(i+1), ..., X_n`, and the
    /// coordinate cuts `X_1 = ... = X_(i-1) = 0`. At the top level `i = d`
    /// the rank condition degenerates and only the coordinate cuts remain.
    pub fn polar_ideal(&self, level: usize) -> Ideal {
        let d = self.var_dim;
        assert!(level >= 1 && (level as i64) <= d, "level out of range");
        let mut gens = self.constraints.clone();
        if (level as i64) <= d - 1 {
            let mut rows = vec![self.objective.clone()];
            rows.extend(self.constraints.iter().cloned());
            gens.extend(
                minors(&truncated_jacobian(&rows, level + 1), self.crit_minor_size())
                    .into_iter()
                    .filter(|m| !m.is_zero())
                    .map(|m| m.primitive_part()),
            );
            for v in 0..level.saturating_sub(1) {
                gens.push(MPoly::var(&self.ring, v));
            }
        } else {
            for v in 0..(d as usize).saturating_sub(1) {
                gens.push(MPoly::var(&self.ring, v));
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// The Zariski closure of (level polar variety) minus (critical locus),
    /// computed by saturating with the critical minor generators. Dimension
    /// above one signals non-generic coordinates.
    pub fn polar_curve(&self, level: usize) -> Result<CurveWithFibration, GeometryError> {
        let polar = self.polar_ideal(level);
        if polar.is_unit() {
            return Ok(CurveWithFibration { ideal: polar, level, dim: -1 });
        }
        let minors = self.crit_minors();
        let nonzero: Vec<MPoly> = minors.into_iter().filter(|m| !m.is_zero()).collect();
        let saturated = if nonzero.is_empty() {
            // critical minors all identically zero: the critical locus is
            // everything, nothing survives the set difference
            Ideal::new(&self.ring, vec![MPoly::one(&self.ring)])
        } else {
            saturate_ideal(&polar, &Ideal::new(&self.ring, nonzero))
        };
        let dim = saturated.dimension();
        if dim > 1 {
            return Err(GeometryError::CurveDimension { level, dim });
        }
        Ok(CurveWithFibration { ideal: saturated, level, dim })
    }

    /// The finite set carried by a level: curve ∩ critical locus. Positive
    /// dimension signals non-generic coordinates.
    pub fn critical_intersection_ideal(
        &self,
        curve: &CurveWithFibration,
    ) -> Result<Ideal, GeometryError> {
        if curve.ideal.is_unit() {
            return Ok(curve.ideal.clone());
        }
        let mut gens = curve.ideal.generators().to_vec();
        gens.extend(self.constraints.iter().cloned());
        gens.extend(self.crit_minors());
        let ideal = Ideal::new(&self.ring, gens);
        let dim = ideal.dimension();
        if dim > 0 {
            return Err(GeometryError::IntersectionDimension { level: curve.level, dim });
        }
        Ok(ideal)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_i;
    use crate::mpoly::Ring;

    fn circle_problem(objective_x1: bool) -> ProblemGeometry {
        let r = Ring::new(vec!["x1", "x2"]);
        let x1 = MPoly::var(&r, 0);
        let x2 = MPoly::var(&r, 1);
        let circle = x1.pow(2).add(&x2.pow(2)).sub(&MPoly::one(&r));
        let f = if objective_x1 { x1.clone() } else { x1.add(&x2) };
        ProblemGeometry::new(f, vec![circle], 1)
    }

    #[test]
    fn singular_loci() {
        let r = Ring::new(vec!["x1", "x2"]);
        let x1 = MPoly::var(&r, 0);
        let x2 = MPoly::var(&r, 1);
        // cusp x1^3 - x2^2: singular exactly at the origin
        let cusp = x1.pow(3).sub(&x2.pow(2));
        let g = ProblemGeometry::new(x1.clone(), vec![cusp], 1);
        let sing = g.singular_ideal();
        assert_eq!(sing.dimension(), 0);
        // the ideal is not radical, but the origin is its variety
        assert!(sing.contains(&x1.pow(2)) && sing.contains(&x2));
        // smooth circle: empty singular locus
        let g = circle_problem(true);
        assert_eq!(g.singular_ideal().dimension(), -1);
        // crossing lines x1*x2: singular at the origin
        let cross = x1.mul(&x2);
        let g = ProblemGeometry::new(x1.clone(), vec![cross], 1);
        assert_eq!(g.singular_ideal().dimension(), 0);
    }

    #[test]
    fn crit_of_circle() {
        let g = circle_problem(true);
        let crit = g.crit_ideal();
        // critical points (±1, 0): x2 = 0 on the locus
        let x2 = MPoly::var(&g.ring, 1);
        assert_eq!(crit.dimension(), 0);
        assert!(crit.contains(&x2));
        // Lagrange points of x1 + x2 on the circle: (±s, ±s)
        let g = circle_problem(false);
        let crit = g.crit_ideal();
        assert_eq!(crit.dimension(), 0);
        let x1 = MPoly::var(&g.ring, 0);
        let x2 = MPoly::var(&g.ring, 1);
        assert!(crit.contains(&x1.sub(&x2)));
    }

    #[test]
    fn polar_levels() {
        // level d = 1 on the circle: the convention keeps the circle itself
        let g = circle_problem(true);
        let polar = g.polar_ideal(1);
        let gb1 = polar.groebner_basis(&crate::mpoly::MonomialOrder::GrevLex);
        let circle_ideal = Ideal::new(&g.ring, g.constraints.clone());
        let gb2 = circle_ideal.groebner_basis(&crate::mpoly::MonomialOrder::GrevLex);
        assert_eq!(*gb1, *gb2);

        // three variables, constraint x3 = 0, objective x3, d = 2
        let r = Ring::new(vec!["x1", "x2", "x3"]);
        let x1 = MPoly::var(&r, 0);
        let x3 = MPoly::var(&r, 2);
        let g = ProblemGeometry::new(x3.clone(), vec![x3.clone()], 2);
        // level 1: all minors vanish (rows coincide), ideal = <x3>
        let p1 = g.polar_ideal(1);
        let gb = p1.groebner_basis(&crate::mpoly::MonomialOrder::GrevLex);
        assert_eq!(gb.len(), 1);
        assert_eq!(gb[0], x3);
        // level 2 = d: convention cuts X1
        let p2 = g.polar_ideal(2);
        assert!(p2.contains(&x3) && p2.contains(&x1));
        assert_eq!(p2.dimension(), 1);
    }

    #[test]
    fn curve_and_intersection_on_circle() {
        let g = circle_problem(true);
        // saturating the circle by its critical minors keeps the circle
        let curve = g.polar_curve(1).unwrap();
        assert_eq!(curve.dim, 1);
        // intersection with the critical locus: the two points (±1, 0)
        let pts = g.critical_intersection_ideal(&curve).unwrap();
        assert_eq!(pts.dimension(), 0);
        let x2 = MPoly::var(&g.ring, 1);
        assert!(pts.contains(&x2));
    }

    #[test]
    fn fully_critical_curve_is_empty() {
        // objective equal to the constraint: the critical locus swallows
        // the variety and the saturation leaves nothing
        let r = Ring::new(vec!["x1", "x2", "x3"]);
        let x3 = MPoly::var(&r, 2);
        let g = ProblemGeometry::new(x3.clone(), vec![x3.clone()], 2);
        let curve = g.polar_curve(1).unwrap();
        assert!(curve.ideal.is_unit());
        let pts = g.critical_intersection_ideal(&curve).unwrap();
        assert!(pts.is_unit());
        let _ = rat_i(0);
    }

    #[test]
    fn degree_bound_value() {
        // n = 5, d = 0, D = 2: bound = 2^5 * (6 * 1)^1 = 192
        let r = Ring::new(vec!["a", "b", "c", "d", "e"]);
        let x = MPoly::var(&r, 0);
        let g = ProblemGeometry::new(
            x.pow(2),
            (0..5).map(|i| MPoly::var(&r, i).pow(2).sub(&MPoly::one(&r))).collect(),
            0,
        );
        assert_eq!(g.degree_bound(), 192);
    }
}
