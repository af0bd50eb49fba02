use crate::arith::{alg_compare, AlgebraicNumber, Rational, UPoly};
use crate::mpoly::MPoly;
use crate::zerodim::{enclose_at_root, image_annihilator, RationalParametrization};
use num_traits::Zero;
use std::cmp::Ordering;

/// Where a candidate value was observed. Point sources carry the index of a
/// real point of the corresponding parametrization, which is what makes the
/// value an attained one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CandidateSource {
    SamplePoint { point: usize },
    CriticalLevel { level: usize, point: usize },
    NonProperness,
}

impl CandidateSource {
    pub fn attains(&self) -> bool {
        !matches!(self, CandidateSource::NonProperness)
    }
}

/// A possible extremum value of the objective, with every place it was seen.
#[derive(Clone, Debug)]
pub struct CandidateValue {
    pub value: AlgebraicNumber,
    pub sources: Vec<CandidateSource>,
}

impl CandidateValue {
    pub fn is_attained(&self) -> bool {
        self.sources.iter().any(|s| s.attains())
    }

    /// Deterministic minimizer preference: the critical source with the
    /// smallest level, then sample points.
    pub fn best_attained_source(&self) -> Option<&CandidateSource> {
        self.sources
            .iter()
            .filter(|s| s.attains())
            .min_by_key(|s| match s {
                CandidateSource::CriticalLevel { level, point } => (0usize, *level, *point),
                CandidateSource::SamplePoint { point } => (1usize, usize::MAX, *point),
                CandidateSource::NonProperness => unreachable!(),
            })
    }
}

/// A parametrized finite set together with its real points, ready for value
/// attribution. Coordinate boxes are not materialized here; callers refine
/// the one point they need.
pub struct PointSet<'a> {
    pub param: &'a RationalParametrization,
    pub roots: Vec<AlgebraicNumber>,
    /// residue of the objective modulo `q`: evaluating it at a root of `q`
    /// gives the objective value at the corresponding point
    pub value_poly: UPoly,
}

impl<'a> PointSet<'a> {
    pub fn new(objective: &MPoly, param: &'a RationalParametrization) -> Self {
        let roots =
            if param.is_empty() { vec![] } else { AlgebraicNumber::roots_of(&param.q) };
        let value_poly =
            if param.is_empty() { UPoly::zero() } else { param.pullback_mod_q(objective) };
        PointSet { param, roots, value_poly }
    }
}

/// Builds the sorted, deduplicated candidate list from the sample set, the
/// per-level critical sets, and the non-properness polynomial.
///
/// Values enter the list through real points (attained sources, matched to
/// the roots of the image annihilator by interval refinement) and through
/// the real roots of the non-properness polynomial. Annihilator roots seen
/// only at non-real points are values the objective does not take on the
/// real variety; they carry no source and are dropped.
pub fn collect_candidates(
    objective: &MPoly,
    samples: &PointSet,
    critical_levels: &[(usize, PointSet)],
    p_np: &UPoly,
) -> Vec<CandidateValue> {
    let mut entries: Vec<(AlgebraicNumber, CandidateSource)> = Vec::new();
    attribute_points(objective, samples, &mut entries, |point| CandidateSource::SamplePoint {
        point,
    });
    for (level, set) in critical_levels {
        attribute_points(objective, set, &mut entries, |point| CandidateSource::CriticalLevel {
            level: *level,
            point,
        });
    }
    if !p_np.is_constant() {
        for root in AlgebraicNumber::roots_of(p_np) {
            entries.push((root, CandidateSource::NonProperness));
        }
    }
    merge_entries(entries)
}

fn attribute_points(
    objective: &MPoly,
    set: &PointSet,
    entries: &mut Vec<(AlgebraicNumber, CandidateSource)>,
    mk: impl Fn(usize) -> CandidateSource,
) {
    if set.roots.is_empty() {
        return;
    }
    let annihilator = image_annihilator(objective, set.param);
    let mut roots = AlgebraicNumber::roots_of(&annihilator);
    for (k, point_root) in set.roots.iter().enumerate() {
        let j = match_value(&set.value_poly, point_root, &mut roots);
        entries.push((roots[j].clone(), mk(k)));
    }
}

/// Index of the annihilator root equal to `value_poly(root)`, found by
/// shrinking a mean-value enclosure of the value until it meets exactly one
/// isolating interval.
fn match_value(value_poly: &UPoly, root: &AlgebraicNumber, roots: &mut [AlgebraicNumber]) -> usize {
    assert!(!roots.is_empty(), "a real point always has a real objective value");
    let mut root = root.clone();
    let mut target = Rational::from_integer(1.into()) / Rational::from_integer(4.into());
    loop {
        let vi = enclose_at_root(value_poly, &mut root, &target);
        let hits: Vec<usize> = roots
            .iter()
            .enumerate()
            .filter(|(_, r)| r.interval().intersects(&vi))
            .map(|(i, _)| i)
            .collect();
        match hits.len() {
            1 => return hits[0],
            0 => unreachable!("objective value escaped every annihilator root"),
            _ => {
                let half = |w: Rational| w / Rational::from_integer(2.into());
                for i in hits {
                    let w = roots[i].interval().width();
                    if !w.is_zero() {
                        roots[i].refine_in_place(&half(w));
                    }
                }
                target /= Rational::from_integer(16.into());
            }
        }
    }
}

fn merge_entries(mut entries: Vec<(AlgebraicNumber, CandidateSource)>) -> Vec<CandidateValue> {
    entries.sort_by(|(a, _), (b, _)| alg_compare(a, b));
    let mut out: Vec<CandidateValue> = Vec::new();
    for (value, source) in entries {
        match out.last_mut() {
            Some(last) if alg_compare(&last.value, &value) == Ordering::Equal => {
                if !last.sources.contains(&source) {
                    last.sources.push(source);
                }
            }
            _ => out.push(CandidateValue { value, sources: vec![source] }),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_i;
    use crate::groebner::Ideal;
    use crate::mpoly::Ring;
    use crate::zerodim::rur;

    #[test]
    fn dedup_and_sources() {
        let r = Ring::new(vec!["x", "y"]);
        let x = MPoly::var(&r, 0);
        let y = MPoly::var(&r, 1);
        // two parametrized sets sharing the value 2 of f = x^2 + y^2 at
        // different points
        let i1 = Ideal::new(&r, vec![x.pow(2).sub(&MPoly::constant(&r, rat_i(2))), y.sub(&x)]);
        let p1 = rur(&i1, 1).unwrap();
        let i2 = Ideal::new(&r, vec![x.sub(&MPoly::one(&r)), y.sub(&MPoly::one(&r))]);
        let p2 = rur(&i2, 1).unwrap();
        let f = x.pow(2).add(&y.pow(2));
        let samples = PointSet::new(&f, &p1);
        let crit = PointSet::new(&f, &p2);
        let candidates = collect_candidates(&f, &samples, &[(1, crit)], &UPoly::one());
        // f = 2x^2 takes the single value 4 on V(i1); f = 2 on V(i2)
        assert_eq!(candidates.len(), 2);
        assert!(candidates[0].value.is_rational(&rat_i(2)));
        assert!(candidates[1].value.is_rational(&rat_i(4)));
        assert!(candidates[0].is_attained());
        // the value 4 is seen at both sample points
        assert_eq!(
            candidates[1]
                .sources
                .iter()
                .filter(|s| matches!(s, CandidateSource::SamplePoint { .. }))
                .count(),
            2
        );
    }

    #[test]
    fn non_properness_roots_join() {
        let r = Ring::new(vec!["x"]);
        let f = MPoly::var(&r, 0);
        let empty = RationalParametrization::empty(&r);
        let samples = PointSet::new(&f, &empty);
        let p_np = UPoly::from_i64(&[-42, 1]); // root 42
        let candidates = collect_candidates(&f, &samples, &[], &p_np);
        assert_eq!(candidates.len(), 1);
        assert!(candidates[0].value.is_rational(&rat_i(42)));
        assert!(!candidates[0].is_attained());
    }

    #[test]
    fn best_source_prefers_low_level() {
        let v = AlgebraicNumber::from_rational(rat_i(1));
        let c = CandidateValue {
            value: v,
            sources: vec![
                CandidateSource::SamplePoint { point: 0 },
                CandidateSource::CriticalLevel { level: 2, point: 1 },
                CandidateSource::CriticalLevel { level: 1, point: 3 },
            ],
        };
        assert_eq!(
            c.best_attained_source(),
            Some(&CandidateSource::CriticalLevel { level: 1, point: 3 })
        );
    }
}
