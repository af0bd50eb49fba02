use super::rur::RationalParametrization;
use crate::arith::{AlgebraicNumber, Interval, Rational, UPoly};
use num_traits::{Signed, Zero};

/// A real point of a parametrized finite set: the defining root of `q` plus
/// interval boxes for the coordinates.
#[derive(Clone, Debug)]
pub struct RealPoint {
    pub root: AlgebraicNumber,
    pub coords: Vec<Interval>,
}

/// Interval of width at most `width` containing `g(root)`, by the mean-value
/// enclosure: refine the root interval until `|g'| * width(root)` is small
/// enough, then evaluate exactly at the midpoint. Far cheaper than interval
/// Horner when `g` has large coefficients. The root is refined in place so
/// repeated calls reuse the work.
pub fn enclose_at_root(g: &UPoly, root: &mut AlgebraicNumber, width: &Rational) -> Interval {
    if let Some(u) = root.as_rational() {
        return Interval::point(g.eval(&u));
    }
    if g.is_constant() {
        let v = g.coeffs.first().cloned().unwrap_or_else(Rational::zero);
        return Interval::point(v);
    }
    let iv = root.interval();
    let bound = iv.lo.abs().max(iv.hi.abs()) + Rational::from_integer(1.into());
    let slope = g.abs_derivative_bound(&bound);
    if !slope.is_zero() {
        let needed = width / &slope;
        root.refine_in_place(&needed);
    }
    if let Some(u) = root.as_rational() {
        return Interval::point(g.eval(&u));
    }
    let mid = root.interval().midpoint();
    let center = g.eval(&mid);
    let radius = &slope * root.interval().width() / Rational::from_integer(2.into());
    Interval::new(&center - &radius, &center + &radius)
}

/// All real points of the set, sorted by the parametrizing root, each
/// coordinate interval of width at most `width`.
pub fn real_points(param: &RationalParametrization, width: &Rational) -> Vec<RealPoint> {
    assert!(*width > Rational::zero());
    if param.is_empty() {
        return vec![];
    }
    AlgebraicNumber::roots_of(&param.q)
        .into_iter()
        .map(|root| {
            let coords = point_box(param, &root, width);
            RealPoint { root, coords }
        })
        .collect()
}

/// Interval coordinates of one point, refined to the requested width.
/// `gcd(q, q0) = 1` guarantees the denominator interval eventually excludes
/// zero under refinement.
pub fn point_box(
    param: &RationalParametrization,
    root: &AlgebraicNumber,
    width: &Rational,
) -> Vec<Interval> {
    let mut root = root.clone();
    if param.q0.is_constant() {
        let q0 = param.q0.coeffs.first().cloned().unwrap_or_else(Rational::zero);
        return param
            .coords
            .iter()
            .map(|g| {
                let scaled_width = width * q0.abs();
                enclose_at_root(g, &mut root, &scaled_width).mul_scalar(&q0.recip())
            })
            .collect();
    }
    // general denominator: refine until it excludes zero, then divide the
    // numerator and denominator enclosures
    loop {
        let denom = enclose_at_root(&param.q0, &mut root.clone(), width);
        if denom.contains_zero() {
            let w = root.interval().width() / Rational::from_integer(2.into());
            root.refine_in_place(&w);
            continue;
        }
        let coords: Vec<Interval> = param
            .coords
            .iter()
            .map(|g| enclose_at_root(g, &mut root, width).div(&denom))
            .collect();
        if coords.iter().all(|c| c.width() <= *width) {
            return coords;
        }
        let w = root.interval().width() / Rational::from_integer(2.into());
        root.refine_in_place(&w);
    }
}
