use super::problem::CurveWithFibration;
use crate::arith::UPoly;
use crate::groebner::Ideal;
use crate::mpoly::{MPoly, Monomial, MonomialOrder};
use num_traits::One;

/// A univariate polynomial in the objective-value variable whose root set
/// contains every value at which the value projection, restricted to the
/// graph of the objective over the given curve, fails to be proper.
///
/// Construction: adjoin `T`, add `f - T`, compute a Gröbner basis for a
/// block order with all coordinate variables ahead of `T`, and multiply the
/// `T`-coefficients of the leading coordinate monomials. Away from the roots
/// of that product the specialized basis keeps its leading terms, so the
/// fiber structure is locally constant and the projection proper; every
/// non-properness value is therefore caught. Empty and zero-dimensional
/// curves yield the constant `1`.
pub fn set_of_non_properness(objective: &MPoly, curve: &CurveWithFibration) -> UPoly {
    if curve.dim <= 0 {
        return UPoly::one();
    }
    let ring = curve.ideal.ring();
    let tname = ring.fresh_name("_T");
    let ext = ring.extended(&tname);
    let tvar = ext.nvars() - 1;
    let mut gens: Vec<MPoly> = curve.ideal.generators().iter().map(|p| p.embed(&ext)).collect();
    gens.push(objective.embed(&ext).sub(&MPoly::var(&ext, tvar)));
    let graph = Ideal::new(&ext, gens);
    let order = MonomialOrder::block(0..tvar);
    let gb = graph.groebner_basis(&order);
    let mut product = UPoly::one();
    for g in gb.iter() {
        product = product.mul(&leading_coefficient_in_t(g, tvar, &order));
    }
    if product.is_constant() {
        return UPoly::one();
    }
    product.squarefree_part().primitive_part()
}

/// Views `g` as a polynomial in the coordinate variables with coefficients
/// in `Q[T]` and extracts the coefficient of the leading coordinate monomial.
fn leading_coefficient_in_t(g: &MPoly, tvar: usize, order: &MonomialOrder) -> UPoly {
    // the block order sorts by coordinate part first, so the leading term's
    // coordinate part is the leading coordinate monomial
    let (lm, _) = g.leading_term(order).unwrap();
    let target: Vec<u16> = lm
        .exponents
        .iter()
        .enumerate()
        .map(|(i, &e)| if i == tvar { 0 } else { e })
        .collect();
    let mut coeffs = vec![];
    for (m, c) in g.terms() {
        let coord_part: Vec<u16> = m
            .exponents
            .iter()
            .enumerate()
            .map(|(i, &e)| if i == tvar { 0 } else { e })
            .collect();
        if coord_part == target {
            let deg_t = m.exponents[tvar] as usize;
            if coeffs.len() <= deg_t {
                coeffs.resize(deg_t + 1, crate::arith::Rational::from_integer(0.into()));
            }
            coeffs[deg_t] = c.clone();
        }
    }
    let _ = Monomial::one(0);
    UPoly::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat_i, sign_at, AlgebraicNumber};
    use crate::mpoly::Ring;

    #[test]
    fn proper_line_gives_constant() {
        // curve x2 = 0 in the plane, objective x1: the value projection is
        // the identity on the line, proper everywhere
        let r = Ring::new(vec!["x1", "x2"]);
        let x1 = MPoly::var(&r, 0);
        let x2 = MPoly::var(&r, 1);
        let curve = CurveWithFibration { ideal: Ideal::new(&r, vec![x2.clone()]), level: 1, dim: 1 };
        let p = set_of_non_properness(&x1, &curve);
        assert!(p.is_constant());
    }

    #[test]
    fn empty_curve_gives_one() {
        let r = Ring::new(vec!["x1", "x2"]);
        let curve = CurveWithFibration {
            ideal: Ideal::new(&r, vec![MPoly::one(&r)]),
            level: 1,
            dim: -1,
        };
        assert_eq!(set_of_non_properness(&MPoly::var(&r, 0), &curve), UPoly::one());
    }

    #[test]
    fn hyperbola_asymptote_detected() {
        // objective x1 on the hyperbola x1*x2 = 1: the value 0 is an
        // asymptotic (non-properness) value
        let r = Ring::new(vec!["x1", "x2"]);
        let x1 = MPoly::var(&r, 0);
        let x2 = MPoly::var(&r, 1);
        let hyp = x1.mul(&x2).sub(&MPoly::one(&r));
        let curve = CurveWithFibration { ideal: Ideal::new(&r, vec![hyp]), level: 1, dim: 1 };
        let p = set_of_non_properness(&x1, &curve);
        assert!(!p.is_constant());
        let zero = AlgebraicNumber::from_rational(rat_i(0));
        assert_eq!(sign_at(&p, &zero), 0, "0 must be a root of {p}");
    }
}
