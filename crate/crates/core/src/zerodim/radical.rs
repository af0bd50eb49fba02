use crate::groebner::{minimal_polynomial, Ideal};
use crate::mpoly::{MPoly, MonomialOrder};

/// Radical of a zero-dimensional ideal: adjoins the squarefree part of the
/// minimal polynomial of each coordinate. Same variety, radical ideal.
pub fn zero_dim_radical(ideal: &Ideal) -> Ideal {
    assert!(ideal.is_zero_dimensional(), "radical extraction needs a zero-dimensional ideal");
    assert!(!ideal.is_unit(), "radical of the unit ideal");
    let ring = ideal.ring();
    let gb = ideal.groebner_basis(&MonomialOrder::GrevLex);
    let mut gens: Vec<MPoly> = ideal.generators().to_vec();
    let mut changed = false;
    for v in 0..ring.nvars() {
        let xv = MPoly::var(ring, v);
        let mp = minimal_polynomial(ring, &gb, &xv);
        let sf = mp.squarefree_part();
        if sf.degree() < mp.degree() {
            changed = true;
        }
        // univariate polynomial in X_v as a multivariate element
        let mut acc = MPoly::zero(ring);
        for (k, c) in sf.coeffs.iter().enumerate() {
            acc = acc.add(&xv.pow(k).scale(c));
        }
        gens.push(acc.primitive_part());
    }
    if !changed {
        // already radical in every coordinate direction; keep the original
        // generators (the added eliminants would be redundant)
        return ideal.clone();
    }
    Ideal::new(ring, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::Ring;

    #[test]
    fn radical_examples() {
        let r = Ring::new(vec!["x"]);
        let x = MPoly::var(&r, 0);
        // <x^2> -> <x>
        let i = zero_dim_radical(&Ideal::new(&r, vec![x.pow(2)]));
        assert!(i.contains(&x));
        // <x^2 - 2> already radical
        let two = MPoly::constant(&r, crate::arith::rat_i(2));
        let j = Ideal::new(&r, vec![x.pow(2).sub(&two)]);
        let jr = zero_dim_radical(&j);
        assert_eq!(jr.generators(), j.generators());

        let r2 = Ring::new(vec!["x", "y"]);
        let x = MPoly::var(&r2, 0);
        let y = MPoly::var(&r2, 1);
        // <x^2, y - x> -> <x, y>
        let k = zero_dim_radical(&Ideal::new(&r2, vec![x.pow(2), y.sub(&x)]));
        assert!(k.contains(&x) && k.contains(&y));
    }
}
