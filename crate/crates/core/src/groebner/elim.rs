use super::ideal::Ideal;
use crate::mpoly::{MPoly, MonomialOrder};

/// `I ∩ Q[remaining variables]`, via a block order eliminating `drop`.
/// The returned ideal lives in the same ambient ring; its generators are free
/// of the dropped variables.
pub fn elimination_ideal(ideal: &Ideal, drop: &[usize]) -> Ideal {
    if drop.is_empty() {
        return ideal.clone();
    }
    let order = MonomialOrder::block(drop.iter().copied());
    let gb = ideal.groebner_basis(&order);
    let gens: Vec<MPoly> = gb.iter().filter(|g| g.free_of(drop)).cloned().collect();
    Ideal::new(ideal.ring(), gens)
}

/// Saturation `I : g^∞` by the Rabinowitsch construction: adjoin a fresh
/// variable `y`, add `1 - y*g`, eliminate `y`. The result cuts out the
/// Zariski closure of `V(I) \ V(g)`.
pub fn saturate(ideal: &Ideal, g: &MPoly) -> Ideal {
    assert!(!g.is_zero(), "saturation by the zero polynomial");
    if g.is_constant() {
        return ideal.clone();
    }
    let ring = ideal.ring();
    let yname = ring.fresh_name("_y");
    let ext = ring.extended(&yname);
    let yvar = ext.nvars() - 1;
    let mut gens: Vec<MPoly> = ideal.generators().iter().map(|p| p.embed(&ext)).collect();
    let one = MPoly::one(&ext);
    gens.push(one.sub(&MPoly::var(&ext, yvar).mul(&g.embed(&ext))));
    let j = Ideal::new(&ext, gens);
    let order = MonomialOrder::block([yvar]);
    let gb = j.groebner_basis(&order);
    let kept: Vec<MPoly> = gb
        .iter()
        .filter(|p| p.free_of(&[yvar]))
        .map(|p| p.restrict(ring))
        .collect();
    Ideal::new(ring, kept)
}

/// Intersection of two ideals via the auxiliary-variable construction
/// `(t*I + (1-t)*J) ∩ Q[X]`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Ideal {
    let ring = a.ring();
    assert!(ring == b.ring());
    if a.is_zero() {
        return a.clone();
    }
    if b.is_zero() {
        return b.clone();
    }
    let tname = ring.fresh_name("_t");
    let ext = ring.extended(&tname);
    let tvar = ext.nvars() - 1;
    let t = MPoly::var(&ext, tvar);
    let one_minus_t = MPoly::one(&ext).sub(&t);
    let mut gens: Vec<MPoly> = Vec::new();
    for p in a.generators() {
        gens.push(p.embed(&ext).mul(&t));
    }
    for p in b.generators() {
        gens.push(p.embed(&ext).mul(&one_minus_t));
    }
    let j = Ideal::new(&ext, gens);
    let order = MonomialOrder::block([tvar]);
    let gb = j.groebner_basis(&order);
    let kept: Vec<MPoly> = gb
        .iter()
        .filter(|p| p.free_of(&[tvar]))
        .map(|p| p.restrict(ring))
        .collect();
    Ideal::new(ring, kept)
}

/// Saturation by an ideal: `I : J^∞ = ∩_{g in gens(J)} I : g^∞`, avoiding
/// the degree blowup of a product polynomial.
pub fn saturate_ideal(ideal: &Ideal, j: &Ideal) -> Ideal {
    let gens: Vec<&MPoly> = j.generators().iter().filter(|g| !g.is_zero()).collect();
    assert!(!gens.is_empty(), "saturation by the zero ideal");
    let mut acc: Option<Ideal> = None;
    for g in gens {
        let s = saturate(ideal, g);
        acc = Some(match acc {
            None => s,
            Some(prev) => {
                // early exit: intersecting with the unit ideal is a no-op
                if prev.is_unit() {
                    s
                } else if s.is_unit() {
                    prev
                } else {
                    intersect(&prev, &s)
                }
            }
        });
    }
    acc.unwrap()
}

/// Checks Noether position: for a `d`-dimensional ideal, every trailing
/// variable `X_i` (i > d) must be integral over `Q[X_1..X_d]`, witnessed by
/// an eliminant monic in `X_i`.
pub fn noether_position_check(ideal: &Ideal, d: i64) -> bool {
    noether_position_check_with_base(ideal, &(0..d.max(0) as usize).collect::<Vec<_>>())
}

/// Noether-position test with an explicit base variable set: every variable
/// outside `base` must admit a polynomial in `I ∩ Q[base, X_i]` whose leading
/// coefficient with respect to `X_i` is a nonzero constant.
pub fn noether_position_check_with_base(ideal: &Ideal, base: &[usize]) -> bool {
    let n = ideal.ring().nvars();
    for i in 0..n {
        if base.contains(&i) {
            continue;
        }
        let drop: Vec<usize> = (0..n).filter(|v| *v != i && !base.contains(v)).collect();
        let elim = elimination_ideal(ideal, &drop);
        let monic_witness = elim.generators().iter().any(|g| is_monic_in(g, i));
        if !monic_witness {
            return false;
        }
    }
    true
}

/// Leading coefficient of `g` with respect to variable `i` is a nonzero
/// constant (and `g` actually involves `X_i`).
fn is_monic_in(g: &MPoly, i: usize) -> bool {
    let d = g.degree_in(i);
    if d == 0 {
        return false;
    }
    let coeffs = g.as_univariate_in(i);
    coeffs[d as usize].is_constant()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_i;
    use crate::groebner::normal_form;
    use crate::mpoly::Ring;

    fn ring2() -> Ring {
        Ring::new(vec!["x", "y"])
    }

    #[test]
    fn elimination_examples() {
        // <x - t, y - t^2> eliminating t gives <y - x^2>
        let r = Ring::new(vec!["t", "x", "y"]);
        let t = MPoly::var(&r, 0);
        let x = MPoly::var(&r, 1);
        let y = MPoly::var(&r, 2);
        let i = Ideal::new(&r, vec![x.sub(&t), y.sub(&t.pow(2))]);
        let e = elimination_ideal(&i, &[0]);
        let parabola = y.sub(&x.pow(2));
        assert_eq!(e.generators().len(), 1);
        assert!(e.contains(&parabola));
        // <x> dropping y stays <x>
        let r2 = ring2();
        let x2 = MPoly::var(&r2, 0);
        let i2 = Ideal::new(&r2, vec![x2.clone()]);
        let e2 = elimination_ideal(&i2, &[1]);
        assert_eq!(e2.generators(), &[x2.clone()]);
        // <1 - y*x> dropping y gives <0> (dense projection)
        let y2 = MPoly::var(&r2, 1);
        let i3 = Ideal::new(&r2, vec![MPoly::one(&r2).sub(&y2.mul(&x2))]);
        let e3 = elimination_ideal(&i3, &[1]);
        assert!(e3.generators().is_empty());
    }

    #[test]
    fn saturation_examples() {
        let r = ring2();
        let x = MPoly::var(&r, 0);
        let y = MPoly::var(&r, 1);
        // sat(<x*y>, x) = <y>
        let s = saturate(&Ideal::new(&r, vec![x.mul(&y)]), &x);
        assert_eq!(s.generators(), &[y.clone()]);
        // sat(<x^2>, x) = <1>
        let s = saturate(&Ideal::new(&r, vec![x.pow(2)]), &x);
        assert!(s.is_unit());
        // the circle is not contained in y = 0
        let circle = x.pow(2).add(&y.pow(2)).sub(&MPoly::one(&r));
        let s = saturate(&Ideal::new(&r, vec![circle.clone()]), &y);
        assert_eq!(s.generators(), &[circle.primitive_part()]);
    }

    #[test]
    fn saturation_laws() {
        let r = ring2();
        let x = MPoly::var(&r, 0);
        let y = MPoly::var(&r, 1);
        let i = Ideal::new(&r, vec![x.mul(&y).mul(&x.add(&y))]);
        let g = x.clone();
        let s1 = saturate(&i, &g);
        // I is contained in sat(I, g)
        for gen in i.generators() {
            assert!(s1.contains(gen));
        }
        // idempotence
        let s2 = saturate(&s1, &g);
        let b1 = s1.groebner_basis(&MonomialOrder::GrevLex);
        let b2 = s2.groebner_basis(&MonomialOrder::GrevLex);
        assert_eq!(*b1, *b2);
    }

    #[test]
    fn intersection_example() {
        let r = ring2();
        let x = MPoly::var(&r, 0);
        let y = MPoly::var(&r, 1);
        let i = intersect(&Ideal::new(&r, vec![x.clone()]), &Ideal::new(&r, vec![y.clone()]));
        // <x> ∩ <y> = <xy>
        let gb = i.groebner_basis(&MonomialOrder::GrevLex);
        assert_eq!(gb.len(), 1);
        assert_eq!(gb[0], x.mul(&y));
    }

    #[test]
    fn saturate_ideal_multi_generator() {
        let r = ring2();
        let x = MPoly::var(&r, 0);
        let y = MPoly::var(&r, 1);
        // V(xy) saturated by V(x, y) (the origin) leaves both axes
        let i = Ideal::new(&r, vec![x.mul(&y)]);
        let j = Ideal::new(&r, vec![x.clone(), y.clone()]);
        let s = saturate_ideal(&i, &j);
        let gb = s.groebner_basis(&MonomialOrder::GrevLex);
        assert_eq!(gb.len(), 1);
        assert_eq!(gb[0], x.mul(&y));
    }

    #[test]
    fn elimination_soundness() {
        // every eliminated generator reduces to zero modulo the source ideal
        let r = Ring::new(vec!["t", "x", "y"]);
        let t = MPoly::var(&r, 0);
        let x = MPoly::var(&r, 1);
        let y = MPoly::var(&r, 2);
        let i = Ideal::new(&r, vec![x.sub(&t.pow(2)), y.sub(&t.pow(3))]);
        let e = elimination_ideal(&i, &[0]);
        let gb = i.groebner_basis(&MonomialOrder::GrevLex);
        for g in e.generators() {
            assert!(normal_form(g, &gb, &MonomialOrder::GrevLex).is_zero());
        }
    }

    #[test]
    fn noether_examples() {
        let r = ring2();
        let x = MPoly::var(&r, 0);
        let y = MPoly::var(&r, 1);
        // circle: x2^2 + x1^2 - 1 is monic in x2
        let circle = Ideal::new(&r, vec![x.pow(2).add(&y.pow(2)).sub(&MPoly::one(&r))]);
        assert!(noether_position_check(&circle, 1));
        // hyperbola x*y - 1: nothing monic in y over Q[x]
        let hyp = Ideal::new(&r, vec![x.mul(&y).sub(&MPoly::one(&r))]);
        assert!(!noether_position_check(&hyp, 1));
        // parabola y - x^2 is monic in y
        let par = Ideal::new(&r, vec![y.sub(&x.pow(2))]);
        assert!(noether_position_check(&par, 1));
        let _ = rat_i(0);
    }
}
