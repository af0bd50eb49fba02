use super::ideal::normal_form;
use crate::arith::{Rational, UPoly};
use crate::mpoly::{MPoly, Monomial, MonomialOrder, Ring};
use num_traits::{One, Zero};
use std::collections::{BTreeSet, HashMap};

/// Standard monomials of a zero-dimensional quotient: all monomials not
/// divisible by any leading monomial of the (grevlex) basis, in increasing
/// grevlex order. Panics if the staircase is infinite.
pub fn quotient_basis(ring: &Ring, basis: &[MPoly]) -> Vec<Monomial> {
    let order = MonomialOrder::GrevLex;
    if basis.len() == 1 && basis[0].is_constant() {
        return vec![];
    }
    let lms: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_term(&order).unwrap().0.clone())
        .collect();
    let n = ring.nvars();
    // bound per variable from the pure-power leading monomials
    let mut bounds = vec![0u16; n];
    for v in 0..n {
        let b = lms
            .iter()
            .filter(|m| m.exponents[v] > 0 && m.total_degree() == m.exponents[v] as u32)
            .map(|m| m.exponents[v])
            .min();
        bounds[v] = b.unwrap_or_else(|| panic!("staircase is infinite: no pure power in variable {v}"));
    }
    let mut out = Vec::new();
    let mut cur = Monomial::one(n);
    enumerate(&lms, &bounds, &mut cur, 0, &mut out);
    out.sort_by(|a, b| order.cmp_monomials(a, b));
    out
}

fn enumerate(lms: &[Monomial], bounds: &[u16], cur: &mut Monomial, var: usize, out: &mut Vec<Monomial>) {
    if var == bounds.len() {
        if !lms.iter().any(|m| m.divides(cur)) {
            out.push(cur.clone());
        }
        return;
    }
    for e in 0..bounds[var] {
        cur.exponents[var] = e;
        enumerate(lms, bounds, cur, var + 1, out);
    }
    cur.exponents[var] = 0;
}

/// Linear-algebra view of a zero-dimensional quotient ring: normal forms as
/// coordinate vectors over the standard-monomial basis, with memoized border
/// multiplications.
pub struct Quotient<'a> {
    pub ring: Ring,
    basis: &'a [MPoly],
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    border_cache: HashMap<Monomial, Vec<Rational>>,
}

impl<'a> Quotient<'a> {
    pub fn new(ring: &Ring, basis: &'a [MPoly]) -> Self {
        let monomials = quotient_basis(ring, basis);
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Quotient {
            ring: ring.clone(),
            basis,
            monomials,
            index,
            border_cache: HashMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn nf_vector(&mut self, p: &MPoly) -> Vec<Rational> {
        let nf = normal_form(p, self.basis, &MonomialOrder::GrevLex);
        let mut v = vec![Rational::zero(); self.dim()];
        for (m, c) in nf.terms() {
            let i = *self.index.get(m).expect("normal form outside the staircase");
            v[i] = c.clone();
        }
        v
    }

    /// Vector of `x_var * q` where `q` is given as a coordinate vector.
    pub fn mul_var(&mut self, v: &[Rational], var: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let m = self.monomials[i].clone();
            let mut shifted = m.clone();
            shifted.exponents[var] += 1;
            if let Some(&j) = self.index.get(&shifted) {
                out[j] += c;
                continue;
            }
            if !self.border_cache.contains_key(&shifted) {
                let p = MPoly::from_terms(&self.ring, [(shifted.clone(), Rational::one())]);
                let nfv = self.nf_vector(&p);
                self.border_cache.insert(shifted.clone(), nfv);
            }
            let nfv = self.border_cache.get(&shifted).unwrap().clone();
            for (j, b) in nfv.iter().enumerate() {
                if !b.is_zero() {
                    out[j] += c * b;
                }
            }
        }
        out
    }

    /// Vector of the product `g * q` for a polynomial `g`.
    pub fn mul_poly(&mut self, v: &[Rational], g: &MPoly) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (m, c) in g.terms() {
            let mut t = v.to_vec();
            for (var, &e) in m.exponents.iter().enumerate() {
                for _ in 0..e {
                    t = self.mul_var(&t, var);
                }
            }
            for (j, b) in t.iter().enumerate() {
                if !b.is_zero() {
                    out[j] += c * b;
                }
            }
        }
        out
    }

    /// Coordinate vector of the element `1`.
    pub fn one_vector(&self) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        let i = *self.index.get(&Monomial::one(self.ring.nvars())).unwrap();
        v[i] = Rational::one();
        v
    }
}

/// Row-reducing accumulator for detecting linear dependence of a vector
/// stream; keeps reduced rows with recorded combination coefficients.
pub struct LinearTrap {
    dim: usize,
    rows: Vec<(usize, Vec<Rational>, Vec<Rational>)>, // (pivot, row, combo)
}

impl LinearTrap {
    pub fn new(dim: usize) -> Self {
        LinearTrap { dim, rows: vec![] }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    /// Feeds a vector with its tag-combination; returns the dependency
    /// coefficients over the previously inserted vectors when dependent.
    pub fn offer(&mut self, v: Vec<Rational>) -> Option<Vec<Rational>> {
        let ncoeff = self.rows.len() + 1;
        let mut combo = vec![Rational::zero(); ncoeff];
        combo[ncoeff - 1] = Rational::one();
        let mut row = v;
        for (pivot, r, c) in &self.rows {
            if row[*pivot].is_zero() {
                continue;
            }
            let f = row[*pivot].clone() / &r[*pivot];
            for k in 0..self.dim {
                let t = &r[k] * &f;
                row[k] -= t;
            }
            for (k, cc) in c.iter().enumerate() {
                let t = cc * &f;
                combo[k] -= t;
            }
        }
        match row.iter().position(|c| !c.is_zero()) {
            Some(pivot) => {
                self.rows.push((pivot, row, combo));
                None
            }
            None => Some(combo),
        }
    }
}

/// FGLM order conversion for zero-dimensional ideals: enumerates monomials in
/// increasing target order, detects linear dependences of their normal forms,
/// and emits the reduced Gröbner basis for the target order.
pub fn convert_zero_dim(ring: &Ring, grevlex_basis: &[MPoly], target: &MonomialOrder) -> Vec<MPoly> {
    if grevlex_basis.len() == 1 && grevlex_basis[0].is_constant() {
        return vec![MPoly::one(ring)];
    }
    let mut quotient = Quotient::new(ring, grevlex_basis);
    let dim = quotient.dim();
    let n = ring.nvars();
    let mut trap = LinearTrap::new(dim);
    let mut listed: Vec<Monomial> = Vec::new(); // independent monomials, in target order
    let mut new_basis: Vec<MPoly> = Vec::new();
    let mut new_lms: Vec<Monomial> = Vec::new();
    let mut frontier: BTreeSet<OrderedMono> = BTreeSet::new();
    frontier.insert(OrderedMono { key: order_key(target, &Monomial::one(n)), m: Monomial::one(n) });
    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    while let Some(OrderedMono { m, .. }) = frontier.pop_first() {
        if new_lms.iter().any(|lm| lm.divides(&m)) {
            continue;
        }
        let p = MPoly::from_terms(ring, [(m.clone(), Rational::one())]);
        let v = quotient.nf_vector(&p);
        match trap.offer(v) {
            None => {
                listed.push(m.clone());
                // enqueue successors
                for var in 0..n {
                    let mut s = m.clone();
                    s.exponents[var] += 1;
                    if seen.insert(s.clone()) {
                        frontier.insert(OrderedMono { key: order_key(target, &s), m: s });
                    }
                }
            }
            Some(combo) => {
                // m + sum combo_k * listed_k = 0 in the quotient
                let mut g = MPoly::from_terms(ring, [(m.clone(), Rational::one())]);
                for (k, c) in combo[..combo.len() - 1].iter().enumerate() {
                    if !c.is_zero() {
                        g = g.add(&MPoly::from_terms(ring, [(listed[k].clone(), c.clone())]));
                    }
                }
                new_lms.push(m.clone());
                new_basis.push(g.primitive_part_under(target));
            }
        }
    }
    new_basis.sort_by(|a, b| {
        target.cmp_monomials(
            a.leading_term(target).unwrap().0,
            b.leading_term(target).unwrap().0,
        )
    });
    new_basis
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct OrderedMono {
    key: Vec<i64>,
    m: Monomial,
}

/// Encodes a monomial so that lexicographic comparison of the keys matches
/// the monomial order.
fn order_key(order: &MonomialOrder, m: &Monomial) -> Vec<i64> {
    match order {
        MonomialOrder::Lex => m.exponents.iter().map(|&e| e as i64).collect(),
        MonomialOrder::GrevLex => {
            let mut k = vec![m.total_degree() as i64];
            k.extend(m.exponents.iter().rev().map(|&e| -(e as i64)));
            k
        }
        MonomialOrder::Block { front } => {
            let fd: i64 = front.iter().map(|&i| m.exponents[i] as i64).sum();
            let mut k = vec![fd];
            k.extend(front.iter().rev().map(|&i| -(m.exponents[i] as i64)));
            let back: Vec<usize> =
                (0..m.exponents.len()).filter(|i| !front.contains(i)).collect();
            let bd: i64 = back.iter().map(|&i| m.exponents[i] as i64).sum();
            k.push(bd);
            k.extend(back.iter().rev().map(|&i| -(m.exponents[i] as i64)));
            k
        }
    }
}

/// Minimal polynomial of the residue class of `g` in the zero-dimensional
/// quotient; squarefree whenever the ideal is radical.
pub fn minimal_polynomial(ring: &Ring, grevlex_basis: &[MPoly], g: &MPoly) -> UPoly {
    let mut quotient = Quotient::new(ring, grevlex_basis);
    let dim = quotient.dim();
    if dim == 0 {
        return UPoly::one();
    }
    let mut trap = LinearTrap::new(dim);
    let mut v = quotient.one_vector();
    loop {
        if let Some(combo) = trap.offer(v.clone()) {
            // combo gives monic dependency: g^k + sum combo_j g^j = 0
            return UPoly::new(combo.to_vec());
        }
        v = quotient.mul_poly(&v, g);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_i;
    use crate::groebner::Ideal;

    #[test]
    fn quotient_and_minpoly() {
        let r = Ring::new(vec!["x", "y"]);
        let x = MPoly::var(&r, 0);
        let y = MPoly::var(&r, 1);
        let i = Ideal::new(&r, vec![x.pow(2).sub(&MPoly::constant(&r, rat_i(2))), y.sub(&x)]);
        let gb = i.groebner_basis(&MonomialOrder::GrevLex);
        assert_eq!(quotient_basis(&r, &gb).len(), 2);
        // minimal polynomial of x is t^2 - 2
        let mp = minimal_polynomial(&r, &gb, &x);
        assert_eq!(mp.primitive_part(), UPoly::from_i64(&[-2, 0, 1]));
        // minimal polynomial of x + y = 2x is t^2 - 8
        let mp2 = minimal_polynomial(&r, &gb, &x.add(&y));
        assert_eq!(mp2.primitive_part(), UPoly::from_i64(&[-8, 0, 1]));
    }

    #[test]
    fn fglm_matches_buchberger_lex() {
        let r = Ring::new(vec!["x", "y"]);
        let x = MPoly::var(&r, 0);
        let y = MPoly::var(&r, 1);
        // two ideals computed both ways
        for gens in [
            vec![x.pow(2).sub(&y), y.pow(2).sub(&x)],
            vec![x.pow(2).add(&y.pow(2)).sub(&MPoly::one(&r)), x.mul(&y).sub(&MPoly::constant(&r, rat_i(1)))],
        ] {
            let i = Ideal::new(&r, gens);
            let grevlex = i.groebner_basis(&MonomialOrder::GrevLex);
            if !super::super::ideal::basis_is_zero_dimensional(&r, &grevlex) {
                continue;
            }
            let via_fglm = convert_zero_dim(&r, &grevlex, &MonomialOrder::Lex);
            let direct = buchberger_lex_basis(&i);
            assert_eq!(via_fglm, direct);
        }
    }

    fn buchberger_lex_basis(i: &Ideal) -> Vec<MPoly> {
        use crate::groebner::engine::Engine;
        let engine = Engine::new(MonomialOrder::Lex);
        engine
            .buchberger(i.generators())
            .into_iter()
            .map(|p| engine.to_mpoly(&p, i.ring()))
            .collect()
    }
}
