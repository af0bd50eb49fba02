use super::order::MonomialOrder;
use super::ring::{Monomial, Ring};
use crate::arith::{Interval, Rational, UPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Sparse multivariate polynomial: a term map from monomials to nonzero
/// rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    ring: Ring,
    terms: BTreeMap<Monomial, Rational>,
}

impl MPoly {
    pub fn zero(ring: &Ring) -> Self {
        MPoly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        let mut p = MPoly::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ring.nvars()), c);
        }
        p
    }

    pub fn one(ring: &Ring) -> Self {
        MPoly::constant(ring, Rational::one())
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        assert!(i < ring.nvars());
        let mut p = MPoly::zero(ring);
        p.terms.insert(Monomial::var(ring.nvars(), i), Rational::one());
        p
    }

    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = MPoly::zero(ring);
        for (m, c) in terms {
            assert_eq!(m.exponents.len(), ring.nvars());
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.is_constant() {
            return Some(self.terms.values().next().unwrap().clone());
        }
        None
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.keys().map(|m| m.exponents[var]).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn assert_same_ring(&self, other: &MPoly) {
        assert!(self.ring == other.ring, "ring mismatch: {:?} vs {:?}", self.ring, other.ring);
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        self.assert_same_ring(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.assert_same_ring(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.ring);
        }
        MPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.ring);
        }
        MPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(mm, k)| (mm.mul(m), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        self.assert_same_ring(other);
        let mut out = MPoly::zero(&self.ring);
        let (small, large) =
            if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        for (m, c) in &small.terms {
            for (mm, cc) in &large.terms {
                out.add_term(m.mul(mm), c * cc);
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> MPoly {
        let mut out = MPoly::one(&self.ring);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Leading term under the given order.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp_monomials(a, b))
    }

    pub fn partial_derivative(&self, var: usize) -> MPoly {
        let mut out = MPoly::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exponents[var];
            if e == 0 {
                continue;
            }
            let mut mm = m.clone();
            mm.exponents[var] -= 1;
            out.add_term(mm, c * Rational::from(BigInt::from(e)));
        }
        out
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.ring.nvars(), "point length mismatch");
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents.iter().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Interval extension: the result contains `p(x)` for every `x` in the box.
    pub fn evaluate_box(&self, box_: &[Interval]) -> Interval {
        assert_eq!(box_.len(), self.ring.nvars(), "box length mismatch");
        let mut acc = Interval::point(Rational::zero());
        for (m, c) in &self.terms {
            let mut t = Interval::point(c.clone());
            for (i, &e) in m.exponents.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&box_[i].pow(e as usize));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Substitutes each variable by the given polynomial (all in the target
    /// ring of the images).
    pub fn substitute(&self, images: &[MPoly]) -> MPoly {
        assert_eq!(images.len(), self.ring.nvars());
        let target = images
            .first()
            .map(|p| p.ring().clone())
            .unwrap_or_else(|| self.ring.clone());
        let mut acc = MPoly::zero(&target);
        // memoized powers per variable
        let mut powers: Vec<Vec<MPoly>> = images.iter().map(|p| vec![MPoly::one(&target), p.clone()]).collect();
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(&target, c.clone());
            for (i, &e) in m.exponents.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e as usize]);
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Embeds this polynomial into a ring with extra trailing variables.
    pub fn embed(&self, target: &Ring) -> MPoly {
        assert!(target.nvars() >= self.ring.nvars());
        for (a, b) in self.ring.var_names().iter().zip(target.var_names()) {
            assert_eq!(a, b, "ring embedding must preserve the leading variables");
        }
        let extra = target.nvars() - self.ring.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = m.exponents.clone();
                exps.extend(std::iter::repeat(0).take(extra));
                (Monomial { exponents: exps }, c.clone())
            })
            .collect();
        MPoly { ring: target.clone(), terms }
    }

    /// Restricts to a smaller ring; every term must only use the retained
    /// leading variables.
    pub fn restrict(&self, target: &Ring) -> MPoly {
        assert!(target.nvars() <= self.ring.nvars());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                assert!(
                    m.exponents[target.nvars()..].iter().all(|&e| e == 0),
                    "polynomial uses a dropped variable"
                );
                (Monomial { exponents: m.exponents[..target.nvars()].to_vec() }, c.clone())
            })
            .collect();
        MPoly { ring: target.clone(), terms }
    }

    /// True when no term involves any of the given variables.
    pub fn free_of(&self, vars: &[usize]) -> bool {
        self.terms.keys().all(|m| vars.iter().all(|&v| m.exponents[v] == 0))
    }

    /// Collects the polynomial as a univariate polynomial in `var` with
    /// multivariate coefficients.
    pub fn as_univariate_in(&self, var: usize) -> Vec<MPoly> {
        let d = self.degree_in(var) as usize;
        let mut out = vec![MPoly::zero(&self.ring); d + 1];
        for (m, c) in &self.terms {
            let e = m.exponents[var] as usize;
            let mut mm = m.clone();
            mm.exponents[var] = 0;
            out[e].add_term(mm, c.clone());
        }
        out
    }

    /// For a polynomial using only one variable, its dense coefficient list.
    pub fn to_upoly(&self, var: usize) -> UPoly {
        let mut coeffs = vec![Rational::zero(); self.degree_in(var) as usize + 1];
        for (m, c) in &self.terms {
            assert!(
                m.total_degree() == m.exponents[var] as u32,
                "polynomial is not univariate in the requested variable"
            );
            coeffs[m.exponents[var] as usize] = c.clone();
        }
        UPoly::new(coeffs)
    }

    /// Canonical integer form: content removed, leading coefficient (under
    /// grevlex) positive. Controls coefficient growth in ideal computations.
    pub fn primitive_part(&self) -> MPoly {
        self.primitive_part_under(&MonomialOrder::GrevLex)
    }

    /// Primitive form with positive leading coefficient under a given order.
    pub fn primitive_part_under(&self, order: &MonomialOrder) -> MPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
        }
        let mut num = BigInt::zero();
        for c in self.terms.values() {
            num = num.gcd(&(c * Rational::from(den.clone())).to_integer());
        }
        let mut scale = Rational::new(den, num);
        let lead = self.leading_term(order).map(|(_, c)| c.clone()).unwrap();
        if (lead * &scale).is_negative() {
            scale = -scale;
        }
        self.scale(&scale)
    }
}

impl MPoly {
    /// Renders with the ring's variable names; canonical term order is
    /// grevlex descending.
    pub fn format_with_names(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let order = MonomialOrder::GrevLex;
        let mut terms: Vec<(&Monomial, &Rational)> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| order.cmp_monomials(b, a));
        let mut out = String::new();
        for (i, (m, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !a.is_one() || m.is_one() {
                factors.push(if a.denom().is_one() {
                    a.numer().to_string()
                } else {
                    format!("{}/{}", a.numer(), a.denom())
                });
            }
            for (v, &e) in m.exponents.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = &self.ring.var_names()[v];
                if e == 1 {
                    factors.push(name.clone());
                } else {
                    factors.push(format!("{name}^{e}"));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with_names())
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with_names())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_i};

    fn xy_ring() -> Ring {
        Ring::new(vec!["x", "y"])
    }

    #[test]
    fn ring_ops() {
        let r = xy_ring();
        let x = MPoly::var(&r, 0);
        let y = MPoly::var(&r, 1);
        // (x+y) + (x-y) = 2x
        let s = x.add(&y).add(&x.sub(&y));
        assert_eq!(s, x.scale(&rat_i(2)));
        // (x+y)(x-y) = x^2 - y^2
        let p = x.add(&y).mul(&x.sub(&y));
        assert_eq!(p, x.mul(&x).sub(&y.mul(&y)));
        // p + 0 = p
        assert_eq!(p.add(&MPoly::zero(&r)), p);
    }

    #[test]
    fn evaluate_and_box() {
        let r = xy_ring();
        let x = MPoly::var(&r, 0);
        let y = MPoly::var(&r, 1);
        let p = x.mul(&x).add(&y.mul(&y));
        assert_eq!(p.evaluate(&[rat_i(3), rat_i(4)]), rat_i(25));
        let b = p.evaluate_box(&[
            Interval::new(rat_i(0), rat_i(1)),
            Interval::new(rat_i(0), rat_i(1)),
        ]);
        assert!(b.contains(&rat_i(0)) && b.contains(&rat_i(2)) && b.contains(&rat(1, 2)));
    }

    #[test]
    fn degree_and_derivative() {
        let r = xy_ring();
        let x = MPoly::var(&r, 0);
        let y = MPoly::var(&r, 1);
        let p = x.pow(2).mul(&y).add(&y.pow(3)); // x^2 y + y^3
        assert_eq!(p.total_degree(), 3);
        assert_eq!(p.partial_derivative(0), x.mul(&y).scale(&rat_i(2)));
        assert_eq!(
            p.partial_derivative(1),
            x.pow(2).add(&y.pow(2).scale(&rat_i(3)))
        );
    }

    #[test]
    fn primitive_form() {
        let r = xy_ring();
        let x = MPoly::var(&r, 0);
        let p = x.scale(&rat(2, 3)).add(&MPoly::constant(&r, rat(4, 3)));
        let prim = p.primitive_part();
        assert_eq!(prim, x.add(&MPoly::constant(&r, rat_i(2))));
    }

    #[test]
    fn display_roundtrip_shape() {
        let r = xy_ring();
        let x = MPoly::var(&r, 0);
        let y = MPoly::var(&r, 1);
        let p = x.pow(2).sub(&y.scale(&rat(1, 2)));
        assert_eq!(p.format_with_names(), "x^2 - 1/2*y");
    }
}
