use super::interval::Interval;
use super::rational::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Dense univariate polynomial over the rationals, coefficients stored lowest
/// degree first. The zero polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Eq)]
pub struct UPoly {
    pub coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        UPoly::new(vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        UPoly::new(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UPoly::new(coeffs.iter().map(|&c| Rational::from(BigInt::from(c))).collect())
    }

    /// x - r
    pub fn linear_root(r: &Rational) -> Self {
        UPoly::new(vec![-r.clone(), Rational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> usize {
        assert!(!self.is_zero(), "degree of zero polynomial");
        self.coeffs.len() - 1
    }

    pub fn leading_coeff(&self) -> &Rational {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn neg(&self) -> Self {
        UPoly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        UPoly::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return UPoly::zero();
        }
        UPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut out = UPoly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Exact euclidean division: `self = q * div + r` with `deg r < deg div`.
    pub fn divrem(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "division by zero polynomial");
        if self.is_zero() || self.coeffs.len() < div.coeffs.len() {
            return (UPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let dd = div.degree();
        let lead = div.leading_coeff().clone();
        let mut quo = vec![Rational::zero(); rem.len() - dd];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1;
            let c = rem[k].clone();
            if !c.is_zero() {
                let factor = &c / &lead;
                quo[k - dd] = factor.clone();
                for (i, dc) in div.coeffs.iter().enumerate() {
                    rem[k - dd + i] -= &factor * dc;
                }
            }
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
        }
        (UPoly::new(quo), UPoly::new(rem))
    }

    pub fn rem(&self, div: &Self) -> Self {
        self.divrem(div).1
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return UPoly::zero();
        }
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Interval extension by Horner evaluation; the result contains `p(x)`
    /// for every `x` in the box.
    pub fn eval_interval(&self, x: &Interval) -> Interval {
        let mut acc = Interval::point(Rational::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add_scalar(c);
        }
        acc
    }

    /// Sign of `p(x)` as -1, 0, +1.
    pub fn sign_at_rational(&self, x: &Rational) -> i32 {
        let v = self.eval(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    /// Divides out the integer content and fixes a positive leading
    /// coefficient; the canonical representative of the class `c * p`.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> =
            self.coeffs.iter().map(|c| (c * Rational::from(den.clone())).to_integer()).collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        UPoly::new(ints.into_iter().map(|c| Rational::from(c / &g)).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return UPoly::zero();
        }
        let lead = self.leading_coeff().clone();
        self.scale(&lead.recip())
    }

    /// Monic greatest common divisor by the euclidean algorithm with
    /// primitive normalization of intermediate remainders.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        if a.coeffs.len() < b.coeffs.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p / gcd(p, p')`: same roots, all simple, returned monic.
    pub fn squarefree_part(&self) -> Self {
        assert!(!self.is_zero(), "squarefree part of zero polynomial");
        if self.degree() == 0 {
            return UPoly::one();
        }
        let g = self.gcd(&self.derivative());
        if g.is_constant() {
            return self.monic();
        }
        self.divrem(&g).0.monic()
    }

    /// Cauchy bound: every real root lies strictly inside `(-B, B)`.
    pub fn cauchy_bound(&self) -> Rational {
        assert!(!self.is_zero());
        let lead = self.leading_coeff();
        let mut m = Rational::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let q = (c / lead).abs();
            if q > m {
                m = q;
            }
        }
        m + Rational::from(BigInt::from(2))
    }

    /// Upper bound on `|p'(x)|` for `|x| <= bound`: the coefficient-wise
    /// triangle inequality `sum |c_k| * k * bound^(k-1)`.
    pub fn abs_derivative_bound(&self, bound: &Rational) -> Rational {
        let mut acc = Rational::zero();
        let mut pow = Rational::one();
        for (k, c) in self.coeffs.iter().enumerate() {
            if k >= 1 {
                acc += c.abs() * Rational::from(BigInt::from(k)) * &pow;
                pow *= bound;
            }
        }
        acc
    }

    /// Composition `self(g)`.
    pub fn compose(&self, g: &UPoly) -> UPoly {
        let mut acc = UPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&UPoly::constant(c.clone()));
        }
        acc
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{}", a)?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", a)?;
                    }
                    if i == 1 {
                        write!(f, "T")?;
                    } else {
                        write!(f, "T^{}", i)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{rat, rat_i};

    #[test]
    fn gcd_examples() {
        // gcd(x^2 - 1, x - 1) = x - 1
        let a = UPoly::from_i64(&[-1, 0, 1]);
        let b = UPoly::from_i64(&[-1, 1]);
        assert_eq!(a.gcd(&b), b.monic());
        // gcd(x^2 + 1, x^2 - 1) = 1
        let c = UPoly::from_i64(&[1, 0, 1]);
        assert_eq!(c.gcd(&a), UPoly::one());
        // gcd(0, x^3) = x^3
        let d = UPoly::from_i64(&[0, 0, 0, 1]);
        assert_eq!(UPoly::zero().gcd(&d), d);
    }

    #[test]
    fn squarefree_examples() {
        // (x-1)^2 -> x-1
        let p = UPoly::from_i64(&[1, -2, 1]);
        assert_eq!(p.squarefree_part(), UPoly::from_i64(&[-1, 1]));
        // x^2-2 stays
        let q = UPoly::from_i64(&[-2, 0, 1]);
        assert_eq!(q.squarefree_part(), q);
        // x^3*(x+1) -> x*(x+1)
        let r = UPoly::from_i64(&[0, 0, 0, 1, 1]);
        assert_eq!(r.squarefree_part(), UPoly::from_i64(&[0, 1, 1]));
    }

    #[test]
    fn divrem_exact() {
        let p = UPoly::from_i64(&[-2, 0, 1]).mul(&UPoly::from_i64(&[5, 3])); // (x^2-2)(3x+5)
        let (q, r) = p.divrem(&UPoly::from_i64(&[5, 3]));
        assert!(r.is_zero());
        assert_eq!(q, UPoly::from_i64(&[-2, 0, 1]));
    }

    #[test]
    fn eval_and_interval() {
        let p = UPoly::from_i64(&[1, 2, 3]); // 3x^2+2x+1
        assert_eq!(p.eval(&rat_i(2)), rat_i(17));
        let b = p.eval_interval(&Interval::new(rat_i(0), rat_i(2)));
        assert!(b.contains(&rat_i(17)) && b.contains(&rat_i(1)) && b.contains(&p.eval(&rat(1, 2))));
    }

    #[test]
    fn primitive_canonical() {
        let p = UPoly::new(vec![rat(2, 3), rat(-4, 3)]);
        let prim = p.primitive_part();
        assert_eq!(prim, UPoly::from_i64(&[-1, 2]));
    }
}
