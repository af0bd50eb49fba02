use super::rational::Rational;
use num_traits::Zero;

/// Closed interval with exact rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Interval { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.lo <= Rational::zero() && Rational::zero() <= self.hi
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        !(self.hi < other.lo || other.hi < self.lo)
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        Interval::new(&self.lo - &other.hi, &self.hi - &other.lo)
    }

    pub fn neg(&self) -> Interval {
        Interval::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        Interval::new(lo, hi)
    }

    pub fn mul_scalar(&self, c: &Rational) -> Interval {
        if c >= &Rational::zero() {
            Interval::new(&self.lo * c, &self.hi * c)
        } else {
            Interval::new(&self.hi * c, &self.lo * c)
        }
    }

    pub fn add_scalar(&self, c: &Rational) -> Interval {
        Interval::new(&self.lo + c, &self.hi + c)
    }

    /// Reciprocal; requires the interval to exclude zero.
    pub fn recip(&self) -> Interval {
        assert!(!self.contains_zero(), "division by interval containing zero");
        Interval::new(
            Rational::from_integer(1.into()) / &self.hi,
            Rational::from_integer(1.into()) / &self.lo,
        )
    }

    pub fn div(&self, other: &Interval) -> Interval {
        self.mul(&other.recip())
    }

    pub fn pow(&self, e: usize) -> Interval {
        let mut out = Interval::point(Rational::from_integer(1.into()));
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{rat, rat_i};

    #[test]
    fn arithmetic_containment() {
        let a = Interval::new(rat_i(-1), rat_i(2));
        let sq = a.mul(&a);
        // naive multiplication gives [-2, 4], which contains [0, 4]
        assert!(sq.lo <= rat_i(0) && sq.hi >= rat_i(4));
        let b = Interval::new(rat(1, 2), rat_i(3));
        let r = b.recip();
        assert_eq!(r.lo, rat(1, 3));
        assert_eq!(r.hi, rat_i(2));
    }
}
