use super::interval::Interval;
use super::rational::{dyadic_in_open_interval, Rational};
use super::sturm::SturmChain;
use super::upoly::UPoly;
use num_traits::{One, Zero};
use rand::Rng;
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// A real algebraic number: a squarefree primitive annihilator with positive
/// leading coefficient plus an isolating interval containing exactly one of
/// its real roots. The Sturm chain of the annihilator is cached for the
/// refinement loops.
#[derive(Clone)]
pub struct AlgebraicNumber {
    annihilator: Arc<UPoly>,
    chain: Arc<SturmChain>,
    interval: Interval,
}

impl AlgebraicNumber {
    /// Canonicalizes the annihilator (squarefree, primitive, positive leading
    /// coefficient), verifies the interval isolates exactly one real root.
    pub fn new(annihilator: &UPoly, interval: Interval) -> Self {
        assert!(!annihilator.is_zero(), "zero annihilator");
        let ann = annihilator.squarefree_part().primitive_part();
        let chain = SturmChain::new(&ann);
        let mut interval = interval;
        // move a root sitting on an endpoint to an exact point interval
        if ann.sign_at_rational(&interval.lo) == 0 {
            interval = Interval::point(interval.lo);
        } else if ann.sign_at_rational(&interval.hi) == 0 {
            interval = Interval::point(interval.hi);
        }
        if interval.lo != interval.hi {
            let n = chain.count_roots_halfopen(&interval.lo, &interval.hi);
            assert!(n == 1, "interval does not isolate exactly one root (found {})", n);
        }
        AlgebraicNumber { annihilator: Arc::new(ann), chain: Arc::new(chain), interval }
    }

    pub fn from_rational(x: Rational) -> Self {
        let ann = UPoly::linear_root(&x).primitive_part();
        let chain = SturmChain::new(&ann);
        AlgebraicNumber {
            annihilator: Arc::new(ann),
            chain: Arc::new(chain),
            interval: Interval::point(x),
        }
    }

    /// All real roots of `p`, as algebraic numbers, sorted ascending.
    pub fn roots_of(p: &UPoly) -> Vec<AlgebraicNumber> {
        if p.is_constant() {
            return vec![];
        }
        let sf = p.squarefree_part().primitive_part();
        let chain = Arc::new(SturmChain::new(&sf));
        let ann = Arc::new(sf);
        chain
            .isolate_real_roots()
            .into_iter()
            .map(|interval| AlgebraicNumber {
                annihilator: ann.clone(),
                chain: chain.clone(),
                interval,
            })
            .collect()
    }

    pub fn annihilator(&self) -> &UPoly {
        &self.annihilator
    }

    pub fn interval(&self) -> &Interval {
        &self.interval
    }

    /// Exact rational value when the interval has collapsed to a point or the
    /// annihilator is linear.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.interval.lo == self.interval.hi {
            return Some(self.interval.lo.clone());
        }
        if self.annihilator.degree() == 1 {
            let r = -&self.annihilator.coeffs[0] / &self.annihilator.coeffs[1];
            return Some(r);
        }
        None
    }

    pub fn is_rational(&self, x: &Rational) -> bool {
        self.as_rational().as_ref() == Some(x)
            || (self.interval.contains(x) && self.annihilator.sign_at_rational(x) == 0)
    }

    /// Shrinks the isolating interval to width at most `width`; the same root
    /// stays isolated and the new interval is contained in the old one.
    pub fn refine(&self, width: &Rational) -> AlgebraicNumber {
        assert!(width > &Rational::zero());
        let mut out = self.clone();
        out.refine_in_place(width);
        out
    }

    pub fn refine_in_place(&mut self, width: &Rational) {
        while self.interval.lo != self.interval.hi && self.interval.width() > *width {
            self.bisect();
        }
    }

    fn bisect(&mut self) {
        let mid = self.interval.midpoint();
        if self.chain.poly_sign_at(&mid) == 0 {
            self.interval = Interval::point(mid);
            return;
        }
        let left = Interval::new(self.interval.lo.clone(), mid.clone());
        if self.chain.count_roots_halfopen(&left.lo, &left.hi) == 1 {
            self.interval = left;
        } else {
            self.interval = Interval::new(mid, self.interval.hi.clone());
        }
    }

    /// Decimal rendering to `digits` fractional digits, via refinement.
    /// Rational roots are detected and rendered exactly.
    pub fn decimal(&self, digits: usize) -> String {
        if let Some(r) = self.exact_rational_value() {
            return super::rational::render_decimal(&r, digits);
        }
        let mut target = Rational::one();
        for _ in 0..digits + 2 {
            target /= Rational::from_integer(10.into());
        }
        let refined = self.refine(&target);
        super::rational::render_decimal(&refined.interval().midpoint(), digits)
    }

    /// Exact rational value when the isolated root happens to be rational:
    /// tries the simplest rational inside a refined interval against the
    /// annihilator.
    pub fn exact_rational_value(&self) -> Option<Rational> {
        if let Some(r) = self.as_rational() {
            return Some(r);
        }
        let probe = self.refine(&Rational::new(1.into(), (1u64 << 40).into()));
        let cand =
            super::rational::simplest_rational_in(&probe.interval().lo, &probe.interval().hi);
        (self.annihilator.sign_at_rational(&cand) == 0).then_some(cand)
    }
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "root of {} in [{}, {}]",
            self.annihilator, self.interval.lo, self.interval.hi
        )
    }
}

/// Exact total-order comparison of two real algebraic numbers.
pub fn alg_compare(a: &AlgebraicNumber, b: &AlgebraicNumber) -> Ordering {
    // common-root test: a == b iff gcd of the annihilators vanishes at the
    // shared root, detected on the intersection of the isolating intervals
    if a.interval().intersects(b.interval()) {
        let g = a.annihilator().gcd(b.annihilator());
        if !g.is_constant() {
            let lo = a.interval().lo.clone().max(b.interval().lo.clone());
            let hi = a.interval().hi.clone().min(b.interval().hi.clone());
            let chain = SturmChain::new(&g);
            // a root of g inside both isolating intervals is a common root of
            // the two annihilators, hence the isolated root of each
            if chain.count_roots_closed(&lo, &hi) >= 1 {
                return Ordering::Equal;
            }
        }
    }
    // distinct numbers: refine until the intervals separate
    let mut a = a.clone();
    let mut b = b.clone();
    loop {
        if a.interval().hi < b.interval().lo {
            return Ordering::Less;
        }
        if b.interval().hi < a.interval().lo {
            return Ordering::Greater;
        }
        if a.interval().lo == a.interval().hi && b.interval().lo == b.interval().hi {
            return a.interval().lo.cmp(&b.interval().lo);
        }
        let wa = a.interval().width();
        let wb = b.interval().width();
        let half = |w: Rational| w / Rational::from_integer(2.into());
        if wa >= wb && !wa.is_zero() {
            a.refine_in_place(&half(wa));
        } else {
            b.refine_in_place(&half(wb));
        }
    }
}

/// Exact sign of `p(alpha)`.
pub fn sign_at(p: &UPoly, alpha: &AlgebraicNumber) -> i32 {
    if p.is_zero() {
        return 0;
    }
    if let Some(r) = alpha.as_rational() {
        return p.sign_at_rational(&r);
    }
    // zero test: p(alpha) = 0 iff alpha is a root of gcd(p, annihilator)
    let g = p.gcd(alpha.annihilator());
    if !g.is_constant() {
        let chain = SturmChain::new(&g);
        if chain.count_roots_closed(&alpha.interval().lo, &alpha.interval().hi) >= 1 {
            return 0;
        }
    }
    // nonzero: interval evaluation separates from zero after refinement
    let mut a = alpha.clone();
    loop {
        let v = p.eval_interval(a.interval());
        if !v.contains_zero() {
            return if v.lo > Rational::zero() { 1 } else { -1 };
        }
        let w = a.interval().width() / Rational::from_integer(2.into());
        a.refine_in_place(&w);
    }
}

/// A rational strictly between `a < b`, dyadic, with seeded jitter.
pub fn rational_between<R: Rng>(
    a: &AlgebraicNumber,
    b: &AlgebraicNumber,
    rng: &mut R,
) -> Rational {
    assert!(alg_compare(a, b) == Ordering::Less, "rational_between requires a < b");
    let mut a = a.clone();
    let mut b = b.clone();
    while !(a.interval().hi < b.interval().lo) {
        let wa = a.interval().width();
        let wb = b.interval().width();
        let half = |w: Rational| w / Rational::from_integer(2.into());
        if wa >= wb && !wa.is_zero() {
            a.refine_in_place(&half(wa));
        } else {
            b.refine_in_place(&half(wb));
        }
    }
    dyadic_in_open_interval(&a.interval().hi, &b.interval().lo, rng)
}

/// A rational strictly below `a`, dyadic, with seeded jitter.
pub fn rational_below<R: Rng>(a: &AlgebraicNumber, rng: &mut R) -> Rational {
    let lo = &a.interval().lo;
    dyadic_in_open_interval(&(lo - Rational::from_integer(2.into())), lo, rng)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{rat, rat_i};
    use rand::SeedableRng;

    fn sqrt2() -> AlgebraicNumber {
        AlgebraicNumber::new(&UPoly::from_i64(&[-2, 0, 1]), Interval::new(rat_i(1), rat_i(2)))
    }

    fn sqrt3() -> AlgebraicNumber {
        AlgebraicNumber::new(&UPoly::from_i64(&[-3, 0, 1]), Interval::new(rat_i(1), rat_i(2)))
    }

    #[test]
    fn compare_examples() {
        assert_eq!(alg_compare(&sqrt2(), &sqrt3()), Ordering::Less);
        // x^4 - 4 isolates sqrt(2) on [1, 2] as well
        let other =
            AlgebraicNumber::new(&UPoly::from_i64(&[-4, 0, 0, 0, 1]), Interval::new(rat_i(1), rat_i(2)));
        assert_eq!(alg_compare(&sqrt2(), &other), Ordering::Equal);
        let five = AlgebraicNumber::new(&UPoly::from_i64(&[-5, 1]), Interval::new(rat_i(4), rat_i(6)));
        assert_eq!(alg_compare(&five, &sqrt2()), Ordering::Greater);
        assert_eq!(alg_compare(&sqrt2(), &sqrt2()), Ordering::Equal);
    }

    #[test]
    fn refine_keeps_root() {
        let a = sqrt2();
        let r = a.refine(&rat(1, 1024));
        assert!(r.interval().width() <= rat(1, 1024));
        assert!(r.interval().lo >= rat_i(1) && r.interval().hi <= rat_i(2));
        // decimal expansion of sqrt(2) starts 1.41421
        let d = r.decimal(5);
        assert!(d.starts_with("1.4142"), "got {d}");
    }

    #[test]
    fn sign_examples() {
        let a = sqrt2();
        assert_eq!(sign_at(&UPoly::from_i64(&[0, 1]), &a), 1);
        assert_eq!(sign_at(&UPoly::from_i64(&[-2, 0, 1]), &a), 0);
        assert_eq!(sign_at(&UPoly::from_i64(&[-2, 1]), &a), -1);
    }

    #[test]
    fn betweenness() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let r = rational_between(&sqrt2(), &sqrt3(), &mut rng);
        // verify sqrt(2) < r < sqrt(3) by squaring
        assert!(&r * &r > rat_i(2) && &r * &r < rat_i(3) && r > rat_i(0));
        let below = rational_below(&sqrt2(), &mut rng);
        assert!(below < rat_i(1)); // below the isolating interval, hence below sqrt(2)
    }

    #[test]
    fn exact_rational_roots() {
        let three = AlgebraicNumber::new(&UPoly::from_i64(&[-3, 1]), Interval::new(rat_i(2), rat_i(4)));
        assert_eq!(three.as_rational(), Some(rat_i(3)));
        let r = three.refine(&rat(1, 8));
        assert!(r.interval().contains(&rat_i(3)));
    }
}
