use super::interval::Interval;
use super::rational::Rational;
use super::upoly::UPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Sturm chain of a squarefree polynomial, used for exact real root counting
/// and isolation by bisection. The chain is stored with integer coefficients
/// so that sign evaluations run on integers (no gcd normalization).
#[derive(Clone, Debug)]
pub struct SturmChain {
    pub poly: UPoly,
    chain: Vec<Vec<BigInt>>,
}

fn integer_coeffs(p: &UPoly) -> Vec<BigInt> {
    let mut den = BigInt::one();
    for c in &p.coeffs {
        den = den.lcm(c.denom());
    }
    let ints: Vec<BigInt> =
        p.coeffs.iter().map(|c| (c * Rational::from(den.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for c in &ints {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if g.is_one() || g.is_zero() {
        ints
    } else {
        ints.into_iter().map(|c| c / &g).collect()
    }
}

/// Sign of `p(a/b)` for integer coefficients and `b > 0`, by the homogenized
/// integer Horner scheme `sum c_i a^i b^(d-i)`.
fn sign_at_fraction(coeffs: &[BigInt], a: &BigInt, b: &BigInt) -> i32 {
    if coeffs.is_empty() {
        return 0;
    }
    let mut acc = coeffs.last().unwrap().clone();
    let mut bpow = BigInt::one();
    for c in coeffs.iter().rev().skip(1) {
        bpow *= b;
        acc = acc * a + c * &bpow;
    }
    match acc.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

impl SturmChain {
    /// Builds the chain for `squarefree_part(p)`. Intermediate remainders are
    /// normalized by their (positive) integer content to keep coefficients
    /// small; this leaves all signs unchanged.
    pub fn new(p: &UPoly) -> Self {
        let sf = p.squarefree_part();
        let mut chain_polys = vec![sf.clone()];
        if sf.degree() >= 1 {
            chain_polys.push(sf.derivative().primitive_positive());
            loop {
                let n = chain_polys.len();
                let r = chain_polys[n - 2].rem(&chain_polys[n - 1]);
                if r.is_zero() {
                    break;
                }
                chain_polys.push(r.neg().primitive_positive());
            }
        }
        let chain = chain_polys.iter().map(integer_coeffs).collect();
        SturmChain { poly: sf, chain }
    }

    /// Sign of the (squarefree) polynomial at a rational point, evaluated
    /// with integer arithmetic.
    pub fn poly_sign_at(&self, x: &Rational) -> i32 {
        sign_at_fraction(&self.chain[0], x.numer(), x.denom())
    }

    /// Number of sign variations of the chain at `x`.
    fn variations_at(&self, x: &Rational) -> usize {
        let a = x.numer();
        let b = x.denom();
        let mut last = 0i32;
        let mut count = 0usize;
        for p in &self.chain {
            let s = sign_at_fraction(p, a, b);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    /// Requires `a <= b`.
    pub fn count_roots_halfopen(&self, a: &Rational, b: &Rational) -> usize {
        assert!(a <= b);
        self.variations_at(a) - self.variations_at(b)
    }

    /// Number of distinct real roots in `[a, b]`.
    pub fn count_roots_closed(&self, a: &Rational, b: &Rational) -> usize {
        let mut n = self.count_roots_halfopen(a, b);
        if self.poly_sign_at(a) == 0 {
            n += 1;
        }
        n
    }

    /// Total number of distinct real roots.
    pub fn count_real_roots(&self) -> usize {
        if self.poly.is_constant() {
            return 0;
        }
        let bound = self.poly.cauchy_bound();
        self.count_roots_halfopen(&-bound.clone(), &bound)
    }

    /// Isolating intervals for every real root, sorted ascending and pairwise
    /// disjoint (`I.hi < J.lo` for consecutive intervals). Each interval
    /// either is an exact point `[r, r]` or has the root strictly interior.
    pub fn isolate_real_roots(&self) -> Vec<Interval> {
        if self.poly.is_constant() {
            return vec![];
        }
        let bound = self.poly.cauchy_bound();
        let mut out = Vec::new();
        self.isolate_in(&-bound.clone(), &bound, &mut out);
        // bisection can leave neighbours sharing an endpoint; shrink until
        // all intervals are strictly separated
        for i in 0..out.len().saturating_sub(1) {
            while !(out[i].hi < out[i + 1].lo) {
                if out[i].width() >= out[i + 1].width() {
                    out[i] = self.bisect_once(&out[i]);
                } else {
                    out[i + 1] = self.bisect_once(&out[i + 1]);
                }
            }
        }
        out
    }

    /// Halves an isolating interval while keeping its unique root inside.
    pub fn bisect_once(&self, iv: &Interval) -> Interval {
        if iv.lo == iv.hi {
            return iv.clone();
        }
        let mid = iv.midpoint();
        if self.poly_sign_at(&mid) == 0 {
            return Interval::point(mid);
        }
        let left = Interval::new(iv.lo.clone(), mid.clone());
        if self.count_roots_halfopen(&left.lo, &left.hi) == 1 {
            left
        } else {
            Interval::new(mid, iv.hi.clone())
        }
    }

    /// Recursive bisection on `(a, b]`; endpoints are guaranteed non-roots by
    /// construction (roots found at midpoints are emitted as exact points and
    /// excised by a strip of width shrunk until it contains only that root).
    fn isolate_in(&self, a: &Rational, b: &Rational, out: &mut Vec<Interval>) {
        let n = self.count_roots_halfopen(a, b);
        if n == 0 {
            return;
        }
        if n == 1 {
            out.push(Interval::new(a.clone(), b.clone()));
            return;
        }
        let mid = (a + b) / Rational::from_integer(2.into());
        if self.poly_sign_at(&mid) == 0 {
            // exact root at the midpoint: carve out a strip around it that
            // contains no other root, then recurse on both sides
            let mut w = (b - a) / Rational::from_integer(4.into());
            loop {
                let lo = &mid - &w;
                let hi = &mid + &w;
                if self.poly_sign_at(&lo) != 0
                    && self.poly_sign_at(&hi) != 0
                    && self.count_roots_halfopen(&lo, &hi) == 1
                {
                    self.isolate_in(a, &lo, out);
                    out.push(Interval::point(mid.clone()));
                    self.isolate_in(&hi, b, out);
                    return;
                }
                w /= Rational::from_integer(2.into());
            }
        }
        self.isolate_in(a, &mid, out);
        self.isolate_in(&mid, b, out);
    }
}

impl UPoly {
    /// Primitive part with positive leading coefficient times the sign of the
    /// original leading coefficient preserved. Used for Sturm chains where
    /// only positive rescaling is sound.
    fn primitive_positive(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let prim = self.primitive_part();
        // primitive_part normalizes to positive leading coefficient, which
        // may flip the sign; undo the flip when it happened
        if (self.leading_coeff() < &Rational::zero()) != (prim.leading_coeff() < &Rational::zero())
        {
            prim.neg()
        } else {
            prim
        }
    }
}

/// Sorted disjoint isolating intervals for the real roots of `p`.
/// Root multiplicities are erased: each interval holds exactly one real root
/// of the squarefree part.
pub fn real_root_isolation(p: &UPoly) -> Vec<Interval> {
    assert!(!p.is_zero(), "root isolation of the zero polynomial");
    SturmChain::new(p).isolate_real_roots()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{rat, rat_i};

    #[test]
    fn no_real_roots() {
        assert!(real_root_isolation(&UPoly::from_i64(&[1, 0, 1])).is_empty());
    }

    #[test]
    fn sqrt_two() {
        let roots = real_root_isolation(&UPoly::from_i64(&[-2, 0, 1]));
        assert_eq!(roots.len(), 2);
        assert!(roots[0].hi < roots[1].lo);
        assert!(roots[0].contains(&rat(-3, 2)) || roots[0].lo <= rat(-3, 2));
        // second root is sqrt(2) in (1, 2)
        assert!(roots[1].lo <= rat(141_422, 100_000));
        assert!(roots[1].hi >= rat(141_421, 100_000));
    }

    #[test]
    fn three_rational_roots() {
        // (x-1)(x-2)(x-3)
        let p = UPoly::from_i64(&[-6, 11, -6, 1]);
        let roots = real_root_isolation(&p);
        assert_eq!(roots.len(), 3);
        for (i, r) in [rat_i(1), rat_i(2), rat_i(3)].iter().enumerate() {
            assert!(roots[i].contains(r));
        }
        for w in roots.windows(2) {
            assert!(w[0].hi < w[1].lo || (w[0].hi == w[1].lo));
        }
    }

    #[test]
    fn multiplicities_erased() {
        let p = UPoly::from_i64(&[0, 0, 1]); // x^2
        let roots = real_root_isolation(&p);
        assert_eq!(roots.len(), 1);
        assert!(roots[0].contains(&rat_i(0)));
    }

    #[test]
    fn count_matches_isolation() {
        let p = UPoly::from_i64(&[2, -3, 0, 1]); // (x-1)^2 (x+2) before squarefree
        let chain = SturmChain::new(&p);
        assert_eq!(chain.count_real_roots(), chain.isolate_real_roots().len());
    }
}
