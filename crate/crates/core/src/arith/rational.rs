use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

/// Exact rational scalar. `BigRational` keeps the canonical form we rely on:
/// numerator and denominator coprime, denominator positive.
pub type Rational = num_rational::BigRational;

/// Rational from an integer pair.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rat_i(num: i64) -> Rational {
    Rational::from(BigInt::from(num))
}

/// Parses "a", "-a" or "a/b" with optional sign.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let num: BigInt = num.trim().parse().ok()?;
        let den: BigInt = den.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        Some(Rational::new(num, den))
    } else {
        let num: BigInt = text.parse().ok()?;
        Some(Rational::from(num))
    }
}

/// A dyadic rational strictly inside the open interval `(lo, hi)`.
///
/// The denominator is a power of two. `jitter` perturbs which admissible
/// numerator is picked, so distinct seeds give distinct (but reproducible)
/// values.
pub fn dyadic_in_open_interval<R: Rng>(lo: &Rational, hi: &Rational, rng: &mut R) -> Rational {
    assert!(lo < hi, "empty open interval");
    let width = hi - lo;
    // 2^k * width > 2 guarantees at least one grid point strictly inside.
    let mut k: u32 = 0;
    let two = rat_i(2);
    let mut scale = Rational::one();
    while &scale * &width <= two {
        scale *= &two;
        k += 1;
    }
    let lo_scaled = lo * &scale;
    let hi_scaled = hi * &scale;
    let first = lo_scaled.floor().to_integer() + 1;
    let last = hi_scaled.ceil().to_integer() - 1;
    debug_assert!(first <= last);
    let span: BigInt = &last - &first + BigInt::one();
    let span = span.to_u64().unwrap_or(u64::MAX);
    let offset = rng.gen_range(0..span.max(1));
    let mut numer: BigInt = &first + BigInt::from(offset);
    // Guard against boundary hits when lo or hi is itself on the grid.
    let den = BigInt::from(2u8).pow(k);
    loop {
        let cand = Rational::new(numer.clone(), den.clone());
        if &cand > lo && &cand < hi {
            return cand;
        }
        numer += 1;
        if Rational::new(numer.clone(), den.clone()) >= *hi {
            // fall back to the exact midpoint
            return (lo + hi) / two;
        }
    }
}

/// Decimal rendering of an exact rational with `digits` digits after the
/// decimal point, truncated toward zero. Presentation only.
pub fn render_decimal(x: &Rational, digits: usize) -> String {
    let neg = x.is_negative();
    let abs = x.abs();
    let int = abs.trunc().to_integer();
    let mut frac = abs.fract();
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(&int.to_string());
    if digits > 0 && !frac.is_zero() {
        out.push('.');
        let ten = BigInt::from(10u8);
        for _ in 0..digits {
            frac *= Rational::from(ten.clone());
            let d = frac.trunc().to_integer();
            out.push_str(&d.to_string());
            frac = frac.fract();
            if frac.is_zero() {
                break;
            }
        }
        while out.ends_with('0') {
            out.pop();
        }
        if out.ends_with('.') {
            out.pop();
        }
    }
    if out == "-0" {
        out = "0".into();
    }
    out
}

/// The rational with the smallest denominator (then smallest numerator) in
/// the closed interval `[lo, hi]`, by Stern-Brocot descent.
pub fn simplest_rational_in(lo: &Rational, hi: &Rational) -> Rational {
    assert!(lo <= hi);
    if lo == hi {
        return lo.clone();
    }
    // reduce to the case 0 <= lo < hi
    if lo.is_negative() && !hi.is_negative() {
        return Rational::zero();
    }
    if lo.is_negative() {
        return -simplest_rational_in(&-hi.clone(), &-lo.clone());
    }
    // integer part: if an integer lies inside, take the smallest
    let ceil_lo = lo.ceil();
    if ceil_lo <= *hi {
        return ceil_lo;
    }
    let int = lo.floor();
    // recurse on the fractional parts via the mediant structure:
    // simplest in [a, b] = int + 1 / simplest in [1/(b-int), 1/(a-int)]
    let fl = lo - &int;
    let fh = hi - &int;
    let inner = simplest_rational_in(&fh.recip(), &fl.recip());
    int + inner.recip()
}

/// Formats a rational as the `a/b` string used by the JSON surface.
pub fn rational_string(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Sign of a big integer as -1, 0, +1.
pub fn bigint_sign(x: &BigInt) -> i32 {
    match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3").unwrap(), rat_i(3));
        assert_eq!(parse_rational("-7/2").unwrap(), rat(-7, 2));
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
        assert!(parse_rational("1/0").is_none());
    }

    #[test]
    fn dyadic_strictly_inside() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for (lo, hi) in [
            (rat_i(0), rat_i(1)),
            (rat(-1, 3), rat(1, 7)),
            (rat_i(41), rat_i(43)),
            (rat(1, 1024), rat(3, 2048)),
        ] {
            for _ in 0..20 {
                let m = dyadic_in_open_interval(&lo, &hi, &mut rng);
                assert!(m > lo && m < hi);
            }
        }
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(render_decimal(&rat(1, 4), 10), "0.25");
        assert_eq!(render_decimal(&rat(-1, 3), 5), "-0.33333");
        assert_eq!(render_decimal(&rat_i(42), 30), "42");
    }
}
