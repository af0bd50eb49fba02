use super::upoly::UPoly;

/// Polynomial in `u` whose coefficients are polynomials in `T`.
/// Coefficient of `u^i` at index `i`.
pub type BiPoly = Vec<UPoly>;

fn bi_trim(p: &mut BiPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn bi_degree(p: &BiPoly) -> usize {
    p.len().saturating_sub(1)
}

fn bi_is_zero(p: &BiPoly) -> bool {
    p.is_empty()
}

fn bi_scale(p: &BiPoly, c: &UPoly) -> BiPoly {
    let mut out: BiPoly = p.iter().map(|a| a.mul(c)).collect();
    bi_trim(&mut out);
    out
}

fn bi_sub(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let n = a.len().max(b.len());
    let mut out = vec![UPoly::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] = out[i].add(c);
    }
    for (i, c) in b.iter().enumerate() {
        out[i] = out[i].sub(c);
    }
    bi_trim(&mut out);
    out
}

fn bi_shift(p: &BiPoly, k: usize) -> BiPoly {
    if bi_is_zero(p) {
        return vec![];
    }
    let mut out = vec![UPoly::zero(); k];
    out.extend(p.iter().cloned());
    out
}

/// Exact division of every coefficient by `d` (must be exact in Q[T]).
fn bi_div_exact(p: &BiPoly, d: &UPoly) -> BiPoly {
    let mut out = Vec::with_capacity(p.len());
    for c in p {
        if c.is_zero() {
            out.push(UPoly::zero());
            continue;
        }
        let (q, r) = c.divrem(d);
        debug_assert!(r.is_zero(), "inexact division in subresultant sequence");
        out.push(q);
    }
    bi_trim(&mut out);
    out
}

/// Pseudo-remainder of `a` by `b` in u with the canonical multiplier
/// `lc(b)^(deg a - deg b + 1)`, as required by the subresultant divisions.
fn bi_prem(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let db = bi_degree(b);
    let da = bi_degree(a);
    let lb = b[db].clone();
    let mut r = a.clone();
    let mut mults = 0usize;
    while !bi_is_zero(&r) && bi_degree(&r) >= db {
        let dr = bi_degree(&r);
        let lr = r[dr].clone();
        // r <- lc(b) * r - lc(r) * u^(dr-db) * b
        r = bi_sub(&bi_scale(&r, &lb), &bi_shift(&bi_scale(b, &lr), dr - db));
        mults += 1;
    }
    // pad skipped steps so the total multiplier is lc(b)^(da-db+1)
    for _ in mults..(da - db + 1) {
        r = bi_scale(&r, &lb);
    }
    r
}

/// Resultant with respect to `u` of two polynomials in `Q[T][u]`, by the
/// subresultant polynomial remainder sequence. Exact (no spurious factors
/// beyond the resultant itself).
pub fn bivariate_resultant(p: &BiPoly, q: &BiPoly) -> UPoly {
    let mut a = p.clone();
    let mut b = q.clone();
    bi_trim(&mut a);
    bi_trim(&mut b);
    assert!(!bi_is_zero(&a) && !bi_is_zero(&b), "resultant of zero polynomial");
    if bi_degree(&a) < bi_degree(&b) {
        let s = (bi_degree(&a) * bi_degree(&b)) % 2 == 1;
        let r = bivariate_resultant(q, p);
        return if s { r.neg() } else { r };
    }
    if bi_degree(&b) == 0 {
        // res(a, c) = c^(deg a)
        return b[0].pow(bi_degree(&a));
    }
    // subresultant PRS (Brown); g, h are the running normalization factors
    let mut g = UPoly::one();
    let mut h = UPoly::one();
    let mut sign_flips = 0usize;
    loop {
        let da = bi_degree(&a);
        let db = bi_degree(&b);
        let delta = da - db;
        if (da * db) % 2 == 1 {
            sign_flips += 1;
        }
        let rem = bi_prem(&a, &b);
        if bi_is_zero(&rem) {
            // common factor of positive degree: resultant is zero
            return UPoly::zero();
        }
        // divide by g * h^delta
        let mut divisor = g.clone();
        for _ in 0..delta {
            divisor = divisor.mul(&h);
        }
        let rem = bi_div_exact(&rem, &divisor);
        g = b[db].clone();
        // h <- h^(1-delta) * g^delta, kept as exact division
        h = if delta == 0 {
            h
        } else {
            let mut num = g.pow(delta);
            for _ in 1..delta {
                let (quo, r) = num.divrem(&h);
                debug_assert!(r.is_zero());
                num = quo;
            }
            num
        };
        a = b;
        b = rem;
        if bi_degree(&b) == 0 {
            let da = bi_degree(&a);
            // final step: the resultant is h^(1-da) * lc(b)^da, with the
            // accumulated sign
            let lb = b[0].clone();
            let mut num = lb.pow(da);
            for _ in 1..da {
                let (quo, r) = num.divrem(&h);
                debug_assert!(r.is_zero());
                num = quo;
            }
            return if sign_flips % 2 == 1 { num.neg() } else { num };
        }
    }
}

/// Resultant via the Sylvester matrix, fraction-free Bareiss elimination over
/// Q[T]. Used as an independent cross-check in tests.
pub fn sylvester_resultant(p: &BiPoly, q: &BiPoly) -> UPoly {
    let mut a = p.clone();
    let mut b = q.clone();
    bi_trim(&mut a);
    bi_trim(&mut b);
    let m = bi_degree(&a);
    let n = bi_degree(&b);
    if m == 0 {
        return a[0].pow(n);
    }
    if n == 0 {
        return b[0].pow(m);
    }
    let size = m + n;
    let mut mat = vec![vec![UPoly::zero(); size]; size];
    for i in 0..n {
        for (j, c) in a.iter().rev().enumerate() {
            mat[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in b.iter().rev().enumerate() {
            mat[n + i][i + j] = c.clone();
        }
    }
    // Bareiss: det in the bottom-right corner, divisions exact
    let mut sign = false;
    let mut prev = UPoly::one();
    for k in 0..size - 1 {
        if mat[k][k].is_zero() {
            let swap = (k + 1..size).find(|&r| !mat[r][k].is_zero());
            match swap {
                Some(r) => {
                    mat.swap(k, r);
                    sign = !sign;
                }
                None => return UPoly::zero(),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let t = mat[k][k].mul(&mat[i][j]).sub(&mat[i][k].mul(&mat[k][j]));
                let (quo, r) = t.divrem(&prev);
                debug_assert!(r.is_zero());
                mat[i][j] = quo;
            }
            mat[i][k] = UPoly::zero();
        }
        prev = mat[k][k].clone();
    }
    let det = mat[size - 1][size - 1].clone();
    if sign {
        det.neg()
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat_i;
    use rand::{Rng, SeedableRng};

    fn upoly(coeffs: &[i64]) -> UPoly {
        UPoly::from_i64(coeffs)
    }

    #[test]
    fn substitution_examples() {
        // Res_u(u^2 - 2, T - u) = T^2 - 2
        let p = vec![upoly(&[-2]), UPoly::zero(), UPoly::one()];
        let q = vec![upoly(&[0, 1]), upoly(&[-1])];
        let r = bivariate_resultant(&p, &q);
        assert_eq!(r.monic(), upoly(&[-2, 0, 1]));
        // Res_u(u - 1, T - u^2) = T - 1
        let p = vec![upoly(&[-1]), UPoly::one()];
        let q = vec![upoly(&[0, 1]), UPoly::zero(), upoly(&[-1])];
        let r = bivariate_resultant(&p, &q);
        assert_eq!(r.monic(), upoly(&[-1, 1]));
        // Res_u(u^2 + 1, T - u) = T^2 + 1
        let p = vec![upoly(&[1]), UPoly::zero(), UPoly::one()];
        let q = vec![upoly(&[0, 1]), upoly(&[-1])];
        let r = bivariate_resultant(&p, &q);
        assert_eq!(r.monic(), upoly(&[1, 0, 1]));
    }

    #[test]
    fn matches_sylvester_on_random_inputs() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let dp = rng.gen_range(1..=4usize);
            let dq = rng.gen_range(1..=4usize);
            let randpoly = |rng: &mut rand_chacha::ChaCha8Rng, d: usize| -> BiPoly {
                let mut out: BiPoly = (0..=d)
                    .map(|_| {
                        let tdeg = rng.gen_range(0..=2usize);
                        UPoly::new(
                            (0..=tdeg).map(|_| rat_i(rng.gen_range(-4..=4i64))).collect(),
                        )
                    })
                    .collect();
                if out.last().unwrap().is_zero() {
                    let d = out.len();
                    out[d - 1] = UPoly::one();
                }
                out
            };
            let p = randpoly(&mut rng, dp);
            let q = randpoly(&mut rng, dq);
            let fast = bivariate_resultant(&p, &q);
            let slow = sylvester_resultant(&p, &q);
            assert_eq!(fast, slow, "p={:?} q={:?}", p, q);
        }
    }
}
