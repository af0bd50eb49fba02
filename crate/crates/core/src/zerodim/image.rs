use super::rur::RationalParametrization;
use crate::arith::{bivariate_resultant, BiPoly, Rational, UPoly};
use crate::mpoly::MPoly;
use num_traits::{One, Zero};

/// Squarefree annihilator of the values a polynomial takes on a finite
/// parametrized set: its roots are exactly `{ f(x) : x in V(P) }`.
///
/// For the shape-position case (`q0 = 1`) the characteristic polynomial of
/// the image residue is computed through Newton power sums, which avoids the
/// resultant entirely; the general case falls back to the subresultant
/// `Res_u(q, q0^deg f * T - N)`.
pub fn image_annihilator(f: &MPoly, param: &RationalParametrization) -> UPoly {
    if param.is_empty() {
        return UPoly::one();
    }
    let n_mod_q = param.pullback_mod_q(f);
    if n_mod_q.is_zero() {
        // f vanishes identically on the set: the single value 0
        return UPoly::from_i64(&[0, 1]);
    }
    if param.q0.is_constant() && param.q0.leading_coeff().is_one() {
        return char_poly_of_residue(&param.q, &n_mod_q).squarefree_part();
    }
    let deg = f.total_degree() as usize;
    let denom_power = param.q0.pow(deg);
    // Res_u(q(u), q0(u)^deg * T - N(u))
    let q_bi: BiPoly = param.q.coeffs.iter().map(|c| UPoly::constant(c.clone())).collect();
    let width = denom_power.coeffs.len().max(n_mod_q.coeffs.len());
    let mut lin: BiPoly = Vec::with_capacity(width);
    for i in 0..width {
        let d = denom_power.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
        let c = n_mod_q.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
        // coefficient of u^i is  d*T - c
        lin.push(UPoly::new(vec![-c, d]));
    }
    bivariate_resultant(&q_bi, &lin).squarefree_part()
}

/// Characteristic polynomial of multiplication by `h` on `Q[u]/(q)` for
/// squarefree `q`: the product of `T - h(root)` over the roots of `q`.
/// Computed by Newton power sums: the trace of `h^k` is read off against the
/// power sums of `q`'s roots.
fn char_poly_of_residue(q: &UPoly, h: &UPoly) -> UPoly {
    let d = q.degree();
    if d == 0 {
        return UPoly::one();
    }
    let qm = q.monic();
    // power sums s_0..s_{d-1} of the roots of q via Newton's identities
    let mut s = vec![Rational::from_integer((d as i64).into())];
    for k in 1..d {
        // s_k + c_{d-1} s_{k-1} + ... + c_{d-k+1} s_1 + k c_{d-k} = 0
        let mut acc = &qm.coeffs[d - k] * Rational::from_integer((k as i64).into());
        for i in 1..k {
            acc += &qm.coeffs[d - i] * &s[k - i];
        }
        s.push(-acc);
    }
    // traces of h^k mod q for k = 1..d
    let mut hk = UPoly::one();
    let mut traces = Vec::with_capacity(d);
    for _ in 0..d {
        hk = hk.mul(h).rem(&qm);
        let mut tr = Rational::zero();
        for (i, c) in hk.coeffs.iter().enumerate() {
            tr += c * &s[i];
        }
        traces.push(tr);
    }
    // Newton inversion to elementary symmetric functions of the images
    let mut e = vec![Rational::from_integer(1.into())];
    for k in 1..=d {
        let mut acc = Rational::zero();
        let mut sign = Rational::from_integer(1.into());
        for i in 1..=k {
            acc += &sign * &e[k - i] * &traces[i - 1];
            sign = -sign;
        }
        e.push(acc / Rational::from_integer((k as i64).into()));
    }
    // char poly = sum (-1)^k e_k T^(d-k)
    let mut coeffs = vec![Rational::zero(); d + 1];
    let mut sign = Rational::from_integer(1.into());
    for (k, ek) in e.iter().enumerate() {
        coeffs[d - k] = &sign * ek;
        sign = -sign;
    }
    UPoly::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_i;
    use crate::groebner::Ideal;
    use crate::mpoly::Ring;
    use crate::zerodim::rur;

    fn sqrt2_param() -> (Ring, RationalParametrization) {
        let r = Ring::new(vec!["x"]);
        let x = MPoly::var(&r, 0);
        let i = Ideal::new(&r, vec![x.pow(2).sub(&MPoly::constant(&r, rat_i(2)))]);
        let p = rur(&i, 1).unwrap();
        (r, p)
    }

    #[test]
    fn image_examples() {
        let (r, p) = sqrt2_param();
        let x = MPoly::var(&r, 0);
        // f = x on V(x^2-2): annihilator T^2 - 2
        let a = image_annihilator(&x, &p);
        assert_eq!(a.primitive_part(), UPoly::from_i64(&[-2, 0, 1]));
        // f = x^2: single value 2, annihilator T - 2
        let a = image_annihilator(&x.pow(2), &p);
        assert_eq!(a.primitive_part(), UPoly::from_i64(&[-2, 1]));
    }

    #[test]
    fn image_sum_on_diagonal() {
        let r = Ring::new(vec!["x", "y"]);
        let x = MPoly::var(&r, 0);
        let y = MPoly::var(&r, 1);
        let i = Ideal::new(&r, vec![x.pow(2).sub(&MPoly::constant(&r, rat_i(2))), y.sub(&x)]);
        let p = rur(&i, 1).unwrap();
        // f = x + y takes values ±2*sqrt2: annihilator T^2 - 8
        let a = image_annihilator(&x.add(&y), &p);
        assert_eq!(a.primitive_part(), UPoly::from_i64(&[-8, 0, 1]));
    }

    #[test]
    fn empty_gives_one() {
        let r = Ring::new(vec!["x"]);
        let p = RationalParametrization::empty(&r);
        assert_eq!(image_annihilator(&MPoly::var(&r, 0), &p), UPoly::one());
    }

    #[test]
    fn char_poly_matches_resultant() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..25 {
            let dq = rng.gen_range(1..=5usize);
            let q = loop {
                let cand = UPoly::new(
                    (0..=dq)
                        .map(|i| rat_i(if i == dq { 1 } else { rng.gen_range(-5..=5) }))
                        .collect(),
                );
                let sf = cand.squarefree_part();
                if sf.degree() == dq {
                    break sf;
                }
            };
            let h = UPoly::new((0..dq).map(|_| rat_i(rng.gen_range(-4..=4))).collect());
            if h.is_zero() {
                continue;
            }
            let via_newton = char_poly_of_residue(&q, &h);
            // independent route: Res_u(q, T - h)
            let q_bi: BiPoly = q.coeffs.iter().map(|c| UPoly::constant(c.clone())).collect();
            let lin: BiPoly = (0..h.coeffs.len())
                .map(|i| {
                    let c = h.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
                    UPoly::new(vec![-c, if i == 0 { rat_i(1) } else { rat_i(0) }])
                })
                .collect();
            let via_res = bivariate_resultant(&q_bi, &lin);
            assert_eq!(
                via_newton.primitive_part(),
                via_res.primitive_part(),
                "q={q} h={h}"
            );
        }
    }
}
