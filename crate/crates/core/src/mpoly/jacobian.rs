use super::poly::MPoly;
use std::collections::HashMap;

/// Truncated Jacobian of `polys` with respect to the variables `X_k, ..., X_n`
/// (`k` is 1-based, matching the usual notation; `k = 1` is the full
/// Jacobian). Row `r`, column `c` holds `d polys[r] / d X_{k+c-1}`.
pub fn truncated_jacobian(polys: &[MPoly], k: usize) -> Vec<Vec<MPoly>> {
    assert!(!polys.is_empty());
    let n = polys[0].ring().nvars();
    assert!(k >= 1 && k <= n, "truncation index out of range");
    polys
        .iter()
        .map(|p| (k - 1..n).map(|v| p.partial_derivative(v)).collect())
        .collect()
}

/// Full Jacobian matrix.
pub fn jacobian(polys: &[MPoly]) -> Vec<Vec<MPoly>> {
    truncated_jacobian(polys, 1)
}

/// All `r x r` minor determinants of the matrix, enumerated in lexicographic
/// order of (row subset, column subset). Determinants are expanded with
/// subdeterminant memoization shared across column subsets.
pub fn minors(matrix: &[Vec<MPoly>], r: usize) -> Vec<MPoly> {
    if r == 0 {
        // the empty minor is the constant 1; callers use it for the
        // degenerate unconstrained case
        let ring = matrix
            .first()
            .and_then(|row| row.first())
            .map(|p| p.ring().clone())
            .expect("minors of an empty matrix need an ambient ring");
        return vec![MPoly::one(&ring)];
    }
    let rows = matrix.len();
    let cols = if rows > 0 { matrix[0].len() } else { 0 };
    assert!(r <= rows && r <= cols, "minor size exceeds matrix dimensions");
    let row_sets = subsets(rows, r);
    let col_sets = subsets(cols, r);
    let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
    for rs in &row_sets {
        // memo over (depth, used-column bitmask) for this row selection
        let mut memo: HashMap<(usize, u64), MPoly> = HashMap::new();
        for cs in &col_sets {
            out.push(det_memo(matrix, rs, cs, 0, 0, &mut memo));
        }
    }
    out
}

/// Determinant of the submatrix rows `rs`, columns `cs`, by Laplace expansion
/// along successive rows; `mask` marks columns of `cs` already consumed.
fn det_memo(
    matrix: &[Vec<MPoly>],
    rs: &[usize],
    cs: &[usize],
    depth: usize,
    mask: u64,
    memo: &mut HashMap<(usize, u64), MPoly>,
) -> MPoly {
    let ring = matrix[0][0].ring().clone();
    if depth == rs.len() {
        return MPoly::one(&ring);
    }
    // key on the remaining absolute column indices: together with the depth
    // they determine the submatrix, so different column subsets share entries
    let abs_mask = cs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) == 0)
        .fold(0u64, |m, (_, &c)| m | (1 << c));
    if let Some(hit) = memo.get(&(depth, abs_mask)) {
        return hit.clone();
    }
    let mut acc = MPoly::zero(&ring);
    let mut sign_pos = true;
    for (i, &c) in cs.iter().enumerate() {
        if mask & (1 << i) != 0 {
            continue;
        }
        let entry = &matrix[rs[depth]][c];
        if !entry.is_zero() {
            let sub = det_memo(matrix, rs, cs, depth + 1, mask | (1 << i), memo);
            let term = entry.mul(&sub);
            acc = if sign_pos { acc.add(&term) } else { acc.sub(&term) };
        }
        sign_pos = !sign_pos;
    }
    memo.insert((depth, abs_mask), acc.clone());
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_i;
    use crate::mpoly::Ring;

    #[test]
    fn jacobian_examples() {
        let r = Ring::new(vec!["x", "y"]);
        let x = MPoly::var(&r, 0);
        let y = MPoly::var(&r, 1);
        // circle gradient
        let circle = x.pow(2).add(&y.pow(2)).sub(&MPoly::one(&r));
        let j = truncated_jacobian(&[circle], 1);
        assert_eq!(j[0][0], x.scale(&rat_i(2)));
        assert_eq!(j[0][1], y.scale(&rat_i(2)));
        // truncation drops the first column
        let j2 = truncated_jacobian(&[x.clone(), x.mul(&y)], 2);
        assert!(j2[0][0].is_zero());
        assert_eq!(j2[1][0], x);
    }

    #[test]
    fn minors_examples() {
        let r = Ring::new(vec!["x", "y"]);
        let x = MPoly::var(&r, 0);
        let y = MPoly::var(&r, 1);
        let m = vec![
            vec![MPoly::one(&r), MPoly::zero(&r)],
            vec![x.scale(&rat_i(2)), y.scale(&rat_i(2))],
        ];
        assert_eq!(minors(&m, 2), vec![y.scale(&rat_i(2))]);
        let ones = minors(&m, 1);
        assert_eq!(ones.len(), 4);
        assert_eq!(ones[3], y.scale(&rat_i(2)));
    }

    #[test]
    fn minors_match_cofactor_expansion_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let r = Ring::new(vec!["x"]);
        for _ in 0..20 {
            let m: Vec<Vec<MPoly>> = (0..3)
                .map(|_| {
                    (0..3)
                        .map(|_| MPoly::constant(&r, rat_i(rng.gen_range(-5..=5i64))))
                        .collect()
                })
                .collect();
            let det = minors(&m, 3).remove(0).constant_value().unwrap();
            // independent cofactor expansion along the first row
            let c = |i: usize, j: usize| m[i][j].constant_value().unwrap();
            let expect = c(0, 0) * (c(1, 1) * c(2, 2) - c(1, 2) * c(2, 1))
                - c(0, 1) * (c(1, 0) * c(2, 2) - c(1, 2) * c(2, 0))
                + c(0, 2) * (c(1, 0) * c(2, 1) - c(1, 1) * c(2, 0));
            assert_eq!(det, expect);
        }
    }
}
