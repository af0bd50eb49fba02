use crate::arith::Rational;
use crate::mpoly::{MPoly, Monomial, MonomialOrder, Ring};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashSet};

/// Integer-coefficient polynomial with terms sorted descending under the
/// active order. Internal representation of the Buchberger loop: content is
/// stripped and the leading coefficient kept positive, which keeps the
/// coefficient growth of cross-multiplication reductions in check.
#[derive(Clone, Debug)]
pub struct IPoly {
    pub terms: Vec<(Monomial, BigInt)>,
}

impl IPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }
}

pub struct Engine {
    pub order: MonomialOrder,
}

impl Engine {
    pub fn new(order: MonomialOrder) -> Self {
        Engine { order }
    }

    fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp_monomials(a, b)
    }

    pub fn from_mpoly(&self, p: &MPoly) -> IPoly {
        let mut den = BigInt::one();
        for (_, c) in p.terms() {
            den = den.lcm(c.denom());
        }
        let mut terms: Vec<(Monomial, BigInt)> = p
            .terms()
            .map(|(m, c)| (m.clone(), (c * Rational::from(den.clone())).to_integer()))
            .collect();
        terms.sort_by(|(a, _), (b, _)| self.cmp(b, a));
        let mut out = IPoly { terms };
        self.normalize(&mut out);
        out
    }

    pub fn to_mpoly(&self, p: &IPoly, ring: &Ring) -> MPoly {
        MPoly::from_terms(ring, p.terms.iter().map(|(m, c)| (m.clone(), Rational::from(c.clone()))))
    }

    /// Strips integer content and makes the leading coefficient positive.
    fn normalize(&self, p: &mut IPoly) {
        if p.is_zero() {
            return;
        }
        let mut g = BigInt::zero();
        for (_, c) in &p.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if p.terms[0].1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in &mut p.terms {
                *c /= &g;
            }
        }
    }

    /// `a * p - b * (m * q)`, merging the sorted term lists.
    fn combine(
        &self,
        p: &[(Monomial, BigInt)],
        a: &BigInt,
        q: &[(Monomial, BigInt)],
        b: &BigInt,
        m: &Monomial,
    ) -> Vec<(Monomial, BigInt)> {
        let mut out = Vec::with_capacity(p.len() + q.len());
        let mut i = 0;
        let mut j = 0;
        while i < p.len() && j < q.len() {
            let qm = q[j].0.mul(m);
            match self.cmp(&p[i].0, &qm) {
                Ordering::Greater => {
                    out.push((p[i].0.clone(), &p[i].1 * a));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((qm, -(&q[j].1 * b)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &p[i].1 * a - &q[j].1 * b;
                    if !c.is_zero() {
                        out.push((qm, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        for t in &p[i..] {
            out.push((t.0.clone(), &t.1 * a));
        }
        for t in &q[j..] {
            out.push((t.0.mul(m), -(&t.1 * b)));
        }
        out
    }

    /// Full normal form of `p` modulo `basis`: no remaining monomial is
    /// divisible by any basis leading monomial.
    pub fn reduce(&self, p: &IPoly, basis: &[IPoly]) -> IPoly {
        let mut done: Vec<(Monomial, BigInt)> = Vec::new();
        let mut rest = p.terms.clone();
        let mut steps = 0usize;
        while let Some((m, c)) = rest.first().cloned() {
            let reducer = basis
                .iter()
                .find(|g| !g.is_zero() && g.lm().divides(&m));
            match reducer {
                None => {
                    done.push((m, c));
                    rest.remove(0);
                }
                Some(g) => {
                    let gamma = c.gcd(g.lc());
                    let a = g.lc() / &gamma;
                    let b = &c / &gamma;
                    let shift = g.lm().div_into(&m);
                    rest = self.combine(&rest, &a, &g.terms, &b, &shift);
                    if !a.is_one() {
                        for (_, cc) in &mut done {
                            *cc *= &a;
                        }
                    }
                    steps += 1;
                    if steps % 16 == 0 {
                        // periodic content strip keeps the integers small
                        let mut whole = IPoly { terms: done.clone() };
                        whole.terms.extend(rest.iter().cloned());
                        self.normalize(&mut whole);
                        done = whole.terms[..done.len()].to_vec();
                        rest = whole.terms[done.len()..].to_vec();
                    }
                }
            }
        }
        let mut out = IPoly { terms: done };
        self.normalize(&mut out);
        out
    }

    fn spoly(&self, f: &IPoly, g: &IPoly) -> IPoly {
        let l = f.lm().lcm(g.lm());
        let gamma = f.lc().gcd(g.lc());
        let a = g.lc() / &gamma;
        let b = f.lc() / &gamma;
        let mf = f.lm().div_into(&l);
        let mg = g.lm().div_into(&l);
        // a * mf * f - b * mg * g; reuse combine with p = mf * f
        let shifted: Vec<(Monomial, BigInt)> =
            f.terms.iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect();
        let terms = self.combine(&shifted, &a, &g.terms, &b, &mg);
        let mut out = IPoly { terms };
        self.normalize(&mut out);
        out
    }

    /// Buchberger's algorithm with the coprimality and chain criteria and
    /// normal (minimal lcm degree) pair selection. Returns the reduced basis,
    /// each element primitive with positive leading coefficient, sorted by
    /// ascending leading monomial.
    pub fn buchberger(&self, generators: &[MPoly]) -> Vec<IPoly> {
        let mut basis: Vec<IPoly> = Vec::new();
        for g in generators {
            if g.is_zero() {
                continue;
            }
            let ip = self.from_mpoly(g);
            if ip.is_constant() {
                return vec![constant_one(ip.lm().exponents.len())];
            }
            basis.push(ip);
        }
        if basis.is_empty() {
            return vec![];
        }

        #[derive(PartialEq, Eq)]
        struct Pair {
            deg: u32,
            i: usize,
            j: usize,
        }
        impl Ord for Pair {
            fn cmp(&self, other: &Self) -> Ordering {
                // BinaryHeap is a max-heap; invert for minimal degree first
                other.deg.cmp(&self.deg).then(other.i.cmp(&self.i)).then(other.j.cmp(&self.j))
            }
        }
        impl PartialOrd for Pair {
            fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
                Some(self.cmp(other))
            }
        }

        let mut queue: BinaryHeap<Pair> = BinaryHeap::new();
        let mut handled: HashSet<(usize, usize)> = HashSet::new();
        let push_pairs =
            |queue: &mut BinaryHeap<Pair>, basis: &[IPoly], upto: usize, j: usize| {
                for i in 0..upto {
                    let deg = basis[i].lm().lcm(basis[j].lm()).total_degree();
                    queue.push(Pair { deg, i, j });
                }
            };
        for j in 1..basis.len() {
            push_pairs(&mut queue, &basis, j, j);
        }

        while let Some(Pair { i, j, .. }) = queue.pop() {
            if handled.contains(&(i, j)) {
                continue;
            }
            handled.insert((i, j));
            let (f, g) = (&basis[i], &basis[j]);
            // first criterion: coprime leading monomials reduce to zero
            if f.lm().coprime(g.lm()) {
                continue;
            }
            // chain criterion: some k with lm_k | lcm(i, j) and both
            // (i, k), (j, k) already handled
            let l = f.lm().lcm(g.lm());
            let chain = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && basis[k].lm().divides(&l)
                    && handled.contains(&key(i, k))
                    && handled.contains(&key(j, k))
            });
            if chain {
                continue;
            }
            let s = self.spoly(f, g);
            let nf = self.reduce(&s, &basis);
            if nf.is_zero() {
                continue;
            }
            if nf.is_constant() {
                return vec![constant_one(nf.lm().exponents.len())];
            }
            basis.push(nf);
            let j = basis.len() - 1;
            push_pairs(&mut queue, &basis, j, j);
        }

        self.interreduce(basis)
    }

    /// Minimizes and tail-reduces a basis into the canonical reduced form.
    pub fn interreduce(&self, mut basis: Vec<IPoly>) -> Vec<IPoly> {
        // minimize: drop elements whose leading monomial is divisible by
        // another's
        let mut keep: Vec<bool> = vec![true; basis.len()];
        for i in 0..basis.len() {
            if !keep[i] {
                continue;
            }
            for j in 0..basis.len() {
                if i != j
                    && keep[j]
                    && basis[j].lm().divides(basis[i].lm())
                    && !(basis[j].lm() == basis[i].lm() && j > i)
                {
                    keep[i] = false;
                    break;
                }
            }
        }
        let mut minimal: Vec<IPoly> =
            basis.drain(..).zip(keep).filter(|(_, k)| *k).map(|(p, _)| p).collect();
        // tail-reduce until stable
        loop {
            let mut changed = false;
            for i in 0..minimal.len() {
                let others: Vec<IPoly> = minimal
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .map(|(_, p)| p.clone())
                    .collect();
                let red = self.reduce(&minimal[i], &others);
                if red.terms != minimal[i].terms {
                    changed = true;
                    minimal[i] = red;
                }
            }
            minimal.retain(|p| !p.is_zero());
            if !changed {
                break;
            }
        }
        minimal.sort_by(|a, b| self.cmp(a.lm(), b.lm()));
        minimal
    }
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn constant_one(nvars: usize) -> IPoly {
    IPoly { terms: vec![(Monomial::one(nvars), BigInt::one())] }
}
