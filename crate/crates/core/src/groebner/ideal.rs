use super::engine::Engine;
use super::fglm;
use crate::arith::Rational;
use crate::mpoly::{MPoly, Monomial, MonomialOrder, Ring};
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

/// Polynomial ideal with cached reduced Gröbner bases per monomial order.
///
/// Concurrent reads are safe; a basis for a given order is computed at most
/// once per value (readers block while it is being computed).
pub struct Ideal {
    ring: Ring,
    generators: Vec<MPoly>,
    cache: Mutex<HashMap<MonomialOrder, Arc<Vec<MPoly>>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g)?;
        }
        write!(f, ">")
    }
}

impl Ideal {
    pub fn new(ring: &Ring, generators: Vec<MPoly>) -> Self {
        let generators: Vec<MPoly> = generators
            .into_iter()
            .filter(|g| {
                assert!(g.is_zero() || g.ring() == ring, "generator from a different ring");
                !g.is_zero()
            })
            .collect();
        Ideal { ring: ring.clone(), generators, cache: Mutex::new(HashMap::new()) }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[MPoly] {
        &self.generators
    }

    /// Reduced Gröbner basis for the order, cached. Basis elements are stored
    /// primitive (integer content removed) with positive leading coefficient;
    /// the unit ideal yields the single element `1`.
    pub fn groebner_basis(&self, order: &MonomialOrder) -> Arc<Vec<MPoly>> {
        let mut cache = self.cache.lock().unwrap();
        if let Some(hit) = cache.get(order) {
            return hit.clone();
        }
        let basis = self.compute_basis(order, &cache);
        let basis = Arc::new(basis);
        cache.insert(order.clone(), basis.clone());
        basis
    }

    fn compute_basis(
        &self,
        order: &MonomialOrder,
        cache: &HashMap<MonomialOrder, Arc<Vec<MPoly>>>,
    ) -> Vec<MPoly> {
        // a zero-dimensional ideal with a known grevlex basis converts to any
        // other order by exact linear algebra over the quotient
        if *order != MonomialOrder::GrevLex {
            if let Some(grevlex) = cache.get(&MonomialOrder::GrevLex) {
                if basis_is_zero_dimensional(&self.ring, grevlex) {
                    return fglm::convert_zero_dim(&self.ring, grevlex, order);
                }
            }
        }
        let engine = Engine::new(order.clone());
        engine
            .buchberger(&self.generators)
            .into_iter()
            .map(|p| engine.to_mpoly(&p, &self.ring))
            .collect()
    }

    pub fn is_unit(&self) -> bool {
        let gb = self.groebner_basis(&MonomialOrder::GrevLex);
        gb.len() == 1 && gb[0].is_constant()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Ideal membership via normal form against the grevlex basis.
    pub fn contains(&self, p: &MPoly) -> bool {
        let gb = self.groebner_basis(&MonomialOrder::GrevLex);
        normal_form(p, &gb, &MonomialOrder::GrevLex).is_zero()
    }

    /// Krull dimension of the quotient, computed combinatorially from the
    /// leading-term staircase: the maximal size of a variable subset that
    /// supports no leading monomial entirely. Returns -1 for the unit ideal.
    pub fn dimension(&self) -> i64 {
        let gb = self.groebner_basis(&MonomialOrder::GrevLex);
        if gb.len() == 1 && gb[0].is_constant() {
            return -1;
        }
        let n = self.ring.nvars();
        let lms: Vec<Monomial> = gb
            .iter()
            .map(|g| g.leading_term(&MonomialOrder::GrevLex).unwrap().0.clone())
            .collect();
        if lms.is_empty() {
            return n as i64;
        }
        // search subsets by decreasing size
        for size in (0..=n).rev() {
            if subset_search(&lms, n, size, 0, &mut vec![false; n]) {
                return size as i64;
            }
        }
        0
    }

    pub fn is_zero_dimensional(&self) -> bool {
        self.dimension() <= 0
    }

    /// Number of standard monomials (the vector-space dimension of the
    /// quotient); only for zero-dimensional ideals.
    pub fn quotient_dimension(&self) -> usize {
        fglm::quotient_basis(&self.ring, &self.groebner_basis(&MonomialOrder::GrevLex)).len()
    }
}

/// True when every variable has a pure power among the basis leading
/// monomials (or the basis is the unit basis).
pub fn basis_is_zero_dimensional(ring: &Ring, basis: &[MPoly]) -> bool {
    if basis.len() == 1 && basis[0].is_constant() {
        return true;
    }
    if basis.is_empty() {
        return ring.nvars() == 0;
    }
    let order = MonomialOrder::GrevLex;
    (0..ring.nvars()).all(|v| {
        basis.iter().any(|g| {
            let lm = g.leading_term(&order).unwrap().0;
            lm.exponents[v] > 0 && lm.total_degree() == lm.exponents[v] as u32
        })
    })
}

/// Is there a subset of the given size on which no leading monomial is fully
/// supported? Recursive inclusion-exclusion search.
fn subset_search(lms: &[Monomial], n: usize, size: usize, start: usize, picked: &mut Vec<bool>) -> bool {
    let picked_count = picked.iter().filter(|&&b| b).count();
    if picked_count == size {
        return !lms.iter().any(|m| {
            m.exponents
                .iter()
                .enumerate()
                .all(|(v, &e)| e == 0 || picked[v])
        });
    }
    if start >= n || n - start < size - picked_count {
        return false;
    }
    picked[start] = true;
    if subset_search(lms, n, size, start + 1, picked) {
        picked[start] = false;
        return true;
    }
    picked[start] = false;
    subset_search(lms, n, size, start + 1, picked)
}

/// Multivariate division: the remainder of `p` modulo `basis` under `order`.
/// No monomial of the result is divisible by any basis leading monomial, and
/// `p - result` lies in the ideal generated by the basis. Exact rational
/// arithmetic; idempotent whenever `basis` is a Gröbner basis.
pub fn normal_form(p: &MPoly, basis: &[MPoly], order: &MonomialOrder) -> MPoly {
    let ring = p.ring().clone();
    let leads: Vec<(Monomial, Rational, &MPoly)> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let (m, c) = g.leading_term(order).unwrap();
            (m.clone(), c.clone(), g)
        })
        .collect();
    let mut rest = p.clone();
    let mut out = MPoly::zero(&ring);
    while !rest.is_zero() {
        let (m, c) = {
            let (m, c) = rest.leading_term(order).unwrap();
            (m.clone(), c.clone())
        };
        match leads.iter().find(|(lm, _, _)| lm.divides(&m)) {
            None => {
                let t = MPoly::from_terms(&ring, [(m.clone(), c.clone())]);
                out = out.add(&t);
                rest = rest.sub(&t);
            }
            Some((lm, lc, g)) => {
                let factor = &c / lc;
                let shift = lm.div_into(&m);
                rest = rest.sub(&g.mul_term(&shift, &factor));
            }
        }
    }
    out
}

/// Monic-normalized rational view of a stored (primitive integer) basis.
pub fn monic_basis(basis: &[MPoly], order: &MonomialOrder) -> Vec<MPoly> {
    basis
        .iter()
        .map(|g| {
            let lc = g.leading_term(order).unwrap().1.clone();
            g.scale(&(Rational::one() / lc))
        })
        .collect()
}
