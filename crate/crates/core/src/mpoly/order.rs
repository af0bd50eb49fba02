use super::ring::Monomial;
use std::cmp::Ordering;

/// Total monomial order compatible with multiplication.
///
/// `Block` compares the front variable block first (by graded reverse
/// lexicographic order on those exponents), then the remaining variables;
/// a Gröbner basis under a block order eliminates the front block.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    Block { front: Vec<usize> },
}

impl MonomialOrder {
    pub fn block(front: impl IntoIterator<Item = usize>) -> Self {
        let mut front: Vec<usize> = front.into_iter().collect();
        front.sort_unstable();
        front.dedup();
        MonomialOrder::Block { front }
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => lex_cmp(&a.exponents, &b.exponents),
            MonomialOrder::GrevLex => grevlex_cmp(&a.exponents, &b.exponents),
            MonomialOrder::Block { front } => {
                let fa: Vec<u16> = front.iter().map(|&i| a.exponents[i]).collect();
                let fb: Vec<u16> = front.iter().map(|&i| b.exponents[i]).collect();
                match grevlex_cmp(&fa, &fb) {
                    Ordering::Equal => {
                        let ra: Vec<u16> = back_exponents(&a.exponents, front);
                        let rb: Vec<u16> = back_exponents(&b.exponents, front);
                        grevlex_cmp(&ra, &rb)
                    }
                    ord => ord,
                }
            }
        }
    }

    /// True when a basis under this order eliminates exactly the variables in
    /// `drop` before the rest.
    pub fn eliminates(&self, drop: &[usize]) -> bool {
        match self {
            MonomialOrder::Block { front } => {
                let mut d = drop.to_vec();
                d.sort_unstable();
                *front == d
            }
            _ => false,
        }
    }
}

fn back_exponents(exps: &[u16], front: &[usize]) -> Vec<u16> {
    exps.iter()
        .enumerate()
        .filter(|(i, _)| !front.contains(i))
        .map(|(_, &e)| e)
        .collect()
}

fn lex_cmp(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn grevlex_cmp(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {
            // same degree: the monomial with the smaller exponent on the
            // last differing variable is the larger one
            for (x, y) in a.iter().zip(b).rev() {
                match x.cmp(y) {
                    Ordering::Equal => continue,
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                }
            }
            Ordering::Equal
        }
        ord => ord,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u16]) -> Monomial {
        Monomial { exponents: exps.to_vec() }
    }

    #[test]
    fn grevlex_ordering() {
        let o = MonomialOrder::GrevLex;
        // x0 > x1 > x2 at degree one
        assert_eq!(o.cmp_monomials(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
        assert_eq!(o.cmp_monomials(&m(&[0, 1, 0]), &m(&[0, 0, 1])), Ordering::Greater);
        // x0*x2 vs x1^2: same degree, compare last exponents reversed
        assert_eq!(o.cmp_monomials(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        // degree dominates
        assert_eq!(o.cmp_monomials(&m(&[0, 0, 2]), &m(&[1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn lex_ordering() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp_monomials(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        assert_eq!(o.cmp_monomials(&m(&[1, 1]), &m(&[1, 0])), Ordering::Greater);
    }

    #[test]
    fn block_eliminates_front() {
        let o = MonomialOrder::block([1]);
        // any power of x1 beats anything without x1
        assert_eq!(o.cmp_monomials(&m(&[0, 1, 0]), &m(&[5, 0, 5])), Ordering::Greater);
        // without x1, fall back to grevlex on (x0, x2)
        assert_eq!(o.cmp_monomials(&m(&[1, 0, 0]), &m(&[0, 0, 1])), Ordering::Greater);
    }
}
