//! Monomials and monomial orders.

use std::cmp::Ordering;

use crate::error::PolyError;

/// Exponent vector aligned with a variable registry.
///
/// The derived `Ord` (plain lexicographic on the vector) is only used as a
/// storage key; ranking for algebra goes through [`MonomialOrder`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn unit(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn var(nvars: usize, idx: usize, exp: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[idx] = exp;
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, idx: usize) -> u32 {
        self.exps[idx]
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().fold(0u32, |acc, &e| {
            acc.checked_add(e).expect("monomial degree overflow")
        })
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial, PolyError> {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).ok_or(PolyError::ExponentOverflow))
            .collect::<Result<Vec<u32>, _>>()?;
        Ok(Monomial { exps })
    }

    /// Does `self` divide `other`?
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// `self / other`, defined when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for (&a, &b) in self.exps.iter().zip(&other.exps) {
            if b > a {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Monomial { exps }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.min(b))
            .collect();
        Monomial { exps }
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }
}

/// Inner order of a block order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockInner {
    Lex,
    Grevlex,
}

/// Total, multiplicative, well-founded monomial orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    Grevlex,
    /// Elimination order: monomials are compared grevlex on the `elim`
    /// variables first, so anything touching an elimination variable ranks
    /// above everything free of them; ties fall through to `inner` on the
    /// remaining variables.
    Block { elim: Vec<usize>, inner: BlockInner },
}

fn cmp_lex_on(a: &Monomial, b: &Monomial, idxs: impl Iterator<Item = usize>) -> Ordering {
    for i in idxs {
        match a.exp(i).cmp(&b.exp(i)) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn cmp_grevlex_on(a: &Monomial, b: &Monomial, idxs: &[usize]) -> Ordering {
    let da: u64 = idxs.iter().map(|&i| a.exp(i) as u64).sum();
    let db: u64 = idxs.iter().map(|&i| b.exp(i) as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // Equal degree: the last differing variable decides, smaller exponent wins.
    for &i in idxs.iter().rev() {
        match a.exp(i).cmp(&b.exp(i)) {
            Ordering::Equal => continue,
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    /// Block order eliminating the given indices; duplicates are merged.
    pub fn block(elim: impl IntoIterator<Item = usize>, inner: BlockInner) -> Self {
        let mut elim: Vec<usize> = elim.into_iter().collect();
        elim.sort_unstable();
        elim.dedup();
        MonomialOrder::Block { elim, inner }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::Lex => cmp_lex_on(a, b, 0..a.len()),
            MonomialOrder::Grevlex => {
                let all: Vec<usize> = (0..a.len()).collect();
                cmp_grevlex_on(a, b, &all)
            }
            MonomialOrder::Block { elim, inner } => {
                match cmp_grevlex_on(a, b, elim) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                let rest: Vec<usize> = (0..a.len()).filter(|i| !elim.contains(i)).collect();
                match inner {
                    BlockInner::Lex => cmp_lex_on(a, b, rest.into_iter()),
                    BlockInner::Grevlex => cmp_grevlex_on(a, b, &rest),
                }
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exps(exps.to_vec())
    }

    #[test]
    fn lex_order() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[1, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1]), &m(&[1, 2])), Ordering::Less);
    }

    #[test]
    fn grevlex_order() {
        let o = MonomialOrder::Grevlex;
        // x^2 > x*y > y^2 with x before y.
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1]), &m(&[0, 2])), Ordering::Greater);
        // Degree dominates.
        assert_eq!(o.cmp(&m(&[0, 3]), &m(&[2, 0])), Ordering::Greater);
        // Classic grevlex vs grlex separation in three variables:
        // x*z vs y^2: degree equal, last differing variable is z, x*z has the
        // larger z exponent, so x*z < y^2.
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn block_order_ranks_elim_vars_first() {
        // Variables (t, x); eliminate t.
        let o = MonomialOrder::block([0], BlockInner::Grevlex);
        // Any power of t beats any power of x alone.
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 9])), Ordering::Greater);
        // Free of t: falls through to the inner order.
        assert_eq!(o.cmp(&m(&[0, 2]), &m(&[0, 3])), Ordering::Less);
    }

    #[test]
    fn monomial_ops() {
        let a = m(&[2, 1]);
        let b = m(&[1, 3]);
        assert_eq!(a.lcm(&b), m(&[2, 3]));
        assert_eq!(a.gcd(&b), m(&[1, 1]));
        assert!(m(&[1, 1]).divides(&a));
        assert!(!b.divides(&a));
        assert_eq!(a.checked_div(&m(&[1, 0])), Some(m(&[1, 1])));
        assert_eq!(a.checked_div(&b), None);
        assert!(m(&[3, 0]).is_coprime_with(&m(&[0, 4])));
    }
}
