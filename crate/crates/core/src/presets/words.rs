//! Formal linear combinations of words in the generators `e1`, `e2`.

use std::collections::BTreeMap;

use crate::coeffs::RationalFunction;

/// An element of the free algebra on `e1, e2`; words are sequences of node
/// labels, read left to right.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct WordExpr {
    terms: BTreeMap<Vec<u8>, RationalFunction>,
}

impl WordExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn letter(node: u8) -> Self {
        Self::word(vec![node], RationalFunction::one())
    }

    pub fn word(w: Vec<u8>, c: RationalFunction) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u8], &RationalFunction)> {
        self.terms.iter().map(|(w, c)| (w.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Vec<u8>, c: RationalFunction) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w).or_default();
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        let mut out = Self::zero();
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, c1 * c2);
            }
        }
        out
    }

    /// `x y - c y x`, the q-commutator used to build root vectors.
    pub fn q_commutator(x: &Self, y: &Self, c: &RationalFunction) -> Self {
        x.mul(y).add(&y.mul(x).scale(&-c))
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::word(vec![], RationalFunction::one()), |acc, _| acc.mul(self))
    }

    /// The anti-involution fixing each generator: every word is reversed.
    pub fn chi(&self) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.iter().rev().copied().collect(), c.clone());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutator_and_chi() {
        let e1 = WordExpr::letter(1);
        let e2 = WordExpr::letter(2);
        let q = RationalFunction::q_pow(1);
        let b2 = WordExpr::q_commutator(&e1, &e2, &q);
        assert_eq!(b2.len(), 2);
        let chi = b2.chi();
        let expected = WordExpr::q_commutator(&e2, &e1, &q);
        assert_eq!(chi, expected);
        assert_eq!(chi.chi(), b2);
        assert!(b2.add(&b2.scale(&RationalFunction::from_int(-1))).is_zero());
    }
}
