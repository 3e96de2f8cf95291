//! Operators on tensor products of q-oscillator Fock spaces.
//!
//! Every operator is kept in the normal form `sum c * S^s x^e`, where on a
//! single slot of base `q^d` the shift `S` sends `|m>` to `|m+1>` and `x`
//! multiplies `|m>` by `q^{d m}`, with `x` applied before `S`. Then
//! `a+ = S`, `a- = S^{-1} (1 - x^2)` and `k = x`, and
//! `(S^s x^e)(S^t x^f) = q^{d e t} S^{s+t} x^{e+f}`.

use std::collections::BTreeMap;

use smallvec::SmallVec;

use super::FockVector;
use crate::coeffs::{qnum, LaurentPoly, RationalFunction};
use crate::presets::{Osc, OscWord, PiEntry};
use crate::tuple::Tuple;

pub type Modes = SmallVec<[i32; 6]>;

#[derive(Clone, PartialEq, Eq)]
pub struct FockOp {
    bases: Vec<u32>,
    /// `(shift, exponents) -> coefficient`.
    terms: BTreeMap<(Modes, Modes), LaurentPoly>,
}

impl FockOp {
    pub fn zero(bases: &[u32]) -> Self {
        Self { bases: bases.to_vec(), terms: BTreeMap::new() }
    }

    pub fn scalar(bases: &[u32], c: LaurentPoly) -> Self {
        let mut op = Self::zero(bases);
        let z: Modes = SmallVec::from_elem(0, bases.len());
        op.add_term(z.clone(), z, c);
        op
    }

    pub fn identity(bases: &[u32]) -> Self {
        Self::scalar(bases, LaurentPoly::one())
    }

    /// A single oscillator letter acting on one slot.
    pub fn letter(bases: &[u32], slot: usize, letter: Osc) -> Self {
        let mut op = Self::zero(bases);
        let unit = |v: i32| {
            let mut m: Modes = SmallVec::from_elem(0, bases.len());
            m[slot] = v;
            m
        };
        match letter {
            Osc::Raise => op.add_term(unit(1), unit(0), LaurentPoly::one()),
            Osc::K => op.add_term(unit(0), unit(1), LaurentPoly::one()),
            Osc::Lower => {
                op.add_term(unit(-1), unit(0), LaurentPoly::one());
                op.add_term(unit(-1), unit(2), -LaurentPoly::one());
            }
        }
        op
    }

    pub fn word(bases: &[u32], slot: usize, w: &OscWord) -> Self {
        w.letters
            .iter()
            .fold(Self::scalar(bases, w.coeff.clone()), |acc, &l| acc.compose(&Self::letter(bases, slot, l)))
    }

    pub fn entry(bases: &[u32], slot: usize, e: &PiEntry) -> Self {
        let mut op = Self::zero(bases);
        for w in e {
            op.add_assign(&Self::word(bases, slot, w));
        }
        op
    }

    pub fn bases(&self) -> &[u32] {
        &self.bases
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Modes, &Modes, &LaurentPoly)> {
        self.terms.iter().map(|((s, e), c)| (s, e, c))
    }

    fn add_term(&mut self, s: Modes, e: Modes, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((s, e)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let v = o.get() + &c;
                if v.is_zero() {
                    o.remove();
                } else {
                    o.insert(v);
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &FockOp) {
        for ((s, e), c) in &other.terms {
            self.add_term(s.clone(), e.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> FockOp {
        let mut op = Self::zero(&self.bases);
        for ((s, e), x) in &self.terms {
            op.add_term(s.clone(), e.clone(), x * c);
        }
        op
    }

    /// `self * rhs`: `rhs` acts first.
    pub fn compose(&self, rhs: &FockOp) -> FockOp {
        let mut op = Self::zero(&self.bases);
        for ((s1, e1), c1) in &self.terms {
            for ((s2, e2), c2) in &rhs.terms {
                let mut k = 0i64;
                let mut s: Modes = SmallVec::with_capacity(s1.len());
                let mut e: Modes = SmallVec::with_capacity(s1.len());
                for j in 0..s1.len() {
                    k += self.bases[j] as i64 * e1[j] as i64 * s2[j] as i64;
                    s.push(s1[j] + s2[j]);
                    e.push(e1[j] + e2[j]);
                }
                op.add_term(s, e, (c1 * c2).shifted(k));
            }
        }
        op
    }

    /// `Some((c, e))` when the operator is `c x^e` with `c = +-q^n`.
    pub fn as_diagonal_monomial(&self) -> Option<(LaurentPoly, Modes)> {
        if self.terms.len() != 1 {
            return None;
        }
        let ((s, e), c) = self.terms.iter().next().unwrap();
        if s.iter().any(|&v| v != 0) || !c.is_monomial() {
            return None;
        }
        let lc = c.low_coeff().unwrap();
        if lc.magnitude() != &num_bigint::BigUint::from(1u32) {
            return None;
        }
        Some((c.clone(), e.clone()))
    }

    /// Inverse of a diagonal monomial operator.
    pub fn inverse_diagonal(&self) -> Option<FockOp> {
        let (c, e) = self.as_diagonal_monomial()?;
        let mut op = Self::zero(&self.bases);
        let z: Modes = SmallVec::from_elem(0, self.bases.len());
        let inv = LaurentPoly::monomial(c.low_coeff().unwrap().clone(), -c.val());
        op.add_term(z, e.iter().map(|v| -v).collect(), inv);
        Some(op)
    }

    /// Action on a plain basis ket `|m>`.
    pub fn apply_ket(&self, m: &[i32]) -> Vec<(Tuple, LaurentPoly)> {
        let mut out: BTreeMap<Tuple, LaurentPoly> = BTreeMap::new();
        for ((s, e), c) in &self.terms {
            let Some(t) = shifted(m, s) else { continue };
            let k: i64 = (0..m.len()).map(|j| self.bases[j] as i64 * e[j] as i64 * m[j] as i64).sum();
            let v = out.remove(&t).unwrap_or_default() + c.shift(k);
            if !v.is_zero() {
                out.insert(t, v);
            }
        }
        out.into_iter().collect()
    }

    /// Action on a rescaled ket `|m>> = prod_k d_{a_k} |m>`.
    pub fn apply_tilde(&self, m: &[i32]) -> Vec<(Tuple, RationalFunction)> {
        let mut out: BTreeMap<Tuple, RationalFunction> = BTreeMap::new();
        for ((s, e), c) in &self.terms {
            let Some(t) = shifted(m, s) else { continue };
            let k: i64 = (0..m.len()).map(|j| self.bases[j] as i64 * e[j] as i64 * m[j] as i64).sum();
            let mut x = RationalFunction::from_poly(c.shift(k));
            for j in 0..m.len() {
                if s[j] != 0 {
                    x = &x * &qnum::d_ratio(m[j] as i64, s[j] as i64, self.bases[j]);
                }
            }
            let v = &out.remove(&t).unwrap_or_default() + &x;
            if !v.is_zero() {
                out.insert(t, v);
            }
        }
        out.into_iter().collect()
    }

    pub fn apply(&self, v: &FockVector) -> FockVector {
        let mut out = FockVector::zero(v.bases());
        for (m, c) in v.iter() {
            for (t, x) in self.apply_ket(m) {
                out.add_term(t, c.mul_poly(&x));
            }
        }
        out
    }
}

/// `m + s`, or `None` if an occupation would become negative. Such terms
/// always cancel in operators built from `a+`, `a-`, `k`, since `a-`
/// annihilates the vacuum of each slot.
fn shifted(m: &[i32], s: &[i32]) -> Option<Tuple> {
    let mut t = Tuple::with_capacity(m.len());
    for (a, b) in m.iter().zip(s) {
        if a + b < 0 {
            return None;
        }
        t.push(a + b);
    }
    Some(t)
}

impl std::fmt::Debug for FockOp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut l = f.debug_list();
        for ((s, e), c) in &self.terms {
            l.entry(&format_args!("({c}) S{:?} x{:?}", s.as_slice(), e.as_slice()));
        }
        l.finish()
    }
}
