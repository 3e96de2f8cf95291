//! Helpers for writing the PBW multiplication rules as data.

use crate::coeffs::{qnum, LaurentPoly, RationalFunction};
use crate::tuple::Tuple;

pub type RuleTerms = Vec<(Tuple, RationalFunction)>;

/// Collects `coeff * B[t + delta]`, dropping terms that leave the
/// nonnegative orthant or have zero coefficient.
pub(crate) struct Collect<'a> {
    t: &'a [i32],
    pub out: RuleTerms,
}

impl<'a> Collect<'a> {
    pub fn new(t: &'a [i32]) -> Self {
        Self { t, out: Vec::new() }
    }

    pub fn push(&mut self, coeff: RationalFunction, delta: &[i32]) {
        if coeff.is_zero() {
            return;
        }
        let target: Tuple = self.t.iter().zip(delta).map(|(a, d)| a + d).collect();
        if target.iter().any(|&x| x < 0) {
            return;
        }
        self.out.push((target, coeff));
    }

    pub fn push_poly(&mut self, coeff: LaurentPoly, delta: &[i32]) {
        self.push(coeff.into(), delta)
    }
}

pub(crate) fn qp(k: i32) -> LaurentPoly {
    LaurentPoly::q_pow(k as i64)
}

/// `[m]_i` with `q_i = q^d`.
pub(crate) fn qi(m: i32, d: u32) -> LaurentPoly {
    qnum::q_int_poly(m as i64, d)
}

/// `<n> = q^n - q^-n`.
pub(crate) fn br(n: i32) -> LaurentPoly {
    qnum::bracket(n as i64)
}

pub(crate) fn lp(c: i64) -> LaurentPoly {
    LaurentPoly::constant(c)
}

/// `p / [m]_1`.
pub(crate) fn over_qi(p: LaurentPoly, m: i32) -> RationalFunction {
    RationalFunction::new(p, qi(m, 1))
}
