//! q-integers, q-factorials and the Fock normalization constants.
//!
//! Every function takes `d`, the exponent with `q_i = q^d` for the node in
//! question.

use super::{LaurentPoly, RationalFunction};

/// `[m]_i = (q_i^m - q_i^-m) / (q_i - q_i^-1)`, valid for any integer `m`.
pub fn q_int_poly(m: i64, d: u32) -> LaurentPoly {
    if m < 0 {
        return -q_int_poly(-m, d);
    }
    let d = d as i64;
    LaurentPoly::from_terms((0..m).map(|j| (d * (m - 1 - 2 * j), 1)))
}

pub fn q_int(m: i64, d: u32) -> RationalFunction {
    q_int_poly(m, d).into()
}

/// `<n> = q^n - q^-n` (always in the base `q`).
pub fn bracket(n: i64) -> LaurentPoly {
    LaurentPoly::from_terms([(n, 1), (-n, -1)])
}

pub fn q_factorial_poly(m: u32, d: u32) -> LaurentPoly {
    (1..=m as i64).fold(LaurentPoly::one(), |acc, k| &acc * &q_int_poly(k, d))
}

pub fn q_factorial(m: u32, d: u32) -> RationalFunction {
    q_factorial_poly(m, d).into()
}

/// `[n choose r]_i`, a Laurent polynomial.
pub fn q_binomial(n: u32, r: u32, d: u32) -> LaurentPoly {
    assert!(r <= n);
    let den = &q_factorial_poly(r, d) * &q_factorial_poly(n - r, d);
    q_factorial_poly(n, d).div_exact(&den).expect("q-binomial is a Laurent polynomial")
}

/// `1 - q_i^2`.
pub fn one_minus_qi2(d: u32) -> LaurentPoly {
    LaurentPoly::from_terms([(0, 1), (2 * d as i64, -1)])
}

/// `(q_i^2)_a = prod_{m=1}^a (1 - q_i^{2m})`.
pub fn q_pochhammer_poly(a: u32, d: u32) -> LaurentPoly {
    (1..=a as i64).fold(LaurentPoly::one(), |acc, m| {
        &acc * &LaurentPoly::from_terms([(0, 1), (2 * d as i64 * m, -1)])
    })
}

pub fn q_pochhammer(a: u32, d: u32) -> RationalFunction {
    q_pochhammer_poly(a, d).into()
}

/// `lambda_i = (1 - q_i^2)^-1`.
pub fn lambda(d: u32) -> RationalFunction {
    RationalFunction::new(LaurentPoly::one(), one_minus_qi2(d))
}

/// `d_{i,a} = q_i^{-a(a-1)/2} lambda_i^a`.
pub fn d_norm(a: u32, d: u32) -> RationalFunction {
    let a = a as i64;
    let shift = -(d as i64) * a * (a - 1) / 2;
    RationalFunction::new(LaurentPoly::q_pow(shift), one_minus_qi2(d).pow(a as u32))
}

/// `d_{i,a} / d_{i,a+s}` for `a + s >= 0`, the factor picked up when an
/// operator that shifts occupation `a` by `s` is rewritten on rescaled kets.
pub fn d_ratio(a: i64, s: i64, d: u32) -> RationalFunction {
    let b = a + s;
    let shift = d as i64 * (b * (b - 1) - a * (a - 1)) / 2;
    let f = one_minus_qi2(d);
    if s >= 0 {
        RationalFunction::from_poly(f.pow(s as u32).shifted(shift))
    } else {
        RationalFunction::new(LaurentPoly::q_pow(shift), f.pow((-s) as u32))
    }
}
