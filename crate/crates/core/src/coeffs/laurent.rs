use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A Laurent polynomial in `q` with integer coefficients.
///
/// Stored densely as `q^val * (c_0 + c_1 q + ... + c_n q^n)`. A nonzero
/// polynomial always has `c_0 != 0` and `c_n != 0`; zero is the empty vector
/// with `val == 0`, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    val: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        Self::from_coeffs(exp, vec![c.into()])
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    /// Builds `q^val * sum_k coeffs[k] q^k`, trimming zeros on both ends.
    pub fn from_coeffs(val: i64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        Self {
            val: val + lead as i64,
            coeffs,
        }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents accumulate.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_coeffs(lo, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.val == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn val(&self) -> i64 {
        self.val
    }

    /// Highest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn degree(&self) -> i64 {
        if self.is_zero() {
            0
        } else {
            self.val + self.coeffs.len() as i64 - 1
        }
    }

    /// Number of coefficient slots between the lowest and highest exponent.
    pub fn span(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.val == 0 && self.coeffs.len() == 1)
    }

    /// True for a single term `c q^k`.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// True when no negative powers of `q` occur.
    pub fn is_polynomial(&self) -> bool {
        self.is_zero() || self.val >= 0
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let idx = exp - self.val;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Coefficient of the lowest power of `q`.
    pub fn low_coeff(&self) -> Option<&BigInt> {
        self.coeffs.first()
    }

    /// Coefficient of the highest power of `q`.
    pub fn lead_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.val + k as i64, c))
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            val: self.val + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn shifted(mut self, k: i64) -> Self {
        if !self.is_zero() {
            self.val += k;
        }
        self
    }

    /// The same coefficients with the lowest exponent moved to 0.
    pub fn unshifted(&self) -> Self {
        self.shift(-self.val)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        Self {
            val: self.val,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Divides every coefficient by `c`; the caller guarantees exactness.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        debug_assert!(self.coeffs.iter().all(|x| (x % c).is_zero()));
        Self {
            val: self.val,
            coeffs: self.coeffs.iter().map(|x| x / c).collect(),
        }
    }

    /// Positive gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// `self` divided by its content, sign unchanged.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            self.clone()
        } else {
            self.div_scalar_exact(&c)
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / divisor` if it exists in `Z[q, q^-1]`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if divisor.span() > self.span() {
            return None;
        }
        let dlead = divisor.coeffs.last().unwrap();
        let n = self.span() - divisor.span() + 1;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n];
        for k in (0..n).rev() {
            let top = &rem[k + divisor.span() - 1];
            if top.is_zero() {
                continue;
            }
            let (qk, r) = top.div_rem(dlead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &qk * dc;
            }
            quot[k] = qk;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(self.val - divisor.val, quot))
    }

    /// Pseudo-remainder of the polynomial parts (exponent offsets ignored).
    fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut r = a.to_vec();
        let blead = b.last().unwrap();
        while r.len() >= b.len() {
            let rlead = r.last().unwrap().clone();
            let off = r.len() - b.len();
            for c in r.iter_mut() {
                *c *= blead;
            }
            for (j, bc) in b.iter().enumerate() {
                r[off + j] -= &rlead * bc;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        r
    }

    /// Monic-up-to-sign gcd of the polynomial parts, by the primitive
    /// pseudo-remainder sequence. Powers of `q` are units and are ignored; the
    /// result is primitive with a positive leading coefficient and `val == 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.unshifted().primitive_part().normalize_sign();
        }
        if other.is_zero() {
            return self.unshifted().primitive_part().normalize_sign();
        }
        if self.span() == 1 || other.span() == 1 {
            return Self::one();
        }
        let mut a = self.unshifted().primitive_part().coeffs;
        let mut b = other.unshifted().primitive_part().coeffs;
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        if a == b {
            return Self::from_coeffs(0, a).normalize_sign();
        }
        while !b.is_empty() {
            if b.len() == 1 {
                return Self::one();
            }
            let r = Self::pseudo_rem(&a, &b);
            a = b;
            b = Self::from_coeffs(0, r).unshifted().primitive_part().coeffs;
        }
        Self::from_coeffs(0, a).normalize_sign()
    }

    fn normalize_sign(self) -> Self {
        if self.coeffs.last().is_some_and(Signed::is_negative) {
            -self
        } else {
            self
        }
    }

    /// Evaluates at a rational point. Returns `None` when `q0 == 0` and a
    /// negative power of `q` is present.
    pub fn eval(&self, q0: &BigRational) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if q0.is_zero() {
            return if self.val < 0 {
                None
            } else {
                Some(BigRational::from_integer(self.coeff(0)))
            };
        }
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q0 + BigRational::from_integer(c.clone());
        }
        Some(acc * rational_pow(q0, self.val))
    }
}

pub(crate) fn rational_pow(x: &BigRational, e: i64) -> BigRational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

fn add_impl(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let lo = a.val.min(b.val);
    let hi = a.degree().max(b.degree());
    let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (k, c) in a.coeffs.iter().enumerate() {
        coeffs[(a.val - lo) as usize + k] += c;
    }
    for (k, c) in b.coeffs.iter().enumerate() {
        let slot = &mut coeffs[(b.val - lo) as usize + k];
        if negate_b {
            *slot -= c;
        } else {
            *slot += c;
        }
    }
    LaurentPoly::from_coeffs(lo, coeffs)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_impl(self, rhs, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_impl(self, rhs, true)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        LaurentPoly::from_coeffs(self.val + rhs.val, coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An arbitrary total order (used only for deterministic sorting).
impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.val, &self.coeffs).cmp(&(other.val, &other.coeffs))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::canonical::write_poly(f, self)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn trims_zero_coefficients() {
        let x = LaurentPoly::from_coeffs(-2, vec![0.into(), 0.into(), 3.into(), 0.into()]);
        assert_eq!(x.val(), 0);
        assert_eq!(x.degree(), 0);
        assert_eq!(x, LaurentPoly::constant(3));
        assert!(p(&[(4, 1), (4, -1)]).is_zero());
    }

    #[test]
    fn exact_division() {
        // (1 - q^4) / (1 - q^2) = 1 + q^2
        let num = p(&[(0, 1), (4, -1)]);
        let den = p(&[(0, 1), (2, -1)]);
        assert_eq!(num.div_exact(&den), Some(p(&[(0, 1), (2, 1)])));
        assert_eq!(den.div_exact(&num), None);
        assert_eq!(p(&[(0, 1), (1, 1)]).div_exact(&p(&[(0, 2)])), None);
    }

    #[test]
    fn gcd_ignores_units() {
        // gcd(q^3 (1 - q^4), q^-1 (1 + q^2)^2) = 1 + q^2
        let a = p(&[(3, 1), (7, -1)]);
        let b = p(&[(-1, 1), (1, 2), (3, 1)]);
        assert_eq!(a.gcd(&b), p(&[(0, 1), (2, 1)]));
        assert_eq!(a.gcd(&LaurentPoly::q_pow(5)), LaurentPoly::one());
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        let a = p(&[(0, 1), (1, 1)]);
        let b = p(&[(0, 1), (1, -1)]);
        assert!(a.gcd(&b).is_one());
    }

    #[test]
    fn evaluation() {
        let x = p(&[(-1, 1), (1, 1)]); // q^-1 + q
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(x.eval(&half), Some(BigRational::new(5.into(), 2.into())));
        assert_eq!(x.eval(&BigRational::zero()), None);
        assert_eq!(p(&[(0, 7), (3, 1)]).eval(&BigRational::zero()), Some(BigRational::from_integer(7.into())));
    }
}
