use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// An element of Q(q), kept in lowest terms.
///
/// The denominator is a polynomial with positive constant term; any power of
/// `q` lives in the numerator. Numerator and denominator share no polynomial
/// factor and no integer factor, so equal values compare equal structurally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl RationalFunction {
    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        Self::from_poly(LaurentPoly::q_pow(k))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    /// `num / den` reduced to canonical form. Panics if `den` is zero.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        Self::normalize_units(num, den)
    }

    /// Fixes the unit ambiguity of an already coprime pair.
    fn normalize_units(mut num: LaurentPoly, mut den: LaurentPoly) -> Self {
        let shift = den.val();
        if shift != 0 {
            num = num.shifted(-shift);
            den = den.shifted(-shift);
        }
        if !den.is_one() {
            let c = num.content().gcd(&den.content());
            if !c.is_one() {
                num = num.div_scalar_exact(&c);
                den = den.div_scalar_exact(&c);
            }
            if den.low_coeff().is_some_and(Signed::is_negative) {
                num = -num;
                den = -den;
            }
        }
        Self { num, den }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The Laurent polynomial this equals, if the denominator is 1.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    /// True for elements of Z[q] (no denominator, no negative powers).
    pub fn is_integral_polynomial(&self) -> bool {
        self.den.is_one() && self.num.is_polynomial()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize_units(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            num: self.num.shift(k),
            den: self.den.clone(),
        }
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        if self.den.is_one() {
            return Self::from_poly(&self.num * p);
        }
        let g = p.gcd(&self.den);
        if g.is_one() {
            Self::normalize_units(&self.num * p, self.den.clone())
        } else {
            Self::normalize_units(&self.num * &p.div_exact(&g).unwrap(), self.den.div_exact(&g).unwrap())
        }
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        self.mul_poly(&LaurentPoly::constant(c.clone()))
    }

    /// Evaluates at a rational point, failing at poles.
    pub fn eval_at(&self, q0: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(q0).filter(|d| !d.is_zero());
        let (Some(d), Some(n)) = (d, self.num.eval(q0)) else {
            return Err(Error::Pole(q0.to_string()));
        };
        Ok(n / d)
    }

    /// The value at `q = 0` of an element of Z[q].
    pub fn specialize_q0(&self) -> Result<BigRational> {
        if !self.is_integral_polynomial() {
            return Err(Error::NotPolynomial(self.to_string()));
        }
        Ok(BigRational::from_integer(self.num.coeff(0)))
    }
}

impl From<LaurentPoly> for RationalFunction {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for RationalFunction {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -self.num,
            den: self.den,
        }
    }
}

fn add_impl(a: &RationalFunction, b: &RationalFunction, negate: bool) -> RationalFunction {
    let bn = if negate { -&b.num } else { b.num.clone() };
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return RationalFunction { num: bn, den: b.den.clone() };
    }
    if a.den == b.den {
        let num = &a.num + &bn;
        if a.den.is_one() {
            return RationalFunction::from_poly(num);
        }
        return RationalFunction::new(num, a.den.clone());
    }
    // Henrici: with g = gcd(b, d), a/b + c/d = (a d' + c b') / (b' d) and the
    // only possible common factor left is a divisor of g.
    let g = a.den.gcd(&b.den);
    if g.is_one() {
        let num = &(&a.num * &b.den) + &(&bn * &a.den);
        return RationalFunction::normalize_units(num, &a.den * &b.den);
    }
    let ad = a.den.div_exact(&g).unwrap();
    let bd = b.den.div_exact(&g).unwrap();
    let num = &(&a.num * &bd) + &(&bn * &ad);
    if num.is_zero() {
        return RationalFunction::zero();
    }
    let h = num.gcd(&g);
    let den = &ad * &b.den;
    if h.is_one() {
        RationalFunction::normalize_units(num, den)
    } else {
        RationalFunction::normalize_units(num.div_exact(&h).unwrap(), den.div_exact(&h).unwrap())
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        add_impl(self, rhs, false)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        add_impl(self, rhs, true)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        match (self.den.is_one(), rhs.den.is_one()) {
            (true, true) => RationalFunction::from_poly(&self.num * &rhs.num),
            (true, false) => rhs.mul_poly(&self.num),
            (false, true) => self.mul_poly(&rhs.num),
            (false, false) => {
                let g1 = self.num.gcd(&rhs.den);
                let g2 = rhs.num.gcd(&self.den);
                let div = |p: &LaurentPoly, g: &LaurentPoly| {
                    if g.is_one() {
                        p.clone()
                    } else {
                        p.div_exact(g).unwrap()
                    }
                };
                let num = &div(&self.num, &g1) * &div(&rhs.num, &g2);
                let den = &div(&self.den, &g2) * &div(&rhs.den, &g1);
                RationalFunction::normalize_units(num, den)
            }
        }
    }
}

/// Panics on division by zero; see [`RationalFunction::checked_div`].
impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl std::iter::Sum for RationalFunction {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| &acc + &x)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::canonical::write_rational(f, self)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    fn rf(s: &str) -> RationalFunction {
        s.parse().unwrap()
    }

    #[test]
    fn inverse_pair() {
        let lam = RationalFunction::new(LaurentPoly::one(), p(&[(0, 1), (2, -1)]));
        let x = RationalFunction::from_poly(p(&[(0, 1), (2, -1)]));
        assert!((&lam * &x).is_one());
    }

    #[test]
    fn laurent_normalization() {
        let x = &RationalFunction::q_pow(1) + &RationalFunction::q_pow(-1);
        assert_eq!(x.den(), &LaurentPoly::one());
        assert_eq!(x.num(), &p(&[(-1, 1), (1, 1)]));
        // Shifts in the denominator move into the numerator.
        let y = RationalFunction::new(p(&[(0, 1), (2, 1)]), p(&[(1, 1)]));
        assert_eq!(y, x);
    }

    #[test]
    fn gcd_reduction() {
        let x = RationalFunction::new(p(&[(0, 1), (4, -1)]), p(&[(0, 1), (2, -1)]));
        assert_eq!(x, RationalFunction::from_poly(p(&[(0, 1), (2, 1)])));
    }

    #[test]
    fn integer_content_and_sign() {
        let x = RationalFunction::new(p(&[(0, 4)]), p(&[(0, -6), (1, 2)]));
        assert_eq!(x.to_string(), "(-2)/(3 - q)");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(RationalFunction::one().checked_div(&RationalFunction::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn q0_specialization() {
        let f = rf("-q^2 + q^6 + q^8 - q^10 - q^12 - q^14 + q^18 + q^20");
        assert_eq!(f.specialize_q0().unwrap(), BigRational::zero());
        assert_eq!(RationalFunction::one().specialize_q0().unwrap(), BigRational::one());
        assert!(rf("q^-1").specialize_q0().is_err());
        assert!(rf("(1)/(1 - q)").specialize_q0().is_err());
    }

    #[test]
    fn evaluation_and_poles() {
        let lam = rf("(1)/(1 - q^2)");
        assert!(matches!(lam.eval_at(&BigRational::one()), Err(Error::Pole(_))));
        let third = BigRational::new(1.into(), 3.into());
        assert_eq!(lam.eval_at(&third).unwrap(), BigRational::new(9.into(), 8.into()));
        assert_eq!(RationalFunction::one().eval_at(&third).unwrap(), BigRational::one());
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-4i64..5, -9i64..10), 0..5).prop_map(LaurentPoly::from_terms)
    }

    fn arb_rf() -> impl Strategy<Value = RationalFunction> {
        (arb_poly(), arb_poly()).prop_filter_map("nonzero denominator", |(n, d)| {
            (!d.is_zero()).then(|| RationalFunction::new(n, d))
        })
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_rf(), b in arb_rf(), c in arb_rf()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
            if !a.is_zero() {
                prop_assert!((&a / &a).is_one());
                prop_assert_eq!(&(&b / &a) * &a, b.clone());
            }
        }

        #[test]
        fn canonical_form_is_unique(n in arb_poly(), d in arb_poly(), k in arb_poly()) {
            prop_assume!(!d.is_zero() && !k.is_zero());
            let x = RationalFunction::new(n.clone(), d.clone());
            let y = RationalFunction::new(&n * &k, &d * &k);
            prop_assert_eq!(&x, &y);
            prop_assert_eq!(x.den().val(), 0);
            prop_assert!(x.den().low_coeff().unwrap().is_positive());
            prop_assert!(x.num().gcd(x.den()).is_one() || x.num().is_zero());
        }
    }
}
