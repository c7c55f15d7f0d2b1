//! The field `Q(r, s)` of rational functions in the two parameters.

use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::bipoly::BiPoly;
use super::qfunc::QFunc;
use super::{fmt_poly, BigRat, ScalarError};

/// A reduced fraction `num / den` of polynomials in `r, s`.
///
/// Canonical form: `gcd(num, den) = 1` and the graded-lex leading coefficient
/// of `den` is 1. Two equal functions therefore have identical fields, and the
/// derived `PartialEq` is semantic equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RatFunc {
    num: BiPoly,
    den: BiPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        Self { num: BiPoly::zero(), den: BiPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(BiPoly::one())
    }

    pub fn r() -> Self {
        Self::from_poly(BiPoly::r())
    }

    pub fn s() -> Self {
        Self::from_poly(BiPoly::s())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_rat(BigRat::from_integer(c.into()))
    }

    pub fn from_rat(c: BigRat) -> Self {
        Self::from_poly(BiPoly::constant(c))
    }

    pub fn from_poly(num: BiPoly) -> Self {
        Self { num, den: BiPoly::one() }
    }

    /// Builds `num / den` and reduces it to canonical form.
    pub fn new(num: BiPoly, den: BiPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: BiPoly, den: BiPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.as_constant().is_some() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
            }
        };
        Self::from_coprime(num, den)
    }

    pub fn numer(&self) -> &BiPoly {
        &self.num
    }

    pub fn denom(&self) -> &BiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        let inv = rhs.inv().ok_or(ScalarError::DivisionByZero)?;
        Ok(self * &inv)
    }

    /// `r^a s^b` for arbitrary integer exponents.
    pub fn monomial(a: i64, b: i64) -> Self {
        let up = BiPoly::monomial(BigRat::one(), (a.max(0) as u32, b.max(0) as u32));
        let down = BiPoly::monomial(BigRat::one(), ((-a).max(0) as u32, (-b).max(0) as u32));
        Self { num: up, den: down }
    }

    /// Exponents `(a, b)` if this function is exactly `r^a s^b`.
    pub fn monomial_exponents(&self) -> Option<(i64, i64)> {
        let (cn, (an, bn)) = self.num.as_monomial()?;
        let (cd, (ad, bd)) = self.den.as_monomial()?;
        (cn.is_one() && cd.is_one()).then_some((an as i64 - ad as i64, bn as i64 - bd as i64))
    }

    /// Substitutes `r = r0`, `s = s0`.
    pub fn evaluate(&self, r0: &BigRat, s0: &BigRat) -> Result<BigRat, ScalarError> {
        let d = self.den.eval(r0, s0);
        if d.is_zero() {
            return Err(ScalarError::DenominatorVanishes);
        }
        Ok(self.num.eval(r0, s0) / d)
    }

    /// The one-parameter specialization `r = q`, `s = 1/q`. Fails if the
    /// denominator vanishes there, as `rs − 1` does.
    pub fn specialize_jimbo(&self) -> Result<QFunc, ScalarError> {
        let (n, dn) = self.num.laurent_jimbo();
        let (d, dd) = self.den.laurent_jimbo();
        if d.is_zero() {
            return Err(ScalarError::DenominatorVanishes);
        }
        // (n / q^dn) / (d / q^dd) = n q^dd / (d q^dn)
        QFunc::new(n.shift(dd), d.shift(dn))
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return RatFunc::from_poly(&self.num + &rhs.num);
            }
            return RatFunc::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::reduce(num, &self.den * &rhs.den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        if let Some(c) = self.as_rational() {
            return RatFunc { num: rhs.num.scale(&c), den: rhs.den.clone() };
        }
        if let Some(c) = rhs.as_rational() {
            return RatFunc { num: self.num.scale(&c), den: self.den.clone() };
        }
        // cross-cancel before multiplying to keep the operands small
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = rhs.den.div_exact(&g1).unwrap();
        let n2 = rhs.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        RatFunc::from_coprime(&n1 * &n2, &d1 * &d2)
    }
}

impl RatFunc {
    fn as_rational(&self) -> Option<BigRat> {
        if !self.den.is_one() {
            return None;
        }
        self.num.as_constant()
    }

    /// Only rescales `den` to be monic; the caller guarantees coprimality.
    fn from_coprime(num: BiPoly, den: BiPoly) -> Self {
        let lc = den.leading_term().unwrap().1;
        if lc.is_one() {
            Self { num, den }
        } else {
            let inv = lc.recip();
            Self { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero, like integer division.
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by the zero rational function")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.num.terms();
        if self.den.is_one() {
            return fmt_poly(f, num.iter().map(|((a, b), c)| (c, [("r", *a), ("s", *b)])));
        }
        f.write_str("(")?;
        fmt_poly(f, num.iter().map(|((a, b), c)| (c, [("r", *a), ("s", *b)])))?;
        f.write_str(")/(")?;
        let den = self.den.terms();
        fmt_poly(f, den.iter().map(|((a, b), c)| (c, [("r", *a), ("s", *b)])))?;
        f.write_str(")")
    }
}
