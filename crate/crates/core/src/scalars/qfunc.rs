//! Univariate rational functions in `q`, the target of the one-parameter
//! specialization.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::unipoly::UniPoly;
use super::{fmt_poly, BigRat, ScalarError};

/// Reduced fraction of polynomials in `q` with a monic denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct QFunc {
    num: UniPoly,
    den: UniPoly,
}

impl QFunc {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: UniPoly, den: UniPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        let inv = den.leading().unwrap().recip();
        Self { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn zero() -> Self {
        Self { num: UniPoly::zero(), den: UniPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }

    pub fn q() -> Self {
        Self::from_poly(UniPoly::x())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_rat(BigRat::from_integer(c.into()))
    }

    pub fn from_rat(c: BigRat) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn from_poly(num: UniPoly) -> Self {
        Self { num, den: UniPoly::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::reduce(self.den.clone(), self.num.clone()))
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        let inv = rhs.inv().ok_or(ScalarError::DivisionByZero)?;
        Ok(self * &inv)
    }
}

impl Add for &QFunc {
    type Output = QFunc;
    fn add(self, rhs: &QFunc) -> QFunc {
        if self.den == rhs.den {
            return QFunc::reduce(&self.num + &rhs.num, self.den.clone());
        }
        QFunc::reduce(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub for &QFunc {
    type Output = QFunc;
    fn sub(self, rhs: &QFunc) -> QFunc {
        self + &(-rhs)
    }
}

impl Neg for &QFunc {
    type Output = QFunc;
    fn neg(self) -> QFunc {
        QFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &QFunc {
    type Output = QFunc;
    fn mul(self, rhs: &QFunc) -> QFunc {
        QFunc::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl fmt::Display for QFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = |p: &UniPoly| {
            let mut t: alloc::vec::Vec<_> = p
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                .map(|(d, c)| (c.clone(), d as u32))
                .collect();
            t.reverse();
            t
        };
        let num = terms(&self.num);
        if self.den.is_one() {
            return fmt_poly(f, num.iter().map(|(c, d)| (c, [("q", *d)])));
        }
        f.write_str("(")?;
        fmt_poly(f, num.iter().map(|(c, d)| (c, [("q", *d)])))?;
        f.write_str(")/(")?;
        let den = terms(&self.den);
        fmt_poly(f, den.iter().map(|(c, d)| (c, [("q", *d)])))?;
        f.write_str(")")
    }
}
