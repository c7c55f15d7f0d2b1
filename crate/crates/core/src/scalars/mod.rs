//! Exact scalar fields.
//!
//! Two fields carry every matrix in the crate:
//!
//! * [`RatFunc`], the function field `Q(r, s)`, for symbolic computations;
//! * [`BigRat`], the rationals, for computations at a sampled parameter point.
//!
//! Both implement [`Scalar`], and a [`Params`] value supplies the elements
//! `r` and `s` of the chosen field, so the algebra layer is written once.

mod bipoly;
mod qfunc;
mod ratfunc;
mod unipoly;

use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

pub use bipoly::{BiPoly, Exponents};
pub use qfunc::QFunc;
pub use ratfunc::RatFunc;
pub use unipoly::UniPoly;

/// Arbitrary-precision rational number.
pub type BigRat = num_rational::BigRational;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ScalarError {
    DivisionByZero,
    /// Evaluating a rational function at a pole.
    DenominatorVanishes,
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::DivisionByZero => f.write_str("division by zero"),
            Self::DenominatorVanishes => f.write_str("denominator vanishes at the evaluation point"),
        }
    }
}

impl core::error::Error for ScalarError {}

/// An exact field in which all matrix entries live.
///
/// `Ord` is an arbitrary structural order, used only to key maps.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + Ord
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + Sub<Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + Mul<Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn from_int(c: i64) -> Self;
    fn from_rat(c: &BigRat) -> Self;
    fn inv(&self) -> Option<Self>;

    fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        let inv = rhs.inv().ok_or(ScalarError::DivisionByZero)?;
        Ok(self.clone() * inv)
    }

    fn pow_i(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        Some((0..e.unsigned_abs()).fold(Self::one(), |acc, _| acc * &base))
    }
}

impl Scalar for BigRat {
    fn zero() -> Self {
        <Self as Zero>::zero()
    }
    fn one() -> Self {
        <Self as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn from_int(c: i64) -> Self {
        BigRat::from_integer(c.into())
    }
    fn from_rat(c: &BigRat) -> Self {
        c.clone()
    }
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

macro_rules! forward_owned_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl<'a> Add<&'a $t> for $t {
            type Output = $t;
            fn add(self, rhs: &'a $t) -> $t {
                &self + rhs
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl<'a> Sub<&'a $t> for $t {
            type Output = $t;
            fn sub(self, rhs: &'a $t) -> $t {
                &self - rhs
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl<'a> Mul<&'a $t> for $t {
            type Output = $t;
            fn mul(self, rhs: &'a $t) -> $t {
                &self * rhs
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}

forward_owned_ops!(RatFunc);
forward_owned_ops!(QFunc);

impl Scalar for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn is_one(&self) -> bool {
        RatFunc::is_one(self)
    }
    fn from_int(c: i64) -> Self {
        RatFunc::from_int(c)
    }
    fn from_rat(c: &BigRat) -> Self {
        RatFunc::from_rat(c.clone())
    }
    fn inv(&self) -> Option<Self> {
        RatFunc::inv(self)
    }
}

impl Scalar for QFunc {
    fn zero() -> Self {
        QFunc::zero()
    }
    fn one() -> Self {
        QFunc::one()
    }
    fn is_zero(&self) -> bool {
        QFunc::is_zero(self)
    }
    fn is_one(&self) -> bool {
        QFunc::is_one(self)
    }
    fn from_int(c: i64) -> Self {
        QFunc::from_int(c)
    }
    fn from_rat(c: &BigRat) -> Self {
        QFunc::from_rat(c.clone())
    }
    fn inv(&self) -> Option<Self> {
        QFunc::inv(self)
    }
}

/// Writes a polynomial given by its terms in display order, e.g. `r*s^2 - 1/2*s + 3`.
pub(crate) fn fmt_poly<'a, const N: usize>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a BigRat, [(&'static str, u32); N])>,
) -> fmt::Result {
    let mut first = true;
    for (c, vars) in terms {
        let neg = c.is_negative();
        match (first, neg) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        let abs = c.abs();
        let mut wrote = false;
        if !One::is_one(&abs) || vars.iter().all(|(_, e)| *e == 0) {
            write!(f, "{abs}")?;
            wrote = true;
        }
        for (name, e) in vars {
            if e == 0 {
                continue;
            }
            if wrote {
                f.write_str("*")?;
            }
            f.write_str(name)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
            wrote = true;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    Symbolic,
    Sampled,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Symbolic => "symbolic",
            Mode::Sampled => "sampled",
        })
    }
}

/// A choice of scalar field together with its elements `r` and `s`.
pub trait Params: Clone + fmt::Debug + Send + Sync {
    type F: Scalar;

    fn mode(&self) -> Mode;
    fn r(&self) -> Self::F;
    fn s(&self) -> Self::F;

    /// `r^a s^b`.
    fn monomial(&self, a: i64, b: i64) -> Self::F {
        let ra = self.r().pow_i(a).expect("r is nonzero");
        let sb = self.s().pow_i(b).expect("s is nonzero");
        ra * sb
    }

    /// Recovers `(a, b)` from a value known to be `r^a s^b`; `None` when the
    /// value is not such a monomial or the exponents are not unique.
    fn monomial_exponents(&self, x: &Self::F) -> Option<(i64, i64)>;

    /// `r s^{-1}`, the ratio appearing throughout the R-matrix formulas.
    fn ratio(&self) -> Self::F {
        self.monomial(1, -1)
    }
}

/// `r` and `s` as indeterminates: the field `Q(r, s)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Symbolic;

impl Params for Symbolic {
    type F = RatFunc;

    fn mode(&self) -> Mode {
        Mode::Symbolic
    }
    fn r(&self) -> RatFunc {
        RatFunc::r()
    }
    fn s(&self) -> RatFunc {
        RatFunc::s()
    }
    fn monomial(&self, a: i64, b: i64) -> RatFunc {
        RatFunc::monomial(a, b)
    }
    fn monomial_exponents(&self, x: &RatFunc) -> Option<(i64, i64)> {
        x.monomial_exponents()
    }
}

/// Largest exponent magnitude searched when reading weights off sampled
/// eigenvalues.
pub const EXPONENT_SEARCH_BOUND: i64 = 64;

/// `r = r0`, `s = s0` for a generic rational point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sampled {
    r0: BigRat,
    s0: BigRat,
}

impl Sampled {
    pub fn new(r0: BigRat, s0: BigRat) -> Result<Self, GenericityViolation> {
        genericity_check(&r0, &s0)?;
        Ok(Self { r0, s0 })
    }

    pub fn from_ints(r0: i64, s0: i64) -> Result<Self, GenericityViolation> {
        Self::new(BigRat::from_integer(r0.into()), BigRat::from_integer(s0.into()))
    }

    pub fn r0(&self) -> &BigRat {
        &self.r0
    }

    pub fn s0(&self) -> &BigRat {
        &self.s0
    }

    /// Evaluates a symbolic value at this point.
    pub fn evaluate(&self, f: &RatFunc) -> Result<BigRat, ScalarError> {
        f.evaluate(&self.r0, &self.s0)
    }
}

impl Default for Sampled {
    fn default() -> Self {
        Self::from_ints(2, 3).unwrap()
    }
}

impl Params for Sampled {
    type F = BigRat;

    fn mode(&self) -> Mode {
        Mode::Sampled
    }
    fn r(&self) -> BigRat {
        self.r0.clone()
    }
    fn s(&self) -> BigRat {
        self.s0.clone()
    }
    fn monomial(&self, a: i64, b: i64) -> BigRat {
        self.r0.pow(a as i32) * self.s0.pow(b as i32)
    }

    fn monomial_exponents(&self, x: &BigRat) -> Option<(i64, i64)> {
        if Zero::is_zero(x) {
            return None;
        }
        let b_of: BTreeMap<BigRat, i64> = (-EXPONENT_SEARCH_BOUND..=EXPONENT_SEARCH_BOUND)
            .map(|b| (self.s0.pow(b as i32), b))
            .collect();
        let mut found = None;
        for a in -EXPONENT_SEARCH_BOUND..=EXPONENT_SEARCH_BOUND {
            let rest = x / self.r0.pow(a as i32);
            if let Some(&b) = b_of.get(&rest) {
                if found.is_some() {
                    return None;
                }
                found = Some((a, b));
            }
        }
        found
    }
}

/// A parameter condition violated by a sampled point.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GenericityViolation {
    RIsZero,
    SIsZero,
    REqualsS,
    SEqualsMinusR,
}

impl fmt::Display for GenericityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::RIsZero => "r = 0 violates genericity",
            Self::SIsZero => "s = 0 violates genericity",
            Self::REqualsS => "r = s violates genericity",
            Self::SEqualsMinusR => "s = -r violates genericity",
        })
    }
}

impl core::error::Error for GenericityViolation {}

/// Accepts `(r0, s0)` iff both are nonzero and `r0/s0` is neither 1 nor -1.
///
/// The only rational roots of unity are `±1`, so this also guarantees that
/// `r0/s0` is not a root of unity.
pub fn genericity_check(r0: &BigRat, s0: &BigRat) -> Result<(), GenericityViolation> {
    if Zero::is_zero(r0) {
        return Err(GenericityViolation::RIsZero);
    }
    if Zero::is_zero(s0) {
        return Err(GenericityViolation::SIsZero);
    }
    if r0 == s0 {
        return Err(GenericityViolation::REqualsS);
    }
    if *r0 == -s0 {
        return Err(GenericityViolation::SEqualsMinusR);
    }
    Ok(())
}
