//! Polynomials in the two parameters `r` and `s` with rational coefficients.
//!
//! Stored recursively as a polynomial in `s` whose coefficients are
//! [`UniPoly`]s in `r`. This is the shape the gcd wants (Gauss' lemma over
//! `Q[r][s]`); the flat term view in graded-lex order is produced on demand.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::unipoly::UniPoly;
use super::BigRat;

/// Exponent pair `(a, b)` of the monomial `r^a s^b`.
pub type Exponents = (u32, u32);

/// Graded-lex comparison with `r` before `s`: higher total degree wins, ties
/// go to the larger `r` exponent.
pub fn grlex_cmp(x: &Exponents, y: &Exponents) -> Ordering {
    (x.0 + x.1, x.0).cmp(&(y.0 + y.1, y.0))
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct BiPoly {
    /// `coeffs[b]` is the coefficient of `s^b`, itself a polynomial in `r`.
    coeffs: Vec<UniPoly>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        Self::from_s_coeffs(vec![UniPoly::constant(c)])
    }

    pub fn r() -> Self {
        Self::monomial(BigRat::one(), (1, 0))
    }

    pub fn s() -> Self {
        Self::monomial(BigRat::one(), (0, 1))
    }

    pub fn monomial(c: BigRat, (a, b): Exponents) -> Self {
        let mut coeffs = vec![UniPoly::zero(); b as usize + 1];
        coeffs[b as usize] = UniPoly::monomial(c, a as usize);
        Self::from_s_coeffs(coeffs)
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponents, BigRat)>>(terms: I) -> Self {
        terms
            .into_iter()
            .fold(Self::zero(), |acc, (e, c)| &acc + &Self::monomial(c, e))
    }

    fn from_s_coeffs(mut coeffs: Vec<UniPoly>) -> Self {
        while coeffs.last().is_some_and(UniPoly::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Nonzero terms in descending graded-lex order.
    pub fn terms(&self) -> Vec<(Exponents, BigRat)> {
        let mut out = Vec::new();
        for (b, cr) in self.coeffs.iter().enumerate() {
            for (a, c) in cr.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    out.push(((a as u32, b as u32), c.clone()));
                }
            }
        }
        out.sort_by(|x, y| grlex_cmp(&y.0, &x.0));
        out
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs
            .iter()
            .map(|c| c.coeffs().iter().filter(|x| !x.is_zero()).count())
            .sum()
    }

    /// Leading term in graded-lex order.
    pub fn leading_term(&self) -> Option<(Exponents, BigRat)> {
        let mut best: Option<(Exponents, &BigRat)> = None;
        for (b, cr) in self.coeffs.iter().enumerate() {
            for (a, c) in cr.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let e = (a as u32, b as u32);
                if best.is_none_or(|(be, _)| grlex_cmp(&e, &be) == Ordering::Greater) {
                    best = Some((e, c));
                }
            }
        }
        best.map(|(e, c)| (e, c.clone()))
    }

    /// `Some((c, (a, b)))` when the polynomial is the single term `c r^a s^b`.
    pub fn as_monomial(&self) -> Option<(BigRat, Exponents)> {
        if self.num_terms() != 1 {
            return None;
        }
        self.leading_term().map(|(e, c)| (c, e))
    }

    pub fn as_constant(&self) -> Option<BigRat> {
        match self.coeffs.len() {
            0 => Some(BigRat::zero()),
            1 if self.coeffs[0].degree() == Some(0) => Some(self.coeffs[0].coeff(0)),
            _ => None,
        }
    }

    pub fn deg_s(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        Self::from_s_coeffs(self.coeffs.iter().map(|p| p.scale(c)).collect())
    }

    fn scale_uni(&self, p: &UniPoly) -> Self {
        Self::from_s_coeffs(self.coeffs.iter().map(|c| c * p).collect())
    }

    fn shift_s(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![UniPoly::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Divides by the graded-lex leading coefficient.
    pub fn normalized(&self) -> Self {
        match self.leading_term() {
            None => Self::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    pub fn eval(&self, r0: &BigRat, s0: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * s0 + c.eval(r0);
        }
        acc
    }

    /// Substitutes `r = q`, `s = 1/q`. Returns `(p, d)` with the value equal to
    /// `p(q) / q^d`, where `d = deg_s`.
    pub fn laurent_jimbo(&self) -> (UniPoly, usize) {
        let d = match self.deg_s() {
            None => return (UniPoly::zero(), 0),
            Some(d) => d,
        };
        // r^a s^b = q^(a - b) = q^(a + d - b) / q^d
        let mut acc = UniPoly::zero();
        for (b, cr) in self.coeffs.iter().enumerate() {
            acc = &acc + &cr.shift(d - b);
        }
        (acc, d)
    }

    /// Content over `Q[r]`: monic gcd of the `s`-coefficients.
    fn content(&self) -> UniPoly {
        self.coeffs.iter().fold(UniPoly::zero(), |g, c| {
            if g.is_one() {
                g
            } else {
                g.gcd(c)
            }
        })
    }

    fn div_uni_exact(&self, p: &UniPoly) -> Self {
        if p.is_one() {
            return self.clone();
        }
        Self::from_s_coeffs(
            self.coeffs
                .iter()
                .map(|c| c.div_exact(p).expect("content does not divide coefficient"))
                .collect(),
        )
    }

    fn primitive_part(&self) -> Self {
        self.div_uni_exact(&self.content())
    }

    /// Sparse pseudo-remainder with respect to `s`.
    fn prem(&self, divisor: &Self) -> Self {
        let dd = divisor.deg_s().expect("pseudo-division by zero");
        let lc = &divisor.coeffs[dd];
        let mut rem = self.clone();
        while let Some(dr) = rem.deg_s() {
            if dr < dd {
                break;
            }
            let top = rem.coeffs[dr].clone();
            rem = &rem.scale_uni(lc) - &divisor.scale_uni(&top).shift_s(dr - dd);
        }
        rem
    }

    /// Exact quotient in `Q[r, s]`, or `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.deg_s()?;
        if divisor.is_one() {
            return Some(self.clone());
        }
        let lc = &divisor.coeffs[dd];
        let mut rem = self.clone();
        let mut quot = vec![UniPoly::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(dr) = rem.deg_s() {
            if dr < dd {
                return None;
            }
            let t = rem.coeffs[dr].div_exact(lc)?;
            rem = &rem - &divisor.scale_uni(&t).shift_s(dr - dd);
            quot[dr - dd] = t;
        }
        Some(Self::from_s_coeffs(quot))
    }

    fn r_valuation(&self) -> usize {
        self.coeffs.iter().filter_map(UniPoly::valuation).min().unwrap_or(0)
    }

    fn s_valuation(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    /// Greatest common divisor, normalized so the graded-lex leading
    /// coefficient is 1. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        if let Some(g) = Self::monomial_gcd(self, other).or_else(|| Self::monomial_gcd(other, self)) {
            return g;
        }
        let c = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.deg_s() < b.deg_s() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let rem = a.prem(&b);
            a = b;
            b = if rem.is_zero() { rem } else { rem.primitive_part() };
        }
        a.primitive_part().scale_uni(&c).normalized()
    }

    fn monomial_gcd(mono: &Self, other: &Self) -> Option<Self> {
        let (_, (a, b)) = mono.as_monomial()?;
        let a = (a as usize).min(other.r_valuation());
        let b = (b as usize).min(other.s_valuation());
        Some(Self::monomial(BigRat::one(), (a as u32, b as u32)))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a = &*a + b;
        }
        BiPoly::from_s_coeffs(coeffs)
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut coeffs = vec![UniPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        BiPoly::from_s_coeffs(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(c: i64) -> BigRat {
        BigRat::from_integer(c.into())
    }

    fn poly(terms: &[((u32, u32), i64)]) -> BiPoly {
        BiPoly::from_terms(terms.iter().map(|&(e, c)| (e, int(c))))
    }

    #[test]
    fn terms_are_graded_lex_descending() {
        // s^2 + r*s - 1 + r^2
        let p = poly(&[((0, 2), 1), ((1, 1), 1), ((0, 0), -1), ((2, 0), 1)]);
        let exps: Vec<_> = p.terms().into_iter().map(|(e, _)| e).collect();
        assert_eq!(exps, vec![(2, 0), (1, 1), (0, 2), (0, 0)]);
    }

    #[test]
    fn gcd_of_products() {
        let a = poly(&[((1, 0), 1), ((0, 1), -1)]); // r - s
        let b = poly(&[((1, 1), 1), ((0, 0), 1)]); // rs + 1
        let c = poly(&[((2, 0), 1), ((0, 1), 3)]); // r^2 + 3s
        let g = (&a * &b).gcd(&(&a * &c));
        assert_eq!(g, a);
        assert!((&b * &b).gcd(&c).is_one());
        let scaled = (&a * &b).scale(&int(-7));
        assert_eq!(scaled.gcd(&(&b * &c)), b);
    }

    #[test]
    fn monomial_gcd_fast_path() {
        let m = poly(&[((2, 3), 5)]);
        let p = poly(&[((1, 4), 1), ((3, 2), 2)]);
        assert_eq!(m.gcd(&p), poly(&[((1, 2), 1)]));
    }

    #[test]
    fn exact_division() {
        let a = poly(&[((2, 0), 1), ((0, 2), -1)]);
        let b = poly(&[((1, 0), 1), ((0, 1), -1)]);
        assert_eq!(a.div_exact(&b), Some(poly(&[((1, 0), 1), ((0, 1), 1)])));
        assert_eq!(b.div_exact(&a), None);
    }

    #[test]
    fn jimbo_laurent_substitution() {
        // r + s -> q + 1/q = (q^2 + 1) / q
        let (p, d) = poly(&[((1, 0), 1), ((0, 1), 1)]).laurent_jimbo();
        assert_eq!(d, 1);
        assert_eq!(p, UniPoly::from_coeffs(vec![int(1), int(0), int(1)]));
    }
}
