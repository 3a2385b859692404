//! Rational functions: quotients of Laurent polynomials.
//!
//! Reduction policy: content reduction always, plus normalization of the
//! denominator (monomial part shifted out, content 1, positive leading
//! coefficient). Full multivariate gcd is deliberately not performed;
//! equality goes through cross-multiplication, which is the dominant
//! operation in the verification suites.

use alloc::collections::BTreeMap;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::error::{ExactError, ExactResult};
use super::poly::LaurentPoly;
use super::rational::{self, Rational};
use super::vars::{Monomial, VarId, NVARS};

#[derive(Clone, Debug)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatFunc { num: p, den: LaurentPoly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        RatFunc::from_poly(LaurentPoly::constant(c))
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> ExactResult<Self> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        let mut rf = RatFunc { num, den };
        rf.normalize();
        Ok(rf)
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return;
        }
        // Shift the denominator's common monomial factor onto the numerator
        // side; monomials are units of the Laurent ring.
        let mut min_exps = [i32::MAX; NVARS];
        for (m, _) in self.den.terms() {
            for (i, &e) in m.exps().iter().enumerate() {
                min_exps[i] = min_exps[i].min(e);
            }
        }
        let shift = Monomial::from_exps(min_exps).inv();
        if !shift.is_one() {
            self.num = self.num.mul_monomial(&shift, &rational::rat_one());
            self.den = self.den.mul_monomial(&shift, &rational::rat_one());
        }
        // Denominators are very often univariate (powers of (q)_n and
        // friends); reduce by the one-variable gcd so repeated addition does
        // not pile up common factors. Full multivariate gcd stays off the
        // table; equality goes through cross-multiplication.
        if !self.den.is_constant() {
            if let Some(v) = self.den.single_var() {
                if let Some(g) = self.num.univariate_gcd_with(&self.den, v) {
                    self.num = self.num.exact_div(&g).expect("gcd divides numerator");
                    self.den = self.den.exact_div(&g).expect("gcd divides denominator");
                }
            }
        }
        // Make the denominator content 1 with positive leading coefficient.
        let mut c = self.den.content();
        if self.den.leading_term().map_or(false, |(_, lc)| lc.is_negative()) {
            c = -c;
        }
        if !c.is_zero() && !c.is_one() {
            let inv = c.recip();
            self.den = self.den.scale(&inv);
            self.num = self.num.scale(&inv);
        }
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
        self.num == self.den
    }

    /// The underlying polynomial when the denominator is trivial, otherwise
    /// an exact division attempt.
    pub fn to_poly(&self) -> ExactResult<LaurentPoly> {
        if self.den.is_one() {
            Ok(self.num.clone())
        } else {
            self.num.exact_div(&self.den)
        }
    }

    pub fn as_constant(&self) -> Option<Rational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    pub fn add(&self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            let mut rf = RatFunc { num: &self.num + &rhs.num, den: self.den.clone() };
            rf.normalize();
            return rf;
        }
        let num = &self.num * &rhs.den + &rhs.num * &self.den;
        let den = &self.den * &rhs.den;
        let mut rf = RatFunc { num, den };
        rf.normalize();
        rf
    }

    pub fn sub(&self, rhs: &RatFunc) -> RatFunc {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, rhs: &RatFunc) -> RatFunc {
        let mut rf = RatFunc { num: &self.num * &rhs.num, den: &self.den * &rhs.den };
        rf.normalize();
        rf
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn inv(&self) -> ExactResult<RatFunc> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &RatFunc) -> ExactResult<RatFunc> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// Integer power; negative exponents invert.
    pub fn pow_i(&self, k: i64) -> ExactResult<RatFunc> {
        if k < 0 && self.is_zero() {
            return Err(ExactError::NonInvertibleBinding);
        }
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = RatFunc::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    pub fn substitute(&self, bindings: &BTreeMap<VarId, RatFunc>) -> ExactResult<RatFunc> {
        let n = self.num.substitute(bindings)?;
        let d = self.den.substitute(bindings)?;
        if d.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        n.div(&d)
    }

    pub fn eval_rationals(&self, values: &[Option<Rational>; NVARS]) -> ExactResult<Rational> {
        let d = self.den.eval_rationals(values)?;
        if d == rational::rat_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(self.num.eval_rationals(values)? / d)
    }
}

impl PartialEq for RatFunc {
    /// Equality of values, by cross-multiplication.
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFunc {}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn q() -> LaurentPoly {
        LaurentPoly::var(VarId::Q)
    }

    #[test]
    fn cross_multiplied_equality() {
        // (1-q^2)/(1-q) == 1+q
        let lhs = RatFunc::new(LaurentPoly::one() - q().pow(2), LaurentPoly::one() - q()).unwrap();
        let rhs = RatFunc::from_poly(LaurentPoly::one() + q());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn denominator_normalization() {
        // a / (q^-1 - q^-2) normalizes to a monomial-free denominator.
        let den = LaurentPoly::var_pow(VarId::Q, -1) - LaurentPoly::var_pow(VarId::Q, -2);
        let rf = RatFunc::new(LaurentPoly::var(VarId::A), den).unwrap();
        assert!(rf.den().terms().all(|(m, _)| m.exps().iter().all(|&e| e >= 0)));
        assert!(rf.den().leading_term().unwrap().1.is_positive());
    }

    #[test]
    fn arithmetic_round_trip() {
        let x = RatFunc::new(LaurentPoly::var(VarId::X), LaurentPoly::one() - q()).unwrap();
        let y = RatFunc::new(LaurentPoly::one() + q(), q()).unwrap();
        let s = x.add(&y).sub(&y);
        assert_eq!(s, x);
        let p = x.mul(&y).div(&y).unwrap();
        assert_eq!(p, x);
        assert_eq!(y.mul(&y.inv().unwrap()), RatFunc::one());
    }

    #[test]
    fn scaling_and_constants() {
        let half = RatFunc::constant(rat(1, 2));
        assert_eq!(half.as_constant(), Some(rat(1, 2)));
        assert_eq!(half.scale(&rat(2, 1)), RatFunc::one());
        assert!(RatFunc::new(LaurentPoly::one(), LaurentPoly::zero()).is_err());
    }
}
