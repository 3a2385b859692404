//! Formal power series in `t`, truncated at a fixed order.
//!
//! Coefficients are rational functions in the remaining variables; the series
//! variable `t` itself must never occur inside a coefficient. Products of two
//! series of order `N` again have order `N`; coefficients beyond the order
//! are never consulted.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::error::{ExactError, ExactResult};
use super::ratfunc::RatFunc;
use super::vars::VarId;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncSeries {
    coeffs: Vec<RatFunc>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        TruncSeries { coeffs: vec![RatFunc::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, RatFunc::one())
    }

    pub fn constant(order: usize, c: RatFunc) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s.assert_t_free();
        s
    }

    pub fn from_coeffs(coeffs: Vec<RatFunc>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least the t^0 coefficient");
        let s = TruncSeries { coeffs };
        s.assert_t_free();
        s
    }

    fn assert_t_free(&self) {
        debug_assert!(
            self.coeffs
                .iter()
                .all(|c| !c.num().contains_var(VarId::T) && !c.den().contains_var(VarId::T)),
            "series coefficients must not contain t"
        );
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &RatFunc {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn add(&self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        TruncSeries {
            coeffs: (0..=order).map(|k| self.coeffs[k].add(&rhs.coeffs[k])).collect(),
        }
    }

    pub fn sub(&self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        TruncSeries {
            coeffs: (0..=order).map(|k| self.coeffs[k].sub(&rhs.coeffs[k])).collect(),
        }
    }

    pub fn neg(&self) -> TruncSeries {
        TruncSeries { coeffs: self.coeffs.iter().map(RatFunc::neg).collect() }
    }

    pub fn scale(&self, c: &RatFunc) -> TruncSeries {
        TruncSeries { coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect() }
    }

    /// Multiply by `t^k`, dropping coefficients past the order.
    pub fn shift(&self, k: usize) -> TruncSeries {
        let mut out = TruncSeries::zero(self.order());
        for i in 0..self.coeffs.len().saturating_sub(k) {
            out.coeffs[i + k] = self.coeffs[i].clone();
        }
        out
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        let mut out = TruncSeries::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(order - i) {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                out.coeffs[i + j] = out.coeffs[i + j].add(&self.coeffs[i].mul(&rhs.coeffs[j]));
            }
        }
        out
    }

    /// Recursive quotient. The divisor's `t^0` coefficient must be nonzero.
    pub fn div(&self, rhs: &TruncSeries) -> ExactResult<TruncSeries> {
        if rhs.coeffs[0].is_zero() {
            return Err(ExactError::Domain("series division by a divisor with zero constant term"));
        }
        let order = self.order().min(rhs.order());
        let c0_inv = rhs.coeffs[0].inv()?;
        let mut out = TruncSeries::zero(order);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for k in 0..n {
                acc = acc.sub(&out.coeffs[k].mul(&rhs.coeffs[n - k]));
            }
            out.coeffs[n] = acc.mul(&c0_inv);
        }
        Ok(out)
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[{c}] t^{k}")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::LaurentPoly;
    use crate::exact::rational::rat_int;

    fn geometric(order: usize) -> TruncSeries {
        TruncSeries::from_coeffs(vec![RatFunc::one(); order + 1])
    }

    #[test]
    fn identity_and_telescoping() {
        let s = geometric(3);
        assert_eq!(s.mul(&TruncSeries::one(3)), s);
        // (1 - t) * sum t^k = 1
        let one_minus_t = TruncSeries::from_coeffs(vec![
            RatFunc::one(),
            RatFunc::constant(rat_int(-1)),
            RatFunc::zero(),
            RatFunc::zero(),
        ]);
        assert_eq!(one_minus_t.mul(&s), TruncSeries::one(3));
    }

    #[test]
    fn self_division_is_one() {
        let mut s = geometric(4);
        s = s.scale(&RatFunc::from_poly(LaurentPoly::one() + LaurentPoly::var(VarId::Q)));
        assert_eq!(s.div(&s).unwrap(), TruncSeries::one(4));
    }

    #[test]
    fn division_requires_invertible_constant_term() {
        let t_only = TruncSeries::from_coeffs(vec![RatFunc::zero(), RatFunc::one()]);
        assert!(geometric(1).div(&t_only).is_err());
    }

    #[test]
    fn shift_drops_tail() {
        let s = geometric(2).shift(2);
        assert!(s.coeff(0).is_zero());
        assert!(s.coeff(1).is_zero());
        assert_eq!(s.coeff(2), &RatFunc::one());
    }
}
