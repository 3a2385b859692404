//! Expansion of infinite q-Pochhammer products as truncated series.
//!
//! The building blocks are the q-binomial/q-exponential expansions
//!
//! `(u; base)_inf  = sum_n (-1)^n base^{binom(n,2)} u^n / (base; base)_n`
//! `1/(u; base)_inf = sum_n u^n / (base; base)_n`
//!
//! with `u = c t` or `c t^2` and base `q` or `q^2`, the only shapes the
//! generating functions here use.

use alloc::vec::Vec;

use crate::exact::{LaurentPoly, RatFunc, TruncSeries};
use crate::qcore::{poch, q_sym};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PochBase {
    Q,
    QSquared,
}

impl PochBase {
    fn poly(self) -> LaurentPoly {
        match self {
            PochBase::Q => q_sym(),
            PochBase::QSquared => q_sym() * q_sym(),
        }
    }
}

/// One factor `(c t^e; base)_inf^{+-1}`.
#[derive(Clone, Debug)]
pub struct ProductFactor {
    pub coeff: LaurentPoly,
    pub t_exp: u8,
    pub base: PochBase,
    pub inverted: bool,
}

/// A product of infinite Pochhammer factors.
#[derive(Clone, Debug, Default)]
pub struct InfProductSpec {
    pub factors: Vec<ProductFactor>,
}

impl InfProductSpec {
    pub fn new() -> Self {
        InfProductSpec { factors: Vec::new() }
    }

    /// Multiply by `(c t; q)_inf`.
    pub fn num(mut self, c: LaurentPoly) -> Self {
        self.factors.push(ProductFactor { coeff: c, t_exp: 1, base: PochBase::Q, inverted: false });
        self
    }

    /// Divide by `(c t; q)_inf`.
    pub fn den(mut self, c: LaurentPoly) -> Self {
        self.factors.push(ProductFactor { coeff: c, t_exp: 1, base: PochBase::Q, inverted: true });
        self
    }

    /// Multiply by `(c t^2; q^2)_inf`.
    pub fn num_t2_q2(mut self, c: LaurentPoly) -> Self {
        self.factors.push(ProductFactor {
            coeff: c,
            t_exp: 2,
            base: PochBase::QSquared,
            inverted: false,
        });
        self
    }

    /// Divide by `(c t^2; q^2)_inf`.
    pub fn den_t2_q2(mut self, c: LaurentPoly) -> Self {
        self.factors.push(ProductFactor {
            coeff: c,
            t_exp: 2,
            base: PochBase::QSquared,
            inverted: true,
        });
        self
    }

    /// Multiply by `(c t^2; q)_inf` (base q, squared t).
    pub fn num_t2(mut self, c: LaurentPoly) -> Self {
        self.factors.push(ProductFactor { coeff: c, t_exp: 2, base: PochBase::Q, inverted: false });
        self
    }
}

fn factor_series(f: &ProductFactor, order: usize) -> TruncSeries {
    let base = f.base.poly();
    let mut out = TruncSeries::zero(order);
    let mut coeffs: Vec<RatFunc> = Vec::new();
    let mut n = 0usize;
    loop {
        let t_power = n * f.t_exp as usize;
        if t_power > order {
            break;
        }
        let num = if f.inverted {
            f.coeff.pow(n as u32)
        } else {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let binom2 = (n * n.saturating_sub(1) / 2) as u32;
            f.coeff.pow(n as u32).scale(&crate::exact::rational::rat_int(sign)) * base.pow(binom2)
        };
        let den = poch(&base, &base, n);
        coeffs.push(RatFunc::new(num, den).expect("(base; base)_n nonzero"));
        n += 1;
    }
    for (n, c) in coeffs.into_iter().enumerate() {
        let t_power = n * f.t_exp as usize;
        out = out.add(&TruncSeries::constant(order, c).shift(t_power));
    }
    out
}

/// Expand the product to the given order.
pub fn product_series(spec: &InfProductSpec, order: usize) -> TruncSeries {
    let mut acc = TruncSeries::one(order);
    for f in &spec.factors {
        acc = acc.mul(&factor_series(f, order));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, rat_int};
    use crate::exact::VarId;

    fn q() -> LaurentPoly {
        q_sym()
    }

    #[test]
    fn empty_spec_is_one() {
        assert_eq!(product_series(&InfProductSpec::new(), 4), TruncSeries::one(4));
    }

    #[test]
    fn t_infinity_expansion() {
        // (t)_inf: coefficients 1, -1/(1-q), q/((q)_2), ...
        let s = product_series(&InfProductSpec::new().num(LaurentPoly::one()), 3);
        assert!(s.coeff(0).is_one());
        assert_eq!(
            s.coeff(1),
            &RatFunc::new(LaurentPoly::int(-1), LaurentPoly::one() - q()).unwrap()
        );
        assert_eq!(s.coeff(2), &RatFunc::new(q(), poch(&q(), &q(), 2)).unwrap());
    }

    #[test]
    fn product_telescopes() {
        // (ct)_inf = (1 - ct) (cqt)_inf
        let c = LaurentPoly::var(VarId::A);
        let lhs = product_series(&InfProductSpec::new().num(c.clone()), 6);
        let shifted = product_series(&InfProductSpec::new().num(&c * &q()), 6);
        let linear = TruncSeries::one(6)
            .sub(&TruncSeries::constant(6, RatFunc::from_poly(c)).shift(1));
        assert_eq!(lhs, linear.mul(&shifted));
    }

    #[test]
    fn inverse_factor_inverts() {
        let c = LaurentPoly::var(VarId::A);
        let num = product_series(&InfProductSpec::new().num(c.clone()), 5);
        let den = product_series(&InfProductSpec::new().den(c), 5);
        assert_eq!(num.mul(&den), TruncSeries::one(5));
    }

    #[test]
    fn hermite_denominator_coefficient() {
        // 1/((tz)_inf (t/z)_inf): coeff of t^1 is (z + 1/z)/(1-q) = 2x/(1-q)
        let spec = InfProductSpec::new()
            .den(LaurentPoly::var(VarId::Z))
            .den(LaurentPoly::var_pow(VarId::Z, -1));
        let s = product_series(&spec, 2);
        let expected = RatFunc::new(
            LaurentPoly::var(VarId::Z) + LaurentPoly::var_pow(VarId::Z, -1),
            LaurentPoly::one() - q(),
        )
        .unwrap();
        assert_eq!(s.coeff(1), &expected);
        let _ = (rat(1, 2), rat_int(1));
    }

    #[test]
    fn base_q2_t2_factor() {
        // (t^2; q^2)_inf: t^2 coefficient is -1/(1-q^2)
        let s = product_series(&InfProductSpec::new().num_t2_q2(LaurentPoly::one()), 4);
        assert!(s.coeff(1).is_zero());
        let q2 = &q() * &q();
        assert_eq!(
            s.coeff(2),
            &RatFunc::new(LaurentPoly::int(-1), LaurentPoly::one() - q2).unwrap()
        );
    }
}
