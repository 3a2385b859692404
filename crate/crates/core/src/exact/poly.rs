//! Multivariate Laurent polynomials with exact rational coefficients.
//!
//! The universal value type of the crate. Terms live in a `BTreeMap` keyed by
//! [`Monomial`] under the graded-lexicographic order, so iteration is already
//! canonical; no zero coefficient is ever stored.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::error::{ExactError, ExactResult};
use super::rational::{self, Rational};
use super::ratfunc::RatFunc;
use super::vars::{Monomial, VarId, NVARS};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl LaurentPoly {
    // ---- Constructors ----

    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(rational::rat_one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn int(n: i64) -> Self {
        Self::constant(rational::rat_int(n))
    }

    /// The variable `v` itself.
    pub fn var(v: VarId) -> Self {
        Self::monomial(Monomial::var(v, 1), rational::rat_one())
    }

    /// `v^e` for any integer `e`.
    pub fn var_pow(v: VarId, e: i32) -> Self {
        Self::monomial(Monomial::var(v, e), rational::rat_one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    // ---- Queries ----

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map_or(false, |c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    /// The constant value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(rational::rat_zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_one() {
                return Some(c.clone());
            }
        }
        None
    }

    /// The single term if the polynomial is a monomial (a unit of the Laurent ring).
    pub fn as_unit(&self) -> Option<(Monomial, Rational)> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            Some((*m, c.clone()))
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Greatest term under the canonical order. `None` for the zero polynomial.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn trailing_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(rational::rat_zero)
    }

    pub fn contains_var(&self, v: VarId) -> bool {
        self.terms.keys().any(|m| m.exp(v) != 0)
    }

    pub fn vars_used(&self) -> [bool; NVARS] {
        let mut used = [false; NVARS];
        for m in self.terms.keys() {
            for (i, &e) in m.exps().iter().enumerate() {
                if e != 0 {
                    used[i] = true;
                }
            }
        }
        used
    }

    /// Largest exponent of `v` over all terms. `None` for the zero polynomial.
    pub fn degree_in(&self, v: VarId) -> Option<i32> {
        self.terms.keys().map(|m| m.exp(v)).max()
    }

    pub fn min_degree_in(&self, v: VarId) -> Option<i32> {
        self.terms.keys().map(|m| m.exp(v)).min()
    }

    /// The coefficient of `v^e`, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, v: VarId, e: i32) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (m, c) in &self.terms {
            if m.exp(v) == e {
                p.add_term(m.without(v), c.clone());
            }
        }
        p
    }

    /// Decompose into coefficients of powers of `v`.
    pub fn coeffs_in(&self, v: VarId) -> BTreeMap<i32, LaurentPoly> {
        let mut out: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.exp(v)).or_default().add_term(m.without(v), c.clone());
        }
        out
    }

    // ---- Arithmetic ----

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &LaurentPoly) {
        for (m, c) in &other.terms {
            self.add_term(*m, c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &LaurentPoly) {
        for (m, c) in &other.terms {
            self.add_term(*m, -c.clone());
        }
    }

    pub fn scale(&self, c: &Rational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `self^k` for any integer `k`; negative powers require a unit
    /// (single-term) base.
    pub fn pow_unit(&self, k: i64) -> ExactResult<LaurentPoly> {
        if k >= 0 {
            let mut acc = LaurentPoly::one();
            for _ in 0..k {
                acc = &acc * self;
            }
            return Ok(acc);
        }
        let (m, c) = self.as_unit().ok_or(ExactError::NonInvertibleBinding)?;
        let inv = LaurentPoly::monomial(m.inv(), c.recip());
        inv.pow_unit(-k)
    }

    /// Positive gcd of all coefficients; zero for the zero polynomial.
    pub fn content(&self) -> Rational {
        let mut g = rational::rat_zero();
        for c in self.terms.values() {
            g = rational::rat_gcd(&g, c);
        }
        g
    }

    /// The unique variable occurring, when exactly one does.
    pub fn single_var(&self) -> Option<VarId> {
        let used = self.vars_used();
        let mut found = None;
        for v in VarId::ALL {
            if used[v.index()] {
                if found.is_some() {
                    return None;
                }
                found = Some(v);
            }
        }
        found
    }

    /// Dense coefficient vector in `v` after shifting out the minimal
    /// exponent; valid when no other variable occurs in the terms grouped
    /// here. Returns `(min_exponent, coefficients ascending)`.
    fn to_dense(&self, v: VarId) -> (i32, Vec<Rational>) {
        if self.is_zero() {
            return (0, Vec::new());
        }
        let lo = self.min_degree_in(v).unwrap();
        let hi = self.degree_in(v).unwrap();
        let mut dense = vec![rational::rat_zero(); (hi - lo + 1) as usize];
        for (m, c) in &self.terms {
            debug_assert!(m.without(v).is_one());
            dense[(m.exp(v) - lo) as usize] = c.clone();
        }
        (lo, dense)
    }

    fn from_dense(v: VarId, lo: i32, dense: &[Rational]) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (i, c) in dense.iter().enumerate() {
            p.add_term(Monomial::var(v, lo + i as i32), c.clone());
        }
        p
    }

    /// Monic gcd in `Q[v]` of this polynomial's `v`-wise content and `other`
    /// (which must be univariate in `v`). `self` may contain other
    /// variables: grouping its terms by the non-`v` monomial, any common
    /// divisor in `Q[v]` must divide every group. Returns a polynomial of
    /// positive degree or `None` when the gcd is trivial.
    pub fn univariate_gcd_with(&self, other: &LaurentPoly, v: VarId) -> Option<LaurentPoly> {
        if other.is_zero() || self.is_zero() {
            return None;
        }
        let (_, mut g) = other.to_dense(v);
        for (_, group) in self.coeffs_in_complement(v) {
            if g.len() <= 1 {
                return None;
            }
            let (_, f) = group.to_dense(v);
            g = dense_gcd(&g, &f);
        }
        if g.len() <= 1 {
            None
        } else {
            Some(LaurentPoly::from_dense(v, 0, &g))
        }
    }

    /// Group terms by the monomial in all variables other than `v`; each
    /// value is univariate in `v`.
    fn coeffs_in_complement(&self, v: VarId) -> BTreeMap<Monomial, LaurentPoly> {
        let mut out: BTreeMap<Monomial, LaurentPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key = m.without(v);
            let part = Monomial::var(v, m.exp(v));
            out.entry(key).or_default().add_term(part, c.clone());
        }
        out
    }

    /// Exact division; fails with [`ExactError::InexactDivision`] when `self`
    /// is not a multiple of `d`.
    ///
    /// Works top-down on leading terms. In the Laurent ring every monomial
    /// divides every other, so when the quotient exists each step produces
    /// one of its terms; a step cap guards against non-exact inputs, for
    /// which the descent need not terminate.
    pub fn exact_div(&self, d: &LaurentPoly) -> ExactResult<LaurentPoly> {
        if d.is_zero() {
            return Err(ExactError::Domain("division by zero polynomial"));
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        if let Some((dm, dc)) = d.as_unit() {
            return Ok(self.mul_monomial(&dm.inv(), &dc.recip()));
        }
        let (dm, dc) = {
            let (m, c) = d.leading_term().unwrap();
            (*m, c.clone())
        };
        let cap = (self.num_terms() + 1) * (d.num_terms() + 1) + 4096;
        let mut quotient = LaurentPoly::zero();
        let mut rem = self.clone();
        let mut steps = 0usize;
        while let Some((rm, rc)) = rem.leading_term() {
            steps += 1;
            if steps > cap {
                return Err(ExactError::InexactDivision);
            }
            let qm = rm.div(&dm);
            let qc = rc / &dc;
            rem.sub_assign(&d.mul_monomial(&qm, &qc));
            quotient.add_term(qm, qc);
        }
        Ok(quotient)
    }

    /// Rewrite `I^2 -> -1` exhaustively, leaving `I`-degree at most 1.
    pub fn gaussian_reduce(&self) -> ExactResult<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(VarId::I);
            if e < 0 {
                return Err(ExactError::NegativeImaginaryExponent);
            }
            let sign = if (e / 2) % 2 == 0 { c.clone() } else { -c.clone() };
            let mut base = m.without(VarId::I);
            if e % 2 != 0 {
                base = base.mul(&Monomial::var(VarId::I, 1));
            }
            out.add_term(base, sign);
        }
        Ok(out)
    }

    // ---- Substitution and evaluation ----

    /// Exact image under the substitution homomorphism. Unbound variables are
    /// left alone. Binding a non-invertible value to a variable appearing
    /// with negative exponent is an error; in particular substituting 0 there.
    pub fn substitute(&self, bindings: &BTreeMap<VarId, RatFunc>) -> ExactResult<RatFunc> {
        let mut powers: BTreeMap<(VarId, i32), RatFunc> = BTreeMap::new();
        let mut acc = RatFunc::zero();
        for (m, c) in &self.terms {
            let mut residual = Monomial::one();
            let mut term = RatFunc::from_poly(LaurentPoly::constant(c.clone()));
            for v in VarId::ALL {
                let e = m.exp(v);
                if e == 0 {
                    continue;
                }
                match bindings.get(&v) {
                    None => residual = residual.mul(&Monomial::var(v, e)),
                    Some(b) => {
                        let p = match powers.get(&(v, e)) {
                            Some(p) => p.clone(),
                            None => {
                                let p = b.pow_i(e as i64)?;
                                powers.insert((v, e), p.clone());
                                p
                            }
                        };
                        term = term.mul(&p);
                    }
                }
            }
            term = term.mul(&RatFunc::from_poly(LaurentPoly::monomial(
                residual,
                rational::rat_one(),
            )));
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Evaluate with a rational value for every variable that occurs.
    pub fn eval_rationals(&self, values: &[Option<Rational>; NVARS]) -> ExactResult<Rational> {
        let mut powers: BTreeMap<(usize, i32), Rational> = BTreeMap::new();
        let mut acc = rational::rat_zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let val = values[i]
                    .as_ref()
                    .ok_or(ExactError::Domain("unbound variable in evaluation"))?;
                let p = match powers.get(&(i, e)) {
                    Some(p) => p.clone(),
                    None => {
                        if val.is_zero() && e < 0 {
                            return Err(ExactError::NonInvertibleBinding);
                        }
                        let mut p = rational::rat_one();
                        for _ in 0..e.unsigned_abs() {
                            p *= val;
                        }
                        if e < 0 {
                            p = p.recip();
                        }
                        powers.insert((i, e), p.clone());
                        p
                    }
                };
                term *= &p;
            }
            acc += term;
        }
        Ok(acc)
    }

    // ---- Display ----

    fn fmt_term(m: &Monomial, c: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if m.is_one() || !c.abs().is_one() {
            let r = c.abs();
            if r.denom().is_one() {
                parts.push(alloc::format!("{}", r.numer()));
            } else {
                parts.push(alloc::format!("{r}"));
            }
        }
        for v in VarId::ALL {
            let e = m.exp(v);
            if e == 1 {
                parts.push(String::from(v.name()));
            } else if e != 0 {
                parts.push(alloc::format!("{}^{}", v.name(), e));
            }
        }
        write!(f, "{}", parts.join("*"))
    }
}

/// Monic Euclidean gcd of dense rational polynomials (ascending
/// coefficients, nonzero leading entries).
fn dense_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
        while v.last().map_or(false, |c| c.is_zero()) {
            v.pop();
        }
        v
    }
    fn rem(mut r: Vec<Rational>, d: &[Rational]) -> Vec<Rational> {
        let dd = d.len() - 1;
        let lead = d.last().unwrap();
        while r.len() > dd {
            let k = r.len() - 1 - dd;
            let factor = r.last().unwrap() / lead;
            for (i, di) in d.iter().enumerate() {
                let v = &r[k + i] - &(di * &factor);
                r[k + i] = v;
            }
            r = trim(r);
            if r.is_empty() {
                break;
            }
        }
        r
    }
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(a, &b);
        a = b;
        b = r;
    }
    if let Some(lead) = a.last().cloned() {
        for c in &mut a {
            *c /= &lead;
        }
    }
    a
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            Self::fmt_term(m, c, f)?;
        }
        Ok(())
    }
}

// ---- Operator impls (by reference and by value) ----

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.sub_assign(rhs);
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        // Multiply the smaller map into the larger one.
        let (small, big) = if self.num_terms() <= rhs.num_terms() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = LaurentPoly::zero();
        for (m, c) in &small.terms {
            for (m2, c2) in &big.terms {
                out.add_term(m.mul(m2), c * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_value_ops {
    ($($op:ident :: $f:ident),*) => {$(
        impl $op for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly { (&self).$f(&rhs) }
        }
        impl $op<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: &LaurentPoly) -> LaurentPoly { (&self).$f(rhs) }
        }
        impl $op<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly { self.$f(&rhs) }
        }
    )*};
}

forward_value_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, rat_int};

    fn a() -> LaurentPoly {
        LaurentPoly::var(VarId::A)
    }
    fn q() -> LaurentPoly {
        LaurentPoly::var(VarId::Q)
    }
    fn z() -> LaurentPoly {
        LaurentPoly::var(VarId::Z)
    }

    #[test]
    fn two_factor_expansion() {
        // (1-a)(1-aq) = 1 - a - aq + a^2 q
        let lhs = (LaurentPoly::one() - a()) * (LaurentPoly::one() - a() * q());
        let expected = LaurentPoly::one() - a() - a() * q() + a().pow(2) * q();
        assert_eq!(lhs, expected);
    }

    #[test]
    fn additive_inverse() {
        let p = a() * q() + LaurentPoly::int(3);
        assert!((&p + &(-&p)).is_zero());
    }

    #[test]
    fn laurent_square() {
        // (z + 1/z)^2 = z^2 + 2 + z^-2
        let s = z() + LaurentPoly::var_pow(VarId::Z, -1);
        let sq = s.pow(2);
        let expected = LaurentPoly::var_pow(VarId::Z, 2)
            + LaurentPoly::int(2)
            + LaurentPoly::var_pow(VarId::Z, -2);
        assert_eq!(sq, expected);
    }

    #[test]
    fn exact_division_geometric() {
        // (1 - q^n) / (1 - q) = 1 + q + ... + q^{n-1}
        let n = 9;
        let num = LaurentPoly::one() - LaurentPoly::var_pow(VarId::Q, n);
        let den = LaurentPoly::one() - q();
        let quot = num.exact_div(&den).unwrap();
        assert_eq!(quot.num_terms(), n as usize);
        assert_eq!(quot * den, num);
    }

    #[test]
    fn inexact_division_detected() {
        let num = LaurentPoly::one() + q();
        let den = LaurentPoly::one() - q();
        assert_eq!(num.exact_div(&den), Err(ExactError::InexactDivision));
    }

    #[test]
    fn division_by_monomial_shifts() {
        let p = a().pow(2) * q() + a();
        let d = LaurentPoly::monomial(Monomial::var(VarId::A, 1), rat_int(2));
        let quot = p.exact_div(&d).unwrap();
        assert_eq!(quot, a().scale(&rat(1, 2)) * q() + LaurentPoly::constant(rat(1, 2)));
    }

    #[test]
    fn gaussian_reduce_examples() {
        let i = LaurentPoly::var(VarId::I);
        assert_eq!(i.pow(2).gaussian_reduce().unwrap(), LaurentPoly::int(-1));
        let x = LaurentPoly::var(VarId::X);
        assert_eq!(
            (i.pow(3) * &x).gaussian_reduce().unwrap(),
            -(LaurentPoly::var(VarId::I) * &x)
        );
        let lhs = (LaurentPoly::one() + &i) * (LaurentPoly::one() - &i);
        assert_eq!(lhs.gaussian_reduce().unwrap(), LaurentPoly::int(2));
        assert_eq!(
            LaurentPoly::var_pow(VarId::I, -1).gaussian_reduce(),
            Err(ExactError::NegativeImaginaryExponent)
        );
    }

    #[test]
    fn gaussian_reduce_idempotent_and_multiplicative() {
        let i = LaurentPoly::var(VarId::I);
        let p = (i.pow(3) + LaurentPoly::one()) * (i.pow(2) - a());
        let r = p.gaussian_reduce().unwrap();
        assert_eq!(r.gaussian_reduce().unwrap(), r);
        let u = i.pow(2) + a() * &i;
        let v = i.pow(5) - q();
        let lhs = (&u * &v).gaussian_reduce().unwrap();
        let rhs = (u.gaussian_reduce().unwrap() * v.gaussian_reduce().unwrap())
            .gaussian_reduce()
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitute_monomial_image() {
        // p = q^2 x under {q -> 1/q, x -> I x} gives q^-2 I x
        let p = q().pow(2) * LaurentPoly::var(VarId::X);
        let mut b = BTreeMap::new();
        b.insert(VarId::Q, RatFunc::from_poly(LaurentPoly::var_pow(VarId::Q, -1)));
        b.insert(
            VarId::X,
            RatFunc::from_poly(LaurentPoly::var(VarId::I) * LaurentPoly::var(VarId::X)),
        );
        let img = p.substitute(&b).unwrap();
        let expected = LaurentPoly::var_pow(VarId::Q, -2)
            * LaurentPoly::var(VarId::I)
            * LaurentPoly::var(VarId::X);
        assert_eq!(img, RatFunc::from_poly(expected));
    }

    #[test]
    fn substitute_rational_evaluation() {
        // 1 - q at q = 3/5 is 2/5
        let p = LaurentPoly::one() - q();
        let mut b = BTreeMap::new();
        b.insert(VarId::Q, RatFunc::constant(rat(3, 5)));
        assert_eq!(p.substitute(&b).unwrap(), RatFunc::constant(rat(2, 5)));
    }

    #[test]
    fn substitute_zero_into_negative_exponent_fails() {
        let p = LaurentPoly::var_pow(VarId::A, -1);
        let mut b = BTreeMap::new();
        b.insert(VarId::A, RatFunc::zero());
        assert_eq!(p.substitute(&b), Err(ExactError::NonInvertibleBinding));
    }

    #[test]
    fn content_and_display() {
        let p = a().scale(&rat(4, 3)) + q().scale(&rat(-2, 9));
        assert_eq!(p.content(), rat(2, 9));
        assert_eq!(alloc::format!("{}", q().scale(&rat_int(-1)) + LaurentPoly::one()), "-q + 1");
    }
}
