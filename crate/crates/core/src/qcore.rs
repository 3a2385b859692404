//! q-combinatorial primitives: Pochhammer symbols, Gaussian binomial and
//! multinomial coefficients, q-double factorials, and the mixed-moment kernel
//! `opbar(n, m)` of the continuous q-Hermite functional.
//!
//! Every primitive returns a [`LaurentPoly`]; internal divisions are exact
//! polynomial divisions and must leave zero remainder. The base `q` is passed
//! explicitly so the same code runs symbolically or with `q` specialized to a
//! rational sample point.

use alloc::collections::BTreeMap;
use core::cell::RefCell;

use num_bigint::BigInt;
use num_integer::binomial;

use crate::exact::rational::{self, Rational};
use crate::exact::{ExactError, ExactResult, LaurentPoly, VarId};

/// The symbolic base `q`.
pub fn q_sym() -> LaurentPoly {
    LaurentPoly::var(VarId::Q)
}

/// `base^e` for integer `e`; the base must be a unit (symbol power or nonzero
/// constant), which holds for every `q`-value the crate uses.
pub fn base_pow(base: &LaurentPoly, e: i64) -> LaurentPoly {
    base.pow_unit(e).expect("q-value must be invertible")
}

/// The q-Pochhammer symbol `(arg; base)_n = prod_{j=0}^{n-1} (1 - arg*base^j)`.
pub fn poch(arg: &LaurentPoly, base: &LaurentPoly, n: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    let mut shifted = arg.clone();
    for _ in 0..n {
        acc = acc * (LaurentPoly::one() - &shifted);
        shifted = shifted * base;
    }
    acc
}

/// Product of Pochhammer symbols with a shared base and length.
pub fn poch_many(args: &[LaurentPoly], base: &LaurentPoly, n: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for a in args {
        acc = acc * poch(a, base, n);
    }
    acc
}

/// `(q; q)_n`.
pub fn qfac(n: usize, q: &LaurentPoly) -> LaurentPoly {
    poch(q, q, n)
}

/// The q-integer `[m]_q = 1 + q + ... + q^{m-1}`.
pub fn q_int(m: usize, q: &LaurentPoly) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    let mut p = LaurentPoly::one();
    for _ in 0..m {
        acc = acc + &p;
        p = p * q;
    }
    acc
}

/// `[2n-1]_q!! = prod_{j=1}^{n} [2j-1]_q`.
pub fn q_odd_double_factorial(n: usize, q: &LaurentPoly) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for j in 1..=n {
        acc = acc * q_int(2 * j - 1, q);
    }
    acc
}

/// Ordinary binomial coefficient under the zero conventions (`0` when `k < 0`
/// or `k > n`).
pub fn int_binom(n: i64, k: i64) -> Rational {
    if k < 0 || k > n || n < 0 {
        return rational::rat_zero();
    }
    Rational::from_integer(binomial(BigInt::from(n), BigInt::from(k)))
}

/// Gaussian binomial coefficient; `0` when `k < 0` or `k > n` per the
/// convention used throughout.
pub fn qbinom(n: i64, k: i64, q: &LaurentPoly) -> LaurentPoly {
    if k < 0 || k > n || n < 0 {
        return LaurentPoly::zero();
    }
    let (n, k) = (n as usize, k as usize);
    let num = qfac(n, q);
    let den = qfac(k, q) * qfac(n - k, q);
    num.exact_div(&den).expect("q-binomial division is exact")
}

/// Gaussian multinomial `(q)_n / prod_i (q)_{parts[i]}`.
pub fn qmultinom(n: usize, parts: &[usize], q: &LaurentPoly) -> ExactResult<LaurentPoly> {
    if parts.iter().sum::<usize>() != n {
        return Err(ExactError::Domain("multinomial parts must sum to n"));
    }
    let mut den = LaurentPoly::one();
    for &p in parts {
        den = den * qfac(p, q);
    }
    qfac(n, q).exact_div(&den)
}

/// `q^{binom(m, 2)}` as a Laurent power of the active base.
pub fn q_binom2_pow(m: i64, q: &LaurentPoly) -> LaurentPoly {
    base_pow(q, m * (m - 1) / 2)
}

/// The kernel of the continuous q-Hermite mixed moments:
///
/// `opbar(n, m) = sum_{k=m}^{n} (binom(n,(n-k)/2) - binom(n,(n-k)/2-1))
///               * (-1)^{(k-m)/2} q^{binom((k-m)/2+1, 2)} qbinom((k+m)/2, (k-m)/2)`
///
/// honoring the zero conventions, so the value is `0` unless `n == m (mod 2)`.
/// Implemented exactly as this finite sum (never via a recurrence) so that
/// the moment-oracle cross-check stays independent.
pub fn opbar(n: usize, m: usize, q: &LaurentPoly) -> LaurentPoly {
    let (n, m) = (n as i64, m as i64);
    let mut acc = LaurentPoly::zero();
    for k in m..=n {
        if (n - k) % 2 != 0 || (k - m) % 2 != 0 {
            continue;
        }
        let ballot = int_binom(n, (n - k) / 2) - int_binom(n, (n - k) / 2 - 1);
        if ballot == rational::rat_zero() {
            continue;
        }
        let j = (k - m) / 2;
        let sign = if j % 2 == 0 { rational::rat_one() } else { -rational::rat_one() };
        let term = qbinom((k + m) / 2, j, q).scale(&(ballot * sign)) * q_binom2_pow(j + 1, q);
        acc = acc + term;
    }
    acc
}

/// Memoizing wrapper around the q-primitives.
///
/// Carries the active `q`-value and per-session caches. Cached values equal
/// freshly computed values (cache transparency). Uses interior mutability
/// without locking, so a table is thread-confined; build one per thread.
pub struct QSymbolTable {
    qval: LaurentPoly,
    poch_cache: RefCell<BTreeMap<(LaurentPoly, LaurentPoly, usize), LaurentPoly>>,
    qbinom_cache: RefCell<BTreeMap<(i64, i64), LaurentPoly>>,
    opbar_cache: RefCell<BTreeMap<(usize, usize), LaurentPoly>>,
}

impl QSymbolTable {
    /// Table over the symbolic base `q`.
    pub fn new() -> Self {
        Self::with_q(q_sym())
    }

    /// Table over an explicit `q`-value (symbol power or rational constant).
    pub fn with_q(qval: LaurentPoly) -> Self {
        QSymbolTable {
            qval,
            poch_cache: RefCell::new(BTreeMap::new()),
            qbinom_cache: RefCell::new(BTreeMap::new()),
            opbar_cache: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn q(&self) -> &LaurentPoly {
        &self.qval
    }

    /// `q^2` for base-`q^2` Pochhammers such as `(q; q^2)_k`.
    pub fn q2(&self) -> LaurentPoly {
        &self.qval * &self.qval
    }

    pub fn q_pow(&self, e: i64) -> LaurentPoly {
        base_pow(&self.qval, e)
    }

    pub fn poch(&self, arg: &LaurentPoly, base: &LaurentPoly, n: usize) -> LaurentPoly {
        let key = (arg.clone(), base.clone(), n);
        if let Some(v) = self.poch_cache.borrow().get(&key) {
            return v.clone();
        }
        let v = poch(arg, base, n);
        self.poch_cache.borrow_mut().insert(key, v.clone());
        v
    }

    pub fn qfac(&self, n: usize) -> LaurentPoly {
        let q = self.qval.clone();
        self.poch(&q, &q, n)
    }

    pub fn qbinom(&self, n: i64, k: i64) -> LaurentPoly {
        let key = (n, k);
        if let Some(v) = self.qbinom_cache.borrow().get(&key) {
            return v.clone();
        }
        let v = qbinom(n, k, &self.qval);
        self.qbinom_cache.borrow_mut().insert(key, v.clone());
        v
    }

    pub fn qmultinom(&self, n: usize, parts: &[usize]) -> ExactResult<LaurentPoly> {
        qmultinom(n, parts, &self.qval)
    }

    pub fn q_odd_double_factorial(&self, n: usize) -> LaurentPoly {
        q_odd_double_factorial(n, &self.qval)
    }

    pub fn opbar(&self, n: usize, m: usize) -> LaurentPoly {
        let key = (n, m);
        if let Some(v) = self.opbar_cache.borrow().get(&key) {
            return v.clone();
        }
        let v = opbar(n, m, &self.qval);
        self.opbar_cache.borrow_mut().insert(key, v.clone());
        v
    }
}

impl Default for QSymbolTable {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;

    fn q() -> LaurentPoly {
        q_sym()
    }

    #[test]
    fn poch_definition() {
        let a = LaurentPoly::var(VarId::A);
        assert!(poch(&a, &q(), 0).is_one());
        let expected = (LaurentPoly::one() - &a) * (LaurentPoly::one() - &a * &q());
        assert_eq!(poch(&a, &q(), 2), expected);
        // (q; q^2)_2 = (1-q)(1-q^3)
        let q2 = &q() * &q();
        let expected =
            (LaurentPoly::one() - q()) * (LaurentPoly::one() - LaurentPoly::var_pow(VarId::Q, 3));
        assert_eq!(poch(&q(), &q2, 2), expected);
    }

    #[test]
    fn poch_splits_at_any_point() {
        // (a)_{n+m} = (a)_n (a q^n)_m
        let a = LaurentPoly::var(VarId::A);
        for n in 0..5usize {
            for m in 0..5usize {
                let lhs = poch(&a, &q(), n + m);
                let shifted = &a * base_pow(&q(), n as i64);
                let rhs = poch(&a, &q(), n) * poch(&shifted, &q(), m);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn qbinom_pascal_oracle() {
        // q-Pascal recurrence as an independent oracle for the quotient form.
        let mut rows: Vec<Vec<LaurentPoly>> = vec![vec![LaurentPoly::one()]];
        for n in 1..=20usize {
            let prev = &rows[n - 1];
            let mut row = vec![LaurentPoly::one()];
            for k in 1..n {
                row.push(&prev[k - 1] + &(base_pow(&q(), k as i64) * &prev[k]));
            }
            row.push(LaurentPoly::one());
            rows.push(row);
        }
        for n in 0..=20usize {
            for k in 0..=n {
                assert_eq!(qbinom(n as i64, k as i64, &q()), rows[n][k], "n={n} k={k}");
            }
        }
    }

    #[test]
    fn qbinom_second_pascal_recurrence() {
        for n in 0..=12i64 {
            for k in 0..=(n + 1) {
                let lhs = qbinom(n + 1, k, &q());
                let rhs = base_pow(&q(), n + 1 - k) * qbinom(n, k - 1, &q()) + qbinom(n, k, &q());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn qbinom_conventions_and_value() {
        assert!(qbinom(3, 5, &q()).is_zero());
        assert!(qbinom(3, -1, &q()).is_zero());
        assert!(qbinom(7, 0, &q()).is_one());
        // qbinom(4, 2) = 1 + q + 2q^2 + q^3 + q^4
        let expected = LaurentPoly::one()
            + q()
            + base_pow(&q(), 2).scale(&rational::rat_int(2))
            + base_pow(&q(), 3)
            + base_pow(&q(), 4);
        assert_eq!(qbinom(4, 2, &q()), expected);
    }

    #[test]
    fn qmultinom_values() {
        // (q)_3/(1-q)^3 = 1 + 2q + 2q^2 + q^3
        let expected = LaurentPoly::one()
            + q().scale(&rational::rat_int(2))
            + base_pow(&q(), 2).scale(&rational::rat_int(2))
            + base_pow(&q(), 3);
        assert_eq!(qmultinom(3, &[1, 1, 1], &q()).unwrap(), expected);
        assert!(qmultinom(4, &[4], &q()).unwrap().is_one());
        assert_eq!(qmultinom(2, &[1, 1], &q()).unwrap(), qbinom(2, 1, &q()));
        assert!(qmultinom(3, &[1, 1], &q()).is_err());
        for n in 0..=8usize {
            for k in 0..=n {
                assert_eq!(
                    qmultinom(n, &[k, n - k], &q()).unwrap(),
                    qbinom(n as i64, k as i64, &q())
                );
            }
        }
    }

    #[test]
    fn q_odd_double_factorial_values() {
        assert!(q_odd_double_factorial(0, &q()).is_one());
        assert_eq!(q_odd_double_factorial(2, &q()), q_int(1, &q()) * q_int(3, &q()));
        assert_eq!(
            q_odd_double_factorial(3, &q()),
            q_int(1, &q()) * q_int(3, &q()) * q_int(5, &q())
        );
    }

    #[test]
    fn opbar_small_values() {
        assert!(opbar(0, 0, &q()).is_one());
        assert_eq!(opbar(2, 0, &q()), LaurentPoly::one() - q());
        assert!(opbar(2, 1, &q()).is_zero());
        // opbar(3, 1) = 2 - q - q^2
        let expected = LaurentPoly::int(2) - q() - base_pow(&q(), 2);
        assert_eq!(opbar(3, 1, &q()), expected);
        // parity: vanishes when n and m differ mod 2
        for n in 0..8usize {
            for m in 0..=n {
                if (n - m) % 2 == 1 {
                    assert!(opbar(n, m, &q()).is_zero());
                }
            }
        }
    }

    #[test]
    fn table_is_cache_transparent() {
        let t = QSymbolTable::new();
        let a = LaurentPoly::var(VarId::A);
        for n in 0..6usize {
            assert_eq!(t.poch(&a, &q(), n), poch(&a, &q(), n));
            // second lookup hits the cache
            assert_eq!(t.poch(&a, &q(), n), poch(&a, &q(), n));
            for m in 0..=n {
                assert_eq!(t.opbar(n, m), opbar(n, m, &q()));
                assert_eq!(t.opbar(n, m), opbar(n, m, &q()));
                assert_eq!(t.qbinom(n as i64, m as i64), qbinom(n as i64, m as i64, &q()));
            }
        }
    }

    #[test]
    fn table_with_rational_q() {
        let t = QSymbolTable::with_q(LaurentPoly::constant(rational::rat(2, 3)));
        let v = t.qbinom(4, 2);
        let direct = qbinom(4, 2, &q());
        let mut values: [Option<Rational>; crate::exact::NVARS] = Default::default();
        values[VarId::Q.index()] = Some(rational::rat(2, 3));
        assert_eq!(v.as_constant().unwrap(), direct.eval_rationals(&values).unwrap());
    }
}
