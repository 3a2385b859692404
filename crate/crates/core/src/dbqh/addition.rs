//! The addition theorem: `h_n(x,y;q) = (-1)^n sum_k qbinom(n,k)
//! h_k(x/a, 0|q) (-a)^k p_{n-k}(y, a|q)`, plus the generating-function
//! factorization `G(x, y, -t) = G(x/a, 0, -at) F(y, a, t)` behind it.

use crate::exact::rational;
use crate::exact::{LaurentPoly, VarId};
use crate::genfun::{product_series, InfProductSpec};
use crate::qcore::{poch, q_binom2_pow, q_sym, qbinom};

use super::h_explicit;

fn a() -> LaurentPoly {
    LaurentPoly::var(VarId::A)
}
fn y() -> LaurentPoly {
    LaurentPoly::var(VarId::Y)
}
fn x() -> LaurentPoly {
    LaurentPoly::var(VarId::X)
}

/// `p_t(y, a; q) = sum_m qbinom(t, 2m) (q; q^2)_m a^{2m} (1/a^2; q^2)_m
/// y^{t-2m} q^{binom(t-2m, 2)}`, with `a^{2m} (1/a^2; q^2)_m` built as the
/// cleared product `prod_j (a^2 - q^{2j})`.
pub fn p_addition(deg: usize) -> LaurentPoly {
    let q = q_sym();
    let q2 = &q * &q;
    let a2 = a() * a();
    let mut acc = LaurentPoly::zero();
    for m in 0..=(deg / 2) {
        let mut cleared = LaurentPoly::one();
        let mut q_pow = LaurentPoly::one();
        for _ in 0..m {
            cleared = cleared * (&a2 - &q_pow);
            q_pow = q_pow * &q2;
        }
        acc = acc
            + qbinom(deg as i64, 2 * m as i64, &q)
                * poch(&q, &q2, m)
                * cleared
                * y().pow((deg - 2 * m) as u32)
                * q_binom2_pow((deg - 2 * m) as i64, &q);
    }
    acc
}

/// `a^k h_k(x/a, 0; q)` as a polynomial in `x` and `a`.
fn h_scaled(k: usize) -> LaurentPoly {
    let q = q_sym();
    let q2 = &q * &q;
    let a2 = a() * a();
    let mut acc = LaurentPoly::zero();
    for j in 0..=(k / 2) {
        let sign = if j % 2 == 0 { rational::rat_one() } else { -rational::rat_one() };
        acc = acc
            + qbinom(k as i64, 2 * j as i64, &q).scale(&sign)
                * poch(&q, &q2, j)
                * q_binom2_pow(j as i64, &q).pow(2)
                * x().pow((k - 2 * j) as u32)
                * a2.pow(j as u32);
    }
    acc
}

/// Verify the addition theorem at degree `n` as an exact identity in
/// `(x, y, a, q)`.
pub fn addition_check(n: usize) -> bool {
    let q = q_sym();
    let mut rhs = LaurentPoly::zero();
    for k in 0..=n {
        let sign = if k % 2 == 0 { rational::rat_one() } else { -rational::rat_one() };
        rhs = rhs + qbinom(n as i64, k as i64, &q).scale(&sign) * h_scaled(k) * p_addition(n - k);
    }
    if n % 2 == 1 {
        rhs = -rhs;
    }
    h_explicit(n) == rhs
}

/// Verify the factorization `G(x, y, -t) = G(x/a, 0, -at) F(y, a, t)` of the
/// generating functions as truncated series.
pub fn factorization_series_check(order: usize) -> bool {
    let a2 = a() * a();
    // G(x, y, -t) = (t^2; q^2)_inf (-yt)_inf / (-xt)_inf
    let lhs = product_series(
        &InfProductSpec::new().num_t2_q2(LaurentPoly::one()).num(-y()).den(-x()),
        order,
    );
    // G(x/a, 0, -at) = (a^2 t^2; q^2)_inf / (-xt)_inf
    let g0 = product_series(&InfProductSpec::new().num_t2_q2(a2.clone()).den(-x()), order);
    // F(y, a, t) = (t^2; q^2)_inf (-yt)_inf / (a^2 t^2; q^2)_inf
    let f = product_series(
        &InfProductSpec::new()
            .num_t2_q2(LaurentPoly::one())
            .num(-y())
            .den_t2_q2(a2),
        order,
    );
    lhs == g0.mul(&f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p_small_values() {
        assert!(p_addition(0).is_one());
        assert_eq!(p_addition(1), y());
    }

    #[test]
    fn addition_theorem_small_degrees() {
        for n in 0..=5usize {
            assert!(addition_check(n), "n={n}");
        }
    }

    #[test]
    fn addition_check_degree_one_by_hand() {
        // x - y = -(p_1(y,a) - a (x/a) p_0) = x - y
        let rhs = -(p_addition(1) - x());
        assert_eq!(h_explicit(1), rhs);
    }

    #[test]
    fn series_factorization() {
        assert!(factorization_series_check(6));
    }
}
