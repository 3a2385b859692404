//! Discrete big q-Hermite I/II polynomials: explicit forms, the 4-term
//! recurrence, the two moment functionals of 2-fold multiple orthogonality,
//! the y-recurrence, the I <-> II relation, and the addition theorem.
//!
//! Everything here is a Laurent polynomial in `(x, y, q)` (plus `a` for the
//! addition theorem); the `x^{n-2k} (y/x; q)_{n-2k}` factors are always built
//! in the cleared product form `prod_j (x - y q^j)`, so `x` never carries a
//! negative exponent.

mod addition;

pub use addition::{addition_check, factorization_series_check, p_addition};

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::exact::rational;
use crate::exact::{ExactResult, LaurentPoly, RatFunc, VarId};
use crate::genfun::{product_series, InfProductSpec};
use crate::qcore::{base_pow, poch, q_binom2_pow, q_odd_double_factorial, q_sym, qbinom, qfac};

fn x() -> LaurentPoly {
    LaurentPoly::var(VarId::X)
}
fn y() -> LaurentPoly {
    LaurentPoly::var(VarId::Y)
}

/// `prod_{j=0}^{m-1} (x - y q^j)`, the cleared form of `x^m (y/x; q)_m`.
fn cleared_xy_poch(m: usize) -> LaurentPoly {
    let q = q_sym();
    let mut acc = LaurentPoly::one();
    let mut shift = y();
    for _ in 0..m {
        acc = acc * (x() - &shift);
        shift = shift * &q;
    }
    acc
}

/// `h_n(x, y; q)` from the explicit sum.
pub fn h_explicit(n: usize) -> LaurentPoly {
    let q = q_sym();
    let q2 = &q * &q;
    let mut acc = LaurentPoly::zero();
    for k in 0..=(n / 2) {
        let sign = if k % 2 == 0 { rational::rat_one() } else { -rational::rat_one() };
        acc = acc
            + qbinom(n as i64, 2 * k as i64, &q).scale(&sign)
                * poch(&q, &q2, k)
                * q_binom2_pow(k as i64, &q).pow(2)
                * cleared_xy_poch(n - 2 * k);
    }
    acc
}

/// `h_0 .. h_up_to` by the 4-term recurrence
/// `h_{n+1} = (x - y q^n) h_n - q^{n-1}(1-q^n) h_{n-1}
///  + y q^{n-2}(1-q^n)(1-q^{n-1}) h_{n-2}`.
pub fn h_recurrence_polys(up_to: usize) -> Vec<LaurentPoly> {
    let q = q_sym();
    let mut out: Vec<LaurentPoly> = Vec::with_capacity(up_to + 1);
    out.push(LaurentPoly::one());
    for n in 0..up_to {
        let ni = n as i64;
        let qn = base_pow(&q, ni);
        let mut next = (x() - y() * &qn) * &out[n];
        if n >= 1 {
            next = next - base_pow(&q, ni - 1) * (LaurentPoly::one() - &qn) * &out[n - 1];
        }
        if n >= 2 {
            next = next
                + y()
                    * base_pow(&q, ni - 2)
                    * (LaurentPoly::one() - &qn)
                    * (LaurentPoly::one() - base_pow(&q, ni - 1))
                    * &out[n - 2];
        }
        out.push(next);
    }
    out
}

pub fn h_recurrence(n: usize) -> LaurentPoly {
    h_recurrence_polys(n).pop().unwrap()
}

/// The rescaled polynomials `h*_n` whose weights the matching enumeration
/// reproduces: `sum_k (-1)^k q^{2 binom(k,2)} [2k-1]_q!! qbinom(n, 2k)
/// prod_j (x - y q^j)`.
pub fn hstar(n: usize) -> LaurentPoly {
    let q = q_sym();
    let mut acc = LaurentPoly::zero();
    for k in 0..=(n / 2) {
        let sign = if k % 2 == 0 { rational::rat_one() } else { -rational::rat_one() };
        acc = acc
            + qbinom(n as i64, 2 * k as i64, &q).scale(&sign)
                * q_binom2_pow(k as i64, &q).pow(2)
                * q_odd_double_factorial(k, &q)
                * cleared_xy_poch(n - 2 * k);
    }
    acc
}

/// Expand a polynomial in `x` (coefficients in `y, q`) in the monic
/// `h`-basis; the expansion stays polynomial.
pub fn h_basis_expand(target: &LaurentPoly) -> Vec<LaurentPoly> {
    let deg = target.degree_in(VarId::X).unwrap_or(0).max(0) as usize;
    let basis = h_recurrence_polys(deg);
    let mut rem = target.clone();
    let mut coeffs = alloc::vec![LaurentPoly::zero(); deg + 1];
    for k in (0..=deg).rev() {
        let c = rem.coeff_of(VarId::X, k as i32);
        if c.is_zero() {
            continue;
        }
        rem = rem - &c * &basis[k];
        coeffs[k] = c;
    }
    assert!(rem.is_zero(), "h-basis expansion left a residual");
    coeffs
}

/// `L^(i)(x^n)` under the normalization `L^(i)(h_m) = delta_{mi}`: the
/// coefficient of `h_i` in the `h`-basis expansion of `x^n`.
pub fn dual_moments_oracle(n: usize, i: usize) -> LaurentPoly {
    assert!(i <= 1, "only the two functionals of 2-fold orthogonality exist");
    let coeffs = h_basis_expand(&x().pow(n as u32));
    coeffs.get(i).cloned().unwrap_or_else(LaurentPoly::zero)
}

/// The closed moment formulas as printed: `L^(0)(x^n) = sum_k qbinom(n,2k)
/// (q;q^2)_k y^{n-2k}` and `L^(1)(x^n) = (1-q^n) sum_k qbinom(n-1,2k)
/// (q;q^2)_k y^{n-2k-1}`.
pub fn dual_moments_paper(n: usize, i: usize) -> LaurentPoly {
    assert!(i <= 1);
    let q = q_sym();
    let q2 = &q * &q;
    let mut acc = LaurentPoly::zero();
    if i == 0 {
        for k in 0..=(n / 2) {
            acc = acc
                + qbinom(n as i64, 2 * k as i64, &q) * poch(&q, &q2, k) * y().pow((n - 2 * k) as u32);
        }
        acc
    } else {
        if n == 0 {
            return LaurentPoly::zero();
        }
        for k in 0..=((n - 1) / 2) {
            acc = acc
                + qbinom(n as i64 - 1, 2 * k as i64, &q)
                    * poch(&q, &q2, k)
                    * y().pow((n - 2 * k - 1) as u32);
        }
        (LaurentPoly::one() - base_pow(&q, n as i64)) * acc
    }
}

/// `L_h(x^n h_m)` for the discrete q-Hermite I functional:
/// `q^{binom(m,2)} (q)_n / (q^2; q^2)_{(n-m)/2}`, zero off parity or for
/// `m > n`.
pub fn xnh_closed(n: usize, m: usize) -> LaurentPoly {
    if m > n || (n - m) % 2 != 0 {
        return LaurentPoly::zero();
    }
    let q = q_sym();
    let q2 = &q * &q;
    let num = q_binom2_pow(m as i64, &q) * qfac(n, &q);
    num.exact_div(&poch(&q2, &q2, (n - m) / 2))
        .expect("moment quotient is polynomial")
}

/// `L_h(x^k)`: zero for odd `k`, `(q; q^2)_{k/2}` for even `k`.
pub fn lh_monomial(k: usize) -> LaurentPoly {
    if k % 2 != 0 {
        return LaurentPoly::zero();
    }
    let q = q_sym();
    let q2 = &q * &q;
    poch(&q, &q2, k / 2)
}

/// `L^(i)(x^n)` computed through the d-orthogonal bootstrap: expanding
/// `h_k(x;q) = sum_m qbinom(k,m) y^{k-m} h_m(x,y;q)` and using the closed
/// `L_h` mixed moments with the orthogonality norms.
pub fn op_mop_bootstrap(n: usize, i: usize) -> LaurentPoly {
    assert!(i <= 1);
    let q = q_sym();
    let q2 = &q * &q;
    let mut acc = LaurentPoly::zero();
    for k in i..=n {
        if (n - k) % 2 != 0 {
            continue;
        }
        // L_h(x^n h_k)/L_h(h_k^2) = (q)_n / ((q)_k (q^2;q^2)_{(n-k)/2})
        let den = qfac(k, &q) * poch(&q2, &q2, (n - k) / 2);
        let ratio = qfac(n, &q).exact_div(&den).expect("moment quotient is polynomial");
        acc = acc + ratio * qbinom(k as i64, i as i64, &q) * y().pow((k - i) as u32);
    }
    acc
}

/// Check the y-recurrence
/// `y q^n h_n = -h_{n+1} + sum_k (q^n; q^{-1})_k (-1)^k h_{n-k} * (x | 1)`.
pub fn y_recurrence_check(n: usize) -> bool {
    let q = q_sym();
    let polys = h_recurrence_polys(n + 1);
    let lhs = y() * base_pow(&q, n as i64) * &polys[n];
    let mut rhs = -polys[n + 1].clone();
    // (q^n; q^{-1})_k = prod_{j<k} (1 - q^{n-j})
    let mut falling = LaurentPoly::one();
    for k in 0..=n {
        let sign = if k % 2 == 0 { rational::rat_one() } else { -rational::rat_one() };
        let weight = if k % 2 == 0 { x() } else { LaurentPoly::one() };
        rhs = rhs + falling.scale(&sign) * weight * &polys[n - k];
        falling = falling * (LaurentPoly::one() - base_pow(&q, n as i64 - k as i64));
    }
    lhs == rhs
}

/// `hhat_0 .. hhat_up_to`: discrete big q-Hermite II polynomials, extracted
/// from the series `(-xt)_inf / ((-t^2; q^2)_inf (-yt)_inf)` by matching
/// `q^{binom(n,2)} t^n/(q)_n` coefficients.
pub fn hermite2_polys(up_to: usize) -> Vec<LaurentPoly> {
    let q = q_sym();
    let spec = InfProductSpec::new()
        .num(-x())
        .den(-y())
        .den_t2_q2(-LaurentPoly::one());
    let series = product_series(&spec, up_to);
    (0..=up_to)
        .map(|n| {
            let scale =
                RatFunc::new(qfac(n, &q), q_binom2_pow(n as i64, &q)).expect("q-power nonzero");
            series
                .coeff(n)
                .mul(&scale)
                .to_poly()
                .expect("series coefficient clears to a polynomial")
        })
        .collect()
}

pub fn hermite2(n: usize) -> LaurentPoly {
    hermite2_polys(n).pop().unwrap()
}

/// Verify `hhat_n(x, y; q) = i^{-n} h_n(ix, iy; q^{-1})`, computed as
/// `(-1)^n I^n h_n(Ix, Iy; q^{-1})` and reduced in the Gaussian ring.
pub fn relation_check(n: usize) -> ExactResult<bool> {
    let mut bind = BTreeMap::new();
    let i_unit = LaurentPoly::var(VarId::I);
    bind.insert(VarId::X, RatFunc::from_poly(&i_unit * x()));
    bind.insert(VarId::Y, RatFunc::from_poly(&i_unit * y()));
    bind.insert(VarId::Q, RatFunc::from_poly(LaurentPoly::var_pow(VarId::Q, -1)));
    let image = h_explicit(n).substitute(&bind)?.to_poly()?;
    let sign = if n % 2 == 0 { rational::rat_one() } else { -rational::rat_one() };
    let rotated = (i_unit.pow(n as u32) * image).scale(&sign);
    Ok(rotated.gaussian_reduce()? == hermite2(n))
}

/// The staggered orthogonality of the pair `L^(0), L^(1)`:
/// `L^(i)(h_m h_n) = 0` for `m > 2n + i` and nonzero at `m = 2n + i`.
pub fn multiple_orthogonality_check(nmax: usize) -> bool {
    let top = 2 * nmax + 1;
    let polys = h_recurrence_polys(top);
    for i in 0..=1usize {
        for n in 0..=nmax {
            let bound = 2 * n + i;
            for m in 0..=top {
                let coeffs = h_basis_expand(&(&polys[m] * &polys[n]));
                let v = coeffs.get(i).cloned().unwrap_or_else(LaurentPoly::zero);
                if m > bound && !v.is_zero() {
                    return false;
                }
                if m == bound && v.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}
