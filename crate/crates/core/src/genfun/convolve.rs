//! Family generating-function series and the two convolutions: multiplying a
//! base series by `(yt)_inf` or by `1/(-yt)_inf`.

use alloc::vec::Vec;

use crate::exact::rational::{self, Rational};
use crate::exact::{LaurentPoly, RatFunc, TruncSeries, VarId};
use crate::ortho::{Env, FamilySpec};
use crate::qcore::{poch, q_binom2_pow, qbinom, q_sym};

use super::products::{product_series, InfProductSpec};

/// `sum_n p_n t^n/(q)_n` truncated at the order, coefficients in `x`.
pub fn base_series_p1(spec: &FamilySpec, order: usize) -> TruncSeries {
    let q = &spec.env().q;
    let polys = spec.polys(order);
    TruncSeries::from_coeffs(
        polys
            .into_iter()
            .enumerate()
            .map(|(n, p)| RatFunc::new(p, poch(q, q, n)).expect("(q)_n nonzero"))
            .collect(),
    )
}

/// `sum_n p_n q^{binom(n,2)} t^n/(q)_n` truncated at the order.
pub fn base_series_p2(spec: &FamilySpec, order: usize) -> TruncSeries {
    let q = &spec.env().q;
    let polys = spec.polys(order);
    TruncSeries::from_coeffs(
        polys
            .into_iter()
            .enumerate()
            .map(|(n, p)| {
                RatFunc::new(p * q_binom2_pow(n as i64, q), poch(q, q, n)).expect("(q)_n nonzero")
            })
            .collect(),
    )
}

/// The family series with `x` replaced by `(z + 1/z)/2`, for comparison with
/// infinite-product expansions.
pub fn gf_family_series(spec: &FamilySpec, order: usize) -> TruncSeries {
    let base = base_series_p1(spec, order);
    let half_zs = (LaurentPoly::var(VarId::Z) + LaurentPoly::var_pow(VarId::Z, -1))
        .scale(&rational::rat(1, 2));
    let mut bind = alloc::collections::BTreeMap::new();
    bind.insert(VarId::X, RatFunc::from_poly(half_zs));
    TruncSeries::from_coeffs(
        base.coeffs()
            .iter()
            .map(|c| c.substitute(&bind).expect("substitution of x is total"))
            .collect(),
    )
}

/// `P1_n(x, y)` for `n <= up_to`, by the q-binomial convolution
/// `P1_n = sum_k qbinom(n,k) (-1)^k y^k q^{binom(k,2)} p_{n-k}`.
pub fn convolve_p1(spec: &FamilySpec, up_to: usize) -> Vec<LaurentPoly> {
    let q = &spec.env().q;
    let y = LaurentPoly::var(VarId::Y);
    let polys = spec.polys(up_to);
    (0..=up_to)
        .map(|n| {
            let mut acc = LaurentPoly::zero();
            for k in 0..=n {
                let sign = if k % 2 == 0 { rational::rat_one() } else { -rational::rat_one() };
                acc = acc
                    + qbinom(n as i64, k as i64, q).scale(&sign)
                        * y.pow(k as u32)
                        * q_binom2_pow(k as i64, q)
                        * &polys[n - k];
            }
            acc
        })
        .collect()
}

/// `P2_n(x, y)` for `n <= up_to`, extracted by matching `q^{binom(n,2)}
/// t^n/(q)_n` coefficients after multiplying the base series by
/// `1/(-yt)_inf`.
pub fn convolve_p2(spec: &FamilySpec, up_to: usize) -> Vec<LaurentPoly> {
    let q = &spec.env().q;
    let base = base_series_p2(spec, up_to);
    let inv = product_series(
        &InfProductSpec::new().den(-LaurentPoly::var(VarId::Y)),
        up_to,
    );
    let series = base.mul(&inv);
    extract_p2_coeffs(&series, q)
}

fn extract_p2_coeffs(series: &TruncSeries, q: &LaurentPoly) -> Vec<LaurentPoly> {
    (0..=series.order())
        .map(|n| {
            let scale = RatFunc::new(poch(q, q, n), q_binom2_pow(n as i64, q))
                .expect("q-power nonzero");
            series
                .coeff(n)
                .mul(&scale)
                .to_poly()
                .expect("series coefficient clears to a polynomial")
        })
        .collect()
}

/// The polynomials with generating function `(t^2; q)_inf` times the
/// continuous q-Hermite series; they satisfy a 5-term recurrence.
pub fn gis_polys(up_to: usize) -> Vec<LaurentPoly> {
    let q = q_sym();
    let spec = FamilySpec::q_hermite(Env::symbolic());
    let base = base_series_p1(&spec, up_to);
    let factor = product_series(&InfProductSpec::new().num_t2(LaurentPoly::one()), up_to);
    let series = base.mul(&factor);
    (0..=up_to)
        .map(|n| {
            series
                .coeff(n)
                .mul(&RatFunc::from_poly(poch(&q, &q, n)))
                .to_poly()
                .expect("series coefficient clears to a polynomial")
        })
        .collect()
}

/// Leading `x`-scale shared by a convolved sequence (same `A` as the base).
pub fn convolved_lead(spec: &FamilySpec) -> Rational {
    match spec {
        FamilySpec::Recurrence { fam, .. } => fam.lead.clone(),
        FamilySpec::AskeyWilson { .. } => rational::rat_int(2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn x() -> LaurentPoly {
        LaurentPoly::var(VarId::X)
    }
    fn y() -> LaurentPoly {
        LaurentPoly::var(VarId::Y)
    }
    fn q() -> LaurentPoly {
        q_sym()
    }

    #[test]
    fn p1_small_values() {
        let spec = FamilySpec::q_hermite(Env::symbolic());
        let p1 = convolve_p1(&spec, 1);
        assert!(p1[0].is_one());
        // H_1 - y H_0 = 2x - y
        assert_eq!(p1[1], x().scale(&rat(2, 1)) - y());
    }

    #[test]
    fn p1_discrete_gives_big_hermite_i() {
        let spec = FamilySpec::discrete_q_hermite_i(Env::symbolic());
        let h = convolve_p1(&spec, 2);
        // h_2(x,y;q) = x^2 - (1+q) x y + q y^2 - (1-q)
        let expected = x().pow(2) - (LaurentPoly::one() + q()) * x() * y() + q() * y().pow(2)
            - (LaurentPoly::one() - q());
        assert_eq!(h[2], expected);
    }

    #[test]
    fn p2_small_values() {
        let spec = FamilySpec::discrete_q_hermite_ii(Env::symbolic());
        let p2 = convolve_p2(&spec, 1);
        assert!(p2[0].is_one());
        assert_eq!(p2[1], x() - y());
    }

    #[test]
    fn p2_at_y_zero_is_base() {
        let spec = FamilySpec::discrete_q_hermite_ii(Env::symbolic());
        let p2 = convolve_p2(&spec, 5);
        let base = spec.polys(5);
        for n in 0..=5 {
            let specialized = p2[n].coeff_of(VarId::Y, 0);
            assert_eq!(specialized, base[n], "n={n}");
        }
    }

    #[test]
    fn gf_hermite_coefficients() {
        let spec = FamilySpec::q_hermite(Env::symbolic());
        let s = gf_family_series(&spec, 2);
        assert!(s.coeff(0).is_one());
        // H_1/(q)_1 with x -> (z+1/z)/2: (z + 1/z)/(1-q)
        let expected = RatFunc::new(
            LaurentPoly::var(VarId::Z) + LaurentPoly::var_pow(VarId::Z, -1),
            LaurentPoly::one() - q(),
        )
        .unwrap();
        assert_eq!(s.coeff(1), &expected);
    }

    #[test]
    fn gis_first_values() {
        let g = gis_polys(2);
        assert!(g[0].is_one());
        assert_eq!(g[1], x().scale(&rat(2, 1)));
        // coeff t^2: H_2/(q)_2 - 1/(1-q), so GIS_2 = H_2 - (1-q^2)
        let expected = x().pow(2).scale(&rat(4, 1)) - LaurentPoly::int(2) + q() + q().pow(2);
        assert_eq!(g[2], expected);
    }
}
