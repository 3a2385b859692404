//! Named generating-function fixtures, each comparing two independent
//! constructions coefficient-by-coefficient to a truncation order.


use crate::exact::rational::{self, Rational};
use crate::exact::{ExactError, ExactResult, LaurentPoly, RatFunc, TruncSeries, VarId};
use crate::ortho::{Env, FamilySpec, RecurrenceFamily};
use crate::qcore::{base_pow, poch, q_binom2_pow, q_sym};

use super::convolve::{base_series_p1, gf_family_series};
use super::products::{product_series, InfProductSpec};

/// The fixture names accepted by [`verify_gf_identity`].
pub const GF_FIXTURES: [&str; 7] = [
    "gf_hermite",
    "gf_big_hermite",
    "gf_asc",
    "dual_q_hahn",
    "dual_q_hahn_eq3",
    "asc1_gf",
    "asc2_gf",
];

fn z() -> LaurentPoly {
    LaurentPoly::var(VarId::Z)
}
fn z_inv() -> LaurentPoly {
    LaurentPoly::var_pow(VarId::Z, -1)
}

/// Render both sides of the named identity to order `n` and compare exactly.
pub fn verify_gf_identity(name: &str, order: usize) -> ExactResult<bool> {
    let env = Env::symbolic();
    match name {
        "gf_hermite" => {
            let lhs = gf_family_series(&FamilySpec::q_hermite(env), order);
            let rhs = product_series(&InfProductSpec::new().den(z()).den(z_inv()), order);
            Ok(lhs == rhs)
        }
        "gf_big_hermite" => {
            let lhs = gf_family_series(&FamilySpec::big_q_hermite(env.clone()), order);
            let rhs =
                product_series(&InfProductSpec::new().num(env.a).den(z()).den(z_inv()), order);
            Ok(lhs == rhs)
        }
        "gf_asc" => {
            let lhs = gf_family_series(&FamilySpec::al_salam_chihara(env.clone()), order);
            let rhs = product_series(
                &InfProductSpec::new().num(env.a).num(env.b).den(z()).den(z_inv()),
                order,
            );
            Ok(lhs == rhs)
        }
        "dual_q_hahn" => Ok(dual_q_hahn_sides(&env, order)),
        "dual_q_hahn_eq3" => dual_q_hahn_eq3(&env, order),
        "asc1_gf" => Ok(al_salam_carlitz_i(order)),
        "asc2_gf" => Ok(al_salam_carlitz_ii(order)),
        _ => Err(ExactError::Domain("unknown generating-function fixture")),
    }
}

/// `(abct)_inf sum_k p_k(x;a,b,c,0|q) t^k / ((q, abct)_k)` against
/// `(at, bt, ct)_inf / ((tz)_inf (t/z)_inf)`.
fn dual_q_hahn_sides(env: &Env, order: usize) -> bool {
    let q = q_sym();
    let abc = &env.a * &env.b * &env.c;
    let dqh = gf_family_series(&FamilySpec::dual_q_hahn(env.clone()), order);

    let mut lhs = TruncSeries::zero(order);
    for k in 0..=order {
        // 1/(abct; q)_k as a truncated series in t
        let mut poch_t = TruncSeries::one(order);
        let mut c_shift = abc.clone();
        for _ in 0..k {
            let linear = TruncSeries::one(order)
                .sub(&TruncSeries::constant(order, RatFunc::from_poly(c_shift.clone())).shift(1));
            poch_t = poch_t.mul(&linear);
            c_shift = c_shift * &q;
        }
        let inv = TruncSeries::one(order).div(&poch_t).expect("unit constant term");
        let weight = dqh.coeff(k).clone();
        lhs = lhs.add(&inv.scale(&weight).shift(k));
    }
    let prefactor = product_series(&InfProductSpec::new().num(abc), order);
    let lhs = prefactor.mul(&lhs);

    let rhs = product_series(
        &InfProductSpec::new()
            .num(env.a.clone())
            .num(env.b.clone())
            .num(env.c.clone())
            .den(z())
            .den(z_inv()),
        order,
    );
    lhs == rhs
}

/// The finite intermediate identity behind the new generating function:
/// for a fixed `N`,
/// `sum_n p_n(x;b,c,0,0) (-a)^{N-n} q^{binom(N-n,2)} / ((q)_n (q)_{N-n})`
/// equals the same sum over `p_n(x;a,b,c,0)` with `(-abcq^n)^{N-n}`.
fn dual_q_hahn_eq3(env: &Env, upper: usize) -> ExactResult<bool> {
    let q = q_sym();
    let asc_bc = FamilySpec::al_salam_chihara(
        Env::symbolic().with_a(env.b.clone()).with_b(env.c.clone()),
    );
    let dqh = FamilySpec::dual_q_hahn(env.clone());
    let asc_polys = asc_bc.polys(upper);
    let dqh_polys = dqh.polys(upper);
    let abc = &env.a * &env.b * &env.c;

    let weight = |n: usize, arg: &LaurentPoly| -> ExactResult<RatFunc> {
        // (-arg)^{N-n} q^{binom(N-n,2)} / ((q)_n (q)_{N-n})
        let m = upper - n;
        let sign = if m % 2 == 0 { rational::rat_one() } else { -rational::rat_one() };
        let num = arg.pow(m as u32).scale(&sign) * q_binom2_pow(m as i64, &q);
        RatFunc::new(num, poch(&q, &q, n) * poch(&q, &q, m))
    };

    let mut lhs = RatFunc::zero();
    let mut rhs = RatFunc::zero();
    for n in 0..=upper {
        lhs = lhs.add(&weight(n, &env.a)?.mul(&RatFunc::from_poly(asc_polys[n].clone())));
        let shifted = &abc * base_pow(&q, n as i64);
        rhs = rhs.add(&weight(n, &shifted)?.mul(&RatFunc::from_poly(dqh_polys[n].clone())));
    }
    Ok(lhs == rhs)
}

fn rat_int(n: i64) -> Rational {
    rational::rat_int(n)
}

/// Al-Salam-Carlitz I: series of the 3-term recurrence against
/// `(t)_inf (at)_inf / (xt)_inf`.
fn al_salam_carlitz_i(order: usize) -> bool {
    let q = q_sym();
    let s = LaurentPoly::var(VarId::S);
    let a = LaurentPoly::var(VarId::A);
    // U_{n+1} = (x - (1+a) q^n) U_n + a q^{n-1} (1 - q^n) U_{n-1}
    let fam = RecurrenceFamily::new(
        rat_int(1),
        (LaurentPoly::one() + &a) * &s,
        -(&a * base_pow(&q, -1) * &s * (LaurentPoly::one() - &s)),
        q.clone(),
    );
    let lhs = base_series_p1(&FamilySpec::custom(fam), order);
    let rhs = product_series(
        &InfProductSpec::new()
            .num(LaurentPoly::one())
            .num(a)
            .den(LaurentPoly::var(VarId::X)),
        order,
    );
    lhs == rhs
}

/// Al-Salam-Carlitz II: `sum_n (-1)^n q^{binom(n,2)} V_n t^n/(q)_n` against
/// `(xt)_inf / ((t)_inf (at)_inf)`.
fn al_salam_carlitz_ii(order: usize) -> bool {
    let q = q_sym();
    let a = LaurentPoly::var(VarId::A);
    // V_{n+1} = (x - (1+a) q^{-n}) V_n - a q^{-2n+1} (1 - q^n) V_{n-1}
    let fam = RecurrenceFamily::new(
        rat_int(1),
        (LaurentPoly::one() + &a) * LaurentPoly::var_pow(VarId::S, -1),
        &a * &q * LaurentPoly::var_pow(VarId::S, -2) * (LaurentPoly::one() - LaurentPoly::var(VarId::S)),
        q.clone(),
    );
    let polys = FamilySpec::custom(fam).polys(order);
    let lhs = TruncSeries::from_coeffs(
        polys
            .into_iter()
            .enumerate()
            .map(|(n, p)| {
                let sign = if n % 2 == 0 { rat_int(1) } else { rat_int(-1) };
                RatFunc::new(p.scale(&sign) * q_binom2_pow(n as i64, &q), poch(&q, &q, n))
                    .expect("(q)_n nonzero")
            })
            .collect(),
    );
    let rhs = product_series(
        &InfProductSpec::new()
            .num(LaurentPoly::var(VarId::X))
            .den(LaurentPoly::one())
            .den(a),
        order,
    );
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kls_generating_functions_hold() {
        for name in ["gf_hermite", "gf_big_hermite", "gf_asc"] {
            assert_eq!(verify_gf_identity(name, 6), Ok(true), "{name}");
        }
    }

    #[test]
    fn dual_q_hahn_identity_holds_to_order_five() {
        assert_eq!(verify_gf_identity("dual_q_hahn", 5), Ok(true));
    }

    #[test]
    fn eq3_holds_for_small_orders() {
        for upper in 0..=5usize {
            assert_eq!(verify_gf_identity("dual_q_hahn_eq3", upper), Ok(true), "N={upper}");
        }
    }

    #[test]
    fn al_salam_carlitz_fixtures_hold() {
        assert_eq!(verify_gf_identity("asc1_gf", 6), Ok(true));
        assert_eq!(verify_gf_identity("asc2_gf", 6), Ok(true));
    }

    #[test]
    fn unknown_fixture_is_a_domain_error() {
        assert!(verify_gf_identity("nope", 3).is_err());
    }
}
