//! Connection coefficients along the parameter-adding chain
//! `(0,0,0,0) -> (a,0,0,0) -> (a,b,0,0) -> (a,b,c,0) -> (a,b,c,d)`,
//! the general single-parameter formula, and the bootstrap that computes
//! mixed moments of one family from the moments of its predecessor.

use alloc::vec::Vec;

use crate::exact::{ExactError, ExactResult, LaurentPoly, RatFunc};
use crate::qcore::{base_pow, poch, qbinom};

use super::family::{mixed_moment_oracle, norm_closed, norm_step, Env, FamilySpec};

/// The four adjacent pairs of the chain, `R -> S`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AdjacentPair {
    /// q-Hermite expanded in big q-Hermite (adds `a`).
    HermiteBig,
    /// Big q-Hermite expanded in Al-Salam-Chihara (adds `b`).
    BigAsc,
    /// Al-Salam-Chihara expanded in dual q-Hahn (adds `c`).
    AscDualQHahn,
    /// Dual q-Hahn in parameters `(b, c, d)` expanded in Askey-Wilson (adds `a`).
    DualQHahnAw,
}

impl AdjacentPair {
    pub const ALL: [AdjacentPair; 4] = [
        AdjacentPair::HermiteBig,
        AdjacentPair::BigAsc,
        AdjacentPair::AscDualQHahn,
        AdjacentPair::DualQHahnAw,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AdjacentPair::HermiteBig => "hermite->big",
            AdjacentPair::BigAsc => "big->asc",
            AdjacentPair::AscDualQHahn => "asc->dualqhahn",
            AdjacentPair::DualQHahnAw => "dualqhahn->aw",
        }
    }

    /// The `(R, S)` family specs for this pair under `env`. For the last
    /// step, `R` is the dual q-Hahn family in the parameters `(b, c, d)`.
    pub fn specs(self, env: &Env) -> (FamilySpec, FamilySpec) {
        match self {
            AdjacentPair::HermiteBig => (
                FamilySpec::q_hermite(env.clone()),
                FamilySpec::big_q_hermite(env.clone()),
            ),
            AdjacentPair::BigAsc => (
                FamilySpec::big_q_hermite(env.clone()),
                FamilySpec::al_salam_chihara(env.clone()),
            ),
            AdjacentPair::AscDualQHahn => (
                FamilySpec::al_salam_chihara(env.clone()),
                FamilySpec::dual_q_hahn(env.clone()),
            ),
            AdjacentPair::DualQHahnAw => {
                let renamed = Env {
                    q: env.q.clone(),
                    a: env.b.clone(),
                    b: env.c.clone(),
                    c: env.d.clone(),
                    d: LaurentPoly::zero(),
                };
                (
                    FamilySpec::dual_q_hahn(renamed),
                    FamilySpec::askey_wilson(env.clone()),
                )
            }
        }
    }
}

/// The coefficients `c_{n,k}` (ordered `k = 0..=n`) with
/// `R_n = sum_k c_{n,k} S_k` for the given adjacent pair.
pub fn connection_coeffs(pair: AdjacentPair, env: &Env, n: usize) -> Vec<RatFunc> {
    let q = &env.q;
    let ni = n as i64;
    (0..=n)
        .map(|k| {
            let ki = k as i64;
            let bin = qbinom(ni, ki, q);
            match pair {
                AdjacentPair::HermiteBig => {
                    RatFunc::from_poly(bin * env.a.pow((n - k) as u32))
                }
                AdjacentPair::BigAsc => RatFunc::from_poly(bin * env.b.pow((n - k) as u32)),
                AdjacentPair::AscDualQHahn => {
                    // qbinom(n,k) (ab q^k)_{n-k} c^{n-k}
                    let ab_shift = &env.a * &env.b * base_pow(q, ki);
                    RatFunc::from_poly(bin * poch(&ab_shift, q, n - k) * env.c.pow((n - k) as u32))
                }
                AdjacentPair::DualQHahnAw => {
                    // (q,bc,bd,cd)_n / (q,bc,bd,cd)_k * a^{n-k}
                    //   / ((abcd q^{k-1})_k (q, abcd q^{2k})_{n-k})
                    let bc = &env.b * &env.c;
                    let bd = &env.b * &env.d;
                    let cd = &env.c * &env.d;
                    let shift = |u: &LaurentPoly| u * base_pow(q, ki);
                    let num = poch(&shift(q), q, n - k)
                        * poch(&shift(&bc), q, n - k)
                        * poch(&shift(&bd), q, n - k)
                        * poch(&shift(&cd), q, n - k)
                        * env.a.pow((n - k) as u32);
                    let abcd = env.abcd();
                    let den = poch(&(&abcd * base_pow(q, ki - 1)), q, k)
                        * poch(q, q, n - k)
                        * poch(&(&abcd * base_pow(q, 2 * ki)), q, n - k);
                    RatFunc::new(num, den).expect("connection denominator nonzero")
                }
            }
        })
        .collect()
}

/// Connection coefficients of the general single-parameter move: expand
/// `p_n(x; A, b, c, d)` in `p_k(x; a, b, c, d)`, where `A` is the value
/// `new_a`. The `a^{n-k} (A/a)_{n-k}` factor is built in the cleared form
/// `prod_j (a - A q^j)`.
pub fn connection_coeffs_general_aw(env: &Env, new_a: &LaurentPoly, n: usize) -> Vec<RatFunc> {
    let q = &env.q;
    let bc = &env.b * &env.c;
    let bd = &env.b * &env.d;
    let cd = &env.c * &env.d;
    let abcd = env.abcd();
    let new_bcd = new_a * &env.b * &env.c * &env.d;
    let ni = n as i64;
    (0..=n)
        .map(|k| {
            let ki = k as i64;
            let shift = |u: &LaurentPoly| u * base_pow(q, ki);
            let mut cleared = LaurentPoly::one();
            let mut qp = LaurentPoly::one();
            for _ in 0..(n - k) {
                cleared = cleared * (&env.a - new_a * &qp);
                qp = qp * q;
            }
            let num = poch(&shift(q), q, n - k)
                * poch(&shift(&bc), q, n - k)
                * poch(&shift(&bd), q, n - k)
                * poch(&shift(&cd), q, n - k)
                * cleared
                * poch(&(&new_bcd * base_pow(q, ni - 1)), q, k);
            let den = poch(&(&abcd * base_pow(q, ki - 1)), q, k)
                * poch(q, q, n - k)
                * poch(&(&abcd * base_pow(q, 2 * ki)), q, n - k);
            RatFunc::new(num, den).expect("connection denominator nonzero")
        })
        .collect()
}

/// Mixed moment of `S` computed from `R`-moments, connection coefficients,
/// and the closed norms:
/// `L_S(x^n S_m) = sum_k L_R(x^n R_k)/L_R(R_k^2) * c_{k,m} * L_S(S_m^2)`.
///
/// The `R`-norms are nested, so the sum is accumulated over the single
/// running denominator `norm_R(k)` (see [`norm_step`]); this keeps the
/// symbolic pairs in plain polynomial arithmetic.
pub fn bootstrap_mixed_moment(
    pair: AdjacentPair,
    env: &Env,
    n: usize,
    m: usize,
) -> ExactResult<RatFunc> {
    let (r_spec, s_spec) = pair.specs(env);
    let s_norm = norm_closed(&s_spec, m).ok_or(ExactError::Domain("family without closed norm"))?;
    let mut acc = RatFunc::zero();
    let mut running_norm = LaurentPoly::one();
    for k in 0..=n {
        let step = norm_step(&r_spec, k).ok_or(ExactError::Domain("family without closed norm"))?;
        acc = acc.mul(&RatFunc::from_poly(step.clone()));
        running_norm = running_norm * step;
        if k < m {
            continue;
        }
        let r_moment = mixed_moment_oracle(&r_spec, n, k);
        if r_moment.is_zero() {
            continue;
        }
        let c_km = connection_coeffs(pair, env, k)[m].clone();
        acc = acc.add(&r_moment.mul(&c_km));
    }
    let raw = acc.mul(&s_norm).div(&RatFunc::from_poly(running_norm))?;
    // the accumulated numerator is a multiple of the running norm whenever
    // the moment itself is polynomial; clearing it keeps comparisons cheap
    match raw.to_poly() {
        Ok(p) => Ok(RatFunc::from_poly(p)),
        Err(_) => Ok(raw),
    }
}

/// Build Askey-Wilson polynomials by inverting the connection display against
/// dual q-Hahn polynomials in `(b, c, d)`; an independent route to the
/// explicit hypergeometric construction.
pub fn aw_from_cascade(env: &Env, up_to: usize) -> ExactResult<Vec<LaurentPoly>> {
    let q = &env.q;
    let bc = &env.b * &env.c;
    let bd = &env.b * &env.d;
    let cd = &env.c * &env.d;
    let abcd = env.abcd();
    let renamed = Env {
        q: env.q.clone(),
        a: env.b.clone(),
        b: env.c.clone(),
        c: env.d.clone(),
        d: LaurentPoly::zero(),
    };
    let r_polys = FamilySpec::dual_q_hahn(renamed).polys(up_to);
    let weight = |k: usize| -> LaurentPoly {
        // (q, bc, bd, cd)_k
        poch(q, q, k) * poch(&bc, q, k) * poch(&bd, q, k) * poch(&cd, q, k)
    };
    let mut aw: Vec<LaurentPoly> = Vec::with_capacity(up_to + 1);
    for n in 0..=up_to {
        let ni = n as i64;
        let mut acc = RatFunc::new(r_polys[n].clone(), weight(n))?;
        for (k, p_k) in aw.iter().enumerate() {
            let ki = k as i64;
            let num = env.a.pow((n - k) as u32) * p_k;
            let den = weight(k)
                * poch(&(&abcd * base_pow(q, ki - 1)), q, k)
                * poch(q, q, n - k)
                * poch(&(&abcd * base_pow(q, 2 * ki)), q, n - k);
            acc = acc.sub(&RatFunc::new(num, den)?);
        }
        let scale = weight(n) * poch(&(&abcd * base_pow(q, ni - 1)), q, n);
        aw.push(acc.mul(&RatFunc::from_poly(scale)).to_poly()?);
    }
    Ok(aw)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat_int;
    use crate::exact::VarId;
    use crate::ortho::family::sample_env;
    use crate::exact::RationalSampler;

    #[test]
    fn cc0_coefficients_at_n2() {
        // (a^2, (1+q) a, 1)
        let env = Env::symbolic();
        let c = connection_coeffs(AdjacentPair::HermiteBig, &env, 2);
        let a = LaurentPoly::var(VarId::A);
        let q = LaurentPoly::var(VarId::Q);
        assert_eq!(c[0], RatFunc::from_poly(a.pow(2)));
        assert_eq!(c[1], RatFunc::from_poly((LaurentPoly::one() + q) * a));
        assert!(c[2].is_one());
    }

    #[test]
    fn ccab_coefficients_at_n1() {
        // ((1 - ab) c, 1)
        let env = Env::symbolic();
        let c = connection_coeffs(AdjacentPair::AscDualQHahn, &env, 1);
        let ab = LaurentPoly::var(VarId::A) * LaurentPoly::var(VarId::B);
        let expected = (LaurentPoly::one() - ab) * LaurentPoly::var(VarId::C);
        assert_eq!(c[0], RatFunc::from_poly(expected));
        assert!(c[1].is_one());
    }

    #[test]
    fn leading_connection_coefficient_is_lead_ratio() {
        // k = n: the coefficient matches the ratio of leading coefficients,
        // as both sides must agree at the top degree.
        let env = Env::symbolic();
        for pair in [AdjacentPair::HermiteBig, AdjacentPair::BigAsc, AdjacentPair::AscDualQHahn] {
            for n in 0..=4usize {
                let c = connection_coeffs(pair, &env, n);
                assert!(c[n].is_one(), "{} n={n}", pair.name());
            }
        }
    }

    #[test]
    fn symbolic_connection_identities_hold() {
        // R_n = sum_k c_{n,k} S_k for the three fully symbolic pairs.
        let env = Env::symbolic();
        for pair in [AdjacentPair::HermiteBig, AdjacentPair::BigAsc, AdjacentPair::AscDualQHahn] {
            let (r_spec, s_spec) = pair.specs(&env);
            for n in 0..=4usize {
                let c = connection_coeffs(pair, &env, n);
                let s_polys = s_spec.polys(n);
                let mut rhs = RatFunc::zero();
                for k in 0..=n {
                    rhs = rhs.add(&c[k].mul(&RatFunc::from_poly(s_polys[k].clone())));
                }
                assert_eq!(RatFunc::from_poly(r_spec.poly(n)), rhs, "{} n={n}", pair.name());
            }
        }
    }

    #[test]
    fn aw_connection_identity_at_sample_point() {
        let mut sampler = RationalSampler::new(7);
        let env = sample_env(&mut sampler, 8);
        let pair = AdjacentPair::DualQHahnAw;
        let (r_spec, s_spec) = pair.specs(&env);
        for n in 0..=4usize {
            let c = connection_coeffs(pair, &env, n);
            let s_polys = s_spec.polys(n);
            let mut rhs = RatFunc::zero();
            for k in 0..=n {
                rhs = rhs.add(&c[k].mul(&RatFunc::from_poly(s_polys[k].clone())));
            }
            assert_eq!(RatFunc::from_poly(r_spec.poly(n)), rhs, "n={n}");
        }
    }

    #[test]
    fn bootstrap_reproduces_oracle_for_first_pair() {
        let env = Env::symbolic();
        let big = FamilySpec::big_q_hermite(env.clone());
        let v = bootstrap_mixed_moment(AdjacentPair::HermiteBig, &env, 1, 0).unwrap();
        assert_eq!(v, mixed_moment_oracle(&big, 1, 0));
        assert!(bootstrap_mixed_moment(AdjacentPair::BigAsc, &env, 0, 0).unwrap().is_one());
    }

    #[test]
    fn cascade_matches_hypergeometric_at_sample_point() {
        let mut sampler = RationalSampler::new(11);
        let env = sample_env(&mut sampler, 10);
        let direct = FamilySpec::askey_wilson(env.clone()).polys(3);
        let cascaded = aw_from_cascade(&env, 3).unwrap();
        assert_eq!(direct, cascaded);
    }

    #[test]
    fn general_cc_specializes_to_cc0() {
        // With b = c = d = 0 and A = 0 the general formula collapses to
        // qbinom(n,k) a^{n-k}.
        let env = Env::symbolic()
            .with_b(LaurentPoly::zero())
            .with_c(LaurentPoly::zero())
            .with_d(LaurentPoly::zero());
        let c = connection_coeffs_general_aw(&env, &LaurentPoly::zero(), 3);
        let q = LaurentPoly::var(VarId::Q);
        for k in 0..=3usize {
            let expected = qbinom(3, k as i64, &q)
                * LaurentPoly::var(VarId::A).pow((3 - k) as u32);
            assert_eq!(c[k], RatFunc::from_poly(expected), "k={k}");
        }
        let _ = rat_int(0);
    }
}
