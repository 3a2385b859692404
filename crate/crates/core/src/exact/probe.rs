//! Randomized polynomial identity testing by exact rational evaluation.
//!
//! Each free variable is sampled from the documented finite set of positive
//! rationals `p/r` with `1 <= p, r <= 97`, drawn from a seeded ChaCha8
//! stream, so every probe run is reproducible from its seed. Points where a
//! denominator vanishes are resampled; the budget for that is finite and its
//! exhaustion is a distinct `Inconclusive` verdict, never `Equal`.

use num_bigint::BigInt;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::error::ExactError;
use super::ratfunc::RatFunc;
use super::rational::Rational;
use super::vars::{VarId, NVARS};

#[derive(Clone, Copy, Debug)]
pub struct ProbeConfig {
    pub trials: u32,
    pub seed: u64,
    pub resample_budget: u32,
}

impl Default for ProbeConfig {
    fn default() -> Self {
        ProbeConfig { trials: 20, seed: 20240101, resample_budget: 200 }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ProbeVerdict {
    /// Every trial agreed exactly.
    Equal,
    /// A trial found a witness of inequality.
    Unequal { trial: u32 },
    /// The resampling budget ran out before enough well-defined points were found.
    Inconclusive,
}

/// Deterministic source of sample points.
pub struct RationalSampler {
    rng: ChaCha8Rng,
}

impl RationalSampler {
    pub fn new(seed: u64) -> Self {
        RationalSampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// `p/r` with `1 <= p, r <= 97`.
    pub fn next_rational(&mut self) -> Rational {
        let p = (self.rng.next_u64() % 97) + 1;
        let r = (self.rng.next_u64() % 97) + 1;
        Rational::new(BigInt::from(p), BigInt::from(r))
    }
}

/// Decide `lhs == rhs` by seeded evaluation at random rational points.
///
/// Returns `Equal` only if all trials agree exactly.
pub fn random_rational_probe(lhs: &RatFunc, rhs: &RatFunc, cfg: &ProbeConfig) -> ProbeVerdict {
    let mut used = [false; NVARS];
    for p in [lhs.num(), lhs.den(), rhs.num(), rhs.den()] {
        for (i, u) in p.vars_used().iter().enumerate() {
            if *u {
                used[i] = true;
            }
        }
    }
    let mut sampler = RationalSampler::new(cfg.seed);
    let mut resamples = 0u32;
    let mut trial = 0u32;
    while trial < cfg.trials {
        let mut values: [Option<Rational>; NVARS] = Default::default();
        for v in VarId::ALL {
            if used[v.index()] {
                values[v.index()] = Some(sampler.next_rational());
            }
        }
        let l = lhs.eval_rationals(&values);
        let r = rhs.eval_rationals(&values);
        match (l, r) {
            (Ok(l), Ok(r)) => {
                if l != r {
                    return ProbeVerdict::Unequal { trial };
                }
                trial += 1;
            }
            (Err(ExactError::ZeroDenominator), _)
            | (_, Err(ExactError::ZeroDenominator))
            | (Err(ExactError::NonInvertibleBinding), _)
            | (_, Err(ExactError::NonInvertibleBinding)) => {
                resamples += 1;
                if resamples > cfg.resample_budget {
                    return ProbeVerdict::Inconclusive;
                }
            }
            _ => return ProbeVerdict::Inconclusive,
        }
    }
    ProbeVerdict::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::LaurentPoly;

    fn q() -> LaurentPoly {
        LaurentPoly::var(VarId::Q)
    }

    #[test]
    fn syntactic_equality_passes() {
        let p = RatFunc::from_poly(q().pow(3) - LaurentPoly::var(VarId::A));
        assert_eq!(random_rational_probe(&p, &p, &ProbeConfig::default()), ProbeVerdict::Equal);
    }

    #[test]
    fn factorization_identity() {
        let lhs = RatFunc::from_poly(LaurentPoly::one() - q().pow(2));
        let rhs = RatFunc::from_poly(
            (LaurentPoly::one() - q()) * (LaurentPoly::one() + q()),
        );
        let cfg = ProbeConfig { trials: 5, ..ProbeConfig::default() };
        assert_eq!(random_rational_probe(&lhs, &rhs, &cfg), ProbeVerdict::Equal);
    }

    #[test]
    fn inequality_is_witnessed_immediately() {
        let lhs = RatFunc::from_poly(LaurentPoly::one() - q());
        let rhs = RatFunc::from_poly(LaurentPoly::one() + q());
        let cfg = ProbeConfig { seed: 1, ..ProbeConfig::default() };
        // Sampled q is always positive, so the sides differ at the first trial.
        assert_eq!(random_rational_probe(&lhs, &rhs, &cfg), ProbeVerdict::Unequal { trial: 0 });
    }

    #[test]
    fn determinism_across_runs() {
        let mut s1 = RationalSampler::new(42);
        let mut s2 = RationalSampler::new(42);
        for _ in 0..32 {
            assert_eq!(s1.next_rational(), s2.next_rational());
        }
    }

    #[test]
    fn true_identities_never_unequal() {
        // Fixture list of identities that hold; the probe must not refute them.
        let one = LaurentPoly::one();
        let a = LaurentPoly::var(VarId::A);
        let fixtures = [
            (
                RatFunc::from_poly(&one - &q().pow(4)),
                RatFunc::from_poly((&one - &q()) * (&one + &q()) * (&one + &q().pow(2))),
            ),
            (
                RatFunc::new((&one - &a.pow(2)).pow(2), (&one - &a) * (&one - &a)).unwrap(),
                RatFunc::from_poly((&one + &a) * (&one + &a)),
            ),
        ];
        for (lhs, rhs) in fixtures {
            assert_eq!(
                random_rational_probe(&lhs, &rhs, &ProbeConfig::default()),
                ProbeVerdict::Equal
            );
        }
    }
}
