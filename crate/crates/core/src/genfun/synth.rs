//! The d-term recurrence synthesizer and the exact order probe.
//!
//! Input: a 3-term recurrence `p_{n+1} = (A x - b_n) p_n - lambda_n p_{n-1}`
//! whose data is given as coefficient lists of `b_k` and `lambda_k/(1-q^k)`
//! in powers of `q^k` (for the `(yt)_inf` convolution) or `q^{-k}` (for the
//! `1/(-yt)_inf` one). Output: the d-term recurrence satisfied by the
//! convolved sequence, with coefficients in `(s, y, q, params)` where `s`
//! stands for `q^n`.
//!
//! The engine eliminates symbolically: it starts from the mixed-argument
//! relation (the analogue of expanding `(yt)_inf` by the q-binomial theorem
//! and applying the base recurrence once) and rewrites every `P(x, y q^m)`
//! to a common argument level with the one-step relation
//! `P_n(x, y) = P_n(x, yq) - y (1 - q^n) P_{n-1}(x, yq)`, then shifts `y`.
//! Terms are tracked as a map `(index shift, argument level) -> coefficient`;
//! no concrete polynomial is touched until [`verify_recurrence`].

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::exact::rational::{self, Rational};
use crate::exact::{ExactError, ExactResult, LaurentPoly, RatFunc, VarId};
use crate::ortho::{eval_at_qn, expand_in_triangular_basis};

fn s() -> LaurentPoly {
    LaurentPoly::var(VarId::S)
}
fn y() -> LaurentPoly {
    LaurentPoly::var(VarId::Y)
}
fn q() -> LaurentPoly {
    LaurentPoly::var(VarId::Q)
}
fn q_pow(e: i64) -> LaurentPoly {
    LaurentPoly::var_pow(VarId::Q, e as i32)
}

/// Recurrence data of the base family. `b_coeffs[j]` is the coefficient of
/// `(q^k)^j` in `b_k` (or of `(q^{-k})^j` for the flipped theorem), and
/// `lam_coeffs[j]` likewise for `lambda_k/(1-q^k)`. Coefficients must be
/// independent of `y`.
#[derive(Clone, Debug)]
pub struct SynthInput {
    pub lead: Rational,
    pub b_coeffs: Vec<LaurentPoly>,
    pub lam_coeffs: Vec<LaurentPoly>,
}

impl SynthInput {
    pub fn new(lead: Rational, b_coeffs: Vec<LaurentPoly>, lam_coeffs: Vec<LaurentPoly>) -> Self {
        let input = SynthInput { lead, b_coeffs, lam_coeffs };
        debug_assert!(
            input
                .b_coeffs
                .iter()
                .chain(input.lam_coeffs.iter())
                .all(|c| !c.contains_var(VarId::Y)),
            "recurrence data must be independent of y"
        );
        input
    }
}

/// A synthesized recurrence
/// `P_{n+1} = (A x - C_0) P_n - C_1 P_{n-1} - ... - C_{d-2} P_{n-d+2}`,
/// coefficients in `(s, y, q, params)` with `s = q^n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SynthRecurrence {
    pub lead: Rational,
    pub coeffs: Vec<LaurentPoly>,
}

impl SynthRecurrence {
    /// Number of terms: `coeffs.len() + 1`.
    pub fn depth(&self) -> usize {
        self.coeffs.len() + 1
    }
}

type Terms = BTreeMap<(usize, i32), LaurentPoly>;

fn add_term(terms: &mut Terms, key: (usize, i32), value: LaurentPoly) {
    if value.is_zero() {
        return;
    }
    let entry = terms.entry(key).or_insert_with(LaurentPoly::zero);
    entry.add_assign(&value);
    if entry.is_zero() {
        terms.remove(&key);
    }
}

fn collect(mut terms: Terms, level: i32, shift_y: bool, lead: Rational) -> SynthRecurrence {
    let max_shift = terms.keys().map(|&(i, _)| i).max().unwrap_or(0);
    let mut coeffs = Vec::with_capacity(max_shift + 1);
    for i in 0..=max_shift {
        let e = terms.remove(&(i, level)).unwrap_or_else(LaurentPoly::zero);
        let e = if shift_y {
            let mut bind = BTreeMap::new();
            bind.insert(VarId::Y, RatFunc::from_poly(y() * q_pow(-1)));
            e.substitute(&bind)
                .expect("y-shift is total")
                .to_poly()
                .expect("y-shift stays polynomial")
        } else {
            e
        };
        coeffs.push(-e);
    }
    while coeffs.last().map_or(false, LaurentPoly::is_zero) {
        coeffs.pop();
    }
    SynthRecurrence { lead, coeffs }
}

/// Synthesize the recurrence for the `(yt)_inf` convolution, where the data
/// are polynomials in `q^k`. The result has depth `max(r+2, s+3)` for input
/// degrees `r` and `s`.
pub fn synth_p1(input: &SynthInput) -> SynthRecurrence {
    let mut terms: Terms = BTreeMap::new();
    // P_{n+1}(x, yq) = A x P_n(x, yq) - y q^{n+1} P_n(x, yq)
    //   - sum_j c_j q^{nj} P_n(x, y q^{1-j})
    //   - (1-q^n) sum_j d_j q^{nj} P_{n-1}(x, y q^{1-j}).
    add_term(&mut terms, (0, 1), -(y() * q() * s()));
    for (j, c) in input.b_coeffs.iter().enumerate() {
        add_term(&mut terms, (0, 1 - j as i32), -(c * s().pow(j as u32)));
    }
    let one_minus_s = LaurentPoly::one() - s();
    for (j, d) in input.lam_coeffs.iter().enumerate() {
        add_term(&mut terms, (1, 1 - j as i32), -(d * s().pow(j as u32) * &one_minus_s));
    }
    // Raise every argument level to yq with
    // P_{n-i}(x, yq^m) = P_{n-i}(x, yq^{m+1}) - y q^m (1 - s q^{-i}) P_{n-i-1}(x, yq^{m+1}).
    while let Some((&(i, m), _)) = terms.iter().find(|(&(_, m), _)| m < 1) {
        let c = terms.remove(&(i, m)).unwrap();
        add_term(&mut terms, (i, m + 1), c.clone());
        let mult = -(y() * q_pow(m as i64) * (LaurentPoly::one() - s() * q_pow(-(i as i64))));
        add_term(&mut terms, (i + 1, m + 1), c * mult);
    }
    // All terms sit at argument yq; replace y by y/q.
    collect(terms, 1, true, input.lead.clone())
}

/// Synthesize the recurrence for the `1/(-yt)_inf` convolution, where the
/// data are polynomials in `q^{-k}`. Requires the constant term of
/// `lambda_k/(1-q^k)` to be zero.
pub fn synth_p2(input: &SynthInput) -> ExactResult<SynthRecurrence> {
    if input.lam_coeffs.first().map_or(false, |d| !d.is_zero()) {
        return Err(ExactError::Domain(
            "constant term of lambda_k/(1-q^k) must vanish for the flipped synthesis",
        ));
    }
    let mut terms: Terms = BTreeMap::new();
    // P_{n+1}(x, y) = A x P_n(x, y) - y q^{-n} P_n(x, y)
    //   - sum_j c_j q^{-nj} P_n(x, y q^j)
    //   - (1-q^n) sum_j d_j q^{-nj} P_{n-1}(x, y q^{j-1}).
    add_term(&mut terms, (0, 0), -(y() * LaurentPoly::var_pow(VarId::S, -1)));
    for (j, c) in input.b_coeffs.iter().enumerate() {
        add_term(
            &mut terms,
            (0, j as i32),
            -(c * LaurentPoly::var_pow(VarId::S, -(j as i32))),
        );
    }
    let one_minus_s = LaurentPoly::one() - s();
    for (j, d) in input.lam_coeffs.iter().enumerate().skip(1) {
        add_term(
            &mut terms,
            (1, j as i32 - 1),
            -(d * LaurentPoly::var_pow(VarId::S, -(j as i32)) * &one_minus_s),
        );
    }
    // Lower every argument level to y with
    // P_{n-i}(x, yq^m) = P_{n-i}(x, yq^{m-1})
    //   + y q^{m-1} q^{1+i} s^{-1} (1 - s q^{-i}) P_{n-i-1}(x, yq^{m-1}).
    while let Some((&(i, m), _)) = terms.iter().find(|(&(_, m), _)| m > 0) {
        let c = terms.remove(&(i, m)).unwrap();
        add_term(&mut terms, (i, m - 1), c.clone());
        let mult = y()
            * q_pow(m as i64 - 1 + 1 + i as i64)
            * LaurentPoly::var_pow(VarId::S, -1)
            * (LaurentPoly::one() - s() * q_pow(-(i as i64)));
        add_term(&mut terms, (i + 1, m - 1), c * mult);
    }
    Ok(collect(terms, 0, false, input.lead.clone()))
}

/// Check a synthesized recurrence against a concrete polynomial sequence:
/// substitutes `s -> q^n` for each `n` and compares exactly, with
/// `polys[i] = 0` understood for negative indices.
pub fn verify_recurrence(
    polys: &[LaurentPoly],
    rec: &SynthRecurrence,
    qval: &LaurentPoly,
) -> bool {
    let x = LaurentPoly::var(VarId::X);
    for n in 0..polys.len() - 1 {
        let mut rhs = (&x * &polys[n]).scale(&rec.lead);
        for (i, c) in rec.coeffs.iter().enumerate() {
            if i > n {
                break;
            }
            let cn = eval_at_qn(c, n as i64, qval);
            rhs = rhs - cn * &polys[n - i];
        }
        if polys[n + 1] != rhs {
            return false;
        }
    }
    true
}

/// Decide by exact linear algebra whether, for every admissible `n` in the
/// window, `P_{n+1} - A x P_n` lies in the span of `P_n, ..., P_{n-d+2}`
/// over the rational-function field in the remaining variables.
pub fn order_probe(polys: &[LaurentPoly], lead: &Rational, depth: usize) -> bool {
    assert!(depth >= 2);
    match minimal_depth(polys, lead) {
        Some(d) => d <= depth,
        None => false,
    }
}

/// The minimal feasible depth over the tested window, by expanding each
/// `P_{n+1} - A x P_n` in the triangular basis `P_n, ..., P_0` and locating
/// the deepest nonzero coefficient. `None` when the window is too short.
pub fn minimal_depth(polys: &[LaurentPoly], lead: &Rational) -> Option<usize> {
    if polys.len() < 2 {
        return None;
    }
    let x = LaurentPoly::var(VarId::X);
    let mut depth = 2usize;
    for n in 1..polys.len() - 1 {
        let target = &polys[n + 1] - &(&x * &polys[n]).scale(lead);
        let lead_fn = |k: usize| {
            let mut c = rational::rat_one();
            for _ in 0..k {
                c *= lead;
            }
            LaurentPoly::constant(c)
        };
        let expansion = expand_in_triangular_basis(&polys[..=n], lead_fn, &target);
        for (k, c) in expansion.coeffs.iter().enumerate() {
            if !c.is_zero() {
                depth = depth.max(n - k + 2);
            }
        }
    }
    Some(depth)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::genfun::convolve::{convolve_p1, convolve_p2};
    use crate::ortho::{Env, FamilySpec};
    use crate::qcore::q_sym;

    fn a() -> LaurentPoly {
        LaurentPoly::var(VarId::A)
    }

    #[test]
    fn q_hermite_input_gives_big_q_hermite() {
        // A=2, b=0, lambda/(1-q^k)=1  ->  P_{n+1} = (2x - y q^n) P_n - (1-q^n) P_{n-1}
        let input = SynthInput::new(rational::rat_int(2), vec![], vec![LaurentPoly::one()]);
        let rec = synth_p1(&input);
        assert_eq!(rec.depth(), 3);
        assert_eq!(rec.coeffs[0], y() * s());
        assert_eq!(rec.coeffs[1], LaurentPoly::one() - s());
    }

    #[test]
    fn big_q_hermite_input_gives_al_salam_chihara() {
        let input = SynthInput::new(
            rational::rat_int(2),
            vec![LaurentPoly::zero(), a()],
            vec![LaurentPoly::one()],
        );
        let rec = synth_p1(&input);
        assert_eq!(rec.depth(), 3);
        assert_eq!(rec.coeffs[0], (a() + y()) * s());
        let expected =
            (LaurentPoly::one() - s()) * (LaurentPoly::one() - a() * y() * q_pow(-1) * s());
        assert_eq!(rec.coeffs[1], expected);
    }

    #[test]
    fn asc_input_gives_four_term() {
        let b = LaurentPoly::var(VarId::B);
        let input = SynthInput::new(
            rational::rat_int(2),
            vec![LaurentPoly::zero(), a() + &b],
            vec![LaurentPoly::one(), -(a() * &b * q_pow(-1))],
        );
        let rec = synth_p1(&input);
        assert_eq!(rec.depth(), 4);
        assert_eq!(rec.coeffs[0], (a() + &b + y()) * s());
        let mid = (LaurentPoly::one() - s())
            * (LaurentPoly::one() - (a() * &b + a() * y() + &b * y()) * q_pow(-1) * s());
        assert_eq!(rec.coeffs[1], mid);
        let tail = a() * b * y() * q_pow(-2) * s() * (LaurentPoly::one() - s())
            * (LaurentPoly::one() - q_pow(-1) * s());
        assert_eq!(rec.coeffs[2], tail);
    }

    #[test]
    fn discrete_q_hermite_i_input_gives_four_term() {
        // A=1, b=0, lambda_k = q^{k-1}(1-q^k): lambda/(1-q^k) = q^{-1} q^k
        let input = SynthInput::new(
            rational::rat_int(1),
            vec![],
            vec![LaurentPoly::zero(), q_pow(-1)],
        );
        let rec = synth_p1(&input);
        assert_eq!(rec.depth(), 4);
        assert_eq!(rec.coeffs[0], y() * s());
        assert_eq!(rec.coeffs[1], q_pow(-1) * s() * (LaurentPoly::one() - s()));
        let tail = -(y()
            * q_pow(-2)
            * s()
            * (LaurentPoly::one() - s())
            * (LaurentPoly::one() - q_pow(-1) * s()));
        assert_eq!(rec.coeffs[2], tail);
    }

    #[test]
    fn discrete_q_hermite_ii_input_flipped() {
        // A=1, b=0, lambda_k/(1-q^k) = q^{-2k+1} = q u^2
        let input = SynthInput::new(
            rational::rat_int(1),
            vec![],
            vec![LaurentPoly::zero(), LaurentPoly::zero(), q()],
        );
        let rec = synth_p2(&input).unwrap();
        assert_eq!(rec.depth(), 4);
        assert_eq!(rec.coeffs[0], y() * LaurentPoly::var_pow(VarId::S, -1));
        assert_eq!(
            rec.coeffs[1],
            q() * LaurentPoly::var_pow(VarId::S, -2) * (LaurentPoly::one() - s())
        );
        let tail = y()
            * q_pow(3)
            * LaurentPoly::var_pow(VarId::S, -3)
            * (LaurentPoly::one() - s())
            * (LaurentPoly::one() - q_pow(-1) * s());
        assert_eq!(rec.coeffs[2], tail);
    }

    #[test]
    fn flipped_synthesis_rejects_nonzero_constant_term() {
        let input = SynthInput::new(rational::rat_int(1), vec![], vec![LaurentPoly::one()]);
        assert!(synth_p2(&input).is_err());
    }

    #[test]
    fn degenerate_input_gives_depth_two() {
        // lambda = 0, b = 0: P_{n+1} = (Ax - yq^{-n}) P_n
        let input = SynthInput::new(rational::rat_int(1), vec![], vec![]);
        let rec = synth_p2(&input).unwrap();
        assert_eq!(rec.depth(), 2);
        assert_eq!(rec.coeffs[0], y() * LaurentPoly::var_pow(VarId::S, -1));
    }

    #[test]
    fn verify_against_convolution_small() {
        let spec = FamilySpec::q_hermite(Env::symbolic());
        let polys = convolve_p1(&spec, 6);
        let rec = synth_p1(&SynthInput::new(rational::rat_int(2), vec![], vec![LaurentPoly::one()]));
        assert!(verify_recurrence(&polys, &rec, &q_sym()));
        // and a perturbed recurrence must fail
        let mut bad = rec.clone();
        bad.coeffs[0] = bad.coeffs[0].clone() + LaurentPoly::one();
        assert!(!verify_recurrence(&polys, &bad, &q_sym()));
    }

    #[test]
    fn verify_p2_against_convolution_small() {
        let spec = FamilySpec::discrete_q_hermite_ii(Env::symbolic());
        let polys = convolve_p2(&spec, 6);
        let input = SynthInput::new(
            rational::rat_int(1),
            vec![],
            vec![LaurentPoly::zero(), LaurentPoly::zero(), q()],
        );
        let rec = synth_p2(&input).unwrap();
        assert!(verify_recurrence(&polys, &rec, &q_sym()));
    }

    #[test]
    fn order_probe_three_term_family() {
        let spec = FamilySpec::q_hermite(Env::symbolic());
        let polys = spec.polys(7);
        let two = rational::rat_int(2);
        assert!(order_probe(&polys, &two, 3));
        assert!(!order_probe(&polys, &two, 2));
        assert_eq!(minimal_depth(&polys, &two), Some(3));
    }
}
