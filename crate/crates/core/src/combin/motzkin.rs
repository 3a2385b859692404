//! Weighted 2-Motzkin paths: up, horizontal, down, and double-down steps,
//! never below the x-axis. Their weighted sums by final height reproduce the
//! moments of the two functionals of the 4-term recurrence.

use alloc::vec::Vec;

use crate::exact::{LaurentPoly, VarId};
use crate::qcore::{base_pow, q_sym};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Step {
    Up,
    Level,
    Down,
    DoubleDown,
}

impl Step {
    pub const ALL: [Step; 4] = [Step::Up, Step::Level, Step::Down, Step::DoubleDown];

    pub fn rise(self) -> i32 {
        match self {
            Step::Up => 1,
            Step::Level => 0,
            Step::Down => -1,
            Step::DoubleDown => -2,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Level => 'H',
            Step::Down => 'D',
            Step::DoubleDown => 'V',
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct MotzkinPath2 {
    pub steps: Vec<Step>,
}

impl MotzkinPath2 {
    /// Heights before each step, then the final height.
    pub fn heights(&self) -> Vec<i32> {
        let mut h = 0;
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(0);
        for s in &self.steps {
            h += s.rise();
            out.push(h);
        }
        out
    }
}

/// All 2-Motzkin paths of length `n` from the origin to final height `i`,
/// staying weakly above the axis.
pub fn enumerate_motzkin2(n: usize, final_height: usize) -> Vec<MotzkinPath2> {
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(n);
    fn recurse(
        remaining: usize,
        height: i32,
        target: i32,
        steps: &mut Vec<Step>,
        out: &mut Vec<MotzkinPath2>,
    ) {
        if remaining == 0 {
            if height == target {
                out.push(MotzkinPath2 { steps: steps.clone() });
            }
            return;
        }
        let r = remaining as i32;
        // reachability pruning: at most +1 per step, at least -2 per step
        if height + r < target || height - 2 * r > target {
            return;
        }
        for s in Step::ALL {
            let next = height + s.rise();
            if next < 0 {
                continue;
            }
            steps.push(s);
            recurse(remaining - 1, next, target, steps, out);
            steps.pop();
        }
    }
    recurse(n, 0, final_height as i32, &mut steps, &mut out);
    out
}

/// Product of step weights: up `1`; horizontal at level `i`: `y q^i`; down
/// starting at level `i`: `q^{i-1}(1-q^i)`; double down starting at level
/// `i`: `-y q^{i-2}(1-q^i)(1-q^{i-1})`.
pub fn path_weight(p: &MotzkinPath2) -> LaurentPoly {
    let q = q_sym();
    let y = LaurentPoly::var(VarId::Y);
    let mut w = LaurentPoly::one();
    let mut h: i64 = 0;
    for s in &p.steps {
        let step_weight = match s {
            Step::Up => LaurentPoly::one(),
            Step::Level => &y * base_pow(&q, h),
            Step::Down => base_pow(&q, h - 1) * (LaurentPoly::one() - base_pow(&q, h)),
            Step::DoubleDown => {
                -(&y * base_pow(&q, h - 2)
                    * (LaurentPoly::one() - base_pow(&q, h))
                    * (LaurentPoly::one() - base_pow(&q, h - 1)))
            }
        };
        w = w * step_weight;
        h += s.rise() as i64;
    }
    w
}

/// `sum_{M in Mot_i(n)} wt(M)`.
pub fn motzkin_sum(n: usize, final_height: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    for p in enumerate_motzkin2(n, final_height) {
        acc = acc + path_weight(&p);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dbqh::{dual_moments_oracle, dual_moments_paper};

    fn y() -> LaurentPoly {
        LaurentPoly::var(VarId::Y)
    }
    fn q() -> LaurentPoly {
        q_sym()
    }

    #[test]
    fn small_path_sets() {
        // Mot_0(2) = {UD, HH}: (1-q) + y^2
        let paths = enumerate_motzkin2(2, 0);
        assert_eq!(paths.len(), 2);
        assert_eq!(motzkin_sum(2, 0), y().pow(2) + LaurentPoly::one() - q());
        // Mot_1(1) = {U}: weight 1
        assert_eq!(motzkin_sum(1, 1), LaurentPoly::one());
        // Mot_1(2) = {UH, HU}: yq + y
        assert_eq!(motzkin_sum(2, 1), y() * (LaurentPoly::one() + q()));
    }

    #[test]
    fn paths_never_dip_below_axis() {
        for p in enumerate_motzkin2(5, 1) {
            assert!(p.heights().iter().all(|&h| h >= 0));
        }
    }

    #[test]
    fn sums_match_functional_oracles() {
        for n in 0..=7usize {
            assert_eq!(motzkin_sum(n, 0), dual_moments_oracle(n, 0), "i=0 n={n}");
            assert_eq!(motzkin_sum(n, 0), dual_moments_paper(n, 0), "paper i=0 n={n}");
            assert_eq!(motzkin_sum(n, 1), dual_moments_oracle(n, 1), "i=1 n={n}");
            let scaled = (LaurentPoly::one() - q()) * motzkin_sum(n, 1);
            assert_eq!(scaled, dual_moments_paper(n, 1), "paper i=1 n={n}");
        }
    }
}
