//! The fixed variable alphabet and exponent vectors.
//!
//! The alphabet is closed: every symbol used anywhere in the crate maps to
//! exactly one [`VarId`], which keeps exponent vectors dense and comparisons
//! cheap. `z` carries `e^{i*theta}` via `x = (z + 1/z)/2`, `t` is reserved for
//! the series variable, `s` stands for `q^n` in recurrence coefficients, and
//! `I` is the adjoined imaginary unit reduced by `I^2 = -1`.

use core::cmp::Ordering;

/// Number of symbols in the alphabet.
pub const NVARS: usize = 11;

/// One symbol of the closed, totally ordered alphabet.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum VarId {
    Q,
    Z,
    T,
    S,
    A,
    B,
    C,
    D,
    X,
    Y,
    I,
}

impl VarId {
    /// All variables in canonical order.
    pub const ALL: [VarId; NVARS] = [
        VarId::Q,
        VarId::Z,
        VarId::T,
        VarId::S,
        VarId::A,
        VarId::B,
        VarId::C,
        VarId::D,
        VarId::X,
        VarId::Y,
        VarId::I,
    ];

    /// Position in the canonical order.
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            VarId::Q => "q",
            VarId::Z => "z",
            VarId::T => "t",
            VarId::S => "s",
            VarId::A => "a",
            VarId::B => "b",
            VarId::C => "c",
            VarId::D => "d",
            VarId::X => "x",
            VarId::Y => "y",
            VarId::I => "I",
        }
    }

    pub fn from_name(name: &str) -> Option<VarId> {
        VarId::ALL.iter().copied().find(|v| v.name() == name)
    }
}

/// A monomial: one integer exponent (negatives allowed) per alphabet symbol.
///
/// Ordered graded-lexicographically: first by total degree, ties broken by
/// the exponent vector in alphabet order. This order is translation-invariant
/// on exponent vectors, so leading terms are multiplicative.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    exps: [i32; NVARS],
}

impl Monomial {
    /// The empty monomial (all exponents zero).
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: VarId, e: i32) -> Self {
        let mut m = Monomial::default();
        m.exps[v.index()] = e;
        m
    }

    pub fn from_exps(exps: [i32; NVARS]) -> Self {
        Monomial { exps }
    }

    pub fn exp(&self, v: VarId) -> i32 {
        self.exps[v.index()]
    }

    pub fn exps(&self) -> &[i32; NVARS] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> i64 {
        self.exps.iter().map(|&e| e as i64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = [0i32; NVARS];
        for i in 0..NVARS {
            exps[i] = self.exps[i]
                .checked_add(other.exps[i])
                .expect("monomial exponent overflow");
        }
        Monomial { exps }
    }

    /// Exponent-wise difference; in the Laurent ring every monomial divides
    /// every other.
    pub fn div(&self, other: &Monomial) -> Monomial {
        let mut exps = [0i32; NVARS];
        for i in 0..NVARS {
            exps[i] = self.exps[i]
                .checked_sub(other.exps[i])
                .expect("monomial exponent overflow");
        }
        Monomial { exps }
    }

    pub fn inv(&self) -> Monomial {
        Monomial::one().div(self)
    }

    pub fn pow(&self, k: i32) -> Monomial {
        let mut exps = [0i32; NVARS];
        for i in 0..NVARS {
            exps[i] = self.exps[i].checked_mul(k).expect("monomial exponent overflow");
        }
        Monomial { exps }
    }

    /// Set the exponent of `v` to zero.
    pub fn without(&self, v: VarId) -> Monomial {
        let mut m = *self;
        m.exps[v.index()] = 0;
        m
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_orders_by_degree_first() {
        let q2 = Monomial::var(VarId::Q, 2);
        let zx = Monomial::var(VarId::Z, 1).mul(&Monomial::var(VarId::X, 1));
        let z = Monomial::var(VarId::Z, 1);
        assert!(q2 > z);
        assert!(zx > z);
        // same degree: lexicographic on the exponent vector
        assert!(q2 > zx);
    }

    #[test]
    fn negative_exponents_compare() {
        let zinv = Monomial::var(VarId::Z, -1);
        assert!(zinv < Monomial::one());
        assert!(zinv.mul(&Monomial::var(VarId::Z, 1)).is_one());
    }

    #[test]
    fn order_is_translation_invariant() {
        let a = Monomial::var(VarId::A, 3);
        let b = Monomial::var(VarId::B, 2).mul(&Monomial::var(VarId::Q, 1));
        let shift = Monomial::var(VarId::X, -2).mul(&Monomial::var(VarId::Y, 5));
        assert_eq!(a.cmp(&b), a.mul(&shift).cmp(&b.mul(&shift)));
    }
}
