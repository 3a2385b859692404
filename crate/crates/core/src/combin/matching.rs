//! Matchings of `[n]` with bicolored fixed points, their q-statistics, and
//! the weighted sums that reproduce `h*_n`.

use alloc::vec;
use alloc::vec::Vec;

use crate::exact::rational;
use crate::exact::{ExactError, ExactResult, LaurentPoly, VarId};
use crate::qcore::{base_pow, q_int, q_sym};

/// Enumeration bound; `|FBM(10)| = 58107` keeps exhaustive runs instant.
pub const FBM_BOUND: usize = 10;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Color {
    X,
    Y,
}

/// A matching of `[n]` whose fixed points each carry a color. Points are
/// `1..=n`; edges `(u, v)` keep `u < v`; `colors[i]` belongs to the `i`-th
/// fixed point in increasing order, so every fixed point is colored by
/// construction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Matching {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub colors: Vec<Color>,
}

impl Matching {
    /// Fixed points in increasing order.
    pub fn fixed_points(&self) -> Vec<usize> {
        let mut taken = vec![false; self.n + 1];
        for &(u, v) in &self.edges {
            taken[u] = true;
            taken[v] = true;
        }
        (1..=self.n).filter(|&p| !taken[p]).collect()
    }
}

/// Crossing/nesting/alignment counts, the block-word, and its inversions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatchingStats {
    pub cro: usize,
    pub nes: usize,
    pub ali: usize,
    pub block_word: Vec<u8>,
    pub inv: usize,
}

pub fn matching_stats(m: &Matching) -> MatchingStats {
    let mut cro = 0;
    let mut nes = 0;
    let mut ali = 0;
    for (i, &(a, b)) in m.edges.iter().enumerate() {
        for &(c, d) in &m.edges[i + 1..] {
            let ((_a, b), (c, d)) = if a < c { ((a, b), (c, d)) } else { ((c, d), (a, b)) };
            if b < c {
                ali += 1;
            } else if c < b && b < d {
                cro += 1;
            } else {
                nes += 1;
            }
        }
    }
    // block word: 1 on fixed points, 0 on matched points
    let mut block_word = vec![0u8; m.n];
    for p in m.fixed_points() {
        block_word[p - 1] = 1;
    }
    let mut inv = 0;
    for i in 0..m.n {
        for j in i + 1..m.n {
            if block_word[i] > block_word[j] {
                inv += 1;
            }
        }
    }
    MatchingStats { cro, nes, ali, block_word, inv }
}

/// All FB-matchings of `[n]`, each exactly once.
pub fn enumerate_fbm(n: usize) -> ExactResult<Vec<Matching>> {
    if n > FBM_BOUND {
        return Err(ExactError::Domain("matching enumeration bound exceeded"));
    }
    let mut out = Vec::new();
    let mut edges = Vec::new();
    build_matchings(&mut (1..=n).collect::<Vec<_>>(), &mut edges, &mut |edges, fixed| {
        // every 2^{#fixed} coloring
        let k = fixed.len();
        for mask in 0..(1u32 << k) {
            let colors = (0..k)
                .map(|i| if mask >> i & 1 == 0 { Color::X } else { Color::Y })
                .collect();
            out.push(Matching { n, edges: edges.to_vec(), colors });
        }
    });
    Ok(out)
}

/// All complete matchings of `[2n]`.
pub fn complete_matchings(two_n: usize) -> Vec<Matching> {
    assert!(two_n % 2 == 0);
    let mut out = Vec::new();
    let mut edges = Vec::new();
    build_matchings(&mut (1..=two_n).collect::<Vec<_>>(), &mut edges, &mut |edges, fixed| {
        if fixed.is_empty() {
            out.push(Matching { n: two_n, edges: edges.to_vec(), colors: Vec::new() });
        }
    });
    out
}

/// Recursively choose, for the smallest unplaced point, a partner or
/// fixed-point status; emits each edge set once with its fixed points.
fn build_matchings(
    free: &mut Vec<usize>,
    edges: &mut Vec<(usize, usize)>,
    emit: &mut impl FnMut(&[(usize, usize)], &[usize]),
) {
    fn recurse(
        free: &[usize],
        edges: &mut Vec<(usize, usize)>,
        fixed: &mut Vec<usize>,
        emit: &mut impl FnMut(&[(usize, usize)], &[usize]),
    ) {
        match free.first() {
            None => {
                let mut sorted_edges = edges.clone();
                sorted_edges.sort_unstable();
                emit(&sorted_edges, fixed);
            }
            Some(&p) => {
                // p stays fixed
                fixed.push(p);
                recurse(&free[1..], edges, fixed, emit);
                fixed.pop();
                // p pairs with a later point
                for (i, &v) in free.iter().enumerate().skip(1) {
                    let mut rest: Vec<usize> = Vec::with_capacity(free.len() - 2);
                    rest.extend_from_slice(&free[1..i]);
                    rest.extend_from_slice(&free[i + 1..]);
                    edges.push((p, v));
                    recurse(&rest, edges, fixed, emit);
                    edges.pop();
                }
            }
        }
    }
    let snapshot = free.clone();
    recurse(&snapshot, edges, &mut Vec::new(), emit);
}

/// The weight `wt(pi) = (-1)^k q^{2 binom(k,2) + 2 ali + cro + inv(bw)}
/// z_1 ... z_{n-2k}`, where the `i`-th fixed point contributes `x` or
/// `-y q^{i-1}` by its color (`i` counts fixed points left to right).
pub fn weight(m: &Matching) -> LaurentPoly {
    let q = q_sym();
    let stats = matching_stats(m);
    let k = m.edges.len();
    let exponent = (k * k.saturating_sub(1)) as i64 + 2 * stats.ali as i64 + stats.cro as i64
        + stats.inv as i64;
    let sign = if k % 2 == 0 { rational::rat_one() } else { -rational::rat_one() };
    let mut w = base_pow(&q, exponent).scale(&sign);
    for (i, color) in m.colors.iter().enumerate() {
        let z = match color {
            Color::X => LaurentPoly::var(VarId::X),
            Color::Y => -(LaurentPoly::var(VarId::Y) * base_pow(&q, i as i64)),
        };
        w = w * z;
    }
    w
}

/// `sum_{pi in FBM(n)} wt(pi)`; equals `h*_n(x, y; q)`.
pub fn fbm_weight_sum(n: usize) -> ExactResult<LaurentPoly> {
    let mut acc = LaurentPoly::zero();
    for m in enumerate_fbm(n)? {
        acc = acc + weight(&m);
    }
    Ok(acc)
}

/// The three `[2n-1]_q!!` distribution sums over complete matchings of
/// `[2n]`: statistics `2 ali + cro`, `cro + 2 nes`, and `2 cro + nes`.
/// Returns the triple together with whether `ali + cro + nes = binom(k, 2)`
/// held for every matching.
pub fn cm_distribution_sums(n: usize) -> (LaurentPoly, LaurentPoly, LaurentPoly, bool) {
    let q = q_sym();
    let mut s1 = LaurentPoly::zero();
    let mut s2 = LaurentPoly::zero();
    let mut s3 = LaurentPoly::zero();
    let mut complement_ok = true;
    for m in complete_matchings(2 * n) {
        let st = matching_stats(&m);
        let k = m.edges.len();
        if st.ali + st.cro + st.nes != k * k.saturating_sub(1) / 2 {
            complement_ok = false;
        }
        s1 = s1 + base_pow(&q, 2 * st.ali as i64 + st.cro as i64);
        s2 = s2 + base_pow(&q, st.cro as i64 + 2 * st.nes as i64);
        s3 = s3 + base_pow(&q, 2 * st.cro as i64 + st.nes as i64);
    }
    (s1, s2, s3, complement_ok)
}

/// The 4-tuple image of the weight-preserving bijection: edge count, block
/// word, induced complete matching on `[2k]`, and the color sequence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GTuple {
    pub k: usize,
    pub word: Vec<u8>,
    pub sigma: Matching,
    pub colors: Vec<Color>,
}

pub fn bijection_g(m: &Matching) -> GTuple {
    let stats = matching_stats(m);
    let k = m.edges.len();
    // rank of each matched point among matched points
    let mut rank = vec![0usize; m.n + 1];
    let mut r = 0usize;
    for p in 1..=m.n {
        if stats.block_word[p - 1] == 0 {
            r += 1;
            rank[p] = r;
        }
    }
    let mut sigma_edges: Vec<(usize, usize)> =
        m.edges.iter().map(|&(u, v)| (rank[u], rank[v])).collect();
    sigma_edges.sort_unstable();
    GTuple {
        k,
        word: stats.block_word,
        sigma: Matching { n: 2 * k, edges: sigma_edges, colors: Vec::new() },
        colors: m.colors.clone(),
    }
}

/// Rebuild the matching from its 4-tuple.
pub fn bijection_g_inverse(t: &GTuple) -> Matching {
    let n = t.word.len();
    let matched: Vec<usize> = (1..=n).filter(|&p| t.word[p - 1] == 0).collect();
    let mut edges: Vec<(usize, usize)> = t
        .sigma
        .edges
        .iter()
        .map(|&(u, v)| (matched[u - 1], matched[v - 1]))
        .collect();
    edges.sort_unstable();
    Matching { n, edges, colors: t.colors.clone() }
}

/// The factorized weight `(-1)^k q^{2 binom(k,2)} q^{2 ali(sigma) +
/// cro(sigma)} q^{inv(w)} z_1...z_{n-2k}` read off the 4-tuple; equals
/// `weight` of the preimage.
pub fn factored_weight(t: &GTuple) -> LaurentPoly {
    let q = q_sym();
    let st = matching_stats(&t.sigma);
    let exponent =
        (t.k * t.k.saturating_sub(1)) as i64 + 2 * st.ali as i64 + st.cro as i64 + inv_word(&t.word) as i64;
    let sign = if t.k % 2 == 0 { rational::rat_one() } else { -rational::rat_one() };
    let mut w = base_pow(&q, exponent).scale(&sign);
    for (i, color) in t.colors.iter().enumerate() {
        let z = match color {
            Color::X => LaurentPoly::var(VarId::X),
            Color::Y => -(LaurentPoly::var(VarId::Y) * base_pow(&q, i as i64)),
        };
        w = w * z;
    }
    w
}

fn inv_word(w: &[u8]) -> usize {
    let mut inv = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                inv += 1;
            }
        }
    }
    inv
}

/// Partition the FBM(n) weight sum by the status of the point `n`:
/// `(W_-, W_x, W_y)` for `n` matched, fixed-and-x, fixed-and-y.
pub fn w_decomposition(n: usize) -> ExactResult<[LaurentPoly; 3]> {
    let mut parts = [LaurentPoly::zero(), LaurentPoly::zero(), LaurentPoly::zero()];
    for m in enumerate_fbm(n)? {
        let fixed = m.fixed_points();
        let idx = match fixed.iter().position(|&p| p == n) {
            None => 0,
            Some(i) => match m.colors[i] {
                Color::X => 1,
                Color::Y => 2,
            },
        };
        let w = weight(&m);
        parts[idx] = core::mem::take(&mut parts[idx]) + w;
    }
    Ok(parts)
}

/// Check the three claims of the W-decomposition at `n`:
/// `W_x(n+1) = x h*_n`, `W_y(n+1) = -y q^n (W_x(n) + W_y(n)) - y W_-(n)`,
/// `W_-(n+1) = -q^{n-1} [n]_q h*_{n-1}`.
pub fn w_claims_hold(n: usize) -> ExactResult<bool> {
    let q = q_sym();
    let next = w_decomposition(n + 1)?;
    let here = w_decomposition(n)?;
    let hs = crate::dbqh::hstar(n);
    let c1 = next[1] == LaurentPoly::var(VarId::X) * &hs;
    let y = LaurentPoly::var(VarId::Y);
    let c2_rhs = -(&y * base_pow(&q, n as i64) * (&here[1] + &here[2])) - &y * &here[0];
    let c2 = next[2] == c2_rhs;
    let c3 = if n == 0 {
        next[0].is_zero()
    } else {
        let rhs = -(base_pow(&q, n as i64 - 1) * q_int(n, &q) * crate::dbqh::hstar(n - 1));
        next[0] == rhs
    };
    Ok(c1 && c2 && c3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dbqh::hstar;
    use crate::qcore::q_odd_double_factorial;

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
    fn enumeration_counts() {
        // f(n) = 2 f(n-1) + (n-1) f(n-2)
        assert_eq!(enumerate_fbm(0).unwrap().len(), 1);
        assert_eq!(enumerate_fbm(1).unwrap().len(), 2);
        assert_eq!(enumerate_fbm(2).unwrap().len(), 5);
        assert_eq!(enumerate_fbm(5).unwrap().len(), 142);
        assert!(enumerate_fbm(FBM_BOUND + 1).is_err());
        assert_eq!(complete_matchings(6).len(), 15);
    }

    #[test]
    fn small_weights() {
        // single edge on [2]
        let m = Matching { n: 2, edges: vec![(1, 2)], colors: vec![] };
        assert_eq!(weight(&m), LaurentPoly::int(-1));
        // both fixed, colored (Y, Y): (-y)(-yq) = q y^2
        let m = Matching { n: 2, edges: vec![], colors: vec![Color::Y, Color::Y] };
        assert_eq!(weight(&m), q() * y().pow(2));
        let m = Matching { n: 1, edges: vec![], colors: vec![Color::X] };
        assert_eq!(weight(&m), x());
    }

    #[test]
    fn weight_sum_is_hstar() {
        for n in 0..=6usize {
            assert_eq!(fbm_weight_sum(n).unwrap(), hstar(n), "n={n}");
        }
    }

    #[test]
    fn distribution_identities() {
        for n in 0..=4usize {
            let expected = q_odd_double_factorial(n, &q());
            let (s1, s2, s3, complement) = cm_distribution_sums(n);
            assert_eq!(s1, expected, "2ali+cro n={n}");
            assert_eq!(s2, expected, "cro+2nes n={n}");
            assert_eq!(s3, expected, "2cro+nes n={n}");
            assert!(complement);
        }
    }

    #[test]
    fn bijection_round_trip_and_factorization() {
        for n in 0..=5usize {
            for m in enumerate_fbm(n).unwrap() {
                let t = bijection_g(&m);
                assert_eq!(bijection_g_inverse(&t), m);
                assert_eq!(factored_weight(&t), weight(&m));
            }
        }
    }

    #[test]
    fn bijection_edge_case_n2() {
        let m = Matching { n: 2, edges: vec![(1, 2)], colors: vec![] };
        let t = bijection_g(&m);
        assert_eq!(t.k, 1);
        assert_eq!(t.word, vec![0, 0]);
        assert_eq!(t.sigma.edges, vec![(1, 2)]);
        assert!(t.colors.is_empty());
    }

    #[test]
    fn w_decomposition_small() {
        let parts = w_decomposition(1).unwrap();
        assert!(parts[0].is_zero());
        assert_eq!(parts[1], x());
        assert_eq!(parts[2], -y());
        for n in 0..=5usize {
            assert!(w_claims_hold(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn hstar_four_term_recurrence() {
        // h*_{n+1} = (x - yq^n) h*_n - q^{n-1} [n]_q h*_{n-1}
        //            + y q^{n-2} [n-1]_q (1-q^n) h*_{n-2}
        for n in 1..=6usize {
            let ni = n as i64;
            let mut rhs = (x() - y() * base_pow(&q(), ni)) * hstar(n)
                - base_pow(&q(), ni - 1) * q_int(n, &q()) * hstar(n - 1);
            if n >= 2 {
                rhs = rhs
                    + y() * base_pow(&q(), ni - 2)
                        * q_int(n - 1, &q())
                        * (LaurentPoly::one() - base_pow(&q(), ni))
                        * hstar(n - 2);
            }
            assert_eq!(hstar(n + 1), rhs, "n={n}");
        }
    }
}
