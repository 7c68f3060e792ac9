//! Macaulay binomial representations and the 0-sequence growth predicate.
//!
//! Every positive integer `c` has, for each `d >= 1`, a unique expansion
//! `c = C(k_d, d) + C(k_{d-1}, d-1) + ... + C(k_δ, δ)` with
//! `k_d > k_{d-1} > ... > k_δ >= δ > 0`. Shifting every term up by one gives
//! `c^<d>`, the largest value the next degree of a Hilbert function may take.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// `C(n, k)` as an exact big integer; zero whenever `k < 0`, `n < 0` or `n < k`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if k < 0 || n < 0 || n < k {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(n, k)` for the small arguments that occur in Hilbert function formulas.
///
/// Panics if the value does not fit in a `u64`.
pub fn binomial_u64(n: i64, k: i64) -> u64 {
    if k < 0 || n < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    u64::try_from(acc).expect("binomial coefficient overflows u64")
}

/// Binomial with a `u64` top index; used by the greedy search where `k` can be large.
fn binomial_big(n: u64, k: u32) -> BigUint {
    let k64 = u64::from(k);
    if n < k64 {
        return BigUint::zero();
    }
    let k = k64.min(n - k64);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MacaulayTerm {
    /// Top index `k_j`.
    pub top: u64,
    /// Bottom index `j`.
    pub bottom: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MacaulayRep {
    value: u64,
    index: u32,
    terms: Vec<MacaulayTerm>,
}

impl MacaulayRep {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    /// Terms in storage order, `j` running from `d` down to `δ`.
    pub fn terms(&self) -> &[MacaulayTerm] {
        &self.terms
    }

    /// Sum of the stored binomials; equals [`Self::value`] by construction.
    pub fn reconstruct(&self) -> BigUint {
        self.terms
            .iter()
            .map(|t| binomial_big(t.top, t.bottom))
            .sum()
    }

    /// `c^<d>`: every term `C(k_j, j)` replaced by `C(k_j + 1, j + 1)`.
    pub fn next(&self) -> BigUint {
        self.terms
            .iter()
            .map(|t| binomial_big(t.top + 1, t.bottom + 1))
            .sum()
    }
}

fn check_positive(c: i64, d: i64) -> Result<(u64, u32)> {
    if c <= 0 {
        return Err(Error::domain(format!("c must be positive, got {c}")));
    }
    if d <= 0 {
        return Err(Error::domain(format!("d must be positive, got {d}")));
    }
    let d = u32::try_from(d).map_err(|_| Error::domain(format!("d = {d} is too large")))?;
    Ok((c as u64, d))
}

/// Largest `k` in `[j, hi]` with `C(k, j) <= rem`.
fn greedy_top(rem: &BigUint, j: u32, hi: u64) -> u64 {
    let mut lo = u64::from(j);
    let mut hi = hi.max(lo);
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        if binomial_big(mid, j) <= *rem {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

/// The `d`-th Macaulay representation of `c`.
pub fn macaulay_rep(c: i64, d: i64) -> Result<MacaulayRep> {
    let (value, index) = check_positive(c, d)?;
    let mut rem = BigUint::from(value);
    let mut terms = Vec::new();
    let mut j = index;
    // C(c + j - 1, j) >= c for j >= 1, so the top never exceeds this.
    let mut ceiling = value + u64::from(index);
    while !rem.is_zero() {
        debug_assert!(j >= 1, "remainder left after the j = 1 term");
        let top = greedy_top(&rem, j, ceiling);
        rem -= binomial_big(top, j);
        terms.push(MacaulayTerm { top, bottom: j });
        ceiling = top.saturating_sub(1);
        j -= 1;
    }
    Ok(MacaulayRep {
        value,
        index,
        terms,
    })
}

/// `c^<d>`, the Macaulay growth bound for the degree after `d`.
pub fn macaulay_next(c: i64, d: i64) -> Result<BigUint> {
    Ok(macaulay_rep(c, d)?.next())
}

fn next_u64(c: u64, d: i64) -> BigUint {
    // Callers guarantee c >= 1 and d >= 1.
    macaulay_rep(c as i64, d)
        .map(|rep| rep.next())
        .expect("positive arguments")
}

/// Which boundary rule applies at degree 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum GrowthBoundary {
    /// Width or Hilbert sequences of a cone: the degree-0 entry is at most 1.
    #[default]
    Cone,
    /// Arbitrary sequences: no constraint at degree 0.
    Raw,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ZeroSeqCheck {
    pub holds: bool,
    /// Index into the input slice of the first entry violating the bound.
    pub first_violation: Option<usize>,
}

/// Whether `a` (with `a[0]` sitting in degree `start_degree`) is a 0-sequence.
///
/// Steps leaving a degree `l >= 1` must satisfy `a_{l+1} <= a_l^<l>`. Zero
/// entries in degrees `>= 0` must persist. Steps out of negative degrees and
/// the step from degree 0 to 1 are otherwise unconstrained.
pub fn is_zero_sequence(
    a: &[u64],
    start_degree: i64,
    boundary: GrowthBoundary,
) -> Result<ZeroSeqCheck> {
    if a.is_empty() {
        return Err(Error::Malformed("empty sequence".into()));
    }
    let violation = (0..a.len()).find(|&u| {
        let l = start_degree + u as i64;
        if boundary == GrowthBoundary::Cone && l == 0 && a[u] > 1 {
            return true;
        }
        if u == 0 {
            return false;
        }
        let prev_degree = l - 1;
        let prev = a[u - 1];
        if prev_degree < 0 {
            false
        } else if prev == 0 {
            a[u] != 0
        } else if prev_degree == 0 {
            false
        } else {
            BigUint::from(a[u]) > next_u64(prev, prev_degree)
        }
    });
    Ok(ZeroSeqCheck {
        holds: violation.is_none(),
        first_violation: violation,
    })
}

/// Convenience for callers that only need the growth bound as a machine integer.
pub fn macaulay_next_u64(c: u64, d: i64) -> Option<u64> {
    if c == 0 || d <= 0 {
        return None;
    }
    next_u64(c, d).to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn terms(rep: &MacaulayRep) -> Vec<(u64, u32)> {
        rep.terms().iter().map(|t| (t.top, t.bottom)).collect()
    }

    #[test]
    fn one_is_a_single_diagonal_term() {
        for d in 1..10 {
            let rep = macaulay_rep(1, d).unwrap();
            assert_eq!(terms(&rep), vec![(d as u64, d as u32)]);
            assert_eq!(macaulay_next(1, d).unwrap(), BigUint::one());
        }
    }

    #[test]
    fn small_examples() {
        assert_eq!(terms(&macaulay_rep(5, 2).unwrap()), vec![(3, 2), (2, 1)]);
        assert_eq!(terms(&macaulay_rep(10, 3).unwrap()), vec![(5, 3)]);
        assert_eq!(macaulay_next(5, 2).unwrap(), BigUint::from(7u32));
        assert_eq!(macaulay_next(3, 1).unwrap(), BigUint::from(6u32));
    }

    #[test]
    fn non_positive_inputs_are_domain_errors() {
        assert!(matches!(macaulay_rep(0, 3), Err(Error::Domain(_))));
        assert!(matches!(macaulay_rep(-4, 3), Err(Error::Domain(_))));
        assert!(matches!(macaulay_rep(4, 0), Err(Error::Domain(_))));
        assert!(matches!(macaulay_next(4, -1), Err(Error::Domain(_))));
    }

    #[test]
    fn large_values_stay_exact() {
        let c = 1i64 << 62;
        let rep = macaulay_rep(c, 1).unwrap();
        assert_eq!(terms(&rep), vec![(c as u64, 1)]);
        let expected = binomial(c + 1, 2);
        assert_eq!(rep.next(), expected);
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(2, 5), BigUint::zero());
        assert_eq!(binomial(-1, 0), BigUint::zero());
        assert_eq!(binomial(7, 0), BigUint::one());
        assert_eq!(binomial_u64(30, 15), 155_117_520);
    }

    #[test]
    fn zero_sequence_examples() {
        let widths: Vec<u64> = (0..8).map(|l| binomial_u64(l + 2, 2)).collect();
        let ok = is_zero_sequence(&widths, 0, GrowthBoundary::Cone).unwrap();
        assert!(ok.holds);

        let bad = is_zero_sequence(&[1, 2, 4], 0, GrowthBoundary::Cone).unwrap();
        assert_eq!(bad.first_violation, Some(2));

        let gap = is_zero_sequence(&[1, 1, 0, 1], 0, GrowthBoundary::Cone).unwrap();
        assert_eq!(gap.first_violation, Some(3));
    }

    #[test]
    fn cone_boundary_is_configurable() {
        let c = is_zero_sequence(&[3, 3], 0, GrowthBoundary::Cone).unwrap();
        assert_eq!(c.first_violation, Some(0));
        let r = is_zero_sequence(&[3, 3], 0, GrowthBoundary::Raw).unwrap();
        assert!(r.holds);
    }

    #[test]
    fn empty_sequence_is_malformed() {
        assert!(is_zero_sequence(&[], 0, GrowthBoundary::Cone).is_err());
    }

    #[test]
    fn round_trip_exhaustive() {
        for d in 1..=12 {
            for c in 1..=10_000i64 {
                let rep = macaulay_rep(c, d).unwrap();
                assert_eq!(rep.reconstruct(), BigUint::from(c as u64));
                let t = rep.terms();
                assert_eq!(t[0].bottom, d as u32);
                for w in t.windows(2) {
                    assert!(w[0].top > w[1].top);
                    assert_eq!(w[0].bottom, w[1].bottom + 1);
                }
                let last = t.last().unwrap();
                assert!(last.top >= u64::from(last.bottom) && last.bottom > 0);
            }
        }
    }

    #[test]
    fn greedy_terms_are_maximal() {
        for d in 1..=6 {
            for c in 1..=500i64 {
                let rep = macaulay_rep(c, d).unwrap();
                let mut rem = BigUint::from(c as u64);
                for t in rep.terms() {
                    assert!(binomial_big(t.top + 1, t.bottom) > rem);
                    rem -= binomial_big(t.top, t.bottom);
                }
            }
        }
    }

    #[test]
    fn next_is_monotone() {
        for d in 1..=8 {
            let values: Vec<BigUint> = (1..=2000).map(|c| macaulay_next(c, d).unwrap()).collect();
            assert!(values.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    /// Monomials of degree `deg` in `nvars` variables, lex-descending.
    fn monomials(nvars: usize, deg: u32) -> Vec<Vec<u32>> {
        fn rec(nvars: usize, deg: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if prefix.len() == nvars - 1 {
                let used: u32 = prefix.iter().sum();
                let mut m = prefix.clone();
                m.push(deg - used);
                out.push(m);
                return;
            }
            let used: u32 = prefix.iter().sum();
            for e in (0..=deg - used).rev() {
                prefix.push(e);
                rec(nvars, deg, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(nvars, deg, &mut Vec::new(), &mut out);
        out
    }

    /// Number of degree-`deg + 1` monomials not divisible by any monomial in `ideal`.
    fn quotient_width(nvars: usize, deg: u32, ideal: &[&Vec<u32>]) -> u64 {
        monomials(nvars, deg + 1)
            .iter()
            .filter(|m| {
                !ideal
                    .iter()
                    .any(|g| g.iter().zip(m.iter()).all(|(a, b)| a <= b))
            })
            .count() as u64
    }

    // Macaulay's theorem by brute force: the lex segment attains c^<l>, and for
    // small degrees no other set of generators does better.
    #[test]
    fn lex_segment_growth_matches_bound() {
        for nvars in 1..=3usize {
            for l in 1..=6u32 {
                let mons = monomials(nvars, l);
                let total = mons.len();
                for c in 1..=total {
                    let ideal: Vec<&Vec<u32>> = mons.iter().take(total - c).collect();
                    let lex = quotient_width(nvars, l, &ideal);
                    let bound = macaulay_next_u64(c as u64, i64::from(l)).unwrap();
                    assert_eq!(lex, bound, "nvars={nvars} l={l} c={c}");
                }
                if total <= 15 {
                    let mut best = vec![0u64; total + 1];
                    for mask in 0u32..(1 << total) {
                        let ideal: Vec<&Vec<u32>> = (0..total)
                            .filter(|i| mask & (1 << i) != 0)
                            .map(|i| &mons[i])
                            .collect();
                        let c = total - ideal.len();
                        let w = quotient_width(nvars, l, &ideal);
                        best[c] = best[c].max(w);
                    }
                    for (c, &found) in best.iter().enumerate().skip(1) {
                        let bound = macaulay_next_u64(c as u64, i64::from(l)).unwrap();
                        assert_eq!(found, bound, "exhaustive nvars={nvars} l={l} c={c}");
                    }
                }
            }
        }
    }
}
