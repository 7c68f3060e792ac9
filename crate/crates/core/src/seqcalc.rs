//! Characteristic sequences, Hilbert functions and the width-sequence validators.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::macaulay::{binomial_u64, is_zero_sequence, GrowthBoundary};

/// Non-decreasing degrees `(m_0, ..., m_{d-1})` of a free basis of the
/// coordinate ring over a linear polynomial subring in `cone_dim` variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CharSeq {
    pub entries: Vec<i64>,
    pub cone_dim: u32,
    pub codim: u32,
}

impl CharSeq {
    /// Checks only that `entries` is non-decreasing; everything else is left
    /// to [`validate_abs`].
    pub fn new(entries: Vec<i64>, cone_dim: u32, codim: u32) -> Result<Self> {
        if let Some(w) = entries.windows(2).position(|w| w[0] > w[1]) {
            return Err(Error::Malformed(format!(
                "entries must be non-decreasing (index {} > index {})",
                w,
                w + 1
            )));
        }
        Ok(CharSeq {
            entries,
            cone_dim,
            codim,
        })
    }

    /// Sequence of a degree-`d` hypersurface: `(0, 1, ..., d-1)`.
    pub fn hypersurface(d: usize, cone_dim: u32) -> Self {
        CharSeq {
            entries: (0..d as i64).collect(),
            cone_dim,
            codim: 1,
        }
    }

    pub fn degree(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn last(&self) -> Option<i64> {
        self.entries.last().copied()
    }

    /// Projective dimension `cone_dim - 1`.
    pub fn proj_dim(&self) -> i64 {
        i64::from(self.cone_dim) - 1
    }

    /// `l_i = #{j : m_j = i}` for `i = 0..=m_{d-1}`. Negative entries are ignored.
    pub fn widths(&self) -> Vec<u64> {
        let Some(top) = self.last() else {
            return Vec::new();
        };
        if top < 0 {
            return Vec::new();
        }
        let mut w = vec![0u64; top as usize + 1];
        for &m in self.entries.iter().filter(|&&m| m >= 0) {
            w[m as usize] += 1;
        }
        w
    }
}

impl std::fmt::Display for CharSeq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&join(&self.entries))
    }
}

pub(crate) fn join(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

/// A Hilbert function given by its values in degrees `0..values.len()`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertFn {
    pub values: Vec<u64>,
    pub cone_dim: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub canonical: Option<CharSeq>,
}

impl HilbertFn {
    pub fn new(values: Vec<u64>, cone_dim: u32) -> Self {
        HilbertFn {
            values,
            cone_dim,
            canonical: None,
        }
    }

    /// The first `len` values of the function attached to `seq`.
    pub fn from_charseq(seq: &CharSeq, len: usize) -> Self {
        HilbertFn {
            values: (0..len as i64).map(|l| phi_from_charseq(seq, l)).collect(),
            cone_dim: seq.cone_dim,
            canonical: Some(seq.clone()),
        }
    }

    /// Prefix length that [`charseq_from_phi`] accepts for `seq`.
    pub fn witness_len(seq: &CharSeq) -> usize {
        (seq.last().unwrap_or(0).max(0) as usize) + 3
    }
}

/// `φ(l) = Σ_i C(m + l - m_i, m)` with `m = cone_dim - 1`.
///
/// For `cone_dim = 0` this counts the entries equal to `l`.
pub fn phi_from_charseq(seq: &CharSeq, l: i64) -> u64 {
    if seq.cone_dim == 0 {
        return seq.entries.iter().filter(|&&m| m == l).count() as u64;
    }
    let m = i64::from(seq.cone_dim) - 1;
    seq.entries
        .iter()
        .map(|&mi| binomial_u64(m + l - mi, m))
        .sum()
}

/// `Δ^k` of a prefix, with the function taken to be zero in negative degrees.
pub fn finite_difference(values: &[i64], k: u32) -> Vec<i64> {
    let mut cur = values.to_vec();
    for _ in 0..k {
        let mut prev = 0;
        for v in cur.iter_mut() {
            let here = *v;
            *v = here - prev;
            prev = here;
        }
    }
    cur
}

/// Recovers the characteristic sequence from a long enough prefix of `φ`.
///
/// The codimension is not recoverable from `φ` alone; it is set to `l_1`, or
/// to 1 when `l_1 = 0`.
pub fn charseq_from_phi(phi: &HilbertFn) -> Result<CharSeq> {
    let values: Vec<i64> = phi
        .values
        .iter()
        .map(|&v| i64::try_from(v).map_err(|_| Error::Malformed("value too large".into())))
        .collect::<Result<_>>()?;
    let widths = finite_difference(&values, phi.cone_dim);
    if let Some(i) = widths.iter().position(|&w| w < 0) {
        return Err(Error::NotAcmConsistent(format!(
            "Δ^{} φ({i}) = {} is negative",
            phi.cone_dim, widths[i]
        )));
    }
    let last_nonzero = widths.iter().rposition(|&w| w != 0);
    let needed = last_nonzero.map_or(2, |k| k + 3);
    if widths.len() < needed {
        return Err(Error::NotAcmConsistent(format!(
            "prefix of length {} does not witness stabilization (need {needed})",
            widths.len()
        )));
    }
    let mut entries = Vec::new();
    for (i, &w) in widths.iter().enumerate() {
        entries.extend(std::iter::repeat_n(i as i64, w as usize));
    }
    let codim = match widths.get(1) {
        Some(&l1) if l1 > 0 => l1 as u32,
        _ => 1,
    };
    CharSeq::new(entries, phi.cone_dim, codim)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// `l_1 < p`: the scheme lies in a smaller linear space.
    Degenerate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Constraint {
    pub name: &'static str,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<Constraint>,
}

impl ValidationReport {
    /// No check failed; degenerate flags do not count as failures.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn status(&self, name: &str) -> Option<CheckStatus> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.status)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Constraint> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }
}

fn check(name: &'static str, ok: bool, detail: impl FnOnce() -> String) -> Constraint {
    Constraint {
        name,
        status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
        detail: if ok { String::new() } else { detail() },
    }
}

/// Runs every constraint on an absolute sequence independently.
pub fn validate_abs(seq: &CharSeq) -> ValidationReport {
    let e = &seq.entries;
    let mut checks = Vec::new();

    checks.push(check(
        "non-decreasing",
        e.windows(2).all(|w| w[0] <= w[1]),
        || "entries decrease".into(),
    ));
    checks.push(check("m_0 = 0", e.first() == Some(&0), || {
        format!("m_0 = {:?}", e.first())
    }));

    let widths = seq.widths();
    let l = |i: usize| widths.get(i).copied().unwrap_or(0);
    checks.push(check("l_0 = 1", l(0) == 1, || format!("l_0 = {}", l(0))));

    let p = u64::from(seq.codim);
    checks.push(match l(1).cmp(&p) {
        std::cmp::Ordering::Equal => check("l_1 = p", true, String::new),
        std::cmp::Ordering::Less => Constraint {
            name: "l_1 = p",
            status: CheckStatus::Degenerate,
            detail: format!("l_1 = {} < p = {p}", l(1)),
        },
        std::cmp::Ordering::Greater => {
            check("l_1 = p", false, || format!("l_1 = {} > p = {p}", l(1)))
        }
    });

    let hole = widths.iter().position(|&w| w == 0);
    checks.push(check("connex", hole.is_none(), || {
        format!("l_{} = 0 inside the support", hole.unwrap_or(0))
    }));

    let zero_seq = if widths.is_empty() {
        None
    } else {
        is_zero_sequence(&widths, 0, GrowthBoundary::Cone)
            .ok()
            .and_then(|r| r.first_violation)
    };
    checks.push(check("0-sequence", zero_seq.is_none(), || {
        format!("growth bound violated at l_{}", zero_seq.unwrap_or(0))
    }));

    if seq.proj_dim() >= 1 {
        let bad = (1..widths.len().saturating_sub(1))
            .find(|&i| l(i) == 1 && l(i + 1) != 0 && l(i + 1) < p);
        checks.push(check("l_i = 1 rule", bad.is_none(), || {
            let i = bad.unwrap_or(0);
            format!("l_{i} = 1 but l_{} = {} < p = {p}", i + 1, l(i + 1))
        }));
    }

    ValidationReport { checks }
}

/// `m_{d-1} <= ⌊(2d-1)/3⌋` for curves and beyond in codimension at least 2.
pub fn bound_codim2(seq: &CharSeq) -> Result<bool> {
    if seq.proj_dim() < 1 || seq.codim < 2 {
        return Err(Error::domain(format!(
            "needs projective dimension >= 1 and codim >= 2, got dimension {} and codim {}",
            seq.proj_dim(),
            seq.codim
        )));
    }
    let Some(last) = seq.last() else {
        return Err(Error::domain("empty sequence"));
    };
    let d = seq.degree() as i64;
    Ok(last <= Integer::div_floor(&(2 * d - 1), &3))
}

/// `r + ⌊(2d - 2r - 1)/3⌋`, the bound on `m_{d-1}` when at most `r` points are aligned.
pub fn aligned_bound(d: i64, r: i64) -> Result<i64> {
    if r < 1 || r > d {
        return Err(Error::domain(format!("need 1 <= r <= d, got r = {r}, d = {d}")));
    }
    Ok(r + Integer::div_floor(&(2 * d - 2 * r - 1), &3))
}

/// `e(X) = m_{d-1} - 2` for a point group.
pub fn separation_index(seq: &CharSeq) -> Result<i64> {
    if seq.cone_dim != 1 {
        return Err(Error::DimensionMismatch(format!(
            "separation index needs a point group (cone_dim 1), got cone_dim {}",
            seq.cone_dim
        )));
    }
    seq.last()
        .map(|m| m - 2)
        .ok_or_else(|| Error::domain("empty point group"))
}

/// Sorted exponent sums of the monomial box `0 <= i_j < d_j`.
pub fn ci_charseq(degrees: &[u32], cone_dim: u32) -> Result<CharSeq> {
    if degrees.is_empty() || degrees.contains(&0) {
        return Err(Error::domain("need at least one degree, all positive"));
    }
    // counts[k] = number of exponent vectors with sum k.
    let mut counts = vec![1u64];
    for &dj in degrees {
        let mut next = vec![0u64; counts.len() + dj as usize - 1];
        for (k, &c) in counts.iter().enumerate() {
            for e in 0..dj as usize {
                next[k + e] += c;
            }
        }
        counts = next;
    }
    let mut entries = Vec::new();
    for (k, &c) in counts.iter().enumerate() {
        entries.extend(std::iter::repeat_n(k as i64, c as usize));
    }
    CharSeq::new(entries, cone_dim, degrees.len() as u32)
}

/// `m_i + m_{d-1-i} = m_{d-1}` for every `i`.
pub fn is_gorenstein_symmetric(seq: &CharSeq) -> bool {
    let e = &seq.entries;
    let Some(&top) = e.last() else {
        return true;
    };
    (0..e.len()).all(|i| e[i] + e[e.len() - 1 - i] == top)
}

/// Every width of `sub` is at most the corresponding width of `sup`.
pub fn seq_included(sub: &CharSeq, sup: &CharSeq) -> Result<bool> {
    if sub.cone_dim != sup.cone_dim {
        return Err(Error::DimensionMismatch(format!(
            "cone_dim {} vs {}",
            sub.cone_dim, sup.cone_dim
        )));
    }
    let (a, b) = (sub.widths(), sup.widths());
    Ok(a
        .iter()
        .enumerate()
        .all(|(i, &w)| w <= b.get(i).copied().unwrap_or(0)))
}

/// `min{j : l_j < C(p - 1 + j, j)}`: the least degree of a hypersurface of the
/// ambient space containing the scheme.
pub fn min_hypersurface_degree(seq: &CharSeq) -> i64 {
    let widths = seq.widths();
    let p = i64::from(seq.codim);
    (0..)
        .find(|&j: &i64| widths.get(j as usize).copied().unwrap_or(0) < binomial_u64(p - 1 + j, j))
        .expect("widths are eventually zero")
}
