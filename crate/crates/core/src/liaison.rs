//! Relative characteristic sequences of a hypersurface section `Y` of an ACM
//! scheme `X`, and the liaison calculus acting on them.

use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::macaulay::{is_zero_sequence, GrowthBoundary};
use crate::seqcalc::{is_gorenstein_symmetric, join, phi_from_charseq, CharSeq};

/// Degrees `(n_0, ..., n_{d-1})` of a free basis of `I_{Y/X}`, together with
/// the sequence `(m_i)` of `X`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RelCharSeq {
    pub entries: Vec<i64>,
    pub ambient: CharSeq,
}

impl RelCharSeq {
    /// Requires matching length, non-decreasing entries and `n_i >= m_i`.
    pub fn new(entries: Vec<i64>, ambient: CharSeq) -> Result<Self> {
        let rel = RelCharSeq { entries, ambient };
        rel.check_shape()?;
        if let Some(i) = (0..rel.entries.len()).find(|&i| rel.entries[i] < rel.ambient.entries[i]) {
            return Err(Error::Malformed(format!(
                "n_{i} = {} is below m_{i} = {}",
                rel.entries[i], rel.ambient.entries[i]
            )));
        }
        Ok(rel)
    }

    /// Relative sequence over the plane curve of degree `entries.len()`.
    pub fn over_plane_curve(entries: Vec<i64>) -> Result<Self> {
        let d = entries.len();
        Self::new(entries, CharSeq::hypersurface(d, 2))
    }

    /// The sequence of `Y = ∅`, namely `n = m`.
    pub fn empty(ambient: CharSeq) -> Self {
        RelCharSeq {
            entries: ambient.entries.clone(),
            ambient,
        }
    }

    fn check_shape(&self) -> Result<()> {
        if self.entries.len() != self.ambient.entries.len() {
            return Err(Error::Malformed(format!(
                "{} relative entries for an ambient of degree {}",
                self.entries.len(),
                self.ambient.entries.len()
            )));
        }
        if self.entries.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Malformed("relative entries must be non-decreasing".into()));
        }
        Ok(())
    }

    pub fn d(&self) -> usize {
        self.entries.len()
    }

    /// Whether some entry sits below the ambient entry of the same index.
    pub fn below_ambient(&self) -> bool {
        self.entries
            .iter()
            .zip(&self.ambient.entries)
            .any(|(n, m)| n < m)
    }
}

impl std::fmt::Display for RelCharSeq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&join(&self.entries))
    }
}

/// `deg Y = Σ (n_i - m_i)`.
pub fn rel_degree(rel: &RelCharSeq) -> i64 {
    rel.entries
        .iter()
        .zip(&rel.ambient.entries)
        .map(|(n, m)| n - m)
        .sum()
}

/// Absolute sequence of `Y`: the sorted union of the intervals `[m_i, n_i - 1]`.
pub fn abs_from_rel(rel: &RelCharSeq) -> Result<CharSeq> {
    if rel.ambient.cone_dim == 0 {
        return Err(Error::DimensionMismatch(
            "ambient of cone dimension 0 has no hypersurface sections".into(),
        ));
    }
    let mut entries: Vec<i64> = rel
        .entries
        .iter()
        .zip(&rel.ambient.entries)
        .flat_map(|(&n, &m)| m..n)
        .collect();
    entries.sort_unstable();
    CharSeq::new(entries, rel.ambient.cone_dim - 1, rel.ambient.codim + 1)
}

fn count_le(v: &[i64], i: i64) -> usize {
    v.partition_point(|&x| x <= i)
}

/// Inverse of [`abs_from_rel`]: `d_i = c_i - l'_i` and `n_j = min{i : d_i > j}`.
pub fn rel_from_abs(ambient: &CharSeq, abs_y: &CharSeq) -> Result<RelCharSeq> {
    if abs_y.cone_dim + 1 != ambient.cone_dim {
        return Err(Error::DimensionMismatch(format!(
            "Y has cone_dim {} but X has cone_dim {}",
            abs_y.cone_dim, ambient.cone_dim
        )));
    }
    let d = ambient.degree();
    let m = &ambient.entries;
    let mut y = abs_y.entries.clone();
    y.sort_unstable();
    let lo = m.first().copied().unwrap_or(0).min(y.first().copied().unwrap_or(0));
    let hi = m.last().copied().unwrap_or(0).max(y.last().copied().unwrap_or(0)) + 1;

    let mut widths = Vec::new();
    let mut n = Vec::with_capacity(d);
    let mut prev_d = 0usize;
    for i in lo..=hi {
        let c = count_le(m, i);
        let w = y.iter().filter(|&&v| v == i).count();
        if w > c {
            return Err(Error::InconsistentPair(format!(
                "Y has {w} basis elements in degree {i} but X only {c} up to it"
            )));
        }
        let di = c - w;
        if di < prev_d {
            return Err(Error::InconsistentPair(format!(
                "d_i decreases at degree {i}"
            )));
        }
        while n.len() < di {
            n.push(i);
        }
        prev_d = di;
        if i >= 0 {
            widths.push(w as u64);
        }
    }
    if n.len() != d {
        return Err(Error::InconsistentPair("d_i never reaches the degree of X".into()));
    }
    let rel = RelCharSeq {
        entries: n,
        ambient: ambient.clone(),
    };
    if abs_from_rel(&rel)?.entries != y {
        return Err(Error::InconsistentPair(format!(
            "no relative sequence reproduces ({})",
            join(&y)
        )));
    }
    if !widths.is_empty() && !is_zero_sequence(&widths, 0, GrowthBoundary::Cone)?.holds {
        return Err(Error::InconsistentPair(
            "the widths c_i - d_i are not a 0-sequence".into(),
        ));
    }
    Ok(rel)
}

/// Residual of `Y` in a section of `X` by a hypersurface of degree `s`:
/// `n'_i = m_{d-1} + s - n_{d-1-i}`.
///
/// Sequence-level validity does not imply that the link is realized geometrically.
pub fn link(rel: &RelCharSeq, s: i64) -> Result<RelCharSeq> {
    if s < 1 {
        return Err(Error::domain(format!("s must be positive, got {s}")));
    }
    if !is_gorenstein_symmetric(&rel.ambient) {
        return Err(Error::domain("liaison needs a Gorenstein-symmetric ambient"));
    }
    let Some(top) = rel.ambient.last() else {
        return Ok(rel.clone());
    };
    let d = rel.d();
    let m = &rel.ambient.entries;
    let entries: Vec<i64> = (0..d).map(|i| top + s - rel.entries[d - 1 - i]).collect();
    if let Some(i) = (0..d).find(|&i| entries[i] < m[i]) {
        return Err(Error::InvalidLiaisonDegree {
            index: i,
            value: entries[i],
            minimum: m[i],
        });
    }
    Ok(RelCharSeq {
        entries,
        ambient: rel.ambient.clone(),
    })
}

/// Adds a disjoint section of degree `s`: `n_i + s`.
pub fn add_section(rel: &RelCharSeq, s: i64) -> Result<RelCharSeq> {
    if s < 1 {
        return Err(Error::domain(format!("s must be positive, got {s}")));
    }
    Ok(RelCharSeq {
        entries: rel.entries.iter().map(|n| n + s).collect(),
        ambient: rel.ambient.clone(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapSplit {
    /// First index `i` with `n_i > n_{i-1} + 1`.
    pub index: usize,
    /// `s = d - i`, the degree of the component carrying `Y''`.
    pub shift: i64,
    /// `(n_0 - s, ..., n_{i-1} - s)` over a degree-`i` component.
    pub inner: RelCharSeq,
    /// `(n_i, ..., n_{d-1})` over a degree-`(d - i)` component.
    pub outer: RelCharSeq,
    /// `inner` has entries below its ambient: that part is empty or degenerate.
    pub inner_below_ambient: bool,
}

/// Splits at the first gap. The components are given hypersurface sequences
/// with the cone dimension and codimension of `X`.
pub fn split_on_gap(rel: &RelCharSeq) -> Option<GapSplit> {
    let n = &rel.entries;
    let i = (1..n.len()).find(|&i| n[i] > n[i - 1] + 1)?;
    let d = n.len();
    let s = (d - i) as i64;
    let ambient = |k: usize| CharSeq {
        entries: (0..k as i64).collect(),
        cone_dim: rel.ambient.cone_dim,
        codim: rel.ambient.codim,
    };
    let inner = RelCharSeq {
        entries: n[..i].iter().map(|v| v - s).collect(),
        ambient: ambient(i),
    };
    let outer = RelCharSeq {
        entries: n[i..].to_vec(),
        ambient: ambient(d - i),
    };
    Some(GapSplit {
        index: i,
        shift: s,
        inner_below_ambient: inner.below_ambient(),
        inner,
        outer,
    })
}

/// `α = s·d - r` with `0 <= r < d`.
pub fn split_alpha(d: i64, alpha: i64) -> Result<(i64, i64)> {
    if d < 1 || alpha < 1 {
        return Err(Error::domain(format!(
            "need d >= 1 and alpha >= 1, got d = {d}, alpha = {alpha}"
        )));
    }
    let s = (alpha + d - 1) / d;
    Ok((s, s * d - alpha))
}

/// Sequence of the residual of `r` aligned points in a degree-`s` section of a
/// plane curve of degree `d`: `(s, ..., s+d-1)` with the last `r` entries lowered by one.
pub fn minimal_delta_seq(d: i64, alpha: i64) -> Result<RelCharSeq> {
    let (s, r) = split_alpha(d, alpha)?;
    let entries = (0..d)
        .map(|i| s + i - i64::from(i >= d - r))
        .collect();
    RelCharSeq::new(entries, CharSeq::hypersurface(d as usize, 2))
}

/// `φ_Y(l)` computed from the absolute sequence of `Y`.
pub fn phi_rel(rel: &RelCharSeq, l: i64) -> Result<u64> {
    Ok(phi_from_charseq(&abs_from_rel(rel)?, l))
}

/// Arithmetic genus `Σ_{l >= 1} (α - φ(l))` of an ACM curve from the
/// sequence of its hyperplane section, a point group of degree `alpha`.
pub fn genus_acm_curve(section: &CharSeq, alpha: i64) -> Result<u64> {
    if section.cone_dim != 1 {
        return Err(Error::DimensionMismatch(format!(
            "hyperplane section must be a point group, got cone_dim {}",
            section.cone_dim
        )));
    }
    if section.degree() as i64 != alpha {
        return Err(Error::domain(format!(
            "section has degree {} but alpha = {alpha}",
            section.degree()
        )));
    }
    // α - φ(l) = #{i : m_i > l}, so the sum is Σ_i (m_i - 1)_+.
    Ok(section.entries.iter().map(|&m| (m - 1).max(0) as u64).sum())
}

/// Genus of a curve whose hyperplane section has relative sequence `rel`.
pub fn genus_from_rel(rel: &RelCharSeq) -> Result<u64> {
    genus_acm_curve(&abs_from_rel(rel)?, rel_degree(rel))
}

/// `G(α, d) = 1 + (s·d/2)(s + d - 4) - r(s + d - r/2 - 5/2)`.
pub fn halphen_bound(alpha: i64, d: i64) -> Result<i64> {
    let (s, r) = split_alpha(d, alpha)?;
    let q = |n: i64| Ratio::from_integer(i128::from(n));
    let half = Ratio::new(1i128, 2);
    let g = q(1) + q(s * d) * half * q(s + d - 4)
        - q(r) * (q(s + d) - q(r) * half - q(5) * half);
    if !g.is_integer() {
        return Err(Error::NonIntegralBound(g.to_string()));
    }
    g.to_integer()
        .to_i64()
        .ok_or_else(|| Error::domain("bound overflows i64"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plane(e: &[i64]) -> RelCharSeq {
        RelCharSeq::over_plane_curve(e.to_vec()).unwrap()
    }

    #[test]
    fn degrees() {
        assert_eq!(rel_degree(&plane(&[0, 1, 2, 3])), 0);
        assert_eq!(rel_degree(&plane(&[2, 3, 4, 5])), 8);
        assert_eq!(rel_degree(&plane(&[1, 2, 3, 4])), 4);
        assert_eq!(rel_degree(&plane(&[3, 3, 4, 4, 5, 5])), 9);
    }

    #[test]
    fn absolute_sequences() {
        assert!(abs_from_rel(&plane(&[0, 1, 2, 3])).unwrap().is_empty());
        assert_eq!(
            abs_from_rel(&plane(&[1, 2, 3, 4])).unwrap().entries,
            vec![0, 1, 2, 3]
        );
        let a = abs_from_rel(&plane(&[3, 3, 4, 4, 5, 5])).unwrap();
        assert_eq!(a.entries, vec![0, 1, 1, 2, 2, 2, 3, 3, 4]);
        assert_eq!((a.cone_dim, a.codim), (1, 2));
    }

    #[test]
    fn relative_from_absolute() {
        let q = CharSeq::hypersurface(4, 2);
        let empty = CharSeq::new(vec![], 1, 2).unwrap();
        assert_eq!(rel_from_abs(&q, &empty).unwrap().entries, vec![0, 1, 2, 3]);
        let aligned = CharSeq::new(vec![0, 1, 2, 3], 1, 2).unwrap();
        assert_eq!(rel_from_abs(&q, &aligned).unwrap().entries, vec![1, 2, 3, 4]);
        let ci = CharSeq::new(vec![0, 1, 1, 2], 1, 2).unwrap();
        assert_eq!(rel_from_abs(&q, &ci).unwrap().entries, vec![2, 2, 3, 3]);

        let too_wide = CharSeq::new(vec![0, 1, 1, 1], 1, 3).unwrap();
        assert!(matches!(rel_from_abs(&q, &too_wide), Err(Error::InconsistentPair(_))));
        let gap = CharSeq::new(vec![3, 4], 1, 2).unwrap();
        assert!(matches!(rel_from_abs(&q, &gap), Err(Error::InconsistentPair(_))));
    }

    #[test]
    fn liaison_examples() {
        assert_eq!(link(&plane(&[2, 3, 4, 5]), 2).unwrap().entries, vec![0, 1, 2, 3]);
        assert_eq!(link(&plane(&[2, 2, 3, 3]), 2).unwrap().entries, vec![2, 2, 3, 3]);
        assert_eq!(link(&plane(&[1, 2, 3, 4]), 1).unwrap().entries, vec![0, 1, 2, 3]);
        assert!(matches!(
            link(&plane(&[2, 2, 3, 3]), 1),
            Err(Error::InvalidLiaisonDegree { .. })
        ));
        let bad_ambient = RelCharSeq::new(vec![1, 1, 1], CharSeq::new(vec![0, 1, 1], 1, 2).unwrap())
            .unwrap();
        assert!(link(&bad_ambient, 2).is_err());
    }

    #[test]
    fn sections() {
        assert_eq!(add_section(&plane(&[2, 2, 3, 3]), 1).unwrap().entries, vec![3, 3, 4, 4]);
        assert_eq!(add_section(&plane(&[0, 1, 2]), 2).unwrap().entries, vec![2, 3, 4]);
        assert!(add_section(&plane(&[0, 1, 2]), 0).is_err());
    }

    #[test]
    fn gaps() {
        assert!(split_on_gap(&plane(&[1, 2, 3, 4])).is_none());
        let g = split_on_gap(&plane(&[1, 2, 3, 6, 7, 8])).unwrap();
        assert_eq!((g.index, g.shift), (3, 3));
        assert_eq!(g.outer.entries, vec![6, 7, 8]);
        assert_eq!(g.inner.entries, vec![-2, -1, 0]);
        assert!(g.inner_below_ambient);
        let g = split_on_gap(&plane(&[2, 3, 5, 6])).unwrap();
        assert_eq!(g.outer.entries, vec![5, 6]);
        assert_eq!(g.inner.entries, vec![0, 1]);
        assert!(!g.inner_below_ambient);
        assert_eq!(rel_degree(&g.inner), 0);
    }

    #[test]
    fn minimal_sequences() {
        assert_eq!(minimal_delta_seq(4, 8).unwrap().entries, vec![2, 3, 4, 5]);
        assert_eq!(minimal_delta_seq(6, 13).unwrap().entries, vec![3, 3, 4, 5, 6, 7]);
        assert_eq!(minimal_delta_seq(4, 7).unwrap().entries, vec![2, 3, 4, 4]);
        assert!(minimal_delta_seq(4, 0).is_err());
        for d in 1..9 {
            for alpha in 1..40 {
                assert_eq!(rel_degree(&minimal_delta_seq(d, alpha).unwrap()), alpha);
            }
        }
    }

    #[test]
    fn phi_of_relative() {
        assert_eq!(phi_rel(&plane(&[0, 1, 2]), 5).unwrap(), 0);
        let delta = minimal_delta_seq(4, 7).unwrap();
        assert_eq!(phi_rel(&delta, 2).unwrap(), 5);
        assert_eq!(phi_rel(&delta, 50).unwrap(), 7);
    }

    #[test]
    fn genus_and_halphen() {
        let line = CharSeq::new(vec![0], 1, 2).unwrap();
        assert_eq!(genus_acm_curve(&line, 1).unwrap(), 0);
        let ci = CharSeq::new(vec![0, 1, 1, 2], 1, 2).unwrap();
        assert_eq!(genus_acm_curve(&ci, 4).unwrap(), 1);
        assert_eq!(genus_from_rel(&minimal_delta_seq(3, 6).unwrap()).unwrap(), 4);
        assert_eq!(halphen_bound(6, 3).unwrap(), 4);
        assert_eq!(halphen_bound(5, 3).unwrap(), 2);
        assert_eq!(genus_from_rel(&minimal_delta_seq(3, 5).unwrap()).unwrap(), 2);
        for d in 1..12 {
            assert_eq!(halphen_bound(d, d).unwrap(), (d - 1) * (d - 2) / 2);
        }
        assert!(genus_acm_curve(&ci, 5).is_err());
    }
}
