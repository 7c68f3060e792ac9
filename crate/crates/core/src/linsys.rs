//! Dimension bounds for complete linear systems on plane curves and the
//! classification of the extremal cases.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::liaison::{minimal_delta_seq, phi_rel, rel_degree, split_alpha, RelCharSeq};
use crate::macaulay::binomial_u64;
use crate::pointlab::curve::section_points;
use crate::pointlab::measure::{dim_linear_system, measure_rcs, phi_points, vanishing_forms};
use crate::pointlab::{Form, PlaneCurve, PointGroup, ProjPoint};

/// Maximal dimension `r(α)` of a complete linear system of degree `alpha`
/// on an integral plane curve of degree `d`.
pub fn r_alpha(d: i64, alpha: i64) -> Result<i64> {
    let (s, r) = split_alpha(d, alpha)?;
    Ok(if s >= d - 2 {
        alpha - (d - 1) * (d - 2) / 2
    } else if r <= s + 1 {
        s * (s + 3) / 2 - r
    } else {
        (s - 1) * (s + 2) / 2
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EqualPhiCase {
    /// `i >= s+d-r-1`: the tail `t >= d-r` agrees with `Δ`.
    Tail,
    /// `i <= s+d-r-3`: the head `t <= d-r-1` agrees with `Δ`.
    Head,
    /// `i = s+d-r-2`: head or tail.
    Either,
    /// `r > 0` and `i = s+d-3`: both functions equal `α` there, so the
    /// equality carries no information.
    Forced,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EqualPhiVerdict {
    pub alpha: i64,
    pub s: i64,
    pub r: i64,
    pub i: i64,
    pub case: EqualPhiCase,
    pub head_agrees: bool,
    pub tail_agrees: bool,
    /// `None` for [`EqualPhiCase::Forced`].
    pub prediction_holds: Option<bool>,
}

/// Which part of `rel` must coincide with the minimal sequence `Δ` of the
/// same degree, given `φ_Y(i) = φ_Δ(i)` for some `s <= i <= s+d-3`.
pub fn classify_equal_phi(rel: &RelCharSeq, i: i64) -> Result<EqualPhiVerdict> {
    let d = rel.d() as i64;
    let alpha = rel_degree(rel);
    let (s, r) = split_alpha(d, alpha)?;
    if i < s || i > s + d - 3 {
        return Err(Error::domain(format!(
            "degree {i} outside [{s}, {}]",
            s + d - 3
        )));
    }
    let delta = minimal_delta_seq(d, alpha)?;
    let (py, pd) = (phi_rel(rel, i)?, phi_rel(&delta, i)?);
    if py != pd {
        return Err(Error::HypothesisFails {
            degree: i,
            phi_y: py,
            phi_delta: pd,
        });
    }
    let split = (d - r) as usize;
    let head_agrees = rel.entries[..split] == delta.entries[..split];
    let tail_agrees = rel.entries[split..] == delta.entries[split..];
    let case = if r > 0 && i == s + d - 3 {
        EqualPhiCase::Forced
    } else if i >= s + d - r - 1 {
        EqualPhiCase::Tail
    } else if i <= s + d - r - 3 {
        EqualPhiCase::Head
    } else {
        EqualPhiCase::Either
    };
    let prediction_holds = match case {
        EqualPhiCase::Forced => None,
        EqualPhiCase::Tail => Some(tail_agrees),
        EqualPhiCase::Head => Some(head_agrees),
        EqualPhiCase::Either => Some(head_agrees || tail_agrees),
    };
    Ok(EqualPhiVerdict {
        alpha,
        s,
        r,
        i,
        case,
        head_agrees,
        tail_agrees,
        prediction_holds,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MaxCase {
    ResidualOfRPointsInDegreeSSection,
    ContainsDegreeSMinus1Section,
    EitherBoundaryCase,
    LargeDegreeRegime,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    /// `n_0 = s` and a degree-`s` form through `Y`.
    Residual { n0: i64, form: Form },
    /// `Y` contains `X ∩ {form = 0}` with `form` of degree `s - 1`. For
    /// `s = 1` the section is empty and there is no form.
    ContainsSection {
        tail_from: usize,
        form: Option<Form>,
        section: Vec<ProjPoint>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaxSysVerdict {
    pub d: i64,
    pub alpha: i64,
    pub s: i64,
    pub r: i64,
    pub dim: i64,
    pub r_alpha: i64,
    pub case_tag: MaxCase,
    pub relative: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

/// Limit on candidate subsets tried when looking for a contained section.
pub const SUBSET_SEARCH_CAP: usize = 100_000;

fn residual_certificate(y: &PointGroup, rel: &RelCharSeq, s: i64) -> Option<Certificate> {
    if rel.entries[0] != s {
        return None;
    }
    let form = vanishing_forms(y, s).into_iter().next()?;
    Some(Certificate::Residual { n0: s, form })
}

/// Visits the `k`-subsets of `0..n` in lex order until `f` returns true or
/// the cap is reached.
fn for_subsets(n: usize, k: usize, cap: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    if k > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    for _ in 0..cap {
        if f(&idx) {
            return true;
        }
        let Some(pos) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return false;
        };
        idx[pos] += 1;
        for j in pos + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
    false
}

/// Searches for a degree-`(s-1)` curve whose whole section of `X` lies in `Y`.
///
/// Candidate curves are the unique curves through `C(s+1, 2) - 1` points of `Y`.
fn contained_section(x: &PlaneCurve, y: &PointGroup, s: i64) -> Option<(Option<Form>, Vec<ProjPoint>)> {
    if s == 1 {
        return Some((None, Vec::new()));
    }
    let k = binomial_u64(s + 1, 2) as usize - 1;
    let want = ((s - 1) * i64::from(x.degree())) as usize;
    let pts = y.points();
    let mut found = None;
    for_subsets(pts.len(), k, SUBSET_SEARCH_CAP, |idx| {
        let sub = PointGroup::new(y.field(), idx.iter().map(|&i| pts[i]).collect())
            .expect("subset of distinct points");
        let forms = vanishing_forms(&sub, s - 1);
        if forms.len() != 1 {
            return false;
        }
        let g = &forms[0];
        if pts.iter().filter(|q| g.eval(q) == 0).count() < want {
            return false;
        }
        match section_points(x, g, true) {
            Ok(sec) if sec.points().iter().all(|q| y.contains(q)) => {
                found = Some((Some(g.clone()), sec.sorted().points().to_vec()));
                true
            }
            _ => false,
        }
    });
    found
}

fn section_certificate(
    x: &PlaneCurve,
    y: &PointGroup,
    rel: &RelCharSeq,
    delta: &RelCharSeq,
    s: i64,
    r: i64,
) -> Option<Certificate> {
    let from = (rel.d() as i64 - r) as usize;
    if rel.entries[from..] != delta.entries[from..] {
        return None;
    }
    let (form, section) = contained_section(x, y, s)?;
    Some(Certificate::ContainsSection {
        tail_from: from,
        form,
        section,
    })
}

/// Classifies a point group whose linear system has the maximal dimension `r(α)`.
pub fn classify_maximal(x: &PlaneCurve, y: &PointGroup) -> Result<MaxSysVerdict> {
    let d = i64::from(x.degree());
    let alpha = y.len() as i64;
    let (s, r) = split_alpha(d, alpha)?;
    let dim = dim_linear_system(x, y)?;
    let bound = r_alpha(d, alpha)?;
    if dim != bound {
        return Err(Error::NotMaximal { dim, bound });
    }
    let rel = measure_rcs(x, y)?;
    let mut verdict = MaxSysVerdict {
        d,
        alpha,
        s,
        r,
        dim,
        r_alpha: bound,
        case_tag: MaxCase::LargeDegreeRegime,
        relative: rel.entries.clone(),
        certificate: None,
    };
    if s >= d - 2 {
        return Ok(verdict);
    }
    let delta = minimal_delta_seq(d, alpha)?;
    let (tag, cert) = if r <= s {
        (MaxCase::ResidualOfRPointsInDegreeSSection, residual_certificate(y, &rel, s))
    } else if r >= s + 2 {
        (
            MaxCase::ContainsDegreeSMinus1Section,
            section_certificate(x, y, &rel, &delta, s, r),
        )
    } else {
        (
            MaxCase::EitherBoundaryCase,
            residual_certificate(y, &rel, s)
                .or_else(|| section_certificate(x, y, &rel, &delta, s, r)),
        )
    };
    let Some(cert) = cert else {
        return Err(Error::CertificateMissing(format!(
            "alpha = {alpha}, s = {s}, r = {r}, relative sequence {rel}"
        )));
    };
    verdict.case_tag = tag;
    verdict.certificate = Some(cert);
    Ok(verdict)
}

/// Re-checks a certificate against `X` and `Y` using ranks and point counts only.
pub fn verify_certificate(x: &PlaneCurve, y: &PointGroup, verdict: &MaxSysVerdict) -> Result<bool> {
    let s = verdict.s;
    Ok(match &verdict.certificate {
        None => verdict.case_tag == MaxCase::LargeDegreeRegime,
        Some(Certificate::Residual { n0, form }) => {
            *n0 == s
                && i64::from(form.degree()) == s
                && !form.is_zero()
                && y.points().iter().all(|q| form.eval(q) == 0)
                && phi_points(y, s - 1) == binomial_u64(s + 1, 2)
        }
        Some(Certificate::ContainsSection { form, section, .. }) => match form {
            None => s == 1 && section.is_empty(),
            Some(g) => {
                let sub = PointGroup::new(y.field(), section.clone())?;
                let sec = section_points(x, g, true)?;
                i64::from(g.degree()) == s - 1
                    && section.iter().all(|q| y.contains(q))
                    && sec.sorted() == sub.sorted()
                    && phi_points(&sub, s - 1) == binomial_u64(s + 1, 2) - 1
            }
        },
    })
}
