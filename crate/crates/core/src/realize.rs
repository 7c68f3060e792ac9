//! The filtration `Y_t`, box additions on relative sequences, and the
//! construction of point groups with a prescribed relative sequence.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::liaison::{minimal_delta_seq, phi_rel, RelCharSeq};
use crate::pointlab::construct::line_through;
use crate::pointlab::curve::rational_points;
use crate::pointlab::measure::{all_vanish, measure_rcs, vanishing_forms};
use crate::pointlab::{PlaneCurve, PointGroup, ProjPoint};
use crate::seqcalc::join;

/// `n_i >= i` and `n_i <= n_{i+1} <= n_i + 1`.
pub fn is_admissible(seq: &[i64]) -> bool {
    seq.iter().enumerate().all(|(i, &n)| n >= i as i64)
        && seq.windows(2).all(|w| w[0] <= w[1] && w[1] <= w[0] + 1)
}

fn admissible_over(rel: &RelCharSeq) -> bool {
    rel.entries.iter().zip(&rel.ambient.entries).all(|(n, m)| n >= m)
        && rel.entries.windows(2).all(|w| w[0] <= w[1] && w[1] <= w[0] + 1)
}

/// Raises the last entry equal to `level - 1` to `level`.
pub fn add_case(rel: &RelCharSeq, level: i64) -> Result<RelCharSeq> {
    let Some(i) = rel.entries.iter().rposition(|&n| n == level - 1) else {
        return Err(Error::InadmissibleAddition(format!(
            "no entry equals {} in ({rel})",
            level - 1
        )));
    };
    let mut out = rel.clone();
    out.entries[i] = level;
    if !admissible_over(&out) {
        return Err(Error::InadmissibleAddition(format!(
            "({out}) is not admissible"
        )));
    }
    Ok(out)
}

/// All admissible sequences of length `d` over the plane curve with
/// `Σ (n_i - i) <= max_degree`, in lex order.
pub fn enumerate_admissible(d: usize, max_degree: i64) -> Vec<Vec<i64>> {
    fn rec(d: usize, budget: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let i = cur.len();
        if i == d {
            out.push(cur.clone());
            return;
        }
        let lo = match cur.last() {
            Some(&prev) => prev.max(i as i64),
            None => 0,
        };
        let hi = match cur.last() {
            Some(&prev) => prev + 1,
            None => budget,
        };
        for n in lo..=hi {
            let cost = n - i as i64;
            if cost > budget {
                break;
            }
            cur.push(n);
            rec(d, budget - cost, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, max_degree, &mut Vec::new(), &mut out);
    out
}

fn rational_pool(x: &PlaneCurve, pool: Option<&[ProjPoint]>) -> Result<Vec<ProjPoint>> {
    match pool {
        Some(p) => Ok(p.iter().copied().filter(|q| x.contains(q)).collect()),
        None => rational_points(x),
    }
}

/// `Y_t`: rational points of `X` where every degree-`t` form through `Y` vanishes.
///
/// A form of degree below `t` times a power of a coordinate not vanishing
/// at the point gives one of degree `t`, so degree `t` alone suffices.
pub fn filtration_points(
    x: &PlaneCurve,
    y: &PointGroup,
    t: i64,
    pool: Option<&[ProjPoint]>,
) -> Result<PointGroup> {
    x.check_on_curve(y)?;
    let pool = rational_pool(x, pool)?;
    let forms = vanishing_forms(y, t);
    let mut pts: BTreeSet<ProjPoint> = y.points().iter().copied().collect();
    if t < 0 {
        pts.extend(pool);
    } else {
        pts.extend(pool.into_iter().filter(|q| all_vanish(&forms, q)));
    }
    PointGroup::new(x.field(), pts.into_iter().collect())
}

/// Every pool point `q` with `q ∈ Y_{level-2} \ Y_{level-1}`, in canonical order.
///
/// Adding such a `q` moves one basis element of `I_{Y/X}` from degree
/// `level - 1` to `level`, which is exactly [`add_case`] at `level`.
pub fn add_witnesses(
    x: &PlaneCurve,
    y: &PointGroup,
    level: i64,
    pool: Option<&[ProjPoint]>,
) -> Result<Vec<ProjPoint>> {
    x.check_on_curve(y)?;
    let pool = rational_pool(x, pool)?;
    let inside = vanishing_forms(y, level - 2);
    let outside = vanishing_forms(y, level - 1);
    if level - 1 < 0 {
        return Ok(Vec::new());
    }
    let mut out: Vec<ProjPoint> = pool
        .into_iter()
        .filter(|q| !y.contains(q))
        .filter(|q| level - 2 < 0 || all_vanish(&inside, q))
        .filter(|q| !all_vanish(&outside, q))
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// The smallest witness in canonical order, if the rational locus has one.
pub fn can_add_at_level(
    x: &PlaneCurve,
    y: &PointGroup,
    level: i64,
    pool: Option<&[ProjPoint]>,
) -> Result<Option<ProjPoint>> {
    Ok(add_witnesses(x, y, level, pool)?.into_iter().next())
}

/// Reduction chain from `target` to a staircase `n_i = n_0 + i`, lowering
/// the entry at the first plateau at each step.
pub fn reduction_chain(target: &[i64]) -> Vec<Vec<i64>> {
    let mut chain = vec![target.to_vec()];
    loop {
        let cur = chain.last().expect("non-empty chain");
        let Some(j) = (0..cur.len().saturating_sub(1)).find(|&i| cur[i + 1] == cur[i]) else {
            return chain;
        };
        let mut next = cur.clone();
        next[j] -= 1;
        chain.push(next);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RealizeOptions {
    /// Witnesses tried per step before backtracking.
    pub candidate_cap: usize,
    /// Total search nodes across one call.
    pub node_budget: usize,
    /// Distinct base configurations tried.
    pub base_attempts: usize,
}

impl Default for RealizeOptions {
    fn default() -> Self {
        RealizeOptions {
            candidate_cap: 6,
            node_budget: 4000,
            base_attempts: 12,
        }
    }
}

/// Lines meeting `X` in `d` distinct pool points, as point sets, found among
/// lines through pairs of pool points. Stops after `want` lines.
pub fn split_lines(
    x: &PlaneCurve,
    pool: &[ProjPoint],
    want: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<Vec<ProjPoint>> {
    let d = x.degree() as usize;
    let field = x.field();
    let mut pairs: Vec<(usize, usize)> = (0..pool.len())
        .flat_map(|a| (a + 1..pool.len()).map(move |b| (a, b)))
        .collect();
    pairs.shuffle(rng);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (a, b) in pairs.into_iter().take(200_000) {
        let line = line_through(field, &pool[a], &pool[b]);
        let on: Vec<ProjPoint> = pool.iter().copied().filter(|q| line.eval(q) == 0).collect();
        if on.len() == d && seen.insert(on.clone()) {
            out.push(on);
            if out.len() == want {
                break;
            }
        }
    }
    out
}

struct Search<'a> {
    x: &'a PlaneCurve,
    pool: &'a [ProjPoint],
    chain: Vec<Vec<i64>>,
    opts: RealizeOptions,
    nodes: usize,
    rng: ChaCha8Rng,
}

impl Search<'_> {
    /// `y` realizes `chain[k]`; extend it to `chain[0]`.
    fn dfs(&mut self, k: usize, y: PointGroup) -> Result<Option<PointGroup>> {
        if k == 0 {
            return Ok(Some(y));
        }
        if self.nodes >= self.opts.node_budget {
            return Ok(None);
        }
        self.nodes += 1;
        let next = &self.chain[k - 1];
        let cur = &self.chain[k];
        let j = (0..next.len()).find(|&i| next[i] != cur[i]).expect("chain steps differ");
        let level = next[j];
        let mut witnesses = add_witnesses(self.x, &y, level, Some(self.pool))?;
        witnesses.shuffle(&mut self.rng);
        witnesses.truncate(self.opts.candidate_cap);
        let want = next.clone();
        for q in witnesses {
            let y2 = y.with_point(q)?;
            if measure_rcs(self.x, &y2)?.entries != want {
                continue;
            }
            if let Some(done) = self.dfs(k - 1, y2)? {
                return Ok(Some(done));
            }
        }
        Ok(None)
    }
}

/// Picks `count` pairwise disjoint lines from `lines`, in shuffled order.
fn disjoint_lines(lines: &[Vec<ProjPoint>], count: usize, rng: &mut ChaCha8Rng) -> Option<Vec<ProjPoint>> {
    let mut order: Vec<&Vec<ProjPoint>> = lines.iter().collect();
    order.shuffle(rng);
    let mut used = BTreeSet::new();
    let mut taken = 0;
    for l in order {
        if taken == count {
            break;
        }
        if l.iter().all(|q| !used.contains(q)) {
            used.extend(l.iter().copied());
            taken += 1;
        }
    }
    (taken == count).then(|| used.into_iter().collect())
}

/// A point group on `X` whose relative sequence is `target`.
///
/// The staircase at the end of [`reduction_chain`] is realized by a union of
/// `n_0` disjoint totally split lines; the chain is then climbed back one box
/// at a time through [`add_witnesses`], backtracking when the rational locus
/// has no witness.
pub fn realize(
    x: &PlaneCurve,
    target: &[i64],
    seed: u64,
    pool: Option<&[ProjPoint]>,
    opts: RealizeOptions,
) -> Result<PointGroup> {
    let d = x.degree() as usize;
    if target.len() != d || !is_admissible(target) {
        return Err(Error::InadmissibleTarget(format!(
            "({}) for a curve of degree {d}",
            join(target)
        )));
    }
    let pool = rational_pool(x, pool)?;
    let pool: Vec<ProjPoint> = pool.into_iter().filter(|q| !x.is_singular_at(q)).collect();
    let chain = reduction_chain(target);
    let base = chain.last().expect("non-empty chain").clone();
    let lines_needed = base[0] as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lines = if lines_needed > 0 {
        split_lines(x, &pool, 8 * lines_needed + 8, &mut rng)
    } else {
        Vec::new()
    };
    let mut search = Search {
        x,
        pool: &pool,
        chain,
        opts,
        nodes: 0,
        rng: ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15),
    };
    let k = search.chain.len() - 1;
    let mut attempts = 0;
    for _ in 0..opts.base_attempts {
        let pts = if lines_needed == 0 {
            Vec::new()
        } else {
            match disjoint_lines(&lines, lines_needed, &mut rng) {
                Some(p) => p,
                None => break,
            }
        };
        attempts += 1;
        let y0 = PointGroup::new(x.field(), pts)?;
        if measure_rcs(x, &y0)?.entries != base {
            continue;
        }
        if let Some(y) = search.dfs(k, y0)? {
            return Ok(y);
        }
        if lines_needed == 0 || search.nodes >= opts.node_budget {
            break;
        }
    }
    Err(Error::RealizationExhausted {
        attempts: attempts.max(search.nodes),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanTrial {
    pub sequence: Vec<i64>,
    /// Degrees where `φ_Y` differs from `φ` of the section.
    pub disagreement: Vec<i64>,
    pub dominated: bool,
    pub connex: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub d: i64,
    pub s: i64,
    pub trials: Vec<ScanTrial>,
    pub violations: usize,
}

/// Draws `alpha` pool points, biased toward a line (`style % 3 == 1`) or a
/// conic (`style % 3 == 2`) through pool points.
pub fn biased_group(
    x: &PlaneCurve,
    pool: &[ProjPoint],
    alpha: usize,
    style: usize,
    rng: &mut ChaCha8Rng,
) -> Result<PointGroup> {
    let field = x.field();
    let mut chosen: Vec<ProjPoint> = Vec::new();
    let through = match style % 3 {
        1 => 2,
        2 => 5,
        _ => 0,
    };
    if through > 0 {
        let seeds: Vec<ProjPoint> = pool.choose_multiple(rng, through).copied().collect();
        let sub = PointGroup::new(field, seeds)?;
        let deg = if through == 2 { 1 } else { 2 };
        if let Some(g) = vanishing_forms(&sub, deg).into_iter().next() {
            let mut on: Vec<ProjPoint> = pool.iter().copied().filter(|q| g.eval(q) == 0).collect();
            on.shuffle(rng);
            on.truncate(alpha);
            chosen = on;
        }
    }
    let mut rest: Vec<ProjPoint> = pool.iter().copied().filter(|q| !chosen.contains(q)).collect();
    rest.shuffle(rng);
    chosen.extend(rest.into_iter().take(alpha - chosen.len()));
    PointGroup::new(field, chosen)
}

/// Compares `φ_Y` with `φ` of a degree-`s` section for random `Y` of degree
/// `s·d`: domination everywhere and a connex disagreement set.
pub fn conjecture_scan(x: &PlaneCurve, s: i64, trials: usize, seed: u64) -> Result<ScanReport> {
    let d = i64::from(x.degree());
    if s < 1 {
        return Err(Error::domain(format!("s must be positive, got {s}")));
    }
    let alpha = s * d;
    let pool: Vec<ProjPoint> = rational_points(x)?
        .into_iter()
        .filter(|q| !x.is_singular_at(q))
        .collect();
    if pool.len() < alpha as usize {
        return Err(Error::InsufficientPoints {
            found: pool.len(),
            requested: alpha as usize,
        });
    }
    let section = minimal_delta_seq(d, alpha)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(trials);
    let mut violations = 0;
    for t in 0..trials {
        let y = biased_group(x, &pool, alpha as usize, t, &mut rng)?;
        let rel = measure_rcs(x, &y)?;
        let top = alpha + s + d + 2;
        let mut disagreement = Vec::new();
        let mut dominated = true;
        for l in 0..=top {
            let (py, ps) = (phi_rel(&rel, l)?, phi_rel(&section, l)?);
            if py < ps {
                dominated = false;
            }
            if py != ps {
                disagreement.push(l);
            }
        }
        let connex = match (disagreement.first(), disagreement.last()) {
            (Some(a), Some(b)) => (b - a + 1) as usize == disagreement.len(),
            _ => true,
        };
        if !(dominated && connex) {
            violations += 1;
        }
        out.push(ScanTrial {
            sequence: rel.entries,
            disagreement,
            dominated,
            connex,
        });
    }
    Ok(ScanReport {
        d,
        s,
        trials: out,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pointlab::PrimeField;

    fn plane(e: &[i64]) -> RelCharSeq {
        RelCharSeq::over_plane_curve(e.to_vec()).unwrap()
    }

    #[test]
    fn admissibility() {
        assert!(is_admissible(&[0, 1, 2, 3, 4, 5]));
        assert!(is_admissible(&[3, 3, 4, 5, 6, 7]));
        assert!(!is_admissible(&[2, 4, 5]));
        assert!(!is_admissible(&[0, 0, 1]));
    }

    #[test]
    fn box_additions() {
        assert_eq!(add_case(&plane(&[0, 1, 2, 3]), 1).unwrap().entries, vec![1, 1, 2, 3]);
        assert_eq!(
            add_case(&plane(&[3, 3, 4, 4, 5, 5]), 5).unwrap().entries,
            vec![3, 3, 4, 5, 5, 5]
        );
        assert!(matches!(
            add_case(&plane(&[0, 1, 2, 3]), 3),
            Err(Error::InadmissibleAddition(_))
        ));
        assert!(add_case(&plane(&[0, 1, 2, 3]), 9).is_err());
    }

    #[test]
    fn chains_end_on_staircases() {
        let chain = reduction_chain(&[3, 3, 4, 5, 6, 7]);
        assert_eq!(chain.last().unwrap(), &vec![2, 3, 4, 5, 6, 7]);
        for t in enumerate_admissible(5, 10) {
            let chain = reduction_chain(&t);
            for w in chain.windows(2) {
                assert!(is_admissible(&w[1]));
                let j = (0..5).find(|&i| w[0][i] != w[1][i]).unwrap();
                let raised = add_case(&plane(&w[1]), w[0][j]).unwrap();
                assert_eq!(raised.entries, w[0]);
            }
            let base = chain.last().unwrap();
            assert!((0..5).all(|i| base[i] == base[0] + i as i64));
        }
    }

    #[test]
    fn admissible_counts() {
        assert_eq!(enumerate_admissible(4, 10).len(), 19);
        assert_eq!(enumerate_admissible(5, 10).len(), 26);
        for t in enumerate_admissible(4, 10) {
            assert!(is_admissible(&t));
        }
    }

    #[test]
    fn filtration_bounds() {
        let f = PrimeField::new(101).unwrap();
        let x = PlaneCurve::fermat(f, 4);
        let all = rational_points(&x).unwrap();
        let y = PointGroup::new(f, all[..3].to_vec()).unwrap();
        assert_eq!(filtration_points(&x, &y, 0, None).unwrap().len(), all.len());
        assert_eq!(filtration_points(&x, &y, 5, None).unwrap().sorted(), y.sorted());
        for t in 0..5 {
            let a = filtration_points(&x, &y, t, None).unwrap();
            let b = filtration_points(&x, &y, t + 1, None).unwrap();
            assert!(b.points().iter().all(|q| a.contains(q)));
        }
    }

    #[test]
    fn empty_group_accepts_any_point() {
        let f = PrimeField::new(101).unwrap();
        let x = PlaneCurve::fermat(f, 4);
        let q = can_add_at_level(&x, &PointGroup::empty(f), 1, None).unwrap().unwrap();
        let y = PointGroup::new(f, vec![q]).unwrap();
        assert_eq!(measure_rcs(&x, &y).unwrap().entries, vec![1, 1, 2, 3]);
    }
}
