//! Cross-checks between the sequence calculus and the geometry engine.
//!
//! Every check runs a seeded corpus and collects failures instead of
//! panicking, so the same code backs the acceptance tests and `charseq verify`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::liaison::{
    add_section, genus_from_rel, halphen_bound, link, minimal_delta_seq, phi_rel, rel_degree,
};
use crate::linsys::{classify_maximal, r_alpha, verify_certificate, MaxCase};
use crate::pointlab::construct::{
    generic_points, grid_curve, points_on_conic, points_on_line, random_conic, random_form,
    random_lines, random_smooth_curve, GridSection,
};
use crate::pointlab::curve::{random_points_on_curve, rational_points};
use crate::pointlab::measure::{dim_linear_system, measure_abs, measure_rcs, phi_points};
use crate::pointlab::{Form, PlaneCurve, PointGroup, PrimeField, ProjPoint};
use crate::realize::{
    add_case, add_witnesses, biased_group, conjecture_scan, enumerate_admissible,
    filtration_points, realize, RealizeOptions,
};
use crate::seqcalc::{
    charseq_from_phi, ci_charseq, is_gorenstein_symmetric, validate_abs, CharSeq, CheckStatus,
    HilbertFn,
};

/// Corpus size: `Full` is the acceptance scale, `Quick` a smoke run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    Quick,
    Full,
}

impl Scale {
    fn pick(self, quick: usize, full: usize) -> usize {
        match self {
            Scale::Quick => quick,
            Scale::Full => full,
        }
    }
}

/// Failures kept per report; the count is always exact.
const KEPT_FAILURES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub id: u32,
    pub name: &'static str,
    pub cases: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        self.failed == 0 && self.cases > 0
    }
}

struct Tally {
    cases: usize,
    failed: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            cases: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    fn fail(&mut self, msg: String) {
        self.failed += 1;
        if self.failures.len() < KEPT_FAILURES {
            self.failures.push(msg);
        }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.fail(msg());
        }
    }

    /// Runs a fallible case; an error counts as a failure.
    fn run(&mut self, label: impl FnOnce() -> String, f: impl FnOnce() -> Result<Option<String>>) {
        self.cases += 1;
        match f() {
            Ok(None) => {}
            Ok(Some(why)) => self.fail(format!("{}: {why}", label())),
            Err(e) => self.fail(format!("{}: {e}", label())),
        }
    }

    fn report(self, id: u32, name: &'static str) -> CriterionReport {
        CriterionReport {
            id,
            name,
            cases: self.cases,
            failed: self.failed,
            failures: self.failures,
        }
    }
}

fn field(p: u64) -> PrimeField {
    PrimeField::new(p).expect("fixed prime")
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Option<String> {
    (got != want).then(|| format!("{what}: got {got:?}, expected {want:?}"))
}

/// A fixed curve of degree `d` over `F_p` with no singular rational point.
pub fn fixed_curve(p: u64, d: u32, seed: u64) -> Result<PlaneCurve> {
    random_smooth_curve(field(p), d, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn smooth_pool(x: &PlaneCurve) -> Result<Vec<ProjPoint>> {
    Ok(rational_points(x)?
        .into_iter()
        .filter(|q| !x.is_singular_at(q))
        .collect())
}

// 1. Round trip between sequences and Hilbert functions.

fn round_trip_one(entries: &[i64], cone_dim: u32) -> Result<Option<String>> {
    let seq = CharSeq::new(entries.to_vec(), cone_dim, 1)?;
    let len = HilbertFn::witness_len(&seq);
    let phi = HilbertFn::from_charseq(&seq, len);
    let back = charseq_from_phi(&HilbertFn::new(phi.values.clone(), cone_dim))?;
    if back.entries != seq.entries || back.cone_dim != cone_dim {
        return Ok(Some(format!("recovered ({back})")));
    }
    let again = HilbertFn::from_charseq(&back, len);
    Ok(expect_eq("phi", again.values, phi.values))
}

fn non_decreasing(len: usize, max: i64, f: &mut impl FnMut(&[i64])) {
    fn rec(len: usize, lo: i64, max: i64, cur: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
        if cur.len() == len {
            f(cur);
            return;
        }
        for v in lo..=max {
            cur.push(v);
            rec(len, v, max, cur, f);
            cur.pop();
        }
    }
    rec(len, 0, max, &mut Vec::with_capacity(len), f);
}

/// All non-decreasing sequences with entries in `0..=15` up to length 6 (5
/// in quick mode), then for longer sequences up to length 12 those with
/// steps in `{0, 1}` and `m_0 <= 3`; each for `cone_dim` in `0..=4`.
pub fn check_round_trip(scale: Scale) -> CriterionReport {
    const MAX_ENTRY: i64 = 15;
    let full_len = scale.pick(4, 6);
    let max_len = scale.pick(8, 12);
    let mut t = Tally::new();
    for cone_dim in 0..=4u32 {
        let mut one = |e: &[i64]| {
            t.run(|| format!("({}) cone_dim {cone_dim}", crate::seqcalc::join(e)), || {
                round_trip_one(e, cone_dim)
            })
        };
        for len in 0..=full_len {
            non_decreasing(len, MAX_ENTRY, &mut one);
        }
        for len in full_len + 1..=max_len {
            for start in 0..=3i64 {
                for mask in 0u32..1 << (len - 1) {
                    let mut e = vec![start];
                    for k in 0..len - 1 {
                        e.push(e[k] + i64::from(mask >> k & 1));
                    }
                    if e[len - 1] <= MAX_ENTRY {
                        one(&e);
                    }
                }
            }
        }
    }
    t.report(1, "sequence / Hilbert function round trip")
}

// 2. Width constraints on measured point groups.

/// Distinct union of aligned, conic and generic points, in that order.
fn mixed_group<R: Rng>(
    f: PrimeField,
    aligned: usize,
    conic: usize,
    generic: usize,
    rng: &mut R,
) -> Result<PointGroup> {
    let mut pts: Vec<ProjPoint> = Vec::new();
    let parts = [
        points_on_line(f, aligned, rng)?,
        points_on_conic(f, conic, rng)?,
        generic_points(f, generic, rng),
    ];
    for q in parts.iter().flat_map(|g| g.points().iter().copied()) {
        if !pts.contains(&q) {
            pts.push(q);
        }
    }
    PointGroup::new(f, pts)
}

pub fn check_widths(scale: Scale) -> CriterionReport {
    let f = field(10007);
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut t = Tally::new();
    for k in 0..scale.pick(24, 240) {
        let (a, c, g) = match k % 4 {
            0 => (0, 0, rng.gen_range(1..=15)),
            1 => (rng.gen_range(2..=9), 0, rng.gen_range(0..=6)),
            2 => (0, rng.gen_range(3..=10), rng.gen_range(0..=5)),
            _ => (rng.gen_range(2..=6), rng.gen_range(3..=7), rng.gen_range(0..=4)),
        };
        t.run(
            || format!("group {k} (aligned {a}, conic {c}, generic {g})"),
            || {
                let y = mixed_group(f, a, c, g, &mut rng)?;
                let seq = measure_abs(&y)?;
                let collinear = phi_points(&y, 1) <= 2;
                let report = validate_abs(&seq);
                for check in &report.checks {
                    let ok = match check.status {
                        CheckStatus::Pass => true,
                        CheckStatus::Degenerate => collinear && check.name == "l_1 = p",
                        CheckStatus::Fail => false,
                    };
                    if !ok {
                        return Ok(Some(format!(
                            "({seq}): {} is {:?} {}",
                            check.name, check.status, check.detail
                        )));
                    }
                }
                Ok(None)
            },
        );
    }
    t.report(2, "width constraints on measured groups")
}

// 3. Complete intersections.

pub fn check_complete_intersections(scale: Scale) -> CriterionReport {
    let f = field(10007);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut t = Tally::new();
    for d1 in 2..=4u32 {
        for d2 in d1..=4u32 {
            for rep in 0..scale.pick(1, 3) {
                t.run(
                    || format!("CI({d1},{d2}) #{rep}"),
                    || {
                        let lines = random_lines(f, d1 as usize, &mut rng);
                        let grid = grid_curve(f, d2, &lines, &mut rng)?;
                        let measured = measure_abs(&grid.section)?;
                        let expected = ci_charseq(&[d1, d2], 1)?;
                        if !is_gorenstein_symmetric(&measured) {
                            return Ok(Some(format!("({measured}) is not symmetric")));
                        }
                        Ok(expect_eq("sequence", measured.entries, expected.entries))
                    },
                );
            }
        }
    }
    t.report(3, "complete intersections")
}

// 4. Liaison.

/// The cutter used for a degree-`s` section: a line, a conic, or both.
fn cutter_factors<R: Rng>(f: PrimeField, s: i64, rng: &mut R) -> Vec<Form> {
    match s {
        1 => vec![random_form(f, 1, rng)],
        2 => vec![random_conic(f, rng)],
        _ => vec![random_form(f, 1, rng), random_conic(f, rng)],
    }
}

fn split_section<R: Rng>(g: &GridSection, rng: &mut R) -> Result<(PointGroup, PointGroup)> {
    let f = g.curve.field();
    let (a, b): (Vec<ProjPoint>, Vec<ProjPoint>) =
        g.section.points().iter().partition(|_| rng.gen_bool(0.5));
    Ok((PointGroup::new(f, a)?, PointGroup::new(f, b)?))
}

pub fn check_liaison(scale: Scale) -> CriterionReport {
    let f = field(10007);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut t = Tally::new();
    for d in 3..=6i64 {
        for s in 1..=3i64 {
            let factors = cutter_factors(f, s, &mut rng);
            let grid = match grid_curve(f, d as u32, &factors, &mut rng) {
                Ok(g) => g,
                Err(e) => {
                    t.check(false, || format!("d={d} s={s}: {e}"));
                    continue;
                }
            };
            for k in 0..scale.pick(3, 20) {
                t.run(
                    || format!("d={d} s={s} split {k}"),
                    || {
                        let (y, y2) = split_section(&grid, &mut rng)?;
                        let (a, b) = (measure_rcs(&grid.curve, &y)?, measure_rcs(&grid.curve, &y2)?);
                        if rel_degree(&a) + rel_degree(&b) != s * d {
                            return Ok(Some(format!("degrees {} + {}", rel_degree(&a), rel_degree(&b))));
                        }
                        let linked = link(&a, s)?;
                        if link(&linked, s)? != a {
                            return Ok(Some(format!("link is not an involution on ({a})")));
                        }
                        Ok(expect_eq("linked sequence", linked.entries, b.entries))
                    },
                );
            }
        }
    }
    t.report(4, "liaison")
}

// 5. Adding a disjoint section.

pub fn check_section_shift(scale: Scale) -> CriterionReport {
    let f = field(10007);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut t = Tally::new();
    for k in 0..scale.pick(6, 50) {
        let d = 3 + (k % 3) as i64;
        let s = 1 + ((k / 3) % 2) as i64;
        t.run(
            || format!("pair {k} (d={d}, s={s})"),
            || {
                let factors = if s == 2 && k % 2 == 0 {
                    vec![random_conic(f, &mut rng)]
                } else {
                    random_lines(f, s as usize, &mut rng)
                };
                let grid = grid_curve(f, d as u32, &factors, &mut rng)?;
                let n = rng.gen_range(1..=2 * d as usize);
                let extra = random_points_on_curve(&grid.curve, n + 8, rng.gen(), true)?;
                let off: Vec<ProjPoint> = extra
                    .points()
                    .iter()
                    .copied()
                    .filter(|q| grid.cutter.eval(q) != 0)
                    .take(n)
                    .collect();
                let y = PointGroup::new(f, off)?;
                let rel = measure_rcs(&grid.curve, &y)?;
                let sum = measure_rcs(&grid.curve, &y.union(&grid.section)?)?;
                Ok(expect_eq("sequence", sum.entries, add_section(&rel, s)?.entries))
            },
        );
    }
    t.report(5, "section shift")
}

// 6. Minimality of Δ and the genus bound.

pub fn check_minimality(scale: Scale) -> CriterionReport {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut t = Tally::new();
    let per_cell = scale.pick(10, 200);
    for d in 2..=6i64 {
        let (x, pool) = match fixed_curve(101, d as u32, 60 + d as u64).and_then(|x| {
            let pool = smooth_pool(&x)?;
            Ok((x, pool))
        }) {
            Ok(v) => v,
            Err(e) => {
                t.check(false, || format!("curve of degree {d}: {e}"));
                continue;
            }
        };
        for alpha in 1..=3 * d {
            let delta = match minimal_delta_seq(d, alpha) {
                Ok(v) => v,
                Err(e) => {
                    t.check(false, || format!("d={d} alpha={alpha}: {e}"));
                    continue;
                }
            };
            for k in 0..per_cell {
                t.run(
                    || format!("d={d} alpha={alpha} group {k}"),
                    || {
                        let y = biased_group(&x, &pool, alpha as usize, k, &mut rng)?;
                        let rel = measure_rcs(&x, &y)?;
                        let mut equal = true;
                        for l in 0..=alpha + d + 2 {
                            let (py, pd) = (phi_rel(&rel, l)?, phi_rel(&delta, l)?);
                            if py < pd {
                                return Ok(Some(format!("({rel}): phi({l}) = {py} < {pd}")));
                            }
                            equal &= py == pd;
                        }
                        Ok((equal != (rel == delta))
                            .then(|| format!("({rel}): equality everywhere is {equal}")))
                    },
                );
            }
        }
    }
    for d in 3..=8i64 {
        for alpha in d..=4 * d {
            t.run(
                || format!("genus d={d} alpha={alpha}"),
                || {
                    let g = genus_from_rel(&minimal_delta_seq(d, alpha)?)? as i64;
                    Ok(expect_eq("genus", g, halphen_bound(alpha, d)?))
                },
            );
        }
        t.check(
            halphen_bound(d, d).ok() == Some((d - 1) * (d - 2) / 2),
            || format!("plane section bound for d={d}"),
        );
    }
    t.report(6, "minimality and genus bound")
}

// 7. Dimensions of linear systems.

fn maximal_case(
    t: &mut Tally,
    label: String,
    x: &PlaneCurve,
    y: &PointGroup,
    expected: Option<MaxCase>,
) {
    t.run(
        || label,
        || {
            let v = classify_maximal(x, y)?;
            if let Some(tag) = expected {
                if v.case_tag != tag {
                    return Ok(Some(format!("case {:?}, expected {tag:?}", v.case_tag)));
                }
            }
            Ok((!verify_certificate(x, y, &v)?).then(|| "certificate does not re-verify".into()))
        },
    );
}

/// `per_factor` points of the first `k` factors.
fn factor_points(g: &GridSection, k: usize) -> Vec<ProjPoint> {
    g.per_factor[..k].iter().flat_map(|p| p.points().iter().copied()).collect()
}

pub fn check_linear_systems(scale: Scale) -> CriterionReport {
    let f = field(10007);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut t = Tally::new();

    // Sections by s lines.
    for d in 4..=6i64 {
        for s in 1..=d - 3 {
            t.run(
                || format!("section d={d} s={s}"),
                || {
                    let grid = grid_curve(f, d as u32, &random_lines(f, s as usize, &mut rng), &mut rng)?;
                    let dim = dim_linear_system(&grid.curve, &grid.section)?;
                    Ok(expect_eq("dimension", dim, r_alpha(d, s * d)?))
                },
            );
        }
    }

    // Structured extremal groups on curves with three split lines.
    for d in 5..=6i64 {
        let grid = match grid_curve(f, d as u32, &random_lines(f, 3, &mut rng), &mut rng) {
            Ok(g) => g,
            Err(e) => {
                t.check(false, || format!("three-line grid d={d}: {e}"));
                continue;
            }
        };
        let x = &grid.curve;
        for s in 1..=d - 3 {
            let section = factor_points(&grid, s as usize);
            for r in 0..=(s + 1).min(d - 1) {
                let removed = &grid.per_factor[0].points()[..r as usize];
                let pts: Vec<ProjPoint> =
                    section.iter().copied().filter(|q| !removed.contains(q)).collect();
                let tag = if r <= s {
                    MaxCase::ResidualOfRPointsInDegreeSSection
                } else {
                    MaxCase::EitherBoundaryCase
                };
                match PointGroup::new(f, pts) {
                    Ok(y) => maximal_case(&mut t, format!("residual d={d} s={s} r={r}"), x, &y, Some(tag)),
                    Err(e) => t.check(false, || e.to_string()),
                }
            }
            for r in s + 2..d {
                let mut pts = factor_points(&grid, s as usize - 1);
                let extra = random_points_on_curve(x, 16, rng.gen(), true);
                let Ok(extra) = extra else {
                    t.check(false, || format!("no extra points for d={d} s={s}"));
                    continue;
                };
                pts.extend(
                    extra
                        .points()
                        .iter()
                        .filter(|q| grid.cutter.eval(q) != 0)
                        .take((d - r) as usize),
                );
                match PointGroup::new(f, pts) {
                    Ok(y) => maximal_case(
                        &mut t,
                        format!("contained section d={d} s={s} r={r}"),
                        x,
                        &y,
                        Some(MaxCase::ContainsDegreeSMinus1Section),
                    ),
                    Err(e) => t.check(false, || e.to_string()),
                }
            }
        }
    }

    // Random groups: the bound, and a certificate for every equality.
    let per_alpha = scale.pick(3, 20);
    for d in 4..=6i64 {
        let (x, pool) = match fixed_curve(101, d as u32, 70 + d as u64).and_then(|x| {
            let pool = smooth_pool(&x)?;
            Ok((x, pool))
        }) {
            Ok(v) => v,
            Err(e) => {
                t.check(false, || format!("curve of degree {d}: {e}"));
                continue;
            }
        };
        for alpha in 1..=d * (d - 3) {
            for k in 0..per_alpha {
                let y = match biased_group(&x, &pool, alpha as usize, k, &mut rng) {
                    Ok(y) => y,
                    Err(e) => {
                        t.check(false, || e.to_string());
                        continue;
                    }
                };
                let (dim, bound) = match (dim_linear_system(&x, &y), r_alpha(d, alpha)) {
                    (Ok(a), Ok(b)) => (a, b),
                    (Err(e), _) | (_, Err(e)) => {
                        t.check(false, || e.to_string());
                        continue;
                    }
                };
                t.check(dim <= bound, || {
                    format!("d={d} alpha={alpha} group {k}: dim {dim} > {bound}")
                });
                if dim == bound {
                    maximal_case(&mut t, format!("d={d} alpha={alpha} group {k}"), &x, &y, None);
                }
            }
        }
    }
    t.report(7, "linear systems")
}

// 8. The sextic configurations.

struct SexticSetup {
    grid: GridSection,
    pool: Vec<ProjPoint>,
    others: Vec<ProjPoint>,
}

/// A sextic with a split section by a line and a conic, plus its rational
/// points off both.
fn sextic_setup(seed: u64) -> Result<SexticSetup> {
    let f = field(10007);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let factors = vec![random_form(f, 1, &mut rng), random_conic(f, &mut rng)];
    let grid = grid_curve(f, 6, &factors, &mut rng)?;
    let pool = smooth_pool(&grid.curve)?;
    let mut others: Vec<ProjPoint> = pool
        .iter()
        .copied()
        .filter(|q| grid.cutter.eval(q) != 0)
        .collect();
    others.shuffle(&mut rng);
    Ok(SexticSetup { grid, pool, others })
}

pub fn check_sextic(scale: Scale) -> CriterionReport {
    let mut t = Tally::new();
    for seed in 0..scale.pick(1, 3) as u64 {
        t.run(
            || format!("aligned configuration, seed {seed}"),
            || {
                let s = sextic_setup(seed)?;
                let x = &s.grid.curve;
                let line = s.grid.per_factor[0].points();
                let mut pts = line[..5].to_vec();
                pts.extend_from_slice(&s.others[..4]);
                let y = PointGroup::new(x.field(), pts)?;
                let rel = measure_rcs(x, &y)?;
                if rel.entries != [3, 3, 4, 4, 5, 5] {
                    return Ok(Some(format!("measured ({rel})")));
                }
                add_case(&rel, 5)?;
                let w = add_witnesses(x, &y, 5, Some(&s.pool))?;
                if !w.is_empty() {
                    return Ok(Some(format!("{} level-5 witnesses", w.len())));
                }
                let y3 = filtration_points(x, &y, 3, Some(&s.pool))?;
                Ok((!(y3.len() == 10 && y3.contains(&line[5])))
                    .then(|| format!("Y_3 has {} points", y3.len())))
            },
        );
        t.run(
            || format!("conic configuration, seed {seed}"),
            || {
                let s = sextic_setup(seed)?;
                let x = &s.grid.curve;
                let conic = s.grid.per_factor[1].points();
                let mut pts = conic[..8].to_vec();
                pts.push(s.others[0]);
                let y = PointGroup::new(x.field(), pts)?;
                let rel = measure_rcs(x, &y)?;
                if rel.entries != [3, 3, 4, 4, 5, 5] {
                    return Ok(Some(format!("measured ({rel})")));
                }
                let mut rest = conic[8..].to_vec();
                rest.sort_unstable();
                let w = add_witnesses(x, &y, 5, Some(&s.pool))?;
                if w != rest {
                    return Ok(Some(format!("witnesses {w:?}, expected {rest:?}")));
                }
                for q in w {
                    let got = measure_rcs(x, &y.with_point(q)?)?;
                    if got.entries != add_case(&rel, 5)?.entries {
                        return Ok(Some(format!("adding {q} gives ({got})")));
                    }
                }
                Ok(None)
            },
        );
    }
    t.report(8, "sextic configurations")
}

// 9. Realization.

/// The curves used for realization over `F_101`.
pub fn realization_curve(d: u32) -> Result<PlaneCurve> {
    if d == 4 {
        Ok(PlaneCurve::fermat(field(101), 4))
    } else {
        fixed_curve(101, d, 5)
    }
}

pub fn check_realization(scale: Scale) -> CriterionReport {
    let mut t = Tally::new();
    let max_degree = scale.pick(6, 10) as i64;
    for d in [4u32, 5] {
        let x = match realization_curve(d) {
            Ok(x) => x,
            Err(e) => {
                t.check(false, || format!("curve of degree {d}: {e}"));
                continue;
            }
        };
        let pool = match rational_points(&x) {
            Ok(p) => p,
            Err(e) => {
                t.check(false, || e.to_string());
                continue;
            }
        };
        for target in enumerate_admissible(d as usize, max_degree) {
            t.run(
                || format!("target ({})", crate::seqcalc::join(&target)),
                || {
                    let mut last = None;
                    for seed in 0..3 {
                        match realize(&x, &target, seed, Some(&pool), RealizeOptions::default()) {
                            Ok(y) => {
                                let got = measure_rcs(&x, &y)?;
                                return Ok(expect_eq("measured", got.entries, target.clone()));
                            }
                            Err(e @ Error::RealizationExhausted { .. }) => last = Some(e),
                            Err(e) => return Err(e),
                        }
                    }
                    Err(last.expect("three attempts"))
                },
            );
        }
    }
    t.report(9, "realization")
}

// 10. Domination scan.

pub fn check_scan(scale: Scale) -> CriterionReport {
    let mut t = Tally::new();
    let plan: [(u32, i64, usize); 6] = [
        (4, 1, 80),
        (4, 2, 80),
        (5, 1, 80),
        (5, 2, 90),
        (6, 1, 80),
        (6, 2, 90),
    ];
    for (k, &(d, s, trials)) in plan.iter().enumerate() {
        let trials = scale.pick(trials / 10, trials);
        let report = fixed_curve(101, d, 80 + u64::from(d))
            .and_then(|x| conjecture_scan(&x, s, trials, k as u64));
        match report {
            Ok(r) => {
                for (i, trial) in r.trials.iter().enumerate() {
                    t.check(trial.dominated && trial.connex, || {
                        format!(
                            "d={d} s={s} trial {i}: ({}) disagrees at {:?}",
                            crate::seqcalc::join(&trial.sequence),
                            trial.disagreement
                        )
                    });
                }
            }
            Err(e) => t.check(false, || format!("d={d} s={s}: {e}")),
        }
    }
    t.report(10, "domination scan")
}

pub type CheckFn = fn(Scale) -> CriterionReport;

/// Every check, in order.
pub const CHECKS: [CheckFn; 10] = [
    check_round_trip,
    check_widths,
    check_complete_intersections,
    check_liaison,
    check_section_shift,
    check_minimality,
    check_linear_systems,
    check_sextic,
    check_realization,
    check_scan,
];

pub fn run_all(scale: Scale) -> Vec<CriterionReport> {
    CHECKS.iter().map(|check| check(scale)).collect()
}
