//! Random configurations with controlled geometry: lines, conics, and plane
//! curves with a prescribed totally split section.

use rand::seq::SliceRandom;
use rand::Rng;

use super::curve::{rational_zeros, section_points};
use super::{Form, PlaneCurve, PointGroup, PrimeField, ProjPoint};
use crate::error::{Error, Result};

/// Number of redraws before a construction gives up.
pub const RETRIES: usize = 64;

pub fn random_point<R: Rng>(field: &PrimeField, rng: &mut R) -> ProjPoint {
    loop {
        let c = [0; 3].map(|_| rng.gen_range(0..field.modulus()));
        if let Ok(q) = ProjPoint::from_residues(field, c) {
            return q;
        }
    }
}

pub fn random_form<R: Rng>(field: PrimeField, degree: u32, rng: &mut R) -> Form {
    let n = ((degree + 1) * (degree + 2) / 2) as usize;
    loop {
        let coeffs = (0..n).map(|_| rng.gen_range(0..field.modulus())).collect();
        let f = Form::from_coeffs(field, degree, coeffs);
        if !f.is_zero() {
            return f;
        }
    }
}

/// The line through two distinct points (cross product of coordinates).
pub fn line_through(field: PrimeField, a: &ProjPoint, b: &ProjPoint) -> Form {
    let (u, v) = (a.coords(), b.coords());
    let f = &field;
    let c = |i: usize, j: usize| f.sub(f.mul(u[i], v[j]), f.mul(u[j], v[i]));
    Form::linear(field, c(1, 2), c(2, 0), c(0, 1))
}

/// `n` distinct random points of the plane.
pub fn generic_points<R: Rng>(field: PrimeField, n: usize, rng: &mut R) -> PointGroup {
    let mut pts = Vec::with_capacity(n);
    while pts.len() < n {
        let q = random_point(&field, rng);
        if !pts.contains(&q) {
            pts.push(q);
        }
    }
    PointGroup::new(field, pts).expect("distinct by construction")
}

/// A random invertible projective transformation, as a row-major matrix.
fn random_transform<R: Rng>(field: &PrimeField, rng: &mut R) -> [[u64; 3]; 3] {
    loop {
        let m = [[0u64; 3]; 3].map(|row| row.map(|_| rng.gen_range(0..field.modulus())));
        let f = field;
        let minor = |a: usize, b: usize| {
            f.sub(f.mul(m[1][a], m[2][b]), f.mul(m[1][b], m[2][a]))
        };
        let det = f.add(
            f.sub(f.mul(m[0][0], minor(1, 2)), f.mul(m[0][1], minor(0, 2))),
            f.mul(m[0][2], minor(0, 1)),
        );
        if det != 0 {
            return m;
        }
    }
}

fn apply(field: &PrimeField, m: &[[u64; 3]; 3], v: [u64; 3]) -> ProjPoint {
    let row = |r: &[u64; 3]| {
        (0..3).fold(0, |acc, k| field.add(acc, field.mul(r[k], v[k])))
    };
    ProjPoint::from_residues(field, [row(&m[0]), row(&m[1]), row(&m[2])])
        .expect("invertible transform")
}

/// `n` distinct points on a random line; needs `n <= p + 1`.
pub fn points_on_line<R: Rng>(field: PrimeField, n: usize, rng: &mut R) -> Result<PointGroup> {
    param_points(field, n, rng, |t| [t, 1, 0], [1, 0, 0])
}

/// `n` distinct points on a random smooth conic; needs `n <= p + 1`.
pub fn points_on_conic<R: Rng>(field: PrimeField, n: usize, rng: &mut R) -> Result<PointGroup> {
    param_points(field, n, rng, |t| [field.mul(t, t), t, 1], [1, 0, 0])
}

fn param_points<R: Rng>(
    field: PrimeField,
    n: usize,
    rng: &mut R,
    chart: impl Fn(u64) -> [u64; 3],
    at_infinity: [u64; 3],
) -> Result<PointGroup> {
    let p = field.modulus();
    if n as u64 > p + 1 {
        return Err(Error::InsufficientPoints {
            found: p as usize + 1,
            requested: n,
        });
    }
    let m = random_transform(&field, rng);
    let mut params: Vec<Option<u64>> = (0..p).map(Some).collect();
    params.push(None);
    let params: Vec<_> = params.choose_multiple(rng, n).copied().collect();
    let pts = params
        .into_iter()
        .map(|t| apply(&field, &m, t.map_or(at_infinity, &chart)))
        .collect();
    PointGroup::new(field, pts)
}

/// A random smooth conic: the image of `x z = y^2` under a random transform.
pub fn random_conic<R: Rng>(field: PrimeField, rng: &mut R) -> Form {
    // Interpolating five image points avoids inverting the transform.
    let pts = points_on_conic(field, 5, rng).expect("p >= 4");
    let forms = super::measure::vanishing_forms(&pts, 2);
    debug_assert_eq!(forms.len(), 1);
    forms.into_iter().next().expect("five points on a conic")
}

/// A plane curve `X` with a totally split, transverse section by `H`.
#[derive(Debug, Clone)]
pub struct GridSection {
    pub curve: PlaneCurve,
    /// `H`, the product of `factors`.
    pub cutter: Form,
    pub factors: Vec<Form>,
    /// `X ∩ H`, all `s·d` points.
    pub section: PointGroup,
    /// `X ∩ factor` for each factor.
    pub per_factor: Vec<PointGroup>,
}

/// Builds `X = M_1 ⋯ M_d + H·G` with `H = Π factors` and `G` random.
///
/// `X ∩ H = (Π M_k) ∩ H`. When each `M_k` meets every factor in rational
/// points, the section has `s·d` rational points; lines `M_k` through two
/// rational points of the nonlinear factor achieve that for conics and
/// cubics. At most one factor may be nonlinear. The result is a generic
/// member of its family and is flagged irreducible without certification.
pub fn grid_curve<R: Rng>(
    field: PrimeField,
    d: u32,
    factors: &[Form],
    rng: &mut R,
) -> Result<GridSection> {
    let s: u32 = factors.iter().map(Form::degree).sum();
    if s == 0 || s > d {
        return Err(Error::domain(format!(
            "cutting degree {s} must lie in 1..={d}"
        )));
    }
    let nonlinear: Vec<&Form> = factors.iter().filter(|g| g.degree() >= 2).collect();
    if nonlinear.len() > 1 || nonlinear.first().is_some_and(|g| g.degree() > 3) {
        return Err(Error::domain(
            "at most one nonlinear factor, of degree 2 or 3",
        ));
    }
    let anchors = match nonlinear.first() {
        Some(g) => rational_zeros(g)?,
        None => Vec::new(),
    };
    if !nonlinear.is_empty() && anchors.len() < 2 {
        return Err(Error::InsufficientPoints {
            found: anchors.len(),
            requested: 2,
        });
    }
    let cutter = Form::product(field, factors);
    let mut last_err = Error::NonTransverse {
        found: 0,
        expected: (s * d) as usize,
    };
    for _ in 0..RETRIES {
        let lines: Vec<Form> = (0..d)
            .map(|_| {
                if anchors.is_empty() {
                    random_form(field, 1, rng)
                } else {
                    let two: Vec<&ProjPoint> = anchors.choose_multiple(rng, 2).collect();
                    line_through(field, two[0], two[1])
                }
            })
            .collect();
        let g = random_form(field, d - s, rng);
        let f = Form::product(field, &lines).add(&cutter.mul(&g))?;
        let Ok(curve) = PlaneCurve::new(f, true) else {
            continue;
        };
        let section = match section_points(&curve, &cutter, true) {
            Ok(sec) => sec,
            Err(e) => {
                last_err = e;
                continue;
            }
        };
        if section.points().iter().any(|q| curve.is_singular_at(q)) {
            continue;
        }
        let per_factor = factors
            .iter()
            .map(|h| section_points(&curve, h, true))
            .collect::<Result<Vec<_>>>();
        if let Ok(per_factor) = per_factor {
            return Ok(GridSection {
                curve,
                cutter,
                factors: factors.to_vec(),
                section: section.sorted(),
                per_factor,
            });
        }
    }
    Err(last_err)
}

/// A random degree-`d` curve with no singular rational point.
///
/// Smoothness is checked on `F_p`-points only (a full scan, so `p` is bounded
/// by the scan limit); the curve is flagged irreducible.
pub fn random_smooth_curve<R: Rng>(field: PrimeField, d: u32, rng: &mut R) -> Result<PlaneCurve> {
    for _ in 0..RETRIES {
        let Ok(x) = PlaneCurve::new(random_form(field, d, rng), true) else {
            continue;
        };
        if super::curve::rational_points(&x)?.iter().all(|q| !x.is_singular_at(q)) {
            return Ok(x);
        }
    }
    Err(Error::domain(format!(
        "no curve of degree {d} smooth at its rational points after {RETRIES} draws"
    )))
}

/// `s` random lines as factors of a cutter.
pub fn random_lines<R: Rng>(field: PrimeField, s: usize, rng: &mut R) -> Vec<Form> {
    (0..s).map(|_| random_form(field, 1, rng)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn lines_and_conics() {
        let f = PrimeField::new(10007).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let y = points_on_line(f, 6, &mut rng).unwrap();
        let l = line_through(f, &y.points()[0], &y.points()[1]);
        assert!(y.points().iter().all(|q| l.eval(q) == 0));
        let c = points_on_conic(f, 7, &mut rng).unwrap();
        assert_eq!(crate::pointlab::phi_points(&c, 1), 3);
        assert_eq!(crate::pointlab::phi_points(&c, 2), 5);
        let conic = random_conic(f, &mut rng);
        assert_eq!(rational_zeros(&conic).unwrap().len(), 10008);
    }

    #[test]
    fn grid_sections_are_split() {
        let f = PrimeField::new(10007).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let lines = random_lines(f, 2, &mut rng);
        let g = grid_curve(f, 5, &lines, &mut rng).unwrap();
        assert_eq!(g.section.len(), 10);
        assert_eq!(g.per_factor.iter().map(PointGroup::len).sum::<usize>(), 10);

        let conic = random_conic(f, &mut rng);
        let line = random_form(f, 1, &mut rng);
        let g = grid_curve(f, 6, &[line, conic], &mut rng).unwrap();
        assert_eq!(g.section.len(), 18);

        assert!(grid_curve(f, 2, &random_lines(f, 3, &mut rng), &mut rng).is_err());
    }
}
