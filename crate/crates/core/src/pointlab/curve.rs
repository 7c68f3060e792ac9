//! Rational points of plane curves and intersections with other curves.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::poly::{roots, Form};
use super::{PlaneCurve, PointGroup, PrimeField, ProjPoint};
use crate::error::{Error, Result};

/// Largest modulus for which full scans of the rational locus are attempted.
pub const MAX_SCAN_MODULUS: u64 = 1_000_003;

/// Moduli up to this size are scanned in full by [`random_points_on_curve`].
const FULL_SCAN_SAMPLING: u64 = 1009;

fn roots_or_all(field: &PrimeField, g: &[u64]) -> Vec<u64> {
    if g.is_empty() {
        (0..field.modulus()).collect()
    } else {
        roots(field, g)
    }
}

/// Rational zeros of `form` in the chart `z = 1` with a fixed `x`.
fn affine_fibre(form: &Form, x: u64) -> Vec<ProjPoint> {
    let field = form.field();
    roots_or_all(&field, &form.restrict_y(x, 1))
        .into_iter()
        .map(|y| ProjPoint::from_residues(&field, [x, y, 1]).expect("z = 1"))
        .collect()
}

/// Every rational zero of a nonzero form, in canonical order.
///
/// Scans `x` over `F_p` in the chart `z = 1` and finds the `y`-roots, then
/// handles the line at infinity.
pub fn rational_zeros(form: &Form) -> Result<Vec<ProjPoint>> {
    let field = form.field();
    let p = field.modulus();
    if p > MAX_SCAN_MODULUS {
        return Err(Error::ScanInfeasible(p));
    }
    let mut out = Vec::new();
    for x in 0..p {
        out.extend(affine_fibre(form, x));
    }
    for x in roots_or_all(&field, &form.restrict_x(1, 0)) {
        out.push(ProjPoint::from_residues(&field, [x, 1, 0])?);
    }
    let e = ProjPoint::from_residues(&field, [1, 0, 0])?;
    if form.eval(&e) == 0 {
        out.push(e);
    }
    out.sort_unstable();
    Ok(out)
}

/// Rational points of `x`, in canonical order.
pub fn rational_points(x: &PlaneCurve) -> Result<Vec<ProjPoint>> {
    rational_zeros(x.form())
}

/// `count` distinct rational points of `x`, deterministic in `seed`.
///
/// Small fields are scanned in full and sampled; larger ones draw a random
/// `x`-coordinate and keep one of the `y`-roots.
pub fn random_points_on_curve(
    x: &PlaneCurve,
    count: usize,
    seed: u64,
    avoid_singular: bool,
) -> Result<PointGroup> {
    let field = x.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if count == 0 {
        return Ok(PointGroup::empty(field));
    }
    let usable = |q: &ProjPoint| !avoid_singular || !x.is_singular_at(q);
    if field.modulus() <= FULL_SCAN_SAMPLING {
        let mut pool: Vec<ProjPoint> = rational_points(x)?.into_iter().filter(usable).collect();
        if pool.len() < count {
            return Err(Error::InsufficientPoints {
                found: pool.len(),
                requested: count,
            });
        }
        pool.shuffle(&mut rng);
        pool.truncate(count);
        return PointGroup::new(field, pool);
    }
    let mut seen = BTreeSet::new();
    let mut points = Vec::with_capacity(count);
    let budget = 64 * count + 1024;
    for _ in 0..budget {
        let xv = rng.gen_range(0..field.modulus());
        let fibre: Vec<ProjPoint> = affine_fibre(x.form(), xv).into_iter().filter(usable).collect();
        if let Some(q) = fibre.choose(&mut rng) {
            if seen.insert(*q) {
                points.push(*q);
                if points.len() == count {
                    return PointGroup::new(field, points);
                }
            }
        }
    }
    Err(Error::InsufficientPoints {
        found: points.len(),
        requested: count,
    })
}

/// Whether `h` divides `f`, by solving `f = h·g` for the coefficients of `g`.
pub fn divides(h: &Form, f: &Form) -> bool {
    use super::linalg::rref;
    use super::poly::{monomial_basis, monomial_index};
    if h.degree() > f.degree() || h.is_zero() {
        return false;
    }
    let field = f.field();
    let gdeg = f.degree() - h.degree();
    let gbasis = monomial_basis(gdeg);
    let nrows = f.coeffs().len();
    // Augmented system: column j is h·(j-th monomial of degree gdeg), last column is f.
    let mut rows = vec![vec![0u64; gbasis.len() + 1]; nrows];
    for (j, e) in gbasis.iter().enumerate() {
        for (eh, c) in h.terms() {
            let i = monomial_index([e[0] + eh[0], e[1] + eh[1], e[2] + eh[2]]);
            rows[i][j] = field.add(rows[i][j], c);
        }
    }
    for (i, &c) in f.coeffs().iter().enumerate() {
        rows[i][gbasis.len()] = c;
    }
    let pivots = rref(&field, &mut rows, gbasis.len() + 1);
    !pivots.contains(&gbasis.len())
}

/// Common rational points of `x` and the curve `h = 0` of degree `s`.
///
/// With `require_transverse`, anything other than exactly `s·d` points is an
/// error, since `s·d` distinct points force every intersection to be simple
/// and rational.
pub fn section_points(x: &PlaneCurve, h: &Form, require_transverse: bool) -> Result<PointGroup> {
    let field = x.field();
    if h.field() != field {
        return Err(Error::ModulusMismatch {
            expected: field.modulus(),
            found: h.field().modulus(),
        });
    }
    if h.is_zero() || h.degree() == 0 {
        return Err(Error::domain("the cutting curve needs a nonzero form of positive degree"));
    }
    let f = x.form();
    if divides(h, f) || divides(f, h) {
        return Err(Error::ImproperIntersection);
    }
    let (low, high) = if h.degree() <= f.degree() { (h, f) } else { (f, h) };
    let common: Vec<ProjPoint> = rational_zeros(low)?
        .into_iter()
        .filter(|q| high.eval(q) == 0)
        .collect();
    let expected = (h.degree() * f.degree()) as usize;
    if common.len() > expected {
        return Err(Error::ImproperIntersection);
    }
    if require_transverse && common.len() != expected {
        return Err(Error::NonTransverse {
            found: common.len(),
            expected,
        });
    }
    PointGroup::new(field, common)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force(x: &PlaneCurve) -> Vec<ProjPoint> {
        let f = x.field();
        let p = f.modulus();
        let mut out = BTreeSet::new();
        for a in 0..p {
            for b in 0..p {
                for c in [[a, b, 1], [a, 1, 0], [1, 0, 0]] {
                    let q = ProjPoint::from_residues(&f, c).unwrap();
                    if x.contains(&q) {
                        out.insert(q);
                    }
                }
            }
        }
        out.into_iter().collect()
    }

    #[test]
    fn scan_matches_brute_force() {
        for p in [5u64, 13, 101] {
            let f = PrimeField::new(p).unwrap();
            for d in 1..6 {
                let x = PlaneCurve::fermat(f, d);
                assert_eq!(rational_points(&x).unwrap(), brute_force(&x), "p={p} d={d}");
            }
        }
        let f = PrimeField::new(257).unwrap();
        let x = PlaneCurve::fermat(f, 4);
        assert_eq!(rational_points(&x).unwrap(), brute_force(&x));
    }

    #[test]
    fn random_points_are_on_the_curve() {
        let f = PrimeField::new(10007).unwrap();
        let x = PlaneCurve::fermat(f, 4);
        let y = random_points_on_curve(&x, 10, 1, true).unwrap();
        assert_eq!(y.len(), 10);
        assert!(y.points().iter().all(|q| x.contains(q)));
        assert_eq!(y, random_points_on_curve(&x, 10, 1, true).unwrap());
        assert!(random_points_on_curve(&x, 0, 1, true).unwrap().is_empty());

        let f5 = PrimeField::new(5).unwrap();
        let x5 = PlaneCurve::fermat(f5, 4);
        let n = rational_points(&x5).unwrap().len();
        assert!(matches!(
            random_points_on_curve(&x5, n + 1, 0, false),
            Err(Error::InsufficientPoints { .. })
        ));
    }

    #[test]
    fn sections() {
        let f = PrimeField::new(101).unwrap();
        // Product of the lines x, y, x - z, y - z meets the line x = y... use a grid.
        let lines: Vec<Form> = (0..3).map(|k| Form::linear(f, 1, 0, f.neg(k))).collect();
        let grid = Form::product(f, &lines)
            .add(&Form::product(
                f,
                &(0..3).map(|k| Form::linear(f, 0, 1, f.neg(k))).collect::<Vec<_>>(),
            ))
            .unwrap();
        let x = PlaneCurve::new(grid, false).unwrap();
        assert!(matches!(
            section_points(&x, x.form(), true),
            Err(Error::ImproperIntersection)
        ));
        // z = 0 meets x^3 + y^3 = 0 at (-1:1:0) and the roots of t^3 = -1 in F_101.
        let at_infinity = Form::linear(f, 0, 0, 1);
        let s = section_points(&x, &at_infinity, false).unwrap();
        assert!(!s.is_empty() && s.len() <= 3);

        let fermat = PlaneCurve::fermat(f, 2);
        // x = z meets x^2 + y^2 + z^2 where y^2 = -2, which has roots in F_101 iff -2 is a square.
        let line = Form::linear(f, 1, 0, 100);
        let r = section_points(&fermat, &line, false).unwrap();
        let tangent_free = r.len() == 2 || r.is_empty();
        assert!(tangent_free);
    }

    #[test]
    fn tangent_lines_are_not_transverse() {
        let f = PrimeField::new(101).unwrap();
        // Conic y z = x^2 and its tangent y = 0 at (0:0:1).
        let conic = Form::from_terms(f, 2, &[([0, 1, 1], 1), ([2, 0, 0], -1)]).unwrap();
        let x = PlaneCurve::new(conic, true).unwrap();
        let tangent = Form::linear(f, 0, 1, 0);
        assert!(matches!(
            section_points(&x, &tangent, true),
            Err(Error::NonTransverse { found: 1, expected: 2 })
        ));
        let secant = Form::linear(f, 0, 1, 100);
        assert_eq!(section_points(&x, &secant, true).unwrap().len(), 2);
    }

    #[test]
    fn divisibility() {
        let f = PrimeField::new(101).unwrap();
        let a = Form::linear(f, 1, 2, 3);
        let b = Form::linear(f, 0, 1, 5);
        let ab = a.mul(&b);
        assert!(divides(&a, &ab));
        assert!(!divides(&Form::linear(f, 1, 0, 0), &ab));
    }
}
