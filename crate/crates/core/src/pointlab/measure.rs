//! Hilbert functions of point groups by evaluation-matrix rank, and the
//! sequences read off from them.

use super::linalg::{dot, kernel, rank};
use super::poly::{monomial_basis, monomial_values, Form};
use super::{PlaneCurve, PointGroup, ProjPoint};
use crate::error::{Error, Result};
use crate::liaison::RelCharSeq;
use crate::macaulay::binomial_u64;
use crate::seqcalc::{finite_difference, CharSeq};

/// Rows are points, columns the degree-`l` monomials in basis order.
pub fn evaluation_matrix(y: &PointGroup, l: u32) -> Vec<Vec<u64>> {
    let f = y.field();
    y.points()
        .iter()
        .map(|q| monomial_values(&f, q, l))
        .collect()
}

/// `φ_Y(l)`: the number of conditions `Y` imposes on forms of degree `l`.
pub fn phi_points(y: &PointGroup, l: i64) -> u64 {
    if l < 0 || y.is_empty() {
        return 0;
    }
    rank(&y.field(), &evaluation_matrix(y, l as u32)) as u64
}

/// Basis of the degree-`l` forms vanishing on `Y`.
pub fn vanishing_forms(y: &PointGroup, l: i64) -> Vec<Form> {
    if l < 0 {
        return Vec::new();
    }
    let f = y.field();
    let l = l as u32;
    let ncols = monomial_basis(l).len();
    kernel(&f, &evaluation_matrix(y, l), ncols)
        .into_iter()
        .map(|v| Form::from_coeffs(f, l, v))
        .collect()
}

/// Whether every form in `forms` (all of one degree) vanishes at `q`.
pub fn all_vanish(forms: &[Form], q: &ProjPoint) -> bool {
    let Some(first) = forms.first() else {
        return true;
    };
    let f = first.field();
    let values = monomial_values(&f, q, first.degree());
    forms.iter().all(|g| dot(&f, g.coeffs(), &values) == 0)
}

/// `φ` of a plane curve of degree `d`: `C(l+2, 2) - C(l-d+2, 2)`.
pub fn phi_plane_curve(d: i64, l: i64) -> u64 {
    if l < 0 {
        return 0;
    }
    binomial_u64(l + 2, 2) - binomial_u64(l - d + 2, 2)
}

/// Values `φ_Y(0), φ_Y(1), ...` up to the first degree where `φ_Y = |Y|`.
fn phi_until_stable(y: &PointGroup, window: i64) -> Result<Vec<u64>> {
    let n = y.len() as u64;
    let mut values = Vec::new();
    for l in 0..=window {
        let v = phi_points(y, l);
        values.push(v);
        if v == n {
            return Ok(values);
        }
    }
    Err(Error::NonStabilizing { window })
}

fn distinct_and_on(x: &PlaneCurve, y: &PointGroup) -> Result<()> {
    x.check_on_curve(y)?;
    PointGroup::new(y.field(), y.points().to_vec()).map(|_| ())
}

/// Relative sequence of `Y` in the plane curve `X`.
///
/// `ψ(l) = φ_X(l) - φ_Y(l)` is the Hilbert function of `I_{Y/X}`, whose
/// second difference counts the basis elements of each degree.
pub fn measure_rcs(x: &PlaneCurve, y: &PointGroup) -> Result<RelCharSeq> {
    measure_rcs_within(x, y, i64::from(x.degree()) + y.len() as i64 + 2)
}

/// [`measure_rcs`] with an explicit bound on the degrees scanned.
pub fn measure_rcs_within(x: &PlaneCurve, y: &PointGroup, window: i64) -> Result<RelCharSeq> {
    distinct_and_on(x, y)?;
    let d = i64::from(x.degree());
    let phi = phi_until_stable(y, window)?;
    let n = y.len() as u64;
    let top = (phi.len() as i64).max(d) + 3;
    let psi: Vec<i64> = (0..=top)
        .map(|l| {
            let py = phi.get(l as usize).copied().unwrap_or(n);
            phi_plane_curve(d, l) as i64 - py as i64
        })
        .collect();
    let widths = finite_difference(&psi, 2);
    let mut entries = Vec::with_capacity(d as usize);
    for (l, &w) in widths.iter().enumerate() {
        if w < 0 {
            return Err(Error::NonStabilizing { window });
        }
        entries.extend(std::iter::repeat_n(l as i64, w as usize));
    }
    if entries.len() != d as usize {
        return Err(Error::NonStabilizing { window });
    }
    let rel = RelCharSeq::new(entries, CharSeq::hypersurface(d as usize, 2))?;
    debug_assert_eq!(crate::liaison::rel_degree(&rel), y.len() as i64);
    Ok(rel)
}

/// Absolute sequence of `Y ⊂ P^2`: widths `Δφ_Y`.
pub fn measure_abs(y: &PointGroup) -> Result<CharSeq> {
    measure_abs_within(y, y.len() as i64 + 2)
}

/// [`measure_abs`] with an explicit bound on the degrees scanned.
pub fn measure_abs_within(y: &PointGroup, window: i64) -> Result<CharSeq> {
    PointGroup::new(y.field(), y.points().to_vec())?;
    let phi: Vec<i64> = phi_until_stable(y, window)?
        .into_iter()
        .map(|v| v as i64)
        .collect();
    let widths = finite_difference(&phi, 1);
    let mut entries = Vec::with_capacity(y.len());
    for (l, &w) in widths.iter().enumerate() {
        if w < 0 {
            return Err(Error::NonStabilizing { window });
        }
        entries.extend(std::iter::repeat_n(l as i64, w as usize));
    }
    CharSeq::new(entries, 1, 2)
}

/// `dim |Y| = |Y| - φ_Y(d - 3)` on a plane curve of degree `d`.
///
/// `Y` must avoid the singular points of `X`, where it would fail to be a
/// Cartier divisor.
pub fn dim_linear_system(x: &PlaneCurve, y: &PointGroup) -> Result<i64> {
    distinct_and_on(x, y)?;
    if let Some(q) = y.points().iter().find(|q| x.is_singular_at(q)) {
        return Err(Error::SingularCollision(*q));
    }
    let d = i64::from(x.degree());
    Ok(y.len() as i64 - phi_points(y, d - 3) as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pointlab::PrimeField;

    fn pts(f: &PrimeField, c: &[[i64; 3]]) -> PointGroup {
        PointGroup::new(*f, c.iter().map(|&v| ProjPoint::new(f, v).unwrap()).collect()).unwrap()
    }

    #[test]
    fn phi_examples() {
        let f = PrimeField::new(10007).unwrap();
        let one = pts(&f, &[[1, 2, 3]]);
        assert!((0..6).all(|l| phi_points(&one, l) == 1));
        let tri = pts(&f, &[[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
        assert_eq!(phi_points(&tri, 1), 3);
        let four = pts(&f, &[[0, 0, 1], [1, 0, 1], [2, 0, 1], [0, 1, 1]]);
        assert_eq!(phi_points(&four, 1), 3);
        assert_eq!(phi_points(&four, -1), 0);
    }

    #[test]
    fn plane_curve_phi() {
        assert_eq!(phi_plane_curve(4, 2), 6);
        assert_eq!(phi_plane_curve(4, 4), 14);
        assert_eq!(phi_plane_curve(3, 5), 15);
    }

    #[test]
    fn absolute_measurements() {
        let f = PrimeField::new(10007).unwrap();
        assert_eq!(measure_abs(&pts(&f, &[[5, 7, 1]])).unwrap().entries, vec![0]);
        let aligned = pts(&f, &[[0, 0, 1], [1, 0, 1], [2, 0, 1], [3, 0, 1]]);
        assert_eq!(measure_abs(&aligned).unwrap().entries, vec![0, 1, 2, 3]);
        // x^2 = z^2 and y^2 = z^2 meet in (±1, ±1, 1).
        let ci = pts(&f, &[[1, 1, 1], [1, -1, 1], [-1, 1, 1], [-1, -1, 1]]);
        assert_eq!(measure_abs(&ci).unwrap().entries, vec![0, 1, 1, 2]);
        assert!(measure_abs(&PointGroup::empty(f)).unwrap().is_empty());
    }

    #[test]
    fn relative_measurement_of_empty_group() {
        let f = PrimeField::new(101).unwrap();
        let x = PlaneCurve::fermat(f, 4);
        let rel = measure_rcs(&x, &PointGroup::empty(f)).unwrap();
        assert_eq!(rel.entries, vec![0, 1, 2, 3]);
        assert_eq!(dim_linear_system(&x, &PointGroup::empty(f)).unwrap(), 0);
    }

    #[test]
    fn off_curve_points_are_rejected() {
        let f = PrimeField::new(101).unwrap();
        let x = PlaneCurve::fermat(f, 3);
        let y = pts(&f, &[[1, 1, 1]]);
        assert!(matches!(measure_rcs(&x, &y), Err(Error::NotOnCurve(_))));
    }
}
