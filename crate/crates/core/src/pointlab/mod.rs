//! Exact geometry over `F_p`: projective points, plane curves and the
//! evaluation-matrix ranks that measure Hilbert functions of point groups.

pub mod construct;
pub mod curve;
pub mod field;
pub mod io;
pub mod linalg;
pub mod measure;
pub mod poly;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
pub use curve::{random_points_on_curve, rational_points, section_points, MAX_SCAN_MODULUS};
pub use field::PrimeField;
pub use measure::{
    dim_linear_system, measure_abs, measure_rcs, phi_plane_curve, phi_points,
};
pub use poly::{monomial_basis, Form};

/// A point of `P^2(F_p)` whose last nonzero coordinate is 1.
///
/// The derived order (lexicographic on coordinates) is the canonical point order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: [u64; 3],
}

impl ProjPoint {
    pub fn new(field: &PrimeField, coords: [i64; 3]) -> Result<Self> {
        let c = coords.map(|v| field.reduce(v));
        Self::from_residues(field, c)
    }

    pub fn from_residues(field: &PrimeField, c: [u64; 3]) -> Result<Self> {
        let Some(k) = (0..3).rev().find(|&k| c[k] != 0) else {
            return Err(Error::domain("(0, 0, 0) is not a projective point"));
        };
        let inv = field.inv(c[k]);
        Ok(ProjPoint {
            coords: c.map(|v| field.mul(v % field.modulus(), inv)),
        })
    }

    pub fn coords(&self) -> [u64; 3] {
        self.coords
    }
}

impl std::fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let [x, y, z] = self.coords;
        write!(f, "({x}:{y}:{z})")
    }
}

impl Serialize for ProjPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords.serialize(s)
    }
}

/// A reduced zero-dimensional subscheme: distinct rational points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointGroup {
    #[serde(rename = "p", serialize_with = "ser_field")]
    field: PrimeField,
    points: Vec<ProjPoint>,
}

fn ser_field<S: Serializer>(f: &PrimeField, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(f.modulus())
}

impl PointGroup {
    pub fn new(field: PrimeField, points: Vec<ProjPoint>) -> Result<Self> {
        let mut sorted = points.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicatePoint(w[0]));
        }
        Ok(PointGroup { field, points })
    }

    pub fn empty(field: PrimeField) -> Self {
        PointGroup {
            field,
            points: Vec::new(),
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, q: &ProjPoint) -> bool {
        self.points.contains(q)
    }

    pub fn with_point(&self, q: ProjPoint) -> Result<Self> {
        if self.contains(&q) {
            return Err(Error::DuplicatePoint(q));
        }
        let mut points = self.points.clone();
        points.push(q);
        Ok(PointGroup {
            field: self.field,
            points,
        })
    }

    /// Disjoint union; shared points are an error.
    pub fn union(&self, other: &PointGroup) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::ModulusMismatch {
                expected: self.field.modulus(),
                found: other.field.modulus(),
            });
        }
        let mut points = self.points.clone();
        points.extend_from_slice(&other.points);
        PointGroup::new(self.field, points)
    }

    pub fn sorted(&self) -> Self {
        let mut points = self.points.clone();
        points.sort_unstable();
        PointGroup {
            field: self.field,
            points,
        }
    }
}

/// A plane curve `f = 0`. Irreducibility is asserted by the caller.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlaneCurve {
    form: Form,
    irreducible: bool,
}

impl PlaneCurve {
    pub fn new(form: Form, irreducible: bool) -> Result<Self> {
        if form.degree() < 1 || form.is_zero() {
            return Err(Error::domain("a plane curve needs a nonzero form of degree >= 1"));
        }
        Ok(PlaneCurve { form, irreducible })
    }

    /// `x^d + y^d + z^d`, smooth whenever `p` does not divide `d`.
    pub fn fermat(field: PrimeField, d: u32) -> Self {
        let form = Form::from_terms(field, d, &[([d, 0, 0], 1), ([0, d, 0], 1), ([0, 0, d], 1)])
            .expect("exponents have degree d");
        PlaneCurve {
            form,
            irreducible: true,
        }
    }

    pub fn form(&self) -> &Form {
        &self.form
    }

    pub fn field(&self) -> PrimeField {
        self.form.field()
    }

    pub fn degree(&self) -> u32 {
        self.form.degree()
    }

    pub fn irreducible(&self) -> bool {
        self.irreducible
    }

    pub fn contains(&self, q: &ProjPoint) -> bool {
        self.form.eval(q) == 0
    }

    /// All three partial derivatives vanish at `q`.
    pub fn is_singular_at(&self, q: &ProjPoint) -> bool {
        self.contains(q) && (0..3).all(|v| self.form.partial(v).eval(q) == 0)
    }

    /// Errors unless every point of `y` lies on the curve, over the same field.
    pub fn check_on_curve(&self, y: &PointGroup) -> Result<()> {
        if y.field() != self.field() {
            return Err(Error::ModulusMismatch {
                expected: self.field().modulus(),
                found: y.field().modulus(),
            });
        }
        match y.points().iter().find(|q| !self.contains(q)) {
            Some(q) => Err(Error::NotOnCurve(*q)),
            None => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        let f = PrimeField::new(101).unwrap();
        let a = ProjPoint::new(&f, [2, 4, 2]).unwrap();
        assert_eq!(a.coords(), [1, 2, 1]);
        let b = ProjPoint::new(&f, [3, 5, 0]).unwrap();
        assert_eq!(b.coords()[1], 1);
        assert_eq!(b, ProjPoint::new(&f, [6, 10, 0]).unwrap());
        assert!(ProjPoint::new(&f, [0, 0, 101]).is_err());
        assert_eq!(ProjPoint::new(&f, [-1, 0, 0]).unwrap().coords(), [1, 0, 0]);
    }

    #[test]
    fn groups_reject_duplicates() {
        let f = PrimeField::new(101).unwrap();
        let a = ProjPoint::new(&f, [1, 2, 1]).unwrap();
        let b = ProjPoint::new(&f, [2, 4, 2]).unwrap();
        assert_eq!(PointGroup::new(f, vec![a, b]), Err(Error::DuplicatePoint(a)));
    }
}
