//! Text formats for point groups and curves.
//!
//! Both start with a header line `p=<modulus>`; `#` starts a comment.
//! Point files then list one point per line as `x y z`. Curve files may give
//! `irreducible=true|false` and then one term per line as `e1 e2 e3 c`.

use super::{Form, PlaneCurve, PointGroup, PrimeField, ProjPoint};
use crate::error::{Error, Result};

fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_header(line: Option<(usize, &str)>) -> Result<PrimeField> {
    let (no, l) = line.ok_or_else(|| Error::Parse("missing header line p=<modulus>".into()))?;
    let value = l
        .strip_prefix("p=")
        .ok_or_else(|| Error::Parse(format!("line {no}: expected p=<modulus>, got {l:?}")))?;
    let p: u64 = value
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("line {no}: bad modulus {value:?}")))?;
    PrimeField::new(p)
}

fn ints<const N: usize>(no: usize, l: &str) -> Result<[i64; N]> {
    let v: Vec<i64> = l
        .split_whitespace()
        .map(|t| t.parse::<i64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| Error::Parse(format!("line {no}: {e}")))?;
    v.try_into()
        .map_err(|_| Error::Parse(format!("line {no}: expected {N} integers")))
}

/// Checks the header against `expected` when one is given.
fn check_modulus(field: PrimeField, expected: Option<u64>) -> Result<()> {
    match expected {
        Some(p) if p != field.modulus() => Err(Error::ModulusMismatch {
            expected: p,
            found: field.modulus(),
        }),
        _ => Ok(()),
    }
}

pub fn parse_points(text: &str, expected_modulus: Option<u64>) -> Result<PointGroup> {
    let mut it = lines(text);
    let field = parse_header(it.next())?;
    check_modulus(field, expected_modulus)?;
    let points = it
        .map(|(no, l)| ProjPoint::new(&field, ints::<3>(no, l)?))
        .collect::<Result<Vec<_>>>()?;
    PointGroup::new(field, points)
}

pub fn format_points(y: &PointGroup) -> String {
    let mut out = format!("p={}\n", y.field().modulus());
    for q in y.points() {
        let [a, b, c] = q.coords();
        out.push_str(&format!("{a} {b} {c}\n"));
    }
    out
}

pub fn parse_curve(text: &str, expected_modulus: Option<u64>) -> Result<PlaneCurve> {
    let mut it = lines(text).peekable();
    let field = parse_header(it.next())?;
    check_modulus(field, expected_modulus)?;
    let mut irreducible = false;
    if let Some(&(no, l)) = it.peek() {
        if let Some(v) = l.strip_prefix("irreducible=") {
            irreducible = match v.trim() {
                "true" => true,
                "false" => false,
                other => {
                    return Err(Error::Parse(format!(
                        "line {no}: irreducible must be true or false, got {other:?}"
                    )))
                }
            };
            it.next();
        }
    }
    let mut terms = Vec::new();
    for (no, l) in it {
        let [a, b, c, coeff] = ints::<4>(no, l)?;
        if a < 0 || b < 0 || c < 0 {
            return Err(Error::Parse(format!("line {no}: negative exponent")));
        }
        terms.push(([a as u32, b as u32, c as u32], coeff));
    }
    let Some(&(e, _)) = terms.first() else {
        return Err(Error::Parse("curve file has no terms".into()));
    };
    let degree = e[0] + e[1] + e[2];
    let form = Form::from_terms(field, degree, &terms)?;
    PlaneCurve::new(form, irreducible)
}

pub fn format_curve(x: &PlaneCurve) -> String {
    let mut out = format!(
        "p={}\nirreducible={}\n",
        x.field().modulus(),
        x.irreducible()
    );
    for (e, c) in x.form().terms() {
        out.push_str(&format!("{} {} {} {c}\n", e[0], e[1], e[2]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points_round_trip() {
        let text = "# three points\np=101\n1 2 1\n0 1 0  # at infinity\n\n3 3 3\n";
        let y = parse_points(text, None).unwrap();
        assert_eq!(y.len(), 3);
        assert_eq!(parse_points(&format_points(&y), Some(101)).unwrap(), y);
        assert!(matches!(
            parse_points(text, Some(103)),
            Err(Error::ModulusMismatch { expected: 103, found: 101 })
        ));
        assert!(matches!(parse_points("p=100\n", None), Err(Error::NotPrime(100))));
        assert!(matches!(parse_points("1 2 3\n", None), Err(Error::Parse(_))));
        assert!(matches!(parse_points("p=7\n1 2\n", None), Err(Error::Parse(_))));
        assert!(matches!(
            parse_points("p=7\n1 2 3\n2 4 6\n", None),
            Err(Error::DuplicatePoint(_))
        ));
    }

    #[test]
    fn curves_round_trip() {
        let text = "p=101\nirreducible=true\n4 0 0 1\n0 4 0 1\n0 0 4 1\n";
        let x = parse_curve(text, None).unwrap();
        assert_eq!(x, PlaneCurve::fermat(PrimeField::new(101).unwrap(), 4));
        assert_eq!(parse_curve(&format_curve(&x), None).unwrap(), x);
        assert!(parse_curve("p=101\n2 0 0 1\n0 1 0 1\n", None).is_err());
        assert!(!parse_curve("p=101\n1 0 0 1\n", None).unwrap().irreducible());
    }
}
