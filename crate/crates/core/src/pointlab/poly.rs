//! Homogeneous ternary forms and dense univariate polynomials over a prime field.

use serde::Serialize;

use super::field::PrimeField;
use super::ProjPoint;
use crate::error::{Error, Result};

/// Exponent triples of degree `l`, graded lex with `x > y > z`:
/// `(l,0,0), (l-1,1,0), (l-1,0,1), ..., (0,0,l)`.
pub fn monomial_basis(l: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::with_capacity(((l + 1) * (l + 2) / 2) as usize);
    for a in (0..=l).rev() {
        for b in (0..=l - a).rev() {
            out.push([a, b, l - a - b]);
        }
    }
    out
}

/// Position of `e` in [`monomial_basis`] of its degree.
pub fn monomial_index(e: [u32; 3]) -> usize {
    let l = e[0] + e[1] + e[2];
    // Triples with first exponent > e[0] come first; there are Σ_{a>e0} (l-a+1) of them.
    let k = l - e[0];
    let before = (k * (k + 1) / 2) as usize;
    before + (k - e[1]) as usize
}

/// Values of all degree-`l` monomials at `pt`, in basis order.
pub fn monomial_values(field: &PrimeField, pt: &ProjPoint, l: u32) -> Vec<u64> {
    let c = pt.coords();
    let powers = |v: u64| {
        let mut p = Vec::with_capacity(l as usize + 1);
        let mut acc = 1 % field.modulus();
        for _ in 0..=l {
            p.push(acc);
            acc = field.mul(acc, v);
        }
        p
    };
    let (px, py, pz) = (powers(c[0]), powers(c[1]), powers(c[2]));
    monomial_basis(l)
        .into_iter()
        .map(|[a, b, e]| {
            field.mul(
                field.mul(px[a as usize], py[b as usize]),
                pz[e as usize],
            )
        })
        .collect()
}

/// A homogeneous polynomial in `x, y, z`, stored densely in basis order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Form {
    #[serde(skip)]
    field: PrimeField,
    degree: u32,
    coeffs: Vec<u64>,
}

impl Form {
    pub fn zero(field: PrimeField, degree: u32) -> Self {
        let n = ((degree + 1) * (degree + 2) / 2) as usize;
        Form {
            field,
            degree,
            coeffs: vec![0; n],
        }
    }

    /// Builds a form from `(exponents, coefficient)` pairs; repeated monomials add up.
    pub fn from_terms(field: PrimeField, degree: u32, terms: &[([u32; 3], i64)]) -> Result<Self> {
        let mut f = Form::zero(field, degree);
        for &(e, c) in terms {
            if e[0] + e[1] + e[2] != degree {
                return Err(Error::Malformed(format!(
                    "monomial {e:?} does not have degree {degree}"
                )));
            }
            let i = monomial_index(e);
            f.coeffs[i] = field.add(f.coeffs[i], field.reduce(c));
        }
        Ok(f)
    }

    /// Coefficients in [`monomial_basis`] order.
    pub fn from_coeffs(field: PrimeField, degree: u32, coeffs: Vec<u64>) -> Self {
        assert_eq!(coeffs.len(), ((degree + 1) * (degree + 2) / 2) as usize);
        Form {
            field,
            degree,
            coeffs: coeffs.into_iter().map(|c| c % field.modulus()).collect(),
        }
    }

    pub fn linear(field: PrimeField, a: u64, b: u64, c: u64) -> Self {
        Form::from_coeffs(field, 1, vec![a, b, c])
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Nonzero terms in basis order.
    pub fn terms(&self) -> Vec<([u32; 3], u64)> {
        monomial_basis(self.degree)
            .into_iter()
            .zip(self.coeffs.iter().copied())
            .filter(|&(_, c)| c != 0)
            .collect()
    }

    pub fn eval(&self, pt: &ProjPoint) -> u64 {
        let f = &self.field;
        monomial_values(f, pt, self.degree)
            .iter()
            .zip(&self.coeffs)
            .fold(0, |acc, (&m, &c)| f.add(acc, f.mul(m, c)))
    }

    pub fn mul(&self, other: &Form) -> Form {
        let f = self.field;
        let mut out = Form::zero(f, self.degree + other.degree);
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                let i = monomial_index(e);
                out.coeffs[i] = f.add(out.coeffs[i], f.mul(ca, cb));
            }
        }
        out
    }

    pub fn add(&self, other: &Form) -> Result<Form> {
        if self.degree != other.degree {
            return Err(Error::Malformed(format!(
                "cannot add forms of degrees {} and {}",
                self.degree, other.degree
            )));
        }
        let f = self.field;
        Ok(Form {
            field: f,
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        })
    }

    pub fn product(field: PrimeField, factors: &[Form]) -> Form {
        factors
            .iter()
            .fold(Form::from_coeffs(field, 0, vec![1]), |acc, g| acc.mul(g))
    }

    /// Partial derivative in variable `var` (0 = x, 1 = y, 2 = z).
    pub fn partial(&self, var: usize) -> Form {
        let f = self.field;
        if self.degree == 0 {
            return Form::zero(f, 0);
        }
        let mut out = Form::zero(f, self.degree - 1);
        for (e, c) in self.terms() {
            if e[var] == 0 {
                continue;
            }
            let mut e2 = e;
            e2[var] -= 1;
            let i = monomial_index(e2);
            let k = u64::from(e[var]) % f.modulus();
            out.coeffs[i] = f.add(out.coeffs[i], f.mul(c, k));
        }
        out
    }

    /// `f(x, t, z)` as a polynomial in `t`, low degree first.
    pub fn restrict_y(&self, x: u64, z: u64) -> Vec<u64> {
        let f = &self.field;
        let mut out = vec![0u64; self.degree as usize + 1];
        for (e, c) in self.terms() {
            let v = f.mul(c, f.mul(f.pow(x, u64::from(e[0])), f.pow(z, u64::from(e[2]))));
            out[e[1] as usize] = f.add(out[e[1] as usize], v);
        }
        trim(&mut out);
        out
    }

    /// `f(t, y, z)` as a polynomial in `t`, low degree first.
    pub fn restrict_x(&self, y: u64, z: u64) -> Vec<u64> {
        let f = &self.field;
        let mut out = vec![0u64; self.degree as usize + 1];
        for (e, c) in self.terms() {
            let v = f.mul(c, f.mul(f.pow(y, u64::from(e[1])), f.pow(z, u64::from(e[2]))));
            out[e[0] as usize] = f.add(out[e[0] as usize], v);
        }
        trim(&mut out);
        out
    }
}

impl std::fmt::Display for Form {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return out.write_str("0");
        }
        let parts: Vec<String> = terms
            .iter()
            .map(|(e, c)| {
                let mut s = c.to_string();
                for (name, k) in ["x", "y", "z"].iter().zip(e) {
                    match k {
                        0 => {}
                        1 => s.push_str(&format!("*{name}")),
                        _ => s.push_str(&format!("*{name}^{k}")),
                    }
                }
                s
            })
            .collect();
        out.write_str(&parts.join(" + "))
    }
}

// Dense univariate polynomials, lowest coefficient first, no trailing zeros.

pub(crate) fn trim(p: &mut Vec<u64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn deg(p: &[u64]) -> isize {
    p.len() as isize - 1
}

pub(crate) fn eval_uni(f: &PrimeField, p: &[u64], t: u64) -> u64 {
    p.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, t), c))
}

fn rem(f: &PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    div_rem(f, a, b).1
}

fn div_rem(f: &PrimeField, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = f.inv(b[db]);
    let mut q = vec![0u64; r.len() - db];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let c = f.mul(r[r.len() - 1], lead_inv);
        q[k] = c;
        for (j, &bj) in b.iter().enumerate() {
            r[k + j] = f.sub(r[k + j], f.mul(c, bj));
        }
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

fn mul_mod(f: &PrimeField, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    rem(f, &out, m)
}

fn pow_mod(f: &PrimeField, base: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
    let mut acc = rem(f, &[1], m);
    let mut b = rem(f, base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(f, &acc, &b, m);
        }
        b = mul_mod(f, &b, &b, m);
        e >>= 1;
    }
    acc
}

fn monic(f: &PrimeField, p: &[u64]) -> Vec<u64> {
    let inv = f.inv(*p.last().expect("nonzero polynomial"));
    p.iter().map(|&c| f.mul(c, inv)).collect()
}

fn gcd(f: &PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(f, &a, &b);
        a = b;
        b = r;
    }
    if a.is_empty() {
        a
    } else {
        monic(f, &a)
    }
}

/// Distinct roots in `F_p` of a nonzero polynomial, ascending.
///
/// Small fields are scanned directly; otherwise the split part
/// `gcd(g, t^p - t)` is factored by equal-degree splitting with shifts
/// `t + a`, `a = 0, 1, ...`, which keeps the result deterministic.
pub fn roots(f: &PrimeField, g: &[u64]) -> Vec<u64> {
    let mut g = g.to_vec();
    trim(&mut g);
    assert!(!g.is_empty(), "roots of the zero polynomial");
    if g.len() == 1 {
        return Vec::new();
    }
    let p = f.modulus();
    if p <= 256 {
        return (0..p).filter(|&t| eval_uni(f, &g, t) == 0).collect();
    }
    let g = monic(f, &g);
    let mut xp = pow_mod(f, &[0, 1], p, &g);
    xp.resize(xp.len().max(2), 0);
    xp[1] = f.sub(xp[1], 1);
    trim(&mut xp);
    let h = gcd(f, &g, &xp);
    let mut out = Vec::new();
    split(f, &h, &mut out);
    out.sort_unstable();
    out
}

fn split(f: &PrimeField, h: &[u64], out: &mut Vec<u64>) {
    match deg(h) {
        d if d < 1 => {}
        1 => out.push(f.neg(f.mul(h[0], f.inv(h[1])))),
        _ => {
            let e = (f.modulus() - 1) / 2;
            for a in 0.. {
                let mut w = pow_mod(f, &[a % f.modulus(), 1], e, h);
                if w.is_empty() {
                    continue;
                }
                w[0] = f.sub(w[0], 1);
                trim(&mut w);
                let k = gcd(f, h, &w);
                if deg(&k) >= 1 && deg(&k) < deg(h) {
                    let (q, _) = div_rem(f, h, &k);
                    split(f, &k, out);
                    split(f, &q, out);
                    return;
                }
            }
        }
    }
}
