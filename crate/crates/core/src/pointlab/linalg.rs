//! Gaussian elimination over a prime field with first-nonzero pivoting.

use super::field::PrimeField;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(field: &PrimeField, rows: &mut Vec<Vec<u64>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else {
            continue;
        };
        rows.swap(r, k);
        let inv = field.inv(rows[r][c]);
        for v in rows[r].iter_mut() {
            *v = field.mul(*v, inv);
        }
        let pivot_row = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k == r || row[c] == 0 {
                continue;
            }
            let factor = row[c];
            for (v, &pv) in row.iter_mut().zip(&pivot_row).skip(c) {
                *v = field.sub(*v, field.mul(factor, pv));
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(field: &PrimeField, rows: &[Vec<u64>]) -> usize {
    let Some(ncols) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut m = rows.to_vec();
    rref(field, &mut m, ncols).len()
}

/// Basis of `{v : M v = 0}`, one vector per free column.
pub fn kernel(field: &PrimeField, rows: &[Vec<u64>], ncols: usize) -> Vec<Vec<u64>> {
    let mut m = rows.to_vec();
    let pivots = rref(field, &mut m, ncols);
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![0u64; ncols];
            v[free] = 1;
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = field.neg(row[free]);
            }
            v
        })
        .collect()
}

pub fn dot(field: &PrimeField, a: &[u64], b: &[u64]) -> u64 {
    a.iter()
        .zip(b)
        .fold(0, |acc, (&x, &y)| field.add(acc, field.mul(x, y)))
}
