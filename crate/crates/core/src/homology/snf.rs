//! Dense integer matrices and Smith normal form.
//!
//! All arithmetic is arbitrary precision. The reduction picks the
//! minimal-magnitude nonzero entry of the trailing submatrix as pivot, which
//! keeps coefficient growth tame on the sparse boundary matrices produced by
//! normalized chains.

use crate::error::Error;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self, Error> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::dim("ragged rows in matrix literal".to_string()));
        }
        let data = rows.into_iter().flatten().map(BigInt::from).collect();
        Ok(IntMatrix { rows: r, cols: c, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: impl Into<BigInt>) {
        self.data[r * self.cols + c] = v.into();
    }

    pub fn add_to_entry(&mut self, r: usize, c: usize, delta: i64) {
        self.data[r * self.cols + c] += delta;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// `self * other`, erroring on mismatched inner dimensions.
    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, Error> {
        if self.cols != other.rows {
            return Err(Error::dim(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let lhs = self.get(i, k);
                if lhs.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let rhs = other.get(k, j);
                    if rhs.is_zero() {
                        continue;
                    }
                    let v = lhs * rhs;
                    out.data[i * out.cols + j] += v;
                }
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row_i -= q * row_t
    fn row_sub(&mut self, i: usize, t: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = q * self.get(t, j);
            self.data[i * self.cols + j] -= v;
        }
    }

    /// col_j -= q * col_t
    fn col_sub(&mut self, j: usize, t: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = q * self.get(i, t);
            self.data[i * self.cols + j] -= v;
        }
    }

    /// row_i += row_t
    fn row_add(&mut self, i: usize, t: usize) {
        for j in 0..self.cols {
            let v = self.get(t, j).clone();
            self.data[i * self.cols + j] += v;
        }
    }
}

/// The nonzero diagonal of the Smith normal form, positive and in
/// divisibility order (each entry divides the next). The number of entries
/// is the rank.
pub fn smith_invariants(m: &IntMatrix) -> Vec<BigInt> {
    let mut a = m.clone();
    let lim = a.rows.min(a.cols);
    let mut t = 0;
    while t < lim {
        let Some((pi, pj)) = min_nonzero(&a, t) else { break };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        loop {
            let mut restart = false;
            // clear the pivot column
            for i in t + 1..a.rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = a.get(i, t) / a.get(t, t);
                a.row_sub(i, t, &q);
                if !a.get(i, t).is_zero() {
                    // remainder is strictly smaller than the pivot
                    a.swap_rows(t, i);
                    restart = true;
                }
            }
            if restart {
                continue;
            }
            // clear the pivot row
            for j in t + 1..a.cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = a.get(t, j) / a.get(t, t);
                a.col_sub(j, t, &q);
                if !a.get(t, j).is_zero() {
                    a.swap_cols(t, j);
                    restart = true;
                }
            }
            if restart {
                continue;
            }
            // pivot must divide the whole trailing submatrix
            let mut fixed = false;
            'scan: for i in t + 1..a.rows {
                for j in t + 1..a.cols {
                    if !(a.get(i, j) % a.get(t, t)).is_zero() {
                        a.row_add(t, i);
                        fixed = true;
                        break 'scan;
                    }
                }
            }
            if !fixed {
                break;
            }
        }
        t += 1;
    }
    let mut invariants = Vec::with_capacity(t);
    for k in 0..t {
        let d = a.get(k, k).abs();
        if d.is_zero() {
            break;
        }
        invariants.push(d);
    }
    debug_assert!(invariants
        .windows(2)
        .all(|w| (&w[1] % &w[0]).is_zero()));
    invariants
}

fn min_nonzero(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..a.rows {
        for j in t..a.cols {
            let v = a.get(i, j);
            if v.is_zero() {
                continue;
            }
            let mag = v.abs();
            match &best {
                Some((_, _, m)) if *m <= mag => {}
                _ => best = Some((i, j, mag)),
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}
