//! Exact integer matrices and Smith normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::from(1));
        }
        m
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().map(|&v| BigInt::from(v)).collect(),
        }
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

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// `None` when the shapes do not match.
    pub fn mul(&self, other: &IntMatrix) -> Option<IntMatrix> {
        if self.cols != other.rows {
            return None;
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        Some(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// row[dst] -= k * row[src]
    fn sub_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for c in 0..self.cols {
            let v = &self.data[src * self.cols + c] * k;
            self.data[dst * self.cols + c] -= v;
        }
    }

    fn sub_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for r in 0..self.rows {
            let v = &self.data[r * self.cols + src] * k;
            self.data[r * self.cols + dst] -= v;
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: IntMatrix,
    pub rank: usize,
    /// Nonzero diagonal entries, each dividing the next.
    pub invariant_factors: Vec<BigInt>,
}

/// Diagonalizes by unimodular row and column operations, pivoting on the
/// smallest nonzero absolute value.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut a = m.clone();
    let limit = a.rows.min(a.cols);
    let mut t = 0;
    while t < limit {
        let Some((pr, pc)) = smallest_entry(&a, t) else { break };
        a.swap_rows(t, pr);
        a.swap_cols(t, pc);
        loop {
            let mut clean = true;
            for r in t + 1..a.rows {
                if a.get(r, t).is_zero() {
                    continue;
                }
                let q = a.get(r, t).div_floor(a.get(t, t));
                a.sub_row(r, t, &q);
                if !a.get(r, t).is_zero() {
                    clean = false;
                }
            }
            for c in t + 1..a.cols {
                if a.get(t, c).is_zero() {
                    continue;
                }
                let q = a.get(t, c).div_floor(a.get(t, t));
                a.sub_col(c, t, &q);
                if !a.get(t, c).is_zero() {
                    clean = false;
                }
            }
            if clean {
                // The pivot must divide the rest of the block.
                let bad = (t + 1..a.rows)
                    .flat_map(|r| (t + 1..a.cols).map(move |c| (r, c)))
                    .find(|&(r, c)| !a.get(r, c).is_multiple_of(a.get(t, t)));
                match bad {
                    None => break,
                    Some((r, _)) => {
                        let one = BigInt::from(-1);
                        a.sub_row(t, r, &one);
                    }
                }
            }
            // Move the smallest remaining entry of row/column t to the pivot.
            let (mut br, mut bc) = (t, t);
            for r in t..a.rows {
                if !a.get(r, t).is_zero() && (a.get(br, bc).is_zero() || a.get(r, t).abs() < a.get(br, bc).abs()) {
                    (br, bc) = (r, t);
                }
            }
            for c in t..a.cols {
                if !a.get(t, c).is_zero() && (a.get(br, bc).is_zero() || a.get(t, c).abs() < a.get(br, bc).abs()) {
                    (br, bc) = (t, c);
                }
            }
            a.swap_rows(t, br);
            a.swap_cols(t, bc);
        }
        if a.get(t, t).is_negative() {
            let v = -a.get(t, t).clone();
            a.set(t, t, v);
        }
        t += 1;
    }
    let invariant_factors: Vec<BigInt> = (0..limit).map(|i| a.get(i, i).clone()).filter(|v| !v.is_zero()).collect();
    SmithForm {
        rank: invariant_factors.len(),
        diagonal: a,
        invariant_factors,
    }
}

fn smallest_entry(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for r in t..a.rows {
        for c in t..a.cols {
            let v = a.get(r, c);
            if !v.is_zero() && best.is_none_or(|(br, bc)| v.abs() < a.get(br, bc).abs()) {
                best = Some((r, c));
            }
        }
    }
    best
}
