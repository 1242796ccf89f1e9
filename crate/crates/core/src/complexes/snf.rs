//! Smith normal form of integer matrices.
//!
//! Elimination runs in `i128` with checked arithmetic and restarts over
//! `BigInt` if an entry would overflow. Pivots are chosen by least
//! absolute value.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

/// A dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![0; rows * cols] }
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix { rows: rows.len(), cols, entries: rows.concat() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// `self · other`, or `None` on overflow.
    pub fn checked_mul(&self, other: &IntMatrix) -> Option<IntMatrix> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j).checked_add(a.checked_mul(other.get(k, j))?)?;
                    out.set(i, j, v);
                }
            }
        }
        Some(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Non-zero invariant factors `d_1 | d_2 | … | d_r`, all positive.
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let small: Vec<i128> = m.entries.iter().map(|&e| e as i128).collect();
    let diagonal = match eliminate(small, m.rows, m.cols) {
        Some(d) => d.into_iter().map(BigInt::from).collect(),
        None => {
            let big: Vec<BigInt> = m.entries.iter().map(|&e| BigInt::from(e)).collect();
            eliminate(big, m.rows, m.cols).expect("BigInt arithmetic does not overflow")
        }
    };
    SmithForm { rank: diagonal.len(), diagonal }
}

/// Entry arithmetic that may refuse to overflow.
trait Entry: Clone + Integer + Signed {
    /// `self − q·b`.
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self>;
    fn add_checked(&self, b: &Self) -> Option<Self>;
}

impl Entry for i128 {
    // i128::MIN is refused so that `abs` never overflows
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*b)?).filter(|&v| v != i128::MIN)
    }

    fn add_checked(&self, b: &Self) -> Option<Self> {
        self.checked_add(*b).filter(|&v| v != i128::MIN)
    }
}

impl Entry for BigInt {
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        Some(self - q * b)
    }

    fn add_checked(&self, b: &Self) -> Option<Self> {
        Some(self + b)
    }
}

fn eliminate<T: Entry>(mut a: Vec<T>, rows: usize, cols: usize) -> Option<Vec<T>> {
    let at = |i: usize, j: usize| i * cols + j;
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        // least non-zero entry of the remaining block
        let Some((pi, pj)) = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[at(i, j)].is_zero())
            .min_by(|&(i, j), &(k, l)| a[at(i, j)].abs().cmp(&a[at(k, l)].abs()))
        else {
            break;
        };
        swap_rows(&mut a, cols, t, pi);
        swap_cols(&mut a, cols, t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !a[at(i, t)].is_zero() {
                    let q = a[at(i, t)].div_floor(&a[at(t, t)]);
                    for j in t..cols {
                        a[at(i, j)] = a[at(i, j)].sub_mul(&q, &a[at(t, j)])?;
                    }
                    clean &= a[at(i, t)].is_zero();
                }
            }
            for j in t + 1..cols {
                if !a[at(t, j)].is_zero() {
                    let q = a[at(t, j)].div_floor(&a[at(t, t)]);
                    for i in t..rows {
                        a[at(i, j)] = a[at(i, j)].sub_mul(&q, &a[at(i, t)])?;
                    }
                    clean &= a[at(t, j)].is_zero();
                }
            }
            if !clean {
                // a remainder smaller than the pivot is left in row or column t
                let best_row =
                    (t..rows).filter(|&i| !a[at(i, t)].is_zero()).min_by_key(|&i| a[at(i, t)].abs()).expect("pivot");
                let best_col =
                    (t..cols).filter(|&j| !a[at(t, j)].is_zero()).min_by_key(|&j| a[at(t, j)].abs()).expect("pivot");
                if a[at(best_row, t)].abs() <= a[at(t, best_col)].abs() {
                    swap_rows(&mut a, cols, t, best_row);
                } else {
                    swap_cols(&mut a, cols, t, best_col);
                }
                continue;
            }
            let pivot = a[at(t, t)].clone();
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[at(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    for j in t..cols {
                        a[at(t, j)] = a[at(t, j)].add_checked(&a[at(i, j)])?;
                    }
                }
                None => break,
            }
        }
        diag.push(a[at(t, t)].abs());
    }
    Some(diag)
}

fn swap_rows<T>(a: &mut [T], cols: usize, i: usize, k: usize) {
    if i != k {
        for j in 0..cols {
            a.swap(i * cols + j, k * cols + j);
        }
    }
}

fn swap_cols<T>(a: &mut [T], cols: usize, j: usize, l: usize) {
    if j != l {
        for row in a.chunks_mut(cols) {
            row.swap(j, l);
        }
    }
}
