//! Dense exact matrices and fraction-free nullspace computation.
//!
//! Elimination is Bareiss-style on integer rows (denominators cleared up
//! front), which keeps intermediate entries as small as determinant
//! minors instead of letting them blow up multiplicatively.

use super::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Dense matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        RationalMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = Rational::zero();
                for c in 0..self.cols {
                    acc += self.get(r, c) * &v[c];
                }
                acc
            })
            .collect()
    }
}

/// Basis of the right nullspace of `m`, computed by fraction-free
/// elimination.
///
/// Each basis vector has integer entries with content 1, the entry at its
/// free column is positive, and vectors are ordered by free column
/// (reduced echelon order). Returns an empty list for a trivial
/// nullspace.
pub fn exact_nullspace(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    let rows = m.rows;
    let cols = m.cols;

    // Clear denominators row by row; the nullspace is unchanged.
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|r| {
            let mut lcm = BigInt::one();
            for c in 0..cols {
                lcm = lcm.lcm(m.get(r, c).denom());
            }
            (0..cols)
                .map(|c| {
                    let q = m.get(r, c);
                    q.numer() * (&lcm / q.denom())
                })
                .collect()
        })
        .collect();

    // Bareiss elimination with column pivoting.
    let mut pivot_cols = Vec::new();
    let mut prev_pivot = BigInt::one();
    let mut row = 0;
    for col in 0..cols {
        let Some(pivot_row) = (row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, pivot_row);
        for r in row + 1..rows {
            for c in col + 1..cols {
                let num = &a[row][col] * &a[r][c] - &a[r][col] * &a[row][c];
                a[r][c] = num / &prev_pivot;
            }
            a[r][col] = BigInt::zero();
        }
        prev_pivot = a[row][col].clone();
        pivot_cols.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    let rank = pivot_cols.len();

    // One basis vector per free column, solved by back-substitution.
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut x = vec![Rational::zero(); cols];
        x[free] = Rational::one();
        for r in (0..rank).rev() {
            let pc = pivot_cols[r];
            let mut acc = Rational::zero();
            for c in pc + 1..cols {
                if !a[r][c].is_zero() && !x[c].is_zero() {
                    acc += Rational::from_integer(a[r][c].clone()) * &x[c];
                }
            }
            x[pc] = -acc / Rational::from_integer(a[r][pc].clone());
        }
        basis.push(normalize_content(x));
    }
    basis
}

/// Scales a rational vector to integer entries with content 1, keeping
/// the last nonzero-from-free-column sign convention intact (the scale
/// factor is positive).
fn normalize_content(x: Vec<Rational>) -> Vec<Rational> {
    let mut lcm = BigInt::one();
    for q in &x {
        lcm = lcm.lcm(q.denom());
    }
    let ints: Vec<BigInt> = x.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
    let mut gcd = BigInt::zero();
    for n in &ints {
        gcd = gcd.gcd(n);
    }
    if gcd.is_zero() {
        gcd = BigInt::one();
    }
    ints.into_iter()
        .map(|n| Rational::from_integer(n / &gcd))
        .collect()
}

impl std::fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
