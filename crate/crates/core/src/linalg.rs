//! Small exact linear algebra over the rationals.
//!
//! Everything in this crate stays at desk scale (matrices up to roughly
//! 8 x 8), so plain Gaussian elimination with `Rational64` entries is all
//! we need. No pivot-size heuristics, no floating point.

// elimination reads one row while writing another; index loops are the
// clear way to express that
#![allow(clippy::needless_range_loop)]

use num_rational::Rational64;
use num_traits::Zero;

pub type Rat = Rational64;

/// Solve the square system `a * x = b` exactly. Returns `None` when the
/// matrix is singular.
pub fn solve_square(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    debug_assert!(a.iter().all(|row| row.len() == n));
    debug_assert_eq!(b.len(), n);
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(*rhs);
            r
        })
        .collect();

    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = m[col][col];
        for entry in m[col][col..].iter_mut() {
            *entry /= inv;
        }
        for row in 0..n {
            if row != col && !m[row][col].is_zero() {
                let factor = m[row][col];
                for c in col..=n {
                    let sub = factor * m[col][c];
                    m[row][c] -= sub;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n]).collect())
}

/// Solve a (possibly overdetermined) system `a * x = b` with linearly
/// independent columns. Returns the unique solution if the system is
/// consistent, `None` otherwise.
pub fn solve_consistent(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    debug_assert_eq!(b.len(), rows);
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(*rhs);
            r
        })
        .collect();

    let mut pivot_rows = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][col].is_zero()) else {
            return None; // dependent columns; caller promised independence
        };
        m.swap(r, p);
        let inv = m[r][col];
        for entry in m[r][col..].iter_mut() {
            *entry /= inv;
        }
        for row in 0..rows {
            if row != r && !m[row][col].is_zero() {
                let factor = m[row][col];
                for c in col..=cols {
                    let sub = factor * m[r][c];
                    m[row][c] -= sub;
                }
            }
        }
        pivot_rows.push(r);
        r += 1;
        if r == rows {
            break;
        }
    }
    // Consistency: every non-pivot row must have reduced to 0 = 0.
    for row in r..rows {
        if !m[row][cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); cols];
    for (col, &row) in pivot_rows.iter().enumerate() {
        x[col] = m[row][cols];
    }
    Some(x)
}

/// Integer dot product; entries stay well inside `i64` at desk scale.
pub fn dot_i64(a: &[i64], b: &[i64]) -> i64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Dot product of a rational vector against an integer one.
pub fn dot_rat_i64(a: &[Rat], b: &[i64]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(Rat::zero(), |acc, (x, y)| acc + *x * Rat::from_integer(*y))
}
