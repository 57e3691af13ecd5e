//! Dense exact linear algebra over `Q`.

use num_traits::{One, Zero};

use super::Rational;

/// Row-reduces `a` in place to reduced echelon form and returns the pivot
/// column of each non-zero row. Columns are scanned in the given order.
pub fn rref_with_order(a: &mut Vec<Vec<Rational>>, order: &[usize]) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for &col in order {
        if row == a.len() {
            break;
        }
        let Some(p) = (row..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = Rational::one() / &a[row][col];
        for x in a[row].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[row].clone();
        for (i, other) in a.iter_mut().enumerate() {
            if i == row || other[col].is_zero() {
                continue;
            }
            let f = other[col].clone();
            for (x, y) in other.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    a.truncate(row);
    pivots
}

pub fn rref(a: &mut Vec<Vec<Rational>>) -> Vec<usize> {
    let cols = a.first().map_or(0, Vec::len);
    let order: Vec<usize> = (0..cols).collect();
    rref_with_order(a, &order)
}

/// Solution set of `A x = b`.
#[derive(Debug, Clone, PartialEq)]
pub enum Solution {
    Inconsistent,
    /// A particular solution (free variables set to zero) and the kernel dimension.
    Solved {
        x: Vec<Rational>,
        kernel_dim: usize,
    },
}

/// `a` is given row-major with `a.len()` equations in `ncols` unknowns.
pub fn solve(a: &[Vec<Rational>], b: &[Rational], ncols: usize) -> Solution {
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let order: Vec<usize> = (0..=ncols).collect();
    let pivots = rref_with_order(&mut aug, &order);
    if pivots.contains(&ncols) {
        return Solution::Inconsistent;
    }
    let mut x = vec![Rational::zero(); ncols];
    for (row, &col) in aug.iter().zip(&pivots) {
        x[col] = row[ncols].clone();
    }
    Solution::Solved { x, kernel_dim: ncols - pivots.len() }
}
