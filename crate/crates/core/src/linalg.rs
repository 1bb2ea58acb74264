//! Exact Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use crate::rat::Rat;

pub type Matrix = Vec<Vec<Rat>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Matrix, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = Rat::one() / &m[row][col];
        for c in m[row].iter_mut() {
            *c *= &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..m[r].len() {
                    let delta = &f * &m[row][c];
                    m[r][c] -= delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// A solution of `a·x = b` with all free variables set to zero, or `None`
/// if the system is inconsistent.
pub fn solve(a: &Matrix, b: &[Rat], ncols: usize) -> Option<Vec<Rat>> {
    let mut m: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m, ncols);
    for row in m.iter().skip(pivots.len()) {
        if !row[ncols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][ncols].clone();
    }
    Some(x)
}

/// A basis of `{x : a·x = 0}`.
pub fn nullspace(a: &Matrix, ncols: usize) -> Vec<Vec<Rat>> {
    let mut m = a.clone();
    let pivots = rref(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); ncols];
            v[f] = Rat::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

pub fn rank(a: &Matrix, ncols: usize) -> usize {
    let mut m = a.clone();
    rref(&mut m, ncols).len()
}
