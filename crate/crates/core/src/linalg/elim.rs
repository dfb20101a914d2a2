//! Fraction-free elimination. Every intermediate entry is a minor of the
//! input, so all divisions below are exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::IntMatrix;
use super::vector::{normalize_primitive, RatVector};
use crate::error::{Error, Result};

fn exact_div(num: BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num.div_rem(den);
    debug_assert!(r.is_zero(), "fraction-free step left a remainder");
    q
}

/// Rank over the rationals by Bareiss elimination. The pivot in each column
/// is the first nonzero entry at or below the current row.
pub fn rank(a: &IntMatrix) -> usize {
    let (rows, cols, mut m) = a.clone().into_parts();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i * cols + c].is_zero()) else {
            continue;
        };
        if p != r {
            for j in c..cols {
                m.swap(p * cols + j, r * cols + j);
            }
        }
        let piv = m[r * cols + c].clone();
        for i in r + 1..rows {
            let lead = std::mem::take(&mut m[i * cols + c]);
            if lead.is_zero() {
                // Row i still needs the rescale by piv/prev.
                if piv != prev {
                    for j in c + 1..cols {
                        let x = std::mem::take(&mut m[i * cols + j]);
                        m[i * cols + j] = exact_div(&piv * x, &prev);
                    }
                }
                continue;
            }
            for j in c + 1..cols {
                let x = std::mem::take(&mut m[i * cols + j]);
                let num = &piv * x - &lead * &m[r * cols + j];
                m[i * cols + j] = exact_div(num, &prev);
            }
        }
        prev = piv;
        r += 1;
    }
    r
}

/// Fraction-free Gauss-Jordan form: returns the reduced matrix, the pivot
/// columns, and the common pivot value.
fn gauss_jordan(a: &IntMatrix) -> (Vec<BigInt>, usize, Vec<usize>, BigInt) {
    let (rows, cols, mut m) = a.clone().into_parts();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i * cols + c].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                m.swap(p * cols + j, r * cols + j);
            }
        }
        let piv = m[r * cols + c].clone();
        for i in (0..rows).filter(|&i| i != r) {
            let lead = std::mem::take(&mut m[i * cols + c]);
            for j in (0..cols).filter(|&j| j != c) {
                let x = std::mem::take(&mut m[i * cols + j]);
                let num = &piv * x - &lead * &m[r * cols + j];
                m[i * cols + j] = exact_div(num, &prev);
            }
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    (m, cols, pivots, prev)
}

/// Basis of the right null space, one primitive integer vector per free
/// column in ascending column order.
pub fn kernel_basis(a: &IntMatrix) -> Vec<RatVector> {
    let (m, cols, pivots, d) = gauss_jordan(a);
    let mut is_pivot = vec![false; cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            // Row i reads d·x[pivot_i] + Σ_free m[i][f]·x[f] = 0.
            let mut x = vec![BigInt::zero(); cols];
            x[f] = d.clone();
            for (i, &c) in pivots.iter().enumerate() {
                x[c] = -&m[i * cols + f];
            }
            RatVector::from_ints(&normalize_primitive(x))
        })
        .collect()
}

/// Whether `a·x = μ·x` holds exactly.
pub fn is_eigenvector(a: &IntMatrix, x: &RatVector, mu: &BigInt) -> Result<bool> {
    a.require_square()?;
    if x.len() != a.cols() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix with vector of length {}",
            a.rows(),
            a.cols(),
            x.len()
        )));
    }
    if x.is_zero() {
        return Err(Error::ZeroVector);
    }
    let mu = BigRational::from_integer(mu.clone());
    let xs = x.entries();
    Ok((0..a.rows()).all(|i| {
        let lhs: BigRational = a
            .row(i)
            .iter()
            .zip(xs)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, v)| v * BigRational::from_integer(c.clone()))
            .sum();
        lhs == &mu * &xs[i]
    }))
}
