use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
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
        Self::from_fn(n, n, |i, j| {
            if i == j {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
    }

    /// `c·I`
    pub fn scalar(n: usize, c: &BigInt) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { c.clone() } else { BigInt::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    /// Builds from nested rows; all rows must have equal length.
    pub fn from_rows<T: Clone + Into<BigInt>>(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row {} has {} entries, row 1 has {}",
                i + 1,
                r.len(),
                cols
            )));
        }
        let data = rows
            .iter()
            .flat_map(|r| r.iter().cloned().map(Into::into))
            .collect();
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    pub fn row_sums(&self) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<BigInt> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.get(i, j)).sum())
            .collect()
    }

    /// `self - c·I`
    pub fn shift_diagonal(&self, c: &BigInt) -> Result<IntMatrix> {
        self.require_square()?;
        let mut out = self.clone();
        for i in 0..self.rows {
            let x = out.get(i, i) - c;
            out.set(i, i, x);
        }
        Ok(out)
    }

    pub fn add(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Multiplies by a column vector.
    pub fn mul_vec(&self, x: &[BigInt]) -> Result<Vec<BigInt>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix times vector of length {}",
                self.rows,
                self.cols,
                x.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Values set of the entries off the main diagonal, ascending.
    pub fn off_diagonal_values(&self) -> Vec<BigInt> {
        let mut vals: Vec<BigInt> = (0..self.rows)
            .flat_map(|i| (0..self.cols).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        vals.sort();
        vals.dedup();
        vals
    }

    pub(crate) fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub(crate) fn into_parts(self) -> (usize, usize, Vec<BigInt>) {
        (self.rows, self.cols, self.data)
    }

    /// Comma-separated rows, one line per row, trailing newline.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::Value::Array(
            (0..self.rows)
                .map(|i| {
                    serde_json::Value::Array(self.row(i).iter().map(crate::json::bigint).collect())
                })
                .collect(),
        )
    }

    /// Nested arrays, e.g. `[[1,0],[0,1]]`.
    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Exact product `a·b`.
pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch(format!(
            "cannot multiply {}x{} by {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let mut out = IntMatrix::zeros(a.rows, b.cols);
    for i in 0..a.rows {
        let arow = a.row(i);
        let orow = &mut out.data[i * b.cols..(i + 1) * b.cols];
        for (l, x) in arow.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (o, y) in orow.iter_mut().zip(b.row(l)) {
                if !y.is_zero() {
                    *o += x * y;
                }
            }
        }
    }
    Ok(out)
}

impl std::ops::Mul for &IntMatrix {
    type Output = IntMatrix;

    /// Panics on dimension mismatch; use [`mat_mul`] for a checked product.
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        mat_mul(self, rhs).expect("matrix dimensions must agree")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let x = m(&[&[1, -2, 3], &[4, 5, -6], &[7, 8, 9]]);
        assert_eq!(mat_mul(&IntMatrix::identity(3), &x).unwrap(), x);
        assert_eq!(mat_mul(&x, &IntMatrix::identity(3)).unwrap(), x);
    }

    #[test]
    fn dimension_mismatch() {
        let a = IntMatrix::zeros(2, 3);
        assert!(matches!(mat_mul(&a, &a), Err(Error::DimensionMismatch(_))));
        assert!(matches!(
            a.mul_vec(&[BigInt::one()]),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(
            a.shift_diagonal(&BigInt::one()),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        ));
        assert!(IntMatrix::from_rows(&[vec![1], vec![1, 2]]).is_err());
    }

    #[test]
    fn fano_self_square() {
        // M(Fano, Fano) has 3 on the diagonal and 1 elsewhere.
        let mb = IntMatrix::from_fn(7, 7, |i, j| BigInt::from(if i == j { 3 } else { 1 }));
        let sq = mat_mul(&mb, &mb.transpose()).unwrap();
        assert!(sq.diagonal().iter().all(|x| *x == BigInt::from(15)));
        assert_eq!(sq.off_diagonal_values(), vec![BigInt::from(11)]);
    }

    #[test]
    fn emission_formats() {
        let x = m(&[&[1, -2], &[0, 30]]);
        assert_eq!(x.to_csv(), "1,-2\n0,30\n");
        assert_eq!(x.to_json(), "[[1,-2],[0,30]]");
        let big = IntMatrix::scalar(1, &"123456789012345678901234567890".parse().unwrap());
        assert_eq!(big.to_json(), "[[123456789012345678901234567890]]");
    }
}
