use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{mat_mul, IntMatrix};
use crate::error::Result;

/// Integer polynomial, coefficients in ascending degree, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial(Vec<BigInt>);

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| c.into()).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial(Vec::new())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `t^n`
    pub fn monomial(n: usize) -> Self {
        let mut c = vec![BigInt::zero(); n + 1];
        c[n] = BigInt::one();
        IntPolynomial(c)
    }

    /// `t - root`
    pub fn linear(root: &BigInt) -> Self {
        IntPolynomial(vec![-root, BigInt::one()])
    }

    /// `sign · Π (t - root)^mult`
    pub fn from_roots(sign: &BigInt, roots: &[(BigInt, usize)]) -> Self {
        let mut p = Self::constant(sign.clone());
        for (root, mult) in roots {
            let lin = Self::linear(root);
            for _ in 0..*mult {
                p = p.mul(&lin);
            }
        }
        p
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.0.last()
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.0
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// JSON list of coefficients, ascending degree.
    pub fn to_json(&self) -> String {
        serde_json::Value::Array(self.0.iter().map(crate::json::bigint).collect()).to_string()
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let show_mag = d == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match d {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{d}")?,
            }
        }
        Ok(())
    }
}

/// `det(a - tI)` by the Faddeev-LeVerrier recurrence.
///
/// With `N_0 = 0`, `c_n = 1`, each step forms `N_k = a·N_{k-1} + c_{n-k+1}·I`
/// and `c_{n-k} = -tr(a·N_k) / k`. The traces are integers divisible by
/// `k` for integer input, so the recurrence stays in exact integers.
pub fn char_poly(a: &IntMatrix) -> Result<IntPolynomial> {
    a.require_square()?;
    let n = a.rows();
    // coefficients of det(tI - a), ascending
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    // a·N_{k-1}, starting from N_0 = 0
    let mut an = IntMatrix::zeros(n, n);
    for k in 1..=n {
        let nk = an.add(&IntMatrix::scalar(n, &c[n - k + 1]))?;
        an = mat_mul(a, &nk)?;
        let tr: BigInt = an.diagonal().into_iter().sum();
        let (q, r) = tr.div_rem(&BigInt::from(k));
        assert!(r.is_zero(), "trace not divisible by {k}");
        c[n - k] = -q;
    }
    if n % 2 == 1 {
        for x in c.iter_mut() {
            *x = -&*x;
        }
    }
    Ok(IntPolynomial::new(c))
}

/// `p(a)` by Horner's rule in the matrix ring.
pub fn mat_poly_eval(p: &IntPolynomial, a: &IntMatrix) -> Result<IntMatrix> {
    a.require_square()?;
    let n = a.rows();
    let mut acc = IntMatrix::zeros(n, n);
    for c in p.coeffs().iter().rev() {
        acc = mat_mul(&acc, a)?.add(&IntMatrix::scalar(n, c))?;
    }
    Ok(acc)
}
