use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::elim::rank;
use super::matrix::IntMatrix;

/// Vector of exact rationals. `BigRational` keeps every entry reduced with a
/// positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatVector(Vec<BigRational>);

impl RatVector {
    pub fn new(entries: Vec<BigRational>) -> Self {
        RatVector(entries)
    }

    pub fn from_ints<T: Clone + Into<BigInt>>(xs: &[T]) -> Self {
        RatVector(
            xs.iter()
                .cloned()
                .map(|x| BigRational::from_integer(x.into()))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Entries as integers when every denominator is 1.
    pub fn as_integers(&self) -> Option<Vec<BigInt>> {
        self.0
            .iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect()
    }

    /// Positive rescaling to a primitive integer vector (content 1) with
    /// first nonzero entry positive. The zero vector stays zero.
    pub fn primitive_integers(&self) -> Vec<BigInt> {
        let den_lcm = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = self
            .0
            .iter()
            .map(|x| x.numer() * (&den_lcm / x.denom()))
            .collect();
        normalize_primitive(ints)
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Divides out the content and flips sign so the first nonzero entry is
/// positive.
pub(crate) fn normalize_primitive(mut xs: Vec<BigInt>) -> Vec<BigInt> {
    let content = xs.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if content.is_zero() {
        return xs;
    }
    let negate = xs
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(Signed::is_negative);
    for x in xs.iter_mut() {
        *x = &*x / &content;
        if negate {
            *x = -&*x;
        }
    }
    xs
}

/// Rank of a list of equal-length rational vectors.
pub fn rank_of_vectors(vs: &[RatVector]) -> usize {
    if vs.is_empty() {
        return 0;
    }
    let rows: Vec<Vec<BigInt>> = vs.iter().map(RatVector::primitive_integers).collect();
    rank(&IntMatrix::from_rows(&rows).expect("vectors have equal length"))
}

/// Whether two families of vectors span the same subspace.
pub fn same_span(a: &[RatVector], b: &[RatVector]) -> bool {
    let ra = rank_of_vectors(a);
    let rb = rank_of_vectors(b);
    if ra != rb {
        return false;
    }
    let both: Vec<RatVector> = a.iter().chain(b).cloned().collect();
    rank_of_vectors(&both) == ra
}

/// Whether `x` lies in the span of `basis`.
pub fn in_span(basis: &[RatVector], x: &RatVector) -> bool {
    let mut ext = basis.to_vec();
    ext.push(x.clone());
    rank_of_vectors(&ext) == rank_of_vectors(basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_scaling() {
        let x = RatVector::new(vec![
            BigRational::new((-1).into(), 2.into()),
            BigRational::new(3.into(), 4.into()),
            BigRational::zero(),
        ]);
        let want: Vec<BigInt> = vec![2.into(), (-3).into(), 0.into()];
        assert_eq!(x.primitive_integers(), want);
        assert!(x.as_integers().is_none());
        let z = RatVector::from_ints(&[0, 0]);
        assert!(z.is_zero());
        assert_eq!(z.primitive_integers(), vec![BigInt::zero(), BigInt::zero()]);
    }

    #[test]
    fn spans() {
        let a = vec![
            RatVector::from_ints(&[1, 0, 1]),
            RatVector::from_ints(&[0, 1, 1]),
        ];
        let b = vec![
            RatVector::from_ints(&[1, 1, 2]),
            RatVector::from_ints(&[1, -1, 0]),
        ];
        assert!(same_span(&a, &b));
        assert!(in_span(&a, &RatVector::from_ints(&[2, 3, 5])));
        assert!(!in_span(&a, &RatVector::from_ints(&[0, 0, 1])));
        assert!(!same_span(&a, &b[..1]));
    }
}
