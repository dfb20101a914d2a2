//! Independent reference implementations and the shared design corpus.
//! The oracles are deliberately naive: no elimination, no shared code
//! with the library beyond the matrix container.

#![allow(dead_code)]

use blockspec::constructions::{
    complement_design, complete_design, cyclic_design, fixture, trivial_design, union_design,
    DifferenceSetSpec,
};
use blockspec::linalg::IntMatrix;
use blockspec::Design;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Polynomial in `t`, ascending coefficients, untrimmed.
pub type Poly = Vec<BigInt>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_assign(acc: &mut Poly, p: &Poly, sign: i32) {
    if acc.len() < p.len() {
        acc.resize(p.len(), BigInt::zero());
    }
    for (i, c) in p.iter().enumerate() {
        if sign > 0 {
            acc[i] += c;
        } else {
            acc[i] -= c;
        }
    }
}

pub fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// All permutations of `0..n` with their signs, by Heap's algorithm.
fn permutations(n: usize) -> Vec<(Vec<usize>, i32)> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut sign = 1;
    let mut out = vec![(perm.clone(), sign)];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            out.push((perm.clone(), sign));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// `det(A - tI)` by the Leibniz expansion over all permutations.
pub fn leibniz_char_poly(a: &IntMatrix) -> Poly {
    let n = a.rows();
    let mut acc: Poly = vec![BigInt::zero()];
    for (perm, sign) in permutations(n) {
        let mut term: Poly = vec![BigInt::one()];
        for (i, &j) in perm.iter().enumerate() {
            let entry = if i == j {
                vec![a.get(i, j).clone(), -BigInt::one()]
            } else {
                vec![a.get(i, j).clone()]
            };
            term = poly_mul(&term, &entry);
        }
        poly_add_assign(&mut acc, &term, sign);
    }
    trim(acc)
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut det = BigInt::zero();
    for j in 0..n {
        if rows[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = rows[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &rows[0][j] * cofactor_det(&minor);
        if j % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Largest `r` with a nonzero `r x r` minor, searching every minor.
pub fn minor_rank(a: &IntMatrix) -> usize {
    let max = a.rows().min(a.cols());
    for r in (1..=max).rev() {
        for rs in subsets(a.rows(), r) {
            for cs in subsets(a.cols(), r) {
                let sub: Vec<Vec<BigInt>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| a.get(i, j).clone()).collect())
                    .collect();
                if !cofactor_det(&sub).is_zero() {
                    return r;
                }
            }
        }
    }
    0
}

/// Triple-loop product.
pub fn schoolbook_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    assert_eq!(a.cols(), b.rows());
    let mut c = IntMatrix::zeros(a.rows(), b.cols());
    for i in 0..a.rows() {
        for j in 0..b.cols() {
            let mut s = BigInt::zero();
            for l in 0..a.cols() {
                s += a.get(i, l) * b.get(l, j);
            }
            c.set(i, j, s);
        }
    }
    c
}

/// Designs grouped by point count, with names for diagnostics.
pub fn corpus() -> Vec<(u32, Vec<(String, Design)>)> {
    let named = |name: &str, d: Design| (name.to_string(), d);
    let fano = fixture("fano").unwrap();
    let ex3_d1 = fixture("ex3_d1").unwrap();
    let qr11 = cyclic_design(&DifferenceSetSpec::new(11, &[1, 3, 4, 5, 9]).unwrap()).unwrap();
    vec![
        (
            4,
            vec![
                named("trivial(4)", trivial_design(4).unwrap()),
                named("complete(4,2)", complete_design(4, 2).unwrap()),
                named("complete(4,3)", complete_design(4, 3).unwrap()),
            ],
        ),
        (
            6,
            vec![
                named("trivial(6)", trivial_design(6).unwrap()),
                named("ex3_d1", ex3_d1.clone()),
                named("ex3_d2", fixture("ex3_d2").unwrap()),
                named("complete(6,2)", complete_design(6, 2).unwrap()),
                named("complete(6,3)", complete_design(6, 3).unwrap()),
                named("complement(ex3_d1)", complement_design(&ex3_d1).unwrap()),
            ],
        ),
        (
            7,
            vec![
                named("trivial(7)", trivial_design(7).unwrap()),
                named("fano", fano.clone()),
                named("complement(fano)", complement_design(&fano).unwrap()),
                named("complete(7,2)", complete_design(7, 2).unwrap()),
                named("complete(7,3)", complete_design(7, 3).unwrap()),
                named("ex1_d2", fixture("ex1_d2").unwrap()),
                named("union(fano,fano)", union_design(&fano, &fano).unwrap()),
                named(
                    "cyclic(7,1,2,4)",
                    cyclic_design(&DifferenceSetSpec::new(7, &[1, 2, 4]).unwrap()).unwrap(),
                ),
            ],
        ),
        (
            8,
            vec![
                named("trivial(8)", trivial_design(8).unwrap()),
                named("complete(8,2)", complete_design(8, 2).unwrap()),
                named("complete(8,3)", complete_design(8, 3).unwrap()),
            ],
        ),
        (
            11,
            vec![
                named("trivial(11)", trivial_design(11).unwrap()),
                named("cyclic(11,1,3,4,5,9)", qr11.clone()),
                named(
                    "complement(cyclic(11,1,3,4,5,9))",
                    complement_design(&qr11).unwrap(),
                ),
            ],
        ),
    ]
}

/// Every ordered pair of same-`v` corpus designs.
pub fn corpus_pairs() -> Vec<(String, Design, String, Design)> {
    let mut out = Vec::new();
    for (_, group) in corpus() {
        for (n1, d1) in &group {
            for (n2, d2) in &group {
                out.push((n1.clone(), d1.clone(), n2.clone(), d2.clone()));
            }
        }
    }
    out
}
