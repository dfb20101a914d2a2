//! Design families: trivial, complete, complement, cyclic, unions,
//! multiset differences, and the hard-coded worked-example fixtures.

use std::collections::HashMap;

use crate::design::{Block, Design, PointId};
use crate::error::{Error, Result};

/// Singleton blocks `[1], [2], .., [v]`, parameters `(v, v, 1, 1, 0)`.
pub fn trivial_design(v: u32) -> Result<Design> {
    let blocks: Vec<[u32; 1]> = (1..=v).map(|x| [x]).collect();
    Design::new(v, &blocks)
}

/// All `k`-subsets of `{1..v}` in lexicographic order.
pub fn complete_design(v: u32, k: u32) -> Result<Design> {
    if k < 1 || k >= v {
        return Err(Error::InvalidK { v, k });
    }
    let k = k as usize;
    let mut blocks = Vec::new();
    let mut cur: Vec<u32> = (1..=k as u32).collect();
    loop {
        blocks.push(cur.clone());
        // advance to the next combination
        let Some(i) = (0..k).rev().find(|&i| cur[i] < v - (k - 1 - i) as u32) else {
            break;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
    Design::new(v, &blocks)
}

/// Replaces every block by its complement in `{1..v}`, keeping block order.
pub fn complement_design(design: &Design) -> Result<Design> {
    let v = design.v();
    let size = v as usize - design.k();
    if size < 2 {
        return Err(Error::ComplementTooSmall { size });
    }
    let blocks = design
        .blocks()
        .iter()
        .map(|b| {
            let pts = (1..=v)
                .map(|x| PointId::new(x, v).expect("in range"))
                .filter(|&p| !b.contains(p))
                .collect();
            Block::from_sorted_unchecked(pts)
        })
        .collect();
    Design::from_blocks(v, blocks).map_err(|e| Error::NotABibd(Box::new(e)))
}

/// Removes the blocks of `sub` from `big`, one occurrence per occurrence in
/// `sub`, keeping the remaining blocks of `big` in order.
pub fn multiset_difference(big: &Design, sub: &Design) -> Result<Design> {
    if big.v() != sub.v() {
        return Err(Error::MixedV {
            v1: big.v(),
            v2: sub.v(),
        });
    }
    let mut pending: HashMap<&Block, usize> = HashMap::new();
    for b in sub.blocks() {
        *pending.entry(b).or_default() += 1;
    }
    let mut remaining = Vec::new();
    for b in big.blocks() {
        match pending.get_mut(b) {
            Some(n) if *n > 0 => *n -= 1,
            _ => remaining.push(b.clone()),
        }
    }
    // report missing blocks in the order they appear in `sub`
    if let Some(b) = sub.blocks().iter().find(|b| pending[b] > 0) {
        return Err(Error::BlockNotPresent { block: b.to_vec() });
    }
    Design::from_blocks(big.v(), remaining).map_err(|e| Error::NotABibd(Box::new(e)))
}

/// Concatenates the block lists of two designs on the same `v` with the
/// same block size.
pub fn union_design(d1: &Design, d2: &Design) -> Result<Design> {
    if d1.v() != d2.v() {
        return Err(Error::MixedV {
            v1: d1.v(),
            v2: d2.v(),
        });
    }
    if d1.k() != d2.k() {
        return Err(Error::MixedBlockSize {
            k1: d1.k(),
            k2: d2.k(),
        });
    }
    let blocks = d1.blocks().iter().chain(d2.blocks()).cloned().collect();
    Design::from_blocks(d1.v(), blocks)
}

/// A base block whose pairwise differences mod `modulus` cover every
/// nonzero residue equally often. Residues are represented by `1..=modulus`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceSetSpec {
    modulus: u32,
    base: Vec<u32>,
    lambda: u64,
}

impl DifferenceSetSpec {
    pub fn new(modulus: u32, base: &[u32]) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::EmptyPointSet);
        }
        let raw: Vec<i64> = base.iter().map(|&x| i64::from(x)).collect();
        let block = Block::from_raw(modulus, 1, &raw)?;
        let base = block.to_vec();
        let m = modulus as usize;
        let mut count = vec![0u64; m];
        for &a in &base {
            for &b in &base {
                if a != b {
                    count[((a + modulus - b) % modulus) as usize] += 1;
                }
            }
        }
        // a balanced base block has every difference exactly k(k-1)/(v-1) times
        let k = base.len() as u64;
        let lambda = match m {
            1 => 0,
            _ if (k * (k - 1)).is_multiple_of(m as u64 - 1) => k * (k - 1) / (m as u64 - 1),
            _ => count[1],
        };
        if let Some(d) = (1..m).find(|&d| count[d] != lambda) {
            return Err(Error::NotADifferenceSet {
                modulus,
                difference: d as u32,
                expected: lambda,
                found: count[d],
            });
        }
        Ok(DifferenceSetSpec {
            modulus,
            base,
            lambda,
        })
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn base(&self) -> &[u32] {
        &self.base
    }

    pub fn lambda(&self) -> u64 {
        self.lambda
    }
}

/// Develops the base block: block `i` is `base + i (mod v)` for
/// `i = 0..v-1`, with `v` standing for residue 0.
pub fn cyclic_design(spec: &DifferenceSetSpec) -> Result<Design> {
    let v = spec.modulus;
    let blocks: Vec<Vec<u32>> = (0..v)
        .map(|i| spec.base.iter().map(|&x| (x - 1 + i) % v + 1).collect())
        .collect();
    Design::new(v, &blocks)
}

/// Named worked-example designs.
pub const FIXTURE_NAMES: [&str; 4] = ["fano", "ex1_d2", "ex3_d1", "ex3_d2"];

const FANO: [[u32; 3]; 7] = [
    [1, 2, 4],
    [2, 3, 5],
    [3, 4, 6],
    [4, 5, 7],
    [1, 5, 6],
    [2, 6, 7],
    [1, 3, 7],
];

const EX1_D2: [[u32; 3]; 28] = [
    [7, 1, 2],
    [7, 1, 4],
    [7, 1, 5],
    [7, 1, 6],
    [7, 2, 3],
    [7, 2, 4],
    [7, 2, 5],
    [7, 3, 4],
    [7, 3, 5],
    [7, 3, 6],
    [7, 4, 6],
    [7, 5, 6],
    [1, 2, 3],
    [1, 2, 5],
    [1, 2, 6],
    [1, 3, 4],
    [1, 3, 5],
    [1, 3, 6],
    [1, 4, 5],
    [1, 4, 6],
    [2, 3, 4],
    [2, 3, 6],
    [2, 4, 5],
    [2, 4, 6],
    [2, 5, 6],
    [3, 4, 5],
    [3, 5, 6],
    [4, 5, 6],
];

const EX3_D1: [[u32; 3]; 10] = [
    [6, 1, 4],
    [6, 1, 5],
    [6, 2, 3],
    [6, 2, 4],
    [6, 3, 5],
    [1, 2, 3],
    [1, 2, 5],
    [1, 3, 4],
    [2, 4, 5],
    [3, 4, 5],
];

const EX3_D2: [[u32; 2]; 15] = [
    [6, 1],
    [6, 2],
    [6, 3],
    [6, 4],
    [6, 5],
    [1, 2],
    [1, 3],
    [1, 4],
    [1, 5],
    [2, 3],
    [2, 4],
    [2, 5],
    [3, 4],
    [3, 5],
    [4, 5],
];

/// Hard-coded block lists in their published order.
pub fn fixture(name: &str) -> Result<Design> {
    match name {
        "fano" => Design::new(7, &FANO),
        "ex1_d2" => Design::new(7, &EX1_D2),
        "ex3_d1" => Design::new(6, &EX3_D1),
        "ex3_d2" => Design::new(6, &EX3_D2),
        _ => Err(Error::UnknownFixture(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::DesignParams;

    fn p(v: u64, b: u64, r: u64, k: u64, lambda: u64) -> DesignParams {
        DesignParams { v, b, r, k, lambda }
    }

    #[test]
    fn trivial() {
        let d = trivial_design(7).unwrap();
        assert_eq!(d.params(), p(7, 7, 1, 1, 0));
        assert_eq!(d.block_lists()[3], vec![4]);
        assert_eq!(trivial_design(1).unwrap().block_lists(), vec![vec![1]]);
        assert_eq!(trivial_design(6).unwrap().params(), p(6, 6, 1, 1, 0));
    }

    #[test]
    fn complete() {
        let d = complete_design(6, 2).unwrap();
        assert_eq!(d.params(), p(6, 15, 5, 2, 1));
        assert_eq!(d.block_lists()[0], vec![1, 2]);
        assert_eq!(d.block_lists()[14], vec![5, 6]);
        assert_eq!(complete_design(4, 2).unwrap().params(), p(4, 6, 3, 2, 1));
        assert_eq!(complete_design(5, 1).unwrap(), trivial_design(5).unwrap());
        assert_eq!(
            complete_design(4, 4).unwrap_err(),
            Error::InvalidK { v: 4, k: 4 }
        );
        assert_eq!(
            complete_design(4, 0).unwrap_err(),
            Error::InvalidK { v: 4, k: 0 }
        );
    }

    #[test]
    fn complement() {
        let fano = fixture("fano").unwrap();
        let c = complement_design(&fano).unwrap();
        assert_eq!(c.params(), p(7, 7, 4, 4, 2));
        assert!(complement_design(&c).unwrap().ordered_eq(&fano));
        let c2 = complement_design(&complete_design(6, 2).unwrap()).unwrap();
        assert_eq!(c2.params(), p(6, 15, 10, 4, 6));
        assert_eq!(
            complement_design(&complete_design(4, 3).unwrap()).unwrap_err(),
            Error::ComplementTooSmall { size: 1 }
        );
    }

    #[test]
    fn difference_reconstructs_example_one() {
        let d = multiset_difference(&complete_design(7, 3).unwrap(), &fixture("fano").unwrap())
            .unwrap();
        assert_eq!(d.params(), p(7, 28, 12, 3, 4));
        let ex = fixture("ex1_d2").unwrap();
        assert_eq!(d, ex);
        assert!(!d.ordered_eq(&ex));
    }

    #[test]
    fn difference_errors() {
        let fano = fixture("fano").unwrap();
        assert!(matches!(
            multiset_difference(&fano, &fano),
            Err(Error::NotABibd(e)) if *e == Error::EmptyDesign
        ));
        let twice = union_design(&fano, &fano).unwrap();
        assert_eq!(
            multiset_difference(&fano, &twice).unwrap_err(),
            Error::BlockNotPresent {
                block: vec![1, 2, 4]
            }
        );
        let d = multiset_difference(&complete_design(6, 3).unwrap(), &fixture("ex3_d1").unwrap())
            .unwrap();
        assert_eq!(d.params(), p(6, 10, 5, 3, 2));
    }

    #[test]
    fn cyclic_fano_matches_fixture_order() {
        let spec = DifferenceSetSpec::new(7, &[1, 2, 4]).unwrap();
        assert_eq!(spec.lambda(), 1);
        let d = cyclic_design(&spec).unwrap();
        assert!(d.ordered_eq(&fixture("fano").unwrap()));
    }

    #[test]
    fn non_difference_set() {
        assert_eq!(
            DifferenceSetSpec::new(7, &[1, 2, 3]).unwrap_err(),
            Error::NotADifferenceSet {
                modulus: 7,
                difference: 1,
                expected: 1,
                found: 2
            }
        );
    }

    #[test]
    fn quadratic_residues_mod_11() {
        let d = cyclic_design(&DifferenceSetSpec::new(11, &[1, 3, 4, 5, 9]).unwrap()).unwrap();
        assert_eq!(d.params(), p(11, 11, 5, 5, 2));
    }

    #[test]
    fn unions() {
        let fano = fixture("fano").unwrap();
        assert_eq!(
            union_design(&fano, &fano).unwrap().params(),
            p(7, 14, 6, 3, 2)
        );
        let u = union_design(&fano, &fixture("ex1_d2").unwrap()).unwrap();
        assert_eq!(u, complete_design(7, 3).unwrap());
        let rest =
            multiset_difference(&complete_design(6, 3).unwrap(), &fixture("ex3_d1").unwrap())
                .unwrap();
        let u = union_design(&fixture("ex3_d1").unwrap(), &rest).unwrap();
        assert_eq!(u, complete_design(6, 3).unwrap());
        assert_eq!(
            union_design(&fano, &complete_design(7, 2).unwrap()).unwrap_err(),
            Error::MixedBlockSize { k1: 3, k2: 2 }
        );
        assert_eq!(
            union_design(&fano, &trivial_design(6).unwrap()).unwrap_err(),
            Error::MixedV { v1: 7, v2: 6 }
        );
    }

    #[test]
    fn fixtures() {
        let ex3_d1 = fixture("ex3_d1").unwrap();
        assert_eq!(ex3_d1.params(), p(6, 10, 5, 3, 2));
        assert_eq!(ex3_d1.block_lists()[0], vec![1, 4, 6]);
        let ex3_d2 = fixture("ex3_d2").unwrap();
        assert_eq!(ex3_d2.params(), p(6, 15, 5, 2, 1));
        assert_eq!(ex3_d2.block_lists()[0], vec![1, 6]);
        assert_eq!(fixture("fano").unwrap().block_lists()[0], vec![1, 2, 4]);
        assert_eq!(fixture("ex1_d2").unwrap().params(), p(7, 28, 12, 3, 4));
        assert_eq!(fixture("x").unwrap_err(), Error::UnknownFixture("x".into()));
    }
}
