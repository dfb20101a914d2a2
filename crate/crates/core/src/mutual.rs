//! Mutual incidence matrices of two designs on the same point set, the
//! 0/1 point-block embedding, the signed `Z(x, y)` block vectors and the
//! block-counting quantities used to verify the spectral identities.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::design::{Block, Design, DesignParams, PointId};
use crate::error::{Error, Result};
use crate::linalg::{mat_mul, rank, IntMatrix, RatVector};

/// `M(D1, D2)`: entry `(i, j)` is `|B1_i ∩ B2_j|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MutualIncidenceMatrix {
    pub d1_params: DesignParams,
    pub d2_params: DesignParams,
    pub m: IntMatrix,
}

impl MutualIncidenceMatrix {
    /// `M·Mᵀ`, a `b1 x b1` matrix.
    pub fn mmt(&self) -> IntMatrix {
        &self.m * &self.m.transpose()
    }

    /// `Mᵀ·M`, a `b2 x b2` matrix.
    pub fn mtm(&self) -> IntMatrix {
        &self.m.transpose() * &self.m
    }
}

pub(crate) fn require_same_v(d1: &Design, d2: &Design) -> Result<()> {
    if d1.v() != d2.v() {
        return Err(Error::MismatchedPointSets {
            v1: d1.v(),
            v2: d2.v(),
        });
    }
    Ok(())
}

/// Rows follow `d1`'s block order, columns follow `d2`'s.
pub fn mutual_matrix(d1: &Design, d2: &Design) -> Result<MutualIncidenceMatrix> {
    require_same_v(d1, d2)?;
    let (b1, b2) = (d1.blocks(), d2.blocks());
    let m = IntMatrix::from_fn(b1.len(), b2.len(), |i, j| {
        BigInt::from(b1[i].intersection_size(&b2[j]))
    });
    Ok(MutualIncidenceMatrix {
        d1_params: d1.params(),
        d2_params: d2.params(),
        m,
    })
}

/// `v x b` 0/1 matrix whose column `j` is the indicator vector of block `j`.
pub fn phi_embedding(d: &Design) -> IntMatrix {
    let blocks = d.blocks();
    IntMatrix::from_fn(d.v() as usize, blocks.len(), |n, j| {
        let p = PointId::new(n as u32 + 1, d.v()).expect("row index is a point");
        BigInt::from(u8::from(blocks[j].contains(p)))
    })
}

/// Checks `Φ(d1)ᵀ·Φ(d2) = M(d1, d2)` and `Mᵀ = A2·A1` with `A1 = Φ(d1)`,
/// `A2 = Φ(d2)ᵀ`.
pub fn gram_factorization_check(d1: &Design, d2: &Design) -> Result<bool> {
    let m = mutual_matrix(d1, d2)?.m;
    let a1 = phi_embedding(d1);
    let a2 = phi_embedding(d2).transpose();
    let gram = mat_mul(&a1.transpose(), &a2.transpose())?;
    let mt = mat_mul(&a2, &a1)?;
    Ok(gram == m && mt == m.transpose())
}

/// The signed block vector of a point pair: `+1` on blocks containing `x`
/// but not `y`, `-1` on blocks containing `y` but not `x`, `0` elsewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZVector {
    pub design_params: DesignParams,
    pub x: PointId,
    pub y: PointId,
    entries: Vec<i8>,
}

impl ZVector {
    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    pub fn to_bigints(&self) -> Vec<BigInt> {
        self.entries.iter().map(|&e| BigInt::from(e)).collect()
    }

    pub fn to_rat(&self) -> RatVector {
        RatVector::from_ints(&self.entries)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// `Z(y, x)`.
    pub fn negated(&self) -> ZVector {
        ZVector {
            design_params: self.design_params,
            x: self.y,
            y: self.x,
            entries: self.entries.iter().map(|&e| -e).collect(),
        }
    }
}

pub fn z_vector(d: &Design, x: u32, y: u32) -> Result<ZVector> {
    let px = d.point(x)?;
    let py = d.point(y)?;
    let entries = d
        .blocks()
        .iter()
        .map(|b| i8::from(b.contains(px)) - i8::from(b.contains(py)))
        .collect();
    Ok(ZVector {
        design_params: d.params(),
        x: px,
        y: py,
        entries,
    })
}

/// `Z(n, n+1)` for `n = 1..v-1`, checked to be linearly independent.
pub fn vd_basis(d: &Design) -> Result<Vec<ZVector>> {
    let v = d.v();
    let basis = (1..v)
        .map(|n| z_vector(d, n, n + 1))
        .collect::<Result<Vec<_>>>()?;
    if basis.is_empty() {
        return Ok(basis);
    }
    let rows: Vec<Vec<BigInt>> = basis.iter().map(ZVector::to_bigints).collect();
    let r = rank(&IntMatrix::from_rows(&rows)?);
    if r != basis.len() {
        return Err(Error::DegenerateSpan {
            rank: r,
            expected: basis.len(),
        });
    }
    Ok(basis)
}

/// Number of listed blocks containing `x`.
pub fn t_count(blocks: &[Block], x: PointId) -> u64 {
    blocks.iter().filter(|b| b.contains(x)).count() as u64
}

/// `Σ_j |Q_j ∩ X| = Σ_{x ∈ X} t_Q(x)`.
pub fn counting_identity_check(blocks: &[Block], subset: &Block) -> bool {
    let lhs: u64 = blocks
        .iter()
        .map(|q| q.intersection_size(subset) as u64)
        .sum();
    let rhs: u64 = subset.points().iter().map(|&x| t_count(blocks, x)).sum();
    lhs == rhs
}

/// Histogram of `|S ∩ B|` over the blocks `B` of a design.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaProfile {
    /// `δ_j` keyed by intersection size `j` in `0..=k`; every `j` is present.
    pub counts: BTreeMap<usize, u64>,
    pub subset_size: u64,
}

impl DeltaProfile {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// `Σ j·δ_j`
    pub fn first_moment(&self) -> u64 {
        self.counts.iter().map(|(&j, &c)| j as u64 * c).sum()
    }

    /// `Σ j²·δ_j`
    pub fn second_moment(&self) -> u64 {
        self.counts.iter().map(|(&j, &c)| (j * j) as u64 * c).sum()
    }

    /// `Σ C(j,2)·δ_j`
    pub fn pair_moment(&self) -> u64 {
        self.counts
            .iter()
            .map(|(&j, &c)| (j * j.saturating_sub(1) / 2) as u64 * c)
            .sum()
    }

    /// The three identities for a design with parameters `p`:
    /// `Σ jδ_j = r|S|`, `Σ j²δ_j = (λ|S| - λ + r)|S|`,
    /// `Σ C(j,2)δ_j = C(|S|,2)·λ`, plus `Σ δ_j = b`.
    pub fn identities_hold(&self, p: &DesignParams) -> bool {
        let s = self.subset_size;
        let second = if s == 0 {
            0
        } else {
            (p.lambda * s - p.lambda + p.r) * s
        };
        let pairs = s * s.saturating_sub(1) / 2;
        self.total() == p.b
            && self.first_moment() == p.r * s
            && self.second_moment() == second
            && self.pair_moment() == pairs * p.lambda
    }
}

pub fn delta_profile(subset: &Block, d: &Design) -> Result<DeltaProfile> {
    if let Some(p) = subset.points().last() {
        d.point(p.get())?;
    }
    let mut counts: BTreeMap<usize, u64> = (0..=d.k()).map(|j| (j, 0)).collect();
    for b in d.blocks() {
        *counts.entry(subset.intersection_size(b)).or_default() += 1;
    }
    Ok(DeltaProfile {
        counts,
        subset_size: subset.len() as u64,
    })
}
