//! Balanced incomplete block designs on the point set `{1..v}`.
//!
//! A [`Design`] can only be obtained through validation, so every value of
//! the type satisfies the block-size, replication and pair-count axioms.
//! Block order is preserved from the input because it indexes the rows and
//! columns of every matrix built from the design.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// A point of the ambient set, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PointId(u32);

impl PointId {
    /// Checked constructor against the ambient `v`.
    pub fn new(point: u32, v: u32) -> Result<Self> {
        if point == 0 || point > v {
            return Err(Error::PointIdOutOfRange { point, v });
        }
        Ok(PointId(point))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Zero-based index, for addressing vectors of length `v`.
    pub fn index(self) -> usize {
        self.0 as usize - 1
    }
}

impl fmt::Display for PointId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A set of points stored strictly ascending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Block(Vec<PointId>);

impl Block {
    /// Canonicalizes `points` (sorted ascending) after checking range and
    /// duplicates. `index` is the 1-based block position used in errors.
    pub fn from_raw(v: u32, index: usize, points: &[i64]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyBlock { block: index });
        }
        let mut out = Vec::with_capacity(points.len());
        for &p in points {
            if p < 1 || p > i64::from(v) {
                return Err(Error::PointOutOfRange {
                    block: index,
                    point: p,
                    v,
                });
            }
            out.push(PointId(p as u32));
        }
        out.sort_unstable();
        if let Some(w) = out.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicatePointInBlock {
                block: index,
                point: w[0].0,
            });
        }
        Ok(Block(out))
    }

    /// Builds an arbitrary subset of `{1..v}`; the empty set is allowed here.
    pub fn subset(v: u32, points: &[u32]) -> Result<Self> {
        if points.is_empty() {
            return Ok(Block(Vec::new()));
        }
        let raw: Vec<i64> = points.iter().map(|&p| i64::from(p)).collect();
        Block::from_raw(v, 1, &raw)
    }

    pub(crate) fn from_sorted_unchecked(points: Vec<PointId>) -> Self {
        debug_assert!(points.windows(2).all(|w| w[0] < w[1]));
        Block(points)
    }

    pub fn points(&self) -> &[PointId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, p: PointId) -> bool {
        self.0.binary_search(&p).is_ok()
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.0.iter().map(|p| p.0).collect()
    }

    /// `|self ∩ other|` by a merge walk over the two sorted point lists.
    pub fn intersection_size(&self, other: &Block) -> usize {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j, mut n) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    n += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        n
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// The parameter tuple `(v, b, r, k, λ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DesignParams {
    pub v: u64,
    pub b: u64,
    pub r: u64,
    pub k: u64,
    pub lambda: u64,
}

impl DesignParams {
    /// Checks `bk = vr` and `r(k-1) = λ(v-1)`.
    pub fn check_relations(&self) -> Result<()> {
        if self.b * self.k != self.v * self.r {
            return Err(Error::ParameterRelation {
                relation: format!("bk = {} but vr = {}", self.b * self.k, self.v * self.r),
            });
        }
        if self.r * (self.k - 1) != self.lambda * (self.v - 1) {
            return Err(Error::ParameterRelation {
                relation: format!(
                    "r(k-1) = {} but lambda(v-1) = {}",
                    self.r * (self.k - 1),
                    self.lambda * (self.v - 1)
                ),
            });
        }
        Ok(())
    }

    /// The block-of-singletons case `k = 1`, which forces `λ = 0`.
    pub fn is_trivial_refinement(&self) -> bool {
        self.k == 1
    }
}

impl fmt::Display for DesignParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{},{})",
            self.v, self.b, self.r, self.k, self.lambda
        )
    }
}

/// Result of running every design axiom without failing early.
#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub ok: bool,
    /// Entry `x-1` is the number of blocks containing point `x`.
    pub replication: Vec<u64>,
    /// Symmetric `v x v` co-occurrence counts, diagonal equal to replication.
    pub pair_counts: Vec<Vec<u64>>,
    /// First violated axiom, in the order range/duplicates, block size,
    /// replication, pair count, `k < v`, `λ > 0`.
    pub violation: Option<Error>,
    pub params: Option<DesignParams>,
    /// `b >= v`; `None` when the design was rejected.
    pub fisher_holds: Option<bool>,
    /// Set for accepted `k = 1` designs, where `λ = 0` is admitted.
    pub trivial_refinement: bool,
}

/// A validated block design.
///
/// `==` compares `v` and the block multiset, ignoring order; use
/// [`Design::ordered_eq`] when block order matters.
#[derive(Debug, Clone)]
pub struct Design {
    v: u32,
    blocks: Vec<Block>,
    params: DesignParams,
}

impl Design {
    /// Validates and builds a design from 1-based point lists.
    pub fn new<B: AsRef<[u32]>>(v: u32, blocks: &[B]) -> Result<Self> {
        let raw: Vec<Vec<i64>> = blocks
            .iter()
            .map(|b| b.as_ref().iter().map(|&p| i64::from(p)).collect())
            .collect();
        Design::from_raw(i64::from(v), &raw)
    }

    /// Like [`Design::new`] but accepts arbitrary integers so out-of-range
    /// input from files is reported rather than truncated.
    pub fn from_raw(v: i64, blocks: &[Vec<i64>]) -> Result<Self> {
        if v < 1 {
            return Err(Error::EmptyPointSet);
        }
        let v = u32::try_from(v).map_err(|_| Error::Parse(format!("v = {v} is too large")))?;
        let blocks = blocks
            .iter()
            .enumerate()
            .map(|(i, b)| Block::from_raw(v, i + 1, b))
            .collect::<Result<Vec<_>>>()?;
        Design::from_blocks(v, blocks)
    }

    /// Validates already-canonical blocks.
    pub fn from_blocks(v: u32, blocks: Vec<Block>) -> Result<Self> {
        let params = derive_params(v, &blocks)?;
        Ok(Design { v, blocks, params })
    }

    pub fn v(&self) -> u32 {
        self.v
    }

    pub fn b(&self) -> usize {
        self.blocks.len()
    }

    pub fn k(&self) -> usize {
        self.params.k as usize
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn params(&self) -> DesignParams {
        self.params
    }

    pub fn point(&self, x: u32) -> Result<PointId> {
        PointId::new(x, self.v)
    }

    /// Same `v` and the same blocks in the same order.
    pub fn ordered_eq(&self, other: &Design) -> bool {
        self.v == other.v && self.blocks == other.blocks
    }

    /// Blocks as plain point lists.
    pub fn block_lists(&self) -> Vec<Vec<u32>> {
        self.blocks.iter().map(Block::to_vec).collect()
    }

    /// Blocks reordered by `perm` (new position `i` holds old block `perm[i]`).
    pub fn permuted(&self, perm: &[usize]) -> Result<Design> {
        if perm.len() != self.blocks.len() {
            return Err(Error::DimensionMismatch(format!(
                "permutation of length {} for {} blocks",
                perm.len(),
                self.blocks.len()
            )));
        }
        let blocks = perm.iter().map(|&i| self.blocks[i].clone()).collect();
        Design::from_blocks(self.v, blocks)
    }

    fn sorted_blocks(&self) -> Vec<&Block> {
        let mut s: Vec<&Block> = self.blocks.iter().collect();
        s.sort();
        s
    }

    pub fn to_file(&self) -> DesignFile {
        DesignFile {
            v: i64::from(self.v),
            blocks: self
                .blocks
                .iter()
                .map(|b| b.points().iter().map(|p| i64::from(p.get())).collect())
                .collect(),
        }
    }

    /// Canonical JSON: `{"v":..,"blocks":[[..],..]}` with ascending blocks.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("design serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Design> {
        let file: DesignFile = serde_json::from_str(text)?;
        Design::from_raw(file.v, &file.blocks)
    }
}

impl PartialEq for Design {
    fn eq(&self, other: &Self) -> bool {
        self.v == other.v && self.sorted_blocks() == other.sorted_blocks()
    }
}

impl Eq for Design {}

/// The on-disk design format. Block order is authoritative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DesignFile {
    pub v: i64,
    pub blocks: Vec<Vec<i64>>,
}

/// Runs every axiom and collects counts, recording the first violation
/// instead of returning it.
pub fn validate(v: i64, blocks: &[Vec<i64>]) -> ValidationReport {
    let mut report = ValidationReport {
        ok: false,
        replication: Vec::new(),
        pair_counts: Vec::new(),
        violation: None,
        params: None,
        fisher_holds: None,
        trivial_refinement: false,
    };
    if v < 1 {
        report.violation = Some(Error::EmptyPointSet);
        return report;
    }
    let vv = match u32::try_from(v) {
        Ok(x) => x,
        Err(_) => {
            report.violation = Some(Error::Parse(format!("v = {v} is too large")));
            return report;
        }
    };
    let canon: Result<Vec<Block>> = blocks
        .iter()
        .enumerate()
        .map(|(i, b)| Block::from_raw(vv, i + 1, b))
        .collect();
    let canon = match canon {
        Ok(c) => c,
        Err(e) => {
            report.violation = Some(e);
            return report;
        }
    };
    report.replication = count_replication(vv, &canon);
    report.pair_counts = count_pairs(vv, &canon);
    match derive_params(vv, &canon) {
        Ok(p) => {
            report.ok = true;
            report.fisher_holds = Some(p.b >= p.v);
            report.trivial_refinement = p.is_trivial_refinement();
            report.params = Some(p);
        }
        Err(e) => report.violation = Some(e),
    }
    report
}

fn count_replication(v: u32, blocks: &[Block]) -> Vec<u64> {
    let mut counts = vec![0u64; v as usize];
    for b in blocks {
        for p in b.points() {
            counts[p.index()] += 1;
        }
    }
    counts
}

fn count_pairs(v: u32, blocks: &[Block]) -> Vec<Vec<u64>> {
    let n = v as usize;
    let mut counts = vec![vec![0u64; n]; n];
    for b in blocks {
        let pts = b.points();
        for (i, x) in pts.iter().enumerate() {
            counts[x.index()][x.index()] += 1;
            for y in &pts[i + 1..] {
                counts[x.index()][y.index()] += 1;
                counts[y.index()][x.index()] += 1;
            }
        }
    }
    counts
}

/// Derives `(v, b, r, k, λ)` from canonical blocks, checking uniformity of
/// block size, replication and pair counts.
pub fn derive_params(v: u32, blocks: &[Block]) -> Result<DesignParams> {
    if v == 0 {
        return Err(Error::EmptyPointSet);
    }
    let first = blocks.first().ok_or(Error::EmptyDesign)?;
    let k = first.len();
    for (i, b) in blocks.iter().enumerate() {
        if b.is_empty() {
            return Err(Error::EmptyBlock { block: i + 1 });
        }
        if b.len() != k {
            return Err(Error::NonUniformBlockSize {
                block: i + 1,
                expected: k,
                found: b.len(),
            });
        }
    }

    let rep = count_replication(v, blocks);
    let r = rep[0];
    if let Some((i, &c)) = rep.iter().enumerate().find(|(_, &c)| c != r) {
        return Err(Error::NonUniformReplication {
            point: i as u32 + 1,
            expected: r,
            found: c,
        });
    }

    let pairs = count_pairs(v, blocks);
    let n = v as usize;
    let lambda = if n >= 2 { pairs[0][1] } else { 0 };
    for (x, row) in pairs.iter().enumerate() {
        if let Some(y) = (x + 1..n).find(|&y| row[y] != lambda) {
            return Err(Error::NonUniformPairCount {
                x: x as u32 + 1,
                y: y as u32 + 1,
                expected: lambda,
                found: row[y],
            });
        }
    }

    if k != 1 && k >= n {
        return Err(Error::BlockSizeNotBelowV { k, v });
    }
    if k >= 2 && lambda == 0 {
        return Err(Error::ZeroLambda { k });
    }

    let params = DesignParams {
        v: u64::from(v),
        b: blocks.len() as u64,
        r,
        k: k as u64,
        lambda,
    };
    params.check_relations()?;
    Ok(params)
}

/// Number of blocks containing each point, by direct enumeration.
pub fn replication_counts(design: &Design) -> Vec<u64> {
    count_replication(design.v, &design.blocks)
}

/// Symmetric `v x v` matrix of co-occurrence counts. The diagonal holds
/// the replication number `r` (a point co-occurs with itself in each of
/// its blocks).
pub fn pair_counts(design: &Design) -> IntMatrix {
    let counts = count_pairs(design.v, &design.blocks);
    IntMatrix::from_fn(counts.len(), counts.len(), |i, j| counts[i][j].into())
}
