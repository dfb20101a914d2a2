//! Recomputes the three worked examples from the fixture designs and diffs
//! every printed matrix and eigen-fact against [`crate::golden`].

use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::constructions::{fixture, trivial_design};
use crate::error::{Error, Result};
use crate::golden;
use crate::linalg::{in_span, is_eigenvector, kernel_basis, rank, IntMatrix, RatVector};
use crate::mutual::{mutual_matrix, z_vector};
use crate::spectral::{self_spectrum, verify_spectrum, SpectralReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    One,
    Two,
    Three,
    All,
}

impl std::str::FromStr for Which {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1" => Ok(Which::One),
            "2" => Ok(Which::Two),
            "3" => Ok(Which::Three),
            "all" => Ok(Which::All),
            _ => Err(Error::Usage(format!(
                "--which expects 1, 2, 3 or all, got {s:?}"
            ))),
        }
    }
}

/// Text of the run plus every mismatch found.
#[derive(Debug, Clone, Default)]
pub struct ExamplesReport {
    pub text: String,
    pub mismatches: Vec<String>,
}

impl ExamplesReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn expect(&mut self, what: &str, ok: bool, detail: impl FnOnce() -> String) {
        if ok {
            self.line(format!("  ok    {what}"));
        } else {
            let d = detail();
            self.line(format!("  FAIL  {what}: {d}"));
            self.mismatches.push(format!("{what}: {d}"));
        }
    }

    fn expect_matrix(&mut self, what: &str, got: &IntMatrix, want: &IntMatrix) {
        let detail = || first_matrix_diff(got, want);
        self.expect(what, got == want, detail);
    }

    fn expect_report(&mut self, what: &str, r: &SpectralReport) {
        self.expect(what, r.overall, || {
            r.failed_checks()
                .iter()
                .map(|c| format!("{} ({})", c.name, c.witness.as_deref().unwrap_or("")))
                .collect::<Vec<_>>()
                .join(", ")
        });
    }
}

fn first_matrix_diff(got: &IntMatrix, want: &IntMatrix) -> String {
    if got.rows() != want.rows() || got.cols() != want.cols() {
        return format!(
            "shape {}x{}, expected {}x{}",
            got.rows(),
            got.cols(),
            want.rows(),
            want.cols()
        );
    }
    for i in 0..got.rows() {
        for j in 0..got.cols() {
            if got.get(i, j) != want.get(i, j) {
                return format!(
                    "entry ({},{}) is {}, expected {}",
                    i + 1,
                    j + 1,
                    got.get(i, j),
                    want.get(i, j)
                );
            }
        }
    }
    String::new()
}

fn diag_off(m: &IntMatrix) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut d = m.diagonal();
    d.sort();
    d.dedup();
    (d, m.off_diagonal_values())
}

fn two_valued(m: &IntMatrix, diag: u32, off: u32) -> bool {
    diag_off(m) == (vec![diag.into()], vec![off.into()])
}

fn values(m: &IntMatrix) -> Vec<BigInt> {
    let mut v: Vec<BigInt> = m.to_rows().into_iter().flatten().collect();
    v.sort();
    v.dedup();
    v
}

fn example_one(rep: &mut ExamplesReport) -> Result<()> {
    rep.line("Example 1: D1 = Fano plane (7,7,3,3,1), D2 = (7,28,12,3,4)");
    let fano = fixture("fano")?;
    let d2 = fixture("ex1_d2")?;
    let mim = mutual_matrix(&fano, &d2)?;
    rep.line(format!("M_a =\n{}", mim.m));
    rep.expect_matrix(
        "M_a matches printed matrix",
        &mim.m,
        &golden::to_matrix(&golden::MA),
    );
    let g = mim.mmt();
    rep.expect(
        "M_a M_a^T has diagonal 60, off-diagonal 44",
        two_valued(&g, golden::EX1_MMT_DIAG, golden::EX1_MMT_OFF),
        || format!("{:?}", diag_off(&g)),
    );

    let r = verify_spectrum(&fano, &d2)?;
    rep.expect_report("spectrum of M_a M_a^T verified", &r);
    rep.expect(
        "mu1 = 324 on all-ones, multiplicity 1",
        r.mu1 == golden::EX1_MU1.into() && r.multiplicity_mu1 == 1,
        || format!("mu1 = {}, multiplicity {}", r.mu1, r.multiplicity_mu1),
    );
    rep.expect(
        "mu2 = 16, multiplicity 6",
        r.mu2 == golden::EX1_MU2.into() && r.multiplicity_mu2 == 6,
        || format!("mu2 = {}, multiplicity {}", r.mu2, r.multiplicity_mu2),
    );

    let z12 = z_vector(&fano, 1, 2)?;
    rep.expect(
        "Z_D1(1,2) matches",
        z12.entries() == golden::EX1_Z12,
        || format!("{:?}", z12.entries()),
    );
    let z13 = z_vector(&fano, 1, 3)?;
    rep.expect(
        "Z_D1(1,3) matches",
        z13.entries() == golden::EX1_Z13,
        || format!("{:?}", z13.entries()),
    );

    let mb = mutual_matrix(&fano, &fano)?;
    rep.expect(
        "M_b = M(Fano,Fano) has diagonal 3, off-diagonal 1",
        two_valued(&mb.m, golden::EX1_MB_DIAG, golden::EX1_MB_OFF),
        || format!("{:?}", diag_off(&mb.m)),
    );
    let gb = mb.mmt();
    rep.expect(
        "M_b M_b^T has diagonal 15, off-diagonal 11",
        two_valued(&gb, golden::EX1_MB_SQ_DIAG, golden::EX1_MB_SQ_OFF),
        || format!("{:?}", diag_off(&gb)),
    );
    let s = self_spectrum(&fano)?;
    rep.expect_report("self spectrum of Fano verified", &s);
    rep.expect(
        "M_b M_b^T eigenvalues 81 and 4",
        s.mu1 == golden::EX1_SELF_MU1.into() && s.mu2 == golden::EX1_SELF_MU2.into(),
        || format!("{} and {}", s.mu1, s.mu2),
    );
    Ok(())
}

fn example_two(rep: &mut ExamplesReport) -> Result<()> {
    rep.line("Example 2: D1 = trivial design on 7 points, D2 = Fano plane");
    let triv = trivial_design(7)?;
    let fano = fixture("fano")?;
    let mim = mutual_matrix(&triv, &fano)?;
    rep.line(format!("M =\n{}", mim.m));
    let g = mim.mmt();
    rep.expect(
        "M M^T has diagonal r2 = 3, off-diagonal lambda2 = 1",
        two_valued(&g, golden::EX2_MMT_DIAG, golden::EX2_MMT_OFF),
        || format!("{:?}", diag_off(&g)),
    );
    let r = verify_spectrum(&triv, &fano)?;
    rep.expect_report("spectrum of M M^T verified", &r);
    rep.expect(
        "eigenvalues 9 (mult 1) and 2 (mult 6), rank 7",
        r.mu1 == golden::EX2_MU1.into()
            && r.mu2 == golden::EX2_MU2.into()
            && r.multiplicity_mu1 == 1
            && r.multiplicity_mu2 == 6
            && r.rank_mmt == golden::EX2_RANK,
        || {
            format!(
                "mu1 {} x{}, mu2 {} x{}, rank {}",
                r.mu1, r.multiplicity_mu1, r.mu2, r.multiplicity_mu2, r.rank_mmt
            )
        },
    );
    let mut unit_ok = true;
    for i in 1..=7u32 {
        for j in 1..=7u32 {
            let z = z_vector(&triv, i, j)?;
            let want: Vec<i8> = (1..=7u32)
                .map(|n| i8::from(n == i) - i8::from(n == j))
                .collect();
            unit_ok &= z.entries() == want.as_slice();
        }
    }
    rep.expect("Z_D1(i,j) = e_i - e_j", unit_ok, String::new);
    Ok(())
}

fn example_three(rep: &mut ExamplesReport) -> Result<()> {
    rep.line("Example 3: D1 = (6,10,5,3,2), D2 = all 2-subsets (6,15,5,2,1)");
    let d1 = fixture("ex3_d1")?;
    let d2 = fixture("ex3_d2")?;
    let mim = mutual_matrix(&d1, &d2)?;
    let g = mim.mmt();
    let h = mim.mtm();
    rep.line(format!("M_c =\n{}", mim.m));
    rep.line(format!("M_c M_c^T =\n{g}"));
    rep.line(format!("M_c^T M_c =\n{h}"));
    rep.expect_matrix(
        "M_c matches printed matrix",
        &mim.m,
        &golden::to_matrix(&golden::MC),
    );
    rep.expect_matrix(
        "M_c M_c^T matches printed matrix",
        &g,
        &golden::to_matrix(&golden::MC_MCT),
    );
    rep.expect_matrix(
        "M_c^T M_c matches printed matrix",
        &h,
        &golden::to_matrix(&golden::MCT_MC),
    );
    let want: Vec<BigInt> = golden::EX3_MMT_VALUES.iter().map(|&x| x.into()).collect();
    rep.expect(
        "M_c M_c^T takes values {13,17,21}",
        values(&g) == want,
        || format!("{:?}", values(&g)),
    );
    let want: Vec<BigInt> = golden::EX3_MTM_VALUES.iter().map(|&x| x.into()).collect();
    rep.expect(
        "M_c^T M_c takes values {8,11,14}",
        values(&h) == want,
        || format!("{:?}", values(&h)),
    );

    let r = verify_spectrum(&d1, &d2)?;
    rep.expect_report("spectrum of M_c M_c^T verified", &r);
    let s = verify_spectrum(&d2, &d1)?;
    rep.expect_report("spectrum of M_c^T M_c verified", &s);
    for (name, rr) in [("M_c M_c^T", &r), ("M_c^T M_c", &s)] {
        rep.expect(
            &format!("{name} eigenvalues 150 (mult 1) and 12 (mult 5)"),
            rr.mu1 == golden::EX3_MU1.into()
                && rr.mu2 == golden::EX3_MU2.into()
                && rr.multiplicity_mu1 == 1
                && rr.multiplicity_mu2 == 5,
            || {
                format!(
                    "mu1 {} x{}, mu2 {} x{}",
                    rr.mu1, rr.multiplicity_mu1, rr.mu2, rr.multiplicity_mu2
                )
            },
        );
    }
    rep.expect(
        "kernel of M_c M_c^T is 4-dimensional",
        r.kernel_dim == golden::EX3_KERNEL_MMT,
        || r.kernel_dim.to_string(),
    );
    rep.expect(
        "kernel of M_c^T M_c is 9-dimensional",
        s.kernel_dim == golden::EX3_KERNEL_MTM,
        || s.kernel_dim.to_string(),
    );

    let mu2 = BigInt::from(golden::EX3_MU2);
    for (label, x, y, want) in [
        ("Z_D1(1,2)", 1, 2, &golden::EX3_Z12),
        ("Z_D1(3,4)", 3, 4, &golden::EX3_Z34),
    ] {
        let z = z_vector(&d1, x, y)?;
        rep.expect(&format!("{label} matches"), z.entries() == want, || {
            format!("{:?}", z.entries())
        });
        let ev = is_eigenvector(&g, &z.to_rat(), &mu2)?;
        rep.expect(
            &format!("{label} is an eigenvector for 12"),
            ev,
            String::new,
        );
    }

    let kernel = kernel_basis(&g);
    let zero = vec![BigInt::from(0); g.rows()];
    for (n, kv) in golden::EX3_KERNEL_VECTORS.iter().enumerate() {
        let ints: Vec<BigInt> = kv.iter().map(|&x| x.into()).collect();
        let annihilated = g.mul_vec(&ints)? == zero;
        rep.expect(
            &format!("printed kernel vector {} is annihilated", n + 1),
            annihilated,
            String::new,
        );
        let inside = in_span(&kernel, &RatVector::from_ints(kv));
        rep.expect(
            &format!(
                "printed kernel vector {} lies in the computed kernel",
                n + 1
            ),
            inside,
            String::new,
        );
    }
    let printed: Vec<Vec<i64>> = golden::EX3_KERNEL_VECTORS
        .iter()
        .map(|v| v.iter().map(|&x| i64::from(x)).collect())
        .collect();
    let printed_rank = rank(&IntMatrix::from_rows(&printed)?);
    rep.expect(
        "printed kernel vectors are independent",
        printed_rank == 4,
        || printed_rank.to_string(),
    );
    Ok(())
}

/// Rebuilds the selected examples and compares them to the embedded data.
pub fn paper_examples(which: Which) -> Result<ExamplesReport> {
    let mut rep = ExamplesReport::default();
    if matches!(which, Which::One | Which::All) {
        example_one(&mut rep)?;
    }
    if matches!(which, Which::Two | Which::All) {
        example_two(&mut rep)?;
    }
    if matches!(which, Which::Three | Which::All) {
        example_three(&mut rep)?;
    }
    let _ = writeln!(
        rep.text,
        "{}",
        if rep.ok() {
            "all examples reproduced".to_string()
        } else {
            format!("{} mismatches", rep.mismatches.len())
        }
    );
    Ok(rep)
}
