//! Exact verification of the spectrum of `M·Mᵀ` for a pair of designs.
//!
//! For designs `D1`, `D2` on the same `v` points the Gram-type matrix
//! `G = M·Mᵀ` (size `b1`) has rank `v`, eigenvalue `μ1 = r1·r2·k1·k2` on the
//! all-ones vector, eigenvalue `μ2 = (r1-λ1)(r2-λ2)` on the span of the
//! `Z_{D1}(x, y)` vectors, and is zero on the rest. [`verify_spectrum`]
//! checks every one of those facts with exact arithmetic and records the
//! outcome of each check, with a witness for the first failure.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::design::{Design, DesignParams};
use crate::error::{Error, Result};
use crate::json::{serialize_bigint, serialize_bigint_opt};
use crate::linalg::{
    char_poly, kernel_basis, mat_poly_eval, rank, same_span, IntMatrix, IntPolynomial,
};
use crate::mutual::{mutual_matrix, phi_embedding, require_same_v, z_vector};

/// Largest `b1` for which the characteristic polynomial is recomputed by
/// Faddeev-LeVerrier and compared to the closed form.
pub const CHAR_POLY_ORACLE_MAX_B1: usize = 16;

/// `(MMᵀ)_nn = k1·(λ2·k1 - λ2 + r2)` for every `n`.
pub fn diag_value(p1: &DesignParams, p2: &DesignParams) -> BigInt {
    let k1 = BigInt::from(p1.k);
    let l2 = BigInt::from(p2.lambda);
    &k1 * (&l2 * &k1 - &l2 + BigInt::from(p2.r))
}

/// `(μ1, μ2) = (r1·r2·k1·k2, (r1-λ1)(r2-λ2))`.
pub fn eigenvalues(p1: &DesignParams, p2: &DesignParams) -> (BigInt, BigInt) {
    let mu1 = BigInt::from(p1.r) * p2.r * p1.k * p2.k;
    let mu2 = BigInt::from(p1.r - p1.lambda) * (p2.r - p2.lambda);
    (mu1, mu2)
}

/// `(-1)^b1 · t^(b1-v) · (t-μ1) · (t-μ2)^(v-1)` expanded.
pub fn closed_form_char_poly(
    p1: &DesignParams,
    p2: &DesignParams,
    b1: u64,
    v: u32,
) -> Result<IntPolynomial> {
    if b1 < u64::from(v) {
        return Err(Error::FisherViolation { b1, v });
    }
    let (mu1, mu2) = eigenvalues(p1, p2);
    let sign = if b1.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    let zero_mult = (b1 - u64::from(v)) as usize;
    let roots = [
        (BigInt::from(0), zero_mult),
        (mu1, 1),
        (mu2, v.saturating_sub(1) as usize),
    ];
    Ok(IntPolynomial::from_roots(&sign, &roots))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

/// One named check and, when it did not pass, why.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub witness: Option<String>,
}

impl Check {
    fn from_outcome(name: &str, outcome: std::result::Result<(), String>) -> Self {
        match outcome {
            Ok(()) => Check {
                name: name.to_string(),
                status: CheckStatus::Pass,
                witness: None,
            },
            Err(w) => Check {
                name: name.to_string(),
                status: CheckStatus::Fail,
                witness: Some(w),
            },
        }
    }

    fn skipped(name: &str, why: String) -> Self {
        Check {
            name: name.to_string(),
            status: CheckStatus::Skipped,
            witness: Some(why),
        }
    }

    pub fn passed(&self) -> bool {
        self.status != CheckStatus::Fail
    }
}

/// Eigendata of `M(D, D)` itself: `rk` on the all-ones vector and `r - λ`
/// on the `Z_D` span.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelfEigenvalues {
    #[serde(serialize_with = "serialize_bigint")]
    pub rk: BigInt,
    #[serde(serialize_with = "serialize_bigint")]
    pub r_minus_lambda: BigInt,
    pub multiplicity_rk: usize,
    pub multiplicity_r_minus_lambda: usize,
}

/// Machine-readable verdict; serializes with a fixed field order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectralReport {
    pub v: u32,
    pub b1: usize,
    pub b2: usize,
    pub d1_params: DesignParams,
    pub d2_params: DesignParams,
    #[serde(serialize_with = "serialize_bigint")]
    pub mu1: BigInt,
    #[serde(serialize_with = "serialize_bigint")]
    pub mu2: BigInt,
    pub coincident: bool,
    #[serde(serialize_with = "serialize_bigint")]
    pub diag_value: BigInt,
    pub rank_m: usize,
    pub rank_mmt: usize,
    pub multiplicity_mu1: usize,
    pub multiplicity_mu2: usize,
    pub kernel_dim: usize,
    #[serde(serialize_with = "serialize_bigint_opt")]
    pub off_diagonal_min: Option<BigInt>,
    #[serde(serialize_with = "serialize_bigint_opt")]
    pub off_diagonal_max: Option<BigInt>,
    pub self_eigenvalues: Option<SelfEigenvalues>,
    pub checks: Vec<Check>,
    pub overall: bool,
}

impl SpectralReport {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failed_checks(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed()).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Report with witnesses dropped, for comparisons that must ignore
    /// where a failure was first observed.
    pub fn without_witnesses(&self) -> SpectralReport {
        let mut r = self.clone();
        for c in &mut r.checks {
            c.witness = None;
        }
        r
    }

    /// Human-readable summary table.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "D1 {}  D2 {}", self.d1_params, self.d2_params);
        let _ = writeln!(
            s,
            "mu1 = {}  (multiplicity {})",
            self.mu1, self.multiplicity_mu1
        );
        let _ = writeln!(
            s,
            "mu2 = {}  (multiplicity {})",
            self.mu2, self.multiplicity_mu2
        );
        let _ = writeln!(s, "diagonal = {}", self.diag_value);
        let _ = writeln!(
            s,
            "rank M = {}  rank MM^T = {}  kernel dim = {}",
            self.rank_m, self.rank_mmt, self.kernel_dim
        );
        if let Some(se) = &self.self_eigenvalues {
            let _ = writeln!(
                s,
                "M(D,D): rk = {} (multiplicity {})  r-lambda = {} (multiplicity {})",
                se.rk, se.multiplicity_rk, se.r_minus_lambda, se.multiplicity_r_minus_lambda
            );
        }
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let status = match c.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skipped => "SKIP",
            };
            let _ = write!(s, "  {:<width$}  {}", c.name, status);
            if let Some(w) = &c.witness {
                let _ = write!(s, "  {w}");
            }
            s.push('\n');
        }
        let _ = writeln!(s, "overall: {}", if self.overall { "PASS" } else { "FAIL" });
        s
    }
}

fn scaled(x: &[BigInt], c: &BigInt) -> Vec<BigInt> {
    x.iter().map(|e| e * c).collect()
}

/// First index where `a` and `b` differ.
fn first_diff(a: &[BigInt], b: &[BigInt]) -> Option<usize> {
    a.iter().zip(b).position(|(x, y)| x != y)
}

fn check_eigvec(a: &IntMatrix, x: &[BigInt], mu: &BigInt) -> std::result::Result<(), usize> {
    let ax = a.mul_vec(x).expect("dimensions agree");
    match first_diff(&ax, &scaled(x, mu)) {
        None => Ok(()),
        Some(i) => Err(i),
    }
}

fn pairs(v: u32) -> impl Iterator<Item = (u32, u32)> {
    (1..=v).flat_map(move |x| (x + 1..=v).map(move |y| (x, y)))
}

/// Runs every check on `G = M(d1, d2)·M(d1, d2)ᵀ`. Individual failures are
/// recorded in the report; only mismatched point sets are an error.
pub fn verify_spectrum(d1: &Design, d2: &Design) -> Result<SpectralReport> {
    require_same_v(d1, d2)?;
    let v = d1.v();
    let (p1, p2) = (d1.params(), d2.params());
    let b1 = d1.b();
    let mim = mutual_matrix(d1, d2)?;
    let m = &mim.m;
    let g = mim.mmt();
    let (mu1, mu2) = eigenvalues(&p1, &p2);
    let coincident = mu1 == mu2;
    let diag = diag_value(&p1, &p2);
    let mut checks = Vec::new();

    // (a) constant diagonal k1(λ2·k1 - λ2 + r2)
    checks.push(Check::from_outcome(
        "diagonal",
        match (0..b1).find(|&n| g.get(n, n) != &diag) {
            None => Ok(()),
            Some(n) => Err(format!(
                "G[{}][{}] = {}, expected {}",
                n + 1,
                n + 1,
                g.get(n, n),
                diag
            )),
        },
    ));

    // (b) all-ones eigenvector
    let ones = vec![BigInt::one(); b1];
    checks.push(Check::from_outcome(
        "all_ones_eigenvector",
        check_eigvec(&g, &ones, &mu1).map_err(|i| format!("(G·1)[{}] != mu1", i + 1)),
    ));

    // (c) Z_{D1}(x, y) eigenvectors for mu2, (d) intertwining relations
    let rl1 = BigInt::from(p1.r - p1.lambda);
    let rl2 = BigInt::from(p2.r - p2.lambda);
    let mt = m.transpose();
    let mut z_fail = None;
    let mut tw_fail = None;
    for (x, y) in pairs(v) {
        let z1 = z_vector(d1, x, y)?.to_bigints();
        let z2 = z_vector(d2, x, y)?.to_bigints();
        if z_fail.is_none() {
            if let Err(i) = check_eigvec(&g, &z1, &mu2) {
                z_fail = Some(format!("Z_D1({x},{y}): (G·Z)[{}] != mu2·Z", i + 1));
            }
        }
        if tw_fail.is_none() {
            let lhs = mt.mul_vec(&z1)?;
            if let Some(i) = first_diff(&lhs, &scaled(&z2, &rl1)) {
                tw_fail = Some(format!(
                    "pair ({x},{y}): (M^T·Z_D1)[{}] != (r1-l1)·Z_D2",
                    i + 1
                ));
            }
        }
        if tw_fail.is_none() {
            let lhs = m.mul_vec(&z2)?;
            if let Some(i) = first_diff(&lhs, &scaled(&z1, &rl2)) {
                tw_fail = Some(format!(
                    "pair ({x},{y}): (M·Z_D2)[{}] != (r2-l2)·Z_D1",
                    i + 1
                ));
            }
        }
    }
    checks.push(Check::from_outcome(
        "z_eigenvectors",
        z_fail.map_or(Ok(()), Err),
    ));
    checks.push(Check::from_outcome(
        "intertwining",
        tw_fail.map_or(Ok(()), Err),
    ));

    // (e) ranks
    let rank_m = rank(m);
    let rank_g = rank(&g);
    let vv = v as usize;
    checks.push(Check::from_outcome(
        "rank",
        if rank_m == vv && rank_g == vv {
            Ok(())
        } else {
            Err(format!(
                "rank M = {rank_m}, rank G = {rank_g}, expected {vv}"
            ))
        },
    ));

    // (f) t(t - mu1)(t - mu2) annihilates G
    let annihilator = IntPolynomial::from_roots(
        &BigInt::one(),
        &[(BigInt::from(0), 1), (mu1.clone(), 1), (mu2.clone(), 1)],
    );
    let residue = mat_poly_eval(&annihilator, &g)?;
    checks.push(Check::from_outcome(
        "annihilation",
        match (0..b1 * b1).find(|&e| residue.get(e / b1, e % b1) != &BigInt::from(0)) {
            None => Ok(()),
            Some(e) => Err(format!("p(G)[{}][{}] != 0", e / b1 + 1, e % b1 + 1)),
        },
    ));

    // (g) geometric multiplicities via ranks of the shifted matrices
    let rank_shift1 = rank(&g.shift_diagonal(&mu1)?);
    let multiplicity_mu1 = b1 - rank_shift1;
    let (multiplicity_mu2, mult_outcome) = if coincident {
        let want = b1 - vv.min(b1);
        (
            multiplicity_mu1,
            if rank_shift1 == want {
                Ok(())
            } else {
                Err(format!("rank(G - mu I) = {rank_shift1}, expected {want}"))
            },
        )
    } else {
        let rank_shift2 = rank(&g.shift_diagonal(&mu2)?);
        let want2 = b1 - (vv - 1);
        let want1 = b1 - 1;
        let outcome = if rank_shift2 != want2 {
            Err(format!("rank(G - mu2 I) = {rank_shift2}, expected {want2}"))
        } else if rank_shift1 != want1 {
            Err(format!("rank(G - mu1 I) = {rank_shift1}, expected {want1}"))
        } else {
            Ok(())
        };
        (b1 - rank_shift2, outcome)
    };
    checks.push(Check::from_outcome("multiplicities", mult_outcome));

    // (h) kernel dimension
    let kernel = kernel_basis(&g);
    let kernel_dim = kernel.len();
    let want_kernel = b1.saturating_sub(vv);
    checks.push(Check::from_outcome(
        "kernel_dimension",
        if kernel_dim == want_kernel {
            Ok(())
        } else {
            Err(format!("dim ker G = {kernel_dim}, expected {want_kernel}"))
        },
    ));

    // (i) Ker Φ(d1) = Ker G
    let phi_kernel = kernel_basis(&phi_embedding(d1));
    checks.push(Check::from_outcome(
        "kernel_identity",
        if same_span(&phi_kernel, &kernel) {
            Ok(())
        } else {
            Err(format!(
                "ker Phi(D1) has dim {}, ker G has dim {kernel_dim}, spans differ",
                phi_kernel.len()
            ))
        },
    ));

    // (j) Faddeev-LeVerrier against the closed form, small sizes only
    if b1 <= CHAR_POLY_ORACLE_MAX_B1 {
        let outcome = match closed_form_char_poly(&p1, &p2, b1 as u64, v) {
            Ok(closed) => {
                let computed = char_poly(&g)?;
                if computed == closed {
                    Ok(())
                } else {
                    Err(format!("char_poly(G) = {computed}, closed form = {closed}"))
                }
            }
            Err(e) => Err(e.to_string()),
        };
        checks.push(Check::from_outcome("char_poly_oracle", outcome));
    } else {
        checks.push(Check::skipped(
            "char_poly_oracle",
            format!("b1 = {b1} > {CHAR_POLY_ORACLE_MAX_B1}"),
        ));
    }

    let off = g.off_diagonal_values();
    let overall = checks.iter().all(Check::passed);
    Ok(SpectralReport {
        v,
        b1,
        b2: d2.b(),
        d1_params: p1,
        d2_params: p2,
        mu1,
        mu2,
        coincident,
        diag_value: diag,
        rank_m,
        rank_mmt: rank_g,
        multiplicity_mu1,
        multiplicity_mu2,
        kernel_dim,
        off_diagonal_min: off.first().cloned(),
        off_diagonal_max: off.last().cloned(),
        self_eigenvalues: None,
        checks,
        overall,
    })
}

/// [`verify_spectrum`] for `(d, d)`, plus the eigendata of `M(D, D)` itself:
/// symmetry, eigenvalue `rk` on the all-ones vector, eigenvalue `r - λ` on
/// every `Z_D(x, y)`, their multiplicities, and the trace identity
/// `b·k(λk - λ + r) = (rk)² + (v-1)(r-λ)²`.
pub fn self_spectrum(d: &Design) -> Result<SpectralReport> {
    let mut report = verify_spectrum(d, d)?;
    let p = d.params();
    let b = d.b();
    let v = d.v() as usize;
    let m = mutual_matrix(d, d)?.m;
    let rk = BigInt::from(p.r * p.k);
    let rl = BigInt::from(p.r - p.lambda);
    let mut extra = Vec::new();

    extra.push(Check::from_outcome(
        "self_symmetric",
        if m.is_symmetric() {
            Ok(())
        } else {
            Err("M(D,D) is not symmetric".to_string())
        },
    ));

    let k = BigInt::from(p.k);
    extra.push(Check::from_outcome(
        "self_m_diagonal",
        match (0..b).find(|&n| m.get(n, n) != &k) {
            None => Ok(()),
            Some(n) => Err(format!("M[{}][{}] != k", n + 1, n + 1)),
        },
    ));

    let trace = BigInt::from(b) * &report.diag_value;
    let spectral_sum = &rk * &rk + BigInt::from(v.saturating_sub(1)) * &rl * &rl;
    extra.push(Check::from_outcome(
        "self_trace",
        if trace == spectral_sum {
            Ok(())
        } else {
            Err(format!(
                "trace G = {trace}, (rk)^2 + (v-1)(r-l)^2 = {spectral_sum}"
            ))
        },
    ));

    let ones = vec![BigInt::one(); b];
    extra.push(Check::from_outcome(
        "self_eigen_rk",
        check_eigvec(&m, &ones, &rk).map_err(|i| format!("(M·1)[{}] != rk", i + 1)),
    ));

    let mut z_fail = None;
    for (x, y) in pairs(d.v()) {
        let z = z_vector(d, x, y)?.to_bigints();
        if let Err(i) = check_eigvec(&m, &z, &rl) {
            z_fail = Some(format!("Z_D({x},{y}): (M·Z)[{}] != (r-l)·Z", i + 1));
            break;
        }
    }
    extra.push(Check::from_outcome(
        "self_eigen_r_minus_lambda",
        z_fail.map_or(Ok(()), Err),
    ));

    let rank_rk = rank(&m.shift_diagonal(&rk)?);
    let (mult_rk, mult_rl, outcome) = if rk == rl {
        let want = b - v.min(b);
        let out = if rank_rk == want {
            Ok(())
        } else {
            Err(format!("rank(M - rk I) = {rank_rk}, expected {want}"))
        };
        (b - rank_rk, b - rank_rk, out)
    } else {
        let rank_rl = rank(&m.shift_diagonal(&rl)?);
        let out = if rank_rk != b - 1 {
            Err(format!("rank(M - rk I) = {rank_rk}, expected {}", b - 1))
        } else if rank_rl != b - (v - 1) {
            Err(format!(
                "rank(M - (r-l) I) = {rank_rl}, expected {}",
                b - (v - 1)
            ))
        } else {
            Ok(())
        };
        (b - rank_rk, b - rank_rl, out)
    };
    extra.push(Check::from_outcome("self_multiplicities", outcome));

    report.checks.extend(extra);
    report.overall = report.checks.iter().all(Check::passed);
    report.self_eigenvalues = Some(SelfEigenvalues {
        rk,
        r_minus_lambda: rl,
        multiplicity_rk: mult_rk,
        multiplicity_r_minus_lambda: mult_rl,
    });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_design, fixture, trivial_design};

    fn params(v: u64, b: u64, r: u64, k: u64, lambda: u64) -> DesignParams {
        DesignParams { v, b, r, k, lambda }
    }

    #[test]
    fn diag_values() {
        let fano = params(7, 7, 3, 3, 1);
        let ex1 = params(7, 28, 12, 3, 4);
        assert_eq!(diag_value(&fano, &ex1), BigInt::from(60));
        let triv = params(7, 7, 1, 1, 0);
        assert_eq!(diag_value(&triv, &ex1), BigInt::from(12));
        let e1 = params(6, 10, 5, 3, 2);
        let e2 = params(6, 15, 5, 2, 1);
        assert_eq!(diag_value(&e2, &e1), BigInt::from(14));
        assert_eq!(diag_value(&e1, &e2), BigInt::from(21));
    }

    #[test]
    fn eigenvalue_pairs() {
        let fano = params(7, 7, 3, 3, 1);
        let ex1 = params(7, 28, 12, 3, 4);
        assert_eq!(eigenvalues(&fano, &ex1), (324.into(), 16.into()));
        let triv = params(7, 7, 1, 1, 0);
        assert_eq!(eigenvalues(&triv, &triv), (1.into(), 1.into()));
        let e1 = params(6, 10, 5, 3, 2);
        let e2 = params(6, 15, 5, 2, 1);
        assert_eq!(eigenvalues(&e1, &e2), (150.into(), 12.into()));
    }

    #[test]
    fn closed_forms() {
        let triv = params(7, 7, 1, 1, 0);
        let fano = params(7, 7, 3, 3, 1);
        let p = closed_form_char_poly(&triv, &fano, 7, 7).unwrap();
        let want = IntPolynomial::from_roots(&(-1).into(), &[(9.into(), 1), (2.into(), 6)]);
        assert_eq!(p, want);

        let e1 = params(6, 10, 5, 3, 2);
        let e2 = params(6, 15, 5, 2, 1);
        let p = closed_form_char_poly(&e1, &e2, 10, 6).unwrap();
        assert_eq!(p.degree(), Some(10));
        assert_eq!(p.leading(), Some(&BigInt::one()));
        assert_eq!(p.coeffs()[..4], [0.into(), 0.into(), 0.into(), 0.into()]);
        let q = closed_form_char_poly(&e2, &e1, 15, 6).unwrap();
        assert_eq!(q.leading(), Some(&(-1).into()));
        assert_eq!(q.eval(&150.into()), 0.into());

        assert_eq!(
            closed_form_char_poly(&e1, &e2, 5, 6).unwrap_err(),
            Error::FisherViolation { b1: 5, v: 6 }
        );
    }

    #[test]
    fn example_one_pair() {
        let r = verify_spectrum(&fixture("fano").unwrap(), &fixture("ex1_d2").unwrap()).unwrap();
        assert!(r.overall, "{}", r.summary());
        assert_eq!((r.mu1.clone(), r.mu2.clone()), (324.into(), 16.into()));
        assert_eq!((r.rank_mmt, r.kernel_dim), (7, 0));
        assert_eq!((r.multiplicity_mu1, r.multiplicity_mu2), (1, 6));
    }

    #[test]
    fn trivial_pair_takes_coincident_branch() {
        let t = trivial_design(5).unwrap();
        let r = verify_spectrum(&t, &t).unwrap();
        assert!(r.overall, "{}", r.summary());
        assert!(r.coincident);
        assert_eq!(r.multiplicity_mu1, 5);
        assert_eq!(r.kernel_dim, 0);
    }

    #[test]
    fn example_three_both_orders() {
        let (a, b) = (fixture("ex3_d1").unwrap(), fixture("ex3_d2").unwrap());
        let r = verify_spectrum(&a, &b).unwrap();
        assert!(r.overall, "{}", r.summary());
        assert_eq!((r.rank_mmt, r.kernel_dim), (6, 4));
        let s = verify_spectrum(&b, &a).unwrap();
        assert!(s.overall, "{}", s.summary());
        assert_eq!(s.kernel_dim, 9);
        assert_eq!(s.mu1, r.mu1);
        assert_eq!(s.mu2, r.mu2);
    }

    #[test]
    fn self_spectra() {
        let r = self_spectrum(&fixture("fano").unwrap()).unwrap();
        assert!(r.overall, "{}", r.summary());
        assert_eq!((r.mu1.clone(), r.mu2.clone()), (81.into(), 4.into()));
        assert_eq!((r.multiplicity_mu1, r.multiplicity_mu2), (1, 6));
        let se = r.self_eigenvalues.unwrap();
        assert_eq!((se.rk, se.r_minus_lambda), (9.into(), 2.into()));

        let r = self_spectrum(&complete_design(4, 2).unwrap()).unwrap();
        assert!(r.overall, "{}", r.summary());
        assert_eq!((r.mu1.clone(), r.mu2.clone()), (36.into(), 4.into()));
        assert_eq!((r.rank_mmt, r.kernel_dim), (4, 2));

        let r = self_spectrum(&trivial_design(4).unwrap()).unwrap();
        assert!(r.overall, "{}", r.summary());
        let se = r.self_eigenvalues.unwrap();
        assert_eq!((se.rk, se.r_minus_lambda), (1.into(), 1.into()));
    }

    #[test]
    fn mismatched() {
        let err =
            verify_spectrum(&trivial_design(3).unwrap(), &trivial_design(4).unwrap()).unwrap_err();
        assert_eq!(err, Error::MismatchedPointSets { v1: 3, v2: 4 });
    }

    #[test]
    fn report_json_field_order() {
        let t = trivial_design(2).unwrap();
        let json = verify_spectrum(&t, &t).unwrap().to_json();
        let v = json.find("\"v\"").unwrap();
        let mu1 = json.find("\"mu1\"").unwrap();
        let overall = json.find("\"overall\"").unwrap();
        assert!(v < mu1 && mu1 < overall);
        assert!(json.contains("\"mu1\": 1"));
    }
}
