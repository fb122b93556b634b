//! Weighted Schroder paths and the quiver quotient identity.
//!
//! A Schroder path runs from `(0,0)` to `(n,n)` with Right, Up and Diagonal
//! steps, staying weakly below the diagonal `y = x`. Its weight is
//! `a^D q^(2A) x^n` with `D` the number of diagonal steps and `A` the area
//! between the path and the diagonal. Twice the area accumulates in
//! half-unit cells: a Right step at height-gap `h = x - y` contributes
//! `2h + 1`, a Diagonal step contributes `2h`, an Up step nothing.
//!
//! The quotient of the unreduced two-node quiver series at `q`-shifted
//! arguments reproduces this path series up to an overall monomial factor
//! and one variable normalization (`q -> -q`, equivalently a sign per unit
//! of area); [`verify_schroeder_quotient`] determines both from the data
//! and reports them rather than presuming them.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::quiver::{quiver_series_unreduced, NodeVar, SymmetricQuiver};
use crate::series::{Monomial, MultiSeries, Sign, TruncationPolicy, Var};

/// One step of a Schroder path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Right,
    Up,
    Diagonal,
}

/// A lattice path from `(0,0)` to `(n,n)` weakly below the diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchroederPath {
    steps: Vec<Step>,
}

impl SchroederPath {
    /// Validates the below-diagonal invariant at every prefix and that the
    /// path ends on the diagonal.
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut x = 0u64;
        let mut y = 0u64;
        for s in &steps {
            match s {
                Step::Right => x += 1,
                Step::Up => y += 1,
                Step::Diagonal => {
                    x += 1;
                    y += 1;
                }
            }
            if y > x {
                return Err(Error::InvalidPartition);
            }
        }
        if x != y {
            return Err(Error::InvalidPartition);
        }
        Ok(SchroederPath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Endpoint coordinate `n`.
    pub fn size(&self) -> u64 {
        self.steps
            .iter()
            .filter(|s| matches!(s, Step::Right | Step::Diagonal))
            .count() as u64
    }

    /// Number of diagonal steps, `D`.
    pub fn diagonal_count(&self) -> u64 {
        self.steps.iter().filter(|s| matches!(s, Step::Diagonal)).count() as u64
    }

    /// Twice the area between the path and the diagonal.
    pub fn double_area(&self) -> u64 {
        let mut x = 0u64;
        let mut y = 0u64;
        let mut a2 = 0u64;
        for s in &self.steps {
            let h = x - y;
            match s {
                Step::Right => {
                    a2 += 2 * h + 1;
                    x += 1;
                }
                Step::Up => y += 1,
                Step::Diagonal => {
                    a2 += 2 * h;
                    x += 1;
                    y += 1;
                }
            }
        }
        a2
    }

    /// The weight monomial `a^D q^(2A) x^n`.
    pub fn weight(&self) -> Monomial {
        Monomial::new(
            self.double_area() as i64,
            self.diagonal_count() as u32,
            self.size() as u32,
            0,
        )
    }

    /// Compact `R`/`U`/`D` string form.
    pub fn encode(&self) -> String {
        self.steps
            .iter()
            .map(|s| match s {
                Step::Right => 'R',
                Step::Up => 'U',
                Step::Diagonal => 'D',
            })
            .collect()
    }

    /// Parses the `R`/`U`/`D` string form.
    pub fn decode(text: &str) -> Result<Self> {
        let steps = text
            .chars()
            .map(|ch| match ch {
                'R' => Ok(Step::Right),
                'U' => Ok(Step::Up),
                'D' => Ok(Step::Diagonal),
                _ => Err(Error::InvalidPartition),
            })
            .collect::<Result<Vec<Step>>>()?;
        Self::new(steps)
    }
}

/// All Schroder paths to `(n,n)`, generated depth-first (Right before Up
/// before Diagonal), each exactly once.
pub fn enumerate_paths(n: u64) -> Vec<SchroederPath> {
    let mut out = Vec::new();
    let mut steps = Vec::new();
    grow_path(n, 0, 0, &mut steps, &mut out);
    out
}

fn grow_path(n: u64, x: u64, y: u64, steps: &mut Vec<Step>, out: &mut Vec<SchroederPath>) {
    if x == n && y == n {
        out.push(SchroederPath { steps: steps.clone() });
        return;
    }
    if x + 1 <= n {
        steps.push(Step::Right);
        grow_path(n, x + 1, y, steps, out);
        steps.pop();
    }
    if y + 1 <= x && y + 1 <= n {
        steps.push(Step::Up);
        grow_path(n, x, y + 1, steps, out);
        steps.pop();
    }
    if x + 1 <= n && y + 1 <= n {
        steps.push(Step::Diagonal);
        grow_path(n, x + 1, y + 1, steps, out);
        steps.pop();
    }
}

/// Generating series of weighted paths over all sizes `n <= n_cap`.
pub fn schroeder_series(n_cap: u64) -> MultiSeries {
    let policy = TruncationPolicy::exact().with_x_cap(n_cap as u32);
    let mut terms = Vec::new();
    for n in 0..=n_cap {
        for path in enumerate_paths(n) {
            terms.push((path.weight(), BigInt::from(1)));
        }
    }
    MultiSeries::from_big_terms(policy, terms)
}

/// Large Schroder numbers `S(0..=n_max)` by the recurrence
/// `S(n) = S(n-1) + sum_k S(k) S(n-1-k)`; an oracle independent of the path
/// enumerator.
pub fn large_schroeder_numbers(n_max: usize) -> Vec<BigInt> {
    let mut s: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    s.push(BigInt::from(1));
    for n in 1..=n_max {
        let mut acc = s[n - 1].clone();
        for k in 0..n {
            acc += &s[k] * &s[n - 1 - k];
        }
        s.push(acc);
    }
    s
}

/// Outcome of matching the quiver quotient against the path series.
#[derive(Debug, Clone)]
pub struct QuotientReport {
    pub n_cap: u32,
    /// q-window requested for the denominator expansions.
    pub q_cap_requested: i64,
    /// q-window the quotient is actually exact to (never smaller than the
    /// request here, since both series are q-positive).
    pub q_cap_effective: Option<i64>,
    /// The overall factor, as `coefficient * monomial`.
    pub factor: Option<(BigInt, Monomial)>,
    /// True when the match needed the `q -> -q` normalization of the path
    /// series (a sign per unit of doubled area).
    pub q_twisted: bool,
    /// True when the exact q-window covers every path weight through
    /// `n_cap`, i.e. the comparison cannot pass vacuously.
    pub window_ok: bool,
    pub ok: bool,
    pub first_mismatch: Option<(Monomial, BigInt, BigInt)>,
}

impl QuotientReport {
    /// Distinguishes truncation leakage (window too small) from a genuine
    /// convention mismatch.
    pub fn ensure_consistent(&self) -> Result<()> {
        if self.ok && self.window_ok {
            Ok(())
        } else {
            Err(Error::InconsistentFactor)
        }
    }
}

/// Computes `P(xq, axq; q) / P(xq^-1, axq^-1; q)` for the unreduced
/// two-node quiver series through x-degree `n_cap` and matches it against
/// the weighted Schroder series, determining the overall monomial factor
/// from the lowest x-slice.
///
/// The match is attempted against the path series as-is and against its
/// `q -> -q` twist; the report records which one reconciled.
pub fn verify_schroeder_quotient(n_cap: u32, q_cap: i64) -> Result<QuotientReport> {
    let quiver = SymmetricQuiver::two_node_billiard();
    let up = alloc::vec![
        NodeVar::new(Sign::Plus, Monomial::new(1, 0, 1, 0)),
        NodeVar::new(Sign::Plus, Monomial::new(1, 1, 1, 0)),
    ];
    let down = alloc::vec![
        NodeVar::new(Sign::Plus, Monomial::new(-1, 0, 1, 0)),
        NodeVar::new(Sign::Plus, Monomial::new(-1, 1, 1, 0)),
    ];
    let numerator = quiver_series_unreduced(&quiver, &up, n_cap, q_cap)?;
    let denominator = quiver_series_unreduced(&quiver, &down, n_cap, q_cap)?;
    let quotient = numerator.mul(&denominator.invert()?);

    let paths = schroeder_series(u64::from(n_cap));
    let q_cap_effective = quotient.policy().q_cap;
    // the widest path weight at size n has doubled area n^2
    let window_ok =
        q_cap_effective.is_none_or(|cap| cap >= i64::from(n_cap) * i64::from(n_cap));

    let mut report = QuotientReport {
        n_cap,
        q_cap_requested: q_cap,
        q_cap_effective,
        factor: None,
        q_twisted: false,
        window_ok,
        ok: false,
        first_mismatch: None,
    };

    for twisted in [true, false] {
        let candidate = if twisted { paths.twist_sign(Var::Q) } else { paths.clone() };
        match match_with_factor(&quotient, &candidate) {
            Ok(factor) => {
                report.factor = Some(factor);
                report.q_twisted = twisted;
                report.ok = true;
                report.first_mismatch = None;
                return Ok(report);
            }
            Err(mismatch) => {
                if report.first_mismatch.is_none() {
                    report.first_mismatch = mismatch;
                }
            }
        }
    }
    Ok(report)
}

type Mismatch = Option<(Monomial, BigInt, BigInt)>;

/// Finds a monomial factor `F` with `lhs = F * rhs`, deriving `F` from the
/// leading terms; on failure returns the first offending monomial of
/// `lhs - F * rhs` (when `F` exists at all).
fn match_with_factor(lhs: &MultiSeries, rhs: &MultiSeries) -> core::result::Result<(BigInt, Monomial), Mismatch> {
    let (lm, lc) = match lhs.terms().next() {
        Some((m, c)) => (*m, c.clone()),
        None => return Err(None),
    };
    let (rm, rc) = match rhs.terms().next() {
        Some((m, c)) => (*m, c.clone()),
        None => return Err(None),
    };
    // factor exponents may be Laurent in q but must stay nonnegative in
    // a, x, z to remain a monomial
    if lm.e_a < rm.e_a || lm.e_x < rm.e_x || lm.e_z < rm.e_z {
        return Err(None);
    }
    if (&lc % &rc) != BigInt::from(0) {
        return Err(None);
    }
    let factor = Monomial::new(lm.e_q - rm.e_q, lm.e_a - rm.e_a, lm.e_x - rm.e_x, lm.e_z - rm.e_z);
    let coeff = &lc / &rc;
    let scaled = rhs.mul_scalar(&coeff).mul_monomial(1, factor);
    match lhs.first_mismatch(&scaled) {
        None => Ok((coeff, factor)),
        Some(m) => Err(Some(m)),
    }
}
