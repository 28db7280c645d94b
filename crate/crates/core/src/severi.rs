//! Codimension bounds for loci of rational curves with one r-fold point of
//! embedding dimension l, and the reducibility threshold obtained by comparing
//! them with the nodal codimension `(n−2)·g` at `g = binom(r, 2)`.

use serde::Serialize;
use thiserror::Error;

use crate::arrangement::binomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeveriError {
    #[error("invalid query: {0}")]
    Domain(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SeveriQuery {
    pub n: u64,
    pub r: u64,
    pub l: u64,
    /// Curve degree; only used to check `d > r`.
    pub d: Option<u64>,
}

impl SeveriQuery {
    pub fn validate(&self) -> Result<(), SeveriError> {
        if self.n < 2 {
            return Err(SeveriError::Domain(format!("n must be at least 2, got {}", self.n)));
        }
        if self.r < 2 {
            return Err(SeveriError::Domain(format!("r must be at least 2, got {}", self.r)));
        }
        if self.l < 2 {
            return Err(SeveriError::Domain(format!("l must be at least 2, got {}", self.l)));
        }
        if self.l > self.n {
            return Err(SeveriError::Domain(format!("l = {} exceeds n = {}", self.l, self.n)));
        }
        if self.l > self.r {
            return Err(SeveriError::Domain(format!("l = {} exceeds r = {}", self.l, self.r)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodimBound {
    pub query: SeveriQuery,
    pub value: u64,
    pub warning: Option<String>,
}

/// `(n−l)(r−l) + (r−1)n − r`.
pub fn codim_upper_bound(q: SeveriQuery) -> Result<CodimBound, SeveriError> {
    q.validate()?;
    let value = (q.n - q.l) * (q.r - q.l) + (q.r - 1) * q.n - q.r;
    let warning = match q.d {
        Some(d) if d <= q.r => Some(format!("degree d = {d} does not exceed r = {}; the bound assumes d > r", q.r)),
        _ => None,
    };
    Ok(CodimBound { query: q, value, warning })
}

/// `(n−2)·g`, the codimension of the g-nodal rational locus.
pub fn nodal_codim(n: u64, g: u64) -> i64 {
    (n as i64 - 2) * g as i64
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Threshold {
    pub n: u64,
    pub r: u64,
    /// `(r−2)(n−2) + (r−1)n − r` at the threshold.
    pub bound: u64,
    /// `(n−2)·binom(r, 2)` at the threshold.
    pub nodal: u64,
}

fn compared(n: u64, r: u64) -> (u64, u64) {
    ((r - 2) * (n - 2) + (r - 1) * n - r, (n - 2) * binomial(r, 2))
}

/// Whether `(r−2)(n−2) + (r−1)n − r < (n−2)·binom(r, 2)`.
pub fn reducible_regime(n: u64, r: u64) -> bool {
    let (bound, nodal) = compared(n, r);
    bound < nodal
}

/// Least `r > 2` in the reducible regime.
pub fn reducibility_threshold(n: u64) -> Result<Threshold, SeveriError> {
    if n < 3 {
        return Err(SeveriError::Domain(format!("threshold needs n ≥ 3, got {n}")));
    }
    let mut r = 3;
    while !reducible_regime(n, r) {
        r += 1;
    }
    let (bound, nodal) = compared(n, r);
    Ok(Threshold { n, r, bound, nodal })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub n: u64,
    pub threshold: u64,
    pub r_max: u64,
    /// First `r ≥ threshold` where the strict inequality fails, if any.
    pub first_failure: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThresholdScan {
    pub rows: Vec<ScanRow>,
    pub non_increasing: bool,
    pub all_hold: bool,
}

/// For each `n` in range, checks the inequality for all `threshold ≤ r ≤ r_max`.
pub fn threshold_scan(n_lo: u64, n_hi: u64, r_max: u64) -> Result<ThresholdScan, SeveriError> {
    let mut rows = Vec::new();
    for n in n_lo..=n_hi {
        let t = reducibility_threshold(n)?;
        let first_failure = (t.r..=r_max).find(|&r| !reducible_regime(n, r));
        rows.push(ScanRow {
            n,
            threshold: t.r,
            r_max,
            first_failure,
        });
    }
    let non_increasing = rows.windows(2).all(|w| w[1].threshold <= w[0].threshold);
    let all_hold = rows.iter().all(|row| row.first_failure.is_none());
    Ok(ThresholdScan { rows, non_increasing, all_hold })
}
