//! Arrangements of toric branches `t ↦ (v_{i,1} t^{m_{i,1}}, …, v_{i,n} t^{m_{i,n}})`,
//! the evaluation map into `∏ F[[t_i]]`, the valuation `ord_A`, and the
//! per-degree evaluation and coefficient matrices.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{AlgebraError, ExactMatrix, Field, Scalar};
use crate::matroid::RankMatroid;
use crate::polynomial::{Exponent, Polynomial};
use crate::tropical::{ExtNat, ValVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrangementError {
    #[error("invalid arrangement: {0}")]
    Invalid(String),
    #[error("semiring pipeline requires distinguished type")]
    NotDistinguished,
    #[error("operation requires a line arrangement (all weights 1)")]
    NotLineArrangement,
    #[error("arrangement is not essential")]
    NotEssential,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

fn invalid(msg: impl Into<String>) -> ArrangementError {
    ArrangementError::Invalid(msg.into())
}

/// `r` toric branches in `F^n`: coefficient rows `v_i` and weight rows `m_i`.
/// Weights are zeroed wherever the coefficient vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricArrangement {
    n: usize,
    r: usize,
    field: Field,
    coeffs: Vec<Vec<Scalar>>,
    weights: Vec<Vec<u32>>,
}

impl ToricArrangement {
    /// Validates and normalizes an arrangement. `weights = None` means all
    /// ones (a line arrangement).
    pub fn new(field: Field, coeffs: Vec<Vec<Scalar>>, weights: Option<Vec<Vec<u32>>>) -> Result<Self, ArrangementError> {
        let r = coeffs.len();
        if r == 0 {
            return Err(invalid("r must be at least 1"));
        }
        let n = coeffs[0].len();
        if n < 2 {
            return Err(invalid(format!("n must be at least 2, got {n}")));
        }
        for (i, row) in coeffs.iter().enumerate() {
            if row.len() != n {
                return Err(invalid(format!("coeffs[{i}] has {} entries, expected n = {n}", row.len())));
            }
            for (j, s) in row.iter().enumerate() {
                if s.field() != field {
                    return Err(invalid(format!("coeffs[{i}][{j}] lies in {} but the arrangement field is {field}", s.field())));
                }
            }
        }
        if let Field::Prime(p) = field {
            if p as usize <= r {
                return Err(invalid(format!("field F_{p} too small: need p > r = {r}")));
            }
        }
        let mut weights = match weights {
            Some(w) => {
                if w.len() != r {
                    return Err(invalid(format!("weights has {} rows, expected r = {r}", w.len())));
                }
                for (i, row) in w.iter().enumerate() {
                    if row.len() != n {
                        return Err(invalid(format!("weights[{i}] has {} entries, expected n = {n}", row.len())));
                    }
                }
                w
            }
            None => vec![vec![1; n]; r],
        };
        for i in 0..r {
            for j in 0..n {
                if coeffs[i][j].is_zero() {
                    weights[i][j] = 0;
                } else if weights[i][j] == 0 {
                    return Err(invalid(format!("weights[{i}][{j}] must be positive where coeffs[{i}][{j}] is nonzero")));
                }
            }
        }
        Ok(Self {
            n,
            r,
            field,
            coeffs,
            weights,
        })
    }

    /// Convenience constructor from integer coefficients over ℚ.
    pub fn rational_lines(coeffs: &[Vec<i64>]) -> Result<Self, ArrangementError> {
        let rows = coeffs
            .iter()
            .map(|row| row.iter().map(|&v| Scalar::from_i64(Field::Rational, v)).collect())
            .collect();
        Self::new(Field::Rational, rows, None)
    }

    pub fn from_json(text: &str) -> Result<Self, ArrangementError> {
        let file: ArrangementFile = serde_json::from_str(text).map_err(|e| invalid(format!("malformed arrangement file: {e}")))?;
        file.into_arrangement()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Vec<Scalar>] {
        &self.coeffs
    }

    pub fn branch(&self, i: usize) -> &[Scalar] {
        &self.coeffs[i]
    }

    pub fn weights(&self) -> &[Vec<u32>] {
        &self.weights
    }

    /// The shared weight vector `m` when every branch agrees with it off its
    /// zero pattern. Coordinates vanishing on every branch get weight 1.
    pub fn distinguished_weights(&self) -> Option<Vec<u32>> {
        let mut m = vec![None; self.n];
        for i in 0..self.r {
            for j in 0..self.n {
                if self.coeffs[i][j].is_zero() {
                    continue;
                }
                match m[j] {
                    None => m[j] = Some(self.weights[i][j]),
                    Some(w) if w != self.weights[i][j] => return None,
                    Some(_) => {}
                }
            }
        }
        Some(m.into_iter().map(|w| w.unwrap_or(1)).collect())
    }

    pub fn is_distinguished(&self) -> bool {
        self.distinguished_weights().is_some()
    }

    /// All weights 1 wherever the coefficient is nonzero.
    pub fn is_line_arrangement(&self) -> bool {
        self.distinguished_weights().is_some_and(|m| m.iter().all(|&w| w == 1))
    }

    /// Coefficient grid of rank `n`, with pairwise distinct nonzero rows.
    pub fn is_essential(&self) -> bool {
        let nonzero = self.coeffs.iter().all(|row| row.iter().any(|s| !s.is_zero()));
        let distinct = (0..self.r).all(|i| (i + 1..self.r).all(|k| self.coeffs[i] != self.coeffs[k]));
        nonzero && distinct && self.coefficient_grid().rank().expect("single field") == self.n
    }

    /// The `r × n` matrix of branch coefficients.
    pub fn coefficient_grid(&self) -> ExactMatrix {
        ExactMatrix::from_rows(self.field, self.coeffs.clone()).expect("rectangular")
    }

    /// Matroid of the branch directions: label `i` carries `v_i`.
    pub fn matroid(&self) -> RankMatroid {
        RankMatroid::new(self.field, self.n, self.coeffs.clone()).expect("validated")
    }

    /// Pieces `f_s^{(i)}` of `f` graded by the weight row `m_i`.
    pub fn graded_components(&self, f: &Polynomial, branch: usize) -> BTreeMap<u64, Polynomial> {
        let mut out: BTreeMap<u64, Polynomial> = BTreeMap::new();
        for (e, c) in f.terms() {
            let s = Polynomial::weighted_degree(e, &self.weights[branch]);
            out.entry(s)
                .or_insert_with(|| Polynomial::zero(self.field, self.n))
                .add_term(e.clone(), c.clone());
        }
        out
    }

    /// Branchwise series `Σ_s f_s^{(i)}(v_i) t_i^s`, truncated at degree `t`.
    pub fn mu_a(&self, f: &Polynomial, truncation: u64) -> TruncatedSeriesTuple {
        let branches = (0..self.r)
            .map(|i| {
                self.graded_components(f, i)
                    .into_iter()
                    .filter(|(s, _)| *s <= truncation)
                    .map(|(s, piece)| (s, piece.eval(&self.coeffs[i])))
                    .filter(|(_, c)| !c.is_zero())
                    .collect()
            })
            .collect();
        TruncatedSeriesTuple { truncation, branches }
    }

    /// `ord_A(f)`: per branch, the least `s` with `f_s^{(i)}(v_i) ≠ 0`, or ∞.
    pub fn ord_a(&self, f: &Polynomial) -> ValVector {
        ValVector::new(
            (0..self.r)
                .map(|i| {
                    self.graded_components(f, i)
                        .into_iter()
                        .find(|(_, piece)| !piece.eval(&self.coeffs[i]).is_zero())
                        .map_or(ExtNat::Inf, |(s, _)| ExtNat::Fin(s))
                })
                .collect(),
        )
    }

    /// Basis `{x^I : ⟨I, m⟩ = d}` of `R(d)`, ordered by comparing the exponent
    /// of `x_n` first, then `x_{n-1}`, …, ascending.
    pub fn monomial_basis(&self, d: u64) -> Result<Vec<Exponent>, ArrangementError> {
        let m = self.distinguished_weights().ok_or(ArrangementError::NotDistinguished)?;
        Ok(weighted_monomials(&m, d))
    }

    /// `r × dim R(d)` matrix with entry `(i, I) = v_i^I`.
    pub fn evaluation_matrix(&self, d: u64) -> Result<ExactMatrix, ArrangementError> {
        let basis = self.monomial_basis(d)?;
        Ok(evaluate_monomials(self.field, &self.coeffs, &basis))
    }

    /// Checks maximal rank of the coefficient matrices `C_e`, `1 ≤ e ≤ d`,
    /// where `d` is least with `binom(d+n-1, n-1) ≥ r`.
    pub fn is_very_uniform(&self) -> Result<VeryUniformReport, ArrangementError> {
        if !self.is_line_arrangement() {
            return Err(ArrangementError::NotLineArrangement);
        }
        if !self.is_essential() {
            return Err(ArrangementError::NotEssential);
        }
        let degree = conductor_degree(self.n, self.r);
        let mut checks = Vec::new();
        let mut first_failure = None;
        for e in 1..=degree {
            let c = coefficient_matrix(&self.coeffs, e)?;
            let rank = c.rank()?;
            let expected = self.r.min(c.cols());
            if rank != expected && first_failure.is_none() {
                first_failure = Some(e);
            }
            checks.push(RankCheck {
                degree: e,
                rank,
                expected,
                columns: c.cols(),
            });
        }
        Ok(VeryUniformReport {
            very_uniform: first_failure.is_none(),
            degree,
            checks,
            first_failure,
        })
    }
}

/// Least `d ≥ 1` with `binom(d+n-1, n-1) ≥ r`.
pub fn conductor_degree(n: usize, r: usize) -> u64 {
    let mut d = 1u64;
    while binomial(d + n as u64 - 1, n as u64 - 1) < r as u64 {
        d += 1;
    }
    d
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflows u64")
}

fn exponent_key(e: &[u32]) -> Vec<u32> {
    e.iter().rev().copied().collect()
}

/// All exponents with `⟨I, m⟩ = d`, in the shared monomial order.
pub fn weighted_monomials(m: &[u32], d: u64) -> Vec<Exponent> {
    fn rec(m: &[u32], j: usize, left: u64, cur: &mut Exponent, out: &mut Vec<Exponent>) {
        if j == m.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let w = m[j] as u64;
        let max = left / w;
        for k in 0..=max {
            cur[j] = k as u32;
            rec(m, j + 1, left - k * w, cur, out);
        }
        cur[j] = 0;
    }
    let mut out = Vec::new();
    rec(m, 0, d, &mut vec![0; m.len()], &mut out);
    out.sort_by_key(|e| exponent_key(e));
    out
}

fn evaluate_monomials(field: Field, points: &[Vec<Scalar>], basis: &[Exponent]) -> ExactMatrix {
    let mut entries = Vec::with_capacity(points.len() * basis.len());
    for v in points {
        for e in basis {
            let mut acc = Scalar::one(field);
            for (x, &k) in v.iter().zip(e) {
                if k > 0 {
                    acc = &acc * &x.pow(k);
                }
            }
            entries.push(acc);
        }
    }
    ExactMatrix::new(field, points.len(), basis.len(), entries).expect("shape")
}

/// The `r × binom(d+n-1, n-1)` matrix whose `i`-th row lists every degree-`d`
/// monomial in `α_{i,1}, …, α_{i,n}`, with `α_{i,j}` ranked above `α_{i,k}`
/// for `j > k`.
pub fn coefficient_matrix(alphas: &[Vec<Scalar>], d: u64) -> Result<ExactMatrix, ArrangementError> {
    let Some(first) = alphas.first() else {
        return Err(invalid("coefficient matrix needs at least one row"));
    };
    let n = first.len();
    let field = first.first().map(Scalar::field).ok_or_else(|| invalid("rows must be nonempty"))?;
    if alphas.iter().any(|row| row.len() != n) {
        return Err(invalid("coefficient rows have different lengths"));
    }
    let basis = weighted_monomials(&vec![1; n], d);
    let m = evaluate_monomials(field, alphas, &basis);
    m.check_field()?;
    Ok(m)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankCheck {
    pub degree: u64,
    pub rank: usize,
    pub expected: usize,
    pub columns: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VeryUniformReport {
    pub very_uniform: bool,
    /// Least `d` with `binom(d+n-1, n-1) ≥ r`.
    pub degree: u64,
    pub checks: Vec<RankCheck>,
    pub first_failure: Option<u64>,
}

/// Branchwise truncated power series: `(order, coefficient)` pairs with
/// strictly increasing orders and nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeriesTuple {
    pub truncation: u64,
    pub branches: Vec<Vec<(u64, Scalar)>>,
}

impl TruncatedSeriesTuple {
    /// `t`-adic order of branch `i`, ∞ when nothing survives truncation.
    pub fn order(&self, i: usize) -> ExtNat {
        self.branches[i].first().map_or(ExtNat::Inf, |(s, _)| ExtNat::Fin(*s))
    }

    /// Product of two tuples, truncated at the smaller truncation degree.
    pub fn mul_truncated(&self, other: &Self) -> Self {
        let truncation = self.truncation.min(other.truncation);
        let branches = self
            .branches
            .iter()
            .zip(&other.branches)
            .map(|(a, b)| {
                let mut acc: BTreeMap<u64, Scalar> = BTreeMap::new();
                for (s, x) in a {
                    for (t, y) in b {
                        if s + t > truncation {
                            continue;
                        }
                        let prod = x * y;
                        let merged = match acc.remove(&(s + t)) {
                            Some(old) => &old + &prod,
                            None => prod,
                        };
                        acc.insert(s + t, merged);
                    }
                }
                acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
            })
            .collect();
        Self { truncation, branches }
    }

    /// Restricts to orders `≤ t`.
    pub fn truncate(&self, t: u64) -> Self {
        Self {
            truncation: t.min(self.truncation),
            branches: self
                .branches
                .iter()
                .map(|b| b.iter().filter(|(s, _)| *s <= t).cloned().collect())
                .collect(),
        }
    }
}

/// On-disk arrangement description.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementFile {
    pub n: usize,
    pub r: usize,
    pub field: FieldSpec,
    pub coeffs: Vec<Vec<ScalarInput>>,
    #[serde(default)]
    pub weights: Option<Vec<Vec<u32>>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldSpec {
    Rational,
    Prime { p: u64 },
}

/// A scalar written as a JSON integer or as a `"p/q"` / integer string.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum ScalarInput {
    Int(i64),
    Text(String),
}

impl ArrangementFile {
    pub fn into_arrangement(self) -> Result<ToricArrangement, ArrangementError> {
        let field = match self.field {
            FieldSpec::Rational => Field::Rational,
            FieldSpec::Prime { p } => Field::prime(p).map_err(|e| invalid(format!("field: {e}")))?,
        };
        if self.coeffs.len() != self.r {
            return Err(invalid(format!("coeffs has {} rows but r = {}", self.coeffs.len(), self.r)));
        }
        let mut rows = Vec::with_capacity(self.r);
        for (i, row) in self.coeffs.iter().enumerate() {
            if row.len() != self.n {
                return Err(invalid(format!("coeffs[{i}] has {} entries but n = {}", row.len(), self.n)));
            }
            let mut parsed = Vec::with_capacity(self.n);
            for (j, s) in row.iter().enumerate() {
                let v = match s {
                    ScalarInput::Int(v) => Scalar::from_i64(field, *v),
                    ScalarInput::Text(t) => Scalar::parse(field, t).map_err(|e| invalid(format!("coeffs[{i}][{j}]: {e}")))?,
                };
                parsed.push(v);
            }
            rows.push(parsed);
        }
        ToricArrangement::new(field, rows, self.weights)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Scalar {
        Scalar::from_i64(Field::Rational, v)
    }

    fn x(n: usize, j: usize) -> Polynomial {
        Polynomial::variable(Field::Rational, n, j)
    }

    fn planar3() -> ToricArrangement {
        ToricArrangement::rational_lines(&[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap()
    }

    fn weighted(weights: Vec<u32>) -> ToricArrangement {
        ToricArrangement::new(Field::Rational, vec![vec![q(1), q(1)]], Some(vec![weights])).unwrap()
    }

    #[test]
    fn graded_components_examples() {
        let arr = weighted(vec![1, 1]);
        let f = x(2, 0).add(&x(2, 1));
        let g = arr.graded_components(&f, 0);
        assert_eq!(g.keys().copied().collect::<Vec<_>>(), vec![1]);

        let arr = weighted(vec![2, 1]);
        let f = x(2, 0).add(&x(2, 1).mul(&x(2, 1)));
        let g = arr.graded_components(&f, 0);
        assert_eq!(g.keys().copied().collect::<Vec<_>>(), vec![2]);
        assert_eq!(g[&2], f);

        let arr = weighted(vec![1, 3]);
        let f = x(2, 0).mul(&x(2, 1)).add(&x(2, 0).mul(&x(2, 0)).mul(&x(2, 0)));
        let g = arr.graded_components(&f, 0);
        assert_eq!(g[&4].coefficient(&[1, 1]), q(1));
        assert_eq!(g[&3].coefficient(&[3, 0]), q(1));
    }

    #[test]
    fn mu_a_examples() {
        let arr = planar3();
        let s = arr.mu_a(&x(2, 1), 5);
        assert_eq!(s.branches[0], vec![]);
        assert_eq!(s.branches[1], vec![(1, q(1))]);
        assert_eq!(s.branches[2], vec![(1, q(1))]);

        let one = arr.mu_a(&Polynomial::one(Field::Rational, 2), 3);
        assert!(one.branches.iter().all(|b| b == &vec![(0, q(1))]));

        let axes = ToricArrangement::rational_lines(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let s = axes.mu_a(&x(3, 0).mul(&x(3, 1)), 10);
        assert!(s.branches.iter().all(Vec::is_empty));
    }

    #[test]
    fn ord_a_examples() {
        let arr = planar3();
        assert_eq!(arr.ord_a(&Polynomial::zero(Field::Rational, 2)), ValVector::infinity(3));
        assert_eq!(arr.ord_a(&Polynomial::one(Field::Rational, 2)), ValVector::zero(3));
        assert_eq!(arr.ord_a(&Polynomial::one(Field::Rational, 2).neg()), ValVector::zero(3));
        let f = x(2, 0).add(&x(2, 1).neg());
        assert_eq!(arr.ord_a(&f), ValVector::new(vec![ExtNat::Fin(1), ExtNat::Fin(1), ExtNat::Inf]));
    }

    #[test]
    fn monomial_basis_examples() {
        let arr = planar3();
        assert_eq!(arr.monomial_basis(2).unwrap(), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        let even = ToricArrangement::new(Field::Rational, vec![vec![q(1), q(2)], vec![q(3), q(1)]], Some(vec![vec![2, 2], vec![2, 2]])).unwrap();
        assert!(even.monomial_basis(3).unwrap().is_empty());
        let three = ToricArrangement::rational_lines(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(three.monomial_basis(1).unwrap(), vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
    }

    #[test]
    fn non_distinguished_rejected() {
        let arr = ToricArrangement::new(Field::Rational, vec![vec![q(1), q(1)], vec![q(1), q(2)]], Some(vec![vec![1, 1], vec![1, 2]])).unwrap();
        assert_eq!(arr.monomial_basis(1), Err(ArrangementError::NotDistinguished));
        assert!(arr.evaluation_matrix(1).is_err());
        // ord_A still works branch by branch
        let f = x(2, 1);
        assert_eq!(arr.ord_a(&f), ValVector::from_finite(&[1, 2]));
    }

    #[test]
    fn zero_pattern_does_not_break_distinguished_type() {
        // branch 2 has v_{2,1} = 0, so its first weight is ignored
        let arr = ToricArrangement::new(Field::Rational, vec![vec![q(1), q(1)], vec![q(0), q(1)]], Some(vec![vec![2, 3], vec![7, 3]])).unwrap();
        assert_eq!(arr.weights()[1], vec![0, 3]);
        assert_eq!(arr.distinguished_weights(), Some(vec![2, 3]));
    }

    #[test]
    fn evaluation_matrix_examples() {
        let arr = planar3();
        assert_eq!(arr.evaluation_matrix(1).unwrap(), arr.coefficient_grid());
        let e0 = arr.evaluation_matrix(0).unwrap();
        assert_eq!((e0.rows(), e0.cols()), (3, 1));
        assert!((0..3).all(|i| e0.get(i, 0).is_one()));
        let e2 = arr.evaluation_matrix(2).unwrap();
        let rows: Vec<Vec<Scalar>> = e2.to_rows();
        assert_eq!(rows, vec![vec![q(1), q(0), q(0)], vec![q(0), q(0), q(1)], vec![q(1), q(1), q(1)]]);
    }

    #[test]
    fn coefficient_matrix_examples() {
        let alphas = vec![vec![q(1), q(2)], vec![q(3), q(5)], vec![q(7), q(1)]];
        let c1 = coefficient_matrix(&alphas, 1).unwrap();
        assert_eq!(c1.to_rows(), alphas);
        for d in 1..6 {
            assert_eq!(coefficient_matrix(&alphas, d).unwrap().rank().unwrap(), 3.min(d as usize + 1));
        }
        let alphas3 = vec![vec![q(1), q(2), q(3)], vec![q(4), q(5), q(7)]];
        assert_eq!(coefficient_matrix(&alphas3, 2).unwrap().cols(), 6);
        let arr = ToricArrangement::rational_lines(&[vec![1, 2], vec![3, 5], vec![7, 1]]).unwrap();
        for d in 1..5 {
            assert_eq!(coefficient_matrix(arr.coeffs(), d).unwrap(), arr.evaluation_matrix(d).unwrap());
        }
    }

    #[test]
    fn essential_examples() {
        assert!(ToricArrangement::rational_lines(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap().is_essential());
        assert!(!ToricArrangement::rational_lines(&[vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0]]).unwrap().is_essential());
        assert!(!ToricArrangement::rational_lines(&[vec![1, 0], vec![0, 1], vec![1, 0]]).unwrap().is_essential());
    }

    #[test]
    fn very_uniform_examples() {
        let planar = ToricArrangement::rational_lines(&[vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2], vec![1, 3]]).unwrap();
        assert!(planar.is_very_uniform().unwrap().very_uniform);

        let uniform = ToricArrangement::rational_lines(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 1]]).unwrap();
        let rep = uniform.is_very_uniform().unwrap();
        assert_eq!(rep.degree, 2);
        assert!(rep.very_uniform);

        // v4 = (0, 2, 3): C_1 has rank 3 and C_2 has rank 4, so the maximal-rank
        // test passes although {2,3,4} is a coplanar triple.
        let coplanar = ToricArrangement::rational_lines(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![0, 2, 3]]).unwrap();
        let rep = coplanar.is_very_uniform().unwrap();
        assert_eq!(rep.checks.iter().map(|c| c.rank).collect::<Vec<_>>(), vec![3, 4]);
        assert!(rep.very_uniform);
        assert!(!coplanar.matroid().is_uniform());

        let weighted = ToricArrangement::new(Field::Rational, vec![vec![q(1), q(1)], vec![q(1), q(2)]], Some(vec![vec![2, 2], vec![2, 2]])).unwrap();
        assert_eq!(weighted.is_very_uniform(), Err(ArrangementError::NotLineArrangement));
    }

    #[test]
    fn json_loading() {
        let arr = ToricArrangement::from_json(r#"{"n":2,"r":3,"field":{"type":"rational"},"coeffs":[[1,0],[0,1],["1/2","3"]]}"#).unwrap();
        assert_eq!(arr.branch(2)[0], Scalar::parse(Field::Rational, "1/2").unwrap());
        assert!(arr.is_line_arrangement());

        let arr = ToricArrangement::from_json(r#"{"n":2,"r":2,"field":{"type":"prime","p":7},"coeffs":[[1,-1],[0,1]]}"#).unwrap();
        assert_eq!(arr.branch(0)[1], Scalar::from_i64(Field::Prime(7), 6));

        let err = ToricArrangement::from_json(r#"{"n":2,"r":2,"field":{"type":"rational"},"coeffs":[[1,0],[0,"x"]]}"#).unwrap_err();
        assert!(err.to_string().contains("coeffs[1][1]"), "{err}");

        let err = ToricArrangement::from_json(r#"{"n":2,"r":3,"field":{"type":"prime","p":3},"coeffs":[[1,0],[0,1],[1,1]]}"#).unwrap_err();
        assert!(err.to_string().contains("too small"), "{err}");

        let err = ToricArrangement::from_json(r#"{"n":2,"r":2,"field":{"type":"prime","p":8},"coeffs":[[1,0],[0,1]]}"#).unwrap_err();
        assert!(err.to_string().contains("not a prime"), "{err}");

        let err = ToricArrangement::from_json(r#"{"n":2,"r":2,"field":{"type":"rational"},"coeffs":[[1,0],[0,1]],"weights":[[0,1],[1,1]]}"#).unwrap_err();
        assert!(err.to_string().contains("weights[0][0]"), "{err}");
    }

    #[test]
    fn truncated_series_product() {
        let arr = planar3();
        let f = x(2, 0).add(&Polynomial::one(Field::Rational, 2));
        let g = x(2, 1).add(&x(2, 0).neg());
        let lhs = arr.mu_a(&f.mul(&g), 4);
        let rhs = arr.mu_a(&f, 4).mul_truncated(&arr.mu_a(&g, 4));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(conductor_degree(3, 4), 2);
        assert_eq!(conductor_degree(3, 10), 3);
        assert_eq!(conductor_degree(2, 7), 6);
    }
}
