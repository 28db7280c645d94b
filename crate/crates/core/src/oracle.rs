//! Brute-force verifiers used as ground truth for the engine. Nothing here
//! shares elimination code with [`crate::exact`]: ranks and kernels come from
//! plain Gauss–Jordan elimination over [`Scalar`], and monomials are
//! enumerated by filtering a box.

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::arrangement::ToricArrangement;
use crate::exact::{Field, Scalar};
use crate::matroid::verify_scrawl_axioms;
use crate::polynomial::{Exponent, Polynomial};
use crate::semiring::{SemiringError, SemiringProfile};
use crate::tropical::{ExtNat, SupportSet, ValVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle budget exceeded: {0}")]
    Budget(String),
    #[error("oracle not applicable: {0}")]
    NotApplicable(String),
    #[error(transparent)]
    Engine(#[from] SemiringError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleConfig {
    pub max_degree: u64,
    pub max_ground: usize,
    pub seed: u64,
    /// Random mixed-∞ membership probes.
    pub samples: usize,
    /// Attempts per random realization.
    pub trials: usize,
    /// Field size bound for the polynomial enumeration.
    pub tiny_prime: Option<u64>,
    /// Points or polynomials enumerated per sweep.
    pub enumeration_budget: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            max_degree: 12,
            max_ground: 6,
            seed: 0,
            samples: 200,
            trials: 20,
            tiny_prime: Some(5),
            enumeration_budget: 200_000,
        }
    }
}

/// Reduced row echelon form by Gauss–Jordan elimination; returns the pivot
/// columns.
fn plain_rref(rows: &mut [Vec<Scalar>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..cols {
        let Some(p) = (top..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(top, p);
        let inv = rows[top][col].inv().expect("nonzero pivot");
        rows[top] = rows[top].iter().map(|x| x * &inv).collect();
        for i in 0..rows.len() {
            if i != top && !rows[i][col].is_zero() {
                let factor = rows[i][col].clone();
                let pivot_row = rows[top].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&factor * y);
                }
            }
        }
        pivots.push(col);
        top += 1;
        if top == rows.len() {
            break;
        }
    }
    pivots
}

pub fn plain_rank(rows: &[Vec<Scalar>], cols: usize) -> usize {
    let mut m = rows.to_vec();
    plain_rref(&mut m, cols).len()
}

/// Basis of `{x : Mx = 0}`.
pub fn plain_kernel(rows: &[Vec<Scalar>], cols: usize, field: Field) -> Vec<Vec<Scalar>> {
    let mut m = rows.to_vec();
    let pivots = plain_rref(&mut m, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Scalar::zero(field); cols];
            x[f] = Scalar::one(field);
            for (k, &p) in pivots.iter().enumerate() {
                x[p] = -&m[k][f];
            }
            x
        })
        .collect()
}

/// Exponents with `⟨I, m⟩ = d`, found by filtering the box `I_j ≤ d / m_j`.
pub fn oracle_monomials(m: &[u32], d: u64) -> Vec<Exponent> {
    let bounds: Vec<u64> = m.iter().map(|&w| d / w as u64).collect();
    let mut out = Vec::new();
    let mut cur = vec![0u64; m.len()];
    loop {
        let deg: u64 = cur.iter().zip(m).map(|(i, &w)| i * w as u64).sum();
        if deg == d {
            out.push(cur.iter().map(|&i| i as u32).collect());
        }
        let mut j = 0;
        loop {
            if j == m.len() {
                return out;
            }
            if cur[j] < bounds[j] {
                cur[j] += 1;
                break;
            }
            cur[j] = 0;
            j += 1;
        }
    }
}

fn monomial_value(point: &[Scalar], e: &[u32], field: Field) -> Scalar {
    let mut acc = Scalar::one(field);
    for (x, &k) in point.iter().zip(e) {
        for _ in 0..k {
            acc = &acc * x;
        }
    }
    acc
}

/// Per-degree achievable supports, cached.
pub struct Oracle<'a> {
    arr: &'a ToricArrangement,
    weights: Vec<u32>,
    config: OracleConfig,
    achievable: RefCell<BTreeMap<u64, BTreeSet<SupportSet>>>,
}

impl<'a> Oracle<'a> {
    pub fn new(arr: &'a ToricArrangement, config: OracleConfig) -> Result<Self, OracleError> {
        if arr.r() > config.max_ground {
            return Err(OracleError::Budget(format!("r = {} exceeds the oracle ground limit {}", arr.r(), config.max_ground)));
        }
        let weights = arr
            .distinguished_weights()
            .ok_or_else(|| OracleError::NotApplicable("arrangement is not of distinguished type".into()))?;
        Ok(Self {
            arr,
            weights,
            config,
            achievable: RefCell::new(BTreeMap::new()),
        })
    }

    pub fn config(&self) -> &OracleConfig {
        &self.config
    }

    /// Rows `i` = branches, columns = degree-`d` monomials.
    fn evaluation_rows(&self, d: u64) -> (Vec<Exponent>, Vec<Vec<Scalar>>) {
        let mons = oracle_monomials(&self.weights, d);
        let rows = (0..self.arr.r())
            .map(|i| mons.iter().map(|e| monomial_value(self.arr.branch(i), e, self.arr.field())).collect())
            .collect();
        (mons, rows)
    }

    /// Every nonempty `S ⊆ [r]` that is exactly the evaluation support of
    /// some `f ∈ R(d)`. With `W_S` the image vectors vanishing off `S`,
    /// `dim W_S = rank(E) − rank(E_{rows ∉ S})`, and `S` is achieved iff
    /// `dim W_S > 0` and dropping any label of `S` lowers it.
    pub fn achievable_supports(&self, d: u64) -> Result<BTreeSet<SupportSet>, OracleError> {
        if d > self.config.max_degree {
            return Err(OracleError::Budget(format!("degree {d} exceeds oracle max degree {}", self.config.max_degree)));
        }
        if let Some(s) = self.achievable.borrow().get(&d) {
            return Ok(s.clone());
        }
        let r = self.arr.r();
        let (mons, rows) = self.evaluation_rows(d);
        let cols = mons.len();
        let total = plain_rank(&rows, cols);
        let dim: Vec<usize> = (0..1u64 << r)
            .map(|bits| {
                let outside: Vec<Vec<Scalar>> = (0..r).filter(|i| bits >> i & 1 == 0).map(|i| rows[i].clone()).collect();
                total - plain_rank(&outside, cols)
            })
            .collect();
        let mut out = BTreeSet::new();
        for bits in 1..(1u64 << r) {
            let b = bits as usize;
            if dim[b] > 0 && (0..r).filter(|i| bits >> i & 1 == 1).all(|i| dim[b & !(1 << i)] < dim[b]) {
                out.insert(SupportSet::from_bits(r, bits));
            }
        }
        self.achievable.borrow_mut().insert(d, out.clone());
        Ok(out)
    }

    /// Inclusion-minimal achievable supports.
    pub fn minimal_supports(&self, d: u64) -> Result<Vec<SupportSet>, OracleError> {
        let all = self.achievable_supports(d)?;
        Ok(all.iter().filter(|s| !all.iter().any(|t| t != *s && t.is_subset(s))).copied().collect())
    }

    /// Depth-first choice of one achievable support (or none) per degree of
    /// `a`, accepted when `min{d : i ∈ S_d}` reproduces every coordinate.
    pub fn membership(&self, a: &ValVector) -> Result<bool, OracleError> {
        if a.len() != self.arr.r() {
            return Err(OracleError::NotApplicable(format!("vector length {} differs from r = {}", a.len(), self.arr.r())));
        }
        let mut degrees: Vec<u64> = a.coords().iter().filter_map(|c| c.finite()).collect();
        degrees.sort_unstable();
        degrees.dedup();
        let options: Vec<Vec<Option<SupportSet>>> = degrees
            .iter()
            .map(|&d| {
                let mut opts: Vec<Option<SupportSet>> = vec![None];
                opts.extend(self.achievable_supports(d)?.into_iter().map(Some));
                Ok(opts)
            })
            .collect::<Result<_, OracleError>>()?;
        let mut chosen: Vec<Option<SupportSet>> = Vec::with_capacity(degrees.len());
        Ok(self.choose(a, &degrees, &options, &mut chosen))
    }

    fn choose(&self, a: &ValVector, degrees: &[u64], options: &[Vec<Option<SupportSet>>], chosen: &mut Vec<Option<SupportSet>>) -> bool {
        let k = chosen.len();
        if k == degrees.len() {
            return (0..a.len()).all(|i| {
                let got = degrees
                    .iter()
                    .zip(chosen.iter())
                    .find(|(_, s)| s.is_some_and(|s| s.contains(i)))
                    .map_or(ExtNat::Inf, |(d, _)| ExtNat::Fin(*d));
                got == a.get(i)
            });
        }
        let d = degrees[k];
        for opt in &options[k] {
            // a label placed at degree d reads at most d, so labels with
            // a_i > d must stay out and those with a_i = d must be placed by now
            if let Some(s) = opt {
                if s.indices().any(|i| a.get(i) > ExtNat::Fin(d)) {
                    continue;
                }
            }
            let placed_now = |i: usize| opt.is_some_and(|s| s.contains(i));
            let placed_before = |i: usize| chosen.iter().any(|s| s.is_some_and(|s| s.contains(i)));
            if (0..a.len()).any(|i| a.get(i) == ExtNat::Fin(d) && !placed_now(i) && !placed_before(i)) {
                continue;
            }
            chosen.push(*opt);
            if self.choose(a, degrees, options, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    /// Random elements of `⊕_d {f ∈ R(d) : f vanishes on branches with
    /// a_j > d}`, returned when `ord_A` hits `a` exactly. Success proves
    /// membership; failure proves nothing.
    pub fn random_realization(&self, a: &ValVector, trials: usize, rng: &mut ChaCha8Rng) -> Result<Option<Polynomial>, OracleError> {
        let field = self.arr.field();
        let n = self.arr.n();
        let mut spaces = Vec::new();
        for (d, _) in a.homogeneous_decomposition() {
            if d > self.config.max_degree {
                return Err(OracleError::Budget(format!("degree {d} exceeds oracle max degree {}", self.config.max_degree)));
            }
            let (mons, rows) = self.evaluation_rows(d);
            let vanish: Vec<Vec<Scalar>> = (0..a.len()).filter(|&j| a.get(j) > ExtNat::Fin(d)).map(|j| rows[j].clone()).collect();
            let kernel = plain_kernel(&vanish, mons.len(), field);
            spaces.push((mons, kernel));
        }
        for _ in 0..trials {
            let mut f = Polynomial::zero(field, n);
            for (mons, kernel) in &spaces {
                for k in kernel {
                    let c = random_scalar(field, rng);
                    for (e, x) in mons.iter().zip(k) {
                        f.add_term(e.clone(), &c * x);
                    }
                }
            }
            if self.arr.ord_a(&f) == *a {
                return Ok(Some(f));
            }
        }
        Ok(None)
    }

    /// `ord_A` of every polynomial over `F_p` supported on monomials of
    /// weighted degree `≤ top`, with the values computed branch by branch.
    pub fn tiny_field_enumeration(&self, top: u64) -> Result<BTreeSet<ValVector>, OracleError> {
        let Field::Prime(p) = self.arr.field() else {
            return Err(OracleError::NotApplicable("enumeration needs a prime field".into()));
        };
        if self.config.tiny_prime.is_none_or(|cap| p > cap) {
            return Err(OracleError::NotApplicable(format!("F_{p} is too large to enumerate")));
        }
        let field = self.arr.field();
        let r = self.arr.r();
        let mut mons: Vec<(u64, Exponent)> = Vec::new();
        for d in 0..=top {
            for e in oracle_monomials(&self.weights, d) {
                mons.push((d, e));
            }
        }
        let count = (p as u128).checked_pow(mons.len() as u32).unwrap_or(u128::MAX);
        if count > self.config.enumeration_budget as u128 {
            return Err(OracleError::Budget(format!("{count} polynomials exceed the enumeration budget")));
        }
        let values: Vec<Vec<Scalar>> = (0..r)
            .map(|i| mons.iter().map(|(_, e)| monomial_value(self.arr.branch(i), e, field)).collect())
            .collect();
        let mut out = BTreeSet::new();
        let mut coeffs = vec![0u64; mons.len()];
        loop {
            let v: Vec<ExtNat> = (0..r)
                .map(|i| {
                    (0..=top)
                        .find(|&d| {
                            let mut s = Scalar::zero(field);
                            for (k, (deg, _)) in mons.iter().enumerate() {
                                if *deg == d && coeffs[k] != 0 {
                                    s = &s + &(&Scalar::from_i64(field, coeffs[k] as i64) * &values[i][k]);
                                }
                            }
                            !s.is_zero()
                        })
                        .map_or(ExtNat::Inf, ExtNat::Fin)
                })
                .collect();
            out.insert(ValVector::new(v));
            let mut j = 0;
            loop {
                if j == coeffs.len() {
                    return Ok(out);
                }
                coeffs[j] += 1;
                if coeffs[j] < p {
                    break;
                }
                coeffs[j] = 0;
                j += 1;
            }
        }
    }

    /// All finite `a ≤ c` outside the semiring.
    pub fn non_members_in_box(&self, c: &[u64]) -> Result<Vec<ValVector>, OracleError> {
        let size = c.iter().try_fold(1u64, |acc, x| acc.checked_mul(x + 1)).unwrap_or(u64::MAX);
        if size > self.config.enumeration_budget as u64 {
            return Err(OracleError::Budget(format!("box of {size} points exceeds the enumeration budget")));
        }
        let mut out = Vec::new();
        for a in finite_box(c) {
            if !self.membership(&a)? {
                out.push(a);
            }
        }
        Ok(out)
    }
}

fn random_scalar(field: Field, rng: &mut ChaCha8Rng) -> Scalar {
    match field {
        Field::Rational => Scalar::from_i64(field, rng.gen_range(-9..=9)),
        Field::Prime(p) => Scalar::from_i64(field, rng.gen_range(0..p) as i64),
    }
}

/// All `a` with `0 ≤ a_i ≤ c_i`, first coordinate varying fastest.
pub fn finite_box(c: &[u64]) -> Vec<ValVector> {
    let mut out = Vec::new();
    let mut cur = vec![0u64; c.len()];
    loop {
        out.push(ValVector::from_finite(&cur));
        let mut j = 0;
        loop {
            if j == c.len() {
                return out;
            }
            if cur[j] < c[j] {
                cur[j] += 1;
                break;
            }
            cur[j] = 0;
            j += 1;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub checked: usize,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleManifest {
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
    /// Smallest disagreement found, if any.
    pub counterexample: Option<String>,
}

/// Runs every engine/oracle agreement check available for the profile.
pub fn run_oracle_check(profile: &SemiringProfile, config: OracleConfig) -> Result<OracleManifest, OracleError> {
    let arr = profile.arrangement();
    let oracle = Oracle::new(arr, config.clone())?;
    let r = arr.r();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut checks = Vec::new();
    let mut counterexample: Option<(u64, String)> = None;
    let note = |size: u64, text: String, slot: &mut Option<(u64, String)>| {
        if slot.as_ref().is_none_or(|(s, _)| size < *s) {
            *slot = Some((size, text));
        }
    };

    let conductor = profile.conductor()?.conductor;
    let c: Vec<u64> = match &conductor {
        Some(v) => v.coords().iter().map(|x| x.finite().expect("finite conductor")).collect(),
        None => vec![2; r],
    };
    let top = (c.iter().copied().max().unwrap_or(0) + 1).min(config.max_degree);

    // circuits against minimal achievable supports, witnesses through ord_A
    let mut layer_fail = None;
    let mut witness_fail = None;
    let mut axiom_fail = None;
    for d in 0..=top {
        let layer = profile.layer(d)?;
        let expected = oracle.minimal_supports(d)?;
        if layer.circuits() != expected.as_slice() {
            let text = format!(
                "degree {d}: engine circuits {:?} vs oracle {:?}",
                layer.circuits().iter().map(ToString::to_string).collect::<Vec<_>>(),
                expected.iter().map(ToString::to_string).collect::<Vec<_>>()
            );
            note(d, text.clone(), &mut counterexample);
            layer_fail.get_or_insert(text);
        }
        for (k, w) in layer.witnesses.iter().enumerate() {
            let got = arr.ord_a(w);
            let want = ValVector::homogeneous(d, layer.circuits()[k]);
            if got != want {
                witness_fail.get_or_insert(format!("degree {d}: witness {w} has valuation {got}, expected {want}"));
            }
        }
        let axioms = verify_scrawl_axioms(&layer.family, 10_000);
        if !axioms.passed() {
            axiom_fail.get_or_insert(format!("degree {d}: scrawl axioms fail"));
        }
    }
    checks.push(CheckResult {
        name: "layer circuits match minimal achievable supports".into(),
        passed: layer_fail.is_none(),
        checked: top as usize + 1,
        detail: layer_fail,
    });
    checks.push(CheckResult {
        name: "circuit witnesses realize their supports".into(),
        passed: witness_fail.is_none(),
        checked: top as usize + 1,
        detail: witness_fail,
    });
    checks.push(CheckResult {
        name: "scrawl axioms per layer".into(),
        passed: axiom_fail.is_none(),
        checked: top as usize + 1,
        detail: axiom_fail,
    });

    // membership on the box [0, c + 1] and mixed-∞ probes
    let upper: Vec<u64> = c.iter().map(|x| (x + 1).min(config.max_degree)).collect();
    let size = upper.iter().try_fold(1u64, |acc, x| acc.checked_mul(x + 1)).unwrap_or(u64::MAX);
    if size > config.enumeration_budget as u64 {
        return Err(OracleError::Budget(format!("membership box of {size} points exceeds the enumeration budget")));
    }
    let mut probes = finite_box(&upper);
    for _ in 0..config.samples {
        probes.push(ValVector::new(
            (0..r)
                .map(|i| if rng.gen_bool(0.4) { ExtNat::Inf } else { ExtNat::Fin(rng.gen_range(0..=upper[i])) })
                .collect(),
        ));
    }
    let mut member_fail = None;
    let mut realization_fail = None;
    let mut realization_tried = 0;
    for a in &probes {
        let engine = profile.is_member(a)?;
        let brute = oracle.membership(a)?;
        if engine != brute {
            let text = format!("{a}: engine says {engine}, exhaustive search says {brute}");
            note(a.finite_sum(), text.clone(), &mut counterexample);
            member_fail.get_or_insert(text);
        }
        // one-sided: a realization of an engine non-member is a contradiction
        if !engine && realization_tried < 64 {
            realization_tried += 1;
            if let Some(f) = oracle.random_realization(a, config.trials.min(4), &mut rng)? {
                let text = format!("{a}: engine rejects but {f} realizes it");
                note(a.finite_sum(), text.clone(), &mut counterexample);
                realization_fail.get_or_insert(text);
            }
        }
    }
    checks.push(CheckResult {
        name: "membership agrees with exhaustive support choice".into(),
        passed: member_fail.is_none(),
        checked: probes.len(),
        detail: member_fail,
    });
    checks.push(CheckResult {
        name: "no random realization of an engine non-member".into(),
        passed: realization_fail.is_none(),
        checked: realization_tried,
        detail: realization_fail,
    });

    // certificates of positive answers
    let mut cert_fail = None;
    let mut certs = 0;
    for a in probes.iter().take(400) {
        match profile.contains(a) {
            Ok(m) => certs += usize::from(m.is_member()),
            Err(SemiringError::Disagreement(text)) => {
                note(a.finite_sum(), text.clone(), &mut counterexample);
                cert_fail.get_or_insert(text);
            }
            Err(e) => return Err(e.into()),
        }
    }
    checks.push(CheckResult {
        name: "membership certificates realize their vectors".into(),
        passed: cert_fail.is_none(),
        checked: certs,
        detail: cert_fail,
    });

    if let Field::Prime(p) = arr.field() {
        if config.tiny_prime.is_some_and(|cap| p <= cap) {
            let enum_top = 2.min(top);
            match oracle.tiny_field_enumeration(enum_top) {
                Ok(achieved) => {
                    let mut fail = None;
                    let values: Vec<ExtNat> = (0..=enum_top).map(ExtNat::Fin).chain([ExtNat::Inf]).collect();
                    let ranges = vec![values.len() as u64; r];
                    let total = ranges.iter().product::<u64>();
                    for idx in 0..total {
                        let mut k = idx;
                        let a = ValVector::new(
                            (0..r)
                                .map(|_| {
                                    let v = values[(k % values.len() as u64) as usize];
                                    k /= values.len() as u64;
                                    v
                                })
                                .collect(),
                        );
                        let engine = profile.is_member(&a)?;
                        if engine != achieved.contains(&a) {
                            let text = format!("{a}: engine says {engine}, enumeration over F_{p} says {}", !engine);
                            note(a.finite_sum(), text.clone(), &mut counterexample);
                            fail.get_or_insert(text);
                        }
                    }
                    checks.push(CheckResult {
                        name: format!("truncated values match enumeration over F_{p}"),
                        passed: fail.is_none(),
                        checked: total as usize,
                        detail: fail,
                    });
                }
                Err(OracleError::Budget(_)) => {}
                Err(e) => return Err(e),
            }
        }
    }

    let passed = checks.iter().all(|c| c.passed);
    Ok(OracleManifest {
        seed: config.seed,
        checks,
        passed,
        counterexample: counterexample.map(|(_, t)| t),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::EngineConfig;

    fn lines(coeffs: &[Vec<i64>]) -> ToricArrangement {
        ToricArrangement::rational_lines(coeffs).unwrap()
    }

    fn sets(ground: usize, labels: &[&[usize]]) -> BTreeSet<SupportSet> {
        labels.iter().map(|l| SupportSet::from_labels(ground, l)).collect()
    }

    #[test]
    fn plain_elimination() {
        let q = |x| Scalar::from_i64(Field::Rational, x);
        let rows = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]];
        assert_eq!(plain_rank(&rows, 3), 1);
        let k = plain_kernel(&rows, 3, Field::Rational);
        assert_eq!(k.len(), 2);
        for x in k {
            let s = &(&q(1) * &x[0]) + &(&(&q(2) * &x[1]) + &(&q(3) * &x[2]));
            assert!(s.is_zero());
        }
    }

    #[test]
    fn achievable_examples() {
        let planar = lines(&[vec![1, 0], vec![0, 1], vec![1, 1]]);
        let o = Oracle::new(&planar, OracleConfig::default()).unwrap();
        assert_eq!(o.achievable_supports(0).unwrap(), sets(3, &[&[1, 2, 3]]));
        assert_eq!(o.achievable_supports(1).unwrap(), sets(3, &[&[1, 2], &[1, 3], &[2, 3], &[1, 2, 3]]));
        let axes = lines(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        let o = Oracle::new(&axes, OracleConfig::default()).unwrap();
        assert_eq!(o.achievable_supports(1).unwrap().len(), 7);
    }

    #[test]
    fn membership_examples() {
        let planar = lines(&[vec![1, 0], vec![0, 1], vec![1, 1]]);
        let o = Oracle::new(&planar, OracleConfig::default()).unwrap();
        assert!(o.membership(&ValVector::from_finite(&[2, 1, 1])).unwrap());
        assert!(!o.membership(&ValVector::from_finite(&[2, 2, 1])).unwrap());
        assert!(o.membership(&ValVector::infinity(3)).unwrap());
        let axes = lines(&[vec![1, 0], vec![0, 1]]);
        let o = Oracle::new(&axes, OracleConfig::default()).unwrap();
        assert_eq!(o.non_members_in_box(&[1, 1]).unwrap(), vec![ValVector::from_finite(&[1, 0]), ValVector::from_finite(&[0, 1])]);
        assert!(o.non_members_in_box(&[0, 0]).unwrap().is_empty());
    }

    #[test]
    fn realization_examples() {
        let planar = lines(&[vec![1, 0], vec![0, 1], vec![1, 1]]);
        let o = Oracle::new(&planar, OracleConfig::default()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let a = ValVector::new(vec![ExtNat::Fin(1), ExtNat::Fin(1), ExtNat::Inf]);
        let f = o.random_realization(&a, 20, &mut rng).unwrap().expect("realizable");
        assert_eq!(planar.ord_a(&f), a);
        assert!(o.random_realization(&ValVector::from_finite(&[2, 2, 1]), 20, &mut rng).unwrap().is_none());
    }

    #[test]
    fn tiny_field_examples() {
        let q = |x| Scalar::from_i64(Field::Prime(5), x);
        let planar = ToricArrangement::new(Field::Prime(5), vec![vec![q(1), q(0)], vec![q(0), q(1)], vec![q(1), q(1)]], None).unwrap();
        let o = Oracle::new(&planar, OracleConfig::default()).unwrap();
        let got = o.tiny_field_enumeration(2).unwrap();
        assert!(got.contains(&ValVector::infinity(3)));
        assert!(got.contains(&ValVector::zero(3)));
        let p = SemiringProfile::new(planar.clone(), EngineConfig::default()).unwrap();
        for a in &got {
            assert!(p.is_member(a).unwrap(), "{a}");
        }
    }

    #[test]
    fn manifest_passes_on_planar() {
        let planar = lines(&[vec![1, 0], vec![0, 1], vec![1, 1]]);
        let p = SemiringProfile::new(planar, EngineConfig::default()).unwrap();
        let m = run_oracle_check(&p, OracleConfig::default()).unwrap();
        assert!(m.passed, "{m:?}");
    }

    #[test]
    fn manifest_catches_dropped_circuit() {
        let planar = lines(&[vec![1, 0], vec![0, 1], vec![1, 1]]);
        let cfg = EngineConfig {
            fault_drop_circuit: Some((1, 0)),
            ..EngineConfig::default()
        };
        let p = SemiringProfile::new(planar, cfg).unwrap();
        let m = run_oracle_check(&p, OracleConfig::default()).unwrap();
        assert!(!m.passed);
        assert!(m.counterexample.is_some());
    }

    #[test]
    fn oversized_ground_is_budget() {
        let many: Vec<Vec<i64>> = (0..7).map(|i| vec![1, i]).collect();
        let arr = lines(&many);
        assert!(matches!(Oracle::new(&arr, OracleConfig::default()), Err(OracleError::Budget(_))));
    }
}
