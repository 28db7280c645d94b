//! The value semiring `S(X) = ord_A(F[x])` of a distinguished-type arrangement:
//! per-degree layers, membership with realizing certificates, conductor, gap
//! sequence, genus, element classification and generators.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::arrangement::{binomial, conductor_degree, ArrangementError, ToricArrangement};
use crate::exact::Scalar;
use crate::matroid::{minimal_supports_of_subspace, MatroidError, ScrawlFamily, DEFAULT_GROUND_CAP};
use crate::polynomial::{Exponent, Polynomial};
use crate::tropical::{ExtNat, SupportSet, ValVector};

pub const DEFAULT_DEGREE_CAP: u64 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemiringError {
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error("degree {degree} exceeds the degree cap {cap}")]
    DegreeCap { degree: u64, cap: u64 },
    #[error("budget exhausted: {0}")]
    Budget(String),
    #[error("vector has length {got}, expected r = {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("classification requires conductor")]
    NoConductor,
    #[error("{0} is not an element of the semiring")]
    NotMember(ValVector),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("internal disagreement: {0}")]
    Disagreement(String),
    #[error("generation check failed: {0}")]
    GenerationFailed(String),
    #[error(transparent)]
    Matroid(MatroidError),
}

impl From<MatroidError> for SemiringError {
    fn from(e: MatroidError) -> Self {
        match e {
            MatroidError::GroundTooLarge { size, cap } => SemiringError::Budget(format!("r = {size} exceeds the ground cap {cap}")),
            other => SemiringError::Matroid(other),
        }
    }
}

impl From<crate::exact::AlgebraError> for SemiringError {
    fn from(e: crate::exact::AlgebraError) -> Self {
        SemiringError::Arrangement(ArrangementError::Algebra(e))
    }
}

/// Search limits for the engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngineConfig {
    pub degree_cap: u64,
    pub ground_cap: usize,
    /// Points swept in conductor validation, genus path checks and the
    /// generation box.
    pub box_budget: usize,
    /// Candidates examined per maximality or factorization query.
    pub classification_budget: usize,
    /// Distinct monomials in the generator closure.
    pub closure_budget: usize,
    /// Seed for sampled mixed-∞ probes.
    pub seed: u64,
    /// Drops circuit `idx` of layer `degree`. Only for fault-injection tests.
    #[doc(hidden)]
    pub fault_drop_circuit: Option<(u64, usize)>,
}

impl Default for EngineConfig {
    fn default() -> Self {
        Self {
            degree_cap: DEFAULT_DEGREE_CAP,
            ground_cap: DEFAULT_GROUND_CAP,
            box_budget: 200_000,
            classification_budget: 500_000,
            closure_budget: 200_000,
            seed: 0,
            fault_drop_circuit: None,
        }
    }
}

/// `S(X, d) = ord_A(R(d))`, stored through its circuits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeLayer {
    pub degree: u64,
    pub basis: Vec<Exponent>,
    /// Dimension of the evaluation image `ev(R(d))`.
    pub rank: usize,
    pub family: ScrawlFamily,
    /// One d-form per circuit whose evaluation has exactly that support.
    pub witnesses: Vec<Polynomial>,
    /// Evaluations of the witnesses at the branch directions.
    pub evaluations: Vec<Vec<Scalar>>,
}

impl DegreeLayer {
    /// `R(d) = 0` or its evaluation image vanishes.
    pub fn is_empty(&self) -> bool {
        self.rank == 0
    }

    pub fn circuits(&self) -> &[SupportSet] {
        self.family.circuits()
    }

    pub fn covered_within(&self, s: SupportSet) -> SupportSet {
        self.family.largest_scrawl_within(s)
    }
}

impl Serialize for DegreeLayer {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            support: SupportSet,
            witness: &'a Polynomial,
        }
        let circuits: Vec<Entry<'_>> = self
            .circuits()
            .iter()
            .zip(&self.witnesses)
            .map(|(c, w)| Entry { support: *c, witness: w })
            .collect();
        let mut s = serializer.serialize_struct("DegreeLayer", 5)?;
        s.serialize_field("degree", &self.degree)?;
        s.serialize_field("dimension", &self.basis.len())?;
        s.serialize_field("rank", &self.rank)?;
        s.serialize_field("empty", &self.is_empty())?;
        s.serialize_field("circuits", &circuits)?;
        s.end()
    }
}

/// Circuits chosen in one degree and the d-form combining their witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificatePart {
    pub degree: u64,
    pub circuits: Vec<SupportSet>,
    pub multipliers: Vec<Scalar>,
    pub form: Polynomial,
}

/// A realizing polynomial `f` with `ord_A(f) = a`, assembled degree by degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub parts: Vec<CertificatePart>,
    pub polynomial: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    Member(Certificate),
    /// No union of degree-`degree` circuits inside `{i : a_i ≤ degree}`
    /// reaches `label` (0-based).
    NonMember { degree: u64, label: usize },
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalityProbe {
    /// 1-based label.
    pub label: usize,
    pub probe: ValVector,
    pub member: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConductorReport {
    pub conductor: Option<ValVector>,
    /// Least degree isolating each label as a singleton circuit.
    pub singleton_degrees: Vec<Option<u64>>,
    pub box_points_checked: usize,
    pub infinity_probes: usize,
    pub minimality_probes: Vec<MinimalityProbe>,
    pub outward_steps: u64,
    pub diagnostic: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathIndependence {
    pub min_gaps: usize,
    pub max_gaps: usize,
    pub independent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenusReport {
    pub genus: usize,
    pub gaps: Vec<ValVector>,
    /// Staircase points outside `S(X)`, for comparison with `gaps`.
    pub staircase_non_members: Vec<ValVector>,
    pub non_members_match: bool,
    /// Present when the exhaustive path check was small enough to run.
    pub path_independence: Option<PathIndependence>,
    pub warning: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaximalityReport {
    pub maximal: bool,
    /// Some `b ∈ S`, `b ≥ a`, agreeing with `a` somewhere on its support.
    pub witness: Option<ValVector>,
    /// Largest finite entry tried per coordinate.
    pub entry_cap: Vec<ExtNat>,
    pub candidates_checked: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub left: ValVector,
    pub right: ValVector,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorReport {
    pub generators: Vec<ValVector>,
    pub candidates: usize,
    pub closure_size: usize,
    pub box_points_checked: usize,
}

/// One shape in the closed-form gap family: `high` entries equal to
/// `degree` and the rest equal to `degree − 1`, in any order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapShape {
    pub degree: u64,
    pub high: usize,
}

impl GapShape {
    fn matches(&self, v: &ValVector) -> bool {
        if self.degree == 0 {
            return false;
        }
        let mut high = 0;
        for c in v.coords() {
            match c.finite() {
                Some(x) if x == self.degree => high += 1,
                Some(x) if x + 1 == self.degree => {}
                _ => return false,
            }
        }
        high == self.high
    }

    /// The representative with the high entries first.
    pub fn representative(&self, r: usize) -> ValVector {
        ValVector::from_finite(&(0..r).map(|i| if i < self.high { self.degree } else { self.degree - 1 }).collect::<Vec<_>>())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedForm {
    pub n: usize,
    pub r: usize,
    pub degree: u64,
    pub conductor: ValVector,
    /// Shapes for degrees `d′ ≥ 1` with `binom(d′+n−1, n−1) < r` and
    /// `d′ ≤ high ≤ r − 1`.
    pub gap_family: Vec<GapShape>,
}

/// Closed-form conductor and gap family for a very uniform line arrangement.
pub fn very_uniform_closed_form(n: usize, r: usize) -> Result<ClosedForm, SemiringError> {
    if n < 2 || r < 2 {
        return Err(SemiringError::NotApplicable(format!("closed form needs n, r ≥ 2 (got n = {n}, r = {r})")));
    }
    let degree = conductor_degree(n, r);
    let mut gap_family = Vec::new();
    let mut d = 1u64;
    while binomial(d + n as u64 - 1, n as u64 - 1) < r as u64 {
        for high in (d as usize)..r {
            gap_family.push(GapShape { degree: d, high });
        }
        d += 1;
    }
    Ok(ClosedForm {
        n,
        r,
        degree,
        conductor: ValVector::constant(r, degree),
        gap_family,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedFormCrossCheck {
    pub closed_form: ClosedForm,
    pub computed_conductor: Option<ValVector>,
    pub conductor_matches: bool,
    pub computed_gaps: Vec<ValVector>,
    /// Computed gaps matching no shape of the closed-form family.
    pub gaps_outside_family: Vec<ValVector>,
    /// Family shapes never met on the canonical path.
    pub shapes_not_on_path: Vec<GapShape>,
    pub consistent: bool,
}

/// Steps `(a, i)` of the balanced staircase: from `a`, raise coordinate `i`.
pub fn staircase_steps(c: &[u64]) -> Vec<(Vec<u64>, usize)> {
    let mut cur = vec![0u64; c.len()];
    let mut out = Vec::new();
    loop {
        let mut moved = false;
        for i in 0..c.len() {
            if cur[i] < c[i] {
                out.push((cur.clone(), i));
                cur[i] += 1;
                moved = true;
            }
        }
        if !moved {
            return out;
        }
    }
}

/// Balanced staircase from 𝟎 to `c`: at level `k` every coordinate still
/// below `c_i` is raised by one, in index order. Starts at 𝟎.
pub fn staircase_path(c: &[u64]) -> Vec<ValVector> {
    let mut cur = vec![0u64; c.len()];
    let mut out = vec![ValVector::from_finite(&cur)];
    loop {
        let mut moved = false;
        for i in 0..c.len() {
            if cur[i] < c[i] {
                cur[i] += 1;
                moved = true;
                out.push(ValVector::from_finite(&cur));
            }
        }
        if !moved {
            return out;
        }
    }
}

fn finite_coords(v: &ValVector) -> Vec<u64> {
    v.coords().iter().map(|c| c.finite().expect("finite vector")).collect()
}

/// The engine. Layers are cached behind a lock so queries may run from
/// several threads.
pub struct SemiringProfile {
    arr: ToricArrangement,
    weights: Vec<u32>,
    config: EngineConfig,
    layers: RwLock<BTreeMap<u64, Arc<DegreeLayer>>>,
    layer_writer: Mutex<()>,
    conductor: OnceLock<Result<ConductorReport, SemiringError>>,
}

impl SemiringProfile {
    pub fn new(arr: ToricArrangement, config: EngineConfig) -> Result<Self, SemiringError> {
        let weights = arr.distinguished_weights().ok_or(ArrangementError::NotDistinguished)?;
        if arr.r() > config.ground_cap {
            return Err(SemiringError::Budget(format!("r = {} exceeds the ground cap {}", arr.r(), config.ground_cap)));
        }
        Ok(Self {
            arr,
            weights,
            config,
            layers: RwLock::new(BTreeMap::new()),
            layer_writer: Mutex::new(()),
            conductor: OnceLock::new(),
        })
    }

    pub fn arrangement(&self) -> &ToricArrangement {
        &self.arr
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    pub fn r(&self) -> usize {
        self.arr.r()
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn layer(&self, d: u64) -> Result<Arc<DegreeLayer>, SemiringError> {
        if d > self.config.degree_cap {
            return Err(SemiringError::DegreeCap {
                degree: d,
                cap: self.config.degree_cap,
            });
        }
        if let Some(l) = self.layers.read().expect("layer cache poisoned").get(&d) {
            return Ok(Arc::clone(l));
        }
        let _writer = self.layer_writer.lock().expect("layer writer poisoned");
        if let Some(l) = self.layers.read().expect("layer cache poisoned").get(&d) {
            return Ok(Arc::clone(l));
        }
        let layer = Arc::new(self.compute_layer(d)?);
        self.layers.write().expect("layer cache poisoned").insert(d, Arc::clone(&layer));
        Ok(layer)
    }

    fn compute_layer(&self, d: u64) -> Result<DegreeLayer, SemiringError> {
        let r = self.r();
        let basis = self.arr.monomial_basis(d)?;
        if basis.is_empty() {
            return Ok(DegreeLayer {
                degree: d,
                basis,
                rank: 0,
                family: ScrawlFamily::new(r, Vec::new())?,
                witnesses: Vec::new(),
                evaluations: Vec::new(),
            });
        }
        let eval = self.arr.evaluation_matrix(d)?;
        let rank = eval.rank()?;
        let mut family = minimal_supports_of_subspace(&eval.transpose(), self.config.ground_cap)?;
        if let Some((deg, idx)) = self.config.fault_drop_circuit {
            if deg == d && idx < family.len() {
                family = family.without_circuit(idx);
            }
        }
        let mut witnesses = Vec::with_capacity(family.len());
        let mut evaluations = Vec::with_capacity(family.len());
        for k in 0..family.len() {
            let w = family.witness(k).expect("computed families carry witnesses");
            witnesses.push(Polynomial::from_basis(self.arr.field(), self.arr.n(), &basis, &w.combination));
            evaluations.push(w.vector.clone());
        }
        Ok(DegreeLayer {
            degree: d,
            basis,
            rank,
            family,
            witnesses,
            evaluations,
        })
    }

    fn check_len(&self, a: &ValVector) -> Result<(), SemiringError> {
        if a.len() != self.r() {
            return Err(SemiringError::LengthMismatch {
                got: a.len(),
                expected: self.r(),
            });
        }
        Ok(())
    }

    fn below(a: &ValVector, d: u64) -> SupportSet {
        SupportSet::from_indices(a.len(), (0..a.len()).filter(|&i| a.get(i) <= ExtNat::Fin(d)))
    }

    /// Membership without building a certificate.
    pub fn is_member(&self, a: &ValVector) -> Result<bool, SemiringError> {
        self.check_len(a)?;
        for (d, part) in a.homogeneous_decomposition() {
            let layer = self.layer(d)?;
            if !part.is_subset(&layer.covered_within(Self::below(a, d))) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Decides `a ∈ S(X)`. For each degree `d` occurring in `a`, the circuits
    /// of layer `d` inside `{i : a_i ≤ d}` must cover `{i : a_i = d}`. A
    /// positive answer carries a realizing polynomial, re-checked through
    /// `ord_A`.
    pub fn contains(&self, a: &ValVector) -> Result<Membership, SemiringError> {
        self.check_len(a)?;
        let field = self.arr.field();
        let n = self.arr.n();
        let mut parts = Vec::new();
        let mut total = Polynomial::zero(field, n);
        for (d, part) in a.homogeneous_decomposition() {
            let layer = self.layer(d)?;
            let allowed = Self::below(a, d);
            let mut covered = SupportSet::empty(self.r());
            let mut chosen = Vec::new();
            for (k, c) in layer.circuits().iter().enumerate() {
                if c.is_subset(&allowed) && !c.intersection(&part).difference(&covered).is_empty() {
                    covered = covered.union(c);
                    chosen.push(k);
                }
            }
            if let Some(label) = part.difference(&covered).indices().next() {
                return Ok(Membership::NonMember { degree: d, label });
            }
            let (multipliers, form) = self.combine(&layer, &chosen);
            total = total.add(&form);
            parts.push(CertificatePart {
                degree: d,
                circuits: chosen.iter().map(|&k| layer.circuits()[k]).collect(),
                multipliers,
                form,
            });
        }
        let realized = self.arr.ord_a(&total);
        if realized != *a {
            return Err(SemiringError::Disagreement(format!("certificate for {a} realizes {realized}")));
        }
        Ok(Membership::Member(Certificate { parts, polynomial: total }))
    }

    /// `Σ λ_k w_k` over the chosen witnesses, with each `λ_k ∈ {1, 2, …}`
    /// picked so that no coordinate already reached cancels.
    fn combine(&self, layer: &DegreeLayer, chosen: &[usize]) -> (Vec<Scalar>, Polynomial) {
        let field = self.arr.field();
        let r = self.r();
        let mut acc = vec![Scalar::zero(field); r];
        let mut form = Polynomial::zero(field, self.arr.n());
        let mut multipliers = Vec::with_capacity(chosen.len());
        for &k in chosen {
            let w = &layer.evaluations[k];
            let lambda = (1..)
                .map(|t| Scalar::from_i64(field, t))
                .filter(|l| !l.is_zero())
                .find(|l| (0..r).all(|i| (acc[i].is_zero() && w[i].is_zero()) || !(&acc[i] + &(l * &w[i])).is_zero()))
                .expect("p > r leaves a non-cancelling multiplier");
            for i in 0..r {
                acc[i] = &acc[i] + &(&lambda * &w[i]);
            }
            form = form.add(&layer.witnesses[k].scale(&lambda));
            multipliers.push(lambda);
        }
        (multipliers, form)
    }

    /// Conductor candidate from singleton degrees, validated by box and
    /// mixed-∞ probes, widened outward on failure and then tightened.
    pub fn conductor(&self) -> Result<ConductorReport, SemiringError> {
        self.conductor.get_or_init(|| self.compute_conductor()).clone()
    }

    pub fn conductor_vector(&self) -> Result<ValVector, SemiringError> {
        self.conductor()?.conductor.ok_or(SemiringError::NoConductor)
    }

    fn compute_conductor(&self) -> Result<ConductorReport, SemiringError> {
        let r = self.r();
        let mut report = ConductorReport {
            conductor: None,
            singleton_degrees: vec![None; r],
            box_points_checked: 0,
            infinity_probes: 0,
            minimality_probes: Vec::new(),
            outward_steps: 0,
            diagnostic: None,
        };
        for i in 0..r {
            let g = (0..self.arr.n())
                .filter(|&j| !self.arr.branch(i)[j].is_zero())
                .map(|j| self.weights[j] as u64)
                .fold(0u64, num_integer::gcd);
            if g > 1 {
                report.diagnostic = Some(format!(
                    "weights on branch {} share the factor {g}, so its values avoid every residue but 0 mod {g} and no conductor exists",
                    i + 1
                ));
                return Ok(report);
            }
            if g == 0 {
                report.diagnostic = Some(format!("branch {} has zero direction", i + 1));
                return Ok(report);
            }
        }
        let mut d = 0;
        while report.singleton_degrees.iter().any(Option::is_none) {
            if d > self.config.degree_cap {
                let missing: Vec<usize> = (0..r).filter(|&i| report.singleton_degrees[i].is_none()).map(|i| i + 1).collect();
                report.diagnostic = Some(format!("labels {missing:?} are never isolated up to the degree cap {}", self.config.degree_cap));
                return Ok(report);
            }
            let layer = self.layer(d)?;
            for c in layer.circuits() {
                if c.len() == 1 {
                    let i = c.indices().next().expect("singleton");
                    report.singleton_degrees[i].get_or_insert(d);
                }
            }
            d += 1;
        }
        let mut c: Vec<u64> = report.singleton_degrees.iter().map(|x| x.expect("all set")).collect();
        let width = self.weights.iter().copied().max().unwrap_or(1) as u64;
        loop {
            if c.iter().max().copied().unwrap_or(0) + width > self.config.degree_cap {
                report.diagnostic = Some(format!("no candidate validated below the degree cap {}", self.config.degree_cap));
                return Ok(report);
            }
            if self.validate_upward(&c, width, &mut report)? {
                break;
            }
            for x in &mut c {
                *x += 1;
            }
            report.outward_steps += 1;
        }
        for i in 0..r {
            while c[i] > 0 {
                let mut lower = c.clone();
                lower[i] -= 1;
                if self.validate_upward(&lower, width, &mut report)? {
                    c = lower;
                } else {
                    break;
                }
            }
        }
        for i in 0..r {
            if c[i] == 0 {
                continue;
            }
            let probe = ValVector::from_finite(&(0..r).map(|j| if j == i { c[j] - 1 } else { c[j] + 1 }).collect::<Vec<_>>());
            let member = self.is_member(&probe)?;
            report.minimality_probes.push(MinimalityProbe { label: i + 1, probe, member });
        }
        report.conductor = Some(ValVector::from_finite(&c));
        Ok(report)
    }

    fn validate_upward(&self, c: &[u64], width: u64, report: &mut ConductorReport) -> Result<bool, SemiringError> {
        let r = c.len();
        let side = width + 1;
        let full = (side as u128).checked_pow(r as u32).unwrap_or(u128::MAX);
        let mut rng = ChaCha8Rng::seed_from_u64(self.config.seed);
        let points: Vec<Vec<u64>> = if full <= self.config.box_budget as u128 {
            (0..full as u64)
                .map(|mut idx| {
                    (0..r)
                        .map(|i| {
                            let off = idx % side;
                            idx /= side;
                            c[i] + off
                        })
                        .collect()
                })
                .collect()
        } else {
            (0..self.config.box_budget).map(|_| (0..r).map(|i| c[i] + rng.gen_range(0..side)).collect()).collect()
        };
        for p in points {
            report.box_points_checked += 1;
            if !self.is_member(&ValVector::from_finite(&p))? {
                return Ok(false);
            }
        }
        let patterns: Vec<u64> = if r <= 10 {
            (1..(1u64 << r)).collect()
        } else {
            (0..256).map(|_| rng.gen_range(1..(1u64 << r))).collect()
        };
        for bits in patterns {
            report.infinity_probes += 1;
            let probe = ValVector::new((0..r).map(|i| if bits >> i & 1 == 1 { ExtNat::Inf } else { ExtNat::Fin(c[i]) }).collect());
            if !self.is_member(&probe)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Largest singleton degree `D* = max_i D_i`.
    pub fn stabilization_degree(&self) -> Result<u64, SemiringError> {
        let rep = self.conductor()?;
        rep.singleton_degrees
            .iter()
            .map(|d| d.ok_or(SemiringError::NoConductor))
            .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
    }

    /// Whether the step `a → a + e_i` is a gap: no `s ∈ S` has `s_i = a_i`
    /// and `s ≥ a`. Equivalently, label `i` is covered by no circuit of
    /// layer `a_i` inside `{j : a_j ≤ a_i}`. The number of such steps on a
    /// saturated path from 𝟎 to the conductor does not depend on the path.
    pub fn step_is_gap(&self, a: &[u64], i: usize) -> Result<bool, SemiringError> {
        let d = a[i];
        let allowed = SupportSet::from_indices(a.len(), (0..a.len()).filter(|&j| a[j] <= d));
        Ok(!self.layer(d)?.covered_within(allowed).contains(i))
    }

    /// Start points of the gap steps along the balanced staircase from 𝟎 to
    /// the conductor, in path order.
    pub fn gap_sequence(&self) -> Result<Vec<ValVector>, SemiringError> {
        let c = finite_coords(&self.conductor_vector()?);
        let mut gaps = Vec::new();
        for (p, i) in staircase_steps(&c) {
            if self.step_is_gap(&p, i)? {
                gaps.push(ValVector::from_finite(&p));
            }
        }
        Ok(gaps)
    }

    /// Staircase points outside `S(X)`. Agrees with the gap sequence on the
    /// standard examples; reported beside it for comparison.
    pub fn staircase_non_members(&self) -> Result<Vec<ValVector>, SemiringError> {
        let c = finite_coords(&self.conductor_vector()?);
        let mut out = Vec::new();
        for p in staircase_path(&c) {
            if !self.is_member(&p)? {
                out.push(p);
            }
        }
        Ok(out)
    }

    /// Genus = number of gaps on the canonical path. When `r · max(c) ≤ 18`
    /// every monotone saturated path from 𝟎 to `c` is checked as well.
    pub fn genus(&self) -> Result<GenusReport, SemiringError> {
        let gaps = self.gap_sequence()?;
        let c = finite_coords(&self.conductor_vector()?);
        let r = c.len();
        let max_c = c.iter().copied().max().unwrap_or(0);
        let staircase_non_members = self.staircase_non_members()?;
        let mut report = GenusReport {
            genus: gaps.len(),
            non_members_match: staircase_non_members == gaps,
            gaps,
            staircase_non_members,
            path_independence: None,
            warning: None,
        };
        if (r as u64) * max_c <= 18 {
            let pi = self.path_gap_range(&c)?;
            if !pi.independent {
                report.warning = Some(format!("gap count depends on the path: between {} and {}", pi.min_gaps, pi.max_gaps));
            } else if pi.min_gaps != report.genus {
                report.warning = Some(format!("canonical path has {} gaps but every path has {}", report.genus, pi.min_gaps));
            }
            report.path_independence = Some(pi);
        }
        Ok(report)
    }

    /// Minimum and maximum number of gap steps over all monotone saturated
    /// paths in the box `[𝟎, c]`.
    pub fn path_gap_range(&self, c: &[u64]) -> Result<PathIndependence, SemiringError> {
        let radix: Vec<u64> = c.iter().map(|x| x + 1).collect();
        let size = radix.iter().try_fold(1u64, |acc, x| acc.checked_mul(*x)).unwrap_or(u64::MAX);
        if size > self.config.box_budget as u64 {
            return Err(SemiringError::Budget(format!("path box has {size} points")));
        }
        let mut lo = vec![0usize; size as usize];
        let mut hi = vec![0usize; size as usize];
        let mut point = vec![0u64; c.len()];
        for idx in 0..size as usize {
            let mut best: Option<(usize, usize)> = None;
            let mut stride = 1usize;
            for i in 0..c.len() {
                if point[i] > 0 {
                    let prev = idx - stride;
                    point[i] -= 1;
                    let gap = usize::from(self.step_is_gap(&point, i)?);
                    point[i] += 1;
                    let (a, b) = (lo[prev] + gap, hi[prev] + gap);
                    best = Some(match best {
                        None => (a, b),
                        Some((x, y)) => (x.min(a), y.max(b)),
                    });
                }
                stride *= radix[i] as usize;
            }
            let (a, b) = best.unwrap_or((0, 0));
            lo[idx] = a;
            hi[idx] = b;
            for i in 0..c.len() {
                point[i] += 1;
                if point[i] < radix[i] {
                    break;
                }
                point[i] = 0;
            }
        }
        let last = size as usize - 1;
        Ok(PathIndependence {
            min_gaps: lo[last],
            max_gaps: hi[last],
            independent: lo[last] == hi[last],
        })
    }
    fn classification_target(&self, a: &ValVector) -> Result<Vec<u64>, SemiringError> {
        self.check_len(a)?;
        let c = finite_coords(&self.conductor_vector()?);
        if a.is_infinity() {
            return Err(SemiringError::NotApplicable("the all-∞ vector has no finite coordinate".into()));
        }
        if !self.is_member(a)? {
            return Err(SemiringError::NotMember(a.clone()));
        }
        Ok(c)
    }

    /// Maximality via two searches that must agree: directly over `b ≥ a`
    /// sharing a finite entry with `a`, and through the sets `F_J(a)` for
    /// nonempty proper `J ⊂ Supp(a)`. Entries are searched up to
    /// `max(a_i, c_i) + 1` and ∞.
    pub fn maximality(&self, a: &ValVector) -> Result<MaximalityReport, SemiringError> {
        let c = self.classification_target(a)?;
        let (supp, lows, cap) = maximality_bounds(a, &c);
        let mut entry_cap = vec![ExtNat::Inf; a.len()];
        for (k, &i) in supp.iter().enumerate() {
            entry_cap[i] = ExtNat::Fin(cap[k]);
        }

        let (order_witness, order_count) = self.maximality_by_order(a, &supp, &lows, &cap)?;
        let (fj_witness, _) = self.maximality_by_faces(a, &supp, &lows, &cap)?;
        if order_witness.is_some() != fj_witness.is_some() {
            return Err(SemiringError::Disagreement(format!(
                "maximality predicates disagree on {a}: order search {:?}, face search {:?}",
                order_witness.map(|v| v.to_string()),
                fj_witness.map(|v| v.to_string())
            )));
        }
        Ok(MaximalityReport {
            maximal: order_witness.is_none(),
            witness: order_witness,
            entry_cap,
            candidates_checked: order_count,
        })
    }

    pub fn is_maximal(&self, a: &ValVector) -> Result<bool, SemiringError> {
        Ok(self.maximality(a)?.maximal)
    }

    fn maximality_by_order(&self, a: &ValVector, supp: &[usize], lows: &[u64], cap: &[u64]) -> Result<(Option<ValVector>, usize), SemiringError> {
        let ranges = order_ranges(lows, cap);
        let total = self.budgeted_product(&ranges, "maximality search")?;
        let mut count = 0;
        for idx in 0..total {
            let choice = mixed_radix(idx, &ranges);
            if choice.iter().all(|&k| k == 0) || !choice.contains(&0) {
                continue;
            }
            let mut b = a.clone();
            for (k, &i) in supp.iter().enumerate() {
                b.set(i, if choice[k] == ranges[k] - 1 { ExtNat::Inf } else { ExtNat::Fin(lows[k] + choice[k]) });
            }
            count += 1;
            if self.is_member(&b)? {
                return Ok((Some(b), count));
            }
        }
        Ok((None, count))
    }

    fn maximality_by_faces(&self, a: &ValVector, supp: &[usize], lows: &[u64], cap: &[u64]) -> Result<(Option<ValVector>, usize), SemiringError> {
        let s = supp.len();
        if s <= 1 {
            return Ok((None, 0));
        }
        let mut count = 0;
        for j_bits in 1..((1u64 << s) - 1) {
            let free: Vec<usize> = (0..s).filter(|k| j_bits >> k & 1 == 0).collect();
            // strictly above a_i: a_i + 1 ..= cap, then ∞
            let ranges: Vec<u64> = free.iter().map(|&k| cap[k] - lows[k] + 1).collect();
            let total = self.budgeted_product(&ranges, "maximality search")?;
            for idx in 0..total {
                let choice = mixed_radix(idx, &ranges);
                let mut b = a.clone();
                for (t, &k) in free.iter().enumerate() {
                    let v = if choice[t] == ranges[t] - 1 { ExtNat::Inf } else { ExtNat::Fin(lows[k] + 1 + choice[t]) };
                    b.set(supp[k], v);
                }
                count += 1;
                if self.is_member(&b)? {
                    return Ok((Some(b), count));
                }
            }
        }
        Ok((None, count))
    }

    fn budgeted_product(&self, ranges: &[u64], what: &str) -> Result<u64, SemiringError> {
        let total = ranges.iter().try_fold(1u64, |acc, x| acc.checked_mul(*x));
        match total {
            Some(t) if t <= self.config.classification_budget as u64 => Ok(t),
            _ => Err(SemiringError::Budget(format!("{what} exceeds {} candidates", self.config.classification_budget))),
        }
    }

    /// A nontrivial factorization `a = b ⊙ c` with `b, c ∈ S`, `a ∉ {b, c}`.
    /// Where `a_i = ∞` one factor is ∞ and the other ranges over
    /// `0..=c_i + 1` and ∞.
    pub fn factorization(&self, a: &ValVector) -> Result<Option<Factorization>, SemiringError> {
        let cond = self.classification_target(a)?;
        let r = a.len();
        let ranges = factor_ranges(a, &cond);
        self.budgeted_product(&ranges, "factor search")?;
        // The left factor is enumerated first; right factors are only
        // expanded for left factors in S. On an ∞ coordinate the free factor
        // takes 0..=c_i+1 or ∞, encoded as digits 0..c_i+2.
        let free = |i: usize, k: u64| if k < cond[i] + 2 { ExtNat::Fin(k) } else { ExtNat::Inf };
        let left_ranges: Vec<u64> = (0..r)
            .map(|i| match a.get(i) {
                ExtNat::Fin(x) => x + 1,
                ExtNat::Inf => cond[i] + 3,
            })
            .collect();
        let left_total: u64 = left_ranges.iter().product();
        for idx in 0..left_total {
            let choice = mixed_radix(idx, &left_ranges);
            let left = ValVector::new(
                (0..r)
                    .map(|i| match a.get(i) {
                        ExtNat::Fin(_) => ExtNat::Fin(choice[i]),
                        ExtNat::Inf => free(i, choice[i]),
                    })
                    .collect(),
            );
            if left == *a || !self.is_member(&left)? {
                continue;
            }
            // right is forced except where both a and left are ∞
            let open: Vec<usize> = (0..r).filter(|&i| a.get(i) == ExtNat::Inf && left.get(i) == ExtNat::Inf).collect();
            let right_ranges: Vec<u64> = open.iter().map(|&i| cond[i] + 3).collect();
            let right_total: u64 = right_ranges.iter().product();
            for jdx in 0..right_total {
                let digits = mixed_radix(jdx, &right_ranges);
                let right = ValVector::new(
                    (0..r)
                        .map(|i| match (a.get(i), left.get(i)) {
                            (ExtNat::Fin(x), ExtNat::Fin(y)) => ExtNat::Fin(x - y),
                            (ExtNat::Inf, ExtNat::Inf) => free(i, digits[open.iter().position(|&o| o == i).expect("open")]),
                            _ => ExtNat::Inf,
                        })
                        .collect(),
                );
                if right != *a && self.is_member(&right)? {
                    return Ok(Some(Factorization { left, right }));
                }
            }
        }
        Ok(None)
    }

    pub fn is_mult_irreducible(&self, a: &ValVector) -> Result<bool, SemiringError> {
        Ok(self.factorization(a)?.is_none())
    }

    /// Maximal irreducible elements among `d · C` for circuits `C` of layers
    /// `1..=D*`, followed by a check that their closure reproduces every
    /// member of the box `{a : a_i ≤ c_i or a_i = ∞}`.
    pub fn generators(&self) -> Result<GeneratorReport, SemiringError> {
        let c = finite_coords(&self.conductor_vector()?);
        let total = c.iter().try_fold(1u64, |acc, x| acc.checked_mul(x + 2)).unwrap_or(u64::MAX);
        if total > self.config.box_budget as u64 {
            return Err(SemiringError::Budget(format!("generation box has {total} points")));
        }
        let top = self.stabilization_degree()?;
        let mut candidates = Vec::new();
        for d in 1..=top {
            for circ in self.layer(d)?.circuits() {
                candidates.push(ValVector::homogeneous(d, *circ));
            }
        }
        // fail on budget before any classification work
        for cand in &candidates {
            let (_, lows, cap) = maximality_bounds(cand, &c);
            self.budgeted_product(&order_ranges(&lows, &cap), "maximality search")?;
            self.budgeted_product(&factor_ranges(cand, &c), "factor search")?;
        }
        let mut generators = Vec::new();
        for cand in &candidates {
            if self.is_maximal(cand)? && self.is_mult_irreducible(cand)? && !generators.contains(cand) {
                generators.push(cand.clone());
            }
        }
        let (closure_size, box_points_checked) = self.verify_generation(&generators, &c)?;
        Ok(GeneratorReport {
            generators,
            candidates: candidates.len(),
            closure_size,
            box_points_checked,
        })
    }

    fn verify_generation(&self, generators: &[ValVector], c: &[u64]) -> Result<(usize, usize), SemiringError> {
        let r = c.len();
        let ranges: Vec<u64> = c.iter().map(|x| x + 2).collect();
        let total = ranges.iter().try_fold(1u64, |acc, x| acc.checked_mul(*x)).unwrap_or(u64::MAX);
        if total > self.config.box_budget as u64 {
            return Err(SemiringError::Budget(format!("generation box has {total} points")));
        }
        let k = c.iter().copied().max().unwrap_or(0);
        // entries above k only need to stay finite, so they saturate at k + 1
        let saturate = |v: &ValVector| -> ValVector {
            ValVector::new(
                v.coords()
                    .iter()
                    .map(|x| match x {
                        ExtNat::Fin(y) if *y > k => ExtNat::Fin(k + 1),
                        other => *other,
                    })
                    .collect(),
            )
        };
        let gens: Vec<ValVector> = generators.iter().map(saturate).collect();
        let mut closure: HashSet<ValVector> = HashSet::new();
        let mut queue: VecDeque<ValVector> = VecDeque::new();
        let zero = ValVector::zero(r);
        closure.insert(zero.clone());
        queue.push_back(zero);
        while let Some(m) = queue.pop_front() {
            for g in &gens {
                let next = saturate(&m.odot(g).expect("same length"));
                if closure.insert(next.clone()) {
                    if closure.len() > self.config.closure_budget {
                        return Err(SemiringError::Budget(format!("generator closure exceeds {} monomials", self.config.closure_budget)));
                    }
                    queue.push_back(next);
                }
            }
        }
        let mut monomials: Vec<ValVector> = closure.into_iter().collect();
        monomials.sort();

        for idx in 0..total {
            let choice = mixed_radix(idx, &ranges);
            let a = ValVector::new((0..r).map(|i| if choice[i] == ranges[i] - 1 { ExtNat::Inf } else { ExtNat::Fin(choice[i]) }).collect());
            // the ⊕ of all monomials ≥ a equals a iff each finite entry of a
            // is attained by one of them
            let finite: Vec<(usize, u64)> = (0..r).filter_map(|i| a.get(i).finite().map(|x| (i, x))).collect();
            let mut attained = vec![false; finite.len()];
            let mut missing = finite.len();
            for m in &monomials {
                if missing == 0 {
                    break;
                }
                if !a.leq(m).expect("same length") {
                    continue;
                }
                for (k, &(i, x)) in finite.iter().enumerate() {
                    if !attained[k] && m.get(i) == ExtNat::Fin(x) {
                        attained[k] = true;
                        missing -= 1;
                    }
                }
            }
            let generated = missing == 0;
            let member = self.is_member(&a)?;
            if member && !generated {
                return Err(SemiringError::GenerationFailed(format!("{a} lies in S(X) but is not generated")));
            }
            if generated && !member {
                return Err(SemiringError::Disagreement(format!("{a} is generated but fails membership")));
            }
        }
        Ok((monomials.len(), total as usize))
    }

    /// Compares the closed form against the computed conductor and gaps.
    pub fn cross_check_closed_form(&self) -> Result<ClosedFormCrossCheck, SemiringError> {
        let closed_form = very_uniform_closed_form(self.arr.n(), self.r())?;
        let computed_conductor = self.conductor()?.conductor;
        let conductor_matches = computed_conductor.as_ref() == Some(&closed_form.conductor);
        let computed_gaps = if computed_conductor.is_some() { self.gap_sequence()? } else { Vec::new() };
        let gaps_outside_family: Vec<ValVector> = computed_gaps
            .iter()
            .filter(|g| !closed_form.gap_family.iter().any(|s| s.matches(g)))
            .cloned()
            .collect();
        let shapes_not_on_path: Vec<GapShape> = closed_form
            .gap_family
            .iter()
            .filter(|s| !computed_gaps.iter().any(|g| s.matches(g)))
            .cloned()
            .collect();
        let consistent = conductor_matches && gaps_outside_family.is_empty() && shapes_not_on_path.is_empty();
        Ok(ClosedFormCrossCheck {
            closed_form,
            computed_conductor,
            conductor_matches,
            computed_gaps,
            gaps_outside_family,
            shapes_not_on_path,
            consistent,
        })
    }
}

/// Support of `a`, its entries, and the per-entry search cap
/// `max(a_i, c_i) + 1`.
fn maximality_bounds(a: &ValVector, c: &[u64]) -> (Vec<usize>, Vec<u64>, Vec<u64>) {
    let supp: Vec<usize> = a.support().indices().collect();
    let lows: Vec<u64> = supp.iter().map(|&i| a.get(i).finite().expect("support")).collect();
    let cap = supp.iter().zip(&lows).map(|(&i, &l)| l.max(c[i]) + 1).collect();
    (supp, lows, cap)
}

/// Choice `k ∈ [0, cap − low + 1]` per support entry; the last one means ∞.
fn order_ranges(lows: &[u64], cap: &[u64]) -> Vec<u64> {
    lows.iter().zip(cap).map(|(l, c)| c - l + 2).collect()
}

/// Split points per coordinate: `a_i + 1` on finite entries; on ∞ entries
/// `(∞, x)` and `(x, ∞)` for `x ∈ 0..=c_i + 1`, and `(∞, ∞)`.
fn factor_ranges(a: &ValVector, c: &[u64]) -> Vec<u64> {
    (0..a.len())
        .map(|i| match a.get(i) {
            ExtNat::Fin(x) => x + 1,
            ExtNat::Inf => 2 * (c[i] + 2) + 1,
        })
        .collect()
}

/// Little-endian mixed-radix digits of `idx`.
fn mixed_radix(mut idx: u64, ranges: &[u64]) -> Vec<u64> {
    ranges
        .iter()
        .map(|&m| {
            let digit = idx % m;
            idx /= m;
            digit
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Field;

    fn v(xs: &[Option<u64>]) -> ValVector {
        ValVector::new(xs.iter().map(|x| x.map_or(ExtNat::Inf, ExtNat::Fin)).collect())
    }

    fn profile(coeffs: &[Vec<i64>]) -> SemiringProfile {
        SemiringProfile::new(ToricArrangement::rational_lines(coeffs).unwrap(), EngineConfig::default()).unwrap()
    }

    fn planar3() -> SemiringProfile {
        profile(&[vec![1, 0], vec![0, 1], vec![1, 1]])
    }

    fn sets(ground: usize, labels: &[&[usize]]) -> Vec<SupportSet> {
        labels.iter().map(|l| SupportSet::from_labels(ground, l)).collect()
    }

    #[test]
    fn planar_layers() {
        let p = planar3();
        assert_eq!(p.layer(1).unwrap().circuits(), sets(3, &[&[1, 2], &[1, 3], &[2, 3]]).as_slice());
        assert_eq!(p.layer(2).unwrap().circuits(), sets(3, &[&[1], &[2], &[3]]).as_slice());
        assert_eq!(p.layer(0).unwrap().circuits(), sets(3, &[&[1, 2, 3]]).as_slice());
        let l1 = p.layer(1).unwrap();
        for (k, w) in l1.witnesses.iter().enumerate() {
            assert_eq!(p.arrangement().ord_a(w), ValVector::homogeneous(1, l1.circuits()[k]));
        }
    }

    #[test]
    fn planar_membership() {
        let p = planar3();
        assert!(p.is_member(&ValVector::from_finite(&[2, 1, 1])).unwrap());
        assert!(!p.is_member(&ValVector::from_finite(&[2, 2, 1])).unwrap());
        assert!(p.is_member(&ValVector::infinity(3)).unwrap());
        assert!(p.is_member(&ValVector::zero(3)).unwrap());
        match p.contains(&ValVector::from_finite(&[2, 2, 1])).unwrap() {
            Membership::NonMember { degree, label } => assert_eq!((degree, label), (1, 2)),
            other => panic!("unexpected {other:?}"),
        }
        match p.contains(&ValVector::from_finite(&[2, 1, 1])).unwrap() {
            Membership::Member(cert) => assert_eq!(p.arrangement().ord_a(&cert.polynomial), ValVector::from_finite(&[2, 1, 1])),
            other => panic!("unexpected {other:?}"),
        }
        match p.contains(&ValVector::infinity(3)).unwrap() {
            Membership::Member(cert) => assert!(cert.polynomial.is_zero()),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn planar_invariants() {
        let p = planar3();
        assert_eq!(p.conductor_vector().unwrap(), ValVector::from_finite(&[2, 2, 2]));
        assert_eq!(
            p.gap_sequence().unwrap(),
            vec![ValVector::from_finite(&[1, 0, 0]), ValVector::from_finite(&[1, 1, 0]), ValVector::from_finite(&[2, 2, 1])]
        );
        let g = p.genus().unwrap();
        assert_eq!(g.genus, 3);
        assert!(g.path_independence.unwrap().independent);
    }

    #[test]
    fn planar_classification() {
        let p = planar3();
        assert!(p.is_maximal(&v(&[Some(1), Some(1), None])).unwrap());
        assert!(!p.is_maximal(&ValVector::from_finite(&[1, 1, 1])).unwrap());
        assert!(p.is_mult_irreducible(&v(&[Some(1), Some(1), None])).unwrap());
        let f = p.factorization(&v(&[Some(2), Some(2), None])).unwrap().unwrap();
        assert_eq!(f.left.odot(&f.right).unwrap(), v(&[Some(2), Some(2), None]));
        assert!(p.is_mult_irreducible(&ValVector::zero(3)).unwrap());
        assert!(matches!(p.is_maximal(&ValVector::infinity(3)), Err(SemiringError::NotApplicable(_))));
        assert!(matches!(p.is_maximal(&ValVector::from_finite(&[2, 2, 1])), Err(SemiringError::NotMember(_))));
        let gens = p.generators().unwrap();
        assert_eq!(
            gens.generators,
            vec![v(&[Some(1), Some(1), None]), v(&[Some(1), None, Some(1)]), v(&[None, Some(1), Some(1)])]
        );
    }

    #[test]
    fn axes_profile() {
        let p = profile(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(p.conductor_vector().unwrap(), ValVector::constant(3, 1));
        assert_eq!(p.genus().unwrap().genus, 2);
        let gens = p.generators().unwrap().generators;
        assert_eq!(gens, (0..3).map(|i| ValVector::homogeneous(1, SupportSet::from_indices(3, [i]))).collect::<Vec<_>>());
    }

    #[test]
    fn weighted_without_conductor() {
        let q = |x| Scalar::from_i64(Field::Rational, x);
        let arr = ToricArrangement::new(Field::Rational, vec![vec![q(1), q(1)], vec![q(1), q(2)]], Some(vec![vec![2, 2], vec![2, 2]])).unwrap();
        let p = SemiringProfile::new(arr, EngineConfig::default()).unwrap();
        let rep = p.conductor().unwrap();
        assert!(rep.conductor.is_none());
        assert!(rep.diagnostic.unwrap().contains("factor 2"));
        assert!(matches!(p.gap_sequence(), Err(SemiringError::NoConductor)));
    }

    #[test]
    fn weighted_cusp_pair() {
        // t ↦ (t^2, t^3) and t ↦ (2t^2, t^3): two cusps sharing weights
        let q = |x| Scalar::from_i64(Field::Rational, x);
        let arr = ToricArrangement::new(Field::Rational, vec![vec![q(1), q(1)], vec![q(2), q(1)]], Some(vec![vec![2, 3], vec![2, 3]])).unwrap();
        let p = SemiringProfile::new(arr, EngineConfig::default()).unwrap();
        let rep = p.conductor().unwrap();
        let c = rep.conductor.expect("conductor exists");
        for a in staircase_path(&finite_coords(&c)) {
            let _ = p.contains(&a).unwrap();
        }
        assert!(p.is_member(&c).unwrap());
    }

    #[test]
    fn degree_cap_enforced() {
        let arr = ToricArrangement::rational_lines(&[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        let p = SemiringProfile::new(arr, EngineConfig { degree_cap: 1, ..EngineConfig::default() }).unwrap();
        assert!(matches!(p.is_member(&ValVector::from_finite(&[2, 1, 1])), Err(SemiringError::DegreeCap { .. })));
    }

    #[test]
    fn closed_form_examples() {
        let cf = very_uniform_closed_form(2, 5).unwrap();
        assert_eq!(cf.conductor, ValVector::constant(5, 4));
        let cf = very_uniform_closed_form(3, 4).unwrap();
        assert_eq!(cf.conductor, ValVector::constant(4, 2));
        assert_eq!(cf.gap_family, vec![GapShape { degree: 1, high: 1 }, GapShape { degree: 1, high: 2 }, GapShape { degree: 1, high: 3 }]);
        assert_eq!(very_uniform_closed_form(3, 10).unwrap().conductor, ValVector::constant(10, 3));
        assert!(very_uniform_closed_form(1, 3).is_err());
    }

    #[test]
    fn staircase_shape() {
        let path = staircase_path(&[2, 1]);
        assert_eq!(
            path,
            vec![ValVector::from_finite(&[0, 0]), ValVector::from_finite(&[1, 0]), ValVector::from_finite(&[1, 1]), ValVector::from_finite(&[2, 1])]
        );
    }
}
