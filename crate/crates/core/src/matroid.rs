//! Circuits and scrawls of linear subspaces, and rank-function matroids of
//! vector configurations.

use serde::Serialize;
use thiserror::Error;

use crate::exact::{AlgebraError, ExactMatrix, Field, Scalar};
use crate::tropical::{subsets_of_size, SupportSet};

/// Largest ground set swept exhaustively unless configured otherwise.
pub const DEFAULT_GROUND_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("ground set too large for exhaustive enumeration ({size} > {cap})")]
    GroundTooLarge { size: usize, cap: usize },
    #[error("circuit {0} is empty")]
    EmptyCircuit(String),
    #[error("circuits {0} and {1} are comparable; circuits must form an antichain")]
    NotAntichain(String, String),
    #[error("circuit {circuit} has labels outside the ground set of size {ground}")]
    OutsideGround { circuit: String, ground: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// One circuit together with the vector realizing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Circuit {
    pub support: SupportSet,
    /// Combination `y` of the generating rows with `w = yᵀG`.
    pub combination: Vec<Scalar>,
    /// The vector `w` of the subspace, whose support is exactly `support`.
    pub vector: Vec<Scalar>,
}

/// A set of scrawls, stored through its circuits (minimal scrawls). The
/// scrawls themselves are all nonempty unions of circuits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScrawlFamily {
    ground: usize,
    circuits: Vec<SupportSet>,
    witnesses: Vec<Option<Circuit>>,
}

impl ScrawlFamily {
    /// Builds a family from bare circuits, rejecting empty circuits and
    /// comparable pairs.
    pub fn new(ground: usize, mut circuits: Vec<SupportSet>) -> Result<Self, MatroidError> {
        for c in &circuits {
            if c.ground() != ground {
                return Err(MatroidError::OutsideGround {
                    circuit: c.to_string(),
                    ground,
                });
            }
            if c.is_empty() {
                return Err(MatroidError::EmptyCircuit(c.to_string()));
            }
        }
        circuits.sort_by(SupportSet::cmp_card_lex);
        circuits.dedup();
        for (i, a) in circuits.iter().enumerate() {
            for b in &circuits[i + 1..] {
                if a.is_subset(b) || b.is_subset(a) {
                    return Err(MatroidError::NotAntichain(a.to_string(), b.to_string()));
                }
            }
        }
        let witnesses = vec![None; circuits.len()];
        Ok(Self {
            ground,
            circuits,
            witnesses,
        })
    }

    fn with_witnesses(ground: usize, found: Vec<Circuit>) -> Self {
        let circuits = found.iter().map(|c| c.support).collect();
        let witnesses = found.into_iter().map(Some).collect();
        Self {
            ground,
            circuits,
            witnesses,
        }
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    /// Circuits ordered by cardinality, then lexicographically.
    pub fn circuits(&self) -> &[SupportSet] {
        &self.circuits
    }

    pub fn witness(&self, idx: usize) -> Option<&Circuit> {
        self.witnesses[idx].as_ref()
    }

    pub fn len(&self) -> usize {
        self.circuits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }

    /// Whether `s` is a union of circuits (i.e. a scrawl), with ∅ counted as
    /// the trivial union.
    pub fn is_scrawl_or_empty(&self, s: SupportSet) -> bool {
        self.largest_scrawl_within(s) == s
    }

    /// Union of all circuits contained in `s`.
    pub fn largest_scrawl_within(&self, s: SupportSet) -> SupportSet {
        self.circuits
            .iter()
            .filter(|c| c.is_subset(&s))
            .fold(SupportSet::empty(self.ground), |acc, c| acc.union(c))
    }

    pub fn contains_circuit_within(&self, s: SupportSet) -> bool {
        self.circuits.iter().any(|c| c.is_subset(&s))
    }

    /// Drops the circuit at `idx`. Used to fabricate corrupted families in
    /// fault-injection tests.
    #[doc(hidden)]
    pub fn without_circuit(&self, idx: usize) -> Self {
        let mut out = self.clone();
        out.circuits.remove(idx);
        out.witnesses.remove(idx);
        out
    }
}

/// Circuits of the row space `W` of `g` (a `k × r` matrix): the minimal
/// supports of nonzero vectors of `W`, each with a witness vector.
///
/// Subsets are swept by increasing cardinality in lexicographic order; `S` is
/// recorded when it contains no earlier circuit and some nonzero `w ∈ W`
/// vanishes off `S`, which happens exactly when the columns outside `S` have
/// smaller rank than `g`.
pub fn minimal_supports_of_subspace(g: &ExactMatrix, ground_cap: usize) -> Result<ScrawlFamily, MatroidError> {
    g.check_field()?;
    let r = g.cols();
    if r > ground_cap || r > SupportSet::MAX_GROUND {
        return Err(MatroidError::GroundTooLarge { size: r, cap: ground_cap });
    }
    let total = g.rank()?;
    let mut found: Vec<Circuit> = Vec::new();
    if total == 0 {
        return Ok(ScrawlFamily::with_witnesses(r, found));
    }
    for k in 1..=r {
        for s in subsets_of_size(r, k) {
            if found.iter().any(|c| c.support.is_subset(&s)) {
                continue;
            }
            let outside: Vec<usize> = s.complement().indices().collect();
            let restricted = g.select_columns(&outside);
            if restricted.rank()? < total {
                found.push(circuit_witness(g, &restricted, s)?);
            }
        }
    }
    Ok(ScrawlFamily::with_witnesses(r, found))
}

fn circuit_witness(g: &ExactMatrix, restricted: &ExactMatrix, s: SupportSet) -> Result<Circuit, MatroidError> {
    let gt = g.transpose();
    for y in restricted.transpose().kernel_basis()? {
        let w = gt.mul_vec(&y);
        if w.iter().any(|x| !x.is_zero()) {
            let support = SupportSet::from_indices(w.len(), w.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, _)| i));
            assert_eq!(support, s, "witness support differs from minimal support");
            return Ok(Circuit {
                support: s,
                combination: y,
                vector: w,
            });
        }
    }
    unreachable!("rank drop guarantees a nonzero witness")
}

/// Outcome of checking the scrawl axioms on a family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScrawlAxiomReport {
    pub nonempty: bool,
    /// Unions of circuits are scrawls by construction.
    pub union_closed: bool,
    pub elimination: bool,
    pub exhaustive: bool,
    pub pairs_checked: usize,
    pub counterexample: Option<EliminationCounterexample>,
}

impl ScrawlAxiomReport {
    pub fn passed(&self) -> bool {
        self.nonempty && self.union_closed && self.elimination
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EliminationCounterexample {
    pub first: SupportSet,
    pub second: SupportSet,
    pub removed: usize,
}

/// Checks the elimination axiom: for distinct scrawls `S1, S2` and
/// `e ∈ S1 ∩ S2`, `(S1 ∪ S2) \ {e}` contains a scrawl (equivalently a
/// circuit). All scrawls are enumerated when there are at most 8 circuits;
/// otherwise pairs of circuits and then `sample_budget` deterministic pairs of
/// two-circuit unions are checked.
pub fn verify_scrawl_axioms(fam: &ScrawlFamily, sample_budget: usize) -> ScrawlAxiomReport {
    let nonempty = fam.circuits().iter().all(|c| !c.is_empty());
    let scrawls: Vec<SupportSet>;
    let exhaustive = fam.len() <= 8;
    if exhaustive {
        let mut all: Vec<SupportSet> = (1u64..(1u64 << fam.len()))
            .map(|mask| {
                fam.circuits()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .fold(SupportSet::empty(fam.ground()), |acc, (_, c)| acc.union(c))
            })
            .collect();
        all.sort();
        all.dedup();
        scrawls = all;
    } else {
        let mut pool: Vec<SupportSet> = fam.circuits().to_vec();
        let c = fam.circuits();
        let mut added = 0;
        'outer: for i in 0..c.len() {
            for j in i + 1..c.len() {
                if added >= sample_budget {
                    break 'outer;
                }
                pool.push(c[i].union(&c[j]));
                added += 1;
            }
        }
        pool.sort();
        pool.dedup();
        scrawls = pool;
    }
    let mut pairs = 0;
    for (i, s1) in scrawls.iter().enumerate() {
        for s2 in &scrawls[i + 1..] {
            let both = s1.intersection(s2);
            for e in both.indices() {
                pairs += 1;
                let mut rest = s1.union(s2);
                rest.remove(e);
                if !fam.contains_circuit_within(rest) {
                    return ScrawlAxiomReport {
                        nonempty,
                        union_closed: true,
                        elimination: false,
                        exhaustive,
                        pairs_checked: pairs,
                        counterexample: Some(EliminationCounterexample {
                            first: *s1,
                            second: *s2,
                            removed: e + 1,
                        }),
                    };
                }
            }
        }
    }
    ScrawlAxiomReport {
        nonempty,
        union_closed: true,
        elimination: true,
        exhaustive,
        pairs_checked: pairs,
        counterexample: None,
    }
}

/// The matroid of a vector configuration: one column per label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankMatroid {
    field: Field,
    dim: usize,
    columns: Vec<Vec<Scalar>>,
}

/// Surjection from the non-loop labels onto the simplified ground set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabelMap {
    /// `sigma[i]` is the class of label `i` (0-based), `None` for loops.
    pub sigma: Vec<Option<usize>>,
    pub loops: Vec<usize>,
    /// Representative (least label) of each class.
    pub representatives: Vec<usize>,
}

impl RankMatroid {
    /// `columns[i]` is the vector attached to label `i`; all columns share
    /// length `dim`.
    pub fn new(field: Field, dim: usize, columns: Vec<Vec<Scalar>>) -> Result<Self, MatroidError> {
        for c in &columns {
            if c.len() != dim {
                return Err(AlgebraError::Shape {
                    expected: dim,
                    found: c.len(),
                }
                .into());
            }
            for s in c {
                if s.field() != field {
                    return Err(AlgebraError::FieldMismatch(field, s.field()).into());
                }
            }
        }
        Ok(Self { field, dim, columns })
    }

    pub fn ground_size(&self) -> usize {
        self.columns.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn columns(&self) -> &[Vec<Scalar>] {
        &self.columns
    }

    pub fn rank(&self, s: SupportSet) -> usize {
        if s.is_empty() {
            return 0;
        }
        let mut entries = Vec::with_capacity(self.dim * s.len());
        for row in 0..self.dim {
            for i in s.indices() {
                entries.push(self.columns[i][row].clone());
            }
        }
        ExactMatrix::new(self.field, self.dim, s.len(), entries)
            .and_then(|m| m.rank())
            .expect("fields checked at construction")
    }

    fn single(&self, i: usize) -> SupportSet {
        SupportSet::from_indices(self.ground_size(), [i])
    }

    fn pair(&self, i: usize, j: usize) -> SupportSet {
        SupportSet::from_indices(self.ground_size(), [i, j])
    }

    /// No loops and no parallel pairs.
    pub fn is_simple(&self) -> bool {
        let r = self.ground_size();
        (0..r).all(|i| self.rank(self.single(i)) == 1)
            && (0..r).all(|i| (i + 1..r).all(|j| self.rank(self.pair(i, j)) == 2))
    }

    /// Every subset of size at most `dim` is independent.
    pub fn is_uniform(&self) -> bool {
        let r = self.ground_size();
        (1..=self.dim.min(r)).all(|k| subsets_of_size(r, k).into_iter().all(|s| self.rank(s) == k))
    }

    /// Removes loops and merges parallel classes, keeping the least label of
    /// each class as representative.
    pub fn simplify(&self) -> (RankMatroid, LabelMap) {
        let r = self.ground_size();
        let mut sigma = vec![None; r];
        let mut loops = Vec::new();
        let mut representatives: Vec<usize> = Vec::new();
        for i in 0..r {
            if self.rank(self.single(i)) == 0 {
                loops.push(i);
                continue;
            }
            let class = representatives.iter().position(|&rep| self.rank(self.pair(rep, i)) == 1);
            match class {
                Some(k) => sigma[i] = Some(k),
                None => {
                    sigma[i] = Some(representatives.len());
                    representatives.push(i);
                }
            }
        }
        let columns = representatives.iter().map(|&i| self.columns[i].clone()).collect();
        let simple = RankMatroid {
            field: self.field,
            dim: self.dim,
            columns,
        };
        (
            simple,
            LabelMap {
                sigma,
                loops,
                representatives,
            },
        )
    }
}

impl LabelMap {
    /// Image of a loop-free set under the surjection.
    pub fn image(&self, s: SupportSet) -> SupportSet {
        SupportSet::from_indices(self.representatives.len(), s.indices().filter_map(|i| self.sigma[i]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Scalar {
        Scalar::from_i64(Field::Rational, v)
    }

    fn mat(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_rows(
            Field::Rational,
            rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect(),
        )
        .unwrap()
    }

    fn labels(f: &ScrawlFamily) -> Vec<Vec<usize>> {
        f.circuits().iter().map(|c| c.labels()).collect()
    }

    fn cols(c: &[&[i64]]) -> RankMatroid {
        let dim = c[0].len();
        RankMatroid::new(Field::Rational, dim, c.iter().map(|v| v.iter().map(|&x| q(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn full_space_has_singleton_circuits() {
        let fam = minimal_supports_of_subspace(&ExactMatrix::identity(Field::Rational, 4), 20).unwrap();
        assert_eq!(labels(&fam), vec![vec![1], vec![2], vec![3], vec![4]]);
    }

    #[test]
    fn planar_point_evaluations_give_pairs() {
        let fam = minimal_supports_of_subspace(&mat(&[&[1, 0, -1], &[0, 1, -1]]), 20).unwrap();
        assert_eq!(labels(&fam), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        for i in 0..fam.len() {
            let w = fam.witness(i).unwrap();
            assert_eq!(w.vector.iter().filter(|x| !x.is_zero()).count(), 2);
        }
        assert!(verify_scrawl_axioms(&fam, 100).passed());
    }

    #[test]
    fn coplanar_configuration_circuits() {
        // alpha = 2, beta = 3
        let fam = minimal_supports_of_subspace(&mat(&[&[1, 0, 0, 0], &[0, 1, 0, 2], &[0, 0, 1, 3]]), 20).unwrap();
        assert_eq!(labels(&fam), vec![vec![1], vec![2, 3], vec![2, 4], vec![3, 4]]);
    }

    #[test]
    fn zero_subspace_has_no_circuits() {
        let fam = minimal_supports_of_subspace(&ExactMatrix::zeros(Field::Rational, 2, 3), 20).unwrap();
        assert!(fam.is_empty());
    }

    #[test]
    fn ground_cap_enforced() {
        let g = ExactMatrix::identity(Field::Rational, 5);
        assert!(matches!(
            minimal_supports_of_subspace(&g, 4),
            Err(MatroidError::GroundTooLarge { size: 5, cap: 4 })
        ));
    }

    #[test]
    fn antichain_enforced() {
        let err = ScrawlFamily::new(2, vec![SupportSet::from_labels(2, &[1]), SupportSet::from_labels(2, &[1, 2])]);
        assert!(matches!(err, Err(MatroidError::NotAntichain(..))));
        assert!(matches!(
            ScrawlFamily::new(2, vec![SupportSet::empty(2)]),
            Err(MatroidError::EmptyCircuit(_))
        ));
    }

    #[test]
    fn disjoint_circuits_pass_vacuously() {
        let fam = ScrawlFamily::new(4, vec![SupportSet::from_labels(4, &[1, 2]), SupportSet::from_labels(4, &[3, 4])]).unwrap();
        let rep = verify_scrawl_axioms(&fam, 10);
        assert!(rep.passed());
    }

    #[test]
    fn elimination_failure_is_reported() {
        // {1,2} and {1,3} share 1, but {2,3} contains no circuit
        let fam = ScrawlFamily::new(3, vec![SupportSet::from_labels(3, &[1, 2]), SupportSet::from_labels(3, &[1, 3])]).unwrap();
        let rep = verify_scrawl_axioms(&fam, 10);
        assert!(!rep.passed());
        let ce = rep.counterexample.unwrap();
        assert_eq!(ce.removed, 1);
    }

    #[test]
    fn rank_examples() {
        let m = cols(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(m.rank(SupportSet::empty(3)), 0);
        assert_eq!(m.rank(SupportSet::full(3)), 2);
        assert_eq!(m.rank(SupportSet::from_labels(3, &[1, 3])), 2);
    }

    #[test]
    fn simplicity() {
        assert!(cols(&[&[1, 0], &[0, 1], &[1, 1], &[1, 2]]).is_simple());
        assert!(!cols(&[&[1, 0], &[0, 0], &[0, 1]]).is_simple());
        assert!(!cols(&[&[1, 0], &[2, 0], &[0, 1]]).is_simple());
    }

    #[test]
    fn uniformity() {
        assert!(cols(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).is_uniform());
        assert!(!cols(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[0, 1, 1]]).is_uniform());
        assert!(cols(&[&[1, 0], &[0, 1], &[1, 1], &[1, 2], &[1, 3]]).is_uniform());
    }

    #[test]
    fn simplify_merges_parallel_and_drops_loops() {
        let m = cols(&[&[1, 0], &[2, 0], &[0, 1]]);
        let (s, map) = m.simplify();
        assert_eq!(s.ground_size(), 2);
        assert_eq!(map.sigma, vec![Some(0), Some(0), Some(1)]);
        assert!(map.loops.is_empty());

        let (s, map) = cols(&[&[0, 0], &[1, 0], &[0, 1]]).simplify();
        assert_eq!(map.loops, vec![0]);
        assert_eq!(s.ground_size(), 2);

        let simple = cols(&[&[1, 0], &[0, 1], &[1, 1]]);
        let (s, map) = simple.simplify();
        assert_eq!(s, simple);
        assert_eq!(map.sigma, vec![Some(0), Some(1), Some(2)]);
    }
}
