//! The idempotent semiring N̄^r: extended naturals under coordinatewise
//! `min` (⊕) and `+` (⊙), supports, and homogeneous decomposition.

use std::cmp::Ordering;
use std::fmt;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TropicalError {
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("ground set of size {0} exceeds the 64-label limit")]
    GroundTooLarge(usize),
    #[error("cannot parse value vector: {0}")]
    Parse(String),
}

/// An element of N̄ = ℕ ∪ {∞}. `Fin(n) < Inf` for every `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtNat {
    Fin(u64),
    Inf,
}

impl ExtNat {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtNat::Fin(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtNat::Fin(v) => Some(v),
            ExtNat::Inf => None,
        }
    }

    pub fn min(self, other: Self) -> Self {
        std::cmp::min(self, other)
    }

    /// Addition in N̄, with n + ∞ = ∞.
    pub fn plus(self, other: Self) -> Self {
        match (self, other) {
            (ExtNat::Fin(a), ExtNat::Fin(b)) => ExtNat::Fin(a.checked_add(b).expect("degree overflow")),
            _ => ExtNat::Inf,
        }
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Fin(v) => write!(f, "{v}"),
            ExtNat::Inf => write!(f, "inf"),
        }
    }
}

impl Serialize for ExtNat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtNat::Fin(v) => serializer.serialize_u64(*v),
            ExtNat::Inf => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtNat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct ExtNatVisitor;
        impl Visitor<'_> for ExtNatVisitor {
            type Value = ExtNat;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "a natural number or \"inf\"")
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<ExtNat, E> {
                Ok(ExtNat::Fin(v))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<ExtNat, E> {
                u64::try_from(v)
                    .map(ExtNat::Fin)
                    .map_err(|_| E::custom(format!("negative entry {v}")))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<ExtNat, E> {
                parse_ext_nat(v).ok_or_else(|| E::custom(format!("bad entry {v:?}")))
            }
        }
        deserializer.deserialize_any(ExtNatVisitor)
    }
}

fn parse_ext_nat(text: &str) -> Option<ExtNat> {
    let t = text.trim().trim_matches('"');
    match t {
        "inf" | "Inf" | "INF" | "∞" => Some(ExtNat::Inf),
        _ => t.parse().ok().map(ExtNat::Fin),
    }
}

/// An element of N̄^r.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ValVector(Vec<ExtNat>);

impl ValVector {
    pub fn new(coords: Vec<ExtNat>) -> Self {
        Self(coords)
    }

    pub fn from_finite(coords: &[u64]) -> Self {
        Self(coords.iter().map(|&v| ExtNat::Fin(v)).collect())
    }

    /// The ⊙-identity 𝟎.
    pub fn zero(r: usize) -> Self {
        Self(vec![ExtNat::Fin(0); r])
    }

    /// The ⊕-identity ∞.
    pub fn infinity(r: usize) -> Self {
        Self(vec![ExtNat::Inf; r])
    }

    /// The constant vector (d, …, d).
    pub fn constant(r: usize, d: u64) -> Self {
        Self(vec![ExtNat::Fin(d); r])
    }

    /// `d · s`: the homogeneous element with value `d` on `s` and ∞ elsewhere.
    pub fn homogeneous(d: u64, s: SupportSet) -> Self {
        Self(
            (0..s.ground())
                .map(|i| if s.contains(i) { ExtNat::Fin(d) } else { ExtNat::Inf })
                .collect(),
        )
    }

    /// Parses `"[1, 2, inf]"` or the display form `"(1,2,inf)"`; brackets are
    /// optional and `inf` may be quoted.
    pub fn parse(text: &str) -> Result<Self, TropicalError> {
        let body = text.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
        if body.trim().is_empty() {
            return Ok(Self(Vec::new()));
        }
        body.split(',')
            .map(|tok| parse_ext_nat(tok).ok_or_else(|| TropicalError::Parse(format!("bad entry {:?}", tok.trim()))))
            .collect::<Result<Vec<_>, _>>()
            .map(Self)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[ExtNat] {
        &self.0
    }

    pub fn get(&self, i: usize) -> ExtNat {
        self.0[i]
    }

    pub fn set(&mut self, i: usize, v: ExtNat) {
        self.0[i] = v;
    }

    pub fn is_infinity(&self) -> bool {
        self.0.iter().all(|c| !c.is_finite())
    }

    /// Largest finite coordinate, if any.
    pub fn max_finite(&self) -> Option<u64> {
        self.0.iter().filter_map(|c| c.finite()).max()
    }

    fn check_len(&self, other: &Self) -> Result<(), TropicalError> {
        if self.len() != other.len() {
            return Err(TropicalError::LengthMismatch(self.len(), other.len()));
        }
        Ok(())
    }

    /// Coordinatewise minimum.
    pub fn oplus(&self, other: &Self) -> Result<Self, TropicalError> {
        self.check_len(other)?;
        Ok(Self(self.0.iter().zip(&other.0).map(|(a, b)| (*a).min(*b)).collect()))
    }

    /// Coordinatewise sum in N̄.
    pub fn odot(&self, other: &Self) -> Result<Self, TropicalError> {
        self.check_len(other)?;
        Ok(Self(self.0.iter().zip(&other.0).map(|(a, b)| a.plus(*b)).collect()))
    }

    /// Idempotent order: `a ≤ b` iff `a ⊕ b = a`. Checked against the
    /// coordinatewise characterization.
    pub fn leq(&self, other: &Self) -> Result<bool, TropicalError> {
        let via_sum = self.oplus(other)? == *self;
        let via_coords = self.0.iter().zip(&other.0).all(|(a, b)| a <= b);
        debug_assert_eq!(via_sum, via_coords);
        Ok(via_sum)
    }

    /// `{i : a_i ≠ ∞}`.
    pub fn support(&self) -> SupportSet {
        SupportSet::from_indices(self.len(), self.0.iter().enumerate().filter(|(_, c)| c.is_finite()).map(|(i, _)| i))
    }

    /// Splits `a` into `(d, {i : a_i = d})` for each distinct finite value,
    /// in increasing `d`.
    pub fn homogeneous_decomposition(&self) -> Vec<(u64, SupportSet)> {
        let mut degrees: Vec<u64> = self.0.iter().filter_map(|c| c.finite()).collect();
        degrees.sort_unstable();
        degrees.dedup();
        degrees
            .into_iter()
            .map(|d| {
                let part = SupportSet::from_indices(
                    self.len(),
                    self.0.iter().enumerate().filter(|(_, c)| **c == ExtNat::Fin(d)).map(|(i, _)| i),
                );
                (d, part)
            })
            .collect()
    }

    /// Inverse of [`homogeneous_decomposition`](Self::homogeneous_decomposition).
    pub fn from_decomposition(r: usize, parts: &[(u64, SupportSet)]) -> Self {
        parts.iter().fold(Self::infinity(r), |acc, (d, s)| {
            acc.oplus(&Self::homogeneous(*d, *s)).expect("same length")
        })
    }

    /// Sum of finite coordinates.
    pub fn finite_sum(&self) -> u64 {
        self.0.iter().filter_map(|c| c.finite()).sum()
    }
}

impl fmt::Display for ValVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A subset of the label set, stored as a bit mask over `ground` labels.
/// Labels are 0-based internally and 1-based in every rendered form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SupportSet {
    bits: u64,
    ground: usize,
}

impl SupportSet {
    pub const MAX_GROUND: usize = 64;

    pub fn empty(ground: usize) -> Self {
        assert!(ground <= Self::MAX_GROUND, "ground set too large");
        Self { bits: 0, ground }
    }

    pub fn full(ground: usize) -> Self {
        assert!(ground <= Self::MAX_GROUND, "ground set too large");
        let bits = if ground == 64 { u64::MAX } else { (1u64 << ground) - 1 };
        Self { bits, ground }
    }

    pub fn from_bits(ground: usize, bits: u64) -> Self {
        let full = Self::full(ground);
        assert_eq!(bits & !full.bits, 0, "labels outside the ground set");
        Self { bits, ground }
    }

    pub fn from_indices(ground: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(ground);
        for i in idx {
            s.insert(i);
        }
        s
    }

    /// From 1-based labels, as written in reports and examples.
    pub fn from_labels(ground: usize, labels: &[usize]) -> Self {
        Self::from_indices(ground, labels.iter().map(|l| l - 1))
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.ground && self.bits >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.ground, "label {i} outside ground set of size {}", self.ground);
        self.bits |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.bits &= !(1 << i);
    }

    pub fn union(&self, other: &Self) -> Self {
        Self { bits: self.bits | other.bits, ground: self.ground }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self { bits: self.bits & other.bits, ground: self.ground }
    }

    pub fn difference(&self, other: &Self) -> Self {
        Self { bits: self.bits & !other.bits, ground: self.ground }
    }

    pub fn complement(&self) -> Self {
        Self::full(self.ground).difference(self)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.ground).filter(move |&i| self.contains(i))
    }

    /// 1-based labels in increasing order.
    pub fn labels(&self) -> Vec<usize> {
        self.indices().map(|i| i + 1).collect()
    }

    /// Indicator vector in B^r ⊂ N̄^r (0 on the set, ∞ off it).
    pub fn indicator(&self) -> ValVector {
        ValVector::homogeneous(0, *self)
    }

    /// Lexicographic comparison of sorted label lists, after cardinality.
    pub fn cmp_card_lex(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.labels().cmp(&other.labels()))
    }
}

impl Ord for SupportSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ground.cmp(&other.ground).then_with(|| self.labels().cmp(&other.labels()))
    }
}

impl PartialOrd for SupportSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SupportSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.labels().iter().map(|l| l.to_string()).collect();
        write!(f, "{{{}}}", labels.join(","))
    }
}

impl Serialize for SupportSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.labels().serialize(serializer)
    }
}

/// All subsets of `[ground]` of the given cardinality, in lexicographic
/// order of their sorted label lists.
pub fn subsets_of_size(ground: usize, k: usize) -> Vec<SupportSet> {
    let mut out = Vec::new();
    if k > ground {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(SupportSet::from_indices(ground, idx.iter().copied()));
        let Some(pos) = (0..k).rev().find(|&p| idx[p] < ground - k + p) else {
            break;
        };
        idx[pos] += 1;
        for q in pos + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
    out
}
