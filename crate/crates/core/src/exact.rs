//! Exact scalars (rationals and prime-field residues) and dense exact linear
//! algebra.
//!
//! Rank and determinant run fraction-free (Bareiss) elimination: rational
//! matrices are first scaled row by row to integer matrices, so every
//! intermediate entry is an integer minor of the scaled input and each
//! division is exact. Prime-field matrices go through the same routine with
//! modular inverses standing in for exact division.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix shape mismatch: expected {expected} entries, found {found}")]
    Shape { expected: usize, found: usize },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
}

/// The coefficient field of an arrangement: ℚ or F_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// Builds F_p after checking that `p` is prime.
    pub fn prime(p: u64) -> Result<Self, AlgebraError> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(AlgebraError::NotPrime(p))
        }
    }

    /// Number of elements, `None` for ℚ.
    pub fn cardinality(&self) -> Option<u64> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some(*p),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of ℚ (always in lowest terms, positive denominator) or of F_p
/// (always reduced to `[0, p)`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u64, p: u64 },
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

fn reduce_bigint(v: &BigInt, p: u64) -> u64 {
    let m = v.mod_floor(&BigInt::from(p));
    m.to_u64().expect("residue fits in u64")
}

impl Scalar {
    pub fn zero(field: Field) -> Self {
        Self::from_i64(field, 0)
    }

    pub fn one(field: Field) -> Self {
        Self::from_i64(field, 1)
    }

    pub fn from_i64(field: Field, v: i64) -> Self {
        match field {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Prime {
                value: reduce_bigint(&BigInt::from(v), p),
                p,
            },
        }
    }

    pub fn from_bigint(field: Field, v: BigInt) -> Self {
        match field {
            Field::Rational => Scalar::Rational(BigRational::from_integer(v)),
            Field::Prime(p) => Scalar::Prime {
                value: reduce_bigint(&v, p),
                p,
            },
        }
    }

    /// `num / den` in the given field.
    pub fn from_ratio(field: Field, num: BigInt, den: BigInt) -> Result<Self, AlgebraError> {
        if Zero::is_zero(&den) {
            return Err(AlgebraError::DivisionByZero);
        }
        match field {
            Field::Rational => Ok(Scalar::Rational(BigRational::new(num, den))),
            Field::Prime(_) => Scalar::from_bigint(field, num)
                .div(&Scalar::from_bigint(field, den))
                .ok_or(AlgebraError::DivisionByZero),
        }
    }

    /// Parses an integer or a `"p/q"` string.
    pub fn parse(field: Field, text: &str) -> Result<Self, AlgebraError> {
        let text = text.trim();
        let bad = || AlgebraError::Parse(text.to_string());
        match text.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                Scalar::from_ratio(field, n, d)
            }
            None => {
                let n: BigInt = text.parse().map_err(|_| bad())?;
                Ok(Scalar::from_bigint(field, n))
            }
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Prime { value, p } => Scalar::Prime {
                value: mod_pow(*value, p - 2, *p),
                p: *p,
            },
        })
    }

    /// Exact quotient, `None` when dividing by zero.
    pub fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|inv| self * &inv)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Scalar::one(self.field());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    fn check_same_field(&self, rhs: &Self) {
        if self.field() != rhs.field() {
            panic!("field mismatch: {} vs {}", self.field(), rhs.field());
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

// The arithmetic operators panic on mixed fields; callers that accept
// user-assembled data check fields up front (see `ExactMatrix::check_field`).
impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.check_same_field(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { value: a, p }, Scalar::Prime { value: b, .. }) => Scalar::Prime {
                value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                p: *p,
            },
            _ => unreachable!(),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.check_same_field(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { value: a, p }, Scalar::Prime { value: b, .. }) => Scalar::Prime {
                value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                p: *p,
            },
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { value, p } => Scalar::Prime {
                value: (p - value) % p,
                p: *p,
            },
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Dense row-major matrix of scalars over a single field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    field: Field,
    entries: Vec<Scalar>,
}

impl ExactMatrix {
    /// Builds a matrix from row-major entries. Mixed fields are accepted here
    /// and rejected by the algebraic operations.
    pub fn new(field: Field, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self, AlgebraError> {
        if entries.len() != rows * cols {
            return Err(AlgebraError::Shape {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            field,
            entries,
        })
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self, AlgebraError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(AlgebraError::Shape {
                    expected: ncols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Self::new(field, nrows, ncols, entries)
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            field,
            entries: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one(field));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            field: self.field,
            entries,
        }
    }

    /// Submatrix keeping the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            for &j in cols {
                entries.push(self.get(i, j).clone());
            }
        }
        Self {
            rows: self.rows,
            cols: cols.len(),
            field: self.field,
            entries,
        }
    }

    /// Submatrix keeping the listed rows, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * self.cols);
        for &i in rows {
            entries.extend_from_slice(self.row(i));
        }
        Self {
            rows: rows.len(),
            cols: self.cols,
            field: self.field,
            entries,
        }
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, x: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.cols, "vector length must equal column count");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(Scalar::zero(self.field), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    /// Errors with `FieldMismatch` if any entry lives outside the matrix field.
    pub fn check_field(&self) -> Result<(), AlgebraError> {
        for e in &self.entries {
            if e.field() != self.field {
                return Err(AlgebraError::FieldMismatch(self.field, e.field()));
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> Result<usize, AlgebraError> {
        self.check_field()?;
        Ok(self.echelon().rank())
    }

    pub fn determinant(&self) -> Result<Scalar, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        self.check_field()?;
        if self.rows == 0 {
            return Ok(Scalar::one(self.field));
        }
        Ok(self.echelon().determinant(self.field))
    }

    /// Basis of `{x : Mx = 0}`. Each vector is normalized (primitive integer
    /// vector with positive leading entry over ℚ, leading entry 1 over F_p)
    /// and checked against `M` before being returned.
    pub fn kernel_basis(&self) -> Result<Vec<Vec<Scalar>>, AlgebraError> {
        self.check_field()?;
        let ech = self.echelon();
        let rows = ech.scalar_rows(self.field);
        let pivots = ech.pivots();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut x = vec![Scalar::zero(self.field); self.cols];
            x[free] = Scalar::one(self.field);
            for (k, &pc) in pivots.iter().enumerate().rev() {
                let row = &rows[k];
                let mut acc = Scalar::zero(self.field);
                for j in pc + 1..self.cols {
                    if !row[j].is_zero() && !x[j].is_zero() {
                        acc = &acc + &(&row[j] * &x[j]);
                    }
                }
                x[pc] = (-&acc).div(&row[pc]).expect("pivot is nonzero");
            }
            let x = normalize_vector(x);
            assert!(
                self.mul_vec(&x).iter().all(Scalar::is_zero),
                "kernel vector fails Mx = 0"
            );
            basis.push(x);
        }
        Ok(basis)
    }

    fn echelon(&self) -> Echelon {
        match self.field {
            Field::Rational => {
                let (rows, scale) = integer_rows(self);
                let mut rows = rows;
                let info = bareiss(&mut rows, self.cols);
                Echelon::Integer { rows, info, scale }
            }
            Field::Prime(p) => {
                let mut rows: Vec<Vec<ModP>> = (0..self.rows)
                    .map(|i| {
                        self.row(i)
                            .iter()
                            .map(|s| match s {
                                Scalar::Prime { value, .. } => ModP { v: *value, p },
                                Scalar::Rational(_) => unreachable!("field checked"),
                            })
                            .collect()
                    })
                    .collect();
                let info = bareiss(&mut rows, self.cols);
                Echelon::Modular { rows, info }
            }
        }
    }
}

/// Scales a rational vector to a primitive integer vector whose first
/// nonzero entry is positive; over F_p makes the first nonzero entry 1.
pub fn normalize_vector(x: Vec<Scalar>) -> Vec<Scalar> {
    let Some(lead) = x.iter().find(|s| !s.is_zero()).cloned() else {
        return x;
    };
    match lead {
        Scalar::Rational(_) => {
            let mut lcm = BigInt::one();
            for s in &x {
                if let Scalar::Rational(q) = s {
                    lcm = lcm.lcm(q.denom());
                }
            }
            let ints: Vec<BigInt> = x
                .iter()
                .map(|s| match s {
                    Scalar::Rational(q) => (q * BigRational::from_integer(lcm.clone())).to_integer(),
                    _ => unreachable!(),
                })
                .collect();
            let mut g = BigInt::zero();
            for v in &ints {
                g = g.gcd(v);
            }
            let lead_sign = ints.iter().find(|v| !Zero::is_zero(*v)).map_or(Ordering::Greater, |v| v.sign_cmp());
            if lead_sign == Ordering::Less {
                g = -g;
            }
            ints.into_iter()
                .map(|v| Scalar::Rational(BigRational::from_integer(v / &g)))
                .collect()
        }
        Scalar::Prime { .. } => {
            let inv = lead.inv().expect("nonzero");
            x.iter().map(|s| s * &inv).collect()
        }
    }
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp(&self) -> Ordering {
        if self.is_negative() {
            Ordering::Less
        } else if Zero::is_zero(self) {
            Ordering::Equal
        } else {
            Ordering::Greater
        }
    }
}

/// Clears denominators row by row. Returns the integer rows and the product
/// of the row multipliers.
fn integer_rows(m: &ExactMatrix) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut scale = BigInt::one();
    let rows = (0..m.rows)
        .map(|i| {
            let row = m.row(i);
            let mut lcm = BigInt::one();
            for s in row {
                if let Scalar::Rational(q) = s {
                    lcm = lcm.lcm(q.denom());
                }
            }
            scale *= &lcm;
            row.iter()
                .map(|s| match s {
                    Scalar::Rational(q) => q.numer() * (&lcm / q.denom()),
                    Scalar::Prime { .. } => unreachable!("field checked"),
                })
                .collect()
        })
        .collect();
    (rows, scale)
}

/// Ring operations needed by fraction-free elimination.
trait EliminationRing: Clone {
    fn one_like(&self) -> Self;
    fn vanishes(&self) -> bool;
    fn mul(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    /// Division known to be exact.
    fn exact_div(&self, rhs: &Self) -> Self;
}

impl EliminationRing for BigInt {
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        debug_assert!(Zero::is_zero(&(self % rhs)), "inexact Bareiss division");
        self / rhs
    }
}

#[derive(Debug, Clone, Copy)]
struct ModP {
    v: u64,
    p: u64,
}

impl EliminationRing for ModP {
    fn one_like(&self) -> Self {
        ModP { v: 1 % self.p, p: self.p }
    }
    fn vanishes(&self) -> bool {
        self.v == 0
    }
    fn mul(&self, rhs: &Self) -> Self {
        ModP {
            v: ((self.v as u128 * rhs.v as u128) % self.p as u128) as u64,
            p: self.p,
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        ModP {
            v: (self.v + self.p - rhs.v) % self.p,
            p: self.p,
        }
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        self.mul(&ModP {
            v: mod_pow(rhs.v, self.p - 2, self.p),
            p: self.p,
        })
    }
}

struct BareissInfo {
    pivots: Vec<usize>,
    swaps: usize,
}

/// In-place fraction-free row echelon form. The pivot of each column is the
/// first nonzero entry at or below the current row.
fn bareiss<R: EliminationRing>(a: &mut [Vec<R>], cols: usize) -> BareissInfo {
    let nrows = a.len();
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut row = 0;
    let Some(mut prev) = a.first().and_then(|r| r.first()).map(R::one_like) else {
        return BareissInfo { pivots, swaps };
    };
    for col in 0..cols {
        if row == nrows {
            break;
        }
        let Some(pr) = (row..nrows).find(|&i| !a[i][col].vanishes()) else {
            continue;
        };
        if pr != row {
            a.swap(pr, row);
            swaps += 1;
        }
        let (top, rest) = a.split_at_mut(row + 1);
        let pivot_row = &top[row];
        for r in rest.iter_mut() {
            let factor = r[col].clone();
            for j in col + 1..cols {
                let v = pivot_row[col].mul(&r[j]).sub(&factor.mul(&pivot_row[j]));
                r[j] = v.exact_div(&prev);
            }
            r[col] = factor.sub(&factor);
        }
        prev = pivot_row[col].clone();
        pivots.push(col);
        row += 1;
    }
    BareissInfo { pivots, swaps }
}

enum Echelon {
    Integer {
        rows: Vec<Vec<BigInt>>,
        info: BareissInfo,
        scale: BigInt,
    },
    Modular {
        rows: Vec<Vec<ModP>>,
        info: BareissInfo,
    },
}

impl Echelon {
    fn info(&self) -> &BareissInfo {
        match self {
            Echelon::Integer { info, .. } | Echelon::Modular { info, .. } => info,
        }
    }

    fn rank(&self) -> usize {
        self.info().pivots.len()
    }

    fn pivots(&self) -> &[usize] {
        &self.info().pivots
    }

    fn determinant(&self, field: Field) -> Scalar {
        let info = self.info();
        let n = match self {
            Echelon::Integer { rows, .. } => rows.len(),
            Echelon::Modular { rows, .. } => rows.len(),
        };
        if info.pivots.len() < n {
            return Scalar::zero(field);
        }
        let sign = if info.swaps.is_multiple_of(2) { 1 } else { -1 };
        match self {
            Echelon::Integer { rows, scale, .. } => {
                let last = rows[n - 1][n - 1].clone() * sign;
                Scalar::Rational(BigRational::new(last, scale.clone()))
            }
            Echelon::Modular { rows, .. } => {
                let last = Scalar::Prime {
                    value: rows[n - 1][n - 1].v,
                    p: rows[n - 1][n - 1].p,
                };
                if sign < 0 {
                    -last
                } else {
                    last
                }
            }
        }
    }

    /// Nonzero echelon rows as field scalars.
    fn scalar_rows(&self, field: Field) -> Vec<Vec<Scalar>> {
        let rank = self.rank();
        match self {
            Echelon::Integer { rows, .. } => rows[..rank]
                .iter()
                .map(|r| r.iter().map(|v| Scalar::from_bigint(field, v.clone())).collect())
                .collect(),
            Echelon::Modular { rows, .. } => rows[..rank]
                .iter()
                .map(|r| r.iter().map(|m| Scalar::Prime { value: m.v, p: m.p }).collect())
                .collect(),
        }
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

    fn vandermonde(nodes: &[i64], cols: usize) -> ExactMatrix {
        let rows: Vec<Vec<i64>> = nodes
            .iter()
            .map(|&a| (0..cols as u32).map(|k| a.pow(k)).collect())
            .collect();
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        mat(&refs)
    }

    #[test]
    fn identity_rank_and_det() {
        let id = ExactMatrix::identity(Field::Rational, 3);
        assert_eq!(id.rank().unwrap(), 3);
        assert_eq!(id.determinant().unwrap(), q(1));
        assert!(ExactMatrix::identity(Field::Rational, 2).kernel_basis().unwrap().is_empty());
    }

    #[test]
    fn zero_matrix_rank() {
        assert_eq!(ExactMatrix::zeros(Field::Rational, 2, 5).rank().unwrap(), 0);
    }

    #[test]
    fn diagonal_determinant() {
        assert_eq!(mat(&[&[2, 0], &[0, 3]]).determinant().unwrap(), q(6));
    }

    #[test]
    fn vandermonde_rank_and_det() {
        let v = vandermonde(&[1, 2, 3], 3);
        assert_eq!(v.rank().unwrap(), 3);
        // product of node differences (2-1)(3-1)(3-2)
        let expected: i64 = [(1, 2), (1, 3), (2, 3)].iter().map(|(a, b)| b - a).product();
        assert_eq!(v.determinant().unwrap(), q(expected));
    }

    #[test]
    fn kernel_of_sum_row() {
        let k = mat(&[&[1, 1]]).kernel_basis().unwrap();
        assert_eq!(k, vec![vec![q(1), q(-1)]]);
    }

    #[test]
    fn vandermonde_two_by_three_kernel() {
        let v = vandermonde(&[1, 2], 3);
        let k = v.kernel_basis().unwrap();
        assert_eq!(k.len(), 1);
        // solved by hand: x0 + x1 + x2 = 0, x0 + 2x1 + 4x2 = 0 -> (2, -3, 1)
        assert_eq!(k[0], vec![q(2), q(-3), q(1)]);
    }

    #[test]
    fn mixed_fields_rejected() {
        let m = ExactMatrix::new(
            Field::Rational,
            1,
            2,
            vec![q(1), Scalar::from_i64(Field::Prime(7), 1)],
        )
        .unwrap();
        assert!(matches!(m.rank(), Err(AlgebraError::FieldMismatch(..))));
        assert!(matches!(m.kernel_basis(), Err(AlgebraError::FieldMismatch(..))));
    }

    #[test]
    fn non_square_determinant_errors() {
        assert!(matches!(
            mat(&[&[1, 2, 3]]).determinant(),
            Err(AlgebraError::NotSquare { .. })
        ));
    }

    #[test]
    fn rational_entries_determinant() {
        let half = Scalar::parse(Field::Rational, "1/2").unwrap();
        let third = Scalar::parse(Field::Rational, "-1/3").unwrap();
        let m = ExactMatrix::from_rows(Field::Rational, vec![vec![half.clone(), q(1)], vec![third.clone(), q(2)]]).unwrap();
        // 1/2*2 - 1*(-1/3) = 4/3
        assert_eq!(m.determinant().unwrap(), Scalar::parse(Field::Rational, "4/3").unwrap());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        let a = Scalar::from_i64(f, -1);
        assert_eq!(a, Scalar::from_i64(f, 6));
        assert_eq!(Scalar::parse(f, "1/3").unwrap(), Scalar::from_i64(f, 5));
        // rows (1,1),(1,8≡1) are dependent mod 7
        let m = ExactMatrix::from_rows(
            f,
            vec![
                vec![Scalar::from_i64(f, 1), Scalar::from_i64(f, 1)],
                vec![Scalar::from_i64(f, 1), Scalar::from_i64(f, 8)],
            ],
        )
        .unwrap();
        assert_eq!(m.rank().unwrap(), 1);
        assert_eq!(m.determinant().unwrap(), Scalar::zero(f));
        assert!(Field::prime(9).is_err());
    }

    #[test]
    fn prime_field_determinant_sign() {
        let f = Field::Prime(11);
        let s = |v| Scalar::from_i64(f, v);
        let m = ExactMatrix::from_rows(f, vec![vec![s(0), s(1)], vec![s(1), s(0)]]).unwrap();
        assert_eq!(m.determinant().unwrap(), s(-1));
    }
}
