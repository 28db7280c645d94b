//! Sparse multivariate polynomials with exact coefficients.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::exact::{Field, Scalar};

/// Exponent vector `I ∈ ℕ^n`.
pub type Exponent = Vec<u32>;

/// `f = Σ a_I x^I`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    n: usize,
    field: Field,
    terms: BTreeMap<Exponent, Scalar>,
}

impl Polynomial {
    pub fn zero(field: Field, n: usize) -> Self {
        Self {
            n,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: Field, n: usize, c: Scalar) -> Self {
        Self::monomial(field, vec![0; n], c)
    }

    pub fn one(field: Field, n: usize) -> Self {
        Self::constant(field, n, Scalar::one(field))
    }

    pub fn monomial(field: Field, exp: Exponent, c: Scalar) -> Self {
        let mut p = Self::zero(field, exp.len());
        p.add_term(exp, c);
        p
    }

    /// The coordinate function `x_j` (0-based `j`).
    pub fn variable(field: Field, n: usize, j: usize) -> Self {
        let mut e = vec![0; n];
        e[j] = 1;
        Self::monomial(field, e, Scalar::one(field))
    }

    /// `Σ coeffs[k] · x^{basis[k]}`.
    pub fn from_basis(field: Field, n: usize, basis: &[Exponent], coeffs: &[Scalar]) -> Self {
        assert_eq!(basis.len(), coeffs.len(), "basis and coefficient lengths differ");
        let mut p = Self::zero(field, n);
        for (e, c) in basis.iter().zip(coeffs) {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exp: &[u32]) -> Scalar {
        self.terms.get(exp).cloned().unwrap_or_else(|| Scalar::zero(self.field))
    }

    /// Adds `c · x^exp`, dropping the term if it cancels.
    pub fn add_term(&mut self, exp: Exponent, c: Scalar) {
        assert_eq!(exp.len(), self.n, "exponent length must equal the number of variables");
        if c.is_zero() {
            return;
        }
        let merged = match self.terms.remove(&exp) {
            Some(old) => &old + &c,
            None => c,
        };
        if !merged.is_zero() {
            self.terms.insert(exp, merged);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.field, self.n);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a * c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Scalar::one(self.field))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.field, self.n);
        for (e1, a) in &self.terms {
            for (e2, b) in &other.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                out.add_term(e, a * b);
            }
        }
        out
    }

    /// Evaluates at a point of F^n.
    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.n, "point dimension must equal the number of variables");
        let mut acc = Scalar::zero(self.field);
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    term = &term * &x.pow(k);
                }
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Weighted degree `⟨I, w⟩` of an exponent.
    pub fn weighted_degree(exp: &[u32], weights: &[u32]) -> u64 {
        exp.iter().zip(weights).map(|(&i, &w)| i as u64 * w as u64).sum()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Highest total degree first, ties broken by the exponent order.
        let mut terms: Vec<(&Exponent, &Scalar)> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let text = c.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { "-" } else { "+" })?;
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(j, &p)| if p == 1 { format!("x{}", j + 1) } else { format!("x{}^{}", j + 1, p) })
                .collect();
            if vars.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude == "1" {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", magnitude, vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}
