//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector of `x_1 .. x_n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn n_vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn eval(&self, point: &[BigInt]) -> BigInt {
        self.0
            .iter()
            .zip(point)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, x)| Pow::pow(x, e))
            .product()
    }
}

impl Mul<&Monomial> for &Monomial {
    type Output = Monomial;

    fn mul(self, rhs: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => continue,
                1 => write!(f, "x{}", i + 1)?,
                _ => write!(f, "x{}^{}", i + 1, e)?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// A polynomial in `n_vars` variables. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    n_vars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero(n_vars: usize) -> Self {
        Polynomial { n_vars, terms: BTreeMap::new() }
    }

    pub fn one(n_vars: usize) -> Self {
        Self::monomial(Monomial::one(n_vars), BigInt::one())
    }

    pub fn monomial(m: Monomial, coeff: BigInt) -> Self {
        let mut p = Polynomial::zero(m.n_vars());
        p.add_term(m, coeff);
        p
    }

    /// `x_index` (0-indexed).
    pub fn var(n_vars: usize, index: usize) -> Self {
        let mut e = vec![0; n_vars];
        e[index] = 1;
        Self::monomial(Monomial(e), BigInt::one())
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Terms in descending lexicographic order of their exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn add_term(&mut self, m: Monomial, coeff: BigInt) {
        assert_eq!(m.n_vars(), self.n_vars, "monomial has the wrong variable count");
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut out = Polynomial::zero(self.n_vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma * mb, ca * cb);
            }
        }
        Ok(out)
    }

    /// Exact comparison; fails only on a variable-count mismatch.
    pub fn try_eq(&self, other: &Polynomial) -> Result<bool> {
        self.check(other)?;
        Ok(self.terms == other.terms)
    }

    pub fn eval(&self, point: &[BigInt]) -> BigInt {
        assert_eq!(point.len(), self.n_vars, "evaluation point has the wrong length");
        self.terms.iter().map(|(m, c)| c * m.eval(point)).sum()
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if self.n_vars != other.n_vars {
            return Err(Error::VariableCountMismatch { left: self.n_vars, right: other.n_vars });
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    /// Panics on a variable-count mismatch; see [`Polynomial::try_add`].
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("variable counts agree")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    /// Panics on a variable-count mismatch; see [`Polynomial::try_mul`].
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("variable counts agree")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.sign() == num_bigint::Sign::Minus;
            let abs = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let is_const = m.degree() == 0;
            if !abs.is_one() || is_const {
                write!(f, "{abs}")?;
            }
            if !is_const {
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    #[serde(rename = "N")]
    n: usize,
    terms: Vec<TermJson>,
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolynomialJson {
            n: self.n_vars,
            terms: self
                .terms()
                .map(|(m, c)| TermJson { exp: m.0.clone(), coeff: c.to_string() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PolynomialJson::deserialize(d)?;
        let mut p = Polynomial::zero(raw.n);
        for t in raw.terms {
            if t.exp.len() != raw.n {
                return Err(D::Error::custom("exponent vector length differs from N"));
            }
            let c: BigInt = t.coeff.parse().map_err(D::Error::custom)?;
            p.add_term(Monomial(t.exp), c);
        }
        Ok(p)
    }
}
