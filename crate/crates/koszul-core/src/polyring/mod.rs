//! Exact multivariate polynomial arithmetic over GF(p) and over the
//! rationals, with a fixed monomial order per ring.

mod field;
mod monomial;
mod parse;
mod poly;

pub use field::{Coeff, CoefficientField, FieldKind};
pub use monomial::{monomial_cmp, Monomial, MonomialOrder};
pub use poly::{poly_arith, PolyOp, Polynomial};

use std::sync::Arc;

use crate::error::{Error, Result};

/// Safety caps for potentially runaway computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComputeLimits {
    /// Total reduction steps allowed in one Groebner/normal-form computation.
    pub max_reduction_steps: u64,
}

impl Default for ComputeLimits {
    fn default() -> Self {
        ComputeLimits {
            max_reduction_steps: 10_000_000,
        }
    }
}

#[derive(Debug)]
struct RingInner {
    field: CoefficientField,
    vars: Vec<String>,
    order: MonomialOrder,
    limits: ComputeLimits,
}

/// A polynomial ring k[x_1, ..., x_n] with a fixed monomial order. Cheap to
/// clone and share; all values are immutable.
#[derive(Clone, Debug)]
pub struct PolynomialRing {
    inner: Arc<RingInner>,
}

impl PartialEq for PolynomialRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.field == other.inner.field
                && self.inner.vars == other.inner.vars
                && self.inner.order == other.inner.order)
    }
}

impl Eq for PolynomialRing {}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolynomialRing {
    pub fn new(
        field: CoefficientField,
        vars: Vec<String>,
        order: MonomialOrder,
    ) -> Result<Self> {
        Self::with_limits(field, vars, order, ComputeLimits::default())
    }

    pub fn with_limits(
        field: CoefficientField,
        vars: Vec<String>,
        order: MonomialOrder,
        limits: ComputeLimits,
    ) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::InvalidConfig("a ring needs at least one variable".into()));
        }
        for v in &vars {
            if !is_identifier(v) {
                return Err(Error::InvalidConfig(format!(
                    "'{v}' is not a valid variable identifier"
                )));
            }
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::InvalidConfig(format!("duplicate variable '{v}'")));
            }
        }
        Ok(PolynomialRing {
            inner: Arc::new(RingInner {
                field,
                vars,
                order,
                limits,
            }),
        })
    }

    pub fn field(&self) -> &CoefficientField {
        &self.inner.field
    }

    pub fn nvars(&self) -> usize {
        self.inner.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.inner.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.inner.order
    }

    pub fn limits(&self) -> ComputeLimits {
        self.inner.limits
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self.clone())
    }

    pub fn one(&self) -> Polynomial {
        self.constant(self.field().one())
    }

    pub fn constant(&self, c: Coeff) -> Polynomial {
        Polynomial::from_terms(self.clone(), vec![(Monomial::one(self.nvars()), c)])
    }

    /// The i-th variable as a polynomial.
    pub fn var(&self, i: usize) -> Polynomial {
        assert!(i < self.nvars());
        Polynomial::from_terms(
            self.clone(),
            vec![(Monomial::var(self.nvars(), i), self.field().one())],
        )
    }

    /// Monomial with the given exponent vector and coefficient 1.
    pub fn monomial(&self, exps: Vec<u32>) -> Polynomial {
        assert_eq!(exps.len(), self.nvars());
        Polynomial::from_terms(self.clone(), vec![(Monomial::new(exps), self.field().one())])
    }

    pub fn parse_poly(&self, text: &str) -> Result<Polynomial> {
        parse::parse_poly(text, self)
    }
}
