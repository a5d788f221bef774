use std::fmt;

use super::{Coeff, Monomial, PolynomialRing};
use crate::error::{Error, Result};

/// A multivariate polynomial. Terms are strictly descending in the ring's
/// monomial order, with no zero coefficients and no duplicate monomials.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: PolynomialRing,
    terms: Vec<(Monomial, Coeff)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: PolynomialRing) -> Self {
        Polynomial {
            ring,
            terms: Vec::new(),
        }
    }

    /// Build from arbitrary (monomial, coefficient) pairs: sorts, merges
    /// duplicates, drops zeros.
    pub fn from_terms(ring: PolynomialRing, mut terms: Vec<(Monomial, Coeff)>) -> Self {
        let ord = ring.order();
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        let field = ring.field().clone();
        let mut merged: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.len(), ring.nvars());
            match merged.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
                _ => merged.push((m, c)),
            }
        }
        merged.retain(|(_, c)| !field.is_zero(c));
        Polynomial {
            ring,
            terms: merged,
        }
    }

    pub fn ring(&self) -> &PolynomialRing {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(m, _)| m.is_one())
    }

    fn assert_same_ring(&self, other: &Polynomial) {
        assert!(self.ring == other.ring, "polynomials from different rings");
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        // merge two sorted term lists
        let ord = self.ring.order();
        let field = self.ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ord.cmp(ma, mb) {
                std::cmp::Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((mb.clone(), cb.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = field.add(ca, cb);
                    if !field.is_zero(&c) {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(other.terms[j..].iter().cloned());
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    /// Multiply by a single term. Order is multiplicative, so sortedness is
    /// preserved.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        let field = self.ring.field();
        if field.is_zero(c) {
            return Polynomial::zero(self.ring.clone());
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), field.mul(tc, c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        self.mul_term(&Monomial::one(self.ring.nvars()), c)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        let mut acc = Polynomial::zero(self.ring.clone());
        for (m, c) in &other.terms {
            acc = acc.add(&self.mul_term(m, c));
        }
        acc
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = self.ring.one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Divide every coefficient so the leading coefficient becomes 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = self.ring.field().inv(lc);
                self.scale(&inv)
            }
        }
    }
}

/// The four arithmetic modes of the checked operation surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
    ScalarMul,
}

/// Checked arithmetic: rejects operands from different rings. For
/// `ScalarMul`, `g` must be a constant polynomial.
pub fn poly_arith(f: &Polynomial, g: &Polynomial, op: PolyOp) -> Result<Polynomial> {
    if f.ring() != g.ring() {
        return Err(Error::structural("polynomials from different rings"));
    }
    match op {
        PolyOp::Add => Ok(f.add(g)),
        PolyOp::Sub => Ok(f.sub(g)),
        PolyOp::Mul => Ok(f.mul(g)),
        PolyOp::ScalarMul => {
            if !g.is_constant() {
                return Err(Error::structural("scalar operand is not a constant"));
            }
            match g.leading_term() {
                None => Ok(Polynomial::zero(f.ring().clone())),
                Some((_, c)) => Ok(f.scale(&c.clone())),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{CoefficientField, MonomialOrder};

    fn gf2_ring() -> PolynomialRing {
        PolynomialRing::new(
            CoefficientField::prime(2).unwrap(),
            vec!["x".into(), "y".into(), "z".into()],
            MonomialOrder::Grevlex,
        )
        .unwrap()
    }

    fn qq_ring() -> PolynomialRing {
        PolynomialRing::new(
            CoefficientField::rationals(),
            vec!["x".into(), "y".into(), "z".into()],
            MonomialOrder::Grevlex,
        )
        .unwrap()
    }

    #[test]
    fn char2_square_collapses() {
        let r = gf2_ring();
        let f = r.var(0).add(&r.var(1)); // x + y
        let sq = f.mul(&f);
        let expected = r.parse_poly("x^2 + y^2").unwrap();
        assert_eq!(sq, expected);
    }

    #[test]
    fn additive_identity() {
        let r = qq_ring();
        let f = r.parse_poly("2*x^2 - 3*y + 1/2").unwrap();
        assert_eq!(f.add(&r.zero()), f);
    }

    #[test]
    fn difference_of_squares_over_qq() {
        let r = qq_ring();
        let f = r.var(0).sub(&r.var(1));
        let g = r.var(0).add(&r.var(1));
        assert_eq!(f.mul(&g), r.parse_poly("x^2 - y^2").unwrap());
    }

    #[test]
    fn checked_arith_rejects_ring_mismatch() {
        let f = gf2_ring().var(0);
        let g = qq_ring().var(0);
        assert!(poly_arith(&f, &g, PolyOp::Add).is_err());
    }

    #[test]
    fn scalar_mul_requires_constant() {
        let r = qq_ring();
        let f = r.var(0);
        let two = r.parse_poly("2").unwrap();
        assert_eq!(
            poly_arith(&f, &two, PolyOp::ScalarMul).unwrap(),
            r.parse_poly("2*x").unwrap()
        );
        assert!(poly_arith(&f, &r.var(1), PolyOp::ScalarMul).is_err());
    }

    #[test]
    fn leading_term_of_product_is_product_of_leading_terms() {
        let r = qq_ring();
        let f = r.parse_poly("3*x^2*y + x + 1").unwrap();
        let g = r.parse_poly("2*y*z^2 - z").unwrap();
        let (fm, fc) = f.leading_term().unwrap();
        let (gm, gc) = g.leading_term().unwrap();
        let (pm, pc) = {
            let prod = f.mul(&g);
            let (m, c) = prod.leading_term().unwrap();
            (m.clone(), c.clone())
        };
        assert_eq!(pm, fm.mul(gm));
        assert_eq!(pc, r.field().mul(fc, gc));
    }

    #[test]
    fn zero_polynomial_has_no_terms() {
        let r = gf2_ring();
        let f = r.parse_poly("x + x").unwrap();
        assert!(f.is_zero());
        assert!(f.terms().is_empty());
    }
}

impl fmt::Display for Polynomial {
    /// Canonical grammar form: terms in descending order, ` + `/` - `
    /// separators, `*` between factors, `^` for exponents.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = field.is_negative(c);
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = if neg { field.neg(c) } else { c.clone() };
            let coeff_str = field.format(&abs);
            if m.is_one() {
                write!(f, "{coeff_str}")?;
            } else {
                if !field.is_one(&abs) {
                    write!(f, "{coeff_str}*")?;
                }
                let mut first = true;
                for (v, &e) in self.ring.var_names().iter().zip(m.exponents()) {
                    if e == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, "*")?;
                    }
                    first = false;
                    if e == 1 {
                        write!(f, "{v}")?;
                    } else {
                        write!(f, "{v}^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
