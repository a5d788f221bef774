use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::polyring::{Coeff, Monomial, MonomialOrder, Polynomial, PolynomialRing};

/// An element of a finite free module R^rank, stored as one polynomial per
/// coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeElement {
    ring: PolynomialRing,
    components: Vec<Polynomial>,
}

/// One term of a free-module element: a monomial sitting in one coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleTerm {
    pub position: usize,
    pub monomial: Monomial,
    pub coeff: Coeff,
}

impl FreeElement {
    pub fn zero(ring: PolynomialRing, rank: usize) -> Self {
        let components = (0..rank).map(|_| ring.zero()).collect();
        FreeElement { ring, components }
    }

    /// Requires at least one component (the ring is read off the first); all
    /// components must share a ring. Use [`FreeElement::zero`] for rank 0.
    pub fn from_components(components: Vec<Polynomial>) -> Result<Self> {
        let first = components
            .first()
            .ok_or_else(|| Error::structural("empty component list; use zero(ring, 0)"))?;
        let ring = first.ring().clone();
        if components.iter().any(|p| *p.ring() != ring) {
            return Err(Error::structural("components from different rings"));
        }
        Ok(FreeElement { ring, components })
    }

    /// The standard basis vector e_pos.
    pub fn unit(ring: &PolynomialRing, rank: usize, pos: usize) -> Self {
        assert!(pos < rank);
        let mut e = FreeElement::zero(ring.clone(), rank);
        e.components[pos] = ring.one();
        e
    }

    /// A rank-1 element wrapping a polynomial (ideals as the rank-1 case).
    pub fn from_poly(p: Polynomial) -> Self {
        FreeElement {
            ring: p.ring().clone(),
            components: vec![p],
        }
    }

    /// Single term c * m * e_pos.
    pub fn term(ring: &PolynomialRing, rank: usize, pos: usize, m: Monomial, c: Coeff) -> Self {
        let mut e = FreeElement::zero(ring.clone(), rank);
        e.components[pos] = Polynomial::from_terms(ring.clone(), vec![(m, c)]);
        e
    }

    pub fn ring(&self) -> &PolynomialRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|p| p.is_zero())
    }

    fn assert_compatible(&self, other: &FreeElement) {
        assert!(self.ring == other.ring, "elements from different rings");
        assert_eq!(self.rank(), other.rank(), "elements of different ranks");
    }

    pub fn add(&self, other: &FreeElement) -> FreeElement {
        self.assert_compatible(other);
        FreeElement {
            ring: self.ring.clone(),
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &FreeElement) -> FreeElement {
        self.assert_compatible(other);
        FreeElement {
            ring: self.ring.clone(),
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> FreeElement {
        FreeElement {
            ring: self.ring.clone(),
            components: self.components.iter().map(|p| p.neg()).collect(),
        }
    }

    pub fn mul_poly(&self, p: &Polynomial) -> FreeElement {
        FreeElement {
            ring: self.ring.clone(),
            components: self.components.iter().map(|c| c.mul(p)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> FreeElement {
        FreeElement {
            ring: self.ring.clone(),
            components: self.components.iter().map(|p| p.mul_term(m, c)).collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> FreeElement {
        FreeElement {
            ring: self.ring.clone(),
            components: self.components.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Leading term under a module order, or None for the zero element.
    pub fn leading_term(&self, order: &ModuleOrder) -> Option<ModuleTerm> {
        let mut best: Option<ModuleTerm> = None;
        for (pos, p) in self.components.iter().enumerate() {
            if let Some((m, c)) = p.leading_term() {
                let cand = ModuleTerm {
                    position: pos,
                    monomial: m.clone(),
                    coeff: c.clone(),
                };
                best = match best {
                    None => Some(cand),
                    Some(cur) => {
                        if order.cmp_loc(pos, m, cur.position, &cur.monomial) == Ordering::Greater {
                            Some(cand)
                        } else {
                            Some(cur)
                        }
                    }
                };
            }
        }
        best
    }

    /// Divide so the leading coefficient becomes 1.
    pub fn monic(&self, order: &ModuleOrder) -> FreeElement {
        match self.leading_term(order) {
            None => self.clone(),
            Some(lt) => self.scale(&self.ring.field().inv(&lt.coeff)),
        }
    }
}

/// Order on module terms: term-over-position (monomials compared first by
/// the base order, ties broken by smaller component index). An optional tag
/// split turns this into an elimination order in which every term in a
/// component below the split dominates every term at or above it — the
/// engine behind syzygy extraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleOrder {
    base: MonomialOrder,
    tag_split: Option<usize>,
}

impl ModuleOrder {
    pub fn term_over_position(base: MonomialOrder) -> Self {
        ModuleOrder {
            base,
            tag_split: None,
        }
    }

    pub(crate) fn elimination(base: MonomialOrder, split: usize) -> Self {
        ModuleOrder {
            base,
            tag_split: Some(split),
        }
    }

    pub fn base(&self) -> MonomialOrder {
        self.base
    }

    pub fn cmp_loc(
        &self,
        pos_a: usize,
        mon_a: &Monomial,
        pos_b: usize,
        mon_b: &Monomial,
    ) -> Ordering {
        if let Some(split) = self.tag_split {
            let block = |p: usize| usize::from(p >= split);
            // block 0 dominates block 1
            match block(pos_b).cmp(&block(pos_a)) {
                Ordering::Equal => {}
                other => return other,
            }
        }
        match self.base.cmp(mon_a, mon_b) {
            Ordering::Equal => pos_b.cmp(&pos_a), // smaller index first
            other => other,
        }
    }

    pub fn cmp_terms(&self, a: &ModuleTerm, b: &ModuleTerm) -> Ordering {
        self.cmp_loc(a.position, &a.monomial, b.position, &b.monomial)
    }
}
