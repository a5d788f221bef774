//! Buchberger's algorithm for submodules of finite free modules, normal
//! forms, syzygies, and membership tests. Ideals are the rank-1 case.
//!
//! Everything here is deterministic: pair selection takes the smallest lcm
//! under the module order with ties broken by generator index, and the final
//! basis is the unique reduced monic Groebner basis, sorted by descending
//! leading term.

mod free;

pub use free::{FreeElement, ModuleOrder, ModuleTerm};

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::polyring::{Polynomial, PolynomialRing};

/// Counts reduction steps against the ring's safety cap.
struct StepBudget {
    steps: u64,
    cap: u64,
}

impl StepBudget {
    fn new(ring: &PolynomialRing) -> Self {
        StepBudget {
            steps: 0,
            cap: ring.limits().max_reduction_steps,
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.cap {
            Err(Error::ResourceLimit {
                steps: self.steps,
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }
}

/// A reduced monic Groebner basis of a submodule of R^rank.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: PolynomialRing,
    rank: usize,
    order: ModuleOrder,
    elements: Vec<FreeElement>,
}

fn check_gens(ring: &PolynomialRing, rank: usize, gens: &[FreeElement]) -> Result<()> {
    for g in gens {
        if g.ring() != ring {
            return Err(Error::structural("generator from a different ring"));
        }
        if g.rank() != rank {
            return Err(Error::structural(format!(
                "generator rank {} does not match module rank {rank}",
                g.rank()
            )));
        }
    }
    Ok(())
}

/// Full normal form of v against the (monic) reducers: no term of the result
/// is divisible by any reducer's leading term in the same position.
fn reduce_full(
    v: &FreeElement,
    reducers: &[FreeElement],
    order: &ModuleOrder,
    budget: &mut StepBudget,
) -> Result<FreeElement> {
    let ring = v.ring().clone();
    let field = ring.field().clone();
    let mut work = v.clone();
    let mut result = FreeElement::zero(ring.clone(), v.rank());
    let leads: Vec<Option<ModuleTerm>> = reducers.iter().map(|g| g.leading_term(order)).collect();
    'outer: while let Some(lt) = work.leading_term(order) {
        for (g, glt) in reducers.iter().zip(&leads) {
            let Some(glt) = glt else { continue };
            if glt.position == lt.position && glt.monomial.divides(&lt.monomial) {
                budget.tick()?;
                let mfac = glt.monomial.div_into(&lt.monomial);
                let cfac = field.div(&lt.coeff, &glt.coeff);
                work = work.sub(&g.mul_term(&mfac, &cfac));
                continue 'outer;
            }
        }
        // leading term irreducible: it belongs to the normal form
        let t = FreeElement::term(&ring, v.rank(), lt.position, lt.monomial, lt.coeff);
        result = result.add(&t);
        work = work.sub(&t);
    }
    Ok(result)
}

/// S-element of two module elements whose leading terms share a position.
fn s_pair(f: &FreeElement, g: &FreeElement, order: &ModuleOrder) -> Option<FreeElement> {
    let ring = f.ring();
    let field = ring.field();
    let lf = f.leading_term(order)?;
    let lg = g.leading_term(order)?;
    if lf.position != lg.position {
        return None;
    }
    let lcm = lf.monomial.lcm(&lg.monomial);
    let f_scaled = f.mul_term(
        &lf.monomial.div_into(&lcm),
        &field.inv(&lf.coeff),
    );
    let g_scaled = g.mul_term(
        &lg.monomial.div_into(&lcm),
        &field.inv(&lg.coeff),
    );
    Some(f_scaled.sub(&g_scaled))
}

/// Buchberger's algorithm. Pair selection: smallest lcm under the module
/// order, ties by generator index pair. The output is the unique reduced
/// monic basis of the submodule generated by `gens`.
pub fn buchberger(
    ring: &PolynomialRing,
    rank: usize,
    gens: &[FreeElement],
    order: ModuleOrder,
) -> Result<GroebnerBasis> {
    check_gens(ring, rank, gens)?;
    let mut budget = StepBudget::new(ring);
    let mut basis: Vec<FreeElement> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            basis.push(g.monic(&order));
        }
    }

    // pending S-pairs; only pairs with a common leading position matter
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let enqueue = |pairs: &mut Vec<(usize, usize)>, basis: &[FreeElement], j: usize| {
        let lj = basis[j].leading_term(&order).unwrap();
        for (i, f) in basis.iter().enumerate().take(j) {
            let li = f.leading_term(&order).unwrap();
            if li.position == lj.position {
                pairs.push((i, j));
            }
        }
    };
    for j in 0..basis.len() {
        enqueue(&mut pairs, &basis, j);
    }

    while !pairs.is_empty() {
        // normal selection strategy
        let mut best = 0;
        let mut best_key: Option<(usize, crate::polyring::Monomial)> = None;
        for (idx, &(i, j)) in pairs.iter().enumerate() {
            let li = basis[i].leading_term(&order).unwrap();
            let lj = basis[j].leading_term(&order).unwrap();
            let lcm = li.monomial.lcm(&lj.monomial);
            let better = match &best_key {
                None => true,
                Some((bpos, bmon)) => {
                    match order.cmp_loc(li.position, &lcm, *bpos, bmon) {
                        Ordering::Less => true,
                        Ordering::Greater => false,
                        Ordering::Equal => (i, j) < pairs[best],
                    }
                }
            };
            if better {
                best = idx;
                best_key = Some((li.position, lcm));
            }
        }
        let (i, j) = pairs.swap_remove(best);

        let Some(s) = s_pair(&basis[i], &basis[j], &order) else {
            continue;
        };
        let r = reduce_full(&s, &basis, &order, &mut budget)?;
        if !r.is_zero() {
            basis.push(r.monic(&order));
            enqueue(&mut pairs, &basis, basis.len() - 1);
        }
    }

    let elements = inter_reduce(ring, basis, &order, &mut budget)?;
    Ok(GroebnerBasis {
        ring: ring.clone(),
        rank,
        order,
        elements,
    })
}

/// Minimalize (drop generators whose lead is divisible by another's) and
/// tail-reduce, yielding the unique reduced basis sorted by descending lead.
fn inter_reduce(
    ring: &PolynomialRing,
    basis: Vec<FreeElement>,
    order: &ModuleOrder,
    budget: &mut StepBudget,
) -> Result<Vec<FreeElement>> {
    let _ = ring;
    let mut kept: Vec<FreeElement> = Vec::new();
    'cand: for (idx, g) in basis.iter().enumerate() {
        let lg = g.leading_term(order).unwrap();
        for (jdx, h) in basis.iter().enumerate() {
            if idx == jdx {
                continue;
            }
            let lh = h.leading_term(order).unwrap();
            if lh.position == lg.position && lh.monomial.divides(&lg.monomial) {
                // equal leads: keep only the earlier element
                if lh.monomial == lg.monomial && jdx > idx {
                    continue;
                }
                continue 'cand;
            }
        }
        kept.push(g.clone());
    }
    // tail reduction against the other kept elements
    let mut reduced: Vec<FreeElement> = Vec::with_capacity(kept.len());
    for i in 0..kept.len() {
        let others: Vec<FreeElement> = kept
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, e)| e.clone())
            .collect();
        let r = reduce_full(&kept[i], &others, order, budget)?;
        debug_assert!(!r.is_zero());
        reduced.push(r.monic(order));
    }
    reduced.sort_by(|a, b| {
        let la = a.leading_term(order).unwrap();
        let lb = b.leading_term(order).unwrap();
        order.cmp_terms(&lb, &la)
    });
    Ok(reduced)
}

impl GroebnerBasis {
    pub fn ring(&self) -> &PolynomialRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn elements(&self) -> &[FreeElement] {
        &self.elements
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    fn check_element(&self, v: &FreeElement) -> Result<()> {
        if v.ring() != &self.ring {
            return Err(Error::structural("element from a different ring"));
        }
        if v.rank() != self.rank {
            return Err(Error::structural(format!(
                "element rank {} does not match basis rank {}",
                v.rank(),
                self.rank
            )));
        }
        Ok(())
    }

    /// The unique reduced normal form of v modulo this basis. v minus the
    /// result lies in the submodule; no term of the result is divisible by a
    /// basis leading term in the same position.
    pub fn normal_form(&self, v: &FreeElement) -> Result<FreeElement> {
        self.check_element(v)?;
        let mut budget = StepBudget::new(&self.ring);
        reduce_full(v, &self.elements, &self.order, &mut budget)
    }

    pub fn reduces_to_zero(&self, v: &FreeElement) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }

    /// Direct check of the Buchberger criterion: every S-element of basis
    /// members with a common leading position reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> Result<bool> {
        let mut budget = StepBudget::new(&self.ring);
        for i in 0..self.elements.len() {
            for j in (i + 1)..self.elements.len() {
                if let Some(s) = s_pair(&self.elements[i], &self.elements[j], &self.order) {
                    let r = reduce_full(&s, &self.elements, &self.order, &mut budget)?;
                    if !r.is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Reduced form check: monic generators, and no term of one generator is
    /// divisible by the leading term of another in the same position.
    pub fn is_reduced(&self) -> bool {
        for (i, g) in self.elements.iter().enumerate() {
            match g.leading_term(&self.order) {
                None => return false,
                Some(lt) => {
                    if !self.ring.field().is_one(&lt.coeff) {
                        return false;
                    }
                }
            }
            for (j, h) in self.elements.iter().enumerate() {
                if i == j {
                    continue;
                }
                let lh = h.leading_term(&self.order).unwrap();
                for (pos, p) in g.components().iter().enumerate() {
                    if pos != lh.position {
                        continue;
                    }
                    for (m, _) in p.terms() {
                        if lh.monomial.divides(m) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Generators of the full syzygy module of `gens` (elements of R^rank):
/// every output s satisfies sum_i s_i * gens_i = 0, and the outputs generate
/// all such vectors.
///
/// Computed by the tag-component elimination: run Buchberger on the graph
/// elements (g_i, e_i) in R^(rank+m) under an order in which the original
/// block dominates the tags; basis members with vanishing original block
/// carry the syzygies in their tag block.
pub fn syzygies(
    ring: &PolynomialRing,
    rank: usize,
    gens: &[FreeElement],
) -> Result<Vec<FreeElement>> {
    check_gens(ring, rank, gens)?;
    let m = gens.len();
    if m == 0 {
        return Ok(Vec::new());
    }
    let big_rank = rank + m;
    let mut cols = Vec::with_capacity(m);
    for (i, g) in gens.iter().enumerate() {
        let mut comps: Vec<Polynomial> = g.components().to_vec();
        comps.extend((0..m).map(|j| if j == i { ring.one() } else { ring.zero() }));
        cols.push(FreeElement::from_components(comps)?);
    }
    let order = ModuleOrder::elimination(ring.order(), rank);
    let gb = buchberger(ring, big_rank, &cols, order)?;
    let mut out = Vec::new();
    for e in gb.elements() {
        if e.components()[..rank].iter().all(|p| p.is_zero()) {
            out.push(FreeElement::from_components(
                e.components()[rank..].to_vec(),
            )?);
        }
    }
    Ok(out)
}

/// True iff v lies in the submodule generated by `gens`.
pub fn submodule_membership(v: &FreeElement, gens: &[FreeElement]) -> Result<bool> {
    let ring = v.ring().clone();
    let order = ModuleOrder::term_over_position(ring.order());
    let gb = buchberger(&ring, v.rank(), gens, order)?;
    gb.reduces_to_zero(v)
}
