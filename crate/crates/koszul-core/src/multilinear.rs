//! Right-exact functor presentations: tensor products, exterior powers, and
//! symmetric powers of presented modules.
//!
//! Basis indexing is fixed once and everything downstream depends on it:
//!
//! * tensor cover basis: pairs (i, j), linearized row-major as
//!   `i * rank(second factor) + j`;
//! * wedge cover basis: strictly increasing tuples, enumerated
//!   lexicographically;
//! * symmetric cover basis: non-decreasing tuples, enumerated
//!   lexicographically.
//!
//! For M presented by F1 -> F0, the power presentations are the standard
//! right-exact ones: relations are the expansions of (relation column) wedge
//! or times an (n-1)-fold basis monomial of the cover, with alternating
//! signs for wedges (repeated indices dropped, tuples sorted carrying the
//! sign) and no signs for symmetric products.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::fpmod::PresentedModule;
use crate::groebner::FreeElement;
use crate::polyring::{Polynomial, PolynomialRing};

/// All strictly increasing n-tuples over 0..rank, in lexicographic order.
pub fn wedge_tuples(rank: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut tuple = Vec::new();
    fn rec(out: &mut Vec<Vec<usize>>, tuple: &mut Vec<usize>, start: usize, rank: usize, n: usize) {
        if tuple.len() == n {
            out.push(tuple.clone());
            return;
        }
        for i in start..rank {
            tuple.push(i);
            rec(out, tuple, i + 1, rank, n);
            tuple.pop();
        }
    }
    rec(&mut out, &mut tuple, 0, rank, n);
    out
}

/// All non-decreasing n-tuples over 0..rank, in lexicographic order.
pub fn sym_tuples(rank: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut tuple = Vec::new();
    fn rec(out: &mut Vec<Vec<usize>>, tuple: &mut Vec<usize>, start: usize, rank: usize, n: usize) {
        if tuple.len() == n {
            out.push(tuple.clone());
            return;
        }
        for i in start..rank {
            tuple.push(i);
            rec(out, tuple, i, rank, n);
            tuple.pop();
        }
    }
    rec(&mut out, &mut tuple, 0, rank, n);
    out
}

/// Row-major position of (i, j) in the tensor cover basis.
pub fn tensor_position(i: usize, j: usize, second_rank: usize) -> usize {
    i * second_rank + j
}

/// Insert index i into a strictly increasing tuple, returning the sorted
/// tuple and the sign picked up by moving e_i from the front into place.
/// None when i already occurs (the wedge vanishes).
pub fn wedge_insert(tuple: &[usize], i: usize) -> Option<(Vec<usize>, i32)> {
    if tuple.contains(&i) {
        return None;
    }
    let smaller = tuple.iter().filter(|&&t| t < i).count();
    let mut sorted = Vec::with_capacity(tuple.len() + 1);
    sorted.extend_from_slice(&tuple[..smaller]);
    sorted.push(i);
    sorted.extend_from_slice(&tuple[smaller..]);
    let sign = if smaller % 2 == 0 { 1 } else { -1 };
    Some((sorted, sign))
}

/// Insert index i into a non-decreasing tuple (no sign).
pub fn sym_insert(tuple: &[usize], i: usize) -> Vec<usize> {
    let at = tuple.iter().filter(|&&t| t <= i).count();
    let mut sorted = Vec::with_capacity(tuple.len() + 1);
    sorted.extend_from_slice(&tuple[..at]);
    sorted.push(i);
    sorted.extend_from_slice(&tuple[at..]);
    sorted
}

/// Sort an arbitrary distinct-index tuple, returning the permutation sign;
/// None when two indices coincide.
pub fn sort_with_sign(tuple: &[usize]) -> Option<(Vec<usize>, i32)> {
    let mut v = tuple.to_vec();
    let mut sign = 1i32;
    // insertion sort, counting transpositions
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    for w in v.windows(2) {
        if w[0] == w[1] {
            return None;
        }
    }
    Some((v, sign))
}

fn index_map(tuples: &[Vec<usize>]) -> BTreeMap<Vec<usize>, usize> {
    tuples
        .iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), i))
        .collect()
}

const MAX_POWER: usize = 3;

/// Tensor product presentation M (x) N: cover rank is the product of cover
/// ranks; relations are the M-relations tensored with each N-generator and
/// symmetrically.
pub fn tensor_presentation(m: &PresentedModule, n: &PresentedModule) -> Result<PresentedModule> {
    if m.ring() != n.ring() {
        return Err(Error::structural("modules over different rings"));
    }
    let ring = m.ring().clone();
    let (rm, rn) = (m.cover_rank(), n.cover_rank());
    let rank = rm * rn;
    let mut relations = Vec::new();
    for rel in m.relations() {
        for j in 0..rn {
            let mut comps = vec![ring.zero(); rank];
            for i in 0..rm {
                comps[tensor_position(i, j, rn)] = rel.component(i).clone();
            }
            relations.push(free_from(&ring, rank, comps)?);
        }
    }
    for rel in n.relations() {
        for i in 0..rm {
            let mut comps = vec![ring.zero(); rank];
            for j in 0..rn {
                comps[tensor_position(i, j, rn)] = rel.component(j).clone();
            }
            relations.push(free_from(&ring, rank, comps)?);
        }
    }
    PresentedModule::new(ring, rank, relations)
}

fn free_from(
    ring: &PolynomialRing,
    rank: usize,
    comps: Vec<Polynomial>,
) -> Result<FreeElement> {
    if rank == 0 {
        Ok(FreeElement::zero(ring.clone(), 0))
    } else {
        FreeElement::from_components(comps)
    }
}

pub(crate) fn ext_power_any(m: &PresentedModule, n: usize) -> Result<PresentedModule> {
    if n > MAX_POWER {
        return Err(Error::UnsupportedDegree(n));
    }
    let ring = m.ring().clone();
    if n == 0 {
        return Ok(PresentedModule::free(ring, 1));
    }
    let r = m.cover_rank();
    let tuples = wedge_tuples(r, n);
    let idx = index_map(&tuples);
    let rank = tuples.len();
    let mut relations = Vec::new();
    for rel in m.relations() {
        for w in wedge_tuples(r, n - 1) {
            let mut comps = vec![ring.zero(); rank.max(1)];
            let mut nonzero = false;
            for i in 0..r {
                let c = rel.component(i);
                if c.is_zero() {
                    continue;
                }
                if let Some((sorted, sign)) = wedge_insert(&w, i) {
                    let pos = idx[&sorted];
                    let signed = if sign < 0 { c.neg() } else { c.clone() };
                    comps[pos] = comps[pos].add(&signed);
                    nonzero = true;
                }
            }
            if nonzero {
                relations.push(free_from(&ring, rank, comps.into_iter().take(rank).collect())?);
            }
        }
    }
    PresentedModule::new(ring, rank, relations)
}

pub(crate) fn sym_power_any(m: &PresentedModule, n: usize) -> Result<PresentedModule> {
    if n > MAX_POWER {
        return Err(Error::UnsupportedDegree(n));
    }
    let ring = m.ring().clone();
    if n == 0 {
        return Ok(PresentedModule::free(ring, 1));
    }
    let r = m.cover_rank();
    let tuples = sym_tuples(r, n);
    let idx = index_map(&tuples);
    let rank = tuples.len();
    let mut relations = Vec::new();
    for rel in m.relations() {
        for w in sym_tuples(r, n - 1) {
            let mut comps = vec![ring.zero(); rank.max(1)];
            let mut nonzero = false;
            for i in 0..r {
                let c = rel.component(i);
                if c.is_zero() {
                    continue;
                }
                let pos = idx[&sym_insert(&w, i)];
                comps[pos] = comps[pos].add(c);
                nonzero = true;
            }
            if nonzero {
                relations.push(free_from(&ring, rank, comps.into_iter().take(rank).collect())?);
            }
        }
    }
    PresentedModule::new(ring, rank, relations)
}

/// Exterior power presentation, n in 1..=3. The cover basis is the strictly
/// increasing tuples of cover generators; Lambda^1 M is M itself.
pub fn ext_power_presentation(m: &PresentedModule, n: usize) -> Result<PresentedModule> {
    if n == 0 {
        return Err(Error::UnsupportedDegree(0));
    }
    ext_power_any(m, n)
}

/// Symmetric power presentation, n in 1..=3. S^1 M is M itself.
pub fn sym_power_presentation(m: &PresentedModule, n: usize) -> Result<PresentedModule> {
    if n == 0 {
        return Err(Error::UnsupportedDegree(0));
    }
    sym_power_any(m, n)
}

/// Coordinates of a wedge b in Lambda^2 of the cover: the (i < j) coordinate
/// is a_i * b_j - a_j * b_i.
pub fn wedge_of(a: &FreeElement, b: &FreeElement) -> Result<FreeElement> {
    if a.ring() != b.ring() || a.rank() != b.rank() {
        return Err(Error::structural("wedge of incompatible elements"));
    }
    let ring = a.ring().clone();
    let r = a.rank();
    let tuples = wedge_tuples(r, 2);
    let mut comps = Vec::with_capacity(tuples.len());
    for t in &tuples {
        let (i, j) = (t[0], t[1]);
        let ai_bj = a.component(i).mul(b.component(j));
        let aj_bi = a.component(j).mul(b.component(i));
        comps.push(ai_bj.sub(&aj_bi));
    }
    free_from(&ring, tuples.len(), comps)
}

/// Coordinates of a tensor b in the tensor square of the cover.
pub fn tensor_of(a: &FreeElement, b: &FreeElement) -> Result<FreeElement> {
    if a.ring() != b.ring() {
        return Err(Error::structural("tensor of incompatible elements"));
    }
    let ring = a.ring().clone();
    let (ra, rb) = (a.rank(), b.rank());
    let mut comps = vec![ring.zero(); ra * rb];
    for i in 0..ra {
        for j in 0..rb {
            comps[tensor_position(i, j, rb)] = a.component(i).mul(b.component(j));
        }
    }
    free_from(&ring, ra * rb, comps)
}
