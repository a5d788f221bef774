//! The degree-n component of the Koszul complex of a presented module M:
//! the chain
//!
//! ```text
//! 0 -> Lambda^n M -> Lambda^(n-1) M (x) S^1 M -> ... -> S^n M -> 0
//! ```
//!
//! with differential moving one exterior factor into the symmetric factor,
//!
//! ```text
//! d(e_{i1} ^ ... ^ e_{ip} (x) w) =
//!     sum_k (-1)^(k+1) (e_{i1} ^ ... omit e_{ik} ... ^ e_{ip}) (x) (e_{ik} . w)
//! ```
//!
//! so that at p = 2, w = 1 the map is u ^ v |-> v (x) u - u (x) v, and at
//! p = 1 it is u (x) v |-> uv. Consecutive differentials composing to zero
//! is checked at construction.

mod verify;

pub use verify::{verify_counterexample, ChainCheck, ControlRun, VerdictBundle, VerdictStep};

use crate::error::{Error, Result};
use crate::fpmod::{homology_at, HomologyModule, ModuleElement, ModuleMap, PresentedModule};
use crate::groebner::{syzygies, FreeElement, GroebnerBasis, ModuleOrder};
use crate::multilinear::{
    ext_power_any, sym_insert, sym_power_any, sym_tuples, tensor_position, tensor_presentation,
    wedge_tuples,
};
use crate::polyring::{Polynomial, PolynomialRing};

/// An ideal given by explicit nonzero generators.
#[derive(Clone, Debug, PartialEq)]
pub struct Ideal {
    ring: PolynomialRing,
    gens: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: PolynomialRing, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            if g.ring() != &ring {
                return Err(Error::structural("generator from a different ring"));
            }
            if g.is_zero() {
                return Err(Error::structural("ideal generators must be nonzero"));
            }
        }
        Ok(Ideal { ring, gens })
    }

    pub fn ring(&self) -> &PolynomialRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }
}

/// The ideal viewed as a module: cover generator e_i maps to g_i, relations
/// are the syzygies of the generators.
pub fn ideal_as_module(ideal: &Ideal) -> Result<PresentedModule> {
    let ring = ideal.ring().clone();
    let cols: Vec<FreeElement> = ideal
        .gens
        .iter()
        .map(|g| FreeElement::from_poly(g.clone()))
        .collect();
    let relations = syzygies(&ring, 1, &cols)?;
    PresentedModule::new(ring, ideal.gens.len(), relations)
}

/// One spot Lambda^p M (x) S^(n-p) M of a Koszul component, with the basis
/// bookkeeping needed to print elements.
#[derive(Clone, Debug)]
pub struct Spot {
    p: usize,
    module: PresentedModule,
    wedge: Vec<Vec<usize>>,
    sym: Vec<Vec<usize>>,
}

impl Spot {
    pub fn exterior_degree(&self) -> usize {
        self.p
    }

    pub fn module(&self) -> &PresentedModule {
        &self.module
    }

    pub fn wedge_tuples(&self) -> &[Vec<usize>] {
        &self.wedge
    }

    pub fn sym_tuples(&self) -> &[Vec<usize>] {
        &self.sym
    }

    /// Cover position of the pair (wedge tuple index, sym tuple index).
    pub fn position(&self, widx: usize, sidx: usize) -> usize {
        tensor_position(widx, sidx, self.sym.len())
    }

    /// Printed name of a cover generator: wedge factors joined by `^`,
    /// symmetric factors by `.`, tensor separator `|`; generators are
    /// 1-based. Examples: `e2^e3`, `e1|e2`, `e1^e2|e3.e3`.
    pub fn basis_symbol(&self, pos: usize) -> String {
        let widx = pos / self.sym.len().max(1);
        let sidx = pos % self.sym.len().max(1);
        let wedge = self.wedge[widx]
            .iter()
            .map(|i| format!("e{}", i + 1))
            .collect::<Vec<_>>()
            .join("^");
        let sym = self.sym[sidx]
            .iter()
            .map(|i| format!("e{}", i + 1))
            .collect::<Vec<_>>()
            .join(".");
        match (wedge.is_empty(), sym.is_empty()) {
            (false, false) => format!("{wedge}|{sym}"),
            (false, true) => wedge,
            (true, false) => sym,
            (true, true) => "1".to_string(),
        }
    }

    /// Print an element of the spot cover as a combination of named basis
    /// symbols, e.g. `x*(e2^e3)` or `(x + y)*(e1|e2) + z*(e2|e3)`.
    pub fn format_element(&self, v: &FreeElement) -> String {
        let field = self.module.ring().field();
        let mut parts = Vec::new();
        for (pos, poly) in v.components().iter().enumerate() {
            if poly.is_zero() {
                continue;
            }
            let sym = self.basis_symbol(pos);
            if poly.is_constant() && field.is_one(&poly.leading_term().unwrap().1.clone()) {
                parts.push(sym);
            } else {
                let needs_parens =
                    poly.terms().len() > 1 || field.is_negative(poly.leading_term().unwrap().1);
                if needs_parens {
                    parts.push(format!("({poly})*({sym})"));
                } else {
                    parts.push(format!("{poly}*({sym})"));
                }
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// The degree-n Koszul component: spots indexed by exterior degree p = n..0
/// and the differentials between consecutive spots.
#[derive(Clone, Debug)]
pub struct KoszulComponent {
    degree: usize,
    spots: Vec<Spot>,          // spots[p], p = 0..=n
    differentials: Vec<ModuleMap>, // differentials[p-1]: spot p -> spot p-1
}

impl KoszulComponent {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn spot(&self, p: usize) -> &Spot {
        &self.spots[p]
    }

    /// The differential leaving exterior degree p (1 <= p <= n).
    pub fn differential(&self, p: usize) -> &ModuleMap {
        &self.differentials[p - 1]
    }
}

/// Assemble the degree-n Koszul component of a presented module, n in 1..=3.
/// Each differential is checked for well-definedness and consecutive
/// differentials are checked to compose to zero; a failure of either is an
/// internal consistency error, never a valid output.
pub fn build_koszul_component(m: &PresentedModule, n: usize) -> Result<KoszulComponent> {
    if n == 0 || n > 3 {
        return Err(Error::UnsupportedDegree(n));
    }
    let ring = m.ring().clone();
    let r = m.cover_rank();

    let mut spots = Vec::with_capacity(n + 1);
    for p in 0..=n {
        let ext = ext_power_any(m, p)?;
        let sym = sym_power_any(m, n - p)?;
        let module = tensor_presentation(&ext, &sym)?;
        spots.push(Spot {
            p,
            module,
            wedge: wedge_tuples(r, p),
            sym: sym_tuples(r, n - p),
        });
    }

    let mut differentials = Vec::with_capacity(n);
    for p in 1..=n {
        let source = &spots[p];
        let target = &spots[p - 1];
        let target_sym_count = target.sym.len();
        let mut lift = Vec::with_capacity(source.module.cover_rank());
        for widx in 0..source.wedge.len() {
            for sidx in 0..source.sym.len() {
                let w = &source.wedge[widx];
                let s = &source.sym[sidx];
                let mut comps = vec![ring.zero(); target.module.cover_rank()];
                for (k, &ik) in w.iter().enumerate() {
                    let mut w_rest = w.clone();
                    w_rest.remove(k);
                    let s_new = sym_insert(s, ik);
                    let twidx = target
                        .wedge
                        .iter()
                        .position(|t| *t == w_rest)
                        .expect("removed tuple is in the target wedge basis");
                    let tsidx = target
                        .sym
                        .iter()
                        .position(|t| *t == s_new)
                        .expect("inserted tuple is in the target sym basis");
                    let pos = tensor_position(twidx, tsidx, target_sym_count);
                    let sign = if k % 2 == 0 {
                        ring.one()
                    } else {
                        ring.one().neg()
                    };
                    comps[pos] = comps[pos].add(&sign);
                }
                lift.push(if target.module.cover_rank() == 0 {
                    FreeElement::zero(ring.clone(), 0)
                } else {
                    FreeElement::from_components(comps)?
                });
            }
        }
        let map = ModuleMap::new(source.module.clone(), target.module.clone(), lift).map_err(
            |e| match e {
                Error::ContractViolation(msg) => Error::ContractViolation(format!(
                    "Koszul differential at p={p} is not well defined: {msg}"
                )),
                other => other,
            },
        )?;
        differentials.push(map);
    }

    // d . d = 0, checked generator by generator
    for p in 2..=n {
        let d_p = &differentials[p - 1];
        let d_pm1 = &differentials[p - 2];
        let target = &spots[p - 2];
        for i in 0..spots[p].module.cover_rank() {
            let e = FreeElement::unit(&ring, spots[p].module.cover_rank(), i);
            let once = d_p.push_rep(&e);
            let twice = d_pm1.push_rep(&once);
            if !target.module.relation_basis().reduces_to_zero(&twice)? {
                return Err(Error::ContractViolation(format!(
                    "d.d is nonzero on generator {i} at p={p}"
                )));
            }
        }
    }

    Ok(KoszulComponent {
        degree: n,
        spots,
        differentials,
    })
}

/// The q-th bracket power: the ideal generated by the q-th powers of all
/// elements of I. Computable as generator powers exactly when q equals the
/// field characteristic, which is the only supported case.
pub fn bracket_power(ideal: &Ideal, q: u64) -> Result<Ideal> {
    let ch = ideal.ring().field().characteristic();
    if q != ch || q == 0 {
        return Err(Error::UnsupportedCharacteristic(format!(
            "bracket power exponent {q} requires characteristic {q}, ring has characteristic {ch}"
        )));
    }
    let gens = ideal
        .gens
        .iter()
        .map(|g| g.pow(q as u32))
        .collect::<Vec<_>>();
    Ideal::new(ideal.ring().clone(), gens)
}

/// The certificate map f: Lambda^2(I) -> I^2 / I^[2], e_i ^ e_j |-> g_i g_j.
///
/// The target is presented on the pairwise products g_i g_j (i <= j) with
/// relations the syzygies of those products together with the bracket-power
/// generators rewritten as (diagonal) coordinate vectors. Only defined in
/// characteristic 2: with 2 invertible, I^2 = I^[2] and the map is zero.
#[derive(Clone, Debug)]
pub struct Certificate {
    map: ModuleMap,
    products: Vec<Polynomial>,
    bracket_gb: GroebnerBasis,
}

/// Result of pushing an element through the certificate map: the class in
/// I^2/I^[2] and the reduced polynomial value of its representative modulo
/// the bracket power.
#[derive(Clone, Debug)]
pub struct CertificateValue {
    pub class: ModuleElement,
    pub value: Polynomial,
}

impl CertificateValue {
    pub fn is_nonzero(&self) -> Result<bool> {
        Ok(!self.class.is_zero()?)
    }
}

impl Certificate {
    pub fn map(&self) -> &ModuleMap {
        &self.map
    }

    /// Image of an element of the Lambda^2 cover.
    pub fn evaluate(&self, rep: &FreeElement) -> Result<CertificateValue> {
        let class = self.map.apply(&self.map.source().element(rep.clone())?)?;
        let mut poly = self.map.target().ring().zero();
        for (c, prod) in class.representative().components().iter().zip(&self.products) {
            poly = poly.add(&c.mul(prod));
        }
        let reduced = self
            .bracket_gb
            .normal_form(&FreeElement::from_poly(poly))?;
        Ok(CertificateValue {
            class,
            value: reduced.component(0).clone(),
        })
    }
}

pub fn certificate_map(ideal: &Ideal) -> Result<Certificate> {
    let ring = ideal.ring().clone();
    if ring.field().characteristic() != 2 {
        return Err(Error::UnsupportedCharacteristic(
            "the certificate map needs characteristic 2; with 2 invertible I^2 = I^[2] and the map is zero"
                .into(),
        ));
    }
    let m = ideal.gens.len();
    let module = ideal_as_module(ideal)?;
    let wedge_sq = ext_power_any(&module, 2)?;

    let pairs = sym_tuples(m, 2);
    let products: Vec<Polynomial> = pairs
        .iter()
        .map(|t| ideal.gens[t[0]].mul(&ideal.gens[t[1]]))
        .collect();

    let bracket = bracket_power(ideal, 2)?;
    let bracket_cols: Vec<FreeElement> = bracket
        .generators()
        .iter()
        .map(|g| FreeElement::from_poly(g.clone()))
        .collect();
    let bracket_gb = crate::groebner::buchberger(
        &ring,
        1,
        &bracket_cols,
        ModuleOrder::term_over_position(ring.order()),
    )?;

    let prod_cols: Vec<FreeElement> = products
        .iter()
        .map(|p| FreeElement::from_poly(p.clone()))
        .collect();
    let mut relations = syzygies(&ring, 1, &prod_cols)?;
    for (k, t) in pairs.iter().enumerate() {
        if t[0] == t[1] {
            // g_k^2 is a generator of I^[2]; kill the diagonal coordinate
            relations.push(FreeElement::unit(&ring, pairs.len(), k));
        }
    }
    let target = PresentedModule::new(ring.clone(), pairs.len(), relations)?;

    let wedge = wedge_tuples(m, 2);
    let pair_index: std::collections::BTreeMap<Vec<usize>, usize> = pairs
        .iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), i))
        .collect();
    let lift: Vec<FreeElement> = wedge
        .iter()
        .map(|t| FreeElement::unit(&ring, pairs.len(), pair_index[t]))
        .collect();

    let map = ModuleMap::new(wedge_sq, target, lift).map_err(|e| match e {
        Error::ContractViolation(msg) => Error::ContractViolation(format!(
            "certificate map is not well defined: {msg}"
        )),
        other => other,
    })?;

    Ok(Certificate {
        map,
        products,
        bracket_gb,
    })
}

/// Homology of one spot of a Koszul component.
#[derive(Clone, Debug)]
pub struct SpotHomology {
    pub p: usize,
    pub is_zero: bool,
    pub cover_rank: usize,
    pub relation_count: usize,
    /// A nonzero class written as an element of the ambient spot, in reduced
    /// form, with its printed name.
    pub witness: Option<ModuleElement>,
    pub witness_string: Option<String>,
}

/// Per-spot homology of a Koszul component plus the rigidity verdict. The
/// rigidity flag is false exactly when some spot has vanishing homology
/// while a higher spot does not.
#[derive(Clone, Debug)]
pub struct HomologyReport {
    /// Spot results ordered by descending exterior degree p = n..0.
    pub spots: Vec<SpotHomology>,
    pub rigid: bool,
}

impl HomologyReport {
    pub fn spot(&self, p: usize) -> &SpotHomology {
        self.spots.iter().find(|s| s.p == p).expect("spot exists")
    }

    /// True when every spot of the report has vanishing homology.
    pub fn all_zero(&self) -> bool {
        self.spots.iter().all(|s| s.is_zero)
    }
}

/// Compute homology at every spot. The top spot is the kernel of the top
/// differential, the bottom spot the cokernel of the last one; interior
/// spots are ker/im. Implemented uniformly by padding the complex with zero
/// modules on both ends.
pub fn homology_report(k: &KoszulComponent) -> Result<HomologyReport> {
    let n = k.degree();
    let ring = k.spot(0).module().ring().clone();
    let zero_module = PresentedModule::zero(ring);

    let mut homologies: Vec<(usize, HomologyModule)> = Vec::new();
    for p in (0..=n).rev() {
        let incoming = if p == n {
            ModuleMap::zero(zero_module.clone(), k.spot(p).module().clone())?
        } else {
            k.differential(p + 1).clone()
        };
        let outgoing = if p == 0 {
            ModuleMap::zero(k.spot(p).module().clone(), zero_module.clone())?
        } else {
            k.differential(p).clone()
        };
        homologies.push((p, homology_at(&incoming, &outgoing)?));
    }

    let mut spots = Vec::with_capacity(n + 1);
    for (p, h) in &homologies {
        let witness = h.witness()?;
        let witness_string = witness
            .as_ref()
            .map(|w| k.spot(*p).format_element(w.representative()));
        spots.push(SpotHomology {
            p: *p,
            is_zero: h.is_zero()?,
            cover_rank: h.presentation().cover_rank(),
            relation_count: h.presentation().relations().len(),
            witness,
            witness_string,
        });
    }

    // non-rigid: a zero spot strictly below a nonzero spot
    let mut rigid = true;
    for low in &spots {
        for high in &spots {
            if low.p < high.p && low.is_zero && !high.is_zero {
                rigid = false;
            }
        }
    }

    Ok(HomologyReport { spots, rigid })
}
