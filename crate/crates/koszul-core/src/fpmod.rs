//! Finitely presented modules and their maps: kernels, homology
//! subquotients, zero tests, and element equality.
//!
//! A module is the cokernel of a map between free modules, encoded by the
//! rank of the free cover and the relation columns. The reduced Groebner
//! basis of the relation submodule is computed eagerly at construction and
//! cached, so every later query is a reduction.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, syzygies, FreeElement, GroebnerBasis, ModuleOrder};
use crate::polyring::PolynomialRing;

#[derive(Debug)]
struct PmInner {
    ring: PolynomialRing,
    cover_rank: usize,
    relations: Vec<FreeElement>,
    gb: GroebnerBasis,
}

/// A finitely presented module R^cover_rank / (relation columns).
#[derive(Clone, Debug)]
pub struct PresentedModule {
    inner: Arc<PmInner>,
}

impl PartialEq for PresentedModule {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.ring == other.inner.ring
                && self.inner.cover_rank == other.inner.cover_rank
                && self.inner.relations == other.inner.relations)
    }
}

impl Eq for PresentedModule {}

impl PresentedModule {
    pub fn new(
        ring: PolynomialRing,
        cover_rank: usize,
        relations: Vec<FreeElement>,
    ) -> Result<Self> {
        let relations: Vec<FreeElement> =
            relations.into_iter().filter(|r| !r.is_zero()).collect();
        let order = ModuleOrder::term_over_position(ring.order());
        let gb = buchberger(&ring, cover_rank, &relations, order)?;
        Ok(PresentedModule {
            inner: Arc::new(PmInner {
                ring,
                cover_rank,
                relations,
                gb,
            }),
        })
    }

    /// Free module of the given rank (no relations).
    pub fn free(ring: PolynomialRing, rank: usize) -> Self {
        Self::new(ring, rank, Vec::new()).expect("free module construction cannot fail")
    }

    /// The zero module, presented with an empty cover.
    pub fn zero(ring: PolynomialRing) -> Self {
        Self::free(ring, 0)
    }

    pub fn ring(&self) -> &PolynomialRing {
        &self.inner.ring
    }

    pub fn cover_rank(&self) -> usize {
        self.inner.cover_rank
    }

    pub fn relations(&self) -> &[FreeElement] {
        &self.inner.relations
    }

    /// Reduced Groebner basis of the relation submodule.
    pub fn relation_basis(&self) -> &GroebnerBasis {
        &self.inner.gb
    }

    pub fn element(&self, rep: FreeElement) -> Result<ModuleElement> {
        if rep.ring() != self.ring() {
            return Err(Error::structural("representative from a different ring"));
        }
        if rep.rank() != self.cover_rank() {
            return Err(Error::structural(format!(
                "representative rank {} does not match cover rank {}",
                rep.rank(),
                self.cover_rank()
            )));
        }
        Ok(ModuleElement {
            parent: self.clone(),
            rep,
        })
    }

    /// The class of the i-th cover generator.
    pub fn generator(&self, i: usize) -> ModuleElement {
        assert!(i < self.cover_rank());
        ModuleElement {
            parent: self.clone(),
            rep: FreeElement::unit(self.ring(), self.cover_rank(), i),
        }
    }

    /// True iff every cover generator reduces to zero modulo the relations.
    pub fn is_zero_module(&self) -> Result<bool> {
        for i in 0..self.cover_rank() {
            let e = FreeElement::unit(self.ring(), self.cover_rank(), i);
            if !self.inner.gb.reduces_to_zero(&e)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// An element of a presented module, held as a free-cover representative.
/// Two elements are equal iff the difference of representatives reduces to
/// zero modulo the parent's relations.
#[derive(Clone, Debug)]
pub struct ModuleElement {
    parent: PresentedModule,
    rep: FreeElement,
}

impl ModuleElement {
    pub fn parent(&self) -> &PresentedModule {
        &self.parent
    }

    pub fn representative(&self) -> &FreeElement {
        &self.rep
    }

    /// Canonical representative: the reduced normal form.
    pub fn normal_form(&self) -> Result<FreeElement> {
        self.parent.inner.gb.normal_form(&self.rep)
    }

    pub fn is_zero(&self) -> Result<bool> {
        self.parent.inner.gb.reduces_to_zero(&self.rep)
    }

    pub fn equals(&self, other: &ModuleElement) -> Result<bool> {
        if self.parent != other.parent {
            return Err(Error::structural("elements of different modules"));
        }
        self.parent
            .inner
            .gb
            .reduces_to_zero(&self.rep.sub(&other.rep))
    }

    pub fn add(&self, other: &ModuleElement) -> Result<ModuleElement> {
        if self.parent != other.parent {
            return Err(Error::structural("elements of different modules"));
        }
        self.parent.element(self.rep.add(&other.rep))
    }

    pub fn sub(&self, other: &ModuleElement) -> Result<ModuleElement> {
        if self.parent != other.parent {
            return Err(Error::structural("elements of different modules"));
        }
        self.parent.element(self.rep.sub(&other.rep))
    }
}

/// A map of presented modules, given by the images of the source cover
/// generators as elements of the target cover. Construction verifies
/// well-definedness: every source relation must land in the target's
/// relation submodule.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    source: PresentedModule,
    target: PresentedModule,
    lift: Vec<FreeElement>,
}

impl ModuleMap {
    pub fn new(
        source: PresentedModule,
        target: PresentedModule,
        lift: Vec<FreeElement>,
    ) -> Result<Self> {
        if source.ring() != target.ring() {
            return Err(Error::structural("source and target over different rings"));
        }
        if lift.len() != source.cover_rank() {
            return Err(Error::structural(format!(
                "lift has {} columns, source cover rank is {}",
                lift.len(),
                source.cover_rank()
            )));
        }
        for col in &lift {
            if col.rank() != target.cover_rank() || col.ring() != target.ring() {
                return Err(Error::structural(
                    "lift column does not live in the target cover",
                ));
            }
        }
        let map = ModuleMap {
            source,
            target,
            lift,
        };
        for rel in map.source.relations() {
            let image = map.push_rep(rel);
            if !map.target.inner.gb.reduces_to_zero(&image)? {
                return Err(Error::ContractViolation(
                    "map lift sends a source relation outside the target relations".into(),
                ));
            }
        }
        Ok(map)
    }

    pub fn zero(source: PresentedModule, target: PresentedModule) -> Result<Self> {
        let lift = (0..source.cover_rank())
            .map(|_| FreeElement::zero(target.ring().clone(), target.cover_rank()))
            .collect();
        Self::new(source, target, lift)
    }

    pub fn identity(m: &PresentedModule) -> Result<Self> {
        let lift = (0..m.cover_rank())
            .map(|i| FreeElement::unit(m.ring(), m.cover_rank(), i))
            .collect();
        Self::new(m.clone(), m.clone(), lift)
    }

    pub fn source(&self) -> &PresentedModule {
        &self.source
    }

    pub fn target(&self) -> &PresentedModule {
        &self.target
    }

    pub fn lift(&self) -> &[FreeElement] {
        &self.lift
    }

    /// Push a free-cover representative through the lift (no reduction).
    pub fn push_rep(&self, rep: &FreeElement) -> FreeElement {
        let mut out = FreeElement::zero(self.target.ring().clone(), self.target.cover_rank());
        for (coeff, col) in rep.components().iter().zip(&self.lift) {
            if !coeff.is_zero() {
                out = out.add(&col.mul_poly(coeff));
            }
        }
        out
    }

    pub fn apply(&self, elt: &ModuleElement) -> Result<ModuleElement> {
        if elt.parent() != &self.source {
            return Err(Error::structural("element does not belong to the source"));
        }
        let image = self.push_rep(elt.representative());
        self.target.element(self.target.inner.gb.normal_form(&image)?)
    }
}

fn project_block(
    ring: &PolynomialRing,
    v: &FreeElement,
    start: usize,
    len: usize,
) -> Result<FreeElement> {
    if len == 0 {
        return Ok(FreeElement::zero(ring.clone(), 0));
    }
    FreeElement::from_components(v.components()[start..start + len].to_vec())
}

/// Kernel of a map of presented modules, with its inclusion into the source.
///
/// Method: syzygies of the lift columns adjoined with the target relations;
/// the source-block projections of those syzygies generate the kernel. The
/// kernel's own relations are the vectors that combine its generators into
/// the source relations.
pub fn kernel_of_map(map: &ModuleMap) -> Result<(PresentedModule, ModuleMap)> {
    let ring = map.source().ring().clone();
    let s = map.source().cover_rank();
    let t = map.target().cover_rank();

    let mut cols: Vec<FreeElement> = map.lift().to_vec();
    cols.extend(map.target().relations().iter().cloned());
    let syz = syzygies(&ring, t, &cols)?;

    let source_gb = map.source().relation_basis();
    let mut gens: Vec<FreeElement> = Vec::new();
    for z in &syz {
        let cand = project_block(&ring, z, 0, s)?;
        let nf = source_gb.normal_form(&cand)?;
        if !nf.is_zero() {
            gens.push(nf);
        }
    }

    let mut rel_cols: Vec<FreeElement> = gens.clone();
    rel_cols.extend(map.source().relations().iter().cloned());
    let rel_syz = syzygies(&ring, s, &rel_cols)?;
    let mut relations = Vec::new();
    for z in &rel_syz {
        let r = project_block(&ring, z, 0, gens.len())?;
        if !r.is_zero() {
            relations.push(r);
        }
    }

    let kernel = PresentedModule::new(ring, gens.len(), relations)?;
    let inclusion = ModuleMap::new(kernel.clone(), map.source().clone(), gens)?;
    Ok((kernel, inclusion))
}

/// The homology ker(g)/im(f) of a two-step complex, as a presented module
/// together with ambient representatives for its generators.
#[derive(Clone, Debug)]
pub struct HomologyModule {
    presentation: PresentedModule,
    ambient: PresentedModule,
    reps: Vec<FreeElement>,
}

impl HomologyModule {
    pub fn presentation(&self) -> &PresentedModule {
        &self.presentation
    }

    /// The module the homology classes live in (the middle spot).
    pub fn ambient(&self) -> &PresentedModule {
        &self.ambient
    }

    pub fn is_zero(&self) -> Result<bool> {
        self.presentation.is_zero_module()
    }

    /// Lift the i-th homology generator to an element of the ambient module.
    pub fn class_rep(&self, i: usize) -> Result<ModuleElement> {
        self.ambient.element(self.reps[i].clone())
    }

    pub fn class_is_zero(&self, i: usize) -> Result<bool> {
        let e = FreeElement::unit(
            self.presentation.ring(),
            self.presentation.cover_rank(),
            i,
        );
        self.presentation.inner.gb.reduces_to_zero(&e)
    }

    /// An ambient element generating a nonzero homology class, in reduced
    /// normal form; None when the homology vanishes.
    pub fn witness(&self) -> Result<Option<ModuleElement>> {
        for i in 0..self.presentation.cover_rank() {
            if !self.class_is_zero(i)? {
                let nf = self.ambient.inner.gb.normal_form(&self.reps[i])?;
                return Ok(Some(self.ambient.element(nf)?));
            }
        }
        Ok(None)
    }
}

/// Homology at the middle of source(f) -> target(f)=source(g) -> target(g).
///
/// Presented on the kernel generators of g; the relations are the vectors
/// that push a combination of kernel generators into im(f) plus the ambient
/// relations. Fails unless g after f is zero.
pub fn homology_at(f: &ModuleMap, g: &ModuleMap) -> Result<HomologyModule> {
    if f.target() != g.source() {
        return Err(Error::structural(
            "target of the first map is not the source of the second",
        ));
    }
    let ambient = g.source().clone();
    let ring = ambient.ring().clone();

    for col in f.lift() {
        let through = g.push_rep(col);
        if !g.target().inner.gb.reduces_to_zero(&through)? {
            return Err(Error::ContractViolation(
                "composition of the two maps is not zero".into(),
            ));
        }
    }

    let (_, inclusion) = kernel_of_map(g)?;
    let gens: Vec<FreeElement> = inclusion.lift().to_vec();

    let mut cols: Vec<FreeElement> = gens.clone();
    cols.extend(f.lift().iter().cloned());
    cols.extend(ambient.relations().iter().cloned());
    let syz = syzygies(&ring, ambient.cover_rank(), &cols)?;
    let mut relations = Vec::new();
    for z in &syz {
        let r = project_block(&ring, z, 0, gens.len())?;
        if !r.is_zero() {
            relations.push(r);
        }
    }

    let presentation = PresentedModule::new(ring, gens.len(), relations)?;
    Ok(HomologyModule {
        presentation,
        ambient,
        reps: gens,
    })
}
