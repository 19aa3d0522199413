//! Kernels, images and surjectivity of homomorphisms between free modules
//! and between finitely presented modules.
//!
//! A map `φ: L_1 = ⊕ A e_i → L_2 = ⊕ A ε_j` is studied through the graph
//! submodule `Σ A (e_i − η_i)` of `L = L_1 ⊕ L_2`. In `L` the source
//! components come first (`0..s`) and the target components follow
//! (`s..s+m`); the position-over-term ordering then ranks the source block
//! lowest, which is an elimination ordering for `L_1`.

use std::sync::OnceLock;

use crate::elimination::{truncate_to_vs, SubBasis};
use crate::error::{GroebnerError, HomError};
use crate::groebner::{self, buchberger, member, reduce_basis, GroebnerBasis, Provenance};
use crate::module::{FreeModule, VecElem};
use crate::order::ModuleOrder;
use crate::poly::Poly;

/// Answer of an image-membership test.
#[derive(Clone, Debug, PartialEq)]
pub enum ImageMembership {
    NotInImage,
    /// A preimage: the normal form of the element modulo the graph basis.
    InImage(VecElem),
}

/// Answer of a surjectivity test.
#[derive(Clone, Debug, PartialEq)]
pub enum Surjectivity {
    NotSurjective,
    /// Row `j` holds `f_j0, …, f_j(s-1)` with `ε_j = Σ_i f_ji η_i`.
    Surjective(Vec<Vec<Poly>>),
}

impl Surjectivity {
    pub fn is_surjective(&self) -> bool {
        matches!(self, Surjectivity::Surjective(_))
    }
}

/// Shared machinery for free and quotient homomorphisms.
#[derive(Debug)]
struct Graph {
    source: FreeModule,
    target: FreeModule,
    combined: FreeModule,
    images: Vec<VecElem>,
    extra: Vec<VecElem>,
    basis: OnceLock<Result<GroebnerBasis, GroebnerError>>,
}

impl Graph {
    fn new(
        target: &FreeModule,
        images: Vec<VecElem>,
        extra: Vec<VecElem>,
    ) -> Result<Graph, HomError> {
        let m = target.rank();
        for (index, eta) in images.iter().chain(&extra).enumerate() {
            if eta.max_comp() > m || !target.contains(&target.adopt(eta)) {
                return Err(HomError::ImageRank {
                    index,
                    expected: m,
                    got: eta.max_comp(),
                });
            }
        }
        let s = images.len();
        let algebra = target.algebra();
        let combined = FreeModule::new(algebra, s + m, ModuleOrder::pot(algebra.order().clone()))?;
        let source = FreeModule::pot(algebra, s);
        let images = images.iter().map(|v| target.adopt(v)).collect();
        let extra = extra.iter().map(|v| target.adopt(v)).collect();
        Ok(Graph {
            source,
            target: target.clone(),
            combined,
            images,
            extra,
            basis: OnceLock::new(),
        })
    }

    fn s(&self) -> usize {
        self.images.len()
    }

    fn lift_target(&self, v: &VecElem) -> VecElem {
        let s = self.s();
        self.combined.map_terms(v, |e, c| (e.clone(), c + s))
    }

    fn to_source(&self, v: &VecElem) -> VecElem {
        self.source.map_terms(v, |e, c| (e.clone(), c))
    }

    /// Reduced basis of `Σ A (e_i − η_i) + Σ A ζ` for the extra target
    /// elements `ζ`.
    fn basis(&self) -> Result<&GroebnerBasis, HomError> {
        let r = self.basis.get_or_init(|| {
            let mut gens: Vec<VecElem> = self
                .images
                .iter()
                .enumerate()
                .map(|(i, eta)| {
                    self.combined
                        .sub(&self.combined.unit(i), &self.lift_target(eta))
                })
                .collect();
            gens.extend(self.extra.iter().map(|z| self.lift_target(z)));
            let gb = buchberger(&self.combined, &gens)?;
            let gb = reduce_basis(&gb);
            Ok(GroebnerBasis::from_parts(
                self.combined.clone(),
                gb.elements().to_vec(),
                true,
                Provenance::Kernel,
            ))
        });
        r.as_ref().map_err(|e| HomError::Groebner(e.clone()))
    }

    /// `Σ_i ξ_i η_i` for `ξ` in the source module.
    fn evaluate(&self, xi: &VecElem) -> VecElem {
        let xi = self.source.adopt(xi);
        let mut acc = VecElem::zero();
        for (i, eta) in self.images.iter().enumerate() {
            let f = self.source.component(&xi, i);
            acc = self.target.add(&acc, &self.target.left_mul(&f, eta));
        }
        acc
    }

    fn in_source_block(&self, v: &VecElem) -> bool {
        v.terms().iter().all(|t| t.comp < self.s())
    }

    fn kernel_elements(&self) -> Result<Vec<VecElem>, HomError> {
        let gb = self.basis()?;
        let inside = truncate_to_vs(gb, &SubBasis::Components((0..self.s()).collect()))?;
        Ok(inside.iter().map(|v| self.to_source(v)).collect())
    }

    fn preimage(&self, eta: &VecElem) -> Result<Option<VecElem>, HomError> {
        if eta.max_comp() > self.target.rank() {
            return Err(GroebnerError::RankMismatch {
                expected: self.target.rank(),
                got: eta.max_comp(),
            }
            .into());
        }
        let gb = self.basis()?;
        let lifted = self.lift_target(&self.target.adopt(eta));
        let r = groebner::normal_form(&self.combined, &lifted, gb.elements())?.remainder;
        Ok(self.in_source_block(&r).then(|| self.to_source(&r)))
    }

    fn surjection_rows(&self) -> Result<Option<Vec<Vec<Poly>>>, HomError> {
        let gb = self.basis()?;
        let s = self.s();
        let mut rows = Vec::new();
        for j in 0..self.target.rank() {
            let found = gb
                .elements()
                .iter()
                .find(|g| g.leading().is_some_and(|(e, c)| c == s + j && e.is_zero()));
            let Some(g) = found else {
                return Ok(None);
            };
            let rest = self.combined.sub(g, &self.combined.unit(s + j));
            if !self.in_source_block(&rest) {
                return Err(HomError::VerificationFailed(format!(
                    "basis element for target component {j} leaves the source block"
                )));
            }
            let xi = self.to_source(&rest.neg());
            rows.push(self.source.components(&xi));
        }
        Ok(Some(rows))
    }
}

/// A homomorphism of free modules `A^s → L_2`, `e_i ↦ η_i`.
#[derive(Debug)]
pub struct FreeHom {
    graph: Graph,
}

impl FreeHom {
    pub fn new(target: &FreeModule, images: Vec<VecElem>) -> Result<FreeHom, HomError> {
        Ok(FreeHom {
            graph: Graph::new(target, images, Vec::new())?,
        })
    }

    /// `A^s` under position over term.
    pub fn source(&self) -> &FreeModule {
        &self.graph.source
    }

    pub fn target(&self) -> &FreeModule {
        &self.graph.target
    }

    /// The free module `L_1 ⊕ L_2` holding the graph.
    pub fn combined(&self) -> &FreeModule {
        &self.graph.combined
    }

    pub fn images(&self) -> &[VecElem] {
        &self.graph.images
    }

    pub fn evaluate(&self, xi: &VecElem) -> VecElem {
        self.graph.evaluate(xi)
    }

    /// Reduced Gröbner basis of `Σ A (e_i − η_i)` in `L_1 ⊕ L_2`.
    pub fn graph_kernel_basis(&self) -> Result<&GroebnerBasis, HomError> {
        self.graph.basis()
    }

    /// A Gröbner basis of `Ker φ` in the source; empty iff `φ` is injective.
    pub fn kernel(&self) -> Result<GroebnerBasis, HomError> {
        let elements = self.graph.kernel_elements()?;
        Ok(GroebnerBasis::from_parts(
            self.graph.source.clone(),
            elements,
            true,
            Provenance::Kernel,
        ))
    }

    /// Decides whether `eta` lies in the image; preimages are verified by
    /// evaluation.
    pub fn image_membership(&self, eta: &VecElem) -> Result<ImageMembership, HomError> {
        match self.graph.preimage(eta)? {
            None => Ok(ImageMembership::NotInImage),
            Some(xi) => {
                let back = self.graph.evaluate(&xi);
                if back != self.graph.target.adopt(eta) {
                    return Err(HomError::VerificationFailed(format!(
                        "preimage {} maps to {}",
                        self.graph.source.render(&xi),
                        self.graph.target.render(&back)
                    )));
                }
                Ok(ImageMembership::InImage(xi))
            }
        }
    }

    /// Decides surjectivity; the returned rows are verified by evaluation.
    pub fn is_surjective(&self) -> Result<Surjectivity, HomError> {
        let Some(rows) = self.graph.surjection_rows()? else {
            return Ok(Surjectivity::NotSurjective);
        };
        for (j, row) in rows.iter().enumerate() {
            let xi = self.graph.source.from_polys(row);
            if self.graph.evaluate(&xi) != self.graph.target.unit(j) {
                return Err(HomError::VerificationFailed(format!(
                    "row {j} does not express the basis vector"
                )));
            }
        }
        Ok(Surjectivity::Surjective(rows))
    }
}

/// A finitely presented module `L / N` with `N` generated by `relations`.
#[derive(Debug)]
pub struct Presentation {
    module: FreeModule,
    relations: Vec<VecElem>,
    basis: OnceLock<Result<GroebnerBasis, GroebnerError>>,
}

impl Presentation {
    pub fn new(
        module: &FreeModule,
        relations: Vec<VecElem>,
    ) -> Result<Presentation, GroebnerError> {
        let relations = relations
            .iter()
            .map(|v| {
                if v.max_comp() > module.rank() {
                    Err(GroebnerError::RankMismatch {
                        expected: module.rank(),
                        got: v.max_comp(),
                    })
                } else {
                    Ok(module.adopt(v))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Presentation {
            module: module.clone(),
            relations,
            basis: OnceLock::new(),
        })
    }

    /// The free module `L` itself (no relations).
    pub fn free(module: &FreeModule) -> Presentation {
        Presentation {
            module: module.clone(),
            relations: Vec::new(),
            basis: OnceLock::new(),
        }
    }

    pub fn module(&self) -> &FreeModule {
        &self.module
    }

    pub fn relations(&self) -> &[VecElem] {
        &self.relations
    }

    pub fn rank(&self) -> usize {
        self.module.rank()
    }

    /// Gröbner basis of the relation submodule.
    pub fn basis(&self) -> Result<&GroebnerBasis, GroebnerError> {
        self.basis
            .get_or_init(|| buchberger(&self.module, &self.relations).map(|gb| reduce_basis(&gb)))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Whether `v` represents the zero coset.
    pub fn is_zero(&self, v: &VecElem) -> Result<bool, GroebnerError> {
        Ok(member(self.basis()?, &self.module.adopt(v))?.is_member())
    }
}

/// Result of the well-definedness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomCheck {
    WellDefined,
    /// The relation with this (0-based) index is not mapped into the target
    /// relations.
    NotWellDefined(usize),
}

/// Whether `ē_i ↦ η̄_i` defines a homomorphism `M_1 → M_2`: every source
/// relation `Σ f_qi e_i` must map to `Σ f_qi η_i ∈ N_2`.
pub fn hom_exists(
    source: &Presentation,
    target: &Presentation,
    images: &[VecElem],
) -> Result<HomCheck, HomError> {
    if images.len() != source.rank() {
        return Err(HomError::ImageRank {
            index: images.len(),
            expected: source.rank(),
            got: images.len(),
        });
    }
    let (sa, ta) = (source.module.algebra(), target.module.algebra());
    if sa.names() != ta.names() || sa.field() != ta.field() || sa.relations() != ta.relations() {
        return Err(GroebnerError::ModuleMismatch.into());
    }
    let tm = &target.module;
    let images: Vec<VecElem> = images.iter().map(|v| tm.adopt(v)).collect();
    for (q, rel) in source.relations.iter().enumerate() {
        let mut acc = VecElem::zero();
        for (i, eta) in images.iter().enumerate() {
            let f = source.module.component(rel, i);
            acc = tm.add(&acc, &tm.left_mul(&f, eta));
        }
        if !target.is_zero(&acc)? {
            return Ok(HomCheck::NotWellDefined(q));
        }
    }
    Ok(HomCheck::WellDefined)
}

/// A well-defined homomorphism `L_1/N_1 → L_2/N_2`, `ē_i ↦ η̄_i`.
#[derive(Debug)]
pub struct QuotientHom {
    source: Presentation,
    target: Presentation,
    graph: Graph,
}

impl QuotientHom {
    /// Fails with `HomNotWellDefined` unless `hom_exists` passes.
    pub fn new(
        source: Presentation,
        target: Presentation,
        images: Vec<VecElem>,
    ) -> Result<QuotientHom, HomError> {
        if let HomCheck::NotWellDefined(q) = hom_exists(&source, &target, &images)? {
            return Err(HomError::HomNotWellDefined(q));
        }
        let graph = Graph::new(&target.module, images, target.relations.clone())?;
        Ok(QuotientHom {
            source,
            target,
            graph,
        })
    }

    pub fn source(&self) -> &Presentation {
        &self.source
    }

    pub fn target(&self) -> &Presentation {
        &self.target
    }

    pub fn combined(&self) -> &FreeModule {
        &self.graph.combined
    }

    /// Reduced Gröbner basis of `N_2 + Σ A (e_i − η_i)` in `L_1 ⊕ L_2`.
    pub fn graph_kernel_basis(&self) -> Result<&GroebnerBasis, HomError> {
        self.graph.basis()
    }

    /// Representatives generating `Ker φ ⊆ M_1`, reduced modulo `N_1`;
    /// representatives of the zero coset are dropped.
    pub fn kernel(&self) -> Result<Vec<VecElem>, HomError> {
        let n1 = self.source.basis()?;
        let sm = n1.module();
        let mut out = Vec::new();
        for v in self.graph.kernel_elements()? {
            let r = groebner::normal_form(sm, &sm.adopt(&v), n1.elements())?.remainder;
            if !r.is_zero() {
                out.push(self.graph.source.adopt(&r));
            }
        }
        Ok(out)
    }

    pub fn evaluate(&self, xi: &VecElem) -> VecElem {
        self.graph.evaluate(xi)
    }

    /// Decides whether the coset of `eta` lies in the image; the preimage is
    /// verified modulo `N_2`.
    pub fn image_membership(&self, eta: &VecElem) -> Result<ImageMembership, HomError> {
        match self.graph.preimage(eta)? {
            None => Ok(ImageMembership::NotInImage),
            Some(xi) => {
                let diff = self
                    .graph
                    .target
                    .sub(&self.graph.evaluate(&xi), &self.graph.target.adopt(eta));
                if !self.target.is_zero(&diff)? {
                    return Err(HomError::VerificationFailed(format!(
                        "preimage {} misses the target coset",
                        self.graph.source.render(&xi)
                    )));
                }
                Ok(ImageMembership::InImage(xi))
            }
        }
    }

    /// Decides surjectivity; the rows are verified modulo `N_2`.
    pub fn is_surjective(&self) -> Result<Surjectivity, HomError> {
        let Some(rows) = self.graph.surjection_rows()? else {
            return Ok(Surjectivity::NotSurjective);
        };
        for (j, row) in rows.iter().enumerate() {
            let xi = self.graph.source.from_polys(row);
            let diff = self
                .graph
                .target
                .sub(&self.graph.evaluate(&xi), &self.graph.target.unit(j));
            if !self.target.is_zero(&diff)? {
                return Err(HomError::VerificationFailed(format!(
                    "row {j} does not express the basis vector modulo the relations"
                )));
            }
        }
        Ok(Surjectivity::Surjective(rows))
    }
}
