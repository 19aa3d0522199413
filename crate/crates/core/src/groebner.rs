//! Left division, S-vectors and the Buchberger algorithm for left ideals
//! and submodules of free modules.

use std::collections::HashSet;

use crate::error::GroebnerError;
use crate::field::{Field, FieldElem};
use crate::module::{FreeModule, VecElem};
use crate::monomial::Exponent;
use crate::poly::Poly;

/// Which operation produced a basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Buchberger,
    Reduced,
    Elimination,
    Intersection,
    Kernel,
}

/// A left Gröbner basis of a submodule of `module`, sorted under the
/// module's ordering.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    module: FreeModule,
    elements: Vec<VecElem>,
    reduced: bool,
    provenance: Provenance,
}

impl GroebnerBasis {
    /// Wraps elements that are known to form a Gröbner basis.
    pub(crate) fn from_parts(
        module: FreeModule,
        elements: Vec<VecElem>,
        reduced: bool,
        provenance: Provenance,
    ) -> Self {
        GroebnerBasis {
            module,
            elements,
            reduced,
            provenance,
        }
    }

    pub fn module(&self) -> &FreeModule {
        &self.module
    }

    pub fn elements(&self) -> &[VecElem] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// Rank-one elements as polynomials.
    pub fn polys(&self) -> Vec<Poly> {
        self.elements
            .iter()
            .map(|v| self.module.to_poly(v))
            .collect()
    }

    /// Whether this rank-one basis generates the whole algebra.
    pub fn is_unit_ideal(&self) -> bool {
        self.module.rank() == 1
            && self
                .elements
                .iter()
                .any(|g| g.leading().is_some_and(|(e, _)| e.is_zero()))
    }

    /// `[ g_1, … ]` in canonical text form.
    pub fn render(&self) -> String {
        let items: Vec<String> = self
            .elements
            .iter()
            .map(|g| self.module.render(g))
            .collect();
        crate::render::list(&items)
    }

    /// Every S-vector reduces to zero.
    pub fn certify(&self) -> bool {
        is_groebner(&self.module, &self.elements)
    }
}

/// One division step: `coeff · a^shift · G[index]` was subtracted.
#[derive(Clone, Debug)]
pub struct ReductionStep<'a> {
    pub index: usize,
    pub coeff: FieldElem,
    pub shift: Exponent,
    pub before: &'a VecElem,
}

/// Result of left division.
#[derive(Clone, Debug, PartialEq)]
pub struct Division {
    pub remainder: VecElem,
    /// Nonzero quotients `(q_k, k)` in increasing `k`, with
    /// `ξ = Σ q_k · G_k + remainder`.
    pub quotients: Vec<(Poly, usize)>,
}

fn check_rank(module: &FreeModule, v: &VecElem) -> Result<(), GroebnerError> {
    if v.max_comp() > module.rank() {
        return Err(GroebnerError::RankMismatch {
            expected: module.rank(),
            got: v.max_comp(),
        });
    }
    if !module.contains(v) {
        return Err(GroebnerError::ModuleMismatch);
    }
    Ok(())
}

/// Left division of `xi` by `divisors`. The first divisor (by index) whose
/// leading monomial divides the current leading monomial is used.
pub fn normal_form(
    module: &FreeModule,
    xi: &VecElem,
    divisors: &[VecElem],
) -> Result<Division, GroebnerError> {
    check_rank(module, xi)?;
    for g in divisors {
        check_rank(module, g)?;
    }
    Ok(divide(module, xi, divisors, true, None))
}

/// `normal_form` reporting every step to `trace`.
pub fn normal_form_traced(
    module: &FreeModule,
    xi: &VecElem,
    divisors: &[VecElem],
    trace: &mut dyn FnMut(&ReductionStep<'_>),
) -> Result<Division, GroebnerError> {
    check_rank(module, xi)?;
    for g in divisors {
        check_rank(module, g)?;
    }
    Ok(divide(module, xi, divisors, true, Some(trace)))
}

pub(crate) fn divide(
    module: &FreeModule,
    xi: &VecElem,
    divisors: &[VecElem],
    want_quotients: bool,
    mut trace: Option<&mut dyn FnMut(&ReductionStep<'_>)>,
) -> Division {
    let field = module.algebra().field();
    let ord = module.base_order();
    let mut quotient_terms: Vec<Vec<(FieldElem, Exponent)>> = vec![Vec::new(); divisors.len()];
    let mut remainder = Vec::new();
    // Over the rationals the running vector is kept primitive, `ξ_true = σ·p`,
    // which holds coefficient growth far below that of monic arithmetic.
    let (mut sigma, mut p) = xi.primitive().unwrap_or_else(|| (field.one(), xi.clone()));
    let fraction_free = matches!(field, Field::Rational);
    while let Some(lt) = p.leading_term().cloned() {
        let hit = divisors.iter().enumerate().find_map(|(k, g)| {
            let (ge, gc) = g.leading()?;
            if gc == lt.comp && ge.divides(&lt.exp) {
                Some((k, lt.exp.checked_sub(ge).expect("divides")))
            } else {
                None
            }
        });
        let Some((k, gamma)) = hit else {
            p.pop_leading();
            remainder.push((lt.coeff.mul(&sigma), lt.exp, lt.comp));
            continue;
        };
        let shifted = module.mul_term(&field.one(), &gamma, &divisors[k]);
        let lc = shifted.leading_coeff().expect("domain: product is nonzero");
        let c = lt.coeff.mul(&sigma).div(lc);
        if let Some(t) = trace.as_mut() {
            let before = p.scale(&sigma);
            t(&ReductionStep {
                index: k,
                coeff: c.clone(),
                shift: gamma.clone(),
                before: &before,
            });
        }
        if fraction_free {
            let (_, sh) = shifted.primitive().expect("nonzero");
            let a = sh.leading_coeff().expect("nonzero").clone();
            p = module.sub(&p.scale(&a), &sh.scale(&lt.coeff));
            sigma = sigma.div(&a);
            if let Some((s, q)) = p.primitive() {
                sigma = sigma.mul(&s);
                p = q;
            }
        } else {
            p = module.sub(&p, &shifted.scale(&c));
        }
        if want_quotients {
            quotient_terms[k].push((c, gamma));
        }
    }
    let quotients = quotient_terms
        .into_iter()
        .enumerate()
        .map(|(k, ts)| (Poly::from_terms(ts, ord), k))
        .filter(|(q, _)| !q.is_zero())
        .collect();
    Division {
        remainder: module.vector(remainder),
        quotients,
    }
}

/// Reduced remainder only.
pub(crate) fn reduce(module: &FreeModule, xi: &VecElem, divisors: &[VecElem]) -> VecElem {
    divide(module, xi, divisors, false, None).remainder
}

/// The left S-vector of `f` and `g`, or `None` when their leading terms sit
/// in different components.
pub fn spair(module: &FreeModule, f: &VecElem, g: &VecElem) -> Option<VecElem> {
    let (fe, fc) = f.leading()?;
    let (ge, gc) = g.leading()?;
    if fc != gc {
        return None;
    }
    let gamma = fe.lcm(ge);
    let one = module.algebra().field().one();
    let sf = module.mul_term(&one, &gamma.checked_sub(fe).expect("lcm"), f);
    let sg = module.mul_term(&one, &gamma.checked_sub(ge).expect("lcm"), g);
    let cf = sf.leading_coeff().expect("nonzero").inv();
    let cg = sg.leading_coeff().expect("nonzero").inv();
    Some(module.sub(&sf.scale(&cf), &sg.scale(&cg)))
}

/// Whether every S-vector of `elements` reduces to zero modulo `elements`.
pub fn is_groebner(module: &FreeModule, elements: &[VecElem]) -> bool {
    for i in 0..elements.len() {
        for j in i + 1..elements.len() {
            if let Some(s) = spair(module, &elements[i], &elements[j]) {
                if !reduce(module, &s, elements).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Exponent,
    comp: usize,
    sugar: u64,
}

fn degree(v: &VecElem) -> u64 {
    v.terms()
        .iter()
        .map(|t| t.exp.total_degree())
        .max()
        .unwrap_or(0)
}

/// Working state of the completion: the basis so far with sugar degrees,
/// pending pairs and treated pairs.
struct Completion<'m> {
    module: &'m FreeModule,
    basis: Vec<VecElem>,
    sugar: Vec<u64>,
    pairs: Vec<Pair>,
    done: HashSet<(usize, usize)>,
}

impl Completion<'_> {
    /// Reduces `v` and, if something is left, adds it with its new pairs.
    fn insert(&mut self, v: &VecElem, sugar: u64) {
        let r = reduce(self.module, v, &self.basis);
        if r.is_zero() {
            return;
        }
        let r = r.normalized();
        let sugar = sugar.max(degree(&r));
        let (re, rc) = r.leading().map(|(e, c)| (e.clone(), c)).expect("nonzero");
        let j = self.basis.len();
        for (i, g) in self.basis.iter().enumerate() {
            let (ge, gc) = g.leading().expect("nonzero");
            if gc == rc {
                let lcm = ge.lcm(&re);
                let sugar = (self.sugar[i] + lcm.total_degree() - ge.total_degree())
                    .max(sugar + lcm.total_degree() - re.total_degree());
                self.pairs.push(Pair {
                    i,
                    j,
                    lcm,
                    comp: rc,
                    sugar,
                });
            }
        }
        self.basis.push(r);
        self.sugar.push(sugar);
    }

    /// Buchberger's chain criterion: `(i, j)` is redundant when some `g_k`
    /// in the same component has a leading monomial dividing `lcm(i, j)` and
    /// both `(i, k)` and `(k, j)` have been treated.
    fn chain_criterion(&self, pair: &Pair) -> bool {
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        self.basis.iter().enumerate().any(|(k, g)| {
            if k == pair.i || k == pair.j {
                return false;
            }
            let (ge, gc) = g.leading().expect("nonzero");
            gc == pair.comp
                && ge.divides(&pair.lcm)
                && self.done.contains(&key(pair.i, k))
                && self.done.contains(&key(k, pair.j))
        })
    }
}

/// A left Gröbner basis of `Σ A·gens`, made monic at the end. Pairs are
/// processed by smallest sugar degree, then smallest least common multiple.
pub fn buchberger(module: &FreeModule, gens: &[VecElem]) -> Result<GroebnerBasis, GroebnerError> {
    for g in gens {
        check_rank(module, g)?;
    }
    let mut state = Completion {
        module,
        basis: Vec::new(),
        sugar: Vec::new(),
        pairs: Vec::new(),
        done: HashSet::new(),
    };
    for g in gens.iter().filter(|g| !g.is_zero()) {
        state.insert(g, degree(g));
    }
    while !state.pairs.is_empty() {
        let pairs = &state.pairs;
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (p, q) = (&pairs[a], &pairs[b]);
                p.sugar
                    .cmp(&q.sugar)
                    .then_with(|| module.cmp((&p.lcm, p.comp), (&q.lcm, q.comp)))
                    .then((p.i, p.j).cmp(&(q.i, q.j)))
            })
            .expect("nonempty");
        let pair = state.pairs.swap_remove(best);
        state.done.insert((pair.i, pair.j));
        if state.chain_criterion(&pair) {
            continue;
        }
        let s = spair(module, &state.basis[pair.i], &state.basis[pair.j]).expect("same component");
        state.insert(&s, pair.sugar);
    }
    let elements = state.basis.iter().map(VecElem::monic).collect();
    Ok(GroebnerBasis::from_parts(
        module.clone(),
        elements,
        false,
        Provenance::Buchberger,
    ))
}

/// Buchberger for left ideals given by polynomials.
pub fn ideal_basis(
    algebra: &crate::ValidatedAlgebra,
    gens: &[Poly],
) -> Result<GroebnerBasis, GroebnerError> {
    let module = FreeModule::ideal(algebra);
    let vs: Vec<VecElem> = gens.iter().map(|g| module.from_poly(g)).collect();
    buchberger(&module, &vs)
}

/// Minimal, inter-reduced, monic, sorted by leading monomial descending.
pub fn reduce_basis(gb: &GroebnerBasis) -> GroebnerBasis {
    let module = &gb.module;
    let elements = reduce_elements(module, &gb.elements);
    GroebnerBasis::from_parts(module.clone(), elements, true, gb.provenance_after_reduce())
}

impl GroebnerBasis {
    fn provenance_after_reduce(&self) -> Provenance {
        match self.provenance {
            Provenance::Buchberger => Provenance::Reduced,
            p => p,
        }
    }
}

pub(crate) fn reduce_elements(module: &FreeModule, elements: &[VecElem]) -> Vec<VecElem> {
    let nonzero: Vec<&VecElem> = elements.iter().filter(|g| !g.is_zero()).collect();
    let mut minimal: Vec<VecElem> = Vec::new();
    for (k, g) in nonzero.iter().enumerate() {
        let (ge, gc) = g.leading().expect("nonzero");
        let redundant = nonzero.iter().enumerate().any(|(l, h)| {
            let (he, hc) = h.leading().expect("nonzero");
            l != k && hc == gc && he.divides(ge) && (he != ge || l < k)
        });
        if !redundant {
            minimal.push(g.monic());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<VecElem> = minimal
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != k)
            .map(|(_, h)| h.clone())
            .collect();
        out.push(reduce(module, &minimal[k], &others).monic());
    }
    out.sort_by(|a, b| {
        let (ae, ac) = a.leading().expect("nonzero");
        let (be, bc) = b.leading().expect("nonzero");
        module.cmp((be, bc), (ae, ac))
    });
    out
}

/// Outcome of a membership test.
#[derive(Clone, Debug, PartialEq)]
pub enum Membership {
    NotMember,
    /// `ξ = Σ q_k · G_k`.
    Member(Vec<(Poly, usize)>),
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member(_))
    }
}

pub fn member(gb: &GroebnerBasis, xi: &VecElem) -> Result<Membership, GroebnerError> {
    let d = normal_form(&gb.module, xi, &gb.elements)?;
    Ok(if d.remainder.is_zero() {
        Membership::Member(d.quotients)
    } else {
        Membership::NotMember
    })
}

/// Membership of a polynomial in a rank-one basis.
pub fn member_poly(gb: &GroebnerBasis, f: &Poly) -> Result<Membership, GroebnerError> {
    let v = gb.module.from_poly(&f.resort(gb.module.base_order()));
    member(gb, &v)
}

/// Normal form of a polynomial modulo a rank-one basis.
pub fn normal_form_poly(gb: &GroebnerBasis, f: &Poly) -> Result<Poly, GroebnerError> {
    let v = gb.module.from_poly(&f.resort(gb.module.base_order()));
    let d = normal_form(&gb.module, &v, &gb.elements)?;
    Ok(gb.module.to_poly(&d.remainder))
}

/// Whether two bases generate the same submodule.
pub fn same_submodule(a: &GroebnerBasis, b: &GroebnerBasis) -> bool {
    let inside = |x: &GroebnerBasis, y: &GroebnerBasis| {
        x.elements.iter().all(|g| {
            let v = y.module.adopt(g);
            reduce(&y.module, &v, &y.elements).is_zero()
        })
    };
    inside(a, b) && inside(b, a)
}
