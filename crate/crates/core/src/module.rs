//! Free left modules `A^s = A e_0 ⊕ … ⊕ A e_{s-1}` and their elements.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::ValidatedAlgebra;
use crate::error::GroebnerError;
use crate::field::FieldElem;
use crate::monomial::Exponent;
use crate::order::{ModuleOrder, OrderDescriptor};
use crate::poly::{Poly, Term};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VTerm {
    pub coeff: FieldElem,
    pub exp: Exponent,
    pub comp: usize,
}

/// An element of a free module: terms `c a^α e_i`, strictly descending under
/// the module ordering it was built with. Zero is the empty list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VecElem {
    terms: Vec<VTerm>,
}

impl VecElem {
    pub fn zero() -> Self {
        VecElem::default()
    }

    pub fn terms(&self) -> &[VTerm] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<VTerm> {
        self.terms
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

    pub fn leading_term(&self) -> Option<&VTerm> {
        self.terms.first()
    }

    /// `(exponent, component)` of the leading term.
    pub fn leading(&self) -> Option<(&Exponent, usize)> {
        self.terms.first().map(|t| (&t.exp, t.comp))
    }

    pub fn leading_coeff(&self) -> Option<&FieldElem> {
        self.terms.first().map(|t| &t.coeff)
    }

    pub fn neg(&self) -> VecElem {
        VecElem {
            terms: self
                .terms
                .iter()
                .map(|t| VTerm {
                    coeff: t.coeff.neg(),
                    ..t.clone()
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &FieldElem) -> VecElem {
        if c.is_zero() {
            return VecElem::zero();
        }
        VecElem {
            terms: self
                .terms
                .iter()
                .map(|t| VTerm {
                    coeff: t.coeff.mul(c),
                    ..t.clone()
                })
                .collect(),
        }
    }

    pub fn monic(&self) -> VecElem {
        match self.leading_coeff() {
            Some(c) if !c.is_one() => self.scale(&c.inv()),
            _ => self.clone(),
        }
    }

    /// `(σ, v)` with `self = σ·v`, where `v` has coprime integer
    /// coefficients and a positive leading coefficient. Rational
    /// coefficients only; `None` for the zero vector or over `GF(p)`.
    pub(crate) fn primitive(&self) -> Option<(FieldElem, VecElem)> {
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for t in &self.terms {
            let FieldElem::Rational(q) = &t.coeff else {
                return None;
            };
            den = den.lcm(q.denom());
            num = num.gcd(q.numer());
        }
        if num.is_zero() {
            return None;
        }
        if self.terms[0].coeff.is_negative() {
            num = -num;
        }
        let sigma = BigRational::new(num, den);
        let inv = FieldElem::Rational(sigma.recip());
        Some((FieldElem::Rational(sigma), self.scale(&inv)))
    }

    /// Primitive part over the rationals, monic form over `GF(p)`.
    pub(crate) fn normalized(&self) -> VecElem {
        match self.primitive() {
            Some((_, v)) => v,
            None => self.monic(),
        }
    }

    /// Components that carry at least one term.
    pub fn support(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.terms.iter().map(|t| t.comp).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Removes the leading term.
    pub(crate) fn pop_leading(&mut self) -> Option<VTerm> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    /// Largest component index plus one (0 for the zero vector).
    pub fn max_comp(&self) -> usize {
        self.terms.iter().map(|t| t.comp + 1).max().unwrap_or(0)
    }
}

/// A free module of finite rank over a validated algebra, together with the
/// module ordering its elements are sorted by.
#[derive(Clone, Debug, PartialEq)]
pub struct FreeModule {
    algebra: ValidatedAlgebra,
    rank: usize,
    order: ModuleOrder,
}

impl FreeModule {
    /// The algebra is re-ordered to the ordering the module order induces.
    pub fn new(
        algebra: &ValidatedAlgebra,
        rank: usize,
        order: ModuleOrder,
    ) -> Result<Self, GroebnerError> {
        if order.arity() != algebra.n() {
            return Err(crate::error::OrderError::ArityMismatch {
                expected: algebra.n(),
                got: order.arity(),
            }
            .into());
        }
        if let Some(limit) = order.rank_limit() {
            if limit < rank {
                return Err(GroebnerError::RankMismatch {
                    expected: rank,
                    got: limit,
                });
            }
        }
        let algebra = algebra.with_order(order.base())?;
        Ok(FreeModule {
            algebra,
            rank,
            order,
        })
    }

    /// `A` itself as a rank-one module; left ideals live here.
    pub fn ideal(algebra: &ValidatedAlgebra) -> Self {
        FreeModule {
            algebra: algebra.clone(),
            rank: 1,
            order: ModuleOrder::top(algebra.order().clone()),
        }
    }

    /// `A^rank` under POT over the algebra's own ordering.
    pub fn pot(algebra: &ValidatedAlgebra, rank: usize) -> Self {
        FreeModule {
            algebra: algebra.clone(),
            rank,
            order: ModuleOrder::pot(algebra.order().clone()),
        }
    }

    /// `A^rank` under TOP over the algebra's own ordering.
    pub fn top(algebra: &ValidatedAlgebra, rank: usize) -> Self {
        FreeModule {
            algebra: algebra.clone(),
            rank,
            order: ModuleOrder::top(algebra.order().clone()),
        }
    }

    pub fn algebra(&self) -> &ValidatedAlgebra {
        &self.algebra
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn base_order(&self) -> &OrderDescriptor {
        self.algebra.order()
    }

    /// The same module under another module ordering.
    pub fn with_order(&self, order: ModuleOrder) -> Result<FreeModule, GroebnerError> {
        FreeModule::new(&self.algebra, self.rank, order)
    }

    pub fn cmp(&self, a: (&Exponent, usize), b: (&Exponent, usize)) -> Ordering {
        self.order.cmp(a.0, a.1, b.0, b.1)
    }

    fn sort(&self, terms: &mut [VTerm]) {
        terms.sort_by(|a, b| self.order.cmp(&b.exp, b.comp, &a.exp, a.comp));
    }

    fn collect_terms(&self, acc: HashMap<(Exponent, usize), FieldElem>) -> VecElem {
        let mut terms: Vec<VTerm> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((exp, comp), coeff)| VTerm { coeff, exp, comp })
            .collect();
        self.sort(&mut terms);
        VecElem { terms }
    }

    /// Collects `(coefficient, exponent, component)` triples.
    pub fn vector(&self, terms: impl IntoIterator<Item = (FieldElem, Exponent, usize)>) -> VecElem {
        let mut acc: HashMap<(Exponent, usize), FieldElem> = HashMap::new();
        for (c, e, i) in terms {
            assert!(
                i < self.rank,
                "component {i} out of range for rank {}",
                self.rank
            );
            assert_eq!(e.len(), self.algebra.n(), "exponent length");
            match acc.get_mut(&(e.clone(), i)) {
                Some(v) => *v = v.add(&c),
                None => {
                    acc.insert((e, i), c);
                }
            }
        }
        self.collect_terms(acc)
    }

    /// `(p_0, …, p_{s-1})`; the slice may be shorter than the rank.
    pub fn from_polys(&self, comps: &[Poly]) -> VecElem {
        self.vector(comps.iter().enumerate().flat_map(|(i, p)| {
            p.terms()
                .iter()
                .map(move |t| (t.coeff.clone(), t.exp.clone(), i))
        }))
    }

    /// `f e_i`.
    pub fn embed(&self, f: &Poly, i: usize) -> VecElem {
        self.vector(
            f.terms()
                .iter()
                .map(|t| (t.coeff.clone(), t.exp.clone(), i)),
        )
    }

    /// The basis vector `e_i`.
    pub fn unit(&self, i: usize) -> VecElem {
        self.embed(&self.algebra.one(), i)
    }

    /// Component `i` as a polynomial sorted under the algebra ordering.
    pub fn component(&self, v: &VecElem, i: usize) -> Poly {
        let terms: Vec<(FieldElem, Exponent)> = v
            .terms
            .iter()
            .filter(|t| t.comp == i)
            .map(|t| (t.coeff.clone(), t.exp.clone()))
            .collect();
        Poly::from_terms(terms, self.base_order())
    }

    pub fn components(&self, v: &VecElem) -> Vec<Poly> {
        (0..self.rank).map(|i| self.component(v, i)).collect()
    }

    pub fn add(&self, a: &VecElem, b: &VecElem) -> VecElem {
        self.merge(a, b, false)
    }

    pub fn sub(&self, a: &VecElem, b: &VecElem) -> VecElem {
        self.merge(a, b, true)
    }

    fn merge(&self, a: &VecElem, b: &VecElem, negate_b: bool) -> VecElem {
        let (a, b) = (&a.terms, &b.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let take_b = |t: &VTerm| VTerm {
            coeff: if negate_b {
                t.coeff.neg()
            } else {
                t.coeff.clone()
            },
            ..t.clone()
        };
        while i < a.len() && j < b.len() {
            match self.order.cmp(&a[i].exp, a[i].comp, &b[j].exp, b[j].comp) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(take_b(&b[j]));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_b {
                        a[i].coeff.sub(&b[j].coeff)
                    } else {
                        a[i].coeff.add(&b[j].coeff)
                    };
                    if !c.is_zero() {
                        out.push(VTerm {
                            coeff: c,
                            ..a[i].clone()
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(take_b));
        VecElem { terms: out }
    }

    /// `c a^γ · v`.
    pub fn mul_term(&self, c: &FieldElem, gamma: &Exponent, v: &VecElem) -> VecElem {
        if c.is_zero() {
            return VecElem::zero();
        }
        if gamma.is_zero() {
            return v.scale(c);
        }
        let mut acc: HashMap<(Exponent, usize), FieldElem> = HashMap::new();
        for t in &v.terms {
            let k = c.mul(&t.coeff);
            for (e, d) in self.algebra.mono_terms(gamma, &t.exp).iter() {
                let val = k.mul(d);
                match acc.get_mut(&(e.clone(), t.comp)) {
                    Some(x) => *x = x.add(&val),
                    None => {
                        acc.insert((e.clone(), t.comp), val);
                    }
                }
            }
        }
        self.collect_terms(acc)
    }

    /// `f · v`.
    pub fn left_mul(&self, f: &Poly, v: &VecElem) -> VecElem {
        let mut acc: HashMap<(Exponent, usize), FieldElem> = HashMap::new();
        for s in f.terms() {
            for t in &v.terms {
                let k = s.coeff.mul(&t.coeff);
                for (e, d) in self.algebra.mono_terms(&s.exp, &t.exp).iter() {
                    let val = k.mul(d);
                    match acc.get_mut(&(e.clone(), t.comp)) {
                        Some(x) => *x = x.add(&val),
                        None => {
                            acc.insert((e.clone(), t.comp), val);
                        }
                    }
                }
            }
        }
        self.collect_terms(acc)
    }

    /// `Σ f_k · v_k`.
    pub fn combination<'a>(
        &self,
        pairs: impl IntoIterator<Item = (&'a Poly, &'a VecElem)>,
    ) -> VecElem {
        pairs.into_iter().fold(VecElem::zero(), |acc, (f, v)| {
            self.add(&acc, &self.left_mul(f, v))
        })
    }

    /// Re-sorts an element built under another ordering of the same module.
    pub fn adopt(&self, v: &VecElem) -> VecElem {
        let mut terms = v.terms.clone();
        self.sort(&mut terms);
        VecElem { terms }
    }

    /// Maps every term through `f` into this module; `f` must be injective on
    /// the support.
    pub fn map_terms(
        &self,
        v: &VecElem,
        f: impl Fn(&Exponent, usize) -> (Exponent, usize),
    ) -> VecElem {
        let mut terms: Vec<VTerm> = v
            .terms
            .iter()
            .map(|t| {
                let (exp, comp) = f(&t.exp, t.comp);
                VTerm {
                    coeff: t.coeff.clone(),
                    exp,
                    comp,
                }
            })
            .collect();
        self.sort(&mut terms);
        VecElem { terms }
    }

    /// Whether the element is well formed for this module.
    pub fn contains(&self, v: &VecElem) -> bool {
        let n = self.algebra.n();
        let field = self.algebra.field();
        v.terms.iter().all(|t| {
            t.comp < self.rank && t.exp.len() == n && !t.coeff.is_zero() && t.coeff.field() == field
        }) && v.terms.windows(2).all(|w| {
            self.order.cmp(&w[0].exp, w[0].comp, &w[1].exp, w[1].comp) == Ordering::Greater
        })
    }

    /// A polynomial viewed as a vector in component 0.
    pub fn from_poly(&self, f: &Poly) -> VecElem {
        self.embed(f, 0)
    }

    /// Rank-one elements back to polynomials.
    pub fn to_poly(&self, v: &VecElem) -> Poly {
        let terms = v
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff.clone(),
                exp: t.exp.clone(),
            })
            .collect::<Vec<_>>();
        Poly::from_terms(
            terms.into_iter().map(|t| (t.coeff, t.exp)),
            self.base_order(),
        )
    }

    /// A polynomial for rank one, a tuple `(p_0, …)` otherwise.
    pub fn render(&self, v: &VecElem) -> String {
        if self.rank == 1 {
            return self.algebra.render(&self.to_poly(v));
        }
        let parts: Vec<String> = self
            .components(v)
            .iter()
            .map(|p| self.algebra.render(p))
            .collect();
        format!("({})", parts.join(", "))
    }
}
