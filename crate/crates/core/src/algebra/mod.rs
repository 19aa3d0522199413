//! Solvable polynomial algebras: presentations, validation and multiplication.
//!
//! An algebra `K[a_1, …, a_n]` is presented by relations
//! `a_j a_i = λ_ji a_i a_j + f_ji` for every `j > i`, where `f_ji` is
//! written in the PBW basis and lies strictly below `a_i a_j`.

mod rewrite;

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{AlgebraError, ClosureFailure};
use crate::field::{Field, FieldElem};
use crate::monomial::Exponent;
use crate::order::OrderDescriptor;
use crate::poly::{accumulate, Poly};
use crate::render;

use rewrite::{MulCache, Rewriter};

/// One relation `a_j a_i = lambda · a_i a_j + tail`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub lambda: FieldElem,
    pub tail: Poly,
}

/// Relations keyed by `(j, i)` with `j > i`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationTable {
    entries: HashMap<(usize, usize), Relation>,
}

impl RelationTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// All pairs commute.
    pub fn commutative(n: usize, field: Field) -> Self {
        let mut t = Self::new();
        for j in 0..n {
            for i in 0..j {
                t.insert(j, i, field.one(), Poly::zero());
            }
        }
        t
    }

    pub fn insert(&mut self, j: usize, i: usize, lambda: FieldElem, tail: Poly) {
        self.entries.insert((j, i), Relation { lambda, tail });
    }

    pub fn try_get(&self, j: usize, i: usize) -> Option<&Relation> {
        self.entries.get(&(j, i))
    }

    pub(crate) fn get(&self, j: usize, i: usize) -> &Relation {
        &self.entries[&(j, i)]
    }

    pub fn contains(&self, j: usize, i: usize) -> bool {
        self.entries.contains_key(&(j, i))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Pairs in increasing `(j, i)` order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<_> = self.entries.keys().copied().collect();
        v.sort_unstable();
        v
    }

    fn resorted(&self, ord: &OrderDescriptor) -> Self {
        RelationTable {
            entries: self
                .entries
                .iter()
                .map(|(&k, r)| {
                    (
                        k,
                        Relation {
                            lambda: r.lambda.clone(),
                            tail: r.tail.resort(ord),
                        },
                    )
                })
                .collect(),
        }
    }
}

/// An unchecked presentation.
#[derive(Clone, Debug)]
pub struct AlgebraDef {
    pub names: Vec<String>,
    pub field: Field,
    pub relations: RelationTable,
    pub order: OrderDescriptor,
}

impl AlgebraDef {
    /// A presentation with an empty relation table.
    pub fn new<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        field: Field,
        order: OrderDescriptor,
    ) -> Self {
        AlgebraDef {
            names: names.into_iter().map(Into::into).collect(),
            field,
            relations: RelationTable::new(),
            order,
        }
    }

    /// All generators commute.
    pub fn commutative<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        field: Field,
        order: OrderDescriptor,
    ) -> Self {
        let mut def = Self::new(names, field, order);
        def.relations = RelationTable::commutative(def.n(), field);
        def
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    /// Sets `a_j a_i = lambda a_i a_j + tail` (with `j > i`). Tail terms are
    /// `(coefficient, exponent)` pairs.
    pub fn relation(
        mut self,
        j: usize,
        i: usize,
        lambda: FieldElem,
        tail: impl IntoIterator<Item = (FieldElem, Exponent)>,
    ) -> Self {
        let tail = Poly::from_terms(tail, &self.order);
        self.relations.insert(j, i, lambda, tail);
        self
    }

    /// Fills every missing pair with the commuting relation; returns the
    /// pairs that were filled.
    pub fn fill_commuting(&mut self) -> Vec<(usize, usize)> {
        let mut filled = Vec::new();
        for j in 0..self.n() {
            for i in 0..j {
                if !self.relations.contains(j, i) {
                    self.relations.insert(j, i, self.field.one(), Poly::zero());
                    filled.push((j, i));
                }
            }
        }
        filled
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }
}

/// Which checks a presentation passed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub lambda_nonzero: bool,
    pub lm_descent: bool,
    pub overlap_confluence: bool,
    pub overlaps_checked: usize,
}

struct Inner {
    def: AlgebraDef,
    report: ValidationReport,
    cache: Arc<MulCache>,
}

/// A presentation that passed `validate_algebra`. Cheap to clone and safe
/// to share between threads.
#[derive(Clone)]
pub struct ValidatedAlgebra {
    inner: Arc<Inner>,
}

impl fmt::Debug for ValidatedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ValidatedAlgebra")
            .field("names", &self.inner.def.names)
            .field("field", &self.inner.def.field)
            .field("order", &self.inner.def.order)
            .finish()
    }
}

impl PartialEq for ValidatedAlgebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.def.names == other.inner.def.names
                && self.inner.def.field == other.inner.def.field
                && self.inner.def.order == other.inner.def.order
                && self.inner.def.relations == other.inner.def.relations)
    }
}

/// Checks a presentation: nonzero `λ`, every `f_ji` below `a_i a_j`, and
/// agreement of both bracketings of every generator triple `a_k a_j a_i`.
pub fn validate_algebra(def: AlgebraDef) -> Result<ValidatedAlgebra, AlgebraError> {
    check_shape(&def)?;
    let n = def.n();
    let mut report = ValidationReport::default();

    for (j, i) in def.relations.pairs() {
        if def.relations.get(j, i).lambda.is_zero() {
            return Err(AlgebraError::ZeroLambda { j, i });
        }
    }
    report.lambda_nonzero = true;

    check_descent(&def.relations, &def.order, n)?;
    report.lm_descent = true;

    let alg = ValidatedAlgebra {
        inner: Arc::new(Inner {
            def,
            report: report.clone(),
            cache: Arc::new(MulCache::default()),
        }),
    };
    let mut checked = 0;
    for k in 0..n {
        for j in 0..k {
            for i in 0..j {
                let (left, right) = alg.overlap(k, j, i);
                if left != right {
                    return Err(AlgebraError::OverlapInconsistent {
                        k,
                        j,
                        i,
                        left: alg.render(&left),
                        right: alg.render(&right),
                    });
                }
                checked += 1;
            }
        }
    }
    report.overlap_confluence = true;
    report.overlaps_checked = checked;
    let inner = Arc::try_unwrap(alg.inner).unwrap_or_else(|_| unreachable!("no other handles"));
    Ok(ValidatedAlgebra {
        inner: Arc::new(Inner { report, ..inner }),
    })
}

fn check_shape(def: &AlgebraDef) -> Result<(), AlgebraError> {
    let n = def.n();
    let mut seen = HashSet::new();
    if def
        .names
        .iter()
        .any(|s| s.is_empty() || !seen.insert(s.as_str()))
    {
        return Err(AlgebraError::BadNames);
    }
    def.order.check()?;
    if def.order.arity() != n {
        return Err(crate::error::OrderError::ArityMismatch {
            expected: n,
            got: def.order.arity(),
        }
        .into());
    }
    for j in 0..n {
        for i in 0..j {
            if !def.relations.contains(j, i) {
                return Err(AlgebraError::IncompleteRelationTable { j, i });
            }
        }
    }
    for (j, i) in def.relations.pairs() {
        let r = def.relations.get(j, i);
        let bad = j >= n
            || i >= j
            || r.lambda.field() != def.field
            || r.tail
                .terms()
                .iter()
                .any(|t| t.exp.len() != n || t.coeff.field() != def.field)
            || !r.tail.is_canonical(&def.order);
        if bad {
            return Err(AlgebraError::MalformedRelation { j, i });
        }
    }
    Ok(())
}

fn check_descent(rel: &RelationTable, ord: &OrderDescriptor, n: usize) -> Result<(), AlgebraError> {
    for (j, i) in rel.pairs() {
        if let Some(lm) = rel.get(j, i).tail.leading_exponent() {
            let mut target = Exponent::unit(n, i);
            target.inc(j);
            if ord.cmp(lm, &target) != Ordering::Less {
                return Err(AlgebraError::LeadingMonomialNotSmaller { j, i });
            }
        }
    }
    Ok(())
}

impl ValidatedAlgebra {
    pub fn def(&self) -> &AlgebraDef {
        &self.inner.def
    }

    pub fn report(&self) -> &ValidationReport {
        &self.inner.report
    }

    pub fn n(&self) -> usize {
        self.inner.def.n()
    }

    pub fn names(&self) -> &[String] {
        &self.inner.def.names
    }

    pub fn field(&self) -> Field {
        self.inner.def.field
    }

    pub fn order(&self) -> &OrderDescriptor {
        &self.inner.def.order
    }

    pub fn relations(&self) -> &RelationTable {
        &self.inner.def.relations
    }

    #[cfg(test)]
    pub(crate) fn cached_products(&self) -> usize {
        self.inner.cache.len()
    }

    fn rewriter(&self) -> Rewriter<'_> {
        Rewriter {
            n: self.n(),
            field: self.field(),
            relations: &self.inner.def.relations,
            cache: &self.inner.cache,
        }
    }

    /// PBW normal form of `a^α · a^β`.
    pub fn mul_mono(&self, alpha: &Exponent, beta: &Exponent) -> Poly {
        assert_eq!(alpha.len(), self.n(), "exponent length");
        assert_eq!(beta.len(), self.n(), "exponent length");
        let prod = self.rewriter().mono(alpha, beta);
        Poly::from_terms(
            prod.iter().map(|(e, c)| (c.clone(), e.clone())),
            self.order(),
        )
    }

    pub(crate) fn mono_terms(
        &self,
        alpha: &Exponent,
        beta: &Exponent,
    ) -> Arc<[(Exponent, FieldElem)]> {
        self.rewriter().mono(alpha, beta)
    }

    /// `f · g`.
    pub fn mul(&self, f: &Poly, g: &Poly) -> Poly {
        let rw = self.rewriter();
        let mut acc = HashMap::new();
        for s in f.terms() {
            for t in g.terms() {
                let c = s.coeff.mul(&t.coeff);
                for (e, d) in rw.mono(&s.exp, &t.exp).iter() {
                    accumulate(&mut acc, e.clone(), c.mul(d));
                }
            }
        }
        Poly::from_map(acc, self.order())
    }

    pub fn add(&self, f: &Poly, g: &Poly) -> Poly {
        f.add(g, self.order())
    }

    pub fn sub(&self, f: &Poly, g: &Poly) -> Poly {
        f.sub(g, self.order())
    }

    pub fn scale(&self, f: &Poly, c: &FieldElem) -> Poly {
        f.scale(c)
    }

    pub fn one(&self) -> Poly {
        Poly::monomial(self.field().one(), Exponent::zero(self.n()))
    }

    pub fn constant(&self, c: FieldElem) -> Poly {
        Poly::monomial(c, Exponent::zero(self.n()))
    }

    /// The generator `a_k`.
    pub fn generator(&self, k: usize) -> Poly {
        Poly::monomial(self.field().one(), Exponent::unit(self.n(), k))
    }

    pub fn monomial(&self, c: FieldElem, e: Exponent) -> Poly {
        Poly::monomial(c, e)
    }

    /// Builds a polynomial from `(coefficient, exponent)` pairs.
    pub fn poly(&self, terms: impl IntoIterator<Item = (FieldElem, Exponent)>) -> Poly {
        Poly::from_terms(terms, self.order())
    }

    /// Builds a polynomial from integer coefficients.
    pub fn poly_i64<const N: usize>(&self, terms: &[(i64, [u32; N])]) -> Poly {
        let f = self.field();
        self.poly(
            terms
                .iter()
                .map(|(c, e)| (f.from_i64(*c), Exponent::from(*e))),
        )
    }

    pub fn render(&self, f: &Poly) -> String {
        render::poly(f, self.names())
    }

    /// Both bracketings `(a_k a_j) a_i` and `a_k (a_j a_i)` in normal form.
    pub fn overlap(&self, k: usize, j: usize, i: usize) -> (Poly, Poly) {
        let (gk, gj, gi) = (self.generator(k), self.generator(j), self.generator(i));
        let kj = self.mul(&gk, &gj);
        let ji = self.mul(&gj, &gi);
        (self.mul(&kj, &gi), self.mul(&gk, &ji))
    }

    /// The same algebra under another ordering. Only the leading-monomial
    /// condition depends on the ordering, so only that is re-checked.
    pub fn with_order(&self, order: OrderDescriptor) -> Result<ValidatedAlgebra, AlgebraError> {
        if order == *self.order() {
            return Ok(self.clone());
        }
        order.check()?;
        if order.arity() != self.n() {
            return Err(crate::error::OrderError::ArityMismatch {
                expected: self.n(),
                got: order.arity(),
            }
            .into());
        }
        let relations = self.relations().resorted(&order);
        check_descent(&relations, &order, self.n())?;
        Ok(ValidatedAlgebra {
            inner: Arc::new(Inner {
                def: AlgebraDef {
                    names: self.names().to_vec(),
                    field: self.field(),
                    relations,
                    order,
                },
                report: self.inner.report.clone(),
                cache: self.inner.cache.clone(),
            }),
        })
    }

    /// `A[t]` with `t` central, ordered so the `t`-degree dominates.
    pub fn extend_with_t(&self) -> ValidatedAlgebra {
        let n = self.n();
        let mut names = self.names().to_vec();
        names.push(fresh_name("t", &names));
        let order = OrderDescriptor::t_order(self.order().clone());
        let mut relations = RelationTable::new();
        for (j, i) in self.relations().pairs() {
            let r = self.relations().get(j, i);
            let tail = r.tail.map_exponents(&order, |e| e.extend(&[0]));
            relations.insert(j, i, r.lambda.clone(), tail);
        }
        for i in 0..n {
            relations.insert(n, i, self.field().one(), Poly::zero());
        }
        let def = AlgebraDef {
            names,
            field: self.field(),
            relations,
            order,
        };
        validate_algebra(def).expect("a central extension of a solvable algebra is solvable")
    }

    /// `A ⊗ B` under the product ordering; the generators of `B` follow
    /// those of `A` and commute with them.
    pub fn tensor(&self, other: &ValidatedAlgebra) -> Result<ValidatedAlgebra, AlgebraError> {
        if self.field() != other.field() {
            return Err(AlgebraError::FieldMismatch);
        }
        let (n, m) = (self.n(), other.n());
        let mut names = self.names().to_vec();
        for s in other.names() {
            let name = fresh_name(s, &names);
            names.push(name);
        }
        let order = OrderDescriptor::product_order(self.order().clone(), other.order().clone());
        let mut relations = RelationTable::new();
        for (j, i) in self.relations().pairs() {
            let r = self.relations().get(j, i);
            let tail = r.tail.map_exponents(&order, |e| e.extend(&vec![0; m]));
            relations.insert(j, i, r.lambda.clone(), tail);
        }
        for (j, i) in other.relations().pairs() {
            let r = other.relations().get(j, i);
            let tail = r
                .tail
                .map_exponents(&order, |e| Exponent::zero(n).extend(e.as_slice()));
            relations.insert(j + n, i + n, r.lambda.clone(), tail);
        }
        for j in n..n + m {
            for i in 0..n {
                relations.insert(j, i, self.field().one(), Poly::zero());
            }
        }
        validate_algebra(AlgebraDef {
            names,
            field: self.field(),
            relations,
            order,
        })
    }

    /// Whether the relations among the generators in `keep` stay inside the
    /// span of monomials in `keep`. Reports the first offending monomial.
    pub fn subalgebra_closure_check(&self, keep: &[usize]) -> Result<(), ClosureFailure> {
        let mask = self.mask(keep);
        for (j, i) in self.relations().pairs() {
            if !(mask[j] && mask[i]) {
                continue;
            }
            for t in self.relations().get(j, i).tail.terms() {
                if !t.exp.supported_on(&mask) {
                    return Err(ClosureFailure {
                        j,
                        i,
                        monomial: t.exp.clone(),
                    });
                }
            }
        }
        Ok(())
    }

    /// The subalgebra on the generators in `keep` (sorted ascending), with
    /// the restricted ordering. Requires the closure check to pass.
    pub fn subalgebra(
        &self,
        keep: &[usize],
    ) -> Result<ValidatedAlgebra, crate::error::EliminationError> {
        let mut slots = keep.to_vec();
        slots.sort_unstable();
        slots.dedup();
        self.subalgebra_closure_check(&slots)
            .map_err(crate::error::EliminationError::ClosureFailure)?;
        let order = OrderDescriptor::restrict(self.order().clone(), slots.clone());
        let names: Vec<String> = slots.iter().map(|&k| self.names()[k].clone()).collect();
        let mut relations = RelationTable::new();
        for (a, &j) in slots.iter().enumerate() {
            for (b, &i) in slots.iter().enumerate().take(a) {
                let r = self.relations().get(j, i);
                let tail = r.tail.map_exponents(&order, |e| e.select(&slots));
                relations.insert(a, b, r.lambda.clone(), tail);
            }
        }
        Ok(validate_algebra(AlgebraDef {
            names,
            field: self.field(),
            relations,
            order,
        })?)
    }

    pub(crate) fn mask(&self, keep: &[usize]) -> Vec<bool> {
        let mut mask = vec![false; self.n()];
        for &k in keep {
            mask[k] = true;
        }
        mask
    }

    /// Every relation tail has degree at most two and the ordering is a
    /// degree ordering with unit weights.
    pub fn is_quadric_graded(&self) -> bool {
        self.order().is_standard_graded()
            && self
                .relations()
                .pairs()
                .into_iter()
                .all(|(j, i)| self.relations().get(j, i).tail.degree().unwrap_or(0) <= 2)
    }
}

fn fresh_name(base: &str, taken: &[String]) -> String {
    let mut name = base.to_string();
    while taken.iter().any(|s| s == &name) {
        name.push('\'');
    }
    name
}
