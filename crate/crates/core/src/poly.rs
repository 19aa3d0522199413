//! Sparse polynomials in the PBW basis.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::field::FieldElem;
use crate::monomial::Exponent;
use crate::order::OrderDescriptor;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: FieldElem,
    pub exp: Exponent,
}

/// A polynomial as a list of terms sorted strictly descending under the
/// ordering it was built with. Zero is the empty list.
///
/// A `Poly` does not remember its ordering; every operation that needs one
/// takes it explicitly (usually through a `ValidatedAlgebra`).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: Vec<Term>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn monomial(coeff: FieldElem, exp: Exponent) -> Self {
        if coeff.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: vec![Term { coeff, exp }],
        }
    }

    /// Collects arbitrary terms: merges duplicates, drops zeros, sorts.
    pub fn from_terms<I>(terms: I, ord: &OrderDescriptor) -> Self
    where
        I: IntoIterator<Item = (FieldElem, Exponent)>,
    {
        let mut acc: HashMap<Exponent, FieldElem> = HashMap::new();
        for (c, e) in terms {
            accumulate(&mut acc, e, c);
        }
        Self::from_map(acc, ord)
    }

    pub(crate) fn from_map(acc: HashMap<Exponent, FieldElem>, ord: &OrderDescriptor) -> Self {
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(exp, coeff)| Term { coeff, exp })
            .collect();
        terms.sort_by(|a, b| ord.cmp(&b.exp, &a.exp));
        Poly { terms }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
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

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_exponent(&self) -> Option<&Exponent> {
        self.terms.first().map(|t| &t.exp)
    }

    pub fn leading_coeff(&self) -> Option<&FieldElem> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Whether the polynomial is a nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].exp.is_zero()
    }

    pub fn coeff_of(&self, e: &Exponent) -> Option<&FieldElem> {
        self.terms.iter().find(|t| &t.exp == e).map(|t| &t.coeff)
    }

    /// Total degree, `None` for zero.
    pub fn degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.exp.total_degree()).max()
    }

    pub fn add(&self, other: &Poly, ord: &OrderDescriptor) -> Poly {
        merge(&self.terms, &other.terms, ord, false)
    }

    pub fn sub(&self, other: &Poly, ord: &OrderDescriptor) -> Poly {
        merge(&self.terms, &other.terms, ord, true)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.neg(),
                    exp: t.exp.clone(),
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &FieldElem) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.mul(c),
                    exp: t.exp.clone(),
                })
                .collect(),
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            Some(c) if !c.is_one() => self.scale(&c.inv()),
            _ => self.clone(),
        }
    }

    /// Re-sorts under a different ordering.
    pub fn resort(&self, ord: &OrderDescriptor) -> Poly {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| ord.cmp(&b.exp, &a.exp));
        Poly { terms }
    }

    /// Applies an exponent map that is injective on the support.
    pub fn map_exponents(&self, ord: &OrderDescriptor, f: impl Fn(&Exponent) -> Exponent) -> Poly {
        let mut terms: Vec<Term> = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff.clone(),
                exp: f(&t.exp),
            })
            .collect();
        terms.sort_by(|a, b| ord.cmp(&b.exp, &a.exp));
        Poly { terms }
    }

    /// Whether the terms are strictly descending under `ord` with no zeros.
    pub fn is_canonical(&self, ord: &OrderDescriptor) -> bool {
        self.terms.iter().all(|t| !t.coeff.is_zero())
            && self
                .terms
                .windows(2)
                .all(|w| ord.cmp(&w[0].exp, &w[1].exp) == Ordering::Greater)
    }
}

pub(crate) fn accumulate(acc: &mut HashMap<Exponent, FieldElem>, e: Exponent, c: FieldElem) {
    match acc.get_mut(&e) {
        Some(v) => *v = v.add(&c),
        None => {
            acc.insert(e, c);
        }
    }
}

fn merge(a: &[Term], b: &[Term], ord: &OrderDescriptor, negate_b: bool) -> Poly {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let take_b = |t: &Term| Term {
        coeff: if negate_b {
            t.coeff.neg()
        } else {
            t.coeff.clone()
        },
        exp: t.exp.clone(),
    };
    while i < a.len() && j < b.len() {
        match ord.cmp(&a[i].exp, &b[j].exp) {
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
                    out.push(Term {
                        coeff: c,
                        exp: a[i].exp.clone(),
                    });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(take_b));
    Poly { terms: out }
}
