//! PBW normal forms of monomial products by relation rewriting.
//!
//! `a^α · a^β` is computed by peeling the last generator `a_k` off `a^α`
//! and pushing it rightwards through `a^β`. Whenever it meets a smaller
//! generator `a_l` the relation `a_k a_l = λ a_l a_k + f_kl` rewrites the
//! inversion. Results are memoised per `(α, β)`; the memo never changes a
//! result, it only avoids recomputation.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::field::{Field, FieldElem};
use crate::monomial::Exponent;
use crate::poly::accumulate;

use super::RelationTable;

/// Unsorted product terms, canonical by `Exponent`'s plain `Ord`.
pub(crate) type Product = Arc<[(Exponent, FieldElem)]>;

#[derive(Debug, Default)]
pub(crate) struct MulCache {
    table: Mutex<HashMap<(Exponent, Exponent), Product>>,
}

impl MulCache {
    fn get(&self, a: &Exponent, b: &Exponent) -> Option<Product> {
        let table = self.table.lock().expect("multiplication cache poisoned");
        table.get(&(a.clone(), b.clone())).cloned()
    }

    fn insert(&self, a: Exponent, b: Exponent, p: Product) {
        let mut table = self.table.lock().expect("multiplication cache poisoned");
        table.insert((a, b), p);
    }

    #[cfg(test)]
    pub(crate) fn len(&self) -> usize {
        self.table.lock().map(|t| t.len()).unwrap_or(0)
    }
}

pub(crate) struct Rewriter<'a> {
    pub(crate) n: usize,
    pub(crate) field: Field,
    pub(crate) relations: &'a RelationTable,
    pub(crate) cache: &'a MulCache,
}

impl Rewriter<'_> {
    /// Normal form of `a^a · a^b`.
    pub(crate) fn mono(&self, a: &Exponent, b: &Exponent) -> Product {
        if a.is_zero() {
            return single(b.clone(), self.field.one());
        }
        if b.is_zero() {
            return single(a.clone(), self.field.one());
        }
        let k = a.last_var().expect("nonzero exponent");
        let l = b.first_var().expect("nonzero exponent");
        if k <= l {
            return single(a.add(b), self.field.one());
        }
        if let Some(hit) = self.cache.get(a, b) {
            return hit;
        }
        let mut acc: HashMap<Exponent, FieldElem> = HashMap::new();
        let ek = Exponent::unit(self.n, k);
        if *a == ek {
            // a_k · a_l · a^{b'} with l < k
            let mut rest = b.clone();
            rest.dec(l);
            let el = Exponent::unit(self.n, l);
            let rel = self.relations.get(k, l);
            // λ a_l (a_k a^{b'})
            for (g, c) in self.mono(&ek, &rest).iter() {
                let c = rel.lambda.mul(c);
                for (h, d) in self.mono(&el, g).iter() {
                    accumulate(&mut acc, h.clone(), c.mul(d));
                }
            }
            // f_kl a^{b'}
            for t in rel.tail.terms() {
                for (h, d) in self.mono(&t.exp, &rest).iter() {
                    accumulate(&mut acc, h.clone(), t.coeff.mul(d));
                }
            }
        } else {
            let mut head = a.clone();
            head.dec(k);
            for (g, c) in self.mono(&ek, b).iter() {
                for (h, d) in self.mono(&head, g).iter() {
                    accumulate(&mut acc, h.clone(), c.mul(d));
                }
            }
        }
        let mut terms: Vec<(Exponent, FieldElem)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|x, y| x.0.cmp(&y.0));
        let product: Product = terms.into();
        self.cache.insert(a.clone(), b.clone(), product.clone());
        product
    }
}

fn single(e: Exponent, c: FieldElem) -> Product {
    Arc::from(vec![(e, c)])
}
