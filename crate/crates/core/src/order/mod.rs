//! Monomial orderings on the PBW basis and on free-module bases.
//!
//! Every descriptor is a plain value. Comparison never consults an algebra:
//! a PBW monomial is just its exponent vector.

mod module;

pub use module::{module_elim_order, ModuleElimKind, ModuleOrder};

use std::cmp::Ordering;

use smallvec::SmallVec;

use crate::error::OrderError;
use crate::monomial::Exponent;

type Scratch = SmallVec<[u32; 8]>;

/// A monomial ordering on exponent vectors of a fixed arity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrderDescriptor {
    /// Lexicographic; `precedence[0]` is the most significant generator.
    Lex(Vec<usize>),
    /// Weighted degree, ties broken lexicographically by `precedence`.
    DegLex {
        weights: Vec<u32>,
        precedence: Vec<usize>,
    },
    /// Weighted degree, ties broken reverse-lexicographically: the monomial
    /// with the smaller exponent in the last generator of `precedence` wins.
    DegRevLex {
        weights: Vec<u32>,
        precedence: Vec<usize>,
    },
    /// Weighted degree, ties broken by an arbitrary order.
    Weighted {
        weights: Vec<u32>,
        tie: Box<OrderDescriptor>,
    },
    /// Block elimination order: compare the part outside `keep` first, then
    /// the part inside `keep`; both parts padded with zeros.
    ElimBlock {
        complement: Box<OrderDescriptor>,
        subset: Box<OrderDescriptor>,
        keep: Vec<bool>,
    },
    /// The order on `A[t]`: the trailing slot is `t`, and its degree dominates.
    TExtension(Box<OrderDescriptor>),
    /// Tensor product order: first `split` slots under `first`, rest under `second`.
    Product {
        first: Box<OrderDescriptor>,
        second: Box<OrderDescriptor>,
        split: usize,
    },
    /// Restriction of `ambient` to exponents supported on `slots`, re-indexed
    /// so that slot `k` of the short vector is `slots[k]` of the ambient one.
    Restricted {
        ambient: Box<OrderDescriptor>,
        slots: Vec<usize>,
    },
}

impl OrderDescriptor {
    pub fn lex(n: usize) -> Self {
        OrderDescriptor::Lex((0..n).collect())
    }

    pub fn deglex(n: usize) -> Self {
        OrderDescriptor::DegLex {
            weights: vec![1; n],
            precedence: (0..n).collect(),
        }
    }

    pub fn degrevlex(n: usize) -> Self {
        OrderDescriptor::DegRevLex {
            weights: vec![1; n],
            precedence: (0..n).collect(),
        }
    }

    pub fn weighted(weights: Vec<u32>, tie: OrderDescriptor) -> Self {
        OrderDescriptor::Weighted {
            weights,
            tie: Box::new(tie),
        }
    }

    /// The ordering of `A[t]` built from the ordering of `A`.
    pub fn t_order(base: OrderDescriptor) -> Self {
        OrderDescriptor::TExtension(Box::new(base))
    }

    pub fn product_order(first: OrderDescriptor, second: OrderDescriptor) -> Self {
        let split = first.arity();
        OrderDescriptor::Product {
            first: Box::new(first),
            second: Box::new(second),
            split,
        }
    }

    pub fn restrict(ambient: OrderDescriptor, slots: Vec<usize>) -> Self {
        OrderDescriptor::Restricted {
            ambient: Box::new(ambient),
            slots,
        }
    }

    /// Number of exponent slots this ordering compares.
    pub fn arity(&self) -> usize {
        match self {
            OrderDescriptor::Lex(p) => p.len(),
            OrderDescriptor::DegLex { weights, .. }
            | OrderDescriptor::DegRevLex { weights, .. }
            | OrderDescriptor::Weighted { weights, .. } => weights.len(),
            OrderDescriptor::ElimBlock { keep, .. } => keep.len(),
            OrderDescriptor::TExtension(inner) => inner.arity() + 1,
            OrderDescriptor::Product { first, second, .. } => first.arity() + second.arity(),
            OrderDescriptor::Restricted { slots, .. } => slots.len(),
        }
    }

    /// Checks the descriptor is internally consistent.
    pub fn check(&self) -> Result<(), OrderError> {
        match self {
            OrderDescriptor::Lex(p) => check_perm(p),
            OrderDescriptor::DegLex {
                weights,
                precedence,
            }
            | OrderDescriptor::DegRevLex {
                weights,
                precedence,
            } => {
                check_weights(weights)?;
                check_perm(precedence)?;
                if weights.len() != precedence.len() {
                    return Err(OrderError::ArityMismatch {
                        expected: weights.len(),
                        got: precedence.len(),
                    });
                }
                Ok(())
            }
            OrderDescriptor::Weighted { weights, tie } => {
                check_weights(weights)?;
                tie.check()?;
                expect_arity(tie, weights.len())
            }
            OrderDescriptor::ElimBlock {
                complement,
                subset,
                keep,
            } => {
                complement.check()?;
                subset.check()?;
                expect_arity(complement, keep.len())?;
                expect_arity(subset, keep.len())?;
                if keep.iter().all(|&k| k) || keep.iter().all(|&k| !k) {
                    return Err(OrderError::EmptyOrFullSubset);
                }
                Ok(())
            }
            OrderDescriptor::TExtension(inner) => inner.check(),
            OrderDescriptor::Product {
                first,
                second,
                split,
            } => {
                first.check()?;
                second.check()?;
                expect_arity(first, *split)
            }
            OrderDescriptor::Restricted { ambient, slots } => {
                ambient.check()?;
                let n = ambient.arity();
                let mut seen = vec![false; n];
                for &s in slots {
                    if s >= n || seen[s] {
                        return Err(OrderError::Invalid(format!(
                            "restriction slots {slots:?} are not distinct slots below {n}"
                        )));
                    }
                    seen[s] = true;
                }
                Ok(())
            }
        }
    }

    /// Total-order verdict on two exponents.
    pub fn compare(&self, a: &Exponent, b: &Exponent) -> Result<Ordering, OrderError> {
        let n = self.arity();
        for e in [a, b] {
            if e.len() != n {
                return Err(OrderError::ArityMismatch {
                    expected: n,
                    got: e.len(),
                });
            }
        }
        Ok(self.cmp_slices(a.as_slice(), b.as_slice()))
    }

    /// Unchecked comparison; lengths must equal `arity()`.
    pub fn cmp(&self, a: &Exponent, b: &Exponent) -> Ordering {
        debug_assert_eq!(a.len(), self.arity());
        debug_assert_eq!(b.len(), self.arity());
        self.cmp_slices(a.as_slice(), b.as_slice())
    }

    pub(crate) fn cmp_slices(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            OrderDescriptor::Lex(p) => lex(p, a, b),
            OrderDescriptor::DegLex {
                weights,
                precedence,
            } => wdeg(weights, a)
                .cmp(&wdeg(weights, b))
                .then_with(|| lex(precedence, a, b)),
            OrderDescriptor::DegRevLex {
                weights,
                precedence,
            } => wdeg(weights, a).cmp(&wdeg(weights, b)).then_with(|| {
                for &k in precedence.iter().rev() {
                    if a[k] != b[k] {
                        return b[k].cmp(&a[k]);
                    }
                }
                Ordering::Equal
            }),
            OrderDescriptor::Weighted { weights, tie } => wdeg(weights, a)
                .cmp(&wdeg(weights, b))
                .then_with(|| tie.cmp_slices(a, b)),
            OrderDescriptor::ElimBlock {
                complement,
                subset,
                keep,
            } => {
                let outer = complement.cmp_slices(&mask(a, keep, false), &mask(b, keep, false));
                outer.then_with(|| subset.cmp_slices(&mask(a, keep, true), &mask(b, keep, true)))
            }
            OrderDescriptor::TExtension(inner) => {
                let n = a.len() - 1;
                a[n].cmp(&b[n])
                    .then_with(|| inner.cmp_slices(&a[..n], &b[..n]))
            }
            OrderDescriptor::Product {
                first,
                second,
                split,
            } => first
                .cmp_slices(&a[..*split], &b[..*split])
                .then_with(|| second.cmp_slices(&a[*split..], &b[*split..])),
            OrderDescriptor::Restricted { ambient, slots } => {
                let n = ambient.arity();
                ambient.cmp_slices(&embed(a, slots, n), &embed(b, slots, n))
            }
        }
    }

    /// Whether this is a degree ordering with every generator of weight one.
    pub fn is_standard_graded(&self) -> bool {
        match self {
            OrderDescriptor::DegLex { weights, .. }
            | OrderDescriptor::DegRevLex { weights, .. }
            | OrderDescriptor::Weighted { weights, .. } => weights.iter().all(|&w| w == 1),
            _ => false,
        }
    }
}

/// The block elimination order of `base` with respect to the generators in
/// `keep`: anything involving a generator outside `keep` is larger than
/// everything supported on `keep`.
pub fn elim_order(base: &OrderDescriptor, keep: &[usize]) -> Result<OrderDescriptor, OrderError> {
    let n = base.arity();
    let mut mask = vec![false; n];
    for &k in keep {
        if k >= n {
            return Err(OrderError::ArityMismatch {
                expected: n,
                got: k + 1,
            });
        }
        mask[k] = true;
    }
    if mask.iter().all(|&m| m) || mask.iter().all(|&m| !m) {
        return Err(OrderError::EmptyOrFullSubset);
    }
    Ok(OrderDescriptor::ElimBlock {
        complement: Box::new(base.clone()),
        subset: Box::new(base.clone()),
        keep: mask,
    })
}

fn lex(precedence: &[usize], a: &[u32], b: &[u32]) -> Ordering {
    for &k in precedence {
        match a[k].cmp(&b[k]) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

fn wdeg(weights: &[u32], a: &[u32]) -> u64 {
    a.iter()
        .zip(weights)
        .map(|(&x, &w)| x as u64 * w as u64)
        .sum()
}

fn mask(a: &[u32], keep: &[bool], side: bool) -> Scratch {
    a.iter()
        .zip(keep)
        .map(|(&x, &k)| if k == side { x } else { 0 })
        .collect()
}

fn embed(a: &[u32], slots: &[usize], n: usize) -> Scratch {
    let mut v: Scratch = SmallVec::from_elem(0, n);
    for (k, &s) in slots.iter().enumerate() {
        v[s] = a[k];
    }
    v
}

fn check_perm(p: &[usize]) -> Result<(), OrderError> {
    let mut seen = vec![false; p.len()];
    for &k in p {
        if k >= p.len() || seen[k] {
            return Err(OrderError::Invalid(format!(
                "{p:?} is not a permutation of the generators"
            )));
        }
        seen[k] = true;
    }
    Ok(())
}

fn check_weights(w: &[u32]) -> Result<(), OrderError> {
    if w.contains(&0) {
        return Err(OrderError::Invalid("weights must be positive".into()));
    }
    Ok(())
}

fn expect_arity(o: &OrderDescriptor, n: usize) -> Result<(), OrderError> {
    if o.arity() != n {
        return Err(OrderError::ArityMismatch {
            expected: n,
            got: o.arity(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn e<const N: usize>(v: [u32; N]) -> Exponent {
        Exponent::from(v)
    }

    #[test]
    fn lex_first_generator_dominates() {
        let o = OrderDescriptor::lex(2);
        assert_eq!(o.compare(&e([0, 3]), &e([1, 0])).unwrap(), Ordering::Less);
    }

    #[test]
    fn deglex_degree_dominates() {
        let o = OrderDescriptor::deglex(2);
        assert_eq!(o.compare(&e([1, 1]), &e([0, 3])).unwrap(), Ordering::Less);
        assert_eq!(o.compare(&e([1, 1]), &e([2, 0])).unwrap(), Ordering::Less);
    }

    #[test]
    fn degrevlex_tie_break() {
        let o = OrderDescriptor::degrevlex(3);
        // x*z vs y^2: same degree, smaller z-exponent is bigger
        assert_eq!(
            o.compare(&e([1, 0, 1]), &e([0, 2, 0])).unwrap(),
            Ordering::Less
        );
        let dl = OrderDescriptor::deglex(3);
        assert_eq!(
            dl.compare(&e([1, 0, 1]), &e([0, 2, 0])).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn t_extension_t_degree_dominates() {
        let o = OrderDescriptor::t_order(OrderDescriptor::deglex(1));
        assert_eq!(o.compare(&e([5, 0]), &e([0, 1])).unwrap(), Ordering::Less);
        assert_eq!(
            o.compare(&e([1, 1]), &e([5, 0])).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn arity_mismatch() {
        let o = OrderDescriptor::lex(2);
        assert!(matches!(
            o.compare(&e([1]), &e([1, 0])),
            Err(OrderError::ArityMismatch {
                expected: 2,
                got: 1
            })
        ));
    }

    #[test]
    fn elimination_keeping_second_generator() {
        let o = elim_order(&OrderDescriptor::deglex(2), &[1]).unwrap();
        assert_eq!(o.compare(&e([0, 5]), &e([1, 0])).unwrap(), Ordering::Less);
    }

    #[test]
    fn elimination_two_block_chain() {
        // n=3, keep {a_2, a_3}, base lex a_1 > a_2 > a_3
        let o = elim_order(&OrderDescriptor::lex(3), &[1, 2]).unwrap();
        let a = e([0, 1, 4]);
        let b = e([1, 0, 1]);
        let c = e([1, 1, 0]);
        assert_eq!(o.compare(&a, &b).unwrap(), Ordering::Less);
        assert_eq!(o.compare(&b, &c).unwrap(), Ordering::Less);
    }

    #[test]
    fn elimination_rejects_empty_or_full() {
        let base = OrderDescriptor::lex(2);
        assert_eq!(elim_order(&base, &[]), Err(OrderError::EmptyOrFullSubset));
        assert_eq!(
            elim_order(&base, &[0, 1]),
            Err(OrderError::EmptyOrFullSubset)
        );
    }

    #[test]
    fn product_order_first_factor_dominates() {
        let o =
            OrderDescriptor::product_order(OrderDescriptor::deglex(1), OrderDescriptor::deglex(1));
        // 1 (x) b^3 < a (x) b^0
        assert_eq!(o.compare(&e([0, 3]), &e([1, 0])).unwrap(), Ordering::Less);
    }

    #[test]
    fn restriction_reindexes() {
        let o = OrderDescriptor::restrict(OrderDescriptor::lex(3), vec![0, 2]);
        assert_eq!(o.arity(), 2);
        assert_eq!(
            o.compare(&e([1, 0]), &e([0, 9])).unwrap(),
            Ordering::Greater
        );
        o.check().unwrap();
        assert!(
            OrderDescriptor::restrict(OrderDescriptor::lex(3), vec![0, 0])
                .check()
                .is_err()
        );
    }

    #[test]
    fn descriptors_validate() {
        assert!(OrderDescriptor::Lex(vec![0, 0]).check().is_err());
        assert!(OrderDescriptor::DegLex {
            weights: vec![1, 0],
            precedence: vec![0, 1]
        }
        .check()
        .is_err());
        OrderDescriptor::weighted(vec![2, 1], OrderDescriptor::lex(2))
            .check()
            .unwrap();
    }

    fn all_orders(n: usize) -> Vec<OrderDescriptor> {
        let mut v = vec![
            OrderDescriptor::lex(n),
            OrderDescriptor::Lex((0..n).rev().collect()),
            OrderDescriptor::deglex(n),
            OrderDescriptor::degrevlex(n),
            OrderDescriptor::weighted((1..=n as u32).collect(), OrderDescriptor::lex(n)),
            OrderDescriptor::t_order(OrderDescriptor::deglex(n - 1)),
            OrderDescriptor::product_order(
                OrderDescriptor::lex(1),
                OrderDescriptor::degrevlex(n - 1),
            ),
            OrderDescriptor::restrict(OrderDescriptor::deglex(n + 1), (1..=n).collect()),
        ];
        v.push(elim_order(&OrderDescriptor::deglex(n), &[n - 1]).unwrap());
        v.push(elim_order(&OrderDescriptor::degrevlex(n), &[0, 2]).unwrap());
        v
    }

    fn exps() -> impl Strategy<Value = (Vec<u32>, Vec<u32>, Vec<u32>)> {
        let one = || proptest::collection::vec(0u32..4, 3);
        (one(), one(), one())
    }

    proptest! {
        #[test]
        fn orders_are_admissible((a, b, c) in exps()) {
            let (a, b, c) = (Exponent::from(a), Exponent::from(b), Exponent::from(c));
            let zero = Exponent::zero(3);
            for o in all_orders(3) {
                o.check().unwrap();
                let ab = o.cmp(&a, &b);
                prop_assert_eq!(ab, o.cmp(&b, &a).reverse());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                if ab == Ordering::Less && o.cmp(&b, &c) == Ordering::Less {
                    prop_assert_eq!(o.cmp(&a, &c), Ordering::Less);
                }
                prop_assert_eq!(o.cmp(&a.add(&c), &b.add(&c)), ab);
                prop_assert!(o.cmp(&zero, &a) != Ordering::Greater);
            }
        }

        #[test]
        fn elimination_restricts_to_base((a, b, _c) in exps()) {
            let base = OrderDescriptor::deglex(3);
            let keep = [true, false, true];
            let o = elim_order(&base, &[0, 2]).unwrap();
            let (a, b) = (Exponent::from(a).masked(&keep, true), Exponent::from(b).masked(&keep, true));
            prop_assert_eq!(o.cmp(&a, &b), base.cmp(&a, &b));
        }

        #[test]
        fn elimination_property((a, b, _c) in exps()) {
            // anything not supported on the kept block is above everything that is
            let keep = [false, true, true];
            let o = elim_order(&OrderDescriptor::degrevlex(3), &[1, 2]).unwrap();
            let (a, b) = (Exponent::from(a), Exponent::from(b).masked(&keep, true));
            if o.cmp(&a, &b) != Ordering::Greater {
                prop_assert!(a.supported_on(&keep));
            }
        }
    }
}
