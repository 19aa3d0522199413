use std::cmp::Ordering;

use super::OrderDescriptor;
use crate::error::OrderError;
use crate::monomial::Exponent;

/// A monomial ordering on `{ a^α e_i }`, the `K`-basis of a free module.
///
/// Components are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ModuleOrder {
    /// Term over position: compare `a^α` first, then the smaller index is smaller.
    Top(OrderDescriptor),
    /// Position over term. With `position`, component `i` ranks as
    /// `position[i]` instead of `i`.
    Pot {
        base: OrderDescriptor,
        position: Option<Vec<usize>>,
    },
    /// Compare `d(a^α) + shifts[i]` first, then `tie`.
    Graded {
        weights: Vec<u32>,
        shifts: Vec<u32>,
        tie: Box<ModuleOrder>,
    },
    /// Order on syzygy positions induced by the leading monomials of a
    /// reference list under `inner`; equal products fall back to the index.
    Schreyer {
        inner: Box<ModuleOrder>,
        leads: Vec<(Exponent, usize)>,
    },
    /// Components `< split` (the `e` block, compared by `upper`) lie above
    /// components `>= split` (the `ε` block, compared by `lower` with
    /// re-based indices).
    DirectSumElim {
        upper: Box<ModuleOrder>,
        lower: Box<ModuleOrder>,
        split: usize,
    },
    /// Order on `⊕ A[t] e_i`: the trailing exponent slot is `t` and its
    /// degree dominates, then `inner` on the rest.
    TElim(Box<ModuleOrder>),
}

/// The three elimination constructions on free modules.
#[derive(Clone, Debug)]
pub enum ModuleElimKind {
    /// POT with the `keep` components ranked lowest.
    PotPrefix {
        base: OrderDescriptor,
        rank: usize,
        keep: Vec<usize>,
    },
    /// `e`-block above `ε`-block.
    DirectSum {
        upper: ModuleOrder,
        lower: ModuleOrder,
        split: usize,
    },
    /// `t`-degree first.
    TElim(ModuleOrder),
}

pub fn module_elim_order(kind: ModuleElimKind) -> Result<ModuleOrder, OrderError> {
    match kind {
        ModuleElimKind::PotPrefix { base, rank, keep } => ModuleOrder::pot_keep(base, rank, &keep),
        ModuleElimKind::DirectSum {
            upper,
            lower,
            split,
        } => {
            if upper.base() != lower.base() {
                return Err(OrderError::Invalid(
                    "both blocks of a direct-sum order must share the algebra ordering".into(),
                ));
            }
            Ok(ModuleOrder::DirectSumElim {
                upper: Box::new(upper),
                lower: Box::new(lower),
                split,
            })
        }
        ModuleElimKind::TElim(inner) => Ok(ModuleOrder::TElim(Box::new(inner))),
    }
}

impl ModuleOrder {
    pub fn top(base: OrderDescriptor) -> Self {
        ModuleOrder::Top(base)
    }

    pub fn pot(base: OrderDescriptor) -> Self {
        ModuleOrder::Pot {
            base,
            position: None,
        }
    }

    /// POT where the components in `keep` come first (lowest), in index order,
    /// followed by the rest in index order.
    pub fn pot_keep(
        base: OrderDescriptor,
        rank: usize,
        keep: &[usize],
    ) -> Result<Self, OrderError> {
        if keep.is_empty() {
            return Err(OrderError::EmptySubset);
        }
        let mut kept = vec![false; rank];
        for &k in keep {
            if k >= rank {
                return Err(OrderError::ComponentOutOfRange { comp: k, rank });
            }
            kept[k] = true;
        }
        let mut position = vec![0; rank];
        let mut next = 0;
        for pass in [true, false] {
            for (i, &kk) in kept.iter().enumerate() {
                if kk == pass {
                    position[i] = next;
                    next += 1;
                }
            }
        }
        let identity = position.iter().enumerate().all(|(i, &p)| i == p);
        Ok(ModuleOrder::Pot {
            base,
            position: if identity { None } else { Some(position) },
        })
    }

    pub fn graded(weights: Vec<u32>, shifts: Vec<u32>, tie: ModuleOrder) -> Self {
        ModuleOrder::Graded {
            weights,
            shifts,
            tie: Box::new(tie),
        }
    }

    /// Schreyer order from the leading monomials `(exponent, component)` of
    /// the reference list, taken under `inner`.
    pub fn schreyer(inner: ModuleOrder, leads: Vec<(Exponent, usize)>) -> Self {
        ModuleOrder::Schreyer {
            inner: Box::new(inner),
            leads,
        }
    }

    /// The ordering this module order induces on the algebra: within a single
    /// component the module order must agree with it.
    pub fn base(&self) -> OrderDescriptor {
        match self {
            ModuleOrder::Top(b) | ModuleOrder::Pot { base: b, .. } => b.clone(),
            ModuleOrder::Graded { weights, tie, .. } => {
                OrderDescriptor::weighted(weights.clone(), tie.base())
            }
            ModuleOrder::Schreyer { inner, .. } => inner.base(),
            ModuleOrder::DirectSumElim { upper, .. } => upper.base(),
            ModuleOrder::TElim(inner) => OrderDescriptor::t_order(inner.base()),
        }
    }

    /// Exponent length compared by this order.
    pub fn arity(&self) -> usize {
        self.base().arity()
    }

    /// Rank bound imposed by the descriptor itself, if any.
    pub fn rank_limit(&self) -> Option<usize> {
        match self {
            ModuleOrder::Top(_) => None,
            ModuleOrder::Pot { position, .. } => position.as_ref().map(Vec::len),
            ModuleOrder::Graded { shifts, .. } => Some(shifts.len()),
            ModuleOrder::Schreyer { leads, .. } => Some(leads.len()),
            ModuleOrder::DirectSumElim { lower, split, .. } => {
                lower.rank_limit().map(|r| r + split)
            }
            ModuleOrder::TElim(inner) => inner.rank_limit(),
        }
    }

    /// Checked comparison of `(exponent, component)` pairs.
    pub fn compare(
        &self,
        u: (&Exponent, usize),
        v: (&Exponent, usize),
        rank: usize,
    ) -> Result<Ordering, OrderError> {
        let n = self.arity();
        let limit = self.rank_limit().map_or(rank, |r| r.min(rank));
        for (e, c) in [u, v] {
            if e.len() != n {
                return Err(OrderError::ArityMismatch {
                    expected: n,
                    got: e.len(),
                });
            }
            if c >= limit {
                return Err(OrderError::ComponentOutOfRange {
                    comp: c,
                    rank: limit,
                });
            }
        }
        Ok(self.cmp_slices(u.0.as_slice(), u.1, v.0.as_slice(), v.1))
    }

    /// Unchecked comparison.
    pub fn cmp(&self, a: &Exponent, i: usize, b: &Exponent, j: usize) -> Ordering {
        self.cmp_slices(a.as_slice(), i, b.as_slice(), j)
    }

    fn cmp_slices(&self, a: &[u32], i: usize, b: &[u32], j: usize) -> Ordering {
        match self {
            ModuleOrder::Top(base) => base.cmp_slices(a, b).then(i.cmp(&j)),
            ModuleOrder::Pot { base, position } => {
                let (pi, pj) = match position {
                    Some(p) => (p[i], p[j]),
                    None => (i, j),
                };
                pi.cmp(&pj).then_with(|| base.cmp_slices(a, b))
            }
            ModuleOrder::Graded {
                weights,
                shifts,
                tie,
            } => {
                let da = wdeg(weights, a) + shifts[i] as u64;
                let db = wdeg(weights, b) + shifts[j] as u64;
                da.cmp(&db).then_with(|| tie.cmp_slices(a, i, b, j))
            }
            ModuleOrder::Schreyer { inner, leads } => {
                let (la, ca) = &leads[i];
                let (lb, cb) = &leads[j];
                let pa: Vec<u32> = a.iter().zip(la.as_slice()).map(|(x, y)| x + y).collect();
                let pb: Vec<u32> = b.iter().zip(lb.as_slice()).map(|(x, y)| x + y).collect();
                inner.cmp_slices(&pa, *ca, &pb, *cb).then(i.cmp(&j))
            }
            ModuleOrder::DirectSumElim {
                upper,
                lower,
                split,
            } => match (i < *split, j < *split) {
                (true, true) => upper.cmp_slices(a, i, b, j),
                (false, false) => lower.cmp_slices(a, i - split, b, j - split),
                (true, false) => Ordering::Greater,
                (false, true) => Ordering::Less,
            },
            ModuleOrder::TElim(inner) => {
                let n = a.len() - 1;
                a[n].cmp(&b[n])
                    .then_with(|| inner.cmp_slices(&a[..n], i, &b[..n], j))
            }
        }
    }

    /// Component ranks in increasing POT position, when this is a POT order.
    pub fn pot_position(&self, comp: usize) -> Option<usize> {
        match self {
            ModuleOrder::Pot { position, .. } => Some(position.as_ref().map_or(comp, |p| p[comp])),
            _ => None,
        }
    }
}

fn wdeg(weights: &[u32], a: &[u32]) -> u64 {
    a.iter()
        .zip(weights)
        .map(|(&x, &w)| x as u64 * w as u64)
        .sum()
}
