//! PBW exponent vectors.

use std::fmt;

use smallvec::SmallVec;

/// Exponent vector `(α_1, …, α_n)` of the ordered monomial `a_1^α_1 ⋯ a_n^α_n`.
///
/// The derived `Ord` is plain vector comparison; it is only used for
/// canonical bookkeeping (hash-map keys, cache entries) and is unrelated to
/// any monomial ordering.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponent(SmallVec<[u32; 6]>);

impl Exponent {
    pub fn zero(n: usize) -> Self {
        Exponent(SmallVec::from_elem(0, n))
    }

    /// `a_k` as an exponent of length `n`.
    pub fn unit(n: usize, k: usize) -> Self {
        let mut e = Self::zero(n);
        e.0[k] = 1;
        e
    }

    pub fn from_slice(v: &[u32]) -> Self {
        Exponent(SmallVec::from_slice(v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, k: usize) -> u32 {
        self.0[k]
    }

    pub fn set(&mut self, k: usize, v: u32) {
        self.0[k] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&x, &w)| x as u64 * w as u64)
            .sum()
    }

    /// Index of the first generator with a nonzero exponent.
    pub fn first_var(&self) -> Option<usize> {
        self.0.iter().position(|&x| x > 0)
    }

    /// Index of the last generator with a nonzero exponent.
    pub fn last_var(&self) -> Option<usize> {
        self.0.iter().rposition(|&x| x > 0)
    }

    /// Componentwise sum.
    ///
    /// # Panics
    /// On length mismatch or `u32` overflow.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "exponent length mismatch");
        Exponent(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    /// Componentwise difference, `None` unless `other ≤ self` in every slot.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        if self.len() != other.len() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<SmallVec<_>>>()
            .map(Exponent)
    }

    /// `self ≤ other` componentwise.
    pub fn divides(&self, other: &Self) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise maximum.
    pub fn lcm(&self, other: &Self) -> Self {
        Exponent(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn inc(&mut self, k: usize) {
        self.0[k] = self.0[k].checked_add(1).expect("exponent overflow");
    }

    pub fn dec(&mut self, k: usize) {
        self.0[k] -= 1;
    }

    /// Whether every nonzero slot is in `mask`.
    pub fn supported_on(&self, mask: &[bool]) -> bool {
        self.0.iter().zip(mask).all(|(&x, &keep)| keep || x == 0)
    }

    /// Keeps slots where `mask` is true, zeroing the rest.
    pub fn masked(&self, mask: &[bool], keep: bool) -> Self {
        Exponent(
            self.0
                .iter()
                .zip(mask)
                .map(|(&x, &m)| if m == keep { x } else { 0 })
                .collect(),
        )
    }

    /// The sub-vector at the given slots.
    pub fn select(&self, slots: &[usize]) -> Self {
        Exponent(slots.iter().map(|&k| self.0[k]).collect())
    }

    /// Places `self[k]` at `slots[k]` inside a zero vector of length `n`.
    pub fn embed(&self, n: usize, slots: &[usize]) -> Self {
        let mut e = Self::zero(n);
        for (k, &s) in slots.iter().enumerate() {
            e.0[s] = self.0[k];
        }
        e
    }

    /// Appends `extra` trailing slots.
    pub fn extend(&self, tail: &[u32]) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(tail);
        Exponent(v)
    }

    pub fn truncate(&self, n: usize) -> Self {
        Exponent(SmallVec::from_slice(&self.0[..n]))
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

impl From<Vec<u32>> for Exponent {
    fn from(v: Vec<u32>) -> Self {
        Exponent(SmallVec::from_vec(v))
    }
}

impl<const N: usize> From<[u32; N]> for Exponent {
    fn from(v: [u32; N]) -> Self {
        Exponent::from_slice(&v)
    }
}
