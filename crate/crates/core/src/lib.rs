//! Exact computations in solvable polynomial algebras.
//!
//! A solvable polynomial algebra `K[a_1, …, a_n]` has the ordered monomials
//! `a^α` as a `K`-basis and relations `a_j a_i = λ_ji a_i a_j + f_ji` with
//! `f_ji` below `a_i a_j`. Weyl algebras, q-Heisenberg algebras and
//! commutative polynomial rings are the standard examples.
//!
//! The crate validates presentations ([`algebra::validate_algebra`]),
//! multiplies by rewriting, computes left Gröbner bases of ideals and of
//! submodules of free modules ([`groebner`]), applies elimination orderings
//! ([`elimination`]) and studies module homomorphisms ([`homs`]). The
//! [`frontend`] module runs `.solv` scripts.

pub mod algebra;
pub mod elimination;
pub mod error;
pub mod field;
pub mod frontend;
pub mod groebner;
pub mod homs;
pub mod module;
pub mod monomial;
pub mod order;
pub mod poly;
pub mod render;

pub use algebra::{validate_algebra, AlgebraDef, RelationTable, ValidatedAlgebra};
pub use error::{AlgebraError, EliminationError, GroebnerError, HomError, OrderError};
pub use field::{Field, FieldElem};
pub use groebner::GroebnerBasis;
pub use module::{FreeModule, VecElem};
pub use monomial::Exponent;
pub use order::{elim_order, ModuleOrder, OrderDescriptor};
pub use poly::Poly;
