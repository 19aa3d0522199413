//! Elimination: contraction to subalgebras and submodules, intersections via
//! a central variable `t`, weak independence and dimension search.

use crate::algebra::ValidatedAlgebra;
use crate::error::{EliminationError, GroebnerError, OrderError};
use crate::groebner::{buchberger, reduce_basis, GroebnerBasis, Provenance};
use crate::module::{FreeModule, VecElem};
use crate::order::{elim_order, ModuleOrder, OrderDescriptor};
use crate::poly::Poly;

/// A set `S` of basis monomials whose span `V(S)` we contract to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubBasis {
    /// Monomials (in any component) supported on these generators.
    Generators(Vec<usize>),
    /// All monomials on these components.
    Components(Vec<usize>),
    /// Monomials of `t`-degree zero; `t` is the last generator.
    TSlice,
}

impl SubBasis {
    fn contains(&self, module: &FreeModule, v: &VecElem) -> bool {
        match self {
            SubBasis::Generators(keep) => {
                let mask = module.algebra().mask(keep);
                v.terms().iter().all(|t| t.exp.supported_on(&mask))
            }
            SubBasis::Components(keep) => v.terms().iter().all(|t| keep.contains(&t.comp)),
            SubBasis::TSlice => {
                let n = module.algebra().n();
                v.terms().iter().all(|t| t.exp.get(n - 1) == 0)
            }
        }
    }
}

fn eliminates(module: &FreeModule, s: &SubBasis) -> bool {
    let rank = module.rank();
    match s {
        SubBasis::Generators(keep) => {
            let base_ok = |b: &OrderDescriptor| match b {
                OrderDescriptor::ElimBlock { keep: mask, .. } => {
                    let mut want = vec![false; mask.len()];
                    for &k in keep {
                        if k >= want.len() {
                            return false;
                        }
                        want[k] = true;
                    }
                    *mask == want
                }
                _ => false,
            };
            match module.order() {
                ModuleOrder::Top(b) => base_ok(b),
                ModuleOrder::Pot { base, .. } => rank == 1 && base_ok(base),
                _ => false,
            }
        }
        SubBasis::Components(keep) => match module.order() {
            ModuleOrder::Pot { .. } => {
                let order = module.order();
                keep.iter().all(|&k| k < rank)
                    && (0..rank).all(|c| {
                        let p = order.pot_position(c).expect("pot");
                        keep.contains(&c) == (p < keep.len())
                    })
            }
            ModuleOrder::DirectSumElim { split, .. } => {
                let mut want: Vec<usize> = (*split..rank).collect();
                let mut got = keep.clone();
                got.sort_unstable();
                want.sort_unstable();
                got == want
            }
            _ => false,
        },
        SubBasis::TSlice => match module.order() {
            ModuleOrder::TElim(_) => true,
            ModuleOrder::Top(OrderDescriptor::TExtension(_)) => true,
            ModuleOrder::Pot {
                base: OrderDescriptor::TExtension(_),
                ..
            } => rank == 1,
            _ => false,
        },
    }
}

/// The elements of `gb` lying in `V(S)`. Requires the basis ordering to
/// eliminate with respect to `S`.
pub fn truncate_to_vs(gb: &GroebnerBasis, s: &SubBasis) -> Result<Vec<VecElem>, EliminationError> {
    if !eliminates(gb.module(), s) {
        return Err(EliminationError::OrderingNotEliminatingForS);
    }
    Ok(gb
        .elements()
        .iter()
        .filter(|g| s.contains(gb.module(), g))
        .cloned()
        .collect())
}

fn proper_subset(n: usize, keep: &[usize]) -> Result<Vec<usize>, EliminationError> {
    let mut keep = keep.to_vec();
    keep.sort_unstable();
    keep.dedup();
    if let Some(&k) = keep.last() {
        if k >= n {
            return Err(OrderError::ArityMismatch {
                expected: n,
                got: k + 1,
            }
            .into());
        }
    }
    if keep.is_empty() || keep.len() == n {
        return Err(OrderError::EmptyOrFullSubset.into());
    }
    Ok(keep)
}

/// A reduced Gröbner basis of `N ∩ K[U]` for `N = Σ A·gens`, as an ideal
/// of the subalgebra `K[U]` under the restricted ordering. Fails with
/// `ClosureFailure` when the monomials in `U` do not span a subalgebra.
pub fn eliminate_ideal(
    algebra: &ValidatedAlgebra,
    gens: &[Poly],
    keep: &[usize],
) -> Result<GroebnerBasis, EliminationError> {
    let keep = proper_subset(algebra.n(), keep)?;
    algebra
        .subalgebra_closure_check(&keep)
        .map_err(EliminationError::ClosureFailure)?;
    let inside = eliminate_in_ambient(algebra, gens, &keep)?;
    let sub = algebra.subalgebra(&keep)?;
    let target = FreeModule::ideal(&sub);
    let elements = inside
        .iter()
        .map(|g| target.map_terms(g, |e, c| (e.select(&keep), c)))
        .collect();
    Ok(GroebnerBasis::from_parts(
        target,
        elements,
        true,
        Provenance::Elimination,
    ))
}

/// The elements of the reduced elimination basis lying in `V(S)`, left in
/// the ambient algebra (under the elimination ordering).
pub fn eliminate_in_ambient(
    algebra: &ValidatedAlgebra,
    gens: &[Poly],
    keep: &[usize],
) -> Result<Vec<VecElem>, EliminationError> {
    let keep = proper_subset(algebra.n(), keep)?;
    let ord = elim_order(algebra.order(), &keep)?;
    let module = FreeModule::new(algebra, 1, ModuleOrder::top(ord))?;
    let vs: Vec<VecElem> = gens.iter().map(|g| module.from_poly(g)).collect();
    let gb = reduce_basis(&buchberger(&module, &vs)?);
    truncate_to_vs(&gb, &SubBasis::Generators(keep))
}

/// A reduced Gröbner basis of `N ∩ L_U` where `L_U` is spanned by the
/// components in `keep`. The result lives in a free module of rank `|U|`
/// whose component `k` is the `k`-th smallest kept component.
pub fn eliminate_module(
    module: &FreeModule,
    gens: &[VecElem],
    keep: &[usize],
) -> Result<GroebnerBasis, EliminationError> {
    let mut keep = keep.to_vec();
    keep.sort_unstable();
    keep.dedup();
    let ord = ModuleOrder::pot_keep(module.base_order().clone(), module.rank(), &keep)?;
    let elim = module.with_order(ord)?;
    let vs = adopt_all(&elim, gens)?;
    let gb = reduce_basis(&buchberger(&elim, &vs)?);
    let inside = truncate_to_vs(&gb, &SubBasis::Components(keep.clone()))?;
    let target = FreeModule::pot(module.algebra(), keep.len());
    let elements = inside
        .iter()
        .map(|g| {
            target.map_terms(g, |e, c| {
                (
                    e.clone(),
                    keep.iter().position(|&k| k == c).expect("kept component"),
                )
            })
        })
        .collect();
    Ok(GroebnerBasis::from_parts(
        target,
        elements,
        true,
        Provenance::Elimination,
    ))
}

fn adopt_all(module: &FreeModule, gens: &[VecElem]) -> Result<Vec<VecElem>, GroebnerError> {
    gens.iter()
        .map(|g| {
            if g.max_comp() > module.rank() {
                Err(GroebnerError::RankMismatch {
                    expected: module.rank(),
                    got: g.max_comp(),
                })
            } else {
                Ok(module.adopt(g))
            }
        })
        .collect()
}

/// A reduced Gröbner basis of `N1 ∩ N2` for left ideals, under the
/// algebra's own ordering.
pub fn intersect_ideals(
    algebra: &ValidatedAlgebra,
    n1: &[Poly],
    n2: &[Poly],
) -> Result<GroebnerBasis, EliminationError> {
    let module = FreeModule::ideal(algebra);
    let v1: Vec<VecElem> = n1
        .iter()
        .map(|f| module.from_poly(&f.resort(algebra.order())))
        .collect();
    let v2: Vec<VecElem> = n2
        .iter()
        .map(|f| module.from_poly(&f.resort(algebra.order())))
        .collect();
    intersect_submodules(&module, &v1, &v2)
}

/// A reduced Gröbner basis of `N1 ∩ N2` for submodules of `module`, under
/// the module's own ordering.
pub fn intersect_submodules(
    module: &FreeModule,
    n1: &[VecElem],
    n2: &[VecElem],
) -> Result<GroebnerBasis, EliminationError> {
    let algebra = module.algebra();
    let n = algebra.n();
    let at = algebra.extend_with_t();
    let lifted = FreeModule::new(
        &at,
        module.rank(),
        ModuleOrder::TElim(Box::new(module.order().clone())),
    )?;
    let t = at.generator(n);
    let one_minus_t = at.sub(&at.one(), &t);
    let lift = |v: &VecElem| lifted.map_terms(v, |e, c| (e.extend(&[0]), c));
    let mut gens = Vec::new();
    for u in adopt_all(module, n1)? {
        gens.push(lifted.left_mul(&t, &lift(&u)));
    }
    for v in adopt_all(module, n2)? {
        gens.push(lifted.left_mul(&one_minus_t, &lift(&v)));
    }
    let gb = reduce_basis(&buchberger(&lifted, &gens)?);
    let inside = truncate_to_vs(&gb, &SubBasis::TSlice)?;
    let elements = inside
        .iter()
        .map(|g| module.map_terms(g, |e, c| (e.truncate(n), c)))
        .collect();
    Ok(GroebnerBasis::from_parts(
        module.clone(),
        elements,
        true,
        Provenance::Intersection,
    ))
}

/// Whether `N ∩ V(S) = {0}` where `S` is the set of monomials supported on
/// `keep`.
pub fn weakly_independent(
    algebra: &ValidatedAlgebra,
    gens: &[Poly],
    keep: &[usize],
) -> Result<bool, EliminationError> {
    let mut keep = keep.to_vec();
    keep.sort_unstable();
    keep.dedup();
    let nonzero = gens.iter().any(|g| !g.is_zero());
    if !nonzero {
        return Ok(true);
    }
    if keep.len() == algebra.n() {
        return Ok(false);
    }
    if keep.is_empty() {
        let gb = buchberger(&FreeModule::ideal(algebra), &lift_ideal(algebra, gens))?;
        return Ok(!gb.is_unit_ideal());
    }
    Ok(eliminate_in_ambient(algebra, gens, &keep)?.is_empty())
}

fn lift_ideal(algebra: &ValidatedAlgebra, gens: &[Poly]) -> Vec<VecElem> {
    let module = FreeModule::ideal(algebra);
    gens.iter()
        .map(|g| module.from_poly(&g.resort(algebra.order())))
        .collect()
}

/// Outcome of the dimension search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkDimension {
    /// Size of the largest weakly independent generator subset.
    pub value: usize,
    /// The first such subset found (sizes descending, lexicographic within a size).
    pub witness: Vec<usize>,
    /// Whether `value` is known to equal the Gelfand–Kirillov dimension of
    /// `A/N` (quadric algebras under a graded ordering).
    pub exact: bool,
}

/// The largest size of a weakly independent generator subset modulo
/// `N = Σ A·gens`. For quadric algebras under a graded ordering this is the
/// Gelfand–Kirillov dimension of `A/N`.
pub fn gk_dim_search(
    algebra: &ValidatedAlgebra,
    gens: &[Poly],
) -> Result<GkDimension, EliminationError> {
    if gens.iter().all(Poly::is_zero) {
        return Err(EliminationError::ZeroIdeal);
    }
    let n = algebra.n();
    let exact = algebra.is_quadric_graded();
    for size in (1..n).rev() {
        for subset in combinations(n, size) {
            if weakly_independent(algebra, gens, &subset)? {
                return Ok(GkDimension {
                    value: size,
                    witness: subset,
                    exact,
                });
            }
        }
    }
    Ok(GkDimension {
        value: 0,
        witness: Vec::new(),
        exact,
    })
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraDef;
    use crate::error::ClosureFailure;
    use crate::field::Field;
    use crate::monomial::Exponent;
    use crate::validate_algebra;

    fn q() -> Field {
        Field::Rational
    }

    fn kxy_lex() -> ValidatedAlgebra {
        validate_algebra(AlgebraDef::commutative(
            ["x", "y"],
            q(),
            OrderDescriptor::lex(2),
        ))
        .unwrap()
    }

    fn weyl() -> ValidatedAlgebra {
        let f = q();
        validate_algebra(
            AlgebraDef::new(["x", "d"], f, OrderDescriptor::deglex(2)).relation(
                1,
                0,
                f.one(),
                [(f.one(), Exponent::zero(2))],
            ),
        )
        .unwrap()
    }

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(combinations(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn eliminate_commutative() {
        let a = kxy_lex();
        let gens = [
            a.poly_i64(&[(1, [1, 0]), (-1, [0, 2])]),
            a.poly_i64(&[(1, [0, 3])]),
        ];
        let gb = eliminate_ideal(&a, &gens, &[1]).unwrap();
        assert_eq!(gb.render(), "[ y^3 ]");
        assert_eq!(gb.module().algebra().names(), ["y"]);
    }

    #[test]
    fn truncation_requires_eliminating_order() {
        let a = kxy_lex();
        let gb = crate::groebner::ideal_basis(&a, &[a.generator(0)]).unwrap();
        assert_eq!(
            truncate_to_vs(&gb, &SubBasis::Generators(vec![1])).unwrap_err(),
            EliminationError::OrderingNotEliminatingForS
        );
    }

    #[test]
    fn unit_ideal_survives_truncation() {
        let a = weyl();
        let ord = elim_order(a.order(), &[1]).unwrap();
        let m = FreeModule::new(&a, 1, ModuleOrder::top(ord)).unwrap();
        let gb = reduce_basis(
            &buchberger(
                &m,
                &[m.from_poly(&a.generator(0)), m.from_poly(&a.generator(1))],
            )
            .unwrap(),
        );
        let kept = truncate_to_vs(&gb, &SubBasis::Generators(vec![1])).unwrap();
        assert_eq!(kept.len(), 1);
        assert_eq!(m.render(&kept[0]), "1");
    }

    #[test]
    fn pot_truncation() {
        let a = kxy_lex();
        let m = FreeModule::new(&a, 2, ModuleOrder::pot(a.order().clone())).unwrap();
        let g1 = m.from_polys(&[a.generator(0).neg(), a.one()]);
        let g2 = m.embed(&a.generator(1), 0);
        let gb = reduce_basis(&buchberger(&m, &[g1, g2]).unwrap());
        let kept = truncate_to_vs(&gb, &SubBasis::Components(vec![0])).unwrap();
        let text: Vec<String> = kept.iter().map(|v| m.render(v)).collect();
        assert_eq!(text, ["(y, 0)"]);
    }

    #[test]
    fn closure_failure_for_quantum_heisenberg() {
        let f = q();
        let half = f.from_ratio(&1.into(), &2.into()).unwrap();
        // generators y < z < x
        let a = validate_algebra(
            AlgebraDef::new(["y", "z", "x"], f, OrderDescriptor::deglex(3))
                .relation(2, 0, half, [(f.one(), Exponent::from([0, 1, 0]))])
                .relation(2, 1, f.from_i64(2), [])
                .relation(1, 0, f.from_i64(2), []),
        )
        .unwrap();
        let err = eliminate_ideal(&a, &[a.generator(0)], &[0, 2]).unwrap_err();
        assert_eq!(
            err,
            EliminationError::ClosureFailure(ClosureFailure {
                j: 2,
                i: 0,
                monomial: Exponent::from([0, 1, 0])
            })
        );
    }

    #[test]
    fn univariate_intersection() {
        let a =
            validate_algebra(AlgebraDef::commutative(["x"], q(), OrderDescriptor::lex(1))).unwrap();
        let gb =
            intersect_ideals(&a, &[a.generator(0)], &[a.poly_i64(&[(1, [1]), (1, [0])])]).unwrap();
        assert_eq!(gb.render(), "[ x^2 + x ]");
    }

    #[test]
    fn weyl_intersection_idempotent() {
        let a = weyl();
        let gb = intersect_ideals(&a, &[a.generator(1)], &[a.generator(1)]).unwrap();
        assert_eq!(gb.render(), "[ d ]");
    }

    #[test]
    fn disjoint_components_intersect_to_zero() {
        let a = kxy_lex();
        let m = FreeModule::pot(&a, 2);
        let gb = intersect_submodules(&m, &[m.unit(0)], &[m.unit(1)]).unwrap();
        assert!(gb.is_empty());
    }

    #[test]
    fn weak_independence_examples() {
        let a = kxy_lex();
        let n = [a.generator(0)];
        assert!(weakly_independent(&a, &n, &[1]).unwrap());
        assert!(!weakly_independent(&a, &n, &[0]).unwrap());
        assert!(!weakly_independent(&a, &[a.one()], &[1]).unwrap());
        assert!(!weakly_independent(&a, &[a.one()], &[]).unwrap());
        assert!(weakly_independent(&a, &n, &[]).unwrap());
    }

    #[test]
    fn dimension_examples() {
        let a = validate_algebra(AlgebraDef::commutative(
            ["x", "y"],
            q(),
            OrderDescriptor::deglex(2),
        ))
        .unwrap();
        let d = gk_dim_search(&a, &[a.generator(0)]).unwrap();
        assert_eq!((d.value, d.witness.clone(), d.exact), (1, vec![1], true));
        let d = gk_dim_search(&a, &[a.one()]).unwrap();
        assert_eq!((d.value, d.witness), (0, vec![]));
        assert_eq!(
            gk_dim_search(&a, &[Poly::zero()]).unwrap_err(),
            EliminationError::ZeroIdeal
        );
        let w = weyl();
        let d = gk_dim_search(&w, &[w.generator(1)]).unwrap();
        assert_eq!((d.value, d.witness), (1, vec![0]));
    }

    #[test]
    fn module_elimination() {
        let a = validate_algebra(AlgebraDef::commutative(
            ["x", "y"],
            q(),
            OrderDescriptor::deglex(2),
        ))
        .unwrap();
        let m = FreeModule::pot(&a, 2);
        let g1 = m.from_polys(&[a.generator(0), a.generator(1)]);
        let g2 = m.embed(&a.generator(1), 0);
        let gb = eliminate_module(&m, &[g1, g2], &[0]).unwrap();
        // a(x e_0 + y e_1) + b y e_0 lies in A e_0 only for a = 0
        assert_eq!(gb.module().rank(), 1);
        assert_eq!(gb.render(), "[ y ]");
    }
}
