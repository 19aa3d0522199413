mod common;

use common::*;
use proptest::prelude::*;
use solvkit::frontend::{run_script, Options};
use solvkit::groebner::{buchberger, is_groebner, member_poly, normal_form, reduce_basis};
use solvkit::{
    elimination, validate_algebra, Field, FreeModule, OrderDescriptor, Poly, ValidatedAlgebra,
};

fn algebras() -> Vec<ValidatedAlgebra> {
    let w = weyl();
    vec![
        w.clone(),
        validate_algebra(q_heisenberg_def(2)).unwrap(),
        validate_algebra(additive_q_def(3)).unwrap(),
        validate_algebra(q_heisenberg_over(Field::prime(32003).unwrap(), 2)).unwrap(),
        w.tensor(&w).unwrap(),
        validate_algebra(three_generator_def()).unwrap(),
        commutative(&["x", "y", "z"], OrderDescriptor::degrevlex(3)),
    ]
}

fn terms(n: usize, len: usize, max_exp: u32) -> impl Strategy<Value = Vec<(i64, Vec<u32>)>> {
    prop::collection::vec((-5i64..=5, prop::collection::vec(0..=max_exp, n)), 1..=len)
}

fn build(alg: &ValidatedAlgebra, t: &[(i64, Vec<u32>)]) -> Poly {
    alg.poly(t.iter().map(|(k, v)| (alg.field().from_i64(*k), e(v))))
}

fn any_algebra() -> impl Strategy<Value = (usize, ValidatedAlgebra)> {
    (0..algebras().len()).prop_map(|k| (k, algebras().swap_remove(k)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn multiplication_is_associative(
        (_, alg) in any_algebra(),
        f in terms(4, 3, 2), g in terms(4, 3, 2), h in terms(4, 2, 2),
    ) {
        let n = alg.n();
        let cut = |t: &[(i64, Vec<u32>)]| t.iter().map(|(k, v)| (*k, v[..n].to_vec())).collect::<Vec<_>>();
        let (f, g, h) = (build(&alg, &cut(&f)), build(&alg, &cut(&g)), build(&alg, &cut(&h)));
        prop_assert_eq!(alg.mul(&alg.mul(&f, &g), &h), alg.mul(&f, &alg.mul(&g, &h)));
    }

    #[test]
    fn leading_monomials_multiply(
        (_, alg) in any_algebra(),
        f in terms(4, 3, 3), g in terms(4, 3, 3),
    ) {
        let n = alg.n();
        let cut = |t: &[(i64, Vec<u32>)]| t.iter().map(|(k, v)| (*k, v[..n].to_vec())).collect::<Vec<_>>();
        let (f, g) = (build(&alg, &cut(&f)), build(&alg, &cut(&g)));
        prop_assume!(!f.is_zero() && !g.is_zero());
        let fg = alg.mul(&f, &g);
        prop_assert!(!fg.is_zero());
        let want = f.leading_exponent().unwrap().add(g.leading_exponent().unwrap());
        prop_assert_eq!(fg.leading_exponent().unwrap(), &want);
    }

    #[test]
    fn commutative_product_matches_schoolbook(f in terms(3, 4, 3), g in terms(3, 4, 3)) {
        let alg = commutative(&["x", "y", "z"], OrderDescriptor::deglex(3));
        let (f, g) = (build(&alg, &f), build(&alg, &g));
        prop_assert_eq!(to_cpoly(&alg.mul(&f, &g)), cmul(&to_cpoly(&f), &to_cpoly(&g)));
    }

    #[test]
    fn division_identity_and_irreducible_remainder(
        (_, alg) in any_algebra(),
        xi in terms(4, 4, 3),
        divs in prop::collection::vec(terms(4, 2, 2), 1..=3),
    ) {
        let n = alg.n();
        let cut = |t: &[(i64, Vec<u32>)]| t.iter().map(|(k, v)| (*k, v[..n].to_vec())).collect::<Vec<_>>();
        let m = FreeModule::ideal(&alg);
        let xi = m.from_poly(&build(&alg, &cut(&xi)));
        let divs: Vec<_> = divs
            .iter()
            .map(|d| m.from_poly(&build(&alg, &cut(d))))
            .filter(|d| !d.is_zero())
            .collect();
        let d = normal_form(&m, &xi, &divs).unwrap();
        let rebuilt = m.add(&m.combination(d.quotients.iter().map(|(q, k)| (q, &divs[*k]))), &d.remainder);
        prop_assert_eq!(rebuilt, xi);
        for t in d.remainder.terms() {
            for g in &divs {
                prop_assert!(!g.leading().unwrap().0.divides(&t.exp));
            }
        }
    }

    // Random lex bases in the three-generator algebra, and q-Heisenberg bases
    // over the rationals, pass through huge coefficients; the q-Heisenberg
    // case is sampled over a prime field instead.
    #[test]
    fn buchberger_output_is_certified(
        alg in prop::sample::select(vec![0usize, 2, 3]).prop_map(|k| algebras().swap_remove(k)),
        gens in prop::collection::vec(terms(4, 3, 2), 1..=2),
    ) {
        let n = alg.n();
        let m = FreeModule::ideal(&alg);
        let gens: Vec<_> = gens
            .iter()
            .map(|t| m.from_poly(&build(&alg, &t.iter().map(|(k, v)| (*k, v[..n].to_vec())).collect::<Vec<_>>())))
            .collect();
        let gb = buchberger(&m, &gens).unwrap();
        prop_assert!(gb.certify());
        let red = reduce_basis(&gb);
        prop_assert!(is_groebner(&m, red.elements()));
        let again = reduce_basis(&red);
        prop_assert_eq!(again.elements(), red.elements());
        for g in &gens {
            prop_assert!(member_poly(&red, &m.to_poly(g)).unwrap().is_member());
        }
    }

    #[test]
    fn intersections_lie_in_both_ideals(f in terms(2, 3, 2), g in terms(2, 3, 2), weyl_side in any::<bool>()) {
        let alg = if weyl_side { weyl() } else { commutative(&["x", "y"], OrderDescriptor::deglex(2)) };
        let (f, g) = (build(&alg, &f), build(&alg, &g));
        prop_assume!(!f.is_zero() && !g.is_zero());
        let meet = elimination::intersect_ideals(&alg, std::slice::from_ref(&f), std::slice::from_ref(&g)).unwrap();
        let gf = reduce_basis(&solvkit::groebner::ideal_basis(&alg, &[f]).unwrap());
        let gg = reduce_basis(&solvkit::groebner::ideal_basis(&alg, &[g]).unwrap());
        for h in meet.polys() {
            prop_assert!(member_poly(&gf, &h).unwrap().is_member());
            prop_assert!(member_poly(&gg, &h).unwrap().is_member());
        }
    }

    #[test]
    fn printed_polynomials_parse_back(f in terms(2, 5, 3)) {
        let alg = weyl();
        let f = build(&alg, &f);
        let shown = alg.render(&f);
        let src = format!("algebra W field QQ gens x d\nrel d*x = x*d + 1\nprint {shown}\n");
        let t = run_script(&src, &Options::default());
        prop_assert_eq!(t.exit_code, 0, "{}", t.stderr);
        prop_assert_eq!(t.stdout, format!("{shown}\n"));
    }
}
