//! Weakly independent generator sets and the dimension they bound.

use solvkit::elimination::{gk_dim_search, weakly_independent};
use solvkit::{
    validate_algebra, AlgebraDef, Exponent, Field, OrderDescriptor, Poly, ValidatedAlgebra,
};

fn report(label: &str, alg: &ValidatedAlgebra, gens: &[Poly]) {
    let d = gk_dim_search(alg, gens).unwrap();
    let witness: Vec<&str> = d.witness.iter().map(|&k| alg.names()[k].as_str()).collect();
    let kind = if d.exact {
        "dimension"
    } else {
        "weak-independence number"
    };
    println!(
        "{label}: {kind} {} with witness {{{}}}",
        d.value,
        witness.join(", ")
    );
}

fn main() {
    let q = Field::Rational;
    let k = validate_algebra(AlgebraDef::commutative(
        ["x", "y"],
        q,
        OrderDescriptor::deglex(2),
    ))
    .unwrap();
    report("<x> in K[x, y]", &k, &[k.generator(0)]);
    report("<x*y> in K[x, y]", &k, &[k.poly_i64(&[(1, [1, 1])])]);
    report("<1> in K[x, y]", &k, &[k.one()]);

    let w = validate_algebra(
        AlgebraDef::new(["x", "d"], q, OrderDescriptor::deglex(2)).relation(
            1,
            0,
            q.one(),
            [(q.one(), Exponent::zero(2))],
        ),
    )
    .unwrap();
    report("<d> in the Weyl algebra", &w, &[w.generator(1)]);
    println!(
        "{{d}} weakly independent mod <d>: {}",
        weakly_independent(&w, &[w.generator(1)], &[1]).unwrap()
    );
}
