//! The same ideal under different monomial orderings.

use solvkit::groebner::{ideal_basis, reduce_basis};
use solvkit::{elim_order, validate_algebra, AlgebraDef, Field, OrderDescriptor};

fn main() {
    let q = Field::Rational;
    let orders = [
        ("lex", OrderDescriptor::lex(3)),
        ("deglex", OrderDescriptor::deglex(3)),
        ("degrevlex", OrderDescriptor::degrevlex(3)),
        (
            "weighted (3, 2, 1)",
            OrderDescriptor::weighted(vec![3, 2, 1], OrderDescriptor::lex(3)),
        ),
        (
            "eliminate x",
            elim_order(&OrderDescriptor::degrevlex(3), &[1, 2]).unwrap(),
        ),
    ];
    for (label, order) in orders {
        let k = validate_algebra(AlgebraDef::commutative(["x", "y", "z"], q, order)).unwrap();
        let gens = [
            k.poly_i64(&[(1, [1, 0, 0]), (1, [0, 1, 0]), (1, [0, 0, 1])]),
            k.poly_i64(&[(1, [1, 1, 0]), (1, [0, 1, 1]), (1, [1, 0, 1])]),
            k.poly_i64(&[(1, [1, 1, 1]), (-1, [0, 0, 0])]),
        ];
        let gb = reduce_basis(&ideal_basis(&k, &gens).unwrap());
        println!("{label}: {}", gb.render());
    }
}
