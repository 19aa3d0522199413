//! Intersections of left ideals via a central variable `t`.

use solvkit::elimination::intersect_ideals;
use solvkit::{validate_algebra, AlgebraDef, Exponent, Field, OrderDescriptor};

fn main() {
    let q = Field::Rational;
    let k = validate_algebra(AlgebraDef::commutative(["x"], q, OrderDescriptor::lex(1))).unwrap();
    let a = [k.poly_i64(&[(1, [1])])];
    let b = [k.poly_i64(&[(1, [1]), (1, [0])])];
    println!(
        "<x> ∩ <x + 1> = {}",
        intersect_ideals(&k, &a, &b).unwrap().render()
    );

    let a = [k.poly_i64(&[(1, [2]), (-1, [0])])];
    let b = [k.poly_i64(&[(1, [3]), (-1, [0])])];
    println!(
        "<x^2 - 1> ∩ <x^3 - 1> = {}",
        intersect_ideals(&k, &a, &b).unwrap().render()
    );

    // Noncommutative: two left ideals of the Weyl algebra.
    let w = validate_algebra(
        AlgebraDef::new(["x", "d"], q, OrderDescriptor::deglex(2)).relation(
            1,
            0,
            q.one(),
            [(q.one(), Exponent::zero(2))],
        ),
    )
    .unwrap();
    let a = [w.generator(1)];
    let b = [w.poly_i64(&[(1, [1, 1]), (-1, [0, 0])])];
    println!(
        "A d ∩ A (x*d - 1) = {}",
        intersect_ideals(&w, &a, &b).unwrap().render()
    );
    println!(
        "A d ∩ A d = {}",
        intersect_ideals(&w, &a, &a).unwrap().render()
    );
}
