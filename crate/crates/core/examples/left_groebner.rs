//! Left Gröbner bases, normal forms and membership.

use solvkit::groebner::{ideal_basis, member_poly, normal_form_poly, reduce_basis};
use solvkit::{validate_algebra, AlgebraDef, Exponent, Field, OrderDescriptor};

fn main() {
    let q = Field::Rational;
    let w = validate_algebra(
        AlgebraDef::new(["x", "d"], q, OrderDescriptor::deglex(2)).relation(
            1,
            0,
            q.one(),
            [(q.one(), Exponent::zero(2))],
        ),
    )
    .unwrap();

    // The left ideal generated by x*d + 1 (annihilator of 1/x).
    let gens = [w.poly_i64(&[(1, [1, 1]), (1, [0, 0])])];
    let gb = reduce_basis(&ideal_basis(&w, &gens).unwrap());
    println!("basis: {}", gb.render());
    println!("certified: {}", gb.certify());

    let f = w.poly_i64(&[(1, [2, 1])]);
    println!(
        "nf(x^2*d) = {}",
        w.render(&normal_form_poly(&gb, &f).unwrap())
    );
    let g = w.poly_i64(&[(1, [2, 1]), (1, [1, 0])]);
    println!(
        "x^2*d + x is a member: {}",
        member_poly(&gb, &g).unwrap().is_member()
    );

    // x and d together generate everything: d*x - x*d = 1.
    let unit = reduce_basis(&ideal_basis(&w, &[w.generator(0), w.generator(1)]).unwrap());
    println!("<x, d> = {}", unit.render());

    // Over a prime field the same code runs with machine-word coefficients.
    let p = Field::prime(7).unwrap();
    let k = validate_algebra(AlgebraDef::commutative(
        ["x", "y"],
        p,
        OrderDescriptor::lex(2),
    ))
    .unwrap();
    let gens = [
        k.poly_i64(&[(1, [2, 0]), (-1, [0, 1])]),
        k.poly_i64(&[(1, [1, 1]), (-1, [0, 0])]),
    ];
    println!(
        "over GF 7: {}",
        reduce_basis(&ideal_basis(&k, &gens).unwrap()).render()
    );
}
