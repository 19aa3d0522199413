//! Products in the first Weyl algebra, where `d` acts as `d/dx`.
//!
//! `d·x^n = x^n·d + n·x^(n-1)` is the Leibniz rule; the rewriting engine
//! finds it from the single relation `d x = x d + 1`.

use solvkit::{validate_algebra, AlgebraDef, Exponent, Field, OrderDescriptor};

fn main() {
    let q = Field::Rational;
    let def = AlgebraDef::new(["x", "d"], q, OrderDescriptor::deglex(2)).relation(
        1,
        0,
        q.one(),
        [(q.one(), Exponent::zero(2))],
    );
    let w = validate_algebra(def).expect("the Weyl algebra is a valid presentation");
    let (x, d) = (w.generator(0), w.generator(1));

    let mut xn = w.one();
    for n in 1..=4 {
        xn = w.mul(&xn, &x);
        println!("d * x^{n} = {}", w.render(&w.mul(&d, &xn)));
    }

    let xd = w.mul(&x, &d);
    println!("(x*d)^2 = {}", w.render(&w.mul(&xd, &xd)));

    // Monomials multiply with a cache, so repeated products are cheap.
    let a = w.poly_i64(&[(1, [2, 3]), (-2, [0, 1])]);
    let b = w.poly_i64(&[(3, [1, 2]), (1, [0, 0])]);
    println!(
        "({}) * ({}) = {}",
        w.render(&a),
        w.render(&b),
        w.render(&w.mul(&a, &b))
    );
}
