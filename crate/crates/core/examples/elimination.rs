//! Contracting a left ideal to the subalgebra on a subset of generators.

use solvkit::elimination::eliminate_ideal;
use solvkit::{validate_algebra, AlgebraDef, EliminationError, Exponent, Field, OrderDescriptor};

fn main() {
    let q = Field::Rational;
    let c = |n: i64| q.from_i64(n);

    // The twisted cubic: eliminating t from x - t, y - t^2, z - t^3.
    let k = validate_algebra(AlgebraDef::commutative(
        ["t", "x", "y", "z"],
        q,
        OrderDescriptor::deglex(4),
    ))
    .unwrap();
    let gens = [
        k.poly_i64(&[(1, [0, 1, 0, 0]), (-1, [1, 0, 0, 0])]),
        k.poly_i64(&[(1, [0, 0, 1, 0]), (-1, [2, 0, 0, 0])]),
        k.poly_i64(&[(1, [0, 0, 0, 1]), (-1, [3, 0, 0, 0])]),
    ];
    let curve = eliminate_ideal(&k, &gens, &[1, 2, 3]).unwrap();
    println!("twisted cubic: {}", curve.render());

    // In the Weyl algebra, <d> contracts to the zero ideal of K[x].
    let w = validate_algebra(
        AlgebraDef::new(["x", "d"], q, OrderDescriptor::deglex(2)).relation(
            1,
            0,
            q.one(),
            [(q.one(), Exponent::zero(2))],
        ),
    )
    .unwrap();
    let in_x = eliminate_ideal(&w, &[w.generator(1)], &[0]).unwrap();
    println!("<d> ∩ K[x] = {}", in_x.render());

    // {y, x} is not a subalgebra of the q-Heisenberg algebra: x y produces z.
    let h = validate_algebra(
        AlgebraDef::new(["y", "z", "x"], q, OrderDescriptor::deglex(3))
            .relation(1, 0, c(2), [])
            .relation(
                2,
                0,
                q.one().div(&c(2)),
                [(q.one(), Exponent::from_slice(&[0, 1, 0]))],
            )
            .relation(2, 1, c(2), []),
    )
    .unwrap();
    match eliminate_ideal(&h, &[h.generator(2)], &[0, 2]) {
        Err(EliminationError::ClosureFailure(f)) => {
            let names = h.names();
            let m = h.render(&h.monomial(q.one(), f.monomial.clone()));
            println!(
                "closure failure: {}*{} produces {m}",
                names[f.j], names[f.i]
            );
        }
        other => println!("unexpected: {other:?}"),
    }
}
