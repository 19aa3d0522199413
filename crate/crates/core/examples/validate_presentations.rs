//! Checking presentations before using them.
//!
//! A presentation is accepted only if every λ is nonzero, every tail lies
//! below `a_i a_j`, and every overlap `a_k a_j a_i` resolves the same way.

use solvkit::{validate_algebra, AlgebraDef, AlgebraError, Exponent, Field, OrderDescriptor};

fn main() {
    let q = Field::Rational;
    let c = |n: i64| q.from_i64(n);
    let half = q.from_i64(1).div(&c(2));

    // The quantum Heisenberg algebra on y, z, x with q = 2.
    let heisenberg = AlgebraDef::new(["y", "z", "x"], q, OrderDescriptor::deglex(3))
        .relation(1, 0, c(2), [])
        .relation(2, 0, half, [(q.one(), Exponent::from_slice(&[0, 1, 0]))])
        .relation(2, 1, c(2), []);
    match validate_algebra(heisenberg) {
        Ok(h) => println!(
            "q-Heisenberg: valid, {} overlap(s) checked",
            h.report().overlaps_checked
        ),
        Err(e) => println!("q-Heisenberg: {e}"),
    }

    // yx = 2xy, zy = yz, zx = xz + y: the overlap zyx does not close.
    let broken = AlgebraDef::new(["x", "y", "z"], q, OrderDescriptor::lex(3))
        .relation(1, 0, c(2), [])
        .relation(2, 1, c(1), [])
        .relation(2, 0, c(1), [(c(1), Exponent::from_slice(&[0, 1, 0]))]);
    match validate_algebra(broken) {
        Err(AlgebraError::OverlapInconsistent {
            k,
            j,
            i,
            left,
            right,
        }) => {
            println!("overlap ({k}, {j}, {i}) fails: {left} versus {right}");
        }
        other => println!("unexpected: {other:?}"),
    }

    // A tail above a_i a_j breaks the ordering condition.
    let upward = AlgebraDef::new(["x", "y"], q, OrderDescriptor::deglex(2)).relation(
        1,
        0,
        c(1),
        [(c(1), Exponent::from_slice(&[0, 3]))],
    );
    println!("y*x = x*y + y^3: {}", validate_algebra(upward).unwrap_err());
}
