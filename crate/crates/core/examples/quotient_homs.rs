//! Homomorphisms between finitely presented modules `L / N`.

use solvkit::homs::{hom_exists, HomCheck, Presentation, QuotientHom};
use solvkit::{validate_algebra, AlgebraDef, Field, FreeModule, HomError, OrderDescriptor};

fn main() {
    let q = Field::Rational;
    let k = validate_algebra(AlgebraDef::commutative(
        ["x", "y"],
        q,
        OrderDescriptor::deglex(2),
    ))
    .unwrap();
    let (x, y) = (k.generator(0), k.generator(1));
    let l1 = FreeModule::pot(&k, 1);

    // K[x, y]/<x>  →  K[x, y]/<x, y>,  1 ↦ 1, is well defined and onto.
    let m1 = Presentation::new(&l1, vec![l1.from_poly(&x)]).unwrap();
    let m2 = Presentation::new(&l1, vec![l1.from_poly(&x), l1.from_poly(&y)]).unwrap();
    let phi = QuotientHom::new(m1, m2, vec![l1.unit(0)]).unwrap();
    let kernel: Vec<String> = phi.kernel().unwrap().iter().map(|v| l1.render(v)).collect();
    println!("kernel: [ {} ]", kernel.join(", "));
    println!(
        "surjective: {}",
        phi.is_surjective().unwrap().is_surjective()
    );

    // The other direction is not: y = 0 in the source but not in the target.
    let m1 = Presentation::new(&l1, vec![l1.from_poly(&x), l1.from_poly(&y)]).unwrap();
    let m2 = Presentation::new(&l1, vec![l1.from_poly(&x)]).unwrap();
    let swapped = [l1.unit(0)];
    match hom_exists(&m1, &m2, &swapped).unwrap() {
        HomCheck::WellDefined => println!("well defined"),
        HomCheck::NotWellDefined(r) => println!("relation {} is not respected", r + 1),
    }
    match QuotientHom::new(m1, m2, swapped.to_vec()) {
        Err(HomError::HomNotWellDefined(r)) => {
            println!("construction refused at relation {}", r + 1)
        }
        other => println!("unexpected: {:?}", other.map(|_| ())),
    }

    // With no relations the quotient maps behave like free ones.
    let free = Presentation::free(&l1);
    let times_x = QuotientHom::new(free, Presentation::free(&l1), vec![l1.from_poly(&x)]).unwrap();
    println!(
        "multiplication by x: kernel {:?}",
        times_x.kernel().unwrap()
    );
}
