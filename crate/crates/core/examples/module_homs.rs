//! Homomorphisms between free modules: kernels, images and surjectivity.

use solvkit::homs::{FreeHom, ImageMembership};
use solvkit::{validate_algebra, AlgebraDef, Field, FreeModule, OrderDescriptor};

fn main() {
    let q = Field::Rational;
    let k = validate_algebra(AlgebraDef::commutative(
        ["x", "y"],
        q,
        OrderDescriptor::deglex(2),
    ))
    .unwrap();
    let target = FreeModule::pot(&k, 1);
    let (x, y) = (k.generator(0), k.generator(1));

    // The Koszul map e1 ↦ x, e2 ↦ y; its kernel is generated by y e1 - x e2.
    let koszul = FreeHom::new(&target, vec![target.from_poly(&x), target.from_poly(&y)]).unwrap();
    let source = koszul.source();
    println!("kernel: {}", koszul.kernel().unwrap().render());

    let eta = target.from_poly(&k.poly_i64(&[(1, [2, 0]), (1, [0, 1])]));
    match koszul.image_membership(&eta).unwrap() {
        ImageMembership::InImage(pre) => {
            println!("{} = φ({})", target.render(&eta), source.render(&pre));
            assert_eq!(koszul.evaluate(&pre), eta);
        }
        ImageMembership::NotInImage => println!("{} is not in the image", target.render(&eta)),
    }
    println!(
        "surjective: {}",
        koszul.is_surjective().unwrap().is_surjective()
    );

    // e1 ↦ x + 1, e2 ↦ x hits 1 = (x + 1) - x.
    let onto = FreeHom::new(
        &target,
        vec![
            target.from_poly(&k.poly_i64(&[(1, [1, 0]), (1, [0, 0])])),
            target.from_poly(&x),
        ],
    )
    .unwrap();
    if let solvkit::homs::Surjectivity::Surjective(rows) = onto.is_surjective().unwrap() {
        let row: Vec<String> = rows[0].iter().map(|f| k.render(f)).collect();
        println!("e1 = {} applied to the images", row.join(", "));
    }
}
