//! Homotopy classes of edges and the homotopy category of a quasi-category.

use quasicat::category::{category_isomorphism, coherent_nerve, nerve, FiniteCategory, FiniteSimplicialCategory};
use quasicat::homotopy::{homotopy_category, homotopy_classes, is_equivalence, is_infinity_groupoid};

fn main() {
    for (name, c) in [
        ("[2]", FiniteCategory::ordinal(2)),
        ("parallel pair", FiniteCategory::parallel_pair()),
        ("S₃", FiniteCategory::symmetric_group_3()),
    ] {
        let x = nerve(&c, 3);
        let ho = homotopy_category(&x, 3).unwrap();
        println!(
            "Ho(N({name})): {} objects, {} morphisms, isomorphic to {name}: {}, groupoid: {}",
            ho.category.num_objects(),
            ho.category.num_morphisms(),
            category_isomorphism(&ho.category, &c).is_some(),
            is_infinity_groupoid(&x, 3).unwrap()
        );
    }

    // A one-object category with endomorphisms N(C₂): one vertex of the hom
    // gives one edge, and its Ho is trivial.
    let b = FiniteSimplicialCategory::delooping(&FiniteCategory::cyclic_group(2), 3).unwrap();
    let x = coherent_nerve(&b, 3).set;
    let classes = homotopy_classes(&x, 0, 0).unwrap();
    println!("coherent nerve of the delooping: edges {} in classes {:?}", x.level_size(1), classes.classes);
    let ho = homotopy_category(&x, 3).unwrap();
    println!("  Ho has {} morphism(s); closure needed: {}", ho.category.num_morphisms(), ho.closure_needed);

    let arrow = nerve(&FiniteCategory::ordinal(1), 3);
    let edge = (0..arrow.level_size(1)).find(|&e| !arrow.is_degenerate(1, e)).unwrap();
    println!("0→1 in N([1]) is an equivalence: {}", is_equivalence(&arrow, edge, 3).unwrap().is_some());
}
