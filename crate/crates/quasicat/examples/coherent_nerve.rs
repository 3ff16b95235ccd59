//! The thickened simplex C[Δ²] and two coherent nerves.

use std::time::Instant;

use quasicat::category::{coherent_nerve, is_locally_kan, nerve, thickened_simplex, FiniteCategory, FiniteSimplicialCategory};
use quasicat::lifting::check_quasicategory;
use quasicat::sset::find_isomorphism;

fn main() {
    let t = thickened_simplex(2, 2);
    println!("hom-spaces of C[Δ²]:");
    for i in 0..=2 {
        for j in i..=2 {
            let h = t.category.hom(i, j);
            let verts: Vec<&str> = h.nondegenerate(0).into_iter().map(|v| h.name(0, v)).collect();
            let edges: Vec<&str> = h.nondegenerate(1).into_iter().map(|e| h.name(1, e)).collect();
            println!("  Map({i},{j}): vertices {verts:?}, edges {edges:?}");
        }
    }

    // Discrete hom-spaces: the coherent nerve is the ordinary nerve.
    let c = FiniteCategory::cyclic_group(2);
    let cn = coherent_nerve(&FiniteSimplicialCategory::from_category(&c, 3), 3);
    let n = nerve(&c, 3);
    println!(
        "discrete C₂: coherent nerve levels {:?}, nerve levels {:?}, isomorphic: {}",
        cn.set.level_sizes(),
        n.level_sizes(),
        find_isomorphism(&cn.set, &n).is_some()
    );

    // One object with endomorphisms N(C₂); each hom-space is Kan.
    let b = FiniteSimplicialCategory::delooping(&c, 3).unwrap();
    println!("delooping of N(C₂): locally Kan up to dim 3: {}", is_locally_kan(&b, 3).0);
    let start = Instant::now();
    let cb = coherent_nerve(&b, 3);
    let v = check_quasicategory(&cb.set, 3);
    println!("  coherent nerve levels {:?}: {} ({:.2?})", cb.set.level_sizes(), v.kind, start.elapsed());
}
