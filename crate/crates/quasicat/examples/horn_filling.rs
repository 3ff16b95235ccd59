//! Classify a few simplicial sets by which horns they fill.

use quasicat::category::{coskeletal_nerve, nerve, FiniteCategory};
use quasicat::lifting::{check_kan, check_quasicategory, check_unique_inner_fillers, ClassificationVerdict};
use quasicat::sset::{horn, standard_simplex, FiniteSimplicialSet};

fn show(name: &str, x: &FiniteSimplicialSet, v: &ClassificationVerdict) {
    let witness = v
        .failure_witness
        .as_ref()
        .map(|h| format!("  missing filler: {}", h.render(x)))
        .unwrap_or_default();
    println!("  {name:<28} {:<14}{witness}", v.kind.to_string());
}

fn main() {
    let corpus: Vec<(&str, FiniteSimplicialSet)> = vec![
        ("Δ²", standard_simplex(2, 3)),
        ("Λ²₁", horn(2, 1, 3)),
        ("N([2])", nerve(&FiniteCategory::ordinal(2), 3)),
        ("N(C₂)", nerve(&FiniteCategory::cyclic_group(2), 3)),
        ("N(S₃)", nerve(&FiniteCategory::symmetric_group_3(), 3)),
    ];
    for (label, check) in [
        ("inner horns", check_quasicategory as fn(&FiniteSimplicialSet, usize) -> ClassificationVerdict),
        ("all horns", check_kan),
        ("unique inner fillers", check_unique_inner_fillers),
    ] {
        println!("{label} up to dimension 3:");
        for (name, x) in &corpus {
            show(name, x, &check(x, 3));
        }
    }

    // Rebuild C₃ from its 2-truncated nerve after setting g∘g = e. The
    // table is no longer associative, so some inner 3-horn has no filler.
    let bad = FiniteCategory::cyclic_group(3).with_composite(1, 1, 0);
    let x = coskeletal_nerve(&bad, 3);
    println!("corrupted C₃:");
    show("N(C₃ with g∘g = e)", &x, &check_unique_inner_fillers(&x, 3));
}
