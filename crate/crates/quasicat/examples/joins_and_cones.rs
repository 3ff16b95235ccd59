//! Joins of simplices and the two cone identities.

use quasicat::join_slice::{join, left_cone, right_cone};
use quasicat::sset::{find_isomorphism, horn, product, standard_simplex};

fn main() {
    for i in 0..=2 {
        for j in 0..=2 - i {
            let ij = join(&standard_simplex(i, 4), &standard_simplex(j, 4), 4).unwrap();
            let n = i + 1 + j;
            let iso = find_isomorphism(&ij.set, &standard_simplex(n, 4));
            println!("Δ{i} ⋆ Δ{j}: levels {:?}, ≅ Δ{n}: {}", ij.set.level_sizes(), iso.is_some());
        }
    }

    let square = product(&standard_simplex(1, 3), &standard_simplex(1, 3));
    let r = right_cone(&horn(2, 0, 3), 3).unwrap();
    let l = left_cone(&horn(2, 2, 3), 3).unwrap();
    for (name, cone) in [("(Λ²₀)^▷", &r.set), ("(Λ²₂)^◁", &l.set)] {
        match find_isomorphism(cone, &square) {
            Some(f) => {
                let image: Vec<&str> = (0..cone.level_size(0)).map(|v| square.name(0, f.apply(0, v))).collect();
                println!("{name} ≅ Δ¹×Δ¹, vertices go to {image:?}");
            }
            None => println!("{name} is not a square"),
        }
    }
}
