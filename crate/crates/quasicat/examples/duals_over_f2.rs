//! Dual pairs in finite-dimensional vector spaces over 𝔽₂.

use quasicat::monoidal::MonoidalCategory;
use quasicat::symmetric::{duals_canonical_iso, find_right_dual, matrix_category, swap_roles, check_dual_pair};

fn main() {
    let m = matrix_category(2, 2).unwrap();
    for x in m.objects() {
        let found = find_right_dual(&m, &x, 1 << 12).unwrap();
        println!("𝔽₂^{x}: {} dual witnesses", found.len());
        if let Some(w) = found.first() {
            println!("  η = {}, ε = {}", w.eta, w.eps);
            let s = swap_roles(&m, w).unwrap();
            println!("  with roles swapped: {}", check_dual_pair(&m, &s).holds);
        }
        if found.len() > 1 {
            let (f, g) = duals_canonical_iso(&m, &found[0], &found[1]).unwrap();
            println!("  comparison between the first two: {f} with inverse {g}");
        }
    }
    match find_right_dual(&m, &2, 10) {
        Ok(_) => println!("search under a budget of 10 finished"),
        Err(e) => println!("search under a budget of 10: {e}"),
    }
}
