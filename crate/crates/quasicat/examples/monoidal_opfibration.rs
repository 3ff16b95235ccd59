//! Encode small monoidal categories as opfibrations over Δᵒᵖ and read the
//! tensor product back.

use quasicat::monoidal::{
    build_opfib_delta, check_opfibration, extract_tensor, monoidal_isomorphism, samples, validate_monoidal, BaseMap,
};

fn main() {
    for (name, m) in samples::corpus() {
        let p = build_opfib_delta(&m, 3).unwrap();
        let v = check_opfibration(&p);
        let back = extract_tensor(&p).unwrap();
        println!(
            "{name:<15} objects {:>3}, morphisms {:>5}, opfibration: {} ({} lifts), round trip: {}",
            p.objects.len(),
            p.num_morphisms(),
            v.holds,
            v.lifts_checked,
            monoidal_isomorphism(&back, &m.forget_braiding()).is_some()
        );
    }

    // The multiplication arrow [1] -> [2] skipping 1 pushes (x, y) to x⊗y.
    let m = samples::signed(true);
    let p = build_opfib_delta(&m, 2).unwrap();
    let d1 = p.base(&BaseMap::delta(2, vec![0, 2]).unwrap()).unwrap();
    for x in p.fiber(2) {
        println!("  {} ↦ {}", p.render_object(x), p.render_object(p.pushed_object(x, d1)));
    }

    let bad = m.with_associator(0, 1, 1, 1);
    match validate_monoidal(&bad).first("pentagon") {
        Some(v) => println!("corrupted associator: {v}"),
        None => println!("corrupted associator went unnoticed"),
    }
}
