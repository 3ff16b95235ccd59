//! Monoids in a monoidal category as sections of its opfibration.

use quasicat::monoidal::{
    build_opfib_delta, check_algebra_section, is_initial_algebra, monoid_from_section, samples, section_from_data,
    section_from_monoid,
};

fn main() {
    let m = samples::signed(false);
    let p = build_opfib_delta(&m, 3).unwrap();
    println!("monoids in the signed category, as sections over Δᵒᵖ up to [3]:");
    for a in 0..m.num_objects() {
        for mu in m.base.hom(m.tensor_obj[a][a], a) {
            for eta in m.base.hom(m.unit, a) {
                let label = format!("A = {}, μ = {}, η = {}", m.base.objects[a], m.base.name(mu), m.base.name(eta));
                match section_from_monoid(&p, a, mu, eta) {
                    Ok(s) => {
                        let r = check_algebra_section(&p, &s);
                        let back = monoid_from_section(&p, &s).unwrap();
                        println!(
                            "  {label}: section holds {} ({} pairs), round trip {}, initial {}",
                            r.holds(),
                            r.pairs_checked,
                            (back.object, back.mu, back.eta) == (a, mu, eta),
                            is_initial_algebra(&p, &s).unwrap()
                        );
                    }
                    Err(e) => println!("  {label}: {e}"),
                }
            }
        }
    }

    // μ = 1 on A in the left-projection category is not associative.
    let m = samples::left_projection();
    let p = build_opfib_delta(&m, 3).unwrap();
    let a = m.base.object_index("A").unwrap();
    let s = section_from_data(&p, a, m.base.id(a), m.base.morphism_index("e").unwrap());
    let r = check_algebra_section(&p, &s);
    println!("left projection, μ = 1_A: {} failures, first: {}", r.failures.len(), r.failures[0]);
}
