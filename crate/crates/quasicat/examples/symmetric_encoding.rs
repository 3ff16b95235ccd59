//! Symmetric monoidal categories over Fin, the comparison φ: Δᵒᵖ -> Fin and
//! forgetting commutativity.

use quasicat::monoidal::{
    check_algebra_section, extract_symmetric, monoidal_isomorphism, samples, validate_monoidal, BaseMap,
};
use quasicat::symmetric::{
    build_opfib_fin, check_commutative_algebra_section, collapsing_convex_check, commutative_section_from_monoid,
    forget_commutative, phi, phi_functoriality_check, underlying_monoidal,
};

fn main() {
    let r = collapsing_convex_check(4);
    println!("collapsing ⇔ convex on {} arrows of Δ up to [4]: {} mismatches", r.checked, r.mismatches.len());
    let (pairs, bad) = phi_functoriality_check(3);
    println!("φ preserves {} of {} composable pairs", pairs - bad.len(), pairs);
    for i in 1..=3 {
        let inc = BaseMap::delta(3, vec![i - 1, i]).unwrap();
        println!("  φ({inc}) = {}", phi(&inc));
    }

    let m = samples::super_signed();
    let p = build_opfib_fin(&m, 3).unwrap();
    let e = extract_symmetric(&p).unwrap();
    println!(
        "super signed over Fin: {} objects, extracted braiding valid {}, round trip {}",
        p.objects.len(),
        validate_monoidal(&e).is_clean(),
        monoidal_isomorphism(&e, &m).is_some()
    );

    let q = underlying_monoidal(&p).unwrap();
    let s = commutative_section_from_monoid(&p, 0, 0, 0).unwrap();
    let u = forget_commutative(&p, &q, &s);
    println!(
        "commutative monoid on 0: section holds {}, underlying section holds {}",
        check_commutative_algebra_section(&p, &s).holds(),
        check_algebra_section(&q, &u).holds()
    );
}
