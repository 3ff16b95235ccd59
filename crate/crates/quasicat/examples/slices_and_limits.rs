//! Slices, final objects and limit cones in nerves of small posets.

use quasicat::category::{discrete_set, nerve, FiniteCategory};
use quasicat::join_slice::{colimit_candidates, empty_diagram, final_vertices, limit_candidates, slice_over, vertex_diagram};
use quasicat::sset::{find_isomorphism, SimplicialMap};

fn main() {
    let c = FiniteCategory::ordinal(2);
    let nc = nerve(&c, 4);
    let (m, p) = vertex_diagram(&nc, 1, 4);
    let s = slice_over(&nc, &m, &p, 2).unwrap();
    println!(
        "N([2])/1: levels {:?}, ≅ N([2]/1): {}",
        s.set.level_sizes(),
        find_isomorphism(&s.set, &nerve(&c.over(1), 2)).is_some()
    );

    // bot < a, b < top
    let diamond = FiniteCategory::poset(&["bot", "a", "b", "top"], |x, y| x == y || x == 0 || y == 3);
    let nd = nerve(&diamond, 4);
    let name = |v: &[usize]| v.iter().map(|&x| nd.name(0, x).to_string()).collect::<Vec<_>>();
    println!("final objects of the diamond: {:?}", name(&final_vertices(&nd, 3).unwrap()));

    let (e, pe) = empty_diagram(4);
    println!("limits of the empty diagram: {:?}", limit_candidates(&nd, &e, &pe, 3).unwrap().names());

    let pair = discrete_set(&["u".to_string(), "v".to_string()], 4);
    let pa = SimplicialMap::new((0..=4).map(|l| vec![nd.constant_simplex(1, l), nd.constant_simplex(2, l)]).collect());
    println!("product of a and b: {:?}", limit_candidates(&nd, &pair, &pa, 2).unwrap().names());
    println!("coproduct of a and b: {:?}", colimit_candidates(&nd, &pair, &pa, 2).unwrap().names());
}
