use quasicat::category::{nerve, FiniteCategory, Morphism};
use quasicat::homotopy::is_equivalence;
use quasicat::join_slice::{
    colimit_candidates, empty_diagram, final_vertices, join, limit_candidates, right_cone, slice_over, vertex_diagram,
};
use quasicat::sset::{enumerate_maps, find_isomorphism, horn, standard_simplex, FiniteSimplicialSet, SimplicialMap};

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Level sizes of `K ⋆ M` straight from the defining union.
fn join_level_sizes(k: &[usize], m: &[usize]) -> Vec<usize> {
    (0..k.len())
        .map(|n| k[n] + m[n] + (0..n).map(|i| k[i] * m[n - 1 - i]).sum::<usize>())
        .collect()
}

#[test]
fn simplex_joins_are_simplices() {
    for i in 0..=3 {
        for j in 0..=3 - i {
            let n = i + 1 + j;
            let (a, b) = (standard_simplex(i, 4), standard_simplex(j, 4));
            let ij = join(&a, &b, 4).unwrap();
            assert!(ij.set.validate().is_clean());
            let expected: Vec<usize> = (0..=4).map(|l| binom(n + l + 1, l + 1)).collect();
            assert_eq!(ij.set.level_sizes(), expected);
            assert_eq!(ij.set.level_sizes(), join_level_sizes(&a.level_sizes(), &b.level_sizes()));
            let iso = find_isomorphism(&ij.set, &standard_simplex(n, 4)).unwrap();
            assert!(iso.is_valid(&ij.set, &standard_simplex(n, 4)));
        }
    }
}

#[test]
fn join_counts_match_formula_on_corpus() {
    let corpus: Vec<FiniteSimplicialSet> = vec![
        horn(2, 1, 3),
        horn(2, 0, 3),
        standard_simplex(1, 3),
        nerve(&FiniteCategory::cyclic_group(2), 3),
        FiniteSimplicialSet::empty(3),
    ];
    for k in &corpus {
        for m in &corpus {
            let j = join(k, m, 3).unwrap();
            assert_eq!(j.set.level_sizes(), join_level_sizes(&k.level_sizes(), &m.level_sizes()));
            assert!(j.set.validate().is_clean());
        }
    }
}

#[test]
fn cone_on_nerve_is_nerve_of_cone() {
    for c in [FiniteCategory::ordinal(1), FiniteCategory::parallel_pair(), FiniteCategory::cyclic_group(2)] {
        let cone = right_cone(&nerve(&c, 3), 3).unwrap();
        assert!(find_isomorphism(&cone.set, &nerve(&c.with_terminal("∞"), 3)).is_some());
    }
}

#[test]
fn nerve_slices_are_over_category_nerves() {
    for (c, x) in [(FiniteCategory::ordinal(2), 1), (FiniteCategory::parallel_pair(), 1), (FiniteCategory::cyclic_group(2), 0)] {
        let nc = nerve(&c, 4);
        let (m, p) = vertex_diagram(&nc, x, 4);
        let s = slice_over(&nc, &m, &p, 2).unwrap();
        assert!(s.set.validate().is_clean());
        assert!(find_isomorphism(&s.set, &nerve(&c.over(x), 2)).is_some());
    }
}

#[test]
fn slice_universal_property_on_a_horn() {
    let nc = nerve(&FiniteCategory::ordinal(2), 5);
    let (m, p) = vertex_diagram(&nc, 2, 5);
    let s = slice_over(&nc, &m, &p, 2).unwrap();
    let k = horn(2, 1, 3);
    let via_slice = enumerate_maps(&k.truncate(2), &s.set, 2).len();
    let kj = join(&k, &standard_simplex(0, 3), 3).unwrap();
    let direct = enumerate_maps(&kj.set, &nc.truncate(3), 3)
        .into_iter()
        .filter(|f| {
            let cone = kj.index_of(0, quasicat::join_slice::JoinSimplex::Right(0)).unwrap();
            f.apply(0, cone) == 2
        })
        .count();
    assert_eq!(via_slice, direct);
}

fn diamond() -> FiniteCategory {
    // bottom < a, b < top
    FiniteCategory::poset(&["bot", "a", "b", "top"], |x, y| x == y || x == 0 || y == 3)
}

fn discrete_pair(c: &FiniteSimplicialSet, u: usize, v: usize, trunc: usize) -> (FiniteSimplicialSet, SimplicialMap) {
    let names = vec!["u".to_string(), "v".to_string()];
    let m = quasicat::category::discrete_set(&names, trunc);
    let p = SimplicialMap::new((0..=trunc).map(|l| vec![c.constant_simplex(u, l), c.constant_simplex(v, l)]).collect());
    (m, p)
}

#[test]
fn products_and_coproducts_in_a_lattice() {
    let np = nerve(&diamond(), 4);
    let (m, p) = discrete_pair(&np, 1, 2, 4);
    let lim = limit_candidates(&np, &m, &p, 2).unwrap();
    assert_eq!(lim.apexes(), vec![0]);
    let colim = colimit_candidates(&np, &m, &p, 2).unwrap();
    assert_eq!(colim.apexes(), vec![3]);
}

#[test]
fn pullback_in_a_lattice() {
    let np = nerve(&diamond(), 5);
    // a -> top <- b as a map out of the horn with vertices 0, 1, 2 and cone point 2.
    let k = horn(2, 2, 5);
    let targets = [1usize, 2, 3];
    let p = enumerate_maps(&k, &np, 5)
        .into_iter()
        .find(|f| (0..3).all(|v| f.apply(0, v) == targets[v]))
        .unwrap();
    let lim = limit_candidates(&np, &k, &p, 2).unwrap();
    assert_eq!(lim.apexes(), vec![0]);
}

#[test]
fn empty_diagram_limits_are_final_objects() {
    let np = nerve(&diamond(), 4);
    let (m, p) = empty_diagram(4);
    let lim = limit_candidates(&np, &m, &p, 3).unwrap();
    let finals = final_vertices(&np, 3).unwrap();
    let names: Vec<String> = finals.iter().map(|&v| np.name(0, v).to_string()).collect();
    assert_eq!(lim.names(), names);
    assert_eq!(names, vec!["top".to_string()]);
}

#[test]
fn final_objects_are_equivalent() {
    let iso = FiniteCategory::new(
        vec!["x".into(), "y".into()],
        vec![
            Morphism { name: "id_x".into(), src: 0, tgt: 0 },
            Morphism { name: "id_y".into(), src: 1, tgt: 1 },
            Morphism { name: "u".into(), src: 0, tgt: 1 },
            Morphism { name: "v".into(), src: 1, tgt: 0 },
        ],
        vec![0, 1],
        |g, f| match (g, f) {
            (0 | 1, f) => Some(f),
            (g, 0 | 1) => Some(g),
            (2, 3) => Some(1),
            (3, 2) => Some(0),
            _ => None,
        },
    )
    .unwrap();
    let nc = nerve(&iso, 4);
    let finals = final_vertices(&nc, 3).unwrap();
    assert_eq!(finals, vec![0, 1]);
    assert_eq!(final_vertices(&nerve(&iso.with_terminal("t"), 4), 3).unwrap(), vec![2]);
    for &a in &finals {
        for &b in &finals {
            let edge = (0..nc.level_size(1)).find(|&e| nc.face(1, e, 1) == a && nc.face(1, e, 0) == b).unwrap();
            assert!(is_equivalence(&nc, edge, 3).unwrap().is_some());
        }
    }
}
