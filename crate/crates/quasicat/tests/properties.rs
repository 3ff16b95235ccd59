use proptest::prelude::*;

use quasicat::category::{category_isomorphism, nerve, FiniteCategory};
use quasicat::homotopy::homotopy_category;
use quasicat::io::{parse_sset, render_sset};
use quasicat::join_slice::{final_vertices, join};
use quasicat::lifting::check_unique_inner_fillers;
use quasicat::monoidal::{BaseKind, BaseMap};
use quasicat::sset::{find_isomorphism, horn, standard_simplex};
use quasicat::symmetric::{phi, Matrix, MatrixCategory};

/// A random partial order on `0..n` refining the usual order, as the
/// transitive closure of a random set of pairs `i < j`.
fn poset(n: usize, bits: &[bool]) -> FiniteCategory {
    let mut leq = vec![vec![false; n]; n];
    let mut k = 0;
    for i in 0..n {
        leq[i][i] = true;
        for j in i + 1..n {
            leq[i][j] = bits[k];
            k += 1;
        }
    }
    for m in 0..n {
        for i in 0..n {
            for j in 0..n {
                if leq[i][m] && leq[m][j] {
                    leq[i][j] = true;
                }
            }
        }
    }
    let names: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    FiniteCategory::poset(&refs, |a, b| leq[a][b])
}

fn poset_strategy() -> impl Strategy<Value = FiniteCategory> {
    (1usize..=4).prop_flat_map(|n| prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |b| poset(n, &b)))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(0u8..2, rows * cols).prop_map(move |entries| Matrix { rows, cols, entries })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn poset_nerves_have_unique_inner_fillers(p in poset_strategy()) {
        let x = nerve(&p, 3);
        prop_assert!(check_unique_inner_fillers(&x, 3).passed());
        let ho = homotopy_category(&x, 3).unwrap();
        prop_assert!(!ho.closure_needed);
        prop_assert!(category_isomorphism(&ho.category, &p).is_some());
    }

    #[test]
    fn top_element_is_the_only_final_vertex(p in poset_strategy()) {
        let with_top = p.with_terminal("top");
        let x = nerve(&with_top, 4);
        let top = with_top.object_index("top").unwrap();
        prop_assert_eq!(final_vertices(&x, 3).unwrap(), vec![top]);
    }

    #[test]
    fn json_round_trip_preserves_nerves(p in poset_strategy()) {
        let x = nerve(&p, 3);
        let y = parse_sset(&render_sset(&x)).unwrap();
        prop_assert_eq!(y.level_sizes(), x.level_sizes());
        prop_assert!(find_isomorphism(&x, &y).is_some());
        prop_assert_eq!(render_sset(&y), render_sset(&x));
    }

    #[test]
    fn join_level_counts(i in 0usize..=2, k in 0usize..=2, left_horn in any::<bool>()) {
        let a = if left_horn { horn(2, i.min(2), 3) } else { standard_simplex(i, 3) };
        let b = standard_simplex(k, 3);
        let j = join(&a, &b, 3).unwrap();
        let (ka, kb) = (a.level_sizes(), b.level_sizes());
        let expected: Vec<usize> =
            (0..=3).map(|n| ka[n] + kb[n] + (0..n).map(|t| ka[t] * kb[n - 1 - t]).sum::<usize>()).collect();
        prop_assert_eq!(j.set.level_sizes(), expected);
        prop_assert!(j.set.validate().is_clean());
    }

    #[test]
    fn phi_is_functorial(n in 0usize..=3, seed in any::<u64>()) {
        let all = BaseMap::all(BaseKind::DeltaOp, 3);
        let from_n: Vec<&BaseMap> = all.iter().filter(|a| a.src_len() == n).collect();
        let a = from_n[(seed % from_n.len() as u64) as usize];
        let next: Vec<&BaseMap> = all.iter().filter(|b| b.src_len() == a.tgt_len()).collect();
        let b = next[((seed >> 32) % next.len() as u64) as usize];
        prop_assert_eq!(phi(&a.then(b)), phi(a).then(&phi(b)));
        prop_assert_eq!(phi(a).is_collapsing(), a.is_convex());
    }

    #[test]
    fn kronecker_interchange(a in matrix(2, 1), b in matrix(1, 2), c in matrix(1, 2), d in matrix(2, 2)) {
        // (A⊗B)(C⊗D) = AC⊗BD
        prop_assert_eq!(a.kronecker(&b).mul(&c.kronecker(&d)), a.mul(&c).kronecker(&b.mul(&d)));
    }

    #[test]
    fn shuffle_is_natural(a in matrix(2, 2), b in matrix(2, 2)) {
        let s = MatrixCategory::shuffle(2, 2);
        prop_assert_eq!(s.mul(&a.kronecker(&b)), b.kronecker(&a).mul(&s));
        prop_assert_eq!(s.mul(&s), Matrix::identity(4));
    }

    #[test]
    fn inverses_are_two_sided(a in matrix(3, 3)) {
        match a.inverse() {
            Some(b) => {
                prop_assert_eq!(a.mul(&b), Matrix::identity(3));
                prop_assert_eq!(b.mul(&a), Matrix::identity(3));
            }
            None => prop_assert!(Matrix::all(3, 3).iter().all(|b| a.mul(b) != Matrix::identity(3))),
        }
    }
}
