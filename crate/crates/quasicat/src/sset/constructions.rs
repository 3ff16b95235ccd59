use std::collections::HashMap;

use super::{FiniteSimplicialSet, SimplicialMap};

/// All monotone sequences `[n] -> [m]`, lexicographically ordered.
pub fn monotone_sequences(n: usize, m: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n + 1 {
            out.push(cur.clone());
            return;
        }
        let lo = cur.last().copied().unwrap_or(0);
        for v in lo..=m {
            cur.push(v);
            go(n, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, m, &mut Vec::new(), &mut out);
    out
}

fn seq_name(s: &[usize], m: usize) -> String {
    if m < 10 {
        s.iter().map(|v| char::from(b'0' + *v as u8)).collect()
    } else {
        s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    }
}

fn face_seq(s: &[usize], j: usize) -> Vec<usize> {
    let mut t = s.to_vec();
    t.remove(j);
    t
}

fn degen_seq(s: &[usize], j: usize) -> Vec<usize> {
    let mut t = s.to_vec();
    t.insert(j, s[j]);
    t
}

fn sub_of_simplex(m: usize, trunc: usize, keep: impl Fn(&[usize]) -> bool) -> FiniteSimplicialSet {
    let levels: Vec<Vec<Vec<usize>>> =
        (0..=trunc).map(|n| monotone_sequences(n, m).into_iter().filter(|s| keep(s)).collect()).collect();
    FiniteSimplicialSet::from_keys(trunc, &levels, |s, j| face_seq(s, j), |s, j| degen_seq(s, j), |s| seq_name(s, m))
}

/// The standard `m`-simplex truncated at `trunc`; simplices are named by
/// their vertex sequences (`"012"`, `"001"`, ...).
pub fn standard_simplex(m: usize, trunc: usize) -> FiniteSimplicialSet {
    sub_of_simplex(m, trunc, |_| true)
}

/// The horn missing the interior and the face opposite vertex `i`.
pub fn horn(m: usize, i: usize, trunc: usize) -> FiniteSimplicialSet {
    assert!(m >= 1 && i <= m, "horn index out of range");
    sub_of_simplex(m, trunc, |s| (0..=m).any(|j| j != i && !s.contains(&j)))
}

/// Horn together with its inclusion into the standard simplex.
pub fn horn_with_inclusion(m: usize, i: usize, trunc: usize) -> (FiniteSimplicialSet, SimplicialMap) {
    let h = horn(m, i, trunc);
    let d = standard_simplex(m, trunc);
    let inc = SimplicialMap::inclusion_by_name(&h, &d).expect("horn is a subset of the simplex");
    (h, inc)
}

/// The boundary of the `m`-simplex; empty for `m = 0`.
pub fn boundary(m: usize, trunc: usize) -> FiniteSimplicialSet {
    sub_of_simplex(m, trunc, |s| (0..=m).any(|j| !s.contains(&j)))
}

/// Position of the pair `(a, b)` in level `n` of a product whose right factor
/// has `right_size` simplices at that level.
pub fn product_index(a: usize, b: usize, right_size: usize) -> usize {
    a * right_size + b
}

/// Levelwise product, truncated at the smaller truncation.
pub fn product(x: &FiniteSimplicialSet, y: &FiniteSimplicialSet) -> FiniteSimplicialSet {
    let trunc = x.trunc_dim().min(y.trunc_dim());
    let levels: Vec<Vec<(usize, usize)>> = (0..=trunc)
        .map(|n| {
            let mut l = Vec::with_capacity(x.level_size(n) * y.level_size(n));
            for a in 0..x.level_size(n) {
                for b in 0..y.level_size(n) {
                    l.push((a, b));
                }
            }
            l
        })
        .collect();
    let mut names = Vec::new();
    let mut faces = Vec::new();
    let mut degens = Vec::new();
    for (n, level) in levels.iter().enumerate() {
        names.push(level.iter().map(|&(a, b)| format!("({},{})", x.name(n, a), y.name(n, b))).collect());
        let ys_lower = if n > 0 { y.level_size(n - 1) } else { 0 };
        faces.push(
            level
                .iter()
                .map(|&(a, b)| {
                    if n == 0 {
                        Vec::new()
                    } else {
                        (0..=n).map(|j| product_index(x.face(n, a, j), y.face(n, b, j), ys_lower)).collect()
                    }
                })
                .collect(),
        );
        if n < trunc {
            let ys_upper = y.level_size(n + 1);
            degens.push(
                level
                    .iter()
                    .map(|&(a, b)| (0..=n).map(|j| product_index(x.degen(n, a, j), y.degen(n, b, j), ys_upper)).collect())
                    .collect(),
            );
        }
    }
    FiniteSimplicialSet::from_tables(trunc, names, faces, degens)
}

/// The map `Δ^src -> Δ^tgt` induced by a monotone `f: [src] -> [tgt]`.
pub fn standard_map(src: usize, tgt: usize, f: &[usize], trunc: usize) -> SimplicialMap {
    assert_eq!(f.len(), src + 1);
    let mut levels = Vec::with_capacity(trunc + 1);
    for n in 0..=trunc {
        let targets = monotone_sequences(n, tgt);
        let index: HashMap<&Vec<usize>, usize> = targets.iter().enumerate().map(|(i, s)| (s, i)).collect();
        levels.push(
            monotone_sequences(n, src)
                .iter()
                .map(|s| {
                    let img: Vec<usize> = s.iter().map(|&v| f[v]).collect();
                    index[&img]
                })
                .collect(),
        );
    }
    SimplicialMap::new(levels)
}

/// Adds one level whose simplices are all compatible boundaries: every
/// `(n+2)`-tuple of top simplices with `dᵢ tⱼ = dⱼ₋₁ tᵢ` for `i < j`.
pub fn extend_by_boundaries(x: &FiniteSimplicialSet) -> FiniteSimplicialSet {
    #[derive(Debug, Clone, PartialEq, Eq, Hash)]
    enum Key {
        Old(usize, usize),
        New(Vec<usize>),
    }
    let k = x.trunc_dim();
    let n = k + 1;
    let mut tuples = Vec::new();
    let mut cur = Vec::with_capacity(n + 1);
    fn rec(x: &FiniteSimplicialSet, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let j = cur.len();
        if j == k + 2 {
            out.push(cur.clone());
            return;
        }
        for t in 0..x.level_size(k) {
            if k == 0 || (0..j).all(|i| x.face(k, t, i) == x.face(k, cur[i], j - 1)) {
                cur.push(t);
                rec(x, k, cur, out);
                cur.pop();
            }
        }
    }
    rec(x, k, &mut cur, &mut tuples);
    // Faces of `s_j σ` from the simplicial identities.
    let degen_top = |s: usize, j: usize| -> Vec<usize> {
        (0..=n)
            .map(|i| {
                if i < j {
                    x.degen(k - 1, x.face(k, s, i), j - 1)
                } else if i == j || i == j + 1 {
                    s
                } else {
                    x.degen(k - 1, x.face(k, s, i - 1), j)
                }
            })
            .collect()
    };
    let mut levels: Vec<Vec<Key>> = (0..=k).map(|l| (0..x.level_size(l)).map(|i| Key::Old(l, i)).collect()).collect();
    levels.push(tuples.into_iter().map(Key::New).collect());
    FiniteSimplicialSet::from_keys(
        n,
        &levels,
        |key, i| match key {
            Key::Old(l, s) => Key::Old(l - 1, x.face(*l, *s, i)),
            Key::New(t) => Key::Old(k, t[i]),
        },
        |key, j| match key {
            Key::Old(l, s) if *l == k => Key::New(degen_top(*s, j)),
            Key::Old(l, s) => Key::Old(l + 1, x.degen(*l, *s, j)),
            Key::New(_) => unreachable!("top level has no degeneracies"),
        },
        |key| match key {
            Key::Old(l, s) => x.name(*l, *s).to_string(),
            Key::New(t) => format!("⟨{}⟩", t.iter().map(|&f| x.name(k, f)).collect::<Vec<_>>().join(",")),
        },
    )
}
