//! Degeneracy normal forms.
//!
//! A degenerate simplex is written `s{j1} s{j2} ... x` with `j1 > j2 > ...`
//! and `x` non-degenerate. Internally the degeneracy operator is kept as a
//! monotone surjection `[n] -> [m]`; its normal-form indices are the
//! positions `i` with `σ(i) = σ(i+1)`.

use std::collections::{BTreeMap, HashMap};

use super::{monotone_sequences, FiniteSimplicialSet};
use crate::error::{Error, Result};

/// Normal-form indices (descending) of a monotone surjection.
pub fn word_of_surjection(sigma: &[usize]) -> Vec<usize> {
    let mut w: Vec<usize> = (0..sigma.len().saturating_sub(1)).filter(|&i| sigma[i] == sigma[i + 1]).collect();
    w.reverse();
    w
}

/// The surjection of `s_{j1} ... s_{jk}` applied to an `m`-simplex.
pub fn surjection_of_word(word: &[usize], m: usize) -> Result<Vec<usize>> {
    let mut tau: Vec<usize> = (0..=m).collect();
    for &j in word.iter().rev() {
        if j + 1 > tau.len() {
            return Err(Error::Parse(format!("degeneracy s{j} out of range on a {}-simplex", tau.len() - 1)));
        }
        let next: Vec<usize> = (0..=tau.len()).map(|v| tau[if v <= j { v } else { v - 1 }]).collect();
        tau = next;
    }
    Ok(tau)
}

/// Splits a monotone map into `(surjection, injection)` with `f = ι ∘ τ`.
pub fn epi_mono(f: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut image: Vec<usize> = f.to_vec();
    image.dedup();
    let tau = f.iter().map(|v| image.iter().position(|w| w == v).unwrap()).collect();
    (tau, image)
}

pub fn format_expr(word: &[usize], id: &str) -> String {
    let mut s = String::new();
    for j in word {
        s.push_str(&format!("s{j} "));
    }
    s.push_str(id);
    s
}

/// Parses `"s1 s0 x"` (or a bare id) into its word and base id.
pub fn parse_expr(s: &str) -> Result<(Vec<usize>, String)> {
    let toks: Vec<&str> = s.split_whitespace().collect();
    let (id, ops) = toks.split_last().ok_or_else(|| Error::Parse("empty face entry".into()))?;
    let mut word = Vec::new();
    for t in ops {
        let j = t
            .strip_prefix('s')
            .and_then(|r| r.parse::<usize>().ok())
            .ok_or_else(|| Error::Parse(format!("bad degeneracy token `{t}` in `{s}`")))?;
        word.push(j);
    }
    if word.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::Parse(format!("`{s}` is not in normal form (indices must strictly decrease)")));
    }
    Ok((word, id.to_string()))
}

/// Generated name for a degenerate simplex, e.g. `s1.s0.f`.
pub fn degenerate_name(word: &[usize], id: &str) -> String {
    let mut s = String::new();
    for j in word {
        s.push_str(&format!("s{j}."));
    }
    s.push_str(id);
    s
}

/// Non-degenerate presentation: ids per level and face expressions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NondegeneratePresentation {
    pub dim: usize,
    pub simplices: Vec<Vec<String>>,
    pub faces: BTreeMap<String, Vec<String>>,
}

type Key = (Vec<usize>, usize, usize);

struct Closure<'a> {
    /// Parsed faces of non-degenerate `(level, idx)`: `(surjection, base level, base idx)`.
    nd_faces: &'a HashMap<(usize, usize), Vec<Key>>,
}

impl Closure<'_> {
    fn apply_mono(&self, iota: &[usize], m: usize, x: usize) -> Key {
        if iota.len() == m + 1 {
            return ((0..=m).collect(), m, x);
        }
        let k = (0..=m).find(|v| !iota.contains(v)).unwrap();
        let iota2: Vec<usize> = iota.iter().map(|&v| if v < k { v } else { v - 1 }).collect();
        let (s1, m1, x1) = &self.nd_faces[&(m, x)][k];
        let g: Vec<usize> = iota2.iter().map(|&v| s1[v]).collect();
        let (tau, iota3) = epi_mono(&g);
        let (s2, m2, y) = self.apply_mono(&iota3, *m1, *x1);
        (tau.iter().map(|&v| s2[v]).collect(), m2, y)
    }

    fn face(&self, key: &Key, j: usize) -> Key {
        let (sigma, m, x) = key;
        let g: Vec<usize> = (0..sigma.len() - 1).map(|v| sigma[if v < j { v } else { v + 1 }]).collect();
        let (tau, iota) = epi_mono(&g);
        let (s2, m2, y) = self.apply_mono(&iota, *m, *x);
        (tau.iter().map(|&v| s2[v]).collect(), m2, y)
    }
}

/// Builds the full truncated set from non-degenerate data, closing under
/// degeneracies up to `dim`.
pub fn from_presentation(p: &NondegeneratePresentation) -> Result<FiniteSimplicialSet> {
    let dim = p.dim;
    if p.simplices.len() > dim + 1 {
        return Err(Error::Parse(format!("simplices listed above dim {dim}")));
    }
    let mut level_of = HashMap::new();
    for (n, l) in p.simplices.iter().enumerate() {
        for (i, s) in l.iter().enumerate() {
            if level_of.insert(s.clone(), (n, i)).is_some() {
                return Err(Error::Parse(format!("duplicate simplex id `{s}`")));
            }
        }
    }
    let mut nd_faces: HashMap<(usize, usize), Vec<Key>> = HashMap::new();
    for (n, l) in p.simplices.iter().enumerate() {
        for (i, s) in l.iter().enumerate() {
            if n == 0 {
                if p.faces.get(s).is_some_and(|f| !f.is_empty()) {
                    return Err(Error::Parse(format!("vertex `{s}` must not list faces")));
                }
                continue;
            }
            let entries = p.faces.get(s).ok_or_else(|| Error::Parse(format!("missing faces for `{s}`")))?;
            if entries.len() != n + 1 {
                return Err(Error::Parse(format!("`{s}` needs {} faces, found {}", n + 1, entries.len())));
            }
            let mut parsed = Vec::new();
            for e in entries {
                let (word, id) = parse_expr(e)?;
                let &(m, b) = level_of.get(&id).ok_or_else(|| Error::Parse(format!("unknown simplex `{id}` in faces of `{s}`")))?;
                if m + word.len() != n - 1 {
                    return Err(Error::Parse(format!("face `{e}` of `{s}` has the wrong dimension")));
                }
                parsed.push((surjection_of_word(&word, m)?, m, b));
            }
            nd_faces.insert((n, i), parsed);
        }
    }
    for k in p.faces.keys() {
        if !level_of.contains_key(k) {
            return Err(Error::Parse(format!("faces given for unknown simplex `{k}`")));
        }
    }
    let cl = Closure { nd_faces: &nd_faces };
    let mut levels: Vec<Vec<Key>> = Vec::new();
    for n in 0..=dim {
        let mut l: Vec<Key> = Vec::new();
        for m in 0..=n {
            let Some(ids) = p.simplices.get(m) else { continue };
            let surjs: Vec<Vec<usize>> =
                monotone_sequences(n, m).into_iter().filter(|s| (0..=m).all(|v| s.contains(&v))).collect();
            for b in 0..ids.len() {
                for s in &surjs {
                    l.push((s.clone(), m, b));
                }
            }
        }
        // Non-degenerate simplices first, in the order given.
        l.sort_by_key(|(s, m, b)| (*m != n, *m, *b, s.clone()));
        levels.push(l);
    }
    let name = |k: &Key| {
        let (s, m, b) = k;
        degenerate_name(&word_of_surjection(s), &p.simplices[*m][*b])
    };
    let degen = |k: &Key, j: usize| {
        let (s, m, b) = k;
        let t: Vec<usize> = (0..=s.len()).map(|v| s[if v <= j { v } else { v - 1 }]).collect();
        (t, *m, *b)
    };
    let set = FiniteSimplicialSet::from_keys(dim, &levels, |k, j| cl.face(k, j), degen, name);
    let report = set.validate();
    if let Some(issue) = report.issues.first() {
        return Err(Error::Invalid(issue.to_string()));
    }
    Ok(set)
}

/// Decomposes a simplex as a degeneracy word applied to a non-degenerate one.
pub fn decompose(x: &FiniteSimplicialSet, n: usize, s: usize) -> (Vec<usize>, usize, usize) {
    if !x.is_degenerate(n, s) {
        return ((0..=n).collect(), n, s);
    }
    for z in 0..x.level_size(n - 1) {
        for j in 0..n {
            if x.degen(n - 1, z, j) == s {
                let (sz, m, b) = decompose(x, n - 1, z);
                let sigma: Vec<usize> = (0..=n).map(|v| sz[if v <= j { v } else { v - 1 }]).collect();
                return (sigma, m, b);
            }
        }
    }
    unreachable!("degenerate simplex without a source")
}

/// Writes the non-degenerate presentation of a set. Names are made globally
/// unique by prefixing the level where different levels collide.
pub fn to_presentation(x: &FiniteSimplicialSet) -> NondegeneratePresentation {
    let dim = x.trunc_dim();
    let mut count: HashMap<&str, usize> = HashMap::new();
    for n in 0..=dim {
        for i in x.nondegenerate(n) {
            *count.entry(x.name(n, i)).or_default() += 1;
        }
    }
    let clash = count.values().any(|&c| c > 1);
    let label = |n: usize, i: usize| if clash { format!("{n}:{}", x.name(n, i)) } else { x.name(n, i).to_string() };
    let mut simplices = Vec::new();
    let mut faces = BTreeMap::new();
    for n in 0..=dim {
        simplices.push(x.nondegenerate(n).into_iter().map(|i| label(n, i)).collect());
        if n == 0 {
            continue;
        }
        for i in x.nondegenerate(n) {
            let entries = (0..=n)
                .map(|j| {
                    let (sigma, m, b) = decompose(x, n - 1, x.face(n, i, j));
                    format_expr(&word_of_surjection(&sigma), &label(m, b))
                })
                .collect();
            faces.insert(label(n, i), entries);
        }
    }
    NondegeneratePresentation { dim, simplices, faces }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{find_isomorphism, horn, standard_simplex};

    #[test]
    fn words_and_surjections() {
        let s = surjection_of_word(&[1, 0], 1).unwrap();
        assert_eq!(s, vec![0, 0, 0, 1]);
        assert_eq!(word_of_surjection(&s), vec![1, 0]);
        assert_eq!(parse_expr("s2 s0 f").unwrap(), (vec![2, 0], "f".into()));
        assert!(parse_expr("s0 s1 f").is_err());
        assert_eq!(epi_mono(&[0, 0, 2]), (vec![0, 0, 1], vec![0, 2]));
    }

    #[test]
    fn round_trip_through_presentation() {
        for x in [standard_simplex(2, 3), horn(3, 1, 3)] {
            let p = to_presentation(&x);
            let y = from_presentation(&p).unwrap();
            assert_eq!(y.level_sizes(), x.level_sizes());
            assert!(find_isomorphism(&y, &x).is_some());
        }
    }

    #[test]
    fn loader_names_degenerates() {
        let mut faces = BTreeMap::new();
        faces.insert("f".to_string(), vec!["b".to_string(), "a".to_string()]);
        let p = NondegeneratePresentation {
            dim: 2,
            simplices: vec![vec!["a".into(), "b".into()], vec!["f".into()]],
            faces,
        };
        let x = from_presentation(&p).unwrap();
        assert_eq!(x.level_sizes(), vec![2, 3, 4]);
        assert!(x.index_of(1, "s0.a").is_some());
        assert!(x.index_of(2, "s1.f").is_some());
        assert!(x.index_of(2, "s1.s0.a").is_some());
    }

    #[test]
    fn loader_rejects_inconsistent_faces() {
        let mut faces = BTreeMap::new();
        faces.insert("f".to_string(), vec!["b".to_string(), "a".to_string()]);
        faces.insert("g".to_string(), vec!["b".to_string(), "a".to_string()]);
        faces.insert("t".to_string(), vec!["f".to_string(), "f".to_string(), "g".to_string()]);
        let p = NondegeneratePresentation {
            dim: 2,
            simplices: vec![vec!["a".into(), "b".into()], vec!["f".into(), "g".into()], vec!["t".into()]],
            faces,
        };
        assert!(from_presentation(&p).is_err());
    }
}
