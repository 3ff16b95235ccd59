//! Dimension-truncated finite simplicial sets.
//!
//! Every simplex up to the truncation is stored, degenerate ones included.
//! Simplices are addressed by `(level, index)`; each carries an opaque name.

mod constructions;
mod maps;
pub mod normal_form;

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

pub use constructions::{
    boundary, extend_by_boundaries, horn, horn_with_inclusion, monotone_sequences, product, product_index,
    standard_map, standard_simplex,
};
pub use maps::{
    enumerate_maps, enumerate_maps_with, find_isomorphism, for_each_map, mapping_space,
    MapSearch, MappingSpace, SimplicialMap,
};

/// A simplex addressed by level and position in that level's list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexRef {
    pub level: usize,
    pub index: usize,
}

impl SimplexRef {
    pub fn new(level: usize, index: usize) -> Self {
        SimplexRef { level, index }
    }
}

#[derive(Clone, Debug)]
pub struct FiniteSimplicialSet {
    trunc: usize,
    names: Vec<Vec<String>>,
    faces: Vec<Vec<Vec<usize>>>,
    degens: Vec<Vec<Vec<usize>>>,
    degenerate: Vec<Vec<bool>>,
    lookup: Vec<HashMap<String, usize>>,
}

impl FiniteSimplicialSet {
    /// Raw constructor. No identity is checked here; see [`validate`].
    ///
    /// `faces[n][x]` lists `d_0..d_n` of the `n`-simplex `x` (empty at level 0),
    /// `degens[n][x]` lists `s_0..s_n` (levels below `trunc` only).
    pub fn from_tables(
        trunc: usize,
        names: Vec<Vec<String>>,
        faces: Vec<Vec<Vec<usize>>>,
        degens: Vec<Vec<Vec<usize>>>,
    ) -> Self {
        assert_eq!(names.len(), trunc + 1, "one name list per level");
        let mut degenerate: Vec<Vec<bool>> = names.iter().map(|l| vec![false; l.len()]).collect();
        for (n, level) in degens.iter().enumerate() {
            if n + 1 > trunc {
                break;
            }
            for row in level {
                for &t in row {
                    if let Some(flag) = degenerate[n + 1].get_mut(t) {
                        *flag = true;
                    }
                }
            }
        }
        let lookup = names
            .iter()
            .map(|l| {
                let mut m = HashMap::new();
                for (i, s) in l.iter().enumerate() {
                    m.entry(s.clone()).or_insert(i);
                }
                m
            })
            .collect();
        FiniteSimplicialSet { trunc, names, faces, degens, degenerate, lookup }
    }

    /// Builds a set from structured keys. Faces and degeneracies of every key
    /// must land in the key list of the adjacent level.
    pub fn from_keys<K, F, D, N>(trunc: usize, levels: &[Vec<K>], face: F, degen: D, name: N) -> Self
    where
        K: Eq + Hash + Clone + fmt::Debug,
        F: Fn(&K, usize) -> K,
        D: Fn(&K, usize) -> K,
        N: Fn(&K) -> String,
    {
        assert_eq!(levels.len(), trunc + 1, "one key list per level");
        let index: Vec<HashMap<&K, usize>> = levels
            .iter()
            .map(|l| l.iter().enumerate().map(|(i, k)| (k, i)).collect())
            .collect();
        let mut faces = Vec::with_capacity(trunc + 1);
        let mut degens = Vec::with_capacity(trunc);
        for (n, level) in levels.iter().enumerate() {
            let mut fl = Vec::with_capacity(level.len());
            for k in level {
                if n == 0 {
                    fl.push(Vec::new());
                    continue;
                }
                let row = (0..=n)
                    .map(|j| {
                        let f = face(k, j);
                        *index[n - 1]
                            .get(&f)
                            .unwrap_or_else(|| panic!("face d{j} of {k:?} is {f:?}, missing at level {}", n - 1))
                    })
                    .collect();
                fl.push(row);
            }
            faces.push(fl);
            if n < trunc {
                let mut dl = Vec::with_capacity(level.len());
                for k in level {
                    let row = (0..=n)
                        .map(|j| {
                            let s = degen(k, j);
                            *index[n + 1]
                                .get(&s)
                                .unwrap_or_else(|| panic!("degeneracy s{j} of {k:?} is {s:?}, missing at level {}", n + 1))
                        })
                        .collect();
                    dl.push(row);
                }
                degens.push(dl);
            }
        }
        let names = levels.iter().map(|l| l.iter().map(&name).collect()).collect();
        Self::from_tables(trunc, names, faces, degens)
    }

    /// The simplicial set with no simplices, truncated at `trunc`.
    pub fn empty(trunc: usize) -> Self {
        Self::from_tables(trunc, vec![Vec::new(); trunc + 1], vec![Vec::new(); trunc + 1], vec![Vec::new(); trunc])
    }

    pub fn trunc_dim(&self) -> usize {
        self.trunc
    }

    pub fn level_size(&self, n: usize) -> usize {
        self.names.get(n).map_or(0, Vec::len)
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.names.iter().map(Vec::len).collect()
    }

    pub fn names(&self, n: usize) -> &[String] {
        &self.names[n]
    }

    pub fn name(&self, n: usize, x: usize) -> &str {
        &self.names[n][x]
    }

    pub fn index_of(&self, n: usize, name: &str) -> Option<usize> {
        self.lookup.get(n)?.get(name).copied()
    }

    /// `d_j` of the `n`-simplex `x`, for `n >= 1`.
    pub fn face(&self, n: usize, x: usize, j: usize) -> usize {
        self.faces[n][x][j]
    }

    pub fn faces_of(&self, n: usize, x: usize) -> &[usize] {
        &self.faces[n][x]
    }

    /// `s_j` of the `n`-simplex `x`, for `n < trunc`.
    pub fn degen(&self, n: usize, x: usize, j: usize) -> usize {
        self.degens[n][x][j]
    }

    pub fn is_degenerate(&self, n: usize, x: usize) -> bool {
        self.degenerate[n][x]
    }

    pub fn nondegenerate(&self, n: usize) -> Vec<usize> {
        (0..self.level_size(n)).filter(|&x| !self.degenerate[n][x]).collect()
    }

    pub fn nondegenerate_count(&self, n: usize) -> usize {
        self.degenerate[n].iter().filter(|d| !**d).count()
    }

    pub fn is_empty(&self) -> bool {
        self.level_size(0) == 0
    }

    /// Highest level carrying a non-degenerate simplex; `None` when empty.
    pub fn dim(&self) -> Option<usize> {
        (0..=self.trunc).rev().find(|&n| self.nondegenerate_count(n) > 0)
    }

    /// The face of `x` spanned by the given increasing vertex positions.
    pub fn sub_simplex(&self, n: usize, x: usize, verts: &[usize]) -> usize {
        let mut cur = x;
        let mut level = n;
        for k in (0..=n).rev() {
            if !verts.contains(&k) {
                cur = self.face(level, cur, k);
                level -= 1;
            }
        }
        cur
    }

    /// The vertices of an `n`-simplex, in order.
    pub fn vertices_of(&self, n: usize, x: usize) -> Vec<usize> {
        (0..=n).map(|k| self.sub_simplex(n, x, &[k])).collect()
    }

    /// `s_0^n v`, the totally degenerate `n`-simplex on a vertex.
    pub fn constant_simplex(&self, v: usize, n: usize) -> usize {
        let mut cur = v;
        for l in 0..n {
            cur = self.degen(l, cur, 0);
        }
        cur
    }

    pub fn simplex_ref(&self, n: usize, name: &str) -> Option<SimplexRef> {
        self.index_of(n, name).map(|i| SimplexRef::new(n, i))
    }

    pub fn validate(&self) -> ValidationReport {
        validate(self)
    }

    /// Same simplicial set cut at a lower level.
    pub fn truncate(&self, trunc: usize) -> Self {
        let t = trunc.min(self.trunc);
        Self::from_tables(
            t,
            self.names[..=t].to_vec(),
            self.faces[..=t].to_vec(),
            self.degens[..t].to_vec(),
        )
    }

    /// Copy with every name passed through `f`.
    pub fn renamed(&self, f: impl Fn(usize, &str) -> String) -> Self {
        let names = self
            .names
            .iter()
            .enumerate()
            .map(|(n, l)| l.iter().map(|s| f(n, s)).collect())
            .collect();
        Self::from_tables(self.trunc, names, self.faces.clone(), self.degens.clone())
    }
}

/// One violated identity or structural defect.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Issue {
    pub identity: String,
    pub level: usize,
    pub simplex: String,
    pub indices: Vec<usize>,
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at level {} simplex {} indices {:?}", self.identity, self.level, self.simplex, self.indices)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub issues: Vec<Issue>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.issues.is_empty()
    }
}

pub fn validate(x: &FiniteSimplicialSet) -> ValidationReport {
    let mut issues = Vec::new();
    let mut push = |identity: &str, level: usize, simplex: &str, indices: Vec<usize>| {
        issues.push(Issue { identity: identity.to_string(), level, simplex: simplex.to_string(), indices });
    };
    for n in 0..=x.trunc {
        let mut seen = HashMap::new();
        for (i, s) in x.names[n].iter().enumerate() {
            if let Some(prev) = seen.insert(s.as_str(), i) {
                push("duplicate identifier", n, s, vec![prev, i]);
            }
        }
    }
    // Shapes first: identity checks below index freely.
    let mut shapes_ok = x.faces.len() == x.trunc + 1 && x.degens.len() == x.trunc;
    for n in 0..=x.trunc {
        if !shapes_ok {
            break;
        }
        if x.faces[n].len() != x.level_size(n) {
            shapes_ok = false;
            push("face table size", n, "", vec![]);
            break;
        }
        for (i, row) in x.faces[n].iter().enumerate() {
            let want = if n == 0 { 0 } else { n + 1 };
            if row.len() != want || (n > 0 && row.iter().any(|&t| t >= x.level_size(n - 1))) {
                shapes_ok = false;
                push("face table entry", n, x.name(n, i), vec![]);
            }
        }
        if n < x.trunc {
            if x.degens[n].len() != x.level_size(n) {
                shapes_ok = false;
                push("degeneracy table size", n, "", vec![]);
                break;
            }
            for (i, row) in x.degens[n].iter().enumerate() {
                if row.len() != n + 1 || row.iter().any(|&t| t >= x.level_size(n + 1)) {
                    shapes_ok = false;
                    push("degeneracy table entry", n, x.name(n, i), vec![]);
                }
            }
        }
    }
    if !shapes_ok {
        return ValidationReport { issues };
    }
    for n in 2..=x.trunc {
        for s in 0..x.level_size(n) {
            for j in 1..=n {
                for i in 0..j {
                    let l = x.face(n - 1, x.face(n, s, j), i);
                    let r = x.face(n - 1, x.face(n, s, i), j - 1);
                    if l != r {
                        push("d_i d_j = d_{j-1} d_i", n, x.name(n, s), vec![i, j]);
                    }
                }
            }
        }
    }
    for n in 0..x.trunc {
        for s in 0..x.level_size(n) {
            for j in 0..=n {
                let t = x.degen(n, s, j);
                for i in 0..=n + 1 {
                    let l = x.face(n + 1, t, i);
                    let (ok, label) = if i == j || i == j + 1 {
                        (l == s, if i == j { "d_j s_j = id" } else { "d_{j+1} s_j = id" })
                    } else if i < j {
                        (l == x.degen(n - 1, x.face(n, s, i), j - 1), "d_i s_j = s_{j-1} d_i")
                    } else {
                        (l == x.degen(n - 1, x.face(n, s, i - 1), j), "d_i s_j = s_j d_{i-1}")
                    };
                    if !ok {
                        push(label, n, x.name(n, s), vec![i, j]);
                    }
                }
                if n + 1 < x.trunc {
                    for i in 0..=j {
                        let l = x.degen(n + 1, t, i);
                        let r = x.degen(n + 1, x.degen(n, s, i), j + 1);
                        if l != r {
                            push("s_i s_j = s_{j+1} s_i", n, x.name(n, s), vec![i, j]);
                        }
                    }
                }
            }
        }
    }
    ValidationReport { issues }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_simplex_is_valid() {
        for m in 0..4 {
            assert!(standard_simplex(m, 3).validate().is_clean());
        }
    }

    #[test]
    fn swapped_edge_faces_are_reported() {
        let d1 = standard_simplex(1, 2);
        let mut faces = d1.faces.clone();
        let e = d1.index_of(1, "01").unwrap();
        faces[1][e].swap(0, 1);
        let bad = FiniteSimplicialSet::from_tables(2, d1.names.clone(), faces, d1.degens.clone());
        let report = bad.validate();
        assert!(!report.is_clean());
        assert!(report.issues.iter().any(|i| i.identity.contains('s') && i.simplex == "01"));
    }

    #[test]
    fn duplicate_ids_are_reported() {
        let x = FiniteSimplicialSet::from_tables(
            0,
            vec![vec!["a".into(), "a".into()]],
            vec![vec![vec![], vec![]]],
            vec![],
        );
        let r = x.validate();
        assert_eq!(r.issues[0].identity, "duplicate identifier");
    }

    #[test]
    fn sub_simplex_and_vertices() {
        let d3 = standard_simplex(3, 3);
        let top = d3.index_of(3, "0123").unwrap();
        let e = d3.sub_simplex(3, top, &[1, 3]);
        assert_eq!(d3.name(1, e), "13");
        assert_eq!(d3.vertices_of(3, top), vec![0, 1, 2, 3]);
        assert_eq!(d3.name(2, d3.constant_simplex(2, 2)), "222");
    }

    #[test]
    fn dim_and_empty() {
        assert_eq!(standard_simplex(2, 3).dim(), Some(2));
        assert_eq!(FiniteSimplicialSet::empty(2).dim(), None);
        assert!(boundary(0, 2).is_empty());
    }
}
