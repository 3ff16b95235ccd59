use std::collections::HashMap;

use super::{product, product_index, standard_map, standard_simplex, FiniteSimplicialSet};
use crate::budget::Budget;
use crate::error::Result;

/// A levelwise assignment of simplices; `levels[n][x]` is the image of the
/// `n`-simplex `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplicialMap {
    pub levels: Vec<Vec<usize>>,
}

impl SimplicialMap {
    pub fn new(levels: Vec<Vec<usize>>) -> Self {
        SimplicialMap { levels }
    }

    pub fn identity(x: &FiniteSimplicialSet) -> Self {
        Self::new((0..=x.trunc_dim()).map(|n| (0..x.level_size(n)).collect()).collect())
    }

    /// Inclusion of a subset whose simplices carry the same names.
    pub fn inclusion_by_name(sub: &FiniteSimplicialSet, ambient: &FiniteSimplicialSet) -> Option<Self> {
        let t = sub.trunc_dim().min(ambient.trunc_dim());
        let mut levels = Vec::with_capacity(t + 1);
        for n in 0..=t {
            let mut l = Vec::with_capacity(sub.level_size(n));
            for s in sub.names(n) {
                l.push(ambient.index_of(n, s)?);
            }
            levels.push(l);
        }
        Some(Self::new(levels))
    }

    /// Highest level on which the map is defined.
    pub fn trunc(&self) -> usize {
        self.levels.len().saturating_sub(1)
    }

    pub fn apply(&self, n: usize, x: usize) -> usize {
        self.levels[n][x]
    }

    /// `self ∘ other`, defined on the common levels.
    pub fn compose(&self, other: &SimplicialMap) -> SimplicialMap {
        let t = self.levels.len().min(other.levels.len());
        Self::new((0..t).map(|n| other.levels[n].iter().map(|&x| self.levels[n][x]).collect()).collect())
    }

    pub fn restrict_levels(&self, trunc: usize) -> SimplicialMap {
        Self::new(self.levels[..=trunc.min(self.trunc())].to_vec())
    }

    /// Commutes with faces and degeneracies on every defined level.
    pub fn is_valid(&self, src: &FiniteSimplicialSet, tgt: &FiniteSimplicialSet) -> bool {
        let t = self.trunc();
        if t > src.trunc_dim() || t > tgt.trunc_dim() {
            return false;
        }
        for n in 0..=t {
            if self.levels[n].len() != src.level_size(n) || self.levels[n].iter().any(|&y| y >= tgt.level_size(n)) {
                return false;
            }
        }
        for n in 1..=t {
            for x in 0..src.level_size(n) {
                let fx = self.levels[n][x];
                for j in 0..=n {
                    if tgt.face(n, fx, j) != self.levels[n - 1][src.face(n, x, j)] {
                        return false;
                    }
                }
            }
        }
        for n in 0..t {
            for x in 0..src.level_size(n) {
                let fx = self.levels[n][x];
                for j in 0..=n {
                    if tgt.degen(n, fx, j) != self.levels[n + 1][src.degen(n, x, j)] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_injective(&self) -> bool {
        self.levels.iter().all(|l| {
            let mut s = l.clone();
            s.sort_unstable();
            s.windows(2).all(|w| w[0] != w[1])
        })
    }

    /// Bijective on every defined level of the given target.
    pub fn is_bijective_onto(&self, tgt: &FiniteSimplicialSet) -> bool {
        self.is_injective() && self.levels.iter().enumerate().all(|(n, l)| l.len() == tgt.level_size(n))
    }

    /// Levelwise inverse of a bijection.
    pub fn inverse(&self) -> SimplicialMap {
        Self::new(
            self.levels
                .iter()
                .map(|l| {
                    let mut inv = vec![0; l.len()];
                    for (x, &y) in l.iter().enumerate() {
                        inv[y] = x;
                    }
                    inv
                })
                .collect(),
        )
    }
}

/// Backtracking search for simplicial maps `X -> Y` on levels `0..=d`.
///
/// Non-degenerate simplices of `X` are assigned in order of level, then index;
/// degenerate ones follow from their unique lower simplex. Candidates are
/// tried in increasing index order, so results come out lexicographically.
pub struct MapSearch<'a> {
    x: &'a FiniteSimplicialSet,
    y: &'a FiniteSimplicialSet,
    d: usize,
    fixed: Option<&'a [Vec<Option<usize>>]>,
    budget: &'a Budget,
    nondeg: Vec<Vec<usize>>,
    degen_src: Vec<Vec<Option<(usize, usize)>>>,
    face_index: Vec<HashMap<Vec<usize>, Vec<usize>>>,
    assign: Vec<Vec<usize>>,
}

impl<'a> MapSearch<'a> {
    pub fn new(x: &'a FiniteSimplicialSet, y: &'a FiniteSimplicialSet, d: usize, budget: &'a Budget) -> Self {
        assert!(d <= x.trunc_dim() && d <= y.trunc_dim(), "map level above truncation");
        let nondeg = (0..=d).map(|n| x.nondegenerate(n)).collect();
        let mut degen_src: Vec<Vec<Option<(usize, usize)>>> = (0..=d).map(|n| vec![None; x.level_size(n)]).collect();
        for n in 1..=d {
            for z in 0..x.level_size(n - 1) {
                for j in 0..n {
                    let s = x.degen(n - 1, z, j);
                    if degen_src[n][s].is_none() {
                        degen_src[n][s] = Some((j, z));
                    }
                }
            }
        }
        let mut face_index = vec![HashMap::new()];
        for n in 1..=d {
            let mut m: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
            for t in 0..y.level_size(n) {
                m.entry(y.faces_of(n, t).to_vec()).or_default().push(t);
            }
            face_index.push(m);
        }
        let assign = (0..=d).map(|n| vec![usize::MAX; x.level_size(n)]).collect();
        MapSearch { x, y, d, fixed: None, budget, nondeg, degen_src, face_index, assign }
    }

    /// Restricts the search to maps agreeing with `fixed` wherever it is `Some`.
    pub fn with_fixed(mut self, fixed: &'a [Vec<Option<usize>>]) -> Self {
        self.fixed = Some(fixed);
        self
    }

    fn fixed_at(&self, n: usize, x: usize) -> Option<usize> {
        self.fixed.and_then(|f| f.get(n).and_then(|l| l.get(x).copied().flatten()))
    }

    fn fill_degenerate(&mut self, n: usize) -> bool {
        for s in 0..self.x.level_size(n) {
            if let Some((j, z)) = self.degen_src[n][s] {
                let v = self.y.degen(n - 1, self.assign[n - 1][z], j);
                if let Some(want) = self.fixed_at(n, s) {
                    if want != v {
                        return false;
                    }
                }
                for k in 0..=n {
                    if self.y.face(n, v, k) != self.assign[n - 1][self.x.face(n, s, k)] {
                        return false;
                    }
                }
                self.assign[n][s] = v;
            }
        }
        true
    }

    /// Visits every map; the visitor returns `false` to stop early.
    pub fn run(&mut self, visit: &mut dyn FnMut(&SimplicialMap) -> bool) -> Result<()> {
        self.rec(0, 0, visit).map(|_| ())
    }

    fn rec(&mut self, n: usize, k: usize, visit: &mut dyn FnMut(&SimplicialMap) -> bool) -> Result<bool> {
        if k == 0 && n > 0 && !self.fill_degenerate(n) {
            return Ok(true);
        }
        if k == self.nondeg[n].len() {
            if n == self.d {
                return Ok(visit(&SimplicialMap::new(self.assign.clone())));
            }
            return self.rec(n + 1, 0, visit);
        }
        let xs = self.nondeg[n][k];
        let candidates: Vec<usize> = if n == 0 {
            (0..self.y.level_size(0)).collect()
        } else {
            let key: Vec<usize> = (0..=n).map(|j| self.assign[n - 1][self.x.face(n, xs, j)]).collect();
            self.face_index[n].get(&key).cloned().unwrap_or_default()
        };
        let want = self.fixed_at(n, xs);
        for c in candidates {
            if want.is_some_and(|w| w != c) {
                continue;
            }
            self.budget.tick()?;
            self.assign[n][xs] = c;
            if !self.rec(n, k + 1, visit)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Calls `visit` on each map `X -> Y` on levels `0..=d` until it returns `false`.
pub fn for_each_map(
    x: &FiniteSimplicialSet,
    y: &FiniteSimplicialSet,
    d: usize,
    fixed: Option<&[Vec<Option<usize>>]>,
    budget: &Budget,
    visit: &mut dyn FnMut(&SimplicialMap) -> bool,
) -> Result<()> {
    let mut s = MapSearch::new(x, y, d, budget);
    if let Some(f) = fixed {
        s = s.with_fixed(f);
    }
    s.run(visit)
}

/// All simplicial maps `X -> Y` on levels `0..=d`, lexicographically ordered.
pub fn enumerate_maps(x: &FiniteSimplicialSet, y: &FiniteSimplicialSet, d: usize) -> Vec<SimplicialMap> {
    enumerate_maps_with(x, y, d, None, &Budget::unlimited()).expect("unlimited budget")
}

pub fn enumerate_maps_with(
    x: &FiniteSimplicialSet,
    y: &FiniteSimplicialSet,
    d: usize,
    fixed: Option<&[Vec<Option<usize>>]>,
    budget: &Budget,
) -> Result<Vec<SimplicialMap>> {
    let mut out = Vec::new();
    for_each_map(x, y, d, fixed, budget, &mut |m| {
        out.push(m.clone());
        true
    })?;
    Ok(out)
}

/// An isomorphism `X -> Y` on the common truncation, if one exists.
pub fn find_isomorphism(x: &FiniteSimplicialSet, y: &FiniteSimplicialSet) -> Option<SimplicialMap> {
    let d = x.trunc_dim().min(y.trunc_dim());
    if (0..=d).any(|n| x.level_size(n) != y.level_size(n)) {
        return None;
    }
    let mut found = None;
    for_each_map(x, y, d, None, &Budget::unlimited(), &mut |m| {
        if m.is_injective() {
            found = Some(m.clone());
            false
        } else {
            true
        }
    })
    .ok()?;
    found
}

/// `Map(X, Y)` with the maps `X × Δ^n -> Y` realizing each simplex.
#[derive(Debug, Clone)]
pub struct MappingSpace {
    pub set: FiniteSimplicialSet,
    /// `maps[n][i]` realizes simplex `i` of level `n`; defined on `X × Δ^n`
    /// up to level `inner_trunc`.
    pub maps: Vec<Vec<SimplicialMap>>,
    pub inner_trunc: usize,
}

impl MappingSpace {
    /// The restriction `Map(X, Y) -> Map(A, Y)` along `i: A -> X`.
    pub fn restriction_to(
        &self,
        other: &MappingSpace,
        a: &FiniteSimplicialSet,
        i: &SimplicialMap,
    ) -> SimplicialMap {
        let d = self.set.trunc_dim().min(other.set.trunc_dim());
        let t = self.inner_trunc.min(other.inner_trunc);
        let mut levels = Vec::with_capacity(d + 1);
        for n in 0..=d {
            let simplex = standard_simplex(n, t);
            let index: HashMap<Vec<Vec<usize>>, usize> =
                other.maps[n].iter().enumerate().map(|(k, m)| (m.restrict_levels(t).levels, k)).collect();
            let mut level = Vec::with_capacity(self.maps[n].len());
            for f in &self.maps[n] {
                let mut assign = Vec::with_capacity(t + 1);
                for l in 0..=t {
                    let bs = simplex.level_size(l);
                    let mut row = Vec::with_capacity(a.level_size(l) * bs);
                    for p in 0..a.level_size(l) {
                        for b in 0..bs {
                            row.push(f.apply(l, product_index(i.apply(l, p), b, bs)));
                        }
                    }
                    assign.push(row);
                }
                level.push(*index.get(&assign).expect("restriction lands in the mapping space"));
            }
            levels.push(level);
        }
        SimplicialMap::new(levels)
    }
}

/// The mapping space `Map(X, Y)` truncated at `d`: its `n`-simplices are the
/// maps `X × Δ^n -> Y`, compared on levels up to the common truncation.
pub fn mapping_space(x: &FiniteSimplicialSet, y: &FiniteSimplicialSet, d: usize) -> MappingSpace {
    let t = x.trunc_dim().min(y.trunc_dim());
    let maps: Vec<Vec<SimplicialMap>> =
        (0..=d).map(|n| enumerate_maps(&product(x, &standard_simplex(n, t)), y, t)).collect();
    let index: Vec<HashMap<&SimplicialMap, usize>> =
        maps.iter().map(|l| l.iter().enumerate().map(|(i, m)| (m, i)).collect()).collect();
    let sizes: Vec<Vec<usize>> = (0..=d + 1).map(|b| standard_simplex(b, t).level_sizes()).collect();
    // Precompose with `id × θ` for a monotone `θ: [a] -> [b]`.
    let precompose = |f: &SimplicialMap, th: &SimplicialMap, b: usize| -> SimplicialMap {
        let levels = (0..=t)
            .map(|l| {
                let (sa, sb) = (th.levels[l].len(), sizes[b][l]);
                let mut row = Vec::with_capacity(x.level_size(l) * sa);
                for p in 0..x.level_size(l) {
                    for q in 0..sa {
                        row.push(f.apply(l, product_index(p, th.apply(l, q), sb)));
                    }
                }
                row
            })
            .collect();
        SimplicialMap::new(levels)
    };
    let cofaces: Vec<Vec<SimplicialMap>> = (0..=d)
        .map(|n| {
            if n == 0 {
                return Vec::new();
            }
            (0..=n)
                .map(|j| {
                    let theta: Vec<usize> = (0..n).map(|v| if v < j { v } else { v + 1 }).collect();
                    standard_map(n - 1, n, &theta, t)
                })
                .collect()
        })
        .collect();
    let codegens: Vec<Vec<SimplicialMap>> = (0..d)
        .map(|n| {
            (0..=n)
                .map(|j| {
                    let theta: Vec<usize> = (0..=n + 1).map(|v| if v <= j { v } else { v - 1 }).collect();
                    standard_map(n + 1, n, &theta, t)
                })
                .collect()
        })
        .collect();
    let mut names = Vec::new();
    let mut faces = Vec::new();
    let mut degens = Vec::new();
    for n in 0..=d {
        names.push((0..maps[n].len()).map(|i| format!("m{n}.{i}")).collect());
        let mut fl = Vec::new();
        for f in &maps[n] {
            if n == 0 {
                fl.push(Vec::new());
                continue;
            }
            fl.push(
                (0..=n)
                    .map(|j| index[n - 1][&precompose(f, &cofaces[n][j], n)])
                    .collect(),
            );
        }
        faces.push(fl);
        if n < d {
            let mut dl = Vec::new();
            for f in &maps[n] {
                dl.push(
                    (0..=n)
                        .map(|j| index[n + 1][&precompose(f, &codegens[n][j], n)])
                        .collect(),
                );
            }
            degens.push(dl);
        }
    }
    let set = FiniteSimplicialSet::from_tables(d, names, faces, degens);
    MappingSpace { set, maps, inner_trunc: t }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::horn;

    #[test]
    fn small_map_counts() {
        let d0 = standard_simplex(0, 2);
        let d2 = standard_simplex(2, 2);
        assert_eq!(enumerate_maps(&d0, &d2, 2).len(), 3);
        let d1 = standard_simplex(1, 1);
        let ms = enumerate_maps(&d1, &d1, 1);
        assert_eq!(ms.len(), 3);
        assert!(ms.iter().all(|m| m.is_valid(&d1, &d1)));
        assert!(ms.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn fixed_constraints_prune() {
        let d1 = standard_simplex(1, 1);
        let fixed = vec![vec![Some(1), None], vec![None, None, None]];
        let ms = enumerate_maps_with(&d1, &d1, 1, Some(&fixed), &Budget::unlimited()).unwrap();
        assert_eq!(ms.len(), 1);
    }

    #[test]
    fn isomorphisms() {
        let d1 = standard_simplex(1, 2);
        let p = product(&d1, &standard_simplex(0, 2));
        let iso = find_isomorphism(&p, &d1).unwrap();
        assert!(iso.is_valid(&p, &d1) && iso.is_bijective_onto(&d1));
        assert!(find_isomorphism(&horn(2, 1, 2), &horn(2, 0, 2)).is_none());
        assert!(find_isomorphism(&d1, &standard_simplex(2, 2)).is_none());
    }

    #[test]
    fn mapping_space_basics() {
        let y = standard_simplex(2, 2);
        let m = mapping_space(&standard_simplex(0, 2), &y, 2);
        assert_eq!(m.set.level_sizes(), y.level_sizes());
        assert!(m.set.validate().is_clean());
        assert!(find_isomorphism(&m.set, &y).is_some());
        let pt = mapping_space(&standard_simplex(1, 2), &standard_simplex(0, 2), 2);
        assert_eq!(pt.set.level_sizes(), vec![1, 1, 1]);
    }
}
