//! Joins, cones, slices and (co)limits.
//!
//! A mixed simplex `(x, y)` of `K ⋆ M` with `x ∈ K_i`, `y ∈ M_j` sits at level
//! `i + 1 + j`. Faces `d_k` act on `x` for `k ≤ i` and on `y` otherwise; when
//! the affected part is a vertex the simplex drops to the other side.

use std::collections::HashMap;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::lifting::{has_rlp_with, GeneratorFamily, RlpVerdict};
use crate::sset::{standard_map, standard_simplex, FiniteSimplicialSet, MapSearch, SimplicialMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum JoinSimplex {
    Left(usize),
    Right(usize),
    /// `(i, x, j, y)` with `x ∈ K_i`, `y ∈ M_j`.
    Mixed(usize, usize, usize, usize),
}

#[derive(Debug, Clone)]
pub struct Join {
    pub set: FiniteSimplicialSet,
    pub keys: Vec<Vec<JoinSimplex>>,
    index: Vec<HashMap<JoinSimplex, usize>>,
}

impl Join {
    pub fn index_of(&self, n: usize, key: JoinSimplex) -> Option<usize> {
        self.index.get(n)?.get(&key).copied()
    }
}

fn join_face(k: &FiniteSimplicialSet, m: &FiniteSimplicialSet, n: usize, s: JoinSimplex, e: usize) -> JoinSimplex {
    match s {
        JoinSimplex::Left(x) => JoinSimplex::Left(k.face(n, x, e)),
        JoinSimplex::Right(y) => JoinSimplex::Right(m.face(n, y, e)),
        JoinSimplex::Mixed(i, x, j, y) if e <= i => {
            if i == 0 {
                JoinSimplex::Right(y)
            } else {
                JoinSimplex::Mixed(i - 1, k.face(i, x, e), j, y)
            }
        }
        JoinSimplex::Mixed(i, x, j, y) => {
            if j == 0 {
                JoinSimplex::Left(x)
            } else {
                JoinSimplex::Mixed(i, x, j - 1, m.face(j, y, e - i - 1))
            }
        }
    }
}

fn join_degen(k: &FiniteSimplicialSet, m: &FiniteSimplicialSet, n: usize, s: JoinSimplex, e: usize) -> JoinSimplex {
    match s {
        JoinSimplex::Left(x) => JoinSimplex::Left(k.degen(n, x, e)),
        JoinSimplex::Right(y) => JoinSimplex::Right(m.degen(n, y, e)),
        JoinSimplex::Mixed(i, x, j, y) if e <= i => JoinSimplex::Mixed(i + 1, k.degen(i, x, e), j, y),
        JoinSimplex::Mixed(i, x, j, y) => JoinSimplex::Mixed(i, x, j + 1, m.degen(j, y, e - i - 1)),
    }
}

/// `K ⋆ M` truncated at `trunc`.
pub fn join(k: &FiniteSimplicialSet, m: &FiniteSimplicialSet, trunc: usize) -> Result<Join> {
    let avail = k.trunc_dim().min(m.trunc_dim());
    if trunc > avail {
        return Err(Error::Truncation { needed: trunc, available: avail });
    }
    let keys: Vec<Vec<JoinSimplex>> = (0..=trunc)
        .map(|n| {
            let mut level: Vec<JoinSimplex> = (0..k.level_size(n)).map(JoinSimplex::Left).collect();
            for i in (0..n).rev() {
                let j = n - 1 - i;
                for x in 0..k.level_size(i) {
                    for y in 0..m.level_size(j) {
                        level.push(JoinSimplex::Mixed(i, x, j, y));
                    }
                }
            }
            level.extend((0..m.level_size(n)).map(JoinSimplex::Right));
            level
        })
        .collect();
    let clash: Vec<bool> = (0..=trunc)
        .map(|n| {
            let left: std::collections::HashSet<&String> = k.names(n).iter().collect();
            m.names(n).iter().any(|s| left.contains(s))
        })
        .collect();
    let levels: Vec<Vec<(usize, JoinSimplex)>> =
        keys.iter().enumerate().map(|(n, l)| l.iter().map(|&s| (n, s)).collect()).collect();
    let set = FiniteSimplicialSet::from_keys(
        trunc,
        &levels,
        |&(n, s), e| (n - 1, join_face(k, m, n, s, e)),
        |&(n, s), e| (n + 1, join_degen(k, m, n, s, e)),
        |&(n, s)| match s {
            JoinSimplex::Left(x) if clash[n] => format!("l.{}", k.name(n, x)),
            JoinSimplex::Left(x) => k.name(n, x).to_string(),
            JoinSimplex::Right(y) if clash[n] => format!("r.{}", m.name(n, y)),
            JoinSimplex::Right(y) => m.name(n, y).to_string(),
            JoinSimplex::Mixed(i, x, j, y) => format!("{}⋆{}", k.name(i, x), m.name(j, y)),
        },
    );
    let index = keys.iter().map(|l| l.iter().enumerate().map(|(i, &s)| (s, i)).collect()).collect();
    Ok(Join { set, keys, index })
}

/// `f ⋆ g: K ⋆ M -> K' ⋆ M'`.
pub fn join_map(a: &Join, b: &Join, f: &SimplicialMap, g: &SimplicialMap) -> SimplicialMap {
    let trunc = a.set.trunc_dim().min(b.set.trunc_dim());
    let levels = (0..=trunc)
        .map(|n| {
            a.keys[n]
                .iter()
                .map(|&s| {
                    let t = match s {
                        JoinSimplex::Left(x) => JoinSimplex::Left(f.apply(n, x)),
                        JoinSimplex::Right(y) => JoinSimplex::Right(g.apply(n, y)),
                        JoinSimplex::Mixed(i, x, j, y) => JoinSimplex::Mixed(i, f.apply(i, x), j, g.apply(j, y)),
                    };
                    b.index_of(n, t).expect("image simplex exists in the target join")
                })
                .collect()
        })
        .collect();
    SimplicialMap::new(levels)
}

fn named_point(name: &str, trunc: usize) -> FiniteSimplicialSet {
    standard_simplex(0, trunc).renamed(|_, _| name.to_string())
}

/// `K ⋆ Δ⁰` with cone point `∞`.
pub fn right_cone(k: &FiniteSimplicialSet, trunc: usize) -> Result<Join> {
    join(k, &named_point("∞", k.trunc_dim()), trunc)
}

/// `Δ⁰ ⋆ M` with cone point `−∞`.
pub fn left_cone(m: &FiniteSimplicialSet, trunc: usize) -> Result<Join> {
    join(&named_point("−∞", m.trunc_dim()), m, trunc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `C_{/p}`: maps `Δⁿ ⋆ M -> C`.
    Over,
    /// `C_{p/}`: maps `M ⋆ Δⁿ -> C`.
    Under,
}

#[derive(Debug, Clone)]
pub struct SliceSet {
    pub set: FiniteSimplicialSet,
    pub side: Side,
    /// `maps[n][s]` is the map out of the join represented by simplex `s`.
    pub maps: Vec<Vec<SimplicialMap>>,
    /// Restriction to `Δⁿ`, landing in `C`.
    pub projection: SimplicialMap,
    /// Level up to which each join map is recorded.
    pub inner_trunc: usize,
}

/// Truncation the base needs for a slice of a diagram out of `m` up to `dmax`.
pub fn slice_truncation(m: &FiniteSimplicialSet, dmax: usize) -> usize {
    m.dim().map_or(dmax, |d| dmax + 1 + d)
}

/// The diagram `Δ⁰ -> C` picking the vertex `v`.
pub fn vertex_diagram(c: &FiniteSimplicialSet, v: usize, trunc: usize) -> (FiniteSimplicialSet, SimplicialMap) {
    let levels = (0..=trunc).map(|n| vec![c.constant_simplex(v, n)]).collect();
    (standard_simplex(0, trunc), SimplicialMap::new(levels))
}

pub fn empty_diagram(trunc: usize) -> (FiniteSimplicialSet, SimplicialMap) {
    (FiniteSimplicialSet::empty(trunc), SimplicialMap::new(vec![Vec::new(); trunc + 1]))
}

pub fn slice_over(c: &FiniteSimplicialSet, m: &FiniteSimplicialSet, p: &SimplicialMap, dmax: usize) -> Result<SliceSet> {
    slice_with(c, m, p, dmax, Side::Over, &Budget::unlimited())
}

pub fn coslice_under(c: &FiniteSimplicialSet, m: &FiniteSimplicialSet, p: &SimplicialMap, dmax: usize) -> Result<SliceSet> {
    slice_with(c, m, p, dmax, Side::Under, &Budget::unlimited())
}

pub fn slice_with(
    c: &FiniteSimplicialSet,
    m: &FiniteSimplicialSet,
    p: &SimplicialMap,
    dmax: usize,
    side: Side,
    budget: &Budget,
) -> Result<SliceSet> {
    let t = slice_truncation(m, dmax);
    let avail = c.trunc_dim().min(m.trunc_dim()).min(p.trunc());
    if t > avail {
        return Err(Error::Truncation { needed: t, available: avail });
    }
    let id_m = SimplicialMap::identity(&m.truncate(t));
    let simplices: Vec<FiniteSimplicialSet> = (0..=dmax + 1).map(|n| standard_simplex(n, t)).collect();
    let joins: Vec<Join> = simplices
        .iter()
        .map(|d| match side {
            Side::Over => join(d, m, t),
            Side::Under => join(m, d, t),
        })
        .collect::<Result<_>>()?;
    let along = |a: usize, b: usize, f: &SimplicialMap| match side {
        Side::Over => join_map(&joins[a], &joins[b], f, &id_m),
        Side::Under => join_map(&joins[a], &joins[b], &id_m, f),
    };
    let top = |n: usize| {
        let key = match side {
            Side::Over => JoinSimplex::Left(simplices[n].index_of(n, &top_name(n)).unwrap()),
            Side::Under => JoinSimplex::Right(simplices[n].index_of(n, &top_name(n)).unwrap()),
        };
        joins[n].index_of(n, key).unwrap()
    };

    let mut maps: Vec<Vec<SimplicialMap>> = Vec::new();
    for (n, jn) in joins.iter().enumerate().take(dmax + 1) {
        budget.check_level(n, jn.set.level_size(n))?;
        let fixed: Vec<Vec<Option<usize>>> = (0..=t)
            .map(|l| {
                jn.keys[l]
                    .iter()
                    .map(|&s| match (side, s) {
                        (Side::Over, JoinSimplex::Right(y)) | (Side::Under, JoinSimplex::Left(y)) => Some(p.apply(l, y)),
                        _ => None,
                    })
                    .collect()
            })
            .collect();
        let mut found = Vec::new();
        MapSearch::new(&jn.set, c, t, budget).with_fixed(&fixed).run(&mut |f| {
            found.push(f.clone());
            true
        })?;
        budget.check_level(n, found.len())?;
        maps.push(found);
    }
    let index: Vec<HashMap<&SimplicialMap, usize>> =
        maps.iter().map(|l| l.iter().enumerate().map(|(i, f)| (f, i)).collect()).collect();

    let mut faces = Vec::new();
    let mut degens = Vec::new();
    for n in 0..=dmax {
        if n == 0 {
            faces.push(vec![Vec::new(); maps[0].len()]);
        } else {
            let cofaces: Vec<SimplicialMap> = (0..=n)
                .map(|k| {
                    let f: Vec<usize> = (0..n).map(|v| if v < k { v } else { v + 1 }).collect();
                    along(n - 1, n, &standard_map(n - 1, n, &f, t))
                })
                .collect();
            faces.push(maps[n].iter().map(|f| cofaces.iter().map(|d| index[n - 1][&f.compose(d)]).collect()).collect());
        }
        if n < dmax {
            let codegens: Vec<SimplicialMap> = (0..=n)
                .map(|k| {
                    let f: Vec<usize> = (0..=n + 1).map(|v| if v <= k { v } else { v - 1 }).collect();
                    along(n + 1, n, &standard_map(n + 1, n, &f, t))
                })
                .collect();
            degens.push(maps[n].iter().map(|f| codegens.iter().map(|s| index[n + 1][&f.compose(s)]).collect()).collect());
        }
    }
    let names = (0..=dmax).map(|n| slice_names(c, m, &joins[n], &maps[n], n, side, top(n))).collect();
    let set = FiniteSimplicialSet::from_tables(dmax, names, faces, degens);
    let projection = SimplicialMap::new((0..=dmax).map(|n| maps[n].iter().map(|f| f.apply(n, top(n))).collect()).collect());
    Ok(SliceSet { set, side, maps, projection, inner_trunc: t })
}

fn top_name(n: usize) -> String {
    (0..=n).map(|v| v.to_string()).collect()
}

/// Names a cone by the images of the maximal simplices joining the top of
/// `Δⁿ` to each non-degenerate simplex of `M`; falls back to indices on clashes.
fn slice_names(
    c: &FiniteSimplicialSet,
    m: &FiniteSimplicialSet,
    jn: &Join,
    maps: &[SimplicialMap],
    n: usize,
    side: Side,
    top: usize,
) -> Vec<String> {
    let spots: Vec<(usize, usize)> = (0..=m.trunc_dim().min(jn.set.trunc_dim().saturating_sub(n + 1)))
        .flat_map(|j| m.nondegenerate(j).into_iter().map(move |y| (j, y)))
        .filter(|&(j, _)| n + 1 + j <= jn.set.trunc_dim())
        .map(|(j, y)| {
            let key = match side {
                Side::Over => JoinSimplex::Mixed(n, top_vertex_index(jn, n, top), j, y),
                Side::Under => JoinSimplex::Mixed(j, y, n, top_vertex_index(jn, n, top)),
            };
            (n + 1 + j, jn.index_of(n + 1 + j, key).unwrap())
        })
        .collect();
    let mut names: Vec<String> = maps
        .iter()
        .map(|f| {
            if spots.is_empty() {
                c.name(n, f.apply(n, top)).to_string()
            } else {
                let parts: Vec<&str> = spots.iter().map(|&(l, s)| c.name(l, f.apply(l, s))).collect();
                format!("[{}]", parts.join(","))
            }
        })
        .collect();
    let distinct: std::collections::HashSet<&String> = names.iter().collect();
    if distinct.len() != names.len() {
        names = (0..maps.len()).map(|k| format!("c{n}.{k}")).collect();
    }
    names
}

fn top_vertex_index(jn: &Join, n: usize, top: usize) -> usize {
    match jn.keys[n][top] {
        JoinSimplex::Left(x) | JoinSimplex::Right(x) => x,
        JoinSimplex::Mixed(..) => unreachable!("top simplex of Δⁿ is pure"),
    }
}

/// `C_{/v} -> C` has the right lifting property against `∂Δⁿ ⊂ Δⁿ` for `n ≤ dmax`.
pub fn is_final(c: &FiniteSimplicialSet, v: usize, dmax: usize) -> Result<RlpVerdict> {
    vertex_rlp(c, v, dmax, Side::Over, &Budget::unlimited())
}

pub fn is_initial(c: &FiniteSimplicialSet, v: usize, dmax: usize) -> Result<RlpVerdict> {
    vertex_rlp(c, v, dmax, Side::Under, &Budget::unlimited())
}

pub fn vertex_rlp(c: &FiniteSimplicialSet, v: usize, dmax: usize, side: Side, budget: &Budget) -> Result<RlpVerdict> {
    let (m, p) = vertex_diagram(c, v, dmax + 1);
    let s = slice_with(c, &m, &p, dmax, side, budget)?;
    has_rlp_with(&s.projection, &s.set, c, GeneratorFamily::Boundaries, dmax, budget)
}

pub fn final_vertices(c: &FiniteSimplicialSet, dmax: usize) -> Result<Vec<usize>> {
    (0..c.level_size(0)).filter_map(|v| is_final(c, v, dmax).map(|r| r.holds.then_some(v)).transpose()).collect()
}

pub fn initial_vertices(c: &FiniteSimplicialSet, dmax: usize) -> Result<Vec<usize>> {
    (0..c.level_size(0)).filter_map(|v| is_initial(c, v, dmax).map(|r| r.holds.then_some(v)).transpose()).collect()
}

#[derive(Debug, Clone)]
pub struct Candidates {
    pub slice: SliceSet,
    /// Cone vertices of `slice` that are final (limits) or initial (colimits).
    pub vertices: Vec<usize>,
}

impl Candidates {
    pub fn names(&self) -> Vec<String> {
        self.vertices.iter().map(|&v| self.slice.set.name(0, v).to_string()).collect()
    }

    /// The apex in the base of each candidate cone.
    pub fn apexes(&self) -> Vec<usize> {
        self.vertices.iter().map(|&v| self.slice.projection.apply(0, v)).collect()
    }
}

/// Final objects of `C_{/p}`. The base needs truncation `dmax + 2 + dim M`.
pub fn limit_candidates(c: &FiniteSimplicialSet, m: &FiniteSimplicialSet, p: &SimplicialMap, dmax: usize) -> Result<Candidates> {
    candidates_with(c, m, p, dmax, Side::Over, &Budget::unlimited())
}

/// Initial objects of `C_{p/}`.
pub fn colimit_candidates(c: &FiniteSimplicialSet, m: &FiniteSimplicialSet, p: &SimplicialMap, dmax: usize) -> Result<Candidates> {
    candidates_with(c, m, p, dmax, Side::Under, &Budget::unlimited())
}

pub fn candidates_with(
    c: &FiniteSimplicialSet,
    m: &FiniteSimplicialSet,
    p: &SimplicialMap,
    dmax: usize,
    side: Side,
    budget: &Budget,
) -> Result<Candidates> {
    let slice = slice_with(c, m, p, dmax + 1, side, budget)?;
    let mut vertices = Vec::new();
    for v in 0..slice.set.level_size(0) {
        if vertex_rlp(&slice.set, v, dmax, side, budget)?.holds {
            vertices.push(v);
        }
    }
    Ok(Candidates { slice, vertices })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{nerve, FiniteCategory};
    use crate::sset::{find_isomorphism, horn, product};

    #[test]
    fn simplex_joins() {
        let j = join(&standard_simplex(1, 2), &standard_simplex(0, 2), 2).unwrap();
        assert!(j.set.validate().is_clean());
        assert_eq!(j.set.level_size(2), 10);
        assert!(find_isomorphism(&j.set, &standard_simplex(2, 2)).is_some());
    }

    #[test]
    fn empty_join_units() {
        let k = horn(2, 1, 2);
        let e = FiniteSimplicialSet::empty(2);
        assert!(find_isomorphism(&join(&k, &e, 2).unwrap().set, &k).is_some());
        assert!(find_isomorphism(&join(&e, &k, 2).unwrap().set, &k).is_some());
        assert_eq!(right_cone(&e, 2).unwrap().set.level_sizes(), vec![1, 1, 1]);
    }

    #[test]
    fn cone_on_span_is_square() {
        let sq = product(&standard_simplex(1, 3), &standard_simplex(1, 3));
        let c = right_cone(&horn(2, 0, 3), 3).unwrap();
        assert!(find_isomorphism(&c.set, &sq).is_some());
        assert_eq!(c.set.name(0, c.set.level_size(0) - 1), "∞");
    }

    #[test]
    fn slice_of_ordinal() {
        let n1 = nerve(&FiniteCategory::ordinal(1), 4);
        let (m, p) = vertex_diagram(&n1, 1, 4);
        let s = slice_over(&n1, &m, &p, 2).unwrap();
        assert!(s.set.validate().is_clean());
        assert!(s.projection.is_valid(&s.set, &n1));
        assert_eq!(s.set.level_size(0), 2);
        assert!(is_final(&n1, 1, 2).unwrap().holds);
        assert!(!is_final(&n1, 0, 2).unwrap().holds);
        assert_eq!(initial_vertices(&n1, 2).unwrap(), vec![0]);
    }

    #[test]
    fn point_slice_is_point() {
        let pt = standard_simplex(0, 3);
        let (m, p) = vertex_diagram(&pt, 0, 3);
        assert_eq!(slice_over(&pt, &m, &p, 2).unwrap().set.level_sizes(), vec![1, 1, 1]);
        assert!(is_final(&pt, 0, 2).unwrap().holds);
    }

    #[test]
    fn truncation_is_checked() {
        let n1 = nerve(&FiniteCategory::ordinal(1), 2);
        let (m, p) = vertex_diagram(&n1, 1, 2);
        assert!(matches!(slice_over(&n1, &m, &p, 2), Err(Error::Truncation { .. })));
    }
}
