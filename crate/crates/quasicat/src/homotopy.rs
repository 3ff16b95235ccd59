//! Homotopy of edges, homotopy categories and equivalences in a truncated
//! quasi-category.
//!
//! A witness that `f ≃ g` is a 2-simplex `σ` with `d₀σ = g`, `d₁σ = f` and
//! `d₂σ` the identity at the common source. Symmetry and transitivity of this
//! relation are theorems for quasi-categories, so [`homotopy_classes`] reports
//! whether taking the closure changed anything rather than silently applying it.

use std::collections::HashMap;

use crate::budget::Budget;
use crate::category::{FiniteCategory, Morphism};
use crate::error::{Error, Result};
use crate::lifting::{check_quasicategory_with, for_each_face_tuple};
use crate::sset::FiniteSimplicialSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HomotopyWitness {
    pub sigma: usize,
    pub from: usize,
    pub to: usize,
}

impl HomotopyWitness {
    pub fn is_valid(&self, c: &FiniteSimplicialSet) -> bool {
        let x = c.face(1, self.from, 1);
        c.face(2, self.sigma, 0) == self.to && c.face(2, self.sigma, 1) == self.from && c.face(2, self.sigma, 2) == c.degen(0, x, 0)
    }
}

fn source(c: &FiniteSimplicialSet, f: usize) -> usize {
    c.face(1, f, 1)
}

fn target(c: &FiniteSimplicialSet, f: usize) -> usize {
    c.face(1, f, 0)
}

/// `κ_f = s₀f`.
pub fn constant_homotopy(c: &FiniteSimplicialSet, f: usize) -> HomotopyWitness {
    HomotopyWitness { sigma: c.degen(1, f, 0), from: f, to: f }
}

/// Scans the 2-simplices for a witness of `f ≃ g`.
pub fn are_homotopic(c: &FiniteSimplicialSet, f: usize, g: usize) -> Result<Option<HomotopyWitness>> {
    if source(c, f) != source(c, g) || target(c, f) != target(c, g) {
        return Err(Error::Invalid(format!("edges {} and {} are not parallel", c.name(1, f), c.name(1, g))));
    }
    if c.trunc_dim() < 2 {
        return Err(Error::Truncation { needed: 2, available: c.trunc_dim() });
    }
    let id = c.degen(0, source(c, f), 0);
    Ok((0..c.level_size(2))
        .find(|&s| c.face(2, s, 0) == g && c.face(2, s, 1) == f && c.face(2, s, 2) == id)
        .map(|sigma| HomotopyWitness { sigma, from: f, to: g }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomotopyClasses {
    /// Edges from `x` to `y`, grouped; classes and members in index order.
    pub classes: Vec<Vec<usize>>,
    /// Whether the raw witness relation failed to be an equivalence relation.
    pub closure_needed: bool,
}

/// Raw witness relation on all edges: `related[(f, g)]` iff a witness of
/// `f ≃ g` exists.
fn witness_pairs(c: &FiniteSimplicialSet) -> std::collections::HashSet<(usize, usize)> {
    (0..c.level_size(2))
        .filter(|&s| {
            let f = c.face(2, s, 1);
            c.face(2, s, 2) == c.degen(0, source(c, f), 0)
        })
        .map(|s| (c.face(2, s, 1), c.face(2, s, 0)))
        .collect()
}

fn partition(edges: &[usize], related: &dyn Fn(usize, usize) -> bool) -> HomotopyClasses {
    let k = edges.len();
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(p: &mut [usize], a: usize) -> usize {
        let mut r = a;
        while p[r] != r {
            r = p[r];
        }
        p[a] = r;
        r
    }
    for a in 0..k {
        for b in 0..k {
            if related(edges[a], edges[b]) {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot: HashMap<usize, usize> = HashMap::new();
    let mut closure_needed = false;
    for a in 0..k {
        let r = find(&mut parent, a);
        let g = *slot.entry(r).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[g].push(edges[a]);
    }
    for g in &groups {
        for &f in g {
            for &h in g {
                if !related(f, h) {
                    closure_needed = true;
                }
            }
        }
    }
    HomotopyClasses { classes: groups, closure_needed }
}

/// Partition of the edges `x -> y` into homotopy classes.
pub fn homotopy_classes(c: &FiniteSimplicialSet, x: usize, y: usize) -> Result<HomotopyClasses> {
    if c.trunc_dim() < 2 {
        return Err(Error::Truncation { needed: 2, available: c.trunc_dim() });
    }
    let rel = witness_pairs(c);
    let edges: Vec<usize> = (0..c.level_size(1)).filter(|&e| source(c, e) == x && target(c, e) == y).collect();
    Ok(partition(&edges, &|f, g| rel.contains(&(f, g))))
}

#[derive(Debug, Clone)]
pub struct HoCategory {
    pub category: FiniteCategory,
    /// Edge index to morphism index of `category`.
    pub class_of_edge: Vec<usize>,
    /// Whether any hom-set needed the symmetric-transitive closure.
    pub closure_needed: bool,
}

impl HoCategory {
    pub fn class_members(&self, m: usize) -> Vec<usize> {
        (0..self.class_of_edge.len()).filter(|&e| self.class_of_edge[e] == m).collect()
    }
}

/// The homotopy category. Composition fills `(g, •, f)` and takes `d₁` of the
/// first filler; every representative pair and every filler is then checked to
/// land in the same class.
pub fn homotopy_category(c: &FiniteSimplicialSet, dmax: usize) -> Result<HoCategory> {
    homotopy_category_with(c, dmax, &Budget::unlimited())
}

pub fn homotopy_category_with(c: &FiniteSimplicialSet, dmax: usize, budget: &Budget) -> Result<HoCategory> {
    if dmax < 3 {
        return Err(Error::Precondition(format!("homotopy category needs dmax >= 3, got {dmax}")));
    }
    let v = check_quasicategory_with(c, dmax, budget)?;
    if let Some(h) = v.failure_witness {
        return Err(Error::Precondition(format!("not a quasi-category: no filler for {}", h.render(c))));
    }
    let rel = witness_pairs(c);
    let nv = c.level_size(0);
    let mut class_of_edge = vec![usize::MAX; c.level_size(1)];
    let mut morphisms = Vec::new();
    let mut closure_needed = false;
    for x in 0..nv {
        for y in 0..nv {
            let edges: Vec<usize> = (0..c.level_size(1)).filter(|&e| source(c, e) == x && target(c, e) == y).collect();
            let p = partition(&edges, &|f, g| rel.contains(&(f, g)));
            closure_needed |= p.closure_needed;
            for class in p.classes {
                for &e in &class {
                    class_of_edge[e] = morphisms.len();
                }
                morphisms.push(Morphism { name: c.name(1, class[0]).to_string(), src: x, tgt: y });
            }
        }
    }
    let mut fillers: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for s in 0..c.level_size(2) {
        fillers.entry((c.face(2, s, 0), c.face(2, s, 2))).or_default().push(s);
    }
    let reps: Vec<usize> = (0..morphisms.len()).map(|m| class_of_edge.iter().position(|&k| k == m).unwrap()).collect();
    let mut table: HashMap<(usize, usize), usize> = HashMap::new();
    for f in 0..c.level_size(1) {
        for g in 0..c.level_size(1) {
            if target(c, f) != source(c, g) {
                continue;
            }
            budget.tick()?;
            let key = (class_of_edge[g], class_of_edge[f]);
            let fs = fillers.get(&(g, f)).ok_or_else(|| {
                Error::Invalid(format!("no filler for composable pair ({}, {})", c.name(1, g), c.name(1, f)))
            })?;
            for &s in fs {
                let h = class_of_edge[c.face(2, s, 1)];
                match table.get(&key) {
                    None => {
                        table.insert(key, h);
                    }
                    Some(&prev) if prev != h => {
                        return Err(Error::Invalid(format!(
                            "composition of classes [{}] and [{}] depends on representatives",
                            c.name(1, reps[key.0]),
                            c.name(1, reps[key.1])
                        )))
                    }
                    _ => {}
                }
            }
        }
    }
    let identities: Vec<usize> = (0..nv).map(|x| class_of_edge[c.degen(0, x, 0)]).collect();
    let category = FiniteCategory::new(c.names(0).to_vec(), morphisms, identities, |g, f| table.get(&(g, f)).copied())?;
    let violations = category.law_violations();
    if !violations.is_empty() {
        return Err(Error::Invalid(format!("homotopy category laws fail: {}", violations.join("; "))));
    }
    Ok(HoCategory { category, class_of_edge, closure_needed })
}

/// The class of an inverse of `[f]` in `Ho(C)`, if `[f]` is invertible.
pub fn is_equivalence(c: &FiniteSimplicialSet, f: usize, dmax: usize) -> Result<Option<usize>> {
    let ho = homotopy_category(c, dmax)?;
    Ok(ho.category.inverse(ho.class_of_edge[f]))
}

/// Every `Λⁿ₀` horn with `2 ≤ n ≤ dmax` whose edge `{0,1}` is `f` has a filler.
pub fn equivalence_via_outer_horns(c: &FiniteSimplicialSet, f: usize, dmax: usize) -> Result<bool> {
    if dmax > c.trunc_dim() {
        return Err(Error::Truncation { needed: dmax, available: c.trunc_dim() });
    }
    let budget = Budget::unlimited();
    for n in 2..=dmax {
        let mut restrictions: std::collections::HashSet<Vec<usize>> = std::collections::HashSet::new();
        for s in 0..c.level_size(n) {
            restrictions.insert((1..=n).map(|j| c.face(n, s, j)).collect());
        }
        // d_n of the horn contains the edge {0,1}.
        let allow = |j: usize, s: usize| j != n || c.sub_simplex(n - 1, s, &[0, 1]) == f;
        let mut ok = true;
        for_each_face_tuple(c, n, Some(0), &allow, &budget, &mut |t| {
            let key: Vec<usize> = t.iter().flatten().copied().collect();
            ok = restrictions.contains(&key);
            ok
        })?;
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Ho(C)` is a groupoid.
pub fn is_infinity_groupoid(c: &FiniteSimplicialSet, dmax: usize) -> Result<bool> {
    Ok(homotopy_category(c, dmax)?.category.is_groupoid())
}

/// Simplices `τ ∈ C_{n+1}` with `τ` restricted to `{0..n}` constant at `x` and
/// last vertex `y`, for `n ≤ d`.
pub fn right_mapping_space(c: &FiniteSimplicialSet, x: usize, y: usize, d: usize) -> Result<FiniteSimplicialSet> {
    if d + 1 > c.trunc_dim() {
        return Err(Error::Truncation { needed: d + 1, available: c.trunc_dim() });
    }
    let levels: Vec<Vec<(usize, usize)>> = (0..=d)
        .map(|n| {
            let base = c.constant_simplex(x, n);
            (0..c.level_size(n + 1))
                .filter(|&t| c.face(n + 1, t, n + 1) == base && c.sub_simplex(n + 1, t, &[n + 1]) == y)
                .map(|t| (n + 1, t))
                .collect()
        })
        .collect();
    Ok(FiniteSimplicialSet::from_keys(
        d,
        &levels,
        |&(l, t), j| (l - 1, c.face(l, t, j)),
        |&(l, t), j| (l + 1, c.degen(l, t, j)),
        |&(l, t)| c.name(l, t).to_string(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::nerve;
    use crate::sset::{horn, standard_simplex};

    #[test]
    fn constant_homotopy_shape() {
        let c = nerve(&FiniteCategory::cyclic_group(2), 3);
        for f in 0..c.level_size(1) {
            let w = constant_homotopy(&c, f);
            assert!(w.is_valid(&c));
        }
    }

    #[test]
    fn nerve_edges_homotopic_iff_equal() {
        let c = nerve(&FiniteCategory::parallel_pair(), 3);
        for f in 0..c.level_size(1) {
            for g in 0..c.level_size(1) {
                if let Ok(w) = are_homotopic(&c, f, g) {
                    assert_eq!(w.is_some(), f == g);
                }
            }
        }
    }

    #[test]
    fn class_counts() {
        let n1 = nerve(&FiniteCategory::ordinal(1), 3);
        assert_eq!(homotopy_classes(&n1, 0, 1).unwrap().classes.len(), 1);
        let c2 = nerve(&FiniteCategory::cyclic_group(2), 3);
        let p = homotopy_classes(&c2, 0, 0).unwrap();
        assert_eq!(p.classes.len(), 2);
        assert!(!p.closure_needed);
    }

    #[test]
    fn ho_of_point_and_horn() {
        let ho = homotopy_category(&standard_simplex(0, 3), 3).unwrap();
        assert_eq!(ho.category.num_morphisms(), 1);
        assert!(matches!(homotopy_category(&horn(2, 1, 3), 3), Err(Error::Precondition(_))));
    }

    #[test]
    fn equivalences() {
        let n1 = nerve(&FiniteCategory::ordinal(1), 3);
        let f = n1.index_of(1, "0≤1").unwrap();
        assert_eq!(is_equivalence(&n1, f, 3).unwrap(), None);
        assert!(!equivalence_via_outer_horns(&n1, f, 2).unwrap());
        let id = n1.degen(0, 0, 0);
        assert!(is_equivalence(&n1, id, 3).unwrap().is_some());
        assert!(equivalence_via_outer_horns(&n1, id, 3).unwrap());
        assert!(!is_infinity_groupoid(&n1, 3).unwrap());
        assert!(is_infinity_groupoid(&nerve(&FiniteCategory::cyclic_group(2), 3), 3).unwrap());
    }

    #[test]
    fn right_mapping_spaces() {
        let n1 = nerve(&FiniteCategory::ordinal(1), 3);
        let m = right_mapping_space(&n1, 0, 1, 1).unwrap();
        assert!(m.validate().is_clean());
        assert_eq!(m.level_sizes(), vec![1, 1]);
        let g = FiniteCategory::symmetric_group_3();
        let ng = nerve(&g, 3);
        assert_eq!(right_mapping_space(&ng, 0, 0, 2).unwrap().level_size(0), 6);
    }
}
