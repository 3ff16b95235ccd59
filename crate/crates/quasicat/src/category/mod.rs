//! Finite categories, nerves, simplicially enriched categories and coherent nerves.

mod coherent;
mod nerve;
mod simplicial;

use std::collections::HashMap;

pub use coherent::{coherent_nerve, coherent_nerve_with, CoherentNerve, SimplicialFunctorData};
pub use nerve::{coskeletal_nerve, nerve, nerve_chains, poset_nerve, recognize_nerve, ChainNerve, NerveKey};
pub use simplicial::{
    components, discrete_set, dk_pi0_check, is_locally_kan, path_poset, pi0_change_of_base, thickened_simplex, DkReport,
    FiniteSimplicialCategory, PathPoset, SimplicialFunctor, ThickenedSimplex,
};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

/// A finite category given by a total composition table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCategory {
    pub objects: Vec<String>,
    pub morphisms: Vec<Morphism>,
    /// `table[g][f] = Some(g ∘ f)` exactly when `src g = tgt f`.
    table: Vec<Vec<Option<usize>>>,
    pub identities: Vec<usize>,
}

impl FiniteCategory {
    /// Builds a category from a composition function on composable pairs.
    /// The result is type-checked but the laws are left to [`FiniteCategory::law_violations`].
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        compose: impl Fn(usize, usize) -> Option<usize>,
    ) -> Result<Self> {
        let nm = morphisms.len();
        if identities.len() != objects.len() {
            return Err(Error::Invalid("one identity per object required".into()));
        }
        for (x, &i) in identities.iter().enumerate() {
            let m = morphisms.get(i).ok_or_else(|| Error::Invalid(format!("identity of object {x} out of range")))?;
            if m.src != x || m.tgt != x {
                return Err(Error::Invalid(format!("identity `{}` is not an endomorphism of `{}`", m.name, objects[x])));
            }
        }
        let mut table = vec![vec![None; nm]; nm];
        for g in 0..nm {
            for f in 0..nm {
                if morphisms[g].src != morphisms[f].tgt {
                    continue;
                }
                let h = compose(g, f).ok_or_else(|| {
                    Error::Invalid(format!("missing composite {} ∘ {}", morphisms[g].name, morphisms[f].name))
                })?;
                let mh = morphisms.get(h).ok_or_else(|| Error::Invalid("composite out of range".into()))?;
                if mh.src != morphisms[f].src || mh.tgt != morphisms[g].tgt {
                    return Err(Error::Invalid(format!(
                        "composite {} ∘ {} = {} has the wrong type",
                        morphisms[g].name, morphisms[f].name, mh.name
                    )));
                }
                table[g][f] = Some(h);
            }
        }
        Ok(FiniteCategory { objects, morphisms, table, identities })
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn src(&self, f: usize) -> usize {
        self.morphisms[f].src
    }

    pub fn tgt(&self, f: usize) -> usize {
        self.morphisms[f].tgt
    }

    pub fn name(&self, f: usize) -> &str {
        &self.morphisms[f].name
    }

    pub fn id(&self, x: usize) -> usize {
        self.identities[x]
    }

    /// `g ∘ f` when composable.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.table[g][f]
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn morphism_index(&self, name: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m.name == name)
    }

    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.morphisms.len()).filter(|&f| self.src(f) == x && self.tgt(f) == y).collect()
    }

    pub fn is_thin(&self) -> bool {
        (0..self.num_objects()).all(|x| (0..self.num_objects()).all(|y| self.hom(x, y).len() <= 1))
    }

    pub fn inverse(&self, f: usize) -> Option<usize> {
        self.hom(self.tgt(f), self.src(f)).into_iter().find(|&g| {
            self.compose(g, f) == Some(self.id(self.src(f))) && self.compose(f, g) == Some(self.id(self.tgt(f)))
        })
    }

    pub fn is_iso(&self, f: usize) -> bool {
        self.inverse(f).is_some()
    }

    pub fn is_groupoid(&self) -> bool {
        (0..self.num_morphisms()).all(|f| self.is_iso(f))
    }

    /// Copy with one composite overwritten (used to corrupt examples).
    pub fn with_composite(&self, g: usize, f: usize, h: usize) -> Self {
        let mut c = self.clone();
        c.table[g][f] = Some(h);
        c
    }

    /// Every failed unit or associativity law, rendered with its witness.
    pub fn law_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for f in 0..self.num_morphisms() {
            if self.compose(self.id(self.tgt(f)), f) != Some(f) {
                out.push(format!("left unit fails at {}", self.name(f)));
            }
            if self.compose(f, self.id(self.src(f))) != Some(f) {
                out.push(format!("right unit fails at {}", self.name(f)));
            }
        }
        for h in 0..self.num_morphisms() {
            for g in 0..self.num_morphisms() {
                let Some(hg) = self.compose(h, g) else { continue };
                for f in 0..self.num_morphisms() {
                    let Some(gf) = self.compose(g, f) else { continue };
                    if self.compose(hg, f) != self.compose(h, gf) {
                        out.push(format!(
                            "associativity fails at ({}, {}, {})",
                            self.name(h),
                            self.name(g),
                            self.name(f)
                        ));
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.law_violations().is_empty()
    }

    /// The poset on `names` with order `leq`; morphisms are named `a≤b`.
    pub fn poset(names: &[&str], leq: impl Fn(usize, usize) -> bool) -> Self {
        let n = names.len();
        let mut morphisms = Vec::new();
        let mut index = HashMap::new();
        let mut identities = vec![0; n];
        for a in 0..n {
            for b in 0..n {
                if leq(a, b) {
                    let name = if a == b { format!("id_{}", names[a]) } else { format!("{}≤{}", names[a], names[b]) };
                    if a == b {
                        identities[a] = morphisms.len();
                    }
                    index.insert((a, b), morphisms.len());
                    morphisms.push(Morphism { name, src: a, tgt: b });
                }
            }
        }
        let ms = morphisms.clone();
        FiniteCategory::new(names.iter().map(|s| s.to_string()).collect(), morphisms, identities, |g, f| {
            index.get(&(ms[f].src, ms[g].tgt)).copied()
        })
        .expect("poset data is well typed")
    }

    /// The ordinal `[n] = {0 < 1 < ... < n}`.
    pub fn ordinal(n: usize) -> Self {
        let names: Vec<String> = (0..=n).map(|i| i.to_string()).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        Self::poset(&refs, |a, b| a <= b)
    }

    /// A one-object category from a monoid given by its multiplication table
    /// (`mul[a][b] = a·b`, element 0 the unit).
    pub fn monoid(names: &[&str], mul: &[Vec<usize>]) -> Result<Self> {
        let morphisms = names.iter().map(|n| Morphism { name: n.to_string(), src: 0, tgt: 0 }).collect();
        Self::new(vec!["*".into()], morphisms, vec![0], |g, f| Some(mul[g][f]))
    }

    /// The cyclic group of order `n` as a one-object category.
    pub fn cyclic_group(n: usize) -> Self {
        let names: Vec<String> = (0..n).map(|k| if k == 0 { "e".to_string() } else { format!("g{k}") }).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let mul: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::monoid(&refs, &mul).expect("cyclic group table is total")
    }

    /// The symmetric group on three letters.
    pub fn symmetric_group_3() -> Self {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let names = ["e", "(01)", "(12)", "(02)", "(012)", "(021)"];
        let mul: Vec<Vec<usize>> = (0..6)
            .map(|a| {
                (0..6)
                    .map(|b| {
                        let c = [perms[a][perms[b][0]], perms[a][perms[b][1]], perms[a][perms[b][2]]];
                        perms.iter().position(|p| *p == c).unwrap()
                    })
                    .collect()
            })
            .collect();
        Self::monoid(&names, &mul).expect("group table is total")
    }

    pub fn discrete(names: &[&str]) -> Self {
        Self::poset(names, |a, b| a == b)
    }

    pub fn terminal() -> Self {
        Self::discrete(&["*"])
    }

    /// Two parallel arrows `f, g: x -> y`; not thin.
    pub fn parallel_pair() -> Self {
        let objects = vec!["x".to_string(), "y".to_string()];
        let morphisms = vec![
            Morphism { name: "id_x".into(), src: 0, tgt: 0 },
            Morphism { name: "id_y".into(), src: 1, tgt: 1 },
            Morphism { name: "f".into(), src: 0, tgt: 1 },
            Morphism { name: "g".into(), src: 0, tgt: 1 },
        ];
        Self::new(objects, morphisms, vec![0, 1], |g, f| Some(if g <= 1 { f } else { g })).expect("well typed")
    }

    /// The monoid `{1, e}` with `e·e = e`.
    pub fn idempotent_monoid() -> Self {
        Self::monoid(&["1", "e"], &[vec![0, 1], vec![1, 1]]).expect("total table")
    }

    /// The over-category `C/x`: objects are arrows `f: a -> x`, morphisms
    /// `f -> f'` are arrows `g` with `f' ∘ g = f`.
    pub fn over(&self, x: usize) -> Self {
        let objs: Vec<usize> = (0..self.num_morphisms()).filter(|&f| self.tgt(f) == x).collect();
        let mut morphisms = Vec::new();
        let mut under = Vec::new();
        let mut identities = vec![0; objs.len()];
        for (a, &f) in objs.iter().enumerate() {
            for (b, &f2) in objs.iter().enumerate() {
                for g in self.hom(self.src(f), self.src(f2)) {
                    if self.compose(f2, g) == Some(f) {
                        if g == self.id(self.src(f)) && a == b {
                            identities[a] = morphisms.len();
                        }
                        morphisms.push(Morphism { name: format!("{}:{}", self.name(g), self.name(f)), src: a, tgt: b });
                        under.push(g);
                    }
                }
            }
        }
        let ms = morphisms.clone();
        let objects = objs.iter().map(|&f| self.name(f).to_string()).collect();
        Self::new(objects, morphisms, identities, |g, f| {
            let h = self.compose(under[g], under[f])?;
            (0..ms.len()).find(|&k| under[k] == h && ms[k].src == ms[f].src && ms[k].tgt == ms[g].tgt)
        })
        .expect("over-category is well typed")
    }

    /// `C ⋆ [0]`: a new terminal object `top`.
    pub fn with_terminal(&self, top: &str) -> Self {
        let n = self.num_objects();
        let mut objects = self.objects.clone();
        objects.push(top.to_string());
        let mut morphisms = self.morphisms.clone();
        let base = morphisms.len();
        for x in 0..n {
            morphisms.push(Morphism { name: format!("{}→{}", self.objects[x], top), src: x, tgt: n });
        }
        morphisms.push(Morphism { name: format!("id_{top}"), src: n, tgt: n });
        let mut identities = self.identities.clone();
        identities.push(base + n);
        Self::new(objects, morphisms, identities, |g, f| {
            if g < base && f < base {
                self.compose(g, f)
            } else if g == base + n {
                Some(f)
            } else if f < base {
                Some(base + self.src(f))
            } else {
                Some(f)
            }
        })
        .expect("cone category is well typed")
    }

    /// The full subcategory view: `hom` sizes for every ordered pair.
    pub fn hom_sizes(&self) -> Vec<Vec<usize>> {
        (0..self.num_objects()).map(|x| (0..self.num_objects()).map(|y| self.hom(x, y).len()).collect()).collect()
    }
}

/// An isomorphism of categories `(object map, morphism map)` if one exists.
pub fn category_isomorphism(c: &FiniteCategory, d: &FiniteCategory) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut found = None;
    for_each_category_isomorphism(c, d, &mut |o, m| {
        found = Some((o.to_vec(), m.to_vec()));
        false
    });
    found
}

/// Visits isomorphisms `c -> d` until `visit` returns `false`.
pub fn for_each_category_isomorphism(c: &FiniteCategory, d: &FiniteCategory, visit: &mut dyn FnMut(&[usize], &[usize]) -> bool) {
    if c.num_objects() != d.num_objects() || c.num_morphisms() != d.num_morphisms() {
        return;
    }
    struct Search<'a> {
        c: &'a FiniteCategory,
        d: &'a FiniteCategory,
        obj: Vec<usize>,
        used_obj: Vec<bool>,
        mor: Vec<usize>,
        used_mor: Vec<bool>,
    }
    impl Search<'_> {
        fn objects(&mut self, k: usize, visit: &mut dyn FnMut(&[usize], &[usize]) -> bool) -> bool {
            let n = self.c.num_objects();
            if k == n {
                let sizes_ok = (0..n).all(|x| (0..n).all(|y| self.c.hom(x, y).len() == self.d.hom(self.obj[x], self.obj[y]).len()));
                return !sizes_ok || self.morphisms(0, visit);
            }
            for t in 0..n {
                if self.used_obj[t] {
                    continue;
                }
                self.used_obj[t] = true;
                self.obj[k] = t;
                let go_on = self.objects(k + 1, visit);
                self.used_obj[t] = false;
                if !go_on {
                    return false;
                }
            }
            true
        }

        fn morphisms(&mut self, f: usize, visit: &mut dyn FnMut(&[usize], &[usize]) -> bool) -> bool {
            let (c, d) = (self.c, self.d);
            if f == c.num_morphisms() {
                let functorial = (0..c.num_morphisms()).all(|g| {
                    (0..c.num_morphisms()).all(|f| match c.compose(g, f) {
                        Some(h) => d.compose(self.mor[g], self.mor[f]) == Some(self.mor[h]),
                        None => true,
                    })
                });
                return !functorial || visit(&self.obj, &self.mor);
            }
            let forced = c.identities.iter().position(|&i| i == f).map(|x| d.id(self.obj[x]));
            for t in d.hom(self.obj[c.src(f)], self.obj[c.tgt(f)]) {
                if self.used_mor[t] || forced.is_some_and(|w| w != t) {
                    continue;
                }
                self.used_mor[t] = true;
                self.mor[f] = t;
                let go_on = self.morphisms(f + 1, visit);
                self.used_mor[t] = false;
                if !go_on {
                    return false;
                }
            }
            true
        }
    }
    let mut s = Search {
        c,
        d,
        obj: vec![usize::MAX; c.num_objects()],
        used_obj: vec![false; c.num_objects()],
        mor: vec![usize::MAX; c.num_morphisms()],
        used_mor: vec![false; d.num_morphisms()],
    };
    s.objects(0, visit);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_categories_are_valid() {
        for c in [
            FiniteCategory::ordinal(0),
            FiniteCategory::ordinal(2),
            FiniteCategory::cyclic_group(2),
            FiniteCategory::cyclic_group(3),
            FiniteCategory::symmetric_group_3(),
            FiniteCategory::parallel_pair(),
            FiniteCategory::idempotent_monoid(),
        ] {
            assert!(c.is_valid(), "{:?}", c.law_violations());
        }
    }

    #[test]
    fn ordinal_counts() {
        let c = FiniteCategory::ordinal(2);
        assert_eq!(c.num_morphisms(), 6);
        assert!(c.is_thin());
        assert!(!FiniteCategory::parallel_pair().is_thin());
        assert!(FiniteCategory::cyclic_group(2).is_groupoid());
        assert!(!FiniteCategory::ordinal(1).is_groupoid());
    }

    #[test]
    fn corruption_breaks_laws() {
        let c = FiniteCategory::cyclic_group(3);
        let bad = c.with_composite(1, 1, 0);
        assert!(!bad.is_valid());
    }

    #[test]
    fn isomorphism_search() {
        let a = FiniteCategory::cyclic_group(3);
        let names = ["e", "x", "y"];
        let mul = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        let b = FiniteCategory::monoid(&names, &mul).unwrap();
        assert!(category_isomorphism(&a, &b).is_some());
        assert!(category_isomorphism(&a, &FiniteCategory::ordinal(2)).is_none());
        assert!(category_isomorphism(&FiniteCategory::idempotent_monoid(), &FiniteCategory::cyclic_group(2)).is_none());
    }

    #[test]
    fn over_and_cone_categories() {
        let c = FiniteCategory::ordinal(2);
        let over = c.over(1);
        assert!(over.is_valid());
        assert_eq!(over.num_objects(), 2);
        assert!(category_isomorphism(&over, &FiniteCategory::ordinal(1)).is_some());
        let g = FiniteCategory::cyclic_group(2).over(0);
        assert!(g.is_valid());
        assert_eq!((g.num_objects(), g.num_morphisms()), (2, 4));
        let cone = FiniteCategory::discrete(&["a", "b"]).with_terminal("t");
        assert!(cone.is_valid());
        assert_eq!(cone.num_morphisms(), 5);
    }
}
