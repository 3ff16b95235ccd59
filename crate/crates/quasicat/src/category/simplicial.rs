use std::collections::HashMap;

use super::nerve::{poset_nerve, ChainNerve};
use super::{FiniteCategory, Morphism};
use crate::error::{Error, Result};
use crate::lifting::{check_kan, HornInstance};
use crate::sset::{product_index, FiniteSimplicialSet, SimplicialMap};

/// A category enriched in truncated finite simplicial sets.
///
/// `compose[(x, y, z)]` is a map `hom(y,z) × hom(x,y) -> hom(x,z)`; at level
/// `l` the pair `(g, f)` sits at `g * |hom(x,y)_l| + f`.
#[derive(Debug, Clone)]
pub struct FiniteSimplicialCategory {
    pub objects: Vec<String>,
    pub homs: Vec<Vec<FiniteSimplicialSet>>,
    pub compose: HashMap<(usize, usize, usize), SimplicialMap>,
    pub identities: Vec<usize>,
    pub trunc: usize,
}

impl FiniteSimplicialCategory {
    /// Builds the composition maps from a levelwise function
    /// `(x, y, z, level, g, f) -> g ∘ f`.
    pub fn new(
        objects: Vec<String>,
        homs: Vec<Vec<FiniteSimplicialSet>>,
        identities: Vec<usize>,
        trunc: usize,
        comp: impl Fn(usize, usize, usize, usize, usize, usize) -> usize,
    ) -> Self {
        let n = objects.len();
        let mut compose = HashMap::new();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let levels = (0..=trunc)
                        .map(|l| {
                            let (gs, fs) = (homs[y][z].level_size(l), homs[x][y].level_size(l));
                            let mut row = Vec::with_capacity(gs * fs);
                            for g in 0..gs {
                                for f in 0..fs {
                                    row.push(comp(x, y, z, l, g, f));
                                }
                            }
                            row
                        })
                        .collect();
                    compose.insert((x, y, z), SimplicialMap::new(levels));
                }
            }
        }
        FiniteSimplicialCategory { objects, homs, compose, identities, trunc }
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn hom(&self, x: usize, y: usize) -> &FiniteSimplicialSet {
        &self.homs[x][y]
    }

    /// `g ∘ f` for level-`l` simplices `g ∈ hom(y,z)`, `f ∈ hom(x,y)`.
    pub fn comp(&self, x: usize, y: usize, z: usize, l: usize, g: usize, f: usize) -> usize {
        let fs = self.homs[x][y].level_size(l);
        self.compose[&(x, y, z)].apply(l, product_index(g, f, fs))
    }

    /// The identity of `x` as a level-`l` simplex.
    pub fn identity_at(&self, x: usize, l: usize) -> usize {
        self.homs[x][x].constant_simplex(self.identities[x], l)
    }

    /// Ordinary category viewed with discrete hom-spaces.
    pub fn from_category(c: &FiniteCategory, trunc: usize) -> Self {
        let n = c.num_objects();
        let homs: Vec<Vec<FiniteSimplicialSet>> = (0..n)
            .map(|x| (0..n).map(|y| discrete_set(&c.hom(x, y).iter().map(|&f| c.name(f).to_string()).collect::<Vec<_>>(), trunc)).collect())
            .collect();
        let homlists: Vec<Vec<Vec<usize>>> = (0..n).map(|x| (0..n).map(|y| c.hom(x, y)).collect()).collect();
        let identities = (0..n).map(|x| homlists[x][x].iter().position(|&f| f == c.id(x)).unwrap()).collect();
        Self::new(c.objects.clone(), homs, identities, trunc, |x, y, z, _, g, f| {
            let h = c.compose(homlists[y][z][g], homlists[x][y][f]).unwrap();
            homlists[x][z].iter().position(|&m| m == h).unwrap()
        })
    }

    /// One object whose endomorphism space is the nerve of a one-object
    /// category `g`, composed levelwise. Needs `g` commutative.
    pub fn delooping(g: &FiniteCategory, trunc: usize) -> Result<Self> {
        if g.num_objects() != 1 {
            return Err(Error::Precondition("delooping needs a one-object category".into()));
        }
        let m = g.num_morphisms();
        for a in 0..m {
            for b in 0..m {
                if g.compose(a, b) != g.compose(b, a) {
                    return Err(Error::Precondition(format!("{} and {} do not commute", g.name(a), g.name(b))));
                }
            }
        }
        let chains = super::nerve::nerve_chains(g, trunc);
        let index: Vec<HashMap<Vec<usize>, usize>> =
            chains.iter().map(|lv| lv.iter().enumerate().map(|(i, k)| (k.mors.clone(), i)).collect()).collect();
        let hom = super::nerve::nerve(g, trunc);
        let unit = index[0][&vec![]];
        Ok(Self::new(vec![g.objects[0].clone()], vec![vec![hom]], vec![unit], trunc, |_, _, _, l, a, b| {
            let prod: Vec<usize> = chains[l][a]
                .mors
                .iter()
                .zip(&chains[l][b].mors)
                .map(|(&x, &y)| g.compose(x, y).expect("one object"))
                .collect();
            index[l][&prod]
        }))
    }

    /// Strict associativity and unitality at every level, plus validity of
    /// the composition maps.
    pub fn law_violations(&self) -> Vec<String> {
        let n = self.num_objects();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let prod = crate::sset::product(&self.homs[y][z], &self.homs[x][y]);
                    if !self.compose[&(x, y, z)].is_valid(&prod, &self.homs[x][z]) {
                        out.push(format!("composition {}→{}→{} is not simplicial", self.objects[x], self.objects[y], self.objects[z]));
                    }
                }
            }
        }
        for l in 0..=self.trunc {
            for x in 0..n {
                for y in 0..n {
                    for f in 0..self.homs[x][y].level_size(l) {
                        if self.comp(x, y, y, l, self.identity_at(y, l), f) != f
                            || self.comp(x, x, y, l, f, self.identity_at(x, l)) != f
                        {
                            out.push(format!("unit law fails at level {l} for {}", self.homs[x][y].name(l, f)));
                        }
                    }
                    for z in 0..n {
                        for w in 0..n {
                            for h in 0..self.homs[z][w].level_size(l) {
                                for g in 0..self.homs[y][z].level_size(l) {
                                    for f in 0..self.homs[x][y].level_size(l) {
                                        let a = self.comp(x, y, w, l, self.comp(y, z, w, l, h, g), f);
                                        let b = self.comp(x, z, w, l, h, self.comp(x, y, z, l, g, f));
                                        if a != b {
                                            out.push(format!("associativity fails at level {l}"));
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// The simplicial set with the given vertices and only degenerate simplices above.
pub fn discrete_set(names: &[String], trunc: usize) -> FiniteSimplicialSet {
    let levels: Vec<Vec<(usize, usize)>> = (0..=trunc).map(|l| (0..names.len()).map(|v| (l, v)).collect()).collect();
    FiniteSimplicialSet::from_keys(
        trunc,
        &levels,
        |&(l, v), _| (l - 1, v),
        |&(l, v), _| (l + 1, v),
        |&(l, v)| if l == 0 { names[v].clone() } else { format!("{}^{l}", names[v]) },
    )
}

/// The poset `P_{i,j}` of subsets of `[i, j]` containing both endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathPoset {
    pub i: usize,
    pub j: usize,
    /// Elements as bitmasks over `[0, n]`, ordered by size then contents.
    pub elements: Vec<u64>,
}

impl PathPoset {
    pub fn name_of(mask: u64) -> String {
        let items: Vec<String> = (0..64).filter(|b| mask >> b & 1 == 1).map(|b: u64| b.to_string()).collect();
        format!("{{{}}}", items.join(","))
    }

    pub fn names(&self) -> Vec<String> {
        self.elements.iter().map(|&m| Self::name_of(m)).collect()
    }

    pub fn position(&self, mask: u64) -> Option<usize> {
        self.elements.iter().position(|&m| m == mask)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.elements[a] & !self.elements[b] == 0
    }
}

pub fn path_poset(i: usize, j: usize) -> PathPoset {
    assert!(i <= j);
    let inner: Vec<usize> = (i + 1..j).collect();
    let mut elements: Vec<u64> = (0..1u64 << inner.len())
        .map(|bits| {
            let mut m = (1u64 << i) | (1u64 << j);
            for (k, &v) in inner.iter().enumerate() {
                if bits >> k & 1 == 1 {
                    m |= 1 << v;
                }
            }
            m
        })
        .collect();
    elements.sort_by_key(|&m| (m.count_ones(), (0..64).filter(|b| m >> b & 1 == 1).collect::<Vec<u64>>()));
    PathPoset { i, j, elements }
}

/// `C[Δⁿ]` with its path posets and chain-indexed hom nerves.
#[derive(Debug, Clone)]
pub struct ThickenedSimplex {
    pub n: usize,
    pub category: FiniteSimplicialCategory,
    pub posets: HashMap<(usize, usize), PathPoset>,
    pub nerves: HashMap<(usize, usize), ChainNerve>,
}

/// `C[Δⁿ]`: objects `0..n`, `hom(i,j)` the nerve of `P_{i,j}` (empty for
/// `i > j`), composition by union of subsets.
pub fn thickened_simplex(n: usize, trunc: usize) -> ThickenedSimplex {
    let mut posets = HashMap::new();
    let mut nerves = HashMap::new();
    for i in 0..=n {
        for j in i..=n {
            let p = path_poset(i, j);
            let cn = poset_nerve(&p.names(), |a, b| p.leq(a, b), "⊆", trunc);
            posets.insert((i, j), p);
            nerves.insert((i, j), cn);
        }
    }
    let homs: Vec<Vec<FiniteSimplicialSet>> = (0..=n)
        .map(|i| {
            (0..=n)
                .map(|j| if i <= j { nerves[&(i, j)].set.clone() } else { FiniteSimplicialSet::empty(trunc) })
                .collect()
        })
        .collect();
    let identities = vec![0; n + 1];
    let category = FiniteSimplicialCategory::new((0..=n).map(|i| i.to_string()).collect(), homs, identities, trunc, |x, y, z, l, g, f| {
        let (pg, pf, pr) = (&posets[&(y, z)], &posets[&(x, y)], &posets[&(x, z)]);
        let (cg, cf) = (&nerves[&(y, z)].chains[l][g], &nerves[&(x, y)].chains[l][f]);
        let chain: Vec<usize> = cg
            .iter()
            .zip(cf)
            .map(|(&a, &b)| pr.position(pg.elements[a] | pf.elements[b]).unwrap())
            .collect();
        nerves[&(x, z)].lookup(&chain).unwrap()
    });
    ThickenedSimplex { n, category, posets, nerves }
}

/// Union-find components of the vertices of a simplicial set.
pub fn components(x: &FiniteSimplicialSet) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..x.level_size(0)).collect();
    fn find(p: &mut Vec<usize>, a: usize) -> usize {
        let mut r = a;
        while p[r] != r {
            r = p[r];
        }
        p[a] = r;
        r
    }
    if x.trunc_dim() >= 1 {
        for e in 0..x.level_size(1) {
            let (a, b) = (find(&mut parent, x.face(1, e, 0)), find(&mut parent, x.face(1, e, 1)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let roots: Vec<usize> = (0..x.level_size(0)).map(|v| find(&mut parent, v)).collect();
    let mut label = HashMap::new();
    roots.iter().map(|r| { let k = label.len(); *label.entry(*r).or_insert(k) }).collect()
}

/// The ordinary category with the same objects and `π₀` of each hom-space.
pub fn pi0_change_of_base(c: &FiniteSimplicialCategory) -> Result<FiniteCategory> {
    let n = c.num_objects();
    let comps: Vec<Vec<Vec<usize>>> = (0..n).map(|x| (0..n).map(|y| components(c.hom(x, y))).collect()).collect();
    let mut morphisms = Vec::new();
    let mut index = HashMap::new();
    for x in 0..n {
        for y in 0..n {
            let k = comps[x][y].iter().max().map_or(0, |m| m + 1);
            for class in 0..k {
                let rep = comps[x][y].iter().position(|&q| q == class).unwrap();
                index.insert((x, y, class), morphisms.len());
                morphisms.push(Morphism { name: format!("[{}]", c.hom(x, y).name(0, rep)), src: x, tgt: y });
            }
        }
    }
    let identities = (0..n).map(|x| index[&(x, x, comps[x][x][c.identities[x]])]).collect();
    let class_of = |m: usize| {
        let (x, y) = (morphisms[m].src, morphisms[m].tgt);
        let class = index.iter().find(|(_, &v)| v == m).map(|(k, _)| k.2).unwrap();
        (x, y, class)
    };
    let mut table = HashMap::new();
    for g in 0..morphisms.len() {
        for f in 0..morphisms.len() {
            let ((y1, z, cg), (x, y, cf)) = (class_of(g), class_of(f));
            if y1 != y {
                continue;
            }
            let mut result = None;
            for vg in (0..c.hom(y, z).level_size(0)).filter(|&v| comps[y][z][v] == cg) {
                for vf in (0..c.hom(x, y).level_size(0)).filter(|&v| comps[x][y][v] == cf) {
                    let r = comps[x][z][c.comp(x, y, z, 0, vg, vf)];
                    match result {
                        None => result = Some(r),
                        Some(prev) if prev != r => {
                            return Err(Error::Invalid(format!(
                                "composition of {} and {} is not well defined on components",
                                morphisms[g].name, morphisms[f].name
                            )))
                        }
                        _ => {}
                    }
                }
            }
            table.insert((g, f), index[&(x, z, result.unwrap())]);
        }
    }
    FiniteCategory::new(c.objects.clone(), morphisms, identities, |g, f| table.get(&(g, f)).copied())
}

/// Every hom-space is Kan up to `dmax`; the witness names the failing pair.
pub fn is_locally_kan(c: &FiniteSimplicialCategory, dmax: usize) -> (bool, Option<(usize, usize, HornInstance)>) {
    for x in 0..c.num_objects() {
        for y in 0..c.num_objects() {
            if let Some(w) = check_kan(c.hom(x, y), dmax).failure_witness {
                return (false, Some((x, y, w)));
            }
        }
    }
    (true, None)
}

/// A simplicial functor: object map plus maps of hom-spaces.
#[derive(Debug, Clone)]
pub struct SimplicialFunctor<'a> {
    pub source: &'a FiniteSimplicialCategory,
    pub target: &'a FiniteSimplicialCategory,
    pub objects: Vec<usize>,
    pub homs: HashMap<(usize, usize), SimplicialMap>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DkReport {
    pub essentially_surjective: bool,
    pub unreached: Vec<usize>,
    /// `(x, y, bijective on π₀)` for every ordered pair of source objects.
    pub pi0_bijective: Vec<(usize, usize, bool)>,
}

impl DkReport {
    pub fn all_pass(&self) -> bool {
        self.essentially_surjective && self.pi0_bijective.iter().all(|t| t.2)
    }
}

/// π₀-level shadow of a Dwyer–Kan equivalence: essential surjectivity of
/// `π₀F` and bijectivity of `π₀` on every hom-space. Not a weak-equivalence test.
pub fn dk_pi0_check(f: &SimplicialFunctor) -> Result<DkReport> {
    let d0 = pi0_change_of_base(f.target)?;
    let n = f.source.num_objects();
    let mut pi0_bijective = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let (hs, ht) = (f.source.hom(x, y), f.target.hom(f.objects[x], f.objects[y]));
            let (cs, ct) = (components(hs), components(ht));
            let ks = cs.iter().max().map_or(0, |m| m + 1);
            let kt = ct.iter().max().map_or(0, |m| m + 1);
            let mut image = vec![None; ks];
            let mut ok = true;
            for v in 0..hs.level_size(0) {
                let t = ct[f.homs[&(x, y)].apply(0, v)];
                match image[cs[v]] {
                    None => image[cs[v]] = Some(t),
                    Some(p) if p != t => ok = false,
                    _ => {}
                }
            }
            let mut hit: Vec<usize> = image.iter().flatten().copied().collect();
            hit.sort_unstable();
            hit.dedup();
            ok &= hit.len() == ks && hit.len() == kt;
            pi0_bijective.push((x, y, ok));
        }
    }
    let isomorphic = |a: usize, b: usize| {
        d0.hom(a, b).into_iter().any(|g| d0.hom(b, a).into_iter().any(|h| d0.compose(h, g) == Some(d0.id(a)) && d0.compose(g, h) == Some(d0.id(b))))
    };
    let unreached: Vec<usize> =
        (0..d0.num_objects()).filter(|&d| !(0..n).any(|x| isomorphic(f.objects[x], d))).collect();
    Ok(DkReport { essentially_surjective: unreached.is_empty(), unreached, pi0_bijective })
}
