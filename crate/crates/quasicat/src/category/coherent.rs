use std::collections::{BTreeMap, HashMap};

use super::simplicial::{thickened_simplex, FiniteSimplicialCategory, ThickenedSimplex};
use crate::budget::Budget;
use crate::error::Result;
use crate::sset::{FiniteSimplicialSet, MapSearch, SimplicialMap};

/// A simplicial functor `C[Δⁿ] -> C`: objects, and for `i < j` the map
/// `N(P_{i,j}) -> hom(F i, F j)` on chain indices (identities on `i = j`
/// are implicit).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplicialFunctorData {
    pub objs: Vec<usize>,
    pub homs: BTreeMap<(usize, usize), SimplicialMap>,
}

#[derive(Debug, Clone)]
pub struct CoherentNerve {
    pub set: FiniteSimplicialSet,
    pub functors: Vec<Vec<SimplicialFunctorData>>,
}

struct Enumerator<'a> {
    c: &'a FiniteSimplicialCategory,
    t: &'a ThickenedSimplex,
    pairs: Vec<(usize, usize)>,
    budget: &'a Budget,
    out: Vec<SimplicialFunctorData>,
}

impl Enumerator<'_> {
    fn objects(&mut self, cur: &mut Vec<usize>) -> Result<()> {
        let n = self.t.n;
        if cur.len() == n + 1 {
            let mut data = SimplicialFunctorData { objs: cur.clone(), homs: BTreeMap::new() };
            return self.pairs_rec(0, &mut data);
        }
        for x in 0..self.c.num_objects() {
            self.budget.tick()?;
            if cur.iter().all(|&p| self.c.hom(p, x).level_size(0) > 0) {
                cur.push(x);
                self.objects(cur)?;
                cur.pop();
            }
        }
        Ok(())
    }

    fn value(&self, data: &SimplicialFunctorData, i: usize, j: usize, l: usize, chain: usize) -> usize {
        if i == j {
            self.c.identity_at(data.objs[i], l)
        } else {
            data.homs[&(i, j)].apply(l, chain)
        }
    }

    fn pairs_rec(&mut self, k: usize, data: &mut SimplicialFunctorData) -> Result<()> {
        if k == self.pairs.len() {
            self.out.push(data.clone());
            return Ok(());
        }
        let (i, j) = self.pairs[k];
        let trunc = self.c.trunc;
        let src = &self.t.nerves[&(i, j)];
        let (oi, oj) = (data.objs[i], data.objs[j]);
        // Chains whose every subset passes through a middle vertex are fixed
        // by composition.
        let mut fixed: Vec<Vec<Option<usize>>> = (0..=trunc).map(|l| vec![None; src.set.level_size(l)]).collect();
        for m in i + 1..j {
            let (left, right) = (&self.t.nerves[&(i, m)], &self.t.nerves[&(m, j)]);
            let (pl, pr, pu) = (&self.t.posets[&(i, m)], &self.t.posets[&(m, j)], &self.t.posets[&(i, j)]);
            for l in 0..=trunc {
                for (g, cg) in right.chains[l].iter().enumerate() {
                    for (f, cf) in left.chains[l].iter().enumerate() {
                        let union: Vec<usize> =
                            cg.iter().zip(cf).map(|(&a, &b)| pu.position(pr.elements[a] | pl.elements[b]).unwrap()).collect();
                        let u = src.lookup(&union).unwrap();
                        let v = self.c.comp(oi, data.objs[m], oj, l, self.value(data, m, j, l, g), self.value(data, i, m, l, f));
                        match fixed[l][u] {
                            None => fixed[l][u] = Some(v),
                            Some(w) if w != v => return Ok(()),
                            _ => {}
                        }
                    }
                }
            }
        }
        let target = self.c.hom(oi, oj);
        let mut found = Vec::new();
        MapSearch::new(&src.set, target, trunc, self.budget).with_fixed(&fixed).run(&mut |m| {
            found.push(m.clone());
            true
        })?;
        for m in found {
            data.homs.insert((i, j), m);
            self.pairs_rec(k + 1, data)?;
        }
        data.homs.remove(&(i, j));
        Ok(())
    }
}

fn functors(c: &FiniteSimplicialCategory, t: &ThickenedSimplex, budget: &Budget) -> Result<Vec<SimplicialFunctorData>> {
    let n = t.n;
    let mut pairs: Vec<(usize, usize)> = (0..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    pairs.sort_by_key(|&(i, j)| (j - i, i));
    let mut e = Enumerator { c, t, pairs, budget, out: Vec::new() };
    e.objects(&mut Vec::new())?;
    let mut out = e.out;
    out.sort();
    Ok(out)
}

/// Precomposition with the functor `C[Δᵐ] -> C[Δⁿ]` induced by a monotone
/// `θ: [m] -> [n]`, which sends a subset to its image.
fn precompose(
    c: &FiniteSimplicialCategory,
    data: &SimplicialFunctorData,
    theta: &[usize],
    tm: &ThickenedSimplex,
    tn: &ThickenedSimplex,
) -> SimplicialFunctorData {
    let m = theta.len() - 1;
    let objs: Vec<usize> = theta.iter().map(|&v| data.objs[v]).collect();
    let mut homs = BTreeMap::new();
    for i in 0..=m {
        for j in i + 1..=m {
            let (a, b) = (theta[i], theta[j]);
            let src = &tm.nerves[&(i, j)];
            let ps = &tm.posets[&(i, j)];
            let levels = (0..=c.trunc)
                .map(|l| {
                    src.chains[l]
                        .iter()
                        .map(|chain| {
                            if a == b {
                                return c.identity_at(data.objs[a], l);
                            }
                            let pt = &tn.posets[&(a, b)];
                            let image: Vec<usize> = chain
                                .iter()
                                .map(|&e| {
                                    let mask = ps.elements[e];
                                    let img = (0..=m).filter(|v| mask >> v & 1 == 1).fold(0u64, |acc, v| acc | 1 << theta[v]);
                                    pt.position(img).unwrap()
                                })
                                .collect();
                            data.homs[&(a, b)].apply(l, tn.nerves[&(a, b)].lookup(&image).unwrap())
                        })
                        .collect()
                })
                .collect();
            homs.insert((i, j), SimplicialMap::new(levels));
        }
    }
    SimplicialFunctorData { objs, homs }
}

/// The coherent nerve truncated at `dmax`: `n`-simplices are simplicial
/// functors `C[Δⁿ] -> C`.
pub fn coherent_nerve(c: &FiniteSimplicialCategory, dmax: usize) -> CoherentNerve {
    coherent_nerve_with(c, dmax, &Budget::unlimited()).expect("unlimited budget")
}

pub fn coherent_nerve_with(c: &FiniteSimplicialCategory, dmax: usize, budget: &Budget) -> Result<CoherentNerve> {
    let thick: Vec<ThickenedSimplex> = (0..=dmax + 1).map(|n| thickened_simplex(n, c.trunc)).collect();
    let levels: Vec<Vec<SimplicialFunctorData>> =
        (0..=dmax).map(|n| functors(c, &thick[n], budget)).collect::<Result<_>>()?;
    let index: Vec<HashMap<&SimplicialFunctorData, usize>> =
        levels.iter().map(|l| l.iter().enumerate().map(|(i, f)| (f, i)).collect()).collect();
    let mut names = Vec::new();
    let mut faces = Vec::new();
    let mut degens = Vec::new();
    for n in 0..=dmax {
        names.push(
            levels[n]
                .iter()
                .enumerate()
                .map(|(k, f)| match n {
                    0 => c.objects[f.objs[0]].clone(),
                    1 => c.hom(f.objs[0], f.objs[1]).name(0, f.homs[&(0, 1)].apply(0, 0)).to_string(),
                    _ => format!("F{n}.{k}"),
                })
                .collect(),
        );
        faces.push(
            levels[n]
                .iter()
                .map(|f| {
                    if n == 0 {
                        return Vec::new();
                    }
                    (0..=n)
                        .map(|j| {
                            let theta: Vec<usize> = (0..n).map(|v| if v < j { v } else { v + 1 }).collect();
                            index[n - 1][&precompose(c, f, &theta, &thick[n - 1], &thick[n])]
                        })
                        .collect()
                })
                .collect(),
        );
        if n < dmax {
            degens.push(
                levels[n]
                    .iter()
                    .map(|f| {
                        (0..=n)
                            .map(|j| {
                                let theta: Vec<usize> = (0..=n + 1).map(|v| if v <= j { v } else { v - 1 }).collect();
                                index[n + 1][&precompose(c, f, &theta, &thick[n + 1], &thick[n])]
                            })
                            .collect()
                    })
                    .collect(),
            );
        }
    }
    let set = FiniteSimplicialSet::from_tables(dmax, names, faces, degens);
    Ok(CoherentNerve { set, functors: levels })
}
