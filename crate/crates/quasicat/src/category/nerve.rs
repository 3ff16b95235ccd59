use std::collections::HashMap;

use super::{FiniteCategory, Morphism};
use crate::lifting::{check_unique_inner_fillers, find_fillers, HornInstance};
use crate::sset::{extend_by_boundaries, FiniteSimplicialSet};

/// A chain `obj --mors[0]--> ... --mors[n-1]-->` of composable morphisms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NerveKey {
    pub obj: usize,
    pub mors: Vec<usize>,
}

impl NerveKey {
    fn vertex(&self, c: &FiniteCategory, i: usize) -> usize {
        if i == 0 {
            self.obj
        } else {
            c.tgt(self.mors[i - 1])
        }
    }
}

/// Composable chains per level, in canonical order.
pub fn nerve_chains(c: &FiniteCategory, trunc: usize) -> Vec<Vec<NerveKey>> {
    let mut levels = vec![(0..c.num_objects()).map(|x| NerveKey { obj: x, mors: vec![] }).collect::<Vec<_>>()];
    for n in 1..=trunc {
        let mut next = Vec::new();
        for k in &levels[n - 1] {
            let last = k.vertex(c, n - 1);
            for f in 0..c.num_morphisms() {
                if c.src(f) == last {
                    let mut m = k.mors.clone();
                    m.push(f);
                    next.push(NerveKey { obj: k.obj, mors: m });
                }
            }
        }
        levels.push(next);
    }
    levels
}

/// The nerve truncated at `trunc`. Vertices carry object names, `n`-simplices
/// the names of their morphisms joined by `|`.
pub fn nerve(c: &FiniteCategory, trunc: usize) -> FiniteSimplicialSet {
    let levels = nerve_chains(c, trunc);
    let face = |k: &NerveKey, j: usize| {
        let n = k.mors.len();
        if n == 1 {
            let obj = if j == 0 { c.tgt(k.mors[0]) } else { c.src(k.mors[0]) };
            return NerveKey { obj, mors: vec![] };
        }
        let mut m = k.mors.clone();
        if j == 0 {
            m.remove(0);
            NerveKey { obj: c.tgt(k.mors[0]), mors: m }
        } else if j == n {
            m.pop();
            NerveKey { obj: k.obj, mors: m }
        } else {
            let h = c.compose(m[j], m[j - 1]).expect("chain is composable");
            m.splice(j - 1..=j, [h]);
            NerveKey { obj: k.obj, mors: m }
        }
    };
    let degen = |k: &NerveKey, j: usize| {
        let mut m = k.mors.clone();
        m.insert(j, c.id(k.vertex(c, j)));
        NerveKey { obj: k.obj, mors: m }
    };
    let name = |k: &NerveKey| {
        if k.mors.is_empty() {
            c.objects[k.obj].clone()
        } else {
            k.mors.iter().map(|&f| c.name(f)).collect::<Vec<_>>().join("|")
        }
    };
    FiniteSimplicialSet::from_keys(trunc, &levels, face, degen, name)
}

/// The 2-truncated nerve extended level by level with every compatible
/// boundary. Equal to [`nerve`] for a category; for a table that fails
/// associativity the missing 3-simplices show up as unfillable inner horns.
pub fn coskeletal_nerve(c: &FiniteCategory, trunc: usize) -> FiniteSimplicialSet {
    let mut x = nerve(c, trunc.min(2));
    while x.trunc_dim() < trunc {
        x = extend_by_boundaries(&x);
    }
    x
}

/// Nerve of a finite poset whose simplices are weakly increasing chains of
/// elements, with a lookup from chains to indices.
#[derive(Debug, Clone)]
pub struct ChainNerve {
    pub set: FiniteSimplicialSet,
    pub chains: Vec<Vec<Vec<usize>>>,
    pub index: Vec<HashMap<Vec<usize>, usize>>,
}

impl ChainNerve {
    pub fn lookup(&self, chain: &[usize]) -> Option<usize> {
        self.index.get(chain.len().checked_sub(1)?)?.get(chain).copied()
    }
}

/// Nerve of the poset `(names, leq)`; chains are named by joining element
/// names with `sep`.
pub fn poset_nerve(names: &[String], leq: impl Fn(usize, usize) -> bool, sep: &str, trunc: usize) -> ChainNerve {
    let n = names.len();
    let mut chains: Vec<Vec<Vec<usize>>> = vec![(0..n).map(|a| vec![a]).collect()];
    for l in 1..=trunc {
        let mut next = Vec::new();
        for ch in &chains[l - 1] {
            let last = *ch.last().unwrap();
            for b in 0..n {
                if leq(last, b) {
                    let mut c = ch.clone();
                    c.push(b);
                    next.push(c);
                }
            }
        }
        chains.push(next);
    }
    let set = FiniteSimplicialSet::from_keys(
        trunc,
        &chains,
        |c, j| {
            let mut t = c.clone();
            t.remove(j);
            t
        },
        |c, j| {
            let mut t = c.clone();
            t.insert(j, c[j]);
            t
        },
        |c| c.iter().map(|&a| names[a].as_str()).collect::<Vec<_>>().join(sep),
    );
    let index = chains.iter().map(|l| l.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect()).collect();
    ChainNerve { set, chains, index }
}

/// Recovers a category from a simplicial set with unique inner fillers:
/// objects are vertices, morphisms edges, composition the `d_1` of the
/// unique `Λ²₁` filler. Returns `None` when fillers are not unique up to
/// `dmax` or the resulting composition violates a law.
pub fn recognize_nerve(x: &FiniteSimplicialSet, dmax: usize) -> Option<FiniteCategory> {
    if dmax < 2 || dmax > x.trunc_dim() {
        return None;
    }
    if check_unique_inner_fillers(x, dmax).failure_witness.is_some() {
        return None;
    }
    let objects: Vec<String> = x.names(0).to_vec();
    let morphisms: Vec<Morphism> = (0..x.level_size(1))
        .map(|e| Morphism { name: x.name(1, e).to_string(), src: x.face(1, e, 1), tgt: x.face(1, e, 0) })
        .collect();
    let identities: Vec<usize> = (0..x.level_size(0)).map(|v| x.degen(0, v, 0)).collect();
    let c = FiniteCategory::new(objects, morphisms, identities, |g, f| {
        let h = HornInstance::new(2, 1, vec![Some(g), None, Some(f)]);
        let fill = find_fillers(x, &h);
        (fill.len() == 1).then(|| x.face(2, fill[0], 1))
    })
    .ok()?;
    c.is_valid().then_some(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::category_isomorphism;
    use crate::sset::horn;

    #[test]
    fn coskeletal_nerve_matches_nerve() {
        for c in [FiniteCategory::ordinal(2), FiniteCategory::cyclic_group(3), FiniteCategory::parallel_pair()] {
            let x = coskeletal_nerve(&c, 3);
            assert!(x.validate().is_clean());
            assert!(crate::sset::find_isomorphism(&x, &nerve(&c, 3)).is_some());
        }
    }

    #[test]
    fn non_associative_table_loses_fillers() {
        let bad = FiniteCategory::cyclic_group(3).with_composite(1, 1, 0);
        let x = coskeletal_nerve(&bad, 3);
        assert!(x.validate().is_clean());
        let v = check_unique_inner_fillers(&x, 3);
        assert!(!v.passed());
        assert_eq!(v.failure_witness.unwrap().dim, 3);
    }

    #[test]
    fn nerve_level_sizes() {
        assert_eq!(nerve(&FiniteCategory::ordinal(1), 2).level_sizes(), vec![2, 3, 4]);
        assert_eq!(nerve(&FiniteCategory::cyclic_group(2), 3).level_sizes(), vec![1, 2, 4, 8]);
        assert_eq!(nerve(&FiniteCategory::terminal(), 3).level_sizes(), vec![1, 1, 1, 1]);
        for c in [FiniteCategory::ordinal(2), FiniteCategory::parallel_pair(), FiniteCategory::idempotent_monoid()] {
            assert!(nerve(&c, 3).validate().is_clean());
        }
    }

    #[test]
    fn poset_nerve_matches_category_nerve() {
        let names: Vec<String> = (0..3).map(|i| i.to_string()).collect();
        let p = poset_nerve(&names, |a, b| a <= b, "≤", 3);
        let q = nerve(&FiniteCategory::ordinal(2), 3);
        assert_eq!(p.set.level_sizes(), q.level_sizes());
        assert_eq!(p.lookup(&[0, 2]).map(|i| p.set.name(1, i).to_string()), Some("0≤2".into()));
    }

    #[test]
    fn recognize_round_trip() {
        for c in [FiniteCategory::ordinal(2), FiniteCategory::cyclic_group(2), FiniteCategory::parallel_pair()] {
            let r = recognize_nerve(&nerve(&c, 3), 3).unwrap();
            assert!(category_isomorphism(&r, &c).is_some());
        }
        assert!(recognize_nerve(&horn(2, 1, 2), 2).is_none());
    }
}
