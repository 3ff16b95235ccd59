//! Horn fillers, lifting properties and Kan / quasi-category / nerve classification.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::sset::{FiniteSimplicialSet, SimplicialMap};

/// A map `Λⁿᵢ -> X` given by its faces; `faces[i]` is `None`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HornInstance {
    pub dim: usize,
    pub missing: usize,
    pub faces: Vec<Option<usize>>,
}

impl HornInstance {
    pub fn new(dim: usize, missing: usize, faces: Vec<Option<usize>>) -> Self {
        assert_eq!(faces.len(), dim + 1);
        HornInstance { dim, missing, faces }
    }

    pub fn is_inner(&self) -> bool {
        self.missing > 0 && self.missing < self.dim
    }

    /// `d_j σ_k = d_{k-1} σ_j` for all present `j < k`.
    pub fn is_compatible(&self, x: &FiniteSimplicialSet) -> bool {
        let n = self.dim;
        if n < 2 {
            return true;
        }
        for k in 0..=n {
            for j in 0..k {
                if let (Some(sk), Some(sj)) = (self.faces[k], self.faces[j]) {
                    if x.face(n - 1, sk, j) != x.face(n - 1, sj, k - 1) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn render(&self, x: &FiniteSimplicialSet) -> String {
        let parts: Vec<String> = self
            .faces
            .iter()
            .enumerate()
            .map(|(j, f)| match f {
                Some(s) => format!("d{j}={}", x.name(self.dim - 1, *s)),
                None => format!("d{j}=•"),
            })
            .collect();
        format!("Λ^{}_{}({})", self.dim, self.missing, parts.join(", "))
    }
}

/// Visits every compatible tuple of `(n-1)`-simplices indexed by `j ≠ missing`.
/// `allow(j, σ)` may veto candidates early.
pub fn for_each_face_tuple(
    x: &FiniteSimplicialSet,
    n: usize,
    missing: Option<usize>,
    allow: &dyn Fn(usize, usize) -> bool,
    budget: &Budget,
    visit: &mut dyn FnMut(&[Option<usize>]) -> bool,
) -> Result<()> {
    assert!(n >= 1);
    let size = x.level_size(n - 1);
    // by_face[k][v]: (n-1)-simplices whose k-th face is v.
    let by_face: Vec<HashMap<usize, Vec<usize>>> = if n >= 2 {
        (0..n)
            .map(|k| {
                let mut m: HashMap<usize, Vec<usize>> = HashMap::new();
                for s in 0..size {
                    m.entry(x.face(n - 1, s, k)).or_default().push(s);
                }
                m
            })
            .collect()
    } else {
        Vec::new()
    };
    let all: Vec<usize> = (0..size).collect();
    let mut cur: Vec<Option<usize>> = vec![None; n + 1];
    fn rec(
        x: &FiniteSimplicialSet,
        n: usize,
        j: usize,
        missing: Option<usize>,
        allow: &dyn Fn(usize, usize) -> bool,
        by_face: &[HashMap<usize, Vec<usize>>],
        all: &[usize],
        cur: &mut Vec<Option<usize>>,
        budget: &Budget,
        visit: &mut dyn FnMut(&[Option<usize>]) -> bool,
    ) -> Result<bool> {
        if j > n {
            return Ok(visit(cur));
        }
        if Some(j) == missing {
            return rec(x, n, j + 1, missing, allow, by_face, all, cur, budget, visit);
        }
        // σ_j must satisfy d_k σ_j = d_{j-1} σ_k for every chosen k < j.
        let first = (0..j).find(|&k| cur[k].is_some());
        let empty = Vec::new();
        let cands: &[usize] = match first {
            Some(k) if n >= 2 => {
                let want = x.face(n - 1, cur[k].unwrap(), j - 1);
                by_face[k].get(&want).unwrap_or(&empty)
            }
            _ => all,
        };
        'cand: for &c in cands {
            if !allow(j, c) {
                continue;
            }
            budget.tick()?;
            if n >= 2 {
                for k in 0..j {
                    if let Some(sk) = cur[k] {
                        if x.face(n - 1, c, k) != x.face(n - 1, sk, j - 1) {
                            continue 'cand;
                        }
                    }
                }
            }
            cur[j] = Some(c);
            if !rec(x, n, j + 1, missing, allow, by_face, all, cur, budget, visit)? {
                return Ok(false);
            }
            cur[j] = None;
        }
        Ok(true)
    }
    rec(x, n, 0, missing, allow, &by_face, &all, &mut cur, budget, visit).map(|_| ())
}

/// All compatible `(n, i)`-horns in `X`, in canonical order.
pub fn enumerate_horns(x: &FiniteSimplicialSet, n: usize, i: usize) -> Vec<HornInstance> {
    let mut out = Vec::new();
    for_each_face_tuple(x, n, Some(i), &|_, _| true, &Budget::unlimited(), &mut |t| {
        out.push(HornInstance::new(n, i, t.to_vec()));
        true
    })
    .expect("unlimited budget");
    out
}

/// Restriction of each `n`-simplex to the faces other than `missing`.
fn restriction_index(x: &FiniteSimplicialSet, n: usize, missing: Option<usize>) -> HashMap<Vec<usize>, Vec<usize>> {
    let mut m: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for s in 0..x.level_size(n) {
        let key: Vec<usize> = (0..=n).filter(|&j| Some(j) != missing).map(|j| x.face(n, s, j)).collect();
        m.entry(key).or_default().push(s);
    }
    m
}

fn tuple_key(t: &[Option<usize>]) -> Vec<usize> {
    t.iter().flatten().copied().collect()
}

/// All `n`-simplices extending the horn.
pub fn find_fillers(x: &FiniteSimplicialSet, h: &HornInstance) -> Vec<usize> {
    let n = h.dim;
    (0..x.level_size(n))
        .filter(|&s| (0..=n).all(|j| h.faces[j].map_or(true, |f| x.face(n, s, j) == f)))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictKind {
    Kan,
    Quasicategory,
    NerveLike,
    None,
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VerdictKind::Kan => "kan",
            VerdictKind::Quasicategory => "quasicategory",
            VerdictKind::NerveLike => "nerve_like",
            VerdictKind::None => "none",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationVerdict {
    pub kind: VerdictKind,
    pub checked_dim: usize,
    pub failure_witness: Option<HornInstance>,
    pub multiplicity_witness: Option<(HornInstance, usize, usize)>,
}

impl ClassificationVerdict {
    pub fn passed(&self) -> bool {
        self.kind != VerdictKind::None
    }
}

fn check_horns(
    x: &FiniteSimplicialSet,
    dmax: usize,
    kind: VerdictKind,
    budget: &Budget,
) -> Result<ClassificationVerdict> {
    if dmax > x.trunc_dim() {
        return Err(Error::Truncation { needed: dmax, available: x.trunc_dim() });
    }
    let inner = kind != VerdictKind::Kan;
    let unique = kind == VerdictKind::NerveLike;
    let mut verdict = ClassificationVerdict { kind, checked_dim: dmax, failure_witness: None, multiplicity_witness: None };
    for n in (if inner { 2 } else { 1 })..=dmax {
        budget.check_level(n, x.level_size(n))?;
        let range: Vec<usize> = if inner { (1..n).collect() } else { (0..=n).collect() };
        for i in range {
            let fillers = restriction_index(x, n, Some(i));
            let mut stop = false;
            for_each_face_tuple(x, n, Some(i), &|_, _| true, budget, &mut |t| {
                match fillers.get(&tuple_key(t)) {
                    None => {
                        verdict.failure_witness = Some(HornInstance::new(n, i, t.to_vec()));
                        stop = true;
                    }
                    Some(fs) if unique && fs.len() > 1 => {
                        verdict.multiplicity_witness = Some((HornInstance::new(n, i, t.to_vec()), fs[0], fs[1]));
                        stop = true;
                    }
                    _ => {}
                }
                !stop
            })?;
            if stop {
                verdict.kind = VerdictKind::None;
                return Ok(verdict);
            }
        }
    }
    Ok(verdict)
}

/// Every inner horn up to `dmax` has a filler.
pub fn check_quasicategory(x: &FiniteSimplicialSet, dmax: usize) -> ClassificationVerdict {
    check_quasicategory_with(x, dmax, &Budget::unlimited()).expect("unlimited budget within truncation")
}

pub fn check_quasicategory_with(x: &FiniteSimplicialSet, dmax: usize, budget: &Budget) -> Result<ClassificationVerdict> {
    check_horns(x, dmax, VerdictKind::Quasicategory, budget)
}

/// Every horn up to `dmax` has a filler.
pub fn check_kan(x: &FiniteSimplicialSet, dmax: usize) -> ClassificationVerdict {
    check_kan_with(x, dmax, &Budget::unlimited()).expect("unlimited budget within truncation")
}

pub fn check_kan_with(x: &FiniteSimplicialSet, dmax: usize, budget: &Budget) -> Result<ClassificationVerdict> {
    check_horns(x, dmax, VerdictKind::Kan, budget)
}

/// Every inner horn up to `dmax` has exactly one filler.
pub fn check_unique_inner_fillers(x: &FiniteSimplicialSet, dmax: usize) -> ClassificationVerdict {
    check_unique_inner_fillers_with(x, dmax, &Budget::unlimited()).expect("unlimited budget within truncation")
}

pub fn check_unique_inner_fillers_with(
    x: &FiniteSimplicialSet,
    dmax: usize,
    budget: &Budget,
) -> Result<ClassificationVerdict> {
    check_horns(x, dmax, VerdictKind::NerveLike, budget)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorFamily {
    Boundaries,
    InnerHorns,
    AllHorns,
}

impl GeneratorFamily {
    /// Generators `(n, missing face)` up to `dmax`; `None` means the boundary.
    pub fn generators(self, dmax: usize) -> Vec<(usize, Option<usize>)> {
        let mut out = Vec::new();
        for n in 0..=dmax {
            match self {
                GeneratorFamily::Boundaries => out.push((n, None)),
                GeneratorFamily::InnerHorns => out.extend((1..n).map(|i| (n, Some(i)))),
                GeneratorFamily::AllHorns if n >= 1 => out.extend((0..=n).map(|i| (n, Some(i)))),
                GeneratorFamily::AllHorns => {}
            }
        }
        out
    }
}

/// A commutative square from a generator `A ⊂ Δⁿ` into `p: X -> Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftingSquare {
    pub dim: usize,
    pub missing: Option<usize>,
    pub top: Vec<Option<usize>>,
    pub bottom: usize,
}

impl LiftingSquare {
    pub fn render(&self, x: &FiniteSimplicialSet, y: &FiniteSimplicialSet) -> String {
        let gen = match self.missing {
            None => format!("∂Δ^{}", self.dim),
            Some(i) => format!("Λ^{}_{}", self.dim, i),
        };
        let top: Vec<String> = if self.dim == 0 {
            Vec::new()
        } else {
            self.top
                .iter()
                .enumerate()
                .filter_map(|(j, f)| f.map(|s| format!("d{j}={}", x.name(self.dim - 1, s))))
                .collect()
        };
        format!("{gen}: top ({}) bottom {}", top.join(", "), y.name(self.dim, self.bottom))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RlpVerdict {
    pub holds: bool,
    pub checked_dim: usize,
    pub witness: Option<LiftingSquare>,
}

/// Right lifting property of `p: X -> Y` against a generator family up to `dmax`.
pub fn has_rlp(
    p: &SimplicialMap,
    x: &FiniteSimplicialSet,
    y: &FiniteSimplicialSet,
    family: GeneratorFamily,
    dmax: usize,
) -> RlpVerdict {
    has_rlp_with(p, x, y, family, dmax, &Budget::unlimited()).expect("unlimited budget within truncation")
}

pub fn has_rlp_with(
    p: &SimplicialMap,
    x: &FiniteSimplicialSet,
    y: &FiniteSimplicialSet,
    family: GeneratorFamily,
    dmax: usize,
    budget: &Budget,
) -> Result<RlpVerdict> {
    let avail = x.trunc_dim().min(y.trunc_dim()).min(p.trunc());
    if dmax > avail {
        return Err(Error::Truncation { needed: dmax, available: avail });
    }
    for (n, missing) in family.generators(dmax) {
        if n == 0 {
            let hit: HashSet<usize> = p.levels[0].iter().copied().collect();
            if let Some(v) = (0..y.level_size(0)).find(|v| !hit.contains(v)) {
                let w = LiftingSquare { dim: 0, missing, top: vec![], bottom: v };
                return Ok(RlpVerdict { holds: false, checked_dim: dmax, witness: Some(w) });
            }
            continue;
        }
        let lifts: HashSet<(Vec<usize>, usize)> = (0..x.level_size(n))
            .map(|s| {
                let key = (0..=n).filter(|&j| Some(j) != missing).map(|j| x.face(n, s, j)).collect();
                (key, p.apply(n, s))
            })
            .collect();
        let bottoms = restriction_index(y, n, missing);
        let mut witness = None;
        for_each_face_tuple(x, n, missing, &|_, _| true, budget, &mut |t| {
            let key = tuple_key(t);
            let image: Vec<usize> = key.iter().map(|&s| p.apply(n - 1, s)).collect();
            for &b in bottoms.get(&image).map(Vec::as_slice).unwrap_or(&[]) {
                if !lifts.contains(&(key.clone(), b)) {
                    witness = Some(LiftingSquare { dim: n, missing, top: t.to_vec(), bottom: b });
                    return false;
                }
            }
            true
        })?;
        if witness.is_some() {
            return Ok(RlpVerdict { holds: false, checked_dim: dmax, witness });
        }
    }
    Ok(RlpVerdict { holds: true, checked_dim: dmax, witness: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{nerve, FiniteCategory};
    use crate::sset::{horn, standard_map, standard_simplex};

    #[test]
    fn fillers_in_small_nerves() {
        let n2 = nerve(&FiniteCategory::ordinal(2), 2);
        let f = n2.index_of(1, "0≤1").unwrap();
        let g = n2.index_of(1, "1≤2").unwrap();
        assert_eq!(find_fillers(&n2, &HornInstance::new(2, 1, vec![Some(g), None, Some(f)])).len(), 1);

        let n1 = nerve(&FiniteCategory::ordinal(1), 2);
        let f = n1.index_of(1, "0≤1").unwrap();
        let id0 = n1.index_of(1, "id_0").unwrap();
        let outer = HornInstance::new(2, 0, vec![None, Some(f), Some(f)]);
        assert!(outer.is_compatible(&n1));
        assert!(!find_fillers(&n1, &outer).is_empty());
        let bad = HornInstance::new(2, 2, vec![Some(f), Some(id0), None]);
        assert!(find_fillers(&n1, &bad).is_empty());
        let kappa = n1.degen(1, f, 0);
        let deg = HornInstance::new(2, 1, vec![Some(f), None, Some(n1.degen(0, 0, 0))]);
        assert!(find_fillers(&n1, &deg).contains(&kappa));
    }

    #[test]
    fn horn_enumeration_counts() {
        assert_eq!(enumerate_horns(&standard_simplex(0, 1), 1, 0).len(), 1);
        let l = horn(2, 1, 2);
        let taut = HornInstance::new(2, 1, vec![l.index_of(1, "12"), None, l.index_of(1, "01")]);
        assert!(enumerate_horns(&l, 2, 1).contains(&taut));
        assert_eq!(enumerate_horns(&nerve(&FiniteCategory::cyclic_group(2), 2), 2, 1).len(), 4);
    }

    #[test]
    fn classification_examples() {
        assert!(check_quasicategory(&nerve(&FiniteCategory::ordinal(2), 3), 3).passed());
        let l = horn(2, 1, 2);
        assert!(check_quasicategory(&l, 2).failure_witness.is_some());
        assert!(check_kan(&nerve(&FiniteCategory::cyclic_group(2), 3), 3).passed());
        let v = check_kan(&nerve(&FiniteCategory::ordinal(1), 2), 2);
        let w = v.failure_witness.unwrap();
        assert_eq!((w.dim, w.missing), (2, 0));
        assert!(check_kan(&standard_simplex(0, 3), 3).passed());
        assert!(check_unique_inner_fillers(&nerve(&FiniteCategory::ordinal(3), 3), 3).passed());
        assert!(!check_unique_inner_fillers(&horn(3, 2, 3), 3).passed());
    }

    #[test]
    fn rlp_examples() {
        let d1 = standard_simplex(1, 2);
        let id = SimplicialMap::identity(&d1);
        for fam in [GeneratorFamily::Boundaries, GeneratorFamily::InnerHorns, GeneratorFamily::AllHorns] {
            assert!(has_rlp(&id, &d1, &d1, fam, 2).holds);
        }
        let d0 = standard_simplex(0, 2);
        let v1 = standard_map(0, 1, &[1], 2);
        let r = has_rlp(&v1, &d0, &d1, GeneratorFamily::Boundaries, 1);
        assert!(!r.holds);
    }
}
