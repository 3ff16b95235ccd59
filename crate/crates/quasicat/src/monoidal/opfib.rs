use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::rc::Rc;

use super::words::{coherence_iso, left_normal, permutation_iso, Word};
use super::{validate_monoidal, MonoidalCategory, MonoidalPresentation};
use crate::category::{FiniteCategory, Morphism};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseKind {
    /// Truncated `Δᵒᵖ`.
    DeltaOp,
    /// Truncated category of finite pointed sets `⟨n⟩_*`.
    Fin,
}

/// An arrow of the base, always oriented in the direction of the
/// opfibration: from the fiber over `src_len` to the fiber over `tgt_len`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaseMap {
    /// A monotone `α: [k] -> [n]` given by its values.
    Delta { n: usize, values: Vec<usize> },
    /// A pointed map `⟨n⟩_* -> ⟨k⟩_*`; `values[j-1]` is the image of `j`,
    /// `None` the base point.
    Fin { k: usize, values: Vec<Option<usize>> },
}

impl BaseMap {
    pub fn delta(n: usize, values: Vec<usize>) -> Result<Self> {
        if values.is_empty() || values.iter().any(|&v| v > n) || values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Invalid(format!("{values:?} is not a monotone map into [{n}]")));
        }
        Ok(BaseMap::Delta { n, values })
    }

    pub fn fin(k: usize, values: Vec<Option<usize>>) -> Result<Self> {
        if values.iter().flatten().any(|&i| i == 0 || i > k) {
            return Err(Error::Invalid(format!("{values:?} is not a pointed map into <{k}>")));
        }
        Ok(BaseMap::Fin { k, values })
    }

    pub fn identity(kind: BaseKind, n: usize) -> Self {
        match kind {
            BaseKind::DeltaOp => BaseMap::Delta { n, values: (0..=n).collect() },
            BaseKind::Fin => BaseMap::Fin { k: n, values: (1..=n).map(Some).collect() },
        }
    }

    pub fn kind(&self) -> BaseKind {
        match self {
            BaseMap::Delta { .. } => BaseKind::DeltaOp,
            BaseMap::Fin { .. } => BaseKind::Fin,
        }
    }

    pub fn src_len(&self) -> usize {
        match self {
            BaseMap::Delta { n, .. } => *n,
            BaseMap::Fin { values, .. } => values.len(),
        }
    }

    pub fn tgt_len(&self) -> usize {
        match self {
            BaseMap::Delta { values, .. } => values.len() - 1,
            BaseMap::Fin { k, .. } => *k,
        }
    }

    /// For each target slot, the source positions (0-based, increasing)
    /// tensored into it.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        match self {
            BaseMap::Delta { values, .. } => values.windows(2).map(|w| (w[0]..w[1]).collect()).collect(),
            BaseMap::Fin { k, values } => (1..=*k)
                .map(|i| (0..values.len()).filter(|&j| values[j] == Some(i)).collect())
                .collect(),
        }
    }

    /// The composite "first `self`, then `next`".
    pub fn then(&self, next: &BaseMap) -> BaseMap {
        assert_eq!(self.tgt_len(), next.src_len(), "base arrows are not composable");
        match (self, next) {
            (BaseMap::Delta { n, values: a }, BaseMap::Delta { values: b, .. }) => {
                BaseMap::Delta { n: *n, values: b.iter().map(|&i| a[i]).collect() }
            }
            (BaseMap::Fin { values: a, .. }, BaseMap::Fin { k, values: b }) => {
                BaseMap::Fin { k: *k, values: a.iter().map(|v| v.and_then(|i| b[i - 1])).collect() }
            }
            _ => panic!("base arrows of different kinds"),
        }
    }

    /// Every base arrow between lengths `0..=nmax`, ordered by source length,
    /// target length and values.
    pub fn all(kind: BaseKind, nmax: usize) -> Vec<BaseMap> {
        let mut out = Vec::new();
        for n in 0..=nmax {
            for k in 0..=nmax {
                match kind {
                    BaseKind::DeltaOp => {
                        let mut values = vec![0; k + 1];
                        loop {
                            out.push(BaseMap::Delta { n, values: values.clone() });
                            // next non-decreasing sequence in [0, n]
                            let Some(p) = (0..=k).rev().find(|&p| values[p] < n) else { break };
                            let v = values[p] + 1;
                            values[p..].iter_mut().for_each(|x| *x = v);
                        }
                    }
                    BaseKind::Fin => {
                        let mut digits = vec![0usize; n];
                        loop {
                            let values = digits.iter().map(|&d| (d > 0).then_some(d)).collect();
                            out.push(BaseMap::Fin { k, values });
                            let Some(p) = (0..n).rev().find(|&p| digits[p] < k) else { break };
                            digits[p] += 1;
                            digits[p + 1..].iter_mut().for_each(|x| *x = 0);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        *self == BaseMap::identity(self.kind(), self.src_len())
    }

    /// Injective with image an interval (only `Delta` arrows can be convex).
    pub fn is_convex(&self) -> bool {
        match self {
            BaseMap::Delta { values, .. } => values.windows(2).all(|w| w[1] == w[0] + 1),
            BaseMap::Fin { .. } => false,
        }
    }

    /// Every non-base-point target has exactly one preimage (only `Fin`
    /// arrows can be collapsing).
    pub fn is_collapsing(&self) -> bool {
        match self {
            BaseMap::Fin { .. } => self.blocks().iter().all(|b| b.len() == 1),
            BaseMap::Delta { .. } => false,
        }
    }

    /// The arrows an algebra section must send to coCartesian morphisms.
    pub fn is_inert(&self) -> bool {
        self.is_convex() || self.is_collapsing()
    }
}

impl fmt::Display for BaseMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseMap::Delta { n, values } => {
                let v: Vec<String> = values.iter().map(|x| x.to_string()).collect();
                write!(f, "[{}]→[{n}]:({})", values.len() - 1, v.join(","))
            }
            BaseMap::Fin { k, values } => {
                let v: Vec<String> = values.iter().map(|x| x.map_or("*".into(), |i| i.to_string())).collect();
                write!(f, "<{}>→<{k}>:({})", values.len(), v.join(","))
            }
        }
    }
}

/// A morphism of the total category: a base arrow (by index) and one
/// component `L(block_i) -> tgt_i` per target slot.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TotalMor {
    pub src: usize,
    pub tgt: usize,
    pub base: usize,
    pub comps: Vec<usize>,
}

/// The total category `M^⊗` over the truncated base.
#[derive(Debug, Clone)]
pub struct OpfibTotal {
    pub m: MonoidalPresentation,
    pub kind: BaseKind,
    pub nmax: usize,
    /// Object sequences ordered by length, then lexicographically.
    pub objects: Vec<Vec<usize>>,
    object_index: HashMap<Vec<usize>, usize>,
    pub bases: Vec<BaseMap>,
    base_index: HashMap<BaseMap, usize>,
    blocks: Vec<Vec<Vec<usize>>>,
    base_then: Vec<Vec<Option<usize>>>,
    bases_from: Vec<Vec<usize>>,
    out_mors: Vec<Vec<usize>>,
    removed: HashSet<TotalMor>,
    coherence: RefCell<HashMap<(usize, usize, usize), Rc<Vec<usize>>>>,
}

/// `M^⊗ → Δᵒᵖ` truncated at `nmax`.
pub fn build_opfib_delta(m: &MonoidalPresentation, nmax: usize) -> Result<OpfibTotal> {
    build_opfib(m, BaseKind::DeltaOp, nmax)
}

/// `M^⊗` over either base; `Fin` needs a symmetric presentation.
pub fn build_opfib(m: &MonoidalPresentation, kind: BaseKind, nmax: usize) -> Result<OpfibTotal> {
    m.check_shapes()?;
    if kind == BaseKind::Fin && !m.is_symmetric() {
        return Err(Error::Precondition("the Fin encoding needs a braiding".into()));
    }
    let report = validate_monoidal(m);
    if let Some(v) = report.violations.first() {
        return Err(Error::Precondition(format!("presentation is not monoidal: {v}")));
    }
    let k = m.num_objects();
    let mut objects: Vec<Vec<usize>> = vec![Vec::new()];
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..nmax {
        layer = layer
            .iter()
            .flat_map(|s| (0..k).map(move |x| {
                let mut t = s.clone();
                t.push(x);
                t
            }))
            .collect();
        objects.extend(layer.iter().cloned());
    }
    let object_index = objects.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    let bases = BaseMap::all(kind, nmax);
    let base_index: HashMap<BaseMap, usize> = bases.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
    let blocks = bases.iter().map(BaseMap::blocks).collect();
    let base_then = bases
        .iter()
        .map(|a| {
            bases
                .iter()
                .map(|b| (a.tgt_len() == b.src_len()).then(|| base_index[&a.then(b)]))
                .collect()
        })
        .collect();
    let mut bases_from = vec![Vec::new(); nmax + 1];
    for (i, b) in bases.iter().enumerate() {
        bases_from[b.src_len()].push(i);
    }
    let out_mors = (0..k).map(|x| (0..m.base.num_morphisms()).filter(|&f| m.base.src(f) == x).collect()).collect();
    Ok(OpfibTotal {
        m: m.clone(),
        kind,
        nmax,
        objects,
        object_index,
        bases,
        base_index,
        blocks,
        base_then,
        bases_from,
        out_mors,
        removed: HashSet::new(),
        coherence: RefCell::new(HashMap::new()),
    })
}

impl OpfibTotal {
    pub fn object(&self, seq: &[usize]) -> Option<usize> {
        self.object_index.get(seq).copied()
    }

    pub fn base(&self, b: &BaseMap) -> Option<usize> {
        self.base_index.get(b).copied()
    }

    pub fn len_of(&self, x: usize) -> usize {
        self.objects[x].len()
    }

    pub fn identity_base(&self, n: usize) -> usize {
        self.base_index[&BaseMap::identity(self.kind, n)]
    }

    /// Index of "first `a`, then `b`".
    pub fn then(&self, a: usize, b: usize) -> usize {
        self.base_then[a][b].expect("base arrows are not composable")
    }

    pub fn bases_from(&self, n: usize) -> &[usize] {
        &self.bases_from[n]
    }

    pub fn fiber(&self, n: usize) -> Vec<usize> {
        (0..self.objects.len()).filter(|&x| self.objects[x].len() == n).collect()
    }

    /// The left-normal tensor of the letters of `x` at `positions`.
    fn block_object(&self, x: usize, positions: &[usize]) -> usize {
        let seq = &self.objects[x];
        positions.iter().fold(None, |acc: Option<usize>, &p| Some(acc.map_or(seq[p], |a| self.m.tensor_obj[a][seq[p]])))
            .unwrap_or(self.m.unit)
    }

    /// The sequence `(L(block_1), …, L(block_k))`.
    pub fn pushed_object(&self, x: usize, a: usize) -> usize {
        let seq: Vec<usize> = self.blocks[a].iter().map(|b| self.block_object(x, b)).collect();
        self.object_index[&seq]
    }

    /// The lift of `a` at `x` with identity components.
    pub fn identity_lift(&self, x: usize, a: usize) -> TotalMor {
        let tgt = self.pushed_object(x, a);
        let comps = self.objects[tgt].iter().map(|&o| self.m.base.id(o)).collect();
        TotalMor { src: x, tgt, base: a, comps }
    }

    pub fn identity(&self, x: usize) -> TotalMor {
        self.identity_lift(x, self.identity_base(self.len_of(x)))
    }

    /// Every morphism over `a` out of `x`, to any target, in lexicographic
    /// order of components (so the identity lift comes first among those
    /// with its target).
    pub fn morphisms_from(&self, x: usize, a: usize) -> Vec<TotalMor> {
        let choices: Vec<&[usize]> =
            self.blocks[a].iter().map(|b| self.out_mors[self.block_object(x, b)].as_slice()).collect();
        let mut out = Vec::new();
        let mut comps = Vec::with_capacity(choices.len());
        self.product(x, a, &choices, &mut comps, &mut out);
        out
    }

    fn product(&self, x: usize, a: usize, choices: &[&[usize]], comps: &mut Vec<usize>, out: &mut Vec<TotalMor>) {
        if comps.len() == choices.len() {
            let tgt_seq: Vec<usize> = comps.iter().map(|&f| self.m.base.tgt(f)).collect();
            let f = TotalMor { src: x, tgt: self.object_index[&tgt_seq], base: a, comps: comps.clone() };
            if !self.removed.contains(&f) {
                out.push(f);
            }
            return;
        }
        for &f in choices[comps.len()] {
            comps.push(f);
            self.product(x, a, choices, comps, out);
            comps.pop();
        }
    }

    pub fn hom_over(&self, x: usize, a: usize, z: usize) -> Vec<TotalMor> {
        self.morphisms_from(x, a).into_iter().filter(|f| f.tgt == z).collect()
    }

    /// Morphisms over identities between objects of length `n`.
    pub fn fiber_morphisms(&self, n: usize) -> Vec<TotalMor> {
        let id = self.identity_base(n);
        self.fiber(n).into_iter().flat_map(|x| self.morphisms_from(x, id)).collect()
    }

    pub fn is_fiber_iso(&self, f: &TotalMor) -> bool {
        self.bases[f.base].is_identity() && f.comps.iter().all(|&c| self.m.base.is_iso(c))
    }

    /// Fiber morphism from per-slot morphisms of `M`.
    pub fn fiber_morphism(&self, comps: &[usize]) -> TotalMor {
        let src: Vec<usize> = comps.iter().map(|&f| self.m.base.src(f)).collect();
        let tgt: Vec<usize> = comps.iter().map(|&f| self.m.base.tgt(f)).collect();
        TotalMor {
            src: self.object_index[&src],
            tgt: self.object_index[&tgt],
            base: self.identity_base(comps.len()),
            comps: comps.to_vec(),
        }
    }

    /// Per composite slot, the rebracketing (and for `Fin` reordering)
    /// isomorphism from `L(letters in order)` to the nested tensor of the
    /// first arrow's blocks.
    fn coherence(&self, x: usize, a: usize, b: usize) -> Rc<Vec<usize>> {
        if let Some(c) = self.coherence.borrow().get(&(x, a, b)) {
            return c.clone();
        }
        let seq = &self.objects[x];
        let c = self.then(a, b);
        let mut out = Vec::new();
        for (slot, outer) in self.blocks[b].iter().enumerate() {
            let order: Vec<usize> = outer.iter().flat_map(|&j| self.blocks[a][j].iter().copied()).collect();
            let sorted = &self.blocks[c][slot];
            let nested = outer.iter().fold(None, |acc: Option<Word<usize>>, &j| {
                let w = left_normal(&self.blocks[a][j].iter().map(|&p| seq[p]).collect::<Vec<_>>());
                Some(acc.map_or(w.clone(), |acc| Word::t(acc, w)))
            });
            let nested = nested.unwrap_or(Word::Unit);
            let letters: Vec<usize> = order.iter().map(|&p| seq[p]).collect();
            let rebracket = coherence_iso(&self.m, &left_normal(&letters), &nested).expect("same letters");
            let iso = if order == *sorted {
                rebracket
            } else {
                let perm: Vec<usize> = order.iter().map(|p| sorted.iter().position(|q| q == p).unwrap()).collect();
                let sorted_letters: Vec<usize> = sorted.iter().map(|&p| seq[p]).collect();
                self.m.compose(&rebracket, &permutation_iso(&self.m, &sorted_letters, &perm))
            };
            out.push(iso);
        }
        let out = Rc::new(out);
        self.coherence.borrow_mut().insert((x, a, b), out.clone());
        out
    }

    /// `g ∘ f`; panics when `f.tgt != g.src`.
    pub fn compose(&self, g: &TotalMor, f: &TotalMor) -> TotalMor {
        assert_eq!(f.tgt, g.src, "total morphisms are not composable");
        let coh = self.coherence(f.src, f.base, g.base);
        let m = &self.m;
        let comps = self.blocks[g.base]
            .iter()
            .enumerate()
            .map(|(i, outer)| {
                let ten = outer
                    .iter()
                    .fold(None, |acc: Option<usize>, &j| Some(acc.map_or(f.comps[j], |t| m.tensor_mor[t][f.comps[j]])))
                    .unwrap_or_else(|| m.base.id(m.unit));
                m.compose(&g.comps[i], &m.compose(&ten, &coh[i]))
            })
            .collect();
        TotalMor { src: f.src, tgt: g.tgt, base: self.then(f.base, g.base), comps }
    }

    /// Every `g` over `b` with `g ∘ f = h`.
    pub fn factor(&self, f: &TotalMor, h: &TotalMor, b: usize) -> Vec<TotalMor> {
        self.hom_over(f.tgt, b, h.tgt).into_iter().filter(|g| self.compose(g, f) == *h).collect()
    }

    /// A copy with the given morphisms deleted from every hom-set.
    pub fn without(&self, removed: impl IntoIterator<Item = TotalMor>) -> Self {
        let mut out = self.clone();
        out.removed.extend(removed);
        out
    }

    pub fn render_object(&self, x: usize) -> String {
        let names: Vec<&str> = self.objects[x].iter().map(|&o| self.m.base.objects[o].as_str()).collect();
        format!("({})", names.join(","))
    }

    pub fn render(&self, f: &TotalMor) -> String {
        let names: Vec<&str> = f.comps.iter().map(|&c| self.m.base.name(c)).collect();
        format!("{}: {} → {} [{}]", self.bases[f.base], self.render_object(f.src), self.render_object(f.tgt), names.join(", "))
    }

    pub fn num_morphisms(&self) -> usize {
        (0..self.objects.len())
            .map(|x| self.bases_from[self.len_of(x)].iter().map(|&a| self.morphisms_from(x, a).len()).sum::<usize>())
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocartesianVerdict {
    pub holds: bool,
    pub counterexample: Option<String>,
}

/// Checks that `g ↦ g ∘ f` is a bijection from morphisms over `b` out of
/// `f.tgt` onto morphisms over `p(f);b` out of `f.src`, for every base arrow
/// `b` and every target.
pub fn is_cocartesian(p: &OpfibTotal, f: &TotalMor) -> CocartesianVerdict {
    let k = p.bases[f.base].tgt_len();
    for &b in p.bases_from(k) {
        let c = p.then(f.base, b);
        let mut hit: HashMap<TotalMor, TotalMor> = HashMap::new();
        for g in p.morphisms_from(f.tgt, b) {
            let h = p.compose(&g, f);
            if let Some(g0) = hit.insert(h.clone(), g.clone()) {
                return CocartesianVerdict {
                    holds: false,
                    counterexample: Some(format!(
                        "{} and {} both compose to {}",
                        p.render(&g0),
                        p.render(&g),
                        p.render(&h)
                    )),
                };
            }
        }
        if let Some(h) = p.morphisms_from(f.src, c).into_iter().find(|h| !hit.contains_key(h)) {
            return CocartesianVerdict {
                holds: false,
                counterexample: Some(format!("{} does not factor over {}", p.render(&h), p.bases[b])),
            };
        }
    }
    CocartesianVerdict { holds: true, counterexample: None }
}

/// The chosen coCartesian lift of `a` at `x`: the identity lift when it is
/// present and coCartesian, otherwise the first coCartesian morphism.
pub fn canonical_lift(p: &OpfibTotal, x: usize, a: usize) -> Option<TotalMor> {
    let id = p.identity_lift(x, a);
    if !p.removed.contains(&id) && is_cocartesian(p, &id).holds {
        return Some(id);
    }
    p.morphisms_from(x, a).into_iter().find(|f| is_cocartesian(p, f).holds)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpfibVerdict {
    pub holds: bool,
    pub lifts_checked: usize,
    pub failure: Option<String>,
}

/// Every object admits a coCartesian lift of every base arrow out of it.
pub fn check_opfibration(p: &OpfibTotal) -> OpfibVerdict {
    let mut checked = 0;
    for x in 0..p.objects.len() {
        for &a in p.bases_from(p.len_of(x)) {
            checked += 1;
            if canonical_lift(p, x, a).is_none() {
                return OpfibVerdict {
                    holds: false,
                    lifts_checked: checked,
                    failure: Some(format!("no coCartesian lift of {} at {}", p.bases[a], p.render_object(x))),
                };
            }
        }
    }
    OpfibVerdict { holds: true, lifts_checked: checked, failure: None }
}

/// `a_!` between fibers, built from canonical lifts.
#[derive(Debug, Clone)]
pub struct FiberFunctor {
    pub base: usize,
    pub lifts: BTreeMap<usize, TotalMor>,
    pub on_objects: BTreeMap<usize, usize>,
    pub on_morphisms: HashMap<TotalMor, TotalMor>,
}

impl FiberFunctor {
    pub fn apply(&self, u: &TotalMor) -> &TotalMor {
        &self.on_morphisms[u]
    }
}

fn unique(mut v: Vec<TotalMor>, what: impl FnOnce() -> String) -> Result<TotalMor> {
    match v.len() {
        1 => Ok(v.pop().unwrap()),
        n => Err(Error::Precondition(format!("{} ({n} factorizations)", what()))),
    }
}

pub fn pushforward(p: &OpfibTotal, a: usize) -> Result<FiberFunctor> {
    let (n, k) = (p.bases[a].src_len(), p.bases[a].tgt_len());
    let mut lifts = BTreeMap::new();
    for x in p.fiber(n) {
        let l = canonical_lift(p, x, a).ok_or_else(|| {
            Error::Precondition(format!("no coCartesian lift of {} at {}", p.bases[a], p.render_object(x)))
        })?;
        lifts.insert(x, l);
    }
    let on_objects = lifts.iter().map(|(&x, l)| (x, l.tgt)).collect();
    let id_k = p.identity_base(k);
    let mut on_morphisms = HashMap::new();
    for u in p.fiber_morphisms(n) {
        let h = p.compose(&lifts[&u.tgt], &u);
        let w = unique(p.factor(&lifts[&u.src], &h, id_k), || format!("pushforward of {}", p.render(&u)))?;
        on_morphisms.insert(u, w);
    }
    Ok(FiberFunctor { base: a, lifts, on_objects, on_morphisms })
}

/// Components indexed by objects of the source fiber.
#[derive(Debug, Clone)]
pub struct NaturalIso {
    pub components: BTreeMap<usize, TotalMor>,
}

/// The unique fiber morphism `(a;b)_!(x) -> b_!(a_!(x))` under the lifts.
fn connecting(p: &OpfibTotal, fa: &FiberFunctor, fb: &FiberFunctor, fab: &FiberFunctor, x: usize) -> Result<TotalMor> {
    let via = p.compose(&fb.lifts[&fa.on_objects[&x]], &fa.lifts[&x]);
    let k = p.bases[fab.base].tgt_len();
    unique(p.factor(&fab.lifts[&x], &via, p.identity_base(k)), || {
        format!("connecting map at {}", p.render_object(x))
    })
}

/// `(a;b)_! ≅ b_! ∘ a_!`, checked invertible and natural.
pub fn compose_pushforwards(p: &OpfibTotal, a: usize, b: usize) -> Result<NaturalIso> {
    let (fa, fb, fab) = (pushforward(p, a)?, pushforward(p, b)?, pushforward(p, p.then(a, b))?);
    let mut components = BTreeMap::new();
    for &x in fa.lifts.keys() {
        let phi = connecting(p, &fa, &fb, &fab, x)?;
        if !p.is_fiber_iso(&phi) {
            return Err(Error::Invalid(format!("connecting map {} is not invertible", p.render(&phi))));
        }
        components.insert(x, phi);
    }
    for u in p.fiber_morphisms(p.bases[a].src_len()) {
        let lhs = p.compose(fb.apply(fa.apply(&u)), &components[&u.src]);
        let rhs = p.compose(&components[&u.tgt], fab.apply(&u));
        if lhs != rhs {
            return Err(Error::Invalid(format!("connecting maps are not natural at {}", p.render(&u))));
        }
    }
    Ok(NaturalIso { components })
}

/// The arrows projecting onto one slot: `ι_{i-1,i}` over `Δᵒᵖ`, `α^{j,⟨n⟩}`
/// over `Fin`.
pub fn slot_projection(kind: BaseKind, j: usize, n: usize) -> BaseMap {
    match kind {
        BaseKind::DeltaOp => BaseMap::Delta { n, values: vec![j - 1, j] },
        BaseKind::Fin => BaseMap::Fin { k: 1, values: (1..=n).map(|i| (i == j).then_some(1)).collect() },
    }
}

/// Checks that the slot projections identify the fiber over `n` with the
/// `n`-th power of the fiber over `1`, on objects and morphisms.
pub fn fiber_power_check(p: &OpfibTotal, n: usize) -> Result<()> {
    let projections: Vec<FiberFunctor> = (1..=n)
        .map(|j| pushforward(p, p.base(&slot_projection(p.kind, j, n)).expect("within truncation")))
        .collect::<Result<_>>()?;
    let ones = p.fiber(1).len();
    let mut seen = HashSet::new();
    for x in p.fiber(n) {
        let t: Vec<usize> = projections.iter().map(|f| f.on_objects[&x]).collect();
        if !seen.insert(t) {
            return Err(Error::Precondition(format!("fiber over {n} is not a power: objects collide")));
        }
    }
    if seen.len() != ones.pow(n as u32) {
        return Err(Error::Precondition(format!("fiber over {n} is not a power: objects missing")));
    }
    let mut seen = HashSet::new();
    for u in p.fiber_morphisms(n) {
        let t: Vec<TotalMor> = projections.iter().map(|f| f.apply(&u).clone()).collect();
        if !seen.insert(t) {
            return Err(Error::Precondition(format!("fiber over {n} is not a power: morphisms collide")));
        }
    }
    if seen.len() != p.fiber_morphisms(1).len().pow(n as u32) {
        return Err(Error::Precondition(format!("fiber over {n} is not a power: morphisms missing")));
    }
    Ok(())
}

/// Base arrows read off by extraction: tensor, unit, the two groupings of
/// three slots, and the two unit insertions.
pub(super) struct ExtractionArrows {
    pub tensor: BaseMap,
    pub unit: BaseMap,
    pub group_left: BaseMap,
    pub group_right: BaseMap,
    pub insert_left: BaseMap,
    pub insert_right: BaseMap,
}

pub(super) fn extraction_arrows(kind: BaseKind) -> ExtractionArrows {
    let d = |n, v: &[usize]| BaseMap::Delta { n, values: v.to_vec() };
    let f = |k, v: &[usize]| BaseMap::Fin { k, values: v.iter().map(|&i| Some(i)).collect() };
    match kind {
        BaseKind::DeltaOp => ExtractionArrows {
            tensor: d(2, &[0, 2]),
            unit: d(0, &[0, 0]),
            group_left: d(3, &[0, 2, 3]),
            group_right: d(3, &[0, 1, 3]),
            insert_left: d(1, &[0, 0, 1]),
            insert_right: d(1, &[0, 1, 1]),
        },
        BaseKind::Fin => ExtractionArrows {
            tensor: f(1, &[1, 1]),
            unit: f(1, &[]),
            group_left: f(2, &[1, 1, 2]),
            group_right: f(2, &[1, 2, 2]),
            insert_left: f(2, &[2]),
            insert_right: f(2, &[1]),
        },
    }
}

/// The monoidal structure on the fiber over `1` read off from canonical
/// lifts; pentagon and triangle are re-verified on the result.
pub fn extract_tensor(p: &OpfibTotal) -> Result<MonoidalPresentation> {
    extract(p, false)
}

/// As [`extract_tensor`], plus the braiding from the twist over `Fin`.
pub fn extract_symmetric(p: &OpfibTotal) -> Result<MonoidalPresentation> {
    if p.kind != BaseKind::Fin {
        return Err(Error::Precondition("a braiding can only be extracted over Fin".into()));
    }
    extract(p, true)
}

fn extract(p: &OpfibTotal, symmetric: bool) -> Result<MonoidalPresentation> {
    if p.nmax < 3 {
        return Err(Error::Precondition("extraction needs the base up to length 3".into()));
    }
    for n in 0..=3 {
        fiber_power_check(p, n)?;
    }
    let arrows = extraction_arrows(p.kind);
    let idx = |b: &BaseMap| p.base(b).expect("within truncation");
    let ones = p.fiber(1);
    let obj_of: HashMap<usize, usize> = ones.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let letter = |i: usize| p.objects[ones[i]][0];
    let mors = p.fiber_morphisms(1);
    let mor_of: HashMap<TotalMor, usize> = mors.iter().cloned().enumerate().map(|(i, u)| (u, i)).collect();
    let names = ones.iter().map(|&x| p.m.base.objects[p.objects[x][0]].clone()).collect();
    let morphisms = mors
        .iter()
        .map(|u| Morphism { name: p.m.base.name(u.comps[0]).to_string(), src: obj_of[&u.src], tgt: obj_of[&u.tgt] })
        .collect();
    let identities = ones.iter().map(|&x| mor_of[&p.identity(x)]).collect();
    let base = FiniteCategory::new(names, morphisms, identities, |g, f| Some(mor_of[&p.compose(&mors[g], &mors[f])]))?;
    let n = ones.len();

    let tensor = pushforward(p, idx(&arrows.tensor))?;
    let tensor_obj: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| obj_of[&tensor.on_objects[&p.object(&[letter(a), letter(b)]).unwrap()]]).collect())
        .collect();
    let tensor_mor: Vec<Vec<usize>> = mors
        .iter()
        .map(|f| mors.iter().map(|g| mor_of[tensor.apply(&p.fiber_morphism(&[f.comps[0], g.comps[0]]))]).collect())
        .collect();
    let unit_push = pushforward(p, idx(&arrows.unit))?;
    let unit = obj_of[&unit_push.on_objects[&p.object(&[]).unwrap()]];

    let inv = |f: usize| {
        base.inverse(f).ok_or_else(|| Error::Invalid(format!("extracted map {} is not invertible", base.name(f))))
    };
    let left = compose_pushforwards(p, idx(&arrows.group_left), idx(&arrows.tensor))?;
    let right = compose_pushforwards(p, idx(&arrows.group_right), idx(&arrows.tensor))?;
    let mut associator = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let x = p.object(&[letter(a), letter(b), letter(c)]).unwrap();
                let to_left = inv(mor_of[&left.components[&x]])?;
                let al = base.compose(mor_of[&right.components[&x]], to_left).expect("shared source");
                associator.push(al);
            }
        }
    }
    let lam = compose_pushforwards(p, idx(&arrows.insert_left), idx(&arrows.tensor))?;
    let rho = compose_pushforwards(p, idx(&arrows.insert_right), idx(&arrows.tensor))?;
    let left_unitor = ones.iter().map(|x| inv(mor_of[&lam.components[x]])).collect::<Result<_>>()?;
    let right_unitor = ones.iter().map(|x| inv(mor_of[&rho.components[x]])).collect::<Result<_>>()?;

    let braiding = if symmetric {
        let twist = BaseMap::Fin { k: 2, values: vec![Some(2), Some(1)] };
        let sigma = compose_pushforwards(p, idx(&twist), idx(&arrows.tensor))?;
        Some(
            (0..n)
                .map(|a| (0..n).map(|b| mor_of[&sigma.components[&p.object(&[letter(a), letter(b)]).unwrap()]]).collect())
                .collect(),
        )
    } else {
        None
    };
    let out = MonoidalPresentation { base, tensor_obj, tensor_mor, unit, associator, left_unitor, right_unitor, braiding };
    out.check_shapes()?;
    if let Some(v) = validate_monoidal(&out).violations.first() {
        return Err(Error::Invalid(format!("extracted structure fails: {v}")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoidal::{monoidal_isomorphism, samples};

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn base_arrow_counts() {
        let delta = BaseMap::all(BaseKind::DeltaOp, 3);
        let fin = BaseMap::all(BaseKind::Fin, 3);
        for n in 0..=3 {
            for k in 0..=3 {
                let d = delta.iter().filter(|b| b.src_len() == n && b.tgt_len() == k).count();
                assert_eq!(d, binom(n + k + 1, k + 1));
                let f = fin.iter().filter(|b| b.src_len() == n && b.tgt_len() == k).count();
                assert_eq!(f, (k + 1).pow(n as u32));
            }
        }
        for all in [delta, fin] {
            for a in &all {
                let id = BaseMap::identity(a.kind(), a.src_len());
                assert_eq!(id.then(a), *a);
                assert_eq!(a.then(&BaseMap::identity(a.kind(), a.tgt_len())), *a);
            }
        }
    }

    #[test]
    fn convexity() {
        assert!(BaseMap::delta(2, vec![0, 1]).unwrap().is_convex());
        assert!(!BaseMap::delta(2, vec![0, 2]).unwrap().is_convex());
        assert!(BaseMap::identity(BaseKind::DeltaOp, 3).is_convex());
        assert!(BaseMap::delta(2, vec![0, 3]).is_err());
    }

    #[test]
    fn fibers() {
        let p = build_opfib_delta(&samples::trivial(), 3).unwrap();
        assert!((0..=3).all(|n| p.fiber(n).len() == 1));
        let m = samples::signed(true);
        let p = build_opfib_delta(&m, 3).unwrap();
        for n in 0..=3 {
            fiber_power_check(&p, n).unwrap();
            assert_eq!(p.fiber(n).len(), 2usize.pow(n as u32));
            assert_eq!(p.fiber_morphisms(n).len(), 4usize.pow(n as u32));
        }
    }

    #[test]
    fn discrete_tensor_arrows() {
        let p = build_opfib_delta(&samples::discrete_cyclic(2), 2).unwrap();
        let d1 = p.base(&BaseMap::delta(2, vec![0, 2]).unwrap()).unwrap();
        for g1 in 0..2 {
            for g2 in 0..2 {
                let x = p.object(&[g1, g2]).unwrap();
                let targets: Vec<usize> = p.morphisms_from(x, d1).iter().map(|f| f.tgt).collect();
                assert_eq!(targets, vec![p.object(&[(g1 + g2) % 2]).unwrap()]);
            }
        }
    }

    #[test]
    fn cocartesian_lifts() {
        for m in [samples::trivial(), samples::signed(true), samples::max_poset()] {
            let p = build_opfib_delta(&m, 2).unwrap();
            let v = check_opfibration(&p);
            assert!(v.holds, "{:?}", v.failure);
            for x in 0..p.objects.len() {
                assert!(is_cocartesian(&p, &p.identity(x)).holds);
            }
        }
        let p = build_opfib_delta(&samples::max_poset(), 2).unwrap();
        let up = p.fiber_morphism(&[p.m.base.hom(0, 1)[0]]);
        let v = is_cocartesian(&p, &up);
        assert!(!v.holds && v.counterexample.is_some());
    }

    #[test]
    fn removing_lifts_breaks_opfibration() {
        let p = build_opfib_delta(&samples::trivial(), 2).unwrap();
        let d1 = p.base(&BaseMap::delta(2, vec![0, 2]).unwrap()).unwrap();
        let x = p.object(&[0, 0]).unwrap();
        let q = p.without(p.morphisms_from(x, d1));
        let v = check_opfibration(&q);
        assert!(!v.holds && v.failure.is_some());
    }

    #[test]
    fn pushforwards() {
        let m = samples::signed(true);
        let p = build_opfib_delta(&m, 3).unwrap();
        let id1 = p.identity_base(1);
        let f = pushforward(&p, id1).unwrap();
        assert!(f.lifts.iter().all(|(&x, l)| *l == p.identity(x)));
        let d1 = p.base(&BaseMap::delta(2, vec![0, 2]).unwrap()).unwrap();
        let t = pushforward(&p, d1).unwrap();
        for u in p.fiber_morphisms(2) {
            let w = t.apply(&u);
            assert_eq!(w.comps, vec![m.tensor_mor[u.comps[0]][u.comps[1]]]);
        }
        let left = p.base(&BaseMap::delta(3, vec![0, 2, 3]).unwrap()).unwrap();
        let right = p.base(&BaseMap::delta(3, vec![0, 1, 3]).unwrap()).unwrap();
        let l = compose_pushforwards(&p, left, d1).unwrap();
        let r = compose_pushforwards(&p, right, d1).unwrap();
        for (x, phi) in &l.components {
            let s = &p.objects[*x];
            assert_eq!(phi.comps, vec![m.base.id(m.tensor_obj[m.tensor_obj[s[0]][s[1]]][s[2]])]);
            assert_eq!(r.components[x].comps, vec![m.assoc(s[0], s[1], s[2])]);
        }
    }

    #[test]
    fn extraction_round_trips() {
        let t = samples::trivial();
        assert_eq!(extract_tensor(&build_opfib_delta(&t, 3).unwrap()).unwrap(), t.forget_braiding());
        for m in [samples::discrete_cyclic(2), samples::signed(true), samples::max_poset()] {
            let e = extract_tensor(&build_opfib_delta(&m, 3).unwrap()).unwrap();
            assert!(monoidal_isomorphism(&e, &m.forget_braiding()).is_some());
        }
    }

    #[test]
    fn composition_is_associative_on_trivial() {
        let p = build_opfib_delta(&samples::trivial(), 3).unwrap();
        for f_src in 0..p.objects.len() {
            for &a in p.bases_from(p.len_of(f_src)) {
                for f in p.morphisms_from(f_src, a) {
                    for &b in p.bases_from(p.len_of(f.tgt)) {
                        for g in p.morphisms_from(f.tgt, b) {
                            let gf = p.compose(&g, &f);
                            for &c in p.bases_from(p.len_of(g.tgt)) {
                                for h in p.morphisms_from(g.tgt, c) {
                                    assert_eq!(p.compose(&h, &gf), p.compose(&p.compose(&h, &g), &f));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}
