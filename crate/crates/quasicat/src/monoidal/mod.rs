//! Monoidal categories: finite presentations, coherence, the total category
//! `M^⊗` of the associated opfibration, and algebra objects as sections.

mod algebra;
mod opfib;
pub mod samples;
mod words;

use std::fmt;
use std::hash::Hash;

pub use algebra::{
    check_algebra_section, is_initial_algebra, monoid_from_section, monoid_violations, multiply, section_from_data,
    section_from_monoid, AlgebraSection, MonoidReport,
    SectionReport,
};
pub use opfib::{
    build_opfib, build_opfib_delta, canonical_lift, check_opfibration, compose_pushforwards, extract_symmetric, extract_tensor,
    fiber_power_check, is_cocartesian, pushforward, slot_projection, BaseKind, BaseMap, CocartesianVerdict, FiberFunctor,
    NaturalIso, OpfibTotal, OpfibVerdict, TotalMor,
};
pub use words::{
    all_rewrite_composites, coherence_iso, left_normal, normalize, permutation_iso, sample_words, Word,
};

use crate::category::FiniteCategory;
use crate::error::{Error, Result};

/// Operations shared by finite presentations and lazily generated monoidal
/// categories.
pub trait MonoidalCategory {
    type Obj: Clone + Eq + Hash + fmt::Debug;
    type Mor: Clone + Eq + Hash + fmt::Debug;

    /// Objects quantified over by the law checks.
    fn objects(&self) -> Vec<Self::Obj>;
    fn hom(&self, x: &Self::Obj, y: &Self::Obj) -> Vec<Self::Mor>;
    fn src(&self, f: &Self::Mor) -> Self::Obj;
    fn tgt(&self, f: &Self::Mor) -> Self::Obj;
    fn id(&self, x: &Self::Obj) -> Self::Mor;
    /// `g ∘ f`; panics when not composable.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Self::Mor;
    fn inverse(&self, f: &Self::Mor) -> Option<Self::Mor>;
    fn unit(&self) -> Self::Obj;
    fn tensor_obj(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Obj;
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor;
    /// `α_{A,B,C}: (A⊗B)⊗C -> A⊗(B⊗C)`.
    fn associator(&self, a: &Self::Obj, b: &Self::Obj, c: &Self::Obj) -> Self::Mor;
    /// `λ_A: I⊗A -> A`.
    fn left_unitor(&self, a: &Self::Obj) -> Self::Mor;
    /// `ρ_A: A⊗I -> A`.
    fn right_unitor(&self, a: &Self::Obj) -> Self::Mor;
    /// `σ_{A,B}: A⊗B -> B⊗A` when braided.
    fn braiding(&self, a: &Self::Obj, b: &Self::Obj) -> Option<Self::Mor>;
    fn obj_name(&self, a: &Self::Obj) -> String;
    fn mor_name(&self, f: &Self::Mor) -> String;

    fn morphisms(&self) -> Vec<Self::Mor> {
        let obs = self.objects();
        obs.iter().flat_map(|x| obs.iter().flat_map(move |y| self.hom(x, y))).collect()
    }

    fn is_iso(&self, f: &Self::Mor) -> bool {
        self.inverse(f).is_some()
    }
}

/// A finite monoidal category given by total tables over a [`FiniteCategory`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidalPresentation {
    pub base: FiniteCategory,
    pub tensor_obj: Vec<Vec<usize>>,
    pub tensor_mor: Vec<Vec<usize>>,
    pub unit: usize,
    /// Indexed by `(a * n + b) * n + c` for `n` objects.
    pub associator: Vec<usize>,
    pub left_unitor: Vec<usize>,
    pub right_unitor: Vec<usize>,
    pub braiding: Option<Vec<Vec<usize>>>,
}

impl MonoidalPresentation {
    pub fn num_objects(&self) -> usize {
        self.base.num_objects()
    }

    pub fn assoc(&self, a: usize, b: usize, c: usize) -> usize {
        let n = self.num_objects();
        self.associator[(a * n + b) * n + c]
    }

    pub fn with_associator(&self, a: usize, b: usize, c: usize, m: usize) -> Self {
        let n = self.num_objects();
        let mut out = self.clone();
        out.associator[(a * n + b) * n + c] = m;
        out
    }

    pub fn forget_braiding(&self) -> Self {
        MonoidalPresentation { braiding: None, ..self.clone() }
    }

    pub fn is_symmetric(&self) -> bool {
        self.braiding.is_some()
    }

    /// Checks that every table has the right shape and entries in range.
    pub fn check_shapes(&self) -> Result<()> {
        let n = self.num_objects();
        let nm = self.base.num_morphisms();
        let bad = |what: &str| Err(Error::Invalid(format!("{what} table has the wrong shape or an out-of-range entry")));
        if self.tensor_obj.len() != n || self.tensor_obj.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return bad("tensor_obj");
        }
        if self.tensor_mor.len() != nm || self.tensor_mor.iter().any(|r| r.len() != nm || r.iter().any(|&x| x >= nm)) {
            return bad("tensor_mor");
        }
        if self.unit >= n {
            return bad("unit");
        }
        if self.associator.len() != n * n * n || self.associator.iter().any(|&x| x >= nm) {
            return bad("associator");
        }
        if self.left_unitor.len() != n || self.right_unitor.len() != n {
            return bad("unitor");
        }
        if self.left_unitor.iter().chain(&self.right_unitor).any(|&x| x >= nm) {
            return bad("unitor");
        }
        if let Some(b) = &self.braiding {
            if b.len() != n || b.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= nm)) {
                return bad("braiding");
            }
        }
        Ok(())
    }
}

impl MonoidalCategory for MonoidalPresentation {
    type Obj = usize;
    type Mor = usize;

    fn objects(&self) -> Vec<usize> {
        (0..self.num_objects()).collect()
    }
    fn hom(&self, x: &usize, y: &usize) -> Vec<usize> {
        self.base.hom(*x, *y)
    }
    fn src(&self, f: &usize) -> usize {
        self.base.src(*f)
    }
    fn tgt(&self, f: &usize) -> usize {
        self.base.tgt(*f)
    }
    fn id(&self, x: &usize) -> usize {
        self.base.id(*x)
    }
    fn compose(&self, g: &usize, f: &usize) -> usize {
        self.base
            .compose(*g, *f)
            .unwrap_or_else(|| panic!("{} ∘ {} is not composable", self.base.name(*g), self.base.name(*f)))
    }
    fn inverse(&self, f: &usize) -> Option<usize> {
        self.base.inverse(*f)
    }
    fn unit(&self) -> usize {
        self.unit
    }
    fn tensor_obj(&self, a: &usize, b: &usize) -> usize {
        self.tensor_obj[*a][*b]
    }
    fn tensor_mor(&self, f: &usize, g: &usize) -> usize {
        self.tensor_mor[*f][*g]
    }
    fn associator(&self, a: &usize, b: &usize, c: &usize) -> usize {
        self.assoc(*a, *b, *c)
    }
    fn left_unitor(&self, a: &usize) -> usize {
        self.left_unitor[*a]
    }
    fn right_unitor(&self, a: &usize) -> usize {
        self.right_unitor[*a]
    }
    fn braiding(&self, a: &usize, b: &usize) -> Option<usize> {
        self.braiding.as_ref().map(|t| t[*a][*b])
    }
    fn obj_name(&self, a: &usize) -> String {
        self.base.objects[*a].clone()
    }
    fn mor_name(&self, f: &usize) -> String {
        self.base.name(*f).to_string()
    }
    fn morphisms(&self) -> Vec<usize> {
        (0..self.base.num_morphisms()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub law: String,
    pub witness: Vec<String>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at ({})", self.law, self.witness.join(", "))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MonoidalReport {
    pub violations: Vec<Violation>,
}

impl MonoidalReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first(&self, law: &str) -> Option<&Violation> {
        self.violations.iter().find(|v| v.law == law)
    }
}

fn typed<M: MonoidalCategory>(m: &M, f: &M::Mor, s: &M::Obj, t: &M::Obj) -> bool {
    m.src(f) == *s && m.tgt(f) == *t
}

/// Every bifunctoriality, structure-iso, naturality, pentagon and triangle
/// violation, plus hexagon and symmetry when a braiding is present.
pub fn validate_monoidal<M: MonoidalCategory>(m: &M) -> MonoidalReport {
    let mut out = Vec::new();
    let obs = m.objects();
    let mors = m.morphisms();
    let on = |a: &M::Obj| m.obj_name(a);
    let mn = |f: &M::Mor| m.mor_name(f);
    let t = |a: &M::Obj, b: &M::Obj| m.tensor_obj(a, b);
    let i = m.unit();

    for a in &obs {
        for b in &obs {
            if m.tensor_mor(&m.id(a), &m.id(b)) != m.id(&t(a, b)) {
                push(&mut out, "identity tensor", vec![on(a), on(b)]);
            }
        }
    }
    for f in &mors {
        for g in &mors {
            let fg = m.tensor_mor(f, g);
            if !typed(m, &fg, &t(&m.src(f), &m.src(g)), &t(&m.tgt(f), &m.tgt(g))) {
                push(&mut out, "tensor typing", vec![mn(f), mn(g)]);
            }
        }
    }
    for f in &mors {
        for f2 in mors.iter().filter(|f2| m.src(f2) == m.tgt(f)) {
            for g in &mors {
                for g2 in mors.iter().filter(|g2| m.src(g2) == m.tgt(g)) {
                    let lhs = m.tensor_mor(&m.compose(f2, f), &m.compose(g2, g));
                    let rhs = m.compose(&m.tensor_mor(f2, g2), &m.tensor_mor(f, g));
                    if lhs != rhs {
                        push(&mut out, "interchange", vec![mn(f2), mn(f), mn(g2), mn(g)]);
                    }
                }
            }
        }
    }
    for a in &obs {
        for b in &obs {
            for c in &obs {
                let al = m.associator(a, b, c);
                if !typed(m, &al, &t(&t(a, b), c), &t(a, &t(b, c))) || !m.is_iso(&al) {
                    push(&mut out, "associator", vec![on(a), on(b), on(c)]);
                }
            }
        }
        let l = m.left_unitor(a);
        if !typed(m, &l, &t(&i, a), a) || !m.is_iso(&l) {
            push(&mut out, "left unitor", vec![on(a)]);
        }
        let r = m.right_unitor(a);
        if !typed(m, &r, &t(a, &i), a) || !m.is_iso(&r) {
            push(&mut out, "right unitor", vec![on(a)]);
        }
    }
    if !out.is_empty() {
        return MonoidalReport { violations: out };
    }
    for f in &mors {
        let (a, a2) = (m.src(f), m.tgt(f));
        let lhs = m.compose(&m.left_unitor(&a2), &m.tensor_mor(&m.id(&i), f));
        if lhs != m.compose(f, &m.left_unitor(&a)) {
            push(&mut out, "left unitor naturality", vec![mn(f)]);
        }
        let lhs = m.compose(&m.right_unitor(&a2), &m.tensor_mor(f, &m.id(&i)));
        if lhs != m.compose(f, &m.right_unitor(&a)) {
            push(&mut out, "right unitor naturality", vec![mn(f)]);
        }
        for g in &mors {
            for h in &mors {
                let (b, b2, c, c2) = (m.src(g), m.tgt(g), m.src(h), m.tgt(h));
                let lhs = m.compose(&m.associator(&a2, &b2, &c2), &m.tensor_mor(&m.tensor_mor(f, g), h));
                let rhs = m.compose(&m.tensor_mor(f, &m.tensor_mor(g, h)), &m.associator(&a, &b, &c));
                if lhs != rhs {
                    push(&mut out, "associator naturality", vec![mn(f), mn(g), mn(h)]);
                }
            }
        }
    }
    for a in &obs {
        for b in &obs {
            let lhs = m.compose(&m.tensor_mor(&m.id(a), &m.left_unitor(b)), &m.associator(a, &i, b));
            if lhs != m.tensor_mor(&m.right_unitor(a), &m.id(b)) {
                push(&mut out, "triangle", vec![on(a), on(b)]);
            }
            for c in &obs {
                for d in &obs {
                    let lhs = m.compose(&m.associator(a, b, &t(c, d)), &m.associator(&t(a, b), c, d));
                    let rhs = m.compose(
                        &m.tensor_mor(&m.id(a), &m.associator(b, c, d)),
                        &m.compose(&m.associator(a, &t(b, c), d), &m.tensor_mor(&m.associator(a, b, c), &m.id(d))),
                    );
                    if lhs != rhs {
                        push(&mut out, "pentagon", vec![on(a), on(b), on(c), on(d)]);
                    }
                }
            }
        }
    }
    if m.braiding(&i, &i).is_some() {
        out.extend(braiding_violations(m));
    }
    MonoidalReport { violations: out }
}

fn braiding_violations<M: MonoidalCategory>(m: &M) -> Vec<Violation> {
    let mut out = Vec::new();
    let obs = m.objects();
    let on = |a: &M::Obj| m.obj_name(a);
    let t = |a: &M::Obj, b: &M::Obj| m.tensor_obj(a, b);
    let s = |a: &M::Obj, b: &M::Obj| m.braiding(a, b).expect("braided");
    for a in &obs {
        for b in &obs {
            let sab = s(a, b);
            if !typed(m, &sab, &t(a, b), &t(b, a)) {
                push(&mut out, "braiding", vec![on(a), on(b)]);
                continue;
            }
            if m.compose(&s(b, a), &sab) != m.id(&t(a, b)) {
                push(&mut out, "symmetry", vec![on(a), on(b)]);
            }
            for c in &obs {
                let lhs = m.compose(&m.associator(b, c, a), &m.compose(&s(a, &t(b, c)), &m.associator(a, b, c)));
                let rhs = m.compose(
                    &m.tensor_mor(&m.id(b), &s(a, c)),
                    &m.compose(&m.associator(b, a, c), &m.tensor_mor(&sab, &m.id(c))),
                );
                if lhs != rhs {
                    push(&mut out, "hexagon", vec![on(a), on(b), on(c)]);
                }
            }
        }
    }
    if !out.is_empty() {
        return out;
    }
    let mors = m.morphisms();
    for f in &mors {
        for g in &mors {
            let lhs = m.compose(&s(&m.tgt(f), &m.tgt(g)), &m.tensor_mor(f, g));
            let rhs = m.compose(&m.tensor_mor(g, f), &s(&m.src(f), &m.src(g)));
            if lhs != rhs {
                push(&mut out, "braiding naturality", vec![m.mor_name(f), m.mor_name(g)]);
            }
        }
    }
    out
}

/// A strict monoidal isomorphism `M -> N`: a category isomorphism commuting
/// on the nose with tensor, unit and every structure component.
pub fn monoidal_isomorphism(m: &MonoidalPresentation, n: &MonoidalPresentation) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut found = None;
    crate::category::for_each_category_isomorphism(&m.base, &n.base, &mut |ob, mo| {
        if is_strict_monoidal(m, n, ob, mo) {
            found = Some((ob.to_vec(), mo.to_vec()));
            return false;
        }
        true
    });
    found
}

pub fn is_strict_monoidal(m: &MonoidalPresentation, n: &MonoidalPresentation, ob: &[usize], mo: &[usize]) -> bool {
    let k = m.num_objects();
    if ob[m.unit] != n.unit {
        return false;
    }
    for a in 0..k {
        for b in 0..k {
            if ob[m.tensor_obj[a][b]] != n.tensor_obj[ob[a]][ob[b]] {
                return false;
            }
            for c in 0..k {
                if mo[m.assoc(a, b, c)] != n.assoc(ob[a], ob[b], ob[c]) {
                    return false;
                }
            }
            match (&m.braiding, &n.braiding) {
                (Some(x), Some(y)) if mo[x[a][b]] != y[ob[a]][ob[b]] => return false,
                (Some(_), None) | (None, Some(_)) => return false,
                _ => {}
            }
        }
        if mo[m.left_unitor[a]] != n.left_unitor[ob[a]] || mo[m.right_unitor[a]] != n.right_unitor[ob[a]] {
            return false;
        }
    }
    let nm = m.base.num_morphisms();
    (0..nm).all(|f| (0..nm).all(|g| mo[m.tensor_mor[f][g]] == n.tensor_mor[mo[f]][mo[g]]))
}

fn push(out: &mut Vec<Violation>, law: &str, witness: Vec<String>) {
    out.push(Violation { law: law.to_string(), witness });
}
