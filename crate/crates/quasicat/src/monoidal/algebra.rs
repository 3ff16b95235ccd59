use std::collections::BTreeMap;

use super::opfib::{extraction_arrows, is_cocartesian, BaseKind, OpfibTotal, TotalMor};
use super::{MonoidalCategory, MonoidalPresentation};
use crate::error::{Error, Result};

/// A section of `M^⊗` over the truncated base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraSection {
    pub kind: BaseKind,
    pub nmax: usize,
    /// Total object over each length `0..=nmax`.
    pub objects: Vec<usize>,
    /// Image of every base arrow, keyed by base index.
    pub morphisms: BTreeMap<usize, TotalMor>,
}

/// `L(A^k) -> A`: `η` for `k = 0`, the identity for `k = 1`, then
/// `μ ∘ (μ_{k-1} ⊗ id)`.
pub fn multiply(m: &MonoidalPresentation, a: usize, mu: usize, eta: usize, k: usize) -> usize {
    match k {
        0 => eta,
        1 => m.base.id(a),
        _ => m.compose(&mu, &m.tensor_mor[multiply(m, a, mu, eta, k - 1)][m.base.id(a)]),
    }
}

/// Typing, associativity and unit laws of `(A, μ, η)`, plus commutativity
/// when asked.
pub fn monoid_violations(m: &MonoidalPresentation, a: usize, mu: usize, eta: usize, commutative: bool) -> Vec<String> {
    let c = &m.base;
    let aa = m.tensor_obj[a][a];
    if (c.src(mu), c.tgt(mu)) != (aa, a) || (c.src(eta), c.tgt(eta)) != (m.unit, a) {
        return vec![format!("typing: μ = {} and η = {} do not have the shapes A⊗A → A and I → A", c.name(mu), c.name(eta))];
    }
    let mut out = Vec::new();
    let id = c.id(a);
    let lhs = m.compose(&mu, &m.tensor_mor[mu][id]);
    let rhs = m.compose(&mu, &m.compose(&m.tensor_mor[id][mu], &m.assoc(a, a, a)));
    if lhs != rhs {
        out.push(format!("associativity: μ∘(μ⊗id) = {} but μ∘(id⊗μ)∘α = {}", c.name(lhs), c.name(rhs)));
    }
    let l = m.compose(&mu, &m.tensor_mor[eta][id]);
    if l != m.left_unitor[a] {
        out.push(format!("left unit: μ∘(η⊗id) = {} but λ = {}", c.name(l), c.name(m.left_unitor[a])));
    }
    let r = m.compose(&mu, &m.tensor_mor[id][eta]);
    if r != m.right_unitor[a] {
        out.push(format!("right unit: μ∘(id⊗η) = {} but ρ = {}", c.name(r), c.name(m.right_unitor[a])));
    }
    if commutative {
        match m.braiding(&a, &a) {
            Some(s) if m.compose(&mu, &s) != mu => {
                out.push(format!("commutativity: μ∘σ = {} but μ = {}", c.name(m.compose(&mu, &s)), c.name(mu)))
            }
            None => out.push("commutativity: no braiding".into()),
            _ => {}
        }
    }
    out
}

/// The section `[n] ↦ (A, …, A)` with each block sent to iterated `μ`,
/// built without checking any law.
pub fn section_from_data(p: &OpfibTotal, a: usize, mu: usize, eta: usize) -> AlgebraSection {
    let objects: Vec<usize> = (0..=p.nmax).map(|n| p.object(&vec![a; n]).expect("object in range")).collect();
    let morphisms = p
        .bases
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let comps = b.blocks().iter().map(|blk| multiply(&p.m, a, mu, eta, blk.len())).collect();
            (i, TotalMor { src: objects[b.src_len()], tgt: objects[b.tgt_len()], base: i, comps })
        })
        .collect();
    AlgebraSection { kind: p.kind, nmax: p.nmax, objects, morphisms }
}

/// The section of a monoid; over `Fin` the monoid must be commutative.
pub fn section_from_monoid(p: &OpfibTotal, a: usize, mu: usize, eta: usize) -> Result<AlgebraSection> {
    let bad = monoid_violations(&p.m, a, mu, eta, p.kind == BaseKind::Fin);
    if !bad.is_empty() {
        return Err(Error::Invalid(bad.join("; ")));
    }
    Ok(section_from_data(p, a, mu, eta))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidReport {
    pub object: usize,
    pub mu: usize,
    pub eta: usize,
    pub failures: Vec<String>,
}

impl MonoidReport {
    pub fn is_monoid(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Reads `A` from the fiber over `1`, `μ` from the tensor arrow and `η`
/// from the unit arrow, then checks the monoid laws.
pub fn monoid_from_section(p: &OpfibTotal, s: &AlgebraSection) -> Result<MonoidReport> {
    let arrows = extraction_arrows(p.kind);
    let read = |b| {
        let i = p.base(b).ok_or_else(|| Error::Precondition("section truncated below length 2".into()))?;
        s.morphisms.get(&i).map(|f| f.comps[0]).ok_or_else(|| Error::Invalid(format!("section misses {b}")))
    };
    let mu = read(&arrows.tensor)?;
    let eta = read(&arrows.unit)?;
    let object = p.objects[s.objects[1]][0];
    let failures = monoid_violations(&p.m, object, mu, eta, p.kind == BaseKind::Fin);
    Ok(MonoidReport { object, mu, eta, failures })
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SectionReport {
    pub failures: Vec<String>,
    pub pairs_checked: usize,
    pub inert_checked: usize,
}

impl SectionReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that `s` is a section, strictly functorial on every composable
/// pair of base arrows, and sends convex (over `Fin`: collapsing) arrows to
/// coCartesian morphisms.
pub fn check_algebra_section(p: &OpfibTotal, s: &AlgebraSection) -> SectionReport {
    let mut r = SectionReport::default();
    for (n, &x) in s.objects.iter().enumerate() {
        if p.len_of(x) != n {
            r.failures.push(format!("object over {n} is {}", p.render_object(x)));
        }
    }
    for (i, b) in p.bases.iter().enumerate() {
        match s.morphisms.get(&i) {
            None => r.failures.push(format!("no image for {b}")),
            Some(f) if f.base != i || f.src != s.objects[b.src_len()] || f.tgt != s.objects[b.tgt_len()] => {
                r.failures.push(format!("image of {b} lies over the wrong arrow or objects: {}", p.render(f)))
            }
            _ => {}
        }
    }
    if !r.failures.is_empty() {
        return r;
    }
    for (i, b) in p.bases.iter().enumerate() {
        let f = &s.morphisms[&i];
        if b.is_identity() && *f != p.identity(f.src) {
            r.failures.push(format!("identity {b} maps to {}", p.render(f)));
        }
        for &j in p.bases_from(b.tgt_len()) {
            r.pairs_checked += 1;
            let g = &s.morphisms[&j];
            let composite = &s.morphisms[&p.then(i, j)];
            if p.compose(g, f) != *composite {
                r.failures.push(format!("not functorial on {b} then {}", p.bases[j]));
            }
        }
        if b.is_inert() {
            r.inert_checked += 1;
            let v = is_cocartesian(p, f);
            if !v.holds {
                r.failures.push(format!(
                    "{b} maps to a non-coCartesian morphism: {}",
                    v.counterexample.unwrap_or_default()
                ));
            }
        }
    }
    r
}

/// The unit map `I -> A` is an isomorphism.
pub fn is_initial_algebra(p: &OpfibTotal, s: &AlgebraSection) -> Result<bool> {
    let report = monoid_from_section(p, s)?;
    Ok(p.m.base.is_iso(report.eta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoidal::{build_opfib_delta, samples};

    /// Every `(A, μ, η)` satisfying the monoid laws, by brute force.
    fn monoids(m: &MonoidalPresentation) -> Vec<(usize, usize, usize)> {
        let c = &m.base;
        let mut out = Vec::new();
        for a in 0..m.num_objects() {
            for mu in c.hom(m.tensor_obj[a][a], a) {
                for eta in c.hom(m.unit, a) {
                    if monoid_violations(m, a, mu, eta, false).is_empty() {
                        out.push((a, mu, eta));
                    }
                }
            }
        }
        out
    }

    #[test]
    fn unit_algebra_is_initial() {
        let m = samples::signed(true);
        let p = build_opfib_delta(&m, 3).unwrap();
        let s = section_from_monoid(&p, m.unit, m.left_unitor[m.unit], m.base.id(m.unit)).unwrap();
        let r = check_algebra_section(&p, &s);
        assert!(r.holds(), "{:?}", r.failures);
        assert!(r.inert_checked > 0 && r.pairs_checked > 0);
        assert!(is_initial_algebra(&p, &s).unwrap());
    }

    #[test]
    fn initial_exactly_for_unit_isomorphic() {
        for m in [samples::signed(false), samples::max_poset(), samples::discrete_cyclic(3)] {
            let p = build_opfib_delta(&m, 3).unwrap();
            for (a, mu, eta) in monoids(&m) {
                let s = section_from_monoid(&p, a, mu, eta).unwrap();
                assert!(check_algebra_section(&p, &s).holds());
                let iso_to_unit = m.base.hom(m.unit, a).iter().any(|&f| m.base.is_iso(f));
                assert_eq!(is_initial_algebra(&p, &s).unwrap(), iso_to_unit);
            }
        }
        // signed: the unit with μ = η = - is a monoid on I through a non-identity iso
        let m = samples::signed(false);
        assert!(monoids(&m).contains(&(0, 1, 1)));
    }

    #[test]
    fn round_trips() {
        for m in [samples::trivial(), samples::signed(true), samples::max_poset(), samples::discrete_cyclic(3)] {
            let p = build_opfib_delta(&m, 3).unwrap();
            for (a, mu, eta) in monoids(&m) {
                let s = section_from_monoid(&p, a, mu, eta).unwrap();
                let r = monoid_from_section(&p, &s).unwrap();
                assert!(r.is_monoid());
                assert_eq!((r.object, r.mu, r.eta), (a, mu, eta));
                assert_eq!(section_from_monoid(&p, r.object, r.mu, r.eta).unwrap(), s);
            }
        }
        assert_eq!(monoids(&samples::discrete_cyclic(3)), vec![(0, 0, 0)]);
    }

    #[test]
    fn non_associative_multiplication_is_reported() {
        let m = samples::left_projection();
        let p = build_opfib_delta(&m, 3).unwrap();
        let a = m.base.object_index("A").unwrap();
        let (one, minus, e) = (m.base.id(a), m.base.morphism_index("-").unwrap(), m.base.morphism_index("e").unwrap());
        assert!(monoid_violations(&m, a, minus, e, false).iter().all(|f| !f.starts_with("associativity")));
        let s = section_from_data(&p, a, one, e);
        let r = monoid_from_section(&p, &s).unwrap();
        assert!(r.failures.iter().any(|f| f.starts_with("associativity")));
        assert!(section_from_monoid(&p, a, one, e).is_err());
        assert!(!check_algebra_section(&p, &s).holds());
    }

    #[test]
    fn non_inert_arrows_need_not_be_cocartesian() {
        let m = samples::max_poset();
        let p = build_opfib_delta(&m, 2).unwrap();
        let s = section_from_monoid(&p, 1, m.base.id(1), m.base.hom(0, 1)[0]).unwrap();
        let unit_arrow = p.base(&crate::monoidal::BaseMap::delta(0, vec![0, 0]).unwrap()).unwrap();
        assert!(!is_cocartesian(&p, &s.morphisms[&unit_arrow]).holds);
        assert!(check_algebra_section(&p, &s).holds());
    }
}
