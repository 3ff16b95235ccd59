//! The category `Fin`, the symmetric encoding over it, commutative algebra
//! sections, the comparison `φ: Δᵒᵖ -> Fin`, and dual pairs.

mod duality;
mod matrix;

pub use duality::{check_dual_pair, duals_canonical_iso, find_right_dual, swap_roles, DualPairWitness, DualVerdict};
pub use matrix::{matrix_category, to_presentation, Matrix, MatrixCategory};

use crate::error::{Error, Result};
use crate::monoidal::{
    build_opfib, build_opfib_delta, check_algebra_section, section_from_monoid, AlgebraSection, BaseKind, BaseMap,
    MonoidalPresentation, OpfibTotal, SectionReport,
};

/// `α^{j,⟨n⟩}: ⟨n⟩_* -> ⟨1⟩_*`, sending `j` to `1` and the rest to `*`.
pub fn alpha_jn(j: usize, n: usize) -> Result<BaseMap> {
    if j == 0 || j > n {
        return Err(Error::Invalid(format!("j = {j} is outside 1..={n}")));
    }
    BaseMap::fin(1, (1..=n).map(|i| (i == j).then_some(1)).collect())
}

/// The fold `m: ⟨2⟩_* -> ⟨1⟩_*`.
pub fn fold() -> BaseMap {
    BaseMap::Fin { k: 1, values: vec![Some(1), Some(1)] }
}

/// The twist `t: ⟨2⟩_* -> ⟨2⟩_*`.
pub fn twist() -> BaseMap {
    BaseMap::Fin { k: 2, values: vec![Some(2), Some(1)] }
}

/// `u: ⟨0⟩_* -> ⟨1⟩_*`.
pub fn unit_inclusion() -> BaseMap {
    BaseMap::Fin { k: 1, values: vec![] }
}

/// `ι_i: ⟨1⟩_* -> ⟨2⟩_*` hitting `i`.
pub fn iota(i: usize) -> BaseMap {
    BaseMap::Fin { k: 2, values: vec![Some(i)] }
}

/// `φ(α)` for monotone `α: [k] -> [n]`: `j` goes to the `i` with
/// `α(i-1) < j ≤ α(i)`, and to `*` if there is none.
pub fn phi(alpha: &BaseMap) -> BaseMap {
    match alpha {
        BaseMap::Delta { n, values } => {
            let k = values.len() - 1;
            let image = (1..=*n).map(|j| (1..=k).find(|&i| values[i - 1] < j && j <= values[i])).collect();
            BaseMap::Fin { k, values: image }
        }
        BaseMap::Fin { .. } => panic!("φ is defined on Δ arrows"),
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CollapsingReport {
    pub checked: usize,
    /// Arrows where collapsing and convex disagree.
    pub mismatches: Vec<String>,
}

/// `φ(α)` collapsing against `α` convex, for every monotone `[k] -> [n]`
/// with `n, k ≤ nmax`.
pub fn collapsing_convex_check(nmax: usize) -> CollapsingReport {
    let mut r = CollapsingReport::default();
    for a in BaseMap::all(BaseKind::DeltaOp, nmax) {
        r.checked += 1;
        if phi(&a).is_collapsing() != a.is_convex() {
            r.mismatches.push(a.to_string());
        }
    }
    r
}

/// Composable pairs on which `φ` fails to preserve composition.
pub fn phi_functoriality_check(nmax: usize) -> (usize, Vec<String>) {
    let all = BaseMap::all(BaseKind::DeltaOp, nmax);
    let mut checked = 0;
    let mut bad = Vec::new();
    for a in &all {
        for b in all.iter().filter(|b| b.src_len() == a.tgt_len()) {
            checked += 1;
            if phi(&a.then(b)) != phi(a).then(&phi(b)) {
                bad.push(format!("{a} then {b}"));
            }
        }
    }
    (checked, bad)
}

/// `M^⊗ -> Fin` truncated at `⟨nmax⟩_*`.
pub fn build_opfib_fin(m: &MonoidalPresentation, nmax: usize) -> Result<OpfibTotal> {
    build_opfib(m, BaseKind::Fin, nmax)
}

/// The section of a commutative monoid over `Fin`.
pub fn commutative_section_from_monoid(p: &OpfibTotal, a: usize, mu: usize, eta: usize) -> Result<AlgebraSection> {
    if p.kind != BaseKind::Fin {
        return Err(Error::Precondition("commutative sections live over Fin".into()));
    }
    section_from_monoid(p, a, mu, eta)
}

/// Section, functoriality and collapsing ↦ coCartesian.
pub fn check_commutative_algebra_section(p: &OpfibTotal, s: &AlgebraSection) -> SectionReport {
    check_algebra_section(p, s)
}

/// The pullback of `p` along `φ`. Over `φ(α)` the blocks are the intervals
/// of `α`, so it is built directly over `Δᵒᵖ` and then checked against `p`
/// hom-set by hom-set and on composites of identity lifts.
pub fn underlying_monoidal(p: &OpfibTotal) -> Result<OpfibTotal> {
    if p.kind != BaseKind::Fin {
        return Err(Error::Precondition("underlying_monoidal expects an encoding over Fin".into()));
    }
    let q = build_opfib_delta(&p.m.forget_braiding(), p.nmax)?;
    let image = |qa: usize| p.base(&phi(&q.bases[qa])).expect("φ stays within truncation");
    for x in 0..q.objects.len() {
        for &a in q.bases_from(q.len_of(x)) {
            let over_q: Vec<Vec<usize>> = q.morphisms_from(x, a).into_iter().map(|f| f.comps).collect();
            let over_p: Vec<Vec<usize>> = p.morphisms_from(x, image(a)).into_iter().map(|f| f.comps).collect();
            if over_q != over_p {
                return Err(Error::Invalid(format!("hom-sets over {} and its image differ", q.bases[a])));
            }
            for &b in q.bases_from(q.bases[a].tgt_len()) {
                let f = q.identity_lift(x, a);
                let g = q.identity_lift(f.tgt, b);
                let fp = p.identity_lift(x, image(a));
                let gp = p.identity_lift(fp.tgt, image(b));
                if q.compose(&g, &f).comps != p.compose(&gp, &fp).comps {
                    return Err(Error::Invalid(format!("composites over {} then {} differ", q.bases[a], q.bases[b])));
                }
            }
        }
    }
    Ok(q)
}

/// `U(S) = S ∘ φ` as a section of the underlying encoding `q`.
pub fn forget_commutative(p: &OpfibTotal, q: &OpfibTotal, s: &AlgebraSection) -> AlgebraSection {
    let morphisms = (0..q.bases.len())
        .map(|a| {
            let mut f = s.morphisms[&p.base(&phi(&q.bases[a])).expect("within truncation")].clone();
            f.base = a;
            (a, f)
        })
        .collect();
    AlgebraSection { kind: BaseKind::DeltaOp, nmax: s.nmax, objects: s.objects.clone(), morphisms }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoidal::{extract_symmetric, monoidal_isomorphism, samples, validate_monoidal};

    #[test]
    fn fin_arrows() {
        assert_eq!(alpha_jn(1, 1).unwrap(), BaseMap::identity(BaseKind::Fin, 1));
        assert!(alpha_jn(2, 3).unwrap().is_collapsing());
        assert!(!fold().is_collapsing());
        assert!(alpha_jn(0, 2).is_err() && alpha_jn(3, 2).is_err());
        assert_eq!(fold().then(&BaseMap::identity(BaseKind::Fin, 1)), fold());
        assert_eq!(twist().then(&twist()), BaseMap::identity(BaseKind::Fin, 2));
        assert_eq!(twist().then(&fold()), fold());
        assert_eq!(iota(1).then(&fold()), BaseMap::identity(BaseKind::Fin, 1));
    }

    #[test]
    fn phi_values() {
        for n in 1..=5 {
            for i in 1..=n {
                let iota = BaseMap::delta(n, vec![i - 1, i]).unwrap();
                assert_eq!(phi(&iota), alpha_jn(i, n).unwrap());
            }
            assert_eq!(phi(&BaseMap::identity(BaseKind::DeltaOp, n)), BaseMap::identity(BaseKind::Fin, n));
        }
        assert_eq!(phi(&BaseMap::delta(2, vec![0, 2]).unwrap()), fold());
        let gap = BaseMap::delta(2, vec![0, 2]).unwrap();
        assert!(!gap.is_convex() && !phi(&gap).is_collapsing());
    }

    #[test]
    fn collapsing_iff_convex() {
        let r = collapsing_convex_check(4);
        assert!(r.mismatches.is_empty(), "{:?}", r.mismatches);
        let (checked, bad) = phi_functoriality_check(3);
        assert!(checked > 0 && bad.is_empty(), "{bad:?}");
    }

    #[test]
    fn symmetric_round_trip() {
        for m in [samples::trivial(), samples::discrete_cyclic(2), samples::super_signed(), samples::max_poset()] {
            let p = build_opfib_fin(&m, 3).unwrap();
            let e = extract_symmetric(&p).unwrap();
            assert!(validate_monoidal(&e).is_clean());
            assert!(monoidal_isomorphism(&e, &m).is_some());
        }
    }

    #[test]
    fn twist_pushforward_swaps() {
        let m = samples::super_signed();
        let p = build_opfib_fin(&m, 2).unwrap();
        let t = crate::monoidal::pushforward(&p, p.base(&twist()).unwrap()).unwrap();
        for (&x, &y) in &t.on_objects {
            let (a, b) = (&p.objects[x], &p.objects[y]);
            assert_eq!((a[0], a[1]), (b[1], b[0]));
        }
        for u in p.fiber_morphisms(2) {
            assert_eq!(t.apply(&u).comps, vec![u.comps[1], u.comps[0]]);
        }
    }

    #[test]
    fn underlying_encoding_and_forgetting() {
        for m in [samples::trivial(), samples::super_signed(), samples::max_poset(), samples::discrete_cyclic(3)] {
            let p = build_opfib_fin(&m, 3).unwrap();
            let q = underlying_monoidal(&p).unwrap();
            for a in 0..m.num_objects() {
                for mu in m.base.hom(m.tensor_obj[a][a], a) {
                    for eta in m.base.hom(m.unit, a) {
                        let Ok(s) = commutative_section_from_monoid(&p, a, mu, eta) else { continue };
                        assert!(check_commutative_algebra_section(&p, &s).holds());
                        let u = forget_commutative(&p, &q, &s);
                        assert!(check_algebra_section(&q, &u).holds());
                        assert_eq!(u, section_from_monoid(&q, a, mu, eta).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn twisted_image_breaks_functoriality() {
        let m = samples::super_signed();
        let p = build_opfib_fin(&m, 2).unwrap();
        let mut s = commutative_section_from_monoid(&p, 0, 0, 0).unwrap();
        assert!(check_commutative_algebra_section(&p, &s).holds());
        let t = p.base(&twist()).unwrap();
        s.morphisms.get_mut(&t).unwrap().comps = vec![1, 0];
        let r = check_commutative_algebra_section(&p, &s);
        let fold_after = format!("{} then {}", twist(), fold());
        assert!(r.failures.iter().any(|f| f.contains(&fold_after)), "{:?}", r.failures);
    }
}
