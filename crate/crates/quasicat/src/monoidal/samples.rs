//! Small monoidal presentations used by examples and tests.

use super::MonoidalPresentation;
use crate::category::{FiniteCategory, Morphism};

/// Fills every table from closures on indices.
pub fn from_fns(
    base: FiniteCategory,
    tensor_obj: impl Fn(usize, usize) -> usize,
    tensor_mor: impl Fn(usize, usize) -> usize,
    unit: usize,
    associator: impl Fn(usize, usize, usize) -> usize,
    left_unitor: impl Fn(usize) -> usize,
    right_unitor: impl Fn(usize) -> usize,
    braiding: Option<&dyn Fn(usize, usize) -> usize>,
) -> MonoidalPresentation {
    let n = base.num_objects();
    let nm = base.num_morphisms();
    let mut assoc = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                assoc.push(associator(a, b, c));
            }
        }
    }
    MonoidalPresentation {
        tensor_obj: (0..n).map(|a| (0..n).map(|b| tensor_obj(a, b)).collect()).collect(),
        tensor_mor: (0..nm).map(|f| (0..nm).map(|g| tensor_mor(f, g)).collect()).collect(),
        unit,
        associator: assoc,
        left_unitor: (0..n).map(&left_unitor).collect(),
        right_unitor: (0..n).map(&right_unitor).collect(),
        braiding: braiding.map(|s| (0..n).map(|a| (0..n).map(|b| s(a, b)).collect()).collect()),
        base,
    }
}

/// One object, one morphism.
pub fn trivial() -> MonoidalPresentation {
    let base = FiniteCategory::discrete(&["I"]);
    from_fns(base, |_, _| 0, |_, _| 0, 0, |_, _, _| 0, |_| 0, |_| 0, Some(&|_, _| 0))
}

/// The cyclic group `Z/n` as a discrete symmetric monoidal category.
pub fn discrete_cyclic(n: usize) -> MonoidalPresentation {
    let names: Vec<String> = (0..n).map(|k| format!("g{k}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let base = FiniteCategory::discrete(&refs);
    // In a discrete category the morphism index equals the object index.
    from_fns(base, |a, b| (a + b) % n, |f, g| (f + g) % n, 0, |a, b, c| (a + b + c) % n, |a| a, |a| a, Some(&|a, b| (a + b) % n))
}

/// Objects `Z/2`, each with automorphisms `±`. Tensor adds objects and
/// multiplies signs. With `twisted` the associator is `(-1)^{abc}`.
pub fn signed(twisted: bool) -> MonoidalPresentation {
    signed_with(twisted, None)
}

/// Untwisted signed category with the Koszul braiding `(-1)^{ab}`.
pub fn super_signed() -> MonoidalPresentation {
    signed_with(false, Some(&|a, b| a * b % 2 == 1))
}

/// Untwisted signed category with the trivial braiding.
pub fn signed_symmetric() -> MonoidalPresentation {
    signed_with(false, Some(&|_, _| false))
}

fn signed_with(twisted: bool, braid_sign: Option<&dyn Fn(usize, usize) -> bool>) -> MonoidalPresentation {
    // Morphism 2x + s is the sign (-1)^s on object x.
    let mor = |x: usize, neg: bool| 2 * x + usize::from(neg);
    let objects = vec!["0".to_string(), "1".to_string()];
    let morphisms = (0..4)
        .map(|k| Morphism { name: format!("{}{}", if k % 2 == 1 { "-" } else { "+" }, k / 2), src: k / 2, tgt: k / 2 })
        .collect();
    let base = FiniteCategory::new(objects, morphisms, vec![0, 2], |g, f| Some(mor(g / 2, (g % 2) != (f % 2))))
        .expect("sign table is well typed");
    let braid = braid_sign.map(|s| move |a: usize, b: usize| mor((a + b) % 2, s(a, b)));
    let braid_ref: Option<&dyn Fn(usize, usize) -> usize> = braid.as_ref().map(|b| b as &dyn Fn(usize, usize) -> usize);
    from_fns(
        base,
        |a, b| (a + b) % 2,
        |f, g| mor((f / 2 + g / 2) % 2, (f % 2) != (g % 2)),
        0,
        |a, b, c| mor((a + b + c) % 2, twisted && a * b * c == 1),
        |a| mor(a, false),
        |a| mor(a, false),
        braid_ref,
    )
}

/// The poset `0 < 1` with `⊗ = max` and unit `0`; the arrow `0≤1` is not invertible.
pub fn max_poset() -> MonoidalPresentation {
    let base = FiniteCategory::ordinal(1);
    let b2 = base.clone();
    let arrow = |a: usize, b: usize| b2.hom(a, b)[0];
    let ids = base.identities.clone();
    from_fns(
        base,
        |a, b| a.max(b),
        |f, g| arrow(b2.src(f).max(b2.src(g)), b2.tgt(f).max(b2.tgt(g))),
        0,
        |a, b, c| ids[a.max(b).max(c)],
        |a| b2.id(a),
        |a| b2.id(a),
        Some(&|a, b| ids[a.max(b)]),
    )
}

/// Objects `I` and `A` with `A⊗A = A`. Besides `id_I` there is one arrow
/// `e: I → A` and `End(A) = {1, -, z}` with `z` absorbing; on `End(A)` the
/// tensor keeps the left factor, `e` tensored with anything in `End(A)` is
/// `z`, and the associator at `(A,A,A)` is `-`.
pub fn left_projection() -> MonoidalPresentation {
    // 0 id_I, 1 e, 2 1_A, 3 -, 4 z
    let morphisms = [("id_I", 0, 0), ("e", 0, 1), ("1_A", 1, 1), ("-", 1, 1), ("z", 1, 1)]
        .iter()
        .map(|&(n, s, t)| Morphism { name: n.into(), src: s, tgt: t })
        .collect();
    let endo = |g: usize, f: usize| match (g, f) {
        (4, _) | (_, 4) => 4,
        (2, x) | (x, 2) => x,
        _ => 2,
    };
    let compose = |g: usize, f: usize| match (g, f) {
        (0, 0) => Some(0),
        (1, 0) => Some(1),
        (_, 1) => Some(1),
        (g, f) if g >= 2 && f >= 2 => Some(endo(g, f)),
        _ => None,
    };
    let base = FiniteCategory::new(vec!["I".into(), "A".into()], morphisms, vec![0, 2], compose)
        .expect("table is well typed");
    let tensor_mor = |f: usize, g: usize| match (f, g) {
        (0, x) | (x, 0) => x,
        (1, 1) => 1,
        (1, _) | (_, 1) | (_, 4) => 4,
        (f, _) => f,
    };
    let ids = [0, 2];
    from_fns(
        base,
        |a, b| a.max(b),
        tensor_mor,
        0,
        |a, b, c| if (a, b, c) == (1, 1, 1) { 3 } else { ids[a.max(b).max(c)] },
        |a| ids[a],
        |a| ids[a],
        None,
    )
}

/// Every sample paired with a short name.
pub fn corpus() -> Vec<(&'static str, MonoidalPresentation)> {
    vec![
        ("trivial", trivial()),
        ("discrete Z/2", discrete_cyclic(2)),
        ("discrete Z/3", discrete_cyclic(3)),
        ("signed", signed(false)),
        ("signed twisted", signed(true)),
        ("super signed", super_signed()),
        ("max poset", max_poset()),
        ("left projection", left_projection()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoidal::validate_monoidal;

    #[test]
    fn corpus_is_valid() {
        for (name, m) in corpus() {
            m.check_shapes().unwrap();
            let r = validate_monoidal(&m);
            assert!(r.is_clean(), "{name}: {:?}", r.violations.first());
        }
    }

    #[test]
    fn corrupted_associator_breaks_pentagon() {
        let m = signed(true);
        let bad = m.with_associator(0, 1, 1, 1);
        let r = validate_monoidal(&bad);
        let v = r.first("pentagon").expect("pentagon violation");
        assert_eq!(v.witness.len(), 4);
        assert!(r.first("triangle").is_none());
    }
}
