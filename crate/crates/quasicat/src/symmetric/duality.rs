use crate::error::{Error, Result};
use crate::monoidal::MonoidalCategory;

/// `η: I -> Y⊗X` and `ε: X⊗Y -> I`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DualPairWitness<O, F> {
    pub x: O,
    pub y: O,
    pub eta: F,
    pub eps: F,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DualVerdict {
    pub holds: bool,
    pub failures: Vec<String>,
}

type Witness<M> = DualPairWitness<<M as MonoidalCategory>::Obj, <M as MonoidalCategory>::Mor>;

fn inv<M: MonoidalCategory>(m: &M, f: &M::Mor) -> M::Mor {
    m.inverse(f).expect("structure maps are invertible")
}

fn chain<M: MonoidalCategory>(m: &M, maps: &[M::Mor]) -> M::Mor {
    let mut acc = maps[0].clone();
    for f in &maps[1..] {
        acc = m.compose(f, &acc);
    }
    acc
}

/// `X -> X⊗I -> X⊗(Y⊗X) -> (X⊗Y)⊗X -> I⊗X -> X`.
fn zigzag_x<M: MonoidalCategory>(m: &M, x: &M::Obj, y: &M::Obj, eta: &M::Mor, eps: &M::Mor) -> M::Mor {
    chain(
        m,
        &[
            inv(m, &m.right_unitor(x)),
            m.tensor_mor(&m.id(x), eta),
            inv(m, &m.associator(x, y, x)),
            m.tensor_mor(eps, &m.id(x)),
            m.left_unitor(x),
        ],
    )
}

/// `Y -> I⊗Y -> (Y⊗X)⊗Y -> Y⊗(X⊗Y) -> Y⊗I -> Y`, with `η` from one pair
/// and `ε` from another when `y` and `y2` differ.
fn zigzag_y<M: MonoidalCategory>(m: &M, x: &M::Obj, y: &M::Obj, y2: &M::Obj, eta: &M::Mor, eps: &M::Mor) -> M::Mor {
    chain(
        m,
        &[
            inv(m, &m.left_unitor(y)),
            m.tensor_mor(eta, &m.id(y)),
            m.associator(y2, x, y),
            m.tensor_mor(&m.id(y2), eps),
            m.right_unitor(y2),
        ],
    )
}

fn typing_errors<M: MonoidalCategory>(m: &M, w: &Witness<M>) -> Vec<String> {
    let mut out = Vec::new();
    let i = m.unit();
    if m.src(&w.eta) != i || m.tgt(&w.eta) != m.tensor_obj(&w.y, &w.x) {
        out.push(format!("η = {} is not I -> Y⊗X", m.mor_name(&w.eta)));
    }
    if m.src(&w.eps) != m.tensor_obj(&w.x, &w.y) || m.tgt(&w.eps) != i {
        out.push(format!("ε = {} is not X⊗Y -> I", m.mor_name(&w.eps)));
    }
    out
}

/// Both triangular identities.
pub fn check_dual_pair<M: MonoidalCategory>(m: &M, w: &Witness<M>) -> DualVerdict {
    let mut failures = typing_errors(m, w);
    if failures.is_empty() {
        let zx = zigzag_x(m, &w.x, &w.y, &w.eta, &w.eps);
        if zx != m.id(&w.x) {
            failures.push(format!("X zigzag is {} instead of the identity", m.mor_name(&zx)));
        }
        let zy = zigzag_y(m, &w.x, &w.y, &w.y, &w.eta, &w.eps);
        if zy != m.id(&w.y) {
            failures.push(format!("Y zigzag is {} instead of the identity", m.mor_name(&zy)));
        }
    }
    DualVerdict { holds: failures.is_empty(), failures }
}

/// Every `(Y, η, ε)` making `x` a left dual of `Y`, searched over the
/// object list. Fails when some `|hom(I, Y⊗X)|·|hom(X⊗Y, I)|` exceeds `cap`.
pub fn find_right_dual<M: MonoidalCategory>(m: &M, x: &M::Obj, cap: usize) -> Result<Vec<Witness<M>>> {
    let i = m.unit();
    let mut out = Vec::new();
    for y in m.objects() {
        let etas = m.hom(&i, &m.tensor_obj(&y, x));
        let epss = m.hom(&m.tensor_obj(x, &y), &i);
        let size = etas.len().saturating_mul(epss.len());
        if size > cap {
            return Err(Error::BudgetExceeded(format!(
                "{size} candidate pairs for Y = {} exceed {cap}; supply a witness",
                m.obj_name(&y)
            )));
        }
        for eta in &etas {
            for eps in &epss {
                let w = DualPairWitness { x: x.clone(), y: y.clone(), eta: eta.clone(), eps: eps.clone() };
                if check_dual_pair(m, &w).holds {
                    out.push(w);
                }
            }
        }
    }
    Ok(out)
}

/// The comparison `Y₁ -> Y₂` and its inverse for two duals of the same `X`,
/// checked to be mutually inverse and to carry `ε₂` to `ε₁`.
pub fn duals_canonical_iso<M: MonoidalCategory>(m: &M, w1: &Witness<M>, w2: &Witness<M>) -> Result<(M::Mor, M::Mor)> {
    if w1.x != w2.x {
        return Err(Error::Invalid("witnesses dualize different objects".into()));
    }
    for w in [w1, w2] {
        let v = check_dual_pair(m, w);
        if !v.holds {
            return Err(Error::Precondition(format!("not a dual pair: {}", v.failures.join("; "))));
        }
    }
    let x = &w1.x;
    let fwd = zigzag_y(m, x, &w1.y, &w2.y, &w2.eta, &w1.eps);
    let back = zigzag_y(m, x, &w2.y, &w1.y, &w1.eta, &w2.eps);
    if m.compose(&back, &fwd) != m.id(&w1.y) || m.compose(&fwd, &back) != m.id(&w2.y) {
        return Err(Error::Invalid("comparison maps are not mutually inverse".into()));
    }
    if m.compose(&w2.eps, &m.tensor_mor(&m.id(x), &fwd)) != w1.eps {
        return Err(Error::Invalid("comparison does not intertwine the counits".into()));
    }
    Ok((fwd, back))
}

/// `(Y, X)` with `σ∘η` and `ε∘σ`; needs a braiding.
pub fn swap_roles<M: MonoidalCategory>(m: &M, w: &Witness<M>) -> Result<Witness<M>> {
    let s = |a: &M::Obj, b: &M::Obj| m.braiding(a, b).ok_or_else(|| Error::Precondition("no braiding".into()));
    Ok(DualPairWitness {
        x: w.y.clone(),
        y: w.x.clone(),
        eta: m.compose(&s(&w.y, &w.x)?, &w.eta),
        eps: m.compose(&w.eps, &s(&w.y, &w.x)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoidal::samples;
    use crate::symmetric::{matrix_category, Matrix};

    #[test]
    fn unit_is_self_dual() {
        for (name, m) in samples::corpus() {
            let i = m.unit;
            let w = DualPairWitness {
                x: i,
                y: i,
                eta: m.base.inverse(m.left_unitor[i]).unwrap(),
                eps: m.right_unitor[i],
            };
            assert!(check_dual_pair(&m, &w).holds, "{name}");
        }
    }

    #[test]
    fn evaluation_coevaluation() {
        let m = matrix_category(2, 2).unwrap();
        // ε(e_i ⊗ e_j) = δ_ij, η(1) = Σ e_i ⊗ e_i.
        let eps = Matrix::from_rows(&[&[1, 0, 0, 1]]);
        let w = DualPairWitness { x: 2, y: 2, eta: eps.transpose(), eps };
        assert!(check_dual_pair(&m, &w).holds);
        let found = find_right_dual(&m, &2, 1 << 10).unwrap();
        assert!(found.contains(&w));
        assert_eq!(found.len(), 6);
        let bad = DualPairWitness { eta: Matrix::zero(4, 1), ..w.clone() };
        assert!(!check_dual_pair(&m, &bad).holds);
    }

    #[test]
    fn brute_force_oracle_for_dimension_two() {
        // With ε(e_i⊗e_j) = B_ij and η(1) = Σ C_ij e_i⊗e_j the zigzags read
        // (BC)ᵀ = 1 and CB = 1.
        let mut count = 0;
        for b in Matrix::all(2, 2) {
            for c in Matrix::all(2, 2) {
                if c.mul(&b) == Matrix::identity(2) && b.mul(&c) == Matrix::identity(2) {
                    count += 1;
                }
            }
        }
        assert_eq!(count, 6);
    }

    #[test]
    fn budget_is_enforced() {
        let m = matrix_category(2, 2).unwrap();
        assert!(matches!(find_right_dual(&m, &2, 10), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn canonical_isos_between_duals() {
        let m = matrix_category(2, 2).unwrap();
        let found = find_right_dual(&m, &2, 1 << 10).unwrap();
        for w1 in &found {
            for w2 in &found {
                let (f, g) = duals_canonical_iso(&m, w1, w2).unwrap();
                assert_eq!(f.mul(&g), Matrix::identity(2));
                if w1 == w2 {
                    assert_eq!(f, Matrix::identity(2));
                }
            }
        }
    }

    #[test]
    fn swapping_roles_preserves_duality() {
        let m = matrix_category(2, 2).unwrap();
        for x in 0..=2 {
            for y in 0..=2 {
                let etas = m.hom(&1, &(x * y));
                let epss = m.hom(&(x * y), &1);
                for eta in &etas {
                    for eps in &epss {
                        let w = DualPairWitness { x, y, eta: eta.clone(), eps: eps.clone() };
                        let s = swap_roles(&m, &w).unwrap();
                        assert_eq!(check_dual_pair(&m, &w).holds, check_dual_pair(&m, &s).holds);
                    }
                }
            }
        }
        assert!(swap_roles(&samples::signed(false), &DualPairWitness { x: 0, y: 0, eta: 0, eps: 0 }).is_err());
    }

    #[test]
    fn every_small_dimension_is_dualizable() {
        let m = matrix_category(2, 2).unwrap();
        for x in 0..=2 {
            let found = find_right_dual(&m, &x, 1 << 10).unwrap();
            assert!(found.iter().any(|w| w.y == x), "dimension {x}");
            assert!(found.iter().all(|w| w.y == x));
        }
        assert_eq!(find_right_dual(&m, &1, 1 << 10).unwrap().len(), 1);
    }
}
