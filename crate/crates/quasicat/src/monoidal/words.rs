use std::collections::HashSet;

use super::MonoidalCategory;
use crate::error::{Error, Result};

/// A parenthesized tensor word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Word<O> {
    Unit,
    Obj(O),
    Tensor(Box<Word<O>>, Box<Word<O>>),
}

impl<O: Clone + PartialEq> Word<O> {
    pub fn t(a: Word<O>, b: Word<O>) -> Self {
        Word::Tensor(Box::new(a), Box::new(b))
    }

    /// Non-unit letters from left to right.
    pub fn letters(&self) -> Vec<O> {
        match self {
            Word::Unit => Vec::new(),
            Word::Obj(o) => vec![o.clone()],
            Word::Tensor(a, b) => {
                let mut v = a.letters();
                v.extend(b.letters());
                v
            }
        }
    }

    pub fn eval<M: MonoidalCategory<Obj = O>>(&self, m: &M) -> O {
        match self {
            Word::Unit => m.unit(),
            Word::Obj(o) => o.clone(),
            Word::Tensor(a, b) => m.tensor_obj(&a.eval(m), &b.eval(m)),
        }
    }

    pub fn render(&self, name: &dyn Fn(&O) -> String) -> String {
        match self {
            Word::Unit => "I".into(),
            Word::Obj(o) => name(o),
            Word::Tensor(a, b) => format!("({}⊗{})", a.render(name), b.render(name)),
        }
    }
}

/// `((a₁⊗a₂)⊗a₃)⊗…`, or `I` for no letters.
pub fn left_normal<O: Clone + PartialEq>(letters: &[O]) -> Word<O> {
    let mut it = letters.iter();
    match it.next() {
        None => Word::Unit,
        Some(first) => it.fold(Word::Obj(first.clone()), |acc, x| Word::t(acc, Word::Obj(x.clone()))),
    }
}

/// `L(P) ⊗ L(Q) -> L(P ++ Q)` for left-normal words.
fn merge<M: MonoidalCategory>(m: &M, p: &[M::Obj], q: &[M::Obj]) -> M::Mor {
    let lp = left_normal(p).eval(m);
    if q.is_empty() {
        return m.right_unitor(&lp);
    }
    if p.is_empty() {
        return m.left_unitor(&left_normal(q).eval(m));
    }
    let (last, init) = q.split_last().unwrap();
    if init.is_empty() {
        return m.id(&m.tensor_obj(&lp, last));
    }
    let lq = left_normal(init).eval(m);
    let back = m.inverse(&m.associator(&lp, &lq, last)).expect("associator is invertible");
    m.compose(&m.tensor_mor(&merge(m, p, init), &m.id(last)), &back)
}

/// The canonical isomorphism from `w` to the left-normal unit-free word on
/// its letters.
pub fn normalize<M: MonoidalCategory>(m: &M, w: &Word<M::Obj>) -> M::Mor {
    match w {
        Word::Unit | Word::Obj(_) => m.id(&w.eval(m)),
        Word::Tensor(a, b) => {
            let f = m.tensor_mor(&normalize(m, a), &normalize(m, b));
            m.compose(&merge(m, &a.letters(), &b.letters()), &f)
        }
    }
}

/// The canonical isomorphism `from -> to` for words with the same letters.
pub fn coherence_iso<M: MonoidalCategory>(m: &M, from: &Word<M::Obj>, to: &Word<M::Obj>) -> Result<M::Mor> {
    if from.letters() != to.letters() {
        return Err(Error::Invalid("words have different letter sequences".into()));
    }
    let back = m.inverse(&normalize(m, to)).expect("normalization is invertible");
    Ok(m.compose(&back, &normalize(m, from)))
}

/// Single rewriting steps towards left-normal form: `α⁻¹`, `λ` and `ρ` applied
/// at any position.
fn moves<M: MonoidalCategory>(m: &M, w: &Word<M::Obj>) -> Vec<(Word<M::Obj>, M::Mor)> {
    let mut out = Vec::new();
    if let Word::Tensor(a, b) = w {
        if let Word::Tensor(y, z) = b.as_ref() {
            let inv = m.inverse(&m.associator(&a.eval(m), &y.eval(m), &z.eval(m))).expect("invertible");
            out.push((Word::t(Word::t((**a).clone(), (**y).clone()), (**z).clone()), inv));
        }
        if **a == Word::Unit {
            out.push(((**b).clone(), m.left_unitor(&b.eval(m))));
        }
        if **b == Word::Unit {
            out.push(((**a).clone(), m.right_unitor(&a.eval(m))));
        }
        for (a2, f) in moves(m, a) {
            out.push((Word::t(a2, (**b).clone()), m.tensor_mor(&f, &m.id(&b.eval(m)))));
        }
        for (b2, f) in moves(m, b) {
            out.push((Word::t((**a).clone(), b2), m.tensor_mor(&m.id(&a.eval(m)), &f)));
        }
    }
    out
}

/// The set of composites along every rewriting path from `w` to its normal
/// form; coherence holds on `w` exactly when this has one element.
pub fn all_rewrite_composites<M: MonoidalCategory>(m: &M, w: &Word<M::Obj>) -> HashSet<M::Mor> {
    fn rec<M: MonoidalCategory>(m: &M, w: &Word<M::Obj>, acc: &M::Mor, out: &mut HashSet<M::Mor>) {
        let next = moves(m, w);
        if next.is_empty() {
            out.insert(acc.clone());
            return;
        }
        for (w2, f) in next {
            rec(m, &w2, &m.compose(&f, acc), out);
        }
    }
    let mut out = HashSet::new();
    rec(m, w, &m.id(&w.eval(m)), &mut out);
    out
}

/// Every bracketing of `letters`, with and without a unit inserted at each
/// position.
pub fn sample_words<O: Clone + PartialEq>(letters: &[O]) -> Vec<Word<O>> {
    fn brackets<O: Clone + PartialEq>(items: &[Word<O>]) -> Vec<Word<O>> {
        if items.len() == 1 {
            return vec![items[0].clone()];
        }
        let mut out = Vec::new();
        for k in 1..items.len() {
            for l in brackets(&items[..k]) {
                for r in brackets(&items[k..]) {
                    out.push(Word::t(l.clone(), r));
                }
            }
        }
        out
    }
    let base: Vec<Word<O>> = letters.iter().cloned().map(Word::Obj).collect();
    let mut out = if base.is_empty() { vec![Word::Unit] } else { brackets(&base) };
    for pos in 0..=base.len() {
        let mut items = base.clone();
        items.insert(pos, Word::Unit);
        out.extend(brackets(&items));
    }
    out
}

/// `L(a_0 … a_k) -> L(a_0 … a_{p+1} a_p … a_k)` from one braiding.
fn adjacent_swap<M: MonoidalCategory>(m: &M, letters: &[M::Obj], p: usize) -> M::Mor {
    let (x, y) = (&letters[p], &letters[p + 1]);
    let braid = m.braiding(x, y).expect("braided category");
    let mut core = if p == 0 {
        braid
    } else {
        let prefix = left_normal(&letters[..p]).eval(m);
        let fwd = m.associator(&prefix, x, y);
        let back = m.inverse(&m.associator(&prefix, y, x)).expect("invertible");
        m.compose(&back, &m.compose(&m.tensor_mor(&m.id(&prefix), &braid), &fwd))
    };
    for z in &letters[p + 2..] {
        core = m.tensor_mor(&core, &m.id(z));
    }
    core
}

/// The braiding isomorphism `L(letters) -> L(letters ∘ perm)` where
/// `perm[k]` is the position in `letters` of the `k`-th output letter; built
/// from adjacent swaps along a bubble sort.
pub fn permutation_iso<M: MonoidalCategory>(m: &M, letters: &[M::Obj], perm: &[usize]) -> M::Mor {
    // rank[i]: output position of the letter currently at position i.
    let mut rank: Vec<usize> = vec![0; perm.len()];
    for (k, &i) in perm.iter().enumerate() {
        rank[i] = k;
    }
    let mut cur: Vec<M::Obj> = letters.to_vec();
    let mut acc = m.id(&left_normal(&cur).eval(m));
    let mut swapped = true;
    while swapped {
        swapped = false;
        for p in 0..cur.len().saturating_sub(1) {
            if rank[p] > rank[p + 1] {
                acc = m.compose(&adjacent_swap(m, &cur, p), &acc);
                cur.swap(p, p + 1);
                rank.swap(p, p + 1);
                swapped = true;
            }
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoidal::samples;

    #[test]
    fn identity_and_single_step() {
        let m = samples::signed(true);
        let (a, b, c) = (Word::Obj(1), Word::Obj(1), Word::Obj(1));
        let w = Word::t(Word::t(a.clone(), b.clone()), c.clone());
        assert_eq!(coherence_iso(&m, &w, &w).unwrap(), m.id(&w.eval(&m)));
        let v = Word::t(a, Word::t(b, c));
        assert_eq!(coherence_iso(&m, &w, &v).unwrap(), m.assoc(1, 1, 1));
        assert!(coherence_iso(&m, &w, &Word::Obj(1)).is_err());
    }

    #[test]
    fn unit_paths_agree() {
        let m = samples::signed(true);
        for a in 0..2 {
            for b in 0..2 {
                let w = Word::t(Word::t(Word::Obj(a), Word::Unit), Word::Obj(b));
                let via_rho = m.tensor_mor[m.right_unitor[a]][m.base.id(b)];
                let via_alpha = m.base.compose(m.tensor_mor[m.base.id(a)][m.left_unitor[b]], m.assoc(a, 0, b)).unwrap();
                assert_eq!(via_rho, via_alpha);
                assert_eq!(all_rewrite_composites(&m, &w).len(), 1);
            }
        }
    }

    #[test]
    fn rewrite_paths_agree_on_small_words() {
        let m = samples::signed(true);
        for letters in [vec![1, 1, 1], vec![1, 0, 1, 1], vec![1, 1, 1, 1]] {
            for w in sample_words(&letters) {
                let all = all_rewrite_composites(&m, &w);
                assert_eq!(all.len(), 1, "{}", w.render(&|o| o.to_string()));
                assert!(all.contains(&normalize(&m, &w)));
            }
        }
    }

    #[test]
    fn permutations() {
        let m = samples::super_signed();
        let letters = vec![1, 1, 0];
        let p = permutation_iso(&m, &letters, &[1, 0, 2]);
        assert_eq!(m.base.src(p), m.base.tgt(p));
        let q = permutation_iso(&m, &letters, &[0, 1, 2]);
        assert_eq!(q, m.base.id(m.base.src(q)));
    }
}
