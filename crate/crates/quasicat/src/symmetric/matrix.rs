use std::collections::HashMap;
use std::fmt;

use crate::category::{FiniteCategory, Morphism};
use crate::error::{Error, Result};
use crate::monoidal::{MonoidalCategory, MonoidalPresentation};

/// A matrix over `𝔽₂`, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<u8>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[&[u8]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix { rows: rows.len(), cols, entries: rows.iter().flat_map(|r| r.iter().map(|x| x & 1)).collect() }
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.entries[i * self.cols + j] = v & 1;
    }

    /// `self · rhs`.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Matrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k) == 1 {
                    for j in 0..rhs.cols {
                        out.entries[i * rhs.cols + j] ^= rhs.get(k, j);
                    }
                }
            }
        }
        out
    }

    pub fn kronecker(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zero(self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k) == 0 {
                    continue;
                }
                for j in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        out.set(i * rhs.rows + j, k * rhs.cols + l, rhs.get(j, l));
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    /// Gauss-Jordan elimination on `[self | 1]`.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for c in 0..n {
            let pivot = (c..n).find(|&r| a.get(r, c) == 1)?;
            for m in [&mut a, &mut inv] {
                for j in 0..n {
                    let (x, y) = (m.get(c, j), m.get(pivot, j));
                    m.set(c, j, y);
                    m.set(pivot, j, x);
                }
            }
            let rows: Vec<usize> = (0..n).filter(|&r| r != c && a.get(r, c) == 1).collect();
            for r in rows {
                for j in 0..n {
                    let (x, y) = (a.get(c, j), inv.get(c, j));
                    a.entries[r * n + j] ^= x;
                    inv.entries[r * n + j] ^= y;
                }
            }
        }
        Some(inv)
    }

    /// Every `rows × cols` matrix.
    pub fn all(rows: usize, cols: usize) -> Vec<Matrix> {
        let len = rows * cols;
        assert!(len <= 20, "refusing to enumerate 2^{len} matrices");
        (0u32..1 << len)
            .map(|bits| Matrix { rows, cols, entries: (0..len).map(|k| ((bits >> k) & 1) as u8).collect() })
            .collect()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows == 0 || self.cols == 0 {
            return write!(f, "[{}x{}]", self.rows, self.cols);
        }
        let rows: Vec<String> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| char::from(b'0' + self.get(i, j))).collect())
            .collect();
        write!(f, "[{}]", rows.join(";"))
    }
}

/// Skeletal finite-dimensional `𝔽₂`-vector spaces. Objects are dimensions;
/// laws are quantified over `0..=dmax` while tensors may leave that range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixCategory {
    pub dmax: usize,
}

/// The matrix category over `𝔽_q`; only `q = 2` is supported.
pub fn matrix_category(q: u64, dmax: usize) -> Result<MatrixCategory> {
    if q != 2 {
        return Err(Error::Invalid(format!("only q = 2 is supported, got {q}")));
    }
    if dmax > 3 {
        return Err(Error::BudgetExceeded(format!("dmax = {dmax} exceeds 3")));
    }
    Ok(MatrixCategory { dmax })
}

impl MatrixCategory {
    /// `e_i ⊗ e_j ↦ e_j ⊗ e_i`, that is `i·b + j ↦ j·a + i`.
    pub fn shuffle(a: usize, b: usize) -> Matrix {
        let mut m = Matrix::zero(a * b, a * b);
        for i in 0..a {
            for j in 0..b {
                m.set(j * a + i, i * b + j, 1);
            }
        }
        m
    }
}

impl MonoidalCategory for MatrixCategory {
    type Obj = usize;
    type Mor = Matrix;

    fn objects(&self) -> Vec<usize> {
        (0..=self.dmax).collect()
    }
    fn hom(&self, x: &usize, y: &usize) -> Vec<Matrix> {
        Matrix::all(*y, *x)
    }
    fn src(&self, f: &Matrix) -> usize {
        f.cols
    }
    fn tgt(&self, f: &Matrix) -> usize {
        f.rows
    }
    fn id(&self, x: &usize) -> Matrix {
        Matrix::identity(*x)
    }
    fn compose(&self, g: &Matrix, f: &Matrix) -> Matrix {
        g.mul(f)
    }
    fn inverse(&self, f: &Matrix) -> Option<Matrix> {
        f.inverse()
    }
    fn unit(&self) -> usize {
        1
    }
    fn tensor_obj(&self, a: &usize, b: &usize) -> usize {
        a * b
    }
    fn tensor_mor(&self, f: &Matrix, g: &Matrix) -> Matrix {
        f.kronecker(g)
    }
    fn associator(&self, a: &usize, b: &usize, c: &usize) -> Matrix {
        Matrix::identity(a * b * c)
    }
    fn left_unitor(&self, a: &usize) -> Matrix {
        Matrix::identity(*a)
    }
    fn right_unitor(&self, a: &usize) -> Matrix {
        Matrix::identity(*a)
    }
    fn braiding(&self, a: &usize, b: &usize) -> Option<Matrix> {
        Some(Self::shuffle(*a, *b))
    }
    fn obj_name(&self, a: &usize) -> String {
        a.to_string()
    }
    fn mor_name(&self, f: &Matrix) -> String {
        f.to_string()
    }
}

/// Tabulates a category whose object set is closed under `⊗`.
pub fn to_presentation<M: MonoidalCategory>(m: &M) -> Result<MonoidalPresentation> {
    let obs = m.objects();
    let oidx: HashMap<M::Obj, usize> = obs.iter().cloned().enumerate().map(|(i, o)| (o, i)).collect();
    let ob = |o: &M::Obj| {
        oidx.get(o).copied().ok_or_else(|| Error::Precondition(format!("{} is outside the object set", m.obj_name(o))))
    };
    let mors = m.morphisms();
    let midx: HashMap<M::Mor, usize> = mors.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
    let mo = |f: &M::Mor| {
        midx.get(f).copied().ok_or_else(|| Error::Precondition(format!("{} is outside the morphism set", m.mor_name(f))))
    };
    let morphisms = mors
        .iter()
        .map(|f| Ok(Morphism { name: m.mor_name(f), src: ob(&m.src(f))?, tgt: ob(&m.tgt(f))? }))
        .collect::<Result<Vec<_>>>()?;
    let identities = obs.iter().map(|o| mo(&m.id(o))).collect::<Result<Vec<_>>>()?;
    let base = FiniteCategory::new(obs.iter().map(|o| m.obj_name(o)).collect(), morphisms, identities, |g, f| {
        midx.get(&m.compose(&mors[g], &mors[f])).copied()
    })?;
    let n = obs.len();
    let mut tensor_obj = vec![vec![0; n]; n];
    let mut associator = Vec::with_capacity(n * n * n);
    for (i, a) in obs.iter().enumerate() {
        for (j, b) in obs.iter().enumerate() {
            tensor_obj[i][j] = ob(&m.tensor_obj(a, b))?;
            for c in &obs {
                associator.push(mo(&m.associator(a, b, c))?);
            }
        }
    }
    let tensor_mor = mors
        .iter()
        .map(|f| mors.iter().map(|g| mo(&m.tensor_mor(f, g))).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let braiding = if m.braiding(&m.unit(), &m.unit()).is_some() {
        let rows = obs
            .iter()
            .map(|a| obs.iter().map(|b| mo(&m.braiding(a, b).expect("braided"))).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Some(rows)
    } else {
        None
    };
    Ok(MonoidalPresentation {
        base,
        tensor_obj,
        tensor_mor,
        unit: ob(&m.unit())?,
        associator,
        left_unitor: obs.iter().map(|a| mo(&m.left_unitor(a))).collect::<Result<Vec<_>>>()?,
        right_unitor: obs.iter().map(|a| mo(&m.right_unitor(a))).collect::<Result<Vec<_>>>()?,
        braiding,
    })
}
