//! Sylvester matrices and exact determinants of polynomial matrices, giving
//! homogeneous resultants with respect to a parameter pair.

use crate::poly::{ArithError, MultiPoly};
use crate::vars::Pair;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ResultantError {
    #[error("polynomial is not homogeneous in {0}")]
    NotHomogeneous(String),
    #[error("both polynomials are constant in the pair")]
    BothConstant,
    #[error("determinant of a non-square matrix")]
    NotSquare,
}

/// Dense rectangular matrix of polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix {
            rows,
            cols,
            entries: vec![MultiPoly::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<MultiPoly>>) -> PolyMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix");
            entries.extend(row);
        }
        PolyMatrix { rows: r, cols: c, entries }
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> &MultiPoly {
        &self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut MultiPoly {
        &mut self.entries[r * self.cols + c]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn zero_fraction(&self) -> f64 {
        if self.entries.is_empty() {
            return 0.0;
        }
        let zeros = self.entries.iter().filter(|e| e.is_zero()).count();
        zeros as f64 / self.entries.len() as f64
    }
}

/// Coefficients of a pair-homogeneous polynomial in descending powers of the
/// dominant pair variable: `[a_d, a_{d-1}, ..., a_0]` where
/// `p = a_d x^d + a_{d-1} x^{d-1} y + ... + a_0 y^d`.
fn pair_coeffs_desc(p: &MultiPoly, pair: Pair, d: u32) -> Vec<MultiPoly> {
    let (x, y) = pair.vars();
    let mut out = vec![MultiPoly::zero(); d as usize + 1];
    for (m, c) in p.terms() {
        let ex = m.exponent(x);
        debug_assert_eq!(ex + m.exponent(y), d);
        let mut exps = m.0;
        exps[x.index()] = 0;
        exps[y.index()] = 0;
        let slot = &mut out[(d - ex) as usize];
        *slot = slot.add_ref(&MultiPoly::term(c.clone(), crate::monomial::Monomial(exps)));
    }
    out
}

fn pair_degree(p: &MultiPoly, pair: Pair) -> Result<u32, ResultantError> {
    if !p.is_homogeneous_in(pair.group()) {
        return Err(ResultantError::NotHomogeneous(pair.to_string()));
    }
    Ok(p.degree_in(pair.group().vars()).finite().unwrap_or(0))
}

/// The (dp+dq) x (dp+dq) Sylvester matrix of p and q with respect to the
/// pair: dq shifted rows of p's coefficients above dp shifted rows of q's.
pub fn sylvester(p: &MultiPoly, q: &MultiPoly, pair: Pair) -> Result<PolyMatrix, ResultantError> {
    let dp = pair_degree(p, pair)?;
    let dq = pair_degree(q, pair)?;
    if dp == 0 && dq == 0 {
        return Err(ResultantError::BothConstant);
    }
    let n = (dp + dq) as usize;
    let pc = pair_coeffs_desc(p, pair, dp);
    let qc = pair_coeffs_desc(q, pair, dq);
    let mut m = PolyMatrix::new(n, n);
    for r in 0..dq as usize {
        for (j, c) in pc.iter().enumerate() {
            *m.at_mut(r, r + j) = c.clone();
        }
    }
    for r in 0..dp as usize {
        for (j, c) in qc.iter().enumerate() {
            *m.at_mut(dq as usize + r, r + j) = c.clone();
        }
    }
    Ok(m)
}

/// Exact determinant. Cofactor expansion for small or very sparse matrices,
/// fraction-free Bareiss elimination otherwise.
pub fn det_poly(m: &PolyMatrix) -> Result<MultiPoly, ResultantError> {
    if !m.is_square() {
        return Err(ResultantError::NotSquare);
    }
    if m.rows == 0 {
        return Ok(MultiPoly::one());
    }
    if m.rows <= 4 || m.zero_fraction() > 0.5 {
        Ok(det_cofactor(m, &(0..m.cols).collect::<Vec<_>>(), 0))
    } else {
        Ok(det_bareiss(m.clone()))
    }
}

fn det_cofactor(m: &PolyMatrix, cols: &[usize], row: usize) -> MultiPoly {
    if cols.len() == 1 {
        return m.at(row, cols[0]).clone();
    }
    let mut acc = MultiPoly::zero();
    for (i, &c) in cols.iter().enumerate() {
        let e = m.at(row, c);
        if e.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols
            .iter()
            .copied()
            .filter(|&cc| cc != c)
            .collect();
        let sub = det_cofactor(m, &rest, row + 1);
        if sub.is_zero() {
            continue;
        }
        let term = e.mul_ref(&sub);
        acc = if i % 2 == 0 {
            acc.add_ref(&term)
        } else {
            acc.sub_ref(&term)
        };
    }
    acc
}

fn det_bareiss(mut m: PolyMatrix) -> MultiPoly {
    let n = m.rows;
    let mut sign_flip = false;
    let mut prev = MultiPoly::one();
    for k in 0..n - 1 {
        if m.at(k, k).is_zero() {
            let swap = ((k + 1)..n).find(|&r| !m.at(r, k).is_zero());
            match swap {
                Some(r) => {
                    for c in 0..n {
                        let a = m.at(k, c).clone();
                        let b = m.at(r, c).clone();
                        *m.at_mut(k, c) = b;
                        *m.at_mut(r, c) = a;
                    }
                    sign_flip = !sign_flip;
                }
                None => return MultiPoly::zero(),
            }
        }
        let pivot = m.at(k, k).clone();
        for i in (k + 1)..n {
            let mik = m.at(i, k).clone();
            for j in (k + 1)..n {
                let num = &m.at(i, j).mul_ref(&pivot) - &mik.mul_ref(m.at(k, j));
                *m.at_mut(i, j) = num
                    .div_exact(&prev)
                    .expect("Bareiss division is exact");
            }
            *m.at_mut(i, k) = MultiPoly::zero();
        }
        prev = pivot;
    }
    let det = m.at(n - 1, n - 1).clone();
    if sign_flip {
        det.neg_ref()
    } else {
        det
    }
}

/// Homogeneous resultant with respect to a pair. When exactly one argument
/// is constant in the pair, the value is that constant raised to the other's
/// degree; no matrix is built.
pub fn resultant(p: &MultiPoly, q: &MultiPoly, pair: Pair) -> Result<MultiPoly, ResultantError> {
    if p.is_zero() || q.is_zero() {
        // a zero argument shares every factor
        return Ok(MultiPoly::zero());
    }
    let dp = pair_degree(p, pair)?;
    let dq = pair_degree(q, pair)?;
    match (dp, dq) {
        (0, 0) => Err(ResultantError::BothConstant),
        (0, _) => Ok(p.pow(dq)),
        (_, 0) => Ok(q.pow(dp)),
        _ => det_poly(&sylvester(p, q, pair)?),
    }
}
