//! Exact Gaussian elimination over Q: rank, reduced row echelon form and
//! kernel bases for the graded linear systems of the curve machinery.

use crate::poly::Rational;
use num_traits::{One, Zero};

#[derive(Debug, Clone)]
pub struct QMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rational>,
}

impl QMat {
    pub fn zero(rows: usize, cols: usize) -> QMat {
        QMat {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> QMat {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix");
            data.extend(row);
        }
        QMat { rows: r, cols: c, data }
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }

    /// In-place reduced row echelon form. Returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let pivot_row = (row..self.rows).find(|&r| !self.at(r, col).is_zero());
            let pr = match pivot_row {
                Some(pr) => pr,
                None => continue,
            };
            if pr != row {
                for c in 0..self.cols {
                    self.data.swap(row * self.cols + c, pr * self.cols + c);
                }
            }
            let inv = self.at(row, col).recip();
            for c in col..self.cols {
                let v = self.at(row, c) * &inv;
                *self.at_mut(row, c) = v;
            }
            for r in 0..self.rows {
                if r == row || self.at(r, col).is_zero() {
                    continue;
                }
                let factor = self.at(r, col).clone();
                for c in col..self.cols {
                    let v = self.at(r, c) - &(&factor * self.at(row, c));
                    *self.at_mut(r, c) = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the null space, one vector per free column, in ascending
    /// free-column order.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.at(r, free).clone();
            }
            basis.push(v);
        }
        basis
    }
}

/// Incremental row reducer. Rows are stored fully reduced with their first
/// nonzero coordinate scaled to 1, so inserting a vector canonicalizes it
/// against everything inserted before.
#[derive(Debug, Default)]
pub struct Eliminator {
    rows: Vec<Vec<Rational>>,
    leads: Vec<usize>,
}

impl Eliminator {
    pub fn new() -> Eliminator {
        Eliminator::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the stored rows. If independent, store the reduced
    /// row (lead scaled to 1) and return it; otherwise return None.
    pub fn insert(&mut self, mut v: Vec<Rational>) -> Option<Vec<Rational>> {
        for (row, &lead) in self.rows.iter().zip(&self.leads) {
            if !v[lead].is_zero() {
                let factor = v[lead].clone();
                for (a, b) in v.iter_mut().zip(row) {
                    *a -= &factor * b;
                }
            }
        }
        let lead = v.iter().position(|c| !c.is_zero())?;
        let inv = v[lead].recip();
        for a in v.iter_mut() {
            *a *= &inv;
        }
        // keep rows sorted by lead so reduction order is deterministic
        let at = self.leads.partition_point(|&l| l < lead);
        self.rows.insert(at, v.clone());
        self.leads.insert(at, lead);
        Some(v)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut w = v.to_vec();
        for (row, &lead) in self.rows.iter().zip(&self.leads) {
            if !w[lead].is_zero() {
                let factor = w[lead].clone();
                for (a, b) in w.iter_mut().zip(row) {
                    *a -= &factor * b;
                }
            }
        }
        w.iter().all(|c| c.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn rv(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let m = QMat::from_rows(vec![rv(&[1, 2, 3]), rv(&[2, 4, 6]), rv(&[0, 1, 1])]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        // verify M k = 0
        for r in 0..m.rows {
            let mut acc = Rational::zero();
            for c in 0..m.cols {
                acc += m.at(r, c) * &k[0][c];
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn eliminator_reduces_and_detects_dependence() {
        let mut e = Eliminator::new();
        assert!(e.insert(rv(&[0, 2, 4])).is_some());
        assert!(e.insert(rv(&[0, 1, 2])).is_none());
        let reduced = e.insert(rv(&[1, 1, 1])).unwrap();
        assert_eq!(reduced[0], rat(1));
        assert!(e.contains(&rv(&[2, 4, 6])));
        assert!(!e.contains(&rv(&[0, 0, 1])));
    }
}
