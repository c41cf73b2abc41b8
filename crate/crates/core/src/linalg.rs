//! Small dense linear algebra over a [`Scalar`] field: row reduction, rank,
//! nullspace, inverse and determinant.

use crate::scalar::{Scalar, Tolerance};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Self {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<S>]) -> Self {
        let rows = cols.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, v) in c.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product shape");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = a.clone() * rhs[(k, j)].clone();
                    out[(i, j)] += v;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self, tol: Tolerance) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            // Exact arithmetic: first nonzero. Float: largest magnitude.
            let pick = if S::EXACT {
                (r..m.rows).find(|&i| !m[(i, c)].is_zero())
            } else {
                (r..m.rows)
                    .filter(|&i| !m[(i, c)].is_negligible(tol))
                    .max_by(|&a, &b| {
                        m[(a, c)]
                            .abs_value()
                            .partial_cmp(&m[(b, c)].abs_value())
                            .unwrap_or(std::cmp::Ordering::Equal)
                    })
            };
            let Some(p) = pick else { continue };
            m.swap_rows(r, p);
            let inv = S::one() / m[(r, c)].clone();
            for j in c..m.cols {
                let v = m[(r, j)].clone() * inv.clone();
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    let v = f.clone() * m[(r, j)].clone();
                    m[(i, j)] -= v;
                }
                if !S::EXACT {
                    m[(i, c)] = S::zero();
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self, tol: Tolerance) -> usize {
        self.rref(tol).1.len()
    }

    /// Basis of `{x : A x = 0}`.
    pub fn nullspace(&self, tol: Tolerance) -> Vec<Vec<S>> {
        let (r, pivots) = self.rref(tol);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![S::zero(); self.cols];
                v[f] = S::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(row, f)].clone();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self, tol: Tolerance) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = S::one();
        }
        let (r, pivots) = aug.rref(tol);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    pub fn determinant(&self) -> S {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = S::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return S::zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det *= pivot.clone();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone() / pivot.clone();
                for j in c..n {
                    let v = f.clone() * m[(c, j)].clone();
                    m[(i, j)] -= v;
                }
            }
        }
        det
    }

    /// Determinants of the upper-left `k x k` blocks, `k = 1..=n`.
    pub fn leading_minors(&self) -> Vec<S> {
        (1..=self.rows)
            .map(|k| {
                let mut sub = Self::zeros(k, k);
                for i in 0..k {
                    for j in 0..k {
                        sub[(i, j)] = self[(i, j)].clone();
                    }
                }
                sub.determinant()
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<S> std::ops::Index<(usize, usize)> for Matrix<S> {
    type Output = S;

    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.cols + j]
    }
}

impl<S> std::ops::IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, Rational};

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| q(v, 1)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_and_nullspace() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(Tolerance::DEFAULT), 2);
        let ns = a.nullspace(Tolerance::DEFAULT);
        assert_eq!(ns.len(), 1);
        assert!(a.mul_vec(&ns[0]).iter().all(|v| v == &q(0, 1)));
    }

    #[test]
    fn inverse_and_determinant() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse(Tolerance::DEFAULT).unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert_eq!(a.determinant(), q(1, 1));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse(Tolerance::DEFAULT).is_none());
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant(), q(-1, 1));
    }

    #[test]
    fn float_rank_respects_tolerance() {
        let a: Matrix<f64> = Matrix::from_rows(vec![vec![1.0, 1.0], vec![1.0, 1.0 + 1e-13]]);
        assert_eq!(a.rank(Tolerance::DEFAULT), 1);
        assert_eq!(a.rank(Tolerance(1e-15)), 2);
    }
}
