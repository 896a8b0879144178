//! Dense exact matrices with Gaussian elimination over any [`Field`].
//!
//! Pivot rows are chosen to minimize `entry_size`, which keeps intermediate
//! fractions small without fraction-free bookkeeping.  Everything returns
//! exact results; there is no floating point fallback.

use super::scalar::Field;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// A particular solution together with a basis of the homogeneous solutions.
#[derive(Clone, Debug)]
pub struct LinearSolution<F: Field> {
    pub particular: Vec<F>,
    pub nullspace: Vec<Vec<F>>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc = acc + a.clone() * v[j].clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul_mat(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let t = out.get(i, j).clone() + a.clone() * b.clone();
                        out.set(i, j, t);
                    }
                }
            }
        }
        out
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            // Smallest nonzero candidate by entry size.
            let pivot_row = (r..self.rows)
                .filter(|&i| !self.get(i, c).is_zero())
                .min_by_key(|&i| self.get(i, c).entry_size());
            let Some(p) = pivot_row else { continue };
            self.swap_rows(r, p);
            let inv = self.get(r, c).clone().inv();
            for j in c..self.cols {
                let v = self.get(r, j).clone() * inv.clone();
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r && !self.get(i, c).is_zero() {
                    let f = self.get(i, c).clone();
                    for j in c..self.cols {
                        let v = self.get(i, j).clone() - f.clone() * self.get(r, j).clone();
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        work.rref_in_place().len()
    }

    /// Exact basis of `{v : Mv = 0}`; dimension is `cols − rank`.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let mut work = self.clone();
        let pivots = work.rref_in_place();
        nullspace_from_rref(&work, &pivots)
    }

    /// One exact solution of `Mx = b` plus the homogeneous basis, or `None`
    /// if the system is inconsistent.
    pub fn solve(&self, b: &[F]) -> Option<LinearSolution<F>> {
        assert_eq!(b.len(), self.rows, "rhs length must match rows");
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let pivots = aug.rref_in_place();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut particular = vec![F::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            particular[c] = aug.get(r, self.cols).clone();
        }
        let strip = Matrix {
            rows: aug.rows,
            cols: self.cols,
            data: {
                let mut d = Vec::with_capacity(aug.rows * self.cols);
                for i in 0..aug.rows {
                    d.extend(aug.row(i)[..self.cols].iter().cloned());
                }
                d
            },
        };
        let nullspace = nullspace_from_rref(&strip, &pivots);
        Some(LinearSolution { particular, nullspace })
    }
}

fn nullspace_from_rref<F: Field>(rref: &Matrix<F>, pivots: &[usize]) -> Vec<Vec<F>> {
    let cols = rref.ncols();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); cols];
            v[f] = F::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -rref.get(r, f).clone();
            }
            v
        })
        .collect()
}

/// Exact coefficients expressing `target` in the span of `vectors`, or `None`
/// if it is not in the span.  Coefficients line up with the input order.
pub fn span_membership<F: Field>(vectors: &[Vec<F>], target: &[F]) -> Option<Vec<F>> {
    if vectors.is_empty() {
        return if target.iter().all(F::is_zero) { Some(vec![]) } else { None };
    }
    let len = target.len();
    assert!(vectors.iter().all(|v| v.len() == len), "vector length mismatch");
    let mut m = Matrix::zeros(len, vectors.len());
    for (j, v) in vectors.iter().enumerate() {
        for (i, x) in v.iter().enumerate() {
            m.set(i, j, x.clone());
        }
    }
    m.solve(target).map(|s| s.particular)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, Rational};
    use num_traits::Zero;

    fn rmat(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect())
    }

    #[test]
    fn nullspace_examples() {
        assert!(rmat(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).nullspace().is_empty());
        assert_eq!(rmat(&[&[0, 0, 0], &[0, 0, 0]]).nullspace().len(), 3);
        let ns = rmat(&[&[1, 1], &[2, 2]]).nullspace();
        assert_eq!(ns.len(), 1);
        // span{(1,−1)} up to scale: x + y = 0
        assert_eq!(ns[0][0].clone() + ns[0][1].clone(), rat(0, 1));
        assert!(!ns[0][0].is_zero());
    }

    #[test]
    fn solve_examples() {
        let s = rmat(&[&[1, 0], &[0, 1]]).solve(&[rat(3, 1), rat(5, 1)]).unwrap();
        assert_eq!(s.particular, vec![rat(3, 1), rat(5, 1)]);
        assert!(s.nullspace.is_empty());

        let s = rmat(&[&[1, 1]]).solve(&[rat(2, 1)]).unwrap();
        // particular solves exactly; homogeneous basis spans x + y = 0
        assert_eq!(s.particular[0].clone() + s.particular[1].clone(), rat(2, 1));
        assert_eq!(s.nullspace.len(), 1);

        assert!(rmat(&[&[0]]).solve(&[rat(1, 1)]).is_none());
    }

    #[test]
    fn span_membership_examples() {
        let absent = span_membership(&[vec![rat(1, 1), rat(0, 1)]], &[rat(0, 1), rat(1, 1)]);
        assert!(absent.is_none());

        let c = span_membership(
            &[vec![rat(1, 1), rat(1, 1)], vec![rat(1, 1), rat(-1, 1)]],
            &[rat(2, 1), rat(0, 1)],
        )
        .unwrap();
        assert_eq!(c, vec![rat(1, 1), rat(1, 1)]);

        let empty = span_membership::<Rational>(&[], &[rat(0, 1), rat(0, 1)]).unwrap();
        assert!(empty.is_empty());
    }
}
