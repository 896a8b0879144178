//! The tensor-square A ⊗_B A as an explicit quotient of A ⊗ A.
//!
//! The quotient by span{ab ⊗ a′ − a ⊗ ba′} is represented by a streaming row
//! reduction of the relation space; the surviving (non-pivot) coordinates of
//! A ⊗ A form a fixed deterministic section.  Outer left/right A-actions, the
//! inner action of B-central elements, the multiplication map μ, and the
//! B-central/A-central subspaces are all computed in these coordinates.

use super::{Extension, FDAlgebra};
use crate::exact::reducer::{to_sparse, RowReducer, SparseVec};
use crate::exact::Field;

/// Quotient structure for A ⊗_B A.
pub struct TensorSquare<F: Field> {
    dim_a: usize,
    qdim: usize,
    relations: RowReducer<F>,
    /// Non-pivot coordinates of A⊗A, ascending: the section basis.
    free_cols: Vec<usize>,
    /// A⊗A coordinate → quotient coordinate (only free coordinates appear).
    free_index: Vec<Option<usize>>,
    /// Projections of all d² pure-pair coordinates e_{(i,j)}.
    pair_proj: Vec<SparseVec<F>>,
}

impl<F: Field> TensorSquare<F> {
    pub(super) fn build(algebra: &FDAlgebra<F>, b_basis: &[Vec<F>]) -> Self {
        let d = algebra.dim();
        let pair = |i: usize, j: usize| i * d + j;
        let mut relations = RowReducer::new(d * d);
        for b in b_basis {
            for i in 0..d {
                let ib = algebra.mul_basis_vec(i, b); // x_i·b
                for j in 0..d {
                    let bj = algebra.mul_basis_vec_left(b, j); // b·x_j
                    let mut rel: Vec<(usize, F)> = Vec::new();
                    for (k, v) in ib.iter().enumerate() {
                        if !v.is_zero() {
                            rel.push((pair(k, j), v.clone()));
                        }
                    }
                    for (k, v) in bj.iter().enumerate() {
                        if !v.is_zero() {
                            rel.push((pair(i, k), -v.clone()));
                        }
                    }
                    rel.sort_by_key(|e| e.0);
                    // merge duplicate indices
                    let mut merged: SparseVec<F> = Vec::with_capacity(rel.len());
                    for (idx, val) in rel {
                        match merged.last_mut() {
                            Some((last, acc)) if *last == idx => {
                                *acc = acc.clone() + val;
                            }
                            _ => merged.push((idx, val)),
                        }
                    }
                    merged.retain(|(_, v)| !v.is_zero());
                    relations.insert(merged);
                }
            }
        }
        let pivots = relations.pivots();
        let mut is_pivot = vec![false; d * d];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free_cols: Vec<usize> = (0..d * d).filter(|&c| !is_pivot[c]).collect();
        let mut free_index = vec![None; d * d];
        for (q, &c) in free_cols.iter().enumerate() {
            free_index[c] = Some(q);
        }
        let mut tsq = TensorSquare {
            dim_a: d,
            qdim: free_cols.len(),
            relations,
            free_cols,
            free_index,
            pair_proj: Vec::new(),
        };
        tsq.pair_proj = (0..d * d).map(|c| tsq.project_raw(vec![(c, F::one())])).collect();
        tsq
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    /// Dimension of A ⊗_B A.
    pub fn dim(&self) -> usize {
        self.qdim
    }

    fn project_raw(&self, v: SparseVec<F>) -> SparseVec<F> {
        let reduced = self.relations.reduce(v);
        reduced
            .into_iter()
            .map(|(c, val)| (self.free_index[c].expect("reduced entries are free"), val))
            .collect()
    }

    /// Quotient coordinates of a sparse vector in A⊗A coordinates.
    pub fn project_sparse(&self, v: SparseVec<F>) -> Vec<F> {
        let mut out = vec![F::zero(); self.qdim];
        for (q, val) in self.project_raw(v) {
            out[q] = val;
        }
        out
    }

    /// Projection of the pure pair x_i ⊗ x_j, cached.
    pub fn pair_projection(&self, i: usize, j: usize) -> &SparseVec<F> {
        &self.pair_proj[i * self.dim_a + j]
    }

    /// Section representative of a quotient vector in A⊗A coordinates.
    pub fn section(&self, q: &[F]) -> SparseVec<F> {
        assert_eq!(q.len(), self.qdim);
        q.iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(c, v)| (self.free_cols[c], v.clone()))
            .collect()
    }

    /// Pairs `(i, j, coeff)` of the section representative.
    pub fn section_pairs(&self, q: &[F]) -> Vec<(usize, usize, F)> {
        self.section(q)
            .into_iter()
            .map(|(c, v)| (c / self.dim_a, c % self.dim_a, v))
            .collect()
    }
}

impl<F: Field> FDAlgebra<F> {
    /// `b·x_j` for a vector `b` (left factor a vector): same as
    /// `mul_vec_basis` but named for clarity at call sites building relations.
    pub(super) fn mul_basis_vec_left(&self, b: &[F], j: usize) -> Vec<F> {
        self.mul_vec_basis(b, j)
    }
}

impl<F: Field> Extension<F> {
    /// The tensor-square quotient (built once, cached).
    pub fn tensor_square(&self) -> &TensorSquare<F> {
        self.tensor.get_or_init(|| TensorSquare::build(&self.algebra, &self.b_basis))
    }

    /// Quotient coordinates of a ⊗ a′ for vectors a, a′.
    pub fn tensor_of(&self, a: &[F], a_prime: &[F]) -> Vec<F> {
        let tsq = self.tensor_square();
        let mut acc = vec![F::zero(); tsq.dim()];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in a_prime.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let c = x.clone() * y.clone();
                for (q, val) in tsq.pair_projection(i, j) {
                    acc[*q] = acc[*q].clone() + c.clone() * val.clone();
                }
            }
        }
        acc
    }

    /// 1 ⊗ 1 in quotient coordinates.
    pub fn one_tensor_one(&self) -> Vec<F> {
        let unit = self.algebra.unit().to_vec();
        self.tensor_of(&unit, &unit)
    }

    /// Outer left action x_u · (−) on the quotient.
    pub fn tensor_left_mul_basis(&self, u: usize, q: &[F]) -> Vec<F> {
        let tsq = self.tensor_square();
        let mut acc = vec![F::zero(); tsq.dim()];
        for (i, j, coeff) in tsq.section_pairs(q) {
            for (k, v) in self.algebra.mul_basis(u, i).clone() {
                let c = coeff.clone() * v;
                for (qq, val) in tsq.pair_projection(k, j) {
                    acc[*qq] = acc[*qq].clone() + c.clone() * val.clone();
                }
            }
        }
        acc
    }

    /// Outer right action (−) · x_u on the quotient.
    pub fn tensor_right_mul_basis(&self, u: usize, q: &[F]) -> Vec<F> {
        let tsq = self.tensor_square();
        let mut acc = vec![F::zero(); tsq.dim()];
        for (i, j, coeff) in tsq.section_pairs(q) {
            for (k, v) in self.algebra.mul_basis(j, u).clone() {
                let c = coeff.clone() * v;
                for (qq, val) in tsq.pair_projection(i, k) {
                    acc[*qq] = acc[*qq].clone() + c.clone() * val.clone();
                }
            }
        }
        acc
    }

    /// Outer left action by a vector.
    pub fn tensor_left_mul(&self, a: &[F], q: &[F]) -> Vec<F> {
        let mut acc = vec![F::zero(); self.tensor_square().dim()];
        for (u, coeff) in a.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for (k, v) in self.tensor_left_mul_basis(u, q).into_iter().enumerate() {
                if !v.is_zero() {
                    acc[k] = acc[k].clone() + coeff.clone() * v;
                }
            }
        }
        acc
    }

    /// Outer right action by a vector.
    pub fn tensor_right_mul(&self, a: &[F], q: &[F]) -> Vec<F> {
        let mut acc = vec![F::zero(); self.tensor_square().dim()];
        for (u, coeff) in a.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for (k, v) in self.tensor_right_mul_basis(u, q).into_iter().enumerate() {
                if !v.is_zero() {
                    acc[k] = acc[k].clone() + coeff.clone() * v;
                }
            }
        }
        acc
    }

    /// Multiplication map μ(a ⊗ a′) = a·a′ on quotient coordinates.
    pub fn mu(&self, q: &[F]) -> Vec<F> {
        let tsq = self.tensor_square();
        let mut acc = vec![F::zero(); self.dim()];
        for (i, j, coeff) in tsq.section_pairs(q) {
            for (k, v) in self.algebra.mul_basis(i, j) {
                acc[*k] = acc[*k].clone() + coeff.clone() * v.clone();
            }
        }
        acc
    }

    /// Inner action of `t ∈ A⊗_B A` on the quotient:
    /// `t · (a ⊗ a′) = a t¹ ⊗ t² a′` (summation over the lift of t).
    pub fn inner_action(&self, t: &[F], q: &[F]) -> Vec<F> {
        let tsq = self.tensor_square();
        let t_pairs = tsq.section_pairs(t);
        let mut acc = vec![F::zero(); tsq.dim()];
        for (i, j, coeff) in tsq.section_pairs(q) {
            for (p, qq, tval) in &t_pairs {
                let scale = coeff.clone() * tval.clone();
                // (x_i·x_p) ⊗ (x_q·x_j)
                for (k, kv) in self.algebra.mul_basis(i, *p) {
                    for (l, lv) in self.algebra.mul_basis(*qq, j) {
                        let c = scale.clone() * kv.clone() * lv.clone();
                        for (out, val) in tsq.pair_projection(*k, *l) {
                            acc[*out] = acc[*out].clone() + c.clone() * val.clone();
                        }
                    }
                }
            }
        }
        acc
    }

    /// Basis of T = (A ⊗_B A)^B, the B-central tensors.
    pub fn t_space(&self) -> &[Vec<F>] {
        self.t_basis.get_or_init(|| self.central_tensors(&self.b_basis))
    }

    /// Basis of 𝒞 = (A ⊗_B A)^A, the Casimir elements.
    pub fn casimir_space(&self) -> &[Vec<F>] {
        self.casimir_basis.get_or_init(|| {
            let all: Vec<Vec<F>> = (0..self.dim()).map(|i| self.algebra.basis_vec(i)).collect();
            self.central_tensors(&all)
        })
    }

    fn central_tensors(&self, acting: &[Vec<F>]) -> Vec<Vec<F>> {
        let tsq = self.tensor_square();
        let qdim = tsq.dim();
        let mut reducer = RowReducer::new(qdim);
        for a in acting {
            // rows of (L_a − R_a) on the quotient
            let mut rows: Vec<Vec<F>> = vec![vec![F::zero(); qdim]; qdim];
            for c in 0..qdim {
                let mut e = vec![F::zero(); qdim];
                e[c] = F::one();
                let l = self.tensor_left_mul(a, &e);
                let r = self.tensor_right_mul(a, &e);
                for row in 0..qdim {
                    rows[row][c] = l[row].clone() - r[row].clone();
                }
            }
            for row in rows {
                reducer.insert(to_sparse(&row));
            }
        }
        reducer.nullspace_basis()
    }
}
