//! Structure-constant algebras and their ring extensions.
//!
//! An [`FDAlgebra`] is a finite-dimensional unital algebra given by exact
//! structure constants; an [`Extension`] pairs it with a distinguished unital
//! subalgebra B and lazily computes everything the depth-two, separability
//! and Frobenius machinery needs: the centralizer R = C_A(B), the center
//! Z(A), the tensor-square A ⊗_B A with its B-central and A-central subspaces,
//! the bimodule endomorphism ring S = End(_B A _B) and its ideal Â of
//! B-valued maps, quasibase tests, integrals, and the counit/pairing layer.

mod builders;
mod d2;
mod separability;
mod spaces;
mod tensor;

use std::sync::OnceLock;

use thiserror::Error;

pub use builders::*;
pub use d2::{EndRtReport, GammaReport, QuasibaseCertificate, Side};
pub use separability::{HSeparabilitySystem, SymmetricSeparability};
pub use spaces::IntegralSpaces;
pub use tensor::TensorSquare;

use crate::exact::reducer::{to_sparse, RowReducer, SparseVec};
use crate::exact::{Field, Matrix};

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("structure constants are not associative at basis triple ({i}, {j}, {k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("unit vector does not satisfy the unit law")]
    BadUnit,
    #[error("subalgebra basis is not closed under multiplication")]
    NotClosed,
    #[error("unit of the algebra does not lie in the subalgebra")]
    UnitMissing,
    #[error("structure constant table has the wrong shape")]
    BadShape,
}

/// Finite-dimensional unital algebra over an exact field, via structure
/// constants `x_i·x_j = Σ_k c[i][j][k]·x_k` (stored sparsely).
#[derive(Clone, Debug)]
pub struct FDAlgebra<F: Field> {
    dim: usize,
    labels: Vec<String>,
    /// Flattened `dim×dim`; entry `i·dim + j` is `x_i·x_j`.
    table: Vec<SparseVec<F>>,
    unit: Vec<F>,
}

impl<F: Field> FDAlgebra<F> {
    /// Validates associativity on all basis triples and the unit law on all
    /// basis elements before accepting the data.
    pub fn new(
        labels: Vec<String>,
        table: Vec<SparseVec<F>>,
        unit: Vec<F>,
    ) -> Result<Self, AlgebraError> {
        let dim = labels.len();
        if table.len() != dim * dim || unit.len() != dim || dim == 0 {
            return Err(AlgebraError::BadShape);
        }
        let alg = FDAlgebra { dim, labels, table, unit };
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    // (x_i x_j) x_k vs x_i (x_j x_k)
                    let left = alg.mul_vec_basis(&alg.expand(alg.mul_basis(i, j)), k);
                    let right = alg.mul_basis_vec(i, &alg.expand(alg.mul_basis(j, k)));
                    if left != right {
                        return Err(AlgebraError::NotAssociative { i, j, k });
                    }
                }
            }
        }
        for i in 0..dim {
            let e = alg.basis_vec(i);
            if alg.mul_vec(&alg.unit, &e) != e || alg.mul_vec(&e, &alg.unit) != e {
                return Err(AlgebraError::BadUnit);
            }
        }
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn basis_vec(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim];
        v[i] = F::one();
        v
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec<F> {
        &self.table[i * self.dim + j]
    }

    fn expand(&self, sparse: &SparseVec<F>) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim];
        for (k, c) in sparse {
            v[*k] = c.clone();
        }
        v
    }

    /// `x_i · b` for a vector `b`.
    pub fn mul_basis_vec(&self, i: usize, b: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for (u, bu) in b.iter().enumerate() {
            if bu.is_zero() {
                continue;
            }
            for (k, c) in self.mul_basis(i, u) {
                out[*k] = out[*k].clone() + bu.clone() * c.clone();
            }
        }
        out
    }

    /// `a · x_j` for a vector `a`.
    pub fn mul_vec_basis(&self, a: &[F], j: usize) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for (u, au) in a.iter().enumerate() {
            if au.is_zero() {
                continue;
            }
            for (k, c) in self.mul_basis(u, j) {
                out[*k] = out[*k].clone() + au.clone() * c.clone();
            }
        }
        out
    }

    pub fn mul_vec(&self, a: &[F], b: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for (u, au) in a.iter().enumerate() {
            if au.is_zero() {
                continue;
            }
            for (v, bv) in b.iter().enumerate() {
                if bv.is_zero() {
                    continue;
                }
                let f = au.clone() * bv.clone();
                for (k, c) in self.mul_basis(u, v) {
                    out[*k] = out[*k].clone() + f.clone() * c.clone();
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `a` (column j = a·x_j).
    pub fn left_mult_matrix(&self, a: &[F]) -> Matrix<F> {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, v) in self.mul_vec_basis(a, j).into_iter().enumerate() {
                if !v.is_zero() {
                    m.set(k, j, v);
                }
            }
        }
        m
    }

    /// Matrix of right multiplication by `a` (column j = x_j·a).
    pub fn right_mult_matrix(&self, a: &[F]) -> Matrix<F> {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, v) in self.mul_basis_vec(j, a).into_iter().enumerate() {
                if !v.is_zero() {
                    m.set(k, j, v);
                }
            }
        }
        m
    }
}

/// Basis of `{x ∈ A : x·s = s·x for all s in the subset}`; with the full
/// basis as subset this is the center Z(A).
pub fn centralizer<F: Field>(algebra: &FDAlgebra<F>, subset: &[Vec<F>]) -> Vec<Vec<F>> {
    let d = algebra.dim();
    let mut reducer = RowReducer::new(d);
    for s in subset {
        let l = algebra.left_mult_matrix(s);
        let r = algebra.right_mult_matrix(s);
        for row in 0..d {
            let diff: Vec<F> = (0..d)
                .map(|c| l.get(row, c).clone() - r.get(row, c).clone())
                .collect();
            reducer.insert(to_sparse(&diff));
        }
    }
    reducer.nullspace_basis()
}

/// A unital extension B ⊆ A with lazily computed invariants.
pub struct Extension<F: Field> {
    algebra: FDAlgebra<F>,
    /// Echelon-normalized basis of B (deterministic).
    b_basis: Vec<Vec<F>>,
    r_basis: Vec<Vec<F>>,
    z_basis: Vec<Vec<F>>,
    b_reducer: RowReducer<F>,
    tensor: OnceLock<TensorSquare<F>>,
    t_basis: OnceLock<Vec<Vec<F>>>,
    casimir_basis: OnceLock<Vec<Vec<F>>>,
    t_prime_basis: OnceLock<Vec<Vec<F>>>,
    s_basis: OnceLock<Vec<Matrix<F>>>,
    a_hat: OnceLock<Vec<(Matrix<F>, Vec<F>)>>,
}

impl<F: Field> Extension<F> {
    /// Verifies that the span of `b_vectors` is a unital subalgebra and
    /// precomputes R = C_A(B) and Z(A).
    pub fn new(algebra: FDAlgebra<F>, b_vectors: &[Vec<F>]) -> Result<Self, AlgebraError> {
        let d = algebra.dim();
        let mut b_reducer = RowReducer::new(d);
        for v in b_vectors {
            assert_eq!(v.len(), d, "subalgebra vector of wrong length");
            b_reducer.insert(to_sparse(v));
        }
        if !b_reducer.contains(to_sparse(algebra.unit())) {
            return Err(AlgebraError::UnitMissing);
        }
        // Canonical echelon basis of span(B), in pivot order.
        let b_basis = b_echelon_rows(&b_reducer, d);
        for x in &b_basis {
            for y in &b_basis {
                let prod = algebra.mul_vec(x, y);
                if !b_reducer.contains(to_sparse(&prod)) {
                    return Err(AlgebraError::NotClosed);
                }
            }
        }
        let r_basis = centralizer(&algebra, &b_basis);
        let all_basis: Vec<Vec<F>> = (0..d).map(|i| algebra.basis_vec(i)).collect();
        let z_basis = centralizer(&algebra, &all_basis);
        Ok(Extension {
            algebra,
            b_basis,
            r_basis,
            z_basis,
            b_reducer,
            tensor: OnceLock::new(),
            t_basis: OnceLock::new(),
            casimir_basis: OnceLock::new(),
            t_prime_basis: OnceLock::new(),
            s_basis: OnceLock::new(),
            a_hat: OnceLock::new(),
        })
    }

    /// Self-extension A ⊆ A.
    pub fn self_extension(algebra: FDAlgebra<F>) -> Self {
        let basis: Vec<Vec<F>> = (0..algebra.dim()).map(|i| algebra.basis_vec(i)).collect();
        Extension::new(algebra, &basis).expect("self extension is valid")
    }

    pub fn algebra(&self) -> &FDAlgebra<F> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn b_basis(&self) -> &[Vec<F>] {
        &self.b_basis
    }

    pub fn dim_b(&self) -> usize {
        self.b_basis.len()
    }

    /// Basis of the centralizer R = C_A(B).
    pub fn r_basis(&self) -> &[Vec<F>] {
        &self.r_basis
    }

    /// Basis of the center Z(A).
    pub fn z_basis(&self) -> &[Vec<F>] {
        &self.z_basis
    }

    pub fn contains_in_b(&self, v: &[F]) -> bool {
        self.b_reducer.contains(to_sparse(v))
    }

    /// Canonical reduction of `v` modulo span(B); zero iff `v ∈ B`.
    pub fn reduce_mod_b(&self, v: &[F]) -> SparseVec<F> {
        self.b_reducer.reduce(to_sparse(v))
    }
}

/// Extracts the normalized echelon rows out of a reducer by probing each
/// pivot coordinate: the row space contains `e_p − reduce(e_p)` for each
/// pivot p, and these form a canonical basis of the span.
fn b_echelon_rows<F: Field>(reducer: &RowReducer<F>, dim: usize) -> Vec<Vec<F>> {
    let mut rows = Vec::new();
    for p in reducer.pivots() {
        let mut probe = vec![F::zero(); dim];
        probe[p] = F::one();
        let tail = reducer.reduce(to_sparse(&probe));
        let mut row = vec![F::zero(); dim];
        row[p] = F::one();
        for (idx, val) in tail {
            row[idx] = row[idx].clone() - val;
        }
        rows.push(row);
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, Rational};

    #[test]
    fn matrix_algebra_validates() {
        let a = matrix_algebra::<Rational>(2);
        assert_eq!(a.dim(), 4);
        // e11·e12 = e12
        let prod = a.mul_vec(&a.basis_vec(0), &a.basis_vec(1));
        assert_eq!(prod, a.basis_vec(1));
    }

    #[test]
    fn bad_structure_constants_are_rejected() {
        // dim 2 with x·x = x for both basis vectors but broken unit
        let one = || Rational::from(rat(1, 1));
        let table = vec![
            vec![(0usize, one())],
            vec![],
            vec![],
            vec![(0usize, one())], // x1·x1 = x0: not associative with the rest
        ];
        let labels = vec!["a".into(), "b".into()];
        let unit = vec![one(), Rational::from(rat(0, 1))];
        assert!(FDAlgebra::new(labels, table, unit).is_err());
    }

    #[test]
    fn triangular_centralizer_is_the_diagonal() {
        let ext = triangular_extension_over_diagonal::<Rational>(2);
        assert_eq!(ext.dim(), 3);
        assert_eq!(ext.dim_b(), 2);
        // R = B for the triangular extension
        assert_eq!(ext.r_basis().len(), 2);
        for r in ext.r_basis() {
            assert!(ext.contains_in_b(r));
        }
        // Z(A) is the scalars
        assert_eq!(ext.z_basis().len(), 1);
    }

    #[test]
    fn center_of_full_matrix_algebra_is_scalar() {
        let a = matrix_algebra::<Rational>(2);
        let all: Vec<Vec<Rational>> = (0..4).map(|i| a.basis_vec(i)).collect();
        assert_eq!(centralizer(&a, &all).len(), 1);
    }

    #[test]
    fn group_algebra_centralizers() {
        use crate::perm::{symmetric_group, Permutation, SubgroupEmbedding};
        use std::sync::Arc;
        let g = Arc::new(symmetric_group(3));
        let s2 = SubgroupEmbedding::generated(
            g.clone(),
            &[Permutation::from_cycles(3, &[vec![0, 1]]).unwrap()],
        )
        .unwrap();
        let ext = group_algebra_extension::<Rational>(&s2);
        assert_eq!(ext.dim(), 6);
        assert_eq!(ext.dim_b(), 2);
        // C_{QS3}(QS2) is spanned by the 4 orbit sums of conjugation by (01):
        // {e}, {(01)}, {(02),(12)}, {(012),(021)}
        assert_eq!(ext.r_basis().len(), 4);
        // Z(QS3) = class sums: dimension 3
        assert_eq!(ext.z_basis().len(), 3);
        // self extension: R = Z
        let whole = SubgroupEmbedding::new(g.clone(), g.clone()).unwrap();
        let self_ext = group_algebra_extension::<Rational>(&whole);
        assert_eq!(self_ext.r_basis().len(), 3);
    }

    #[test]
    fn extension_rejects_non_subalgebras() {
        let a = matrix_algebra::<Rational>(2);
        // span{1, e12 + e21} is not closed ((e12+e21)² = 1 is fine, but
        // span{e12} alone lacks the unit)
        let e12 = a.basis_vec(1);
        assert!(matches!(
            Extension::new(a.clone(), &[e12]),
            Err(AlgebraError::UnitMissing)
        ));
        // span{1, e12, e21} is not closed (e12·e21 = e11 escapes)
        let unit = a.unit().to_vec();
        let bad = Extension::new(a.clone(), &[unit.clone(), a.basis_vec(1), a.basis_vec(2)]);
        assert!(matches!(bad, Err(AlgebraError::NotClosed)));
        let good = Extension::new(a, &[unit, matrix_algebra::<Rational>(2).basis_vec(0)]);
        assert!(good.is_ok());
    }
}
