//! Separability elements, H-separability systems, the symmetric-element
//! search for central base rings, and projectivity of A as a right B-module.

use super::Extension;
use crate::exact::matrix::span_membership;
use crate::exact::reducer::{to_sparse, RowReducer};
use crate::exact::{Field, Matrix, SpanSolver};

/// An H-separability system: Casimir elements eᵢ and rᵢ ∈ R with
/// `1 ⊗ 1 = Σ rᵢ·eᵢ`.
pub struct HSeparabilitySystem<F: Field> {
    /// (rᵢ as a vector of A, eᵢ in quotient coordinates).
    pub pairs: Vec<(Vec<F>, Vec<F>)>,
}

/// Outcome of the symmetric separability-element search (only meaningful
/// when B is central in A, where the tensor flip descends to A ⊗_B A).
pub struct SymmetricSeparability<F: Field> {
    pub element: Option<Vec<F>>,
    /// Dimension of the affine solution space (0 means the element is unique).
    pub solution_dim: usize,
}

impl<F: Field> Extension<F> {
    /// A separability element: e ∈ 𝒞 with μ(e) = 1, or `None` when the
    /// extension is not separable.  The returned element is checked to lie
    /// in T′, the witness for projectivity of R over T.
    pub fn separability_element(&self) -> Option<Vec<F>> {
        let casimir = self.casimir_space();
        if casimir.is_empty() {
            return None;
        }
        let images: Vec<Vec<F>> = casimir.iter().map(|e| self.mu(e)).collect();
        let unit = self.algebra().unit().to_vec();
        let coeffs = span_membership(&images, &unit)?;
        let qdim = self.tensor_square().dim();
        let mut e = vec![F::zero(); qdim];
        for (v, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, x) in casimir[v].iter().enumerate() {
                e[k] = e[k].clone() + c.clone() * x.clone();
            }
        }
        debug_assert_eq!(self.mu(&e), unit);
        debug_assert!(self.is_in_t_prime(&e), "separability elements lie in T′");
        Some(e)
    }

    /// Verifies that a quotient vector is a separability element.
    pub fn is_separability_element(&self, e: &[F]) -> bool {
        if self.mu(e) != self.algebra().unit().to_vec() {
            return false;
        }
        // A-centrality: a·e = e·a for every basis element.
        for u in 0..self.dim() {
            if self.tensor_left_mul_basis(u, e) != self.tensor_right_mul_basis(u, e) {
                return false;
            }
        }
        true
    }

    /// Searches for a symmetric separability element (flip-invariant).  Only
    /// valid when B ⊆ Z(A); returns `None` outside that case.
    pub fn symmetric_separability(&self) -> Option<SymmetricSeparability<F>> {
        // B central in A?
        for b in self.b_basis() {
            for u in 0..self.dim() {
                let left = self.algebra().mul_basis_vec(u, b);
                let right = self.algebra().mul_vec_basis(b, u);
                if left != right {
                    return None;
                }
            }
        }
        let tsq = self.tensor_square();
        let qdim = tsq.dim();
        let casimir = self.casimir_space();
        // flip on quotient coordinates: e_{(i,j)} ↦ e_{(j,i)}
        let flip = |q: &[F]| -> Vec<F> {
            let mut acc = vec![F::zero(); qdim];
            for (i, j, coeff) in tsq.section_pairs(q) {
                for (out, val) in tsq.pair_projection(j, i) {
                    acc[*out] = acc[*out].clone() + coeff.clone() * val.clone();
                }
            }
            acc
        };
        // Solve: e = Σ λ_v C_v, μ(e) = 1, flip(e) = e.
        let d = self.dim();
        let rows = d + qdim;
        let mut m: Matrix<F> = Matrix::zeros(rows, casimir.len());
        let mut rhs = vec![F::zero(); rows];
        for (k, u) in self.algebra().unit().iter().enumerate() {
            rhs[k] = u.clone();
        }
        for (v, c_v) in casimir.iter().enumerate() {
            for (k, x) in self.mu(c_v).into_iter().enumerate() {
                m.set(k, v, x);
            }
            let flipped = flip(c_v);
            for k in 0..qdim {
                m.set(d + k, v, c_v[k].clone() - flipped[k].clone());
            }
        }
        match m.solve(&rhs) {
            None => Some(SymmetricSeparability { element: None, solution_dim: 0 }),
            Some(sol) => {
                let mut e = vec![F::zero(); qdim];
                for (v, c) in sol.particular.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (k, x) in casimir[v].iter().enumerate() {
                        e[k] = e[k].clone() + c.clone() * x.clone();
                    }
                }
                // The affine dimension counts nullspace directions that give
                // distinct tensors (the coefficient nullspace could include
                // combinations collapsing to the same element of 𝒞 only if
                // the Casimir basis were dependent, which it is not).
                Some(SymmetricSeparability { element: Some(e), solution_dim: sol.nullspace.len() })
            }
        }
    }

    /// Decides H-separability: does `1 ⊗ 1` lie in the span of r·e over
    /// R × 𝒞?  Coefficients absorb into the R factor, so span membership
    /// yields an explicit system.
    pub fn h_separability_test(&self) -> Option<HSeparabilitySystem<F>> {
        let r_basis = self.r_basis().to_vec();
        let casimir = self.casimir_space().to_vec();
        let qdim = self.tensor_square().dim();
        let mut solver = SpanSolver::new(qdim);
        for r in &r_basis {
            for e in &casimir {
                solver.insert(to_sparse(&self.tensor_left_mul(r, e)));
            }
        }
        let coeffs = solver.express(to_sparse(&self.one_tensor_one()))?;
        // Group by Casimir index; fold coefficients into R.
        let mut r_parts: Vec<Vec<F>> = vec![vec![F::zero(); self.dim()]; casimir.len()];
        for (flat, c) in coeffs {
            let (ri, ei) = (flat / casimir.len(), flat % casimir.len());
            for (k, v) in r_basis[ri].iter().enumerate() {
                r_parts[ei][k] = r_parts[ei][k].clone() + c.clone() * v.clone();
            }
        }
        let pairs: Vec<(Vec<F>, Vec<F>)> = r_parts
            .into_iter()
            .zip(casimir.iter().cloned())
            .filter(|(r, _)| r.iter().any(|v| !v.is_zero()))
            .collect();
        // Verify Σ rᵢ·eᵢ = 1⊗1 exactly.
        let mut acc = vec![F::zero(); qdim];
        for (r, e) in &pairs {
            for (k, v) in self.tensor_left_mul(r, e).into_iter().enumerate() {
                acc[k] = acc[k].clone() + v;
            }
        }
        assert_eq!(acc, self.one_tensor_one(), "H-separability system must verify");
        Some(HSeparabilitySystem { pairs })
    }

    /// Whether A is finitely generated projective as a right B-module:
    /// searches for maps φᵢ ∈ Hom(A_B, B_B) with Σ xᵢ·φᵢ(a) = a over the
    /// basis xᵢ of A (a projective/dual basis).
    pub fn projectivity_test(&self) -> bool {
        let d = self.dim();
        let hom = self.hom_a_b();
        if hom.is_empty() {
            return false;
        }
        let h = hom.len();
        // Unknowns c[i][v]: φ_i = Σ_v c[i][v]·H_v; equations per (a, coord).
        let mut m: Matrix<F> = Matrix::zeros(d * d, d * h);
        let mut rhs = vec![F::zero(); d * d];
        for a in 0..d {
            rhs[a * d + a] = F::one();
            for i in 0..d {
                for (v, h_v) in hom.iter().enumerate() {
                    // x_i · H_v(x_a)
                    let img: Vec<F> = (0..d).map(|k| h_v.get(k, a).clone()).collect();
                    let prod = self.algebra().mul_basis_vec(i, &img);
                    for (coord, val) in prod.into_iter().enumerate() {
                        if !val.is_zero() {
                            let col = i * h + v;
                            let row = a * d + coord;
                            let t = m.get(row, col).clone() + val;
                            m.set(row, col, t);
                        }
                    }
                }
            }
        }
        m.solve(&rhs).is_some()
    }

    /// Basis of Hom(A_B, B_B): right-B-linear maps A → B (as matrices).
    pub fn hom_a_b(&self) -> Vec<Matrix<F>> {
        let d = self.dim();
        let flat = |r: usize, c: usize| r * d + c;
        let mut reducer = RowReducer::new(d * d);
        // Right linearity: F·R_b − R_b·F = 0 for every b.
        for b in self.b_basis() {
            let action = self.algebra().right_mult_matrix(b);
            for i in 0..d {
                for j in 0..d {
                    let mut row: Vec<(usize, F)> = Vec::new();
                    for k in 0..d {
                        let v = action.get(k, j);
                        if !v.is_zero() {
                            row.push((flat(i, k), v.clone()));
                        }
                    }
                    for mm in 0..d {
                        let v = action.get(i, mm);
                        if !v.is_zero() {
                            row.push((flat(mm, j), -v.clone()));
                        }
                    }
                    row.sort_by_key(|e| e.0);
                    let mut merged: Vec<(usize, F)> = Vec::with_capacity(row.len());
                    for (idx, val) in row {
                        match merged.last_mut() {
                            Some((last, acc)) if *last == idx => *acc = acc.clone() + val,
                            _ => merged.push((idx, val)),
                        }
                    }
                    merged.retain(|(_, v)| !v.is_zero());
                    reducer.insert(merged);
                }
            }
        }
        // Image in B: the reduction of every column mod span(B) vanishes.
        let lin_basis = reducer.nullspace_basis();
        let mut im_reducer = RowReducer::new(lin_basis.len());
        let residuals: Vec<Vec<crate::exact::SparseVec<F>>> = lin_basis
            .iter()
            .map(|flat_vec| {
                (0..d)
                    .map(|j| {
                        let col: Vec<F> = (0..d).map(|i| flat_vec[flat(i, j)].clone()).collect();
                        self.reduce_mod_b(&col)
                    })
                    .collect()
            })
            .collect();
        for j in 0..d {
            let mut coords: Vec<usize> = residuals
                .iter()
                .flat_map(|per_col| per_col[j].iter().map(|(c, _)| *c))
                .collect();
            coords.sort_unstable();
            coords.dedup();
            for coord in coords {
                let row: Vec<(usize, F)> = residuals
                    .iter()
                    .enumerate()
                    .filter_map(|(v, per_col)| {
                        per_col[j]
                            .iter()
                            .find(|(c, _)| *c == coord)
                            .map(|(_, val)| (v, val.clone()))
                    })
                    .collect();
                im_reducer.insert(row);
            }
        }
        im_reducer
            .nullspace_basis()
            .into_iter()
            .map(|coords| {
                let mut m: Matrix<F> = Matrix::zeros(d, d);
                for (v, c) in coords.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for pos in 0..d * d {
                        let add = c.clone() * lin_basis[v][pos].clone();
                        if !add.is_zero() {
                            let t = m.get(pos / d, pos % d).clone() + add;
                            m.set(pos / d, pos % d, t);
                        }
                    }
                }
                m
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::super::builders::*;
    use super::*;
    use crate::exact::rat;
    use crate::exact::Rational;
    use crate::perm::{symmetric_group, Permutation, SubgroupEmbedding};
    use num_traits::Zero;
    use std::sync::Arc;

    #[test]
    fn matrix_algebra_separability_elements() {
        let ext = matrix_extension_over_scalars::<Rational>(2);
        let e = ext.separability_element().expect("matrix algebras are separable");
        assert!(ext.is_separability_element(&e));
        // Each column element Σ_i e_{ij} ⊗ e_{ji} is a separability element.
        let n = 2;
        for j in 0..n {
            let mut q = vec![Rational::zero(); ext.tensor_square().dim()];
            for i in 0..n {
                let a = ext.algebra().basis_vec(i * n + j);
                let b = ext.algebra().basis_vec(j * n + i);
                for (k, v) in ext.tensor_of(&a, &b).into_iter().enumerate() {
                    q[k] = q[k].clone() + v;
                }
            }
            assert!(ext.is_separability_element(&q));
            assert!(ext.is_in_t_prime(&q));
        }
    }

    #[test]
    fn unique_symmetric_separability_element_of_m2() {
        let ext = matrix_extension_over_scalars::<Rational>(2);
        let sym = ext.symmetric_separability().expect("scalars are central");
        let e = sym.element.expect("symmetric element exists");
        assert_eq!(sym.solution_dim, 0, "symmetric separability element is unique");
        // equals (1/n) Σ_{ij} e_ij ⊗ e_ji with n = 2
        let n = 2usize;
        let mut expected = vec![Rational::zero(); ext.tensor_square().dim()];
        for i in 0..n {
            for j in 0..n {
                let a = ext.algebra().basis_vec(i * n + j);
                let b = ext.algebra().basis_vec(j * n + i);
                for (k, v) in ext.tensor_of(&a, &b).into_iter().enumerate() {
                    expected[k] = expected[k].clone() + v * rat(1, 2);
                }
            }
        }
        assert_eq!(e, expected);
    }

    #[test]
    fn dual_numbers_are_not_separable() {
        let ext = dual_numbers_over_scalars::<Rational>();
        assert!(ext.separability_element().is_none());
    }

    #[test]
    fn self_extension_separability() {
        let ext = super::super::Extension::self_extension(product_algebra::<Rational>(2));
        let e = ext.separability_element().expect("self extension is separable");
        assert_eq!(e, ext.one_tensor_one());
        // commutative self extension: H-separability system {(1, 1⊗1)}
        let sys = ext.h_separability_test().expect("commutative self extension");
        assert!(!sys.pairs.is_empty());
    }

    #[test]
    fn sugano_separation_on_products() {
        let ext = product_extension_over_scalars::<Rational>(2);
        assert!(ext.separability_element().is_some());
        assert!(ext.h_separability_test().is_none());
        let m2 = matrix_extension_over_scalars::<Rational>(2);
        assert!(m2.h_separability_test().is_some());
    }

    #[test]
    fn h_separability_system_yields_separability_element() {
        // From 1⊗1 = Σ rᵢ·eᵢ, the element Σ eᵢ¹ ⊗ rᵢeᵢ² is Casimir with a
        // central multiplicative image; normalizing by that unit gives a
        // separability element.
        let ext = matrix_extension_over_scalars::<Rational>(2);
        assert!(ext.separability_element().is_some(), "H-separable forces separable");
        let system = ext.h_separability_test().expect("M2 is H-separable");
        let tsq = ext.tensor_square();
        let mut e = vec![Rational::zero(); tsq.dim()];
        for (r, e_i) in &system.pairs {
            for (p, q, coeff) in tsq.section_pairs(e_i) {
                // e_i¹ ⊗ r·e_i²
                let second = ext.algebra().mul_vec_basis(r, q);
                let first = ext.algebra().basis_vec(p);
                for (k, v) in ext.tensor_of(&first, &second).into_iter().enumerate() {
                    e[k] = e[k].clone() + coeff.clone() * v;
                }
            }
        }
        for u in 0..ext.dim() {
            assert_eq!(
                ext.tensor_left_mul_basis(u, &e),
                ext.tensor_right_mul_basis(u, &e),
                "constructed element is Casimir"
            );
        }
        let z = ext.mu(&e);
        assert!(
            crate::exact::matrix::span_membership(&ext.z_basis().to_vec(), &z).is_some(),
            "μ of a Casimir element is central"
        );
        // scale by the central inverse of z
        let z_inv = {
            let lm = ext.algebra().left_mult_matrix(&z);
            lm.solve(ext.algebra().unit()).expect("z is invertible").particular
        };
        let scaled = ext.tensor_left_mul(&z_inv, &e);
        assert!(ext.is_separability_element(&scaled));
    }

    #[test]
    fn group_algebra_separability() {
        let g = Arc::new(symmetric_group(3));
        let a3 = SubgroupEmbedding::generated(
            g.clone(),
            &[Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap()],
        )
        .unwrap();
        let ext = group_algebra_extension::<Rational>(&a3);
        let e = ext.separability_element().expect("index 2 invertible");
        assert!(ext.is_separability_element(&e));
        assert!(ext.is_in_t_prime(&e));
    }

    #[test]
    fn projectivity_examples() {
        let g = Arc::new(symmetric_group(3));
        let s2 = SubgroupEmbedding::generated(
            g.clone(),
            &[Permutation::from_cycles(3, &[vec![0, 1]]).unwrap()],
        )
        .unwrap();
        assert!(group_algebra_extension::<Rational>(&s2).projectivity_test());
        assert!(triangular_extension_over_diagonal::<Rational>(2).projectivity_test());
        assert!(dual_numbers_over_scalars::<Rational>().projectivity_test());
        // the augmented dual-numbers module is not projective
        assert!(!augmented_dual_numbers_extension::<Rational>().projectivity_test());
    }
}
