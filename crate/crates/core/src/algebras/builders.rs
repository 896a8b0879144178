//! Stock algebras and extensions: matrix and triangular algebras over their
//! diagonals/scalars, direct products Kⁿ, dual numbers, and group algebras
//! over subgroup algebras.

use super::{AlgebraError, Extension, FDAlgebra};
use crate::exact::reducer::SparseVec;
use crate::exact::Field;
use crate::perm::{PermGroup, SubgroupEmbedding};

/// Full matrix algebra M_n with basis e_{ij} (row-major).
pub fn matrix_algebra<F: Field>(n: usize) -> FDAlgebra<F> {
    let dim = n * n;
    let idx = |i: usize, j: usize| i * n + j;
    let mut labels = Vec::with_capacity(dim);
    for i in 0..n {
        for j in 0..n {
            labels.push(format!("e{}{}", i + 1, j + 1));
        }
    }
    let mut table: Vec<SparseVec<F>> = vec![Vec::new(); dim * dim];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    if j == k {
                        table[idx(i, j) * dim + idx(k, l)] = vec![(idx(i, l), F::one())];
                    }
                }
            }
        }
    }
    let mut unit = vec![F::zero(); dim];
    for i in 0..n {
        unit[idx(i, i)] = F::one();
    }
    FDAlgebra::new(labels, table, unit).expect("matrix algebra is associative")
}

/// Upper-triangular n×n matrices, basis e_{ij} for i ≤ j.
pub fn triangular_algebra<F: Field>(n: usize) -> FDAlgebra<F> {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i..n {
            pairs.push((i, j));
        }
    }
    let dim = pairs.len();
    let pos = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j)).unwrap();
    let labels: Vec<String> =
        pairs.iter().map(|&(i, j)| format!("e{}{}", i + 1, j + 1)).collect();
    let mut table: Vec<SparseVec<F>> = vec![Vec::new(); dim * dim];
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for (b, &(k, l)) in pairs.iter().enumerate() {
            if j == k {
                table[a * dim + b] = vec![(pos(i, l), F::one())];
            }
        }
    }
    let mut unit = vec![F::zero(); dim];
    for i in 0..n {
        unit[pos(i, i)] = F::one();
    }
    FDAlgebra::new(labels, table, unit).expect("triangular algebra is associative")
}

/// The diagonal subalgebra of [`triangular_algebra`] as an extension.
pub fn triangular_extension_over_diagonal<F: Field>(n: usize) -> Extension<F> {
    let alg = triangular_algebra::<F>(n);
    let mut diag = Vec::new();
    for i in 0..n {
        let label = format!("e{}{}", i + 1, i + 1);
        let idx = alg.labels().iter().position(|l| *l == label).unwrap();
        diag.push(alg.basis_vec(idx));
    }
    Extension::new(alg, &diag).expect("diagonal subalgebra embeds")
}

/// M_n over its scalars k·1.
pub fn matrix_extension_over_scalars<F: Field>(n: usize) -> Extension<F> {
    let alg = matrix_algebra::<F>(n);
    let unit = alg.unit().to_vec();
    Extension::new(alg, &[unit]).expect("scalars embed")
}

/// The direct product algebra Kⁿ with componentwise multiplication.
pub fn product_algebra<F: Field>(n: usize) -> FDAlgebra<F> {
    let labels: Vec<String> = (0..n).map(|i| format!("u{}", i + 1)).collect();
    let mut table: Vec<SparseVec<F>> = vec![Vec::new(); n * n];
    for i in 0..n {
        table[i * n + i] = vec![(i, F::one())];
    }
    let unit = vec![F::one(); n];
    FDAlgebra::new(labels, table, unit).expect("product algebra is associative")
}

/// Kⁿ over the diagonally embedded scalars K·1.
pub fn product_extension_over_scalars<F: Field>(n: usize) -> Extension<F> {
    let alg = product_algebra::<F>(n);
    let unit = alg.unit().to_vec();
    Extension::new(alg, &[unit]).expect("scalars embed")
}

/// Dual numbers `k[x]/(x²)`, basis `{1, x}`.
pub fn dual_numbers<F: Field>() -> FDAlgebra<F> {
    let labels = vec!["1".to_owned(), "x".to_owned()];
    let mut table: Vec<SparseVec<F>> = vec![Vec::new(); 4];
    table[0] = vec![(0, F::one())]; // 1·1
    table[1] = vec![(1, F::one())]; // 1·x
    table[2] = vec![(1, F::one())]; // x·1
    let unit = vec![F::one(), F::zero()];
    FDAlgebra::new(labels, table, unit).expect("dual numbers are associative")
}

/// `k[x]/(x²)` over its scalars.
pub fn dual_numbers_over_scalars<F: Field>() -> Extension<F> {
    let alg = dual_numbers::<F>();
    let unit = alg.unit().to_vec();
    Extension::new(alg, &[unit]).expect("scalars embed")
}

/// `A = k[y]/(y²) × k` over `B = k[y]/(y²)` embedded as b ↦ (b, ε(b)): the right
/// module A_B is finitely generated but not projective.
pub fn augmented_dual_numbers_extension<F: Field>() -> Extension<F> {
    // basis: u1 = (1,0), u2 = (y,0), u3 = (0,1)
    let labels = vec!["u1".to_owned(), "u2".to_owned(), "u3".to_owned()];
    let mut table: Vec<SparseVec<F>> = vec![Vec::new(); 9];
    table[0] = vec![(0, F::one())]; // u1·u1
    table[1] = vec![(1, F::one())]; // u1·u2
    table[3] = vec![(1, F::one())]; // u2·u1
    table[8] = vec![(2, F::one())]; // u3·u3
    let unit = vec![F::one(), F::zero(), F::one()];
    let alg = FDAlgebra::new(labels, table, unit).expect("associative");
    let b1 = vec![F::one(), F::zero(), F::one()]; // (1, 1)
    let b2 = vec![F::zero(), F::one(), F::zero()]; // (y, 0)
    Extension::new(alg, &[b1, b2]).expect("augmented dual numbers embed")
}

/// Group algebra of a permutation group, basis indexed by group elements in
/// enumeration order.
pub fn group_algebra<F: Field>(group: &PermGroup) -> FDAlgebra<F> {
    let n = group.order();
    let labels: Vec<String> = group.elements().iter().map(ToString::to_string).collect();
    let mut table: Vec<SparseVec<F>> = vec![Vec::new(); n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = vec![(group.mul(i, j), F::one())];
        }
    }
    let mut unit = vec![F::zero(); n];
    unit[0] = F::one();
    FDAlgebra::new(labels, table, unit).expect("group algebra is associative")
}

/// kG over kH for a subgroup embedding H ≤ G.
pub fn group_algebra_extension<F: Field>(emb: &SubgroupEmbedding) -> Extension<F> {
    let alg = group_algebra::<F>(emb.ambient());
    let b: Vec<Vec<F>> = (0..emb.subgroup().order())
        .map(|h| {
            let mut v = vec![F::zero(); alg.dim()];
            v[emb.to_ambient(h)] = F::one();
            v
        })
        .collect();
    Extension::new(alg, &b).expect("subgroup algebra embeds")
}

/// Named algebra-extension builders for the CLI: `triangular{n}`,
/// `matrix{n}`, `product` (with n), `dual`, `augmented-dual`.
pub fn extension_builder<F: Field>(
    builder: &str,
    sub: Option<&str>,
    n: Option<usize>,
) -> Result<Extension<F>, AlgebraError> {
    let pick_sub = |default: &str| sub.unwrap_or(default).to_ascii_lowercase();
    if let Some(rest) = builder.strip_prefix("triangular") {
        let size: usize = rest.parse().map_err(|_| AlgebraError::BadShape)?;
        return match pick_sub("diagonal").as_str() {
            "diagonal" => Ok(triangular_extension_over_diagonal(size)),
            "scalars" => {
                let alg = triangular_algebra::<F>(size);
                let unit = alg.unit().to_vec();
                Extension::new(alg, &[unit])
            }
            _ => Err(AlgebraError::BadShape),
        };
    }
    if let Some(rest) = builder.strip_prefix("matrix") {
        let size: usize = rest.parse().map_err(|_| AlgebraError::BadShape)?;
        return match pick_sub("scalars").as_str() {
            "scalars" => Ok(matrix_extension_over_scalars(size)),
            "diagonal" => {
                let alg = matrix_algebra::<F>(size);
                let diag: Vec<Vec<F>> = (0..size)
                    .map(|i| alg.basis_vec(i * size + i))
                    .collect();
                Extension::new(alg, &diag)
            }
            "self" => Ok(Extension::self_extension(matrix_algebra::<F>(size))),
            _ => Err(AlgebraError::BadShape),
        };
    }
    match builder {
        "product" => Ok(product_extension_over_scalars(n.ok_or(AlgebraError::BadShape)?)),
        "dual" => Ok(dual_numbers_over_scalars()),
        "augmented-dual" => Ok(augmented_dual_numbers_extension()),
        _ => Err(AlgebraError::BadShape),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;

    #[test]
    fn builder_dimensions() {
        assert_eq!(matrix_algebra::<Rational>(3).dim(), 9);
        assert_eq!(triangular_algebra::<Rational>(2).dim(), 3);
        assert_eq!(product_algebra::<Rational>(4).dim(), 4);
        assert_eq!(dual_numbers::<Rational>().dim(), 2);
    }

    #[test]
    fn augmented_dual_numbers_shape() {
        let ext = augmented_dual_numbers_extension::<Rational>();
        assert_eq!(ext.dim(), 3);
        assert_eq!(ext.dim_b(), 2);
    }

    #[test]
    fn named_builders_resolve() {
        assert!(extension_builder::<Rational>("triangular2", Some("diagonal"), None).is_ok());
        assert!(extension_builder::<Rational>("matrix2", None, None).is_ok());
        assert!(extension_builder::<Rational>("product", None, Some(3)).is_ok());
        assert!(extension_builder::<Rational>("nope", None, None).is_err());
    }
}
