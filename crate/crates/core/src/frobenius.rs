//! Frobenius extensions: the rank-one necessary conditions, the Morita
//! pairings Ψ and Φ on Â and the Casimir module, and the trace-ideal
//! certification that extracts an explicit Frobenius system.

use serde::Serialize;

use crate::algebras::Extension;
use crate::exact::matrix::span_membership;
use crate::exact::reducer::to_sparse;
use crate::exact::{Field, Matrix, SpanSolver};

/// A Frobenius homomorphism with dual bases:
/// `Σ xᵢ·E(yᵢ·a) = a = Σ E(a·xᵢ)·yᵢ` for all a.
pub struct FrobeniusSystem<F: Field> {
    /// E ∈ Â as an endomorphism matrix (values in B).
    pub homomorphism: Matrix<F>,
    pub x: Vec<Vec<F>>,
    pub y: Vec<Vec<F>>,
}

/// Images and surjectivity of Ψ(F ⊗ e) = e¹F(e²) and Φ(e ⊗ F) = F(e¹)e²,
/// with pure-tensor witnesses when they exist.
pub struct MoritaPairingReport<F: Field> {
    pub dim_im_psi: usize,
    pub dim_im_phi: usize,
    pub psi_surjective: bool,
    pub phi_surjective: bool,
    /// (E, e) with Ψ(E ⊗ e) = 1, when found.
    pub psi_witness: Option<(Matrix<F>, Vec<F>)>,
    /// (F, f) with Φ(f ⊗ F) = 1, when found.
    pub phi_witness: Option<(Matrix<F>, Vec<F>)>,
}

/// Dimension screen from the rank-one freeness of Â and 𝒞 over R.
#[derive(Clone, Debug, Serialize)]
pub struct RankOneChecks {
    pub dim_a_hat: usize,
    pub dim_casimir: usize,
    pub dim_r: usize,
    pub pass: bool,
}

/// Verdict of the trace-ideal Frobenius test.
pub enum FrobeniusVerdict<F: Field> {
    Certified(FrobeniusSystem<F>),
    NotFrobenius { reason: String },
    Inconclusive { reason: String },
}

/// Ψ(F ⊗ e) = e¹·F(e²) for F ∈ Â, e ∈ 𝒞 (summation over the lift of e).
pub fn psi<F: Field>(ext: &Extension<F>, f: &Matrix<F>, e: &[F]) -> Vec<F> {
    let tsq = ext.tensor_square();
    let d = ext.dim();
    let mut acc = vec![F::zero(); d];
    for (p, q, coeff) in tsq.section_pairs(e) {
        // x_p · F(x_q)
        let img: Vec<F> = (0..d).map(|i| f.get(i, q).clone()).collect();
        for (k, v) in ext.algebra().mul_basis_vec(p, &img).into_iter().enumerate() {
            if !v.is_zero() {
                acc[k] = acc[k].clone() + coeff.clone() * v;
            }
        }
    }
    acc
}

/// Φ(e ⊗ F) = F(e¹)·e².
pub fn phi<F: Field>(ext: &Extension<F>, e: &[F], f: &Matrix<F>) -> Vec<F> {
    let tsq = ext.tensor_square();
    let d = ext.dim();
    let mut acc = vec![F::zero(); d];
    for (p, q, coeff) in tsq.section_pairs(e) {
        // F(x_p) · x_q
        let img: Vec<F> = (0..d).map(|i| f.get(i, p).clone()).collect();
        for (k, v) in ext.algebra().mul_vec_basis(&img, q).into_iter().enumerate() {
            if !v.is_zero() {
                acc[k] = acc[k].clone() + coeff.clone() * v;
            }
        }
    }
    acc
}

/// Dimension screen: a Frobenius extension has dim Â = dim 𝒞 = dim R.
pub fn rank_one_checks<F: Field>(ext: &Extension<F>) -> RankOneChecks {
    let dim_a_hat = ext.a_hat_space().len();
    let dim_casimir = ext.casimir_space().len();
    let dim_r = ext.r_basis().len();
    RankOneChecks { dim_a_hat, dim_casimir, dim_r, pass: dim_a_hat == dim_r && dim_casimir == dim_r }
}

/// Computes the images of Ψ and Φ as subspaces of R, decides surjectivity
/// (membership of 1, since the images are two-sided ideals of R), verifies
/// the ideal property and the Morita associativity squares, and searches for
/// pure-tensor witnesses.
pub fn morita_pairings<F: Field>(ext: &Extension<F>) -> MoritaPairingReport<F> {
    let d = ext.dim();
    let a_hat: Vec<Matrix<F>> = ext.a_hat_space().iter().map(|(m, _)| m.clone()).collect();
    let casimir = ext.casimir_space().to_vec();
    let unit = ext.algebra().unit().to_vec();

    let mut psi_span = SpanSolver::new(d);
    let mut phi_span = SpanSolver::new(d);
    let mut psi_values = Vec::new();
    let mut phi_values = Vec::new();
    for f in &a_hat {
        for e in &casimir {
            let pv = psi(ext, f, e);
            let fv = phi(ext, e, f);
            debug_assert!(ext.is_in_r(&pv), "Ψ lands in R");
            debug_assert!(ext.is_in_r(&fv), "Φ lands in R");
            psi_span.insert(to_sparse(&pv));
            phi_span.insert(to_sparse(&fv));
            psi_values.push(pv);
            phi_values.push(fv);
        }
    }
    let psi_surjective = psi_span.express(to_sparse(&unit)).is_some();
    let phi_surjective = phi_span.express(to_sparse(&unit)).is_some();

    // Ideal closure of the images under R-multiplication (exactness check).
    for values in [&psi_values, &phi_values] {
        let span: Vec<Vec<F>> = values.clone();
        for v in values.iter() {
            for r in ext.r_basis() {
                let left = ext.algebra().mul_vec(r, v);
                let right = ext.algebra().mul_vec(v, r);
                assert!(
                    span_membership(&span, &left).is_some()
                        && span_membership(&span, &right).is_some(),
                    "pairing image must be a two-sided ideal of R"
                );
            }
        }
    }

    // Pure witnesses: for a fixed Casimir basis element solve linearly in Â
    // (and symmetrically), then try small deterministic combinations.
    let psi_witness = find_pure_witness(ext, &a_hat, &casimir, &unit, true);
    let phi_witness = find_pure_witness(ext, &a_hat, &casimir, &unit, false);

    MoritaPairingReport {
        dim_im_psi: psi_span.rank(),
        dim_im_phi: phi_span.rank(),
        psi_surjective,
        phi_surjective,
        psi_witness,
        phi_witness,
    }
}

/// Small deterministic linear-congruential generator for candidate weights;
/// the search stays reproducible across runs.
struct WeightRng(u64);

impl WeightRng {
    fn new(seed: u64) -> Self {
        WeightRng(seed)
    }

    /// Next weight in 1..=13 (never zero, to keep supports full).
    fn next_weight(&mut self) -> i64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((self.0 >> 33) % 13 + 1) as i64
    }

    fn combo<F: Field>(&mut self, basis: &[Vec<F>], len: usize) -> Vec<F> {
        let mut acc = vec![F::zero(); len];
        for b in basis {
            let w = F::from_integer(self.next_weight());
            for (k, v) in b.iter().enumerate() {
                acc[k] = acc[k].clone() + w.clone() * v.clone();
            }
        }
        acc
    }
}

/// Bound on the deterministic randomized searches; the valid candidates form
/// the nonvanishing locus of a determinant polynomial, so a handful of
/// pseudorandom weight vectors finds one whenever one exists in practice.
const SEARCH_SAMPLES: usize = 48;

/// Searches for (F, e) with pairing(F, e) = 1 where the pairing is Ψ when
/// `use_psi` and Φ otherwise.  For each candidate e (Casimir basis vectors,
/// the all-ones sum, then pseudorandom combinations), solving for F is
/// linear.
fn find_pure_witness<F: Field>(
    ext: &Extension<F>,
    a_hat: &[Matrix<F>],
    casimir: &[Vec<F>],
    unit: &[F],
    use_psi: bool,
) -> Option<(Matrix<F>, Vec<F>)> {
    if a_hat.is_empty() || casimir.is_empty() {
        return None;
    }
    let qdim = ext.tensor_square().dim();
    let mut candidates: Vec<Vec<F>> = casimir.to_vec();
    {
        let mut all_ones = vec![F::zero(); qdim];
        for e in casimir {
            for (k, v) in e.iter().enumerate() {
                all_ones[k] = all_ones[k].clone() + v.clone();
            }
        }
        candidates.push(all_ones);
    }
    let mut rng = WeightRng::new(if use_psi { 0x5eed_0001 } else { 0x5eed_0002 });
    for _ in 0..SEARCH_SAMPLES {
        candidates.push(rng.combo(casimir, qdim));
    }
    for e in candidates {
        // Solve Σ_v λ_v pairing(F_v, e) = 1.
        let images: Vec<Vec<F>> = a_hat
            .iter()
            .map(|f| if use_psi { psi(ext, f, &e) } else { phi(ext, &e, f) })
            .collect();
        if let Some(coeffs) = span_membership(&images, &unit.to_vec()) {
            let d = ext.dim();
            let mut fm: Matrix<F> = Matrix::zeros(d, d);
            for (v, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for i in 0..d {
                    for j in 0..d {
                        let add = c.clone() * a_hat[v].get(i, j).clone();
                        if !add.is_zero() {
                            let t = fm.get(i, j).clone() + add;
                            fm.set(i, j, t);
                        }
                    }
                }
            }
            return Some((fm, e));
        }
    }
    None
}

/// A conditional expectation: E ∈ Â restricting to the identity on B, or
/// `None` (existence defines a split extension).
pub fn conditional_expectation<F: Field>(ext: &Extension<F>) -> Option<Matrix<F>> {
    let a_hat = ext.a_hat_space();
    if a_hat.is_empty() {
        return None;
    }
    let d = ext.dim();
    // Affine system: Σ_v λ_v·F_v(b) = b for every b in the B basis.
    let rows = ext.b_basis().len() * d;
    let mut m: Matrix<F> = Matrix::zeros(rows, a_hat.len());
    let mut rhs = vec![F::zero(); rows];
    for (bi, b) in ext.b_basis().iter().enumerate() {
        for (k, v) in b.iter().enumerate() {
            rhs[bi * d + k] = v.clone();
        }
        for (v, (f, _)) in a_hat.iter().enumerate() {
            for (k, val) in f.mul_vec(b).into_iter().enumerate() {
                if !val.is_zero() {
                    m.set(bi * d + k, v, val);
                }
            }
        }
    }
    let sol = m.solve(&rhs)?;
    let mut e: Matrix<F> = Matrix::zeros(d, d);
    for (v, c) in sol.particular.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for i in 0..d {
            for j in 0..d {
                let add = c.clone() * a_hat[v].0.get(i, j).clone();
                if !add.is_zero() {
                    let t = e.get(i, j).clone() + add;
                    e.set(i, j, t);
                }
            }
        }
    }
    Some(e)
}

/// Attempts to extract dual bases for a candidate Frobenius homomorphism E:
/// solves `Σᵢ xᵢ·E(yᵢ·a) = a` with xᵢ the algebra basis, then verifies both
/// halves exhaustively and the Casimir property of Σ xᵢ ⊗ yᵢ.
pub fn dual_bases_for<F: Field>(
    ext: &Extension<F>,
    e_hom: &Matrix<F>,
) -> Option<FrobeniusSystem<F>> {
    let d = ext.dim();
    // Unknowns y_i (d vectors of length d): rows indexed by (a, coord).
    let mut m: Matrix<F> = Matrix::zeros(d * d, d * d);
    let mut rhs = vec![F::zero(); d * d];
    for a in 0..d {
        rhs[a * d + a] = F::one();
        for i in 0..d {
            for yj in 0..d {
                // coefficient of y_i[yj] in Σ_i x_i·E(x_{yj}·x_a)
                let prod = ext.algebra().mul_basis(yj, a).clone();
                let mut e_img = vec![F::zero(); d];
                for (k, v) in prod {
                    for r in 0..d {
                        let add = v.clone() * e_hom.get(r, k).clone();
                        if !add.is_zero() {
                            e_img[r] = e_img[r].clone() + add;
                        }
                    }
                }
                let x_e = ext.algebra().mul_basis_vec(i, &e_img);
                for (coord, val) in x_e.into_iter().enumerate() {
                    if !val.is_zero() {
                        let row = a * d + coord;
                        let col = i * d + yj;
                        let t = m.get(row, col).clone() + val;
                        m.set(row, col, t);
                    }
                }
            }
        }
    }
    let sol = m.solve(&rhs)?;
    let x: Vec<Vec<F>> = (0..d).map(|i| ext.algebra().basis_vec(i)).collect();
    let y: Vec<Vec<F>> = (0..d).map(|i| sol.particular[i * d..(i + 1) * d].to_vec()).collect();
    let system =
        FrobeniusSystem { homomorphism: e_hom.clone(), x, y };
    if verify_frobenius_system(ext, &system) {
        Some(system)
    } else {
        None
    }
}

/// Exhaustive check of both halves of the dual-basis equation on every
/// algebra basis element, plus the Casimir property of Σ xᵢ ⊗ yᵢ.
pub fn verify_frobenius_system<F: Field>(ext: &Extension<F>, sys: &FrobeniusSystem<F>) -> bool {
    let d = ext.dim();
    let e = &sys.homomorphism;
    for a in 0..d {
        let e_a = ext.algebra().basis_vec(a);
        // Σ x_i E(y_i a)
        let mut left = vec![F::zero(); d];
        // Σ E(a x_i) y_i
        let mut right = vec![F::zero(); d];
        for (xi, yi) in sys.x.iter().zip(&sys.y) {
            let ya = ext.algebra().mul_vec(yi, &e_a);
            let e_ya = e.mul_vec(&ya);
            for (k, v) in ext.algebra().mul_vec(xi, &e_ya).into_iter().enumerate() {
                left[k] = left[k].clone() + v;
            }
            let ax = ext.algebra().mul_vec(&e_a, xi);
            let e_ax = e.mul_vec(&ax);
            for (k, v) in ext.algebra().mul_vec(&e_ax, yi).into_iter().enumerate() {
                right[k] = right[k].clone() + v;
            }
        }
        if left != e_a || right != e_a {
            return false;
        }
    }
    // Σ x_i ⊗ y_i is a Casimir element.
    let mut casimir = vec![F::zero(); ext.tensor_square().dim()];
    for (xi, yi) in sys.x.iter().zip(&sys.y) {
        for (k, v) in ext.tensor_of(xi, yi).into_iter().enumerate() {
            casimir[k] = casimir[k].clone() + v;
        }
    }
    for u in 0..d {
        if ext.tensor_left_mul_basis(u, &casimir) != ext.tensor_right_mul_basis(u, &casimir) {
            return false;
        }
    }
    true
}

/// The trace-ideal Frobenius test.
///
/// Refutes on the rank-one dimension screen or a non-projective A_B;
/// certifies when both pairings are surjective and an explicit system can be
/// extracted (first through pure witnesses mirroring the constructive proof,
/// then through a bounded deterministic search over candidate E ∈ Â);
/// otherwise reports inconclusive — the surjectivity criterion is a
/// sufficient condition, not a characterization.
pub fn trace_ideal_frobenius_test<F: Field>(ext: &Extension<F>) -> FrobeniusVerdict<F> {
    let screen = rank_one_checks(ext);
    if !screen.pass {
        return FrobeniusVerdict::NotFrobenius {
            reason: format!(
                "rank-one screen failed: dim Â = {}, dim 𝒞 = {}, dim R = {}",
                screen.dim_a_hat, screen.dim_casimir, screen.dim_r
            ),
        };
    }
    if !ext.projectivity_test() {
        return FrobeniusVerdict::NotFrobenius {
            reason: "A is not finitely generated projective as a right B-module".into(),
        };
    }
    let pairings = morita_pairings(ext);
    if !(pairings.psi_surjective && pairings.phi_surjective) {
        return FrobeniusVerdict::Inconclusive {
            reason: "Morita pairings are not surjective; the trace-ideal criterion does not apply"
                .into(),
        };
    }
    // Constructive route: with witnesses (E, e) and (F, f), b = E(f¹)f² is
    // invertible in R and a ↦ E(−a) is bijective; over a field the dual
    // bases solve a linear system.
    if let (Some((e_hom, _)), Some((_, f_cas))) =
        (&pairings.psi_witness, &pairings.phi_witness)
    {
        let b = phi(ext, f_cas, e_hom); // E(f¹)·f²
        if invert_in_r(ext, &b).is_some() {
            if let Some(sys) = dual_bases_for(ext, e_hom) {
                return FrobeniusVerdict::Certified(sys);
            }
        }
    }
    // Fallback: bounded deterministic randomized search over Â for a
    // working E.
    let a_hat: Vec<Matrix<F>> = ext.a_hat_space().iter().map(|(m, _)| m.clone()).collect();
    let d = ext.dim();
    let mut candidates: Vec<Matrix<F>> = a_hat.clone();
    let mut rng = WeightRng::new(0x5eed_0003);
    for _ in 0..SEARCH_SAMPLES {
        let mut acc: Matrix<F> = Matrix::zeros(d, d);
        for f in &a_hat {
            let w = F::from_integer(rng.next_weight());
            for i in 0..d {
                for j in 0..d {
                    let add = w.clone() * f.get(i, j).clone();
                    if !add.is_zero() {
                        let t = acc.get(i, j).clone() + add;
                        acc.set(i, j, t);
                    }
                }
            }
        }
        candidates.push(acc);
    }
    for cand in candidates {
        if let Some(sys) = dual_bases_for(ext, &cand) {
            return FrobeniusVerdict::Certified(sys);
        }
    }
    FrobeniusVerdict::Inconclusive {
        reason: "pairings surjective but no Frobenius homomorphism found in the bounded search"
            .into(),
    }
}

/// Inverts b inside R (solves bx = 1 with x ∈ R), then verifies xb = 1 —
/// Dedekind-finiteness makes the one-sided solution two-sided, and the
/// verification guards the implementation.
pub fn invert_in_r<F: Field>(ext: &Extension<F>, b: &[F]) -> Option<Vec<F>> {
    let images: Vec<Vec<F>> = ext
        .r_basis()
        .iter()
        .map(|r| ext.algebra().mul_vec(b, r))
        .collect();
    let unit = ext.algebra().unit().to_vec();
    let coeffs = span_membership(&images, &unit)?;
    let mut x = vec![F::zero(); ext.dim()];
    for (v, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (k, rv) in ext.r_basis()[v].iter().enumerate() {
            x[k] = x[k].clone() + c.clone() * rv.clone();
        }
    }
    assert_eq!(ext.algebra().mul_vec(&x, b), unit, "one-sided inverse must be two-sided");
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{
        dual_numbers_over_scalars, group_algebra_extension, matrix_extension_over_scalars,
        product_extension_over_scalars, Extension,
    };
    use crate::exact::Rational;
    use crate::perm::{symmetric_group, Permutation, SubgroupEmbedding};
    use num_traits::Zero;
    use std::sync::Arc;

    fn s3_over_s2() -> Extension<Rational> {
        let g = Arc::new(symmetric_group(3));
        let s2 = SubgroupEmbedding::generated(
            g.clone(),
            &[Permutation::from_cycles(3, &[vec![0, 1]]).unwrap()],
        )
        .unwrap();
        group_algebra_extension::<Rational>(&s2)
    }

    #[test]
    fn group_algebra_extension_is_frobenius() {
        let ext = s3_over_s2();
        let pairings = morita_pairings(&ext);
        assert!(pairings.psi_surjective && pairings.phi_surjective);
        assert!(pairings.psi_witness.is_some());
        match trace_ideal_frobenius_test(&ext) {
            FrobeniusVerdict::Certified(sys) => {
                assert!(verify_frobenius_system(&ext, &sys));
            }
            _ => panic!("group algebra extensions are Frobenius"),
        }
    }

    #[test]
    fn rank_one_screen_on_matrix_algebra() {
        let ext = matrix_extension_over_scalars::<Rational>(2);
        let screen = rank_one_checks(&ext);
        assert!(screen.pass);
        assert_eq!(screen.dim_a_hat, 4);
        assert_eq!(screen.dim_casimir, 4);
        assert_eq!(screen.dim_r, 4); // R = A here
    }

    #[test]
    fn missing_expectations_and_empty_images() {
        // M2 over its upper-triangular subalgebra: Â = 0, so there is no
        // conditional expectation and both pairing images vanish.
        let a = crate::algebras::matrix_algebra::<Rational>(2);
        let b = vec![a.basis_vec(0), a.basis_vec(1), a.basis_vec(3)];
        let ext = Extension::new(a, &b).unwrap();
        assert_eq!(ext.a_hat_space().len(), 0);
        assert!(conditional_expectation(&ext).is_none());
        let pairings = morita_pairings(&ext);
        assert_eq!(pairings.dim_im_psi, 0);
        assert_eq!(pairings.dim_im_phi, 0);
        assert!(!pairings.psi_surjective && !pairings.phi_surjective);

        // triangular over diagonals: 𝒞 = 0, so the images are zero as well
        let tri = crate::algebras::triangular_extension_over_diagonal::<Rational>(2);
        assert_eq!(tri.casimir_space().len(), 0);
        let pairings = morita_pairings(&tri);
        assert_eq!(pairings.dim_im_psi, 0);
        assert_eq!(pairings.dim_im_phi, 0);
    }

    #[test]
    fn self_extension_trivial_witness() {
        let ext = Extension::self_extension(matrix_extension_over_scalars::<Rational>(2).algebra().clone());
        let pairings = morita_pairings(&ext);
        assert!(pairings.psi_surjective && pairings.phi_surjective);
        match trace_ideal_frobenius_test(&ext) {
            FrobeniusVerdict::Certified(_) => {}
            _ => panic!("self extensions are Frobenius"),
        }
    }

    #[test]
    fn conditional_expectation_examples() {
        let ext = s3_over_s2();
        let e = conditional_expectation(&ext).expect("group algebras split");
        for b in ext.b_basis() {
            assert_eq!(e.mul_vec(b), b.clone());
        }
        // dual numbers over scalars: Â is nonzero and a conditional
        // expectation exists (1 ↦ 1, x ↦ 0 is B-bilinear with image in B)
        let dual = dual_numbers_over_scalars::<Rational>();
        assert!(conditional_expectation(&dual).is_some());
    }

    #[test]
    fn product_extension_is_frobenius() {
        let ext = product_extension_over_scalars::<Rational>(3);
        match trace_ideal_frobenius_test(&ext) {
            FrobeniusVerdict::Certified(sys) => {
                assert!(verify_frobenius_system(&ext, &sys));
            }
            _ => panic!("Kⁿ over K is Frobenius"),
        }
    }

    #[test]
    fn morita_associativity_squares() {
        let ext = s3_over_s2();
        let a_hat: Vec<Matrix<Rational>> =
            ext.a_hat_space().iter().map(|(m, _)| m.clone()).collect();
        let casimir = ext.casimir_space().to_vec();
        // e·Ψ(F⊗f) = Φ(e⊗F)·f  and  E·Φ(e⊗F) = Ψ(E⊗e)·F on basis triples,
        // with the twisted R-actions r·e·r′ = e¹r′ ⊗ re² on Casimirs and
        // r·F·r′ = F(r′·(−)·r) on Â.
        for e in &casimir {
            for f_cas in &casimir {
                for f in &a_hat {
                    let psi_v = psi(&ext, f, f_cas);
                    // e · r (right action): e¹r ⊗ e²
                    let lhs = {
                        let mut acc = vec![Rational::from_integer(0.into()); ext.tensor_square().dim()];
                        let tsq = ext.tensor_square();
                        for (p, q, coeff) in tsq.section_pairs(e) {
                            let pr = ext.algebra().mul_basis_vec(p, &psi_v);
                            for (i, vi) in pr.iter().enumerate() {
                                if vi.is_zero() {
                                    continue;
                                }
                                for (out, val) in tsq.pair_projection(i, q) {
                                    acc[*out] = acc[*out].clone()
                                        + coeff.clone() * vi.clone() * val.clone();
                                }
                            }
                        }
                        acc
                    };
                    let phi_v = phi(&ext, e, f);
                    // r · f (left action): f¹ ⊗ r f²
                    let rhs = {
                        let mut acc = vec![Rational::from_integer(0.into()); ext.tensor_square().dim()];
                        let tsq = ext.tensor_square();
                        for (p, q, coeff) in tsq.section_pairs(f_cas) {
                            let rq = ext.algebra().mul_vec_basis(&phi_v, q);
                            for (i, vi) in rq.iter().enumerate() {
                                if vi.is_zero() {
                                    continue;
                                }
                                for (out, val) in tsq.pair_projection(p, i) {
                                    acc[*out] = acc[*out].clone()
                                        + coeff.clone() * vi.clone() * val.clone();
                                }
                            }
                        }
                        acc
                    };
                    assert_eq!(lhs, rhs, "first Morita associativity square");
                }
            }
        }
    }

    #[test]
    fn second_morita_associativity_square() {
        // E·Φ(e⊗F) = Ψ(E⊗e)·F as maps, with the twisted actions on Â:
        // (α·r)(x) = α(rx) and (r·α)(x) = α(xr).
        let ext = s3_over_s2();
        let d = ext.dim();
        let a_hat: Vec<Matrix<Rational>> =
            ext.a_hat_space().iter().map(|(m, _)| m.clone()).collect();
        let casimir = ext.casimir_space().to_vec();
        for e_hom in &a_hat {
            for e in &casimir {
                for f in &a_hat {
                    let phi_v = phi(&ext, e, f); // Φ(e⊗F) ∈ R
                    let lhs = e_hom.mul_mat(&ext.algebra().left_mult_matrix(&phi_v));
                    let psi_v = psi(&ext, e_hom, e); // Ψ(E⊗e) ∈ R
                    let rhs = f.mul_mat(&ext.algebra().right_mult_matrix(&psi_v));
                    assert_eq!(lhs, rhs, "second Morita associativity square");
                    let _ = d;
                }
            }
        }
    }

    #[test]
    fn cross_nonvanishing_of_pairings() {
        // Φ(e ⊗ Â) ≠ 0 ⟺ Ψ(Â ⊗ e) ≠ 0 for each Casimir basis element.
        let ext = s3_over_s2();
        let a_hat: Vec<Matrix<Rational>> =
            ext.a_hat_space().iter().map(|(m, _)| m.clone()).collect();
        for e in ext.casimir_space() {
            let phi_nonzero = a_hat.iter().any(|f| phi(&ext, e, f).iter().any(|v| !v.is_zero()));
            let psi_nonzero = a_hat.iter().any(|f| psi(&ext, f, e).iter().any(|v| !v.is_zero()));
            assert_eq!(phi_nonzero, psi_nonzero);
        }
    }
}
