//! Acceptance suite: one test per gate criterion, each printing a pass line
//! with its elapsed time (run with `--nocapture` to see them).  Every
//! tolerance here is exact — all comparisons are equality of arbitrary-
//! precision rationals / cyclotomics or of integers.

use std::sync::Arc;
use std::time::{Duration, Instant};

use depth2_core::algebras::{
    group_algebra_extension, matrix_extension_over_scalars, product_extension_over_scalars,
    triangular_extension_over_diagonal, Extension, Side,
};
use depth2_core::characters::{
    character_table, decompose, induce, inner_product, mackey_decompose, restrict, ClassFunction,
};
use depth2_core::depth2::{analyze_pair, normality_equivalence_sweep};
use depth2_core::exact::{rat, Cyclotomic, Rational};
use depth2_core::frobenius::{
    morita_pairings, trace_ideal_frobenius_test, verify_frobenius_system, FrobeniusVerdict,
};
use depth2_core::perm::{
    alternating_group, dihedral_group, enumerate_subgroups, quaternion_group,
    subgroup_conjugacy_classes, symmetric_group, PermGroup, Permutation, SubgroupEmbedding,
};
use num_traits::Zero;

fn pass(id: &str, label: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    assert!(
        elapsed <= budget,
        "criterion {id} exceeded its budget: {elapsed:?} > {budget:?}"
    );
    println!("[PASS] {id} {label} ({} ms)", elapsed.as_millis());
}

fn s3() -> Arc<PermGroup> {
    Arc::new(symmetric_group(3))
}

fn embed(g: &Arc<PermGroup>, spec: &[Vec<usize>]) -> SubgroupEmbedding {
    let gens: Vec<Permutation> = spec
        .iter()
        .map(|c| Permutation::from_cycles(g.degree(), &[c.clone()]).unwrap())
        .collect();
    SubgroupEmbedding::generated(g.clone(), &gens).unwrap()
}

#[test]
fn a01_s2_in_s3_tables_reproduce() {
    let start = Instant::now();
    let g = s3();
    let emb = embed(&g, &[vec![0, 1]]);
    let analysis = analyze_pair(&emb).unwrap();
    assert_eq!(analysis.ind_res.a, vec![vec![1, 0, 1], vec![0, 1, 1]]);
    assert_eq!(analysis.triple.c[0], vec![2, 1, 3]);
    pass("01", "S2<=S3 induction-restriction and triple tables", start, Duration::from_secs(1));
}

#[test]
fn a02_depth_two_verdicts_on_s3() {
    let start = Instant::now();
    let g = s3();
    let s2 = analyze_pair(&embed(&g, &[vec![0, 1]])).unwrap();
    assert!(!s2.verdict.is_d2);
    assert_eq!(s2.verdict.witness, Some((1, 2)));
    assert_eq!(s2.ind_res.a[0][1], 0);
    assert_eq!(s2.triple.c[0][1], 1);
    let a3 = analyze_pair(&embed(&g, &[vec![0, 1, 2]])).unwrap();
    assert!(a3.verdict.is_d2);
    assert_eq!(a3.verdict.minimal_n, Some(2));
    pass("02", "depth-two verdicts for S2 and A3 inside S3", start, Duration::from_secs(1));
}

#[test]
fn a03_normality_equivalence_sweep() {
    let start = Instant::now();
    let corpus: Vec<(&str, Arc<PermGroup>)> = vec![
        ("S3", Arc::new(symmetric_group(3))),
        ("D4", Arc::new(dihedral_group(4))),
        ("Q8", Arc::new(quaternion_group())),
        ("A4", Arc::new(alternating_group(4))),
        ("D6", Arc::new(dihedral_group(6))),
        ("S4", Arc::new(symmetric_group(4))),
    ];
    for (name, group) in corpus {
        let report = normality_equivalence_sweep(&group, true)
            .unwrap_or_else(|e| panic!("sweep of {name} must uphold the equivalence: {e}"));
        assert!(report.equivalence_holds);
        for entry in &report.subgroups {
            assert_eq!(entry.normal, entry.d2, "equivalence inside {name}");
            if entry.normal {
                assert_eq!(
                    entry.minimal_n,
                    Some(entry.index as u64),
                    "normal subgroup of {name} must have N = [G:H]"
                );
            }
        }
    }
    pass("03", "normal <=> depth two over S3,D4,Q8,A4,D6,S4", start, Duration::from_secs(300));
}

#[test]
fn a04_triangular_non_example() {
    let start = Instant::now();
    let ext = triangular_extension_over_diagonal::<Rational>(2);
    let t_basis = ext.t_space();
    assert_eq!(t_basis.len(), 2);
    // T is spanned by e11⊗e11 and e22⊗e22.
    let e11 = ext.algebra().basis_vec(0);
    let e22 = ext.algebra().basis_vec(2);
    let named = [ext.tensor_of(&e11, &e11), ext.tensor_of(&e22, &e22)];
    let mut reducer = depth2_core::exact::RowReducer::new(ext.tensor_square().dim());
    for t in t_basis {
        reducer.insert(depth2_core::exact::reducer::to_sparse(t));
    }
    for t in &named {
        assert!(reducer.contains(depth2_core::exact::reducer::to_sparse(t)));
    }
    let endrt = ext.end_rt_check();
    assert_eq!(endrt.dim_end_rt, 2);
    assert_eq!(endrt.dim_z, 1);
    assert!(ext.d2_test(Side::Left).is_none());
    assert!(ext.d2_test(Side::Right).is_none());
    pass("04", "triangular 2x2 over diagonals is not depth two", start, Duration::from_secs(1));
}

#[test]
fn a05_matrix_algebra_casimir_facts() {
    let start = Instant::now();
    for n in [2usize, 3] {
        let ext = matrix_extension_over_scalars::<Rational>(n);
        assert_eq!(ext.casimir_space().len(), n * n);
        let basis_idx = |i: usize, j: usize| i * n + j;
        // each column element Σ_i e_{ij} ⊗ e_{ji} is a separability element
        for j in 0..n {
            let mut q = vec![Rational::zero(); ext.tensor_square().dim()];
            for i in 0..n {
                let a = ext.algebra().basis_vec(basis_idx(i, j));
                let b = ext.algebra().basis_vec(basis_idx(j, i));
                for (k, v) in ext.tensor_of(&a, &b).into_iter().enumerate() {
                    q[k] = q[k].clone() + v;
                }
            }
            assert!(ext.is_separability_element(&q), "column {j} of M_{n}");
        }
        // the symmetric element is unique and equals the average
        let sym = ext.symmetric_separability().expect("scalars are central");
        let e = sym.element.expect("symmetric element exists");
        assert_eq!(sym.solution_dim, 0, "uniqueness for M_{n}");
        let mut expected = vec![Rational::zero(); ext.tensor_square().dim()];
        for i in 0..n {
            for j in 0..n {
                let a = ext.algebra().basis_vec(basis_idx(i, j));
                let b = ext.algebra().basis_vec(basis_idx(j, i));
                for (k, v) in ext.tensor_of(&a, &b).into_iter().enumerate() {
                    expected[k] = expected[k].clone() + v * rat(1, n as i64);
                }
            }
        }
        assert_eq!(e, expected);
        assert!(ext.is_separability_element(&e));
    }
    pass("05", "matrix-algebra Casimir elements for n = 2, 3", start, Duration::from_secs(5));
}

#[test]
fn a06_group_algebra_frobenius() {
    let start = Instant::now();
    let pairs: Vec<SubgroupEmbedding> = vec![
        embed(&s3(), &[vec![0, 1]]),
        {
            let g = Arc::new(symmetric_group(4));
            let a = Permutation::from_cycles(4, &[vec![0, 1, 2]]).unwrap();
            let b = Permutation::from_cycles(4, &[vec![0, 1]]).unwrap();
            SubgroupEmbedding::generated(g, &[a, b]).unwrap()
        },
    ];
    for emb in &pairs {
        let ext = group_algebra_extension::<Rational>(emb);
        let pairings = morita_pairings(&ext);
        assert!(pairings.psi_surjective, "Psi surjective");
        assert!(pairings.phi_surjective, "Phi surjective");
        match trace_ideal_frobenius_test(&ext) {
            FrobeniusVerdict::Certified(sys) => {
                assert!(verify_frobenius_system(&ext, &sys), "dual bases verify exactly");
            }
            _ => panic!("group-algebra extension must certify as Frobenius"),
        }
    }
    pass("06", "QS3/QS2 and QS4/QS3 certified Frobenius", start, Duration::from_secs(30));
}

#[test]
fn a07_depth_two_implies_gamma_and_end_rt() {
    let start = Instant::now();
    let mut corpus: Vec<(String, Extension<Rational>)> = Vec::new();
    let g3 = s3();
    corpus.push(("QS3/QA3".into(), group_algebra_extension(&embed(&g3, &[vec![0, 1, 2]]))));
    corpus.push((
        "QS3/QS3".into(),
        group_algebra_extension(&SubgroupEmbedding::new(g3.clone(), g3.clone()).unwrap()),
    ));
    let q8 = Arc::new(quaternion_group());
    for (i, emb) in enumerate_subgroups(&q8).into_iter().enumerate() {
        corpus.push((format!("QQ8/H{i}"), group_algebra_extension(&emb)));
    }
    corpus.push((
        "M2(Q) self".into(),
        Extension::self_extension(matrix_extension_over_scalars::<Rational>(2).algebra().clone()),
    ));
    corpus.push((
        "Q^3 self".into(),
        Extension::self_extension(product_extension_over_scalars::<Rational>(3).algebra().clone()),
    ));
    for (name, ext) in &corpus {
        let left = ext.d2_test(Side::Left);
        let right = ext.d2_test(Side::Right);
        assert!(left.is_some() && right.is_some(), "{name} must be depth two");
        let gamma = ext.gamma_check();
        assert!(gamma.gamma_bijective, "{name}: gamma must be bijective");
        assert_eq!(gamma.dim_r_tensor, ext.dim(), "{name}: dim R⊗T(A⊗A) = dim A");
        let endrt = ext.end_rt_check();
        assert_eq!(endrt.dim_end_rt, endrt.dim_z, "{name}: End(R_T) ≅ Z(A)");
        assert!(endrt.lambda_injective, "{name}");
    }
    pass(
        "07",
        "depth two forces bijective gamma and End(R_T) = Z(A) on the corpus",
        start,
        Duration::from_secs(120),
    );
}

#[test]
fn a08_separability_implies_gamma_bijective() {
    let start = Instant::now();
    let mut corpus: Vec<(String, Extension<Rational>)> = Vec::new();
    corpus.push(("M2(Q)/Q".into(), matrix_extension_over_scalars(2)));
    corpus.push(("M3(Q)/Q".into(), matrix_extension_over_scalars(3)));
    let g3 = s3();
    corpus.push(("QS3/QA3".into(), group_algebra_extension(&embed(&g3, &[vec![0, 1, 2]]))));
    corpus.push(("QS3/QS2".into(), group_algebra_extension(&embed(&g3, &[vec![0, 1]]))));
    corpus.push(("Q^2/Q".into(), product_extension_over_scalars(2)));
    for (name, ext) in &corpus {
        let e = ext
            .separability_element()
            .unwrap_or_else(|| panic!("{name} must be separable"));
        assert!(ext.is_separability_element(&e), "{name}");
        assert!(ext.is_in_t_prime(&e), "{name}: witness lies in T′");
        let gamma = ext.gamma_check();
        assert!(gamma.gamma_bijective, "{name}: gamma must be bijective");
    }
    pass(
        "08",
        "separability elements lie in T′ and force bijective gamma",
        start,
        Duration::from_secs(120),
    );
}

#[test]
fn a09_sugano_separation() {
    let start = Instant::now();
    for n in [2usize, 3] {
        let ext = product_extension_over_scalars::<Rational>(n);
        assert!(ext.separability_element().is_some(), "Q^{n} is separable");
        assert!(ext.d2_test(Side::Left).is_some() && ext.d2_test(Side::Right).is_some());
        assert!(ext.h_separability_test().is_none(), "Q^{n} is not H-separable");
    }
    let m2 = matrix_extension_over_scalars::<Rational>(2);
    let system = m2.h_separability_test().expect("M2(Q) is H-separable");
    assert!(!system.pairs.is_empty());
    pass("09", "K^n separates separability from H-separability", start, Duration::from_secs(30));
}

#[test]
fn a10_cross_route_consistency() {
    let start = Instant::now();
    // All subgroups of S3; subgroups of S4 with index <= 4 (tensor-square
    // dimension at most 96), one per conjugacy class.
    let g3 = s3();
    let mut pairs: Vec<(String, SubgroupEmbedding)> = enumerate_subgroups(&g3)
        .into_iter()
        .enumerate()
        .map(|(i, e)| (format!("S3 pair {i} (order {})", e.subgroup().order()), e))
        .collect();
    let g4 = Arc::new(symmetric_group(4));
    for (i, (emb, _)) in subgroup_conjugacy_classes(&g4).into_iter().enumerate() {
        if emb.index() <= 4 {
            pairs.push((format!("S4 pair {i} (order {})", emb.subgroup().order()), emb));
        }
    }
    assert!(pairs.len() >= 10);
    for (name, emb) in &pairs {
        let character_verdict = analyze_pair(emb).unwrap().verdict.is_d2;
        let ext = group_algebra_extension::<Rational>(emb);
        let left = ext.d2_test(Side::Left).is_some();
        let right = ext.d2_test(Side::Right).is_some();
        assert_eq!(left, right, "{name}: sides must agree");
        assert_eq!(left && right, character_verdict, "{name}: routes must agree");
    }
    pass(
        "10",
        "character route equals structure-constant route on S3/S4 pairs",
        start,
        Duration::from_secs(600),
    );
}

#[test]
fn a11_invariant_suites() {
    let start = Instant::now();
    // Frobenius reciprocity, Mackey equality, orthogonality over the sweep
    // corpus.
    let corpus: Vec<Arc<PermGroup>> = vec![
        Arc::new(symmetric_group(3)),
        Arc::new(dihedral_group(4)),
        Arc::new(quaternion_group()),
        Arc::new(alternating_group(4)),
        Arc::new(dihedral_group(6)),
        Arc::new(symmetric_group(4)),
    ];
    for group in &corpus {
        let table = character_table(group);
        // row orthonormality
        for (i, chi) in table.irreducibles().iter().enumerate() {
            for (j, psi) in table.irreducibles().iter().enumerate() {
                let expected = Cyclotomic::from_int(i64::from(i == j));
                assert_eq!(inner_product(chi, psi), expected);
            }
        }
        // column orthogonality: Σ_χ χ(g)conj(χ(g)) = |C_G(g)|
        for (t, class) in group.classes().iter().enumerate() {
            let mut acc = Cyclotomic::zero();
            for chi in table.irreducibles() {
                acc = acc + chi.values()[t].clone() * chi.values()[t].conjugate();
            }
            assert_eq!(acc, Cyclotomic::from_int(class.centralizer_order as i64));
        }
        for (emb, _) in subgroup_conjugacy_classes(group) {
            let h_table = character_table(emb.subgroup());
            for psi in h_table.irreducibles() {
                let ind = induce(psi, &emb);
                for chi in table.irreducibles() {
                    let up = inner_product(&ind, chi);
                    let down = inner_product(psi, &restrict(chi, &emb));
                    assert_eq!(up, down, "Frobenius reciprocity");
                }
                let mk = mackey_decompose(&emb, psi);
                assert!(
                    mk.direct.equals(&mk.summand_total()),
                    "Mackey equality in group of order {}",
                    group.order()
                );
            }
            // induced degree = [G:H]·ψ(1), and decompose round-trips
            let ind = induce(&ClassFunction::trivial(emb.subgroup().clone()), &emb);
            assert_eq!(ind.degree(), Cyclotomic::from_int(emb.index() as i64));
            let mults = decompose(&ind, &table).expect("induced characters decompose");
            assert!(mults.iter().any(|&m| m > 0));
        }
    }

    // T-multiplication associativity and R_T module laws on >= 100 samples
    // per extension, with deterministic pseudo-random coefficients.
    let g3 = s3();
    let extensions: Vec<(String, Extension<Rational>)> = vec![
        ("QS3/QS2".into(), group_algebra_extension(&embed(&g3, &[vec![0, 1]]))),
        ("QS3/QA3".into(), group_algebra_extension(&embed(&g3, &[vec![0, 1, 2]]))),
        ("triangular".into(), triangular_extension_over_diagonal(2)),
        ("M2/Q".into(), matrix_extension_over_scalars(2)),
    ];
    let mut state = 0x2718_2818u64;
    let mut next = move || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((state >> 33) % 7) as i64 - 3
    };
    for (name, ext) in &extensions {
        let t_basis = ext.t_space().to_vec();
        let r_basis = ext.r_basis().to_vec();
        let qdim = ext.tensor_square().dim();
        let sample_t = |next: &mut dyn FnMut() -> i64| -> Vec<Rational> {
            let mut acc = vec![Rational::zero(); qdim];
            for t in &t_basis {
                let w = rat(next(), 1);
                for (k, v) in t.iter().enumerate() {
                    acc[k] = acc[k].clone() + w.clone() * v.clone();
                }
            }
            acc
        };
        let sample_r = |next: &mut dyn FnMut() -> i64| -> Vec<Rational> {
            let mut acc = vec![Rational::zero(); ext.dim()];
            for r in &r_basis {
                let w = rat(next(), 1);
                for (k, v) in r.iter().enumerate() {
                    acc[k] = acc[k].clone() + w.clone() * v.clone();
                }
            }
            acc
        };
        let one_t = ext.one_tensor_one();
        for _ in 0..100 {
            let t1 = sample_t(&mut next);
            let t2 = sample_t(&mut next);
            let t3 = sample_t(&mut next);
            let r = sample_r(&mut next);
            // associativity and unit law of the T ring
            let left = ext.t_multiply(&ext.t_multiply(&t1, &t2), &t3);
            let right = ext.t_multiply(&t1, &ext.t_multiply(&t2, &t3));
            assert_eq!(left, right, "{name}: T multiplication associativity");
            assert_eq!(ext.t_multiply(&one_t, &t1), t1, "{name}: left unit");
            assert_eq!(ext.t_multiply(&t1, &one_t), t1, "{name}: right unit");
            // R_T module laws
            assert_eq!(ext.rt_action(&r, &one_t), r, "{name}: unit acts trivially");
            let via_product = ext.rt_action(&r, &ext.t_multiply(&t1, &t2));
            let stepwise = ext.rt_action(&ext.rt_action(&r, &t1), &t2);
            assert_eq!(via_product, stepwise, "{name}: module law");
        }
    }
    pass(
        "11",
        "reciprocity, Mackey, orthogonality, T-ring and R_T module laws",
        start,
        Duration::from_secs(600),
    );
}
