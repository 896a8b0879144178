//! Exact irreducible character tables by class-matrix diagonalization.
//!
//! Class multiplication matrices are simultaneously diagonalized over a
//! prime field F_p with p ≡ 1 (mod exp G) and p > 2√|G|; eigenvalues lift to
//! exact cyclotomic character values by discrete Fourier summation over the
//! orders of class representatives.  Deterministic throughout.

use num_traits::{One, Zero};

use crate::exact::{Cyclotomic, Rational};
use crate::perm::PermGroup;

// ---- arithmetic in F_p (p < 2^31, so products fit in u64 via u128) ----

fn addm(a: u64, b: u64, p: u64) -> u64 {
    (a + b) % p
}

fn subm(a: u64, b: u64, p: u64) -> u64 {
    (a + p - b % p) % p
}

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulm(acc, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    acc
}

fn invm(a: u64, p: u64) -> u64 {
    powm(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime p ≡ 1 (mod m) with p > bound.
fn find_prime(m: u64, bound: u64) -> u64 {
    let mut p = (bound / m + 1) * m + 1;
    loop {
        if is_prime(p) {
            return p;
        }
        p += m;
    }
}

/// An element of multiplicative order exactly m in F_p*.
fn root_of_order(m: u64, p: u64) -> u64 {
    let mut prime_divisors = Vec::new();
    let mut n = m;
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            prime_divisors.push(q);
            while n % q == 0 {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        prime_divisors.push(n);
    }
    for candidate in 2..p {
        let z = powm(candidate, (p - 1) / m, p);
        if z != 1 && prime_divisors.iter().all(|&q| powm(z, m / q, p) != 1) {
            return z;
        }
    }
    unreachable!("F_p* is cyclic of order divisible by m");
}

// ---- dense linear algebra over F_p ----

fn fp_nullspace(mat: &[Vec<u64>], n: usize, p: u64) -> Vec<Vec<u64>> {
    let rows = mat.len();
    let mut work: Vec<Vec<u64>> = mat.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(pr) = (r..rows).find(|&i| work[i][c] != 0) else { continue };
        work.swap(r, pr);
        let inv = invm(work[r][c], p);
        for j in c..n {
            work[r][j] = mulm(work[r][j], inv, p);
        }
        for i in 0..rows {
            if i != r && work[i][c] != 0 {
                let f = work[i][c];
                for j in c..n {
                    work[i][j] = subm(work[i][j], mulm(f, work[r][j], p), p);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let mut basis = Vec::new();
    for f in 0..n {
        if pivots.contains(&f) {
            continue;
        }
        let mut v = vec![0u64; n];
        v[f] = 1;
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = subm(0, work[row][f], p);
        }
        basis.push(v);
    }
    basis
}

/// Solves basis · x = target where `basis` columns are the subspace basis
/// vectors; panics if inconsistent (the subspace is invariant by theory).
fn fp_solve_in_span(basis: &[Vec<u64>], target: &[u64], p: u64) -> Vec<u64> {
    let k = target.len();
    let s = basis.len();
    let mut aug: Vec<Vec<u64>> = (0..k)
        .map(|i| {
            let mut row: Vec<u64> = basis.iter().map(|b| b[i]).collect();
            row.push(target[i]);
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..s {
        let Some(pr) = (r..k).find(|&i| aug[i][c] != 0) else { continue };
        aug.swap(r, pr);
        let inv = invm(aug[r][c], p);
        for j in c..=s {
            aug[r][j] = mulm(aug[r][j], inv, p);
        }
        for i in 0..k {
            if i != r && aug[i][c] != 0 {
                let f = aug[i][c];
                for j in c..=s {
                    aug[i][j] = subm(aug[i][j], mulm(f, aug[r][j], p), p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut x = vec![0u64; s];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[row][s];
    }
    for i in r..k {
        assert_eq!(aug[i][s], 0, "vector not in invariant subspace");
    }
    x
}

fn mat_vec(mat: &[Vec<u64>], v: &[u64], p: u64) -> Vec<u64> {
    mat.iter()
        .map(|row| row.iter().zip(v).fold(0u64, |acc, (&a, &b)| addm(acc, mulm(a, b, p), p)))
        .collect()
}

/// Exact character values of all irreducibles, one row per irreducible,
/// columns aligned with `group.classes()`.
pub fn irreducible_character_values(group: &PermGroup) -> Vec<Vec<Cyclotomic>> {
    let k = group.class_count();
    let order = group.order() as u64;
    let m = group.exponent();

    if k == 1 {
        return vec![vec![Cyclotomic::one()]];
    }

    // 2√|G| bound, computed in integers.
    let mut bound = 1u64;
    while bound * bound < 4 * order {
        bound += 1;
    }
    let p = find_prime(m, bound);
    let z = root_of_order(m, p);

    let class_sizes: Vec<u64> =
        group.classes().iter().map(|c| c.members.len() as u64).collect();
    let reps: Vec<usize> = group.classes().iter().map(|c| c.representative).collect();

    // Class matrix N_r with (N_r)_{s,t} = #{x ∈ C_r : class(x⁻¹·z_t) = s}.
    let class_matrix = |r: usize| -> Vec<Vec<u64>> {
        let mut n = vec![vec![0u64; k]; k];
        for t in 0..k {
            let zt = reps[t];
            for &x in &group.classes()[r].members {
                let y = group.mul(group.inv(x), zt);
                n[group.class_of(y)][t] += 1;
            }
        }
        for row in &mut n {
            for v in row.iter_mut() {
                *v %= p;
            }
        }
        n
    };

    // Simultaneous eigenspaces, refined one class matrix at a time.
    let mut subspaces: Vec<Vec<Vec<u64>>> = vec![(0..k)
        .map(|i| {
            let mut e = vec![0u64; k];
            e[i] = 1;
            e
        })
        .collect()];
    for r in 1..k {
        if subspaces.iter().all(|w| w.len() == 1) {
            break;
        }
        let n_r = class_matrix(r);
        let mut refined = Vec::new();
        for w in subspaces {
            if w.len() == 1 {
                refined.push(w);
                continue;
            }
            let s = w.len();
            // Restriction M of N_r to span(w): N_r·w_j = Σ_i M_{ij} w_i.
            let mut restricted = vec![vec![0u64; s]; s];
            for (j, wj) in w.iter().enumerate() {
                let img = mat_vec(&n_r, wj, p);
                let coords = fp_solve_in_span(&w, &img, p);
                for i in 0..s {
                    restricted[i][j] = coords[i];
                }
            }
            // Split along eigenvalues of the restriction (full scan of F_p;
            // eigenvalues exist in F_p because p ≡ 1 mod exp G).
            let mut found = 0usize;
            for lambda in 0..p {
                if found == s {
                    break;
                }
                let shifted: Vec<Vec<u64>> = (0..s)
                    .map(|i| {
                        (0..s)
                            .map(|j| {
                                if i == j {
                                    subm(restricted[i][j], lambda, p)
                                } else {
                                    restricted[i][j]
                                }
                            })
                            .collect()
                    })
                    .collect();
                let eig = fp_nullspace(&shifted, s, p);
                if eig.is_empty() {
                    continue;
                }
                found += eig.len();
                let lifted: Vec<Vec<u64>> = eig
                    .iter()
                    .map(|coords| {
                        let mut v = vec![0u64; k];
                        for (i, wi) in w.iter().enumerate() {
                            for t in 0..k {
                                v[t] = addm(v[t], mulm(coords[i], wi[t], p), p);
                            }
                        }
                        v
                    })
                    .collect();
                refined.push(lifted);
            }
            assert_eq!(found, s, "class matrix failed to act diagonalizably");
        }
        subspaces = refined;
    }
    assert!(
        subspaces.iter().all(|w| w.len() == 1),
        "class matrices left a degenerate common eigenspace"
    );

    // Power-class lookup per class: class index of rep^l.
    let power_class: Vec<Vec<usize>> = (0..k)
        .map(|t| {
            let g = reps[t];
            let ord = group.element_order(g) as usize;
            let mut cur = 0usize; // identity index
            let mut out = Vec::with_capacity(ord);
            for _ in 0..ord {
                out.push(group.class_of(cur));
                cur = group.mul(g, cur);
            }
            out
        })
        .collect();

    let mut rows = Vec::with_capacity(k);
    for w in subspaces {
        let mut omega = w.into_iter().next().unwrap();
        assert_ne!(omega[0], 0, "central character vanishes on the identity");
        let scale = invm(omega[0], p);
        for v in omega.iter_mut() {
            *v = mulm(*v, scale, p);
        }
        // Degree from the orthogonality relation Σ_t ω_t ω_{t*} / |C_t| = |G|/d².
        let mut s_val = 0u64;
        for t in 0..k {
            let t_star = group.inverse_class(t);
            s_val = addm(s_val, mulm(mulm(omega[t], omega[t_star], p), invm(class_sizes[t] % p, p), p), p);
        }
        let rhs = mulm(order % p, invm(s_val, p), p);
        let degree = (1..=(p - 1) / 2)
            .find(|&d| mulm(d, d, p) == rhs)
            .expect("irreducible degree is determined mod p");
        assert_eq!(order % degree, 0, "degree must divide the group order");

        // Character values mod p, then the Fourier lift per class.
        let theta: Vec<u64> = (0..k)
            .map(|t| mulm(mulm(degree, omega[t], p), invm(class_sizes[t] % p, p), p))
            .collect();
        let mut values = Vec::with_capacity(k);
        for t in 0..k {
            let ord = power_class[t].len() as u64;
            let zk = powm(z, m / ord, p);
            let zk_inv = invm(zk, p);
            let ord_inv = invm(ord % p, p);
            let mut poly = vec![Rational::zero(); m as usize];
            for s in 0..ord {
                let mut acc = 0u64;
                for (l, &cls) in power_class[t].iter().enumerate() {
                    acc = addm(acc, mulm(theta[cls], powm(zk_inv, s * l as u64, p), p), p);
                }
                let mult = mulm(acc, ord_inv, p);
                assert!(mult <= degree, "eigenvalue multiplicity exceeds the degree");
                if mult > 0 {
                    let exp = ((s * (m / ord)) % m) as usize;
                    poly[exp] = poly[exp].clone() + Rational::from_integer(mult.into());
                }
            }
            values.push(Cyclotomic::reduce(&poly, m as u32));
        }
        assert_eq!(
            values[0],
            Cyclotomic::from_rational(Rational::from_integer(degree.into())),
            "lifted degree must match the modular degree"
        );
        rows.push(values);
    }

    // Deterministic order: trivial character first, then by degree, then by
    // the printed value vector.
    let degree_of = |row: &Vec<Cyclotomic>| -> u64 {
        row[0].try_integer().expect("degrees are integers").try_into().unwrap()
    };
    rows.sort_by_key(|row| {
        let trivial = row.iter().all(|v| v.is_one());
        let key: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        (!trivial, degree_of(row), key)
    });
    let total: u64 = rows.iter().map(|r| degree_of(r) * degree_of(r)).sum();
    assert_eq!(total, order, "degrees must satisfy Σ d² = |G|");
    rows
}
