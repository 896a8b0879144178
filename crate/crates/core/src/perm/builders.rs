//! Stock groups used throughout the test corpus and the CLI builder
//! namespace: S{n}, A{n}, C{n}, D{n}, Q8, direct products, regular
//! representations of explicit multiplication tables.

use super::group::{GroupError, PermGroup};
use super::permutation::Permutation;

pub fn symmetric_group(n: usize) -> PermGroup {
    assert!(n >= 1);
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::from_cycles(n, &[vec![0, 1]]).unwrap());
    }
    if n >= 3 {
        gens.push(Permutation::from_cycles(n, &[(0..n).collect()]).unwrap());
    }
    PermGroup::generate_capped(n.max(1), gens, usize::MAX >> 1).expect("symmetric group")
}

pub fn alternating_group(n: usize) -> PermGroup {
    assert!(n >= 3, "alternating groups need degree >= 3");
    let gens: Vec<Permutation> = (0..n - 2)
        .map(|i| Permutation::from_cycles(n, &[vec![i, i + 1, i + 2]]).unwrap())
        .collect();
    PermGroup::generate_capped(n, gens, usize::MAX >> 1).expect("alternating group")
}

pub fn cyclic_group(n: usize) -> PermGroup {
    assert!(n >= 1);
    let gens = if n == 1 {
        vec![]
    } else {
        vec![Permutation::from_cycles(n, &[(0..n).collect()]).unwrap()]
    };
    PermGroup::generate_capped(n.max(1), gens, usize::MAX >> 1).expect("cyclic group")
}

/// Dihedral group of order 2n acting on the n vertices of a polygon.
pub fn dihedral_group(n: usize) -> PermGroup {
    assert!(n >= 3, "dihedral groups need n >= 3");
    let rotation = Permutation::from_cycles(n, &[(0..n).collect()]).unwrap();
    let reflection =
        Permutation::from_images((0..n).map(|i| (n - i) % n).collect()).unwrap();
    PermGroup::generate_capped(n, vec![rotation, reflection], usize::MAX >> 1)
        .expect("dihedral group")
}

pub fn klein_four() -> PermGroup {
    let a = Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap();
    let b = Permutation::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap();
    PermGroup::generate(4, vec![a, b]).expect("Klein four group")
}

/// Quaternion group of order 8 in its regular representation on
/// {1, −1, i, −i, j, −j, k, −k}.
pub fn quaternion_group() -> PermGroup {
    // Element encoding: 0:1  1:−1  2:i  3:−i  4:j  5:−j  6:k  7:−k
    const TABLE: [[usize; 8]; 8] = [
        [0, 1, 2, 3, 4, 5, 6, 7],
        [1, 0, 3, 2, 5, 4, 7, 6],
        [2, 3, 1, 0, 6, 7, 5, 4],
        [3, 2, 0, 1, 7, 6, 4, 5],
        [4, 5, 7, 6, 1, 0, 2, 3],
        [5, 4, 6, 7, 0, 1, 3, 2],
        [6, 7, 4, 5, 3, 2, 1, 0],
        [7, 6, 5, 4, 2, 3, 0, 1],
    ];
    let table: Vec<Vec<usize>> = TABLE.iter().map(|r| r.to_vec()).collect();
    regular_representation(&table, &[2, 4]).expect("quaternion group")
}

/// Regular permutation representation of an explicit multiplication table
/// (`table[a][b]` = index of a·b, index 0 the identity), generated by the
/// left multiplications of the chosen generators.
pub fn regular_representation(
    table: &[Vec<usize>],
    generator_indices: &[usize],
) -> Result<PermGroup, GroupError> {
    let n = table.len();
    let mut gens = Vec::new();
    for &g in generator_indices {
        let images: Vec<usize> = (0..n).map(|x| table[g][x]).collect();
        gens.push(Permutation::from_images(images)?);
    }
    let group = PermGroup::generate_capped(n, gens, usize::MAX >> 1)?;
    if group.order() != n {
        return Err(GroupError::NotASubgroup);
    }
    Ok(group)
}

/// Direct product acting on the disjoint union of the two domains.
pub fn direct_product(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let degree = a.degree() + b.degree();
    let mut gens = Vec::new();
    for g in a.generators() {
        let mut images: Vec<usize> = (0..degree).collect();
        for i in 0..a.degree() {
            images[i] = g.apply(i);
        }
        gens.push(Permutation::from_images(images).unwrap());
    }
    for g in b.generators() {
        let mut images: Vec<usize> = (0..degree).collect();
        for i in 0..b.degree() {
            images[a.degree() + i] = a.degree() + g.apply(i);
        }
        gens.push(Permutation::from_images(images).unwrap());
    }
    PermGroup::generate_capped(degree, gens, usize::MAX >> 1).expect("direct product")
}

/// Resolves a builder name from the CLI namespace: `S3`, `A4`, `C6`, `D4`,
/// `Q8`, `V4`, and `{name}x{name}` products.
pub fn group_builder(name: &str) -> Option<PermGroup> {
    let name = name.trim();
    if let Some((left, right)) = name.split_once('x') {
        return Some(direct_product(&group_builder(left)?, &group_builder(right)?));
    }
    if name.eq_ignore_ascii_case("Q8") {
        return Some(quaternion_group());
    }
    if name.eq_ignore_ascii_case("V4") {
        return Some(klein_four());
    }
    let (kind, num) = name.split_at(1);
    let n: usize = num.parse().ok()?;
    match kind {
        "S" | "s" if n >= 1 && n <= 7 => Some(symmetric_group(n)),
        "A" | "a" if (3..=7).contains(&n) => Some(alternating_group(n)),
        "C" | "c" if n >= 1 => Some(cyclic_group(n)),
        "D" | "d" if n >= 3 => Some(dihedral_group(n)),
        _ => None,
    }
}
