//! Complex character theory with exact cyclotomic values: character tables,
//! inner products, restriction, induction and Mackey decomposition.

mod dixon;

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exact::Cyclotomic;
use crate::perm::{PermGroup, SubgroupEmbedding};

#[derive(Debug, Error)]
pub enum CharacterError {
    #[error("class function is not a character: multiplicity {multiplicity} at irreducible {index}")]
    NotACharacter { index: usize, multiplicity: String },
}

/// A class function on a fixed group: one exact value per conjugacy class,
/// aligned with `group.classes()`.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    group: Arc<PermGroup>,
    values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn new(group: Arc<PermGroup>, values: Vec<Cyclotomic>) -> Self {
        assert_eq!(values.len(), group.class_count(), "one value per class");
        ClassFunction { group, values }
    }

    pub fn trivial(group: Arc<PermGroup>) -> Self {
        let values = vec![Cyclotomic::one(); group.class_count()];
        ClassFunction { group, values }
    }

    /// The regular character: |G| at the identity, 0 elsewhere.
    pub fn regular(group: Arc<PermGroup>) -> Self {
        let mut values = vec![Cyclotomic::zero(); group.class_count()];
        values[0] = Cyclotomic::from_int(group.order() as i64);
        ClassFunction { group, values }
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, class_idx: usize) -> &Cyclotomic {
        &self.values[class_idx]
    }

    /// Value at the identity.
    pub fn degree(&self) -> Cyclotomic {
        self.values[0].clone()
    }

    pub fn add(&self, other: &ClassFunction) -> ClassFunction {
        assert!(Arc::ptr_eq(&self.group, &other.group), "class functions on different groups");
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        ClassFunction { group: self.group.clone(), values }
    }

    pub fn scale(&self, c: &Cyclotomic) -> ClassFunction {
        let values = self.values.iter().map(|v| v.clone() * c.clone()).collect();
        ClassFunction { group: self.group.clone(), values }
    }

    pub fn equals(&self, other: &ClassFunction) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.values == other.values
    }
}

/// The complete list of irreducible characters of a group, trivial first.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: Arc<PermGroup>,
    irreducibles: Vec<ClassFunction>,
}

/// Computes the character table (exact, deterministic row order).
pub fn character_table(group: &Arc<PermGroup>) -> CharacterTable {
    let rows = dixon::irreducible_character_values(group);
    let irreducibles = rows
        .into_iter()
        .map(|values| ClassFunction { group: group.clone(), values })
        .collect();
    CharacterTable { group: group.clone(), irreducibles }
}

impl CharacterTable {
    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn irreducibles(&self) -> &[ClassFunction] {
        &self.irreducibles
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.irreducibles
            .iter()
            .map(|chi| {
                let d: BigInt = chi.degree().try_integer().expect("integer degree");
                u64::try_from(d).expect("small degree")
            })
            .collect()
    }

    /// JSON-facing export: class descriptions plus one row of cyclotomic
    /// strings per irreducible.
    pub fn export(&self) -> CharacterTableExport {
        let classes = self
            .group
            .classes()
            .iter()
            .map(|c| ClassExport {
                representative: self.group.element(c.representative).to_string(),
                size: c.members.len(),
                element_order: self.group.element_order(c.representative),
            })
            .collect();
        let irreducibles = self
            .irreducibles
            .iter()
            .map(|chi| chi.values.iter().map(|v| v.to_string()).collect())
            .collect();
        CharacterTableExport { classes, irreducibles }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassExport {
    pub representative: String,
    pub size: usize,
    pub element_order: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterTableExport {
    pub classes: Vec<ClassExport>,
    pub irreducibles: Vec<Vec<String>>,
}

/// ⟨φ, ψ⟩ = (1/|G|) Σ_g φ(g)·conj(ψ(g)), computed classwise.
pub fn inner_product(phi: &ClassFunction, psi: &ClassFunction) -> Cyclotomic {
    assert!(Arc::ptr_eq(phi.group(), psi.group()), "inner product needs a common group");
    let group = phi.group();
    let mut acc = Cyclotomic::zero();
    for (t, class) in group.classes().iter().enumerate() {
        let size = Cyclotomic::from_int(class.members.len() as i64);
        acc = acc + size * phi.values[t].clone() * psi.values[t].conjugate();
    }
    let order = Cyclotomic::from_int(group.order() as i64);
    acc / order
}

/// Restriction of a class function on G to the subgroup of the embedding.
pub fn restrict(chi: &ClassFunction, emb: &SubgroupEmbedding) -> ClassFunction {
    assert!(Arc::ptr_eq(chi.group(), emb.ambient()), "chi must live on the ambient group");
    let h = emb.subgroup();
    let values = h
        .classes()
        .iter()
        .map(|c| {
            let ambient_idx = emb.to_ambient(c.representative);
            chi.values[emb.ambient().class_of(ambient_idx)].clone()
        })
        .collect();
    ClassFunction { group: h.clone(), values }
}

/// Induction ψ^G(g) = (1/|H|) Σ_{x ∈ G, x⁻¹gx ∈ H} ψ(x⁻¹gx).
pub fn induce(psi: &ClassFunction, emb: &SubgroupEmbedding) -> ClassFunction {
    assert!(Arc::ptr_eq(psi.group(), emb.subgroup()), "psi must live on the subgroup");
    let g = emb.ambient();
    let h = emb.subgroup();
    let values = g
        .classes()
        .iter()
        .map(|class| {
            let rep = class.representative;
            let mut acc = Cyclotomic::zero();
            for x in 0..g.order() {
                let conj = g.mul(g.mul(g.inv(x), rep), x);
                if let Some(h_idx) = emb.to_subgroup(conj) {
                    acc = acc + psi.values[h.class_of(h_idx)].clone();
                }
            }
            acc / Cyclotomic::from_int(h.order() as i64)
        })
        .collect();
    ClassFunction { group: g.clone(), values }
}

/// Multiplicity vector of a genuine character relative to the table; fails
/// with `NotACharacter` on virtual or non-integral class functions.
pub fn decompose(
    phi: &ClassFunction,
    table: &CharacterTable,
) -> Result<Vec<u64>, CharacterError> {
    assert!(Arc::ptr_eq(phi.group(), table.group()), "decompose needs matching groups");
    let mut mults = Vec::with_capacity(table.irreducibles.len());
    for (i, chi) in table.irreducibles.iter().enumerate() {
        let m = inner_product(phi, chi);
        let bad = || CharacterError::NotACharacter { index: i, multiplicity: m.to_string() };
        let as_int: BigInt = m.try_integer().ok_or_else(bad)?;
        if as_int.is_negative() {
            return Err(bad());
        }
        mults.push(u64::try_from(as_int).map_err(|_| bad())?);
    }
    // Multiplicities must reconstruct φ exactly.
    let mut recon = vec![Cyclotomic::zero(); phi.values.len()];
    for (m, chi) in mults.iter().zip(&table.irreducibles) {
        for (t, v) in chi.values.iter().enumerate() {
            recon[t] = recon[t].clone() + Cyclotomic::from_int(*m as i64) * v.clone();
        }
    }
    if recon != phi.values {
        return Err(CharacterError::NotACharacter {
            index: usize::MAX,
            multiplicity: "reconstruction mismatch".into(),
        });
    }
    Ok(mults)
}

/// Both sides of the Mackey decomposition of Res^G_H Ind^G_H ψ.
pub struct MackeyDecomposition {
    /// Res Ind ψ computed directly.
    pub direct: ClassFunction,
    /// One induced summand per double coset H\G/H, aligned with `coset_reps`.
    pub summands: Vec<ClassFunction>,
    pub coset_reps: Vec<usize>,
}

impl MackeyDecomposition {
    /// Σ of the summands; must equal `direct`.
    pub fn summand_total(&self) -> ClassFunction {
        let mut acc = ClassFunction {
            group: self.direct.group.clone(),
            values: vec![Cyclotomic::zero(); self.direct.values.len()],
        };
        for s in &self.summands {
            acc = acc.add(s);
        }
        acc
    }
}

/// Decomposes Res^G_H Ind^G_H ψ over double cosets HgH as
/// Σ Ind^H_{H ∩ gHg⁻¹} Res (^gψ), returning the directly computed
/// restriction of the induction alongside the summands.
pub fn mackey_decompose(emb: &SubgroupEmbedding, psi: &ClassFunction) -> MackeyDecomposition {
    assert!(Arc::ptr_eq(psi.group(), emb.subgroup()), "psi must live on the subgroup");
    let g = emb.ambient();
    let direct = restrict(&induce(psi, emb), emb);

    let reps = crate::perm::double_coset_representatives(g, emb, emb);
    let mut summands = Vec::with_capacity(reps.len());
    for &rep in &reps {
        let conj_sub = emb.conjugate_by(rep); // gHg⁻¹ ≤ G
        let meet = emb.intersect(&conj_sub); // H ∩ gHg⁻¹ ≤ G
        // ^gψ on gHg⁻¹: (^gψ)(y) = ψ(g⁻¹yg).
        let conj_group = conj_sub.subgroup().clone();
        let g_inv = g.inv(rep);
        let conj_values: Vec<Cyclotomic> = conj_group
            .classes()
            .iter()
            .map(|c| {
                let ambient_idx = conj_sub.to_ambient(c.representative);
                let back = g.mul(g.mul(g_inv, ambient_idx), rep);
                let h_idx = emb.to_subgroup(back).expect("conjugate lands in H");
                psi.values[emb.subgroup().class_of(h_idx)].clone()
            })
            .collect();
        let conj_psi = ClassFunction { group: conj_group.clone(), values: conj_values };
        // Restrict to the intersection, then induce up to H.
        let meet_in_conj = SubgroupEmbedding::new(conj_group, meet.subgroup().clone())
            .expect("intersection embeds in the conjugate");
        let restricted = restrict(&conj_psi, &meet_in_conj);
        let meet_in_h = SubgroupEmbedding::new(emb.subgroup().clone(), meet.subgroup().clone())
            .expect("intersection embeds in H");
        summands.push(induce(&restricted, &meet_in_h));
    }
    MackeyDecomposition { direct, summands, coset_reps: reps }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{alternating_group, cyclic_group, symmetric_group, Permutation};

    fn arc(g: PermGroup) -> Arc<PermGroup> {
        Arc::new(g)
    }

    fn embed(g: &Arc<PermGroup>, cycles: &[Vec<usize>]) -> SubgroupEmbedding {
        let p = Permutation::from_cycles(g.degree(), cycles).unwrap();
        SubgroupEmbedding::generated(g.clone(), &[p]).unwrap()
    }

    #[test]
    fn s3_table_shape_and_values() {
        let g = arc(symmetric_group(3));
        let table = character_table(&g);
        assert_eq!(table.degrees(), vec![1, 1, 2]);
        // classes are ordered e, transpositions, 3-cycles
        let two_dim = &table.irreducibles()[2];
        assert_eq!(two_dim.values()[0], Cyclotomic::from_int(2));
        assert_eq!(two_dim.values()[1], Cyclotomic::from_int(0));
        assert_eq!(two_dim.values()[2], Cyclotomic::from_int(-1));
    }

    #[test]
    fn c3_table_lives_in_third_cyclotomic_field() {
        let g = arc(cyclic_group(3));
        let table = character_table(&g);
        assert_eq!(table.degrees(), vec![1, 1, 1]);
        let zeta = Cyclotomic::root_of_unity(3, 1);
        let has_zeta = table
            .irreducibles()
            .iter()
            .any(|chi| chi.values().iter().any(|v| *v == zeta));
        assert!(has_zeta, "some linear character takes the value ζ3");
    }

    #[test]
    fn s4_degrees() {
        let g = arc(symmetric_group(4));
        let mut degrees = character_table(&g).degrees();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![1, 1, 2, 3, 3]);
    }

    #[test]
    fn orthonormal_rows_and_regular_decomposition() {
        let g = arc(symmetric_group(3));
        let table = character_table(&g);
        for (i, chi) in table.irreducibles().iter().enumerate() {
            for (j, psi) in table.irreducibles().iter().enumerate() {
                let expected = Cyclotomic::from_int(if i == j { 1 } else { 0 });
                assert_eq!(inner_product(chi, psi), expected);
            }
        }
        let reg = ClassFunction::regular(g.clone());
        for chi in table.irreducibles() {
            assert_eq!(inner_product(&reg, chi), chi.degree());
        }
        assert_eq!(decompose(&reg, &table).unwrap(), vec![1, 1, 2]);
    }

    #[test]
    fn induction_restriction_examples() {
        let g = arc(symmetric_group(3));
        let table = character_table(&g);
        let s2 = embed(&g, &[vec![0, 1]]);
        let h_table = character_table(s2.subgroup());

        // Ind of the trivial character of S2 is χ1 + χ3.
        let ind = induce(&h_table.irreducibles()[0], &s2);
        assert_eq!(decompose(&ind, &table).unwrap(), vec![1, 0, 1]);
        assert_eq!(inner_product(&ind, &table.irreducibles()[0]), Cyclotomic::one());

        // Restricting the 2-dimensional character to S2 gives ψ1 + ψ2.
        let res = restrict(&table.irreducibles()[2], &s2);
        assert_eq!(res.values()[0], Cyclotomic::from_int(2));
        assert_eq!(res.values()[1], Cyclotomic::from_int(0));

        // Trivial cases.
        let whole = SubgroupEmbedding::new(g.clone(), g.clone()).unwrap();
        let triv = ClassFunction::trivial(g.clone());
        assert!(restrict(&triv, &whole).equals(&triv));
        assert!(induce(&triv, &whole).equals(&triv));

        // Induction from A3 of the trivial character: χ1 + χ2.
        let a3 = embed(&g, &[vec![0, 1, 2]]);
        let ind_a3 = induce(&ClassFunction::trivial(a3.subgroup().clone()), &a3);
        assert_eq!(decompose(&ind_a3, &table).unwrap(), vec![1, 1, 0]);
    }

    #[test]
    fn induced_degree_scales_by_index() {
        let g = arc(symmetric_group(4));
        let s3 = embed(&g, &[vec![0, 1, 2]]);
        let sub_triv = ClassFunction::trivial(s3.subgroup().clone());
        let ind = induce(&sub_triv, &s3);
        assert_eq!(ind.degree(), Cyclotomic::from_int(s3.index() as i64));
    }

    #[test]
    fn decompose_rejects_virtual_class_functions() {
        let g = arc(symmetric_group(3));
        let table = character_table(&g);
        let half = ClassFunction::trivial(g.clone())
            .scale(&Cyclotomic::from_rational(crate::exact::rat(1, 2)));
        assert!(decompose(&half, &table).is_err());
        // virtual character: χ1 − χ2 has an integral but negative multiplicity
        let chi1 = &table.irreducibles()[0];
        let chi2 = table.irreducibles()[1].scale(&Cyclotomic::from_int(-1));
        let virt = chi1.add(&chi2);
        assert!(matches!(
            decompose(&virt, &table),
            Err(CharacterError::NotACharacter { .. })
        ));
    }

    #[test]
    fn frobenius_reciprocity_on_s3_pairs() {
        let g = arc(symmetric_group(3));
        let table = character_table(&g);
        for emb in [embed(&g, &[vec![0, 1]]), embed(&g, &[vec![0, 1, 2]])] {
            let h_table = character_table(emb.subgroup());
            for psi in h_table.irreducibles() {
                let ind = induce(psi, &emb);
                for chi in table.irreducibles() {
                    let lhs = inner_product(&ind, chi);
                    let rhs = inner_product(psi, &restrict(chi, &emb));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn mackey_examples() {
        let g = arc(symmetric_group(3));
        // (S3, S2): Res Ind ψ1 = 2ψ1 + ψ2 from summands ψ1 and ψ1+ψ2.
        let s2 = embed(&g, &[vec![0, 1]]);
        let h_table = character_table(s2.subgroup());
        let psi1 = &h_table.irreducibles()[0];
        let mk = mackey_decompose(&s2, psi1);
        assert!(mk.direct.equals(&mk.summand_total()));
        assert_eq!(decompose(&mk.direct, &h_table).unwrap(), vec![2, 1]);
        assert_eq!(mk.summands.len(), 2);

        // (G, G): a single double coset, Res Ind ψ = ψ.
        let whole = SubgroupEmbedding::new(g.clone(), g.clone()).unwrap();
        let table = character_table(&g);
        let mk = mackey_decompose(&whole, &table.irreducibles()[2]);
        assert_eq!(mk.summands.len(), 1);
        assert_eq!(mk.direct.values(), table.irreducibles()[2].values());
        assert!(mk.direct.equals(&mk.summand_total()));

        // (S3, A3): normal subgroup, Res Ind ψ1 = 2ψ1 (sum of conjugates of trivial).
        let a3 = embed(&g, &[vec![0, 1, 2]]);
        let a3_table = character_table(a3.subgroup());
        let mk = mackey_decompose(&a3, &a3_table.irreducibles()[0]);
        assert!(mk.direct.equals(&mk.summand_total()));
        assert_eq!(decompose(&mk.direct, &a3_table).unwrap(), vec![2, 0, 0]);
    }

    #[test]
    fn alternating_group_tables_are_orthogonal() {
        let g = arc(alternating_group(4));
        let table = character_table(&g);
        let mut degrees = table.degrees();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![1, 1, 1, 3]);
        // column orthogonality: Σ_χ |χ(g)|² = |C_G(g)|
        for (t, class) in g.classes().iter().enumerate() {
            let mut acc = Cyclotomic::zero();
            for chi in table.irreducibles() {
                acc = acc + chi.values()[t].clone() * chi.values()[t].conjugate();
            }
            assert_eq!(acc, Cyclotomic::from_int(class.centralizer_order as i64));
        }
    }
}
