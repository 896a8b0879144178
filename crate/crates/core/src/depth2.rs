//! The depth-two test for group-algebra extensions via character theory:
//! induction-restriction tables, triple-induction tables, the multiplicity
//! criterion, and the normality-equivalence sweep over a subgroup lattice.

use rayon::prelude::*;
use serde::Serialize;
use std::sync::Arc;
use thiserror::Error;

use crate::characters::{
    character_table, decompose, induce, inner_product, restrict, CharacterTable,
};
use crate::perm::{subgroup_conjugacy_classes, enumerate_subgroups, PermGroup, SubgroupEmbedding};

#[derive(Debug, Error)]
pub enum Depth2Error {
    #[error("triple table mismatch between matrix product and character route in row {row}")]
    ConsistencyFailure { row: usize },
    #[error(
        "normality/depth-two equivalence violated for subgroup generated by {subgroup}: \
         normal={normal}, depth_two={depth_two}"
    )]
    TheoremViolation { subgroup: String, normal: bool, depth_two: bool },
}

/// Induction-restriction table for H ≤ G: `a[i][j] = ⟨ψᵢ^G, χⱼ⟩`.
#[derive(Clone, Debug)]
pub struct IndResTable {
    pub a: Vec<Vec<u64>>,
}

/// Triple-induction table: `c[r][s] = ⟨(((ψᵣ)^G)_H)^G, χ_s⟩ = (a·aᵀ·a)[r][s]`.
#[derive(Clone, Debug)]
pub struct TripleTable {
    pub c: Vec<Vec<u64>>,
}

/// Verdict of the multiplicity criterion: depth two iff `a[i][j] = 0` forces
/// `c[i][j] = 0`; `minimal_n` is the least N with `c ≤ N·a` entrywise.
#[derive(Clone, Debug, Serialize)]
pub struct DepthTwoVerdict {
    pub is_d2: bool,
    /// Present exactly when depth two.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimal_n: Option<u64>,
    /// 1-based (row, column) with `a = 0` but `c ≠ 0`, when not depth two.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<(usize, usize)>,
}

/// Tables and verdict for one pair H ≤ G, with the tables kept for reports.
pub struct PairAnalysis {
    pub h_table: CharacterTable,
    pub g_table: CharacterTable,
    pub ind_res: IndResTable,
    pub triple: TripleTable,
    pub verdict: DepthTwoVerdict,
}

/// Builds `a[i][j] = ⟨ψᵢ^G, χⱼ⟩`, cross-checking every entry against
/// `⟨ψᵢ, (χⱼ)_H⟩` (Frobenius reciprocity must hold exactly).
pub fn ind_res_table(
    emb: &SubgroupEmbedding,
    h_table: &CharacterTable,
    g_table: &CharacterTable,
) -> IndResTable {
    let mut a = Vec::with_capacity(h_table.irreducibles().len());
    for psi in h_table.irreducibles() {
        let induced = induce(psi, emb);
        let mut row = Vec::with_capacity(g_table.irreducibles().len());
        for chi in g_table.irreducibles() {
            let up = inner_product(&induced, chi);
            let down = inner_product(psi, &restrict(chi, emb));
            assert_eq!(up, down, "Frobenius reciprocity failed");
            let n = up.try_integer().expect("induction multiplicities are integers");
            row.push(u64::try_from(n).expect("multiplicities are non-negative"));
        }
        a.push(row);
    }
    IndResTable { a }
}

/// `c = a·aᵀ·a` as exact integer matrices, audited on one row by the direct
/// character computation (induce ∘ restrict ∘ induce, then decompose).
pub fn triple_table(
    table: &IndResTable,
    emb: &SubgroupEmbedding,
    h_table: &CharacterTable,
    g_table: &CharacterTable,
) -> Result<TripleTable, Depth2Error> {
    let a = &table.a;
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    // aᵀ·a, then a·(aᵀ·a)
    let mut ata = vec![vec![0u64; n]; n];
    for i in 0..n {
        for j in 0..n {
            ata[i][j] = (0..m).map(|r| a[r][i] * a[r][j]).sum();
        }
    }
    let mut c = vec![vec![0u64; n]; m];
    for r in 0..m {
        for s in 0..n {
            c[r][s] = (0..n).map(|j| a[r][j] * ata[j][s]).sum();
        }
    }
    // Audit row 0 through the character route.
    if m > 0 {
        let psi = &h_table.irreducibles()[0];
        let back = induce(&restrict(&induce(psi, emb), emb), emb);
        let audited = decompose(&back, g_table)
            .map_err(|_| Depth2Error::ConsistencyFailure { row: 0 })?;
        if audited != c[0] {
            return Err(Depth2Error::ConsistencyFailure { row: 0 });
        }
    }
    Ok(TripleTable { c })
}

/// The multiplicity criterion on a pair of tables.
pub fn depth_two_verdict(a: &IndResTable, c: &TripleTable) -> DepthTwoVerdict {
    let mut minimal_n = 1u64;
    for (i, row) in a.a.iter().enumerate() {
        for (j, &aij) in row.iter().enumerate() {
            let cij = c.c[i][j];
            if aij == 0 {
                if cij != 0 {
                    return DepthTwoVerdict {
                        is_d2: false,
                        minimal_n: None,
                        witness: Some((i + 1, j + 1)),
                    };
                }
            } else {
                minimal_n = minimal_n.max(cij.div_ceil(aij));
            }
        }
    }
    DepthTwoVerdict { is_d2: true, minimal_n: Some(minimal_n), witness: None }
}

/// Full character-theoretic analysis of one pair H ≤ G.
pub fn analyze_pair(emb: &SubgroupEmbedding) -> Result<PairAnalysis, Depth2Error> {
    let h_table = character_table(emb.subgroup());
    let g_table = character_table(emb.ambient());
    analyze_pair_with_tables(emb, h_table, g_table)
}

/// Variant that reuses precomputed tables (the sweep shares the G table).
pub fn analyze_pair_with_tables(
    emb: &SubgroupEmbedding,
    h_table: CharacterTable,
    g_table: CharacterTable,
) -> Result<PairAnalysis, Depth2Error> {
    let ind_res = ind_res_table(emb, &h_table, &g_table);
    let triple = triple_table(&ind_res, emb, &h_table, &g_table)?;
    let verdict = depth_two_verdict(&ind_res, &triple);
    Ok(PairAnalysis { h_table, g_table, ind_res, triple, verdict })
}

/// Sweep record for one subgroup.
#[derive(Clone, Debug, Serialize)]
pub struct SweepEntry {
    /// Printable generators of the subgroup.
    pub generators: Vec<String>,
    pub order: usize,
    pub index: usize,
    /// Number of conjugate subgroups this entry represents.
    pub conjugates: usize,
    pub normal: bool,
    pub d2: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimal_n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<(usize, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub group_order: usize,
    pub subgroups: Vec<SweepEntry>,
    /// True iff `normal ⟺ depth two` held for every subgroup.
    pub equivalence_holds: bool,
}

/// Runs the depth-two/normality sweep over every subgroup (one per conjugacy
/// class unless `exhaustive`).  Returns `TheoremViolation` if any subgroup
/// breaks the equivalence — that signals an implementation bug, not a
/// mathematical discovery.
pub fn normality_equivalence_sweep(
    group: &Arc<PermGroup>,
    exhaustive: bool,
) -> Result<SweepReport, Depth2Error> {
    let g_table = character_table(group);
    let subgroups: Vec<(SubgroupEmbedding, usize)> = if exhaustive {
        enumerate_subgroups(group).into_iter().map(|e| (e, 1)).collect()
    } else {
        subgroup_conjugacy_classes(group)
    };

    let entries: Vec<Result<SweepEntry, Depth2Error>> = subgroups
        .par_iter()
        .map(|(emb, conjugates)| {
            let h_table = character_table(emb.subgroup());
            let analysis = analyze_pair_with_tables(emb, h_table, g_table.clone())?;
            let normal = emb.is_normal();
            let small = crate::perm::small_generating_set(emb);
            let generator_strings: Vec<String> = if small.is_empty() {
                vec!["()".to_owned()]
            } else {
                small.iter().map(|p| p.to_string()).collect()
            };
            if normal != analysis.verdict.is_d2 {
                return Err(Depth2Error::TheoremViolation {
                    subgroup: generator_strings.join(", "),
                    normal,
                    depth_two: analysis.verdict.is_d2,
                });
            }
            Ok(SweepEntry {
                generators: generator_strings,
                order: emb.subgroup().order(),
                index: emb.index(),
                conjugates: *conjugates,
                normal,
                d2: analysis.verdict.is_d2,
                minimal_n: analysis.verdict.minimal_n,
                witness: analysis.verdict.witness,
            })
        })
        .collect();

    let mut subgroup_entries = Vec::with_capacity(entries.len());
    for e in entries {
        subgroup_entries.push(e?);
    }
    Ok(SweepReport {
        group_order: group.order(),
        subgroups: subgroup_entries,
        equivalence_holds: true,
    })
}

/// `trivial ⊗ regular` sanity value used by unit tests: the induced character
/// of the trivial character of the trivial subgroup is the regular character.
pub fn regular_multiplicities(g_table: &CharacterTable) -> Vec<u64> {
    g_table.degrees()
}
