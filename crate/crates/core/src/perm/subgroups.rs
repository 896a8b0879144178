//! Subgroup embeddings: transversals, normality, double cosets, and
//! exhaustive subgroup enumeration by layered closure.

use std::collections::BTreeSet;
use std::sync::Arc;

use super::group::{GroupError, PermGroup};
use super::permutation::Permutation;

/// A subgroup H ≤ G with its right-coset transversal (G = ⊔ H·gᵢ, g₀ = 1).
#[derive(Clone)]
pub struct SubgroupEmbedding {
    ambient: Arc<PermGroup>,
    subgroup: Arc<PermGroup>,
    /// Subgroup element index → ambient element index.
    element_map: Vec<usize>,
    /// Ambient membership: ambient element index → subgroup index, if any.
    ambient_to_sub: Vec<Option<usize>>,
    /// Right-coset representatives by ambient index; identity first.
    transversal: Vec<usize>,
}

impl SubgroupEmbedding {
    /// Builds the embedding from the subgroup generated by `generators`
    /// inside `ambient`.
    pub fn generated(
        ambient: Arc<PermGroup>,
        generators: &[Permutation],
    ) -> Result<Self, GroupError> {
        for g in generators {
            if !ambient.contains(g) {
                return Err(GroupError::NotASubgroup);
            }
        }
        let subgroup = PermGroup::generate_capped(
            ambient.degree(),
            generators.to_vec(),
            ambient.order(),
        )?;
        Self::new(ambient, Arc::new(subgroup))
    }

    /// Embeds an already-enumerated subgroup; verifies containment.
    pub fn new(ambient: Arc<PermGroup>, subgroup: Arc<PermGroup>) -> Result<Self, GroupError> {
        if subgroup.degree() != ambient.degree() || ambient.order() % subgroup.order() != 0 {
            return Err(GroupError::NotASubgroup);
        }
        let mut element_map = Vec::with_capacity(subgroup.order());
        let mut ambient_to_sub = vec![None; ambient.order()];
        for (h_idx, h) in subgroup.elements().iter().enumerate() {
            let g_idx = ambient.index_of(h).ok_or(GroupError::NotASubgroup)?;
            element_map.push(g_idx);
            ambient_to_sub[g_idx] = Some(h_idx);
        }
        // Right cosets H·g, representatives in ambient enumeration order.
        let mut coset_of = vec![usize::MAX; ambient.order()];
        let mut transversal = Vec::new();
        for g in 0..ambient.order() {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let rep = transversal.len();
            transversal.push(g);
            for &h in &element_map {
                coset_of[ambient.mul(h, g)] = rep;
            }
        }
        Ok(SubgroupEmbedding { ambient, subgroup, element_map, ambient_to_sub, transversal })
    }

    pub fn ambient(&self) -> &Arc<PermGroup> {
        &self.ambient
    }

    pub fn subgroup(&self) -> &Arc<PermGroup> {
        &self.subgroup
    }

    pub fn index(&self) -> usize {
        self.ambient.order() / self.subgroup.order()
    }

    /// Ambient element index of subgroup element `h_idx`.
    pub fn to_ambient(&self, h_idx: usize) -> usize {
        self.element_map[h_idx]
    }

    /// Subgroup element index of ambient element `g_idx`, if it lies in H.
    pub fn to_subgroup(&self, g_idx: usize) -> Option<usize> {
        self.ambient_to_sub[g_idx]
    }

    pub fn contains_ambient(&self, g_idx: usize) -> bool {
        self.ambient_to_sub[g_idx].is_some()
    }

    /// Right-coset representatives (ambient indices, identity first).
    pub fn transversal(&self) -> &[usize] {
        &self.transversal
    }

    /// Sorted ambient element indices of the subgroup.
    pub fn element_set(&self) -> Vec<usize> {
        let mut v = self.element_map.clone();
        v.sort_unstable();
        v
    }

    /// True iff g·H·g⁻¹ = H for every generator g of the ambient group.
    pub fn is_normal(&self) -> bool {
        let gens: Vec<usize> = self
            .ambient
            .generators()
            .iter()
            .map(|g| self.ambient.index_of(g).expect("generator in group"))
            .collect();
        for g in gens {
            for &h in &self.element_map {
                if !self.contains_ambient(self.ambient.conjugate(g, h)) {
                    return false;
                }
            }
        }
        true
    }

    /// The conjugate subgroup g·H·g⁻¹.
    pub fn conjugate_by(&self, g_idx: usize) -> SubgroupEmbedding {
        let elements: Vec<Permutation> = self
            .element_map
            .iter()
            .map(|&h| self.ambient.element(self.ambient.conjugate(g_idx, h)).clone())
            .collect();
        let sub = PermGroup::from_elements(self.ambient.degree(), elements)
            .expect("conjugate subgroup is closed");
        SubgroupEmbedding::new(self.ambient.clone(), Arc::new(sub))
            .expect("conjugate subgroup embeds")
    }

    /// Intersection H ∩ K as a subgroup embedding of the common ambient.
    pub fn intersect(&self, other: &SubgroupEmbedding) -> SubgroupEmbedding {
        let elements: Vec<Permutation> = self
            .element_map
            .iter()
            .filter(|&&g| other.contains_ambient(g))
            .map(|&g| self.ambient.element(g).clone())
            .collect();
        let sub = PermGroup::from_elements(self.ambient.degree(), elements)
            .expect("intersection is closed");
        SubgroupEmbedding::new(self.ambient.clone(), Arc::new(sub)).expect("intersection embeds")
    }
}

/// One representative per double coset H\G/K, by smallest ambient index;
/// the unions H·g·K partition G.
pub fn double_coset_representatives(
    ambient: &PermGroup,
    h: &SubgroupEmbedding,
    k: &SubgroupEmbedding,
) -> Vec<usize> {
    let mut seen = vec![false; ambient.order()];
    let mut reps = Vec::new();
    for g in 0..ambient.order() {
        if seen[g] {
            continue;
        }
        reps.push(g);
        for &a in &h.element_map {
            let ag = ambient.mul(a, g);
            for &b in &k.element_map {
                seen[ambient.mul(ag, b)] = true;
            }
        }
    }
    reps
}

/// All subgroups of `ambient` by layered closure: cyclic subgroups first,
/// then repeated one-generator extensions, deduplicated by element set.
/// Results are sorted by (order, element set) for reproducibility.
pub fn enumerate_subgroups(ambient: &Arc<PermGroup>) -> Vec<SubgroupEmbedding> {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut sets: Vec<Vec<usize>> = Vec::new();

    let trivial = vec![0usize];
    seen.insert(trivial.clone());
    sets.push(trivial);

    // Layer 0: cyclic subgroups.  Each discovered subgroup carries a short
    // generator list so later closures stay cheap.
    let mut frontier: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for g in 1..ambient.order() {
        let set = cyclic_closure(ambient, &[g]);
        if seen.insert(set.clone()) {
            frontier.push((set.clone(), vec![g]));
            sets.push(set);
        }
    }
    // Extend by one generator at a time until closure.
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (base, gens) in &frontier {
            if base.len() == ambient.order() {
                continue;
            }
            for g in 1..ambient.order() {
                if base.binary_search(&g).is_ok() {
                    continue;
                }
                let mut extended = gens.clone();
                extended.push(g);
                let set = cyclic_closure(ambient, &extended);
                if seen.insert(set.clone()) {
                    next.push((set.clone(), extended));
                    sets.push(set);
                }
            }
        }
        frontier = next;
    }

    sets.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    sets.into_iter()
        .map(|set| {
            let elements: Vec<Permutation> =
                set.iter().map(|&i| ambient.element(i).clone()).collect();
            let sub = PermGroup::from_elements(ambient.degree(), elements)
                .expect("closed set is a subgroup");
            SubgroupEmbedding::new(ambient.clone(), Arc::new(sub)).expect("subgroup embeds")
        })
        .collect()
}

/// Subgroups up to conjugacy: one representative (smallest element set) per
/// orbit, with the orbit size.
pub fn subgroup_conjugacy_classes(ambient: &Arc<PermGroup>) -> Vec<(SubgroupEmbedding, usize)> {
    let all = enumerate_subgroups(ambient);
    let mut sets: Vec<Vec<usize>> = all.iter().map(SubgroupEmbedding::element_set).collect();
    sets.sort();
    let mut assigned: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut result = Vec::new();
    for set in &sets {
        if assigned.contains(set) {
            continue;
        }
        let mut orbit: BTreeSet<Vec<usize>> = BTreeSet::new();
        for g in 0..ambient.order() {
            let mut conj: Vec<usize> =
                set.iter().map(|&x| ambient.conjugate(g, x)).collect();
            conj.sort_unstable();
            orbit.insert(conj);
        }
        let rep = orbit.iter().next().expect("nonempty orbit").clone();
        let orbit_size = orbit.len();
        for s in orbit {
            assigned.insert(s);
        }
        let elements: Vec<Permutation> = rep.iter().map(|&i| ambient.element(i).clone()).collect();
        let sub = PermGroup::from_elements(ambient.degree(), elements).expect("subgroup");
        result.push((
            SubgroupEmbedding::new(ambient.clone(), Arc::new(sub)).expect("embedding"),
            orbit_size,
        ));
    }
    result.sort_by_key(|(emb, _)| (emb.subgroup().order(), emb.element_set()));
    result
}

/// A small deterministic generating set of the subgroup: greedily add the
/// smallest element not yet generated.
pub fn small_generating_set(emb: &SubgroupEmbedding) -> Vec<Permutation> {
    let ambient = emb.ambient();
    let elements = emb.element_set();
    let mut gens: Vec<usize> = Vec::new();
    let mut closure = vec![0usize];
    for &x in &elements {
        if closure.binary_search(&x).is_ok() {
            continue;
        }
        gens.push(x);
        closure = cyclic_closure(ambient, &gens);
        if closure.len() == elements.len() {
            break;
        }
    }
    gens.iter().map(|&i| ambient.element(i).clone()).collect()
}

fn cyclic_closure(ambient: &PermGroup, generators: &[usize]) -> Vec<usize> {
    let mut in_set = vec![false; ambient.order()];
    let mut elements = vec![0usize];
    in_set[0] = true;
    let mut frontier = 0;
    while frontier < elements.len() {
        let x = elements[frontier];
        for &g in generators {
            let y = ambient.mul(g, x);
            if !in_set[y] {
                in_set[y] = true;
                elements.push(y);
            }
        }
        frontier += 1;
    }
    elements.sort_unstable();
    elements
}
