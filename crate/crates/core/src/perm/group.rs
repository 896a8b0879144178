//! Group enumeration, conjugacy classes and element arithmetic by index.

use std::collections::HashMap;

use thiserror::Error;

use super::permutation::Permutation;

/// Largest group order the enumerators accept by default.
pub const DEFAULT_ORDER_CAP: usize = 5040;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("images {images:?} do not form a permutation")]
    InvalidPermutation { images: Vec<usize> },
    #[error("cycles {cycles:?} are not disjoint cycles on 0..{degree}")]
    InvalidCycles { degree: usize, cycles: Vec<Vec<usize>> },
    #[error("generator degree {found} does not match group degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group order exceeds the cap {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("elements do not form a subgroup of the ambient group")]
    NotASubgroup,
}

/// One conjugacy class, stored by element index.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub members: Vec<usize>,
    pub centralizer_order: u64,
}

/// A fully enumerated finite permutation group.
///
/// `elements[0]` is always the identity; conjugacy classes are listed in
/// order of their smallest member, so class 0 is `{1}`.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    inverse: Vec<usize>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
}

impl PermGroup {
    /// Enumerates the group generated by `generators` (BFS closure), failing
    /// once more than `cap` elements appear.
    pub fn generate_capped(
        degree: usize,
        generators: Vec<Permutation>,
        cap: usize,
    ) -> Result<Self, GroupError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        let mut elements = vec![Permutation::identity(degree)];
        let mut index = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut frontier = 0;
        while frontier < elements.len() {
            let current = elements[frontier].clone();
            for g in &generators {
                let next = g.compose(&current);
                if !index.contains_key(&next) {
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                    if elements.len() > cap {
                        return Err(GroupError::OrderCapExceeded { cap });
                    }
                }
            }
            frontier += 1;
        }
        let inverse = elements.iter().map(|g| index[&g.inverse()]).collect();
        let (classes, class_of) = conjugacy_partition(&elements, &index, &generators);
        Ok(PermGroup { degree, generators, elements, index, inverse, classes, class_of })
    }

    pub fn generate(degree: usize, generators: Vec<Permutation>) -> Result<Self, GroupError> {
        Self::generate_capped(degree, generators, DEFAULT_ORDER_CAP)
    }

    /// Wraps an explicit closed element list (used for subgroups already
    /// known to be closed); verifies closure.
    pub fn from_elements(degree: usize, elements: Vec<Permutation>) -> Result<Self, GroupError> {
        let group = Self::generate_capped(degree, elements.clone(), usize::MAX)?;
        if group.order() != elements.len() {
            return Err(GroupError::NotASubgroup);
        }
        Ok(group)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, idx: usize) -> &Permutation {
        &self.elements[idx]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    /// Product by element index (`a` acts after `b`).
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].compose(&self.elements[b])]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, element_idx: usize) -> usize {
        self.class_of[element_idx]
    }

    pub fn element_order(&self, idx: usize) -> u64 {
        self.elements[idx].order()
    }

    /// Exponent of the group: lcm of the element orders.
    pub fn exponent(&self) -> u64 {
        self.classes
            .iter()
            .map(|c| self.element_order(c.representative))
            .fold(1, num_integer::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.order()
    }

    /// Class of the inverse of the class representative.
    pub fn inverse_class(&self, class_idx: usize) -> usize {
        self.class_of[self.inv(self.classes[class_idx].representative)]
    }
}

fn conjugacy_partition(
    elements: &[Permutation],
    index: &HashMap<Permutation, usize>,
    generators: &[Permutation],
) -> (Vec<ConjugacyClass>, Vec<usize>) {
    let order = elements.len() as u64;
    let mut class_of = vec![usize::MAX; elements.len()];
    let mut classes = Vec::new();
    // Conjugating by generators suffices to close each orbit.
    let gen_pairs: Vec<(Permutation, Permutation)> =
        generators.iter().map(|g| (g.clone(), g.inverse())).collect();
    for start in 0..elements.len() {
        if class_of[start] != usize::MAX {
            continue;
        }
        let class_idx = classes.len();
        let mut members = vec![start];
        class_of[start] = class_idx;
        let mut frontier = 0;
        while frontier < members.len() {
            let x = members[frontier];
            for (g, g_inv) in &gen_pairs {
                let conj = g.compose(&elements[x]).compose(g_inv);
                let idx = index[&conj];
                if class_of[idx] == usize::MAX {
                    class_of[idx] = class_idx;
                    members.push(idx);
                }
            }
            frontier += 1;
        }
        members.sort_unstable();
        let centralizer_order = order / members.len() as u64;
        classes.push(ConjugacyClass { representative: start, members, centralizer_order });
    }
    (classes, class_of)
}
