//! Permutations of `{0..n−1}` in image form.

use std::fmt;

use serde::Serialize;

use super::group::GroupError;

/// A bijection of `{0..degree−1}`, stored as the image vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree).collect() }
    }

    /// Validates that `images` is a permutation.
    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(GroupError::InvalidPermutation { images });
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, GroupError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for window in 0..cycle.len() {
                let from = cycle[window];
                let to = cycle[(window + 1) % cycle.len()];
                if from >= degree || touched[from] {
                    return Err(GroupError::InvalidCycles { degree, cycles: cycles.to_vec() });
                }
                touched[from] = true;
                images[from] = to;
            }
        }
        Self::from_images(images)
            .map_err(|_| GroupError::InvalidCycles { degree, cycles: cycles.to_vec() })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Composition `self ∘ other`: `other` acts first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn order(&self) -> u64 {
        self.cycles_with_fixed_points()
            .into_iter()
            .map(|c| c.len() as u64)
            .fold(1, num_integer::lcm)
    }

    pub fn pow(&self, k: u64) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        for _ in 0..k {
            acc = self.compose(&acc);
        }
        acc
    }

    fn cycles_with_fixed_points(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.images[start];
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.images[next];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Nontrivial cycles, each rotated to start at its minimum, sorted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut cycles: Vec<Vec<usize>> = self
            .cycles_with_fixed_points()
            .into_iter()
            .filter(|c| c.len() > 1)
            .collect();
        cycles.sort_by_key(|c| c[0]);
        cycles
    }

    /// Cycle type as a sorted list of nontrivial cycle lengths.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> =
            self.cycles_with_fixed_points().iter().map(Vec::len).filter(|&l| l > 1).collect();
        t.sort_unstable();
        t
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_applies_rightmost_first() {
        let a = Permutation::from_cycles(3, &[vec![0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap();
        // (a∘b)(0) = a(b(0)) = a(1) = 0
        assert_eq!(a.compose(&b).apply(0), 0);
        assert_eq!(b.compose(&a).apply(0), 2);
    }

    #[test]
    fn order_and_inverse() {
        let c = Permutation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(c.order(), 4);
        assert!(c.compose(&c.inverse()).is_identity());
        assert_eq!(c.to_string(), "(0 1 2 3)");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_cycles(2, &[vec![0, 2]]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_err());
    }
}
