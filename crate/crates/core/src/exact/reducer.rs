//! Streaming sparse row reduction.
//!
//! Constraint systems on tensor-square spaces reach thousands of rows; rows
//! are generated one at a time, reduced against the echelon basis built so
//! far, and dropped if dependent, so memory stays bounded by the rank.  Rows
//! are kept pivot-normalized but not inter-reduced; reduction of an incoming
//! vector still yields its unique canonical form (zero at every pivot).

use std::collections::{BTreeMap, HashMap};

use super::scalar::Field;

/// Sparse vector: strictly increasing indices, nonzero values.
pub type SparseVec<F> = Vec<(usize, F)>;

pub fn to_sparse<F: Field>(dense: &[F]) -> SparseVec<F> {
    dense
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| (i, v.clone()))
        .collect()
}

pub fn to_dense<F: Field>(sparse: &SparseVec<F>, len: usize) -> Vec<F> {
    let mut v = vec![F::zero(); len];
    for (i, x) in sparse {
        v[*i] = x.clone();
    }
    v
}

/// Incremental echelon basis of a row space.
#[derive(Clone, Debug)]
pub struct RowReducer<F: Field> {
    ncols: usize,
    rows: Vec<SparseVec<F>>,
    by_pivot: HashMap<usize, usize>,
}

impl<F: Field> RowReducer<F> {
    pub fn new(ncols: usize) -> Self {
        RowReducer { ncols, rows: Vec::new(), by_pivot: HashMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.by_pivot.keys().copied().collect();
        p.sort_unstable();
        p
    }

    /// Canonical form of `v` modulo the row space: zero at every pivot index.
    pub fn reduce(&self, v: SparseVec<F>) -> SparseVec<F> {
        let mut work: BTreeMap<usize, F> = v.into_iter().collect();
        let mut out: SparseVec<F> = Vec::new();
        while let Some((&idx, _)) = work.iter().next() {
            let coeff = work.remove(&idx).unwrap();
            if coeff.is_zero() {
                continue;
            }
            match self.by_pivot.get(&idx) {
                Some(&row_id) => {
                    // Subtract coeff · row; the row leads at idx with coeff 1,
                    // so only indices > idx are touched.
                    for (j, w) in &self.rows[row_id][1..] {
                        let entry = work.entry(*j).or_insert_with(F::zero);
                        *entry = entry.clone() - coeff.clone() * w.clone();
                        if entry.is_zero() {
                            work.remove(j);
                        }
                    }
                }
                None => out.push((idx, coeff)),
            }
        }
        out
    }

    /// Inserts a row; returns its pivot column if it was independent.
    pub fn insert(&mut self, v: SparseVec<F>) -> Option<usize> {
        let reduced = self.reduce(v);
        let (pivot, lead) = reduced.first()?.clone();
        let inv = lead.inv();
        let normalized: SparseVec<F> =
            reduced.into_iter().map(|(i, x)| (i, x * inv.clone())).collect();
        self.by_pivot.insert(pivot, self.rows.len());
        self.rows.push(normalized);
        Some(pivot)
    }

    pub fn contains(&self, v: SparseVec<F>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Basis of `{x : Rx = 0}` where `R` is the accumulated row space,
    /// one vector per non-pivot column, by back-substitution.
    pub fn nullspace_basis(&self) -> Vec<Vec<F>> {
        let pivots = self.pivots();
        let is_pivot: Vec<bool> = {
            let mut b = vec![false; self.ncols];
            for &p in &pivots {
                b[p] = true;
            }
            b
        };
        let free: Vec<usize> = (0..self.ncols).filter(|&c| !is_pivot[c]).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![F::zero(); self.ncols];
                x[f] = F::one();
                for &p in pivots.iter().rev() {
                    let row = &self.rows[self.by_pivot[&p]];
                    let mut acc = F::zero();
                    for (j, w) in &row[1..] {
                        if !x[*j].is_zero() {
                            acc = acc + w.clone() * x[*j].clone();
                        }
                    }
                    x[p] = -acc;
                }
                x
            })
            .collect()
    }
}

/// Span membership with certificates: tracks, for every reduced row, its
/// expression in terms of the originally inserted vectors.
#[derive(Clone, Debug)]
pub struct SpanSolver<F: Field> {
    ncols: usize,
    inserted: usize,
    rows: Vec<(SparseVec<F>, SparseVec<F>)>,
    by_pivot: HashMap<usize, usize>,
}

impl<F: Field> SpanSolver<F> {
    pub fn new(ncols: usize) -> Self {
        SpanSolver { ncols, inserted: 0, rows: Vec::new(), by_pivot: HashMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce_tracked(&self, v: SparseVec<F>) -> (SparseVec<F>, SparseVec<F>) {
        let mut work: BTreeMap<usize, F> = v.into_iter().collect();
        let mut combo: BTreeMap<usize, F> = BTreeMap::new();
        let mut out: SparseVec<F> = Vec::new();
        while let Some((&idx, _)) = work.iter().next() {
            let coeff = work.remove(&idx).unwrap();
            if coeff.is_zero() {
                continue;
            }
            match self.by_pivot.get(&idx) {
                Some(&row_id) => {
                    let (row, row_combo) = &self.rows[row_id];
                    for (j, w) in &row[1..] {
                        let entry = work.entry(*j).or_insert_with(F::zero);
                        *entry = entry.clone() - coeff.clone() * w.clone();
                        if entry.is_zero() {
                            work.remove(j);
                        }
                    }
                    for (j, w) in row_combo {
                        let entry = combo.entry(*j).or_insert_with(F::zero);
                        *entry = entry.clone() + coeff.clone() * w.clone();
                        if entry.is_zero() {
                            combo.remove(j);
                        }
                    }
                }
                None => out.push((idx, coeff)),
            }
        }
        (out, combo.into_iter().collect())
    }

    /// Inserts a candidate vector; dependent vectors are recorded but add no
    /// new row.  Returns true if the rank grew.
    pub fn insert(&mut self, v: SparseVec<F>) -> bool {
        let k = self.inserted;
        self.inserted += 1;
        let (reduced, combo) = self.reduce_tracked(v);
        let Some((pivot, lead)) = reduced.first().cloned() else {
            return false;
        };
        let inv = lead.inv();
        let row: SparseVec<F> = reduced.into_iter().map(|(i, x)| (i, x * inv.clone())).collect();
        // reduced = raw − Σ combo·orig  ⇒  normalized row = Σ coeffs·orig
        let mut full_combo: BTreeMap<usize, F> = BTreeMap::new();
        full_combo.insert(k, inv.clone());
        for (j, w) in combo {
            full_combo.insert(j, -(w * inv.clone()));
        }
        self.by_pivot.insert(pivot, self.rows.len());
        self.rows.push((row, full_combo.into_iter().collect()));
        true
    }

    /// Exact coefficients over the inserted vectors expressing `target`, or
    /// `None` if outside the span.  Indices refer to insertion order.
    pub fn express(&self, target: SparseVec<F>) -> Option<SparseVec<F>> {
        let (reduced, combo) = self.reduce_tracked(target);
        if reduced.is_empty() {
            Some(combo)
        } else {
            None
        }
    }
}
