//! Exact sparse row reduction over the rationals.
//!
//! One incremental echelon structure serves every rank/kernel/radical
//! computation in the crate: rows are inserted one at a time, reduced against
//! the current pivot rows, and either become a new (pivot-normalized) row or
//! expose a linear dependence. An optional dense augmentation tracks the
//! combination that produced each dependence, which is how kernels are
//! expressed back in the diagram basis. Insertion order is deterministic, so
//! identical inputs always yield identical bases.

use num_traits::{One, Zero};
use std::collections::BTreeMap;

use crate::Scalar;

/// A sparse vector: (index, coefficient) pairs sorted by index, no zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Builds a sparse vector from a dense slice.
pub fn sparse_from_dense(dense: &[Scalar]) -> SparseVec {
    dense
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

/// v ← v − c·w for sorted sparse vectors.
fn sparse_axpy(v: &SparseVec, c: &Scalar, w: &SparseVec) -> SparseVec {
    let mut out = SparseVec::with_capacity(v.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < w.len() {
        match (v.get(i), w.get(j)) {
            (Some((vi, vc)), Some((wj, wc))) => {
                if vi < wj {
                    out.push((*vi, vc.clone()));
                    i += 1;
                } else if wj < vi {
                    let val = -(c * wc);
                    if !val.is_zero() {
                        out.push((*wj, val));
                    }
                    j += 1;
                } else {
                    let val = vc - c * wc;
                    if !val.is_zero() {
                        out.push((*vi, val));
                    }
                    i += 1;
                    j += 1;
                }
            }
            (Some((vi, vc)), None) => {
                out.push((*vi, vc.clone()));
                i += 1;
            }
            (None, Some((wj, wc))) => {
                let val = -(c * wc);
                if !val.is_zero() {
                    out.push((*wj, val));
                }
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

fn dense_axpy(v: &mut [Scalar], c: &Scalar, w: &[Scalar]) {
    for (vi, wi) in v.iter_mut().zip(w) {
        if !wi.is_zero() {
            *vi -= c * wi;
        }
    }
}

/// Incremental echelon basis with optional augmentation tracking.
pub struct Echelon {
    /// pivot-normalized rows
    rows: Vec<SparseVec>,
    /// augmentation rows, same length as `rows` when tracking is on
    augs: Vec<Vec<Scalar>>,
    /// pivot column → row index
    pivots: BTreeMap<usize, usize>,
    aug_width: usize,
}

/// Result of inserting a row into an [`Echelon`].
pub enum Inserted {
    /// The row was independent and joined the basis.
    Independent,
    /// The row was dependent; if augmentation is tracked, the reduced
    /// augmentation (a null combination of the inserted rows) is returned.
    Dependent(Option<Vec<Scalar>>),
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon {
            rows: Vec::new(),
            augs: Vec::new(),
            pivots: BTreeMap::new(),
            aug_width: 0,
        }
    }

    /// Creates an echelon that tracks dense augmentations of the given width.
    pub fn with_augmentation(aug_width: usize) -> Echelon {
        Echelon {
            rows: Vec::new(),
            augs: Vec::new(),
            pivots: BTreeMap::new(),
            aug_width,
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` (and `aug` in lockstep) against the basis. Without
    /// augmentation tracking the row may be rescaled freely, which keeps the
    /// coefficients small on long reduction chains.
    fn reduce(&self, mut row: SparseVec, aug: &mut Vec<Scalar>) -> SparseVec {
        loop {
            let lead = match row.first() {
                Some((i, _)) => *i,
                None => return row,
            };
            match self.pivots.get(&lead) {
                Some(&r) => {
                    // stored pivot entries are 1 in augmented echelons and
                    // arbitrary (primitive integer) otherwise
                    let c = &row[0].1 / &self.rows[r][0].1;
                    row = sparse_axpy(&row, &c, &self.rows[r]);
                    if self.aug_width > 0 {
                        dense_axpy(aug, &c, &self.augs[r]);
                    } else {
                        normalize_primitive(&mut row);
                    }
                }
                None => return row,
            }
        }
    }

    /// Inserts a row with an augmentation (empty when not tracking).
    pub fn insert_with_aug(&mut self, row: SparseVec, mut aug: Vec<Scalar>) -> Inserted {
        let row = self.reduce(row, &mut aug);
        match row.first() {
            None => Inserted::Dependent(if self.aug_width > 0 { Some(aug) } else { None }),
            Some((lead, c)) => {
                let lead = *lead;
                let row = if self.aug_width > 0 {
                    // normalize so the pivot entry is 1
                    let c = c.clone();
                    for v in aug.iter_mut() {
                        *v /= c.clone();
                    }
                    row.into_iter().map(|(i, v)| (i, v / c.clone())).collect()
                } else {
                    // keep the stored rows as primitive integer vectors
                    let mut row = row;
                    normalize_primitive(&mut row);
                    row
                };
                // full reduction: eliminate this pivot from existing rows so
                // the basis stays in reduced echelon form. Only worth its
                // cost when augmentations are tracked (kernel/solve); the
                // rank and membership answers are identical without it.
                if self.aug_width > 0 {
                    for r in 0..self.rows.len() {
                        if let Some(pos) = self.rows[r].iter().position(|(i, _)| *i == lead) {
                            let factor = self.rows[r][pos].1.clone();
                            self.rows[r] = sparse_axpy(&self.rows[r], &factor, &row);
                            dense_axpy(&mut self.augs[r], &factor, &aug);
                        }
                    }
                }
                self.pivots.insert(lead, self.rows.len());
                self.rows.push(row);
                if self.aug_width > 0 {
                    self.augs.push(aug);
                }
                Inserted::Independent
            }
        }
    }

    /// Inserts a row without augmentation bookkeeping.
    pub fn insert(&mut self, row: SparseVec) -> bool {
        matches!(self.insert_with_aug(row, Vec::new()), Inserted::Independent)
    }

    /// Membership test: true iff `row` lies in the current span.
    pub fn contains(&self, row: SparseVec) -> bool {
        let mut aug = Vec::new();
        self.reduce(row, &mut aug).is_empty()
    }

    /// Expresses `row` as a combination of the *inserted* rows, if possible.
    /// Requires augmentation tracking; returns the coefficient vector c with
    /// row = Σ c_i inserted_i.
    pub fn solve(&self, row: SparseVec) -> Option<Vec<Scalar>> {
        assert!(self.aug_width > 0, "solve needs augmentation tracking");
        let mut aug = vec![Scalar::zero(); self.aug_width];
        let reduced = self.reduce(row, &mut aug);
        if reduced.is_empty() {
            Some(aug.into_iter().map(|c| -c).collect())
        } else {
            None
        }
    }

    /// The reduced rows (sorted by pivot column) — a canonical basis.
    pub fn basis(&self) -> Vec<SparseVec> {
        let mut out: Vec<SparseVec> = Vec::new();
        for (_, &r) in &self.pivots {
            out.push(self.rows[r].clone());
        }
        out
    }
}

impl Default for Echelon {
    fn default() -> Self {
        Echelon::new()
    }
}

/// Rescales a row to a primitive integer vector (content 1, positive lead).
/// Keeps coefficient growth in check during long eliminations.
fn normalize_primitive(row: &mut SparseVec) {
    use num_bigint::BigInt;
    use num_integer::Integer;
    let mut g = BigInt::zero();
    let mut l = BigInt::one();
    for (_, c) in row.iter() {
        g = g.gcd(c.numer());
        l = l.lcm(c.denom());
    }
    if g.is_zero() {
        return;
    }
    if let Some((_, lead)) = row.first() {
        if lead.numer().sign() == num_bigint::Sign::Minus {
            g = -g;
        }
    }
    let factor = Scalar::new(l, g);
    if factor.is_one() {
        return;
    }
    for (_, c) in row.iter_mut() {
        *c *= &factor;
    }
}

/// Rank of a list of sparse rows, eliminating along the transpose.
///
/// `rank(M) = rank(Mᵀ)`. When the matrix is wide (few long rows over many
/// columns) the transposed rows are short and sparse, which keeps the
/// elimination fill-in confined to the small dimension.
pub fn transpose_rank(rows: &[SparseVec]) -> usize {
    let mut cols: BTreeMap<usize, SparseVec> = BTreeMap::new();
    for (i, row) in rows.iter().enumerate() {
        for (c, v) in row {
            cols.entry(*c).or_default().push((i, v.clone()));
        }
    }
    rank(cols.into_values())
}

/// Rank of a list of sparse rows.
///
/// Unlike [`Echelon`], this uses forward-only elimination with primitive
/// integer rows: stored rows are never revisited and every row is rescaled to
/// content 1, which keeps the rational coefficients small on large inputs.
pub fn rank(rows: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut pivots: BTreeMap<usize, SparseVec> = BTreeMap::new();
    for mut row in rows {
        let mut steps = 0usize;
        loop {
            let lead = match row.first() {
                Some((i, _)) => *i,
                None => break,
            };
            match pivots.get(&lead) {
                Some(p) => {
                    let c = &row[0].1 / &p[0].1;
                    row = sparse_axpy(&row, &c, p);
                    steps += 1;
                    if steps % 16 == 0 {
                        normalize_primitive(&mut row);
                    }
                }
                None => {
                    normalize_primitive(&mut row);
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Kernel of the linear map "row i ↦ rows[i]" — vectors c with Σ c_i rows[i]
/// = 0, expressed in the inserted-row index basis. Deterministic: each kernel
/// vector has trailing coefficient 1 at a distinct index.
pub fn kernel(rows: &[SparseVec]) -> Vec<Vec<Scalar>> {
    let n = rows.len();
    let mut ech = Echelon::with_augmentation(n);
    let mut kernel = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let mut aug = vec![Scalar::zero(); n];
        aug[i] = Scalar::one();
        if let Inserted::Dependent(Some(comb)) = ech.insert_with_aug(row.clone(), aug) {
            kernel.push(comb);
        }
    }
    kernel
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar;

    fn row(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(i, c)| (i, scalar(c))).collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(vec![row(&[(0, 1)]), row(&[(0, 2)])]), 1);
        assert_eq!(
            rank(vec![
                row(&[(0, 1), (1, 1)]),
                row(&[(1, 1), (2, 1)]),
                row(&[(0, 1), (2, -1)]),
            ]),
            2
        );
        assert_eq!(rank(Vec::<SparseVec>::new()), 0);
        assert_eq!(rank(vec![SparseVec::new()]), 0);
    }

    #[test]
    fn kernel_examples() {
        // rows: r0 = e0+e1, r1 = e1+e2, r2 = e0−e2 → kernel spanned by
        // (1, −1, 1)
        let rows = vec![
            row(&[(0, 1), (1, 1)]),
            row(&[(1, 1), (2, 1)]),
            row(&[(0, 1), (2, -1)]),
        ];
        let ker = kernel(&rows);
        assert_eq!(ker.len(), 1);
        let k = &ker[0];
        // verify Σ k_i rows[i] = 0
        let mut acc: Vec<Scalar> = vec![scalar(0); 3];
        for (i, r) in rows.iter().enumerate() {
            for (j, c) in r {
                acc[*j] += &k[i] * c;
            }
        }
        assert!(acc.iter().all(|c| c.is_zero()));
        assert_eq!(k[2], scalar(1)); // trailing-1 normalization
    }

    #[test]
    fn membership_and_determinism() {
        let mut e1 = Echelon::new();
        let mut e2 = Echelon::new();
        let rows = vec![
            row(&[(0, 2), (3, 4)]),
            row(&[(1, 1), (3, 1)]),
            row(&[(0, 1), (1, 1), (3, 3)]),
        ];
        for r in &rows {
            e1.insert(r.clone());
            e2.insert(r.clone());
        }
        assert_eq!(e1.dim(), 2);
        assert_eq!(e1.basis(), e2.basis());
        assert!(e1.contains(row(&[(0, 4), (3, 8)])));
        assert!(!e1.contains(row(&[(2, 1)])));
    }
}
