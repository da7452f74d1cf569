//! Sparse exact linear algebra over `ℚ`.
//!
//! Rows are sorted coordinate lists. [`RrefBuilder`] maintains a row-echelon
//! basis of a growing row space: each stored row has a unique leading column
//! with coefficient 1, and reduction against the stored rows is the canonical
//! representative modulo the row space. Full reduced echelon form (tails
//! supported on free columns only) is produced on demand by back-substitution.

use crate::rational::{rat_one, Rat};
use num_traits::Zero;
use std::collections::BTreeMap;

/// A sparse vector: entries sorted by column, no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparseVec {
    entries: Vec<(u32, Rat)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec {
            entries: Vec::new(),
        }
    }

    /// Builds from unsorted, possibly repeating coordinates; combines and
    /// drops zeros.
    pub fn from_coords(mut coords: Vec<(u32, Rat)>) -> Self {
        coords.sort_by_key(|&(c, _)| c);
        let mut entries: Vec<(u32, Rat)> = Vec::with_capacity(coords.len());
        for (c, v) in coords {
            match entries.last_mut() {
                Some((lc, lv)) if *lc == c => *lv += v,
                _ => entries.push((c, v)),
            }
            if entries.last().is_some_and(|(_, v)| v.is_zero()) {
                entries.pop();
            }
        }
        SparseVec { entries }
    }

    pub fn unit(col: u32) -> Self {
        SparseVec {
            entries: vec![(col, rat_one())],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn leading(&self) -> Option<&(u32, Rat)> {
        self.entries.first()
    }

    pub fn entries(&self) -> &[(u32, Rat)] {
        &self.entries
    }

    pub fn coeff(&self, col: u32) -> Option<&Rat> {
        self.entries
            .binary_search_by_key(&col, |&(c, _)| c)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn scale(&self, s: &Rat) -> SparseVec {
        if s.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(c, v)| (*c, v * s)).collect(),
        }
    }

    /// `self + s * other`, merged.
    pub fn add_scaled(&self, other: &SparseVec, s: &Rat) -> SparseVec {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (0, 0);
        while a < self.entries.len() && b < other.entries.len() {
            let (ca, va) = &self.entries[a];
            let (cb, vb) = &other.entries[b];
            match ca.cmp(cb) {
                std::cmp::Ordering::Less => {
                    out.push((*ca, va.clone()));
                    a += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((*cb, vb * s));
                    b += 1;
                }
                std::cmp::Ordering::Equal => {
                    let v = va + &(vb * s);
                    if !v.is_zero() {
                        out.push((*ca, v));
                    }
                    a += 1;
                    b += 1;
                }
            }
        }
        out.extend(self.entries[a..].iter().cloned());
        out.extend(other.entries[b..].iter().map(|(c, v)| (*c, v * s)));
        SparseVec { entries: out }
    }

    fn normalize(&mut self) {
        if let Some((_, lead)) = self.entries.first() {
            let inv = rat_one() / lead.clone();
            for (_, v) in &mut self.entries {
                *v *= &inv;
            }
        }
    }
}

/// Incremental row-echelon basis of a row space.
#[derive(Debug, Clone, Default)]
pub struct RrefBuilder {
    pivots: BTreeMap<u32, SparseVec>,
}

impl RrefBuilder {
    pub fn new() -> Self {
        RrefBuilder {
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_cols(&self) -> impl Iterator<Item = u32> + '_ {
        self.pivots.keys().copied()
    }

    pub fn rows(&self) -> impl Iterator<Item = (&u32, &SparseVec)> {
        self.pivots.iter()
    }

    /// Canonical representative of `v` modulo the row space: every pivot
    /// column is eliminated. `v` is in the row space iff the result is zero.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut cur = v.clone();
        let mut scan = 0usize;
        loop {
            let Some(&(col, ref coeff)) = cur.entries.get(scan) else {
                return cur;
            };
            match self.pivots.get(&col) {
                Some(row) => {
                    let s = -coeff.clone();
                    cur = cur.add_scaled(row, &s);
                    // entries before `scan` are untouched: `row` starts at `col`.
                }
                None => scan += 1,
            }
        }
    }

    /// Reduces `v` and, if a nonzero residual remains, stores it as a new
    /// pivot row (normalized to leading coefficient 1). Returns the new pivot
    /// column, or `None` when `v` was already in the row space.
    pub fn insert(&mut self, v: SparseVec) -> Option<u32> {
        let mut residual = self.reduce(&v);
        if residual.is_zero() {
            return None;
        }
        residual.normalize();
        let col = residual.leading().expect("nonzero").0;
        self.pivots.insert(col, residual);
        Some(col)
    }

    /// Back-substitutes so every row's tail is supported on free columns
    /// only, then returns the rows keyed by pivot column.
    pub fn into_full_rref(self) -> BTreeMap<u32, SparseVec> {
        let mut resolved: BTreeMap<u32, SparseVec> = BTreeMap::new();
        // Descending pivot order: tails only reference larger columns, whose
        // rows are already resolved.
        for (col, row) in self.pivots.into_iter().rev() {
            let mut out = SparseVec::unit(col);
            for (c, v) in &row.entries()[1..] {
                match resolved.get(c) {
                    Some(r) => {
                        // Subtract v times the resolved row: the entry at the
                        // pivot column c cancels, leaving -v times its
                        // free-column tail.
                        let tail = SparseVec {
                            entries: r.entries()[1..].to_vec(),
                        };
                        out = out.add_scaled(&tail, &-v.clone());
                    }
                    None => {
                        out = out.add_scaled(&SparseVec::unit(*c), v);
                    }
                }
            }
            resolved.insert(col, out);
        }
        resolved
    }
}

/// Basis of the right kernel `{x : R x = 0}` of a fully reduced RREF,
/// parametrized by the free columns of `0..width`.
pub fn kernel_from_rref(rref: &BTreeMap<u32, SparseVec>, width: u32) -> Vec<SparseVec> {
    let mut kernel = Vec::new();
    for free in (0..width).filter(|c| !rref.contains_key(c)) {
        let mut coords = vec![(free, rat_one())];
        for (pivot, row) in rref {
            if let Some(c) = row.coeff(free) {
                coords.push((*pivot, -c.clone()));
            }
        }
        kernel.push(SparseVec::from_coords(coords));
    }
    kernel
}

/// Left kernel of the given rows: all coefficient vectors `c` with
/// `Σ c_i rows[i] = 0`, as sparse vectors over `0..rows.len()`.
pub fn left_kernel(rows: &[SparseVec], width: u32) -> Vec<SparseVec> {
    let mut builder = RrefBuilder::new();
    let mut combos = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        // Augment with a bookkeeping identity block at columns >= width.
        let mut aug = row.clone();
        aug.entries.push((width + i as u32, rat_one()));
        let pivot = builder.insert(aug);
        if let Some(col) = pivot {
            if col >= width {
                let stored = builder.pivots.get(&col).expect("just inserted");
                let combo = SparseVec {
                    entries: stored
                        .entries()
                        .iter()
                        .map(|(c, v)| (c - width, v.clone()))
                        .collect(),
                };
                combos.push(combo);
            }
        }
    }
    combos
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn vec_of(entries: &[(u32, i64)]) -> SparseVec {
        SparseVec::from_coords(entries.iter().map(|&(c, v)| (c, rat_int(v))).collect())
    }

    #[test]
    fn combine_and_drop_zeros() {
        let v = vec_of(&[(3, 1), (1, 2), (3, -1), (2, 0)]);
        assert_eq!(v.entries(), &[(1, rat_int(2))]);
    }

    #[test]
    fn rank_of_dependent_rows() {
        let mut b = RrefBuilder::new();
        b.insert(vec_of(&[(0, 1), (1, 1)]));
        b.insert(vec_of(&[(1, 1), (2, 1)]));
        assert_eq!(b.insert(vec_of(&[(0, 1), (2, -1)])), None);
        assert_eq!(b.rank(), 2);
    }

    #[test]
    fn reduce_gives_canonical_rep() {
        let mut b = RrefBuilder::new();
        b.insert(vec_of(&[(0, 2), (2, 2)]));
        let r = b.reduce(&vec_of(&[(0, 1), (1, 1)]));
        assert_eq!(r.entries(), &[(1, rat_int(1)), (2, rat_int(-1))]);
    }

    #[test]
    fn full_rref_tails_avoid_pivots() {
        let mut b = RrefBuilder::new();
        b.insert(vec_of(&[(0, 1), (1, 1)]));
        b.insert(vec_of(&[(1, 1), (2, 1)]));
        let rref = b.into_full_rref();
        // Row with pivot 0 must now be supported on {0, free}.
        let row0 = &rref[&0];
        assert_eq!(row0.entries(), &[(0, rat_int(1)), (2, rat_int(-1))]);
    }

    #[test]
    fn kernel_matches_rank() {
        let mut b = RrefBuilder::new();
        b.insert(vec_of(&[(0, 1), (1, 1), (2, 1)]));
        b.insert(vec_of(&[(1, 1), (2, 2)]));
        let rref = b.into_full_rref();
        let kernel = kernel_from_rref(&rref, 3);
        assert_eq!(kernel.len(), 1);
        let k = &kernel[0];
        // Check orthogonality against the original rows.
        let dot = |a: &SparseVec, b: &SparseVec| {
            let mut s = rat_int(0);
            for (c, v) in a.entries() {
                if let Some(w) = b.coeff(*c) {
                    s += v * w;
                }
            }
            s
        };
        assert!(dot(k, &vec_of(&[(0, 1), (1, 1), (2, 1)])).is_zero());
        assert!(dot(k, &vec_of(&[(1, 1), (2, 2)])).is_zero());
    }

    #[test]
    fn left_kernel_finds_dependency() {
        let rows = vec![
            vec_of(&[(0, 1), (1, 1)]),
            vec_of(&[(1, 1), (2, 1)]),
            vec_of(&[(0, 1), (2, -1)]),
        ];
        let combos = left_kernel(&rows, 3);
        assert_eq!(combos.len(), 1);
        // Verify: combo applied to rows is zero.
        let combo = &combos[0];
        let mut acc = SparseVec::new();
        for (i, c) in combo.entries() {
            acc = acc.add_scaled(&rows[*i as usize], c);
        }
        assert!(acc.is_zero());
    }
}
