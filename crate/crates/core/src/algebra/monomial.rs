//! Exterior monomials on the degree-one generators `a_{i,j}`.
//!
//! A monomial is a strictly increasing sequence of generator pairs under the
//! lexicographic order on `(i, j)`; the empty monomial is the unit. Products
//! sort their factors and track permutation parity, and vanish on a repeated
//! factor.

use crate::error::CoreError;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A degree-one generator `a_{i,j}`, `1 ≤ i ≠ j ≤ n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GeneratorPair(pub u8, pub u8);

impl GeneratorPair {
    pub fn new(i: usize, j: usize, n: usize) -> Result<Self, CoreError> {
        if i == j {
            return Err(CoreError::InvalidGenerator {
                i,
                j,
                reason: "indices must differ",
            });
        }
        if i == 0 || i > n {
            return Err(CoreError::IndexOutOfRange { index: i, rank: n });
        }
        if j == 0 || j > n {
            return Err(CoreError::IndexOutOfRange { index: j, rank: n });
        }
        Ok(GeneratorPair(i as u8, j as u8))
    }

    /// First index (the conjugated generator).
    pub fn i(&self) -> usize {
        self.0 as usize
    }

    /// Second index (the conjugator).
    pub fn j(&self) -> usize {
        self.1 as usize
    }
}

impl fmt::Display for GeneratorPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a[{},{}]", self.0, self.1)
    }
}

/// A square-free exterior monomial with sorted factors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ExtMonomial(Vec<GeneratorPair>);

impl ExtMonomial {
    pub fn unit() -> Self {
        ExtMonomial(Vec::new())
    }

    /// Builds from factors that must already be strictly increasing.
    pub fn from_sorted(factors: Vec<GeneratorPair>) -> Self {
        debug_assert!(factors.windows(2).all(|w| w[0] < w[1]));
        ExtMonomial(factors)
    }

    pub fn single(g: GeneratorPair) -> Self {
        ExtMonomial(vec![g])
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn factors(&self) -> &[GeneratorPair] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    /// First indices of the factors, in factor order.
    pub fn first_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|g| g.i())
    }

    /// Exterior product of two sorted monomials: `None` on a shared factor,
    /// otherwise the merged monomial and the parity sign of the merge.
    pub fn mul(&self, other: &ExtMonomial) -> Option<(i8, ExtMonomial)> {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut ia, mut ib) = (0usize, 0usize);
        let mut swaps = 0usize;
        while ia < a.len() && ib < b.len() {
            match a[ia].cmp(&b[ib]) {
                std::cmp::Ordering::Less => {
                    out.push(a[ia]);
                    ia += 1;
                }
                std::cmp::Ordering::Greater => {
                    // b[ib] moves left past the remaining factors of a.
                    swaps += a.len() - ia;
                    out.push(b[ib]);
                    ib += 1;
                }
                std::cmp::Ordering::Equal => return None,
            }
        }
        out.extend_from_slice(&a[ia..]);
        out.extend_from_slice(&b[ib..]);
        let sign = if swaps.is_multiple_of(2) { 1 } else { -1 };
        Some((sign, ExtMonomial(out)))
    }

    /// Sorts an arbitrary factor list into a monomial, tracking parity;
    /// `None` if any factor repeats.
    pub fn from_factors(factors: &[GeneratorPair]) -> Option<(i8, ExtMonomial)> {
        let mut out: Vec<GeneratorPair> = Vec::with_capacity(factors.len());
        let mut swaps = 0usize;
        for &f in factors {
            let pos = out.partition_point(|&g| g < f);
            if out.get(pos).is_some_and(|&g| g == f) {
                return None;
            }
            swaps += out.len() - pos;
            out.insert(pos, f);
        }
        let sign = if swaps.is_multiple_of(2) { 1 } else { -1 };
        Some((sign, ExtMonomial(out)))
    }

    /// The monomial with the factors at the two given positions removed.
    pub fn without_pair(&self, p1: usize, p2: usize) -> ExtMonomial {
        debug_assert!(p1 < p2);
        let mut rest = Vec::with_capacity(self.0.len() - 2);
        for (k, &f) in self.0.iter().enumerate() {
            if k != p1 && k != p2 {
                rest.push(f);
            }
        }
        ExtMonomial(rest)
    }

    /// True if the directed graph with an edge `i → j` per factor `a_{i,j}`
    /// contains a directed cycle; such monomials vanish in the full-variant
    /// quotient.
    pub fn has_directed_cycle(&self) -> bool {
        if self.0.len() < 2 {
            return false;
        }
        let nodes: Vec<usize> = {
            let mut v: Vec<usize> = self.0.iter().flat_map(|g| [g.i(), g.j()]).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        let node_pos = |x: usize| nodes.binary_search(&x).expect("node present");
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nodes.len()];
        for g in &self.0 {
            adj[node_pos(g.i())].push(node_pos(g.j()));
        }
        // Iterative three-color DFS.
        #[derive(Clone, Copy, PartialEq)]
        enum Color {
            White,
            Gray,
            Black,
        }
        let mut color = vec![Color::White; nodes.len()];
        for start in 0..nodes.len() {
            if color[start] != Color::White {
                continue;
            }
            let mut stack: Vec<(usize, usize)> = vec![(start, 0)];
            color[start] = Color::Gray;
            while let Some(&mut (v, ref mut next)) = stack.last_mut() {
                if *next < adj[v].len() {
                    let w = adj[v][*next];
                    *next += 1;
                    match color[w] {
                        Color::Gray => return true,
                        Color::White => {
                            color[w] = Color::Gray;
                            stack.push((w, 0));
                        }
                        Color::Black => {}
                    }
                } else {
                    color[v] = Color::Black;
                    stack.pop();
                }
            }
        }
        false
    }

    /// True if all first indices are pairwise distinct.
    pub fn has_distinct_first_indices(&self) -> bool {
        let mut firsts: Vec<usize> = self.first_indices().collect();
        firsts.sort_unstable();
        firsts.windows(2).all(|w| w[0] != w[1])
    }

    /// Positions of the first two factors sharing a first index, scanning for
    /// the smallest repeated first index.
    pub fn repeated_first_index_pair(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for p1 in 0..self.0.len() {
            for p2 in (p1 + 1)..self.0.len() {
                if self.0[p1].i() == self.0[p2].i() {
                    let better = match best {
                        None => true,
                        Some((b1, _)) => self.0[p1].i() < self.0[b1].i(),
                    };
                    if better {
                        best = Some((p1, p2));
                    }
                    break;
                }
            }
        }
        best
    }
}

impl fmt::Display for ExtMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, g) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "·")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(i: usize, j: usize) -> GeneratorPair {
        GeneratorPair::new(i, j, 9).unwrap()
    }

    #[test]
    fn pair_validation() {
        assert!(GeneratorPair::new(1, 1, 3).is_err());
        assert!(GeneratorPair::new(0, 2, 3).is_err());
        assert!(GeneratorPair::new(1, 4, 3).is_err());
        assert!(GeneratorPair::new(3, 1, 3).is_ok());
    }

    #[test]
    fn product_signs() {
        let a = ExtMonomial::single(g(1, 2));
        let b = ExtMonomial::single(g(2, 1));
        // (1,2) < (2,1): in order, no swap.
        assert_eq!(a.mul(&b), Some((1, ExtMonomial(vec![g(1, 2), g(2, 1)]))));
        // Reversed: one swap.
        assert_eq!(b.mul(&a), Some((-1, ExtMonomial(vec![g(1, 2), g(2, 1)]))));
        // Square vanishes.
        assert_eq!(a.mul(&a), None);
    }

    #[test]
    fn from_factors_parity() {
        let (s, m) = ExtMonomial::from_factors(&[g(2, 1), g(1, 2)]).unwrap();
        assert_eq!(s, -1);
        assert_eq!(m.factors(), &[g(1, 2), g(2, 1)]);
        let (s, m) = ExtMonomial::from_factors(&[g(3, 1), g(1, 2), g(2, 3)]).unwrap();
        // (3,1),(1,2): swap; then (2,3) inserted before (3,1): one more swap.
        assert_eq!(s, 1);
        assert_eq!(m.degree(), 3);
        assert!(ExtMonomial::from_factors(&[g(1, 2), g(1, 2)]).is_none());
    }

    #[test]
    fn cycle_detection() {
        let two_cycle = ExtMonomial::from_sorted(vec![g(1, 2), g(2, 1)]);
        assert!(two_cycle.has_directed_cycle());
        let three_cycle = ExtMonomial::from_sorted(vec![g(1, 2), g(2, 3), g(3, 1)]);
        assert!(three_cycle.has_directed_cycle());
        let path = ExtMonomial::from_sorted(vec![g(1, 2), g(2, 3)]);
        assert!(!path.has_directed_cycle());
        // Contains a 2-cycle as a sub-multiset.
        let embedded = ExtMonomial::from_sorted(vec![g(1, 2), g(2, 1), g(3, 4)]);
        assert!(embedded.has_directed_cycle());
        assert!(!ExtMonomial::unit().has_directed_cycle());
    }

    #[test]
    fn repeated_first_index() {
        let m = ExtMonomial::from_sorted(vec![g(2, 1), g(2, 3)]);
        assert_eq!(m.repeated_first_index_pair(), Some((0, 1)));
        let m = ExtMonomial::from_sorted(vec![g(1, 3), g(2, 1), g(2, 4)]);
        assert_eq!(m.repeated_first_index_pair(), Some((1, 2)));
        let m = ExtMonomial::from_sorted(vec![g(1, 2), g(2, 3)]);
        assert_eq!(m.repeated_first_index_pair(), None);
    }
}
