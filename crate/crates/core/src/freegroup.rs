//! Reduced words in a free group `F_n` and endomorphism composition.
//!
//! Words are flat sequences of signed letters: `+k` is the generator `x_k`,
//! `-k` its inverse, with `1 <= k <= rank`. Endomorphisms are given by their
//! generator images and compared componentwise on reduced images, which is
//! sound and complete for endomorphisms of a free group.
//!
//! Composition convention: `(f ∘ g)` applies `g` first, and a word of
//! automorphisms `s_1 s_2 ... s_k` evaluates left-to-right to
//! `s_1 ∘ s_2 ∘ ... ∘ s_k`. All relation checks performed here are
//! conjugation identities or commutators, which hold in either convention,
//! but the convention is fixed so that reports are reproducible.

use crate::error::CoreError;
use serde::{Deserialize, Serialize};

/// A freely reduced word in `F_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

impl FreeWord {
    /// Reduces a raw letter sequence. Letters are signed generator indices;
    /// zero is rejected, as is any index above `rank`.
    pub fn reduce(letters: &[i32], rank: usize) -> Result<FreeWord, CoreError> {
        let mut buf: Vec<i32> = Vec::with_capacity(letters.len());
        for &x in letters {
            let idx = x.unsigned_abs() as usize;
            if x == 0 || idx > rank {
                return Err(CoreError::IndexOutOfRange { index: idx, rank });
            }
            if buf.last().is_some_and(|&y| y == -x) {
                buf.pop();
            } else {
                buf.push(x);
            }
        }
        Ok(FreeWord { rank, letters: buf })
    }

    pub fn identity(rank: usize) -> FreeWord {
        FreeWord {
            rank,
            letters: Vec::new(),
        }
    }

    /// The single generator `x_k` (1-based).
    pub fn generator(rank: usize, k: usize) -> Result<FreeWord, CoreError> {
        Self::reduce(&[k as i32], rank)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|x| -x).collect(),
        }
    }

    /// Concatenation followed by free reduction.
    pub fn concat(&self, other: &FreeWord) -> Result<FreeWord, CoreError> {
        if self.rank != other.rank {
            return Err(CoreError::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let mut buf = self.letters.clone();
        for &x in &other.letters {
            if buf.last().is_some_and(|&y| y == -x) {
                buf.pop();
            } else {
                buf.push(x);
            }
        }
        Ok(FreeWord {
            rank: self.rank,
            letters: buf,
        })
    }

    /// `w^m` for any integer `m`.
    pub fn power(&self, m: i32) -> FreeWord {
        let base = if m < 0 { self.inverse() } else { self.clone() };
        let mut out = FreeWord::identity(self.rank);
        for _ in 0..m.unsigned_abs() {
            out = out.concat(&base).expect("same rank");
        }
        out
    }
}

/// An endomorphism of `F_n` given by the images of the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeEndo {
    rank: usize,
    images: Vec<FreeWord>,
}

impl FreeEndo {
    pub fn new(images: Vec<FreeWord>) -> Result<FreeEndo, CoreError> {
        let rank = images.len();
        for im in &images {
            if im.rank() != rank {
                return Err(CoreError::RankMismatch {
                    left: rank,
                    right: im.rank(),
                });
            }
        }
        Ok(FreeEndo { rank, images })
    }

    pub fn identity(rank: usize) -> FreeEndo {
        let images = (1..=rank)
            .map(|k| FreeWord::generator(rank, k).expect("index in range"))
            .collect();
        FreeEndo { rank, images }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Image of `x_k` (1-based).
    pub fn image(&self, k: usize) -> &FreeWord {
        &self.images[k - 1]
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    /// Applies the substitution homomorphism to a word and reduces.
    pub fn apply(&self, w: &FreeWord) -> Result<FreeWord, CoreError> {
        if self.rank != w.rank() {
            return Err(CoreError::RankMismatch {
                left: self.rank,
                right: w.rank(),
            });
        }
        let mut out = FreeWord::identity(self.rank);
        for &x in w.letters() {
            let k = x.unsigned_abs() as usize;
            let im = &self.images[k - 1];
            let piece = if x > 0 { im.clone() } else { im.inverse() };
            out = out.concat(&piece)?;
        }
        Ok(out)
    }

    /// `(f ∘ g)(x_k) = f(g(x_k))`: `g` is applied first.
    pub fn compose(&self, g: &FreeEndo) -> Result<FreeEndo, CoreError> {
        if self.rank != g.rank {
            return Err(CoreError::RankMismatch {
                left: self.rank,
                right: g.rank,
            });
        }
        let images = g
            .images
            .iter()
            .map(|im| self.apply(im))
            .collect::<Result<Vec<_>, _>>()?;
        FreeEndo::new(images)
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, im)| im.letters() == [(k + 1) as i32])
    }

    /// Total letter length of all generator images.
    pub fn total_image_length(&self) -> usize {
        self.images.iter().map(FreeWord::len).sum()
    }

    /// True if every generator maps to a conjugate `w x_k w^{-1}` of itself.
    pub fn is_basis_conjugating(&self) -> bool {
        self.images.iter().enumerate().all(|(k, im)| {
            let letters = im.letters();
            if letters.len() % 2 == 0 {
                return false;
            }
            let mid = letters.len() / 2;
            if letters[mid] != (k + 1) as i32 {
                return false;
            }
            (0..mid).all(|p| letters[p] == -letters[letters.len() - 1 - p])
        })
    }

    /// The McCool generator `α_{i,j}` (`exponent = 1`) sending
    /// `x_i ↦ x_j x_i x_j^{-1}`, or its inverse (`exponent = -1`) sending
    /// `x_i ↦ x_j^{-1} x_i x_j`. All other generators are fixed.
    pub fn mccool_generator(
        rank: usize,
        i: usize,
        j: usize,
        exponent: i8,
    ) -> Result<FreeEndo, CoreError> {
        if i == j {
            return Err(CoreError::InvalidGenerator {
                i,
                j,
                reason: "indices must differ",
            });
        }
        if i == 0 || i > rank {
            return Err(CoreError::IndexOutOfRange { index: i, rank });
        }
        if j == 0 || j > rank {
            return Err(CoreError::IndexOutOfRange { index: j, rank });
        }
        let (ii, jj) = (i as i32, j as i32);
        let image_i = if exponent >= 0 {
            FreeWord::reduce(&[jj, ii, -jj], rank)?
        } else {
            FreeWord::reduce(&[-jj, ii, jj], rank)?
        };
        let mut endo = FreeEndo::identity(rank);
        endo.images[i - 1] = image_i;
        Ok(endo)
    }

    /// The flip `ρ_i` sending `x_i ↦ x_i^{-1}` and fixing the rest.
    pub fn rho(rank: usize, i: usize) -> Result<FreeEndo, CoreError> {
        if i == 0 || i > rank {
            return Err(CoreError::IndexOutOfRange { index: i, rank });
        }
        let mut endo = FreeEndo::identity(rank);
        endo.images[i - 1] = FreeWord::reduce(&[-(i as i32)], rank)?;
        Ok(endo)
    }

    /// The swap `τ_i` exchanging `x_i` and `x_{i+1}`.
    pub fn tau(rank: usize, i: usize) -> Result<FreeEndo, CoreError> {
        if i == 0 || i + 1 > rank {
            return Err(CoreError::IndexOutOfRange { index: i + 1, rank });
        }
        let mut endo = FreeEndo::identity(rank);
        endo.images[i - 1] = FreeWord::generator(rank, i + 1)?;
        endo.images[i] = FreeWord::generator(rank, i)?;
        Ok(endo)
    }

    /// Commutator `[a, b] = a b a^{-1} b^{-1}` of two automorphisms given with
    /// explicit inverses.
    fn commutator_with_inverses(
        a: &FreeEndo,
        a_inv: &FreeEndo,
        b: &FreeEndo,
        b_inv: &FreeEndo,
    ) -> Result<FreeEndo, CoreError> {
        a.compose(b)?.compose(a_inv)?.compose(b_inv)
    }
}

/// Which generating set a McCool-group computation ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PresentationVariant {
    /// All `α_{i,j}` with `i ≠ j`.
    Full,
    /// Only `α_{i,j}` with `i < j`.
    Plus,
}

impl PresentationVariant {
    fn admits(&self, i: usize, j: usize) -> bool {
        match self {
            PresentationVariant::Full => i != j,
            PresentationVariant::Plus => i < j,
        }
    }
}

/// A word in the McCool generators: syllables `(i, j, ±1)` meaning
/// `α_{i,j}^{±1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McCoolWord {
    rank: usize,
    syllables: Vec<(usize, usize, i8)>,
}

impl McCoolWord {
    pub fn new(rank: usize, syllables: Vec<(usize, usize, i8)>) -> Result<McCoolWord, CoreError> {
        for &(i, j, _) in &syllables {
            if i == j {
                return Err(CoreError::InvalidGenerator {
                    i,
                    j,
                    reason: "indices must differ",
                });
            }
            if i == 0 || i > rank {
                return Err(CoreError::IndexOutOfRange { index: i, rank });
            }
            if j == 0 || j > rank {
                return Err(CoreError::IndexOutOfRange { index: j, rank });
            }
        }
        Ok(McCoolWord { rank, syllables })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn syllables(&self) -> &[(usize, usize, i8)] {
        &self.syllables
    }

    /// Left-to-right evaluation: `s_1 s_2 ... s_k ↦ s_1 ∘ s_2 ∘ ... ∘ s_k`.
    pub fn evaluate(&self) -> FreeEndo {
        let mut out = FreeEndo::identity(self.rank);
        for &(i, j, e) in &self.syllables {
            let gen = FreeEndo::mccool_generator(self.rank, i, j, e).expect("validated");
            out = out.compose(&gen).expect("same rank");
        }
        out
    }

    /// The inverse word: syllables reversed with exponents flipped.
    pub fn inverse(&self) -> McCoolWord {
        McCoolWord {
            rank: self.rank,
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|&(i, j, e)| (i, j, -e))
                .collect(),
        }
    }
}

/// The central element `c = α_{1,n} α_{2,n} ⋯ α_{n-1,n}` of `PΣ_n⁺`.
pub fn central_word(n: usize) -> Result<McCoolWord, CoreError> {
    if n < 2 {
        return Err(CoreError::RankTooSmall { n, min: 2 });
    }
    McCoolWord::new(n, (1..n).map(|i| (i, n, 1)).collect())
}

/// One checked instance of a defining relation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RelationInstance {
    /// 1: `[α_{i,j}, α_{k,l}]`, 2: `[α_{i,j}, α_{k,j}]`,
    /// 3: `[α_{i,j}, α_{i,k} α_{j,k}]`.
    pub family: u8,
    pub indices: Vec<usize>,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RelationReport {
    pub n: usize,
    pub variant: PresentationVariant,
    pub instances: Vec<RelationInstance>,
    /// True when no relation instance exists at this rank (e.g. `n = 2`,
    /// where all families need at least three distinct indices).
    pub vacuous: bool,
    pub passed: bool,
}

/// Checks every instance of the three McCool relation families in `Aut(F_n)`.
///
/// For the plus variant only instances whose generators all satisfy `i < j`
/// are checked. The report certifies that the relations hold; it does not
/// address completeness of the presentation.
pub fn verify_mccool_presentation(
    n: usize,
    variant: PresentationVariant,
) -> Result<RelationReport, CoreError> {
    if n < 2 {
        return Err(CoreError::RankTooSmall { n, min: 2 });
    }
    let mut gens = vec![vec![None; n + 1]; n + 1];
    let mut invs = vec![vec![None; n + 1]; n + 1];
    for i in 1..=n {
        for j in 1..=n {
            if variant.admits(i, j) {
                gens[i][j] = Some(FreeEndo::mccool_generator(n, i, j, 1)?);
                invs[i][j] = Some(FreeEndo::mccool_generator(n, i, j, -1)?);
            }
        }
    }
    let gen = |i: usize, j: usize| gens[i][j].as_ref().unwrap();
    let inv = |i: usize, j: usize| invs[i][j].as_ref().unwrap();

    let mut instances = Vec::new();

    // Family 1: [α_{i,j}, α_{k,l}] for i,j,k,l distinct.
    for i in 1..=n {
        for j in 1..=n {
            if !variant.admits(i, j) {
                continue;
            }
            for k in 1..=n {
                for l in 1..=n {
                    if !variant.admits(k, l) {
                        continue;
                    }
                    let idx = [i, j, k, l];
                    if !all_distinct(&idx) {
                        continue;
                    }
                    let comm = FreeEndo::commutator_with_inverses(
                        gen(i, j),
                        inv(i, j),
                        gen(k, l),
                        inv(k, l),
                    )?;
                    instances.push(RelationInstance {
                        family: 1,
                        indices: idx.to_vec(),
                        holds: comm.is_identity(),
                    });
                }
            }
        }
    }

    // Family 2: [α_{i,j}, α_{k,j}] for i,j,k distinct.
    for i in 1..=n {
        for j in 1..=n {
            if !variant.admits(i, j) {
                continue;
            }
            for k in 1..=n {
                if !all_distinct(&[i, j, k]) || !variant.admits(k, j) {
                    continue;
                }
                let comm =
                    FreeEndo::commutator_with_inverses(gen(i, j), inv(i, j), gen(k, j), inv(k, j))?;
                instances.push(RelationInstance {
                    family: 2,
                    indices: vec![i, j, k],
                    holds: comm.is_identity(),
                });
            }
        }
    }

    // Family 3: [α_{i,j}, α_{i,k} α_{j,k}] for i,j,k distinct.
    for i in 1..=n {
        for j in 1..=n {
            if !variant.admits(i, j) {
                continue;
            }
            for k in 1..=n {
                if !all_distinct(&[i, j, k]) || !variant.admits(i, k) || !variant.admits(j, k) {
                    continue;
                }
                let b = gen(i, k).compose(gen(j, k))?;
                let b_inv = inv(j, k).compose(inv(i, k))?;
                let comm = FreeEndo::commutator_with_inverses(gen(i, j), inv(i, j), &b, &b_inv)?;
                instances.push(RelationInstance {
                    family: 3,
                    indices: vec![i, j, k],
                    holds: comm.is_identity(),
                });
            }
        }
    }

    let vacuous = instances.is_empty();
    let passed = instances.iter().all(|r| r.holds);
    Ok(RelationReport {
        n,
        variant,
        instances,
        vacuous,
        passed,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CenterReport {
    pub n: usize,
    /// `[c, α_{i,j}] = id` for every generator `α_{i,j}` with `i < j`.
    pub commutes: Vec<(usize, usize, bool)>,
    /// Largest power `m` with `c^m ≠ id` confirmed.
    pub power_bound: u32,
    pub powers_nontrivial: bool,
    /// Total image length of `c^m` grew strictly with `m`.
    pub growth_strict: bool,
    pub passed: bool,
}

/// Checks that `c = α_{1,n} ⋯ α_{n-1,n}` is central in `PΣ_n⁺` and gives
/// machine-checkable evidence of infinite order: `c^m ≠ id` for `m` up to
/// `power_bound`, with strictly growing image length.
pub fn verify_center(n: usize, power_bound: u32) -> Result<CenterReport, CoreError> {
    if n < 2 {
        return Err(CoreError::RankTooSmall { n, min: 2 });
    }
    let c = central_word(n)?.evaluate();
    let c_inv = central_word(n)?.inverse().evaluate();

    let mut commutes = Vec::new();
    for i in 1..n {
        for j in (i + 1)..=n {
            let g = FreeEndo::mccool_generator(n, i, j, 1)?;
            let g_inv = FreeEndo::mccool_generator(n, i, j, -1)?;
            let comm = FreeEndo::commutator_with_inverses(&c, &c_inv, &g, &g_inv)?;
            commutes.push((i, j, comm.is_identity()));
        }
    }

    let mut powers_nontrivial = true;
    let mut growth_strict = true;
    let mut prev_len = FreeEndo::identity(n).total_image_length();
    let mut acc = FreeEndo::identity(n);
    for _ in 1..=power_bound {
        acc = acc.compose(&c)?;
        if acc.is_identity() {
            powers_nontrivial = false;
        }
        let len = acc.total_image_length();
        if len <= prev_len {
            growth_strict = false;
        }
        prev_len = len;
    }

    let passed = commutes.iter().all(|&(_, _, h)| h) && powers_nontrivial && growth_strict;
    Ok(CenterReport {
        n,
        commutes,
        power_bound,
        powers_nontrivial,
        growth_strict,
        passed,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ActionInstance {
    pub i: usize,
    pub j: usize,
    pub p: usize,
    pub q: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ActionReport {
    pub n: usize,
    pub instances: Vec<ActionInstance>,
    pub passed: bool,
}

/// Checks the semidirect-product action formula on `PΣ_n⁺`: for all
/// `1 ≤ i < j < p ≤ n` and `i + 1 ≤ q ≤ n`,
/// `α_{j,p}^{-1} α_{i,q} α_{j,p}` equals `α_{i,p} α_{i,q} α_{i,p}^{-1}`
/// when `q = j` and `α_{i,q}` otherwise.
pub fn verify_semidirect_action(n: usize) -> Result<ActionReport, CoreError> {
    if n < 3 {
        return Err(CoreError::RankTooSmall { n, min: 3 });
    }
    let mut instances = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            for p in (j + 1)..=n {
                for q in (i + 1)..=n {
                    let a_jp = FreeEndo::mccool_generator(n, j, p, 1)?;
                    let a_jp_inv = FreeEndo::mccool_generator(n, j, p, -1)?;
                    let a_iq = FreeEndo::mccool_generator(n, i, q, 1)?;
                    let lhs = a_jp_inv.compose(&a_iq)?.compose(&a_jp)?;
                    let rhs = if q == j {
                        let a_ip = FreeEndo::mccool_generator(n, i, p, 1)?;
                        let a_ip_inv = FreeEndo::mccool_generator(n, i, p, -1)?;
                        a_ip.compose(&a_iq)?.compose(&a_ip_inv)?
                    } else {
                        a_iq
                    };
                    instances.push(ActionInstance {
                        i,
                        j,
                        p,
                        q,
                        holds: lhs == rhs,
                    });
                }
            }
        }
    }
    let passed = instances.iter().all(|r| r.holds);
    Ok(ActionReport {
        n,
        instances,
        passed,
    })
}

fn all_distinct(xs: &[usize]) -> bool {
    xs.iter()
        .enumerate()
        .all(|(a, x)| xs[a + 1..].iter().all(|y| y != x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[i32], rank: usize) -> FreeWord {
        FreeWord::reduce(letters, rank).unwrap()
    }

    #[test]
    fn reduce_cancels() {
        assert!(w(&[1, -1], 2).is_empty());
        assert_eq!(w(&[2, 1, -1, 2], 2).letters(), [2, 2]);
        assert_eq!(w(&[1, 2], 2).letters(), [1, 2]);
    }

    #[test]
    fn reduce_rejects_bad_index() {
        assert!(FreeWord::reduce(&[3], 2).is_err());
        assert!(FreeWord::reduce(&[0], 2).is_err());
    }

    #[test]
    fn reduce_is_idempotent_and_nonincreasing() {
        let raw = [1, 2, -2, -1, 1, 3, -3, 2];
        let once = w(&raw, 3);
        let twice = FreeWord::reduce(once.letters(), 3).unwrap();
        assert_eq!(once, twice);
        assert!(once.len() <= raw.len());
    }

    #[test]
    fn alpha_images() {
        // α_{1,2} at n=2: x_1 ↦ x_2 x_1 x_2^{-1}, x_2 fixed.
        let a = FreeEndo::mccool_generator(2, 1, 2, 1).unwrap();
        assert_eq!(a.apply(&w(&[1], 2)).unwrap(), w(&[2, 1, -2], 2));
        assert_eq!(a.apply(&w(&[2], 2)).unwrap(), w(&[2], 2));

        // α_{2,1}^{-1} at n=2: x_2 ↦ x_1^{-1} x_2 x_1.
        let b = FreeEndo::mccool_generator(2, 2, 1, -1).unwrap();
        assert_eq!(b.apply(&w(&[2], 2)).unwrap(), w(&[-1, 2, 1], 2));
        assert_eq!(b.apply(&w(&[1], 2)).unwrap(), w(&[1], 2));

        // α_{1,3} at n=3.
        let c = FreeEndo::mccool_generator(3, 1, 3, 1).unwrap();
        assert_eq!(c.image(1), &w(&[3, 1, -3], 3));
        assert_eq!(c.image(2), &w(&[2], 3));
        assert_eq!(c.image(3), &w(&[3], 3));
    }

    #[test]
    fn identity_applies_trivially() {
        let id = FreeEndo::identity(3);
        let word = w(&[1, -2, 3, 3], 3);
        assert_eq!(id.apply(&word).unwrap(), word);
    }

    #[test]
    fn generator_inverse_pairs() {
        for n in 2..=4 {
            for i in 1..=n {
                for j in 1..=n {
                    if i == j {
                        continue;
                    }
                    let a = FreeEndo::mccool_generator(n, i, j, 1).unwrap();
                    let b = FreeEndo::mccool_generator(n, i, j, -1).unwrap();
                    assert!(a.compose(&b).unwrap().is_identity());
                    assert!(b.compose(&a).unwrap().is_identity());
                }
            }
        }
    }

    #[test]
    fn involutions() {
        let r = FreeEndo::rho(2, 1).unwrap();
        assert!(r.compose(&r).unwrap().is_identity());
        let t = FreeEndo::tau(3, 1).unwrap();
        assert!(t.compose(&t).unwrap().is_identity());
    }

    #[test]
    fn mccool_word_evaluation() {
        let trivial = McCoolWord::new(2, vec![(1, 2, 1), (1, 2, -1)]).unwrap();
        assert!(trivial.evaluate().is_identity());

        // β_1 = α_{2,1} α_{3,1} is conjugation by x_1.
        let beta1 = McCoolWord::new(3, vec![(2, 1, 1), (3, 1, 1)])
            .unwrap()
            .evaluate();
        assert_eq!(beta1.image(1), &w(&[1], 3));
        assert_eq!(beta1.image(2), &w(&[1, 2, -1], 3));
        assert_eq!(beta1.image(3), &w(&[1, 3, -1], 3));

        // c = α_{1,3} α_{2,3} is conjugation by x_3.
        let c = central_word(3).unwrap().evaluate();
        assert_eq!(c.image(1), &w(&[3, 1, -3], 3));
        assert_eq!(c.image(2), &w(&[3, 2, -3], 3));
        assert_eq!(c.image(3), &w(&[3], 3));
        assert!(c.is_basis_conjugating());
    }

    #[test]
    fn inner_product_is_conjugation_by_product() {
        // β_1 β_2 β_3 at n=3 acts as conjugation by x_1 x_2 x_3.
        let beta = |k: usize| {
            let syl: Vec<_> = (1..=3usize)
                .filter(|&i| i != k)
                .map(|i| (i, k, 1))
                .collect();
            McCoolWord::new(3, syl).unwrap().evaluate()
        };
        let prod = beta(1)
            .compose(&beta(2))
            .unwrap()
            .compose(&beta(3))
            .unwrap();
        let g = w(&[1, 2, 3], 3);
        for k in 1..=3 {
            let expected = g
                .concat(&w(&[k as i32], 3))
                .unwrap()
                .concat(&g.inverse())
                .unwrap();
            assert_eq!(prod.image(k), &expected);
        }
    }

    #[test]
    fn presentation_holds_small() {
        for n in 2..=4 {
            let full = verify_mccool_presentation(n, PresentationVariant::Full).unwrap();
            assert!(full.passed, "full relations fail at n={n}");
            let plus = verify_mccool_presentation(n, PresentationVariant::Plus).unwrap();
            assert!(plus.passed, "plus relations fail at n={n}");
        }
    }

    #[test]
    fn presentation_vacuous_at_n2() {
        let rep = verify_mccool_presentation(2, PresentationVariant::Full).unwrap();
        assert!(rep.vacuous);
        assert!(rep.passed);
    }

    #[test]
    fn center_small() {
        for n in 2..=4 {
            let rep = verify_center(n, 16).unwrap();
            assert!(rep.passed, "center check fails at n={n}");
        }
    }

    #[test]
    fn action_small() {
        for n in 3..=4 {
            let rep = verify_semidirect_action(n).unwrap();
            assert!(rep.passed, "action check fails at n={n}");
        }
    }

    #[test]
    fn action_spot_checks() {
        // n=3, (i,j,p)=(1,2,3), q=2: conjugate equals α_{1,3} α_{1,2} α_{1,3}^{-1}.
        let a23 = FreeEndo::mccool_generator(3, 2, 3, 1).unwrap();
        let a23_inv = FreeEndo::mccool_generator(3, 2, 3, -1).unwrap();
        let a12 = FreeEndo::mccool_generator(3, 1, 2, 1).unwrap();
        let a13 = FreeEndo::mccool_generator(3, 1, 3, 1).unwrap();
        let a13_inv = FreeEndo::mccool_generator(3, 1, 3, -1).unwrap();
        let lhs = a23_inv.compose(&a12).unwrap().compose(&a23).unwrap();
        let rhs = a13.compose(&a12).unwrap().compose(&a13_inv).unwrap();
        assert_eq!(lhs, rhs);

        // q=3: conjugate equals α_{1,3} itself.
        let lhs = a23_inv.compose(&a13).unwrap().compose(&a23).unwrap();
        assert_eq!(lhs, a13);
    }

    #[test]
    fn rank_mismatch_rejected() {
        let f = FreeEndo::identity(2);
        let word = w(&[1], 3);
        assert!(f.apply(&word).is_err());
        let g = FreeEndo::identity(3);
        assert!(f.compose(&g).is_err());
    }
}
