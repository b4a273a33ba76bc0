//! The orthogonal array type and exhaustive verification of its properties:
//! strength, minimum Hamming distance, irredundancy and orthogonal partitions.

use std::collections::HashSet;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use itertools::Itertools;
use rayon::prelude::*;

use crate::construct::GeneratorColumns;
use crate::error::{Error, Result};

/// Symbol type stored in array cells.
pub type Symbol = u16;

/// Default bound on row pairs compared by the pairwise distance scan.
pub const DEFAULT_PAIR_BUDGET: u64 = 50_000_000;

/// An `N × n` array with per-column level counts and entries `0..s_j` in column `j`.
#[derive(Clone, PartialEq, Eq)]
pub struct OrthogonalArray {
    runs: usize,
    cols: usize,
    levels: Vec<u32>,
    data: Vec<Symbol>,
    provenance: Option<String>,
    linear: Option<GeneratorColumns>,
}

impl fmt::Debug for OrthogonalArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OA({}, {}, {})", self.runs, self.cols, self.level_profile())?;
        if let Some(p) = &self.provenance {
            write!(f, " [{p}]")?;
        }
        Ok(())
    }
}

impl OrthogonalArray {
    /// Builds an array from row-major entries.
    pub fn new(levels: Vec<u32>, data: Vec<Symbol>) -> Result<Self> {
        let cols = levels.len();
        if let Some(j) = levels.iter().position(|&s| s < 2 || s > Symbol::MAX as u32 + 1) {
            return Err(Error::InvalidInput(format!(
                "column {j} has {} levels; level counts must lie in [2, 65536]",
                levels[j]
            )));
        }
        if cols == 0 {
            return Err(Error::InvalidInput("array has no columns".into()));
        }
        if !data.len().is_multiple_of(cols) {
            return Err(Error::InvalidInput(format!(
                "{} entries do not fill rows of {cols} columns",
                data.len()
            )));
        }
        for (i, &v) in data.iter().enumerate() {
            let j = i % cols;
            if v as u32 >= levels[j] {
                return Err(Error::InvalidInput(format!(
                    "row {} column {j}: symbol {v} outside 0..{}",
                    i / cols,
                    levels[j]
                )));
            }
        }
        Ok(OrthogonalArray {
            runs: data.len() / cols,
            cols,
            levels,
            data,
            provenance: None,
            linear: None,
        })
    }

    pub fn from_rows(levels: Vec<u32>, rows: &[Vec<Symbol>]) -> Result<Self> {
        if let Some((i, r)) = rows.iter().find_position(|r| r.len() != levels.len()) {
            return Err(Error::InvalidInput(format!(
                "row {i} has {} entries, expected {}",
                r.len(),
                levels.len()
            )));
        }
        OrthogonalArray::new(levels, rows.concat())
    }

    pub(crate) fn from_parts_unchecked(levels: Vec<u32>, data: Vec<Symbol>) -> Self {
        debug_assert_eq!(data.len() % levels.len(), 0);
        OrthogonalArray {
            runs: data.len() / levels.len(),
            cols: levels.len(),
            levels,
            data,
            provenance: None,
            linear: None,
        }
    }

    pub fn runs(&self) -> usize {
        self.runs
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn levels(&self) -> &[u32] {
        &self.levels
    }

    pub fn data(&self) -> &[Symbol] {
        &self.data
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[Symbol] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Symbol]> {
        self.data.chunks_exact(self.cols)
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Symbol {
        self.data[r * self.cols + c]
    }

    pub fn provenance(&self) -> Option<&str> {
        self.provenance.as_deref()
    }

    pub fn with_provenance(mut self, tag: impl Into<String>) -> Self {
        self.provenance = Some(tag.into());
        self
    }

    /// Generator columns that reproduce this array, when it arose from a linear construction.
    pub fn linear_hint(&self) -> Option<&GeneratorColumns> {
        self.linear.as_ref()
    }

    pub(crate) fn set_linear_hint(&mut self, hint: Option<GeneratorColumns>) {
        debug_assert!(hint.as_ref().is_none_or(|g| g.runs() == self.runs as u128));
        self.linear = hint;
    }

    pub fn without_linear_hint(mut self) -> Self {
        self.linear = None;
        self
    }

    /// The common level count when all columns share it.
    pub fn symmetric_levels(&self) -> Option<u32> {
        let s = self.levels[0];
        self.levels.iter().all(|&l| l == s).then_some(s)
    }

    /// Level counts grouped as `(level, multiplicity)`, largest level first.
    pub fn level_groups(&self) -> Vec<(u32, usize)> {
        let mut sorted = self.levels.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        sorted
            .into_iter()
            .chunk_by(|&s| s)
            .into_iter()
            .map(|(s, g)| (s, g.count()))
            .collect()
    }

    /// Exponent notation such as `4^4 2^1`.
    pub fn level_profile(&self) -> String {
        format_profile(&self.level_groups())
    }

    /// True when two distinct row indices carry identical rows.
    pub fn has_duplicate_rows(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.runs);
        !self.rows().all(|r| seen.insert(r))
    }

    /// The sub-array formed by the given rows, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> OrthogonalArray {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        OrthogonalArray::from_parts_unchecked(self.levels.clone(), data)
    }
}

pub(crate) fn format_profile(groups: &[(u32, usize)]) -> String {
    groups
        .iter()
        .map(|(s, c)| format!("{s}^{c}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Product of the level counts of `cols`, or `None` on overflow.
fn level_product(a: &OrthogonalArray, cols: &[usize]) -> Option<u128> {
    cols.iter()
        .try_fold(1u128, |acc, &c| acc.checked_mul(a.levels[c] as u128))
}

/// True when the projection onto `cols` contains every symbol tuple equally often.
fn projection_balanced(a: &OrthogonalArray, cols: &[usize]) -> bool {
    let Some(cells) = level_product(a, cols) else {
        return false;
    };
    let n = a.runs as u128;
    if !n.is_multiple_of(cells) {
        return false;
    }
    let expected = (n / cells) as u32;
    let mut counts = vec![0u32; cells as usize];
    for row in a.rows() {
        let idx = cols
            .iter()
            .fold(0usize, |acc, &c| acc * a.levels[c] as usize + row[c] as usize);
        counts[idx] += 1;
    }
    counts.iter().all(|&c| c == expected)
}

/// First column subset (in lexicographic order) whose projection is unbalanced.
pub fn strength_violation(a: &OrthogonalArray, t: usize) -> Option<Vec<usize>> {
    if t == 0 {
        return None;
    }
    if t > a.cols {
        return Some((0..a.cols).collect());
    }
    let subsets: Vec<Vec<usize>> = (0..a.cols).combinations(t).collect();
    subsets
        .into_par_iter()
        .find_first(|cols| !projection_balanced(a, cols))
}

/// True iff every `t`-column projection is a balanced full factorial.
pub fn check_strength(a: &OrthogonalArray, t: usize) -> bool {
    strength_violation(a, t).is_none()
}

/// Largest `t` for which [`check_strength`] holds.
pub fn max_strength(a: &OrthogonalArray) -> usize {
    let mut t = 0;
    while t < a.cols && check_strength(a, t + 1) {
        t += 1;
    }
    t
}

#[inline]
fn hamming_capped(x: &[Symbol], y: &[Symbol], cap: usize) -> usize {
    let mut d = 0;
    for (a, b) in x.iter().zip(y) {
        if a != b {
            d += 1;
            if d >= cap {
                return d;
            }
        }
    }
    d
}

pub fn hamming(x: &[Symbol], y: &[Symbol]) -> usize {
    x.iter().zip(y).filter(|(a, b)| a != b).count()
}

/// Exact minimum distance by comparing every pair of rows.
pub fn min_distance_pairwise(a: &OrthogonalArray, pair_budget: u64) -> Result<usize> {
    if a.runs < 2 {
        return Err(Error::InvalidInput(
            "minimum distance needs at least two rows".into(),
        ));
    }
    let n = a.runs as u128;
    let pairs = n * (n - 1) / 2;
    if pairs > pair_budget as u128 {
        return Err(Error::BudgetExceeded {
            pairs,
            budget: pair_budget,
        });
    }
    let best = AtomicUsize::new(a.cols);
    (0..a.runs).into_par_iter().for_each(|i| {
        let ri = a.row(i);
        for j in i + 1..a.runs {
            let cap = best.load(Ordering::Relaxed);
            if cap == 0 {
                return;
            }
            let d = hamming_capped(ri, a.row(j), cap);
            if d < cap {
                best.fetch_min(d, Ordering::Relaxed);
            }
        }
    });
    Ok(best.into_inner())
}

/// Exact minimum distance of a linear-hint array by enumerating difference messages.
///
/// An unfolded coordinate contributes `1` when the codeword symbol is nonzero. A
/// folded coordinate contributes the minimum, over base symbols `b`, of
/// `[fold(b + δ) ≠ fold(b)]`, which is exact because the hint keeps folded
/// columns linearly independent.
pub fn min_distance_by_weights(a: &OrthogonalArray) -> Option<usize> {
    let g = a.linear.as_ref()?;
    if a.runs < 2 {
        return None;
    }
    Some(g.min_folded_weight())
}

/// Exact minimum Hamming distance between distinct rows.
///
/// Uses weight enumeration when a linear hint is present, the pairwise scan otherwise.
pub fn min_distance(a: &OrthogonalArray, pair_budget: u64) -> Result<usize> {
    match min_distance_by_weights(a) {
        Some(d) => Ok(d),
        None => min_distance_pairwise(a, pair_budget),
    }
}

/// True when the rows are pairwise distinct on every `(n−k)`-column projection.
pub fn is_irredundant(a: &OrthogonalArray, k: usize) -> bool {
    irredundant_violation(a, k).is_none()
}

/// First `(n−k)`-column subset on which two rows coincide.
pub fn irredundant_violation(a: &OrthogonalArray, k: usize) -> Option<Vec<usize>> {
    if k >= a.cols {
        return Some(Vec::new());
    }
    let subsets: Vec<Vec<usize>> = (0..a.cols).combinations(a.cols - k).collect();
    subsets
        .into_par_iter()
        .find_first(|cols| !projection_injective(a, cols))
}

fn projection_injective(a: &OrthogonalArray, cols: &[usize]) -> bool {
    const DENSE_LIMIT: u128 = 1 << 27;
    match level_product(a, cols) {
        Some(cells) if cells < a.runs as u128 => false,
        Some(cells) if cells <= DENSE_LIMIT => {
            let mut seen = vec![0u64; (cells as usize).div_ceil(64)];
            for row in a.rows() {
                let idx = cols
                    .iter()
                    .fold(0usize, |acc, &c| acc * a.levels[c] as usize + row[c] as usize);
                let (w, b) = (idx / 64, idx % 64);
                if seen[w] >> b & 1 == 1 {
                    return false;
                }
                seen[w] |= 1 << b;
            }
            true
        }
        Some(_) => {
            let mut keys: Vec<u128> = a
                .rows()
                .map(|row| {
                    cols.iter()
                        .fold(0u128, |acc, &c| acc * a.levels[c] as u128 + row[c] as u128)
                })
                .collect();
            keys.par_sort_unstable();
            keys.windows(2).all(|w| w[0] != w[1])
        }
        None => {
            let mut seen = HashSet::with_capacity(a.runs);
            a.rows()
                .all(|row| seen.insert(cols.iter().map(|&c| row[c]).collect::<Vec<_>>()))
        }
    }
}

/// Irredundancy through the distance characterisation `md ≥ k + 1`.
pub fn irredundant_by_distance(a: &OrthogonalArray, k: usize, pair_budget: u64) -> Result<bool> {
    Ok(min_distance(a, pair_budget)? > k)
}

/// A division of an array's rows into equal blocks, each claimed to have strength `k0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalPartition {
    pub blocks: Vec<Vec<usize>>,
    pub strength: usize,
}

impl OrthogonalPartition {
    /// The single-block partition `{A}`.
    pub fn trivial(runs: usize, strength: usize) -> Self {
        OrthogonalPartition {
            blocks: vec![(0..runs).collect()],
            strength,
        }
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// `Ok` when the blocks partition the rows into equal parts of the claimed strength.
    pub fn check(&self, a: &OrthogonalArray) -> std::result::Result<(), String> {
        if self.blocks.is_empty() {
            return Err("partition has no blocks".into());
        }
        let size = self.blocks[0].len();
        if let Some(i) = self.blocks.iter().position(|b| b.len() != size) {
            return Err(format!(
                "block {i} has {} rows, block 0 has {size}",
                self.blocks[i].len()
            ));
        }
        let mut owner = vec![usize::MAX; a.runs];
        for (bi, block) in self.blocks.iter().enumerate() {
            for &r in block {
                if r >= a.runs {
                    return Err(format!("block {bi} names row {r}, array has {} rows", a.runs));
                }
                if owner[r] != usize::MAX {
                    return Err(format!("row {r} appears in blocks {} and {bi}", owner[r]));
                }
                owner[r] = bi;
            }
        }
        if let Some(r) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(format!("row {r} belongs to no block"));
        }
        for (bi, block) in self.blocks.iter().enumerate() {
            // row order does not affect strength, so a single block is the array itself
            let violation = if self.blocks.len() == 1 {
                strength_violation(a, self.strength)
            } else {
                strength_violation(&a.select_rows(block), self.strength)
            };
            if let Some(cols) = violation {
                return Err(format!(
                    "block {bi} is not of strength {} (columns {cols:?} unbalanced)",
                    self.strength
                ));
            }
        }
        Ok(())
    }
}

/// True iff the blocks partition the rows and each block has strength at least `k0`.
pub fn verify_partition(a: &OrthogonalArray, p: &OrthogonalPartition) -> bool {
    p.check(a).is_ok()
}
