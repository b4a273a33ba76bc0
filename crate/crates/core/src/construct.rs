//! Orthogonal array generators and transformers.
//!
//! Linear arrays are evaluated from [`GeneratorColumns`]: the row for message
//! `x ∈ GF(s)^k` holds `⟨x, c_j⟩` in column `j`. Rows are ordered by the
//! base-s value of `x` with the first coordinate most significant, so the
//! unit column `e_1` is the slowest-changing factor.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::array::{OrthogonalArray, Symbol};
use crate::error::{Error, Result};
use crate::gf::{prime_power, prime_power_factors, Elem, FieldMatrix, GaloisField};

/// Symbol map applied to a generator column after evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fold {
    None,
    Mod2,
}

impl Fold {
    #[inline]
    pub fn apply(self, v: Elem) -> Symbol {
        match self {
            Fold::None => v as Symbol,
            Fold::Mod2 => (v % 2) as Symbol,
        }
    }
}

/// Column vectors in GF(s)^k defining a linear array, with per-column folds.
#[derive(Clone, PartialEq, Eq)]
pub struct GeneratorColumns {
    field: Arc<GaloisField>,
    k: usize,
    columns: Vec<Vec<Elem>>,
    folds: Vec<Fold>,
}

impl fmt::Debug for GeneratorColumns {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GeneratorColumns")
            .field("s", &self.order())
            .field("k", &self.k)
            .field("columns", &self.columns)
            .field("folds", &self.folds)
            .finish()
    }
}

impl GeneratorColumns {
    pub fn new(s: u32, k: usize, columns: Vec<Vec<Elem>>) -> Result<Self> {
        let field = GaloisField::shared(s)?;
        for (j, c) in columns.iter().enumerate() {
            if c.len() != k {
                return Err(Error::InvalidInput(format!(
                    "generator column {j} has length {}, expected {k}",
                    c.len()
                )));
            }
            if let Some(&e) = c.iter().find(|&&e| e as u32 >= s) {
                return Err(Error::InvalidInput(format!(
                    "generator column {j} holds {e}, not an element of GF({s})"
                )));
            }
        }
        if k > 0 && !columns.is_empty() && columns.iter().all(|c| c.iter().all(|&e| e == 0)) {
            return Err(Error::InvalidInput("all generator columns are zero".into()));
        }
        let folds = vec![Fold::None; columns.len()];
        Ok(GeneratorColumns {
            field,
            k,
            columns,
            folds,
        })
    }

    /// Columns given as rows of a `k × n` generator matrix.
    pub fn from_generator_rows(s: u32, n: usize, rows: &[Vec<Elem>]) -> Result<Self> {
        let k = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidInput("generator rows differ in length".into()));
        }
        let columns = (0..n).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
        GeneratorColumns::new(s, k, columns)
    }

    pub fn field(&self) -> &Arc<GaloisField> {
        &self.field
    }

    pub fn order(&self) -> u32 {
        self.field.order()
    }

    /// Message dimension k.
    pub fn dimension(&self) -> usize {
        self.k
    }

    /// Number of columns n.
    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn columns(&self) -> &[Vec<Elem>] {
        &self.columns
    }

    pub fn folds(&self) -> &[Fold] {
        &self.folds
    }

    pub fn is_folded(&self) -> bool {
        self.folds.iter().any(|&f| f != Fold::None)
    }

    /// Number of messages, s^k.
    pub fn runs(&self) -> u128 {
        (self.order() as u128).pow(self.k as u32)
    }

    /// Level count of each evaluated column.
    pub fn levels(&self) -> Vec<u32> {
        self.folds
            .iter()
            .map(|f| match f {
                Fold::None => self.order(),
                Fold::Mod2 => 2,
            })
            .collect()
    }

    /// The `k × n` generator matrix.
    pub fn matrix(&self) -> FieldMatrix {
        let rows: Vec<Vec<Elem>> = (0..self.k)
            .map(|i| self.columns.iter().map(|c| c[i]).collect())
            .collect();
        FieldMatrix::from_rows(Arc::clone(&self.field), self.len(), &rows)
            .expect("columns were validated")
    }

    pub fn rank(&self) -> usize {
        self.matrix().rank()
    }

    /// Message with the given row index, first coordinate most significant.
    pub fn message(&self, mut index: u64) -> Vec<Elem> {
        let s = self.order() as u64;
        let mut x = vec![0; self.k];
        for xi in x.iter_mut().rev() {
            *xi = (index % s) as Elem;
            index /= s;
        }
        x
    }

    /// Unfolded codeword `(⟨x, c_1⟩, …, ⟨x, c_n⟩)`.
    pub fn codeword(&self, x: &[Elem]) -> Vec<Elem> {
        self.columns.iter().map(|c| self.field.dot(x, c)).collect()
    }

    /// Restricts to the listed columns, keeping their folds.
    pub fn select(&self, cols: &[usize]) -> GeneratorColumns {
        GeneratorColumns {
            field: Arc::clone(&self.field),
            k: self.k,
            columns: cols.iter().map(|&c| self.columns[c].clone()).collect(),
            folds: cols.iter().map(|&c| self.folds[c]).collect(),
        }
    }

    /// Marks column `col` as folded mod 2. Returns `None` when the folded
    /// columns would become linearly dependent, since weight enumeration is
    /// only exact for independent folded columns.
    pub fn with_fold(&self, col: usize) -> Option<GeneratorColumns> {
        let mut out = self.clone();
        out.folds[col] = Fold::Mod2;
        let folded: Vec<usize> = (0..out.len()).filter(|&j| out.folds[j] == Fold::Mod2).collect();
        let sub = out.select(&folded);
        (sub.rank() == folded.len()).then_some(out)
    }

    /// Per-row multiples `x · (row i of G)` for every digit value x.
    fn row_multiples(&self) -> Vec<Vec<Vec<Elem>>> {
        let f = &*self.field;
        (0..self.k)
            .map(|i| {
                f.elements()
                    .map(|x| self.columns.iter().map(|c| f.mul(x, c[i])).collect())
                    .collect()
            })
            .collect()
    }

    /// Evaluates every row; row `r` corresponds to [`GeneratorColumns::message`]`(r)`.
    fn evaluate(&self) -> Vec<Symbol> {
        let f = &*self.field;
        let n = self.len();
        let runs = self.runs() as usize;
        let mults = self.row_multiples();
        let mut data = vec![0 as Symbol; runs * n];
        data.par_chunks_mut(n.max(1))
            .enumerate()
            .for_each_init(
                || vec![0 as Elem; n],
                |word, (r, out)| {
                    word.iter_mut().for_each(|w| *w = 0);
                    let x = self.message(r as u64);
                    for (i, &xi) in x.iter().enumerate() {
                        for (w, &m) in word.iter_mut().zip(&mults[i][xi as usize]) {
                            *w = f.add(*w, m);
                        }
                    }
                    for ((o, &w), &fold) in out.iter_mut().zip(word.iter()).zip(&self.folds) {
                        *o = fold.apply(w);
                    }
                },
            );
        data
    }

    /// Minimum, over nonzero difference messages, of the folded weight.
    ///
    /// Without folds this is the minimum codeword weight (0 when the
    /// generator is rank deficient).
    pub fn min_folded_weight(&self) -> usize {
        let f = &*self.field;
        let n = self.len();
        let mults = self.row_multiples();
        // cost of a folded coordinate with difference δ: min_b [fold(b+δ) ≠ fold(b)]
        let fold_cost: Vec<usize> = f
            .elements()
            .map(|d| {
                f.elements()
                    .map(|b| (Fold::Mod2.apply(f.add(b, d)) != Fold::Mod2.apply(b)) as usize)
                    .min()
                    .unwrap()
            })
            .collect();
        let runs = usize::try_from(self.runs()).expect("enumerable code size");
        (1..runs)
            .into_par_iter()
            .with_min_len(1024)
            .map_init(
                || vec![0 as Elem; n],
                |word, r| {
                    word.iter_mut().for_each(|w| *w = 0);
                    let x = self.message(r as u64);
                    for (i, &xi) in x.iter().enumerate() {
                        if xi == 0 {
                            continue;
                        }
                        for (w, &m) in word.iter_mut().zip(&mults[i][xi as usize]) {
                            *w = f.add(*w, m);
                        }
                    }
                    word.iter()
                        .zip(&self.folds)
                        .map(|(&w, fold)| match fold {
                            Fold::None => (w != 0) as usize,
                            Fold::Mod2 => fold_cost[w as usize],
                        })
                        .sum::<usize>()
                },
            )
            .min()
            .unwrap_or(n)
    }
}

/// Largest `t` such that every `t` columns are linearly independent.
///
/// This is the strength of the linear array by rank reasoning, independent of counting.
pub fn linear_strength(g: &GeneratorColumns) -> usize {
    use itertools::Itertools;
    let n = g.len();
    for t in 1..=n {
        let dependent = (0..n)
            .combinations(t)
            .any(|cols| g.select(&cols).rank() < t);
        if dependent {
            return t - 1;
        }
    }
    n
}

/// The `s^k × n` array with entry `⟨x, c_j⟩`, carrying the generator as its linear hint.
pub fn linear_oa(g: &GeneratorColumns) -> Result<OrthogonalArray> {
    if g.is_folded() {
        return Err(Error::InvalidInput(
            "linear_oa takes unfolded generator columns".into(),
        ));
    }
    if g.is_empty() {
        return Err(Error::InvalidInput("generator has no columns".into()));
    }
    let runs = g.runs();
    if runs > 1 << 26 {
        return Err(Error::TooLarge { size: runs });
    }
    let mut a = OrthogonalArray::from_parts_unchecked(g.levels(), g.evaluate())
        .with_provenance(format!("linear(s={}, k={}, n={})", g.order(), g.dimension(), g.len()));
    a.set_linear_hint(Some(g.clone()));
    Ok(a)
}

/// Columns of the saturated strength-2 array built by the independent-columns method.
///
/// The unit vectors come first, then every vector whose last nonzero coordinate is
/// 1 and which has another nonzero coordinate, ordered by that last position and
/// then lexicographically by the preceding coefficients.
pub fn ic_saturated_columns(s: u32, m: usize) -> Result<GeneratorColumns> {
    GaloisField::shared(s)?;
    if m < 2 {
        return Err(Error::InvalidInput(format!("IC method needs m ≥ 2, got {m}")));
    }
    let mut cols: Vec<Vec<Elem>> = (0..m)
        .map(|i| (0..m).map(|j| (i == j) as Elem).collect())
        .collect();
    for pivot in 1..m {
        // every coefficient tuple over positions 0..pivot except all-zero, lexicographic
        let count = (s as u64).pow(pivot as u32);
        for code in 1..count {
            let mut v = vec![0 as Elem; m];
            let mut c = code;
            for slot in v[..pivot].iter_mut().rev() {
                *slot = (c % s as u64) as Elem;
                c /= s as u64;
            }
            v[pivot] = 1;
            cols.push(v);
        }
    }
    debug_assert_eq!(cols.len() as u64, ((s as u64).pow(m as u32) - 1) / (s as u64 - 1));
    GeneratorColumns::new(s, m, cols)
}

/// Moment-curve columns `(1, α, α², …, α^{k−1})` over the first field elements,
/// plus `(0, …, 0, 1)` when `n = s + 1`. Every `k` of them are independent.
pub fn vandermonde_columns(s: u32, k: usize, n: usize) -> Result<GeneratorColumns> {
    let field = GaloisField::shared(s)?;
    if k < 2 || n < k {
        return Err(Error::InvalidInput(format!(
            "moment-curve columns need 2 ≤ k ≤ n, got k={k}, n={n}"
        )));
    }
    if n > s as usize + 1 {
        return Err(Error::Unconstructible(format!(
            "moment-curve array over GF({s}) has at most {} columns, {n} requested",
            s + 1
        )));
    }
    let finite = if n == s as usize + 1 { n - 1 } else { n };
    let mut cols: Vec<Vec<Elem>> = field
        .elements()
        .take(finite)
        .map(|a| (0..k as u32).map(|e| field.pow(a, e)).collect())
        .collect();
    if finite < n {
        let mut inf = vec![0; k];
        inf[k - 1] = 1;
        cols.push(inf);
    }
    GeneratorColumns::new(s, k, cols)
}

/// The `s`-row array with rows `(i, …, i)`: strength 1 and distance `n`.
pub fn repetition_oa(s: u32, n: usize) -> Result<OrthogonalArray> {
    if s < 2 || n < 1 {
        return Err(Error::InvalidInput(format!(
            "repetition array needs s ≥ 2 and n ≥ 1, got s={s}, n={n}"
        )));
    }
    let rows: Vec<Vec<Symbol>> = (0..s).map(|i| vec![i as Symbol; n]).collect();
    let mut a = OrthogonalArray::from_rows(vec![s; n], &rows)?
        .with_provenance(format!("repetition(s={s}, n={n})"));
    if prime_power(s).is_some() && s <= crate::gf::MAX_ORDER {
        a.set_linear_hint(Some(GeneratorColumns::new(s, 1, vec![vec![1]; n])?));
    }
    Ok(a)
}

/// Kronecker product: row `(i, j)` holds `a[i][c] · s₂ + b[j][c]` in column `c`.
pub fn kronecker_product(a: &OrthogonalArray, b: &OrthogonalArray) -> Result<OrthogonalArray> {
    if a.cols() != b.cols() {
        return Err(Error::ShapeMismatch(format!(
            "Kronecker product needs equal column counts, got {} and {}",
            a.cols(),
            b.cols()
        )));
    }
    let levels: Vec<u32> = a.levels().iter().zip(b.levels()).map(|(x, y)| x * y).collect();
    if let Some(&l) = levels.iter().find(|&&l| l > Symbol::MAX as u32 + 1) {
        return Err(Error::InvalidInput(format!("product level count {l} is too large")));
    }
    let n = a.cols();
    let mut data = Vec::with_capacity(a.runs() * b.runs() * n);
    for ra in a.rows() {
        for rb in b.rows() {
            for c in 0..n {
                data.push(ra[c] * b.levels()[c] as Symbol + rb[c]);
            }
        }
    }
    let tag = format!(
        "kronecker({}, {})",
        a.provenance().unwrap_or("?"),
        b.provenance().unwrap_or("?")
    );
    Ok(OrthogonalArray::from_parts_unchecked(levels, data).with_provenance(tag))
}

/// Replaces each level `ℓ` of column `col` by row `ℓ` of `b`, splicing `b`'s columns in place.
pub fn expansive_replace(
    a: &OrthogonalArray,
    col: usize,
    b: &OrthogonalArray,
) -> Result<OrthogonalArray> {
    if col >= a.cols() {
        return Err(Error::InvalidInput(format!(
            "column {col} out of range for {} columns",
            a.cols()
        )));
    }
    let d1 = a.levels()[col];
    if b.runs() != d1 as usize {
        return Err(Error::RowCountMismatch {
            expected: d1,
            found: b.runs(),
        });
    }
    let mut levels = a.levels()[..col].to_vec();
    levels.extend_from_slice(b.levels());
    levels.extend_from_slice(&a.levels()[col + 1..]);
    let mut data = Vec::with_capacity(a.runs() * levels.len());
    for row in a.rows() {
        data.extend_from_slice(&row[..col]);
        data.extend_from_slice(b.row(row[col] as usize));
        data.extend_from_slice(&row[col + 1..]);
    }
    let tag = format!(
        "replace({}, col={col}, {})",
        a.provenance().unwrap_or("?"),
        b.provenance().unwrap_or("?")
    );
    Ok(OrthogonalArray::from_parts_unchecked(levels, data).with_provenance(tag))
}

/// Maps column `col` through `ℓ ↦ ℓ mod 2`, a balanced 2-to-1 map on an even level count.
pub fn fold_mod2(a: &OrthogonalArray, col: usize) -> Result<OrthogonalArray> {
    if col >= a.cols() {
        return Err(Error::InvalidInput(format!(
            "column {col} out of range for {} columns",
            a.cols()
        )));
    }
    let levels = a.levels()[col];
    if !levels.is_multiple_of(2) {
        return Err(Error::OddLevels { col, levels });
    }
    let n = a.cols();
    let mut data = a.data().to_vec();
    for r in 0..a.runs() {
        data[r * n + col] %= 2;
    }
    let mut new_levels = a.levels().to_vec();
    new_levels[col] = 2;
    let hint = a.linear_hint().and_then(|g| g.with_fold(col));
    let mut out = OrthogonalArray::from_parts_unchecked(new_levels, data).with_provenance(format!(
        "fold-mod2({}, col={col})",
        a.provenance().unwrap_or("?")
    ));
    out.set_linear_hint(hint);
    Ok(out)
}

/// `OA(s^k, n, s, k)` for any `s` whose prime-power factors `q` all satisfy `n ≤ q + 1`:
/// moment-curve arrays per factor, Kronecker-combined in ascending factor order.
pub fn macneish_moment_curve(s: u32, k: usize, n: usize) -> Result<OrthogonalArray> {
    if s < 2 {
        return Err(Error::InvalidInput(format!("level count must be ≥ 2, got {s}")));
    }
    let factors = prime_power_factors(s);
    if let Some(&q) = factors.iter().find(|&&q| n > q as usize + 1) {
        return Err(Error::Unconstructible(format!(
            "prime-power factor {q} of {s} supports at most {} columns at strength {k}, {n} needed",
            q + 1
        )));
    }
    let mut parts = factors
        .iter()
        .map(|&q| linear_oa(&vandermonde_columns(q, k, n)?));
    let first = parts.next().expect("s ≥ 2 has a factor")?;
    parts.try_fold(first, |acc, next| kronecker_product(&acc, &next?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array::{check_strength, max_strength, min_distance, min_distance_pairwise, DEFAULT_PAIR_BUDGET};

    fn md(a: &OrthogonalArray) -> usize {
        min_distance(a, DEFAULT_PAIR_BUDGET).unwrap()
    }

    #[test]
    fn unit_columns_give_full_factorial() {
        let g = GeneratorColumns::new(2, 3, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let a = linear_oa(&g).unwrap();
        assert_eq!(a.runs(), 8);
        for r in 0..8 {
            let expect: Vec<Symbol> = (0..3).map(|c| ((r >> (2 - c)) & 1) as Symbol).collect();
            assert_eq!(a.row(r), &expect[..]);
        }
        assert_eq!(max_strength(&a), 3);
    }

    #[test]
    fn single_column() {
        let g = GeneratorColumns::new(2, 1, vec![vec![1]]).unwrap();
        let a = linear_oa(&g).unwrap();
        assert_eq!(a.data(), &[0, 1]);
    }

    #[test]
    fn generator_validation() {
        assert!(GeneratorColumns::new(2, 2, vec![vec![1]]).is_err());
        assert!(GeneratorColumns::new(3, 1, vec![vec![3]]).is_err());
        assert!(GeneratorColumns::new(2, 2, vec![vec![0, 0]]).is_err());
        assert!(matches!(GeneratorColumns::new(6, 1, vec![vec![1]]), Err(Error::NotPrimePower(6))));
    }

    #[test]
    fn ic_columns() {
        let g = ic_saturated_columns(2, 3).unwrap();
        assert_eq!(
            g.columns(),
            &[
                vec![1, 0, 0],
                vec![0, 1, 0],
                vec![0, 0, 1],
                vec![1, 1, 0],
                vec![0, 1, 1],
                vec![1, 0, 1],
                vec![1, 1, 1]
            ]
        );
        let a = linear_oa(&g).unwrap();
        assert_eq!((a.runs(), a.cols(), max_strength(&a)), (8, 7, 2));

        for (s, m, n) in [(3u32, 2usize, 4usize), (2, 2, 3), (4, 2, 5), (3, 3, 13), (5, 2, 6)] {
            let g = ic_saturated_columns(s, m).unwrap();
            assert_eq!(g.len(), n);
            assert_eq!(linear_strength(&g), 2);
            let a = linear_oa(&g).unwrap();
            assert!(check_strength(&a, 2));
            assert!(!check_strength(&a, 3));
        }
    }

    #[test]
    fn vandermonde_examples() {
        let a = linear_oa(&vandermonde_columns(4, 2, 5).unwrap()).unwrap();
        assert_eq!((a.runs(), a.cols(), max_strength(&a), md(&a)), (16, 5, 2, 4));

        let a = linear_oa(&vandermonde_columns(5, 2, 5).unwrap()).unwrap();
        assert_eq!(max_strength(&a), 2);
        assert_eq!(min_distance_pairwise(&a, 300).unwrap(), 4);

        let a = linear_oa(&vandermonde_columns(8, 3, 7).unwrap()).unwrap();
        assert_eq!((a.runs(), md(&a)), (512, 5));

        assert!(matches!(vandermonde_columns(4, 2, 6), Err(Error::Unconstructible(_))));
        assert!(vandermonde_columns(4, 1, 3).is_err());
    }

    #[test]
    fn repetition_examples() {
        let a = repetition_oa(4, 3).unwrap();
        assert_eq!((a.runs(), max_strength(&a), md(&a)), (4, 1, 3));
        assert_eq!(repetition_oa(2, 3).unwrap().data(), &[0, 0, 0, 1, 1, 1]);
        let a = repetition_oa(6, 3).unwrap();
        assert!(a.linear_hint().is_none());
        assert_eq!((a.runs(), a.levels(), md(&a)), (6, &[6u32, 6, 6][..], 3));
    }

    #[test]
    fn kronecker_examples() {
        let a = kronecker_product(&repetition_oa(2, 3).unwrap(), &repetition_oa(3, 3).unwrap()).unwrap();
        assert_eq!(a.levels(), &[6, 6, 6]);
        assert_eq!((a.runs(), max_strength(&a), md(&a)), (6, 1, 3));

        let p = linear_oa(&ic_saturated_columns(2, 2).unwrap()).unwrap();
        let a = kronecker_product(&p, &p).unwrap();
        assert_eq!((a.runs(), a.levels()[0], max_strength(&a)), (16, 4, 2));
        assert_eq!(min_distance_pairwise(&a, 120).unwrap(), 2);

        let b = repetition_oa(2, 4).unwrap();
        assert!(matches!(kronecker_product(&p, &b), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn expansive_replacement() {
        let a = linear_oa(&vandermonde_columns(4, 2, 5).unwrap()).unwrap();
        let ff = linear_oa(&ic_saturated_columns(2, 2).unwrap().select(&[0, 1])).unwrap();
        let r = expansive_replace(&a, 4, &ff).unwrap();
        assert_eq!(r.levels(), &[4, 4, 4, 4, 2, 2]);
        assert_eq!((r.runs(), max_strength(&r)), (16, 2));
        assert_eq!(r.level_profile(), "4^4 2^2");

        let ident = OrthogonalArray::from_rows(vec![4], &[vec![0], vec![1], vec![2], vec![3]]).unwrap();
        let same = expansive_replace(&a, 2, &ident).unwrap();
        assert_eq!(same.data(), a.data());

        let b = linear_oa(&GeneratorColumns::new(2, 3, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 1]]).unwrap()).unwrap();
        let one = GeneratorColumns::new(2, 1, vec![vec![1]]).unwrap();
        let same = expansive_replace(&b, 0, &linear_oa(&one).unwrap()).unwrap();
        assert_eq!(same.data(), b.data());

        assert!(matches!(
            expansive_replace(&a, 0, &ff.select_rows(&[0, 1])),
            Err(Error::RowCountMismatch { expected: 4, found: 2 })
        ));
    }

    #[test]
    fn folding() {
        let a = linear_oa(&vandermonde_columns(4, 2, 5).unwrap()).unwrap();
        let f = fold_mod2(&a, 4).unwrap();
        assert_eq!(f.level_profile(), "4^4 2^1");
        assert_eq!(max_strength(&f), 2);
        assert!(f.linear_hint().is_some());
        assert_eq!(md(&f), 3);
        assert_eq!(min_distance_pairwise(&f, 1000).unwrap(), 3);

        let r = fold_mod2(&repetition_oa(4, 3).unwrap(), 2).unwrap();
        assert_eq!(r.data(), &[0, 0, 0, 1, 1, 1, 2, 2, 0, 3, 3, 1]);
        assert_eq!(md(&r), 2);
        assert_eq!(min_distance_pairwise(&r, 10).unwrap(), 2);

        let t = linear_oa(&vandermonde_columns(3, 3, 4).unwrap()).unwrap();
        assert!(matches!(fold_mod2(&t, 1), Err(Error::OddLevels { col: 1, levels: 3 })));
    }

    #[test]
    fn dependent_folds_drop_the_hint() {
        let r = repetition_oa(4, 3).unwrap();
        let f = fold_mod2(&fold_mod2(&r, 2).unwrap(), 1).unwrap();
        assert!(f.linear_hint().is_none());
        assert_eq!(md(&f), 1);
    }

    #[test]
    fn composite_moment_curve() {
        let a = macneish_moment_curve(20, 2, 5).unwrap();
        assert_eq!((a.runs(), a.levels()[0]), (400, 20));
        assert_eq!(max_strength(&a), 2);
        assert_eq!(md(&a), 4);
        assert!(matches!(macneish_moment_curve(12, 2, 5), Err(Error::Unconstructible(_))));
        assert!(macneish_moment_curve(8, 4, 9).unwrap().linear_hint().is_some());
    }
}
