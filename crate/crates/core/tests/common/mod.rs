//! Brute-force oracles that share no code with the library's engines.
#![allow(dead_code)]

use std::collections::HashMap;

use itertools::Itertools;
use oa_codes::array::{OrthogonalArray, Symbol};
use oa_codes::construct::GeneratorColumns;

/// Minimum distance by comparing every pair of rows.
pub fn naive_md(a: &OrthogonalArray) -> usize {
    let rows: Vec<&[Symbol]> = a.rows().collect();
    let mut best = a.cols();
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            let d = rows[i].iter().zip(rows[j]).filter(|(x, y)| x != y).count();
            best = best.min(d);
        }
    }
    best
}

/// Strength `t` by tallying every column subset in a hash map.
pub fn naive_strength(a: &OrthogonalArray, t: usize) -> bool {
    (0..a.cols()).combinations(t).all(|cols| {
        let cells: usize = cols.iter().map(|&c| a.levels()[c] as usize).product();
        if !a.runs().is_multiple_of(cells) {
            return false;
        }
        let mut tally: HashMap<Vec<Symbol>, usize> = HashMap::new();
        for row in a.rows() {
            *tally.entry(cols.iter().map(|&c| row[c]).collect()).or_default() += 1;
        }
        tally.len() == cells && tally.values().all(|&c| c == a.runs() / cells)
    })
}

pub fn naive_max_strength(a: &OrthogonalArray) -> usize {
    (1..=a.cols()).take_while(|&t| naive_strength(a, t)).last().unwrap_or(0)
}

/// Minimum weight of a nonzero vector orthogonal to every generator row,
/// found by enumerating all of GF(p)^n. Only for prime `p`.
/// Returns `n + 1` when the dual code is zero.
pub fn naive_dual_distance(g: &GeneratorColumns) -> usize {
    let p = g.order() as u64;
    let n = g.len();
    let rows: Vec<Vec<u64>> = (0..g.dimension())
        .map(|i| g.columns().iter().map(|c| c[i] as u64).collect())
        .collect();
    let mut best = n + 1;
    let mut v = vec![0u64; n];
    for _ in 1..p.pow(n as u32) {
        // increment v in base p
        for x in v.iter_mut() {
            *x += 1;
            if *x < p {
                break;
            }
            *x = 0;
        }
        let w = v.iter().filter(|&&x| x != 0).count();
        if w >= best {
            continue;
        }
        if rows
            .iter()
            .all(|r| r.iter().zip(&v).map(|(a, b)| a * b).sum::<u64>() % p == 0)
        {
            best = w;
        }
    }
    best
}
