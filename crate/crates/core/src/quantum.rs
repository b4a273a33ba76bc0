//! Quantum codes over mixed alphabets from orthogonal arrays.
//!
//! An array with minimum distance `h` and an orthogonal partition of
//! strength `k0` into `K` blocks yields an `((n, K, d + 1))` code with
//! `d = min(k0, h − 1)`; each block is an irredundant array whose uniform
//! superposition is a `d`-uniform state.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use itertools::Itertools;
use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::array::{
    check_strength, is_irredundant, max_strength, min_distance,
    OrthogonalArray, OrthogonalPartition, Symbol,
};
use crate::construct::{fold_mod2, macneish_moment_curve, repetition_oa};
use crate::error::{Error, Result};
use crate::gf::prime_power_factors;

/// Largest reduced-density dimension handled with exact arithmetic.
pub const REDUCTION_CAP: u128 = 4096;

/// Largest `K` allowed by the quantum Singleton bound for an `((n, K, d_code))` code.
///
/// For `n ≥ 2(d_code − 1) + 1` this is the product of the `n − 2(d_code − 1)`
/// smallest levels; for `n = 2(d_code − 1)` it is 1.
pub fn quantum_singleton_bound(levels: &[u32], d_code: usize) -> Result<u128> {
    let n = levels.len();
    if d_code == 0 {
        return Err(Error::InvalidInput("quantum code distance must be ≥ 1".into()));
    }
    let removed = 2 * (d_code - 1);
    if n < removed {
        return Err(Error::InvalidDistance { n, d: d_code });
    }
    let mut sorted = levels.to_vec();
    sorted.sort_unstable();
    sorted[..n - removed]
        .iter()
        .try_fold(1u128, |acc, &s| acc.checked_mul(s as u128))
        .ok_or_else(|| Error::InvalidInput("Singleton bound overflows 128 bits".into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Qmds,
    Nqmds,
    Neither,
}

impl Verdict {
    pub fn of(n: usize, dimension: u128, d_code: usize, bound: u128) -> Self {
        if dimension == bound {
            Verdict::Qmds
        } else if n > 2 * (d_code - 1) && dimension + 1 == bound {
            Verdict::Nqmds
        } else {
            Verdict::Neither
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Qmds => "QMDS",
            Verdict::Nqmds => "NQMDS",
            Verdict::Neither => "neither",
        })
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Quantities a third party needs to re-verify a certificate from the array alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub runs: usize,
    /// Minimum distance `h` of the parent array.
    pub min_distance: usize,
    /// Claimed and verified strength `k0` of every block.
    pub partition_strength: usize,
    pub block_size: usize,
    /// `min(k0, h − 1)`.
    pub uniformity: usize,
    pub blocks_irredundant: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuantumCertificate {
    pub code: String,
    pub n: usize,
    pub dimension: u128,
    pub distance: usize,
    pub alphabet: String,
    pub levels: Vec<u32>,
    pub singleton_bound: u128,
    pub verdict: Verdict,
    pub evidence: Evidence,
}

fn code_label(n: usize, k: u128, d: usize, alphabet: &str) -> String {
    format!("(({n},{k},{d}))_{{{alphabet}}}")
}

/// Certifies the quantum code given by an array and an orthogonal partition of it.
pub fn certify_qecc(
    a: &OrthogonalArray,
    p: &OrthogonalPartition,
    pair_budget: u64,
) -> Result<QuantumCertificate> {
    p.check(a).map_err(Error::PartitionInvalid)?;
    let h = min_distance(a, pair_budget).map_err(|e| Error::DistanceUnavailable(Box::new(e)))?;
    let k0 = p.strength;
    let d = k0.min(h.saturating_sub(1));

    // each block must be irredundant at strength d
    let blocks_irredundant = if d == 0 {
        true
    } else if p.block_count() == 1 {
        // the only block is the array itself, whose exact distance is h ≥ d + 1
        h > d
    } else {
        p.blocks
            .iter()
            .all(|b| is_irredundant(&a.select_rows(b), d))
    };
    if !blocks_irredundant {
        return Err(Error::NotIrredundant(d));
    }

    let n = a.cols();
    let dimension = p.block_count() as u128;
    let distance = d + 1;
    let bound = quantum_singleton_bound(a.levels(), distance)?;
    if dimension > bound {
        return Err(Error::OracleDisagreement(format!(
            "dimension {dimension} exceeds the Singleton bound {bound}"
        )));
    }
    let alphabet = a.level_profile();
    Ok(QuantumCertificate {
        code: code_label(n, dimension, distance, &alphabet),
        n,
        dimension,
        distance,
        alphabet,
        levels: a.levels().to_vec(),
        singleton_bound: bound,
        verdict: Verdict::of(n, dimension, distance, bound),
        evidence: Evidence {
            runs: a.runs(),
            min_distance: h,
            partition_strength: k0,
            block_size: a.runs() / p.block_count(),
            uniformity: d,
            blocks_irredundant,
        },
    })
}

/// Certifies with the single-block partition at the array's maximum strength.
pub fn certify_trivial(a: &OrthogonalArray, pair_budget: u64) -> Result<QuantumCertificate> {
    let p = OrthogonalPartition::trivial(a.runs(), max_strength(a));
    certify_qecc(a, &p, pair_budget)
}

/// How the unfolded `OA(s^k, 2k+1, s, k)` behind an NQMDS code is obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NqmdsRoute {
    Repetition,
    MomentCurve,
    /// Moment-curve arrays over each prime-power factor, Kronecker-combined.
    Kronecker(Vec<u32>),
}

impl NqmdsRoute {
    /// Builds the premise array.
    pub fn premise(&self, s: u32, k: usize) -> Result<OrthogonalArray> {
        let n = 2 * k + 1;
        match self {
            NqmdsRoute::Repetition => repetition_oa(s, n),
            _ => macneish_moment_curve(s, k, n),
        }
    }
}

impl fmt::Display for NqmdsRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NqmdsRoute::Repetition => f.write_str("repetition"),
            NqmdsRoute::MomentCurve => f.write_str("moment-curve"),
            NqmdsRoute::Kronecker(q) => write!(f, "kronecker({})", q.iter().join(", ")),
        }
    }
}

/// Decides whether `build_nqmds(s, k)` can construct its premise, without building it.
pub fn nqmds_route(s: u32, k: usize) -> Result<NqmdsRoute> {
    if k == 0 {
        return Err(Error::InvalidInput("strength k must be ≥ 1".into()));
    }
    if s < 2 || !s.is_multiple_of(2) {
        return Err(Error::Unconstructible(format!(
            "s = {s} is odd; the two-level fold needs an even level count"
        )));
    }
    let n = 2 * k + 1;
    match (s, k) {
        (_, 1) => return Ok(NqmdsRoute::Repetition),
        (6, 2) => {
            return Err(Error::Unconstructible(
                "OA(36, 5, 6, 2) does not exist: there is no pair of orthogonal Latin squares of order 6"
                    .into(),
            ))
        }
        (10, 2) => {
            return Err(Error::Unconstructible(
                "s = 10 needs an externally constructed OA(100, 5, 10^4 2^1, 2); \
                 import it as an OA file and run `certify`"
                    .into(),
            ))
        }
        _ => {}
    }
    let factors = prime_power_factors(s);
    if let Some(&q) = factors.iter().find(|&&q| n > q as usize + 1) {
        return Err(Error::Unconstructible(format!(
            "prime-power factor {q} of {s} supports at most {} columns at strength {k}, {n} needed",
            q + 1
        )));
    }
    Ok(if factors.len() == 1 {
        NqmdsRoute::MomentCurve
    } else {
        NqmdsRoute::Kronecker(factors)
    })
}

/// Builds the folded `OA(s^k, 2k+1, s^{2k} 2^1, k)` and its `((2k+1, 1, k+1))` certificate.
pub fn build_nqmds(s: u32, k: usize) -> Result<(OrthogonalArray, QuantumCertificate)> {
    let n = 2 * k + 1;
    let premise = nqmds_route(s, k)?.premise(s, k)?;
    let folded = fold_mod2(&premise, n - 1)?;
    let strength = max_strength(&folded);
    if strength != k {
        return Err(Error::OracleDisagreement(format!(
            "folded array has strength {strength}, expected {k}"
        )));
    }
    let partition = OrthogonalPartition::trivial(folded.runs(), strength);
    let cert = certify_qecc(&folded, &partition, crate::array::DEFAULT_PAIR_BUDGET)?;
    let h = cert.evidence.min_distance;
    if h != k + 1 && h != k + 2 {
        return Err(Error::OracleDisagreement(format!(
            "folded array has distance {h}, expected {} or {}",
            k + 1,
            k + 2
        )));
    }
    if cert.verdict != Verdict::Nqmds || cert.singleton_bound != 2 || cert.distance != k + 1 {
        return Err(Error::OracleDisagreement(format!(
            "expected an NQMDS certificate, got {} with bound {}",
            cert.code, cert.singleton_bound
        )));
    }
    Ok((folded, cert))
}

/// Uniform superposition of distinct computational basis kets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisState {
    dims: Vec<u32>,
    kets: Vec<Vec<Symbol>>,
}

impl BasisState {
    pub fn new(dims: Vec<u32>, kets: Vec<Vec<Symbol>>) -> Result<Self> {
        let a = OrthogonalArray::from_rows(dims, &kets)?;
        if a.has_duplicate_rows() {
            return Err(Error::InvalidInput("basis state kets must be distinct".into()));
        }
        let dims = a.levels().to_vec();
        Ok(BasisState { dims, kets })
    }

    pub fn dims(&self) -> &[u32] {
        &self.dims
    }

    pub fn kets(&self) -> &[Vec<Symbol>] {
        &self.kets
    }

    pub fn parties(&self) -> usize {
        self.dims.len()
    }
}

impl fmt::Display for BasisState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.dims.iter().any(|&d| d > 10);
        let s = self
            .kets
            .iter()
            .map(|k| {
                let body = k.iter().map(|v| v.to_string()).join(if wide { "," } else { "" });
                format!("|{body}⟩")
            })
            .join("+");
        f.write_str(&s)
    }
}

/// The `k`-uniform state whose kets are the rows of an irredundant array of strength `k`.
pub fn uniform_state(a: &OrthogonalArray, k: usize) -> Result<BasisState> {
    if !check_strength(a, k) {
        return Err(Error::InsufficientStrength(k));
    }
    if k >= a.cols() || !is_irredundant(a, k) {
        return Err(Error::NotIrredundant(k));
    }
    BasisState::new(a.levels().to_vec(), a.rows().map(<[Symbol]>::to_vec).collect())
}

/// Sparse reduced density matrix with exact rational entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedDensity {
    pub parties: Vec<usize>,
    pub dim: usize,
    pub entries: BTreeMap<(usize, usize), Ratio<u64>>,
}

impl ReducedDensity {
    pub fn is_maximally_mixed(&self) -> bool {
        let target = Ratio::new(1, self.dim as u64);
        self.entries.len() == self.dim
            && self
                .entries
                .iter()
                .all(|(&(x, y), &v)| x == y && v == target)
    }

    pub fn trace(&self) -> Ratio<u64> {
        self.entries
            .iter()
            .filter(|((x, y), _)| x == y)
            .map(|(_, &v)| v)
            .sum()
    }

    /// Number of nonzero diagonal entries.
    pub fn support(&self) -> usize {
        self.entries.keys().filter(|(x, y)| x == y).count()
    }
}

fn subset_dim(psi: &BasisState, parties: &[usize]) -> u128 {
    parties.iter().map(|&p| psi.dims[p] as u128).product()
}

/// Reduced density matrix of `ψ` on `parties`.
///
/// Entry `(x, y)` is `1/N` times the number of ket pairs `(i, j)` that agree off
/// `parties`, with ket `i` reading `x` and ket `j` reading `y` on `parties`.
pub fn reduced_density(psi: &BasisState, parties: &[usize]) -> Result<ReducedDensity> {
    let dim = subset_dim(psi, parties);
    if dim > REDUCTION_CAP {
        return Err(Error::DimensionCap {
            parties: parties.to_vec(),
            dim,
            cap: REDUCTION_CAP,
        });
    }
    let complement: Vec<usize> = (0..psi.parties()).filter(|p| !parties.contains(p)).collect();
    let index = |ket: &[Symbol]| {
        parties
            .iter()
            .fold(0usize, |acc, &p| acc * psi.dims[p] as usize + ket[p] as usize)
    };
    let mut groups: HashMap<Vec<Symbol>, Vec<usize>> = HashMap::new();
    for ket in &psi.kets {
        let key = complement.iter().map(|&p| ket[p]).collect();
        groups.entry(key).or_default().push(index(ket));
    }
    let mut counts: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for members in groups.values() {
        for &x in members {
            for &y in members {
                *counts.entry((x, y)).or_default() += 1;
            }
        }
    }
    let norm = psi.kets.len() as u64;
    Ok(ReducedDensity {
        parties: parties.to_vec(),
        dim: dim as usize,
        entries: counts
            .into_iter()
            .map(|(xy, c)| (xy, Ratio::new(c, norm)))
            .collect(),
    })
}

/// True iff every `k`-party reduction of `ψ` equals the maximally mixed state.
pub fn reduction_check(psi: &BasisState, k: usize) -> Result<bool> {
    let n = psi.parties();
    if k > n {
        return Err(Error::InvalidInput(format!("{k} parties requested from {n}")));
    }
    let subsets: Vec<Vec<usize>> = (0..n).combinations(k).collect();
    if let Some(s) = subsets.iter().find(|s| subset_dim(psi, s) > REDUCTION_CAP) {
        return Err(Error::DimensionCap {
            parties: s.clone(),
            dim: subset_dim(psi, s),
            cap: REDUCTION_CAP,
        });
    }
    for s in &subsets {
        if !reduced_density(psi, s)?.is_maximally_mixed() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array::DEFAULT_PAIR_BUDGET;
    use crate::construct::{linear_oa, vandermonde_columns};

    #[test]
    fn singleton_bound_examples() {
        assert_eq!(quantum_singleton_bound(&[4, 4, 4, 4, 2], 3).unwrap(), 2);
        assert_eq!(quantum_singleton_bound(&[4, 4, 4, 4], 3).unwrap(), 1);
        for s in 2..10u32 {
            assert_eq!(quantum_singleton_bound(&[s; 4], 2).unwrap(), (s * s) as u128);
        }
        assert!(matches!(
            quantum_singleton_bound(&[2, 2, 2], 3),
            Err(Error::InvalidDistance { n: 3, d: 3 })
        ));
        assert_eq!(quantum_singleton_bound(&[3, 5, 2, 7], 2).unwrap(), 6);
    }

    #[test]
    fn singleton_bound_matches_single_alphabet_form() {
        for s in 2..=9u32 {
            for n in 1..=10usize {
                for d in 1..=5usize {
                    if n + 2 < 2 * d {
                        continue;
                    }
                    let got = quantum_singleton_bound(&vec![s; n], d);
                    if n >= 2 * (d - 1) {
                        let e = (n + 2 - 2 * d) as u32;
                        assert_eq!(got.unwrap(), (s as u128).pow(e), "s={s} n={n} d={d}");
                    } else {
                        assert!(got.is_err());
                    }
                }
            }
        }
    }

    #[test]
    fn verdicts() {
        assert_eq!(Verdict::of(5, 1, 3, 2), Verdict::Nqmds);
        assert_eq!(Verdict::of(4, 1, 3, 1), Verdict::Qmds);
        assert_eq!(Verdict::of(5, 1, 3, 4), Verdict::Neither);
    }

    #[test]
    fn certify_folded_vandermonde() {
        let (a, c) = build_nqmds(4, 2).unwrap();
        assert_eq!(a.level_profile(), "4^4 2^1");
        assert_eq!(c.code, "((5,1,3))_{4^4 2^1}");
        assert_eq!(c.verdict, Verdict::Nqmds);
        assert_eq!(c.singleton_bound, 2);
    }

    #[test]
    fn certify_qmds_four_columns() {
        let a = linear_oa(&vandermonde_columns(4, 2, 4).unwrap()).unwrap();
        let c = certify_trivial(&a, DEFAULT_PAIR_BUDGET).unwrap();
        assert_eq!((c.n, c.dimension, c.distance), (4, 1, 3));
        assert_eq!(c.verdict, Verdict::Qmds);
    }

    #[test]
    fn pure_alphabet_is_not_nqmds() {
        let a = linear_oa(&vandermonde_columns(4, 2, 5).unwrap()).unwrap();
        let c = certify_trivial(&a, DEFAULT_PAIR_BUDGET).unwrap();
        assert_eq!(c.code, "((5,1,3))_{4^5}");
        assert_eq!(c.singleton_bound, 4);
        assert_eq!(c.verdict, Verdict::Neither);
    }

    #[test]
    fn coset_partition_degenerate_distance() {
        let g = crate::construct::GeneratorColumns::new(
            2,
            3,
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
        )
        .unwrap();
        let a = linear_oa(&g).unwrap();
        let p = OrthogonalPartition {
            blocks: vec![vec![0, 7], vec![1, 6], vec![2, 5], vec![3, 4]],
            strength: 1,
        };
        let c = certify_qecc(&a, &p, DEFAULT_PAIR_BUDGET).unwrap();
        assert_eq!((c.n, c.dimension, c.distance), (3, 4, 1));
        assert_eq!(c.evidence.min_distance, 1);
        assert_eq!(c.verdict, Verdict::Neither);

        let bad = OrthogonalPartition { strength: 2, ..p };
        assert!(matches!(
            certify_qecc(&a, &bad, DEFAULT_PAIR_BUDGET),
            Err(Error::PartitionInvalid(_))
        ));
    }

    #[test]
    fn distance_budget_surfaces() {
        let a = crate::construct::macneish_moment_curve(20, 2, 5).unwrap();
        assert!(matches!(
            certify_trivial(&a, 10),
            Err(Error::DistanceUnavailable(_))
        ));
    }

    #[test]
    fn builder_rejections() {
        assert!(matches!(build_nqmds(6, 2), Err(Error::Unconstructible(_))));
        assert!(matches!(build_nqmds(10, 2), Err(Error::Unconstructible(m)) if m.contains("certify")));
        assert!(matches!(build_nqmds(7, 1), Err(Error::Unconstructible(_))));
        assert!(matches!(build_nqmds(12, 2), Err(Error::Unconstructible(_))));
        assert!(matches!(build_nqmds(4, 3), Err(Error::Unconstructible(_))));
    }

    #[test]
    fn uniform_states() {
        let ghz = uniform_state(&repetition_oa(2, 3).unwrap(), 1).unwrap();
        assert_eq!(ghz.to_string(), "|000⟩+|111⟩");
        assert!(reduction_check(&ghz, 1).unwrap());
        assert!(!reduction_check(&ghz, 2).unwrap());
        let rho = reduced_density(&ghz, &[0, 1]).unwrap();
        assert_eq!(rho.support(), 2);
        assert_eq!(rho.trace(), Ratio::from_integer(1));

        let folded = fold_mod2(&repetition_oa(4, 3).unwrap(), 2).unwrap();
        let psi = uniform_state(&folded, 1).unwrap();
        assert_eq!(psi.to_string(), "|000⟩+|111⟩+|220⟩+|331⟩");
        assert!(reduction_check(&psi, 1).unwrap());
        assert!(reduced_density(&psi, &[2]).unwrap().is_maximally_mixed());

        let even = linear_oa(&crate::construct::ic_saturated_columns(2, 2).unwrap()).unwrap();
        let psi = uniform_state(&even, 1).unwrap();
        assert_eq!(psi.to_string(), "|000⟩+|011⟩+|101⟩+|110⟩");
        assert!(reduction_check(&psi, 1).unwrap());
        assert!(matches!(uniform_state(&even, 2), Err(Error::NotIrredundant(2))));
        assert!(matches!(
            uniform_state(&repetition_oa(2, 3).unwrap(), 2),
            Err(Error::InsufficientStrength(2))
        ));
    }

    #[test]
    fn reduction_cap() {
        let a = repetition_oa(100, 3).unwrap();
        let psi = uniform_state(&a, 1).unwrap();
        assert!(reduction_check(&psi, 1).unwrap());
        assert!(matches!(reduction_check(&psi, 2), Err(Error::DimensionCap { .. })));
    }
}
