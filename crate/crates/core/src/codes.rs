//! Classical linear codes carried by linear orthogonal arrays.
//!
//! The dual distance is computed twice, once by enumerating dual codewords and
//! once as `max_strength + 1` of the array, and the two must agree.

use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::array::{max_strength, OrthogonalArray};
use crate::construct::{linear_oa, GeneratorColumns};
use crate::error::{Error, Result};
use crate::gf::{Elem, FieldMatrix, GaloisField};

/// Largest codeword enumeration classify will attempt.
pub const ENUMERATION_CAP: u128 = 1 << 24;

/// Singleton-defect class of a linear code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    Mds,
    /// S = 1 but the dual is not almost MDS.
    AmdsOnly,
    Nmds,
    /// S = S⊥ = m ≥ 2.
    MMds(usize),
    Other,
}

impl Classification {
    /// Class from the defects of the code and its dual.
    pub fn from_defects(defect: usize, dual_defect: usize) -> Self {
        match (defect, dual_defect) {
            (0, _) => Classification::Mds,
            (1, 1) => Classification::Nmds,
            (1, _) => Classification::AmdsOnly,
            (m, m2) if m == m2 => Classification::MMds(m),
            _ => Classification::Other,
        }
    }

    /// Class from the defect and the array strength `t`, using the three
    /// strength criteria: MDS iff `t = k`; NMDS iff `S = 1` and `t = k − 1`;
    /// m-MDS iff `S = m` and `t = k − m`.
    pub fn from_strength(defect: usize, strength: usize, k: usize) -> Self {
        if strength == k {
            Classification::Mds
        } else if defect == 1 && strength + 1 == k {
            Classification::Nmds
        } else if defect == 1 {
            Classification::AmdsOnly
        } else if defect >= 2 && strength + defect == k {
            Classification::MMds(defect)
        } else {
            Classification::Other
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Mds => f.write_str("MDS"),
            Classification::AmdsOnly => f.write_str("AMDS"),
            Classification::Nmds => f.write_str("NMDS"),
            Classification::MMds(m) => write!(f, "{m}-MDS"),
            Classification::Other => f.write_str("other"),
        }
    }
}

impl Serialize for Classification {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `[n, k, d]_s` of a code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CodeParams {
    pub s: u32,
    pub n: usize,
    pub k: usize,
    pub d: usize,
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]_{}", self.n, self.k, self.d, self.s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeReport {
    pub code: String,
    pub s: u32,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub dual_dimension: usize,
    pub dual_distance: usize,
    pub defect: usize,
    pub dual_defect: usize,
    /// Maximum strength of the array whose rows are the codewords.
    pub strength: usize,
    pub classification: Classification,
    pub almost_extremal: bool,
    pub self_dual: bool,
}

impl CodeReport {
    pub fn params(&self) -> CodeParams {
        CodeParams {
            s: self.s,
            n: self.n,
            k: self.k,
            d: self.d,
        }
    }
}

fn check_enumerable(s: u32, k: usize) -> Result<()> {
    let size = (s as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if size > ENUMERATION_CAP {
        return Err(Error::TooLarge { size });
    }
    Ok(())
}

/// `[n, k, d]` with `d` the minimum nonzero codeword weight.
pub fn code_params(g: &GeneratorColumns) -> Result<CodeParams> {
    if g.is_folded() {
        return Err(Error::InvalidInput("folded columns do not define a linear code".into()));
    }
    let k = g.dimension();
    let rank = g.rank();
    if rank < k {
        return Err(Error::RankDeficient { rank, k });
    }
    check_enumerable(g.order(), k)?;
    let n = g.len();
    let d = if k == 0 { n + 1 } else { g.min_folded_weight() };
    Ok(CodeParams { s: g.order(), n, k, d })
}

/// Generator of the dual code, rows spanning the null space of the generator matrix.
pub fn dual_generator(g: &GeneratorColumns) -> Result<GeneratorColumns> {
    let k = g.dimension();
    let rank = g.rank();
    if rank < k {
        return Err(Error::RankDeficient { rank, k });
    }
    let basis = g.matrix().null_space();
    GeneratorColumns::from_generator_rows(g.order(), g.len(), &basis.row_vecs())
}

/// True when the two generators span the same code.
pub fn same_code(a: &GeneratorColumns, b: &GeneratorColumns) -> bool {
    a.order() == b.order() && a.len() == b.len() && a.matrix().same_row_space(&b.matrix())
}

/// Complete parameter report with classification and dual parameters.
pub fn classify(g: &GeneratorColumns) -> Result<CodeReport> {
    let params = code_params(g)?;
    let CodeParams { s, n, k, d } = params;
    let dual = dual_generator(g)?;
    // a zero-dimensional dual has no nonzero codewords; n + 1 keeps [n, n, 1] MDS
    let dual_by_weight = code_params(&dual)?.d;

    let strength = max_strength(&linear_oa(g)?);
    if strength + 1 != dual_by_weight {
        return Err(Error::OracleDisagreement(format!(
            "dual distance {dual_by_weight} by enumeration, strength {strength} by counting"
        )));
    }
    let dual_distance = dual_by_weight;
    let defect = n + 1 - k - d;
    let dual_defect = k + 1 - dual_distance;

    let classification = Classification::from_defects(defect, dual_defect);
    let by_strength = Classification::from_strength(defect, strength, k);
    if classification != by_strength {
        return Err(Error::OracleDisagreement(format!(
            "defects give {classification}, strength {strength} gives {by_strength}"
        )));
    }

    let q = s as usize;
    let almost_extremal =
        classification == Classification::Nmds && n == 2 * q + k - 1 && d + 1 == 2 * q;
    let self_dual = 2 * k == n && same_code(g, &dual);

    Ok(CodeReport {
        code: params.to_string(),
        s,
        n,
        k,
        d,
        dual_dimension: n - k,
        dual_distance,
        defect,
        dual_defect,
        strength,
        classification,
        almost_extremal,
        self_dual,
    })
}

/// Recovers generator columns from an array whose rows form a linear code over GF(s).
///
/// A linear hint is used directly; otherwise the rows must be `s^k` distinct
/// vectors spanning a `k`-dimensional space.
pub fn linear_code_of(a: &OrthogonalArray) -> Result<GeneratorColumns> {
    if let Some(g) = a.linear_hint().filter(|g| !g.is_folded()) {
        return Ok(g.clone());
    }
    let s = a
        .symmetric_levels()
        .ok_or_else(|| Error::NotLinear("columns have different level counts".into()))?;
    let field: Arc<GaloisField> = GaloisField::shared(s)
        .map_err(|_| Error::NotLinear(format!("{s} levels do not form a field")))?;
    if a.has_duplicate_rows() {
        return Err(Error::NotLinear("array has duplicate rows".into()));
    }
    let rows: Vec<Vec<Elem>> = a
        .rows()
        .map(|r| r.iter().map(|&v| v as Elem).collect())
        .collect();
    let m = FieldMatrix::from_rows(field, a.cols(), &rows)?;
    let (basis, _) = m.rref();
    let k = basis.rows();
    if (s as u128).pow(k as u32) != a.runs() as u128 {
        return Err(Error::NotLinear(format!(
            "{} distinct rows span a space of dimension {k} over GF({s})",
            a.runs()
        )));
    }
    GeneratorColumns::from_generator_rows(s, a.cols(), &basis.row_vecs())
}
