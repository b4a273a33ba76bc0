//! Arithmetic and linear algebra over small finite fields GF(q), q = p^m ≤ 256.
//!
//! Elements are labelled `0..q`. For an extension field the label of an
//! element is its polynomial coefficient vector read as a base-p integer
//! (constant term least significant), so `0` and `1` are always the additive
//! and multiplicative identities. The defining polynomial is the smallest
//! monic irreducible of degree m when the non-leading coefficients are
//! compared as a base-p integer.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};

/// A field element label.
pub type Elem = u8;

/// Largest supported field order.
pub const MAX_ORDER: u32 = 256;

/// Fields up to this order have their tables checked against every axiom on construction.
const AXIOM_CHECK_LIMIT: u32 = 64;

/// Returns `(p, m)` with `q = p^m` when `q` is a prime power, `None` otherwise.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = smallest_prime_factor(q);
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

fn smallest_prime_factor(n: u32) -> u32 {
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 1;
    }
    n
}

/// Splits `n ≥ 2` into its maximal prime-power factors, ascending.
///
/// `prime_power_factors(20) == [4, 5]`, `prime_power_factors(12) == [3, 4]`.
pub fn prime_power_factors(n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut rest = n;
    while rest > 1 {
        let p = smallest_prime_factor(rest);
        let mut pp = 1;
        while rest.is_multiple_of(p) {
            rest /= p;
            pp *= p;
        }
        out.push(pp);
    }
    out.sort_unstable();
    out
}

/// Polynomials over GF(p), coefficients low degree first, no trailing zeros.
mod poly {
    pub fn trim(a: &mut Vec<u32>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    /// Remainder of `a` modulo the monic polynomial `m`.
    pub fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let mut r = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        while r.len() > dm {
            let lead = *r.last().unwrap();
            let shift = r.len() - 1 - dm;
            for (i, &c) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - (lead * c) % p) % p;
            }
            trim(&mut r);
        }
        r
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(&mut out);
        out
    }

    /// Monic polynomial of degree `deg` whose lower coefficients are the base-p digits of `code`.
    pub fn monic(deg: u32, code: u32, p: u32) -> Vec<u32> {
        let mut c = code;
        let mut out = Vec::with_capacity(deg as usize + 1);
        for _ in 0..deg {
            out.push(c % p);
            c /= p;
        }
        out.push(1);
        out
    }

    pub fn is_irreducible(f: &[u32], p: u32) -> bool {
        let deg = (f.len() - 1) as u32;
        for d in 1..=deg / 2 {
            for code in 0..p.pow(d) {
                if rem(f, &monic(d, code, p), p).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    pub fn from_label(mut label: u32, p: u32) -> Vec<u32> {
        let mut out = Vec::new();
        while label > 0 {
            out.push(label % p);
            label /= p;
        }
        out
    }

    pub fn to_label(a: &[u32], p: u32) -> u32 {
        a.iter().rev().fold(0, |acc, &c| acc * p + c)
    }
}

/// Finite field GF(q) with precomputed operation tables.
#[derive(Clone, PartialEq, Eq)]
pub struct GaloisField {
    order: u32,
    characteristic: u32,
    degree: u32,
    /// Defining polynomial, constant term first; `[0, 1]` (x) for prime fields.
    modulus: Vec<u32>,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GaloisField")
            .field("order", &self.order)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl GaloisField {
    /// Builds GF(q). Fails with [`Error::NotPrimePower`] unless `q` is a prime power in `[2, 256]`.
    pub fn new(q: u32) -> Result<Self> {
        let (p, m) = prime_power(q)
            .filter(|_| q <= MAX_ORDER)
            .ok_or(Error::NotPrimePower(q))?;
        let modulus = if m == 1 {
            vec![0, 1]
        } else {
            (0..p.pow(m))
                .map(|code| poly::monic(m, code, p))
                .find(|f| poly::is_irreducible(f, p))
                .expect("an irreducible polynomial exists in every degree")
        };

        let n = q as usize;
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        if m == 1 {
            for a in 0..q {
                for b in 0..q {
                    add[(a * q + b) as usize] = ((a + b) % q) as Elem;
                    mul[(a * q + b) as usize] = ((a * b) % q) as Elem;
                }
            }
        } else {
            let polys: Vec<Vec<u32>> = (0..q).map(|l| poly::from_label(l, p)).collect();
            for a in 0..q {
                for b in 0..q {
                    let (pa, pb) = (&polys[a as usize], &polys[b as usize]);
                    let len = pa.len().max(pb.len());
                    let sum: Vec<u32> = (0..len)
                        .map(|i| (pa.get(i).unwrap_or(&0) + pb.get(i).unwrap_or(&0)) % p)
                        .collect();
                    let prod = poly::rem(&poly::mul(pa, pb, p), &modulus, p);
                    add[(a * q + b) as usize] = poly::to_label(&sum, p) as Elem;
                    mul[(a * q + b) as usize] = poly::to_label(&prod, p) as Elem;
                }
            }
        }

        let mut neg = vec![0; n];
        let mut inv = vec![0; n];
        for a in 0..n {
            neg[a] = (0..n).find(|&b| add[a * n + b] == 0).unwrap() as Elem;
            if a != 0 {
                inv[a] = (1..n).find(|&b| mul[a * n + b] == 1).unwrap_or(0) as Elem;
            }
        }

        let field = GaloisField {
            order: q,
            characteristic: p,
            degree: m,
            modulus,
            add,
            mul,
            neg,
            inv,
        };
        if q <= AXIOM_CHECK_LIMIT {
            assert!(field.satisfies_axioms(), "GF({q}) tables violate a field axiom");
        }
        Ok(field)
    }

    /// Process-wide shared instance of GF(q).
    pub fn shared(q: u32) -> Result<Arc<GaloisField>> {
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<GaloisField>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(f) = cache.lock().unwrap().get(&q) {
            return Ok(Arc::clone(f));
        }
        let field = Arc::new(GaloisField::new(q)?);
        cache.lock().unwrap().entry(q).or_insert_with(|| Arc::clone(&field));
        Ok(field)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Coefficients of the defining polynomial, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.order as usize + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.order as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        (a != 0).then(|| self.inv[a as usize])
    }

    pub fn pow(&self, a: Elem, e: u32) -> Elem {
        (0..e).fold(1, |acc, _| self.mul(acc, a))
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.order).map(|e| e as Elem)
    }

    /// Inner product of two equal-length vectors.
    pub fn dot(&self, x: &[Elem], y: &[Elem]) -> Elem {
        x.iter()
            .zip(y)
            .fold(0, |acc, (&a, &b)| self.add(acc, self.mul(a, b)))
    }

    /// Exhaustive check of the field axioms over the tables.
    pub fn satisfies_axioms(&self) -> bool {
        let all = || (0..self.order).map(|e| e as Elem);
        for a in all() {
            if self.add(a, 0) != a || self.mul(a, 1) != a || self.mul(a, 0) != 0 {
                return false;
            }
            if self.add(a, self.neg(a)) != 0 {
                return false;
            }
            if a != 0 && self.mul(a, self.inv[a as usize]) != 1 {
                return false;
            }
            for b in all() {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return false;
                }
                for c in all() {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c))
                        || self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))
                        || self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Dense matrix over a finite field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldMatrix {
    field: Arc<GaloisField>,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl FieldMatrix {
    pub fn zeros(field: Arc<GaloisField>, rows: usize, cols: usize) -> Self {
        FieldMatrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// Builds a matrix from row vectors of length `cols`.
    pub fn from_rows(field: Arc<GaloisField>, cols: usize, rows: &[Vec<Elem>]) -> Result<Self> {
        let q = field.order();
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::InvalidInput(format!(
                    "matrix row {i} has length {}, expected {cols}",
                    r.len()
                )));
            }
            if let Some(&e) = r.iter().find(|&&e| e as u32 >= q) {
                return Err(Error::InvalidInput(format!(
                    "matrix entry {e} is not an element of GF({q})"
                )));
            }
            data.extend_from_slice(r);
        }
        Ok(FieldMatrix {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn field(&self) -> &Arc<GaloisField> {
        &self.field
    }

    pub fn order(&self) -> u32 {
        self.field.order()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        assert!((v as u32) < self.field.order());
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> FieldMatrix {
        let mut t = FieldMatrix::zeros(Arc::clone(&self.field), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    /// Reduced row echelon form with zero rows dropped, plus the pivot columns.
    pub fn rref(&self) -> (FieldMatrix, Vec<usize>) {
        let f = &*self.field;
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| m[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    m.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(m[r * cols + c]).unwrap();
            for j in 0..cols {
                m[r * cols + j] = f.mul(m[r * cols + j], inv);
            }
            for i in 0..rows {
                let factor = m[i * cols + c];
                if i == r || factor == 0 {
                    continue;
                }
                for j in 0..cols {
                    let sub = f.mul(factor, m[r * cols + j]);
                    m[i * cols + j] = f.sub(m[i * cols + j], sub);
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.truncate(r * cols);
        let reduced = FieldMatrix {
            field: Arc::clone(&self.field),
            rows: r,
            cols,
            data: m,
        };
        (reduced, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis (as rows, in reduced echelon form) of `{v : M·vᵀ = 0}`.
    pub fn null_space(&self) -> FieldMatrix {
        let f = &*self.field;
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = FieldMatrix::zeros(Arc::clone(&self.field), free.len(), self.cols);
        for (b, &fc) in free.iter().enumerate() {
            basis.set(b, fc, 1);
            for (pr, &pc) in pivots.iter().enumerate() {
                basis.set(b, pc, f.neg(red.get(pr, fc)));
            }
        }
        basis.rref().0
    }

    /// True when `v` lies in the row space.
    pub fn row_space_contains(&self, v: &[Elem]) -> bool {
        let mut rows = self.row_vecs();
        let before = self.rank();
        rows.push(v.to_vec());
        let ext = FieldMatrix::from_rows(Arc::clone(&self.field), self.cols, &rows)
            .expect("same shape and field");
        ext.rank() == before
    }

    /// True when both matrices have the same row space.
    pub fn same_row_space(&self, other: &FieldMatrix) -> bool {
        self.cols == other.cols
            && self.order() == other.order()
            && (0..other.rows).all(|r| self.row_space_contains(other.row(r)))
            && (0..self.rows).all(|r| other.row_space_contains(self.row(r)))
    }
}
