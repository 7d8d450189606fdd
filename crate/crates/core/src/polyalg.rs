//! Exact univariate polynomials and polynomial matrices over GF(q).
//!
//! [`DensePoly`] keeps ascending coefficients with no trailing zeros;
//! [`PolyMatrix`] is a rectangular grid of polynomials over one field.
//! Minors are computed by cofactor expansion (matrices here are at most
//! 8x9), right-invertibility by the gcd of the maximal minors, and
//! minimality by the predictable-degree criterion: full-rank leading row
//! matrix plus row-degree sum equal to the internal degree.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use itertools::Itertools;
use thiserror::Error;

use crate::gf::{FieldElement, FieldSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("all {k}x{k} minors are zero")]
    AllMinorsZero { k: usize },
    #[error("row {0} is zero")]
    ZeroRow(usize),
    #[error("matrix does not have full row rank")]
    RankDeficient,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Univariate polynomial with exact coefficients in a finite field.
///
/// Coefficients are stored ascending by degree as canonical element
/// indices; the zero polynomial is the empty list.
#[derive(Clone)]
pub struct DensePoly {
    spec: FieldSpec,
    coeffs: Vec<u64>,
}

impl DensePoly {
    pub fn zero(spec: &FieldSpec) -> DensePoly {
        DensePoly {
            spec: spec.clone(),
            coeffs: vec![],
        }
    }

    pub fn one(spec: &FieldSpec) -> DensePoly {
        DensePoly::constant(&spec.one())
    }

    pub fn constant(c: &FieldElement) -> DensePoly {
        let mut p = DensePoly {
            spec: c.spec().clone(),
            coeffs: vec![c.index()],
        };
        p.normalize();
        p
    }

    /// Build from field elements, ascending by degree.
    pub fn from_elements(spec: &FieldSpec, coeffs: &[FieldElement]) -> DensePoly {
        let idx = coeffs
            .iter()
            .map(|c| {
                assert!(c.spec() == spec, "field mismatch");
                c.index()
            })
            .collect();
        let mut p = DensePoly {
            spec: spec.clone(),
            coeffs: idx,
        };
        p.normalize();
        p
    }

    /// Build from canonical element indices, ascending by degree.
    pub fn from_indices(spec: &FieldSpec, coeffs: Vec<u64>) -> DensePoly {
        let mut p = DensePoly {
            spec: spec.clone(),
            coeffs,
        };
        p.normalize();
        p
    }

    /// c * z^k
    pub fn monomial(c: &FieldElement, k: usize) -> DensePoly {
        if c.is_zero() {
            return DensePoly::zero(c.spec());
        }
        let mut coeffs = vec![0u64; k + 1];
        coeffs[k] = c.index();
        DensePoly {
            spec: c.spec().clone(),
            coeffs,
        }
    }

    /// z - c
    pub fn linear_root(c: &FieldElement) -> DensePoly {
        let spec = c.spec().clone();
        DensePoly::from_indices(&spec, vec![spec.neg_i(c.index()), spec.one_i()])
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Coefficient of z^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        let idx = self.coeffs.get(i).copied().unwrap_or(0);
        self.spec.element_from_index(idx)
    }

    pub(crate) fn coeff_index(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.coeffs
            .last()
            .map(|&idx| self.spec.element_from_index(idx))
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> u64 {
        self.coeffs.iter().filter(|&&c| c != 0).count() as u64
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        assert!(x.spec() == &self.spec, "field mismatch");
        let s = &self.spec;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = s.add_i(s.mul_i(acc, x.index()), c);
        }
        s.element_from_index(acc)
    }

    pub fn scale(&self, c: &FieldElement) -> DensePoly {
        assert!(c.spec() == &self.spec, "field mismatch");
        let s = &self.spec;
        DensePoly::from_indices(
            s,
            self.coeffs.iter().map(|&a| s.mul_i(a, c.index())).collect(),
        )
    }

    /// self * z^k
    pub fn shift_up(&self, k: usize) -> DensePoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0u64; k];
        coeffs.extend_from_slice(&self.coeffs);
        DensePoly {
            spec: self.spec.clone(),
            coeffs,
        }
    }

    pub fn pow(&self, e: usize) -> DensePoly {
        let mut acc = DensePoly::one(&self.spec);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn divrem(&self, d: &DensePoly) -> (DensePoly, DensePoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        assert!(self.spec == d.spec, "field mismatch");
        let s = &self.spec;
        let dd = d.deg().unwrap();
        let lead_inv = s.inv_i(*d.coeffs.last().unwrap());
        let mut rem = self.coeffs.clone();
        let mut quo = vec![
            0u64;
            self.deg()
                .map_or(0, |n| if n >= dd { n - dd + 1 } else { 0 })
        ];
        while rem.last() == Some(&0) {
            rem.pop();
        }
        while rem.len() >= dd + 1 {
            let shift = rem.len() - 1 - dd;
            let c = s.mul_i(*rem.last().unwrap(), lead_inv);
            quo[shift] = c;
            for (i, &dc) in d.coeffs.iter().enumerate() {
                let t = s.mul_i(c, dc);
                rem[i + shift] = s.sub_i(rem[i + shift], t);
            }
            while rem.last() == Some(&0) {
                rem.pop();
            }
        }
        (
            DensePoly::from_indices(s, quo),
            DensePoly::from_indices(s, rem),
        )
    }

    /// Exact quotient, or None if the division leaves a remainder.
    pub fn exact_div(&self, d: &DensePoly) -> Option<DensePoly> {
        let (q, r) = self.divrem(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Monic multiple of self (unchanged zero polynomial).
    pub fn monic(&self) -> DensePoly {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&l.inverse().unwrap()),
        }
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&self.spec.one_i())
    }

    /// Trial division against all lower-degree monic polynomials.
    pub fn is_irreducible(&self) -> bool {
        let d = match self.deg() {
            Some(d) if d >= 1 => d,
            _ => return false,
        };
        if d == 1 {
            return true;
        }
        for dd in 1..=d / 2 {
            for cand in monic_polys(&self.spec, dd) {
                if self.divrem(&cand).1.is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

impl PartialEq for DensePoly {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec && self.coeffs == other.coeffs
    }
}

impl Eq for DensePoly {}

impl fmt::Debug for DensePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for DensePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let e = self.spec.element_from_index(c);
            let c_str = if e.is_one() && i > 0 {
                String::new()
            } else {
                format!("{}", e)
            };
            let term = match i {
                0 => c_str,
                1 => format!("{}z", c_str),
                _ => format!("{}z^{}", c_str, i),
            };
            parts.push(term);
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl Add<&DensePoly> for &DensePoly {
    type Output = DensePoly;
    fn add(self, rhs: &DensePoly) -> DensePoly {
        assert!(self.spec == rhs.spec, "field mismatch");
        let s = &self.spec;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| s.add_i(self.coeff_index(i), rhs.coeff_index(i)))
            .collect();
        DensePoly::from_indices(s, coeffs)
    }
}

impl Sub<&DensePoly> for &DensePoly {
    type Output = DensePoly;
    fn sub(self, rhs: &DensePoly) -> DensePoly {
        assert!(self.spec == rhs.spec, "field mismatch");
        let s = &self.spec;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| s.sub_i(self.coeff_index(i), rhs.coeff_index(i)))
            .collect();
        DensePoly::from_indices(s, coeffs)
    }
}

impl Mul<&DensePoly> for &DensePoly {
    type Output = DensePoly;
    fn mul(self, rhs: &DensePoly) -> DensePoly {
        assert!(self.spec == rhs.spec, "field mismatch");
        let s = &self.spec;
        if self.is_zero() || rhs.is_zero() {
            return DensePoly::zero(s);
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = s.add_i(coeffs[i + j], s.mul_i(a, b));
            }
        }
        DensePoly::from_indices(s, coeffs)
    }
}

impl Neg for &DensePoly {
    type Output = DensePoly;
    fn neg(self) -> DensePoly {
        let s = &self.spec;
        DensePoly::from_indices(s, self.coeffs.iter().map(|&c| s.neg_i(c)).collect())
    }
}

/// Monic gcd via the Euclidean algorithm.
pub fn poly_gcd(f: &DensePoly, g: &DensePoly) -> Result<DensePoly, PolyError> {
    if f.is_zero() && g.is_zero() {
        return Err(PolyError::BothZero);
    }
    let mut a = f.clone();
    let mut b = g.clone();
    while !b.is_zero() {
        let r = a.divrem(&b).1;
        a = b;
        b = r;
    }
    Ok(a.monic())
}

/// Extended Euclid: returns (gcd monic, s, t) with s*f + t*g = gcd.
pub fn poly_ext_gcd(
    f: &DensePoly,
    g: &DensePoly,
) -> Result<(DensePoly, DensePoly, DensePoly), PolyError> {
    if f.is_zero() && g.is_zero() {
        return Err(PolyError::BothZero);
    }
    let spec = f.spec().clone();
    let (mut r0, mut r1) = (f.clone(), g.clone());
    let (mut s0, mut s1) = (DensePoly::one(&spec), DensePoly::zero(&spec));
    let (mut t0, mut t1) = (DensePoly::zero(&spec), DensePoly::one(&spec));
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1);
        let s = &s0 - &(&q * &s1);
        let t = &t0 - &(&q * &t1);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    let lead = r0.leading().unwrap();
    let inv = lead.inverse().unwrap();
    Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
}

/// Monic polynomials of the given degree in the deterministic counter
/// order (coefficient of x^i is the i-th base-q digit of the counter).
pub fn monic_polys(spec: &FieldSpec, deg: usize) -> impl Iterator<Item = DensePoly> + '_ {
    let q = spec.q();
    let count = q.checked_pow(deg as u32).expect("enumeration too large");
    (0..count).map(move |v| {
        let mut coeffs = vec![0u64; deg + 1];
        let mut r = v;
        for c in coeffs.iter_mut().take(deg) {
            *c = r % q;
            r /= q;
        }
        coeffs[deg] = spec.one_i();
        DensePoly::from_indices(spec, coeffs)
    })
}

/// Rectangular matrix of polynomials over one field.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    spec: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<DensePoly>,
}

impl PolyMatrix {
    pub fn new(spec: &FieldSpec, rows: usize, cols: usize, entries: Vec<DensePoly>) -> PolyMatrix {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        for e in &entries {
            assert!(e.spec() == spec, "field mismatch");
        }
        PolyMatrix {
            spec: spec.clone(),
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(spec: &FieldSpec, rows: Vec<Vec<DensePoly>>) -> PolyMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        PolyMatrix::new(spec, r, c, rows.into_iter().flatten().collect())
    }

    pub fn row_vector(spec: &FieldSpec, entries: Vec<DensePoly>) -> PolyMatrix {
        let cols = entries.len();
        PolyMatrix::new(spec, 1, cols, entries)
    }

    pub fn zero(spec: &FieldSpec, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix::new(spec, rows, cols, vec![DensePoly::zero(spec); rows * cols])
    }

    pub fn identity(spec: &FieldSpec, n: usize) -> PolyMatrix {
        let mut m = PolyMatrix::zero(spec, n, n);
        for i in 0..n {
            *m.entry_mut(i, i) = DensePoly::one(spec);
        }
        m
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &DensePoly {
        &self.entries[r * self.cols + c]
    }

    pub fn entry_mut(&mut self, r: usize, c: usize) -> &mut DensePoly {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[DensePoly] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut entries = Vec::with_capacity(self.rows * self.cols);
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.entry(r, c).clone());
            }
        }
        PolyMatrix::new(&self.spec, self.cols, self.rows, entries)
    }

    pub fn matmul(&self, rhs: &PolyMatrix) -> PolyMatrix {
        assert!(self.spec == rhs.spec, "field mismatch");
        assert_eq!(self.cols, rhs.rows, "inner dimension mismatch");
        let mut entries = Vec::with_capacity(self.rows * rhs.cols);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let mut acc = DensePoly::zero(&self.spec);
                for k in 0..self.cols {
                    acc = &acc + &(self.entry(r, k) * rhs.entry(k, c));
                }
                entries.push(acc);
            }
        }
        PolyMatrix::new(&self.spec, self.rows, rhs.cols, entries)
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn det(&self) -> DensePoly {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return DensePoly::one(&self.spec);
        }
        if n == 1 {
            return self.entry(0, 0).clone();
        }
        let mut acc = DensePoly::zero(&self.spec);
        for c in 0..n {
            if self.entry(0, c).is_zero() {
                continue;
            }
            let minor = self.submatrix(&(1..n).collect::<Vec<_>>(), &complement(c, n));
            let term = self.entry(0, c) * &minor.det();
            if c % 2 == 0 {
                acc = &acc + &term;
            } else {
                acc = &acc - &term;
            }
        }
        acc
    }

    pub fn submatrix(&self, row_ids: &[usize], col_ids: &[usize]) -> PolyMatrix {
        let entries = row_ids
            .iter()
            .flat_map(|&r| col_ids.iter().map(move |&c| self.entry(r, c).clone()))
            .collect();
        PolyMatrix::new(&self.spec, row_ids.len(), col_ids.len(), entries)
    }

    /// All k x k minors (every row and column selection).
    pub fn minors(&self, k: usize) -> Vec<DensePoly> {
        assert!(k <= self.rows && k <= self.cols, "minor size too large");
        let mut out = Vec::new();
        for row_ids in (0..self.rows).combinations(k) {
            for col_ids in (0..self.cols).combinations(k) {
                out.push(self.submatrix(&row_ids, &col_ids).det());
            }
        }
        out
    }

    /// The rows x rows minors of a wide matrix.
    pub fn maximal_minors(&self) -> Vec<DensePoly> {
        assert!(self.rows <= self.cols, "matrix has more rows than columns");
        self.minors(self.rows)
    }

    /// Maximum degree over all k x k minors.
    pub fn max_minor_degree(&self, k: usize) -> Result<usize, PolyError> {
        self.minors(k)
            .iter()
            .filter_map(|m| m.deg())
            .max()
            .ok_or(PolyError::AllMinorsZero { k })
    }

    /// True iff the maximal minors have a constant nonzero gcd, i.e. the
    /// matrix has a polynomial right inverse.
    pub fn is_right_invertible(&self) -> bool {
        assert!(self.rows <= self.cols, "matrix has more rows than columns");
        let mut gcd: Option<DensePoly> = None;
        for m in self.maximal_minors() {
            if m.is_zero() {
                continue;
            }
            gcd = Some(match gcd {
                None => m.monic(),
                Some(g) => poly_gcd(&g, &m).unwrap(),
            });
            if gcd.as_ref().unwrap().deg() == Some(0) {
                return true;
            }
        }
        matches!(gcd, Some(g) if g.deg() == Some(0))
    }

    /// True iff some maximal minor is nonzero.
    pub fn has_full_row_rank(&self) -> bool {
        assert!(self.rows <= self.cols, "matrix has more rows than columns");
        self.maximal_minors().iter().any(|m| !m.is_zero())
    }

    /// Per-row maximum entry degree. A zero row is an error.
    pub fn row_degrees(&self) -> Result<Vec<usize>, PolyError> {
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .filter_map(|e| e.deg())
                    .max()
                    .ok_or(PolyError::ZeroRow(r))
            })
            .collect()
    }

    /// Matrix of coefficients at each row's degree (zero where an entry's
    /// degree is lower).
    pub fn leading_row_matrix(&self) -> Result<ScalarMatrix, PolyError> {
        let degs = self.row_degrees()?;
        let mut data = Vec::with_capacity(self.rows * self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                data.push(self.entry(r, c).coeff_index(degs[r]));
            }
        }
        Ok(ScalarMatrix::from_indices(
            &self.spec, self.rows, self.cols, data,
        ))
    }

    /// Predictable-degree test: leading row matrix has full row rank and
    /// the row degrees sum to the internal degree.
    pub fn is_minimal_basis(&self) -> Result<bool, PolyError> {
        assert!(self.rows <= self.cols, "matrix has more rows than columns");
        if !self.has_full_row_rank() {
            return Err(PolyError::RankDeficient);
        }
        let degs = self.row_degrees()?;
        let leading_ok = self.leading_row_matrix()?.rank() == self.rows;
        let internal = self.max_minor_degree(self.rows)?;
        Ok(leading_ok && degs.iter().sum::<usize>() == internal)
    }
}

fn complement(skip: usize, n: usize) -> Vec<usize> {
    (0..n).filter(|&c| c != skip).collect()
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|c| format!("{}", self.entry(r, c)))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Membership of `v` in the module generated by the single row `g`:
/// returns u with u*g = v if it exists.
///
/// The quotient is fixed by exact division at the first nonzero entry of
/// `g` and then cross-checked against every coordinate.
pub fn module_membership(v: &PolyMatrix, g: &PolyMatrix) -> Option<DensePoly> {
    assert_eq!(v.rows(), 1, "expected a row vector");
    assert_eq!(g.rows(), 1, "expected a row vector");
    assert_eq!(v.cols(), g.cols(), "length mismatch");
    assert!(!g.is_zero(), "zero generator");
    let pivot = (0..g.cols()).find(|&c| !g.entry(0, c).is_zero()).unwrap();
    let u = if v.entry(0, pivot).is_zero() {
        DensePoly::zero(v.spec())
    } else {
        v.entry(0, pivot).exact_div(g.entry(0, pivot))?
    };
    for c in 0..g.cols() {
        if &(&u * g.entry(0, c)) != v.entry(0, c) {
            return None;
        }
    }
    Some(u)
}

/// Constant matrix over a finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct ScalarMatrix {
    spec: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl ScalarMatrix {
    pub fn from_indices(spec: &FieldSpec, rows: usize, cols: usize, data: Vec<u64>) -> ScalarMatrix {
        assert_eq!(data.len(), rows * cols);
        ScalarMatrix {
            spec: spec.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn from_elements(spec: &FieldSpec, rows: Vec<Vec<FieldElement>>) -> ScalarMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let data = rows
            .iter()
            .flat_map(|row| {
                assert_eq!(row.len(), c, "ragged rows");
                row.iter().map(|e| {
                    assert!(e.spec() == spec, "field mismatch");
                    e.index()
                })
            })
            .collect();
        ScalarMatrix::from_indices(spec, r, c, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> FieldElement {
        self.spec.element_from_index(self.data[r * self.cols + c])
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let s = &self.spec;
        let mut a = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let pivot = (rank..rows).find(|&r| a[r * cols + col] != 0);
            let Some(pr) = pivot else { continue };
            for c in 0..cols {
                a.swap(pr * cols + c, rank * cols + c);
            }
            let inv = s.inv_i(a[rank * cols + col]);
            for c in col..cols {
                a[rank * cols + c] = s.mul_i(a[rank * cols + c], inv);
            }
            for r in 0..rows {
                if r != rank && a[r * cols + col] != 0 {
                    let f = a[r * cols + col];
                    for c in col..cols {
                        let t = s.mul_i(f, a[rank * cols + c]);
                        a[r * cols + c] = s.sub_i(a[r * cols + c], t);
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

impl fmt::Debug for ScalarMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| format!("{}", self.entry(r, c))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
