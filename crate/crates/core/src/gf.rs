//! Exact arithmetic in finite fields GF(p^m).
//!
//! Elements are stored in the polynomial basis over the prime field: a
//! coefficient vector of length `m` reduced modulo a monic irreducible
//! modulus of degree `m`. Arithmetic is exact; for small fields
//! (q <= 256) addition/multiplication tables are built once per field
//! and shared behind an `Arc`, so cloning a [`FieldSpec`] or a
//! [`FieldElement`] is cheap and thread-safe.
//!
//! Element enumeration order is fixed: coefficient vectors compared
//! lexicographically with the constant term most significant. All
//! "deterministic smallest" searches ([`FieldSpec::find_element_of_order`],
//! default modulus selection) refer to that order.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use thiserror::Error;

/// Fields up to this cardinality get full lookup tables.
const TABLE_LIMIT: u64 = 256;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus is reducible over GF({0})")]
    ReducibleModulus(u64),
    #[error("modulus has degree {got}, expected {expected}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("the zero element has no multiplicative order")]
    ZeroElement,
    #[error("GF({q}) has no element of order {order} (mode: {mode})")]
    NoSuchOrder { q: u64, order: u64, mode: OrderMode },
}

/// Search mode for [`FieldSpec::find_element_of_order`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderMode {
    /// Element of order exactly `t` (requires `t | q-1`).
    Exact,
    /// Element of order at least `t` (requires `t <= q-1`).
    AtLeast,
}

impl fmt::Display for OrderMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderMode::Exact => write!(f, "exact"),
            OrderMode::AtLeast => write!(f, "at_least"),
        }
    }
}

struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

struct FieldCore {
    p: u64,
    m: usize,
    q: u64,
    /// Monic modulus, ascending coefficients, length m+1. For m = 1 the
    /// canonical modulus is x itself.
    modulus: Vec<u64>,
    /// weights[i] = p^(m-1-i): packing weight of the degree-i coefficient.
    weights: Vec<u64>,
    tables: Option<Tables>,
}

/// An explicit finite field GF(p^m) with exact polynomial-basis arithmetic.
#[derive(Clone)]
pub struct FieldSpec {
    core: Arc<FieldCore>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.core, &other.core)
            || (self.core.p == other.core.p
                && self.core.m == other.core.m
                && self.core.modulus == other.core.modulus)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldSpec(GF({}), modulus {:?})", self.q(), self.modulus())
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m() == 1 {
            write!(f, "GF({})", self.q())
        } else {
            write!(f, "GF({}^{})", self.p(), self.m())
        }
    }
}

impl FieldSpec {
    /// Construct GF(p^m). If `modulus` (ascending coefficients over GF(p))
    /// is omitted, the lexicographically smallest monic irreducible of
    /// degree `m` is selected; for `m = 1` the modulus is ignored and
    /// canonicalized to `x`. A non-monic modulus is scaled monic (the
    /// quotient ring is unchanged).
    pub fn new(p: u64, m: usize, modulus: Option<&[u64]>) -> Result<FieldSpec, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        assert!(m >= 1, "extension degree must be at least 1");
        let q = checked_pow(p, m as u32).expect("field cardinality overflows u64");

        let modulus = if m == 1 {
            if let Some(raw) = modulus {
                let v = reduce_raw(raw, p);
                if poly_deg(&v) != Some(1) {
                    return Err(FieldError::DegreeMismatch {
                        expected: 1,
                        got: poly_deg(&v).unwrap_or(0),
                    });
                }
            }
            vec![0, 1]
        } else {
            match modulus {
                Some(raw) => {
                    let mut v = reduce_raw(raw, p);
                    if poly_deg(&v) != Some(m) {
                        return Err(FieldError::DegreeMismatch {
                            expected: m,
                            got: poly_deg(&v).unwrap_or(0),
                        });
                    }
                    make_monic(&mut v, p);
                    if !raw_is_irreducible(&v, p) {
                        return Err(FieldError::ReducibleModulus(p));
                    }
                    v
                }
                None => smallest_irreducible(p, m),
            }
        };

        let mut weights = vec![0u64; m];
        for (i, w) in weights.iter_mut().enumerate() {
            *w = checked_pow(p, (m - 1 - i) as u32).unwrap();
        }

        let mut spec = FieldSpec {
            core: Arc::new(FieldCore {
                p,
                m,
                q,
                modulus,
                weights,
                tables: None,
            }),
        };

        if q <= TABLE_LIMIT {
            let tables = spec.build_tables();
            let core = Arc::get_mut(&mut spec.core).unwrap();
            core.tables = Some(tables);
        }
        Ok(spec)
    }

    /// The prime field GF(p).
    pub fn prime_field(p: u64) -> Result<FieldSpec, FieldError> {
        FieldSpec::new(p, 1, None)
    }

    fn build_tables(&self) -> Tables {
        let q = self.q() as usize;
        let mut add = vec![0u32; q * q];
        let mut mul = vec![0u32; q * q];
        let mut neg = vec![0u32; q];
        let mut inv = vec![0u32; q];
        for a in 0..q as u64 {
            neg[a as usize] = self.neg_generic(a) as u32;
            if a != 0 {
                inv[a as usize] = self.inv_generic(a) as u32;
            }
            for b in 0..q as u64 {
                add[(a * q as u64 + b) as usize] = self.add_generic(a, b) as u32;
                mul[(a * q as u64 + b) as usize] = self.mul_generic(a, b) as u32;
            }
        }
        Tables { add, mul, neg, inv }
    }

    pub fn p(&self) -> u64 {
        self.core.p
    }

    pub fn m(&self) -> usize {
        self.core.m
    }

    pub fn q(&self) -> u64 {
        self.core.q
    }

    /// Monic modulus as ascending coefficients over GF(p), length m+1.
    pub fn modulus(&self) -> &[u64] {
        &self.core.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            spec: self.clone(),
            idx: 0,
        }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement {
            spec: self.clone(),
            idx: self.one_i(),
        }
    }

    /// Element from an ascending coefficient vector (length <= m); the
    /// coordinates are reduced modulo p.
    pub fn element(&self, rep: &[u64]) -> FieldElement {
        assert!(
            rep.len() <= self.m(),
            "coefficient vector of length {} exceeds extension degree {}",
            rep.len(),
            self.m()
        );
        let mut idx = 0u64;
        for (i, &c) in rep.iter().enumerate() {
            idx += (c % self.p()) * self.core.weights[i];
        }
        FieldElement {
            spec: self.clone(),
            idx,
        }
    }

    /// Element from its position in the canonical enumeration order.
    pub fn element_from_index(&self, idx: u64) -> FieldElement {
        assert!(idx < self.q(), "element index {} out of range", idx);
        FieldElement {
            spec: self.clone(),
            idx,
        }
    }

    /// A scalar n·1 of the prime subfield.
    pub fn from_int(&self, n: u64) -> FieldElement {
        self.element(&[n % self.p()])
    }

    /// All field elements in the canonical enumeration order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q()).map(move |idx| self.element_from_index(idx))
    }

    /// Deterministic smallest element of order `t` (Exact) or of order at
    /// least `t` (AtLeast) in the canonical enumeration order.
    pub fn find_element_of_order(
        &self,
        t: u64,
        mode: OrderMode,
    ) -> Result<FieldElement, FieldError> {
        let q = self.q();
        let no_such = FieldError::NoSuchOrder { q, order: t, mode };
        if t == 0 {
            return Err(no_such);
        }
        match mode {
            OrderMode::Exact => {
                if (q - 1) % t != 0 {
                    return Err(no_such);
                }
                for idx in 1..q {
                    let e = self.element_from_index(idx);
                    if e.order().unwrap() == t {
                        return Ok(e);
                    }
                }
                Err(no_such)
            }
            OrderMode::AtLeast => {
                if t > q - 1 {
                    return Err(no_such);
                }
                for idx in 1..q {
                    let e = self.element_from_index(idx);
                    if e.order().unwrap() >= t {
                        return Ok(e);
                    }
                }
                Err(no_such)
            }
        }
    }

    // --- index-level arithmetic -------------------------------------------

    pub(crate) fn one_i(&self) -> u64 {
        self.core.weights[0]
    }

    fn idx_to_rep(&self, idx: u64) -> Vec<u64> {
        let m = self.m();
        let mut rep = vec![0u64; m];
        for i in 0..m {
            rep[i] = (idx / self.core.weights[i]) % self.p();
        }
        rep
    }

    fn rep_to_idx(&self, rep: &[u64]) -> u64 {
        let mut idx = 0;
        for i in 0..self.m() {
            let c = if i < rep.len() { rep[i] % self.p() } else { 0 };
            idx += c * self.core.weights[i];
        }
        idx
    }

    fn add_generic(&self, a: u64, b: u64) -> u64 {
        let p = self.p();
        let ra = self.idx_to_rep(a);
        let rb = self.idx_to_rep(b);
        let rep: Vec<u64> = ra.iter().zip(&rb).map(|(x, y)| (x + y) % p).collect();
        self.rep_to_idx(&rep)
    }

    fn neg_generic(&self, a: u64) -> u64 {
        let p = self.p();
        let rep: Vec<u64> = self.idx_to_rep(a).iter().map(|&x| (p - x) % p).collect();
        self.rep_to_idx(&rep)
    }

    fn mul_generic(&self, a: u64, b: u64) -> u64 {
        let p = self.p();
        let prod = raw_mul(&self.idx_to_rep(a), &self.idx_to_rep(b), p);
        let rem = raw_rem(&prod, &self.core.modulus, p);
        self.rep_to_idx(&rem)
    }

    fn inv_generic(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        // a^(q-2), exact by Lagrange.
        self.pow_i(a, self.q() - 2)
    }

    pub(crate) fn add_i(&self, a: u64, b: u64) -> u64 {
        match &self.core.tables {
            Some(t) => t.add[(a * self.core.q + b) as usize] as u64,
            None => self.add_generic(a, b),
        }
    }

    pub(crate) fn sub_i(&self, a: u64, b: u64) -> u64 {
        self.add_i(a, self.neg_i(b))
    }

    pub(crate) fn neg_i(&self, a: u64) -> u64 {
        match &self.core.tables {
            Some(t) => t.neg[a as usize] as u64,
            None => self.neg_generic(a),
        }
    }

    pub(crate) fn mul_i(&self, a: u64, b: u64) -> u64 {
        match &self.core.tables {
            Some(t) => t.mul[(a * self.core.q + b) as usize] as u64,
            None => self.mul_generic(a, b),
        }
    }

    pub(crate) fn inv_i(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        match &self.core.tables {
            Some(t) => t.inv[a as usize] as u64,
            None => self.inv_generic(a),
        }
    }

    pub(crate) fn pow_i(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = self.one_i();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_i(acc, base);
            }
            base = self.mul_i(base, base);
            e >>= 1;
        }
        acc
    }

    /// Direct table access for hot loops; present whenever q <= 256.
    pub(crate) fn raw_tables(&self) -> Option<(&[u32], &[u32], &[u32])> {
        self.core
            .tables
            .as_ref()
            .map(|t| (t.add.as_slice(), t.mul.as_slice(), t.neg.as_slice()))
    }
}

/// An element of a [`FieldSpec`], stored by its canonical index.
#[derive(Clone)]
pub struct FieldElement {
    spec: FieldSpec,
    idx: u64,
}

impl FieldElement {
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    /// Position in the canonical enumeration order.
    pub fn index(&self) -> u64 {
        self.idx
    }

    /// Ascending coefficient vector of length m over GF(p).
    pub fn rep(&self) -> Vec<u64> {
        self.spec.idx_to_rep(self.idx)
    }

    pub fn is_zero(&self) -> bool {
        self.idx == 0
    }

    pub fn is_one(&self) -> bool {
        self.idx == self.spec.one_i()
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        FieldElement {
            spec: self.spec.clone(),
            idx: self.spec.pow_i(self.idx, e),
        }
    }

    pub fn inverse(&self) -> Result<FieldElement, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroElement);
        }
        Ok(FieldElement {
            spec: self.spec.clone(),
            idx: self.spec.inv_i(self.idx),
        })
    }

    /// Multiplicative order: least t >= 1 with self^t = 1. Divides q-1.
    pub fn order(&self) -> Result<u64, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroElement);
        }
        let group = self.spec.q() - 1;
        for d in divisors(group) {
            if self.spec.pow_i(self.idx, d) == self.spec.one_i() {
                return Ok(d);
            }
        }
        unreachable!("element order must divide q-1");
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec && self.idx == other.idx
    }
}

impl Eq for FieldElement {}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.spec.p().hash(state);
        self.spec.modulus().hash(state);
        self.idx.hash(state);
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.spec.m() == 1 {
            write!(f, "{}", self.idx)
        } else {
            let rep = self.rep();
            let parts: Vec<String> = rep.iter().map(|c| c.to_string()).collect();
            write!(f, "[{}]", parts.join(","))
        }
    }
}

macro_rules! bin_op {
    ($trait:ident, $method:ident, $op:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                assert!(self.spec == rhs.spec, "field mismatch");
                FieldElement {
                    spec: self.spec.clone(),
                    idx: self.spec.$op(self.idx, rhs.idx),
                }
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
    };
}

bin_op!(Add, add, add_i);
bin_op!(Sub, sub, sub_i);
bin_op!(Mul, mul, mul_i);

impl Div<&FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: &FieldElement) -> FieldElement {
        assert!(self.spec == rhs.spec, "field mismatch");
        assert!(!rhs.is_zero(), "division by zero");
        FieldElement {
            spec: self.spec.clone(),
            idx: self.spec.mul_i(self.idx, self.spec.inv_i(rhs.idx)),
        }
    }
}

impl Div<FieldElement> for FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: FieldElement) -> FieldElement {
        (&self).div(&rhs)
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            spec: self.spec.clone(),
            idx: self.spec.neg_i(self.idx),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

// --- raw polynomial arithmetic over GF(p) ----------------------------------
//
// Used for element representation arithmetic and modulus validation, where
// no FieldSpec exists yet. Ascending coefficient vectors, values in 0..p.

fn reduce_raw(v: &[u64], p: u64) -> Vec<u64> {
    let mut out: Vec<u64> = v.iter().map(|c| c % p).collect();
    trim(&mut out);
    out
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_deg(v: &[u64]) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

fn make_monic(v: &mut [u64], p: u64) {
    let lead = *v.last().unwrap();
    if lead != 1 {
        let inv = mod_inverse(lead, p);
        for c in v.iter_mut() {
            *c = (*c * inv) % p;
        }
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a nonzero mod p.
    mod_pow(a % p, p - 2, p)
}

fn mod_pow(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

fn raw_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(&mut out);
    out
}

/// Remainder of `a` modulo the monic polynomial `b`.
fn raw_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = poly_deg(b).expect("zero modulus");
    let mut r: Vec<u64> = a.to_vec();
    trim(&mut r);
    while let Some(dr) = poly_deg(&r) {
        if dr < db {
            break;
        }
        let c = r[dr];
        let shift = dr - db;
        for (i, &bc) in b.iter().enumerate() {
            let sub = c * bc % p;
            r[i + shift] = (r[i + shift] + p - sub) % p;
        }
        trim(&mut r);
    }
    r
}

/// Trial division against every monic polynomial of degree <= deg/2.
fn raw_is_irreducible(f: &[u64], p: u64) -> bool {
    let d = match poly_deg(f) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if d == 1 {
        return true;
    }
    for dd in 1..=d / 2 {
        let count = checked_pow(p, dd as u32).unwrap();
        for v in 0..count {
            let cand = monic_from_counter(dd, v, p);
            if raw_rem(f, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The v-th monic polynomial of the given degree: coefficient of x^i is the
/// i-th base-p digit of v (constant term least significant), leading
/// coefficient 1. Counting v upward enumerates monic polynomials in
/// lexicographic order by descending-degree coefficient tuples.
fn monic_from_counter(deg: usize, mut v: u64, p: u64) -> Vec<u64> {
    let mut out = vec![0u64; deg + 1];
    for c in out.iter_mut().take(deg) {
        *c = v % p;
        v /= p;
    }
    out[deg] = 1;
    out
}

fn smallest_irreducible(p: u64, m: usize) -> Vec<u64> {
    let count = checked_pow(p, m as u32).unwrap();
    for v in 0..count {
        let cand = monic_from_counter(m, v, p);
        if raw_is_irreducible(&cand, p) {
            return cand;
        }
    }
    unreachable!("irreducible polynomials exist in every degree");
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

/// Divisors of n in ascending order.
pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}
