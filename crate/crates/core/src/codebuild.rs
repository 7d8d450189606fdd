//! Construction of one-dimensional convolutional codes with geometric-sum
//! generator rows.
//!
//! A code is the row module of `G = (G_0, ..., G_{n-1})` where entry j is
//! the truncated geometric series `sum_{v=0..delta} (alpha^j z)^v`. For
//! `delta <= n-1` and `ord(alpha) >= n` the construction is validated as
//! right-invertible and attains the generalized Singleton bound; for
//! `delta >= n` it is accepted exactly when `ord(alpha)` does not divide
//! `delta + 1`, and the MDS guarantee is dropped.

use thiserror::Error;

use crate::gf::{FieldElement, FieldSpec};
use crate::polyalg::{DensePoly, PolyMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("ord(alpha) = {ord} is smaller than the length n = {n}")]
    OrderTooSmall { ord: u64, n: usize },
    #[error("generator is not right-invertible (ord(alpha) = {ord} divides delta+1 = {dp1})")]
    NotRightInvertible { ord: u64, dp1: u64 },
    #[error("length n = {n} exceeds q-1 = {limit}")]
    LengthExceedsField { n: usize, limit: u64 },
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("precondition not met: {0}")]
    PreconditionNotMet(String),
}

/// A validated (n, 1, delta) convolutional code.
#[derive(Clone, Debug)]
pub struct ConvCode {
    spec: FieldSpec,
    n: usize,
    delta: usize,
    alpha: FieldElement,
    alpha_order: u64,
    generator: PolyMatrix,
    mds_guaranteed: bool,
}

impl ConvCode {
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension; always 1 in this construction.
    pub fn k(&self) -> usize {
        1
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn alpha(&self) -> &FieldElement {
        &self.alpha
    }

    pub fn alpha_order(&self) -> u64 {
        self.alpha_order
    }

    /// The 1 x n generator matrix.
    pub fn generator(&self) -> &PolyMatrix {
        &self.generator
    }

    /// True when the parameters fall in the regime where the free distance
    /// provably attains the Singleton bound (delta <= n-1).
    pub fn mds_guaranteed(&self) -> bool {
        self.mds_guaranteed
    }

    /// Generalized Singleton bound for this code: n(delta+1).
    pub fn singleton(&self) -> u64 {
        singleton_bound(self.n, 1, self.delta).unwrap()
    }

    /// Total number of nonzero coefficients of the generator row; the
    /// weight of the codeword G itself.
    pub fn generator_weight(&self) -> u64 {
        self.generator.row(0).iter().map(|e| e.weight()).sum()
    }

    /// Entry of G recomputed from the factored closed form
    /// `alpha^(n-j) (z^n - 1) / (z - alpha^(n-j))` (0-indexed column j).
    ///
    /// Only available when ord(alpha) = n and delta = n-1; serves as an
    /// independent cross-check of the geometric-sum construction.
    pub fn closed_form_entry(&self, col: usize) -> Result<DensePoly, CodeError> {
        if self.alpha_order != self.n as u64 || self.delta != self.n - 1 {
            return Err(CodeError::PreconditionNotMet(format!(
                "closed form needs ord(alpha) = n and delta = n-1, got ord = {}, n = {}, delta = {}",
                self.alpha_order, self.n, self.delta
            )));
        }
        assert!(col < self.n, "column index out of range");
        let spec = &self.spec;
        let beta = self.alpha.pow((self.n - col) as u64);
        // z^n - 1
        let mut coeffs = vec![0u64; self.n + 1];
        coeffs[0] = spec.neg_i(spec.one_i());
        coeffs[self.n] = spec.one_i();
        let zn_minus_1 = DensePoly::from_indices(spec, coeffs);
        let quotient = zn_minus_1
            .exact_div(&DensePoly::linear_root(&beta))
            .expect("z - beta divides z^n - 1 when beta^n = 1");
        Ok(quotient.scale(&beta))
    }
}

/// Build the code over `spec` with the given length, overall constraint
/// length and field element.
pub fn build_code(
    spec: &FieldSpec,
    n: usize,
    delta: usize,
    alpha: &FieldElement,
) -> Result<ConvCode, CodeError> {
    assert!(alpha.spec() == spec, "alpha must live in the given field");
    if n < 2 {
        return Err(CodeError::BadParameters(format!(
            "length n = {} must be at least 2",
            n
        )));
    }
    if (n as u64) > spec.q() - 1 {
        return Err(CodeError::LengthExceedsField {
            n,
            limit: spec.q() - 1,
        });
    }
    let ord = alpha
        .order()
        .map_err(|_| CodeError::BadParameters("alpha must be nonzero".into()))?;
    if ord < n as u64 {
        return Err(CodeError::OrderTooSmall { ord, n });
    }
    if delta >= n && (delta as u64 + 1) % ord == 0 {
        return Err(CodeError::NotRightInvertible {
            ord,
            dp1: delta as u64 + 1,
        });
    }

    let entries: Vec<DensePoly> = (0..n)
        .map(|j| {
            let base = alpha.pow(j as u64);
            let coeffs: Vec<FieldElement> = (0..=delta as u64).map(|v| base.pow(v)).collect();
            DensePoly::from_elements(spec, &coeffs)
        })
        .collect();
    let generator = PolyMatrix::row_vector(spec, entries);

    // Construction invariants: every entry has degree exactly delta with
    // constant term 1, the row is right-invertible, and the maximal minor
    // degree equals delta.
    debug_assert!(generator
        .row(0)
        .iter()
        .all(|e| e.deg() == Some(delta) && e.coeff(0).is_one()));
    if !generator.is_right_invertible() {
        return Err(CodeError::NotRightInvertible {
            ord,
            dp1: delta as u64 + 1,
        });
    }
    assert_eq!(
        generator.max_minor_degree(1).unwrap(),
        delta,
        "constructed generator has wrong overall constraint length"
    );

    Ok(ConvCode {
        spec: spec.clone(),
        n,
        delta,
        alpha: alpha.clone(),
        alpha_order: ord,
        generator,
        mds_guaranteed: delta < n,
    })
}

/// Generalized Singleton bound `(n-k)(floor(delta/k)+1) + delta + 1`.
pub fn singleton_bound(n: usize, k: usize, delta: usize) -> Result<u64, CodeError> {
    if k < 1 || k >= n {
        return Err(CodeError::BadParameters(format!(
            "need 1 <= k < n, got k = {}, n = {}",
            k, n
        )));
    }
    let (n, k, delta) = (n as u64, k as u64, delta as u64);
    Ok((n - k) * (delta / k + 1) + delta + 1)
}
