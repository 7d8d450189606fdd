//! Vandermonde-type parity check matrices for the geometric-sum codes
//! with ord(alpha) = n.
//!
//! Three constructions are provided: the full power matrix with rows
//! `(z - alpha^(n-c))^j`, the mixed matrix that prepends constant
//! Vandermonde rows for delta < n-1, and the minimal matrix
//! `H1 z - H0` whose leading row matrix is itself Vandermonde.
//! [`verify_parity_pair`] certifies the parity-check property for a
//! one-row generator through three exact checks: the product vanishes,
//! the candidate is right-invertible, and its internal degree matches
//! the code's overall constraint length.

use thiserror::Error;

use crate::codebuild::{build_code, ConvCode};
use crate::gf::{FieldElement, FieldSpec};
use crate::polyalg::{DensePoly, PolyMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParityError {
    #[error("ord(alpha) = {ord} but the construction requires ord(alpha) = n = {n}")]
    OrderMismatch { ord: u64, n: usize },
    #[error("delta = {delta} out of range for length n = {n}")]
    BadDelta { delta: usize, n: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("constructed matrix failed verification against the code")]
    VerificationFailed,
}

/// Outcome of [`verify_parity_pair`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParityReport {
    /// G * H^T is exactly zero.
    pub product_zero: bool,
    /// H has a polynomial right inverse.
    pub right_invertible: bool,
    /// The internal degree of H equals the code's overall constraint length.
    pub degree_consistent: bool,
}

impl ParityReport {
    /// All three conditions together pin down ker H^T = im G for k = 1.
    pub fn certified(&self) -> bool {
        self.product_zero && self.right_invertible && self.degree_consistent
    }
}

fn check_order(spec: &FieldSpec, n: usize, alpha: &FieldElement) -> Result<(), ParityError> {
    assert!(alpha.spec() == spec, "alpha must live in the given field");
    let ord = alpha.order().map_err(|_| ParityError::OrderMismatch { ord: 0, n })?;
    if ord != n as u64 {
        return Err(ParityError::OrderMismatch { ord, n });
    }
    Ok(())
}

/// The (n-1) x n matrix with entry (j, c) = (z - alpha^(n-c))^j for
/// j = 1..n-1; requires ord(alpha) = n.
pub fn build_h_full(
    spec: &FieldSpec,
    n: usize,
    alpha: &FieldElement,
) -> Result<PolyMatrix, ParityError> {
    check_order(spec, n, alpha)?;
    Ok(build_h_full_unchecked(spec, n, alpha))
}

/// [`build_h_full`] without the order validation. The product identity
/// G H^T = 0 holds only when ord(alpha) = n; this variant exists to
/// demonstrate the failure for larger orders.
pub fn build_h_full_unchecked(spec: &FieldSpec, n: usize, alpha: &FieldElement) -> PolyMatrix {
    let rows = (1..n)
        .map(|j| {
            (0..n)
                .map(|c| DensePoly::linear_root(&alpha.pow((n - c) as u64)).pow(j))
                .collect()
        })
        .collect();
    PolyMatrix::from_rows(spec, rows)
}

/// The mixed matrix for 0 <= delta < n: n-delta-1 constant Vandermonde
/// rows (1, alpha^j, ..., alpha^(j(n-1))) followed by delta rows
/// ((z - alpha^(n-c))^i). The result is verified against the code of the
/// same parameters before being returned.
pub fn build_h_general(
    spec: &FieldSpec,
    n: usize,
    delta: usize,
    alpha: &FieldElement,
) -> Result<PolyMatrix, ParityError> {
    check_order(spec, n, alpha)?;
    if delta >= n {
        return Err(ParityError::BadDelta { delta, n });
    }
    let mut rows: Vec<Vec<DensePoly>> = Vec::with_capacity(n - 1);
    for j in 1..=(n - 1 - delta) {
        rows.push(
            (0..n)
                .map(|c| DensePoly::constant(&alpha.pow((j * c) as u64)))
                .collect(),
        );
    }
    for i in 1..=delta {
        rows.push(
            (0..n)
                .map(|c| DensePoly::linear_root(&alpha.pow((n - c) as u64)).pow(i))
                .collect(),
        );
    }
    let h = PolyMatrix::from_rows(spec, rows);

    // The defining property is only asserted per instance, so every
    // constructed matrix is checked against its code before release.
    let code = build_code(spec, n, delta, alpha).map_err(|_| ParityError::VerificationFailed)?;
    let report = verify_parity_pair(code.generator(), &h)?;
    if !report.certified() {
        return Err(ParityError::VerificationFailed);
    }
    Ok(h)
}

/// The minimal (n-1) x n matrix with entry (j, c) =
/// beta^(j-1) z - beta^j where beta = alpha^(n-c); decomposes as
/// H1 z - H0 with both constant matrices of Vandermonde type.
pub fn build_h_min(
    spec: &FieldSpec,
    n: usize,
    alpha: &FieldElement,
) -> Result<PolyMatrix, ParityError> {
    check_order(spec, n, alpha)?;
    let rows = (1..n)
        .map(|j| {
            (0..n)
                .map(|c| {
                    let beta = alpha.pow((n - c) as u64);
                    let lead = beta.pow(j as u64 - 1);
                    let constant = -beta.pow(j as u64);
                    DensePoly::from_elements(spec, &[constant, lead])
                })
                .collect()
        })
        .collect();
    Ok(PolyMatrix::from_rows(spec, rows))
}

/// Check the three conditions that certify H as a parity check matrix of
/// the one-dimensional code generated by `g`.
pub fn verify_parity_pair(g: &PolyMatrix, h: &PolyMatrix) -> Result<ParityReport, ParityError> {
    if g.rows() != 1 {
        return Err(ParityError::DimensionMismatch(format!(
            "generator must be 1 x n, got {} x {}",
            g.rows(),
            g.cols()
        )));
    }
    let n = g.cols();
    if h.rows() != n - 1 || h.cols() != n {
        return Err(ParityError::DimensionMismatch(format!(
            "parity candidate must be {} x {}, got {} x {}",
            n - 1,
            n,
            h.rows(),
            h.cols()
        )));
    }
    if g.spec() != h.spec() {
        return Err(ParityError::DimensionMismatch(
            "matrices live over different fields".into(),
        ));
    }

    let product_zero = g.matmul(&h.transpose()).is_zero();
    let right_invertible = h.is_right_invertible();
    let code_delta = g.max_minor_degree(1).unwrap_or(0);
    let degree_consistent = match h.max_minor_degree(n - 1) {
        Ok(d) => d == code_delta,
        Err(_) => false,
    };
    Ok(ParityReport {
        product_zero,
        right_invertible,
        degree_consistent,
    })
}

/// Convenience wrapper running [`verify_parity_pair`] against a code.
pub fn verify_against_code(code: &ConvCode, h: &PolyMatrix) -> Result<ParityReport, ParityError> {
    verify_parity_pair(code.generator(), h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::OrderMode;
    use crate::polyalg::ScalarMatrix;

    fn field_with_order(n: usize) -> (FieldSpec, FieldElement) {
        // smallest desk-scale field containing an element of order n
        let (p, m) = match n {
            3 => (2, 2),
            4 => (5, 1),
            5 => (11, 1),
            6 => (7, 1),
            7 => (2, 3),
            _ => panic!("no fixture field for n = {}", n),
        };
        let spec = FieldSpec::new(p, m, None).unwrap();
        let alpha = spec
            .find_element_of_order(n as u64, OrderMode::Exact)
            .unwrap();
        (spec, alpha)
    }

    #[test]
    fn h_full_layout_n3() {
        let (f4, a) = field_with_order(3);
        let h = build_h_full(&f4, 3, &a).unwrap();
        // row 1 = (z-1, z-a^2, z-a), row 2 = squares thereof
        assert_eq!(h.entry(0, 0), &DensePoly::linear_root(&f4.one()));
        assert_eq!(h.entry(0, 1), &DensePoly::linear_root(&a.pow(2)));
        assert_eq!(h.entry(0, 2), &DensePoly::linear_root(&a));
        for c in 0..3 {
            assert_eq!(h.entry(1, c), &h.entry(0, c).pow(2));
        }
    }

    #[test]
    fn h_full_is_parity_check_for_delta_n_minus_1() {
        for n in 3..=6 {
            let (spec, a) = field_with_order(n);
            let code = build_code(&spec, n, n - 1, &a).unwrap();
            let h = build_h_full(&spec, n, &a).unwrap();
            let report = verify_against_code(&code, &h).unwrap();
            assert!(report.product_zero);
            assert!(report.right_invertible);
            assert!(report.degree_consistent);
            assert!(report.certified());
        }
    }

    #[test]
    fn h_full_rejects_wrong_order_and_product_fails() {
        let f8 = FieldSpec::new(2, 3, None).unwrap();
        let a = f8.find_element_of_order(7, OrderMode::Exact).unwrap();
        assert!(matches!(
            build_h_full(&f8, 3, &a),
            Err(ParityError::OrderMismatch { ord: 7, n: 3 })
        ));
        // forcing the construction anyway: the product is nonzero
        let code = build_code(&f8, 3, 2, &a).unwrap();
        let h = build_h_full_unchecked(&f8, 3, &a);
        let report = verify_against_code(&code, &h).unwrap();
        assert!(!report.product_zero);
    }

    #[test]
    fn h_general_all_deltas() {
        for n in 3..=5 {
            let (spec, a) = field_with_order(n);
            for delta in 0..n {
                let h = build_h_general(&spec, n, delta, &a).unwrap();
                let code = build_code(&spec, n, delta, &a).unwrap();
                let report = verify_against_code(&code, &h).unwrap();
                assert!(report.certified(), "n = {}, delta = {}", n, delta);
            }
        }
    }

    #[test]
    fn h_general_degenerate_cases() {
        let (f4, a) = field_with_order(3);
        // delta = n-1: no constant rows, equals the full construction
        let h = build_h_general(&f4, 3, 2, &a).unwrap();
        assert_eq!(h, build_h_full(&f4, 3, &a).unwrap());
        // delta = 0: all rows constant, annihilates the repetition row
        let h0 = build_h_general(&f4, 3, 0, &a).unwrap();
        for r in 0..2 {
            for c in 0..3 {
                assert_eq!(h0.entry(r, c).deg(), Some(0));
            }
        }
        assert!(matches!(
            build_h_general(&f4, 3, 3, &a),
            Err(ParityError::BadDelta { delta: 3, n: 3 })
        ));
    }

    #[test]
    fn h_general_gf11() {
        // 2 constant rows + 2 linear rows over GF(11), n = 5
        let f11 = FieldSpec::prime_field(11).unwrap();
        let a = f11.find_element_of_order(5, OrderMode::Exact).unwrap();
        let h = build_h_general(&f11, 5, 2, &a).unwrap();
        assert_eq!(h.entry(0, 0).deg(), Some(0));
        assert_eq!(h.entry(1, 0).deg(), Some(0));
        assert_eq!(h.entry(2, 0).deg(), Some(1));
        assert_eq!(h.entry(3, 0).deg(), Some(1));
        let code = build_code(&f11, 5, 2, &a).unwrap();
        assert!(code.generator().matmul(&h.transpose()).is_zero());
    }

    #[test]
    fn h_min_structure_and_minimality() {
        for n in 3..=7 {
            let (spec, a) = field_with_order(n);
            let code = build_code(&spec, n, n - 1, &a).unwrap();
            let h = build_h_min(&spec, n, &a).unwrap();
            let report = verify_against_code(&code, &h).unwrap();
            assert!(report.certified(), "n = {}", n);
            assert_eq!(h.row_degrees().unwrap(), vec![1; n - 1]);
            assert!(h.is_minimal_basis().unwrap());
            // the full construction is highly non-minimal for n >= 3
            let hf = build_h_full(&spec, n, &a).unwrap();
            assert!(!hf.is_minimal_basis().unwrap());
        }
    }

    #[test]
    fn leading_matrices_vandermonde_ranks() {
        let (f4, a) = field_with_order(3);
        // leading matrix of the full construction is all ones: rank 1
        let hf = build_h_full(&f4, 3, &a).unwrap();
        let lead = hf.leading_row_matrix().unwrap();
        for r in 0..2 {
            for c in 0..3 {
                assert!(lead.entry(r, c).is_one());
            }
        }
        assert_eq!(lead.rank(), 1);

        // H_min = H1 z - H0: H1 rows are beta^(j-1), H0 rows beta^j,
        // both Vandermonde over the distinct nodes beta_c = alpha^(n-c);
        // both have full rank n-1.
        let hm = build_h_min(&f4, 3, &a).unwrap();
        let h1 = hm.leading_row_matrix().unwrap();
        assert_eq!(h1.entry(0, 0), f4.one());
        assert_eq!(h1.entry(0, 1), f4.one());
        assert_eq!(h1.entry(0, 2), f4.one());
        assert_eq!(h1.entry(1, 0), f4.one()); // beta_0 = a^3 = 1
        assert_eq!(h1.entry(1, 1), a.pow(2));
        assert_eq!(h1.entry(1, 2), a.clone());
        assert_eq!(h1.rank(), 2);
        let h0 = ScalarMatrix::from_elements(
            &f4,
            (0..2)
                .map(|r| (0..3).map(|c| -hm.entry(r, c).coeff(0)).collect())
                .collect(),
        );
        assert_eq!(h0.entry(0, 0), f4.one());
        assert_eq!(h0.entry(0, 1), a.pow(2));
        assert_eq!(h0.entry(0, 2), a.clone());
        assert_eq!(h0.entry(1, 1), a.pow(4));
        assert_eq!(h0.rank(), 2);
    }

    #[test]
    fn h_min_row_degree_example_n4() {
        let f5 = FieldSpec::prime_field(5).unwrap();
        let a = f5.find_element_of_order(4, OrderMode::Exact).unwrap();
        let h = build_h_min(&f5, 4, &a).unwrap();
        assert_eq!(h.row_degrees().unwrap(), vec![1, 1, 1]);
        let hf = build_h_full(&f5, 4, &a).unwrap();
        assert_eq!(hf.row_degrees().unwrap(), vec![1, 2, 3]);
    }

    #[test]
    fn wrong_delta_regime_product_is_nonzero() {
        let (f4, a) = field_with_order(3);
        let code = build_code(&f4, 3, 1, &a).unwrap();
        let h = build_h_full(&f4, 3, &a).unwrap();
        let report = verify_against_code(&code, &h).unwrap();
        assert!(!report.product_zero);
        assert!(!report.degree_consistent); // internal degree 2 vs delta 1
    }

    #[test]
    fn dimension_mismatch_detected() {
        let (f4, a) = field_with_order(3);
        let code = build_code(&f4, 3, 2, &a).unwrap();
        let h = PolyMatrix::identity(&f4, 3);
        assert!(matches!(
            verify_against_code(&code, &h),
            Err(ParityError::DimensionMismatch(_))
        ));
    }

    #[test]
    fn alpha_power_sum_identities() {
        // sum_{v=1..n} alpha^v (z - alpha^v)^j = 0 for j = 0..n-2, and the
        // geometric sums sum_{v=0..n-1} alpha^(v(mu+1)) = 0 for mu <= n-2.
        for n in 3..=7u64 {
            let (spec, a) = field_with_order(n as usize);
            for j in 0..(n - 1) as usize {
                let mut acc = DensePoly::zero(&spec);
                for v in 1..=n {
                    let term = DensePoly::linear_root(&a.pow(v)).pow(j);
                    acc = &acc + &term.scale(&a.pow(v));
                }
                assert!(acc.is_zero(), "n = {}, j = {}", n, j);
            }
            for mu in 0..=(n - 2) {
                let mut acc = spec.zero();
                for v in 0..n {
                    acc = &acc + &a.pow(v * (mu + 1));
                }
                assert!(acc.is_zero(), "n = {}, mu = {}", n, mu);
            }
        }
    }
}
