//! Creative-telescoping certificates for the two alternating sums.
//!
//! For Watson's sum `f(a) = sum_k F_k(a)` the certified relation is
//!
//! ```text
//! F_k(a) - F_k(aq) - a q F_k(aq^2) = H_{k+1}(a) - H_k(a),
//! H_k(a) = (-1)^k (-1 - q^k + a q^{2k}) a^{2k} q^{k(5k-1)/2} / ((q;q)_{k-1} (a q^k;q)_inf),
//! ```
//!
//! and for Sylvester's `f(x)`:
//!
//! ```text
//! F_k(x) - F_k(xq) = H_{k+1}(x) - H_k(x),
//! H_k(x) = (-1)^{k+1} q^{k(3k+1)/2} x^k / ((q;q)_{k-1} (x q^{k+1};q)_inf),
//! ```
//!
//! with `H_0 = 0` in both families (the displayed formulas have no meaning at
//! k = 0, and the telescoped sum closes only with a vanishing boundary).
//! Summing over k collapses the relations to the functional equations
//! `f(a) = f(aq) + a q f(aq^2)` and `f(x) = f(xq)`; extracting a^n from the
//! first reproduces the recurrence `u_n = q^n u_n + q^{2n-1} u_{n-1}` that the
//! bijection proves combinatorially. Everything is checked coefficientwise in
//! the truncated bivariate ring.

use crate::report::{CellRecord, VerificationReport};
use crate::series::{sylvester_lhs, sylvester_summand, watson_lhs, watson_summand, AQSeries, QSeries};

/// The Watson certificate `H_k(a)`; `H_0 = 0` by the boundary convention.
pub fn watson_certificate(k: usize, a_order: usize, q_order: usize) -> AQSeries {
    if k == 0 {
        return AQSeries::zero(a_order, q_order);
    }
    let inf = AQSeries::poch_inf(1, k, a_order, q_order).expect("k >= 1 avoids the divergent case");
    let denom = inf.mul_q(&QSeries::poch(k - 1, q_order));
    let inv = denom.invert().expect("denominator has constant term 1");
    let one = AQSeries::one(a_order, q_order);
    let poly = one.neg().sub(&one.shift(0, k)).add(&one.shift(1, 2 * k));
    let g = poly.mul(&inv).shift(2 * k, k * (5 * k - 1) / 2);
    if k % 2 == 1 {
        g.neg()
    } else {
        g
    }
}

/// The Sylvester certificate `H_k(x)`; `H_0 = 0` by the boundary convention.
pub fn sylvester_certificate(k: usize, x_order: usize, q_order: usize) -> AQSeries {
    if k == 0 {
        return AQSeries::zero(x_order, q_order);
    }
    let inf = AQSeries::poch_inf(1, k + 1, x_order, q_order).expect("e = k+1 >= 2 is never divergent");
    let denom = inf.mul_q(&QSeries::poch(k - 1, q_order));
    let inv = denom.invert().expect("denominator has constant term 1");
    let g = inv.shift(k, k * (3 * k + 1) / 2);
    if k.is_multiple_of(2) {
        g.neg()
    } else {
        g
    }
}

/// Outcome of verifying one certificate family across a k-range.
#[derive(Clone, Debug)]
pub struct CertificateCheck {
    /// Which alternating sum the certificates belong to.
    pub family: &'static str,
    /// Certificates were checked for k = 0..=k_max.
    pub k_max: usize,
    /// Row (a- or x-) truncation order.
    pub a_order: usize,
    /// q truncation order.
    pub q_order: usize,
    /// Per-k relation records, then the summed-consequence records.
    pub cells: Vec<CellRecord>,
}

impl CertificateCheck {
    /// True when every record passed.
    pub fn ok(&self) -> bool {
        self.cells.iter().all(CellRecord::ok)
    }

    /// Repackages into the common report schema, cells keyed by k.
    pub fn into_report(self) -> VerificationReport {
        let options = serde_json::json!({
            "k_max": self.k_max,
            "a_order": self.a_order,
            "q_order": self.q_order,
        });
        VerificationReport::new("check-certificate", self.family, options, self.cells)
    }
}

fn relation_cell(k: usize, q_order: usize, lhs: &AQSeries, rhs: &AQSeries, what: &str) -> CellRecord {
    let mut failures = Vec::new();
    let (rows, cols) = (lhs.a_order().min(rhs.a_order()) + 1, lhs.q_order().min(rhs.q_order()) + 1);
    'scan: for d in 0..rows {
        for j in 0..cols {
            if lhs.row(d).coeff(j) != rhs.row(d).coeff(j) {
                failures.push(format!(
                    "{what} differs at row {d}, q^{j}: {} vs {}",
                    lhs.row(d).coeff(j),
                    rhs.row(d).coeff(j)
                ));
                break 'scan;
            }
        }
    }
    CellRecord { n: None, k, max_weight: Some(q_order), domain_size: (rows * cols) as u64, failures }
}

/// Verifies the Watson certificate relation for k = 0..=k_max, the summed
/// functional equation, and its a^n rows.
pub fn verify_watson_certificate(k_max: usize, a_order: usize, q_order: usize) -> CertificateCheck {
    let mut cells = Vec::new();
    for k in 0..=k_max {
        let f = watson_summand(k, a_order, q_order);
        let lhs = f.sub(&f.scale_a(1)).sub(&f.scale_a(2).shift(1, 1));
        let rhs = watson_certificate(k + 1, a_order, q_order)
            .sub(&watson_certificate(k, a_order, q_order));
        cells.push(relation_cell(k, q_order, &lhs, &rhs, "certificate relation"));
    }

    let f = watson_lhs(a_order, q_order);
    let residual = f.sub(&f.scale_a(1)).sub(&f.scale_a(2).shift(1, 1));
    let mut cell = relation_cell(
        k_max + 1,
        q_order,
        &residual,
        &AQSeries::zero(a_order, q_order),
        "summed functional equation f(a) - f(aq) - aq f(aq^2)",
    );
    // extracting a^n: u_n = q^n u_n + q^{2n-1} u_{n-1}
    for n in 1..=a_order {
        let row = f.row(n);
        let want = row.shift(n).add(&f.row(n - 1).shift(2 * n - 1));
        if row != &want {
            cell.failures.push(format!("row recurrence fails at a^{n}"));
        }
    }
    cells.push(cell);

    CertificateCheck { family: "watson", k_max, a_order, q_order, cells }
}

/// Verifies the Sylvester certificate relation for k = 0..=k_max, the summed
/// equation f(x) = f(xq) with f(x) = 1, and the telescoped partial sums.
pub fn verify_sylvester_certificate(k_max: usize, x_order: usize, q_order: usize) -> CertificateCheck {
    let mut cells = Vec::new();
    for k in 0..=k_max {
        let f = sylvester_summand(k, x_order, q_order);
        let lhs = f.sub(&f.scale_a(1));
        let rhs = sylvester_certificate(k + 1, x_order, q_order)
            .sub(&sylvester_certificate(k, x_order, q_order));
        cells.push(relation_cell(k, q_order, &lhs, &rhs, "certificate relation"));
    }

    let f = sylvester_lhs(x_order, q_order);
    let mut cell = relation_cell(
        k_max + 1,
        q_order,
        &f.sub(&f.scale_a(1)),
        &AQSeries::zero(x_order, q_order),
        "summed equation f(x) - f(xq)",
    );
    let one_cell = relation_cell(
        k_max + 1,
        q_order,
        &f,
        &AQSeries::one(x_order, q_order),
        "sum side vs 1",
    );
    cell.failures.extend(one_cell.failures);
    cells.push(cell);

    // partial sums close at the first unused certificate
    let mut acc = AQSeries::zero(x_order, q_order);
    let mut telescoped = CellRecord {
        n: None,
        k: k_max + 2,
        max_weight: Some(q_order),
        domain_size: 0,
        failures: Vec::new(),
    };
    for cap in 0..=k_max {
        let f = sylvester_summand(cap, x_order, q_order);
        acc = acc.add(&f.sub(&f.scale_a(1)));
        let closed = sylvester_certificate(cap + 1, x_order, q_order);
        let diff = relation_cell(cap, q_order, &acc, &closed, "partial sum vs closing certificate");
        if !diff.ok() {
            telescoped.failures.extend(diff.failures);
        }
    }
    cells.push(telescoped);

    CertificateCheck { family: "sylvester", k_max, a_order: x_order, q_order, cells }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn boundary_certificates_vanish() {
        assert!(watson_certificate(0, 6, 12).is_zero());
        assert!(sylvester_certificate(0, 6, 12).is_zero());
        // exponents beyond the grid leave nothing
        assert!(watson_certificate(6, 4, 10).is_zero());
        assert!(sylvester_certificate(7, 6, 10).is_zero());
    }

    #[test]
    fn first_watson_certificate_row() {
        // H_1(a) = -(-1 - q + a q^2) a^2 q^2 / (aq;q)_inf; its a^2 row is
        // exactly (1 + q) q^2
        let h1 = watson_certificate(1, 4, 10);
        let mut want = vec![BigInt::ZERO; 11];
        want[2] = BigInt::from(1);
        want[3] = BigInt::from(1);
        assert_eq!(h1.row(2).coeffs(), &want[..]);
        assert!(h1.row(0).is_zero());
        assert!(h1.row(1).is_zero());
    }

    #[test]
    fn relation_at_the_boundary_equals_first_certificate() {
        let f = watson_summand(0, 5, 12);
        let lhs = f.sub(&f.scale_a(1)).sub(&f.scale_a(2).shift(1, 1));
        assert_eq!(lhs, watson_certificate(1, 5, 12));

        let f = sylvester_summand(0, 5, 12);
        assert_eq!(f.sub(&f.scale_a(1)), sylvester_certificate(1, 5, 12));
    }

    #[test]
    fn certificate_checks_pass() {
        let w = verify_watson_certificate(4, 6, 14);
        assert!(w.ok(), "{:?}", w.cells.iter().flat_map(|c| &c.failures).collect::<Vec<_>>());
        let s = verify_sylvester_certificate(4, 6, 14);
        assert!(s.ok(), "{:?}", s.cells.iter().flat_map(|c| &c.failures).collect::<Vec<_>>());
    }

    #[test]
    fn reports_round_trip() {
        let report = verify_watson_certificate(2, 4, 8).into_report();
        let json = serde_json::to_string(&report).unwrap();
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
    }
}
