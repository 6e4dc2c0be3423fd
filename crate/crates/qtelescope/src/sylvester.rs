//! The telescoping proof of Sylvester's identity
//!
//! ```text
//! sum_{k>=0} (-1)^k q^{k(3k+1)/2} x^k (1 - x q^{2k+1}) / ((q;q)_k (x q^{k+1};q)_inf) = 1.
//! ```
//!
//! Cells are pairs `Q_{n,k} = {(tau, lambda)}` with `tau` the trapezoid
//! `(k^{k+1}, k-1, ..., 1)`, `lambda` having no part equal to 2k+1 and exactly
//! n-k parts greater than k; the weight is `x^n q^{|tau|+|lambda|}`. The B-side
//! is `{n} x Q_{n,k}`, so telescoping gives `I_n = q^n I_n`: the coefficient
//! series of x^n is killed for every n >= 1, and the whole sum collapses to
//! the n = 0 term, 1.

use serde::{Deserialize, Serialize};

use crate::partitions::{enumerate, trapezoid_sylvester, Partition, PartitionConstraint};
use crate::report::{CellRecord, VerificationReport};
use crate::series::{sylvester_lhs, AQSeries};
use crate::telescoping::{brute_force_f, CellImage, TelescopingInstance, Weight};

/// A pair `(tau, lambda)` of `Q_{n,k}`, weighted `x^n q^{|tau|+|lambda|}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SylvesterElement {
    /// Row index: the x-exponent, equal to k plus the number of parts above k.
    pub n: usize,
    /// Summation index of the cell.
    pub k: usize,
    /// The trapezoid (k^{k+1}, k-1, ..., 1), stored explicitly.
    pub tau: Partition,
    /// No part equal to 2k+1; exactly n-k parts greater than k.
    pub lambda: Partition,
}

impl std::fmt::Debug for SylvesterElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(n={}, k={}, tau={:?}, lambda={:?})", self.n, self.k, self.tau, self.lambda)
    }
}

/// The Sylvester instance of [`TelescopingInstance`].
#[derive(Clone, Copy, Debug, Default)]
pub struct SylvesterInstance;

impl TelescopingInstance for SylvesterInstance {
    type Elem = SylvesterElement;
    /// The attached multiple n, contributing `q^n`.
    type Marker = usize;

    fn name(&self) -> &'static str {
        "sylvester"
    }

    fn k_bound(&self, n: usize, _max_weight: usize) -> usize {
        n
    }

    fn vanish_k(&self, n: usize) -> usize {
        n + 1
    }

    fn enumerate_cell(&self, n: usize, k: usize, max_weight: usize) -> Vec<SylvesterElement> {
        if k > n {
            return Vec::new();
        }
        let tau = trapezoid_sylvester(k);
        let tw = tau.weight();
        if tw > max_weight {
            return Vec::new();
        }
        let lambda_c = PartitionConstraint {
            forbidden_part: Some(2 * k + 1),
            exact_count_gt: Some((k, n - k)),
            ..Default::default()
        };
        enumerate(&lambda_c, max_weight - tw)
            .into_iter()
            .map(|lambda| SylvesterElement { n, k, tau: tau.clone(), lambda })
            .collect()
    }

    fn is_member(&self, n: usize, k: usize, e: &SylvesterElement) -> bool {
        e.n == n
            && e.k == k
            && k <= n
            && e.tau == trapezoid_sylvester(k)
            && e.lambda.multiplicity_fin(2 * k + 1) == 0
            && e.lambda.multiplicity_gt(k) == n - k
    }

    fn in_h(&self, _n: usize, k: usize, e: &SylvesterElement) -> bool {
        e.lambda.multiplicity(k + 1) >= e.lambda.multiplicity(k)
    }

    fn apply_phi(&self, n: usize, k: usize, e: &SylvesterElement) -> CellImage<SylvesterElement, usize> {
        assert!(n >= 1 && self.is_member(n, k, e));
        if self.in_h(n, k, e) {
            return CellImage::StayH(e.clone());
        }
        // not exceptional means m_{k+1} < m_k, so a k-part survives every merge;
        // at k = 0 no (k+1)-part exists because 1 = 2k+1 is forbidden
        let b = e.lambda.multiplicity_fin(k + 1);
        if e.lambda.multiplicity_fin(2 * k + 2) == 0 {
            let mut lam = e.lambda.clone();
            if k >= 1 {
                lam = lam.remove_parts(k, 1);
            }
            if b > 0 {
                lam = lam.remove_parts(k + 1, b).remove_parts(k, b).add_parts(2 * k + 1, b);
            }
            // every part above k+1, the merged ones included, gives up one unit
            let lambda = Partition::new(
                lam.parts().iter().map(|&p| if p > k + 1 { p - 1 } else { p }).collect(),
            );
            CellImage::ToB(n, SylvesterElement { n, k, tau: e.tau.clone(), lambda })
        } else {
            let mut lam = e.lambda.clone();
            if k >= 1 {
                lam = lam.remove_parts(k, 1);
            }
            lam = lam.remove_parts(2 * k + 2, 1);
            if b > 0 {
                lam = lam.remove_parts(k + 1, b).remove_parts(k, b).add_parts(2 * k + 1, b);
            }
            let c = lam.multiplicity_fin(2 * k + 3);
            if c > 0 {
                lam = lam.remove_parts(2 * k + 3, c).add_parts(k + 1, c).add_parts(k + 2, c);
            }
            let out = SylvesterElement { n, k: k + 1, tau: trapezoid_sylvester(k + 1), lambda: lam };
            debug_assert!(self.in_h(n, k + 1, &out));
            CellImage::UpH(out)
        }
    }

    fn weight(&self, e: &SylvesterElement) -> Weight {
        Weight { a_exp: e.n, q_exp: e.tau.weight() + e.lambda.weight() }
    }

    fn marker_weight(&self, _n: usize, _k: usize, v: &usize) -> Weight {
        Weight { a_exp: 0, q_exp: *v }
    }

    fn marker_cell(&self, n: usize, k: usize, v: &usize) -> Option<(usize, usize)> {
        (*v == n).then_some((n, k))
    }

    fn enumerate_b(&self, n: usize, k: usize, max_weight: usize) -> Vec<(usize, SylvesterElement)> {
        if max_weight < n {
            return Vec::new();
        }
        self.enumerate_cell(n, k, max_weight - n).into_iter().map(|p| (n, p)).collect()
    }
}

/// Verifies the identity: the truncated bivariate sum side equals 1, and each
/// enumerated coefficient series `I_n` vanishes for n >= 1 (and is 1 at n = 0).
pub fn sylvester_verify_identity(x_order: usize, q_order: usize) -> VerificationReport {
    let lhs = sylvester_lhs(x_order, q_order);
    let one = AQSeries::one(x_order, q_order);
    let mut cells = Vec::new();
    let mut failures = Vec::new();
    'scan: for d in 0..=x_order {
        for j in 0..=q_order {
            if lhs.row(d).coeff(j) != one.row(d).coeff(j) {
                failures.push(format!(
                    "sum side differs from 1 at x^{d} q^{j}: {}",
                    lhs.row(d).coeff(j)
                ));
                break 'scan;
            }
        }
    }
    let grid = ((x_order + 1) * (q_order + 1)) as u64;
    cells.push(CellRecord { n: None, k: 0, max_weight: Some(q_order), domain_size: grid, failures });
    for n in 0..=x_order {
        let bf = brute_force_f(&SylvesterInstance, n, n, q_order);
        let mut failures = Vec::new();
        for j in 0..=q_order {
            let want = i64::from(n == 0 && j == 0);
            if bf.row(n).coeff(j) != &num_bigint::BigInt::from(want) {
                failures.push(format!(
                    "enumerated I_{n} is not {want} at q^{j}: {}",
                    bf.row(n).coeff(j)
                ));
                break;
            }
        }
        cells.push(CellRecord {
            n: Some(n),
            k: 0,
            max_weight: Some(q_order),
            domain_size: q_order as u64 + 1,
            failures,
        });
    }
    VerificationReport::new(
        "verify",
        "sylvester",
        serde_json::json!({"x_order": x_order, "q_order": q_order}),
        cells,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;
    use crate::telescoping::check_cell;

    fn elem(n: usize, k: usize, lambda: &[usize]) -> SylvesterElement {
        SylvesterElement {
            n,
            k,
            tau: trapezoid_sylvester(k),
            lambda: Partition::new(lambda.to_vec()),
        }
    }

    #[test]
    fn exceptional_predicate() {
        let inst = SylvesterInstance;
        // k = 0 compares against the infinite multiplicity of zero parts
        assert!(!inst.in_h(2, 0, &elem(2, 0, &[3, 2])));
        assert!(inst.in_h(2, 1, &elem(2, 1, &[2, 2])));
        assert!(!inst.in_h(2, 1, &elem(2, 1, &[4, 1])));
    }

    #[test]
    fn phi_shrinks_large_parts_into_b() {
        let inst = SylvesterInstance;
        assert_eq!(
            inst.apply_phi(1, 0, &elem(1, 0, &[4])),
            CellImage::ToB(1, elem(1, 0, &[3]))
        );
        // one 1-part is consumed, one merges with the 2-part into a 3 that
        // immediately shrinks back to a 2
        assert_eq!(
            inst.apply_phi(2, 1, &elem(2, 1, &[2, 1, 1])),
            CellImage::ToB(2, elem(2, 1, &[2]))
        );
    }

    #[test]
    fn phi_grows_the_trapezoid() {
        let inst = SylvesterInstance;
        assert_eq!(inst.apply_phi(1, 0, &elem(1, 0, &[2])), CellImage::UpH(elem(1, 1, &[])));
        // the removed 1- and 4-parts pay for the larger trapezoid
        assert_eq!(inst.apply_phi(2, 1, &elem(2, 1, &[4, 1])), CellImage::UpH(elem(2, 2, &[])));
        // a 3-part decomposes into 1 + 2 on the way up
        assert_eq!(
            inst.apply_phi(2, 0, &elem(2, 0, &[3, 2])),
            CellImage::UpH(elem(2, 1, &[2, 1]))
        );
    }

    #[test]
    fn cells_check_on_small_slices() {
        for n in 1..=5 {
            for k in 0..=n {
                let record = check_cell(&SylvesterInstance, n, k, 12);
                assert!(record.ok(), "n={n} k={k}: {:?}", record.failures);
            }
        }
    }

    #[test]
    fn alternating_sums_collapse() {
        let i0 = brute_force_f(&SylvesterInstance, 0, 0, 12);
        assert_eq!(i0.row(0), &crate::series::QSeries::one(12));
        for n in 1..=4 {
            let bf = brute_force_f(&SylvesterInstance, n, n, 12);
            assert!(bf.row(n).is_zero(), "I_{n} must vanish, got {}", bf.row(n));
        }
    }

    #[test]
    fn verify_report_passes() {
        assert_eq!(sylvester_verify_identity(5, 14).status, Status::Ok);
    }

    #[test]
    fn element_serialization_shape() {
        let e = elem(2, 1, &[4, 1]);
        assert_eq!(
            serde_json::to_value(&e).unwrap(),
            serde_json::json!({"n": 2, "k": 1, "tau": [1, 1], "lambda": [4, 1]})
        );
        let back: SylvesterElement = serde_json::from_value(serde_json::to_value(&e).unwrap()).unwrap();
        assert_eq!(back, e);
    }
}
