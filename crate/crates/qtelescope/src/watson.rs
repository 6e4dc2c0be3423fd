//! The telescoping proof of Watson's identity
//!
//! ```text
//! sum_{k>=0} (-1)^k (1 - a q^{2k}) a^{2k} q^{k(5k-1)/2} / ((q;q)_k (a q^k;q)_inf)
//!     = sum_{n>=0} a^n q^{n^2} / (q;q)_n.
//! ```
//!
//! Cells are triples `P_{n,k} = {(tau, lambda, mu)}` with `tau` the trapezoid
//! `(k^{2k}, k-1, ..., 1)`, `lambda` having exactly `n-2k` parts, all at least
//! k and none equal to 2k, and `mu_1 <= k`; the weight is
//! `a^n q^{|tau|+|lambda|+|mu|}`. The B-side `{n} x P_{n,k} u {2n-1} x P_{n-1,k}`
//! encodes the recurrence `F_n = q^n F_n + a q^{2n-1} F_{n-1}`, whose solution
//! is the closed form `F_n = a^n q^{n^2}/(q;q)_n`. Setting a = 1 recovers a
//! bilateral pentagonal-type sum over `(q;q)_inf`; a = 1 and a = q give the
//! sum sides of the two Rogers-Ramanujan identities.
//!
//! The map removes `m_k(lambda) + 2` k-parts from mu, converts the k-parts of
//! lambda to 2k-parts (together: `lambda'`, `mu'`), and then branches on the
//! multiplicities of 2k+1, k+1, and 2k+2 *in `lambda'`*. At k = 0 the paper's
//! explicit one-part conventions apply instead: no 1-part strips q from every
//! part, a lone 1-part acts as the (2k+1)-part, anything else moves up.

use serde::{Deserialize, Serialize};

use crate::partitions::{enumerate, trapezoid_watson, Partition, PartitionConstraint};
use crate::report::{CellRecord, VerificationReport};
use crate::series::{schur_bilateral, watson_lhs, watson_rhs, QSeries, rr_product, rr_sum};
use crate::series::AQSeries;
use crate::telescoping::{brute_force_f, CellImage, TelescopingInstance, Weight};

/// A triple `(tau, lambda, mu)` of `P_{n,k}`, weighted `a^n q^{|tau|+|lambda|+|mu|}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WatsonElement {
    /// Row index: the a-exponent, equal to l(lambda) + 2k.
    pub n: usize,
    /// Summation index of the cell.
    pub k: usize,
    /// The trapezoid (k^{2k}, k-1, ..., 1), stored explicitly.
    pub tau: Partition,
    /// Exactly n-2k parts, each at least k, none equal to 2k.
    pub lambda: Partition,
    /// Parts at most k (hence empty at k = 0).
    pub mu: Partition,
}

impl std::fmt::Debug for WatsonElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "(n={}, k={}, tau={:?}, lambda={:?}, mu={:?})",
            self.n, self.k, self.tau, self.lambda, self.mu
        )
    }
}

/// The multiple attached to a B-element and its weight role.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(tag = "type", content = "value", rename_all = "lowercase")]
pub enum WatsonMarker {
    /// Contributes `q^n`; payload stays in `P_{n,k}`.
    Stay(usize),
    /// Contributes `a q^{2n-1}`; payload drops to `P_{n-1,k}`.
    Drop(usize),
}

/// A marked element of `{n} x P_{n,k} u {2n-1} x P_{n-1,k}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct WatsonBElement {
    /// The payload triple.
    #[serde(flatten)]
    pub element: WatsonElement,
    /// The attached multiple.
    pub marker: WatsonMarker,
}

/// The Watson instance of [`TelescopingInstance`].
#[derive(Clone, Copy, Debug, Default)]
pub struct WatsonInstance;

impl WatsonInstance {
    /// The weight slice of `B_{n,k}` in its serializable form.
    pub fn b_elements(&self, n: usize, k: usize, max_weight: usize) -> Vec<WatsonBElement> {
        self.enumerate_b(n, k, max_weight)
            .into_iter()
            .map(|(marker, element)| WatsonBElement { element, marker })
            .collect()
    }
}

impl TelescopingInstance for WatsonInstance {
    type Elem = WatsonElement;
    type Marker = WatsonMarker;

    fn name(&self) -> &'static str {
        "watson"
    }

    fn k_bound(&self, n: usize, _max_weight: usize) -> usize {
        n / 2
    }

    fn vanish_k(&self, n: usize) -> usize {
        n / 2 + 1
    }

    fn enumerate_cell(&self, n: usize, k: usize, max_weight: usize) -> Vec<WatsonElement> {
        if 2 * k > n {
            return Vec::new();
        }
        let tau = trapezoid_watson(k);
        let tw = tau.weight();
        if tw > max_weight {
            return Vec::new();
        }
        let lambda_c = PartitionConstraint {
            min_part: Some(k.max(1)),
            forbidden_part: (k >= 1).then(|| 2 * k),
            exact_length: Some(n - 2 * k),
            ..Default::default()
        };
        let mut out = Vec::new();
        for lambda in enumerate(&lambda_c, max_weight - tw) {
            if k == 0 {
                out.push(WatsonElement { n, k, tau: tau.clone(), lambda, mu: Partition::empty() });
                continue;
            }
            let mu_c = PartitionConstraint { max_part: Some(k), ..Default::default() };
            for mu in enumerate(&mu_c, max_weight - tw - lambda.weight()) {
                out.push(WatsonElement { n, k, tau: tau.clone(), lambda: lambda.clone(), mu });
            }
        }
        out
    }

    fn is_member(&self, n: usize, k: usize, e: &WatsonElement) -> bool {
        e.n == n
            && e.k == k
            && 2 * k <= n
            && e.tau == trapezoid_watson(k)
            && e.lambda.len() == n - 2 * k
            && e.lambda.parts().iter().all(|&p| p >= k)
            && (k == 0 || e.lambda.multiplicity_fin(2 * k) == 0)
            && e.mu.largest() <= k
    }

    fn in_h(&self, _n: usize, k: usize, e: &WatsonElement) -> bool {
        e.lambda.multiplicity(k) + 2 > e.mu.multiplicity(k)
    }

    fn apply_phi(&self, n: usize, k: usize, e: &WatsonElement) -> CellImage<WatsonElement, WatsonMarker> {
        assert!(n >= 1 && self.is_member(n, k, e));
        if self.in_h(n, k, e) {
            return CellImage::StayH(e.clone());
        }
        if k == 0 {
            let m1 = e.lambda.multiplicity_fin(1);
            if m1 == 0 {
                let lambda = e.lambda.decrement_each(1);
                return CellImage::ToB(
                    WatsonMarker::Stay(n),
                    WatsonElement { n, k: 0, tau: Partition::empty(), lambda, mu: Partition::empty() },
                );
            }
            if m1 == 1 && e.lambda.multiplicity_fin(2) == 0 {
                let lambda = e.lambda.remove_parts(1, 1).decrement_each(2);
                return CellImage::ToB(
                    WatsonMarker::Drop(2 * n - 1),
                    WatsonElement { n: n - 1, k: 0, tau: Partition::empty(), lambda, mu: Partition::empty() },
                );
            }
            // the 2-parts all become 1-parts of lambda and of mu; one 1-part
            // plays the (2k+1)-part, a second the (k+1)-part
            let c = e.lambda.multiplicity_fin(2);
            let lambda = e.lambda.convert_parts(2, 1).remove_parts(1, 2);
            let mu = Partition::empty().add_parts(1, c);
            let out = WatsonElement { n, k: 1, tau: trapezoid_watson(1), lambda, mu };
            debug_assert!(self.in_h(n, 1, &out));
            return CellImage::UpH(out);
        }
        let mu1 = e.mu.remove_parts(k, e.lambda.multiplicity_fin(k) + 2);
        let lam1 = e.lambda.convert_parts(k, 2 * k);
        let r = lam1.multiplicity_fin(2 * k + 1);
        let s = lam1.multiplicity_fin(k + 1) + lam1.multiplicity_fin(2 * k + 2);
        if r == 0 {
            let lambda = lam1.decrement_each(1);
            return CellImage::ToB(
                WatsonMarker::Stay(n),
                WatsonElement { n, k, tau: e.tau.clone(), lambda, mu: mu1 },
            );
        }
        if s == 0 {
            let lambda = lam1.remove_parts(2 * k + 1, 1).decrement_each(2);
            return CellImage::ToB(
                WatsonMarker::Drop(2 * n - 1),
                WatsonElement { n: n - 1, k, tau: e.tau.clone(), lambda, mu: mu1 },
            );
        }
        let c = lam1.multiplicity_fin(2 * k + 2);
        let lambda = lam1
            .convert_parts(2 * k + 2, k + 1)
            .remove_parts(k + 1, 1)
            .remove_parts(2 * k + 1, 1);
        let mu = mu1.add_parts(k + 1, c);
        let out = WatsonElement { n, k: k + 1, tau: trapezoid_watson(k + 1), lambda, mu };
        debug_assert!(self.in_h(n, k + 1, &out));
        CellImage::UpH(out)
    }

    fn weight(&self, e: &WatsonElement) -> Weight {
        Weight { a_exp: e.n, q_exp: e.tau.weight() + e.lambda.weight() + e.mu.weight() }
    }

    fn marker_weight(&self, _n: usize, _k: usize, m: &WatsonMarker) -> Weight {
        match *m {
            WatsonMarker::Stay(v) => Weight { a_exp: 0, q_exp: v },
            WatsonMarker::Drop(v) => Weight { a_exp: 1, q_exp: v },
        }
    }

    fn marker_cell(&self, n: usize, k: usize, m: &WatsonMarker) -> Option<(usize, usize)> {
        match *m {
            WatsonMarker::Stay(v) => (v == n).then_some((n, k)),
            WatsonMarker::Drop(v) => (n >= 1 && v == 2 * n - 1).then(|| (n - 1, k)),
        }
    }

    fn enumerate_b(&self, n: usize, k: usize, max_weight: usize) -> Vec<(WatsonMarker, WatsonElement)> {
        let mut out = Vec::new();
        if max_weight >= n {
            for p in self.enumerate_cell(n, k, max_weight - n) {
                out.push((WatsonMarker::Stay(n), p));
            }
        }
        if n >= 1 && max_weight >= 2 * n - 1 {
            for p in self.enumerate_cell(n - 1, k, max_weight - (2 * n - 1)) {
                out.push((WatsonMarker::Drop(2 * n - 1), p));
            }
        }
        out
    }
}

/// The closed form `a^n q^{n^2} / (q;q)_n` on the truncation grid.
pub fn watson_closed_form(n: usize, a_order: usize, q_order: usize) -> AQSeries {
    let mut rows = vec![QSeries::zero(q_order); a_order + 1];
    if n <= a_order && n * n <= q_order {
        let inv = QSeries::poch(n, q_order).invert().expect("pochhammer is invertible");
        rows[n] = inv.shift(n * n);
    }
    AQSeries::new(rows)
}

fn grid_cell(n: Option<usize>, q_order: usize, lhs: &AQSeries, rhs: &AQSeries, what: &str) -> CellRecord {
    let mut failures = Vec::new();
    let (rows, cols) = (lhs.a_order().min(rhs.a_order()) + 1, lhs.q_order().min(rhs.q_order()) + 1);
    'scan: for d in 0..rows {
        for j in 0..cols {
            if lhs.row(d).coeff(j) != rhs.row(d).coeff(j) {
                failures.push(format!(
                    "{what} differs at a^{d} q^{j}: {} vs {}",
                    lhs.row(d).coeff(j),
                    rhs.row(d).coeff(j)
                ));
                break 'scan;
            }
        }
    }
    CellRecord { n, k: 0, max_weight: Some(q_order), domain_size: (rows * cols) as u64, failures }
}

fn q_cell(n: Option<usize>, q_order: usize, lhs: &QSeries, rhs: &QSeries, what: &str) -> CellRecord {
    let mut failures = Vec::new();
    let cols = lhs.order().min(rhs.order()) + 1;
    for j in 0..cols {
        if lhs.coeff(j) != rhs.coeff(j) {
            failures.push(format!("{what} differs at q^{j}: {} vs {}", lhs.coeff(j), rhs.coeff(j)));
            break;
        }
    }
    CellRecord { n, k: 0, max_weight: Some(q_order), domain_size: cols as u64, failures }
}

/// Verifies the identity on the grid: the alternating sum equals the q-series
/// right side, and both match the row-by-row partition enumeration.
pub fn watson_verify_identity(a_order: usize, q_order: usize) -> VerificationReport {
    let lhs = watson_lhs(a_order, q_order);
    let rhs = watson_rhs(a_order, q_order);
    let mut cells = vec![grid_cell(None, q_order, &lhs, &rhs, "sum side vs series side")];
    for n in 0..=a_order {
        let bf = brute_force_f(&WatsonInstance, n, a_order, q_order);
        let mut cell = q_cell(
            Some(n),
            q_order,
            bf.row(n),
            rhs.row(n),
            "enumerated F_n vs series row",
        );
        for d in (0..=a_order).filter(|&d| d != n) {
            if !bf.row(d).is_zero() {
                cell.failures.push(format!("enumerated F_{n} has a spurious a^{d} row"));
                break;
            }
        }
        cells.push(cell);
    }
    VerificationReport::new(
        "verify",
        "watson",
        serde_json::json!({"a_order": a_order, "q_order": q_order}),
        cells,
    )
}

/// Verifies `F_n = a^n q^{n^2} / (q;q)_n` for each n by enumeration.
pub fn watson_verify_closed_form(n_max: usize, q_order: usize) -> VerificationReport {
    let mut cells = Vec::new();
    for n in 0..=n_max {
        let bf = brute_force_f(&WatsonInstance, n, n, q_order);
        let cf = watson_closed_form(n, n, q_order);
        cells.push(grid_cell(Some(n), q_order, &bf, &cf, "enumerated F_n vs closed form"));
    }
    VerificationReport::new(
        "verify",
        "watson-closed-form",
        serde_json::json!({"n_max": n_max, "q_order": q_order}),
        cells,
    )
}

/// Verifies the recurrence `F_n = q^n F_n + a q^{2n-1} F_{n-1}` by enumeration.
pub fn watson_verify_recurrence(n_max: usize, q_order: usize) -> VerificationReport {
    let mut cells = Vec::new();
    for n in 1..=n_max {
        let f_n = brute_force_f(&WatsonInstance, n, n, q_order);
        let f_m = brute_force_f(&WatsonInstance, n - 1, n, q_order);
        let rhs = f_n.shift(0, n).add(&f_m.shift(1, 2 * n - 1));
        cells.push(grid_cell(Some(n), q_order, &f_n, &rhs, "recurrence"));
    }
    VerificationReport::new(
        "verify",
        "watson-recurrence",
        serde_json::json!({"n_max": n_max, "q_order": q_order}),
        cells,
    )
}

/// Verifies the a = 1 reduction: the specialized sum side times `(q;q)_inf`
/// equals the bilateral pentagonal-type series.
pub fn watson_verify_schur(q_order: usize) -> VerificationReport {
    // rows past isqrt(q_order) start at q^{(a_order+1)^2} > q_order, so the
    // specialization is exact on this grid
    let a_order = q_order.isqrt();
    let lhs = watson_lhs(a_order, q_order).specialize_a_one();
    let product = lhs.mul(&QSeries::poch_inf(q_order));
    let cells = vec![q_cell(None, q_order, &product, &schur_bilateral(q_order), "bilateral form")];
    VerificationReport::new("verify", "schur", serde_json::json!({"q_order": q_order}), cells)
}

/// Verifies a Rogers-Ramanujan companion (1 or 2): the specialization of the
/// series side matches the gap-condition sum, which matches the standard
/// product form.
pub fn watson_verify_rr(which: u8, q_order: usize) -> VerificationReport {
    let a_order = q_order.isqrt();
    let rhs = watson_rhs(a_order, q_order);
    let specialized = match which {
        1 => rhs.specialize_a_one(),
        2 => {
            // a = q shifts row n by q^n
            let mut sum = QSeries::zero(q_order);
            for d in 0..=a_order {
                sum = sum.add(&rhs.row(d).shift(d));
            }
            sum
        }
        _ => panic!("the identities are numbered 1 and 2"),
    };
    let sum = rr_sum(which, q_order);
    let mut product_cell =
        q_cell(None, q_order, &sum, &rr_product(which, q_order), "sum form vs product form");
    product_cell.k = 1;
    let cells = vec![
        q_cell(None, q_order, &specialized, &sum, "specialized series vs sum form"),
        product_cell,
    ];
    VerificationReport::new(
        "verify",
        if which == 1 { "rr1" } else { "rr2" },
        serde_json::json!({"q_order": q_order, "product_form": "standard"}),
        cells,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;
    use crate::telescoping::check_cell;

    fn elem(n: usize, k: usize, lambda: &[usize], mu: &[usize]) -> WatsonElement {
        WatsonElement {
            n,
            k,
            tau: trapezoid_watson(k),
            lambda: Partition::new(lambda.to_vec()),
            mu: Partition::new(mu.to_vec()),
        }
    }

    #[test]
    fn exceptional_predicate() {
        let inst = WatsonInstance;
        // k = 0: both multiplicities are infinite and infinity+2 > infinity fails
        assert!(!inst.in_h(3, 0, &elem(3, 0, &[5, 3, 3], &[])));
        assert!(inst.in_h(4, 2, &elem(4, 2, &[], &[2])));
        assert!(!inst.in_h(4, 1, &elem(4, 1, &[4, 3], &[1, 1])));
    }

    #[test]
    fn phi_keeps_q_when_no_minimal_parts() {
        let inst = WatsonInstance;
        // no 1-part in lambda', so every part gives up one unit, worth q^n
        assert_eq!(
            inst.apply_phi(3, 1, &elem(3, 1, &[4], &[1, 1])),
            CellImage::ToB(WatsonMarker::Stay(3), elem(3, 1, &[3], &[]))
        );
        assert_eq!(
            inst.apply_phi(2, 0, &elem(2, 0, &[3, 2], &[])),
            CellImage::ToB(WatsonMarker::Stay(2), elem(2, 0, &[2, 1], &[]))
        );
    }

    #[test]
    fn phi_drops_a_row_on_a_lone_odd_part() {
        let inst = WatsonInstance;
        assert_eq!(
            inst.apply_phi(3, 1, &elem(3, 1, &[3], &[1, 1])),
            CellImage::ToB(WatsonMarker::Drop(5), elem(2, 1, &[], &[]))
        );
        assert_eq!(
            inst.apply_phi(1, 0, &elem(1, 0, &[1], &[])),
            CellImage::ToB(WatsonMarker::Drop(1), elem(0, 0, &[], &[]))
        );
    }

    #[test]
    fn phi_climbs_into_the_next_exceptional_set() {
        let inst = WatsonInstance;
        assert_eq!(
            inst.apply_phi(4, 1, &elem(4, 1, &[4, 3], &[1, 1])),
            CellImage::UpH(elem(4, 2, &[], &[2]))
        );
        assert_eq!(
            inst.apply_phi(2, 0, &elem(2, 0, &[2, 1], &[])),
            CellImage::UpH(elem(2, 1, &[], &[1]))
        );
    }

    #[test]
    fn weights_track_markers() {
        let inst = WatsonInstance;
        let e = elem(3, 1, &[3], &[1, 1]);
        assert_eq!(inst.weight(&e), Weight { a_exp: 3, q_exp: 7 });
        assert_eq!(
            inst.marker_weight(3, 1, &WatsonMarker::Drop(5)),
            Weight { a_exp: 1, q_exp: 5 }
        );
        assert_eq!(inst.marker_weight(3, 1, &WatsonMarker::Stay(3)), Weight { a_exp: 0, q_exp: 3 });
    }

    #[test]
    fn cells_check_on_small_slices() {
        for n in 1..=5 {
            for k in 0..=n / 2 {
                let record = check_cell(&WatsonInstance, n, k, 11);
                assert!(record.ok(), "n={n} k={k}: {:?}", record.failures);
            }
        }
    }

    #[test]
    fn enumerated_f_matches_closed_form() {
        for n in 0..=4 {
            let bf = brute_force_f(&WatsonInstance, n, n, 14);
            let cf = watson_closed_form(n, n, 14);
            for d in 0..=n {
                assert_eq!(bf.row(d), cf.row(d), "n = {n}, row {d}");
            }
        }
    }

    #[test]
    fn verify_reports_pass() {
        assert_eq!(watson_verify_identity(5, 12).status, Status::Ok);
        assert_eq!(watson_verify_closed_form(4, 12).status, Status::Ok);
        assert_eq!(watson_verify_recurrence(4, 12).status, Status::Ok);
        assert_eq!(watson_verify_schur(18).status, Status::Ok);
        assert_eq!(watson_verify_rr(1, 18).status, Status::Ok);
        assert_eq!(watson_verify_rr(2, 18).status, Status::Ok);
    }

    #[test]
    fn element_serialization_shape() {
        let e = elem(3, 1, &[3], &[1, 1]);
        assert_eq!(
            serde_json::to_value(&e).unwrap(),
            serde_json::json!({"n": 3, "k": 1, "tau": [1, 1], "lambda": [3], "mu": [1, 1]})
        );
        let b = WatsonBElement { element: elem(2, 1, &[], &[]), marker: WatsonMarker::Drop(5) };
        let v = serde_json::to_value(&b).unwrap();
        assert_eq!(v["marker"], serde_json::json!({"type": "drop", "value": 5}));
        assert_eq!(v["tau"], serde_json::json!([1, 1]));
        let back: WatsonBElement = serde_json::from_value(v).unwrap();
        assert_eq!(back, b);
    }
}
