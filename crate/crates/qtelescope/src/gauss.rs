//! The telescoping proof of the alternating Gauss sum evaluation
//!
//! ```text
//! sum_{k=0}^{n} (-1)^k / ((q;q)_k (q;q)_{n-k})
//!     = 1/((1-q^2)(1-q^4)...(1-q^n))   for even n,
//!     = 0                              for odd n.
//! ```
//!
//! Cells are pairs `P_{n,k} = {(lambda, mu) : lambda_1 <= k, mu_1 <= n-k}`
//! weighted by `q^{|lambda|+|mu|}`, the B-side is `{0, n, 2n, ...} x P_{n-2,k}`,
//! and the exceptional sets are `H_{n,k} = {(lambda, mu) : m_k(lambda) <
//! m_{n-k}(mu)}`. Telescoping gives `F_n = F_{n-2} / (1 - q^n)`, which iterates
//! down to the stated right side. Multiplying by `(q;q)_n` turns the same
//! identity into the alternating sum of Gaussian binomials.

use serde::{Deserialize, Serialize};

use crate::partitions::{enumerate, Partition, PartitionConstraint};
use crate::report::{CellRecord, VerificationReport};
use crate::series::QSeries;
use crate::telescoping::{CellImage, TelescopingInstance, Weight};

/// A pair `(lambda, mu)` with `lambda_1 <= k` and `mu_1 <= n-k`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaussElement {
    /// Outer index of the cell.
    pub n: usize,
    /// Summation index of the cell.
    pub k: usize,
    /// Partition with parts at most k.
    pub lambda: Partition,
    /// Partition with parts at most n-k.
    pub mu: Partition,
}

impl std::fmt::Debug for GaussElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(n={}, k={}, lambda={:?}, mu={:?})", self.n, self.k, self.lambda, self.mu)
    }
}

/// An element of `{0, n, 2n, ...} x P_{n-2,k}`: a multiple of n plus a pair.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct GaussBElement {
    /// The attached multiple t*n, contributing `q^{t*n}`.
    pub multiple: usize,
    /// The payload pair in `P_{n-2,k}`.
    pub pair: GaussElement,
}

/// The Gauss instance of [`TelescopingInstance`].
#[derive(Clone, Copy, Debug, Default)]
pub struct GaussInstance;

impl GaussInstance {
    /// The weight slice of `B_{n,k}` in its serializable form.
    pub fn b_elements(&self, n: usize, k: usize, max_weight: usize) -> Vec<GaussBElement> {
        self.enumerate_b(n, k, max_weight)
            .into_iter()
            .map(|(t, pair)| GaussBElement { multiple: t * n, pair })
            .collect()
    }
}

impl TelescopingInstance for GaussInstance {
    type Elem = GaussElement;
    /// The factor t of the attached multiple t*n.
    type Marker = usize;

    fn name(&self) -> &'static str {
        "gauss"
    }

    fn k_bound(&self, n: usize, _max_weight: usize) -> usize {
        n
    }

    fn vanish_k(&self, n: usize) -> usize {
        n + 1
    }

    fn enumerate_cell(&self, n: usize, k: usize, max_weight: usize) -> Vec<GaussElement> {
        if k > n {
            return Vec::new();
        }
        let lambda_c = PartitionConstraint { max_part: Some(k), ..Default::default() };
        let mut out = Vec::new();
        for lambda in enumerate(&lambda_c, max_weight) {
            let mu_c = PartitionConstraint { max_part: Some(n - k), ..Default::default() };
            for mu in enumerate(&mu_c, max_weight - lambda.weight()) {
                out.push(GaussElement { n, k, lambda: lambda.clone(), mu });
            }
        }
        out
    }

    fn is_member(&self, n: usize, k: usize, e: &GaussElement) -> bool {
        e.n == n
            && e.k == k
            && k <= n
            && e.lambda.largest() <= k
            && e.mu.largest() <= n - k
    }

    fn in_h(&self, n: usize, k: usize, e: &GaussElement) -> bool {
        // empty by fiat past the last cell
        if k > n {
            return false;
        }
        e.lambda.multiplicity(k) < e.mu.multiplicity(n - k)
    }

    fn apply_phi(&self, n: usize, k: usize, e: &GaussElement) -> CellImage<GaussElement, usize> {
        assert!(n >= 1 && self.is_member(n, k, e));
        if self.in_h(n, k, e) {
            return CellImage::StayH(e.clone());
        }
        // not exceptional, and k = n forces m_k(lambda) < m_0(mu), so n-k >= 1
        let t = e.mu.multiplicity(n - k).finite();
        let mu_next = e.mu.part_or_zero(t);
        if mu_next == n - 1 - k {
            // raise the first t parts of lambda (zero parts pad at k = 0) and
            // lower the first t parts of mu, dropping parts that reach zero
            let mut lam: Vec<usize> = e.lambda.parts().to_vec();
            lam.resize(lam.len().max(t), 0);
            for p in lam.iter_mut().take(t) {
                *p += 1;
            }
            let mut mu: Vec<usize> = e.mu.parts().to_vec();
            for p in mu.iter_mut().take(t) {
                *p -= 1;
            }
            mu.retain(|&p| p > 0);
            CellImage::UpH(GaussElement {
                n,
                k: k + 1,
                lambda: Partition::new(lam),
                mu: Partition::new(mu),
            })
        } else {
            // the first t parts of each partition are maximal; removing them
            // costs t*n and the remainders fit in P_{n-2,k}
            debug_assert!(mu_next + 1 < n - k);
            let lam = Partition::new(e.lambda.parts().iter().skip(t.min(e.lambda.len())).copied().collect());
            let mu = Partition::new(e.mu.parts().iter().skip(t).copied().collect());
            CellImage::ToB(t, GaussElement { n: n - 2, k, lambda: lam, mu })
        }
    }

    fn weight(&self, e: &GaussElement) -> Weight {
        Weight { a_exp: 0, q_exp: e.lambda.weight() + e.mu.weight() }
    }

    fn marker_weight(&self, n: usize, _k: usize, t: &usize) -> Weight {
        Weight { a_exp: 0, q_exp: t * n }
    }

    fn marker_cell(&self, n: usize, k: usize, _t: &usize) -> Option<(usize, usize)> {
        (n >= 2 && k + 2 <= n).then(|| (n - 2, k))
    }

    fn enumerate_b(&self, n: usize, k: usize, max_weight: usize) -> Vec<(usize, GaussElement)> {
        let mut out = Vec::new();
        if n < 2 || k + 2 > n {
            return out;
        }
        for t in 0..=max_weight / n {
            for pair in self.enumerate_cell(n - 2, k, max_weight - t * n) {
                out.push((t, pair));
            }
        }
        out
    }
}

/// The left side `sum_{k=0}^{n} (-1)^k / ((q;q)_k (q;q)_{n-k})` to the given order.
pub fn gauss_sum(n: usize, q_order: usize) -> QSeries {
    let mut sum = QSeries::zero(q_order);
    for k in 0..=n {
        let denom = QSeries::poch(k, q_order).mul(&QSeries::poch(n - k, q_order));
        let term = denom.invert().expect("pochhammer products are invertible");
        sum = if k % 2 == 1 { sum.sub(&term) } else { sum.add(&term) };
    }
    sum
}

/// The right side: `1/((1-q^2)(1-q^4)...(1-q^n))` for even n, 0 for odd n.
pub fn gauss_closed_form(n: usize, q_order: usize) -> QSeries {
    if n % 2 == 1 {
        return QSeries::zero(q_order);
    }
    let mut denom = QSeries::one(q_order);
    for j in (2..=n).step_by(2) {
        denom = denom.sub(&denom.shift(j));
    }
    denom.invert().expect("even product is invertible")
}

/// The alternating Gaussian binomial sum `sum_k (-1)^k [n choose k]_q`, the
/// `(q;q)_n` multiple of [`gauss_sum`].
pub fn gauss_alternating_binomial(n: usize, q_order: usize) -> QSeries {
    QSeries::poch(n, q_order).mul(&gauss_sum(n, q_order))
}

/// Its evaluation `(1-q)(1-q^3)...(1-q^{n-1})` for even n, 0 for odd n.
pub fn gauss_binomial_closed_form(n: usize, q_order: usize) -> QSeries {
    if n % 2 == 1 {
        return QSeries::zero(q_order);
    }
    let mut prod = QSeries::one(q_order);
    for j in (1..n).step_by(2) {
        prod = prod.sub(&prod.shift(j));
    }
    prod
}

fn series_cell(n: usize, q_order: usize, lhs: &QSeries, rhs: &QSeries, what: &str) -> CellRecord {
    let mut failures = Vec::new();
    let cols = q_order.min(lhs.order()).min(rhs.order()) + 1;
    for j in 0..cols {
        if lhs.coeff(j) != rhs.coeff(j) {
            failures.push(format!("{what} differs at q^{j}: {} vs {}", lhs.coeff(j), rhs.coeff(j)));
            break;
        }
    }
    CellRecord { n: Some(n), k: 0, max_weight: Some(q_order), domain_size: cols as u64, failures }
}

/// Compares the alternating sum with its closed form for each n up to n_max,
/// together with the Gaussian-binomial reformulation.
pub fn gauss_verify_identity(n_max: usize, q_order: usize) -> VerificationReport {
    gauss_verify_identity_range(0..=n_max, q_order)
}

/// The same check over an explicit range of n.
pub fn gauss_verify_identity_range(
    ns: std::ops::RangeInclusive<usize>,
    q_order: usize,
) -> VerificationReport {
    let mut cells = Vec::new();
    for n in ns.clone() {
        let mut cell = series_cell(
            n,
            q_order,
            &gauss_sum(n, q_order),
            &gauss_closed_form(n, q_order),
            "alternating sum vs closed form",
        );
        let binom = series_cell(
            n,
            q_order,
            &gauss_alternating_binomial(n, q_order),
            &gauss_binomial_closed_form(n, q_order),
            "alternating binomial sum vs product",
        );
        cell.failures.extend(binom.failures);
        cells.push(cell);
    }
    let options = serde_json::json!({"n_min": ns.start(), "n_max": ns.end(), "q_order": q_order});
    VerificationReport::new("verify", "gauss", options, cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;
    use crate::telescoping::{brute_force_f, check_cell};

    fn elem(n: usize, k: usize, lambda: &[usize], mu: &[usize]) -> GaussElement {
        GaussElement {
            n,
            k,
            lambda: Partition::new(lambda.to_vec()),
            mu: Partition::new(mu.to_vec()),
        }
    }

    #[test]
    fn exceptional_predicate() {
        let inst = GaussInstance;
        // k = 0 compares against the infinite multiplicity of zero parts
        assert!(!inst.in_h(3, 0, &elem(3, 0, &[], &[3, 2])));
        assert!(inst.in_h(2, 1, &elem(2, 1, &[1], &[1, 1])));
        assert!(!inst.in_h(2, 1, &elem(2, 1, &[1, 1], &[1])));
        // k = n compares against m_0(mu), so every element is exceptional
        assert!(inst.in_h(2, 2, &elem(2, 2, &[2, 1], &[])));
    }

    #[test]
    fn phi_moves_between_adjacent_exceptional_sets() {
        let inst = GaussInstance;
        // t = 1, the single 1-part of mu shrinks away, lambda gains a 2
        assert_eq!(
            inst.apply_phi(2, 1, &elem(2, 1, &[1, 1], &[1])),
            CellImage::UpH(elem(2, 2, &[2, 1], &[]))
        );
        // k = 0: zero-padded lambda gains a 1-part, mu loses one from each 2
        assert_eq!(
            inst.apply_phi(2, 0, &elem(2, 0, &[], &[2, 1])),
            CellImage::UpH(elem(2, 1, &[1], &[1, 1]))
        );
        // t = 0 makes the move a relabeling into the next cell
        assert_eq!(
            inst.apply_phi(2, 1, &elem(2, 1, &[1], &[])),
            CellImage::UpH(elem(2, 2, &[1], &[]))
        );
    }

    #[test]
    fn phi_strips_maximal_prefixes_into_b() {
        let inst = GaussInstance;
        // t = 1: one 3-part of mu and one 1-part of lambda peel off, worth n = 4
        let e = elem(4, 1, &[1, 1], &[3, 1]);
        assert_eq!(inst.apply_phi(4, 1, &e), CellImage::ToB(1, elem(2, 1, &[1], &[1])));
        // t = 0 keeps everything
        let e = elem(4, 1, &[1], &[1, 1]);
        assert_eq!(inst.apply_phi(4, 1, &e), CellImage::ToB(0, elem(2, 1, &[1], &[1, 1])));
    }

    #[test]
    fn identity_small_orders() {
        assert!(gauss_sum(1, 20).is_zero());
        assert!(gauss_sum(3, 20).is_zero());
        let rhs2 = QSeries::one(20).sub(&QSeries::one(20).shift(2)).invert().unwrap();
        assert_eq!(gauss_sum(2, 20), rhs2);
        assert_eq!(gauss_sum(4, 20), gauss_closed_form(4, 20));
        let report = gauss_verify_identity(9, 25);
        assert_eq!(report.status, Status::Ok, "{report}");
    }

    #[test]
    fn binomial_reformulation() {
        for n in 0..=10 {
            assert_eq!(
                gauss_alternating_binomial(n, 30),
                gauss_binomial_closed_form(n, 30),
                "n = {n}"
            );
        }
    }

    #[test]
    fn telescoping_recurrence_from_enumeration() {
        // F_n (1 - q^n) = F_{n-2} on the truncation grid
        for n in 2..=6 {
            let f_n = brute_force_f(&GaussInstance, n, 0, 12).row(0).clone();
            let f_m = brute_force_f(&GaussInstance, n - 2, 0, 12).row(0).clone();
            assert_eq!(f_n.sub(&f_n.shift(n)), f_m, "n = {n}");
        }
    }

    #[test]
    fn cells_check_on_small_slices() {
        for n in 1..=5 {
            for k in 0..=n {
                let record = check_cell(&GaussInstance, n, k, 10);
                assert!(record.ok(), "n={n} k={k}: {:?}", record.failures);
            }
        }
    }

    #[test]
    fn element_serialization_shape() {
        let e = elem(4, 1, &[1, 1], &[3, 2]);
        assert_eq!(
            serde_json::to_value(&e).unwrap(),
            serde_json::json!({"n": 4, "k": 1, "lambda": [1, 1], "mu": [3, 2]})
        );
        let b = GaussBElement { multiple: 4, pair: elem(2, 1, &[1], &[2]) };
        let v = serde_json::to_value(&b).unwrap();
        assert_eq!(v["multiple"], 4);
        assert_eq!(v["pair"]["mu"], serde_json::json!([2]));
        let back: GaussBElement = serde_json::from_value(v).unwrap();
        assert_eq!(back, b);
    }
}
