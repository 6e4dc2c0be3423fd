//! The generic cell-by-cell checker for combinatorial telescoping.
//!
//! A telescoping proof presents, for every cell (n, k), a map
//!
//! ```text
//! phi_{n,k} : A_{n,k} -> B_{n,k}  u  H_{n,k}  u  H_{n,k+1}
//! ```
//!
//! that is a weight-preserving bijection onto the disjoint union, with
//! `H_{n,0}` empty and `H_{n,k}` vanishing for large k. Generating-function
//! consequence: `f(k) = g(k) + h(k) + h(k+1)`, so the alternating sums of f and
//! g agree. The checker verifies all of this on finite weight slices, which is
//! exact because phi preserves weight: a weight-S slice can only map into the
//! weight-S slice.
//!
//! [`TelescopingInstance`] is what a concrete proof implements; [`check_cell`],
//! [`check_telescoping`], [`build_involution`], and [`global_bijection_check`]
//! are the machine checks, and [`brute_force_f`] turns enumeration into the
//! generating function the series side must reproduce.

use std::collections::{HashMap, HashSet};
use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_traits::One;

use crate::report::CellRecord;
use crate::series::{AQSeries, QSeries};

/// Exponent pair of one element: its monomial is `a^{a_exp} q^{q_exp}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Weight {
    /// Exponent of a (of x for the Sylvester family).
    pub a_exp: usize,
    /// Exponent of q.
    pub q_exp: usize,
}

impl Weight {
    /// Componentwise sum, for composing a marker with its payload.
    pub fn plus(self, rhs: Weight) -> Weight {
        Weight { a_exp: self.a_exp + rhs.a_exp, q_exp: self.q_exp + rhs.q_exp }
    }
}

/// Where one element lands under `phi_{n,k}`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum CellImage<E, M> {
    /// Into `B_{n,k}`, as a marker plus a payload element.
    ToB(M, E),
    /// Into `H_{n,k}` (the element itself, kept by the exceptional set).
    StayH(E),
    /// Into `H_{n,k+1}`.
    UpH(E),
}

/// One telescoping proof: cells, exceptional sets, the map, and weights.
///
/// `enumerate_cell` must list the weight slice of `A_{n,k}` exactly once each,
/// and must return an empty list for every out-of-range cell, so the checker
/// can probe neighbouring and vanishing cells freely.
pub trait TelescopingInstance {
    /// Elements of the cells `A_{n,k}`.
    type Elem: Clone + Eq + Hash + Debug;
    /// The extra label carried by elements of `B_{n,k}`.
    type Marker: Clone + Eq + Hash + Debug;

    /// Short name used in reports.
    fn name(&self) -> &'static str;

    /// Largest k whose cell `A_{n,k}` can meet the weight slice.
    fn k_bound(&self, n: usize, max_weight: usize) -> usize;

    /// Smallest k0 with `A_{n,k}` (hence `H_{n,k}`) empty for every k >= k0.
    fn vanish_k(&self, n: usize) -> usize;

    /// All elements of `A_{n,k}` with q-weight at most `max_weight`.
    fn enumerate_cell(&self, n: usize, k: usize, max_weight: usize) -> Vec<Self::Elem>;

    /// Membership predicate for `A_{n,k}`.
    fn is_member(&self, n: usize, k: usize, e: &Self::Elem) -> bool;

    /// Membership predicate for the exceptional set `H_{n,k}`.
    fn in_h(&self, n: usize, k: usize, e: &Self::Elem) -> bool;

    /// The map `phi_{n,k}`.
    fn apply_phi(&self, n: usize, k: usize, e: &Self::Elem) -> CellImage<Self::Elem, Self::Marker>;

    /// Exponents of the element's weight monomial.
    fn weight(&self, e: &Self::Elem) -> Weight;

    /// Exponents contributed by a `B_{n,k}` marker on top of its payload.
    fn marker_weight(&self, n: usize, k: usize, m: &Self::Marker) -> Weight;

    /// The cell the payload of a `B_{n,k}` element lives in, `None` when the
    /// marker admits no valid payload cell.
    fn marker_cell(&self, n: usize, k: usize, m: &Self::Marker) -> Option<(usize, usize)>;

    /// All elements of `B_{n,k}` with total q-weight at most `max_weight`.
    fn enumerate_b(&self, n: usize, k: usize, max_weight: usize) -> Vec<(Self::Marker, Self::Elem)>;
}

const MAX_FAILURES_PER_CELL: usize = 8;

fn push_failure(failures: &mut Vec<String>, overflow: &mut usize, msg: String) {
    if failures.len() < MAX_FAILURES_PER_CELL {
        failures.push(msg);
    } else {
        *overflow += 1;
    }
}

fn seal_failures(failures: &mut Vec<String>, overflow: usize) {
    if overflow > 0 {
        failures.push(format!("... and {overflow} more failures"));
    }
}

/// Weight of a full image (marker plus payload for `ToB`).
fn image_weight<I: TelescopingInstance>(
    inst: &I,
    n: usize,
    k: usize,
    img: &CellImage<I::Elem, I::Marker>,
) -> Weight {
    match img {
        CellImage::ToB(m, p) => inst.marker_weight(n, k, m).plus(inst.weight(p)),
        CellImage::StayH(p) | CellImage::UpH(p) => inst.weight(p),
    }
}

/// Checks one cell exhaustively on a weight slice: every image lies in the
/// declared codomain piece, weights are preserved, distinct elements have
/// distinct images, and every codomain element of weight at most `max_weight`
/// is hit. The last check is complete because a weight-preserving map cannot
/// reach a slice element from outside the slice.
pub fn check_cell<I: TelescopingInstance>(
    inst: &I,
    n: usize,
    k: usize,
    max_weight: usize,
) -> CellRecord {
    let domain = inst.enumerate_cell(n, k, max_weight);
    let mut failures = Vec::new();
    let mut overflow = 0usize;

    let mut expected: HashSet<CellImage<I::Elem, I::Marker>> = HashSet::new();
    for (m, p) in inst.enumerate_b(n, k, max_weight) {
        expected.insert(CellImage::ToB(m, p));
    }
    for e in &domain {
        if inst.in_h(n, k, e) {
            expected.insert(CellImage::StayH(e.clone()));
        }
    }
    for e in inst.enumerate_cell(n, k + 1, max_weight) {
        if inst.in_h(n, k + 1, &e) {
            expected.insert(CellImage::UpH(e));
        }
    }

    let mut images: HashSet<CellImage<I::Elem, I::Marker>> = HashSet::with_capacity(domain.len());
    for e in &domain {
        let img = inst.apply_phi(n, k, e);
        let codomain_ok = match &img {
            CellImage::ToB(m, p) => match inst.marker_cell(n, k, m) {
                Some((pn, pk)) => inst.is_member(pn, pk, p),
                None => false,
            },
            CellImage::StayH(p) => inst.is_member(n, k, p) && inst.in_h(n, k, p),
            CellImage::UpH(p) => inst.is_member(n, k + 1, p) && inst.in_h(n, k + 1, p),
        };
        if !codomain_ok {
            push_failure(&mut failures, &mut overflow, format!("codomain: {e:?} -> {img:?}"));
            continue;
        }
        let (we, wi) = (inst.weight(e), image_weight(inst, n, k, &img));
        if we != wi {
            push_failure(
                &mut failures,
                &mut overflow,
                format!("weight: {e:?} ({we:?}) -> {img:?} ({wi:?})"),
            );
            continue;
        }
        if !expected.contains(&img) {
            push_failure(
                &mut failures,
                &mut overflow,
                format!("image not in enumerated codomain slice: {e:?} -> {img:?}"),
            );
            continue;
        }
        if !images.insert(img.clone()) {
            push_failure(&mut failures, &mut overflow, format!("injectivity: duplicate image {img:?}"));
        }
    }
    for missed in expected.difference(&images) {
        push_failure(&mut failures, &mut overflow, format!("surjectivity: {missed:?} not hit"));
    }
    seal_failures(&mut failures, overflow);

    CellRecord {
        n: Some(n),
        k,
        max_weight: Some(max_weight),
        domain_size: domain.len() as u64,
        failures,
    }
}

/// Builds the generating function of a list of elements on the truncation grid.
/// Contributions outside the grid fall away, matching series truncation.
pub fn cell_series<I: TelescopingInstance>(
    inst: &I,
    elems: &[I::Elem],
    a_order: usize,
    q_order: usize,
) -> AQSeries {
    let mut rows = vec![vec![BigInt::ZERO; q_order + 1]; a_order + 1];
    for e in elems {
        let w = inst.weight(e);
        if w.a_exp <= a_order && w.q_exp <= q_order {
            rows[w.a_exp][w.q_exp] += BigInt::one();
        }
    }
    AQSeries::new(rows.into_iter().map(QSeries::new).collect())
}

fn b_series<I: TelescopingInstance>(
    inst: &I,
    n: usize,
    k: usize,
    elems: &[(I::Marker, I::Elem)],
    a_order: usize,
    q_order: usize,
) -> AQSeries {
    let mut rows = vec![vec![BigInt::ZERO; q_order + 1]; a_order + 1];
    for (m, p) in elems {
        let w = inst.marker_weight(n, k, m).plus(inst.weight(p));
        if w.a_exp <= a_order && w.q_exp <= q_order {
            rows[w.a_exp][w.q_exp] += BigInt::one();
        }
    }
    AQSeries::new(rows.into_iter().map(QSeries::new).collect())
}

fn first_mismatch(lhs: &AQSeries, rhs: &AQSeries) -> Option<(usize, usize, BigInt, BigInt)> {
    for d in 0..=lhs.a_order().min(rhs.a_order()) {
        for j in 0..=lhs.q_order().min(rhs.q_order()) {
            let (a, b) = (lhs.row(d).coeff(j), rhs.row(d).coeff(j));
            if a != b {
                return Some((d, j, a.clone(), b.clone()));
            }
        }
    }
    None
}

/// Verifies the per-k relation `f(k) = g(k) + h(k) + h(k+1)` between the
/// generating functions of `A_{n,k}`, `B_{n,k}`, `H_{n,k}`, `H_{n,k+1}`,
/// computed by brute-force enumeration to q-order N, together with the
/// boundary facts: `H_{n,0}` is empty and cells vanish past the bound.
pub fn check_telescoping<I: TelescopingInstance>(
    inst: &I,
    n: usize,
    a_order: usize,
    q_order: usize,
) -> Vec<CellRecord> {
    let mut records = Vec::new();
    let kb = inst.k_bound(n, q_order);
    for k in 0..=kb {
        let domain = inst.enumerate_cell(n, k, q_order);
        let mut failures = Vec::new();
        let f = cell_series(inst, &domain, a_order, q_order);
        let b = inst.enumerate_b(n, k, q_order);
        let g = b_series(inst, n, k, &b, a_order, q_order);
        let h_here: Vec<I::Elem> = domain.iter().filter(|e| inst.in_h(n, k, e)).cloned().collect();
        let h_up: Vec<I::Elem> = inst
            .enumerate_cell(n, k + 1, q_order)
            .into_iter()
            .filter(|e| inst.in_h(n, k + 1, e))
            .collect();
        if k == 0 && !h_here.is_empty() {
            failures.push(format!("H at k=0 must be empty, found {:?}", h_here[0]));
        }
        let rhs = g
            .add(&cell_series(inst, &h_here, a_order, q_order))
            .add(&cell_series(inst, &h_up, a_order, q_order));
        if let Some((d, j, got, want)) = first_mismatch(&f, &rhs) {
            failures.push(format!(
                "f(k) != g(k) + h(k) + h(k+1) at a^{d} q^{j}: f has {got}, sum has {want}"
            ));
        }
        records.push(CellRecord {
            n: Some(n),
            k,
            max_weight: Some(q_order),
            domain_size: domain.len() as u64,
            failures,
        });
    }
    // beyond the structural bound whole cells are empty, so the h-column ends
    let k0 = inst.vanish_k(n);
    for k in k0..k0 + 2 {
        let stragglers = inst.enumerate_cell(n, k, q_order);
        let failures = if stragglers.is_empty() {
            vec![]
        } else {
            vec![format!("cell must be empty past the vanishing bound, found {:?}", stragglers[0])]
        };
        records.push(CellRecord {
            n: Some(n),
            k,
            max_weight: Some(q_order),
            domain_size: stragglers.len() as u64,
            failures,
        });
    }
    records
}

/// The alternating sum `F_n = sum_k (-1)^k gf(A_{n,k})` by brute-force
/// enumeration, exact on the truncation grid.
pub fn brute_force_f<I: TelescopingInstance>(
    inst: &I,
    n: usize,
    a_order: usize,
    q_order: usize,
) -> AQSeries {
    let mut sum = AQSeries::zero(a_order, q_order);
    for k in 0..=inst.k_bound(n, q_order) {
        let f = cell_series(inst, &inst.enumerate_cell(n, k, q_order), a_order, q_order);
        sum = if k % 2 == 1 { sum.sub(&f) } else { sum.add(&f) };
    }
    sum
}

/// The sign-reversing involution assembled from phi: pairs (k, alpha) with
/// `phi_k(alpha) = UpH(beta)` against (k+1, beta), which phi keeps in
/// `H_{n,k+1}`.
pub struct InvolutionTable<E> {
    /// The a-exponent slice the table covers.
    pub n: usize,
    /// Matched pairs ((k, alpha), (k+1, beta)).
    pub pairs: Vec<((usize, E), (usize, E))>,
}

/// Builds the involution on a weight slice and checks it: every exceptional
/// element is paired across adjacent k (a missing partner is reported as a
/// missing preimage), pairing is bijective, weights are preserved, the pairing
/// has no fixed point, flips the parity of k, and applying it twice is the
/// identity.
pub fn build_involution<I: TelescopingInstance>(
    inst: &I,
    n: usize,
    max_weight: usize,
) -> (InvolutionTable<I::Elem>, Vec<CellRecord>) {
    let kb = inst.k_bound(n, max_weight);
    let mut stay: Vec<Vec<I::Elem>> = vec![Vec::new(); kb + 2];
    let mut up: Vec<Vec<(I::Elem, I::Elem)>> = vec![Vec::new(); kb + 2];
    let mut records = Vec::new();
    for k in 0..=kb {
        let domain = inst.enumerate_cell(n, k, max_weight);
        let mut tob = 0usize;
        for e in &domain {
            match inst.apply_phi(n, k, e) {
                CellImage::ToB(..) => tob += 1,
                CellImage::StayH(p) => stay[k].push(p),
                CellImage::UpH(p) => up[k].push((e.clone(), p)),
            }
        }
        let mut failures = Vec::new();
        // the exceptional preimages and the B-preimages partition the cell
        if stay[k].len() + up[k].len() + tob != domain.len() {
            failures.push("cell does not split into B-, H-, and H'-preimages".to_string());
        }
        records.push(CellRecord {
            n: Some(n),
            k,
            max_weight: Some(max_weight),
            domain_size: domain.len() as u64,
            failures,
        });
    }

    let mut pairs = Vec::new();
    let mut psi: HashMap<(usize, I::Elem), (usize, I::Elem)> = HashMap::new();
    for k in 0..=kb {
        let record = &mut records[k];
        let mut overflow = 0usize;
        if k == 0 && !stay[0].is_empty() {
            record.failures.push(format!(
                "exceptional set at k=0 must be empty, found {:?}",
                stay[0][0]
            ));
        }
        let mut unmatched: HashSet<I::Elem> = stay[k + 1].iter().cloned().collect();
        for (src, payload) in &up[k] {
            if !unmatched.remove(payload) {
                let msg = if stay[k + 1].contains(payload) {
                    format!("two sources map up to {payload:?}")
                } else {
                    format!("up-image {payload:?} is not an exceptional element of the next cell")
                };
                push_failure(&mut record.failures, &mut overflow, msg);
                continue;
            }
            if inst.weight(src) != inst.weight(payload) {
                push_failure(
                    &mut record.failures,
                    &mut overflow,
                    format!("pair changes weight: {src:?} <-> {payload:?}"),
                );
                continue;
            }
            // parity flips because the partners sit at k and k+1; for the same
            // reason the pairing cannot have a fixed point
            assert_ne!((k, src), (k + 1, payload));
            psi.insert((k, src.clone()), (k + 1, payload.clone()));
            psi.insert((k + 1, payload.clone()), (k, src.clone()));
            pairs.push(((k, src.clone()), (k + 1, payload.clone())));
        }
        for leftover in unmatched {
            push_failure(
                &mut record.failures,
                &mut overflow,
                format!("missing preimage: {:?} in H at k={} is not reached from k={}", leftover, k + 1, k),
            );
        }
        seal_failures(&mut record.failures, overflow);
    }
    // applying the pairing twice returns every element to itself
    for (x, y) in &psi {
        match psi.get(y) {
            Some(back) if back == x => {}
            _ => {
                records.last_mut().expect("at least one cell").failures.push(format!(
                    "pairing is not an involution at {x:?}"
                ));
            }
        }
    }
    (InvolutionTable { n, pairs }, records)
}

/// Checks that phi restricted to the complement of the exceptional preimages
/// is a weight-preserving bijection onto the slice of `B = u_k B_{n,k}`.
pub fn global_bijection_check<I: TelescopingInstance>(
    inst: &I,
    n: usize,
    max_weight: usize,
) -> Vec<CellRecord> {
    let kb = inst.k_bound(n, max_weight);
    let mut records = Vec::new();
    let mut images: HashSet<(usize, I::Marker, I::Elem)> = HashSet::new();
    let mut expected: HashSet<(usize, I::Marker, I::Elem)> = HashSet::new();
    for k in 0..=kb {
        for (m, p) in inst.enumerate_b(n, k, max_weight) {
            expected.insert((k, m, p));
        }
    }
    for k in 0..=kb {
        let domain = inst.enumerate_cell(n, k, max_weight);
        let mut failures = Vec::new();
        let mut overflow = 0usize;
        let mut sources = 0u64;
        for e in &domain {
            let img = inst.apply_phi(n, k, e);
            if let CellImage::ToB(m, p) = img {
                sources += 1;
                let w = inst.marker_weight(n, k, &m).plus(inst.weight(&p));
                if w != inst.weight(e) {
                    push_failure(
                        &mut failures,
                        &mut overflow,
                        format!("weight: {e:?} -> ({m:?}, {p:?})"),
                    );
                    continue;
                }
                if !expected.contains(&(k, m.clone(), p.clone())) {
                    push_failure(
                        &mut failures,
                        &mut overflow,
                        format!("image outside B slice: {e:?} -> ({m:?}, {p:?})"),
                    );
                    continue;
                }
                if !images.insert((k, m.clone(), p.clone())) {
                    push_failure(
                        &mut failures,
                        &mut overflow,
                        format!("two sources share the B-image ({m:?}, {p:?})"),
                    );
                }
            }
        }
        seal_failures(&mut failures, overflow);
        records.push(CellRecord {
            n: Some(n),
            k,
            max_weight: Some(max_weight),
            domain_size: sources,
            failures,
        });
    }
    let mut missed: Vec<_> = expected.difference(&images).collect();
    missed.sort_by_key(|(k, _, _)| *k);
    for (k, m, p) in missed.into_iter().take(MAX_FAILURES_PER_CELL) {
        records[*k]
            .failures
            .push(format!("B-element not hit: ({m:?}, {p:?})"));
    }
    records
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::{GaussElement, GaussInstance};

    #[derive(Clone, Copy, PartialEq, Eq)]
    enum Defect {
        /// Every element claims to stay exceptional.
        CollapseToStay,
        /// Markers report one extra unit of q-weight.
        HeavyMarker,
        /// Images bound for the next exceptional set are kept in this one.
        RedirectUp,
    }

    /// The Gauss proof with one deliberate defect, to show the checker rejects
    /// a map that is not what it claims to be.
    struct Broken(Defect);

    impl TelescopingInstance for Broken {
        type Elem = GaussElement;
        type Marker = usize;

        fn name(&self) -> &'static str {
            "broken"
        }
        fn k_bound(&self, n: usize, max_weight: usize) -> usize {
            GaussInstance.k_bound(n, max_weight)
        }
        fn vanish_k(&self, n: usize) -> usize {
            GaussInstance.vanish_k(n)
        }
        fn enumerate_cell(&self, n: usize, k: usize, max_weight: usize) -> Vec<GaussElement> {
            GaussInstance.enumerate_cell(n, k, max_weight)
        }
        fn is_member(&self, n: usize, k: usize, e: &GaussElement) -> bool {
            GaussInstance.is_member(n, k, e)
        }
        fn in_h(&self, n: usize, k: usize, e: &GaussElement) -> bool {
            GaussInstance.in_h(n, k, e)
        }
        fn apply_phi(&self, n: usize, k: usize, e: &GaussElement) -> CellImage<GaussElement, usize> {
            match (self.0, GaussInstance.apply_phi(n, k, e)) {
                (Defect::CollapseToStay, _) => CellImage::StayH(e.clone()),
                (Defect::RedirectUp, CellImage::UpH(p)) => CellImage::StayH(p),
                (_, img) => img,
            }
        }
        fn weight(&self, e: &GaussElement) -> Weight {
            GaussInstance.weight(e)
        }
        fn marker_weight(&self, n: usize, k: usize, m: &usize) -> Weight {
            let w = GaussInstance.marker_weight(n, k, m);
            if self.0 == Defect::HeavyMarker {
                Weight { a_exp: w.a_exp, q_exp: w.q_exp + 1 }
            } else {
                w
            }
        }
        fn marker_cell(&self, n: usize, k: usize, m: &usize) -> Option<(usize, usize)> {
            GaussInstance.marker_cell(n, k, m)
        }
        fn enumerate_b(&self, n: usize, k: usize, max_weight: usize) -> Vec<(usize, GaussElement)> {
            GaussInstance.enumerate_b(n, k, max_weight)
        }
    }

    fn cell_failures(inst: &impl TelescopingInstance, n: usize, max_weight: usize) -> usize {
        (0..=inst.k_bound(n, max_weight))
            .map(|k| check_cell(inst, n, k, max_weight).failures.len())
            .sum()
    }

    #[test]
    fn a_map_that_never_leaves_h_is_rejected() {
        assert_eq!(cell_failures(&GaussInstance, 4, 8), 0);
        let broken = Broken(Defect::CollapseToStay);
        assert!(cell_failures(&broken, 4, 8) > 0);
        // a cell small enough that nothing is lost to the failure cap
        let record = check_cell(&broken, 2, 0, 2);
        assert!(record.failures.iter().any(|m| m.starts_with("codomain:")));
        assert!(record.failures.iter().any(|m| m.starts_with("surjectivity:")));
    }

    #[test]
    fn a_marker_with_the_wrong_weight_is_rejected() {
        let broken = Broken(Defect::HeavyMarker);
        let merged: Vec<String> = (0..=broken.k_bound(4, 8))
            .flat_map(|k| check_cell(&broken, 4, k, 8).failures)
            .collect();
        assert!(merged.iter().any(|m| m.starts_with("weight:")));

        // and the series relation f = g + h + h' breaks as well
        let records = check_telescoping(&broken, 4, 0, 8);
        assert!(records.iter().any(|r| !r.ok()));
        assert!(records
            .iter()
            .flat_map(|r| &r.failures)
            .any(|m| m.contains("f(k) != g(k) + h(k) + h(k+1)")));
    }

    #[test]
    fn a_pairing_with_unreached_partners_is_rejected() {
        let (_, records) = build_involution(&GaussInstance, 4, 8);
        assert!(records.iter().all(CellRecord::ok));

        let (_, records) = build_involution(&Broken(Defect::RedirectUp), 4, 8);
        assert!(records
            .iter()
            .flat_map(|r| &r.failures)
            .any(|m| m.starts_with("missing preimage:")));
    }

    #[test]
    fn pairs_sit_in_adjacent_cells_and_share_weight() {
        let (table, records) = build_involution(&GaussInstance, 5, 9);
        assert!(records.iter().all(CellRecord::ok));
        assert!(!table.pairs.is_empty());
        for ((k, alpha), (k1, beta)) in &table.pairs {
            assert_eq!(k + 1, *k1);
            assert_eq!(GaussInstance.weight(alpha), GaussInstance.weight(beta));
            assert!(GaussInstance.in_h(table.n, *k1, beta));
        }
    }

    #[test]
    fn enumeration_matches_the_alternating_sum_shape() {
        // F_2 = 1/(q;q)_2 - 1/(q;q)_1^2 + 1/(q;q)_2 counts pairs with signs;
        // the constant term is 2 - 1 = 1 and the q coefficient is 1 - 2 + 1 = 0
        let f = brute_force_f(&GaussInstance, 2, 0, 6);
        assert_eq!(f.row(0).coeff(0), &BigInt::from(1));
        assert_eq!(f.row(0).coeff(1), &BigInt::from(0));
    }
}
