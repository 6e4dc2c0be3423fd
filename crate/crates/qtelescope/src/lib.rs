//! Exact verification of combinatorial telescoping proofs of classical
//! q-series identities.
//!
//! A combinatorial telescoping proof presents weight-preserving bijections
//! `phi_k : A_k -> B_k u H_k u H_{k+1}` between finite weighted sets; the
//! generating-function shadow `f(k) = g(k) + h(k) + h(k+1)` telescopes, so the
//! alternating sums over `A_k` and `B_k` agree term by term. This crate
//! machine-checks three such proofs with exact big-integer arithmetic:
//!
//! * the alternating Gauss sum `sum_k (-1)^k / ((q;q)_k (q;q)_{n-k})`, which
//!   collapses to an even product ([`gauss`]),
//! * Watson's identity, whose right side `sum_n a^n q^{n^2}/(q;q)_n`
//!   specializes to Schur's bilateral identity at a = 1 and to the
//!   Rogers-Ramanujan sums at a = 1, q ([`watson`]),
//! * Sylvester's identity, whose sum side collapses to 1 ([`sylvester`]).
//!
//! [`partitions`] supplies exact constrained enumeration, [`series`] the
//! truncated one- and two-variable power series, [`telescoping`] the generic
//! cell checker (bijectivity, weight preservation, the telescoping relation,
//! the sign-reversing involution), [`certificates`] the creative-telescoping
//! certificate identities, [`report`] the machine-readable results, and
//! [`cli`] the command-line driver.
//!
//! Every check is exact: coefficients are arbitrary-precision integers,
//! truncation is explicit, and equality is integer equality. Enumeration on a
//! weight slice is a complete check because the maps preserve weight.

pub mod certificates;
pub mod cli;
pub mod gauss;
pub mod partitions;
pub mod report;
pub mod series;
pub mod sylvester;
pub mod telescoping;
pub mod watson;

pub use partitions::{ExtNat, Partition, PartitionConstraint};
pub use report::{CellRecord, Status, VerificationReport};
pub use series::{AQSeries, QSeries, SeriesError};
pub use telescoping::{CellImage, TelescopingInstance, Weight};

pub use gauss::GaussInstance;
pub use sylvester::SylvesterInstance;
pub use watson::WatsonInstance;
