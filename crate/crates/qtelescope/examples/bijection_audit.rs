//! Exhaustive audit of the cell maps phi_{n,k} on weight slices: codomain
//! membership, weight preservation, injectivity, and surjectivity, for all
//! three telescoping proofs.
//!
//! Run with `cargo run --example bijection_audit`.

use qtelescope::gauss::GaussInstance;
use qtelescope::sylvester::SylvesterInstance;
use qtelescope::telescoping::{check_cell, TelescopingInstance};
use qtelescope::watson::WatsonInstance;

fn audit(inst: &impl TelescopingInstance, n_max: usize, max_weight: usize) {
    let mut cells = 0usize;
    let mut elements = 0u64;
    let mut failures = 0usize;
    for n in 1..=n_max {
        for k in 0..=inst.k_bound(n, max_weight) {
            let record = check_cell(inst, n, k, max_weight);
            cells += 1;
            elements += record.domain_size;
            failures += record.failures.len();
        }
    }
    println!(
        "{:<10} n <= {n_max}, weight <= {max_weight}: {cells} cells, {elements} elements, {failures} failures",
        inst.name()
    );
}

fn main() {
    audit(&GaussInstance, 6, 12);
    audit(&WatsonInstance, 6, 12);
    audit(&SylvesterInstance, 6, 12);

    // one cell in detail
    let record = check_cell(&WatsonInstance, 3, 1, 10);
    println!(
        "\nwatson cell (n=3, k=1) on the weight-10 slice: {} elements, {}",
        record.domain_size,
        if record.ok() { "bijective" } else { "broken" }
    );
}
