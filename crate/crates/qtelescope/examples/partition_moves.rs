//! The partition toolkit underneath the bijections: multiplicities with an
//! infinite value at 0, constrained enumeration, and the local moves
//! (convert, remove, add, decrement) the cell maps are built from.
//!
//! Run with `cargo run --example partition_moves`.

use qtelescope::partitions::{enumerate, ExtNat, Partition, PartitionConstraint};
use qtelescope::watson::WatsonInstance;
use qtelescope::telescoping::{CellImage, TelescopingInstance};

fn main() {
    let p = Partition::new(vec![4, 2, 2, 1]);
    println!("p = {p:?}, weight {}", p.weight());
    println!("multiplicity of 2: {:?}", p.multiplicity(2));
    println!("multiplicity of 0: {:?} (every partition has infinitely many 0 parts)", p.multiplicity(0));
    assert_eq!(p.multiplicity(0), ExtNat::Inf);

    // the moves used by the cell maps
    let q = p.convert_parts(4, 2);
    println!("convert 4 -> 2+2: {q:?}");
    let r = q.remove_parts(2, 3).add_parts(5, 1);
    println!("remove three 2s, add a 5: {r:?}");
    let s = Partition::new(vec![5, 3, 2]);
    println!("decrement every part of {s:?}: {:?}", s.decrement_each(1));

    // constrained enumeration drives the slice checks
    let c = PartitionConstraint {
        min_part: Some(2),
        forbidden_part: Some(4),
        ..Default::default()
    };
    let slice: Vec<_> = enumerate(&c, 8);
    println!("\nweight <= 8, parts >= 2, no part 4:");
    for p in &slice {
        println!("    {p:?}");
    }

    // one application: a cell map move in Watson's proof
    let e = WatsonInstance.enumerate_cell(2, 1, 9).into_iter().next().expect("cell not empty");
    println!("\nwatson cell (2,1) element {e:?}");
    match WatsonInstance.apply_phi(2, 1, &e) {
        CellImage::ToB(m, p) => println!("phi: to B with marker {m:?}, payload {p:?}"),
        CellImage::StayH(p) => println!("phi: stays exceptional as {p:?}"),
        CellImage::UpH(p) => println!("phi: moves up to {p:?}"),
    }
}
