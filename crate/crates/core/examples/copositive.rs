//! Copositive exact order against semimonotone exact order: they can differ
//! in general and agree on symmetric matrices.
//!
//!     cargo run --example copositive

use semimonotone::classify::{copositive_exact_order, exact_order, Variant};
use semimonotone::fixtures;
use semimonotone::verify::audit_symmetric_copositive;

fn main() -> semimonotone::Result<()> {
    for (a, v) in [
        (fixtures::copositive_order_two_upper(), Variant::E0),
        (fixtures::strictly_copositive_order_two_upper(), Variant::E),
    ] {
        println!("{a}  copositive ({v}): {}", copositive_exact_order(&a, v)?);
        println!("  semimonotone ({v}): {}", exact_order(&a, v)?);
    }

    let s = fixtures::e2_3x3();
    for v in Variant::both() {
        let r = audit_symmetric_copositive(&s, v)?;
        println!("symmetric {v}: orders agree = {}", r.passed());
    }
    Ok(())
}
