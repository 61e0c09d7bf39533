//! Classifies every bundled fixture and prints both exact orders next to
//! the expected description.
//!
//!     cargo run --example classify_fixtures

use semimonotone::classify::{exact_order, is_inverse_z, is_z, Variant};
use semimonotone::fixtures;

fn main() -> semimonotone::Result<()> {
    for f in fixtures::all() {
        let e0 = exact_order(&f.matrix, Variant::E0)?;
        let e = exact_order(&f.matrix, Variant::E)?;
        println!("{} ({}x{}): {}", f.name, f.matrix.rows(), f.matrix.cols(), f.description);
        println!("  E0: {e0}");
        println!("  E:  {e}");
        println!("  Z: {}  inverse-Z: {}", is_z(&f.matrix)?.member, is_inverse_z(&f.matrix)?.member);
    }

    // a negative verdict carries a vector that can be substituted back
    let a = fixtures::e02_3x3();
    let v = semimonotone::classify::is_semimonotone(&a)?;
    println!("\ne02_3x3 in E0: {}  witness {:?}  rechecked: {}", v.member, v.witness, v.revalidate(&a));
    Ok(())
}
