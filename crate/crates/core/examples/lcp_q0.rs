//! Solves a few linear complementarity problems by support enumeration and
//! samples right-hand sides against the Q0 property.
//!
//!     cargo run --example lcp_q0

use semimonotone::fixtures;
use semimonotone::lcp::{lcp_feasible, lcp_solve_enum, q0_falsify, LcpInstance};
use semimonotone::ratcore::int;
use semimonotone::RatMatrix;

fn show(q: &[i64], a: RatMatrix) -> semimonotone::Result<()> {
    let inst = LcpInstance::new(q.iter().map(|&x| int(x)).collect(), a)?;
    let sols = lcp_solve_enum(&inst);
    println!("q = {q:?}: feasible {}, {} solution(s)", lcp_feasible(&inst).is_feasible(), sols.solutions.len());
    for s in &sols.solutions {
        let z: Vec<String> = s.z.iter().map(ToString::to_string).collect();
        println!("  z = ({})  support {}  verified {}", z.join(", "), s.support, s.verify(&inst));
    }
    Ok(())
}

fn main() -> semimonotone::Result<()> {
    show(&[1, 1, 1], RatMatrix::identity(3))?;
    show(&[-1, -2], RatMatrix::identity(2))?;
    show(&[-1, -1, -1], fixtures::e02_3x3())?;
    show(&[2, 0, 1], fixtures::e02_3x3())?;

    let r = q0_falsify(&fixtures::e02_3x3(), 2000, 9)?;
    println!("\nQ0 sampling: {} trials, {} feasible, {} solved", r.trials, r.feasible, r.solved);
    println!("{}", r.note);
    Ok(())
}
