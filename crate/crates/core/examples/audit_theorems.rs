//! Runs each structural audit on a fixture it applies to, plus the
//! non-closure pair.
//!
//!     cargo run --example audit_theorems

use semimonotone::fixtures;
use semimonotone::verify::{run_audit, AuditOptions, TheoremId};

fn main() -> semimonotone::Result<()> {
    let opts = AuditOptions { rounds: 5, ..AuditOptions::default() };
    let cases = [
        (TheoremId::Structure3, fixtures::e02_3x3()),
        (TheoremId::Inverse3, fixtures::e02_3x3()),
        (TheoremId::NegativeEntries, fixtures::exact_order_two_4x4()),
        (TheoremId::ZOrderTwo, fixtures::exact_order_two_5x5()),
        (TheoremId::Invariance, fixtures::example_4x4_asymmetric()),
        (TheoremId::NEqKPlusOne, fixtures::exact_order_three_4x4()),
        (TheoremId::SymmetricCopositive, fixtures::e2_3x3()),
    ];
    for (id, a) in cases {
        let r = run_audit(id, &a, &opts)?;
        let verdict = if !r.hypotheses_met {
            "hypotheses not met"
        } else if r.passed() {
            "all conclusions hold"
        } else {
            "COUNTEREXAMPLE"
        };
        println!("{id:>16}: {verdict}");
        for c in &r.conclusions {
            println!("{:>18} {}  {}", if c.passed { "ok" } else { "FAIL" }, c.name, c.evidence);
        }
    }

    let pair = AuditOptions { partner: Some(fixtures::e2_3x3()), ..AuditOptions::default() };
    let r = run_audit(TheoremId::Nonclosure, &fixtures::nonclosure_left(), &pair)?;
    println!("\nnonclosure:");
    for c in &r.classifications {
        println!("  {}: {}", c.subject, c.result);
    }
    Ok(())
}
