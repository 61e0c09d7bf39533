//! Seeded searches for exact order 2 matrices, checking the open questions
//! on every hit. Pass a seed to vary the run.
//!
//!     cargo run --release --example explore_conjectures -- 42

use semimonotone::classify::Variant;
use semimonotone::explore::{
    search_conjecture_1, search_conjecture_2, search_exact_order, search_negative_entries_question, GeneratorConfig,
    SearchReport, SignTemplate,
};

fn summary(label: &str, r: &SearchReport) {
    println!(
        "{label}: {} attempts, {} hits, {} counterexamples, {} unvalidated  {:?}",
        r.attempts,
        r.hit_count(),
        r.counterexamples.len(),
        r.unvalidated.len(),
        r.tallies
    );
    for c in &r.counterexamples {
        println!("  attempt {}: {} ({})\n{}", c.attempt, c.conclusion, c.evidence, c.matrix);
    }
}

fn main() -> semimonotone::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);

    let cfg = GeneratorConfig::new(SignTemplate::negative_off_diagonal(3, Variant::E0), seed).attempts(2000);
    summary("3x3 E0 exact order 2", &search_exact_order(2, Variant::E0, &cfg)?);

    let z = GeneratorConfig::new(SignTemplate::z(4), seed).bounds(3, 1).diagonal(1, 5).attempts(4000);
    summary("conjecture 1, n=4", &search_conjecture_1(&z)?);

    let mixed = GeneratorConfig::new(SignTemplate::nonnegative_diagonal(4), seed)
        .bounds(3, 1)
        .diagonal(1, 5)
        .free_positive(10)
        .attempts(4000);
    summary("conjecture 2, n=4", &search_conjecture_2(&mixed)?);

    let cfg = GeneratorConfig::new(SignTemplate::negative_off_diagonal(4, Variant::E0), seed).bounds(3, 1).attempts(2000);
    summary("negative entries, k=3", &search_negative_entries_question(3, Variant::E0, &cfg)?);
    Ok(())
}
