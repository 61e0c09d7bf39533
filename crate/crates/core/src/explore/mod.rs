//! Seeded rejection sampling of matrices in the exact-order classes, and
//! counterexample search for open questions about them.
//!
//! The searches can only falsify: a run without counterexamples is
//! evidence, not proof. A reported counterexample has passed three
//! independent re-checks (see [`Validation`]); anything that fails a
//! re-check is kept apart in [`SearchReport::unvalidated`].

mod checks;
mod generator;

pub use checks::{Finding, FindingKind, Validation};
pub use generator::{generate, EntrySign, GeneratorConfig, SignTemplate, TEMPLATE_NAMES};

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{exact_order, is_z, Variant};
use crate::error::{Error, Result};
use crate::ratcore::RatMatrix;

/// What a search looks for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SearchTarget {
    /// Matrices of the given exact order.
    ExactOrder { order: usize, k: usize, variant: Variant },
    /// Z-matrices of `E0` exact order 2: every block `(A⁻¹)_αα` with
    /// `|α| = n−1`, written through the Schur complement, is a Z-matrix,
    /// and `A` has exactly one negative eigenvalue.
    ConjectureOne,
    /// `E0` exact order 2 without sign restriction: `det A < 0` and `A⁻¹`
    /// is a Z-matrix.
    ConjectureTwo,
    /// Exact order `k`: at least `k` negative entries in every row and
    /// column.
    NegativeEntries { k: usize, variant: Variant },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hit {
    pub attempt: u64,
    pub matrix: RatMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub attempt: u64,
    pub matrix: RatMatrix,
    pub conclusion: String,
    pub evidence: String,
    pub validation: Validation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub target: SearchTarget,
    pub config: GeneratorConfig,
    /// Attempts actually classified (less than `max_attempts` when the hit
    /// limit was reached).
    pub attempts: usize,
    pub hits: Vec<Hit>,
    /// Fully validated counterexamples.
    pub counterexamples: Vec<Counterexample>,
    /// Failed conclusions that did not survive re-checking. Nonempty means
    /// a bug somewhere, not a counterexample.
    pub unvalidated: Vec<Counterexample>,
    pub tallies: BTreeMap<String, usize>,
    pub note: &'static str,
}

impl SearchReport {
    pub fn hit_count(&self) -> usize {
        self.hits.len()
    }

    pub fn found_counterexample(&self) -> bool {
        !self.counterexamples.is_empty()
    }
}

const FALSIFY_ONLY: &str = "random search can refute but never prove; no counterexample is evidence only";

/// Attempts classified per parallel batch; results are merged in attempt
/// order, so reports do not depend on scheduling.
const CHUNK: usize = 256;

struct Evaluation {
    findings: Vec<Finding>,
    tags: Vec<&'static str>,
}

fn run<E, R>(config: &GeneratorConfig, target: SearchTarget, evaluate: E, reclassify: R) -> Result<SearchReport>
where
    E: Fn(&RatMatrix) -> Result<Option<Evaluation>> + Sync + Send,
    R: Fn(&RatMatrix) -> Result<bool>,
{
    config.validate()?;
    let mut report = SearchReport {
        target,
        config: config.clone(),
        attempts: 0,
        hits: Vec::new(),
        counterexamples: Vec::new(),
        unvalidated: Vec::new(),
        tallies: BTreeMap::new(),
        note: FALSIFY_ONLY,
    };
    let limit = config.max_hits.unwrap_or(usize::MAX);
    let mut start = 0usize;
    'outer: while start < config.max_attempts {
        let end = (start + CHUNK).min(config.max_attempts);
        let batch: Vec<(u64, RatMatrix, Option<Evaluation>)> = (start as u64..end as u64)
            .into_par_iter()
            .map(|t| {
                let a = config.sample(t);
                let e = evaluate(&a)?;
                Ok((t, a, e))
            })
            .collect::<Result<_>>()?;
        for (t, a, e) in batch {
            report.attempts = t as usize + 1;
            let Some(e) = e else { continue };
            for tag in e.tags {
                *report.tallies.entry(tag.to_string()).or_default() += 1;
            }
            for f in e.findings {
                let validation = Validation {
                    classifier: reclassify(&a)?,
                    audit: f.kind.audit(&a),
                    substitution: f.kind.substitute(&a),
                };
                let c = Counterexample { attempt: t, matrix: a.clone(), conclusion: f.conclusion, evidence: f.evidence, validation };
                if c.validation.all() {
                    report.counterexamples.push(c);
                } else {
                    report.unvalidated.push(c);
                }
            }
            report.hits.push(Hit { attempt: t, matrix: a });
            if report.hits.len() >= limit {
                break 'outer;
            }
        }
        start = end;
    }
    Ok(report)
}

fn check_order(config: &GeneratorConfig, min: usize) -> Result<usize> {
    let n = config.order();
    if n < min {
        return Err(Error::InvalidConfig(format!("order {n} is below the minimum {min} for this search")));
    }
    Ok(n)
}

/// Exact order via the elimination route where it applies, else the LP
/// route again.
fn independent_exact_order(a: &RatMatrix, variant: Variant, k: usize) -> Result<bool> {
    if a.rows() <= crate::feasibility::FM_MAX_ORDER {
        Ok(crate::classify::exact_order_by_elimination(a, variant)?.is_exact(k))
    } else {
        Ok(exact_order(a, variant)?.is_exact(k))
    }
}

/// Samples until `config` is exhausted, keeping matrices whose exact order
/// in `variant` is `k`.
pub fn search_exact_order(k: usize, variant: Variant, config: &GeneratorConfig) -> Result<SearchReport> {
    let n = check_order(config, 1)?;
    if k > n {
        return Err(Error::InvalidConfig(format!("exact order {k} exceeds order {n}")));
    }
    run(
        config,
        SearchTarget::ExactOrder { order: n, k, variant },
        |a| Ok(exact_order(a, variant)?.is_exact(k).then(|| Evaluation { findings: Vec::new(), tags: Vec::new() })),
        |a| independent_exact_order(a, variant, k),
    )
}

/// Z ∩ `E0` exact order 2 hits, each checked for a Z-matrix block formula
/// on every `α` with `|α| = n−1` and for exactly one negative eigenvalue.
/// For `n = 3` both statements are known to hold.
pub fn search_conjecture_1(config: &GeneratorConfig) -> Result<SearchReport> {
    check_order(config, 3)?;
    run(
        config,
        SearchTarget::ConjectureOne,
        |a| {
            if !is_z(a)?.member || !exact_order(a, Variant::E0)?.is_exact(2) {
                return Ok(None);
            }
            Ok(Some(Evaluation { findings: checks::conjecture_one(a)?, tags: Vec::new() }))
        },
        |a| Ok(checks::is_z_by_scan(a) && independent_exact_order(a, Variant::E0, 2)?),
    )
}

/// `E0` exact order 2 hits of any sign pattern, each checked for
/// `det A < 0` and a Z-matrix inverse. Hits that are not Z-matrices are
/// tallied under `non_z`.
pub fn search_conjecture_2(config: &GeneratorConfig) -> Result<SearchReport> {
    check_order(config, 3)?;
    run(
        config,
        SearchTarget::ConjectureTwo,
        |a| {
            if !exact_order(a, Variant::E0)?.is_exact(2) {
                return Ok(None);
            }
            let tags = if checks::is_z_by_scan(a) { vec!["z"] } else { vec!["non_z"] };
            Ok(Some(Evaluation { findings: checks::conjecture_two(a)?, tags }))
        },
        |a| independent_exact_order(a, Variant::E0, 2),
    )
}

/// Exact order `k` hits, each checked for at least `k` negative entries in
/// every row and column.
pub fn search_negative_entries_question(k: usize, variant: Variant, config: &GeneratorConfig) -> Result<SearchReport> {
    let n = check_order(config, 2)?;
    if k < 1 || k >= n {
        return Err(Error::InvalidConfig(format!("need 1 <= k < n, got k = {k}, n = {n}")));
    }
    run(
        config,
        SearchTarget::NegativeEntries { k, variant },
        |a| {
            if !exact_order(a, variant)?.is_exact(k) {
                return Ok(None);
            }
            Ok(Some(Evaluation { findings: checks::negative_entries(a, k), tags: Vec::new() }))
        },
        |a| independent_exact_order(a, variant, k),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn exact_order_two_hits_at_order_three() {
        let cfg = GeneratorConfig::new(SignTemplate::negative_off_diagonal(3, Variant::E0), 7).attempts(2000);
        let r = search_exact_order(2, Variant::E0, &cfg).unwrap();
        assert!(r.hit_count() > 0);
        for h in &r.hits {
            assert!(exact_order(&h.matrix, Variant::E0).unwrap().is_exact(2));
            assert_eq!(cfg.sample(h.attempt), h.matrix);
        }
    }

    #[test]
    fn nonnegative_template_always_hits_order_zero() {
        let cfg = GeneratorConfig::new(SignTemplate::nonnegative(2), 3).attempts(100);
        let r = search_exact_order(0, Variant::E0, &cfg).unwrap();
        assert_eq!(r.hit_count(), 100);
        assert_eq!(r.attempts, 100);
    }

    #[test]
    fn hit_limit_truncates_deterministically() {
        let cfg = GeneratorConfig::new(SignTemplate::nonnegative(2), 3).attempts(1000).hit_limit(10);
        let r = search_exact_order(0, Variant::E0, &cfg).unwrap();
        assert_eq!((r.hit_count(), r.attempts), (10, 10));
    }

    #[test]
    fn reports_are_reproducible() {
        let cfg = GeneratorConfig::new(SignTemplate::negative_off_diagonal(3, Variant::E0), 11).attempts(600);
        let a = search_conjecture_2(&cfg).unwrap();
        let b = search_conjecture_2(&cfg).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn conjecture_checks_hold_on_fixtures() {
        assert!(checks::conjecture_one(&fixtures::e02_3x3()).unwrap().is_empty());
        assert!(checks::conjecture_two(&fixtures::example_4x4_symmetric()).unwrap().is_empty());
        assert!(checks::conjecture_two(&fixtures::example_4x4_asymmetric()).unwrap().is_empty());
        assert!(checks::negative_entries(&fixtures::exact_order_three_4x4(), 3).is_empty());
    }

    #[test]
    fn empty_search_reports_nothing() {
        // nonnegative matrices are never exact order 2
        let cfg = GeneratorConfig::new(SignTemplate::nonnegative(4), 1).attempts(50);
        let r = search_conjecture_1(&cfg).unwrap();
        assert_eq!((r.hit_count(), r.counterexamples.len()), (0, 0));
    }

    #[test]
    fn argument_checks() {
        let cfg = GeneratorConfig::new(SignTemplate::free(3), 1);
        assert!(search_exact_order(4, Variant::E0, &cfg).is_err());
        assert!(search_negative_entries_question(3, Variant::E0, &cfg).is_err());
        assert!(search_conjecture_1(&GeneratorConfig::new(SignTemplate::free(2), 1)).is_err());
    }
}
