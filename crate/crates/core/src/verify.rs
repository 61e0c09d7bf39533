//! Executable audits of the structural results on exact-order matrices.
//!
//! Each audit first decides whether its hypotheses hold for the input and
//! only then evaluates the conclusions, so a failed conclusion with the
//! hypotheses met is a genuine counterexample and is reported with the full
//! matrix.

use std::fmt;
use std::str::FromStr;

use num_traits::Signed;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::classify::{
    check_3x3_structure, copositive_exact_order, exact_order, is_almost_semimonotone,
    is_almost_strictly_semimonotone, is_inverse_z, is_z, negative_entry_profile, ExactOrderResult, Variant,
};
use crate::error::{Error, Result};
use crate::ratcore::{IndexSet, RatMatrix, Rational};

/// Which result an [`AuditReport`] checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// 3×3 exact order 2: sign pattern, order-2 minors, irreducibility.
    Structure3,
    /// 3×3 `E0` exact order 2: `det < 0`, inverse Z, one negative eigenvalue.
    Inverse3,
    /// Exact order 2, `n ≥ 3`: diagonal signs, two negatives per row/column.
    NegativeEntries,
    /// Z-matrices of `E0` exact order 2: minor signs, inverse diagonal, Schur.
    ZOrderTwo,
    /// Exact order under transpose, permutation similarity, positive scaling.
    Invariance,
    /// Exact order `n − 1` forces negative off-diagonal entries.
    NEqKPlusOne,
    /// For symmetric matrices the copositive and semimonotone exact orders agree.
    SymmetricCopositive,
    /// Sum and product of exact-order-2 matrices leave the class.
    Nonclosure,
}

impl TheoremId {
    pub const ALL: [TheoremId; 8] = [
        TheoremId::Structure3,
        TheoremId::Inverse3,
        TheoremId::NegativeEntries,
        TheoremId::ZOrderTwo,
        TheoremId::Invariance,
        TheoremId::NEqKPlusOne,
        TheoremId::SymmetricCopositive,
        TheoremId::Nonclosure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Structure3 => "structure3",
            TheoremId::Inverse3 => "inverse3",
            TheoremId::NegativeEntries => "neg-entries",
            TheoremId::ZOrderTwo => "z-order2",
            TheoremId::Invariance => "invariance",
            TheoremId::NEqKPlusOne => "n-eq-k-plus-1",
            TheoremId::SymmetricCopositive => "sym-copositive",
            TheoremId::Nonclosure => "nonclosure",
        }
    }

    /// Alternative ids accepted on input.
    fn aliases(self) -> &'static [&'static str] {
        match self {
            TheoremId::Structure3 => &["thm3.4"],
            TheoremId::Inverse3 => &["thm3.5"],
            TheoremId::NegativeEntries => &["prop4.10"],
            TheoremId::ZOrderTwo => &["thm4.11"],
            TheoremId::NEqKPlusOne => &["n=k+1"],
            _ => &[],
        }
    }

    /// False for audits that check a worked example rather than a theorem;
    /// their failures are not counterexamples.
    pub fn is_theorem(self) -> bool {
        self != TheoremId::Nonclosure
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s || t.aliases().contains(&s.as_str()))
            .ok_or_else(|| {
                let known: Vec<&str> = TheoremId::ALL.iter().map(|t| t.name()).collect();
                Error::InvalidConfig(format!("unknown theorem id {s:?}; expected one of {}", known.join(", ")))
            })
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// One named statement and whether it held.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub evidence: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, evidence: impl Into<String>) -> Self {
        Check { name: name.into(), passed, evidence: evidence.into() }
    }
}

/// Exact-order outcome of a matrix the audit classified along the way.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub subject: String,
    pub result: ExactOrderResult,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub theorem: TheoremId,
    pub variant: Option<Variant>,
    pub hypotheses_met: bool,
    pub hypotheses: Vec<Check>,
    /// Empty unless `hypotheses_met`.
    pub conclusions: Vec<Check>,
    pub classifications: Vec<Classification>,
    /// The input, present iff a theorem conclusion failed under its hypotheses.
    pub counterexample: Option<RatMatrix>,
}

impl AuditReport {
    fn new(theorem: TheoremId, variant: Option<Variant>) -> Self {
        AuditReport {
            theorem,
            variant,
            hypotheses_met: false,
            hypotheses: Vec::new(),
            conclusions: Vec::new(),
            classifications: Vec::new(),
            counterexample: None,
        }
    }

    fn hypothesis(&mut self, check: Check) {
        self.hypotheses.push(check);
        self.hypotheses_met = self.hypotheses.iter().all(|c| c.passed);
    }

    fn conclude(&mut self, check: Check) {
        debug_assert!(self.hypotheses_met);
        self.conclusions.push(check);
    }

    fn classified(&mut self, subject: &str, result: ExactOrderResult) {
        self.classifications.push(Classification { subject: subject.to_string(), result });
    }

    fn finish(mut self, a: &RatMatrix) -> Self {
        if self.theorem.is_theorem() && self.hypotheses_met && self.conclusions.iter().any(|c| !c.passed) {
            self.counterexample = Some(a.clone());
        }
        self
    }

    /// Hypotheses not met, or every conclusion held.
    pub fn passed(&self) -> bool {
        !self.hypotheses_met || self.conclusions.iter().all(|c| c.passed)
    }

    pub fn is_counterexample(&self) -> bool {
        self.counterexample.is_some()
    }

    pub fn failed_conclusions(&self) -> impl Iterator<Item = &Check> {
        self.conclusions.iter().filter(|c| !c.passed)
    }
}

fn list(xs: &[Rational]) -> String {
    let parts: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn grid(m: &RatMatrix) -> String {
    let rows: Vec<String> = m.to_rows().iter().map(|r| list(r)).collect();
    format!("[{}]", rows.join(", "))
}

fn class_name(variant: Variant) -> &'static str {
    match variant {
        Variant::E0 => "semimonotone",
        Variant::E => "strictly semimonotone",
    }
}

fn order_at_least(a: &RatMatrix, min: usize) -> Result<usize> {
    let n = a.order()?;
    if n < min {
        return Err(Error::WrongOrder { expected: format!("at least {min}"), found: n });
    }
    Ok(n)
}

fn exact_order_hypothesis(report: &mut AuditReport, a: &RatMatrix, variant: Variant, k: usize) -> Result<()> {
    let r = exact_order(a, variant)?;
    report.hypothesis(Check::new(format!("{variant} exact order {k}"), r.is_exact(k), r.to_string()));
    report.classified("A", r);
    Ok(())
}

fn diagonal_check(a: &RatMatrix, variant: Variant) -> Check {
    let diag: Vec<Rational> = (0..a.rows()).map(|i| a[(i, i)].clone()).collect();
    match variant {
        Variant::E0 => Check::new("diagonal nonnegative", !diag.iter().any(Signed::is_negative), list(&diag)),
        Variant::E => Check::new("diagonal positive", diag.iter().all(Signed::is_positive), list(&diag)),
    }
}

fn off_diagonal_negative(a: &RatMatrix) -> Check {
    let n = a.rows();
    let bad: Vec<String> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j && !a[(i, j)].is_negative())
        .map(|(i, j)| format!("a{}{} = {}", i + 1, j + 1, a[(i, j)]))
        .collect();
    let evidence = if bad.is_empty() { "all off-diagonal entries negative".into() } else { bad.join(", ") };
    Check::new("off-diagonal entries negative", bad.is_empty(), evidence)
}

/// Facts every order-`(n−1)` principal submatrix of an exact-order-2
/// matrix inherits from being almost (strictly) semimonotone.
fn order_n_minus_1_checks(a: &RatMatrix, variant: Variant) -> Result<Vec<Check>> {
    let n = a.rows();
    let mut not_almost = Vec::new();
    let mut no_negative = Vec::new();
    let mut bad_inverse = Vec::new();
    for alpha in IndexSet::of_size(n, n - 1) {
        let sub = a.principal_submatrix(&alpha)?;
        let almost = match variant {
            Variant::E0 => is_almost_semimonotone(&sub)?,
            Variant::E => is_almost_strictly_semimonotone(&sub)?,
        };
        if !almost.member {
            not_almost.push(alpha.to_string());
        }
        if negative_entry_profile(&sub)?.min_count() < 1 {
            no_negative.push(alpha.to_string());
        }
        if variant == Variant::E0 {
            match sub.inverse() {
                Ok(inv) if !inv.entries().iter().any(Signed::is_positive) => {}
                Ok(_) => bad_inverse.push(format!("{alpha}: inverse has a positive entry")),
                Err(_) => bad_inverse.push(format!("{alpha}: singular")),
            }
        }
    }
    let evidence = |v: &Vec<String>| if v.is_empty() { "all order n-1 blocks".to_string() } else { v.join("; ") };
    let mut checks = vec![
        Check::new(
            format!("order n-1 principal submatrices almost {}", class_name(variant)),
            not_almost.is_empty(),
            evidence(&not_almost),
        ),
        Check::new(
            "order n-1 principal submatrices have a negative entry in every row and column",
            no_negative.is_empty(),
            evidence(&no_negative),
        ),
    ];
    if variant == Variant::E0 {
        checks.push(Check::new(
            "order n-1 principal submatrices have nonpositive inverses",
            bad_inverse.is_empty(),
            evidence(&bad_inverse),
        ));
    }
    Ok(checks)
}

/// 3×3 exact order 2: Z sign pattern with nonnegative (positive) diagonal,
/// order-2 minors negative (nonpositive), not triangular, irreducible.
pub fn audit_3x3_structure(a: &RatMatrix, variant: Variant) -> Result<AuditReport> {
    let s = check_3x3_structure(a, variant)?;
    let mut report = AuditReport::new(TheoremId::Structure3, Some(variant));
    exact_order_hypothesis(&mut report, a, variant, 2)?;
    if !report.hypotheses_met {
        return Ok(report);
    }
    report.conclude(diagonal_check(a, variant));
    report.conclude(off_diagonal_negative(a));
    let minors = list(&s.order_two_minors);
    report.conclude(match variant {
        Variant::E0 => Check::new("order-2 principal minors negative", s.minors_ok, minors),
        Variant::E => Check::new("order-2 principal minors nonpositive", s.minors_ok, minors),
    });
    let triangular = crate::classify::is_triangular(a);
    report.conclude(Check::new("not triangular", !triangular, if triangular { "triangular" } else { "not triangular" }));
    let irreducible = a.is_irreducible()?;
    report.conclude(Check::new("irreducible", irreducible, if irreducible { "irreducible" } else { "reducible" }));
    for c in order_n_minus_1_checks(a, variant)? {
        report.conclude(c);
    }
    Ok(report.finish(a))
}

/// 3×3 `E0` exact order 2: `det A < 0`, `A⁻¹` is Z, exactly one negative
/// eigenvalue, and the Schur complement of the `{1,2}` block is positive.
pub fn audit_3x3_inverse(a: &RatMatrix) -> Result<AuditReport> {
    let n = a.order()?;
    if n != 3 {
        return Err(Error::WrongOrder { expected: "3".into(), found: n });
    }
    let mut report = AuditReport::new(TheoremId::Inverse3, Some(Variant::E0));
    exact_order_hypothesis(&mut report, a, Variant::E0, 2)?;
    if !report.hypotheses_met {
        return Ok(report);
    }
    let det = a.det()?;
    report.conclude(Check::new("determinant negative", det.is_negative(), det.to_string()));
    let inv_z = is_inverse_z(a)?;
    let evidence = match &inv_z.witness {
        None => "inverse exists and is a Z-matrix".to_string(),
        Some(w) => format!("{w:?}"),
    };
    report.conclude(Check::new("inverse exists and is a Z-matrix", inv_z.member, evidence));
    let neg = a.count_negative_eigenvalues()?;
    report.conclude(Check::new("exactly one negative eigenvalue", neg == 1, format!("{neg} negative eigenvalues")));
    let alpha = IndexSet::new(3, &[0, 1])?;
    let schur = match a.schur_complement(&alpha) {
        Ok(s) => Check::new("Schur complement of the {1,2} block positive", s[(0, 0)].is_positive(), s[(0, 0)].to_string()),
        Err(e) => Check::new("Schur complement of the {1,2} block positive", false, e.to_string()),
    };
    report.conclude(schur);
    Ok(report.finish(a))
}

/// Exact order 2 with `n ≥ 3`: diagonal nonnegative (positive) and at
/// least two negative entries in every row and column.
pub fn audit_negative_entries(a: &RatMatrix, variant: Variant) -> Result<AuditReport> {
    order_at_least(a, 3)?;
    let mut report = AuditReport::new(TheoremId::NegativeEntries, Some(variant));
    exact_order_hypothesis(&mut report, a, variant, 2)?;
    if !report.hypotheses_met {
        return Ok(report);
    }
    report.conclude(diagonal_check(a, variant));
    let p = negative_entry_profile(a)?;
    report.conclude(Check::new(
        "at least two negative entries in every row and column",
        p.min_count() >= 2,
        format!("rows {:?}, columns {:?}", p.rows, p.cols),
    ));
    for c in order_n_minus_1_checks(a, variant)? {
        report.conclude(c);
    }
    Ok(report.finish(a))
}

/// The block `(A⁻¹)_αα` written through `A_αα` and the Schur complement:
/// `A_αα⁻¹ + A_αα⁻¹ A_αᾱ (A/A_αα)⁻¹ A_ᾱα A_αα⁻¹`.
pub fn inverse_block_formula(a: &RatMatrix, alpha: &IndexSet) -> Result<RatMatrix> {
    a.order()?;
    let beta = alpha.complement();
    let inv_aa = a.submatrix(alpha, alpha).inverse().map_err(|_| Error::SingularBlock(alpha.to_string()))?;
    let schur = a.schur_complement(alpha)?;
    let inv_s = schur.inverse().map_err(|_| Error::SingularBlock(format!("Schur complement of {alpha}")))?;
    let a_ab = a.submatrix(alpha, &beta);
    let a_ba = a.submatrix(&beta, alpha);
    let correction = &(&(&(&inv_aa * &a_ab) * &inv_s) * &a_ba) * &inv_aa;
    Ok(&inv_aa + &correction)
}

/// Z-matrices of `E0` exact order 2 (`n ≥ 3`): principal minors of order
/// at most `n−2` nonnegative, of order `n−1` negative, `det A < 0`,
/// `A⁻¹` has positive diagonal, and every Schur complement `A/A_αα` with
/// `|α| = n−1` is positive.
pub fn audit_z_order_two(a: &RatMatrix) -> Result<AuditReport> {
    let n = order_at_least(a, 3)?;
    let mut report = AuditReport::new(TheoremId::ZOrderTwo, Some(Variant::E0));
    let z = is_z(a)?;
    report.hypothesis(Check::new("Z-matrix", z.member, if z.member { "Z".to_string() } else { format!("{:?}", z.witness) }));
    exact_order_hypothesis(&mut report, a, Variant::E0, 2)?;
    if !report.hypotheses_met {
        return Ok(report);
    }

    let mut small_bad = Vec::new();
    let mut large_bad = Vec::new();
    let mut large = Vec::new();
    for alpha in IndexSet::nonempty_subsets(n).filter(|s| s.len() < n) {
        let m = a.principal_submatrix(&alpha)?.det()?;
        if alpha.len() <= n - 2 {
            if m.is_negative() {
                small_bad.push(format!("{alpha}: {m}"));
            }
        } else {
            if !m.is_negative() {
                large_bad.push(format!("{alpha}: {m}"));
            }
            large.push(m);
        }
    }
    report.conclude(Check::new(
        "principal minors of order at most n-2 nonnegative",
        small_bad.is_empty(),
        if small_bad.is_empty() { "all nonnegative".into() } else { small_bad.join("; ") },
    ));
    report.conclude(Check::new(
        "principal minors of order n-1 negative",
        large_bad.is_empty(),
        if large_bad.is_empty() { list(&large) } else { large_bad.join("; ") },
    ));
    let det = a.det()?;
    report.conclude(Check::new("determinant negative", det.is_negative(), det.to_string()));
    match a.inverse() {
        Ok(inv) => {
            let diag: Vec<Rational> = (0..n).map(|i| inv[(i, i)].clone()).collect();
            report.conclude(Check::new("inverse diagonal positive", diag.iter().all(Signed::is_positive), list(&diag)));
        }
        Err(e) => report.conclude(Check::new("inverse diagonal positive", false, e.to_string())),
    }
    let mut schur_bad = Vec::new();
    let mut schurs = Vec::new();
    for alpha in IndexSet::of_size(n, n - 1) {
        match a.schur_complement(&alpha) {
            Ok(s) if s[(0, 0)].is_positive() => schurs.push(s[(0, 0)].clone()),
            Ok(s) => schur_bad.push(format!("{alpha}: {}", s[(0, 0)])),
            Err(e) => schur_bad.push(format!("{alpha}: {e}")),
        }
    }
    report.conclude(Check::new(
        "Schur complement of every order n-1 block exists and is positive",
        schur_bad.is_empty(),
        if schur_bad.is_empty() { list(&schurs) } else { schur_bad.join("; ") },
    ));
    Ok(report.finish(a))
}

/// Positive rational with numerator and denominator in `1..=9`.
fn positive_scale(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.random_range(1i64..=9).into(), rng.random_range(1i64..=9).into())
}

/// Exact order of `A` (both variants) against `Aᵀ`, one seeded permutation
/// similarity `PAPᵀ`, and seeded positive diagonal scalings `DA` and `AD`.
pub fn audit_invariance(a: &RatMatrix, seed: u64) -> Result<AuditReport> {
    audit_invariance_rounds(a, seed, 1)
}

/// [`audit_invariance`] with `rounds` independent permutations and
/// scalings.
pub fn audit_invariance_rounds(a: &RatMatrix, seed: u64, rounds: usize) -> Result<AuditReport> {
    let n = a.order()?;
    let mut report = AuditReport::new(TheoremId::Invariance, None);
    report.hypothesis(Check::new("square", true, format!("order {n}")));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut transforms: Vec<(String, RatMatrix)> = vec![("transpose".into(), a.transpose())];
    for r in 0..rounds {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        transforms.push((format!("permutation {perm:?}"), a.permute_similar(&perm)?));
        let d: Vec<Rational> = (0..n).map(|_| positive_scale(&mut rng)).collect();
        let dm = RatMatrix::diagonal(&d);
        transforms.push((format!("row scaling #{r} {}", list(&d)), &dm * a));
        let d: Vec<Rational> = (0..n).map(|_| positive_scale(&mut rng)).collect();
        let dm = RatMatrix::diagonal(&d);
        transforms.push((format!("column scaling #{r} {}", list(&d)), a * &dm));
    }
    for variant in Variant::both() {
        let base = exact_order(a, variant)?;
        for (name, t) in &transforms {
            let r = exact_order(t, variant)?;
            let same = r.outcome == base.outcome;
            report.conclude(Check::new(format!("{variant} exact order unchanged under {name}"), same, format!("{base} vs {r}")));
        }
        report.classified(&format!("A ({variant})"), base);
    }
    Ok(report.finish(a))
}

/// Exact order `n − 1`: diagonal nonnegative (positive) and every
/// off-diagonal entry negative.
pub fn audit_n_eq_k_plus_1(a: &RatMatrix, variant: Variant) -> Result<AuditReport> {
    let n = order_at_least(a, 3)?;
    let mut report = AuditReport::new(TheoremId::NEqKPlusOne, Some(variant));
    exact_order_hypothesis(&mut report, a, variant, n - 1)?;
    if !report.hypotheses_met {
        return Ok(report);
    }
    report.conclude(diagonal_check(a, variant));
    report.conclude(off_diagonal_negative(a));
    Ok(report.finish(a))
}

/// Symmetric input: the (strictly) copositive exact order and the
/// (strictly) semimonotone exact order agree, per order level.
pub fn audit_symmetric_copositive(a: &RatMatrix, variant: Variant) -> Result<AuditReport> {
    a.order()?;
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut report = AuditReport::new(TheoremId::SymmetricCopositive, Some(variant));
    report.hypothesis(Check::new("symmetric", true, "A = Aᵀ"));
    let semi = exact_order(a, variant)?;
    let copo = copositive_exact_order(a, variant)?;
    report.conclude(Check::new(
        "copositive and semimonotone exact orders agree",
        copo.same_profile(&semi),
        format!("copositive {copo}, semimonotone {semi}"),
    ));
    report.classified("A (semimonotone)", semi);
    report.classified("A (copositive)", copo);
    Ok(report.finish(a))
}

/// Classifies `A`, `B`, `A + B` and `AB` in the `E0` hierarchy. The pair
/// witnesses non-closure when `A` is `E0` exact order 2, `B` is either
/// `E0` exact order 2 or nonnegative, and the combinations leave the class
/// (the product is only claimed when both factors are exact order 2).
pub fn audit_nonclosure(a: &RatMatrix, b: &RatMatrix) -> Result<AuditReport> {
    let n = a.order()?;
    let m = b.order()?;
    if n != m {
        return Err(Error::DimensionMismatch { expected: format!("{n}×{n}"), found: format!("{m}×{m}") });
    }
    let mut report = AuditReport::new(TheoremId::Nonclosure, Some(Variant::E0));
    let ra = exact_order(a, Variant::E0)?;
    let rb = exact_order(b, Variant::E0)?;
    let sum = a + b;
    let product = a * b;
    let rs = exact_order(&sum, Variant::E0)?;
    let rp = exact_order(&product, Variant::E0)?;
    let b_order_two = rb.is_exact(2);
    report.hypothesis(Check::new("A is E0 exact order 2", ra.is_exact(2), ra.to_string()));
    report.hypothesis(Check::new(
        "B is E0 exact order 2 or nonnegative",
        b_order_two || b.is_nonnegative(),
        rb.to_string(),
    ));
    if report.hypotheses_met {
        report.conclude(Check::new("A + B is not E0 exact order 2", !rs.is_exact(2), format!("{rs}; A + B = {}", grid(&sum))));
        if b_order_two {
            report.conclude(Check::new("AB is not E0 exact order 2", !rp.is_exact(2), format!("{rp}; AB = {}", grid(&product))));
        }
    }
    report.classified("A", ra);
    report.classified("B", rb);
    report.classified("A + B", rs);
    report.classified("AB", rp);
    Ok(report.finish(a))
}

/// Options for [`run_audit`].
#[derive(Debug, Clone)]
pub struct AuditOptions {
    pub variant: Variant,
    pub seed: u64,
    pub rounds: usize,
    /// Second operand for the non-closure audit.
    pub partner: Option<RatMatrix>,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions { variant: Variant::E0, seed: 0, rounds: 1, partner: None }
    }
}

/// Dispatches to the audit named by `id`.
pub fn run_audit(id: TheoremId, a: &RatMatrix, opts: &AuditOptions) -> Result<AuditReport> {
    match id {
        TheoremId::Structure3 => audit_3x3_structure(a, opts.variant),
        TheoremId::Inverse3 => audit_3x3_inverse(a),
        TheoremId::NegativeEntries => audit_negative_entries(a, opts.variant),
        TheoremId::ZOrderTwo => audit_z_order_two(a),
        TheoremId::Invariance => audit_invariance_rounds(a, opts.seed, opts.rounds.max(1)),
        TheoremId::NEqKPlusOne => audit_n_eq_k_plus_1(a, opts.variant),
        TheoremId::SymmetricCopositive => audit_symmetric_copositive(a, opts.variant),
        TheoremId::Nonclosure => {
            let b = opts
                .partner
                .as_ref()
                .ok_or_else(|| Error::InvalidConfig("the nonclosure audit needs a second matrix".into()))?;
            audit_nonclosure(a, b)
        }
    }
}

/// Runs one audit over a corpus, in parallel, preserving corpus order.
pub fn audit_corpus<F>(corpus: &[RatMatrix], audit: F) -> Result<Vec<AuditReport>>
where
    F: Fn(&RatMatrix) -> Result<AuditReport> + Send + Sync,
{
    corpus.par_iter().map(audit).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn all_pass(r: &AuditReport) {
        assert!(r.hypotheses_met, "{r:#?}");
        assert!(!r.conclusions.is_empty());
        assert!(r.passed() && !r.is_counterexample(), "{r:#?}");
    }

    #[test]
    fn theorem_ids_parse() {
        for t in TheoremId::ALL {
            assert_eq!(t.name().parse::<TheoremId>().unwrap(), t);
        }
        assert_eq!("thm3.5".parse::<TheoremId>().unwrap(), TheoremId::Inverse3);
        assert_eq!("n=k+1".parse::<TheoremId>().unwrap(), TheoremId::NEqKPlusOne);
        assert!("thm9.9".parse::<TheoremId>().is_err());
    }

    #[test]
    fn structure_audits() {
        all_pass(&audit_3x3_structure(&fixtures::e02_3x3(), Variant::E0).unwrap());
        all_pass(&audit_3x3_structure(&fixtures::e2_3x3(), Variant::E).unwrap());
        let r = audit_3x3_structure(&RatMatrix::identity(3), Variant::E0).unwrap();
        assert!(!r.hypotheses_met && r.conclusions.is_empty() && r.passed());
        assert!(matches!(audit_3x3_structure(&RatMatrix::identity(4), Variant::E0), Err(Error::WrongOrder { .. })));
    }

    #[test]
    fn inverse_audit() {
        let r = audit_3x3_inverse(&fixtures::e02_3x3()).unwrap();
        all_pass(&r);
        assert_eq!(r.conclusions[0].evidence, "-11");
        assert!(!audit_3x3_inverse(&RatMatrix::identity(3)).unwrap().hypotheses_met);
    }

    #[test]
    fn negative_entry_audits() {
        all_pass(&audit_negative_entries(&fixtures::example_4x4_symmetric(), Variant::E0).unwrap());
        all_pass(&audit_negative_entries(&fixtures::exact_order_two_4x4(), Variant::E0).unwrap());
        assert!(!audit_negative_entries(&RatMatrix::identity(4), Variant::E0).unwrap().hypotheses_met);
    }

    #[test]
    fn z_order_two_audit() {
        all_pass(&audit_z_order_two(&fixtures::e02_3x3()).unwrap());
        let r = audit_z_order_two(&fixtures::example_4x4_symmetric()).unwrap();
        assert!(!r.hypotheses_met);
        assert!(!r.hypotheses[0].passed);
    }

    #[test]
    fn block_formula_matches_inverse() {
        let a = fixtures::example_4x4_symmetric();
        let inv = a.inverse().unwrap();
        for alpha in IndexSet::of_size(4, 3) {
            let block = inverse_block_formula(&a, &alpha).unwrap();
            assert_eq!(block, inv.submatrix(&alpha, &alpha));
        }
    }

    #[test]
    fn invariance_audits() {
        for seed in 0..3 {
            let r = audit_invariance(&fixtures::e02_3x3(), seed).unwrap();
            all_pass(&r);
            assert!(r.classifications[0].result.is_exact(2));
        }
        let r = audit_invariance(&RatMatrix::identity(3), 4).unwrap();
        all_pass(&r);
        assert!(r.classifications.iter().all(|c| c.result.is_exact(0)));
        all_pass(&audit_invariance_rounds(&fixtures::exact_order_two_5x5(), 11, 2).unwrap());
    }

    #[test]
    fn n_eq_k_plus_1_audits() {
        all_pass(&audit_n_eq_k_plus_1(&fixtures::exact_order_three_4x4(), Variant::E0).unwrap());
        all_pass(&audit_n_eq_k_plus_1(&fixtures::e02_3x3(), Variant::E0).unwrap());
        assert!(!audit_n_eq_k_plus_1(&RatMatrix::identity(3), Variant::E0).unwrap().hypotheses_met);
    }

    #[test]
    fn symmetric_copositive_audits() {
        let r = audit_symmetric_copositive(&fixtures::e2_3x3(), Variant::E).unwrap();
        all_pass(&r);
        assert!(r.classifications.iter().all(|c| c.result.is_exact(2)));
        let r = audit_symmetric_copositive(&RatMatrix::identity(3), Variant::E0).unwrap();
        assert!(r.classifications.iter().all(|c| c.result.is_exact(0)));
        assert_eq!(audit_symmetric_copositive(&fixtures::e02_3x3(), Variant::E0), Err(Error::NotSymmetric));
    }

    #[test]
    fn nonclosure_audits() {
        let a = fixtures::nonclosure_left();
        let b = fixtures::e2_3x3();
        assert_eq!(&a + &b, fixtures::nonclosure_sum());
        assert_eq!(&a * &b, fixtures::nonclosure_product());
        let r = audit_nonclosure(&a, &b).unwrap();
        all_pass(&r);
        assert_eq!(r.conclusions.len(), 2);

        let r = audit_nonclosure(&fixtures::zero_diagonal_minus_ones_3x3(), &fixtures::single_entry_nonnegative_3x3()).unwrap();
        all_pass(&r);
        assert_eq!(r.conclusions.len(), 1);

        let i = RatMatrix::identity(3);
        let r = audit_nonclosure(&i, &i).unwrap();
        assert!(!r.hypotheses_met);
        assert!(r.classifications.iter().all(|c| c.result.is_exact(0)));

        assert!(matches!(audit_nonclosure(&i, &RatMatrix::identity(2)), Err(Error::DimensionMismatch { .. })));
    }
}
