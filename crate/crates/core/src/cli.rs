//! Front end behind the `semimono` binary: matrix files, the four verbs and
//! their JSON reports.
//!
//! A matrix file holds the order `n` on its first line followed by `n` rows
//! of `n` rational tokens (`3`, `-1/3`). Blank lines and lines starting with
//! `#` are ignored. A vector file holds `n` followed by `n` tokens.
//!
//! Exit codes: 0 when everything asserted held, 1 when a counterexample or
//! violation was found, 2 for usage, parse and I/O errors.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::classify::{
    copositive_exact_order, exact_order, is_almost_semimonotone, is_almost_strictly_semimonotone, is_copositive,
    is_inverse_z, is_nonnegative, is_p, is_p0, is_semimonotone, is_strictly_copositive, is_strictly_semimonotone,
    is_z, ClassVerdict, ExactOrder, ExactOrderResult, Variant,
};
use crate::error::{Error, Result};
use crate::explore::{
    search_conjecture_1, search_conjecture_2, search_exact_order, search_negative_entries_question, Counterexample,
    GeneratorConfig, SearchReport, SignTemplate, TEMPLATE_NAMES,
};
use crate::lcp::{lcp_feasible, lcp_solve_enum, q0_falsify, LcpInstance};
use crate::ratcore::{parse_rational, RatMatrix, Rational};
use crate::verify::{run_audit, AuditOptions, AuditReport, TheoremId};

pub const SCHEMA: &str = "semimono-report/1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_order(line: usize, token: &str) -> Result<usize> {
    match token.parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(Error::Parse { line, message: format!("expected a positive order, found {token:?}") }),
    }
}

/// Parses the matrix file format. Entry errors report 1-based row and
/// column.
pub fn parse_matrix(text: &str) -> Result<RatMatrix> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or(Error::Parse { line: 1, message: "empty matrix file".into() })?;
    let n = parse_order(line, header)?;
    let mut rows = Vec::with_capacity(n);
    for (row, (line, l)) in lines.by_ref().take(n).enumerate() {
        let tokens: Vec<&str> = l.split_whitespace().collect();
        if tokens.len() != n {
            return Err(Error::Parse { line, message: format!("row {} has {} entries, expected {n}", row + 1, tokens.len()) });
        }
        let parsed = tokens
            .iter()
            .enumerate()
            .map(|(col, t)| {
                parse_rational(t).ok_or_else(|| Error::BadEntry { row: row + 1, col: col + 1, token: t.to_string() })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(parsed);
    }
    if rows.len() < n {
        return Err(Error::Parse { line: text.lines().count(), message: format!("expected {n} rows, found {}", rows.len()) });
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse { line, message: format!("trailing content after {n} rows") });
    }
    RatMatrix::from_rows(rows)
}

/// Inverse of [`parse_matrix`].
pub fn format_matrix(a: &RatMatrix) -> String {
    let mut out = format!("{}\n", a.rows());
    for i in 0..a.rows() {
        let row: Vec<String> = a.row(i).iter().map(ToString::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Parses a vector file: `n`, then `n` tokens on any number of lines.
pub fn parse_vector(text: &str) -> Result<Vec<Rational>> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or(Error::Parse { line: 1, message: "empty vector file".into() })?;
    let n = parse_order(line, header)?;
    let mut out = Vec::with_capacity(n);
    for (line, l) in lines {
        for t in l.split_whitespace() {
            if out.len() == n {
                return Err(Error::Parse { line, message: format!("more than {n} entries") });
            }
            let x = parse_rational(t).ok_or_else(|| Error::BadEntry { row: 1, col: out.len() + 1, token: t.to_string() })?;
            out.push(x);
        }
    }
    if out.len() != n {
        return Err(Error::Parse { line: text.lines().count(), message: format!("expected {n} entries, found {}", out.len()) });
    }
    Ok(out)
}

pub fn format_vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("{}\n{}\n", v.len(), parts.join(" "))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
    }
    fs::write(path, contents).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn read_matrix_file(path: &Path) -> Result<RatMatrix> {
    parse_matrix(&read(path)?)
}

fn digest(parts: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update(p);
    }
    hex::encode(h.finalize())
}

/// The JSON document every verb emits. Only `elapsed_ms` differs between
/// two runs of the same command on the same input.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub schema: &'static str,
    pub command: Vec<String>,
    /// SHA-256 of the input files, or of the search configuration.
    pub input_digest: String,
    pub results: Value,
    pub elapsed_ms: u64,
}

impl RunReport {
    /// The report with timing removed, for comparisons.
    pub fn untimed(&self) -> RunReport {
        RunReport { elapsed_ms: 0, ..self.clone() }
    }
}

/// What a verb produced: the report, a human-readable rendering and the
/// exit code.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: RunReport,
    pub text: String,
    pub exit: i32,
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn yes_no(v: &ClassVerdict) -> &'static str {
    if v.member {
        "yes"
    } else {
        "no"
    }
}

fn order_row(name: &str, r: &ExactOrderResult) -> String {
    let value = match r.outcome {
        ExactOrder::Exact(k) => k.to_string(),
        ExactOrder::NoExactOrder => "none".to_string(),
    };
    let levels: Vec<String> = r.evidence.iter().map(|l| format!("{}:{}/{}", l.order, l.members, l.total)).collect();
    format!("{name}: {value}  ({})", levels.join(" "))
}

/// Classifies one matrix into every class the crate decides.
pub fn classify_matrix(a: &RatMatrix) -> Result<(Value, String)> {
    let verdicts = [
        ("E0", is_semimonotone(a)?),
        ("E", is_strictly_semimonotone(a)?),
        ("almost E0", is_almost_semimonotone(a)?),
        ("almost E", is_almost_strictly_semimonotone(a)?),
        ("Z", is_z(a)?),
        ("P0", is_p0(a)?),
        ("P", is_p(a)?),
        ("inverse-Z", is_inverse_z(a)?),
        ("nonnegative", is_nonnegative(a)?),
        ("copositive", is_copositive(a)?),
        ("strictly copositive", is_strictly_copositive(a)?),
    ];
    let orders = [
        ("E0 exact order", exact_order(a, Variant::E0)?),
        ("E exact order", exact_order(a, Variant::E)?),
        ("copositive exact order", copositive_exact_order(a, Variant::E0)?),
        ("strictly copositive exact order", copositive_exact_order(a, Variant::E)?),
    ];
    let mut text = format!("matrix of order {}\n{a}", a.rows());
    for (name, v) in &verdicts {
        writeln!(text, "{name}: {}", yes_no(v)).unwrap();
    }
    for (name, r) in &orders {
        writeln!(text, "{}", order_row(name, r)).unwrap();
    }
    let results = json!({
        "matrix": a,
        "verdicts": verdicts.iter().map(|(_, v)| to_value(v)).collect::<Vec<_>>(),
        "exact_orders": orders.iter().map(|(name, r)| json!({"name": name, "result": r})).collect::<Vec<_>>(),
    });
    Ok((results, text))
}

pub fn cmd_classify(path: &Path) -> Result<Outcome> {
    let started = Instant::now();
    let raw = read(path)?;
    let a = parse_matrix(&raw)?;
    let (results, text) = classify_matrix(&a)?;
    let report = RunReport {
        schema: SCHEMA,
        command: vec!["classify".into(), path.display().to_string()],
        input_digest: digest(&[raw.as_bytes()]),
        results,
        elapsed_ms: started.elapsed().as_millis() as u64,
    };
    Ok(Outcome { report, text, exit: EXIT_OK })
}

fn render_audit(r: &AuditReport) -> String {
    let mut text = format!("audit {}", r.theorem);
    if let Some(v) = r.variant {
        write!(text, " ({v})").unwrap();
    }
    text.push('\n');
    for c in &r.hypotheses {
        writeln!(text, "  hypothesis {}: {}  {}", c.name, if c.passed { "holds" } else { "fails" }, c.evidence).unwrap();
    }
    if !r.hypotheses_met {
        text.push_str("hypotheses not met; conclusions not evaluated\n");
    }
    for c in &r.conclusions {
        writeln!(text, "  {} {}  {}", if c.passed { "pass" } else { "FAIL" }, c.name, c.evidence).unwrap();
    }
    for c in &r.classifications {
        writeln!(text, "  {}: {}", c.subject, c.result).unwrap();
    }
    if let Some(m) = &r.counterexample {
        write!(text, "COUNTEREXAMPLE\n{m}").unwrap();
    }
    text
}

pub fn cmd_audit(path: &Path, theorem: TheoremId, opts: &AuditOptions, partner: Option<&Path>) -> Result<Outcome> {
    let started = Instant::now();
    let raw = read(path)?;
    let a = parse_matrix(&raw)?;
    let mut opts = opts.clone();
    let mut inputs = vec![raw.into_bytes()];
    let mut command = vec!["audit".to_string(), path.display().to_string(), theorem.to_string()];
    if let Some(p) = partner {
        let raw_b = read(p)?;
        opts.partner = Some(parse_matrix(&raw_b)?);
        inputs.push(raw_b.into_bytes());
        command.extend(["--with".to_string(), p.display().to_string()]);
    }
    let r = run_audit(theorem, &a, &opts)?;
    let exit = if r.passed() { EXIT_OK } else { EXIT_VIOLATION };
    let parts: Vec<&[u8]> = inputs.iter().map(Vec::as_slice).collect();
    let report = RunReport {
        schema: SCHEMA,
        command,
        input_digest: digest(&parts),
        results: to_value(&r),
        elapsed_ms: started.elapsed().as_millis() as u64,
    };
    Ok(Outcome { report, text: render_audit(&r), exit })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExploreTarget {
    ExactOrder,
    Conjecture1,
    Conjecture2,
    NegEntries,
}

/// Everything `explore` accepts. `None` fields take per-target defaults.
#[derive(Debug, Clone)]
pub struct ExploreOptions {
    pub target: ExploreTarget,
    pub order: usize,
    pub k: Option<usize>,
    pub variant: Variant,
    pub template: Option<String>,
    pub seed: u64,
    pub attempts: usize,
    pub max_hits: Option<usize>,
    pub numerator_bound: Option<u32>,
    pub denominator_bound: Option<u32>,
    pub diagonal: Option<(u32, u32)>,
    pub positive_percent: Option<u8>,
    pub out: Option<PathBuf>,
}

impl ExploreOptions {
    pub fn new(target: ExploreTarget, order: usize, seed: u64) -> Self {
        ExploreOptions {
            target,
            order,
            k: None,
            variant: Variant::E0,
            template: None,
            seed,
            attempts: 10_000,
            max_hits: None,
            numerator_bound: None,
            denominator_bound: None,
            diagonal: None,
            positive_percent: None,
            out: None,
        }
    }

    /// The generator configuration these options describe.
    pub fn config(&self) -> Result<GeneratorConfig> {
        let template = match (&self.template, self.target) {
            (Some(name), _) => SignTemplate::named(name, self.order)?,
            (None, ExploreTarget::Conjecture1) => SignTemplate::z(self.order),
            (None, ExploreTarget::Conjecture2) => SignTemplate::nonnegative_diagonal(self.order),
            (None, _) => SignTemplate::negative_off_diagonal(self.order, self.variant),
        };
        let positive = match (self.positive_percent, self.target) {
            (Some(p), _) => p,
            (None, ExploreTarget::Conjecture2) => 10,
            (None, _) => 50,
        };
        // the conjecture targets default to small integer entries and a
        // dominant diagonal, where exact order 2 is common enough to sample
        let conjecture = matches!(self.target, ExploreTarget::Conjecture1 | ExploreTarget::Conjecture2);
        let (num, den, diagonal) = if conjecture { (3, 1, Some((1, 5))) } else { (5, 5, None) };
        let mut cfg = GeneratorConfig::new(template, self.seed)
            .bounds(self.numerator_bound.unwrap_or(num), self.denominator_bound.unwrap_or(den))
            .free_positive(positive)
            .attempts(self.attempts);
        if let Some((lo, hi)) = self.diagonal.or(diagonal) {
            cfg = cfg.diagonal(lo, hi);
        }
        if let Some(h) = self.max_hits {
            cfg = cfg.hit_limit(h);
        }
        cfg.validate()?;
        Ok(cfg)
    }

    fn need_k(&self) -> Result<usize> {
        self.k.ok_or_else(|| Error::InvalidConfig("this target needs --k".into()))
    }
}

fn write_matrices(dir: &Path, prefix: &str, items: impl Iterator<Item = (u64, RatMatrix)>) -> Result<usize> {
    let mut count = 0;
    for (attempt, m) in items {
        write(&dir.join(format!("{prefix}-{attempt:08}.txt")), &format_matrix(&m))?;
        count += 1;
    }
    Ok(count)
}

fn render_search(r: &SearchReport) -> String {
    let mut text = format!(
        "target: {}\nattempts: {}\nhits: {}\n",
        serde_json::to_string(&r.target).expect("serializable"),
        r.attempts,
        r.hit_count()
    );
    for (tag, count) in &r.tallies {
        writeln!(text, "  {tag}: {count}").unwrap();
    }
    writeln!(text, "counterexamples: {}", r.counterexamples.len()).unwrap();
    let show = |text: &mut String, c: &Counterexample, label: &str| {
        write!(text, "{label} at attempt {}: {} ({})\n{}", c.attempt, c.conclusion, c.evidence, c.matrix).unwrap();
    };
    for c in &r.counterexamples {
        show(&mut text, c, "counterexample");
    }
    if !r.unvalidated.is_empty() {
        writeln!(text, "UNVALIDATED findings: {} (a defect, not a counterexample)", r.unvalidated.len()).unwrap();
        for c in &r.unvalidated {
            show(&mut text, c, "unvalidated");
        }
    }
    writeln!(text, "note: {}", r.note).unwrap();
    text
}

pub fn run_search(opts: &ExploreOptions) -> Result<SearchReport> {
    let cfg = opts.config()?;
    match opts.target {
        ExploreTarget::ExactOrder => search_exact_order(opts.need_k()?, opts.variant, &cfg),
        ExploreTarget::Conjecture1 => search_conjecture_1(&cfg),
        ExploreTarget::Conjecture2 => search_conjecture_2(&cfg),
        ExploreTarget::NegEntries => search_negative_entries_question(opts.need_k()?, opts.variant, &cfg),
    }
}

pub fn cmd_explore(opts: &ExploreOptions) -> Result<Outcome> {
    let started = Instant::now();
    let r = run_search(opts)?;
    let mut text = render_search(&r);
    if let Some(dir) = &opts.out {
        let hits = write_matrices(&dir.join("hits"), "hit", r.hits.iter().map(|h| (h.attempt, h.matrix.clone())))?;
        let cex = write_matrices(
            &dir.join("counterexamples"),
            "cex",
            r.counterexamples.iter().map(|c| (c.attempt, c.matrix.clone())),
        )?;
        write_matrices(&dir.join("unvalidated"), "unvalidated", r.unvalidated.iter().map(|c| (c.attempt, c.matrix.clone())))?;
        writeln!(text, "wrote {hits} hit and {cex} counterexample files under {}", dir.display()).unwrap();
    }
    let exit = if r.counterexamples.is_empty() && r.unvalidated.is_empty() { EXIT_OK } else { EXIT_VIOLATION };
    let identity = json!({"target": r.target, "config": r.config});
    let report = RunReport {
        schema: SCHEMA,
        command: vec!["explore".into(), serde_json::to_string(&opts.target).expect("serializable").trim_matches('"').into()],
        input_digest: digest(&[identity.to_string().as_bytes()]),
        results: to_value(&r),
        elapsed_ms: started.elapsed().as_millis() as u64,
    };
    Ok(Outcome { report, text, exit })
}

/// `q0_trials > 0` also samples `q` vectors against the Q0 property.
pub fn cmd_lcp(q_path: &Path, a_path: &Path, q0_trials: usize, seed: u64) -> Result<Outcome> {
    let started = Instant::now();
    let raw_q = read(q_path)?;
    let raw_a = read(a_path)?;
    let q = parse_vector(&raw_q)?;
    let a = parse_matrix(&raw_a)?;
    let inst = LcpInstance::new(q, a.clone())?;
    let feasibility = lcp_feasible(&inst);
    let sols = lcp_solve_enum(&inst);
    let checks: Vec<bool> = sols.solutions.iter().map(|s| s.verify(&inst)).collect();
    let list = |v: &[Rational]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");

    let mut text = match feasibility.certificate() {
        Some(z) => format!("feasible: yes  (z = ({}))\n", list(z)),
        None => "feasible: no\n".to_string(),
    };
    writeln!(text, "solutions: {}", sols.solutions.len()).unwrap();
    for (s, ok) in sols.solutions.iter().zip(&checks) {
        writeln!(
            text,
            "  z = ({})  w = ({})  support {}  substitution {}",
            list(&s.z),
            list(&s.w),
            s.support,
            if *ok { "ok" } else { "FAILED" }
        )
        .unwrap();
    }
    if !sols.singular_supports.is_empty() {
        writeln!(text, "skipped {} supports with a singular block", sols.singular_supports.len()).unwrap();
    }
    let q0 = if q0_trials > 0 {
        let r = q0_falsify(&a, q0_trials, seed)?;
        writeln!(text, "Q0 sampling: {} trials, {} feasible, {} solved; {}", r.trials, r.feasible, r.solved, r.note).unwrap();
        if let Some(q) = &r.counterexample {
            writeln!(text, "Q0 VIOLATION at q = ({})", list(q)).unwrap();
        }
        Some(r)
    } else {
        None
    };
    let violated = checks.iter().any(|ok| !ok) || q0.as_ref().is_some_and(|r| r.violation_found());
    let mut command = vec!["lcp".to_string(), q_path.display().to_string(), a_path.display().to_string()];
    if q0_trials > 0 {
        command.extend(["--attempts".into(), q0_trials.to_string(), "--seed".into(), seed.to_string()]);
    }
    let report = RunReport {
        schema: SCHEMA,
        command,
        input_digest: digest(&[raw_q.as_bytes(), raw_a.as_bytes()]),
        results: json!({
            "feasibility": feasibility,
            "solutions": sols.solutions,
            "verified": checks,
            "singular_supports": sols.singular_supports,
            "q0": q0,
        }),
        elapsed_ms: started.elapsed().as_millis() as u64,
    };
    Ok(Outcome { report, text, exit: if violated { EXIT_VIOLATION } else { EXIT_OK } })
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VariantArg {
    E0,
    E,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::E0 => Variant::E0,
            VariantArg::E => Variant::E,
        }
    }
}

fn parse_range(s: &str) -> std::result::Result<(u32, u32), String> {
    let (lo, hi) = s.split_once(':').ok_or("expected LO:HI")?;
    let lo = lo.parse().map_err(|_| format!("bad lower bound {lo:?}"))?;
    let hi = hi.parse().map_err(|_| format!("bad upper bound {hi:?}"))?;
    Ok((lo, hi))
}

#[derive(Debug, Parser)]
#[command(name = "semimono", version, about = "Exact classification of matrices in the semimonotone hierarchy")]
struct Args {
    /// Print the JSON report instead of the table.
    #[arg(long, global = true)]
    json: bool,
    /// Directory for report.json (and, for explore, matrix files).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Membership in every class plus exact orders.
    Classify { file: PathBuf },
    /// Check one structural result on a matrix.
    Audit {
        file: PathBuf,
        /// structure3, inverse3, neg-entries, z-order2, invariance,
        /// n-eq-k-plus-1, sym-copositive or nonclosure.
        theorem: String,
        #[arg(long, value_enum, default_value = "e0")]
        variant: VariantArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Rounds of random transformations for the invariance audit.
        #[arg(long, default_value_t = 1)]
        attempts: usize,
        /// Second matrix for the nonclosure audit.
        #[arg(long = "with")]
        partner: Option<PathBuf>,
    },
    /// Seeded random search.
    Explore {
        #[arg(value_enum)]
        target: ExploreTarget,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value = "e0")]
        variant: VariantArg,
        /// One of neg-off, z, diag-nonneg, nonneg, free.
        #[arg(long)]
        template: Option<String>,
        #[arg(long, default_value_t = 10_000)]
        attempts: usize,
        #[arg(long)]
        max_hits: Option<usize>,
        /// Numerator bound (default 5, or 3 for the conjectures).
        #[arg(long)]
        numerator: Option<u32>,
        /// Denominator bound (default 5, or 1 for the conjectures).
        #[arg(long)]
        denominator: Option<u32>,
        /// Diagonal magnitudes as LO:HI (default 1:5 for the conjectures).
        #[arg(long, value_parser = parse_range)]
        diagonal: Option<(u32, u32)>,
        /// Chance in percent that a free entry is positive.
        #[arg(long)]
        positive_percent: Option<u8>,
    },
    /// Solve LCP(q, A) by support enumeration.
    Lcp {
        q_file: PathBuf,
        a_file: PathBuf,
        /// Also sample this many q vectors against Q0.
        #[arg(long, default_value_t = 0)]
        attempts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Captured result of one command line.
#[derive(Debug, Clone)]
pub struct Invocation {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn dispatch(args: Args) -> Result<Outcome> {
    let out = args.out.clone();
    match args.verb {
        Verb::Classify { file } => cmd_classify(&file),
        Verb::Audit { file, theorem, variant, seed, attempts, partner } => {
            let id: TheoremId = theorem.parse()?;
            let opts = AuditOptions { variant: variant.into(), seed, rounds: attempts, partner: None };
            cmd_audit(&file, id, &opts, partner.as_deref())
        }
        Verb::Explore {
            target,
            seed,
            n,
            k,
            variant,
            template,
            attempts,
            max_hits,
            numerator,
            denominator,
            diagonal,
            positive_percent,
        } => {
            if let Some(t) = &template {
                if !TEMPLATE_NAMES.contains(&t.as_str()) && t != "structure3" {
                    return Err(Error::InvalidConfig(format!("unknown template {t:?}")));
                }
            }
            let opts = ExploreOptions {
                target,
                order: n,
                k,
                variant: variant.into(),
                template,
                seed,
                attempts,
                max_hits,
                numerator_bound: numerator,
                denominator_bound: denominator,
                diagonal,
                positive_percent,
                out,
            };
            cmd_explore(&opts)
        }
        Verb::Lcp { q_file, a_file, attempts, seed } => cmd_lcp(&q_file, &a_file, attempts, seed),
    }
}

/// Parses and runs one command line (program name first) without touching
/// the process's stdout or exit status.
pub fn run<I, T>(argv: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let echo: Vec<String> = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let args = match Args::try_parse_from(&argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            return if code == EXIT_OK {
                Invocation { code, stdout: rendered, stderr: String::new() }
            } else {
                Invocation { code, stdout: String::new(), stderr: rendered }
            };
        }
    };
    let json_out = args.json;
    let out = args.out.clone();
    let mut outcome = match dispatch(args) {
        Ok(o) => o,
        Err(e) => return Invocation { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {e}\n") },
    };
    outcome.report.command = echo;
    let rendered = serde_json::to_string_pretty(&outcome.report).expect("report serializes") + "\n";
    if let Some(dir) = out {
        if let Err(e) = write(&dir.join("report.json"), &rendered) {
            return Invocation { code: EXIT_USAGE, stdout: outcome.text, stderr: format!("error: {e}\n") };
        }
    }
    let stdout = if json_out { rendered } else { outcome.text };
    Invocation { code: outcome.exit, stdout, stderr: String::new() }
}
