use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::classify::Variant;
use crate::error::{Error, Result};
use crate::ratcore::{RatMatrix, Rational};

/// Sign constraint on one generated entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EntrySign {
    Negative,
    Nonpositive,
    Nonnegative,
    Positive,
    Free,
}

impl EntrySign {
    pub fn admits(self, x: &Rational) -> bool {
        use num_traits::Signed;
        match self {
            EntrySign::Negative => x.is_negative(),
            EntrySign::Nonpositive => !x.is_positive(),
            EntrySign::Nonnegative => !x.is_negative(),
            EntrySign::Positive => x.is_positive(),
            EntrySign::Free => true,
        }
    }
}

/// Per-entry sign constraints for an `n × n` matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignTemplate {
    order: usize,
    /// Row-major.
    entries: Vec<EntrySign>,
}

/// Named templates accepted by [`SignTemplate::named`].
pub const TEMPLATE_NAMES: [&str; 5] = ["neg-off", "z", "diag-nonneg", "nonneg", "free"];

impl SignTemplate {
    pub fn new(order: usize, entries: Vec<EntrySign>) -> Result<Self> {
        if order == 0 || entries.len() != order * order {
            return Err(Error::InvalidConfig(format!(
                "template for order {order} needs {} entries, got {}",
                order * order,
                entries.len()
            )));
        }
        Ok(SignTemplate { order, entries })
    }

    /// One sign on the diagonal, another off it.
    pub fn uniform(order: usize, diagonal: EntrySign, off_diagonal: EntrySign) -> Self {
        let entries = (0..order * order)
            .map(|p| if p / order == p % order { diagonal } else { off_diagonal })
            .collect();
        SignTemplate { order, entries }
    }

    /// Diagonal `≥ 0` (`> 0` for `E`), off-diagonal `< 0`: the shape every
    /// 3×3 exact-order-2 matrix has.
    pub fn negative_off_diagonal(order: usize, variant: Variant) -> Self {
        let diagonal = match variant {
            Variant::E0 => EntrySign::Nonnegative,
            Variant::E => EntrySign::Positive,
        };
        Self::uniform(order, diagonal, EntrySign::Negative)
    }

    /// Z-matrices with nonnegative diagonal.
    pub fn z(order: usize) -> Self {
        Self::uniform(order, EntrySign::Nonnegative, EntrySign::Nonpositive)
    }

    /// Nonnegative diagonal, unconstrained off-diagonal.
    pub fn nonnegative_diagonal(order: usize) -> Self {
        Self::uniform(order, EntrySign::Nonnegative, EntrySign::Free)
    }

    pub fn nonnegative(order: usize) -> Self {
        Self::uniform(order, EntrySign::Nonnegative, EntrySign::Nonnegative)
    }

    pub fn free(order: usize) -> Self {
        Self::uniform(order, EntrySign::Free, EntrySign::Free)
    }

    /// Looks up one of [`TEMPLATE_NAMES`]; `structure3` is accepted for
    /// `neg-off`.
    pub fn named(name: &str, order: usize) -> Result<Self> {
        Ok(match name {
            "neg-off" | "structure3" => Self::negative_off_diagonal(order, Variant::E0),
            "z" => Self::z(order),
            "diag-nonneg" => Self::nonnegative_diagonal(order),
            "nonneg" => Self::nonnegative(order),
            "free" => Self::free(order),
            other => {
                return Err(Error::InvalidConfig(format!(
                    "unknown template {other:?}; expected one of {}",
                    TEMPLATE_NAMES.join(", ")
                )))
            }
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> EntrySign {
        self.entries[i * self.order + j]
    }

    /// True iff `a` has the template's order and every entry obeys it.
    pub fn matches(&self, a: &RatMatrix) -> bool {
        a.rows() == self.order
            && a.cols() == self.order
            && (0..self.order).all(|i| (0..self.order).all(|j| self.get(i, j).admits(&a[(i, j)])))
    }
}

impl Serialize for SignTemplate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<&[EntrySign]> = self.entries.chunks(self.order).collect();
        rows.serialize(s)
    }
}

/// Sampling parameters. Entry `(i, j)` of attempt `t` is `±p/q` with
/// `q ∈ [1, denominator_bound]` and `p ∈ [0, numerator_bound]` (or
/// `diagonal_range` on the diagonal), its sign fixed by the template or,
/// for `Free` entries, drawn with `free_positive_percent`.
/// Attempt `t` draws from its own ChaCha8 stream, so a matrix depends only
/// on `(seed, t)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorConfig {
    pub template: SignTemplate,
    pub numerator_bound: u32,
    pub denominator_bound: u32,
    /// Inclusive numerator magnitude range for diagonal entries.
    pub diagonal_range: Option<(u32, u32)>,
    /// Percentage of `Free` entries drawn positive (the rest are drawn
    /// nonpositive).
    pub free_positive_percent: u8,
    pub seed: u64,
    pub max_attempts: usize,
    /// Stop after this many hits.
    pub max_hits: Option<usize>,
}

impl GeneratorConfig {
    /// Bounds 5/5, 10 000 attempts, no hit limit.
    pub fn new(template: SignTemplate, seed: u64) -> Self {
        GeneratorConfig {
            template,
            numerator_bound: 5,
            denominator_bound: 5,
            diagonal_range: None,
            free_positive_percent: 50,
            seed,
            max_attempts: 10_000,
            max_hits: None,
        }
    }

    pub fn bounds(mut self, numerator: u32, denominator: u32) -> Self {
        self.numerator_bound = numerator;
        self.denominator_bound = denominator;
        self
    }

    pub fn diagonal(mut self, lo: u32, hi: u32) -> Self {
        self.diagonal_range = Some((lo, hi));
        self
    }

    pub fn free_positive(mut self, percent: u8) -> Self {
        self.free_positive_percent = percent;
        self
    }

    pub fn attempts(mut self, max_attempts: usize) -> Self {
        self.max_attempts = max_attempts;
        self
    }

    pub fn hit_limit(mut self, max_hits: usize) -> Self {
        self.max_hits = Some(max_hits);
        self
    }

    pub fn order(&self) -> usize {
        self.template.order()
    }

    pub fn validate(&self) -> Result<()> {
        if self.numerator_bound < 1 || self.denominator_bound < 1 {
            return Err(Error::InvalidConfig("numerator and denominator bounds must be at least 1".into()));
        }
        if let Some((lo, hi)) = self.diagonal_range {
            if lo > hi || hi < 1 {
                return Err(Error::InvalidConfig(format!("empty diagonal range [{lo}, {hi}]")));
            }
        }
        if self.free_positive_percent > 100 {
            return Err(Error::InvalidConfig(format!("free_positive_percent {} exceeds 100", self.free_positive_percent)));
        }
        if self.max_hits == Some(0) {
            return Err(Error::InvalidConfig("hit limit must be at least 1".into()));
        }
        Ok(())
    }

    /// The matrix of attempt `attempt`.
    pub fn sample(&self, attempt: u64) -> RatMatrix {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(attempt);
        let n = self.order();
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let (lo, hi) = match self.diagonal_range {
                    Some(r) if i == j => r,
                    _ => (0, self.numerator_bound),
                };
                data.push(self.entry(&mut rng, self.template.get(i, j), lo, hi));
            }
        }
        RatMatrix::new(n, n, data).expect("n*n entries")
    }

    fn entry(&self, rng: &mut ChaCha8Rng, sign: EntrySign, lo: u32, hi: u32) -> Rational {
        let strict = matches!(sign, EntrySign::Negative | EntrySign::Positive);
        let lo = if strict { lo.max(1) } else { lo };
        let hi = hi.max(lo);
        let p = i64::from(rng.random_range(lo..=hi));
        let q = i64::from(rng.random_range(1..=self.denominator_bound));
        let negative = match sign {
            EntrySign::Negative | EntrySign::Nonpositive => true,
            EntrySign::Positive | EntrySign::Nonnegative => false,
            EntrySign::Free => rng.random_range(0..100u8) >= self.free_positive_percent,
        };
        Rational::new(if negative { -p } else { p }.into(), q.into())
    }
}

/// Deterministic stream of `config.max_attempts` matrices matching the
/// template.
pub fn generate(config: &GeneratorConfig) -> Result<impl Iterator<Item = RatMatrix> + '_> {
    config.validate()?;
    Ok((0..config.max_attempts as u64).map(move |t| config.sample(t)))
}

impl fmt::Display for EntrySign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EntrySign::Negative => "<0",
            EntrySign::Nonpositive => "<=0",
            EntrySign::Nonnegative => ">=0",
            EntrySign::Positive => ">0",
            EntrySign::Free => "any",
        })
    }
}

impl FromStr for EntrySign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "<0" | "negative" => EntrySign::Negative,
            "<=0" | "nonpositive" => EntrySign::Nonpositive,
            ">=0" | "nonnegative" => EntrySign::Nonnegative,
            ">0" | "positive" => EntrySign::Positive,
            "any" | "free" => EntrySign::Free,
            other => return Err(Error::InvalidConfig(format!("unknown entry sign {other:?}"))),
        })
    }
}
