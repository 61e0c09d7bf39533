use super::{ExactOrder, ExactOrderResult, Family, LevelStatus, OrderLevel, Variant, Witness};
use crate::error::{Error, Result};
use crate::ratcore::IndexSet;

/// Orders above this are refused by the enumerating classifiers; the table
/// holds `2^n` entries.
pub const MAX_ENUM_ORDER: usize = 20;

/// Class membership of every principal submatrix of one matrix, for a
/// hereditary class.
///
/// Filled in canonical support order (size, then lexicographic). A support
/// is in the class iff every support one smaller is, and the local test
/// passes. The local test only runs when all proper subsupports are
/// members, so a matrix with a failing diagonal never solves an LP.
#[derive(Debug, Clone)]
pub struct MembershipTable {
    n: usize,
    in_class: Vec<bool>,
    /// Supports that failed the local test, in canonical order.
    failures: Vec<(IndexSet, Witness)>,
}

impl MembershipTable {
    pub(crate) fn build<F>(n: usize, local_failure: F) -> Result<Self>
    where
        F: FnMut(&IndexSet) -> Option<Witness>,
    {
        Self::fill(n, false, local_failure)
    }

    /// Stops at the first failing support. Entries after it stay `false`,
    /// so only [`MembershipTable::first_failure`] is meaningful when the
    /// full matrix is not a member.
    pub(crate) fn build_until_failure<F>(n: usize, local_failure: F) -> Result<Self>
    where
        F: FnMut(&IndexSet) -> Option<Witness>,
    {
        Self::fill(n, true, local_failure)
    }

    fn fill<F>(n: usize, stop_on_failure: bool, mut local_failure: F) -> Result<Self>
    where
        F: FnMut(&IndexSet) -> Option<Witness>,
    {
        if n > MAX_ENUM_ORDER {
            return Err(Error::OrderTooLarge { order: n, max: MAX_ENUM_ORDER });
        }
        let mut in_class = vec![false; 1 << n];
        in_class[0] = true;
        let mut failures = Vec::new();
        for alpha in IndexSet::nonempty_subsets(n) {
            let mask = alpha.mask();
            let subs_ok = (0..n).filter(|&i| mask & (1 << i) != 0).all(|i| in_class[(mask & !(1 << i)) as usize]);
            if !subs_ok {
                continue;
            }
            match local_failure(&alpha) {
                None => in_class[mask as usize] = true,
                Some(w) => {
                    failures.push((alpha, w));
                    if stop_on_failure {
                        break;
                    }
                }
            }
        }
        Ok(MembershipTable { n, in_class, failures })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn contains(&self, alpha: &IndexSet) -> bool {
        assert_eq!(alpha.universe(), self.n);
        self.in_class[alpha.mask() as usize]
    }

    /// True iff the whole matrix is in the class.
    pub fn full_member(&self) -> bool {
        self.contains(&IndexSet::full(self.n))
    }

    /// First support (canonical order) whose own block fails, with its
    /// certificate. Every nonmember support contains one of these.
    pub fn first_failure(&self) -> Option<&(IndexSet, Witness)> {
        self.failures.first()
    }

    /// First minimal failing support strictly smaller than the full set.
    pub fn first_proper_failure(&self) -> Option<&(IndexSet, Witness)> {
        self.failures.iter().find(|(a, _)| a.len() < self.n)
    }

    pub fn level(&self, order: usize) -> OrderLevel {
        let mut members = 0;
        let mut total = 0;
        for alpha in IndexSet::of_size(self.n, order) {
            total += 1;
            if self.contains(&alpha) {
                members += 1;
            }
        }
        let status = if members == total {
            LevelStatus::All
        } else if members == 0 {
            LevelStatus::None
        } else {
            LevelStatus::Mixed
        };
        OrderLevel { order, status, members, total }
    }

    /// Per-order profile and the exact order it determines.
    ///
    /// Walks down from order `n` past the `NONE` levels; if it reaches
    /// order 0 the exact order is `n` (the order-0 condition is vacuous),
    /// if it stops at an `ALL` level of order `m` the exact order is
    /// `n − m`, and a `MIXED` stopping level means no exact order exists.
    pub fn exact_order(&self, family: Family, variant: Variant) -> ExactOrderResult {
        let evidence: Vec<OrderLevel> = (1..=self.n).map(|m| self.level(m)).collect();
        let mut m = self.n;
        while m >= 1 && evidence[m - 1].status == LevelStatus::None {
            m -= 1;
        }
        let outcome = if m == 0 || evidence[m - 1].status == LevelStatus::All {
            ExactOrder::Exact(self.n - m)
        } else {
            ExactOrder::NoExactOrder
        };
        ExactOrderResult { family, variant, outcome, evidence }
    }
}
