//! Closed-form minimal dimension for type A, two ways, plus the strict
//! monotonicity of the minimal dimension along dominance covers.
//!
//! Both formulas take a partition of `n` and return the dimension of the
//! minimal ideals for the corresponding orbit of `sl(n)`. The second is a
//! linear rewriting of the first; they must always agree, and both must
//! agree with the rank-side lower bound, which the tests enforce.

use crate::partitions::Partition;

/// Number of Dynkin-element entries that are at most `l`:
/// `sum_i max(min(floor((part_i + l + 1) / 2), part_i), 0)`.
pub fn count_entries_le(lambda: &Partition, l: i64) -> i64 {
    lambda
        .parts()
        .iter()
        .map(|&p| {
            let p = p as i64;
            ((p + l + 1).div_euclid(2)).min(p).max(0)
        })
        .sum()
}

/// Minimal ideal dimension via entry counts:
/// `n(n+1)/2 + sum_i (-A(part_i - 1) + A(-part_i - 1)) + sum_j m_j(m_j-1)/2`
/// where `A` counts Dynkin entries and `m_j` are the part multiplicities.
pub fn m_closed(lambda: &Partition) -> i64 {
    let n = lambda.total() as i64;
    let counts: i64 = lambda
        .parts()
        .iter()
        .map(|&p| {
            let p = p as i64;
            -count_entries_le(lambda, p - 1) + count_entries_le(lambda, -p - 1)
        })
        .sum();
    let repeats: i64 = lambda
        .exponential_form()
        .iter()
        .map(|&(_, m)| (m as i64) * (m as i64 - 1) / 2)
        .sum();
    n * (n + 1) / 2 + counts + repeats
}

/// The linear form of the same dimension:
/// `n(n+1)/2 - sum_i (2i-1) part_i + sum_j m_j(m_j-1)/2`.
pub fn m_linear(lambda: &Partition) -> i64 {
    let n = lambda.total() as i64;
    let weighted: i64 = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| (2 * i as i64 + 1) * p as i64)
        .sum();
    let repeats: i64 = lambda
        .exponential_form()
        .iter()
        .map(|&(_, m)| (m as i64) * (m as i64 - 1) / 2)
        .sum();
    n * (n + 1) / 2 - weighted + repeats
}

/// Both evaluations of the minimal dimension, side by side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaAgreement {
    pub by_counts: i64,
    pub by_weights: i64,
}

impl FormulaAgreement {
    pub fn agree(&self) -> bool {
        self.by_counts == self.by_weights
    }
}

/// Evaluates the dimension through both routes.
pub fn both_forms(lambda: &Partition) -> FormulaAgreement {
    FormulaAgreement {
        by_counts: m_closed(lambda),
        by_weights: m_linear(lambda),
    }
}

/// One strictness violation: a cover whose minimal dimension fails to drop.
#[derive(Debug, Clone)]
pub struct MonotoneViolation {
    pub upper: Partition,
    pub lower: Partition,
    pub upper_m: i64,
    pub lower_m: i64,
}

/// Monotonicity sweep over all partitions of `n`.
#[derive(Debug, Clone)]
pub struct MonotoneReport {
    pub n: usize,
    pub covers_checked: usize,
    pub violations: Vec<MonotoneViolation>,
}

impl MonotoneReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that the minimal dimension drops strictly along every dominance
/// cover among partitions of `n`.
pub fn check_monotone(n: usize) -> MonotoneReport {
    let mut report = MonotoneReport {
        n,
        covers_checked: 0,
        violations: Vec::new(),
    };
    for lambda in Partition::all(n) {
        let upper_m = m_linear(&lambda);
        for d in lambda.covered_by() {
            report.covers_checked += 1;
            let lower_m = m_linear(&d);
            if lower_m >= upper_m {
                report.violations.push(MonotoneViolation {
                    upper: lambda.clone(),
                    lower: d,
                    upper_m,
                    lower_m,
                });
            }
        }
    }
    report
}
