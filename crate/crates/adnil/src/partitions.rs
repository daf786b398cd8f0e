//! Partitions labelling nilpotent orbits, dominance order, covering moves.
//!
//! Orbit labels are type-constrained: type B needs even parts with even
//! multiplicity, type C odd parts with even multiplicity, type D even parts
//! with even multiplicity plus an I/II tag when the partition is very even.

pub use crate::roots::Kind;
use crate::{Error, Result};
use std::fmt;

/// A partition: non-increasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Partition> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput(
                "partition parts must be positive".into(),
            ));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "parts must be non-increasing, got {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// Accepts parts in any order.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Partition> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    /// Parses the external text format: comma-separated descending integers,
    /// e.g. `4,2`.
    pub fn parse(text: &str) -> Result<Partition> {
        let parts: Vec<usize> = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidInput(format!("bad partition entry {t:?}")))
            })
            .collect::<Result<_>>()?;
        if parts.is_empty() {
            return Err(Error::InvalidInput("empty partition".into()));
        }
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn multiplicity(&self, value: usize) -> usize {
        self.parts.iter().filter(|&&p| p == value).count()
    }

    /// Groups equal parts: `[5,5,3,3]` gives `[(5,2),(3,2)]`, values strictly
    /// decreasing.
    pub fn exponential_form(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Standard dominance: `self <= other` iff every partial sum of `self`
    /// is bounded by the matching partial sum of `other`. Orbits satisfy
    /// `O_mu` contained in the closure of `O_lambda` iff `mu <= lambda`.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.total() != other.total() {
            return Err(Error::InvalidInput(format!(
                "dominance compares partitions of equal totals ({} vs {})",
                self.total(),
                other.total()
            )));
        }
        let k = self.parts.len().max(other.parts.len());
        let mut a = 0usize;
        let mut b = 0usize;
        for i in 0..k {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Partitions covered by `self` in dominance order, via the single-box
    /// move: pick `i`, the smallest `j > i` with `part_j < part_i - 1`
    /// (beyond-the-end parts count as zero), require either
    /// `part_j = part_i - 2` or all parts strictly between equal `part_i`,
    /// then move one box from row `i` to row `j`.
    pub fn covered_by(&self) -> Vec<Partition> {
        let p = &self.parts;
        let mut out: Vec<Partition> = Vec::new();
        for i in 0..p.len() {
            if p[i] < 2 {
                continue;
            }
            let part = |k: usize| -> usize { p.get(k).copied().unwrap_or(0) };
            let Some(j) = (i + 1..=p.len()).find(|&k| part(k) < p[i] - 1) else {
                continue;
            };
            let ok = part(j) == p[i] - 2 || (i + 1..j).all(|k| part(k) == p[i]);
            if !ok {
                continue;
            }
            let mut q = p.clone();
            if j == q.len() {
                q.push(0);
            }
            q[i] -= 1;
            q[j] += 1;
            q.retain(|&x| x > 0);
            q.sort_unstable_by(|a, b| b.cmp(a));
            let cand = Partition { parts: q };
            if !out.contains(&cand) {
                out.push(cand);
            }
        }
        out
    }

    /// All partitions of `n` in descending lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(
            remaining: usize,
            max_part: usize,
            prefix: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if remaining == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for part in (1..=remaining.min(max_part)).rev() {
                prefix.push(part);
                rec(remaining - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", text.join(","))
    }
}

/// Rank of the reductive centralizer of a nilpotent element with Jordan type
/// `p` in the algebra of the given kind: GL factors for type A; for the
/// other types, one parity class of part multiplicities feeds symplectic
/// factors and the other orthogonal ones.
pub fn centralizer_rank_parts(kind: Kind, p: &Partition) -> usize {
    match kind {
        Kind::A => p.parts().len() - 1,
        // Sp(m) on one parity class (m even there, rank m/2) and O(m) on the
        // other (rank floor(m/2)); both reduce to floor(m/2) per part value.
        Kind::B | Kind::C | Kind::D => p.exponential_form().iter().map(|&(_, m)| m / 2).sum(),
    }
}

/// Tag distinguishing the two orbits of a very even type-D partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    I,
    II,
}

impl Variant {
    pub fn parse(s: &str) -> Result<Variant> {
        match s.trim() {
            "I" | "i" | "1" => Ok(Variant::I),
            "II" | "ii" | "2" => Ok(Variant::II),
            other => Err(Error::InvalidInput(format!(
                "unknown variant {other:?}; expected I or II"
            ))),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::I => write!(f, "I"),
            Variant::II => write!(f, "II"),
        }
    }
}

/// A nilpotent orbit of a classical algebra: a type-constrained partition,
/// plus a variant tag exactly when the partition is very even in type D.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitLabel {
    kind: Kind,
    partition: Partition,
    variant: Option<Variant>,
}

impl OrbitLabel {
    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn variant(&self) -> Option<Variant> {
        self.variant
    }

    /// Build parameter of the ambient root system: matrix size for A,
    /// rank for B/C/D.
    pub fn system_size(&self) -> usize {
        match self.kind {
            Kind::A => self.partition.total(),
            Kind::B => (self.partition.total() - 1) / 2,
            Kind::C | Kind::D => self.partition.total() / 2,
        }
    }

    pub fn is_very_even(&self) -> bool {
        self.kind == Kind::D && is_very_even(&self.partition)
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.partition)?;
        if let Some(v) = self.variant {
            write!(f, " ({v})")?;
        }
        Ok(())
    }
}

fn is_very_even(p: &Partition) -> bool {
    p.parts().iter().all(|&x| x % 2 == 0)
}

/// Checks that `parts` labels a nilpotent orbit of the given kind and total,
/// returning the label — or both labels for a very even type-D partition.
pub fn validate(kind: Kind, total: usize, parts: &[usize]) -> Result<Vec<OrbitLabel>> {
    let partition = Partition::new(parts.to_vec())?;
    if partition.total() != total {
        return Err(Error::Validation(format!(
            "partition {partition} sums to {}, expected {total}",
            partition.total()
        )));
    }
    kind.size_for_total(total)?;
    let exp = partition.exponential_form();
    match kind {
        Kind::A => {}
        Kind::B | Kind::D => {
            for &(v, m) in &exp {
                if v % 2 == 0 && m % 2 != 0 {
                    return Err(Error::Validation(format!(
                        "type {kind} requires even parts with even multiplicity; part {v} appears {m} times"
                    )));
                }
            }
        }
        Kind::C => {
            for &(v, m) in &exp {
                if v % 2 == 1 && m % 2 != 0 {
                    return Err(Error::Validation(format!(
                        "type C requires odd parts with even multiplicity; part {v} appears {m} times"
                    )));
                }
            }
        }
    }
    if kind == Kind::D && is_very_even(&partition) {
        Ok(vec![
            OrbitLabel {
                kind,
                partition: partition.clone(),
                variant: Some(Variant::I),
            },
            OrbitLabel {
                kind,
                partition,
                variant: Some(Variant::II),
            },
        ])
    } else {
        Ok(vec![OrbitLabel {
            kind,
            partition,
            variant: None,
        }])
    }
}

/// Retrieves one label, resolving the very even ambiguity with `variant`.
pub fn label_with_variant(
    kind: Kind,
    total: usize,
    parts: &[usize],
    variant: Option<Variant>,
) -> Result<OrbitLabel> {
    let labels = validate(kind, total, parts)?;
    match (labels.len(), variant) {
        (1, None) => Ok(labels.into_iter().next().unwrap()),
        (1, Some(v)) => Err(Error::Validation(format!(
            "variant {v} given, but this label admits no variant"
        ))),
        (2, Some(v)) => Ok(labels
            .into_iter()
            .find(|l| l.variant == Some(v))
            .expect("both variants are present")),
        (2, None) => Err(Error::Validation(
            "very even partition labels two orbits; pass a variant (I or II)".into(),
        )),
        _ => unreachable!(),
    }
}

/// Every orbit label of the algebra of the given kind and size (rank for
/// B/C/D, matrix size for A), in descending lexicographic partition order;
/// very even D partitions contribute their I and II labels adjacently.
pub fn all_labels(kind: Kind, size: usize) -> Result<Vec<OrbitLabel>> {
    if size < kind.min_size() {
        return Err(Error::InvalidInput(format!(
            "type {kind} needs size >= {}, got {size}",
            kind.min_size()
        )));
    }
    let total = kind.partition_total(size);
    let mut out = Vec::new();
    for p in Partition::all(total) {
        if let Ok(labels) = validate(kind, total, p.parts()) {
            out.extend(labels);
        }
    }
    Ok(out)
}
