//! Construction of a minimal-dimension ad-nilpotent ideal for each orbit.
//!
//! Every part `k` of the orbit partition owns a string of eigenvalues
//! `k-1, k-3, ..., 1-k`. An index assignment places (the dominant half of)
//! these values into positions `1..=n` subject to ordering constraints; each
//! part instance then contributes a chunk of positive roots stitching its
//! positions into a Jordan chain. The union generates the minimal ideal.
//!
//! The canonical assignment here is one deterministic solution of the
//! constraints; [`verify_assignment`] is the authority, and any other
//! placement passing it is equally valid (they are not unique).

use crate::dynkin::{dynkin_element, DynkinElement};
use crate::exact::solve_rational;
use crate::partitions::{Kind, OrbitLabel, Variant};
use crate::roots::{AdNilpotentIdeal, Root, RootSystem};
use crate::{Error, Result};
use num_rational::BigRational;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Role {
    /// Type A: every instance.
    Plain,
    /// Lower half of a dual pair; `dual` is the matching closer.
    Opener { dual: usize },
    /// Upper half of a dual pair; `dual` is the matching opener.
    Closer { dual: usize },
    /// Type C: middle occurrence of an even part with odd multiplicity.
    MiddleEven,
    /// Types B and D: middle occurrence of an odd part with odd
    /// multiplicity. `list_pos` is its 1-based rank among all such middles
    /// ordered by part value; `pair` is the partner middle in type D.
    MiddleOdd {
        list_pos: usize,
        pair: Option<usize>,
    },
}

/// One occurrence of a part in the orbit partition, with the eigenvalues it
/// is responsible for placing.
#[derive(Debug, Clone)]
pub struct Instance {
    pub value: usize,
    pub occurrence: usize,
    role: Role,
    /// Values this instance places, strictly descending.
    pub domain: Vec<i64>,
}

fn descending(from: i64, down_to: i64) -> Vec<i64> {
    let mut v = Vec::new();
    let mut x = from;
    while x >= down_to {
        v.push(x);
        x -= 2;
    }
    v
}

fn build_instances(label: &OrbitLabel) -> Vec<Instance> {
    let kind = label.kind();
    let mut instances: Vec<Instance> = Vec::new();
    if kind == Kind::A {
        let mut prev = 0usize;
        let mut occ = 0usize;
        for &k in label.partition().parts() {
            occ = if k == prev { occ + 1 } else { 1 };
            prev = k;
            instances.push(Instance {
                value: k,
                occurrence: occ,
                role: Role::Plain,
                domain: descending(k as i64 - 1, 1 - k as i64),
            });
        }
        return instances;
    }

    for &(k, r) in &label.partition().exponential_form() {
        let base = instances.len();
        for i in 1..=r {
            let dual_of = |i: usize| base + (r + 1 - i) - 1;
            let (role, domain) = match kind {
                Kind::C => {
                    if k % 2 == 1 {
                        // odd parts of C come in dual pairs (even multiplicity)
                        if i <= r / 2 {
                            (
                                Role::Opener { dual: dual_of(i) },
                                descending(k as i64 - 1, 0),
                            )
                        } else {
                            (
                                Role::Closer { dual: dual_of(i) },
                                descending(k as i64 - 1, 2),
                            )
                        }
                    } else {
                        let dom = descending(k as i64 - 1, 1);
                        if i <= r / 2 {
                            (Role::Opener { dual: dual_of(i) }, dom)
                        } else if r % 2 == 1 && i == r / 2 + 1 {
                            (Role::MiddleEven, dom)
                        } else {
                            (Role::Closer { dual: dual_of(i) }, dom)
                        }
                    }
                }
                Kind::B | Kind::D => {
                    if k % 2 == 0 {
                        // even parts of B/D come in dual pairs
                        let dom = descending(k as i64 - 1, 1);
                        if i <= r / 2 {
                            (Role::Opener { dual: dual_of(i) }, dom)
                        } else {
                            (Role::Closer { dual: dual_of(i) }, dom)
                        }
                    } else if i <= r / 2 {
                        (
                            Role::Opener { dual: dual_of(i) },
                            descending(k as i64 - 1, 0),
                        )
                    } else if r % 2 == 1 && i == r / 2 + 1 {
                        // domain fixed below once all middles are known
                        (
                            Role::MiddleOdd {
                                list_pos: 0,
                                pair: None,
                            },
                            Vec::new(),
                        )
                    } else {
                        (
                            Role::Closer { dual: dual_of(i) },
                            descending(k as i64 - 1, 2),
                        )
                    }
                }
                Kind::A => unreachable!(),
            };
            instances.push(Instance {
                value: k,
                occurrence: i,
                role,
                domain,
            });
        }
    }

    // middles of B/D, ordered by part value ascending
    let mut middles: Vec<usize> = instances
        .iter()
        .enumerate()
        .filter(|(_, ins)| matches!(ins.role, Role::MiddleOdd { .. }))
        .map(|(id, _)| id)
        .collect();
    middles.sort_by_key(|&id| instances[id].value);
    let count = middles.len();
    for (pos0, &id) in middles.iter().enumerate() {
        let list_pos = pos0 + 1;
        let k = instances[id].value as i64;
        let domain = if list_pos % 2 == 1 {
            descending(k - 1, 2)
        } else {
            let mut d = descending(k - 1, 2);
            d.push(0);
            d
        };
        let pair = match kind {
            Kind::D => {
                if list_pos % 2 == 1 {
                    // partner is the next middle; total count is even in D
                    Some(middles[pos0 + 1])
                } else {
                    Some(middles[pos0 - 1])
                }
            }
            _ => None,
        };
        instances[id].role = Role::MiddleOdd { list_pos, pair };
        instances[id].domain = domain;
        debug_assert!(kind != Kind::D || count.is_multiple_of(2));
        debug_assert!(kind != Kind::B || !count.is_multiple_of(2));
    }
    instances
}

/// Placement of every instance's eigenvalues into positions `1..=n`.
#[derive(Debug, Clone)]
pub struct IndexAssignment {
    n: usize,
    instances: Vec<Instance>,
    /// `pos[i][v]` = position of value `v` of instance `i`.
    pos: Vec<BTreeMap<i64, usize>>,
}

impl IndexAssignment {
    pub fn instances(&self) -> &[Instance] {
        &self.instances
    }

    pub fn position(&self, instance: usize, value: i64) -> Option<usize> {
        self.pos.get(instance)?.get(&value).copied()
    }

    pub fn positions_of(&self, instance: usize) -> &BTreeMap<i64, usize> {
        &self.pos[instance]
    }

    /// Instances of odd parts with odd multiplicity (the leftover middles of
    /// types B and D), ordered by part value ascending. Empty for A and C.
    pub fn middle_list(&self) -> Vec<usize> {
        let mut out: Vec<(usize, usize)> = self
            .instances
            .iter()
            .enumerate()
            .filter_map(|(id, ins)| match ins.role {
                Role::MiddleOdd { list_pos, .. } => Some((list_pos, id)),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out.into_iter().map(|(_, id)| id).collect()
    }

    pub fn image_of(&self, instance: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.pos[instance].values().copied().collect();
        v.sort_unstable();
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The placed value vector: entry at each position. Fails when the
    /// positions do not form a bijection onto `1..=n`.
    pub fn h_vector(&self) -> Result<Vec<i64>> {
        Ok(self.holders()?.into_iter().map(|(_, v)| v).collect())
    }

    /// For each position `1..=n`, which (instance, value) sits there.
    fn holders(&self) -> Result<Vec<(usize, i64)>> {
        let mut holder: Vec<Option<(usize, i64)>> = vec![None; self.n];
        for (i, map) in self.pos.iter().enumerate() {
            for (&v, &p) in map {
                if p == 0 || p > self.n {
                    return Err(Error::InvalidInput(format!(
                        "position {p} outside 1..={}",
                        self.n
                    )));
                }
                if holder[p - 1].replace((i, v)).is_some() {
                    return Err(Error::InvalidInput(format!("position {p} used twice")));
                }
            }
        }
        holder
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidInput("positions do not cover 1..=n".into()))
    }

    /// Builds an assignment from explicit per-instance maps, given as
    /// `(value, position)` pairs in the canonical instance order. The value
    /// sets must match the canonical domains; the ordering constraints are
    /// NOT enforced here — run [`verify_assignment`] for that.
    pub fn from_maps(label: &OrbitLabel, maps: &[Vec<(i64, usize)>]) -> Result<IndexAssignment> {
        let instances = build_instances(label);
        if maps.len() != instances.len() {
            return Err(Error::InvalidInput(format!(
                "expected {} instance maps, got {}",
                instances.len(),
                maps.len()
            )));
        }
        let n = total_positions(&instances);
        let mut pos = Vec::with_capacity(maps.len());
        for (ins, map) in instances.iter().zip(maps) {
            let mut m: BTreeMap<i64, usize> = BTreeMap::new();
            for &(v, p) in map {
                if m.insert(v, p).is_some() {
                    return Err(Error::InvalidInput(format!(
                        "value {v} mapped twice for part {}_{}",
                        ins.value, ins.occurrence
                    )));
                }
            }
            let mut keys: Vec<i64> = m.keys().copied().collect();
            keys.sort_unstable_by(|a, b| b.cmp(a));
            if keys != ins.domain {
                return Err(Error::InvalidInput(format!(
                    "domain mismatch for part {}_{}: expected {:?}, got {keys:?}",
                    ins.value, ins.occurrence, ins.domain
                )));
            }
            pos.push(m);
        }
        Ok(IndexAssignment { n, instances, pos })
    }
}

fn total_positions(instances: &[Instance]) -> usize {
    instances.iter().map(|i| i.domain.len()).sum()
}

/// Sort key realizing the canonical order within one eigenvalue: openers in
/// partition-listing order, then middles by part value ascending, then
/// closers in the reverse order of their openers (so dual pairs nest).
fn claim_key(instances: &[Instance], id: usize) -> (u8, i64, i64) {
    match instances[id].role {
        Role::Plain | Role::Opener { .. } => (0, id as i64, 0),
        Role::MiddleEven | Role::MiddleOdd { .. } => (1, instances[id].value as i64, id as i64),
        Role::Closer { dual } => (2, -(dual as i64), 0),
    }
}

/// The canonical index assignment: eigenvalues placed in decreasing order,
/// ties broken per type so that every ordering constraint holds.
pub fn index_assignment(label: &OrbitLabel) -> Result<IndexAssignment> {
    let instances = build_instances(label);
    let n = total_positions(&instances);

    let mut values: Vec<i64> = instances.iter().flat_map(|i| i.domain.clone()).collect();
    values.sort_unstable_by(|a, b| b.cmp(a));
    values.dedup();

    let mut pos: Vec<BTreeMap<i64, usize>> = vec![BTreeMap::new(); instances.len()];
    let mut next = 1usize;
    for v in values {
        let mut claimants: Vec<usize> = (0..instances.len())
            .filter(|&i| instances[i].domain.contains(&v))
            .collect();
        claimants.sort_by_key(|&i| claim_key(&instances, i));
        for c in claimants {
            pos[c].insert(v, next);
            next += 1;
        }
    }
    if next != n + 1 {
        return Err(Error::Internal(format!(
            "placed {} values for {n} positions",
            next - 1
        )));
    }

    let assignment = IndexAssignment { n, instances, pos };

    // the placement must reproduce the Dynkin element
    let placed = assignment.h_vector()?;
    let expected = dynkin_element(label);
    if placed != expected.entries() {
        return Err(Error::Internal(format!(
            "canonical assignment for {label} places {placed:?}, Dynkin element is {:?}",
            expected.entries()
        )));
    }
    Ok(assignment)
}

/// One property line of an assignment verification report.
#[derive(Debug, Clone)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Per-property verification report; canonical assignments pass everything,
/// and alternative placements are accepted whenever they also do.
#[derive(Debug, Clone)]
pub struct AssignmentReport {
    pub checks: Vec<PropertyCheck>,
}

impl AssignmentReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: &'static str, failures: Vec<String>) {
        self.checks.push(PropertyCheck {
            name,
            passed: failures.is_empty(),
            detail: failures.join("; "),
        });
    }
}

/// Checks the defining properties of an index assignment for its type.
pub fn verify_assignment(label: &OrbitLabel, assn: &IndexAssignment) -> AssignmentReport {
    let ins = &assn.instances;
    let nm = |id: usize| format!("{}_{}", ins[id].value, ins[id].occurrence);
    let mut report = AssignmentReport { checks: Vec::new() };

    // (1) each map injective, images disjoint, union = [n]
    {
        let mut fails = Vec::new();
        let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
        for (i, map) in assn.pos.iter().enumerate() {
            let mut vals: Vec<usize> = map.values().copied().collect();
            vals.sort_unstable();
            let len = vals.len();
            vals.dedup();
            if vals.len() != len {
                fails.push(format!("{} is not one-to-one", nm(i)));
            }
            for &p in map.values() {
                if let Some(&other) = seen.get(&p) {
                    fails.push(format!("{} and {} share position {p}", nm(other), nm(i)));
                } else {
                    seen.insert(p, i);
                }
            }
        }
        if seen.len() != assn.n || seen.keys().any(|&p| p == 0 || p > assn.n) {
            fails.push(format!("images do not cover 1..={}", assn.n));
        }
        report.push("injective-disjoint-cover", fails);
    }

    // (2) strictly larger values sit strictly earlier
    {
        let mut fails = Vec::new();
        for i in 0..ins.len() {
            for (&vi, &pi) in &assn.pos[i] {
                for j in 0..ins.len() {
                    for (&vj, &pj) in &assn.pos[j] {
                        if vi > vj && pi >= pj {
                            fails.push(format!(
                                "{}({vi}) at {pi} not before {}({vj}) at {pj}",
                                nm(i),
                                nm(j)
                            ));
                        }
                    }
                }
            }
        }
        report.push("larger-values-first", fails);
    }

    if label.kind() == Kind::A {
        // (3) consistent order at shared values
        let mut fails = Vec::new();
        for i in 0..ins.len() {
            for j in i + 1..ins.len() {
                let mut sign = 0i8;
                for (&v, &pi) in &assn.pos[i] {
                    if let Some(&pj) = assn.pos[j].get(&v) {
                        let s = if pi > pj { 1 } else { -1 };
                        if sign == 0 {
                            sign = s;
                        } else if sign != s {
                            fails.push(format!("{} vs {} flips order at {v}", nm(i), nm(j)));
                        }
                    }
                }
            }
        }
        report.push("consistent-shared-value-order", fails);
        return report;
    }

    // (3) same part value: occurrence order at every shared value
    {
        let mut fails = Vec::new();
        for i in 0..ins.len() {
            for j in 0..ins.len() {
                if ins[i].value == ins[j].value && ins[i].occurrence < ins[j].occurrence {
                    for (&v, &pi) in &assn.pos[i] {
                        if let Some(&pj) = assn.pos[j].get(&v) {
                            if pi >= pj {
                                fails.push(format!("{} !< {} at value {v}", nm(i), nm(j)));
                            }
                        }
                    }
                }
            }
        }
        report.push("occurrence-order", fails);
    }

    let dual_pairs: Vec<(usize, usize)> = ins
        .iter()
        .enumerate()
        .filter_map(|(id, i)| match i.role {
            Role::Opener { dual } => Some((id, dual)),
            _ => None,
        })
        .collect();

    // (4) dual pairs nest at every shared positive value
    {
        let mut fails = Vec::new();
        for (ai, (o1, c1)) in dual_pairs.iter().enumerate() {
            for (o2, c2) in dual_pairs.iter().skip(ai + 1) {
                for (&v, &po1) in &assn.pos[*o1] {
                    if v <= 0 {
                        continue;
                    }
                    let (Some(&pc1), Some(&po2), Some(&pc2)) = (
                        assn.pos[*c1].get(&v),
                        assn.pos[*o2].get(&v),
                        assn.pos[*c2].get(&v),
                    ) else {
                        continue;
                    };
                    let nested = (po1 < po2 && po2 < pc2 && pc2 < pc1)
                        || (po2 < po1 && po1 < pc1 && pc1 < pc2);
                    if !nested {
                        fails.push(format!(
                            "pairs {}/{} and {}/{} interleave at {v}",
                            nm(*o1),
                            nm(*c1),
                            nm(*o2),
                            nm(*c2)
                        ));
                    }
                }
            }
        }
        report.push("dual-pairs-nest", fails);
    }

    // (5) order at 0 follows order at 2
    {
        let mut fails = Vec::new();
        for i in 0..ins.len() {
            for j in i + 1..ins.len() {
                let (Some(&pi2), Some(&pj2)) = (assn.pos[i].get(&2), assn.pos[j].get(&2)) else {
                    continue;
                };
                let (Some(&pi0), Some(&pj0)) = (assn.pos[i].get(&0), assn.pos[j].get(&0)) else {
                    continue;
                };
                if (pi2 < pj2) != (pi0 < pj0) {
                    fails.push(format!("{} vs {} disagree at 2 and 0", nm(i), nm(j)));
                }
            }
        }
        report.push("zero-follows-two", fails);
    }

    // (6)/(7) place the middles
    let middle_parity = match label.kind() {
        Kind::C => 0, // even part values
        _ => 1,       // odd part values
    };
    let middles: Vec<usize> = ins
        .iter()
        .enumerate()
        .filter(|(_, i)| matches!(i.role, Role::MiddleEven | Role::MiddleOdd { .. }))
        .map(|(id, _)| id)
        .collect();
    {
        let mut fails = Vec::new();
        for &(o, c) in &dual_pairs {
            if ins[o].value % 2 != middle_parity {
                continue;
            }
            for &m in &middles {
                for (&v, &pm) in &assn.pos[m] {
                    if v > 0 {
                        if let (Some(&po), Some(&pc)) = (assn.pos[o].get(&v), assn.pos[c].get(&v)) {
                            if !(po < pm && pm < pc) {
                                fails.push(format!(
                                    "middle {} escapes pair {}/{} at {v}",
                                    nm(m),
                                    nm(o),
                                    nm(c)
                                ));
                            }
                        }
                    } else if v == 0 {
                        if let Some(&po) = assn.pos[o].get(&0) {
                            if po >= pm {
                                fails.push(format!(
                                    "opener {} not before middle {} at 0",
                                    nm(o),
                                    nm(m)
                                ));
                            }
                        }
                    }
                }
            }
        }
        report.push("middles-inside-pairs", fails);
    }
    {
        let mut fails = Vec::new();
        for &m1 in &middles {
            for &m2 in &middles {
                if ins[m1].value < ins[m2].value {
                    for (&v, &p1) in &assn.pos[m1] {
                        if let Some(&p2) = assn.pos[m2].get(&v) {
                            if p1 >= p2 {
                                fails.push(format!("{} !< {} at {v}", nm(m1), nm(m2)));
                            }
                        }
                    }
                }
            }
        }
        report.push("middles-by-value", fails);
    }

    report
}

/// The roots contributed by one part instance.
#[derive(Debug, Clone)]
pub struct Chunk {
    pub part_value: usize,
    pub occurrence: usize,
    pub roots: Vec<Root>,
}

/// Generator set of the minimal ideal: one chunk per part instance.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    pub chunks: Vec<Chunk>,
    pub roots: Vec<Root>,
}

fn e_minus(n: usize, p: usize, q: usize) -> Root {
    let mut c = vec![0i64; n];
    c[p - 1] += 1;
    c[q - 1] -= 1;
    Root::new(c)
}

fn e_plus(n: usize, p: usize, q: usize) -> Root {
    let mut c = vec![0i64; n];
    c[p - 1] += 1;
    c[q - 1] += 1;
    Root::new(c)
}

fn single(n: usize, p: usize, v: i64) -> Root {
    let mut c = vec![0i64; n];
    c[p - 1] = v;
    Root::new(c)
}

/// Applies the per-type chunk rules to an assignment.
pub fn generator_set(label: &OrbitLabel, assn: &IndexAssignment) -> Result<GeneratorSet> {
    let kind = label.kind();
    let n = match kind {
        Kind::A => label.partition().total(),
        _ => assn.n(),
    };
    let p = |i: usize, v: i64| -> Result<usize> {
        assn.position(i, v).ok_or_else(|| {
            Error::Internal(format!("missing position for value {v} of instance {i}"))
        })
    };
    // chain of differences along consecutive domain values, stopping once
    // values drop below `floor`
    let chain = |i: usize, floor: i64| -> Result<Vec<Root>> {
        let dom = &assn.instances[i].domain;
        let mut out = Vec::new();
        for w in dom.windows(2) {
            if w[1] < floor {
                break;
            }
            out.push(e_minus(n, p(i, w[0])?, p(i, w[1])?));
        }
        Ok(out)
    };

    // very even type D, variant II: the instance whose value-1 slot sits at
    // position n trades its final links for sign-twisted ones
    let twisted = if label.variant() == Some(Variant::II) {
        let touching = (0..assn.instances.len())
            .find(|&i| assn.position(i, 1) == Some(assn.n()))
            .ok_or_else(|| {
                Error::Internal("variant II label without a value-1 slot at position n".into())
            })?;
        let dual = match assn.instances[touching].role {
            Role::Opener { dual } | Role::Closer { dual } => dual,
            _ => {
                return Err(Error::Internal(
                    "variant II touching instance is not part of a dual pair".into(),
                ))
            }
        };
        Some((touching, dual))
    } else {
        None
    };

    let mut chunks = Vec::new();
    for (i, ins) in assn.instances.iter().enumerate() {
        let mut roots;
        if let Some((ti, tj)) = twisted {
            if i == ti {
                // chain stops one link early, then bends upward
                roots = chain(i, 3)?;
                if ins.domain.contains(&3) {
                    roots.push(e_plus(n, p(i, 3)?, p(i, 1)?));
                }
                chunks.push(Chunk {
                    part_value: ins.value,
                    occurrence: ins.occurrence,
                    roots,
                });
                continue;
            }
            if i == tj {
                roots = chain(i, 1)?;
                roots.push(e_minus(n, p(i, 1)?, p(ti, 1)?));
                chunks.push(Chunk {
                    part_value: ins.value,
                    occurrence: ins.occurrence,
                    roots,
                });
                continue;
            }
        }
        roots = match (kind, ins.role) {
            (Kind::A, Role::Plain) => chain(i, 1 - ins.value as i64)?,

            // type C
            (Kind::C, Role::Opener { .. }) if ins.value % 2 == 1 => chain(i, 0)?,
            (Kind::C, Role::Closer { dual }) if ins.value % 2 == 1 => {
                let mut r = chain(i, 2)?;
                if ins.domain.contains(&2) {
                    r.push(e_plus(n, p(i, 2)?, p(dual, 0)?));
                }
                r
            }
            (Kind::C, Role::Opener { dual }) => {
                let mut r = chain(i, 1)?;
                r.push(e_plus(n, p(i, 1)?, p(dual, 1)?));
                r
            }
            (Kind::C, Role::Closer { .. }) => chain(i, 1)?,
            (Kind::C, Role::MiddleEven) => {
                let mut r = chain(i, 1)?;
                r.push(single(n, p(i, 1)?, 2));
                r
            }

            // types B and D share everything except the odd middles
            (Kind::B | Kind::D, Role::Opener { dual }) if ins.value % 2 == 0 => {
                let mut r = chain(i, 1)?;
                r.push(e_plus(n, p(i, 1)?, p(dual, 1)?));
                r
            }
            (Kind::B | Kind::D, Role::Closer { .. }) if ins.value % 2 == 0 => chain(i, 1)?,
            (Kind::B | Kind::D, Role::Opener { .. }) => chain(i, 0)?,
            (Kind::B | Kind::D, Role::Closer { dual }) => {
                let mut r = chain(i, 2)?;
                if ins.domain.contains(&2) {
                    r.push(e_plus(n, p(i, 2)?, p(dual, 0)?));
                }
                r
            }
            (Kind::B, Role::MiddleOdd { .. }) => {
                let mut r = chain(i, 2)?;
                if ins.domain.contains(&0) {
                    // both signs close the chain through its own zero slot
                    if ins.domain.contains(&2) {
                        r.push(e_plus(n, p(i, 2)?, p(i, 0)?));
                        r.push(e_minus(n, p(i, 2)?, p(i, 0)?));
                    }
                } else if ins.domain.contains(&2) {
                    r.push(single(n, p(i, 2)?, 1));
                }
                r
            }
            (Kind::D, Role::MiddleOdd { list_pos, pair }) => {
                let partner =
                    pair.ok_or_else(|| Error::Internal("type D middle without partner".into()))?;
                if list_pos % 2 == 1 {
                    // no zero slot of its own: one link into the partner's
                    let mut r = chain(i, 2)?;
                    if ins.domain.contains(&2) {
                        r.push(e_minus(n, p(i, 2)?, p(partner, 0)?));
                    }
                    r
                } else {
                    // carries the shared zero slot: close with both signs
                    let mut r = chain(i, 2)?;
                    if ins.domain.contains(&2) {
                        r.push(e_plus(n, p(i, 2)?, p(i, 0)?));
                        r.push(e_minus(n, p(i, 2)?, p(i, 0)?));
                    }
                    r
                }
            }
            (k, role) => {
                return Err(Error::Internal(format!(
                    "no chunk rule for kind {k} role {role:?}"
                )))
            }
        };
        chunks.push(Chunk {
            part_value: ins.value,
            occurrence: ins.occurrence,
            roots,
        });
    }

    let roots: Vec<Root> = chunks.iter().flat_map(|c| c.roots.clone()).collect();
    Ok(GeneratorSet { chunks, roots })
}

/// A constructed minimal ideal with everything used to build it.
#[derive(Debug, Clone)]
pub struct Construction {
    pub label: OrbitLabel,
    pub system: RootSystem,
    pub element: DynkinElement,
    pub assignment: IndexAssignment,
    pub generators: GeneratorSet,
    pub ideal: AdNilpotentIdeal,
}

/// Builds the minimal ideal from the canonical assignment.
pub fn minimal_ideal(label: &OrbitLabel) -> Result<Construction> {
    let assignment = index_assignment(label)?;
    ideal_from_assignment(label, assignment)
}

/// Builds the ideal from any (verified or custom) assignment.
pub fn ideal_from_assignment(
    label: &OrbitLabel,
    assignment: IndexAssignment,
) -> Result<Construction> {
    let system = RootSystem::build(label.kind(), label.system_size())?;
    let element = dynkin_element(label);
    let generators = generator_set(label, &assignment)?;
    let ideal = system.close_upward(&generators.roots)?;
    Ok(Construction {
        label: label.clone(),
        system,
        element,
        assignment,
        generators,
        ideal,
    })
}

/// The three-way split of the grade-2 roots relative to a generator set `C`:
/// `C` itself, `plus` (grade-2 roots of the ideal outside `C`), and `minus`
/// (grade-2 roots outside the ideal).
#[derive(Debug, Clone)]
pub struct GradedSplit {
    pub in_c: Vec<Root>,
    pub plus: Vec<Root>,
    pub minus: Vec<Root>,
}

pub fn split_graded(
    rs: &RootSystem,
    element: &DynkinElement,
    gens: &[Root],
) -> Result<GradedSplit> {
    let coords = element.eval_coords();
    let mut c_idx = Vec::new();
    for g in gens {
        if g.eval(&coords) != 2 {
            return Err(Error::InvalidInput(format!(
                "generator {g} does not have grade 2"
            )));
        }
        c_idx.push(rs.index_of(g)?);
    }
    let ideal = rs.close_upward(gens)?;
    let mut split = GradedSplit {
        in_c: gens.to_vec(),
        plus: Vec::new(),
        minus: Vec::new(),
    };
    for (i, root) in rs.positive_roots().iter().enumerate() {
        if root.eval(&coords) != 2 {
            continue;
        }
        if !ideal.contains(i) {
            split.minus.push(root.clone());
        } else if !c_idx.contains(&i) {
            split.plus.push(root.clone());
        }
    }
    Ok(split)
}

/// The type-A involution on grade-2 roots: the root joining value `m` of one
/// part to value `m-2` of another maps to the root joining their mirrored
/// values `2-m` and `-m`. It fixes the generator set and swaps the rest of
/// the graded ideal with its complement.
pub fn iota(rs: &RootSystem, assn: &IndexAssignment, root: &Root) -> Result<Root> {
    if rs.kind() != Kind::A {
        return Err(Error::InvalidInput(
            "the involution is defined for type A only".into(),
        ));
    }
    rs.index_of(root)?;
    let holders = assn.holders()?;
    let a = root.coords.iter().position(|&c| c == 1).unwrap();
    let b = root.coords.iter().position(|&c| c == -1).unwrap();
    let (i, m) = holders[a];
    let (j, m2) = holders[b];
    if m - m2 != 2 {
        return Err(Error::InvalidInput(format!(
            "{root} does not lie in the grade-2 slice"
        )));
    }
    let p = assn
        .position(j, 2 - m)
        .ok_or_else(|| Error::Internal(format!("missing mirrored value {} in map", 2 - m)))?;
    let q = assn
        .position(i, -m)
        .ok_or_else(|| Error::Internal(format!("missing mirrored value {} in map", -m)))?;
    Ok(e_minus(rs.coord_len(), p, q))
}

/// Nilpositive and nilnegative data of a candidate standard triple.
#[derive(Debug, Clone)]
pub struct TripleData {
    pub element: DynkinElement,
    /// Roots of `X`, all with coefficient one.
    pub x_roots: Vec<Root>,
    /// Roots of `Y` with their exact rational coefficients.
    pub y_terms: Vec<(Root, BigRational)>,
}

/// Result of the triple construction: either the data of a candidate triple
/// or a typed refusal when the generator set cannot support one.
#[derive(Debug, Clone)]
pub enum TripleOutcome {
    Triple(TripleData),
    NoTriple { reason: String },
}

/// Coroot of `root` as a Cartan coordinate vector.
fn coroot_coords(kind: Kind, root: &Root) -> Vec<i64> {
    let norm: i64 = root.coords.iter().map(|c| c * c).sum();
    match norm {
        2 => root.coords.clone(),                         // e_i +- e_j
        1 => root.coords.iter().map(|c| 2 * c).collect(), // short e_i in B
        4 => root.coords.iter().map(|c| c / 2).collect(), // long 2e_i in C
        _ => unreachable!("unexpected root length in kind {kind}"),
    }
}

/// Attempts the standard-triple construction for the canonical generator
/// set: `Y = sum a_r Y_r` with the coefficients solving `H = sum a_r H_r`.
/// When two generators differ by a root the summand brackets do not vanish
/// and the construction is refused with a `NoTriple` outcome.
pub fn standard_triple(label: &OrbitLabel) -> Result<TripleOutcome> {
    let built = minimal_ideal(label)?;
    standard_triple_for(&built)
}

/// Same, reusing an existing construction.
pub fn standard_triple_for(built: &Construction) -> Result<TripleOutcome> {
    let rs = &built.system;
    let gens = &built.generators.roots;
    if !rs.is_weak_antichain(gens)? {
        let mut pair = None;
        'outer: for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                let diff: Vec<i64> = a.coords.iter().zip(&b.coords).map(|(x, y)| x - y).collect();
                if rs.is_root(&diff) {
                    pair = Some((a.clone(), b.clone()));
                    break 'outer;
                }
            }
        }
        let (a, b) = pair.expect("a violating pair exists");
        return Ok(TripleOutcome::NoTriple {
            reason: format!(
                "generators {a} and {b} differ by a root, so the summand brackets do not cancel"
            ),
        });
    }
    let columns: Vec<Vec<i64>> = gens
        .iter()
        .map(|g| coroot_coords(built.label.kind(), g))
        .collect();
    let target = built.element.eval_coords();
    let Some(coeffs) = solve_rational(&columns, &target) else {
        return Err(Error::Internal(format!(
            "characteristic of {} is outside the coroot span despite the weak condition",
            built.label
        )));
    };
    Ok(TripleOutcome::Triple(TripleData {
        element: built.element.clone(),
        x_roots: gens.clone(),
        y_terms: gens.iter().cloned().zip(coeffs).collect(),
    }))
}
