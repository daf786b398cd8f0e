//! Dynkin elements, gradings of the algebra, graded ideals, and the lower
//! bound `m` for the dimension of ideals with a given associated orbit.
//!
//! For an orbit label with partition `lambda`, each part `k` contributes the
//! string `k-1, k-3, ..., 1-k` to the eigenvalue multiset of the Dynkin
//! element. Type A keeps the whole sorted multiset; B, C, D keep the
//! dominant half. A very even type-D label of variant II realizes the same
//! dominant vector with the last coordinate negated.

use crate::partitions::{centralizer_rank_parts, Kind, OrbitLabel, Variant};
use crate::roots::{AdNilpotentIdeal, Root, RootSystem};
use crate::{Error, Result};
use std::collections::BTreeMap;

/// The dominant Cartan element attached to a nilpotent orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinElement {
    kind: Kind,
    h: Vec<i64>,
    variant: Option<Variant>,
}

impl DynkinElement {
    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// The stored dominant vector `h_1 >= ... >= h_n`.
    pub fn entries(&self) -> &[i64] {
        &self.h
    }

    pub fn variant(&self) -> Option<Variant> {
        self.variant
    }

    /// Coordinates used to evaluate roots and to realize `H` as a matrix.
    /// Variant II flips the sign of the last coordinate.
    pub fn eval_coords(&self) -> Vec<i64> {
        let mut v = self.h.clone();
        if self.variant == Some(Variant::II) {
            if let Some(last) = v.last_mut() {
                *last = -*last;
            }
        }
        v
    }

    pub fn value_on(&self, root: &Root) -> i64 {
        root.eval(&self.eval_coords())
    }
}

/// Full eigenvalue multiset (length = partition total), sorted descending.
pub fn full_entry_multiset(label: &OrbitLabel) -> Vec<i64> {
    entry_multiset(label.partition())
}

/// Same, straight from a partition.
pub fn entry_multiset(partition: &crate::partitions::Partition) -> Vec<i64> {
    let mut values = Vec::with_capacity(partition.total());
    for &k in partition.parts() {
        let k = k as i64;
        let mut v = k - 1;
        while v >= 1 - k {
            values.push(v);
            v -= 2;
        }
    }
    values.sort_unstable_by(|a, b| b.cmp(a));
    values
}

/// Dynkin element of the orbit: the sorted multiset for type A, its dominant
/// half for B/C/D, with the variant tag carried through for very even D.
pub fn dynkin_element(label: &OrbitLabel) -> DynkinElement {
    let values = full_entry_multiset(label);
    let h = match label.kind() {
        Kind::A => values,
        Kind::B | Kind::C | Kind::D => values[..label.system_size()].to_vec(),
    };
    DynkinElement {
        kind: label.kind(),
        h,
        variant: label.variant(),
    }
}

/// Node labels of the weighted diagram: the values of `H` on the simple
/// roots, in the build order of [`RootSystem::simple_roots`].
pub fn weighted_diagram(rs: &RootSystem, element: &DynkinElement) -> Result<Vec<i64>> {
    let coords = element.eval_coords();
    if coords.len() != rs.coord_len() {
        return Err(Error::InvalidInput(format!(
            "Cartan element has {} coordinates, the system needs {}",
            coords.len(),
            rs.coord_len()
        )));
    }
    let labels: Vec<i64> = rs.simple_roots().iter().map(|s| s.eval(&coords)).collect();
    if labels.iter().any(|&v| v < 0) {
        return Err(Error::InvalidInput(
            "Cartan element is not dominant for this system".into(),
        ));
    }
    Ok(labels)
}

/// Dimensions of the eigenspaces of `ad H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradeTable {
    /// `dims[i]` = dim of the `i`-eigenspace; `dims[0]` includes the Cartan.
    pub dims: BTreeMap<i64, usize>,
    /// Number of positive roots vanishing on `H` (the dimension of the
    /// positive half of the centralizer's nilpotent part).
    pub positive_zero: usize,
    pub algebra_dim: usize,
}

impl GradeTable {
    pub fn dim(&self, i: i64) -> usize {
        self.dims.get(&i).copied().unwrap_or(0)
    }
}

pub fn grade_table(rs: &RootSystem, element: &DynkinElement) -> GradeTable {
    let coords = element.eval_coords();
    let mut dims: BTreeMap<i64, usize> = BTreeMap::new();
    let mut positive_zero = 0;
    for root in rs.positive_roots() {
        let v = root.eval(&coords);
        *dims.entry(v).or_insert(0) += 1;
        *dims.entry(-v).or_insert(0) += 1;
        if v == 0 {
            positive_zero += 1;
        }
    }
    *dims.entry(0).or_insert(0) += rs.rank();
    GradeTable {
        dims,
        positive_zero,
        algebra_dim: rs.algebra_dim(),
    }
}

/// The ideal of grade at least `i`: all positive roots with `alpha(H) >= i`.
/// Dominance of `H` makes this upward closed.
pub fn graded_ideal(rs: &RootSystem, element: &DynkinElement, i: i64) -> Result<AdNilpotentIdeal> {
    if i < 1 {
        return Err(Error::InvalidInput(format!(
            "graded ideal needs level >= 1, got {i}"
        )));
    }
    let coords = element.eval_coords();
    let idx: Vec<usize> = rs
        .positive_roots()
        .iter()
        .enumerate()
        .filter(|(_, r)| r.eval(&coords) >= i)
        .map(|(k, _)| k)
        .collect();
    let ideal = rs.close_upward_indices(&idx);
    debug_assert_eq!(ideal.dim(), idx.len(), "graded set must be upward closed");
    Ok(ideal)
}

/// Rank of the reductive centralizer of a nilpotent element with this label.
///
/// The centralizer's reductive part is a product of general linear groups
/// (type A), or of symplectic groups on one parity class of part
/// multiplicities and orthogonal groups on the other (types B, C, D).
pub fn centralizer_rank(label: &OrbitLabel) -> usize {
    centralizer_rank_parts(label.kind(), label.partition())
}

/// The lower bound `m` for dimensions of ad-nilpotent ideals whose
/// associated orbit carries this label:
/// `m = dim B - [dim g_1 + (dim g_0 + dim g_2 + rank G_X) / 2]`.
pub fn lower_bound_m(label: &OrbitLabel) -> Result<usize> {
    let rs = RootSystem::build(label.kind(), label.system_size())?;
    lower_bound_m_in(&rs, label)
}

/// Same as [`lower_bound_m`], reusing a prebuilt root system.
pub fn lower_bound_m_in(rs: &RootSystem, label: &OrbitLabel) -> Result<usize> {
    let element = dynkin_element(label);
    let table = grade_table(rs, &element);
    let g0 = table.dim(0);
    let g1 = table.dim(1);
    let g2 = table.dim(2);
    let rank_gx = centralizer_rank(label);
    let twice = 2 * rs.borel_dim() as i64 - 2 * g1 as i64 - (g0 + g2 + rank_gx) as i64;
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::Internal(format!(
            "lower bound for {label} is not a nonnegative integer: 2m = {twice}"
        )));
    }
    Ok((twice / 2) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{all_labels, label_with_variant, validate};

    fn label(kind: Kind, total: usize, parts: &[usize]) -> OrbitLabel {
        validate(kind, total, parts).unwrap().remove(0)
    }

    #[test]
    fn dynkin_element_examples() {
        let a = label(Kind::A, 6, &[4, 2]);
        assert_eq!(dynkin_element(&a).entries(), &[3, 1, 1, -1, -1, -3]);

        let c = label(Kind::C, 16, &[5, 5, 3, 3]);
        assert_eq!(dynkin_element(&c).entries(), &[4, 4, 2, 2, 2, 2, 0, 0]);

        let d = label(Kind::D, 8, &[4, 4]);
        assert_eq!(dynkin_element(&d).entries(), &[3, 3, 1, 1]);
        let d2 = label_with_variant(Kind::D, 8, &[4, 4], Some(Variant::II)).unwrap();
        assert_eq!(dynkin_element(&d2).eval_coords(), vec![3, 3, 1, -1]);
    }

    #[test]
    fn weighted_diagram_examples() {
        let a = label(Kind::A, 6, &[4, 2]);
        let rs = RootSystem::build(Kind::A, 6).unwrap();
        assert_eq!(
            weighted_diagram(&rs, &dynkin_element(&a)).unwrap(),
            vec![2, 0, 2, 0, 2]
        );

        let c = label(Kind::C, 6, &[6]);
        let rs = RootSystem::build(Kind::C, 3).unwrap();
        let el = dynkin_element(&c);
        assert_eq!(el.entries(), &[5, 3, 1]);
        assert_eq!(weighted_diagram(&rs, &el).unwrap(), vec![2, 2, 2]);

        let zero = label(Kind::B, 5, &[1, 1, 1, 1, 1]);
        let rs = RootSystem::build(Kind::B, 2).unwrap();
        assert_eq!(
            weighted_diagram(&rs, &dynkin_element(&zero)).unwrap(),
            vec![0, 0]
        );

        // non-dominant input is rejected
        let bad = DynkinElement {
            kind: Kind::A,
            h: vec![0, 1, 0, -1, 0, 0],
            variant: None,
        };
        let rs = RootSystem::build(Kind::A, 6).unwrap();
        assert!(weighted_diagram(&rs, &bad).is_err());
    }

    #[test]
    fn diagram_labels_stay_in_range() {
        for (kind, size) in [(Kind::A, 6), (Kind::B, 3), (Kind::C, 3), (Kind::D, 4)] {
            let rs = RootSystem::build(kind, size).unwrap();
            for l in all_labels(kind, size).unwrap() {
                let labels = weighted_diagram(&rs, &dynkin_element(&l)).unwrap();
                assert!(
                    labels.iter().all(|&v| (0..=2).contains(&v)),
                    "{kind} {l}: {labels:?}"
                );
            }
        }
    }

    #[test]
    fn grade_table_examples() {
        let rs = RootSystem::build(Kind::C, 3).unwrap();
        let el = dynkin_element(&label(Kind::C, 6, &[4, 2]));
        assert_eq!(el.entries(), &[3, 1, 1]);
        let t = grade_table(&rs, &el);
        assert_eq!(t.dim(1), 0);
        assert_eq!(t.dim(0), 5);
        assert_eq!(t.dim(2), 5);

        let rs = RootSystem::build(Kind::D, 4).unwrap();
        let t = grade_table(&rs, &dynkin_element(&label(Kind::D, 8, &[4, 4])));
        assert_eq!(t.dim(0), 8);
        assert_eq!(t.dim(2), 5);
        assert_eq!(t.dim(1), 0);

        let t = grade_table(
            &rs,
            &dynkin_element(&label(Kind::D, 8, &[1, 1, 1, 1, 1, 1, 1, 1])),
        );
        assert_eq!(t.dim(0), rs.algebra_dim());
    }

    #[test]
    fn grade_table_sums_and_symmetry() {
        for (kind, size) in [(Kind::A, 5), (Kind::B, 3), (Kind::C, 3), (Kind::D, 4)] {
            let rs = RootSystem::build(kind, size).unwrap();
            for l in all_labels(kind, size).unwrap() {
                let t = grade_table(&rs, &dynkin_element(&l));
                let total: usize = t.dims.values().sum();
                assert_eq!(total, rs.algebra_dim(), "{l}");
                for (&i, &d) in &t.dims {
                    assert_eq!(t.dim(-i), d, "{l} grade {i}");
                }
            }
        }
    }

    #[test]
    fn graded_ideal_examples() {
        let rs = RootSystem::build(Kind::C, 3).unwrap();
        let el = dynkin_element(&label(Kind::C, 6, &[4, 2]));
        let q2 = graded_ideal(&rs, &el, 2).unwrap();
        assert_eq!(q2.dim(), 8); // everything except e2-e3

        let zero = dynkin_element(&label(Kind::C, 6, &[1, 1, 1, 1, 1, 1]));
        assert_eq!(graded_ideal(&rs, &zero, 1).unwrap().dim(), 0);

        // evaluation gives 5 roots of value >= 3 on h = (3,1,1,-1,-1,-3)
        let rs = RootSystem::build(Kind::A, 6).unwrap();
        let el = dynkin_element(&label(Kind::A, 6, &[4, 2]));
        let q3 = graded_ideal(&rs, &el, 3).unwrap();
        assert_eq!(q3.dim(), 5);
        let direct = rs
            .positive_roots()
            .iter()
            .filter(|r| r.eval(&[3, 1, 1, -1, -1, -3]) >= 3)
            .count();
        assert_eq!(q3.dim(), direct);

        assert!(graded_ideal(&rs, &el, 0).is_err());
    }

    #[test]
    fn graded_ideals_are_nested_and_closed() {
        for (kind, size) in [(Kind::A, 5), (Kind::B, 3), (Kind::C, 3), (Kind::D, 4)] {
            let rs = RootSystem::build(kind, size).unwrap();
            for l in all_labels(kind, size).unwrap() {
                let el = dynkin_element(&l);
                let mut prev: Option<AdNilpotentIdeal> = None;
                for i in 1..=5 {
                    let q = graded_ideal(&rs, &el, i).unwrap();
                    assert!(rs.is_upward_closed(q.root_set()));
                    if let Some(p) = prev {
                        assert!(q.is_subset_of(&p), "{l} level {i}");
                    }
                    prev = Some(q);
                }
            }
        }
    }

    #[test]
    fn centralizer_rank_examples() {
        assert_eq!(centralizer_rank(&label(Kind::A, 6, &[4, 2])), 1);
        assert_eq!(centralizer_rank(&label(Kind::C, 6, &[4, 2])), 0);
        assert_eq!(centralizer_rank(&label(Kind::D, 8, &[4, 4])), 1);
        assert_eq!(centralizer_rank(&label(Kind::B, 5, &[3, 1, 1])), 1);
        assert_eq!(centralizer_rank(&label(Kind::C, 6, &[3, 3])), 1);
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(lower_bound_m(&label(Kind::C, 6, &[4, 2])).unwrap(), 7);
        assert_eq!(lower_bound_m(&label(Kind::D, 8, &[4, 4])).unwrap(), 9);
        assert_eq!(lower_bound_m(&label(Kind::A, 6, &[6])).unwrap(), 15);
        assert_eq!(
            lower_bound_m(&label(Kind::A, 6, &[1, 1, 1, 1, 1, 1])).unwrap(),
            0
        );
        assert_eq!(lower_bound_m(&label(Kind::B, 5, &[3, 1, 1])).unwrap(), 2);
        assert_eq!(lower_bound_m(&label(Kind::D, 8, &[5, 3])).unwrap(), 10);
    }

    #[test]
    fn very_even_variants_share_the_bound() {
        for parts in [vec![4usize, 4], vec![2, 2, 2, 2]] {
            let both = validate(Kind::D, 8, &parts).unwrap();
            let m1 = lower_bound_m(&both[0]).unwrap();
            let m2 = lower_bound_m(&both[1]).unwrap();
            assert_eq!(m1, m2, "{parts:?}");
        }
    }
}
