//! Ground truth: exact matrix realizations, Jordan types via ranks of
//! powers, associated orbits of arbitrary ideals, exhaustive per-orbit
//! minima, and bracket verification of candidate triples.
//!
//! All rank computations are fraction-free over big integers. The bilinear
//! forms are chosen so that Cartan elements are diagonal `diag(h, -h[, 0])`
//! and every root vector is a sparse integer matrix.

use crate::construct::{self, minimal_ideal, TripleData};
use crate::dynkin::{dynkin_element, graded_ideal, DynkinElement};
use crate::exact::{bareiss_rank, IntMatrix, RatMatrix};
use crate::partitions::{Kind, OrbitLabel, Partition};
use crate::roots::{AdNilpotentIdeal, Root, RootSystem};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// Largest positive-root count we will exhaustively enumerate.
pub const ENUMERATION_GUARD: usize = 30;

/// Matrix side of the realization: `n` for A, `2n+1` for B, `2n` for C/D.
pub fn matrix_side(rs: &RootSystem) -> usize {
    match rs.kind() {
        Kind::A => rs.size(),
        Kind::B => 2 * rs.size() + 1,
        Kind::C | Kind::D => 2 * rs.size(),
    }
}

/// Diagonal realization of a Cartan coordinate vector.
pub fn cartan_matrix(rs: &RootSystem, coords: &[i64]) -> IntMatrix {
    let n = rs.size();
    match rs.kind() {
        Kind::A => IntMatrix::diagonal(coords),
        Kind::B => {
            let mut d = Vec::with_capacity(2 * n + 1);
            d.extend_from_slice(coords);
            d.extend(coords.iter().map(|&x| -x));
            d.push(0);
            IntMatrix::diagonal(&d)
        }
        Kind::C | Kind::D => {
            let mut d = Vec::with_capacity(2 * n);
            d.extend_from_slice(coords);
            d.extend(coords.iter().map(|&x| -x));
            IntMatrix::diagonal(&d)
        }
    }
}

/// Decomposition of a positive root into its index pattern.
enum Shape {
    Minus(usize, usize),
    Plus(usize, usize),
    Short(usize),
    Long(usize),
}

fn shape(root: &Root) -> Result<Shape> {
    let nz: Vec<(usize, i64)> = root
        .coords
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (i + 1, c))
        .collect();
    match nz.as_slice() {
        [(i, 1), (j, -1)] => Ok(Shape::Minus(*i, *j)),
        [(i, 1), (j, 1)] => Ok(Shape::Plus(*i, *j)),
        [(i, 1)] => Ok(Shape::Short(*i)),
        [(i, 2)] => Ok(Shape::Long(*i)),
        _ => Err(Error::InvalidInput(format!(
            "{root} is not a positive root shape"
        ))),
    }
}

/// The standard positive root vector in the chosen realization.
pub fn root_matrix(rs: &RootSystem, root: &Root) -> Result<IntMatrix> {
    rs.index_of(root)?;
    let n = rs.size();
    let side = matrix_side(rs);
    let mut m = IntMatrix::zero(side);
    match (rs.kind(), shape(root)?) {
        (Kind::A, Shape::Minus(i, j)) => m.add_entry(i - 1, j - 1, 1),
        (Kind::B | Kind::C | Kind::D, Shape::Minus(i, j)) => {
            m.add_entry(i - 1, j - 1, 1);
            m.add_entry(n + j - 1, n + i - 1, -1);
        }
        (Kind::C, Shape::Plus(i, j)) => {
            m.add_entry(i - 1, n + j - 1, 1);
            m.add_entry(j - 1, n + i - 1, 1);
        }
        (Kind::B | Kind::D, Shape::Plus(i, j)) => {
            m.add_entry(i - 1, n + j - 1, 1);
            m.add_entry(j - 1, n + i - 1, -1);
        }
        (Kind::C, Shape::Long(i)) => m.add_entry(i - 1, n + i - 1, 1),
        (Kind::B, Shape::Short(i)) => {
            m.add_entry(i - 1, 2 * n, 1);
            m.add_entry(2 * n, n + i - 1, -1);
        }
        (k, _) => {
            return Err(Error::InvalidInput(format!(
                "{root} is not a root of type {k}"
            )))
        }
    }
    Ok(m)
}

/// The matching negative root vector, normalized so that
/// `[X_root, Y_root]` is the coroot matrix.
pub fn neg_root_matrix(rs: &RootSystem, root: &Root) -> Result<IntMatrix> {
    rs.index_of(root)?;
    let n = rs.size();
    let side = matrix_side(rs);
    let mut m = IntMatrix::zero(side);
    match (rs.kind(), shape(root)?) {
        (Kind::A, Shape::Minus(i, j)) => m.add_entry(j - 1, i - 1, 1),
        (Kind::B | Kind::C | Kind::D, Shape::Minus(i, j)) => {
            m.add_entry(j - 1, i - 1, 1);
            m.add_entry(n + i - 1, n + j - 1, -1);
        }
        (Kind::C, Shape::Plus(i, j)) => {
            m.add_entry(n + j - 1, i - 1, 1);
            m.add_entry(n + i - 1, j - 1, 1);
        }
        (Kind::B | Kind::D, Shape::Plus(i, j)) => {
            m.add_entry(n + j - 1, i - 1, 1);
            m.add_entry(n + i - 1, j - 1, -1);
        }
        (Kind::C, Shape::Long(i)) => m.add_entry(n + i - 1, i - 1, 1),
        (Kind::B, Shape::Short(i)) => {
            // factor two keeps the bracket equal to the (short) coroot
            m.add_entry(2 * n, i - 1, 2);
            m.add_entry(n + i - 1, 2 * n, -2);
        }
        (k, _) => {
            return Err(Error::InvalidInput(format!(
                "{root} is not a root of type {k}"
            )))
        }
    }
    Ok(m)
}

/// Jordan type of a nilpotent matrix via exact ranks of its powers.
pub fn jordan_type(m: &IntMatrix) -> Result<Partition> {
    let n = m.n;
    let mut ranks = vec![n];
    let mut power = m.clone();
    while !power.is_zero() {
        if ranks.len() > n {
            return Err(Error::InvalidInput(
                "matrix is not nilpotent: powers never vanish".into(),
            ));
        }
        ranks.push(power.rank());
        power = power.mul(m);
    }
    ranks.push(0);
    // parts of size >= k number rank(M^{k-1}) - rank(M^k)
    let mut parts = Vec::new();
    for k in 1..ranks.len() {
        let ge_k = ranks[k - 1] - ranks[k];
        let ge_k1 = if k + 1 < ranks.len() {
            ranks[k] - ranks[k + 1]
        } else {
            0
        };
        for _ in 0..ge_k.saturating_sub(ge_k1) {
            parts.push(k);
        }
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).map_err(|e| Error::Internal(format!("bad Jordan type: {e}")))
}

/// Settings of the genericity protocol for associated orbits.
#[derive(Debug, Clone, Copy)]
pub struct OrbitConfig {
    pub seed: u64,
    pub trials: usize,
}

impl Default for OrbitConfig {
    fn default() -> Self {
        OrbitConfig { seed: 7, trials: 3 }
    }
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

/// Associated orbit of an ideal: the Jordan type of a generic element.
///
/// Coefficients are drawn uniformly from `1..=2^20`; the answer is the
/// dominance maximum over `trials` independent draws, which exists for all
/// but a negligible set of draws because the generic type is attained on a
/// dense open set. The per-ideal stream is derived from the seed and the
/// ideal's root set, so results do not depend on evaluation order.
pub fn associated_orbit(
    rs: &RootSystem,
    ideal: &AdNilpotentIdeal,
    cfg: &OrbitConfig,
) -> Result<Partition> {
    let side = matrix_side(rs);
    if ideal.dim() == 0 {
        return Ok(Partition::new(vec![1; side]).expect("trivial partition"));
    }
    let mats: Vec<IntMatrix> = ideal
        .root_set()
        .iter()
        .map(|i| root_matrix(rs, rs.root(i)))
        .collect::<Result<_>>()?;
    let bits = ideal.root_set().0;
    let base = cfg.seed ^ splitmix((bits >> 64) as u64 ^ splitmix(bits as u64));

    for round in 0..3 {
        let mut types: Vec<Partition> = Vec::with_capacity(cfg.trials);
        for trial in 0..cfg.trials {
            let mut rng = ChaCha8Rng::seed_from_u64(splitmix(base ^ (round * 1000 + trial) as u64));
            let mut x = IntMatrix::zero(side);
            for m in &mats {
                let c = BigInt::from(rng.gen_range(1..=1i64 << 20));
                x.add_scaled(m, &c);
            }
            types.push(jordan_type(&x)?);
        }
        let maximal = types.iter().find(|t| {
            types
                .iter()
                .all(|other| other.dominance_leq(t).unwrap_or(false))
        });
        if let Some(t) = maximal {
            return Ok(t.clone());
        }
        // dominance-incomparable draws: retry with fresh coefficients
    }
    Err(Error::Internal(
        "genericity protocol failed to produce a dominance maximum".into(),
    ))
}

/// Per-orbit minimum over all ad-nilpotent ideals.
#[derive(Debug, Clone)]
pub struct OrbitMin {
    pub min_dim: usize,
    /// Number of ideals attaining the minimum.
    pub minimizer_count: usize,
    /// Generator antichain of the first minimizing ideal in enumeration order.
    pub witness: Vec<Root>,
}

/// Results of grouping every ideal by its associated orbit.
#[derive(Debug, Clone)]
pub struct OrbitMinTable {
    pub by_orbit: BTreeMap<Partition, OrbitMin>,
    pub ideal_count: usize,
}

/// Enumerates every ad-nilpotent ideal of the system, computes each
/// associated orbit, and records the minimum dimension per orbit.
pub fn min_dims_by_orbit(kind: Kind, size: usize, cfg: &OrbitConfig) -> Result<OrbitMinTable> {
    let rs = RootSystem::build(kind, size)?;
    if rs.num_positive() > ENUMERATION_GUARD {
        return Err(Error::Guard(format!(
            "{kind}{size} has {} positive roots; the exhaustive oracle is limited to {ENUMERATION_GUARD}",
            rs.num_positive()
        )));
    }
    let mut table = OrbitMinTable {
        by_orbit: BTreeMap::new(),
        ideal_count: 0,
    };
    for ideal in rs.ideals() {
        table.ideal_count += 1;
        let orbit = associated_orbit(&rs, &ideal, cfg)?;
        let dim = ideal.dim();
        let entry = table.by_orbit.entry(orbit).or_insert_with(|| OrbitMin {
            min_dim: usize::MAX,
            minimizer_count: 0,
            witness: Vec::new(),
        });
        if dim < entry.min_dim {
            entry.min_dim = dim;
            entry.minimizer_count = 1;
            entry.witness = ideal.generators(&rs).into_iter().cloned().collect();
        } else if dim == entry.min_dim {
            entry.minimizer_count += 1;
        }
    }
    Ok(table)
}

/// Exact verification of the three bracket identities of a standard triple.
pub fn verify_triple(rs: &RootSystem, triple: &TripleData) -> Result<bool> {
    let side = matrix_side(rs);
    let h = cartan_matrix(rs, &triple.element.eval_coords()).to_rational();
    let mut x = IntMatrix::zero(side);
    for r in &triple.x_roots {
        x.add_scaled(&root_matrix(rs, r)?, &BigInt::from(1));
    }
    let x = x.to_rational();
    let mut y = RatMatrix::zero(side);
    for (r, a) in &triple.y_terms {
        y.add_scaled(&neg_root_matrix(rs, r)?, a);
    }
    let hx = h.commutator(&x).sub(&x.scaled(2));
    let hy = h.commutator(&y).sub(&y.scaled(-2));
    let xy = x.commutator(&y).sub(&h);
    Ok(hx.is_zero() && hy.is_zero() && xy.is_zero())
}

/// Exact-rank check of the decomposition of the grade-2 slice into the
/// images of the Cartan and of the two nilpotent halves of the grade-0
/// centralizer.
#[derive(Debug, Clone)]
pub struct KostantReport {
    pub cartan_rank: usize,
    pub plus_rank: usize,
    pub minus_rank: usize,
    pub grade2_dim: usize,
    pub generator_count: usize,
}

impl KostantReport {
    pub fn passed(&self) -> bool {
        self.cartan_rank + self.plus_rank + self.minus_rank == self.grade2_dim
            && self.cartan_rank == self.generator_count
    }
}

/// Runs the decomposition check for a label whose generator set is an
/// antichain (types A and D).
pub fn kostant_decomposition_check(label: &OrbitLabel) -> Result<KostantReport> {
    if !matches!(label.kind(), Kind::A | Kind::D) {
        return Err(Error::InvalidInput(format!(
            "decomposition check applies to types A and D, not {}",
            label.kind()
        )));
    }
    let built = minimal_ideal(label)?;
    let rs = &built.system;
    if !rs.is_antichain(&built.generators.roots)? {
        return Err(Error::InvalidInput(format!(
            "generator set of {label} is not an antichain; the decomposition needs one"
        )));
    }
    let coords = built.element.eval_coords();
    let side = matrix_side(rs);
    let mut x = IntMatrix::zero(side);
    for r in &built.generators.roots {
        x.add_scaled(&root_matrix(rs, r)?, &BigInt::from(1));
    }

    let bracket_rows = |mats: Vec<IntMatrix>| -> usize {
        let rows: Vec<Vec<BigInt>> = mats.iter().map(|m| x.commutator(m).row_vector()).collect();
        bareiss_rank(rows)
    };

    // Cartan basis: diagonal matrices spanning the Cartan of the realization
    let n = rs.size();
    let mut cartan_basis = Vec::new();
    match rs.kind() {
        Kind::A => {
            for k in 0..n - 1 {
                let mut coordsk = vec![0i64; n];
                coordsk[k] = 1;
                coordsk[k + 1] = -1;
                cartan_basis.push(cartan_matrix(rs, &coordsk));
            }
        }
        _ => {
            for k in 0..n {
                let mut coordsk = vec![0i64; n];
                coordsk[k] = 1;
                cartan_basis.push(cartan_matrix(rs, &coordsk));
            }
        }
    }
    let cartan_rank = bracket_rows(cartan_basis);

    let zero_roots: Vec<&Root> = rs
        .positive_roots()
        .iter()
        .filter(|r| r.eval(&coords) == 0)
        .collect();
    let plus_rank = bracket_rows(
        zero_roots
            .iter()
            .map(|r| root_matrix(rs, r))
            .collect::<Result<_>>()?,
    );
    let minus_rank = bracket_rows(
        zero_roots
            .iter()
            .map(|r| neg_root_matrix(rs, r))
            .collect::<Result<_>>()?,
    );

    let grade2_dim = rs
        .positive_roots()
        .iter()
        .filter(|r| r.eval(&coords) == 2)
        .count();

    Ok(KostantReport {
        cartan_rank,
        plus_rank,
        minus_rank,
        grade2_dim,
        generator_count: built.generators.roots.len(),
    })
}

/// `X` as a matrix: the unit-coefficient sum of the generator root vectors.
pub fn nilpositive_matrix(built: &construct::Construction) -> Result<IntMatrix> {
    let side = matrix_side(&built.system);
    let mut x = IntMatrix::zero(side);
    for r in &built.generators.roots {
        x.add_scaled(&root_matrix(&built.system, r)?, &BigInt::from(1));
    }
    Ok(x)
}

/// Checks `[H, X_root] = value * X_root` for every positive root; the
/// defining property of the realization.
pub fn check_cartan_action(rs: &RootSystem, element: &DynkinElement) -> Result<bool> {
    let h = cartan_matrix(rs, &element.eval_coords());
    for root in rs.positive_roots() {
        let xr = root_matrix(rs, root)?;
        let lhs = h.commutator(&xr);
        let rhs = xr.scaled(element.value_on(root));
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Membership of a matrix in the realized algebra: tracelessness for A, the
/// symmetry condition against the invariant form for B, C, D.
pub fn in_algebra(rs: &RootSystem, m: &IntMatrix) -> bool {
    use num_traits::Zero;
    let n = rs.size();
    let side = matrix_side(rs);
    match rs.kind() {
        Kind::A => m.trace().is_zero(),
        Kind::B | Kind::D => {
            // G = [[0,I,0],[I,0,0],[0,0,1]] (corner block only for B)
            let mut g = IntMatrix::zero(side);
            for i in 0..n {
                g.add_entry(i, n + i, 1);
                g.add_entry(n + i, i, 1);
            }
            if rs.kind() == Kind::B {
                g.add_entry(2 * n, 2 * n, 1);
            }
            let mut s = m.transpose().mul(&g);
            s.add_scaled(&g.mul(m), &BigInt::from(1));
            s.is_zero()
        }
        Kind::C => {
            // J = [[0,I],[-I,0]]
            let mut j = IntMatrix::zero(side);
            for i in 0..n {
                j.add_entry(i, n + i, 1);
                j.add_entry(n + i, i, -1);
            }
            let mut s = m.transpose().mul(&j);
            s.add_scaled(&j.mul(m), &BigInt::from(1));
            s.is_zero()
        }
    }
}

/// Associated orbit of the level-2 graded ideal; by the density theorem it
/// must be the orbit of the label itself.
pub fn dynkin_ideal_orbit(label: &OrbitLabel, cfg: &OrbitConfig) -> Result<Partition> {
    let rs = RootSystem::build(label.kind(), label.system_size())?;
    let el = dynkin_element(label);
    let q2 = graded_ideal(&rs, &el, 2)?;
    associated_orbit(&rs, &q2, cfg)
}

/// Corrupts the first nilnegative coefficient; the bracket check must then
/// fail. Used as a negative control.
pub fn corrupt_triple(triple: &TripleData) -> TripleData {
    let mut bad = triple.clone();
    if let Some((_, a)) = bad.y_terms.first_mut() {
        *a += BigRational::from(BigInt::from(1));
    }
    bad
}
