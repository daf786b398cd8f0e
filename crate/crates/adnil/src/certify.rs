//! Per-orbit certification: for every nilpotent orbit of one algebra, the
//! exhaustively enumerated minimum ideal dimension must equal the lower
//! bound, and the constructed ideal must attain it.

use crate::construct::minimal_ideal;
use crate::dynkin::lower_bound_m_in;
use crate::oracle::{min_dims_by_orbit, OrbitConfig};
use crate::partitions::{all_labels, Kind, OrbitLabel};
use crate::roots::RootSystem;
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct OrbitCertRow {
    pub label: OrbitLabel,
    pub lower_bound: usize,
    pub constructed_dim: usize,
    pub enumerated_min: usize,
    pub minimizer_count: usize,
}

impl OrbitCertRow {
    pub fn ok(&self) -> bool {
        self.lower_bound == self.constructed_dim && self.lower_bound == self.enumerated_min
    }
}

#[derive(Debug, Clone)]
pub struct CertifyReport {
    pub kind: Kind,
    pub size: usize,
    pub ideal_count: usize,
    pub rows: Vec<OrbitCertRow>,
}

impl CertifyReport {
    pub fn all_ok(&self) -> bool {
        self.rows.iter().all(|r| r.ok())
    }
}

/// Runs the whole certification for one algebra. `size` is the matrix size
/// for type A and the rank for B, C, D.
pub fn certify(kind: Kind, size: usize, cfg: &OrbitConfig) -> Result<CertifyReport> {
    let rs = RootSystem::build(kind, size)?;
    let table = min_dims_by_orbit(kind, size, cfg)?;
    let labels = all_labels(kind, size)?;

    // every enumerated orbit must be a valid label of this algebra
    for orbit in table.by_orbit.keys() {
        if !labels.iter().any(|l| l.partition() == orbit) {
            return Err(Error::Internal(format!(
                "enumeration produced partition {orbit}, which labels no orbit of {kind}{size}"
            )));
        }
    }

    let mut rows = Vec::new();
    for label in labels {
        let built = minimal_ideal(&label)?;
        let lower = lower_bound_m_in(&rs, &label)?;
        let entry = table.by_orbit.get(label.partition()).ok_or_else(|| {
            Error::Internal(format!(
                "no enumerated ideal has associated orbit {}",
                label.partition()
            ))
        })?;
        rows.push(OrbitCertRow {
            label,
            lower_bound: lower,
            constructed_dim: built.ideal.dim(),
            enumerated_min: entry.min_dim,
            minimizer_count: entry.minimizer_count,
        });
    }
    Ok(CertifyReport {
        kind,
        size,
        ideal_count: table.ideal_count,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b2_certifies() {
        let report = certify(Kind::B, 2, &OrbitConfig::default()).unwrap();
        assert!(report.all_ok());
        assert_eq!(report.ideal_count, 6);
        assert_eq!(report.rows.len(), 4);
        let dims: Vec<usize> = report.rows.iter().map(|r| r.lower_bound).collect();
        assert_eq!(dims, vec![4, 2, 1, 0]);
    }
}
