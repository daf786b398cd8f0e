//! Stable text and JSON renderings of library results. The `adnil` binary
//! is a thin shell over this module, so tests can compare its output against
//! direct library calls byte for byte.

use crate::certify::CertifyReport;
use crate::construct::Construction;
use crate::dynkin::lower_bound_m;
use crate::partitions::Kind;
use crate::roots::Root;
use crate::Result;
use serde::Serialize;

/// JSON document for one constructed ideal.
#[derive(Debug, Clone, Serialize)]
pub struct IdealJson {
    pub r#type: String,
    pub size: usize,
    pub partition: Vec<usize>,
    pub variant: Option<String>,
    pub h: Vec<i64>,
    pub m: usize,
    pub dim: usize,
    pub generators: Vec<Vec<i64>>,
    pub roots: Vec<Vec<i64>>,
}

fn coords(roots: &[Root]) -> Vec<Vec<i64>> {
    roots.iter().map(|r| r.coords.clone()).collect()
}

/// CLI `--size` convention: matrix size for A, rank for B/C/D.
pub fn cli_size(built: &Construction) -> usize {
    match built.label.kind() {
        Kind::A => built.label.partition().total(),
        _ => built.label.system_size(),
    }
}

pub fn ideal_json(built: &Construction) -> Result<IdealJson> {
    let m = lower_bound_m(&built.label)?;
    let mut roots: Vec<Root> = built
        .ideal
        .roots(&built.system)
        .into_iter()
        .cloned()
        .collect();
    roots.sort();
    Ok(IdealJson {
        r#type: built.label.kind().to_string(),
        size: cli_size(built),
        partition: built.label.partition().parts().to_vec(),
        variant: built.label.variant().map(|v| v.to_string()),
        h: built.element.entries().to_vec(),
        m,
        dim: built.ideal.dim(),
        generators: coords(&built.generators.roots),
        roots: coords(&roots),
    })
}

pub fn render_json(doc: &IdealJson) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("serializable");
    s.push('\n');
    s
}

fn join_roots(roots: &[Root]) -> String {
    roots
        .iter()
        .map(|r| r.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// Right-justified staircase rendering of a type-A ideal.
pub fn ferrers_ascii(n: usize, starts: &[usize]) -> String {
    let mut out = String::new();
    for (row, &start) in starts.iter().enumerate() {
        let i = row + 1;
        let mut line = String::new();
        for col in i + 1..=n {
            line.push(if col >= start { '#' } else { '.' });
            line.push(' ');
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn ideal_text(built: &Construction) -> Result<String> {
    let m = lower_bound_m(&built.label)?;
    let mut out = String::new();
    out.push_str(&format!(
        "orbit: type {} partition {}\n",
        built.label.kind(),
        built.label
    ));
    out.push_str(&format!(
        "h: ({})\n",
        built
            .element
            .entries()
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    ));
    out.push_str(&format!(
        "generators: {}\n",
        join_roots(&built.generators.roots)
    ));
    out.push_str(&format!("dim: {}\n", built.ideal.dim()));
    out.push_str(&format!("m: {m}\n"));
    if built.label.kind() == Kind::A {
        let starts = built.system.ferrers(&built.ideal)?;
        out.push_str("diagram:\n");
        out.push_str(&ferrers_ascii(built.system.size(), &starts));
    }
    Ok(out)
}

/// JSON document for the per-orbit table of one algebra.
#[derive(Debug, Clone, Serialize)]
pub struct TableJson {
    pub r#type: String,
    pub size: usize,
    pub rows: Vec<TableRowJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableRowJson {
    pub partition: Vec<usize>,
    pub variant: Option<String>,
    pub m: usize,
    pub dim: usize,
    pub attained: bool,
}

pub fn table_rows(kind: Kind, size: usize) -> Result<Vec<TableRowJson>> {
    use crate::construct::minimal_ideal;
    use crate::partitions::all_labels;
    let mut rows = Vec::new();
    for label in all_labels(kind, size)? {
        let built = minimal_ideal(&label)?;
        let m = lower_bound_m(&label)?;
        rows.push(TableRowJson {
            partition: label.partition().parts().to_vec(),
            variant: label.variant().map(|v| v.to_string()),
            m,
            dim: built.ideal.dim(),
            attained: built.ideal.dim() == m,
        });
    }
    Ok(rows)
}

pub fn table_text(kind: Kind, size: usize, rows: &[TableRowJson]) -> String {
    let mut out = format!("type {kind} size {size}\n");
    out.push_str(&format!(
        "{:<16} {:>4} {:>6}  {}\n",
        "partition", "m", "dim", "attained"
    ));
    for row in rows {
        let mut name = row
            .partition
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        if let Some(v) = &row.variant {
            name.push_str(&format!(" ({v})"));
        }
        out.push_str(&format!(
            "{:<16} {:>4} {:>6}  {}\n",
            name,
            row.m,
            row.dim,
            if row.attained { "yes" } else { "NO" }
        ));
    }
    out
}

pub fn table_json(kind: Kind, size: usize, rows: Vec<TableRowJson>) -> String {
    let doc = TableJson {
        r#type: kind.to_string(),
        size,
        rows,
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

pub fn certify_text(report: &CertifyReport, seed: u64, trials: usize) -> String {
    let mut out = format!(
        "certifying type {} size {} (seed={seed} trials={trials})\n",
        report.kind, report.size
    );
    out.push_str(&format!("ideals enumerated: {}\n", report.ideal_count));
    out.push_str(&format!(
        "{:<16} {:>4} {:>12} {:>15} {:>11}  status\n",
        "orbit", "m", "constructed", "enumerated-min", "minimizers"
    ));
    for row in &report.rows {
        out.push_str(&format!(
            "{:<16} {:>4} {:>12} {:>15} {:>11}  {}\n",
            row.label.to_string(),
            row.lower_bound,
            row.constructed_dim,
            row.enumerated_min,
            row.minimizer_count,
            if row.ok() { "ok" } else { "MISMATCH" }
        ));
    }
    out.push_str(&format!(
        "result: {}\n",
        if report.all_ok() {
            "all orbits attain the bound"
        } else {
            "MISMATCH FOUND"
        }
    ));
    out
}
