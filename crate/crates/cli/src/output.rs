use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use sympspin_core::analysis::VerificationReport;
use sympspin_core::graded::Parity;

pub const GAUSSIAN_NOTE: &str = "# all spinors implicitly carry exp(-|q|^2/2)";

/// Renders records as CSV, header first.
pub fn to_csv<I, R>(header: &[String], records: I) -> csv::Result<String>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
    w.write_record(header)?;
    for r in records {
        w.write_record(r)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn strings(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

pub fn reports_csv(reports: &[VerificationReport]) -> csv::Result<String> {
    let header = strings(&[
        "claim",
        "n",
        "h",
        "Q",
        "parity",
        "expectedDim",
        "observedDim",
        "equalAsSubspaces",
        "pass",
        "witnesses",
    ]);
    to_csv(
        &header,
        reports.iter().map(|r| {
            let p = r.params;
            vec![
                r.claim.clone(),
                p.n.to_string(),
                p.h.to_string(),
                p.q_bound.to_string(),
                p.parity.to_string(),
                r.expected_dim.to_string(),
                r.observed_dim.to_string(),
                r.equal_as_subspaces.to_string(),
                r.pass.to_string(),
                r.witnesses.join(" | "),
            ]
        }),
    )
}

pub fn reports_text(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let p = r.params;
        let _ = writeln!(
            out,
            "{}  {:<32} n={} h={} Q={} {:<5} expected={} observed={}",
            if r.pass { "PASS" } else { "FAIL" },
            r.claim,
            p.n,
            p.h,
            p.q_bound,
            p.parity,
            r.expected_dim,
            r.observed_dim
        );
        for w in &r.witnesses {
            let _ = writeln!(out, "      witness: {w}");
        }
    }
    out
}

/// `dim X_s^j M_l` for one `(n, Q, parity)`, indexed `[l][j]`.
#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TriangleTable {
    pub n: usize,
    #[serde(rename = "Q")]
    pub q_bound: u32,
    pub parity: Parity,
    pub rows: Vec<Vec<Option<usize>>>,
}

/// Collects the triangle reports into tables. The report at homogeneity `h`
/// contributes the antidiagonal `l + j = h`.
pub fn triangle_tables(reports: &[VerificationReport]) -> Vec<TriangleTable> {
    let mut groups: BTreeMap<(usize, u32, Parity), BTreeMap<(usize, usize), usize>> = BTreeMap::new();
    for r in reports.iter().filter(|r| r.claim == "triangle") {
        let p = r.params;
        let cells = groups.entry((p.n, p.q_bound, p.parity)).or_default();
        for j in 0..=p.h as usize {
            if let Some(&d) = r.details.get(&format!("dimSummand{j}")) {
                cells.insert((p.h as usize - j, j), d);
            }
        }
    }
    groups
        .into_iter()
        .map(|((n, q_bound, parity), cells)| {
            let size = cells.keys().map(|(l, j)| l + j + 1).max().unwrap_or(0);
            let rows = (0..size)
                .map(|l| (0..size - l).map(|j| cells.get(&(l, j)).copied()).collect())
                .collect();
            TriangleTable { n, q_bound, parity, rows }
        })
        .collect()
}

fn cell(c: Option<usize>) -> String {
    c.map_or_else(|| "-".to_string(), |d| d.to_string())
}

pub fn tables_csv(tables: &[TriangleTable]) -> csv::Result<String> {
    let width = tables.iter().map(|t| t.rows.len()).max().unwrap_or(0);
    let mut header = strings(&["n", "Q", "parity", "l"]);
    header.extend((0..width).map(|j| format!("j{j}")));
    let records = tables.iter().flat_map(|t| {
        t.rows.iter().enumerate().map(move |(l, row)| {
            let mut rec = vec![t.n.to_string(), t.q_bound.to_string(), t.parity.to_string(), l.to_string()];
            rec.extend((0..width).map(|j| row.get(j).copied().flatten().map_or_else(String::new, |d| d.to_string())));
            rec
        })
    });
    to_csv(&header, records)
}

pub fn tables_text(tables: &[TriangleTable]) -> String {
    let mut out = String::new();
    for t in tables {
        let _ = writeln!(out, "n={} Q={} {}: dim X_s^j M_l (rows l, columns j)", t.n, t.q_bound, t.parity);
        let cells: Vec<Vec<String>> = t.rows.iter().map(|r| r.iter().map(|c| cell(*c)).collect()).collect();
        let w = cells.iter().flatten().map(String::len).max().unwrap_or(1).max(2);
        let mut header = format!("{:>4}", "l\\j");
        for j in 0..t.rows.len() {
            let _ = write!(header, " {j:>w$}");
        }
        let _ = writeln!(out, "{header}");
        for (l, row) in cells.iter().enumerate() {
            let _ = write!(out, "{l:>4}");
            for c in row {
                let _ = write!(out, " {c:>w$}");
            }
            out.push('\n');
        }
        out.push('\n');
    }
    out
}
