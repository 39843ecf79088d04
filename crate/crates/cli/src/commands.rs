use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use serde_json::json;
use sympspin_core::analysis::{basis, run_suites, VerificationReport};
use sympspin_core::graded::{joint_kernel, Parity, SectorSpec};
use sympspin_core::operators::{parse_operator, Factor, NamedOperator, SpinorOperator};
use sympspin_core::{parse_spinor, SpinorPoly};

use crate::config::{Format, JobConfig};
use crate::output::{reports_csv, reports_text, tables_csv, tables_text, to_csv, triangle_tables, GAUSSIAN_NOTE};
use crate::UsageError;

fn usage(e: impl std::fmt::Display) -> anyhow::Error {
    UsageError(e.to_string()).into()
}

fn read_spinor(n: usize, input: Option<&str>, expr: Option<&str>) -> Result<SpinorPoly> {
    let text = match (input, expr) {
        (_, Some(e)) => e.to_string(),
        (Some("-"), None) => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading stdin")?;
            s
        }
        (Some(path), None) => fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))?,
        (None, None) => return Err(usage("one of --input or --expr is required")),
    };
    parse_spinor(text.trim(), n).map_err(usage)
}

pub fn apply(n: usize, op: &str, input: Option<&str>, expr: Option<&str>, format: Format) -> Result<ExitCode> {
    let op = parse_operator(op, n).map_err(usage)?;
    let s = read_spinor(n, input, expr)?;
    let out = op.apply(&s)?;
    let labels: Vec<String> = if op.is_vector_valued() {
        (1..=out.len()).map(|l| format!("component {l}")).collect()
    } else {
        vec![String::new()]
    };
    match format {
        Format::Text => {
            println!("{GAUSSIAN_NOTE}");
            for (label, p) in labels.iter().zip(&out) {
                if label.is_empty() {
                    println!("{p}");
                } else {
                    println!("{label}: {p}");
                }
            }
        }
        Format::Json => {
            let outputs: Vec<String> = out.iter().map(ToString::to_string).collect();
            let doc = json!({
                "gaussianFactor": "exp(-|q|^2/2)",
                "n": n,
                "op": op.to_string(),
                "input": s.to_string(),
                "outputs": outputs,
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
        Format::Csv => {
            let header = ["component".to_string(), "spinor".to_string()];
            print!("{}", to_csv(&header, out.iter().enumerate().map(|(l, p)| [(l + 1).to_string(), p.to_string()]))?);
        }
    }
    Ok(ExitCode::SUCCESS)
}

pub fn kernel(n: usize, op: &str, h: u32, q: u32, parity: Parity, format: Format) -> Result<ExitCode> {
    let expr = parse_operator(op, n).map_err(usage)?;
    let spec = SectorSpec::new(n, h, q, parity);
    // the single named operators have fast direct implementations
    let named: Option<Vec<NamedOperator>> = match expr.factors() {
        [Factor::Ds] => Some(vec![NamedOperator::dirac(n)]),
        [Factor::Xs] => Some(vec![NamedOperator::raising(n)]),
        [Factor::Es] => Some(vec![NamedOperator::euler(n)]),
        [Factor::Ts] => Some(NamedOperator::twistor_components(n)),
        [Factor::Ds, Factor::Ds] => Some(vec![NamedOperator::dirac_squared(n)]),
        _ => None,
    };
    let words = match named {
        Some(_) => Vec::new(),
        None => expr.components()?,
    };
    let ops: Vec<&dyn SpinorOperator> = match &named {
        Some(v) => v.iter().map(|o| o as &dyn SpinorOperator).collect(),
        None => words.iter().map(|o| o as &dyn SpinorOperator).collect(),
    };
    let k = joint_kernel(&ops, basis(spec))?;
    let polys: Vec<String> = k.to_polys().iter().map(ToString::to_string).collect();
    match format {
        Format::Text => {
            println!("{GAUSSIAN_NOTE}");
            println!("# kernel of {expr} on {spec}");
            println!("dim {}", k.dim());
            for p in &polys {
                println!("{p}");
            }
        }
        Format::Json => {
            let doc = json!({
                "op": expr.to_string(),
                "params": spec,
                "dim": k.dim(),
                "basis": polys,
                "subspace": k.document(),
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
        Format::Csv => {
            let header = ["index".to_string(), "spinor".to_string()];
            print!("{}", to_csv(&header, polys.iter().enumerate().map(|(i, p)| [i.to_string(), p.clone()]))?);
        }
    }
    Ok(ExitCode::SUCCESS)
}

pub fn verify(cfg: JobConfig) -> Result<ExitCode> {
    let results = run_suites(&cfg.suites, &cfg.params())?;
    let failed: Vec<String> = results
        .iter()
        .flat_map(|(_, r)| r)
        .filter(|r| !r.pass)
        .map(|r| format!("{} on {}", r.claim, r.params))
        .collect();
    if let Some(dir) = &cfg.output_path {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        for (suite, reports) in &results {
            let path = dir.join(format!("{}.json", suite.name()));
            let mut text = serde_json::to_string_pretty(reports)?;
            text.push('\n');
            fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
            println!("{}", path.display());
        }
    } else {
        let all: Vec<VerificationReport> = results.into_iter().flat_map(|(_, r)| r).collect();
        match cfg.format {
            Format::Json => println!("{}", serde_json::to_string_pretty(&all)?),
            Format::Csv => print!("{}", reports_csv(&all)?),
            Format::Text => print!("{}", reports_text(&all)),
        }
    }
    if failed.is_empty() {
        Ok(ExitCode::SUCCESS)
    } else {
        for r in &failed {
            eprintln!("failed: {r}");
        }
        Ok(ExitCode::FAILURE)
    }
}

fn report_files(inputs: &[PathBuf]) -> Result<Vec<PathBuf>> {
    let mut files = Vec::new();
    for p in inputs {
        if p.is_dir() {
            let mut found: Vec<PathBuf> = fs::read_dir(p)?
                .map(|e| e.map(|e| e.path()))
                .collect::<io::Result<Vec<_>>>()?
                .into_iter()
                .filter(|f| f.extension().is_some_and(|x| x == "json"))
                .collect();
            found.sort();
            files.extend(found);
        } else if p.is_file() {
            files.push(p.clone());
        } else {
            return Err(usage(format!("{}: no such file or directory", p.display())));
        }
    }
    Ok(files)
}

fn load_reports(path: &Path) -> Result<Vec<VerificationReport>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let reports = if value.is_array() {
        serde_json::from_value(value)
    } else {
        serde_json::from_value(value).map(|r| vec![r])
    };
    reports.map_err(|e| usage(format!("{}: not a verification report: {e}", path.display())))
}

pub fn report(inputs: &[PathBuf], format: Format) -> Result<ExitCode> {
    let mut reports = Vec::new();
    for f in report_files(inputs)? {
        reports.extend(load_reports(&f)?);
    }
    let tables = triangle_tables(&reports);
    if tables.is_empty() {
        bail!("no triangle reports among the inputs");
    }
    match format {
        Format::Csv => print!("{}", tables_csv(&tables)?),
        Format::Text => print!("{}", tables_text(&tables)),
        Format::Json => println!("{}", serde_json::to_string_pretty(&json!({ "tables": tables }))?),
    }
    Ok(ExitCode::SUCCESS)
}
