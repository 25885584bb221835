//! Table, JSON and CSV renderings.

use clap::ValueEnum;
use rainbow_core::cache::CacheRecord;
use rainbow_core::claims::GridReport;
use rainbow_core::{Certificate, Degree2Graph, FResult, SearchStatus};
use serde_json::json;

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Column-aligned text table.
pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }

    fn widths(&self) -> Vec<usize> {
        let mut w: Vec<usize> = self.header.iter().map(|h| h.len()).collect();
        for r in &self.rows {
            for (i, c) in r.iter().enumerate() {
                w[i] = w[i].max(c.chars().count());
            }
        }
        w
    }

    pub fn print(&self, format: Format) {
        match format {
            Format::Csv => {
                println!("{}", self.header.join(","));
                for r in &self.rows {
                    let cells: Vec<String> = r.iter().map(|c| csv_cell(c)).collect();
                    println!("{}", cells.join(","));
                }
            }
            _ => {
                let w = self.widths();
                let line = |cells: &[String]| {
                    let padded: Vec<String> = cells
                        .iter()
                        .zip(&w)
                        .map(|(c, &w)| format!("{c:<w$}"))
                        .collect();
                    println!("{}", padded.join("  ").trim_end());
                };
                line(&self.header);
                for r in &self.rows {
                    line(r);
                }
            }
        }
    }
}

fn csv_cell(c: &str) -> String {
    if c.contains([',', '"', '\n']) {
        format!("\"{}\"", c.replace('"', "\"\""))
    } else {
        c.to_string()
    }
}

fn sets_text(sets: &[Vec<usize>]) -> String {
    serde_json::to_string(sets).unwrap_or_default()
}

fn status_text(s: &SearchStatus) -> String {
    match s {
        SearchStatus::Exact => "exact".into(),
        SearchStatus::LevelCap { cap } => format!("inconclusive (level cap {cap})"),
        SearchStatus::TimeBudget { seconds } => format!("inconclusive (time budget {seconds}s)"),
    }
}

pub fn listing(
    format: Format,
    g: &Degree2Graph,
    n: usize,
    jump: Option<usize>,
    sets: &[Vec<usize>],
) -> anyhow::Result<()> {
    if format == Format::Json {
        let v = json!({ "graph": g.to_string(), "n": n, "jump": jump, "count": sets.len(), "sets": sets });
        println!("{}", serde_json::to_string_pretty(&v)?);
        return Ok(());
    }
    let mut t = Table::new(&["index", "set"]);
    for (i, s) in sets.iter().enumerate() {
        t.row(vec![(i + 1).to_string(), sets_text(std::slice::from_ref(s)).trim_matches(['[', ']']).to_string()]);
    }
    t.print(format);
    if format == Format::Table {
        println!("count: {}", sets.len());
    }
    Ok(())
}

pub fn f_result(format: Format, r: &FResult, cached: bool) -> anyhow::Result<()> {
    if format == Format::Json {
        let mut v = serde_json::to_value(r)?;
        v["cached"] = json!(cached);
        println!("{}", serde_json::to_string_pretty(&v)?);
        return Ok(());
    }
    let witness = r.witness.as_ref().map(|w| sets_text(&w.to_labels())).unwrap_or_else(|| "-".into());
    let bound = if r.is_exact() { "f" } else { "f >=" };
    let mut t = Table::new(&["graph", "n", "m", "relation", "f", "status", "nodes", "classes", "group", "ms", "cached", "witness"]);
    t.row(vec![
        r.graph.clone(),
        r.n.to_string(),
        r.m.to_string(),
        bound.into(),
        r.f_value.to_string(),
        status_text(&r.status),
        r.stats.nodes.to_string(),
        r.stats.canonical_classes.to_string(),
        r.stats.group_order.to_string(),
        r.stats.wall_ms.to_string(),
        cached.to_string(),
        witness,
    ]);
    t.print(format);
    Ok(())
}

pub fn grid(format: Format, report: &GridReport) -> anyhow::Result<()> {
    if format == Format::Json {
        println!("{}", serde_json::to_string_pretty(report)?);
        return Ok(());
    }
    if format == Format::Table {
        println!("{}: {}", report.claim, report.statement);
    }
    let opt = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
    let mut t = Table::new(&["graph", "n", "m", "expected", "observed", "status", "cached", "ms", "detail"]);
    for c in &report.cells {
        let mut detail = c.detail.clone();
        if let Some(ce) = &c.counterexample {
            detail = format!("{detail} counterexample {}", sets_text(&ce.to_labels()));
        }
        t.row(vec![
            c.graph.clone(),
            c.n.to_string(),
            c.m.to_string(),
            opt(c.expected),
            opt(c.observed),
            c.status.to_string(),
            c.cached.to_string(),
            c.wall_ms.to_string(),
            detail,
        ]);
    }
    t.print(format);
    if format == Format::Table {
        println!("overall: {}", report.status());
    }
    Ok(())
}

pub fn certificate(format: Format, cert: &Certificate, json: &str) -> anyhow::Result<()> {
    if format == Format::Json {
        println!("{json}");
        return Ok(());
    }
    let pairs: Vec<String> = cert
        .rainbow
        .to_labels()
        .iter()
        .map(|[v, c]| format!("{v}:{c}"))
        .collect();
    let mut t = Table::new(&["solver", "graph", "m", "rainbow (vertex:color)", "verified"]);
    t.row(vec![
        cert.solver.clone(),
        cert.graph.clone(),
        cert.m.to_string(),
        pairs.join(" "),
        "true".into(),
    ]);
    t.print(format);
    Ok(())
}

pub fn cache(format: Format, records: &[CacheRecord]) -> anyhow::Result<()> {
    if format == Format::Json {
        println!("{}", serde_json::to_string_pretty(records)?);
        return Ok(());
    }
    let mut t = Table::new(&["graph", "n", "m", "f", "nodes", "ms"]);
    for r in records {
        t.row(vec![
            r.graph.clone(),
            r.n.to_string(),
            r.m.to_string(),
            r.f.to_string(),
            r.stats.nodes.to_string(),
            r.stats.wall_ms.to_string(),
        ]);
    }
    t.print(format);
    Ok(())
}
