use std::collections::HashMap;

use serde::Serialize;

use super::config::Algorithm;
use super::run::CaseResult;

/// First line of every case CSV; bump when columns change.
pub const CSV_SCHEMA: &str = "# gridify-experiment-cases v1";
pub const AGGREGATE_SCHEMA: &str = "# gridify-experiment-aggregate v1";

fn write_csv<R: Serialize>(schema: &str, rows: impl IntoIterator<Item = R>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).expect("in-memory csv write");
    }
    let body = String::from_utf8(w.into_inner().expect("in-memory csv flush")).expect("csv is utf-8");
    format!("{schema}\n{body}")
}

/// Case rows as CSV, preceded by the schema comment line. Runtimes are not
/// written so that reruns are byte-identical.
pub fn cases_csv(rows: &[CaseResult]) -> String {
    write_csv(CSV_SCHEMA, rows)
}

/// Summary over the placements of one polygon at one resolution.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AggregateRow {
    pub polygon: String,
    pub r: f64,
    pub algorithm: Algorithm,
    pub cases: usize,
    pub errors: usize,
    pub symdiff_min: Option<f64>,
    pub symdiff_avg: Option<f64>,
    pub symdiff_max: Option<f64>,
    /// Average symmetric difference relative to the baseline's, in percent above it.
    pub increase_pct: Option<f64>,
    pub performance_min: Option<f64>,
    pub performance_avg: Option<f64>,
    pub performance_max: Option<f64>,
}

fn stats(v: &[f64]) -> (Option<f64>, Option<f64>, Option<f64>) {
    if v.is_empty() {
        return (None, None, None);
    }
    let min = v.iter().copied().fold(f64::INFINITY, f64::min);
    let max = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    (Some(min), Some(v.iter().sum::<f64>() / v.len() as f64), Some(max))
}

/// Min/avg/max per (polygon, resolution, algorithm), in row order.
pub fn aggregate(rows: &[CaseResult]) -> Vec<AggregateRow> {
    let mut order: Vec<(String, f64, Algorithm)> = Vec::new();
    let mut groups: HashMap<(String, u64, Algorithm), Vec<&CaseResult>> = HashMap::new();
    for r in rows {
        let k = (r.polygon.clone(), r.r.to_bits(), r.algorithm);
        groups
            .entry(k)
            .or_insert_with(|| {
                order.push((r.polygon.clone(), r.r, r.algorithm));
                Vec::new()
            })
            .push(r);
    }
    let mut out: Vec<AggregateRow> = order
        .into_iter()
        .map(|(polygon, r, algorithm)| {
            let g = &groups[&(polygon.clone(), r.to_bits(), algorithm)];
            let sd: Vec<f64> = g.iter().filter_map(|c| c.symdiff).collect();
            let perf: Vec<f64> = g.iter().filter_map(|c| c.performance_pct).collect();
            let (symdiff_min, symdiff_avg, symdiff_max) = stats(&sd);
            let (performance_min, performance_avg, performance_max) = stats(&perf);
            AggregateRow {
                polygon,
                r,
                algorithm,
                cases: g.len(),
                errors: g.iter().filter(|c| c.error.is_some()).count(),
                symdiff_min,
                symdiff_avg,
                symdiff_max,
                increase_pct: None,
                performance_min,
                performance_avg,
                performance_max,
            }
        })
        .collect();
    let base: HashMap<(String, u64), f64> = out
        .iter()
        .filter(|a| a.algorithm == Algorithm::OptimalBaseline)
        .filter_map(|a| Some(((a.polygon.clone(), a.r.to_bits()), a.symdiff_avg?)))
        .collect();
    for a in &mut out {
        if let (Some(avg), Some(&b)) = (a.symdiff_avg, base.get(&(a.polygon.clone(), a.r.to_bits()))) {
            if b > 0.0 {
                a.increase_pct = Some(100.0 * (avg / b - 1.0));
            }
        }
    }
    out
}

pub fn aggregate_csv(rows: &[AggregateRow]) -> String {
    write_csv(AGGREGATE_SCHEMA, rows)
}

/// Mean normalized symmetric difference over the rows accepted by `keep`.
pub fn mean_symdiff(rows: &[CaseResult], keep: impl Fn(&CaseResult) -> bool) -> Option<f64> {
    let v: Vec<f64> = rows
        .iter()
        .filter(|r| keep(r))
        .filter_map(|r| r.symdiff)
        .collect();
    (!v.is_empty()).then(|| v.iter().sum::<f64>() / v.len() as f64)
}
