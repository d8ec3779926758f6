use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::config::{Algorithm, CorpusPolygon, ExperimentConfig, Placement};
use super::place::{optimal_baseline, place, scale_to_resolution};
use crate::error::{Error, Result};
use crate::frechet::construct_frechet;
use crate::hausdorff::{construct_hausdorff, postprocess, PostprocessConfig, Q4Strategy};
use crate::metrics::{
    directed_segments, frechet_closed, region_directed, symmetric_difference_normalized, Region,
    RegionOracle, SegmentIndex,
};
use crate::{CellSet, Point, Polygon};

const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// Measurements for one (polygon, resolution, placement, algorithm) case.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseResult {
    pub polygon: String,
    pub r: f64,
    pub offset: usize,
    pub dx: f64,
    pub dy: f64,
    pub algorithm: Algorithm,
    pub cells: Option<usize>,
    pub symdiff: Option<f64>,
    /// Directed boundary distance from ∂P to ∂Q.
    pub hd_boundary_pq: Option<f64>,
    pub hd_boundary_qp: Option<f64>,
    /// Directed region distance from P to Q.
    pub hd_region_pq: Option<f64>,
    pub hd_region_qp: Option<f64>,
    pub frechet: Option<f64>,
    pub beta_measured: Option<f64>,
    pub upper_bound: Option<f64>,
    pub performance_pct: Option<f64>,
    #[serde(skip)]
    pub runtime_ms: f64,
    pub error: Option<String>,
}

impl CaseResult {
    fn empty(polygon: &str, r: f64, pl: &Placement, algorithm: Algorithm) -> Self {
        CaseResult {
            polygon: polygon.to_string(),
            r,
            offset: pl.index,
            dx: pl.offset.0,
            dy: pl.offset.1,
            algorithm,
            cells: None,
            symdiff: None,
            hd_boundary_pq: None,
            hd_boundary_qp: None,
            hd_region_pq: None,
            hd_region_qp: None,
            frechet: None,
            beta_measured: None,
            upper_bound: None,
            performance_pct: None,
            runtime_ms: 0.0,
            error: None,
        }
    }

    /// Descriptions of every proven bound this result violates by more than `slack`.
    pub fn violations(&self, slack: f64) -> Vec<String> {
        let mut out = Vec::new();
        let mut check = |name: &str, v: Option<f64>, bound: f64| {
            if let Some(v) = v {
                if v > bound + slack {
                    out.push(format!("{name} = {v} exceeds {bound}"));
                }
            }
        };
        let (near, far) = match self.algorithm {
            Algorithm::HausdorffPlain | Algorithm::HausdorffQ4heur => (0.5 * SQRT_2, 1.5 * SQRT_2),
            Algorithm::HausdorffPost => (1.5 * SQRT_2, 1.5 * SQRT_2),
            _ => (f64::INFINITY, f64::INFINITY),
        };
        check("hd_boundary_pq", self.hd_boundary_pq, near);
        check("hd_region_pq", self.hd_region_pq, near);
        check("hd_boundary_qp", self.hd_boundary_qp, far);
        check("hd_region_qp", self.hd_region_qp, far);
        if self.algorithm == Algorithm::Frechet {
            check(
                "frechet",
                self.frechet,
                self.upper_bound.unwrap_or(f64::NEG_INFINITY),
            );
        }
        out
    }
}

/// Output cells plus Fréchet details for the Fréchet algorithm.
struct Output {
    cells: CellSet,
    boundary: Option<Vec<Point>>,
    beta: Option<(f64, f64)>,
}

fn build(alg: Algorithm, p: &Polygon) -> Result<Output> {
    let plain = |cells: CellSet| Output {
        cells,
        boundary: None,
        beta: None,
    };
    Ok(match alg {
        Algorithm::HausdorffPlain => plain(construct_hausdorff(p, Q4Strategy::Arbitrary)?.result),
        Algorithm::HausdorffQ4heur => plain(construct_hausdorff(p, Q4Strategy::GreedyOverlap)?.result),
        Algorithm::HausdorffPost => {
            let b = construct_hausdorff(p, Q4Strategy::GreedyOverlap)?;
            plain(postprocess(&b, p, &PostprocessConfig::default()))
        }
        Algorithm::Frechet => {
            let f = construct_frechet(p)?;
            Output {
                boundary: Some(f.boundary_points()),
                beta: Some((f.beta_measured, f.claimed_bound)),
                cells: f.cells,
            }
        }
        Algorithm::OptimalBaseline => plain(optimal_baseline(p)),
    })
}

/// Builds one algorithm's output for a placed polygon and measures it.
pub fn run_case(
    cfg: &ExperimentConfig,
    id: &str,
    r: f64,
    pl: &Placement,
    p: &Polygon,
    alg: Algorithm,
) -> CaseResult {
    let start = Instant::now();
    let mut res = CaseResult::empty(id, r, pl, alg);
    if let Err(e) = measure(cfg, p, alg, &mut res) {
        res.error = Some(e.to_string());
    }
    res.runtime_ms = start.elapsed().as_secs_f64() * 1e3;
    res
}

fn measure(cfg: &ExperimentConfig, p: &Polygon, alg: Algorithm, res: &mut CaseResult) -> Result<()> {
    let tol = cfg.tolerances.metric;
    let out = build(alg, p)?;
    let q = &out.cells;
    res.cells = Some(q.len());
    res.symdiff = Some(symmetric_difference_normalized(p, q));
    if let Some((beta, bound)) = out.beta {
        res.beta_measured = Some(beta);
        res.upper_bound = Some(bound);
    }
    if q.is_empty() {
        return Ok(());
    }
    if cfg.measure.hausdorff {
        let ps: Vec<_> = p.edges().collect();
        let qs = q.boundary_segments::<f64>();
        res.hd_boundary_pq = Some(directed_segments(&ps, &SegmentIndex::new(qs.clone()), tol).value);
        res.hd_boundary_qp = Some(directed_segments(&qs, &SegmentIndex::new(ps), tol).value);
        let (po, qo) = (
            RegionOracle::new(Region::Polygon(p)),
            RegionOracle::new(Region::Cells(q)),
        );
        res.hd_region_pq = Some(region_directed(&po, &qo, tol).value);
        res.hd_region_qp = Some(region_directed(&qo, &po, tol).value);
    }
    let boundary = match out.boundary {
        Some(b) => Some(b),
        None if cfg.measure.frechet && q.is_grid_polygon() => Some(q.boundary_cycle()?.corner_points()),
        None => None,
    };
    if let Some(b) = boundary {
        if cfg.measure.frechet || alg == Algorithm::Frechet {
            let d = frechet_closed(p.ring(), &b, tol)?.value;
            res.frechet = Some(d);
            if let Some(ub) = res.upper_bound {
                res.performance_pct = Some(100.0 * d / ub);
            }
        }
    }
    Ok(())
}

/// Runs every (polygon, resolution, placement, algorithm) case on a worker
/// pool and returns rows sorted by that key.
pub fn run_experiment(cfg: &ExperimentConfig, corpus: &[CorpusPolygon]) -> Result<Vec<CaseResult>> {
    cfg.validate()?;
    if corpus.is_empty() {
        return Err(Error::InvalidArgument("corpus is empty".into()));
    }
    let placements = cfg.placements();
    let mut algs = cfg.algorithms.clone();
    algs.sort();
    algs.dedup();
    let mut jobs = Vec::new();
    for (pi, _) in corpus.iter().enumerate() {
        for (ri, _) in cfg.resolutions.iter().enumerate() {
            for (li, _) in placements.iter().enumerate() {
                for &a in &algs {
                    jobs.push((pi, ri, li, a));
                }
            }
        }
    }
    let work = || {
        jobs.par_iter()
            .map(|&(pi, ri, li, a)| {
                let c = &corpus[pi];
                let (r, pl) = (cfg.resolutions[ri], &placements[li]);
                let placed = scale_to_resolution(&c.polygon, r).and_then(|s| place(&s, pl.offset));
                let row = match placed {
                    Ok(p) => run_case(cfg, &c.id, r, pl, &p, a),
                    Err(e) => {
                        let mut row = CaseResult::empty(&c.id, r, pl, a);
                        row.error = Some(e.to_string());
                        row
                    }
                };
                ((pi, ri, li, a), row)
            })
            .collect::<Vec<_>>()
    };
    let mut rows = match cfg.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?
            .install(work),
        None => work(),
    };
    rows.sort_by_key(|(k, _)| *k);
    Ok(rows.into_iter().map(|(_, r)| r).collect())
}
