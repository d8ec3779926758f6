// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use gridify_core::experiment::{
    aggregate, aggregate_csv, cases_csv, load_corpus, optimal_baseline, place, run_experiment,
    scale_to_resolution, ExperimentConfig,
};
use gridify_core::fixtures::{
    comb_polygon_with, diagonal_sliver, random_simple_polygon, random_star_polygon, thin_sliver, CombLayout,
};
use gridify_core::frechet::construct_frechet;
use gridify_core::grid::nonogram_clues;
use gridify_core::hausdorff::{construct_hausdorff, postprocess, PostprocessConfig, Q4Strategy};
use gridify_core::io::{parse_polygon, polygon_to_json, polygon_to_text};
use gridify_core::metrics::{
    directed_segments, frechet_closed, narrowness, region_directed, symmetric_difference_area,
    symmetric_difference_normalized, Region, RegionOracle, SegmentIndex,
};
use gridify_core::svg::render_svg;
use gridify_core::{CellSet, Polygon};

#[derive(Parser)]
#[command(name = "gridify", version, about = "Turn simple polygons into grid polygons")]
struct Cli {
    /// Input file (polygon in text or JSON format, or experiment config)
    #[arg(long = "in", global = true)]
    input: Option<PathBuf>,
    /// Output file; stdout if omitted
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Certification tolerance for measured distances
    #[arg(long, global = true, default_value_t = 1e-4)]
    tol: f64,
    /// Worker threads
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Grid polygon with bounded Hausdorff distance
    Hausdorff {
        #[arg(long, value_enum, default_value_t = Strategy::Arbitrary)]
        strategy: Strategy,
        /// Comma-separated post-processing operations: add, remove, shift
        #[arg(long, value_delimiter = ',')]
        post: Vec<PostOp>,
        #[command(flatten)]
        extra: Extra,
    },
    /// Grid polygon with bounded Fréchet distance
    Frechet {
        #[command(flatten)]
        extra: Extra,
    },
    /// All cells covered at least half by the polygon
    Baseline {
        #[command(flatten)]
        extra: Extra,
    },
    /// Similarity metrics between a polygon and a cell set
    Metrics {
        /// Polygon file (alternative to --in)
        #[arg(long)]
        poly: Option<PathBuf>,
        #[arg(long)]
        cells: PathBuf,
    },
    /// α-narrowness of a polygon with a witness pair
    Narrowness {
        #[arg(long, default_value_t = std::f64::consts::SQRT_2)]
        alpha: f64,
    },
    /// Generate test polygons
    Fixture {
        #[command(subcommand)]
        kind: FixtureKind,
        #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
        format: Format,
        /// Scale so the bounding box has this area, anchored at the origin
        #[arg(long, global = true)]
        resolution: Option<f64>,
        /// Then translate by `dx,dy` in [0, 1)²
        #[arg(long, global = true, value_delimiter = ',')]
        offset: Option<Vec<f64>>,
    },
    /// Run an experiment sweep from a JSON config
    Experiment {
        /// Experiment config (alternative to --in)
        #[arg(long)]
        config: Option<PathBuf>,
        /// Write the aggregate table here
        #[arg(long)]
        aggregate: Option<PathBuf>,
    },
    /// Render a polygon and a cell set as SVG
    Render {
        #[arg(long)]
        cells: Option<PathBuf>,
    },
    /// Nonogram clues for a cell set, or for the post-processed Hausdorff
    /// output of a polygon given with --in
    Nonogram {
        #[arg(long)]
        cells: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Extra {
    /// Also write an SVG rendering
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Also write a JSON report
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Subcommand)]
enum FixtureKind {
    /// Comb polygon with narrowness β
    Comb {
        #[arg(long)]
        beta: f64,
        #[arg(long, value_enum, default_value_t = Layout::Uniform)]
        layout: Layout,
    },
    /// Random simple polygon (uses --seed)
    Random {
        #[arg(long)]
        n: usize,
        /// Star-shaped instead of 2-opt untangled
        #[arg(long)]
        star: bool,
    },
    /// Thin zigzag sliver, or with --diagonal a thin diagonal parallelogram
    Sliver {
        #[arg(long, default_value_t = 6.0)]
        length: f64,
        #[arg(long, default_value_t = 0.1)]
        width: f64,
        #[arg(long, default_value_t = 2)]
        turns: usize,
        #[arg(long)]
        diagonal: Option<f64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Strategy {
    Arbitrary,
    Greedy,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum PostOp {
    Add,
    Remove,
    Shift,
}

#[derive(Clone, Copy, ValueEnum)]
enum Layout {
    Uniform,
    Literal,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

enum Failure {
    Validation(String),
    Invariant(String),
}

impl From<gridify_core::Error> for Failure {
    fn from(e: gridify_core::Error) -> Self {
        if e.is_invariant_violation() {
            Failure::Invariant(e.to_string())
        } else {
            Failure::Validation(e.to_string())
        }
    }
}

type Res<T = ()> = Result<T, Failure>;

fn invalid(msg: impl Into<String>) -> Failure {
    Failure::Validation(msg.into())
}

fn read(path: &Path) -> Res<String> {
    std::fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn write(path: Option<&Path>, content: &str) -> Res {
    match path {
        Some(p) => std::fs::write(p, content).map_err(|e| invalid(format!("{}: {e}", p.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn read_polygon(path: Option<&Path>) -> Res<Polygon> {
    let path = path.ok_or_else(|| invalid("missing --in polygon"))?;
    Ok(parse_polygon(&read(path)?)?)
}

fn read_cells(path: &Path) -> Res<CellSet> {
    Ok(CellSet::from_json(&read(path)?)?)
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

fn write_extra(extra: &Extra, p: &Polygon, q: &CellSet, report: serde_json::Value) -> Res {
    if let Some(svg) = &extra.svg {
        write(Some(svg), &render_svg(p, q))?;
    }
    if let Some(r) = &extra.report {
        write(Some(r), &pretty(&report))?;
    }
    Ok(())
}

fn metrics_report(p: &Polygon, q: &CellSet, tol: f64) -> Res<serde_json::Value> {
    if q.is_empty() {
        return Err(invalid("cell set is empty"));
    }
    let ps: Vec<_> = p.edges().collect();
    let qs = q.boundary_segments::<f64>();
    let bpq = directed_segments(&ps, &SegmentIndex::new(qs.clone()), tol);
    let bqp = directed_segments(&qs, &SegmentIndex::new(ps), tol);
    let (po, qo) = (
        RegionOracle::new(Region::Polygon(p)),
        RegionOracle::new(Region::Cells(q)),
    );
    let rpq = region_directed(&po, &qo, tol);
    let rqp = region_directed(&qo, &po, tol);
    let frechet = match q.boundary_cycle() {
        Ok(c) if q.is_grid_polygon() => Some(frechet_closed(p.ring(), &c.corner_points(), tol)?),
        _ => None,
    };
    Ok(json!({
        "tolerance": tol,
        "symmetric_difference": symmetric_difference_area(p, q),
        "symmetric_difference_normalized": symmetric_difference_normalized(p, q),
        "hausdorff_boundary_pq": bpq,
        "hausdorff_boundary_qp": bqp,
        "hausdorff_region_pq": rpq,
        "hausdorff_region_qp": rqp,
        "frechet": frechet,
    }))
}

fn hausdorff_cells(p: &Polygon, strategy: Strategy, post: &[PostOp]) -> Res<CellSet> {
    let s = match strategy {
        Strategy::Arbitrary => Q4Strategy::Arbitrary,
        Strategy::Greedy => Q4Strategy::GreedyOverlap,
    };
    let b = construct_hausdorff(p, s)?;
    if post.is_empty() {
        return Ok(b.result);
    }
    let cfg = PostprocessConfig {
        allow_add: post.contains(&PostOp::Add),
        allow_remove: post.contains(&PostOp::Remove),
        allow_shift: post.contains(&PostOp::Shift),
        ..PostprocessConfig::default()
    };
    Ok(postprocess(&b, p, &cfg))
}

fn run(cli: Cli) -> Res {
    if !(cli.tol > 0.0) {
        return Err(invalid("--tol must be positive"));
    }
    if cli.jobs == Some(0) {
        return Err(invalid("--jobs must be positive"));
    }
    let input = cli.input.as_deref();
    let out = cli.out.as_deref();
    match cli.cmd {
        Cmd::Hausdorff {
            strategy,
            post,
            extra,
        } => {
            let p = read_polygon(input)?;
            let q = hausdorff_cells(&p, strategy, &post)?;
            write(out, &q.to_json())?;
            let report = if extra.report.is_some() {
                metrics_report(&p, &q, cli.tol)?
            } else {
                json!({})
            };
            write_extra(&extra, &p, &q, report)
        }
        Cmd::Frechet { extra } => {
            let p = read_polygon(input)?;
            let f = construct_frechet(&p)?;
            write(out, &f.cells.to_json())?;
            let report = if extra.report.is_some() {
                let d = frechet_closed(p.ring(), &f.boundary_points(), cli.tol)?;
                json!({
                    "beta_measured": f.beta_measured,
                    "claimed_bound": f.claimed_bound,
                    "measured_frechet": d.value,
                    "measured_frechet_error_bound": d.error_bound,
                })
            } else {
                json!({})
            };
            write_extra(&extra, &p, &f.cells, report)
        }
        Cmd::Baseline { extra } => {
            let p = read_polygon(input)?;
            let q = optimal_baseline(&p);
            write(out, &q.to_json())?;
            let report = json!({
                "cells": q.len(),
                "symmetric_difference_normalized": symmetric_difference_normalized(&p, &q),
                "grid_polygon": q.is_grid_polygon(),
            });
            write_extra(&extra, &p, &q, report)
        }
        Cmd::Metrics { poly, cells } => {
            let p = read_polygon(poly.as_deref().or(input))?;
            let q = read_cells(&cells)?;
            write(out, &pretty(&metrics_report(&p, &q, cli.tol)?))
        }
        Cmd::Narrowness { alpha } => {
            let p = read_polygon(input)?;
            let (beta, w) = narrowness(&p, alpha)?;
            let report = json!({
                "alpha": alpha,
                "beta": beta,
                "witness": {
                    "p": [w.p.point.x, w.p.point.y],
                    "q": [w.q.point.x, w.q.point.y],
                    "euclid": w.euclid,
                    "along": w.along,
                },
            });
            write(out, &pretty(&report))
        }
        Cmd::Fixture {
            kind,
            format,
            resolution,
            offset,
        } => {
            let p = match kind {
                FixtureKind::Comb { beta, layout } => {
                    let l = match layout {
                        Layout::Uniform => CombLayout::Uniform,
                        Layout::Literal => CombLayout::Literal,
                    };
                    comb_polygon_with(beta, l)?
                }
                FixtureKind::Random { n, star: false } => random_simple_polygon(n, cli.seed)?,
                FixtureKind::Random { n, star: true } => random_star_polygon(n, cli.seed)?,
                FixtureKind::Sliver {
                    diagonal: Some(t), ..
                } => diagonal_sliver(t)?,
                FixtureKind::Sliver {
                    length,
                    width,
                    turns,
                    diagonal: None,
                } => thin_sliver(length, width, turns)?,
            };
            let p = match resolution {
                Some(r) => scale_to_resolution(&p, r)?,
                None => p,
            };
            let p = match offset.as_deref() {
                Some(&[dx, dy]) => place(&p, (dx, dy))?,
                Some(_) => return Err(invalid("--offset takes two values dx,dy")),
                None => p,
            };
            let s = match format {
                Format::Json => polygon_to_json(&p) + "\n",
                Format::Text => polygon_to_text(&p),
            };
            write(out, &s)
        }
        Cmd::Experiment {
            config,
            aggregate: agg,
        } => {
            let path = config
                .as_deref()
                .or(input)
                .ok_or_else(|| invalid("missing --config"))?;
            let mut cfg = ExperimentConfig::from_json(&read(path)?)?;
            if cli.jobs.is_some() {
                cfg.jobs = cli.jobs;
            }
            if cfg.corpus.is_empty() {
                return Err(invalid("config has an empty corpus"));
            }
            let base = path.parent().unwrap_or(Path::new("."));
            let corpus = load_corpus(&cfg.corpus, base)?;
            let rows = run_experiment(&cfg, &corpus)?;
            write(out, &cases_csv(&rows))?;
            if let Some(a) = agg {
                write(Some(&a), &aggregate_csv(&aggregate(&rows)))?;
            }
            let mut broken = Vec::new();
            for r in &rows {
                for v in r.violations(cfg.tolerances.bound_slack) {
                    broken.push(format!(
                        "{} r={} offset={} {}: {v}",
                        r.polygon,
                        r.r,
                        r.offset,
                        r.algorithm.name()
                    ));
                }
            }
            if broken.is_empty() {
                Ok(())
            } else {
                Err(Failure::Invariant(broken.join("\n")))
            }
        }
        Cmd::Render { cells } => {
            let p = read_polygon(input)?;
            let q = match cells {
                Some(c) => read_cells(&c)?,
                None => CellSet::new(),
            };
            write(out, &render_svg(&p, &q))
        }
        Cmd::Nonogram { cells } => {
            let q = match cells {
                Some(c) => read_cells(&c)?,
                None => {
                    let p = read_polygon(input)?;
                    hausdorff_cells(
                        &p,
                        Strategy::Greedy,
                        &[PostOp::Add, PostOp::Remove, PostOp::Shift],
                    )?
                }
            };
            write(out, &nonogram_clues(&q).to_text())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if j > 0 {
            rayon_global(j);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Validation(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Invariant(m)) => {
            eprintln!("invariant violated: {m}");
            ExitCode::from(3)
        }
    }
}

fn rayon_global(jobs: usize) {
    // only fails if a pool already exists, which cannot happen this early
    let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
}
