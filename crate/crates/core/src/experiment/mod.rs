//! Resolution scaling, placement, the unconstrained baseline and experiment
//! sweeps with CSV reports.

mod config;
mod place;
mod report;
mod run;

pub use config::{
    generated_corpus, load_corpus, Algorithm, CorpusEntry, CorpusPolygon, ExperimentConfig, Measure, Offsets,
    Placement, Tolerances,
};
pub use place::{grid_offsets, optimal_baseline, place, random_offsets, scale_to_resolution};
pub use report::{
    aggregate, aggregate_csv, cases_csv, mean_symdiff, AggregateRow, AGGREGATE_SCHEMA, CSV_SCHEMA,
};
pub use run::{run_case, run_experiment, CaseResult};
