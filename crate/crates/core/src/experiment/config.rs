use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::place::{grid_offsets, random_offsets};
use crate::error::{Error, Result};
use crate::fixtures::{
    comb_polygon, outline, outline_names, random_simple_polygon, random_star_polygon, thin_sliver,
};
use crate::Polygon;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    HausdorffPlain,
    HausdorffQ4heur,
    HausdorffPost,
    Frechet,
    OptimalBaseline,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::HausdorffPlain,
        Algorithm::HausdorffQ4heur,
        Algorithm::HausdorffPost,
        Algorithm::Frechet,
        Algorithm::OptimalBaseline,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::HausdorffPlain => "hausdorff_plain",
            Algorithm::HausdorffQ4heur => "hausdorff_q4heur",
            Algorithm::HausdorffPost => "hausdorff_post",
            Algorithm::Frechet => "frechet",
            Algorithm::OptimalBaseline => "optimal_baseline",
        }
    }

    pub fn is_hausdorff(self) -> bool {
        matches!(
            self,
            Algorithm::HausdorffPlain | Algorithm::HausdorffQ4heur | Algorithm::HausdorffPost
        )
    }
}

/// Placement offsets: an explicit list, a `k × k` grid, or `count` seeded
/// random offsets per entry of `seeds`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Offsets {
    List(Vec<[f64; 2]>),
    Grid { grid: usize },
    Random { random: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Tolerances {
    /// Certification tolerance for measured distances.
    pub metric: f64,
    /// Slack allowed when checking proven bounds.
    pub bound_slack: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            metric: 1e-4,
            bound_slack: 1e-3,
        }
    }
}

/// Which distances to measure besides the symmetric difference.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Measure {
    /// Four directed Hausdorff distances, for every algorithm.
    pub hausdorff: bool,
    /// Fréchet distance, for every output that is a grid polygon.
    pub frechet: bool,
}

impl Default for Measure {
    fn default() -> Self {
        Measure {
            hausdorff: true,
            frechet: true,
        }
    }
}

/// A polygon source for the experiment corpus.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CorpusEntry {
    /// Polygon file in text or JSON format, relative to the config file.
    File(String),
    Random {
        n: usize,
        seed: u64,
    },
    Star {
        n: usize,
        seed: u64,
    },
    Comb {
        beta: f64,
    },
    Sliver {
        length: f64,
        width: f64,
        turns: usize,
    },
    Outline(String),
    /// Mixed stand-in corpus, see [`generated_corpus`].
    Generated {
        count: usize,
        seed: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub resolutions: Vec<f64>,
    pub offsets: Offsets,
    #[serde(default = "default_seeds")]
    pub seeds: Vec<u64>,
    pub algorithms: Vec<Algorithm>,
    #[serde(default)]
    pub tolerances: Tolerances,
    #[serde(default)]
    pub measure: Measure,
    #[serde(default)]
    pub corpus: Vec<CorpusEntry>,
    /// Worker threads; `None` uses all cores. Output does not depend on it.
    #[serde(default)]
    pub jobs: Option<usize>,
}

fn default_seeds() -> Vec<u64> {
    vec![0]
}

/// A placement: its index within the case list and the offset.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Placement {
    pub index: usize,
    pub seed: Option<u64>,
    pub offset: (f64, f64),
}

impl ExperimentConfig {
    pub fn from_json(s: &str) -> Result<Self> {
        let c: Self = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidArgument(m.to_string()));
        if self.resolutions.is_empty() || self.resolutions.iter().any(|&r| !(r > 0.0) || !r.is_finite()) {
            return bad("resolutions must be a nonempty list of positive numbers");
        }
        if self.algorithms.is_empty() {
            return bad("algorithms must be nonempty");
        }
        if self.seeds.is_empty() {
            return bad("seeds must be nonempty");
        }
        match &self.offsets {
            Offsets::List(v) if v.is_empty() => return bad("offsets must be nonempty"),
            Offsets::List(v) if v.iter().flatten().any(|t| !(0.0..1.0).contains(t)) => {
                return bad("offsets must lie in [0, 1)")
            }
            Offsets::Grid { grid: 0 } | Offsets::Random { random: 0 } => {
                return bad("offsets must be nonempty")
            }
            _ => {}
        }
        if !(self.tolerances.metric > 0.0) || !(self.tolerances.bound_slack >= 0.0) {
            return bad("tolerances must be positive");
        }
        if self.jobs == Some(0) {
            return bad("jobs must be positive");
        }
        Ok(())
    }

    pub fn placements(&self) -> Vec<Placement> {
        let fixed = |v: Vec<(f64, f64)>| {
            v.into_iter()
                .enumerate()
                .map(|(index, offset)| Placement {
                    index,
                    seed: None,
                    offset,
                })
                .collect()
        };
        match &self.offsets {
            Offsets::List(v) => fixed(v.iter().map(|&[x, y]| (x, y)).collect()),
            Offsets::Grid { grid } => fixed(grid_offsets(*grid)),
            Offsets::Random { random } => self
                .seeds
                .iter()
                .flat_map(|&s| random_offsets(*random, s).into_iter().map(move |o| (s, o)))
                .enumerate()
                .map(|(index, (s, offset))| Placement {
                    index,
                    seed: Some(s),
                    offset,
                })
                .collect(),
        }
    }
}

/// A named corpus polygon.
#[derive(Debug, Clone, PartialEq)]
pub struct CorpusPolygon {
    pub id: String,
    pub polygon: Polygon,
}

/// Stand-in corpus mixing random simple polygons, star polygons,
/// hand-digitized outlines, combs and slivers, reproducible per seed.
pub fn generated_corpus(count: usize, seed: u64) -> Result<Vec<CorpusPolygon>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let outlines = outline_names();
    let betas = [1.5, 2.0, 3.0, 4.0];
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let s: u64 = rng.gen();
        let (id, polygon) = match i % 10 {
            0..=5 => {
                let n = rng.gen_range(10..=60);
                (format!("g{i:03}-random-n{n}"), random_simple_polygon(n, s)?)
            }
            6 | 7 => {
                let n = rng.gen_range(8..=30);
                (format!("g{i:03}-star-n{n}"), random_star_polygon(n, s)?)
            }
            8 => {
                let name = outlines[(i / 10) % outlines.len()];
                (
                    format!("g{i:03}-outline-{name}"),
                    outline(name).expect("built-in outline")?,
                )
            }
            _ if (i / 10) % 2 == 0 => {
                let beta = betas[(i / 20) % betas.len()];
                (format!("g{i:03}-comb-{beta}"), comb_polygon(beta)?)
            }
            _ => (format!("g{i:03}-sliver"), thin_sliver(8.0, 1.5, 3)?),
        };
        out.push(CorpusPolygon { id, polygon });
    }
    Ok(out)
}

/// Materializes corpus entries; file paths are resolved against `base`.
pub fn load_corpus(entries: &[CorpusEntry], base: &Path) -> Result<Vec<CorpusPolygon>> {
    let mut out = Vec::new();
    for e in entries {
        match e {
            CorpusEntry::File(f) => {
                let path = base.join(f);
                let text = std::fs::read_to_string(&path)
                    .map_err(|err| Error::Parse(format!("{}: {err}", path.display())))?;
                out.push(CorpusPolygon {
                    id: f.clone(),
                    polygon: crate::io::parse_polygon(&text)?,
                });
            }
            CorpusEntry::Random { n, seed } => out.push(CorpusPolygon {
                id: format!("random-n{n}-s{seed}"),
                polygon: random_simple_polygon(*n, *seed)?,
            }),
            CorpusEntry::Star { n, seed } => out.push(CorpusPolygon {
                id: format!("star-n{n}-s{seed}"),
                polygon: random_star_polygon(*n, *seed)?,
            }),
            CorpusEntry::Comb { beta } => out.push(CorpusPolygon {
                id: format!("comb-{beta}"),
                polygon: comb_polygon(*beta)?,
            }),
            CorpusEntry::Sliver { length, width, turns } => out.push(CorpusPolygon {
                id: format!("sliver-{length}x{width}-t{turns}"),
                polygon: thin_sliver(*length, *width, *turns)?,
            }),
            CorpusEntry::Outline(name) => {
                let p = outline(name)
                    .ok_or_else(|| Error::InvalidArgument(format!("unknown outline {name:?}")))??;
                out.push(CorpusPolygon {
                    id: format!("outline-{name}"),
                    polygon: p,
                });
            }
            CorpusEntry::Generated { count, seed } => out.extend(generated_corpus(*count, *seed)?),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_config() {
        let c = ExperimentConfig::from_json(
            r#"{"resolutions": [100], "offsets": {"grid": 5}, "algorithms": ["frechet", "hausdorff_post"],
                "corpus": [{"random": {"n": 12, "seed": 3}}, {"outline": "lake"}]}"#,
        )
        .unwrap();
        assert_eq!(c.placements().len(), 25);
        assert_eq!(c.tolerances, Tolerances::default());
        assert_eq!(load_corpus(&c.corpus, Path::new(".")).unwrap().len(), 2);
        let r = ExperimentConfig::from_json(
            r#"{"resolutions": [100], "offsets": {"random": 3}, "seeds": [1, 2], "algorithms": ["frechet"]}"#,
        )
        .unwrap();
        let p = r.placements();
        assert_eq!(p.len(), 6);
        assert_eq!(p[3].seed, Some(2));
        let l = ExperimentConfig::from_json(
            r#"{"resolutions": [100], "offsets": [[0, 0], [0.5, 0.25]], "algorithms": ["frechet"]}"#,
        )
        .unwrap();
        assert_eq!(l.placements()[1].offset, (0.5, 0.25));
    }

    #[test]
    fn rejects_empty() {
        for bad in [
            r#"{"resolutions": [], "offsets": {"grid": 5}, "algorithms": ["frechet"]}"#,
            r#"{"resolutions": [100], "offsets": [], "algorithms": ["frechet"]}"#,
            r#"{"resolutions": [100], "offsets": {"grid": 5}, "algorithms": []}"#,
            r#"{"resolutions": [100], "offsets": [[1, 0]], "algorithms": ["frechet"]}"#,
            r#"{"resolutions": [100], "offsets": {"grid": 5}, "algorithms": ["nope"]}"#,
        ] {
            assert!(ExperimentConfig::from_json(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn generated_is_reproducible() {
        let a = generated_corpus(30, 1).unwrap();
        assert_eq!(a, generated_corpus(30, 1).unwrap());
        assert!(a.iter().any(|c| c.id.contains("comb")));
        assert!(a.iter().any(|c| c.id.contains("sliver")));
        assert!(a.iter().any(|c| c.id.contains("outline")));
    }
}
