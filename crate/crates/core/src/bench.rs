//! Scaling sweeps: run a pipeline over doubling graph sizes and record one
//! row per (size, trial).

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::decompose::{color_bound, decompose};
use crate::error::{Error, Result};
use crate::graph::generate::{self, GraphKind};
use crate::graph::Graph;
use crate::output::max_diameter;
use crate::refine::Refined;
use crate::seed;
use crate::strong::{StrongCarver, Transformation};
use crate::weak::WeakCarverKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Path,
    Grid,
    Gnp,
    Regular,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Grid => "grid",
            Family::Gnp => "gnp",
            Family::Regular => "regular",
        }
    }

    /// Graph of (about) `n` nodes; grids are the largest square that fits.
    pub fn build(self, n: usize, avg_degree: f64, seed: u64) -> Result<Graph> {
        let kind = match self {
            Family::Path => GraphKind::Path { n },
            Family::Grid => {
                let side = (n as f64).sqrt().floor().max(1.0) as usize;
                GraphKind::Grid { width: side, height: side }
            }
            Family::Gnp => GraphKind::Gnp { n, p: (avg_degree / n as f64).min(1.0) },
            Family::Regular => GraphKind::RegularExpander { n, degree: 4 },
        };
        generate::generate(kind, seed)
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(Family::Path),
            "grid" => Ok(Family::Grid),
            "gnp" => Ok(Family::Gnp),
            "regular" => Ok(Family::Regular),
            other => Err(Error::InvalidParameter(format!("unknown family {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    /// Weak-to-strong transformation with the cut-or-cluster refinement.
    Refined,
    /// Weak-to-strong transformation alone.
    Transform,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Refined => "refined",
            Algorithm::Transform => "transform",
        }
    }

    pub fn carver(self, black_box: WeakCarverKind) -> Box<dyn StrongCarver> {
        let inner = Transformation { black_box };
        match self {
            Algorithm::Refined => Box::new(Refined { inner }),
            Algorithm::Transform => Box::new(inner),
        }
    }
}

impl std::str::FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "refined" => Ok(Algorithm::Refined),
            "transform" => Ok(Algorithm::Transform),
            other => Err(Error::InvalidParameter(format!("unknown algorithm {other:?}"))),
        }
    }
}

/// One CSV row. Column order is the CSV header order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub n: usize,
    pub m: usize,
    pub eps: f64,
    pub seed: u64,
    pub algo: String,
    pub colors: usize,
    pub max_diameter: usize,
    pub dead_fraction: f64,
    pub rounds: u64,
    pub wall_ms: u64,
}

pub const CSV_HEADER: &str = "n,m,eps,seed,algo,colors,max_diameter,dead_fraction,rounds,wall_ms";

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub family: Family,
    pub sizes: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    pub algorithm: Algorithm,
    pub black_box: WeakCarverKind,
    pub avg_degree: f64,
    /// Record 0 instead of the measured wall time, making the CSV
    /// byte-identical across runs.
    pub wall_time: bool,
}

impl SweepConfig {
    pub fn new(family: Family, sizes: Vec<usize>) -> Self {
        Self {
            family,
            sizes,
            trials: 1,
            seed: 0,
            algorithm: Algorithm::Refined,
            black_box: WeakCarverKind::LinialSaks,
            avg_degree: 8.0,
            wall_time: true,
        }
    }
}

/// Decomposes one graph and records it. `dead_fraction` is the share of
/// nodes left unclustered by the first carving.
pub fn run_once(g: &Graph, seed: u64, algorithm: Algorithm, black_box: WeakCarverKind) -> Result<RunRecord> {
    let carver = algorithm.carver(black_box);
    let start = Instant::now();
    let (d, ledger) = decompose(g, seed, carver.as_ref())?;
    let wall_ms = start.elapsed().as_millis() as u64;
    let clusters: Vec<&[usize]> = d.clusters.iter().map(|c| c.nodes.as_slice()).collect();
    let left = d.remaining.get(1).copied().unwrap_or(0);
    debug_assert!(d.colors <= color_bound(g.n()));
    Ok(RunRecord {
        n: g.n(),
        m: g.m(),
        eps: crate::decompose::DECOMPOSITION_EPS,
        seed,
        algo: algorithm.name().to_string(),
        colors: d.colors,
        max_diameter: max_diameter(g, &clusters),
        dead_fraction: if g.n() == 0 { 0.0 } else { left as f64 / g.n() as f64 },
        rounds: ledger.total(),
        wall_ms,
    })
}

/// Runs every (size, trial) pair in parallel; rows come back ordered by
/// (size, trial) regardless of completion order.
pub fn sweep(config: &SweepConfig) -> Result<Vec<RunRecord>> {
    let jobs: Vec<(usize, usize)> =
        config.sizes.iter().flat_map(|&n| (0..config.trials).map(move |t| (n, t))).collect();
    jobs.par_iter()
        .map(|&(n, trial)| {
            let graph_seed = seed::derive(config.seed, &[n as u64, trial as u64, 0]);
            let run_seed = seed::derive(config.seed, &[n as u64, trial as u64, 1]);
            let g = config.family.build(n, config.avg_degree, graph_seed)?;
            let mut record = run_once(&g, run_seed, config.algorithm, config.black_box)?;
            if !config.wall_time {
                record.wall_ms = 0;
            }
            Ok(record)
        })
        .collect()
}

pub fn write_csv<W: std::io::Write>(records: &[RunRecord], out: W) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r)?;
    }
    w.flush()
}

pub fn read_csv<R: std::io::Read>(input: R) -> Result<Vec<RunRecord>> {
    csv::Reader::from_reader(input)
        .deserialize()
        .enumerate()
        .map(|(i, r)| r.map_err(|e| Error::Parse { line: i + 2, msg: e.to_string() }))
        .collect()
}

/// Least-squares slope `k` of `ln rounds = k ln ln n + c`, i.e. the
/// exponent of the best polylog fit `rounds ~ (ln n)^k`.
pub fn fit_polylog_exponent(points: &[(usize, u64)]) -> Result<f64> {
    let pts: Vec<(f64, f64)> = points
        .iter()
        .filter(|&&(n, r)| n >= 3 && r > 0)
        .map(|&(n, r)| ((n as f64).ln().ln(), (r as f64).ln()))
        .collect();
    if pts.len() < 2 {
        return Err(Error::InvalidParameter("need two points with n >= 3 and rounds > 0".into()));
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::InvalidParameter("need two distinct sizes".into()));
    }
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Ok(sxy / sxx)
}

/// Integer power `k <= max_power` whose best fit `rounds ~ c (ln n)^k`
/// leaves the smallest squared residual in log space, with that residual.
pub fn best_polylog_power(points: &[(usize, u64)], max_power: u32) -> Result<(u32, f64)> {
    let pts: Vec<(f64, f64)> = points
        .iter()
        .filter(|&&(n, r)| n >= 3 && r > 0)
        .map(|&(n, r)| ((n as f64).ln().ln(), (r as f64).ln()))
        .collect();
    if pts.is_empty() {
        return Err(Error::InvalidParameter("need a point with n >= 3 and rounds > 0".into()));
    }
    let residual = |k: f64| {
        // For fixed k the least-squares ln c is the mean offset.
        let offset = pts.iter().map(|p| p.1 - k * p.0).sum::<f64>() / pts.len() as f64;
        pts.iter().map(|p| (p.1 - k * p.0 - offset).powi(2)).sum::<f64>()
    };
    Ok((0..=max_power)
        .map(|k| (k, residual(k as f64)))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap())
}

/// Calibrates `c = rounds / (ln n)^power` on the smallest size and returns
/// the largest ratio `rounds / (c (ln n)^power)` over all points. A value
/// at most 1 means the curve never outgrows the calibrated polylog.
pub fn polylog_envelope(points: &[(usize, u64)], power: f64) -> Result<f64> {
    let smallest_n = points.iter().map(|p| p.0).filter(|&n| n >= 3).min();
    let smallest_n = smallest_n.ok_or_else(|| Error::InvalidParameter("no point with n >= 3".into()))?;
    let base = points.iter().filter(|p| p.0 == smallest_n).map(|p| p.1).max().unwrap_or(0);
    let c = base.max(1) as f64 / (smallest_n as f64).ln().powf(power);
    Ok(points
        .iter()
        .filter(|p| p.0 >= 3)
        .map(|&(n, r)| r as f64 / (c * (n as f64).ln().powf(power)))
        .fold(0.0, f64::max))
}
