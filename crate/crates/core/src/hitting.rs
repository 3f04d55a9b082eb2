//! One-shot hitting times, family sweeps and the linear fit of `T` against Δ.

use std::f64::consts::FRAC_PI_2;
use std::fmt::{self, Write as _};
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::cubelike::{
    augmented_cube, check_wires, complete_graph, hypercube, random_cubelike, BitString,
    CubelikeGraph, MAX_WIRES,
};
use crate::error::{Error, Result};
use crate::walk::{format_sig, CoinModel, WalkState};

/// Probabilities closer than this count as equal when choosing `T`.
pub const TIE_TOLERANCE: f64 = 1e-9;

/// Environment variable capping sweep worker threads.
pub const THREADS_ENV: &str = "CUBEWALK_THREADS";

/// `|<target| U^T |start>|^2` with the coin traced out.
pub fn one_shot_probability(
    g: &CubelikeGraph,
    steps: usize,
    start: BitString,
    target: BitString,
) -> Result<f64> {
    one_shot_probability_with(g, CoinModel::Padded, steps, start, target)
}

pub fn one_shot_probability_with(
    g: &CubelikeGraph,
    model: CoinModel,
    steps: usize,
    start: BitString,
    target: BitString,
) -> Result<f64> {
    g.check_vertex(target)?;
    let state = WalkState::initial_with(g, start, model)?.evolved(steps);
    Ok(state.probability_at(target.value()))
}

/// Inclusive range of step counts searched for a hitting time.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Window {
    pub lo: usize,
    pub hi: usize,
}

impl Window {
    pub fn new(lo: usize, hi: usize) -> Result<Self> {
        if lo > hi {
            return Err(Error::EmptyWindow);
        }
        Ok(Window { lo, hi })
    }

    /// `[1, ceil(πΔ/2) + 5]`.
    pub fn default_for(g: &CubelikeGraph) -> Self {
        Window {
            lo: 1,
            hi: conjectured_time(g.degree()).ceil() as usize + 5,
        }
    }
}

/// `πΔ/2`.
pub fn conjectured_time(delta: usize) -> f64 {
    FRAC_PI_2 * delta as f64
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HittingRecord {
    pub family: String,
    pub n: u32,
    pub delta: usize,
    #[serde(rename = "T")]
    pub steps: usize,
    pub start: String,
    pub target: String,
    pub p: f64,
    pub window: Window,
}

/// Step count in `window` maximizing the probability at `target`.
///
/// Defaults: target is the XOR of all generators, window is
/// [`Window::default_for`]. Probabilities within [`TIE_TOLERANCE`] of the
/// maximum tie. When `πΔ/2` lies inside the window the tied `T` closest to it
/// wins, otherwise (and between equidistant candidates) the smallest.
pub fn find_hitting_time(
    g: &CubelikeGraph,
    start: BitString,
    target: Option<BitString>,
    window: Option<Window>,
) -> Result<HittingRecord> {
    find_hitting_time_with(g, CoinModel::Padded, start, target, window)
}

pub fn find_hitting_time_with(
    g: &CubelikeGraph,
    model: CoinModel,
    start: BitString,
    target: Option<BitString>,
    window: Option<Window>,
) -> Result<HittingRecord> {
    let target = target.unwrap_or_else(|| g.target_vertex());
    g.check_vertex(target)?;
    let window = window.unwrap_or_else(|| Window::default_for(g));
    let curve = probability_curve(g, model, start, target, window)?;
    let center = conjectured_time(g.degree());
    let inside = (window.lo as f64..=window.hi as f64).contains(&center);
    let (steps, p) = pick_peak(&curve, inside.then_some(center));
    Ok(HittingRecord {
        family: "custom".into(),
        n: g.dimension(),
        delta: g.degree(),
        steps,
        start: start.to_string(),
        target: target.to_string(),
        p,
        window,
    })
}

/// `(T, p(T))` for every `T` in `window`, from a single evolution.
pub fn probability_curve(
    g: &CubelikeGraph,
    model: CoinModel,
    start: BitString,
    target: BitString,
    window: Window,
) -> Result<Vec<(usize, f64)>> {
    g.check_vertex(target)?;
    let mut state = WalkState::initial_with(g, start, model)?;
    state.evolve(window.lo);
    let mut curve = Vec::with_capacity(window.hi - window.lo + 1);
    for t in window.lo..=window.hi {
        if t > window.lo {
            state.step();
        }
        curve.push((t, state.probability_at(target.value())));
    }
    Ok(curve)
}

fn pick_peak(curve: &[(usize, f64)], center: Option<f64>) -> (usize, f64) {
    let best = curve
        .iter()
        .map(|&(_, p)| p)
        .fold(f64::NEG_INFINITY, f64::max);
    curve
        .iter()
        .copied()
        .filter(|&(_, p)| best - p <= TIE_TOLERANCE)
        .min_by(|a, b| {
            let distance = |t: usize| center.map_or(0.0, |c| (t as f64 - c).abs());
            distance(a.0).total_cmp(&distance(b.0)).then(a.0.cmp(&b.0))
        })
        .expect("window is nonempty")
}

/// Graph families that can be swept over `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Hypercube,
    Augmented,
    /// Hypercube generators plus `extra` seeded random ones.
    Random {
        extra: u64,
        seed: u64,
    },
    Complete,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Hypercube => "hypercube",
            Family::Augmented => "augmented",
            Family::Random { .. } => "random",
            Family::Complete => "complete",
        }
    }

    pub fn build(self, n: u32) -> Result<CubelikeGraph> {
        match self {
            Family::Hypercube => hypercube(n),
            Family::Augmented => augmented_cube(n),
            Family::Random { extra, seed } => random_cubelike(n, extra, seed),
            Family::Complete => complete_graph(n),
        }
    }

    /// Search window used in sweeps. Complete graphs peak at `T = 4`
    /// regardless of degree, so their window is `[1, 8]`.
    pub fn window(self, g: &CubelikeGraph) -> Window {
        match self {
            Family::Complete => Window { lo: 1, hi: 8 },
            _ => Window::default_for(g),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    /// `hypercube`, `augmented`, `complete`, or `random` (extra 0, seed 0).
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hypercube" => Ok(Family::Hypercube),
            "augmented" => Ok(Family::Augmented),
            "complete" => Ok(Family::Complete),
            "random" => Ok(Family::Random { extra: 0, seed: 0 }),
            other => Err(Error::InvalidGate(format!("unknown family {other:?}"))),
        }
    }
}

/// Least-squares line `T = slope * Δ + intercept`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LinearFit {
    pub slope: f64,
    pub intercept: f64,
}

/// Least-squares fit of `ys` against `xs`.
pub fn fit_line(xs: &[f64], ys: &[f64]) -> Result<LinearFit> {
    if xs.len() < 2 {
        return Err(Error::TooFewRows {
            rows: xs.len(),
            min: 2,
        });
    }
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    if sxx == 0.0 {
        return Err(Error::DegenerateFit);
    }
    let slope = sxy / sxx;
    Ok(LinearFit {
        slope,
        intercept: my - slope * mx,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepReport {
    pub family: String,
    pub rows: Vec<HittingRecord>,
    /// Absent with fewer than two rows.
    pub fit: Option<LinearFit>,
    pub parity_violations: usize,
}

impl SweepReport {
    pub fn from_rows(family: impl Into<String>, rows: Vec<HittingRecord>) -> Self {
        let xs: Vec<f64> = rows.iter().map(|r| r.delta as f64).collect();
        let ys: Vec<f64> = rows.iter().map(|r| r.steps as f64).collect();
        let fit = fit_line(&xs, &ys).ok();
        let parity_violations = rows.iter().filter(|r| r.steps % 2 != r.delta % 2).count();
        SweepReport {
            family: family.into(),
            rows,
            fit,
            parity_violations,
        }
    }

    /// Header `family,n,delta,T,target_bits,p`, one row per `n`, then the fit
    /// as comment lines.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("family,n,delta,T,target_bits,p\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                self.family,
                r.n,
                r.delta,
                r.steps,
                r.target,
                format_sig(r.p, 12)
            );
        }
        if let Some(fit) = self.fit {
            let _ = writeln!(out, "# slope={}", format_sig(fit.slope, 12));
            let _ = writeln!(out, "# intercept={}", format_sig(fit.intercept, 12));
        }
        let _ = writeln!(out, "# parity_violations={}", self.parity_violations);
        out
    }

    /// Two tab-separated columns `delta`, `T`.
    pub fn plot_tsv(&self) -> String {
        let mut out = String::from("delta\tT\n");
        for r in &self.rows {
            let _ = writeln!(out, "{}\t{}", r.delta, r.steps);
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    pub model: CoinModel,
    /// Graphs needing more than this many wires (`n + m`) are refused.
    pub limit_wires: usize,
    /// Worker threads; `None` reads [`THREADS_ENV`], falling back to rayon's default.
    pub threads: Option<usize>,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            model: CoinModel::Padded,
            limit_wires: MAX_WIRES,
            threads: None,
        }
    }
}

fn thread_cap(explicit: Option<usize>) -> Option<usize> {
    explicit
        .or_else(|| std::env::var(THREADS_ENV).ok()?.trim().parse().ok())
        .filter(|&t| t > 0)
}

/// [`find_hitting_time`] from `0^n` for every `n` in `range`, rows ordered by `n`.
pub fn family_sweep(family: Family, range: RangeInclusive<u32>) -> Result<SweepReport> {
    family_sweep_with(family, range, &SweepOptions::default())
}

pub fn family_sweep_with(
    family: Family,
    range: RangeInclusive<u32>,
    options: &SweepOptions,
) -> Result<SweepReport> {
    if range.is_empty() {
        return Err(Error::EmptyWindow);
    }
    // Validate every row before spending time on any of them.
    let graphs = range
        .map(|n| {
            let g = family.build(n)?;
            check_wires(g.wires(), options.limit_wires)?;
            Ok(g)
        })
        .collect::<Result<Vec<_>>>()?;

    let run = |g: &CubelikeGraph| -> Result<HittingRecord> {
        let start = BitString::zeros(g.dimension())?;
        let mut record =
            find_hitting_time_with(g, options.model, start, None, Some(family.window(g)))?;
        record.family = family.name().to_string();
        Ok(record)
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = thread_cap(options.threads) {
        builder = builder.num_threads(t);
    }
    let rows = match builder.build() {
        Ok(pool) => pool.install(|| graphs.par_iter().map(run).collect::<Result<Vec<_>>>())?,
        Err(_) => graphs.iter().map(run).collect::<Result<Vec<_>>>()?,
    };
    Ok(SweepReport::from_rows(family.name(), rows))
}

/// Figures of merit for `T ≈ πΔ/2`; thresholds are left to the caller.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ConjectureVerdict {
    pub slope: f64,
    pub slope_deviation: f64,
    pub max_time_deviation: f64,
    pub parity_violations: usize,
}

pub fn conjecture_check(report: &SweepReport) -> Result<ConjectureVerdict> {
    if report.rows.len() < 3 {
        return Err(Error::TooFewRows {
            rows: report.rows.len(),
            min: 3,
        });
    }
    let fit = report.fit.ok_or(Error::DegenerateFit)?;
    let max_time_deviation = report
        .rows
        .iter()
        .map(|r| (r.steps as f64 - conjectured_time(r.delta)).abs())
        .fold(0.0, f64::max);
    Ok(ConjectureVerdict {
        slope: fit.slope,
        slope_deviation: (fit.slope - FRAC_PI_2).abs(),
        max_time_deviation,
        parity_violations: report.parity_violations,
    })
}
