//! Seeded instance generation and the two simulation scenarios.
//!
//! Instances are drawn with ChaCha8 (`rand_chacha::ChaCha8Rng`). Trial `t` of a
//! [`GenSpec`] uses the generator seeded by `seed_from_u64(seed)` on stream `t`,
//! and consumes `n·d` draws in row-major order. Each draw is the standard
//! `rand` `f64` sample, `(u64 >> 11) · 2⁻⁵³`, uniform on `[0, 1)`. The
//! makespan scenario mixes the dimension into the seed (see [`dimension_seed`])
//! so different `d` values get unrelated streams.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::baselines::{brute_force_opt, list_schedule};
use crate::error::Result;
use crate::online::{given_order, ratio_bound, vs_online_alg1, vs_online_alg2, Tau};
use crate::vs::{vs_makespan, VsAssignment, VsInstance};

/// Slack allowed when checking ratios against their bounds.
pub const BOUND_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algo {
    /// alg1 with `τ = ln(m·d)`.
    Alg1Real,
    /// alg1 with `τ = ⌈ln(m·d)⌉`.
    Alg1Int,
    /// alg2 (incremental) with `τ = ⌈ln(m·d)⌉`.
    Alg2,
    List,
    Optimal,
}

impl Algo {
    pub const ALL: [Algo; 5] = [
        Algo::Alg1Real,
        Algo::Alg1Int,
        Algo::Alg2,
        Algo::List,
        Algo::Optimal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algo::Alg1Real => "alg1-real",
            Algo::Alg1Int => "alg1-int",
            Algo::Alg2 => "alg2",
            Algo::List => "list",
            Algo::Optimal => "optimal",
        }
    }

    /// Runs the algorithm on `inst` with vectors arriving in `order`. The
    /// optimal oracle ignores the order.
    pub fn run(self, inst: &VsInstance, order: &[usize]) -> Result<VsAssignment> {
        match self {
            Algo::Alg1Real => vs_online_alg1(inst, Tau::RealLn, order),
            Algo::Alg1Int => vs_online_alg1(inst, Tau::IntCeil, order),
            Algo::Alg2 => vs_online_alg2(inst, order),
            Algo::List => list_schedule(inst, order),
            Algo::Optimal => brute_force_opt(inst).map(|r| r.witness),
        }
    }

    /// Worst-case approximation ratio on instances shaped like `inst`.
    pub fn ratio_bound(self, inst: &VsInstance) -> Option<f64> {
        let machines = inst.m() * inst.d();
        match self {
            Algo::Alg1Real => ratio_bound(machines, Tau::RealLn).ok(),
            Algo::Alg1Int | Algo::Alg2 => ratio_bound(machines, Tau::IntCeil).ok(),
            Algo::List => Some(inst.d() as f64 + 1.0),
            Algo::Optimal => Some(1.0),
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algo {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Algo::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown algorithm {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub seed: u64,
    pub trials: usize,
}

/// Instance `trial` of `spec`.
pub fn generate_one(spec: &GenSpec, trial: usize) -> Result<VsInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    rng.set_stream(trial as u64);
    let costs: Vec<f64> = (0..spec.n * spec.d).map(|_| rng.gen::<f64>()).collect();
    VsInstance::from_flat(spec.n, spec.m, spec.d, costs)
}

/// All `spec.trials` instances, in trial order.
pub fn generate(spec: &GenSpec) -> Result<Vec<VsInstance>> {
    (0..spec.trials).map(|t| generate_one(spec, t)).collect()
}

/// Uniformly shuffled arrival order of `n` items, reproducible per seed.
pub fn shuffled_order(n: usize, seed: u64) -> Vec<usize> {
    let mut order = given_order(n);
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    order
}

/// Seed used for dimension `d` in the makespan scenario.
pub fn dimension_seed(seed: u64, d: usize) -> u64 {
    seed ^ (d as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scenario {
    Ratio,
    Makespan,
}

impl Scenario {
    pub fn name(self) -> &'static str {
        match self {
            Scenario::Ratio => "ratio",
            Scenario::Makespan => "makespan",
        }
    }
}

impl FromStr for Scenario {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "ratio" => Ok(Scenario::Ratio),
            "makespan" => Ok(Scenario::Makespan),
            _ => Err(format!("unknown scenario {s:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialRecord {
    pub scenario: Scenario,
    pub trial: usize,
    pub d: usize,
    pub makespans: Vec<(Algo, f64)>,
    pub opt: Option<f64>,
}

impl TrialRecord {
    pub fn makespan(&self, algo: Algo) -> Option<f64> {
        self.makespans
            .iter()
            .find(|(a, _)| *a == algo)
            .map(|&(_, v)| v)
    }

    /// `makespan / opt`, when the optimum is known. A zero optimum gives ratio 1.
    pub fn ratio(&self, algo: Algo) -> Option<f64> {
        let opt = self.opt?;
        let v = self.makespan(algo)?;
        Some(if opt == 0.0 { 1.0 } else { v / opt })
    }
}

/// Five-number summary with linearly interpolated quartiles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoxStats {
    pub min: f64,
    pub q1: f64,
    pub median: f64,
    pub q3: f64,
    pub max: f64,
}

impl BoxStats {
    pub fn from_samples(samples: &[f64]) -> Option<Self> {
        if samples.is_empty() {
            return None;
        }
        let mut s = samples.to_vec();
        s.sort_by(f64::total_cmp);
        let q = |p: f64| {
            let pos = p * (s.len() - 1) as f64;
            let lo = pos.floor() as usize;
            let hi = pos.ceil() as usize;
            s[lo] + (s[hi] - s[lo]) * (pos - lo as f64)
        };
        Some(Self {
            min: s[0],
            q1: q(0.25),
            median: q(0.5),
            q3: q(0.75),
            max: s[s.len() - 1],
        })
    }
}

pub fn mean(samples: &[f64]) -> f64 {
    samples.iter().sum::<f64>() / samples.len() as f64
}

/// Spearman rank correlation (average ranks for ties).
pub fn spearman(xs: &[f64], ys: &[f64]) -> f64 {
    fn ranks(v: &[f64]) -> Vec<f64> {
        let mut idx: Vec<usize> = (0..v.len()).collect();
        idx.sort_by(|&a, &b| v[a].total_cmp(&v[b]));
        let mut r = vec![0.0; v.len()];
        let mut i = 0;
        while i < idx.len() {
            let mut j = i;
            while j + 1 < idx.len() && v[idx[j + 1]] == v[idx[i]] {
                j += 1;
            }
            let avg = (i + j) as f64 / 2.0 + 1.0;
            for &k in &idx[i..=j] {
                r[k] = avg;
            }
            i = j + 1;
        }
        r
    }
    let (rx, ry) = (ranks(xs), ranks(ys));
    let (mx, my) = (mean(&rx), mean(&ry));
    let cov: f64 = rx.iter().zip(&ry).map(|(a, b)| (a - mx) * (b - my)).sum();
    let vx: f64 = rx.iter().map(|a| (a - mx).powi(2)).sum();
    let vy: f64 = ry.iter().map(|b| (b - my).powi(2)).sum();
    cov / (vx * vy).sqrt()
}

/// Small instances where the optimum is enumerable.
pub const RATIO_SHAPE: (usize, usize, usize) = (10, 3, 20);
pub const RATIO_ALGOS: [Algo; 3] = [Algo::Alg1Real, Algo::Alg2, Algo::List];

/// Larger instances over a sweep of dimensions.
pub const MAKESPAN_N: usize = 100;
pub const MAKESPAN_M: usize = 10;
pub const MAKESPAN_DIMS: [usize; 7] = [10, 15, 20, 25, 30, 35, 40];
pub const MAKESPAN_ALGOS: [Algo; 3] = [Algo::Alg1Real, Algo::Alg2, Algo::List];

pub const DEFAULT_TRIALS: usize = 100;

#[derive(Debug, Clone, PartialEq)]
pub struct RatioReport {
    pub records: Vec<TrialRecord>,
    pub stats: Vec<(Algo, BoxStats)>,
    pub mean_ratio: Vec<(Algo, f64)>,
    /// Human-readable descriptions of every bound violation.
    pub violations: Vec<String>,
}

impl RatioReport {
    pub fn mean_ratio(&self, algo: Algo) -> Option<f64> {
        self.mean_ratio
            .iter()
            .find(|(a, _)| *a == algo)
            .map(|&(_, v)| v)
    }

    pub fn ratios(&self, algo: Algo) -> Vec<f64> {
        self.records.iter().filter_map(|r| r.ratio(algo)).collect()
    }
}

/// Runs the three online algorithms and the exhaustive oracle on `trials`
/// instances with 10 vectors, 3 partitions and 20 dimensions.
pub fn scenario_ratio(seed: u64, trials: usize) -> Result<RatioReport> {
    let (n, m, d) = RATIO_SHAPE;
    let spec = GenSpec {
        n,
        m,
        d,
        seed,
        trials,
    };
    let records = (0..trials)
        .into_par_iter()
        .map(|t| {
            let inst = generate_one(&spec, t)?;
            let order = given_order(n);
            let opt = brute_force_opt(&inst)?.optimum;
            let makespans = RATIO_ALGOS
                .iter()
                .map(|&a| Ok((a, vs_makespan(&inst, &a.run(&inst, &order)?)?)))
                .collect::<Result<Vec<_>>>()?;
            Ok(TrialRecord {
                scenario: Scenario::Ratio,
                trial: t,
                d,
                makespans,
                opt: Some(opt),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let probe = generate_one(&spec, 0)?;
    let mut stats = Vec::new();
    let mut means = Vec::new();
    let mut violations = Vec::new();
    for algo in RATIO_ALGOS {
        let ratios: Vec<f64> = records.iter().filter_map(|r| r.ratio(algo)).collect();
        if let Some(s) = BoxStats::from_samples(&ratios) {
            stats.push((algo, s));
            means.push((algo, mean(&ratios)));
        }
        let bound = algo.ratio_bound(&probe).expect("bounded algorithm");
        for r in &records {
            let ratio = r.ratio(algo).expect("optimum present");
            if ratio > bound + BOUND_SLACK || ratio < 1.0 - BOUND_SLACK {
                violations.push(format!(
                    "trial {}: {algo} ratio {ratio} outside [1, {bound}]",
                    r.trial
                ));
            }
        }
    }
    Ok(RatioReport {
        records,
        stats,
        mean_ratio: means,
        violations,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub d: usize,
    pub algo: Algo,
    pub mean_makespan: f64,
    pub trials: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MakespanReport {
    pub records: Vec<TrialRecord>,
    pub summary: Vec<SummaryRow>,
}

impl MakespanReport {
    pub fn mean(&self, d: usize, algo: Algo) -> Option<f64> {
        self.summary
            .iter()
            .find(|r| r.d == d && r.algo == algo)
            .map(|r| r.mean_makespan)
    }
}

/// Mean makespans of the online algorithms on 100-vector, 10-partition
/// instances for every dimension in [`MAKESPAN_DIMS`]. No optimum is computed.
pub fn scenario_makespan(seed: u64, trials: usize) -> Result<MakespanReport> {
    let mut records = Vec::new();
    let mut summary = Vec::new();
    for d in MAKESPAN_DIMS {
        let spec = GenSpec {
            n: MAKESPAN_N,
            m: MAKESPAN_M,
            d,
            seed: dimension_seed(seed, d),
            trials,
        };
        let batch = (0..trials)
            .into_par_iter()
            .map(|t| {
                let inst = generate_one(&spec, t)?;
                let order = given_order(spec.n);
                let makespans = MAKESPAN_ALGOS
                    .iter()
                    .map(|&a| Ok((a, vs_makespan(&inst, &a.run(&inst, &order)?)?)))
                    .collect::<Result<Vec<_>>>()?;
                Ok(TrialRecord {
                    scenario: Scenario::Makespan,
                    trial: t,
                    d,
                    makespans,
                    opt: None,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        for algo in MAKESPAN_ALGOS {
            let values: Vec<f64> = batch.iter().filter_map(|r| r.makespan(algo)).collect();
            if !values.is_empty() {
                summary.push(SummaryRow {
                    d,
                    algo,
                    mean_makespan: mean(&values),
                    trials: values.len(),
                });
            }
        }
        records.extend(batch);
    }
    Ok(MakespanReport { records, summary })
}

/// `trial,algo,makespan,opt,ratio`, one row per trial and algorithm.
pub fn ratio_csv(records: &[TrialRecord]) -> String {
    let mut out = String::from("trial,algo,makespan,opt,ratio\n");
    for r in records {
        for &(algo, makespan) in &r.makespans {
            let opt = r.opt.map(|v| v.to_string()).unwrap_or_default();
            let ratio = r.ratio(algo).map(|v| v.to_string()).unwrap_or_default();
            writeln!(out, "{},{algo},{makespan},{opt},{ratio}", r.trial).unwrap();
        }
    }
    out
}

/// `d,algo,mean_makespan,trials`, one row per dimension and algorithm.
pub fn makespan_csv(summary: &[SummaryRow]) -> String {
    let mut out = String::from("d,algo,mean_makespan,trials\n");
    for r in summary {
        writeln!(out, "{},{},{},{}", r.d, r.algo, r.mean_makespan, r.trials).unwrap();
    }
    out
}
