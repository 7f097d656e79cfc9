//! Timing harness for empirical scaling.

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::generators::{gen_uniform, WeightRange};
use crate::model::{EmptyPolicy, Instance, Solution};
use crate::{oracle, solver1d, solver2d, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algo {
    Auto,
    Dp1d,
    Dp2d,
    Oracle,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Auto => "auto",
            Algo::Dp1d => "dp1d",
            Algo::Dp2d => "dp2d",
            Algo::Oracle => "oracle",
        }
    }

    /// Concrete solver for an instance of the given dimension.
    pub fn resolve(self, dimension: usize) -> Algo {
        match (self, dimension) {
            (Algo::Auto, 1) => Algo::Dp1d,
            (Algo::Auto, 2) => Algo::Dp2d,
            (Algo::Auto, _) => Algo::Oracle,
            (other, _) => other,
        }
    }

    pub fn run(self, instance: &Instance, policy: EmptyPolicy, oracle_limit: usize) -> Result<Solution> {
        match self.resolve(instance.dimension()) {
            Algo::Dp1d => solver1d::solve_1d(instance, policy),
            Algo::Dp2d => solver2d::solve_2d(instance, policy),
            Algo::Oracle => oracle::solve_bruteforce(instance, policy, oracle_limit),
            Algo::Auto => unreachable!("resolved above"),
        }
    }
}

impl FromStr for Algo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Algo> {
        match s {
            "auto" => Ok(Algo::Auto),
            "dp1d" => Ok(Algo::Dp1d),
            "dp2d" => Ok(Algo::Dp2d),
            "oracle" => Ok(Algo::Oracle),
            other => Err(Error::Contract(format!("unknown algorithm `{other}`"))),
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub algo: Algo,
    pub n: usize,
    pub seed: u64,
    pub weight: Rational,
    /// Fastest of the repeats.
    pub seconds: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    /// Least-squares slope of `ln(seconds)` against `ln(n)`.
    pub slope: Option<f64>,
}

impl BenchReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("algo,n,seed,weight,seconds\n");
        for r in &self.rows {
            let _ = writeln!(out, "{},{},{},{},{:.6}", r.algo, r.n, r.seed, r.weight, r.seconds);
        }
        out
    }
}

/// Least-squares slope through `(ln x, ln y)`; `None` with fewer than two
/// distinct x values or non-positive entries.
pub fn loglog_slope(samples: &[(f64, f64)]) -> Option<f64> {
    if samples.iter().any(|&(x, y)| x <= 0.0 || y <= 0.0) {
        return None;
    }
    let logs: Vec<(f64, f64)> = samples.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    if logs.len() < 2 || sxx == 0.0 {
        return None;
    }
    Some(sxy / sxx)
}

/// Times `algo` on seeded uniform instances of each size. The dimension is 1
/// for `dp1d` and 2 otherwise.
pub fn run_bench(algo: Algo, sizes: &[usize], seed: u64, repeats: usize, weights: WeightRange) -> Result<BenchReport> {
    let algo = match algo {
        Algo::Auto => Algo::Dp2d,
        other => other,
    };
    let dimension = if algo == Algo::Dp1d { 1 } else { 2 };
    let limit = oracle::limit_from_env();
    let mut rows = Vec::with_capacity(sizes.len());
    for &n in sizes {
        let instance = gen_uniform(n, dimension, seed, weights)?;
        let mut fastest = f64::INFINITY;
        let mut weight = Rational::default();
        for _ in 0..repeats.max(1) {
            let start = Instant::now();
            let solution = algo.run(&instance, EmptyPolicy::Allow, limit)?;
            fastest = fastest.min(start.elapsed().as_secs_f64());
            weight = solution.weight;
        }
        rows.push(BenchRow {
            algo,
            n,
            seed,
            weight,
            seconds: fastest,
        });
    }
    let samples: Vec<(f64, f64)> = rows.iter().map(|r| (r.n as f64, r.seconds)).collect();
    Ok(BenchReport {
        slope: loglog_slope(&samples),
        rows,
    })
}
