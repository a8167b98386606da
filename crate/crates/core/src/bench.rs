//! Scaling benchmark for similarity versus bisimulation.
//!
//! For each size one instance is generated from a seed, checked against the
//! preorder and bisimulation invariants on a discarded warm-up run, and then
//! timed `reps` times per algorithm. A repetition of an algorithm that runs
//! faster than [`MIN_BATCH_SECS`] times a batch of back-to-back runs and
//! records the mean. Slopes are least-squares fits of
//! `log(time)` against `log(n)` over all sizes.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::automata::alpha_map;
use crate::error::{Error, Result};
use crate::lts::Lts;
use crate::random::{random_budget_lts, random_dfa};
use crate::report::Document;
use crate::sim::{
    bisimulation_partition, check_bisimulation, check_preorder_simulation, ndet_gadget,
    refined_similarity,
};

/// Medians below this many seconds are treated as unresolvable and left out
/// of the fit.
pub const MIN_RESOLVABLE_SECS: f64 = 50e-6;

/// Runs faster than this are repeated within one repetition and averaged.
pub const MIN_BATCH_SECS: f64 = 0.02;

/// Labels in the random LTS family.
pub const RANDOM_LTS_LABELS: usize = 2;
/// Transitions drawn per state in the random LTS family.
pub const RANDOM_LTS_OUT_DEGREE: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `n` states, each with [`RANDOM_LTS_OUT_DEGREE`] transitions carrying
    /// a uniform label and a uniform target.
    RandomLts,
    /// The nondeterministic gadget over `α(A)` and `α(complement(B))` for
    /// random binary DFAs `A`, `B`, sized to `n` states in total.
    Gadget,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::RandomLts => "random-lts",
            Family::Gadget => "gadget",
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

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "random-lts" => Ok(Family::RandomLts),
            "gadget" => Ok(Family::Gadget),
            other => Err(Error::Malformed(format!("unknown family `{other}`"))),
        }
    }
}

fn instance_rng(seed: u64, n: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// The benchmark instance for `family` at size `n`. Depends only on its
/// arguments.
pub fn generate_instance(family: Family, n: usize, seed: u64) -> Lts {
    let mut rng = instance_rng(seed, n);
    match family {
        Family::RandomLts => {
            random_budget_lts(&mut rng, n.max(1), RANDOM_LTS_LABELS, RANDOM_LTS_OUT_DEGREE)
        }
        Family::Gadget => {
            // |α(A)| + |α(¬B)| + 2 = (na + 1) + (nb + 1) + 2
            let budget = n.saturating_sub(4).max(2);
            let na = budget / 2;
            let nb = budget - na;
            let a = random_dfa(&mut rng, na, 2, 0.5);
            let b = random_dfa(&mut rng, nb, 2, 0.5);
            ndet_gadget(&alpha_map(&a), &alpha_map(&b.complement()), None).lts
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Measurement {
    pub size: usize,
    pub states: usize,
    pub transitions: usize,
    pub similarity_pairs: usize,
    pub bisimulation_blocks: usize,
    /// Seconds per repetition.
    pub similarity_secs: Vec<f64>,
    pub bisimulation_secs: Vec<f64>,
    pub similarity_median: f64,
    pub bisimulation_median: f64,
    /// Runs averaged per repetition.
    pub similarity_batch: usize,
    pub bisimulation_batch: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Slopes {
    pub similarity: Option<f64>,
    pub bisimulation: Option<f64>,
    /// Sizes that entered each fit.
    pub similarity_sizes: Vec<usize>,
    pub bisimulation_sizes: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    #[serde(flatten)]
    pub document: Document,
    pub family: Family,
    pub seed: u64,
    pub reps: usize,
    pub measurements: Vec<Measurement>,
    pub slopes: Slopes,
    #[serde(default)]
    pub warnings: Vec<String>,
}

impl BenchReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "family {} seed {} reps {}",
            self.family, self.seed, self.reps
        )?;
        writeln!(
            f,
            "{:>8} {:>8} {:>8} {:>14} {:>14}",
            "n", "states", "trans", "similarity s", "bisim s"
        )?;
        for m in &self.measurements {
            writeln!(
                f,
                "{:>8} {:>8} {:>8} {:>14.6} {:>14.6}",
                m.size, m.states, m.transitions, m.similarity_median, m.bisimulation_median
            )?;
        }
        let show = |s: Option<f64>| s.map_or("n/a".to_string(), |v| format!("{v:.3}"));
        writeln!(f, "similarity slope   {}", show(self.slopes.similarity))?;
        writeln!(f, "bisimulation slope {}", show(self.slopes.bisimulation))?;
        for w in &self.warnings {
            writeln!(f, "warning: {w}")?;
        }
        Ok(())
    }
}

fn median(values: &[f64]) -> f64 {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mid = sorted.len() / 2;
    if sorted.len() % 2 == 1 {
        sorted[mid]
    } else {
        (sorted[mid - 1] + sorted[mid]) / 2.0
    }
}

/// Least-squares slope of `ln(y)` against `ln(x)`. Needs two distinct `x`
/// values and positive coordinates.
pub fn log_log_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.iter().any(|&(x, y)| x <= 0.0 || y <= 0.0) {
        return None;
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let n = logs.len() as f64;
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    if logs.len() < 2 || sxx == 0.0 {
        return None;
    }
    let sxy: f64 = logs.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    Some(sxy / sxx)
}

fn time<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let started = Instant::now();
    let value = f();
    (value, started.elapsed().as_secs_f64())
}

/// Number of runs per repetition so that a batch lasts at least
/// [`MIN_BATCH_SECS`], given one run took `single` seconds.
fn batch_size(single: f64) -> usize {
    if single >= MIN_BATCH_SECS {
        1
    } else {
        ((MIN_BATCH_SECS / single.max(1e-9)).ceil() as usize).clamp(1, 100_000)
    }
}

/// Mean seconds per run over a batch of `runs`.
fn time_batch<T: PartialEq + std::fmt::Debug>(runs: usize, expected: &T, f: impl Fn() -> T) -> f64 {
    let started = Instant::now();
    for _ in 0..runs {
        let value = std::hint::black_box(f());
        debug_assert_eq!(&value, expected);
    }
    started.elapsed().as_secs_f64() / runs as f64
}

/// Fits over all sizes whose median reached [`MIN_RESOLVABLE_SECS`].
fn fit(
    measurements: &[Measurement],
    pick: impl Fn(&Measurement) -> f64,
) -> (Option<f64>, Vec<usize>) {
    let points: Vec<&Measurement> = measurements
        .iter()
        .filter(|m| pick(m) >= MIN_RESOLVABLE_SECS)
        .collect();
    let sizes = points.iter().map(|m| m.size).collect();
    let xy: Vec<(f64, f64)> = points.iter().map(|m| (m.size as f64, pick(m))).collect();
    (log_log_slope(&xy), sizes)
}

pub fn bench_scaling(
    family: Family,
    sizes: &[usize],
    reps: usize,
    seed: u64,
) -> Result<BenchReport> {
    if reps < 3 {
        return Err(Error::Contract(format!(
            "reps must be at least 3, got {reps}"
        )));
    }
    if sizes.is_empty() || sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Contract(
            "sizes must be non-empty and strictly ascending".into(),
        ));
    }

    let mut measurements = Vec::with_capacity(sizes.len());
    let mut warnings = Vec::new();
    for &size in sizes {
        let lts = generate_instance(family, size, seed);

        // Warm-up, also the run the invariants are checked on.
        let (relation, similarity_single) = time(|| refined_similarity(&lts));
        check_preorder_simulation(&lts, &relation)
            .map_err(|what| Error::Contract(format!("similarity at n = {size} violates {what}")))?;
        let (partition, bisimulation_single) = time(|| bisimulation_partition(&lts));
        check_bisimulation(&lts, &partition).map_err(|what| {
            Error::Contract(format!("bisimulation at n = {size} violates {what}"))
        })?;

        let similarity_batch = batch_size(similarity_single);
        let bisimulation_batch = batch_size(bisimulation_single);
        let mut similarity_secs = Vec::with_capacity(reps);
        let mut bisimulation_secs = Vec::with_capacity(reps);
        for _ in 0..reps {
            similarity_secs.push(time_batch(similarity_batch, &relation, || {
                refined_similarity(&lts)
            }));
            bisimulation_secs.push(time_batch(bisimulation_batch, &partition, || {
                bisimulation_partition(&lts)
            }));
        }
        let m = Measurement {
            size,
            states: lts.num_states(),
            transitions: lts.num_transitions(),
            similarity_pairs: relation.len(),
            bisimulation_blocks: partition.num_blocks(),
            similarity_median: median(&similarity_secs),
            bisimulation_median: median(&bisimulation_secs),
            similarity_secs,
            bisimulation_secs,
            similarity_batch,
            bisimulation_batch,
        };
        for (name, value) in [
            ("similarity", m.similarity_median),
            ("bisimulation", m.bisimulation_median),
        ] {
            if value < MIN_RESOLVABLE_SECS {
                warnings.push(format!(
                    "{name} median at n = {size} is {value:.2e} s, below timer resolution; dropped from the fit"
                ));
            }
        }
        measurements.push(m);
    }

    let (similarity, similarity_sizes) = fit(&measurements, |m| m.similarity_median);
    let (bisimulation, bisimulation_sizes) = fit(&measurements, |m| m.bisimulation_median);

    let mut document = Document::new("bench");
    document.path = Some(family.name().to_string());
    if let Some(last) = measurements.last() {
        document
            .sizes
            .insert("largest_states".into(), last.states as u64);
        document
            .sizes
            .insert("largest_transitions".into(), last.transitions as u64);
    }
    let total: f64 = measurements
        .iter()
        .map(|m| m.similarity_median + m.bisimulation_median)
        .sum();
    document.timings.insert("median_total".into(), total);

    Ok(BenchReport {
        document,
        family,
        seed,
        reps,
        measurements,
        slopes: Slopes {
            similarity,
            bisimulation,
            similarity_sizes,
            bisimulation_sizes,
        },
        warnings,
    })
}
