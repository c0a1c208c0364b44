use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::threshold::komlos_threshold;
use super::tightness::serialize_graphon;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graphon::{StepGraphon, PART_CAP};
use crate::rational::{self, Rational};
use crate::tiling::fcov_graphon;

/// Density numerators are drawn from `0..=DENOMINATOR`.
const DENOMINATOR: i64 = 64;
const ZERO_CHANCE: f64 = 0.3;
const MAX_MEASURE_WEIGHT: i64 = 8;

/// Generator for trial `trial` of a run seeded with `seed`; independent of
/// how trials are scheduled.
fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// A random step graphon with `1..=k_max` parts. Measures are normalised
/// integer weights in `1..=8`; each density is `a/64` with `a` uniform in
/// `0..=64`, or forced to zero with probability 0.3.
pub fn sample_step_graphon<R: Rng>(rng: &mut R, k_max: usize) -> StepGraphon {
    let k = rng.gen_range(1..=k_max.max(1));
    let weights: Vec<i64> = (0..k)
        .map(|_| rng.gen_range(1..=MAX_MEASURE_WEIGHT))
        .collect();
    let total: i64 = weights.iter().sum();
    let measures = weights.iter().map(|&w| rational::ratio(w, total)).collect();
    let mut densities = vec![vec![rational::zero(); k]; k];
    for p in 0..k {
        for q in p..k {
            let v = if rng.gen_bool(ZERO_CHANCE) {
                rational::zero()
            } else {
                rational::ratio(rng.gen_range(0..=DENOMINATOR), DENOMINATOR)
            };
            densities[p][q] = v.clone();
            densities[q][p] = v;
        }
    }
    StepGraphon::new(measures, densities).expect("sampled data satisfies the invariants")
}

/// Raises every part whose degree is below `delta` to exactly `delta` by
/// moving its whole density row the same fraction of the way towards 1
/// (mirrored to keep symmetry). Degrees never decrease, so one pass in part
/// order suffices.
pub fn repair_min_degree(w: &StepGraphon, delta: &Rational) -> Result<StepGraphon> {
    if !rational::is_unit_interval(delta) {
        return Err(Error::InvalidParameter(
            "degree bound must lie in [0,1]".into(),
        ));
    }
    let k = w.parts();
    let mut d = w.densities().to_vec();
    let degree = |d: &[Vec<Rational>], p: usize| -> Rational {
        w.measures().iter().zip(&d[p]).map(|(m, x)| m * x).sum()
    };
    for p in 0..k {
        let current = degree(&d, p);
        if current >= *delta {
            continue;
        }
        let step = (delta - &current) / (rational::one() - &current);
        for q in 0..k {
            let raised = &d[p][q] + &step * (rational::one() - &d[p][q]);
            d[p][q] = raised.clone();
            d[q][p] = raised;
        }
    }
    StepGraphon::new(w.measures().to_vec(), d)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub trial: u64,
    #[serde(with = "rational::serde_str")]
    pub fcov: Rational,
    #[serde(serialize_with = "serialize_graphon")]
    pub graphon: StepGraphon,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub seed: u64,
    pub trials: u64,
    pub k_max: usize,
    #[serde(with = "rational::serde_str")]
    pub threshold: Rational,
    /// `x / v(H)`; every sampled graphon must have `fcov` at least this.
    #[serde(with = "rational::serde_str")]
    pub target: Rational,
    pub violations: Vec<Counterexample>,
    /// Smallest `fcov` seen, with its graphon (first trial on ties).
    pub minimum: Option<Counterexample>,
    /// Trials with `fcov` exactly equal to the target.
    pub tight: u64,
}

/// Samples `trials` graphons, repairs each to meet the minimum-degree
/// threshold for `(H, x)`, and checks `fcov(H, W) ≥ x / v(H)` exactly.
pub fn search_counterexamples(
    h: &Graph,
    x: &Rational,
    trials: u64,
    seed: u64,
    k_max: usize,
) -> Result<SearchReport> {
    if k_max == 0 || k_max > PART_CAP {
        return Err(Error::InvalidParameter(format!(
            "k_max must be in 1..={PART_CAP}"
        )));
    }
    let spec = komlos_threshold(h, x)?;
    let target = x / rational::int(h.order() as i64);
    let outcomes: Vec<Result<Counterexample>> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(seed, trial);
            let raw = sample_step_graphon(&mut rng, k_max);
            let graphon = if raw.min_degree() >= spec.delta {
                raw
            } else {
                repair_min_degree(&raw, &spec.delta)?
            };
            debug_assert!(graphon.min_degree() >= spec.delta);
            let (fcov, _) = fcov_graphon(h, &graphon)?;
            Ok(Counterexample {
                trial,
                fcov,
                graphon,
            })
        })
        .collect();
    let mut report = SearchReport {
        seed,
        trials,
        k_max,
        threshold: spec.delta.clone(),
        target: target.clone(),
        violations: Vec::new(),
        minimum: None,
        tight: 0,
    };
    for outcome in outcomes {
        let c = outcome?;
        if c.fcov < target {
            report.violations.push(c.clone());
        }
        if c.fcov == target {
            report.tight += 1;
        }
        if report.minimum.as_ref().is_none_or(|m| c.fcov < m.fcov) {
            report.minimum = Some(c);
        }
    }
    Ok(report)
}

impl SearchReport {
    pub fn min_fcov(&self) -> Option<&Rational> {
        self.minimum.as_ref().map(|m| &m.fcov)
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}
