use num_traits::Zero;
use serde::Serialize;

use super::threshold::{bottleneck_graph, komlos_threshold, BottleneckGraphSpec};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graphon::{bottleneck_graphon, StepGraphon};
use crate::rational::{self, Rational};
use crate::tiling::{til_graph, verify_duality};

/// Largest host accepted by [`finite_komlos_check`].
pub const FINITE_CHECK_CAP: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TightnessReport {
    pub chi: usize,
    #[serde(with = "rational::serde_str")]
    pub chi_cr: Rational,
    #[serde(with = "rational::serde_str")]
    pub threshold: Rational,
    #[serde(with = "rational::serde_str")]
    pub min_degree: Rational,
    #[serde(with = "rational::serde_str")]
    pub fcov: Rational,
    #[serde(with = "rational::serde_str")]
    pub til: Rational,
    /// `x / v(H)`.
    #[serde(with = "rational::serde_str")]
    pub target: Rational,
    pub degree_matches: bool,
    pub fcov_matches: bool,
    pub duality_holds: bool,
    #[serde(serialize_with = "serialize_graphon")]
    pub graphon: StepGraphon,
}

impl TightnessReport {
    pub fn passed(&self) -> bool {
        self.degree_matches && self.fcov_matches && self.duality_holds
    }
}

pub(crate) fn serialize_graphon<S: serde::Serializer>(
    w: &StepGraphon,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&w.to_text())
}

/// Builds the bottleneck graphon for `χ_cr(H)` and `x` (empty bottleneck
/// block) and checks that its minimum degree equals the threshold, that
/// `fcov(H, W) = x / v(H)`, and that the tiling and cover LPs agree.
pub fn verify_tightness(h: &Graph, x: &Rational) -> Result<TightnessReport> {
    let spec = komlos_threshold(h, x)?;
    if *x >= rational::one() {
        return Err(Error::InvalidParameter(
            "tightness is only defined for x < 1".into(),
        ));
    }
    let w = bottleneck_graphon(x, &spec.chi_cr, &rational::zero())?;
    let min_degree = w.min_degree();
    let target = x / rational::int(h.order() as i64);
    let (til, fcov, duality_holds) = match verify_duality(h, &w) {
        Ok(r) => (r.til, r.fcov, true),
        Err(Error::DualityDiscrepancy { .. }) => {
            let (til, _) = crate::tiling::til_graphon(h, &w)?;
            let (fcov, _) = crate::tiling::fcov_graphon(h, &w)?;
            (til, fcov, false)
        }
        Err(e) => return Err(e),
    };
    Ok(TightnessReport {
        chi: spec.chi,
        degree_matches: min_degree == spec.delta,
        fcov_matches: fcov == target,
        chi_cr: spec.chi_cr,
        threshold: spec.delta,
        min_degree,
        fcov,
        til,
        target,
        duality_holds,
        graphon: w,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiniteCheckReport {
    pub n: usize,
    pub class_sizes: Vec<usize>,
    pub til: usize,
    /// `x·n / v(H)`.
    #[serde(with = "rational::serde_str")]
    pub target: Rational,
    pub floor_target: usize,
    pub smallest_class: usize,
    pub copies: Vec<Vec<usize>>,
}

impl FiniteCheckReport {
    pub fn meets_floor(&self) -> bool {
        self.til >= self.floor_target
    }
}

/// Exact `til(H, G)` on the `n`-vertex bottleneck graph, against `x·n/v(H)`.
pub fn finite_komlos_check(h: &Graph, x: &Rational, n: usize) -> Result<FiniteCheckReport> {
    if n > FINITE_CHECK_CAP {
        return Err(Error::TooLarge {
            what: "bottleneck graph",
            size: n,
            cap: FINITE_CHECK_CAP,
        });
    }
    let spec = BottleneckGraphSpec::for_pattern(h, x.clone(), n)?;
    let class_sizes = spec.class_sizes()?;
    let g = bottleneck_graph(&spec)?;
    let tiling = til_graph(h, &g)?;
    let target = x * rational::int(n as i64) / rational::int(h.order() as i64);
    let floor_target = rational::floor_to_usize(&target).expect("target is nonnegative");
    let smallest_class = class_sizes
        .iter()
        .copied()
        .filter(|s| !s.is_zero())
        .min()
        .unwrap_or(0);
    Ok(FiniteCheckReport {
        n,
        class_sizes,
        til: tiling.value,
        target,
        floor_target,
        smallest_class,
        copies: tiling.copies,
    })
}
