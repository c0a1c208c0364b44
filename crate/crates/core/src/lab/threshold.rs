use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::coloring::ChromaticProfile;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graphon::BottleneckMeasures;
use crate::rational::{self, format_rational, Rational};

/// The minimum-degree threshold `x(1 − 1/χ_cr) + (1 − x)(1 − 1/(χ − 1))`
/// for a pattern `H` and a target fraction `x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThresholdSpec {
    #[serde(skip)]
    pub pattern: Graph,
    #[serde(with = "rational::serde_str")]
    pub x: Rational,
    pub chi: usize,
    #[serde(with = "rational::serde_str")]
    pub chi_cr: Rational,
    #[serde(with = "rational::serde_str")]
    pub delta: Rational,
}

pub(crate) fn threshold_value(x: &Rational, chi: usize, chi_cr: &Rational) -> Rational {
    let one = rational::one();
    let erdos_stone = &one - Rational::new(1.into(), (chi - 1).into());
    x * (&one - chi_cr.recip()) + (&one - x) * erdos_stone
}

pub(crate) fn check_x(x: &Rational) -> Result<()> {
    if rational::is_unit_interval(x) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "x = {} must lie in [0,1]",
            format_rational(x)
        )))
    }
}

pub fn komlos_threshold(h: &Graph, x: &Rational) -> Result<ThresholdSpec> {
    check_x(x)?;
    let profile = ChromaticProfile::of(h).map_err(|e| match e {
        Error::Edgeless => {
            Error::InvalidParameter("pattern must have chromatic number at least 2".into())
        }
        e => e,
    })?;
    let delta = threshold_value(x, profile.chi, &profile.chi_cr);
    Ok(ThresholdSpec {
        pattern: h.clone(),
        x: x.clone(),
        chi: profile.chi,
        chi_cr: profile.chi_cr,
        delta,
    })
}

/// Edges added inside the bottleneck class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum InternalRule {
    None,
    Clique,
    /// Pairs of positions within the last class, 0-based.
    Edges(Vec<(usize, usize)>),
}

/// An `n`-vertex bottleneck graph: `χ` classes, complete between classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BottleneckGraphSpec {
    pub n: usize,
    #[serde(with = "rational::serde_str")]
    pub x: Rational,
    pub chi: usize,
    #[serde(with = "rational::serde_str")]
    pub chi_cr: Rational,
    pub internal: InternalRule,
}

impl BottleneckGraphSpec {
    pub fn new(n: usize, x: Rational, chi_cr: Rational, internal: InternalRule) -> Result<Self> {
        let m = BottleneckMeasures::new(&x, &chi_cr)?;
        Ok(BottleneckGraphSpec {
            n,
            x,
            chi: m.classes,
            chi_cr,
            internal,
        })
    }

    pub fn for_pattern(h: &Graph, x: Rational, n: usize) -> Result<Self> {
        let t = komlos_threshold(h, &x)?;
        BottleneckGraphSpec::new(n, x, t.chi_cr, InternalRule::None)
    }

    /// Integer class sizes, bottleneck class last.
    ///
    /// The bottleneck class is rounded first, to the nearest integer with
    /// halves rounded down. The remaining vertices are split over the
    /// `χ − 1` large classes by largest remainder; their exact shares are
    /// equal, so leftover vertices go to the lowest-indexed classes.
    pub fn class_sizes(&self) -> Result<Vec<usize>> {
        if self.n == 0 {
            return Err(Error::InvalidParameter(
                "bottleneck graph needs at least one vertex".into(),
            ));
        }
        let m = BottleneckMeasures::new(&self.x, &self.chi_cr)?;
        let exact_last = &m.last * rational::int(self.n as i64);
        let floor = exact_last.floor();
        let frac = &exact_last - &floor;
        let mut last = floor.to_integer();
        if frac > rational::ratio(1, 2) {
            last += 1;
        }
        let last = last
            .to_usize()
            .filter(|&l| l <= self.n && !exact_last.is_negative())
            .ok_or_else(|| Error::InvalidParameter("bottleneck class size out of range".into()))?;
        let large = self.chi - 1;
        let (share, extra) = (self.n - last).div_rem(&large);
        let mut sizes: Vec<usize> = (0..large).map(|i| share + usize::from(i < extra)).collect();
        sizes.push(last);
        Ok(sizes)
    }
}

/// The complete multipartite graph on the spec's classes plus the internal
/// edges of the last class. Vertices are numbered class by class.
pub fn bottleneck_graph(spec: &BottleneckGraphSpec) -> Result<Graph> {
    let sizes = spec.class_sizes()?;
    let base = Graph::complete_multipartite(&sizes);
    let last = *sizes.last().expect("at least two classes");
    let offset = spec.n - last;
    let extra: Vec<(usize, usize)> = match &spec.internal {
        InternalRule::None => Vec::new(),
        InternalRule::Clique => (0..last)
            .flat_map(|a| (a + 1..last).map(move |b| (a, b)))
            .collect(),
        InternalRule::Edges(e) => {
            if let Some(&(a, b)) = e.iter().find(|&&(a, b)| a >= last || b >= last) {
                return Err(Error::InvalidParameter(format!(
                    "internal edge {a}-{b} outside the last class of size {last}"
                )));
            }
            e.clone()
        }
    };
    Graph::new(
        spec.n,
        base.edges()
            .iter()
            .copied()
            .chain(extra.into_iter().map(|(a, b)| (a + offset, b + offset))),
    )
}
