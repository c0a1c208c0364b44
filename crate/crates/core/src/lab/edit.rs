use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::threshold::{BottleneckGraphSpec, InternalRule};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;

/// Largest graph for which exact partition enumeration is offered.
pub const EXACT_EDIT_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EditMode {
    Exact,
    /// Swap-move hill climbing from `restarts` seeded random partitions.
    /// The result is an upper bound on the true distance.
    LocalSearch {
        restarts: u64,
        seed: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EditDistance {
    pub edits: usize,
    /// Class of each vertex; the bottleneck class has the highest index.
    pub partition: Vec<usize>,
    pub class_sizes: Vec<usize>,
    /// False when the value is only an upper bound from local search.
    pub exact: bool,
}

struct Target<'a> {
    g: &'a Graph,
    last: usize,
}

impl Target<'_> {
    /// Edits needed on the pair `{u, v}` given their classes. Pairs inside the
    /// bottleneck class are free: any edges are allowed there.
    fn pair_cost(&self, u: usize, v: usize, cu: usize, cv: usize) -> usize {
        if cu == cv && cu == self.last {
            return 0;
        }
        usize::from(self.g.has_edge(u, v) != (cu != cv))
    }

    fn total(&self, class: &[usize]) -> usize {
        let n = class.len();
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .map(|(u, v)| self.pair_cost(u, v, class[u], class[v]))
            .sum()
    }

    fn vertex_cost(&self, class: &[usize], v: usize, cv: usize, skip: usize) -> usize {
        (0..class.len())
            .filter(|&u| u != v && u != skip)
            .map(|u| self.pair_cost(u, v, class[u], cv))
            .sum()
    }
}

struct Exact<'a> {
    target: Target<'a>,
    sizes: Vec<usize>,
    fill: Vec<usize>,
    class: Vec<usize>,
    best: Option<(usize, Vec<usize>)>,
}

impl Exact<'_> {
    fn assign(&mut self, v: usize, cost: usize) {
        if self.best.as_ref().is_some_and(|(b, _)| cost >= *b) {
            return;
        }
        if v == self.class.len() {
            self.best = Some((cost, self.class.clone()));
            return;
        }
        let classes = self.sizes.len();
        for c in 0..classes {
            if self.fill[c] == self.sizes[c] {
                continue;
            }
            // empty large classes of equal size are interchangeable
            let symmetric_dup = c != self.target.last
                && self.fill[c] == 0
                && (0..c).any(|d| {
                    d != self.target.last && self.fill[d] == 0 && self.sizes[d] == self.sizes[c]
                });
            if symmetric_dup {
                continue;
            }
            let added: usize = (0..v)
                .map(|u| self.target.pair_cost(u, v, self.class[u], c))
                .sum();
            self.class[v] = c;
            self.fill[c] += 1;
            self.assign(v + 1, cost + added);
            self.fill[c] -= 1;
        }
    }
}

fn local_search(target: &Target, sizes: &[usize], restarts: u64, seed: u64) -> (usize, Vec<usize>) {
    let n = target.g.order();
    let base: Vec<usize> = sizes
        .iter()
        .enumerate()
        .flat_map(|(c, &s)| std::iter::repeat_n(c, s))
        .collect();
    (0..restarts.max(1))
        .into_par_iter()
        .map(|restart| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(restart);
            let mut class = base.clone();
            class.shuffle(&mut rng);
            let mut cost = target.total(&class);
            loop {
                let mut improved = false;
                for u in 0..n {
                    for v in u + 1..n {
                        let (cu, cv) = (class[u], class[v]);
                        if cu == cv {
                            continue;
                        }
                        let before = target.vertex_cost(&class, u, cu, v)
                            + target.vertex_cost(&class, v, cv, u);
                        let after = target.vertex_cost(&class, u, cv, v)
                            + target.vertex_cost(&class, v, cu, u);
                        // the pair {u, v} itself stays split across two classes
                        if after < before {
                            class.swap(u, v);
                            cost = cost - before + after;
                            improved = true;
                        }
                    }
                }
                if !improved {
                    break;
                }
            }
            (cost, class)
        })
        .min_by(|a, b| a.0.cmp(&b.0))
        .expect("at least one restart")
}

/// Fewest edge edits turning `g` into a bottleneck graph with parameters `x`
/// and `χ_cr`, over all placements of the vertices into classes of the
/// sizes used by [`super::bottleneck_graph`].
pub fn edit_distance_to_bottleneck(
    g: &Graph,
    x: &Rational,
    chi_cr: &Rational,
    mode: EditMode,
) -> Result<EditDistance> {
    let spec = BottleneckGraphSpec::new(g.order(), x.clone(), chi_cr.clone(), InternalRule::None)?;
    let class_sizes = spec.class_sizes()?;
    let target = Target {
        g,
        last: class_sizes.len() - 1,
    };
    match mode {
        EditMode::Exact => {
            if g.order() > EXACT_EDIT_CAP {
                return Err(Error::TooLarge {
                    what: "graph for exact edit distance",
                    size: g.order(),
                    cap: EXACT_EDIT_CAP,
                });
            }
            let mut search = Exact {
                target,
                fill: vec![0; class_sizes.len()],
                sizes: class_sizes.clone(),
                class: vec![0; g.order()],
                best: None,
            };
            search.assign(0, 0);
            let (edits, partition) = search.best.expect("class sizes sum to n");
            Ok(EditDistance {
                edits,
                partition,
                class_sizes,
                exact: true,
            })
        }
        EditMode::LocalSearch { restarts, seed } => {
            let (edits, partition) = local_search(&target, &class_sizes, restarts, seed);
            Ok(EditDistance {
                edits,
                partition,
                class_sizes,
                exact: false,
            })
        }
    }
}
