//! Proper colorings and the chromatic invariants `χ`, `ℓ` and `χ_cr`.
//!
//! All searches are exact backtracking over vertices ordered by decreasing
//! degree, with colors introduced in increasing order so permutations of
//! color labels are visited once.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;

/// Largest graph accepted by [`min_smallest_class`] and [`ChromaticProfile::of`].
pub const COLORING_CAP: usize = 16;

/// A proper coloring as a partition of the vertex set into nonempty classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    classes: Vec<Vec<usize>>,
}

impl Coloring {
    /// Validates that `classes` partition `0..g.order()` into nonempty independent sets.
    pub fn new(g: &Graph, mut classes: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; g.order()];
        for class in &mut classes {
            if class.is_empty() {
                return Err(Error::InvalidParameter("empty color class".into()));
            }
            class.sort_unstable();
            for &v in class.iter() {
                if v >= g.order() || std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidParameter(format!(
                        "vertex {v} repeated or out of range"
                    )));
                }
            }
            for (i, &u) in class.iter().enumerate() {
                if let Some(&w) = class[i + 1..].iter().find(|&&w| g.has_edge(u, w)) {
                    return Err(Error::InvalidParameter(format!(
                        "edge {u}-{w} inside a color class"
                    )));
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidParameter(
                "coloring does not cover every vertex".into(),
            ));
        }
        Ok(Coloring { classes })
    }

    fn from_assignment(color: &[usize], k: usize) -> Self {
        let mut classes = vec![Vec::new(); k];
        for (v, &c) in color.iter().enumerate() {
            classes[c].push(v);
        }
        Coloring { classes }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn num_colors(&self) -> usize {
        self.classes.len()
    }

    pub fn smallest_class(&self) -> usize {
        self.classes.iter().map(Vec::len).min().unwrap_or(0)
    }
}

fn degree_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    order
}

struct Search<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    color: Vec<usize>,
    k: usize,
}

const UNCOLORED: usize = usize::MAX;

impl<'a> Search<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        Search {
            g,
            order: degree_order(g),
            color: vec![UNCOLORED; g.order()],
            k,
        }
    }

    fn allowed(&self, v: usize, c: usize) -> bool {
        self.g.neighbors(v).all(|u| self.color[u] != c)
    }

    fn find(&mut self, depth: usize, used: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for c in 0..(used + 1).min(self.k) {
            if self.allowed(v, c) {
                self.color[v] = c;
                if self.find(depth + 1, used.max(c + 1)) {
                    return true;
                }
            }
        }
        self.color[v] = UNCOLORED;
        false
    }

    /// Minimises the smallest class over colorings using exactly `k` colors.
    fn min_class(
        &mut self,
        depth: usize,
        used: usize,
        sizes: &mut Vec<usize>,
        best: &mut Option<(usize, Vec<usize>)>,
    ) {
        if let Some((b, _)) = best {
            if *b == 1 || sizes.iter().min().copied().unwrap_or(0) >= *b {
                return;
            }
        }
        let remaining = self.order.len() - depth;
        if remaining < self.k - used {
            return;
        }
        if depth == self.order.len() {
            let smallest = *sizes.iter().min().expect("k >= 1");
            *best = Some((smallest, self.color.clone()));
            return;
        }
        let v = self.order[depth];
        for c in 0..(used + 1).min(self.k) {
            if self.allowed(v, c) {
                self.color[v] = c;
                sizes[c] += 1;
                self.min_class(depth + 1, used.max(c + 1), sizes, best);
                sizes[c] -= 1;
            }
        }
        self.color[v] = UNCOLORED;
    }
}

/// A proper coloring with at most `k` colors, if one exists.
pub fn find_coloring(g: &Graph, k: usize) -> Option<Coloring> {
    if k == 0 {
        return None;
    }
    let mut s = Search::new(g, k);
    if s.find(0, 0) {
        let used = s.color.iter().max().map_or(0, |m| m + 1);
        Some(Coloring::from_assignment(&s.color, used))
    } else {
        None
    }
}

/// Smallest `k` with a proper `k`-coloring, by iterative deepening.
///
/// Exact for every size; intended for pattern graphs up to [`COLORING_CAP`]
/// vertices, beyond which the search may become slow.
pub fn chromatic_number(g: &Graph) -> usize {
    (1..=g.order())
        .find(|&k| find_coloring(g, k).is_some())
        .expect("n colors always suffice")
}

/// A proper coloring with exactly `r` colors whose smallest class is as
/// small as possible.
pub fn min_smallest_class_witness(g: &Graph, r: usize) -> Result<Coloring> {
    if g.order() > COLORING_CAP {
        return Err(Error::TooLarge {
            what: "graph",
            size: g.order(),
            cap: COLORING_CAP,
        });
    }
    if r == 0 || r > g.order() {
        return Err(Error::NoColoring(r));
    }
    let mut s = Search::new(g, r);
    let mut best = None;
    let mut sizes = vec![0; r];
    s.min_class(0, 0, &mut sizes, &mut best);
    best.map(|(_, color)| Coloring::from_assignment(&color, r))
        .ok_or(Error::NoColoring(r))
}

/// `ℓ`: the minimum, over proper colorings with exactly `r` colors, of the
/// size of the smallest class.
pub fn min_smallest_class(g: &Graph, r: usize) -> Result<usize> {
    min_smallest_class_witness(g, r).map(|c| c.smallest_class())
}

/// The invariants `χ`, `ℓ`, `h` and `χ_cr = (χ−1)h/(h−ℓ)` of a pattern graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticProfile {
    pub chi: usize,
    pub ell: usize,
    pub order: usize,
    pub chi_cr: Rational,
    pub witness: Coloring,
}

impl ChromaticProfile {
    pub fn of(h: &Graph) -> Result<Self> {
        if h.size() == 0 {
            return Err(Error::Edgeless);
        }
        if h.order() > COLORING_CAP {
            return Err(Error::TooLarge {
                what: "pattern graph",
                size: h.order(),
                cap: COLORING_CAP,
            });
        }
        let chi = chromatic_number(h);
        let witness = min_smallest_class_witness(h, chi)?;
        let ell = witness.smallest_class();
        let order = h.order();
        let chi_cr = Rational::new(BigInt::from((chi - 1) * order), BigInt::from(order - ell));
        Ok(ChromaticProfile {
            chi,
            ell,
            order,
            chi_cr,
            witness,
        })
    }
}

pub fn critical_chromatic_number(h: &Graph) -> Result<Rational> {
    ChromaticProfile::of(h).map(|p| p.chi_cr)
}
