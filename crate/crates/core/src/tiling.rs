//! Tiling numbers, fractional tilings and fractional covers.
//!
//! On finite graphs a copy of `H` is a vertex subset (see
//! [`enumerate_copies`]). On step graphons both optimisation problems are
//! posed on cells:
//!
//! * a tiling puts mass on admissible ordered part tuples, and for each part
//!   `p` the mass of all tuples counted once per coordinate equal to `p` may
//!   not exceed the measure of `p`;
//! * a cover assigns a value in `[0, 1]` to each part, and every admissible
//!   tuple must collect a total of at least one.
//!
//! Restricting to cell-constant functions loses nothing. Averaging a
//! feasible tiling over each cell keeps the (linear) degree constraints and
//! the total mass. Replacing a cover by its essential infimum on each part
//! keeps every tuple constraint, since a tuple of infima summing below one
//! would make the constraint fail on a product of positive-measure sets, and
//! can only shrink the size.

use std::collections::BTreeMap;

use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::copies::enumerate_copies;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graphon::{PartTuple, StepGraphon};
use crate::lp::{solve_lp, Direction, LpProblem, LpStatus, Sense};
use crate::packing::{solve_packing, PackingInstance};
use crate::rational::{self, format_rational, Rational};

/// Vertex-disjoint copies of `H` in `G`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphTiling {
    pub value: usize,
    pub copies: Vec<Vec<usize>>,
}

/// Weights on copies of `H` in `G` summing to at most one at each vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FractionalGraphTiling {
    #[serde(with = "rational::serde_str")]
    pub value: Rational,
    pub copies: Vec<Vec<usize>>,
    #[serde(with = "rational::serde_str_vec")]
    pub weights: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphCover {
    #[serde(with = "rational::serde_str")]
    pub value: Rational,
    #[serde(with = "rational::serde_str_vec")]
    pub cover: Vec<Rational>,
}

/// A cell-constant `F`-tiling: nonzero masses on admissible part tuples.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GraphonTiling {
    masses: BTreeMap<PartTuple, Rational>,
}

impl GraphonTiling {
    pub fn masses(&self) -> &BTreeMap<PartTuple, Rational> {
        &self.masses
    }

    pub fn size(&self) -> Rational {
        self.masses.values().sum()
    }

    /// Total incidence of each part, each tuple counted once per coordinate.
    pub fn part_load(&self, parts: usize) -> Vec<Rational> {
        let mut load = vec![rational::zero(); parts];
        for (t, m) in &self.masses {
            for &p in t.parts() {
                load[p] += m;
            }
        }
        load
    }

    /// Support inside the admissible tuples, nonnegative masses, and loads
    /// within part measures.
    pub fn is_feasible(&self, f: &Graph, w: &StepGraphon) -> bool {
        let admissible: std::collections::BTreeSet<PartTuple> =
            w.admissible_tuples(f).into_iter().collect();
        self.masses
            .iter()
            .all(|(t, m)| admissible.contains(t) && !m.is_negative())
            && self
                .part_load(w.parts())
                .iter()
                .zip(w.measures())
                .all(|(l, mu)| l <= mu)
    }
}

impl Serialize for GraphonTiling {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        #[derive(Serialize)]
        struct Entry<'a> {
            tuple: &'a [usize],
            mass: String,
        }
        let mut seq = s.serialize_seq(Some(self.masses.len()))?;
        for (t, m) in &self.masses {
            seq.serialize_element(&Entry {
                tuple: t.parts(),
                mass: format_rational(m),
            })?;
        }
        seq.end()
    }
}

/// A per-part fractional cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphonCover {
    #[serde(with = "rational::serde_str_vec")]
    pub values: Vec<Rational>,
}

impl GraphonCover {
    /// `Σ_p measures[p] · values[p]`.
    pub fn size(&self, w: &StepGraphon) -> Rational {
        self.values
            .iter()
            .zip(w.measures())
            .map(|(c, m)| c * m)
            .sum()
    }

    pub fn is_feasible(&self, f: &Graph, w: &StepGraphon) -> bool {
        self.values.len() == w.parts()
            && self.values.iter().all(rational::is_unit_interval)
            && w.admissible_tuples(f).iter().all(|t| {
                let total: Rational = t.parts().iter().map(|&p| self.values[p].clone()).sum();
                total >= rational::one()
            })
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TilingOptions {
    /// Merge tuples that use each part equally often into one LP column.
    /// Such columns are identical, so the optimum is unchanged.
    pub fold_orbits: bool,
}

fn expect_optimal(status: LpStatus, what: &str) -> Result<()> {
    if status == LpStatus::Optimal {
        Ok(())
    } else {
        Err(Error::Certificate(format!("{what} LP returned {status:?}")))
    }
}

/// `til(H, G)`: the largest number of vertex-disjoint copies of `H` in `G`.
pub fn til_graph(h: &Graph, g: &Graph) -> Result<GraphTiling> {
    let copies = enumerate_copies(h, g);
    let inst = PackingInstance::unit(g.order(), copies.clone())?;
    let sol = solve_packing(&inst)?;
    let value = sol
        .value
        .to_integer()
        .to_usize()
        .expect("packing of unit sets has integral value");
    Ok(GraphTiling {
        value,
        copies: sol.chosen.iter().map(|&i| copies[i].clone()).collect(),
    })
}

/// Fractional `H`-tiling number of `G`: weights on copies with load at most
/// one per vertex.
pub fn ftil_graph(h: &Graph, g: &Graph) -> Result<FractionalGraphTiling> {
    let copies = enumerate_copies(h, g);
    let mut lp = LpProblem::new(Direction::Maximize, vec![rational::one(); copies.len()]);
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    for (c, copy) in copies.iter().enumerate() {
        for &v in copy {
            incident[v].push(c);
        }
    }
    for row in incident.into_iter().filter(|r| !r.is_empty()) {
        lp.add_constraint(
            row.into_iter().map(|c| (c, rational::one())),
            Sense::Le,
            rational::one(),
        )?;
    }
    let res = solve_lp(&lp)?;
    expect_optimal(res.status, "fractional tiling")?;
    Ok(FractionalGraphTiling {
        value: res.objective,
        copies,
        weights: res.primal,
    })
}

/// Fractional `H`-cover number of `G`: `c: V → [0,1]` summing to at least one
/// on every copy, of least total.
pub fn fcov_graph(h: &Graph, g: &Graph) -> Result<GraphCover> {
    let copies = enumerate_copies(h, g);
    let mut lp = LpProblem::new(Direction::Minimize, vec![rational::one(); g.order()]);
    for copy in &copies {
        lp.add_constraint(
            copy.iter().map(|&v| (v, rational::one())),
            Sense::Ge,
            rational::one(),
        )?;
    }
    for v in 0..g.order() {
        lp.set_upper_bound(v, rational::one())?;
    }
    let res = solve_lp(&lp)?;
    expect_optimal(res.status, "fractional cover")?;
    Ok(GraphCover {
        value: res.objective,
        cover: res.primal,
    })
}

/// `til(F, W)` with one LP column per admissible tuple.
pub fn til_graphon(f: &Graph, w: &StepGraphon) -> Result<(Rational, GraphonTiling)> {
    til_graphon_with(f, w, TilingOptions::default())
}

pub fn til_graphon_with(
    f: &Graph,
    w: &StepGraphon,
    opts: TilingOptions,
) -> Result<(Rational, GraphonTiling)> {
    let k = w.parts();
    let tuples = w.admissible_tuples(f);
    // each column: a representative tuple and its per-part multiplicities
    let columns: Vec<(PartTuple, Vec<usize>)> = if opts.fold_orbits {
        let mut seen = BTreeMap::new();
        for t in tuples {
            seen.entry(t.counts(k)).or_insert(t);
        }
        let mut cols: Vec<_> = seen.into_iter().map(|(c, t)| (t, c)).collect();
        cols.sort();
        cols
    } else {
        tuples
            .into_iter()
            .map(|t| {
                let c = t.counts(k);
                (t, c)
            })
            .collect()
    };
    if columns.is_empty() {
        return Ok((rational::zero(), GraphonTiling::default()));
    }
    let mut lp = LpProblem::new(Direction::Maximize, vec![rational::one(); columns.len()]);
    for p in 0..k {
        let row = columns
            .iter()
            .enumerate()
            .filter(|(_, (_, c))| c[p] > 0)
            .map(|(j, (_, c))| (j, rational::int(c[p] as i64)));
        lp.add_constraint(row, Sense::Le, w.measures()[p].clone())?;
    }
    let res = solve_lp(&lp)?;
    expect_optimal(res.status, "graphon tiling")?;
    let masses = columns
        .into_iter()
        .zip(res.primal)
        .filter(|(_, m)| !m.is_zero())
        .map(|((t, _), m)| (t, m))
        .collect();
    Ok((res.objective, GraphonTiling { masses }))
}

/// `fcov(F, W)`. Tuples with the same part multiplicities give the same
/// constraint, so one row is kept per multiplicity vector.
pub fn fcov_graphon(f: &Graph, w: &StepGraphon) -> Result<(Rational, GraphonCover)> {
    let k = w.parts();
    let rows: std::collections::BTreeSet<Vec<usize>> =
        w.admissible_tuples(f).iter().map(|t| t.counts(k)).collect();
    let mut lp = LpProblem::new(Direction::Minimize, w.measures().to_vec());
    for counts in rows {
        let coeffs = counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(p, &c)| (p, rational::int(c as i64)));
        lp.add_constraint(coeffs, Sense::Ge, rational::one())?;
    }
    for p in 0..k {
        lp.set_upper_bound(p, rational::one())?;
    }
    let res = solve_lp(&lp)?;
    expect_optimal(res.status, "graphon cover")?;
    Ok((res.objective, GraphonCover { values: res.primal }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    #[serde(with = "rational::serde_str")]
    pub til: Rational,
    #[serde(with = "rational::serde_str")]
    pub fcov: Rational,
    pub tiling: GraphonTiling,
    pub cover: GraphonCover,
    pub admissible_tuples: usize,
}

/// Solves the tiling and cover LPs separately and checks that the optima
/// agree and that both witnesses are feasible with the reported sizes.
pub fn verify_duality(f: &Graph, w: &StepGraphon) -> Result<DualityReport> {
    let (til, tiling) = til_graphon(f, w)?;
    let (fcov, cover) = fcov_graphon(f, w)?;
    let witnesses_ok = tiling.is_feasible(f, w)
        && cover.is_feasible(f, w)
        && tiling.size() == til
        && cover.size(w) == fcov;
    if til != fcov || !witnesses_ok {
        return Err(Error::DualityDiscrepancy {
            til: format_rational(&til),
            fcov: format_rational(&fcov),
        });
    }
    let admissible_tuples = w.admissible_tuples(f).len();
    Ok(DualityReport {
        til,
        fcov,
        tiling,
        cover,
        admissible_tuples,
    })
}

/// `(til(F, W) = 0, ∫ W^{⊗F} = 0)`; the two flags always agree.
pub fn tiling_positive_iff_density_positive(f: &Graph, w: &StepGraphon) -> Result<(bool, bool)> {
    let (til, _) = til_graphon(f, w)?;
    Ok((til.is_zero(), w.hom_density(f).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphon::{bottleneck_graphon, turan_graphon};
    use crate::rational::{int, ratio};

    #[test]
    fn integral_tilings() {
        assert_eq!(
            til_graph(&Graph::complete(2), &Graph::path(3))
                .unwrap()
                .value,
            1
        );
        assert_eq!(
            til_graph(&Graph::complete(3), &Graph::complete(6))
                .unwrap()
                .value,
            2
        );
        let t = til_graph(
            &Graph::complete(3),
            &Graph::complete_multipartite(&[5, 5, 2]),
        )
        .unwrap();
        assert_eq!(t.value, 2);
        assert_eq!(t.copies.len(), 2);
    }

    #[test]
    fn fractional_graph_tilings_and_covers() {
        assert_eq!(
            ftil_graph(&Graph::complete(2), &Graph::complete(3))
                .unwrap()
                .value,
            ratio(3, 2)
        );
        assert_eq!(
            ftil_graph(&Graph::complete(3), &Graph::cycle(4))
                .unwrap()
                .value,
            int(0)
        );
        assert_eq!(
            ftil_graph(&Graph::complete(2), &Graph::complete(2))
                .unwrap()
                .value,
            int(1)
        );

        let c = fcov_graph(&Graph::complete(2), &Graph::complete(3)).unwrap();
        assert_eq!(c.value, ratio(3, 2));
        assert_eq!(c.cover, vec![ratio(1, 2); 3]);
        let c = fcov_graph(&Graph::complete(3), &Graph::cycle(4)).unwrap();
        assert_eq!(c.value, int(0));
        assert_eq!(c.cover, vec![int(0); 4]);
        let c = fcov_graph(&Graph::complete(2), &Graph::path(3)).unwrap();
        assert_eq!(c.value, int(1));
        assert_eq!(c.cover, vec![int(0), int(1), int(0)]);
    }

    #[test]
    fn graphon_tilings() {
        let tri = turan_graphon(3).unwrap();
        let (v, t) = til_graphon(&Graph::complete(2), &tri).unwrap();
        assert_eq!(v, ratio(1, 2));
        assert!(t.is_feasible(&Graph::complete(2), &tri));
        assert_eq!(
            til_graphon(&Graph::complete(3), &turan_graphon(2).unwrap())
                .unwrap()
                .0,
            int(0)
        );
        let b = bottleneck_graphon(&ratio(1, 2), &int(3), &int(0)).unwrap();
        assert_eq!(til_graphon(&Graph::complete(3), &b).unwrap().0, ratio(1, 6));
    }

    #[test]
    fn graphon_covers() {
        let (v, c) = fcov_graphon(&Graph::complete(3), &turan_graphon(2).unwrap()).unwrap();
        assert_eq!(v, int(0));
        assert_eq!(c.values, vec![int(0); 2]);
        let b = bottleneck_graphon(&ratio(1, 2), &int(3), &int(0)).unwrap();
        let (v, c) = fcov_graphon(&Graph::complete(3), &b).unwrap();
        assert_eq!(v, ratio(1, 6));
        assert_eq!(c.values, vec![int(0), int(0), int(1)]);
        let full = StepGraphon::uniform(2, int(1)).unwrap();
        let (v, c) = fcov_graphon(&Graph::complete(2), &full).unwrap();
        assert_eq!(v, ratio(1, 2));
        assert!(c.is_feasible(&Graph::complete(2), &full));
    }

    #[test]
    fn single_vertex_pattern_tiles_everything() {
        let w = bottleneck_graphon(&ratio(1, 3), &ratio(5, 2), &ratio(1, 2)).unwrap();
        let r = verify_duality(&Graph::empty(1), &w).unwrap();
        assert_eq!(r.til, int(1));
        assert_eq!(r.cover.values, vec![int(1); w.parts()]);
    }

    #[test]
    fn duality_examples() {
        let r = verify_duality(
            &Graph::complete(2),
            &StepGraphon::from_graph(&Graph::complete(3)),
        )
        .unwrap();
        assert_eq!((r.til.clone(), r.fcov), (ratio(1, 2), ratio(1, 2)));
        let r = verify_duality(&Graph::complete(3), &turan_graphon(2).unwrap()).unwrap();
        assert_eq!(r.til, int(0));
        assert_eq!(r.admissible_tuples, 0);
        let b = bottleneck_graphon(&ratio(1, 2), &int(3), &int(0)).unwrap();
        assert_eq!(
            verify_duality(&Graph::complete(3), &b).unwrap().fcov,
            ratio(1, 6)
        );
    }

    #[test]
    fn proposition_pairs() {
        let k3 = Graph::complete(3);
        assert_eq!(
            tiling_positive_iff_density_positive(&k3, &turan_graphon(2).unwrap()).unwrap(),
            (true, true)
        );
        assert_eq!(
            tiling_positive_iff_density_positive(&k3, &turan_graphon(3).unwrap()).unwrap(),
            (false, false)
        );
        assert_eq!(
            til_graphon(&k3, &turan_graphon(3).unwrap()).unwrap().0,
            ratio(1, 3)
        );
        let zero = StepGraphon::constant(int(0)).unwrap();
        assert_eq!(
            tiling_positive_iff_density_positive(&Graph::complete(2), &zero).unwrap(),
            (true, true)
        );
    }

    #[test]
    fn orbit_folding_keeps_the_value() {
        let w = bottleneck_graphon(&ratio(3, 4), &ratio(7, 3), &ratio(1, 2)).unwrap();
        for f in [
            Graph::complete(2),
            Graph::path(3),
            Graph::complete(3),
            Graph::cycle(4),
        ] {
            let plain = til_graphon(&f, &w).unwrap();
            let folded = til_graphon_with(&f, &w, TilingOptions { fold_orbits: true }).unwrap();
            assert_eq!(plain.0, folded.0);
            assert!(folded.1.is_feasible(&f, &w));
        }
    }

    /// Homomorphic images that are not copies make the cell LP larger than
    /// the copy LP scaled by `1/n`.
    #[test]
    fn folded_homomorphisms_exceed_injective_copies() {
        let c6 = Graph::cycle(6);
        let c4 = Graph::cycle(4);
        assert_eq!(ftil_graph(&c4, &c6).unwrap().value, int(0));
        let (v, _) = til_graphon(&c4, &StepGraphon::from_graph(&c6)).unwrap();
        assert!(v.is_positive());
    }
}
