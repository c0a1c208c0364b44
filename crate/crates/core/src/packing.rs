//! Maximum-weight set packing by branch and bound.
//!
//! Each node solves the packing LP over the sets still available; the LP
//! value bounds the subtree, an integral LP optimum closes it, and otherwise
//! the node branches on including or excluding the set with the largest
//! fractional value (lowest index on ties), inclusion first.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lp::{solve_lp, Direction, LpProblem, LpStatus, Sense};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackingInstance {
    universe: usize,
    sets: Vec<Vec<usize>>,
    weights: Vec<Rational>,
}

impl PackingInstance {
    pub fn new(universe: usize, sets: Vec<Vec<usize>>, weights: Vec<Rational>) -> Result<Self> {
        if sets.len() != weights.len() {
            return Err(Error::InvalidParameter(
                "one weight per set is required".into(),
            ));
        }
        let mut clean = Vec::with_capacity(sets.len());
        for (i, mut s) in sets.into_iter().enumerate() {
            s.sort_unstable();
            s.dedup();
            if s.is_empty() {
                return Err(Error::InvalidParameter(format!("set {i} is empty")));
            }
            if let Some(e) = s.iter().find(|&&e| e >= universe) {
                return Err(Error::InvalidParameter(format!(
                    "set {i} has element {e} outside 0..{universe}"
                )));
            }
            clean.push(s);
        }
        Ok(PackingInstance {
            universe,
            sets: clean,
            weights,
        })
    }

    pub fn unit(universe: usize, sets: Vec<Vec<usize>>) -> Result<Self> {
        let w = vec![rational::one(); sets.len()];
        PackingInstance::new(universe, sets, w)
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    /// The LP relaxation restricted to the listed sets.
    pub fn relaxation(&self, candidates: &[usize]) -> LpProblem {
        let objective = candidates
            .iter()
            .map(|&s| self.weights[s].clone())
            .collect();
        let mut lp = LpProblem::new(Direction::Maximize, objective);
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); self.universe];
        for (col, &s) in candidates.iter().enumerate() {
            for &e in &self.sets[s] {
                rows[e].push(col);
            }
        }
        for row in rows.into_iter().filter(|r| !r.is_empty()) {
            lp.add_constraint(
                row.into_iter().map(|c| (c, rational::one())),
                Sense::Le,
                rational::one(),
            )
            .expect("columns in range");
        }
        lp
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PackingSolution {
    #[serde(with = "rational::serde_str")]
    pub value: Rational,
    /// Chosen set indices, ascending.
    pub chosen: Vec<usize>,
    /// Value of the LP relaxation at the root.
    #[serde(with = "rational::serde_str")]
    pub root_bound: Rational,
    pub nodes: usize,
}

struct Search<'a> {
    inst: &'a PackingInstance,
    best: Rational,
    best_sets: Vec<usize>,
    root_bound: Option<Rational>,
    nodes: usize,
}

impl Search<'_> {
    fn disjoint(&self, a: usize, b: usize) -> bool {
        let (sa, sb) = (&self.inst.sets[a], &self.inst.sets[b]);
        let (mut i, mut j) = (0, 0);
        while i < sa.len() && j < sb.len() {
            match sa[i].cmp(&sb[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    fn node(
        &mut self,
        included: &mut Vec<usize>,
        weight: &Rational,
        candidates: Vec<usize>,
    ) -> Result<()> {
        self.nodes += 1;
        if candidates.is_empty() {
            if *weight > self.best {
                self.best = weight.clone();
                self.best_sets = included.clone();
            }
            return Ok(());
        }
        let lp = self.inst.relaxation(&candidates);
        let res = solve_lp(&lp)?;
        if res.status != LpStatus::Optimal {
            return Err(Error::Certificate(
                "packing relaxation is always feasible and bounded".into(),
            ));
        }
        self.root_bound
            .get_or_insert_with(|| weight + &res.objective);
        let bound = weight + &res.objective;
        if bound <= self.best {
            return Ok(());
        }
        let fractional = res
            .primal
            .iter()
            .enumerate()
            .filter(|(_, x)| x.is_positive() && !x.is_one())
            .fold(None::<(usize, &Rational)>, |acc, (i, x)| match acc {
                Some((_, bx)) if bx >= x => acc,
                _ => Some((i, x)),
            });
        match fractional {
            None => {
                let mut sets = included.clone();
                sets.extend(
                    candidates
                        .iter()
                        .zip(&res.primal)
                        .filter(|(_, x)| x.is_one())
                        .map(|(&s, _)| s),
                );
                sets.sort_unstable();
                self.best = bound;
                self.best_sets = sets;
            }
            Some((col, _)) => {
                let s = candidates[col];
                let with: Vec<usize> = candidates
                    .iter()
                    .copied()
                    .filter(|&t| t != s && self.disjoint(s, t))
                    .collect();
                included.push(s);
                let w = weight + &self.inst.weights[s];
                self.node(included, &w, with)?;
                included.pop();
                let without: Vec<usize> = candidates.into_iter().filter(|&t| t != s).collect();
                self.node(included, weight, without)?;
            }
        }
        Ok(())
    }
}

/// Maximum total weight of a pairwise-disjoint subfamily. Sets of
/// nonpositive weight are never chosen.
pub fn solve_packing(inst: &PackingInstance) -> Result<PackingSolution> {
    let candidates: Vec<usize> = (0..inst.sets.len())
        .filter(|&s| inst.weights[s].is_positive())
        .collect();
    let mut search = Search {
        inst,
        best: rational::zero(),
        best_sets: Vec::new(),
        root_bound: None,
        nodes: 0,
    };
    search.node(&mut Vec::new(), &rational::zero(), candidates)?;
    Ok(PackingSolution {
        value: search.best,
        chosen: search.best_sets,
        root_bound: search.root_bound.unwrap_or_else(Rational::zero),
        nodes: search.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use proptest::prelude::*;

    /// Best subfamily over all `2^s` subsets.
    fn exhaustive(inst: &PackingInstance) -> Rational {
        let s = inst.sets().len();
        let mut best = rational::zero();
        for mask in 0u32..(1 << s) {
            let mut used = vec![false; inst.universe()];
            let mut ok = true;
            let mut w = rational::zero();
            for i in (0..s).filter(|i| mask & (1 << i) != 0) {
                for &e in &inst.sets()[i] {
                    ok &= !std::mem::replace(&mut used[e], true);
                }
                w += &inst.weights()[i];
            }
            if ok && w > best {
                best = w;
            }
        }
        best
    }

    #[test]
    fn path_of_pairs() {
        let inst = PackingInstance::unit(4, vec![vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap();
        let sol = solve_packing(&inst).unwrap();
        assert_eq!(sol.value, int(2));
        assert_eq!(sol.chosen, vec![0, 2]);
    }

    #[test]
    fn empty_family() {
        let inst = PackingInstance::unit(3, vec![]).unwrap();
        let sol = solve_packing(&inst).unwrap();
        assert_eq!(sol.value, int(0));
        assert!(sol.chosen.is_empty());
    }

    #[test]
    fn triangles_of_k6() {
        let mut sets = Vec::new();
        for a in 0..6 {
            for b in a + 1..6 {
                for c in b + 1..6 {
                    sets.push(vec![a, b, c]);
                }
            }
        }
        let inst = PackingInstance::unit(6, sets).unwrap();
        assert_eq!(exhaustive(&inst), int(2));
        assert_eq!(solve_packing(&inst).unwrap().value, int(2));
    }

    #[test]
    fn odd_cycle_needs_branching() {
        let inst =
            PackingInstance::unit(5, (0..5).map(|i| vec![i, (i + 1) % 5]).collect()).unwrap();
        let sol = solve_packing(&inst).unwrap();
        assert_eq!(sol.root_bound, ratio(5, 2));
        assert_eq!(sol.value, int(2));
        assert!(sol.nodes > 1);
    }

    #[test]
    fn validation() {
        assert!(PackingInstance::unit(2, vec![vec![]]).is_err());
        assert!(PackingInstance::unit(2, vec![vec![2]]).is_err());
        assert!(PackingInstance::new(2, vec![vec![0]], vec![]).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn matches_exhaustive_search(
            universe in 1usize..8,
            raw in proptest::collection::vec((proptest::collection::vec(0usize..8, 1..4), 0i64..6, 1i64..4), 0..=12),
        ) {
            let sets: Vec<Vec<usize>> = raw.iter().map(|(s, _, _)| s.iter().map(|e| e % universe).collect()).collect();
            let weights = raw.iter().map(|(_, p, q)| ratio(*p, *q)).collect();
            let inst = PackingInstance::new(universe, sets, weights).unwrap();
            let sol = solve_packing(&inst).unwrap();
            prop_assert_eq!(&sol.value, &exhaustive(&inst));
            prop_assert!(sol.root_bound >= sol.value);
            let chosen_weight: Rational = sol.chosen.iter().map(|&i| inst.weights()[i].clone()).sum();
            prop_assert_eq!(chosen_weight, sol.value.clone());
            prop_assert_eq!(solve_packing(&inst).unwrap(), sol);
        }
    }
}
