//! Exact rational linear programming.
//!
//! A dense two-phase tableau simplex with Bland's pivoting rule. Every
//! optimal return carries a dual solution read off the final basis, and the
//! solver verifies primal feasibility, dual feasibility and a zero duality
//! gap before handing the result back.
//!
//! Dual sign conventions follow the problem's own direction. For a
//! maximisation, rows `≤` have `y ≥ 0`, rows `≥` have `y ≤ 0`, equalities are
//! free, and `Aᵀy ≥ c`. For a minimisation the inequalities flip: rows `≥`
//! have `y ≥ 0`, rows `≤` have `y ≤ 0`, and `Aᵀy ≤ c`. Upper bounds behave
//! like `≤` rows and get their own multipliers in [`LpResult::bound_dual`].

use std::fmt::Write as _;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{self, format_rational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Sense {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Direction {
    Maximize,
    Minimize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<(usize, Rational)>,
    pub sense: Sense,
    pub rhs: Rational,
}

/// `opt c·x` subject to the rows, `x ≥ 0` and optional upper bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpProblem {
    direction: Direction,
    objective: Vec<Rational>,
    constraints: Vec<Constraint>,
    upper: Vec<Option<Rational>>,
}

impl LpProblem {
    pub fn new(direction: Direction, objective: Vec<Rational>) -> Self {
        let n = objective.len();
        LpProblem {
            direction,
            objective,
            constraints: Vec::new(),
            upper: vec![None; n],
        }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn objective(&self) -> &[Rational] {
        &self.objective
    }

    /// Adds a row; repeated variable indices are summed.
    pub fn add_constraint(
        &mut self,
        coeffs: impl IntoIterator<Item = (usize, Rational)>,
        sense: Sense,
        rhs: Rational,
    ) -> Result<usize> {
        let mut dense = std::collections::BTreeMap::<usize, Rational>::new();
        for (j, a) in coeffs {
            if j >= self.num_vars() {
                return Err(Error::InvalidParameter(format!(
                    "variable {j} out of range for {} variables",
                    self.num_vars()
                )));
            }
            *dense.entry(j).or_insert_with(rational::zero) += a;
        }
        let coeffs = dense.into_iter().filter(|(_, a)| !a.is_zero()).collect();
        self.constraints.push(Constraint { coeffs, sense, rhs });
        Ok(self.constraints.len() - 1)
    }

    pub fn set_upper_bound(&mut self, var: usize, bound: Rational) -> Result<()> {
        if var >= self.num_vars() {
            return Err(Error::InvalidParameter(format!(
                "variable {var} out of range"
            )));
        }
        if bound.is_negative() {
            return Err(Error::InvalidParameter(format!(
                "upper bound of variable {var} is negative"
            )));
        }
        self.upper[var] = Some(bound);
        Ok(())
    }

    pub fn upper_bounds(&self) -> &[Option<Rational>] {
        &self.upper
    }

    /// Rows followed by upper bounds as `≤` rows.
    fn all_rows(&self) -> Vec<Constraint> {
        let mut rows = self.constraints.clone();
        for (j, u) in self.upper.iter().enumerate() {
            if let Some(u) = u {
                rows.push(Constraint {
                    coeffs: vec![(j, rational::one())],
                    sense: Sense::Le,
                    rhs: u.clone(),
                });
            }
        }
        rows
    }

    pub fn row_activity(&self, row: &Constraint, x: &[Rational]) -> Rational {
        row.coeffs.iter().map(|(j, a)| a * &x[*j]).sum()
    }

    pub fn is_feasible(&self, x: &[Rational]) -> bool {
        x.len() == self.num_vars()
            && x.iter().all(|v| !v.is_negative())
            && self
                .upper
                .iter()
                .zip(x)
                .all(|(u, v)| u.as_ref().is_none_or(|u| v <= u))
            && self.constraints.iter().all(|row| {
                let lhs = self.row_activity(row, x);
                match row.sense {
                    Sense::Le => lhs <= row.rhs,
                    Sense::Ge => lhs >= row.rhs,
                    Sense::Eq => lhs == row.rhs,
                }
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LpResult {
    pub status: LpStatus,
    #[serde(with = "rational::serde_str_vec")]
    pub primal: Vec<Rational>,
    /// One multiplier per constraint row.
    #[serde(with = "rational::serde_str_vec")]
    pub dual: Vec<Rational>,
    /// One multiplier per variable, zero where no upper bound was set.
    #[serde(with = "rational::serde_str_vec")]
    pub bound_dual: Vec<Rational>,
    #[serde(with = "rational::serde_str")]
    pub objective: Rational,
    /// For `Unbounded`, an improving ray of the primal; for `Infeasible`, a
    /// Farkas multiplier vector over the rows followed by the upper bounds.
    #[serde(with = "rational::serde_str_vec")]
    pub certificate: Vec<Rational>,
    pub pivots: usize,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    /// Column whose original coefficients are `e_i`, per row.
    unit_col: Vec<usize>,
    cols: usize,
    pivots: usize,
}

enum Outcome {
    Optimal,
    Unbounded(usize),
}

impl Tableau {
    fn rhs(&self, r: usize) -> &Rational {
        &self.rows[r][self.cols]
    }

    fn pivot(&mut self, pr: usize, pc: usize) {
        let inv = self.rows[pr][pc].recip();
        let nonzero: Vec<usize> = (0..=self.cols)
            .filter(|&j| !self.rows[pr][j].is_zero())
            .collect();
        for &j in &nonzero {
            self.rows[pr][j] *= &inv;
        }
        let pivot_row = self.rows[pr].clone();
        for (r, row) in self.rows.iter_mut().enumerate() {
            if r == pr || row[pc].is_zero() {
                continue;
            }
            let f = row[pc].clone();
            for &j in &nonzero {
                row[j] -= &f * &pivot_row[j];
            }
        }
        self.basis[pr] = pc;
        self.pivots += 1;
    }

    /// `c_B B⁻¹`, the simplex multipliers for the given column costs.
    fn multipliers(&self, cost: &[Rational]) -> Vec<Rational> {
        self.unit_col
            .iter()
            .map(|&u| {
                self.basis
                    .iter()
                    .enumerate()
                    .map(|(r, &b)| &cost[b] * &self.rows[r][u])
                    .sum()
            })
            .collect()
    }

    fn reduced_costs(&self, cost: &[Rational]) -> Vec<Rational> {
        (0..self.cols)
            .map(|j| {
                let zj: Rational = self
                    .basis
                    .iter()
                    .enumerate()
                    .filter(|(r, _)| !self.rows[*r][j].is_zero())
                    .map(|(r, &b)| &cost[b] * &self.rows[r][j])
                    .sum();
                zj - &cost[j]
            })
            .collect()
    }

    /// Maximises `cost` over the current basis with Bland's rule.
    fn optimize(&mut self, cost: &[Rational], allowed: &[bool]) -> Outcome {
        let mut reduced = self.reduced_costs(cost);
        loop {
            let Some(pc) = (0..self.cols).find(|&j| allowed[j] && reduced[j].is_negative()) else {
                return Outcome::Optimal;
            };
            let mut best: Option<(usize, Rational)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][pc];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(r) / a;
                let better = match &best {
                    None => true,
                    Some((br, bv)) => {
                        ratio < *bv || (ratio == *bv && self.basis[r] < self.basis[*br])
                    }
                };
                if better {
                    best = Some((r, ratio));
                }
            }
            let Some((pr, _)) = best else {
                return Outcome::Unbounded(pc);
            };
            self.pivot(pr, pc);
            let f = reduced[pc].clone();
            for j in 0..self.cols {
                if !self.rows[pr][j].is_zero() {
                    reduced[j] -= &f * &self.rows[pr][j];
                }
            }
        }
    }

    fn dump(&self) -> String {
        let mut out = String::new();
        for (r, row) in self.rows.iter().enumerate() {
            let _ = write!(out, "basis={:>4} |", self.basis[r]);
            for v in row {
                let _ = write!(out, " {:>6}", format_rational(v));
            }
            out.push('\n');
        }
        out
    }
}

/// Structured text dump of the initial phase-one tableau, for debugging.
pub fn dump_tableau(p: &LpProblem) -> String {
    build(p).tableau.dump()
}

struct Layout {
    tableau: Tableau,
    /// Rows negated so that the right-hand side is nonnegative.
    flipped: Vec<bool>,
    artificial: Vec<bool>,
    rows: Vec<Constraint>,
}

fn build(p: &LpProblem) -> Layout {
    let rows = p.all_rows();
    let n = p.num_vars();
    let m = rows.len();
    let mut flipped = vec![false; m];
    let mut senses = Vec::with_capacity(m);
    for (i, row) in rows.iter().enumerate() {
        let mut s = row.sense;
        if row.rhs.is_negative() {
            flipped[i] = true;
            s = match s {
                Sense::Le => Sense::Ge,
                Sense::Ge => Sense::Le,
                Sense::Eq => Sense::Eq,
            };
        }
        senses.push(s);
    }
    let slack_count = senses.iter().filter(|s| **s != Sense::Eq).count();
    let art_count = senses.iter().filter(|s| **s != Sense::Le).count();
    let cols = n + slack_count + art_count;
    let mut table = vec![vec![rational::zero(); cols + 1]; m];
    let mut basis = vec![0; m];
    let mut unit_col = vec![0; m];
    let mut artificial = vec![false; cols];
    let (mut next_slack, mut next_art) = (n, n + slack_count);
    for (i, row) in rows.iter().enumerate() {
        let sign = if flipped[i] {
            -rational::one()
        } else {
            rational::one()
        };
        for (j, a) in &row.coeffs {
            table[i][*j] = a * &sign;
        }
        table[i][cols] = &row.rhs * &sign;
        match senses[i] {
            Sense::Le => {
                table[i][next_slack] = rational::one();
                basis[i] = next_slack;
                unit_col[i] = next_slack;
                next_slack += 1;
            }
            Sense::Ge => {
                table[i][next_slack] = -rational::one();
                next_slack += 1;
                table[i][next_art] = rational::one();
                artificial[next_art] = true;
                basis[i] = next_art;
                unit_col[i] = next_art;
                next_art += 1;
            }
            Sense::Eq => {
                table[i][next_art] = rational::one();
                artificial[next_art] = true;
                basis[i] = next_art;
                unit_col[i] = next_art;
                next_art += 1;
            }
        }
    }
    let tableau = Tableau {
        rows: table,
        basis,
        unit_col,
        cols,
        pivots: 0,
    };
    Layout {
        tableau,
        flipped,
        artificial,
        rows,
    }
}

/// Solves the problem exactly. Returns `Err(Certificate)` only if the final
/// basis fails its own optimality certificate, which indicates a solver bug.
pub fn solve_lp(p: &LpProblem) -> Result<LpResult> {
    let Layout {
        mut tableau,
        flipped,
        artificial,
        rows,
    } = build(p);
    let n = p.num_vars();
    let cols = tableau.cols;
    let m = rows.len();

    // phase one: maximise −Σ artificials
    let phase1: Vec<Rational> = (0..cols)
        .map(|j| {
            if artificial[j] {
                -rational::one()
            } else {
                rational::zero()
            }
        })
        .collect();
    let all = vec![true; cols];
    if artificial.iter().any(|&a| a) {
        tableau.optimize(&phase1, &all);
        let infeas: Rational = tableau
            .basis
            .iter()
            .enumerate()
            .map(|(r, &b)| &phase1[b] * tableau.rhs(r))
            .sum();
        if infeas.is_negative() {
            let y = tableau.multipliers(&phase1);
            let certificate = y
                .into_iter()
                .zip(&flipped)
                .map(|(v, &f)| if f { -v } else { v })
                .collect();
            return Ok(LpResult {
                status: LpStatus::Infeasible,
                primal: vec![],
                dual: vec![],
                bound_dual: vec![],
                objective: rational::zero(),
                certificate,
                pivots: tableau.pivots,
            });
        }
        for r in 0..m {
            if artificial[tableau.basis[r]] {
                if let Some(j) =
                    (0..cols).find(|&j| !artificial[j] && !tableau.rows[r][j].is_zero())
                {
                    tableau.pivot(r, j);
                }
            }
        }
    }

    let sign = match p.direction {
        Direction::Maximize => rational::one(),
        Direction::Minimize => -rational::one(),
    };
    let mut cost = vec![rational::zero(); cols];
    for (j, c) in p.objective.iter().enumerate() {
        cost[j] = c * &sign;
    }
    let allowed: Vec<bool> = artificial.iter().map(|a| !a).collect();
    if let Outcome::Unbounded(pc) = tableau.optimize(&cost, &allowed) {
        let mut ray = vec![rational::zero(); n];
        if pc < n {
            ray[pc] = rational::one();
        }
        for (r, &b) in tableau.basis.iter().enumerate() {
            if b < n {
                ray[b] = -tableau.rows[r][pc].clone();
            }
        }
        return Ok(LpResult {
            status: LpStatus::Unbounded,
            primal: vec![],
            dual: vec![],
            bound_dual: vec![],
            objective: rational::zero(),
            certificate: ray,
            pivots: tableau.pivots,
        });
    }

    let mut primal = vec![rational::zero(); n];
    for (r, &b) in tableau.basis.iter().enumerate() {
        if b < n {
            primal[b] = tableau.rhs(r).clone();
        }
    }
    let y_all: Vec<Rational> = tableau
        .multipliers(&cost)
        .into_iter()
        .zip(&flipped)
        .map(|(v, &f)| {
            let v = if f { -v } else { v };
            v * &sign
        })
        .collect();
    let k = p.constraints.len();
    let dual = y_all[..k].to_vec();
    let mut bound_dual = vec![rational::zero(); n];
    let bounded = p
        .upper
        .iter()
        .enumerate()
        .filter(|(_, u)| u.is_some())
        .map(|(j, _)| j);
    for (j, y) in bounded.zip(&y_all[k..]) {
        bound_dual[j] = y.clone();
    }
    let objective: Rational = p.objective.iter().zip(&primal).map(|(c, x)| c * x).sum();
    let result = LpResult {
        status: LpStatus::Optimal,
        primal,
        dual,
        bound_dual,
        objective,
        certificate: vec![],
        pivots: tableau.pivots,
    };
    verify_optimal(p, &result)?;
    Ok(result)
}

/// Checks primal feasibility, dual feasibility and `c·x = b·y` exactly.
pub fn verify_optimal(p: &LpProblem, res: &LpResult) -> Result<()> {
    if !p.is_feasible(&res.primal) {
        return Err(Error::Certificate("primal solution infeasible".into()));
    }
    let maximize = p.direction == Direction::Maximize;
    for (i, row) in p.constraints.iter().enumerate() {
        let y = &res.dual[i];
        let ok = match (row.sense, maximize) {
            (Sense::Eq, _) => true,
            (Sense::Le, true) | (Sense::Ge, false) => !y.is_negative(),
            (Sense::Ge, true) | (Sense::Le, false) => !y.is_positive(),
        };
        if !ok {
            return Err(Error::Certificate(format!(
                "dual multiplier of row {i} has the wrong sign"
            )));
        }
    }
    for (j, z) in res.bound_dual.iter().enumerate() {
        let wrong = if maximize {
            z.is_negative()
        } else {
            z.is_positive()
        };
        if wrong || (p.upper[j].is_none() && !z.is_zero()) {
            return Err(Error::Certificate(format!(
                "bound multiplier of variable {j} invalid"
            )));
        }
    }
    let mut aty = res.bound_dual.clone();
    for (row, y) in p.constraints.iter().zip(&res.dual) {
        for (j, a) in &row.coeffs {
            aty[*j] += a * y;
        }
    }
    for (j, (v, c)) in aty.iter().zip(&p.objective).enumerate() {
        let ok = if maximize { v >= c } else { v <= c };
        if !ok {
            return Err(Error::Certificate(format!(
                "dual constraint of column {j} violated"
            )));
        }
    }
    let dual_obj: Rational = p
        .constraints
        .iter()
        .zip(&res.dual)
        .map(|(row, y)| &row.rhs * y)
        .chain(
            p.upper
                .iter()
                .zip(&res.bound_dual)
                .filter_map(|(u, z)| u.as_ref().map(|u| u * z)),
        )
        .sum();
    if dual_obj != res.objective {
        return Err(Error::Certificate(format!(
            "duality gap: primal {} vs dual {}",
            format_rational(&res.objective),
            format_rational(&dual_obj)
        )));
    }
    Ok(())
}

/// Checks a Farkas certificate `y` for an infeasible problem: `yᵀA ≥ 0` on
/// every column, the sign pattern of a maximisation dual, and `yᵀb < 0`.
pub fn verify_farkas(p: &LpProblem, y: &[Rational]) -> bool {
    let rows = p.all_rows();
    if y.len() != rows.len() {
        return false;
    }
    let signs_ok = rows.iter().zip(y).all(|(row, v)| match row.sense {
        Sense::Eq => true,
        Sense::Le => !v.is_negative(),
        Sense::Ge => !v.is_positive(),
    });
    let mut col = vec![rational::zero(); p.num_vars()];
    for (row, v) in rows.iter().zip(y) {
        for (j, a) in &row.coeffs {
            col[*j] += a * v;
        }
    }
    let rhs: Rational = rows.iter().zip(y).map(|(row, v)| &row.rhs * v).sum();
    signs_ok && col.iter().all(|c| !c.is_negative()) && rhs.is_negative()
}
