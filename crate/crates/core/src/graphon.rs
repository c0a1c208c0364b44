//! Step graphons with exact rational data.
//!
//! A [`StepGraphon`] is constant on the cells `Ω_p × Ω_q` of a finite
//! partition of the unit-measure space. Part `p` has measure `measures[p]`
//! and `W` takes the value `densities[p][q]` on `Ω_p × Ω_q`.
//!
//! Text format: the part count `k` on the first line, the `k` measures on
//! the second, then `k` rows of `k` densities, all as integer or `p/q`
//! literals.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{self, format_rational, parse_rational, Rational};

/// Upper bound on the part count for the searches that are exponential in `k`.
pub const PART_CAP: usize = 16;

/// Parts accepted by the text parser.
pub const PARSE_PART_CAP: usize = 1024;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StepGraphon {
    measures: Vec<Rational>,
    densities: Vec<Vec<Rational>>,
}

/// An ordered assignment of the vertices of a pattern `F` to parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PartTuple(pub Vec<usize>);

impl PartTuple {
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// How many coordinates equal each part, for `k` parts.
    pub fn counts(&self, k: usize) -> Vec<usize> {
        let mut c = vec![0; k];
        for &p in &self.0 {
            c[p] += 1;
        }
        c
    }
}

impl StepGraphon {
    /// Checks that measures are positive and sum to one, and that the density
    /// matrix is square, symmetric and valued in `[0, 1]`.
    pub fn new(measures: Vec<Rational>, densities: Vec<Vec<Rational>>) -> Result<Self> {
        let k = measures.len();
        if k == 0 {
            return Err(Error::InvalidGraphon(
                "at least one part is required".into(),
            ));
        }
        if let Some(p) = measures.iter().position(|m| !m.is_positive()) {
            return Err(Error::InvalidGraphon(format!(
                "measure of part {p} is not positive"
            )));
        }
        let total: Rational = measures.iter().sum();
        if !total.is_one() {
            return Err(Error::InvalidGraphon(format!(
                "measures sum to {}, not 1",
                format_rational(&total)
            )));
        }
        if densities.len() != k || densities.iter().any(|row| row.len() != k) {
            return Err(Error::InvalidGraphon(format!(
                "density matrix must be {k}x{k}"
            )));
        }
        for p in 0..k {
            for q in 0..k {
                let d = &densities[p][q];
                if !rational::is_unit_interval(d) {
                    return Err(Error::InvalidGraphon(format!(
                        "density {} at ({p},{q}) is outside [0,1]",
                        format_rational(d)
                    )));
                }
                if *d != densities[q][p] {
                    return Err(Error::InvalidGraphon(format!(
                        "densities not symmetric at ({p},{q})"
                    )));
                }
            }
        }
        Ok(StepGraphon {
            measures,
            densities,
        })
    }

    /// One part carrying the constant value `value`.
    pub fn constant(value: Rational) -> Result<Self> {
        StepGraphon::new(vec![rational::one()], vec![vec![value]])
    }

    /// `k` equal parts all carrying the constant value `value`.
    pub fn uniform(k: usize, value: Rational) -> Result<Self> {
        let m = Rational::new(1.into(), k.into());
        StepGraphon::new(vec![m; k], vec![vec![value; k]; k])
    }

    /// Complete multipartite 0/1 graphon with the given part measures.
    pub fn complete_multipartite(measures: Vec<Rational>) -> Result<Self> {
        let k = measures.len();
        let densities = (0..k)
            .map(|p| {
                (0..k)
                    .map(|q| {
                        if p == q {
                            rational::zero()
                        } else {
                            rational::one()
                        }
                    })
                    .collect()
            })
            .collect();
        StepGraphon::new(measures, densities)
    }

    /// The step graphon of a finite graph: one part of measure `1/n` per vertex.
    pub fn from_graph(g: &Graph) -> Self {
        let n = g.order();
        let m = Rational::new(1.into(), n.into());
        let densities = (0..n)
            .map(|u| {
                (0..n)
                    .map(|v| {
                        if g.has_edge(u, v) {
                            rational::one()
                        } else {
                            rational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        StepGraphon {
            measures: vec![m; n],
            densities,
        }
    }

    pub fn parts(&self) -> usize {
        self.measures.len()
    }

    pub fn measures(&self) -> &[Rational] {
        &self.measures
    }

    pub fn densities(&self) -> &[Vec<Rational>] {
        &self.densities
    }

    pub fn density(&self, p: usize, q: usize) -> &Rational {
        &self.densities[p][q]
    }

    /// The same graphon with the value on `Ω_p × Ω_q` (and its mirror) replaced.
    pub fn with_density(&self, p: usize, q: usize, value: Rational) -> Result<Self> {
        let k = self.parts();
        for i in [p, q] {
            if i >= k {
                return Err(Error::IndexOutOfRange { index: i, parts: k });
            }
        }
        let mut d = self.densities.clone();
        d[p][q] = value.clone();
        d[q][p] = value;
        StepGraphon::new(self.measures.clone(), d)
    }

    /// Rename part `p` to `perm[p]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        let k = self.parts();
        let mut inverse = vec![usize::MAX; k];
        if perm.len() != k {
            return Err(Error::InvalidParameter(
                "part relabelling is not a permutation".into(),
            ));
        }
        for (p, &t) in perm.iter().enumerate() {
            if t >= k || inverse[t] != usize::MAX {
                return Err(Error::InvalidParameter(
                    "part relabelling is not a permutation".into(),
                ));
            }
            inverse[t] = p;
        }
        let measures = (0..k).map(|t| self.measures[inverse[t]].clone()).collect();
        let densities = (0..k)
            .map(|s| {
                (0..k)
                    .map(|t| self.densities[inverse[s]][inverse[t]].clone())
                    .collect()
            })
            .collect();
        StepGraphon::new(measures, densities)
    }

    /// Splits part `p` into two halves with identical density rows. The result
    /// represents the same graphon on a finer partition; the new half is appended last.
    pub fn split_part(&self, p: usize) -> Result<Self> {
        let k = self.parts();
        if p >= k {
            return Err(Error::IndexOutOfRange { index: p, parts: k });
        }
        let half = &self.measures[p] / rational::int(2);
        let mut measures = self.measures.clone();
        measures[p] = half.clone();
        measures.push(half);
        let src = |i: usize| if i == k { p } else { i };
        let densities = (0..=k)
            .map(|s| {
                (0..=k)
                    .map(|t| self.densities[src(s)][src(t)].clone())
                    .collect()
            })
            .collect();
        StepGraphon::new(measures, densities)
    }

    /// `deg_W` on part `p`: `Σ_q measures[q] · densities[p][q]`.
    pub fn degree(&self, p: usize) -> Result<Rational> {
        if p >= self.parts() {
            return Err(Error::IndexOutOfRange {
                index: p,
                parts: self.parts(),
            });
        }
        Ok(self
            .measures
            .iter()
            .zip(&self.densities[p])
            .map(|(m, d)| m * d)
            .sum())
    }

    /// Minimum degree; for step functions the essential infimum is the
    /// minimum over parts since every part has positive measure.
    pub fn min_degree(&self) -> Rational {
        (0..self.parts())
            .map(|p| self.degree(p).expect("index in range"))
            .min()
            .expect("at least one part")
    }

    /// `∫ W^{⊗F}`: the homomorphism density of `f` in this graphon.
    pub fn hom_density(&self, f: &Graph) -> Rational {
        let mut total = rational::zero();
        let mut assignment = Vec::with_capacity(f.order());
        self.visit_tuples(f, &mut assignment, rational::one(), &mut |_, weight| {
            total += weight
        });
        total
    }

    /// Ordered part tuples on which `W^{⊗F}` is positive, in lexicographic order.
    pub fn admissible_tuples(&self, f: &Graph) -> Vec<PartTuple> {
        let mut out = Vec::new();
        let mut assignment = Vec::with_capacity(f.order());
        self.visit_tuples(f, &mut assignment, rational::one(), &mut |t, _| {
            out.push(PartTuple(t.to_vec()))
        });
        out
    }

    /// Walks every tuple with positive weight `∏ measures · ∏_{edges} densities`,
    /// assigning vertices of `f` in index order and parts in increasing order.
    fn visit_tuples(
        &self,
        f: &Graph,
        assignment: &mut Vec<usize>,
        weight: Rational,
        visit: &mut impl FnMut(&[usize], Rational),
    ) {
        let i = assignment.len();
        if i == f.order() {
            visit(assignment, weight);
            return;
        }
        for p in 0..self.parts() {
            let mut w = &weight * &self.measures[p];
            for j in f.neighbors(i).filter(|&j| j < i) {
                w *= &self.densities[p][assignment[j]];
            }
            if w.is_zero() {
                continue;
            }
            assignment.push(p);
            self.visit_tuples(f, assignment, w, visit);
            assignment.pop();
        }
    }

    /// Whether the parts can be grouped into `s` groups of total measure
    /// `1/s` each, with density exactly 0 inside groups and exactly 1 across.
    pub fn is_turan_graphon(&self, s: usize) -> Result<bool> {
        let k = self.parts();
        if k > PART_CAP {
            return Err(Error::TooLarge {
                what: "step graphon",
                size: k,
                cap: PART_CAP,
            });
        }
        if s == 0 || s > k {
            return Ok(false);
        }
        let target = Rational::new(1.into(), s.into());
        let mut group = vec![usize::MAX; k];
        let mut mass = vec![rational::zero(); s];
        Ok(self.group_parts(0, 0, s, &target, &mut group, &mut mass))
    }

    fn group_parts(
        &self,
        p: usize,
        used: usize,
        s: usize,
        target: &Rational,
        group: &mut [usize],
        mass: &mut [Rational],
    ) -> bool {
        let k = self.parts();
        if p == k {
            return used == s && mass.iter().all(|m| m == target);
        }
        if s - used > k - p {
            return false;
        }
        for g in 0..(used + 1).min(s) {
            let fits = (0..=p).all(|q| {
                let same = q == p || group[q] == g;
                let want = if same {
                    rational::zero()
                } else {
                    rational::one()
                };
                self.densities[p][q] == want
            });
            if !fits {
                continue;
            }
            let new_mass = &mass[g] + &self.measures[p];
            if new_mass > *target {
                continue;
            }
            let old = std::mem::replace(&mut mass[g], new_mass);
            group[p] = g;
            if self.group_parts(p + 1, used.max(g + 1), s, target, group, mass) {
                return true;
            }
            mass[g] = old;
            group[p] = usize::MAX;
        }
        false
    }

    pub fn to_text(&self) -> String {
        let join = |row: &[Rational]| {
            row.iter()
                .map(format_rational)
                .collect::<Vec<_>>()
                .join(" ")
        };
        let mut out = format!("{}\n{}\n", self.parts(), join(&self.measures));
        for row in &self.densities {
            out.push_str(&join(row));
            out.push('\n');
        }
        out
    }
}

/// The balanced complete `s`-partite graphon.
pub fn turan_graphon(s: usize) -> Result<StepGraphon> {
    if s == 0 {
        return Err(Error::InvalidParameter(
            "Turán graphon needs at least one part".into(),
        ));
    }
    StepGraphon::complete_multipartite(vec![Rational::new(1.into(), s.into()); s])
}

/// Class measures of a bottleneck construction with parameters `x` and `χ_cr`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BottleneckMeasures {
    /// `r = ⌈χ_cr⌉`.
    pub classes: usize,
    /// Measure of each of the `r − 1` large classes.
    pub large: Rational,
    /// Measure of the bottleneck class; zero when `x = 0`.
    pub last: Rational,
}

impl BottleneckMeasures {
    /// The bottleneck class gets `x(χ_cr + 1 − r)/χ_cr` and the `r − 1` other
    /// classes share the rest equally. This is the split for which the large
    /// classes have degree exactly `x(1 − 1/χ_cr) + (1 − x)(1 − 1/(r − 1))`.
    ///
    /// `x = 1` is accepted here for finite bottleneck graphs; the graphon
    /// constructor itself requires `x < 1`.
    pub fn new(x: &Rational, chi_cr: &Rational) -> Result<Self> {
        if !rational::is_unit_interval(x) {
            return Err(Error::InvalidParameter(format!(
                "x = {} must lie in [0,1]",
                format_rational(x)
            )));
        }
        if *chi_cr <= rational::one() {
            return Err(Error::InvalidParameter(format!(
                "chi_cr = {} must exceed 1",
                format_rational(chi_cr)
            )));
        }
        let r = rational::ceil_to_usize(chi_cr)
            .ok_or_else(|| Error::InvalidParameter("chi_cr too large".into()))?;
        let r_rat = rational::int(r as i64);
        let last = x * (chi_cr + rational::one() - &r_rat) / chi_cr;
        let large = (rational::one() - &last) / (&r_rat - rational::one());
        if last.is_negative() || !large.is_positive() {
            return Err(Error::InvalidParameter(
                "bottleneck class measures are negative".into(),
            ));
        }
        Ok(BottleneckMeasures {
            classes: r,
            large,
            last,
        })
    }
}

/// The bottleneck graphon: `r − 1` independent large classes, a bottleneck
/// class carrying the value `internal` on its diagonal block, and density 1
/// between distinct classes. With `x = 0` the empty bottleneck class is
/// dropped, leaving the `(r − 1)`-partite Turán graphon.
pub fn bottleneck_graphon(
    x: &Rational,
    chi_cr: &Rational,
    internal: &Rational,
) -> Result<StepGraphon> {
    if !rational::is_unit_interval(internal) {
        return Err(Error::InvalidParameter(
            "internal density must lie in [0,1]".into(),
        ));
    }
    if *x >= rational::one() {
        return Err(Error::InvalidParameter(format!(
            "x = {} must lie in [0,1)",
            format_rational(x)
        )));
    }
    let m = BottleneckMeasures::new(x, chi_cr)?;
    let mut measures = vec![m.large.clone(); m.classes - 1];
    let keep_last = m.last.is_positive();
    if keep_last {
        measures.push(m.last.clone());
    }
    let k = measures.len();
    let densities = (0..k)
        .map(|p| {
            (0..k)
                .map(|q| match (p == q, keep_last && p == k - 1) {
                    (false, _) => rational::one(),
                    (true, true) => internal.clone(),
                    (true, false) => rational::zero(),
                })
                .collect()
        })
        .collect();
    StepGraphon::new(measures, densities)
}

/// A signed symmetric step function on a fixed partition, e.g. the
/// difference of two step graphons sharing their parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedStep {
    measures: Vec<Rational>,
    values: Vec<Vec<Rational>>,
}

impl SignedStep {
    pub fn new(measures: Vec<Rational>, values: Vec<Vec<Rational>>) -> Result<Self> {
        let k = measures.len();
        if measures.iter().any(|m| m.is_negative()) {
            return Err(Error::InvalidParameter(
                "part measures must be nonnegative".into(),
            ));
        }
        if values.len() != k || values.iter().any(|r| r.len() != k) {
            return Err(Error::InvalidParameter(format!(
                "value matrix must be {k}x{k}"
            )));
        }
        if (0..k).any(|p| (0..p).any(|q| values[p][q] != values[q][p])) {
            return Err(Error::InvalidParameter(
                "value matrix must be symmetric".into(),
            ));
        }
        Ok(SignedStep { measures, values })
    }

    /// `a − b` for graphons on identical partitions.
    pub fn difference(a: &StepGraphon, b: &StepGraphon) -> Result<Self> {
        if a.measures != b.measures {
            return Err(Error::InvalidParameter(
                "graphons do not share a partition".into(),
            ));
        }
        let values = a
            .densities
            .iter()
            .zip(&b.densities)
            .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x - y).collect())
            .collect();
        SignedStep::new(a.measures.clone(), values)
    }

    pub fn values(&self) -> &[Vec<Rational>] {
        &self.values
    }

    pub fn measures(&self) -> &[Rational] {
        &self.measures
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let values = self
            .values
            .iter()
            .map(|r| r.iter().map(|v| v * c).collect())
            .collect();
        SignedStep {
            measures: self.measures.clone(),
            values,
        }
    }

    pub fn add(&self, other: &SignedStep) -> Result<Self> {
        if self.measures != other.measures {
            return Err(Error::InvalidParameter(
                "step functions do not share a partition".into(),
            ));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + y).collect())
            .collect();
        Ok(SignedStep {
            measures: self.measures.clone(),
            values,
        })
    }

    /// `max_{S,T} |Σ_{p∈S, q∈T} μ_p μ_q U_pq|` over unions of parts.
    ///
    /// The objective is bilinear in the inclusion vectors, so the maximum is
    /// attained at 0/1 vectors. Every `S` is enumerated; for fixed `S` the
    /// best `T` takes all columns of one sign, which gives the maximum of
    /// both the sum and its negation in `O(k)` per `S`.
    pub fn cut_norm(&self) -> Result<Rational> {
        let k = self.measures.len();
        if k > PART_CAP {
            return Err(Error::TooLarge {
                what: "step function",
                size: k,
                cap: PART_CAP,
            });
        }
        // weighted[p][q] = μ_p μ_q U_pq
        let weighted: Vec<Vec<Rational>> = (0..k)
            .map(|p| {
                (0..k)
                    .map(|q| &self.measures[p] * &self.measures[q] * &self.values[p][q])
                    .collect()
            })
            .collect();
        let mut best = rational::zero();
        let mut column = vec![rational::zero(); k];
        for mask in 1u32..(1u32 << k) {
            column.iter_mut().for_each(|c| *c = rational::zero());
            for (p, row) in weighted.iter().enumerate() {
                if mask & (1 << p) != 0 {
                    for (c, w) in column.iter_mut().zip(row) {
                        *c += w;
                    }
                }
            }
            let pos: Rational = column.iter().filter(|c| c.is_positive()).sum();
            let neg: Rational = column.iter().filter(|c| c.is_negative()).sum();
            best = best.max(pos).max(-neg);
        }
        Ok(best)
    }
}

impl fmt::Debug for StepGraphon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &[Rational]| v.iter().map(format_rational).collect::<Vec<_>>().join(", ");
        write!(
            f,
            "StepGraphon {{ measures: [{}], densities: [",
            show(&self.measures)
        )?;
        for (i, row) in self.densities.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            f.write_str(&show(row))?;
        }
        f.write_str("] }")
    }
}

impl fmt::Display for StepGraphon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn parse_row(line: &str, k: usize, what: &str, lineno: usize) -> Result<Vec<Rational>> {
    let row = line
        .split_whitespace()
        .map(parse_rational)
        .collect::<Result<Vec<_>>>()
        .map_err(|e| Error::Parse(format!("line {lineno}: {e}")))?;
    if row.len() != k {
        return Err(Error::Parse(format!(
            "line {lineno}: expected {k} {what}, found {}",
            row.len()
        )));
    }
    Ok(row)
}

impl FromStr for StepGraphon {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (lineno, header) = lines
            .next()
            .ok_or_else(|| Error::Parse("empty input, expected part count".into()))?;
        if !header.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!(
                "line {lineno}: `{header}` is not a part count"
            )));
        }
        let k: usize = header
            .parse()
            .map_err(|_| Error::Parse(format!("line {lineno}: part count out of range")))?;
        if k == 0 || k > PARSE_PART_CAP {
            return Err(Error::Parse(format!(
                "line {lineno}: part count must be in 1..={PARSE_PART_CAP}"
            )));
        }
        let (lineno, line) = lines
            .next()
            .ok_or_else(|| Error::Parse("missing measures line".into()))?;
        let measures = parse_row(line, k, "measures", lineno)?;
        let mut densities = Vec::with_capacity(k);
        for row in 0..k {
            let (lineno, line) = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("missing density row {row}")))?;
            densities.push(parse_row(line, k, "densities", lineno)?);
        }
        if let Some((lineno, _)) = lines.next() {
            return Err(Error::Parse(format!(
                "line {lineno}: unexpected trailing data"
            )));
        }
        StepGraphon::new(measures, densities)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    /// `Σ` over all `k^{v(F)}` tuples, with no pruning.
    fn brute_hom_density(f: &Graph, w: &StepGraphon) -> Rational {
        let k = w.parts();
        let n = f.order();
        let mut total = rational::zero();
        for code in 0..k.pow(n as u32) {
            let t: Vec<usize> = (0..n).map(|i| code / k.pow(i as u32) % k).collect();
            let mut term: Rational = t.iter().map(|&p| w.measures()[p].clone()).product();
            for &(a, b) in f.edges() {
                term *= w.density(t[a], t[b]);
            }
            total += term;
        }
        total
    }

    fn half() -> Rational {
        ratio(1, 2)
    }

    #[test]
    fn from_graph_and_degrees() {
        let w = StepGraphon::from_graph(&Graph::complete(2));
        assert_eq!(w.measures(), &[half(), half()]);
        assert_eq!(w.density(0, 1), &int(1));
        assert_eq!(w.density(0, 0), &int(0));
        let e = StepGraphon::from_graph(&Graph::empty(3));
        assert!(e.densities().iter().flatten().all(|d| d.is_zero()));
        let c5 = StepGraphon::from_graph(&Graph::cycle(5));
        for p in 0..5 {
            assert_eq!(c5.degree(p).unwrap(), ratio(2, 5));
        }
        assert_eq!(
            c5.degree(5),
            Err(Error::IndexOutOfRange { index: 5, parts: 5 })
        );
    }

    #[test]
    fn min_degrees() {
        assert_eq!(
            StepGraphon::constant(half()).unwrap().degree(0).unwrap(),
            half()
        );
        assert_eq!(turan_graphon(2).unwrap().min_degree(), half());
        assert_eq!(
            StepGraphon::from_graph(&Graph::path(3)).min_degree(),
            ratio(1, 3)
        );
        assert_eq!(StepGraphon::constant(int(0)).unwrap().min_degree(), int(0));
    }

    #[test]
    fn hom_densities() {
        let p = ratio(3, 7);
        assert_eq!(
            StepGraphon::constant(p.clone())
                .unwrap()
                .hom_density(&Graph::complete(2)),
            p
        );
        assert_eq!(
            turan_graphon(2).unwrap().hom_density(&Graph::complete(3)),
            int(0)
        );
        let k3 = StepGraphon::from_graph(&Graph::complete(3));
        assert_eq!(k3.hom_density(&Graph::complete(3)), ratio(2, 9));
        assert_eq!(
            turan_graphon(3).unwrap().hom_density(&Graph::complete(3)),
            ratio(6, 27)
        );
        let odd = StepGraphon::new(
            vec![ratio(1, 6), ratio(1, 3), half()],
            vec![
                vec![ratio(1, 5), int(1), int(0)],
                vec![int(1), ratio(2, 3), ratio(1, 4)],
                vec![int(0), ratio(1, 4), int(1)],
            ],
        )
        .unwrap();
        for f in [
            Graph::complete(2),
            Graph::path(3),
            Graph::complete(3),
            Graph::cycle(4),
            Graph::star(3),
        ] {
            assert_eq!(odd.hom_density(&f), brute_hom_density(&f, &odd), "{f:?}");
        }
    }

    #[test]
    fn admissible_tuple_lists() {
        let k2 = StepGraphon::from_graph(&Graph::complete(2));
        let t = k2.admissible_tuples(&Graph::complete(2));
        assert_eq!(t, vec![PartTuple(vec![0, 1]), PartTuple(vec![1, 0])]);
        assert!(turan_graphon(2)
            .unwrap()
            .admissible_tuples(&Graph::complete(3))
            .is_empty());
        let t3 = turan_graphon(3)
            .unwrap()
            .admissible_tuples(&Graph::complete(3));
        assert_eq!(t3.len(), 6);
        assert_eq!(t3[0], PartTuple(vec![0, 1, 2]));
        assert_eq!(t3[5], PartTuple(vec![2, 1, 0]));
        // P_3 folds onto a single edge when its ends share a part.
        let p3 = k2.admissible_tuples(&Graph::path(3));
        assert_eq!(p3, vec![PartTuple(vec![0, 1, 0]), PartTuple(vec![1, 0, 1])]);
    }

    #[test]
    fn cut_norms() {
        let zero = SignedStep::new(vec![half(), half()], vec![vec![int(0); 2]; 2]).unwrap();
        assert_eq!(zero.cut_norm().unwrap(), int(0));
        let c = ratio(-2, 5);
        let constant = SignedStep::new(vec![ratio(1, 3); 3], vec![vec![c.clone(); 3]; 3]).unwrap();
        assert_eq!(constant.cut_norm().unwrap(), ratio(2, 5));
        let off = SignedStep::new(
            vec![half(), half()],
            vec![vec![int(0), half()], vec![half(), int(0)]],
        )
        .unwrap();
        assert_eq!(off.cut_norm().unwrap(), ratio(1, 4));
        let big = SignedStep::new(vec![int(0); 17], vec![vec![int(0); 17]; 17]).unwrap();
        assert!(matches!(big.cut_norm(), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn bottleneck_construction() {
        let w = bottleneck_graphon(&half(), &int(3), &int(0)).unwrap();
        assert_eq!(w.measures(), &[ratio(5, 12), ratio(5, 12), ratio(1, 6)]);
        assert_eq!(w.degree(1).unwrap(), ratio(7, 12));
        assert_eq!(w.min_degree(), ratio(7, 12));
        let t = bottleneck_graphon(&int(0), &int(3), &int(0)).unwrap();
        assert_eq!(t, turan_graphon(2).unwrap());
        let p3 = bottleneck_graphon(&half(), &ratio(3, 2), &int(0)).unwrap();
        assert_eq!(p3.measures(), &[ratio(5, 6), ratio(1, 6)]);
        assert_eq!(p3.min_degree(), ratio(1, 6));
        let filled = bottleneck_graphon(&half(), &int(3), &ratio(1, 3)).unwrap();
        assert_eq!(filled.density(2, 2), &ratio(1, 3));
        assert_eq!(filled.density(0, 0), &int(0));
    }

    #[test]
    fn bottleneck_rejects_bad_parameters() {
        assert!(bottleneck_graphon(&int(1), &int(3), &int(0)).is_err());
        assert!(bottleneck_graphon(&ratio(-1, 2), &int(3), &int(0)).is_err());
        assert!(bottleneck_graphon(&half(), &int(1), &int(0)).is_err());
        assert!(bottleneck_graphon(&half(), &int(3), &int(2)).is_err());
    }

    #[test]
    fn turan_recognition() {
        assert!(turan_graphon(2).unwrap().is_turan_graphon(2).unwrap());
        assert!(!turan_graphon(2).unwrap().is_turan_graphon(3).unwrap());
        assert!(turan_graphon(1).unwrap().is_turan_graphon(1).unwrap());
        assert!(!StepGraphon::constant(half())
            .unwrap()
            .is_turan_graphon(2)
            .unwrap());
        let nudged = turan_graphon(2)
            .unwrap()
            .with_density(0, 1, ratio(99, 100))
            .unwrap();
        assert!(!nudged.is_turan_graphon(2).unwrap());
        let refined = turan_graphon(3)
            .unwrap()
            .split_part(1)
            .unwrap()
            .split_part(0)
            .unwrap();
        assert!(refined.is_turan_graphon(3).unwrap());
        let shuffled = refined.permute(&[4, 0, 3, 1, 2]).unwrap();
        assert!(shuffled.is_turan_graphon(3).unwrap());
        let lopsided = StepGraphon::complete_multipartite(vec![ratio(1, 3), ratio(2, 3)]).unwrap();
        assert!(!lopsided.is_turan_graphon(2).unwrap());
    }

    #[test]
    fn text_roundtrip_and_validation() {
        let w = bottleneck_graphon(&half(), &int(3), &ratio(1, 3)).unwrap();
        assert_eq!(w.to_text().parse::<StepGraphon>().unwrap(), w);
        let ok = "2\n1/2 1/2\n0 1\n1 0\n";
        assert_eq!(
            ok.parse::<StepGraphon>().unwrap(),
            turan_graphon(2).unwrap()
        );
        for bad in [
            "",
            "0\n",
            "2\n1/2 1/2\n0 1\n",
            "2\n1/2 1/3\n0 1\n1 0\n",
            "2\n1/2 1/2\n0 1\n1/2 0\n",
            "2\n1/2 1/2\n0 2\n2 0\n",
            "2\n1 0\n0 1\n1 0\n",
            "2\n1/2 1/2\n0 0.5\n0.5 0\n",
            "2\n1/2 1/2\n0 1\n1 0\n1\n",
            "x\n",
            "99999999999999999999\n",
        ] {
            assert!(bad.parse::<StepGraphon>().is_err(), "accepted {bad:?}");
        }
    }
}
