use num_traits::Zero;
use serde::Serialize;

use crate::coloring::chromatic_number;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graphon::StepGraphon;
use crate::rational::{self, Rational};

/// Outcome of testing the Erdős–Stone–Simonovits structure statement on one
/// step graphon: an `H`-free graphon with minimum degree at least
/// `1 − 1/(r − 1)` must be the `(r − 1)`-partite Turán graphon.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EssVerdict {
    pub chi: usize,
    #[serde(with = "rational::serde_str")]
    pub hom_density: Rational,
    #[serde(with = "rational::serde_str")]
    pub min_degree: Rational,
    #[serde(with = "rational::serde_str")]
    pub degree_bound: Rational,
    pub hypotheses_hold: bool,
    pub is_turan: bool,
}

impl EssVerdict {
    /// Vacuously true when the hypotheses fail.
    pub fn conclusion_holds(&self) -> bool {
        !self.hypotheses_hold || self.is_turan
    }

    pub fn is_violation(&self) -> bool {
        !self.conclusion_holds()
    }
}

pub fn ess_checker(h: &Graph, w: &StepGraphon) -> Result<EssVerdict> {
    let chi = chromatic_number(h);
    if chi < 2 {
        return Err(Error::InvalidParameter(
            "pattern must have chromatic number at least 2".into(),
        ));
    }
    let hom_density = w.hom_density(h);
    let min_degree = w.min_degree();
    let degree_bound = rational::one() - Rational::new(1.into(), (chi - 1).into());
    let hypotheses_hold = hom_density.is_zero() && min_degree >= degree_bound;
    let is_turan = w.is_turan_graphon(chi - 1)?;
    Ok(EssVerdict {
        chi,
        hom_density,
        min_degree,
        degree_bound,
        hypotheses_hold,
        is_turan,
    })
}
