//! Shared domain types: box bounds, individuals, populations, and the global
//! evaluation counter.

use crate::error::{Error, Result};
use crate::num::clamp_to;
use crate::Real;

/// Per-dimension box bounds of the search space.
#[derive(Debug, Clone, PartialEq)]
pub struct Bounds {
    lower: Vec<Real>,
    upper: Vec<Real>,
}

impl Bounds {
    pub fn new(lower: Vec<Real>, upper: Vec<Real>) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(Error::DimensionMismatch { expected: lower.len(), got: upper.len() });
        }
        if lower.is_empty() {
            return Err(Error::Domain("bounds must have at least one dimension".into()));
        }
        for (d, (&lo, &hi)) in lower.iter().zip(upper.iter()).enumerate() {
            if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
                return Err(Error::Domain(format!(
                    "invalid bounds in dimension {d}: [{lo}, {hi}]"
                )));
            }
        }
        Ok(Self { lower, upper })
    }

    /// Same `[lo, hi]` interval in every dimension.
    pub fn uniform(dimension: usize, lo: Real, hi: Real) -> Result<Self> {
        Self::new(vec![lo; dimension], vec![hi; dimension])
    }

    pub fn dimension(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[Real] {
        &self.lower
    }

    pub fn upper(&self) -> &[Real] {
        &self.upper
    }

    /// Width of dimension `d`.
    pub fn width(&self, d: usize) -> Real {
        self.upper[d] - self.lower[d]
    }

    /// Length of the diagonal of the box.
    pub fn diagonal(&self) -> Real {
        self.lower
            .iter()
            .zip(self.upper.iter())
            .map(|(&lo, &hi)| (hi - lo) * (hi - lo))
            .sum::<Real>()
            .sqrt()
    }

    pub fn contains(&self, x: &[Real]) -> bool {
        x.len() == self.dimension()
            && x.iter()
                .zip(self.lower.iter().zip(self.upper.iter()))
                .all(|(&v, (&lo, &hi))| v >= lo && v <= hi)
    }
}

/// Projects a genome onto the bounds, coordinate by coordinate.
pub fn clamp(genome: &[Real], bounds: &Bounds) -> Result<Vec<Real>> {
    clamp_to(genome, bounds.lower(), bounds.upper())
}

/// A candidate solution: the decision vector plus its cached evaluation.
///
/// Exactly one of `fitness` (single-objective) or `objectives`
/// (multi-objective) is populated once the individual has been evaluated.
#[derive(Debug, Clone, PartialEq)]
pub struct Individual {
    pub genome: Vec<Real>,
    pub fitness: Option<Real>,
    pub objectives: Option<Vec<Real>>,
    /// Value of the evaluation counter when this individual was evaluated.
    pub eval_id: u64,
}

impl Individual {
    pub fn new(genome: Vec<Real>) -> Self {
        Self { genome, fitness: None, objectives: None, eval_id: 0 }
    }

    pub fn evaluated_single(genome: Vec<Real>, fitness: Real, eval_id: u64) -> Self {
        Self { genome, fitness: Some(fitness), objectives: None, eval_id }
    }

    pub fn evaluated_multi(genome: Vec<Real>, objectives: Vec<Real>, eval_id: u64) -> Self {
        Self { genome, fitness: None, objectives: Some(objectives), eval_id }
    }

    pub fn fitness(&self) -> Result<Real> {
        self.fitness
            .ok_or_else(|| Error::State("individual has no single-objective fitness".into()))
    }

    pub fn objectives(&self) -> Result<&[Real]> {
        self.objectives
            .as_deref()
            .ok_or_else(|| Error::State("individual has no objective vector".into()))
    }
}

/// Fixed-size ordered population.
#[derive(Debug, Clone)]
pub struct Population {
    pub members: Vec<Individual>,
    pub generation: u64,
}

impl Population {
    pub fn new(members: Vec<Individual>) -> Self {
        Self { members, generation: 0 }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Scalar fitness of every member, failing on any unevaluated one.
    pub fn fitnesses(&self) -> Result<Vec<Real>> {
        self.members.iter().map(|m| m.fitness()).collect()
    }

    pub fn genomes(&self) -> Vec<Vec<Real>> {
        self.members.iter().map(|m| m.genome.clone()).collect()
    }
}

/// Monotone counter of fitness/objective evaluations, shared by one run.
#[derive(Debug, Clone, Default)]
pub struct EvalCounter {
    count: u64,
}

impl EvalCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bump(&mut self) -> u64 {
        self.count += 1;
        self.count
    }

    pub fn count(&self) -> u64 {
        self.count
    }
}
