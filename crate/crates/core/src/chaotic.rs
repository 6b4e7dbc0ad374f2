//! Logistic-map state and the chaotic variation operator.
//!
//! Each individual carries a per-dimension chaotic parameter `CP` in `(0,1)`
//! advanced by the logistic map, and a direction factor `D` in `{-1,+1}`.
//! A mutant is the target moved by the signed chaotic step (the default
//! `Offset` mode) or the target scaled by it (the `Literal` mode).

use crate::error::{Error, Result};
use crate::num::Scalar;
use crate::rng::RngStream;
use crate::types::{clamp, Bounds};
use crate::Real;
use rand::Rng;

/// Logistic-map values this close to a fixed point get nudged away.
const FIXED_POINT_TOL: f64 = 1e-12;
/// Size of the nudge; smallest perturbation that survives 64-bit rounding
/// over long orbits.
const FIXED_POINT_NUDGE: f64 = 1e-6;
/// Absorbing/fixed points of the logistic map at r = 4.
const FIXED_POINTS: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];

/// One step of the logistic map `z -> 4 z (1 - z)`, with re-perturbation away
/// from its absorbing points.
pub fn logistic_step<T: Scalar>(z: T) -> Result<T> {
    if !(z > T::zero() && z < T::one()) {
        return Err(Error::Domain(format!("logistic map input {z:?} outside (0,1)")));
    }
    let four = T::from_f64(4.0).unwrap();
    let mut next = four * z * (T::one() - z);
    let tol = T::from_f64(FIXED_POINT_TOL).unwrap();
    for fp in FIXED_POINTS {
        let fp = T::from_f64(fp).unwrap();
        if (next - fp).abs() <= tol {
            next = next + T::from_f64(FIXED_POINT_NUDGE).unwrap();
            if next >= T::one() {
                next = next - T::one();
            }
            break;
        }
    }
    Ok(next)
}

/// How [`chaotic_mutant`] turns the chaotic step into a move.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ChaoticMode {
    /// `m_d = t_d * (D_d * CP_d)`. Faithful multiplicative form; cannot move
    /// a zero coordinate and contracts toward the origin.
    Literal,
    /// `m_d = t_d + D_d * CP_d * width_fraction * (upper_d - lower_d)`.
    Offset { width_fraction: Real },
}

impl Default for ChaoticMode {
    fn default() -> Self {
        ChaoticMode::Offset { width_fraction: 0.5 }
    }
}

/// Per-individual chaotic parameters: one `CP` and direction per dimension.
#[derive(Debug, Clone)]
pub struct ChaoticState {
    cp: Vec<Real>,
    direction: Vec<Real>,
}

impl ChaoticState {
    /// Draws initial `CP` uniformly from `(0.01, 0.99)` (re-drawing anything
    /// near a fixed point) and directions uniformly from `{-1,+1}`.
    pub fn init(dimension: usize, rng: &mut RngStream) -> Self {
        let mut cp = Vec::with_capacity(dimension);
        while cp.len() < dimension {
            let z: Real = rng.gen_range(0.01..0.99);
            if FIXED_POINTS.iter().any(|fp| (z - fp).abs() <= FIXED_POINT_TOL) {
                continue;
            }
            cp.push(z);
        }
        let direction = (0..dimension).map(|_| draw_direction(rng)).collect();
        Self { cp, direction }
    }

    pub fn dimension(&self) -> usize {
        self.cp.len()
    }

    pub fn cp(&self) -> &[Real] {
        &self.cp
    }

    pub fn direction(&self) -> &[Real] {
        &self.direction
    }
}

fn draw_direction(rng: &mut RngStream) -> Real {
    if rng.gen::<bool>() {
        1.0
    } else {
        -1.0
    }
}

/// Produces a clamped mutant of `target`, then advances the chaotic state:
/// every `CP_d` steps through the logistic map and every `D_d` is redrawn.
pub fn chaotic_mutant(
    target: &[Real],
    state: &mut ChaoticState,
    bounds: &Bounds,
    mode: ChaoticMode,
    rng: &mut RngStream,
) -> Result<Vec<Real>> {
    if target.len() != state.dimension() {
        return Err(Error::DimensionMismatch { expected: state.dimension(), got: target.len() });
    }
    let raw: Vec<Real> = match mode {
        ChaoticMode::Literal => target
            .iter()
            .zip(state.cp.iter().zip(state.direction.iter()))
            .map(|(&t, (&cp, &d))| t * (d * cp))
            .collect(),
        ChaoticMode::Offset { width_fraction } => target
            .iter()
            .enumerate()
            .zip(state.cp.iter().zip(state.direction.iter()))
            .map(|((dim, &t), (&cp, &d))| t + d * cp * width_fraction * bounds.width(dim))
            .collect(),
    };
    let mutant = clamp(&raw, bounds)?;
    for cp in state.cp.iter_mut() {
        *cp = logistic_step(*cp)?;
    }
    for d in state.direction.iter_mut() {
        *d = draw_direction(rng);
    }
    Ok(mutant)
}

/// One chaotic value per population member, advanced each generation and used
/// to pair members with competitors.
#[derive(Debug, Clone)]
pub struct ChaoticMatrix {
    values: Vec<Real>,
}

impl ChaoticMatrix {
    pub fn init(size: usize, rng: &mut RngStream) -> Self {
        let mut values = Vec::with_capacity(size);
        while values.len() < size {
            let z: Real = rng.gen_range(0.01..0.99);
            if FIXED_POINTS.iter().any(|fp| (z - fp).abs() <= FIXED_POINT_TOL) {
                continue;
            }
            values.push(z);
        }
        Self { values }
    }

    pub fn values(&self) -> &[Real] {
        &self.values
    }

    /// Advances every entry by one logistic step.
    pub fn step(&mut self) -> Result<()> {
        for v in self.values.iter_mut() {
            *v = logistic_step(*v)?;
        }
        Ok(())
    }

    /// Competitor index for each member `i`: `floor(value_i * N)`, with
    /// self-pairing resolved to `(i + 1) mod N`.
    pub fn competitor_indices(&self) -> Vec<usize> {
        let n = self.values.len();
        self.values
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let mut c = (v * n as Real).floor() as usize;
                if c >= n {
                    c = n - 1;
                }
                if c == i {
                    c = (i + 1) % n;
                }
                c
            })
            .collect()
    }
}
