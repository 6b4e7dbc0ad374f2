//! Scalar abstraction and the small vector-math kernel used everywhere else.
//!
//! The kernel functions are generic over [`Scalar`] (any IEEE float); the
//! domain layers of the crate instantiate them at [`crate::Real`] (`f64`).

use crate::error::{Error, Result};
use num_traits::Float;

/// Floating-point scalar: `f32` or `f64`.
pub trait Scalar: Float + num_traits::FromPrimitive + std::fmt::Debug + Send + Sync + 'static {}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Euclidean (L2) distance between two equal-length vectors.
pub fn euclidean_distance<T: Scalar>(a: &[T], b: &[T]) -> Result<T> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch { expected: a.len(), got: b.len() });
    }
    let mut acc = T::zero();
    for (&x, &y) in a.iter().zip(b.iter()) {
        let d = x - y;
        acc = acc + d * d;
    }
    Ok(acc.sqrt())
}

/// Projects each coordinate of `x` onto `[lower[d], upper[d]]`.
pub fn clamp_to<T: Scalar>(x: &[T], lower: &[T], upper: &[T]) -> Result<Vec<T>> {
    if x.len() != lower.len() || lower.len() != upper.len() {
        return Err(Error::DimensionMismatch { expected: lower.len(), got: x.len() });
    }
    Ok(x.iter()
        .zip(lower.iter().zip(upper.iter()))
        .map(|(&v, (&lo, &hi))| if v < lo { lo } else if v > hi { hi } else { v })
        .collect())
}

/// Pareto dominance under minimization: `a` dominates `b` iff `a` is no worse
/// in every objective and strictly better in at least one.
pub fn dominates<T: Scalar>(a: &[T], b: &[T]) -> bool {
    debug_assert_eq!(a.len(), b.len());
    let mut strictly_better = false;
    for (&x, &y) in a.iter().zip(b.iter()) {
        if x > y {
            return false;
        }
        if x < y {
            strictly_better = true;
        }
    }
    strictly_better
}

/// Dense pairwise distance matrix (row-major, symmetric, zero diagonal).
pub fn distance_matrix<T: Scalar>(points: &[Vec<T>]) -> Result<Vec<Vec<T>>> {
    let n = points.len();
    let mut m = vec![vec![T::zero(); n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let d = euclidean_distance(&points[i], &points[j])?;
            m[i][j] = d;
            m[j][i] = d;
        }
    }
    Ok(m)
}
