//! Deterministic crowding: the classical fitter-survives rule and the
//! radius-improved variant.
//!
//! The improved rule splits the single radius of the source method into a
//! decision-space threshold `r_dist` and a fitness-gain threshold `r_fit`
//! (comparing a distance against a fitness difference is dimensionally
//! incoherent; both default to the same value).

use crate::error::{Error, Result};
use crate::num::euclidean_distance;
use crate::types::{Individual, Population};
use crate::Real;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DcConfig {
    /// Decision-space distance threshold.
    pub r_dist: Real,
    /// Fitness gain an offspring must exceed to replace a parent within
    /// `r_dist`.
    pub r_fit: Real,
}

impl DcConfig {
    pub fn new(r_dist: Real, r_fit: Real) -> Result<Self> {
        if !(r_dist >= 0.0 && r_dist.is_finite() && r_fit >= 0.0 && r_fit.is_finite()) {
            return Err(Error::Config(format!(
                "deterministic-crowding thresholds must be finite and non-negative, got r_dist={r_dist}, r_fit={r_fit}"
            )));
        }
        Ok(Self { r_dist, r_fit })
    }

    /// Both thresholds set to the same radius.
    pub fn symmetric(r: Real) -> Result<Self> {
        Self::new(r, r)
    }
}

/// Improved deterministic-crowding selection between one parent and its
/// offspring. Far pairs (`d > r_dist`) keep the fitter individual; close
/// pairs keep the offspring only when its fitness gain exceeds `r_fit`.
/// Ties go to the parent.
pub fn dc_select<'a>(
    parent: &'a Individual,
    offspring: &'a Individual,
    cfg: &DcConfig,
) -> Result<&'a Individual> {
    let fp = parent.fitness()?;
    let fo = offspring.fitness()?;
    let d = euclidean_distance(&parent.genome, &offspring.genome)?;
    if d > cfg.r_dist {
        Ok(if fo > fp { offspring } else { parent })
    } else {
        Ok(if fo - fp > cfg.r_fit { offspring } else { parent })
    }
}

/// Original deterministic crowding: the fitter of the pair survives, ties go
/// to the parent.
pub fn dc_select_original<'a>(
    parent: &'a Individual,
    offspring: &'a Individual,
) -> Result<&'a Individual> {
    let fp = parent.fitness()?;
    let fo = offspring.fitness()?;
    Ok(if fo > fp { offspring } else { parent })
}

/// Applies [`dc_select`] slot by slot: `offspring[i]` competes against
/// `parents[i]`.
pub fn dc_generation(
    parents: &Population,
    offspring: &[Individual],
    cfg: &DcConfig,
) -> Result<Population> {
    if parents.len() != offspring.len() {
        return Err(Error::Pairing(format!(
            "offspring count {} does not match population size {}",
            offspring.len(),
            parents.len()
        )));
    }
    let members = parents
        .members
        .iter()
        .zip(offspring.iter())
        .map(|(p, o)| dc_select(p, o, cfg).map(Clone::clone))
        .collect::<Result<Vec<_>>>()?;
    Ok(Population { members, generation: parents.generation + 1 })
}

/// Index-pairing alternative: each offspring competes against the nearest
/// not-yet-taken parent (classical crowding style). Greedy over offspring in
/// index order; distance ties go to the lowest parent index.
pub fn dc_generation_nearest(
    parents: &Population,
    offspring: &[Individual],
    cfg: &DcConfig,
) -> Result<Population> {
    if parents.len() != offspring.len() {
        return Err(Error::Pairing(format!(
            "offspring count {} does not match population size {}",
            offspring.len(),
            parents.len()
        )));
    }
    let n = parents.len();
    let mut taken = vec![false; n];
    let mut members: Vec<Option<Individual>> = vec![None; n];
    for o in offspring.iter() {
        let mut best: Option<(usize, Real)> = None;
        for (j, p) in parents.members.iter().enumerate() {
            if taken[j] {
                continue;
            }
            let d = euclidean_distance(&p.genome, &o.genome)?;
            if best.map_or(true, |(_, bd)| d < bd) {
                best = Some((j, d));
            }
        }
        let (j, _) = best.expect("sizes match, a free parent always exists");
        taken[j] = true;
        members[j] = Some(dc_select(&parents.members[j], o, cfg)?.clone());
    }
    Ok(Population {
        members: members.into_iter().map(|m| m.expect("every slot filled")).collect(),
        generation: parents.generation + 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ind(x: Real, f: Real) -> Individual {
        Individual::evaluated_single(vec![x], f, 0)
    }

    #[test]
    fn far_pair_keeps_fitter() {
        let cfg = DcConfig::symmetric(0.01).unwrap();
        let p = ind(0.0, 1.0);
        let o = ind(0.5, 2.0);
        assert_eq!(dc_select(&p, &o, &cfg).unwrap(), &o);
    }

    #[test]
    fn close_pair_needs_gain_above_threshold() {
        let cfg = DcConfig::symmetric(0.01).unwrap();
        let p = ind(0.0, 1.0);
        let o = ind(0.005, 1.005);
        // gain 0.005 <= r_fit 0.01: parent survives
        assert_eq!(dc_select(&p, &o, &cfg).unwrap(), &p);
        let o2 = ind(0.005, 1.02);
        assert_eq!(dc_select(&p, &o2, &cfg).unwrap(), &o2);
    }

    #[test]
    fn identical_pair_keeps_parent() {
        let cfg = DcConfig::symmetric(0.01).unwrap();
        let p = ind(0.3, 1.0);
        let o = ind(0.3, 1.0);
        let survivor = dc_select(&p, &o, &cfg).unwrap();
        assert!(std::ptr::eq(survivor, &p));
    }

    #[test]
    fn original_rule() {
        assert_eq!(dc_select_original(&ind(0.0, 1.0), &ind(1.0, 2.0)).unwrap().fitness, Some(2.0));
        assert_eq!(dc_select_original(&ind(0.0, 2.0), &ind(1.0, 1.0)).unwrap().fitness, Some(2.0));
        let p = ind(0.0, 1.5);
        let survivor = dc_select_original(&p, &ind(1.0, 1.5)).unwrap();
        assert!(std::ptr::eq(survivor, &p));
    }

    #[test]
    fn generation_replaces_and_preserves() {
        let cfg = DcConfig::symmetric(0.01).unwrap();
        let parents = Population::new(vec![ind(0.0, 1.0), ind(1.0, 2.0)]);
        // All offspring worse and far: unchanged.
        let off = vec![ind(0.5, 0.5), ind(0.4, 0.5)];
        let next = dc_generation(&parents, &off, &cfg).unwrap();
        assert_eq!(next.members, parents.members);
        assert_eq!(next.generation, 1);
        // All offspring better and far: fully replaced.
        let off = vec![ind(0.5, 5.0), ind(0.4, 5.0)];
        let next = dc_generation(&parents, &off, &cfg).unwrap();
        assert_eq!(next.members, off);
    }

    #[test]
    fn generation_size_mismatch_is_pairing_error() {
        let cfg = DcConfig::symmetric(0.01).unwrap();
        let parents = Population::new(vec![ind(0.0, 1.0)]);
        let err = dc_generation(&parents, &[], &cfg).unwrap_err();
        assert!(matches!(err, Error::Pairing(_)));
    }

    #[test]
    fn nearest_pairing_matches_by_distance() {
        let cfg = DcConfig::symmetric(1e-6).unwrap();
        let parents = Population::new(vec![ind(0.0, 1.0), ind(10.0, 1.0)]);
        // offspring[0] is nearest parent 1, offspring[1] nearest parent 0
        let off = vec![ind(9.0, 2.0), ind(1.0, 2.0)];
        let next = dc_generation_nearest(&parents, &off, &cfg).unwrap();
        assert_eq!(next.members[0].genome, vec![1.0]);
        assert_eq!(next.members[1].genome, vec![9.0]);
    }

    #[test]
    fn unevaluated_is_state_error() {
        let cfg = DcConfig::symmetric(0.01).unwrap();
        let p = Individual::new(vec![0.0]);
        let o = ind(0.0, 1.0);
        assert!(matches!(dc_select(&p, &o, &cfg), Err(Error::State(_))));
    }
}
