//! Comparison constructions on the Boolean cube.
//!
//! Random cube vertices admit no obtuse angles, only right ones (an exact
//! zero scalar product), so deleting one point per right-angle triple
//! leaves an acute set. This is the classical probabilistic lower-bound
//! construction; `exhaustive_max_cube_subset` is its tiny-dimension exact
//! counterpart, scanning every vertex subset.

use crate::error::{Error, Result};
use crate::geom::{int, QVector};
use crate::sampling::seeded_rng;
use crate::verify::{upper_bound_check, verify_acute};
use rand::Rng;
use std::collections::HashSet;

#[derive(Debug, Clone)]
pub struct EfRunConfig {
    pub dim: usize,
    pub seed: u64,
    /// Vertices to sample; `None` means `ceil((2/sqrt(3))^d)`, at least 3.
    pub sample_size: Option<usize>,
    /// Bound on rejection re-draws while sampling distinct vertices.
    pub max_attempts: u32,
}

impl EfRunConfig {
    pub fn new(dim: usize, seed: u64) -> Self {
        EfRunConfig {
            dim,
            seed,
            sample_size: None,
            max_attempts: 100_000,
        }
    }

    /// The expectation-based size target `0.5 (2/sqrt(3))^d`. Floating
    /// point, for reporting and sample sizing only; never used in any
    /// exactness decision.
    pub fn expected_bound(dim: usize) -> f64 {
        0.5 * (2.0 / 3.0f64.sqrt()).powi(dim as i32)
    }

    fn effective_sample_size(&self) -> usize {
        self.sample_size
            .unwrap_or_else(|| ((2.0 * Self::expected_bound(self.dim)).ceil() as usize).max(3))
    }
}

#[derive(Debug, Clone)]
pub struct EfOutcome {
    pub points: Vec<QVector>,
    pub sampled: usize,
    pub deletions: u32,
}

fn cube_vertex(mask: u64, dim: usize) -> QVector {
    QVector::new((0..dim).map(|i| int(((mask >> i) & 1) as i64)).collect())
}

/// Right angle at apex z among cube vertices x, y iff no coordinate has
/// x_i = y_i != z_i; the per-coordinate products are never negative.
fn cube_apex_dot(x: u64, y: u64, z: u64) -> u32 {
    ((x ^ z) & (y ^ z)).count_ones()
}

fn first_right_triple(masks: &[u64]) -> Option<(usize, usize, usize)> {
    let n = masks.len();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let right = cube_apex_dot(masks[j], masks[k], masks[i]) == 0
                    || cube_apex_dot(masks[i], masks[k], masks[j]) == 0
                    || cube_apex_dot(masks[i], masks[j], masks[k]) == 0;
                if right {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// Sample distinct cube vertices, then delete the lowest-index point of
/// each right-angle triple (rescanning after every deletion) until the
/// set is acute. The survivors always pass the exact verifier; that is
/// asserted, not assumed.
pub fn ef_random(cfg: &EfRunConfig) -> Result<EfOutcome> {
    if cfg.dim < 2 {
        return Err(Error::InvalidParameter(
            "the cube construction needs dimension at least 2".into(),
        ));
    }
    if cfg.dim > 60 {
        return Err(Error::InvalidParameter(
            "cube vertices are represented as 64-bit masks; dimension is capped at 60".into(),
        ));
    }
    let n = cfg.effective_sample_size();
    if n < 3 {
        return Err(Error::InvalidParameter(
            "sample size must be at least 3".into(),
        ));
    }
    if (cfg.dim as u32) < usize::BITS && n > (1usize << cfg.dim) {
        return Err(Error::InvalidParameter(format!(
            "cannot sample {} distinct vertices from a {}-cube",
            n, cfg.dim
        )));
    }

    let mut rng = seeded_rng(cfg.seed);
    let mut seen = HashSet::new();
    let mut masks: Vec<u64> = Vec::with_capacity(n);
    let mut attempts = 0u32;
    while masks.len() < n {
        attempts += 1;
        if attempts > cfg.max_attempts {
            return Err(Error::InvalidParameter(
                "exceeded max_attempts while sampling distinct vertices".into(),
            ));
        }
        let v = rng.gen_range(0..(1u64 << cfg.dim));
        if seen.insert(v) {
            masks.push(v);
        }
    }

    let mut deletions = 0u32;
    while let Some((i, _, _)) = first_right_triple(&masks) {
        masks.remove(i);
        deletions += 1;
    }

    let points: Vec<QVector> = masks.iter().map(|&m| cube_vertex(m, cfg.dim)).collect();
    if !points.is_empty() {
        let report = verify_acute(&points)?;
        if !report.is_acute {
            return Err(Error::NotAcute {
                violations: report.violations.len(),
            });
        }
        if !upper_bound_check(&points) {
            return Err(Error::UpperBoundViolated {
                dim: cfg.dim,
                size: points.len(),
            });
        }
    }
    Ok(EfOutcome {
        points,
        sampled: n,
        deletions,
    })
}

/// Exact maximum size of an acute subset of the d-cube's vertices, with a
/// witness, by scanning all 2^(2^d) subsets. Feasible only for d <= 4.
pub fn exhaustive_max_cube_subset(dim: usize) -> Result<(usize, Vec<QVector>)> {
    if dim == 0 || dim > 4 {
        return Err(Error::DimensionTooLarge(dim));
    }
    let vertex_count = 1usize << dim;
    let masks: Vec<u64> = (0..vertex_count as u64).collect();

    // subsets are invalid iff they contain a triple with a right angle
    let mut bad_triples: Vec<u32> = Vec::new();
    for i in 0..vertex_count {
        for j in (i + 1)..vertex_count {
            for k in (j + 1)..vertex_count {
                let right = cube_apex_dot(masks[j], masks[k], masks[i]) == 0
                    || cube_apex_dot(masks[i], masks[k], masks[j]) == 0
                    || cube_apex_dot(masks[i], masks[j], masks[k]) == 0;
                if right {
                    bad_triples.push((1 << i) | (1 << j) | (1 << k));
                }
            }
        }
    }

    let mut best: u32 = 0;
    let mut witness: u32 = 0;
    for subset in 0u32..(1u32 << vertex_count) {
        if subset.count_ones() <= best {
            continue;
        }
        if bad_triples.iter().all(|&t| t & subset != t) {
            best = subset.count_ones();
            witness = subset;
        }
    }

    let points: Vec<QVector> = (0..vertex_count)
        .filter(|i| witness & (1 << i) != 0)
        .map(|i| cube_vertex(i as u64, dim))
        .collect();
    let report = verify_acute(&points)?;
    debug_assert!(report.is_acute);
    Ok((best as usize, points))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_admits_only_two_point_acute_subsets() {
        let (size, witness) = exhaustive_max_cube_subset(2).unwrap();
        assert_eq!(size, 2);
        assert_eq!(witness.len(), 2);
    }

    #[test]
    fn cube_scan_respects_the_size_ceiling() {
        let (size, witness) = exhaustive_max_cube_subset(3).unwrap();
        assert!(size <= 7);
        assert!(size >= 4, "the regular tetrahedron in the cube is acute");
        assert!(verify_acute(&witness).unwrap().is_acute);
    }

    #[test]
    fn ef_random_is_reproducible_and_verified() {
        let cfg = EfRunConfig::new(10, 7);
        let a = ef_random(&cfg).unwrap();
        let b = ef_random(&cfg).unwrap();
        assert_eq!(a.points, b.points);
        if !a.points.is_empty() {
            assert!(verify_acute(&a.points).unwrap().is_acute);
        }
    }

    #[test]
    fn ef_random_in_the_plane_never_beats_three_points() {
        for seed in 0..10 {
            let mut cfg = EfRunConfig::new(2, seed);
            cfg.sample_size = Some(4);
            let out = ef_random(&cfg).unwrap();
            assert!(out.points.len() <= 3);
        }
    }

    #[test]
    fn scan_dominates_the_random_construction_on_the_cube() {
        let (best, _) = exhaustive_max_cube_subset(4).unwrap();
        for seed in 0..5 {
            let out = ef_random(&EfRunConfig::new(4, seed)).unwrap();
            assert!(out.points.len() <= best);
        }
    }

    #[test]
    fn invalid_dimensions_rejected() {
        assert!(ef_random(&EfRunConfig::new(1, 0)).is_err());
        assert!(exhaustive_max_cube_subset(5).is_err());
        assert!(exhaustive_max_cube_subset(0).is_err());
    }
}
