//! Bounded-denominator simplification.
//!
//! Iterated lifting compounds coordinate denominators; this pass rounds
//! every coordinate to a dyadic rational `p / 2^k` and accepts the rounded
//! set only if an exact re-verification still passes. Acuteness is an open
//! condition, so a fine enough grid always works; the schedule below tries
//! coarse grids first to keep the numbers small.

use crate::geom::{ceil_log2, int, round_dyadic, sqrt_ceil, QVector, Ratio};
use crate::verify::{is_acute_quick, VerificationReport};
use num_traits::Signed;

/// Denominator exponents to try, coarsest first. `floor` is a grid already
/// known to leave every point within the set's robustness radius.
pub(crate) fn grid_schedule(start: u32, floor: u32) -> Vec<u32> {
    let mut ks: Vec<u32> = (0..6).map(|i| start + 8 * i).filter(|k| *k < floor).collect();
    ks.push(floor);
    ks
}

/// A grid exponent fine enough that rounding provably cannot flip any
/// strict sign: every point moves less than eps = m / (8 D).
pub(crate) fn safe_grid_exponent(points: &[QVector], report: &VerificationReport) -> u32 {
    let dim = points[0].dim();
    let m = match (&report.min_vertex_dot, &report.s_value) {
        (Some(m), _) => m.clone(),
        (None, Some(s)) => s.clone(),
        _ => return 8,
    };
    // crude rational diameter bound from the coordinate box
    let max_abs = points
        .iter()
        .flat_map(|p| p.coords())
        .map(Signed::abs)
        .max()
        .unwrap_or_else(|| int(1));
    let diam_sq = int(4 * dim as i64) * &max_abs * &max_abs;
    let d_ub = Ratio::from_integer(sqrt_ceil(&diam_sq)) + int(1);
    let eps = m / (&d_ub * int(8));
    // per-point move is at most sqrt(dim) 2^-(k+1)
    let need = Ratio::from_integer(sqrt_ceil(&int(dim as i64))) * int(2) / eps;
    ceil_log2(&need) + 2
}

pub(crate) fn round_point(p: &QVector, k: u32) -> QVector {
    QVector::new(p.coords().iter().map(|c| round_dyadic(c, k)).collect())
}

/// Dyadic rounding of a verified-acute point set. Returns the first rounded
/// candidate that passes exact re-verification, or a copy of the input when
/// even the provably-safe grid fails (it cannot, but the caller should not
/// have to trust that).
pub fn simplify_points(points: &[QVector], report: &VerificationReport) -> Vec<QVector> {
    if !report.is_acute || points.is_empty() {
        return points.to_vec();
    }
    let floor = safe_grid_exponent(points, report);
    for k in grid_schedule(8, floor) {
        let candidate: Vec<QVector> = points.iter().map(|p| round_point(p, k)).collect();
        if is_acute_quick(&candidate) {
            return candidate;
        }
    }
    points.to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::ratio;
    use crate::verify::verify_acute;

    #[test]
    fn simplification_shrinks_denominators_and_stays_acute() {
        // acute triangle with deliberately ugly coordinates
        let messy = vec![
            QVector::new(vec![ratio(1, 982451653), ratio(3, 998244353)]),
            QVector::new(vec![ratio(2_000_000_001, 1_000_000_007), ratio(5, 899999999)]),
            QVector::new(vec![ratio(999999999, 1_000_000_019), int(2)]),
        ];
        let report = verify_acute(&messy).unwrap();
        assert!(report.is_acute);
        let simple = simplify_points(&messy, &report);
        assert!(verify_acute(&simple).unwrap().is_acute);
        for p in &simple {
            for c in p.coords() {
                assert!(c.denom().bits() <= 64, "denominator still large: {}", c);
            }
        }
    }

    #[test]
    fn two_point_sets_survive_rounding() {
        let pts = vec![
            QVector::new(vec![ratio(1, 3)]),
            QVector::new(vec![ratio(2, 3)]),
        ];
        let report = verify_acute(&pts).unwrap();
        let simple = simplify_points(&pts, &report);
        assert_eq!(simple.len(), 2);
        assert_ne!(simple[0], simple[1]);
    }
}
