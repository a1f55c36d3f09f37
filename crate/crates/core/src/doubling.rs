//! Dimension-doubling construction: lift a d-dimensional acute set to a
//! (d+2)-dimensional acute set of twice the size by appending `+phi(x)` to
//! one copy of each point and `-phi(x)` to the other, where the `phi(x)`
//! are distinct points on a circle of radius r with `4 r^2 < s`.
//!
//! For triples with distinct bases the lifted vertex scalar product is at
//! least `s - 4 r^2 > 0`; for the two lifts of one base point it equals
//! `2 (r^2 +- <phi(x), phi(z)>) > 0`. The output is re-verified exactly
//! anyway; the construction never gets the benefit of the doubt.

use crate::error::{Error, Result};
use crate::geom::{int, inv_pow2, rational_circle_points, QVector, Ratio};
use crate::simplify::simplify_points;
use crate::verify::{is_acute_quick, upper_bound_check, verify_acute};
use num_traits::Signed;

/// The circle radius and per-point circle assignment used by one lift.
#[derive(Debug, Clone)]
pub struct LiftAssignment {
    pub radius: Ratio,
    pub phi: Vec<QVector>,
}

/// Largest radius of the form `1/2^k`, `k >= 1`, with `4 r^2 < s`.
pub fn choose_radius(s: &Ratio) -> Result<Ratio> {
    if !s.is_positive() {
        return Err(Error::InvalidParameter(format!(
            "radius rule needs s > 0, got {}",
            s
        )));
    }
    let four = int(4);
    for k in 1..=4096 {
        let r = inv_pow2(k);
        if &four * &r * &r < *s {
            return Ok(r);
        }
    }
    Err(Error::InvalidParameter(
        "no dyadic radius found; s is implausibly small".into(),
    ))
}

/// Lift an acute set from R^d to R^{d+2} at exactly twice the size.
pub fn double(points: &[QVector]) -> Result<Vec<QVector>> {
    Ok(double_with_assignment(points)?.0)
}

/// Same as [`double`], also returning the radius and circle points used,
/// so callers can check the quantitative case bounds.
pub fn double_with_assignment(points: &[QVector]) -> Result<(Vec<QVector>, LiftAssignment)> {
    let report = verify_acute(points)?;
    if !report.is_acute {
        return Err(Error::NotAcute {
            violations: report.violations.len(),
        });
    }
    let radius = match &report.s_value {
        Some(s) => choose_radius(s)?,
        // a single point imposes no constraint on r
        None => inv_pow2(1),
    };
    let phi = rational_circle_points(&radius, points.len())?;

    let mut lifted = Vec::with_capacity(2 * points.len());
    for (p, f) in points.iter().zip(&phi) {
        lifted.push(p.extended(f.coord(0).clone()).extended(f.coord(1).clone()));
    }
    for (p, f) in points.iter().zip(&phi) {
        lifted.push(p.extended(-f.coord(0)).extended(-f.coord(1)));
    }

    if !is_acute_quick(&lifted) {
        return Err(Error::NotAcute { violations: 1 });
    }
    if !upper_bound_check(&lifted) {
        return Err(Error::UpperBoundViolated {
            dim: points[0].dim() + 2,
            size: lifted.len(),
        });
    }
    Ok((lifted, LiftAssignment { radius, phi }))
}

/// Iterated doubling from a one- or two-dimensional base:
/// `{0, 1}` on the line for odd d, the acute triangle (0,0),(2,0),(1,2)
/// for even d (no exactly equilateral rational triangle exists). Sizes are
/// `2^{(d+1)/2}` and `3 * 2^{(d-2)/2}` respectively, both at least
/// `2^{d/2}`. Coordinates are re-simplified between lifts to keep
/// denominators bounded.
pub fn power_construct(d: usize) -> Result<Vec<QVector>> {
    if d == 0 {
        return Err(Error::InvalidParameter(
            "dimension must be at least 1".into(),
        ));
    }
    let mut points = if d % 2 == 1 {
        vec![QVector::from_ints(&[0]), QVector::from_ints(&[1])]
    } else {
        vec![
            QVector::from_ints(&[0, 0]),
            QVector::from_ints(&[2, 0]),
            QVector::from_ints(&[1, 2]),
        ]
    };
    while points[0].dim() < d {
        points = double(&points)?;
        let report = verify_acute(&points)?;
        points = simplify_points(&points, &report);
    }
    if !upper_bound_check(&points) {
        return Err(Error::UpperBoundViolated {
            dim: d,
            size: points.len(),
        });
    }
    Ok(points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::ratio;

    #[test]
    fn radius_rule_examples() {
        assert_eq!(choose_radius(&int(1)).unwrap(), ratio(1, 4));
        assert_eq!(choose_radius(&int(100)).unwrap(), ratio(1, 2));
        assert_eq!(choose_radius(&ratio(1, 50)).unwrap(), ratio(1, 16));
        assert!(choose_radius(&int(0)).is_err());
        assert!(choose_radius(&int(-1)).is_err());
    }

    #[test]
    fn doubling_the_segment_gives_four_acute_points_in_r3() {
        let base = vec![QVector::from_ints(&[0]), QVector::from_ints(&[1])];
        let (lifted, lift) = double_with_assignment(&base).unwrap();
        assert_eq!(lifted.len(), 4);
        assert_eq!(lifted[0].dim(), 3);
        // s = 1 so the radius rule gives 1/4
        assert_eq!(lift.radius, ratio(1, 4));
        let report = verify_acute(&lifted).unwrap();
        assert!(report.is_acute);
        // base coordinates pass through unchanged
        for (i, p) in base.iter().enumerate() {
            assert_eq!(lifted[i].coord(0), p.coord(0));
            assert_eq!(lifted[i + 2].coord(0), p.coord(0));
        }
    }

    #[test]
    fn doubling_a_single_point_is_vacuously_acute() {
        let lifted = double(&[QVector::from_ints(&[3])]).unwrap();
        assert_eq!(lifted.len(), 2);
        assert_eq!(lifted[0].dim(), 3);
        assert_ne!(lifted[0], lifted[1]);
    }

    #[test]
    fn doubling_rejects_non_acute_input() {
        let square = vec![
            QVector::from_ints(&[0, 0]),
            QVector::from_ints(&[1, 0]),
            QVector::from_ints(&[0, 1]),
            QVector::from_ints(&[1, 1]),
        ];
        assert!(matches!(double(&square), Err(Error::NotAcute { .. })));
    }

    #[test]
    fn power_construct_small_dimensions() {
        assert_eq!(power_construct(1).unwrap().len(), 2);
        assert_eq!(power_construct(2).unwrap().len(), 3);
        assert_eq!(power_construct(3).unwrap().len(), 4);
        assert_eq!(power_construct(5).unwrap().len(), 8);
        let d6 = power_construct(6).unwrap();
        assert_eq!(d6.len(), 12);
        assert!(verify_acute(&d6).unwrap().is_acute);
    }

    #[test]
    fn iterated_doubling_multiplies_size_exactly() {
        let mut points = vec![
            QVector::from_ints(&[0, 0]),
            QVector::from_ints(&[2, 0]),
            QVector::from_ints(&[1, 2]),
        ];
        for _ in 0..2 {
            let next = double(&points).unwrap();
            assert_eq!(next.len(), 2 * points.len());
            points = next;
        }
        assert_eq!(points.len(), 12);
    }
}
