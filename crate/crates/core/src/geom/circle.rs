//! Rational points on circles about the origin.

use super::{QVector, Ratio};
use crate::error::{Error, Result};
use num_traits::Signed;

/// `n` distinct rational points on the circle of radius `r` about the
/// origin in R^2, all with both coordinates strictly positive.
///
/// Uses the parametrization `t -> r ((1-t^2)/(1+t^2), 2t/(1+t^2))` at
/// `t_k = k/(n+1)`, `k = 1..n`, so `norm_sq` equals `r^2` exactly for every
/// output. Positivity of both coordinates guarantees that the 2n points
/// obtained by closing under negation are pairwise distinct.
pub fn rational_circle_points(r: &Ratio, n: usize) -> Result<Vec<QVector>> {
    if !r.is_positive() {
        return Err(Error::InvalidParameter(format!(
            "circle radius must be positive, got {}",
            r
        )));
    }
    if n == 0 {
        return Err(Error::InvalidParameter(
            "need at least one circle point".into(),
        ));
    }
    let one = Ratio::from_integer(1.into());
    let mut points = Vec::with_capacity(n);
    for k in 1..=n {
        let t = Ratio::new((k as i64).into(), (n as i64 + 1).into());
        let t2 = &t * &t;
        let denom = &one + &t2;
        let x = r * (&one - &t2) / &denom;
        let y = r * (&t + &t) / &denom;
        points.push(QVector::new(vec![x, y]));
    }
    Ok(points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{int, ratio};
    use num_traits::Signed;
    use std::collections::HashSet;

    #[test]
    fn unit_circle_midpoint_parameter() {
        // t = 1/2 on the unit circle is the (3/5, 4/5) Pythagorean point
        let pts = rational_circle_points(&int(1), 1).unwrap();
        assert_eq!(pts[0], QVector::new(vec![ratio(3, 5), ratio(4, 5)]));
    }

    #[test]
    fn quarter_radius_scales_the_point() {
        let pts = rational_circle_points(&ratio(1, 4), 1).unwrap();
        assert_eq!(pts[0], QVector::new(vec![ratio(3, 20), ratio(1, 5)]));
    }

    #[test]
    fn all_outputs_lie_on_the_circle_exactly() {
        let r = ratio(3, 7);
        let rr = &r * &r;
        for p in rational_circle_points(&r, 17).unwrap() {
            assert_eq!(p.norm_sq(), rr);
            assert!(p.coord(0).is_positive() && p.coord(1).is_positive());
        }
    }

    #[test]
    fn negation_closure_has_2n_distinct_points() {
        let pts = rational_circle_points(&ratio(5, 3), 9).unwrap();
        let mut seen: HashSet<QVector> = HashSet::new();
        for p in &pts {
            seen.insert(p.clone());
            seen.insert(p.neg());
        }
        assert_eq!(seen.len(), 18);
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert!(rational_circle_points(&int(1), 0).is_err());
        assert!(rational_circle_points(&int(0), 3).is_err());
        assert!(rational_circle_points(&int(-2), 3).is_err());
    }
}
