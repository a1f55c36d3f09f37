//! Exact rational scalar and vector arithmetic plus hyperplane primitives.
//!
//! Everything downstream decides acuteness through these operations, so all
//! of them are sign-exact: no floating point appears in any decision path.

mod circle;
mod hyperplane;
mod ratio;

pub use circle::rational_circle_points;
pub use hyperplane::{Hyperplane, Side};
pub use ratio::{ceil_log2, int, inv_pow2, ratio, round_dyadic, sqrt_ceil, Ratio};

use num_traits::Zero;
use std::fmt;

/// A point or direction in R^d with exact rational coordinates.
///
/// The length is fixed at creation; arithmetic between vectors of unequal
/// length is a usage error and panics rather than truncating.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QVector {
    coords: Vec<Ratio>,
}

impl QVector {
    pub fn new(coords: Vec<Ratio>) -> Self {
        QVector { coords }
    }

    /// Vector with integer coordinates.
    pub fn from_ints(coords: &[i64]) -> Self {
        QVector::new(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        QVector::new(vec![Ratio::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Ratio] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Ratio {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    fn check_dim(&self, other: &Self) {
        assert_eq!(
            self.dim(),
            other.dim(),
            "QVector dimension mismatch: {} vs {}",
            self.dim(),
            other.dim()
        );
    }

    /// Exact scalar product. Panics on dimension mismatch.
    pub fn dot(&self, other: &Self) -> Ratio {
        self.check_dim(other);
        let mut acc = Ratio::zero();
        for (a, b) in self.coords.iter().zip(&other.coords) {
            acc += a * b;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_dim(other);
        QVector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_dim(other);
        QVector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, c: &Ratio) -> Self {
        QVector::new(self.coords.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> Self {
        QVector::new(self.coords.iter().map(|a| -a).collect())
    }

    /// `dot(self, self)`; nonnegative, zero iff the vector is zero.
    pub fn norm_sq(&self) -> Ratio {
        let mut acc = Ratio::zero();
        for a in &self.coords {
            acc += a * a;
        }
        acc
    }

    /// Copy of `self` with `extra` appended as a new last coordinate.
    pub fn extended(&self, extra: Ratio) -> Self {
        let mut coords = self.coords.clone();
        coords.push(extra);
        QVector::new(coords)
    }
}

impl fmt::Display for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn qv(coords: &[(i64, i64)]) -> QVector {
        QVector::new(coords.iter().map(|&(n, d)| ratio(n, d)).collect())
    }

    #[test]
    fn dot_examples() {
        assert_eq!(
            QVector::from_ints(&[1, 0]).dot(&QVector::from_ints(&[0, 1])),
            int(0)
        );
        assert_eq!(
            QVector::from_ints(&[2, 0]).dot(&QVector::from_ints(&[1, 2])),
            int(2)
        );
        let v = qv(&[(1, 2), (1, 3)]);
        assert_eq!(v.dot(&v), ratio(13, 36));
    }

    #[test]
    fn sub_scale_norm_examples() {
        let a = QVector::from_ints(&[1, 1]);
        assert_eq!(a.sub(&a), QVector::from_ints(&[0, 0]));
        assert_eq!(qv(&[(3, 5), (4, 5)]).norm_sq(), int(1));
        assert_eq!(
            QVector::from_ints(&[1, 2]).scale(&ratio(1, 2)),
            qv(&[(1, 2), (1, 1)])
        );
    }

    #[test]
    #[should_panic(expected = "dimension mismatch")]
    fn dot_rejects_unequal_lengths() {
        QVector::from_ints(&[1, 2]).dot(&QVector::from_ints(&[1, 2, 3]));
    }

    fn small_vec(dim: usize) -> impl Strategy<Value = QVector> {
        proptest::collection::vec((-50i64..50, 1i64..20), dim)
            .prop_map(|cs| QVector::new(cs.into_iter().map(|(n, d)| ratio(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn dot_is_symmetric_and_bilinear(a in small_vec(4), b in small_vec(4), c in small_vec(4)) {
            prop_assert_eq!(a.dot(&b), b.dot(&a));
            prop_assert_eq!(a.add(&b).dot(&c), a.dot(&c) + b.dot(&c));
        }

        #[test]
        fn norm_sq_positive_definite(a in small_vec(5)) {
            let n = a.norm_sq();
            prop_assert!(n >= int(0));
            prop_assert_eq!(n == int(0), a.is_zero());
        }
    }
}
