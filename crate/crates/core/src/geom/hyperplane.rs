//! Hyperplanes `{ x : <x, normal> = offset }` with exact membership, side,
//! and orthogonal projection.

use super::{QVector, Ratio};
use crate::error::{Error, Result};
use num_traits::Zero;

/// Which side of a hyperplane a point lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Below,
    On,
    Above,
}

impl Side {
    pub fn as_i8(self) -> i8 {
        match self {
            Side::Below => -1,
            Side::On => 0,
            Side::Above => 1,
        }
    }

    fn from_ratio(r: &Ratio) -> Side {
        if r.is_zero() {
            Side::On
        } else if r > &Ratio::zero() {
            Side::Above
        } else {
            Side::Below
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperplane {
    normal: QVector,
    offset: Ratio,
}

impl Hyperplane {
    pub fn new(normal: QVector, offset: Ratio) -> Result<Self> {
        if normal.is_zero() {
            return Err(Error::ZeroNormal);
        }
        Ok(Hyperplane { normal, offset })
    }

    pub fn dim(&self) -> usize {
        self.normal.dim()
    }

    pub fn normal(&self) -> &QVector {
        &self.normal
    }

    pub fn offset(&self) -> &Ratio {
        &self.offset
    }

    /// Exact sign of `<p, normal> - offset`.
    pub fn side_of(&self, p: &QVector) -> Side {
        Side::from_ratio(&(p.dot(&self.normal) - &self.offset))
    }

    pub fn contains(&self, p: &QVector) -> bool {
        self.side_of(p) == Side::On
    }

    /// Orthogonal projection of `p` onto the hyperplane:
    /// `p - ((<p,n> - offset) / <n,n>) n`. The result satisfies exact
    /// membership, and `result - p` is parallel to the normal.
    pub fn project(&self, p: &QVector) -> QVector {
        let deficit = p.dot(&self.normal) - &self.offset;
        let t = deficit / self.normal.norm_sq();
        p.sub(&self.normal.scale(&t))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{int, ratio};
    use proptest::prelude::*;

    fn plane(normal: &[i64], offset: i64) -> Hyperplane {
        Hyperplane::new(QVector::from_ints(normal), int(offset)).unwrap()
    }

    #[test]
    fn zero_normal_rejected() {
        assert_eq!(
            Hyperplane::new(QVector::from_ints(&[0, 0]), int(1)),
            Err(Error::ZeroNormal)
        );
    }

    #[test]
    fn projection_examples() {
        // p already on H stays fixed
        let h = plane(&[0, 0, 1], 0);
        let p = QVector::from_ints(&[2, 5, 0]);
        assert_eq!(h.project(&p), p);
        // axis projection
        assert_eq!(
            h.project(&QVector::from_ints(&[0, 0, 1])),
            QVector::from_ints(&[0, 0, 0])
        );
        // x1 + x2 = 1
        let g = plane(&[1, 1], 1);
        assert_eq!(
            g.project(&QVector::from_ints(&[1, 1])),
            QVector::new(vec![ratio(1, 2), ratio(1, 2)])
        );
    }

    #[test]
    fn side_examples() {
        let h = plane(&[1], 1);
        assert_eq!(h.side_of(&QVector::from_ints(&[1])), Side::On);
        assert_eq!(h.side_of(&QVector::from_ints(&[2])), Side::Above);
        assert_eq!(h.side_of(&QVector::from_ints(&[0])), Side::Below);
    }

    fn small_vec(dim: usize) -> impl Strategy<Value = QVector> {
        proptest::collection::vec((-30i64..30, 1i64..10), dim)
            .prop_map(|cs| QVector::new(cs.into_iter().map(|(n, d)| ratio(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn projection_is_idempotent_and_lands_on_plane(
            p in small_vec(3),
            n in small_vec(3).prop_filter("normal must be nonzero", |v| !v.is_zero()),
            off in -20i64..20,
        ) {
            let h = Hyperplane::new(n, int(off)).unwrap();
            let q = h.project(&p);
            prop_assert_eq!(h.side_of(&q), Side::On);
            prop_assert_eq!(h.project(&q), q.clone());
            // q - p is parallel to the normal: q - p = t n exactly
            let d = q.sub(&p);
            let t = d.dot(h.normal()) / h.normal().norm_sq();
            prop_assert_eq!(h.normal().scale(&t), d);
        }
    }
}
