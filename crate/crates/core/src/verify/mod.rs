//! The ground-truth oracle: exact acuteness checking over all triples.
//!
//! A set is acute iff for every ordered triple (apex x, legs y, z) the
//! scalar product `<y-x, z-x>` is strictly positive. All checks here are
//! sign-exact over the rationals; the parallel sweep and the sequential
//! sweep produce bit-identical reports.

mod engine;
pub mod reference;

pub(crate) use engine::is_acute_quick;

use crate::error::{Error, Result};
use crate::geom::{int, sqrt_ceil, QVector, Ratio};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::time::{Duration, Instant};

/// One non-acute apex: the angle at `apex` spanned toward the two `others`
/// is right (dot = 0) or obtuse (dot < 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub apex: usize,
    pub others: (usize, usize),
    pub dot: Ratio,
}

/// Result of an exhaustive acuteness sweep.
///
/// `min_vertex_dot` is the minimum of `<y-x, z-x>` over ordered triples with
/// distinct apex and legs; `s_value` additionally admits `y = z` terms (the
/// squared pair distances), so `s_value <= min_vertex_dot`. Both are `None`
/// when the set is too small to produce any such term. `elapsed` is for
/// reporting only and is ignored by equality.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub dim: usize,
    pub point_count: usize,
    pub is_acute: bool,
    pub min_vertex_dot: Option<Ratio>,
    pub s_value: Option<Ratio>,
    pub violations: Vec<Violation>,
    pub triples_checked: u64,
    pub elapsed: Duration,
}

impl PartialEq for VerificationReport {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.point_count == other.point_count
            && self.is_acute == other.is_acute
            && self.min_vertex_dot == other.min_vertex_dot
            && self.s_value == other.s_value
            && self.violations == other.violations
            && self.triples_checked == other.triples_checked
    }
}

impl Eq for VerificationReport {}

/// The three apex signs of a triangle, in input order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TripleVerdict {
    pub apex_signs: [i8; 3],
}

impl TripleVerdict {
    pub fn is_acute(&self) -> bool {
        self.apex_signs.iter().all(|&s| s == 1)
    }
}

fn sign(r: &Ratio) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Exact apex signs for one triangle. Coincident points are an error.
pub fn check_triple(x: &QVector, y: &QVector, z: &QVector) -> Result<TripleVerdict> {
    if x.dim() != y.dim() || x.dim() != z.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            found: if y.dim() != x.dim() { y.dim() } else { z.dim() },
        });
    }
    if x == y || x == z || y == z {
        return Err(Error::DegenerateTriple);
    }
    let at = |a: &QVector, b: &QVector, c: &QVector| sign(&b.sub(a).dot(&c.sub(a)));
    Ok(TripleVerdict {
        apex_signs: [at(x, y, z), at(y, x, z), at(z, x, y)],
    })
}

fn common_dimension(points: &[QVector]) -> Result<usize> {
    let Some(first) = points.first() else {
        return Err(Error::EmptyInput);
    };
    let dim = first.dim();
    for p in points {
        if p.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.dim(),
            });
        }
    }
    Ok(dim)
}

fn assemble_report(
    dim: usize,
    n: usize,
    sweep: engine::SweepOutcome,
    started: Instant,
) -> VerificationReport {
    let s_value = match (&sweep.min_dot, &sweep.min_pair_norm) {
        (Some(m), Some(p)) => Some(m.min(p).clone()),
        (None, Some(p)) => Some(p.clone()),
        _ => None,
    };
    VerificationReport {
        dim,
        point_count: n,
        is_acute: sweep.violations.is_empty(),
        min_vertex_dot: sweep.min_dot,
        s_value,
        violations: sweep.violations,
        triples_checked: sweep.apex_dots / 3,
        elapsed: started.elapsed(),
    }
}

/// Exhaustive exact sweep over all triples of `points`.
///
/// Uses the data-parallel engine when the `parallel` feature is enabled
/// (workers split over disjoint apex ranges; the folds are exact, so the
/// report is bit-identical for any worker count), the sequential engine
/// otherwise. Duplicate points and mixed dimensions are hard errors.
pub fn verify_acute(points: &[QVector]) -> Result<VerificationReport> {
    let started = Instant::now();
    let dim = common_dimension(points)?;
    let sweep = engine::sweep(points, cfg!(feature = "parallel"))?;
    Ok(assemble_report(dim, points.len(), sweep, started))
}

/// Same sweep restricted to a single worker, regardless of features.
pub fn verify_acute_sequential(points: &[QVector]) -> Result<VerificationReport> {
    let started = Instant::now();
    let dim = common_dimension(points)?;
    let sweep = engine::sweep(points, false)?;
    Ok(assemble_report(dim, points.len(), sweep, started))
}

/// A computable perturbation radius under which acuteness is preserved.
///
/// Returns `eps = m / (8 D)` where `m` is the minimum vertex scalar product
/// (falling back to the squared-distance minimum for two-point sets) and
/// `D` is the integer ceiling of the square root of the maximum squared
/// pairwise distance. Moving every point by less than `eps` changes any
/// vertex scalar product by at most `4 eps D + 4 eps^2 < m`, so no sign can
/// flip. Fails if the input is not acute.
pub fn robustness_radius(points: &[QVector]) -> Result<Ratio> {
    let report = verify_acute(points)?;
    if !report.is_acute {
        return Err(Error::NotAcute {
            violations: report.violations.len(),
        });
    }
    if points.len() < 2 {
        // a single point tolerates any perturbation
        return Ok(int(1));
    }
    let mut max_norm = Ratio::zero();
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            let d2 = q.sub(p).norm_sq();
            if d2 > max_norm {
                max_norm = d2;
            }
        }
    }
    let d_ub = Ratio::from_integer(sqrt_ceil(&max_norm));
    let m = report
        .min_vertex_dot
        .or(report.s_value)
        .expect("two or more distinct points have an s value");
    Ok(m / (d_ub * int(8)))
}

/// Sanity assertion against the known ceiling on acute-set size:
/// at most `2^d - 1` points for d >= 2, at most 2 on the line, at most 1
/// in dimension zero. A `false` here signals a bug in a construction or in
/// the verifier, never a mathematical discovery.
pub fn upper_bound_check(points: &[QVector]) -> bool {
    let n = points.len();
    let dim = points.first().map_or(0, QVector::dim);
    match dim {
        0 => n <= 1,
        1 => n <= 2,
        d if d < 63 => BigInt::from(n) <= (BigInt::one() << d) - 1,
        _ => true,
    }
}
