//! Scaled-integer sweep engine.
//!
//! Multiplying every point by the common denominator L turns all scalar
//! products into integers scaled by L^2; signs and argmins are unchanged,
//! and the exact rational results are recovered by dividing minima by L^2
//! at the end. Apex dots come from the Gram matrix:
//!
//!   <p_i - p_a, p_j - p_a> = G(i,j) - G(i,a) - G(a,j) + G(a,a)
//!
//! which replaces a d-term scalar product by three additions per triple.
//! Coordinates small enough to rule out overflow run on i128; anything
//! larger runs on BigInt. Both paths fold exact minima over disjoint apex
//! ranges, so results never depend on worker count or chunking.

use super::Violation;
use crate::error::{Error, Result};
use crate::geom::{QVector, Ratio};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub(super) struct SweepOutcome {
    pub min_dot: Option<Ratio>,
    pub min_pair_norm: Option<Ratio>,
    pub violations: Vec<Violation>,
    pub apex_dots: u64,
}

/// Exact acuteness as a bare boolean, with early exit on the first
/// violation. Duplicate points count as "not acute" here (callers screening
/// rounding candidates treat merged points as a rejection, not an error).
/// The boolean is deterministic even though the parallel search may find
/// different witnesses on different runs.
pub(crate) fn is_acute_quick(points: &[QVector]) -> bool {
    let n = points.len();
    if n < 2 {
        return true;
    }
    let dim = points[0].dim();
    debug_assert!(points.iter().all(|p| p.dim() == dim));
    let (flat, _) = scale_to_integers(points);
    let max_abs = flat.iter().map(BigInt::abs).max().unwrap_or_default();
    let bound: BigInt = BigInt::from(4 * dim.max(1)) * &max_abs * &max_abs;
    if bound < (BigInt::one() << 126) {
        let small: Vec<i128> = flat.iter().map(|v| v.to_i128().unwrap()).collect();
        quick_run::<i128>(&small, n, dim)
    } else {
        quick_run::<BigInt>(&flat, n, dim)
    }
}

fn quick_run<T: Scalar>(flat: &[T], n: usize, dim: usize) -> bool {
    let gram = gram_matrix(flat, n, dim, cfg!(feature = "parallel"));
    for i in 0..n {
        for j in (i + 1)..n {
            let norm = T::combine(
                &gram[i * n + i],
                &gram[j * n + j],
                &gram[i * n + j],
                &gram[i * n + j],
            );
            if norm.is_zero() {
                return false;
            }
        }
    }
    let apex_clean = |a: usize| -> bool {
        let aa = &gram[a * n + a];
        for i in 0..n {
            if i == a {
                continue;
            }
            let ia = &gram[i * n + a];
            for j in (i + 1)..n {
                if j == a {
                    continue;
                }
                if T::combine(&gram[i * n + j], aa, ia, &gram[a * n + j]).is_nonpositive() {
                    return false;
                }
            }
        }
        true
    };
    all_apexes_clean(n, apex_clean)
}

#[cfg(feature = "parallel")]
fn all_apexes_clean<F: Fn(usize) -> bool + Sync + Send>(n: usize, f: F) -> bool {
    (0..n).into_par_iter().all(f)
}

#[cfg(not(feature = "parallel"))]
fn all_apexes_clean<F: Fn(usize) -> bool + Sync + Send>(n: usize, f: F) -> bool {
    (0..n).all(f)
}

pub(super) fn sweep(points: &[QVector], parallel: bool) -> Result<SweepOutcome> {
    let n = points.len();
    let dim = points[0].dim();
    let (flat, scale) = scale_to_integers(points);

    // overflow guard for the narrow path: |combination of four Gram
    // entries| <= 4 d G^2 must stay well inside i128
    let max_abs = flat.iter().map(BigInt::abs).max().unwrap_or_default();
    let bound: BigInt = BigInt::from(4 * dim.max(1)) * &max_abs * &max_abs;
    let scale_sq = Ratio::new(BigInt::one(), &scale * &scale);

    if bound < (BigInt::one() << 126) {
        let small: Vec<i128> = flat.iter().map(|v| v.to_i128().unwrap()).collect();
        run::<i128>(&small, n, dim, parallel, &scale_sq)
    } else {
        run::<BigInt>(&flat, n, dim, parallel, &scale_sq)
    }
}

/// All coordinates times the lcm of their denominators, row-major.
fn scale_to_integers(points: &[QVector]) -> (Vec<BigInt>, BigInt) {
    let mut l = BigInt::one();
    for p in points {
        for c in p.coords() {
            l = l.lcm(c.denom());
        }
    }
    let mut flat = Vec::with_capacity(points.len() * points[0].dim());
    for p in points {
        for c in p.coords() {
            flat.push(c.numer() * (&l / c.denom()));
        }
    }
    (flat, l)
}

/// Integer arithmetic shared by the i128 and BigInt paths.
trait Scalar: Clone + Ord + Send + Sync {
    fn mul(a: &Self, b: &Self) -> Self;
    fn acc(into: &mut Self, v: Self);
    /// `x + y - u - w`
    fn combine(x: &Self, y: &Self, u: &Self, w: &Self) -> Self;
    fn zero() -> Self;
    fn is_nonpositive(&self) -> bool;
    fn is_zero(&self) -> bool;
    fn to_ratio(&self, scale_sq: &Ratio) -> Ratio;
}

impl Scalar for i128 {
    fn mul(a: &Self, b: &Self) -> Self {
        a * b
    }
    fn acc(into: &mut Self, v: Self) {
        *into += v;
    }
    fn combine(x: &Self, y: &Self, u: &Self, w: &Self) -> Self {
        x + y - u - w
    }
    fn zero() -> Self {
        0
    }
    fn is_nonpositive(&self) -> bool {
        *self <= 0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn to_ratio(&self, scale_sq: &Ratio) -> Ratio {
        Ratio::from_integer(BigInt::from(*self)) * scale_sq
    }
}

impl Scalar for BigInt {
    fn mul(a: &Self, b: &Self) -> Self {
        a * b
    }
    fn acc(into: &mut Self, v: Self) {
        *into += v;
    }
    fn combine(x: &Self, y: &Self, u: &Self, w: &Self) -> Self {
        let mut t = x + y;
        t -= u;
        t -= w;
        t
    }
    fn zero() -> Self {
        <BigInt as Zero>::zero()
    }
    fn is_nonpositive(&self) -> bool {
        !self.is_positive()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn to_ratio(&self, scale_sq: &Ratio) -> Ratio {
        Ratio::from_integer(self.clone()) * scale_sq
    }
}

struct ApexOutcome<T> {
    min_dot: Option<T>,
    violations: Vec<(usize, usize, T)>,
    pairs: u64,
}

fn run<T: Scalar>(
    flat: &[T],
    n: usize,
    dim: usize,
    parallel: bool,
    scale_sq: &Ratio,
) -> Result<SweepOutcome> {
    let gram = gram_matrix(flat, n, dim, parallel);

    // pair scan: duplicate detection (first in index order) and min ||y-x||^2
    let mut min_pair: Option<T> = None;
    for i in 0..n {
        for j in (i + 1)..n {
            let norm = T::combine(
                &gram[i * n + i],
                &gram[j * n + j],
                &gram[i * n + j],
                &gram[i * n + j],
            );
            if norm.is_zero() {
                return Err(Error::DuplicatePoints(i, j));
            }
            if min_pair.as_ref().is_none_or(|m| &norm < m) {
                min_pair = Some(norm);
            }
        }
    }

    let per_apex = |a: usize| -> ApexOutcome<T> {
        let mut out = ApexOutcome {
            min_dot: None,
            violations: Vec::new(),
            pairs: 0,
        };
        let aa = &gram[a * n + a];
        for i in 0..n {
            if i == a {
                continue;
            }
            let ia = &gram[i * n + a];
            for j in (i + 1)..n {
                if j == a {
                    continue;
                }
                let dot = T::combine(&gram[i * n + j], aa, ia, &gram[a * n + j]);
                out.pairs += 1;
                if dot.is_nonpositive() {
                    out.violations.push((i, j, dot.clone()));
                }
                if out.min_dot.as_ref().is_none_or(|m| &dot < m) {
                    out.min_dot = Some(dot);
                }
            }
        }
        out
    };

    let outcomes: Vec<ApexOutcome<T>> = collect_apexes(n, parallel, per_apex);

    let mut min_dot: Option<T> = None;
    let mut violations = Vec::new();
    let mut apex_dots = 0u64;
    for (apex, out) in outcomes.into_iter().enumerate() {
        if let Some(m) = out.min_dot {
            if min_dot.as_ref().is_none_or(|cur| &m < cur) {
                min_dot = Some(m);
            }
        }
        for (i, j, dot) in out.violations {
            violations.push(Violation {
                apex,
                others: (i, j),
                dot: dot.to_ratio(scale_sq),
            });
        }
        apex_dots += out.pairs;
    }

    Ok(SweepOutcome {
        min_dot: min_dot.map(|m| m.to_ratio(scale_sq)),
        min_pair_norm: min_pair.map(|m| m.to_ratio(scale_sq)),
        violations,
        apex_dots,
    })
}

fn gram_matrix<T: Scalar>(flat: &[T], n: usize, dim: usize, parallel: bool) -> Vec<T> {
    // upper triangle only; the mirror below fills the rest
    let row = |i: usize| -> Vec<T> {
        let pi = &flat[i * dim..(i + 1) * dim];
        (i..n)
            .map(|j| {
                let pj = &flat[j * dim..(j + 1) * dim];
                let mut acc = T::zero();
                for (a, b) in pi.iter().zip(pj) {
                    T::acc(&mut acc, T::mul(a, b));
                }
                acc
            })
            .collect()
    };

    let upper: Vec<Vec<T>> = collect_apexes(n, parallel, row);
    let mut gram = vec![T::zero(); n * n];
    for (i, row) in upper.into_iter().enumerate() {
        for (k, v) in row.into_iter().enumerate() {
            let j = i + k;
            if i != j {
                gram[j * n + i] = v.clone();
            }
            gram[i * n + j] = v;
        }
    }
    gram
}

#[cfg(feature = "parallel")]
fn collect_apexes<T: Send, F: Fn(usize) -> T + Sync + Send>(n: usize, parallel: bool, f: F) -> Vec<T> {
    if parallel {
        (0..n).into_par_iter().map(f).collect()
    } else {
        (0..n).map(f).collect()
    }
}

#[cfg(not(feature = "parallel"))]
fn collect_apexes<T: Send, F: Fn(usize) -> T + Sync>(n: usize, _parallel: bool, f: F) -> Vec<T> {
    (0..n).map(f).collect()
}
