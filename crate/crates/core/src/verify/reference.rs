//! Naive single-threaded reference verifier.
//!
//! Three nested loops over rational vectors: no parallelism, no integer
//! rescaling, no Gram-matrix shortcut. It exists so the production engine
//! has an independent implementation to be compared against; keep it dumb.

use super::{VerificationReport, Violation};
use crate::error::{Error, Result};
use crate::geom::{QVector, Ratio};
use std::time::Instant;

pub fn verify_acute_naive(points: &[QVector]) -> Result<VerificationReport> {
    let started = Instant::now();
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
    let n = points.len();

    let mut min_pair_norm: Option<Ratio> = None;
    for i in 0..n {
        for j in (i + 1)..n {
            let norm = points[j].sub(&points[i]).norm_sq();
            if norm == Ratio::default() {
                return Err(Error::DuplicatePoints(i, j));
            }
            if min_pair_norm.as_ref().is_none_or(|m| &norm < m) {
                min_pair_norm = Some(norm);
            }
        }
    }

    let mut min_dot: Option<Ratio> = None;
    let mut violations = Vec::new();
    let mut apex_dots = 0u64;
    for apex in 0..n {
        for i in 0..n {
            if i == apex {
                continue;
            }
            for j in (i + 1)..n {
                if j == apex {
                    continue;
                }
                let dot = points[i]
                    .sub(&points[apex])
                    .dot(&points[j].sub(&points[apex]));
                apex_dots += 1;
                if dot <= Ratio::default() {
                    violations.push(Violation {
                        apex,
                        others: (i, j),
                        dot: dot.clone(),
                    });
                }
                if min_dot.as_ref().is_none_or(|m| &dot < m) {
                    min_dot = Some(dot);
                }
            }
        }
    }

    let s_value = match (&min_dot, &min_pair_norm) {
        (Some(m), Some(p)) => Some(m.min(p).clone()),
        (None, Some(p)) => Some(p.clone()),
        _ => None,
    };
    Ok(VerificationReport {
        dim,
        point_count: n,
        is_acute: violations.is_empty(),
        min_vertex_dot: min_dot,
        s_value,
        violations,
        triples_checked: apex_dots / 3,
        elapsed: started.elapsed(),
    })
}
