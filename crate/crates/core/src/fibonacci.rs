//! Inductive construction of acute sets of Fibonacci size.
//!
//! The induction state is an acute set together with a marked hyperplane
//! that contains part of the set while the rest lies strictly on one side.
//! One extension step raises the ambient dimension by one and replaces
//! each marked point v by the pair v +- phi(v), giving the count recurrence
//! new_size = size + on_hyperplane_count; starting from {0, 1} on the line
//! this produces Fibonacci sizes with Fibonacci hyperplane counts.
//!
//! The step works in the coordinates where the old marked hyperplane h is
//! the zero set of its normal (reached by an exact translation):
//!
//!   1. split the set into A (on h) and B (off h); pick M strictly beyond
//!      the extent of the set along the normal,
//!   2. tilt: H is the hyperplane through h2 = {<x,n> = M} in the old
//!      space and h3 = h raised by r into the new coordinate; project B
//!      onto H,
//!   3. perturb H into H2 = {<x, u + alpha> = 1} with alpha a small seeded
//!      rational vector, exactly non-orthogonal to all differences of
//!      A-points (this makes the lifted pairs distinct),
//!   4. project the B-images onto H2, and for each v in A take the point
//!      of the line H2 /\ span(normal, new axis) through v closest to
//!      v + r e_new - computed exactly, since the squared distance is a
//!      rational quadratic - as v + phi(v); its mirror is v - phi(v),
//!   5. round everything to a dyadic grid, re-solving the last coordinate
//!      of on-plane points so membership stays exact, and accept the first
//!      candidate that passes the exact acuteness sweep and the count and
//!      side checks; otherwise halve (r, alpha, tolerance) and retry.
//!
//! Every accepted configuration is exactly verified; the geometry above
//! only guides the search.

use crate::error::{Error, Result};
use crate::geom::{
    ceil_log2, int, inv_pow2, ratio, round_dyadic, sqrt_ceil, Hyperplane, QVector, Ratio, Side,
};
use crate::sampling::{rational_vector, seeded_rng};
use crate::verify::{is_acute_quick, upper_bound_check, verify_acute};
use num_traits::{One, Signed, Zero};
use rand_chacha::ChaCha8Rng;

/// Fibonacci numbers under the convention F_0 = F_1 = 1.
pub fn fibonacci_number(k: usize) -> u128 {
    let (mut a, mut b) = (1u128, 1u128);
    for _ in 0..k {
        let next = a + b;
        a = b;
        b = next;
    }
    a
}

/// An acute set with the hyperplane property: the points indexed by
/// `on_hyperplane` lie exactly on `marked`, all others strictly on the
/// `off_side` of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AcuteConfiguration {
    points: Vec<QVector>,
    marked: Hyperplane,
    on_hyperplane: Vec<usize>,
    off_side: Side,
}

impl AcuteConfiguration {
    pub fn new(
        points: Vec<QVector>,
        marked: Hyperplane,
        on_hyperplane: Vec<usize>,
        off_side: Side,
    ) -> Result<Self> {
        if off_side == Side::On {
            return Err(Error::InvalidParameter(
                "off_side must be a strict side".into(),
            ));
        }
        let cfg = AcuteConfiguration {
            points,
            marked,
            on_hyperplane,
            off_side,
        };
        cfg.check_structure()?;
        Ok(cfg)
    }

    pub fn dim(&self) -> usize {
        self.marked.dim()
    }

    pub fn points(&self) -> &[QVector] {
        &self.points
    }

    pub fn marked(&self) -> &Hyperplane {
        &self.marked
    }

    pub fn on_hyperplane(&self) -> &[usize] {
        &self.on_hyperplane
    }

    pub fn off_side(&self) -> Side {
        self.off_side
    }

    /// Exact membership and side checks; cheap (no triple sweep).
    fn check_structure(&self) -> Result<()> {
        let mut on = vec![false; self.points.len()];
        for &i in &self.on_hyperplane {
            if i >= self.points.len() {
                return Err(Error::InvalidParameter(format!(
                    "hyperplane index {} out of range",
                    i
                )));
            }
            on[i] = true;
        }
        for (i, p) in self.points.iter().enumerate() {
            let side = self.marked.side_of(p);
            let expected = if on[i] { Side::On } else { self.off_side };
            if side != expected {
                return Err(Error::InvalidParameter(format!(
                    "point {} lies on the wrong side of the marked hyperplane",
                    i
                )));
            }
        }
        Ok(())
    }

    /// Full invariant check: structure plus the exact all-triples sweep
    /// plus the size ceiling.
    pub fn validate(&self) -> Result<()> {
        self.check_structure()?;
        let report = verify_acute(&self.points)?;
        if !report.is_acute {
            return Err(Error::NotAcute {
                violations: report.violations.len(),
            });
        }
        if !upper_bound_check(&self.points) {
            return Err(Error::UpperBoundViolated {
                dim: self.dim(),
                size: self.points.len(),
            });
        }
        Ok(())
    }
}

/// `{0, 1}` on the line with `{x = 0}` marked: 2 points, 1 on the
/// hyperplane, the other strictly above.
pub fn base_config() -> AcuteConfiguration {
    AcuteConfiguration::new(
        vec![QVector::from_ints(&[0]), QVector::from_ints(&[1])],
        Hyperplane::new(QVector::from_ints(&[1]), int(0)).unwrap(),
        vec![0],
        Side::Above,
    )
    .unwrap()
}

#[derive(Debug, Clone)]
pub struct ExtendOptions {
    /// How many times (r, alpha, tolerance) may be halved before giving up.
    pub retry_budget: u32,
    /// Seed for the tilt draws; the step's dimension is mixed in, so one
    /// seed drives a whole construction deterministically.
    pub seed: u64,
    /// Starting lift height (dyadic); `None` means 1/4.
    pub initial_radius: Option<Ratio>,
    /// Starting dyadic grid exponent for coordinate rounding.
    pub initial_grid: Option<u32>,
}

impl Default for ExtendOptions {
    fn default() -> Self {
        ExtendOptions {
            retry_budget: 64,
            seed: 0x9E37_79B9_7F4A_7C15,
            initial_radius: None,
            initial_grid: None,
        }
    }
}

/// A successful extension step with its accepted search parameters
/// (useful as warm starts for the next step, and as provenance).
#[derive(Debug, Clone)]
pub struct Extended {
    pub config: AcuteConfiguration,
    pub retries: u32,
    pub radius: Ratio,
    pub grid_bits: u32,
}

/// One induction step: dimension d -> d+1, size n -> n + |A|.
pub fn extend(cfg: &AcuteConfiguration, opts: &ExtendOptions) -> Result<Extended> {
    let dim = cfg.dim();
    let n_old = cfg.points.len();
    if cfg.on_hyperplane.is_empty() {
        return Err(Error::InvalidParameter(
            "extension needs at least one point on the marked hyperplane".into(),
        ));
    }

    // orient the normal so the off points are strictly above it
    let normal = match cfg.off_side {
        Side::Below => cfg.marked.normal().neg(),
        _ => cfg.marked.normal().clone(),
    };

    // translate an A-point to the origin: the old hyperplane becomes
    // {<x, n> = 0}, heights along n become exact and nonnegative
    let origin = cfg.points[cfg.on_hyperplane[0]].clone();
    let mut on_flags = vec![false; n_old];
    for &i in &cfg.on_hyperplane {
        on_flags[i] = true;
    }
    let embedded: Vec<QVector> = cfg
        .points
        .iter()
        .map(|p| p.sub(&origin).extended(Ratio::zero()))
        .collect();
    let n_emb = normal.extended(Ratio::zero());
    let norm_sq = normal.norm_sq();

    let heights: Vec<Ratio> = embedded.iter().map(|p| p.dot(&n_emb)).collect();
    let mut beta_min: Option<Ratio> = None;
    let mut beta_max = Ratio::zero();
    for (i, h) in heights.iter().enumerate() {
        if !on_flags[i] {
            if beta_min.as_ref().is_none_or(|m| h < m) {
                beta_min = Some(h.clone());
            }
        }
        if h > &beta_max {
            beta_max = h.clone();
        }
    }
    let big_m = &beta_max + int(1);

    // differences of A-points, for the exact tilt-genericity rejection
    let mut a_indices: Vec<usize> = cfg.on_hyperplane.clone();
    a_indices.sort_unstable();
    let mut a_diffs = Vec::new();
    for (k, &i) in a_indices.iter().enumerate() {
        for &j in &a_indices[k + 1..] {
            a_diffs.push(embedded[i].sub(&embedded[j]));
        }
    }

    // tilt scale small against both the set extent and the B heights
    let extent = embedded
        .iter()
        .map(|p| p.norm_sq())
        .max()
        .unwrap_or_else(Ratio::zero);
    let v_bound = Ratio::from_integer(sqrt_ceil(&extent)) + int(1);
    let beta_floor = beta_min.clone().unwrap_or_else(Ratio::one);
    let delta_bits = ceil_log2(&(int(4) * &v_bound / beta_floor)).max(6);

    let mut rng = seeded_rng(opts.seed ^ ((dim as u64) << 32));
    let mut r = opts.initial_radius.clone().unwrap_or_else(|| ratio(1, 4));
    if r > ratio(1, 4) || !r.is_positive() {
        r = ratio(1, 4);
    }
    // the tilt must shrink faster than the quadratic slack of the lifted
    // pairs, so it is tied to r^2 rather than halved alongside r
    let delta_base = inv_pow2(delta_bits);
    let grid0 = opts.initial_grid.unwrap_or(12);

    for attempt in 0..=opts.retry_budget {
        let delta = &delta_base * &r * &r;
        if let Some((config, grid)) = attempt_extend(
            &embedded, &on_flags, &a_indices, &a_diffs, &normal, &n_emb, &norm_sq, &big_m, &r,
            &delta, grid0, &mut rng,
        ) {
            return Ok(Extended {
                config,
                retries: attempt,
                radius: r,
                grid_bits: grid,
            });
        }
        r /= int(2);
    }
    Err(Error::RetryExhausted {
        dim,
        budget: opts.retry_budget,
    })
}

/// Draw a tilt vector of norm O(delta) that is exactly non-orthogonal to
/// every difference of A-points and keeps the last normal coordinate
/// nonzero.
fn draw_tilt(
    rng: &mut ChaCha8Rng,
    dim_new: usize,
    delta: &Ratio,
    a_diffs: &[QVector],
    u_last: &Ratio,
) -> Option<QVector> {
    for _ in 0..32 {
        let rho = rational_vector(rng, dim_new, 4);
        if rho.is_zero() {
            continue;
        }
        let alpha = rho.scale(delta);
        if a_diffs.iter().any(|d| d.dot(&alpha).is_zero()) {
            continue;
        }
        if (u_last + alpha.coord(dim_new - 1)).is_zero() {
            continue;
        }
        return Some(alpha);
    }
    None
}

#[allow(clippy::too_many_arguments)]
fn attempt_extend(
    embedded: &[QVector],
    on_flags: &[bool],
    a_indices: &[usize],
    a_diffs: &[QVector],
    normal: &QVector,
    n_emb: &QVector,
    norm_sq: &Ratio,
    big_m: &Ratio,
    r: &Ratio,
    delta: &Ratio,
    grid0: u32,
    rng: &mut ChaCha8Rng,
) -> Option<(AcuteConfiguration, u32)> {
    let n_old = embedded.len();
    let dim_new = embedded[0].dim();
    let eps = r / int(4);
    let eps_sq = &eps * &eps;

    // H through h2 = {<x,n> = M} in the old space and h3 = h + r e_new:
    // normal (r n, M), offset r M
    let h_tilt = Hyperplane::new(normal.scale(r).extended(big_m.clone()), r * big_m)
        .expect("tilt normal has a positive last coordinate");

    // u renormalizes H to offset 1: u = (n / M, 1 / r)
    let mut u_coords: Vec<Ratio> = normal.coords().iter().map(|c| c / big_m).collect();
    let u_last = r.recip();
    u_coords.push(u_last.clone());
    let u = QVector::new(u_coords);

    let alpha = draw_tilt(rng, dim_new, delta, a_diffs, &u_last)?;
    let w = u.add(&alpha);
    let h2 = Hyperplane::new(w.clone(), Ratio::one()).expect("tilted normal is nonzero");

    // In the 2-plane through an A-point v spanned by (n, e_new), H2 cuts
    // the line aa t + bb s = kappa_v; the tilt makes the kappa_v pairwise
    // distinct. The lifted pairs stay acute against each other only if the
    // squared norms ||t n + s e||^2 of the chosen points agree to higher
    // order than their mutual distances (the role the circle of radius r
    // plays in the underlying argument), so each point is driven toward a
    // common norm level R^2 by an exact rational Newton step; the residual
    // is then quartic in the tilt while separations are linear.
    let aa = n_emb.dot(&w);
    let bb = w.coord(dim_new - 1).clone();
    if aa.is_zero() {
        return None;
    }
    let slope = &aa / &bb;

    let mut kappas: Vec<Ratio> = Vec::with_capacity(a_indices.len());
    for &i in a_indices {
        let kappa = Ratio::one() - embedded[i].dot(&w);
        if !kappa.is_positive() {
            return None; // mirror image would not fall strictly below H2
        }
        kappas.push(kappa);
    }
    let line_start: Vec<Ratio> = kappas.iter().map(|k| k / &bb).collect();
    let norm_target = line_start
        .iter()
        .map(|s0| s0 * s0)
        .max()
        .expect("at least one marked point");

    // phi for each marked point: norm-corrected position on its line
    let mut phis: Vec<(Ratio, Ratio)> = Vec::with_capacity(a_indices.len());
    for s0 in &line_start {
        let n0 = s0 * s0;
        let d0 = &slope * s0 * int(-2);
        if d0.is_zero() {
            return None;
        }
        let t1 = (&norm_target - &n0) / d0;
        let s1 = s0 - &slope * &t1;
        let n1 = &t1 * &t1 * norm_sq + &s1 * &s1;
        let d1 = &t1 * norm_sq * int(2) - &slope * &s1 * int(2);
        if d1.is_zero() {
            return None;
        }
        let t = &t1 - (&n1 - &norm_target) / d1;
        let s = s0 - &slope * &t;
        if !s.is_positive() {
            return None;
        }
        // the lift must stay near v + r e_new for the flat triangles
        if &t * &t * norm_sq + (&s - r) * (&s - r) >= eps_sq {
            return None;
        }
        phis.push((t, s));
    }

    let mut plus_images: Vec<QVector> = Vec::with_capacity(n_old);
    let mut minus_images: Vec<QVector> = Vec::with_capacity(a_indices.len());
    let mut next_a = 0usize;
    for (i, point) in embedded.iter().enumerate() {
        if on_flags[i] {
            let (t, s) = &phis[next_a];
            next_a += 1;
            let head_plus: Vec<Ratio> = point
                .coords()
                .iter()
                .take(dim_new - 1)
                .zip(normal.coords())
                .map(|(p, n)| p + t * n)
                .collect();
            let mut plus = head_plus;
            plus.push(s.clone());
            let mut minus: Vec<Ratio> = point
                .coords()
                .iter()
                .take(dim_new - 1)
                .zip(normal.coords())
                .map(|(p, n)| p - t * n)
                .collect();
            minus.push(-s);
            plus_images.push(QVector::new(plus));
            minus_images.push(QVector::new(minus));
        } else {
            let on_h = h_tilt.project(point);
            let image = h2.project(&on_h);
            if image.sub(&on_h).norm_sq() >= eps_sq {
                return None; // tilt moved a B-point too far
            }
            plus_images.push(image);
        }
    }

    // normalize H2 so its last normal coordinate is exactly 1; rounding
    // then solves the last coordinate of on-plane points against a dyadic
    // head, keeping membership exact and denominators dyadic
    let w_norm = w.scale(&bb.recip());
    let offset_norm = bb.recip();

    for k in (0..6).map(|i| grid0 + 8 * i) {
        if let Some(cfg) = round_candidate(
            &plus_images,
            &minus_images,
            &w_norm,
            &offset_norm,
            k,
            &eps_sq,
        ) {
            return Some((cfg, k));
        }
    }

    // rounding failed at every grid: fall back to the exact raw points
    let mut raw = plus_images;
    raw.extend(minus_images);
    if !is_acute_quick(&raw) || !upper_bound_check(&raw) {
        return None;
    }
    let on: Vec<usize> = (0..n_old).collect();
    AcuteConfiguration::new(raw, h2, on, Side::Below)
        .ok()
        .map(|cfg| (cfg, 0))
}

/// Round one assembled extension onto the `1/2^k` grid. On-plane points get
/// their last coordinate re-solved from the rounded hyperplane equation, so
/// exact membership survives rounding; off-plane points must land strictly
/// on one common side. Returns a fully verified configuration or nothing.
fn round_candidate(
    plus_images: &[QVector],
    minus_images: &[QVector],
    w_norm: &QVector,
    offset_norm: &Ratio,
    k: u32,
    move_budget_sq: &Ratio,
) -> Option<AcuteConfiguration> {
    let dim_new = w_norm.dim();
    let head_len = dim_new - 1;

    let mut normal_coords: Vec<Ratio> = w_norm
        .coords()
        .iter()
        .take(head_len)
        .map(|c| round_dyadic(c, k))
        .collect();
    normal_coords.push(Ratio::one());
    let offset = round_dyadic(offset_norm, k);
    let normal = QVector::new(normal_coords);
    let plane = Hyperplane::new(normal.clone(), offset.clone()).ok()?;

    let mut points = Vec::with_capacity(plus_images.len() + minus_images.len());
    for image in plus_images {
        let head: Vec<Ratio> = image
            .coords()
            .iter()
            .take(head_len)
            .map(|c| round_dyadic(c, k))
            .collect();
        let mut last = offset.clone();
        for (h, n) in head.iter().zip(normal.coords()) {
            last -= h * n;
        }
        let mut coords = head;
        coords.push(last);
        let candidate = QVector::new(coords);
        if candidate.sub(image).norm_sq() >= *move_budget_sq {
            return None;
        }
        debug_assert_eq!(plane.side_of(&candidate), Side::On);
        points.push(candidate);
    }

    let mut side: Option<Side> = None;
    for image in minus_images {
        let candidate = QVector::new(image.coords().iter().map(|c| round_dyadic(c, k)).collect());
        if candidate.sub(image).norm_sq() >= *move_budget_sq {
            return None;
        }
        let s = plane.side_of(&candidate);
        if s == Side::On || *side.get_or_insert(s) != s {
            return None;
        }
        points.push(candidate);
    }

    if !is_acute_quick(&points) || !upper_bound_check(&points) {
        return None;
    }
    let on: Vec<usize> = (0..plus_images.len()).collect();
    AcuteConfiguration::new(points, plane, on, side.unwrap_or(Side::Below)).ok()
}

/// Everything produced on the way to dimension d: `steps[i]` is the
/// configuration in dimension i+1.
#[derive(Debug, Clone)]
pub struct FibonacciRun {
    pub steps: Vec<AcuteConfiguration>,
    pub retries: Vec<u32>,
}

pub fn fibonacci_run(d: usize, opts: &ExtendOptions) -> Result<FibonacciRun> {
    if d == 0 {
        return Err(Error::InvalidParameter(
            "dimension must be at least 1".into(),
        ));
    }
    let mut steps = vec![base_config()];
    let mut retries = Vec::new();
    let mut step_opts = opts.clone();
    while steps.last().unwrap().dim() < d {
        let extended = extend(steps.last().unwrap(), &step_opts)?;
        // warm-start the next step's search where this one succeeded
        step_opts.initial_radius = Some(extended.radius.clone());
        step_opts.initial_grid = Some(extended.grid_bits.max(12));
        retries.push(extended.retries);
        steps.push(extended.config);
    }
    Ok(FibonacciRun { steps, retries })
}

/// The d-dimensional configuration of size F_{d+1} with F_d points on the
/// marked hyperplane, built by d-1 extension steps from the line.
pub fn fibonacci_construct(d: usize) -> Result<AcuteConfiguration> {
    let run = fibonacci_run(d, &ExtendOptions::default())?;
    Ok(run.steps.into_iter().last().expect("at least the base"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibonacci_number_convention() {
        let expected = [1u128, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377];
        for (k, &f) in expected.iter().enumerate() {
            assert_eq!(fibonacci_number(k), f);
        }
    }

    #[test]
    fn base_configuration_counts() {
        let cfg = base_config();
        assert_eq!(cfg.dim(), 1);
        assert_eq!(cfg.points().len(), 2);
        assert_eq!(cfg.on_hyperplane(), &[0]);
        assert_eq!(cfg.marked().side_of(&cfg.points()[1]), Side::Above);
        cfg.validate().unwrap();
    }

    #[test]
    fn one_extension_reaches_the_plane_with_three_points() {
        let ext = extend(&base_config(), &ExtendOptions::default()).unwrap();
        let cfg = &ext.config;
        assert_eq!(cfg.dim(), 2);
        assert_eq!(cfg.points().len(), 3);
        assert_eq!(cfg.on_hyperplane().len(), 2);
        cfg.validate().unwrap();
    }

    #[test]
    fn two_extensions_give_five_points_in_r3() {
        let run = fibonacci_run(3, &ExtendOptions::default()).unwrap();
        let cfg = run.steps.last().unwrap();
        assert_eq!(cfg.dim(), 3);
        assert_eq!(cfg.points().len(), 5);
        assert_eq!(cfg.on_hyperplane().len(), 3);
        cfg.validate().unwrap();
    }

    #[test]
    fn extension_cardinality_law() {
        let run = fibonacci_run(6, &ExtendOptions::default()).unwrap();
        for pair in run.steps.windows(2) {
            assert_eq!(
                pair[1].points().len(),
                pair[0].points().len() + pair[0].on_hyperplane().len()
            );
            assert_eq!(pair[1].on_hyperplane().len(), pair[0].points().len());
        }
    }

    #[test]
    fn construction_is_deterministic() {
        let a = fibonacci_construct(5).unwrap();
        let b = fibonacci_construct(5).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_dimension_zero() {
        assert!(fibonacci_construct(0).is_err());
    }

    #[test]
    fn extension_requires_a_marked_point() {
        let cfg = AcuteConfiguration::new(
            vec![QVector::from_ints(&[1]), QVector::from_ints(&[2])],
            Hyperplane::new(QVector::from_ints(&[1]), int(0)).unwrap(),
            vec![],
            Side::Above,
        )
        .unwrap();
        assert!(matches!(
            extend(&cfg, &ExtendOptions::default()),
            Err(Error::InvalidParameter(_))
        ));
    }
}
