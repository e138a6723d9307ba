//! Membership predicates for the dominant regions, sampled subordination
//! tests, the starlike-type class checks, and boundary-curve computations.
//!
//! Every membership test returns a signed margin that is positive inside the
//! region and roughly measures distance to the boundary (angular distance for
//! sectors). Subordination is tested by sampling: `q ≺ psi` is reported to hold
//! when every sampled value of `q` lies in `psi(U)`. This is a sufficient check
//! on the grid, not a proof.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::minimize::{golden_section, golden_section_max};
use crate::omega::parse_numbers;
use crate::series::TruncatedSeries;
use crate::tolerance;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DominantRegion {
    /// `Re w > alpha`.
    HalfPlane { alpha: f64 },
    /// Image of the unit disk under `(1 + A z) / (1 + B z)`, `-1 < B < A <= 1`.
    JanowskiDisk { a: f64, b: f64 },
    /// `|arg w| < eta pi / 2`.
    Sector { eta: f64 },
    /// `|w^(1/eta) - 1| < 1`.
    Lemniscate { eta: f64 },
    /// Right of the left-opening parabola
    /// `v^2 = -b^2 (1+a) (u - u0)`, `u0 = (2b(1-a) - (1+a)) / 4`.
    ParabolaExterior { a: f64, b: f64 },
    /// `Re(1/w) > alpha`.
    ReciprocalHalfPlane { alpha: f64 },
    /// `|w - center| < radius`.
    Disk { center: Complex64, radius: f64 },
}

fn invalid(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

impl DominantRegion {
    pub fn half_plane(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() {
            return Err(invalid(format!("half-plane threshold {alpha} is not finite")));
        }
        Ok(Self::HalfPlane { alpha })
    }

    /// `B = -1` degenerates to the half-plane `Re w > (1 - A) / 2`.
    pub fn janowski(a: f64, b: f64) -> Result<Self> {
        if !(-1.0..1.0).contains(&b) || !(a > b && a <= 1.0) {
            return Err(invalid(format!("Janowski region needs -1 <= B < A <= 1, got A = {a}, B = {b}")));
        }
        if b == -1.0 {
            return Self::half_plane((1.0 - a) / 2.0);
        }
        Ok(Self::JanowskiDisk { a, b })
    }

    /// Opening `eta` up to 2 (the slit plane), so hypothesis sectors wider than
    /// a half-plane are expressible.
    pub fn sector(eta: f64) -> Result<Self> {
        if !(eta > 0.0 && eta <= 2.0) {
            return Err(invalid(format!("sector needs 0 < eta <= 2, got {eta}")));
        }
        Ok(Self::Sector { eta })
    }

    pub fn lemniscate(eta: f64) -> Result<Self> {
        if !(eta > 0.0 && eta.is_finite()) {
            return Err(invalid(format!("lemniscate needs eta > 0, got {eta}")));
        }
        Ok(Self::Lemniscate { eta })
    }

    pub fn parabola_exterior(a: f64, b: f64) -> Result<Self> {
        if !(1.0 + a > 0.0) || !a.is_finite() || !b.is_finite() || b == 0.0 {
            return Err(invalid(format!("parabola needs 1 + a > 0 and b != 0, got a = {a}, b = {b}")));
        }
        Ok(Self::ParabolaExterior { a, b })
    }

    pub fn reciprocal_half_plane(alpha: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&alpha) {
            return Err(invalid(format!("reciprocal half-plane needs 0 <= alpha < 1, got {alpha}")));
        }
        Ok(Self::ReciprocalHalfPlane { alpha })
    }

    pub fn disk(center: Complex64, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) || !center.is_finite() {
            return Err(invalid(format!("disk needs a finite center and positive radius, got {radius}")));
        }
        Ok(Self::Disk { center, radius })
    }

    /// Vertex abscissa of the parabola.
    pub fn parabola_vertex(a: f64, b: f64) -> f64 {
        (2.0 * b * (1.0 - a) - (a + 1.0)) / 4.0
    }

    /// Membership and signed margin (positive inside).
    pub fn contains(&self, w: Complex64) -> (bool, f64) {
        let margin = match *self {
            Self::HalfPlane { alpha } => w.re - alpha,
            Self::JanowskiDisk { a, b } => {
                let d = 1.0 - b * b;
                (a - b) / d - (w - (1.0 - a * b) / d).norm()
            }
            Self::Sector { eta } => {
                if w.norm() == 0.0 {
                    return (false, 0.0);
                }
                eta * FRAC_PI_2 - w.arg().abs()
            }
            Self::Lemniscate { eta } => {
                if w.norm() == 0.0 {
                    return (false, 0.0);
                }
                1.0 - (w.powf(1.0 / eta) - 1.0).norm()
            }
            Self::ParabolaExterior { a, b } => {
                w.re - (Self::parabola_vertex(a, b) - w.im * w.im / (b * b * (1.0 + a)))
            }
            Self::ReciprocalHalfPlane { alpha } => {
                if w.norm() == 0.0 {
                    return (false, 0.0);
                }
                w.inv().re - alpha
            }
            Self::Disk { center, radius } => radius - (w - center).norm(),
        };
        (margin > 0.0, margin)
    }

    /// Whether the principal power used by [`contains`](Self::contains) is
    /// unreliable at `w`: for lemniscates with `eta <= 1/2` the region lies in
    /// `Re w > 0`, and samples outside it are set aside.
    pub fn branch_risk(&self, w: Complex64) -> bool {
        matches!(*self, Self::Lemniscate { eta } if eta <= 0.5 && w.re <= 0.0)
    }

    /// Boundary point at parameter `theta` in `(-pi, pi)`. The vertex of a
    /// parabola and the point `alpha` of a half-plane sit at `theta = 0`.
    pub fn boundary_point(&self, theta: f64) -> Complex64 {
        let t = (theta / 2.0).tan();
        match *self {
            Self::HalfPlane { alpha } => Complex64::new(alpha, t),
            Self::JanowskiDisk { a, b } => {
                let d = 1.0 - b * b;
                (1.0 - a * b) / d + (a - b) / d * Complex64::from_polar(1.0, theta)
            }
            Self::Sector { eta } => Complex64::from_polar(t.abs(), theta.signum() * eta * FRAC_PI_2),
            Self::Lemniscate { eta } => (1.0 + Complex64::from_polar(1.0, theta)).powf(eta),
            Self::ParabolaExterior { a, b } => {
                let v = (1.0 + a) * b / 2.0 * t;
                Complex64::new(Self::parabola_vertex(a, b) - v * v / (b * b * (1.0 + a)), v)
            }
            Self::ReciprocalHalfPlane { alpha } => Complex64::new(alpha, t).inv(),
            Self::Disk { center, radius } => center + Complex64::from_polar(radius, theta),
        }
    }
}

impl fmt::Display for DominantRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::HalfPlane { alpha } => write!(f, "half-plane:{alpha}"),
            Self::JanowskiDisk { a, b } => write!(f, "janowski:{a},{b}"),
            Self::Sector { eta } => write!(f, "sector:{eta}"),
            Self::Lemniscate { eta } => write!(f, "lemniscate:{eta}"),
            Self::ParabolaExterior { a, b } => write!(f, "parabola:{a},{b}"),
            Self::ReciprocalHalfPlane { alpha } => write!(f, "reciprocal:{alpha}"),
            Self::Disk { center, radius } => write!(f, "disk:{},{},{radius}", center.re, center.im),
        }
    }
}

impl FromStr for DominantRegion {
    type Err = Error;

    /// `half-plane:alpha`, `janowski:A,B`, `sector:eta`, `lemniscate:eta`,
    /// `parabola:a,b`, `reciprocal:alpha` or `disk:re,im,radius`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, args) = s
            .split_once(':')
            .ok_or_else(|| invalid(format!("region {s:?} needs parameters after ':'")))?;
        match name.trim() {
            "half-plane" => Self::half_plane(parse_numbers(args, 1, name)?[0]),
            "janowski" => {
                let v = parse_numbers(args, 2, name)?;
                Self::janowski(v[0], v[1])
            }
            "sector" => Self::sector(parse_numbers(args, 1, name)?[0]),
            "lemniscate" => Self::lemniscate(parse_numbers(args, 1, name)?[0]),
            "parabola" => {
                let v = parse_numbers(args, 2, name)?;
                Self::parabola_exterior(v[0], v[1])
            }
            "reciprocal" => Self::reciprocal_half_plane(parse_numbers(args, 1, name)?[0]),
            "disk" => {
                let v = parse_numbers(args, 3, name)?;
                Self::disk(Complex64::new(v[0], v[1]), v[2])
            }
            _ => Err(invalid(format!("unknown region {name:?}"))),
        }
    }
}

impl Serialize for DominantRegion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DominantRegion {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

// --- Sampling ---------------------------------------------------------------

/// Concentric circles `|z| = r` sampled at evenly spaced angles.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawGrid")]
pub struct SamplingGrid {
    radii: Vec<f64>,
    angular_samples: usize,
}

#[derive(Deserialize)]
struct RawGrid {
    radii: Vec<f64>,
    angular_samples: usize,
}

impl TryFrom<RawGrid> for SamplingGrid {
    type Error = Error;

    fn try_from(raw: RawGrid) -> Result<Self> {
        SamplingGrid::new(raw.radii, raw.angular_samples)
    }
}

impl Default for SamplingGrid {
    /// Radii `0.10, 0.15, ..., 0.95` with 720 angles each.
    fn default() -> Self {
        Self { radii: (2..=19).map(|k| k as f64 / 20.0).collect(), angular_samples: 720 }
    }
}

impl SamplingGrid {
    pub fn new(radii: Vec<f64>, angular_samples: usize) -> Result<Self> {
        if radii.is_empty() || radii.iter().any(|r| !(*r > 0.0 && *r < 1.0)) {
            return Err(invalid(format!("grid radii must lie in (0, 1), got {radii:?}")));
        }
        if angular_samples < 16 {
            return Err(invalid(format!("need at least 16 angles per circle, got {angular_samples}")));
        }
        Ok(Self { radii, angular_samples })
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn angular_samples(&self) -> usize {
        self.angular_samples
    }

    pub fn len(&self) -> usize {
        self.radii.len() * self.angular_samples
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All sample points, circle by circle.
    pub fn points(&self) -> Vec<Complex64> {
        let step = 2.0 * PI / self.angular_samples as f64;
        let unit: Vec<Complex64> =
            (0..self.angular_samples).map(|k| Complex64::from_polar(1.0, step * k as f64)).collect();
        self.radii.iter().flat_map(|&r| unit.iter().map(move |u| u * r)).collect()
    }
}

/// The sample with the smallest margin.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct WorstSample {
    #[serde(with = "pair")]
    pub z: Complex64,
    #[serde(with = "pair")]
    pub w: Complex64,
    pub margin: f64,
}

mod pair {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(c: &Complex64, s: S) -> Result<S::Ok, S::Error> {
        [c.re, c.im].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Complex64, D::Error> {
        let [re, im] = <[f64; 2]>::deserialize(d)?;
        Ok(Complex64::new(re, im))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubordinationVerdict {
    pub holds: bool,
    pub worst: Option<WorstSample>,
    pub branch_risk: usize,
}

impl SubordinationVerdict {
    /// Smallest margin seen, `-inf` if every sample was set aside.
    pub fn margin(&self) -> f64 {
        self.worst.map_or(f64::NEG_INFINITY, |w| w.margin)
    }
}

/// A membership test: `(margin, branch_risk)` for a value `w`.
pub trait Membership: Sync {
    fn margin_at(&self, w: Complex64) -> (f64, bool);
}

impl Membership for DominantRegion {
    fn margin_at(&self, w: Complex64) -> (f64, bool) {
        (self.contains(w).1, self.branch_risk(w))
    }
}

/// Samples `value` at each grid point and tests it against `region`.
///
/// The verdict holds when no sample is a branch risk and the smallest margin
/// exceeds `-tolerance::REGION`. Branch-risk samples do not enter the margin;
/// they lie outside the regions that can produce them, so any of them makes
/// the verdict fail.
pub fn sample_verdict(points: &[Complex64], value: impl Fn(Complex64) -> Complex64, region: &dyn Membership) -> SubordinationVerdict {
    let mut worst: Option<WorstSample> = None;
    let mut branch_risk = 0;
    for &z in points {
        let w = value(z);
        let (margin, risky) = region.margin_at(w);
        if risky {
            branch_risk += 1;
            continue;
        }
        // NaN margins must count as the worst possible.
        let margin = if margin.is_nan() { f64::NEG_INFINITY } else { margin };
        if worst.is_none_or(|cur| margin < cur.margin) {
            worst = Some(WorstSample { z, w, margin });
        }
    }
    let holds = branch_risk == 0 && worst.is_some_and(|w| w.margin > -tolerance::REGION);
    SubordinationVerdict { holds, worst, branch_risk }
}

fn check_unit_constant(q: &TruncatedSeries) -> Result<()> {
    let c0 = q.coeff(0);
    if q.base_power() != 0 || (c0 - 1.0).norm() > tolerance::CONSTANT_TERM {
        return Err(Error::NotUnitNormalized { base: q.base_power(), constant: c0.to_string() });
    }
    Ok(())
}

/// Sampled test of `q ≺ psi` where `psi(U)` is `region` and `psi(0) = 1`.
pub fn subordinate_to(q: &TruncatedSeries, region: &DominantRegion, grid: &SamplingGrid) -> Result<SubordinationVerdict> {
    check_unit_constant(q)?;
    Ok(sample_verdict(&grid.points(), |z| q.eval(z), region))
}

// --- Closed curves ----------------------------------------------------------

/// The inside of a closed polygonal curve, by winding number.
///
/// `center` is a point known to be inside with `inner_radius` its distance to
/// the curve; samples within that disk are accepted without walking the
/// curve.
#[derive(Clone, Debug)]
pub struct CurveRegion {
    points: Vec<Complex64>,
    center: Complex64,
    inner_radius: f64,
}

fn segment_distance(a: Complex64, b: Complex64, w: Complex64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    let t = if len2 == 0.0 { 0.0 } else { (((w - a) * ab.conj()).re / len2).clamp(0.0, 1.0) };
    (a + ab * t - w).norm()
}

impl CurveRegion {
    /// Samples `curve(theta)` at `n` evenly spaced angles of `[0, 2 pi)`.
    pub fn from_fn(n: usize, center: Complex64, curve: impl Fn(f64) -> Complex64) -> Self {
        let step = 2.0 * PI / n as f64;
        let points: Vec<Complex64> = (0..n).map(|k| curve(step * k as f64)).collect();
        let mut region = Self { points, center, inner_radius: 0.0 };
        if region.winding_number(center) != 0 {
            region.inner_radius = region.distance(center);
        }
        region
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    pub fn inner_radius(&self) -> f64 {
        self.inner_radius
    }

    fn edges(&self) -> impl Iterator<Item = (Complex64, Complex64)> + '_ {
        self.points.iter().copied().zip(self.points.iter().copied().cycle().skip(1))
    }

    pub fn winding_number(&self, w: Complex64) -> i32 {
        let mut wn = 0;
        for (a, b) in self.edges() {
            let side = (b - a).re * (w - a).im - (w - a).re * (b - a).im;
            if a.im <= w.im {
                if b.im > w.im && side > 0.0 {
                    wn += 1;
                }
            } else if b.im <= w.im && side < 0.0 {
                wn -= 1;
            }
        }
        wn
    }

    pub fn distance(&self, w: Complex64) -> f64 {
        self.edges().map(|(a, b)| segment_distance(a, b, w)).fold(f64::INFINITY, f64::min)
    }

    pub fn contains(&self, w: Complex64) -> (bool, f64) {
        let near = (w - self.center).norm();
        if near < self.inner_radius {
            return (true, self.inner_radius - near);
        }
        let d = self.distance(w);
        if self.winding_number(w) != 0 {
            (true, d)
        } else {
            (false, -d)
        }
    }
}

impl Membership for CurveRegion {
    fn margin_at(&self, w: Complex64) -> (f64, bool) {
        (self.contains(w).1, false)
    }
}

// --- Function classes -------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum ClassId {
    /// `Re f(z)/z > alpha`.
    R { alpha: f64 },
    /// `Re zf'/f > alpha`.
    Starlike { alpha: f64 },
    /// `Re f/(zf') > alpha`.
    ReciprocalStarlike { alpha: f64 },
    /// `zf'/f ≺ (1 + A z)/(1 + B z)`.
    Janowski { a: f64, b: f64 },
    /// `|arg zf'/f| < eta pi / 2`.
    StronglyStarlike { eta: f64 },
    /// `|(zf'/f)^(1/eta) - 1| < 1`.
    Lemniscate { eta: f64 },
}

impl ClassId {
    /// Builds a class from its short name (`R`, `S*`, `Sr*`, `S*[A,B]`, `SS*`,
    /// `SL`) and parameters; omitted parameters take their usual defaults.
    pub fn from_parts(name: &str, params: &[f64]) -> Result<Self> {
        let one = |default: f64| match params {
            [] => Ok(default),
            [x] => Ok(*x),
            _ => Err(invalid(format!("class {name} takes one parameter, got {}", params.len()))),
        };
        let order = |alpha: f64| {
            if (0.0..1.0).contains(&alpha) {
                Ok(alpha)
            } else {
                Err(invalid(format!("class {name} needs 0 <= alpha < 1, got {alpha}")))
            }
        };
        let class = match name.trim() {
            "R" => Self::R { alpha: order(one(0.0)?)? },
            "S*" => Self::Starlike { alpha: order(one(0.0)?)? },
            "Sr*" => Self::ReciprocalStarlike { alpha: order(one(0.0)?)? },
            "S*[A,B]" => match params {
                [a, b] => {
                    DominantRegion::janowski(*a, *b)?;
                    Self::Janowski { a: *a, b: *b }
                }
                _ => return Err(invalid(format!("class S*[A,B] takes A and B, got {params:?}"))),
            },
            "SS*" => {
                let eta = one(1.0)?;
                if !(eta > 0.0 && eta <= 1.0) {
                    return Err(invalid(format!("class SS* needs 0 < eta <= 1, got {eta}")));
                }
                Self::StronglyStarlike { eta }
            }
            "SL" => {
                let eta = one(0.5)?;
                DominantRegion::lemniscate(eta)?;
                Self::Lemniscate { eta }
            }
            other => return Err(Error::UnknownId(format!("class {other}"))),
        };
        Ok(class)
    }

    /// The region the defining functional must map into.
    pub fn region(&self) -> DominantRegion {
        let region = match *self {
            Self::R { alpha } | Self::Starlike { alpha } => DominantRegion::half_plane(alpha),
            Self::ReciprocalStarlike { alpha } => DominantRegion::reciprocal_half_plane(alpha),
            Self::Janowski { a, b } => DominantRegion::janowski(a, b),
            Self::StronglyStarlike { eta } => DominantRegion::sector(eta),
            Self::Lemniscate { eta } => DominantRegion::lemniscate(eta),
        };
        region.expect("class parameters were validated on construction")
    }
}

impl FromStr for ClassId {
    type Err = Error;

    /// `NAME` or `NAME:x[,y]`, e.g. `S*:0.6` or `S*[A,B]:0.5,-0.5`.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(':') {
            None => Self::from_parts(s, &[]),
            Some((name, args)) => {
                let params: std::result::Result<Vec<f64>, _> =
                    args.split(',').map(|x| x.trim().parse::<f64>()).collect();
                let params = params.map_err(|_| invalid(format!("bad class parameters in {s:?}")))?;
                Self::from_parts(name, &params)
            }
        }
    }
}

/// Tests a normalized `f(z) = z + ...` against a class by forming its defining
/// functional (`f/z`, `zf'/f`) as a series and sampling it.
pub fn class_check(f: &TruncatedSeries, class: &ClassId, grid: &SamplingGrid) -> Result<SubordinationVerdict> {
    if f.base_power() != 1 {
        return Err(Error::BasePowerMismatch(1, f.base_power()));
    }
    if !f.is_normalized() {
        return Err(Error::NotUnitNormalized { base: 1, constant: f.leading().to_string() });
    }
    let points = grid.points();
    let functional = match class {
        ClassId::R { .. } => f.shift_down(1)?,
        _ => {
            let df = f.z_derivative();
            for &z in &points {
                if f.eval(z).norm() < tolerance::GRID_ZERO || df.eval(z).norm() < tolerance::GRID_ZERO {
                    return Err(Error::ZeroOnGrid(z.to_string()));
                }
            }
            df.divide(f)?
        }
    };
    check_unit_constant(&functional)?;
    Ok(sample_verdict(&points, |z| functional.eval(z), &class.region()))
}

// --- Boundary curves and constants ------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundaryPoint {
    pub theta: f64,
    pub u: f64,
    pub v: f64,
}

/// `n` boundary samples at `theta_k = -pi + pi (2k + 1) / n`; odd `n` includes
/// `theta = 0`.
pub fn boundary_curve(region: &DominantRegion, n: usize) -> Result<Vec<BoundaryPoint>> {
    if n < 2 {
        return Err(invalid(format!("need at least 2 boundary points, got {n}")));
    }
    Ok((0..n)
        .map(|k| {
            // Integer numerator so the middle sample of an odd count is exactly 0.
            let theta = PI * (2 * k as i64 + 1 - n as i64) as f64 / n as f64;
            let w = region.boundary_point(theta);
            BoundaryPoint { theta, u: w.re, v: w.im }
        })
        .collect())
}

/// CSV with a `theta,u,v` header; floats use the shortest exact representation.
pub fn boundary_csv(points: &[BoundaryPoint]) -> String {
    let mut out = String::from("theta,u,v\n");
    for p in points {
        out.push_str(&format!("{:?},{:?},{:?}\n", p.theta, p.u, p.v));
    }
    out
}

/// `k(theta) = |h(e^{i theta})|^2` for `h(z) = sqrt(1+z) + z / (2 sqrt(1+z))`,
/// which simplifies to `(13 + 12 cos theta) / (8 cos(theta/2))`.
pub fn k_theta(theta: f64) -> f64 {
    (13.0 + 12.0 * theta.cos()) / (8.0 * (theta / 2.0).cos())
}

/// Search tolerance for the boundary minimizations.
const SEARCH_TOL: f64 = 1e-10;

/// Minimizer and minimum of `k` on `(-pi, pi)`.
///
/// `k` is even with two symmetric minima, so the search runs on `[0, pi)`
/// where it is unimodal (`k = 1/(8c) + 3c` with `c = cos(theta/2)` convex).
/// The minimum `sqrt(3/2)` sits at `theta = 2 arccos(sqrt(1/24))`.
pub fn min_boundary_modulus_squared_k() -> (f64, f64) {
    golden_section(k_theta, 0.0, PI, SEARCH_TOL)
}

/// Minimizer and minimum of `|z / (2 sqrt(1+z))|` over the unit circle, the
/// radius of the largest disk about 0 inside the image of that function.
pub fn lemniscate_bound_i() -> (f64, f64) {
    let h = |theta: f64| {
        let z = Complex64::from_polar(1.0, theta);
        (z / (2.0 * (1.0 + z).sqrt())).norm()
    };
    golden_section(h, -PI / 2.0, PI / 2.0, SEARCH_TOL)
}

/// The sector bound `delta` and its numerical confirmation.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArgBound {
    /// `eta + 1 - (2/pi) arctan(b / eta)`.
    pub delta: f64,
    /// `(2/pi) min arg h(e^{i theta})` found by search.
    pub numeric: f64,
    pub theta_min: f64,
}

impl ArgBound {
    pub fn agrees(&self, tol: f64) -> bool {
        (self.delta - self.numeric).abs() <= tol
    }
}

/// `delta` for `h(z) = (b + 2 eta z / (1 - z^2)) ((1+z)/(1-z))^eta`, the
/// smallest opening `|arg w| < delta pi / 2` contained in `h(U)`.
pub fn min_arg_bound_b(b: f64, eta: f64) -> Result<ArgBound> {
    if !(eta > 0.0 && eta <= 1.0) {
        return Err(invalid(format!("sector bound needs 0 < eta <= 1, got {eta}")));
    }
    if !(b >= 0.0) {
        return Err(invalid(format!("sector bound needs a non-negative coefficient, got {b}")));
    }
    let delta = eta + 1.0 - 2.0 / PI * (b / eta).atan();
    // Continuous branch of arg h on the upper half circle: the two factors
    // stay in the closed right half-plane and the upper half-plane.
    let arg_h = |theta: f64| {
        let z = Complex64::from_polar(1.0, theta);
        let first = b + 2.0 * eta * z / (1.0 - z * z);
        first.arg() + eta * ((1.0 + z) / (1.0 - z)).arg()
    };
    let (theta_min, min_arg) = golden_section(arg_h, 1e-6, PI - 1e-6, SEARCH_TOL);
    Ok(ArgBound { delta, numeric: 2.0 * min_arg / PI, theta_min })
}

/// [`min_arg_bound_b`] with `b = 2 mu - nu`.
pub fn min_arg_bound(mu: f64, nu: f64, eta: f64) -> Result<ArgBound> {
    if 2.0 * mu < nu {
        return Err(invalid(format!("sector bound needs 2 mu >= nu, got mu = {mu}, nu = {nu}")));
    }
    min_arg_bound_b(2.0 * mu - nu, eta)
}

/// `(2 b alpha - (1 - alpha)) / 2`, the vertex abscissa of the parabola
/// bounding `h(U)` for `h(z) = b (1 + a z)/(1 - z) + (1 + a) z/(1 - z)^2`,
/// `a = 1 - 2 alpha`.
pub fn parabola_threshold_b(alpha: f64, b: f64) -> f64 {
    (2.0 * b * alpha - (1.0 - alpha)) / 2.0
}

/// [`parabola_threshold_b`] with `b = 2 mu - nu`.
pub fn parabola_threshold(alpha: f64, mu: f64, nu: f64) -> f64 {
    parabola_threshold_b(alpha, 2.0 * mu - nu)
}

/// Largest `Re h(e^{i theta})` over `theta` in `(0, pi]`, found by search;
/// it is attained at `theta = pi`.
pub fn parabola_threshold_numeric(alpha: f64, b: f64) -> (f64, f64) {
    let a = 1.0 - 2.0 * alpha;
    let re_h = |theta: f64| {
        let z = Complex64::from_polar(1.0, theta);
        (b * (1.0 + a * z) / (1.0 - z) + (1.0 + a) * z / (1.0 - z).powu(2)).re
    };
    golden_section_max(re_h, 0.1, PI, SEARCH_TOL)
}
