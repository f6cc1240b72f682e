//! Constant-curvature trigonometry.
//!
//! Solvers work in any [`Real`] type and accept angles either as exact
//! rational multiples of π ([`AngleQ`]) or as raw radians. Lengths are
//! returned in units of the requested curvature `K`; internally every
//! formula is evaluated at `K = ∓1` and rescaled by `1/√|K|`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{Float, FloatConst};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Floating-point scalar used by the numeric modules.
pub trait Real: Float + FloatConst + fmt::Debug + Send + Sync + 'static {}

impl<T: Float + FloatConst + fmt::Debug + Send + Sync + 'static> Real for T {}

fn lit<F: Real>(v: f64) -> F {
    F::from(v).expect("literal representable in every Real")
}

/// Rational angle `num·π/den`, kept in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AngleQ {
    num: u64,
    den: u64,
}

impl AngleQ {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if num == 0 || den == 0 {
            return Err(Error::domain(format!(
                "angle {num}/{den}·π must have positive numerator and denominator"
            )));
        }
        let g = num.gcd(&den);
        Ok(AngleQ {
            num: num / g,
            den: den / g,
        })
    }

    /// Angle from an integer number of degrees.
    pub fn from_degrees(deg: u64) -> Result<Self> {
        Self::new(deg, 180)
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn radians<F: Real>(&self) -> F {
        F::PI() * lit::<F>(self.num as f64) / lit::<F>(self.den as f64)
    }

    /// Degree measure as a reduced fraction `(p, q)` meaning `p/q` degrees.
    pub fn degrees(&self) -> (u64, u64) {
        let p = self.num * 180;
        let g = p.gcd(&self.den);
        (p / g, self.den / g)
    }

    pub fn plus(&self, other: &AngleQ) -> AngleQ {
        AngleQ::new(
            self.num * other.den + other.num * self.den,
            self.den * other.den,
        )
        .expect("sum of positive angles is positive")
    }
}

impl fmt::Display for AngleQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Parses `p/q` (meaning `p·π/q`) or a bare integer `p` (meaning `p·π`).
impl FromStr for AngleQ {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad angle `{s}`; expected p/q meaning p·π/q"));
        let (n, d) = match s.trim().split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n: u64 = n.parse().map_err(|_| bad())?;
        let d: u64 = d.parse().map_err(|_| bad())?;
        AngleQ::new(n, d)
    }
}

/// Angle input accepted by the solvers.
pub trait IntoRadians<F> {
    fn into_radians(self) -> F;
}

impl<F: Real> IntoRadians<F> for AngleQ {
    fn into_radians(self) -> F {
        self.radians()
    }
}

impl IntoRadians<f64> for f64 {
    fn into_radians(self) -> f64 {
        self
    }
}

impl IntoRadians<f32> for f32 {
    fn into_radians(self) -> f32 {
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Geometry {
    Hyperbolic,
    Spherical,
}

impl fmt::Display for Geometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Geometry::Hyperbolic => "hyperbolic",
            Geometry::Spherical => "spherical",
        })
    }
}

/// Constant Gaussian curvature; the sign selects the geometry.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Curvature<F>(F);

impl<F: Real> Curvature<F> {
    pub fn new(k: F) -> Result<Self> {
        if !k.is_finite() || k.is_zero() {
            return Err(Error::domain(format!("curvature must be finite and nonzero, got {k:?}")));
        }
        Ok(Curvature(k))
    }

    pub fn hyperbolic_unit() -> Self {
        Curvature(-F::one())
    }

    pub fn spherical_unit() -> Self {
        Curvature(F::one())
    }

    /// `K = −(arccosh(1+√2))²`, where the equiangular triangle with angles
    /// π/4 has unit sides.
    pub fn unit_quarter_pi_triangle() -> Self {
        let s = acosh_stable(F::one() + F::SQRT_2());
        Curvature(-(s * s))
    }

    /// `K = π²/4`, where the regular right-angled spherical triangle has
    /// unit sides.
    pub fn unit_right_spherical_triangle() -> Self {
        Curvature(F::PI() * F::PI() / lit(4.0))
    }

    pub fn value(&self) -> F {
        self.0
    }

    pub fn geometry(&self) -> Geometry {
        if self.0 < F::zero() {
            Geometry::Hyperbolic
        } else {
            Geometry::Spherical
        }
    }

    /// Factor `1/√|K|` converting unit-curvature lengths to this curvature.
    pub fn length_scale(&self) -> F {
        F::one() / self.0.abs().sqrt()
    }

    fn require(&self, g: Geometry) -> Result<()> {
        if self.geometry() != g {
            return Err(Error::domain(format!(
                "{g} solver needs {} curvature, got {:?}",
                if g == Geometry::Hyperbolic { "negative" } else { "positive" },
                self.0
            )));
        }
        Ok(())
    }
}

/// `arccosh` written as `ln1p(t + √(t(t+2)))` with `t = x − 1`, which keeps
/// full relative accuracy for arguments close to 1. Returns NaN for `x < 1`.
pub fn acosh_stable<F: Real>(x: F) -> F {
    let t = x - F::one();
    if t < F::zero() {
        return F::nan();
    }
    (t + (t * (t + lit(2.0))).sqrt()).ln_1p()
}

fn checked_acosh<F: Real>(x: F, what: &str) -> Result<F> {
    let tol = lit::<F>(1e-12);
    if !x.is_finite() || x < F::one() - tol {
        return Err(Error::domain(format!("{what}: arccosh argument {x:?} < 1")));
    }
    Ok(acosh_stable(x.max(F::one())))
}

/// Solution of a triangle; side `i` is opposite angle `i`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TriangleSol<F> {
    pub angles: [F; 3],
    pub sides: [F; 3],
    pub geometry: Geometry,
}

impl<F: Real> TriangleSol<F> {
    pub fn angle_sum(&self) -> F {
        self.angles[0] + self.angles[1] + self.angles[2]
    }

    /// Largest spread of `sinh(side)/sin(angle)` (hyperbolic) or
    /// `sin(side)/sin(angle)` (spherical), relative to the largest ratio.
    /// Sides are taken in unit curvature, so pass the curvature used.
    pub fn law_of_sines_residual(&self, k: Curvature<F>) -> F {
        let unit = F::one() / k.length_scale();
        let ratios: Vec<F> = (0..3)
            .map(|i| {
                let s = self.sides[i] * unit;
                let num = match self.geometry {
                    Geometry::Hyperbolic => s.sinh(),
                    Geometry::Spherical => s.sin(),
                };
                num / self.angles[i].sin()
            })
            .collect();
        let hi = ratios.iter().copied().fold(F::neg_infinity(), F::max);
        let lo = ratios.iter().copied().fold(F::infinity(), F::min);
        (hi - lo) / hi.abs()
    }

    /// Angles recomputed from the sides by the first law of cosines.
    pub fn angles_from_sides(&self, k: Curvature<F>) -> [F; 3] {
        let unit = F::one() / k.length_scale();
        let s: Vec<F> = self.sides.iter().map(|&x| x * unit).collect();
        let mut out = [F::zero(); 3];
        for (i, slot) in out.iter_mut().enumerate() {
            let (a, b, c) = (s[i], s[(i + 1) % 3], s[(i + 2) % 3]);
            let cos = match self.geometry {
                Geometry::Hyperbolic => (b.cosh() * c.cosh() - a.cosh()) / (b.sinh() * c.sinh()),
                Geometry::Spherical => (a.cos() - b.cos() * c.cos()) / (b.sin() * c.sin()),
            };
            *slot = cos.max(-F::one()).min(F::one()).acos();
        }
        out
    }
}

fn check_angle<F: Real>(a: F, name: &str) -> Result<()> {
    if !(a > F::zero() && a < F::PI()) {
        return Err(Error::domain(format!("angle {name} = {a:?} must lie in (0, π)")));
    }
    Ok(())
}

fn near_pi_tol<F: Real>() -> F {
    F::PI() * lit(1e-12)
}

/// Sides from three angles by the second hyperbolic law of cosines.
pub fn solve_hyperbolic_from_angles<F, A>(alpha: A, beta: A, gamma: A, k: Curvature<F>) -> Result<TriangleSol<F>>
where
    F: Real,
    A: IntoRadians<F>,
{
    k.require(Geometry::Hyperbolic)?;
    let angles = [alpha.into_radians(), beta.into_radians(), gamma.into_radians()];
    for (a, n) in angles.iter().zip(["α", "β", "γ"]) {
        check_angle(*a, n)?;
    }
    let sum = angles[0] + angles[1] + angles[2];
    if sum >= F::PI() - near_pi_tol() {
        return Err(Error::domain(format!(
            "angle sum {sum:?} ≥ π: no hyperbolic triangle (Euclidean or spherical regime)"
        )));
    }
    let mut sides = [F::zero(); 3];
    for (i, side) in sides.iter_mut().enumerate() {
        let (opp, p, q) = (angles[i], angles[(i + 1) % 3], angles[(i + 2) % 3]);
        let ch = (p.cos() * q.cos() + opp.cos()) / (p.sin() * q.sin());
        *side = checked_acosh(ch, "second law of cosines")? * k.length_scale();
    }
    Ok(TriangleSol {
        angles,
        sides,
        geometry: Geometry::Hyperbolic,
    })
}

/// Sides from three angles by the second spherical law of cosines.
pub fn solve_spherical_from_angles<F, A>(alpha: A, beta: A, gamma: A, k: Curvature<F>) -> Result<TriangleSol<F>>
where
    F: Real,
    A: IntoRadians<F>,
{
    k.require(Geometry::Spherical)?;
    let angles = [alpha.into_radians(), beta.into_radians(), gamma.into_radians()];
    for (a, n) in angles.iter().zip(["α", "β", "γ"]) {
        check_angle(*a, n)?;
    }
    let [a, b, c] = angles;
    let tol = near_pi_tol::<F>();
    if a + b + c <= F::PI() + tol {
        return Err(Error::domain("spherical triangle needs angle sum > π"));
    }
    if a + b - c >= F::PI() - tol || b + c - a >= F::PI() - tol || c + a - b >= F::PI() - tol {
        return Err(Error::domain(
            "spherical triangle needs α+β−γ, β+γ−α, γ+α−β each < π",
        ));
    }
    let mut sides = [F::zero(); 3];
    for (i, side) in sides.iter_mut().enumerate() {
        let (opp, p, q) = (angles[i], angles[(i + 1) % 3], angles[(i + 2) % 3]);
        let cs = (p.cos() * q.cos() + opp.cos()) / (p.sin() * q.sin());
        if cs.abs() > F::one() + lit(1e-12) {
            return Err(Error::domain(format!("cos(side) = {cs:?} outside [−1, 1]")));
        }
        *side = cs.max(-F::one()).min(F::one()).acos() * k.length_scale();
    }
    Ok(TriangleSol {
        angles,
        sides,
        geometry: Geometry::Spherical,
    })
}

/// Finite side of a triangle whose third vertex is ideal:
/// `cosh c = (1 + cos α cos β)/(sin α sin β)`.
pub fn solve_ideal_vertex<F, A>(alpha: A, beta: A, k: Curvature<F>) -> Result<F>
where
    F: Real,
    A: IntoRadians<F>,
{
    k.require(Geometry::Hyperbolic)?;
    let (a, b) = (alpha.into_radians(), beta.into_radians());
    check_angle(a, "α")?;
    check_angle(b, "β")?;
    if a + b >= F::PI() - near_pi_tol() {
        return Err(Error::domain(format!(
            "α + β = {:?} ≥ π: no triangle with an ideal vertex",
            a + b
        )));
    }
    let ch = (F::one() + a.cos() * b.cos()) / (a.sin() * b.sin());
    Ok(checked_acosh(ch, "ideal vertex")? * k.length_scale())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PolygonMetrics<F> {
    pub side: F,
    pub circumradius: F,
    pub apothem: F,
}

/// Regular hyperbolic `n`-gon with interior angle `theta`, from the right
/// triangle formed by the centre, a vertex and the adjacent edge midpoint
/// (angles `θ/2`, `π/n`, `π/2`).
pub fn regular_polygon_metrics<F, A>(n: u32, theta: A, k: Curvature<F>) -> Result<PolygonMetrics<F>>
where
    F: Real,
    A: IntoRadians<F>,
{
    k.require(Geometry::Hyperbolic)?;
    if n < 3 {
        return Err(Error::domain(format!("a polygon needs n ≥ 3 sides, got {n}")));
    }
    let theta = theta.into_radians();
    let nf = lit::<F>(n as f64);
    let limit = (nf - lit(2.0)) * F::PI() / nf;
    if !(theta > F::zero() && theta < limit - limit * lit(1e-12)) {
        return Err(Error::domain(format!(
            "interior angle {theta:?} must lie in (0, (n−2)π/n = {limit:?})"
        )));
    }
    let half = theta / lit(2.0);
    let central = F::PI() / nf;
    let r = checked_acosh(F::one() / (half.tan() * central.tan()), "circumradius")?;
    let s = checked_acosh(central.cos() / half.sin(), "half side")?;
    let ap = checked_acosh(half.cos() / central.sin(), "apothem")?;
    let scale = k.length_scale();
    Ok(PolygonMetrics {
        side: lit::<F>(2.0) * s * scale,
        circumradius: r * scale,
        apothem: ap * scale,
    })
}

/// Triangle from two sides `x`, `y` and the included angle `gamma`; the
/// result has `sides = [x, y, c]` and `angles = [α, β, γ]`.
pub fn solve_triangle_sas<F, A>(x: F, gamma: A, y: F, k: Curvature<F>) -> Result<TriangleSol<F>>
where
    F: Real,
    A: IntoRadians<F>,
{
    k.require(Geometry::Hyperbolic)?;
    let gamma = gamma.into_radians();
    if !(x > F::zero() && y > F::zero() && x.is_finite() && y.is_finite()) {
        return Err(Error::domain(format!("sides must be positive, got {x:?}, {y:?}")));
    }
    check_angle(gamma, "γ")?;
    let unit = F::one() / k.length_scale();
    let (a, b) = (x * unit, y * unit);
    let ch = a.cosh() * b.cosh() - a.sinh() * b.sinh() * gamma.cos();
    let c = checked_acosh(ch, "first law of cosines")?;
    let angle = |opp: F, p: F| {
        let cos = p.cosh() * c.cosh() - opp.cosh();
        let sin = opp.sinh() * gamma.sin() * p.sinh();
        // both scaled by sinh p · sinh c
        sin.atan2(cos)
    };
    let alpha = angle(a, b);
    let beta = angle(b, a);
    Ok(TriangleSol {
        angles: [alpha, beta, gamma],
        sides: [x, y, c * k.length_scale()],
        geometry: Geometry::Hyperbolic,
    })
}

/// Quadrilateral `ABCD` glued from triangles `ABD` and `BCD` along the
/// diagonal `BD` of length `e`. Sides are `a = AB`, `b = BC`, `c = CD`,
/// `d = DA`; `β = β₁ + β₂` at `B` and `δ = δ₁ + δ₂` at `D`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadSample<F> {
    pub a: F,
    pub b: F,
    pub c: F,
    pub d: F,
    pub e: F,
    pub alpha: F,
    pub beta1: F,
    pub beta2: F,
    pub gamma: F,
    pub delta1: F,
    pub delta2: F,
}

impl<F: Real> QuadSample<F> {
    /// `cos β`.
    pub fn w(&self) -> F {
        (self.beta1 + self.beta2).cos()
    }

    /// `cos δ`.
    pub fn x(&self) -> F {
        (self.delta1 + self.delta2).cos()
    }

    /// Worst first-law-of-cosines residual over both glued triangles (unit
    /// curvature).
    pub fn law_of_cosines_residual(&self) -> F {
        let res = |p: F, q: F, opp: F, ang: F| {
            (opp.cosh() - (p.cosh() * q.cosh() - p.sinh() * q.sinh() * ang.cos())).abs() / opp.cosh()
        };
        [
            res(self.a, self.e, self.d, self.beta1),
            res(self.a, self.d, self.e, self.alpha),
            res(self.e, self.d, self.a, self.delta1),
            res(self.b, self.e, self.c, self.beta2),
            res(self.b, self.c, self.e, self.gamma),
            res(self.e, self.c, self.b, self.delta2),
        ]
        .into_iter()
        .fold(F::zero(), F::max)
    }
}

/// Sampling ranges for [`sample_quadrilateral`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadRanges {
    pub length: (f64, f64),
    pub angle: (f64, f64),
}

impl Default for QuadRanges {
    fn default() -> Self {
        QuadRanges {
            length: (0.1, 1.5),
            angle: (0.05, std::f64::consts::FRAC_PI_2),
        }
    }
}

fn draw_quad(rng: &mut ChaCha8Rng, ranges: &QuadRanges) -> QuadSample<f64> {
    let (lo, hi) = ranges.length;
    let (alo, ahi) = ranges.angle;
    let a = rng.random_range(lo..hi);
    let b = rng.random_range(lo..hi);
    let e = rng.random_range(lo..hi);
    let beta1 = rng.random_range(alo..ahi);
    let beta2 = rng.random_range(alo..ahi);
    let k = Curvature::hyperbolic_unit();
    let abd = solve_triangle_sas(a, beta1, e, k).expect("sampled SAS data is valid");
    let bcd = solve_triangle_sas(b, beta2, e, k).expect("sampled SAS data is valid");
    QuadSample {
        a,
        b,
        c: bcd.sides[2],
        d: abd.sides[2],
        e,
        alpha: abd.angles[1],
        beta1,
        beta2,
        gamma: bcd.angles[1],
        delta1: abd.angles[0],
        delta2: bcd.angles[0],
    }
}

/// Deterministic glued quadrilateral for a seed (unit curvature).
pub fn sample_quadrilateral(seed: u64, ranges: &QuadRanges) -> QuadSample<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    draw_quad(&mut rng, ranges)
}

/// `count` quadrilaterals from one seeded stream.
pub fn sample_quadrilaterals(seed: u64, count: usize, ranges: &QuadRanges) -> Vec<QuadSample<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| draw_quad(&mut rng, ranges)).collect()
}

/// `count` triangles from SAS data with `a, b` in `lengths` and `γ` in
/// `(0.05, π − 0.05)`, unit curvature.
pub fn sample_triangles(seed: u64, count: usize, lengths: (f64, f64)) -> Vec<TriangleSol<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = Curvature::hyperbolic_unit();
    (0..count)
        .map(|_| {
            let a = rng.random_range(lengths.0..lengths.1);
            let b = rng.random_range(lengths.0..lengths.1);
            let g = rng.random_range(0.05..std::f64::consts::PI - 0.05);
            solve_triangle_sas(a, g, b, k).expect("sampled SAS data is valid")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn q(n: u64, d: u64) -> AngleQ {
        AngleQ::new(n, d).unwrap()
    }

    #[test]
    fn angle_parsing_and_reduction() {
        assert_eq!("2/8".parse::<AngleQ>().unwrap(), q(1, 4));
        assert_eq!(AngleQ::from_degrees(60).unwrap(), q(1, 3));
        assert_eq!(q(1, 12).degrees(), (15, 1));
        assert!("0/3".parse::<AngleQ>().is_err());
        assert!("x/3".parse::<AngleQ>().is_err());
    }

    #[test]
    fn equiangular_quarter_pi() {
        let sol = solve_hyperbolic_from_angles(q(1, 4), q(1, 4), q(1, 4), Curvature::<f64>::hyperbolic_unit()).unwrap();
        for s in sol.sides {
            assert_relative_eq!(s, (1.0 + 2f64.sqrt()).acosh(), max_relative = 1e-14);
            assert!((s - 1.528571).abs() < 1e-6);
        }
        let k = Curvature::<f64>::unit_quarter_pi_triangle();
        assert!((k.value() + 2.336529).abs() < 1e-6);
        let sol = solve_hyperbolic_from_angles(q(1, 4), q(1, 4), q(1, 4), k).unwrap();
        for s in sol.sides {
            assert!((s - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn euclidean_limit_rejected() {
        let r = solve_hyperbolic_from_angles(q(1, 3), q(1, 3), q(1, 3), Curvature::<f64>::hyperbolic_unit());
        assert!(matches!(r, Err(Error::Domain(_))));
        let r = solve_hyperbolic_from_angles(q(1, 4), q(1, 4), q(1, 4), Curvature::<f64>::spherical_unit());
        assert!(matches!(r, Err(Error::Domain(_))));
    }

    #[test]
    fn spherical_octant() {
        let sol = solve_spherical_from_angles(q(1, 2), q(1, 2), q(1, 2), Curvature::<f64>::spherical_unit()).unwrap();
        for s in sol.sides {
            assert!((s - PI / 2.0).abs() < 1e-12);
        }
        let k = Curvature::<f64>::unit_right_spherical_triangle();
        assert!((k.value() - 2.4674).abs() < 1e-4);
        let sol = solve_spherical_from_angles(q(1, 2), q(1, 2), q(1, 2), k).unwrap();
        for s in sol.sides {
            assert!((s - 1.0).abs() < 1e-12);
        }
        let r = solve_spherical_from_angles(q(1, 6), q(1, 6), q(1, 6), Curvature::<f64>::spherical_unit());
        assert!(matches!(r, Err(Error::Domain(_))));
        // α+β−γ ≥ π
        let r = solve_spherical_from_angles(q(9, 10), q(9, 10), q(1, 2), Curvature::<f64>::spherical_unit());
        assert!(matches!(r, Err(Error::Domain(_))));
    }

    #[test]
    fn ideal_vertex_values() {
        let k = Curvature::<f64>::hyperbolic_unit();
        let c = solve_ideal_vertex(q(1, 4), q(1, 4), k).unwrap();
        assert_relative_eq!(c, 3f64.acosh(), max_relative = 1e-14);
        let c = solve_ideal_vertex(q(1, 3), q(1, 3), k).unwrap();
        assert_relative_eq!(c, 3f64.ln(), max_relative = 1e-14);
        assert!(matches!(solve_ideal_vertex(q(1, 2), q(1, 2), k), Err(Error::Domain(_))));
    }

    #[test]
    fn square_with_sixty_degree_corners() {
        let m = regular_polygon_metrics(4, q(1, 3), Curvature::<f64>::hyperbolic_unit()).unwrap();
        assert_relative_eq!(m.circumradius, 3f64.sqrt().acosh(), max_relative = 1e-13);
        assert_relative_eq!(m.side, 2.0 * 2f64.sqrt().acosh(), max_relative = 1e-13);
        assert_relative_eq!(m.apothem, 1.5f64.sqrt().acosh(), max_relative = 1e-13);
        assert!((m.circumradius - 1.146216).abs() < 1e-6);
        assert!((m.side - 1.762747).abs() < 1e-6);
        assert!((m.apothem - 0.658479).abs() < 1e-6);
        let pyth = m.circumradius.cosh() - (m.side / 2.0).cosh() * m.apothem.cosh();
        assert!(pyth.abs() < 1e-10);
        assert!(matches!(
            regular_polygon_metrics(4, q(1, 2), Curvature::<f64>::hyperbolic_unit()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn triangle_polygon_matches_equiangular_solver() {
        let k = Curvature::<f64>::hyperbolic_unit();
        let m = regular_polygon_metrics(3, q(1, 4), k).unwrap();
        let t = solve_hyperbolic_from_angles(q(1, 4), q(1, 4), q(1, 4), k).unwrap();
        assert_relative_eq!(m.side, t.sides[0], max_relative = 1e-12);
    }

    #[test]
    fn sas_examples() {
        let k = Curvature::<f64>::hyperbolic_unit();
        let t = solve_triangle_sas(1.0, PI / 2.0, 1.0, k).unwrap();
        assert_relative_eq!(t.sides[2], (1f64.cosh().powi(2)).acosh(), max_relative = 1e-14);
        assert!((t.sides[2] - 1.513374).abs() < 1e-6);
        assert_relative_eq!(t.angles[0], t.angles[1], max_relative = 1e-14);
        assert!(t.law_of_sines_residual(k) < 1e-12);
        // shrinking sides approach the Euclidean right isosceles triangle
        let mut last = 0.0;
        for s in [0.8, 0.4, 0.2, 0.1] {
            let t = solve_triangle_sas(s, PI / 2.0, s, k).unwrap();
            let sum = t.angle_sum();
            assert!(sum > 0.0 && sum < PI);
            assert!(sum > last);
            last = sum;
        }
        assert!(PI - last < 0.01);
    }

    #[test]
    fn f32_solvers_compile_and_agree() {
        let t = solve_hyperbolic_from_angles(q(1, 4), q(1, 4), q(1, 4), Curvature::<f32>::hyperbolic_unit()).unwrap();
        assert!((t.sides[0] - 1.528_571f32).abs() < 1e-5);
        let c = solve_ideal_vertex(0.25f32 * std::f32::consts::PI, 0.25 * std::f32::consts::PI, Curvature::<f32>::hyperbolic_unit()).unwrap();
        assert!((c - 3f32.acosh()).abs() < 1e-5);
    }

    #[test]
    fn acosh_near_one() {
        let x = 1.0 + 1e-12;
        let exact = (2e-12f64).sqrt(); // leading-order acosh(1+t) ≈ √(2t)
        assert!((acosh_stable(x) - exact).abs() / exact < 1e-3);
        assert!(acosh_stable(0.5f64).is_nan());
        assert_eq!(acosh_stable(1.0f64), 0.0);
    }

    #[test]
    fn quad_sampler_is_deterministic() {
        let r = QuadRanges::default();
        let a = sample_quadrilateral(7, &r);
        let b = sample_quadrilateral(7, &r);
        assert_eq!(a, b);
        assert!(a.law_of_cosines_residual() < 1e-10);
        assert!(a.w().abs() <= 1.0 && a.x().abs() <= 1.0);
        assert_ne!(sample_quadrilateral(8, &r), a);
    }
}
