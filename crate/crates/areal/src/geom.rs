//! Projective-style areal geometry: points, lines, circles and conics in
//! homogeneous coordinates over an exact ring.
//!
//! Everything here is fraction-free. A circle is stored as
//! `scale*(a2*y*z + b2*z*x + c2*x*y) + (x+y+z)*(u*x + v*y + w*z) = 0`
//! with an explicit quadratic-part scale, so the same solver works over
//! rationals (where the scale is divided out) and over polynomials (where
//! it cannot be).

use std::fmt;

use crate::rational::{is_positive, rational_to_f64, Rational};
use crate::ring::{content_normalize, det3, normalize_tuple, proportional, KernelError, RingScalar};

/// Errors from geometric constructions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeomError {
    ZeroVector,
    CoincidentPoints,
    CoincidentLines,
    CollinearPoints,
    PointAtInfinity,
    DegenerateConic,
    IdenticalCircles,
    KnownPointNotIncident,
    InvalidMetric,
}

impl fmt::Display for GeomError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            GeomError::ZeroVector => "zero coordinate vector",
            GeomError::CoincidentPoints => "points coincide",
            GeomError::CoincidentLines => "lines coincide",
            GeomError::CollinearPoints => "points are collinear",
            GeomError::PointAtInfinity => "point lies on the line at infinity",
            GeomError::DegenerateConic => "conic has no center",
            GeomError::IdenticalCircles => "circles are identical",
            GeomError::KnownPointNotIncident => "known point is not on both objects",
            GeomError::InvalidMetric => "squared side lengths do not bound a triangle",
        };
        write!(f, "{text}")
    }
}

impl std::error::Error for GeomError {}

impl From<KernelError> for GeomError {
    fn from(e: KernelError) -> Self {
        match e {
            KernelError::ZeroVector => GeomError::ZeroVector,
            KernelError::UnboundVariable(_) => GeomError::ZeroVector,
        }
    }
}

/// Squared side lengths `(a2, b2, c2)` of the reference triangle, where
/// `a = |BC|`, `b = |CA|`, `c = |AB|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleMetric<R: RingScalar> {
    pub a2: R,
    pub b2: R,
    pub c2: R,
}

impl<R: RingScalar> TriangleMetric<R> {
    pub fn new(a2: R, b2: R, c2: R) -> Self {
        TriangleMetric { a2, b2, c2 }
    }

    /// Metric for the cyclically relabeled triangle `(B, C, A)`.
    pub fn rotated(&self) -> Self {
        TriangleMetric::new(self.b2.clone(), self.c2.clone(), self.a2.clone())
    }
}

impl TriangleMetric<Rational> {
    /// `16 * area^2` by Heron's formula in squared side lengths; positive
    /// exactly when the side lengths bound a nondegenerate triangle.
    pub fn sixteen_area_sq(&self) -> Rational {
        let sum_prod = &self.a2 * &self.b2 + &self.b2 * &self.c2 + &self.c2 * &self.a2;
        let sum_sq = &self.a2 * &self.a2 + &self.b2 * &self.b2 + &self.c2 * &self.c2;
        crate::rational::rat(2) * sum_prod - sum_sq
    }

    pub fn is_valid_euclidean(&self) -> bool {
        is_positive(&self.a2)
            && is_positive(&self.b2)
            && is_positive(&self.c2)
            && is_positive(&self.sixteen_area_sq())
    }
}

/// Homogeneous areal coordinates `(x : y : z)`; not all zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point<R: RingScalar> {
    pub x: R,
    pub y: R,
    pub z: R,
}

impl<R: RingScalar> Point<R> {
    pub fn new(x: R, y: R, z: R) -> Self {
        Point { x, y, z }
    }

    pub fn vertex_a() -> Self {
        Point::new(R::one(), R::zero(), R::zero())
    }

    pub fn vertex_b() -> Self {
        Point::new(R::zero(), R::one(), R::zero())
    }

    pub fn vertex_c() -> Self {
        Point::new(R::zero(), R::zero(), R::one())
    }

    pub fn coords(&self) -> [R; 3] {
        [self.x.clone(), self.y.clone(), self.z.clone()]
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    /// Coordinate sum `x + y + z`; zero exactly on the line at infinity.
    pub fn coordinate_sum(&self) -> R {
        self.x.add(&self.y).add(&self.z)
    }

    pub fn is_at_infinity(&self) -> bool {
        self.coordinate_sum().is_zero()
    }

    pub fn scaled(&self, k: &R) -> Self {
        Point::new(self.x.mul(k), self.y.mul(k), self.z.mul(k))
    }

    /// Canonical representative: content removed, first nonzero entry
    /// positive.
    pub fn normalized(&self) -> Result<Self, GeomError> {
        let [x, y, z] = content_normalize(self.coords())?;
        Ok(Point::new(x, y, z))
    }

    pub fn is_proportional_to(&self, other: &Point<R>) -> Result<bool, GeomError> {
        Ok(proportional(&self.coords(), &other.coords())?)
    }

    /// Cyclic relabeling of coordinate slots: the image of `(x, y, z)`
    /// under `A -> B -> C -> A` is `(z, x, y)`.
    pub fn rotated_slots(&self) -> Self {
        Point::new(self.z.clone(), self.x.clone(), self.y.clone())
    }
}

/// Homogeneous line coefficients: the locus of `alpha*x + beta*y + gamma*z = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line<R: RingScalar> {
    pub alpha: R,
    pub beta: R,
    pub gamma: R,
}

impl<R: RingScalar> Line<R> {
    pub fn new(alpha: R, beta: R, gamma: R) -> Self {
        Line { alpha, beta, gamma }
    }

    /// The line at infinity `x + y + z = 0`.
    pub fn at_infinity() -> Self {
        Line::new(R::one(), R::one(), R::one())
    }

    pub fn coeffs(&self) -> [R; 3] {
        [self.alpha.clone(), self.beta.clone(), self.gamma.clone()]
    }

    pub fn eval(&self, p: &Point<R>) -> R {
        self.alpha
            .mul(&p.x)
            .add(&self.beta.mul(&p.y))
            .add(&self.gamma.mul(&p.z))
    }

    pub fn contains(&self, p: &Point<R>) -> bool {
        self.eval(p).is_zero()
    }

    pub fn normalized(&self) -> Result<Self, GeomError> {
        let [a, b, c] = content_normalize(self.coeffs())?;
        Ok(Line::new(a, b, c))
    }
}

fn cross<R: RingScalar>(a: &[R; 3], b: &[R; 3]) -> [R; 3] {
    [
        a[1].mul(&b[2]).sub(&a[2].mul(&b[1])),
        a[2].mul(&b[0]).sub(&a[0].mul(&b[2])),
        a[0].mul(&b[1]).sub(&a[1].mul(&b[0])),
    ]
}

/// Line through two distinct points.
pub fn line_through<R: RingScalar>(p: &Point<R>, q: &Point<R>) -> Result<Line<R>, GeomError> {
    let c = cross(&p.coords(), &q.coords());
    if c.iter().all(RingScalar::is_zero) {
        return Err(GeomError::CoincidentPoints);
    }
    let [a, b, g] = c;
    Line::new(a, b, g).normalized()
}

/// Common point of two distinct lines.
pub fn line_intersection<R: RingScalar>(r: &Line<R>, s: &Line<R>) -> Result<Point<R>, GeomError> {
    let c = cross(&r.coeffs(), &s.coeffs());
    if c.iter().all(RingScalar::is_zero) {
        return Err(GeomError::CoincidentLines);
    }
    let [x, y, z] = c;
    Point::new(x, y, z).normalized()
}

/// True when the three points lie on one line (their coordinate
/// determinant vanishes).
pub fn collinear<R: RingScalar>(p: &Point<R>, q: &Point<R>, r: &Point<R>) -> bool {
    det3(&[p.coords(), q.coords(), r.coords()]).is_zero()
}

/// A circle bound to a triangle metric, in the scaled form
/// `scale*(a2*y*z + b2*z*x + c2*x*y) + (x+y+z)*(u*x + v*y + w*z) = 0`.
///
/// Rational circles are normalized to `scale = 1`, where `(u, v, w)` are
/// the classical coefficients; polynomial circles keep the solver's scale.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circle<R: RingScalar> {
    pub metric: TriangleMetric<R>,
    pub scale: R,
    pub u: R,
    pub v: R,
    pub w: R,
}

impl<R: RingScalar> Circle<R> {
    /// The circumcircle `a2*y*z + b2*z*x + c2*x*y = 0`.
    pub fn circumcircle(metric: TriangleMetric<R>) -> Self {
        Circle {
            metric,
            scale: R::one(),
            u: R::zero(),
            v: R::zero(),
            w: R::zero(),
        }
    }

    pub fn from_coeffs(metric: TriangleMetric<R>, scale: R, u: R, v: R, w: R) -> Self {
        Circle { metric, scale, u, v, w }
    }

    /// The quadratic part `a2*y*z + b2*z*x + c2*x*y` at a point.
    fn quad(&self, p: &Point<R>) -> R {
        let t1 = self.metric.a2.mul(&p.y.mul(&p.z));
        let t2 = self.metric.b2.mul(&p.z.mul(&p.x));
        let t3 = self.metric.c2.mul(&p.x.mul(&p.y));
        t1.add(&t2).add(&t3)
    }

    /// Value of the circle form at a point; homogeneous of degree two, so
    /// scaling the point scales the value quadratically.
    pub fn eval(&self, p: &Point<R>) -> R {
        let linear = self
            .u
            .mul(&p.x)
            .add(&self.v.mul(&p.y))
            .add(&self.w.mul(&p.z));
        self.scale
            .mul(&self.quad(p))
            .add(&p.coordinate_sum().mul(&linear))
    }

    pub fn contains(&self, p: &Point<R>) -> bool {
        self.eval(p).is_zero()
    }

    /// Polarization of the circle's quadratic form:
    /// `B(p, q) = S(p+q) - S(p) - S(q)`, computed without halving so it
    /// stays in the ring. Symmetric, with `B(p, p) = 2 S(p)`.
    pub fn bilinear(&self, p: &Point<R>, q: &Point<R>) -> R {
        let sum = Point::new(p.x.add(&q.x), p.y.add(&q.y), p.z.add(&q.z));
        self.eval(&sum).sub(&self.eval(p)).sub(&self.eval(q))
    }

    /// Circle through three finite, non-collinear points, solved
    /// fraction-free by Cramer's rule; the common denominator determinant
    /// becomes the quadratic-part scale.
    pub fn through(
        p1: &Point<R>,
        p2: &Point<R>,
        p3: &Point<R>,
        metric: &TriangleMetric<R>,
    ) -> Result<Self, GeomError> {
        let reference = Circle::circumcircle(metric.clone());
        let mut rows: Vec<[R; 3]> = Vec::with_capacity(3);
        let mut rhs: Vec<R> = Vec::with_capacity(3);
        for p in [p1, p2, p3] {
            let t = p.coordinate_sum();
            if t.is_zero() {
                return Err(GeomError::PointAtInfinity);
            }
            rows.push([t.mul(&p.x), t.mul(&p.y), t.mul(&p.z)]);
            rhs.push(reference.quad(p).neg());
        }
        let rows: [[R; 3]; 3] = [rows[0].clone(), rows[1].clone(), rows[2].clone()];
        let denom = det3(&rows);
        if denom.is_zero() {
            return Err(GeomError::CollinearPoints);
        }
        let col = |j: usize| {
            let mut m = rows.clone();
            for i in 0..3 {
                m[i][j] = rhs[i].clone();
            }
            det3(&m)
        };
        let circle = Circle {
            metric: metric.clone(),
            scale: denom,
            u: col(0),
            v: col(1),
            w: col(2),
        };
        Ok(circle.normalized())
    }

    /// Canonical representative of the same circle: rational circles are
    /// rescaled to `scale = 1`; polynomial circles are reduced by common
    /// content with the scale's sign fixed positive.
    pub fn normalized(&self) -> Self {
        if let (Some(u), Some(v), Some(w)) = (
            self.u.div_exact(&self.scale),
            self.v.div_exact(&self.scale),
            self.w.div_exact(&self.scale),
        ) {
            return Circle {
                metric: self.metric.clone(),
                scale: R::one(),
                u,
                v,
                w,
            };
        }
        let mut tuple = [
            self.scale.clone(),
            self.u.clone(),
            self.v.clone(),
            self.w.clone(),
        ];
        if normalize_tuple(&mut tuple).is_err() {
            return self.clone();
        }
        if tuple[0].is_negative() {
            for t in tuple.iter_mut() {
                *t = t.neg();
            }
        }
        let [scale, u, v, w] = tuple;
        Circle {
            metric: self.metric.clone(),
            scale,
            u,
            v,
            w,
        }
    }

    /// True when the two circles (over the same metric) have identical
    /// equations up to scale.
    pub fn same_circle(&self, other: &Circle<R>) -> bool {
        debug_assert!(self.metric == other.metric, "circles on different metrics");
        let a = [
            self.scale.clone(),
            self.u.clone(),
            self.v.clone(),
            self.w.clone(),
        ];
        let b = [
            other.scale.clone(),
            other.u.clone(),
            other.v.clone(),
            other.w.clone(),
        ];
        for i in 0..4 {
            for j in (i + 1)..4 {
                if !a[i].mul(&b[j]).sub(&a[j].mul(&b[i])).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// The circle as a general conic `u x^2 + v y^2 + w z^2 + 2f yz +
    /// 2g zx + 2h xy = 0`, doubled to keep coefficients in the ring.
    pub fn to_conic(&self) -> Conic<R> {
        let two = R::from_i64(2);
        Conic {
            u: two.mul(&self.u),
            v: two.mul(&self.v),
            w: two.mul(&self.w),
            f: self.scale.mul(&self.metric.a2).add(&self.v).add(&self.w),
            g: self.scale.mul(&self.metric.b2).add(&self.w).add(&self.u),
            h: self.scale.mul(&self.metric.c2).add(&self.u).add(&self.v),
        }
    }

    /// Cyclic relabeling: given this circle computed for the rotated
    /// configuration, reinterpret it in the original triangle by rotating
    /// the linear coefficient slots and restoring the original metric.
    pub fn rotated_slots(&self, metric: TriangleMetric<R>) -> Self {
        Circle {
            metric,
            scale: self.scale.clone(),
            u: self.w.clone(),
            v: self.u.clone(),
            w: self.v.clone(),
        }
    }
}

/// General conic coefficients for `u x^2 + v y^2 + w z^2 + 2f yz + 2g zx
/// + 2h xy = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conic<R: RingScalar> {
    pub u: R,
    pub v: R,
    pub w: R,
    pub f: R,
    pub g: R,
    pub h: R,
}

impl<R: RingScalar> Conic<R> {
    pub fn eval(&self, p: &Point<R>) -> R {
        let two = R::from_i64(2);
        let sq = self
            .u
            .mul(&p.x.mul(&p.x))
            .add(&self.v.mul(&p.y.mul(&p.y)))
            .add(&self.w.mul(&p.z.mul(&p.z)));
        let mixed = self
            .f
            .mul(&p.y.mul(&p.z))
            .add(&self.g.mul(&p.z.mul(&p.x)))
            .add(&self.h.mul(&p.x.mul(&p.y)));
        sq.add(&two.mul(&mixed))
    }

    /// Center of the conic: the pole of the line at infinity, i.e. the
    /// adjugate matrix applied to `(1, 1, 1)`. Homogeneous of degree two
    /// in the coefficients. Errs when all three coordinates vanish.
    pub fn center(&self) -> Result<Point<R>, GeomError> {
        let Conic { u, v, w, f, g, h } = self;
        let x = v
            .mul(w)
            .sub(&g.mul(v))
            .sub(&h.mul(w))
            .sub(&f.mul(f))
            .add(&f.mul(g))
            .add(&h.mul(f));
        let y = w
            .mul(u)
            .sub(&h.mul(w))
            .sub(&f.mul(u))
            .sub(&g.mul(g))
            .add(&g.mul(h))
            .add(&f.mul(g));
        let z = u
            .mul(v)
            .sub(&f.mul(u))
            .sub(&g.mul(v))
            .sub(&h.mul(h))
            .add(&h.mul(f))
            .add(&g.mul(h));
        let p = Point::new(x, y, z);
        if p.is_zero() {
            return Err(GeomError::DegenerateConic);
        }
        p.normalized()
    }
}

/// Radical axis of two distinct circles over the same metric: rescale both
/// equations to a common quadratic part and subtract, leaving
/// `(x+y+z) * (du*x + dv*y + dw*z) = 0`; common points of the circles are
/// finite, so they satisfy the returned line.
pub fn radical_axis<R: RingScalar>(
    c1: &Circle<R>,
    c2: &Circle<R>,
) -> Result<Line<R>, GeomError> {
    assert!(c1.metric == c2.metric, "radical axis requires a shared metric");
    let du = c2.scale.mul(&c1.u).sub(&c1.scale.mul(&c2.u));
    let dv = c2.scale.mul(&c1.v).sub(&c1.scale.mul(&c2.v));
    let dw = c2.scale.mul(&c1.w).sub(&c1.scale.mul(&c2.w));
    if du.is_zero() && dv.is_zero() && dw.is_zero() {
        return Err(GeomError::IdenticalCircles);
    }
    Line::new(du, dv, dw).normalized()
}

/// Second intersection of a line with a circle, given one known common
/// point. Deterministic and fraction-free: an auxiliary point `D` on the
/// line is chosen from the fixed basis candidates `(0, gamma, -beta)`,
/// `(gamma, 0, -alpha)`, `(beta, -alpha, 0)` (first nonzero candidate not
/// proportional to the known point); the chord parametrization then gives
/// the other root as `S(D)*known - B(known, D)*D`, or `D` itself when
/// `S(D) = 0`.
///
/// Tangency is not an error: the result is proportional to `known`
/// exactly when the line is tangent there, and the caller compares.
pub fn second_intersection<R: RingScalar>(
    line: &Line<R>,
    circle: &Circle<R>,
    known: &Point<R>,
) -> Result<Point<R>, GeomError> {
    if !line.contains(known) || !circle.contains(known) {
        return Err(GeomError::KnownPointNotIncident);
    }
    let candidates = [
        Point::new(R::zero(), line.gamma.clone(), line.beta.neg()),
        Point::new(line.gamma.clone(), R::zero(), line.alpha.neg()),
        Point::new(line.beta.clone(), line.alpha.neg(), R::zero()),
    ];
    let mut aux = None;
    for candidate in candidates {
        if candidate.is_zero() {
            continue;
        }
        if !candidate.is_proportional_to(known)? {
            aux = Some(candidate);
            break;
        }
    }
    let aux = aux.ok_or(GeomError::CoincidentPoints)?;
    let s_aux = circle.eval(&aux);
    if s_aux.is_zero() {
        return aux.normalized();
    }
    let b = circle.bilinear(known, &aux);
    let result = Point::new(
        s_aux.mul(&known.x).sub(&b.mul(&aux.x)),
        s_aux.mul(&known.y).sub(&b.mul(&aux.y)),
        s_aux.mul(&known.z).sub(&b.mul(&aux.z)),
    );
    result.normalized()
}

/// Places the triangle in the Euclidean plane (B at the origin, C on the
/// positive x axis, A above) and maps a finite rational point to Cartesian
/// coordinates. Render/cross-check boundary only: this is the one place
/// square roots, and therefore floats, appear.
pub fn cartesian_embed(
    p: &Point<Rational>,
    metric: &TriangleMetric<Rational>,
) -> Result<(f64, f64), GeomError> {
    if !metric.is_valid_euclidean() {
        return Err(GeomError::InvalidMetric);
    }
    let t = p.coordinate_sum();
    if RingScalar::is_zero(&t) {
        return Err(GeomError::PointAtInfinity);
    }
    let (ax, ay) = vertex_a_cartesian(metric);
    let a = rational_to_f64(&metric.a2).sqrt();
    let x = rational_to_f64(&(&p.x / &t));
    let z = rational_to_f64(&(&p.z / &t));
    // weights attach to vertices A, B, C with B = (0, 0), C = (a, 0)
    Ok((x * ax + z * a, x * ay))
}

fn vertex_a_cartesian(metric: &TriangleMetric<Rational>) -> (f64, f64) {
    let a = rational_to_f64(&metric.a2).sqrt();
    let ax = (rational_to_f64(&metric.c2) + rational_to_f64(&metric.a2)
        - rational_to_f64(&metric.b2))
        / (2.0 * a);
    let ay = (rational_to_f64(&metric.c2) - ax * ax).max(0.0).sqrt();
    (ax, ay)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn metric_345() -> TriangleMetric<Rational> {
        TriangleMetric::new(rat(25), rat(16), rat(9))
    }

    fn pt(x: i64, y: i64, z: i64) -> Point<Rational> {
        Point::new(rat(x), rat(y), rat(z))
    }

    #[test]
    fn line_through_vertices() {
        let line = line_through(&pt(1, 0, 0), &pt(0, 1, 0)).unwrap();
        assert_eq!(line.coeffs(), [rat(0), rat(0), rat(1)]);
    }

    #[test]
    fn line_through_vertex_and_cevian_point() {
        // AP for P = (l, m, n) has equation n*y = m*z
        let line = line_through(&pt(1, 0, 0), &pt(1, 2, 3)).unwrap();
        assert_eq!(line.coeffs(), [rat(0), rat(3), rat(-2)]);
    }

    #[test]
    fn line_through_coincident_points_fails() {
        let p = pt(2, -1, 4);
        assert_eq!(line_through(&p, &p.scaled(&rat(3))), Err(GeomError::CoincidentPoints));
    }

    #[test]
    fn line_intersection_examples() {
        let z0 = Line::new(rat(0), rat(0), rat(1));
        let y0 = Line::new(rat(0), rat(1), rat(0));
        assert_eq!(line_intersection(&z0, &y0).unwrap(), pt(1, 0, 0));

        // side BC (x = 0) meets AP (n*y = m*z) at the foot (0 : m : n)
        let bc = Line::new(rat(1), rat(0), rat(0));
        let ap = Line::new(rat(0), rat(3), rat(-2));
        assert_eq!(line_intersection(&bc, &ap).unwrap(), pt(0, 2, 3));

        assert_eq!(line_intersection(&bc, &bc), Err(GeomError::CoincidentLines));
    }

    #[test]
    fn collinear_examples() {
        assert!(!collinear(&pt(1, 0, 0), &pt(0, 1, 0), &pt(0, 0, 1)));
        assert!(collinear(&pt(1, 0, 0), &pt(0, 1, 0), &pt(1, 1, 0)));
    }

    #[test]
    fn circumcircle_contains_vertices_but_not_centroid() {
        let circ = Circle::circumcircle(metric_345());
        assert!(circ.contains(&pt(1, 0, 0)));
        assert!(circ.contains(&pt(0, 1, 0)));
        assert!(circ.contains(&pt(0, 0, 1)));
        assert_eq!(circ.eval(&pt(1, 1, 1)), rat(50)); // a2 + b2 + c2
    }

    #[test]
    fn circle_through_vertices_is_circumcircle() {
        let c = Circle::through(&pt(1, 0, 0), &pt(0, 1, 0), &pt(0, 0, 1), &metric_345()).unwrap();
        assert_eq!(c.scale, rat(1));
        assert_eq!([c.u, c.v, c.w], [rat(0), rat(0), rat(0)]);
    }

    #[test]
    fn circle_through_midpoint_instance() {
        // A, M = (1,0,1), N = (1,1,0) in the 3-4-5 triangle
        let c = Circle::through(&pt(1, 0, 0), &pt(1, 0, 1), &pt(1, 1, 0), &metric_345()).unwrap();
        assert_eq!(c.scale, rat(1));
        assert_eq!([c.u, c.v, c.w], [rat(0), ratio(-9, 2), rat(-8)]);
        assert!(c.contains(&pt(1, 0, 1)));
        assert_eq!(c.eval(&pt(1, 0, 1)), rat(0));
    }

    #[test]
    fn circle_through_degenerate_inputs() {
        let m = metric_345();
        assert_eq!(
            Circle::through(&pt(1, 0, 0), &pt(0, 1, 0), &pt(1, 1, 0), &m),
            Err(GeomError::CollinearPoints)
        );
        assert_eq!(
            Circle::through(&pt(1, 0, 0), &pt(1, -1, 0), &pt(0, 0, 1), &m),
            Err(GeomError::PointAtInfinity)
        );
    }

    #[test]
    fn conic_expansion_of_circle() {
        let c = Circle::from_coeffs(metric_345(), rat(1), rat(0), ratio(-9, 2), rat(-8));
        let k = c.to_conic();
        assert_eq!(k.u, rat(0));
        assert_eq!(k.v, rat(-9));
        assert_eq!(k.w, rat(-16));
        assert_eq!(k.f, ratio(25, 2));
        assert_eq!(k.g, rat(8));
        assert_eq!(k.h, ratio(9, 2));
        // the conic is exactly twice the circle form
        for p in [pt(3, -1, 2), pt(1, 5, 7), pt(2, 2, 1)] {
            assert_eq!(k.eval(&p), rat(2) * c.eval(&p));
        }
    }

    #[test]
    fn circumcenter_from_conic_center() {
        // right triangle: circumcenter is the midpoint of the hypotenuse
        let k = Circle::circumcircle(metric_345()).to_conic();
        assert_eq!(k.center().unwrap(), pt(0, 1, 1));

        // generic triangle: classical circumcenter coordinates
        let metric = TriangleMetric::new(rat(9), rat(7), rat(4));
        let center = Circle::circumcircle(metric).to_conic().center().unwrap();
        // a2*(b2+c2-a2) : b2*(c2+a2-b2) : c2*(a2+b2-c2) = 18 : 42 : 48
        assert_eq!(center, pt(3, 7, 8));
    }

    #[test]
    fn degenerate_conic_has_no_center() {
        // (x + y + z)^2 = 0: a doubled line
        let k = Conic {
            u: rat(1),
            v: rat(1),
            w: rat(1),
            f: rat(1),
            g: rat(1),
            h: rat(1),
        };
        assert_eq!(k.center(), Err(GeomError::DegenerateConic));
    }

    #[test]
    fn radical_axis_examples() {
        let circum = Circle::circumcircle(metric_345());
        let amn = Circle::from_coeffs(metric_345(), rat(1), rat(0), ratio(-9, 2), rat(-8));
        let axis = radical_axis(&circum, &amn).unwrap();
        assert_eq!(axis.coeffs(), [rat(0), rat(9), rat(16)]);
        assert_eq!(radical_axis(&circum, &circum), Err(GeomError::IdenticalCircles));
    }

    #[test]
    fn bilinear_polarization_identities() {
        let c = Circle::circumcircle(metric_345());
        let a = pt(1, 0, 0);
        let b = pt(0, 1, 0);
        assert_eq!(c.bilinear(&a, &b), rat(9)); // c2
        let p = pt(3, -2, 5);
        let q = pt(1, 7, -4);
        assert_eq!(c.bilinear(&p, &q), c.bilinear(&q, &p));
        assert_eq!(c.bilinear(&p, &p), rat(2) * c.eval(&p));
    }

    #[test]
    fn second_intersection_side_with_circumcircle() {
        let circ = Circle::circumcircle(metric_345());
        let bc = Line::new(rat(1), rat(0), rat(0));
        let other = second_intersection(&bc, &circ, &pt(0, 1, 0)).unwrap();
        assert_eq!(other, pt(0, 0, 1));
    }

    #[test]
    fn second_intersection_tangent_returns_known() {
        // tangent to the circumcircle at A is c2*y + b2*z = 0
        let circ = Circle::circumcircle(metric_345());
        let tangent = Line::new(rat(0), rat(9), rat(16));
        let result = second_intersection(&tangent, &circ, &pt(1, 0, 0)).unwrap();
        assert!(result.is_proportional_to(&pt(1, 0, 0)).unwrap());
    }

    #[test]
    fn second_intersection_requires_incidence() {
        let circ = Circle::circumcircle(metric_345());
        let bc = Line::new(rat(1), rat(0), rat(0));
        assert_eq!(
            second_intersection(&bc, &circ, &pt(1, 1, 1)),
            Err(GeomError::KnownPointNotIncident)
        );
    }

    #[test]
    fn cartesian_embed_examples() {
        let m = metric_345();
        let (ax, ay) = cartesian_embed(&pt(1, 0, 0), &m).unwrap();
        assert!((ax - 1.8).abs() < 1e-12);
        assert!((ay - 2.4).abs() < 1e-12);
        // |AB| = 3 and |AC| = 4 confirm the placement
        let (bx, by) = cartesian_embed(&pt(0, 1, 0), &m).unwrap();
        let (cx, cy) = cartesian_embed(&pt(0, 0, 1), &m).unwrap();
        assert!(((ax - bx).hypot(ay - by) - 3.0).abs() < 1e-12);
        assert!(((ax - cx).hypot(ay - cy) - 4.0).abs() < 1e-12);

        let (gx, gy) = cartesian_embed(&pt(1, 1, 1), &m).unwrap();
        assert!((gx - (1.8 + 5.0) / 3.0).abs() < 1e-12);
        assert!((gy - 0.8).abs() < 1e-12);

        assert_eq!(
            cartesian_embed(&pt(1, -1, 0), &m),
            Err(GeomError::PointAtInfinity)
        );
        let bad = TriangleMetric::new(rat(1), rat(1), rat(9));
        assert_eq!(
            cartesian_embed(&pt(1, 1, 1), &bad),
            Err(GeomError::InvalidMetric)
        );
    }
}
