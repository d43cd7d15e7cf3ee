//! The scalar abstraction shared by the numeric and symbolic pipelines.
//!
//! Geometric constructions in this crate are written fraction-free: they
//! only ever add, subtract and multiply scalars, so one implementation
//! serves both exact rationals and multivariate polynomials. Division
//! exists only as the optional [`RingScalar::div_exact`], used to put
//! rational circles into unit scale and to strip common content.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Errors from the exact kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KernelError {
    /// A homogeneous tuple was entirely zero where a direction was needed.
    ZeroVector,
    /// Polynomial evaluation met a variable without a binding.
    UnboundVariable(&'static str),
}

impl fmt::Display for KernelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KernelError::ZeroVector => write!(f, "zero vector has no direction"),
            KernelError::UnboundVariable(name) => {
                write!(f, "no binding for variable {name}")
            }
        }
    }
}

impl std::error::Error for KernelError {}

/// An exact commutative ring element with just enough structure for
/// fraction-free geometry: arithmetic, an exact zero test, a canonical
/// sign, and common-content extraction for homogeneous tuples.
pub trait RingScalar: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    /// Exact division when the quotient is representable; `None` otherwise.
    /// Rationals divide by anything nonzero; polynomials only by constants
    /// and single terms that divide every coefficient.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;

    /// Canonical sign, used to orient normalized tuples: negative rationals,
    /// or polynomials whose leading coefficient is negative.
    fn is_negative(&self) -> bool;

    /// Divides the slice by the common content shared by all entries
    /// (numeric gcd, and for polynomials also the common monomial factor).
    /// Returns `false` when every entry is zero.
    fn remove_content(values: &mut [Self]) -> bool;
}

impl RingScalar for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }

    fn one() -> Self {
        <Rational as One>::one()
    }

    fn from_i64(v: i64) -> Self {
        crate::rational::rat(v)
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn remove_content(values: &mut [Self]) -> bool {
        let mut numer_gcd = num_bigint::BigInt::zero();
        let mut denom_lcm = num_bigint::BigInt::one();
        for v in values.iter() {
            if Zero::is_zero(v) {
                continue;
            }
            numer_gcd = numer_gcd.gcd(v.numer());
            denom_lcm = denom_lcm.lcm(v.denom());
        }
        if numer_gcd.is_zero() {
            return false;
        }
        let content = Rational::new(numer_gcd, denom_lcm);
        for v in values.iter_mut() {
            *v = &*v / &content;
        }
        true
    }
}

/// 3x3 determinant by cofactor expansion, exact over any scalar.
pub fn det3<R: RingScalar>(m: &[[R; 3]; 3]) -> R {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
        m[r1][c1].mul(&m[r2][c2]).sub(&m[r1][c2].mul(&m[r2][c1]))
    };
    let t0 = m[0][0].mul(&minor(1, 2, 1, 2));
    let t1 = m[0][1].mul(&minor(1, 2, 0, 2));
    let t2 = m[0][2].mul(&minor(1, 2, 0, 1));
    t0.sub(&t1).add(&t2)
}

/// True when two homogeneous triples name the same projective element,
/// i.e. all three 2x2 minors vanish exactly.
pub fn proportional<R: RingScalar>(v: &[R; 3], w: &[R; 3]) -> Result<bool, KernelError> {
    if v.iter().all(RingScalar::is_zero) || w.iter().all(RingScalar::is_zero) {
        return Err(KernelError::ZeroVector);
    }
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let minor = v[i].mul(&w[j]).sub(&v[j].mul(&w[i]));
        if !minor.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Canonicalizes a homogeneous tuple in place: strips common content and
/// flips signs so the first nonzero entry is positive (or has a positive
/// leading coefficient). Errs on the all-zero tuple. Idempotent.
pub fn normalize_tuple<R: RingScalar>(values: &mut [R]) -> Result<(), KernelError> {
    if !R::remove_content(values) {
        return Err(KernelError::ZeroVector);
    }
    let flip = values
        .iter()
        .find(|v| !v.is_zero())
        .map(RingScalar::is_negative)
        .unwrap_or(false);
    if flip {
        for v in values.iter_mut() {
            *v = v.neg();
        }
    }
    Ok(())
}

/// [`normalize_tuple`] specialized to coordinate triples.
pub fn content_normalize<R: RingScalar>(mut v: [R; 3]) -> Result<[R; 3], KernelError> {
    normalize_tuple(&mut v)?;
    Ok(v)
}
