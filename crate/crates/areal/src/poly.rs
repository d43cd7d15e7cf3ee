//! Sparse multivariate polynomials over the nine symbols of the
//! configuration: the squared side lengths `a2, b2, c2`, the Cevian point
//! parameters `l, m, n`, and the running coordinates `x, y, z`.
//!
//! Squared side lengths are atomic variables: every construction in this
//! crate is polynomial in them, so square roots never appear. Terms are
//! keyed by exponent vectors in a `BTreeMap`, which makes the canonical
//! (lexicographic) order free and the text form deterministic.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;
use crate::ring::{KernelError, RingScalar};

/// Number of variables in the fixed universe.
pub const VAR_COUNT: usize = 9;

/// The fixed variable universe, in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// squared side length BC
    A2 = 0,
    /// squared side length CA
    B2 = 1,
    /// squared side length AB
    C2 = 2,
    L = 3,
    M = 4,
    N = 5,
    X = 6,
    Y = 7,
    Z = 8,
}

impl Var {
    pub const ALL: [Var; VAR_COUNT] = [
        Var::A2,
        Var::B2,
        Var::C2,
        Var::L,
        Var::M,
        Var::N,
        Var::X,
        Var::Y,
        Var::Z,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Var::A2 => "a2",
            Var::B2 => "b2",
            Var::C2 => "c2",
            Var::L => "l",
            Var::M => "m",
            Var::N => "n",
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
        }
    }

    /// Image under the simultaneous cyclic change
    /// `a2 -> b2 -> c2 -> a2`, `l -> m -> n -> l`, `x -> y -> z -> x`.
    pub fn cycled(self) -> Var {
        match self {
            Var::A2 => Var::B2,
            Var::B2 => Var::C2,
            Var::C2 => Var::A2,
            Var::L => Var::M,
            Var::M => Var::N,
            Var::N => Var::L,
            Var::X => Var::Y,
            Var::Y => Var::Z,
            Var::Z => Var::X,
        }
    }
}

/// Exponent vector over [`Var::ALL`]; ordered lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(pub [u16; VAR_COUNT]);

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var) -> Self {
        let mut exps = [0u16; VAR_COUNT];
        exps[v as usize] = 1;
        Monomial(exps)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    fn combine(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u16; VAR_COUNT];
        for i in 0..VAR_COUNT {
            exps[i] = self.0[i] + other.0[i];
        }
        Monomial(exps)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.0[v as usize];
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial; the zero polynomial is the empty term map, and no
/// stored coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

/// Variable bindings for evaluation; every variable that occurs in the
/// polynomial must be bound.
#[derive(Debug, Clone, Default)]
pub struct Bindings([Option<Rational>; VAR_COUNT]);

impl Bindings {
    pub fn new() -> Self {
        Bindings::default()
    }

    pub fn set(mut self, v: Var, value: Rational) -> Self {
        self.0[v as usize] = Some(value);
        self
    }

    pub fn get(&self, v: Var) -> Option<&Rational> {
        self.0[v as usize].as_ref()
    }
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        MultiPoly { terms }
    }

    pub fn int(v: i64) -> Self {
        MultiPoly::constant(crate::rational::rat(v))
    }

    pub fn var(v: Var) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(v), Rational::one());
        MultiPoly { terms }
    }

    pub fn term(mono: Monomial, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mono, coeff);
        }
        MultiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Coefficient of the lexicographically greatest monomial.
    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.last_key_value().map(|(_, c)| c)
    }

    pub fn coefficient(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    fn insert_term(terms: &mut BTreeMap<Monomial, Rational>, mono: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match terms.entry(mono) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get() + &coeff;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    /// Product that bails out with `None` once the accumulating term map
    /// grows past `limit`; the budgeted symbolic tasks use this to abort
    /// instead of thrashing.
    pub fn mul_with_limit(&self, rhs: &MultiPoly, limit: usize) -> Option<MultiPoly> {
        // iterate over the smaller operand's terms in the outer loop
        let (outer, inner) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut terms = BTreeMap::new();
        for (m1, c1) in &outer.terms {
            for (m2, c2) in &inner.terms {
                Self::insert_term(&mut terms, m1.combine(m2), c1 * c2);
                if terms.len() > limit {
                    return None;
                }
            }
        }
        Some(MultiPoly { terms })
    }

    pub fn pow(&self, exp: u32) -> MultiPoly {
        let mut result = MultiPoly::one();
        for _ in 0..exp {
            result = &result * self;
        }
        result
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        let terms = self.terms.iter().map(|(m, k)| (*m, k * c)).collect();
        MultiPoly { terms }
    }

    /// Exact substitution of every variable; a ring homomorphism.
    pub fn eval(&self, bindings: &Bindings) -> Result<Rational, KernelError> {
        let mut total = Rational::zero();
        for (mono, coeff) in &self.terms {
            let mut value = coeff.clone();
            for v in Var::ALL {
                let e = mono.0[v as usize];
                if e == 0 {
                    continue;
                }
                let bound = bindings
                    .get(v)
                    .ok_or(KernelError::UnboundVariable(v.name()))?;
                for _ in 0..e {
                    value *= bound;
                }
            }
            total += value;
        }
        Ok(total)
    }

    /// Simultaneous substitution `x->y->z->x`, `a2->b2->c2->a2`,
    /// `l->m->n->l`; a ring automorphism of order three.
    pub fn cyclic_shift(&self) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .map(|(mono, coeff)| {
                let mut exps = [0u16; VAR_COUNT];
                for v in Var::ALL {
                    exps[v.cycled() as usize] = mono.0[v as usize];
                }
                (Monomial(exps), coeff.clone())
            })
            .collect();
        MultiPoly { terms }
    }

    /// Substitutes polynomials for the coordinate variables `x, y, z`,
    /// leaving the six parameters untouched. This is how closed-form
    /// points are plugged into circle and line equations.
    pub fn substitute_xyz(&self, point: [&MultiPoly; 3]) -> MultiPoly {
        let mut result = MultiPoly::zero();
        for (mono, coeff) in &self.terms {
            let mut exps = mono.0;
            let powers = [exps[Var::X as usize], exps[Var::Y as usize], exps[Var::Z as usize]];
            exps[Var::X as usize] = 0;
            exps[Var::Y as usize] = 0;
            exps[Var::Z as usize] = 0;
            let mut piece = MultiPoly::term(Monomial(exps), coeff.clone());
            for (replacement, power) in point.iter().zip(powers) {
                for _ in 0..power {
                    piece = &piece * *replacement;
                }
            }
            result = &result + &piece;
        }
        result
    }

    /// Numeric content (gcd of coefficients, positive) and common monomial
    /// factor of a nonzero polynomial.
    fn content(&self) -> (Rational, Monomial) {
        let mut numer_gcd = num_bigint::BigInt::zero();
        let mut denom_lcm = num_bigint::BigInt::one();
        let mut mono_min = [u16::MAX; VAR_COUNT];
        for (mono, coeff) in &self.terms {
            numer_gcd = numer_gcd.gcd(coeff.numer());
            denom_lcm = denom_lcm.lcm(coeff.denom());
            for i in 0..VAR_COUNT {
                mono_min[i] = mono_min[i].min(mono.0[i]);
            }
        }
        (Rational::new(numer_gcd, denom_lcm), Monomial(mono_min))
    }

    fn divide_by_content(&self, coeff: &Rational, mono: &Monomial) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = [0u16; VAR_COUNT];
                for i in 0..VAR_COUNT {
                    exps[i] = m.0[i] - mono.0[i];
                }
                (Monomial(exps), c / coeff)
            })
            .collect();
        MultiPoly { terms }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (mono, coeff)) in self.terms.iter().rev().enumerate() {
            let negative = coeff.is_negative();
            let magnitude = coeff.abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mono.degree() == 0 {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{magnitude}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl RingScalar for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }

    fn one() -> Self {
        MultiPoly::one()
    }

    fn from_i64(v: i64) -> Self {
        MultiPoly::int(v)
    }

    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
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
        if rhs.is_zero() {
            return None;
        }
        if rhs.terms.len() != 1 {
            return None;
        }
        let (rm, rc) = rhs.terms.iter().next().expect("single term");
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut exps = [0u16; VAR_COUNT];
            for i in 0..VAR_COUNT {
                exps[i] = m.0[i].checked_sub(rm.0[i])?;
            }
            terms.insert(Monomial(exps), c / rc);
        }
        Some(MultiPoly { terms })
    }

    fn is_negative(&self) -> bool {
        self.leading_coefficient()
            .map(Signed::is_negative)
            .unwrap_or(false)
    }

    fn remove_content(values: &mut [Self]) -> bool {
        let mut numer_gcd = num_bigint::BigInt::zero();
        let mut denom_lcm = num_bigint::BigInt::one();
        let mut mono_min = [u16::MAX; VAR_COUNT];
        let mut any = false;
        for p in values.iter() {
            if p.is_zero() {
                continue;
            }
            any = true;
            let (coeff, mono) = p.content();
            numer_gcd = numer_gcd.gcd(coeff.numer());
            denom_lcm = denom_lcm.lcm(coeff.denom());
            for i in 0..VAR_COUNT {
                mono_min[i] = mono_min[i].min(mono.0[i]);
            }
        }
        if !any {
            return false;
        }
        let coeff = Rational::new(numer_gcd, denom_lcm);
        let mono = Monomial(mono_min);
        for p in values.iter_mut() {
            if !p.is_zero() {
                *p = p.divide_by_content(&coeff, &mono);
            }
        }
        true
    }
}

// operator sugar for readable equation transcriptions
impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        MultiPoly::add(&self, &rhs)
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        MultiPoly::sub(&self, &rhs)
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        MultiPoly::mul(&self, &rhs)
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn v(var: Var) -> MultiPoly {
        MultiPoly::var(var)
    }

    #[test]
    fn difference_of_squares() {
        let lhs = (v(Var::X) + v(Var::Y)) * (v(Var::X) - v(Var::Y));
        let rhs = v(Var::X) * v(Var::X) - v(Var::Y) * v(Var::Y);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn additive_identity() {
        let p = v(Var::A2) * v(Var::L) + MultiPoly::int(3);
        assert_eq!(p.add(&MultiPoly::zero()), p);
    }

    #[test]
    fn circumcircle_polynomial_assembles_by_cyclic_shift() {
        let first = v(Var::A2) * v(Var::Y) * v(Var::Z);
        let full = first.clone() + first.cyclic_shift() + first.cyclic_shift().cyclic_shift();
        let direct = v(Var::A2) * v(Var::Y) * v(Var::Z)
            + v(Var::B2) * v(Var::Z) * v(Var::X)
            + v(Var::C2) * v(Var::X) * v(Var::Y);
        assert_eq!(full, direct);
        // a2*y*z -> b2*z*x under one shift
        assert_eq!(first.cyclic_shift(), v(Var::B2) * v(Var::Z) * v(Var::X));
    }

    #[test]
    fn cyclic_shift_of_constant_and_order_three() {
        let c = MultiPoly::int(7);
        assert_eq!(c.cyclic_shift(), c);
        let p = v(Var::A2) * v(Var::X).pow(2) - v(Var::M) * v(Var::N) * v(Var::Z)
            + MultiPoly::int(5) * v(Var::L);
        let three = p.cyclic_shift().cyclic_shift().cyclic_shift();
        assert_eq!(three, p);
    }

    #[test]
    fn eval_difference_of_squares() {
        let p = v(Var::X).pow(2) - v(Var::Y).pow(2);
        let b = Bindings::new().set(Var::X, rat(3)).set(Var::Y, rat(2));
        assert_eq!(p.eval(&b).unwrap(), rat(5));
    }

    #[test]
    fn eval_zero_polynomial_needs_no_bindings() {
        assert_eq!(MultiPoly::zero().eval(&Bindings::new()).unwrap(), rat(0));
    }

    #[test]
    fn eval_unbound_variable_errors() {
        let p = v(Var::X) + v(Var::Y);
        let b = Bindings::new().set(Var::X, rat(1));
        assert_eq!(p.eval(&b), Err(KernelError::UnboundVariable("y")));
    }

    #[test]
    fn display_is_canonical() {
        let p = v(Var::X).pow(2) - MultiPoly::int(3) * v(Var::Y) * v(Var::M)
            + MultiPoly::constant(crate::rational::ratio(1, 2));
        assert_eq!(p.to_string(), "x^2 - 3*m*y + 1/2");
        assert_eq!(MultiPoly::zero().to_string(), "0");
    }

    #[test]
    fn div_exact_by_single_term() {
        let p = v(Var::A2) * v(Var::L).pow(2) * MultiPoly::int(6)
            + v(Var::A2) * v(Var::L) * v(Var::M) * MultiPoly::int(4);
        let d = v(Var::A2) * v(Var::L) * MultiPoly::int(2);
        let q = p.div_exact(&d).unwrap();
        assert_eq!(q, v(Var::L) * MultiPoly::int(3) + v(Var::M) * MultiPoly::int(2));
        // not divisible: monomial underflow
        assert!(v(Var::M).div_exact(&v(Var::L)).is_none());
    }

    #[test]
    fn mul_with_limit_aborts() {
        let p = (v(Var::X) + v(Var::Y) + v(Var::Z)).pow(3);
        assert!(p.mul_with_limit(&p, 5).is_none());
        assert!(p.mul_with_limit(&p, 10_000).is_some());
    }
}
