//! Intersection theory on the Hirzebruch surface F_e.
//!
//! The Picard lattice is free on the class Σ of the negative section and
//! the class f of a fiber, with Σ² = −e, Σ·f = 1 and f² = 0. Every value
//! here is an arbitrary-precision integer.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A rational ruled surface F_e over P¹.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RuledSurface {
    e: BigInt,
}

/// The divisor class aΣ + bf.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Divisor {
    pub a: BigInt,
    pub b: BigInt,
}

/// Whether a class can be expected to contain a smooth irreducible curve.
///
/// Advisory only; nothing in the pipeline refuses to run on `No`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SmoothHint {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for SmoothHint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SmoothHint::Yes => "yes",
            SmoothHint::No => "no",
            SmoothHint::Unknown => "unknown",
        })
    }
}

impl Divisor {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Divisor {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn zero() -> Self {
        Divisor::new(0, 0)
    }

    /// The section class Σ.
    pub fn section() -> Self {
        Divisor::new(1, 0)
    }

    /// The fiber class f.
    pub fn fiber() -> Self {
        Divisor::new(0, 1)
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.a, self.b)
    }
}

/// Parses `"a,b"` as aΣ + bf.
impl FromStr for Divisor {
    type Err = ParseDivisorError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let (a, b) = s
            .split_once(',')
            .ok_or_else(|| ParseDivisorError(s.to_string()))?;
        let parse =
            |t: &str| BigInt::from_str(t.trim()).map_err(|_| ParseDivisorError(s.to_string()));
        Ok(Divisor::new(parse(a)?, parse(b)?))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("expected a divisor class as \"a,b\", got {0:?}")]
pub struct ParseDivisorError(String);

impl Add for &Divisor {
    type Output = Divisor;
    fn add(self, rhs: &Divisor) -> Divisor {
        Divisor::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Add for Divisor {
    type Output = Divisor;
    fn add(self, rhs: Divisor) -> Divisor {
        &self + &rhs
    }
}

impl Sub for &Divisor {
    type Output = Divisor;
    fn sub(self, rhs: &Divisor) -> Divisor {
        Divisor::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Sub for Divisor {
    type Output = Divisor;
    fn sub(self, rhs: Divisor) -> Divisor {
        &self - &rhs
    }
}

impl Neg for &Divisor {
    type Output = Divisor;
    fn neg(self) -> Divisor {
        Divisor::new(-&self.a, -&self.b)
    }
}

impl Neg for Divisor {
    type Output = Divisor;
    fn neg(self) -> Divisor {
        -&self
    }
}

impl Mul<&Divisor> for &BigInt {
    type Output = Divisor;
    fn mul(self, rhs: &Divisor) -> Divisor {
        Divisor::new(self * &rhs.a, self * &rhs.b)
    }
}

impl RuledSurface {
    pub fn new(e: impl Into<BigInt>) -> Result<Self> {
        let e = e.into();
        if e.is_negative() {
            return Err(Error::NegativeInvariant(e));
        }
        Ok(RuledSurface { e })
    }

    pub fn e(&self) -> &BigInt {
        &self.e
    }

    /// D1·D2 = −e·a1·a2 + a1·b2 + a2·b1.
    pub fn intersect(&self, d1: &Divisor, d2: &Divisor) -> BigInt {
        -(&self.e * &d1.a * &d2.a) + &d1.a * &d2.b + &d2.a * &d1.b
    }

    /// K = −2Σ − (e+2)f.
    pub fn canonical_class(&self) -> Divisor {
        Divisor::new(-2, -(&self.e + 2u32))
    }

    /// Arithmetic genus 1 + C·(C+K)/2. Negative for non-reduced classes like 2f.
    pub fn adjunction_genus(&self, curve: &Divisor) -> BigInt {
        let twice = self.intersect(curve, &(curve + &self.canonical_class()));
        debug_assert!(twice.is_even(), "C·(C+K) is always even");
        BigInt::one() + twice / 2
    }

    /// Σ·C, which equals c1·C for the bundles under study.
    pub fn sigma_degree(&self, curve: &Divisor) -> BigInt {
        self.intersect(&Divisor::section(), curve)
    }

    /// f·C, the degree of C over the base P¹.
    pub fn fiber_degree(&self, curve: &Divisor) -> BigInt {
        self.intersect(&Divisor::fiber(), curve)
    }

    /// Σ·C is even, i.e. c1·C is divisible by the rank 2.
    pub fn parity_ok(&self, curve: &Divisor) -> bool {
        self.sigma_degree(curve).is_even()
    }

    pub fn smooth_member_hint(&self, curve: &Divisor) -> SmoothHint {
        let (a, b) = (&curve.a, &curve.b);
        if *curve == Divisor::section() || *curve == Divisor::fiber() {
            return SmoothHint::Yes;
        }
        if a >= &BigInt::one() && b > &(a * &self.e) {
            return SmoothHint::Yes;
        }
        if a.is_negative() || (a.is_zero() && !b.is_one() && !b.is_positive()) {
            return SmoothHint::No;
        }
        if self.sigma_degree(curve).is_negative() && self.fiber_degree(curve).is_negative() {
            return SmoothHint::No;
        }
        SmoothHint::Unknown
    }

    /// Determinant of the Gram matrix on the basis (Σ, f).
    pub fn gram_determinant(&self) -> BigInt {
        let s = Divisor::section();
        let f = Divisor::fiber();
        self.intersect(&s, &s) * self.intersect(&f, &f)
            - self.intersect(&s, &f) * self.intersect(&f, &s)
    }
}

impl fmt::Display for RuledSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surface(e: i64) -> RuledSurface {
        RuledSurface::new(e).unwrap()
    }

    #[test]
    fn intersection_examples() {
        assert_eq!(
            surface(1).intersect(&Divisor::new(1, 0), &Divisor::new(1, 0)),
            BigInt::from(-1)
        );
        assert_eq!(
            surface(5).intersect(&Divisor::new(0, 1), &Divisor::new(0, 1)),
            BigInt::zero()
        );
        assert_eq!(
            surface(2).intersect(&Divisor::new(1, 4), &Divisor::new(1, 0)),
            BigInt::from(2)
        );
    }

    #[test]
    fn negative_invariant_rejected() {
        assert_eq!(
            RuledSurface::new(-1),
            Err(Error::NegativeInvariant(BigInt::from(-1)))
        );
    }

    #[test]
    fn canonical_class_examples() {
        assert_eq!(surface(0).canonical_class(), Divisor::new(-2, -2));
        assert_eq!(surface(1).canonical_class(), Divisor::new(-2, -3));
        assert_eq!(surface(4).canonical_class(), Divisor::new(-2, -6));
    }

    #[test]
    fn genus_examples() {
        assert_eq!(
            surface(1).adjunction_genus(&Divisor::new(1, 0)),
            BigInt::zero()
        );
        assert_eq!(
            surface(0).adjunction_genus(&Divisor::new(2, 2)),
            BigInt::one()
        );
        assert_eq!(
            surface(0).adjunction_genus(&Divisor::new(0, 1)),
            BigInt::zero()
        );
        // two disjoint fibers
        assert_eq!(
            surface(1).adjunction_genus(&Divisor::new(0, 2)),
            BigInt::from(-1)
        );
    }

    #[test]
    fn sections_and_fibers_are_rational() {
        for e in 0..10 {
            let s = surface(e);
            assert!(s.adjunction_genus(&Divisor::section()).is_zero());
            assert!(s.adjunction_genus(&Divisor::fiber()).is_zero());
        }
    }

    #[test]
    fn parity_examples() {
        assert!(surface(0).parity_ok(&Divisor::new(2, 2)));
        assert!(!surface(1).parity_ok(&Divisor::new(1, 0)));
        assert!(surface(2).parity_ok(&Divisor::new(1, 4)));
    }

    #[test]
    fn smooth_hint_examples() {
        assert_eq!(
            surface(0).smooth_member_hint(&Divisor::new(2, 2)),
            SmoothHint::Yes
        );
        for e in 0..6 {
            assert_eq!(
                surface(e).smooth_member_hint(&Divisor::fiber()),
                SmoothHint::Yes
            );
            assert_eq!(
                surface(e).smooth_member_hint(&Divisor::section()),
                SmoothHint::Yes
            );
        }
        assert_eq!(
            surface(2).smooth_member_hint(&Divisor::new(2, 1)),
            SmoothHint::Unknown
        );
        assert_eq!(
            surface(2).smooth_member_hint(&Divisor::new(-1, 3)),
            SmoothHint::No
        );
        assert_eq!(
            surface(0).smooth_member_hint(&Divisor::new(0, 0)),
            SmoothHint::No
        );
        assert_eq!(
            surface(3).smooth_member_hint(&Divisor::new(0, -2)),
            SmoothHint::No
        );
        assert_eq!(
            surface(3).smooth_member_hint(&Divisor::new(0, 2)),
            SmoothHint::Unknown
        );
    }

    #[test]
    fn unimodular_for_every_e() {
        for e in 0..20 {
            assert_eq!(surface(e).gram_determinant(), BigInt::from(-1));
        }
    }

    #[test]
    fn parse_divisor() {
        assert_eq!("2,2".parse::<Divisor>().unwrap(), Divisor::new(2, 2));
        assert_eq!(" -1, 5".parse::<Divisor>().unwrap(), Divisor::new(-1, 5));
        assert!("2".parse::<Divisor>().is_err());
        assert!("x,1".parse::<Divisor>().is_err());
    }

    #[test]
    fn large_values_do_not_overflow() {
        let s = surface(i64::MAX);
        let d = Divisor::new(i64::MAX, i64::MIN);
        let expected: BigInt =
            -BigInt::from(i64::MAX).pow(3) + BigInt::from(i64::MAX) * BigInt::from(i64::MIN) * 2;
        assert_eq!(s.intersect(&d, &d), expected);
    }
}
