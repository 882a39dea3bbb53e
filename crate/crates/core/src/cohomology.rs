//! Line bundle cohomology on F_e.
//!
//! For a ≥ 0 the projection π: F_e → P¹ has π_*O(aΣ + bf) = ⊕_{k=0..a} O(b − ke)
//! and no higher direct images, so everything reduces to P¹. Classes with
//! a ≤ −2 go through Serre duality; a = −1 has no cohomology at all.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lattice::{Divisor, RuledSurface};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CohomologyTable {
    pub h0: BigUint,
    pub h1: BigUint,
    pub h2: BigUint,
}

impl CohomologyTable {
    pub fn zero() -> Self {
        CohomologyTable {
            h0: BigUint::zero(),
            h1: BigUint::zero(),
            h2: BigUint::zero(),
        }
    }

    pub fn get(&self, i: usize) -> &BigUint {
        match i {
            0 => &self.h0,
            1 => &self.h1,
            2 => &self.h2,
            _ => panic!("a surface has cohomology only in degrees 0..=2, asked for {i}"),
        }
    }

    pub fn euler_characteristic(&self) -> BigInt {
        BigInt::from(self.h0.clone()) - BigInt::from(self.h1.clone())
            + BigInt::from(self.h2.clone())
    }

    fn flipped(self) -> Self {
        CohomologyTable {
            h0: self.h2,
            h1: self.h1,
            h2: self.h0,
        }
    }
}

impl fmt::Display for CohomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.h0, self.h1, self.h2)
    }
}

/// h⁰(P¹, O(d)).
pub fn h0_p1(d: &BigInt) -> BigUint {
    let v: BigInt = d + 1;
    if v.is_positive() {
        v.magnitude().clone()
    } else {
        BigUint::zero()
    }
}

/// h¹(P¹, O(d)).
pub fn h1_p1(d: &BigInt) -> BigUint {
    let v: BigInt = -d - 1;
    if v.is_positive() {
        v.magnitude().clone()
    } else {
        BigUint::zero()
    }
}

fn summand_count(d: &Divisor) -> Result<u64> {
    if d.a.is_negative() {
        return Err(Error::NegativeSectionCoefficient(d.a.clone()));
    }
    d.a.to_u64()
        .and_then(|a| a.checked_add(1))
        .ok_or_else(|| Error::TooLarge {
            what: "section coefficient a",
            value: d.a.clone(),
        })
}

fn degrees_iter<'a>(
    s: &'a RuledSurface,
    d: &'a Divisor,
) -> Result<impl Iterator<Item = BigInt> + 'a> {
    let count = summand_count(d)?;
    Ok((0..count).map(move |k| &d.b - s.e() * BigInt::from(k)))
}

/// Degrees [b, b − e, ..., b − ae] of the line bundles in π_*O(D).
pub fn pushforward_degrees(s: &RuledSurface, d: &Divisor) -> Result<Vec<BigInt>> {
    Ok(degrees_iter(s, d)?.collect())
}

/// Exact (h⁰, h¹, h²) of O(D).
///
/// Fails only when the relevant |a| does not fit in memory-sized loops.
pub fn cohomology_table(s: &RuledSurface, d: &Divisor) -> Result<CohomologyTable> {
    if d.a == -BigInt::one() {
        return Ok(CohomologyTable::zero());
    }
    if d.a.is_negative() {
        let dual = &s.canonical_class() - d;
        return Ok(direct_image_table(s, &dual)?.flipped());
    }
    direct_image_table(s, d)
}

fn direct_image_table(s: &RuledSurface, d: &Divisor) -> Result<CohomologyTable> {
    let mut table = CohomologyTable::zero();
    for deg in degrees_iter(s, d)? {
        table.h0 += h0_p1(&deg);
        table.h1 += h1_p1(&deg);
    }
    Ok(table)
}

/// χ(O(D)) = 1 + D·(D − K)/2 by Riemann–Roch.
pub fn chi_rr(s: &RuledSurface, d: &Divisor) -> BigInt {
    let twice = s.intersect(d, &(d - &s.canonical_class()));
    BigInt::one() + twice / 2
}

/// The class Σ − 2cf whose H¹ parametrizes extensions of O(cf) by O(Σ − cf).
pub fn extension_class(c: &BigInt) -> Divisor {
    Divisor::new(1, -(c * 2u32))
}

/// dim H¹(F_e, O(Σ − 2cf)), computed from the cohomology table.
pub fn dim_extension_space(s: &RuledSurface, c: &BigInt) -> Result<BigUint> {
    if c < &BigInt::one() {
        return Err(Error::Unstable {
            e: s.e().clone(),
            c: c.clone(),
        });
    }
    Ok(cohomology_table(s, &extension_class(c))?.h1)
}
