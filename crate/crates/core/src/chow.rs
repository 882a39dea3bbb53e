//! Truncated rational Chow ring of C × Pⁿ, enough to run Grothendieck–Riemann–Roch
//! for families of line-bundle sums over a curve C.
//!
//! An element is `A(h) + B(h)·pt` where `h` is the hyperplane class on Pⁿ
//! (h^{n+1} = 0) and `pt` is the point class of C (pt² = 0). Integration
//! along C keeps the `pt` component.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChowElement {
    n: usize,
    base: Vec<BigRational>,
    fiber: Vec<BigRational>,
}

fn zeros(len: usize) -> Vec<BigRational> {
    vec![BigRational::zero(); len]
}

fn rat(v: &BigInt) -> BigRational {
    BigRational::from_integer(v.clone())
}

// Product of two polynomials in h, dropping degrees above n.
fn truncated_product(x: &[BigRational], y: &[BigRational], out: &mut [BigRational]) {
    let top = out.len();
    for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        for (j, yj) in y
            .iter()
            .take(top - i)
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
        {
            out[i + j] += xi * yj;
        }
    }
}

impl ChowElement {
    pub fn zero(n: usize) -> Self {
        ChowElement {
            n,
            base: zeros(n + 1),
            fiber: zeros(n + 1),
        }
    }

    pub fn one(n: usize) -> Self {
        let mut x = ChowElement::zero(n);
        x.base[0] = BigRational::one();
        x
    }

    /// h^power, which is zero once power exceeds n.
    pub fn h_power(n: usize, power: usize) -> Self {
        let mut x = ChowElement::zero(n);
        if power <= n {
            x.base[power] = BigRational::one();
        }
        x
    }

    pub fn h(n: usize) -> Self {
        ChowElement::h_power(n, 1)
    }

    pub fn pt(n: usize) -> Self {
        let mut x = ChowElement::zero(n);
        x.fiber[0] = BigRational::one();
        x
    }

    pub fn from_parts(n: usize, base: Vec<BigRational>, fiber: Vec<BigRational>) -> Result<Self> {
        for len in [base.len(), fiber.len()] {
            if len != n + 1 {
                return Err(Error::CoefficientLength {
                    expected: n + 1,
                    got: len,
                });
            }
        }
        Ok(ChowElement { n, base, fiber })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Coefficients of 1, h, ..., hⁿ.
    pub fn base(&self) -> &[BigRational] {
        &self.base
    }

    /// Coefficients of pt, pt·h, ..., pt·hⁿ.
    pub fn fiber(&self) -> &[BigRational] {
        &self.fiber
    }

    fn check_same_ring(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::TruncationMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        let sum = |x: &[BigRational], y: &[BigRational]| -> Vec<BigRational> {
            x.iter().zip(y).map(|(a, b)| a + b).collect()
        };
        Ok(ChowElement {
            n: self.n,
            base: sum(&self.base, &other.base),
            fiber: sum(&self.fiber, &other.fiber),
        })
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        ChowElement {
            n: self.n,
            base: self.base.iter().map(|c| c * factor).collect(),
            fiber: self.fiber.iter().map(|c| c * factor).collect(),
        }
    }

    /// (A + B·pt)(A' + B'·pt) = AA' + (AB' + BA')·pt, truncated at h^{n+1}.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        let mut out = ChowElement::zero(self.n);
        truncated_product(&self.base, &other.base, &mut out.base);
        truncated_product(&self.base, &other.fiber, &mut out.fiber);
        truncated_product(&self.fiber, &other.base, &mut out.fiber);
        Ok(out)
    }

    /// Pushforward along C → point: the pt-component as a class on Pⁿ.
    pub fn integrate_along_curve(&self) -> Vec<BigRational> {
        self.fiber.clone()
    }
}

impl fmt::Display for ChowElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (part, suffix) in [(&self.base, ""), (&self.fiber, "pt")] {
            for (j, c) in part.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let hpart = match j {
                    0 => String::new(),
                    1 => "h".to_string(),
                    _ => format!("h^{j}"),
                };
                let mono = match (suffix.is_empty(), hpart.is_empty()) {
                    (true, _) => hpart,
                    (false, true) => suffix.to_string(),
                    (false, false) => format!("{suffix}·{hpart}"),
                };
                terms.push(if mono.is_empty() {
                    c.to_string()
                } else if c.is_one() {
                    mono
                } else {
                    format!("({c}){mono}")
                });
            }
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// ch of (degree d on C) ⊠ O(k): (1 + d·pt)·exp(k·h).
pub fn ch_line(n: usize, d: &BigInt, k: &BigInt) -> ChowElement {
    let mut exp = Vec::with_capacity(n + 1);
    let mut term = BigRational::one();
    let k = rat(k);
    for j in 0..=n {
        if j > 0 {
            term = term * &k / BigRational::from_integer(BigInt::from(j));
        }
        exp.push(term.clone());
    }
    let d = rat(d);
    let fiber = exp.iter().map(|c| c * &d).collect();
    ChowElement {
        n,
        base: exp,
        fiber,
    }
}

/// Todd class of a curve of arithmetic genus g: 1 + (1 − g)·pt.
pub fn todd_curve(n: usize, genus: &BigInt) -> ChowElement {
    let mut x = ChowElement::one(n);
    x.fiber[0] = rat(&(BigInt::one() - genus));
    x
}

/// One summand (degree on C) ⊠ O(twist·h) of a split family on C × Pⁿ.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LineSummand {
    pub degree: BigInt,
    pub twist: BigInt,
}

impl LineSummand {
    pub fn new(degree: impl Into<BigInt>, twist: impl Into<BigInt>) -> Self {
        LineSummand {
            degree: degree.into(),
            twist: twist.into(),
        }
    }
}

/// Chern data of a family of bundles on C with parameter space Pⁿ,
/// recorded through the line bundles of its associated graded.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilyChernData {
    n: usize,
    genus: BigInt,
    summands: Vec<LineSummand>,
}

impl FamilyChernData {
    pub fn new(n: usize, genus: impl Into<BigInt>, summands: Vec<LineSummand>) -> Result<Self> {
        if summands.is_empty() {
            return Err(Error::EmptyFamily);
        }
        Ok(FamilyChernData {
            n,
            genus: genus.into(),
            summands,
        })
    }

    /// The restriction to C × Pⁿ of an extension 0 → A → E → B ⊗ O(−1) → 0
    /// with deg A|_C = d1 and deg B|_C = d2.
    pub fn rank_two_extension(
        n: usize,
        genus: impl Into<BigInt>,
        d1: &BigInt,
        d2: &BigInt,
    ) -> Self {
        FamilyChernData {
            n,
            genus: genus.into(),
            summands: vec![
                LineSummand::new(d1.clone(), 0),
                LineSummand::new(d2.clone(), -1),
            ],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn genus(&self) -> &BigInt {
        &self.genus
    }

    pub fn summands(&self) -> &[LineSummand] {
        &self.summands
    }

    /// ch(E ⊗ p_C^*L) for a line bundle L of degree `ell` on C.
    pub fn twisted_chern_character(&self, ell: &BigInt) -> ChowElement {
        self.summands
            .iter()
            .map(|s| ch_line(self.n, &(&s.degree + ell), &s.twist))
            .fold(ChowElement::zero(self.n), |acc, x| {
                acc.add(&x).expect("summands share the truncation degree")
            })
    }
}

/// ch of the derived pushforward of E ⊗ p_C^*L to Pⁿ, as coefficients r_0..r_n of
/// 1, h, ..., hⁿ. r_0 is the fiberwise χ and r_1 is c_1.
pub fn grr_pushforward(data: &FamilyChernData, ell: &BigInt) -> Vec<BigRational> {
    let td = todd_curve(data.n, &data.genus);
    data.twisted_chern_character(ell)
        .mul(&td)
        .expect("todd class built at the family's truncation degree")
        .integrate_along_curve()
}

/// Degree m of the dual determinant of cohomology for the rank-two family with
/// restricted degrees d1, d2, computed through GRR.
pub fn det_degree_grr(
    n: usize,
    genus: &BigInt,
    d1: &BigInt,
    d2: &BigInt,
    ell: &BigInt,
) -> Result<BigInt> {
    let data = FamilyChernData::rank_two_extension(n, genus.clone(), d1, d2);
    let r = grr_pushforward(&data, ell);
    if !r[0].is_zero() {
        return Err(Error::NonzeroVirtualRank(r[0].clone()));
    }
    let Some(c1) = r.get(1) else {
        // Pic of a point is trivial.
        return Ok(BigInt::zero());
    };
    if !c1.is_integer() {
        return Err(Error::NonIntegral {
            what: "c1 of the pushforward",
            value: c1.clone(),
        });
    }
    Ok(-c1.to_integer())
}
