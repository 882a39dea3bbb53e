//! Rank-two bundles with c1 = Σ and c2 = c on F_e, and the dimension of the
//! space of sections of their determinant line bundle over a curve C.
//!
//! Inside the stability window every such bundle is a nontrivial extension
//! 0 → O(Σ − cf) → E → O(cf) → 0, so the moduli space is P(H¹(O(Σ − 2cf))) ≅ Pⁿ.
//! Over C × Pⁿ the universal bundle restricts to an extension of
//! (deg d2) ⊠ O(−1) by (deg d1) ⊠ O, and its determinant line bundle is O(m).
//!
//! [`conformal_block_dim`] computes m twice, once from the intersection number
//! (cf − Σ/2)·C and once through Grothendieck–Riemann–Roch in [`crate::chow`],
//! and fails loudly if they differ.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::chow::det_degree_grr;
use crate::cohomology::dim_extension_space;
use crate::error::{Error, Result};
use crate::lattice::{Divisor, RuledSurface, SmoothHint};

/// Truncation degree used for the GRR route inside the pipeline. Only r_0 and
/// r_1 are read, and truncating h is a ring quotient, so any value ≥ 1 gives
/// the same m; 2 keeps one extra coefficient in play.
pub const PIPELINE_TRUNCATION: usize = 2;

/// Moduli data M(2, Σ, c) on F_e. Construction enforces the stability window.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuliSpec {
    surface: RuledSurface,
    c: BigInt,
}

impl ModuliSpec {
    pub fn new(surface: RuledSurface, c: impl Into<BigInt>) -> Result<Self> {
        let c = c.into();
        if !check_stability(&surface, &c) {
            return Err(Error::Unstable {
                e: surface.e().clone(),
                c,
            });
        }
        Ok(ModuliSpec { surface, c })
    }

    pub fn surface(&self) -> &RuledSurface {
        &self.surface
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    /// c1 of the bundles, fixed at Σ.
    pub fn first_chern_class(&self) -> Divisor {
        Divisor::section()
    }

    pub const RANK: u32 = 2;
}

/// Everything computed for one (e, c, C).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlocksReport {
    pub spec: ModuliSpec,
    pub curve: Divisor,
    pub parity_ok: bool,
    pub smooth_hint: SmoothHint,
    pub genus_c: BigInt,
    pub n: BigInt,
    pub d1: BigInt,
    pub d2: BigInt,
    pub twist_ell: BigInt,
    pub m_closed: BigInt,
    pub m_grr: BigInt,
    pub dim_blocks: BigUint,
}

/// c > max(−e/4, 0), compared exactly as 4c > max(−e, 0).
pub fn check_stability(s: &RuledSurface, c: &BigInt) -> bool {
    let bound = std::cmp::max(-s.e(), BigInt::zero());
    c * 4 > bound
}

fn require_stable(s: &RuledSurface, c: &BigInt) -> Result<()> {
    if check_stability(s, c) {
        Ok(())
    } else {
        Err(Error::Unstable {
            e: s.e().clone(),
            c: c.clone(),
        })
    }
}

fn require_parity(s: &RuledSurface, curve: &Divisor) -> Result<()> {
    if s.parity_ok(curve) {
        Ok(())
    } else {
        Err(Error::Parity {
            sigma_dot_c: s.sigma_degree(curve),
        })
    }
}

/// n = 4c + e − 3, checked against dim H¹(O(Σ − 2cf)) − 1.
pub fn moduli_dimension(s: &RuledSurface, c: &BigInt) -> Result<BigInt> {
    require_stable(s, c)?;
    let from_cohomology = BigInt::from(dim_extension_space(s, c)?) - 1;
    let closed = c * 4 + s.e() - 3;
    if from_cohomology != closed {
        return Err(Error::OracleDisagreement {
            what: "moduli dimension",
            closed,
            oracle: from_cohomology,
        });
    }
    Ok(from_cohomology)
}

/// Degrees (d1, d2) of O(Σ − cf)|_C and O(cf)|_C.
pub fn restriction_degrees(s: &RuledSurface, c: &BigInt, curve: &Divisor) -> (BigInt, BigInt) {
    let cf = Divisor::new(0, c.clone());
    let sub = &Divisor::section() - &cf;
    (s.intersect(&sub, curve), s.intersect(&cf, curve))
}

/// Degree ℓ of L on C with χ(E|_C ⊗ L) = 0: ℓ = g − 1 − (d1 + d2)/2.
pub fn twist_degree(s: &RuledSurface, c: &BigInt, curve: &Divisor) -> Result<BigInt> {
    require_parity(s, curve)?;
    let (d1, d2) = restriction_degrees(s, c, curve);
    let half = (d1 + d2).div_floor(&BigInt::from(2));
    Ok(s.adjunction_genus(curve) - 1 - half)
}

/// m = (cf − Σ/2)·C, computed as ((2c·f − Σ)·C)/2.
pub fn det_degree_closed(s: &RuledSurface, c: &BigInt, curve: &Divisor) -> Result<BigInt> {
    require_parity(s, curve)?;
    let twice = s.intersect(&Divisor::new(-1, c * 2), curve);
    let (m, rem) = twice.div_rem(&BigInt::from(2));
    debug_assert!(
        rem.is_zero(),
        "parity check guarantees an even intersection"
    );
    Ok(m)
}

/// Binomial coefficient; zero when k < 0 or k > n.
pub fn binom(n: &BigUint, k: &BigInt) -> BigUint {
    if k.is_negative() {
        return BigUint::zero();
    }
    let k = k.magnitude();
    if k > n {
        return BigUint::zero();
    }
    let k = std::cmp::min(k.clone(), n - k);
    let mut acc = BigUint::one();
    let mut i = BigUint::zero();
    while i < k {
        i += 1u32;
        // acc * (n - k + i) is divisible by i at every step
        acc = acc * (n - &k + &i) / &i;
    }
    acc
}

/// dim H⁰(Pⁿ, O(m)) = binom(n + m, n), zero for m < 0.
pub fn sections_on_projective_space(n: &BigInt, m: &BigInt) -> BigUint {
    if m.is_negative() || n.is_negative() {
        return BigUint::zero();
    }
    let total = (n + m).to_biguint().expect("non-negative");
    binom(&total, n)
}

/// Runs the full pipeline for (e, c, C). Both routes to m are always evaluated.
pub fn conformal_block_dim(s: &RuledSurface, c: &BigInt, curve: &Divisor) -> Result<BlocksReport> {
    let spec = ModuliSpec::new(s.clone(), c.clone())?;
    require_parity(s, curve)?;

    let n = moduli_dimension(s, c)?;
    let genus_c = s.adjunction_genus(curve);
    let (d1, d2) = restriction_degrees(s, c, curve);
    let twist_ell = twist_degree(s, c, curve)?;
    let m_closed = det_degree_closed(s, c, curve)?;

    let truncation = match usize::try_from(&n) {
        Ok(n) => n.min(PIPELINE_TRUNCATION),
        Err(_) => PIPELINE_TRUNCATION,
    };
    let m_grr = det_degree_grr(truncation, &genus_c, &d1, &d2, &twist_ell)?;
    if m_grr != m_closed {
        return Err(Error::OracleDisagreement {
            what: "determinant degree m",
            closed: m_closed,
            oracle: m_grr,
        });
    }

    let dim_blocks = sections_on_projective_space(&n, &m_closed);
    Ok(BlocksReport {
        spec,
        curve: curve.clone(),
        parity_ok: true,
        smooth_hint: s.smooth_member_hint(curve),
        genus_c,
        n,
        d1,
        d2,
        twist_ell,
        m_closed,
        m_grr,
        dim_blocks,
    })
}
