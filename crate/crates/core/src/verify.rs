//! Self-verification suites: every closed form is checked against an
//! independent route on a grid whose size is controlled by one parameter.
//!
//! The functions under test are injected through [`Subjects`], so a
//! deliberately broken implementation can be checked to fail.

use std::fmt;
use std::io::Write;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::chow::{self, FamilyChernData};
use crate::cohomology::{self, extension_class, CohomologyTable};
use crate::error::Result;
use crate::lattice::{Divisor, RuledSurface};
use crate::moduli::{self, restriction_degrees, BlocksReport};

pub const DEFAULT_GRID: u32 = 4;
pub const MAX_LISTED_COUNTEREXAMPLES: usize = 10;

type SurfaceDivisorFn<T> = fn(&RuledSurface, &Divisor) -> T;
type SurfaceChernFn<T> = fn(&RuledSurface, &BigInt) -> T;
type PipelineFn<T> = fn(&RuledSurface, &BigInt, &Divisor) -> T;

/// The implementations exercised by the suites.
#[derive(Clone, Copy)]
pub struct Subjects {
    pub cohomology_table: SurfaceDivisorFn<Result<CohomologyTable>>,
    pub chi_rr: SurfaceDivisorFn<BigInt>,
    pub dim_extension_space: SurfaceChernFn<Result<BigUint>>,
    pub moduli_dimension: SurfaceChernFn<Result<BigInt>>,
    pub twist_degree: PipelineFn<Result<BigInt>>,
    pub det_degree_closed: PipelineFn<Result<BigInt>>,
    pub det_degree_grr: fn(usize, &BigInt, &BigInt, &BigInt, &BigInt) -> Result<BigInt>,
    pub grr_pushforward: fn(&FamilyChernData, &BigInt) -> Vec<BigRational>,
    pub conformal_block_dim: PipelineFn<Result<BlocksReport>>,
    pub sections_on_projective_space: fn(&BigInt, &BigInt) -> BigUint,
}

impl Default for Subjects {
    fn default() -> Self {
        Subjects {
            cohomology_table: cohomology::cohomology_table,
            chi_rr: cohomology::chi_rr,
            dim_extension_space: cohomology::dim_extension_space,
            moduli_dimension: moduli::moduli_dimension,
            twist_degree: moduli::twist_degree,
            det_degree_closed: moduli::det_degree_closed,
            det_degree_grr: chow::det_degree_grr,
            grr_pushforward: chow::grr_pushforward,
            conformal_block_dim: moduli::conformal_block_dim,
            sections_on_projective_space: moduli::sections_on_projective_space,
        }
    }
}

/// Bounds of every grid, derived from one size parameter `g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Grid {
    /// e ≤ g and |a|, |b| ≤ 2g for cohomology checks.
    pub cohomology_e: i64,
    pub cohomology_ab: i64,
    /// e ≤ g + 2 and c ≤ 2g + 2 for the dimension laws.
    pub dimension_e: i64,
    pub dimension_c: i64,
    /// e ≤ g, c ≤ g + 2, 0 ≤ a ≤ g + 2, |b| ≤ g + 2 for the pipeline.
    pub pipeline_e: i64,
    pub pipeline_c: i64,
    pub pipeline_ab: i64,
    /// n + m ≤ 3g for brute-force monomial counting.
    pub monomial_total: i64,
}

impl Grid {
    pub fn new(size: u32) -> Self {
        let g = i64::from(size.max(1));
        Grid {
            cohomology_e: g,
            cohomology_ab: 2 * g,
            dimension_e: g + 2,
            dimension_c: 2 * g + 2,
            pipeline_e: g,
            pipeline_c: g + 2,
            pipeline_ab: g + 2,
            monomial_total: 3 * g,
        }
    }

    fn surfaces(max_e: i64) -> impl Iterator<Item = RuledSurface> {
        (0..=max_e).map(|e| RuledSurface::new(e).expect("e >= 0"))
    }

    fn cohomology_points(&self) -> impl Iterator<Item = (RuledSurface, Divisor)> + '_ {
        let r = self.cohomology_ab;
        Grid::surfaces(self.cohomology_e).flat_map(move |s| {
            (-r..=r).flat_map(move |a| {
                let s = s.clone();
                (-r..=r).map(move |b| (s.clone(), Divisor::new(a, b)))
            })
        })
    }

    fn dimension_points(&self) -> impl Iterator<Item = (RuledSurface, BigInt)> + '_ {
        Grid::surfaces(self.dimension_e)
            .flat_map(move |s| (1..=self.dimension_c).map(move |c| (s.clone(), BigInt::from(c))))
    }

    /// Pipeline points with Σ·C even.
    fn pipeline_points(&self) -> Vec<(RuledSurface, BigInt, Divisor)> {
        let r = self.pipeline_ab;
        let mut out = Vec::new();
        for s in Grid::surfaces(self.pipeline_e) {
            for c in 1..=self.pipeline_c {
                for a in 0..=r {
                    for b in -r..=r {
                        let curve = Divisor::new(a, b);
                        if s.parity_ok(&curve) {
                            out.push((s.clone(), BigInt::from(c), curve));
                        }
                    }
                }
            }
        }
        out
    }
}

/// Outcome of one suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        SuiteResult {
            name,
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    fn fail(&mut self, msg: String) {
        self.checked += 1;
        self.failures.push(msg);
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAILED" };
        write!(
            f,
            "{:<20} {:>6}/{:<6} passed  {}",
            self.name,
            self.checked - self.failures.len(),
            self.checked,
            status
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub grid: Grid,
    pub suites: Vec<SuiteResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    /// The first few failures across all suites, prefixed with the suite name.
    pub fn counterexamples(&self, limit: usize) -> Vec<String> {
        self.suites
            .iter()
            .flat_map(|s| s.failures.iter().map(move |f| format!("[{}] {f}", s.name)))
            .take(limit)
            .collect()
    }

    pub fn write(&self, out: &mut dyn Write) -> std::io::Result<()> {
        for suite in &self.suites {
            writeln!(out, "{suite}")?;
        }
        if self.passed() {
            writeln!(out, "all suites passed")
        } else {
            writeln!(out, "counterexamples:")?;
            for line in self.counterexamples(MAX_LISTED_COUNTEREXAMPLES) {
                writeln!(out, "  {line}")?;
            }
            Ok(())
        }
    }
}

/// Counts monomials of total degree `degree` in `vars` variables by visiting
/// every exponent vector once.
pub fn enumerate_monomials(vars: usize, degree: i64) -> u64 {
    // choose the exponent of the first variable, recurse on the rest
    fn walk(vars: usize, remaining: i64) -> u64 {
        if vars == 1 {
            return 1;
        }
        (0..=remaining).map(|k| walk(vars - 1, remaining - k)).sum()
    }
    if degree < 0 || vars == 0 {
        return u64::from(vars == 0 && degree == 0);
    }
    walk(vars, degree)
}

fn suite_chi(grid: &Grid, subjects: &Subjects) -> SuiteResult {
    let mut suite = SuiteResult::new("chi-consistency");
    for (s, d) in grid.cohomology_points() {
        match (subjects.cohomology_table)(&s, &d) {
            Ok(t) => {
                let chi = (subjects.chi_rr)(&s, &d);
                suite.check(t.euler_characteristic() == chi, || {
                    format!(
                        "e={} D=({d}): table {t} has χ={}, Riemann–Roch gives {chi}",
                        s.e(),
                        t.euler_characteristic()
                    )
                });
            }
            Err(err) => suite.fail(format!("e={} D=({d}): {err}", s.e())),
        }
    }
    suite
}

fn suite_serre(grid: &Grid, subjects: &Subjects) -> SuiteResult {
    let mut suite = SuiteResult::new("serre-duality");
    for (s, d) in grid.cohomology_points() {
        let dual = &s.canonical_class() - &d;
        match (
            (subjects.cohomology_table)(&s, &d),
            (subjects.cohomology_table)(&s, &dual),
        ) {
            (Ok(t), Ok(u)) => {
                let ok = (0..=2).all(|i| t.get(i) == u.get(2 - i));
                suite.check(ok, || {
                    format!("e={} D=({d}): {t} vs K−D=({dual}): {u}", s.e())
                });
            }
            (Err(err), _) | (_, Err(err)) => suite.fail(format!("e={} D=({d}): {err}", s.e())),
        }
    }
    suite
}

fn suite_extension(grid: &Grid, subjects: &Subjects) -> SuiteResult {
    let mut suite = SuiteResult::new("extension-law");
    for (s, c) in grid.dimension_points() {
        let expected = BigInt::from(4) * &c + s.e() - 2;
        match (subjects.dim_extension_space)(&s, &c) {
            Ok(dim) => suite.check(BigInt::from(dim.clone()) == expected, || {
                format!(
                    "e={} c={c}: h1 = {dim}, expected 4c+e−2 = {expected}",
                    s.e()
                )
            }),
            Err(err) => suite.fail(format!("e={} c={c}: {err}", s.e())),
        }
        match (subjects.cohomology_table)(&s, &extension_class(&c)) {
            Ok(t) => suite.check(t.h0.is_zero() && t.h2.is_zero(), || {
                format!("e={} c={c}: O(Σ−2cf) has {t}, expected h0 = h2 = 0", s.e())
            }),
            Err(err) => suite.fail(format!("e={} c={c}: {err}", s.e())),
        }
    }
    suite
}

fn suite_moduli_dimension(grid: &Grid, subjects: &Subjects) -> SuiteResult {
    let mut suite = SuiteResult::new("moduli-dimension");
    for (s, c) in grid.dimension_points() {
        let closed = BigInt::from(4) * &c + s.e() - 3;
        let via_h1 = (subjects.dim_extension_space)(&s, &c).map(|d| BigInt::from(d) - 1);
        match ((subjects.moduli_dimension)(&s, &c), via_h1) {
            (Ok(n), Ok(h)) => suite.check(n == closed && n == h, || {
                format!("e={} c={c}: n = {n}, 4c+e−3 = {closed}, h1−1 = {h}", s.e())
            }),
            (Err(err), _) | (_, Err(err)) => suite.fail(format!("e={} c={c}: {err}", s.e())),
        }
    }
    suite
}

fn suite_oracle(points: &[(RuledSurface, BigInt, Divisor)], subjects: &Subjects) -> SuiteResult {
    let mut suite = SuiteResult::new("oracle-agreement");
    for (s, c, curve) in points {
        let tag = || format!("e={} c={c} C=({curve})", s.e());
        let closed = match (subjects.det_degree_closed)(s, c, curve) {
            Ok(m) => m,
            Err(err) => {
                suite.fail(format!("{}: {err}", tag()));
                continue;
            }
        };
        let (d1, d2) = restriction_degrees(s, c, curve);
        suite.check(&d1 + &d2 == s.sigma_degree(curve), || {
            format!(
                "{}: d1 + d2 = {} but Σ·C = {}",
                tag(),
                &d1 + &d2,
                s.sigma_degree(curve)
            )
        });
        suite.check(&d2 - &d1 == &closed * 2, || {
            format!(
                "{}: d2 − d1 = {} but 2m = {}",
                tag(),
                &d2 - &d1,
                &closed * 2
            )
        });
        let n = match (subjects.moduli_dimension)(s, c).map(|n| n.to_usize()) {
            Ok(Some(n)) => n,
            Ok(None) => {
                suite.fail(format!(
                    "{}: moduli dimension does not fit in memory",
                    tag()
                ));
                continue;
            }
            Err(err) => {
                suite.fail(format!("{}: {err}", tag()));
                continue;
            }
        };
        let grr = (subjects.twist_degree)(s, c, curve).and_then(|ell| {
            (subjects.det_degree_grr)(n, &s.adjunction_genus(curve), &d1, &d2, &ell)
        });
        match grr {
            Ok(m) => suite.check(m == closed, || {
                format!("{}: GRR gives m = {m}, closed form {closed}", tag())
            }),
            Err(err) => suite.fail(format!("{}: {err}", tag())),
        }
    }
    suite
}

fn suite_twist(points: &[(RuledSurface, BigInt, Divisor)], subjects: &Subjects) -> SuiteResult {
    let mut suite = SuiteResult::new("twist-condition");
    for (s, c, curve) in points {
        let (d1, d2) = restriction_degrees(s, c, curve);
        match (subjects.twist_degree)(s, c, curve) {
            Ok(ell) => {
                let data =
                    FamilyChernData::rank_two_extension(1, s.adjunction_genus(curve), &d1, &d2);
                let r = (subjects.grr_pushforward)(&data, &ell);
                suite.check(r[0].is_zero(), || {
                    format!(
                        "e={} c={c} C=({curve}): ℓ = {ell} leaves virtual rank {}",
                        s.e(),
                        r[0]
                    )
                });
            }
            Err(err) => suite.fail(format!("e={} c={c} C=({curve}): {err}", s.e())),
        }
    }
    suite
}

fn suite_monomials(
    grid: &Grid,
    points: &[(RuledSurface, BigInt, Divisor)],
    subjects: &Subjects,
) -> SuiteResult {
    let mut suite = SuiteResult::new("monomial-count");
    let total = grid.monomial_total;
    for n in 0..=total {
        for m in -2..=(total - n) {
            let count = BigUint::from(enumerate_monomials(n as usize + 1, m));
            let got = (subjects.sections_on_projective_space)(&BigInt::from(n), &BigInt::from(m));
            suite.check(got == count, || {
                format!("n={n} m={m}: formula {got}, enumeration {count}")
            });
        }
    }
    for (s, c, curve) in points {
        let tag = || format!("e={} c={c} C=({curve})", s.e());
        let report = match (subjects.conformal_block_dim)(s, c, curve) {
            Ok(r) => r,
            Err(err) => {
                suite.fail(format!("{}: {err}", tag()));
                continue;
            }
        };
        let binom = if report.m_closed < BigInt::zero() {
            BigUint::zero()
        } else {
            let top = (&report.n + &report.m_closed)
                .to_biguint()
                .expect("non-negative");
            moduli::binom(&top, &report.n)
        };
        suite.check(report.dim_blocks == binom, || {
            format!(
                "{}: dim {} but binom(n+m, n) = {binom}",
                tag(),
                report.dim_blocks
            )
        });
        if let (Some(n), Some(m)) = (report.n.to_i64(), report.m_closed.to_i64()) {
            if n + m <= total {
                let count = BigUint::from(enumerate_monomials(n as usize + 1, m));
                suite.check(report.dim_blocks == count, || {
                    format!(
                        "{}: dim {} but {count} monomials of degree {m} in {} variables",
                        tag(),
                        report.dim_blocks,
                        n + 1
                    )
                });
            }
        }
    }
    suite
}

/// Runs every suite at the given grid size.
pub fn run(size: u32, subjects: &Subjects) -> VerifyReport {
    let grid = Grid::new(size);
    let points = grid.pipeline_points();
    let suites = vec![
        suite_chi(&grid, subjects),
        suite_serre(&grid, subjects),
        suite_extension(&grid, subjects),
        suite_moduli_dimension(&grid, subjects),
        suite_oracle(&points, subjects),
        suite_twist(&points, subjects),
        suite_monomials(&grid, &points, subjects),
    ];
    VerifyReport { grid, suites }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_enumeration_small_cases() {
        assert_eq!(enumerate_monomials(1, 5), 1);
        assert_eq!(enumerate_monomials(2, 3), 4);
        assert_eq!(enumerate_monomials(3, 2), 6);
        assert_eq!(enumerate_monomials(4, -1), 0);
        assert_eq!(enumerate_monomials(0, 0), 1);
    }

    #[test]
    fn grid_four_matches_documented_bounds() {
        let g = Grid::new(4);
        assert_eq!((g.cohomology_e, g.cohomology_ab), (4, 8));
        assert_eq!((g.dimension_e, g.dimension_c), (6, 10));
        assert_eq!((g.pipeline_e, g.pipeline_c, g.pipeline_ab), (4, 6, 6));
        assert_eq!(g.monomial_total, 12);
    }

    #[test]
    fn minimal_grid_exercises_every_suite() {
        let report = run(1, &Subjects::default());
        assert!(report.passed(), "{:?}", report.counterexamples(10));
        assert_eq!(report.suites.len(), 7);
        assert!(report.suites.iter().all(|s| s.checked > 0));
    }

    fn broken_closed_form(s: &RuledSurface, c: &BigInt, curve: &Divisor) -> Result<BigInt> {
        moduli::det_degree_closed(s, c, curve).map(|m| m + 1)
    }

    #[test]
    fn corrupted_subject_is_caught() {
        let subjects = Subjects {
            det_degree_closed: broken_closed_form,
            ..Subjects::default()
        };
        let report = run(1, &subjects);
        assert!(!report.passed());
        let oracle = report
            .suites
            .iter()
            .find(|s| s.name == "oracle-agreement")
            .unwrap();
        assert!(!oracle.passed());
        assert!(
            report.counterexamples(MAX_LISTED_COUNTEREXAMPLES).len() <= MAX_LISTED_COUNTEREXAMPLES
        );
    }
}
