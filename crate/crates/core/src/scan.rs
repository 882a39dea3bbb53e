//! Bulk evaluation of the pipeline over boxes of (e, c, a, b).

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::lattice::{Divisor, RuledSurface, SmoothHint};
use crate::moduli::{
    check_stability, conformal_block_dim, det_degree_closed, moduli_dimension, twist_degree,
};
use crate::render::{JsonInt, OutputFormat};

/// Column set of scan tables, in order.
pub const SCAN_CSV_HEADER: [&str; 12] = [
    "e",
    "c",
    "a",
    "b",
    "parity",
    "stable",
    "smooth_hint",
    "genus",
    "n",
    "ell",
    "m",
    "dim",
];

/// Inclusive integer interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    pub lo: i64,
    pub hi: i64,
}

impl Interval {
    pub fn new(lo: i64, hi: i64) -> Self {
        Interval { lo, hi }
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + Clone {
        self.lo..=self.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("expected an interval \"lo..hi\" or a single integer, got {0:?}")]
pub struct ParseIntervalError(String);

/// Accepts `"lo..hi"`, `"lo..=hi"` (both inclusive) or a single integer.
impl FromStr for Interval {
    type Err = ParseIntervalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseIntervalError(s.to_string());
        let t = s.trim();
        if let Some((lo, hi)) = t.split_once("..") {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            let lo = lo.trim().parse().map_err(|_| bad())?;
            let hi = hi.trim().parse().map_err(|_| bad())?;
            Ok(Interval { lo, hi })
        } else {
            let v = t.parse().map_err(|_| bad())?;
            Ok(Interval { lo: v, hi: v })
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RangeError {
    #[error("{name} range {interval} is empty")]
    Empty {
        name: &'static str,
        interval: Interval,
    },
    #[error("{name} range {interval} starts below the minimum {min}")]
    BelowMinimum {
        name: &'static str,
        interval: Interval,
        min: i64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanRange {
    pub e: Interval,
    pub c: Interval,
    pub a: Interval,
    pub b: Interval,
}

impl ScanRange {
    pub fn new(e: Interval, c: Interval, a: Interval, b: Interval) -> Result<Self, RangeError> {
        let range = ScanRange { e, c, a, b };
        range.validate()?;
        Ok(range)
    }

    pub fn validate(&self) -> Result<(), RangeError> {
        for (name, interval) in [("e", self.e), ("c", self.c), ("a", self.a), ("b", self.b)] {
            if interval.is_empty() {
                return Err(RangeError::Empty { name, interval });
            }
        }
        for (name, interval, min) in [("e", self.e, 0), ("c", self.c, 1)] {
            if interval.lo < min {
                return Err(RangeError::BelowMinimum {
                    name,
                    interval,
                    min,
                });
            }
        }
        Ok(())
    }

    /// All (e, c, a, b) points, lexicographically ordered.
    pub fn points(&self) -> Vec<(i64, i64, i64, i64)> {
        let mut out = Vec::new();
        for e in self.e.iter() {
            for c in self.c.iter() {
                for a in self.a.iter() {
                    for b in self.b.iter() {
                        out.push((e, c, a, b));
                    }
                }
            }
        }
        out
    }
}

/// One line of a scan table. Fields that cannot be computed for an invalid
/// point are `None`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub e: i64,
    pub c: i64,
    pub a: i64,
    pub b: i64,
    pub parity: bool,
    pub stable: bool,
    pub smooth_hint: SmoothHint,
    pub genus: JsonInt,
    pub n: Option<JsonInt>,
    pub ell: Option<JsonInt>,
    pub m: Option<JsonInt>,
    pub dim: Option<JsonInt>,
    pub reason: Option<String>,
}

impl ScanRow {
    pub fn is_valid(&self) -> bool {
        self.reason.is_none()
    }

    fn key(&self) -> (i64, i64, i64, i64) {
        (self.e, self.c, self.a, self.b)
    }
}

fn evaluate(e: i64, c: i64, a: i64, b: i64) -> Result<ScanRow, Error> {
    let surface = RuledSurface::new(e)?;
    let c_big = BigInt::from(c);
    let curve = Divisor::new(a, b);
    let parity = surface.parity_ok(&curve);
    let stable = check_stability(&surface, &c_big);
    let mut row = ScanRow {
        e,
        c,
        a,
        b,
        parity,
        stable,
        smooth_hint: surface.smooth_member_hint(&curve),
        genus: surface.adjunction_genus(&curve).into(),
        n: None,
        ell: None,
        m: None,
        dim: None,
        reason: None,
    };
    match conformal_block_dim(&surface, &c_big, &curve) {
        Ok(report) => {
            row.n = Some(report.n.into());
            row.ell = Some(report.twist_ell.into());
            row.m = Some(report.m_closed.into());
            row.dim = Some((&report.dim_blocks).into());
        }
        Err(err) if err.is_validation() => {
            if stable {
                row.n = Some(moduli_dimension(&surface, &c_big)?.into());
            }
            if parity {
                row.ell = Some(twist_degree(&surface, &c_big, &curve)?.into());
                row.m = Some(det_degree_closed(&surface, &c_big, &curve)?.into());
            }
            row.reason = Some(err.reason().to_string());
        }
        Err(err) => return Err(err),
    }
    Ok(row)
}

/// Evaluates every point of `range` in parallel. Rows come back sorted by
/// (e, c, a, b). Invalid points are dropped when `skip_invalid` is set.
/// Any internal invariant failure aborts the scan.
pub fn scan(range: &ScanRange, skip_invalid: bool) -> Result<Vec<ScanRow>, Error> {
    let mut rows = range
        .points()
        .into_par_iter()
        .map(|(e, c, a, b)| evaluate(e, c, a, b))
        .filter(|row| !(skip_invalid && matches!(row, Ok(r) if !r.is_valid())))
        .collect::<Result<Vec<_>, _>>()?;
    rows.sort_by_key(ScanRow::key);
    Ok(rows)
}

fn cell(v: &Option<JsonInt>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

fn record(row: &ScanRow, with_reason: bool) -> Vec<String> {
    let mut rec = vec![
        row.e.to_string(),
        row.c.to_string(),
        row.a.to_string(),
        row.b.to_string(),
        row.parity.to_string(),
        row.stable.to_string(),
        row.smooth_hint.to_string(),
        row.genus.to_string(),
        cell(&row.n),
        cell(&row.ell),
        cell(&row.m),
        cell(&row.dim),
    ];
    if with_reason {
        rec.push(row.reason.clone().unwrap_or_default());
    }
    rec
}

/// Writes a scan table. With `with_reason`, CSV and text tables gain a
/// trailing `reason` column; JSON rows always carry it.
pub fn write_scan(
    rows: &[ScanRow],
    format: OutputFormat,
    with_reason: bool,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    let mut header: Vec<&str> = SCAN_CSV_HEADER.to_vec();
    if with_reason {
        header.push("reason");
    }
    match format {
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(&header)?;
            for row in rows {
                w.write_record(record(row, with_reason))?;
            }
            w.flush()
        }
        OutputFormat::Json => {
            serde_json::to_writer(&mut *out, rows)?;
            writeln!(out)
        }
        OutputFormat::Text => {
            let records: Vec<Vec<String>> = rows.iter().map(|r| record(r, with_reason)).collect();
            let widths: Vec<usize> = (0..header.len())
                .map(|i| {
                    records
                        .iter()
                        .map(|r| r[i].len())
                        .chain(std::iter::once(header[i].len()))
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |cells: Vec<&str>| -> String {
                cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            };
            writeln!(out, "{}", line(header.clone()))?;
            for r in &records {
                writeln!(out, "{}", line(r.iter().map(String::as_str).collect()))?;
            }
            Ok(())
        }
    }
}

/// Total count of conformal blocks over the valid rows.
pub fn total_dimension(rows: &[ScanRow]) -> BigUint {
    rows.iter()
        .filter_map(|r| r.dim.as_ref())
        .map(|d| d.0.to_biguint().expect("dimensions are non-negative"))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> ScanRange {
        ScanRange::new(
            Interval::new(0, 1),
            Interval::new(1, 2),
            Interval::new(0, 2),
            Interval::new(0, 2),
        )
        .unwrap()
    }

    #[test]
    fn parse_intervals() {
        assert_eq!("0..4".parse::<Interval>().unwrap(), Interval::new(0, 4));
        assert_eq!("-6..=6".parse::<Interval>().unwrap(), Interval::new(-6, 6));
        assert_eq!("3".parse::<Interval>().unwrap(), Interval::new(3, 3));
        assert!("a..b".parse::<Interval>().is_err());
    }

    #[test]
    fn range_validation() {
        let ok = Interval::new(0, 1);
        assert!(matches!(
            ScanRange::new(Interval::new(2, 1), ok, ok, ok),
            Err(RangeError::Empty { name: "e", .. })
        ));
        assert!(matches!(
            ScanRange::new(Interval::new(-1, 1), Interval::new(1, 1), ok, ok),
            Err(RangeError::BelowMinimum { name: "e", .. })
        ));
        assert!(matches!(
            ScanRange::new(ok, Interval::new(0, 1), ok, ok),
            Err(RangeError::BelowMinimum { name: "c", .. })
        ));
    }

    #[test]
    fn witness_row_present() {
        let rows = scan(&small(), true).unwrap();
        let row = rows
            .iter()
            .find(|r| (r.e, r.c, r.a, r.b) == (0, 1, 2, 2))
            .unwrap();
        assert_eq!(row.dim, Some(JsonInt(2.into())));
        assert!(rows.iter().all(ScanRow::is_valid));
        assert!(rows.windows(2).all(|w| w[0].key() < w[1].key()));
    }

    #[test]
    fn invalid_rows_carry_reason() {
        let all = scan(&small(), false).unwrap();
        assert_eq!(all.len(), small().points().len());
        let bad = all
            .iter()
            .find(|r| (r.e, r.c, r.a, r.b) == (1, 1, 1, 0))
            .unwrap();
        assert_eq!(bad.reason.as_deref(), Some("parity"));
        assert!(bad.m.is_none() && bad.dim.is_none());
        assert_eq!(bad.n, Some(JsonInt(2.into())));
    }

    #[test]
    fn all_parity_failures_give_header_only() {
        // Σ·(1,b) = b − e on F_1 is odd for even b.
        let range = ScanRange::new(
            Interval::new(1, 1),
            Interval::new(1, 3),
            Interval::new(1, 1),
            Interval::new(0, 0),
        )
        .unwrap();
        let rows = scan(&range, true).unwrap();
        assert!(rows.is_empty());
        let mut buf = Vec::new();
        write_scan(&rows, OutputFormat::Csv, false, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            format!("{}\n", SCAN_CSV_HEADER.join(","))
        );
    }

    #[test]
    fn total_dimension_sums_valid_rows() {
        let rows = scan(&small(), false).unwrap();
        let manual: u64 = rows
            .iter()
            .filter_map(|r| r.dim.as_ref())
            .map(|d| u64::try_from(&d.0).unwrap())
            .sum();
        assert_eq!(total_dimension(&rows), BigUint::from(manual));
    }
}
