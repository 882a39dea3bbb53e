//! Text, CSV and JSON renderings of reports and cohomology tables.
//!
//! JSON integers whose magnitude is at most 2⁵³ are written as numbers and
//! anything larger as a decimal string, so that consumers with IEEE doubles
//! never lose precision.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use clap::ValueEnum;
use num_bigint::{BigInt, BigUint};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cohomology::CohomologyTable;
use crate::lattice::{Divisor, SmoothHint};
use crate::moduli::BlocksReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Csv,
    Json,
}

const JSON_SAFE_LIMIT: u64 = 1 << 53;

/// An integer that serializes as a JSON number when it is exactly
/// representable as a double and as a string otherwise.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JsonInt(pub BigInt);

impl From<BigInt> for JsonInt {
    fn from(v: BigInt) -> Self {
        JsonInt(v)
    }
}

impl From<&BigInt> for JsonInt {
    fn from(v: &BigInt) -> Self {
        JsonInt(v.clone())
    }
}

impl From<&BigUint> for JsonInt {
    fn from(v: &BigUint) -> Self {
        JsonInt(BigInt::from(v.clone()))
    }
}

impl fmt::Display for JsonInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.0.magnitude() <= &BigUint::from(JSON_SAFE_LIMIT) {
            let v = i64::try_from(&self.0).expect("|v| <= 2^53 fits in i64");
            serializer.serialize_i64(v)
        } else {
            serializer.serialize_str(&self.0.to_string())
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct JsonIntVisitor;

        impl Visitor<'_> for JsonIntVisitor {
            type Value = JsonInt;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonInt, E> {
                Ok(JsonInt(v.into()))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonInt, E> {
                Ok(JsonInt(v.into()))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<JsonInt, E> {
                BigInt::from_str(v).map(JsonInt).map_err(E::custom)
            }
        }

        deserializer.deserialize_any(JsonIntVisitor)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecJson {
    pub e: JsonInt,
    pub c: JsonInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorJson {
    pub a: JsonInt,
    pub b: JsonInt,
}

impl From<&Divisor> for DivisorJson {
    fn from(d: &Divisor) -> Self {
        DivisorJson {
            a: (&d.a).into(),
            b: (&d.b).into(),
        }
    }
}

/// Wire form of [`BlocksReport`]; field order here is the canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub spec: SpecJson,
    pub curve: DivisorJson,
    pub parity_ok: bool,
    pub smooth_hint: SmoothHint,
    #[serde(rename = "genus_C")]
    pub genus_c: JsonInt,
    pub n: JsonInt,
    pub d1: JsonInt,
    pub d2: JsonInt,
    pub twist_ell: JsonInt,
    pub m_closed: JsonInt,
    pub m_grr: JsonInt,
    pub dim_blocks: JsonInt,
}

impl From<&BlocksReport> for ReportJson {
    fn from(r: &BlocksReport) -> Self {
        ReportJson {
            spec: SpecJson {
                e: r.spec.surface().e().into(),
                c: r.spec.c().into(),
            },
            curve: (&r.curve).into(),
            parity_ok: r.parity_ok,
            smooth_hint: r.smooth_hint,
            genus_c: (&r.genus_c).into(),
            n: (&r.n).into(),
            d1: (&r.d1).into(),
            d2: (&r.d2).into(),
            twist_ell: (&r.twist_ell).into(),
            m_closed: (&r.m_closed).into(),
            m_grr: (&r.m_grr).into(),
            dim_blocks: (&r.dim_blocks).into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyJson {
    pub e: JsonInt,
    pub divisor: DivisorJson,
    pub h0: JsonInt,
    pub h1: JsonInt,
    pub h2: JsonInt,
    pub chi: JsonInt,
}

impl CohomologyJson {
    pub fn new(e: &BigInt, divisor: &Divisor, table: &CohomologyTable) -> Self {
        CohomologyJson {
            e: e.into(),
            divisor: divisor.into(),
            h0: (&table.h0).into(),
            h1: (&table.h1).into(),
            h2: (&table.h2).into(),
            chi: table.euler_characteristic().into(),
        }
    }
}

/// Machine-readable failure record printed on validation errors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorJson {
    pub error: String,
    pub reason: String,
}

pub const REPORT_CSV_HEADER: [&str; 14] = [
    "e",
    "c",
    "a",
    "b",
    "parity_ok",
    "smooth_hint",
    "genus_C",
    "n",
    "d1",
    "d2",
    "twist_ell",
    "m_closed",
    "m_grr",
    "dim_blocks",
];

pub const COHOMOLOGY_CSV_HEADER: [&str; 7] = ["e", "a", "b", "h0", "h1", "h2", "chi"];

pub fn write_report(
    report: &BlocksReport,
    format: OutputFormat,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    match format {
        OutputFormat::Text => {
            let rows: [(&str, String); 13] = [
                (
                    "surface",
                    format!(
                        "{} (e = {})",
                        report.spec.surface(),
                        report.spec.surface().e()
                    ),
                ),
                ("c2", report.spec.c().to_string()),
                (
                    "curve",
                    format!("{}Σ + {}f", report.curve.a, report.curve.b),
                ),
                ("parity_ok", report.parity_ok.to_string()),
                ("smooth_hint", report.smooth_hint.to_string()),
                ("genus_C", report.genus_c.to_string()),
                ("n", report.n.to_string()),
                ("d1", report.d1.to_string()),
                ("d2", report.d2.to_string()),
                ("twist_ell", report.twist_ell.to_string()),
                ("m_closed", report.m_closed.to_string()),
                ("m_grr", report.m_grr.to_string()),
                ("dim_blocks", report.dim_blocks.to_string()),
            ];
            for (key, value) in rows {
                writeln!(out, "{key:<12} {value}")?;
            }
            Ok(())
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(REPORT_CSV_HEADER)?;
            w.write_record([
                report.spec.surface().e().to_string(),
                report.spec.c().to_string(),
                report.curve.a.to_string(),
                report.curve.b.to_string(),
                report.parity_ok.to_string(),
                report.smooth_hint.to_string(),
                report.genus_c.to_string(),
                report.n.to_string(),
                report.d1.to_string(),
                report.d2.to_string(),
                report.twist_ell.to_string(),
                report.m_closed.to_string(),
                report.m_grr.to_string(),
                report.dim_blocks.to_string(),
            ])?;
            w.flush()
        }
        OutputFormat::Json => write_json(&ReportJson::from(report), out),
    }
}

pub fn write_cohomology(
    e: &BigInt,
    divisor: &Divisor,
    table: &CohomologyTable,
    format: OutputFormat,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    let chi = table.euler_characteristic();
    match format {
        OutputFormat::Text => {
            writeln!(out, "O({}Σ + {}f) on F_{}", divisor.a, divisor.b, e)?;
            writeln!(out, "h0  {}", table.h0)?;
            writeln!(out, "h1  {}", table.h1)?;
            writeln!(out, "h2  {}", table.h2)?;
            writeln!(out, "chi {chi}")
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(COHOMOLOGY_CSV_HEADER)?;
            w.write_record([
                e.to_string(),
                divisor.a.to_string(),
                divisor.b.to_string(),
                table.h0.to_string(),
                table.h1.to_string(),
                table.h2.to_string(),
                chi.to_string(),
            ])?;
            w.flush()
        }
        OutputFormat::Json => write_json(&CohomologyJson::new(e, divisor, table), out),
    }
}

/// Compact JSON followed by a newline.
pub fn write_json<T: Serialize>(value: &T, out: &mut dyn Write) -> std::io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}
