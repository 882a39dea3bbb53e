//! Command-line front end.
//!
//! Exit codes: 0 success, 1 internal invariant failure, 2 input validation,
//! 3 I/O.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{ArgAction, Parser, Subcommand};
use num_bigint::BigInt;

use crate::cohomology::cohomology_table;
use crate::error::Error;
use crate::lattice::{Divisor, RuledSurface};
use crate::moduli::conformal_block_dim;
use crate::render::{self, ErrorJson, OutputFormat};
use crate::scan::{self, Interval, ScanRange};
use crate::verify::{self, Subjects};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INTERNAL: u8 = 1;
pub const EXIT_VALIDATION: u8 = 2;
pub const EXIT_IO: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "ruled-blocks",
    version,
    about = "Conformal block dimensions on Hirzebruch surfaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension of the space of conformal blocks for one (e, c, C).
    Dim {
        #[arg(long, allow_hyphen_values = true)]
        e: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        c: BigInt,
        /// Curve class as "a,b" meaning aΣ + bf.
        #[arg(long, allow_hyphen_values = true)]
        curve: Divisor,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Cohomology (h0, h1, h2) and χ of O(aΣ + bf).
    Cohom {
        #[arg(long, allow_hyphen_values = true)]
        e: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        divisor: Divisor,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Table of results over ranges "lo..hi" (inclusive) of e, c, a, b.
    Scan {
        #[arg(long, allow_hyphen_values = true)]
        e: Interval,
        #[arg(long, allow_hyphen_values = true)]
        c: Interval,
        #[arg(long, allow_hyphen_values = true)]
        a: Interval,
        #[arg(long, allow_hyphen_values = true)]
        b: Interval,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Drop rows failing parity or stability; set to false to keep them with a reason.
        #[arg(long, default_value_t = true, action = ArgAction::Set)]
        skip_invalid: bool,
    },
    /// Run the self-verification suites.
    Verify {
        #[arg(long, default_value_t = verify::DEFAULT_GRID, value_parser = clap::value_parser!(u32).range(1..))]
        grid: u32,
    },
}

fn exit_code_for(err: &Error) -> u8 {
    if err.is_validation() {
        EXIT_VALIDATION
    } else {
        EXIT_INTERNAL
    }
}

fn report_error(
    err: &Error,
    format: OutputFormat,
    out: &mut dyn Write,
    errout: &mut dyn Write,
) -> u8 {
    let record = ErrorJson {
        error: err.to_string(),
        reason: err.reason().to_string(),
    };
    let written = match format {
        OutputFormat::Json => render::write_json(&record, out),
        _ => writeln!(errout, "error: {}\nreason: {}", record.error, record.reason),
    };
    if written.is_err() {
        return EXIT_IO;
    }
    exit_code_for(err)
}

fn io_failure(err: std::io::Error, errout: &mut dyn Write) -> u8 {
    let _ = writeln!(errout, "error: {err}\nreason: io");
    EXIT_IO
}

fn cmd_dim(
    e: BigInt,
    c: BigInt,
    curve: Divisor,
    format: OutputFormat,
    out: &mut dyn Write,
    errout: &mut dyn Write,
) -> u8 {
    let result = RuledSurface::new(e).and_then(|s| conformal_block_dim(&s, &c, &curve));
    match result {
        Ok(report) => match render::write_report(&report, format, out) {
            Ok(()) => EXIT_OK,
            Err(err) => io_failure(err, errout),
        },
        Err(err) => report_error(&err, format, out, errout),
    }
}

fn cmd_cohom(
    e: BigInt,
    divisor: Divisor,
    format: OutputFormat,
    out: &mut dyn Write,
    errout: &mut dyn Write,
) -> u8 {
    let result = RuledSurface::new(e.clone()).and_then(|s| cohomology_table(&s, &divisor));
    match result {
        Ok(table) => match render::write_cohomology(&e, &divisor, &table, format, out) {
            Ok(()) => EXIT_OK,
            Err(err) => io_failure(err, errout),
        },
        Err(err) => report_error(&err, format, out, errout),
    }
}

fn cmd_scan(
    range: (Interval, Interval, Interval, Interval),
    format: OutputFormat,
    path: Option<PathBuf>,
    skip_invalid: bool,
    out: &mut dyn Write,
    errout: &mut dyn Write,
) -> u8 {
    let range = match ScanRange::new(range.0, range.1, range.2, range.3) {
        Ok(r) => r,
        Err(err) => {
            let _ = writeln!(errout, "error: {err}\nreason: range");
            return EXIT_VALIDATION;
        }
    };
    let rows = match scan::scan(&range, skip_invalid) {
        Ok(rows) => rows,
        Err(err) => return report_error(&err, OutputFormat::Text, out, errout),
    };
    let with_reason = !skip_invalid;
    let written = match path {
        Some(path) => File::create(&path).and_then(|f| {
            let mut w = BufWriter::new(f);
            scan::write_scan(&rows, format, with_reason, &mut w)?;
            w.flush()
        }),
        None => scan::write_scan(&rows, format, with_reason, out),
    };
    match written {
        Ok(()) => EXIT_OK,
        Err(err) => io_failure(err, errout),
    }
}

fn cmd_verify(grid: u32, out: &mut dyn Write, errout: &mut dyn Write) -> u8 {
    let report = verify::run(grid, &Subjects::default());
    if let Err(err) = report.write(out) {
        return io_failure(err, errout);
    }
    if report.passed() {
        EXIT_OK
    } else {
        EXIT_INTERNAL
    }
}

pub fn execute(cli: Cli, out: &mut dyn Write, errout: &mut dyn Write) -> u8 {
    match cli.command {
        Command::Dim {
            e,
            c,
            curve,
            format,
        } => cmd_dim(e, c, curve, format, out, errout),
        Command::Cohom { e, divisor, format } => cmd_cohom(e, divisor, format, out, errout),
        Command::Scan {
            e,
            c,
            a,
            b,
            format,
            out: path,
            skip_invalid,
        } => cmd_scan((e, c, a, b), format, path, skip_invalid, out, errout),
        Command::Verify { grid } => cmd_verify(grid, out, errout),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, errout: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli, out, errout),
        Err(err) => {
            let code = if err.use_stderr() {
                EXIT_VALIDATION
            } else {
                EXIT_OK
            };
            let rendered = err.render().to_string();
            let _ = if err.use_stderr() {
                write!(errout, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            code
        }
    }
}
