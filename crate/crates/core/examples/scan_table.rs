//! Scanning a box of (e, c, a, b) and summarising the results.

use std::io;

use ruled_blocks::scan::{scan, total_dimension, write_scan, Interval, ScanRange};
use ruled_blocks::OutputFormat;

fn main() {
    let range = ScanRange::new(
        Interval::new(0, 2),
        Interval::new(1, 2),
        Interval::new(0, 3),
        Interval::new(0, 4),
    )
    .unwrap();
    let rows = scan(&range, true).unwrap();
    write_scan(&rows, OutputFormat::Text, false, &mut io::stdout().lock()).unwrap();
    let nonzero = rows
        .iter()
        .filter(|r| r.dim.as_ref().is_some_and(|d| d.0 > 0.into()))
        .count();
    println!(
        "\n{} valid rows, {nonzero} with nonzero dimension, total {}",
        rows.len(),
        total_dimension(&rows)
    );
}
