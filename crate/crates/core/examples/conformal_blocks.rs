//! One end-to-end pipeline run, printed as text and JSON.
//!
//!     cargo run --example conformal_blocks -- 0 1 2 2

use std::io;

use num_bigint::BigInt;
use ruled_blocks::render::write_report;
use ruled_blocks::{conformal_block_dim, Divisor, OutputFormat, RuledSurface};

fn main() {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .filter_map(|s| s.parse().ok())
        .collect();
    let [e, c, a, b] = match args[..] {
        [e, c, a, b] => [e, c, a, b],
        _ => [0, 1, 2, 2],
    };
    let s = RuledSurface::new(e).expect("e must be non-negative");
    match conformal_block_dim(&s, &BigInt::from(c), &Divisor::new(a, b)) {
        Ok(report) => {
            let mut out = io::stdout().lock();
            write_report(&report, OutputFormat::Text, &mut out).unwrap();
            println!();
            write_report(&report, OutputFormat::Json, &mut out).unwrap();
        }
        Err(err) => eprintln!("{err} ({})", err.reason()),
    }
}
