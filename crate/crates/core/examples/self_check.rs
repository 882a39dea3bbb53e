//! Running the verification suites from code, including against a
//! deliberately broken closed form.

use std::io;

use num_bigint::BigInt;
use ruled_blocks::moduli::det_degree_closed;
use ruled_blocks::verify::{run, Subjects};
use ruled_blocks::{Divisor, Result, RuledSurface};

fn off_by_one(s: &RuledSurface, c: &BigInt, curve: &Divisor) -> Result<BigInt> {
    det_degree_closed(s, c, curve).map(|m| m + 1)
}

fn main() {
    let report = run(2, &Subjects::default());
    report.write(&mut io::stdout().lock()).unwrap();

    println!("\nwith an off-by-one determinant degree:");
    let broken = Subjects {
        det_degree_closed: off_by_one,
        ..Subjects::default()
    };
    let report = run(1, &broken);
    report.write(&mut io::stdout().lock()).unwrap();
    assert!(!report.passed());
}
