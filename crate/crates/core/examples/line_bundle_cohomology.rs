//! Cohomology tables of O(aΣ + bf) on F_e, checked against Riemann–Roch.
//!
//!     cargo run --example line_bundle_cohomology -- 1

use ruled_blocks::cohomology::pushforward_degrees;
use ruled_blocks::{chi_rr, cohomology_table, Divisor, RuledSurface};

fn main() {
    let e: i64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1);
    let s = RuledSurface::new(e).expect("e must be non-negative");

    println!("h0 | h1 | h2 of O(aΣ + bf) on {s}, a = -3..3, b = -4..4\n");
    print!("{:>6}", "a\\b");
    for b in -4..=4 {
        print!("{b:>11}");
    }
    println!();
    for a in -3..=3 {
        print!("{a:>6}");
        for b in -4..=4 {
            let d = Divisor::new(a, b);
            let t = cohomology_table(&s, &d).unwrap();
            assert_eq!(t.euler_characteristic(), chi_rr(&s, &d));
            print!("{:>11}", format!("{}|{}|{}", t.h0, t.h1, t.h2));
        }
        println!();
    }

    let d = Divisor::new(2, 1);
    println!(
        "\nπ_*O({d}) splits as O(k) on P¹ for k in {:?}",
        pushforward_degrees(&s, &d).unwrap()
    );
}
