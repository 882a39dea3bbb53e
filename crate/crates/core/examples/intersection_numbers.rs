//! Picard lattice arithmetic on F_e: intersections, canonical class,
//! arithmetic genus, the parity condition and the smoothness hint.
//!
//!     cargo run --example intersection_numbers -- 2

use ruled_blocks::{Divisor, RuledSurface};

fn main() {
    let e: i64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1);
    let s = RuledSurface::new(e).expect("e must be non-negative");
    let sigma = Divisor::section();
    let fiber = Divisor::fiber();

    println!(
        "{s}: Σ² = {}, Σ·f = {}, f² = {}",
        s.intersect(&sigma, &sigma),
        s.intersect(&sigma, &fiber),
        s.intersect(&fiber, &fiber)
    );
    let k = s.canonical_class();
    println!("K = ({k}), K² = {}", s.intersect(&k, &k));
    println!();
    println!(
        "{:>8}  {:>5}  {:>6}  {:>6}  {:>8}",
        "C", "C²", "genus", "Σ·C", "hint"
    );
    for (a, b) in [
        (1, 0),
        (0, 1),
        (0, 2),
        (1, e),
        (1, e + 1),
        (2, 2 * e + 1),
        (2, 2),
        (3, 3 * e + 2),
        (-1, 4),
    ] {
        let c = Divisor::new(a, b);
        println!(
            "{:>8}  {:>5}  {:>6}  {:>6}  {:>8}{}",
            format!("({c})"),
            s.intersect(&c, &c),
            s.adjunction_genus(&c),
            s.sigma_degree(&c),
            s.smooth_member_hint(&c).to_string(),
            if s.parity_ok(&c) {
                ""
            } else {
                "  (odd: excluded)"
            }
        );
    }
}
