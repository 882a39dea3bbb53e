//! Dimension of the extension space H¹(O(Σ − 2cf)) and of the moduli
//! space Pⁿ, for a range of e and c.

use num_bigint::BigInt;
use ruled_blocks::moduli::moduli_dimension;
use ruled_blocks::{dim_extension_space, RuledSurface};

fn main() {
    println!("{:>3} {:>3} {:>6} {:>4}", "e", "c", "h1", "n");
    for e in 0..=4 {
        let s = RuledSurface::new(e).unwrap();
        for c in 1..=4 {
            let c = BigInt::from(c);
            let h1 = dim_extension_space(&s, &c).unwrap();
            let n = moduli_dimension(&s, &c).unwrap();
            println!("{e:>3} {c:>3} {h1:>6} {n:>4}");
        }
    }

    // arbitrary precision all the way through
    let s = RuledSurface::new(3).unwrap();
    let c = BigInt::from(10).pow(25);
    println!(
        "\ne = 3, c = 10^25: n = {}",
        moduli_dimension(&s, &c).unwrap()
    );
}
