//! Grothendieck–Riemann–Roch in the truncated Chow ring of C × Pⁿ: push
//! forward ch(E|_C ⊗ L)·td(C) and read off the determinant degree.

use num_bigint::BigInt;
use ruled_blocks::chow::{ch_line, det_degree_grr, grr_pushforward, todd_curve};
use ruled_blocks::moduli::{restriction_degrees, twist_degree};
use ruled_blocks::{Divisor, FamilyChernData, RuledSurface};

fn main() {
    let n = 3;
    println!(
        "ch((deg 2) ⊠ O(-1)) = {}",
        ch_line(n, &BigInt::from(2), &BigInt::from(-1))
    );
    println!("td(C), g = 1       = {}", todd_curve(n, &BigInt::from(1)));
    println!();

    let s = RuledSurface::new(0).unwrap();
    let c = BigInt::from(1);
    let curve = Divisor::new(2, 2);
    let (d1, d2) = restriction_degrees(&s, &c, &curve);
    let genus = s.adjunction_genus(&curve);
    let ell = twist_degree(&s, &c, &curve).unwrap();
    println!("C = ({curve}) on {s}: g = {genus}, d1 = {d1}, d2 = {d2}, ℓ = {ell}");

    let data = FamilyChernData::rank_two_extension(n, genus.clone(), &d1, &d2);
    let r = grr_pushforward(&data, &ell);
    let rendered: Vec<String> = r.iter().map(ToString::to_string).collect();
    println!(
        "ch(Rp_!(E ⊗ L)) coefficients of 1, h, h², h³: [{}]",
        rendered.join(", ")
    );
    println!(
        "m = −c1 = {}",
        det_degree_grr(n, &genus, &d1, &d2, &ell).unwrap()
    );
}
