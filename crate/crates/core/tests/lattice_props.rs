use num_bigint::BigInt;
use proptest::prelude::*;
use ruled_blocks::{Divisor, RuledSurface};

fn surface(e: i64) -> RuledSurface {
    RuledSurface::new(e).unwrap()
}

// Gram matrix [[−e, 1], [1, 0]] applied by hand.
fn gram_oracle(e: i64, d1: (i64, i64), d2: (i64, i64)) -> i64 {
    let g = [[-e, 1], [1, 0]];
    let v1 = [d1.0, d1.1];
    let v2 = [d2.0, d2.1];
    let mut acc = 0;
    for i in 0..2 {
        for j in 0..2 {
            acc += v1[i] * g[i][j] * v2[j];
        }
    }
    acc
}

#[test]
fn bilinear_and_symmetric_on_grid() {
    for e in 0..4 {
        let s = surface(e);
        let grid: Vec<Divisor> = (-10..=10)
            .flat_map(|a| (-10..=10).map(move |b| Divisor::new(a, b)))
            .step_by(7)
            .collect();
        for d1 in &grid {
            for d2 in &grid {
                assert_eq!(s.intersect(d1, d2), s.intersect(d2, d1));
                for d3 in grid.iter().step_by(5) {
                    assert_eq!(
                        s.intersect(&(d1 + d2), d3),
                        s.intersect(d1, d3) + s.intersect(d2, d3)
                    );
                }
            }
        }
    }
}

#[test]
fn intersection_matches_gram_matrix() {
    for e in 0..6 {
        let s = surface(e);
        for a1 in -10..=10 {
            for b1 in [-10, -3, 0, 1, 7, 10] {
                for (a2, b2) in [(1, 0), (0, 1), (-2, 5), (3, -4), (10, 10)] {
                    let got = s.intersect(&Divisor::new(a1, b1), &Divisor::new(a2, b2));
                    assert_eq!(got, BigInt::from(gram_oracle(e, (a1, b1), (a2, b2))));
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn bilinearity(e in 0i64..20, a in prop::array::uniform6(-10i64..=10)) {
        let s = surface(e);
        let (d1, d2, d3) = (Divisor::new(a[0], a[1]), Divisor::new(a[2], a[3]), Divisor::new(a[4], a[5]));
        prop_assert_eq!(s.intersect(&(&d1 + &d2), &d3), s.intersect(&d1, &d3) + s.intersect(&d2, &d3));
        prop_assert_eq!(s.intersect(&d1, &d2), s.intersect(&d2, &d1));
    }

    #[test]
    fn parity_is_a_coset_condition(e in 0i64..20, a in -50i64..50, b in -50i64..50, x in -50i64..50, y in -50i64..50) {
        let s = surface(e);
        let c = Divisor::new(a, b);
        let shifted = &c + &(&BigInt::from(2) * &Divisor::new(x, y));
        prop_assert_eq!(s.parity_ok(&c), s.parity_ok(&shifted));
    }

    #[test]
    fn genus_is_integral_and_matches_formula(e in 0i64..20, a in -30i64..30, b in -30i64..30) {
        let s = surface(e);
        let c = Divisor::new(a, b);
        let twice = s.intersect(&c, &(&c + &s.canonical_class()));
        prop_assert_eq!(BigInt::from(2) * (s.adjunction_genus(&c) - 1), twice);
    }
}
