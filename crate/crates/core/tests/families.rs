use num_traits::Zero;
use proptest::prelude::*;
use sqdisc_core::algebra::{is_perfect_square, rat, ratio};
use sqdisc_core::curves::long_to_short_scaled;
use sqdisc_core::families::{delta3, delta_n, e3, e3_witness, e_alt, e_n_scaled, tate, tate_parameters};
use sqdisc_core::galois2::{in_s2, in_s3, mod2_image, Mod2Image};
use sqdisc_core::torsion::torsion_subgroup;
use sqdisc_core::{FermatParams, Int, Point, Rat};

/// Order of `p` on a long model by repeated addition, or `None` past 12.
fn order(e: &sqdisc_core::LongModel, p: &Point) -> Option<u32> {
    let mut acc = p.clone();
    for k in 1..=12 {
        if acc.is_infinity() {
            return Some(k);
        }
        acc = e.add(&acc, p).unwrap();
    }
    None
}

fn alphas() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn e_n_carries_its_torsion_point(n in prop::sample::select(vec![5u32, 7, 9]), alpha in alphas()) {
        let Ok((e, u)) = e_n_scaled(n, &alpha) else { return Ok(()) };
        let (b, c) = tate_parameters(n, &alpha).unwrap();
        let long = tate(&b, &c).unwrap();
        let origin = Point::affine(rat(0), rat(0));
        prop_assert_eq!(order(&long, &origin), Some(n));
        // the witness survives the change of model
        let (short, v) = long_to_short_scaled(&long).unwrap();
        let w = long.map_to_short(&origin, &v);
        prop_assert!(short.contains(&w));
        prop_assert_eq!(order(&short.to_long(), &w), Some(n));
        let scale = Rat::from_integer(u.pow(12));
        prop_assert_eq!(Rat::from_integer(e.discriminant()), delta_n(n, &alpha).unwrap() * scale);
        let t = torsion_subgroup(&e).unwrap();
        prop_assert_eq!(t.order() % n, 0);
    }

    #[test]
    fn e3_witness_has_order_three(alpha in -20i64..20, beta in -200i64..200) {
        let (alpha, beta) = (Int::from(alpha), Int::from(beta));
        let Ok(e) = e3(&alpha, &beta) else {
            prop_assert!(delta3(&alpha, &beta).is_zero());
            return Ok(());
        };
        let w = e3_witness(&alpha, &beta);
        prop_assert!(e.contains(&w));
        prop_assert_eq!(order(&e.to_long(), &w), Some(3));
    }

    #[test]
    fn square_discriminant_coherence(a in -4i64..=4, b in -4i64..=4, c in -4i64..=4, d in -4i64..=4) {
        let p = FermatParams::new(a, b, c, d);
        let Ok(e) = e_alt(&p) else { return Ok(()) };
        prop_assert!(is_perfect_square(&e.discriminant()).is_some());
        let s2 = in_s2(&p).unwrap();
        let s3 = in_s3(&p).unwrap();
        let image = mod2_image(&e);
        prop_assert_eq!(image == Mod2Image::Id, s2);
        prop_assert!(matches!(image, Mod2Image::Id | Mod2Image::C3));
        let t = torsion_subgroup(&e).unwrap();
        if !s2 && !s3 {
            prop_assert_eq!(t.order(), 1, "{} at {:?}", t.shape, p);
        }
        if s3 {
            prop_assert_eq!(t.order() % 3, 0);
        }
        if s2 {
            prop_assert!(!t.shape.is_cyclic());
        }
    }
}
