use num_traits::Zero;
use proptest::prelude::*;
use sqdisc_core::eisenstein::{eis_factor, eis_gcd};
use sqdisc_core::fermat::{decompose, on_surface, param_forward};
use sqdisc_core::{EisInt, FermatParams, Int};

fn eis(r: i64) -> impl Strategy<Value = EisInt> {
    (-r..=r, -r..=r).prop_map(|(a, b)| EisInt::new(a, b))
}

proptest! {
    #[test]
    fn norm_is_multiplicative(x in eis(10_000), y in eis(10_000)) {
        prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
        prop_assert_eq!((&x * &x.conj()).b, Int::zero());
    }

    #[test]
    fn euclidean_remainder_is_small(x in eis(100_000), y in eis(1_000)) {
        prop_assume!(!y.is_zero());
        let (q, r) = x.div_rem(&y);
        prop_assert_eq!(&(&q * &y) + &r, x);
        prop_assert!(r.norm() * 4u32 <= y.norm() * 3u32);
    }

    #[test]
    fn canonical_is_an_idempotent_associate(x in eis(1_000)) {
        prop_assume!(!x.is_zero());
        let c = x.canonical();
        prop_assert_eq!(c.canonical(), c.clone());
        prop_assert!(EisInt::units().iter().any(|u| &(u * &x) == &c));
    }

    #[test]
    fn factorization_reconstructs(x in eis(50_000)) {
        prop_assume!(!x.is_zero());
        let f = eis_factor(&x).unwrap();
        prop_assert_eq!(f.product(), x);
    }

    #[test]
    fn gcd_is_a_common_divisor(c in eis(200), s in eis(200), t in eis(200)) {
        prop_assume!(!c.is_zero() && !(s.is_zero() && t.is_zero()));
        let (x, y) = (&c * &s, &c * &t);
        let g = eis_gcd(&x, &y).unwrap();
        prop_assert!(g.divides(&x) && g.divides(&y) && c.divides(&g));
    }

    #[test]
    fn forward_lands_on_surface_and_decomposes(a in -30i64..30, b in -30i64..30, c in -30i64..30, d in -30i64..30) {
        let s = param_forward(&FermatParams::new(a, b, c, d));
        prop_assert!(on_surface(s.x(), s.y(), s.z()));
        let p = decompose(&s).unwrap();
        prop_assert_eq!(param_forward(&p), s);
    }
}
