//! The genus-one and genus-two curves `z^2 = f_n(alpha)` whose rational
//! points would give `E_n(alpha)` a square discriminant, a naive point
//! search on them, and the degree-two quotient of `D9` onto
//! `v^2 = u^3 - 27`.

use num_integer::{Integer, Roots};
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;

use crate::algebra::{rational_roots, ratfunc_equal, rat, Int, Poly, Rat, RatFunc};
use crate::{Error, Result};

/// `z^2 = f_n(alpha)`, the squarefree part of `Delta_n` up to squares.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DCurve {
    pub n: u32,
    pub rhs: Poly,
}

impl DCurve {
    pub fn new(n: u32) -> Result<Self> {
        let x = Poly::x();
        let xm1 = Poly::from_ints(&[-1, 1]);
        let rhs = match n {
            5 => x * Poly::from_ints(&[-1, -11, 1]),
            7 => x * xm1 * Poly::from_ints(&[1, 5, -8, 1]),
            9 => x * xm1 * Poly::from_ints(&[1, -1, 1]) * Poly::from_ints(&[1, 3, -6, 1]),
            _ => return Err(Error::OutOfRange(format!("curve D{n}"))),
        };
        Ok(DCurve { n, rhs })
    }

    fn int_coeffs(&self) -> Vec<i128> {
        self.rhs
            .coeffs()
            .iter()
            .map(|c| c.to_integer().to_i128().expect("small coefficients"))
            .collect()
    }
}

/// `F(p, q) q^(deg mod 2)` where `F` is the homogenized right-hand side, so
/// that `f(p/q)` is a square iff this is. `None` on overflow.
fn square_test_value(c: &[i128], p: i128, q: i128) -> Option<i128> {
    let d = c.len() - 1;
    let mut acc = c[d];
    let mut qpow = 1i128;
    for i in (0..d).rev() {
        qpow = qpow.checked_mul(q)?;
        acc = acc.checked_mul(p)?.checked_add(c[i].checked_mul(qpow)?)?;
    }
    if d % 2 == 1 {
        acc = acc.checked_mul(q)?;
    }
    Some(acc)
}

fn square_test_value_big(c: &[i128], p: i128, q: i128) -> Int {
    let (p, q) = (Int::from(p), Int::from(q));
    let d = c.len() - 1;
    let mut acc = Int::from(c[d]);
    let mut qpow = Int::from(1);
    for i in (0..d).rev() {
        qpow *= &q;
        acc = acc * &p + Int::from(c[i]) * &qpow;
    }
    if d % 2 == 1 {
        acc *= &q;
    }
    acc
}

fn int_sqrt(w: &Int) -> Option<Int> {
    if w.is_negative() {
        return None;
    }
    let r = w.sqrt();
    (&r * &r == *w).then_some(r)
}

/// All `(alpha, z)` with `z^2 = f_n(alpha)`, `z >= 0`, and `alpha = p/q` of
/// naive height at most `height`, sorted by `alpha`.
pub fn d_search(n: u32, height: u64) -> Result<Vec<(Rat, Rat)>> {
    let curve = DCurve::new(n)?;
    if height == 0 {
        return Err(Error::OutOfRange("search height 0".into()));
    }
    let c = curve.int_coeffs();
    let d = c.len() - 1;
    let h = i128::from(height);
    let mut found: Vec<(Rat, Rat)> = (1..=h)
        .into_par_iter()
        .flat_map_iter(|q| {
            let c = &c;
            (-h..=h).filter_map(move |p| {
                if p.gcd(&q) != 1 {
                    return None;
                }
                let root = match square_test_value(c, p, q) {
                    Some(w) if w < 0 => return None,
                    Some(w) => {
                        let r = (w as u128).sqrt();
                        if r * r != w as u128 {
                            return None;
                        }
                        Int::from(r)
                    }
                    None => int_sqrt(&square_test_value_big(c, p, q))?,
                };
                let den = Int::from(q).pow(((d + 1) / 2) as u32);
                Some((Rat::new(p.into(), q.into()), Rat::new(root, den)))
            })
        })
        .collect();
    found.sort();
    Ok(found)
}

/// `u(alpha) = (alpha^3 - 3 alpha^2 + 1) / (alpha (alpha - 1))`.
fn quotient_u() -> RatFunc {
    RatFunc::new(Poly::from_ints(&[1, 0, -3, 1]), Poly::from_ints(&[0, -1, 1]))
}

/// Checks the quotient `D9 -> (v^2 = u^3 - 27)`:
/// `(a^3 - 3a^2 + 1)^3 - 27 a^3 (a - 1)^3 = (a^2 - a + 1)^3 (a^3 - 6a^2 + 3a + 1)`
/// as polynomials, `v^2 = u^3 - 27` as rational functions once `z^2 = f_9`,
/// and that `alpha -> 1/(1 - alpha)` has order 3.
pub fn verify_quotient_map() -> bool {
    let cubic = Poly::from_ints(&[1, 0, -3, 1]);
    let base = Poly::from_ints(&[0, -1, 1]);
    let lhs = cubic.pow(3) - base.pow(3).scale(&rat(27));
    let rhs = Poly::from_ints(&[1, -1, 1]).pow(3) * Poly::from_ints(&[1, 3, -6, 1]);
    let identity = lhs == rhs;

    let f9 = DCurve::new(9).expect("n = 9").rhs;
    let v2 = RatFunc::new(
        f9 * Poly::from_ints(&[1, -1, 1]).pow(2),
        base.pow(4),
    );
    let u = quotient_u();
    let curve = ratfunc_equal(&v2, &(&u.pow(3) - &RatFunc::constant(rat(27))));

    let m = RatFunc::new(Poly::one(), Poly::from_ints(&[1, -1]));
    let order3 = ratfunc_equal(&m.compose(&m).compose(&m), &RatFunc::x())
        && !ratfunc_equal(&m, &RatFunc::x())
        && ratfunc_equal(&u.compose(&m), &u);
    identity && curve && order3
}

/// Rational `alpha` with `u(alpha) = 3`, i.e. roots of
/// `alpha^3 - 6 alpha^2 + 3 alpha + 1`; there are none.
pub fn quotient_preimages_of_three() -> Result<Vec<Rat>> {
    rational_roots(&Poly::from_ints(&[1, 3, -6, 1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly_discriminant;

    #[test]
    fn polynomials() {
        assert_eq!(DCurve::new(5).unwrap().rhs, Poly::from_ints(&[0, -1, -11, 1]));
        assert_eq!(DCurve::new(7).unwrap().rhs.degree(), Some(5));
        assert_eq!(DCurve::new(9).unwrap().rhs.degree(), Some(7));
        assert!(DCurve::new(6).is_err());
        assert_eq!(poly_discriminant(&DCurve::new(5).unwrap().rhs).unwrap(), rat(125));
        assert_eq!(poly_discriminant(&DCurve::new(7).unwrap().rhs).unwrap(), rat(2401));
        assert_eq!(poly_discriminant(&Poly::from_ints(&[1, 5, -8, 1])).unwrap(), rat(2401));
    }

    #[test]
    fn small_searches() {
        let zero = (rat(0), rat(0));
        let one = (rat(1), rat(0));
        assert_eq!(d_search(5, 100).unwrap(), vec![zero.clone()]);
        assert_eq!(d_search(7, 100).unwrap(), vec![zero.clone(), one.clone()]);
        assert_eq!(d_search(9, 100).unwrap(), vec![zero, one]);
        assert!(d_search(5, 0).is_err());
    }

    #[test]
    fn big_fallback_agrees() {
        let c = DCurve::new(9).unwrap().int_coeffs();
        for (p, q) in [(3, 7), (-999, 1000), (17, 1)] {
            let small = square_test_value(&c, p, q).unwrap();
            assert_eq!(Int::from(small), square_test_value_big(&c, p, q));
        }
    }

    #[test]
    fn quotient_map() {
        assert!(verify_quotient_map());
        assert!(quotient_preimages_of_three().unwrap().is_empty());
        let two = rat(2);
        let lhs = Poly::from_ints(&[1, 0, -3, 1]).pow(3).eval(&two) - rat(27) * rat(8);
        assert_eq!(lhs, rat(-243));
    }
}
