//! Parametric families: `E3(alpha, beta)` (a rational 3-torsion point),
//! Tate normal form and the one-parameter families `E5`, `E7`, `E9`, the
//! square-discriminant 3-torsion families built from solutions of
//! `x^2 + 3y^2 = 4z^3`, the generic square-discriminant family `e_alt`, and
//! the curves attached to the simplest cubic fields.

mod dcurves;

pub use dcurves::{d_search, quotient_preimages_of_three, verify_quotient_map, DCurve};

use num_traits::{Signed, Zero};

use crate::algebra::{is_perfect_square, poly_discriminant, rat, rational_is_square, Int, Poly, Rat};
use crate::curves::{is_isomorphic, long_to_short_scaled};
use crate::fermat::{decompose, param_forward};
use crate::galois2::{mod2_image, Mod2Image};
use crate::{Error, FermatParams, FermatSolution, LongModel, Point, Result, ShortModel};

/// `(27 alpha^4 + 6 alpha beta, beta^2 - 27 alpha^6)`, singular or not.
pub fn e3_coefficients(alpha: &Int, beta: &Int) -> (Int, Int) {
    let a3 = alpha * alpha * alpha;
    let a = &a3 * alpha * 27u32 + alpha * beta * 6u32;
    let b = beta * beta - &a3 * &a3 * 27u32;
    (a, b)
}

/// `-2^4 3^3 (5 alpha^3 + beta)(9 alpha^3 + beta)^3`.
pub fn delta3(alpha: &Int, beta: &Int) -> Int {
    let a3 = alpha * alpha * alpha;
    let f = &a3 * 5u32 + beta;
    let g = &a3 * 9u32 + beta;
    -(f * &g * &g * &g * 432u32)
}

/// `Y^2 = X^3 + (27a^4 + 6ab) X + b^2 - 27a^6`; `(3a^2, 9a^3 + b)` has
/// order 3.
pub fn e3(alpha: &Int, beta: &Int) -> Result<ShortModel> {
    let (a, b) = e3_coefficients(alpha, beta);
    let e = ShortModel::new(a, b)?;
    if e.discriminant() != delta3(alpha, beta) {
        return Err(Error::Inconsistent(format!("discriminant of E3({alpha}, {beta})")));
    }
    Ok(e)
}

/// The 3-torsion point `(3 alpha^2, 9 alpha^3 + beta)` of [`e3`].
pub fn e3_witness(alpha: &Int, beta: &Int) -> Point {
    let a2 = alpha * alpha;
    Point::affine(
        Rat::from_integer(&a2 * 3u32),
        Rat::from_integer(a2 * alpha * 9u32 + beta),
    )
}

/// `Y^2 + (1 - c) XY - bY = X^3 - bX^2`, on which `(0, 0)` is torsion.
pub fn tate(b: &Rat, c: &Rat) -> Result<LongModel> {
    if b.is_zero() {
        return Err(Error::Zero("Tate parameter b"));
    }
    let zero = Rat::zero();
    LongModel::new(rat(1) - c, -b, -b, zero.clone(), zero)
}

fn check_family(n: u32) -> Result<()> {
    if matches!(n, 5 | 7 | 9) {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!("family E{n}")))
    }
}

/// Tate parameters `(b, c)` of `E_n(alpha)`.
pub fn tate_parameters(n: u32, alpha: &Rat) -> Result<(Rat, Rat)> {
    check_family(n)?;
    let a = alpha;
    let am1 = a - rat(1);
    Ok(match n {
        5 => (a.clone(), a.clone()),
        7 => (a * a * &am1, a * &am1),
        _ => {
            let c = a * a * &am1;
            (&c * (a * &am1 + rat(1)), c)
        }
    })
}

fn poly(c: &[i64]) -> Poly {
    Poly::from_ints(c)
}

/// Closed-form short coefficients `(A_n, B_n)` as polynomials in `alpha`.
pub fn family_polynomials(n: u32) -> Result<(Poly, Poly)> {
    check_family(n)?;
    let (a, b) = match n {
        5 => (
            poly(&[1, 12, 14, -12, 1]),
            poly(&[1, 0, 1]) * poly(&[1, 18, 74, -18, 1]),
        ),
        7 => (
            poly(&[1, 4, -14, 0, 35, -56, 42, -12, 1]),
            poly(&[1, 6, -15, -46, 174, -222, 273, -486, 570, -354, 117, -18, 1]),
        ),
        _ => (
            poly(&[1, 0, -3, 1]) * poly(&[1, 0, -9, 27, -45, 54, -48, 27, -9, 1]),
            poly(&[
                1, 0, -18, 42, 27, -306, 735, -1080, 1359, -2032, 3240, -4230, 4128, -2970, 1557,
                -570, 135, -18, 1,
            ]),
        ),
    };
    Ok((a.scale(&rat(-27)), b.scale(&rat(54))))
}

/// `Delta_n(alpha) / (2^12 3^12)` as a polynomial.
pub fn family_discriminant_polynomial(n: u32) -> Result<Poly> {
    check_family(n)?;
    let x = Poly::x();
    let xm1 = poly(&[-1, 1]);
    Ok(match n {
        5 => x.pow(5) * poly(&[-1, -11, 1]),
        7 => x.pow(7) * xm1.pow(7) * poly(&[1, 5, -8, 1]),
        _ => x.pow(9) * xm1.pow(9) * poly(&[1, -1, 1]).pow(3) * poly(&[1, 3, -6, 1]),
    })
}

/// `Delta_n(alpha) = 2^12 3^12 * ...`.
pub fn delta_n(n: u32, alpha: &Rat) -> Result<Rat> {
    let p = family_discriminant_polynomial(n)?;
    Ok(p.eval(alpha) * Rat::from_integer(Int::from(6).pow(12)))
}

/// `(A_n(alpha), B_n(alpha))`, generally not integral.
pub fn e_n_coefficients(n: u32, alpha: &Rat) -> Result<(Rat, Rat)> {
    let (a, b) = family_polynomials(n)?;
    Ok((a.eval(alpha), b.eval(alpha)))
}

/// Integral short model of `E_n(alpha)` and the scale `u` relating it to
/// `(A_n(alpha), B_n(alpha))`; its discriminant is `u^12 Delta_n(alpha)`.
pub fn e_n_scaled(n: u32, alpha: &Rat) -> Result<(ShortModel, Int)> {
    let delta = delta_n(n, alpha)?;
    if delta.is_zero() {
        return Err(Error::Singular(format!("E{n}({alpha}): Delta_{n} vanishes")));
    }
    let (b, c) = tate_parameters(n, alpha)?;
    let long = tate(&b, &c)?;
    if long.short_coefficients() != e_n_coefficients(n, alpha)? {
        return Err(Error::Inconsistent(format!("short form of E{n}({alpha})")));
    }
    let (e, u) = long_to_short_scaled(&long)?;
    let u12 = Rat::from_integer(u.pow(12));
    if Rat::from_integer(e.discriminant()) != delta * u12 {
        return Err(Error::Inconsistent(format!("discriminant of E{n}({alpha})")));
    }
    Ok((e, u))
}

pub fn e_n(n: u32, alpha: &Rat) -> Result<ShortModel> {
    e_n_scaled(n, alpha).map(|(e, _)| e)
}

/// The two square-discriminant 3-torsion families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sq3Variant {
    /// `E3(-z, x^2 + 5z^3)`, discriminant `2^4 3^6 x^2 y^6`.
    First,
    /// `E3(-z, 3y^2 + 5z^3)`, discriminant `2^4 3^4 y^2 x^6`.
    Second,
}

impl Sq3Variant {
    pub fn from_index(i: u32) -> Result<Self> {
        match i {
            1 => Ok(Sq3Variant::First),
            2 => Ok(Sq3Variant::Second),
            _ => Err(Error::OutOfRange(format!("variant {i}"))),
        }
    }

    /// `(alpha, beta)` fed to `E3`.
    pub fn e3_parameters(self, s: &FermatSolution) -> (Int, Int) {
        let (x, y, z) = (s.x(), s.y(), s.z());
        let z3 = z * z * z * 5u32;
        let beta = match self {
            Sq3Variant::First => x * x + z3,
            Sq3Variant::Second => y * y * 3u32 + z3,
        };
        (-z, beta)
    }

    /// Closed-form discriminant in terms of `(x, y)`.
    pub fn discriminant(self, s: &FermatSolution) -> Int {
        let (x, y) = (s.x(), s.y());
        match self {
            Sq3Variant::First => x * x * y.pow(6) * 11664u32,
            Sq3Variant::Second => y * y * x.pow(6) * 1296u32,
        }
    }
}

/// Coefficients of the square-discriminant family, singular or not.
pub fn e_sq3_coefficients(variant: Sq3Variant, p: &FermatParams) -> (Int, Int) {
    let (alpha, beta) = variant.e3_parameters(&param_forward(p));
    e3_coefficients(&alpha, &beta)
}

pub fn e_sq3(variant: Sq3Variant, p: &FermatParams) -> Result<ShortModel> {
    let s = param_forward(p);
    for (name, v) in [("x", s.x()), ("y", s.y())] {
        if v.is_zero() {
            return Err(Error::Singular(format!("{name} = 0 in ({}, {}, {})", s.x(), s.y(), s.z())));
        }
    }
    let (alpha, beta) = variant.e3_parameters(&s);
    let e = e3(&alpha, &beta)?;
    let delta = e.discriminant();
    if delta != variant.discriminant(&s) || is_perfect_square(&delta).is_none() {
        return Err(Error::Inconsistent(format!("discriminant of {variant:?} at {p:?}")));
    }
    Ok(e)
}

/// `A = -3^4 N(c,d) N(a,b)`, `B = 3^5 N(c,d) (a^3 d + 3a^2 bc + 3a^2 bd +
/// 3ab^2 c - b^3 d)` with `N(s,t) = s^2 + st + t^2`.
pub fn e_alt_coefficients(p: &FermatParams) -> (Int, Int) {
    let FermatParams { a, b, c, d } = p;
    let ncd = c * c + c * d + d * d;
    let nab = a * a + a * b + b * b;
    let a2 = a * a;
    let cubic = &a2 * a * d + &a2 * b * c * 3u32 + &a2 * b * d * 3u32 + a * b * b * c * 3u32
        - b * b * b * d;
    (-(&ncd * nab * 81u32), ncd * cubic * 243u32)
}

/// `Y^2 = X^3 - 81z X + 243y` for `(x, y, z) = param_forward(p)`, with
/// discriminant `2^4 3^12 x^2`.
pub fn e_alt(p: &FermatParams) -> Result<ShortModel> {
    let s = param_forward(p);
    if s.x().is_zero() {
        return Err(Error::Singular(format!("x = 0 in ({}, {}, {})", s.x(), s.y(), s.z())));
    }
    let (a, b) = e_alt_coefficients(p);
    if a != -(s.z() * 81u32) || b != s.y() * 243u32 {
        return Err(Error::Inconsistent(format!("coefficients of e_alt at {p:?}")));
    }
    let e = ShortModel::new(a, b)?;
    if e.discriminant() != s.x() * s.x() * 8503056u32 {
        return Err(Error::Inconsistent(format!("discriminant of e_alt at {p:?}")));
    }
    Ok(e)
}

/// Parameters `p` with `e_alt(p)` isomorphic to `e` (which needs a square
/// discriminant). `(C, 3B, -A)` with `C^2 = -(4A^3 + 27B^2)` solves
/// `x^2 + 3y^2 = 4z^3` and is decomposed.
pub fn e_alt_params(e: &ShortModel) -> Result<FermatParams> {
    let (a, b) = (e.a(), e.b());
    let c2 = -(a * a * a * 4u32 + b * b * 27u32);
    let c = rational_is_square(&Rat::from_integer(c2))
        .ok_or(Error::NotSquare)?
        .to_integer()
        .abs();
    let s = FermatSolution::new(c, b * 3u32, -a)?;
    let p = decompose(&s)?;
    let image = e_alt(&p)?;
    if is_isomorphic(e, &image).is_none() {
        return Err(Error::Inconsistent(format!("e_alt({p:?}) is not isomorphic to {e}")));
    }
    Ok(p)
}

/// `P_m(X) = X^3 + mX^2 - (m + 3)X + 1`.
pub fn simplest_cubic_polynomial(m: &Int) -> Poly {
    Poly::from_ints(&[Int::from(1), -(m + 3u32), m.clone(), Int::from(1)])
}

/// Short model of `Y^2 = P_m(X)`. Its discriminant is `16 (m^2+3m+9)^2`
/// times a twelfth power, so the image is `C3` (`P_m` is irreducible).
pub fn simplest_cubic(m: &Int) -> Result<ShortModel> {
    let p = simplest_cubic_polynomial(m);
    let expected = m * m + m * 3u32 + 9u32;
    if poly_discriminant(&p)? != Rat::from_integer(&expected * &expected) {
        return Err(Error::Inconsistent(format!("discriminant of P_{m}")));
    }
    let zero = Rat::zero();
    let long = LongModel::new(
        zero.clone(),
        Rat::from_integer(m.clone()),
        zero.clone(),
        Rat::from_integer(-(m + 3u32)),
        rat(1),
    )?;
    let (e, _) = long_to_short_scaled(&long)?;
    if is_perfect_square(&e.discriminant()).is_none() || mod2_image(&e) != Mod2Image::C3 {
        return Err(Error::Inconsistent(format!("curve of P_{m} is not C3")));
    }
    Ok(e)
}

/// `-16 (4A^3 + 27B^2)` for rational coefficients.
pub fn rational_short_discriminant(a: &Rat, b: &Rat) -> Rat {
    let d = a * a * a * rat(4) + b * b * rat(27);
    d * rat(-16)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    fn int(n: i64) -> Int {
        Int::from(n)
    }

    #[test]
    fn e3_examples() {
        let e = e3(&int(0), &int(1)).unwrap();
        assert_eq!((e.a(), e.b()), (&int(0), &int(1)));
        assert_eq!(delta3(&int(0), &int(1)), int(-432));
        assert_eq!(e3_coefficients(&int(-1), &int(9)), (int(-27), int(54)));
        assert_eq!(e3_coefficients(&int(-1), &int(5)), (int(-3), int(-2)));
        assert!(e3(&int(-1), &int(9)).is_err());
        let e = e3(&int(2), &int(3)).unwrap();
        let w = e3_witness(&int(2), &int(3));
        assert_eq!(e.to_long().order_up_to(&w, 3).unwrap(), Some(3));
    }

    #[test]
    fn tate_examples() {
        let t = tate(&rat(1), &rat(1)).unwrap();
        assert_eq!(t.a_invariants(), [rat(0), rat(-1), rat(-1), rat(0), rat(0)]);
        assert!(t.contains(&Point::affine(rat(0), rat(0))));
        assert!(tate(&rat(0), &rat(1)).is_err());
    }

    #[test]
    fn family_examples() {
        let (e, u) = e_n_scaled(5, &rat(1)).unwrap();
        assert_eq!(u, int(1));
        assert_eq!((e.a(), e.b()), (&int(-432), &int(8208)));
        assert_eq!(e.discriminant(), -int(11) * int(2).pow(12) * int(3).pow(12));
        assert!(matches!(e_n(5, &rat(0)), Err(Error::Singular(_))));
        assert!(matches!(e_n(7, &rat(1)), Err(Error::Singular(_))));
        assert!(e_n(6, &rat(2)).is_err());
        for n in [5, 7, 9] {
            for alpha in [rat(2), rat(-3), ratio(1, 2), ratio(-5, 3)] {
                let (e, u) = e_n_scaled(n, &alpha).unwrap();
                let (a, b) = e_n_coefficients(n, &alpha).unwrap();
                assert_eq!(rational_short_discriminant(&a, &b), delta_n(n, &alpha).unwrap());
                assert_eq!(Rat::from_integer(e.discriminant()), delta_n(n, &alpha).unwrap() * Rat::from_integer(u.pow(12)));
            }
        }
    }

    #[test]
    fn sq3_examples() {
        let p = FermatParams::new(1, 0, 1, 0);
        assert_eq!(e_sq3_coefficients(Sq3Variant::First, &p), (int(-27), int(54)));
        assert_eq!(e_sq3_coefficients(Sq3Variant::Second, &p), (int(-3), int(-2)));
        assert!(matches!(e_sq3(Sq3Variant::First, &FermatParams::new(1, 1, 1, 0)), Err(Error::Singular(_))));
        let e = e_sq3(Sq3Variant::First, &FermatParams::new(1, 0, 0, 1)).unwrap();
        assert_eq!((e.a(), e.b()), (&int(-9), &int(9)));
    }

    #[test]
    fn e_alt_examples() {
        let e = e_alt(&FermatParams::new(1, 0, 1, 0)).unwrap();
        assert_eq!((e.a(), e.b()), (&int(-81), &int(0)));
        assert_eq!(e.discriminant(), int(5832) * int(5832));
        let e = e_alt(&FermatParams::new(1, 0, 0, 1)).unwrap();
        assert_eq!((e.a(), e.b()), (&int(-81), &int(243)));
        assert!(matches!(e_alt(&FermatParams::new(1, 1, 1, 0)), Err(Error::Singular(_))));
    }

    #[test]
    fn e_alt_inverse() {
        for (a, b) in [(-81, 0), (-81, 243), (-1, 0), (-9, 9)] {
            let e = ShortModel::new(a, b).unwrap();
            let p = e_alt_params(&e).unwrap();
            assert!(is_isomorphic(&e, &e_alt(&p).unwrap()).is_some());
        }
        assert!(matches!(e_alt_params(&ShortModel::new(0, 1).unwrap()), Err(Error::NotSquare)));
    }

    #[test]
    fn simplest_cubics() {
        for (m, d) in [(0, 81), (1, 169), (-2, 49)] {
            let p = simplest_cubic_polynomial(&int(m));
            assert_eq!(poly_discriminant(&p).unwrap(), rat(d));
            assert!(simplest_cubic(&int(m)).is_ok());
        }
    }
}
