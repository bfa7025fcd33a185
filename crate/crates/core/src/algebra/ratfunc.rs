use std::fmt;
use std::ops::{Add, Div, Mul, Sub};

use num_traits::Zero;

use super::{Poly, Rat};

/// Rational function `num / den` over Q, kept canonical: `gcd(num, den) = 1`
/// and `den` monic. Equality is therefore structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Panics when `den` is the zero polynomial.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFunc { num, den: Poly::one() };
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        let lc = den.leading().recip();
        RatFunc { num: num.scale(&lc), den: den.scale(&lc) }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn x() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Self {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        RatFunc { num: self.num.pow(e), den: self.den.pow(e) }
    }

    /// Value at `x`, or `None` at a pole.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }

    /// `self(g(X))`.
    pub fn compose(&self, g: &RatFunc) -> RatFunc {
        let horner = |p: &Poly| {
            p.coeffs().iter().rev().fold(RatFunc::constant(Rat::zero()), |acc, c| {
                &(&acc * g) + &RatFunc::constant(c.clone())
            })
        };
        &horner(&self.num) / &horner(&self.den)
    }
}

/// Equality of rational functions, by cross multiplication.
pub fn ratfunc_equal(f: &RatFunc, g: &RatFunc) -> bool {
    &f.num * &g.den == &g.num * &f.den
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.num.is_zero(), "division by the zero rational function");
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn equality_examples() {
        let x = RatFunc::x();
        assert!(ratfunc_equal(&RatFunc::new(p(&[0, 1]), p(&[0, 1])), &RatFunc::from_poly(Poly::one())));
        assert!(ratfunc_equal(
            &RatFunc::new(p(&[-1, 0, 1]), p(&[-1, 1])),
            &RatFunc::from_poly(p(&[1, 1]))
        ));
        assert!(!ratfunc_equal(&x.recip(), &RatFunc::new(Poly::one(), p(&[1, 1]))));
        // canonical forms agree exactly
        assert_eq!(
            RatFunc::new(p(&[-2, 0, 2]), p(&[-3, 3])),
            RatFunc::new(p(&[2, 2]), p(&[3]))
        );
    }

    #[test]
    fn order_three_map() {
        // X -> 1/(1 - X)
        let m = RatFunc::new(Poly::one(), p(&[1, -1]));
        let twice = m.compose(&m);
        assert_eq!(twice, RatFunc::new(p(&[-1, 1]), p(&[0, 1])));
        assert_eq!(twice.compose(&m), RatFunc::x());
    }
}
