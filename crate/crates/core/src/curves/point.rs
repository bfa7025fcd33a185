use std::fmt;

use num_traits::Zero;

use super::LongModel;
use crate::algebra::{rat, Rat};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Point {
    Infinity,
    Affine { x: Rat, y: Rat },
}

impl Point {
    pub fn affine(x: Rat, y: Rat) -> Self {
        Point::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }

    pub fn x(&self) -> Option<&Rat> {
        match self {
            Point::Infinity => None,
            Point::Affine { x, .. } => Some(x),
        }
    }

    pub fn y(&self) -> Option<&Rat> {
        match self {
            Point::Infinity => None,
            Point::Affine { y, .. } => Some(y),
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Infinity => write!(f, "O"),
            Point::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl LongModel {
    pub fn contains(&self, p: &Point) -> bool {
        match p {
            Point::Infinity => true,
            Point::Affine { x, y } => {
                let lhs = y * y + &self.a1 * x * y + &self.a3 * y;
                let rhs = x * x * x + &self.a2 * x * x + &self.a4 * x + &self.a6;
                lhs == rhs
            }
        }
    }

    fn check(&self, p: &Point) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::NotOnCurve)
        }
    }

    pub fn negate(&self, p: &Point) -> Result<Point> {
        self.check(p)?;
        Ok(self.neg_unchecked(p))
    }

    fn neg_unchecked(&self, p: &Point) -> Point {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => Point::Affine {
                x: x.clone(),
                y: -y - &self.a1 * x - &self.a3,
            },
        }
    }

    /// Chord-tangent addition.
    pub fn add(&self, p: &Point, q: &Point) -> Result<Point> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.add_unchecked(p, q))
    }

    fn add_unchecked(&self, p: &Point, q: &Point) -> Point {
        let (x1, y1, x2, y2) = match (p, q) {
            (Point::Infinity, _) => return q.clone(),
            (_, Point::Infinity) => return p.clone(),
            (Point::Affine { x: x1, y: y1 }, Point::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let (lambda, nu) = if x1 == x2 {
            let denom = y1 * rat(2) + &self.a1 * x1 + &self.a3;
            if y1 != y2 || denom.is_zero() {
                // q = -p
                return Point::Infinity;
            }
            let num = x1 * x1 * rat(3) + &self.a2 * x1 * rat(2) + &self.a4 - &self.a1 * y1;
            let nu_num = -(x1 * x1 * x1) + &self.a4 * x1 + &self.a6 * rat(2) - &self.a3 * y1;
            (num / &denom, nu_num / &denom)
        } else {
            let dx = x2 - x1;
            ((y2 - y1) / &dx, (y1 * x2 - y2 * x1) / &dx)
        };
        let x3 = &lambda * &lambda + &self.a1 * &lambda - &self.a2 - x1 - x2;
        let y3 = -(&lambda + &self.a1) * &x3 - nu - &self.a3;
        Point::Affine { x: x3, y: y3 }
    }

    /// `n * p` by double-and-add.
    pub fn mul(&self, n: i64, p: &Point) -> Result<Point> {
        self.check(p)?;
        Ok(self.mul_unchecked(n, p))
    }

    pub(crate) fn mul_unchecked(&self, n: i64, p: &Point) -> Point {
        let mut base = if n < 0 { self.neg_unchecked(p) } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = Point::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.add_unchecked(&base, &base);
            }
        }
        acc
    }

    /// Order of `p` if it is at most `bound`, by repeated addition.
    pub fn order_up_to(&self, p: &Point, bound: u32) -> Result<Option<u32>> {
        self.check(p)?;
        let mut acc = p.clone();
        for k in 1..=bound {
            if acc.is_infinity() {
                return Ok(Some(k));
            }
            acc = self.add_unchecked(&acc, p);
        }
        Ok(None)
    }
}
