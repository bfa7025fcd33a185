//! The Eisenstein integers `Z[rho]`, `rho = (1 + sqrt(-3)) / 2`, with
//! `rho^2 = rho - 1`. The ring is norm-Euclidean, so gcds come from the
//! Euclidean algorithm with rounded quotients and factorization reduces to
//! factoring the norm over Z.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{factor, Int};
use crate::{Error, Result};

/// `a + b*rho`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EisInt {
    pub a: Int,
    pub b: Int,
}

impl EisInt {
    pub fn new(a: impl Into<Int>, b: impl Into<Int>) -> Self {
        EisInt { a: a.into(), b: b.into() }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn rho() -> Self {
        Self::new(0, 1)
    }

    /// `sqrt(-3) = 2 rho - 1`.
    pub fn sqrt_minus_3() -> Self {
        Self::new(-1, 2)
    }

    pub fn from_int(n: Int) -> Self {
        EisInt { a: n, b: Int::zero() }
    }

    /// The six units `rho^k`, `k = 0..6`.
    pub fn units() -> [EisInt; 6] {
        let mut out: [EisInt; 6] = std::array::from_fn(|_| EisInt::one());
        for k in 1..6 {
            out[k] = &out[k - 1] * &EisInt::rho();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn norm(&self) -> Int {
        &self.a * &self.a + &self.a * &self.b + &self.b * &self.b
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// Complex conjugate: `conj(rho) = 1 - rho`.
    pub fn conj(&self) -> Self {
        EisInt { a: &self.a + &self.b, b: -&self.b }
    }

    /// `self * rho`.
    fn mul_rho(&self) -> Self {
        EisInt { a: -&self.b, b: &self.a + &self.b }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = EisInt::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / d`, if `d` divides `self`.
    pub fn div_exact(&self, d: &EisInt) -> Option<EisInt> {
        if d.is_zero() {
            return None;
        }
        let n = d.norm();
        let t = self * &d.conj();
        let (qa, ra) = t.a.div_rem(&n);
        let (qb, rb) = t.b.div_rem(&n);
        (ra.is_zero() && rb.is_zero()).then_some(EisInt { a: qa, b: qb })
    }

    pub fn divides(&self, g: &EisInt) -> bool {
        if self.is_zero() {
            return g.is_zero();
        }
        g.div_exact(self).is_some()
    }

    /// Euclidean division: quotient rounded coordinatewise, so the
    /// remainder has norm at most 3/4 of `N(d)`.
    pub fn div_rem(&self, d: &EisInt) -> (EisInt, EisInt) {
        let n = d.norm();
        let t = self * &d.conj();
        let two_n: Int = &n * 2u32;
        let round = |v: &Int| -> Int { (v * 2u32 + &n).div_floor(&two_n) };
        let q = EisInt { a: round(&t.a), b: round(&t.b) };
        let r = self - &(&q * d);
        (q, r)
    }

    /// The associate in the half-open sector `a > 0, b >= 0`.
    pub fn canonical(&self) -> EisInt {
        if self.is_zero() {
            return self.clone();
        }
        let mut best: Option<EisInt> = None;
        let mut cur = self.clone();
        for _ in 0..6 {
            if cur.a.is_positive() && !cur.b.is_negative() && best.as_ref().map_or(true, |b| cur > *b) {
                best = Some(cur.clone());
            }
            cur = cur.mul_rho();
        }
        best.expect("every nonzero element has an associate in the sector")
    }
}

/// Canonical greatest common divisor.
pub fn eis_gcd(g: &EisInt, h: &EisInt) -> Result<EisInt> {
    if g.is_zero() && h.is_zero() {
        return Err(Error::Zero("gcd"));
    }
    let (mut x, mut y) = (g.clone(), h.clone());
    while !y.is_zero() {
        let r = x.div_rem(&y).1;
        x = y;
        y = r;
    }
    Ok(x.canonical())
}

/// `unit * prod(prime^exponent)`, primes canonical and sorted by
/// `(norm, a, b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EisFactorization {
    pub unit: EisInt,
    pub factors: Vec<(EisInt, u32)>,
}

impl EisFactorization {
    pub fn product(&self) -> EisInt {
        self.factors
            .iter()
            .fold(self.unit.clone(), |acc, (p, e)| &acc * &p.pow(*e))
    }
}

fn count_divisions(g: &mut EisInt, p: &EisInt) -> u32 {
    let mut e = 0;
    while let Some(q) = g.div_exact(p) {
        *g = q;
        e += 1;
    }
    e
}

/// Canonical prime of norm `p` for a rational prime `p = 1 (mod 3)`.
///
/// A cube root of unity `w` mod `p` is `c^((p-1)/3)` for the first
/// candidate `c = 2, 3, 4, ...` giving `w != 1`; then `s = 2w + 1` satisfies
/// `s^2 = -3 (mod p)` and `gcd(p, s + sqrt(-3))` has norm `p`.
pub fn split_prime(p: &Int) -> EisInt {
    let e = (p - 1u32) / 3u32;
    let mut c = Int::from(2);
    let w = loop {
        let w = c.modpow(&e, p);
        if !w.is_one() {
            break w;
        }
        c += 1u32;
    };
    let s = (w * 2u32 + 1u32).mod_floor(p);
    let elt = EisInt { a: s - 1u32, b: Int::from(2) };
    let g = eis_gcd(&EisInt::from_int(p.clone()), &elt).expect("p is nonzero");
    debug_assert_eq!(g.norm(), *p);
    g
}

/// Complete factorization into canonical Eisenstein primes.
pub fn eis_factor(g: &EisInt) -> Result<EisFactorization> {
    if g.is_zero() {
        return Err(Error::Zero("factorization"));
    }
    let mut rest = g.clone();
    let mut factors = Vec::new();
    let three = Int::from(3);
    for (p, _) in factor(&g.norm()) {
        let candidates = if p == three {
            vec![EisInt::new(1, 1)]
        } else if (&p % 3u32) == Int::from(2) {
            vec![EisInt::from_int(p.clone())]
        } else {
            let pi = split_prime(&p);
            let pibar = pi.conj().canonical();
            vec![pi, pibar]
        };
        for pi in candidates {
            let e = count_divisions(&mut rest, &pi);
            if e > 0 {
                factors.push((pi, e));
            }
        }
    }
    if !rest.is_unit() {
        return Err(Error::Inconsistent(format!("cofactor {rest} is not a unit")));
    }
    factors.sort_by(|(x, _), (y, _)| (x.norm(), x).cmp(&(y.norm(), y)));
    Ok(EisFactorization { unit: rest, factors })
}

/// Writes `g = unit * beta^3` when possible, `beta` canonical.
pub fn eis_cube_classify(g: &EisInt) -> Result<Option<(EisInt, EisInt)>> {
    let f = eis_factor(g)?;
    if f.factors.iter().any(|(_, e)| e % 3 != 0) {
        return Ok(None);
    }
    let beta = f
        .factors
        .iter()
        .fold(EisInt::one(), |acc, (p, e)| &acc * &p.pow(e / 3))
        .canonical();
    let unit = g
        .div_exact(&beta.pow(3))
        .ok_or_else(|| Error::Inconsistent("cube does not divide".into()))?;
    Ok(Some((unit, beta)))
}

impl Add for &EisInt {
    type Output = EisInt;
    fn add(self, rhs: &EisInt) -> EisInt {
        EisInt { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Sub for &EisInt {
    type Output = EisInt;
    fn sub(self, rhs: &EisInt) -> EisInt {
        EisInt { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl Mul for &EisInt {
    type Output = EisInt;
    fn mul(self, rhs: &EisInt) -> EisInt {
        let bd = &self.b * &rhs.b;
        EisInt {
            a: &self.a * &rhs.a - &bd,
            b: &self.a * &rhs.b + &self.b * &rhs.a + bd,
        }
    }
}

impl Neg for &EisInt {
    type Output = EisInt;
    fn neg(self) -> EisInt {
        EisInt { a: -&self.a, b: -&self.b }
    }
}

impl fmt::Display for EisInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{} - {}ρ", self.a, -&self.b)
        } else {
            write!(f, "{} + {}ρ", self.a, self.b)
        }
    }
}

impl fmt::Debug for EisInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: i64, b: i64) -> EisInt {
        EisInt::new(a, b)
    }

    #[test]
    fn norms() {
        assert_eq!(e(1, 1).norm(), Int::from(3));
        assert_eq!(e(0, 1).norm(), Int::from(1));
        assert_eq!(e(2, 0).norm(), Int::from(4));
        assert_eq!(EisInt::sqrt_minus_3().pow(2), e(-3, 0));
        assert_eq!(&e(0, 1) * &e(0, 1), e(-1, 1));
    }

    #[test]
    fn six_units() {
        let units = EisInt::units();
        for u in &units {
            assert!(u.is_unit());
        }
        let mut sorted = units.to_vec();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 6);
        assert_eq!(EisInt::rho().pow(6), EisInt::one());
        assert_eq!(EisInt::rho().pow(3), e(-1, 0));
    }

    #[test]
    fn canonical_sector() {
        for u in EisInt::units() {
            assert_eq!((&u * &e(2, 1)).canonical(), e(2, 1));
            assert_eq!(u.canonical(), e(1, 0));
        }
        assert_eq!(e(-3, 0).canonical(), e(3, 0));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(eis_gcd(&e(2, 0), &e(1, 2)).unwrap(), e(1, 0));
        assert!(e(3, 0).div_exact(&e(1, 1)).is_some());
        assert_eq!(eis_gcd(&e(1, 1), &e(3, 0)).unwrap(), e(1, 1));
        assert_eq!(eis_gcd(&e(-4, -2), &EisInt::zero()).unwrap(), e(4, 2).canonical());
        assert!(eis_gcd(&EisInt::zero(), &EisInt::zero()).is_err());
    }

    #[test]
    fn factor_examples() {
        // (1 + rho)^3 = 6 rho - 3
        assert_eq!(e(1, 1).pow(3), e(-3, 6));
        let f = eis_factor(&e(-3, 6)).unwrap();
        assert_eq!(f.factors, vec![(e(1, 1), 3)]);
        assert_eq!(f.product(), e(-3, 6));

        let f = eis_factor(&e(4, 0)).unwrap();
        assert_eq!(f.factors, vec![(e(2, 0), 2)]);
        assert_eq!(f.unit, e(1, 0));

        let f = eis_factor(&e(7, 0)).unwrap();
        assert_eq!(f.factors.len(), 2);
        for (p, k) in &f.factors {
            assert_eq!(p.norm(), Int::from(7));
            assert_eq!(*k, 1);
        }
        assert_eq!(f.factors[0].0.conj().canonical(), f.factors[1].0);
        assert_eq!(f.product(), e(7, 0));
        assert!(eis_factor(&EisInt::zero()).is_err());
    }

    #[test]
    fn cube_examples() {
        let (u, beta) = eis_cube_classify(&e(-3, 6)).unwrap().unwrap();
        assert_eq!(beta, e(1, 1));
        assert!(u.is_unit());
        assert_eq!(eis_cube_classify(&e(8, 0)).unwrap(), Some((e(1, 0), e(2, 0))));
        assert_eq!(eis_cube_classify(&e(1, 1)).unwrap(), None);
        assert!(eis_cube_classify(&EisInt::zero()).is_err());
    }

    #[test]
    fn split_primes() {
        for p in [7, 13, 19, 31, 37, 43, 61, 67, 73, 79, 97, 1000003] {
            let pi = split_prime(&Int::from(p));
            assert_eq!(pi.norm(), Int::from(p));
            assert_eq!(pi, pi.canonical());
        }
    }
}
