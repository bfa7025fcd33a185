//! Rational torsion. Candidate abscissas are rational roots of exact-order
//! division-polynomial factors; the cubic must be a square there. The
//! 2-primary part (orders 2, 4, 8) and the odd part (orders 3, 5, 7, 9) are
//! found separately and recombined, which keeps every polynomial involved
//! at degree 36 or less.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{is_prime, rational_is_square, rational_roots, small_primes, Int, Rat};
use crate::curves::DivisionPolynomials;
use crate::{Error, Point, Result, ShortModel};

/// One of Mazur's fifteen groups. `Product(n)` is `C2 x Cn`, `n` even.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TorsionShape {
    Cyclic(u32),
    Product(u32),
}

impl TorsionShape {
    pub fn order(&self) -> u32 {
        match *self {
            TorsionShape::Cyclic(n) => n,
            TorsionShape::Product(n) => 2 * n,
        }
    }

    pub fn is_cyclic(&self) -> bool {
        matches!(self, TorsionShape::Cyclic(_))
    }

    pub fn is_mazur(&self) -> bool {
        match *self {
            TorsionShape::Cyclic(n) => (1..=10).contains(&n) || n == 12,
            TorsionShape::Product(n) => matches!(n, 2 | 4 | 6 | 8),
        }
    }

    /// All fifteen groups, cyclic first.
    pub fn all() -> Vec<TorsionShape> {
        (1..=10)
            .chain([12])
            .map(TorsionShape::Cyclic)
            .chain([2, 4, 6, 8].map(TorsionShape::Product))
            .collect()
    }
}

impl fmt::Display for TorsionShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorsionShape::Cyclic(n) => write!(f, "C{n}"),
            TorsionShape::Product(n) => write!(f, "C2xC{n}"),
        }
    }
}

impl FromStr for TorsionShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::OutOfRange(format!("torsion group {s:?}"));
        let num = |t: &str| t.strip_prefix('C').and_then(|n| n.parse::<u32>().ok());
        let shape = match s.split_once(['x', 'X', '×']) {
            Some((l, r)) if num(l) == Some(2) => TorsionShape::Product(num(r).ok_or_else(bad)?),
            Some(_) => return Err(bad()),
            None => TorsionShape::Cyclic(num(s).ok_or_else(bad)?),
        };
        if shape.is_mazur() {
            Ok(shape)
        } else {
            Err(bad())
        }
    }
}

/// `E(Q)_tors` with generators: none for the trivial group, one point of
/// order `n` for `Cn`, and for `C2 x Cn` a point of order `n` followed by a
/// 2-torsion point outside the subgroup it generates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionGroup {
    pub shape: TorsionShape,
    pub generators: Vec<Point>,
}

impl TorsionGroup {
    pub fn order(&self) -> u32 {
        self.shape.order()
    }
}

/// `#E(F_p)` by a direct loop over `F_p`.
pub fn count_points_mod_p(e: &ShortModel, p: &Int) -> Result<Int> {
    let pu = p.to_u64().filter(|&q| q < (1 << 24)).ok_or_else(|| {
        Error::OutOfRange(format!("prime {p} too large for point counting"))
    })?;
    if pu == 2 || !is_prime(p) || (e.discriminant() % p).is_zero() {
        return Err(Error::BadPrime(pu));
    }
    let a = e.a().mod_floor(p).to_u64().expect("reduced");
    let b = e.b().mod_floor(p).to_u64().expect("reduced");
    let mut is_square = vec![false; pu as usize];
    for x in 0..pu {
        is_square[(x * x % pu) as usize] = true;
    }
    let mut count = 1u64;
    for x in 0..pu {
        let v = ((x * x % pu) * x % pu + a * x % pu + b) % pu;
        count += if v == 0 {
            1
        } else if is_square[v as usize] {
            2
        } else {
            0
        };
    }
    Ok(Int::from(count))
}

/// Number of good odd primes whose point counts are combined in
/// [`torsion_bound`].
pub const BOUND_PRIMES: usize = 8;

/// gcd of `#E(F_p)` over the first [`BOUND_PRIMES`] odd primes not dividing
/// the discriminant. `#E(Q)_tors` divides it.
pub fn torsion_bound(e: &ShortModel) -> Int {
    let disc = e.discriminant();
    small_primes()
        .iter()
        .skip(1)
        .map(|&p| Int::from(p))
        .filter(|p| !(&disc % p).is_zero())
        .take(BOUND_PRIMES)
        .map(|p| count_points_mod_p(e, &p).expect("good odd prime"))
        .fold(Int::zero(), |g, n| g.gcd(&n))
}

struct Search<'a> {
    e: &'a ShortModel,
    div: DivisionPolynomials,
    bound: Int,
}

impl Search<'_> {
    /// Rational points of exact order `n` (one per abscissa, `y >= 0`),
    /// skipping the search when `n` cannot divide the torsion order.
    fn points(&self, n: u32) -> Result<Vec<Point>> {
        if !(&self.bound % n).is_zero() {
            return Ok(Vec::new());
        }
        let cubic = self.e.cubic();
        let mut out = Vec::new();
        for x in rational_roots(&self.div.exact_order(n))? {
            let v = cubic.eval(&x);
            let y = if v.is_zero() {
                Rat::zero()
            } else {
                match rational_is_square(&v) {
                    Some(y) => y,
                    None => continue,
                }
            };
            let p = Point::affine(x, y);
            if self.e.to_long().order_up_to(&p, n)? != Some(n) {
                return Err(Error::Inconsistent(format!("{p} should have order {n}")));
            }
            out.push(p);
        }
        Ok(out)
    }

    /// Point of largest order in the chain `orders`, where each order is
    /// searched only if the previous one was found.
    fn chain(&self, orders: &[u32]) -> Result<(u32, Vec<Vec<Point>>)> {
        let mut best = 1;
        let mut found = Vec::new();
        for &n in orders {
            let pts = self.points(n)?;
            if pts.is_empty() {
                break;
            }
            best = n;
            found.push(pts);
        }
        Ok((best, found))
    }
}

pub fn torsion_subgroup(e: &ShortModel) -> Result<TorsionGroup> {
    let bound = torsion_bound(e);
    // division polynomials only as far as the bound allows
    let n_max = [9u32, 8, 7, 5, 4, 3, 2]
        .into_iter()
        .find(|n| (&bound % n).is_zero())
        .unwrap_or(2);
    let search = Search { e, div: DivisionPolynomials::new(e, n_max), bound: bound.clone() };
    let long = e.to_long();

    let (n2, two_part) = search.chain(&[2, 4, 8])?;
    let full_two = two_part.first().is_some_and(|t| t.len() == 3);
    let (n3, three_part) = search.chain(&[3, 9])?;
    let (n5, five) = search.chain(&[5])?;
    let (n7, seven) = search.chain(&[7])?;

    let top = |parts: &[Vec<Point>]| parts.last().map(|v| v[0].clone()).unwrap_or(Point::Infinity);
    let gen = [top(&two_part), top(&three_part), top(&five), top(&seven)]
        .iter()
        .try_fold(Point::Infinity, |acc, p| long.add(&acc, p))?;
    let gen = match gen.y() {
        Some(y) if y.is_negative() => long.negate(&gen)?,
        _ => gen,
    };
    let n = n2 * n3 * n5 * n7;

    let (shape, generators) = if full_two {
        let half = long.mul(i64::from(n / 2), &gen)?;
        let other = two_part[0]
            .iter()
            .find(|t| **t != half)
            .cloned()
            .ok_or_else(|| Error::Inconsistent("no independent 2-torsion point".into()))?;
        (TorsionShape::Product(n), vec![gen, other])
    } else if n == 1 {
        (TorsionShape::Cyclic(1), Vec::new())
    } else {
        (TorsionShape::Cyclic(n), vec![gen])
    };

    if !shape.is_mazur() {
        return Err(Error::Inconsistent(format!("{shape} is not a possible torsion group")));
    }
    if !(&bound % shape.order()).is_zero() {
        return Err(Error::Inconsistent(format!("order of {shape} does not divide bound {bound}")));
    }
    if let Some(g) = generators.first() {
        if long.order_up_to(g, n)? != Some(n) {
            return Err(Error::Inconsistent(format!("generator {g} does not have order {n}")));
        }
    }
    debug_assert!(bound >= Int::one());
    Ok(TorsionGroup { shape, generators })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn curve(a: i64, b: i64) -> ShortModel {
        ShortModel::new(a, b).unwrap()
    }

    #[test]
    fn point_counts() {
        assert_eq!(count_points_mod_p(&curve(0, 1), &Int::from(5)).unwrap(), Int::from(6));
        assert_eq!(count_points_mod_p(&curve(-1, 0), &Int::from(5)).unwrap(), Int::from(8));
        assert!(matches!(count_points_mod_p(&curve(0, 1), &Int::from(3)), Err(Error::BadPrime(3))));
        assert!(count_points_mod_p(&curve(0, 1), &Int::from(2)).is_err());
        assert!(count_points_mod_p(&curve(0, 1), &Int::from(9)).is_err());
    }

    #[test]
    fn bounds() {
        assert!((torsion_bound(&curve(0, 1)) % 6u32).is_zero());
        assert!(torsion_bound(&curve(0, 2)) >= Int::one());
    }

    #[test]
    fn subgroup_examples() {
        let g = torsion_subgroup(&curve(0, 1)).unwrap();
        assert_eq!(g.shape, TorsionShape::Cyclic(6));
        assert_eq!(g.generators, vec![Point::affine(rat(2), rat(3))]);
        assert_eq!(torsion_subgroup(&curve(-81, 0)).unwrap().shape, TorsionShape::Product(2));
        assert_eq!(torsion_subgroup(&curve(0, -27)).unwrap().shape, TorsionShape::Cyclic(2));
        assert_eq!(torsion_subgroup(&curve(0, 2)).unwrap().shape, TorsionShape::Cyclic(1));
        assert_eq!(torsion_subgroup(&curve(-81, 243)).unwrap().shape, TorsionShape::Cyclic(1));
        // Tate(1,1) has a point of order 5
        assert_eq!(torsion_subgroup(&curve(-432, 8208)).unwrap().shape, TorsionShape::Cyclic(5));
    }

    #[test]
    fn shape_names() {
        let all = TorsionShape::all();
        assert_eq!(all.len(), 15);
        for s in all {
            assert_eq!(s.to_string().parse::<TorsionShape>().unwrap(), s);
        }
        assert_eq!("C2xC4".parse::<TorsionShape>().unwrap(), TorsionShape::Product(4));
        assert!("C11".parse::<TorsionShape>().is_err());
        assert!("C2xC10".parse::<TorsionShape>().is_err());
    }
}
