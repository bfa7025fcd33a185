//! Rational roots of rational polynomials.
//!
//! A polynomial is made squarefree, cleared to a primitive integer polynomial
//! and transformed to a monic one, whose rational roots are integers. Those
//! are found as roots modulo a small prime at which the polynomial stays
//! squarefree, Hensel-lifted past twice the Cauchy root bound.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::integer::{mod_inverse, small_primes};
use super::{Int, Poly, Rat};
use crate::{Error, Result};

/// Distinct rational roots of `p`, sorted ascending.
pub fn rational_roots(p: &Poly) -> Result<Vec<Rat>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (mut ints, _) = p.to_primitive_integer();
    if !squarefree_mod_small_prime(&ints) {
        ints = p.squarefree().to_primitive_integer().0;
    }
    let mut roots = Vec::new();
    if ints.len() > 1 && ints[0].is_zero() {
        roots.push(Rat::zero());
        ints.remove(0);
    }
    let n = ints.len().saturating_sub(1);
    if n >= 1 {
        let lead = ints[n].clone();
        // y = lead * x turns the polynomial monic with integer coefficients.
        let mut monic = Vec::with_capacity(n + 1);
        let mut pw = Int::one();
        for i in (0..n).rev() {
            monic.push(&ints[i] * &pw);
            pw *= &lead;
        }
        monic.reverse();
        monic.push(Int::one());
        for y in integer_roots_monic(&monic) {
            roots.push(Rat::new(y, lead.clone()));
        }
    }
    roots.sort();
    Ok(roots)
}

fn eval_mod(q: &[Int], x: &Int, m: &Int) -> Int {
    q.iter()
        .rev()
        .fold(Int::zero(), |acc, c| (acc * x + c).mod_floor(m))
}

fn eval_int(q: &[Int], x: &Int) -> Int {
    q.iter().rev().fold(Int::zero(), |acc, c| acc * x + c)
}

fn reduce(q: &[Int], p: u64) -> Vec<u64> {
    let pb = Int::from(p);
    let mut v: Vec<u64> = q
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().unwrap())
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Degree of gcd(a, b) over F_p, inputs trimmed.
fn gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> usize {
    while !b.is_empty() {
        let inv = pow_mod(*b.last().unwrap(), p - 2, p);
        while a.len() >= b.len() {
            let c = a.last().unwrap() * inv % p;
            let shift = a.len() - b.len();
            for (j, bj) in b.iter().enumerate() {
                a[shift + j] = (a[shift + j] + p - c * bj % p) % p;
            }
            while a.last() == Some(&0) {
                a.pop();
            }
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// Sufficient test for squarefreeness over Q: squarefree modulo one of a
/// few small primes not dividing the leading coefficient.
fn squarefree_mod_small_prime(q: &[Int]) -> bool {
    let n = q.len().saturating_sub(1);
    if n <= 1 {
        return true;
    }
    let deriv: Vec<Int> = q
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * Int::from(i))
        .collect();
    small_primes()
        .iter()
        .map(|&p| u64::from(p))
        .filter(|&p| p as usize > n)
        .take(12)
        .any(|p| {
            let qr = reduce(q, p);
            let dr = reduce(&deriv, p);
            qr.len() == q.len() && !dr.is_empty() && gcd_degree_mod(qr, dr, p) == 0
        })
}

/// Integer roots of a monic squarefree integer polynomial (coefficients
/// lowest degree first).
pub(crate) fn integer_roots_monic(q: &[Int]) -> Vec<Int> {
    let n = q.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![-q[0].clone()];
    }
    let bound = q[..n]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(Int::zero)
        + 1u32;
    let deriv: Vec<Int> = q
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * Int::from(i))
        .collect();

    // First prime (above the degree) at which q stays squarefree.
    let p = small_primes()
        .iter()
        .map(|&p| u64::from(p))
        .filter(|&p| p as usize > n)
        .find(|&p| {
            let qr = reduce(q, p);
            let dr = reduce(&deriv, p);
            !dr.is_empty() && gcd_degree_mod(qr, dr, p) == 0
        })
        .expect("squarefree polynomial has a good small prime");

    let qr = reduce(q, p);
    let residues: Vec<u64> = (0..p)
        .filter(|&r| qr.iter().rev().fold(0u64, |acc, &c| (acc * r + c) % p) == 0)
        .collect();

    let target: Int = &bound * 2u32 + 1u32;
    let mut roots = Vec::new();
    for r0 in residues {
        let mut r = Int::from(r0);
        let mut m = Int::from(p);
        while m <= target {
            m = &m * &m;
            let fr = eval_mod(q, &r, &m);
            let dr = eval_mod(&deriv, &r, &m);
            let inv = mod_inverse(&dr, &m).expect("simple root mod p");
            r = (&r - fr * inv).mod_floor(&m);
        }
        let half: Int = &m >> 1;
        let cand = if r > half { r - &m } else { r };
        if eval_int(q, &cand).is_zero() {
            roots.push(cand);
        }
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::integer::divisors;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn ri(v: i64) -> Rat {
        Rat::from_integer(Int::from(v))
    }

    /// Rational-root theorem enumeration: every ±u/v with u | c_0 and v | c_n.
    fn brute_force_roots(poly: &Poly) -> Vec<Rat> {
        let (ints, _) = poly.to_primitive_integer();
        let mut out = Vec::new();
        let mut k = 0;
        while ints[k].is_zero() {
            k += 1;
        }
        if k > 0 {
            out.push(Rat::zero());
        }
        let c0 = &ints[k];
        let cn = ints.last().unwrap();
        for u in divisors(c0) {
            for v in divisors(cn) {
                for s in [-1i32, 1] {
                    let cand = Rat::new(&u * s, v.clone());
                    if poly.eval(&cand).is_zero() && !out.contains(&cand) {
                        out.push(cand);
                    }
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn documented_examples() {
        assert_eq!(
            rational_roots(&p(&[0, -81, 0, 1])).unwrap(),
            vec![ri(-9), ri(0), ri(9)]
        );
        assert!(rational_roots(&p(&[2, 0, 0, 1])).unwrap().is_empty());
        assert_eq!(rational_roots(&p(&[-1, 1])).unwrap(), vec![ri(1)]);
        assert_eq!(rational_roots(&Poly::zero()), Err(Error::ZeroPolynomial));
        assert!(rational_roots(&p(&[5])).unwrap().is_empty());
    }

    #[test]
    fn non_monic_and_repeated() {
        // (2x - 3)^2 (3x + 1)(x^2 + 1)
        let f = p(&[-3, 2]).pow(2) * p(&[1, 3]) * p(&[1, 0, 1]);
        assert_eq!(
            rational_roots(&f).unwrap(),
            vec![Rat::new((-1).into(), 3.into()), Rat::new(3.into(), 2.into())]
        );
    }

    #[test]
    fn huge_roots() {
        let big: Int = "123456789012345678901234567890".parse().unwrap();
        let r = Rat::from_integer(big.clone());
        let s = Rat::new(-big, 7.into());
        let f = &(&Poly::linear_root(&r) * &Poly::linear_root(&s)) * &p(&[3, 0, 1]);
        assert_eq!(rational_roots(&f).unwrap(), vec![s, r]);
    }

    #[test]
    fn agrees_with_rational_root_theorem() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            // product of random linear factors and a random extra factor
            let mut f = Poly::one();
            for _ in 0..rng.gen_range(0..4) {
                f = &f * &p(&[rng.gen_range(-30..30), rng.gen_range(1..6)]);
            }
            let extra: Vec<i64> = (0..rng.gen_range(1..4)).map(|_| rng.gen_range(-20..20)).collect();
            let mut extra = extra;
            extra.push(rng.gen_range(1..4));
            f = &f * &p(&extra);
            if f.coeffs().iter().all(Zero::is_zero) {
                continue;
            }
            assert_eq!(rational_roots(&f).unwrap(), brute_force_roots(&f), "{f}");
        }
    }
}
