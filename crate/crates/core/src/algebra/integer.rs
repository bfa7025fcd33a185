use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Int, Rat};
use crate::{Error, Result};

/// Trial division covers every prime below this limit.
const TRIAL_LIMIT: u32 = 1_000_000;

pub(crate) fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_LIMIT as usize;
        let mut sieve = vec![true; n + 1];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2;
        while i * i <= n {
            if sieve[i] {
                let mut j = i * i;
                while j <= n {
                    sieve[j] = false;
                    j += i;
                }
            }
            i += 1;
        }
        sieve
            .iter()
            .enumerate()
            .filter_map(|(k, &p)| p.then_some(k as u32))
            .collect()
    })
}

/// Returns `r >= 0` with `r^2 = n`, or `None` when `n` is not a perfect square.
pub fn is_perfect_square(n: &Int) -> Option<Int> {
    if n.is_negative() {
        return None;
    }
    // Cheap rejection: squares mod 64 lie in a 12-element set.
    let low = (n & BigInt::from(63u8)).to_u8().unwrap_or(0);
    if (0x0202_0212_0203_0213u64 >> low) & 1 == 0 {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Returns `s >= 0` with `s^2 = q` when the reduced numerator and
/// denominator are both perfect squares.
pub fn rational_is_square(q: &Rat) -> Option<Rat> {
    let n = is_perfect_square(q.numer())?;
    let d = is_perfect_square(q.denom())?;
    Some(Rat::new(n, d))
}

/// Exact integer k-th root (sign-aware for odd k).
pub fn exact_root(n: &Int, k: u32) -> Option<Int> {
    if k == 0 {
        return None;
    }
    if n.is_negative() {
        if k % 2 == 0 {
            return None;
        }
        return exact_root(&-n, k).map(|r| -r);
    }
    let r = n.nth_root(k);
    (num_traits::pow(r.clone(), k as usize) == *n).then_some(r)
}

/// Exact rational k-th root, if one exists.
pub fn rational_root(q: &Rat, k: u32) -> Option<Rat> {
    let n = exact_root(q.numer(), k)?;
    let d = exact_root(q.denom(), k)?;
    Some(Rat::new(n, d))
}

/// Squarefree `d` with `n = d * s^2`; the sign of `n` stays with `d`.
pub fn squarefree_part(n: &Int) -> Result<Int> {
    if n.is_zero() {
        return Err(Error::Zero("squarefree part"));
    }
    let mut d = if n.is_negative() { -Int::one() } else { Int::one() };
    for (p, e) in factor(n) {
        if e % 2 == 1 {
            d *= p;
        }
    }
    Ok(d)
}

fn mr_witness(n: &Int, d: &Int, s: u32, a: &Int) -> bool {
    let n_minus_1 = n - 1u32;
    let mut x = a.modpow(d, n);
    if x.is_one() || x == n_minus_1 {
        return false;
    }
    for _ in 1..s {
        x = &x * &x % n;
        if x == n_minus_1 {
            return false;
        }
    }
    true
}

/// Miller-Rabin with the first 16 prime bases. Deterministic below
/// 3.3e24; beyond that a composite passing all 16 bases is astronomically rare.
pub fn is_prime(n: &Int) -> bool {
    if *n < BigInt::from(2) {
        return false;
    }
    const BASES: [u32; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];
    for &p in &BASES {
        if (n % p).is_zero() {
            return *n == BigInt::from(p);
        }
    }
    let n_minus_1: Int = n - 1u32;
    let s = n_minus_1.trailing_zeros().unwrap_or(0) as u32;
    let d = &n_minus_1 >> s;
    !BASES
        .iter()
        .any(|&a| mr_witness(n, &d, s, &BigInt::from(a)))
}

/// Brent's variant of Pollard's rho. Returns a nontrivial factor of the
/// odd composite `n`.
fn pollard_brent(n: &Int) -> Int {
    let mut c = Int::one();
    loop {
        let f = |x: &Int| (x * x + &c) % n;
        let mut y = Int::from(2);
        let mut r: u64 = 1;
        let mut q = Int::one();
        let mut g = Int::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        const BATCH: u64 = 128;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..BATCH.min(r - k) {
                    y = f(&y);
                    q = q * (&x - &y).abs() % n;
                }
                g = q.gcd(n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == *n {
            loop {
                ys = f(&ys);
                g = (&x - &ys).abs().gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if g != *n {
            return g;
        }
        c += 1u32;
    }
}

fn split_large(n: Int, out: &mut Vec<Int>) {
    if n.is_one() {
        return;
    }
    if is_prime(&n) {
        out.push(n);
        return;
    }
    if let Some(r) = is_perfect_square(&n) {
        split_large(r.clone(), out);
        split_large(r, out);
        return;
    }
    let d = pollard_brent(&n);
    let rest = &n / &d;
    split_large(d, out);
    split_large(rest, out);
}

/// Prime factorization of `|n|` as sorted `(prime, exponent)` pairs.
/// `n = ±1` gives an empty list; `n = 0` panics.
///
/// Trial division by primes below 10^6, then Pollard-Brent rho. Inputs with
/// two large prime factors beyond ~60 bits each become slow.
pub fn factor(n: &Int) -> Vec<(Int, u32)> {
    assert!(!n.is_zero(), "cannot factor zero");
    let mut m = n.abs();
    let mut out: Vec<(Int, u32)> = Vec::new();
    for &p in small_primes() {
        let pp = u64::from(p);
        if m.bits() < 64 {
            let mv = m.to_u64().unwrap();
            if pp * pp > mv {
                break;
            }
        }
        if (&m % p).is_zero() {
            let mut e = 0;
            while (&m % p).is_zero() {
                m /= p;
                e += 1;
            }
            out.push((Int::from(p), e));
        }
        if m.is_one() {
            break;
        }
    }
    if m.is_one() {
        return out;
    }
    let limit = Int::from(TRIAL_LIMIT);
    if m < &limit * &limit {
        out.push((m, 1));
        return out;
    }
    let mut large = Vec::new();
    split_large(m, &mut large);
    large.sort();
    for p in large {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

/// All positive divisors of `n != 0`, sorted.
pub fn divisors(n: &Int) -> Vec<Int> {
    let mut divs = vec![Int::one()];
    for (p, e) in factor(n) {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = d.clone();
            next.push(pk.clone());
            for _ in 0..e {
                pk *= &p;
                next.push(pk.clone());
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

/// Modular inverse of `a` modulo `m`, when it exists.
pub(crate) fn mod_inverse(a: &Int, m: &Int) -> Option<Int> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}
