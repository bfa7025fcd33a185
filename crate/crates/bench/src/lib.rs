//! Deterministic inputs shared by the benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sqdisc_core::{EisInt, FermatParams, FermatSolution, Int, ShortModel};

pub fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed)
}

/// Products of two primes near `2^bits` each.
pub fn semiprimes(count: usize, bits: u32) -> Vec<Int> {
    let mut r = rng();
    let next_prime = |r: &mut ChaCha8Rng| {
        let mut n = Int::from(r.gen_range((1u64 << (bits - 1))..(1u64 << bits)) | 1);
        while !sqdisc_core::algebra::is_prime(&n) {
            n += 2u32;
        }
        n
    };
    (0..count).map(|_| next_prime(&mut r) * next_prime(&mut r)).collect()
}

pub fn eisenstein_elements(count: usize, max: i64) -> Vec<EisInt> {
    let mut r = rng();
    (0..count)
        .map(|_| EisInt::new(r.gen_range(-max..=max), r.gen_range(1..=max)))
        .collect()
}

pub fn fermat_solutions(count: usize, max: i64) -> Vec<FermatSolution> {
    let mut r = rng();
    (0..count)
        .map(|_| {
            let mut g = || r.gen_range(-max..=max);
            sqdisc_core::fermat::param_forward(&FermatParams::new(g(), g(), g(), g()))
        })
        .collect()
}

/// Random nonsingular short models with `|A|, |B| <= max`.
pub fn curves(count: usize, max: i64) -> Vec<ShortModel> {
    let mut r = rng();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        if let Ok(e) = ShortModel::new(r.gen_range(-max..=max), r.gen_range(-max..=max)) {
            out.push(e);
        }
    }
    out
}
