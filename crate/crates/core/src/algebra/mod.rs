//! Exact arithmetic substrate: integers, rationals, polynomials over Q,
//! rational functions, root finding and discriminants.

mod integer;
mod poly;
mod ratfunc;
mod roots;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary-precision integer.
pub type Int = BigInt;
/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rat = BigRational;

pub use integer::{
    divisors, exact_root, factor, is_perfect_square, is_prime, rational_is_square, rational_root,
    squarefree_part,
};
pub(crate) use integer::small_primes;
pub use poly::{poly_discriminant, resultant, Poly};
pub use ratfunc::{ratfunc_equal, RatFunc};
pub use roots::rational_roots;

/// Shorthand for an integer-valued rational.
pub fn rat<T: Into<Int>>(n: T) -> Rat {
    Rat::from_integer(n.into())
}

/// Shorthand for `n / d`; panics when `d = 0`.
pub fn ratio<T: Into<Int>, U: Into<Int>>(n: T, d: U) -> Rat {
    Rat::new(n.into(), d.into())
}
