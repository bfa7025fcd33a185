//! Exact arithmetic for elliptic curves over the rationals: rational torsion,
//! the image of the mod-2 Galois representation, the parametric families of
//! curves with square discriminant, and the integer solutions of
//! `x^2 + 3y^2 = 4z^3`.
//!
//! Everything is exact. Integers are [`Int`] (arbitrary precision) and
//! rationals are [`Rat`], always kept in lowest terms.

pub mod algebra;
pub mod curves;
pub mod eisenstein;
mod error;
pub mod families;
pub mod fermat;
pub mod galois2;
pub mod torsion;

pub use algebra::{Int, Poly, Rat, RatFunc};
pub use curves::{LongModel, Point, ShortModel};
pub use eisenstein::{EisFactorization, EisInt};
pub use error::{Error, Result};
pub use families::{DCurve, Sq3Variant};
pub use fermat::{FermatParams, FermatSolution};
pub use galois2::Mod2Image;
pub use torsion::{TorsionGroup, TorsionShape};
