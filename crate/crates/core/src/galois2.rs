//! The image of the mod-2 Galois representation. It is read off from two
//! facts: whether the discriminant is a square, and how many rational
//! 2-torsion points the curve has.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::algebra::{is_perfect_square, rational_is_square, rational_roots};
use crate::curves::division_polynomial;
use crate::families::e_alt;
use crate::{Error, FermatParams, Result, ShortModel};

/// Image of `Gal(Q̄/Q)` in `GL_2(F_2) ≅ S_3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mod2Image {
    Id,
    C2,
    C3,
    S3,
}

impl fmt::Display for Mod2Image {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mod2Image::Id => "Id",
            Mod2Image::C2 => "C2",
            Mod2Image::C3 => "C3",
            Mod2Image::S3 => "S3",
        })
    }
}

impl FromStr for Mod2Image {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Id" => Ok(Mod2Image::Id),
            "C2" => Ok(Mod2Image::C2),
            "C3" => Ok(Mod2Image::C3),
            "S3" => Ok(Mod2Image::S3),
            _ => Err(Error::OutOfRange(format!("mod-2 image {s:?}"))),
        }
    }
}

/// `#E(Q)[2]`: one plus the number of rational roots of the cubic, so 1, 2
/// or 4.
pub fn two_torsion_order(e: &ShortModel) -> u32 {
    let roots = rational_roots(&e.cubic()).expect("cubic is nonzero");
    1 + roots.len() as u32
}

pub fn mod2_image(e: &ShortModel) -> Mod2Image {
    let square = is_perfect_square(&e.discriminant()).is_some();
    match (square, two_torsion_order(e)) {
        (true, 1) => Mod2Image::C3,
        (false, 1) => Mod2Image::S3,
        (false, _) => Mod2Image::C2,
        (true, _) => Mod2Image::Id,
    }
}

/// The cubic of `e_alt(p)` splits into linear factors with integer roots.
pub fn in_s2(p: &FermatParams) -> Result<bool> {
    let e = e_alt(p)?;
    let roots = rational_roots(&e.cubic())?;
    Ok(roots.len() == 3 && roots.iter().all(|r| r.is_integer()))
}

/// Some rational root `alpha` of the 3-division polynomial of `e_alt(p)`
/// makes the cubic a rational square, i.e. `e_alt(p)` has a rational point
/// of order 3.
pub fn in_s3(p: &FermatParams) -> Result<bool> {
    let e = e_alt(p)?;
    let psi3 = division_polynomial(&e, 3)?;
    let cubic = e.cubic();
    Ok(rational_roots(&psi3)?.iter().any(|alpha| {
        let v = cubic.eval(alpha);
        !v.is_zero() && rational_is_square(&v).is_some()
    }))
}
