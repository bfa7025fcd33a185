//! Integer solutions of `x^2 + 3y^2 = 4z^3`.
//!
//! Every solution has the form
//! `x + sqrt(-3) y = 2 (a + b rho)^3 (c + d rho) (c^2 + cd + d^2)`.
//! [`param_forward`] expands that product; [`decompose`] recovers a parameter
//! tuple from a solution by factoring `(x + sqrt(-3) y) / 2` in `Z[rho]`.

use std::collections::BTreeMap;

use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::algebra::{is_perfect_square, Int};
use crate::eisenstein::{eis_factor, EisInt};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FermatParams {
    pub a: Int,
    pub b: Int,
    pub c: Int,
    pub d: Int,
}

impl FermatParams {
    pub fn new(a: impl Into<Int>, b: impl Into<Int>, c: impl Into<Int>, d: impl Into<Int>) -> Self {
        FermatParams { a: a.into(), b: b.into(), c: c.into(), d: d.into() }
    }

    /// Cube factor `a + b rho`.
    pub fn cube_part(&self) -> EisInt {
        EisInt { a: self.a.clone(), b: self.b.clone() }
    }

    /// Norm-content factor `c + d rho`.
    pub fn norm_part(&self) -> EisInt {
        EisInt { a: self.c.clone(), b: self.d.clone() }
    }
}

impl std::fmt::Display for FermatParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {}, {})", self.a, self.b, self.c, self.d)
    }
}

/// A point on `x^2 + 3y^2 = 4z^3`; construction checks the equation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FermatSolution {
    x: Int,
    y: Int,
    z: Int,
}

pub fn on_surface(x: &Int, y: &Int, z: &Int) -> bool {
    x * x + y * y * 3 == z * z * z * 4
}

impl FermatSolution {
    pub fn new(x: impl Into<Int>, y: impl Into<Int>, z: impl Into<Int>) -> Result<Self> {
        let (x, y, z) = (x.into(), y.into(), z.into());
        if !on_surface(&x, &y, &z) {
            return Err(Error::NotOnSurface);
        }
        Ok(FermatSolution { x, y, z })
    }

    pub fn x(&self) -> &Int {
        &self.x
    }

    pub fn y(&self) -> &Int {
        &self.y
    }

    pub fn z(&self) -> &Int {
        &self.z
    }

    /// `(x + sqrt(-3) y) / 2 = (x - y)/2 + y rho`. The equation forces
    /// `x = y (mod 2)`, so this is an Eisenstein integer of norm `z^3`.
    pub fn half_element(&self) -> EisInt {
        EisInt { a: (&self.x - &self.y) / 2, b: self.y.clone() }
    }
}

/// Expands the parametrization at `(a, b, c, d)`.
pub fn param_forward(p: &FermatParams) -> FermatSolution {
    let FermatParams { a, b, c, d } = p;
    let n = c * c + c * d + d * d;
    let a2 = a * a;
    let a3 = &a2 * a;
    let b2 = b * b;
    let b3 = &b2 * b;
    let two_c_d: Int = c * 2 + d;
    let x = &n
        * (&a2 * b * 3 * (c - d) + &a3 * &two_c_d
            - &b3 * &two_c_d
            - a * &b2 * 3 * (c + d * 2));
    let y = &n * (a * &b2 * c * 3 + &a3 * d - &b3 * d + &a2 * b * 3 * (c + d));
    let z = &n * (&a2 + a * b + &b2);
    debug_assert!(on_surface(&x, &y, &z));
    FermatSolution { x, y, z }
}

/// All solutions with `0 <= z <= z_max`, sign variants included, sorted
/// lexicographically by `(x, y, z)`.
pub fn enumerate_solutions(z_max: u64) -> Vec<FermatSolution> {
    let mut out: Vec<FermatSolution> = (0..=z_max)
        .into_par_iter()
        .flat_map_iter(|z| {
            let four_z3 = Int::from(z).pow(3) * 4u32;
            let mut sols = Vec::new();
            let mut y = Int::zero();
            loop {
                let rest = &four_z3 - &y * &y * 3u32;
                if rest.is_negative() {
                    break;
                }
                if let Some(x) = is_perfect_square(&rest) {
                    for sx in signs(&x) {
                        for sy in signs(&y) {
                            sols.push(FermatSolution { x: sx.clone(), y: sy, z: Int::from(z) });
                        }
                    }
                }
                y += 1u32;
            }
            sols
        })
        .collect();
    out.sort();
    out
}

fn signs(v: &Int) -> Vec<Int> {
    if v.is_zero() {
        vec![v.clone()]
    } else {
        vec![-v, v.clone()]
    }
}

/// Recovers parameters whose forward image is exactly `s`.
///
/// Writes `nu = (x + sqrt(-3) y)/2` as `beta^3 * gamma * N(gamma)`:
/// inert and ramified primes occur in `nu` with exponent divisible by 3 and
/// go into `beta`; for a split pair `pi, conj(pi)` with exponents `e, f`
/// (`e + f = 0 mod 3`), whole cubes go into `beta` and a residual
/// `(1, 2)` or `(2, 1)` pattern is produced by `gamma = conj(pi)` or `pi`.
/// The unit of `nu` is absorbed into `gamma`. If the forward map disagrees
/// with the assembled tuple, the finite set of unit placements and
/// conjugations is searched.
pub fn decompose(s: &FermatSolution) -> Result<FermatParams> {
    if !on_surface(&s.x, &s.y, &s.z) {
        return Err(Error::NotOnSurface);
    }
    if s.z.is_zero() {
        return Ok(FermatParams::new(0, 0, 1, 0));
    }
    let nu = s.half_element();
    let fact = eis_factor(&nu)?;
    let fail = || Error::DecompositionFailed(format!("{}, {}, {}", s.x, s.y, s.z));

    let mut by_norm: BTreeMap<Int, Vec<(EisInt, u32)>> = BTreeMap::new();
    for (p, e) in &fact.factors {
        by_norm.entry(p.norm()).or_default().push((p.clone(), *e));
    }

    let mut beta = EisInt::one();
    let mut gamma = fact.unit.clone();
    for (norm, primes) in by_norm {
        // Split primes have prime norm p = 1 (mod 3) and come in conjugate
        // pairs; inert primes are rational, the ramified prime has norm 3.
        let split = !primes[0].0.b.is_zero() && norm != Int::from(3);
        if !split {
            for (p, e) in primes {
                if e % 3 != 0 {
                    return Err(fail());
                }
                beta = &beta * &p.pow(e / 3);
            }
            continue;
        }
        let (pi, e) = primes[0].clone();
        let pibar = pi.conj().canonical();
        let f = primes
            .iter()
            .find(|(p, _)| *p == pibar)
            .map(|(_, k)| *k)
            .unwrap_or(0);
        beta = &beta * &(&pi.pow(e / 3) * &pibar.pow(f / 3));
        match (e % 3, f % 3) {
            (0, 0) => {}
            (1, 2) => gamma = &gamma * &pibar,
            (2, 1) => gamma = &gamma * &pi,
            _ => return Err(fail()),
        }
    }

    let target = (s.x.clone(), s.y.clone(), s.z.clone());
    let matches = |beta: &EisInt, gamma: &EisInt| -> Option<FermatParams> {
        let p = FermatParams {
            a: beta.a.clone(),
            b: beta.b.clone(),
            c: gamma.a.clone(),
            d: gamma.b.clone(),
        };
        let f = param_forward(&p);
        ((f.x, f.y, f.z) == target).then_some(p)
    };
    if let Some(p) = matches(&beta, &gamma) {
        return Ok(p);
    }
    for conj in [false, true] {
        let (b0, g0) = if conj { (beta.conj(), gamma.conj()) } else { (beta.clone(), gamma.clone()) };
        for u in EisInt::units() {
            for v in EisInt::units() {
                if let Some(p) = matches(&(&b0 * &u), &(&g0 * &v)) {
                    return Ok(p);
                }
            }
        }
    }
    Err(fail())
}

/// `(x, y, z)` as machine integers, for display and tests.
pub fn as_i128(s: &FermatSolution) -> Option<(i128, i128, i128)> {
    Some((s.x.to_i128()?, s.y.to_i128()?, s.z.to_i128()?))
}
