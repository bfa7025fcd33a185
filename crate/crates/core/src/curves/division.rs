//! Division polynomials in `X` alone.
//!
//! Convention: `Psi_2(X) = X^3 + AX + B` (the right-hand side, so that
//! "`Psi_2(alpha)` is a square" means `alpha` is the abscissa of a rational
//! point), `Psi_3(X) = 3X^4 + 6AX^2 + 12BX - A^2`, and in general `Psi_n`
//! vanishes exactly at the abscissas of the nonzero points of order
//! dividing `n`: for odd `n` it is the classical `psi_n`, for even `n` it is
//! `(psi_n / 2y) * Psi_2`.
//!
//! Internally `phi_n = psi_n` (odd `n`) or `psi_n / 2y` (even `n`) satisfy
//! y-free recurrences after substituting `y^2 = X^3 + AX + B`.

use super::ShortModel;
use crate::algebra::{rat, Int, Poly};
use crate::{Error, Result};

pub const MAX_DIVISION_INDEX: u32 = 12;

/// Cached `phi_0 .. phi_n` for one model.
#[derive(Clone, Debug)]
pub struct DivisionPolynomials {
    cubic: Poly,
    phi: Vec<Poly>,
}

impl DivisionPolynomials {
    pub fn new(e: &ShortModel, n_max: u32) -> Self {
        let (a, b) = (e.a().clone(), e.b().clone());
        let cubic = e.cubic();
        let f2_16 = cubic.pow(2).scale(&rat(16));
        let a2: Int = &a * &a;
        let mut phi = vec![
            Poly::zero(),
            Poly::one(),
            Poly::one(),
            Poly::from_ints(&[-a2.clone(), &b * 12u32, &a * 6u32, Int::from(0), Int::from(3)]),
            Poly::from_ints(&[
                (-(&b * &b * 8u32) - &a2 * &a) * 2u32,
                -(&a * &b * 8u32),
                -(&a2 * 10u32),
                &b * 40u32,
                &a * 10u32,
                Int::from(0),
                Int::from(2),
            ]),
        ];
        for k in 5..=n_max.max(4) as usize {
            let m = k / 2;
            let next = if k % 2 == 1 {
                let t1 = &phi[m + 2] * &phi[m].pow(3);
                let t2 = &phi[m - 1] * &phi[m + 1].pow(3);
                if m % 2 == 0 {
                    &(&f2_16 * &t1) - &t2
                } else {
                    &t1 - &(&f2_16 * &t2)
                }
            } else {
                let inner = &(&phi[m + 2] * &phi[m - 1].pow(2)) - &(&phi[m - 2] * &phi[m + 1].pow(2));
                &phi[m] * &inner
            };
            phi.push(next);
        }
        DivisionPolynomials { cubic, phi }
    }

    /// `Psi_n` in the convention above.
    pub fn psi(&self, n: u32) -> Poly {
        let p = &self.phi[n as usize];
        if n % 2 == 0 {
            &self.cubic * p
        } else {
            p.clone()
        }
    }

    /// Factor of `Psi_n` whose roots are the abscissas of points of exact
    /// order `n`: `Psi_n` divided by the exact-order factors of its proper
    /// divisors `d > 1`.
    pub fn exact_order(&self, n: u32) -> Poly {
        // divisors in increasing order, so each factor is built from
        // already computed ones
        let divisors: Vec<u32> = (2..=n).filter(|d| n % d == 0).collect();
        let mut done: Vec<(u32, Poly)> = Vec::with_capacity(divisors.len());
        for &d in &divisors {
            let mut p = self.psi(d);
            for (e, q) in &done {
                if d % e == 0 {
                    p = p
                        .div_exact(q)
                        .expect("exact-order factors of divisors divide Psi_n");
                }
            }
            done.push((d, p));
        }
        done.pop().map(|(_, p)| p).unwrap_or_else(Poly::one)
    }
}

fn check_index(n: u32) -> Result<()> {
    if (2..=MAX_DIVISION_INDEX).contains(&n) {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!("division polynomial index {n}")))
    }
}

/// `Psi_n` for `2 <= n <= 12`.
pub fn division_polynomial(e: &ShortModel, n: u32) -> Result<Poly> {
    check_index(n)?;
    Ok(DivisionPolynomials::new(e, n).psi(n))
}

/// Exact-order-`n` factor of `Psi_n` for `2 <= n <= 12`.
pub fn exact_order_factor(e: &ShortModel, n: u32) -> Result<Poly> {
    check_index(n)?;
    Ok(DivisionPolynomials::new(e, n).exact_order(n))
}
