//! Exact determinants of small integer and polynomial matrices (Bareiss).

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::rational::q;

pub(crate) fn int_det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut sign = 1;
    let mut prev = BigInt::from(1);
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else { return 0 };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return 1;
    }
    (prev * BigInt::from(sign)).to_i64().expect("determinant fits in i64")
}

/// Determinant of a square matrix of polynomials (no negative exponents).
pub fn det_poly(mut a: Vec<Vec<LaurentPoly>>) -> Result<LaurentPoly> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::Argument("matrix is not square".into()));
    }
    if a.iter().flatten().any(|p| !p.is_polynomial()) {
        return Err(Error::Argument("det_poly needs polynomial entries".into()));
    }
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else { return Ok(LaurentPoly::zero()) };
            a.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                let (quot, rem) = num.div_rem(&prev)?;
                debug_assert!(rem.is_zero());
                a[i][j] = quot;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    Ok(if negate { prev.scale(&q(-1)) } else { prev })
}

/// `det(tI - M)`.
pub fn char_poly(m: &[Vec<i64>]) -> Result<LaurentPoly> {
    let n = m.len();
    let a = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut p = LaurentPoly::from_coeffs(0, &[-m[i][j]]);
                    if i == j {
                        p = &p + &LaurentPoly::t();
                    }
                    p
                })
                .collect()
        })
        .collect();
    det_poly(a)
}
