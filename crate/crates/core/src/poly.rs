//! Dense integer polynomials in one variable `t`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Polynomial in `t` with integer coefficients, stored low degree first with
/// trailing zeros trimmed. The zero polynomial has no coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<i64>", into = "Vec<i64>")]
pub struct TPoly {
    coeffs: Vec<i64>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        TPoly { coeffs: vec![1] }
    }

    pub fn constant(c: i64) -> Self {
        TPoly::from_coeffs(vec![c])
    }

    /// The monomial `c * t^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        TPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        TPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest degree carrying a non-zero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * t + c)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        TPoly { coeffs }
    }

    /// `t^d * p(1/t)`: the coefficient of `t^k` in the result is the
    /// coefficient of `t^(d-k)` in `self`.
    pub fn reverse(&self, d: usize) -> Result<Self> {
        if let Some(actual) = self.degree() {
            if actual > d {
                return Err(Error::DegreeTooSmall { degree: d, actual });
            }
        }
        let mut coeffs = vec![0; d + 1];
        for (k, &c) in self.coeffs.iter().enumerate() {
            coeffs[d - k] = c;
        }
        Ok(TPoly::from_coeffs(coeffs))
    }

    /// Human readable form such as `1 + 2t + t^3`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let abs = c.unsigned_abs();
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else if c < 0 {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let var = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            if abs != 1 || k == 0 {
                out.push_str(&abs.to_string());
            }
            out.push_str(&var);
        }
        out
    }
}

impl From<Vec<i64>> for TPoly {
    fn from(coeffs: Vec<i64>) -> Self {
        TPoly::from_coeffs(coeffs)
    }
}

impl From<TPoly> for Vec<i64> {
    fn from(p: TPoly) -> Self {
        p.coeffs
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TPoly({})", self.pretty())
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

impl AddAssign<&TPoly> for TPoly {
    fn add_assign(&mut self, rhs: &TPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), 0);
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }
}

impl SubAssign<&TPoly> for TPoly {
    fn sub_assign(&mut self, rhs: &TPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), 0);
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for TPoly {
    type Output = TPoly;
    fn add(mut self, rhs: TPoly) -> TPoly {
        self += &rhs;
        self
    }
}

impl Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for TPoly {
    type Output = TPoly;
    fn sub(mut self, rhs: TPoly) -> TPoly {
        self -= &rhs;
        self
    }
}

impl Neg for TPoly {
    type Output = TPoly;
    fn neg(mut self) -> TPoly {
        for c in &mut self.coeffs {
            *c = -*c;
        }
        self
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        TPoly::from_coeffs(coeffs)
    }
}

impl Mul for TPoly {
    type Output = TPoly;
    fn mul(self, rhs: TPoly) -> TPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for TPoly {
    fn sum<I: Iterator<Item = TPoly>>(iter: I) -> TPoly {
        iter.fold(TPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reverse_examples() {
        assert_eq!(TPoly::one().reverse(0).unwrap(), TPoly::one());
        let p = TPoly::from(vec![0, 1, 1]);
        assert_eq!(p.reverse(3).unwrap(), TPoly::from(vec![0, 1, 1]));
        let q = TPoly::from(vec![1, 0, 1]);
        assert_eq!(q.reverse(2).unwrap(), q);
        assert!(matches!(
            p.reverse(1),
            Err(Error::DegreeTooSmall {
                degree: 1,
                actual: 2
            })
        ));
    }

    #[test]
    fn trims_and_identity() {
        let p = TPoly::from(vec![3, 0, 2, 0, 0]);
        assert_eq!(p.coeffs(), &[3, 0, 2]);
        assert_eq!(&p * &TPoly::one(), p);
        assert_eq!(p.eval_at_one(), 5);
        assert!((&p - &p).is_zero());
        assert_eq!(TPoly::zero().degree(), None);
    }

    #[test]
    fn pretty_printing() {
        assert_eq!(TPoly::from(vec![1, 2, 0, 1]).pretty(), "1 + 2t + t^3");
        assert_eq!(TPoly::from(vec![0, -1, 3]).pretty(), "-t + 3t^2");
        assert_eq!(TPoly::zero().pretty(), "0");
    }

    fn poly() -> impl Strategy<Value = TPoly> {
        prop::collection::vec(-20i64..20, 0..8).prop_map(TPoly::from)
    }

    proptest! {
        #[test]
        fn reverse_is_an_involution(p in poly(), extra in 0usize..4) {
            let d = p.degree().unwrap_or(0) + extra;
            prop_assert_eq!(p.reverse(d).unwrap().reverse(d).unwrap(), p);
        }

        #[test]
        fn ring_laws(a in poly(), b in poly(), c in poly()) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
            prop_assert_eq!(&(&a + &b) - &b, a);
        }
    }
}
