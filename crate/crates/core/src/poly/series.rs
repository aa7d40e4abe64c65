//! Truncated power series with exact rational coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Coefficients of `t^0 ..= t^N` for a fixed truncation order `N`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
}

impl PowerSeries {
    /// Zero-padded or truncated to order `truncation`.
    pub fn new(coeffs: Vec<BigRational>, truncation: usize) -> Self {
        let mut coeffs = coeffs;
        coeffs.resize(truncation + 1, BigRational::zero());
        PowerSeries { coeffs }
    }

    pub fn from_integers(coeffs: &[i64], truncation: usize) -> Self {
        let cs = coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect();
        PowerSeries::new(cs, truncation)
    }

    pub fn from_bigints(coeffs: &[BigInt], truncation: usize) -> Self {
        let cs = coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect();
        PowerSeries::new(cs, truncation)
    }

    pub fn one(truncation: usize) -> Self {
        PowerSeries::from_integers(&[1], truncation)
    }

    /// `t^d` (zero if `d` exceeds the truncation).
    pub fn monomial(d: usize, truncation: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); truncation + 1];
        if d <= truncation {
            coeffs[d] = BigRational::one();
        }
        PowerSeries { coeffs }
    }

    /// `1 / (1 - t)^k`, whose coefficients are `C(k - 1 + d, d)`.
    pub fn free_series(k: usize, truncation: usize) -> Self {
        let mut coeffs = Vec::with_capacity(truncation + 1);
        let mut c = BigInt::one();
        for d in 0..=truncation {
            coeffs.push(BigRational::from_integer(c.clone()));
            // C(k+d, d+1) = C(k-1+d, d) * (k+d) / (d+1)
            c = c * BigInt::from(k + d) / BigInt::from(d + 1);
        }
        PowerSeries { coeffs }
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> &BigRational {
        &self.coeffs[d]
    }

    /// Coefficients as integers, if they all are.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(self.truncation(), other.truncation(), "series truncation orders differ");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same(other);
        PowerSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_same(other);
        PowerSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() }
    }

    /// Truncated convolution.
    pub fn mul(&self, other: &Self) -> Self {
        self.check_same(other);
        let n = self.truncation();
        let coeffs = (0..=n).map(|d| (0..=d).map(|k| &self.coeffs[k] * &other.coeffs[d - k]).sum()).collect();
        PowerSeries { coeffs }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::Domain("power series with zero constant term has no inverse".into()));
        }
        let inv0 = c0.recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for d in 1..self.coeffs.len() {
            let s: BigRational = (1..=d).map(|k| &self.coeffs[k] * &out[d - k]).sum();
            out.push(-s * &inv0);
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// Lowest degree at which the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.check_same(other);
        self.coeffs.iter().zip(&other.coeffs).position(|(a, b)| a != b)
    }
}

pub fn series_mul(a: &PowerSeries, b: &PowerSeries) -> PowerSeries {
    a.mul(b)
}

pub fn series_inverse(s: &PowerSeries) -> Result<PowerSeries> {
    s.inverse()
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{mag}")?,
                1 if mag.is_one() => f.write_str("t")?,
                1 => write!(f, "{mag}*t")?,
                _ if mag.is_one() => write!(f, "t^{d}")?,
                _ => write!(f, "{mag}*t^{d}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.truncation() + 1)
    }
}

impl Serialize for PowerSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        strs.serialize(s)
    }
}
