use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::Error;

/// An exact complex scalar `re + im*i` with arbitrary-precision rational
/// real and imaginary parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Self::new(BigRational::one(), BigRational::zero())
    }

    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    pub fn from_rational(re: BigRational) -> Self {
        Self::new(re, BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// `re^2 + im^2` as an exact rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> crate::Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(Self::new(&self.re / &n, -&self.im / &n))
    }

    pub fn checked_div(&self, rhs: &Self) -> crate::Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn to_c64(&self) -> nalgebra::Complex<f64> {
        fn r2f(r: &BigRational) -> f64 {
            let n = r.numer();
            let d = r.denom();
            // Exact for desk-scale values; falls back to a quotient of
            // approximations for huge numerators.
            match (n.to_string().parse::<f64>(), d.to_string().parse::<f64>()) {
                (Ok(nf), Ok(df)) => nf / df,
                _ => 0.0,
            }
        }
        nalgebra::Complex::new(r2f(&self.re), r2f(&self.im))
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> GaussianRational {
        &self + &rhs
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> GaussianRational {
        &self - &rhs
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> GaussianRational {
        &self * &rhs
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

impl Div for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: Self) -> GaussianRational {
        self.checked_div(rhs).expect("division by zero")
    }
}

/// Prints in the exact text format `p/q+r/si`, with sign and parts omitted
/// when zero and denominators of one suppressed: `3`, `-1/2i`, `0`, `3-2i`.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if !self.re.is_zero() {
            write!(f, "{}", self.re)?;
            if !self.im.is_zero() {
                if self.im.is_negative() {
                    write!(f, "-{}i", -self.im.clone())?;
                } else {
                    write!(f, "+{}i", self.im)?;
                }
            }
            Ok(())
        } else {
            write!(f, "{}i", self.im)
        }
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let parse_rat = |t: &str| -> Result<BigRational, Error> {
            BigRational::from_str(t).map_err(|e| Error::Parse(format!("bad rational {t:?}: {e}")))
        };
        // Imaginary-part coefficients "", "+", "-" abbreviate 1, 1, -1.
        let parse_im = |t: &str| -> Result<BigRational, Error> {
            match t {
                "" | "+" => Ok(BigRational::one()),
                "-" => Ok(-BigRational::one()),
                _ => parse_rat(t),
            }
        };
        if let Some(body) = s.strip_suffix('i') {
            // Look for a top-level sign splitting a real part from the
            // imaginary part. Signs inside a rational only occur at index 0.
            let split = body
                .char_indices()
                .skip(1)
                .find(|&(_, c)| c == '+' || c == '-')
                .map(|(idx, _)| idx);
            match split {
                Some(idx) => {
                    let re = parse_rat(&body[..idx])?;
                    let im = parse_im(&body[idx..])?;
                    Ok(Self::new(re, im))
                }
                None => Ok(Self::new(BigRational::zero(), parse_im(body)?)),
            }
        } else {
            Ok(Self::from_rational(parse_rat(s)?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic() {
        let a = g("1/2+3i");
        let b = g("-2+1/3i");
        assert_eq!(&a + &b, g("-3/2+10/3i"));
        assert_eq!(&a * &GaussianRational::i(), g("-3+1/2i"));
        assert_eq!(a.conj(), g("1/2-3i"));
        let prod = &a * &a.inv().unwrap();
        assert_eq!(prod, GaussianRational::one());
    }

    #[test]
    fn division_by_zero() {
        assert!(GaussianRational::one()
            .checked_div(&GaussianRational::zero())
            .is_err());
    }

    #[test]
    fn text_round_trip() {
        for s in ["3", "-1/2i", "0", "1/2+3i", "3-2i", "-7/3", "1i", "-1i"] {
            let v = g(s);
            let printed = v.to_string();
            assert_eq!(g(&printed), v, "round trip through {printed}");
        }
        // Abbreviated imaginary units parse too.
        assert_eq!(g("i"), GaussianRational::i());
        assert_eq!(g("-i"), -GaussianRational::i());
        assert_eq!(g("2+i"), g("2+1i"));
    }
}
