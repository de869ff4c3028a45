//! Scalar coefficients: exact Gaussian rationals or complex doubles.
//!
//! The two backends never mix silently. Arithmetic between mismatched
//! backends is a programming error and panics; conversion is explicit via
//! [`Scalar::to_float`].

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;

/// Which coefficient field a value lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Backend {
    /// Gaussian rationals, `a/b + (c/d)i` with arbitrary-precision integers.
    Exact,
    /// Complex double precision.
    Float,
}

/// A complex scalar in one of the two backends.
#[derive(Clone, Debug)]
pub enum Scalar {
    Exact { re: BigRational, im: BigRational },
    Float { re: f64, im: f64 },
}

impl Scalar {
    pub fn zero(backend: Backend) -> Self {
        match backend {
            Backend::Exact => Scalar::Exact {
                re: BigRational::zero(),
                im: BigRational::zero(),
            },
            Backend::Float => Scalar::Float { re: 0.0, im: 0.0 },
        }
    }

    pub fn one(backend: Backend) -> Self {
        Scalar::from_i64(backend, 1)
    }

    /// The imaginary unit.
    pub fn i(backend: Backend) -> Self {
        match backend {
            Backend::Exact => Scalar::Exact {
                re: BigRational::zero(),
                im: BigRational::one(),
            },
            Backend::Float => Scalar::Float { re: 0.0, im: 1.0 },
        }
    }

    pub fn from_i64(backend: Backend, n: i64) -> Self {
        match backend {
            Backend::Exact => Scalar::Exact {
                re: BigRational::from_integer(BigInt::from(n)),
                im: BigRational::zero(),
            },
            Backend::Float => Scalar::Float {
                re: n as f64,
                im: 0.0,
            },
        }
    }

    pub fn from_ratio(backend: Backend, num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        match backend {
            Backend::Exact => Scalar::Exact {
                re: BigRational::new(BigInt::from(num), BigInt::from(den)),
                im: BigRational::zero(),
            },
            Backend::Float => Scalar::Float {
                re: num as f64 / den as f64,
                im: 0.0,
            },
        }
    }

    pub fn from_rational(re: BigRational) -> Self {
        Scalar::Exact {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn from_rational_pair(re: BigRational, im: BigRational) -> Self {
        Scalar::Exact { re, im }
    }

    pub fn from_f64(re: f64, im: f64) -> Self {
        Scalar::Float { re, im }
    }

    pub fn backend(&self) -> Backend {
        match self {
            Scalar::Exact { .. } => Backend::Exact,
            Scalar::Float { .. } => Backend::Float,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact { re, im } => re.is_zero() && im.is_zero(),
            Scalar::Float { re, im } => *re == 0.0 && *im == 0.0,
        }
    }

    pub fn is_real(&self) -> bool {
        match self {
            Scalar::Exact { im, .. } => im.is_zero(),
            Scalar::Float { im, .. } => *im == 0.0,
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Exact { re: a, im: b }, Scalar::Exact { re: c, im: d }) => Scalar::Exact {
                re: a + c,
                im: b + d,
            },
            (Scalar::Float { re: a, im: b }, Scalar::Float { re: c, im: d }) => Scalar::Float {
                re: a + c,
                im: b + d,
            },
            _ => panic!("mixed scalar backends"),
        }
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Exact { re, im } => Scalar::Exact {
                re: -re.clone(),
                im: -im.clone(),
            },
            Scalar::Float { re, im } => Scalar::Float { re: -re, im: -im },
        }
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Exact { re: a, im: b }, Scalar::Exact { re: c, im: d }) => Scalar::Exact {
                re: a * c - b * d,
                im: a * d + b * c,
            },
            (Scalar::Float { re: a, im: b }, Scalar::Float { re: c, im: d }) => Scalar::Float {
                re: a * c - b * d,
                im: a * d + b * c,
            },
            _ => panic!("mixed scalar backends"),
        }
    }

    /// Multiplication by a small integer (blade product signs).
    pub fn mul_i64(&self, n: i64) -> Scalar {
        match self {
            Scalar::Exact { re, im } => {
                let k = BigRational::from_integer(BigInt::from(n));
                Scalar::Exact {
                    re: re * &k,
                    im: im * &k,
                }
            }
            Scalar::Float { re, im } => Scalar::Float {
                re: re * n as f64,
                im: im * n as f64,
            },
        }
    }

    /// Multiplication by the imaginary unit.
    pub fn mul_imag(&self) -> Scalar {
        match self {
            Scalar::Exact { re, im } => Scalar::Exact {
                re: -im.clone(),
                im: re.clone(),
            },
            Scalar::Float { re, im } => Scalar::Float { re: -im, im: *re },
        }
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Scalar {
        match self {
            Scalar::Exact { re, im } => Scalar::Exact {
                re: re.clone(),
                im: -im.clone(),
            },
            Scalar::Float { re, im } => Scalar::Float { re: *re, im: -im },
        }
    }

    pub fn re(&self) -> Scalar {
        match self {
            Scalar::Exact { re, .. } => Scalar::Exact {
                re: re.clone(),
                im: BigRational::zero(),
            },
            Scalar::Float { re, .. } => Scalar::Float { re: *re, im: 0.0 },
        }
    }

    pub fn im(&self) -> Scalar {
        match self {
            Scalar::Exact { im, .. } => Scalar::Exact {
                re: im.clone(),
                im: BigRational::zero(),
            },
            Scalar::Float { im, .. } => Scalar::Float { re: *im, im: 0.0 },
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Exact { re, im } => {
                let n = re * re + im * im;
                Scalar::Exact {
                    re: re / &n,
                    im: -im / &n,
                }
            }
            Scalar::Float { re, im } => {
                let n = re * re + im * im;
                Scalar::Float {
                    re: re / n,
                    im: -im / n,
                }
            }
        })
    }

    /// `self * conj(self)` as a real scalar.
    pub fn abs_sq(&self) -> Scalar {
        match self {
            Scalar::Exact { re, im } => Scalar::Exact {
                re: re * re + im * im,
                im: BigRational::zero(),
            },
            Scalar::Float { re, im } => Scalar::Float {
                re: re * re + im * im,
                im: 0.0,
            },
        }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        match self {
            Scalar::Exact { re, im } => (rational_to_f64(re), rational_to_f64(im)),
            Scalar::Float { re, im } => (*re, *im),
        }
    }

    pub fn to_float(&self) -> Scalar {
        let (re, im) = self.to_f64_pair();
        Scalar::Float { re, im }
    }

    /// Magnitude estimate used for float residuals: max(|re|, |im|).
    pub fn magnitude(&self) -> f64 {
        let (re, im) = self.to_f64_pair();
        re.abs().max(im.abs())
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Exact { re: a, im: b }, Scalar::Exact { re: c, im: d }) => a == c && b == d,
            (Scalar::Float { re: a, im: b }, Scalar::Float { re: c, im: d }) => a == c && b == d,
            _ => false,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact { re, im } => {
                if im.is_zero() {
                    write!(f, "{}", re)
                } else if re.is_zero() {
                    write!(f, "{}i", im)
                } else {
                    write!(f, "({}{}{}i)", re, if im.is_negative() { "" } else { "+" }, im)
                }
            }
            Scalar::Float { re, im } => {
                if *im == 0.0 {
                    write!(f, "{}", re)
                } else {
                    write!(f, "({}{}{}i)", re, if *im < 0.0 { "" } else { "+" }, im)
                }
            }
        }
    }
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    let num = r.numer();
    let den = r.denom();
    // Good enough for residual reporting; exact mode never round-trips floats.
    let nf = num.to_string().parse::<f64>().unwrap_or(f64::NAN);
    let df = den.to_string().parse::<f64>().unwrap_or(f64::NAN);
    nf / df
}

/// Exact square root of a non-negative rational, when it exists.
pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer();
    let den = r.denom();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

/// Parse a rational from `"a/b"` or `"a"` decimal strings.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let num: BigInt = n.trim().parse().ok()?;
            let den: BigInt = d.trim().parse().ok()?;
            if den.is_zero() {
                None
            } else {
                Some(BigRational::new(num, den))
            }
        }
        None => {
            let num: BigInt = s.parse().ok()?;
            Some(BigRational::from_integer(num))
        }
    }
}

/// Render a rational as `"a/b"` (or `"a"` when integral).
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_arithmetic() {
        let a = Scalar::from_ratio(Backend::Exact, 1, 2);
        let i = Scalar::i(Backend::Exact);
        let z = a.add(&i); // 1/2 + i
        let w = z.mul(&z.conj());
        assert_eq!(w, Scalar::from_ratio(Backend::Exact, 5, 4));
        assert!(w.is_real());
        let inv = z.inv().unwrap();
        assert_eq!(z.mul(&inv), Scalar::one(Backend::Exact));
    }

    #[test]
    #[should_panic(expected = "mixed scalar backends")]
    fn mixing_backends_panics() {
        let a = Scalar::one(Backend::Exact);
        let b = Scalar::one(Backend::Float);
        let _ = a.add(&b);
    }

    #[test]
    fn sqrt_of_squares() {
        let r = parse_rational("9/4").unwrap();
        assert_eq!(rational_sqrt(&r).unwrap(), parse_rational("3/2").unwrap());
        assert!(rational_sqrt(&parse_rational("2").unwrap()).is_none());
    }

    #[test]
    fn rational_round_trip() {
        for s in ["0", "-7", "22/7", "-3/4"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
    }
}
