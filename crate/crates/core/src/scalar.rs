//! Exact scalar rings: rationals, Gaussian rationals and rational quaternions.
//!
//! Every ring exposes its coordinates over the rationals (`real_parts`), which
//! is how the linear-algebra layer handles non-commutative entries: any linear
//! problem over these rings is solved as a rational problem in the real parts.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exact rational numbers.
pub type Rational = num_rational::BigRational;

/// Small-integer rational constructor.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot parse scalar `{0}`")]
pub struct ParseScalarError(pub String);

/// Tag naming the scalar ring a value lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ring {
    Rational,
    Gaussian,
    Quaternion,
}

impl Ring {
    /// Dimension over the reals.
    pub fn real_dim(self) -> usize {
        match self {
            Ring::Rational => 1,
            Ring::Gaussian => 2,
            Ring::Quaternion => 4,
        }
    }

    pub fn letter(self) -> &'static str {
        match self {
            Ring::Rational => "R",
            Ring::Gaussian => "C",
            Ring::Quaternion => "H",
        }
    }
}

/// An exact division ring with rational coordinates.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    const RING: Ring;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(r: Rational) -> Self;
    /// Multiplicative inverse; `None` only for zero.
    fn inv(&self) -> Option<Self>;
    /// Complex or quaternionic conjugation; identity on rationals.
    fn conj(&self) -> Self;
    /// Coordinates over the rationals, `RING.real_dim()` of them.
    fn real_parts(&self) -> Vec<Rational>;
    fn from_real_parts(parts: &[Rational]) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// The `k`-th element of the rational basis of the ring.
    fn real_unit(k: usize) -> Self {
        let mut parts = vec![Rational::zero(); Self::RING.real_dim()];
        parts[k] = Rational::one();
        Self::from_real_parts(&parts)
    }

    /// Scalar times a rational; rationals are central in every ring here.
    fn scale(&self, r: &Rational) -> Self {
        self.clone() * &Self::from_rational(r.clone())
    }
}

/// Commutative scalar rings, over which Gaussian elimination is available.
pub trait Field: Scalar {}

impl Scalar for Rational {
    const RING: Ring = Ring::Rational;

    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn inv(&self) -> Option<Self> {
        if num_traits::Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn real_parts(&self) -> Vec<Rational> {
        vec![self.clone()]
    }
    fn from_real_parts(parts: &[Rational]) -> Self {
        parts[0].clone()
    }
}

impl Field for Rational {}

/// Parses `"3"`, `"-3/5"`.
pub fn parse_rational(s: &str) -> Result<Rational, ParseScalarError> {
    let t = s.trim();
    Rational::from_str(t).map_err(|_| ParseScalarError(s.to_string()))
}

/// `a + b i` with rational `a`, `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gaussian {
    pub re: Rational,
    pub im: Rational,
}

impl Gaussian {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn i() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub fn real(re: Rational) -> Self {
        Self::new(re, Rational::zero())
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        Scalar::is_zero(&self.im)
    }
}

impl Add for Gaussian {
    type Output = Gaussian;
    fn add(self, rhs: Gaussian) -> Gaussian {
        Gaussian::new(self.re + rhs.re, self.im + rhs.im)
    }
}
impl<'a> Add<&'a Gaussian> for Gaussian {
    type Output = Gaussian;
    fn add(self, rhs: &'a Gaussian) -> Gaussian {
        Gaussian::new(self.re + &rhs.re, self.im + &rhs.im)
    }
}
impl Sub for Gaussian {
    type Output = Gaussian;
    fn sub(self, rhs: Gaussian) -> Gaussian {
        Gaussian::new(self.re - rhs.re, self.im - rhs.im)
    }
}
impl<'a> Sub<&'a Gaussian> for Gaussian {
    type Output = Gaussian;
    fn sub(self, rhs: &'a Gaussian) -> Gaussian {
        Gaussian::new(self.re - &rhs.re, self.im - &rhs.im)
    }
}
impl<'a> Mul<&'a Gaussian> for Gaussian {
    type Output = Gaussian;
    fn mul(self, rhs: &'a Gaussian) -> Gaussian {
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        Gaussian::new(re, im)
    }
}
impl Mul for Gaussian {
    type Output = Gaussian;
    fn mul(self, rhs: Gaussian) -> Gaussian {
        self * &rhs
    }
}
impl Neg for Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian::new(-self.re, -self.im)
    }
}

impl Scalar for Gaussian {
    const RING: Ring = Ring::Gaussian;

    fn zero() -> Self {
        Gaussian::real(Rational::zero())
    }
    fn one() -> Self {
        Gaussian::real(Rational::one())
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(&self.re) && Scalar::is_zero(&self.im)
    }
    fn from_rational(r: Rational) -> Self {
        Gaussian::real(r)
    }
    fn inv(&self) -> Option<Self> {
        if Scalar::is_zero(self) {
            return None;
        }
        let n = self.norm_sqr();
        Some(Gaussian::new(&self.re / &n, -(&self.im / &n)))
    }
    fn conj(&self) -> Self {
        Gaussian::new(self.re.clone(), -self.im.clone())
    }
    fn real_parts(&self) -> Vec<Rational> {
        vec![self.re.clone(), self.im.clone()]
    }
    fn from_real_parts(parts: &[Rational]) -> Self {
        Gaussian::new(parts[0].clone(), parts[1].clone())
    }
}

impl Field for Gaussian {}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im_str = |im: &Rational| -> String {
            if im.is_one() {
                "i".to_string()
            } else if *im == -Rational::one() {
                "-i".to_string()
            } else {
                format!("{im}i")
            }
        };
        match (Scalar::is_zero(&self.re), Scalar::is_zero(&self.im)) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}", im_str(&self.im)),
            (false, false) => {
                let s = im_str(&self.im);
                if s.starts_with('-') {
                    write!(f, "{}{}", self.re, s)
                } else {
                    write!(f, "{}+{}", self.re, s)
                }
            }
        }
    }
}

impl FromStr for Gaussian {
    type Err = ParseScalarError;

    /// Accepts `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i` with rational `a`, `b`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseScalarError(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(err());
        }
        let Some(body) = t.strip_suffix('i') else {
            return Ok(Gaussian::real(parse_rational(&t).map_err(|_| err())?));
        };
        let split = body
            .char_indices()
            .filter(|&(k, c)| k > 0 && (c == '+' || c == '-'))
            .map(|(k, _)| k)
            .last();
        let (re_str, im_str) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("", body),
        };
        let im = match im_str {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            other => parse_rational(other.trim_start_matches('+')).map_err(|_| err())?,
        };
        let re = if re_str.is_empty() {
            Rational::zero()
        } else {
            parse_rational(re_str).map_err(|_| err())?
        };
        Ok(Gaussian::new(re, im))
    }
}

/// Rational quaternion `w 1 + x τ1 + y τ2 + z τ3` with
/// `τ1 τ2 = τ3`, `τ2 τ3 = τ1`, `τ3 τ1 = τ2` and `(τk)² = -1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub w: Rational,
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Quaternion {
    pub fn new(w: Rational, x: Rational, y: Rational, z: Rational) -> Self {
        Self { w, x, y, z }
    }

    /// `τ1`, `τ2`, `τ3` for `k = 1, 2, 3`.
    pub fn tau(k: usize) -> Self {
        assert!((1..=3).contains(&k), "quaternion unit index {k}");
        Self::real_unit(k)
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.w * &self.w + &self.x * &self.x + &self.y * &self.y + &self.z * &self.z
    }

    pub fn components(&self) -> [&Rational; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Quaternion) -> Quaternion {
        self + &rhs
    }
}
impl<'a> Add<&'a Quaternion> for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: &'a Quaternion) -> Quaternion {
        Quaternion::new(self.w + &rhs.w, self.x + &rhs.x, self.y + &rhs.y, self.z + &rhs.z)
    }
}
impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: Quaternion) -> Quaternion {
        self - &rhs
    }
}
impl<'a> Sub<&'a Quaternion> for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: &'a Quaternion) -> Quaternion {
        Quaternion::new(self.w - &rhs.w, self.x - &rhs.x, self.y - &rhs.y, self.z - &rhs.z)
    }
}
impl<'a> Mul<&'a Quaternion> for Quaternion {
    type Output = Quaternion;
    fn mul(self, r: &'a Quaternion) -> Quaternion {
        let (a, b, c, d) = (&self.w, &self.x, &self.y, &self.z);
        let (e, f, g, h) = (&r.w, &r.x, &r.y, &r.z);
        Quaternion::new(
            a * e - b * f - c * g - d * h,
            a * f + b * e + c * h - d * g,
            a * g - b * h + c * e + d * f,
            a * h + b * g - c * f + d * e,
        )
    }
}
impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: Quaternion) -> Quaternion {
        self * &rhs
    }
}
impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl Scalar for Quaternion {
    const RING: Ring = Ring::Quaternion;

    fn zero() -> Self {
        Quaternion::new(Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero())
    }
    fn one() -> Self {
        Quaternion::new(Rational::one(), Rational::zero(), Rational::zero(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.components().iter().all(|c| Scalar::is_zero(*c))
    }
    fn from_rational(r: Rational) -> Self {
        Quaternion::new(r, Rational::zero(), Rational::zero(), Rational::zero())
    }
    fn inv(&self) -> Option<Self> {
        if Scalar::is_zero(self) {
            return None;
        }
        let n = self.norm_sqr();
        let c = self.conj();
        Some(Quaternion::new(&c.w / &n, &c.x / &n, &c.y / &n, &c.z / &n))
    }
    fn conj(&self) -> Self {
        Quaternion::new(self.w.clone(), -self.x.clone(), -self.y.clone(), -self.z.clone())
    }
    fn real_parts(&self) -> Vec<Rational> {
        self.components().into_iter().cloned().collect()
    }
    fn from_real_parts(parts: &[Rational]) -> Self {
        Quaternion::new(parts[0].clone(), parts[1].clone(), parts[2].clone(), parts[3].clone())
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{},{}]", self.w, self.x, self.y, self.z)
    }
}

/// Sign of a nonzero rational as `±1`; zero maps to `0`.
pub fn signum(r: &Rational) -> i32 {
    if Scalar::is_zero(r) {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Scalars that can be read into a (possibly larger) scalar ring.
pub trait EmbedInto<T: Scalar> {
    fn embed(&self) -> T;
}

impl<T: Scalar> EmbedInto<T> for Rational {
    fn embed(&self) -> T {
        T::from_rational(self.clone())
    }
}

impl EmbedInto<Gaussian> for Gaussian {
    fn embed(&self) -> Gaussian {
        self.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_unit_relations() {
        let one = Quaternion::one();
        let t = |k| Quaternion::tau(k);
        for k in 1..=3 {
            assert_eq!(t(k) * t(k), -one.clone());
        }
        assert_eq!(t(1) * t(2) * t(3), -one.clone());
        assert_eq!(t(1) * t(2), t(3));
        assert_eq!(t(2) * t(1), -t(3));
        assert_eq!(t(2) * t(3), t(1));
        assert_eq!(t(3) * t(1), t(2));
    }

    #[test]
    fn quaternion_inverse() {
        let q = Quaternion::new(int(1), rat(1, 2), int(-3), rat(2, 7));
        assert_eq!(q.clone() * &q.inv().unwrap(), Quaternion::one());
        assert_eq!(q.inv().unwrap() * &q, Quaternion::one());
        assert!(Quaternion::zero().inv().is_none());
    }

    #[test]
    fn gaussian_parse_and_display() {
        let cases = [
            ("3/5", Gaussian::real(rat(3, 5))),
            ("1/2+1/3i", Gaussian::new(rat(1, 2), rat(1, 3))),
            ("1/2-1/3i", Gaussian::new(rat(1, 2), rat(-1, 3))),
            ("-i", Gaussian::new(int(0), int(-1))),
            ("i", Gaussian::i()),
            ("2i", Gaussian::new(int(0), int(2))),
            ("-2+i", Gaussian::new(int(-2), int(1))),
            ("-7/4", Gaussian::real(rat(-7, 4))),
        ];
        for (s, g) in cases {
            let parsed: Gaussian = s.parse().unwrap();
            assert_eq!(parsed, g, "{s}");
            let back: Gaussian = parsed.to_string().parse().unwrap();
            assert_eq!(back, g);
        }
        assert!("x".parse::<Gaussian>().is_err());
        assert!("".parse::<Gaussian>().is_err());
    }

    #[test]
    fn gaussian_inverse() {
        let z = Gaussian::new(rat(3, 2), int(-2));
        assert_eq!(z.clone() * &z.inv().unwrap(), Gaussian::one());
    }
}
