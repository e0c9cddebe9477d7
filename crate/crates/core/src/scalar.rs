//! Coefficient rings.
//!
//! [`Scalar`] is the exact ring ℚ[√2]: every element is `a + b·√2` with
//! arbitrary-precision rational `a` and `b`. Since √2 is irrational the pair
//! `(a, b)` is unique, so equality and zero tests are exact and a nonzero
//! element always has an inverse `(a - b√2) / (a² - 2b²)`.
//!
//! [`Coefficient`] abstracts over `Scalar` and `f64` so the algebra types can
//! also run in a floating-point mode.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Parses `"p/q"`, `"p"` or a finite decimal such as `"-0.25"` into a rational.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let t = text.trim();
    let bad = || Error::InvalidRational(text.to_string());
    if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let int_digits = int.trim_start_matches(['-', '+']);
        if !int_digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits = format!("{int_digits}{frac}");
        let mut numer = BigInt::from_str(if digits.is_empty() { "0" } else { &digits })
            .map_err(|_| bad())?;
        if negative {
            numer = -numer;
        }
        let denom = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(Rational::new(numer, denom));
    }
    let r = Rational::from_str(t).map_err(|_| bad())?;
    Ok(r)
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// An exact element `rat + irr·√2` of ℚ[√2].
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    rat: Rational,
    irr: Rational,
}

impl Scalar {
    pub fn new(rat: Rational, irr: Rational) -> Self {
        Scalar { rat, irr }
    }

    pub fn from_rational(rat: Rational) -> Self {
        Scalar { rat, irr: Rational::zero() }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    /// `numer / denom`; panics if `denom == 0`.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        Self::from_rational(Rational::new(numer.into(), denom.into()))
    }

    pub fn sqrt2() -> Self {
        Scalar { rat: Rational::zero(), irr: Rational::one() }
    }

    /// `1/√2 = √2/2`.
    pub fn frac_1_sqrt2() -> Self {
        Scalar { rat: Rational::zero(), irr: Rational::new(1.into(), 2.into()) }
    }

    /// Rational part `a` of `a + b√2`.
    pub fn rat(&self) -> &Rational {
        &self.rat
    }

    /// Coefficient `b` of √2.
    pub fn irr(&self) -> &Rational {
        &self.irr
    }

    pub fn is_rational(&self) -> bool {
        self.irr.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }

    /// Galois conjugate `a - b√2`.
    pub fn conjugate(&self) -> Self {
        Scalar { rat: self.rat.clone(), irr: -self.irr.clone() }
    }

    /// Field norm `a² - 2b²`, zero only for the zero element.
    pub fn field_norm(&self) -> Rational {
        &self.rat * &self.rat - Rational::from_integer(2.into()) * &self.irr * &self.irr
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.field_norm();
        Some(Scalar { rat: &self.rat / &n, irr: -(&self.irr / &n) })
    }

    /// Exact sign of the real number `a + b√2`.
    pub fn signum(&self) -> Ordering {
        let sa = sign_of(&self.rat);
        let sb = sign_of(&self.irr);
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (x, y) if x == y => x,
            _ => {
                // opposite signs: compare a² with 2b²
                let a2 = &self.rat * &self.rat;
                let b2 = Rational::from_integer(2.into()) * &self.irr * &self.irr;
                if a2 > b2 {
                    sa
                } else {
                    sb
                }
            }
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            -self
        } else {
            self.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.rat.to_f64().unwrap_or(f64::NAN);
        let b = self.irr.to_f64().unwrap_or(f64::NAN);
        a + b * std::f64::consts::SQRT_2
    }

    /// Exact square root when it exists in ℚ[√2] for a rational input that is a
    /// rational square or twice a rational square.
    pub fn sqrt_of_rational(r: &Rational) -> Option<Self> {
        if r.is_negative() {
            return None;
        }
        if let Some(s) = rational_sqrt(r) {
            return Some(Scalar::from_rational(s));
        }
        // r = 2·m²  ⇒  √r = m√2
        let half = r / Rational::from_integer(2.into());
        rational_sqrt(&half).map(|m| Scalar { rat: Rational::zero(), irr: m })
    }
}

fn sign_of(r: &Rational) -> Ordering {
    r.cmp(&Rational::zero())
}

/// Exact square root of a non-negative rational, if it is a perfect square.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::from_rational(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_integer(n)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

/// `p/q`, `p/q√2`, or `p/q + r/s√2` (`-` joins a negative √2 part).
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rat.is_zero(), self.irr.is_zero()) {
            (_, true) => f.write_str(&format_rational(&self.rat)),
            (true, false) => f.write_str(&format_surd(&self.irr)),
            (false, false) => {
                let sign = if self.irr.is_negative() { '-' } else { '+' };
                write!(f, "{} {} {}", format_rational(&self.rat), sign, format_surd(&self.irr.abs()))
            }
        }
    }
}

fn format_surd(r: &Rational) -> String {
    if r.is_one() {
        "√2".to_string()
    } else if (-r).is_one() {
        "-√2".to_string()
    } else {
        format!("{}√2", format_rational(r))
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::default()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::from_integer(1)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { rat: -self.rat, irr: -self.irr }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { rat: -&self.rat, irr: -&self.irr }
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar { rat: &self.rat + &rhs.rat, irr: &self.irr + &rhs.irr }
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar { rat: &self.rat - &rhs.rat, irr: &self.irr - &rhs.irr }
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        // (a + b√2)(c + d√2) = (ac + 2bd) + (ad + bc)√2
        let two = Rational::from_integer(2.into());
        Scalar {
            rat: &self.rat * &rhs.rat + two * &self.irr * &rhs.irr,
            irr: &self.rat * &rhs.irr + &self.irr * &rhs.rat,
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.rat += &rhs.rat;
        self.irr += &rhs.irr;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts a rational (`"p/q"`, `"p"`, decimal) optionally suffixed by `√2`
    /// or `rt2`, or a bare `"√2"`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        for suffix in ["√2", "rt2"] {
            if let Some(head) = t.strip_suffix(suffix) {
                let head = head.trim_end_matches('*');
                let coeff = match head {
                    "" | "+" => Rational::one(),
                    "-" => -Rational::one(),
                    h => parse_rational(h)?,
                };
                return Ok(Scalar { rat: Rational::zero(), irr: coeff });
            }
        }
        Ok(Scalar::from_rational(parse_rational(t)?))
    }
}

/// How a coefficient is rendered in canonical text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoeffText {
    /// A single signed literal; `magnitude` is `"1"` for unit coefficients.
    Simple { negative: bool, magnitude: String },
    /// A sum that must be parenthesised, e.g. `1/2 + √2`.
    Composite(String),
}

/// Ring of coefficients used by the algebra types.
pub trait Coefficient:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    /// True when equality is decided exactly.
    const EXACT: bool;

    fn from_rational(r: &Rational) -> Self;
    fn from_scalar(s: &Scalar) -> Self;
    fn sqrt2() -> Self;
    fn to_f64(&self) -> f64;
    fn try_inverse(&self) -> Option<Self>;
    /// Zero test used by relation checks and elimination; exact for [`Scalar`].
    fn is_negligible(&self) -> bool;
    fn render(&self) -> CoeffText;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }

    fn half() -> Self {
        Self::from_rational(&Rational::new(1.into(), 2.into()))
    }

    fn frac_1_sqrt2() -> Self {
        Self::sqrt2() * Self::half()
    }
}

impl Coefficient for Scalar {
    const EXACT: bool = true;

    fn from_rational(r: &Rational) -> Self {
        Scalar::from_rational(r.clone())
    }
    fn from_scalar(s: &Scalar) -> Self {
        s.clone()
    }
    fn sqrt2() -> Self {
        Scalar::sqrt2()
    }
    fn to_f64(&self) -> f64 {
        Scalar::to_f64(self)
    }
    fn try_inverse(&self) -> Option<Self> {
        self.inverse()
    }
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }
    fn render(&self) -> CoeffText {
        match (self.rat.is_zero(), self.irr.is_zero()) {
            (_, true) => CoeffText::Simple {
                negative: self.rat.is_negative(),
                magnitude: format_rational(&self.rat.abs()),
            },
            (true, false) => CoeffText::Simple {
                negative: self.irr.is_negative(),
                magnitude: format_surd(&self.irr.abs()),
            },
            (false, false) => CoeffText::Composite(self.to_string()),
        }
    }
}

/// Text accepted back by [`parse_coeff`].
pub fn coeff_string<C: Coefficient>(c: &C) -> String {
    c.to_string()
}

/// Parses any [`Scalar`] text form and converts it into `C`.
pub fn parse_coeff<C: Coefficient>(text: &str) -> Result<C, Error> {
    Ok(C::from_scalar(&text.parse::<Scalar>()?))
}

/// Tolerance below which a float coefficient counts as zero.
pub const FLOAT_ZERO_TOL: f64 = 1e-12;

impl Coefficient for f64 {
    const EXACT: bool = false;

    fn from_rational(r: &Rational) -> Self {
        r.to_f64().unwrap_or(f64::NAN)
    }
    fn from_scalar(s: &Scalar) -> Self {
        s.to_f64()
    }
    fn sqrt2() -> Self {
        std::f64::consts::SQRT_2
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn try_inverse(&self) -> Option<Self> {
        (self.abs() > f64::MIN_POSITIVE).then(|| 1.0 / self)
    }
    fn is_negligible(&self) -> bool {
        self.abs() < FLOAT_ZERO_TOL
    }
    fn render(&self) -> CoeffText {
        CoeffText::Simple {
            negative: self.is_sign_negative() && *self != 0.0,
            magnitude: format!("{}", self.abs()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(a: (i64, i64), b: (i64, i64)) -> Scalar {
        Scalar::new(Rational::new(a.0.into(), a.1.into()), Rational::new(b.0.into(), b.1.into()))
    }

    #[test]
    fn product_law() {
        // (1 + 2√2)(3 - √2) = 3 - 4 + (-1 + 6)√2 = -1 + 5√2
        assert_eq!(s((1, 1), (2, 1)) * s((3, 1), (-1, 1)), s((-1, 1), (5, 1)));
        assert_eq!(Scalar::sqrt2() * Scalar::sqrt2(), Scalar::from_integer(2));
        assert_eq!(Scalar::frac_1_sqrt2() * Scalar::frac_1_sqrt2(), Scalar::ratio(1, 2));
    }

    #[test]
    fn inverse_and_sign() {
        let x = s((1, 1), (1, 1));
        assert_eq!(&x * &x.inverse().unwrap(), Scalar::one());
        assert!(Scalar::zero().inverse().is_none());
        // 3 - 2√2 ≈ 0.17 > 0, 1 - √2 < 0
        assert_eq!(s((3, 1), (-2, 1)).signum(), Ordering::Greater);
        assert_eq!(s((1, 1), (-1, 1)).signum(), Ordering::Less);
        assert!(Scalar::sqrt2() > Scalar::ratio(141, 100));
        assert!(Scalar::sqrt2() < Scalar::ratio(142, 100));
    }

    #[test]
    fn text_forms() {
        assert_eq!(Scalar::ratio(1, 2).to_string(), "1/2");
        assert_eq!(Scalar::frac_1_sqrt2().to_string(), "1/2√2");
        assert_eq!(s((-1, 2), (-3, 1)).to_string(), "-1/2 - 3√2");
        for text in ["1/2", "-3", "1/2√2", "-√2", "√2", "0"] {
            assert_eq!(text.parse::<Scalar>().unwrap().to_string(), text);
        }
        assert_eq!("0.25".parse::<Scalar>().unwrap(), Scalar::ratio(1, 4));
        assert_eq!("-1.5".parse::<Scalar>().unwrap(), Scalar::ratio(-3, 2));
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("abc".parse::<Scalar>().is_err());
    }

    #[test]
    fn exact_square_roots() {
        let r = |n: i64, d: i64| Rational::new(n.into(), d.into());
        assert_eq!(Scalar::sqrt_of_rational(&r(9, 4)), Some(Scalar::ratio(3, 2)));
        assert_eq!(Scalar::sqrt_of_rational(&r(2, 1)), Some(Scalar::sqrt2()));
        assert_eq!(Scalar::sqrt_of_rational(&r(1, 2)), Some(Scalar::frac_1_sqrt2()));
        assert_eq!(Scalar::sqrt_of_rational(&r(3, 1)), None);
    }

    fn small() -> impl Strategy<Value = Scalar> {
        (-20i64..20, 1i64..9, -20i64..20, 1i64..9).prop_map(|(a, b, c, d)| s((a, b), (c, d)))
    }

    proptest! {
        #[test]
        fn zero_iff_both_parts_zero(x in small()) {
            prop_assert_eq!(x.is_zero(), x.rat().is_zero() && x.irr().is_zero());
            prop_assert_eq!(x.is_zero(), x.signum() == Ordering::Equal);
        }

        #[test]
        fn product_matches_float(x in small(), y in small()) {
            let exact = (&x * &y).to_f64();
            let float = x.to_f64() * y.to_f64();
            prop_assert!((exact - float).abs() <= 1e-12 * (1.0 + float.abs()));
        }

        #[test]
        fn sign_matches_float(x in small()) {
            let f = x.to_f64();
            if f.abs() > 1e-9 {
                prop_assert_eq!(x.signum(), f.partial_cmp(&0.0).unwrap());
            }
        }
    }
}
