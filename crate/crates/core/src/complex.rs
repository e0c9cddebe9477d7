//! Complex numbers over a [`Coefficient`] ring.
//!
//! `num_complex::Complex` needs a full `Num` implementation (division,
//! remainder, radix parsing) that ℚ[√2] has no natural use for, so the
//! handful of ring operations needed here are spelled out directly.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::{Coefficient, Scalar};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Cx<C = Scalar> {
    pub re: C,
    pub im: C,
}

impl<C: Coefficient> Cx<C> {
    pub fn new(re: C, im: C) -> Self {
        Cx { re, im }
    }

    pub fn real(re: C) -> Self {
        Cx { re, im: C::zero() }
    }

    pub fn zero() -> Self {
        Self::real(C::zero())
    }

    pub fn one() -> Self {
        Self::real(C::one())
    }

    pub fn i() -> Self {
        Cx { re: C::zero(), im: C::one() }
    }

    pub fn conj(&self) -> Self {
        Cx { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn scale(&self, s: &C) -> Self {
        Cx { re: self.re.clone() * s.clone(), im: self.im.clone() * s.clone() }
    }

    /// `|z|²`.
    pub fn norm_sqr(&self) -> C {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_negligible(&self) -> bool {
        self.re.is_negligible() && self.im.is_negligible()
    }

    pub fn to_f64(&self) -> Cx<f64> {
        Cx { re: self.re.to_f64(), im: self.im.to_f64() }
    }

    pub fn abs_f64(&self) -> f64 {
        self.re.to_f64().hypot(self.im.to_f64())
    }
}

impl<C: Coefficient> Add for Cx<C> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Cx { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl<C: Coefficient> Sub for Cx<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Cx { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl<C: Coefficient> Mul for Cx<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Cx {
            re: self.re.clone() * rhs.re.clone() - self.im.clone() * rhs.im.clone(),
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

impl<C: Coefficient> Neg for Cx<C> {
    type Output = Self;
    fn neg(self) -> Self {
        Cx { re: -self.re, im: -self.im }
    }
}

impl<C: Coefficient + fmt::Display> fmt::Display for Cx<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "({})i", self.im),
            _ => write!(f, "{} + ({})i", self.re, self.im),
        }
    }
}
