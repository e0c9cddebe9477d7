//! Single-copy Clifford algebra Cl(p,q): blades, multivectors, involutions,
//! norms and exponentials of unit bivectors.

mod blade;
mod multivector;

pub use blade::{Blade, Signature};
pub use multivector::{Multivector, SpinClass};
pub(crate) use multivector::accumulate;

use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// Operations shared by [`Multivector`] and [`crate::tensor::TensorMultivector`].
pub trait AlgebraElement: Clone + PartialEq + fmt::Debug {
    type Coeff: Coefficient;

    fn one_like(&self) -> Self;
    fn try_mul(&self, rhs: &Self) -> Result<Self>;
    fn try_add(&self, rhs: &Self) -> Result<Self>;
    fn scale(&self, c: &Self::Coeff) -> Self;
    fn is_negligible(&self) -> bool;
    fn max_abs(&self) -> f64;

    fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.try_add(&rhs.scale(&-Self::Coeff::one()))
    }

    fn commutator(&self, rhs: &Self) -> Result<Self> {
        self.try_mul(rhs)?.try_sub(&rhs.try_mul(self)?)
    }

    fn anticommutator(&self, rhs: &Self) -> Result<Self> {
        self.try_mul(rhs)?.try_add(&rhs.try_mul(self)?)
    }

    /// Square equals minus the identity.
    fn squares_to_minus_one(&self) -> Result<bool> {
        Ok(self.try_mul(self)?.try_add(&self.one_like())?.is_negligible())
    }
}

impl<C: Coefficient> AlgebraElement for Multivector<C> {
    type Coeff = C;

    fn one_like(&self) -> Self {
        Multivector::one(self.sig())
    }
    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.gp(rhs)
    }
    fn try_add(&self, rhs: &Self) -> Result<Self> {
        Multivector::try_add(self, rhs)
    }
    fn scale(&self, c: &C) -> Self {
        Multivector::scale(self, c)
    }
    fn is_negligible(&self) -> bool {
        Multivector::is_negligible(self)
    }
    fn max_abs(&self) -> f64 {
        Multivector::max_abs(self)
    }
}

/// `(cos θ, sin θ)` for `θ = k·π/4`, exact in ℚ[√2].
pub fn quarter_turn_cos_sin<C: Coefficient>(k: i64) -> (C, C) {
    let s = C::frac_1_sqrt2();
    let (one, zero) = (C::one(), C::zero());
    match k.rem_euclid(8) {
        0 => (one, zero),
        1 => (s.clone(), s),
        2 => (zero, one),
        3 => (-s.clone(), s),
        4 => (-one, zero),
        5 => (-s.clone(), -s),
        6 => (zero, -one),
        _ => (s.clone(), -s),
    }
}

/// `exp(k·π/4 · b) = cos θ + sin θ · b` for an element with `b² = -1`.
pub fn exp_quarter_turns<E: AlgebraElement>(k: i64, b: &E) -> Result<E> {
    if !b.squares_to_minus_one()? {
        return Err(Error::NotUnitBivector);
    }
    let (c, s) = quarter_turn_cos_sin::<E::Coeff>(k);
    b.one_like().scale(&c).try_add(&b.scale(&s))
}

/// Relative tolerance and term cap of the floating-point exponential series.
pub const SERIES_TOL: f64 = 1e-12;
pub const SERIES_MAX_TERMS: usize = 64;

/// `exp(θ·x)` by truncated power series, for any element and any angle.
pub fn exp_series<E: AlgebraElement<Coeff = f64>>(theta: f64, x: &E) -> Result<E> {
    let step = x.scale(&theta);
    let mut term = x.one_like();
    let mut sum = term.clone();
    for n in 1..SERIES_MAX_TERMS {
        term = term.try_mul(&step)?.scale(&(1.0 / n as f64));
        sum = sum.try_add(&term)?;
        if term.max_abs() <= SERIES_TOL * sum.max_abs().max(1.0) {
            return Ok(sum);
        }
    }
    Err(Error::SeriesNotConverged(SERIES_MAX_TERMS))
}

/// Result of testing the braid relation `xyx = yxy`.
#[derive(Clone, Debug, PartialEq)]
pub struct BraidRelation<E> {
    pub holds: bool,
    pub xyx: E,
    pub yxy: E,
}

impl<E> BraidRelation<E> {
    /// The common product when the relation holds.
    pub fn witness(&self) -> Option<&E> {
        self.holds.then_some(&self.xyx)
    }
}

pub fn braid_relation_check<E: AlgebraElement>(x: &E, y: &E) -> Result<BraidRelation<E>> {
    let xyx = x.try_mul(y)?.try_mul(x)?;
    let yxy = y.try_mul(x)?.try_mul(y)?;
    let holds = xyx.try_sub(&yxy)?.is_negligible();
    Ok(BraidRelation { holds, xyx, yxy })
}

#[cfg(test)]
mod tests;
