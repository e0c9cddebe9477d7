use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Blade, Signature};
use crate::error::{Error, Result};
use crate::scalar::{Coefficient, Scalar};

/// Sparse element of Cl(p,q): a map from basis blades to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Multivector<C = Scalar> {
    sig: Signature,
    terms: BTreeMap<Blade, C>,
}

/// Classification by evenness and the value of `N(a) = ⟨ã a⟩₀`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpinClass {
    /// even with `N = 1`
    SpinPlus,
    /// even with `N = -1`
    Spin,
    Neither,
}

pub(crate) fn accumulate<K: Ord, C: Coefficient>(map: &mut BTreeMap<K, C>, key: K, c: C) {
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(v) => {
            if !c.is_zero() {
                v.insert(c);
            }
        }
        Entry::Occupied(mut o) => {
            let sum = o.get().clone() + c;
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

impl<C: Coefficient> Multivector<C> {
    pub fn zero(sig: Signature) -> Self {
        Multivector { sig, terms: BTreeMap::new() }
    }

    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, C::one())
    }

    pub fn scalar(sig: Signature, c: C) -> Self {
        Self::from_terms(sig, [(Blade::SCALAR, c)])
    }

    pub fn basis(sig: Signature, blade: Blade) -> Self {
        Self::from_terms(sig, [(blade, C::one())])
    }

    /// Generator γᵢ.
    pub fn generator(sig: Signature, i: usize) -> Result<Self> {
        if i >= sig.dim() {
            return Err(Error::GeneratorOutOfRange { index: i, dim: sig.dim() });
        }
        Ok(Self::basis(sig, Blade::generator(i)))
    }

    /// Ordered product of generators, e.g. `[1, 0, 2, 0]` is γ₁γ₀γ₂γ₀.
    pub fn word(sig: Signature, indices: &[usize]) -> Result<Self> {
        let mut acc = Self::one(sig);
        for &i in indices {
            acc = &acc * &Self::generator(sig, i)?;
        }
        Ok(acc)
    }

    /// Sums duplicate blades and drops zero coefficients.
    ///
    /// Panics if a blade uses a generator outside `sig`.
    pub fn from_terms(sig: Signature, terms: impl IntoIterator<Item = (Blade, C)>) -> Self {
        let mut map = BTreeMap::new();
        for (b, c) in terms {
            assert!(sig.contains(b), "blade {:#b} outside {sig}", b.mask());
            accumulate(&mut map, b, c);
        }
        Multivector { sig, terms: map }
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, blade: Blade) -> C {
        self.terms.get(&blade).cloned().unwrap_or_else(C::zero)
    }

    pub fn scalar_part(&self) -> C {
        self.coefficient(Blade::SCALAR)
    }

    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|b| *b == Blade::SCALAR)
    }

    /// Every stored blade has even grade.
    pub fn is_even(&self) -> bool {
        self.terms.keys().all(Blade::is_even)
    }

    /// All coefficients are negligible (exactly zero for exact coefficients).
    pub fn is_negligible(&self) -> bool {
        self.terms.values().all(Coefficient::is_negligible)
    }

    pub fn max_abs(&self) -> f64 {
        self.terms.values().map(|c| c.to_f64().abs()).fold(0.0, f64::max)
    }

    fn check_sig(&self, other: &Self) -> Result<()> {
        if self.sig == other.sig {
            Ok(())
        } else {
            Err(Error::SignatureMismatch(self.sig.to_string(), other.sig.to_string()))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        let mut map = self.terms.clone();
        for (b, c) in &other.terms {
            accumulate(&mut map, *b, c.clone());
        }
        Ok(Multivector { sig: self.sig, terms: map })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn scale(&self, s: &C) -> Self {
        Self::from_terms(self.sig, self.terms.iter().map(|(b, c)| (*b, s.clone() * c.clone())))
    }

    /// Geometric product.
    pub fn gp(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        let mut map = BTreeMap::new();
        for (ba, ca) in &self.terms {
            for (bb, cb) in &other.terms {
                let (negated, blade) = ba.product(*bb, &self.sig);
                let c = ca.clone() * cb.clone();
                accumulate(&mut map, blade, if negated { -c } else { c });
            }
        }
        Ok(Multivector { sig: self.sig, terms: map })
    }

    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.gp(other)?.try_sub(&other.gp(self)?)
    }

    pub fn anticommutator(&self, other: &Self) -> Result<Self> {
        self.gp(other)?.try_add(&other.gp(self)?)
    }

    /// `⟨a⟩ₖ`: keeps exactly the grade-`k` blades.
    pub fn grade_project(&self, k: usize) -> Self {
        self.filter_map(|b, c| (b.grade() == k).then(|| c.clone()))
    }

    /// Even part `⟨a⟩₀ + ⟨a⟩₂ + …`.
    pub fn even_part(&self) -> Self {
        self.filter_map(|b, c| b.is_even().then(|| c.clone()))
    }

    /// Reversion: grade-`k` part times `(-1)^{k(k-1)/2}`.
    pub fn reverse(&self) -> Self {
        self.map_signs(Blade::reverse_negates)
    }

    /// Graded involution: grade-`k` part times `(-1)^k`.
    pub fn grade_involution(&self) -> Self {
        self.map_signs(|b| b.grade() % 2 == 1)
    }

    /// Hermitian adjoint `γ₀ ã γ₀`.
    ///
    /// On Cl⁺(1,3) this is the reversion of Cl(3,0) carried over by
    /// σₖ ↦ γₖγ₀: it fixes each γₖγ₀, negates the spatial bivectors and ι, and
    /// is represented by the conjugate transpose of the Pauli matrices.
    pub fn adjoint(&self) -> Self {
        let g0 = Blade::generator(0);
        self.map_signs(|b| {
            let (n1, inner) = g0.product(*b, &self.sig);
            let (n2, _) = inner.product(g0, &self.sig);
            b.reverse_negates() ^ n1 ^ n2
        })
    }

    /// `N(a) = ⟨ã a⟩₀`.
    pub fn norm_squared(&self) -> C {
        // only matching blades contribute to the scalar part
        let mut acc = C::zero();
        for (b, c) in &self.terms {
            let (neg_prod, _) = b.product(*b, &self.sig);
            let negated = neg_prod ^ b.reverse_negates();
            let sq = c.clone() * c.clone();
            acc = if negated { acc - sq } else { acc + sq };
        }
        acc
    }

    pub fn spin_class(&self) -> SpinClass {
        if !self.is_even() {
            return SpinClass::Neither;
        }
        let n = self.norm_squared();
        if (n.clone() - C::one()).is_negligible() {
            SpinClass::SpinPlus
        } else if (n + C::one()).is_negligible() {
            SpinClass::Spin
        } else {
            SpinClass::Neither
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.sig);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Multivector<D> {
        Multivector::from_terms(self.sig, self.terms.iter().map(|(b, c)| (*b, f(c))))
    }

    pub fn to_f64(&self) -> Multivector<f64> {
        self.map_coeffs(Coefficient::to_f64)
    }

    fn filter_map(&self, f: impl Fn(&Blade, &C) -> Option<C>) -> Self {
        Multivector {
            sig: self.sig,
            terms: self.terms.iter().filter_map(|(b, c)| f(b, c).map(|c| (*b, c))).collect(),
        }
    }

    fn map_signs(&self, negate: impl Fn(&Blade) -> bool) -> Self {
        self.filter_map(|b, c| Some(if negate(b) { -c.clone() } else { c.clone() }))
    }
}

impl<C: Coefficient> Neg for &Multivector<C> {
    type Output = Multivector<C>;
    fn neg(self) -> Multivector<C> {
        self.map_signs(|_| true)
    }
}

impl<C: Coefficient> Neg for Multivector<C> {
    type Output = Multivector<C>;
    fn neg(self) -> Multivector<C> {
        -&self
    }
}

// Operator forms panic on a signature mismatch; the `try_*`/`gp` methods report it.
macro_rules! binop {
    ($tr:ident, $m:ident, $via:ident) => {
        impl<C: Coefficient> $tr<&Multivector<C>> for &Multivector<C> {
            type Output = Multivector<C>;
            fn $m(self, rhs: &Multivector<C>) -> Multivector<C> {
                self.$via(rhs).expect("multivector operands must share a signature")
            }
        }
        impl<C: Coefficient> $tr<Multivector<C>> for Multivector<C> {
            type Output = Multivector<C>;
            fn $m(self, rhs: Multivector<C>) -> Multivector<C> {
                (&self).$m(&rhs)
            }
        }
        impl<C: Coefficient> $tr<&Multivector<C>> for Multivector<C> {
            type Output = Multivector<C>;
            fn $m(self, rhs: &Multivector<C>) -> Multivector<C> {
                (&self).$m(rhs)
            }
        }
        impl<C: Coefficient> $tr<Multivector<C>> for &Multivector<C> {
            type Output = Multivector<C>;
            fn $m(self, rhs: Multivector<C>) -> Multivector<C> {
                self.$m(&rhs)
            }
        }
    };
}
binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, gp);
