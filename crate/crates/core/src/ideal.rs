//! The primitive idempotent `P = ½(1 + γ₃γ₀)` and single-qubit states in the
//! minimal left ideal `Cl⁺(1,3)·P`.
//!
//! The ideal has the real basis `γ₃γ₀P, ιγ₃γ₀P, γ₁γ₀P, ιγ₁γ₀P`, which encodes
//! `|0⟩, i|0⟩, |1⟩, i|1⟩`.

use serde::{Deserialize, Serialize};

use crate::algebra::{Blade, Multivector, Signature};
use crate::complex::Cx;
use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{Coefficient, Scalar};

const ST: Signature = Signature::SPACETIME;

fn word<C: Coefficient>(w: &[usize]) -> Multivector<C> {
    Multivector::word(ST, w).expect("spacetime generator")
}

/// `½(1 + γ₃γ₀)`.
pub fn idempotent_p<C: Coefficient>() -> Multivector<C> {
    (Multivector::one(ST) + word(&[3, 0])).scale(&C::half())
}

/// Pseudoscalar `ι = γ₀γ₁γ₂γ₃`.
pub fn iota<C: Coefficient>() -> Multivector<C> {
    Multivector::basis(ST, ST.pseudoscalar())
}

/// `γ₃γ₀P, ιγ₃γ₀P, γ₁γ₀P, ιγ₁γ₀P`.
pub fn ideal_basis<C: Coefficient>() -> [Multivector<C>; 4] {
    let p = idempotent_p::<C>();
    let i = iota::<C>();
    let (z, o) = (word::<C>(&[3, 0]), word::<C>(&[1, 0]));
    [&z * &p, &i * &z * &p, &o * &p, &i * &o * &p]
}

/// Dense coordinates indexed by blade mask.
pub(crate) fn coords<C: Coefficient>(m: &Multivector<C>) -> Vec<C> {
    let mut v = vec![C::zero(); 1 << m.sig().dim()];
    for (b, c) in m.terms() {
        v[b.mask() as usize] = c.clone();
    }
    v
}

/// Real dimension of `Cl⁺(1,3)·P`: the rank of `{b·P}` over the even blades.
pub fn ideal_dimension<C: Coefficient>() -> usize {
    let p = idempotent_p::<C>();
    let spanning: Vec<Vec<C>> = (0u8..16)
        .map(Blade::from_mask)
        .filter(Blade::is_even)
        .map(|b| coords(&(Multivector::basis(ST, b) * &p)))
        .collect();
    linalg::rank(&spanning)
}

/// Real coordinates `(α₁, α₂, α₃, α₄)` of `(α₁ + iα₂)|0⟩ + (α₃ + iα₄)|1⟩`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(bound(serialize = "", deserialize = ""))]
pub struct QubitAmplitudes<C: Coefficient = Scalar> {
    #[serde(with = "amp_json")]
    pub alpha: [C; 4],
}

mod amp_json {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Wire {
        a1: String,
        a2: String,
        a3: String,
        a4: String,
    }

    pub fn serialize<C: Coefficient, S: Serializer>(a: &[C; 4], s: S) -> Result<S::Ok, S::Error> {
        let t = |c: &C| crate::scalar::coeff_string(c);
        Wire { a1: t(&a[0]), a2: t(&a[1]), a3: t(&a[2]), a4: t(&a[3]) }.serialize(s)
    }

    pub fn deserialize<'de, C: Coefficient, D: Deserializer<'de>>(d: D) -> Result<[C; 4], D::Error> {
        let w = Wire::deserialize(d)?;
        let p = |t: &str| crate::scalar::parse_coeff::<C>(t).map_err(serde::de::Error::custom);
        Ok([p(&w.a1)?, p(&w.a2)?, p(&w.a3)?, p(&w.a4)?])
    }
}

impl<C: Coefficient> QubitAmplitudes<C> {
    pub fn new(alpha: [C; 4]) -> Self {
        QubitAmplitudes { alpha }
    }

    pub fn from_complex(c0: &Cx<C>, c1: &Cx<C>) -> Self {
        Self::new([c0.re.clone(), c0.im.clone(), c1.re.clone(), c1.im.clone()])
    }

    /// `(α₁ + iα₂, α₃ + iα₄)`.
    pub fn to_complex(&self) -> [Cx<C>; 2] {
        let a = &self.alpha;
        [Cx::new(a[0].clone(), a[1].clone()), Cx::new(a[2].clone(), a[3].clone())]
    }

    /// `α₁² + α₂² + α₃² + α₄²`.
    pub fn norm_sqr(&self) -> C {
        self.alpha.iter().fold(C::zero(), |acc, a| acc + a.clone() * a.clone())
    }
}

impl QubitAmplitudes<Scalar> {
    pub fn from_ratios(r: [(i64, i64); 4]) -> Self {
        Self::new(r.map(|(n, d)| Scalar::ratio(n, d)))
    }
}

/// Raw `⟨Ψ*Φ⟩₀` and the same value scaled by `2ⁿ` so unit kets have norm 1.
#[derive(Clone, PartialEq, Debug)]
pub struct InnerProduct<C> {
    pub raw: C,
    pub normalized: C,
}

/// An element of the minimal left ideal `Cl⁺(1,3)·P`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AlgebraicSpinor<C: Coefficient = Scalar> {
    value: Multivector<C>,
}

/// Coordinates of `m` in the ideal basis, or [`Error::NotInIdeal`].
pub fn decode_qubit<C: Coefficient>(m: &Multivector<C>) -> Result<QubitAmplitudes<C>> {
    if !m.sig().is_spacetime() {
        return Err(Error::NotInIdeal);
    }
    let basis: Vec<Vec<C>> = ideal_basis::<C>().iter().map(coords).collect();
    let x = linalg::solve_in_span(&basis, &coords(m)).ok_or(Error::NotInIdeal)?;
    Ok(QubitAmplitudes::new([x[0].clone(), x[1].clone(), x[2].clone(), x[3].clone()]))
}

impl<C: Coefficient> AlgebraicSpinor<C> {
    pub fn new(value: Multivector<C>) -> Result<Self> {
        decode_qubit(&value)?;
        Ok(AlgebraicSpinor { value })
    }

    /// `(α₁γ₃γ₀ + α₂ιγ₃γ₀ + α₃γ₁γ₀ + α₄ιγ₁γ₀)P`.
    pub fn encode(amps: &QubitAmplitudes<C>) -> Self {
        let mut value = Multivector::zero(ST);
        for (a, e) in amps.alpha.iter().zip(ideal_basis::<C>()) {
            value = value + e.scale(a);
        }
        AlgebraicSpinor { value }
    }

    pub fn decode(&self) -> QubitAmplitudes<C> {
        decode_qubit(&self.value).expect("spinor stays in the ideal")
    }

    pub fn value(&self) -> &Multivector<C> {
        &self.value
    }

    pub fn into_value(self) -> Multivector<C> {
        self.value
    }

    /// The bra `P(α₁γ₃γ₀ - α₂ιγ₃γ₀ + α₃γ₁γ₀ - α₄ιγ₁γ₀)`.
    pub fn dual(&self) -> Multivector<C> {
        let a = self.decode().alpha;
        let i = iota::<C>();
        let (z, o) = (word::<C>(&[3, 0]), word::<C>(&[1, 0]));
        let inner = z.scale(&a[0]) - (&i * &z).scale(&a[1]) + o.scale(&a[2]) - (&i * &o).scale(&a[3]);
        idempotent_p::<C>() * inner
    }

    pub fn inner_product(&self, other: &Self) -> InnerProduct<C> {
        let raw = (self.dual() * &other.value).scalar_part();
        let normalized = raw.clone() + raw.clone();
        InnerProduct { raw, normalized }
    }

    /// `O·Ψ` for an even operator `O`.
    pub fn apply(&self, op: &Multivector<C>) -> Result<Self> {
        if !op.is_even() {
            return Err(Error::NotEven);
        }
        Ok(AlgebraicSpinor { value: op.gp(&self.value)? })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(x: &[usize]) -> Multivector {
        word(x)
    }

    fn p() -> Multivector {
        idempotent_p()
    }

    #[test]
    fn idempotent_identities() {
        assert_eq!(&p() * &p(), p());
        assert_eq!(w(&[3, 0]) * p(), p());
        assert_eq!(p().grade_project(0).scalar_part(), Scalar::ratio(1, 2));
        assert_eq!(ideal_dimension::<Scalar>(), 4);
        assert_eq!(ideal_dimension::<f64>(), 4);
    }

    #[test]
    fn dictionary() {
        let enc = |a| AlgebraicSpinor::encode(&QubitAmplitudes::from_ratios(a)).into_value();
        assert_eq!(enc([(1, 1), (0, 1), (0, 1), (0, 1)]), w(&[3, 0]) * p());
        assert_eq!(enc([(0, 1), (0, 1), (1, 1), (0, 1)]), w(&[1, 0]) * p());
        assert_eq!(enc([(0, 1), (1, 1), (0, 1), (0, 1)]), w(&[1, 0, 2, 0]) * p());
        assert_eq!(enc([(0, 1), (0, 1), (0, 1), (1, 1)]), w(&[2, 0, 3, 0]) * p());
        assert_eq!(iota::<Scalar>() * w(&[3, 0]), w(&[1, 0, 2, 0]));
        assert_eq!(iota::<Scalar>() * w(&[1, 0]), w(&[2, 0, 3, 0]));
    }

    #[test]
    fn decode_special_cases() {
        let one = QubitAmplitudes::from_ratios([(1, 1), (0, 1), (0, 1), (0, 1)]);
        assert_eq!(decode_qubit(&p()).unwrap(), one);
        assert_eq!(
            decode_qubit(&(w(&[1, 0]) * p())).unwrap(),
            QubitAmplitudes::from_ratios([(0, 1), (0, 1), (1, 1), (0, 1)])
        );
        assert_eq!(decode_qubit(&w(&[1])), Err(Error::NotInIdeal));
        assert_eq!(decode_qubit(&Multivector::<Scalar>::one(ST)), Err(Error::NotInIdeal));
        let zero = decode_qubit(&Multivector::<Scalar>::zero(ST)).unwrap();
        assert!(zero.alpha.iter().all(|a| *a == Scalar::from_integer(0)));
    }

    #[test]
    fn bra_and_inner_product() {
        let ket0 = AlgebraicSpinor::new(w(&[3, 0]) * p()).unwrap();
        let ket1 = AlgebraicSpinor::new(w(&[1, 0]) * p()).unwrap();
        assert_eq!(ket0.dual(), p() * w(&[3, 0]));
        let ip = ket0.inner_product(&ket0);
        assert_eq!((ip.raw, ip.normalized), (Scalar::ratio(1, 2), Scalar::from_integer(1)));
        assert_eq!(ket0.inner_product(&ket1).raw, Scalar::from_integer(0));
        let zero = AlgebraicSpinor::new(Multivector::zero(ST)).unwrap();
        assert!(zero.dual().is_zero());
        assert_eq!(zero.inner_product(&ket1).raw, Scalar::from_integer(0));
    }

    #[test]
    fn bra_is_the_adjoint_not_the_reverse() {
        let real = AlgebraicSpinor::encode(&QubitAmplitudes::from_ratios([(2, 3), (0, 1), (-1, 5), (0, 1)]));
        assert_eq!(real.dual(), real.value().adjoint());
        assert_ne!(real.dual(), real.value().reverse());
        let complex = AlgebraicSpinor::encode(&QubitAmplitudes::from_ratios([(1, 2), (3, 1), (-1, 5), (7, 4)]));
        assert_eq!(complex.dual(), complex.value().adjoint());
    }

    #[test]
    fn apply_rejects_odd_operators() {
        let ket0 = AlgebraicSpinor::new(p()).unwrap();
        assert_eq!(ket0.apply(&w(&[1])), Err(Error::NotEven));
    }

    fn amps() -> impl Strategy<Value = QubitAmplitudes> {
        proptest::array::uniform4((-20i64..20, 1i64..9)).prop_map(QubitAmplitudes::from_ratios)
    }

    fn even_op() -> impl Strategy<Value = Multivector> {
        proptest::collection::vec(-5i64..5, 8).prop_map(|cs| {
            let blades = (0u8..16).map(Blade::from_mask).filter(Blade::is_even);
            Multivector::from_terms(ST, blades.zip(cs).map(|(b, c)| (b, Scalar::from_integer(c))))
        })
    }

    proptest! {
        #[test]
        fn encode_decode_round_trip(a in amps()) {
            prop_assert_eq!(AlgebraicSpinor::encode(&a).decode(), a);
        }

        #[test]
        fn positivity_and_symmetry(a in amps(), b in amps()) {
            let (x, y) = (AlgebraicSpinor::encode(&a), AlgebraicSpinor::encode(&b));
            let self_ip = x.inner_product(&x);
            prop_assert_eq!(self_ip.normalized, a.norm_sqr());
            prop_assert!(a.norm_sqr().is_zero() || self_ip.raw > Scalar::from_integer(0));
            // the raw product ⟨Ψ*Φ⟩₀ is the real part of ⟨ψ|φ⟩, hence symmetric
            prop_assert_eq!(x.inner_product(&y), y.inner_product(&x));
        }

        #[test]
        fn adjoint_rule(o in even_op(), a in amps(), b in amps()) {
            let (phi, psi) = (AlgebraicSpinor::encode(&a), AlgebraicSpinor::encode(&b));
            let lhs = phi.apply(&o).unwrap().inner_product(&psi).raw;
            let rhs = (phi.dual() * o.adjoint() * psi.value()).scalar_part();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn left_ideal_is_stable(o in even_op(), a in amps()) {
            let s = AlgebraicSpinor::encode(&a);
            prop_assert!(AlgebraicSpinor::new(o.gp(s.value()).unwrap()).is_ok());
        }
    }
}
