//! n-fold tensor products `Cl(1,3)^⊗n` with the slotwise (ungraded) product,
//! multi-qubit states, Bell states and the Δ⁽ⁿ⁾ sign rule.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::algebra::{accumulate, AlgebraElement, Blade, Multivector, Signature};
use crate::complex::Cx;
use crate::error::{Error, Result};
use crate::ideal::{decode_qubit, ideal_basis, idempotent_p, iota};
use crate::scalar::{coeff_string, parse_coeff, Coefficient, Scalar};

/// Sparse element of `Cl(p,q)^⊗n`, keyed by one blade per slot.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TensorMultivector<C = Scalar> {
    sig: Signature,
    slots: usize,
    terms: BTreeMap<Vec<Blade>, C>,
}

impl<C: Coefficient> TensorMultivector<C> {
    pub fn zero(sig: Signature, slots: usize) -> Self {
        TensorMultivector { sig, slots, terms: BTreeMap::new() }
    }

    /// `1^⊗n`.
    pub fn identity(sig: Signature, slots: usize) -> Self {
        Self::from_terms(sig, slots, [(vec![Blade::SCALAR; slots], C::one())])
    }

    /// Panics if a key has the wrong length or leaves the signature.
    pub fn from_terms(sig: Signature, slots: usize, terms: impl IntoIterator<Item = (Vec<Blade>, C)>) -> Self {
        let mut map = BTreeMap::new();
        for (k, c) in terms {
            assert_eq!(k.len(), slots, "tensor key length");
            assert!(k.iter().all(|b| sig.contains(*b)), "blade outside {sig}");
            accumulate(&mut map, k, c);
        }
        TensorMultivector { sig, slots, terms: map }
    }

    /// `a₁ ⊗ a₂ ⊗ … ⊗ aₙ`.
    pub fn tensor(parts: &[Multivector<C>]) -> Result<Self> {
        let first = parts.first().ok_or(Error::EmptyTensor)?;
        let sig = first.sig();
        if let Some(bad) = parts.iter().find(|p| p.sig() != sig) {
            return Err(Error::SignatureMismatch(sig.to_string(), bad.sig().to_string()));
        }
        let mut acc: Vec<(Vec<Blade>, C)> = vec![(Vec::new(), C::one())];
        for part in parts {
            let mut next = Vec::with_capacity(acc.len() * part.len());
            for (key, c) in &acc {
                for (b, d) in part.terms() {
                    let mut k = key.clone();
                    k.push(*b);
                    next.push((k, c.clone() * d.clone()));
                }
            }
            acc = next;
        }
        Ok(Self::from_terms(sig, parts.len(), acc))
    }

    /// The same element in every slot.
    pub fn tensor_power(a: &Multivector<C>, n: usize) -> Result<Self> {
        Self::tensor(&vec![a.clone(); n])
    }

    /// A single-slot tensor holding `a`.
    pub fn from_multivector(a: &Multivector<C>) -> Self {
        Self::tensor(std::slice::from_ref(a)).expect("one part")
    }

    /// The single-slot content, when `slots == 1`.
    pub fn to_multivector(&self) -> Option<Multivector<C>> {
        (self.slots == 1).then(|| Multivector::from_terms(self.sig, self.terms.iter().map(|(k, c)| (k[0], c.clone()))))
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn slots(&self) -> usize {
        self.slots
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[Blade], &C)> {
        self.terms.iter().map(|(k, c)| (k.as_slice(), c))
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

    pub fn coefficient(&self, key: &[Blade]) -> C {
        self.terms.get(key).cloned().unwrap_or_else(C::zero)
    }

    /// Coefficient of `1^⊗n`.
    pub fn scalar_part(&self) -> C {
        self.coefficient(&vec![Blade::SCALAR; self.slots])
    }

    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|k| k.iter().all(|b| *b == Blade::SCALAR))
    }

    /// Every slot of every term is even.
    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|k| k.iter().all(Blade::is_even))
    }

    pub fn is_negligible(&self) -> bool {
        self.terms.values().all(Coefficient::is_negligible)
    }

    pub fn max_abs(&self) -> f64 {
        self.terms.values().map(|c| c.to_f64().abs()).fold(0.0, f64::max)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.slots != other.slots {
            return Err(Error::SlotMismatch(self.slots, other.slots));
        }
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch(self.sig.to_string(), other.sig.to_string()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut map = self.terms.clone();
        for (k, c) in &other.terms {
            accumulate(&mut map, k.clone(), c.clone());
        }
        Ok(TensorMultivector { sig: self.sig, slots: self.slots, terms: map })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn scale(&self, s: &C) -> Self {
        Self::from_terms(self.sig, self.slots, self.terms.iter().map(|(k, c)| (k.clone(), s.clone() * c.clone())))
    }

    /// Slotwise product `(a₁⊗…⊗aₙ)(b₁⊗…⊗bₙ) = (a₁b₁)⊗…⊗(aₙbₙ)`.
    pub fn tmul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut map = BTreeMap::new();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let mut negated = false;
                let key: Vec<Blade> = ka
                    .iter()
                    .zip(kb)
                    .map(|(a, b)| {
                        let (n, blade) = a.product(*b, &self.sig);
                        negated ^= n;
                        blade
                    })
                    .collect();
                let c = ca.clone() * cb.clone();
                accumulate(&mut map, key, if negated { -c } else { c });
            }
        }
        Ok(TensorMultivector { sig: self.sig, slots: self.slots, terms: map })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity(self.sig, self.slots);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    fn map_signs(&self, negate: impl Fn(&Blade) -> bool) -> Self {
        let terms = self.terms.iter().map(|(k, c)| {
            let flip = k.iter().filter(|b| negate(b)).count() % 2 == 1;
            (k.clone(), if flip { -c.clone() } else { c.clone() })
        });
        TensorMultivector { sig: self.sig, slots: self.slots, terms: terms.collect() }
    }

    /// Reversion in every slot.
    pub fn reverse(&self) -> Self {
        self.map_signs(Blade::reverse_negates)
    }

    /// Hermitian adjoint in every slot (see [`Multivector::adjoint`]).
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero(self.sig, self.slots);
        for (k, c) in &self.terms {
            let mut negated = false;
            for b in k {
                let single = Multivector::<C>::basis(self.sig, *b).adjoint();
                negated ^= single.coefficient(*b) != C::one();
            }
            accumulate(&mut out.terms, k.clone(), if negated { -c.clone() } else { c.clone() });
        }
        out
    }

    /// `A·Ã = 1^⊗n`.
    pub fn is_unitary(&self) -> Result<bool> {
        Ok(self.tmul(&self.reverse())?.try_sub(&Self::identity(self.sig, self.slots))?.is_negligible())
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> TensorMultivector<D> {
        TensorMultivector::from_terms(self.sig, self.slots, self.terms.iter().map(|(k, c)| (k.clone(), f(c))))
    }

    pub fn to_f64(&self) -> TensorMultivector<f64> {
        self.map_coeffs(Coefficient::to_f64)
    }
}

impl<C: Coefficient> Neg for &TensorMultivector<C> {
    type Output = TensorMultivector<C>;
    fn neg(self) -> TensorMultivector<C> {
        self.scale(&-C::one())
    }
}

impl<C: Coefficient> Neg for TensorMultivector<C> {
    type Output = TensorMultivector<C>;
    fn neg(self) -> TensorMultivector<C> {
        -&self
    }
}

// Operator forms panic on slot or signature mismatch; `try_*`/`tmul` report it.
macro_rules! binop {
    ($tr:ident, $m:ident, $via:ident) => {
        impl<C: Coefficient> $tr<&TensorMultivector<C>> for &TensorMultivector<C> {
            type Output = TensorMultivector<C>;
            fn $m(self, rhs: &TensorMultivector<C>) -> TensorMultivector<C> {
                self.$via(rhs).expect("tensor operands must agree in slots and signature")
            }
        }
        impl<C: Coefficient> $tr<TensorMultivector<C>> for TensorMultivector<C> {
            type Output = TensorMultivector<C>;
            fn $m(self, rhs: TensorMultivector<C>) -> TensorMultivector<C> {
                (&self).$m(&rhs)
            }
        }
        impl<C: Coefficient> $tr<&TensorMultivector<C>> for TensorMultivector<C> {
            type Output = TensorMultivector<C>;
            fn $m(self, rhs: &TensorMultivector<C>) -> TensorMultivector<C> {
                (&self).$m(rhs)
            }
        }
        impl<C: Coefficient> $tr<TensorMultivector<C>> for &TensorMultivector<C> {
            type Output = TensorMultivector<C>;
            fn $m(self, rhs: TensorMultivector<C>) -> TensorMultivector<C> {
                self.$m(&rhs)
            }
        }
    };
}
binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, tmul);

impl<C: Coefficient> fmt::Display for TensorMultivector<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::text::fmt_tensor_terms(f, &self.sig, self.slots, self.terms())
    }
}

impl<C: Coefficient> AlgebraElement for TensorMultivector<C> {
    type Coeff = C;

    fn one_like(&self) -> Self {
        Self::identity(self.sig, self.slots)
    }
    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.tmul(rhs)
    }
    fn try_add(&self, rhs: &Self) -> Result<Self> {
        TensorMultivector::try_add(self, rhs)
    }
    fn scale(&self, c: &C) -> Self {
        TensorMultivector::scale(self, c)
    }
    fn is_negligible(&self) -> bool {
        TensorMultivector::is_negligible(self)
    }
    fn max_abs(&self) -> f64 {
        TensorMultivector::max_abs(self)
    }
}

const ST: Signature = Signature::SPACETIME;

/// `P^⊗n`.
pub fn idempotent_power<C: Coefficient>(n: usize) -> TensorMultivector<C> {
    TensorMultivector::tensor_power(&idempotent_p(), n).expect("n >= 1")
}

/// 2ⁿ complex amplitudes in lexicographic bitstring order, slot 1 most significant.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StateVector<C: Coefficient = Scalar> {
    pub amps: Vec<Cx<C>>,
}

#[derive(Serialize, Deserialize)]
struct StateWire {
    n: usize,
    amps: Vec<[String; 2]>,
}

impl<C: Coefficient> StateVector<C> {
    pub fn new(amps: Vec<Cx<C>>) -> Result<Self> {
        let n = amps.len().trailing_zeros() as usize;
        if amps.len() != 1 << n || n == 0 {
            return Err(Error::AmplitudeCount { expected: 1 << n.max(1), found: amps.len() });
        }
        Ok(StateVector { amps })
    }

    /// The `2·2ⁿ` real coordinates `α₁, α₂, …` (real and imaginary parts interleaved).
    pub fn from_reals(alpha: &[C]) -> Result<Self> {
        if alpha.len() % 2 == 1 {
            return Err(Error::AmplitudeCount { expected: alpha.len() + 1, found: alpha.len() });
        }
        Self::new(alpha.chunks(2).map(|p| Cx::new(p[0].clone(), p[1].clone())).collect())
    }

    pub fn qubits(&self) -> usize {
        self.amps.len().trailing_zeros() as usize
    }

    pub fn to_json(&self) -> serde_json::Value {
        let wire = StateWire {
            n: self.qubits(),
            amps: self.amps.iter().map(|z| [coeff_string(&z.re), coeff_string(&z.im)]).collect(),
        };
        serde_json::to_value(wire).expect("plain data")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let wire: StateWire = serde_json::from_value(v.clone()).map_err(|e| Error::Input(e.to_string()))?;
        let amps = wire
            .amps
            .iter()
            .map(|[re, im]| Ok(Cx::new(parse_coeff(re)?, parse_coeff(im)?)))
            .collect::<Result<Vec<_>>>()?;
        let state = Self::new(amps)?;
        if state.qubits() != wire.n {
            return Err(Error::AmplitudeCount { expected: 1 << wire.n, found: state.amps.len() });
        }
        Ok(state)
    }
}

/// Sum of the per-slot ideal basis products; the imaginary part of each
/// amplitude is carried by `ι` in the last slot.
pub fn encode_state<C: Coefficient>(state: &StateVector<C>) -> TensorMultivector<C> {
    let n = state.qubits();
    let basis = ideal_basis::<C>();
    let mut out = TensorMultivector::zero(ST, n);
    for (index, z) in state.amps.iter().enumerate() {
        let bits: Vec<usize> = (0..n).map(|k| index >> (n - 1 - k) & 1).collect();
        for (part, coeff) in [(0, &z.re), (1, &z.im)] {
            if coeff.is_zero() {
                continue;
            }
            let parts: Vec<Multivector<C>> = bits
                .iter()
                .enumerate()
                .map(|(k, &bit)| basis[2 * bit + if k == n - 1 { part } else { 0 }].clone())
                .collect();
            out = out + TensorMultivector::tensor(&parts).expect("n >= 1").scale(coeff);
        }
    }
    out
}

/// `(c₀, c₁)` such that `b·P = c₀|0⟩ + c₁|1⟩` for an even blade `b`.
fn blade_column<C: Coefficient>(b: Blade) -> [Cx<C>; 2] {
    let bp = Multivector::basis(ST, b) * idempotent_p::<C>();
    decode_qubit(&bp).expect("even blade times P lies in the ideal").to_complex()
}

/// Whether `t` lies in `[Cl⁺(1,3)]^⊗n P^⊗n`: even in every slot and fixed by `P^⊗n`.
pub fn in_ideal<C: Coefficient>(t: &TensorMultivector<C>) -> bool {
    t.sig().is_spacetime()
        && t.is_even()
        && t.tmul(&idempotent_power(t.slots())).and_then(|tp| tp.try_sub(t)).is_ok_and(|d| d.is_negligible())
}

/// Inverse of [`encode_state`] up to the identification of `ι` across slots.
pub fn decode_state<C: Coefficient>(t: &TensorMultivector<C>) -> Result<StateVector<C>> {
    if !in_ideal(t) {
        return Err(Error::NotInIdeal);
    }
    let n = t.slots();
    let columns: BTreeMap<Blade, [Cx<C>; 2]> =
        (0u8..16).map(Blade::from_mask).filter(Blade::is_even).map(|b| (b, blade_column(b))).collect();
    let mut amps = vec![Cx::zero(); 1 << n];
    for (key, c) in t.terms() {
        // Kronecker product of the slot columns
        let mut vec = vec![Cx::real(c.clone())];
        for b in key {
            let col = &columns[b];
            vec = vec.iter().flat_map(|z| [z.clone() * col[0].clone(), z.clone() * col[1].clone()]).collect();
        }
        for (a, z) in amps.iter_mut().zip(vec) {
            *a = a.clone() + z;
        }
    }
    StateVector::new(amps)
}

/// The canonical ideal element representing the same state as `t`.
pub fn canonical_state<C: Coefficient>(t: &TensorMultivector<C>) -> Result<TensorMultivector<C>> {
    Ok(encode_state(&decode_state(t)?))
}

/// Two ideal elements encode the same multi-qubit state.
pub fn same_state<C: Coefficient>(a: &TensorMultivector<C>, b: &TensorMultivector<C>) -> Result<bool> {
    let (x, y) = (decode_state(a)?, decode_state(b)?);
    Ok(x.amps.len() == y.amps.len() && x.amps.iter().zip(&y.amps).all(|(p, q)| (p.clone() - q.clone()).is_negligible()))
}

/// Slotwise bra: the adjoint in every slot.
pub fn dual_state<C: Coefficient>(t: &TensorMultivector<C>) -> TensorMultivector<C> {
    t.adjoint()
}

/// Raw `⟨Ψ*Φ⟩₀` and the value scaled by `2ⁿ`.
pub fn tensor_inner_product<C: Coefficient>(
    a: &TensorMultivector<C>,
    b: &TensorMultivector<C>,
) -> Result<crate::ideal::InnerProduct<C>> {
    let raw = dual_state(a).tmul(b)?.scalar_part();
    let normalized = raw.clone() * C::from_i64(1 << a.slots());
    Ok(crate::ideal::InnerProduct { raw, normalized })
}

/// Exact rank-≤1 test on the 2×2 amplitude matrix of a two-qubit state.
pub fn is_factorable<C: Coefficient>(t: &TensorMultivector<C>) -> Result<bool> {
    if t.slots() != 2 {
        return Err(Error::SlotMismatch(2, t.slots()));
    }
    let a = decode_state(t)?.amps;
    let det = a[0].clone() * a[3].clone() - a[1].clone() * a[2].clone();
    Ok(det.is_negligible())
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum BellLabel {
    #[serde(rename = "Phi+")]
    PhiPlus,
    #[serde(rename = "Phi-")]
    PhiMinus,
    #[serde(rename = "Psi+")]
    PsiPlus,
    #[serde(rename = "Psi-")]
    PsiMinus,
}

impl BellLabel {
    pub const ALL: [BellLabel; 4] = [BellLabel::PhiPlus, BellLabel::PhiMinus, BellLabel::PsiPlus, BellLabel::PsiMinus];

    pub fn name(&self) -> &'static str {
        match self {
            BellLabel::PhiPlus => "Phi+",
            BellLabel::PhiMinus => "Phi-",
            BellLabel::PsiPlus => "Psi+",
            BellLabel::PsiMinus => "Psi-",
        }
    }
}

impl fmt::Display for BellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `(1/√2)(x⊗y ± y'⊗x')P^⊗2` with `γ₃γ₀` for `|0⟩` and `γ₁γ₀` for `|1⟩`.
pub fn bell_state<C: Coefficient>(label: BellLabel) -> TensorMultivector<C> {
    let z = Multivector::<C>::word(ST, &[3, 0]).expect("spacetime");
    let o = Multivector::<C>::word(ST, &[1, 0]).expect("spacetime");
    let pair = |a: &Multivector<C>, b: &Multivector<C>| TensorMultivector::tensor(&[a.clone(), b.clone()]).expect("two parts");
    let (first, second, sign) = match label {
        BellLabel::PhiPlus => (pair(&z, &z), pair(&o, &o), C::one()),
        BellLabel::PhiMinus => (pair(&z, &z), pair(&o, &o), -C::one()),
        BellLabel::PsiPlus => (pair(&z, &o), pair(&o, &z), C::one()),
        BellLabel::PsiMinus => (pair(&z, &o), pair(&o, &z), -C::one()),
    };
    (first + second.scale(&sign)).scale(&C::frac_1_sqrt2()) * idempotent_power::<C>(2)
}

pub fn bell_states<C: Coefficient>() -> [(BellLabel, TensorMultivector<C>); 4] {
    BellLabel::ALL.map(|l| (l, bell_state(l)))
}

/// `ι ⊗ 1 ⊗ … ⊗ 1` with `ι` in slot `k`.
pub fn iota_in_slot<C: Coefficient>(k: usize, n: usize) -> TensorMultivector<C> {
    let parts: Vec<Multivector<C>> =
        (0..n).map(|j| if j == k { iota() } else { Multivector::one(ST) }).collect();
    TensorMultivector::tensor(&parts).expect("n >= 1")
}

/// Δ⁽ⁿ⁾ for generator tuples `I`, `J` of equal length, clauses in the stated
/// order: all slots equal gives 0; otherwise 0 when `n` is even with an odd
/// number of agreeing slots or `n` is odd with an even number; 1 otherwise.
pub fn delta_sign(i: &[usize], j: &[usize]) -> u8 {
    assert_eq!(i.len(), j.len(), "tuples must have equal length");
    let n = i.len();
    let agree = i.iter().zip(j).filter(|(a, b)| a == b).count();
    if agree == n {
        return 0;
    }
    let rule_zero = n.is_multiple_of(2) != agree.is_multiple_of(2);
    if rule_zero {
        0
    } else {
        1
    }
}

/// One `(I, J)` pair whose signed symmetrisation is not a scalar.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DeltaViolation {
    pub i: Vec<usize>,
    pub j: Vec<usize>,
    pub delta: u8,
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DeltaReport {
    pub n: usize,
    pub pairs: usize,
    pub violations: Vec<DeltaViolation>,
}

fn generator_tuples(n: usize, dim: usize) -> Vec<Vec<usize>> {
    (0..dim.pow(n as u32))
        .map(|mut x| {
            let mut t = vec![0; n];
            for slot in t.iter_mut().rev() {
                *slot = x % dim;
                x /= dim;
            }
            t
        })
        .collect()
}

/// For every pair of generator tuples checks that
/// `ρ(e_I)ρ(e_J) + (-1)^Δ ρ(e_J)ρ(e_I)` is a multiple of `1^⊗n`.
pub fn delta_consistency_check(n: usize) -> DeltaReport {
    let tuples = generator_tuples(n, ST.dim());
    let element = |t: &[usize]| {
        let parts: Vec<Multivector> = t.iter().map(|&g| Multivector::generator(ST, g).expect("spacetime")).collect();
        TensorMultivector::tensor(&parts).expect("n >= 1")
    };
    let elements: Vec<TensorMultivector> = tuples.iter().map(|t| element(t)).collect();
    let rows: Vec<Vec<DeltaViolation>> = std::thread::scope(|s| {
        let handles: Vec<_> = tuples
            .iter()
            .zip(&elements)
            .map(|(ti, ei)| {
                let (tuples, elements) = (&tuples, &elements);
                s.spawn(move || {
                    let mut found = Vec::new();
                    for (tj, ej) in tuples.iter().zip(elements) {
                        let delta = delta_sign(ti, tj);
                        let swapped = ej * ei;
                        let sum = if delta == 0 { ei * ej + swapped } else { ei * ej - swapped };
                        if !sum.is_scalar() {
                            found.push(DeltaViolation { i: ti.clone(), j: tj.clone(), delta, residual: sum.to_string() });
                        }
                    }
                    found
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("delta worker")).collect()
    });
    DeltaReport { n, pairs: tuples.len() * tuples.len(), violations: rows.into_iter().flatten().collect() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(x: &[usize]) -> Multivector {
        Multivector::word(ST, x).unwrap()
    }

    fn t(parts: &[Multivector]) -> TensorMultivector {
        TensorMultivector::tensor(parts).unwrap()
    }

    fn one() -> Multivector {
        Multivector::one(ST)
    }

    fn b1() -> Multivector {
        (one() + w(&[1, 0, 2, 0])).scale(&Scalar::frac_1_sqrt2())
    }

    #[test]
    fn slotwise_products() {
        assert_eq!(t(&[one(), one()]), TensorMultivector::identity(ST, 2));
        assert_eq!(t(&[w(&[1, 0]), one()]) * t(&[one(), w(&[1, 0])]), t(&[w(&[1, 0]), w(&[1, 0])]));
        assert_eq!(t(&[w(&[3, 0]), one()]) * t(&[one(), w(&[3, 0])]), t(&[w(&[3, 0]), w(&[3, 0])]));
        assert_eq!(t(&[b1(), b1()]) * t(&[b1().reverse(), b1().reverse()]), TensorMultivector::identity(ST, 2));
        assert_eq!(TensorMultivector::<Scalar>::tensor(&[]), Err(Error::EmptyTensor));
        let two = TensorMultivector::<Scalar>::identity(ST, 2);
        let three = TensorMultivector::<Scalar>::identity(ST, 3);
        assert_eq!(two.tmul(&three), Err(Error::SlotMismatch(2, 3)));
    }

    #[test]
    fn unitarity() {
        let p = idempotent_p::<Scalar>();
        assert!(t(&[b1(), b1()]).is_unitary().unwrap());
        assert!(!t(&[p.clone(), p]).is_unitary().unwrap());
        assert!(TensorMultivector::<Scalar>::identity(ST, 3).is_unitary().unwrap());
        let x = t(&[b1(), w(&[2, 0, 3, 0])]);
        assert_eq!(x.reverse().reverse(), x);
        assert_eq!(t(&[b1()]).reverse().to_multivector().unwrap(), b1().reverse());
    }

    #[test]
    fn bipartite_dictionary() {
        let p2 = idempotent_power::<Scalar>(2);
        let ket00 = t(&[w(&[3, 0]), w(&[3, 0])]) * &p2;
        let mut amps = vec![Cx::zero(); 4];
        amps[0] = Cx::one();
        assert_eq!(encode_state(&StateVector::new(amps).unwrap()), ket00);
    }

    #[test]
    fn bell_decoding_and_entanglement() {
        let h = Scalar::frac_1_sqrt2();
        let phi = decode_state(&bell_state::<Scalar>(BellLabel::PhiPlus)).unwrap();
        assert_eq!(phi.amps, vec![Cx::real(h.clone()), Cx::zero(), Cx::zero(), Cx::real(h)]);
        for (label, state) in bell_states::<Scalar>() {
            assert!(!is_factorable(&state).unwrap(), "{label}");
            let ip = tensor_inner_product(&state, &state).unwrap();
            assert_eq!(ip.normalized, Scalar::from_integer(1), "{label}");
            for (other_label, other) in bell_states::<Scalar>() {
                if other_label != label {
                    assert!(tensor_inner_product(&state, &other).unwrap().raw.is_zero());
                }
            }
        }
        let ket00 = t(&[w(&[3, 0]), w(&[3, 0])]) * idempotent_power(2);
        assert!(is_factorable(&ket00).unwrap());
    }

    #[test]
    fn iota_is_shared_between_slots() {
        let p2 = idempotent_power::<Scalar>(2);
        let i = iota::<Scalar>();
        let a = t(&[&i * &w(&[3, 0]), w(&[1, 0])]) * &p2;
        let b = t(&[w(&[3, 0]), &i * &w(&[1, 0])]) * &p2;
        assert_ne!(a, b);
        assert!(same_state(&a, &b).unwrap());
        assert_eq!(canonical_state(&a).unwrap(), canonical_state(&b).unwrap());
    }

    #[test]
    fn decode_rejects_non_ideal() {
        assert_eq!(decode_state(&TensorMultivector::<Scalar>::identity(ST, 2)), Err(Error::NotInIdeal));
        assert_eq!(decode_state(&t(&[w(&[1]) * idempotent_p()])), Err(Error::NotInIdeal));
    }

    #[test]
    fn delta_rule_values() {
        assert_eq!(delta_sign(&[1, 2], &[1, 3]), 0);
        assert_eq!(delta_sign(&[1], &[2]), 0);
        assert_eq!(delta_sign(&[2, 3], &[2, 3]), 0);
        assert_eq!(delta_sign(&[1, 2], &[0, 3]), 1);
        assert_eq!(delta_sign(&[1, 1, 1], &[1, 1, 2]), 0);
        assert_eq!(delta_sign(&[1, 1, 1], &[1, 2, 3]), 1);
    }

    #[test]
    fn delta_reports_are_clean() {
        for n in 1..=2 {
            let r = delta_consistency_check(n);
            assert_eq!(r.pairs, 16usize.pow(n as u32));
            assert!(r.violations.is_empty(), "{:?}", r.violations.first());
        }
    }

    #[test]
    fn state_json_round_trip() {
        let s = StateVector::new(vec![Cx::new(Scalar::ratio(1, 2), Scalar::from_integer(0)), Cx::new(Scalar::from_integer(0), Scalar::frac_1_sqrt2())]).unwrap();
        let v = s.to_json();
        assert_eq!(v["n"], 1);
        assert_eq!(v["amps"][1][1], "1/2√2");
        assert_eq!(StateVector::from_json(&v).unwrap(), s);
        assert!(StateVector::<Scalar>::new(vec![Cx::one(); 3]).is_err());
    }

    fn rational() -> impl Strategy<Value = Scalar> {
        (-9i64..10, 1i64..6).prop_map(|(n, d)| Scalar::ratio(n, d))
    }

    fn state(n: usize) -> impl Strategy<Value = StateVector> {
        proptest::collection::vec(rational(), 2 << n).prop_map(|v| StateVector::from_reals(&v).unwrap())
    }

    fn even_mv() -> impl Strategy<Value = Multivector> {
        proptest::collection::vec(-3i64..4, 8).prop_map(|cs| {
            let blades = (0u8..16).map(Blade::from_mask).filter(Blade::is_even);
            Multivector::from_terms(ST, blades.zip(cs).map(|(b, c)| (b, Scalar::from_integer(c))))
        })
    }

    fn tensor2() -> impl Strategy<Value = TensorMultivector> {
        (even_mv(), even_mv(), even_mv(), even_mv()).prop_map(|(a, b, c, d)| t(&[a, b]) + t(&[c, d]))
    }

    proptest! {
        #[test]
        fn encode_decode_bijective(s in (1usize..=3).prop_flat_map(state)) {
            prop_assert_eq!(decode_state(&encode_state(&s)).unwrap(), s);
        }

        #[test]
        fn tmul_laws(a in tensor2(), b in tensor2(), c in tensor2()) {
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * TensorMultivector::identity(ST, 2), a.clone());
            prop_assert_eq!((&a * &b).reverse(), b.reverse() * a.reverse());
            prop_assert_eq!((&a * &b).adjoint(), b.adjoint() * a.adjoint());
        }
    }
}
