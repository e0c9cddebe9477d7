//! Braid generators `B₁ = exp(π/4 γ₁γ₀γ₂γ₀)`, `B₂ = exp(π/4 γ₂γ₀γ₃γ₀)`,
//! their action on qubits and Bell states, and algebraic teleportation.

use std::collections::{HashSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{braid_relation_check, exp_quarter_turns, Multivector, Signature, SpinClass};
use crate::error::{Error, Result};
use crate::ideal::{idempotent_p, iota, AlgebraicSpinor, QubitAmplitudes};
use crate::scalar::{Coefficient, Scalar};
use crate::tensor::{bell_state, decode_state, idempotent_power, same_state, BellLabel, TensorMultivector};

const ST: Signature = Signature::SPACETIME;

fn word<C: Coefficient>(w: &[usize]) -> Multivector<C> {
    Multivector::word(ST, w).expect("spacetime generator")
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum BraidGenerator {
    B1,
    B2,
}

impl BraidGenerator {
    /// The unit bivector in the exponent.
    pub fn bivector<C: Coefficient>(&self) -> Multivector<C> {
        match self {
            BraidGenerator::B1 => word(&[1, 0, 2, 0]),
            BraidGenerator::B2 => word(&[2, 0, 3, 0]),
        }
    }

    pub fn value<C: Coefficient>(&self) -> Multivector<C> {
        exp_quarter_turns(1, &self.bivector::<C>()).expect("bivector squares to -1")
    }

    /// `Bᵢ^⊗n`.
    pub fn tensor_power<C: Coefficient>(&self, n: usize) -> Result<TensorMultivector<C>> {
        TensorMultivector::tensor_power(&self.value(), n)
    }
}

pub fn b1() -> Multivector {
    BraidGenerator::B1.value()
}

pub fn b2() -> Multivector {
    BraidGenerator::B2.value()
}

/// `B·Ψ`.
pub fn braid_action<C: Coefficient>(g: BraidGenerator, s: &AlgebraicSpinor<C>) -> AlgebraicSpinor<C> {
    s.apply(&g.value()).expect("braid generators are even")
}

/// Closes `{B₁, B₂}` under multiplication. Returns the elements in discovery order.
pub fn generated_group() -> Vec<Multivector> {
    let gens = [b1(), b2()];
    let mut seen: HashSet<Multivector> = HashSet::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::from([Multivector::one(ST)]);
    while let Some(x) = queue.pop_front() {
        if !seen.insert(x.clone()) {
            continue;
        }
        for g in &gens {
            let y = &x * g;
            if !seen.contains(&y) {
                queue.push_back(y);
            }
        }
        order.push(x);
    }
    order
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GroupReport {
    pub order: usize,
    pub all_spin_plus: bool,
}

pub fn group_report() -> GroupReport {
    let group = generated_group();
    GroupReport {
        order: group.len(),
        all_spin_plus: group.iter().all(|g| g.spin_class() == SpinClass::SpinPlus),
    }
}

/// `B₁B₂B₁ = B₂B₁B₂` in the single algebra and for tensor powers `1..=max_n`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ArtinReport {
    pub single: bool,
    pub common_value: Option<String>,
    pub tensor_powers: Vec<(usize, bool)>,
}

pub fn artin_report(max_n: usize) -> Result<ArtinReport> {
    let r = braid_relation_check(&b1(), &b2())?;
    let tensor_powers = (1..=max_n)
        .map(|n| {
            let x = BraidGenerator::B1.tensor_power::<Scalar>(n)?;
            let y = BraidGenerator::B2.tensor_power::<Scalar>(n)?;
            Ok((n, braid_relation_check(&x, &y)?.holds))
        })
        .collect::<Result<_>>()?;
    Ok(ArtinReport { single: r.holds, common_value: r.witness().map(|w| w.to_string()), tensor_powers })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BellActionRow {
    pub operator: String,
    pub state: BellLabel,
    /// The image decodes to the same two-qubit state.
    pub invariant: bool,
    /// The image equals the state as a raw tensor element.
    pub raw_equal: bool,
    /// `B^⊗2 Ψ - Ψ` in canonical state form; `0` iff invariant.
    pub difference: String,
}

/// Action of `B₁^⊗2` and `B₂^⊗2` on `Ψ±`.
pub fn bell_invariance_check() -> Result<Vec<BellActionRow>> {
    let mut rows = Vec::new();
    for g in [BraidGenerator::B1, BraidGenerator::B2] {
        let op = g.tensor_power::<Scalar>(2)?;
        for label in [BellLabel::PsiPlus, BellLabel::PsiMinus] {
            let psi = bell_state::<Scalar>(label);
            let image = op.tmul(&psi)?;
            let diff = crate::tensor::canonical_state(&image.try_sub(&psi)?)?;
            rows.push(BellActionRow {
                operator: format!("{g:?}^2"),
                state: label,
                invariant: same_state(&image, &psi)?,
                raw_equal: image == psi,
                difference: if diff.is_zero() { "0".into() } else { diff.to_string() },
            });
        }
    }
    Ok(rows)
}

/// `Ψ⁺ → 1`, `Ψ⁻ → γ₃γ₀`, `Φ⁺ → γ₁γ₀`, `Φ⁻ → γ₁γ₀γ₃γ₀`: the operator that
/// multiplies Bob's qubit in the branch where the CA pair is found in that Bell state.
pub fn correction<C: Coefficient>(label: BellLabel) -> Multivector<C> {
    match label {
        BellLabel::PsiPlus => Multivector::one(ST),
        BellLabel::PsiMinus => word(&[3, 0]),
        BellLabel::PhiPlus => word(&[1, 0]),
        BellLabel::PhiMinus => word(&[1, 0, 3, 0]),
    }
}

pub fn correction_table() -> Vec<(BellLabel, Multivector)> {
    [BellLabel::PsiPlus, BellLabel::PsiMinus, BellLabel::PhiPlus, BellLabel::PhiMinus]
        .into_iter()
        .map(|l| (l, correction(l)))
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct TeleportBranch {
    pub bell: BellLabel,
    pub correction: Multivector,
    /// `(correction · ψ_B) P` held by Bob in this branch.
    pub payload: AlgebraicSpinor,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TeleportDecomposition {
    pub input: QubitAmplitudes,
    /// `ψ_C ⊗ Ψ⁺_AB`.
    pub lhs: TensorMultivector,
    /// `½ Σ Bell_CA ⊗ (correction · ψ_B) P^⊗3`.
    pub rhs: TensorMultivector,
    pub branches: Vec<TeleportBranch>,
}

impl TeleportDecomposition {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Re-expresses `ψ_C ⊗ Ψ⁺_AB` for `ψ_C = (aγ₃γ₀ + bγ₁γ₀)P` in the Bell basis of CA.
pub fn teleport_decompose(a: &Scalar, b: &Scalar) -> Result<TeleportDecomposition> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroState);
    }
    let p = idempotent_p::<Scalar>();
    let psi_raw = word::<Scalar>(&[3, 0]).scale(a) + word::<Scalar>(&[1, 0]).scale(b);
    let psi_c = &psi_raw * &p;
    let bell_ab = bell_state::<Scalar>(BellLabel::PsiPlus);
    let mut lhs_parts = TensorMultivector::zero(ST, 3);
    for (key, c) in bell_ab.terms() {
        let ab: Vec<Multivector> = key.iter().map(|bl| Multivector::basis(ST, *bl)).collect();
        let t = TensorMultivector::tensor(&[psi_c.clone(), ab[0].clone(), ab[1].clone()])?;
        lhs_parts = lhs_parts + t.scale(c);
    }
    let lhs = lhs_parts;

    let mut sum = TensorMultivector::zero(ST, 3);
    let mut branches = Vec::new();
    for label in BellLabel::ALL {
        let corr = correction::<Scalar>(label);
        let bob = &corr * &psi_raw;
        let bell = bell_state::<Scalar>(label);
        for (key, c) in bell.terms() {
            let ca: Vec<Multivector> = key.iter().map(|bl| Multivector::basis(ST, *bl)).collect();
            let t = TensorMultivector::tensor(&[ca[0].clone(), ca[1].clone(), bob.clone()])?;
            sum = sum + t.scale(c);
        }
        branches.push(TeleportBranch { bell: label, correction: corr, payload: AlgebraicSpinor::new(&bob * &p)? });
    }
    let rhs = sum.scale(&Scalar::ratio(1, 2)) * idempotent_power::<Scalar>(3);
    let input = QubitAmplitudes::new([a.clone(), Scalar::from_integer(0), b.clone(), Scalar::from_integer(0)]);
    Ok(TeleportDecomposition { input, lhs, rhs, branches })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TeleportSuite {
    pub samples: usize,
    pub passed: usize,
    pub failures: Vec<String>,
}

/// A random nonzero pair of small rationals.
pub fn random_pair(rng: &mut ChaCha8Rng) -> (Scalar, Scalar) {
    loop {
        let mut r = || Scalar::ratio(rng.random_range(-50..=50), rng.random_range(1..=30));
        let (a, b) = (r(), r());
        if !(a.is_zero() && b.is_zero()) {
            return (a, b);
        }
    }
}

/// Verifies the decomposition on `samples` random rational pairs from `seed`.
pub fn teleport_suite(samples: usize, seed: u64) -> TeleportSuite {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(Scalar, Scalar)> = (0..samples).map(|_| random_pair(&mut rng)).collect();
    let verdicts: Vec<Option<String>> = std::thread::scope(|s| {
        let handles: Vec<_> = pairs
            .chunks(samples.div_ceil(8).max(1))
            .map(|chunk| {
                s.spawn(move || {
                    chunk
                        .iter()
                        .map(|(a, b)| match teleport_decompose(a, b) {
                            Ok(d) if d.holds() && payload_matches(&d) => None,
                            Ok(_) => Some(format!("a = {a}, b = {b}: decomposition differs")),
                            Err(e) => Some(format!("a = {a}, b = {b}: {e}")),
                        })
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("teleport worker")).collect()
    });
    let failures: Vec<String> = verdicts.into_iter().flatten().collect();
    TeleportSuite { samples, passed: samples - failures.len(), failures }
}

fn payload_matches(d: &TeleportDecomposition) -> bool {
    d.branches.iter().find(|b| b.bell == BellLabel::PsiPlus).is_some_and(|b| b.payload.decode() == d.input)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EquivalenceRow {
    pub state: String,
    pub same_state: bool,
    pub raw_equal: bool,
}

/// `ιγ₃γ₀ ⊗ γ₁γ₀` versus `γ₃γ₀ ⊗ ιγ₁γ₀` (and the `|10⟩` analogue), times `P^⊗2`.
pub fn i_state_equivalence_check() -> Result<Vec<EquivalenceRow>> {
    let i = iota::<Scalar>();
    let (z, o) = (word::<Scalar>(&[3, 0]), word::<Scalar>(&[1, 0]));
    let p2 = idempotent_power::<Scalar>(2);
    let form = |x: Multivector, y: Multivector| TensorMultivector::tensor(&[x, y])?.tmul(&p2);
    let cases = [
        ("i|01>", form(&i * &z, o.clone())?, form(z.clone(), &i * &o)?),
        ("i|10>", form(&i * &o, z.clone())?, form(o.clone(), &i * &z)?),
    ];
    cases
        .into_iter()
        .map(|(name, x, y)| {
            decode_state(&x)?;
            Ok(EquivalenceRow { state: name.into(), same_state: same_state(&x, &y)?, raw_equal: x == y })
        })
        .collect()
}
