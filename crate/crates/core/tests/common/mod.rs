#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use spinorqc_core::lang::Value;
use spinorqc_core::{Blade, Multivector, Scalar, Signature, TensorMultivector};

pub const ST: Signature = Signature::SPACETIME;

pub fn w(x: &[usize]) -> Multivector {
    Multivector::word(ST, x).unwrap()
}

pub fn t(parts: &[Multivector]) -> TensorMultivector {
    TensorMultivector::tensor(parts).unwrap()
}

pub fn s(n: i64) -> Scalar {
    Scalar::from_integer(n)
}

/// Rational, pure surd or mixed `a + b√2`.
pub fn random_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    fn q(rng: &mut ChaCha8Rng) -> Scalar {
        Scalar::ratio(rng.random_range(-40..=40), rng.random_range(1..=12))
    }
    match rng.random_range(0..4) {
        0 => q(rng) * Scalar::sqrt2(),
        1 => q(rng) + q(rng) * Scalar::sqrt2(),
        _ => q(rng),
    }
}

pub fn random_multivector(rng: &mut ChaCha8Rng) -> Multivector {
    let n = rng.random_range(0..6);
    let terms: Vec<(Blade, Scalar)> = (0..n).map(|_| (Blade::from_mask(rng.random_range(0..16)), random_scalar(rng))).collect();
    Multivector::from_terms(ST, terms)
}

pub fn random_tensor(rng: &mut ChaCha8Rng, slots: usize) -> TensorMultivector {
    let n = rng.random_range(0..5);
    let terms: Vec<(Vec<Blade>, Scalar)> = (0..n)
        .map(|_| ((0..slots).map(|_| Blade::from_mask(rng.random_range(0..16))).collect(), random_scalar(rng)))
        .collect();
    TensorMultivector::from_terms(ST, slots, terms)
}

pub fn random_value(rng: &mut ChaCha8Rng) -> Value {
    match rng.random_range(0..3) {
        0 => Value::Scalar(random_scalar(rng)),
        1 => Value::Mv(random_multivector(rng)),
        _ => {
            let slots = rng.random_range(2..=3);
            Value::Tensor(random_tensor(rng, slots))
        }
    }
}
