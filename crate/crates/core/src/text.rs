//! Canonical text form shared by the CLI, the REPL and golden files.
//!
//! Terms are emitted in `(grade, mask)` order. Spacetime bivectors containing
//! γ₀ are written `gi*g0` and the pseudoscalar as `I`; the printed sign is
//! adjusted so the text parses back to the same value.

use std::fmt;

use crate::algebra::{Blade, Multivector, Signature};
use crate::scalar::{CoeffText, Coefficient};

/// Display word for a blade and whether it equals the negated canonical blade.
pub fn blade_word(blade: Blade, sig: &Signature) -> (bool, String) {
    let gens: Vec<usize> = blade.generators().collect();
    if gens.is_empty() {
        return (false, String::new());
    }
    if sig.is_spacetime() {
        if blade == sig.pseudoscalar() {
            return (false, "I".to_string());
        }
        if gens.len() == 2 && gens[0] == 0 {
            return (true, format!("g{}*g0", gens[1]));
        }
    }
    let word: Vec<String> = gens.iter().map(|g| format!("g{g}")).collect();
    (false, word.join("*"))
}

struct Term {
    negative: bool,
    body: String,
}

fn term<C: Coefficient>(c: &C, negate: bool, word: &str) -> Term {
    let c = if negate { -c.clone() } else { c.clone() };
    match c.render() {
        CoeffText::Simple { negative, magnitude } => {
            let body = match (word.is_empty(), magnitude == "1") {
                (true, _) => magnitude,
                (false, true) => word.to_string(),
                (false, false) => format!("{magnitude}*{word}"),
            };
            Term { negative, body }
        }
        CoeffText::Composite(s) if word.is_empty() => Term { negative: false, body: s },
        CoeffText::Composite(s) => Term { negative: false, body: format!("({s})*{word}") },
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: impl Iterator<Item = Term>) -> fmt::Result {
    let mut first = true;
    for t in terms {
        match (first, t.negative) {
            (true, true) => write!(f, "-{}", t.body)?,
            (true, false) => f.write_str(&t.body)?,
            (false, true) => write!(f, " - {}", t.body)?,
            (false, false) => write!(f, " + {}", t.body)?,
        }
        first = false;
    }
    Ok(())
}

impl<C: Coefficient> fmt::Display for Multivector<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        let sig = self.sig();
        write_terms(
            f,
            self.terms().map(|(b, c)| {
                let (neg, word) = blade_word(*b, &sig);
                term(c, neg, &word)
            }),
        )
    }
}

/// Renders a slot tuple as `(w1 ox w2 ox ...)`, with `1` for scalar slots.
pub(crate) fn tensor_word(blades: &[Blade], sig: &Signature) -> (bool, String) {
    let mut negate = false;
    let words: Vec<String> = blades
        .iter()
        .map(|b| {
            let (neg, w) = blade_word(*b, sig);
            negate ^= neg;
            if w.is_empty() {
                "1".to_string()
            } else {
                w
            }
        })
        .collect();
    (negate, format!("({})", words.join(" ox ")))
}

pub(crate) fn fmt_tensor_terms<'a, C: Coefficient>(
    f: &mut fmt::Formatter<'_>,
    sig: &Signature,
    slots: usize,
    terms: impl Iterator<Item = (&'a [Blade], &'a C)>,
) -> fmt::Result {
    let mut terms = terms.peekable();
    if terms.peek().is_none() {
        let ones = vec![Blade::SCALAR; slots];
        return write!(f, "0*{}", tensor_word(&ones, sig).1);
    }
    write_terms(
        f,
        terms.map(|(blades, c)| {
            let (neg, word) = tensor_word(blades, sig);
            term(c, neg, &word)
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn st(word: &[usize]) -> Multivector {
        Multivector::word(Signature::SPACETIME, word).unwrap()
    }

    #[test]
    fn idempotent_text() {
        let one = Multivector::<Scalar>::one(Signature::SPACETIME);
        let p = (one + st(&[3, 0])).scale(&Scalar::ratio(1, 2));
        assert_eq!(p.to_string(), "1/2 + 1/2*g3*g0");
    }

    #[test]
    fn signs_and_special_blades() {
        assert_eq!(st(&[0, 3]).to_string(), "-g3*g0");
        assert_eq!(st(&[0, 1, 2, 3]).to_string(), "I");
        assert_eq!(st(&[1, 0, 2, 0]).to_string(), "-g1*g2");
        assert_eq!((-st(&[2])).to_string(), "-g2");
        assert_eq!(Multivector::<Scalar>::zero(Signature::SPACETIME).to_string(), "0");
        let b1 = (Multivector::one(Signature::SPACETIME) + st(&[1, 0, 2, 0]))
            .scale(&Scalar::frac_1_sqrt2());
        assert_eq!(b1.to_string(), "1/2√2 - 1/2√2*g1*g2");
    }

    #[test]
    fn composite_coefficients_are_parenthesised() {
        let c: Scalar = Scalar::from_integer(1) + Scalar::sqrt2();
        let x = st(&[1]).scale(&c);
        assert_eq!(x.to_string(), "(1 + √2)*g1");
        let y = Multivector::scalar(Signature::SPACETIME, c) + st(&[1]);
        assert_eq!(y.to_string(), "1 + √2 + g1");
    }
}
