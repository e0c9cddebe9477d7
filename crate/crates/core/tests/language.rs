mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{random_value, w};
use spinorqc_core::lang::{eval_str, parse, Session, Value};
use spinorqc_core::{Error, Scalar};

fn show(text: &str) -> String {
    eval_str::<Scalar>(text).unwrap().to_string()
}

#[test]
fn documented_evaluations() {
    assert_eq!(show("N(exp(1, g1*g0*g2*g0))"), "1");
    assert_eq!(show("P*P - P"), "0");
    assert_eq!(show("grade(I, 4)"), "I");
    assert_eq!(show("g3*g0*P"), "1/2 + 1/2*g3*g0");
    assert_eq!(show("B1"), show("exp(1, g1*g0*g2*g0)"));
    assert_eq!(show("rt2*rt2"), "2");
    assert_eq!(show("(1 + √2)*g1"), "(1 + √2)*g1");
}

#[test]
fn bell_and_majorana_names() {
    assert_eq!(show("ip(Phi+, Phi+)"), "1");
    assert_eq!(show("ip(Phi+, Psi-)"), "0");
    assert_eq!(show("G1*G1"), "(1 ox 1)");
    assert_eq!(show("G1*G2 + G2*G1"), "0*(1 ox 1)");
    assert_eq!(show("H(1, 2, 3)^2 + 14"), "0*(1 ox 1)");
    assert_eq!(show("Ge*Ge"), "(1 ox 1)");
    assert_eq!(show("PM*Ge + Ge*PM"), "0*(1 ox 1)");
}

#[test]
fn tensor_forms_agree() {
    assert_eq!(show("tensor(g3*g0, g1*g0)*(P ox P)"), show("(g3*g0 ox g1*g0)*tensor(P, P)"));
    assert_eq!(show("tensor(g1*g0, 1)*tensor(1, g1*g0)"), show("g1*g0 ox g1*g0"));
    assert_eq!(show("dual(g3*g0*P)"), show("adj(g3*g0*P)"));
    assert_eq!(show("rev(g1*g0)"), "-g1*g0");
    assert_eq!(show("inv(g1 + g1*g2)"), "-g1 + g1*g2");
}

#[test]
fn evaluation_errors() {
    assert!(matches!(eval_str::<Scalar>("tensor(g3*g0, g1*g0)*P ox P"), Err(Error::Parse(_))));
    assert_eq!(eval_str::<Scalar>("exp(1, g3*g0)"), Err(Error::NotUnitBivector));
    assert_eq!(eval_str::<Scalar>("x + 1"), Err(Error::Unbound("x".into())));
    assert!(eval_str::<Scalar>("grade(Phi+, 1)").is_err());
}

#[test]
fn float_mode() {
    let v = eval_str::<f64>("N(B1)").unwrap();
    let Value::Scalar(x) = v else { panic!("{v:?}") };
    assert!((x - 1.0).abs() < 1e-12);
    assert_eq!(eval_str::<f64>("P*P - P").unwrap().to_string(), "0");
}

#[test]
fn repl_bindings() {
    let mut session = Session::<Scalar>::new();
    session.run("let psi = g3*g0*P").unwrap();
    session.run("let op = B2").unwrap();
    assert_eq!(session.run("op*psi").unwrap(), eval_str("B2*g3*g0*P").unwrap());
    assert!(session.run("let P = 1").is_err());
    assert!(session.run("let = 1").is_err());
    assert_eq!(session.get("psi"), Some(&Value::Mv(w(&[3, 0]) * spinorqc_core::ideal::idempotent_p())));
}

#[test]
fn round_trip_on_random_values() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let v = random_value(&mut rng);
        let printed = v.to_string();
        let back = eval_str::<Scalar>(&printed).unwrap_or_else(|e| panic!("{printed}: {e}"));
        assert_eq!(back.to_string(), printed);
        assert_eq!(back.normalized(), v.normalized());
    }
}

proptest! {
    #[test]
    fn parser_never_panics_on_bytes(bytes in proptest::collection::vec(any::<u8>(), 0..64)) {
        let text = String::from_utf8_lossy(&bytes);
        let _ = parse(&text);
    }

    #[test]
    fn parser_never_panics_on_token_soup(
        parts in proptest::collection::vec(
            prop::sample::select(vec!["g0", "g1", "*", "+", "-", "(", ")", "ox", "^", "2", "1/3", "rt2", "√2", ",", "tensor(", "exp(", "grade(", "P", "Phi+", "H(", " "]),
            0..40,
        )
    ) {
        let text: String = parts.concat();
        if let Ok(e) = parse(&text) {
            let _ = spinorqc_core::lang::eval::<Scalar>(&e);
        }
    }
}

