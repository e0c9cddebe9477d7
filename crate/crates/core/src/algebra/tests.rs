use proptest::prelude::*;

use super::*;
use crate::scalar::Scalar;

const ST: Signature = Signature::SPACETIME;

fn w(x: &[usize]) -> Multivector {
    Multivector::word(ST, x).unwrap()
}

fn one() -> Multivector {
    Multivector::one(ST)
}

fn s(n: i64) -> Scalar {
    Scalar::from_integer(n)
}

fn b1() -> Multivector {
    (one() + w(&[1, 0, 2, 0])).scale(&Scalar::frac_1_sqrt2())
}

fn b2() -> Multivector {
    (one() + w(&[2, 0, 3, 0])).scale(&Scalar::frac_1_sqrt2())
}

#[test]
fn clifford_relation_exhaustive() {
    for mu in 0..4 {
        for nu in 0..4 {
            let sum = w(&[mu]).anticommutator(&w(&[nu])).unwrap();
            let g = if mu != nu { 0 } else { ST.square(mu) as i64 };
            assert_eq!(sum, Multivector::scalar(ST, s(2 * g)), "g{mu} g{nu}");
        }
    }
}

#[test]
fn product_examples() {
    assert_eq!(w(&[0, 0]), one());
    assert_eq!(w(&[1, 1]), -one());
    assert_eq!(w(&[1, 0]) * w(&[2, 0]), -w(&[1, 2]));
    assert_eq!(w(&[3, 0, 3, 0]), one());
    let cl3 = Multivector::<Scalar>::word(Signature::EUCLIDEAN3, &[0, 1, 2]).unwrap();
    assert_eq!(cl3.pow(2), -Multivector::one(Signature::EUCLIDEAN3));
    let mixed = Multivector::<Scalar>::one(Signature::EUCLIDEAN3);
    assert!(matches!(one().gp(&mixed), Err(Error::SignatureMismatch(..))));
    assert!(Multivector::<Scalar>::generator(ST, 4).is_err());
}

#[test]
fn grade_structure() {
    let p = (one() + w(&[3, 0])).scale(&Scalar::ratio(1, 2));
    assert_eq!((one() + w(&[3, 0])).grade_project(0), one());
    assert_eq!(w(&[1, 0, 2, 0]).grade_project(2), -w(&[1, 2]));
    assert_eq!(p.grade_project(0).scalar_part(), Scalar::ratio(1, 2));
    assert_eq!(w(&[0, 1, 2, 3]).grade_project(4), w(&[0, 1, 2, 3]));
    assert!(w(&[1, 2]).is_even() && !w(&[1]).is_even());
}

#[test]
fn involutions() {
    assert_eq!(w(&[1, 0]).reverse(), -w(&[1, 0]));
    assert_eq!(Multivector::scalar(ST, s(3)).reverse(), Multivector::scalar(ST, s(3)));
    assert_eq!(b1().reverse(), (one() - w(&[1, 0, 2, 0])).scale(&Scalar::frac_1_sqrt2()));
    assert_eq!(b1().grade_involution(), b1());
    assert_eq!(w(&[0]).grade_involution(), -w(&[0]));
    let x = one() + w(&[0]) + w(&[1, 2]);
    assert_eq!(x.grade_involution(), one() - w(&[0]) + w(&[1, 2]));
}

#[test]
fn adjoint_fixes_boosts_and_flips_rotations() {
    for k in 1..4 {
        assert_eq!(w(&[k, 0]).adjoint(), w(&[k, 0]));
        assert_eq!(w(&[k, 0]).reverse(), -w(&[k, 0]));
    }
    assert_eq!(w(&[1, 2]).adjoint(), -w(&[1, 2]));
    assert_eq!(w(&[0, 1, 2, 3]).adjoint(), -w(&[0, 1, 2, 3]));
    assert_eq!(w(&[0, 1, 2, 3]).reverse(), w(&[0, 1, 2, 3]));
}

#[test]
fn norms_and_spin_classes() {
    assert_eq!(b1().norm_squared(), s(1));
    assert_eq!(b2().norm_squared(), s(1));
    assert_eq!(Multivector::<Scalar>::zero(ST).norm_squared(), s(0));
    // ⟨γ₀γ₃ γ₃γ₀⟩₀ = γ₀(γ₃γ₃)γ₀ = -1
    assert_eq!(w(&[3, 0]).norm_squared(), s(-1));
    assert_eq!(w(&[3, 0]).spin_class(), SpinClass::Spin);
    assert_eq!(b1().spin_class(), SpinClass::SpinPlus);
    assert_eq!(w(&[0]).spin_class(), SpinClass::Neither);
    assert_eq!(b1().scale(&s(2)).spin_class(), SpinClass::Neither);
    assert_eq!(b1().scale(&s(2)).norm_squared(), s(4));
}

#[test]
fn commutators() {
    assert_eq!(w(&[1]).commutator(&w(&[2])).unwrap(), w(&[1, 2]).scale(&s(2)));
    assert!(w(&[1]).anticommutator(&w(&[2])).unwrap().is_zero());
    assert!(b1().commutator(&b1()).unwrap().is_zero());
}

#[test]
fn quarter_turn_exponentials() {
    let biv = w(&[1, 0, 2, 0]);
    assert_eq!(exp_quarter_turns(1, &biv).unwrap(), b1());
    assert_eq!(exp_quarter_turns(0, &biv).unwrap(), one());
    assert_eq!(exp_quarter_turns(4, &biv).unwrap(), -one());
    assert_eq!(exp_quarter_turns(1, &w(&[2, 0, 3, 0])).unwrap(), b2());
    assert_eq!(exp_quarter_turns(1, &w(&[3, 0])), Err(Error::NotUnitBivector));
    for k in 0..8 {
        let e = exp_quarter_turns(k, &biv).unwrap();
        assert_eq!(&e * &exp_quarter_turns(-k, &biv).unwrap(), one(), "k = {k}");
    }
}

#[test]
fn series_agrees_with_closed_form() {
    let biv = w(&[1, 0, 2, 0]).to_f64();
    for k in -8..=8 {
        let series = exp_series(k as f64 * std::f64::consts::FRAC_PI_4, &biv).unwrap();
        let closed = exp_quarter_turns(k, &w(&[1, 0, 2, 0])).unwrap().to_f64();
        assert!(series.try_sub(&closed).unwrap().max_abs() < 1e-12, "k = {k}");
    }
    // e^{θγ₃γ₀} = cosh θ + sinh θ γ₃γ₀ for a boost
    let boost = exp_series(0.3, &w(&[3, 0]).to_f64()).unwrap();
    assert!((boost.scalar_part() - 0.3f64.cosh()).abs() < 1e-12);
}

#[test]
fn braid_relations() {
    let r = braid_relation_check(&b1(), &b2()).unwrap();
    let common = (w(&[1, 0, 2, 0]) + w(&[2, 0, 3, 0])).scale(&Scalar::frac_1_sqrt2());
    assert!(r.holds);
    assert_eq!(r.witness(), Some(&common));
    assert!(braid_relation_check(&b1(), &b1()).unwrap().holds);
    let r = braid_relation_check(&w(&[0]), &w(&[1])).unwrap();
    assert!(!r.holds && r.witness().is_none());
}

fn rational() -> impl Strategy<Value = Scalar> {
    (-6i64..7, 1i64..4, -2i64..3).prop_map(|(n, d, r)| Scalar::ratio(n, d) + Scalar::ratio(r, d) * Scalar::sqrt2())
}

fn multivector() -> impl Strategy<Value = Multivector> {
    proptest::collection::vec((0u8..16, rational()), 0..6)
        .prop_map(|terms| Multivector::from_terms(ST, terms.into_iter().map(|(m, c)| (Blade::from_mask(m), c))))
}

proptest! {
    #[test]
    fn associativity(a in multivector(), b in multivector(), c in multivector()) {
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
    }

    #[test]
    fn anti_automorphisms(a in multivector(), b in multivector()) {
        prop_assert_eq!((&a * &b).reverse(), b.reverse() * a.reverse());
        prop_assert_eq!((&a * &b).adjoint(), b.adjoint() * a.adjoint());
        prop_assert_eq!((&a * &b).grade_involution(), a.grade_involution() * b.grade_involution());
    }

    #[test]
    fn involutions_square_to_identity(a in multivector()) {
        prop_assert_eq!(a.reverse().reverse(), a.clone());
        prop_assert_eq!(a.grade_involution().grade_involution(), a.clone());
        prop_assert_eq!(a.adjoint().adjoint(), a.clone());
    }

    #[test]
    fn norm_is_scalar_part_of_reverse_product(a in multivector()) {
        prop_assert_eq!(a.norm_squared(), (a.reverse() * &a).scalar_part());
    }

    #[test]
    fn float_mode_tracks_exact(a in multivector(), b in multivector()) {
        let exact = (&a * &b).to_f64();
        let float = a.to_f64() * b.to_f64();
        prop_assert!(exact.try_sub(&float).unwrap().max_abs() < 1e-9);
    }
}
