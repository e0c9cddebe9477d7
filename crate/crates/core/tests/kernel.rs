mod common;

use proptest::prelude::*;

use common::{s, ST};
use spinorqc_core::braid::{generated_group, teleport_decompose};
use spinorqc_core::majorana::{relation_suite, MajoranaModel};
use spinorqc_core::matrix::{operator_norm, rep_tensor};
use spinorqc_core::tensor::{bell_states, tensor_inner_product};
use spinorqc_core::{Scalar, SpinClass, TensorMultivector};

fn rational() -> impl Strategy<Value = Scalar> {
    (-30i64..=30, 1i64..=15).prop_map(|(n, d)| Scalar::ratio(n, d))
}

#[test]
fn braid_group_is_in_spin_plus() {
    let group = generated_group();
    assert_eq!(group.len(), 48);
    assert!(group.iter().all(|g| g.spin_class() == SpinClass::SpinPlus));
}

#[test]
fn bell_basis_is_orthonormal() {
    let states = bell_states::<Scalar>();
    for (la, a) in &states {
        for (lb, b) in &states {
            let ip = tensor_inner_product(a, b).unwrap().normalized;
            assert_eq!(ip, s(i64::from(la == lb)), "{la:?} {lb:?}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn teleportation_identity(a in rational(), b in rational()) {
        prop_assume!(!(a.is_zero() && b.is_zero()));
        let d = teleport_decompose(&a, &b).unwrap();
        prop_assert!(d.holds());
        prop_assert_eq!(d.branches.len(), 4);
    }

    #[test]
    fn hamiltonian_squares_to_minus_weight(a in rational(), b in rational(), c in rational()) {
        let m = MajoranaModel::new(a, b, c);
        prop_assert_eq!(m.hamiltonian_square(), TensorMultivector::identity(ST, 2).scale(&-m.weight()));
        let norm = operator_norm(&rep_tensor(&m.hamiltonian.to_f64()).unwrap()).unwrap();
        prop_assert!((norm * norm - m.weight().to_f64()).abs() < 1e-9 * (1.0 + m.weight().to_f64()));
    }

    #[test]
    fn relation_oracles_agree(a in rational(), b in rational(), c in rational()) {
        let report = relation_suite(&MajoranaModel::new(a, b, c));
        prop_assert!(report.all_agree());
        prop_assert!(report.asserted_hold());
    }
}
