//! Exact Cl(1,3) algebraic-spinor kernel.
//!
//! Qubits are elements of the minimal left ideal `Cl⁺(1,3)·P`, gates are even
//! multivectors acting by left multiplication, and n-qubit systems live in the
//! slotwise tensor product `[Cl⁺(1,3)]^⊗n`. Coefficients are exact elements
//! of ℚ[√2] by default, with an `f64` mode for the same types.
//!
//! ```
//! use spinorqc_core::{braid, ideal::{AlgebraicSpinor, QubitAmplitudes}};
//!
//! let ket0 = AlgebraicSpinor::encode(&QubitAmplitudes::from_ratios([(1, 1), (0, 1), (0, 1), (0, 1)]));
//! let out = ket0.apply(&braid::b2()).unwrap().decode();
//! assert_eq!(out.alpha[0].to_string(), "1/2√2");
//! assert_eq!(out.alpha[3].to_string(), "1/2√2");
//! ```

pub mod algebra;
pub mod braid;
pub mod checks;
pub mod complex;
pub mod error;
pub mod ideal;
pub mod lang;
pub mod linalg;
pub mod majorana;
pub mod matrix;
pub mod scalar;
pub mod tensor;
pub mod text;

pub use algebra::{AlgebraElement, Blade, Multivector, Signature, SpinClass};
pub use complex::Cx;
pub use error::{Error, Result};
pub use ideal::{AlgebraicSpinor, QubitAmplitudes};
pub use matrix::ComplexMatrix;
pub use scalar::{Coefficient, Rational, Scalar};
pub use tensor::{StateVector, TensorMultivector};
