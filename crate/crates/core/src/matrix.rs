//! Matrix representation of `Cl⁺(1,3)^⊗n`: `γₖγ₀ ↦ σₖ` in each slot,
//! Kronecker products across slots, operator norms and spectral functions.

use std::ops::{Add, Mul, Sub};

use nalgebra::{Complex, DMatrix, DVector};

use crate::algebra::{Blade, Multivector};
use crate::complex::Cx;
use crate::error::{Error, Result};
use crate::scalar::{Coefficient, Scalar};
use crate::tensor::{in_ideal, TensorMultivector};

/// Dense square matrix with complex entries, row-major.
#[derive(Clone, PartialEq, Debug)]
pub struct ComplexMatrix<C = Scalar> {
    dim: usize,
    data: Vec<Cx<C>>,
}

impl<C: Coefficient> ComplexMatrix<C> {
    pub fn zeros(dim: usize) -> Self {
        ComplexMatrix { dim, data: vec![Cx::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Cx::one();
        }
        m
    }

    /// Panics unless `rows` is square.
    pub fn from_rows(rows: Vec<Vec<Cx<C>>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        ComplexMatrix { dim, data: rows.into_iter().flatten().collect() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &Cx<C> {
        &self.data[r * self.dim + c]
    }

    pub fn column(&self, c: usize) -> Vec<Cx<C>> {
        (0..self.dim).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn scale(&self, s: &Cx<C>) -> Self {
        ComplexMatrix { dim: self.dim, data: self.data.iter().map(|z| s.clone() * z.clone()).collect() }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let data = (0..n * n).map(|k| self.get(k % n, k / n).conj()).collect();
        ComplexMatrix { dim: n, data }
    }

    pub fn kron(&self, other: &Self) -> Self {
        let (n, m) = (self.dim, other.dim);
        let mut out = Self::zeros(n * m);
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..m {
                    for l in 0..m {
                        out.data[(i * m + k) * n * m + j * m + l] = a.clone() * other.get(k, l).clone();
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Cx<C>]) -> Vec<Cx<C>> {
        (0..self.dim)
            .map(|r| (0..self.dim).fold(Cx::zero(), |acc, c| acc + self.get(r, c).clone() * v[c].clone()))
            .collect()
    }

    pub fn is_negligible(&self) -> bool {
        self.data.iter().all(Cx::is_negligible)
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(Cx::abs_f64).fold(0.0, f64::max)
    }

    pub fn trace(&self) -> Cx<C> {
        (0..self.dim).fold(Cx::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn to_f64(&self) -> ComplexMatrix<f64> {
        ComplexMatrix { dim: self.dim, data: self.data.iter().map(Cx::to_f64).collect() }
    }

    pub fn to_nalgebra(&self) -> DMatrix<Complex<f64>> {
        DMatrix::from_fn(self.dim, self.dim, |r, c| {
            let z = self.get(r, c);
            Complex::new(z.re.to_f64(), z.im.to_f64())
        })
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Cx<C>, Cx<C>) -> Cx<C>) -> Self {
        assert_eq!(self.dim, other.dim, "matrix dimensions must agree");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f(a.clone(), b.clone())).collect();
        ComplexMatrix { dim: self.dim, data }
    }
}

impl ComplexMatrix<f64> {
    pub fn from_nalgebra(m: &DMatrix<Complex<f64>>) -> Self {
        assert!(m.is_square(), "matrix must be square");
        let n = m.nrows();
        let data = (0..n * n).map(|k| {
            let z = m[(k / n, k % n)];
            Cx::new(z.re, z.im)
        });
        ComplexMatrix { dim: n, data: data.collect() }
    }
}

impl<C: Coefficient> Add for &ComplexMatrix<C> {
    type Output = ComplexMatrix<C>;
    fn add(self, rhs: &ComplexMatrix<C>) -> ComplexMatrix<C> {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl<C: Coefficient> Sub for &ComplexMatrix<C> {
    type Output = ComplexMatrix<C>;
    fn sub(self, rhs: &ComplexMatrix<C>) -> ComplexMatrix<C> {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl<C: Coefficient> Mul for &ComplexMatrix<C> {
    type Output = ComplexMatrix<C>;
    fn mul(self, rhs: &ComplexMatrix<C>) -> ComplexMatrix<C> {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions must agree");
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let idx = i * n + j;
                    out.data[idx] = out.data[idx].clone() + a.clone() * rhs.get(k, j).clone();
                }
            }
        }
        out
    }
}

/// Pauli matrix `σₖ`, `k ∈ {1, 2, 3}`; `σ₀` is the identity.
pub fn pauli<C: Coefficient>(k: usize) -> ComplexMatrix<C> {
    let (o, z, i) = (Cx::<C>::one(), Cx::<C>::zero(), Cx::<C>::i());
    let rows = match k {
        0 => vec![vec![o.clone(), z.clone()], vec![z, o]],
        1 => vec![vec![z.clone(), o.clone()], vec![o, z]],
        2 => vec![vec![z.clone(), -i.clone()], vec![i, z]],
        3 => vec![vec![o.clone(), z.clone()], vec![z, -o]],
        _ => panic!("no Pauli matrix σ{k}"),
    };
    ComplexMatrix::from_rows(rows)
}

/// Image of an even spacetime blade.
///
/// Each adjacent pair `γₐγ_b` of the ascending word equals `(γₐγ₀)(γ₀γ_b)`
/// because `γ₀² = 1`; `γₐγ₀ ↦ σₐ` and `γ₀γ_b = -γ_bγ₀ ↦ -σ_b`.
fn rep_blade<C: Coefficient>(b: Blade) -> ComplexMatrix<C> {
    let gens: Vec<usize> = b.generators().collect();
    let mut acc = ComplexMatrix::identity(2);
    for pair in gens.chunks(2) {
        let left = pauli::<C>(pair[0]);
        let right = if pair[1] == 0 { pauli::<C>(0) } else { pauli::<C>(pair[1]).scale(&-Cx::one()) };
        acc = &(&acc * &left) * &right;
    }
    acc
}

/// `ζ⁻¹`: the 2×2 complex matrix of an even element of Cl(1,3).
pub fn rep_even<C: Coefficient>(a: &Multivector<C>) -> Result<ComplexMatrix<C>> {
    if !a.sig().is_spacetime() {
        return Err(Error::SignatureMismatch(a.sig().to_string(), "Cl(1,3)".into()));
    }
    if !a.is_even() {
        return Err(Error::NotEven);
    }
    let mut out = ComplexMatrix::zeros(2);
    for (b, c) in a.terms() {
        out = &out + &rep_blade::<C>(*b).scale(&Cx::real(c.clone()));
    }
    Ok(out)
}

/// Kronecker image of an even tensor element, slot 1 most significant.
pub fn rep_tensor<C: Coefficient>(t: &TensorMultivector<C>) -> Result<ComplexMatrix<C>> {
    if !t.sig().is_spacetime() {
        return Err(Error::SignatureMismatch(t.sig().to_string(), "Cl(1,3)".into()));
    }
    if !t.is_even() {
        return Err(Error::NotEven);
    }
    let blades: Vec<Option<ComplexMatrix<C>>> =
        (0u8..16).map(Blade::from_mask).map(|b| b.is_even().then(|| rep_blade(b))).collect();
    let mut out = ComplexMatrix::zeros(1 << t.slots());
    for (key, c) in t.terms() {
        let mut m = ComplexMatrix::identity(1).scale(&Cx::real(c.clone()));
        for b in key {
            m = m.kron(blades[b.mask() as usize].as_ref().expect("even blade"));
        }
        out = &out + &m;
    }
    Ok(out)
}

/// Column vector of an ideal element: the first column of its representation.
pub fn rep_spinor<C: Coefficient>(t: &TensorMultivector<C>) -> Result<Vec<Cx<C>>> {
    if !in_ideal(t) {
        return Err(Error::NotInIdeal);
    }
    Ok(rep_tensor(t)?.column(0))
}

pub const NORM_TOL: f64 = 1e-12;
pub const NORM_MAX_ITER: usize = 10_000;
const SQUARINGS: usize = 6;

fn rayleigh(a: &DMatrix<Complex<f64>>, v: &DVector<Complex<f64>>) -> f64 {
    let av = a * v;
    (v.dotc(&av)).re / v.norm_squared()
}

/// Largest eigenvalue of the positive semidefinite `a` from one start vector.
///
/// The iteration runs on `a^(2^k)` so that near-degenerate leading
/// eigenvalues still separate quickly; the value is read off as the Rayleigh
/// quotient of the original matrix, which is accurate to second order in the
/// eigenvector error.
fn dominant_eigenvalue(a: &DMatrix<Complex<f64>>, start: DVector<Complex<f64>>) -> Result<f64> {
    let mut boosted = a.clone();
    for _ in 0..SQUARINGS {
        boosted = &boosted * &boosted;
        let scale = boosted.norm();
        if scale > 0.0 {
            boosted /= Complex::new(scale, 0.0);
        }
    }
    let mut v = start;
    let mut previous = f64::NAN;
    for _ in 0..NORM_MAX_ITER {
        let next = &boosted * &v;
        let len = next.norm();
        if len == 0.0 {
            return Ok(0.0);
        }
        v = next / Complex::new(len, 0.0);
        let value = rayleigh(a, &v);
        if (value - previous).abs() <= NORM_TOL * value.abs().max(f64::MIN_POSITIVE) {
            return Ok(value);
        }
        previous = value;
    }
    Err(Error::NotConverged(NORM_MAX_ITER))
}

/// Largest singular value by power iteration on `m†m`.
///
/// The all-ones start vector is tried first; the standard basis vectors are
/// also tried so a start orthogonal to the leading singular vector cannot hide it.
pub fn operator_norm<C: Coefficient>(m: &ComplexMatrix<C>) -> Result<f64> {
    let a = m.to_nalgebra();
    let gram = a.adjoint() * &a;
    if gram.iter().all(|z| z.norm() == 0.0) {
        return Ok(0.0);
    }
    let n = m.dim();
    let mut starts = vec![DVector::from_element(n, Complex::new(1.0, 0.0))];
    starts.extend((0..n).map(|k| DVector::from_fn(n, |i, _| Complex::new(if i == k { 1.0 } else { 0.0 }, 0.0))));
    let mut best: f64 = 0.0;
    for s in starts {
        best = best.max(dominant_eigenvalue(&gram, s)?);
    }
    Ok(best.max(0.0).sqrt())
}

/// `‖N N† - N† N‖` (max entry modulus).
pub fn normality_residual(m: &ComplexMatrix<f64>) -> f64 {
    (&(m * &m.adjoint()) - &(&m.adjoint() * m)).max_abs()
}

pub const NORMALITY_TOL: f64 = 1e-10;

/// Eigenvector matrix and eigenvalues.
pub type Eigen = (DMatrix<Complex<f64>>, Vec<Complex<f64>>);

/// Unitary `U` and eigenvalues `λ` with `N = U diag(λ) U†` for a normal matrix.
///
/// `N = A + iB` with commuting Hermitian `A`, `B`; the eigenvectors of
/// `A + φB` for an irrational `φ` diagonalise both.
pub fn normal_eigen(m: &ComplexMatrix<f64>) -> Result<Eigen> {
    let residual = normality_residual(m);
    if residual > NORMALITY_TOL * m.max_abs().max(1.0) {
        return Err(Error::NonNormal(residual));
    }
    let n = m.to_nalgebra();
    let half = Complex::new(0.5, 0.0);
    let a = (&n + n.adjoint()) * half;
    let b = (&n - n.adjoint()) * Complex::new(0.0, -0.5);
    let phi = Complex::new(std::f64::consts::FRAC_1_SQRT_2 / std::f64::consts::PI, 0.0);
    let mix = &a + &b * phi;
    let eig = nalgebra::SymmetricEigen::new(mix);
    let u = eig.eigenvectors;
    let lambdas = (0..u.ncols()).map(|k| {
        let v = u.column(k);
        v.dotc(&(&n * v))
    });
    Ok((u.clone(), lambdas.collect()))
}

/// `f(N)` for a normal matrix via its spectral decomposition.
pub fn spectral_map(m: &ComplexMatrix<f64>, f: impl Fn(Complex<f64>) -> Complex<f64>) -> Result<ComplexMatrix<f64>> {
    let (u, lambdas) = normal_eigen(m)?;
    let d = DMatrix::from_diagonal(&DVector::from_iterator(lambdas.len(), lambdas.into_iter().map(f)));
    Ok(ComplexMatrix::from_nalgebra(&(&u * d * u.adjoint())))
}

/// Principal square root of a normal matrix.
pub fn principal_sqrt(m: &ComplexMatrix<f64>) -> Result<ComplexMatrix<f64>> {
    spectral_map(m, |z| z.sqrt())
}

/// Eigenvalues and eigenvectors (as columns) of a Hermitian matrix, ascending.
pub fn hermitian_eigen(m: &ComplexMatrix<f64>) -> Vec<(f64, Vec<Cx<f64>>)> {
    let eig = nalgebra::SymmetricEigen::new(m.to_nalgebra());
    let mut out: Vec<(f64, Vec<Cx<f64>>)> = (0..m.dim())
        .map(|k| {
            let col = eig.eigenvectors.column(k);
            (eig.eigenvalues[k], col.iter().map(|z| Cx::new(z.re, z.im)).collect())
        })
        .collect();
    out.sort_by(|x, y| x.0.total_cmp(&y.0));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Signature;
    use crate::ideal::{idempotent_p, iota};
    use crate::tensor::{bell_state, BellLabel};
    use proptest::prelude::*;

    const ST: Signature = Signature::SPACETIME;

    fn w(x: &[usize]) -> Multivector {
        Multivector::word(ST, x).unwrap()
    }

    fn rep(a: &Multivector) -> ComplexMatrix {
        rep_even(a).unwrap()
    }

    fn b1() -> Multivector {
        (Multivector::one(ST) + w(&[1, 0, 2, 0])).scale(&Scalar::frac_1_sqrt2())
    }

    #[test]
    fn dictionary_images() {
        for k in 1..=3 {
            assert_eq!(rep(&w(&[k, 0])), pauli(k));
        }
        assert_eq!(rep(&iota()), ComplexMatrix::identity(2).scale(&Cx::i()));
        let half = Cx::real(Scalar::ratio(1, 2));
        let p = ComplexMatrix::from_rows(vec![vec![Cx::one(), Cx::zero()], vec![Cx::zero(), Cx::zero()]]);
        assert_eq!(rep(&idempotent_p()), p);
        assert_eq!(rep(&idempotent_p()), (&pauli::<Scalar>(0) + &pauli(3)).scale(&half));
        assert_eq!(rep_even(&w(&[1])), Err(Error::NotEven));
    }

    #[test]
    fn products_match_pauli_algebra() {
        // σ₁σ₂ = iσ₃, σ₂σ₃ = iσ₁
        assert_eq!(rep(&w(&[1, 0, 2, 0])), pauli(3).scale(&Cx::i()));
        assert_eq!(rep(&w(&[2, 0, 3, 0])), pauli(1).scale(&Cx::i()));
        let b1m = rep(&b1());
        let s = Scalar::frac_1_sqrt2();
        let expected = ComplexMatrix::from_rows(vec![
            vec![Cx::new(s.clone(), s.clone()), Cx::zero()],
            vec![Cx::zero(), Cx::new(s.clone(), -s)],
        ]);
        assert_eq!(b1m, expected);
    }

    #[test]
    fn spinor_columns() {
        let p1 = TensorMultivector::from_multivector(&(w(&[3, 0]) * idempotent_p()));
        assert_eq!(rep_spinor(&p1).unwrap(), vec![Cx::one(), Cx::zero()]);
        let h = Cx::real(Scalar::frac_1_sqrt2());
        let phi = rep_spinor(&bell_state::<Scalar>(BellLabel::PhiPlus)).unwrap();
        assert_eq!(phi, vec![h.clone(), Cx::zero(), Cx::zero(), h]);
        let zero = TensorMultivector::<Scalar>::zero(ST, 2);
        assert!(rep_spinor(&zero).unwrap().iter().all(Cx::is_zero));
    }

    #[test]
    fn basis_images_are_independent() {
        let rows: Vec<Vec<Scalar>> = (0u8..16)
            .map(Blade::from_mask)
            .filter(Blade::is_even)
            .map(|b| {
                let m = rep(&Multivector::basis(ST, b));
                (0..4).flat_map(|k| { let z = m.get(k / 2, k % 2).clone(); [z.re, z.im] }).collect()
            })
            .collect();
        assert_eq!(crate::linalg::rank(&rows), 8);
    }

    #[test]
    fn norms() {
        assert!((operator_norm(&rep(&b1())).unwrap() - 1.0).abs() < 1e-12);
        assert!((operator_norm(&rep(&idempotent_p())).unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(operator_norm(&ComplexMatrix::<Scalar>::zeros(2)).unwrap(), 0.0);
        // the all-ones start is orthogonal to the leading vector here
        let m = ComplexMatrix::<f64>::from_rows(vec![
            vec![Cx::real(1.0), Cx::real(-1.0)],
            vec![Cx::real(0.0), Cx::real(0.0)],
        ]);
        assert!((operator_norm(&m).unwrap() - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn principal_square_root() {
        // iσ₃ has eigenvalues ±i
        let m = rep(&w(&[1, 0, 2, 0])).to_f64();
        let r = principal_sqrt(&m).unwrap();
        assert!((&(&r * &r) - &m).max_abs() < 1e-12);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((r.get(0, 0).re - h).abs() < 1e-12 && (r.get(0, 0).im - h).abs() < 1e-12);
        let nonnormal = ComplexMatrix::<f64>::from_rows(vec![
            vec![Cx::real(0.0), Cx::real(1.0)],
            vec![Cx::real(0.0), Cx::real(0.0)],
        ]);
        assert!(matches!(principal_sqrt(&nonnormal), Err(Error::NonNormal(_))));
    }

    fn even_mv() -> impl Strategy<Value = Multivector> {
        proptest::collection::vec((-4i64..5, 1i64..4), 8).prop_map(|cs| {
            let blades = (0u8..16).map(Blade::from_mask).filter(Blade::is_even);
            Multivector::from_terms(ST, blades.zip(cs).map(|(b, (n, d))| (b, Scalar::ratio(n, d))))
        })
    }

    proptest! {
        #[test]
        fn homomorphism(a in even_mv(), b in even_mv()) {
            prop_assert_eq!(rep(&(&a * &b)), &rep(&a) * &rep(&b));
            prop_assert_eq!(rep(&a.adjoint()), rep(&a).adjoint());
        }

        #[test]
        fn tensor_rep_is_kronecker(a in even_mv(), b in even_mv()) {
            let t = TensorMultivector::tensor(&[a.clone(), b.clone()]).unwrap();
            prop_assert_eq!(rep_tensor(&t).unwrap(), rep(&a).kron(&rep(&b)));
        }

        #[test]
        fn norm_matches_svd(a in even_mv(), b in even_mv()) {
            let t = TensorMultivector::tensor(&[a, b]).unwrap();
            let m = rep_tensor(&t).unwrap();
            let svd = m.to_nalgebra().singular_values();
            let top = svd.iter().cloned().fold(0.0, f64::max);
            let ours = operator_norm(&m).unwrap();
            prop_assert!((ours - top).abs() <= 1e-9 * top.max(1.0), "{} vs {}", ours, top);
        }
    }
}
