//! Three Majorana operators on two slots, the Hamiltonian `H = -(ι⊗1)(aΓ₁ + bΓ₂ + cΓ₃)`,
//! parity, the emergent operator, Majorana braid generators and the
//! supersymmetric charge.
//!
//! Every relation is evaluated twice: by exact expansion in the tensor
//! algebra and with 4×4 matrices assembled directly from Pauli matrices.

use serde::Serialize;

use crate::algebra::{exp_quarter_turns, exp_series, braid_relation_check, Multivector, Signature};
use crate::complex::Cx;
use crate::error::{Error, Result};
use crate::ideal::iota;
use crate::matrix::{hermitian_eigen, pauli, principal_sqrt, ComplexMatrix};
use crate::scalar::{Coefficient, Scalar};
use crate::tensor::TensorMultivector;

const ST: Signature = Signature::SPACETIME;

/// Verdict threshold for matrix residuals built from exact entries.
pub const EXACT_SIDE_TOL: f64 = 1e-12;
/// Verdict threshold once a spectral square root is involved.
pub const SPECTRAL_TOL: f64 = 1e-10;

fn pair<C: Coefficient>(x: &[usize], y: &[usize]) -> TensorMultivector<C> {
    let m = |w: &[usize]| Multivector::<C>::word(ST, w).expect("spacetime");
    TensorMultivector::tensor(&[m(x), m(y)]).expect("two parts")
}

/// Ring operations shared by the two evaluation backends.
pub trait Operator: Clone {
    fn times(&self, rhs: &Self) -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn scaled(&self, c: &Scalar) -> Self;
    fn unit(&self) -> Self;
    /// Largest entry modulus in the matrix picture.
    fn residual_norm(&self) -> f64;

    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.scaled(&Scalar::from_integer(-1)))
    }
    fn commutator(&self, rhs: &Self) -> Self {
        self.times(rhs).minus(&rhs.times(self))
    }
    fn anticommutator(&self, rhs: &Self) -> Self {
        self.times(rhs).plus(&rhs.times(self))
    }
}

impl<C: Coefficient> Operator for TensorMultivector<C> {
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn scaled(&self, c: &Scalar) -> Self {
        self.scale(&C::from_scalar(c))
    }
    fn unit(&self) -> Self {
        TensorMultivector::identity(self.sig(), self.slots())
    }
    fn residual_norm(&self) -> f64 {
        crate::matrix::rep_tensor(self).map_or(f64::INFINITY, |m| m.max_abs())
    }
}

impl<C: Coefficient> Operator for ComplexMatrix<C> {
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn scaled(&self, c: &Scalar) -> Self {
        self.scale(&Cx::real(C::from_scalar(c)))
    }
    fn unit(&self) -> Self {
        ComplexMatrix::identity(self.dim())
    }
    fn residual_norm(&self) -> f64 {
        self.max_abs()
    }
}

/// The building blocks of the model in one backend.
#[derive(Clone, Debug)]
pub struct Blocks<T> {
    pub gamma: [T; 3],
    /// `ι ⊗ 1`.
    pub iota1: T,
    /// `γ₂γ₀ ⊗ γ₃γ₀`.
    pub parity: T,
    /// `γ₂γ₀ ⊗ γ₂γ₀`, the last factor of the variant emergent operator.
    pub variant_last: T,
    /// `γ₁γ₀γ₃γ₀ ⊗ 1` and `γ₃γ₀γ₂γ₀ ⊗ γ₁γ₀`, the braid exponents.
    pub braid_args: [T; 2],
}

impl<T: Operator> Blocks<T> {
    pub fn hamiltonian(&self, a: &Scalar, b: &Scalar, c: &Scalar) -> T {
        let lin = self.gamma[0].scaled(a).plus(&self.gamma[1].scaled(b)).plus(&self.gamma[2].scaled(c));
        self.iota1.times(&lin).scaled(&Scalar::from_integer(-1))
    }

    /// `-(ι⊗1) Γ₁ Γ₂ Γ₃`.
    pub fn emergent(&self) -> T {
        let g = &self.gamma;
        self.iota1.times(&g[0]).times(&g[1]).times(&g[2]).scaled(&Scalar::from_integer(-1))
    }

    /// `-(ι⊗1)(γ₁γ₀⊗1)(γ₃γ₀⊗1)(γ₂γ₀⊗γ₂γ₀)`, which differs from `emergent` in the last factor.
    pub fn emergent_variant(&self) -> T {
        let g = &self.gamma;
        self.iota1.times(&g[0]).times(&g[1]).times(&self.variant_last).scaled(&Scalar::from_integer(-1))
    }

    /// `cos θ + sin θ·X` for `θ = π/4`.
    pub fn braid(&self, which: usize) -> T {
        let h = Scalar::frac_1_sqrt2();
        let x = &self.braid_args[which];
        x.unit().scaled(&h).plus(&x.scaled(&h))
    }
}

/// Blocks as exact tensor elements.
pub fn algebra_blocks<C: Coefficient>() -> Blocks<TensorMultivector<C>> {
    let one = Multivector::<C>::one(ST);
    Blocks {
        gamma: majorana_set(),
        iota1: TensorMultivector::tensor(&[iota(), one.clone()]).expect("two parts"),
        parity: pair(&[2, 0], &[3, 0]),
        variant_last: pair(&[2, 0], &[2, 0]),
        braid_args: [
            TensorMultivector::tensor(&[Multivector::word(ST, &[1, 0, 3, 0]).expect("spacetime"), one]).expect("two parts"),
            pair(&[3, 0, 2, 0], &[1, 0]),
        ],
    }
}

/// Blocks assembled from Pauli matrices: `γₖγ₀ ↦ σₖ`, `ι ↦ i`.
pub fn matrix_blocks<C: Coefficient>() -> Blocks<ComplexMatrix<C>> {
    let s = |k| pauli::<C>(k);
    let id = ComplexMatrix::<C>::identity(2);
    Blocks {
        gamma: [s(1).kron(&id), s(3).kron(&id), s(2).kron(&s(1))],
        iota1: ComplexMatrix::identity(4).scale(&Cx::i()),
        parity: s(2).kron(&s(3)),
        variant_last: s(2).kron(&s(2)),
        braid_args: [(&s(1) * &s(3)).kron(&id), (&s(3) * &s(2)).kron(&s(1))],
    }
}

/// `Γ₁ = γ₁γ₀⊗1`, `Γ₂ = γ₃γ₀⊗1`, `Γ₃ = γ₂γ₀⊗γ₁γ₀`.
pub fn majorana_set<C: Coefficient>() -> [TensorMultivector<C>; 3] {
    [pair(&[1, 0], &[]), pair(&[3, 0], &[]), pair(&[2, 0], &[1, 0])]
}

#[derive(Clone, Debug, PartialEq)]
pub struct MajoranaModel {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub hamiltonian: TensorMultivector,
    pub parity: TensorMultivector,
    pub emergent: TensorMultivector,
}

impl MajoranaModel {
    pub fn new(a: Scalar, b: Scalar, c: Scalar) -> Self {
        let blocks = algebra_blocks::<Scalar>();
        MajoranaModel {
            hamiltonian: blocks.hamiltonian(&a, &b, &c),
            parity: blocks.parity.clone(),
            emergent: blocks.emergent(),
            a,
            b,
            c,
        }
    }

    /// `a² + b² + c²`.
    pub fn weight(&self) -> Scalar {
        self.a.clone() * self.a.clone() + self.b.clone() * self.b.clone() + self.c.clone() * self.c.clone()
    }

    pub fn hamiltonian_square(&self) -> TensorMultivector {
        &self.hamiltonian * &self.hamiltonian
    }
}

/// `exp(k·π/4·X)` for both Majorana braid exponents.
pub fn majorana_braids(k: i64) -> Result<[TensorMultivector; 2]> {
    let args = algebra_blocks::<Scalar>().braid_args;
    Ok([exp_quarter_turns(k, &args[0])?, exp_quarter_turns(k, &args[1])?])
}

/// `exp(θ·X)` by power series, for any angle.
pub fn majorana_braids_float(theta: f64) -> Result<[TensorMultivector<f64>; 2]> {
    let args = algebra_blocks::<f64>().braid_args;
    Ok([exp_series(theta, &args[0])?, exp_series(theta, &args[1])?])
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RelationRow {
    pub relation: String,
    /// Part of the asserted suite; the remaining rows are informational.
    pub asserted: bool,
    pub holds: bool,
    /// Canonical text of `lhs - rhs` when it does not vanish.
    pub residual: Option<String>,
    pub residual_norm: Option<f64>,
    pub matrix_holds: bool,
    pub matrix_residual_norm: f64,
    pub oracle_agreement: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RelationReport {
    pub note: String,
    pub rows: Vec<RelationRow>,
}

impl RelationReport {
    pub fn asserted_hold(&self) -> bool {
        self.rows.iter().filter(|r| r.asserted).all(|r| r.holds)
    }

    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(|r| r.oracle_agreement)
    }
}

struct Relation<T> {
    label: String,
    asserted: bool,
    residual: T,
}

fn relations<T: Operator>(blocks: &Blocks<T>, a: &Scalar, b: &Scalar, c: &Scalar) -> Vec<Relation<T>> {
    let mut out = Vec::new();
    let mut push = |label: String, asserted: bool, residual: T| out.push(Relation { label, asserted, residual });
    let g = &blocks.gamma;
    let id = g[0].unit();
    let two = Scalar::from_integer(2);
    for i in 0..3 {
        for j in i..3 {
            let expected = if i == j { id.scaled(&two) } else { id.scaled(&Scalar::from_integer(0)) };
            push(format!("{{G{},G{}}} = {}", i + 1, j + 1, if i == j { "2" } else { "0" }), true, g[i].anticommutator(&g[j]).minus(&expected));
        }
    }
    let ge = blocks.emergent();
    let h = blocks.hamiltonian(a, b, c);
    push("Ge^2 = 1".into(), true, ge.times(&ge).minus(&id));
    for (j, gj) in g.iter().enumerate() {
        push(format!("[Ge,G{}] = 0", j + 1), true, ge.commutator(gj));
    }
    push("{Ge,PM} = 0".into(), true, ge.anticommutator(&blocks.parity));
    push("PM^2 = 1".into(), true, blocks.parity.times(&blocks.parity).minus(&id));
    let weight = a.clone() * a.clone() + b.clone() * b.clone() + c.clone() * c.clone();
    push("H^2 = -(a^2+b^2+c^2)".into(), true, h.times(&h).plus(&id.scaled(&weight)));
    push("[Ge,H] = 0".into(), false, ge.commutator(&h));
    let (b1, b2) = (blocks.braid(0), blocks.braid(1));
    push("B1M B2M B1M = B2M B1M B2M".into(), true, b1.times(&b2).times(&b1).minus(&b2.times(&b1).times(&b2)));
    push("[B1M,Ge] = 0".into(), true, b1.commutator(&ge));
    push("[B2M,Ge] = 0".into(), true, b2.commutator(&ge));
    let variant = blocks.emergent_variant();
    push("variant Ge: Ge^2 = 1".into(), false, variant.times(&variant).minus(&id));
    for (j, gj) in g.iter().enumerate() {
        push(format!("variant Ge: [Ge,G{}] = 0", j + 1), false, variant.commutator(gj));
    }
    push("variant Ge: {Ge,PM} = 0".into(), false, variant.anticommutator(&blocks.parity));
    out
}

/// Exact relation suite with a matrix verdict for every row.
pub fn relation_suite(m: &MajoranaModel) -> RelationReport {
    let exact = relations(&algebra_blocks::<Scalar>(), &m.a, &m.b, &m.c);
    let matrix = relations(&matrix_blocks::<Scalar>(), &m.a, &m.b, &m.c);
    let rows = exact
        .into_iter()
        .zip(matrix)
        .map(|(e, x)| {
            let holds = e.residual.is_zero();
            let matrix_residual_norm = x.residual.residual_norm();
            let matrix_holds = matrix_residual_norm < EXACT_SIDE_TOL;
            RelationRow {
                relation: e.label,
                asserted: e.asserted,
                holds,
                residual: (!holds).then(|| e.residual.to_string()),
                residual_norm: Some(e.residual.residual_norm()),
                matrix_holds,
                matrix_residual_norm,
                oracle_agreement: holds == matrix_holds,
            }
        })
        .collect();
    RelationReport {
        note: "Ge = -(I ox 1) G1 G2 G3; the variant with last factor g2*g0 ox g2*g0 is evaluated in the rows marked 'variant'".into(),
        rows,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SusyMode {
    ExactIfPossible,
    Float,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SusyReport {
    pub note: String,
    /// The algebra side ran with exact coefficients.
    pub exact: bool,
    pub rows: Vec<RelationRow>,
}

/// `1/√(2r)` with `r = √(a²+b²+c²)`, when it lies in ℚ[√2].
fn exact_root_factor(weight: &Scalar) -> Option<(Scalar, Scalar)> {
    let r = Scalar::sqrt_of_rational(weight.rat()).filter(|_| weight.is_rational())?;
    if !r.is_rational() {
        return None;
    }
    let two_r = r.rat() * crate::scalar::Rational::from_integer(2.into());
    let root = Scalar::sqrt_of_rational(&two_r)?;
    Some((r, root.inverse()?))
}

struct Charge<T> {
    h: T,
    q: T,
    q_dag: T,
    parity: T,
}

fn charge_relations<T: Operator>(ch: &Charge<T>) -> Vec<(String, T)> {
    let two = Scalar::from_integer(2);
    vec![
        ("Q^2 = 0".into(), ch.q.times(&ch.q)),
        ("[Q,H] = 0".into(), ch.q.commutator(&ch.h)),
        ("{Q,Q+} = 2H".into(), ch.q.anticommutator(&ch.q_dag).minus(&ch.h.scaled(&two))),
        ("{Q,PM} = 0".into(), ch.q.anticommutator(&ch.parity)),
    ]
}

fn algebra_charge<C: Coefficient>(m: &MajoranaModel, r: C, inv_root: C) -> Charge<TensorMultivector<C>> {
    let blocks = algebra_blocks::<C>();
    let h = blocks.hamiltonian(&m.a, &m.b, &m.c);
    // H² = -r², so (r + H)/√(2r) squares to H and has the principal eigenvalues
    let sqrt_h = (h.unit().scale(&r) + &h).scale(&inv_root);
    let ge = blocks.emergent();
    let quarter = C::from_scalar(&Scalar::ratio(1, 4));
    let q = (&sqrt_h * &ge) * (h.unit() + &blocks.parity).scale(&quarter);
    let q_dag = q.adjoint();
    Charge { h, q, q_dag, parity: blocks.parity }
}

/// The charge `Q = H^{1/2} Γe (1 + PM)/4` and its relations, both backends.
pub fn susy_charge(m: &MajoranaModel, mode: SusyMode) -> Result<SusyReport> {
    let weight = m.weight();
    if weight.is_zero() {
        return Err(Error::ZeroParameters);
    }
    let mblocks = matrix_blocks::<f64>();
    let hm = mblocks.hamiltonian(&m.a, &m.b, &m.c);
    let sqrt_hm = principal_sqrt(&hm)?;
    let quarter = Cx::real(0.25);
    let qm = &(&sqrt_hm * &mblocks.emergent()) * &(&hm.unit() + &mblocks.parity).scale(&quarter);
    let matrix = Charge { q_dag: qm.adjoint(), h: hm, q: qm, parity: mblocks.parity.clone() };
    let matrix_rows = charge_relations(&matrix);

    let exact = match mode {
        SusyMode::ExactIfPossible => exact_root_factor(&weight),
        SusyMode::Float => None,
    };
    let algebra_rows: Vec<(String, f64, Option<String>, bool)> = match &exact {
        Some((r, inv_root)) => charge_relations(&algebra_charge(m, r.clone(), inv_root.clone()))
            .into_iter()
            .map(|(l, t)| {
                let holds = t.is_zero();
                (l, t.residual_norm(), (!holds).then(|| t.to_string()), holds)
            })
            .collect(),
        None => {
            let r = weight.to_f64().sqrt();
            charge_relations(&algebra_charge(m, r, 1.0 / (2.0 * r).sqrt()))
                .into_iter()
                .map(|(l, t)| {
                    let norm = t.residual_norm();
                    let holds = norm < SPECTRAL_TOL;
                    (l, norm, (!holds).then(|| t.to_string()), holds)
                })
                .collect()
        }
    };
    let rows = algebra_rows
        .into_iter()
        .zip(matrix_rows)
        .map(|((relation, norm, residual, holds), (_, mres))| {
            let matrix_residual_norm = mres.residual_norm();
            let matrix_holds = matrix_residual_norm < SPECTRAL_TOL;
            RelationRow {
                relation,
                asserted: false,
                holds,
                residual,
                residual_norm: Some(norm),
                matrix_holds,
                matrix_residual_norm,
                oracle_agreement: holds == matrix_holds,
            }
        })
        .collect();
    Ok(SusyReport {
        note: "H^{1/2} is the principal square root; Q = H^{1/2} Ge (1 + PM)/4 in this left-to-right order; Q+ is the adjoint".into(),
        exact: exact.is_some(),
        rows,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DegeneracyReport {
    pub parity_eigenvalues: Vec<f64>,
    /// Per `+1` parity eigenvector: `|⟨ψ₀|Qψ₀⟩|`.
    pub overlaps: Vec<f64>,
    /// Per `+1` parity eigenvector: `‖Qψ₀‖`.
    pub image_norms: Vec<f64>,
    pub orthogonal: bool,
    pub image_nonzero: bool,
    /// `Γe` maps each `+1` eigenvector into the `-1` eigenspace.
    pub emergent_flips_parity: bool,
}

/// Parity `+1` eigenvectors, their images under `Q`, and the overlap `⟨ψ₀|Qψ₀⟩`.
pub fn degeneracy_check(m: &MajoranaModel) -> Result<DegeneracyReport> {
    if m.weight().is_zero() {
        return Err(Error::ZeroParameters);
    }
    let blocks = matrix_blocks::<f64>();
    let h = blocks.hamiltonian(&m.a, &m.b, &m.c);
    let q = &(&principal_sqrt(&h)? * &blocks.emergent()) * &(&h.unit() + &blocks.parity).scale(&Cx::real(0.25));
    let eig = hermitian_eigen(&blocks.parity);
    let dot = |u: &[Cx<f64>], v: &[Cx<f64>]| u.iter().zip(v).fold(Cx::zero(), |acc, (x, y)| acc + x.conj() * y.clone());
    let norm = |u: &[Cx<f64>]| dot(u, u).re.max(0.0).sqrt();
    let plus: Vec<&Vec<Cx<f64>>> = eig.iter().filter(|(l, _)| (l - 1.0).abs() < SPECTRAL_TOL).map(|(_, v)| v).collect();
    let mut overlaps = Vec::new();
    let mut image_norms = Vec::new();
    let mut flips = true;
    let ge = blocks.emergent();
    for v in &plus {
        let qv = q.apply(v);
        overlaps.push(dot(v, &qv).abs_f64());
        image_norms.push(norm(&qv));
        let gv = ge.apply(v);
        let back = blocks.parity.apply(&gv);
        let sum: Vec<Cx<f64>> = back.iter().zip(&gv).map(|(x, y)| x.clone() + y.clone()).collect();
        flips &= norm(&sum) < SPECTRAL_TOL;
    }
    Ok(DegeneracyReport {
        parity_eigenvalues: eig.iter().map(|(l, _)| *l).collect(),
        orthogonal: overlaps.iter().all(|o| *o <= SPECTRAL_TOL),
        image_nonzero: image_norms.iter().all(|n| *n > SPECTRAL_TOL),
        overlaps,
        image_norms,
        emergent_flips_parity: flips,
    })
}

/// `B₁ᴹ B₂ᴹ B₁ᴹ = B₂ᴹ B₁ᴹ B₂ᴹ` at `θ = k·π/4`.
pub fn majorana_braid_relation(k: i64) -> Result<bool> {
    let [x, y] = majorana_braids(k)?;
    Ok(braid_relation_check(&x, &y)?.holds)
}
