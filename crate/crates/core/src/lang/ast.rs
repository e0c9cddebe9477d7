use crate::scalar::Scalar;
use crate::tensor::BellLabel;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
}

/// Named values of the language.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constant {
    /// `γ₀γ₁γ₂γ₃`.
    I,
    /// The idempotent `½(1 + γ₃γ₀)`.
    P,
    B1,
    B2,
    Bell(BellLabel),
    /// `G1`, `G2`, `G3`, indexed from 0.
    Majorana(usize),
    Ge,
    PM,
}

impl Constant {
    pub fn lookup(name: &str) -> Option<Constant> {
        Some(match name {
            "I" => Constant::I,
            "P" => Constant::P,
            "B1" => Constant::B1,
            "B2" => Constant::B2,
            "Phi+" => Constant::Bell(BellLabel::PhiPlus),
            "Phi-" => Constant::Bell(BellLabel::PhiMinus),
            "Psi+" => Constant::Bell(BellLabel::PsiPlus),
            "Psi-" => Constant::Bell(BellLabel::PsiMinus),
            "G1" => Constant::Majorana(0),
            "G2" => Constant::Majorana(1),
            "G3" => Constant::Majorana(2),
            "Ge" => Constant::Ge,
            "PM" => Constant::PM,
            _ => return None,
        })
    }

    /// Number of tensor slots.
    pub fn slots(&self) -> usize {
        match self {
            Constant::I | Constant::P | Constant::B1 | Constant::B2 => 1,
            _ => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    /// Reversion.
    Rev,
    /// Grade involution.
    Inv,
    Adj,
    /// Bra of a ket, equal to the adjoint.
    Dual,
    /// `N(x) = ⟨x̃x⟩₀`.
    Norm,
    /// `2ⁿ⟨x*y⟩₀`.
    Ip,
    Tensor,
}

impl Func {
    pub fn lookup(name: &str) -> Option<Func> {
        Some(match name {
            "rev" => Func::Rev,
            "inv" => Func::Inv,
            "adj" => Func::Adj,
            "dual" => Func::Dual,
            "N" => Func::Norm,
            "ip" => Func::Ip,
            "tensor" => Func::Tensor,
            _ => return None,
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Lit(Scalar),
    Gen(usize),
    Const(Constant),
    Var(String),
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    /// Infix `ox` chain.
    Ox(Vec<Expr>),
    Call(Func, Vec<Expr>),
    Grade(Box<Expr>, usize),
    /// `exp(k, x)`: `k` quarter turns.
    Exp(i64, Box<Expr>),
    /// `H(a, b, c)`.
    Hamiltonian(Box<[Expr; 3]>),
}
