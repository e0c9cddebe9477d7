use std::collections::BTreeMap;
use std::fmt;

use super::ast::{BinOp, Constant, Expr, Func};
use super::parse;
use crate::algebra::{exp_quarter_turns, Blade, Multivector, Signature};
use crate::braid::BraidGenerator;
use crate::error::{Error, Result};
use crate::ideal::idempotent_p;
use crate::majorana::{algebra_blocks, majorana_set};
use crate::scalar::{Coefficient, Scalar};
use crate::tensor::{bell_state, TensorMultivector};

const ST: Signature = Signature::SPACETIME;

/// Result of evaluating an expression.
#[derive(Clone, Debug, PartialEq)]
pub enum Value<C: Coefficient = Scalar> {
    Scalar(C),
    Mv(Multivector<C>),
    Tensor(TensorMultivector<C>),
}

impl<C: Coefficient> fmt::Display for Value<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(c) => fmt::Display::fmt(&Multivector::scalar(ST, c.clone()), f),
            Value::Mv(m) => m.fmt(f),
            Value::Tensor(t) => t.fmt(f),
        }
    }
}

impl<C: Coefficient> Value<C> {
    /// A multivector with only a scalar part becomes that scalar.
    pub fn normalized(self) -> Self {
        match self {
            Value::Mv(m) if m.is_scalar() => Value::Scalar(m.scalar_part()),
            v => v,
        }
    }

    pub fn slots(&self) -> Option<usize> {
        match self {
            Value::Scalar(_) => None,
            Value::Mv(_) => Some(1),
            Value::Tensor(t) => Some(t.slots()),
        }
    }

    fn into_tensor(self, slots: usize) -> Result<TensorMultivector<C>> {
        match self {
            Value::Scalar(c) => Ok(TensorMultivector::identity(ST, slots).scale(&c)),
            Value::Mv(m) if slots == 1 => Ok(TensorMultivector::from_multivector(&m)),
            Value::Tensor(t) if t.slots() == slots => Ok(t),
            other => Err(Error::SlotMismatch(slots, other.slots().unwrap_or(1))),
        }
    }

    /// As a tensor factor: scalars and multivectors occupy one slot.
    fn into_factor(self) -> TensorMultivector<C> {
        match self {
            Value::Scalar(c) => TensorMultivector::from_multivector(&Multivector::scalar(ST, c)),
            Value::Mv(m) => TensorMultivector::from_multivector(&m),
            Value::Tensor(t) => t,
        }
    }

    /// Lifts both operands to a common shape.
    fn unify(self, other: Self) -> Result<(Self, Self)> {
        Ok(match (self, other) {
            (Value::Scalar(a), Value::Scalar(b)) => (Value::Scalar(a), Value::Scalar(b)),
            (Value::Tensor(a), b) => {
                let n = a.slots();
                (Value::Tensor(a), Value::Tensor(b.into_tensor(n)?))
            }
            (a, Value::Tensor(b)) => {
                let n = b.slots();
                (Value::Tensor(a.into_tensor(n)?), Value::Tensor(b))
            }
            (a, b) => (Value::Mv(a.into_mv()), Value::Mv(b.into_mv())),
        })
    }

    fn into_mv(self) -> Multivector<C> {
        match self {
            Value::Scalar(c) => Multivector::scalar(ST, c),
            Value::Mv(m) => m,
            Value::Tensor(t) => t.to_multivector().expect("single slot"),
        }
    }

    fn binary(self, op: BinOp, other: Self) -> Result<Self> {
        Ok(match self.unify(other)? {
            (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(match op {
                BinOp::Add => a + b,
                BinOp::Sub => a - b,
                BinOp::Mul => a * b,
            }),
            (Value::Mv(a), Value::Mv(b)) => Value::Mv(match op {
                BinOp::Add => a.try_add(&b)?,
                BinOp::Sub => a.try_sub(&b)?,
                BinOp::Mul => a.gp(&b)?,
            }),
            (Value::Tensor(a), Value::Tensor(b)) => Value::Tensor(match op {
                BinOp::Add => a.try_add(&b)?,
                BinOp::Sub => a.try_sub(&b)?,
                BinOp::Mul => a.tmul(&b)?,
            }),
            _ => unreachable!("unify returns matching shapes"),
        })
    }

    fn map(self, fm: impl Fn(&Multivector<C>) -> Multivector<C>, ft: impl Fn(&TensorMultivector<C>) -> TensorMultivector<C>) -> Self {
        match self {
            Value::Scalar(c) => Value::Scalar(c),
            Value::Mv(m) => Value::Mv(fm(&m)),
            Value::Tensor(t) => Value::Tensor(ft(&t)),
        }
    }

    fn scalar_of(self) -> Result<C> {
        match self {
            Value::Scalar(c) => Ok(c),
            Value::Mv(m) if m.is_scalar() => Ok(m.scalar_part()),
            Value::Tensor(t) if t.is_scalar() => Ok(t.scalar_part()),
            other => Err(Error::Type(format!("expected a scalar, found {other}"))),
        }
    }
}

/// Tensor product of factors, slot order preserved.
fn concat<C: Coefficient>(parts: Vec<TensorMultivector<C>>) -> TensorMultivector<C> {
    let slots = parts.iter().map(|p| p.slots()).sum();
    let mut terms: BTreeMap<Vec<Blade>, C> = [(Vec::new(), C::one())].into();
    for p in &parts {
        let mut next = BTreeMap::new();
        for (k, c) in &terms {
            for (kb, cb) in p.terms() {
                let mut key = k.clone();
                key.extend_from_slice(kb);
                next.insert(key, c.clone() * cb.clone());
            }
        }
        terms = next;
    }
    TensorMultivector::from_terms(ST, slots, terms)
}

fn tensor_grade_involution<C: Coefficient>(t: &TensorMultivector<C>) -> TensorMultivector<C> {
    let terms = t.terms().map(|(k, c)| {
        let odd = k.iter().filter(|b| !b.is_even()).count() % 2 == 1;
        (k.to_vec(), if odd { -c.clone() } else { c.clone() })
    });
    TensorMultivector::from_terms(t.sig(), t.slots(), terms.collect::<Vec<_>>())
}

/// Names bound by `let` in a REPL session.
#[derive(Clone, Debug, Default)]
pub struct Session<C: Coefficient = Scalar> {
    bindings: BTreeMap<String, Value<C>>,
}

impl<C: Coefficient> Session<C> {
    pub fn new() -> Self {
        Session { bindings: BTreeMap::new() }
    }

    pub fn get(&self, name: &str) -> Option<&Value<C>> {
        self.bindings.get(name)
    }

    pub fn bind(&mut self, name: &str, value: Value<C>) {
        self.bindings.insert(name.to_string(), value);
    }

    /// Runs one REPL line: `let name = expr` or a bare expression.
    pub fn run(&mut self, line: &str) -> Result<Value<C>> {
        let trimmed = line.trim_start();
        if let Some(rest) = trimmed.strip_prefix("let ") {
            let (name, body) = rest
                .split_once('=')
                .ok_or_else(|| Error::Input("expected `let name = expr`".into()))?;
            let name = name.trim();
            let valid = name.starts_with(|c: char| c.is_alphabetic() || c == '_')
                && name.chars().all(|c| c.is_alphanumeric() || c == '_');
            if !valid || super::parse(name).map(|e| !matches!(e, Expr::Var(_))).unwrap_or(true) {
                return Err(Error::Input(format!("cannot bind {name:?}")));
            }
            let v = self.eval(&parse(body)?)?;
            self.bindings.insert(name.to_string(), v.clone());
            return Ok(v);
        }
        self.eval(&parse(line)?)
    }

    pub fn eval(&self, e: &Expr) -> Result<Value<C>> {
        Ok(match e {
            Expr::Lit(s) => Value::Scalar(C::from_scalar(s)),
            Expr::Gen(k) => Value::Mv(Multivector::generator(ST, *k)?),
            Expr::Const(c) => constant(*c),
            Expr::Var(name) => self.bindings.get(name).cloned().ok_or_else(|| Error::Unbound(name.clone()))?,
            Expr::Neg(x) => self.eval(x)?.map(|m| -m, |t| -t).negate_scalar(),
            Expr::Bin(op, a, b) => self.eval(a)?.binary(*op, self.eval(b)?)?,
            Expr::Pow(x, k) => match self.eval(x)? {
                Value::Scalar(c) => Value::Scalar((0..*k).fold(C::one(), |acc, _| acc * c.clone())),
                Value::Mv(m) => Value::Mv(m.pow(*k)),
                Value::Tensor(t) => Value::Tensor(t.pow(*k)),
            },
            Expr::Ox(parts) => {
                let vals = parts.iter().map(|p| self.eval(p).map(Value::into_factor)).collect::<Result<Vec<_>>>()?;
                Value::Tensor(concat(vals))
            }
            Expr::Call(f, args) => self.call(*f, args)?,
            Expr::Grade(x, k) => match self.eval(x)? {
                Value::Scalar(c) => Value::Scalar(if *k == 0 { c } else { C::zero() }),
                Value::Mv(m) => Value::Mv(m.grade_project(*k)),
                Value::Tensor(_) => return Err(Error::Type("grade of a tensor element".into())),
            },
            Expr::Exp(k, x) => match self.eval(x)? {
                Value::Mv(m) => Value::Mv(exp_quarter_turns(*k, &m)?),
                Value::Tensor(t) => Value::Tensor(exp_quarter_turns(*k, &t)?),
                Value::Scalar(_) => return Err(Error::NotUnitBivector),
            },
            Expr::Hamiltonian(args) => {
                let [a, b, c] = args.as_ref();
                let (a, b, c) = (self.eval(a)?.scalar_of()?, self.eval(b)?.scalar_of()?, self.eval(c)?.scalar_of()?);
                let g = majorana_set::<C>();
                let lin = g[0].scale(&a) + g[1].scale(&b) + g[2].scale(&c);
                Value::Tensor(-(&algebra_blocks::<C>().iota1 * &lin))
            }
        })
    }

    fn call(&self, f: Func, args: &[Expr]) -> Result<Value<C>> {
        let vals = args.iter().map(|a| self.eval(a)).collect::<Result<Vec<_>>>()?;
        let mut it = vals.into_iter();
        let mut next = || it.next().ok_or_else(|| Error::Type("missing argument".into()));
        Ok(match f {
            Func::Rev => next()?.map(Multivector::reverse, TensorMultivector::reverse),
            Func::Inv => next()?.map(Multivector::grade_involution, tensor_grade_involution),
            Func::Adj | Func::Dual => next()?.map(Multivector::adjoint, TensorMultivector::adjoint),
            Func::Norm => Value::Scalar(match next()? {
                Value::Scalar(c) => c.clone() * c,
                Value::Mv(m) => m.norm_squared(),
                Value::Tensor(t) => t.reverse().tmul(&t)?.scalar_part(),
            }),
            Func::Ip => {
                let (x, y) = next()?.unify(next()?)?;
                let (prod, n) = match (x, y) {
                    (Value::Scalar(a), Value::Scalar(b)) => (a * b, 1),
                    (Value::Mv(a), Value::Mv(b)) => (a.adjoint().gp(&b)?.scalar_part(), 1),
                    (Value::Tensor(a), Value::Tensor(b)) => (a.adjoint().tmul(&b)?.scalar_part(), a.slots()),
                    _ => unreachable!("unify returns matching shapes"),
                };
                Value::Scalar(prod * C::from_i64(1 << n.min(62)))
            }
            Func::Tensor => {
                let parts: Vec<TensorMultivector<C>> = std::iter::from_fn(|| next().ok()).map(Value::into_factor).collect();
                if parts.is_empty() {
                    return Err(Error::EmptyTensor);
                }
                let t = concat(parts);
                if t.slots() == 1 {
                    Value::Mv(t.to_multivector().expect("one slot"))
                } else {
                    Value::Tensor(t)
                }
            }
        })
    }
}

impl<C: Coefficient> Value<C> {
    fn negate_scalar(self) -> Self {
        match self {
            Value::Scalar(c) => Value::Scalar(-c),
            v => v,
        }
    }
}

fn constant<C: Coefficient>(c: Constant) -> Value<C> {
    match c {
        Constant::I => Value::Mv(Multivector::basis(ST, ST.pseudoscalar())),
        Constant::P => Value::Mv(idempotent_p()),
        Constant::B1 => Value::Mv(BraidGenerator::B1.value()),
        Constant::B2 => Value::Mv(BraidGenerator::B2.value()),
        Constant::Bell(label) => Value::Tensor(bell_state(label)),
        Constant::Majorana(k) => Value::Tensor(majorana_set::<C>()[k].clone()),
        Constant::Ge => Value::Tensor(algebra_blocks::<C>().emergent()),
        Constant::PM => Value::Tensor(algebra_blocks::<C>().parity),
    }
}

/// Evaluates without bindings.
pub fn eval<C: Coefficient>(e: &Expr) -> Result<Value<C>> {
    Session::new().eval(e)
}

pub fn eval_str<C: Coefficient>(text: &str) -> Result<Value<C>> {
    eval(&parse(text)?)
}
