//! Recursive descent over the grammar
//!
//! ```text
//! expr    := sum ('ox' sum)*
//! sum     := product (('+' | '-') product)*
//! product := unary ('*' unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' INT)?
//! atom    := NUM | '√2' | NAME | NAME '(' args ')' | '(' expr ')'
//! ```
//!
//! Slot counts are inferred while parsing; operands of `+`, `-` and `*` must
//! agree, so `tensor(a, b)*P ox P` is rejected.

use super::ast::{BinOp, Constant, Expr, Func};
use super::lexer::{lex, Tok, Token};
use super::ParseError;
use crate::scalar::Scalar;

/// Nesting limit for parentheses, calls and prefix minus.
pub const MAX_DEPTH: usize = 64;
/// Largest exponent accepted after `^`.
pub const MAX_POWER: u32 = 64;

/// Slot count of a subexpression; `Any` for scalars and REPL names.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Arity {
    Any,
    Slots(usize),
}

impl Arity {
    fn width(self) -> usize {
        match self {
            Arity::Any => 1,
            Arity::Slots(n) => n,
        }
    }

    fn join(self, other: Arity, offset: usize) -> Result<Arity, ParseError> {
        match (self, other) {
            (Arity::Any, x) | (x, Arity::Any) => Ok(x),
            (Arity::Slots(a), Arity::Slots(b)) if a == b => Ok(self),
            (Arity::Slots(a), Arity::Slots(b)) => {
                Err(ParseError::new(offset, format!("operands have {a} and {b} tensor slots")))
            }
        }
    }
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    depth: usize,
}

/// Parses one expression covering the whole input.
pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(src)?, pos: 0, depth: 0 };
    let (e, _) = p.expr()?;
    match p.peek() {
        Tok::End => Ok(e),
        t => Err(ParseError::new(p.offset(), format!("unexpected {}", t.describe()))
            .expecting(&["operator", "end of input"])),
    }
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].offset
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(ParseError::new(self.offset(), format!("unexpected {}", self.peek().describe()))
                .expecting(&[&want.describe()]))
        }
    }

    fn nest(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(ParseError::new(self.offset(), format!("nesting deeper than {MAX_DEPTH}")));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<(Expr, Arity), ParseError> {
        let (first, a) = self.sum()?;
        if *self.peek() != Tok::Ox {
            return Ok((first, a));
        }
        let mut width = a.width();
        let mut parts = vec![first];
        while *self.peek() == Tok::Ox {
            self.bump();
            let (e, a) = self.sum()?;
            width += a.width();
            parts.push(e);
        }
        Ok((Expr::Ox(parts), Arity::Slots(width)))
    }

    fn sum(&mut self) -> Result<(Expr, Arity), ParseError> {
        let (mut lhs, mut arity) = self.product()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok((lhs, arity)),
            };
            let at = self.offset();
            self.bump();
            let (rhs, a) = self.product()?;
            arity = arity.join(a, at)?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn product(&mut self) -> Result<(Expr, Arity), ParseError> {
        let (mut lhs, mut arity) = self.unary()?;
        while *self.peek() == Tok::Star {
            let at = self.offset();
            self.bump();
            let (rhs, a) = self.unary()?;
            arity = arity.join(a, at)?;
            lhs = Expr::Bin(BinOp::Mul, Box::new(lhs), Box::new(rhs));
        }
        Ok((lhs, arity))
    }

    fn unary(&mut self) -> Result<(Expr, Arity), ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            self.nest()?;
            let (e, a) = self.unary()?;
            self.depth -= 1;
            return Ok((Expr::Neg(Box::new(e)), a));
        }
        self.power()
    }

    fn power(&mut self) -> Result<(Expr, Arity), ParseError> {
        let (base, a) = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok((base, a));
        }
        self.bump();
        let at = self.offset();
        let k = self.unsigned()?;
        let k = u32::try_from(k).ok().filter(|k| *k <= MAX_POWER).ok_or_else(|| {
            ParseError::new(at, format!("exponent must be at most {MAX_POWER}"))
        })?;
        Ok((Expr::Pow(Box::new(base), k), a))
    }

    fn unsigned(&mut self) -> Result<u64, ParseError> {
        let at = self.offset();
        match self.bump() {
            Tok::Num { text, surd: false } if text.bytes().all(|b| b.is_ascii_digit()) => {
                text.parse().map_err(|_| ParseError::new(at, "integer out of range"))
            }
            t => Err(ParseError::new(at, format!("unexpected {}", t.describe())).expecting(&["integer"])),
        }
    }

    fn signed(&mut self) -> Result<i64, ParseError> {
        let negative = *self.peek() == Tok::Minus;
        if negative {
            self.bump();
        }
        let at = self.offset();
        let k = i64::try_from(self.unsigned()?).map_err(|_| ParseError::new(at, "integer out of range"))?;
        Ok(if negative { -k } else { k })
    }

    fn atom(&mut self) -> Result<(Expr, Arity), ParseError> {
        let at = self.offset();
        match self.bump() {
            Tok::Num { text, surd } => {
                let mut s: Scalar = text.parse().map_err(|_| ParseError::new(at, format!("bad literal {text:?}")))?;
                if surd {
                    s = s * Scalar::sqrt2();
                }
                Ok((Expr::Lit(s), Arity::Any))
            }
            Tok::Surd => Ok((Expr::Lit(Scalar::sqrt2()), Arity::Any)),
            Tok::LParen => {
                self.nest()?;
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                self.depth -= 1;
                Ok(inner)
            }
            Tok::Ident(name) => self.named(name, at),
            t => Err(ParseError::new(at, format!("unexpected {}", t.describe())).expecting(&[
                "number", "name", "'('", "'-'",
            ])),
        }
    }

    fn named(&mut self, name: String, at: usize) -> Result<(Expr, Arity), ParseError> {
        if let Some(k) = generator_index(&name) {
            return Ok((Expr::Gen(k), Arity::Slots(1)));
        }
        if let Some(c) = Constant::lookup(&name) {
            return Ok((Expr::Const(c), Arity::Slots(c.slots())));
        }
        let call = match name.as_str() {
            "grade" | "exp" | "H" => true,
            _ => Func::lookup(&name).is_some(),
        };
        if !call {
            return Ok((Expr::Var(name), Arity::Any));
        }
        self.expect(Tok::LParen)?;
        self.nest()?;
        let out = self.call(&name, at)?;
        self.expect(Tok::RParen)?;
        self.depth -= 1;
        Ok(out)
    }

    fn call(&mut self, name: &str, at: usize) -> Result<(Expr, Arity), ParseError> {
        match name {
            "grade" => {
                let (x, a) = self.expr()?;
                if let Arity::Slots(n) = a {
                    if n != 1 {
                        return Err(ParseError::new(at, "grade takes a single-slot argument"));
                    }
                }
                self.expect(Tok::Comma)?;
                let kat = self.offset();
                let k = usize::try_from(self.unsigned()?).map_err(|_| ParseError::new(kat, "grade out of range"))?;
                Ok((Expr::Grade(Box::new(x), k), a))
            }
            "exp" => {
                let k = self.signed()?;
                self.expect(Tok::Comma)?;
                let (x, a) = self.expr()?;
                Ok((Expr::Exp(k, Box::new(x)), a))
            }
            "H" => {
                let mut args = Vec::with_capacity(3);
                for i in 0..3 {
                    if i > 0 {
                        self.expect(Tok::Comma)?;
                    }
                    let aat = self.offset();
                    let (e, a) = self.expr()?;
                    if a != Arity::Any {
                        return Err(ParseError::new(aat, "H takes scalar arguments"));
                    }
                    args.push(e);
                }
                let [a, b, c]: [Expr; 3] = args.try_into().expect("three arguments");
                Ok((Expr::Hamiltonian(Box::new([a, b, c])), Arity::Slots(2)))
            }
            _ => {
                let f = Func::lookup(name).expect("checked by caller");
                let mut args = vec![self.expr()?];
                while *self.peek() == Tok::Comma {
                    self.bump();
                    args.push(self.expr()?);
                }
                let arity = match f {
                    Func::Tensor => Arity::Slots(args.iter().map(|(_, a)| a.width()).sum()),
                    Func::Ip => {
                        if args.len() != 2 {
                            return Err(ParseError::new(at, "ip takes two arguments"));
                        }
                        args[0].1.join(args[1].1, at)?;
                        Arity::Any
                    }
                    _ if args.len() != 1 => {
                        return Err(ParseError::new(at, format!("{name} takes one argument")));
                    }
                    Func::Norm => Arity::Any,
                    _ => args[0].1,
                };
                Ok((Expr::Call(f, args.into_iter().map(|(e, _)| e).collect()), arity))
            }
        }
    }
}

fn generator_index(name: &str) -> Option<usize> {
    match name {
        "g0" => Some(0),
        "g1" => Some(1),
        "g2" => Some(2),
        "g3" => Some(3),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(k: usize) -> Box<Expr> {
        Box::new(Expr::Gen(k))
    }

    #[test]
    fn left_multiplication_chain() {
        let e = parse("g3*g0*P").unwrap();
        let inner = Expr::Bin(BinOp::Mul, g(3), g(0));
        assert_eq!(e, Expr::Bin(BinOp::Mul, Box::new(inner), Box::new(Expr::Const(Constant::P))));
    }

    #[test]
    fn braid_builder() {
        let e = parse("exp(1, g1*g0*g2*g0)").unwrap();
        let Expr::Exp(1, body) = e else { panic!("{e:?}") };
        assert!(matches!(*body, Expr::Bin(BinOp::Mul, ..)));
        assert!(matches!(parse("exp(-3, g1*g2)").unwrap(), Expr::Exp(-3, _)));
    }

    #[test]
    fn precedence() {
        // ^ over * over +, ox loosest
        let e = parse("g1 + g2*g3^2").unwrap();
        let Expr::Bin(BinOp::Add, _, rhs) = e else { panic!() };
        let Expr::Bin(BinOp::Mul, _, p) = *rhs else { panic!() };
        assert!(matches!(*p, Expr::Pow(_, 2)));
        assert!(matches!(parse("g1*g0 ox g3 + g2").unwrap(), Expr::Ox(ref v) if v.len() == 2));
        assert!(matches!(parse("-g1^2").unwrap(), Expr::Neg(_)));
    }

    #[test]
    fn literal_forms() {
        assert_eq!(parse("1/2√2").unwrap(), Expr::Lit(Scalar::ratio(1, 2) * Scalar::sqrt2()));
        assert_eq!(parse("rt2").unwrap(), Expr::Lit(Scalar::sqrt2()));
        assert_eq!(parse("0.25").unwrap(), Expr::Lit(Scalar::ratio(1, 4)));
    }

    #[test]
    fn mixing_tensor_and_ox_arity_is_rejected() {
        let err = parse("tensor(g3*g0, g1*g0)*P ox P").unwrap_err();
        assert_eq!(err.offset, 20);
        assert!(err.message.contains("2 and 1"), "{err}");
        assert!(parse("tensor(g3*g0, g1*g0)*(P ox P)").is_ok());
        assert!(parse("Phi+ + g1").is_err());
        assert!(parse("H(1, 2, g1)").is_err());
    }

    #[test]
    fn diagnostics() {
        let e = parse("g1 +").unwrap_err();
        assert_eq!(e.offset, 4);
        assert!(!e.expected.is_empty());
        assert_eq!(parse("(g1").unwrap_err().expected, vec!["')'"]);
        assert!(parse("g1^100").is_err());
        assert!(parse("g1^99999999999999999999999").is_err());
        assert!(parse(&"(".repeat(10_000)).is_err());
        assert!(parse(&"-".repeat(10_000)).is_err());
        assert!(parse("grade(Phi+, 2)").is_err());
        assert!(parse("rev(g1, g2)").is_err());
    }
}
