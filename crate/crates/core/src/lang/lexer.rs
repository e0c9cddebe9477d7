use super::ParseError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    /// Rational or decimal literal, with an attached `√2`/`rt2` suffix.
    Num { text: String, surd: bool },
    /// A bare `√2` or `rt2`.
    Surd,
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
    Ox,
    End,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Num { text, .. } => format!("number {text:?}"),
            Tok::Surd => "√2".into(),
            Tok::Ident(s) => format!("name {s:?}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::Ox => "'ox'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub tok: Tok,
    pub offset: usize,
}

fn surd_len(rest: &str) -> Option<usize> {
    ["√2", "rt2"].iter().find(|s| rest.starts_with(**s)).map(|s| s.len())
}

pub(crate) fn lex(src: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < src.len() {
        let rest = &src[i..];
        let c = rest.chars().next().expect("non-empty");
        if c.is_whitespace() {
            i += c.len_utf8();
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_digit() || (c == '.' && rest[1..].starts_with(|d: char| d.is_ascii_digit())) {
            let mut end = rest.find(|d: char| !d.is_ascii_digit()).unwrap_or(rest.len());
            let tail = &rest[end..];
            if let Some(t) = tail.strip_prefix('/') {
                let digits = t.find(|d: char| !d.is_ascii_digit()).unwrap_or(t.len());
                if digits == 0 {
                    return Err(ParseError::new(i + end + 1, "missing denominator").expecting(&["digits"]));
                }
                end += 1 + digits;
            } else if let Some(t) = tail.strip_prefix('.') {
                end += 1 + t.find(|d: char| !d.is_ascii_digit()).unwrap_or(t.len());
            }
            let text = rest[..end].to_string();
            let surd = surd_len(&rest[end..]);
            i += end + surd.unwrap_or(0);
            Tok::Num { text, surd: surd.is_some() }
        } else if let Some(n) = surd_len(rest).filter(|_| !rest.starts_with("rt2") || !continues_ident(&rest[3..])) {
            i += n;
            Tok::Surd
        } else if c.is_alphabetic() || c == '_' {
            let end = rest.find(|d: char| !(d.is_alphanumeric() || d == '_')).unwrap_or(rest.len());
            let mut name = rest[..end].to_string();
            i += end;
            // `Phi+`, `Psi-` carry their sign
            if (name == "Phi" || name == "Psi") && (src[i..].starts_with('+') || src[i..].starts_with('-')) {
                name.push_str(&src[i..i + 1]);
                i += 1;
            }
            if name == "ox" {
                Tok::Ox
            } else {
                Tok::Ident(name)
            }
        } else {
            i += c.len_utf8();
            match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                ',' => Tok::Comma,
                '⊗' => Tok::Ox,
                '/' => return Err(ParseError::new(start, "'/' is only allowed inside rational literals")),
                _ => return Err(ParseError::new(start, format!("unexpected character {c:?}"))),
            }
        };
        out.push(Token { tok, offset: start });
    }
    out.push(Token { tok: Tok::End, offset: src.len() });
    Ok(out)
}

fn continues_ident(rest: &str) -> bool {
    rest.starts_with(|d: char| d.is_alphanumeric() || d == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<Tok> {
        lex(s).unwrap().into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn literals() {
        assert_eq!(
            toks("1/2√2*g1"),
            vec![Tok::Num { text: "1/2".into(), surd: true }, Tok::Star, Tok::Ident("g1".into()), Tok::End]
        );
        assert_eq!(toks("3rt2"), vec![Tok::Num { text: "3".into(), surd: true }, Tok::End]);
        assert_eq!(toks("0.25 rt2"), vec![Tok::Num { text: "0.25".into(), surd: false }, Tok::Surd, Tok::End]);
        assert_eq!(toks("rt2x"), vec![Tok::Ident("rt2x".into()), Tok::End]);
    }

    #[test]
    fn names_and_operators() {
        assert_eq!(
            toks("Phi+ + Psi- ox g0^2"),
            vec![
                Tok::Ident("Phi+".into()),
                Tok::Plus,
                Tok::Ident("Psi-".into()),
                Tok::Ox,
                Tok::Ident("g0".into()),
                Tok::Caret,
                Tok::Num { text: "2".into(), surd: false },
                Tok::End
            ]
        );
        assert_eq!(toks("a⊗b")[1], Tok::Ox);
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(lex("1/").unwrap_err().offset, 2);
        assert_eq!(lex("g1 / g2").unwrap_err().offset, 3);
        assert_eq!(lex("g1 $").unwrap_err().offset, 3);
    }
}
