use num_bigint::BigInt;
use num_rational::BigRational;

use super::ExprError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    /// Digits, kept verbatim so `Ch[01|23]` can see leading zeros.
    Int(String),
    /// `n/d` written without spaces.
    Ratio(BigRational),
    /// Identifier, including trailing primes (`c'`, `t′′`).
    Ident(String),
    Punct(char),
    End,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Int(s) => format!("number `{s}`"),
            Tok::Ratio(q) => format!("number `{q}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Punct(c) => format!("`{c}`"),
            Tok::End => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    /// Character offset into the input.
    pub pos: usize,
}

const PUNCT: &str = "+-*^()[],|";

pub fn tokenize(text: &str) -> Result<Vec<Token>, ExprError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let num: String = chars[start..i].iter().collect();
            let has_denominator =
                chars.get(i) == Some(&'/') && chars.get(i + 1).is_some_and(char::is_ascii_digit);
            if has_denominator {
                let d_start = i + 1;
                i = d_start;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let den: String = chars[d_start..i].iter().collect();
                let den: BigInt = den.parse().expect("digits");
                if den == BigInt::from(0) {
                    return Err(ExprError::syntax(
                        start,
                        "a nonzero denominator",
                        format!("`{num}/0`"),
                    ));
                }
                let q = BigRational::new(num.parse().expect("digits"), den);
                out.push(Token {
                    tok: Tok::Ratio(q),
                    pos: start,
                });
            } else {
                out.push(Token {
                    tok: Tok::Int(num),
                    pos: start,
                });
            }
        } else if c.is_alphabetic() {
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            while i < chars.len() && matches!(chars[i], '\'' | '′' | '″') {
                i += 1;
            }
            let ident: String = chars[start..i].iter().collect();
            out.push(Token {
                tok: Tok::Ident(ident),
                pos: start,
            });
        } else if PUNCT.contains(c) {
            out.push(Token {
                tok: Tok::Punct(c),
                pos: start,
            });
            i += 1;
        } else {
            return Err(ExprError::syntax(start, "an expression", format!("`{c}`")));
        }
    }
    out.push(Token {
        tok: Tok::End,
        pos: chars.len(),
    });
    Ok(out)
}
