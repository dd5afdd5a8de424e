//! Recursive descent over
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' ['-'] int)?
//! atom   := rational | symbol | generator | '[' expr ',' expr ']'
//!         | 'T(' expr ',' expr ')' | '(' expr ')'
//! ```

use super::ast::{Generator, Kind, Node, Symbol};
use super::lexer::{tokenize, Tok, Token};
use super::ExprError;
use crate::tetrahedron::{BoxGen, GenSym, Partition22};

struct Parser {
    tokens: Vec<Token>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.at]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.at].clone();
        if t.tok != Tok::End {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek().tok == Tok::Punct(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn unexpected(&self, expected: &str) -> ExprError {
        let t = self.peek();
        ExprError::syntax(t.pos, expected, t.tok.describe())
    }

    fn expect(&mut self, c: char) -> Result<(), ExprError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{c}`")))
        }
    }

    fn expr(&mut self) -> Result<Node, ExprError> {
        let mut lhs = self.term()?;
        loop {
            let pos = self.peek().pos;
            if self.eat('+') {
                lhs = Node::new(Kind::Add(Box::new(lhs), Box::new(self.term()?)), pos);
            } else if self.eat('-') {
                lhs = Node::new(Kind::Sub(Box::new(lhs), Box::new(self.term()?)), pos);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Node, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            let pos = self.peek().pos;
            if !self.eat('*') {
                return Ok(lhs);
            }
            lhs = Node::new(Kind::Mul(Box::new(lhs), Box::new(self.unary()?)), pos);
        }
    }

    fn unary(&mut self) -> Result<Node, ExprError> {
        let pos = self.peek().pos;
        if self.eat('-') {
            return Ok(Node::new(Kind::Neg(Box::new(self.unary()?)), pos));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Node, ExprError> {
        let base = self.atom()?;
        let pos = self.peek().pos;
        if !self.eat('^') {
            return Ok(base);
        }
        let negative = self.eat('-');
        let t = self.peek().clone();
        let Tok::Int(digits) = &t.tok else {
            return Err(self.unexpected("an integer exponent"));
        };
        let magnitude: i64 = digits.parse().map_err(|_| {
            ExprError::syntax(t.pos, "an exponent that fits in 64 bits", t.tok.describe())
        })?;
        self.bump();
        let exp = if negative { -magnitude } else { magnitude };
        Ok(Node::new(Kind::Pow(Box::new(base), exp), pos))
    }

    fn index(&mut self) -> Result<u8, ExprError> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Int(d) if d.len() == 1 && d.as_bytes()[0] <= b'3' => {
                self.bump();
                Ok(d.as_bytes()[0] - b'0')
            }
            _ => Err(self.unexpected("an index 0..3")),
        }
    }

    fn pair(&mut self) -> Result<(u8, u8), ExprError> {
        self.expect('[')?;
        let i = self.index()?;
        self.expect(',')?;
        let j = self.index()?;
        self.expect(']')?;
        Ok((i, j))
    }

    fn partition(&mut self) -> Result<Partition22, ExprError> {
        self.expect('[')?;
        let start = self.peek().pos;
        let mut text = String::new();
        for sep in ["", "|"] {
            if !sep.is_empty() {
                self.expect('|')?;
                text.push('|');
            }
            match self.bump().tok {
                Tok::Int(d) => text.push_str(&d),
                other => {
                    return Err(ExprError::syntax(
                        start,
                        "a partition such as `01|23`",
                        other.describe(),
                    ))
                }
            }
        }
        self.expect(']')?;
        Partition22::parse(&text).ok_or_else(|| {
            ExprError::syntax(
                start,
                "a partition of 0..3 into two pairs",
                format!("`{text}`"),
            )
        })
    }

    fn generator(&mut self, name: &str, pos: usize) -> Result<Node, ExprError> {
        let invalid = |e: crate::tetrahedron::TetraError| {
            ExprError::syntax(pos, "a valid generator", e.to_string())
        };
        let g = match name {
            "x" => {
                let (i, j) = self.pair()?;
                Generator::Box(BoxGen::new(i, j).map_err(invalid)?)
            }
            "Xh" => {
                let (i, j) = self.pair()?;
                Generator::Hat(GenSym::x(i, j).map_err(invalid)?)
            }
            _ => Generator::Hat(GenSym::C(self.partition()?)),
        };
        Ok(Node::new(Kind::Gen(g), pos))
    }

    fn atom(&mut self) -> Result<Node, ExprError> {
        let t = self.peek().clone();
        let pos = t.pos;
        match t.tok {
            Tok::Int(d) => {
                self.bump();
                let n: num_bigint::BigInt = d.parse().expect("digits");
                Ok(Node::new(Kind::Rational(n.into()), pos))
            }
            Tok::Ratio(q) => {
                self.bump();
                Ok(Node::new(Kind::Rational(q), pos))
            }
            Tok::Punct('(') => {
                self.bump();
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(inner)
            }
            Tok::Punct('[') => {
                self.bump();
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(']')?;
                Ok(Node::new(Kind::Bracket(Box::new(a), Box::new(b)), pos))
            }
            Tok::Ident(name) => {
                self.bump();
                let next_is = |p: &Parser, c| p.peek().tok == Tok::Punct(c);
                match name.as_str() {
                    "T" if next_is(self, '(') => {
                        self.bump();
                        let a = self.expr()?;
                        self.expect(',')?;
                        let b = self.expr()?;
                        self.expect(')')?;
                        Ok(Node::new(Kind::Tensor(Box::new(a), Box::new(b)), pos))
                    }
                    "x" | "Xh" | "Ch" if next_is(self, '[') => self.generator(&name, pos),
                    _ => match Symbol::lookup(&name) {
                        Some(s) => Ok(Node::new(Kind::Symbol(s), pos)),
                        None => Err(ExprError::syntax(
                            pos,
                            "a known symbol",
                            format!("`{name}`"),
                        )),
                    },
                }
            }
            _ => Err(self.unexpected("an expression")),
        }
    }
}

/// Parses without type checking.
pub fn parse_untyped(text: &str) -> Result<Node, ExprError> {
    let mut p = Parser {
        tokens: tokenize(text)?,
        at: 0,
    };
    let node = p.expr()?;
    if p.peek().tok != Tok::End {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(node)
}
