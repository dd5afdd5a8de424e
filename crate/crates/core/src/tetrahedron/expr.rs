//! Formal Lie expressions over a generator alphabet, their normal form as
//! integer combinations of bracket words, and evaluation into `L` or `L̂`.

use std::collections::BTreeMap;
use std::fmt;

use crate::lie::LieElement;
use crate::scalar::int;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr<G> {
    Gen(G),
    Scale(i64, Box<Expr<G>>),
    Sum(Vec<Expr<G>>),
    Bracket(Box<Expr<G>>, Box<Expr<G>>),
}

impl<G> Expr<G> {
    pub fn zero() -> Self {
        Expr::Sum(Vec::new())
    }

    pub fn gen(g: G) -> Self {
        Expr::Gen(g)
    }

    pub fn scaled(k: i64, e: Expr<G>) -> Self {
        Expr::Scale(k, Box::new(e))
    }

    pub fn sum(terms: Vec<Expr<G>>) -> Self {
        Expr::Sum(terms)
    }

    pub fn bracket(a: Expr<G>, b: Expr<G>) -> Self {
        Expr::Bracket(Box::new(a), Box::new(b))
    }

    /// Bracket nesting depth.
    pub fn depth(&self) -> usize {
        match self {
            Expr::Gen(_) => 0,
            Expr::Scale(_, e) => e.depth(),
            Expr::Sum(ts) => ts.iter().map(|t| t.depth()).max().unwrap_or(0),
            Expr::Bracket(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    pub fn generators(&self) -> Vec<&G> {
        let mut out = Vec::new();
        self.collect_generators(&mut out);
        out
    }

    fn collect_generators<'a>(&'a self, out: &mut Vec<&'a G>) {
        match self {
            Expr::Gen(g) => out.push(g),
            Expr::Scale(_, e) => e.collect_generators(out),
            Expr::Sum(ts) => ts.iter().for_each(|t| t.collect_generators(out)),
            Expr::Bracket(a, b) => {
                a.collect_generators(out);
                b.collect_generators(out);
            }
        }
    }

    pub fn try_map<H, E>(&self, f: &impl Fn(&G) -> Result<H, E>) -> Result<Expr<H>, E> {
        Ok(match self {
            Expr::Gen(g) => Expr::Gen(f(g)?),
            Expr::Scale(k, e) => Expr::Scale(*k, Box::new(e.try_map(f)?)),
            Expr::Sum(ts) => Expr::Sum(ts.iter().map(|t| t.try_map(f)).collect::<Result<_, _>>()?),
            Expr::Bracket(a, b) => Expr::Bracket(Box::new(a.try_map(f)?), Box::new(b.try_map(f)?)),
        })
    }

    /// Replaces generators by their images and evaluates exactly.
    pub fn evaluate<L, E>(&self, images: &impl Fn(&G) -> Result<L, E>) -> Result<L, E>
    where
        L: LieElement,
    {
        Ok(match self {
            Expr::Gen(g) => images(g)?,
            Expr::Scale(k, e) => e.evaluate(images)?.scale(&int(*k)),
            Expr::Sum(ts) => {
                let mut acc = L::zero();
                for t in ts {
                    acc = acc.add(&t.evaluate(images)?);
                }
                acc
            }
            Expr::Bracket(a, b) => a.evaluate(images)?.bracket(&b.evaluate(images)?),
        })
    }
}

impl<G: Ord + Clone> Expr<G> {
    /// Flattens sums, expands brackets bilinearly, merges coefficients.
    pub fn normalize(&self) -> Formal<G> {
        match self {
            Expr::Gen(g) => Formal::word(Word::Gen(g.clone())),
            Expr::Scale(k, e) => e.normalize().scale(*k),
            Expr::Sum(ts) => {
                let mut acc = Formal::zero();
                for t in ts {
                    acc.add_assign(&t.normalize(), 1);
                }
                acc
            }
            Expr::Bracket(a, b) => a.normalize().bracket(&b.normalize()),
        }
    }
}

/// A bracket word: a generator or a bracket of two words.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Word<G> {
    Gen(G),
    Bracket(Box<Word<G>>, Box<Word<G>>),
}

/// An integer combination of bracket words, zero coefficients dropped.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Formal<G: Ord> {
    terms: BTreeMap<Word<G>, i64>,
}

impl<G: Ord + Clone> Formal<G> {
    pub fn zero() -> Self {
        Formal {
            terms: BTreeMap::new(),
        }
    }

    pub fn word(w: Word<G>) -> Self {
        let mut f = Formal::zero();
        f.add_word(w, 1);
        f
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word<G>, i64)> {
        self.terms.iter().map(|(w, c)| (w, *c))
    }

    pub fn add_word(&mut self, w: Word<G>, k: i64) {
        if k == 0 {
            return;
        }
        let entry = self.terms.entry(w.clone()).or_insert(0);
        *entry += k;
        if *entry == 0 {
            self.terms.remove(&w);
        }
    }

    pub fn add_assign(&mut self, other: &Formal<G>, k: i64) {
        for (w, c) in &other.terms {
            self.add_word(w.clone(), c * k);
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Formal::zero();
        out.add_assign(self, k);
        out
    }

    pub fn bracket(&self, other: &Formal<G>) -> Self {
        let mut out = Formal::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_word(
                    Word::Bracket(Box::new(a.clone()), Box::new(b.clone())),
                    ca * cb,
                );
            }
        }
        out
    }

    /// Multiplies by `-1` if needed so the first coefficient is positive.
    pub fn sign_normalized(&self) -> Self {
        match self.terms.values().next() {
            Some(c) if *c < 0 => self.scale(-1),
            _ => self.clone(),
        }
    }
}

impl<G: fmt::Display> fmt::Display for Word<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::Gen(g) => write!(f, "{g}"),
            Word::Bracket(a, b) => write!(f, "[{a}, {b}]"),
        }
    }
}

impl<G: fmt::Display + Ord> fmt::Display for Formal<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (w, c)) in self.terms.iter().enumerate() {
            let magnitude = c.unsigned_abs();
            match (n, *c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if magnitude != 1 {
                write!(f, "{magnitude}*")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

impl<G: fmt::Display> fmt::Display for Expr<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Gen(g) => write!(f, "{g}"),
            Expr::Scale(k, e) => match **e {
                Expr::Sum(_) => write!(f, "{k}*({e})"),
                _ => write!(f, "{k}*{e}"),
            },
            Expr::Sum(ts) if ts.is_empty() => f.write_str("0"),
            Expr::Sum(ts) => {
                for (n, t) in ts.iter().enumerate() {
                    if n > 0 {
                        f.write_str(" + ")?;
                    }
                    write!(f, "{t}")?;
                }
                Ok(())
            }
            Expr::Bracket(a, b) => write!(f, "[{a}, {b}]"),
        }
    }
}
