//! Finite enumeration of every defining relation instance of the three
//! presentations, plus the odd-triple consequence of the extended one.

use std::fmt;

use super::combinatorics::{orbit_partition, parity, partition_of_pair, Parity, Partition22, Perm};
use super::expr::{Expr, Formal};
use super::generators::{
    ordered_pairs, ordered_quadruples, ordered_triples, A4Gen, BoxGen, GenSym,
};

/// Which presentation a relation list is drawn from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Presentation {
    /// The tetrahedron algebra, generators `x_{i,j}`.
    Tetrahedron,
    /// Its central extension, generators `X_{i,j}`, `C_p`.
    Extended,
    /// Odd-triple bracket identities derived in the central extension.
    OddTriples,
    /// The `A4`-indexed form of the central extension.
    AlternatingIndexed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Clause {
    /// Tetrahedron algebra, clause number.
    Tetra(u8),
    /// Central extension, clause number.
    Ext(u8),
    OddTriple,
    /// `A4`-indexed form, clause number.
    Alt(u8),
}

fn roman(n: u8) -> &'static str {
    ["?", "i", "ii", "iii", "iv", "v"]
        .get(n as usize)
        .copied()
        .unwrap_or("?")
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Clause::Tetra(n) => write!(f, "tetra-{}", roman(*n)),
            Clause::Ext(n) => write!(f, "ext-{}", roman(*n)),
            Clause::OddTriple => write!(f, "odd-triple"),
            Clause::Alt(n) => write!(f, "alt-{}", roman(*n)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationInstance<G> {
    pub clause: Clause,
    /// Human-readable parameters, e.g. `0,1,2`.
    pub params: String,
    pub lhs: Expr<G>,
    pub rhs: Expr<G>,
}

impl<G> RelationInstance<G> {
    fn new(clause: Clause, params: String, lhs: Expr<G>, rhs: Expr<G>) -> Self {
        Self {
            clause,
            params,
            lhs,
            rhs,
        }
    }

    pub fn id(&self) -> String {
        format!("{}({})", self.clause, self.params)
    }

    pub fn try_map<H, E>(&self, f: &impl Fn(&G) -> Result<H, E>) -> Result<RelationInstance<H>, E> {
        Ok(RelationInstance {
            clause: self.clause,
            params: self.params.clone(),
            lhs: self.lhs.try_map(f)?,
            rhs: self.rhs.try_map(f)?,
        })
    }
}

impl<G: Ord + Clone> RelationInstance<G> {
    /// Normalized `(lhs, rhs)` pair used for formal set comparisons.
    pub fn formal_key(&self) -> (Formal<G>, Formal<G>) {
        (self.lhs.normalize(), self.rhs.normalize())
    }
}

impl<G: fmt::Display> fmt::Display for RelationInstance<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

fn g<G>(x: G) -> Expr<G> {
    Expr::gen(x)
}

/// `[a, [a, [a, b]]] = 4 [a, b]`.
fn dolan_grady<G: Clone>(a: G, b: G) -> (Expr<G>, Expr<G>) {
    let ab = Expr::bracket(g(a.clone()), g(b));
    let lhs = Expr::bracket(g(a.clone()), Expr::bracket(g(a), ab.clone()));
    (lhs, Expr::scaled(4, ab))
}

/// `[a, b] = 2a + 2b (+ extra)`.
fn pair_relation<G: Clone>(a: G, b: G, extra: Option<G>) -> (Expr<G>, Expr<G>) {
    let mut rhs = vec![Expr::scaled(2, g(a.clone())), Expr::scaled(2, g(b.clone()))];
    if let Some(c) = extra {
        rhs.push(Expr::scaled(2, g(c)));
    }
    (Expr::bracket(g(a), g(b)), Expr::sum(rhs))
}

pub fn tetrahedron_relations() -> Vec<RelationInstance<BoxGen>> {
    let x = |i, j| BoxGen { i, j };
    let mut out = Vec::new();
    for (i, j) in ordered_pairs().into_iter().filter(|(i, j)| i < j) {
        out.push(RelationInstance::new(
            Clause::Tetra(1),
            format!("{i},{j}"),
            Expr::sum(vec![g(x(i, j)), g(x(j, i))]),
            Expr::zero(),
        ));
    }
    for (i, j, k) in ordered_triples() {
        let (lhs, rhs) = pair_relation(x(i, j), x(j, k), None);
        out.push(RelationInstance::new(
            Clause::Tetra(2),
            format!("{i},{j},{k}"),
            lhs,
            rhs,
        ));
    }
    for (i, j, k, l) in ordered_quadruples() {
        let (lhs, rhs) = dolan_grady(x(i, j), x(k, l));
        out.push(RelationInstance::new(
            Clause::Tetra(3),
            format!("{i},{j},{k},{l}"),
            lhs,
            rhs,
        ));
    }
    out
}

fn cp(i: u8, j: u8) -> GenSym {
    GenSym::C(partition_of_pair(i, j).expect("distinct indices"))
}

pub fn extended_relations() -> Vec<RelationInstance<GenSym>> {
    let x = GenSym::X;
    let mut out = Vec::new();
    for p in Partition22::ALL {
        for gen in GenSym::all() {
            out.push(RelationInstance::new(
                Clause::Ext(1),
                format!("{p}; {gen}"),
                Expr::bracket(g(GenSym::C(p)), g(gen)),
                Expr::zero(),
            ));
        }
    }
    out.push(RelationInstance::new(
        Clause::Ext(2),
        "sum".to_string(),
        Expr::sum(Partition22::ALL.iter().map(|p| g(GenSym::C(*p))).collect()),
        Expr::zero(),
    ));
    for (i, j) in ordered_pairs() {
        out.push(RelationInstance::new(
            Clause::Ext(3),
            format!("{i},{j}"),
            Expr::sum(vec![g(x(i, j)), g(x(j, i))]),
            g(cp(i, j)),
        ));
    }
    for (i, j, k) in ordered_triples() {
        if parity(i, j, k).expect("distinct") == Parity::Even {
            let (lhs, rhs) = pair_relation(x(i, j), x(j, k), None);
            out.push(RelationInstance::new(
                Clause::Ext(4),
                format!("{i},{j},{k}"),
                lhs,
                rhs,
            ));
        }
    }
    for (i, j, k, l) in ordered_quadruples() {
        let (lhs, rhs) = dolan_grady(x(i, j), x(k, l));
        out.push(RelationInstance::new(
            Clause::Ext(5),
            format!("{i},{j},{k},{l}"),
            lhs,
            rhs,
        ));
    }
    out
}

/// `[X_{i,j}, X_{j,k}] = 2X_{i,j} + 2X_{j,k} + 2C_p` for odd `(i,j,k)`, with
/// `p` containing `{i,k}`.
pub fn odd_triple_relations() -> Vec<RelationInstance<GenSym>> {
    ordered_triples()
        .into_iter()
        .filter(|(i, j, k)| parity(*i, *j, *k).expect("distinct") == Parity::Odd)
        .map(|(i, j, k)| {
            let (lhs, rhs) = pair_relation(GenSym::X(i, j), GenSym::X(j, k), Some(cp(i, k)));
            RelationInstance::new(Clause::OddTriple, format!("{i},{j},{k}"), lhs, rhs)
        })
        .collect()
}

/// How a product `αβ` of permutations is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    /// Right action: `αβ` applies `α` first, then `β`.
    RightAction,
    /// Left action: `αβ` applies `β` first, then `α`.
    LeftAction,
}

impl Convention {
    pub fn product(self, a: Perm, b: Perm) -> Perm {
        match self {
            Convention::RightAction => Perm::then(a, b),
            Convention::LeftAction => Perm::then(b, a),
        }
    }

    pub fn opposite(self) -> Self {
        match self {
            Convention::RightAction => Convention::LeftAction,
            Convention::LeftAction => Convention::RightAction,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Convention::RightAction => "right-action",
            Convention::LeftAction => "left-action",
        }
    }
}

pub fn alternating_relations(conv: Convention) -> Vec<RelationInstance<A4Gen>> {
    let a4 = Perm::alternating();
    let n_prime = Perm::klein_nonidentity();
    let zeta = Perm::ZETA;
    let theta = Perm::THETA;
    let x = A4Gen::X;
    let c = A4Gen::C;
    let mut gens: Vec<A4Gen> = a4.iter().map(|a| x(*a)).collect();
    gens.extend(n_prime.iter().map(|e| c(*e)));

    let mut out = Vec::new();
    for eta in n_prime {
        for gen in &gens {
            out.push(RelationInstance::new(
                Clause::Alt(1),
                format!("{eta}; {gen}"),
                Expr::bracket(g(c(eta)), g(*gen)),
                Expr::zero(),
            ));
        }
    }
    out.push(RelationInstance::new(
        Clause::Alt(2),
        "sum".to_string(),
        Expr::sum(n_prime.iter().map(|e| g(c(*e))).collect()),
        Expr::zero(),
    ));
    for &alpha in &a4 {
        let conj = conv.product(conv.product(alpha.inverse(), zeta), alpha);
        out.push(RelationInstance::new(
            Clause::Alt(3),
            format!("{alpha}"),
            Expr::sum(vec![g(x(alpha)), g(x(conv.product(zeta, alpha)))]),
            g(c(conj)),
        ));
    }
    for &alpha in &a4 {
        let (lhs, rhs) = pair_relation(x(alpha), x(conv.product(theta, alpha)), None);
        out.push(RelationInstance::new(
            Clause::Alt(4),
            format!("{alpha}"),
            lhs,
            rhs,
        ));
    }
    for &alpha in &a4 {
        for eta in n_prime.iter().filter(|e| **e != zeta) {
            let (lhs, rhs) = dolan_grady(x(alpha), x(conv.product(*eta, alpha)));
            out.push(RelationInstance::new(
                Clause::Alt(5),
                format!("{alpha}; {eta}"),
                lhs,
                rhs,
            ));
        }
    }
    out
}

/// `X_α -> X_{α(0),α(1)}`, `C_η -> C_[η]`.
pub fn a4_generator_map(gen: &A4Gen) -> Result<GenSym, super::TetraError> {
    match *gen {
        A4Gen::X(alpha) => {
            if !alpha.is_even() {
                return Err(super::TetraError::NotEven(alpha));
            }
            Ok(GenSym::X(alpha.apply(0), alpha.apply(1)))
        }
        A4Gen::C(eta) => Ok(GenSym::C(orbit_partition(eta)?)),
    }
}
