//! Brute-force closure oracle shared by integration tests.
//!
//! Deliberately independent of `subalgebra_lab`: its own sparse integer
//! coordinates, elimination of high-degree coordinates by integer
//! cross-multiplication, and rank by fraction-free (Bareiss) elimination.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use sl2loop::arith_a::AMonomial;
use sl2loop::central_extension::{CentralVec, LHatElem};
use sl2loop::sl2::Equitable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Key {
    Loop(usize, AMonomial),
    C,
    Cp,
}

impl Key {
    fn degree(self) -> u32 {
        match self {
            Key::Loop(_, m) => m.degree(),
            _ => 0,
        }
    }
}

type Sparse = BTreeMap<Key, BigInt>;

fn primitive(mut v: Sparse) -> Sparse {
    v.retain(|_, x| !x.is_zero());
    let g = v.values().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() {
        for x in v.values_mut() {
            *x /= &g;
        }
    }
    v
}

fn to_sparse(u: &LHatElem) -> Sparse {
    let mut entries = Vec::new();
    for b in Equitable::ALL {
        for (m, c) in u.loop_part.coeff(b).terms() {
            entries.push((Key::Loop(b.index(), m), c.clone()));
        }
    }
    entries.push((Key::C, u.central.c.clone()));
    entries.push((Key::Cp, u.central.cp.clone()));
    let lcm = entries
        .iter()
        .fold(BigInt::from(1), |l, (_, c)| l.lcm(c.denom()));
    let v = entries
        .into_iter()
        .map(|(k, c)| {
            (
                k,
                (c * num_rational::BigRational::from_integer(lcm.clone())).to_integer(),
            )
        })
        .collect();
    primitive(v)
}

/// Rank by Bareiss fraction-free elimination on a dense integer matrix.
fn bareiss_rank(vectors: &[Sparse]) -> usize {
    let keys: BTreeSet<Key> = vectors.iter().flat_map(|v| v.keys().copied()).collect();
    let keys: Vec<Key> = keys.into_iter().collect();
    let mut m: Vec<Vec<BigInt>> = vectors
        .iter()
        .map(|v| {
            keys.iter()
                .map(|k| v.get(k).cloned().unwrap_or_default())
                .collect()
        })
        .collect();
    let (rows, cols) = (m.len(), keys.len());
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let val = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = val / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// Vectors spanning `span(vectors) ∩ {degree <= cap}`.
fn low_part(mut vectors: Vec<Sparse>, cap: u32) -> Vec<Sparse> {
    loop {
        let high = vectors
            .iter()
            .flat_map(|v| v.keys().copied())
            .filter(|k| k.degree() > cap)
            .max();
        let Some(key) = high else { return vectors };
        let p = vectors.iter().position(|v| v.contains_key(&key)).unwrap();
        let pivot = vectors.swap_remove(p);
        let a = pivot[&key].clone();
        vectors = vectors
            .into_iter()
            .map(|v| match v.get(&key).cloned() {
                None => v,
                Some(b) => {
                    let mut out: Sparse = v.iter().map(|(k, x)| (*k, x * &a)).collect();
                    for (k, x) in &pivot {
                        *out.entry(*k).or_default() -= x * &b;
                    }
                    primitive(out)
                }
            })
            .filter(|v| !v.is_empty())
            .collect();
    }
}

fn independent(vectors: Vec<Sparse>) -> Vec<Sparse> {
    let mut kept: Vec<Sparse> = Vec::new();
    for v in vectors {
        kept.push(v);
        if bareiss_rank(&kept) < kept.len() {
            kept.pop();
        }
    }
    kept
}

pub struct OracleSpan {
    vectors: Vec<Sparse>,
}

impl OracleSpan {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }
}

/// Repeated naive bracketing of the raw spanning list, keeping the part of
/// degree `<= cap`, until the rank stops growing.
pub fn oracle_closure(generators: &[LHatElem], cap: u32) -> OracleSpan {
    let mut elems: Vec<LHatElem> = generators.to_vec();
    let mut span = independent(elems.iter().map(to_sparse).collect());
    loop {
        let mut raw: Vec<LHatElem> = elems.clone();
        for (i, a) in elems.iter().enumerate() {
            for b in &elems[i + 1..] {
                raw.push(a.bracket(b));
            }
        }
        let low = low_part(raw.iter().map(to_sparse).collect(), cap);
        let mut candidates = span.clone();
        candidates.extend(low);
        let next = independent(candidates);
        if next.len() == span.len() {
            return OracleSpan { vectors: span };
        }
        span = next;
        elems = span.iter().map(from_sparse).collect();
    }
}

fn from_sparse(v: &Sparse) -> LHatElem {
    use sl2loop::arith_a::AElem;
    use sl2loop::central_extension::LElem;
    let q = |x: &BigInt| num_rational::BigRational::from_integer(x.clone());
    let mut loop_part = LElem::zero();
    let mut central = CentralVec::zero();
    for (k, x) in v {
        match k {
            Key::Loop(b, m) => {
                *loop_part.coeff_mut(Equitable::ALL[*b]) += &AElem::monomial(*m, q(x))
            }
            Key::C => central.c = q(x),
            Key::Cp => central.cp = q(x),
        }
    }
    LHatElem::new(loop_part, central)
}

/// Rank of the union of several spans.
pub fn oracle_sum_dim(spans: &[&OracleSpan]) -> usize {
    let all: Vec<Sparse> = spans
        .iter()
        .flat_map(|s| s.vectors.iter().cloned())
        .collect();
    bareiss_rank(&all)
}

pub fn oracle_center() -> OracleSpan {
    OracleSpan {
        vectors: vec![
            to_sparse(&CentralVec::c().into()),
            to_sparse(&CentralVec::c_prime().into()),
        ],
    }
}
