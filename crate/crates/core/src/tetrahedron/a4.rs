//! Matching the `A4`-indexed presentation against the `X_{i,j}`, `C_p` one.
//!
//! The reading of products `αβ` is not fixed a priori, so the match is run
//! under the right-action reading first and retried under the left-action
//! reading if it fails.
//!
//! Two comparisons are made on formal relation sets:
//!
//! * literal: each translated relation, after flattening and sorting, is an
//!   instance of the extended presentation (or of the odd-triple identities),
//!   and the translated set equals the extended presentation's set;
//! * reduced: relations are rewritten modulo the linear relations (the sum of
//!   the `C_p`, `X_{i,j} + X_{j,i} = C_p`, centrality), brackets oriented by
//!   antisymmetry, and compared up to sign. In this form an even-triple
//!   relation and the odd-triple identity on the reversed triple coincide,
//!   so the translated set equals the extended-plus-odd-triple set.

use std::collections::BTreeSet;

use super::combinatorics::{partition_of_pair, Partition22};
use super::expr::{Formal, Word};
use super::generators::GenSym;
use super::relations::{
    a4_generator_map, alternating_relations, extended_relations, odd_triple_relations, Convention,
    RelationInstance,
};
use super::verify::{sigma_hat_image, verify_instances};
use super::TetraError;
use crate::par::Execution;
use crate::report::{InstanceResult, VerificationReport};

type Key = (Formal<GenSym>, Formal<GenSym>);

fn reduce_gen(g: GenSym) -> Formal<GenSym> {
    let word = |g| Word::Gen(g);
    let mut out = Formal::zero();
    match g {
        GenSym::X(i, j) if i > j => {
            let p = partition_of_pair(i, j).expect("distinct");
            out.add_assign(&reduce_gen(GenSym::C(p)), 1);
            out.add_word(word(GenSym::X(j, i)), -1);
        }
        GenSym::C(p) if p == Partition22::ALL[2] => {
            out.add_word(word(GenSym::C(Partition22::ALL[0])), -1);
            out.add_word(word(GenSym::C(Partition22::ALL[1])), -1);
        }
        other => out.add_word(word(other), 1),
    }
    out
}

fn is_central_word(w: &Word<GenSym>) -> bool {
    matches!(w, Word::Gen(GenSym::C(_)))
}

fn reduce_word(w: &Word<GenSym>) -> Formal<GenSym> {
    match w {
        Word::Gen(g) => reduce_gen(*g),
        Word::Bracket(a, b) => {
            let fa = reduce_word(a);
            let fb = reduce_word(b);
            let mut out = Formal::zero();
            for (wa, ca) in fa.terms() {
                for (wb, cb) in fb.terms() {
                    if is_central_word(wa) || is_central_word(wb) || wa == wb {
                        continue;
                    }
                    let (first, second, sign) = if wa < wb { (wa, wb, 1) } else { (wb, wa, -1) };
                    out.add_word(
                        Word::Bracket(Box::new(first.clone()), Box::new(second.clone())),
                        sign * ca * cb,
                    );
                }
            }
            out
        }
    }
}

/// `lhs - rhs` reduced modulo the linear relations, up to sign.
pub fn reduced_key(instance: &RelationInstance<GenSym>) -> Formal<GenSym> {
    let mut diff = instance.lhs.normalize();
    diff.add_assign(&instance.rhs.normalize(), -1);
    let mut out = Formal::zero();
    for (w, c) in diff.terms() {
        out.add_assign(&reduce_word(w), c);
    }
    out.sign_normalized()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConventionMatch {
    pub convention: Convention,
    pub total: usize,
    /// Translated relations that are literally an extended or odd-triple instance.
    pub literal_members: usize,
    pub equals_extended: bool,
    pub reduced_equals_extended_and_odd: bool,
}

impl ConventionMatch {
    pub fn matched(&self) -> bool {
        self.literal_members == self.total
            && self.equals_extended
            && self.reduced_equals_extended_and_odd
    }

    fn results(&self) -> Vec<InstanceResult> {
        let name = self.convention.name();
        vec![
            InstanceResult::check(
                format!("{name}: literal membership"),
                self.literal_members == self.total,
                format!("{}/{}", self.literal_members, self.total),
                format!("{}/{}", self.total, self.total),
            ),
            InstanceResult::check(
                format!("{name}: set equality with extended presentation"),
                self.equals_extended,
                self.equals_extended,
                true,
            ),
            InstanceResult::check(
                format!("{name}: reduced set equality with extended + odd triples"),
                self.reduced_equals_extended_and_odd,
                self.reduced_equals_extended_and_odd,
                true,
            ),
        ]
    }
}

pub fn translated_relations(conv: Convention) -> Result<Vec<RelationInstance<GenSym>>, TetraError> {
    alternating_relations(conv)
        .iter()
        .map(|r| r.try_map(&a4_generator_map))
        .collect()
}

pub fn match_convention(conv: Convention) -> Result<ConventionMatch, TetraError> {
    let translated = translated_relations(conv)?;
    let extended = extended_relations();
    let odd = odd_triple_relations();

    let extended_keys: BTreeSet<Key> = extended.iter().map(|r| r.formal_key()).collect();
    let odd_keys: BTreeSet<Key> = odd.iter().map(|r| r.formal_key()).collect();
    let translated_keys: BTreeSet<Key> = translated.iter().map(|r| r.formal_key()).collect();
    let literal_members = translated
        .iter()
        .filter(|r| {
            let k = r.formal_key();
            extended_keys.contains(&k) || odd_keys.contains(&k)
        })
        .count();

    let reduced_translated: BTreeSet<_> = translated.iter().map(reduced_key).collect();
    let reduced_target: BTreeSet<_> = extended.iter().chain(odd.iter()).map(reduced_key).collect();

    Ok(ConventionMatch {
        convention: conv,
        total: translated.len(),
        literal_members,
        equals_extended: translated_keys == extended_keys,
        reduced_equals_extended_and_odd: reduced_translated == reduced_target,
    })
}

#[derive(Clone, Debug)]
pub struct A4Outcome {
    pub attempts: Vec<ConventionMatch>,
    pub selected: Option<Convention>,
    pub report: VerificationReport,
}

/// Runs the dual-convention match, then checks every translated relation
/// under `σ̂` for the convention that matched.
pub fn verify_a4_presentation(exec: Execution) -> Result<A4Outcome, TetraError> {
    let mut report = VerificationReport::new("relations-thm61");
    let mut attempts = Vec::new();
    let mut selected = None;
    let mut conv = Convention::RightAction;
    for _ in 0..2 {
        let m = match_convention(conv)?;
        report.results.extend(m.results());
        let ok = m.matched();
        attempts.push(m);
        if ok {
            selected = Some(conv);
            break;
        }
        conv = conv.opposite();
    }
    report.push(InstanceResult::check(
        "selected convention",
        selected.is_some(),
        selected.map_or("none", |c| c.name()),
        "a matching convention",
    ));
    if let Some(conv) = selected {
        let translated = translated_relations(conv)?;
        let evaluated = verify_instances("", &translated, &sigma_hat_image, exec)
            .unwrap_or_else(|e| match e {});
        report.results.extend(evaluated.results);
    }
    Ok(A4Outcome {
        attempts,
        selected,
        report,
    })
}
