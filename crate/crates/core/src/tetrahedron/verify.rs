use std::convert::Infallible;

use super::generators::{BoxGen, GenSym};
use super::images::{sigma, sigma_after_pi, sigma_hat};
use super::relations::{
    extended_relations, odd_triple_relations, tetrahedron_relations, RelationInstance,
};
use crate::central_extension::{pi_projection, CentralVec, LElem, LHatElem};
use crate::lie::LieElement;
use crate::par::Execution;
use crate::report::{InstanceResult, Status, VerificationReport};
use crate::scalar::Scalar;

pub fn sigma_image(g: &BoxGen) -> Result<LElem, Infallible> {
    Ok(sigma(*g))
}

pub fn sigma_hat_image(g: &GenSym) -> Result<LHatElem, Infallible> {
    Ok(sigma_hat(*g))
}

/// Evaluates `lhs - rhs` under `images`; passes iff exactly zero.
pub fn verify_relation<G, L, E>(
    instance: &RelationInstance<G>,
    images: &impl Fn(&G) -> Result<L, E>,
) -> Result<InstanceResult, E>
where
    L: LieElement,
{
    let lhs = instance.lhs.evaluate(images)?;
    let rhs = instance.rhs.evaluate(images)?;
    let diff = lhs.sub(&rhs);
    Ok(InstanceResult {
        id: instance.id(),
        status: Status::from_bool(diff.is_zero()),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        difference: diff.to_string(),
    })
}

pub fn verify_instances<G, L, E, F>(
    suite: &str,
    instances: &[RelationInstance<G>],
    images: &F,
    exec: Execution,
) -> Result<VerificationReport, E>
where
    G: Sync,
    L: LieElement,
    E: Send,
    F: Fn(&G) -> Result<L, E> + Sync,
{
    let results = exec.map(instances, |inst| verify_relation(inst, images));
    let results = results.into_iter().collect::<Result<Vec<_>, E>>()?;
    Ok(VerificationReport::with_results(suite, results))
}

fn infallible<T>(r: Result<T, Infallible>) -> T {
    match r {
        Ok(v) => v,
        Err(e) => match e {},
    }
}

/// Every tetrahedron-algebra relation under `σ` into `L`.
pub fn tetrahedron_report(exec: Execution) -> VerificationReport {
    infallible(verify_instances(
        "relations-def11",
        &tetrahedron_relations(),
        &sigma_image,
        exec,
    ))
}

/// Every relation of the centrally extended presentation under `σ̂`.
pub fn extended_report(exec: Execution) -> VerificationReport {
    infallible(verify_instances(
        "relations-def34",
        &extended_relations(),
        &sigma_hat_image,
        exec,
    ))
}

/// The odd-triple identities under `σ̂`.
pub fn odd_triple_report(exec: Execution) -> VerificationReport {
    infallible(verify_instances(
        "relations-lemma36",
        &odd_triple_relations(),
        &sigma_hat_image,
        exec,
    ))
}

/// Checks `π ∘ σ̂ = σ ∘ π` on each of the 15 generators.
pub fn verify_diagram() -> VerificationReport {
    let results = GenSym::all()
        .into_iter()
        .map(|g| {
            let down_then_across = pi_projection(&sigma_hat(g));
            let across_then_down = sigma_after_pi(g);
            let diff = &down_then_across - &across_then_down;
            InstanceResult {
                id: format!("diagram({g})"),
                status: Status::from_bool(diff.is_zero()),
                lhs: down_then_across.to_string(),
                rhs: across_then_down.to_string(),
                difference: diff.to_string(),
            }
        })
        .collect();
    VerificationReport::with_results("diagram", results)
}

/// Dimension of the span of vectors in the two-dimensional center.
pub fn central_span_dimension(vectors: &[CentralVec]) -> usize {
    let nonzero = vectors.iter().any(|v| !v.is_zero());
    for (n, a) in vectors.iter().enumerate() {
        for b in &vectors[n + 1..] {
            let minor: Scalar = &a.c * &b.cp - &a.cp * &b.c;
            if minor != Scalar::from_integer(0.into()) {
                return 2;
            }
        }
    }
    usize::from(nonzero)
}

/// `σ̂` restricted to `span{C_p}`: the images span the full center and sum
/// to zero, and any two of them already span it.
pub fn verify_center_injectivity() -> VerificationReport {
    let gens: Vec<GenSym> = GenSym::all()
        .into_iter()
        .filter(|g| g.is_central())
        .collect();
    let images: Vec<CentralVec> = gens.iter().map(|g| sigma_hat(*g).central).collect();
    let mut report = VerificationReport::new("center-injectivity");
    let dim = central_span_dimension(&images);
    report.push(InstanceResult::check("span-dimension", dim == 2, dim, 2));
    let sum = images.iter().fold(CentralVec::zero(), |acc, v| &acc + v);
    report.push(InstanceResult {
        id: "sum-of-images".into(),
        status: Status::from_bool(sum.is_zero()),
        lhs: sum.to_string(),
        rhs: "0".into(),
        difference: sum.to_string(),
    });
    for (n, g) in gens.iter().enumerate() {
        let rest: Vec<CentralVec> = images
            .iter()
            .enumerate()
            .filter(|(m, _)| *m != n)
            .map(|(_, v)| v.clone())
            .collect();
        let d = central_span_dimension(&rest);
        report.push(InstanceResult::check(format!("drop {g}"), d == 2, d, 2));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tetrahedron::expr::Expr;
    use crate::tetrahedron::relations::Clause;

    #[test]
    fn evaluate_examples() {
        let e = Expr::sum(vec![
            Expr::scaled(2, Expr::gen(GenSym::X(1, 2))),
            Expr::scaled(2, Expr::gen(GenSym::X(2, 1))),
        ]);
        let v = e.evaluate(&sigma_hat_image).unwrap();
        assert_eq!(
            v,
            CentralVec::c_prime().scale(&crate::scalar::int(-8)).into()
        );

        // (2Z + 2X) ⊗ t', no central term
        let b = Expr::bracket(Expr::gen(GenSym::X(0, 1)), Expr::gen(GenSym::X(1, 2)));
        let two = crate::scalar::int(2);
        let zero = crate::scalar::int(0);
        let sl2 = crate::sl2::Sl2Vec::new(two.clone(), zero, two);
        let expected = LHatElem::tensor(&sl2, &crate::arith_a::AElem::t_prime());
        assert_eq!(b.evaluate(&sigma_hat_image).unwrap(), expected);

        let zero: Expr<GenSym> = Expr::zero();
        assert!(zero.evaluate(&sigma_hat_image).unwrap().is_zero());
    }

    #[test]
    fn verify_examples() {
        let rels = crate::tetrahedron::relations::extended_relations();
        let iii = rels
            .iter()
            .find(|r| r.clause == Clause::Ext(3) && r.params == "1,2")
            .unwrap();
        let res = verify_relation(iii, &sigma_hat_image).unwrap();
        assert!(res.passed());
        assert_eq!(res.lhs, "-4*c'");

        let iv = rels
            .iter()
            .find(|r| r.clause == Clause::Ext(4) && r.params == "0,1,2")
            .unwrap();
        assert!(verify_relation(iv, &sigma_hat_image).unwrap().passed());

        let box_rels = tetrahedron_relations();
        let ii = box_rels
            .iter()
            .find(|r| r.clause == Clause::Tetra(2) && r.params == "1,2,3")
            .unwrap();
        assert!(verify_relation(ii, &sigma_image).unwrap().passed());
    }

    #[test]
    fn failing_relation_reports_difference() {
        let bogus = RelationInstance {
            clause: Clause::Ext(3),
            params: "bogus".into(),
            lhs: Expr::gen(GenSym::X(1, 2)),
            rhs: Expr::zero(),
        };
        let res = verify_relation(&bogus, &sigma_hat_image).unwrap();
        assert!(!res.passed());
        assert_eq!(res.difference, "T(X, 1) - 4*c'");
    }

    #[test]
    fn full_relation_suites_pass() {
        for (report, total) in [
            (tetrahedron_report(Execution::Sequential), 54),
            (extended_report(Execution::Sequential), 94),
            (odd_triple_report(Execution::Sequential), 12),
        ] {
            assert_eq!(report.total(), total, "{}", report.suite);
            assert!(report.all_passed(), "{}", report.render_text());
        }
    }

    #[test]
    fn diagram_commutes() {
        let report = verify_diagram();
        assert_eq!(report.total(), 15);
        assert!(report.all_passed(), "{}", report.render_text());
        let x03 = report
            .results
            .iter()
            .find(|r| r.id == "diagram(Xh[0,3])")
            .unwrap();
        assert_eq!(x03.lhs, "T(Y, t) + T(Z, -1 + t)");
    }

    #[test]
    fn center_injectivity() {
        let report = verify_center_injectivity();
        assert!(report.all_passed(), "{}", report.render_text());
        assert_eq!(report.total(), 5);
    }

    #[test]
    fn span_dimension_helper() {
        assert_eq!(central_span_dimension(&[]), 0);
        assert_eq!(central_span_dimension(&[CentralVec::zero()]), 0);
        assert_eq!(
            central_span_dimension(&[
                CentralVec::c(),
                CentralVec::c().scale(&crate::scalar::int(3))
            ]),
            1
        );
        assert_eq!(
            central_span_dimension(&[CentralVec::c(), CentralVec::c_double_prime()]),
            2
        );
    }
}
