//! The three Onsager subalgebras of `L̂` and the center: Dolan-Grady checks
//! on the generating pairs and truncated direct-sum checks.

use super::closure::subalgebra_closure;
use super::coords::DegreeCap;
use super::span::{row_reduce, SpanBasis};
use super::LabError;
use crate::central_extension::{CentralVec, LHatElem};
use crate::par::Execution;
use crate::report::{InstanceResult, Status, VerificationReport};
use crate::scalar::int;
use crate::tetrahedron::{sigma_hat, GenSym};

pub const SPACE_NAMES: [&str; 4] = ["O", "O'", "O''", "C"];

/// Generating pairs of `O`, `O'`, `O''`.
pub fn onsager_pairs() -> [(GenSym, GenSym); 3] {
    [
        (GenSym::X(0, 1), GenSym::X(2, 3)),
        (GenSym::X(0, 2), GenSym::X(1, 3)),
        (GenSym::X(0, 3), GenSym::X(1, 2)),
    ]
}

/// `[a, [a, [a, b]]] - 4 [a, b]`.
pub fn dolan_grady_defect(a: &LHatElem, b: &LHatElem) -> LHatElem {
    let ab = a.bracket(b);
    let lhs = a.bracket(&a.bracket(&ab));
    &lhs - &ab.scale(&int(4))
}

pub fn dolan_grady_results() -> Vec<InstanceResult> {
    let mut out = Vec::new();
    for (g, h) in onsager_pairs() {
        for (p, q) in [(g, h), (h, g)] {
            let (a, b) = (sigma_hat(p), sigma_hat(q));
            let ab = a.bracket(&b);
            let lhs = a.bracket(&a.bracket(&ab));
            let rhs = ab.scale(&int(4));
            let diff = &lhs - &rhs;
            out.push(InstanceResult {
                id: format!("dolan-grady({p}, {q})"),
                status: Status::from_bool(diff.is_zero()),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
                difference: diff.to_string(),
            });
        }
    }
    out
}

/// Truncated `O`, `O'`, `O''` and `C = span{c, c'}` at `cap`.
pub fn onsager_spaces(cap: DegreeCap, exec: Execution) -> Result<[SpanBasis; 4], LabError> {
    let closure =
        |(g, h): (GenSym, GenSym)| subalgebra_closure(&[sigma_hat(g), sigma_hat(h)], cap, exec);
    let [p0, p1, p2] = onsager_pairs();
    let center = row_reduce(&[CentralVec::c().into(), CentralVec::c_prime().into()], cap)?;
    Ok([closure(p0)?, closure(p1)?, closure(p2)?, center])
}

pub fn onsager_report(cap: DegreeCap, exec: Execution) -> Result<VerificationReport, LabError> {
    if cap.cap < 2 {
        return Err(LabError::CapTooSmall {
            cap: cap.cap,
            required: 2,
        });
    }
    let mut report = VerificationReport::with_results("onsager", dolan_grady_results());
    let spaces = onsager_spaces(cap, exec)?;
    let k = cap.cap;

    for (a, sa) in spaces.iter().enumerate() {
        for (b, sb) in spaces.iter().enumerate().skip(a + 1) {
            let d = sa.intersection_dim(sb);
            report.push(InstanceResult::check(
                format!("cap {k}: dim({} ∩ {})", SPACE_NAMES[a], SPACE_NAMES[b]),
                d == 0,
                d,
                0,
            ));
        }
    }

    let dims: Vec<usize> = spaces.iter().map(SpanBasis::dim).collect();
    let total: usize = dims.iter().sum();
    let sum = spaces[1..]
        .iter()
        .fold(spaces[0].clone(), |acc, s| acc.sum(s));
    let listed = dims
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" + ");
    report.push(InstanceResult::check(
        format!("cap {k}: dim of sum equals sum of dims"),
        sum.dim() == total,
        sum.dim(),
        format!("{listed} = {total}"),
    ));
    // recorded, not asserted: how much of the truncation the closures reach
    report.push(InstanceResult::check(
        format!("cap {k}: fill of truncated L̂ (recorded)"),
        true,
        sum.dim(),
        cap.dim(),
    ));
    Ok(report)
}
