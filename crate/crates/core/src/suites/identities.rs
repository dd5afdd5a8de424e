//! Sampled and exhaustive identity checks for the cocycle and the bracket
//! on `L̂`.

use crate::arith_a::{AElem, Sector};
use crate::central_extension::{cocycle, cocycle_table, sector_class, CentralVec, LHatElem};
use crate::par::Execution;
use crate::random::Sampler;
use crate::report::{InstanceResult, Status, VerificationReport};
use crate::scalar::{binomial_scalar, int, sign_pow};

fn central_check(id: String, lhs: &CentralVec, rhs: &CentralVec) -> InstanceResult {
    let diff = lhs - rhs;
    InstanceResult {
        id,
        status: Status::from_bool(diff.is_zero()),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        difference: diff.to_string(),
    }
}

fn power_label(s: Sector, k: i64) -> String {
    match k {
        0 => "1".into(),
        1 => s.symbol().into(),
        _ => format!("{}^{k}", s.symbol()),
    }
}

/// `1` and `f^i` for every sector and `1 <= i <= max_degree`.
fn symmetric_basis(max_degree: u32) -> Vec<(String, AElem)> {
    let mut out = vec![("1".to_string(), AElem::one())];
    for s in Sector::ALL {
        for i in 1..=max_degree as i64 {
            out.push((power_label(s, i), AElem::sector_pow(s, i)));
        }
    }
    out
}

/// `<f, f^-1>`, which should be `c`, `c'`, `c''` for `t`, `t'`, `t''`.
fn inverse_pairing(s: Sector) -> CentralVec {
    cocycle(&AElem::sector_pow(s, 1), &AElem::sector_pow(s, -1))
}

#[derive(Clone, Copy, Debug)]
pub struct CocycleOptions {
    /// Bound on basis degrees and on `|m|`, `|n|` in the power formulas.
    pub max_degree: u32,
    /// Bound on the degree of random arguments.
    pub random_degree: u32,
    pub samples: usize,
    pub seed: u64,
}

pub fn cocycle_report(opts: CocycleOptions, exec: Execution) -> VerificationReport {
    let mut report = VerificationReport::new("cocycle");
    let d = opts.max_degree;

    let basis = symmetric_basis(d);
    let pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|i| (i..basis.len()).map(move |j| (i, j)))
        .collect();
    report.results.extend(exec.map(&pairs, |&(i, j)| {
        let ((la, a), (lb, b)) = (&basis[i], &basis[j]);
        let sum = &cocycle(a, b) + &cocycle(b, a);
        central_check(format!("skew({la}, {lb})"), &sum, &CentralVec::zero())
    }));

    let mut sampler = Sampler::new(opts.seed);
    let rd = opts.random_degree;
    let random_pairs: Vec<(AElem, AElem)> = (0..opts.samples)
        .map(|_| (sampler.aelem(rd), sampler.aelem(rd)))
        .collect();
    let skews = exec.map(&random_pairs, |(a, b)| &cocycle(a, b) + &cocycle(b, a));
    for (n, v) in skews.iter().enumerate() {
        report.push(central_check(
            format!("skew-random#{n}"),
            v,
            &CentralVec::zero(),
        ));
    }

    let triples: Vec<(AElem, AElem, AElem)> = (0..opts.samples)
        .map(|_| (sampler.aelem(rd), sampler.aelem(rd), sampler.aelem(rd)))
        .collect();
    let cyclic = exec.map(&triples, |(a, b, c)| {
        let ab = a * b;
        let bc = b * c;
        let ca = c * a;
        &(&cocycle(&ab, c) + &cocycle(&bc, a)) + &cocycle(&ca, b)
    });
    for (n, v) in cyclic.iter().enumerate() {
        report.push(central_check(
            format!("cyclic-random#{n}"),
            v,
            &CentralVec::zero(),
        ));
    }

    for s in Sector::ALL {
        let expected = sector_class(s);
        report.push(central_check(
            format!("<{}, {}>", power_label(s, 1), power_label(s, -1)),
            &inverse_pairing(s),
            &expected,
        ));
    }

    let range: Vec<i64> = (-(d as i64)..=d as i64).collect();
    for s in Sector::ALL {
        let base = sector_class(s);
        let powers: Vec<AElem> = range.iter().map(|&k| AElem::sector_pow(s, k)).collect();
        let cases: Vec<(usize, usize)> = (0..range.len())
            .flat_map(|i| (0..range.len()).map(move |j| (i, j)))
            .collect();
        report.results.extend(exec.map(&cases, |&(i, j)| {
            let (m, n) = (range[i], range[j]);
            let lhs = cocycle(&powers[i], &powers[j]);
            let rhs = if m + n == 0 {
                base.scale(&int(m))
            } else {
                CentralVec::zero()
            };
            central_check(
                format!(
                    "same-variable({}, {})",
                    power_label(s, m),
                    power_label(s, n)
                ),
                &lhs,
                &rhs,
            )
        }));
    }

    for s in Sector::ALL {
        let g = s.next();
        let base = sector_class(s);
        let cases: Vec<(u32, u32)> = (0..=d).flat_map(|m| (0..=d).map(move |n| (m, n))).collect();
        report.results.extend(exec.map(&cases, |&(m, n)| {
            let direct = cocycle(
                &AElem::sector_pow(s, m as i64),
                &AElem::sector_pow(g, n as i64),
            );
            let table = if m >= 1 && n >= 1 {
                cocycle_table(s, m, g, n)
            } else {
                CentralVec::zero()
            };
            let closed = base.scale(&(sign_pow(m) * int(m as i64) * binomial_scalar(n, m)));
            let id = format!(
                "neighbor({}, {})",
                power_label(s, m as i64),
                power_label(g, n as i64)
            );
            let mut result = central_check(id, &direct, &closed);
            if table != closed {
                result.status = Status::Fail;
                result.difference = format!("{}; table gives {table}", result.difference);
            }
            result
        }));
    }

    let display = Sector::ALL
        .iter()
        .fold(CentralVec::zero(), |acc, s| &acc + &inverse_pairing(*s));
    report.push(central_check(
        "sum of <f, f^-1>".into(),
        &display,
        &CentralVec::zero(),
    ));
    report
}

pub fn jacobi_report(
    samples: usize,
    max_degree: u32,
    seed: u64,
    exec: Execution,
) -> VerificationReport {
    let mut sampler = Sampler::new(seed);
    let triples: Vec<(LHatElem, LHatElem, LHatElem)> = (0..samples)
        .map(|_| {
            (
                sampler.lhat(max_degree),
                sampler.lhat(max_degree),
                sampler.lhat(max_degree),
            )
        })
        .collect();
    let sums = exec.map(&triples, |(a, b, c)| {
        let terms = [
            a.bracket(&b.bracket(c)),
            b.bracket(&c.bracket(a)),
            c.bracket(&a.bracket(b)),
        ];
        &(&terms[0] + &terms[1]) + &terms[2]
    });
    let results = sums
        .into_iter()
        .enumerate()
        .map(|(n, sum)| InstanceResult {
            id: format!("jacobi-random#{n}"),
            status: Status::from_bool(sum.is_zero()),
            lhs: sum.to_string(),
            rhs: "0".into(),
            difference: sum.to_string(),
        })
        .collect();
    VerificationReport::with_results("jacobi", results)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_pairings_are_the_classes() {
        assert_eq!(inverse_pairing(Sector::T), CentralVec::c());
        assert_eq!(inverse_pairing(Sector::TPrime), CentralVec::c_prime());
        assert_eq!(
            inverse_pairing(Sector::TDoublePrime),
            CentralVec::c_double_prime()
        );
    }

    #[test]
    fn small_cocycle_report_passes() {
        let opts = CocycleOptions {
            max_degree: 3,
            random_degree: 3,
            samples: 20,
            seed: 1,
        };
        let report = cocycle_report(opts, Execution::Sequential);
        // 10 basis elements -> 55 skew pairs; 20 + 20 random; 3 pairings;
        // 3 * 7 * 7 same-variable; 3 * 4 * 4 neighbor; the display
        assert_eq!(report.total(), 55 + 40 + 3 + 147 + 48 + 1);
        assert!(report.all_passed(), "{}", report.render_text());
    }

    #[test]
    fn small_jacobi_report_passes() {
        let report = jacobi_report(10, 2, 3, Execution::Sequential);
        assert_eq!(report.total(), 10);
        assert!(report.all_passed());
    }
}
