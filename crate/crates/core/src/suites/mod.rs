//! Named verification suites and the report document for one run.

pub mod identities;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::central_extension::CentralVec;
use crate::par::Execution;
use crate::random::DEFAULT_SEED;
use crate::report::{InstanceResult, ReportDocument, VerificationReport};
use crate::subalgebra_lab::{center_at_cap, onsager_report, row_reduce, DegreeCap, LabError};
use crate::tetrahedron::a4::verify_a4_presentation;
use crate::tetrahedron::verify::{
    extended_report, odd_triple_report, tetrahedron_report, verify_center_injectivity,
    verify_diagram,
};
use crate::tetrahedron::TetraError;
use identities::{cocycle_report, jacobi_report, CocycleOptions};

pub const SUITE_NAMES: [&str; 10] = [
    "relations-def11",
    "relations-def34",
    "relations-lemma36",
    "relations-thm61",
    "cocycle",
    "jacobi",
    "diagram",
    "center",
    "onsager",
    "all",
];

pub const DEFAULT_SAMPLES: usize = 200;
pub const DEFAULT_MAX_DEGREE: u32 = 8;
const COCYCLE_RANDOM_DEGREE: u32 = 5;
const JACOBI_DEGREE: u32 = 4;
const CENTER_CAPS: [u32; 4] = [1, 2, 3, 4];
const ONSAGER_CAPS: [u32; 2] = [2, 3];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Single cap for `center` and `onsager`; each has its own default caps.
    pub cap: Option<u32>,
    /// Degree bound for exhaustive cocycle checks; random arguments use the
    /// smaller of this and the suite's own bound.
    pub max_degree: u32,
    pub samples: usize,
    pub seed: u64,
    pub execution: Execution,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            cap: None,
            max_degree: DEFAULT_MAX_DEGREE,
            samples: DEFAULT_SAMPLES,
            seed: DEFAULT_SEED,
            execution: Execution::default(),
        }
    }
}

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("unknown suite `{0}`; expected one of {}", SUITE_NAMES.join(", "))]
    UnknownSuite(String),
    #[error(transparent)]
    Lab(#[from] LabError),
    #[error(transparent)]
    Tetra(#[from] TetraError),
}

impl SuiteOptions {
    fn parameters(&self, suite: &str) -> BTreeMap<String, String> {
        let mut p = BTreeMap::new();
        let caps = |defaults: &[u32]| match self.cap {
            Some(c) => c.to_string(),
            None => defaults
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(","),
        };
        let uses = |name: &str| suite == "all" || suite == name;
        if uses("center") {
            p.insert("center_caps".into(), caps(&CENTER_CAPS));
        }
        if uses("onsager") {
            p.insert("onsager_caps".into(), caps(&ONSAGER_CAPS));
        }
        if uses("cocycle") || uses("jacobi") {
            p.insert("max_degree".into(), self.max_degree.to_string());
            p.insert("samples".into(), self.samples.to_string());
            p.insert("seed".into(), self.seed.to_string());
        }
        p
    }

    fn caps(&self, defaults: &[u32]) -> Vec<u32> {
        self.cap.map_or_else(|| defaults.to_vec(), |c| vec![c])
    }
}

fn center_report(opts: &SuiteOptions) -> Result<Vec<VerificationReport>, SuiteError> {
    let mut report = VerificationReport::new("center");
    for cap in opts.caps(&CENTER_CAPS) {
        let cap = DegreeCap::new(cap);
        let center = center_at_cap(cap)?;
        let classes = row_reduce(&[CentralVec::c().into(), CentralVec::c_prime().into()], cap)?;
        report.push(InstanceResult::check(
            format!("cap {}: dim", cap.cap),
            center.dim() == 2,
            center.dim(),
            2,
        ));
        report.push(InstanceResult::check(
            format!("cap {}: equals span{{c, c'}}", cap.cap),
            center == classes,
            center == classes,
            true,
        ));
    }
    Ok(vec![report, verify_center_injectivity()])
}

fn onsager_reports(opts: &SuiteOptions) -> Result<Vec<VerificationReport>, SuiteError> {
    let mut report = VerificationReport::new("onsager");
    for (n, cap) in opts.caps(&ONSAGER_CAPS).into_iter().enumerate() {
        let mut r = onsager_report(DegreeCap::new(cap), opts.execution)?;
        if n > 0 {
            // the Dolan-Grady checks do not depend on the cap
            r.results.retain(|x| !x.id.starts_with("dolan-grady"));
        }
        report.extend(r);
    }
    Ok(vec![report])
}

fn sections(name: &str, opts: &SuiteOptions) -> Result<Vec<VerificationReport>, SuiteError> {
    let exec = opts.execution;
    Ok(match name {
        "relations-def11" => vec![tetrahedron_report(exec)],
        "relations-def34" => vec![extended_report(exec)],
        "relations-lemma36" => vec![odd_triple_report(exec)],
        "relations-thm61" => vec![verify_a4_presentation(exec)?.report],
        "cocycle" => {
            let c = CocycleOptions {
                max_degree: opts.max_degree,
                random_degree: opts.max_degree.min(COCYCLE_RANDOM_DEGREE),
                samples: opts.samples,
                seed: opts.seed,
            };
            vec![cocycle_report(c, exec)]
        }
        "jacobi" => vec![jacobi_report(
            opts.samples,
            opts.max_degree.min(JACOBI_DEGREE),
            opts.seed,
            exec,
        )],
        "diagram" => vec![verify_diagram()],
        "center" => center_report(opts)?,
        "onsager" => onsager_reports(opts)?,
        "all" => {
            let mut out = Vec::new();
            for s in SUITE_NAMES.iter().filter(|s| **s != "all") {
                out.extend(sections(s, opts)?);
            }
            out
        }
        other => return Err(SuiteError::UnknownSuite(other.to_string())),
    })
}

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<ReportDocument, SuiteError> {
    let reports = sections(name, opts)?;
    Ok(ReportDocument::new(name, opts.parameters(name), reports))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_an_error() {
        let err = run_suite("nope", &SuiteOptions::default()).unwrap_err();
        assert!(err.to_string().contains("relations-def34"));
    }

    #[test]
    fn diagram_suite() {
        let doc = run_suite("diagram", &SuiteOptions::default()).unwrap();
        assert_eq!(doc.summary.total, 15);
        assert!(doc.overall_pass);
        assert!(doc.parameters.is_empty());
    }

    #[test]
    fn center_suite_at_one_cap() {
        let opts = SuiteOptions {
            cap: Some(3),
            ..Default::default()
        };
        let doc = run_suite("center", &opts).unwrap();
        assert!(doc.overall_pass, "{}", doc.render_text());
        assert_eq!(doc.parameters["center_caps"], "3");
        assert_eq!(doc.sections[0].results[0].lhs, "2");
    }

    #[test]
    fn cap_below_minimum_is_reported() {
        let opts = SuiteOptions {
            cap: Some(1),
            ..Default::default()
        };
        assert!(matches!(
            run_suite("onsager", &opts),
            Err(SuiteError::Lab(_))
        ));
    }
}
