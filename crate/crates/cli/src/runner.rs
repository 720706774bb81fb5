//! The `verify` suite: one check record per (identity, ring) cell over the
//! bundled corpus. Cells are independent; record assembly is deterministic
//! (sorted by cell name) and failures carry both sides' generators.

use std::collections::BTreeMap;

use taukit_core::cartier::cartier_plus_image;
use taukit_core::conductor::{
    conductor_auto, conductor_identities_check, finite_transform_check, ConductorMethod,
    ConductorVerdict,
};
use taukit_core::gradedmod::GradedModule;
use taukit_core::interior::{
    big_test_ideal, big_test_ideal_for_ring, decomposition_check, localization_commutes_check,
    nilradical_reduction_check, tight_interior_of_ideal, TauComputation,
};
use taukit_core::oracle::{compare_level_image, duality_check, OracleComparison};
use taukit_core::parse::parse_polynomial;
use taukit_core::{AlgebraError, Ideal, RingPresentation};

use crate::report::{render_ideal, CheckRecord, Verdict};
use crate::spec::parse_ring_spec;

/// Options shared by every suite cell.
#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    pub e_max: u32,
    pub window: u32,
    pub degree_cap: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            e_max: 4,
            window: 2,
            degree_cap: 4,
        }
    }
}

/// The ring corpus shipped inside the binary, by file stem.
pub const BUNDLED_RINGS: [(&str, &str); 18] = [
    ("cusp_p2", include_str!("../rings/cusp_p2.ring")),
    ("cusp_p3", include_str!("../rings/cusp_p3.ring")),
    ("cusp_p5", include_str!("../rings/cusp_p5.ring")),
    ("node_p2", include_str!("../rings/node_p2.ring")),
    ("node_p3", include_str!("../rings/node_p3.ring")),
    ("node_p5", include_str!("../rings/node_p5.ring")),
    ("nonred_p2", include_str!("../rings/nonred_p2.ring")),
    ("nonred_p3", include_str!("../rings/nonred_p3.ring")),
    ("plane_p2", include_str!("../rings/plane_p2.ring")),
    ("plane_p3", include_str!("../rings/plane_p3.ring")),
    ("quadric_p3", include_str!("../rings/quadric_p3.ring")),
    ("quadric_p5", include_str!("../rings/quadric_p5.ring")),
    ("regular_p2", include_str!("../rings/regular_p2.ring")),
    ("regular_p3", include_str!("../rings/regular_p3.ring")),
    ("regular_p5", include_str!("../rings/regular_p5.ring")),
    ("sg345_p2", include_str!("../rings/sg345_p2.ring")),
    ("sr_p2", include_str!("../rings/sr_p2.ring")),
    ("sr_p3", include_str!("../rings/sr_p3.ring")),
];

const REDUCED_RINGS: [&str; 16] = [
    "cusp_p2", "cusp_p3", "cusp_p5", "node_p2", "node_p3", "node_p5", "plane_p2", "plane_p3",
    "quadric_p3", "quadric_p5", "regular_p2", "regular_p3", "regular_p5", "sg345_p2", "sr_p2",
    "sr_p3",
];
const DECOMPOSITION_RINGS: [&str; 6] = ["cusp_p2", "node_p2", "node_p3", "node_p5", "sr_p2", "sr_p3"];
const INDEPENDENCE_RINGS: [&str; 7] = [
    "cusp_p2", "cusp_p3", "cusp_p5", "node_p2", "node_p3", "node_p5", "sg345_p2",
];
const CONDUCTOR_RINGS: [&str; 9] = [
    "cusp_p2", "cusp_p3", "cusp_p5", "node_p2", "node_p3", "node_p5", "sg345_p2", "sr_p2", "sr_p3",
];
const SEMIGROUP_RINGS: [&str; 4] = ["cusp_p2", "cusp_p3", "cusp_p5", "sg345_p2"];
const REDUCTION_RINGS: [&str; 2] = ["nonred_p2", "nonred_p3"];
const LOCALIZATION_CELLS: [(&str, &str); 4] = [
    ("node_p2", "x"),
    ("node_p2", "x + y"),
    ("cusp_p2", "x"),
    ("cusp_p2", "y"),
];
const DUALITY_MODULES: [(&str, &[&str]); 3] = [
    ("(x,y)", &["x", "y"]),
    ("(x,y^2)", &["x", "y^2"]),
    ("(x^2,y^2)", &["x^2", "y^2"]),
];
const ORACLE_CELLS: [(&str, &str, u32); 4] = [
    ("node_p2", "1", 1),
    ("cusp_p2", "1", 2),
    ("nonred_p2", "1", 1),
    ("regular_p2", "x", 1),
];

/// The suite names `verify` accepts.
pub const SUITE_NAMES: [&str; 1] = ["paper"];

struct Corpus {
    options: SuiteOptions,
    rings: BTreeMap<&'static str, RingPresentation>,
    taus: BTreeMap<&'static str, TauComputation>,
}

impl Corpus {
    fn load(options: SuiteOptions) -> Result<Corpus, AlgebraError> {
        let mut rings = BTreeMap::new();
        for (name, text) in BUNDLED_RINGS {
            let spec = parse_ring_spec(text).map_err(|e| {
                AlgebraError::internal(format!("bundled ring {name} does not parse: {e}"))
            })?;
            rings.insert(name, spec.build()?);
        }
        Ok(Corpus {
            options,
            rings,
            taus: BTreeMap::new(),
        })
    }

    fn ring(&self, name: &str) -> &RingPresentation {
        self.rings.get(name).expect("bundled ring name")
    }

    fn tau(&mut self, name: &'static str) -> Result<TauComputation, AlgebraError> {
        if !self.taus.contains_key(name) {
            let rp = self.rings.get(name).expect("bundled ring name");
            let tau = big_test_ideal_for_ring(rp, self.options.e_max, self.options.window)?;
            self.taus.insert(name, tau);
        }
        Ok(self.taus[name].clone())
    }
}

/// Emits a per-cell timing line on stderr when `TAUKIT_PROGRESS` is set.
fn progress(cell: &str, started: std::time::Instant) {
    if std::env::var_os("TAUKIT_PROGRESS").is_some() {
        eprintln!("[{:>8.3}s] {cell}", started.elapsed().as_secs_f64());
    }
}

fn push_cell(
    records: &mut Vec<CheckRecord>,
    name: String,
    outcome: Result<CheckRecord, AlgebraError>,
) {
    records.push(match outcome {
        Ok(record) => record,
        Err(AlgebraError::NotStabilized { trace, .. }) => {
            CheckRecord::new(name, Verdict::NotStabilized, vec![], vec![]).with_note(trace)
        }
        Err(AlgebraError::Precondition(msg)) | Err(AlgebraError::UnsupportedInput(msg)) => {
            CheckRecord::new(name, Verdict::Uncheckable, vec![], vec![]).with_note(msg)
        }
        Err(other) => {
            CheckRecord::new(name, Verdict::Fail, vec![], vec![]).with_note(other.to_string())
        }
    });
}

fn equality_record(
    rp: &RingPresentation,
    name: &str,
    lhs: &Ideal,
    rhs: &Ideal,
) -> CheckRecord {
    let verdict = if rp.equals_mod(lhs, rhs) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    CheckRecord::new(name, verdict, render_ideal(rp, lhs), render_ideal(rp, rhs))
}

/// Translates a conductor comparison into a check record.
pub fn conductor_verdict_record(name: impl Into<String>, v: &ConductorVerdict) -> CheckRecord {
    let verdict = match v.holds {
        Some(true) => Verdict::Pass,
        Some(false) => {
            if v.expected {
                Verdict::Fail
            } else {
                Verdict::Info
            }
        }
        None => Verdict::Uncheckable,
    };
    CheckRecord::new(name, verdict, v.lhs.clone(), v.rhs.clone())
}

/// Runs the full identity suite and returns records sorted by cell name.
pub fn run_suite(options: SuiteOptions) -> Result<Vec<CheckRecord>, AlgebraError> {
    let mut corpus = Corpus::load(options)?;
    let mut records: Vec<CheckRecord> = Vec::new();

    for name in REDUCED_RINGS {
        let cell = format!("idempotence/{name}");
        let started = std::time::Instant::now();
        let outcome = (|| {
            let tau = corpus.tau(name)?;
            let rp = corpus.ring(name);
            let again = tight_interior_of_ideal(
                rp,
                &tau.trace.result,
                &tau.test_element,
                options.e_max,
                options.window,
            )?;
            Ok(equality_record(rp, &cell, &again.result, &tau.trace.result))
        })();
        push_cell(&mut records, cell.clone(), outcome);
        progress(&cell, started);
    }

    for name in DECOMPOSITION_RINGS {
        let cell = format!("decomposition/{name}");
        let started = std::time::Instant::now();
        let outcome = (|| {
            let tau = corpus.tau(name)?;
            let rp = corpus.ring(name);
            let out = decomposition_check(rp, &tau.test_element, options.e_max, options.window)?;
            Ok(equality_record(rp, &cell, &out.lhs, &out.rhs))
        })();
        push_cell(&mut records, cell.clone(), outcome);
        progress(&cell, started);
    }

    for name in INDEPENDENCE_RINGS {
        let cell = format!("independence/{name}");
        let started = std::time::Instant::now();
        let outcome = (|| {
            let tau = corpus.tau(name)?;
            let rp = corpus.ring(name);
            // The squared element is also a valid test element but its
            // partial sums stabilize about one level later, so the
            // comparison run gets extra headroom.
            let c2 = tau.test_element.mul(&tau.test_element);
            let other = big_test_ideal(rp, &c2, options.e_max + options.window, options.window)?;
            Ok(equality_record(rp, &cell, &other.result, &tau.trace.result))
        })();
        push_cell(&mut records, cell.clone(), outcome);
        progress(&cell, started);
    }

    for (name, _) in BUNDLED_RINGS {
        let cell = format!("fixedness/{name}");
        let started = std::time::Instant::now();
        let outcome = (|| {
            let tau = corpus.tau(name)?;
            let rp = corpus.ring(name);
            let plus = cartier_plus_image(rp, &tau.trace.result, 2)?;
            Ok(equality_record(rp, &cell, &plus, &tau.trace.result))
        })();
        push_cell(&mut records, cell.clone(), outcome);
        progress(&cell, started);
    }

    for name in CONDUCTOR_RINGS {
        let started = std::time::Instant::now();
        let group = (|| {
            let tau = corpus.tau(name)?;
            let rp = corpus.ring(name);
            let conductor = conductor_auto(rp)?;
            let verdicts = conductor_identities_check(rp, &tau.trace.result, &conductor)?;
            let mut group = Vec::new();
            for v in &verdicts {
                let cell = match v.name {
                    "tau_subset_conductor" => format!("sandwich/{name}/tau_in_conductor"),
                    "conductor_subset_annihilator_sum" => {
                        format!("sandwich/{name}/conductor_in_annihilator_sum")
                    }
                    "tau_equals_conductor" => match conductor.method {
                        ConductorMethod::Semigroup => format!("normalization/{name}"),
                        _ => format!("stanley_reisner/{name}"),
                    },
                    other => format!("sandwich/{name}/{other}"),
                };
                group.push(conductor_verdict_record(cell, v));
            }
            Ok(group)
        })();
        match group {
            Ok(mut group) => records.append(&mut group),
            Err(e) => push_cell(&mut records, format!("sandwich/{name}"), Err(e)),
        }
        progress(&format!("sandwich/{name}"), started);
    }

    for name in SEMIGROUP_RINGS {
        let cell = format!("transformation/{name}");
        let started = std::time::Instant::now();
        let outcome = (|| {
            let tau = corpus.tau(name)?;
            let rp = corpus.ring(name);
            let out = finite_transform_check(rp, &tau.trace.result, options.e_max)?;
            Ok(equality_record(rp, &cell, &out.lhs, &out.rhs))
        })();
        push_cell(&mut records, cell.clone(), outcome);
        progress(&cell, started);
    }

    for name in REDUCTION_RINGS {
        let cell = format!("reduction/{name}");
        let started = std::time::Instant::now();
        let outcome = (|| {
            let rp = corpus.ring(name);
            let out = nilradical_reduction_check(rp, options.e_max, options.window)?;
            Ok(
                equality_record(rp, &cell, &out.lhs, &out.rhs)
                    .with_note(format!("nilpotency level {}", out.e0)),
            )
        })();
        push_cell(&mut records, cell.clone(), outcome);
        progress(&cell, started);
    }

    for (name, f_expr) in LOCALIZATION_CELLS {
        let cell = format!("localization/{name}/{}", f_expr.replace(' ', ""));
        let started = std::time::Instant::now();
        let outcome = (|| {
            let tau = corpus.tau(name)?;
            let rp = corpus.ring(name);
            let f = parse_polynomial(rp.ambient(), f_expr)?;
            let out = localization_commutes_check(
                rp,
                &tau.test_element,
                &f,
                options.e_max,
                options.window,
            )?;
            let verdict = if out.matches { Verdict::Pass } else { Verdict::Fail };
            Ok(CheckRecord::new(
                cell.as_str(),
                verdict,
                out.extended.render_canonical(),
                out.localized.render_canonical(),
            ))
        })();
        push_cell(&mut records, cell.clone(), outcome);
        progress(&cell, started);
    }

    for (label, gens) in DUALITY_MODULES {
        let cell = format!("duality/node_p2/{label}");
        let started = std::time::Instant::now();
        let outcome = (|| {
            let tau = corpus.tau("node_p2")?;
            let rp = corpus.ring("node_p2");
            let ring = rp.ambient();
            let mut parsed = Vec::new();
            for g in gens {
                parsed.push(parse_polynomial(ring, g)?);
            }
            let module = GradedModule::quotient_module(ring, &parsed)?;
            let report = duality_check(rp, &module, &tau.test_element, 2)?;
            let verdict = if report.holds { Verdict::Pass } else { Verdict::Fail };
            Ok(CheckRecord::new(
                cell.as_str(),
                verdict,
                vec![report.dim_interior.to_string()],
                vec![(report.dim_module - report.dim_zero_closure_dual).to_string()],
            )
            .with_note(format!(
                "dim L = {}, dim of the zero closure in the dual = {}",
                report.dim_module, report.dim_zero_closure_dual
            )))
        })();
        push_cell(&mut records, cell.clone(), outcome);
        progress(&cell, started);
    }

    for (name, j_expr, e) in ORACLE_CELLS {
        let cell = format!("oracle/{name}/e{e}");
        let started = std::time::Instant::now();
        let outcome = (|| {
            let rp = corpus.ring(name);
            let j = Ideal::new(rp.ambient(), vec![parse_polynomial(rp.ambient(), j_expr)?]);
            let comparison = compare_level_image(rp, &j, e, options.degree_cap)?;
            let record = match comparison {
                OracleComparison::Agree => CheckRecord::new(cell.as_str(), Verdict::Pass, vec![], vec![])
                    .with_note(format!("truncated spans agree at degree {}", options.degree_cap)),
                OracleComparison::RaiseDegreeCap => {
                    CheckRecord::new(cell.as_str(), Verdict::Uncheckable, vec![], vec![])
                        .with_note("truncation too small, raise --degree-cap")
                }
                OracleComparison::EngineMissing => {
                    CheckRecord::new(cell.as_str(), Verdict::Fail, vec![], vec![])
                        .with_note("enumerated maps produce values outside the engine image")
                }
            };
            Ok(record)
        })();
        push_cell(&mut records, cell.clone(), outcome);
        progress(&cell, started);
    }

    records.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(records)
}

/// Suite exit policy: any FAIL dominates, then any NOT_STABILIZED.
pub fn exit_code_for(records: &[CheckRecord]) -> u8 {
    if records.iter().any(|r| r.verdict == Verdict::Fail) {
        4
    } else if records.iter().any(|r| r.verdict == Verdict::NotStabilized) {
        3
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_rings_all_build() {
        for (name, text) in BUNDLED_RINGS {
            let spec = parse_ring_spec(text).unwrap_or_else(|e| panic!("{name}: {e}"));
            spec.build().unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn exit_codes_rank_failures_over_stalls() {
        let pass = CheckRecord::new("a", Verdict::Pass, vec![], vec![]);
        let stall = CheckRecord::new("b", Verdict::NotStabilized, vec![], vec![]);
        let fail = CheckRecord::new("c", Verdict::Fail, vec![], vec![]);
        assert_eq!(exit_code_for(&[pass.clone()]), 0);
        assert_eq!(exit_code_for(&[pass.clone(), stall.clone()]), 3);
        assert_eq!(exit_code_for(&[pass, stall, fail]), 4);
    }
}
