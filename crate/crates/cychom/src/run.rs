//! Executing one job: build the object, run the computation, fill a report.

use cychom_core::chains::{
    aw_ez_report, check_module_identities, homology, linearize, LinearizedSet, Normalize, SimplicialModule,
};
use cychom_core::cyclic::{bprime_homotopy_check, connes_b_report, connes_maps, hc, hc_window, window_extent, WindowVariant};
use cychom_core::hochschild::{derham, hh, hkr_report};
use cychom_core::simplicial::{
    adjunction_report, check_identities, circle_to_bz, CheckMode, Circle, IdentityReport, LazyBZ, SimplicialSet,
};
use cychom_core::ScalarDomain;

use crate::input::{AlgebraInput, SpecInput};
use crate::objects::{algebra_presets, build_algebra, build_spec, hochschild_module, spec_presets, Object, GROUP_PRESETS};
use crate::report::{
    group_rows, relation_checks, Check, DegreeDim, DerhamReport, HkrRow, HomologyReport, PresetList, Report, SbiNodeJson,
    TowerJson, TowerRow, VerifyReport,
};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Relations,
    Sbi,
    Hkr,
    AwEz,
    Adjunction,
    ExerciseBz,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Sbi => "sbi",
            Suite::Hkr => "hkr",
            Suite::AwEz => "aw-ez",
            Suite::Adjunction => "adjunction",
            Suite::ExerciseBz => "exercise-bz",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Variant {
    #[default]
    Cyclic,
    Negative,
    Periodic,
}

impl Variant {
    fn name(self) -> &'static str {
        match self {
            Variant::Cyclic => "cyclic",
            Variant::Negative => "negative",
            Variant::Periodic => "periodic",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Homology,
    Hh,
    Hc,
    Derham,
    Presets,
    Verify(Suite),
}

#[derive(Clone, Debug)]
pub struct JobConfig {
    pub command: Command,
    pub object: Option<Object>,
    /// Second factor for `verify aw-ez`.
    pub with: Option<Object>,
    pub domain: ScalarDomain,
    pub max_degree: usize,
    pub normalize: Normalize,
    pub variant: Variant,
    pub window: usize,
    pub budget: u128,
}

impl JobConfig {
    pub fn new(command: Command, object: Option<Object>) -> Self {
        JobConfig {
            command,
            object,
            with: None,
            domain: ScalarDomain::Rationals,
            max_degree: 4,
            normalize: Normalize::Normalized,
            variant: Variant::Cyclic,
            window: 4,
            budget: 1 << 20,
        }
    }

    fn object(&self) -> Result<&Object, CliError> {
        self.object.as_ref().ok_or_else(|| CliError::Parse("this command needs --preset or --input".into()))
    }

    fn spec(&self) -> Result<&SpecInput, CliError> {
        match self.object()? {
            Object::Spec(s) => Ok(s),
            o => Err(CliError::Parse(format!("`{}` is an algebra, this command needs a simplicial set", o.name()))),
        }
    }

    fn algebra(&self) -> Result<&AlgebraInput, CliError> {
        match self.object()? {
            Object::Algebra(a) => Ok(a),
            o => Err(CliError::Parse(format!("`{}` is a simplicial set, this command needs an algebra", o.name()))),
        }
    }

    fn mode_name(&self) -> &'static str {
        match self.normalize {
            Normalize::Normalized => "normalized",
            Normalize::Unnormalized => "unnormalized",
        }
    }
}

/// The simplicial module behind an object: the Hochschild module of an
/// algebra, or the linearization of a simplicial set.
fn module(obj: &Object, dom: ScalarDomain, top: usize, budget: u128) -> Result<Box<dyn SimplicialModule>, CliError> {
    Ok(match obj {
        Object::Spec(s) => Box::new(LinearizedSet::new(build_spec(s, top, budget)?, dom)),
        Object::Algebra(a) => Box::new(hochschild_module(&build_algebra(a, dom)?, top, budget)?),
    })
}

pub fn run(cfg: &JobConfig) -> Result<Report, CliError> {
    let max = cfg.max_degree;
    let degrees = 0..=max as i64;
    let dom = cfg.domain;
    match cfg.command {
        Command::Presets => Ok(Report::Presets(PresetList {
            specs: spec_presets(),
            algebras: algebra_presets().iter().map(|s| s.to_string()).collect(),
            groups: GROUP_PRESETS.iter().map(|s| s.to_string()).collect(),
        })),
        Command::Homology => {
            let set = build_spec(cfg.spec()?, max + 1, cfg.budget)?;
            let c = linearize(set, dom, cfg.normalize)?;
            let h = homology(&c, degrees)?;
            Ok(homology_report(cfg, "homology", cfg.mode_name(), &h, None))
        }
        Command::Hh => {
            let alg = build_algebra(cfg.algebra()?, dom)?;
            let h = hh(&alg, degrees, cfg.normalize, cfg.budget)?;
            Ok(homology_report(cfg, "hh", cfg.mode_name(), &h, None))
        }
        Command::Hc => {
            let obj = cfg.object()?;
            match cfg.variant {
                Variant::Cyclic => {
                    let m = module(obj, dom, max + 2, cfg.budget)?;
                    let h = hc(&*m, degrees)?;
                    Ok(homology_report(cfg, "hc", "cyclic", &h, None))
                }
                v => {
                    let (_, top) = window_extent(cfg.window, max as i64);
                    let m = module(obj, dom, top as usize + 1, cfg.budget)?;
                    let wv = if v == Variant::Negative { WindowVariant::Negative } else { WindowVariant::Periodic };
                    let (h, t) = hc_window(wv, &*m, degrees, cfg.window)?;
                    let tower = TowerJson {
                        window: t.window,
                        periods: t.periods,
                        flag: if t.stable { "STABLE" } else { "UNSTABLE" }.into(),
                        hh_top: t.hh_top.iter().map(|&(degree, dim)| DegreeDim { degree, dim }).collect(),
                        degrees: t
                            .degrees
                            .iter()
                            .map(|d| TowerRow {
                                n: d.n,
                                dims: d.dims.clone(),
                                s_iso: d.s_iso.clone(),
                                stabilized: d.stabilized(),
                                stable_from: d.stable_from,
                            })
                            .collect(),
                    };
                    Ok(homology_report(cfg, "hc", v.name(), &h, Some(tower)))
                }
            }
        }
        Command::Derham => {
            let alg = build_algebra(cfg.algebra()?, dom)?;
            let d = derham(&alg, max, cfg.budget)?;
            Ok(Report::Derham(DerhamReport {
                object: cfg.object()?.name(),
                domain: dom.to_string(),
                omega: d.dims.into_iter().take(max + 1).collect(),
                cohomology: d.cohomology.into_iter().take(max + 1).collect(),
            }))
        }
        Command::Verify(suite) => verify(cfg, suite).map(Report::Verify),
    }
}

fn homology_report(
    cfg: &JobConfig,
    command: &str,
    mode: &str,
    h: &cychom_core::chains::HomologyResult,
    tower: Option<TowerJson>,
) -> Report {
    Report::Homology(HomologyReport {
        command: command.into(),
        object: cfg.object.as_ref().map_or_else(String::new, Object::name),
        domain: cfg.domain.to_string(),
        mode: mode.into(),
        groups: group_rows(h),
        tower,
    })
}

fn identity_checks(rep: &IdentityReport) -> Vec<Check> {
    let mut checks: Vec<Check> = rep
        .checked
        .iter()
        .map(|(&name, &instances)| {
            let details: Vec<String> = rep.violations.iter().filter(|v| v.relation == name).map(|v| v.to_string()).collect();
            Check { name: name.into(), instances, passed: details.is_empty(), details }
        })
        .collect();
    // only the first violations are kept, so the listed ones can miss a relation
    if !rep.passed() && checks.iter().all(|c| c.passed) {
        checks.push(Check {
            name: "unlisted violations".into(),
            instances: rep.failures,
            passed: false,
            details: vec![format!("{} failures in total", rep.failures)],
        });
    }
    checks
}

fn flag_check(name: &str, flags: &[bool]) -> Check {
    let details = flags.iter().enumerate().filter(|(_, &b)| !b).map(|(n, _)| format!("fails in degree {n}")).collect();
    Check { name: name.into(), instances: flags.len(), passed: flags.iter().all(|&b| b), details }
}

fn verify(cfg: &JobConfig, suite: Suite) -> Result<VerifyReport, CliError> {
    let max = cfg.max_degree;
    let dom = cfg.domain;
    let name = || cfg.object.as_ref().map_or_else(String::new, Object::name);
    let mut report = match suite {
        Suite::Relations => match cfg.object()? {
            Object::Spec(s) => {
                let set = build_spec(s, max, cfg.budget)?;
                let mode = if set.is_cyclic() { CheckMode::Cyclic } else { CheckMode::Simplicial };
                let rep = check_identities(&set, mode)?;
                VerifyReport::new(suite.name(), name(), dom, max, identity_checks(&rep))
            }
            Object::Algebra(a) => {
                let m = hochschild_module(&build_algebra(a, dom)?, max, cfg.budget)?;
                let mut rep = check_module_identities(&m, true)?;
                rep.merge(bprime_homotopy_check(&m)?);
                rep.merge(connes_b_report(&m)?);
                VerifyReport::new(suite.name(), name(), dom, max, relation_checks(&rep.checked, &rep.failures))
            }
        },
        Suite::Sbi => {
            let m = module(cfg.object()?, dom, max + 1, cfg.budget)?;
            let rep = connes_maps(&*m, max)?;
            let mut checks = relation_checks(&rep.relations.checked, &rep.relations.failures);
            checks.push(Check { name: "S∘I = 0".into(), instances: rep.maps.len(), passed: rep.s_after_i_zero, details: vec![] });
            let exact: Vec<bool> = rep.nodes.iter().map(|n| n.exact).collect();
            let mut ex = flag_check("exact at every node", &exact);
            ex.details = rep.nodes.iter().filter(|n| !n.exact).map(|n| format!("not exact at {}", n.node)).collect();
            checks.push(ex);
            let mut v = VerifyReport::new(suite.name(), name(), dom, max, checks);
            v.sbi = Some(
                rep.nodes
                    .iter()
                    .map(|n| SbiNodeJson { node: n.node.clone(), im_dim: n.im_dim, ker_dim: n.ker_dim, exact: n.exact })
                    .collect(),
            );
            v
        }
        Suite::Hkr => {
            let alg = build_algebra(cfg.algebra()?, dom)?;
            let rows = hkr_report(&alg, max, true, cfg.budget)?;
            let flags: Vec<bool> = rows.iter().map(|r| r.pi_eps_identity).collect();
            let mut v = VerifyReport::new(suite.name(), name(), dom, max, vec![flag_check("π∘ε = id on Ωⁿ", &flags)]);
            v.hkr = Some(
                rows.iter()
                    .map(|r| HkrRow {
                        n: r.n,
                        omega_dim: r.omega_dim,
                        pi_eps_identity: r.pi_eps_identity,
                        hh_dim: r.hh_dim,
                        isomorphism: r.eps_pi_identity,
                    })
                    .collect(),
            );
            v
        }
        Suite::AwEz => {
            let other = cfg.with.as_ref().ok_or_else(|| CliError::Parse("verify aw-ez needs --with <preset>".into()))?;
            let a = module(cfg.object()?, dom, max, cfg.budget)?;
            let b = module(other, dom, max, cfg.budget)?;
            let rep = aw_ez_report(&*a, &*b)?;
            let checks = vec![
                flag_check("AW∘EZ = id on normalized chains", &rep.aw_ez_identity),
                flag_check("EZ∘AW = id on homology", &rep.ez_aw_homology_identity),
            ];
            VerifyReport::new(suite.name(), format!("{} x {}", name(), other.name()), dom, max, checks)
        }
        Suite::Adjunction => {
            let set = build_spec(cfg.spec()?, max, cfg.budget)?;
            let rep = adjunction_report(set)?;
            VerifyReport::new(suite.name(), name(), dom, max, identity_checks(&rep))
        }
        Suite::ExerciseBz => {
            let circle = Circle::new(max);
            let bz = LazyBZ::new(max);
            let rep = circle_to_bz(&circle, &bz).check(CheckMode::Cyclic)?;
            VerifyReport::new(suite.name(), "circle -> B(Z)".into(), dom, max, identity_checks(&rep))
        }
    };
    report.passed = report.checks.iter().all(|c| c.passed);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn job(command: Command, preset: &str) -> JobConfig {
        JobConfig::new(command, Some(Object::from_preset(preset, None, None).unwrap()))
    }

    #[test]
    fn hh_of_dual_numbers() {
        let Report::Homology(r) = run(&job(Command::Hh, "truncpoly:2")).unwrap() else { panic!() };
        assert_eq!(r.betti(), [2, 1, 1, 1, 1]);
    }

    #[test]
    fn wrong_kind_of_object_is_a_parse_error() {
        let e = run(&job(Command::Hh, "circle")).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        let e = run(&job(Command::Homology, "unit")).unwrap_err();
        assert_eq!(e.exit_code(), 2);
    }

    #[test]
    fn verify_relations_on_an_algebra() {
        let mut cfg = job(Command::Verify(Suite::Relations), "group:cyclic:2");
        cfg.max_degree = 3;
        let Report::Verify(v) = run(&cfg).unwrap() else { panic!() };
        assert!(v.passed);
        assert!(v.checks.len() > 3);
        assert!(v.checks.iter().all(|c| c.instances > 0));
    }
}
