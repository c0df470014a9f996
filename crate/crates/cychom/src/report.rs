//! Reports: serde types for `--json` and the plain-text tables.

use std::collections::BTreeMap;
use std::fmt;

use cychom_core::chains::HomologyResult;
use cychom_core::ScalarDomain;
use serde::{Deserialize, Serialize};

/// One homology group: `{degree, betti, torsion, domain}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupRow {
    pub degree: i64,
    pub betti: usize,
    /// Invariant factors over `z`, each dividing the next.
    pub torsion: Vec<u64>,
    pub domain: String,
    /// False when the next boundary was not available, so the value is only
    /// an upper bound.
    pub complete: bool,
}

pub fn group_rows(h: &HomologyResult) -> Vec<GroupRow> {
    h.groups
        .iter()
        .map(|g| GroupRow {
            degree: g.degree,
            betti: g.betti,
            torsion: g.torsion.iter().map(|t| u64::try_from(t).unwrap_or(u64::MAX)).collect(),
            domain: h.domain.to_string(),
            complete: g.complete,
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerRow {
    pub n: i64,
    /// `dim HC_(n+2j)`, `j = 0..=periods`
    pub dims: Vec<usize>,
    /// `S: HC_(n+2j+2) -> HC_(n+2j)` is an isomorphism
    pub s_iso: Vec<bool>,
    pub stabilized: Vec<bool>,
    pub stable_from: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeDim {
    pub degree: i64,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerJson {
    pub window: usize,
    pub periods: usize,
    /// `STABLE` or `UNSTABLE`
    pub flag: String,
    pub hh_top: Vec<DegreeDim>,
    pub degrees: Vec<TowerRow>,
}

/// `homology`, `hh` and `hc`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub command: String,
    pub object: String,
    pub domain: String,
    /// `normalized`, `unnormalized`, or the cyclic variant.
    pub mode: String,
    pub groups: Vec<GroupRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tower: Option<TowerJson>,
}

impl HomologyReport {
    pub fn betti(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.betti).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub instances: usize,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SbiNodeJson {
    pub node: String,
    pub im_dim: usize,
    pub ker_dim: usize,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HkrRow {
    pub n: usize,
    pub omega_dim: usize,
    pub pi_eps_identity: bool,
    pub hh_dim: Option<usize>,
    /// `ε` and `π` are mutually inverse on homology (informational).
    pub isomorphism: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub object: String,
    pub domain: String,
    pub max_degree: usize,
    pub passed: bool,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sbi: Option<Vec<SbiNodeJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hkr: Option<Vec<HkrRow>>,
}

impl VerifyReport {
    pub fn new(suite: &str, object: String, domain: ScalarDomain, max_degree: usize, checks: Vec<Check>) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        VerifyReport { suite: suite.into(), object, domain: domain.to_string(), max_degree, passed, checks, sbi: None, hkr: None }
    }
}

/// Checks from per-relation instance counts and `"relation: detail"` failures.
pub fn relation_checks(checked: &BTreeMap<&'static str, usize>, failures: &[String]) -> Vec<Check> {
    checked
        .iter()
        .map(|(&name, &instances)| {
            let prefix = format!("{name}: ");
            let details: Vec<String> = failures.iter().filter_map(|f| f.strip_prefix(&prefix).map(str::to_string)).collect();
            Check { name: name.into(), instances, passed: details.is_empty(), details }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerhamReport {
    pub object: String,
    pub domain: String,
    /// `dim Ωⁿ` for `n = 0..=max`
    pub omega: Vec<usize>,
    /// `dim Hⁿ` for `n = 0..=max`
    pub cohomology: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresetList {
    pub specs: Vec<String>,
    pub algebras: Vec<String>,
    pub groups: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Report {
    Homology(HomologyReport),
    Verify(VerifyReport),
    Derham(DerhamReport),
    Presets(PresetList),
}

impl Report {
    /// Whether the run counts as a pass for the exit code.
    pub fn passed(&self) -> bool {
        match self {
            Report::Verify(v) => v.passed,
            _ => true,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

fn field_name(domain: &str) -> String {
    match domain {
        "q" => "Q".into(),
        "z" => "Z".into(),
        d => d.strip_prefix("zp:").map_or_else(|| d.to_string(), |p| format!("F_{p}")),
    }
}

fn group_text(g: &GroupRow) -> String {
    let mut parts = Vec::new();
    if g.betti > 0 {
        parts.push(if g.betti == 1 { field_name(&g.domain) } else { format!("{}^{}", field_name(&g.domain), g.betti) });
    }
    parts.extend(g.torsion.iter().map(|t| format!("Z/{t}")));
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn symbol(command: &str, mode: &str) -> &'static str {
    match (command, mode) {
        ("hh", _) => "HH",
        ("hc", "negative") => "HC^-",
        ("hc", "periodic") => "HC^per",
        ("hc", _) => "HC",
        _ => "H",
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl fmt::Display for HomologyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = symbol(&self.command, &self.mode);
        writeln!(f, "{} of {} over {} ({})", self.command, self.object, field_name(&self.domain), self.mode)?;
        for g in &self.groups {
            let note = if g.complete { "" } else { "  (upper bound, next boundary unknown)" };
            writeln!(f, "  {sym}_{} = {}{note}", g.degree, group_text(g))?;
        }
        let betti: Vec<String> = self.groups.iter().map(|g| g.betti.to_string()).collect();
        writeln!(f, "betti: {}", betti.join(" "))?;
        if let Some(t) = &self.tower {
            writeln!(f, "S-tower over a window of {} ({} periods): {}", t.window, t.periods, t.flag)?;
            let hh: Vec<String> = t.hh_top.iter().map(|d| format!("HH_{} = {}", d.degree, d.dim)).collect();
            writeln!(f, "  top half of the window: {}", hh.join(", "))?;
            for r in &t.degrees {
                let dims: Vec<String> = r.dims.iter().map(usize::to_string).collect();
                let iso: Vec<&str> = r.s_iso.iter().map(|&b| yes(b)).collect();
                let from = r.stable_from.map_or_else(|| "never".to_string(), |j| j.to_string());
                writeln!(
                    f,
                    "  n = {}: dims {}; S iso {}; stable from {from}",
                    r.n,
                    dims.join(" <- "),
                    iso.join(" "),
                )?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verify {} on {} over {}, degrees <= {}", self.suite, self.object, field_name(&self.domain), self.max_degree)?;
        for c in &self.checks {
            writeln!(f, "  {}  {}  ({} instances)", if c.passed { "PASS" } else { "FAIL" }, c.name, c.instances)?;
            for d in &c.details {
                writeln!(f, "        {d}")?;
            }
        }
        if let Some(nodes) = &self.sbi {
            for n in nodes {
                writeln!(f, "  node {:<12} im {} ker {} {}", n.node, n.im_dim, n.ker_dim, if n.exact { "exact" } else { "NOT exact" })?;
            }
        }
        if let Some(rows) = &self.hkr {
            for r in rows {
                let hh = r.hh_dim.map_or_else(|| "-".into(), |d| d.to_string());
                let iso = r.isomorphism.map_or("-", yes);
                writeln!(
                    f,
                    "  n = {}: dim Ω = {}, dim HH = {hh}, π∘ε = id: {}, mutually inverse: {iso}",
                    r.n,
                    r.omega_dim,
                    yes(r.pi_eps_identity)
                )?;
            }
        }
        writeln!(f, "result: {}", if self.passed { "PASS" } else { "FAIL" })
    }
}

impl fmt::Display for DerhamReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "de Rham complex of {} over {}", self.object, field_name(&self.domain))?;
        for (n, d) in self.omega.iter().enumerate() {
            let h = self.cohomology.get(n).map_or_else(|| "?".into(), usize::to_string);
            writeln!(f, "  n = {n}: dim Ω = {d}, dim H = {h}")?;
        }
        Ok(())
    }
}

impl fmt::Display for PresetList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "simplicial sets: {}", self.specs.join(", "))?;
        writeln!(f, "algebras: {}", self.algebras.join(", "))?;
        writeln!(f, "groups: {}", self.groups.join(", "))
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Report::Homology(r) => r.fmt(f),
            Report::Verify(r) => r.fmt(f),
            Report::Derham(r) => r.fmt(f),
            Report::Presets(r) => r.fmt(f),
        }
    }
}
