//! Textual and JSON inputs: domains, groups, algebras and simplicial sets.

use std::fmt;
use std::str::FromStr;

use cychom_core::hochschild::FiniteAlgebra;
use cychom_core::simplicial::FiniteGroup;
use cychom_core::{Rational, ScalarDomain};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::CliError;

/// `q`, `zp:<p>` or `z`.
pub fn parse_domain(s: &str) -> Result<ScalarDomain, CliError> {
    match s.trim() {
        "q" | "Q" => Ok(ScalarDomain::Rationals),
        "z" | "Z" => Ok(ScalarDomain::Integers),
        t => {
            let p = t
                .strip_prefix("zp:")
                .and_then(|p| p.parse::<u64>().ok())
                .ok_or_else(|| CliError::Parse(format!("unknown domain `{s}`, expected q, zp:<p> or z")))?;
            Ok(ScalarDomain::prime_field(p)?)
        }
    }
}

/// A coefficient: a JSON integer or a string such as `"-3/4"`.
pub fn parse_coefficient(v: &Value) -> Result<Rational, CliError> {
    let bad = || CliError::Parse(format!("coefficient {v} is not an integer or a \"p/q\" string"));
    match v {
        Value::Number(n) => n.as_i64().map(Rational::from_int).ok_or_else(bad),
        Value::String(s) => {
            let (num, den) = match s.split_once('/') {
                Some((a, b)) => (a.trim(), b.trim()),
                None => (s.trim(), "1"),
            };
            let num: i64 = num.parse().map_err(|_| bad())?;
            let den: i64 = den.parse().map_err(|_| bad())?;
            if den == 0 {
                return Err(bad());
            }
            Ok(Rational::new(num, den))
        }
        _ => Err(bad()),
    }
}

/// `{"table": [[..], ..]}` (row-major, `table[a][b] = a·b`, identity
/// detected) or `{"preset": "cyclic:3"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupInput {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
}

impl GroupInput {
    pub fn build(&self) -> Result<FiniteGroup, CliError> {
        match (&self.table, &self.preset) {
            (Some(t), None) => Ok(FiniteGroup::from_table(t.clone())?),
            (None, Some(p)) => Ok(FiniteGroup::from_preset(p)?),
            _ => Err(CliError::Parse("group input needs exactly one of `table` and `preset`".into())),
        }
    }
}

/// Either structure constants
/// `{"dim": d, "labels": [..], "unit": [c_0, ..], "table": [[[c_0, ..], ..], ..]}`
/// with `table[i][j]` the coordinates of `e_i e_j`, or
/// `{"preset": "group" | "truncpoly" | "productfield" | "unit", "params": ..}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraInput {
    Structure {
        dim: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
        unit: Vec<Value>,
        table: Vec<Vec<Vec<Value>>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
    },
    Preset {
        preset: String,
        #[serde(default)]
        params: Value,
    },
}

fn dense(v: &[Value], dim: usize, what: &str) -> Result<Vec<(usize, Rational)>, CliError> {
    if v.len() != dim {
        return Err(CliError::Parse(format!("{what} has {} coordinates, expected {dim}", v.len())));
    }
    let mut out = Vec::new();
    for (k, x) in v.iter().enumerate() {
        let c = parse_coefficient(x)?;
        if !c.is_zero() {
            out.push((k, c));
        }
    }
    Ok(out)
}

impl AlgebraInput {
    pub fn build(&self, dom: ScalarDomain) -> Result<FiniteAlgebra, CliError> {
        match self {
            AlgebraInput::Structure { dim, labels, unit, table, name } => {
                let labels = match labels {
                    Some(l) if l.len() == *dim => l.clone(),
                    Some(l) => return Err(CliError::Parse(format!("{} labels for dimension {dim}", l.len()))),
                    None => (0..*dim).map(|k| format!("e{k}")).collect(),
                };
                if table.len() != *dim || table.iter().any(|r| r.len() != *dim) {
                    return Err(CliError::Parse(format!("table must be {dim} x {dim}")));
                }
                let table = table
                    .iter()
                    .enumerate()
                    .map(|(i, row)| row.iter().enumerate().map(|(j, v)| dense(v, *dim, &format!("table[{i}][{j}]"))).collect())
                    .collect::<Result<Vec<Vec<_>>, _>>()?;
                let unit = dense(unit, *dim, "unit")?;
                Ok(FiniteAlgebra::new(name.clone().unwrap_or_else(|| "A".into()), labels, table, unit, dom)?)
            }
            AlgebraInput::Preset { preset, params } => {
                let param = match params {
                    Value::Null => String::new(),
                    Value::Number(n) => n.to_string(),
                    Value::String(s) => s.clone(),
                    Value::Object(o) => match o.get("group") {
                        Some(g) => return Ok(FiniteAlgebra::group_algebra(&serde_json::from_value::<GroupInput>(g.clone())?.build()?, dom)?),
                        None => o.values().next().map(|v| v.to_string()).unwrap_or_default(),
                    },
                    other => return Err(CliError::Parse(format!("unsupported params {other}"))),
                };
                let spec = if param.is_empty() { preset.clone() } else { format!("{preset}:{param}") };
                Ok(FiniteAlgebra::from_preset(&spec, dom)?)
            }
        }
    }
}

/// A built-in simplicial set:
/// `circle`, `bg:<group>` (optionally `bg:<group>@<z>` for the cyclic
/// structure twisted by the central element `z`), `cyclicbar:<group>`, or
/// `free:<spec>` for the free cyclic set on another spec.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum SpecInput {
    Circle,
    Bg {
        group: GroupInput,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        central: Option<usize>,
    },
    Cyclicbar {
        group: GroupInput,
    },
    Free {
        base: Box<SpecInput>,
    },
}

impl FromStr for SpecInput {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let group = |g: &str| GroupInput { table: None, preset: Some(g.to_string()) };
        if s == "circle" {
            return Ok(SpecInput::Circle);
        }
        if let Some(rest) = s.strip_prefix("free:") {
            return Ok(SpecInput::Free { base: Box::new(rest.parse()?) });
        }
        if let Some(rest) = s.strip_prefix("cyclicbar:") {
            return Ok(SpecInput::Cyclicbar { group: group(rest) });
        }
        if let Some(rest) = s.strip_prefix("bg:") {
            let (g, central) = match rest.split_once('@') {
                Some((g, z)) => (g, Some(z.parse().map_err(|_| CliError::Parse(format!("bad central element in `{s}`")))?)),
                None => (rest, None),
            };
            return Ok(SpecInput::Bg { group: group(g), central });
        }
        Err(CliError::Parse(format!("unknown simplicial set `{s}`")))
    }
}

impl fmt::Display for SpecInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = |gi: &GroupInput| gi.preset.clone().unwrap_or_else(|| format!("table[{}]", gi.table.as_ref().map_or(0, Vec::len)));
        match self {
            SpecInput::Circle => write!(f, "circle"),
            SpecInput::Bg { group, central: None } => write!(f, "bg:{}", g(group)),
            SpecInput::Bg { group, central: Some(z) } => write!(f, "bg:{}@{z}", g(group)),
            SpecInput::Cyclicbar { group } => write!(f, "cyclicbar:{}", g(group)),
            SpecInput::Free { base } => write!(f, "free:{base}"),
        }
    }
}

/// Contents of an `--input` file: an algebra, a simplicial set or a group.
#[derive(Clone, Debug, PartialEq)]
pub enum FileInput {
    Algebra(AlgebraInput),
    Spec(SpecInput),
}

pub fn read_input(path: &std::path::Path) -> Result<FileInput, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text)?;
    if v.get("kind").is_some() {
        return Ok(FileInput::Spec(serde_json::from_value(v)?));
    }
    if v.get("dim").is_some() || v.get("preset").is_some() && v.get("table").is_none() {
        return Ok(FileInput::Algebra(serde_json::from_value(v)?));
    }
    Err(CliError::Parse(format!("{}: not an algebra (`dim`/`preset`) or simplicial set (`kind`)", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn domains() {
        assert_eq!(parse_domain("q").unwrap(), ScalarDomain::Rationals);
        assert_eq!(parse_domain("zp:5").unwrap(), ScalarDomain::PrimeField(5));
        assert!(parse_domain("zp:4").is_err());
        assert!(parse_domain("r").is_err());
    }

    #[test]
    fn coefficients() {
        assert_eq!(parse_coefficient(&json!(3)).unwrap(), Rational::from_int(3));
        assert_eq!(parse_coefficient(&json!("-1/2")).unwrap(), Rational::new(-1, 2));
        assert!(parse_coefficient(&json!(0.5)).is_err());
        assert!(parse_coefficient(&json!("1/0")).is_err());
    }

    #[test]
    fn dual_numbers_from_structure_constants() {
        let a: AlgebraInput = serde_json::from_value(json!({
            "dim": 2, "labels": ["1", "x"], "unit": [1, 0],
            "table": [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]
        }))
        .unwrap();
        let alg = a.build(ScalarDomain::Rationals).unwrap();
        assert_eq!(alg.dim(), 2);
        assert!(alg.is_commutative());
        let preset: AlgebraInput = serde_json::from_value(json!({"preset": "truncpoly", "params": 2})).unwrap();
        assert_eq!(preset.build(ScalarDomain::Rationals).unwrap().table(), alg.table());
    }

    #[test]
    fn spec_strings_roundtrip() {
        for s in ["circle", "bg:cyclic:2", "bg:cyclic:3@1", "cyclicbar:symmetric:3", "free:bg:cyclic:2"] {
            let spec: SpecInput = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            let json = serde_json::to_string(&spec).unwrap();
            assert_eq!(serde_json::from_str::<SpecInput>(&json).unwrap(), spec);
        }
        assert!("torus".parse::<SpecInput>().is_err());
    }
}
