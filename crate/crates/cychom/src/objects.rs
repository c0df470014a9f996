//! Built-in objects and their construction under a size budget.

use cychom_core::hochschild::{tensor_count, FiniteAlgebra, HochschildModule, ALGEBRA_PRESETS};
use cychom_core::simplicial::{Circle, ClassifyingSpace, CyclicBar, FreeCyclic, SimplicialSet};
use cychom_core::{Error, ScalarDomain};

use crate::input::{AlgebraInput, FileInput, SpecInput};
use crate::CliError;

/// Group presets used to instantiate the group-based specs.
pub const GROUP_PRESETS: &[&str] = &["cyclic:2", "cyclic:3", "cyclic:4", "symmetric:3", "product:2,3"];

/// Every built-in simplicial set, in a fixed order.
pub fn spec_presets() -> Vec<String> {
    let mut out = vec!["circle".to_string()];
    out.extend(GROUP_PRESETS.iter().map(|g| format!("bg:{g}")));
    out.extend(GROUP_PRESETS.iter().map(|g| format!("cyclicbar:{g}")));
    out.push("free:circle".into());
    out.push("free:bg:cyclic:2".into());
    out
}

pub fn algebra_presets() -> &'static [&'static str] {
    ALGEBRA_PRESETS
}

/// What a `--preset` or `--input` names.
#[derive(Clone, Debug, PartialEq)]
pub enum Object {
    Spec(SpecInput),
    Algebra(AlgebraInput),
}

impl Object {
    /// Algebra presets and spec strings share one namespace; `group` fills in
    /// the bare `bg` and `cyclicbar` forms and `central` the twist of `bg`.
    pub fn from_preset(preset: &str, group: Option<&str>, central: Option<usize>) -> Result<Self, CliError> {
        let needs_group = |kind: &str| {
            group.map(|g| format!("{kind}:{g}")).ok_or_else(|| CliError::Parse(format!("preset `{kind}` needs --group")))
        };
        let mut spec = match preset {
            "bg" => needs_group("bg")?,
            "cyclicbar" => needs_group("cyclicbar")?,
            p => p.to_string(),
        };
        if let Some(z) = central {
            if !spec.starts_with("bg:") || spec.contains('@') {
                return Err(CliError::Parse("--central only applies to bg".into()));
            }
            spec = format!("{spec}@{z}");
        }
        let is_algebra = spec == "unit" || ["truncpoly:", "productfield:", "group:"].iter().any(|h| spec.starts_with(h));
        if is_algebra {
            let (head, rest) = spec.split_once(':').unwrap_or((spec.as_str(), ""));
            let params = if rest.is_empty() { serde_json::Value::Null } else { serde_json::Value::String(rest.to_string()) };
            return Ok(Object::Algebra(AlgebraInput::Preset { preset: head.to_string(), params }));
        }
        Ok(Object::Spec(spec.parse()?))
    }

    pub fn from_file(f: FileInput) -> Self {
        match f {
            FileInput::Algebra(a) => Object::Algebra(a),
            FileInput::Spec(s) => Object::Spec(s),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Object::Spec(s) => s.to_string(),
            Object::Algebra(AlgebraInput::Preset { preset, params }) => match params {
                serde_json::Value::Null => preset.clone(),
                serde_json::Value::String(s) => format!("{preset}:{s}"),
                p => format!("{preset}:{p}"),
            },
            Object::Algebra(AlgebraInput::Structure { name, dim, .. }) => {
                name.clone().unwrap_or_else(|| format!("algebra of dimension {dim}"))
            }
        }
    }
}

/// Number of elements of degree `n`, saturating.
pub fn spec_size(spec: &SpecInput, n: usize) -> Result<u128, CliError> {
    Ok(match spec {
        SpecInput::Circle => n as u128 + 1,
        SpecInput::Bg { group, .. } => (group.build()?.order() as u128).saturating_pow(n as u32),
        SpecInput::Cyclicbar { group } => (group.build()?.order() as u128).saturating_pow(n as u32 + 1),
        SpecInput::Free { base } => spec_size(base, n)?.saturating_mul(n as u128 + 1),
    })
}

/// The simplicial set truncated at `top`, after checking every degree fits the budget.
pub fn build_spec(spec: &SpecInput, top: usize, budget: u128) -> Result<Box<dyn SimplicialSet>, CliError> {
    for n in 0..=top {
        let needed = spec_size(spec, n)?;
        if needed > budget {
            return Err(Error::BudgetExceeded { needed, budget }.into());
        }
    }
    build_unchecked(spec, top)
}

fn build_unchecked(spec: &SpecInput, top: usize) -> Result<Box<dyn SimplicialSet>, CliError> {
    Ok(match spec {
        SpecInput::Circle => Box::new(Circle::new(top)),
        SpecInput::Bg { group, central } => Box::new(ClassifyingSpace::new(group.build()?, top, *central)?),
        SpecInput::Cyclicbar { group } => Box::new(CyclicBar::new(group.build()?, top)),
        SpecInput::Free { base } => Box::new(FreeCyclic::new(build_unchecked(base, top)?)),
    })
}

pub fn build_algebra(a: &AlgebraInput, dom: ScalarDomain) -> Result<FiniteAlgebra, CliError> {
    a.build(dom)
}

pub fn hochschild_module(alg: &FiniteAlgebra, top: usize, budget: u128) -> Result<HochschildModule, CliError> {
    tensor_count(alg.dim(), top, budget)?;
    Ok(HochschildModule::new(alg, top, budget)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_resolve() {
        for s in spec_presets() {
            assert!(matches!(Object::from_preset(&s, None, None).unwrap(), Object::Spec(_)), "{s}");
        }
        for a in algebra_presets() {
            let o = Object::from_preset(a, None, None).unwrap();
            assert_eq!(o.name(), *a);
            assert!(matches!(o, Object::Algebra(_)));
        }
        assert_eq!(Object::from_preset("bg", Some("cyclic:3"), Some(1)).unwrap().name(), "bg:cyclic:3@1");
        assert!(Object::from_preset("bg", None, None).is_err());
        assert!(Object::from_preset("circle", None, Some(1)).is_err());
    }

    #[test]
    fn budget_refuses_large_bar() {
        let spec: SpecInput = "cyclicbar:symmetric:3".parse().unwrap();
        assert!(matches!(build_spec(&spec, 8, 1 << 20), Err(CliError::Core(Error::BudgetExceeded { .. }))));
        assert!(build_spec(&spec, 3, 1 << 20).is_ok());
    }
}
