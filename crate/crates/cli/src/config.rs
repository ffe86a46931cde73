//! JSON configuration files.
//!
//! ```json
//! {
//!   "category": {"lattice": {"gram": [[8]], "xi": ["1/8"]}},
//!   "tolerance": 1e-9,
//!   "caps": {"decompositions": 64}
//! }
//! ```
//!
//! `category` holds exactly one of `pointed` (`invariant_factors`,
//! `qform_matrix`, `h0`), `lattice` (`gram`, `xi`) or `builtin` (a name).
//! Rationals are strings `"p/q"` with `q > 0`, or plain integers `"p"`.

use std::path::Path;

use gvblocks_core::blocks::{builtin_modular_data, Builtin, ModularData};
use gvblocks_core::finite_forms::{FinAbGroup, QForm, Rational};
use gvblocks_core::lattice_data::{to_pointed_gv, LatticeData};
use gvblocks_core::pointed_gv::PointedGVCategory;
use serde::Deserialize;

use crate::error::{CliError, CliResult};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;
pub const DEFAULT_DECOMPOSITION_CAP: usize = 64;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    category: RawCategory,
    tolerance: Option<f64>,
    caps: Option<RawCaps>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCategory {
    pointed: Option<RawPointed>,
    lattice: Option<RawLattice>,
    builtin: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPointed {
    invariant_factors: Vec<i64>,
    qform_matrix: Vec<Vec<String>>,
    h0: Vec<i64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLattice {
    gram: Vec<Vec<i64>>,
    xi: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCaps {
    decompositions: Option<usize>,
}

#[derive(Debug, Clone)]
pub enum Category {
    Pointed(PointedGVCategory),
    Lattice {
        lattice: LatticeData,
        category: PointedGVCategory,
    },
    Builtin {
        which: Builtin,
        data: ModularData,
    },
}

impl Category {
    /// The pointed category, for the `pointed` and `lattice` variants.
    pub fn pointed(&self) -> Option<&PointedGVCategory> {
        match self {
            Category::Pointed(c) | Category::Lattice { category: c, .. } => Some(c),
            Category::Builtin { .. } => None,
        }
    }

    pub fn variant(&self) -> &'static str {
        match self {
            Category::Pointed(_) => "pointed",
            Category::Lattice { .. } => "lattice",
            Category::Builtin { .. } => "builtin",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Config {
    pub category: Category,
    pub tolerance: f64,
    pub decomposition_cap: usize,
}

pub fn parse_config(path: &Path) -> CliResult<Config> {
    let bytes = std::fs::read(path)
        .map_err(|e| CliError::validation("config.io", format!("{}: {e}", path.display())))?;
    let text = String::from_utf8(bytes).map_err(|_| {
        CliError::validation("config.encoding", format!("{}: not UTF-8", path.display()))
    })?;
    parse_config_str(&text)
}

pub fn parse_config_str(text: &str) -> CliResult<Config> {
    let raw: RawConfig = serde_json::from_str(text)
        .map_err(|e| CliError::validation("config.syntax", e.to_string()))?;
    let tolerance = raw.tolerance.unwrap_or(DEFAULT_TOLERANCE);
    if !(tolerance.is_finite() && tolerance > 0.0) {
        return Err(
            CliError::validation("config.tolerance", "tolerance must be positive").at("tolerance"),
        );
    }
    let decomposition_cap = raw
        .caps
        .and_then(|c| c.decompositions)
        .unwrap_or(DEFAULT_DECOMPOSITION_CAP);
    if decomposition_cap == 0 {
        return Err(
            CliError::validation("config.caps", "cap must be at least 1").at("caps.decompositions"),
        );
    }
    Ok(Config {
        category: category(raw.category)?,
        tolerance,
        decomposition_cap,
    })
}

fn category(raw: RawCategory) -> CliResult<Category> {
    let present = [
        raw.pointed.is_some(),
        raw.lattice.is_some(),
        raw.builtin.is_some(),
    ]
    .iter()
    .filter(|&&p| p)
    .count();
    if present != 1 {
        return Err(CliError::validation(
            "config.category",
            format!("exactly one category variant (pointed, lattice, builtin) is required, found {present}"),
        )
        .at("category"));
    }
    if let Some(p) = raw.pointed {
        let path = "category.pointed";
        let group = FinAbGroup::new(&p.invariant_factors)
            .map_err(|e| CliError::from(e).at(&format!("{path}.invariant_factors")))?;
        let matrix = p
            .qform_matrix
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, s)| {
                        parse_rational(s)
                            .map_err(|e| e.at(&format!("{path}.qform_matrix[{i}][{j}]")))
                    })
                    .collect::<CliResult<Vec<_>>>()
            })
            .collect::<CliResult<Vec<_>>>()?;
        let q = QForm::new(group.clone(), matrix)
            .map_err(|e| CliError::from(e).at(&format!("{path}.qform_matrix")))?;
        let h0 = group
            .element(&p.h0)
            .map_err(|e| CliError::from(e).at(&format!("{path}.h0")))?;
        let c = PointedGVCategory::new(q, h0).map_err(|e| CliError::from(e).at(path))?;
        return Ok(Category::Pointed(c));
    }
    if let Some(l) = raw.lattice {
        let path = "category.lattice";
        let xi =
            l.xi.iter()
                .enumerate()
                .map(|(i, s)| parse_rational(s).map_err(|e| e.at(&format!("{path}.xi[{i}]"))))
                .collect::<CliResult<Vec<_>>>()?;
        let lattice = LatticeData::new(&l.gram, xi).map_err(|e| CliError::from(e).at(path))?;
        let category = to_pointed_gv(&lattice).map_err(|e| CliError::from(e).at(path))?;
        return Ok(Category::Lattice { lattice, category });
    }
    let name = raw.builtin.unwrap_or_default();
    let which = Builtin::from_name(&name).map_err(|e| CliError::from(e).at("category.builtin"))?;
    let data = builtin_modular_data(which)?;
    Ok(Category::Builtin { which, data })
}

/// `"p/q"` with `q > 0`, or an integer `"p"`.
pub fn parse_rational(s: &str) -> CliResult<Rational> {
    let bad = || {
        CliError::validation(
            "config.rational",
            format!("`{s}` is not a rational of the form p/q with q > 0"),
        )
    };
    let int = |t: &str| {
        if t.is_empty() || t.starts_with('+') || t.trim() != t {
            return Err(bad());
        }
        t.parse::<i64>().map_err(|_| bad())
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let (p, q) = (int(p)?, int(q)?);
            if q <= 0 {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(int(s)?)),
    }
}
