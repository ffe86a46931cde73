use gvblocks_core::blocks::{
    block_condition, block_dim_direct, block_dim_glued, verlinde_dim, ModularData,
};
use gvblocks_core::finite_forms::{Element, Rational};
use gvblocks_core::lattice_data::discriminant_group;
use gvblocks_core::mcg_torus::{
    anomaly, central_charge_mod8, check_relations, connectedness_verdict, st_matrices,
};
use gvblocks_core::pointed_gv::{Axiom, PointedGVCategory};
use gvblocks_core::surfaces::{enumerate_decompositions, SurfaceSpec};
use gvblocks_core::ErrorKind;
use serde_json::Value;

use crate::config::{Category, Config};
use crate::error::{CliError, CliResult};
use crate::report::{complex, float, integer, object};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Inspect,
    Blocks {
        genus: i64,
        labels: Option<String>,
        glued: bool,
    },
    TorusRep,
    Lattice,
    Verlinde {
        max_genus: u32,
    },
}

/// Runs one subcommand; `tolerance` overrides the config value if given.
pub fn run(command: &Command, config: &Config, tolerance: Option<f64>) -> CliResult<Value> {
    let tol = tolerance.unwrap_or(config.tolerance);
    if !(tol.is_finite() && tol > 0.0) {
        return Err(CliError::validation(
            "cli.tolerance",
            "--tol must be positive",
        ));
    }
    match command {
        Command::Inspect => inspect(&config.category),
        Command::Blocks {
            genus,
            labels,
            glued,
        } => blocks(
            &config.category,
            *genus,
            labels.as_deref(),
            *glued,
            config.decomposition_cap,
            tol,
        ),
        Command::TorusRep => torus_rep(&config.category, tol),
        Command::Lattice => lattice(&config.category),
        Command::Verlinde { max_genus } => verlinde(&config.category, *max_genus, tol),
    }
}

fn element(x: &Element) -> Value {
    Value::from(x.coords().to_vec())
}

fn rational(r: &Rational) -> Value {
    Value::from(format!("{}/{}", r.numer(), r.denom()))
}

fn rational_matrix(m: &[Vec<Rational>]) -> Value {
    Value::Array(
        m.iter()
            .map(|row| Value::Array(row.iter().map(rational).collect()))
            .collect(),
    )
}

fn group(c: &PointedGVCategory) -> Value {
    object([
        (
            "invariant_factors",
            Value::from(c.group().factors().to_vec()),
        ),
        ("order", Value::from(c.group().order())),
    ])
}

fn inspect(category: &Category) -> CliResult<Value> {
    let Some(c) = category.pointed() else {
        let Category::Builtin { which, data } = category else {
            unreachable!()
        };
        let rel = check_relations(data);
        return Ok(object([
            ("category", Value::from("builtin")),
            ("name", Value::from(which.name())),
            ("rank", Value::from(data.rank())),
            ("labels", Value::from(data.labels().to_vec())),
            ("lambda", complex(rel.lambda)),
            (
                "central_charge_mod8",
                float(central_charge_mod8(rel.lambda)),
            ),
            ("max_relation_residual", float(rel.max_residual())),
        ]));
    };
    let v = c.verdicts()?;
    let mueger = c.mueger_center()?;
    let (_, reason) = connectedness_verdict(c)?;
    let axioms = match c.check_axioms() {
        Ok(report) => Value::Object(
            Axiom::ALL
                .iter()
                .map(|&a| (a.name().to_string(), Value::from(report.get(a).passed)))
                .collect(),
        ),
        Err(e) if e.kind() == ErrorKind::Capacity => Value::from("skipped: group too large"),
        Err(e) => return Err(e.into()),
    };
    let anomaly = match anomaly(c) {
        Ok(a) => object([
            ("gamma", complex(a.gamma)),
            ("central_charge_mod8", float(a.central_charge_mod8)),
        ]),
        Err(e) if e.kind() == ErrorKind::Unsupported => Value::Null,
        Err(e) => return Err(e.into()),
    };
    let twists = c
        .group()
        .factors()
        .iter()
        .enumerate()
        .map(|(i, _)| Value::from(c.twist(&c.group().generator(i)).to_string()))
        .collect();
    Ok(object([
        ("category", Value::from(category.variant())),
        ("group", group(c)),
        ("qform_matrix", rational_matrix(c.qform().matrix())),
        ("generator_twists", Value::Array(twists)),
        ("h0", element(c.h0())),
        ("g0", element(c.g0())),
        (
            "mueger_center",
            object([
                ("radical", Value::from(mueger.radical.describe())),
                ("radical_order", Value::from(mueger.radical.order())),
                ("balanced", Value::from(mueger.balanced.describe())),
            ]),
        ),
        (
            "verdicts",
            object([
                ("nondegenerate", Value::from(v.nondegenerate)),
                ("cofactorizable", Value::from(v.cofactorizable)),
                ("modular", Value::from(v.modular)),
                ("connected", Value::from(v.connected.to_string())),
                ("connected_reason", Value::from(reason)),
                (
                    "extension_unique",
                    Value::from(v.extension_unique.to_string()),
                ),
            ]),
        ),
        ("axioms", axioms),
        ("anomaly", anomaly),
    ]))
}

/// Labels as `"1,0;0,1"` (pointed, coordinates) or `"sigma;sigma"`
/// (built-in, names or indices).
fn parse_labels(text: Option<&str>) -> Vec<String> {
    let text = text.unwrap_or("").trim();
    if text.is_empty() {
        return Vec::new();
    }
    text.split(';').map(|s| s.trim().to_string()).collect()
}

fn pointed_labels(c: &PointedGVCategory, raw: &[String]) -> CliResult<Vec<Element>> {
    raw.iter()
        .map(|s| {
            let coords = s
                .split(',')
                .map(|t| t.trim().parse::<i64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| {
                    CliError::validation(
                        "cli.labels",
                        format!("label `{s}` is not a list of integers"),
                    )
                })?;
            c.group().element(&coords).map_err(CliError::from)
        })
        .collect()
}

fn builtin_labels(data: &ModularData, raw: &[String]) -> CliResult<Vec<usize>> {
    raw.iter()
        .map(|s| {
            data.label_index(s)
                .or_else(|| s.parse::<usize>().ok().filter(|&i| i < data.rank()))
                .ok_or_else(|| {
                    CliError::validation(
                        "cli.labels",
                        format!(
                            "unknown label `{s}` (expected one of {})",
                            data.labels().join(", ")
                        ),
                    )
                })
        })
        .collect()
}

fn blocks(
    category: &Category,
    genus: i64,
    labels: Option<&str>,
    glued: bool,
    cap: usize,
    tol: f64,
) -> CliResult<Value> {
    let raw = parse_labels(labels);
    let Some(c) = category.pointed() else {
        let Category::Builtin { data, .. } = category else {
            unreachable!()
        };
        if glued {
            return Err(CliError::unsupported(
                "cli.unsupported",
                "--glued needs a pointed or lattice category",
            ));
        }
        let genus = u32::try_from(genus)
            .map_err(|_| CliError::from(gvblocks_core::Error::NegativeGenus(genus)))?;
        let idx = builtin_labels(data, &raw)?;
        let v = verlinde_dim(data, genus, &idx)?;
        return Ok(object([
            ("genus", Value::from(genus)),
            ("labels", Value::from(raw)),
            ("method", Value::from("verlinde")),
            ("dim", Value::from(v.nearest)),
            ("value", complex(v.value)),
            ("residual", float(v.residual)),
            ("integral", Value::from(v.residual < tol.max(1e-6))),
        ]));
    };
    let labels = pointed_labels(c, &raw)?;
    let spec = SurfaceSpec::new(genus, labels)?;
    let condition = block_condition(c, &spec)?;
    let direct = block_dim_direct(c, &spec)?;
    let labels_json = Value::Array(spec.labels().iter().map(element).collect());
    if !glued {
        return Ok(object([
            ("genus", Value::from(spec.genus())),
            ("labels", labels_json),
            ("method", Value::from("direct")),
            ("dim", integer(direct)),
            ("condition_met", Value::from(condition)),
        ]));
    }
    let pds = enumerate_decompositions(spec.genus(), spec.boundary_count(), cap)?;
    let dims = pds
        .iter()
        .map(|pd| block_dim_glued(c, pd, &spec))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(object([
        ("genus", Value::from(spec.genus())),
        ("labels", labels_json),
        ("method", Value::from("glued")),
        ("dim", integer(dims[0])),
        ("decomposition_id", Value::from(0)),
        ("decompositions_checked", Value::from(dims.len())),
        ("direct_dim", integer(direct)),
        (
            "agrees_with_direct",
            Value::from(dims.iter().all(|&d| d == direct)),
        ),
        ("condition_met", Value::from(condition)),
    ]))
}

fn modular_data(category: &Category) -> CliResult<ModularData> {
    match category {
        Category::Builtin { data, .. } => Ok(data.clone()),
        _ => Ok(st_matrices(category.pointed().expect("pointed variant"))?),
    }
}

fn torus_rep(category: &Category, tol: f64) -> CliResult<Value> {
    let md = modular_data(category)?;
    let rel = check_relations(&md);
    let s = Value::Array(
        md.s()
            .rows()
            .into_iter()
            .map(|row| Value::Array(row.into_iter().map(complex).collect()))
            .collect(),
    );
    Ok(object([
        ("labels", Value::from(md.labels().to_vec())),
        ("s", s),
        (
            "t",
            Value::Array(md.t_diagonal().iter().copied().map(complex).collect()),
        ),
        ("lambda", complex(rel.lambda)),
        (
            "central_charge_mod8",
            float(central_charge_mod8(rel.lambda)),
        ),
        (
            "residuals",
            object([
                ("st_cubed", float(rel.st_cubed)),
                ("s_squared", float(rel.s_squared)),
                ("unitarity", float(rel.unitarity)),
            ]),
        ),
        ("tolerance", float(tol)),
        ("passes", Value::from(rel.passes(tol))),
    ]))
}

fn lattice(category: &Category) -> CliResult<Value> {
    let Category::Lattice {
        lattice,
        category: c,
    } = category
    else {
        return Err(CliError::validation(
            "cli.not_lattice",
            format!(
                "`lattice` needs a lattice config, got `{}`",
                category.variant()
            ),
        ));
    };
    let dg = discriminant_group(lattice)?;
    let gram: Vec<Vec<String>> = lattice
        .gram()
        .to_rows()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    Ok(object([
        ("gram", Value::from(gram)),
        (
            "determinant",
            Value::from(lattice.determinant().to_string()),
        ),
        (
            "xi",
            Value::Array(lattice.xi().iter().map(rational).collect()),
        ),
        ("discriminant_group", group(c)),
        (
            "generator_lifts",
            Value::Array(
                dg.lifts
                    .iter()
                    .map(|l| Value::Array(l.iter().map(rational).collect()))
                    .collect(),
            ),
        ),
        ("qform_matrix", rational_matrix(c.qform().matrix())),
        ("h0", element(c.h0())),
        ("g0", element(c.g0())),
        ("modular", Value::from(c.verdicts()?.modular)),
    ]))
}

fn verlinde(category: &Category, max_genus: u32, tol: f64) -> CliResult<Value> {
    if max_genus == 0 {
        return Err(CliError::validation(
            "cli.max_genus",
            "--max-genus must be at least 1",
        ));
    }
    let md = match modular_data(category) {
        Ok(md) => Some(md),
        Err(e) if e.exit_code == crate::error::EXIT_UNSUPPORTED && category.pointed().is_some() => {
            None
        }
        Err(e) => return Err(e),
    };
    let mut rows = Vec::new();
    for g in 1..=max_genus {
        let verlinde = match &md {
            Some(md) => {
                let v = verlinde_dim(md, g, &[])?;
                object([
                    ("value", complex(v.value)),
                    ("nearest", Value::from(v.nearest)),
                    ("residual", float(v.residual)),
                    ("integral", Value::from(v.residual < tol.max(1e-6))),
                ])
            }
            None => Value::Null,
        };
        let direct = match category.pointed() {
            Some(c) => integer(block_dim_direct(c, &SurfaceSpec::closed(g))?),
            None => Value::Null,
        };
        rows.push(object([
            ("genus", Value::from(g)),
            ("verlinde", verlinde),
            ("direct", direct),
        ]));
    }
    Ok(object([
        ("verlinde_available", Value::from(md.is_some())),
        ("rows", Value::Array(rows)),
    ]))
}
