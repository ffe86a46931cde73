//! Dimensions of spaces of conformal blocks.
//!
//! For a pointed category the end `A = ∫ X ⊗ D(X)` is `|G|` copies of the
//! dualizing degree `g0`, so the block space of a genus `g` surface with
//! boundary labels `X_1..X_n` is `Hom(X_1 ⊗ ... ⊗ X_n ⊗ A^g, K)`, of dimension
//! `|G|^g` when `sum X_i + (g - 1) g0 = 0` and zero otherwise
//! ([`block_dim_direct`]). [`block_dim_glued`] recomputes the same number
//! by summing over labelings of the curves of a pants decomposition, and
//! [`verlinde_dim`] from an `S`-matrix.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Float;

use crate::finite_forms::Element;
use crate::linalg::CMatrix;
use crate::pointed_gv::PointedGVCategory;
use crate::surfaces::{PantsDecomposition, SurfaceSpec};
use crate::{Error, Result};

/// Tolerance used when validating modular data.
pub const DATA_TOLERANCE: f64 = 1e-9;
/// Largest number of curve labelings [`block_dim_glued`] will visit.
pub const GLUING_LIMIT: u64 = 1 << 26;

/// Labels with unit at index 0, an `S`-matrix, the diagonal of `T` and
/// the charge conjugation `i -> i*`.
#[derive(Debug, Clone, PartialEq)]
pub struct ModularData {
    labels: Vec<String>,
    s: CMatrix,
    t: Vec<Complex64>,
    dual: Vec<usize>,
}

impl ModularData {
    /// Checks sizes, `S = S^T`, `|T_ii| = 1`, unitarity of `S` and that
    /// `dual` is an involution fixing the unit.
    pub fn new(
        labels: Vec<String>,
        s: CMatrix,
        t: Vec<Complex64>,
        dual: Vec<usize>,
    ) -> Result<Self> {
        let n = labels.len();
        let bad = |m: String| Err(Error::InvalidModularData(m));
        if n == 0 || s.dim() != n || t.len() != n || dual.len() != n {
            return bad(format!("inconsistent sizes for {n} labels"));
        }
        if s.sub(&s.transpose()).inf_norm() > DATA_TOLERANCE {
            return bad("S is not symmetric".into());
        }
        if let Some(i) = t
            .iter()
            .position(|z| (z.norm() - 1.0).abs() > DATA_TOLERANCE)
        {
            return bad(format!("T entry {i} is not a phase"));
        }
        if dual.iter().any(|&j| j >= n) || (0..n).any(|i| dual[dual[i]] != i) || dual[0] != 0 {
            return bad("charge conjugation is not an involution fixing the unit".into());
        }
        if s.mul(&s.adjoint()).sub(&CMatrix::identity(n)).inf_norm() > DATA_TOLERANCE {
            return bad("S is not unitary".into());
        }
        Ok(ModularData { labels, s, t, dual })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn s(&self) -> &CMatrix {
        &self.s
    }

    pub fn t_diagonal(&self) -> &[Complex64] {
        &self.t
    }

    pub fn t(&self) -> CMatrix {
        CMatrix::diagonal(&self.t)
    }

    pub fn dual(&self) -> &[usize] {
        &self.dual
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

fn check_labels(c: &PointedGVCategory, labels: &[Element]) -> Result<()> {
    match labels.iter().find(|x| !c.group().contains(x)) {
        Some(x) => Err(Error::ElementOutOfRange {
            element: x.coords().to_vec(),
            factors: c.group().factors().to_vec(),
        }),
        None => Ok(()),
    }
}

/// Whether `sum X_i + (g - 1) g0 = 0`.
pub fn block_condition(c: &PointedGVCategory, spec: &SurfaceSpec) -> Result<bool> {
    check_labels(c, spec.labels())?;
    let g = c.group();
    let sum = spec.labels().iter().fold(g.zero(), |acc, x| g.add(&acc, x));
    let total = g.add(&sum, &g.scale(i64::from(spec.genus()) - 1, c.g0()));
    Ok(g.is_zero(&total))
}

pub fn block_dim_direct(c: &PointedGVCategory, spec: &SurfaceSpec) -> Result<u128> {
    if !block_condition(c, spec)? {
        return Ok(0);
    }
    u128::from(c.group().order())
        .checked_pow(spec.genus())
        .ok_or(Error::Overflow("block dimension"))
}

/// One pair of pants labeled `x, y, z`: 1 iff `x + y + z = g0`.
pub fn pants_multiplicity(c: &PointedGVCategory, x: &Element, y: &Element, z: &Element) -> u8 {
    let g = c.group();
    u8::from(g.add(&g.add(x, y), z) == *c.g0())
}

/// Sum over labelings of the curves of `pd` of the product of pants
/// multiplicities. A curve with halves `a < b` reads `e` at `a` and
/// `D(e) = g0 - e` at `b`; leg `i` reads boundary label `X_i`.
pub fn block_dim_glued(
    c: &PointedGVCategory,
    pd: &PantsDecomposition,
    spec: &SurfaceSpec,
) -> Result<u128> {
    pd.check_matches(spec)?;
    check_labels(c, spec.labels())?;
    let group = c.group();
    let dual = pd.dual();
    let curves = dual.internal_edges();
    let order = group.order();
    let visits = (0..curves.len()).try_fold(1u64, |acc, _| acc.checked_mul(order));
    match visits {
        Some(v) if v <= GLUING_LIMIT => {}
        _ => {
            return Err(Error::TooManyLabelings {
                order,
                curves: curves.len(),
                limit: GLUING_LIMIT,
            })
        }
    }

    // what each half-edge reads: a fixed label or (curve, is_dual_side)
    enum Reading<'a> {
        Fixed(&'a Element),
        Curve(usize, bool),
    }
    let reading = |h: &str| -> Reading {
        if let Some(i) = pd.leg_index(h) {
            return Reading::Fixed(&spec.labels()[i]);
        }
        let k = curves.iter().position(|(a, b)| *a == h || *b == h).unwrap();
        Reading::Curve(k, curves[k].1 == h)
    };
    struct Pant<'a> {
        readings: Vec<Reading<'a>>,
        last_curve: Option<usize>,
    }
    let pants: Vec<Pant> = dual
        .vertices()
        .map(|v| {
            let readings: Vec<Reading> = dual
                .half_edges_at(v)
                .unwrap()
                .iter()
                .map(|h| reading(h))
                .collect();
            let last_curve = readings
                .iter()
                .filter_map(|r| match r {
                    Reading::Curve(k, _) => Some(*k),
                    Reading::Fixed(_) => None,
                })
                .max();
            Pant {
                readings,
                last_curve,
            }
        })
        .collect();

    // pants fully determined by boundary labels
    for p in pants.iter().filter(|p| p.last_curve.is_none()) {
        if !satisfied(
            c,
            p.readings.iter().map(|r| match r {
                Reading::Fixed(x) => (*x).clone(),
                Reading::Curve(..) => unreachable!(),
            }),
        ) {
            return Ok(0);
        }
    }

    let elements: Vec<Element> = group.elements().collect();
    let duals: Vec<Element> = elements.iter().map(|e| c.dual(e)).collect();
    let read = |r: &Reading, assignment: &[usize]| match r {
        Reading::Fixed(x) => (*x).clone(),
        Reading::Curve(k, false) => elements[assignment[*k]].clone(),
        Reading::Curve(k, true) => duals[assignment[*k]].clone(),
    };

    // depth-first over curve labelings; a pant is checked as soon as its
    // last curve is labeled
    fn count(
        depth: usize,
        assignment: &mut Vec<usize>,
        choices: usize,
        check: &dyn Fn(usize, &[usize]) -> bool,
    ) -> u128 {
        if depth == assignment.len() {
            return 1;
        }
        let mut total = 0;
        for e in 0..choices {
            assignment[depth] = e;
            if check(depth, assignment) {
                total += count(depth + 1, assignment, choices, check);
            }
        }
        total
    }
    let check = |depth: usize, assignment: &[usize]| {
        pants
            .iter()
            .filter(|p| p.last_curve == Some(depth))
            .all(|p| satisfied(c, p.readings.iter().map(|r| read(r, assignment))))
    };
    let mut assignment = vec![0usize; curves.len()];
    Ok(count(0, &mut assignment, elements.len(), &check))
}

fn satisfied(c: &PointedGVCategory, mut labels: impl Iterator<Item = Element>) -> bool {
    let (x, y, z) = (
        labels.next().unwrap(),
        labels.next().unwrap(),
        labels.next().unwrap(),
    );
    pants_multiplicity(c, &x, &y, &z) == 1
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerlindeReport {
    pub value: Complex64,
    pub nearest: i64,
    pub residual: f64,
}

/// `sum_j S_0j^(2 - 2g - n) prod_k S_(i_k j)`.
pub fn verlinde_dim(md: &ModularData, genus: u32, labels: &[usize]) -> Result<VerlindeReport> {
    let n = md.rank();
    if let Some(&i) = labels.iter().find(|&&i| i >= n) {
        return Err(Error::InvalidModularData(format!(
            "label index {i} out of range"
        )));
    }
    let exponent = 2 - 2 * i64::from(genus) - labels.len() as i64;
    let exponent = i32::try_from(exponent).map_err(|_| Error::Overflow("Verlinde exponent"))?;
    let s = md.s();
    let mut value = Complex64::new(0.0, 0.0);
    for j in 0..n {
        let s0 = s[(0, j)];
        if s0.norm() < 1e-12 {
            return Err(Error::DegenerateData(format!("S_0{j} vanishes")));
        }
        let prod: Complex64 = labels.iter().map(|&i| s[(i, j)]).product();
        value += s0.powi(exponent) * prod;
    }
    let nearest = Float::round(value.re) as i64;
    let residual = (value - Complex64::new(nearest as f64, 0.0)).norm();
    Ok(VerlindeReport {
        value,
        nearest,
        residual,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builtin {
    Fibonacci,
    Ising,
}

impl Builtin {
    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "fibonacci" => Ok(Builtin::Fibonacci),
            "ising" => Ok(Builtin::Ising),
            other => Err(Error::UnknownBuiltin(other.to_string())),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Builtin::Fibonacci => "fibonacci",
            Builtin::Ising => "ising",
        }
    }
}

/// Embedded tables, validated against the modular relations on load.
pub fn builtin_modular_data(which: Builtin) -> Result<ModularData> {
    let c = |re: f64| Complex64::new(re, 0.0);
    let md = match which {
        Builtin::Fibonacci => {
            let phi = (1.0 + Float::sqrt(5f64)) / 2.0;
            let d = Float::sqrt(2.0 + phi);
            let s = CMatrix::from_fn(2, |i, j| match (i, j) {
                (0, 0) => c(1.0 / d),
                (1, 1) => c(-1.0 / d),
                _ => c(phi / d),
            });
            let t = vec![c(1.0), Complex64::cis(4.0 * core::f64::consts::PI / 5.0)];
            ModularData::new(vec!["1".into(), "tau".into()], s, t, vec![0, 1])?
        }
        Builtin::Ising => {
            let r = core::f64::consts::SQRT_2;
            let rows = [[1.0, r, 1.0], [r, 0.0, -r], [1.0, -r, 1.0]];
            let s = CMatrix::from_fn(3, |i, j| c(rows[i][j] / 2.0));
            let t = vec![c(1.0), Complex64::cis(core::f64::consts::PI / 8.0), c(-1.0)];
            ModularData::new(
                vec!["1".into(), "sigma".into(), "psi".into()],
                s,
                t,
                vec![0, 1, 2],
            )?
        }
    };
    let report = crate::mcg_torus::check_relations(&md);
    if !report.passes(DATA_TOLERANCE) {
        return Err(Error::InvalidModularData(format!(
            "built-in `{}` fails the modular relations",
            which.name()
        )));
    }
    Ok(md)
}

/// Modular data of a modular pointed category (`h0 = 0`, non-degenerate).
pub fn pointed_modular_data(c: &PointedGVCategory) -> Result<ModularData> {
    crate::mcg_torus::st_matrices(c)
}
