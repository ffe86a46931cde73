//! Projective `SL(2, Z)` representations on torus blocks.
//!
//! For a modular pointed category (`h0 = 0`, `b` non-degenerate):
//! `T_xx = exp(2 pi i q(x))` and `S_xy = |G|^(-1/2) exp(-2 pi i b(x, y))`.
//! These satisfy `(ST)^3 = gamma(q) S^2` with `gamma` the normalized Gauss
//! sum, and `S^2` is the permutation `x -> -x`. Data with `h0 != 0` is
//! refused: no torus matrices are defined for it here.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Float;

use crate::blocks::{ModularData, DATA_TOLERANCE};
use crate::finite_forms::{gauss_sum, radical, Element};
use crate::linalg::CMatrix;
use crate::pointed_gv::{PointedGVCategory, TriState};
use crate::{Error, Result};

/// Largest group order for which matrices are built.
pub const MATRIX_LIMIT: u64 = 1024;

fn require_modular(c: &PointedGVCategory) -> Result<()> {
    if !c.group().is_zero(c.h0()) {
        return Err(Error::Unsupported(format!(
            "torus matrices need h0 = 0 (got h0 = {})",
            c.h0()
        )));
    }
    if !radical(c.bilinear())?.is_trivial() {
        return Err(Error::DegenerateBraiding);
    }
    Ok(())
}

pub fn st_matrices(c: &PointedGVCategory) -> Result<ModularData> {
    let group = c.group();
    let order = group.order();
    if order > MATRIX_LIMIT {
        return Err(Error::Capacity {
            order,
            limit: MATRIX_LIMIT,
        });
    }
    require_modular(c)?;
    let elems: Vec<Element> = group.elements().collect();
    let n = elems.len();
    let norm = 1.0 / Float::sqrt(n as f64);
    let b = c.bilinear();
    let s = CMatrix::from_fn(n, |i, j| {
        Complex64::cis(-2.0 * PI * b.value(&elems[i], &elems[j]).to_f64()) * norm
    });
    let t = elems
        .iter()
        .map(|x| Complex64::cis(2.0 * PI * c.qform().value(x).to_f64()))
        .collect();
    let dual = elems
        .iter()
        .map(|x| group.index_of(&group.neg(x)))
        .collect();
    ModularData::new(elems.iter().map(ToString::to_string).collect(), s, t, dual)
}

/// Residuals (induced infinity norm) of the modular relations, up to the
/// projective factor `lambda` read off the top-left entries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelationReport {
    pub lambda: Complex64,
    /// `|(ST)^3 - lambda S^2|`
    pub st_cubed: f64,
    /// `|S^2 - C|` with `C` the charge conjugation
    pub s_squared: f64,
    /// `|S S^* - 1|`
    pub unitarity: f64,
}

impl RelationReport {
    pub fn passes(&self, tol: f64) -> bool {
        self.st_cubed < tol && self.s_squared < tol && self.unitarity < tol
    }

    pub fn max_residual(&self) -> f64 {
        self.st_cubed.max(self.s_squared).max(self.unitarity)
    }
}

pub fn check_relations(md: &ModularData) -> RelationReport {
    let s = md.s();
    let st3 = s.mul(&md.t()).pow(3);
    let s2 = s.mul(s);
    let lambda = if s2[(0, 0)].norm() > 1e-12 {
        st3[(0, 0)] / s2[(0, 0)]
    } else {
        Complex64::new(f64::NAN, f64::NAN)
    };
    let n = md.rank();
    RelationReport {
        lambda,
        st_cubed: st3.sub(&s2.scale(lambda)).inf_norm(),
        s_squared: s2.sub(&CMatrix::permutation(md.dual())).inf_norm(),
        unitarity: s.mul(&s.adjoint()).sub(&CMatrix::identity(n)).inf_norm(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnomalyReport {
    pub gamma: Complex64,
    /// `(8 / 2 pi) arg(gamma)` reduced to `[0, 8)`.
    pub central_charge_mod8: f64,
}

pub fn anomaly(c: &PointedGVCategory) -> Result<AnomalyReport> {
    require_modular(c)?;
    let gamma = gauss_sum(c.qform())?;
    if (gamma.norm() - 1.0).abs() > DATA_TOLERANCE {
        return Err(Error::DegenerateData(format!(
            "|gamma| = {} is not 1",
            gamma.norm()
        )));
    }
    Ok(AnomalyReport {
        gamma,
        central_charge_mod8: central_charge_mod8(gamma),
    })
}

/// `(8 / 2 pi) arg(z) mod 8`, snapping values within `1e-9` of 8 to 0.
pub fn central_charge_mod8(z: Complex64) -> f64 {
    // arg lies in (-pi, pi]
    let c = 4.0 * z.arg() / PI;
    let c = if c < 0.0 { c + 8.0 } else { c };
    if 8.0 - c < 1e-9 {
        0.0
    } else {
        c
    }
}

/// `N[x][y][z]`, the rounded Verlinde fusion coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct FusionReport {
    pub coefficients: Vec<Vec<Vec<i64>>>,
    pub max_residual: f64,
}

/// `N_xy^z = sum_w S_xw S_yw conj(S_zw) / S_0w`.
pub fn fusion_from_s(md: &ModularData) -> Result<FusionReport> {
    let s = md.s();
    let n = md.rank();
    if let Some(w) = (0..n).find(|&w| s[(0, w)].norm() < 1e-12) {
        return Err(Error::DegenerateData(format!("S_0{w} vanishes")));
    }
    let mut max_residual: f64 = 0.0;
    let mut coefficients = Vec::with_capacity(n);
    for x in 0..n {
        let mut plane = Vec::with_capacity(n);
        for y in 0..n {
            let mut row = Vec::with_capacity(n);
            for z in 0..n {
                let v: Complex64 = (0..n)
                    .map(|w| s[(x, w)] * s[(y, w)] * s[(z, w)].conj() / s[(0, w)])
                    .sum();
                let r = Float::round(v.re);
                max_residual = max_residual.max((v - Complex64::new(r, 0.0)).norm());
                row.push(r as i64);
            }
            plane.push(row);
        }
        coefficients.push(plane);
    }
    Ok(FusionReport {
        coefficients,
        max_residual,
    })
}

/// Fusion rules of a modular pointed category, checked against the group
/// law `N_xy^z = [x + y = z]`.
pub fn pointed_fusion(c: &PointedGVCategory) -> Result<FusionReport> {
    let md = st_matrices(c)?;
    let report = fusion_from_s(&md)?;
    let group = c.group();
    let elems: Vec<Element> = group.elements().collect();
    for (x, ex) in elems.iter().enumerate() {
        for (y, ey) in elems.iter().enumerate() {
            let sum = group.index_of(&group.add(ex, ey));
            for z in 0..elems.len() {
                if report.coefficients[x][y][z] != i64::from(z == sum) {
                    return Err(Error::InvalidModularData(format!(
                        "fusion coefficient N[{x}][{y}][{z}] disagrees with the group law"
                    )));
                }
            }
        }
    }
    Ok(report)
}

/// Connectedness through the sufficient cofactorizability criterion.
pub fn connectedness_verdict(c: &PointedGVCategory) -> Result<(TriState, String)> {
    if radical(c.bilinear())?.is_trivial() {
        Ok((TriState::True, "cofactorizable (non-degenerate b)".into()))
    } else {
        Ok((
            TriState::Undetermined,
            "b is degenerate, so the category is not cofactorizable; the genus-one comparison that \
             would decide connectedness is not computed here"
                .into(),
        ))
    }
}
