//! Even lattices given by a Gram matrix, their dual quotient `L*/L` and the
//! discriminant quadratic form `q(x) = <x, x>/2 mod 1`.
//!
//! Coordinates are always taken in the lattice basis. With the Smith form
//! `U * gram * V = D`, the `i`-th generator of `L*/L` lifts to
//! `V e_i / d_i`, and a dual vector `x` maps to the group element with
//! coordinates `(U * gram * x)_i mod d_i`. Factors with `d_i = 1` are
//! dropped.

use alloc::vec::Vec;

use num_traits::{ToPrimitive, Zero};

use crate::finite_forms::{smith_normal_form, Element, FinAbGroup, QForm, Rational};
use crate::linalg::IntMatrix;
use crate::pointed_gv::PointedGVCategory;
use crate::{Error, Result};

/// A full-rank even lattice with a distinguished dual vector `xi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeData {
    gram: IntMatrix,
    xi: Vec<Rational>,
}

impl LatticeData {
    pub fn new(gram: &[Vec<i64>], xi: Vec<Rational>) -> Result<Self> {
        let gram = IntMatrix::from_rows(gram)?;
        if !gram.is_square() || xi.len() != gram.rows() {
            return Err(Error::Shape(alloc::format!(
                "Gram matrix is {}x{} and xi has {} entries",
                gram.rows(),
                gram.cols(),
                xi.len()
            )));
        }
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        for i in 0..gram.rows() {
            if gram[(i, i)] % 2 != 0 {
                return Err(Error::NotEven {
                    index: i,
                    value: gram[(i, i)] as i64,
                });
            }
        }
        if gram.determinant()? == 0 {
            return Err(Error::Degenerate);
        }
        let l = LatticeData { gram, xi };
        if let Some(index) = l
            .pair_with_lattice(&l.xi)
            .iter()
            .position(|r| !r.is_integer())
        {
            return Err(Error::XiNotDual { index });
        }
        Ok(l)
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn xi(&self) -> &[Rational] {
        &self.xi
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn determinant(&self) -> i128 {
        self.gram.determinant().expect("validated on construction")
    }

    /// `gram * x`: the pairings of `x` with the lattice basis.
    pub fn pair_with_lattice(&self, x: &[Rational]) -> Vec<Rational> {
        (0..self.rank())
            .map(|i| {
                (0..self.rank()).fold(Rational::zero(), |acc, j| {
                    acc + Rational::from_integer(self.gram[(i, j)] as i64) * x[j]
                })
            })
            .collect()
    }

    /// `<x, y>` for vectors in lattice coordinates.
    pub fn inner(&self, x: &[Rational], y: &[Rational]) -> Rational {
        self.pair_with_lattice(y)
            .iter()
            .zip(x)
            .fold(Rational::zero(), |acc, (a, b)| acc + *a * *b)
    }
}

/// `L*/L` with its presentation data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscriminantGroup {
    pub group: FinAbGroup,
    /// Lift of each generator to `L*`, in lattice coordinates.
    pub lifts: Vec<Vec<Rational>>,
    // rows of U belonging to non-trivial factors
    projection: IntMatrix,
}

impl DiscriminantGroup {
    /// Image in `L*/L` of a dual vector; `None` if `x` is not in `L*`.
    pub fn project(&self, lattice: &LatticeData, x: &[Rational]) -> Option<Element> {
        let paired = lattice.pair_with_lattice(x);
        if paired.iter().any(|r| !r.is_integer()) {
            return None;
        }
        let y: Vec<i128> = paired.iter().map(|r| i128::from(r.to_integer())).collect();
        let coords: Vec<i64> = (0..self.projection.rows())
            .map(|i| {
                let s: i128 = y
                    .iter()
                    .enumerate()
                    .map(|(j, yj)| self.projection[(i, j)] * yj)
                    .sum();
                s.rem_euclid(self.group.factors()[i] as i128) as i64
            })
            .collect();
        self.group.element(&coords).ok()
    }
}

pub fn discriminant_group(l: &LatticeData) -> Result<DiscriminantGroup> {
    let snf = smith_normal_form(&l.gram)?;
    let k = l.rank();
    let mut factors = Vec::new();
    let mut lifts = Vec::new();
    let mut rows = Vec::new();
    for (i, &d) in snf.diagonal().iter().enumerate() {
        if d == 1 {
            continue;
        }
        let d64 = d.to_i64().ok_or(Error::Overflow("discriminant factor"))?;
        factors.push(d64);
        let lift = (0..k)
            .map(|r| {
                snf.v[(r, i)]
                    .to_i64()
                    .map(|x| Rational::new(x, d64))
                    .ok_or(Error::Overflow("discriminant lift"))
            })
            .collect::<Result<Vec<_>>>()?;
        lifts.push(lift);
        rows.push(snf.u.row(i).to_vec());
    }
    Ok(DiscriminantGroup {
        group: FinAbGroup::new(&factors)?,
        lifts,
        projection: IntMatrix::from_rows(&rows).unwrap_or_else(|_| IntMatrix::zeros(0, k)),
    })
}

/// The discriminant form on the generators of [`discriminant_group`]:
/// `A_ij = <lift_i, lift_j> / 2`.
pub fn discriminant_form(l: &LatticeData) -> Result<QForm> {
    let dg = discriminant_group(l)?;
    form_on(l, &dg)
}

fn form_on(l: &LatticeData, dg: &DiscriminantGroup) -> Result<QForm> {
    let half = Rational::new(1, 2);
    let matrix = dg
        .lifts
        .iter()
        .map(|x| dg.lifts.iter().map(|y| l.inner(x, y) * half).collect())
        .collect();
    QForm::new(dg.group.clone(), matrix)
}

/// `(L*/L, q, h0)` with `h0` the image of `xi`, so that the dualizing
/// object sits in degree `2 xi`.
pub fn to_pointed_gv(l: &LatticeData) -> Result<PointedGVCategory> {
    let dg = discriminant_group(l)?;
    let q = form_on(l, &dg)?;
    let h0 = dg.project(l, &l.xi).ok_or(Error::XiNotDual { index: 0 })?;
    PointedGVCategory::new(q, h0)
}
