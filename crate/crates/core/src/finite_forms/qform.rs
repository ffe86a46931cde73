use alloc::vec::Vec;

use num_complex::Complex64;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Float;
use num_traits::Zero;

use super::{Element, FinAbGroup, Subgroup, ENUMERATION_LIMIT, QZ};
use crate::{Error, Result};

pub type Rational = Ratio<i64>;

/// Groups up to this order are brute-force checked for well-definedness on
/// construction, on top of the closed-form rule.
const BRUTE_FORCE_CHECK: u64 = 256;

/// Quadratic form `q(x) = x^T A x mod 1` on a finite abelian group.
///
/// Internally `A = scaled / den` with an integer matrix `scaled`, so that
/// every value is `k / den` for an integer `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QForm {
    group: FinAbGroup,
    matrix: Vec<Vec<Rational>>,
    den: i64,
    scaled: Vec<i128>,
}

impl QForm {
    /// Validates symmetry and well-definedness: for each factor `n_i`,
    /// `2 n_i A e_i` must be integral and `n_i^2 A_ii` an integer.
    pub fn new(group: FinAbGroup, matrix: Vec<Vec<Rational>>) -> Result<Self> {
        let k = group.rank();
        if matrix.len() != k || matrix.iter().any(|r| r.len() != k) {
            return Err(Error::Shape(alloc::format!(
                "quadratic form matrix must be {k}x{k}"
            )));
        }
        for i in 0..k {
            for j in 0..i {
                if matrix[i][j] != matrix[j][i] {
                    return Err(Error::Shape(
                        "quadratic form matrix is not symmetric".into(),
                    ));
                }
            }
        }
        let den = matrix
            .iter()
            .flatten()
            .fold(1i64, |acc, r| acc.lcm(r.denom()));
        let scaled = matrix
            .iter()
            .flatten()
            .map(|r| i128::from(*r.numer()) * i128::from(den / r.denom()))
            .collect();
        let q = QForm {
            group,
            matrix,
            den,
            scaled,
        };
        if let Some((x, i)) = q.rule_violation() {
            return Err(q.witness(&x, i));
        }
        if q.group.order() <= BRUTE_FORCE_CHECK {
            for x in q.group.elements() {
                for i in 0..k {
                    if q.shift_changes_value(x.coords(), i) {
                        return Err(q.witness(x.coords(), i));
                    }
                }
            }
        }
        Ok(q)
    }

    pub fn zero(group: FinAbGroup) -> Self {
        let k = group.rank();
        QForm::new(group, alloc::vec![alloc::vec![Rational::zero(); k]; k])
            .expect("zero form is well defined")
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    /// Common denominator of all values of `q` and of its polarization.
    pub fn denominator(&self) -> i64 {
        self.den
    }

    fn raw(&self, x: &[i64]) -> i128 {
        let k = x.len();
        let mut acc = 0i128;
        for i in 0..k {
            for j in 0..k {
                acc += self.scaled[i * k + j] * i128::from(x[i]) * i128::from(x[j]);
            }
        }
        acc.rem_euclid(i128::from(self.den))
    }

    /// `q(x)` as a numerator over [`QForm::denominator`].
    pub fn value_numer(&self, x: &Element) -> i64 {
        self.raw(x.coords()) as i64
    }

    pub fn value(&self, x: &Element) -> QZ {
        QZ::new(self.value_numer(x), self.den)
    }

    fn shift_changes_value(&self, x: &[i64], axis: usize) -> bool {
        let mut y = x.to_vec();
        y[axis] += self.group.factors()[axis] as i64;
        self.raw(x) != self.raw(&y)
    }

    // Well-definedness fails iff some shift changes the value at 0 or at a
    // unit vector, since f(x + n e_i) - f(x) is affine in x.
    fn rule_violation(&self) -> Option<(Vec<i64>, usize)> {
        let k = self.group.rank();
        let mut probes: Vec<Vec<i64>> = (0..k)
            .map(|j| {
                let mut e = alloc::vec![0; k];
                e[j] = 1;
                e
            })
            .collect();
        probes.push(alloc::vec![0; k]);
        for x in &probes {
            for i in 0..k {
                if self.shift_changes_value(x, i) {
                    return Some((x.clone(), i));
                }
            }
        }
        None
    }

    fn witness(&self, x: &[i64], axis: usize) -> Error {
        let mut shifted = x.to_vec();
        shifted[axis] += self.group.factors()[axis] as i64;
        Error::InvalidQForm {
            representative: x.to_vec(),
            shifted,
        }
    }
}

/// Polarization `b(x, y) = q(x + y) - q(x) - q(y) = 2 x^T A y mod 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    group: FinAbGroup,
    den: i64,
    scaled: Vec<i128>,
}

impl BilinearForm {
    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    pub fn value_numer(&self, x: &Element, y: &Element) -> i64 {
        let (x, y) = (x.coords(), y.coords());
        let k = x.len();
        let mut acc = 0i128;
        for i in 0..k {
            for j in 0..k {
                acc += self.scaled[i * k + j] * i128::from(x[i]) * i128::from(y[j]);
            }
        }
        acc.rem_euclid(i128::from(self.den)) as i64
    }

    pub fn value(&self, x: &Element, y: &Element) -> QZ {
        QZ::new(self.value_numer(x, y), self.den)
    }

    /// Whether `b(x, -)` vanishes; checking the generators suffices.
    pub fn is_transparent(&self, x: &Element) -> bool {
        (0..self.group.rank()).all(|i| self.value_numer(x, &self.group.generator(i)) == 0)
    }
}

pub fn bilinear(q: &QForm) -> BilinearForm {
    BilinearForm {
        group: q.group.clone(),
        den: q.den,
        scaled: q.scaled.iter().map(|a| 2 * a).collect(),
    }
}

/// `{x : b(x, y) = 0 for all y}`, by enumeration.
pub fn radical(b: &BilinearForm) -> Result<Subgroup> {
    b.group.check_enumerable(ENUMERATION_LIMIT)?;
    let elements: Vec<Element> = b.group.elements().filter(|x| b.is_transparent(x)).collect();
    Ok(Subgroup::from_elements(&b.group, elements))
}

/// `|G|^(-1/2) * sum_x exp(2 pi i q(x))`.
pub fn gauss_sum(q: &QForm) -> Result<Complex64> {
    q.group.check_enumerable(ENUMERATION_LIMIT)?;
    let den = q.den as f64;
    let sum: Complex64 = q
        .group
        .elements()
        .map(|x| {
            let phase = 2.0 * core::f64::consts::PI * q.value_numer(&x) as f64 / den;
            Complex64::cis(phase)
        })
        .sum();
    Ok(sum / Float::sqrt(q.group.order() as f64))
}

/// Every quadratic form on `group`, one per distinct function. Parametrized
/// by `A_ii = a / 2n_i` (`0 <= a < 2n_i`) and `A_ij = c / 2gcd(n_i, n_j)`
/// (`0 <= c < gcd`); shifting `A_ij` by `1/2` does not change `q`.
pub fn all_qforms(group: &FinAbGroup, limit: u64) -> Result<Vec<QForm>> {
    let n = group.factors();
    let k = n.len();
    let mut ranges: Vec<(usize, usize, i64, i64)> = Vec::new();
    for i in 0..k {
        for j in i..k {
            let (count, den) = if i == j {
                (2 * n[i] as i64, 2 * n[i] as i64)
            } else {
                let g = n[i].gcd(&n[j]) as i64;
                (g, 2 * g)
            };
            ranges.push((i, j, count, den));
        }
    }
    let total = ranges
        .iter()
        .try_fold(1u64, |acc, r| acc.checked_mul(r.2 as u64))
        .filter(|&t| t <= limit)
        .ok_or(Error::Capacity {
            order: group.order(),
            limit,
        })?;
    let mut out = Vec::new();
    for mut idx in 0..total {
        let mut matrix = alloc::vec![alloc::vec![Rational::zero(); k]; k];
        for &(i, j, count, den) in &ranges {
            let c = (idx % count as u64) as i64;
            idx /= count as u64;
            matrix[i][j] = Rational::new(c, den);
            matrix[j][i] = matrix[i][j];
        }
        if let Ok(q) = QForm::new(group.clone(), matrix) {
            out.push(q);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    pub(crate) fn semion() -> QForm {
        QForm::new(FinAbGroup::new(&[2]).unwrap(), vec![vec![r(1, 4)]]).unwrap()
    }

    fn hyperbolic() -> QForm {
        // q(a, b) = ab/2 on Z/2 x Z/2
        QForm::new(
            FinAbGroup::new(&[2, 2]).unwrap(),
            vec![vec![r(0, 1), r(1, 4)], vec![r(1, 4), r(0, 1)]],
        )
        .unwrap()
    }

    #[test]
    fn construction() {
        let q = semion();
        assert_eq!(q.value(&q.group().element(&[1]).unwrap()), QZ::new(1, 4));

        let err = QForm::new(FinAbGroup::new(&[2]).unwrap(), vec![vec![r(1, 3)]]).unwrap_err();
        assert_eq!(
            err,
            Error::InvalidQForm {
                representative: vec![1],
                shifted: vec![3]
            }
        );

        let g = FinAbGroup::new(&[3, 4]).unwrap();
        let z = QForm::zero(g.clone());
        assert!(g.elements().all(|x| z.value(&x).is_zero()));

        assert!(matches!(
            QForm::new(g.clone(), vec![vec![r(0, 1)]]),
            Err(Error::Shape(_))
        ));
        assert!(matches!(
            QForm::new(g, vec![vec![r(0, 1), r(1, 3)], vec![r(0, 1), r(0, 1)]]),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn cross_terms_must_respect_both_factors() {
        // 2 * 2 * (1/3) is not integral along the first axis
        let g = FinAbGroup::new(&[2, 3]).unwrap();
        let m = vec![vec![r(0, 1), r(1, 3)], vec![r(1, 3), r(1, 3)]];
        assert!(matches!(QForm::new(g, m), Err(Error::InvalidQForm { .. })));
    }

    #[test]
    fn polarization() {
        let q = semion();
        let b = bilinear(&q);
        let one = q.group().element(&[1]).unwrap();
        assert_eq!(b.value(&one, &one), QZ::new(1, 2));

        let q = hyperbolic();
        let b = bilinear(&q);
        let g = q.group();
        let e1 = g.element(&[1, 0]).unwrap();
        let e2 = g.element(&[0, 1]).unwrap();
        assert_eq!(b.value(&e1, &e2), QZ::new(1, 2));
        assert_eq!(b.value(&e1, &e1), QZ::ZERO);
        assert_eq!(q.value(&g.element(&[1, 1]).unwrap()), QZ::new(1, 2));

        let z = QForm::zero(FinAbGroup::new(&[5]).unwrap());
        let bz = bilinear(&z);
        assert!(z.group().elements().all(|x| bz.value(&x, &x).is_zero()));
    }

    #[test]
    fn radicals() {
        assert!(radical(&bilinear(&semion())).unwrap().is_trivial());
        assert!(radical(&bilinear(&hyperbolic())).unwrap().is_trivial());
        let z = QForm::zero(FinAbGroup::new(&[2]).unwrap());
        let rad = radical(&bilinear(&z)).unwrap();
        assert_eq!(rad.order(), 2);
        assert_eq!(rad.invariant_factors, vec![2]);

        let big = QForm::zero(FinAbGroup::new(&[1 << 10, 1 << 7]).unwrap());
        assert!(matches!(
            radical(&bilinear(&big)),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn gauss_sums() {
        let g = gauss_sum(&semion()).unwrap();
        let expected = Complex64::cis(core::f64::consts::FRAC_PI_4);
        assert!((g - expected).norm() < 1e-12);

        let z = gauss_sum(&QForm::zero(FinAbGroup::new(&[3, 3]).unwrap())).unwrap();
        assert!((z - Complex64::new(3.0, 0.0)).norm() < 1e-12);

        let h = gauss_sum(&hyperbolic()).unwrap();
        assert!((h - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }
}
