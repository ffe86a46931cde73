use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;

/// An element of `Q/Z`, stored as a reduced fraction `num/den` with
/// `0 <= num < den`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QZ {
    num: i64,
    den: i64,
}

impl QZ {
    pub const ZERO: QZ = QZ { num: 0, den: 1 };

    /// `num/den mod 1`. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> QZ {
        assert!(den != 0, "zero denominator");
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        let g = num.gcd(&den);
        let (num, den) = (num / g, den / g);
        QZ {
            num: num.rem_euclid(den),
            den,
        }
    }

    pub fn from_ratio(r: Ratio<i64>) -> QZ {
        QZ::new(*r.numer(), *r.denom())
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn denom(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// Representative in `[0, 1)` as a rational.
    pub fn to_ratio(self) -> Ratio<i64> {
        Ratio::new(self.num, self.den)
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl Default for QZ {
    fn default() -> Self {
        QZ::ZERO
    }
}

impl Add for QZ {
    type Output = QZ;
    fn add(self, rhs: QZ) -> QZ {
        let l = self.den.lcm(&rhs.den);
        let a = i128::from(self.num) * i128::from(l / self.den);
        let b = i128::from(rhs.num) * i128::from(l / rhs.den);
        QZ::new(((a + b) % i128::from(l)) as i64, l)
    }
}

impl AddAssign for QZ {
    fn add_assign(&mut self, rhs: QZ) {
        *self = *self + rhs;
    }
}

impl Neg for QZ {
    type Output = QZ;
    fn neg(self) -> QZ {
        QZ::new(-self.num, self.den)
    }
}

impl Sub for QZ {
    type Output = QZ;
    fn sub(self, rhs: QZ) -> QZ {
        self + (-rhs)
    }
}

impl Mul<i64> for QZ {
    type Output = QZ;
    fn mul(self, k: i64) -> QZ {
        let m = i128::from(self.num) * i128::from(k.rem_euclid(self.den));
        QZ::new((m % i128::from(self.den)) as i64, self.den)
    }
}

impl fmt::Display for QZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}
