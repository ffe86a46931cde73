//! Pointed ribbon Grothendieck-Verdier categories `(G, q, h0)`.
//!
//! Simple objects are the elements of `G`, the tensor product is addition
//! and the unit is `0`. The double braiding is the polarization `b` of `q`.
//! The dualizing object sits in degree `g0 = 2 h0`, duality is
//! `D(x) = g0 - x`, the twist is `theta(x) = q(x) - b(x, h0)` and the
//! pairing `kappa(x, y)` is non-zero exactly when `x + y = g0`.
//!
//! Individual braiding scalars and the associator are not represented; all
//! structure is expressed through `q` and `b`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::finite_forms::{
    bilinear, radical, BilinearForm, Element, FinAbGroup, QForm, Subgroup, QZ,
};
use crate::{Error, Result};

/// Largest group order accepted by [`check_axioms_with`].
pub const AXIOM_LIMIT: u64 = 1 << 12;
/// Up to this order biadditivity is checked on all triples.
const TRIPLE_LIMIT: u64 = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointedGVCategory {
    qform: QForm,
    bilinear: BilinearForm,
    h0: Element,
    g0: Element,
}

impl PointedGVCategory {
    pub fn new(qform: QForm, h0: Element) -> Result<Self> {
        let group = qform.group();
        if !group.contains(&h0) {
            return Err(Error::ElementOutOfRange {
                element: h0.coords().to_vec(),
                factors: group.factors().to_vec(),
            });
        }
        let g0 = group.scale(2, &h0);
        let bilinear = bilinear(&qform);
        Ok(PointedGVCategory {
            qform,
            bilinear,
            h0,
            g0,
        })
    }

    /// The unit category on the trivial group.
    pub fn trivial() -> Self {
        let g = FinAbGroup::trivial();
        let h0 = g.zero();
        PointedGVCategory::new(QForm::zero(g), h0).expect("trivial data is valid")
    }

    pub fn group(&self) -> &FinAbGroup {
        self.qform.group()
    }

    pub fn qform(&self) -> &QForm {
        &self.qform
    }

    pub fn bilinear(&self) -> &BilinearForm {
        &self.bilinear
    }

    pub fn h0(&self) -> &Element {
        &self.h0
    }

    /// Degree of the dualizing object `K`.
    pub fn g0(&self) -> &Element {
        &self.g0
    }

    pub fn dual(&self, x: &Element) -> Element {
        self.group().sub(&self.g0, x)
    }

    pub fn twist(&self, x: &Element) -> QZ {
        self.qform.value(x) - self.bilinear.value(x, &self.h0)
    }

    pub fn pairing(&self, x: &Element, y: &Element) -> u8 {
        u8::from(self.group().add(x, y) == self.g0)
    }

    pub fn check_axioms(&self) -> Result<AxiomReport> {
        check_axioms_with(&self.qform, &self.g0, |x| self.twist(x))
    }

    /// The radical of `b` and its part with trivial twist.
    pub fn mueger_center(&self) -> Result<MuegerCenter> {
        let radical = radical(&self.bilinear)?;
        let balanced = radical
            .elements
            .iter()
            .filter(|x| self.twist(x).is_zero())
            .cloned()
            .collect();
        Ok(MuegerCenter {
            balanced: Subgroup::from_elements(self.group(), balanced),
            radical,
        })
    }

    pub fn verdicts(&self) -> Result<Verdicts> {
        let nondegenerate = radical(&self.bilinear)?.is_trivial();
        let cofactorizable = nondegenerate;
        let modular = nondegenerate && self.group().is_zero(&self.g0);
        let connected = if cofactorizable {
            TriState::True
        } else {
            TriState::Undetermined
        };
        Ok(Verdicts {
            nondegenerate,
            cofactorizable,
            modular,
            connected,
            extension_unique: connected,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuegerCenter {
    pub radical: Subgroup,
    pub balanced: Subgroup,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriState {
    True,
    False,
    Undetermined,
}

impl TriState {
    pub fn is_true(self) -> bool {
        self == TriState::True
    }
}

impl fmt::Display for TriState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TriState::True => "true",
            TriState::False => "false",
            TriState::Undetermined => "undetermined",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdicts {
    pub nondegenerate: bool,
    pub cofactorizable: bool,
    pub modular: bool,
    pub connected: TriState,
    pub extension_unique: TriState,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Axiom {
    /// `b` symmetric and biadditive (stands in for the hexagon relations).
    Biadditivity,
    /// `theta(x + y) = theta(x) + theta(y) + b(x, y)`.
    Balancing,
    /// `theta(0) = 0`.
    UnitTwist,
    /// `theta(D(x)) = theta(x)`.
    Ribbon,
    /// `kappa(theta x, y) = kappa(x, theta y)`: equal twists on paired objects.
    PairingBalance,
    /// `D(D(x)) = x` and `kappa(x, D(x)) = 1`.
    Duality,
    /// `q(-x) = q(x)`.
    EvenForm,
}

impl Axiom {
    pub const ALL: [Axiom; 7] = [
        Axiom::Biadditivity,
        Axiom::Balancing,
        Axiom::UnitTwist,
        Axiom::Ribbon,
        Axiom::PairingBalance,
        Axiom::Duality,
        Axiom::EvenForm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Biadditivity => "biadditivity",
            Axiom::Balancing => "balancing",
            Axiom::UnitTwist => "unit_twist",
            Axiom::Ribbon => "ribbon",
            Axiom::PairingBalance => "pairing_balance",
            Axiom::Duality => "duality",
            Axiom::EvenForm => "even_form",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomResult {
    pub axiom: Axiom,
    pub passed: bool,
    /// Elements exhibiting the first failure.
    pub witness: Option<Vec<Element>>,
    /// False when only a generating set was checked.
    pub exhaustive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn get(&self, axiom: Axiom) -> &AxiomResult {
        self.results
            .iter()
            .find(|r| r.axiom == axiom)
            .expect("every axiom is reported")
    }

    pub fn failures(&self) -> Vec<String> {
        self.results
            .iter()
            .filter(|r| !r.passed)
            .map(|r| String::from(r.axiom.name()))
            .collect()
    }
}

/// Runs the axiom suite for the form `q`, dualizing degree `g0` and an
/// arbitrary twist function, by enumeration over the group.
pub fn check_axioms_with(
    q: &QForm,
    g0: &Element,
    twist: impl Fn(&Element) -> QZ,
) -> Result<AxiomReport> {
    let group = q.group();
    group_limit(group)?;
    let n = group.order() as usize;
    let elems: Vec<Element> = group.elements().collect();

    // everything on the common denominator `den`
    let thetas: Vec<QZ> = elems.iter().map(&twist).collect();
    let den = thetas
        .iter()
        .fold(q.denominator(), |acc, t| acc.lcm(&t.denom()));
    let qv: Vec<i64> = elems
        .iter()
        .map(|x| q.value_numer(x) * (den / q.denominator()))
        .collect();
    let tv: Vec<i64> = thetas
        .iter()
        .map(|t| t.numer() * (den / t.denom()))
        .collect();
    let m = |v: i64| v.rem_euclid(den);

    let table = (n as u64 <= TRIPLE_LIMIT).then(|| {
        let mut t = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                t[i * n + j] = group.index_of(&group.add(&elems[i], &elems[j]));
            }
        }
        t
    });
    let add = |i: usize, j: usize| match &table {
        Some(t) => t[i * n + j],
        None => group.index_of(&group.add(&elems[i], &elems[j])),
    };
    let b = |i: usize, j: usize| m(qv[add(i, j)] - qv[i] - qv[j]);
    let neg = |i: usize| group.index_of(&group.neg(&elems[i]));
    let g0i = group.index_of(g0);
    let dual = |i: usize| group.index_of(&group.sub(g0, &elems[i]));
    let wit = |idx: &[usize]| Some(idx.iter().map(|&i| elems[i].clone()).collect::<Vec<_>>());

    let mut results = Vec::new();

    // biadditivity
    let exhaustive = table.is_some();
    let mut witness = None;
    'outer: for i in 0..n {
        for j in 0..n {
            if b(i, j) != b(j, i) {
                witness = wit(&[i, j]);
                break 'outer;
            }
        }
    }
    if witness.is_none() {
        let zs: Vec<usize> = if exhaustive {
            (0..n).collect()
        } else {
            (0..group.rank())
                .map(|k| group.index_of(&group.generator(k)))
                .collect()
        };
        'outer: for i in 0..n {
            for j in 0..n {
                let ij = add(i, j);
                for &k in &zs {
                    if b(ij, k) != m(b(i, k) + b(j, k)) {
                        witness = wit(&[i, j, k]);
                        break 'outer;
                    }
                }
            }
        }
    }
    results.push(AxiomResult {
        axiom: Axiom::Biadditivity,
        passed: witness.is_none(),
        witness,
        exhaustive,
    });

    // balancing
    let mut witness = None;
    'outer: for i in 0..n {
        for j in 0..n {
            if tv[add(i, j)] != m(tv[i] + tv[j] + b(i, j)) {
                witness = wit(&[i, j]);
                break 'outer;
            }
        }
    }
    results.push(AxiomResult {
        axiom: Axiom::Balancing,
        passed: witness.is_none(),
        witness,
        exhaustive: true,
    });

    let zero = group.index_of(&group.zero());
    results.push(AxiomResult {
        axiom: Axiom::UnitTwist,
        passed: tv[zero] == 0,
        witness: (tv[zero] != 0).then(|| vec![elems[zero].clone()]),
        exhaustive: true,
    });

    let witness = (0..n)
        .find(|&i| tv[dual(i)] != tv[i])
        .and_then(|i| wit(&[i, dual(i)]));
    results.push(AxiomResult {
        axiom: Axiom::Ribbon,
        passed: witness.is_none(),
        witness,
        exhaustive: true,
    });

    let mut witness = None;
    'outer: for i in 0..n {
        for j in 0..n {
            if add(i, j) == g0i && tv[i] != tv[j] {
                witness = wit(&[i, j]);
                break 'outer;
            }
        }
    }
    results.push(AxiomResult {
        axiom: Axiom::PairingBalance,
        passed: witness.is_none(),
        witness,
        exhaustive: true,
    });

    let witness = (0..n)
        .find(|&i| dual(dual(i)) != i || add(i, dual(i)) != g0i)
        .and_then(|i| wit(&[i]));
    results.push(AxiomResult {
        axiom: Axiom::Duality,
        passed: witness.is_none(),
        witness,
        exhaustive: true,
    });

    let witness = (0..n)
        .find(|&i| qv[neg(i)] != qv[i])
        .and_then(|i| wit(&[i]));
    results.push(AxiomResult {
        axiom: Axiom::EvenForm,
        passed: witness.is_none(),
        witness,
        exhaustive: true,
    });

    Ok(AxiomReport { results })
}

fn group_limit(group: &FinAbGroup) -> Result<()> {
    let order = group.order();
    if order > AXIOM_LIMIT {
        return Err(Error::Capacity {
            order,
            limit: AXIOM_LIMIT,
        });
    }
    Ok(())
}
