use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Largest group order that enumeration-based operations accept.
pub const ENUMERATION_LIMIT: u64 = 1 << 16;

/// A group element: coordinates reduced modulo the invariant factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(Vec<i64>);

impl Element {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// `Z/n_1 x ... x Z/n_k` with the factors exactly as given.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinAbGroup {
    factors: Vec<u64>,
}

impl FinAbGroup {
    pub fn new(invariant_factors: &[i64]) -> Result<Self> {
        let factors = invariant_factors
            .iter()
            .map(|&n| {
                if n >= 1 {
                    Ok(n as u64)
                } else {
                    Err(Error::InvalidFactor(n))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FinAbGroup { factors })
    }

    pub fn trivial() -> Self {
        FinAbGroup {
            factors: Vec::new(),
        }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// Group order, saturating at `u64::MAX`.
    pub fn order(&self) -> u64 {
        self.factors.iter().fold(1u64, |a, &n| a.saturating_mul(n))
    }

    pub(crate) fn check_enumerable(&self, limit: u64) -> Result<()> {
        let order = self.order();
        if order > limit {
            Err(Error::Capacity { order, limit })
        } else {
            Ok(())
        }
    }

    /// Strict constructor: each coordinate must lie in `0..n_i`.
    pub fn element(&self, coords: &[i64]) -> Result<Element> {
        let ok = coords.len() == self.factors.len()
            && coords
                .iter()
                .zip(&self.factors)
                .all(|(&c, &n)| c >= 0 && (c as u64) < n);
        if ok {
            Ok(Element(coords.to_vec()))
        } else {
            Err(Error::ElementOutOfRange {
                element: coords.to_vec(),
                factors: self.factors.clone(),
            })
        }
    }

    /// Reduces arbitrary integer coordinates modulo the factors.
    pub fn reduce(&self, coords: &[i64]) -> Result<Element> {
        if coords.len() != self.factors.len() {
            return Err(Error::ElementOutOfRange {
                element: coords.to_vec(),
                factors: self.factors.clone(),
            });
        }
        Ok(Element(
            coords
                .iter()
                .zip(&self.factors)
                .map(|(&c, &n)| c.rem_euclid(n as i64))
                .collect(),
        ))
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.element(&x.0).is_ok()
    }

    pub fn zero(&self) -> Element {
        Element(vec![0; self.factors.len()])
    }

    /// The `i`-th standard generator.
    pub fn generator(&self, i: usize) -> Element {
        let mut c = vec![0; self.factors.len()];
        c[i] = 1 % self.factors[i] as i64;
        Element(c)
    }

    pub fn add(&self, x: &Element, y: &Element) -> Element {
        Element(
            x.0.iter()
                .zip(&y.0)
                .zip(&self.factors)
                .map(|((a, b), &n)| (a + b) % n as i64)
                .collect(),
        )
    }

    pub fn neg(&self, x: &Element) -> Element {
        Element(
            x.0.iter()
                .zip(&self.factors)
                .map(|(a, &n)| (n as i64 - a) % n as i64)
                .collect(),
        )
    }

    pub fn sub(&self, x: &Element, y: &Element) -> Element {
        self.add(x, &self.neg(y))
    }

    pub fn scale(&self, k: i64, x: &Element) -> Element {
        Element(
            x.0.iter()
                .zip(&self.factors)
                .map(|(a, &n)| {
                    let n = n as i128;
                    ((i128::from(k) * i128::from(*a)).rem_euclid(n)) as i64
                })
                .collect(),
        )
    }

    pub fn is_zero(&self, x: &Element) -> bool {
        x.0.iter().all(|&c| c == 0)
    }

    /// Position of `x` in [`FinAbGroup::elements`] (first coordinate varies
    /// slowest).
    pub fn index_of(&self, x: &Element) -> usize {
        x.0.iter()
            .zip(&self.factors)
            .fold(0usize, |acc, (&c, &n)| acc * n as usize + c as usize)
    }

    pub fn element_at(&self, mut index: usize) -> Element {
        let mut c = vec![0; self.factors.len()];
        for (slot, &n) in c.iter_mut().zip(&self.factors).rev() {
            *slot = (index % n as usize) as i64;
            index /= n as usize;
        }
        Element(c)
    }

    /// All elements in index order. Callers check the order first.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order() as usize).map(move |i| self.element_at(i))
    }

    /// Order of the cyclic subgroup generated by `x`.
    pub fn element_order(&self, x: &Element) -> u64 {
        x.0.iter().zip(&self.factors).fold(1u64, |acc, (&c, &n)| {
            let g = gcd(c as u64, n);
            lcm(acc, n / g)
        })
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// A subgroup given by its elements, with its isomorphism type as a
/// divisibility chain `d_1 | d_2 | ...` (trivial factors dropped).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    pub elements: Vec<Element>,
    pub invariant_factors: Vec<u64>,
}

impl Subgroup {
    /// `elements` must be closed under addition in `group`.
    pub fn from_elements(group: &FinAbGroup, elements: Vec<Element>) -> Self {
        let invariant_factors = invariant_factors_of(group, &elements);
        Subgroup {
            elements,
            invariant_factors,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() <= 1
    }

    pub fn describe(&self) -> String {
        if self.invariant_factors.is_empty() {
            return "trivial".into();
        }
        let parts: Vec<String> = self
            .invariant_factors
            .iter()
            .map(|d| format!("Z/{d}"))
            .collect();
        parts.join(" x ")
    }
}

// Isomorphism type from the sizes of the p^k-torsion subgroups.
fn invariant_factors_of(group: &FinAbGroup, elements: &[Element]) -> Vec<u64> {
    let order = elements.len() as u64;
    let mut primes = Vec::new();
    let mut m = order;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            primes.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        primes.push(m);
    }

    // per prime: exponents of its cyclic factors, largest first
    let mut exponents: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for &p in &primes {
        let mut total = 0u32;
        let mut t = order;
        while t.is_multiple_of(p) {
            t /= p;
            total += 1;
        }
        // ranks[k-1] = log_p |H[p^k]| - log_p |H[p^(k-1)]|
        let mut ranks = Vec::new();
        let mut prev = 0u32;
        let mut k = 1u32;
        while prev < total {
            let pk = p.pow(k);
            let mut c = elements.iter().filter(|x| is_killed(group, x, pk)).count() as u64;
            let mut e = 0u32;
            while c > 1 {
                c /= p;
                e += 1;
            }
            ranks.push(e - prev);
            prev = e;
            k += 1;
        }
        let largest = ranks.first().copied().unwrap_or(0);
        let exps: Vec<u32> = (1..=largest)
            .map(|m| ranks.iter().filter(|&&r| r >= m).count() as u32)
            .collect();
        exponents.insert(p, exps);
    }
    let len = exponents.values().map(Vec::len).max().unwrap_or(0);
    let mut factors: Vec<u64> = (0..len)
        .map(|m| {
            exponents
                .iter()
                .map(|(&p, e)| e.get(m).map_or(1, |&x| p.pow(x)))
                .product()
        })
        .collect();
    factors.reverse();
    factors
}

fn is_killed(group: &FinAbGroup, x: &Element, k: u64) -> bool {
    group.is_zero(&group.scale(k as i64, x))
}

/// All groups `Z/n_1 x ... x Z/n_k` with `1 < n_1 | n_2 | ... | n_k` and
/// order at most `max_order`, ordered by order and then by factors. The
/// trivial group comes first.
pub fn groups_up_to(max_order: u64) -> Vec<FinAbGroup> {
    fn extend(prefix: &mut Vec<i64>, order: u64, max_order: u64, out: &mut Vec<Vec<i64>>) {
        out.push(prefix.clone());
        let start = prefix.last().map_or(2, |&d| d as u64);
        let mut m = start;
        while order * m <= max_order {
            if prefix.last().is_none_or(|&d| m.is_multiple_of(d as u64)) {
                prefix.push(m as i64);
                extend(prefix, order * m, max_order, out);
                prefix.pop();
            }
            m += 1;
        }
    }
    let mut all = Vec::new();
    extend(&mut Vec::new(), 1, max_order, &mut all);
    let mut groups: Vec<FinAbGroup> = all
        .iter()
        .map(|f| FinAbGroup::new(f).expect("factors > 1"))
        .collect();
    groups.sort_by(|a, b| (a.order(), a.factors()).cmp(&(b.order(), b.factors())));
    groups
}
