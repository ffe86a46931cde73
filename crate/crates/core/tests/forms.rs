#![allow(clippy::needless_range_loop)]

use gvblocks_core::finite_forms::{
    all_qforms, bilinear, gauss_sum, groups_up_to, radical, FinAbGroup, QForm, Rational,
};
use gvblocks_core::lattice_data::{discriminant_group, to_pointed_gv, LatticeData};
use gvblocks_core::pointed_gv::{Axiom, PointedGVCategory};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const FORM_LIMIT: u64 = 1 << 16;

/// All forms on each group of order <= `order` when there are at most
/// `per_group` of them, otherwise a seeded sample of `sample` forms.
fn forms_up_to(order: u64, per_group: u64, sample: usize) -> Vec<QForm> {
    let mut rng = ChaCha8Rng::seed_from_u64(order);
    let mut out = Vec::new();
    for g in groups_up_to(order) {
        match all_qforms(&g, per_group) {
            Ok(forms) => out.extend(forms),
            Err(_) => {
                let n = g.factors().to_vec();
                let k = n.len();
                let mut found = 0;
                while found < sample {
                    let mut m = vec![vec![Rational::new(0, 1); k]; k];
                    for i in 0..k {
                        let d = 2 * n[i] as i64;
                        m[i][i] = Rational::new(rng.random_range(0..d), d);
                        for j in i + 1..k {
                            let d = 2 * n[i].min(n[j]) as i64;
                            m[i][j] = Rational::new(rng.random_range(0..d), d);
                            m[j][i] = m[i][j];
                        }
                    }
                    if let Ok(q) = QForm::new(g.clone(), m) {
                        out.push(q);
                        found += 1;
                    }
                }
            }
        }
    }
    out
}

#[test]
fn group_and_form_counts() {
    // Number of abelian groups of order 1..=16.
    let counts = [1, 1, 1, 2, 1, 1, 1, 3, 2, 1, 1, 2, 1, 1, 1, 5];
    let groups = groups_up_to(16);
    for (n, &c) in counts.iter().enumerate() {
        assert_eq!(
            groups.iter().filter(|g| g.order() == n as u64 + 1).count(),
            c
        );
    }
    let z2 = FinAbGroup::new(&[2]).unwrap();
    assert_eq!(all_qforms(&z2, FORM_LIMIT).unwrap().len(), 4);
    let z3 = FinAbGroup::new(&[3]).unwrap();
    assert_eq!(all_qforms(&z3, FORM_LIMIT).unwrap().len(), 3);
    // On Z/2 x Z/2: q(e1), q(e2) in {0,1/4,1/2,3/4}, b(e1,e2) in {0,1/2}.
    let v4 = FinAbGroup::new(&[2, 2]).unwrap();
    assert_eq!(all_qforms(&v4, FORM_LIMIT).unwrap().len(), 32);
}

#[test]
fn quadratic_form_laws() {
    for q in forms_up_to(64, 1024, 64) {
        let g = q.group();
        let b = bilinear(&q);
        let elems: Vec<_> = g.elements().collect();
        for x in &elems {
            for k in -3i64..=3 {
                assert_eq!(q.value(&g.scale(k, x)), q.value(x) * (k * k));
            }
            for y in &elems {
                let bxy = b.value(x, y);
                assert_eq!(bxy, b.value(y, x));
                assert_eq!(bxy, q.value(&g.add(x, y)) - q.value(x) - q.value(y));
            }
        }
        if g.order() <= 16 {
            for x in &elems {
                for y in &elems {
                    for z in &elems {
                        assert_eq!(b.value(&g.add(x, y), z), b.value(x, z) + b.value(y, z));
                    }
                }
            }
        }
        let rad = radical(&b).unwrap();
        let brute: Vec<_> = elems
            .iter()
            .filter(|x| elems.iter().all(|y| b.value(x, y).is_zero()))
            .collect();
        assert_eq!(rad.order(), brute.len());
        for x in &rad.elements {
            for y in &rad.elements {
                assert!(rad.elements.contains(&g.add(x, y)));
            }
        }
    }
}

#[test]
fn gauss_sums_of_nondegenerate_forms_are_phases() {
    for q in forms_up_to(16, FORM_LIMIT, 0) {
        let trivial = radical(&bilinear(&q)).unwrap().is_trivial();
        let gamma = gauss_sum(&q).unwrap();
        if trivial {
            assert!((gamma.norm() - 1.0).abs() < 1e-12, "{:?}", q.matrix());
        }
    }
}

#[test]
fn gauss_sum_oracle() {
    // Quadratic Gauss sums over Z/p with q(x) = a x^2 / p.
    for p in [3i64, 5, 7, 11, 13] {
        let g = FinAbGroup::new(&[p]).unwrap();
        for a in 1..p {
            let q = QForm::new(g.clone(), vec![vec![Rational::new(a, p)]]).unwrap();
            let direct: Complex64 = (0..p)
                .map(|x| {
                    Complex64::cis(2.0 * std::f64::consts::PI * (a * x * x % p) as f64 / p as f64)
                })
                .sum::<Complex64>()
                / (p as f64).sqrt();
            let legendre = (1..p).any(|y| y * y % p == a);
            let sign = if legendre { 1.0 } else { -1.0 };
            let expected = if p % 4 == 1 {
                Complex64::new(sign, 0.0)
            } else {
                Complex64::new(0.0, sign)
            };
            let gamma = gauss_sum(&q).unwrap();
            assert!((gamma - direct).norm() < 1e-12);
            assert!((gamma - expected).norm() < 1e-12);
        }
    }
}

#[test]
fn axioms_hold_for_small_categories() {
    let mut forms = forms_up_to(16, FORM_LIMIT, 0);
    forms.extend(
        forms_up_to(64, 32, 8)
            .into_iter()
            .filter(|q| q.group().order() > 16),
    );
    for q in forms {
        let g = q.group().clone();
        let h0s: Vec<_> = if g.order() <= 8 {
            g.elements().collect()
        } else {
            vec![g.zero(), g.element_at(g.order() as usize - 1)]
        };
        for h0 in h0s {
            let c = PointedGVCategory::new(q.clone(), h0).unwrap();
            let report = c.check_axioms().unwrap();
            assert!(
                report.all_passed(),
                "{:?}: {:?}",
                q.matrix(),
                report.failures()
            );
            for axiom in [
                Axiom::Biadditivity,
                Axiom::Balancing,
                Axiom::UnitTwist,
                Axiom::Ribbon,
            ] {
                assert!(report.get(axiom).exhaustive || g.order() > 16);
            }
        }
    }
}

#[test]
fn verdict_chain() {
    for q in forms_up_to(16, FORM_LIMIT, 0) {
        let g = q.group().clone();
        for h0 in g.elements() {
            let c = PointedGVCategory::new(q.clone(), h0.clone()).unwrap();
            let v = c.verdicts().unwrap();
            if v.modular {
                assert!(v.cofactorizable);
            }
            if v.cofactorizable {
                assert!(v.connected.is_true());
            }
            assert_eq!(v.modular, v.cofactorizable && g.is_zero(c.g0()));
            if g.is_zero(&h0) {
                for x in g.elements() {
                    assert_eq!(c.twist(&x), q.value(&x));
                }
            }
        }
    }
}

fn even_gram() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=3).prop_flat_map(|n| {
        (
            prop::collection::vec(1i64..=4, n),
            prop::collection::vec(-3i64..=3, n * (n - 1) / 2),
        )
            .prop_map(move |(diag, off)| {
                let mut m = vec![vec![0i64; n]; n];
                let mut k = 0;
                for i in 0..n {
                    m[i][i] = 2 * diag[i];
                    for j in i + 1..n {
                        m[i][j] = off[k];
                        m[j][i] = off[k];
                        k += 1;
                    }
                }
                m
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn discriminant_order_is_determinant(gram in even_gram()) {
        let xi = vec![Rational::new(0, 1); gram.len()];
        let lattice = match LatticeData::new(&gram, xi) {
            Ok(l) => l,
            Err(_) => return Ok(()),
        };
        let disc = discriminant_group(&lattice).unwrap();
        prop_assert_eq!(i128::from(disc.group.order()), lattice.determinant().abs());
        let c = to_pointed_gv(&lattice).unwrap();
        prop_assert!(radical(c.bilinear()).unwrap().is_trivial());

        // q does not depend on the chosen lift: shifting by lattice vectors.
        let n = gram.len();
        for (i, lift) in disc.lifts.iter().enumerate() {
            let x = disc.group.generator(i);
            for e in 0..n {
                let mut shifted = lift.clone();
                shifted[e] += Rational::new(1, 1);
                prop_assert_eq!(disc.project(&lattice, &shifted), Some(x.clone()));
                let half = lattice.inner(&shifted, &shifted) / 2;
                prop_assert_eq!(
                    gvblocks_core::finite_forms::QZ::from_ratio(half),
                    c.qform().value(&x)
                );
            }
        }
    }
}
