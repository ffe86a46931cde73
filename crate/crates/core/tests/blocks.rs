use std::collections::BTreeSet;

use gvblocks_core::blocks::{
    block_dim_direct, block_dim_glued, pointed_modular_data, verlinde_dim,
};
use gvblocks_core::finite_forms::{
    all_qforms, gauss_sum, groups_up_to, radical, Element, FinAbGroup,
};
use gvblocks_core::mcg_torus::{check_relations, pointed_fusion, st_matrices};
use gvblocks_core::pointed_gv::PointedGVCategory;
use gvblocks_core::surfaces::{
    enumerate_decompositions, whitehead_move, whitehead_move_to, SurfaceSpec,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn surfaces_up_to(max_complexity: i64) -> Vec<(u32, usize)> {
    let mut out = Vec::new();
    for g in 0..=3u32 {
        for n in 0..=6usize {
            let c = 2 * i64::from(g) - 2 + n as i64;
            if (1..=max_complexity).contains(&c) {
                out.push((g, n));
            }
        }
    }
    out
}

fn random_element(rng: &mut ChaCha8Rng, g: &FinAbGroup) -> Element {
    g.element_at(rng.random_range(0..g.order() as usize))
}

/// Random labels; every other tuple is completed so the block condition holds.
fn random_labels(
    rng: &mut ChaCha8Rng,
    c: &PointedGVCategory,
    genus: u32,
    n: usize,
    satisfy: bool,
) -> Vec<Element> {
    let g = c.group();
    let mut labels: Vec<Element> = (0..n).map(|_| random_element(rng, g)).collect();
    if satisfy && n > 0 {
        let rest = labels[..n - 1]
            .iter()
            .fold(g.zero(), |acc, x| g.add(&acc, x));
        let target = g.scale(1 - i64::from(genus), c.g0());
        labels[n - 1] = g.sub(&target, &rest);
    }
    labels
}

fn random_category(rng: &mut ChaCha8Rng, max_order: u64) -> PointedGVCategory {
    let groups: Vec<FinAbGroup> = groups_up_to(max_order)
        .into_iter()
        .filter(|g| g.order() > 1)
        .collect();
    let g = groups[rng.random_range(0..groups.len())].clone();
    let forms = all_qforms(&g, 1 << 16).unwrap();
    let q = forms[rng.random_range(0..forms.len())].clone();
    let h0 = random_element(rng, &g);
    PointedGVCategory::new(q, h0).unwrap()
}

#[test]
fn decompositions_have_expected_shape() {
    for (g, n) in surfaces_up_to(4) {
        let pds = enumerate_decompositions(g, n, usize::MAX).unwrap();
        assert!(!pds.is_empty());
        let forms: BTreeSet<_> = pds.iter().map(|pd| pd.canonical_form().unwrap()).collect();
        assert_eq!(forms.len(), pds.len(), "duplicates for ({g}, {n})");
        for pd in &pds {
            assert_eq!(pd.genus(), g);
            assert_eq!(pd.boundary_count(), n);
            assert_eq!(pd.num_pants() as i64, 2 * i64::from(g) - 2 + n as i64);
            assert_eq!(pd.num_curves() as i64, 3 * i64::from(g) - 3 + n as i64);
        }
    }
}

#[test]
fn gluing_matches_direct_on_random_categories() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..40 {
        let c = random_category(&mut rng, 8);
        for (g, n) in surfaces_up_to(3) {
            let pds = enumerate_decompositions(g, n, usize::MAX).unwrap();
            for t in 0..6 {
                let spec =
                    SurfaceSpec::new(i64::from(g), random_labels(&mut rng, &c, g, n, t % 2 == 0))
                        .unwrap();
                let direct = block_dim_direct(&c, &spec).unwrap();
                for pd in &pds {
                    assert_eq!(block_dim_glued(&c, pd, &spec).unwrap(), direct);
                }
            }
        }
    }
}

#[test]
fn moves_preserve_topology_and_dimension() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (g, n) in surfaces_up_to(4) {
        for start in enumerate_decompositions(g, n, usize::MAX).unwrap() {
            let c = random_category(&mut rng, 4);
            let spec =
                SurfaceSpec::new(i64::from(g), random_labels(&mut rng, &c, g, n, true)).unwrap();
            let direct = block_dim_direct(&c, &spec).unwrap();
            let mut pd = start;
            for step in 0..8 {
                let dual = pd.dual();
                let flippable: Vec<(String, String)> = dual
                    .internal_edges()
                    .into_iter()
                    .filter(|(a, b)| dual.vertex_of(a) != dual.vertex_of(b))
                    .map(|(a, b)| (a.to_string(), b.to_string()))
                    .collect();
                if flippable.is_empty() {
                    break;
                }
                let (a, b) = &flippable[rng.random_range(0..flippable.len())];
                let next = if step % 2 == 0 {
                    whitehead_move(&pd, a).unwrap()
                } else {
                    let far: Vec<&String> = pd
                        .dual()
                        .half_edges_at(pd.dual().vertex_of(b).unwrap())
                        .unwrap()
                        .iter()
                        .filter(|h| *h != b)
                        .collect();
                    whitehead_move_to(&pd, a, far[rng.random_range(0..far.len())]).unwrap()
                };
                assert_eq!((next.genus(), next.boundary_count()), (g, n));
                assert_eq!(next.num_pants(), pd.num_pants());
                assert_eq!(next.moves().len(), pd.moves().len() + 1);
                assert_eq!(block_dim_glued(&c, &next, &spec).unwrap(), direct);
                pd = next;
            }
        }
    }
}

fn modular_categories(max_order: u64) -> Vec<PointedGVCategory> {
    groups_up_to(max_order)
        .iter()
        .flat_map(|g| all_qforms(g, 1 << 16).unwrap())
        .filter(|q| {
            radical(&gvblocks_core::finite_forms::bilinear(q))
                .unwrap()
                .is_trivial()
        })
        .map(|q| {
            let zero = q.group().zero();
            PointedGVCategory::new(q, zero).unwrap()
        })
        .collect()
}

#[test]
fn torus_relations_for_all_small_modular_categories() {
    let cats = modular_categories(16);
    assert!(cats.len() > 100);
    for c in &cats {
        let md = st_matrices(c).unwrap();
        let rel = check_relations(&md);
        let gamma = gauss_sum(c.qform()).unwrap();
        assert!(
            (rel.lambda - gamma).norm() < 1e-9,
            "{:?}",
            c.qform().matrix()
        );
        assert!(rel.passes(1e-9), "{rel:?}");
    }
}

#[test]
fn verlinde_matches_direct() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for c in modular_categories(16).iter().step_by(7) {
        let md = pointed_modular_data(c).unwrap();
        let g = c.group();
        for genus in 1..=3u32 {
            for n in 0..=2usize {
                let satisfy = rng.random_bool(0.5);
                let labels = random_labels(&mut rng, c, genus, n, satisfy);
                let idx: Vec<usize> = labels.iter().map(|x| g.index_of(x)).collect();
                let v = verlinde_dim(&md, genus, &idx).unwrap();
                let spec = SurfaceSpec::new(i64::from(genus), labels).unwrap();
                let direct = block_dim_direct(c, &spec).unwrap();
                assert!(v.residual < 1e-6);
                assert_eq!(v.nearest as u128, direct);
            }
        }
        pointed_fusion(c).unwrap();
    }
}
