use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::Graph;
use crate::{Error, Result};

/// Largest number of vertex orderings the canonical-form search will try.
const SEARCH_LIMIT: u64 = 3_628_800;

/// Isomorphism invariant of a graph that keeps leg labels but forgets the
/// names of vertices and internal half-edges.
///
/// It is the lexicographic minimum, over all vertex orderings, of the
/// per-vertex leg lists followed by the edge multiplicity matrix (loops on
/// the diagonal). Two graphs have equal canonical forms iff they are
/// isomorphic by a map fixing leg labels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub vertex_legs: Vec<Vec<String>>,
    pub adjacency: Vec<u32>,
}

impl CanonicalForm {
    pub fn num_vertices(&self) -> usize {
        self.vertex_legs.len()
    }

    /// Edge multiplicity between canonical vertices `i` and `j`.
    pub fn multiplicity(&self, i: usize, j: usize) -> u32 {
        self.adjacency[i * self.num_vertices() + j]
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct VertexKey {
    legs: Vec<String>,
    degree: usize,
    loops: u32,
}

impl Graph {
    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        let names: Vec<&str> = self.vertices().collect();
        let n = names.len();
        let index: BTreeMap<&str, usize> = names.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut adj = vec![0u32; n * n];
        for (a, b) in self.internal_edges() {
            let i = index[self.vertex_of(a).unwrap()];
            let j = index[self.vertex_of(b).unwrap()];
            adj[i * n + j] += 1;
            if i != j {
                adj[j * n + i] += 1;
            }
        }
        let keys: Vec<VertexKey> = names
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let mut legs: Vec<String> = self
                    .half_edges_at(v)
                    .unwrap()
                    .iter()
                    .filter(|h| self.is_leg(h))
                    .cloned()
                    .collect();
                legs.sort();
                VertexKey {
                    legs,
                    degree: self.degree(v),
                    loops: adj[i * n + i],
                }
            })
            .collect();

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
        // runs of equal keys are the only places where orderings compete
        let mut classes: Vec<(usize, usize)> = Vec::new();
        let mut start = 0;
        for i in 1..=n {
            if i == n || keys[order[i]] != keys[order[start]] {
                classes.push((start, i));
                start = i;
            }
        }
        let mut space: u64 = 1;
        for &(s, e) in &classes {
            for k in 1..=(e - s) as u64 {
                space = space.saturating_mul(k);
            }
        }
        if space > SEARCH_LIMIT {
            return Err(Error::Capacity {
                order: space,
                limit: SEARCH_LIMIT,
            });
        }

        let mut best: Option<Vec<u32>> = None;
        let mut current = order.clone();
        search(&classes, 0, &mut current, &adj, n, &mut best);
        Ok(CanonicalForm {
            vertex_legs: order.iter().map(|&i| keys[i].legs.clone()).collect(),
            adjacency: best.unwrap_or_default(),
        })
    }

    pub fn is_isomorphic(&self, other: &Graph) -> Result<bool> {
        Ok(self.canonical_form()? == other.canonical_form()?)
    }
}

fn permuted(order: &[usize], adj: &[u32], n: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(n * n);
    for &i in order {
        for &j in order {
            out.push(adj[i * n + j]);
        }
    }
    out
}

fn search(
    classes: &[(usize, usize)],
    class: usize,
    order: &mut Vec<usize>,
    adj: &[u32],
    n: usize,
    best: &mut Option<Vec<u32>>,
) {
    if class == classes.len() {
        let cand = permuted(order, adj, n);
        if best.as_ref().is_none_or(|b| cand < *b) {
            *best = Some(cand);
        }
        return;
    }
    let (s, e) = classes[class];
    permute_range(order, s, e, &mut |order| {
        search(classes, class + 1, order, adj, n, best)
    });
}

// Visits every permutation of order[start..end] (positions before `pos` fixed).
fn permute_range(
    order: &mut Vec<usize>,
    pos: usize,
    end: usize,
    f: &mut dyn FnMut(&mut Vec<usize>),
) {
    if pos + 1 >= end {
        f(order);
        return;
    }
    for i in pos..end {
        order.swap(pos, i);
        permute_range(order, pos + 1, end, f);
        order.swap(pos, i);
    }
}
