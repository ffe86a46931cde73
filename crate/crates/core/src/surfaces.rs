//! Labeled surfaces and their pants decompositions.
//!
//! A pants decomposition is stored through its dual graph: one trivalent
//! vertex per pair of pants, one internal edge per cutting curve and one
//! leg per boundary circle. Two moves act on decompositions: the flip
//! ([`whitehead_move`]) across a curve separating two distinct pants, and
//! the torus move ([`s_move`]) on a curve bounding a one-holed torus.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::finite_forms::Element;
use crate::graph_operad::{CanonicalForm, Graph};
use crate::{Error, Result};

/// Range of `2g - 2 + n` accepted by [`enumerate_decompositions`].
pub const ENUMERATION_COMPLEXITY: (i64, i64) = (1, 4);

/// Genus and ordered boundary labels `X_1, ..., X_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceSpec {
    genus: u32,
    labels: Vec<Element>,
}

impl SurfaceSpec {
    pub fn new(genus: i64, labels: Vec<Element>) -> Result<Self> {
        let genus = u32::try_from(genus).map_err(|_| Error::NegativeGenus(genus))?;
        Ok(SurfaceSpec { genus, labels })
    }

    pub fn closed(genus: u32) -> Self {
        SurfaceSpec {
            genus,
            labels: Vec::new(),
        }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn labels(&self) -> &[Element] {
        &self.labels
    }

    pub fn boundary_count(&self) -> usize {
        self.labels.len()
    }

    /// `2g - 2 + n`, the number of pairs of pants in any decomposition.
    pub fn complexity(&self) -> i64 {
        complexity(self.genus, self.labels.len())
    }
}

fn complexity(genus: u32, n: usize) -> i64 {
    2 * i64::from(genus) - 2 + n as i64
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MoveRecord {
    Whitehead { edge: String },
    S { edge: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PantsDecomposition {
    dual: Graph,
    // boundary index -> leg half-edge
    leg_order: Vec<String>,
    moves: Vec<MoveRecord>,
}

impl PantsDecomposition {
    /// `leg_order[i]` is the leg glued to boundary circle `i`.
    pub fn new(dual: Graph, leg_order: Vec<String>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidDecomposition(m));
        if dual.num_vertices() == 0 {
            return bad("empty dual graph (2g - 2 + n must be at least 1)".into());
        }
        if let Some(v) = dual.vertices().find(|v| dual.degree(v) != 3) {
            return bad(format!(
                "vertex `{v}` has degree {}, expected 3",
                dual.degree(v)
            ));
        }
        if !dual.is_connected() {
            return bad(format!(
                "dual graph has {} components",
                dual.components().len()
            ));
        }
        let legs = dual.num_legs();
        if leg_order.len() != legs {
            return bad(format!(
                "count mismatch: {} boundary labels for {legs} legs (V = {}, E = {})",
                leg_order.len(),
                dual.num_vertices(),
                dual.num_internal_edges()
            ));
        }
        let mut seen = BTreeMap::new();
        for (i, l) in leg_order.iter().enumerate() {
            if !dual.is_leg(l) {
                return bad(format!("`{l}` is not a leg of the dual graph"));
            }
            if seen.insert(l.as_str(), i).is_some() {
                return bad(format!("leg `{l}` listed twice"));
            }
        }
        Ok(PantsDecomposition {
            dual,
            leg_order,
            moves: Vec::new(),
        })
    }

    pub fn dual(&self) -> &Graph {
        &self.dual
    }

    pub fn leg_order(&self) -> &[String] {
        &self.leg_order
    }

    pub fn leg_index(&self, leg: &str) -> Option<usize> {
        self.leg_order.iter().position(|l| l == leg)
    }

    pub fn moves(&self) -> &[MoveRecord] {
        &self.moves
    }

    pub fn genus(&self) -> u32 {
        (self.dual.num_internal_edges() + 1 - self.dual.num_vertices()) as u32
    }

    pub fn boundary_count(&self) -> usize {
        self.leg_order.len()
    }

    pub fn num_pants(&self) -> usize {
        self.dual.num_vertices()
    }

    pub fn num_curves(&self) -> usize {
        self.dual.num_internal_edges()
    }

    /// Errors unless the decomposition is of a surface with the genus and
    /// boundary count of `spec`.
    pub fn check_matches(&self, spec: &SurfaceSpec) -> Result<()> {
        if self.genus() != spec.genus() || self.boundary_count() != spec.boundary_count() {
            return Err(Error::InvalidDecomposition(format!(
                "count mismatch: decomposition has (g, n) = ({}, {}), surface has ({}, {})",
                self.genus(),
                self.boundary_count(),
                spec.genus(),
                spec.boundary_count()
            )));
        }
        Ok(())
    }

    /// Canonical form of the dual graph with leg `i` renamed `b<i>`.
    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        let names: BTreeMap<&str, String> = self
            .leg_order
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), boundary_name(i)))
            .collect();
        let g = self
            .dual
            .relabel(ToString::to_string, |h| match names.get(h) {
                Some(b) => b.clone(),
                None => format!("#{h}"),
            })?;
        g.canonical_form()
    }

    fn with_graph(&self, dual: Graph, record: MoveRecord) -> Result<Self> {
        let mut pd = PantsDecomposition::new(dual, self.leg_order.clone())?;
        pd.moves = self.moves.clone();
        pd.moves.push(record);
        Ok(pd)
    }
}

fn boundary_name(i: usize) -> String {
    format!("b{i}")
}

/// Rebuilds the standard representative of a canonical form: vertices
/// `v<i>`, the `k`-th curve with halves `e<k>.0` and `e<k>.1`.
fn from_canonical(cf: &CanonicalForm) -> Result<PantsDecomposition> {
    let n = cf.num_vertices();
    let mut halves: Vec<Vec<String>> = cf.vertex_legs.clone();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i..n {
            for _ in 0..cf.multiplicity(i, j) {
                let k = edges.len();
                let (a, b) = (format!("e{k}.0"), format!("e{k}.1"));
                halves[i].push(a.clone());
                halves[j].push(b.clone());
                edges.push((a, b));
            }
        }
    }
    let mut legs: Vec<(usize, String)> = cf
        .vertex_legs
        .iter()
        .flatten()
        .map(|l| (l[1..].parse::<usize>().unwrap_or(usize::MAX), l.clone()))
        .collect();
    legs.sort();
    let graph = Graph::new(
        halves
            .into_iter()
            .enumerate()
            .map(|(i, hs)| (format!("v{i}"), hs)),
        edges,
    )?;
    PantsDecomposition::new(graph, legs.into_iter().map(|(_, l)| l).collect())
}

/// All pants decompositions of the surface of genus `genus` with `n`
/// boundary circles, one per isomorphism class of dual graph fixing
/// boundary indices, sorted by canonical form and truncated at `cap`.
pub fn enumerate_decompositions(
    genus: u32,
    n: usize,
    cap: usize,
) -> Result<Vec<PantsDecomposition>> {
    let c = complexity(genus, n);
    let (lo, hi) = ENUMERATION_COMPLEXITY;
    if !(lo..=hi).contains(&c) {
        return Err(Error::ComplexityOutOfRange(c, lo, hi));
    }
    let v = c as usize;
    let mut found: BTreeMap<CanonicalForm, ()> = BTreeMap::new();
    let mut assignment = vec![0usize; n];
    assign_legs(0, v, &mut assignment, &mut |assignment| {
        let mut legs: Vec<Vec<String>> = vec![Vec::new(); v];
        for (leg, &vert) in assignment.iter().enumerate() {
            legs[vert].push(boundary_name(leg));
        }
        let remaining: Vec<u32> = legs.iter().map(|l| 3 - l.len() as u32).collect();
        let mut adj = vec![0u32; v * v];
        multigraphs(0, 0, &remaining, &mut adj, v, &mut |adj| {
            if let Some(cf) = build(&legs, adj, v) {
                found.insert(cf, ());
            }
        });
    });
    found.keys().take(cap).map(from_canonical).collect()
}

fn assign_legs(leg: usize, v: usize, out: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if leg == out.len() {
        f(out);
        return;
    }
    for vert in 0..v {
        if out[..leg].iter().filter(|&&x| x == vert).count() < 3 {
            out[leg] = vert;
            assign_legs(leg + 1, v, out, f);
        }
    }
}

// Fills the upper triangle of `adj` (loops on the diagonal) so that every
// vertex reaches its remaining degree; pairs are visited row by row.
fn multigraphs(
    u: usize,
    w: usize,
    remaining: &[u32],
    adj: &mut Vec<u32>,
    v: usize,
    f: &mut dyn FnMut(&[u32]),
) {
    if u == v {
        f(adj);
        return;
    }
    if w == v {
        if used_degree(adj, v, u) == remaining[u] {
            multigraphs(u + 1, u + 1, remaining, adj, v, f);
        }
        return;
    }
    let mut m = 0;
    loop {
        adj[u * v + w] = m;
        if used_degree(adj, v, u) > remaining[u] || used_degree(adj, v, w) > remaining[w] {
            break;
        }
        multigraphs(u, w + 1, remaining, adj, v, f);
        m += 1;
    }
    adj[u * v + w] = 0;
}

fn used_degree(adj: &[u32], v: usize, x: usize) -> u32 {
    (0..v)
        .map(|y| {
            let m = adj[x.min(y) * v + x.max(y)];
            if x == y {
                2 * m
            } else {
                m
            }
        })
        .sum()
}

fn build(legs: &[Vec<String>], adj: &[u32], v: usize) -> Option<CanonicalForm> {
    let mut halves: Vec<Vec<String>> = legs.to_vec();
    let mut edges = Vec::new();
    for i in 0..v {
        for j in i..v {
            for _ in 0..adj[i * v + j] {
                let k = edges.len();
                let (a, b) = (format!("e{k}.0"), format!("e{k}.1"));
                halves[i].push(a.clone());
                halves[j].push(b.clone());
                edges.push((a, b));
            }
        }
    }
    let g = Graph::new(
        halves
            .into_iter()
            .enumerate()
            .map(|(i, hs)| (format!("v{i}"), hs)),
        edges,
    )
    .ok()?;
    if !g.is_connected() {
        return None;
    }
    g.canonical_form().ok()
}

/// Which half at the far vertex joins the smallest other half at the near
/// vertex after a flip.
fn flip(pd: &PantsDecomposition, edge: &str, partner: Option<&str>) -> Result<PantsDecomposition> {
    let g = pd.dual();
    let h = edge;
    let Some(h2) = g.partner(h) else {
        return Err(Error::MoveNotApplicable(format!(
            "`{h}` is not an internal edge"
        )));
    };
    let (u, v) = (g.vertex_of(h).unwrap(), g.vertex_of(h2).unwrap());
    if u == v {
        return Err(Error::MoveNotApplicable(format!("`{h}` is a loop")));
    }
    let others = |x: &str, skip: &str| -> Vec<String> {
        let mut o: Vec<String> = g
            .half_edges_at(x)
            .unwrap()
            .iter()
            .filter(|y| *y != skip)
            .cloned()
            .collect();
        o.sort();
        o
    };
    let (ab, cd) = (others(u, h), others(v, h2));
    let (a, b) = (ab[0].clone(), ab[1].clone());
    let (moved, stays) = match partner {
        None => (cd[1].clone(), cd[0].clone()),
        Some(p) if p == cd[0] => (cd[0].clone(), cd[1].clone()),
        Some(p) if p == cd[1] => (cd[1].clone(), cd[0].clone()),
        Some(p) => {
            return Err(Error::MoveNotApplicable(format!(
                "`{p}` is not attached to the far end of `{h}`"
            )))
        }
    };
    let mut vertices = g.vertex_map().clone();
    vertices.insert(u.to_string(), vec![h.to_string(), a, moved]);
    vertices.insert(v.to_string(), vec![h2.to_string(), b, stays]);
    let dual = Graph::from_involution(vertices, g.involution())?;
    pd.with_graph(
        dual,
        MoveRecord::Whitehead {
            edge: h.to_string(),
        },
    )
}

/// The flip across the curve `edge` (either half of an internal edge
/// joining two distinct vertices). With `u: {edge, a, b}` and
/// `v: {edge', c, d}` (others sorted by label), the result is
/// `u: {edge, a, d}`, `v: {edge', b, c}`.
pub fn whitehead_move(pd: &PantsDecomposition, edge: &str) -> Result<PantsDecomposition> {
    flip(pd, edge, None)
}

/// The flip that moves the far half `partner` next to `a`.
pub fn whitehead_move_to(
    pd: &PantsDecomposition,
    edge: &str,
    partner: &str,
) -> Result<PantsDecomposition> {
    flip(pd, edge, Some(partner))
}

/// Replaces the curve `edge` of a one-holed torus by a transversal one.
/// The dual graph is unchanged; the move is recorded in the log.
pub fn s_move(pd: &PantsDecomposition, edge: &str) -> Result<PantsDecomposition> {
    let g = pd.dual();
    let Some(h2) = g.partner(edge) else {
        return Err(Error::MoveNotApplicable(format!(
            "`{edge}` is not an internal edge"
        )));
    };
    if g.vertex_of(edge) != g.vertex_of(h2) {
        return Err(Error::MoveNotApplicable(format!("`{edge}` is not a loop")));
    }
    pd.with_graph(
        g.clone(),
        MoveRecord::S {
            edge: edge.to_string(),
        },
    )
}
