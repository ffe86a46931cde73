use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::graph::{contract_edges, cut_edges, CUT_PREFIX};
use super::{Corolla, Graph};
use crate::{Error, Result};

/// A leg of one corolla in a disjoint union: `(corolla index, leg label)`.
pub type Slot = (usize, String);

/// A morphism of the graph category: a graph `G` with explicit bijections
/// from a disjoint union of corollas onto the cut graph and onto the
/// contracted graph.
#[derive(Debug, Clone)]
pub struct GraphMorphism {
    graph: Graph,
    source: Vec<Corolla>,
    source_vertex: Vec<String>,
    source_ident: Vec<BTreeMap<String, String>>,
    target: Vec<Corolla>,
    target_vertex: Vec<String>,
    target_ident: Vec<BTreeMap<String, String>>,
}

/// Relabeling-invariant description of a morphism: two morphisms are equal
/// (as equivalence classes) iff their keys are equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MorphismKey {
    pub source: Vec<(String, BTreeSet<String>)>,
    pub target: Vec<(String, BTreeSet<String>)>,
    pub edges: BTreeSet<(Slot, Slot)>,
    pub legs: BTreeMap<Slot, Slot>,
    pub target_component: Vec<usize>,
}

impl GraphMorphism {
    /// Checks that the identifications are bijections compatible with
    /// attachment and with the connected components.
    pub fn new(
        graph: Graph,
        source: Vec<Corolla>,
        source_vertex: Vec<String>,
        source_ident: Vec<BTreeMap<String, String>>,
        target: Vec<Corolla>,
        target_vertex: Vec<String>,
        target_ident: Vec<BTreeMap<String, String>>,
    ) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidGraph(m));
        if source.len() != graph.num_vertices()
            || source_vertex.len() != source.len()
            || source_ident.len() != source.len()
        {
            return bad("source corollas do not match the vertices".into());
        }
        let distinct: BTreeSet<&str> = source_vertex.iter().map(String::as_str).collect();
        if distinct.len() != source_vertex.len() {
            return bad("two source corollas name the same vertex".into());
        }
        for (i, c) in source.iter().enumerate() {
            let v = &source_vertex[i];
            let Some(at) = graph.half_edges_at(v) else {
                return bad(format!("source corolla {i} names unknown vertex `{v}`"));
            };
            check_bijection(c, &source_ident[i], at.iter().map(String::as_str))
                .map_err(|m| Error::InvalidGraph(format!("source corolla {i}: {m}")))?;
        }

        let comps = graph.components();
        if target.len() != comps.len()
            || target_vertex.len() != target.len()
            || target_ident.len() != target.len()
        {
            return bad("target corollas do not match the components".into());
        }
        let comp_of: BTreeMap<&str, usize> = comps
            .iter()
            .enumerate()
            .flat_map(|(k, c)| c.iter().map(move |v| (*v, k)))
            .collect();
        let mut hit = BTreeSet::new();
        for (j, c) in target.iter().enumerate() {
            let Some(&k) = comp_of.get(target_vertex[j].as_str()) else {
                return bad(format!("target corolla {j} names unknown vertex"));
            };
            if !hit.insert(k) {
                return bad("two target corollas name the same component".into());
            }
            let legs = comps[k]
                .iter()
                .flat_map(|v| graph.half_edges_at(v).unwrap().iter())
                .filter(|h| graph.is_leg(h))
                .map(String::as_str);
            check_bijection(c, &target_ident[j], legs)
                .map_err(|m| Error::InvalidGraph(format!("target corolla {j}: {m}")))?;
        }
        Ok(GraphMorphism {
            graph,
            source,
            source_vertex,
            source_ident,
            target,
            target_vertex,
            target_ident,
        })
    }

    /// The morphism `cut_edges(g) -> contract_edges(g)` carried by `g`
    /// with its natural identifications.
    pub fn from_graph(graph: Graph) -> Result<Self> {
        let source = cut_edges(&graph)?;
        let source_vertex: Vec<String> = graph.vertices().map(ToString::to_string).collect();
        let source_ident = source
            .iter()
            .map(|c| {
                c.legs()
                    .iter()
                    .map(|l| {
                        let h = l
                            .strip_prefix(CUT_PREFIX)
                            .filter(|h| graph.partner(h).is_some());
                        (l.clone(), h.unwrap_or(l).to_string())
                    })
                    .collect()
            })
            .collect();
        let target = contract_edges(&graph);
        let target_vertex = target.iter().map(|c| c.id().to_string()).collect();
        let target_ident = target
            .iter()
            .map(|c| c.legs().iter().map(|l| (l.clone(), l.clone())).collect())
            .collect();
        GraphMorphism::new(
            graph,
            source,
            source_vertex,
            source_ident,
            target,
            target_vertex,
            target_ident,
        )
    }

    /// Identity on a disjoint union of corollas. Vertex `i` is named `c<i>`
    /// and the leg `l` of corolla `i` is the half-edge `c<i>.<l>`.
    pub fn identity(corollas: &[Corolla]) -> Self {
        let vertex = |i: usize| format!("c{i}");
        let half = |i: usize, l: &str| format!("c{i}.{l}");
        let graph = Graph::new(
            corollas
                .iter()
                .enumerate()
                .map(|(i, c)| (vertex(i), c.legs().iter().map(|l| half(i, l)).collect())),
            Vec::<(String, String)>::new(),
        )
        .expect("corolla legs are distinct");
        let ident: Vec<BTreeMap<String, String>> = corollas
            .iter()
            .enumerate()
            .map(|(i, c)| c.legs().iter().map(|l| (l.clone(), half(i, l))).collect())
            .collect();
        let vertices: Vec<String> = (0..corollas.len()).map(vertex).collect();
        GraphMorphism {
            graph,
            source: corollas.to_vec(),
            source_vertex: vertices.clone(),
            source_ident: ident.clone(),
            target: corollas.to_vec(),
            target_vertex: vertices,
            target_ident: ident,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn source(&self) -> &[Corolla] {
        &self.source
    }

    pub fn target(&self) -> &[Corolla] {
        &self.target
    }

    pub fn source_vertex(&self, i: usize) -> &str {
        &self.source_vertex[i]
    }

    pub fn source_half_edge(&self, i: usize, leg: &str) -> Option<&str> {
        self.source_ident.get(i)?.get(leg).map(String::as_str)
    }

    pub fn target_half_edge(&self, j: usize, leg: &str) -> Option<&str> {
        self.target_ident.get(j)?.get(leg).map(String::as_str)
    }

    pub fn key(&self) -> MorphismKey {
        let mut slot_of: BTreeMap<&str, Slot> = BTreeMap::new();
        let mut vertex_index: BTreeMap<&str, usize> = BTreeMap::new();
        for (i, m) in self.source_ident.iter().enumerate() {
            vertex_index.insert(&self.source_vertex[i], i);
            for (l, h) in m {
                slot_of.insert(h, (i, l.clone()));
            }
        }
        let edges = self
            .graph
            .internal_edges()
            .into_iter()
            .map(|(a, b)| {
                let (sa, sb) = (slot_of[a].clone(), slot_of[b].clone());
                if sa <= sb {
                    (sa, sb)
                } else {
                    (sb, sa)
                }
            })
            .collect();
        let legs = self
            .target_ident
            .iter()
            .enumerate()
            .flat_map(|(j, m)| m.iter().map(move |(l, h)| (h, (j, l.clone()))))
            .map(|(h, t)| (slot_of[h.as_str()].clone(), t))
            .collect();
        let comps = self.graph.components();
        let target_component = self
            .target_vertex
            .iter()
            .map(|v| {
                let comp = comps.iter().find(|c| c.contains(&v.as_str())).unwrap();
                comp.iter().map(|u| vertex_index[u]).min().unwrap()
            })
            .collect();
        let describe = |cs: &[Corolla]| {
            cs.iter()
                .map(|c| (c.id().to_string(), c.legs().iter().cloned().collect()))
                .collect()
        };
        MorphismKey {
            source: describe(&self.source),
            target: describe(&self.target),
            edges,
            legs,
            target_component,
        }
    }
}

impl PartialEq for GraphMorphism {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

fn check_bijection<'a>(
    c: &Corolla,
    ident: &BTreeMap<String, String>,
    onto: impl Iterator<Item = &'a str>,
) -> core::result::Result<(), String> {
    if ident.keys().map(String::as_str).collect::<BTreeSet<_>>() != c.leg_set() {
        return Err("identification domain differs from the corolla legs".into());
    }
    let image: BTreeSet<&str> = ident.values().map(String::as_str).collect();
    if image.len() != ident.len() {
        return Err("identification is not injective".into());
    }
    let onto: BTreeSet<&str> = onto.collect();
    if image != onto {
        return Err("identification is not onto the attached half-edges".into());
    }
    Ok(())
}

/// Composition by vertex substitution: the component of `inner` sitting
/// over target corolla `j` replaces vertex `j` of `outer`.
///
/// Requires `inner.target() == outer.source()` corolla by corolla. The
/// result keeps the half-edges of `inner`, its source and identification,
/// and the target of `outer`.
pub fn compose(outer: &GraphMorphism, inner: &GraphMorphism) -> Result<GraphMorphism> {
    if inner.target.len() != outer.source.len() {
        return Err(Error::CompositionMismatch(format!(
            "inner has {} target corollas, outer has {} source corollas",
            inner.target.len(),
            outer.source.len()
        )));
    }
    for (j, (t, s)) in inner.target.iter().zip(&outer.source).enumerate() {
        if t != s {
            return Err(Error::CompositionMismatch(format!(
                "corolla {j}: `{}` vs `{}`",
                t.id(),
                s.id()
            )));
        }
    }

    // outer half-edge -> inner leg
    let mut phi: BTreeMap<&str, &str> = BTreeMap::new();
    let mut inner_component: BTreeMap<&str, &str> = BTreeMap::new();
    for (j, c) in outer.source.iter().enumerate() {
        for l in c.legs() {
            phi.insert(&outer.source_ident[j][l], &inner.target_ident[j][l]);
        }
        inner_component.insert(&outer.source_vertex[j], &inner.target_vertex[j]);
    }

    let mut involution: BTreeMap<String, String> = inner
        .graph
        .involution()
        .iter()
        .filter(|(a, b)| a != b)
        .map(|(a, b)| (a.clone(), b.clone()))
        .collect();
    for (a, b) in outer.graph.internal_edges() {
        let (x, y) = (phi[a], phi[b]);
        involution.insert(x.into(), y.into());
        involution.insert(y.into(), x.into());
    }
    let graph = Graph::from_involution(inner.graph.vertex_map().clone(), &involution)?;

    let target_ident = outer
        .target_ident
        .iter()
        .map(|m| {
            m.iter()
                .map(|(l, h)| (l.clone(), phi[h.as_str()].to_string()))
                .collect()
        })
        .collect();
    let target_vertex = outer
        .target_vertex
        .iter()
        .map(|v| inner_component[v.as_str()].to_string())
        .collect();
    GraphMorphism::new(
        graph,
        inner.source.clone(),
        inner.source_vertex.clone(),
        inner.source_ident.clone(),
        outer.target.clone(),
        target_vertex,
        target_ident,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_operad::genus;
    use alloc::vec;

    fn edge_tree(tag: &str) -> Graph {
        // u: a b x, v: y c d; edge x-y
        let h = |s: &str| format!("{tag}{s}");
        Graph::new(
            [
                (h("u"), vec![h("a"), h("b"), h("x")]),
                (h("v"), vec![h("y"), h("c"), h("d")]),
            ],
            [(h("x"), h("y"))],
        )
        .unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let m = GraphMorphism::from_graph(edge_tree("")).unwrap();
        let id_src = GraphMorphism::identity(m.source());
        let id_tgt = GraphMorphism::identity(m.target());
        assert_eq!(compose(&m, &id_src).unwrap(), m);
        assert_eq!(compose(&id_tgt, &m).unwrap(), m);
    }

    #[test]
    fn substituting_a_tree_into_a_tree_vertex() {
        let outer = GraphMorphism::from_graph(edge_tree("")).unwrap();
        // replace vertex u (legs a, b, h:x) by a one-edge tree with those legs
        let piece = Graph::new(
            [("p", vec!["a", "s"]), ("q", vec!["t", "b", "h:x"])],
            [("s", "t")],
        )
        .unwrap();
        let piece_v = Corolla::new("v", ["y'", "c", "d"]).unwrap();
        let mut inner_graph = piece.disjoint_union(&Graph::corolla(&piece_v)).unwrap();
        inner_graph = inner_graph
            .relabel(
                |v| v.to_string(),
                |h| if h == "y'" { "h:y".into() } else { h.into() },
            )
            .unwrap();
        let inner_src = cut_edges(&inner_graph).unwrap();
        let src_ident: Vec<BTreeMap<String, String>> = inner_src
            .iter()
            .map(|c| {
                c.legs()
                    .iter()
                    .map(|l| {
                        let h = l
                            .strip_prefix(CUT_PREFIX)
                            .filter(|h| inner_graph.partner(h).is_some());
                        (l.clone(), h.unwrap_or(l).to_string())
                    })
                    .collect()
            })
            .collect();
        let tgt_ident = outer
            .source()
            .iter()
            .map(|c| c.legs().iter().map(|l| (l.clone(), l.clone())).collect())
            .collect();
        let inner = GraphMorphism::new(
            inner_graph.clone(),
            inner_src,
            inner_graph.vertices().map(ToString::to_string).collect(),
            src_ident,
            outer.source().to_vec(),
            vec!["p".into(), "v".into()],
            tgt_ident,
        )
        .unwrap();
        let composite = compose(&outer, &inner).unwrap();
        let g = composite.graph();
        assert_eq!(g.num_vertices(), 3);
        assert_eq!(g.num_internal_edges(), 2);
        assert_eq!(genus(g), vec![0]);
        let pi = contract_edges(g);
        assert_eq!(pi.len(), 1);
        assert_eq!(pi[0].arity(), outer.target()[0].arity());
        let expected = Graph::new(
            [
                ("p", vec!["a", "s"]),
                ("q", vec!["t", "b", "h:x"]),
                ("v", vec!["h:y", "c", "d"]),
            ],
            [("s", "t"), ("h:x", "h:y")],
        )
        .unwrap();
        assert!(g.is_isomorphic(&expected).unwrap());
    }

    #[test]
    fn mismatched_boundaries_are_rejected() {
        let a = GraphMorphism::from_graph(edge_tree("")).unwrap();
        let b = GraphMorphism::from_graph(edge_tree("z")).unwrap();
        assert!(matches!(
            compose(&a, &b),
            Err(Error::CompositionMismatch(_))
        ));
    }

    #[test]
    fn invalid_identifications_are_rejected() {
        let g = edge_tree("");
        let c = Corolla::new("u", ["a", "b", "h:x"]).unwrap();
        let d = Corolla::new("v", ["h:y", "c", "d"]).unwrap();
        let mut wrong: BTreeMap<String, String> = BTreeMap::new();
        wrong.insert("a".into(), "a".into());
        wrong.insert("b".into(), "b".into());
        wrong.insert("h:x".into(), "c".into());
        let right_v: BTreeMap<String, String> = [("h:y", "y"), ("c", "c"), ("d", "d")]
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        let t = contract_edges(&g);
        let t_ident = vec![t[0].legs().iter().map(|l| (l.clone(), l.clone())).collect()];
        let r = GraphMorphism::new(
            g,
            vec![c, d],
            vec!["u".into(), "v".into()],
            vec![wrong, right_v],
            t,
            vec!["u".into()],
            t_ident,
        );
        assert!(matches!(r, Err(Error::InvalidGraph(_))));
    }
}
