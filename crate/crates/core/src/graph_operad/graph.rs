use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::{Error, Result};

/// Prefix of the leg label that an internal half-edge `x` receives when the
/// edge is cut: `h:x`.
pub const CUT_PREFIX: &str = "h:";

/// A one-vertex graph without internal edges.
///
/// Legs keep their presentation order, but equality ignores it.
#[derive(Debug, Clone, Eq)]
pub struct Corolla {
    id: String,
    legs: Vec<String>,
}

impl Corolla {
    pub fn new<I, S>(id: impl Into<String>, legs: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let legs: Vec<String> = legs.into_iter().map(Into::into).collect();
        let mut seen = BTreeSet::new();
        for leg in &legs {
            if !seen.insert(leg.as_str()) {
                return Err(Error::DuplicateLeg(leg.clone()));
            }
        }
        Ok(Corolla {
            id: id.into(),
            legs,
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn legs(&self) -> &[String] {
        &self.legs
    }

    pub fn arity(&self) -> usize {
        self.legs.len()
    }

    pub(crate) fn leg_set(&self) -> BTreeSet<&str> {
        self.legs.iter().map(String::as_str).collect()
    }
}

impl PartialEq for Corolla {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id && self.leg_set() == other.leg_set()
    }
}

/// A finite graph given by half-edges, their attaching vertices and an
/// involution on half-edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    // vertex -> attached half-edges, in presentation order
    vertices: BTreeMap<String, Vec<String>>,
    // half-edge -> partner; legs map to themselves
    involution: BTreeMap<String, String>,
    attach: BTreeMap<String, String>,
}

impl Graph {
    /// Builds a graph from vertices with their half-edges and a list of
    /// internal edges. Half-edges not named in any edge are legs.
    pub fn new<V, H, I, E>(vertices: I, edges: E) -> Result<Self>
    where
        V: Into<String>,
        H: Into<String>,
        I: IntoIterator<Item = (V, Vec<H>)>,
        E: IntoIterator<Item = (H, H)>,
    {
        let mut vmap: BTreeMap<String, Vec<String>> = BTreeMap::new();
        let mut attach = BTreeMap::new();
        for (v, hs) in vertices {
            let v: String = v.into();
            if vmap.contains_key(&v) {
                return Err(Error::InvalidGraph(format!("duplicate vertex `{v}`")));
            }
            let hs: Vec<String> = hs.into_iter().map(Into::into).collect();
            for h in &hs {
                if attach.insert(h.clone(), v.clone()).is_some() {
                    return Err(Error::InvalidGraph(format!(
                        "half-edge `{h}` is attached to more than one vertex"
                    )));
                }
            }
            vmap.insert(v, hs);
        }
        let mut involution: BTreeMap<String, String> =
            attach.keys().map(|h| (h.clone(), h.clone())).collect();
        for (a, b) in edges {
            let (a, b): (String, String) = (a.into(), b.into());
            if a == b {
                return Err(Error::InvalidGraph(format!(
                    "edge joins half-edge `{a}` to itself"
                )));
            }
            for h in [&a, &b] {
                match involution.get(h) {
                    None => {
                        return Err(Error::InvalidGraph(format!(
                            "edge names unknown half-edge `{h}`"
                        )))
                    }
                    Some(p) if p != h => {
                        return Err(Error::InvalidGraph(format!(
                            "half-edge `{h}` belongs to two edges"
                        )))
                    }
                    _ => {}
                }
            }
            involution.insert(a.clone(), b.clone());
            involution.insert(b, a);
        }
        Ok(Graph {
            vertices: vmap,
            involution,
            attach,
        })
    }

    /// Builds a graph from an explicit involution map. Half-edges missing
    /// from the map are legs.
    pub fn from_involution(
        vertices: BTreeMap<String, Vec<String>>,
        involution: &BTreeMap<String, String>,
    ) -> Result<Self> {
        for (a, b) in involution {
            if involution.get(b) != Some(a) {
                return Err(Error::InvalidGraph(format!(
                    "involution is not self-inverse at `{a}`"
                )));
            }
        }
        let edges: Vec<(String, String)> = involution
            .iter()
            .filter(|(a, b)| a < b)
            .map(|(a, b)| (a.clone(), b.clone()))
            .collect();
        Graph::new(vertices, edges)
    }

    /// The graph of a single corolla, with the corolla id as vertex.
    pub fn corolla(c: &Corolla) -> Self {
        let mut vertices = BTreeMap::new();
        vertices.insert(c.id.clone(), c.legs.clone());
        let involution = c.legs.iter().map(|l| (l.clone(), l.clone())).collect();
        let attach = c.legs.iter().map(|l| (l.clone(), c.id.clone())).collect();
        Graph {
            vertices,
            involution,
            attach,
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = &str> {
        self.vertices.keys().map(String::as_str)
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn half_edges(&self) -> impl Iterator<Item = &str> {
        self.involution.keys().map(String::as_str)
    }

    pub fn num_half_edges(&self) -> usize {
        self.involution.len()
    }

    pub fn half_edges_at(&self, v: &str) -> Option<&[String]> {
        self.vertices.get(v).map(Vec::as_slice)
    }

    pub fn vertex_of(&self, h: &str) -> Option<&str> {
        self.attach.get(h).map(String::as_str)
    }

    /// The other half of the edge containing `h`, or `None` for a leg.
    pub fn partner(&self, h: &str) -> Option<&str> {
        self.involution
            .get(h)
            .filter(|p| p.as_str() != h)
            .map(String::as_str)
    }

    pub fn is_leg(&self, h: &str) -> bool {
        self.involution.get(h).is_some_and(|p| p == h)
    }

    pub fn legs(&self) -> impl Iterator<Item = &str> {
        self.involution
            .iter()
            .filter(|(a, b)| a == b)
            .map(|(a, _)| a.as_str())
    }

    pub fn num_legs(&self) -> usize {
        self.legs().count()
    }

    /// Internal edges as `(smaller, larger)` half-edge pairs, sorted.
    pub fn internal_edges(&self) -> Vec<(&str, &str)> {
        self.involution
            .iter()
            .filter(|(a, b)| a < b)
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect()
    }

    pub fn num_internal_edges(&self) -> usize {
        (self.num_half_edges() - self.num_legs()) / 2
    }

    pub fn degree(&self, v: &str) -> usize {
        self.vertices.get(v).map_or(0, Vec::len)
    }

    pub fn involution(&self) -> &BTreeMap<String, String> {
        &self.involution
    }

    pub fn vertex_map(&self) -> &BTreeMap<String, Vec<String>> {
        &self.vertices
    }

    /// Connected components, each a sorted vertex list; components are
    /// ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Vec<&str>> {
        let names: Vec<&str> = self.vertices().collect();
        let index: BTreeMap<&str, usize> = names.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut parent: Vec<usize> = (0..names.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (a, b) in self.internal_edges() {
            let ra = find(&mut parent, index[self.attach[a].as_str()]);
            let rb = find(&mut parent, index[self.attach[b].as_str()]);
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut groups: BTreeMap<usize, Vec<&str>> = BTreeMap::new();
        for (i, v) in names.iter().enumerate() {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push(v);
        }
        groups.into_values().collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Disjoint union; vertex and half-edge names must not collide.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut vertices = self.vertices.clone();
        for (v, hs) in &other.vertices {
            if vertices.insert(v.clone(), hs.clone()).is_some() {
                return Err(Error::InvalidGraph(format!("vertex `{v}` in both graphs")));
            }
        }
        let mut involution = self.involution.clone();
        for (a, b) in &other.involution {
            if involution.insert(a.clone(), b.clone()).is_some() {
                return Err(Error::InvalidGraph(format!(
                    "half-edge `{a}` in both graphs"
                )));
            }
        }
        let mut attach = self.attach.clone();
        attach.extend(other.attach.iter().map(|(a, b)| (a.clone(), b.clone())));
        Ok(Graph {
            vertices,
            involution,
            attach,
        })
    }

    /// Renames vertices and half-edges; the renaming must be injective.
    pub fn relabel(
        &self,
        mut vertex: impl FnMut(&str) -> String,
        mut half_edge: impl FnMut(&str) -> String,
    ) -> Result<Graph> {
        let vertices: Vec<(String, Vec<String>)> = self
            .vertices
            .iter()
            .map(|(v, hs)| (vertex(v), hs.iter().map(|h| half_edge(h)).collect()))
            .collect();
        let edges: Vec<(String, String)> = self
            .internal_edges()
            .into_iter()
            .map(|(a, b)| (half_edge(a), half_edge(b)))
            .collect();
        Graph::new(vertices, edges)
    }
}

/// Cuts every internal edge: one corolla per vertex, in vertex order. The
/// half `x` of a cut edge becomes the leg `h:x`; legs keep their labels.
pub fn cut_edges(g: &Graph) -> Result<Vec<Corolla>> {
    g.vertices
        .iter()
        .map(|(v, hs)| {
            let legs = hs.iter().map(|h| {
                if g.is_leg(h) {
                    h.clone()
                } else {
                    format!("{CUT_PREFIX}{h}")
                }
            });
            Corolla::new(v.clone(), legs).map_err(|e| match e {
                Error::DuplicateLeg(l) => {
                    Error::InvalidGraph(format!("cut label `{l}` collides with a leg"))
                }
                e => e,
            })
        })
        .collect()
}

/// Contracts every internal edge: one corolla per connected component,
/// named after the component's smallest vertex, carrying the component's
/// legs.
pub fn contract_edges(g: &Graph) -> Vec<Corolla> {
    g.components()
        .into_iter()
        .map(|comp| {
            let legs: Vec<String> = comp
                .iter()
                .flat_map(|v| g.vertices[*v].iter())
                .filter(|h| g.is_leg(h))
                .cloned()
                .collect();
            Corolla {
                id: comp[0].to_string(),
                legs,
            }
        })
        .collect()
}

/// First Betti number `E - V + 1` of each connected component, in the
/// order of [`Graph::components`].
pub fn genus(g: &Graph) -> Vec<u64> {
    g.components()
        .into_iter()
        .map(|comp| {
            let verts: BTreeSet<&str> = comp.iter().copied().collect();
            let edges = g
                .internal_edges()
                .into_iter()
                .filter(|(a, _)| verts.contains(g.attach[*a].as_str()))
                .count();
            (edges + 1 - verts.len()) as u64
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn two_tripods() -> Graph {
        Graph::new(
            [("u", vec!["a", "b", "x"]), ("v", vec!["y", "c", "d"])],
            [("x", "y")],
        )
        .unwrap()
    }

    fn loop_with_leg() -> Graph {
        Graph::new([("v", vec!["p", "q", "l"])], [("p", "q")]).unwrap()
    }

    pub(crate) fn theta() -> Graph {
        Graph::new(
            [("u", vec!["a1", "b1", "c1"]), ("v", vec!["a2", "b2", "c2"])],
            [("a1", "a2"), ("b1", "b2"), ("c1", "c2")],
        )
        .unwrap()
    }

    #[test]
    fn corolla_construction() {
        let c = Corolla::new("t", ["a", "b", "c"]).unwrap();
        assert_eq!(c.arity(), 3);
        assert_eq!(Corolla::new("t", Vec::<String>::new()).unwrap().arity(), 0);
        assert_eq!(
            Corolla::new("t", ["a", "a"]),
            Err(Error::DuplicateLeg("a".into()))
        );
        assert_eq!(c, Corolla::new("t", ["c", "a", "b"]).unwrap());
    }

    #[test]
    fn graph_validation() {
        assert!(Graph::new(
            [("u", vec!["a"]), ("v", vec!["a"])],
            Vec::<(&str, &str)>::new()
        )
        .is_err());
        assert!(Graph::new([("u", vec!["a", "b"])], [("a", "z")]).is_err());
        assert!(Graph::new([("u", vec!["a", "b", "c"])], [("a", "b"), ("b", "c")]).is_err());
        assert!(Graph::new([("u", vec!["a"])], [("a", "a")]).is_err());
        let mut inv = BTreeMap::new();
        inv.insert("a".to_string(), "b".to_string());
        let mut vs = BTreeMap::new();
        vs.insert("u".to_string(), vec!["a".to_string(), "b".to_string()]);
        assert!(Graph::from_involution(vs.clone(), &inv).is_err());
        inv.insert("b".to_string(), "a".to_string());
        assert_eq!(
            Graph::from_involution(vs, &inv)
                .unwrap()
                .num_internal_edges(),
            1
        );
    }

    #[test]
    fn cutting() {
        let cut = cut_edges(&two_tripods()).unwrap();
        assert_eq!(cut.len(), 2);
        assert!(cut.iter().all(|c| c.arity() == 3));
        assert_eq!(cut[0].legs(), ["a", "b", "h:x"]);

        let cut = cut_edges(&loop_with_leg()).unwrap();
        assert_eq!(cut.len(), 1);
        assert_eq!(cut[0].arity(), 3);

        let c = Corolla::new("t", ["c", "a", "b"]).unwrap();
        assert_eq!(cut_edges(&Graph::corolla(&c)).unwrap(), vec![c]);
    }

    #[test]
    fn cut_label_collision_is_reported() {
        let g = Graph::new([("u", vec!["x", "h:x"]), ("v", vec!["y"])], [("x", "y")]).unwrap();
        assert!(matches!(cut_edges(&g), Err(Error::InvalidGraph(_))));
    }

    #[test]
    fn contracting() {
        let pi = contract_edges(&two_tripods());
        assert_eq!(pi.len(), 1);
        assert_eq!(pi[0].arity(), 4);

        let pi = contract_edges(&loop_with_leg());
        assert_eq!(pi.len(), 1);
        assert_eq!(pi[0].legs(), ["l"]);

        let a = Corolla::new("a", ["1", "2"]).unwrap();
        let b = Corolla::new("b", ["3"]).unwrap();
        let g = Graph::corolla(&a)
            .disjoint_union(&Graph::corolla(&b))
            .unwrap();
        assert_eq!(contract_edges(&g), vec![a, b]);
    }

    #[test]
    fn genus_counts() {
        assert_eq!(genus(&theta()), vec![2]);
        assert_eq!(genus(&loop_with_leg()), vec![1]);
        assert_eq!(genus(&two_tripods()), vec![0]);
        let u = theta()
            .disjoint_union(
                &loop_with_leg()
                    .relabel(|v| format!("{v}'"), |h| format!("{h}'"))
                    .unwrap(),
            )
            .unwrap();
        assert_eq!(genus(&u), vec![2, 1]);
    }
}
