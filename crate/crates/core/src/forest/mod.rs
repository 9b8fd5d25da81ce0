//! Aromatic forests: canonical representation, classification, symmetry and
//! enumeration.

mod enumerate;
mod symmetry;
pub(crate) mod text;

pub use enumerate::{enumerate, enumerate_up_to};
pub use symmetry::{automorphisms, automorphisms_bounded, sigma, DEFAULT_AUTOMORPHISM_BOUND};

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::Arc;
use text::{Component, Structure};

/// A directed graph in which every vertex has at most one outgoing edge.
///
/// Vertex ids are opaque; edges point from a vertex to its successor.
#[derive(Debug, Clone)]
pub struct DirectedGraph<V> {
    vertices: Vec<V>,
    succ: Vec<Option<usize>>,
}

impl<V: Eq + Hash + Clone + fmt::Debug> DirectedGraph<V> {
    /// Builds a graph, rejecting any vertex with two or more distinct outgoing edges.
    /// Repeated edges collapse, since the edge collection is a set.
    pub fn new(vertices: Vec<V>, edges: impl IntoIterator<Item = (V, V)>) -> Result<Self> {
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(format!("{v:?}")));
            }
        }
        let lookup = |v: &V| {
            index
                .get(v)
                .copied()
                .ok_or_else(|| Error::UnknownVertex(format!("{v:?}")))
        };
        let mut targets: Vec<Vec<usize>> = vec![Vec::new(); vertices.len()];
        for (tail, head) in edges {
            let (t, h) = (lookup(&tail)?, lookup(&head)?);
            if !targets[t].contains(&h) {
                targets[t].push(h);
            }
        }
        let mut succ = Vec::with_capacity(vertices.len());
        for (v, heads) in targets.iter().enumerate() {
            if heads.len() > 1 {
                return Err(Error::OutDegree {
                    vertex: format!("{:?}", vertices[v]),
                    degree: heads.len(),
                });
            }
            succ.push(heads.first().copied());
        }
        Ok(DirectedGraph { vertices, succ })
    }

    pub fn vertices(&self) -> &[V] {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (&V, &V)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .filter_map(|(v, s)| s.map(|h| (&self.vertices[v], &self.vertices[h])))
    }

    /// The isomorphism class of this graph.
    pub fn canonicalize(&self) -> AromaticForest {
        AromaticForest::from_successors(&self.succ)
    }
}

/// Canonicalizes a graph; see [`DirectedGraph::canonicalize`].
pub fn canonicalize<V: Eq + Hash + Clone + fmt::Debug>(graph: &DirectedGraph<V>) -> AromaticForest {
    graph.canonicalize()
}

struct Inner {
    text: Box<str>,
    succ: Box<[Option<usize>]>,
    roots: usize,
}

/// Canonical representative of an aromatic forest.
///
/// Vertices are numbered `0..size` in the order their `b` appears in the
/// canonical text. Equality, ordering and hashing go through the text.
#[derive(Clone)]
pub struct AromaticForest(Arc<Inner>);

impl AromaticForest {
    /// The empty forest, unit of concatenation.
    pub fn unit() -> Self {
        Self::from_canonical_parts("1".into(), Vec::new())
    }

    /// The single vertex `b`.
    pub fn node() -> Self {
        Self::from_canonical_parts("b".into(), vec![None])
    }

    /// The one-vertex self-loop `<b>`.
    pub fn loop1() -> Self {
        Self::from_canonical_parts("<b>".into(), vec![Some(0)])
    }

    pub fn parse(text: &str) -> Result<Self> {
        let succ = text::parse(text)?;
        let canonical = text::canonical_text(&succ);
        if canonical == text {
            Ok(Self::from_canonical_parts(canonical, succ))
        } else {
            let succ = text::parse(&canonical).expect("canonical text parses");
            Ok(Self::from_canonical_parts(canonical, succ))
        }
    }

    /// Canonicalizes an arbitrary labelled successor array.
    pub fn from_successors(succ: &[Option<usize>]) -> Self {
        let canonical = text::canonical_text(succ);
        let succ = text::parse(&canonical).expect("canonical text parses");
        Self::from_canonical_parts(canonical, succ)
    }

    fn from_canonical_parts(text: String, succ: Vec<Option<usize>>) -> Self {
        let roots = succ.iter().filter(|s| s.is_none()).count();
        AromaticForest(Arc::new(Inner {
            text: text.into_boxed_str(),
            succ: succ.into_boxed_slice(),
            roots,
        }))
    }

    pub fn text(&self) -> &str {
        &self.0.text
    }

    /// Canonical text; identical to [`Display`](fmt::Display).
    pub fn render(&self) -> String {
        self.0.text.to_string()
    }

    /// Number of vertices `|φ|`.
    pub fn size(&self) -> usize {
        self.0.succ.len()
    }

    pub fn root_count(&self) -> usize {
        self.0.roots
    }

    pub fn is_unit(&self) -> bool {
        self.size() == 0
    }

    /// Successor of each canonical vertex.
    pub fn successors(&self) -> &[Option<usize>] {
        &self.0.succ
    }

    pub fn roots(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .succ
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_none())
            .map(|(v, _)| v)
    }

    /// Edges `(tail, head)` of the canonical graph.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .succ
            .iter()
            .enumerate()
            .filter_map(|(v, s)| s.map(|h| (v, h)))
    }

    /// The canonical graph with `usize` vertex ids.
    pub fn canonical_form(&self) -> DirectedGraph<usize> {
        DirectedGraph {
            vertices: (0..self.size()).collect(),
            succ: self.0.succ.to_vec(),
        }
    }

    /// Connected components, in canonical order.
    pub fn components(&self) -> Vec<AromaticForest> {
        if self.is_unit() {
            return Vec::new();
        }
        self.text()
            .split(' ')
            .map(|c| AromaticForest::parse(c).expect("component of canonical text"))
            .collect()
    }

    /// Splits into the rootless part (all aromas) and the list of rooted trees.
    pub fn split_aromas(&self) -> (AromaticForest, Vec<AromaticForest>) {
        let (aromas, trees): (Vec<_>, Vec<_>) = self
            .components()
            .into_iter()
            .partition(|c| c.root_count() == 0);
        (AromaticForest::product(&aromas), trees)
    }

    pub fn class(&self) -> ForestClass {
        let components = Structure::new(self.successors()).components;
        let cycles = components
            .iter()
            .filter(|c| matches!(c, Component::Cycle(_)))
            .count();
        let roots = self.root_count();
        ForestClass {
            is_rootless: roots == 0,
            is_connected_rootless: roots == 0 && cycles == 1 && components.len() == 1,
            is_aromatic_tree: roots == 1,
            is_rooted_tree: roots == 1 && components.len() == 1,
            is_loopless_forest: cycles == 0,
        }
    }

    /// Disjoint union, re-canonicalized.
    pub fn concat(&self, other: &AromaticForest) -> AromaticForest {
        if self.is_unit() {
            return other.clone();
        }
        if other.is_unit() {
            return self.clone();
        }
        let offset = self.size();
        let succ: Vec<Option<usize>> = self
            .successors()
            .iter()
            .copied()
            .chain(other.successors().iter().map(|s| s.map(|h| h + offset)))
            .collect();
        AromaticForest::from_successors(&succ)
    }

    /// Concatenation of many forests.
    pub fn product<'a>(factors: impl IntoIterator<Item = &'a AromaticForest>) -> AromaticForest {
        let mut succ = Vec::new();
        for f in factors {
            let offset = succ.len();
            succ.extend(f.successors().iter().map(|s| s.map(|h| h + offset)));
        }
        AromaticForest::from_successors(&succ)
    }

    /// Removes the edge leaving canonical vertex `v`.
    pub fn delete_out_edge(&self, v: usize) -> Result<AromaticForest> {
        if v >= self.size() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                size: self.size(),
            });
        }
        if self.successors()[v].is_none() {
            return Err(Error::NotAnEdgeSource(v));
        }
        let mut succ = self.successors().to_vec();
        succ[v] = None;
        Ok(AromaticForest::from_successors(&succ))
    }

    /// Subgraph induced on the vertices with `keep[v]`; edges leaving the set are dropped.
    pub fn induced(&self, keep: &[bool]) -> AromaticForest {
        let mut relabel = vec![usize::MAX; self.size()];
        let mut next = 0;
        for v in 0..self.size() {
            if keep[v] {
                relabel[v] = next;
                next += 1;
            }
        }
        let succ: Vec<Option<usize>> = (0..self.size())
            .filter(|&v| keep[v])
            .map(|v| {
                self.successors()[v]
                    .filter(|&h| keep[h])
                    .map(|h| relabel[h])
            })
            .collect();
        AromaticForest::from_successors(&succ)
    }
}

impl PartialEq for AromaticForest {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.text == other.0.text
    }
}

impl Eq for AromaticForest {}

impl Hash for AromaticForest {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.text.hash(state)
    }
}

impl PartialOrd for AromaticForest {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AromaticForest {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.text.cmp(&other.0.text)
    }
}

impl fmt::Display for AromaticForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.text)
    }
}

impl fmt::Debug for AromaticForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AromaticForest({})", self.0.text)
    }
}

impl FromStr for AromaticForest {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AromaticForest::parse(s)
    }
}

/// Membership of a forest in the standard subsets of aromatic forests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ForestClass {
    /// No roots (`𝒜`).
    pub is_rootless: bool,
    /// A single aroma (`𝒜′`).
    pub is_connected_rootless: bool,
    /// Exactly one root (`𝒜𝒯`).
    pub is_aromatic_tree: bool,
    /// A single rooted tree (`𝒯`).
    pub is_rooted_tree: bool,
    /// No cycles (`ℱ`).
    pub is_loopless_forest: bool,
}

/// Selects a subset of aromatic forests for enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ForestFilter {
    /// All aromatic forests.
    All,
    /// Exactly one root.
    AromaticTrees,
    /// Rooted trees.
    RootedTrees,
    /// No roots.
    Rootless,
    /// Single aromas.
    ConnectedRootless,
    /// No cycles.
    Loopless,
}

impl ForestFilter {
    pub fn matches(self, class: &ForestClass) -> bool {
        match self {
            ForestFilter::All => true,
            ForestFilter::AromaticTrees => class.is_aromatic_tree,
            ForestFilter::RootedTrees => class.is_rooted_tree,
            ForestFilter::Rootless => class.is_rootless,
            ForestFilter::ConnectedRootless => class.is_connected_rootless,
            ForestFilter::Loopless => class.is_loopless_forest,
        }
    }
}

impl FromStr for ForestFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "AF" => ForestFilter::All,
            "AT" => ForestFilter::AromaticTrees,
            "T" => ForestFilter::RootedTrees,
            "A" => ForestFilter::Rootless,
            "A'" | "Ap" => ForestFilter::ConnectedRootless,
            "F" => ForestFilter::Loopless,
            other => return Err(Error::Invalid(format!("unknown forest class {other:?}"))),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> AromaticForest {
        s.parse().unwrap()
    }

    #[test]
    fn relabeling_does_not_change_the_class() {
        let g1 = DirectedGraph::new(vec![1, 2], [(1, 2)]).unwrap();
        let g2 = DirectedGraph::new(vec!["a", "b"], [("b", "a")]).unwrap();
        assert_eq!(g1.canonicalize().text(), "b[b]");
        assert_eq!(g2.canonicalize(), g1.canonicalize());
        let single = DirectedGraph::new(vec!['x'], []).unwrap();
        assert_eq!(single.canonicalize().text(), "b");
    }

    #[test]
    fn rejects_out_degree_two() {
        let err = DirectedGraph::new(vec![0, 1, 2], [(0, 1), (0, 2)]).unwrap_err();
        assert!(matches!(err, Error::OutDegree { degree: 2, .. }));
        assert!(DirectedGraph::new(vec![0, 1], [(0, 1), (0, 1)]).is_ok());
        assert!(matches!(
            DirectedGraph::new(vec![0], [(0, 5)]),
            Err(Error::UnknownVertex(_))
        ));
        assert!(matches!(
            DirectedGraph::new(vec![0, 0], []),
            Err(Error::DuplicateVertex(_))
        ));
    }

    #[test]
    fn three_cycle_any_order() {
        let g = DirectedGraph::new(vec![3, 1, 2], [(2, 3), (1, 2), (3, 1)]).unwrap();
        assert_eq!(g.canonicalize().text(), "<b,b,b>");
    }

    #[test]
    fn parse_render_roundtrip_on_examples() {
        for s in ["1", "b", "b[b,b]", "<b[b]>", "<b> b", "<b,b[b]> <b> b[b]"] {
            let phi = f(s);
            assert_eq!(phi.render(), s);
            assert_eq!(f(&phi.render()), phi);
        }
        assert_eq!(f("1").size(), 0);
        assert_eq!(f("<b[b]>").size(), 2);
        assert_eq!(f("<b[b]>").root_count(), 0);
    }

    #[test]
    fn classes() {
        let unit = f("1").class();
        assert!(unit.is_rootless && unit.is_loopless_forest && !unit.is_aromatic_tree);
        let t = f("b[b]").class();
        assert!(t.is_rooted_tree && t.is_aromatic_tree && t.is_loopless_forest);
        let at = f("<b> b").class();
        assert!(at.is_aromatic_tree && !at.is_rooted_tree && !at.is_loopless_forest);
        let aroma = f("<b,b>").class();
        assert!(aroma.is_connected_rootless && aroma.is_rootless);
        let two = f("<b> <b>").class();
        assert!(two.is_rootless && !two.is_connected_rootless);
    }

    #[test]
    fn concat_is_disjoint_union() {
        assert_eq!(f("b").concat(&f("1")), f("b"));
        assert_eq!(f("<b>").concat(&f("b")).text(), "<b> b");
        assert_eq!(f("b").concat(&f("b")).text(), "b b");
        assert_eq!(f("b[b]").concat(&f("<b>")), f("<b>").concat(&f("b[b]")));
    }

    #[test]
    fn delete_out_edge_examples() {
        assert_eq!(f("<b>").delete_out_edge(0).unwrap().text(), "b");
        assert_eq!(f("b[b]").delete_out_edge(1).unwrap().text(), "b b");
        let two = f("<b,b>");
        for v in 0..2 {
            let d = two.delete_out_edge(v).unwrap();
            assert_eq!(d.text(), "b[b]");
            assert_eq!(d.root_count(), two.root_count() + 1);
        }
        assert_eq!(f("b[b]").delete_out_edge(0), Err(Error::NotAnEdgeSource(0)));
        assert!(matches!(
            f("b").delete_out_edge(3),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn components_and_aroma_split() {
        let phi = f("<b,b> <b> b b[b]");
        assert_eq!(phi.components().len(), 4);
        let (gamma, trees) = phi.split_aromas();
        assert_eq!(gamma.text(), "<b,b> <b>");
        assert_eq!(
            trees.iter().map(|t| t.text()).collect::<Vec<_>>(),
            ["b", "b[b]"]
        );
        let (gamma, trees) = f("b").split_aromas();
        assert!(gamma.is_unit());
        assert_eq!(trees.len(), 1);
    }
}
