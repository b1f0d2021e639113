//! Finite simple graphs on the vertex set `1..=n`.
//!
//! A [`Graph`] is stored as one neighbour bitmask per vertex, which keeps the
//! predicates used by the family enumeration (connectivity, chordality, the
//! edge-distance condition) cheap enough to run over every labelled subgraph
//! of `K_7`. The *support* of a graph is the set of endpoints of its edges;
//! connectivity and elimination orderings are judged on the support only, so
//! ambient vertices without edges never count as extra components.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};

pub type Vertex = usize;

/// Largest ambient vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 32;

/// Default bound on `|support|` for [`Graph::canonical_form`].
pub const DEFAULT_CANONICAL_BOUND: usize = 8;

/// Hard ceiling for canonical labelling; the packed edge code is a `u64`.
pub const CANONICAL_HARD_LIMIT: usize = 11;

/// An unordered pair `{i, j}` with `i != j`, stored with `lo < hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    lo: Vertex,
    hi: Vertex,
}

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Result<Self> {
        if a == b {
            return input(format!("loop {a}-{b} is not an edge"));
        }
        if a == 0 || b == 0 {
            return input("vertices are labelled from 1");
        }
        Ok(Edge {
            lo: a.min(b),
            hi: a.max(b),
        })
    }

    pub fn lo(&self) -> Vertex {
        self.lo
    }

    pub fn hi(&self) -> Vertex {
        self.hi
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.lo, self.hi)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.lo == v || self.hi == v
    }

    pub fn is_disjoint(&self, other: &Edge) -> bool {
        !self.contains(other.lo) && !self.contains(other.hi)
    }

    /// The endpoint that is not `v`, if `v` is an endpoint.
    pub fn other(&self, v: Vertex) -> Option<Vertex> {
        if v == self.lo {
            Some(self.hi)
        } else if v == self.hi {
            Some(self.lo)
        } else {
            None
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

/// Parses `i-j` (order-insensitive, 1-based).
impl FromStr for Edge {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .trim()
            .split_once('-')
            .ok_or_else(|| Error::Input(format!("edge `{s}` is not of the form i-j")))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<Vertex>()
                .map_err(|_| Error::Input(format!("edge `{s}`: `{t}` is not a vertex number")))
        };
        Edge::new(parse(a)?, parse(b)?)
    }
}

impl Serialize for Edge {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.lo, self.hi].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [a, b] = <[Vertex; 2]>::deserialize(d)?;
        Edge::new(a, b).map_err(serde::de::Error::custom)
    }
}

#[inline]
fn bit(v: Vertex) -> u32 {
    1u32 << (v - 1)
}

fn vertices_of(mask: u32) -> impl Iterator<Item = Vertex> {
    (0..32).filter(move |b| mask & (1 << b) != 0).map(|b| b + 1)
}

/// A simple graph whose vertices are drawn from `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    n: usize,
    adj: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<Edge>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(g: GraphJson) -> Result<Self> {
        Graph::from_edges(g.n, g.edges)
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson {
            n: g.n,
            edges: g.edges(),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, {{", self.n)?;
        for (k, e) in self.edges().iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("})")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("{}");
        }
        let parts: Vec<String> = self.edges().iter().map(Edge::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Graph {
    /// The edgeless graph on `1..=n`.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return input(format!(
                "ambient vertex count must be in 1..={MAX_VERTICES}, got {n}"
            ));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for a in 1..=n {
            for b in a + 1..=n {
                g.insert(Edge { lo: a, hi: b });
            }
        }
        Ok(g)
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<EdgeSpec>,
    {
        let mut g = Graph::new(n)?;
        for spec in edges {
            let e = spec.into().resolve()?;
            g.check_edge(&e)?;
            g.insert(e);
        }
        Ok(g)
    }

    /// Convenience for tests and examples: `Graph::from_pairs(4, &[(1, 2), (2, 3)])`.
    pub fn from_pairs(n: usize, pairs: &[(Vertex, Vertex)]) -> Result<Self> {
        Graph::from_edges(n, pairs.iter().copied())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v == 0 || v > self.n {
            return input(format!("vertex {v} is outside 1..={}", self.n));
        }
        Ok(())
    }

    fn check_edge(&self, e: &Edge) -> Result<()> {
        self.check_vertex(e.lo)?;
        self.check_vertex(e.hi)
    }

    pub(crate) fn insert(&mut self, e: Edge) {
        self.adj[e.lo - 1] |= bit(e.hi);
        self.adj[e.hi - 1] |= bit(e.lo);
    }

    #[inline]
    pub(crate) fn nbr_mask(&self, v: Vertex) -> u32 {
        self.adj[v - 1]
    }

    pub(crate) fn support_mask(&self) -> u32 {
        self.adj
            .iter()
            .enumerate()
            .filter(|(_, m)| **m != 0)
            .fold(0, |acc, (k, _)| acc | (1 << k))
    }

    pub fn is_empty(&self) -> bool {
        self.adj.iter().all(|m| *m == 0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn has_edge(&self, e: &Edge) -> bool {
        e.hi <= self.n && self.adj[e.lo - 1] & bit(e.hi) != 0
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for lo in 1..=self.n {
            for hi in vertices_of(self.adj[lo - 1] & !((bit(lo) << 1) - 1)) {
                out.push(Edge { lo, hi });
            }
        }
        out
    }

    /// Endpoints of edges, ascending.
    pub fn support(&self) -> Vec<Vertex> {
        vertices_of(self.support_mask()).collect()
    }

    pub fn in_support(&self, v: Vertex) -> bool {
        v >= 1 && v <= self.n && self.adj[v - 1] != 0
    }

    /// `N_G(v)`, ascending.
    pub fn neighbors(&self, v: Vertex) -> Result<Vec<Vertex>> {
        self.check_vertex(v)?;
        Ok(vertices_of(self.adj[v - 1]).collect())
    }

    /// The graph with edge set `E(G) \ {e}`; endpoints left without edges
    /// drop out of the support.
    pub fn remove_edge(&self, e: &Edge) -> Result<Graph> {
        if !self.has_edge(e) {
            return input(format!("edge {e} is not in {self}"));
        }
        let mut g = self.clone();
        g.adj[e.lo - 1] &= !bit(e.hi);
        g.adj[e.hi - 1] &= !bit(e.lo);
        Ok(g)
    }

    /// Connectivity of the support; the empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        let support = self.support_mask();
        if support == 0 {
            return true;
        }
        let start = support & support.wrapping_neg();
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0;
            for v in vertices_of(frontier) {
                next |= self.adj[v - 1];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == support
    }

    /// True when `mask` spans a clique.
    fn is_clique(&self, mask: u32) -> bool {
        vertices_of(mask).all(|u| (self.adj[u - 1] | bit(u)) & mask == mask)
    }

    pub fn is_simplicial(&self, v: Vertex) -> Result<bool> {
        if !self.in_support(v) {
            return input(format!("vertex {v} is not in the support of {self}"));
        }
        Ok(self.is_clique(self.adj[v - 1]))
    }

    /// A perfect elimination ordering of the support, or `None` when the
    /// graph has a chordless cycle of length at least four.
    ///
    /// Vertices are eliminated greedily, always taking the largest-labelled
    /// vertex that is simplicial among those not yet eliminated. The returned
    /// ordering lists the first eliminated vertex last, so every vertex is
    /// simplicial in the subgraph induced by itself and its predecessors.
    pub fn find_peo(&self) -> Option<Peo> {
        let mut remaining = self.support_mask();
        let mut eliminated = Vec::with_capacity(remaining.count_ones() as usize);
        while remaining != 0 {
            let v = (1..=self.n)
                .rev()
                .filter(|v| remaining & bit(*v) != 0)
                .find(|v| self.is_clique(self.adj[v - 1] & remaining))?;
            eliminated.push(v);
            remaining &= !bit(v);
        }
        eliminated.reverse();
        let peo = Peo {
            ordering: eliminated,
        };
        debug_assert!(peo.is_valid_for(self));
        Some(peo)
    }

    pub fn is_chordal(&self) -> bool {
        self.find_peo().is_some()
    }

    /// Every two disjoint edges are joined by some edge of the graph.
    pub fn edge_distance_condition(&self) -> bool {
        self.edge_distance_scan().violations == 0
    }

    pub(crate) fn edge_distance_scan(&self) -> EdgeDistanceScan {
        let edges = self.edges();
        let mut scan = EdgeDistanceScan::default();
        for (a, e) in edges.iter().enumerate() {
            let reach = self.adj[e.lo - 1] | self.adj[e.hi - 1];
            for f in &edges[a + 1..] {
                if !e.is_disjoint(f) {
                    continue;
                }
                scan.disjoint_pairs += 1;
                if reach & (bit(f.lo) | bit(f.hi)) == 0 {
                    scan.violations += 1;
                }
            }
        }
        scan
    }

    /// Apply a vertex relabelling, `perm[v - 1]` being the image of `v`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph> {
        if perm.len() != self.n {
            return input(format!(
                "permutation has length {}, expected {}",
                perm.len(),
                self.n
            ));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p == 0 || p > self.n || seen & (1 << p) != 0 {
                return input("relabelling is not a permutation of 1..=n");
            }
            seen |= 1 << p;
        }
        let mut g = Graph::new(self.n)?;
        for e in self.edges() {
            g.insert(Edge::new(perm[e.lo - 1], perm[e.hi - 1])?);
        }
        Ok(g)
    }

    /// Canonical labelling with the default support bound.
    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        self.canonical_form_bounded(DEFAULT_CANONICAL_BOUND)
    }

    /// The lexicographically least edge list over all bijections
    /// `support -> 1..=|support|`. Exhaustive over `|support|!` relabellings.
    pub fn canonical_form_bounded(&self, bound: usize) -> Result<CanonicalForm> {
        let support = self.support();
        let k = support.len();
        let limit = bound.min(CANONICAL_HARD_LIMIT);
        if k > limit {
            return Err(Error::Capability(format!(
                "canonical form needs |support| <= {limit}, got {k}"
            )));
        }
        if k == 0 {
            return Ok(CanonicalForm {
                vertices: 0,
                edges: Vec::new(),
            });
        }
        let mut index = [0usize; MAX_VERTICES + 1];
        for (pos, v) in support.iter().enumerate() {
            index[*v] = pos;
        }
        let local: Vec<(usize, usize)> = self
            .edges()
            .iter()
            .map(|e| (index[e.lo], index[e.hi]))
            .collect();

        // Bit for pair (a, b), 0-based a < b: lexicographically smaller pairs
        // get higher bits, so the largest code is the least sorted edge list.
        let mut pair_bit = [[0u64; CANONICAL_HARD_LIMIT]; CANONICAL_HARD_LIMIT];
        let mut rank = 0;
        #[allow(clippy::needless_range_loop)]
        for a in 0..k {
            for b in a + 1..k {
                pair_bit[a][b] = 1u64 << (63 - rank);
                pair_bit[b][a] = pair_bit[a][b];
                rank += 1;
            }
        }
        let code_of = |labels: &[usize]| {
            local
                .iter()
                .fold(0u64, |acc, &(a, b)| acc | pair_bit[labels[a]][labels[b]])
        };

        // Heap's algorithm over label assignments.
        let mut labels: Vec<usize> = (0..k).collect();
        let mut best = code_of(&labels);
        let mut c = vec![0usize; k];
        let mut i = 1;
        while i < k {
            if c[i] < i {
                if i % 2 == 0 {
                    labels.swap(0, i);
                } else {
                    labels.swap(c[i], i);
                }
                best = best.max(code_of(&labels));
                c[i] += 1;
                i = 1;
            } else {
                c[i] = 0;
                i += 1;
            }
        }

        let mut edges = Vec::with_capacity(local.len());
        #[allow(clippy::needless_range_loop)]
        for a in 0..k {
            for b in a + 1..k {
                if best & pair_bit[a][b] != 0 {
                    edges.push(Edge {
                        lo: a + 1,
                        hi: b + 1,
                    });
                }
            }
        }
        Ok(CanonicalForm { vertices: k, edges })
    }

    /// Undirected DOT rendering; nodes are the support, labelled by number.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph \"{}\" {{\n", name.replace('"', "\\\""));
        for v in self.support() {
            out.push_str(&format!("  {v} [label=\"{v}\"];\n"));
        }
        for e in self.edges() {
            out.push_str(&format!("  {} -- {};\n", e.lo, e.hi));
        }
        out.push_str("}\n");
        out
    }
}

/// Anything that can name an edge when building a [`Graph`].
pub enum EdgeSpec {
    Edge(Edge),
    Pair(Vertex, Vertex),
}

impl EdgeSpec {
    fn resolve(self) -> Result<Edge> {
        match self {
            EdgeSpec::Edge(e) => Ok(e),
            EdgeSpec::Pair(a, b) => Edge::new(a, b),
        }
    }
}

impl From<Edge> for EdgeSpec {
    fn from(e: Edge) -> Self {
        EdgeSpec::Edge(e)
    }
}

impl From<&Edge> for EdgeSpec {
    fn from(e: &Edge) -> Self {
        EdgeSpec::Edge(*e)
    }
}

impl From<(Vertex, Vertex)> for EdgeSpec {
    fn from((a, b): (Vertex, Vertex)) -> Self {
        EdgeSpec::Pair(a, b)
    }
}

impl From<[Vertex; 2]> for EdgeSpec {
    fn from([a, b]: [Vertex; 2]) -> Self {
        EdgeSpec::Pair(a, b)
    }
}

/// Summary of a scan over all pairs of disjoint edges.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDistanceScan {
    pub disjoint_pairs: usize,
    pub violations: usize,
}

/// A perfect elimination ordering `v_1, ..., v_m` of a graph's support.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Peo {
    ordering: Vec<Vertex>,
}

impl Peo {
    pub fn ordering(&self) -> &[Vertex] {
        &self.ordering
    }

    /// The final vertex, simplicial in the whole graph.
    pub fn last(&self) -> Option<Vertex> {
        self.ordering.last().copied()
    }

    /// Checks that the ordering covers the support exactly and that each
    /// vertex is simplicial among itself and its predecessors.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut prefix = 0u32;
        for &v in &self.ordering {
            if !g.in_support(v) || prefix & bit(v) != 0 {
                return false;
            }
            prefix |= bit(v);
            if !g.is_clique(g.nbr_mask(v) & prefix) {
                return false;
            }
        }
        prefix == g.support_mask()
    }
}

/// Isomorphism invariant of a graph: its least relabelled edge list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CanonicalForm {
    vertices: usize,
    edges: Vec<Edge>,
}

impl CanonicalForm {
    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// The canonically labelled graph on `1..=|support|`.
    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(self.vertices.max(1), self.edges.iter())
            .expect("canonical edges lie in 1..=vertices")
    }
}

/// Smaller graphs first, then by vertex count, then by edge list.
impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.edges.len(), self.vertices, &self.edges).cmp(&(
            other.edges.len(),
            other.vertices,
            &other.edges,
        ))
    }
}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, pairs: &[(Vertex, Vertex)]) -> Graph {
        Graph::from_pairs(n, pairs).unwrap()
    }

    #[test]
    fn neighbors_examples() {
        let tri = g(3, &[(1, 2), (1, 3), (2, 3)]);
        assert_eq!(tri.neighbors(1).unwrap(), vec![2, 3]);
        assert_eq!(g(3, &[(1, 2)]).neighbors(3).unwrap(), Vec::<Vertex>::new());
        let path = g(4, &[(1, 2), (2, 3), (3, 4)]);
        assert_eq!(path.neighbors(2).unwrap(), vec![1, 3]);
        assert!(matches!(path.neighbors(5), Err(Error::Input(_))));
        assert!(matches!(path.neighbors(0), Err(Error::Input(_))));
    }

    #[test]
    fn connectivity_examples() {
        assert!(!g(4, &[(1, 2), (3, 4)]).is_connected());
        assert!(g(3, &[(1, 2), (2, 3)]).is_connected());
        assert!(Graph::new(5).unwrap().is_connected());
        // isolated ambient vertices do not count
        assert!(g(6, &[(2, 5)]).is_connected());
    }

    #[test]
    fn peo_examples() {
        let pendant = g(4, &[(1, 2), (1, 3), (2, 3), (3, 4)]);
        let peo = pendant.find_peo().unwrap();
        assert!(peo.is_valid_for(&pendant));
        assert_eq!(peo.ordering().len(), 4);

        assert!(g(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).find_peo().is_none());
        assert_eq!(g(2, &[(1, 2)]).find_peo().unwrap().ordering(), &[1, 2]);
        assert_eq!(
            Graph::new(3).unwrap().find_peo().unwrap().ordering(),
            &[] as &[Vertex]
        );
    }

    #[test]
    fn peo_last_vertex_is_largest_simplicial() {
        let tri = g(3, &[(1, 2), (1, 3), (2, 3)]);
        assert_eq!(tri.find_peo().unwrap().last(), Some(3));
        let star = g(4, &[(1, 2), (1, 3), (1, 4)]);
        assert_eq!(star.find_peo().unwrap().last(), Some(4));
        let path = g(5, &[(1, 2), (2, 3)]);
        assert_eq!(path.find_peo().unwrap().last(), Some(3));
    }

    #[test]
    fn invalid_peo_rejected() {
        let path = g(3, &[(1, 2), (2, 3)]);
        // 2 placed last has non-adjacent neighbours 1 and 3
        let bad = Peo {
            ordering: vec![1, 3, 2],
        };
        assert!(!bad.is_valid_for(&path));
        let short = Peo {
            ordering: vec![1, 2],
        };
        assert!(!short.is_valid_for(&path));
    }

    #[test]
    fn simplicial_examples() {
        let diamond = g(4, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]);
        assert!(diamond.is_simplicial(1).unwrap());
        assert!(!diamond.is_simplicial(2).unwrap());
        let star = g(5, &[(1, 2), (1, 3), (1, 4)]);
        assert!(!star.is_simplicial(1).unwrap());
        assert!(matches!(star.is_simplicial(5), Err(Error::Input(_))));
    }

    #[test]
    fn edge_distance_examples() {
        assert!(!g(5, &[(1, 2), (2, 3), (3, 4), (4, 5)]).edge_distance_condition());
        assert!(g(4, &[(1, 2), (2, 3), (3, 4)]).edge_distance_condition());
        assert!(g(5, &[(1, 2), (1, 3), (1, 4), (1, 5)]).edge_distance_condition());
        assert!(!g(4, &[(1, 2), (3, 4)]).edge_distance_condition());
    }

    #[test]
    fn remove_edge_examples() {
        let p = g(3, &[(1, 2), (2, 3)]);
        let q = p.remove_edge(&Edge::new(2, 3).unwrap()).unwrap();
        assert_eq!(q, g(3, &[(1, 2)]));
        assert_eq!(q.support(), vec![1, 2]);

        let single = g(2, &[(1, 2)]);
        assert!(single
            .remove_edge(&Edge::new(1, 2).unwrap())
            .unwrap()
            .is_empty());

        let tri = g(3, &[(1, 2), (1, 3), (2, 3)]);
        assert_eq!(
            tri.remove_edge(&Edge::new(1, 2).unwrap()).unwrap(),
            g(3, &[(1, 3), (2, 3)])
        );
        assert!(matches!(
            p.remove_edge(&Edge::new(1, 3).unwrap()),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn canonical_form_examples() {
        let a = g(5, &[(3, 5), (5, 1)]);
        let b = g(3, &[(1, 2), (2, 3)]);
        assert_eq!(a.canonical_form().unwrap(), b.canonical_form().unwrap());
        assert_eq!(
            b.canonical_form().unwrap().edges(),
            &[Edge::new(1, 2).unwrap(), Edge::new(1, 3).unwrap()]
        );
        let tri = g(3, &[(1, 2), (1, 3), (2, 3)]);
        assert_ne!(tri.canonical_form().unwrap(), b.canonical_form().unwrap());
        let empty = Graph::new(4).unwrap().canonical_form().unwrap();
        assert!(empty.edges().is_empty());
        assert_eq!(empty.vertex_count(), 0);
    }

    #[test]
    fn canonical_form_respects_bound() {
        let k9 = Graph::complete(9).unwrap();
        assert!(matches!(k9.canonical_form(), Err(Error::Capability(_))));
        assert!(k9.canonical_form_bounded(9).is_ok());
    }

    #[test]
    fn edge_parsing() {
        assert_eq!("3-1".parse::<Edge>().unwrap(), Edge::new(1, 3).unwrap());
        assert!("1-1".parse::<Edge>().is_err());
        assert!("12".parse::<Edge>().is_err());
        assert!("a-2".parse::<Edge>().is_err());
    }

    #[test]
    fn construction_errors() {
        assert!(Graph::new(0).is_err());
        assert!(Graph::new(MAX_VERTICES + 1).is_err());
        assert!(Graph::from_pairs(3, &[(1, 4)]).is_err());
        assert!(Graph::from_pairs(3, &[(2, 2)]).is_err());
    }

    #[test]
    fn dot_lists_support_and_edges() {
        let dot = g(4, &[(1, 2), (2, 3)]).to_dot("p3");
        assert!(dot.starts_with("graph \"p3\" {"));
        assert!(dot.contains("  1 -- 2;"));
        assert!(dot.contains("  2 -- 3;"));
        assert!(!dot.contains("  4 "));
    }
}
