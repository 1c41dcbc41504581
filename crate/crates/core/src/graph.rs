//! Finite simple graphs on dense vertex labels `0..d`.
//!
//! Everything here is immutable after construction. Adjacency is stored as
//! one [`VertexSet`] per vertex, so neighbourhoods of vertex sets and
//! connectivity of induced subgraphs are word operations.

use std::collections::VecDeque;

use crate::error::{contract, Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<VertexSet>,
    /// Sorted, each pair with `u < v`.
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds the simple graph on `order` vertices. Repeated pairs collapse
    /// into one edge; `(u, v)` and `(v, u)` are the same edge.
    pub fn new<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if order > MAX_VERTICES {
            return Err(Error::Input(format!(
                "{order} vertices exceeds the supported maximum of {MAX_VERTICES}"
            )));
        }
        let mut adj = vec![VertexSet::EMPTY; order];
        for (u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::Input(format!(
                    "edge ({u}, {v}) out of range for {order} vertices"
                )));
            }
            if u == v {
                return Err(Error::Input(format!("self-loop at vertex {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self::from_adjacency(adj))
    }

    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        let mut edges = Vec::new();
        for (u, nb) in adj.iter().enumerate() {
            for v in nb.iter().filter(|&v| v > u) {
                edges.push((u, v));
            }
        }
        Graph {
            order: adj.len(),
            adj,
            edges,
        }
    }

    pub fn empty(order: usize) -> Self {
        Self::from_adjacency(vec![VertexSet::EMPTY; order])
    }

    /// Vertex count `d`.
    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Edge count.
    #[inline]
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::range(self.order)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && self.adj[u].contains(v)
    }

    /// Index of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    /// `N(T)`: union of the neighbourhoods of the members of `t`.
    #[inline]
    pub fn neighborhood(&self, t: VertexSet) -> VertexSet {
        t.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v])
    }

    pub fn non_isolated(&self) -> VertexSet {
        (0..self.order).filter(|&v| !self.adj[v].is_empty()).collect()
    }

    /// Vertices reachable from `start` inside the induced subgraph on `within`.
    pub fn component_within(&self, start: usize, within: VertexSet) -> VertexSet {
        debug_assert!(within.contains(start));
        let mut seen = VertexSet::single(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.neighborhood(frontier) & within;
            frontier = next - seen;
            seen |= frontier;
        }
        seen
    }

    /// Whether the induced subgraph on `s` is connected. The empty set counts
    /// as connected.
    pub fn is_connected_within(&self, s: VertexSet) -> bool {
        match s.min() {
            None => true,
            Some(v) => self.component_within(v, s) == s,
        }
    }

    /// Whether the induced subgraph on `s` has at least one edge.
    pub fn has_edge_within(&self, s: VertexSet) -> bool {
        s.iter().any(|v| self.adj[v].intersects(s))
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    /// Connected components in order of their smallest vertex. Isolated
    /// vertices are singleton components.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = rest.min() {
            let comp = self.component_within(v, rest);
            rest = rest - comp;
            out.push(comp);
        }
        out
    }

    /// Proper 2-colouring, if one exists. In every component the side holding
    /// the smallest vertex is `X`; isolated vertices land in `X`.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut colour = vec![u8::MAX; self.order];
        let mut x = VertexSet::EMPTY;
        let mut y = VertexSet::EMPTY;
        let mut queue = VecDeque::new();
        for s in 0..self.order {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                if colour[u] == 0 {
                    x.insert(u);
                } else {
                    y.insert(u);
                }
                for w in self.adj[u] {
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[u];
                        queue.push_back(w);
                    } else if colour[w] == colour[u] {
                        return None;
                    }
                }
            }
        }
        Some(Bipartition { x, y })
    }

    /// Whether deleting `v` leaves a connected graph.
    pub fn is_ordinary(&self, v: usize) -> bool {
        self.is_connected_within(self.vertices().without(v))
    }

    /// Connected, at least three vertices, and no cut vertex. `K1` and `K2`
    /// are not 2-connected.
    pub fn is_two_connected(&self) -> bool {
        self.order >= 3 && self.is_connected() && (0..self.order).all(|v| self.is_ordinary(v))
    }

    /// Induced subgraph on `s`, relabelled densely in increasing order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Subgraph {
        let labels: Vec<usize> = s.iter().collect();
        let mut local = [usize::MAX; MAX_VERTICES];
        for (i, &v) in labels.iter().enumerate() {
            local[v] = i;
        }
        let adj = labels
            .iter()
            .map(|&v| (self.adj[v] & s).iter().map(|w| local[w]).collect())
            .collect();
        Subgraph {
            graph: Graph::from_adjacency(adj),
            labels,
        }
    }

    /// Subgraph on `s` that keeps only the listed edges (given in parent labels).
    pub fn edge_subgraph(&self, s: VertexSet, edges: &[(usize, usize)]) -> Subgraph {
        let labels: Vec<usize> = s.iter().collect();
        let mut local = [usize::MAX; MAX_VERTICES];
        for (i, &v) in labels.iter().enumerate() {
            local[v] = i;
        }
        let mut adj = vec![VertexSet::EMPTY; labels.len()];
        for &(u, v) in edges {
            debug_assert!(self.has_edge(u, v) && s.contains(u) && s.contains(v));
            adj[local[u]].insert(local[v]);
            adj[local[v]].insert(local[u]);
        }
        Subgraph {
            graph: Graph::from_adjacency(adj),
            labels,
        }
    }

    /// The same vertex set with extra edges.
    pub fn with_edges<I>(&self, extra: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Graph::new(self.order, self.edges.iter().copied().chain(extra))
    }

    /// Block (maximal 2-connected subgraph) decomposition; bridges are
    /// single-edge blocks and isolated vertices belong to no block.
    pub fn blocks(&self) -> BlockDecomposition {
        BlockFinder::new(self).run()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph({}, {:?})", self.order, self.edges)
    }
}

/// A subgraph relabelled to `0..k`, with the map back to parent labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    /// `labels[i]` is the parent label of local vertex `i`.
    pub labels: Vec<usize>,
}

impl Subgraph {
    pub fn to_parent(&self, set: VertexSet) -> VertexSet {
        set.iter().map(|v| self.labels[v]).collect()
    }

    pub fn edge_to_parent(&self, (u, v): (usize, usize)) -> (usize, usize) {
        let (a, b) = (self.labels[u], self.labels[v]);
        if a < b {
            (a, b)
        } else {
            (b, a)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }
}

/// Ordered 2-colouring `(X, Y)` of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Bipartition {
    pub x: VertexSet,
    pub y: VertexSet,
}

impl Bipartition {
    pub fn new(x: VertexSet, y: VertexSet) -> Self {
        Bipartition { x, y }
    }

    pub fn side(&self, side: Side) -> VertexSet {
        match side {
            Side::X => self.x,
            Side::Y => self.y,
        }
    }

    pub fn side_of(&self, v: usize) -> Option<Side> {
        if self.x.contains(v) {
            Some(Side::X)
        } else if self.y.contains(v) {
            Some(Side::Y)
        } else {
            None
        }
    }

    /// The side containing all of `t`; `None` when `t` straddles both.
    /// The empty set is reported as lying in `X`.
    pub fn side_containing(&self, t: VertexSet) -> Option<Side> {
        if t.is_subset(self.x) {
            Some(Side::X)
        } else if t.is_subset(self.y) {
            Some(Side::Y)
        } else {
            None
        }
    }

    /// Whether every edge of `g` crosses the bipartition and the sides are
    /// disjoint and cover `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        !self.x.intersects(self.y)
            && (self.x | self.y) == g.vertices()
            && g
                .edges()
                .iter()
                .all(|&(u, v)| self.x.contains(u) != self.x.contains(v))
    }

    /// The bipartition induced on a relabelled subgraph.
    pub fn restrict(&self, sub: &Subgraph) -> Bipartition {
        let mut x = VertexSet::EMPTY;
        let mut y = VertexSet::EMPTY;
        for (i, &v) in sub.labels.iter().enumerate() {
            if self.x.contains(v) {
                x.insert(i);
            } else {
                y.insert(i);
            }
        }
        Bipartition { x, y }
    }

    pub fn swapped(&self) -> Bipartition {
        Bipartition {
            x: self.y,
            y: self.x,
        }
    }
}

/// `δ(T) = |N(T)| - |T|` for a set inside one side of the bipartition.
pub fn delta(g: &Graph, bip: &Bipartition, t: VertexSet) -> Result<i64> {
    if bip.side_containing(t).is_none() {
        return contract(format!("set {t:?} is not contained in one side"));
    }
    Ok(g.neighborhood(t).len() as i64 - t.len() as i64)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub vertices: VertexSet,
    /// Edges of the block in parent labels, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl Block {
    pub fn is_single_edge(&self) -> bool {
        self.edges.len() == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    /// Block index of each edge, indexed like [`Graph::edges`].
    pub block_of_edge: Vec<usize>,
}

impl BlockDecomposition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Vertices lying in more than one block.
    pub fn cut_vertices(&self) -> VertexSet {
        let mut seen = VertexSet::EMPTY;
        let mut cut = VertexSet::EMPTY;
        for b in &self.blocks {
            cut |= seen & b.vertices;
            seen |= b.vertices;
        }
        cut
    }
}

/// Hopcroft–Tarjan lowpoint search with an edge stack.
struct BlockFinder<'g> {
    g: &'g Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<Vec<(usize, usize)>>,
}

impl<'g> BlockFinder<'g> {
    fn new(g: &'g Graph) -> Self {
        BlockFinder {
            g,
            disc: vec![usize::MAX; g.order()],
            low: vec![0; g.order()],
            time: 0,
            stack: Vec::new(),
            blocks: Vec::new(),
        }
    }

    fn run(mut self) -> BlockDecomposition {
        for v in 0..self.g.order() {
            if self.disc[v] == usize::MAX {
                self.visit(v, usize::MAX);
            }
        }
        let g = self.g;
        let mut blocks: Vec<Block> = self
            .blocks
            .into_iter()
            .map(|mut edges| {
                for e in edges.iter_mut() {
                    if e.0 > e.1 {
                        *e = (e.1, e.0);
                    }
                }
                edges.sort_unstable();
                let vertices = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
                Block { vertices, edges }
            })
            .collect();
        blocks.sort_by(|a, b| a.edges[0].cmp(&b.edges[0]));
        let mut block_of_edge = vec![usize::MAX; g.size()];
        for (i, b) in blocks.iter().enumerate() {
            for &(u, v) in &b.edges {
                block_of_edge[g.edge_index(u, v).expect("block edge")] = i;
            }
        }
        BlockDecomposition {
            blocks,
            block_of_edge,
        }
    }

    fn visit(&mut self, u: usize, parent: usize) {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        for w in self.g.neighbors(u) {
            if self.disc[w] == usize::MAX {
                self.stack.push((u, w));
                self.visit(w, u);
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = self.stack.pop() {
                        block.push(e);
                        if e == (u, w) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if w != parent && self.disc[w] < self.disc[u] {
                self.stack.push((u, w));
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
    }
}

/// Named small graphs used across tests and the command line.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path")
    }

    pub fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle")
    }

    pub fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).expect("complete")
    }

    /// `K_{a,b}` with `X = 0..a`, `Y = a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::new(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
            .expect("complete bipartite")
    }

    /// 3-cube on bit strings `0..8`.
    pub fn cube() -> Graph {
        let mut edges = Vec::new();
        for v in 0..8usize {
            for bit in 0..3 {
                let w = v ^ (1 << bit);
                if v < w {
                    edges.push((v, w));
                }
            }
        }
        Graph::new(8, edges).expect("cube")
    }

    /// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, i + 5));
        }
        Graph::new(10, edges).expect("petersen")
    }

    /// Two copies of `g` glued at vertex 0 of each.
    pub fn glued_at_vertex(g: &Graph) -> Graph {
        let d = g.order();
        let relabel = |v: usize| if v == 0 { 0 } else { v + d - 1 };
        let edges = g
            .edges()
            .iter()
            .copied()
            .chain(g.edges().iter().map(|&(u, v)| (relabel(u), relabel(v))));
        Graph::new(2 * d - 1, edges).expect("glued")
    }
}
