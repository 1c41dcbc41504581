//! Pseudo-Gorenstein and Gorenstein classification of bipartite edge rings.
//!
//! The edge ring of a graph is the tensor product of the edge rings of its
//! connected components, and for bipartite graphs also of its blocks. The
//! Gorenstein property is decided two ways: combinatorially per block
//! (perfect matching and every acceptable `X`-set tight; single-edge blocks
//! are polynomial rings) and numerically by palindromicity of the h-vector.

use crate::error::{contract, Result};
use crate::facets::enumerate_acceptable;
use crate::graph::{Bipartition, Block, Graph, Side, Subgraph};
use crate::hilbert::h_vector;
use crate::limits::Limits;
use crate::matching::{has_perfect_matching, is_matching_covered};
use crate::vertex_set::VertexSet;
use crate::HVector;

/// A block as a standalone graph with its inherited bipartition.
pub fn block_graph(g: &Graph, bip: &Bipartition, block: &Block) -> (Subgraph, Bipartition) {
    let sub = g.edge_subgraph(block.vertices, &block.edges);
    let b = bip.restrict(&sub);
    (sub, b)
}

/// h-polynomial of `k[G]` for any graph: the product over connected
/// components that carry edges. An edgeless graph gives `h = 1`.
pub fn edge_ring_h_vector(g: &Graph, limits: &Limits) -> Result<HVector> {
    let opts = limits.hilbert_options();
    let mut h = HVector::one();
    for comp in g.connected_components() {
        if comp.len() < 2 {
            continue;
        }
        let sub = g.induced_subgraph(comp);
        h = h.product(&h_vector(&sub.graph, &opts)?)?;
    }
    Ok(h)
}

fn check_bipartition(g: &Graph, bip: &Bipartition) -> Result<()> {
    if !bip.is_valid_for(g) {
        return contract("bipartition does not match the graph");
    }
    Ok(())
}

/// Every block is matching-covered. Single-edge blocks always are.
pub fn is_pseudo_gorenstein(g: &Graph, bip: &Bipartition) -> Result<bool> {
    check_bipartition(g, bip)?;
    for block in &g.blocks().blocks {
        if block.is_single_edge() {
            continue;
        }
        let (sub, b) = block_graph(g, bip, block);
        if !is_matching_covered(&sub.graph, &b)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Gorenstein test for one 2-connected bipartite graph: a perfect matching
/// exists and every acceptable subset of `X` is tight.
pub fn two_connected_gorenstein(g: &Graph, bip: &Bipartition, limits: &Limits) -> Result<bool> {
    if !has_perfect_matching(g, bip) {
        return Ok(false);
    }
    Ok(enumerate_acceptable(g, bip, Side::X, false, limits)?
        .iter()
        .all(|t| t.is_tight()))
}

/// Gorenstein by the acceptable-set criterion, block by block.
pub fn is_gorenstein_combinatorial(g: &Graph, bip: &Bipartition, limits: &Limits) -> Result<bool> {
    check_bipartition(g, bip)?;
    for block in &g.blocks().blocks {
        if block.is_single_edge() {
            continue;
        }
        let (sub, b) = block_graph(g, bip, block);
        if !two_connected_gorenstein(&sub.graph, &b, limits)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Gorenstein by palindromicity of the h-vector.
pub fn is_gorenstein_palindromic(g: &Graph, limits: &Limits) -> Result<bool> {
    Ok(edge_ring_h_vector(g, limits)?.is_palindromic())
}

/// Per-block h-vectors, each computed directly on the block.
pub fn block_h_vectors(g: &Graph, limits: &Limits) -> Result<Vec<HVector>> {
    let opts = limits.hilbert_options();
    g.blocks()
        .blocks
        .iter()
        .map(|b| {
            let sub = g.edge_subgraph(b.vertices, &b.edges);
            h_vector(&sub.graph, &opts)
        })
        .collect()
}

/// The whole-graph h-vector equals the product of the block h-vectors,
/// checked per connected component.
pub fn block_product_check(g: &Graph, bip: &Bipartition, limits: &Limits) -> Result<bool> {
    check_bipartition(g, bip)?;
    let opts = limits.hilbert_options();
    for comp in g.connected_components() {
        if comp.len() < 2 {
            continue;
        }
        let sub = g.induced_subgraph(comp).graph;
        let direct = h_vector(&sub, &opts)?;
        let mut product = HVector::one();
        for h in block_h_vectors(&sub, limits)? {
            product = product.product(&h)?;
        }
        if direct != product {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `h_s = 1`, `h_1 = h_{s-1}` and palindromicity of an h-vector. For
/// `s ≤ 1` the middle condition is read as satisfied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HFlags {
    pub leading_is_one: bool,
    pub h1_equals_next_to_leading: bool,
    pub palindromic: bool,
}

impl HFlags {
    pub fn of(h: &HVector) -> Self {
        HFlags {
            leading_is_one: h.leading() == 1,
            h1_equals_next_to_leading: h.degree() <= 1 || h.next_to_leading() == Some(h.get(1)),
            palindromic: h.is_palindromic(),
        }
    }

    /// The hypothesis of the palindromicity criterion.
    pub fn hypothesis(&self) -> bool {
        self.leading_is_one && self.h1_equals_next_to_leading
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct AcceptableCensus {
    pub x_acceptable: usize,
    pub x_tight: usize,
    pub y_acceptable: usize,
    pub y_tight: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockRecord {
    pub vertices: VertexSet,
    pub edges: Vec<(usize, usize)>,
    pub two_connected: bool,
    pub matching_covered: bool,
    pub hvec: HVector,
    /// `None` for single-edge blocks.
    pub census: Option<AcceptableCensus>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub hvec: HVector,
    pub pseudo_gorenstein: bool,
    pub gorenstein_combinatorial: bool,
    pub gorenstein_palindromic: bool,
    pub blocks: Vec<BlockRecord>,
}

pub fn classify(g: &Graph, bip: &Bipartition, limits: &Limits) -> Result<Classification> {
    check_bipartition(g, bip)?;
    let hvec = edge_ring_h_vector(g, limits)?;
    let decomposition = g.blocks();
    let mut blocks = Vec::with_capacity(decomposition.len());
    for block in &decomposition.blocks {
        let (sub, b) = block_graph(g, bip, block);
        let single = block.is_single_edge();
        let census = if single {
            None
        } else {
            let x = enumerate_acceptable(&sub.graph, &b, Side::X, false, limits)?;
            let y = enumerate_acceptable(&sub.graph, &b, Side::Y, false, limits)?;
            Some(AcceptableCensus {
                x_acceptable: x.len(),
                x_tight: x.iter().filter(|t| t.is_tight()).count(),
                y_acceptable: y.len(),
                y_tight: y.iter().filter(|t| t.is_tight()).count(),
            })
        };
        let block_h = if decomposition.len() == 1 && g.non_isolated() == block.vertices {
            hvec.clone()
        } else {
            h_vector(&sub.graph, &limits.hilbert_options())?
        };
        blocks.push(BlockRecord {
            vertices: block.vertices,
            edges: block.edges.clone(),
            two_connected: !single,
            matching_covered: single || is_matching_covered(&sub.graph, &b)?,
            hvec: block_h,
            census,
        });
    }
    Ok(Classification {
        pseudo_gorenstein: blocks.iter().all(|b| b.matching_covered),
        gorenstein_combinatorial: is_gorenstein_combinatorial(g, bip, limits)?,
        gorenstein_palindromic: hvec.is_palindromic(),
        hvec,
        blocks,
    })
}

/// Outcome of checking the palindromicity criterion on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MainVerdict {
    pub hypothesis_holds: bool,
    /// Gorenstein by both the combinatorial and the palindromic test.
    pub conclusion_holds: bool,
    pub hvec: HVector,
}

impl MainVerdict {
    pub fn is_counterexample(&self) -> bool {
        self.hypothesis_holds && !self.conclusion_holds
    }
}

pub fn verify_main_theorem(g: &Graph, bip: &Bipartition, limits: &Limits) -> Result<MainVerdict> {
    check_bipartition(g, bip)?;
    let hvec = edge_ring_h_vector(g, limits)?;
    let flags = HFlags::of(&hvec);
    let conclusion_holds = flags.palindromic && is_gorenstein_combinatorial(g, bip, limits)?;
    Ok(MainVerdict {
        hypothesis_holds: flags.hypothesis(),
        conclusion_holds,
        hvec,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn lim() -> Limits {
        Limits::default()
    }

    fn bip(g: &Graph) -> Bipartition {
        g.bipartition().unwrap()
    }

    /// C8 with vertices x1,y1,...,x4,y4 in cycle order plus the chord x1–y2.
    fn c8_with_chord() -> Graph {
        let mut edges: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
        edges.push((0, 3));
        Graph::new(8, edges).unwrap()
    }

    /// Edges lying in at least one perfect matching, by exhaustive search.
    fn edges_in_some_perfect_matching(g: &Graph) -> Vec<(usize, usize)> {
        fn extend(g: &Graph, used: VertexSet, chosen: &mut Vec<(usize, usize)>, out: &mut Vec<(usize, usize)>) {
            let Some(v) = (!used & VertexSet::range(g.order())).min() else {
                out.extend(chosen.iter().copied());
                return;
            };
            for w in g.neighbors(v).iter().filter(|&w| !used.contains(w)) {
                chosen.push((v.min(w), v.max(w)));
                extend(g, used.with(v).with(w), chosen, out);
                chosen.pop();
            }
        }
        let mut out = Vec::new();
        extend(g, VertexSet::EMPTY, &mut Vec::new(), &mut out);
        out.sort_unstable();
        out.dedup();
        out
    }

    #[test]
    fn pseudo_gorenstein_examples() {
        let c6 = cycle(6);
        assert!(is_pseudo_gorenstein(&c6, &bip(&c6)).unwrap());
        let p6 = path(6);
        assert!(is_pseudo_gorenstein(&p6, &bip(&p6)).unwrap());
        assert_eq!(edge_ring_h_vector(&p6, &lim()).unwrap().coefficients(), &[1]);
        // C6 with a pendant path of length 2
        let g = Graph::new(8, (0..6).map(|i| (i, (i + 1) % 6)).chain([(0, 6), (6, 7)])).unwrap();
        assert!(is_pseudo_gorenstein(&g, &bip(&g)).unwrap());
        let k23 = complete_bipartite(2, 3);
        assert!(k23.is_two_connected());
        assert!(!is_pseudo_gorenstein(&k23, &bip(&k23)).unwrap());
        // two squares joined by two cross edges
        let g = Graph::new(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 5), (2, 7)]).unwrap();
        assert!(g.is_two_connected());
        assert!(!is_pseudo_gorenstein(&g, &bip(&g)).unwrap());
        assert!(edges_in_some_perfect_matching(&g).len() < g.size());
    }

    #[test]
    fn octagon_with_chord_is_decided_by_exhaustive_matchings() {
        let chord = c8_with_chord();
        assert!(chord.is_two_connected());
        let oracle = edges_in_some_perfect_matching(&chord).len() == chord.size();
        assert!(oracle);
        assert_eq!(is_pseudo_gorenstein(&chord, &bip(&chord)).unwrap(), oracle);
    }

    #[test]
    fn combinatorial_gorenstein_examples() {
        let k33 = complete_bipartite(3, 3);
        assert!(is_gorenstein_combinatorial(&k33, &bip(&k33), &lim()).unwrap());
        let q3 = cube();
        assert!(!is_gorenstein_combinatorial(&q3, &bip(&q3), &lim()).unwrap());
        let c4 = cycle(4);
        assert!(is_gorenstein_combinatorial(&c4, &bip(&c4), &lim()).unwrap());
    }

    #[test]
    fn palindromic_gorenstein_examples() {
        assert!(is_gorenstein_palindromic(&cycle(6), &lim()).unwrap());
        assert!(!is_gorenstein_palindromic(&cube(), &lim()).unwrap());
        let two_c4 = glued_at_vertex(&cycle(4));
        assert_eq!(edge_ring_h_vector(&two_c4, &lim()).unwrap().coefficients(), &[1, 2, 1]);
        assert!(is_gorenstein_palindromic(&two_c4, &lim()).unwrap());
    }

    #[test]
    fn block_product_examples() {
        for g in [glued_at_vertex(&cycle(4)), path(6), cycle(6)] {
            assert!(block_product_check(&g, &bip(&g), &lim()).unwrap());
        }
        let two_c4 = glued_at_vertex(&cycle(4));
        let hs = block_h_vectors(&two_c4, &lim()).unwrap();
        assert_eq!(hs.len(), 2);
        assert!(hs.iter().all(|h| h.coefficients() == [1, 1]));
    }

    #[test]
    fn main_theorem_examples() {
        let c6 = cycle(6);
        let v = verify_main_theorem(&c6, &bip(&c6), &lim()).unwrap();
        assert!(v.hypothesis_holds && v.conclusion_holds);
        let q3 = cube();
        let v = verify_main_theorem(&q3, &bip(&q3), &lim()).unwrap();
        assert!(!v.hypothesis_holds);
        assert!(!v.is_counterexample());
    }

    #[test]
    fn classification_of_cube() {
        let q3 = cube();
        let c = classify(&q3, &bip(&q3), &lim()).unwrap();
        assert_eq!(c.hvec.coefficients(), &[1, 5, 9, 1]);
        assert!(c.pseudo_gorenstein);
        assert!(!c.gorenstein_combinatorial);
        assert!(!c.gorenstein_palindromic);
        assert_eq!(c.blocks.len(), 1);
        let census = c.blocks[0].census.unwrap();
        assert_eq!(census.x_tight, 0);
        assert!(census.x_acceptable > 0);
    }

    #[test]
    fn classification_handles_disconnected_graphs() {
        let g = Graph::new(9, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)]).unwrap();
        let c = classify(&g, &bip(&g), &lim()).unwrap();
        assert_eq!(c.hvec.coefficients(), &[1, 2, 1]);
        assert!(c.gorenstein_combinatorial && c.gorenstein_palindromic);
        let e = Graph::empty(2);
        let c = classify(&e, &bip(&e), &lim()).unwrap();
        assert_eq!(c.hvec.coefficients(), &[1]);
        assert!(c.blocks.is_empty());
    }
}
