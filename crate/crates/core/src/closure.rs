//! Blockwise Gorenstein closure of a pseudo-Gorenstein bipartite graph.
//!
//! Each 2-connected block `B` gains the cross non-edges that no tight
//! acceptable `X_B`-set separates; single-edge blocks stay as they are.

use crate::classify::{block_graph, edge_ring_h_vector, is_gorenstein_combinatorial, two_connected_gorenstein};
use crate::error::{contract, Error, Result};
use crate::facets::{cross_non_edges, FillSet, McBlock};
use crate::graph::{Bipartition, Graph};
use crate::hilbert::h_vector;
use crate::limits::Limits;
use crate::matching::is_matching_covered;
use crate::vertex_set::VertexSet;
use crate::HVector;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockClosure {
    pub vertices: VertexSet,
    /// Added edges in parent labels, as `(x, y)` pairs.
    pub fill: FillSet,
    /// Block h-vectors before and after filling; `None` for single-edge
    /// blocks.
    pub original_h: Option<HVector>,
    pub closed_h: Option<HVector>,
    /// The filled block is again 2-connected and matching-covered.
    pub closed_two_connected_matching_covered: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureResult {
    pub closed_graph: Graph,
    pub blocks: Vec<BlockClosure>,
    pub original_h: HVector,
    pub closed_h: HVector,
}

impl ClosureResult {
    pub fn added_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.blocks.iter().flat_map(|b| b.fill.non_edges.iter().copied())
    }
}

/// Builds `Ĝ` and checks that it is Gorenstein by both tests, that
/// `ŝ = s`, and that `ĥ_{s-1} = h_{s-1}`.
pub fn gorenstein_closure(g: &Graph, bip: &Bipartition, limits: &Limits) -> Result<ClosureResult> {
    if !bip.is_valid_for(g) {
        return contract("bipartition does not match the graph");
    }
    let opts = limits.hilbert_options();
    let decomposition = g.blocks();
    let whole_block = decomposition.len() == 1;
    let mut blocks = Vec::with_capacity(decomposition.len());
    for block in &decomposition.blocks {
        if block.is_single_edge() {
            blocks.push(BlockClosure {
                vertices: block.vertices,
                fill: FillSet::default(),
                original_h: None,
                closed_h: None,
                closed_two_connected_matching_covered: false,
            });
            continue;
        }
        let (sub, b) = block_graph(g, bip, block);
        let mc = match McBlock::new(&sub.graph, b) {
            Ok(mc) => mc,
            Err(Error::Contract(_)) => {
                return contract("closure needs a pseudo-Gorenstein graph (every block matching-covered)")
            }
            Err(e) => return Err(e),
        };
        let local_fill = mc.fill_set(limits)?;
        let closed = sub.graph.with_edges(local_fill.non_edges.iter().copied())?;
        let fill = FillSet {
            non_edges: local_fill
                .non_edges
                .iter()
                .map(|&(x, y)| (sub.labels[x], sub.labels[y]))
                .collect(),
        };
        let (original_h, closed_h) = if whole_block {
            (None, None)
        } else {
            (Some(h_vector(&sub.graph, &opts)?), Some(h_vector(&closed, &opts)?))
        };
        blocks.push(BlockClosure {
            vertices: block.vertices,
            fill,
            original_h,
            closed_h,
            closed_two_connected_matching_covered: closed.is_two_connected()
                && is_matching_covered(&closed, &b)?,
        });
    }
    let closed_graph = g.with_edges(blocks.iter().flat_map(|b| b.fill.non_edges.iter().copied()))?;
    let original_h = edge_ring_h_vector(g, limits)?;
    let closed_h = edge_ring_h_vector(&closed_graph, limits)?;
    if whole_block {
        if let Some(b) = blocks.first_mut().filter(|b| b.original_h.is_none() && b.vertices == g.non_isolated()) {
            if !decomposition.blocks[0].is_single_edge() {
                b.original_h = Some(original_h.clone());
                b.closed_h = Some(closed_h.clone());
            }
        }
    }

    if !is_gorenstein_combinatorial(&closed_graph, bip, limits)? || !closed_h.is_palindromic() {
        return contract(format!(
            "closure is not Gorenstein: h = {:?}",
            closed_h.coefficients()
        ));
    }
    if closed_h.degree() != original_h.degree() {
        return contract(format!(
            "closure changed the degree: {:?} -> {:?}",
            original_h.coefficients(),
            closed_h.coefficients()
        ));
    }
    if closed_h.next_to_leading() != original_h.next_to_leading() {
        return contract(format!(
            "closure changed h_(s-1): {:?} -> {:?}",
            original_h.coefficients(),
            closed_h.coefficients()
        ));
    }
    Ok(ClosureResult {
        closed_graph,
        blocks,
        original_h,
        closed_h,
    })
}

/// Edge sets (as subsets of the missing cross edges) of every Gorenstein
/// supergraph of a 2-connected bipartite graph on the same bipartition.
pub fn gorenstein_supergraphs(
    g: &Graph,
    bip: &Bipartition,
    limits: &Limits,
) -> Result<Vec<Vec<(usize, usize)>>> {
    let missing = cross_non_edges(g, bip);
    if missing.len() > limits.max_missing_edges {
        return Err(Error::Capacity {
            what: "missing cross edges for supergraph enumeration",
            limit: limits.max_missing_edges,
            needed: missing.len(),
        });
    }
    let mut out = Vec::new();
    for mask in 0..1u64 << missing.len() {
        let extra: Vec<(usize, usize)> = (0..missing.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| missing[i])
            .collect();
        let k = g.with_edges(extra.iter().copied())?;
        if two_connected_gorenstein(&k, bip, limits)? {
            out.push(extra);
        }
    }
    Ok(out)
}

/// Every Gorenstein supergraph on the same bipartition contains the filled
/// graph.
pub fn verify_closure_minimality(b: &Graph, bip: &Bipartition, limits: &Limits) -> Result<bool> {
    let fill = McBlock::new(b, *bip)?.fill_set(limits)?;
    let supergraphs = gorenstein_supergraphs(b, bip, limits)?;
    Ok(supergraphs
        .iter()
        .all(|extra| fill.non_edges.iter().all(|e| extra.contains(e))))
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

    #[test]
    fn closure_of_hexagon_is_itself() {
        let g = cycle(6);
        let r = gorenstein_closure(&g, &bip(&g), &lim()).unwrap();
        assert_eq!(r.closed_graph, g);
        assert_eq!(r.added_edges().count(), 0);
    }

    #[test]
    fn closure_of_cube_is_k44() {
        let g = cube();
        let b = bip(&g);
        let r = gorenstein_closure(&g, &b, &lim()).unwrap();
        assert_eq!(r.closed_graph.size(), 16);
        assert!(b.x.iter().all(|x| r.closed_graph.neighbors(x) == b.y));
        assert_eq!(r.original_h.coefficients(), &[1, 5, 9, 1]);
        assert_eq!(r.closed_h.coefficients(), &[1, 9, 9, 1]);
        assert!(r.blocks[0].closed_two_connected_matching_covered);
    }

    #[test]
    fn closure_of_two_hexagons_at_a_cut_vertex() {
        let g = glued_at_vertex(&cycle(6));
        let r = gorenstein_closure(&g, &bip(&g), &lim()).unwrap();
        assert_eq!(r.closed_graph, g);
        assert_eq!(r.closed_h.coefficients(), &[1, 2, 3, 2, 1]);
        assert_eq!(r.blocks.len(), 2);
        assert!(r.blocks.iter().all(|b| b.original_h.as_ref().unwrap().coefficients() == [1, 1, 1]));
    }

    #[test]
    fn closure_rejects_non_pseudo_gorenstein() {
        let g = complete_bipartite(2, 3);
        assert!(matches!(
            gorenstein_closure(&g, &bip(&g), &lim()),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn minimality_examples() {
        let c6 = cycle(6);
        assert!(verify_closure_minimality(&c6, &bip(&c6), &lim()).unwrap());
        let k33 = complete_bipartite(3, 3);
        assert!(verify_closure_minimality(&k33, &bip(&k33), &lim()).unwrap());
        assert_eq!(gorenstein_supergraphs(&k33, &bip(&k33), &lim()).unwrap().len(), 1);
        let q3 = cube();
        let b = bip(&q3);
        assert!(verify_closure_minimality(&q3, &b, &lim()).unwrap());
        let sups = gorenstein_supergraphs(&q3, &b, &lim()).unwrap();
        assert_eq!(sups, vec![vec![(0, 7), (3, 4), (5, 2), (6, 1)]]);
        let tight = Limits {
            max_missing_edges: 3,
            ..lim()
        };
        assert!(matches!(
            verify_closure_minimality(&q3, &b, &tight),
            Err(Error::Capacity { .. })
        ));
    }
}
