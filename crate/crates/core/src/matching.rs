//! Bipartite matchings by augmenting paths.

use crate::error::{contract, Error, Result};
use crate::graph::{Bipartition, Graph};
use crate::limits::Limits;
use crate::vertex_set::VertexSet;

const UNMATCHED: usize = usize::MAX;

/// A set of vertex-disjoint edges, stored as `(x, y)` with `x` in `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn covered(&self) -> VertexSet {
        self.pairs.iter().flat_map(|&(x, y)| [x, y]).collect()
    }

    /// Every pair is an edge of `g` and no vertex is used twice.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut used = VertexSet::EMPTY;
        for &(x, y) in &self.pairs {
            if !g.has_edge(x, y) || used.contains(x) || used.contains(y) {
                return false;
            }
            used.insert(x);
            used.insert(y);
        }
        true
    }
}

/// Kuhn-style matcher restricted to a vertex subset on each side.
struct Matcher<'g> {
    g: &'g Graph,
    ys: VertexSet,
    mate_of_y: Vec<usize>,
    mate_of_x: Vec<usize>,
}

impl<'g> Matcher<'g> {
    fn new(g: &'g Graph, ys: VertexSet) -> Self {
        Matcher {
            g,
            ys,
            mate_of_y: vec![UNMATCHED; g.order()],
            mate_of_x: vec![UNMATCHED; g.order()],
        }
    }

    fn augment(&mut self, x: usize, visited: &mut VertexSet) -> bool {
        for y in self.g.neighbors(x) & self.ys {
            if visited.contains(y) {
                continue;
            }
            visited.insert(y);
            let m = self.mate_of_y[y];
            if m == UNMATCHED || self.augment(m, visited) {
                self.mate_of_y[y] = x;
                self.mate_of_x[x] = y;
                return true;
            }
        }
        false
    }

    /// Size of a maximum matching between `xs` and `ys`; stops early once
    /// `stop_after_misses` exposed `X` vertices have been seen.
    fn run(&mut self, xs: VertexSet, stop_after_misses: usize) -> usize {
        let mut size = 0;
        let mut misses = 0;
        // cheap greedy pass first
        for x in xs {
            if let Some(y) = (self.g.neighbors(x) & self.ys)
                .iter()
                .find(|&y| self.mate_of_y[y] == UNMATCHED)
            {
                self.mate_of_y[y] = x;
                self.mate_of_x[x] = y;
                size += 1;
            }
        }
        for x in xs {
            if self.mate_of_x[x] != UNMATCHED {
                continue;
            }
            let mut visited = VertexSet::EMPTY;
            if self.augment(x, &mut visited) {
                size += 1;
            } else {
                misses += 1;
                if misses >= stop_after_misses {
                    break;
                }
            }
        }
        size
    }
}

/// Maximum-cardinality matching of a bipartite graph.
pub fn maximum_matching(g: &Graph, bip: &Bipartition) -> Matching {
    let mut m = Matcher::new(g, bip.y);
    m.run(bip.x, usize::MAX);
    let pairs = bip
        .x
        .iter()
        .filter(|&x| m.mate_of_x[x] != UNMATCHED)
        .map(|x| (x, m.mate_of_x[x]))
        .collect();
    Matching { pairs }
}

/// Whether the induced subgraph on `xs ⊔ ys` has a perfect matching.
pub fn has_perfect_matching_between(g: &Graph, xs: VertexSet, ys: VertexSet) -> bool {
    if xs.len() != ys.len() {
        return false;
    }
    let mut m = Matcher::new(g, ys);
    m.run(xs, 1) == xs.len()
}

pub fn has_perfect_matching(g: &Graph, bip: &Bipartition) -> bool {
    has_perfect_matching_between(g, bip.x, bip.y)
}

/// An `M`-augmenting path `x0, y0, x1, y1, ..., yk` (alternating, both ends
/// exposed), if one exists. Its absence certifies that `m` is maximum.
pub fn augmenting_path(g: &Graph, bip: &Bipartition, m: &Matching) -> Option<Vec<usize>> {
    let mut mate = vec![UNMATCHED; g.order()];
    for &(x, y) in &m.pairs {
        mate[x] = y;
        mate[y] = x;
    }
    // BFS over X vertices along non-matching then matching edges.
    let mut parent = vec![UNMATCHED; g.order()];
    let mut seen = VertexSet::EMPTY;
    let mut queue: std::collections::VecDeque<usize> = bip
        .x
        .iter()
        .filter(|&x| mate[x] == UNMATCHED && g.degree(x) > 0)
        .collect();
    for &x in &queue {
        seen.insert(x);
    }
    while let Some(x) = queue.pop_front() {
        for y in g.neighbors(x) {
            if seen.contains(y) || mate[x] == y {
                continue;
            }
            seen.insert(y);
            parent[y] = x;
            if mate[y] == UNMATCHED {
                let mut path = vec![y];
                let mut cur = y;
                loop {
                    let px = parent[cur];
                    path.push(px);
                    if mate[px] == UNMATCHED {
                        break;
                    }
                    cur = mate[px];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            let nx = mate[y];
            if !seen.contains(nx) {
                seen.insert(nx);
                parent[nx] = y;
                queue.push_back(nx);
            }
        }
    }
    None
}

/// Every edge lies in some perfect matching. Tested edge by edge: `{x, y}`
/// extends to a perfect matching iff `G - x - y` has one.
pub fn is_matching_covered(g: &Graph, bip: &Bipartition) -> Result<bool> {
    if !g.is_connected() {
        return contract("matching-covered test needs a connected graph");
    }
    if bip.x.len() != bip.y.len() {
        return Ok(false);
    }
    let base = maximum_matching(g, bip);
    if base.len() != bip.x.len() {
        return Ok(false);
    }
    for &(u, v) in g.edges() {
        let (x, y) = if bip.x.contains(u) { (u, v) } else { (v, u) };
        if base.pairs.binary_search(&(x, y)).is_ok() {
            continue;
        }
        if !has_perfect_matching_between(g, bip.x.without(x), bip.y.without(y)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether every non-empty proper subset `A` of either side has
/// `|N(A)| ≥ |A| + 1`.
pub fn strict_hall_holds(g: &Graph, bip: &Bipartition, limits: &Limits) -> Result<bool> {
    if bip.x.len() != bip.y.len() {
        return contract("strict Hall check needs |X| = |Y|");
    }
    let n = bip.x.len();
    if n > limits.max_side {
        return Err(Error::Capacity {
            what: "subset enumeration side size",
            limit: limits.max_side,
            needed: n,
        });
    }
    for side in [bip.x, bip.y] {
        for mask in 1..(1u64 << n) - 1 {
            let a = side.select(mask);
            if g.neighborhood(a).len() < a.len() + 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn bip(g: &Graph) -> Bipartition {
        g.bipartition().unwrap()
    }

    #[test]
    fn maximum_matching_examples() {
        for (g, size) in [
            (cycle(6), 3),
            (complete_bipartite(1, 3), 1),
            (complete_bipartite(3, 3), 3),
        ] {
            let b = bip(&g);
            let m = maximum_matching(&g, &b);
            assert_eq!(m.len(), size);
            assert!(m.is_valid_for(&g));
            assert!(augmenting_path(&g, &b, &m).is_none());
        }
    }

    #[test]
    fn augmenting_path_found_for_non_maximum_matching() {
        let g = path(4);
        let b = bip(&g);
        let m = Matching {
            pairs: vec![(2, 1)],
        };
        let p = augmenting_path(&g, &b, &m).unwrap();
        assert_eq!(p.len(), 4);
        assert!(p.windows(2).all(|w| g.has_edge(w[0], w[1])));
    }

    #[test]
    fn perfect_matching_examples() {
        let k33 = complete_bipartite(3, 3);
        assert!(has_perfect_matching(&k33, &bip(&k33)));
        let star = complete_bipartite(1, 3);
        assert!(!has_perfect_matching(&star, &bip(&star)));
        let p6 = path(6);
        assert!(has_perfect_matching(&p6, &bip(&p6)));
    }

    #[test]
    fn matching_covered_examples() {
        let c6 = cycle(6);
        assert!(is_matching_covered(&c6, &bip(&c6)).unwrap());
        let p6 = path(6);
        assert!(!is_matching_covered(&p6, &bip(&p6)).unwrap());
        let q3 = cube();
        assert!(is_matching_covered(&q3, &bip(&q3)).unwrap());
        let k2 = complete(2);
        assert!(is_matching_covered(&k2, &bip(&k2)).unwrap());
        let two = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(is_matching_covered(&two, &bip(&two)).is_err());
    }

    /// Q3 oracle: each edge extends to a perfect matching, checked by
    /// brute force over all perfect matchings (permutations of Y).
    #[test]
    fn cube_edges_each_lie_in_a_perfect_matching_by_brute_force() {
        let q3 = cube();
        let b = bip(&q3);
        let xs: Vec<usize> = b.x.iter().collect();
        let ys: Vec<usize> = b.y.iter().collect();
        let mut covered = std::collections::BTreeSet::new();
        let mut perm: Vec<usize> = (0..4).collect();
        permute(&mut perm, 0, &mut |p| {
            if (0..4).all(|i| q3.has_edge(xs[i], ys[p[i]])) {
                for i in 0..4 {
                    covered.insert(q3.edge_index(xs[i], ys[p[i]]).unwrap());
                }
            }
        });
        assert_eq!(covered.len(), 12);
    }

    fn permute(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, f);
            v.swap(k, i);
        }
    }

    #[test]
    fn strict_hall_examples() {
        let lim = Limits::default();
        let c6 = cycle(6);
        assert!(strict_hall_holds(&c6, &bip(&c6), &lim).unwrap());
        let k33 = complete_bipartite(3, 3);
        assert!(strict_hall_holds(&k33, &bip(&k33), &lim).unwrap());
        // two C4s joined by a bridge
        let g = Graph::new(
            8,
            [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 5)],
        )
        .unwrap();
        let b = bip(&g);
        assert!(!is_matching_covered(&g, &b).unwrap());
        assert!(!strict_hall_holds(&g, &b, &lim).unwrap());
        // the witness: X-side of the second C4
        let a = (b.x & VertexSet::from_bits(0xf0)).iter().collect::<VertexSet>();
        assert_eq!(g.neighborhood(a).len(), a.len());
    }

    #[test]
    fn strict_hall_respects_cap() {
        let g = complete_bipartite(3, 3);
        let lim = Limits {
            max_side: 2,
            ..Limits::default()
        };
        assert!(matches!(
            strict_hall_holds(&g, &bip(&g), &lim),
            Err(Error::Capacity { .. })
        ));
        let star = complete_bipartite(1, 2);
        assert!(strict_hall_holds(&star, &bip(&star), &Limits::default()).is_err());
    }
}
