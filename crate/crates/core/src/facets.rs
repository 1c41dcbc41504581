//! Acceptable and tight sets of a bipartite graph.
//!
//! For a connected bipartite graph with sides `X ⊔ Y`, a non-empty `T ⊆ X`
//! is *acceptable* when the graph between `T` and `N(T)` is connected and the
//! induced graph on `(X \ T) ⊔ (Y \ N(T))` is connected with an edge. These
//! sets index the non-coordinate facets of the edge polytope. `T` is *tight*
//! when `|N(T)| = |T| + 1`.
//!
//! [`McBlock`] carries the operations that are only meaningful on a
//! 2-connected matching-covered bipartite graph: Fill sets, uncrossing,
//! mirroring tight sets across the bipartition and the internal tight cover.

use crate::error::{contract, Error, Result};
use crate::graph::{Bipartition, Graph, Side};
use crate::limits::Limits;
use crate::matching::is_matching_covered;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AcceptableSet {
    pub side: Side,
    pub members: VertexSet,
    pub neighborhood: VertexSet,
    pub delta: i64,
}

impl AcceptableSet {
    fn new(g: &Graph, side: Side, members: VertexSet) -> Self {
        let neighborhood = g.neighborhood(members);
        AcceptableSet {
            side,
            members,
            neighborhood,
            delta: neighborhood.len() as i64 - members.len() as i64,
        }
    }

    pub fn is_tight(&self) -> bool {
        self.delta == 1
    }

    /// `v ∈ T` and `w ∉ N(T)`, for `v` on the set's side and `w` opposite.
    pub fn separates(&self, v: usize, w: usize) -> bool {
        self.members.contains(v) && !self.neighborhood.contains(w)
    }
}

/// Cross non-edges `(x, y)`, `x ∈ X`, `y ∈ Y`, in lexicographic order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FillSet {
    pub non_edges: Vec<(usize, usize)>,
}

impl FillSet {
    pub fn len(&self) -> usize {
        self.non_edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.non_edges.is_empty()
    }
}

/// All cross pairs `(x, y)` that are not edges.
pub fn cross_non_edges(g: &Graph, bip: &Bipartition) -> Vec<(usize, usize)> {
    bip.x
        .iter()
        .flat_map(|x| (bip.y - g.neighbors(x)).iter().map(move |y| (x, y)))
        .collect()
}

pub fn is_acceptable(g: &Graph, bip: &Bipartition, t: VertexSet, side: Side) -> bool {
    let own = bip.side(side);
    if t.is_empty() || !t.is_subset(own) {
        return false;
    }
    let n = g.neighborhood(t);
    if !g.is_connected_within(t | n) {
        return false;
    }
    let rest = (own - t) | (bip.side(side.other()) - n);
    g.has_edge_within(rest) && g.is_connected_within(rest)
}

/// `δ(T) = 1`.
pub fn is_tight(g: &Graph, bip: &Bipartition, t: VertexSet, side: Side) -> bool {
    t.is_subset(bip.side(side)) && g.neighborhood(t).len() == t.len() + 1
}

fn check_side_cap(n: usize, limits: &Limits) -> Result<()> {
    if n > limits.max_side {
        return Err(Error::Capacity {
            what: "subset enumeration side size",
            limit: limits.max_side,
            needed: n,
        });
    }
    Ok(())
}

/// Acceptable subsets of one side (optionally only the tight ones), in
/// increasing order of their vertex-set encoding.
pub fn enumerate_acceptable(
    g: &Graph,
    bip: &Bipartition,
    side: Side,
    tight_only: bool,
    limits: &Limits,
) -> Result<Vec<AcceptableSet>> {
    let own = bip.side(side);
    check_side_cap(own.len(), limits)?;
    let mut out = Vec::new();
    for mask in 1..1u64 << own.len() {
        let t = own.select(mask);
        if tight_only && !is_tight(g, bip, t, side) {
            continue;
        }
        if is_acceptable(g, bip, t, side) {
            out.push(AcceptableSet::new(g, side, t));
        }
    }
    Ok(out)
}

/// The `X`-set produced by separating a cross non-edge `(x, y)` in a
/// 2-connected bipartite graph: the `X`-vertices of the component of `x` in
/// the induced graph on `(X \ N(y)) ⊔ (Y \ {y})`. Checked to be acceptable
/// with `x ∈ T` and `y ∉ N(T)`.
pub fn component_separator(
    g: &Graph,
    bip: &Bipartition,
    x: usize,
    y: usize,
) -> Result<AcceptableSet> {
    if !bip.x.contains(x) || !bip.y.contains(y) {
        return contract(format!("({x}, {y}) is not an X-Y pair"));
    }
    if g.has_edge(x, y) {
        return contract(format!("({x}, {y}) is an edge"));
    }
    if !g.is_two_connected() {
        return contract("component separator needs a 2-connected graph");
    }
    let h = (bip.x - g.neighbors(y)) | bip.y.without(y);
    let t = g.component_within(x, h) & bip.x;
    let set = AcceptableSet::new(g, Side::X, t);
    if !set.separates(x, y) || !is_acceptable(g, bip, t, Side::X) {
        return contract(format!(
            "component separator {t:?} for ({x}, {y}) is not a separating acceptable set"
        ));
    }
    Ok(set)
}

/// A 2-connected, matching-covered bipartite graph, validated once.
#[derive(Debug, Clone, Copy)]
pub struct McBlock<'g> {
    g: &'g Graph,
    bip: Bipartition,
}

impl<'g> McBlock<'g> {
    pub fn new(g: &'g Graph, bip: Bipartition) -> Result<Self> {
        if !bip.is_valid_for(g) {
            return contract("bipartition does not match the graph");
        }
        if !g.is_two_connected() {
            return contract("graph is not 2-connected");
        }
        if !is_matching_covered(g, &bip)? {
            return contract("graph is not matching-covered");
        }
        Ok(McBlock { g, bip })
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn bipartition(&self) -> &Bipartition {
        &self.bip
    }

    /// `n = |X| = |Y|`.
    pub fn half_order(&self) -> usize {
        self.bip.x.len()
    }

    pub fn tight_acceptable(&self, side: Side, limits: &Limits) -> Result<Vec<AcceptableSet>> {
        enumerate_acceptable(self.g, &self.bip, side, true, limits)
    }

    /// Cross non-edges separated by no tight acceptable subset of `X`.
    pub fn fill_set(&self, limits: &Limits) -> Result<FillSet> {
        let tight = self.tight_acceptable(Side::X, limits)?;
        Ok(FillSet {
            non_edges: unseparated(self.g, &self.bip, &tight),
        })
    }

    /// Union of two tight sets on one side whose neighbourhoods meet and
    /// whose union is proper; the union is checked to be tight again.
    pub fn uncross(&self, u: VertexSet, v: VertexSet, side: Side) -> Result<VertexSet> {
        let own = self.bip.side(side);
        if !is_tight(self.g, &self.bip, u, side) || !is_tight(self.g, &self.bip, v, side) {
            return contract(format!("uncross inputs {u:?}, {v:?} must be tight on {side:?}"));
        }
        let w = u | v;
        if w == own {
            return contract(format!("union {w:?} is the whole side"));
        }
        if !self.g.neighborhood(u).intersects(self.g.neighborhood(v)) {
            return contract(format!("neighbourhoods of {u:?} and {v:?} are disjoint"));
        }
        if !is_tight(self.g, &self.bip, w, side) {
            return contract(format!(
                "uncrossing {u:?} and {v:?} gave δ = {}",
                self.g.neighborhood(w).len() as i64 - w.len() as i64
            ));
        }
        Ok(w)
    }

    /// `S = (other side) \ N(T)` for a tight acceptable `T`, checked to be
    /// tight acceptable with `N(S) = (own side) \ T`.
    pub fn mirror_tight_set(&self, t: &AcceptableSet) -> Result<AcceptableSet> {
        let own = self.bip.side(t.side);
        let other = t.side.other();
        if !t.is_tight() || !is_acceptable(self.g, &self.bip, t.members, t.side) {
            return contract(format!("{:?} is not tight acceptable", t.members));
        }
        let s = self.bip.side(other) - t.neighborhood;
        let mirrored = AcceptableSet::new(self.g, other, s);
        if mirrored.neighborhood != own - t.members
            || !mirrored.is_tight()
            || !is_acceptable(self.g, &self.bip, s, other)
        {
            return contract(format!("mirror {s:?} of {:?} is not tight acceptable", t.members));
        }
        Ok(mirrored)
    }

    /// Prepares the internal tight cover: tight acceptable `Y`-sets, found by
    /// scanning `Y` and by mirroring the tight acceptable `X`-sets.
    pub fn tight_cover(&self, limits: &Limits) -> Result<TightCover<'_, 'g>> {
        let mut y_tight = self.tight_acceptable(Side::Y, limits)?;
        for t in self.tight_acceptable(Side::X, limits)? {
            y_tight.push(self.mirror_tight_set(&t)?);
        }
        y_tight.sort_by_key(|s| s.members);
        y_tight.dedup_by_key(|s| s.members);
        Ok(TightCover {
            block: self,
            y_tight,
        })
    }
}

fn unseparated(g: &Graph, bip: &Bipartition, tight: &[AcceptableSet]) -> Vec<(usize, usize)> {
    cross_non_edges(g, bip)
        .into_iter()
        .filter(|&(x, y)| !tight.iter().any(|t| t.separates(x, y)))
        .collect()
}

/// Internal tight cover of acceptable `X`-sets, under the hypothesis that
/// every cross non-edge `(x, y)` has a tight `S ⊆ Y` with `y ∈ S` and
/// `x ∉ N(S)`.
pub struct TightCover<'b, 'g> {
    block: &'b McBlock<'g>,
    y_tight: Vec<AcceptableSet>,
}

impl<'b, 'g> TightCover<'b, 'g> {
    /// Tight acceptable `Y`-sets in encoding order.
    pub fn y_tight(&self) -> &[AcceptableSet] {
        &self.y_tight
    }

    /// The smallest-encoded tight `S ⊆ Y` with `y ∈ S` and `x ∉ N(S)`.
    pub fn witness(&self, x: usize, y: usize) -> Option<&AcceptableSet> {
        self.y_tight.iter().find(|s| s.separates(y, x))
    }

    pub fn hypothesis_holds(&self) -> bool {
        cross_non_edges(self.block.g, &self.block.bip)
            .into_iter()
            .all(|(x, y)| self.witness(x, y).is_some())
    }

    /// A tight `R_x ⊆ A` containing `x`.
    ///
    /// With `D = N(A)`, `B = X \ A`, `C = Y \ D`: the witnesses `S_y` for
    /// `y ∈ C` are uncrossed into a tight `U ⊇ C` with `x ∉ N(U)`, and
    /// `R_x = A \ N(U \ C)`.
    pub fn internal_tight_cover(&self, a: &AcceptableSet, x: usize) -> Result<VertexSet> {
        let g = self.block.g;
        let bip = &self.block.bip;
        if a.side != Side::X || !is_acceptable(g, bip, a.members, Side::X) {
            return contract(format!("{:?} is not an acceptable X-set", a.members));
        }
        if !a.members.contains(x) {
            return contract(format!("vertex {x} is not in {:?}", a.members));
        }
        let c = bip.y - a.neighborhood;
        if c.is_empty() {
            return contract(format!("{:?} has N(A) = Y", a.members));
        }
        let mut witnesses = Vec::with_capacity(c.len());
        for y in c {
            match self.witness(x, y) {
                Some(s) => witnesses.push((y, s.members)),
                None => {
                    return contract(format!(
                        "no tight Y-set separates the non-edge ({x}, {y})"
                    ))
                }
            }
        }
        let mut u = witnesses[0].1;
        while !c.is_subset(u) {
            let nu = g.neighborhood(u);
            let next = witnesses
                .iter()
                .find(|(y, s)| !u.contains(*y) && g.neighborhood(*s).intersects(nu));
            match next {
                Some(&(_, s)) => u = self.block.uncross(u, s, Side::Y)?,
                None => {
                    return contract(format!(
                        "no witness meets N({u:?}) while covering {c:?}"
                    ))
                }
            }
        }
        debug_assert!(!g.neighborhood(u).contains(x));
        let p = u - c;
        let q = g.neighborhood(p) & a.members;
        let r = a.members - q;
        if !r.contains(x) || !r.is_subset(a.members) || !is_tight(g, bip, r, Side::X) {
            return contract(format!(
                "internal tight cover of {x} in {:?} gave non-tight {r:?}",
                a.members
            ));
        }
        Ok(r)
    }

    /// Uncrosses the covers `R_x`, `x ∈ A`, back into `A`, which comes out
    /// tight.
    pub fn assemble(&self, a: &AcceptableSet) -> Result<VertexSet> {
        let g = self.block.g;
        let covers: Vec<VertexSet> = a
            .members
            .iter()
            .map(|x| self.internal_tight_cover(a, x))
            .collect::<Result<_>>()?;
        let mut w = covers[0];
        while w != a.members {
            let nw = g.neighborhood(w);
            let next = covers
                .iter()
                .find(|r| !r.is_subset(w) && g.neighborhood(**r).intersects(nw));
            match next {
                Some(&r) => w = self.block.uncross(w, r, Side::X)?,
                None => return contract(format!("covers of {:?} do not chain", a.members)),
            }
        }
        Ok(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    // C6 as cycle(6): x1=0, y1=1, x2=2, y2=3, x3=4, y3=5
    fn c6() -> (Graph, Bipartition) {
        let g = cycle(6);
        let b = g.bipartition().unwrap();
        (g, b)
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn acceptable_examples() {
        let (g, b) = c6();
        assert!(is_acceptable(&g, &b, set(&[0]), Side::X));
        assert!(!is_acceptable(&g, &b, set(&[0, 2]), Side::X));
        let c4 = cycle(4);
        let b4 = c4.bipartition().unwrap();
        assert!(!is_acceptable(&c4, &b4, set(&[0]), Side::X));
        assert!(!is_acceptable(&g, &b, VertexSet::EMPTY, Side::X));
    }

    #[test]
    fn tight_examples() {
        let (g, b) = c6();
        assert!(is_tight(&g, &b, set(&[0]), Side::X));
        let k33 = complete_bipartite(3, 3);
        let bk = k33.bipartition().unwrap();
        assert!(!is_tight(&k33, &bk, set(&[0]), Side::X));
        let q3 = cube();
        let bq = q3.bipartition().unwrap();
        let xs: Vec<usize> = bq.x.iter().collect();
        for skip in 0..4 {
            let t: VertexSet = xs.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
            assert!(is_tight(&q3, &bq, t, Side::X));
        }
    }

    #[test]
    fn enumeration_examples() {
        let (g, b) = c6();
        let all = enumerate_acceptable(&g, &b, Side::X, false, &lim()).unwrap();
        let members: Vec<VertexSet> = all.iter().map(|a| a.members).collect();
        assert_eq!(members, vec![set(&[0]), set(&[2]), set(&[4])]);
        assert!(all.iter().all(AcceptableSet::is_tight));

        let c4 = cycle(4);
        let b4 = c4.bipartition().unwrap();
        assert!(enumerate_acceptable(&c4, &b4, Side::X, false, &lim()).unwrap().is_empty());

        let q3 = cube();
        let bq = q3.bipartition().unwrap();
        assert!(enumerate_acceptable(&q3, &bq, Side::X, true, &lim()).unwrap().is_empty());
        let small = Limits {
            max_side: 3,
            ..lim()
        };
        assert!(matches!(
            enumerate_acceptable(&q3, &bq, Side::X, false, &small),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn separation_examples() {
        let (g, _) = c6();
        let t = AcceptableSet::new(&g, Side::X, set(&[0]));
        assert!(t.separates(0, 3));
        assert!(!t.separates(2, 3));
        assert!(!t.separates(0, 1));
    }

    #[test]
    fn fill_examples() {
        let (g, b) = c6();
        assert!(McBlock::new(&g, b).unwrap().fill_set(&lim()).unwrap().is_empty());
        let k33 = complete_bipartite(3, 3);
        let bk = k33.bipartition().unwrap();
        assert!(McBlock::new(&k33, bk).unwrap().fill_set(&lim()).unwrap().is_empty());
        let q3 = cube();
        let bq = q3.bipartition().unwrap();
        let fill = McBlock::new(&q3, bq).unwrap().fill_set(&lim()).unwrap();
        assert_eq!(fill.non_edges, vec![(0, 7), (3, 4), (5, 2), (6, 1)]);
    }

    #[test]
    fn mc_block_rejects_bad_inputs() {
        let p = path(4);
        let b = p.bipartition().unwrap();
        assert!(McBlock::new(&p, b).is_err());
        let (g, b) = c6();
        assert!(McBlock::new(&g, b.swapped()).is_ok());
        assert!(McBlock::new(&g, Bipartition::new(set(&[0, 1, 2]), set(&[3, 4, 5]))).is_err());
    }

    #[test]
    fn uncross_examples() {
        let (g, b) = c6();
        let blk = McBlock::new(&g, b).unwrap();
        assert_eq!(blk.uncross(set(&[0]), set(&[2]), Side::X).unwrap(), set(&[0, 2]));
        assert_eq!(blk.uncross(set(&[0]), set(&[0]), Side::X).unwrap(), set(&[0]));
        // {x1, x2} and {x3} cover X
        assert!(blk.uncross(set(&[0, 2]), set(&[4]), Side::X).is_err());
        // not tight
        let k33 = complete_bipartite(3, 3);
        let bk = McBlock::new(&k33, k33.bipartition().unwrap()).unwrap();
        assert!(bk.uncross(set(&[0]), set(&[1]), Side::X).is_err());
    }

    #[test]
    fn mirror_examples() {
        let (g, b) = c6();
        let blk = McBlock::new(&g, b).unwrap();
        let t = AcceptableSet::new(&g, Side::X, set(&[0]));
        let s = blk.mirror_tight_set(&t).unwrap();
        assert_eq!(s.members, set(&[3]));
        assert_eq!(s.neighborhood, set(&[2, 4]));
        let t2 = AcceptableSet::new(&g, Side::X, set(&[2]));
        assert_eq!(blk.mirror_tight_set(&t2).unwrap().members, set(&[5]));
        assert_eq!(blk.mirror_tight_set(&s).unwrap(), t);
    }

    #[test]
    fn internal_tight_cover_examples() {
        let (g, b) = c6();
        let blk = McBlock::new(&g, b).unwrap();
        let cover = blk.tight_cover(&lim()).unwrap();
        assert!(cover.hypothesis_holds());
        let a = AcceptableSet::new(&g, Side::X, set(&[0]));
        assert_eq!(cover.internal_tight_cover(&a, 0).unwrap(), set(&[0]));
        assert_eq!(cover.assemble(&a).unwrap(), set(&[0]));
        // not acceptable: N(A) = Y
        let k33 = complete_bipartite(3, 3);
        let bk = McBlock::new(&k33, k33.bipartition().unwrap()).unwrap();
        let kc = bk.tight_cover(&lim()).unwrap();
        let a = AcceptableSet::new(&k33, Side::X, set(&[0, 1]));
        assert!(kc.internal_tight_cover(&a, 0).is_err());
    }

    #[test]
    fn component_separator_examples() {
        let (g, b) = c6();
        let t = component_separator(&g, &b, 0, 3).unwrap();
        assert_eq!(t.members, set(&[0]));
        assert!(component_separator(&g, &b, 0, 1).is_err());

        let q3 = cube();
        let bq = q3.bipartition().unwrap();
        for x in bq.x {
            let t = component_separator(&q3, &bq, x, x ^ 7).unwrap();
            assert_eq!(t.members, VertexSet::single(x));
            assert_eq!(t.delta, 2);
        }
    }
}
