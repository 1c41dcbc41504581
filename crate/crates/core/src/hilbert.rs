//! Hilbert functions of edge rings by lattice-point dynamic programming.
//!
//! Degree-`k` monomials of `k[G]` are the distinct sums of `k` edge vectors
//! `e_u + e_v`. Layer `k + 1` is the deduplicated union of layer `k` shifted
//! by every edge vector. Points are packed into one integer with a fixed
//! number of bits per coordinate; no coordinate in layer `k` exceeds `k`, so
//! shifting never carries and each shifted layer stays sorted. That lets the
//! union be built by merging sorted runs instead of hashing.

use crate::error::{contract, Error, Result};
use crate::facets::{enumerate_acceptable, AcceptableSet, McBlock};
use crate::graph::{Bipartition, Graph, Side};
use crate::limits::Limits;
use crate::poly::{cast, numerator_coefficients, Coefficient, HPolynomial};

/// A point of `Z^d`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint(pub Vec<i64>);

impl LatticePoint {
    pub fn all_ones(d: usize) -> Self {
        LatticePoint(vec![1; d])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// `Σ_{N(T)} p - Σ_T p`, the linear form of the facet of acceptable `T`.
    pub fn facet_value(&self, t: &AcceptableSet) -> i64 {
        let plus: i64 = t.neighborhood.iter().map(|v| self.0[v]).sum();
        let minus: i64 = t.members.iter().map(|v| self.0[v]).sum();
        plus - minus
    }
}

trait Packed: Copy + Ord + Send + Sync + 'static {
    fn zero() -> Self;
    fn unit(shift: u32) -> Self;
    fn plus(self, other: Self) -> Self;
    fn field(self, shift: u32, width: u32) -> u64;
}

impl Packed for u64 {
    fn zero() -> Self {
        0
    }
    fn unit(shift: u32) -> Self {
        1 << shift
    }
    fn plus(self, other: Self) -> Self {
        self + other
    }
    fn field(self, shift: u32, width: u32) -> u64 {
        (self >> shift) & ((1 << width) - 1)
    }
}

impl Packed for u128 {
    fn zero() -> Self {
        0
    }
    fn unit(shift: u32) -> Self {
        1 << shift
    }
    fn plus(self, other: Self) -> Self {
        self + other
    }
    fn field(self, shift: u32, width: u32) -> u64 {
        ((self >> shift) & ((1 << width) - 1)) as u64
    }
}

/// Union of two sorted, duplicate-free runs.
fn merge_dedup<K: Packed>(a: &[K], b: &[K], out: &mut Vec<K>) {
    out.clear();
    out.reserve(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let (x, y) = (a[i], b[j]);
        if x < y {
            out.push(x);
            i += 1;
        } else if y < x {
            out.push(y);
            j += 1;
        } else {
            out.push(x);
            i += 1;
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
}

/// Union of `layer + shift_a` and `layer + shift_b`.
fn merge_shifted<K: Packed>(layer: &[K], sa: K, sb: K) -> Vec<K> {
    let mut out = Vec::with_capacity(layer.len() * 2);
    let (mut i, mut j) = (0, 0);
    while i < layer.len() && j < layer.len() {
        let (x, y) = (layer[i].plus(sa), layer[j].plus(sb));
        if x < y {
            out.push(x);
            i += 1;
        } else if y < x {
            out.push(y);
            j += 1;
        } else {
            out.push(x);
            i += 1;
            j += 1;
        }
    }
    out.extend(layer[i..].iter().map(|&p| p.plus(sa)));
    out.extend(layer[j..].iter().map(|&p| p.plus(sb)));
    out
}

struct Layers<K> {
    order: usize,
    width: u32,
    levels: Vec<Vec<K>>,
    peak_bytes: usize,
}

impl<K: Packed> Layers<K> {
    fn build(g: &Graph, max_degree: usize, budget: usize) -> Result<Self> {
        let width = bit_width(max_degree);
        let shifts: Vec<K> = g
            .edges()
            .iter()
            .map(|&(u, v)| K::unit(u as u32 * width).plus(K::unit(v as u32 * width)))
            .collect();
        let unit = std::mem::size_of::<K>();
        let mut levels: Vec<Vec<K>> = vec![vec![K::zero()]];
        let mut held = unit;
        let mut peak = held;
        for k in 0..max_degree {
            let cur = &levels[k];
            let next = if shifts.is_empty() {
                Vec::new()
            } else {
                // the first merge round holds at most every shifted copy
                let needed = held + cur.len() * shifts.len() * unit;
                if needed > budget {
                    return Err(Error::MemoryBudget {
                        reached_degree: k,
                        limit: budget,
                        needed,
                    });
                }
                peak = peak.max(needed);
                let mut runs: Vec<Vec<K>> = shifts
                    .chunks(2)
                    .map(|pair| match pair {
                        [a, b] => merge_shifted(cur, *a, *b),
                        [a] => cur.iter().map(|&p| p.plus(*a)).collect(),
                        _ => unreachable!(),
                    })
                    .collect();
                let mut scratch = Vec::new();
                while runs.len() > 1 {
                    let mut merged = Vec::with_capacity(runs.len().div_ceil(2));
                    let mut it = runs.into_iter();
                    while let Some(a) = it.next() {
                        match it.next() {
                            Some(b) => {
                                merge_dedup(&a, &b, &mut scratch);
                                merged.push(std::mem::take(&mut scratch));
                                scratch = a;
                            }
                            None => merged.push(a),
                        }
                    }
                    runs = merged;
                }
                let mut next = runs.pop().unwrap_or_default();
                next.shrink_to_fit();
                next
            };
            held += next.len() * unit;
            peak = peak.max(held);
            levels.push(next);
        }
        Ok(Layers {
            order: g.order(),
            width,
            levels,
            peak_bytes: peak,
        })
    }

    fn unpack(&self, p: K) -> LatticePoint {
        LatticePoint(
            (0..self.order)
                .map(|v| p.field(v as u32 * self.width, self.width) as i64)
                .collect(),
        )
    }

    fn pack(&self, p: &LatticePoint) -> Option<K> {
        let cap = 1i64 << self.width;
        let mut acc = K::zero();
        for (v, &c) in p.0.iter().enumerate() {
            if !(0..cap).contains(&c) {
                return None;
            }
            for _ in 0..c {
                acc = acc.plus(K::unit(v as u32 * self.width));
            }
        }
        Some(acc)
    }
}

fn bit_width(max_degree: usize) -> u32 {
    (usize::BITS - max_degree.leading_zeros()).max(1)
}

enum Storage {
    Narrow(Layers<u64>),
    Wide(Layers<u128>),
}

/// The point sets `{ρ(e_1) + ... + ρ(e_k)}` for `k = 0..=max_degree`.
pub struct LatticeLayers {
    storage: Storage,
}

impl LatticeLayers {
    pub fn build(g: &Graph, max_degree: usize, memory_budget: usize) -> Result<Self> {
        let bits = g.order() as u32 * bit_width(max_degree);
        let storage = if bits <= u64::BITS {
            Storage::Narrow(Layers::build(g, max_degree, memory_budget)?)
        } else if bits <= u128::BITS {
            Storage::Wide(Layers::build(g, max_degree, memory_budget)?)
        } else {
            return Err(Error::Capacity {
                what: "packed lattice point width (bits)",
                limit: u128::BITS as usize,
                needed: bits as usize,
            });
        };
        Ok(LatticeLayers { storage })
    }

    pub fn max_degree(&self) -> usize {
        match &self.storage {
            Storage::Narrow(l) => l.levels.len() - 1,
            Storage::Wide(l) => l.levels.len() - 1,
        }
    }

    /// `|{monomials of degree k}|`.
    pub fn count(&self, k: usize) -> u64 {
        match &self.storage {
            Storage::Narrow(l) => l.levels[k].len() as u64,
            Storage::Wide(l) => l.levels[k].len() as u64,
        }
    }

    pub fn counts(&self) -> Vec<u64> {
        (0..=self.max_degree()).map(|k| self.count(k)).collect()
    }

    pub fn points(&self, k: usize) -> Vec<LatticePoint> {
        match &self.storage {
            Storage::Narrow(l) => l.levels[k].iter().map(|&p| l.unpack(p)).collect(),
            Storage::Wide(l) => l.levels[k].iter().map(|&p| l.unpack(p)).collect(),
        }
    }

    pub fn contains(&self, k: usize, p: &LatticePoint) -> bool {
        match &self.storage {
            Storage::Narrow(l) => l.pack(p).is_some_and(|q| l.levels[k].binary_search(&q).is_ok()),
            Storage::Wide(l) => l.pack(p).is_some_and(|q| l.levels[k].binary_search(&q).is_ok()),
        }
    }

    /// Largest number of bytes held at once while building.
    pub fn peak_bytes(&self) -> usize {
        match &self.storage {
            Storage::Narrow(l) => l.peak_bytes,
            Storage::Wide(l) => l.peak_bytes,
        }
    }
}

/// `dim k[G]_k`: the number of distinct degree-`k` monomials.
pub fn monomial_count(g: &Graph, k: usize, memory_budget: usize) -> Result<u64> {
    Ok(LatticeLayers::build(g, k, memory_budget)?.count(k))
}

/// How many Hilbert function values to compute before reading off the
/// numerator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Window {
    /// Degree bound for bipartite inputs, full window otherwise.
    Auto,
    /// `H(0..=d)`.
    Full,
    /// `H(0..=b + tail)` where `b = min(|X|, |Y|) - 1` bounds the numerator
    /// degree of a connected bipartite graph. Interior points of `kP` have
    /// every coordinate positive, so none exist below `k = max(|X|, |Y|)`.
    DegreeBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HilbertOptions {
    pub window: Window,
    /// Extra numerator coefficients past the degree bound that must vanish.
    pub tail: usize,
    pub memory_budget: usize,
}

impl Default for HilbertOptions {
    fn default() -> Self {
        HilbertOptions {
            window: Window::Auto,
            tail: 1,
            memory_budget: Limits::default().memory_budget,
        }
    }
}

impl HilbertOptions {
    pub fn with_budget(memory_budget: usize) -> Self {
        HilbertOptions {
            memory_budget,
            ..Self::default()
        }
    }
}

/// h-polynomial of `k[G]` for a connected graph with at least one edge.
/// Isolated vertices are ignored. The Krull dimension is `d - 1` for
/// bipartite graphs and `d` otherwise.
pub fn h_vector<T: Coefficient>(g: &Graph, opts: &HilbertOptions) -> Result<HPolynomial<T>> {
    let core = g.induced_subgraph(g.non_isolated()).graph;
    if core.size() == 0 {
        return contract("h-vector needs at least one edge");
    }
    if !core.is_connected() {
        return contract("h-vector needs a connected graph");
    }
    let d = core.order();
    let bip = core.bipartition();
    let krull = if bip.is_some() { d - 1 } else { d };
    let (cap, window) = match (opts.window, bip) {
        (Window::Full, Some(_)) => (d - 2, d),
        (Window::Full | Window::Auto, None) => (d, d),
        (Window::DegreeBound, None) => {
            return contract("degree-bound window needs a bipartite graph");
        }
        (Window::DegreeBound | Window::Auto, Some(b)) => {
            let bound = b.x.len().min(b.y.len()) - 1;
            (bound, bound + opts.tail)
        }
    };
    let layers = LatticeLayers::build(&core, window, opts.memory_budget)?;
    let values: Vec<T> = layers.counts().into_iter().map(cast).collect::<Result<_>>()?;
    let c = numerator_coefficients(&values, krull)?;
    let s = (0..=cap.min(window)).rev().find(|&j| !c[j].is_zero()).unwrap_or(0);
    if let Some(j) = (s + 1..c.len()).find(|&j| !c[j].is_zero()) {
        return Err(Error::Computation(format!(
            "numerator coefficient c_{j} = {} beyond degree bound {cap}",
            c[j]
        )));
    }
    if let Some(j) = (0..c.len()).find(|&j| c[j].is_negative()) {
        return Err(Error::Computation(format!(
            "negative numerator coefficient c_{j} = {}",
            c[j]
        )));
    }
    HPolynomial::new(c[..=s].to_vec(), krull)
}

/// `h_1 = |E| - d + 1` for a connected bipartite graph.
pub fn h1_formula(g: &Graph) -> i64 {
    g.size() as i64 - g.order() as i64 + 1
}

/// Lattice points of `int(kP_G)`: points of the `k`-th layer with every
/// coordinate positive and every acceptable `X`-facet strictly satisfied.
/// Only defined for 2-connected bipartite graphs, where every coordinate
/// hyperplane is a facet.
pub fn interior_lattice_points(
    g: &Graph,
    bip: &Bipartition,
    k: usize,
    limits: &Limits,
) -> Result<Vec<LatticePoint>> {
    if !g.is_two_connected() {
        return contract("interior lattice points need a 2-connected graph");
    }
    let facets = enumerate_acceptable(g, bip, Side::X, false, limits)?;
    let layers = LatticeLayers::build(g, k, limits.memory_budget)?;
    Ok(filter_interior(layers.points(k), &facets))
}

pub(crate) fn filter_interior(
    points: Vec<LatticePoint>,
    facets: &[AcceptableSet],
) -> Vec<LatticePoint> {
    points
        .into_iter()
        .filter(|p| p.0.iter().all(|&c| c >= 1) && facets.iter().all(|t| p.facet_value(t) >= 1))
        .collect()
}

/// Non-edges `(x, y)` with `1 + e_x + e_y` in `int((n+1)P_G)`, decided by
/// the facet inequalities.
pub fn interior_non_edge_points(block: &McBlock<'_>, limits: &Limits) -> Result<Vec<(usize, usize)>> {
    let g = block.graph();
    let bip = block.bipartition();
    let facets = enumerate_acceptable(g, bip, Side::X, false, limits)?;
    let d = g.order();
    let mut out = Vec::new();
    for x in bip.x {
        for y in bip.y - g.neighbors(x) {
            let mut p = LatticePoint::all_ones(d);
            p.0[x] += 1;
            p.0[y] += 1;
            if facets.iter().all(|t| p.facet_value(t) >= 1) {
                out.push((x, y));
            }
        }
    }
    Ok(out)
}
