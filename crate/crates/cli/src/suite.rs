//! Invariant suites run over graph families.
//!
//! Each [`Theorem`] is a check on one bipartite graph that either passes,
//! is skipped because its precondition does not hold, or fails with a
//! message. Capacity overruns count as skips.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use edgering::classify::{
    block_product_check, classify, is_gorenstein_combinatorial, is_pseudo_gorenstein, verify_main_theorem,
};
use edgering::closure::{gorenstein_closure, verify_closure_minimality};
use edgering::facets::{component_separator, cross_non_edges, enumerate_acceptable, is_tight, McBlock};
use edgering::graph::delta;
use edgering::hilbert::{h1_formula, h_vector, interior_lattice_points, interior_non_edge_points, LatticePoint};
use edgering::matching::{is_matching_covered, strict_hall_holds};
use edgering::{Bipartition, Graph, HVector, Limits, Side, VertexSet};
use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::{labeled_family, orbit_family, Constraints};
use crate::error::CliError;
use crate::generate::{Model, RandomFamily, GENERATOR};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theorem {
    /// `h_s = 1` and `h_1 = h_{s-1}` imply Gorenstein by both tests.
    Main,
    /// The acceptable-set test agrees with palindromicity on both sides.
    Stanley,
    /// The closure is Gorenstein, keeps `s` and `h_{s-1}`, and adds
    /// `h_{s-1} - h_1` edges per 2-connected block.
    Closure,
    /// Every Gorenstein supergraph contains the closure.
    ClosureMinimality,
    /// Direct h-vector equals the product over at least two blocks.
    BlockProduct,
    /// `h_1 = |E| - d + 1`.
    H1,
    /// `h_s = 1` iff every block is matching-covered.
    LeadingCoefficient,
    /// `h_{s-1} = |int((n+1)P)| - 2n + 1`, interior counts by facets and
    /// by reciprocity agreeing for `k ≤ n + 2`, and `1` the only interior
    /// point of `nP`.
    Penultimate,
    /// `h_{s-1} - h_1` counts the non-edges with `1 + e_x + e_y` interior.
    InteriorGap,
    /// `h_1 = h_{s-1}`, separation of all non-edges by tight `X`-sets and
    /// by tight `Y`-sets agree; the separated non-edges coincide.
    Separation,
    /// All non-edges separated iff every acceptable set is tight; the
    /// component separator is acceptable and separating.
    AcceptableTight,
    /// `|N(A)| ≥ |A| + 1` for proper non-empty subsets of either side.
    StrictHall,
    /// Unions of tight sets with meeting neighbourhoods stay tight.
    Uncross,
    /// The internal tight cover succeeds and reassembles every acceptable
    /// set.
    TightCover,
}

impl Theorem {
    pub const ALL: [Theorem; 14] = [
        Theorem::Main,
        Theorem::Stanley,
        Theorem::Closure,
        Theorem::ClosureMinimality,
        Theorem::BlockProduct,
        Theorem::H1,
        Theorem::LeadingCoefficient,
        Theorem::Penultimate,
        Theorem::InteriorGap,
        Theorem::Separation,
        Theorem::AcceptableTight,
        Theorem::StrictHall,
        Theorem::Uncross,
        Theorem::TightCover,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Main => "main",
            Theorem::Stanley => "stanley",
            Theorem::Closure => "closure",
            Theorem::ClosureMinimality => "closure-minimality",
            Theorem::BlockProduct => "block-product",
            Theorem::H1 => "h1",
            Theorem::LeadingCoefficient => "leading-coefficient",
            Theorem::Penultimate => "penultimate",
            Theorem::InteriorGap => "interior-gap",
            Theorem::Separation => "separation",
            Theorem::AcceptableTight => "acceptable-tight",
            Theorem::StrictHall => "strict-hall",
            Theorem::Uncross => "uncross",
            Theorem::TightCover => "tight-cover",
        }
    }

    /// A theorem name or `all`.
    pub fn parse_selection(s: &str) -> Result<Vec<Theorem>, CliError> {
        if s == "all" {
            return Ok(Theorem::ALL.to_vec());
        }
        s.split(',').map(|t| t.trim().parse()).collect()
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| CliError::Usage(format!("unknown theorem {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Skip(String),
    Fail(String),
}

type Check = Result<Outcome, edgering::Error>;

fn fail(msg: impl Into<String>) -> Check {
    Ok(Outcome::Fail(msg.into()))
}

fn skip(msg: impl Into<String>) -> Check {
    Ok(Outcome::Skip(msg.into()))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    Ok(if ok { Outcome::Pass } else { Outcome::Fail(msg()) })
}

fn hv(g: &Graph, limits: &Limits) -> Result<HVector, edgering::Error> {
    h_vector(g, &limits.hilbert_options())
}

fn mc_block<'g>(g: &'g Graph, bip: &Bipartition) -> Result<Option<McBlock<'g>>, edgering::Error> {
    if !g.is_two_connected() || !is_matching_covered(g, bip)? {
        return Ok(None);
    }
    McBlock::new(g, *bip).map(Some)
}

const NOT_MC_BLOCK: &str = "not 2-connected and matching-covered";

/// Non-edges `(x, y)` separated by some tight acceptable set on `side`.
fn separated(g: &Graph, bip: &Bipartition, side: Side, limits: &Limits) -> Result<Vec<(usize, usize)>, edgering::Error> {
    let tight = enumerate_acceptable(g, bip, side, true, limits)?;
    Ok(cross_non_edges(g, bip)
        .into_iter()
        .filter(|&(x, y)| {
            tight.iter().any(|t| match side {
                Side::X => t.separates(x, y),
                Side::Y => t.separates(y, x),
            })
        })
        .collect())
}

/// All non-empty subsets of one side with `δ = 1`.
fn tight_subsets(g: &Graph, bip: &Bipartition, side: Side, limits: &Limits) -> Result<Vec<VertexSet>, edgering::Error> {
    let own = bip.side(side);
    if own.len() > limits.max_side {
        return Err(edgering::Error::Capacity {
            what: "subset enumeration side size",
            limit: limits.max_side,
            needed: own.len(),
        });
    }
    Ok((1..1u64 << own.len())
        .map(|m| own.select(m))
        .filter(|&t| is_tight(g, bip, t, side))
        .collect())
}

fn run_check(th: Theorem, g: &Graph, bip: &Bipartition, limits: &Limits) -> Check {
    match th {
        Theorem::Main => {
            let v = verify_main_theorem(g, bip, limits)?;
            if !v.hypothesis_holds {
                return skip("hypothesis does not hold");
            }
            ensure(v.conclusion_holds, || format!("not Gorenstein with h = {:?}", v.hvec.coefficients()))
        }
        Theorem::Stanley => {
            let c = classify(g, bip, limits)?;
            let swapped = is_gorenstein_combinatorial(g, &bip.swapped(), limits)?;
            ensure(
                c.gorenstein_combinatorial == c.gorenstein_palindromic && swapped == c.gorenstein_palindromic,
                || {
                    format!(
                        "X-sets {}, Y-sets {swapped}, palindromic {} for h = {:?}",
                        c.gorenstein_combinatorial,
                        c.gorenstein_palindromic,
                        c.hvec.coefficients()
                    )
                },
            )
        }
        Theorem::Closure => {
            if !is_pseudo_gorenstein(g, bip)? {
                return skip("not pseudo-Gorenstein");
            }
            let r = match gorenstein_closure(g, bip, limits) {
                Ok(r) => r,
                Err(edgering::Error::Contract(msg)) => return fail(msg),
                Err(e) => return Err(e),
            };
            if !g.edges().iter().all(|&(u, v)| r.closed_graph.has_edge(u, v)) {
                return fail("closure dropped an edge");
            }
            for b in &r.blocks {
                if b.fill.non_edges.iter().any(|&(x, y)| !b.vertices.contains(x) || !b.vertices.contains(y)) {
                    return fail(format!("fill of block {:?} leaves the block", b.vertices));
                }
                if let Some(h) = &b.original_h {
                    let gap = h.next_to_leading().unwrap_or(0) - h.get(1);
                    if b.fill.len() as i64 != gap {
                        return fail(format!("|Fill| = {} but h_(s-1) - h_1 = {gap}", b.fill.len()));
                    }
                    if !b.closed_two_connected_matching_covered {
                        return fail(format!("filled block {:?} lost 2-connectivity or matching coverage", b.vertices));
                    }
                }
            }
            Ok(Outcome::Pass)
        }
        Theorem::ClosureMinimality => {
            if mc_block(g, bip)?.is_none() {
                return skip(NOT_MC_BLOCK);
            }
            let missing = cross_non_edges(g, bip).len();
            if missing > limits.max_missing_edges {
                return skip(format!("{missing} missing cross edges"));
            }
            ensure(verify_closure_minimality(g, bip, limits)?, || {
                "a Gorenstein supergraph misses part of the fill".into()
            })
        }
        Theorem::BlockProduct => {
            if g.blocks().len() < 2 {
                return skip("fewer than two blocks");
            }
            ensure(block_product_check(g, bip, limits)?, || "product over blocks differs".into())
        }
        Theorem::H1 => {
            if g.size() < 2 || !g.is_connected() {
                return skip("needs a connected graph with two edges");
            }
            let h = hv(g, limits)?;
            ensure(h.get(1) == h1_formula(g), || format!("h_1 = {}, formula {}", h.get(1), h1_formula(g)))
        }
        Theorem::LeadingCoefficient => {
            let h = hv(g, limits)?;
            let pg = is_pseudo_gorenstein(g, bip)?;
            ensure((h.leading() == 1) == pg, || format!("h_s = {}, pseudo-Gorenstein {pg}", h.leading()))
        }
        Theorem::Penultimate => {
            let Some(block) = mc_block(g, bip)? else {
                return skip(NOT_MC_BLOCK);
            };
            let n = block.half_order();
            let h = hv(g, limits)?;
            if h.degree() != n - 1 || h.leading() != 1 {
                return fail(format!("s = {}, h_s = {} with n = {n}", h.degree(), h.leading()));
            }
            for k in 1..=n + 2 {
                let facet = interior_lattice_points(g, bip, k, limits)?.len() as i64;
                let recip = h.interior_count(k)?;
                if facet != recip {
                    return fail(format!("k = {k}: {facet} interior points by facets, {recip} by reciprocity"));
                }
            }
            let at_n = interior_lattice_points(g, bip, n, limits)?;
            if at_n != [LatticePoint::all_ones(2 * n)] {
                return fail(format!("interior of nP has {} points", at_n.len()));
            }
            let count = h.interior_count(n + 1)?;
            let expect = count - 2 * n as i64 + 1;
            ensure(h.next_to_leading() == Some(expect), || {
                format!("h_(s-1) = {:?}, interior count gives {expect}", h.next_to_leading())
            })
        }
        Theorem::InteriorGap => {
            let Some(block) = mc_block(g, bip)? else {
                return skip(NOT_MC_BLOCK);
            };
            let h = hv(g, limits)?;
            let n = block.half_order();
            let points = interior_non_edge_points(&block, limits)?;
            let gap = h.next_to_leading().unwrap_or(0) - h.get(1);
            if points.len() as i64 != gap {
                return fail(format!("{} interior non-edge points, h_(s-1) - h_1 = {gap}", points.len()));
            }
            let interior = interior_lattice_points(g, bip, n + 1, limits)?.len();
            ensure(interior == g.size() + points.len(), || {
                format!("int((n+1)P) has {interior} points, |E| + gap = {}", g.size() + points.len())
            })
        }
        Theorem::Separation => {
            let Some(block) = mc_block(g, bip)? else {
                return skip(NOT_MC_BLOCK);
            };
            let h = hv(g, limits)?;
            let all = cross_non_edges(g, bip);
            let by_x = separated(g, bip, Side::X, limits)?;
            let by_y = separated(g, bip, Side::Y, limits)?;
            let i = h.get(1) == h.next_to_leading().unwrap_or(0);
            let ii = by_x.len() == all.len();
            let iii = by_y.len() == all.len();
            if !(i == ii && ii == iii) {
                return fail(format!("h_1 = h_(s-1): {i}, X-separated: {ii}, Y-separated: {iii}"));
            }
            if by_x != by_y {
                return fail(format!("X separates {by_x:?}, Y separates {by_y:?}"));
            }
            let fill = block.fill_set(limits)?;
            ensure(fill.is_empty() == ii, || format!("fill {:?} with all separated = {ii}", fill.non_edges))
        }
        Theorem::AcceptableTight => {
            if mc_block(g, bip)?.is_none() {
                return skip(NOT_MC_BLOCK);
            }
            let all = cross_non_edges(g, bip);
            for &(x, y) in &all {
                let t = match component_separator(g, bip, x, y) {
                    Ok(t) => t,
                    Err(edgering::Error::Contract(msg)) => return fail(msg),
                    Err(e) => return Err(e),
                };
                if !t.separates(x, y) {
                    return fail(format!("component separator of ({x}, {y}) does not separate"));
                }
            }
            let separated_all = separated(g, bip, Side::X, limits)?.len() == all.len();
            let mut all_tight = true;
            for side in [Side::X, Side::Y] {
                all_tight &= enumerate_acceptable(g, bip, side, false, limits)?
                    .iter()
                    .all(|t| t.is_tight());
            }
            ensure(separated_all == all_tight, || {
                format!("all non-edges X-separated: {separated_all}, all acceptable sets tight: {all_tight}")
            })
        }
        Theorem::StrictHall => {
            if mc_block(g, bip)?.is_none() {
                return skip(NOT_MC_BLOCK);
            }
            ensure(strict_hall_holds(g, bip, limits)?, || "strict Hall condition fails".into())
        }
        Theorem::Uncross => {
            let Some(block) = mc_block(g, bip)? else {
                return skip(NOT_MC_BLOCK);
            };
            for side in [Side::X, Side::Y] {
                let own = bip.side(side);
                let tight = tight_subsets(g, bip, side, limits)?;
                for (i, &u) in tight.iter().enumerate() {
                    for &v in &tight[i..] {
                        if (u | v) == own || !g.neighborhood(u).intersects(g.neighborhood(v)) {
                            continue;
                        }
                        match block.uncross(u, v, side) {
                            Ok(w) if delta(g, bip, w)? == 1 => {}
                            Ok(w) => return fail(format!("union {w:?} is not tight")),
                            Err(edgering::Error::Contract(msg)) => return fail(msg),
                            Err(e) => return Err(e),
                        }
                    }
                }
            }
            Ok(Outcome::Pass)
        }
        Theorem::TightCover => {
            let Some(block) = mc_block(g, bip)? else {
                return skip(NOT_MC_BLOCK);
            };
            let cover = block.tight_cover(limits)?;
            if !cover.hypothesis_holds() {
                return skip("some non-edge has no tight Y-witness");
            }
            for a in enumerate_acceptable(g, bip, Side::X, false, limits)? {
                for x in a.members {
                    let r = match cover.internal_tight_cover(&a, x) {
                        Ok(r) => r,
                        Err(edgering::Error::Contract(msg)) => return fail(msg),
                        Err(e) => return Err(e),
                    };
                    if !r.contains(x) || !r.is_subset(a.members) || delta(g, bip, r)? != 1 {
                        return fail(format!("cover {r:?} of {x} in {:?} is invalid", a.members));
                    }
                }
                match cover.assemble(&a) {
                    Ok(w) if w == a.members => {}
                    Ok(w) => return fail(format!("assembled {w:?} instead of {:?}", a.members)),
                    Err(edgering::Error::Contract(msg)) => return fail(msg),
                    Err(e) => return Err(e),
                }
            }
            Ok(Outcome::Pass)
        }
    }
}

/// Runs one check, turning capacity overruns into skips and other library
/// errors into failures.
pub fn check(th: Theorem, g: &Graph, bip: &Bipartition, limits: &Limits) -> Outcome {
    match run_check(th, g, bip, limits) {
        Ok(o) => o,
        Err(e @ (edgering::Error::Capacity { .. } | edgering::Error::MemoryBudget { .. })) => {
            Outcome::Skip(e.to_string())
        }
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// Connected graphs with `nx + ny ≤ max_order`: one per within-side
    /// relabeling orbit, or every labeled graph.
    Exhaustive { max_order: usize, labeled: bool },
    Random { trials: u64, seed: u64, family: RandomFamily },
}

impl Family {
    pub fn describe(&self) -> String {
        match self {
            Family::Exhaustive { max_order, labeled } => format!(
                "connected bipartite graphs with nx + ny <= {max_order} ({})",
                if *labeled { "labeled" } else { "one per side-relabeling orbit" }
            ),
            Family::Random { trials, seed, family } => {
                format!("{trials} random graphs, model {:?}, seed {seed}, generator {GENERATOR}", family.kind)
            }
        }
    }
}

pub struct Instance {
    pub label: String,
    pub graph: Graph,
    pub bip: Bipartition,
}

fn describe_model(m: &Model) -> String {
    match *m {
        Model::ErdosBipartite { nx, ny, p } => format!("erdos-bipartite({nx}, {ny}, {p:.3})"),
        Model::MatchingUnion { n, k } => format!("matching-union({n}, {k})"),
    }
}

#[derive(Debug, Clone, Default, Serialize, PartialEq, Eq)]
pub struct Tally {
    pub checked: usize,
    pub skipped: usize,
    pub failed: usize,
    /// The first few failures, as `instance: message`.
    pub failures: Vec<String>,
}

const KEPT_FAILURES: usize = 10;

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Summary {
    pub family: String,
    pub instances: usize,
    /// Random instances that could not be generated; counted as skipped
    /// for every theorem.
    pub generation_failures: usize,
    pub tallies: BTreeMap<String, Tally>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Summary {
    pub fn failed(&self) -> usize {
        self.tallies.values().map(|t| t.failed).sum()
    }

    pub fn tally(&self, th: Theorem) -> &Tally {
        &self.tallies[th.name()]
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "family     {}\ninstances  {}\n",
            self.family, self.instances
        );
        if self.generation_failures > 0 {
            out.push_str(&format!("generation failures  {}\n", self.generation_failures));
        }
        let width = self.tallies.keys().map(|k| k.len()).max().unwrap_or(0);
        for (name, t) in &self.tallies {
            out.push_str(&format!(
                "{name:<width$}  checked {:>7}  skipped {:>7}  failed {:>5}\n",
                t.checked, t.skipped, t.failed
            ));
            for f in &t.failures {
                out.push_str(&format!("  {f}\n"));
            }
        }
        out
    }
}

fn exhaustive_instances(max_order: usize, labeled: bool) -> Result<Vec<Instance>, CliError> {
    let graphs = if labeled {
        labeled_family(max_order, Constraints::CONNECTED)?
    } else {
        orbit_family(max_order, Constraints::CONNECTED)?
    };
    Ok(graphs
        .into_iter()
        .enumerate()
        .map(|(i, (graph, bip))| Instance {
            label: format!("#{i} {}x{} {:?}", bip.x.len(), bip.y.len(), graph.edges()),
            graph,
            bip,
        })
        .collect())
}

/// Runs `theorems` on every member of `family`. Instances are processed in
/// parallel and merged in input order.
pub fn run(family: &Family, theorems: &[Theorem], limits: &Limits) -> Result<Summary, CliError> {
    let start = Instant::now();
    let evaluate = |inst: &Instance| -> Vec<Outcome> {
        theorems.iter().map(|&t| check(t, &inst.graph, &inst.bip, limits)).collect()
    };
    let results: Vec<(String, Result<Vec<Outcome>, String>)> = match family {
        Family::Exhaustive { max_order, labeled } => exhaustive_instances(*max_order, *labeled)?
            .par_iter()
            .map(|inst| (inst.label.clone(), Ok(evaluate(inst))))
            .collect(),
        Family::Random { trials, seed, family } => (0..*trials)
            .into_par_iter()
            .map(|i| match family.instance(*seed, i) {
                Ok((model, graph)) => {
                    let inst = Instance {
                        label: format!("#{i} {} {:?}", describe_model(&model), graph.edges()),
                        bip: model.bipartition(),
                        graph,
                    };
                    (inst.label.clone(), Ok(evaluate(&inst)))
                }
                Err(e) => (format!("#{i}"), Err(e.to_string())),
            })
            .collect(),
    };
    let mut tallies: BTreeMap<String, Tally> =
        theorems.iter().map(|t| (t.name().to_string(), Tally::default())).collect();
    let mut generation_failures = 0;
    for (label, outcome) in &results {
        match outcome {
            Ok(outcomes) => {
                for (t, o) in theorems.iter().zip(outcomes) {
                    let tally = tallies.get_mut(t.name()).expect("tally exists");
                    match o {
                        Outcome::Pass => tally.checked += 1,
                        Outcome::Skip(_) => tally.skipped += 1,
                        Outcome::Fail(msg) => {
                            tally.checked += 1;
                            tally.failed += 1;
                            if tally.failures.len() < KEPT_FAILURES {
                                tally.failures.push(format!("{label}: {msg}"));
                            }
                        }
                    }
                }
            }
            Err(_) => {
                generation_failures += 1;
                for t in tallies.values_mut() {
                    t.skipped += 1;
                }
            }
        }
    }
    Ok(Summary {
        family: family.describe(),
        instances: results.len(),
        generation_failures,
        tallies,
        elapsed: start.elapsed(),
    })
}
