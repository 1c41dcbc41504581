//! Exhaustive enumeration of bipartite graphs on fixed sides
//! `X = 0..nx`, `Y = nx..nx+ny`.
//!
//! [`labeled`] streams every cross-edge subset. [`side_orbits`] streams one
//! graph per orbit of `Sym(X) × Sym(Y)` acting on those subsets, which is
//! what the theorem sweeps use: every property checked there is invariant
//! under relabeling within a side.

use edgering::matching::is_matching_covered;
use edgering::{Bipartition, Graph, VertexSet};

use crate::error::CliError;

/// Largest `nx · ny` for labeled enumeration.
pub const MAX_LABELED_CELLS: usize = 25;
/// Largest `nx · ny` for orbit enumeration.
pub const MAX_ORBIT_CELLS: usize = 36;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Constraints {
    pub connected: bool,
    pub two_connected: bool,
    pub matching_covered: bool,
}

impl Constraints {
    pub const CONNECTED: Constraints = Constraints {
        connected: true,
        two_connected: false,
        matching_covered: false,
    };

    pub fn accepts(&self, g: &Graph, bip: &Bipartition) -> bool {
        if (self.connected || self.matching_covered) && !g.is_connected() {
            return false;
        }
        if self.two_connected && !g.is_two_connected() {
            return false;
        }
        if self.matching_covered && !is_matching_covered(g, bip).unwrap_or(false) {
            return false;
        }
        true
    }
}

pub fn fixed_sides(nx: usize, ny: usize) -> Bipartition {
    Bipartition::new(VertexSet::range(nx), VertexSet::range(nx + ny) - VertexSet::range(nx))
}

fn check_cells(nx: usize, ny: usize, cap: usize) -> Result<(), CliError> {
    if nx * ny > cap {
        return Err(CliError::Capacity(format!(
            "enumeration on sides {nx} x {ny} needs {} cells, limit {cap}",
            nx * ny
        )));
    }
    Ok(())
}

/// All `2^(nx·ny)` graphs on the fixed sides that satisfy `constraints`,
/// in increasing order of the edge-subset encoding (bit `i·ny + j` is the
/// edge `x_i y_j`).
pub fn labeled(
    nx: usize,
    ny: usize,
    constraints: Constraints,
) -> Result<impl Iterator<Item = Graph>, CliError> {
    check_cells(nx, ny, MAX_LABELED_CELLS)?;
    let bip = fixed_sides(nx, ny);
    Ok((0..1u64 << (nx * ny)).filter_map(move |mask| {
        let edges = (0..nx * ny)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| (i / ny, nx + i % ny));
        let g = Graph::new(nx + ny, edges).expect("cross edges on fixed sides");
        constraints.accepts(&g, &bip).then_some(g)
    }))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k % 2 == 0 {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut cur, &mut out);
    out
}

struct OrbitWalk {
    nx: usize,
    ny: usize,
    /// `images[p][row]`: the row mask with `X` relabeled by permutation `p`.
    images: Vec<Vec<u32>>,
    rows: Vec<u32>,
    scratch: Vec<u32>,
}

impl OrbitWalk {
    fn canonical(&mut self) -> bool {
        for image in &self.images[1..] {
            self.scratch.clear();
            self.scratch.extend(self.rows.iter().map(|&r| image[r as usize]));
            self.scratch.sort_unstable();
            if self.scratch < self.rows {
                return false;
            }
        }
        true
    }

    fn walk(&mut self, min_row: u32, out: &mut dyn FnMut(&[u32])) {
        if self.rows.len() == self.ny {
            if self.canonical() {
                out(&self.rows);
            }
            return;
        }
        for r in min_row..1u32 << self.nx {
            self.rows.push(r);
            self.walk(r, out);
            self.rows.pop();
        }
    }
}

/// One representative per orbit of within-side relabelings, in increasing
/// order of the sorted row vector. Rows are the `Y` vertices, each a bit mask
/// of its `X`-neighbours, so the smaller side should be `X`.
pub fn side_orbits(nx: usize, ny: usize, constraints: Constraints) -> Result<Vec<Graph>, CliError> {
    check_cells(nx, ny, MAX_ORBIT_CELLS)?;
    let perms = permutations(nx);
    let images = perms
        .iter()
        .map(|p| {
            (0..1u32 << nx)
                .map(|r| (0..nx).filter(|&i| r >> i & 1 == 1).map(|i| 1 << p[i]).sum())
                .collect()
        })
        .collect();
    let mut walk = OrbitWalk {
        nx,
        ny,
        images,
        rows: Vec::with_capacity(ny),
        scratch: Vec::with_capacity(ny),
    };
    let bip = fixed_sides(nx, ny);
    let mut out = Vec::new();
    walk.walk(0, &mut |rows| {
        let edges = rows
            .iter()
            .enumerate()
            .flat_map(|(j, &r)| (0..nx).filter(move |&i| r >> i & 1 == 1).map(move |i| (i, nx + j)));
        let g = Graph::new(nx + ny, edges).expect("cross edges on fixed sides");
        if constraints.accepts(&g, &bip) {
            out.push(g);
        }
    });
    Ok(out)
}

/// Side-orbit representatives of all graphs with `1 ≤ nx ≤ ny` and
/// `nx + ny ≤ max_order`, paired with their fixed-side bipartitions.
pub fn orbit_family(
    max_order: usize,
    constraints: Constraints,
) -> Result<Vec<(Graph, Bipartition)>, CliError> {
    let mut out = Vec::new();
    for total in 2..=max_order {
        for nx in 1..=total / 2 {
            let ny = total - nx;
            let bip = fixed_sides(nx, ny);
            out.extend(side_orbits(nx, ny, constraints)?.into_iter().map(|g| (g, bip)));
        }
    }
    Ok(out)
}

/// Labeled graphs on every pair of sides with `nx + ny ≤ max_order`.
pub fn labeled_family(
    max_order: usize,
    constraints: Constraints,
) -> Result<Vec<(Graph, Bipartition)>, CliError> {
    let mut out = Vec::new();
    for total in 2..=max_order {
        for nx in 1..total {
            let ny = total - nx;
            let bip = fixed_sides(nx, ny);
            out.extend(labeled(nx, ny, constraints)?.map(|g| (g, bip)));
        }
    }
    Ok(out)
}
