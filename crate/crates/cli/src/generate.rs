//! Seeded random bipartite graphs.
//!
//! Every instance draws from its own ChaCha8 stream: the generator is
//! seeded with the user seed and the stream number is the instance index,
//! so results do not depend on scheduling.

use edgering::{Bipartition, Graph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::enumerate::fixed_sides;
use crate::error::CliError;

/// Recorded in reports so that runs can be reproduced.
pub const GENERATOR: &str = "chacha8/rand_chacha-0.3/stream-per-instance";

/// Connectivity resampling budget per instance.
pub const MAX_RETRIES: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Model {
    /// Each cross pair independently with probability `p`.
    ErdosBipartite { nx: usize, ny: usize, p: f64 },
    /// Union of `k` uniform perfect matchings on `X = Y = [n]`.
    MatchingUnion { n: usize, k: usize },
}

impl Model {
    pub fn bipartition(&self) -> Bipartition {
        match *self {
            Model::ErdosBipartite { nx, ny, .. } => fixed_sides(nx, ny),
            Model::MatchingUnion { n, .. } => fixed_sides(n, n),
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            Model::ErdosBipartite { nx, ny, .. } => nx + ny,
            Model::MatchingUnion { n, .. } => 2 * n,
        }
    }
}

pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn sample(model: &Model, rng: &mut ChaCha8Rng) -> Result<Graph, CliError> {
    let edges: Vec<(usize, usize)> = match *model {
        Model::ErdosBipartite { nx, ny, p } => {
            let mut e = Vec::new();
            for x in 0..nx {
                for y in 0..ny {
                    if rng.gen_bool(p) {
                        e.push((x, nx + y));
                    }
                }
            }
            e
        }
        Model::MatchingUnion { n, k } => {
            let mut e = Vec::with_capacity(n * k);
            let mut perm: Vec<usize> = (0..n).collect();
            for _ in 0..k {
                perm.shuffle(rng);
                e.extend(perm.iter().enumerate().map(|(x, &y)| (x, n + y)));
            }
            e
        }
    };
    Ok(Graph::new(model.order(), edges)?)
}

/// A connected sample of `model`, resampling up to [`MAX_RETRIES`] times.
pub fn generate(model: &Model, rng: &mut ChaCha8Rng) -> Result<Graph, CliError> {
    match *model {
        Model::ErdosBipartite { nx, ny, p } if nx == 0 || ny == 0 || !(0.0..=1.0).contains(&p) => {
            return Err(CliError::Usage(format!("invalid erdos-bipartite parameters {nx}, {ny}, {p}")))
        }
        Model::MatchingUnion { n, k } if n == 0 || k == 0 => {
            return Err(CliError::Usage(format!("invalid matching-union parameters {n}, {k}")))
        }
        _ => {}
    }
    for _ in 0..MAX_RETRIES {
        let g = sample(model, rng)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(CliError::Generation(format!(
        "{model:?}: no connected sample in {MAX_RETRIES} attempts"
    )))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelKind {
    ErdosBipartite,
    MatchingUnion,
    /// Alternates by instance index, starting with matching-union.
    Mixed,
}

impl std::str::FromStr for ModelKind {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "erdos-bipartite" => Ok(ModelKind::ErdosBipartite),
            "matching-union" => Ok(ModelKind::MatchingUnion),
            "mixed" => Ok(ModelKind::Mixed),
            other => Err(CliError::Usage(format!("unknown model {other:?}"))),
        }
    }
}

/// Parameter ranges for sweeps; `None` fields are drawn per instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomFamily {
    pub kind: ModelKind,
    /// Largest side size drawn.
    pub max_side: usize,
    pub nx: Option<usize>,
    pub ny: Option<usize>,
    pub p: Option<f64>,
    pub n: Option<usize>,
    pub k: Option<usize>,
}

impl RandomFamily {
    pub fn new(kind: ModelKind) -> Self {
        RandomFamily {
            kind,
            max_side: 7,
            nx: None,
            ny: None,
            p: None,
            n: None,
            k: None,
        }
    }

    /// Draws parameters and a connected graph for instance `index`.
    /// Sides are drawn from `1..=max_side` (`2..=max_side` for matching
    /// unions), `p` from `[0.25, 0.75)` and `k` from `2..=4`. When some
    /// parameter is drawn and the model yields no connected sample, the
    /// parameters are drawn again from the same stream.
    pub fn instance(&self, seed: u64, index: u64) -> Result<(Model, Graph), CliError> {
        let mut rng = instance_rng(seed, index);
        let kind = match self.kind {
            ModelKind::Mixed if index % 2 == 0 => ModelKind::MatchingUnion,
            ModelKind::Mixed => ModelKind::ErdosBipartite,
            k => k,
        };
        let fixed = match kind {
            ModelKind::MatchingUnion => self.n.is_some() && self.k.is_some(),
            _ => self.nx.is_some() && self.ny.is_some() && self.p.is_some(),
        };
        let top = self.max_side.max(2);
        let mut last = None;
        for _ in 0..MAX_PARAMETER_DRAWS {
            let model = match kind {
                ModelKind::MatchingUnion => Model::MatchingUnion {
                    n: self.n.unwrap_or_else(|| rng.gen_range(2..=top)),
                    k: self.k.unwrap_or_else(|| rng.gen_range(2..=4)),
                },
                _ => Model::ErdosBipartite {
                    nx: self.nx.unwrap_or_else(|| rng.gen_range(1..=top)),
                    ny: self.ny.unwrap_or_else(|| rng.gen_range(1..=top)),
                    p: self.p.unwrap_or_else(|| rng.gen_range(0.25..0.75)),
                },
            };
            match generate(&model, &mut rng) {
                Ok(g) => return Ok((model, g)),
                Err(e @ CliError::Generation(_)) if !fixed => last = Some(e),
                Err(e) => return Err(e),
            }
        }
        Err(last.unwrap_or_else(|| CliError::Generation("no parameters drawn".into())))
    }
}

/// Parameter redraws per instance when some parameter is random.
pub const MAX_PARAMETER_DRAWS: usize = 100;
