//! Analysis reports: a key-sorted JSON document or aligned text.
//!
//! Vertex labels in reports are 1-based, matching graph files.

use std::time::Instant;

use edgering::classify::{block_product_check, classify, edge_ring_h_vector, verify_main_theorem, HFlags};
use edgering::closure::gorenstein_closure;
use edgering::{Bipartition, Graph, HVector, Limits, VertexSet};
use serde::Serialize;

use crate::error::CliError;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct InputEcho {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SidesOut {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CensusOut {
    pub x_acceptable: usize,
    pub x_tight: usize,
    pub y_acceptable: usize,
    pub y_tight: usize,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct BlockOut {
    pub vertices: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
    pub single_edge: bool,
    pub matching_covered: bool,
    pub hvector: Vec<i64>,
    pub acceptable: Option<CensusOut>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct HOut {
    pub coefficients: Vec<i64>,
    pub degree: usize,
    pub krull_dim: usize,
    pub leading_is_one: bool,
    pub h1_equals_next_to_leading: bool,
    pub palindromic: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ClassificationOut {
    pub pseudo_gorenstein: bool,
    pub gorenstein_combinatorial: bool,
    pub gorenstein_palindromic: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct FillOut {
    pub block: usize,
    pub non_edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ClosureOut {
    pub added_edges: Vec<[usize; 2]>,
    pub hvector: Vec<i64>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CheckOut {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Report {
    pub input: InputEcho,
    pub bipartition: Option<SidesOut>,
    pub blocks: Option<Vec<BlockOut>>,
    pub hvector: HOut,
    pub classification: Option<ClassificationOut>,
    pub fill: Option<Vec<FillOut>>,
    pub closure: Option<ClosureOut>,
    pub checks: Vec<CheckOut>,
    pub version: String,
}

impl Report {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Pretty JSON with keys sorted at every level.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        let mut s = serde_json::to_string_pretty(&value).expect("value serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut rows: Vec<(String, String)> = vec![
            ("vertices".into(), self.input.vertices.to_string()),
            ("edges".into(), self.input.edges.len().to_string()),
        ];
        if let Some(b) = &self.bipartition {
            rows.push(("X".into(), list(&b.x)));
            rows.push(("Y".into(), list(&b.y)));
        }
        if let Some(blocks) = &self.blocks {
            rows.push(("blocks".into(), blocks.len().to_string()));
        }
        let h = &self.hvector;
        rows.push(("h-vector".into(), numbers(&h.coefficients)));
        rows.push(("krull dimension".into(), h.krull_dim.to_string()));
        rows.push(("h_s = 1".into(), h.leading_is_one.to_string()));
        rows.push(("h_1 = h_(s-1)".into(), h.h1_equals_next_to_leading.to_string()));
        rows.push(("palindromic".into(), h.palindromic.to_string()));
        if let Some(c) = &self.classification {
            rows.push(("pseudo-Gorenstein".into(), c.pseudo_gorenstein.to_string()));
            rows.push(("Gorenstein (sets)".into(), c.gorenstein_combinatorial.to_string()));
            rows.push(("Gorenstein (h)".into(), c.gorenstein_palindromic.to_string()));
        }
        if let Some(fill) = &self.fill {
            let n: usize = fill.iter().map(|f| f.non_edges.len()).sum();
            rows.push(("fill size".into(), n.to_string()));
        }
        if let Some(c) = &self.closure {
            rows.push(("closure h-vector".into(), numbers(&c.hvector)));
            rows.push(("closure adds".into(), pairs(&c.added_edges)));
        }
        for c in &self.checks {
            let mut v = if c.passed { "pass".to_string() } else { "FAIL".to_string() };
            if let Some(ms) = c.millis {
                v.push_str(&format!(" ({ms} ms)"));
            }
            if let Some(d) = &c.detail {
                v.push_str(&format!(": {d}"));
            }
            rows.push((format!("check {}", c.name), v));
        }
        rows.push(("version".into(), self.version.clone()));
        let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
        rows.iter()
            .map(|(k, v)| format!("{k:<width$}  {v}\n"))
            .collect()
    }
}

fn numbers(v: &[i64]) -> String {
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

fn list(v: &[usize]) -> String {
    format!("{{{}}}", v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "))
}

fn pairs(v: &[[usize; 2]]) -> String {
    if v.is_empty() {
        return "none".into();
    }
    v.iter().map(|[a, b]| format!("{a}-{b}")).collect::<Vec<_>>().join(" ")
}

fn one_based(s: VertexSet) -> Vec<usize> {
    s.iter().map(|v| v + 1).collect()
}

fn edge_out(&(u, v): &(usize, usize)) -> [usize; 2] {
    [u + 1, v + 1]
}

fn h_out(h: &HVector) -> HOut {
    let flags = HFlags::of(h);
    HOut {
        coefficients: h.coefficients().to_vec(),
        degree: h.degree(),
        krull_dim: h.krull_dim(),
        leading_is_one: flags.leading_is_one,
        h1_equals_next_to_leading: flags.h1_equals_next_to_leading,
        palindromic: flags.palindromic,
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct AnalyzeOptions {
    pub limits: Limits,
    pub hilbert_only: bool,
    pub timings: bool,
}

struct Checks {
    timings: bool,
    out: Vec<CheckOut>,
}

impl Checks {
    fn run(&mut self, name: &str, f: impl FnOnce() -> Result<Result<(), String>, CliError>) -> Result<(), CliError> {
        let start = Instant::now();
        let verdict = f()?;
        let millis = self.timings.then(|| start.elapsed().as_millis() as u64);
        self.out.push(CheckOut {
            name: name.to_string(),
            passed: verdict.is_ok(),
            detail: verdict.err(),
            millis,
        });
        Ok(())
    }
}

fn expect(ok: bool, detail: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

/// `|E| - |V| + c` over the vertices that carry edges, `c` the number of
/// components with an edge: the sum of the per-component values of `h_1`.
fn cycle_rank(g: &Graph) -> i64 {
    let comps = g.connected_components().iter().filter(|c| c.len() > 1).count();
    g.size() as i64 - g.non_isolated().len() as i64 + comps as i64
}

/// The full pipeline on one graph.
pub fn analyze(g: &Graph, opts: &AnalyzeOptions) -> Result<Report, CliError> {
    let limits = &opts.limits;
    let input = InputEcho {
        vertices: g.order(),
        edges: g.edges().iter().map(edge_out).collect(),
    };
    let mut checks = Checks {
        timings: opts.timings,
        out: Vec::new(),
    };
    if opts.hilbert_only {
        let h = edge_ring_h_vector(g, limits)?;
        return Ok(Report {
            input,
            bipartition: None,
            blocks: None,
            hvector: h_out(&h),
            classification: None,
            fill: None,
            closure: None,
            checks: checks.out,
            version: VERSION.to_string(),
        });
    }
    let bip: Bipartition = g.bipartition().ok_or(CliError::NotBipartite)?;
    let c = classify(g, &bip, limits)?;
    let h = c.hvec.clone();

    checks.run("combinatorial-equals-palindromic", || {
        Ok(expect(c.gorenstein_combinatorial == c.gorenstein_palindromic, || {
            format!(
                "acceptable-set test says {}, h-vector says {}",
                c.gorenstein_combinatorial, c.gorenstein_palindromic
            )
        }))
    })?;
    checks.run("leading-one-iff-matching-covered-blocks", || {
        Ok(expect((h.leading() == 1) == c.pseudo_gorenstein, || {
            format!("h_s = {}, pseudo-Gorenstein = {}", h.leading(), c.pseudo_gorenstein)
        }))
    })?;
    checks.run("h1-cycle-rank", || {
        let rank = cycle_rank(g);
        Ok(expect(h.get(1) == rank, || format!("h_1 = {}, cycle rank {rank}", h.get(1))))
    })?;
    checks.run("block-product", || {
        Ok(expect(block_product_check(g, &bip, limits)?, || {
            "h-vector differs from the product over blocks".into()
        }))
    })?;
    checks.run("palindromicity-criterion", || {
        let v = verify_main_theorem(g, &bip, limits)?;
        Ok(expect(!v.is_counterexample(), || {
            format!("h_s = 1 and h_1 = h_(s-1) but not Gorenstein: {:?}", v.hvec.coefficients())
        }))
    })?;

    let (fill, closure) = if c.pseudo_gorenstein {
        let mut result = None;
        checks.run("closure", || match gorenstein_closure(g, &bip, limits) {
            Ok(r) => {
                result = Some(r);
                Ok(Ok(()))
            }
            Err(edgering::Error::Contract(msg)) => Ok(Err(msg)),
            Err(e) => Err(e.into()),
        })?;
        match result {
            Some(r) => {
                let fill = r
                    .blocks
                    .iter()
                    .enumerate()
                    .filter(|(_, b)| !b.fill.is_empty())
                    .map(|(i, b)| FillOut {
                        block: i,
                        non_edges: b.fill.non_edges.iter().map(edge_out).collect(),
                    })
                    .collect();
                let closure = ClosureOut {
                    added_edges: r.added_edges().map(|e| edge_out(&e)).collect(),
                    hvector: r.closed_h.coefficients().to_vec(),
                };
                (Some(fill), Some(closure))
            }
            None => (None, None),
        }
    } else {
        (None, None)
    };

    let blocks = c
        .blocks
        .iter()
        .map(|b| BlockOut {
            vertices: one_based(b.vertices),
            edges: b.edges.iter().map(edge_out).collect(),
            single_edge: !b.two_connected,
            matching_covered: b.matching_covered,
            hvector: b.hvec.coefficients().to_vec(),
            acceptable: b.census.map(|c| CensusOut {
                x_acceptable: c.x_acceptable,
                x_tight: c.x_tight,
                y_acceptable: c.y_acceptable,
                y_tight: c.y_tight,
            }),
        })
        .collect();

    Ok(Report {
        input,
        bipartition: Some(SidesOut {
            x: one_based(bip.x),
            y: one_based(bip.y),
        }),
        blocks: Some(blocks),
        hvector: h_out(&h),
        classification: Some(ClassificationOut {
            pseudo_gorenstein: c.pseudo_gorenstein,
            gorenstein_combinatorial: c.gorenstein_combinatorial,
            gorenstein_palindromic: c.gorenstein_palindromic,
        }),
        fill,
        closure,
        checks: checks.out,
        version: VERSION.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use edgering::graph::named::*;

    fn run(g: &Graph) -> Report {
        analyze(g, &AnalyzeOptions::default()).unwrap()
    }

    #[test]
    fn hexagon_report() {
        let r = run(&cycle(6));
        assert_eq!(r.hvector.coefficients, vec![1, 1, 1]);
        let c = r.classification.as_ref().unwrap();
        assert!(c.gorenstein_combinatorial && c.gorenstein_palindromic);
        assert!(r.all_checks_pass());
        assert_eq!(r.closure.as_ref().unwrap().hvector, vec![1, 1, 1]);
        assert!(r.fill.as_ref().unwrap().is_empty());
    }

    #[test]
    fn cube_report() {
        let r = run(&cube());
        assert_eq!(r.hvector.coefficients, vec![1, 5, 9, 1]);
        let fill: usize = r.fill.as_ref().unwrap().iter().map(|f| f.non_edges.len()).sum();
        assert_eq!(fill, 4);
        assert_eq!(r.closure.as_ref().unwrap().hvector, vec![1, 9, 9, 1]);
        assert!(r.all_checks_pass());
    }

    #[test]
    fn petersen_needs_hilbert_only() {
        assert!(matches!(
            analyze(&petersen(), &AnalyzeOptions::default()),
            Err(CliError::NotBipartite)
        ));
        let opts = AnalyzeOptions {
            hilbert_only: true,
            ..AnalyzeOptions::default()
        };
        let r = analyze(&petersen(), &opts).unwrap();
        assert_eq!(r.hvector.coefficients, vec![1, 5, 15, 25, 5, 1]);
        assert!(r.hvector.leading_is_one && r.hvector.h1_equals_next_to_leading && !r.hvector.palindromic);
        let k2 = analyze(&path(2), &opts).unwrap();
        assert_eq!(k2.hvector.coefficients, vec![1]);
    }

    #[test]
    fn json_has_sorted_top_level_keys() {
        let json = run(&cycle(4)).to_json();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(
            keys,
            ["bipartition", "blocks", "checks", "classification", "closure", "fill", "hvector", "input", "version"]
        );
        assert_eq!(json, run(&cycle(4)).to_json());
        assert!(!json.contains("millis"));
    }

    #[test]
    fn non_pseudo_gorenstein_has_no_closure() {
        let r = run(&path(4));
        assert!(r.closure.is_some());
        let r = run(&complete_bipartite(2, 3));
        assert!(r.closure.is_none() && r.fill.is_none());
        assert!(r.all_checks_pass());
    }

    #[test]
    fn text_is_aligned() {
        let text = run(&cycle(6)).to_text();
        let col = |key: &str, value: &str| {
            let line = text.lines().find(|l| l.starts_with(key)).unwrap();
            line.rfind(value).unwrap()
        };
        assert_eq!(col("vertices", "6"), col("h-vector", "1 1 1"));
        assert_eq!(col("vertices", "6"), col("version", VERSION));
    }
}
