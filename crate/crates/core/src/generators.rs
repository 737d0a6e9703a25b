//! Random graph models: Erdős–Rényi G(n, p) and Barabási–Albert growth.

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphBuilder};
use crate::rng::{stream, Stream};

#[derive(Debug, Error, PartialEq)]
pub enum GeneratorError {
    #[error("n must be positive")]
    EmptyGraph,
    #[error("mean degree must lie in [0, n) for n = {n}, got {mean_degree}")]
    MeanDegree { n: usize, mean_degree: f64 },
    #[error("Barabási–Albert needs n > m >= 1, got n = {n}, m = {m}")]
    Attachment { n: usize, m: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "lowercase")]
pub enum GeneratorSpec {
    Er {
        n: usize,
        mean_degree: f64,
        seed: u64,
    },
    Ba {
        n: usize,
        m: usize,
        seed: u64,
    },
}

impl GeneratorSpec {
    pub fn generate(&self) -> Result<Graph, GeneratorError> {
        match *self {
            GeneratorSpec::Er {
                n,
                mean_degree,
                seed,
            } => erdos_renyi(n, mean_degree, seed),
            GeneratorSpec::Ba { n, m, seed } => barabasi_albert(n, m, seed),
        }
    }
}

/// G(n, p) with `p = mean_degree / (n - 1)`.
///
/// Pairs are visited in lexicographic order, skipping ahead by geometrically
/// distributed gaps, which includes each pair independently with probability p
/// in O(n + e) time.
pub fn erdos_renyi(n: usize, mean_degree: f64, seed: u64) -> Result<Graph, GeneratorError> {
    if n == 0 {
        return Err(GeneratorError::EmptyGraph);
    }
    if !(mean_degree >= 0.0 && mean_degree < n as f64) {
        return Err(GeneratorError::MeanDegree { n, mean_degree });
    }
    if n == 1 || mean_degree == 0.0 {
        return Ok(Graph::empty(n));
    }
    let p = mean_degree / (n - 1) as f64;
    let mut rng = stream(seed, Stream::Generator, 0);
    let mut builder = GraphBuilder::new(n);

    if p >= 1.0 {
        for i in 0..n {
            for j in i + 1..n {
                builder.add_edge(i, j);
            }
        }
        return Ok(builder.build().0);
    }

    let log_q = (1.0 - p).ln();
    // Pair (v, w) with w < v; walk pairs row by row.
    let mut v: usize = 1;
    let mut w: i64 = -1;
    while v < n {
        let r: f64 = rng.random();
        let skip = ((1.0 - r).ln() / log_q).floor();
        w += 1 + skip.min(i64::MAX as f64 / 2.0) as i64;
        while w >= v as i64 && v < n {
            w -= v as i64;
            v += 1;
        }
        if v < n {
            builder.add_edge(v, w as usize);
        }
    }
    Ok(builder.build().0)
}

/// Preferential attachment growth from a complete seed graph on `m + 1`
/// vertices. Each new vertex links to `m` distinct existing vertices chosen
/// with probability proportional to their current degree.
pub fn barabasi_albert(n: usize, m: usize, seed: u64) -> Result<Graph, GeneratorError> {
    if m == 0 || n <= m {
        return Err(GeneratorError::Attachment { n, m });
    }
    let mut rng = stream(seed, Stream::Generator, 1);
    let mut builder = GraphBuilder::new(n);
    // Every edge endpoint once; sampling uniformly from it is degree-proportional.
    let mut endpoints: Vec<usize> = Vec::with_capacity(2 * m * n);

    for i in 0..=m {
        for j in i + 1..=m {
            builder.add_edge(i, j);
            endpoints.extend([i, j]);
        }
    }

    let mut targets: Vec<usize> = Vec::with_capacity(m);
    for v in m + 1..n {
        targets.clear();
        while targets.len() < m {
            let candidate = endpoints[rng.random_range(0..endpoints.len())];
            if !targets.contains(&candidate) {
                targets.push(candidate);
            }
        }
        for &t in &targets {
            builder.add_edge(v, t);
            endpoints.extend([v, t]);
        }
    }
    Ok(builder.build().0)
}
