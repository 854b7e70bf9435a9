use std::time::Instant;

use clap::{Args, ValueEnum};
use exdef_core::blockgraph::blockgraph_chi;
use exdef_core::cactus::cactus_chi2;
use exdef_core::graph::random::{random_block_graph, random_cactus};
use serde::Serialize;

use crate::{Failure, EXIT_OK};

#[derive(Clone, Copy, ValueEnum)]
pub enum BenchAlgorithm {
    Cactus,
    Blockgraph,
}

#[derive(Args)]
pub struct BenchArgs {
    #[arg(long, value_enum, default_value = "cactus")]
    algorithm: BenchAlgorithm,
    /// Comma-separated vertex counts.
    #[arg(long, value_delimiter = ',', default_values_t = [250, 500, 1000, 2000])]
    sizes: Vec<usize>,
    /// Instances per size.
    #[arg(long, default_value_t = 50)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Defect for the block graph solver.
    #[arg(long, default_value_t = 1)]
    d: usize,
}

#[derive(Serialize)]
struct Row {
    n: usize,
    count: usize,
    mean_ms: f64,
    max_ms: f64,
}

pub fn run(args: &BenchArgs) -> Result<u8, Failure> {
    if args.count == 0 || args.sizes.is_empty() {
        return Err(Failure::usage("need --count >= 1 and at least one size"));
    }
    eprintln!("seed: {}", args.seed);
    let mut points = Vec::new();
    for &n in &args.sizes {
        let mut total = 0.0;
        let mut max: f64 = 0.0;
        for i in 0..args.count {
            let seed = args
                .seed
                .wrapping_add((n as u64) << 32)
                .wrapping_add(i as u64);
            let ms = match args.algorithm {
                BenchAlgorithm::Cactus => {
                    let g = random_cactus(n, 0.2, 6, seed);
                    let start = Instant::now();
                    cactus_chi2(&g)?;
                    start.elapsed().as_secs_f64() * 1e3
                }
                BenchAlgorithm::Blockgraph => {
                    let g = random_block_graph(n, 4, seed);
                    let start = Instant::now();
                    blockgraph_chi(&g, args.d)?;
                    start.elapsed().as_secs_f64() * 1e3
                }
            };
            total += ms;
            max = max.max(ms);
        }
        let row = Row {
            n,
            count: args.count,
            mean_ms: total / args.count as f64,
            max_ms: max,
        };
        println!("{}", serde_json::to_string(&row).expect("rows serialize"));
        points.push((n as f64, row.mean_ms));
    }
    if let Some(slope) = loglog_slope(&points) {
        println!("{}", serde_json::json!({ "loglog_slope": slope }));
    }
    Ok(EXIT_OK)
}

/// Least-squares slope of `ln(time)` against `ln(n)`.
fn loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = points
        .iter()
        .filter(|p| p.0 > 0.0 && p.1 > 0.0)
        .map(|&(x, y)| (x.ln(), y.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let len = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / len;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / len;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}
