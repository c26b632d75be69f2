//! Command-line surface: bounds, candidate construction, automorphism
//! analysis, censuses, and the verification suites.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::Zero;
use serde_json::json;

use cubic_aut::arith::{l_of, o_of, verify_section2};
use cubic_aut::autgroup::{
    automorphism_group, classify_minimal_orbit, edge_orbits, m_of, pi_of,
};
use cubic_aut::candidates::{bound, candidate, check_growth, optimal_small, CandidateSpec};
use cubic_aut::enumerate::{enumerate_cubic, mu1_of, mu_of, CENSUS_COUNTS};
use cubic_aut::graph::{emit_dot, emit_graph6, parse_graph6, Graph};

#[derive(Parser)]
#[command(
    name = "cubic-aut",
    about = "Exact automorphism bounds for simple cubic graphs",
    version
)]
struct Cli {
    /// Worker thread count (also honours CUBIC_AUT_WORKERS)
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Graph6,
    Dot,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Sharp upper bound on |Aut G| at the given genus
    Bound {
        genus: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Construct the candidate extremal graph C_g
    Build {
        genus: u64,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
        /// Write C_<g>.g6, C_<g>.dot and C_<g>.json into this directory
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Automorphism group of a graph6 graph (stdin or --file)
    Aut {
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Edge orbits, minimal orbit classification and π of a graph6 graph
    Orbits {
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Stream every connected simple cubic graph on v vertices as graph6
    Enumerate { vertices: usize },
    /// Census summary for v vertices: count, max |Aut|, winners
    Census {
        vertices: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Recompute the small-genus tables and the candidate column
    VerifyTables {
        #[arg(long, default_value = "8")]
        max_genus: u64,
    },
    /// Exhaustive checks of the supporting arithmetic (in)equalities
    VerifyArith {
        #[arg(long, default_value = "10000")]
        max_k: u64,
        #[arg(long, default_value = "100000")]
        max_h: u64,
    },
    /// Growth of |Aut C_g| along the candidate family
    VerifyGrowth {
        #[arg(long, default_value = "200")]
        max_genus: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let workers = cli.workers.or_else(|| {
        std::env::var("CUBIC_AUT_WORKERS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    if let Some(n) = workers {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(cli.command) {
        Ok(ok) => {
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn dec(v: &BigUint) -> String {
    v.to_str_radix(10)
}

/// Reduce big / 2^e to a {num, den} pair of decimal strings.
fn ratio_over_pow2(num: &BigUint, e: u64) -> serde_json::Value {
    let twos = num.trailing_zeros().unwrap_or(0).min(e);
    let n = num.clone() >> twos;
    let d = BigUint::from(1u32) << (e - twos);
    json!({ "num": dec(&n), "den": dec(&d) })
}

fn read_graph(file: &Option<PathBuf>) -> Result<Graph, String> {
    let text = match file {
        Some(path) => std::fs::read_to_string(path).map_err(|e| e.to_string())?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| e.to_string())?;
            buf
        }
    };
    let line = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .ok_or("empty graph6 input")?;
    parse_graph6(line.trim()).map_err(|e| e.to_string())
}

fn spec_json(spec: &CandidateSpec, g6: &str) -> serde_json::Value {
    json!({
        "schema": "cubic-aut/build.v1",
        "genus": spec.genus.to_string(),
        "branch": spec.branch.name(),
        "m": spec.m.map(|v| v.to_string()),
        "p": spec.p.map(|v| v.to_string()),
        "s": spec.s.map(|v| v.to_string()),
        "predicted_aut": dec(&spec.predicted_aut),
        "predicted_coefficient": {
            "num": spec.predicted_coefficient.0.to_string(),
            "den": spec.predicted_coefficient.1.to_string(),
        },
        "predicted_pi": spec.predicted_pi.as_ref().map(dec),
        "graph6": g6,
    })
}

fn run(cmd: Command) -> Result<bool, String> {
    match cmd {
        Command::Bound { genus, format } => {
            let b = bound(genus).map_err(|e| e.to_string())?;
            let o = o_of(genus).map_err(|e| e.to_string())?;
            let l = l_of(genus).map_err(|e| e.to_string())?;
            match format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "schema": "cubic-aut/bound.v1",
                        "genus": genus.to_string(),
                        "bound": dec(&b),
                        "coefficient": ratio_over_pow2(&b, o),
                        "l": l.to_string(),
                        "o": o.to_string(),
                    })
                ),
                _ => {
                    let c = ratio_over_pow2(&b, o);
                    println!(
                        "bound({genus}) = {} = {}/{} * 2^{o}",
                        dec(&b),
                        c["num"].as_str().unwrap(),
                        c["den"].as_str().unwrap()
                    );
                }
            }
            Ok(true)
        }
        Command::Build {
            genus,
            format,
            out_dir,
        } => {
            let (graph, spec) = candidate(genus).map_err(|e| e.to_string())?;
            let g6 = emit_graph6(&graph).map_err(|e| e.to_string())?;
            if let Some(dir) = out_dir {
                std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
                let base = dir.join(format!("C_{genus}"));
                std::fs::write(base.with_extension("g6"), format!("{g6}\n"))
                    .map_err(|e| e.to_string())?;
                std::fs::write(base.with_extension("dot"), emit_dot(&graph))
                    .map_err(|e| e.to_string())?;
                std::fs::write(
                    base.with_extension("json"),
                    format!("{:#}\n", spec_json(&spec, &g6)),
                )
                .map_err(|e| e.to_string())?;
                return Ok(true);
            }
            match format {
                Format::Graph6 => println!("{g6}"),
                Format::Dot => print!("{}", emit_dot(&graph)),
                _ => println!("{}", spec_json(&spec, &g6)),
            }
            Ok(true)
        }
        Command::Aut { file, format } => {
            let graph = read_graph(&file)?;
            let group = automorphism_group(&graph);
            match format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "schema": "cubic-aut/aut.v1",
                        "vertices": graph.vertex_count().to_string(),
                        "genus": graph.genus().to_string(),
                        "order": dec(&group.order),
                        "generators": group.generators.len().to_string(),
                        "vertex_orbits": group.vertex_orbits.len().to_string(),
                        "edge_orbits": group.edge_orbits.len().to_string(),
                    })
                ),
                _ => println!("{}", dec(&group.order)),
            }
            Ok(true)
        }
        Command::Orbits { file, format } => {
            let graph = read_graph(&file)?;
            let orbits = edge_orbits(&graph);
            let class = classify_minimal_orbit(&graph);
            let pi = pi_of(&graph);
            match format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "schema": "cubic-aut/orbits.v1",
                        "edge_orbit_sizes": orbits.iter().map(|o| o.len().to_string()).collect::<Vec<_>>(),
                        "m": m_of(&graph).to_string(),
                        "minimal_orbit_kind": format!("{:?}", class.kind),
                        "pi": dec(&pi),
                    })
                ),
                _ => {
                    println!(
                        "edge orbits: {:?}",
                        orbits.iter().map(|o| o.len()).collect::<Vec<_>>()
                    );
                    println!("M = {}", m_of(&graph));
                    println!("minimal orbit: {:?}", class.kind);
                    println!("pi = {}", dec(&pi));
                }
            }
            Ok(true)
        }
        Command::Enumerate { vertices } => {
            if vertices > 18 {
                eprintln!("warning: v = {vertices} exceeds the tested range (<= 18)");
            }
            let census = enumerate_cubic(vertices).map_err(|e| e.to_string())?;
            for g in &census {
                println!("{}", emit_graph6(g).map_err(|e| e.to_string())?);
            }
            Ok(true)
        }
        Command::Census { vertices, format } => {
            let census = enumerate_cubic(vertices).map_err(|e| e.to_string())?;
            let orders: Vec<BigUint> = census.iter().map(|g| automorphism_group(g).order).collect();
            let max = orders.iter().max().cloned().unwrap_or_else(BigUint::zero);
            let winners: Vec<String> = census
                .iter()
                .zip(&orders)
                .filter(|(_, o)| **o == max)
                .map(|(g, _)| emit_graph6(g).unwrap())
                .collect();
            match format {
                Format::Text => {
                    println!(
                        "v={vertices}: {} graphs, max |Aut| = {}, {} winner(s)",
                        census.len(),
                        dec(&max),
                        winners.len()
                    );
                }
                _ => println!(
                    "{}",
                    json!({
                        "schema": "cubic-aut/census.v1",
                        "v": vertices.to_string(),
                        "count": census.len().to_string(),
                        "max_aut": dec(&max),
                        "winner_graph6": winners,
                    })
                ),
            }
            if let Some(&(_, expected)) = CENSUS_COUNTS.iter().find(|&&(v, _)| v == vertices) {
                if census.len() != expected {
                    eprintln!(
                        "census size {} disagrees with recorded count {expected}",
                        census.len()
                    );
                    return Ok(false);
                }
            }
            Ok(true)
        }
        Command::VerifyTables { max_genus } => {
            if !(3..=10).contains(&max_genus) {
                return Err(format!("max-genus must be in 3..=10, got {max_genus}"));
            }
            let mut ok = true;
            let mut rows = Vec::new();
            for g in 3..=max_genus.min(8) {
                let (max, witnesses) = mu_of(g).map_err(|e| e.to_string())?;
                let (pi, _) = mu1_of(g).map_err(|e| e.to_string())?;
                let o = o_of(g).unwrap();
                let expected = bound(g).unwrap();
                let (named, name) = optimal_small(g).unwrap();
                let named_order = automorphism_group(&named).order;
                let row_ok = max == expected
                    && pi == (BigUint::from(1u32) << o)
                    && named_order == max
                    && !witnesses.is_empty();
                ok &= row_ok;
                rows.push(json!({
                    "genus": g.to_string(),
                    "max_aut": dec(&max),
                    "mu": ratio_over_pow2(&max, o),
                    "mu1": ratio_over_pow2(&pi, o),
                    "optimal": name,
                    "ok": row_ok,
                }));
            }
            // candidate column of the low-genus table
            let column = [384u64, 384, 768, 3072, 3072, 6144, 8192, 32768];
            let mut cand_rows = Vec::new();
            for (g, &want) in (9..=16u64).zip(&column) {
                let (graph, _) = candidate(g).unwrap();
                let got = automorphism_group(&graph).order;
                let row_ok = got == BigUint::from(want);
                ok &= row_ok;
                cand_rows.push(json!({
                    "genus": g.to_string(),
                    "aut": dec(&got),
                    "expected": want.to_string(),
                    "ok": row_ok,
                }));
            }
            println!(
                "{}",
                json!({
                    "schema": "cubic-aut/verify.v1",
                    "suite": "tables",
                    "holds": ok,
                    "mu_table": rows,
                    "candidate_column": cand_rows,
                })
            );
            Ok(ok)
        }
        Command::VerifyArith { max_k, max_h } => {
            if max_k < 16 || max_h < 16 {
                return Err("max-k and max-h must be at least 16".into());
            }
            let reports = verify_section2(max_k, max_h);
            let ok = reports.iter().all(|r| r.holds);
            println!(
                "{}",
                json!({
                    "schema": "cubic-aut/verify.v1",
                    "suite": "arith",
                    "holds": ok,
                    "statements": reports,
                })
            );
            Ok(ok)
        }
        Command::VerifyGrowth { max_genus } => {
            if max_genus < 11 {
                return Err("max-genus must be at least 11".into());
            }
            let report = check_growth(max_genus);
            println!(
                "{}",
                json!({
                    "schema": "cubic-aut/verify.v1",
                    "suite": "growth",
                    "holds": report.matches_expected,
                    "one_step_violations": report.one_step_violations.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                    "expected_exceptions": report.expected_exceptions.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                    "two_step_violations": report.two_step_violations.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                })
            );
            Ok(report.matches_expected)
        }
    }
}
