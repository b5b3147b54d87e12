//! Command-line front door: parse inputs, run the pipelines, emit JSON
//! verdicts and CSV traces.
//!
//! Exit codes: 0 when a decision was reached (including no-transfer), 2
//! when the certifier came back inconclusive, 1 on input or usage errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use pgst_core::certify::{certify, CertifyOptions, Conclusion};
use pgst_core::dynamics::{fidelity_trace, format_sig17, search_transfer_time};
use pgst_core::graph::{parse_graph, Graph, Potential};
use pgst_core::involution::{
    decompose, enumerate_involutions, parse_involution, verify_involution, InvolutionInfo,
};
use pgst_core::paths::{path_coprimality_check, path_plus_minus, path_spectrum};
use pgst_core::spectral::eigendecompose;

#[derive(Parser)]
#[command(
    name = "pgst",
    about = "Pretty good quantum state transfer on graphs with an involution",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide the transfer conditions for a vertex pair across an involution
    Certify(CertifyArgs),
    /// Evolve the walk and trace the transfer fidelity over time
    Simulate(SimulateArgs),
    /// List all involutions of a small graph
    Involutions(InvolutionsArgs),
    /// Export the H+/H- block decomposition
    Decompose(DecomposeArgs),
    /// Closed-form path machinery: block factors, spectra, coprimality
    PathDemo(PathDemoArgs),
}

#[derive(Args)]
struct CertifyArgs {
    /// Graph JSON document ({"n", "edges", "potential"})
    #[arg(long)]
    input: PathBuf,
    /// Start vertex (1-indexed); the target is its image under sigma
    #[arg(long)]
    u: usize,
    /// Involution: "auto", an inline JSON array, or a file with {"sigma": [...]}
    #[arg(long, default_value = "auto")]
    sigma: String,
    /// Decimal digits of working precision
    #[arg(long, default_value_t = 60)]
    precision: u32,
    /// Max coefficient magnitude in the relation search
    #[arg(long, default_value_t = 50)]
    height_bound: u64,
    /// Write the verdict JSON here (also printed to stdout)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SimulateArgs {
    #[arg(long)]
    input: PathBuf,
    /// Source vertex (1-indexed)
    #[arg(long, default_value_t = 1)]
    u: usize,
    /// Target vertex (1-indexed); defaults to the last vertex
    #[arg(long)]
    v: Option<usize>,
    #[arg(long, default_value_t = 60)]
    precision: u32,
    /// Transfer is declared reached at fidelity 1 - epsilon
    #[arg(long, default_value_t = 0.01)]
    epsilon: f64,
    #[arg(long, default_value_t = 1000.0)]
    t_max: f64,
    /// Write the fidelity CSV here (also printed without --out)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct InvolutionsArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DecomposeArgs {
    #[arg(long)]
    input: PathBuf,
    /// Involution: inline JSON array or a file with {"sigma": [...]}
    #[arg(long)]
    sigma: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PathDemoArgs {
    /// Path length (number of vertices)
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 60)]
    precision: u32,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Certify(args) => cmd_certify(args),
        Command::Simulate(args) => cmd_simulate(args),
        Command::Involutions(args) => cmd_involutions(args),
        Command::Decompose(args) => cmd_decompose(args),
        Command::PathDemo(args) => cmd_path_demo(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn load_graph(path: &Path) -> Result<(Graph, Potential)> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(parse_graph(&text)?)
}

/// "auto", an inline JSON array like "[4,5,6,1,2,3]", or a path to a JSON
/// file holding {"sigma": [...]}.
fn resolve_sigma(selector: &str, g: &Graph, u: Option<usize>) -> Result<InvolutionInfo> {
    if selector == "auto" {
        let u = u.ok_or_else(|| anyhow!("auto involution needs --u"))?;
        let all = enumerate_involutions(g)?;
        let moving: Vec<InvolutionInfo> =
            all.into_iter().filter(|inv| !inv.is_fixed(u - 1)).collect();
        return match moving.len() {
            0 => bail!("no involution moves vertex v{u}"),
            1 => Ok(moving.into_iter().next().unwrap()),
            n => {
                let images: Vec<String> = moving
                    .iter()
                    .map(|inv| format!("{:?}", inv.sigma_one_indexed()))
                    .collect();
                bail!(
                    "{n} involutions move vertex v{u}; pass one explicitly via --sigma: {}",
                    images.join(" ")
                )
            }
        };
    }
    if selector.trim_start().starts_with('[') {
        let perm: Vec<usize> =
            serde_json::from_str(selector).context("parsing inline sigma array")?;
        return Ok(verify_involution(g, &perm)?);
    }
    let text =
        fs::read_to_string(selector).with_context(|| format!("reading sigma file {selector}"))?;
    Ok(parse_involution(&text, g)?)
}

fn write_output(out: &Option<PathBuf>, content: &str, echo: bool) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, content).with_context(|| format!("writing {}", path.display()))?;
            Ok(())
        }
        None => {
            if echo {
                println!("{content}");
            }
            Ok(())
        }
    }
}

/// Run configuration sidecar next to a data file; data files themselves
/// stay byte-deterministic.
fn write_sidecar(out: &Option<PathBuf>, config: serde_json::Value) -> Result<()> {
    if let Some(path) = out {
        let mut sidecar = path.clone();
        let name = sidecar
            .file_name()
            .map(|f| f.to_string_lossy().to_string())
            .unwrap_or_default();
        sidecar.set_file_name(format!("{name}.run.json"));
        fs::write(&sidecar, serde_json::to_string_pretty(&config)?)?;
    }
    Ok(())
}

fn cmd_certify(args: CertifyArgs) -> Result<u8> {
    let (g, q) = load_graph(&args.input)?;
    let inv = resolve_sigma(&args.sigma, &g, Some(args.u))?;
    let opts = CertifyOptions {
        precision_digits: args.precision,
        height_bound: args.height_bound,
    };
    let report = certify(&g, &inv, &q, args.u, &opts)?;
    let verdict_json = serde_json::to_string_pretty(&report.verdict.to_json())?;
    println!("{verdict_json}");
    if args.out.is_some() {
        write_output(&args.out, &verdict_json, false)?;
        write_sidecar(
            &args.out,
            serde_json::json!({
                "command": "certify",
                "input": args.input.display().to_string(),
                "u": args.u,
                "sigma": inv.sigma_one_indexed(),
                "precision": args.precision,
                "height_bound": args.height_bound,
            }),
        )?;
    }
    Ok(match report.verdict.conclusion {
        Conclusion::Inconclusive => 2,
        _ => 0,
    })
}

fn cmd_simulate(args: SimulateArgs) -> Result<u8> {
    let (g, q) = load_graph(&args.input)?;
    if q.has_symbolic() {
        bail!("simulate needs a concrete potential; substitute a rational value for Q");
    }
    let n = g.vertex_count();
    let u = args.u;
    let v = args.v.unwrap_or(n);
    for w in [u, v] {
        if w < 1 || w > n {
            bail!("vertex v{w} outside 1..={n}");
        }
    }
    let h = pgst_core::graph::build_hamiltonian(&g, &q)?;
    let s = eigendecompose(&h, args.precision)?;
    let spread = {
        let lo = s.eigenvalues().first().unwrap().to_f64();
        let hi = s.eigenvalues().last().unwrap().to_f64();
        (hi - lo).abs()
    };
    let step = if spread > 1e-9 {
        std::f64::consts::PI / (4.0 * spread)
    } else {
        args.t_max / 1024.0
    };
    let count = (args.t_max / step).ceil() as usize;
    let grid: Vec<f64> = (0..=count)
        .map(|k| (k as f64) * step)
        .take_while(|&t| t <= args.t_max)
        .collect();
    let trace = fidelity_trace(&s, u - 1, v - 1, &grid)?;
    let search = search_transfer_time(&s, u - 1, v - 1, args.epsilon, args.t_max);
    let csv = trace.to_csv();
    write_output(&args.out, &csv, true)?;
    write_sidecar(
        &args.out,
        serde_json::json!({
            "command": "simulate",
            "input": args.input.display().to_string(),
            "u": u,
            "v": v,
            "precision": args.precision,
            "epsilon": args.epsilon,
            "t_max": args.t_max,
        }),
    )?;
    println!(
        "best t={} fidelity={}{}",
        format_sig17(search.t),
        format_sig17(search.fidelity),
        if search.reached_threshold {
            " (threshold reached)"
        } else {
            ""
        }
    );
    Ok(0)
}

fn cmd_involutions(args: InvolutionsArgs) -> Result<u8> {
    let (g, _) = load_graph(&args.input)?;
    let all = enumerate_involutions(&g)?;
    let doc = serde_json::json!({
        "count": all.len(),
        "involutions": all
            .iter()
            .map(|inv| serde_json::json!({
                "sigma": inv.sigma_one_indexed(),
                "fixed_vertices": inv.fixed_vertices().iter().map(|v| v + 1).collect::<Vec<_>>(),
                "fixed_edges": inv.fixed_edge_count(),
                "side_size": inv.side_size(),
            }))
            .collect::<Vec<_>>(),
    });
    let text = serde_json::to_string_pretty(&doc)?;
    println!("{text}");
    if args.out.is_some() {
        write_output(&args.out, &text, false)?;
    }
    Ok(0)
}

fn cmd_decompose(args: DecomposeArgs) -> Result<u8> {
    let (g, q) = load_graph(&args.input)?;
    let inv = resolve_sigma(&args.sigma, &g, None)?;
    let h = pgst_core::graph::build_hamiltonian(&g, &q)?;
    let bd = decompose(&h, &inv)?;
    let text = serde_json::to_string_pretty(&bd.to_json())?;
    println!("{text}");
    if args.out.is_some() {
        write_output(&args.out, &text, false)?;
    }
    Ok(0)
}

fn cmd_path_demo(args: PathDemoArgs) -> Result<u8> {
    if args.n < 2 {
        bail!("need a path on at least 2 vertices");
    }
    let (plus, minus) = path_plus_minus(args.n)?;
    let mut doc = serde_json::json!({
        "N": args.n,
        "p_plus": { "p": plus.p.to_json(), "q": plus.q.to_json() },
        "p_minus": { "p": minus.p.to_json(), "q": minus.q.to_json() },
        "plus_display": format!("({}) - Q*({})", plus.p.to_display_string(), plus.q.to_display_string()),
        "minus_display": format!("({}) - Q*({})", minus.p.to_display_string(), minus.q.to_display_string()),
    });
    if args.n >= 4 {
        let report = path_coprimality_check(args.n)?;
        doc["coprimality"] = report.to_json();
    }
    let spectrum = path_spectrum(args.n.min(64), args.precision);
    doc["spectrum"] = serde_json::json!(spectrum
        .iter()
        .map(|ev| serde_json::json!({
            "value": ev.value.to_decimal_string(args.precision),
            "k": ev.k,
            "denom": ev.denom,
        }))
        .collect::<Vec<_>>());
    let text = serde_json::to_string_pretty(&doc)?;
    println!("{text}");
    if args.out.is_some() {
        write_output(&args.out, &text, false)?;
    }
    Ok(0)
}
