use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use manyrobbers::families::*;
use manyrobbers::io::{parse_graph, to_edge_list, to_graph6};
use manyrobbers::pursuit::{cop_number, extract_cop_strategy, GameTable};
use manyrobbers::scripts::{arena, OptimalCop, OptimalRobbers, Transcript};
use manyrobbers::zero_visibility::{limit_probe, solve_with, zero_vis_cop_number, Schedule};
use manyrobbers::{verify, Graph, GameValue, SolveError, SolverConfig, TeamConfig};

#[derive(Parser)]
#[command(name = "manyrobbers", version, about = "Cops and many robbers: exact capture times and limits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Graph6,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph from a named family.
    Gen {
        /// path, cycle, complete, complete-bipartite, star, wheel,
        /// caterpillar, subdivided-star or h-graph
        family: String,
        /// Family parameters; caterpillar takes one leaf count per spine vertex.
        params: Vec<usize>,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Structural summary: diameter, traps, dismantlability, cop numbers.
    Analyze { graph: String },
    /// Capture time of k cops against m robbers.
    Capt {
        graph: String,
        #[arg(long, default_value_t = 1)]
        cops: usize,
        #[arg(long, default_value_t = 1)]
        robbers: usize,
        /// Fixed cop start, comma separated.
        #[arg(long, value_delimiter = ',')]
        from: Option<Vec<usize>>,
        /// Include one optimal line of play.
        #[arg(long)]
        transcript: bool,
    },
    /// 0-visibility cop number and capture time.
    Zerovis {
        graph: String,
        #[arg(long, default_value_t = 1)]
        cops: usize,
        /// Include a shortest clearing walk.
        #[arg(long)]
        schedule: bool,
    },
    /// capt_k(G, m) for growing m, compared with the 0-visibility time.
    Limit {
        graph: String,
        #[arg(long, default_value_t = 1)]
        cops: usize,
        #[arg(long = "max-m", default_value_t = 8)]
        max_m: usize,
        /// Also write `m,capt` pairs as CSV.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the acceptance battery.
    Verify {
        /// Restrict to these suites.
        #[arg(long = "suite")]
        suites: Vec<String>,
        /// Print the JSON report instead of the summary.
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Usage(String),
    Cap(String),
    Verify,
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::StateCap { .. } => Failure::Cap(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<manyrobbers::GraphError> for Failure {
    fn from(e: manyrobbers::GraphError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn family_graph(family: &str, params: &[usize]) -> Result<Graph, Failure> {
    let want = |count: usize| {
        if params.len() == count {
            Ok(())
        } else {
            Err(Failure::Usage(format!("{family} takes {count} parameter(s), got {}", params.len())))
        }
    };
    let g = match family {
        "path" => want(1).and_then(|_| Ok(path(params[0])?))?,
        "cycle" => want(1).and_then(|_| Ok(cycle(params[0])?))?,
        "complete" => want(1).and_then(|_| Ok(complete(params[0])?))?,
        "complete-bipartite" => want(2).and_then(|_| Ok(complete_bipartite(params[0], params[1])?.0))?,
        "star" => want(1).and_then(|_| Ok(star(params[0])?))?,
        "wheel" => want(1).and_then(|_| Ok(wheel(params[0])?))?,
        "subdivided-star" => want(1).and_then(|_| Ok(subdivided_star(params[0])?))?,
        "h-graph" => want(1).and_then(|_| Ok(h_graph(params[0])?))?,
        "caterpillar" => caterpillar(params.len(), params)?,
        _ => return Err(Failure::Usage(format!("unknown family {family:?}"))),
    };
    Ok(g)
}

/// Inline family specs such as `p5`, `c4`, `k5`, `w6`, `t3`, `h10`,
/// `star4` and `k2,3`.
fn inline_graph(spec: &str) -> Option<Result<Graph, Failure>> {
    let s = spec.to_ascii_lowercase();
    if let Some((a, b)) = s.strip_prefix('k').and_then(|r| r.split_once(',')) {
        let (a, b) = (a.parse().ok()?, b.parse().ok()?);
        return Some(family_graph("complete-bipartite", &[a, b]));
    }
    let split = s.find(|c: char| c.is_ascii_digit())?;
    let (prefix, digits) = s.split_at(split);
    let n: usize = digits.parse().ok()?;
    let family = match prefix {
        "p" => "path",
        "c" => "cycle",
        "k" => "complete",
        "w" => "wheel",
        "t" => "subdivided-star",
        "h" => "h-graph",
        "s" | "star" => "star",
        _ => return None,
    };
    Some(family_graph(family, &[n]))
}

fn load_graph(spec: &str) -> Result<Graph, Failure> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{spec}: {e}")))?;
        let g = parse_graph(&text).map_err(|e| Failure::Usage(format!("{spec}: {e}")))?;
        return Ok(g.with_name(spec));
    }
    inline_graph(spec).unwrap_or_else(|| Err(Failure::Usage(format!("{spec:?} is neither a file nor a family spec"))))
}

fn name_of(g: &Graph) -> String {
    g.name().map(str::to_string).unwrap_or_else(|| to_graph6(g))
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

#[derive(Serialize)]
struct Analysis {
    graph: String,
    n: usize,
    edges: usize,
    diameter: usize,
    traps: Vec<usize>,
    dismantlable: bool,
    two_dismantlable: bool,
    is_tree: bool,
    is_caterpillar: bool,
    cop_number: usize,
    c0: usize,
}

#[derive(Serialize)]
struct CaptResult {
    graph: String,
    k: usize,
    m: usize,
    value: GameValue,
    optimal_starts: Vec<TeamConfig>,
    #[serde(skip_serializing_if = "Option::is_none")]
    transcript: Option<Transcript>,
}

#[derive(Serialize)]
struct ZeroVisResult {
    graph: String,
    k: usize,
    c0: usize,
    time: GameValue,
    strong_k_cop_win: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    schedule: Option<Schedule>,
}

fn capt(g: &Graph, k: usize, m: usize, from: Option<Vec<usize>>, with_transcript: bool) -> Result<(), Failure> {
    let table = GameTable::solve(g, k, m)?;
    let start = from.map(TeamConfig::new);
    if let Some(s) = &start {
        if s.len() != k {
            return Err(Failure::Usage(format!("--from lists {} vertices for {k} cops", s.len())));
        }
    }
    let (value, optimal_starts) = match &start {
        Some(s) => (table.capture_time_from(s, m)?, vec![s.clone()]),
        None => (table.capture_time(), table.optimal_starts(m)?),
    };
    let transcript = if with_transcript && value.is_finite() {
        let policy = extract_cop_strategy(g, k, m)?;
        let mut cop = match start {
            Some(s) => OptimalCop::from_start(&policy, s),
            None => OptimalCop::new(&policy),
        };
        let horizon = value.finite().unwrap_or(0) as usize;
        Some(arena(g, &mut cop, &mut OptimalRobbers::new(&table), m, horizon.max(1)).map_err(|e| Failure::Usage(e.to_string()))?)
    } else {
        None
    };
    print_json(&CaptResult {
        graph: name_of(g),
        k,
        m,
        value,
        optimal_starts,
        transcript,
    });
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Gen { family, params, format, out } => {
            let g = family_graph(&family, &params)?;
            let text = match format {
                Format::Edgelist => to_edge_list(&g),
                Format::Graph6 => to_graph6(&g) + "\n",
            };
            match out {
                Some(p) => write_file(&p, &text)?,
                None => print!("{text}"),
            }
        }
        Command::Analyze { graph } => {
            let g = load_graph(&graph)?;
            print_json(&Analysis {
                graph: name_of(&g),
                n: g.n(),
                edges: g.edge_count(),
                diameter: g.diameter(),
                traps: g.traps(),
                dismantlable: g.is_dismantlable(),
                two_dismantlable: g.is_2_dismantlable(),
                is_tree: g.is_tree(),
                is_caterpillar: g.is_caterpillar(),
                cop_number: cop_number(&g)?,
                c0: zero_vis_cop_number(&g)?,
            });
        }
        Command::Capt { graph, cops, robbers, from, transcript } => {
            let g = load_graph(&graph)?;
            capt(&g, cops, robbers, from, transcript)?;
        }
        Command::Zerovis { graph, cops, schedule } => {
            let g = load_graph(&graph)?;
            let walk = solve_with(&g, cops, &SolverConfig::default())?;
            print_json(&ZeroVisResult {
                graph: name_of(&g),
                k: cops,
                c0: zero_vis_cop_number(&g)?,
                time: walk
                    .as_ref()
                    .map_or(GameValue::RobbersWin, |w| GameValue::Finite(w.rounds() as u32)),
                strong_k_cop_win: walk.is_some(),
                schedule: if schedule { walk } else { None },
            });
        }
        Command::Limit { graph, cops, max_m, out } => {
            let g = load_graph(&graph)?;
            let report = limit_probe(&g, cops, max_m)?;
            if let Some(p) = out {
                write_file(&p, &report.to_csv())?;
            }
            print_json(&report);
        }
        Command::Verify { suites, json } => {
            let names: Vec<&str> = suites.iter().map(String::as_str).collect();
            let report = verify::run(&names)?;
            if json {
                print_json(&report);
            } else {
                print!("{}", report.to_human());
            }
            if !report.passed {
                return Err(Failure::Verify);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
