//! `sva`: signed vertex arboricity tools over JSON graph files.
//!
//! Exit codes: 0 success, 1 check or suite failure, 2 parse error,
//! 3 unbalanced input, 4 not decomposable, 5 oracle cap exceeded, 6 other.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use signed_arboricity::color::{
    tree_color_near_triangulation, tree_color_wagner, ListAssignment,
};
use signed_arboricity::graph::{
    class_subgraph, find_cycle, is_signed_tree_coloring, used_classes, SignedGraph,
};
use signed_arboricity::io::{ColoringFile, DecompositionFile, GraphFile};
use signed_arboricity::k5::{decompose, tree_color_k5_free};
use signed_arboricity::oracle::{
    generate_balanced, generate_triangulation, oracle_va_opts,
};
use signed_arboricity::planar::{planar_embed, NearTriangulation};
use signed_arboricity::props::run_suite;
use signed_arboricity::switch::{balance, switch_set, Balance};
use signed_arboricity::{Error, Result};

#[derive(Parser)]
#[command(name = "sva", version, about = "signed tree-coloring toolkit")]
struct Cli {
    /// Emit machine-readable JSON reports on stdout
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify that a coloring file is a signed tree-coloring of a graph file
    Check {
        graph: PathBuf,
        coloring: PathBuf,
    },
    /// Compute a tree-coloring (triangulation, k5, or wagner mode)
    Color {
        graph: PathBuf,
        #[arg(long, value_parser = ["triangulation", "k5", "wagner"])]
        mode: String,
        /// Lists file (JSON map vertex -> colors); mutually exclusive with --n
        #[arg(long, conflicts_with = "n")]
        lists: Option<PathBuf>,
        /// Uniform color domain M_n for every vertex
        #[arg(long)]
        n: Option<u32>,
        /// Outer face override, comma-separated vertex ids (triangulation mode)
        #[arg(long, value_delimiter = ',')]
        outer: Option<Vec<usize>>,
        /// Decomposition file (k5 mode); computed when absent
        #[arg(long)]
        decomposition: Option<PathBuf>,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Exhaustive minimum: smallest n admitting a tree-n-coloring
    Oracle {
        graph: PathBuf,
        #[arg(long, default_value_t = 4)]
        n_max: u32,
        /// Disable search pruning (slower cross-check mode)
        #[arg(long)]
        no_prune: bool,
    },
    /// Run a seeded property suite
    Property {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Switch a vertex set and write the resulting graph
    Switch {
        graph: PathBuf,
        /// Comma-separated vertex ids to switch
        #[arg(long, value_delimiter = ',')]
        set: Vec<usize>,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Test balance; prints a potential or a negative cycle witness
    Balance { graph: PathBuf },
    /// Decompose into triangulation/Wagner leaves joined on K2/K3 cliques
    Decompose {
        graph: PathBuf,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Generate a seeded balanced signed triangulation with its embedding
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        flips: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// All-positive signature instead of a random balanced one
        #[arg(long)]
        all_positive: bool,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(exit_for(&e))
        }
    }
}

fn exit_for(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => 2,
        Error::NotBalanced => 3,
        Error::NotDecomposable(_) => 4,
        Error::CapExceeded(_) => 5,
        _ => 6,
    }
}

fn read_graph_file(path: &PathBuf) -> Result<GraphFile> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {}", path.display(), e)))?;
    signed_arboricity::io::parse_graph_file(&text)
}

fn write_or_print<T: Serialize>(value: &T, output: &Option<PathBuf>) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Parse(e.to_string()))?;
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::Parse(format!("{}: {}", path.display(), e))),
        None => {
            println!("{}", text);
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct CheckReport {
    valid: bool,
    classes: Vec<ClassReport>,
    cycle_witness: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct ClassReport {
    class: u32,
    vertices: usize,
    edges: usize,
    is_forest: bool,
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Check { graph, coloring } => {
            let g = read_graph_file(graph)?.to_graph()?;
            let text = fs::read_to_string(coloring)
                .map_err(|e| Error::Parse(format!("{}: {}", coloring.display(), e)))?;
            let c = signed_arboricity::io::parse_coloring(&text)?;
            let mut classes = Vec::new();
            let mut witness = None;
            for i in used_classes(&c) {
                let sub = class_subgraph(&g, &c, i)?;
                let cycle = find_cycle(&sub.vertices, &sub.edges);
                classes.push(ClassReport {
                    class: i,
                    vertices: sub.vertices.len(),
                    edges: sub.edges.len(),
                    is_forest: cycle.is_none(),
                });
                if witness.is_none() {
                    witness = cycle;
                }
            }
            let valid = is_signed_tree_coloring(&g, &c);
            let report = CheckReport {
                valid,
                classes,
                cycle_witness: witness,
            };
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else if valid {
                println!("valid signed tree-coloring");
            } else {
                println!("NOT a signed tree-coloring");
                if let Some(cycle) = &report.cycle_witness {
                    println!("cycle witness: {:?}", cycle);
                }
            }
            Ok(if valid {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::Color {
            graph,
            mode,
            lists,
            n,
            outer,
            decomposition,
            output,
        } => {
            let gf = read_graph_file(graph)?;
            let g = gf.to_graph()?;
            let lists = load_lists(lists, *n, g.vertex_count())?;
            let coloring = match mode.as_str() {
                "triangulation" => {
                    let nt = build_near_triangulation(&g, &gf, outer)?;
                    let lists = pin_first_two(lists, nt.outer_face());
                    tree_color_near_triangulation(&nt, &lists)?
                }
                "wagner" => {
                    let mut lists = lists;
                    let a = first_of(&lists, 0)?;
                    let b = first_of(&lists, 1)?;
                    lists.set(0, vec![a]);
                    lists.set(1, vec![b]);
                    tree_color_wagner(&g, (0, 1, a, b), &lists)?
                }
                "k5" => {
                    let tree = match decomposition {
                        Some(path) => {
                            let text = fs::read_to_string(path).map_err(|e| {
                                Error::Parse(format!("{}: {}", path.display(), e))
                            })?;
                            Some(signed_arboricity::io::parse_decomposition(&text)?)
                        }
                        None => None,
                    };
                    tree_color_k5_free(&g, &lists, tree.as_ref())?
                }
                _ => unreachable!("clap validates the mode"),
            };
            if !is_signed_tree_coloring(&g, &coloring) {
                return Err(Error::Defect("refusing to write an invalid coloring".into()));
            }
            let cf = ColoringFile::from_coloring(&coloring, g.vertex_count());
            write_or_print(&cf, output)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Oracle {
            graph,
            n_max,
            no_prune,
        } => {
            let g = read_graph_file(graph)?.to_graph()?;
            let r = oracle_va_opts(&g, *n_max, !no_prune)?;
            let cf = ColoringFile::from_coloring(&r.witness, g.vertex_count());
            if cli.json {
                #[derive(Serialize)]
                struct OracleReport {
                    va: u32,
                    witness: ColoringFile,
                    colorings_checked: u64,
                }
                let rep = OracleReport {
                    va: r.va,
                    witness: cf,
                    colorings_checked: r.colorings_checked,
                };
                println!("{}", serde_json::to_string_pretty(&rep).unwrap());
            } else {
                println!("va = {}", r.va);
                println!("witness = {}", serde_json::to_string(&cf).unwrap());
                println!("colorings checked = {}", r.colorings_checked);
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Property { suite, count, seed } => {
            let report = run_suite(suite, *count, *seed)?;
            #[derive(Serialize)]
            struct PropertyReport<'a> {
                suite: &'a str,
                count: usize,
                passed: usize,
                seed: u64,
                failures: Vec<&'a str>,
            }
            let rep = PropertyReport {
                suite: &report.suite,
                count: report.count,
                passed: report.passed,
                seed: report.seed,
                failures: report.failures.iter().map(|(r, _)| r.as_str()).collect(),
            };
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&rep).unwrap());
            } else {
                println!(
                    "suite {}: {}/{} passed (seed {})",
                    report.suite, report.passed, report.count, report.seed
                );
            }
            if report.all_passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                for (i, (reason, instance)) in report.failures.iter().enumerate() {
                    let path = format!("failure-{}-{}.json", report.suite, i);
                    let _ = fs::write(&path, instance);
                    eprintln!("failure {}: {} (instance written to {})", i, reason, path);
                }
                Ok(ExitCode::from(1))
            }
        }

        Command::Switch { graph, set, output } => {
            let g = read_graph_file(graph)?.to_graph()?;
            let s = set.iter().copied().collect();
            let out = switch_set(&g, &s)?;
            write_or_print(&GraphFile::from_graph(&out), output)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Balance { graph } => {
            let g = read_graph_file(graph)?.to_graph()?;
            match balance(&g) {
                Balance::Balanced(theta) => {
                    let t: Vec<i8> = (0..g.vertex_count()).map(|v| theta.get(v)).collect();
                    if cli.json {
                        println!(
                            "{}",
                            serde_json::json!({"balanced": true, "potential": t})
                        );
                    } else {
                        println!("balanced; potential = {:?}", t);
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Balance::Unbalanced(cycle) => {
                    if cli.json {
                        println!(
                            "{}",
                            serde_json::json!({"balanced": false, "negative_cycle": cycle})
                        );
                    } else {
                        println!("not balanced; negative cycle = {:?}", cycle);
                    }
                    Ok(ExitCode::from(3))
                }
            }
        }

        Command::Decompose { graph, output } => {
            let g = read_graph_file(graph)?.to_graph()?;
            let tree = decompose(&g)?;
            write_or_print(&DecompositionFile::from_tree(&tree), output)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Generate {
            n,
            flips,
            seed,
            all_positive,
            output,
        } => {
            let (edges, rs) = generate_triangulation(*n, *flips, *seed)?;
            let g = if *all_positive {
                SignedGraph::all_positive(*n, &edges)?
            } else {
                generate_balanced(*n, &edges, seed.wrapping_add(1))?
            };
            write_or_print(&GraphFile::with_embedding(&g, &rs), output)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn load_lists(
    lists: &Option<PathBuf>,
    n: Option<u32>,
    vertex_count: usize,
) -> Result<ListAssignment> {
    match (lists, n) {
        (Some(path), _) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("{}: {}", path.display(), e)))?;
            signed_arboricity::io::parse_lists(&text)
        }
        (None, Some(n)) => ListAssignment::uniform_domain(vertex_count, n),
        (None, None) => Err(Error::Parse("either --lists or --n is required".into())),
    }
}

fn build_near_triangulation(
    g: &SignedGraph,
    gf: &GraphFile,
    outer: &Option<Vec<usize>>,
) -> Result<NearTriangulation> {
    let rs = match gf.embedding()? {
        Some(mut rs) => {
            if let Some(o) = outer {
                rs.outer_face = o.clone();
            }
            if rs.outer_face.is_empty() {
                let faces = signed_arboricity::planar::trace_faces(g, &rs)?;
                rs.outer_face = faces.into_iter().next().unwrap_or_default();
            }
            rs
        }
        None => {
            let mut rs = planar_embed(g)?;
            if let Some(o) = outer {
                rs.outer_face = o.clone();
            }
            rs
        }
    };
    NearTriangulation::new(g.clone(), rs)
}

/// Pins the first two outer vertices to the head of their lists, as the
/// near-triangulation algorithm expects singleton lists there.
fn pin_first_two(mut lists: ListAssignment, outer: &[usize]) -> ListAssignment {
    for &v in outer.iter().take(2) {
        if let Some(l) = lists.get(v) {
            let head = l[0];
            lists.set(v, vec![head]);
        }
    }
    lists
}

fn first_of(lists: &ListAssignment, v: usize) -> Result<i32> {
    lists
        .get(v)
        .and_then(|l| l.first().copied())
        .ok_or(Error::ListTooSmall(v))
}
