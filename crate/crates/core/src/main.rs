//! Command-line front end: file-based cordiality and orientability checks,
//! family generation, tournament censuses, arc-count bound reports, and the
//! claim-verification suite.
//!
//! Exit codes: 0 for a positive decision (or a completed report), 1 for a
//! negative decision or a failed claim, 2 for input and parse errors, 3 for
//! inputs beyond the exhaustive-search size caps.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cordial::decide::{is_23_cordial_parallel, is_23_orientable_parallel, tournament_census};
use cordial::extremal::{forced_monochromatic_pairs, max_arcs, verify_extremal_bound};
use cordial::families::{complete_graph, cycle_out_wheel, fan, parallel_edges, wheel};
use cordial::harness::run_claims;
use cordial::io::{
    digraph_to_dot, digraph_to_text, graph_to_dot, graph_to_text, parse_graph_text, ParsedInput,
};
use cordial::labelling::Scope;
use cordial::{Digraph, Error, Graph, Result, Verdict};

#[derive(Parser)]
#[command(
    name = "cordial",
    version,
    about = "Decide (2,3)-cordiality of digraphs and (2,3)-orientability of graphs"
)]
struct Cli {
    /// Emit machine-readable JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    /// Which vertices count toward the friendly balance.
    #[arg(long, global = true, value_enum, default_value_t = ScopeArg::Nonisolated)]
    scope: ScopeArg,

    /// Worker threads for exhaustive scans; 0 means one per core.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

/// Command-line spelling of the two scopes.
#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ScopeArg {
    /// Judge on the subgraph induced by nonisolated vertices.
    Nonisolated,
    /// Count every vertex, isolated ones included.
    All,
}

impl From<ScopeArg> for Scope {
    fn from(s: ScopeArg) -> Scope {
        match s {
            ScopeArg::Nonisolated => Scope::NonisolatedOnly,
            ScopeArg::All => Scope::AllVertices,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Wheel,
    Fan,
    CycleOutWheel,
    Parallel,
    Complete,
}

#[derive(Subcommand)]
enum Command {
    /// Decide the file's question: cordiality for D files, orientability for G files.
    Check {
        /// Input file in the `D n m` / `G n m` text format.
        path: PathBuf,
    },
    /// Decide orientability of an undirected graph; accepts only G files.
    Orientable {
        /// Input file in the `G n m` text format.
        path: PathBuf,
    },
    /// Print a member of a named family.
    Gen {
        #[arg(value_enum)]
        family: FamilyArg,
        n: usize,
        /// Render as DOT instead of the plain text format.
        #[arg(long)]
        dot: bool,
    },
    /// Classify every tournament on n vertices (3 <= n <= 6).
    Census { n: usize },
    /// Print the arc-count bound for orientable graphs on n vertices.
    Extremal {
        n: usize,
        /// Exhaustively confirm the bound (n <= 7).
        #[arg(long)]
        verify: bool,
    },
    /// Re-run the mathematical claims the library rests on.
    Verify {
        /// Only run claims whose id contains this substring.
        #[arg(long)]
        claims: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if cli.threads > 0 {
        pool = pool.num_threads(cli.threads);
    }
    pool.build_global().ok();
    let code = match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    };
    ExitCode::from(code)
}

fn dispatch(cli: &Cli) -> Result<u8> {
    let scope = cli.scope.into();
    match &cli.command {
        Command::Check { path } => cmd_check(path, scope, cli.json),
        Command::Orientable { path } => cmd_orientable(path, scope, cli.json),
        Command::Gen { family, n, dot } => cmd_gen(*family, *n, *dot),
        Command::Census { n } => cmd_census(*n, cli.json),
        Command::Extremal { n, verify } => cmd_extremal(*n, *verify, cli.json),
        Command::Verify { claims } => Ok(cmd_verify(claims.as_deref(), cli.json, cli.threads != 1)),
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::SizeCap { .. } => 3,
        Error::Falsified(_) => 1,
        _ => 2,
    }
}

fn read_file(path: &Path) -> std::result::Result<String, u8> {
    std::fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        2
    })
}

fn print_verdict(verdict: &Verdict, json: bool) {
    if json {
        println!(
            "{}",
            serde_json::to_string(verdict).expect("verdict serializes")
        );
        return;
    }
    println!("decision: {}", verdict.decision);
    println!("search_space: {}", verdict.search_space);
    if let Some(w) = &verdict.witness {
        let labels: Vec<String> = w.labelling.labels().iter().map(u8::to_string).collect();
        println!("labelling: {}", labels.join(" "));
        println!("lambda: {}", w.lambda);
        if let Some(o) = &w.orientation {
            let arcs: Vec<String> = o.arcs().iter().map(|&(u, v)| format!("{u}->{v}")).collect();
            println!("orientation: {}", arcs.join(" "));
        }
    }
}

fn cmd_check(path: &Path, scope: Scope, json: bool) -> Result<u8> {
    let text = match read_file(path) {
        Ok(t) => t,
        Err(code) => return Ok(code),
    };
    let verdict = match parse_graph_text(&text)? {
        ParsedInput::Directed(d) => is_23_cordial_parallel(&d, scope)?,
        ParsedInput::Undirected(g) => is_23_orientable_parallel(&g, scope)?,
    };
    print_verdict(&verdict, json);
    Ok(u8::from(!verdict.decision))
}

fn cmd_orientable(path: &Path, scope: Scope, json: bool) -> Result<u8> {
    let text = match read_file(path) {
        Ok(t) => t,
        Err(code) => return Ok(code),
    };
    let verdict = match parse_graph_text(&text)? {
        ParsedInput::Undirected(g) => is_23_orientable_parallel(&g, scope)?,
        ParsedInput::Directed(_) => {
            eprintln!("error: orientability is a question about undirected graphs; give a G file");
            return Ok(2);
        }
    };
    print_verdict(&verdict, json);
    Ok(u8::from(!verdict.decision))
}

fn render_graph(g: &Graph, dot: bool) -> String {
    if dot {
        graph_to_dot(g, None)
    } else {
        graph_to_text(g)
    }
}

fn render_digraph(d: &Digraph, dot: bool) -> String {
    if dot {
        digraph_to_dot(d, None)
    } else {
        digraph_to_text(d)
    }
}

fn cmd_gen(family: FamilyArg, n: usize, dot: bool) -> Result<u8> {
    let output = match family {
        FamilyArg::Wheel => render_graph(&wheel(n)?, dot),
        FamilyArg::Fan => render_graph(&fan(n)?, dot),
        FamilyArg::CycleOutWheel => render_digraph(&cycle_out_wheel(n)?, dot),
        FamilyArg::Parallel => render_graph(&parallel_edges(n)?, dot),
        FamilyArg::Complete => render_graph(&complete_graph(n)?, dot),
    };
    print!("{output}");
    Ok(0)
}

fn cmd_census(n: usize, json: bool) -> Result<u8> {
    let report = tournament_census(n)?;
    if json {
        println!(
            "{}",
            serde_json::to_string(&report).expect("census serializes")
        );
    } else {
        println!(
            "order {}: {} classes, {} labelled tournaments, {} cordial",
            report.order,
            report.classes.len(),
            report.labelled_total,
            report.labelled_cordial
        );
        for c in &report.classes {
            let degrees: Vec<String> = c.out_degrees.iter().map(usize::to_string).collect();
            println!(
                "class {} out_degrees={} size={} cordial={}",
                c.canonical.hex(),
                degrees.join(","),
                c.size,
                c.cordial
            );
        }
    }
    Ok(0)
}

fn cmd_extremal(n: usize, verify: bool, json: bool) -> Result<u8> {
    let bound = max_arcs(n)?;
    let forced = forced_monochromatic_pairs(n);
    if !verify {
        if json {
            let value = serde_json::json!({
                "order": n,
                "forced_monochromatic_pairs": forced,
                "max_arcs": bound,
            });
            println!("{value}");
        } else {
            println!("order: {n}");
            println!("forced_monochromatic_pairs: {forced}");
            println!("max_arcs: {bound}");
        }
        return Ok(0);
    }
    let report = verify_extremal_bound(n)?;
    if json {
        let value = serde_json::json!({
            "order": report.order,
            "forced_monochromatic_pairs": forced,
            "max_arcs": report.bound,
            "witness_edges": report.witness_graph.edge_count(),
            "witness": report.witness,
            "bound_met": report.bound_is_tight,
            "oversize_subsets": report.oversize_subsets,
            "oversize_orientable": report.oversize_orientable,
            "bound_holds": report.bound_holds,
        });
        println!("{value}");
    } else {
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        println!("order: {n}");
        println!("forced_monochromatic_pairs: {forced}");
        println!("max_arcs: {bound}");
        println!("witness_edges: {}", report.witness_graph.edge_count());
        println!("witness_lambda: {}", report.witness.lambda);
        println!("bound_met: {}", yes_no(report.bound_is_tight));
        println!("oversize_subsets: {}", report.oversize_subsets);
        println!("oversize_orientable: {}", report.oversize_orientable);
        println!("bound_holds: {}", yes_no(report.bound_holds));
    }
    Ok(0)
}

fn cmd_verify(filter: Option<&str>, json: bool, parallel: bool) -> u8 {
    let results = run_claims(filter, parallel);
    if json {
        println!(
            "{}",
            serde_json::to_string(&results).expect("claim results serialize")
        );
    } else {
        for r in &results {
            let mark = if r.pass { "PASS" } else { "FAIL" };
            println!("[{mark}] {} ({} ms)", r.id, r.millis);
            println!("    claim: {}", r.statement);
            println!("    instances: {}", r.instances);
            println!("    result: {}", r.detail);
        }
        let passed = results.iter().filter(|r| r.pass).count();
        println!("{passed}/{} claims passed", results.len());
    }
    u8::from(!results.iter().all(|r| r.pass))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_exit_codes_follow_the_contract() {
        let parse = Error::Parse {
            line: 3,
            msg: "bad".into(),
        };
        let cap = Error::SizeCap {
            what: "scan",
            requested: 40,
            cap: 32,
        };
        assert_eq!(exit_code_for(&parse), 2);
        assert_eq!(exit_code_for(&cap), 3);
        assert_eq!(exit_code_for(&Error::Falsified("x".into())), 1);
        assert_eq!(exit_code_for(&Error::SelfLoop(1)), 2);
    }

    #[test]
    fn scope_flag_maps_to_library_scopes() {
        assert_eq!(Scope::from(ScopeArg::Nonisolated), Scope::NonisolatedOnly);
        assert_eq!(Scope::from(ScopeArg::All), Scope::AllVertices);
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
