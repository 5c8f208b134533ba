use std::path::PathBuf;
use std::process::Command;

use cordial::families::{parallel_edges, wheel};
use cordial::io::graph_to_text;

struct CliRun {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run_cli(args: &[&str]) -> CliRun {
    let output = Command::new(env!("CARGO_BIN_EXE_cordial"))
        .args(args)
        .output()
        .expect("binary runs");
    CliRun {
        code: output.status.code().expect("binary exits normally"),
        stdout: String::from_utf8(output.stdout).expect("stdout is utf-8"),
        stderr: String::from_utf8(output.stderr).expect("stderr is utf-8"),
    }
}

fn temp_file(name: &str, content: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("cordial-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, content).expect("temp file writes");
    path
}

const FIVE_TOURNAMENT: &str = "D 5 10\n0 1\n0 2\n1 2\n1 3\n2 3\n2 4\n3 4\n3 0\n4 0\n4 1\n";
const THREE_PARALLEL_SIX: &str = "G 6 3\n0 1\n2 3\n4 5\n";
const THREE_PARALLEL_SEVEN: &str = "G 7 3\n0 1\n2 3\n4 5\n";

#[test]
fn check_accepts_a_cordial_tournament_with_exit_zero() {
    let path = temp_file("t5.txt", FIVE_TOURNAMENT);
    let run = run_cli(&["check", path.to_str().unwrap()]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    assert!(run.stdout.contains("decision: true"), "{}", run.stdout);
    assert!(run.stdout.contains("lambda: (3, 3, 4)"), "{}", run.stdout);
    let _ = std::fs::remove_file(path);
}

#[test]
fn check_rejects_three_parallel_edges_with_exit_one() {
    let path = temp_file("x6.txt", THREE_PARALLEL_SIX);
    let run = run_cli(&["check", path.to_str().unwrap()]);
    assert_eq!(run.code, 1);
    assert!(run.stdout.contains("decision: false"), "{}", run.stdout);
    let _ = std::fs::remove_file(path);
}

#[test]
fn check_reports_parse_errors_with_line_numbers_and_exit_two() {
    let path = temp_file("bad.txt", "D 2 1\nu\n");
    let run = run_cli(&["check", path.to_str().unwrap()]);
    assert_eq!(run.code, 2);
    assert_eq!(
        run.stderr,
        "error: line 2: expected two vertex numbers, got 'u'\n"
    );
    let _ = std::fs::remove_file(path);
}

#[test]
fn check_reports_missing_files_with_exit_two() {
    let run = run_cli(&["check", "/nonexistent/cordial-test-input.txt"]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.starts_with("error:"), "{}", run.stderr);
}

#[test]
fn check_reports_the_scan_cap_with_exit_three() {
    let mut text = String::from("D 40 39\n");
    for i in 0..39 {
        text.push_str(&format!("{} {}\n", i, i + 1));
    }
    let path = temp_file("path40.txt", &text);
    let run = run_cli(&["check", path.to_str().unwrap()]);
    assert_eq!(run.code, 3);
    assert!(run.stderr.contains("size cap exceeded"), "{}", run.stderr);
    let _ = std::fs::remove_file(path);
}

#[test]
fn scope_flag_flips_the_verdict_when_an_isolated_vertex_exists() {
    let path = temp_file("x7.txt", THREE_PARALLEL_SEVEN);
    let default_run = run_cli(&["--json", "check", path.to_str().unwrap()]);
    assert_eq!(default_run.code, 1);
    assert_eq!(
        default_run.stdout,
        "{\"decision\":false,\"search_space\":20}\n"
    );
    let all_run = run_cli(&["--json", "--scope", "all", "check", path.to_str().unwrap()]);
    assert_eq!(all_run.code, 0);
    assert_eq!(
        all_run.stdout,
        concat!(
            "{\"decision\":true,\"witness\":{\"labelling\":[1,1,1,0,1,0,0],",
            "\"orientation\":[[0,1],[3,2],[4,5]],",
            "\"lambda\":{\"alpha\":1,\"beta\":1,\"gamma\":1}},\"search_space\":9}\n"
        )
    );
    let _ = std::fs::remove_file(path);
}

#[test]
fn thread_count_does_not_change_the_reported_witness() {
    let path = temp_file("x7-threads.txt", THREE_PARALLEL_SEVEN);
    let single = run_cli(&["--json", "--scope", "all", "check", path.to_str().unwrap()]);
    let multi = run_cli(&[
        "--json",
        "--scope",
        "all",
        "--threads",
        "2",
        "check",
        path.to_str().unwrap(),
    ]);
    assert_eq!(single.code, multi.code);
    assert_eq!(single.stdout, multi.stdout);
    let _ = std::fs::remove_file(path);
}

#[test]
fn orientable_decides_wheels_by_their_order() {
    let w6 = temp_file("w6.txt", &graph_to_text(&wheel(6).unwrap()));
    let run6 = run_cli(&["orientable", w6.to_str().unwrap()]);
    assert_eq!(run6.code, 0, "stderr: {}", run6.stderr);
    assert!(run6.stdout.contains("decision: true"));
    assert!(run6.stdout.contains("orientation:"));
    let w10 = temp_file("w10.txt", &graph_to_text(&wheel(10).unwrap()));
    let run10 = run_cli(&["orientable", w10.to_str().unwrap()]);
    assert_eq!(run10.code, 1);
    assert!(run10.stdout.contains("decision: false"));
    let _ = std::fs::remove_file(w6);
    let _ = std::fs::remove_file(w10);
}

#[test]
fn orientable_rejects_directed_input_with_exit_two() {
    let path = temp_file("t5-orient.txt", FIVE_TOURNAMENT);
    let run = run_cli(&["orientable", path.to_str().unwrap()]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("undirected"), "{}", run.stderr);
    let _ = std::fs::remove_file(path);
}

#[test]
fn gen_output_is_byte_identical_across_runs() {
    let first = run_cli(&["gen", "wheel", "6"]);
    let second = run_cli(&["gen", "wheel", "6"]);
    assert_eq!(first.code, 0);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(
        first.stdout,
        "G 6 10\n0 1\n0 4\n0 5\n1 2\n1 5\n2 3\n2 5\n3 4\n3 5\n4 5\n"
    );
}

#[test]
fn gen_parallel_seven_matches_the_library_generator() {
    let run = run_cli(&["gen", "parallel", "7"]);
    assert_eq!(run.code, 0);
    assert_eq!(run.stdout, graph_to_text(&parallel_edges(7).unwrap()));
    assert_eq!(run.stdout, THREE_PARALLEL_SEVEN);
}

#[test]
fn gen_emits_dot_when_asked() {
    let run = run_cli(&["gen", "cycle-out-wheel", "6", "--dot"]);
    assert_eq!(run.code, 0);
    assert_eq!(
        run.stdout,
        "digraph {\n  0;\n  1;\n  2;\n  3;\n  4;\n  5;\n  0 -> 1;\n  1 -> 2;\n  2 -> 3;\n  \
         3 -> 4;\n  4 -> 0;\n  5 -> 0;\n  5 -> 1;\n  5 -> 2;\n  5 -> 3;\n  5 -> 4;\n}\n"
    );
}

#[test]
fn gen_rejects_orders_below_the_family_minimum() {
    let run = run_cli(&["gen", "wheel", "3"]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.starts_with("error:"), "{}", run.stderr);
}

#[test]
fn census_four_lists_the_two_non_cordial_degree_patterns() {
    let run = run_cli(&["census", "4"]);
    assert_eq!(run.code, 0);
    let mut lines = run.stdout.lines();
    assert_eq!(
        lines.next().unwrap(),
        "order 4: 4 classes, 64 labelled tournaments, 48 cordial"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 4);
    assert_eq!(
        rows.iter().filter(|r| r.ends_with("cordial=true")).count(),
        2
    );
    for pattern in ["out_degrees=2,2,2,0", "out_degrees=3,1,1,1"] {
        let row = rows
            .iter()
            .find(|r| r.contains(pattern))
            .unwrap_or_else(|| panic!("missing row for {pattern}"));
        assert!(row.contains("size=8"), "{row}");
        assert!(row.ends_with("cordial=false"), "{row}");
    }
}

#[test]
fn census_order_bounds_map_to_the_documented_exit_codes() {
    let low = run_cli(&["census", "2"]);
    assert_eq!(low.code, 2);
    let high = run_cli(&["census", "7"]);
    assert_eq!(high.code, 3);
    assert!(high.stderr.contains("size cap exceeded"), "{}", high.stderr);
}

#[test]
fn extremal_prints_the_closed_form_without_verification() {
    let run = run_cli(&["extremal", "100"]);
    assert_eq!(run.code, 0);
    assert_eq!(
        run.stdout,
        "order: 100\nforced_monochromatic_pairs: 2450\nmax_arcs: 3750\n"
    );
}

#[test]
fn extremal_verify_reports_the_oversize_scan_outcome() {
    let six = run_cli(&["extremal", "6", "--verify"]);
    assert_eq!(six.code, 0);
    assert!(six.stdout.contains("max_arcs: 14"), "{}", six.stdout);
    assert!(six.stdout.contains("bound_met: yes"), "{}", six.stdout);
    assert!(six.stdout.contains("oversize_subsets: 1"), "{}", six.stdout);
    assert!(
        six.stdout.contains("oversize_orientable: 0"),
        "{}",
        six.stdout
    );
    assert!(six.stdout.contains("bound_holds: yes"), "{}", six.stdout);
    let seven = run_cli(&["extremal", "7", "--verify"]);
    assert_eq!(seven.code, 0);
    assert!(seven.stdout.contains("max_arcs: 18"), "{}", seven.stdout);
    assert!(seven.stdout.contains("bound_met: yes"), "{}", seven.stdout);
    assert!(
        seven.stdout.contains("oversize_subsets: 210"),
        "{}",
        seven.stdout
    );
    assert!(
        seven.stdout.contains("oversize_orientable: 210"),
        "{}",
        seven.stdout
    );
    assert!(seven.stdout.contains("bound_holds: no"), "{}", seven.stdout);
}

#[test]
fn verify_exits_zero_only_when_the_selected_claims_pass() {
    let passing = run_cli(&["verify", "--claims", "quasigroup"]);
    assert_eq!(passing.code, 0);
    assert!(
        passing.stdout.contains("[PASS] quasigroup-commutativity"),
        "{}",
        passing.stdout
    );
    assert!(
        passing.stdout.contains("1/1 claims passed"),
        "{}",
        passing.stdout
    );
    let failing = run_cli(&["verify", "--claims", "extremal"]);
    assert_eq!(failing.code, 1);
    assert!(
        failing.stdout.contains("[FAIL] extremal-bound"),
        "{}",
        failing.stdout
    );
    assert!(
        failing.stdout.contains("0/1 claims passed"),
        "{}",
        failing.stdout
    );
}

#[test]
fn verify_json_rows_carry_the_full_claim_record() {
    let run = run_cli(&["--json", "verify", "--claims", "quasigroup"]);
    assert_eq!(run.code, 0);
    let rows: serde_json::Value = serde_json::from_str(&run.stdout).expect("valid json");
    let rows = rows.as_array().expect("array of claim rows");
    assert_eq!(rows.len(), 1);
    let row = &rows[0];
    assert_eq!(row["id"], "quasigroup-commutativity");
    assert_eq!(row["pass"], true);
    assert!(row["statement"].is_string());
    assert!(row["instances"].is_string());
    assert!(row["detail"].is_string());
    assert!(row["millis"].is_u64());
}

#[test]
fn check_json_verdicts_agree_with_the_library() {
    use cordial::{is_23_cordial, is_23_orientable, Scope};
    let scope = Scope::NonisolatedOnly;
    let cases: Vec<(String, bool)> = vec![
        (
            FIVE_TOURNAMENT.to_string(),
            match cordial::io::parse_graph_text(FIVE_TOURNAMENT).unwrap() {
                cordial::io::ParsedInput::Directed(d) => is_23_cordial(&d, scope).unwrap().decision,
                cordial::io::ParsedInput::Undirected(_) => unreachable!(),
            },
        ),
        (
            THREE_PARALLEL_SIX.to_string(),
            is_23_orientable(&parallel_edges(6).unwrap(), scope)
                .unwrap()
                .decision,
        ),
        (
            graph_to_text(&wheel(6).unwrap()),
            is_23_orientable(&wheel(6).unwrap(), scope)
                .unwrap()
                .decision,
        ),
    ];
    for (text, expected) in cases {
        let path = temp_file("agree.txt", &text);
        let run = run_cli(&["--json", "check", path.to_str().unwrap()]);
        let verdict: serde_json::Value = serde_json::from_str(&run.stdout).expect("valid json");
        assert_eq!(verdict["decision"], expected, "input:\n{text}");
        assert_eq!(run.code, i32::from(!expected));
        let _ = std::fs::remove_file(path);
    }
}
