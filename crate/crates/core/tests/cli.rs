use std::path::Path;
use std::process::{Command, Output};

use maxbetti::cli::{parse_bound_list, ResponseDocument};

fn maxbetti(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maxbetti")).args(args).output().unwrap()
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).display().to_string()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn json_request_reproduces_the_worked_example() {
    let out = maxbetti(&["solve", "--request", &fixture("worked_example.json"), "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let response: ResponseDocument = serde_json::from_str(&stdout(&out)).unwrap();
    let r = &response.result;
    assert_eq!(r.betti_upper_bound, vec![23, 54, 47, 14]);
    assert_eq!(r.maximum_betti_sum, 137);
    assert!(!r.is_realizable);
    assert_eq!(r.hilbert_functions.as_ref().unwrap().len(), 36);
    assert_eq!(r.maximal_betti_numbers.as_ref().unwrap(), &vec![vec![23, 54, 45, 13], vec![22, 54, 47, 14]]);
    assert_eq!(response.spec.horizon(), 49);
}

#[test]
fn flags_override_the_request_file() {
    let out = maxbetti(&["solve", "--request", &fixture("worked_example.json"), "--results", "none", "--json"]);
    let response: ResponseDocument = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(response.result.hilbert_functions.is_none());
    assert_eq!(response.result.maximum_betti_sum, 137);
}

#[test]
fn flags_alone_match_the_request_file() {
    let args = [
        "solve",
        "--variables",
        "5",
        "--hilbert-polynomial",
        "49",
        "--hf-lower",
        ",,,,,,41",
        "--hf-upper",
        ",,,,,,41",
        "--diff-lower",
        "{,,,8,8,5,5}",
        "--results",
        "one",
    ];
    let out = maxbetti(&args);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("{23, 54, 47, 14}"), "{text}");
    assert!(text.contains("{1, 5, 11, 21, 30, 36, 41, 46, 49, 49}"), "{text}");
    assert!(text.contains("realizable:         false"), "{text}");
}

#[test]
fn response_json_round_trips() {
    let out = maxbetti(&["solve", "--request", &fixture("worked_example.json"), "--json"]);
    let first: ResponseDocument = serde_json::from_str(&stdout(&out)).unwrap();
    let again: ResponseDocument = serde_json::from_str(&serde_json::to_string(&first).unwrap()).unwrap();
    assert_eq!(first, again);
}

#[test]
fn positional_gaps_fill_the_listed_degrees() {
    let list = parse_bound_list("{,,,8,8,5,5}").unwrap();
    assert_eq!(list, vec![None, None, None, Some(8), Some(8), Some(5), Some(5)]);
}

#[test]
fn inconsistent_bounds_exit_2_naming_the_degree() {
    let out = maxbetti(&[
        "solve",
        "--variables",
        "5",
        "--hilbert-polynomial",
        "49",
        "--hf-lower",
        ",,,5",
        "--hf-upper",
        ",,,3",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("degree 3"), "{}", stderr(&out));
}

#[test]
fn unparsable_input_exits_2() {
    let out = maxbetti(&["solve", "--variables", "5", "--hilbert-polynomial", "1/0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = maxbetti(&["solve", "--variables", "5", "--hilbert-polynomial", "1/2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn empty_family_exits_3() {
    let out = maxbetti(&["solve", "--variables", "5", "--hilbert-polynomial", "49", "--hf-upper", ",,2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("empty family"));
}

#[test]
fn verification_passes_on_small_families() {
    for algorithm in ["simplified", "complete"] {
        let out = maxbetti(&[
            "solve",
            "--variables",
            "4",
            "--hilbert-polynomial",
            "6",
            "--hf-lower",
            ",,5",
            "--algorithm",
            algorithm,
            "--results",
            "all",
            "--verify",
            "--json",
        ]);
        assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
        let response: ResponseDocument = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(response.verified, Some(true));
    }
}

#[test]
fn ideal_command_matches_the_worked_example() {
    let out = maxbetti(&["ideal", "--variables", "5", "--hilbert-function", "1,5,11,21,30,36,41,46,49,49"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("generators (22)"), "{text}");
    assert!(text.contains("total: 1 22 54 47 14"), "{text}");
}

#[test]
fn ideal_command_in_two_variables() {
    let out = maxbetti(&["ideal", "--variables", "2", "--hilbert-function", "1,1,1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    // h = 1, 1, 1, ... leaves only x2 standard, so the ideal is (x1)
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["generators"], serde_json::json!([[1, 0]]));
    assert_eq!(value["totals"], serde_json::json!([1, 1]));
}

#[test]
fn ideal_command_rejects_too_many_linear_forms() {
    let out = maxbetti(&["ideal", "--variables", "3", "--hilbert-function", "1,10"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bench_emits_csv() {
    let out = maxbetti(&["bench", "--variables", "4", "--from", "0", "--to", "5"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 7, "{text}");
    assert!(lines[0].contains(','));
}

#[test]
fn automatic_witnesses_in_two_variables_are_hilbert_functions() {
    let out = maxbetti(&["solve", "--variables", "2", "--hilbert-polynomial", "3", "--results", "all", "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let response: ResponseDocument = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(response.result.hilbert_functions, Some(vec![vec![1, 2, 3, 3]]));
}
