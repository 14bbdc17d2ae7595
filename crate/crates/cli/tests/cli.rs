mod common;

use common::*;
use proptest::prelude::*;
use resolvent_cli::{parse_poly, ParseError};
use resolvent_core::complex::rat;
use resolvent_core::Polynomial;
use serde_json::Value;

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full);
    (out.status.code().unwrap(), serde_json::from_slice(&out.stdout).unwrap())
}

fn has_root(doc: &Value, re: f64, im: f64) -> bool {
    doc["roots"].as_array().unwrap().iter().any(|r| {
        (r["re"].as_f64().unwrap() - re).abs() < 1e-9 && (r["im"].as_f64().unwrap() - im).abs() < 1e-9
    })
}

#[test]
fn parse_examples() {
    assert_eq!(parse_poly("x^3 - 6x - 9").unwrap().poly, Polynomial::from_ints(&[-9, -6, 0, 1]));
    assert_eq!(parse_poly("x + x").unwrap().poly, Polynomial::from_ints(&[0, 2]));
    assert!(matches!(parse_poly("x^2 + y"), Err(ParseError::MixedVariables { first: 'x', second: 'y', .. })));
    assert_eq!(
        parse_poly("x^4 - 28x^2 - 48x").unwrap().poly,
        Polynomial::from_ints(&[0, -48, -28, 0, 1])
    );
}

#[test]
fn corpus_is_a_fixed_point() {
    assert_eq!(PARSE_CORPUS.len(), 30);
    for text in PARSE_CORPUS {
        let first = parse_poly(text).unwrap();
        let canonical = first.poly.render(first.var_or('x'));
        let second = parse_poly(&canonical).unwrap();
        assert_eq!(first.poly, second.poly, "{text} -> {canonical}");
        assert_eq!(second.poly.render(second.var_or('x')), canonical);
    }
}

#[test]
fn solve_cubic_dispatch() {
    let (code, doc) = json(&["solve", "x^3 - 6x - 9"]);
    assert_eq!(code, 0);
    assert_eq!(doc["method"], "cubic-resolvent");
    assert_eq!(doc["resolvent"]["text"], "z^2 - 9z + 8");
    assert!(has_root(&doc, 3.0, 0.0));
}

#[test]
fn reciprocal_factor_dispatch() {
    let (code, doc) = json(&["reciprocal-factor", "y^4 + 3y^3 + 4y^2 + 3y + 1"]);
    assert_eq!(code, 0);
    assert_eq!(doc["u_equation"]["text"], "u^2 - 3u + 2");
    let mut alphas: Vec<&str> = doc["factors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["exact"].as_str().unwrap())
        .collect();
    alphas.sort();
    assert_eq!(alphas, ["1/1", "2/1"]);
}

#[test]
fn high_degree_dispatch_order() {
    let (code, doc) = json(&["solve", "x^5 - 5x^3 + 5x - 2"]);
    assert_eq!((code, doc["method"].as_str().unwrap()), (0, "moivre"));
    assert!(has_root(&doc, 2.0, 0.0));
    let (code, doc) = json(&["solve", "2y^6 + 12y^5 + 28y^4 + 36y^3 + 28y^2 + 12y + 2"]);
    assert_eq!((code, doc["method"].as_str().unwrap()), (0, "reciprocal"));
    let (code, doc) = json(&["solve", "x^6 - x + 1"]);
    assert_eq!((code, doc["method"].as_str().unwrap()), (0, "numeric"));
    assert_eq!(doc["roots"].as_array().unwrap().len(), 6);
    // palindromes beyond --max-n fall back to the oracle
    let (code, doc) = json(&["--max-n", "2", "solve", "y^6 + 6y^5 + 14y^4 + 18y^3 + 14y^2 + 6y + 1"]);
    assert_eq!((code, doc["method"].as_str().unwrap()), (0, "numeric"));
}

#[test]
fn coefficient_input() {
    let (code, doc) = json(&["solve", "--coeffs", "-9,-6,0,1"]);
    assert_eq!(code, 0);
    assert_eq!(doc["source"]["text"], "x^3 - 6x - 9");
    let (_, doc) = json(&["resolvent", "--coeffs", "0,-48,-28,0,1", "--var", "t"]);
    assert_eq!(doc["source"]["text"], "t^4 - 28t^2 - 48t");
    assert_eq!(doc["resolvent"]["text"], "z^3 - 14z^2 + 49z - 36");
}

#[test]
fn moivre_by_parameters_matches_text() {
    let (_, by_form) = json(&["moivre", "--n", "5", "--alpha", "2", "--t", "1"]);
    let (_, by_text) = json(&["moivre", "x^5 - 5x^3 + 5x - 2"]);
    json_close(&by_form, &by_text, 1e-12, "moivre").unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["solve", "x^2 + y"]).status.code(), Some(2));
    assert_eq!(run(&["solve", "x^^2"]).status.code(), Some(2));
    assert_eq!(run(&["solve"]).status.code(), Some(2));
    assert_eq!(run(&["reciprocal-factor", "y^4 + 3y^3 + 1"]).status.code(), Some(3));
    assert_eq!(run(&["moivre", "x^5 + x + 1"]).status.code(), Some(3));
    assert_eq!(run(&["solve", "7"]).status.code(), Some(3));
    assert_eq!(run(&["decompose", "--n", "3", "--p", "-2"]).status.code(), Some(3));
    assert_eq!(run(&["decompose", "--n", "20", "--p", "1"]).status.code(), Some(3));
    assert_eq!(run(&["--tol", "1e-30", "solve", "x^7 - 3x + 1"]).status.code(), Some(4));
    assert_eq!(run(&["solve", "--max-iterations", "2", "x^7 - 3x + 1"]).status.code(), Some(5));
    assert_eq!(run(&["--branch-convention", "principal", "solve", "x^2 - 2"]).status.code(), Some(0));
    assert_ne!(run(&["--branch-convention", "other", "solve", "x^2 - 2"]).status.code(), Some(0));
}

#[test]
fn structured_errors() {
    let (code, doc) = json(&["solve", "x^2 + y"]);
    assert_eq!(code, 2);
    assert_eq!(doc["error"], "mixed-variables");
    assert_eq!(doc["position"], 6);
    let (code, doc) = json(&["reciprocal-factor", "y^3 + 2"]);
    assert_eq!((code, doc["error"].as_str().unwrap()), (3, "precondition"));
}

#[test]
fn emitted_reports_verify_via_stdin() {
    use std::io::Write;
    use std::process::{Command, Stdio};
    let (_, doc) = json(&["solve", "x^4 + 3x^2 - 7x + 1/2"]);
    let mut child = Command::new(bin())
        .args(["verify", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(doc.to_string().as_bytes())
        .unwrap();
    assert_eq!(child.wait().unwrap().code(), Some(0));
}

#[test]
fn human_output_is_a_table() {
    let out = run(&["solve", "x^3 - 6x - 9"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("method:    cubic-resolvent"));
    assert!(text.contains("closed form"));
}

fn poly_strategy() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-50i64..=50, 1i64..=12), 0..9)
        .prop_map(|c| Polynomial::new(c.into_iter().map(|(n, d)| rat(n, d)).collect()))
}

proptest! {
    #[test]
    fn render_parse_fixed_point(p in poly_strategy(), var in prop::sample::select(vec!['x', 'y', 't', 'u'])) {
        let text = p.render(var);
        let back = parse_poly(&text).unwrap();
        prop_assert_eq!(&back.poly, &p);
        prop_assert_eq!(back.poly.render(var), text);
    }

    #[test]
    fn parser_never_panics(s in "[x0-9+\\-*/^ y]{0,24}") {
        let _ = parse_poly(&s);
    }

    #[test]
    fn solve_reports_always_verify(a in -20i64..=20, b in -20i64..=20, c in -20i64..=20, lead in 1i64..=3) {
        let p = Polynomial::from_ints(&[c, b, a, 0, lead]);
        let doc = resolvent_cli::commands::solve(&p, 'x', &resolvent_cli::commands::SolveOptions {
            squared: false,
            tol: 1e-9,
            max_n: 16,
            max_iterations: 500,
        }).unwrap();
        let v = resolvent_cli::verify::verify(&resolvent_cli::Document::Solve(doc), None).unwrap();
        prop_assert!(v.pass, "{:?}", v.checks.iter().filter(|c| !c.pass).collect::<Vec<_>>());
    }
}
