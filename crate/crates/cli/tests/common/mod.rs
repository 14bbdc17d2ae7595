#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

/// One golden document per entry: file stem and the arguments producing it.
pub const GOLDEN_CASES: &[(&str, &[&str])] = &[
    ("solve-quadratic", &["solve", "2x^2 - 3x + 5"]),
    ("solve-cubic", &["solve", "x^3 - 6x - 9"]),
    ("solve-quartic", &["solve", "x^4 - 28x^2 - 48x"]),
    ("solve-quartic-squared", &["solve", "--squared", "x^4 + 3x^2 - 7x + 1/2"]),
    ("solve-moivre", &["solve", "x^5 - 5x^3 + 5x - 2"]),
    ("solve-reciprocal", &["solve", "y^6 + 6y^5 + 14y^4 + 18y^3 + 14y^2 + 6y + 1"]),
    ("solve-numeric", &["solve", "x^7 - 3x + 1"]),
    ("resolvent-cubic", &["resolvent", "x^3 - 6x - 9"]),
    ("resolvent-squared", &["resolvent", "--squared", "x^4 - 28x^2 - 48x"]),
    ("reciprocal-factor", &["reciprocal-factor", "y^4 + 3y^3 + 4y^2 + 3y + 1"]),
    ("reciprocal-factor-odd", &["reciprocal-factor", "y^5 + 2y^4 - 3y^3 - 3y^2 + 2y + 1"]),
    ("moivre", &["moivre", "--n", "7", "--alpha", "3", "--t", "-1/2"]),
    ("decompose-circular", &["decompose", "--n", "4", "--p", "1"]),
    ("decompose-hyperbolic", &["decompose", "--n", "3", "--p", "-5"]),
    ("explore-quintic", &["explore-quintic", "--a", "3,1", "--b", "-2,0.5", "--c", "1.5,-2", "--d", "0.25,4"]),
    ("explore-quintic-full", &["explore-quintic", "--n", "3", "--full", "--a", "2,0", "--b", "-1,1", "--c", "0.5,0.5", "--d", "3,-1"]),
];

pub fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_resolvent")
}

pub fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("binary runs")
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

pub fn golden_path(stem: &str) -> PathBuf {
    golden_dir().join(format!("{stem}.json"))
}

/// Structural equality: identical keys and strings, numbers within `tol`
/// relative to `max(1, |x|)`.
pub fn json_close(a: &Value, b: &Value, tol: f64, path: &str) -> Result<(), String> {
    match (a, b) {
        (Value::Number(x), Value::Number(y)) => {
            let (x, y) = (x.as_f64().unwrap(), y.as_f64().unwrap());
            if (x - y).abs() <= tol * x.abs().max(y.abs()).max(1.0) {
                Ok(())
            } else {
                Err(format!("{path}: {x} vs {y}"))
            }
        }
        (Value::Array(x), Value::Array(y)) => {
            if x.len() != y.len() {
                return Err(format!("{path}: length {} vs {}", x.len(), y.len()));
            }
            for (i, (u, v)) in x.iter().zip(y).enumerate() {
                json_close(u, v, tol, &format!("{path}[{i}]"))?;
            }
            Ok(())
        }
        (Value::Object(x), Value::Object(y)) => {
            if x.len() != y.len() || x.keys().any(|k| !y.contains_key(k)) {
                return Err(format!("{path}: keys differ"));
            }
            for (k, u) in x {
                json_close(u, &y[k], tol, &format!("{path}.{k}"))?;
            }
            Ok(())
        }
        _ if a == b => Ok(()),
        _ => Err(format!("{path}: {a} vs {b}")),
    }
}

/// Thirty inputs exercising the expression grammar.
pub const PARSE_CORPUS: &[&str] = &[
    "x^3 - 6x - 9",
    "x + x",
    "x^4 - 28x^2 - 48x",
    "y^6 + 6y^5 + 14y^4 + 18y^3 + 14y^2 + 6y + 1",
    "x^5 - 5x^3 + 5x - 2",
    "0",
    "7",
    "-1/2",
    "x",
    "-x",
    "3/2y^2 - 1/2",
    "  t^2+t+1  ",
    "2*x^3 - 4 * x + 1",
    "x^10 − 3x^5 + 1",
    "1 + x + x^2 + x^3",
    "x^2 - x^2 + x",
    "-x^7 + 1/3x^3",
    "12345678901234567890x^2 - 1",
    "z^4 + 0z^3 - z",
    "1/100 x^2 + 99/7",
    "u^5 - 3u^4 + 4u^3 - 5u^2 + 6u - 7",
    "y^12 + 1",
    "+x^2 - 2",
    "x^0 + x^1 + x^2",
    "2/4x - 3/6",
    "a^3 - a",
    "x^2+2x+1-x^2-2x-1",
    "-3x^2 - 3x^2 + 6x^2 + x",
    "w^16 - 2w^8 + 1",
    "x^3 + 5/3x^2 - 11/7x + 13/19",
];
