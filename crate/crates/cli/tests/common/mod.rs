#![allow(dead_code)]

use std::process::{Command, Output};

pub fn gqd(args: &[&str]) -> Output {
    gqd_with_env(args, &[])
}

pub fn gqd_with_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_gqd"));
    cmd.args(args)
        .env_remove("GQD_CONSTANTS")
        .env_remove("RUST_LOG");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("failed to launch gqd")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

/// Numeric cells of a CSV table, row by row; text cells become NaN.
pub fn csv_numbers(text: &str) -> (Vec<String>, Vec<Vec<f64>>) {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader
        .headers()
        .unwrap()
        .iter()
        .map(str::to_string)
        .collect();
    let rows = reader
        .records()
        .map(|r| {
            r.unwrap()
                .iter()
                .map(|c| c.parse().unwrap_or(f64::NAN))
                .collect()
        })
        .collect();
    (headers, rows)
}

/// Numeric cells of a JSON array of objects, in the given column order.
pub fn json_numbers(text: &str, headers: &[String]) -> Vec<Vec<f64>> {
    let value: serde_json::Value = serde_json::from_str(text).unwrap();
    value
        .as_array()
        .unwrap()
        .iter()
        .map(|row| {
            headers
                .iter()
                .map(|h| row[h.as_str()].as_f64().unwrap_or(f64::NAN))
                .collect()
        })
        .collect()
}

/// Largest relative difference between two equally shaped tables; NaN
/// cells must line up.
pub fn max_rel_diff(a: &[Vec<f64>], b: &[Vec<f64>]) -> f64 {
    assert_eq!(a.len(), b.len());
    let mut worst = 0.0f64;
    for (ra, rb) in a.iter().zip(b) {
        assert_eq!(ra.len(), rb.len());
        for (x, y) in ra.iter().zip(rb) {
            if x.is_nan() || y.is_nan() {
                assert!(x.is_nan() && y.is_nan());
                continue;
            }
            worst = worst.max((x - y).abs() / x.abs().max(y.abs()).max(1e-300));
        }
    }
    worst
}

/// One successful, one usage-error and one domain-error invocation for
/// every subcommand.
pub const SUBCOMMAND_CASES: &[(&[&str], &[&str], &[&str])] = &[
    (
        &["spectrum", "dirac", "--radius-nm", "5", "--n-max", "2"],
        &["spectrum", "dirac", "--radius-nm", "5", "--bogus"],
        &["spectrum", "dirac", "--radius-nm=-1"],
    ),
    (
        &["spectrum", "tb", "--radius-nm", "1"],
        &["spectrum", "tb"],
        &["spectrum", "tb", "--radius-nm=0.1"],
    ),
    (
        &["gap-vs-size", "--radii", "1,1.5"],
        &["gap-vs-size", "--radii", "one"],
        &["gap-vs-size", "--radii=0"],
    ),
    (
        &[
            "wavefunction",
            "--tau",
            "Kprime",
            "--m",
            "0",
            "--n",
            "1",
            "--radius-nm",
            "5",
        ],
        &[
            "wavefunction",
            "--tau",
            "Q",
            "--m",
            "0",
            "--n",
            "1",
            "--radius-nm",
            "5",
        ],
        &[
            "wavefunction",
            "--tau",
            "K",
            "--m",
            "0",
            "--n",
            "1",
            "--radius-nm",
            "5",
            "--samples",
            "4",
        ],
    ),
    (
        &["lattice", "--radius-nm", "1"],
        &["lattice", "--radius-nm", "1", "--center", "corner"],
        &["lattice", "--radius-nm=0"],
    ),
    (
        &["landau", "--b-tesla", "1"],
        &["landau", "--b-tesla", "1", "--units", "cgs"],
        &["landau", "--b-tesla=-1"],
    ),
    (
        &[
            "iv-staircase",
            "--capacitance-af",
            "1",
            "--v-max",
            "1",
            "--samples",
            "11",
        ],
        &["iv-staircase", "--capacitance-af", "1", "--v-max", "1"],
        &[
            "iv-staircase",
            "--capacitance-af=0",
            "--v-max",
            "1",
            "--samples",
            "11",
        ],
    ),
    (
        &[
            "brus",
            "--e-gap-ev",
            "1.7",
            "--me",
            "0.1",
            "--mh",
            "0.4",
            "--radius-nm",
            "3",
        ],
        &[
            "brus",
            "--e-gap-ev",
            "1.7",
            "--me",
            "0.1",
            "--mh",
            "0.4",
            "--radius-nm",
            "3",
            "--sweep",
            "1:2:2",
        ],
        &[
            "brus",
            "--e-gap-ev",
            "1.7",
            "--me",
            "0.1",
            "--mh",
            "0.4",
            "--radius-nm=0",
        ],
    ),
    (
        &["sv-ratio", "--diameter-m", "1e-8"],
        &["sv-ratio"],
        &["sv-ratio", "--diameter-m=0"],
    ),
    (
        &["charging-energy", "--capacitance-af", "1"],
        &[
            "charging-energy",
            "--capacitance-af",
            "1",
            "--capacitance-af",
            "2",
        ],
        &["charging-energy", "--capacitance-af=0"],
    ),
    (
        &[
            "blockade-check",
            "--capacitance-af",
            "16",
            "--temperature-k",
            "0.1",
        ],
        &["blockade-check", "--capacitance-af", "16"],
        &[
            "blockade-check",
            "--capacitance-af",
            "16",
            "--temperature-k=-1",
        ],
    ),
    (
        &["bessel", "--m", "0", "--x", "2.5"],
        &["bessel", "--m", "0"],
        &["bessel", "--m", "0", "--x=-1"],
    ),
];
