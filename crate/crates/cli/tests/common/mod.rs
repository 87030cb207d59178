#![allow(dead_code)]

use crtfourier_cli::csvio;
use num_complex::Complex64;
use rand::Rng;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

pub fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_crtfourier")
}

pub fn data_path(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join(rel)
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run(args: &[&str], stdin: Option<&str>) -> Run {
    let mut child = Command::new(bin())
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn crtfourier");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).unwrap();
        }
    }
    let Output {
        status,
        stdout,
        stderr,
    } = child.wait_with_output().unwrap();
    Run {
        code: status.code().unwrap_or(-1),
        stdout: String::from_utf8(stdout).unwrap(),
        stderr: String::from_utf8(stderr).unwrap(),
    }
}

pub fn read_csv_text(text: &str) -> (String, Vec<(String, Complex64)>) {
    let mut lines = text.lines();
    let header = lines.next().unwrap_or_default().to_string();
    let rows = lines
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            assert_eq!(f.len(), 3, "bad row {l:?}");
            (
                f[0].to_string(),
                Complex64::new(f[1].parse().unwrap(), f[2].parse().unwrap()),
            )
        })
        .collect();
    (header, rows)
}

/// Compares CSV output with a golden file: identical header and first
/// column, values within `tol`.
pub fn check_golden_csv(actual: &str, golden: &str, tol: f64) -> Result<(), String> {
    let want = std::fs::read_to_string(data_path(golden)).map_err(|e| format!("{golden}: {e}"))?;
    let (ha, ra) = read_csv_text(actual);
    let (hw, rw) = read_csv_text(&want);
    if ha != hw {
        return Err(format!("{golden}: header {ha:?} != {hw:?}"));
    }
    if ra.len() != rw.len() {
        return Err(format!(
            "{golden}: {} rows, expected {}",
            ra.len(),
            rw.len()
        ));
    }
    for ((la, za), (lw, zw)) in ra.iter().zip(&rw) {
        let same_label = la == lw
            || matches!((la.parse::<f64>(), lw.parse::<f64>()), (Ok(a), Ok(b)) if (a - b).abs() <= tol);
        if !same_label || (za - zw).norm() > tol {
            return Err(format!("{golden}: row {la} {za} vs {lw} {zw}"));
        }
    }
    Ok(())
}

/// Compares `key=value` (or bare value) output line by line: numbers within
/// `tol`, anything else exactly.
pub fn check_golden_text(actual: &str, golden: &str, tol: f64) -> Result<(), String> {
    let want = std::fs::read_to_string(data_path(golden)).map_err(|e| format!("{golden}: {e}"))?;
    let a: Vec<&str> = actual.lines().collect();
    let w: Vec<&str> = want.lines().collect();
    if a.len() != w.len() {
        return Err(format!("{golden}: {} lines, expected {}", a.len(), w.len()));
    }
    for (la, lw) in a.iter().zip(&w) {
        let (ka, va) = la.split_once('=').unwrap_or(("", la));
        let (kw, vw) = lw.split_once('=').unwrap_or(("", lw));
        let ok = ka == kw
            && (va == vw
                || matches!((va.parse::<f64>(), vw.parse::<f64>()), (Ok(x), Ok(y)) if (x - y).abs() <= tol));
        if !ok {
            return Err(format!("{golden}: {la:?} vs {lw:?}"));
        }
    }
    Ok(())
}

pub fn random_csv<R: Rng>(rng: &mut R, n: usize) -> (String, Vec<Complex64>) {
    let values: Vec<Complex64> = (0..n)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let mut buf = Vec::new();
    csvio::write_indexed(&mut buf, &values).unwrap();
    (String::from_utf8(buf).unwrap(), values)
}

pub fn values(text: &str) -> Vec<Complex64> {
    read_csv_text(text).1.into_iter().map(|(_, z)| z).collect()
}

pub fn max_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

pub fn key_value(text: &str, key: &str) -> Option<String> {
    text.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix('=')))
        .map(str::to_string)
}
