use std::fs;
use std::process::{Command, Output};

use num_complex::Complex64;
use serde_json::Value;
use triop::format::{format_vertices, parse_triangle};
use triop::{CirculantOperator, PqPair};

fn triop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_triop"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn literal(z: Complex64) -> String {
    format!("{:?}{:+?}i", z.re, z.im)
}

#[test]
fn apply_matches_library_bit_for_bit() {
    let tri = "0.3,-1.25,2,0.5,-0.75,1.5";
    let o = triop(&["apply", "--p", "0.2-0.7i", "--q", "-3/4", "--triangle", tri]);
    assert!(o.status.success(), "{}", stderr(&o));
    let op = CirculantOperator::from_pq(
        PqPair::new(Complex64::new(0.2, -0.7), Complex64::new(-0.75, 0.0)).unwrap(),
    );
    let image = op.apply(&parse_triangle(tri).unwrap());
    assert_eq!(
        stdout(&o).lines().next().unwrap(),
        format_vertices(&image.vertices())
    );
}

#[test]
fn routh_area_ratio() {
    let o = triop(&[
        "apply",
        "--p",
        "1/3",
        "--q",
        "2/3",
        "--triangle",
        "0,0,1,0,0.7,0.8",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let line = stdout(&o).lines().nth(1).unwrap().to_string();
    assert!(line.starts_with("area_ratio=0.142857142857"), "{line}");
}

fn assert_reports_agree(a: &Value, b: &Value) {
    for (key, va) in a.as_object().unwrap() {
        if key == "p" || key == "q" {
            continue;
        }
        let vb = &b[key];
        match (va, vb) {
            (Value::Object(x), Value::Object(y)) => {
                for part in ["re", "im"] {
                    let d = x[part].as_f64().unwrap() - y[part].as_f64().unwrap();
                    assert!(d.abs() < 1e-12, "{key}.{part}: {va} vs {vb}");
                }
            }
            _ => assert_eq!(va, vb, "{key}"),
        }
    }
}

#[test]
fn both_charts_give_the_same_classification() {
    let theta = 0.9_f64;
    let e = Complex64::from_polar(1.0, theta);
    let p = (1.0 + 2.0 * e) / (2.0 + e);
    let pair = PqPair::new(p, Complex64::new(0.5, 0.0)).unwrap();
    let eta = CirculantOperator::from_pq(pair).eta_of();

    let by_pq = triop(&["classify", "--p", &literal(p), "--q", "1/2"]);
    let by_eta = triop(&[
        "classify",
        "--eta",
        &literal(eta.eta),
        "--etap",
        &literal(eta.etap),
    ]);
    assert!(by_pq.status.success() && by_eta.status.success());
    let a: Value = serde_json::from_str(&stdout(&by_pq)).unwrap();
    let b: Value = serde_json::from_str(&stdout(&by_eta)).unwrap();
    assert_eq!(a["area_preserving"], Value::Bool(true));
    assert_eq!(a["normal"], Value::Bool(true));
    assert_reports_agree(&a, &b);
}

#[test]
fn classify_reports_infinite_and_indeterminate_values() {
    let o = triop(&["classify", "--eta", "1", "--etap", "0"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["xi"], Value::String("inf".into()));
    assert_eq!(v["regular"], Value::Bool(false));
}

fn polygon_points(svg: &str) -> Vec<Vec<f64>> {
    svg.lines()
        .filter_map(|l| l.split("points=\"").nth(1))
        .map(|rest| {
            rest.split('"')
                .next()
                .unwrap()
                .split([' ', ','])
                .map(|x| x.parse().unwrap())
                .collect()
        })
        .collect()
}

#[test]
fn orbit_svg_closes_after_twenty_steps() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("out.svg");
    let csv = dir.path().join("out.csv");
    let args = [
        "orbit",
        "--theta-x",
        "1/4",
        "--theta-y",
        "1/5",
        "--steps",
        "20",
        "--svg",
        svg.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ];
    let o = triop(&args);
    assert!(o.status.success(), "{}", stderr(&o));
    let first = fs::read_to_string(&svg).unwrap();
    let polys = polygon_points(&first);
    assert_eq!(polys.len(), 21);
    for (a, b) in polys[0].iter().zip(&polys[20]) {
        assert!((a - b).abs() < 1e-5);
    }
    assert!(first.starts_with("<?xml") && first.contains("version=\"1.1\""));

    let rows = fs::read_to_string(&csv).unwrap();
    assert_eq!(
        rows.lines().next().unwrap(),
        "n,re_a,im_a,re_b,im_b,re_c,im_c"
    );
    assert_eq!(rows.lines().count(), 22);

    assert!(triop(&args).status.success());
    assert_eq!(fs::read_to_string(&svg).unwrap(), first);
}

#[test]
fn orbit_csv_goes_to_stdout_without_files() {
    let o = triop(&[
        "orbit",
        "--theta-x",
        "1/4",
        "--theta-y",
        "1/7",
        "--theta-yp",
        "25/28",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 1 + 29);
    assert!(out
        .lines()
        .nth(1)
        .unwrap()
        .starts_with("0,0,0,1,0,0.69999999999999996,"));
}

#[test]
fn orbit_angle_constraint_is_a_domain_error() {
    let o = triop(&[
        "orbit",
        "--theta-x",
        "1/4",
        "--theta-y",
        "1/5",
        "--theta-yp",
        "1/5",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn division_points_print_infinity() {
    let o = triop(&["division-points", "--n", "6"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[0], "0,0");
    assert_eq!(lines[4], "4,inf");
}

#[test]
fn verify_suites() {
    let o = triop(&["verify", "--suite", "routh"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS [ 1]"));
    assert_eq!(
        triop(&["verify", "--suite", "everything"]).status.code(),
        Some(2)
    );
}

#[test]
fn exit_codes() {
    let bad = triop(&[
        "apply",
        "--p",
        "2+",
        "--q",
        "0",
        "--triangle",
        "0,0,1,0,0,1",
    ]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(stderr(&bad).contains("position 2"), "{}", stderr(&bad));
    assert_eq!(
        triop(&[
            "apply",
            "--p",
            "2",
            "--q",
            "1/2",
            "--triangle",
            "0,0,1,0,0,1"
        ])
        .status
        .code(),
        Some(3)
    );
    assert_eq!(
        triop(&["apply", "--p", "0", "--q", "0", "--triangle", "0,0,0,0,0,1"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(triop(&["bogus"]).status.code(), Some(2));
    assert_eq!(triop(&["--help"]).status.code(), Some(0));
}
