use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn winding(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_winding"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn setup() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    let files = [
        (
            "square.json",
            r#"{"closed":true,"points":[[-1,-1],[1,-1],[1,1],[-1,1]]}"#,
        ),
        (
            "transversal.json",
            r#"{"closed":false,"points":[[-3,0.5],[3,0.3]]}"#,
        ),
        ("touch.json", r#"{"closed":false,"points":[[-3,1],[-1,1]]}"#),
        (
            "vertical.json",
            r#"{"closed":false,"points":[[0,-1],[0.1,1]]}"#,
        ),
        (
            "horizontal.json",
            r#"{"closed":false,"points":[[-1,0],[1,0.2]]}"#,
        ),
        ("far.json", r#"{"closed":false,"points":[[5,5],[6,7]]}"#),
        ("bad.json", r#"{"closed":true,"points":[[0,0],[1]]}"#),
        (
            "other.json",
            r#"{"closed":true,"points":[[0,-2],[3,0.5],[-0.5,3]]}"#,
        ),
    ];
    for (name, text) in files {
        std::fs::write(dir.path().join(name), text).unwrap();
    }
    dir
}

#[test]
fn wind_examples() {
    let d = setup();
    let o = winding(d.path(), &["wind", "square.json", "--point", "0,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("w=1 residual="));
    let o = winding(d.path(), &["wind", "square.json", "--point", "10,10"]);
    assert!(stdout(&o).starts_with("w=0 "));
    let o = winding(d.path(), &["wind", "square.json", "--point", "-0.5,-0.25"]);
    assert!(stdout(&o).starts_with("w=1 "));
    let o = winding(d.path(), &["wind", "square.json", "--point", "1,0"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
}

#[test]
fn input_errors_exit_2() {
    let d = setup();
    for args in [
        &["wind", "bad.json", "--point", "0,0"][..],
        &["wind", "missing.json", "--point", "0,0"],
        &["wind", "square.json", "--point", "zero"],
        &["wind", "transversal.json", "--point", "0,0"],
        &["boundary", "square.json", "vertical.json"],
        &["color", "square.json", "--grid", "1x1", "--out", "x.svg"],
        &["color", "square.json", "--grid", "sixty", "--out", "x.svg"],
        &["gen", "loop", "--n", "2", "--radius", "-1"],
        &["gen", "symmetric", "--k", "1"],
        &["gen", "sector", "--j", "3"],
        &["verify", "--suite", "nonsense"],
    ] {
        assert_eq!(winding(d.path(), args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn classify_and_wprime() {
    let d = setup();
    let o = winding(d.path(), &["classify", "square.json", "--point", "1,0"]);
    assert_eq!(stdout(&o), "boundary\n");
    let o = winding(d.path(), &["classify", "square.json", "--point", "0.2,0.1"]);
    assert_eq!(stdout(&o), "off w=1 parity=1\n");
    let o = winding(d.path(), &["wprime", "square.json", "--point", "0,0"]);
    assert_eq!(stdout(&o), "w'=1\n");
}

#[test]
fn cross_examples() {
    let d = setup();
    let o = winding(
        d.path(),
        &["cross", "square.json", "transversal.json", "--signed"],
    );
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 3);
    assert!(text.ends_with("count=2 signed=0\n"));
    assert!(text.lines().next().unwrap().starts_with("(1,"));
    let o = winding(d.path(), &["cross", "square.json", "transversal.json"]);
    assert_eq!(stdout(&o), "count=2\n");
    let o = winding(d.path(), &["cross", "square.json", "other.json"]);
    let count: usize = stdout(&o)
        .trim()
        .strip_prefix("count=")
        .unwrap()
        .parse()
        .unwrap();
    assert_eq!(count % 2, 0);
    let o = winding(d.path(), &["cross", "square.json", "touch.json"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("general position"));
}

#[test]
fn boundary_examples() {
    let d = setup();
    let o = winding(d.path(), &["boundary", "vertical.json", "horizontal.json"]);
    let text = stdout(&o);
    assert!(text.starts_with("∂=-1 l·p=-1 agree=yes"), "{text}");
    let o = winding(d.path(), &["boundary", "vertical.json", "far.json"]);
    assert!(stdout(&o).starts_with("∂=0 l·p=0 agree=yes"));
    std::fs::write(
        d.path().join("end.json"),
        r#"{"closed":false,"points":[[0.05,0],[1,1]]}"#,
    )
    .unwrap();
    let o = winding(d.path(), &["boundary", "vertical.json", "end.json"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn color_writes_svg_and_histogram() {
    let d = setup();
    let o = winding(
        d.path(),
        &[
            "color",
            "square.json",
            "--grid",
            "64x64",
            "--mode",
            "parity",
            "--out",
            "a.svg",
            "--json",
            "g.json",
        ],
    );
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("label=0 cells="));
    assert!(text.contains("label=1 cells="));
    let svg = std::fs::read_to_string(d.path().join("a.svg")).unwrap();
    assert_eq!(svg.matches("<rect").count(), 64 * 64);
    let grid: Value =
        serde_json::from_str(&std::fs::read_to_string(d.path().join("g.json")).unwrap()).unwrap();
    assert_eq!(grid["nx"], 64);

    winding(
        d.path(),
        &[
            "color",
            "square.json",
            "--grid",
            "64x64",
            "--mode",
            "parity",
            "--out",
            "b.svg",
        ],
    );
    assert_eq!(
        svg,
        std::fs::read_to_string(d.path().join("b.svg")).unwrap()
    );

    // A retraced triangle only separates winding 0 from winding 2.
    let o = winding(d.path(), &["gen", "loop", "--n", "2"]);
    std::fs::write(d.path().join("loop.json"), &o.stdout).unwrap();
    let o = winding(
        d.path(),
        &["color", "loop.json", "--grid", "48x48", "--out", "c.svg"],
    );
    let text = stdout(&o);
    assert!(
        text.contains("label=0 cells=") && text.contains("label=2 cells="),
        "{text}"
    );
    assert!(!text.contains("label=1 "), "{text}");

    let spiral = r#"{"closed":true,"points":[[2,0],[-1,1.7320508],[-1,-1.7320508],[1,0],[-0.5,0.8660254],[-0.5,-0.8660254]]}"#;
    std::fs::write(d.path().join("spiral.json"), spiral).unwrap();
    let o = winding(
        d.path(),
        &["color", "spiral.json", "--grid", "48x48", "--out", "d.svg"],
    );
    let text = stdout(&o);
    for k in 0..=2 {
        assert!(text.contains(&format!("label={k} cells=")), "{text}");
    }
}

#[test]
fn generators_round_trip() {
    let d = setup();
    let o = winding(
        d.path(),
        &[
            "gen", "loop", "--n", "3", "--center", "0,0", "--radius", "1",
        ],
    );
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["closed"], true);
    assert_eq!(v["points"].as_array().unwrap().len(), 9);
    std::fs::write(d.path().join("l3.json"), &o.stdout).unwrap();
    assert!(stdout(&winding(d.path(), &["wind", "l3.json", "--point", "0,0"])).starts_with("w=3 "));

    let o = winding(
        d.path(),
        &[
            "gen", "loop", "--n", "0", "--center", "0,0", "--radius", "1",
        ],
    );
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["points"].as_array().unwrap().len(), 1);

    let o = winding(
        d.path(),
        &[
            "gen", "loop", "--n", "-2", "--center", "-3,4", "--radius", "2",
        ],
    );
    std::fs::write(d.path().join("neg.json"), &o.stdout).unwrap();
    assert!(
        stdout(&winding(d.path(), &["wind", "neg.json", "--point", "-3,4"])).starts_with("w=-2 ")
    );

    let a = winding(d.path(), &["gen", "symmetric", "--k", "4", "--seed", "7"]);
    let b = winding(d.path(), &["gen", "symmetric", "--k", "4", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
    std::fs::write(d.path().join("sym.json"), &a.stdout).unwrap();
    let w = stdout(&winding(d.path(), &["wind", "sym.json", "--point", "0,0"]));
    let w: i64 = w.split_whitespace().next().unwrap()[2..].parse().unwrap();
    assert_eq!(w.rem_euclid(2), 1);

    let o = winding(
        d.path(),
        &[
            "gen",
            "threepaths",
            "--n1",
            "2",
            "--n2",
            "-3",
            "--a",
            "-5,0",
            "--b",
            "5,0",
        ],
    );
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
    for path in v.as_array().unwrap() {
        assert_eq!(path["closed"], false);
        assert_eq!(path["points"][0], serde_json::json!([-5.0, 0.0]));
    }

    let o = winding(d.path(), &["gen", "sector", "--j", "1", "--seed", "3"]);
    std::fs::write(d.path().join("sector.json"), &o.stdout).unwrap();
    let wp = stdout(&winding(
        d.path(),
        &["wprime", "sector.json", "--point", "0,0"],
    ));
    assert_eq!(wp, "w'=0.333333333333\n");
}

#[test]
fn verify_exit_codes() {
    let d = setup();
    let o = winding(d.path(), &["verify", "--n", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text
        .lines()
        .skip(1)
        .take(31)
        .all(|l| l.ends_with("cases=0")));
    let o = winding(
        d.path(),
        &["verify", "--suite", "stokes", "--n", "50", "--seed", "3"],
    );
    let expect = if cfg!(feature = "inject-sign-flip") {
        1
    } else {
        0
    };
    assert_eq!(o.status.code(), Some(expect), "{}", stdout(&o));
}
