use std::path::Path;
use std::process::{Command, Output};

fn gridify(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gridify"))
        .current_dir(dir)
        .args(args)
        .output()
        .unwrap()
}

fn ok(dir: &Path, args: &[&str]) -> String {
    let o = gridify(dir, args);
    assert!(
        o.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    String::from_utf8(o.stdout).unwrap()
}

fn json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn hausdorff_pipeline() {
    let d = tempfile::tempdir().unwrap();
    let p = d.path();
    ok(
        p,
        &[
            "fixture",
            "random",
            "--n",
            "25",
            "--seed",
            "3",
            "--resolution",
            "100",
            "--out",
            "poly.json",
        ],
    );
    ok(
        p,
        &[
            "hausdorff",
            "--in",
            "poly.json",
            "--strategy",
            "greedy",
            "--post",
            "add,remove,shift",
            "--out",
            "cells.json",
            "--svg",
            "out.svg",
            "--report",
            "h.json",
        ],
    );
    assert!(std::fs::read_to_string(p.join("out.svg"))
        .unwrap()
        .starts_with("<svg"));
    ok(
        p,
        &[
            "metrics",
            "--poly",
            "poly.json",
            "--cells",
            "cells.json",
            "--out",
            "m.json",
        ],
    );
    let m = json(&p.join("m.json"));
    let r = 1.5 * std::f64::consts::SQRT_2 + 1e-3;
    for k in [
        "hausdorff_boundary_pq",
        "hausdorff_boundary_qp",
        "hausdorff_region_pq",
        "hausdorff_region_qp",
    ] {
        assert!(m[k]["value"].as_f64().unwrap() <= r, "{k}");
    }
    assert!(m["frechet"]["value"].as_f64().is_some());
    assert!(m["symmetric_difference_normalized"].as_f64().unwrap() < 1.0);
    assert_eq!(json(&p.join("h.json")), m);
    let clues = ok(p, &["nonogram", "--cells", "cells.json"]);
    assert!(clues.starts_with("rows\n") && clues.contains("columns\n"));
}

#[test]
fn frechet_report() {
    let d = tempfile::tempdir().unwrap();
    let p = d.path();
    ok(
        p,
        &[
            "fixture", "comb", "--beta", "3", "--format", "text", "--out", "comb.txt",
        ],
    );
    ok(
        p,
        &[
            "frechet",
            "--in",
            "comb.txt",
            "--out",
            "cells.json",
            "--report",
            "bound.json",
        ],
    );
    let b = json(&p.join("bound.json"));
    let (beta, bound, d_f) = (
        b["beta_measured"].as_f64().unwrap(),
        b["claimed_bound"].as_f64().unwrap(),
        b["measured_frechet"].as_f64().unwrap(),
    );
    assert!((beta - 3.0).abs() < 0.05, "{beta}");
    assert!(d_f <= bound + 1e-3);
    let n = json(&p.join("cells.json"));
    assert!(!n["cells"].as_array().unwrap().is_empty());
    let w = ok(
        p,
        &["narrowness", "--in", "comb.txt", "--alpha", "1.4142135623730951"],
    );
    let w: serde_json::Value = serde_json::from_str(&w).unwrap();
    assert_eq!(w["beta"].as_f64().unwrap(), beta);
}

#[test]
fn validation_errors_exit_2() {
    let d = tempfile::tempdir().unwrap();
    let p = d.path();
    std::fs::write(p.join("bowtie.txt"), "0 0\n1 1\n0 1\n1 0\n").unwrap();
    std::fs::write(p.join("cells.json"), "{\"cells\": [[0,0],[1,1]]}").unwrap();
    for args in [
        &["frechet", "--in", "bowtie.txt"][..],
        &["hausdorff", "--in", "missing.json"],
        &["baseline"],
        &["fixture", "comb", "--beta", "0.5"],
        &["fixture", "random", "--n", "5", "--offset", "1.5,0"],
        &["metrics", "--poly", "bowtie.txt", "--cells", "cells.json"],
        &["hausdorff", "--strategy", "sideways"],
        &["experiment", "--config", "missing.json"],
    ] {
        let o = gridify(p, args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn experiment_csv_is_deterministic() {
    let d = tempfile::tempdir().unwrap();
    let p = d.path();
    ok(
        p,
        &[
            "fixture",
            "sliver",
            "--length",
            "5",
            "--width",
            "0.8",
            "--out",
            "sliver.json",
        ],
    );
    std::fs::write(
        p.join("cfg.json"),
        r#"{
            "resolutions": [64, 144],
            "offsets": {"random": 2},
            "seeds": [1, 2],
            "algorithms": ["hausdorff_plain", "hausdorff_post", "frechet", "optimal_baseline"],
            "corpus": [{"file": "sliver.json"}, {"random": {"n": 15, "seed": 4}}, {"outline": "island"}]
        }"#,
    )
    .unwrap();
    ok(
        p,
        &[
            "experiment",
            "--config",
            "cfg.json",
            "--jobs",
            "1",
            "--out",
            "a.csv",
            "--aggregate",
            "agg.csv",
        ],
    );
    ok(
        p,
        &["experiment", "--in", "cfg.json", "--jobs", "3", "--out", "b.csv"],
    );
    let a = std::fs::read_to_string(p.join("a.csv")).unwrap();
    assert_eq!(a, std::fs::read_to_string(p.join("b.csv")).unwrap());
    assert_eq!(a.lines().count(), 2 + 3 * 2 * 4 * 4);
    assert!(a
        .lines()
        .next()
        .unwrap()
        .starts_with("# gridify-experiment-cases"));
    let agg = std::fs::read_to_string(p.join("agg.csv")).unwrap();
    assert_eq!(agg.lines().count(), 2 + 3 * 2 * 4);
}

#[test]
fn render_without_cells() {
    let d = tempfile::tempdir().unwrap();
    let p = d.path();
    std::fs::write(p.join("tri.txt"), "# triangle\n0 0\n3 0\n0 2\n").unwrap();
    let svg = ok(p, &["render", "--in", "tri.txt"]);
    assert!(svg.contains(r#"viewBox="-0.5 -2.5 4 3""#));
    assert!(!svg.contains("<rect"));
}
