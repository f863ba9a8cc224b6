//! End-to-end checks of the command-line interface: output formats and
//! the documented exit codes (0 ok, 1 usage, 2 verification failure,
//! 3 not converged).

use std::path::Path;
use std::process::{Command, Output};

fn tailwalk(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tailwalk"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn verify_passes_on_regular_graph() {
    let dir = tempfile::tempdir().unwrap();
    let out = tailwalk(&["verify", "--graph", "cycle:6"], dir.path());
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let text = stdout(&out);
    assert!(text.contains("PASS intertwining"));
    assert!(text.contains("all "));
}

#[test]
fn verify_json_schema() {
    let dir = tempfile::tempdir().unwrap();
    let out = tailwalk(&["verify", "--graph", "complete:5", "--seed", "7", "--json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["graph"], "complete:5");
    let checks = doc["checks"].as_array().unwrap();
    assert!(checks.len() >= 10);
    for check in checks {
        assert!(check["name"].is_string());
        assert_eq!(check["passed"], true);
        assert!(check["max_error"].is_number());
    }
}

#[test]
fn usage_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        vec!["verify", "--graph", "cycle:x"],
        vec!["verify", "--graph", "mystery:9"],
        vec!["verify", "--graph", "cycle:2"],
        vec!["verify", "--graph", "file:/nonexistent/graph.txt"],
        vec!["speed", "--family", "circulant", "--n-range", "6..10"],
        vec!["simulate", "--graph", "cycle:6"], // missing --steps
    ] {
        let out = tailwalk(&args, dir.path());
        assert_eq!(out.status.code(), Some(1), "args {args:?}: {out:?}");
    }
}

#[test]
fn speed_csv_schema() {
    let dir = tempfile::tempdir().unwrap();
    let out = tailwalk(
        &["speed", "--family", "cycle", "--n-range", "6..8", "--theta", "0,1"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("N,kappa,theta,t_star,lower,upper_stated,upper_theta,lower_ok,upper_ok")
    );
    assert_eq!(lines.count(), 6);
    assert!(text.contains("6,2,0.00000000000e0,3,"));
}

#[test]
fn speed_budget_exhaustion_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let out = tailwalk(
        &["speed", "--family", "complete", "--n-range", "10..10", "--tmax", "2"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(3), "{out:?}");
    assert!(String::from_utf8_lossy(&out.stderr).contains("skipping"));
}

#[test]
fn simulate_writes_csv_and_operator_dumps() {
    let dir = tempfile::tempdir().unwrap();
    let out = tailwalk(
        &[
            "simulate",
            "--graph",
            "cycle:6",
            "--steps",
            "3",
            "--dump-operators",
            "--out",
            "run.csv",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0), "{out:?}");

    let csv = std::fs::read_to_string(dir.path().join("run.csv")).unwrap();
    let mut lines = csv.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with("t,psi_min,psi_max,energy,d_t,mu_0"));
    assert_eq!(lines.clone().count(), 4);
    // at t = 1 every arc holds the inflow value 2/3
    let t1: Vec<&str> = lines.nth(1).unwrap().split(',').collect();
    assert_eq!(t1[1], "6.66666666667e-1");
    assert_eq!(t1[2], "6.66666666667e-1");

    for name in [
        "adjacency.txt",
        "shift.txt",
        "evolution.txt",
        "incidence.txt",
        "intertwiner.txt",
        "adjacency_evolution.txt",
    ] {
        assert!(dir.path().join(name).exists(), "{name} missing");
    }
    let evolution =
        tailwalk::DenseMatrix::from_text(&std::fs::read_to_string(dir.path().join("evolution.txt")).unwrap())
            .unwrap();
    assert_eq!((evolution.rows(), evolution.cols()), (12, 12));
}

#[test]
fn stationary_dump_from_edge_list_file() {
    let dir = tempfile::tempdir().unwrap();
    let graph_file = dir.path().join("path.txt");
    std::fs::write(&graph_file, "# path on four vertices\n4 3\n0 1\n1 2\n2 3\n").unwrap();
    let spec = format!("file:{}", graph_file.display());
    let out = tailwalk(&["stationary", "--graph", &spec], dir.path());
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let text = stdout(&out);
    assert!(text.contains("# arc origin terminal psi_inf"));
    assert!(text.contains("# vertex mu_inf"));
    assert!(text.contains("# energy"));
    // six arcs and four vertices listed
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 10);
}

#[test]
fn help_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let out = tailwalk(&["--help"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("simulate"));
}
