use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use tempfile::TempDir;

const K33: &str = "6 9\n0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n";
const K4: &str = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
const C6: &str = "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n";
const P5: &str = "5 4\n0 1\n1 2\n2 3\n3 4\n";
const TWO_EDGES: &str = "4 2\n0 1\n2 3\n";

fn eccb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eccb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn eccb_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_eccb"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

/// Moore graph edge list via the `chain` command with one copy.
fn moore(dir: &Path, delta: &str, g: &str, name: &str) -> PathBuf {
    let o = eccb(&["chain", "--delta", delta, "--g", g, "--k", "1"]);
    assert_eq!(code(&o), 0);
    let text: String = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| format!("{l}\n"))
        .collect();
    write(dir, name, &text)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn compute_petersen() {
    let dir = TempDir::new().unwrap();
    let p = moore(dir.path(), "3", "5", "petersen.el");
    let o = eccb(&["compute", s(&p)]);
    assert_eq!(code(&o), 0);
    assert!(
        stdout(&o).starts_with("n=10 avec=2 girth=5 δ=Δ=3\n"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn compute_path_from_stdin() {
    let o = eccb_stdin(&["compute", "-"], P5);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("avec=16/5 (3.2)"));
}

#[test]
fn compute_json() {
    let o = eccb_stdin(&["--json", "compute", "-"], K33);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["avec"], "2/1");
    assert_eq!(v["girth"], 4);
    assert_eq!(v["totalEccentricity"], 12);
}

#[test]
fn disconnected_input_exits_2() {
    let o = eccb_stdin(&["compute", "-"], TWO_EDGES);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("graph is disconnected"));
}

#[test]
fn malformed_input_exits_2() {
    let o = eccb_stdin(&["compute", "-"], "3 2\n0 1\n");
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line 1"), "{}", stderr(&o));
    assert_eq!(code(&eccb(&["compute", "/nonexistent/graph.el"])), 2);
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(code(&eccb(&["frobnicate"])), 1);
    assert_eq!(code(&eccb(&["chain", "--delta", "3"])), 1);
    assert_eq!(code(&eccb(&["--help"])), 0);
}

#[test]
fn bound_petersen() {
    let dir = TempDir::new().unwrap();
    let p = moore(dir.path(), "3", "5", "petersen.el");
    let o = eccb(&["bound", s(&p)]);
    assert_eq!(code(&o), 0);
    let row = stdout(&o)
        .lines()
        .find(|l| l.starts_with("ThmGirthOdd "))
        .unwrap()
        .to_string();
    assert!(row.contains("37/4") && row.ends_with("satisfied"), "{row}");
}

#[test]
fn bound_k33() {
    let o = eccb_stdin(&["bound", "-"], K33);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let row = |id: &str| out.lines().find(|l| l.starts_with(id)).unwrap().to_string();
    assert!(row("ThmGirthEven ")
        .split_whitespace()
        .eq(["ThmGirthEven", "7", "satisfied"]));
    assert!(row("Eq2 ").split_whitespace().eq(["Eq2", "8", "satisfied"]));
}

#[test]
fn bound_only_json() {
    let o = eccb_stdin(&["--json", "bound", "--only", "ThmGirthEven", "-"], K33);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 1);
    assert_eq!(v[0]["value"], "7/1");
    assert_eq!(v[0]["constants"]["L"], "6/1");
    assert_eq!(v[0]["satisfied"], true);
}

#[test]
fn bound_cycle_not_applicable() {
    let o = eccb_stdin(&["bound", "-"], C6);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    for l in out.lines().filter(|l| l.starts_with("ThmGirth")) {
        assert!(l.contains("not-applicable"), "{l}");
    }
    assert!(out
        .lines()
        .any(|l| l.starts_with("Eq1 ") && l.ends_with("satisfied")));
}

#[test]
fn certify_petersen_writes_certificate() {
    let dir = TempDir::new().unwrap();
    let p = moore(dir.path(), "3", "5", "petersen.el");
    let o = eccb(&["certify", "--out", s(dir.path()), s(&p)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("allStepsHold=true"));
    let cert: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("petersen.cert.json")).unwrap())
            .unwrap();
    assert_eq!(cert["variant"], "odd");
    assert_eq!(cert["allStepsHold"], true);
    assert_eq!(cert["structureOk"], true);
    assert_eq!(cert["chain"]["finalBound"], "37/4");
}

#[test]
fn certify_heawood_even() {
    let dir = TempDir::new().unwrap();
    let p = moore(dir.path(), "3", "6", "heawood.el");
    let o = eccb(&["certify", s(&p)]);
    assert_eq!(code(&o), 0);
    assert!(
        stdout(&o).starts_with("even ThmGirthEven"),
        "{}",
        stdout(&o)
    );
    assert!(stdout(&o).contains("allStepsHold=true"));
}

#[test]
fn certify_k4_max_degree() {
    let dir = TempDir::new().unwrap();
    let p = write(dir.path(), "k4.el", K4);
    let o = eccb(&["certify", "--maxdeg", "--out", s(dir.path()), s(&p)]);
    assert_eq!(code(&o), 0);
    let cert: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("k4.maxdeg.cert.json")).unwrap())
            .unwrap();
    assert_eq!(cert["boundId"], "ThmGirthMaxDegOdd");
    assert_eq!(cert["chain"]["K1"], "4/1");
    assert_eq!(cert["chain"]["K2"], "4/1");
}

#[test]
fn certify_low_degree_exits_3() {
    let o = eccb_stdin(&["certify", "-"], C6);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("not applicable"));
}

#[test]
fn certificates_are_stable() {
    let a = eccb_stdin(&["--json", "certify", "-"], K33);
    let b = eccb_stdin(&["--json", "certify", "-"], K33);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn generate_is_deterministic() {
    let args = [
        "generate", "--n", "20", "--delta", "3", "--g", "5", "--seed", "1",
    ];
    let a = eccb(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, eccb(&args).stdout);
    let o = eccb_stdin(&["compute", "-"], &stdout(&a));
    let first = stdout(&o).lines().next().unwrap().to_string();
    let girth: usize = first
        .split_whitespace()
        .find_map(|t| t.strip_prefix("girth="))
        .unwrap()
        .parse()
        .unwrap();
    assert!(girth >= 5, "{first}");
}

#[test]
fn generate_impossible_exits_3() {
    let o = eccb(&["generate", "--n", "4", "--delta", "3", "--g", "4"]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("Failure"));
}

#[test]
fn chain_of_three_petersens() {
    let o = eccb(&["chain", "--delta", "3", "--g", "5", "--k", "3"]);
    assert_eq!(code(&o), 0);
    let first = stdout(&o).lines().next().unwrap().to_string();
    assert!(first.starts_with("n=30 "), "{first}");
    assert!(first.ends_with("diameter=10"), "{first}");
}

#[test]
fn chain_report_csv() {
    let o = eccb(&["chain", "--delta", "3", "--g", "5", "--k", "2", "--report"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines[0],
        "k,n,avec,avec_exact,lower,lower_exact,upper,upper_exact,gap,gap_exact"
    );
    assert!(lines[1].starts_with("1,10,2.000000,2/1,"));
    assert!(lines[2].starts_with("2,20,"));
    assert_eq!(lines.len(), 3);
}

#[test]
fn batch_generated_corpus() {
    let dir = TempDir::new().unwrap();
    let args = [
        "batch",
        "--delta",
        "3",
        "--g",
        "5",
        "--n",
        "40",
        "--count",
        "25",
        "--seed",
        "7",
        "--out",
        s(dir.path()),
    ];
    let o = eccb(&args);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let csv = fs::read_to_string(dir.path().join("report.csv")).unwrap();
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    assert_eq!(rows.len(), 25);
    let header: Vec<&str> = csv.lines().next().unwrap().split(',').collect();
    let cert = header.iter().position(|&h| h == "certificateOk").unwrap();
    let sat: Vec<usize> = header
        .iter()
        .enumerate()
        .filter(|(_, h)| h.ends_with("_satisfied"))
        .map(|(i, _)| i)
        .collect();
    for r in rows {
        let cols: Vec<&str> = r.split(',').collect();
        assert_eq!(cols[cert], "true", "{r}");
        assert!(sat.iter().all(|&i| cols[i] != "false"), "{r}");
    }
    assert_eq!(eccb(&args).stdout, o.stdout);
    let again = fs::read_to_string(dir.path().join("report.csv")).unwrap();
    assert_eq!(csv, again);
}

#[test]
fn batch_directory() {
    let dir = TempDir::new().unwrap();
    let graphs = dir.path().join("graphs");
    fs::create_dir(&graphs).unwrap();
    write(&graphs, "k33.el", K33);
    write(&graphs, "k4.el", K4);
    write(&graphs, "c6.el", C6);
    let out = dir.path().join("out");
    let o = eccb(&["batch", s(&graphs), "--out", s(&out)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let csv = fs::read_to_string(out.join("report.csv")).unwrap();
    let ids: Vec<&str> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap())
        .collect();
    assert_eq!(ids, ["c6", "k33", "k4"]);
}

#[test]
fn batch_strict_on_failed_generation() {
    let dir = TempDir::new().unwrap();
    let base = [
        "batch",
        "--delta",
        "3",
        "--g",
        "4",
        "--n",
        "4",
        "--count",
        "2",
        "--out",
        s(dir.path()),
    ];
    assert_eq!(code(&eccb(&base)), 0);
    let mut strict = base.to_vec();
    strict.push("--strict");
    assert_eq!(code(&eccb(&strict)), 3);
}

#[test]
fn thread_cap_keeps_output() {
    let dir = TempDir::new().unwrap();
    let run = |threads: &str| {
        let o = Command::new(env!("CARGO_BIN_EXE_eccb"))
            .args([
                "batch", "--delta", "3", "--g", "6", "--n", "40", "--count", "8", "--seed", "3",
            ])
            .args(["--out", s(dir.path())])
            .env("ECCB_THREADS", threads)
            .output()
            .unwrap();
        assert_eq!(code(&o), 0);
        fs::read_to_string(dir.path().join("report.csv")).unwrap()
    };
    assert_eq!(run("1"), run("4"));
}
