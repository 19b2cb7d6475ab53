use std::io::{BufRead, BufReader};
use std::process::{Command, Stdio};

const EXE: &str = env!("CARGO_BIN_EXE_zeroth");

fn zeroth(args: &[&str]) -> std::process::Output {
    Command::new(EXE).args(args).output().unwrap()
}

#[test]
fn run_writes_history() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("h.csv");
    let o = zeroth(&[
        "run", "--algo", "sracos", "--func", "sphere", "--dim", "2", "--budget", "200", "--seed", "1", "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().count(), 201);
    assert!(String::from_utf8_lossy(&o.stdout).starts_with("best value"));
}

#[test]
fn unknown_algorithm_exits_2_with_usage() {
    let o = zeroth(&["run", "--algo", "foo", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("Usage") || err.contains("--help"), "{err}");
    assert_eq!(zeroth(&[]).status.code(), Some(2));
    assert_eq!(zeroth(&["run", "--budget", "10", "--bounds", "1"]).status.code(), Some(2));
}

#[test]
fn time_limit_has_its_own_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("h.csv");
    let o = zeroth(&[
        "run", "--func", "ackley", "--dim", "3", "--budget", "100000000", "--delay-loops", "1000000", "--time-limit",
        "0.3", "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(3), "{}", String::from_utf8_lossy(&o.stderr));
    let rows = std::fs::read_to_string(&out).unwrap().lines().count();
    assert!(rows > 1 && rows < 100_000_001);
}

#[test]
fn noise_and_embedding_flags() {
    let o = zeroth(&[
        "run", "--func", "sphere", "--dim", "2", "--budget", "300", "--noise-sigma", "0.1", "--noise-mode", "resample",
        "--resample-m", "4",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let o = zeroth(&[
        "run", "--func", "lowdim_sphere", "--effective-dims", "2", "--dim", "50", "--budget", "500", "--embed-dlow", "3",
        "--sre-stages", "2",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    // racos cannot use threshold acceptance
    let o = zeroth(&["run", "--algo", "racos", "--budget", "300", "--noise-mode", "threshold", "--threshold", "0.1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn poss_subcommand() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("cov.json");
    std::fs::write(
        &inst,
        r#"{"type":"max_coverage","n":5,"sets":[[0,1,2,3,8],[0,1,4,5],[2,3,6,7],[4,6],[5,7]],"universe":9}"#,
    )
    .unwrap();
    let out = dir.path().join("h.csv");
    let o = zeroth(&["poss", "--instance", inst.to_str().unwrap(), "--k", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let stdout = String::from_utf8_lossy(&o.stdout);
    assert!(stdout.contains("selected 1 2"), "{stdout}");
    assert!(stdout.contains("best value -8"), "{stdout}");
    // default budget: ceil(2e * k^2 * n) + 1 = 110
    assert_eq!(std::fs::read_to_string(&out).unwrap().lines().count(), 111);
    let o = zeroth(&["poss", "--instance", "/nonexistent.json", "--k", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn control_evalserver_client_processes() {
    let mut control = Command::new(EXE)
        .args(["control", "--listen", "127.0.0.1:0"])
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    let mut line = String::new();
    BufReader::new(control.stdout.take().unwrap()).read_line(&mut line).unwrap();
    let addr = line.trim().strip_prefix("listening ").unwrap().to_string();
    let mut workers: Vec<_> = (0..2)
        .map(|_| {
            Command::new(EXE)
                .args(["evalserver", "--control", &addr, "--listen", "127.0.0.1:0"])
                .stdout(Stdio::null())
                .spawn()
                .unwrap()
        })
        .collect();
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("h.csv");
    let o = zeroth(&[
        "client", "--control", &addr, "--servers", "2", "--func", "ackley", "--dim", "4", "--budget", "150", "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(std::fs::read_to_string(&out).unwrap().lines().count(), 151);
    for w in workers.iter_mut().chain(std::iter::once(&mut control)) {
        let _ = w.kill();
        let _ = w.wait();
    }
}

#[test]
fn scaling_csv_shape() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.csv");
    let o = zeroth(&[
        "scaling-exp", "--servers", "1,2", "--budget", "60", "--delay-loops", "1000", "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "servers,wall_ms");
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("1,") && lines[2].starts_with("2,"));
}
