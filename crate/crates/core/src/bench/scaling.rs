//! Throughput experiment: the same delayed objective solved with an
//! increasing number of local evaluation server processes.

use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::process::{Child, Command, Stdio};
use std::time::{Duration, Instant};

use crate::bench::ObjectiveSpec;
use crate::dist::{request_shutdown, AsyncClient};
use crate::error::{Error, Result};
use crate::parameter::Parameter;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScalingRow {
    pub servers: usize,
    pub wall_ms: u64,
}

pub fn rows_to_csv(rows: &[ScalingRow]) -> String {
    let mut out = String::from("servers,wall_ms\n");
    for r in rows {
        out.push_str(&format!("{},{}\n", r.servers, r.wall_ms));
    }
    out
}

struct Children(Vec<Child>);

impl Drop for Children {
    fn drop(&mut self) {
        for c in &mut self.0 {
            let _ = c.kill();
            let _ = c.wait();
        }
    }
}

fn spawn_control(exe: &Path) -> Result<(Child, String)> {
    let mut child = Command::new(exe)
        .args(["control", "--listen", "127.0.0.1:0"])
        .stdout(Stdio::piped())
        .stderr(Stdio::inherit())
        .spawn()?;
    let stdout = child.stdout.take().expect("piped");
    let mut line = String::new();
    BufReader::new(stdout).read_line(&mut line)?;
    let addr = line
        .trim()
        .strip_prefix("listening ")
        .ok_or_else(|| Error::Protocol(format!("control server printed {line:?}")))?
        .to_string();
    Ok((child, addr))
}

/// For each worker count, start a fresh control server and that many
/// evaluation server processes from `exe`, then time one asynchronous run.
/// Only the optimization itself is timed, not process startup.
pub fn scaling_experiment(
    exe: &Path,
    worker_counts: &[usize],
    spec: &ObjectiveSpec,
    parameter: &Parameter,
) -> Result<Vec<ScalingRow>> {
    let mut rows = Vec::with_capacity(worker_counts.len());
    for &w in worker_counts {
        let (control, addr) = spawn_control(exe)?;
        let mut children = Children(vec![control]);
        for _ in 0..w {
            children.0.push(
                Command::new(exe)
                    .args(["evalserver", "--control", &addr, "--listen", "127.0.0.1:0"])
                    .stdout(Stdio::null())
                    .stderr(Stdio::inherit())
                    .spawn()?,
            );
        }
        let mut client = AsyncClient::connect(&addr, w, spec, Duration::from_secs(20))?;
        if client.servers().len() < w {
            return Err(Error::Protocol(format!("only {} of {w} evaluation servers registered", client.servers().len())));
        }
        let start = Instant::now();
        client.optimize(parameter)?;
        let wall_ms = start.elapsed().as_millis() as u64;
        let servers = client.servers();
        client.close()?;
        for s in &servers {
            let _ = request_shutdown(s.as_str());
        }
        let _ = request_shutdown(addr.as_str());
        for c in &mut children.0 {
            let _ = c.wait();
        }
        children.0.clear();
        rows.push(ScalingRow { servers: w, wall_ms });
    }
    Ok(rows)
}

pub fn write_rows(path: impl AsRef<Path>, rows: &[ScalingRow]) -> Result<()> {
    let mut f = std::fs::File::create(path)?;
    f.write_all(rows_to_csv(rows).as_bytes())?;
    Ok(())
}
