//! Objectives backed by an external process.
//!
//! The child is started once through `sh -c` and kept alive. For every
//! evaluation it receives one line of space-separated decimal coordinates
//! on stdin and must answer with one decimal value per line on stdout.

use std::io::{BufRead, BufReader, Write};
use std::process::{Child, ChildStdin, ChildStdout, Command, Stdio};
use std::sync::Mutex;

use crate::objective::{EvalError, Evaluator};

struct Pipe {
    child: Child,
    stdin: ChildStdin,
    stdout: BufReader<ChildStdout>,
}

pub struct CommandEvaluator {
    command: String,
    pipe: Mutex<Option<Pipe>>,
}

impl CommandEvaluator {
    pub fn new(command: impl Into<String>) -> Self {
        CommandEvaluator { command: command.into(), pipe: Mutex::new(None) }
    }

    fn spawn(&self) -> Result<Pipe, EvalError> {
        let mut child = Command::new("sh")
            .arg("-c")
            .arg(&self.command)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .spawn()
            .map_err(|e| EvalError(format!("cannot start `{}`: {e}", self.command)))?;
        let stdin = child.stdin.take().expect("piped");
        let stdout = BufReader::new(child.stdout.take().expect("piped"));
        Ok(Pipe { child, stdin, stdout })
    }
}

/// Space-separated shortest round-trip decimals, newline-terminated.
pub fn format_point(x: &[f64]) -> String {
    let mut line = x.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
    line.push('\n');
    line
}

impl Evaluator for CommandEvaluator {
    fn evaluate(&self, x: &[f64]) -> Result<f64, EvalError> {
        let mut guard = self.pipe.lock().unwrap_or_else(|p| p.into_inner());
        if guard.is_none() {
            *guard = Some(self.spawn()?);
        }
        let pipe = guard.as_mut().unwrap();
        let exchange = |pipe: &mut Pipe| -> Result<f64, EvalError> {
            pipe.stdin
                .write_all(format_point(x).as_bytes())
                .and_then(|_| pipe.stdin.flush())
                .map_err(|e| EvalError(format!("writing to `{}`: {e}", self.command)))?;
            let mut reply = String::new();
            let n = pipe
                .stdout
                .read_line(&mut reply)
                .map_err(|e| EvalError(format!("reading from `{}`: {e}", self.command)))?;
            if n == 0 {
                return Err(EvalError(format!("`{}` exited", self.command)));
            }
            reply
                .trim()
                .parse::<f64>()
                .map_err(|_| EvalError(format!("`{}` replied {:?}, not a number", self.command, reply.trim())))
        };
        let result = exchange(pipe);
        if result.is_err() {
            // restart on the next call
            if let Some(mut dead) = guard.take() {
                let _ = dead.child.kill();
                let _ = dead.child.wait();
            }
        }
        result
    }
}

impl Drop for CommandEvaluator {
    fn drop(&mut self) {
        if let Some(mut pipe) = self.pipe.get_mut().ok().and_then(Option::take) {
            drop(pipe.stdin);
            let _ = pipe.child.kill();
            let _ = pipe.child.wait();
        }
    }
}
