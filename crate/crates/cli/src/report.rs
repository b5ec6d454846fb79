use std::fmt;
use std::time::Duration;

use sha2::{Digest, Sha256};

/// What a command prints. Everything except `elapsed` is rendered to
/// stdout, so identical inputs give identical bytes.
#[derive(Clone, Debug, Default)]
pub struct RunReport {
    pub command: String,
    pub digest: Option<String>,
    pub lines: Vec<String>,
    pub checks: Vec<(String, bool)>,
    pub footer: Vec<String>,
    pub elapsed: Duration,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        Self { command: command.into(), ..Self::default() }
    }

    pub fn digest_of(&mut self, bytes: &[u8]) {
        let h = Sha256::digest(bytes);
        self.digest = Some(h.iter().take(8).map(|b| format!("{b:02x}")).collect());
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.checks.push((name.into(), ok));
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {}", self.command)?;
        if let Some(d) = &self.digest {
            writeln!(f, "# input sha256:{d}")?;
        }
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        for (name, ok) in &self.checks {
            writeln!(f, "{} {name}", if *ok { "PASS" } else { "FAIL" })?;
        }
        for l in &self.footer {
            writeln!(f, "{l}")?;
        }
        Ok(())
    }
}
