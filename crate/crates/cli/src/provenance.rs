//! Provenance for output artifacts: tool version, config hash, input
//! checksums, and a per-command manifest file.
//!
//! Everything recorded here is deterministic (no timestamps, no absolute
//! paths), so rerunning a command on identical inputs reproduces every
//! artifact byte for byte.

use std::io::Read;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::Serialize;
use sha2::{Digest, Sha256};

pub const TOOL: &str = "dormancy";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub fn sha256_hex(path: &Path) -> Result<String> {
    let mut file = std::fs::File::open(path)
        .with_context(|| format!("cannot open {}", path.display()))?;
    let mut hasher = Sha256::new();
    let mut buf = [0u8; 64 * 1024];
    loop {
        let n = file.read(&mut buf)?;
        if n == 0 {
            break;
        }
        hasher.update(&buf[..n]);
    }
    Ok(hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect())
}

fn basename(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

#[derive(Debug, Clone, Serialize)]
pub struct FileStamp {
    pub file: String,
    pub sha256: String,
}

#[derive(Debug, Serialize)]
pub struct Provenance {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub config_hash: String,
    pub inputs: Vec<FileStamp>,
}

impl Provenance {
    pub fn new(command: &str, config_hash: &str) -> Provenance {
        Provenance {
            tool: TOOL,
            version: VERSION,
            command: command.to_string(),
            config_hash: config_hash.to_string(),
            inputs: Vec::new(),
        }
    }

    pub fn input(mut self, path: &Path) -> Result<Provenance> {
        self.inputs.push(FileStamp {
            file: basename(path),
            sha256: sha256_hex(path)?,
        });
        Ok(self)
    }

    /// Comment lines for CSV/TSV artifact headers.
    pub fn comment_lines(&self) -> Vec<String> {
        let mut lines = vec![
            format!("tool={} {}", self.tool, self.version),
            format!("command={}", self.command),
            format!("config={}", self.config_hash),
        ];
        for i in &self.inputs {
            lines.push(format!("input={} sha256={}", i.file, i.sha256));
        }
        lines
    }
}

#[derive(Debug, Serialize)]
struct Manifest<'a> {
    #[serde(flatten)]
    provenance: &'a Provenance,
    outputs: Vec<FileStamp>,
}

/// Write `<command>_manifest.json` next to the artifacts, stamping every
/// output file.
pub fn write_manifest(prov: &Provenance, out_dir: &Path, outputs: &[PathBuf]) -> Result<PathBuf> {
    let mut stamps = Vec::with_capacity(outputs.len());
    for path in outputs {
        stamps.push(FileStamp {
            file: basename(path),
            sha256: sha256_hex(path)?,
        });
    }
    let manifest = Manifest {
        provenance: prov,
        outputs: stamps,
    };
    let path = out_dir.join(format!("{}_manifest.json", prov.command.replace('-', "_")));
    let mut json = serde_json::to_string_pretty(&manifest)?;
    json.push('\n');
    std::fs::write(&path, json).with_context(|| format!("cannot write {}", path.display()))?;
    Ok(path)
}
