//! Artifact writing: stdout or an atomically replaced file.
//!
//! File writes go to a temporary file in the destination directory and are
//! renamed into place only after the full artifact has been produced, so a
//! failing run never leaves a partial output behind.

use std::io::Write;
use std::path::{Path, PathBuf};

use lexbias::Result;

#[derive(Debug, Clone)]
pub enum Sink {
    Stdout,
    File(PathBuf),
}

impl Sink {
    pub fn from_flag(out: Option<PathBuf>) -> Sink {
        match out {
            Some(p) => Sink::File(p),
            None => Sink::Stdout,
        }
    }

    /// Write the complete artifact. Callers build the full byte string
    /// first; errors during computation therefore never touch the target.
    pub fn write(&self, content: &str) -> Result<()> {
        match self {
            Sink::Stdout => {
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(content.as_bytes())?;
                Ok(())
            }
            Sink::File(path) => write_atomic(path, content.as_bytes()),
        }
    }
}

/// Temp file in the target's directory + rename, so the target either keeps
/// its old content or holds the complete new artifact.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
        _ => PathBuf::from("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(&dir)?;
    tmp.write_all(bytes)?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| lexbias::Error::Io(e.error))?;
    Ok(())
}
