use std::io::Write;
use std::path::Path;

use serde::Serialize;

/// Accumulates JSON lines so nothing reaches the destination unless the
/// command completes.
#[derive(Default)]
pub struct Lines(String);

impl Lines {
    pub fn push<T: Serialize>(&mut self, value: &T) {
        self.0
            .push_str(&serde_json::to_string(value).expect("reports serialize"));
        self.0.push('\n');
    }

    /// Writes to `out` via a temporary file in the same directory and a
    /// rename, or to standard output.
    pub fn emit(self, out: Option<&Path>) -> Result<(), String> {
        match out {
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout
                    .write_all(self.0.as_bytes())
                    .and_then(|_| stdout.flush())
                    .map_err(|e| format!("writing standard output: {e}"))
            }
            Some(path) => write_atomic(path, self.0.as_bytes()),
        }
    }
}

pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), String> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    tmp.write_all(bytes).map_err(|e| format!("{}: {e}", path.display()))?;
    tmp.persist(path)
        .map_err(|e| format!("{}: {}", path.display(), e.error))?;
    Ok(())
}
