//! File I/O for wire objects. Outputs are staged next to their destination
//! and renamed into place only once every output of a command is ready.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use ibpsc::codec::{decode, WireObject};
use ibpsc::CodecError;
use tempfile::NamedTempFile;

pub fn read(path: &Path) -> Result<Vec<u8>> {
    fs::read(path).with_context(|| format!("cannot read {}", path.display()))
}

/// Reads a trusted input (params, keys). Any decode failure is a usage error.
pub fn load<T: WireObject>(path: &Path) -> Result<T> {
    let bytes = read(path)?;
    decode(&bytes).with_context(|| format!("{} is not a valid {} file", path.display(), T::KIND.extension()))
}

/// Reads an object under verification. Files that are not of the expected
/// kind at all are a usage error; damage inside the body is an invalid
/// object and reported as `Ok(None)`.
pub fn load_untrusted<T: WireObject>(path: &Path) -> Result<Option<T>> {
    let bytes = read(path)?;
    match decode(&bytes) {
        Ok(x) => Ok(Some(x)),
        Err(e @ (CodecError::BadMagic | CodecError::BadVersion(_) | CodecError::KindMismatch { .. })) => {
            Err(e).with_context(|| format!("{} is not a {} file", path.display(), T::KIND.extension()))
        }
        Err(_) => Ok(None),
    }
}

/// Writes all `(path, bytes)` pairs or none of them.
pub fn write_all(outputs: &[(&Path, &[u8])]) -> Result<()> {
    let mut staged = Vec::with_capacity(outputs.len());
    for (path, bytes) in outputs {
        let dir = match path.parent() {
            Some(p) if !p.as_os_str().is_empty() => p,
            _ => Path::new("."),
        };
        let mut tmp = NamedTempFile::new_in(dir).with_context(|| format!("cannot write {}", path.display()))?;
        tmp.write_all(bytes)
            .and_then(|_| tmp.as_file().sync_all())
            .with_context(|| format!("cannot write {}", path.display()))?;
        staged.push((tmp, path.to_path_buf()));
    }
    let mut done: Vec<PathBuf> = Vec::with_capacity(staged.len());
    for (tmp, path) in staged {
        if let Err(e) = tmp.persist(&path) {
            for p in done {
                let _ = fs::remove_file(p);
            }
            return Err(e.error).with_context(|| format!("cannot write {}", path.display()));
        }
        done.push(path);
    }
    Ok(())
}
