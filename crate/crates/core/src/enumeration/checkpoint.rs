//! Resumable progress files, written atomically (temp file then rename).

use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;

use super::EnumerationError;

pub(crate) fn load<T: DeserializeOwned>(path: &Path) -> Result<Option<T>, EnumerationError> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(source) => return Err(EnumerationError::CheckpointIo { path: path.display().to_string(), source }),
    };
    serde_json::from_str(&text)
        .map(Some)
        .map_err(|e| EnumerationError::CheckpointFormat { path: path.display().to_string(), reason: e.to_string() })
}

pub(crate) fn store<T: Serialize>(path: &Path, value: &T) -> Result<(), EnumerationError> {
    let io = |source| EnumerationError::CheckpointIo { path: path.display().to_string(), source };
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let text = serde_json::to_string(value).expect("checkpoint state serialises");
    fs::write(&tmp, text).map_err(io)?;
    fs::rename(&tmp, path).map_err(io)
}

pub(crate) fn pool(jobs: Option<usize>) -> Result<rayon::ThreadPool, EnumerationError> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        b = b.num_threads(j.max(1));
    }
    b.build().map_err(|e| EnumerationError::Threads(e.to_string()))
}
