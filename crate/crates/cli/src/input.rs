//! Reading inputs with format detection, and recording what was read.

use std::fs;
use std::io::Read;
use std::path::Path;

use dichroma::cnf::CnfFormula;
use dichroma::io::{from_arc_list, from_digraph6};
use dichroma::Digraph;
use sha2::{Digest, Sha256};

use crate::{CliError, InputFormat};

/// Every input read during a run, in order, with its SHA-256.
#[derive(Debug, Default)]
pub struct Inputs {
    pub files: Vec<(String, String)>,
    hasher: Sha256,
}

impl Inputs {
    pub fn read(&mut self, path: &Path) -> Result<String, CliError> {
        let name = path.display().to_string();
        let mut bytes = Vec::new();
        let res = if name == "-" {
            std::io::stdin().read_to_end(&mut bytes).map(|_| ())
        } else {
            fs::read(path).map(|b| bytes = b)
        };
        res.map_err(|source| CliError::Read { path: name.clone(), source })?;
        self.hasher.update((bytes.len() as u64).to_le_bytes());
        self.hasher.update(&bytes);
        self.files.push((name.clone(), hex::encode(Sha256::digest(&bytes))));
        String::from_utf8(bytes).map_err(|_| CliError::Usage(format!("{name}: not UTF-8 text")))
    }

    pub fn digest(&self) -> String {
        hex::encode(self.hasher.clone().finalize())
    }
}

pub fn detect(path: &Path, text: &str, forced: Option<InputFormat>) -> InputFormat {
    if let Some(f) = forced {
        return f;
    }
    match path.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase).as_deref() {
        Some("d6" | "dig6") => return InputFormat::D6,
        Some("cnf" | "dimacs") => return InputFormat::Dimacs,
        Some("arcs" | "arclist") => return InputFormat::Arclist,
        _ => {}
    }
    let t = text.trim_start();
    if t.starts_with('&') || t.starts_with(">>digraph6<<") {
        return InputFormat::D6;
    }
    let first = t.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    if first.starts_with("p cnf") || first == "c" || first.starts_with("c ") {
        InputFormat::Dimacs
    } else {
        InputFormat::Arclist
    }
}

pub fn load_digraph(inputs: &mut Inputs, path: &Path, forced: Option<InputFormat>) -> Result<Digraph, CliError> {
    let text = inputs.read(path)?;
    let name = path.display().to_string();
    let parsed = match detect(path, &text, forced) {
        InputFormat::D6 => from_digraph6(text.trim().lines().next().unwrap_or("")),
        InputFormat::Arclist => from_arc_list(&text),
        InputFormat::Dimacs => return Err(CliError::Usage(format!("{name}: expected a digraph, not DIMACS CNF"))),
    };
    parsed.map_err(|source| CliError::Format { path: name, source })
}

pub fn load_cnf(inputs: &mut Inputs, path: &Path, forced: Option<InputFormat>) -> Result<CnfFormula, CliError> {
    let text = inputs.read(path)?;
    let name = path.display().to_string();
    match detect(path, &text, forced) {
        InputFormat::Dimacs => CnfFormula::parse_dimacs(&text).map_err(|source| CliError::Cnf { path: name, source }),
        _ => Err(CliError::Usage(format!("{name}: expected DIMACS CNF"))),
    }
}

pub fn load_json<T: serde::de::DeserializeOwned>(inputs: &mut Inputs, path: &Path) -> Result<T, CliError> {
    let text = inputs.read(path)?;
    serde_json::from_str(&text).map_err(|source| CliError::Json { path: path.display().to_string(), source })
}

pub fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|source| CliError::Write { path: dir.display().to_string(), source })?;
    }
    fs::write(path, contents).map_err(|source| CliError::Write { path: path.display().to_string(), source })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detection() {
        let p = Path::new("x");
        assert_eq!(detect(p, "&B?_\n", None), InputFormat::D6);
        assert_eq!(detect(p, "c hello\np cnf 3 1\n1 2 3 0\n", None), InputFormat::Dimacs);
        assert_eq!(detect(p, "p cnf 3 1\n", None), InputFormat::Dimacs);
        assert_eq!(detect(p, "3 3\n0 1\n1 2\n2 0\n", None), InputFormat::Arclist);
        assert_eq!(detect(Path::new("a.cnf"), "3 3", None), InputFormat::Dimacs);
        assert_eq!(detect(Path::new("a.d6"), "3 3", Some(InputFormat::Arclist)), InputFormat::Arclist);
    }

    #[test]
    fn digest_depends_on_boundaries() {
        let dir = tempfile::tempdir().unwrap();
        let (a, b) = (dir.path().join("a"), dir.path().join("b"));
        let mut one = Inputs::default();
        fs::write(&a, "ab").unwrap();
        fs::write(&b, "c").unwrap();
        one.read(&a).unwrap();
        one.read(&b).unwrap();
        let mut two = Inputs::default();
        fs::write(&a, "a").unwrap();
        fs::write(&b, "bc").unwrap();
        two.read(&a).unwrap();
        two.read(&b).unwrap();
        assert_ne!(one.digest(), two.digest());
    }
}
