//! Loading the catalog: the copy compiled into the library, or a directory
//! named on the command line or by [`CATALOG_ENV`].

use std::collections::BTreeMap;
use std::path::Path;

use sha2::{Digest, Sha256};

use super::format::{parse_entry, CatalogEntry};
use super::{Flavor, GroupId, Presentation, PresentationError};

/// Environment variable naming a catalog directory that replaces the
/// built-in one.
pub const CATALOG_ENV: &str = "HECKECERT_CATALOG_DIR";

const MANIFEST: &str = "SHA256SUMS";

macro_rules! embedded {
    ($($n:literal),* $(,)?) => {
        &[$((concat!("G", $n, ".txt"), include_str!(concat!("../../catalog/G", $n, ".txt")))),*]
    };
}

static EMBEDDED: &[(&str, &str)] = embedded!(
    "4", "5", "6", "7", "8", "9", "10", "11", "12", "13", "14", "15", "16", "17", "18", "19", "20", "21", "22"
);
static EMBEDDED_MANIFEST: &str = include_str!("../../catalog/SHA256SUMS");

pub(crate) fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Clone, Debug)]
pub struct Catalog {
    entries: BTreeMap<GroupId, CatalogEntry>,
    checksum: String,
}

impl Catalog {
    /// The catalog shipped inside the library.
    pub fn builtin() -> Result<Catalog, PresentationError> {
        let files: Vec<(String, String)> = EMBEDDED.iter().map(|(n, t)| (n.to_string(), t.to_string())).collect();
        Self::from_files(files, Some(EMBEDDED_MANIFEST.to_string()))
    }

    /// Loads every `G*.txt` in `dir`, verifying against `SHA256SUMS` when that
    /// file exists.
    pub fn from_dir(dir: &Path) -> Result<Catalog, PresentationError> {
        let io = |e: std::io::Error| PresentationError::Io(format!("{}: {e}", dir.display()));
        let mut files = Vec::new();
        for entry in std::fs::read_dir(dir).map_err(io)? {
            let path = entry.map_err(io)?.path();
            let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("").to_string();
            if name.starts_with('G') && name.ends_with(".txt") {
                files.push((name, std::fs::read_to_string(&path).map_err(io)?));
            }
        }
        let manifest = match std::fs::read_to_string(dir.join(MANIFEST)) {
            Ok(m) => Some(m),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => None,
            Err(e) => return Err(io(e)),
        };
        Self::from_files(files, manifest)
    }

    /// Directory from [`CATALOG_ENV`] if set, else the built-in catalog.
    pub fn load_default() -> Result<Catalog, PresentationError> {
        match std::env::var_os(CATALOG_ENV) {
            Some(dir) if !dir.is_empty() => Self::from_dir(Path::new(&dir)),
            _ => Self::builtin(),
        }
    }

    fn from_files(mut files: Vec<(String, String)>, manifest: Option<String>) -> Result<Catalog, PresentationError> {
        files.sort();
        let sums: BTreeMap<String, String> = manifest
            .iter()
            .flat_map(|m| m.lines())
            .filter_map(|l| {
                let mut it = l.split_whitespace();
                Some((it.next()?.to_string(), it.next()?.to_string()))
            })
            .map(|(h, f)| (f, h))
            .collect();
        let mut entries = BTreeMap::new();
        let mut hasher = Sha256::new();
        for (name, text) in &files {
            let actual = sha256_hex(text.as_bytes());
            if manifest.is_some() {
                match sums.get(name) {
                    Some(expected) if *expected == actual => {}
                    Some(expected) => {
                        return Err(PresentationError::Checksum {
                            file: name.clone(),
                            expected: expected.clone(),
                            actual,
                        })
                    }
                    None => {
                        return Err(PresentationError::Checksum {
                            file: name.clone(),
                            expected: "(not listed)".into(),
                            actual,
                        })
                    }
                }
            }
            let entry = parse_entry(name, text)?;
            if entries.contains_key(&entry.group) {
                return Err(PresentationError::Format {
                    file: name.clone(),
                    line: 0,
                    msg: format!("{} defined twice", entry.group),
                });
            }
            hasher.update(actual.as_bytes());
            entries.insert(entry.group, entry);
        }
        if entries.is_empty() {
            return Err(PresentationError::Io("catalog holds no group files".into()));
        }
        let checksum = hasher.finalize().iter().map(|b| format!("{b:02x}")).collect();
        Ok(Catalog { entries, checksum })
    }

    pub fn entry(&self, g: GroupId) -> Result<&CatalogEntry, PresentationError> {
        self.entries.get(&g).ok_or_else(|| PresentationError::UnknownGroup(g.to_string()))
    }

    pub fn groups(&self) -> impl Iterator<Item = GroupId> + '_ {
        self.entries.keys().copied()
    }

    /// Digest over all file digests, in group order.
    pub fn checksum(&self) -> &str {
        &self.checksum
    }

    /// Manifest text for the files currently loaded; used to regenerate
    /// `SHA256SUMS` after editing a catalog file.
    pub fn manifest_for(files: &[(String, String)]) -> String {
        let mut files = files.to_vec();
        files.sort();
        files.iter().map(|(n, t)| format!("{}  {}\n", sha256_hex(t.as_bytes()), n)).collect()
    }
}

/// Convenience lookup against the built-in (or environment-selected) catalog.
pub fn catalog_get(group: GroupId, flavor: Flavor) -> Result<Presentation, PresentationError> {
    Ok(Catalog::load_default()?.entry(group)?.presentation(flavor))
}
