use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use schurweyl::schuralg::algebra_basis;

/// Content-addressed documents under `--cache-dir`. Writes go to a
/// temporary file in the same directory and are renamed into place.
pub struct Cache {
    dir: PathBuf,
}

pub fn sha256_hex(s: &str) -> String {
    Sha256::digest(s.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

/// Hash of the canonical enumeration of the basis `γ_A` of `S(n, d)`.
pub fn basis_hash(n: usize, d: usize) -> String {
    let basis = algebra_basis(n, d);
    let mut s = format!("S({n},{d})");
    for a in basis.elements() {
        s.push('|');
        s.push_str(&format!("{:?}", a.to_rows()));
    }
    sha256_hex(&s)
}

impl Cache {
    pub fn new(dir: &Path) -> io::Result<Self> {
        fs::create_dir_all(dir)?;
        Ok(Cache { dir: dir.to_path_buf() })
    }

    fn path(&self, name: &str) -> PathBuf {
        let safe: String = name.chars().map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '.' { c } else { '_' }).collect();
        self.dir.join(safe)
    }

    pub fn load(&self, name: &str) -> Option<String> {
        fs::read_to_string(self.path(name)).ok()
    }

    pub fn store(&self, name: &str, content: &str) -> io::Result<()> {
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(content.as_bytes())?;
        tmp.as_file().sync_all()?;
        tmp.persist(self.path(name)).map_err(|e| e.error)?;
        Ok(())
    }
}
