//! On-disk cache of finished reports, keyed by algebra fingerprint and cap.
//! Entries are written through a temporary file and renamed into place, so
//! concurrent processes never observe partial files. Deleting the cache is
//! always safe.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use blockscope::report::{Report, RunConfig, Task};
use blockscope::HopfAlgebra;

pub const ENV_VAR: &str = "BLOCKSCOPE_CACHE";

/// `$BLOCKSCOPE_CACHE`, else `$XDG_CACHE_HOME/blockscope`, else
/// `~/.cache/blockscope`.
pub fn default_root() -> Option<PathBuf> {
    if let Some(d) = std::env::var_os(ENV_VAR) {
        return Some(PathBuf::from(d));
    }
    if let Some(d) = std::env::var_os("XDG_CACHE_HOME") {
        return Some(PathBuf::from(d).join("blockscope"));
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("blockscope"))
}

pub struct Cache {
    root: PathBuf,
}

impl Cache {
    pub fn new(root: PathBuf) -> Cache {
        Cache { root }
    }

    fn path(&self, h: &HopfAlgebra, task: &Task, cfg: &RunConfig) -> PathBuf {
        let task = task.to_string().replace(':', "-");
        let slow = if cfg.slow { "-slow" } else { "" };
        self.root
            .join(h.fingerprint())
            .join(format!("cap{}", cfg.cap))
            .join(format!("{task}-seed{:x}-budget{}{slow}.json", cfg.seed, cfg.budget))
    }

    /// A cached report, if present and produced by this version for the
    /// same algebra.
    pub fn get(&self, h: &HopfAlgebra, task: &Task, cfg: &RunConfig) -> Option<Report> {
        let text = fs::read_to_string(self.path(h, task, cfg)).ok()?;
        let r = Report::parse(&text).ok()?;
        let fresh = r.0["algebra"]["fingerprint"] == h.fingerprint().as_str()
            && r.0["algebra"]["name"] == h.name.as_str()
            && r.0["tool"]["version"] == env!("CARGO_PKG_VERSION");
        fresh.then_some(r)
    }

    pub fn put(&self, h: &HopfAlgebra, task: &Task, cfg: &RunConfig, r: &Report) -> std::io::Result<()> {
        let path = self.path(h, task, cfg);
        let dir = path.parent().unwrap_or(Path::new("."));
        fs::create_dir_all(dir)?;
        let tmp = dir.join(format!(".{}.{}", path.file_name().unwrap().to_string_lossy(), std::process::id()));
        let mut f = fs::File::create(&tmp)?;
        f.write_all(r.to_string().as_bytes())?;
        f.sync_all()?;
        fs::rename(&tmp, &path)
    }
}
