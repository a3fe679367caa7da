use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use super::{fixtures, parse_bfile, OeisId, Sequence};
use crate::error::{Error, Result};

/// Environment variable naming the b-file cache directory.
pub const CACHE_DIR_ENV: &str = "SEQLAB_CACHE_DIR";

const OEIS_HOST: &str = "https://oeis.org";

/// Fetches raw b-file text for an id.
pub trait Transport: Send + Sync {
    fn get(&self, id: OeisId) -> Result<String>;
}

/// Plain HTTPS transport against the public OEIS host.
#[derive(Debug, Default, Clone, Copy)]
pub struct HttpTransport;

impl Transport for HttpTransport {
    fn get(&self, id: OeisId) -> Result<String> {
        let url = format!("{OEIS_HOST}/{id}/{}", id.bfile_name());
        match ureq::get(&url).call() {
            Ok(mut resp) => resp
                .body_mut()
                .read_to_string()
                .map_err(|e| Error::Network(e.to_string())),
            Err(ureq::Error::StatusCode(404)) => Err(Error::NotFound(id.to_string())),
            Err(e) => Err(Error::Network(e.to_string())),
        }
    }
}

/// Resolves b-files either from the bundled fixtures (offline) or from the
/// network through an on-disk cache (online). Cache writes are serialised
/// and land via rename, so readers never see a partial file.
pub struct BfileStore {
    cache_dir: PathBuf,
    online: bool,
    transport: Box<dyn Transport>,
    write_lock: Mutex<()>,
}

impl BfileStore {
    pub fn new(cache_dir: impl Into<PathBuf>, online: bool) -> Self {
        Self::with_transport(cache_dir, online, Box::new(HttpTransport))
    }

    pub fn with_transport(
        cache_dir: impl Into<PathBuf>,
        online: bool,
        transport: Box<dyn Transport>,
    ) -> Self {
        BfileStore {
            cache_dir: cache_dir.into(),
            online,
            transport,
            write_lock: Mutex::new(()),
        }
    }

    /// Cache directory from [`CACHE_DIR_ENV`], falling back to
    /// `$HOME/.cache/seqlab`, then `./.seqlab-cache`.
    pub fn default_cache_dir() -> PathBuf {
        if let Some(dir) = std::env::var_os(CACHE_DIR_ENV) {
            return dir.into();
        }
        match std::env::var_os("HOME") {
            Some(home) => Path::new(&home).join(".cache").join("seqlab"),
            None => PathBuf::from(".seqlab-cache"),
        }
    }

    pub fn cache_dir(&self) -> &Path {
        &self.cache_dir
    }

    pub fn is_online(&self) -> bool {
        self.online
    }

    fn cache_path(&self, id: OeisId) -> PathBuf {
        self.cache_dir.join(id.bfile_name())
    }

    pub fn fetch(&self, id: OeisId) -> Result<Sequence> {
        if !self.online {
            return fixtures::load(id);
        }
        let path = self.cache_path(id);
        let text = match fs::read_to_string(&path) {
            Ok(text) => text,
            Err(_) => {
                let text = self.transport.get(id)?;
                self.store(&path, &text)?;
                text
            }
        };
        let mut seq = parse_bfile(&text)?;
        seq.id = Some(id);
        Ok(seq)
    }

    fn store(&self, path: &Path, text: &str) -> Result<()> {
        let cache_err = |source| Error::Cache {
            path: path.to_path_buf(),
            source,
        };
        let _guard = self.write_lock.lock().unwrap_or_else(|e| e.into_inner());
        fs::create_dir_all(&self.cache_dir).map_err(cache_err)?;
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        let mut f = fs::File::create(&tmp).map_err(cache_err)?;
        f.write_all(text.as_bytes()).map_err(cache_err)?;
        f.sync_all().map_err(cache_err)?;
        fs::rename(&tmp, path).map_err(cache_err)
    }
}
