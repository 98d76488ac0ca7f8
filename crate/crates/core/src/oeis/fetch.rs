use std::borrow::Cow;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Duration;

use crate::error::{Error, Result};
use crate::oeis::bfile::{parse_bfile, ANumber, SequenceRecord};

pub const DEFAULT_BASE_URL: &str = "https://oeis.org";
pub const BASE_URL_ENV: &str = "SPINFIB_OEIS_BASE";
pub const CACHE_DIR_ENV: &str = "SPINFIB_CACHE_DIR";
/// Larger b-files are truncated tables we have no use for.
pub const DEFAULT_SIZE_CAP: u64 = 8 * 1024 * 1024;
pub const DEFAULT_PARALLELISM: usize = 4;

macro_rules! bundled {
    ($($anum:literal),* $(,)?) => {
        &[$(($anum, include_str!(concat!(
            env!("CARGO_MANIFEST_DIR"), "/fixtures/oeis/b", $anum, ".txt"
        )))),*]
    };
}

/// Bundled b-file prefixes, keyed by the six digits of the A-number.
static BUNDLED: &[(&str, &str)] =
    bundled!("000032", "000045", "001629", "002940", "006478", "010049", "014286", "178523",);

/// Where offline fetches look for b-files.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum FixtureStore {
    /// The prefixes compiled into the crate.
    #[default]
    Bundled,
    /// `b<digits>.txt` files in a directory.
    Dir(PathBuf),
    /// No fixtures at all.
    Empty,
}

impl FixtureStore {
    pub fn lookup(&self, anumber: &ANumber) -> Option<Cow<'static, [u8]>> {
        match self {
            FixtureStore::Bundled => BUNDLED
                .iter()
                .find(|(digits, _)| *digits == anumber.digits())
                .map(|(_, text)| Cow::Borrowed(text.as_bytes())),
            FixtureStore::Dir(dir) => std::fs::read(dir.join(anumber.bfile_name()))
                .ok()
                .map(Cow::Owned),
            FixtureStore::Empty => None,
        }
    }

    /// A-numbers available from the bundled store.
    pub fn bundled_anumbers() -> Vec<ANumber> {
        BUNDLED
            .iter()
            .map(|(digits, _)| ANumber::new(&format!("A{digits}")).expect("valid bundled name"))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FetchMode {
    #[default]
    Offline,
    Online,
}

/// Fetches b-files from fixtures or over HTTP with an on-disk cache.
#[derive(Debug)]
pub struct OeisClient {
    mode: FetchMode,
    base_url: String,
    cache_dir: PathBuf,
    fixtures: FixtureStore,
    size_cap: u64,
    timeout: Duration,
    network_requests: AtomicUsize,
}

impl OeisClient {
    /// Offline client over the bundled fixtures.
    pub fn offline() -> Self {
        OeisClient::with_mode(FetchMode::Offline)
    }

    /// Client configured from `SPINFIB_OEIS_BASE` and `SPINFIB_CACHE_DIR`.
    pub fn with_mode(mode: FetchMode) -> Self {
        let base_url = std::env::var(BASE_URL_ENV).unwrap_or_else(|_| DEFAULT_BASE_URL.to_owned());
        let cache_dir = std::env::var_os(CACHE_DIR_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(default_cache_dir);
        OeisClient {
            mode,
            base_url,
            cache_dir,
            fixtures: FixtureStore::Bundled,
            size_cap: DEFAULT_SIZE_CAP,
            timeout: Duration::from_secs(30),
            network_requests: AtomicUsize::new(0),
        }
    }

    pub fn base_url(mut self, url: impl Into<String>) -> Self {
        self.base_url = url.into().trim_end_matches('/').to_owned();
        self
    }

    pub fn cache_dir(mut self, dir: impl Into<PathBuf>) -> Self {
        self.cache_dir = dir.into();
        self
    }

    pub fn fixtures(mut self, store: FixtureStore) -> Self {
        self.fixtures = store;
        self
    }

    pub fn size_cap(mut self, bytes: u64) -> Self {
        self.size_cap = bytes;
        self
    }

    pub fn timeout(mut self, timeout: Duration) -> Self {
        self.timeout = timeout;
        self
    }

    pub fn mode(&self) -> FetchMode {
        self.mode
    }

    /// Number of HTTP requests issued so far.
    pub fn network_requests(&self) -> usize {
        self.network_requests.load(Ordering::SeqCst)
    }

    pub fn url_for(&self, anumber: &ANumber) -> String {
        format!("{}/{}/{}", self.base_url, anumber, anumber.bfile_name())
    }

    /// Raw b-file bytes for `anumber`.
    pub fn fetch_bfile(&self, anumber: &ANumber) -> Result<Vec<u8>> {
        match self.mode {
            FetchMode::Offline => self
                .fixtures
                .lookup(anumber)
                .map(Cow::into_owned)
                .ok_or_else(|| Error::FixtureMissing(anumber.to_string())),
            FetchMode::Online => {
                let path = self.cache_dir.join(anumber.bfile_name());
                if let Ok(bytes) = std::fs::read(&path) {
                    return Ok(bytes);
                }
                let body = self.http_get(&self.url_for(anumber))?;
                write_atomic(&self.cache_dir, &path, &body)?;
                Ok(body)
            }
        }
    }

    pub fn fetch_record(&self, anumber: &ANumber) -> Result<SequenceRecord> {
        let bytes = self.fetch_bfile(anumber)?;
        parse_bfile(anumber.clone(), &bytes)
    }

    /// Fetches several sequences with at most `parallelism` in flight.
    /// Results come back in input order.
    pub fn fetch_many(
        &self,
        anumbers: &[ANumber],
        parallelism: usize,
    ) -> Vec<Result<SequenceRecord>> {
        let next = AtomicUsize::new(0);
        let workers = parallelism.clamp(1, anumbers.len().max(1));
        let mut slots: Vec<Option<Result<SequenceRecord>>> =
            (0..anumbers.len()).map(|_| None).collect();
        let done = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|_| {
                    scope.spawn(|| {
                        let mut out = Vec::new();
                        loop {
                            let i = next.fetch_add(1, Ordering::SeqCst);
                            let Some(anum) = anumbers.get(i) else { break };
                            out.push((i, self.fetch_record(anum)));
                        }
                        out
                    })
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("fetch worker panicked"))
                .collect::<Vec<_>>()
        });
        for (i, r) in done {
            slots[i] = Some(r);
        }
        slots
            .into_iter()
            .map(|s| s.expect("every index fetched"))
            .collect()
    }

    fn http_get(&self, url: &str) -> Result<Vec<u8>> {
        self.network_requests.fetch_add(1, Ordering::SeqCst);
        let agent: ureq::Agent = ureq::Agent::config_builder()
            .timeout_global(Some(self.timeout))
            .build()
            .into();
        let mut response = agent.get(url).call().map_err(|e| match e {
            ureq::Error::StatusCode(status) => Error::HttpStatus {
                url: url.to_owned(),
                status,
            },
            other => Error::Network {
                url: url.to_owned(),
                message: other.to_string(),
            },
        })?;
        response
            .body_mut()
            .with_config()
            .limit(self.size_cap)
            .read_to_vec()
            .map_err(|e| match e {
                ureq::Error::BodyExceedsLimit(_) => Error::TooLarge {
                    url: url.to_owned(),
                    cap: self.size_cap,
                },
                other => Error::Network {
                    url: url.to_owned(),
                    message: other.to_string(),
                },
            })
    }
}

fn default_cache_dir() -> PathBuf {
    dirs::cache_dir()
        .unwrap_or_else(std::env::temp_dir)
        .join("spinfib")
        .join("oeis")
}

/// Write-temp-then-rename so readers never see a partial file.
fn write_atomic(dir: &Path, path: &Path, bytes: &[u8]) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| Error::io(dir, e))?;
    tmp.write_all(bytes).map_err(|e| Error::io(tmp.path(), e))?;
    tmp.persist(path).map_err(|e| Error::io(path, e.error))?;
    Ok(())
}
