//! On-disk tables.
//!
//! A cache file is
//!
//! ```text
//! magic  b"CELLKIT\0"
//! u32    format version
//! u32    rank n
//! u8     kind (0 = KL table, 1 = h-tensor)
//! u64    record count
//! record*                 u32 byte length, then the record body
//! [u8; 32]                sha256 of everything above
//! ```
//!
//! A KL record is `w, count, (y, p_{y,w})*`; an h-tensor record is
//! `x, y, count, (z, h_{x,y,z})*`. Permutations are `n` bytes of 0-based
//! one-line notation. A Laurent polynomial is `u32` term count followed by
//! `(i32 exponent, u16 length, signed little-endian coefficient bytes)`.
//! All integers are little-endian.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use cellkit_core::{HTensor, Int, KlTable, Laurent, Perm, SymGroup};
use sha2::{Digest, Sha256};
use thiserror::Error;

pub const MAGIC: &[u8; 8] = b"CELLKIT\0";
pub const VERSION: u32 = 1;
const HEADER_LEN: usize = 8 + 4 + 4 + 1 + 8;
const CHECKSUM_LEN: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    KlTable,
    HTensor,
}

impl Kind {
    fn tag(self) -> u8 {
        match self {
            Kind::KlTable => 0,
            Kind::HTensor => 1,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Kind::KlTable => "kl_table",
            Kind::HTensor => "h_tensor",
        }
    }
}

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("file is truncated")]
    Truncated,
    #[error("bad magic bytes")]
    Magic,
    #[error("format version {found}, expected {VERSION}")]
    Version { found: u32 },
    #[error("checksum mismatch")]
    Checksum,
    #[error("header says {found}, expected {expected}")]
    Header { found: String, expected: String },
    #[error("malformed record: {0}")]
    Malformed(String),
}

/// Where tables are stored, if anywhere.
#[derive(Debug, Clone)]
pub struct Cache {
    dir: Option<PathBuf>,
    strict: bool,
}

impl Cache {
    pub fn new(dir: Option<PathBuf>, strict: bool) -> Cache {
        Cache { dir, strict }
    }

    pub fn path(&self, kind: Kind, n: usize) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{}-n{n}.bin", kind.name())))
    }

    /// Loads the KL table of rank `n`, computing and storing it on a miss.
    pub fn kl_table(&self, n: usize) -> Result<KlTable, CacheError> {
        self.fetch(Kind::KlTable, n, |b| decode_kl(b, n), || KlTable::new(n), encode_kl)
    }

    /// Loads the h-tensor of `kl`, computing and storing it on a miss.
    pub fn h_tensor(&self, kl: &KlTable) -> Result<HTensor, CacheError> {
        let g = kl.group();
        self.fetch(Kind::HTensor, kl.n(), |b| decode_tensor(b, g), || HTensor::build(kl), |t| encode_tensor(t, g))
    }

    fn fetch<T>(
        &self,
        kind: Kind,
        n: usize,
        decode: impl Fn(&[u8]) -> Result<T, CacheError>,
        compute: impl Fn() -> T,
        encode: impl Fn(&T) -> Vec<u8>,
    ) -> Result<T, CacheError> {
        let Some(path) = self.path(kind, n) else {
            return Ok(compute());
        };
        match fs::read(&path) {
            Ok(bytes) => match decode(&bytes) {
                Ok(t) => return Ok(t),
                Err(e) if self.strict => return Err(e),
                Err(e) => eprintln!("warning: {}: {e}; recomputing", path.display()),
            },
            Err(e) if e.kind() == io::ErrorKind::NotFound => {}
            Err(source) => return Err(CacheError::Io { path, source }),
        }
        let t = compute();
        if let Err(e) = write_atomic(&path, &encode(&t)) {
            eprintln!("warning: could not write {}: {e}", path.display());
        }
        Ok(t)
    }
}

/// Writes through a temporary file in the same directory and renames it
/// into place, so readers never see a partial file.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> io::Result<()> {
    let dir = path.parent().unwrap_or(Path::new("."));
    fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

struct Writer {
    buf: Vec<u8>,
}

impl Writer {
    fn new(kind: Kind, n: usize, records: usize) -> Writer {
        let mut buf = Vec::new();
        buf.extend_from_slice(MAGIC);
        buf.extend_from_slice(&VERSION.to_le_bytes());
        buf.extend_from_slice(&(n as u32).to_le_bytes());
        buf.push(kind.tag());
        buf.extend_from_slice(&(records as u64).to_le_bytes());
        Writer { buf }
    }

    fn record(&mut self, body: &[u8]) {
        self.buf.extend_from_slice(&(body.len() as u32).to_le_bytes());
        self.buf.extend_from_slice(body);
    }

    fn finish(mut self) -> Vec<u8> {
        let digest = Sha256::digest(&self.buf);
        self.buf.extend_from_slice(&digest);
        self.buf
    }
}

fn put_perm(out: &mut Vec<u8>, w: &Perm) {
    out.extend_from_slice(w.images0());
}

fn put_laurent(out: &mut Vec<u8>, p: &Laurent) {
    out.extend_from_slice(&(p.terms().len() as u32).to_le_bytes());
    for (e, c) in p.terms() {
        let bytes = c.to_signed_bytes_le();
        out.extend_from_slice(&e.to_le_bytes());
        out.extend_from_slice(&(bytes.len() as u16).to_le_bytes());
        out.extend_from_slice(&bytes);
    }
}

fn put_entries(out: &mut Vec<u8>, g: &SymGroup, entries: &[(u32, Laurent)]) {
    out.extend_from_slice(&(entries.len() as u32).to_le_bytes());
    for (k, p) in entries {
        put_perm(out, &g.elt(*k as usize));
        put_laurent(out, p);
    }
}

pub fn encode_kl(kl: &KlTable) -> Vec<u8> {
    let g = kl.group();
    let mut w = Writer::new(Kind::KlTable, kl.n(), g.size());
    let mut body = Vec::new();
    for (wi, col) in kl.columns().iter().enumerate() {
        body.clear();
        put_perm(&mut body, &g.elt(wi));
        put_entries(&mut body, g, col);
        w.record(&body);
    }
    w.finish()
}

pub fn encode_tensor(t: &HTensor, g: &SymGroup) -> Vec<u8> {
    let size = t.size();
    let mut w = Writer::new(Kind::HTensor, g.n(), size * size);
    let mut body = Vec::new();
    for (i, row) in t.rows().iter().enumerate() {
        body.clear();
        put_perm(&mut body, &g.elt(i / size));
        put_perm(&mut body, &g.elt(i % size));
        put_entries(&mut body, g, row);
        w.record(&body);
    }
    w.finish()
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, k: usize) -> Result<&'a [u8], CacheError> {
        let end = self.pos.checked_add(k).filter(|&e| e <= self.bytes.len()).ok_or(CacheError::Truncated)?;
        let s = &self.bytes[self.pos..end];
        self.pos = end;
        Ok(s)
    }

    fn u8(&mut self) -> Result<u8, CacheError> {
        Ok(self.take(1)?[0])
    }

    fn u16(&mut self) -> Result<u16, CacheError> {
        Ok(u16::from_le_bytes(self.take(2)?.try_into().unwrap()))
    }

    fn u32(&mut self) -> Result<u32, CacheError> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn i32(&mut self) -> Result<i32, CacheError> {
        Ok(i32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn u64(&mut self) -> Result<u64, CacheError> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }

    fn done(&self) -> bool {
        self.pos == self.bytes.len()
    }

    fn index(&mut self, g: &SymGroup) -> Result<usize, CacheError> {
        let images: Vec<usize> = self.take(g.n())?.iter().map(|&b| b as usize + 1).collect();
        let w = Perm::from_one_line(&images).map_err(|e| CacheError::Malformed(e.to_string()))?;
        g.try_index_of(&w).ok_or_else(|| CacheError::Malformed(format!("{w} has the wrong rank")))
    }

    fn laurent(&mut self) -> Result<Laurent, CacheError> {
        let count = self.u32()?;
        let mut terms = Vec::with_capacity(count.min(1024) as usize);
        for _ in 0..count {
            let e = self.i32()?;
            let len = self.u16()? as usize;
            let c = Int::from_signed_bytes_le(self.take(len)?);
            if c.is_zero() {
                return Err(CacheError::Malformed("zero coefficient".into()));
            }
            terms.push((e, c));
        }
        if terms.windows(2).any(|t| t[0].0 >= t[1].0) {
            return Err(CacheError::Malformed("exponents out of order".into()));
        }
        Ok(Laurent::from_terms(terms))
    }

    fn entries(&mut self, g: &SymGroup) -> Result<Vec<(u32, Laurent)>, CacheError> {
        let count = self.u32()? as usize;
        let mut out: Vec<(u32, Laurent)> = Vec::with_capacity(count.min(g.size()));
        for _ in 0..count {
            let k = self.index(g)? as u32;
            if out.last().is_some_and(|(prev, _)| *prev >= k) {
                return Err(CacheError::Malformed("entries out of order".into()));
            }
            let p = self.laurent()?;
            if p.is_zero() {
                return Err(CacheError::Malformed("stored zero polynomial".into()));
            }
            out.push((k, p));
        }
        Ok(out)
    }
}

/// Checks magic, version, checksum and header, then returns a reader over
/// the records.
fn open(bytes: &[u8], kind: Kind, n: usize) -> Result<(Reader<'_>, u64), CacheError> {
    if bytes.len() < HEADER_LEN + CHECKSUM_LEN {
        return Err(CacheError::Truncated);
    }
    if &bytes[..8] != MAGIC {
        return Err(CacheError::Magic);
    }
    let mut head = Reader { bytes, pos: 8 };
    let version = head.u32()?;
    if version != VERSION {
        return Err(CacheError::Version { found: version });
    }
    let (body, sum) = bytes.split_at(bytes.len() - CHECKSUM_LEN);
    if Sha256::digest(body).as_slice() != sum {
        return Err(CacheError::Checksum);
    }
    let (found_n, found_kind) = (head.u32()? as usize, head.u8()?);
    if found_n != n || found_kind != kind.tag() {
        return Err(CacheError::Header {
            found: format!("kind {found_kind}, n = {found_n}"),
            expected: format!("kind {}, n = {n}", kind.tag()),
        });
    }
    let records = head.u64()?;
    Ok((Reader { bytes: body, pos: HEADER_LEN }, records))
}

fn record<'a>(r: &mut Reader<'a>) -> Result<Reader<'a>, CacheError> {
    let len = r.u32()? as usize;
    Ok(Reader { bytes: r.take(len)?, pos: 0 })
}

pub fn decode_kl(bytes: &[u8], n: usize) -> Result<KlTable, CacheError> {
    let (mut r, records) = open(bytes, Kind::KlTable, n)?;
    let g = SymGroup::new(n);
    if records != g.size() as u64 {
        return Err(CacheError::Malformed(format!("{records} records for {} elements", g.size())));
    }
    let mut columns = Vec::with_capacity(g.size());
    for w in 0..g.size() {
        let mut rec = record(&mut r)?;
        if rec.index(&g)? != w {
            return Err(CacheError::Malformed(format!("record {w} is keyed by another element")));
        }
        columns.push(rec.entries(&g)?);
        if !rec.done() {
            return Err(CacheError::Malformed(format!("trailing bytes in record {w}")));
        }
    }
    if !r.done() {
        return Err(CacheError::Malformed("trailing records".into()));
    }
    KlTable::from_columns(n, columns).map_err(|e| CacheError::Malformed(e.to_string()))
}

pub fn decode_tensor(bytes: &[u8], g: &SymGroup) -> Result<HTensor, CacheError> {
    let (mut r, records) = open(bytes, Kind::HTensor, g.n())?;
    let size = g.size();
    if records != (size * size) as u64 {
        return Err(CacheError::Malformed(format!("{records} records for {size}² products")));
    }
    let mut rows = Vec::with_capacity(size * size);
    for i in 0..size * size {
        let mut rec = record(&mut r)?;
        if (rec.index(g)?, rec.index(g)?) != (i / size, i % size) {
            return Err(CacheError::Malformed(format!("record {i} is keyed by another pair")));
        }
        rows.push(rec.entries(g)?);
        if !rec.done() {
            return Err(CacheError::Malformed(format!("trailing bytes in record {i}")));
        }
    }
    if !r.done() {
        return Err(CacheError::Malformed("trailing records".into()));
    }
    Ok(HTensor::from_rows(size, rows))
}
