//! Versioned binary persistence for [`CorpusIndex`].
//!
//! Layout: magic `DORM`, one version byte, little-endian body, then an
//! 8-byte trailer holding the truncated SHA-256 of everything before it.
//! The format is fully deterministic, so saving a loaded index reproduces
//! the original file byte for byte.

use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::Path;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

use super::{CorpusIndex, DocType, PaperIdx, YearWindow};

const MAGIC: &[u8; 4] = b"DORM";
const VERSION: u8 = 1;
const CHECKSUM_LEN: usize = 8;

struct HashingWriter<W: Write> {
    inner: W,
    hasher: Sha256,
}

impl<W: Write> Write for HashingWriter<W> {
    fn write(&mut self, buf: &[u8]) -> std::io::Result<usize> {
        let n = self.inner.write(buf)?;
        self.hasher.update(&buf[..n]);
        Ok(n)
    }

    fn flush(&mut self) -> std::io::Result<()> {
        self.inner.flush()
    }
}

impl CorpusIndex {
    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let file = File::create(path)?;
        let mut w = HashingWriter {
            inner: BufWriter::new(file),
            hasher: Sha256::new(),
        };
        w.write_all(MAGIC)?;
        w.write_all(&[VERSION])?;

        w.write_all(&self.years_range.start().to_le_bytes())?;
        w.write_all(&self.years_range.end().to_le_bytes())?;
        w.write_all(&(self.ids.len() as u32).to_le_bytes())?;
        w.write_all(&self.edge_count.to_le_bytes())?;
        for id in &self.ids {
            w.write_all(&(id.len() as u32).to_le_bytes())?;
            w.write_all(id.as_bytes())?;
        }
        for &year in &self.years {
            w.write_all(&year.to_le_bytes())?;
        }
        for &dt in &self.doc_types {
            w.write_all(&[dt.to_byte()])?;
        }
        for &fc in &self.field_codes {
            w.write_all(&fc.to_le_bytes())?;
        }
        for &off in &self.out_offsets {
            w.write_all(&off.to_le_bytes())?;
        }
        for &t in &self.out_targets {
            w.write_all(&t.0.to_le_bytes())?;
        }
        for &off in &self.in_offsets {
            w.write_all(&off.to_le_bytes())?;
        }
        for &s in &self.in_sources {
            w.write_all(&s.0.to_le_bytes())?;
        }

        let digest = w.hasher.clone().finalize();
        w.inner.write_all(&digest[..CHECKSUM_LEN])?;
        w.inner.flush()?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<CorpusIndex> {
        let mut bytes = Vec::new();
        File::open(path)?.read_to_end(&mut bytes)?;
        if bytes.len() < MAGIC.len() + 1 + CHECKSUM_LEN {
            return Err(Error::CorruptFile("file too short".into()));
        }
        if &bytes[..4] != MAGIC {
            return Err(Error::CorruptFile("bad magic".into()));
        }
        if bytes[4] != VERSION {
            return Err(Error::VersionMismatch {
                expected: VERSION,
                found: bytes[4],
            });
        }
        let body_end = bytes.len() - CHECKSUM_LEN;
        let digest = Sha256::digest(&bytes[..body_end]);
        if digest[..CHECKSUM_LEN] != bytes[body_end..] {
            return Err(Error::CorruptFile("checksum mismatch".into()));
        }

        let mut r = Reader {
            buf: &bytes[5..body_end],
        };
        let y_start = r.i32()?;
        let y_end = r.i32()?;
        let years_range = YearWindow::new(y_start, y_end)
            .map_err(|_| Error::CorruptFile("invalid year range".into()))?;
        let n = r.u32()? as usize;
        let edge_count = r.u64()?;

        let mut ids = Vec::with_capacity(n);
        for _ in 0..n {
            let len = r.u32()? as usize;
            let raw = r.take(len)?;
            let id = std::str::from_utf8(raw)
                .map_err(|_| Error::CorruptFile("non-utf8 paper id".into()))?;
            ids.push(id.to_string());
        }
        let mut years = Vec::with_capacity(n);
        for _ in 0..n {
            years.push(r.i32()?);
        }
        let mut doc_types = Vec::with_capacity(n);
        for _ in 0..n {
            doc_types.push(DocType::from_byte(r.u8()?)?);
        }
        let mut field_codes = Vec::with_capacity(n);
        for _ in 0..n {
            field_codes.push(r.u16()?);
        }
        let out_offsets = r.u64_vec(n + 1)?;
        let out_targets = r.idx_vec(edge_count as usize)?;
        let in_offsets = r.u64_vec(n + 1)?;
        let in_sources = r.idx_vec(edge_count as usize)?;
        if !r.buf.is_empty() {
            return Err(Error::CorruptFile("trailing bytes in body".into()));
        }

        Ok(CorpusIndex {
            years_range,
            ids,
            years,
            doc_types,
            field_codes,
            out_offsets,
            out_targets,
            in_offsets,
            in_sources,
            edge_count,
        })
    }
}

struct Reader<'a> {
    buf: &'a [u8],
}

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8]> {
        if self.buf.len() < n {
            return Err(Error::CorruptFile("unexpected end of body".into()));
        }
        let (head, tail) = self.buf.split_at(n);
        self.buf = tail;
        Ok(head)
    }

    fn u8(&mut self) -> Result<u8> {
        Ok(self.take(1)?[0])
    }

    fn u16(&mut self) -> Result<u16> {
        Ok(u16::from_le_bytes(self.take(2)?.try_into().unwrap()))
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn i32(&mut self) -> Result<i32> {
        Ok(i32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn u64(&mut self) -> Result<u64> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }

    fn u64_vec(&mut self, n: usize) -> Result<Vec<u64>> {
        let raw = self.take(n.checked_mul(8).ok_or_else(|| {
            Error::CorruptFile("length overflow".into())
        })?)?;
        Ok(raw
            .chunks_exact(8)
            .map(|c| u64::from_le_bytes(c.try_into().unwrap()))
            .collect())
    }

    fn idx_vec(&mut self, n: usize) -> Result<Vec<PaperIdx>> {
        let raw = self.take(n.checked_mul(4).ok_or_else(|| {
            Error::CorruptFile("length overflow".into())
        })?)?;
        Ok(raw
            .chunks_exact(4)
            .map(|c| PaperIdx(u32::from_le_bytes(c.try_into().unwrap())))
            .collect())
    }
}
