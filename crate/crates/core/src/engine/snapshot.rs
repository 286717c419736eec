//! On-disk snapshots of enumerated element sets.
//!
//! Layout, all integers little-endian:
//!
//! ```text
//! "PMLB"  u16 version  u16 n  u64 count  [32] sha256(body)
//! body = count × (u8 len = n, n bytes of 1-based images)
//! ```
//!
//! The body is in lexicographic order, so equal sets give equal bytes.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use super::closure::{closure, EnumeratedMonoid};
use crate::error::{Error, Result};
use crate::perm::Transformation;

pub const MAGIC: &[u8; 4] = b"PMLB";
pub const VERSION: u16 = 1;
const HEADER_LEN: usize = 4 + 2 + 2 + 8 + 32;

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Content key of a generator list: order and degree matter, labels do not.
pub fn generator_digest(gens: &[Transformation], n: usize) -> String {
    let mut h = Sha256::new();
    h.update(format!("n={n}\n"));
    for g in gens {
        h.update(g.to_string());
        h.update("\n");
    }
    hex(&h.finalize()[..8])
}

pub fn snapshot_file_name(gens: &[Transformation], n: usize) -> String {
    format!("g{}-n{n}-v{VERSION}.pmlb", generator_digest(gens, n))
}

pub fn encode(m: &EnumeratedMonoid) -> Vec<u8> {
    let n = m.degree();
    let mut body = Vec::with_capacity(m.len() * (n + 1));
    for a in m.iter() {
        body.push(n as u8);
        body.extend(a.images().map(|p| p as u8));
    }
    let digest = Sha256::digest(&body);
    let mut out = Vec::with_capacity(HEADER_LEN + body.len());
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&VERSION.to_le_bytes());
    out.extend_from_slice(&(n as u16).to_le_bytes());
    out.extend_from_slice(&(m.len() as u64).to_le_bytes());
    out.extend_from_slice(&digest);
    out.extend_from_slice(&body);
    out
}

/// A decoded snapshot header, with the body verified against its digest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnapshotInfo {
    pub n: usize,
    pub count: u64,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Snapshot(msg.into())
}

pub fn verify(bytes: &[u8]) -> Result<SnapshotInfo> {
    if bytes.len() < HEADER_LEN || &bytes[..4] != MAGIC {
        return Err(bad("missing PMLB header"));
    }
    let version = u16::from_le_bytes([bytes[4], bytes[5]]);
    if version != VERSION {
        return Err(bad(format!("unsupported version {version}")));
    }
    let n = u16::from_le_bytes([bytes[6], bytes[7]]) as usize;
    let count = u64::from_le_bytes(bytes[8..16].try_into().unwrap());
    let body = &bytes[HEADER_LEN..];
    if body.len() as u64 != count * (n as u64 + 1) {
        return Err(bad("body length does not match the header"));
    }
    if Sha256::digest(body)[..] != bytes[16..48] {
        return Err(bad("content digest mismatch"));
    }
    Ok(SnapshotInfo { n, count })
}

pub fn decode(bytes: &[u8]) -> Result<Vec<Transformation>> {
    let info = verify(bytes)?;
    bytes[HEADER_LEN..]
        .chunks(info.n + 1)
        .map(|rec| {
            if rec[0] as usize != info.n {
                return Err(bad("record length differs from degree"));
            }
            Transformation::new(rec[1..].iter().map(|&p| p as usize))
        })
        .collect()
}

/// Where a snapshot lives and whether it was already there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CachedEnumeration {
    pub path: PathBuf,
    pub count: u64,
    pub reused: bool,
}

/// Returns the snapshot for `⟨gens⟩` in `dir`, building and writing it when
/// it is missing or fails verification.
pub fn enumerate_cached(
    dir: &Path,
    gens: &[Transformation],
    n: usize,
    cap: usize,
) -> Result<CachedEnumeration> {
    let path = dir.join(snapshot_file_name(gens, n));
    if let Ok(bytes) = fs::read(&path) {
        if let Ok(info) = verify(&bytes) {
            if info.n == n {
                return Ok(CachedEnumeration {
                    path,
                    count: info.count,
                    reused: true,
                });
            }
        }
    }
    let m = closure(gens, n, cap)?;
    let bytes = encode(&m);
    fs::create_dir_all(dir).map_err(|e| bad(format!("{}: {e}", dir.display())))?;
    let tmp = path.with_extension("tmp");
    let mut f = fs::File::create(&tmp).map_err(|e| bad(format!("{}: {e}", tmp.display())))?;
    f.write_all(&bytes)
        .and_then(|_| f.sync_all())
        .map_err(|e| bad(e.to_string()))?;
    fs::rename(&tmp, &path).map_err(|e| bad(e.to_string()))?;
    Ok(CachedEnumeration {
        path,
        count: m.len() as u64,
        reused: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_tamper() {
        let g = Transformation::new([2, 3, 4, 1]).unwrap();
        let m = closure(&[g], 4, 10).unwrap();
        let bytes = encode(&m);
        assert_eq!(verify(&bytes).unwrap(), SnapshotInfo { n: 4, count: 4 });
        assert_eq!(decode(&bytes).unwrap(), m.iter().collect::<Vec<_>>());
        let mut bad_bytes = bytes.clone();
        *bad_bytes.last_mut().unwrap() ^= 1;
        assert!(verify(&bad_bytes).is_err());
    }
}
