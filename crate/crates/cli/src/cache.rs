//! On-disk cache of computed artifacts, keyed by a hash of their inputs.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;
use sha2::{Digest, Sha256};
use toric_puzzle::json::to_canonical_string;
use toric_puzzle::{Error, Result};

pub fn key<T: Serialize>(inputs: &T) -> Result<String> {
    let text = to_canonical_string(inputs)?;
    Ok(hex::encode(Sha256::digest(text.as_bytes())))
}

fn path(dir: &Path, kind: &str, key: &str) -> PathBuf {
    dir.join(format!("{kind}-{key}.json"))
}

pub fn load(dir: &Path, kind: &str, key: &str) -> Result<Option<String>> {
    match fs::read_to_string(path(dir, kind, key)) {
        Ok(s) => Ok(Some(s)),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
        Err(e) => Err(Error::InvalidArgument(format!("cache: {e}"))),
    }
}

pub fn store(dir: &Path, kind: &str, key: &str, text: &str) -> Result<()> {
    let err = |e: std::io::Error| Error::InvalidArgument(format!("cache: {e}"));
    fs::create_dir_all(dir).map_err(err)?;
    let target = path(dir, kind, key);
    let tmp = target.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, text).map_err(err)?;
    fs::rename(&tmp, &target).map_err(err)
}
