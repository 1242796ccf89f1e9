//! Morphism files: a header with the content hashes of source and target,
//! then one `x -> φ(x)` line per source chamber.
//!
//! ```text
//! 3f2a9c0d11e4b6a7 0c1d2e3f40516273
//! 0 -> 0
//! 1 -> 2
//! ```

use std::fmt::Write as _;
use std::hash::Hasher;

use fnv::FnvHasher;

use crate::chamber::{ChamberId, ChamberMap};
use crate::error::{Error, Result};

/// FNV-1a hash of a file's text, as used in morphism headers.
pub fn content_hash(text: &str) -> u64 {
    let mut h = FnvHasher::default();
    h.write(text.as_bytes());
    h.finish()
}

pub fn write_morphism(source_hash: u64, target_hash: u64, map: &ChamberMap) -> String {
    let mut out = format!("{source_hash:016x} {target_hash:016x}\n");
    for (x, y) in map.as_slice().iter().enumerate() {
        let _ = writeln!(out, "{x} -> {y}");
    }
    out
}

/// Returns the two header hashes and the map.
pub fn parse_morphism(text: &str) -> Result<(u64, u64, ChamberMap)> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let err = |i: usize, message: String| Error::Parse { line: i + 1, message };
    let (i, header) = lines.next().ok_or_else(|| err(0, "empty morphism file".into()))?;
    let hashes: Vec<u64> = header
        .split_whitespace()
        .map(|h| u64::from_str_radix(h, 16).map_err(|_| err(i, format!("bad hash `{h}`"))))
        .collect::<Result<_>>()?;
    let [source, target] = hashes[..] else {
        return Err(err(i, "expected `<source-hash> <target-hash>`".into()));
    };
    let mut map = Vec::new();
    for (i, line) in lines {
        let (x, y) =
            line.split_once("->").ok_or_else(|| err(i, format!("expected `x -> y`, got `{}`", line.trim())))?;
        let x: ChamberId = x.trim().parse().map_err(|_| err(i, format!("bad chamber `{}`", x.trim())))?;
        let y: ChamberId = y.trim().parse().map_err(|_| err(i, format!("bad chamber `{}`", y.trim())))?;
        if x != map.len() {
            return Err(err(i, format!("expected chamber {}, found {x}", map.len())));
        }
        map.push(y);
    }
    Ok((source, target, ChamberMap::new(map)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let map = ChamberMap::new(vec![0, 2, 1, 2]);
        let text = write_morphism(7, 0xabc, &map);
        assert!(text.starts_with("0000000000000007 0000000000000abc\n0 -> 0\n"));
        assert_eq!(parse_morphism(&text).unwrap(), (7, 0xabc, map));
        assert!(matches!(parse_morphism("1 2\n0 -> 0\n2 -> 1\n"), Err(Error::Parse { line: 3, .. })));
    }
}
