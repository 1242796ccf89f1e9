//! The `.bldg` text format.
//!
//! ```text
//! bldg 1
//! hash 5f3a0c9e1b2d4e6f
//! radius 2
//! q 2 2
//! generators: a b
//! commute: a b
//! chambers 9
//! 0 1
//! 1 a
//! ...
//! panels
//! a: 0 1 2
//! ...
//! ```
//!
//! `hash` is the fingerprint of the embedded Coxeter system, `q` is `-` for
//! irregular balls, and only panels with at least two chambers are listed
//! (generator order, then by least member).

use std::fmt::Write as _;

use crate::chamber::{ChamberId, ChamberSystem, Panels};
use crate::coxeter::{CoxeterSystem, Element, Limits};
use crate::error::{Error, Result};

use super::BuildingBall;

const MAGIC: &str = "bldg 1";

pub fn write_bldg(b: &BuildingBall) -> String {
    let sys = b.system();
    let mut out = String::new();
    let _ = writeln!(out, "{MAGIC}");
    let _ = writeln!(out, "hash {:016x}", sys.fingerprint());
    let _ = writeln!(out, "radius {}", b.radius());
    match b.q() {
        Some(q) => {
            let q: Vec<String> = q.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "q {}", q.join(" "));
        }
        None => out.push_str("q -\n"),
    }
    out.push_str(&sys.to_racs());
    let _ = writeln!(out, "chambers {}", b.chamber_count());
    for x in 0..b.chamber_count() {
        let _ = writeln!(out, "{x} {}", b.fold(x).display(sys));
    }
    out.push_str("panels\n");
    for s in 0..b.rank() {
        let mut listed: Vec<&Vec<ChamberId>> = b.panels().panels_of(s).iter().filter(|p| p.len() >= 2).collect();
        listed.sort_unstable_by_key(|p| p[0]);
        for panel in listed {
            let ids: Vec<String> = panel.iter().map(ChamberId::to_string).collect();
            let _ = writeln!(out, "{}: {}", sys.name(s), ids.join(" "));
        }
    }
    out
}

pub fn parse_bldg(text: &str, limits: Limits) -> Result<BuildingBall> {
    let lines: Vec<&str> = text.lines().collect();
    let err = |i: usize, message: String| Error::Parse { line: i + 1, message };
    if lines.first().map(|l| l.trim()) != Some(MAGIC) {
        return Err(err(0, format!("expected `{MAGIC}`")));
    }
    let mut hash: Option<u64> = None;
    let mut radius: Option<usize> = None;
    let mut q: Option<Option<Vec<usize>>> = None;
    // racs lines keep their positions so parse errors report file line numbers
    let mut racs = String::from("\n");
    let mut i = 1;
    let count = loop {
        let Some(&raw) = lines.get(i) else {
            return Err(err(i, "missing `chambers` line".into()));
        };
        let line = raw.trim();
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match key {
            "hash" => hash = Some(u64::from_str_radix(rest, 16).map_err(|_| err(i, format!("bad hash `{rest}`")))?),
            "radius" => radius = Some(rest.parse().map_err(|_| err(i, format!("bad radius `{rest}`")))?),
            "q" if rest == "-" => q = Some(None),
            "q" => {
                let v = rest
                    .split_whitespace()
                    .map(|t| t.parse::<usize>().map_err(|_| err(i, format!("bad thickness `{t}`"))))
                    .collect::<Result<Vec<_>>>()?;
                q = Some(Some(v));
            }
            "generators:" | "commute:" => {
                racs.push_str(raw);
            }
            "chambers" => break rest.parse::<usize>().map_err(|_| err(i, format!("bad chamber count `{rest}`")))?,
            "" => {}
            _ => return Err(err(i, format!("unexpected line `{line}`"))),
        }
        racs.push('\n');
        i += 1;
    };
    let sys = CoxeterSystem::parse_racs(&racs)?;
    let hash = hash.ok_or_else(|| err(i, "missing `hash` line".into()))?;
    if hash != sys.fingerprint() {
        return Err(err(
            i,
            format!("hash {hash:016x} does not match the embedded system ({:016x})", sys.fingerprint()),
        ));
    }
    let radius = radius.ok_or_else(|| err(i, "missing `radius` line".into()))?;
    let q = q.ok_or_else(|| err(i, "missing `q` line".into()))?;
    limits.check(count, "chambers")?;

    let mut fold: Vec<Element> = Vec::with_capacity(count);
    for x in 0..count {
        i += 1;
        let line = lines.get(i).ok_or_else(|| err(i, format!("missing chamber {x}")))?.trim();
        let (id, word) = line.split_once(' ').ok_or_else(|| err(i, format!("expected `{x} <word>`")))?;
        if id.parse::<usize>().ok() != Some(x) {
            return Err(err(i, format!("expected chamber {x}, found `{id}`")));
        }
        let w = sys.parse_word(word).map_err(|e| err(i, e.to_string()))?;
        if w.display(&sys).to_string() != word {
            return Err(err(i, format!("`{word}` is not a canonical reduced word")));
        }
        fold.push(w);
    }
    i += 1;
    if lines.get(i).map(|l| l.trim()) != Some("panels") {
        return Err(err(i, "expected `panels`".into()));
    }
    let mut partitions: Vec<Vec<Vec<ChamberId>>> = vec![Vec::new(); sys.rank()];
    for (j, raw) in lines.iter().enumerate().skip(i + 1) {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let (name, ids) =
            line.split_once(':').ok_or_else(|| err(j, format!("expected `generator: ids`, got `{line}`")))?;
        let s = sys.generator(name.trim()).map_err(|e| err(j, e.to_string()))?;
        let ids = ids
            .split_whitespace()
            .map(|t| match t.parse::<usize>() {
                Ok(x) if x < count => Ok(x),
                _ => Err(err(j, format!("bad chamber id `{t}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        partitions[s].push(ids);
    }
    let panels = Panels::from_partitions(sys.rank(), count, &partitions)?;
    BuildingBall::from_parts(&sys, radius, &fold, panels, q, limits)
}
