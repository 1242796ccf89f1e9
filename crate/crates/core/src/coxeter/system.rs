use std::fmt;
use std::hash::Hasher;

use fnv::FnvHasher;

use crate::error::{Error, Result};

/// Index of a generator in its system's ordered generator list.
pub type Gen = usize;

/// Maximum number of generators; generator sets are stored as 64-bit masks.
pub const MAX_GENERATORS: usize = 64;

/// A set of generators, stored as a bitmask over generator indices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenSet(pub u64);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn singleton(s: Gen) -> Self {
        GenSet(1 << s)
    }

    pub fn contains(self, s: Gen) -> bool {
        self.0 >> s & 1 == 1
    }

    pub fn insert(&mut self, s: Gen) {
        self.0 |= 1 << s;
    }

    pub fn remove(&mut self, s: Gen) {
        self.0 &= !(1 << s);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: GenSet) -> GenSet {
        GenSet(self.0 | other.0)
    }

    pub fn intersection(self, other: GenSet) -> GenSet {
        GenSet(self.0 & other.0)
    }

    pub fn difference(self, other: GenSet) -> GenSet {
        GenSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: GenSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in increasing index order.
    pub fn iter(self) -> impl Iterator<Item = Gen> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let s = bits.trailing_zeros() as Gen;
            bits &= bits - 1;
            Some(s)
        })
    }

    /// All subsets of `self`, in increasing mask order.
    pub fn subsets(self) -> impl Iterator<Item = GenSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(GenSet(cur))
        })
    }
}

impl FromIterator<Gen> for GenSet {
    fn from_iter<I: IntoIterator<Item = Gen>>(iter: I) -> Self {
        let mut set = GenSet::EMPTY;
        for s in iter {
            set.insert(s);
        }
        set
    }
}

/// A right-angled Coxeter system: every pair of distinct generators either
/// commutes (`m = 2`) or generates an infinite dihedral group (`m = ∞`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CoxeterSystem {
    names: Vec<String>,
    /// `blocks[s]` has bit `t` set iff `s` and `t` do not commute; always
    /// contains `s` itself since `s` never commutes with itself in a reduced word.
    blocks: Vec<u64>,
    fingerprint: u64,
}

impl CoxeterSystem {
    /// Builds a system from generator names and commuting pairs of indices.
    pub fn new<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        commuting: impl IntoIterator<Item = (Gen, Gen)>,
    ) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_GENERATORS {
            return Err(Error::Parse {
                line: 0,
                message: format!("at most {MAX_GENERATORS} generators are supported"),
            });
        }
        for (i, n) in names.iter().enumerate() {
            if !valid_name(n) {
                return Err(Error::Parse { line: 0, message: format!("invalid generator name `{n}`") });
            }
            if names[..i].contains(n) {
                return Err(Error::Parse { line: 0, message: format!("duplicate generator `{n}`") });
            }
        }
        let rank = names.len();
        let all = if rank == 64 { u64::MAX } else { (1u64 << rank) - 1 };
        let mut blocks = vec![all; rank];
        for (s, t) in commuting {
            if s >= rank {
                return Err(Error::GeneratorIndex(s));
            }
            if t >= rank {
                return Err(Error::GeneratorIndex(t));
            }
            if s == t {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("generator `{}` cannot commute with itself", names[s]),
                });
            }
            blocks[s] &= !(1 << t);
            blocks[t] &= !(1 << s);
        }
        let mut sys = CoxeterSystem { names, blocks, fingerprint: 0 };
        let mut h = FnvHasher::default();
        h.write(sys.to_racs().as_bytes());
        sys.fingerprint = h.finish();
        Ok(sys)
    }

    /// `A1`-style infinite dihedral group on generators `a`, `b`.
    pub fn infinite_dihedral() -> Self {
        Self::new(["a", "b"], []).expect("valid system")
    }

    /// `(Z/2)^2` on generators `a`, `b`.
    pub fn klein_four() -> Self {
        Self::new(["a", "b"], [(0, 1)]).expect("valid system")
    }

    /// The right-angled `p`-gon group: `s_i` commutes with `s_{i±1 mod p}`.
    pub fn polygon(p: usize) -> Self {
        let names: Vec<String> = (1..=p).map(|i| format!("s{i}")).collect();
        let pairs: Vec<(Gen, Gen)> = if p >= 3 { (0..p).map(|i| (i, (i + 1) % p)).collect() } else { vec![] };
        Self::new(names, pairs).expect("valid system")
    }

    /// All generators pairwise commuting: the finite group `(Z/2)^n`.
    pub fn finite(n: usize) -> Self {
        let names: Vec<String> = (1..=n).map(|i| format!("s{i}")).collect();
        let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        Self::new(names, pairs).expect("valid system")
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, s: Gen) -> &str {
        &self.names[s]
    }

    pub fn generator(&self, name: &str) -> Result<Gen> {
        self.names.iter().position(|n| n == name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn all(&self) -> GenSet {
        GenSet((0..self.rank()).fold(0, |m, s| m | 1 << s))
    }

    /// True iff `s != t` and `m_st = 2`.
    pub fn commute(&self, s: Gen, t: Gen) -> bool {
        self.blocks[s] >> t & 1 == 0
    }

    /// Mask of generators that do not commute with `s` (including `s`).
    pub(crate) fn blockers(&self, s: Gen) -> u64 {
        self.blocks[s]
    }

    /// `{s}'`: generators other than `s` commuting with `s`.
    pub fn link(&self, s: Gen) -> GenSet {
        GenSet(self.all().0 & !self.blocks[s])
    }

    /// A subset is spherical iff its members pairwise commute.
    pub fn is_spherical(&self, set: GenSet) -> bool {
        set.iter().all(|s| set.0 & self.blocks[s] == 1 << s)
    }

    /// Spherical subsets in increasing mask order.
    pub fn spherical_subsets(&self) -> Vec<GenSet> {
        // cliques of the commutation graph, grown from smaller ones
        let mut out = vec![GenSet::EMPTY];
        let mut frontier = vec![GenSet::EMPTY];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for set in frontier {
                let start = if set.is_empty() { 0 } else { 64 - set.0.leading_zeros() as usize };
                for s in start..self.rank() {
                    if set.0 & self.blocks[s] == 0 {
                        let mut bigger = set;
                        bigger.insert(s);
                        next.push(bigger);
                    }
                }
            }
            out.extend(&next);
            frontier = next;
        }
        out.sort();
        out
    }

    /// Stable 64-bit fingerprint of the system (names and commutation relation).
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn format_set(&self, set: GenSet) -> String {
        let names: Vec<&str> = set.iter().map(|s| self.name(s)).collect();
        format!("{{{}}}", names.join(","))
    }

    /// Parses the `.racs` text format.
    ///
    /// ```text
    /// # pentagon
    /// generators: s1 s2 s3 s4 s5
    /// commute: s1 s2
    /// ```
    pub fn parse_racs(text: &str) -> Result<Self> {
        let mut names: Option<Vec<String>> = None;
        let mut pairs: Vec<(Gen, Gen)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let err = |message: String| Error::Parse { line: line_no, message };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) =
                line.split_once(':').ok_or_else(|| err(format!("expected `key: value`, got `{line}`")))?;
            let fields: Vec<&str> = rest.split_whitespace().collect();
            match key.trim() {
                "generators" => {
                    if names.is_some() {
                        return Err(err("repeated `generators` line".into()));
                    }
                    if fields.len() > MAX_GENERATORS {
                        return Err(err(format!("at most {MAX_GENERATORS} generators are supported")));
                    }
                    let mut list: Vec<String> = Vec::new();
                    for f in fields {
                        if !valid_name(f) {
                            return Err(err(format!("invalid generator name `{f}`")));
                        }
                        if list.iter().any(|n| n == f) {
                            return Err(err(format!("duplicate generator `{f}`")));
                        }
                        list.push(f.to_string());
                    }
                    names = Some(list);
                }
                "commute" => {
                    let list = names.as_ref().ok_or_else(|| err("`commute` before `generators`".into()))?;
                    if fields.len() != 2 {
                        return Err(err(format!("`commute` takes two generators, got {}", fields.len())));
                    }
                    let find = |n: &str| {
                        list.iter().position(|x| x == n).ok_or_else(|| err(format!("unknown generator `{n}`")))
                    };
                    let (s, t) = (find(fields[0])?, find(fields[1])?);
                    if s == t {
                        return Err(err(format!("generator `{}` cannot commute with itself", fields[0])));
                    }
                    let key = (s.min(t), s.max(t));
                    if pairs.contains(&key) {
                        return Err(err(format!("duplicate commute declaration `{} {}`", fields[0], fields[1])));
                    }
                    pairs.push(key);
                }
                other => return Err(err(format!("unknown key `{other}`"))),
            }
        }
        let names = names.ok_or(Error::Parse { line: 0, message: "missing `generators` line".into() })?;
        Self::new(names, pairs)
    }

    /// Canonical `.racs` text: generators in order, then commuting pairs sorted.
    pub fn to_racs(&self) -> String {
        let mut out = format!("generators: {}\n", self.names.join(" "));
        for s in 0..self.rank() {
            for t in s + 1..self.rank() {
                if self.commute(s, t) {
                    out.push_str(&format!("commute: {} {}\n", self.names[s], self.names[t]));
                }
            }
        }
        out
    }
}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoxeterSystem({:?}, fingerprint {:016x})", self.names, self.fingerprint())
    }
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && name != "1" && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}
