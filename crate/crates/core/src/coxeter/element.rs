use std::cmp::Ordering;
use std::fmt;

use super::system::{CoxeterSystem, Gen, GenSet};
use crate::error::{Error, Result};

/// An element of `W`, held as the ShortLex-least reduced word of its class.
///
/// Two elements are equal in `W` iff their words are equal. The ordering is
/// ShortLex on the canonical words: length first, then lexicographic by
/// generator index.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    system: u64,
    word: Vec<u8>,
}

impl Element {
    pub fn identity(sys: &CoxeterSystem) -> Self {
        Element { system: sys.fingerprint(), word: Vec::new() }
    }

    pub fn generator(sys: &CoxeterSystem, s: Gen) -> Result<Self> {
        if s >= sys.rank() {
            return Err(Error::GeneratorIndex(s));
        }
        Ok(Element { system: sys.fingerprint(), word: vec![s as u8] })
    }

    /// Canonical reduced word as generator indices.
    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn letters(&self) -> impl DoubleEndedIterator<Item = Gen> + ExactSizeIterator + '_ {
        self.word.iter().map(|&c| c as Gen)
    }

    /// `ℓ(w)`.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Same as [`Element::is_identity`].
    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    pub fn system_fingerprint(&self) -> u64 {
        self.system
    }

    /// Set of letters occurring in the word; independent of the reduced
    /// word chosen, since reduced words differ only by commutations.
    pub fn support(&self) -> GenSet {
        self.letters().collect()
    }

    pub fn display<'a>(&'a self, sys: &'a CoxeterSystem) -> impl fmt::Display + 'a {
        DisplayElement { sys, el: self }
    }
}

impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word.len().cmp(&other.word.len()).then_with(|| self.word.cmp(&other.word))
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element{:?}", self.word)
    }
}

struct DisplayElement<'a> {
    sys: &'a CoxeterSystem,
    el: &'a Element,
}

impl fmt::Display for DisplayElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.el.word.is_empty() {
            return f.write_str("1");
        }
        for (i, s) in self.el.letters().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            f.write_str(self.sys.name(s))?;
        }
        Ok(())
    }
}

/// Free reduction in a right-angled Coxeter group: append letters one at a
/// time, cancelling against an equal letter reachable through commuting
/// letters. The output is a reduced word.
fn reduce(sys: &CoxeterSystem, letters: impl IntoIterator<Item = Gen>) -> Vec<u8> {
    let mut out: Vec<u8> = Vec::new();
    for s in letters {
        let mut cancel = None;
        for j in (0..out.len()).rev() {
            let c = out[j] as Gen;
            if c == s {
                cancel = Some(j);
                break;
            }
            if !sys.commute(c, s) {
                break;
            }
        }
        match cancel {
            Some(j) => {
                out.remove(j);
            }
            None => out.push(s as u8),
        }
    }
    out
}

/// Order in which the positions of a reduced word are emitted by its
/// ShortLex-least commutation-equivalent rearrangement.
///
/// Greedy: repeatedly take the smallest letter that commutes past every
/// earlier unused letter. This is the lexicographically least linear
/// extension of the word's commutation order.
pub(crate) fn canonical_order(sys: &CoxeterSystem, word: &[u8]) -> Vec<usize> {
    let n = word.len();
    let mut used = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut seen = 0u64;
        let mut best: Option<usize> = None;
        for i in 0..n {
            if used[i] {
                continue;
            }
            let c = word[i] as Gen;
            if sys.blockers(c) & seen == 0 && best.is_none_or(|b| word[b] > word[i]) {
                best = Some(i);
            }
            seen |= 1 << c;
        }
        let b = best.expect("some letter is always available");
        used[b] = true;
        order.push(b);
    }
    order
}

impl CoxeterSystem {
    /// Canonical element for the product of `letters`.
    pub fn normal_form(&self, letters: &[Gen]) -> Result<Element> {
        if let Some(&bad) = letters.iter().find(|&&s| s >= self.rank()) {
            return Err(Error::GeneratorIndex(bad));
        }
        Ok(self.normalize_unchecked(letters.iter().copied()))
    }

    /// Parses a word of generator names separated by whitespace or `.`;
    /// `1` or the empty string denote the identity.
    pub fn parse_word(&self, text: &str) -> Result<Element> {
        let mut letters = Vec::new();
        for tok in text.split(|c: char| c.is_whitespace() || c == '.').filter(|t| !t.is_empty()) {
            if tok == "1" {
                continue;
            }
            letters.push(self.generator(tok)?);
        }
        self.normal_form(&letters)
    }

    pub(crate) fn normalize_unchecked(&self, letters: impl IntoIterator<Item = Gen>) -> Element {
        let reduced = reduce(self, letters);
        let order = canonical_order(self, &reduced);
        let word = order.into_iter().map(|i| reduced[i]).collect();
        Element { system: self.fingerprint(), word }
    }

    /// Fails with [`Error::SystemMismatch`] unless `el` belongs to this system.
    pub fn check(&self, el: &Element) -> Result<()> {
        if el.system != self.fingerprint() {
            return Err(Error::SystemMismatch);
        }
        Ok(())
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.normalize_unchecked(a.letters().chain(b.letters())))
    }

    /// `w·s`.
    pub fn mul_gen(&self, w: &Element, s: Gen) -> Result<Element> {
        self.check(w)?;
        if s >= self.rank() {
            return Err(Error::GeneratorIndex(s));
        }
        Ok(self.normalize_unchecked(w.letters().chain([s])))
    }

    /// `s·w`.
    pub fn gen_mul(&self, s: Gen, w: &Element) -> Result<Element> {
        self.check(w)?;
        if s >= self.rank() {
            return Err(Error::GeneratorIndex(s));
        }
        Ok(self.normalize_unchecked(std::iter::once(s).chain(w.letters())))
    }

    pub fn inverse(&self, a: &Element) -> Result<Element> {
        self.check(a)?;
        Ok(self.normalize_unchecked(a.letters().rev()))
    }

    /// `d(a,b) = ℓ(a⁻¹b)`.
    pub fn dist(&self, a: &Element, b: &Element) -> Result<usize> {
        self.check(a)?;
        self.check(b)?;
        Ok(reduce(self, a.letters().rev().chain(b.letters())).len())
    }

    /// Right descent set `In(w) = {s : ℓ(ws) < ℓ(w)}`.
    pub fn descent_set(&self, w: &Element) -> Result<GenSet> {
        self.check(w)?;
        Ok(self.descents_of_word(&w.word))
    }

    pub(crate) fn descents_of_word(&self, word: &[u8]) -> GenSet {
        // the last occurrence of s can move to the end iff everything after it commutes with s
        let mut seen = 0u64;
        let mut out = GenSet::EMPTY;
        for &c in word.iter().rev() {
            let c = c as Gen;
            if self.blockers(c) & seen == 0 {
                out.insert(c);
            }
            seen |= 1 << c;
        }
        out
    }

    /// Left descent set `{s : ℓ(sw) < ℓ(w)}`.
    pub fn left_descent_set(&self, w: &Element) -> Result<GenSet> {
        self.check(w)?;
        let mut seen = 0u64;
        let mut out = GenSet::EMPTY;
        for &c in &w.word {
            let c = c as Gen;
            if self.blockers(c) & seen == 0 {
                out.insert(c);
            }
            seen |= 1 << c;
        }
        Ok(out)
    }

    /// Longest element `w_T` of a spherical `W_T`: the product of its members.
    pub fn longest_element(&self, set: GenSet) -> Result<Element> {
        if !self.is_spherical(set) {
            return Err(Error::NotSpherical);
        }
        Ok(self.normalize_unchecked(set.iter()))
    }

    /// Shortest element of the coset `w·W_T` (any `T`, spherical or not):
    /// strip right descents lying in `T` until none is left.
    pub fn coset_minimum(&self, w: &Element, set: GenSet) -> Result<Element> {
        self.check(w)?;
        let mut cur = w.clone();
        loop {
            let d = self.descents_of_word(&cur.word).intersection(set);
            match d.iter().next() {
                Some(t) => cur = self.normalize_unchecked(cur.letters().chain([t])),
                None => return Ok(cur),
            }
        }
    }

    /// True iff `h ∈ w·W_T`.
    pub fn in_coset(&self, w: &Element, set: GenSet, h: &Element) -> Result<bool> {
        self.check(w)?;
        self.check(h)?;
        let q = reduce(self, w.letters().rev().chain(h.letters()));
        Ok(q.iter().all(|&c| set.contains(c as Gen)))
    }
}
