//! Permutations in one-line notation and the pattern-containment relation.
//!
//! A permutation of length `n` is stored as its one-line word, a
//! rearrangement of `1..=n`. Positions and values are 1-indexed in every
//! public interface; text like `534162` or `5,3,4,1,6,2` denotes the map
//! sending 1 to 5, 2 to 3, and so on.
//!
//! `β` is *contained* in `τ` when `τ` has a subsequence whose entries are
//! in the same relative order as `β`; otherwise `τ` *avoids* `β`. So
//! `534162` contains `321` (for instance via the subsequence `5, 4, 1`)
//! while every permutation avoiding `21` is increasing.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Hard cap on permutation length. Entries fit comfortably in a byte and
/// every exhaustive engine gives out long before this bound.
pub const MAX_LEN: usize = 64;

/// A permutation of `{1, …, n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u8>,
}

/// The three counting-preserving symmetries of the pattern order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    /// Reverse the word left to right.
    Reverse,
    /// Replace each value `v` by `n + 1 - v`.
    Complement,
    /// Invert as a function (reflect the plot in the main diagonal).
    Inverse,
}

impl Symmetry {
    /// All three symmetries, in a fixed order.
    pub const ALL: [Symmetry; 3] = [Symmetry::Reverse, Symmetry::Complement, Symmetry::Inverse];
}

impl Permutation {
    /// The empty permutation (length 0).
    pub fn empty() -> Self {
        Permutation { word: Vec::new() }
    }

    /// The identity `1 2 … n`.
    ///
    /// # Panics
    /// If `n` exceeds [`MAX_LEN`].
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_LEN, "identity({n}) exceeds the length cap");
        Permutation {
            word: (1..=n as u8).collect(),
        }
    }

    /// Builds a permutation from its one-line word, validating that the
    /// entries are exactly `1..=n` with no repeats.
    pub fn from_word(values: &[u64]) -> Result<Self> {
        let n = values.len();
        if n > MAX_LEN {
            return Err(Error::LengthCap { len: n, max: MAX_LEN });
        }
        let mut seen = [false; MAX_LEN + 1];
        let mut word = Vec::with_capacity(n);
        for &v in values {
            if v < 1 || v > n as u64 {
                return Err(Error::ValueOutOfRange { value: v, len: n });
            }
            if seen[v as usize] {
                return Err(Error::DuplicateValue { value: v });
            }
            seen[v as usize] = true;
            word.push(v as u8);
        }
        Ok(Permutation { word })
    }

    /// Wraps an already-validated word. Callers must guarantee the entries
    /// are a rearrangement of `1..=n`.
    pub(crate) fn from_vec_unchecked(word: Vec<u8>) -> Self {
        debug_assert!(Permutation::from_word(&word.iter().map(|&v| v as u64).collect::<Vec<_>>()).is_ok());
        Permutation { word }
    }

    /// The *pattern* of a sequence of distinct entries: the unique
    /// permutation in the same relative order. `pattern_of(&[10, 11, 3])`
    /// is `231`.
    pub fn pattern_of<T: Ord>(values: &[T]) -> Result<Self> {
        let n = values.len();
        if n > MAX_LEN {
            return Err(Error::LengthCap { len: n, max: MAX_LEN });
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| values[a].cmp(&values[b]));
        for w in order.windows(2) {
            if values[w[0]] == values[w[1]] {
                let (mut first, mut second) = (w[0] + 1, w[1] + 1);
                if first > second {
                    std::mem::swap(&mut first, &mut second);
                }
                return Err(Error::EqualEntries { first, second });
            }
        }
        let mut word = vec![0u8; n];
        for (rank, &idx) in order.iter().enumerate() {
            word[idx] = (rank + 1) as u8;
        }
        Ok(Permutation { word })
    }

    /// Length of the permutation.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    /// True for the empty permutation.
    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// True for the identity (including the empty permutation).
    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Value at 1-based position `pos`.
    ///
    /// # Panics
    /// If `pos` is not in `1..=len`.
    pub fn value_at(&self, pos: usize) -> usize {
        assert!(pos >= 1 && pos <= self.len(), "position {pos} out of range");
        self.word[pos - 1] as usize
    }

    /// 1-based position of `value`.
    ///
    /// # Panics
    /// If `value` is not in `1..=len`.
    pub fn position_of(&self, value: usize) -> usize {
        assert!(value >= 1 && value <= self.len(), "value {value} out of range");
        self.word.iter().position(|&v| v as usize == value).unwrap() + 1
    }

    /// The one-line word as owned integers.
    pub fn to_word(&self) -> Vec<u64> {
        self.word.iter().map(|&v| v as u64).collect()
    }

    pub(crate) fn word(&self) -> &[u8] {
        &self.word
    }

    /// The word reversed: `534162` becomes `261435`.
    pub fn reverse(&self) -> Self {
        let mut word = self.word.clone();
        word.reverse();
        Permutation { word }
    }

    /// Each value `v` replaced by `n + 1 - v`.
    pub fn complement(&self) -> Self {
        let n = self.word.len() as u8;
        Permutation {
            word: self.word.iter().map(|&v| n + 1 - v).collect(),
        }
    }

    /// The inverse function: entry `v` at position `p` puts `p` at
    /// position `v`.
    pub fn inverse(&self) -> Self {
        let mut word = vec![0u8; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v as usize - 1] = (i + 1) as u8;
        }
        Permutation { word }
    }

    /// Applies one of the three symmetries.
    pub fn symmetry(&self, sym: Symmetry) -> Self {
        match sym {
            Symmetry::Reverse => self.reverse(),
            Symmetry::Complement => self.complement(),
            Symmetry::Inverse => self.inverse(),
        }
    }

    /// Removes the entry at 1-based position `pos` and renumbers the rest.
    ///
    /// # Panics
    /// If `pos` is not in `1..=len`.
    pub fn delete(&self, pos: usize) -> Self {
        assert!(pos >= 1 && pos <= self.len(), "position {pos} out of range");
        let removed = self.word[pos - 1];
        let word = self
            .word
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != pos - 1)
            .map(|(_, &v)| if v > removed { v - 1 } else { v })
            .collect();
        Permutation { word }
    }

    /// Does this permutation contain `pattern`?
    pub fn contains(&self, pattern: &Permutation) -> bool {
        PatternMatcher::new(pattern).contained_in(&self.word)
    }

    /// Does this permutation avoid `pattern`?
    pub fn avoids(&self, pattern: &Permutation) -> bool {
        !self.contains(pattern)
    }

    /// Does this permutation avoid every pattern in `patterns`?
    pub fn avoids_all<'a, I>(&self, patterns: I) -> bool
    where
        I: IntoIterator<Item = &'a Permutation>,
    {
        patterns.into_iter().all(|p| self.avoids(p))
    }

    /// Number of occurrences of `pattern` (index subsequences in the same
    /// relative order). Exhaustive; the count is exact.
    pub fn count_occurrences(&self, pattern: &Permutation) -> u64 {
        PatternMatcher::new(pattern).count_in(&self.word)
    }

    /// Every occurrence of `pattern`, as explicit index lists in
    /// lexicographic order. Materializes all of them; prefer
    /// [`count_occurrences`](Self::count_occurrences) when only the number
    /// matters.
    pub fn occurrences(&self, pattern: &Permutation) -> Vec<Occurrence> {
        PatternMatcher::new(pattern)
            .embeddings_in(&self.word)
            .into_iter()
            .map(|ix| Occurrence {
                indices: ix.into_iter().map(|i| i + 1).collect(),
                pattern: pattern.clone(),
            })
            .collect()
    }

    /// Compact rendition: digits without separators when every value is a
    /// single digit (`215436`), the comma form otherwise.
    pub fn compact(&self) -> String {
        if self.len() <= 9 {
            self.word.iter().map(|v| char::from(b'0' + v)).collect()
        } else {
            self.to_string()
        }
    }
}

impl fmt::Display for Permutation {
    /// Canonical text form: values separated by commas, e.g. `5,3,4,1,6,2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("ε")
        } else {
            f.write_str(&self.compact())
        }
    }
}

impl serde::Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts the comma form (`5,3,4,1,6,2`) and, when every value is a
    /// single digit, the compact form (`534162`).
    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        if text.is_empty() {
            return Err(Error::Parse {
                text: s.to_string(),
                position: 1,
                reason: "empty input".to_string(),
            });
        }
        if text.contains(',') {
            let mut values = Vec::new();
            let mut offset = 0usize;
            for part in text.split(',') {
                let at = offset + 1;
                offset += part.len() + 1;
                let trimmed = part.trim();
                if trimmed.is_empty() {
                    return Err(Error::Parse {
                        text: s.to_string(),
                        position: at,
                        reason: "missing value between commas".to_string(),
                    });
                }
                match trimmed.parse::<u64>() {
                    Ok(v) => values.push(v),
                    Err(_) => {
                        return Err(Error::Parse {
                            text: s.to_string(),
                            position: at,
                            reason: format!("{trimmed:?} is not a number"),
                        })
                    }
                }
            }
            Permutation::from_word(&values)
        } else {
            let mut values = Vec::new();
            for (i, c) in text.chars().enumerate() {
                match c.to_digit(10) {
                    Some(d) if d >= 1 => values.push(d as u64),
                    Some(_) => {
                        return Err(Error::Parse {
                            text: s.to_string(),
                            position: i + 1,
                            reason: "digit 0 is not a value; use the comma form for lengths ≥ 10"
                                .to_string(),
                        })
                    }
                    None => {
                        return Err(Error::Parse {
                            text: s.to_string(),
                            position: i + 1,
                            reason: format!("unexpected character {c:?}"),
                        })
                    }
                }
            }
            Permutation::from_word(&values)
        }
    }
}

/// One witness of a pattern inside a host permutation: the 1-based index
/// subsequence realizing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Occurrence {
    /// Strictly increasing 1-based positions into the host.
    pub indices: Vec<usize>,
    /// The pattern those positions realize.
    pub pattern: Permutation,
}

impl Occurrence {
    /// Checks this occurrence against a host: indices strictly increasing,
    /// in range, and realizing exactly the recorded pattern.
    pub fn is_valid_in(&self, host: &Permutation) -> bool {
        if self.indices.len() != self.pattern.len() {
            return false;
        }
        if self.indices.windows(2).any(|w| w[0] >= w[1]) {
            return false;
        }
        if self.indices.iter().any(|&i| i < 1 || i > host.len()) {
            return false;
        }
        let picked: Vec<usize> = self.indices.iter().map(|&i| host.value_at(i)).collect();
        Permutation::pattern_of(&picked).map(|p| p == self.pattern).unwrap_or(false)
    }
}

/// A pattern preprocessed for repeated containment tests.
///
/// The search walks pattern positions left to right and assigns host
/// positions by depth-first search. For pattern position `j` only the
/// *nearest* previously placed entries below and above `σ_j` constrain the
/// host value — they pin it into an open interval — and satisfying those
/// two constraints is equivalent to extending the order isomorphism. The
/// anchored variant additionally forces the last pattern position onto the
/// last host position, which is exactly the test the class-enumeration
/// engine needs when it appends a new point.
pub(crate) struct PatternMatcher {
    word: Vec<u8>,
    /// For each position: the earlier position holding the largest smaller
    /// value, if any.
    pred: Vec<Option<usize>>,
    /// For each position: the earlier position holding the smallest larger
    /// value, if any.
    succ: Vec<Option<usize>>,
    /// Whether each entry is below the final entry (anchored pruning).
    below_last: Vec<bool>,
}

impl PatternMatcher {
    pub(crate) fn new(pattern: &Permutation) -> Self {
        let word = pattern.word.clone();
        let k = word.len();
        let mut pred = vec![None; k];
        let mut succ = vec![None; k];
        for j in 0..k {
            for i in 0..j {
                if word[i] < word[j] {
                    if pred[j].map_or(true, |b: usize| word[b] < word[i]) {
                        pred[j] = Some(i);
                    }
                } else if succ[j].map_or(true, |b: usize| word[b] > word[i]) {
                    succ[j] = Some(i);
                }
            }
        }
        let below_last = if k == 0 {
            Vec::new()
        } else {
            word.iter().map(|&v| v < word[k - 1]).collect()
        };
        PatternMatcher { word, pred, succ, below_last }
    }

    pub(crate) fn len(&self) -> usize {
        self.word.len()
    }

    /// Is the pattern contained anywhere in `host`?
    pub(crate) fn contained_in(&self, host: &[u8]) -> bool {
        if self.word.is_empty() {
            return true;
        }
        if self.word.len() > host.len() {
            return false;
        }
        let mut placed = vec![0usize; self.word.len()];
        self.search(host, 0, 0, &mut placed, false)
    }

    /// Is there an occurrence whose last entry is the last host entry?
    pub(crate) fn contained_with_last(&self, host: &[u8]) -> bool {
        if self.word.is_empty() || self.word.len() > host.len() {
            return false;
        }
        let mut placed = vec![0usize; self.word.len()];
        self.search(host, 0, 0, &mut placed, true)
    }

    fn window(&self, host: &[u8], placed: &[usize], j: usize) -> (u8, u8) {
        let lo = self.pred[j].map_or(0, |i| host[placed[i]]);
        let hi = self.succ[j].map_or(u8::MAX, |i| host[placed[i]]);
        (lo, hi)
    }

    fn search(
        &self,
        host: &[u8],
        j: usize,
        start: usize,
        placed: &mut [usize],
        anchored: bool,
    ) -> bool {
        let k = self.word.len();
        let n = host.len();
        if j == k {
            return true;
        }
        let (lo, hi) = self.window(host, placed, j);
        if anchored && j == k - 1 {
            let p = n - 1;
            if p < start {
                return false;
            }
            let v = host[p];
            placed[j] = p;
            return v > lo && v < hi;
        }
        // Leave room for the remaining pattern entries (and the anchor).
        let last = if anchored { n - 1 - (k - 1 - j) } else { n - (k - j) };
        let anchor_value = if anchored { host[n - 1] } else { 0 };
        for p in start..=last {
            let v = host[p];
            if v <= lo || v >= hi {
                continue;
            }
            if anchored {
                // The anchor's value is already known; respect its order
                // relation with this pattern entry.
                if self.below_last[j] {
                    if v >= anchor_value {
                        continue;
                    }
                } else if v <= anchor_value {
                    continue;
                }
            }
            placed[j] = p;
            if self.search(host, j + 1, p + 1, placed, anchored) {
                return true;
            }
        }
        false
    }

    /// Number of distinct occurrences in `host`.
    pub(crate) fn count_in(&self, host: &[u8]) -> u64 {
        if self.word.is_empty() {
            return 1;
        }
        if self.word.len() > host.len() {
            return 0;
        }
        let mut placed = vec![0usize; self.word.len()];
        self.count(host, 0, 0, &mut placed)
    }

    fn count(&self, host: &[u8], j: usize, start: usize, placed: &mut [usize]) -> u64 {
        let k = self.word.len();
        if j == k {
            return 1;
        }
        let (lo, hi) = self.window(host, placed, j);
        let mut total = 0;
        for p in start..=host.len() - (k - j) {
            let v = host[p];
            if v > lo && v < hi {
                placed[j] = p;
                total += self.count(host, j + 1, p + 1, placed);
            }
        }
        total
    }

    /// All occurrences as 0-based index lists, lexicographically ordered.
    pub(crate) fn embeddings_in(&self, host: &[u8]) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if self.word.is_empty() {
            out.push(Vec::new());
            return out;
        }
        if self.word.len() > host.len() {
            return out;
        }
        let mut placed = vec![0usize; self.word.len()];
        self.collect(host, 0, 0, &mut placed, &mut out);
        out
    }

    fn collect(
        &self,
        host: &[u8],
        j: usize,
        start: usize,
        placed: &mut [usize],
        out: &mut Vec<Vec<usize>>,
    ) {
        let k = self.word.len();
        if j == k {
            out.push(placed.to_vec());
            return;
        }
        let (lo, hi) = self.window(host, placed, j);
        for p in start..=host.len() - (k - j) {
            let v = host[p];
            if v > lo && v < hi {
                placed[j] = p;
                self.collect(host, j + 1, p + 1, placed, out);
            }
        }
    }
}

/// Iterates over all permutations of length `n` in lexicographic order.
pub fn all_permutations(n: usize) -> AllPermutations {
    assert!(n <= MAX_LEN, "length {n} exceeds the cap");
    AllPermutations {
        next: Some((1..=n as u8).collect()),
    }
}

/// Iterator returned by [`all_permutations`].
pub struct AllPermutations {
    next: Option<Vec<u8>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut follower = current.clone();
        if next_word(&mut follower) {
            self.next = Some(follower);
        }
        Some(Permutation { word: current })
    }
}

/// Advances `word` to its lexicographic successor in place; false once the
/// word is the final (decreasing) arrangement.
pub(crate) fn next_word(word: &mut [u8]) -> bool {
    if word.len() < 2 {
        return false;
    }
    let mut i = word.len() - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = word.len() - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}
