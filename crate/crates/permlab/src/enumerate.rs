//! Exhaustive enumeration of pattern-avoidance classes.
//!
//! For a set of patterns `B` (the *basis*), the class `Av(B)` consists of
//! every permutation avoiding all of `B`, and `s_n` counts its members of
//! length `n`. The engine exploits that these classes are closed under
//! taking patterns: deleting the last entry of an avoider leaves an
//! avoider, so every avoider of length `n + 1` arises by appending one new
//! entry to an avoider of length `n`. Enumeration therefore walks level by
//! level, extending each member of the current *frontier* in all `n + 1`
//! value slots — and a candidate needs testing only against occurrences
//! that use the appended point, since everything older was already
//! checked.
//!
//! Frontier members are packed into one `u64` each (a nibble per entry,
//! first entry in the top nibble, so integer order is lexicographic
//! order), which caps the engine at length 16 — generously beyond what
//! exhaustive enumeration can reach in practice. Segments spill to disk
//! past a configurable threshold. Extension work is chunked for worker
//! pools; chunk results are recombined in order, so counts and listings
//! are identical at every worker count.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::PathBuf;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::ser::SerializeSeq;
use serde::Serialize;

use crate::config::{EngineConfig, ENUM_MAX_LEN};
use crate::error::{Error, Result};
use crate::perm::{all_permutations, next_word, PatternMatcher, Permutation};

/// A set of forbidden patterns defining the class `Av(B)`.
///
/// Patterns are kept deduplicated in a canonical order (length, then
/// lexicographic), and the constructor records — never assumes — whether
/// the set is an antichain under containment. A redundant basis still
/// defines its class correctly; the flag is informational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Basis {
    patterns: Vec<Permutation>,
    antichain: bool,
}

impl Basis {
    /// Builds a basis from any collection of patterns, deduplicating.
    pub fn new<I: IntoIterator<Item = Permutation>>(patterns: I) -> Self {
        let mut patterns: Vec<Permutation> = patterns.into_iter().collect();
        patterns.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        patterns.dedup();
        let antichain = {
            let mut ok = true;
            'outer: for a in &patterns {
                for b in &patterns {
                    if a != b && b.contains(a) {
                        ok = false;
                        break 'outer;
                    }
                }
            }
            ok
        };
        Basis { patterns, antichain }
    }

    /// Parses `;`-separated pattern text, e.g. `"132"` or `"123;3,2,1"`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut patterns = Vec::new();
        for part in text.split(';') {
            patterns.push(part.parse::<Permutation>()?);
        }
        Ok(Basis::new(patterns))
    }

    /// The patterns in canonical order.
    pub fn patterns(&self) -> &[Permutation] {
        &self.patterns
    }

    /// Number of patterns.
    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    /// True when the basis has no patterns (so `Av(B)` is everything).
    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    /// Whether no pattern contains another (recorded at construction).
    pub fn is_antichain(&self) -> bool {
        self.antichain
    }

    /// Canonical text form: patterns in canonical order joined by `;`.
    /// This is the form used in cache files.
    pub fn canonical_text(&self) -> String {
        let parts: Vec<String> = self.patterns.iter().map(|p| p.to_string()).collect();
        parts.join(";")
    }

    /// The basis with a symmetry applied to every pattern.
    pub fn symmetry(&self, sym: crate::perm::Symmetry) -> Basis {
        Basis::new(self.patterns.iter().map(|p| p.symmetry(sym)))
    }

    fn contains_empty_pattern(&self) -> bool {
        self.patterns.iter().any(|p| p.is_empty())
    }

    fn matchers(&self) -> Vec<PatternMatcher> {
        self.patterns.iter().map(PatternMatcher::new).collect()
    }
}

impl Serialize for Basis {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.patterns.len()))?;
        for p in &self.patterns {
            seq.serialize_element(&p.to_string())?;
        }
        seq.end()
    }
}

/// The counting sequence `s_1, …, s_N` of a class, with exact terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountSequence {
    /// The basis the counts belong to.
    pub basis: Basis,
    /// `terms[i]` is `s_{i+1}`.
    pub terms: Vec<BigUint>,
}

impl CountSequence {
    /// The term `s_n` (1-based).
    ///
    /// # Panics
    /// If `n` is outside `1..=terms.len()`.
    pub fn term(&self, n: usize) -> &BigUint {
        &self.terms[n - 1]
    }

    /// Highest `n` covered.
    pub fn max_n(&self) -> usize {
        self.terms.len()
    }
}

// ---------------------------------------------------------------------------
// Packed frontier storage

fn encode(word: &[u8]) -> u64 {
    debug_assert!(word.len() <= ENUM_MAX_LEN);
    let mut code = 0u64;
    for (i, &v) in word.iter().enumerate() {
        code |= ((v - 1) as u64) << ((15 - i) * 4);
    }
    code
}

fn decode(code: u64, len: usize, out: &mut [u8]) {
    for (i, slot) in out.iter_mut().enumerate().take(len) {
        *slot = (((code >> ((15 - i) * 4)) & 0xF) as u8) + 1;
    }
}

enum Segment {
    Mem(Vec<u64>),
    Disk { path: PathBuf, count: usize },
}

/// One level of the avoider tree, materialized.
struct Frontier {
    segments: Vec<Segment>,
    total: usize,
    in_memory: usize,
    spill_threshold: usize,
    spill_dir: Option<tempfile::TempDir>,
}

impl Frontier {
    fn new(spill_threshold: usize) -> Frontier {
        Frontier {
            segments: Vec::new(),
            total: 0,
            in_memory: 0,
            spill_threshold,
            spill_dir: None,
        }
    }

    /// The root frontier holding only the empty permutation.
    fn root(spill_threshold: usize) -> Frontier {
        let mut f = Frontier::new(spill_threshold);
        f.push_segment(vec![0]).expect("in-memory push cannot fail");
        f
    }

    fn len(&self) -> usize {
        self.total
    }

    fn push_segment(&mut self, codes: Vec<u64>) -> Result<()> {
        if codes.is_empty() {
            return Ok(());
        }
        self.total += codes.len();
        if self.in_memory + codes.len() > self.spill_threshold {
            let dir = match &self.spill_dir {
                Some(d) => d,
                None => {
                    self.spill_dir = Some(tempfile::TempDir::with_prefix("permlab-frontier-")?);
                    self.spill_dir.as_ref().unwrap()
                }
            };
            let path = dir.path().join(format!("segment-{:06}.bin", self.segments.len()));
            let mut w = BufWriter::new(File::create(&path)?);
            for code in &codes {
                w.write_all(&code.to_le_bytes())?;
            }
            w.flush()?;
            self.segments.push(Segment::Disk { path, count: codes.len() });
        } else {
            self.in_memory += codes.len();
            self.segments.push(Segment::Mem(codes));
        }
        Ok(())
    }

    /// Streams segments in insertion order, loading spilled ones on demand.
    fn for_each_segment<F: FnMut(&[u64]) -> Result<()>>(&self, mut f: F) -> Result<()> {
        for seg in &self.segments {
            match seg {
                Segment::Mem(codes) => f(codes)?,
                Segment::Disk { path, count } => {
                    let mut r = BufReader::new(File::open(path)?);
                    let mut codes = Vec::with_capacity(*count);
                    let mut buf = [0u8; 8];
                    for _ in 0..*count {
                        r.read_exact(&mut buf)?;
                        codes.push(u64::from_le_bytes(buf));
                    }
                    f(&codes)?
                }
            }
        }
        Ok(())
    }

    fn all_codes(&self) -> Result<Vec<u64>> {
        let mut out = Vec::with_capacity(self.total);
        self.for_each_segment(|codes| {
            out.extend_from_slice(codes);
            Ok(())
        })?;
        Ok(out)
    }
}

// ---------------------------------------------------------------------------
// Level extension

struct LevelOutcome {
    next: Option<Frontier>,
    survivors: u64,
    nodes: u64,
}

/// Extends every parent by one point in every value slot, keeping the
/// children that stay in the class. `parent_len + 1` is the child length.
fn extend_level(
    parents: &Frontier,
    parent_len: usize,
    matchers: &[PatternMatcher],
    cfg: &EngineConfig,
    store: bool,
) -> Result<LevelOutcome> {
    let child_len = parent_len + 1;
    let mut next = if store { Some(Frontier::new(cfg.spill_threshold)) } else { None };
    let mut survivors = 0u64;
    let mut nodes = 0u64;

    parents.for_each_segment(|codes| {
        // Each chunk produces its survivors independently; stitching the
        // results back in chunk order keeps the output identical at any
        // worker count.
        let results: Vec<(Vec<u64>, u64)> = codes
            .par_chunks(cfg.chunk_size.max(1))
            .map(|chunk| {
                let mut kept = Vec::new();
                let mut count = 0u64;
                let mut parent = [0u8; ENUM_MAX_LEN];
                let mut child = [0u8; ENUM_MAX_LEN];
                for &code in chunk {
                    decode(code, parent_len, &mut parent);
                    for v in 1..=child_len as u8 {
                        for i in 0..parent_len {
                            let w = parent[i];
                            child[i] = if w >= v { w + 1 } else { w };
                        }
                        child[parent_len] = v;
                        let slice = &child[..child_len];
                        if !matchers.iter().any(|m| m.contained_with_last(slice)) {
                            count += 1;
                            if store {
                                kept.push(encode(slice));
                            }
                        }
                    }
                }
                (kept, count)
            })
            .collect();

        for (kept, count) in results {
            survivors += count;
            if let Some(next) = next.as_mut() {
                next.push_segment(kept)?;
            }
        }
        nodes += codes.len() as u64 * child_len as u64;
        Ok(())
    })?;

    Ok(LevelOutcome { next, survivors, nodes })
}

/// Runs the frontier engine up to `max_n`, invoking `on_level` with each
/// level's frontier (only materialized when `keep_last` or the level is
/// interior).
fn run_levels(
    basis: &Basis,
    max_n: usize,
    cfg: &EngineConfig,
    keep_last: bool,
) -> Result<(Vec<u64>, Option<Frontier>)> {
    if max_n > ENUM_MAX_LEN {
        return Err(Error::LengthCap { len: max_n, max: ENUM_MAX_LEN });
    }
    let matchers = basis.matchers();
    let mut terms: Vec<u64> = Vec::with_capacity(max_n);
    let mut frontier = Frontier::root(cfg.spill_threshold);
    let mut nodes_used = 0u64;
    let mut last = None;

    for n in 1..=max_n {
        if frontier.len() == 0 {
            // Closed class: once a level is empty every later level is too.
            terms.extend(std::iter::repeat(0).take(max_n - n + 1));
            if keep_last {
                last = Some(Frontier::new(cfg.spill_threshold));
            }
            return Ok((terms, last));
        }
        let store = n < max_n || keep_last;
        let outcome = extend_level(&frontier, n - 1, &matchers, cfg, store)?;
        nodes_used += outcome.nodes;
        if nodes_used > cfg.enum_node_limit {
            return Err(Error::BudgetExceeded {
                what: "class enumeration node",
                limit: cfg.enum_node_limit,
            });
        }
        terms.push(outcome.survivors);
        match outcome.next {
            Some(next) => frontier = next,
            None => break, // final level, counting only
        }
    }
    if keep_last {
        last = Some(frontier);
    }
    Ok((terms, last))
}

// ---------------------------------------------------------------------------
// Public operations

/// Counts `Av(B)` members of each length `1..=max_n`.
///
/// The empty basis is allowed and yields the factorials; a basis holding
/// the empty pattern yields zeros, since everything contains it.
pub fn count_avoiders(basis: &Basis, max_n: usize, cfg: &EngineConfig) -> Result<CountSequence> {
    if max_n == 0 {
        return Err(Error::InvalidArgument("max_n must be at least 1".to_string()));
    }
    if basis.is_empty() {
        let mut terms = Vec::with_capacity(max_n);
        let mut acc = BigUint::from(1u32);
        for n in 1..=max_n {
            acc *= BigUint::from(n);
            terms.push(acc.clone());
        }
        return Ok(CountSequence { basis: basis.clone(), terms });
    }
    if basis.contains_empty_pattern() {
        return Ok(CountSequence {
            basis: basis.clone(),
            terms: vec![BigUint::from(0u32); max_n],
        });
    }
    let (terms, _) = run_levels(basis, max_n, cfg, false)?;
    Ok(CountSequence {
        basis: basis.clone(),
        terms: terms.into_iter().map(BigUint::from).collect(),
    })
}

/// Lists the length-`n` members of `Av(B)` in lexicographic order.
pub fn list_avoiders(basis: &Basis, n: usize, cfg: &EngineConfig) -> Result<Vec<Permutation>> {
    if basis.contains_empty_pattern() {
        return Ok(Vec::new());
    }
    if n == 0 {
        return Ok(vec![Permutation::empty()]);
    }
    if basis.is_empty() && n > ENUM_MAX_LEN {
        return Err(Error::LengthCap { len: n, max: ENUM_MAX_LEN });
    }
    let (_, frontier) = run_levels(basis, n, cfg, true)?;
    let mut codes = frontier.expect("keep_last requested").all_codes()?;
    codes.sort_unstable();
    let mut out = Vec::with_capacity(codes.len());
    let mut word = [0u8; ENUM_MAX_LEN];
    for code in codes {
        decode(code, n, &mut word);
        out.push(Permutation::from_vec_unchecked(word[..n].to_vec()));
    }
    Ok(out)
}

/// Counts permutations of length `n` with exactly `r_i` occurrences of
/// `p_i` for every `(p_i, r_i)` constraint, by exhaustive scan of `S_n`.
/// Avoidance is the `r = 0` case.
pub fn count_with_occurrences(
    n: usize,
    constraints: &[(Permutation, u64)],
    cfg: &EngineConfig,
) -> Result<BigUint> {
    if n > cfg.brute_max_n {
        return Err(Error::BudgetExceeded {
            what: "exhaustive S_n scan",
            limit: cfg.brute_max_n as u64,
        });
    }
    let matchers: Vec<(PatternMatcher, u64)> = constraints
        .iter()
        .map(|(p, r)| (PatternMatcher::new(p), *r))
        .collect();
    if n == 0 {
        let empty_ok = matchers
            .iter()
            .all(|(m, r)| (if m.len() == 0 { 1 } else { 0 }) == *r);
        return Ok(BigUint::from(u32::from(empty_ok)));
    }
    // Scan in parallel over the first entry; each branch walks its
    // completions in lexicographic order without allocating per word.
    let total: u64 = (1..=n as u8)
        .into_par_iter()
        .map(|first| {
            let mut word = Vec::with_capacity(n);
            word.push(first);
            word.extend((1..=n as u8).filter(|&v| v != first));
            let mut count = 0u64;
            loop {
                if matchers.iter().all(|(m, r)| m.count_in(&word) == *r) {
                    count += 1;
                }
                if !next_word(&mut word[1..]) {
                    break;
                }
            }
            count
        })
        .sum();
    Ok(BigUint::from(total))
}

/// A group of patterns sharing every count `s_1..=s_N`.
#[derive(Debug, Clone)]
pub struct WilfClass {
    /// Members, canonically ordered.
    pub patterns: Vec<Permutation>,
    /// The shared counting sequence.
    pub terms: Vec<BigUint>,
}

/// The partition produced by [`wilf_classes`]. Equality of counting
/// sequences is only established *up to* `max_n`; classes that agree this
/// far may well separate later.
#[derive(Debug, Clone)]
pub struct WilfClasses {
    /// The horizon the classification used.
    pub max_n: usize,
    /// Classes ordered by their canonically smallest member.
    pub classes: Vec<WilfClass>,
}

/// Groups `patterns` by equality of their counting sequences up to
/// `max_n`, each pattern taken as a singleton basis.
pub fn wilf_classes(
    patterns: &[Permutation],
    max_n: usize,
    cfg: &EngineConfig,
) -> Result<WilfClasses> {
    if max_n == 0 {
        return Err(Error::InvalidArgument("max_n must be at least 1".to_string()));
    }
    let mut unique: Vec<Permutation> = patterns.to_vec();
    unique.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    unique.dedup();

    let mut groups: BTreeMap<Vec<BigUint>, Vec<Permutation>> = BTreeMap::new();
    for pattern in unique {
        let basis = Basis::new([pattern.clone()]);
        let seq = count_avoiders(&basis, max_n, cfg)?;
        groups.entry(seq.terms).or_default().push(pattern);
    }
    let mut classes: Vec<WilfClass> = groups
        .into_iter()
        .map(|(terms, patterns)| WilfClass { patterns, terms })
        .collect();
    classes.sort_by(|a, b| {
        let ka = (&a.patterns[0]).len();
        let kb = (&b.patterns[0]).len();
        (ka, &a.patterns[0]).cmp(&(kb, &b.patterns[0]))
    });
    Ok(WilfClasses { max_n, classes })
}

/// Brute-force membership count for cross-checks: filters all of `S_n`
/// through full containment tests, sharing no code with the frontier
/// engine's anchored test path.
pub fn brute_force_count(basis: &Basis, n: usize) -> u64 {
    all_permutations(n)
        .filter(|p| p.avoids_all(basis.patterns()))
        .count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Symmetry;

    fn cfg() -> EngineConfig {
        EngineConfig::default()
    }

    fn basis(text: &str) -> Basis {
        Basis::parse(text).unwrap()
    }

    fn terms_u64(seq: &CountSequence) -> Vec<u64> {
        seq.terms.iter().map(|t| u64::try_from(t).unwrap()).collect()
    }

    #[test]
    fn basis_canonicalizes_and_flags_antichains() {
        let b = basis("321;132;321");
        assert_eq!(b.len(), 2);
        assert_eq!(b.canonical_text(), "1,3,2;3,2,1");
        assert!(b.is_antichain());
        // 12 is inside 132, so this set is not an antichain.
        assert!(!basis("132;12").is_antichain());
        assert!(Basis::new([]).is_empty());
    }

    #[test]
    fn catalan_class_counts() {
        let seq = count_avoiders(&basis("132"), 5, &cfg()).unwrap();
        assert_eq!(terms_u64(&seq), vec![1, 2, 5, 14, 42]);
        // All of S_3 yields the same numbers — one Wilf class.
        let seq = count_avoiders(&basis("123"), 8, &cfg()).unwrap();
        assert_eq!(terms_u64(&seq), vec![1, 2, 5, 14, 42, 132, 429, 1430]);
    }

    #[test]
    fn single_point_basis_empties_everything() {
        let seq = count_avoiders(&basis("1"), 3, &cfg()).unwrap();
        assert_eq!(terms_u64(&seq), vec![0, 0, 0]);
    }

    #[test]
    fn empty_basis_counts_factorials() {
        let seq = count_avoiders(&Basis::new([]), 6, &cfg()).unwrap();
        assert_eq!(terms_u64(&seq), vec![1, 2, 6, 24, 120, 720]);
    }

    #[test]
    fn empty_pattern_in_basis_yields_zeros() {
        let b = Basis::new([Permutation::empty(), "21".parse().unwrap()]);
        let seq = count_avoiders(&b, 4, &cfg()).unwrap();
        assert_eq!(terms_u64(&seq), vec![0, 0, 0, 0]);
        assert_eq!(list_avoiders(&b, 3, &cfg()).unwrap(), Vec::<Permutation>::new());
    }

    #[test]
    fn av_1324_reaches_its_known_eighth_term() {
        let seq = count_avoiders(&basis("1324"), 8, &cfg()).unwrap();
        assert_eq!(
            terms_u64(&seq),
            vec![1, 2, 6, 23, 103, 513, 2762, 15793]
        );
    }

    #[test]
    fn listing_matches_small_hand_results() {
        let listed = list_avoiders(&basis("12"), 3, &cfg()).unwrap();
        assert_eq!(listed, vec!["321".parse().unwrap()]);
        // Erdős–Szekeres: length 5 forces a monotone triple.
        assert_eq!(list_avoiders(&basis("123;321"), 5, &cfg()).unwrap(), vec![]);
        let s3: Vec<String> = list_avoiders(&basis("321"), 3, &cfg())
            .unwrap()
            .iter()
            .map(|p| p.compact())
            .collect();
        assert_eq!(s3, vec!["123", "132", "213", "231", "312"]);
    }

    #[test]
    fn listing_agrees_with_brute_filter() {
        for b in [basis("132"), basis("123;321"), basis("2143"), basis("12;21")] {
            for n in 0..=6 {
                let listed = list_avoiders(&b, n, &cfg()).unwrap();
                let filtered: Vec<Permutation> = all_permutations(n)
                    .filter(|p| p.avoids_all(b.patterns()))
                    .collect();
                assert_eq!(listed, filtered, "basis {b:?}, n = {n}");
            }
        }
    }

    #[test]
    fn joint_basis_counts_match_brute_filter() {
        let b = basis("53241;43251");
        let seq = count_avoiders(&b, 6, &cfg()).unwrap();
        for n in 1..=6 {
            assert_eq!(
                u64::try_from(seq.term(n)).unwrap(),
                brute_force_count(&b, n),
                "joint basis disagrees at n = {n}"
            );
        }
    }

    #[test]
    fn listings_stay_closed_under_deletion() {
        for b in [basis("321"), basis("1324")] {
            let down: std::collections::HashSet<Permutation> =
                list_avoiders(&b, 5, &cfg()).unwrap().into_iter().collect();
            for perm in list_avoiders(&b, 6, &cfg()).unwrap() {
                for pos in 1..=6 {
                    assert!(
                        down.contains(&perm.delete(pos)),
                        "deletion of {perm:?} at {pos} left the class"
                    );
                }
            }
        }
    }

    #[test]
    fn counts_respect_symmetries() {
        // Reversal, complement and inverse each preserve every counting
        // sequence; checked for all patterns of length ≤ 4.
        let cfg = cfg();
        for k in 1..=4usize {
            for pattern in all_permutations(k) {
                let base = count_avoiders(&Basis::new([pattern.clone()]), 8, &cfg).unwrap();
                for sym in Symmetry::ALL {
                    let mapped =
                        count_avoiders(&Basis::new([pattern.symmetry(sym)]), 8, &cfg).unwrap();
                    assert_eq!(
                        base.terms, mapped.terms,
                        "symmetry {sym:?} changed counts for {pattern:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn adding_patterns_never_grows_the_class() {
        let larger = count_avoiders(&basis("132"), 7, &cfg()).unwrap();
        let smaller = count_avoiders(&basis("132;3214"), 7, &cfg()).unwrap();
        for n in 1..=7 {
            assert!(smaller.term(n) <= larger.term(n));
        }
    }

    #[test]
    fn node_budget_is_a_distinct_error() {
        let tight = EngineConfig { enum_node_limit: 10, ..cfg() };
        match count_avoiders(&basis("132"), 8, &tight) {
            Err(e) if e.is_budget() => {}
            other => panic!("expected budget error, got {other:?}"),
        }
        // Invalid input is not a budget problem.
        match count_avoiders(&basis("132"), 0, &cfg()) {
            Err(e) => assert!(!e.is_budget()),
            other => panic!("expected invalid-input error, got {other:?}"),
        }
    }

    #[test]
    fn spilling_to_disk_changes_nothing() {
        let spilly = EngineConfig { spill_threshold: 8, chunk_size: 3, ..cfg() };
        let a = count_avoiders(&basis("132"), 8, &spilly).unwrap();
        let b = count_avoiders(&basis("132"), 8, &cfg()).unwrap();
        assert_eq!(a.terms, b.terms);
        let la = list_avoiders(&basis("321"), 6, &spilly).unwrap();
        let lb = list_avoiders(&basis("321"), 6, &cfg()).unwrap();
        assert_eq!(la, lb);
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let run = |threads: usize| {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap();
            pool.install(|| {
                (
                    count_avoiders(&basis("1324"), 7, &cfg()).unwrap().terms,
                    list_avoiders(&basis("1342"), 6, &cfg()).unwrap(),
                )
            })
        };
        assert_eq!(run(1), run(4));
    }

    #[test]
    fn occurrence_constrained_counts() {
        let c = cfg();
        let p = |s: &str| s.parse::<Permutation>().unwrap();
        let one = |v: BigUint| u64::try_from(&v).unwrap();
        assert_eq!(one(count_with_occurrences(3, &[(p("321"), 1)], &c).unwrap()), 1);
        assert_eq!(one(count_with_occurrences(4, &[(p("123"), 0)], &c).unwrap()), 14);
        // Only the identity realizes all six pairs as ascents.
        assert_eq!(one(count_with_occurrences(4, &[(p("12"), 6)], &c).unwrap()), 1);
        // Two constraints at once.
        assert_eq!(
            one(count_with_occurrences(3, &[(p("12"), 3), (p("21"), 0)], &c).unwrap()),
            1
        );
    }

    #[test]
    fn zero_occurrences_is_avoidance() {
        let c = cfg();
        let pattern: Permutation = "132".parse().unwrap();
        let seq = count_avoiders(&Basis::new([pattern.clone()]), 6, &c).unwrap();
        for n in 1..=6 {
            let via_occ = count_with_occurrences(n, &[(pattern.clone(), 0)], &c).unwrap();
            assert_eq!(&via_occ, seq.term(n));
        }
    }

    #[test]
    fn occurrence_scan_respects_budget() {
        match count_with_occurrences(11, &[("12".parse().unwrap(), 0)], &cfg()) {
            Err(e) if e.is_budget() => {}
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn wilf_partition_of_small_symmetric_groups() {
        let c = cfg();
        let s3: Vec<Permutation> = all_permutations(3).collect();
        let classes = wilf_classes(&s3, 8, &c).unwrap();
        assert_eq!(classes.classes.len(), 1);
        assert_eq!(classes.classes[0].patterns.len(), 6);

        let pair: Vec<Permutation> = vec!["12".parse().unwrap(), "21".parse().unwrap()];
        assert_eq!(wilf_classes(&pair, 6, &c).unwrap().classes.len(), 1);

        let s4: Vec<Permutation> = all_permutations(4).collect();
        let classes = wilf_classes(&s4, 7, &c).unwrap();
        assert_eq!(classes.classes.len(), 3);
        let sizes: Vec<usize> = classes.classes.iter().map(|c| c.patterns.len()).collect();
        let mut sorted = sizes.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![2, 10, 12]);
        // 1324 sits in the smallest class, 1342 in the middle one, 1234 in
        // the largest.
        for class in &classes.classes {
            let members: Vec<String> = class.patterns.iter().map(|p| p.compact()).collect();
            match class.patterns.len() {
                2 => assert!(members.contains(&"1324".to_string())),
                10 => assert!(members.contains(&"1342".to_string())),
                12 => assert!(members.contains(&"1234".to_string())),
                other => panic!("unexpected class size {other}"),
            }
        }
    }
}
