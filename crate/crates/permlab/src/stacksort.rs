//! Stack sorting: the greedy one-pass map and exhaustive machine searches.
//!
//! The one-pass map `s` runs a permutation through a single stack with a
//! greedy rule: push the next input entry if it is smaller than every
//! stack entry, otherwise pop until it is, and flush the stack at the
//! end. A permutation is *`t`-pass sortable* when `t` applications of `s`
//! reach the identity (West's notion).
//!
//! Separately, `t` stacks wired *in series* give a nondeterministic
//! machine: at each step one may move the next input entry onto stack 1,
//! the top of stack `i` onto stack `i + 1`, or the top of stack `t` to
//! the output. A permutation is sortable on that machine when some move
//! sequence outputs the identity; [`general_sortable`] decides this by
//! exhaustive search and returns a machine-checkable witness. The two
//! notions differ — one-pass greedy sorting is optimal for a single
//! stack, but for `t ≥ 2` the machine may sort permutations the iterated
//! greedy map does not.

use std::collections::HashSet;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::config::EngineConfig;
use crate::error::{Error, Result};
use crate::perm::{next_word, Permutation};

// ---------------------------------------------------------------------------
// The greedy one-pass map and West sortability

/// Applies the greedy rule to `word`, writing the output into `out`
/// (cleared first) and using `stack` as scratch.
fn sort_into(word: &[u8], stack: &mut Vec<u8>, out: &mut Vec<u8>) {
    stack.clear();
    out.clear();
    for &v in word {
        // The stack top is always its minimum, so one comparison decides.
        while let Some(&top) = stack.last() {
            if v > top {
                out.push(stack.pop().unwrap());
            } else {
                break;
            }
        }
        stack.push(v);
    }
    while let Some(top) = stack.pop() {
        out.push(top);
    }
}

/// One pass of greedy stack sorting.
pub fn greedy_stack_sort(perm: &Permutation) -> Permutation {
    let mut stack = Vec::with_capacity(perm.len());
    let mut out = Vec::with_capacity(perm.len());
    sort_into(perm.word(), &mut stack, &mut out);
    Permutation::from_vec_unchecked(out)
}

fn is_identity_word(word: &[u8]) -> bool {
    word.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
}

/// Does `t` applications of the greedy map sort `perm`?
///
/// # Panics
/// If `t` is zero.
pub fn west_sortable(perm: &Permutation, t: usize) -> bool {
    assert!(t >= 1, "at least one pass is required");
    let mut current = perm.word().to_vec();
    let mut stack = Vec::with_capacity(current.len());
    let mut next = Vec::with_capacity(current.len());
    for _ in 0..t {
        if is_identity_word(&current) {
            return true;
        }
        sort_into(&current, &mut stack, &mut next);
        std::mem::swap(&mut current, &mut next);
    }
    is_identity_word(&current)
}

/// Counts the `t`-pass sortable members of `S_n` by running every
/// permutation through the greedy map — no closed form is trusted.
pub fn count_west_sortable(n: usize, t: usize, cfg: &EngineConfig) -> Result<BigUint> {
    if t == 0 {
        return Err(Error::InvalidArgument("at least one pass is required".to_string()));
    }
    let limit = if t == 1 { cfg.brute_max_n_single_pass } else { cfg.brute_max_n };
    if n > limit {
        return Err(Error::BudgetExceeded {
            what: "exhaustive S_n scan",
            limit: limit as u64,
        });
    }
    if n == 0 {
        return Ok(BigUint::from(1u32));
    }
    // One branch per first entry; each walks its completions in place.
    let total: u64 = (1..=n as u8)
        .into_par_iter()
        .map(|first| {
            let mut word = Vec::with_capacity(n);
            word.push(first);
            word.extend((1..=n as u8).filter(|&v| v != first));
            let mut stack = Vec::with_capacity(n);
            let mut buf_a = Vec::with_capacity(n);
            let mut buf_b = Vec::with_capacity(n);
            let mut count = 0u64;
            loop {
                buf_a.clear();
                buf_a.extend_from_slice(&word);
                let mut sorted = is_identity_word(&buf_a);
                for _ in 0..t {
                    if sorted {
                        break;
                    }
                    sort_into(&buf_a, &mut stack, &mut buf_b);
                    std::mem::swap(&mut buf_a, &mut buf_b);
                    sorted = is_identity_word(&buf_a);
                }
                if sorted {
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

// ---------------------------------------------------------------------------
// Parity rules

/// Conjectured parity of the one-pass count: odd exactly when `n + 1` is
/// a power of two.
pub fn predicted_parity_one_pass(n: u64) -> bool {
    (n + 1).is_power_of_two()
}

/// Conjectured parity of the two-pass count: odd exactly when the binary
/// expansion of `n` has no two adjacent ones and ends in one.
pub fn predicted_parity_two_pass(n: u64) -> bool {
    n & 1 == 1 && n & (n >> 1) == 0
}

/// One row of a [`parity_report`].
#[derive(Debug, Clone)]
pub struct ParityRow {
    /// Length scanned.
    pub n: usize,
    /// Exact count of `t`-pass sortable permutations.
    pub count: BigUint,
    /// Its parity.
    pub odd: bool,
    /// The rule's prediction, where a rule exists (`t ≤ 2`).
    pub predicted_odd: Option<bool>,
}

impl ParityRow {
    /// Whether computation and prediction agree (`None` without a rule).
    pub fn matches(&self) -> Option<bool> {
        self.predicted_odd.map(|p| p == self.odd)
    }
}

/// Computed parities of `t`-pass sortable counts for `n = 1..=max_n`,
/// against the conjectured rules where one exists.
pub fn parity_report(t: usize, max_n: usize, cfg: &EngineConfig) -> Result<Vec<ParityRow>> {
    let mut rows = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        let count = count_west_sortable(n, t, cfg)?;
        let odd = count.bit(0);
        let predicted_odd = match t {
            1 => Some(predicted_parity_one_pass(n as u64)),
            2 => Some(predicted_parity_two_pass(n as u64)),
            _ => None,
        };
        rows.push(ParityRow { n, count, odd, predicted_odd });
    }
    Ok(rows)
}

/// The count behind the two-pass parity rule, with its Fibonacci
/// comparison point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FibonacciParityCount {
    /// Exponent: numbers up to `2^m` were scanned.
    pub m: u32,
    /// How many `n ≤ 2^m` have binary expansions with no two adjacent
    /// ones that end in one.
    pub count: u64,
    /// The `m`-th Fibonacci number (`F_1 = F_2 = 1`).
    pub fibonacci: u64,
}

/// Counts `n` in `1..=2^m` whose binary expansion has no two adjacent
/// ones and ends in one, alongside `F_m`.
pub fn fibonacci_parity_count(m: u32) -> Result<FibonacciParityCount> {
    if m == 0 || m > 20 {
        return Err(Error::InvalidArgument(format!(
            "m must be between 1 and 20, got {m}"
        )));
    }
    let count = (1u64..=1 << m)
        .filter(|&n| n & 1 == 1 && n & (n >> 1) == 0)
        .count() as u64;
    let mut fib = (1u64, 1u64);
    for _ in 2..m {
        fib = (fib.1, fib.0 + fib.1);
    }
    Ok(FibonacciParityCount { m, count, fibonacci: fib.1 })
}

// ---------------------------------------------------------------------------
// Serial stack machines

/// One machine step. `Move(0)` takes the next input entry onto stack 1,
/// `Move(i)` for `1 ≤ i < t` pops stack `i` onto stack `i + 1`, and
/// `Move(t)` pops stack `t` to the output. Rendered as the letters
/// `a, b, c, …` in that order, a witness is a codeword on `t + 1`
/// letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Move(pub u8);

impl Move {
    /// The letter form used in printed witnesses.
    pub fn letter(self) -> char {
        (b'a' + self.0) as char
    }
}

/// Renders a move sequence as its codeword.
pub fn witness_string(moves: &[Move]) -> String {
    moves.iter().map(|m| m.letter()).collect()
}

/// An explicit machine of `t` stacks in series, for stepping through
/// move sequences and checking witnesses.
#[derive(Debug, Clone)]
pub struct StackMachine {
    input: Vec<u8>,
    pos: usize,
    stacks: Vec<Vec<u8>>,
    output: Vec<u8>,
}

impl StackMachine {
    /// A machine loaded with `perm`, all stacks empty.
    ///
    /// # Panics
    /// If `t` is zero.
    pub fn new(perm: &Permutation, t: usize) -> StackMachine {
        assert!(t >= 1, "at least one stack is required");
        StackMachine {
            input: perm.word().to_vec(),
            pos: 0,
            stacks: vec![Vec::new(); t],
            output: Vec::with_capacity(perm.len()),
        }
    }

    /// Number of stacks.
    pub fn stack_count(&self) -> usize {
        self.stacks.len()
    }

    /// Applies one move, rejecting moves whose source is empty.
    pub fn apply(&mut self, mv: Move) -> Result<()> {
        let t = self.stacks.len();
        let idx = mv.0 as usize;
        if idx > t {
            return Err(Error::InvalidArgument(format!(
                "move {idx} does not exist on a {t}-stack machine"
            )));
        }
        if idx == 0 {
            if self.pos >= self.input.len() {
                return Err(Error::InvalidArgument("input is exhausted".to_string()));
            }
            self.stacks[0].push(self.input[self.pos]);
            self.pos += 1;
        } else {
            let v = self.stacks[idx - 1].pop().ok_or_else(|| {
                Error::InvalidArgument(format!("stack {idx} is empty"))
            })?;
            if idx == t {
                self.output.push(v);
            } else {
                self.stacks[idx].push(v);
            }
        }
        debug_assert!(self.conserves_entries());
        Ok(())
    }

    /// The output emitted so far.
    pub fn output(&self) -> Vec<u64> {
        self.output.iter().map(|&v| v as u64).collect()
    }

    /// Finished with the identity: input consumed, stacks empty, output
    /// sorted.
    pub fn sorted_completely(&self) -> bool {
        self.pos == self.input.len()
            && self.stacks.iter().all(|s| s.is_empty())
            && is_identity_word(&self.output)
    }

    /// Every entry is in exactly one place: unread input, some stack, or
    /// the output.
    fn conserves_entries(&self) -> bool {
        let mut seen = vec![false; self.input.len() + 1];
        let mut mark = |v: u8| {
            if seen[v as usize] {
                return false;
            }
            seen[v as usize] = true;
            true
        };
        for &v in &self.input[self.pos..] {
            if !mark(v) {
                return false;
            }
        }
        for stack in &self.stacks {
            for &v in stack {
                if !mark(v) {
                    return false;
                }
            }
        }
        for &v in &self.output {
            if !mark(v) {
                return false;
            }
        }
        seen[1..].iter().all(|&s| s)
    }
}

/// Runs `moves` on a fresh `t`-stack machine loaded with `perm` and
/// reports whether they sort it completely.
pub fn witness_sorts(perm: &Permutation, t: usize, moves: &[Move]) -> bool {
    let mut machine = StackMachine::new(perm, t);
    for &mv in moves {
        if machine.apply(mv).is_err() {
            return false;
        }
    }
    machine.sorted_completely()
}

/// Outcome of an exhaustive sortability search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sortability {
    /// Sortable, with a move sequence that proves it.
    Sortable(Vec<Move>),
    /// The whole search space is exhausted: no move sequence works.
    Unsortable,
}

struct MachineSearch<'a> {
    t: usize,
    word: &'a [u8],
    stacks: Vec<Vec<u8>>,
    emitted: usize,
    pos: usize,
    /// States known to admit no completion.
    dead: HashSet<Box<[u8]>>,
    nodes: u64,
    cap: u64,
    forced_emit: bool,
    moves: Vec<Move>,
}

impl<'a> MachineSearch<'a> {
    fn key(&self) -> Box<[u8]> {
        // Stack contents separated by zeros, then the input position; the
        // output is implied (always the identity prefix of length
        // `emitted`).
        let mut key = Vec::with_capacity(self.word.len() + self.t + 1);
        for stack in &self.stacks {
            key.extend_from_slice(stack);
            key.push(0);
        }
        key.push(self.pos as u8);
        key.into_boxed_slice()
    }

    fn run(&mut self) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(Error::BudgetExceeded { what: "stack-machine search node", limit: self.cap });
        }
        if self.emitted == self.word.len() {
            return Ok(true);
        }
        // Emitting the next wanted value is always safe: burying it can
        // never be undone in identity order, and no other move interacts
        // with the last stack's top.
        let next_needed = (self.emitted + 1) as u8;
        let emittable = self.stacks[self.t - 1].last() == Some(&next_needed);
        if emittable && self.forced_emit {
            return self.descend(Move(self.t as u8));
        }
        let memoize = !self.dead.contains(&self.key());
        if !memoize {
            return Ok(false);
        }
        if self.pos < self.word.len() && self.descend(Move(0))? {
            return Ok(true);
        }
        for i in 1..self.t {
            if !self.stacks[i - 1].is_empty() && self.descend(Move(i as u8))? {
                return Ok(true);
            }
        }
        if emittable && self.descend(Move(self.t as u8))? {
            return Ok(true);
        }
        self.dead.insert(self.key());
        Ok(false)
    }

    fn descend(&mut self, mv: Move) -> Result<bool> {
        let idx = mv.0 as usize;
        if idx == 0 {
            self.stacks[0].push(self.word[self.pos]);
            self.pos += 1;
        } else if idx == self.t {
            let v = self.stacks[self.t - 1].pop().unwrap();
            debug_assert_eq!(v as usize, self.emitted + 1);
            self.emitted += 1;
        } else {
            let v = self.stacks[idx - 1].pop().unwrap();
            self.stacks[idx].push(v);
        }
        self.moves.push(mv);

        let found = self.run()?;

        if !found {
            self.moves.pop();
            if idx == 0 {
                self.pos -= 1;
                self.stacks[0].pop();
            } else if idx == self.t {
                self.emitted -= 1;
                self.stacks[self.t - 1].push((self.emitted + 1) as u8);
            } else {
                let v = self.stacks[idx].pop().unwrap();
                self.stacks[idx - 1].push(v);
            }
        }
        Ok(found)
    }
}

fn search_sortable(
    perm: &Permutation,
    t: usize,
    cfg: &EngineConfig,
    forced_emit: bool,
) -> Result<Sortability> {
    if t == 0 {
        return Err(Error::InvalidArgument("at least one stack is required".to_string()));
    }
    let mut search = MachineSearch {
        t,
        word: perm.word(),
        stacks: vec![Vec::new(); t],
        emitted: 0,
        pos: 0,
        dead: HashSet::new(),
        nodes: 0,
        cap: cfg.search_node_cap,
        forced_emit,
        moves: Vec::new(),
    };
    if search.run()? {
        let moves = search.moves;
        debug_assert!(witness_sorts(perm, t, &moves));
        Ok(Sortability::Sortable(moves))
    } else {
        Ok(Sortability::Unsortable)
    }
}

/// Can *any* move sequence of the `t`-stack series machine sort `perm`?
///
/// Budget exhaustion is an error, never an `Unsortable` verdict.
pub fn general_sortable(perm: &Permutation, t: usize, cfg: &EngineConfig) -> Result<Sortability> {
    search_sortable(perm, t, cfg, true)
}

/// Outcome of scanning lengths `1..=max_len` for machine-unsortable
/// permutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShortestUnsortable {
    /// The least length with unsortable permutations, all of them listed
    /// in lexicographic order.
    Found {
        /// That least length.
        len: usize,
        /// Every unsortable permutation of that length.
        perms: Vec<Permutation>,
    },
    /// Everything up to the scanned bound is sortable.
    NoneUpTo(usize),
}

/// Finds the shortest permutations a `t`-stack series machine cannot
/// sort, scanning lengths in order up to `max_len`.
pub fn shortest_unsortable(
    t: usize,
    max_len: usize,
    cfg: &EngineConfig,
) -> Result<ShortestUnsortable> {
    for n in 1..=max_len {
        let all: Vec<Permutation> = crate::perm::all_permutations(n).collect();
        let verdicts: std::result::Result<Vec<Option<Permutation>>, Error> = all
            .into_par_iter()
            .map(|perm| {
                Ok(match search_sortable(&perm, t, cfg, true)? {
                    Sortability::Sortable(_) => None,
                    Sortability::Unsortable => Some(perm),
                })
            })
            .collect();
        let unsortable: Vec<Permutation> = match verdicts {
            Ok(v) => v.into_iter().flatten().collect(),
            Err(e) if e.is_budget() => {
                return Err(Error::BudgetExceededMidScan { last_complete: n - 1 })
            }
            Err(e) => return Err(e),
        };
        if !unsortable.is_empty() {
            return Ok(ShortestUnsortable::Found { len: n, perms: unsortable });
        }
    }
    Ok(ShortestUnsortable::NoneUpTo(max_len))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn cfg() -> EngineConfig {
        EngineConfig::default()
    }

    fn count(n: usize, t: usize) -> u64 {
        u64::try_from(&count_west_sortable(n, t, &cfg()).unwrap()).unwrap()
    }

    #[test]
    fn greedy_map_examples() {
        assert_eq!(greedy_stack_sort(&p("231")), p("213"));
        assert_eq!(greedy_stack_sort(&p("213")), p("123"));
        assert_eq!(greedy_stack_sort(&p("321")), p("123"));
        assert_eq!(greedy_stack_sort(&p("1234")), p("1234"));
        assert_eq!(greedy_stack_sort(&Permutation::empty()), Permutation::empty());
        // Trace: push 5, push 3; 4 pops 3; push 4, push 1; 6 pops 1, 4,
        // 5; push 6, push 2; flush 2, 6.
        assert_eq!(greedy_stack_sort(&p("534162")), p("314526"));
    }

    #[test]
    fn west_sortability_examples() {
        assert!(west_sortable(&p("231"), 2));
        assert!(!west_sortable(&p("231"), 1));
        assert!(west_sortable(&p("312"), 1));
        assert!(west_sortable(&Permutation::identity(5), 1));
        // s(2341) = 2314, s(2314) = 2134, s(2134) = 1234: three passes.
        assert!(!west_sortable(&p("2341"), 2));
        assert!(west_sortable(&p("2341"), 3));
    }

    #[test]
    fn one_pass_sortability_is_231_avoidance() {
        let pattern = p("231");
        for n in 0..=8 {
            for perm in all_permutations(n) {
                assert_eq!(
                    west_sortable(&perm, 1),
                    perm.avoids(&pattern),
                    "one-pass mismatch for {perm:?}"
                );
            }
        }
    }

    #[test]
    fn west_counts_small() {
        assert_eq!(count(3, 1), 5);
        assert_eq!(count(3, 2), 6);
        assert_eq!(count(4, 3), 24);
        // With n - 1 passes everything sorts.
        assert_eq!(count(5, 4), 120);
        assert_eq!(count(1, 1), 1);
        assert_eq!(count(0, 1), 1);
        // Catalan prefix for one pass.
        let one_pass: Vec<u64> = (1..=7).map(|n| count(n, 1)).collect();
        assert_eq!(one_pass, vec![1, 2, 5, 14, 42, 132, 429]);
        // Two-pass counts as independently known.
        let two_pass: Vec<u64> = (1..=7).map(|n| count(n, 2)).collect();
        assert_eq!(two_pass, vec![1, 2, 6, 22, 91, 408, 1938]);
    }

    #[test]
    fn west_count_budgets() {
        assert!(matches!(
            count_west_sortable(11, 2, &cfg()),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(matches!(
            count_west_sortable(13, 1, &cfg()),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(count_west_sortable(0, 0, &cfg()).is_err());
    }

    #[test]
    fn parity_rules_match_computation() {
        let rows = parity_report(1, 9, &cfg()).unwrap();
        for row in &rows {
            assert_eq!(row.matches(), Some(true), "one-pass parity at n = {}", row.n);
        }
        // Odd exactly at n = 1, 3, 7 in this range.
        let odd: Vec<usize> = rows.iter().filter(|r| r.odd).map(|r| r.n).collect();
        assert_eq!(odd, vec![1, 3, 7]);

        let rows = parity_report(2, 8, &cfg()).unwrap();
        for row in &rows {
            assert_eq!(row.matches(), Some(true), "two-pass parity at n = {}", row.n);
        }
        let odd: Vec<usize> = rows.iter().filter(|r| r.odd).map(|r| r.n).collect();
        assert_eq!(odd, vec![1, 5]);

        // No rule for three passes.
        let rows = parity_report(3, 4, &cfg()).unwrap();
        assert!(rows.iter().all(|r| r.predicted_odd.is_none()));
    }

    #[test]
    fn fibonacci_counts() {
        assert_eq!(fibonacci_parity_count(1).unwrap().count, 1);
        assert_eq!(fibonacci_parity_count(2).unwrap().count, 1);
        assert_eq!(fibonacci_parity_count(3).unwrap().count, 2);
        assert_eq!(fibonacci_parity_count(5).unwrap().count, 5);
        for m in 1..=12 {
            let r = fibonacci_parity_count(m).unwrap();
            assert_eq!(r.count, r.fibonacci, "mismatch at m = {m}");
        }
        let twelve = fibonacci_parity_count(12).unwrap();
        assert_eq!(twelve.fibonacci, 144);
        assert!(fibonacci_parity_count(0).is_err());
        assert!(fibonacci_parity_count(21).is_err());
    }

    #[test]
    fn machine_moves_and_replay() {
        // Sort 231 with two stacks: push 2, push 3 — wait, stack 1 takes
        // input order; spell the full codeword and let the machine check.
        let perm = p("231");
        // a = push input, b = stack 1 → stack 2, c = stack 2 → out.
        // Park 2 on stack 2, bounce 3 through stack 1, slip 1 underneath.
        let moves: Vec<Move> = [0u8, 1, 0, 0, 1, 2, 2, 1, 2].iter().map(|&i| Move(i)).collect();
        assert!(witness_sorts(&perm, 2, &moves));
        assert_eq!(witness_string(&moves), "abaabccbc");

        // Illegal moves are rejected, not mis-executed.
        let mut machine = StackMachine::new(&perm, 2);
        assert!(machine.apply(Move(1)).is_err());
        assert!(machine.apply(Move(3)).is_err());
        machine.apply(Move(0)).unwrap();
        assert_eq!(machine.output(), Vec::<u64>::new());
        assert!(!machine.sorted_completely());
    }

    #[test]
    fn single_stack_machine_matches_one_pass_sorting() {
        // One stack in series: exhaustive search agrees with greedy
        // one-pass sortability (the greedy strategy is optimal there).
        for n in 0..=7 {
            for perm in all_permutations(n) {
                let machine = general_sortable(&perm, 1, &cfg()).unwrap();
                let west = west_sortable(&perm, 1.max(1));
                match machine {
                    Sortability::Sortable(moves) => {
                        assert!(west, "machine sorted {perm:?} but greedy cannot");
                        assert!(witness_sorts(&perm, 1, &moves));
                    }
                    Sortability::Unsortable => assert!(!west),
                }
            }
        }
    }

    #[test]
    fn west_sortable_implies_machine_sortable() {
        for n in 0..=7 {
            for perm in all_permutations(n) {
                if west_sortable(&perm, 2) {
                    assert!(
                        matches!(general_sortable(&perm, 2, &cfg()).unwrap(), Sortability::Sortable(_)),
                        "two passes sort {perm:?} but the machine search failed"
                    );
                }
            }
        }
    }

    #[test]
    fn forced_emission_is_only_a_speedup() {
        let cfg = cfg();
        for n in 0..=6 {
            for perm in all_permutations(n) {
                let fast = search_sortable(&perm, 2, &cfg, true).unwrap();
                let slow = search_sortable(&perm, 2, &cfg, false).unwrap();
                match (&fast, &slow) {
                    (Sortability::Sortable(a), Sortability::Sortable(b)) => {
                        assert!(witness_sorts(&perm, 2, a));
                        assert!(witness_sorts(&perm, 2, b));
                    }
                    (Sortability::Unsortable, Sortability::Unsortable) => {}
                    _ => panic!("forced emission changed the verdict for {perm:?}"),
                }
            }
        }
    }

    #[test]
    fn shortest_unsortable_with_one_stack() {
        match shortest_unsortable(1, 3, &cfg()).unwrap() {
            ShortestUnsortable::Found { len, perms } => {
                assert_eq!(len, 3);
                assert_eq!(perms, vec![p("231")]);
            }
            other => panic!("expected length 3, got {other:?}"),
        }
        assert_eq!(
            shortest_unsortable(1, 2, &cfg()).unwrap(),
            ShortestUnsortable::NoneUpTo(2)
        );
    }

    #[test]
    fn search_budget_is_an_error_not_a_verdict() {
        let tight = EngineConfig { search_node_cap: 2, ..cfg() };
        assert!(matches!(
            general_sortable(&p("4231"), 2, &tight),
            Err(Error::BudgetExceeded { .. })
        ));
        match shortest_unsortable(1, 4, &tight) {
            Err(Error::BudgetExceededMidScan { last_complete: 0 }) => {}
            other => panic!("expected a mid-scan budget error, got {other:?}"),
        }
    }

    #[test]
    fn machine_witnesses_replay_for_everything_sortable() {
        let cfg = cfg();
        for n in 0..=6 {
            for perm in all_permutations(n) {
                if let Sortability::Sortable(moves) = general_sortable(&perm, 2, &cfg).unwrap() {
                    assert!(witness_sorts(&perm, 2, &moves), "witness failed for {perm:?}");
                    // Witness length: each entry moves once in, once
                    // between, once out at most.
                    assert!(moves.len() <= 3 * n);
                }
            }
        }
    }
}
