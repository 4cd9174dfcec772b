//! Structural operations: sums, inflations, layers, and the rank poset.
//!
//! The *direct sum* `π ⊕ σ` places `σ` above and after `π`; the *skew
//! sum* `π ⊖ σ` places it below and after. *Inflating* a skeleton
//! replaces each of its points by a whole block. A permutation is
//! *layered* when it is a direct sum of decreasing blocks.
//!
//! Every permutation also carries a partial order on its values: `i ⪯ j`
//! when `i ≤ j` as integers *and* `i` appears before `j` in the word. The
//! rank of a value is the length of the longest chain ending at it —
//! equivalently, the longest increasing subsequence ending there. Sorting
//! the rank multiplicities into layers produces [`conv`], the layered
//! permutation with one layer per rank; it acts as a layered hull and is
//! the comparison point of a conjectured count inequality (see
//! [`crate::conjectures`]).

use crate::error::{Error, Result};
use crate::perm::{Permutation, MAX_LEN};

/// `π ⊕ σ`: the entries of `π` followed by those of `σ` shifted up.
pub fn direct_sum(pi: &Permutation, sigma: &Permutation) -> Result<Permutation> {
    let total = pi.len() + sigma.len();
    if total > MAX_LEN {
        return Err(Error::LengthCap { len: total, max: MAX_LEN });
    }
    let shift = pi.len() as u64;
    let mut word = pi.to_word();
    word.extend(sigma.to_word().iter().map(|v| v + shift));
    Permutation::from_word(&word)
}

/// `π ⊖ σ`: the entries of `π` shifted up, followed by those of `σ`.
pub fn skew_sum(pi: &Permutation, sigma: &Permutation) -> Result<Permutation> {
    let total = pi.len() + sigma.len();
    if total > MAX_LEN {
        return Err(Error::LengthCap { len: total, max: MAX_LEN });
    }
    let shift = sigma.len() as u64;
    let mut word: Vec<u64> = pi.to_word().iter().map(|v| v + shift).collect();
    word.extend(sigma.to_word());
    Permutation::from_word(&word)
}

/// Inflates `skeleton` by one nonempty block per point: block `i` patterns
/// the value range that point occupies, ranges ordered like the skeleton's
/// values. `3142[12, 315264, 231, 321]` is the running example — its
/// second point is lowest, so the second block takes the bottom values.
pub fn inflate(skeleton: &Permutation, blocks: &[Permutation]) -> Result<Permutation> {
    let k = skeleton.len();
    if blocks.len() != k {
        return Err(Error::BlockCountMismatch { expected: k, got: blocks.len() });
    }
    if let Some(i) = blocks.iter().position(|b| b.is_empty()) {
        return Err(Error::EmptyInflationBlock { position: i + 1 });
    }
    let total: usize = blocks.iter().map(|b| b.len()).sum();
    if total > MAX_LEN {
        return Err(Error::LengthCap { len: total, max: MAX_LEN });
    }
    // Base value for each block: blocks of smaller skeleton values sit
    // entirely below those of larger ones.
    let mut base = vec![0u64; k];
    let mut running = 0u64;
    for v in 1..=k {
        let pos = skeleton.position_of(v) - 1;
        base[pos] = running;
        running += blocks[pos].len() as u64;
    }
    let mut word = Vec::with_capacity(total);
    for (pos, block) in blocks.iter().enumerate() {
        word.extend(block.to_word().iter().map(|v| v + base[pos]));
    }
    Permutation::from_word(&word)
}

/// The layered permutation with the given layer sizes: a direct sum of
/// decreasing blocks. `build_layered(&[2, 3, 1])` is `215436`.
pub fn build_layered(sizes: &[usize]) -> Result<Permutation> {
    let total: usize = sizes.iter().sum();
    if total > MAX_LEN {
        return Err(Error::LengthCap { len: total, max: MAX_LEN });
    }
    if let Some(i) = sizes.iter().position(|&s| s == 0) {
        return Err(Error::InvalidArgument(format!("layer {} has size zero", i + 1)));
    }
    let mut word = Vec::with_capacity(total);
    let mut floor = 0u64;
    for &size in sizes {
        word.extend((1..=size as u64).rev().map(|v| v + floor));
        floor += size as u64;
    }
    Permutation::from_word(&word)
}

/// The layer sizes of `perm` when it is layered, `None` otherwise. The
/// empty permutation is layered with no layers.
pub fn layer_sizes(perm: &Permutation) -> Option<Vec<usize>> {
    let word = perm.to_word();
    let n = word.len();
    let mut sizes = Vec::new();
    let mut i = 0usize;
    while i < n {
        let top = word[i] as usize;
        if top <= i {
            return None;
        }
        let size = top - i;
        // The layer must descend from `top` back down to `i + 1`.
        for t in 0..size {
            if i + t >= n || word[i + t] as usize != top - t {
                return None;
            }
        }
        sizes.push(size);
        i += size;
    }
    Some(sizes)
}

/// Is `perm` a direct sum of decreasing blocks?
pub fn is_layered(perm: &Permutation) -> bool {
    layer_sizes(perm).is_some()
}

/// Can `perm` be written `α ⊕ β` with both parts nonempty? A proper
/// prefix forming `{1, …, k}` is exactly such a split.
pub fn is_sum_decomposable(perm: &Permutation) -> bool {
    let word = perm.to_word();
    let mut max_seen = 0u64;
    for (i, &v) in word.iter().enumerate() {
        max_seen = max_seen.max(v);
        if max_seen as usize == i + 1 && i + 1 < word.len() {
            return true;
        }
    }
    false
}

/// The value order of a permutation: `i ⪯ j` when `i ≤ j` as integers and
/// `i` appears first. Ranks are longest-chain lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankedPoset {
    n: usize,
    /// Row-major `n × n`: entry `(i-1) * n + (j-1)` says `i ⪯ j`.
    leq: Vec<bool>,
    /// `rank[v - 1]` is the rank of value `v`.
    rank: Vec<usize>,
}

impl RankedPoset {
    /// Number of elements.
    pub fn len(&self) -> usize {
        self.n
    }

    /// True for the poset of the empty permutation.
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Does `i ⪯ j` hold? Values are 1-based; the order is reflexive.
    pub fn le(&self, i: usize, j: usize) -> bool {
        assert!(i >= 1 && i <= self.n && j >= 1 && j <= self.n, "values out of range");
        self.leq[(i - 1) * self.n + (j - 1)]
    }

    /// Rank of value `v`: the longest chain ending at it.
    pub fn rank(&self, v: usize) -> usize {
        assert!(v >= 1 && v <= self.n, "value out of range");
        self.rank[v - 1]
    }

    /// Largest rank present (0 for the empty poset).
    pub fn max_rank(&self) -> usize {
        self.rank.iter().copied().max().unwrap_or(0)
    }

    /// How many values carry each rank, indexed `[rank 1, rank 2, …]`.
    pub fn rank_multiplicities(&self) -> Vec<usize> {
        let mut mult = vec![0usize; self.max_rank()];
        for &r in &self.rank {
            mult[r - 1] += 1;
        }
        mult
    }

    /// Cover relations `i ⋖ j` (no element strictly between), sorted.
    pub fn cover_edges(&self) -> Vec<(usize, usize)> {
        let mut covers = Vec::new();
        for i in 1..=self.n {
            for j in 1..=self.n {
                if i == j || !self.le(i, j) {
                    continue;
                }
                let direct = !(1..=self.n)
                    .any(|k| k != i && k != j && self.le(i, k) && self.le(k, j));
                if direct {
                    covers.push((i, j));
                }
            }
        }
        covers.sort_unstable();
        covers
    }

    /// Plain-text export: the rank table and the cover edge list.
    pub fn export_text(&self) -> String {
        let ranks: Vec<String> = (1..=self.n).map(|v| format!("{v}:{}", self.rank(v))).collect();
        let covers: Vec<String> =
            self.cover_edges().iter().map(|(i, j)| format!("{i}<{j}")).collect();
        format!("ranks: {}\ncovers: {}\n", ranks.join(" "), covers.join(" "))
    }
}

/// Builds the value order of `perm` with longest-chain ranks.
pub fn perm_poset(perm: &Permutation) -> RankedPoset {
    let n = perm.len();
    let word = perm.to_word();
    let mut leq = vec![false; n * n];
    for i in 1..=n {
        for j in i..=n {
            if i == j || perm.position_of(i) < perm.position_of(j) {
                leq[(i - 1) * n + (j - 1)] = true;
            }
        }
    }
    // Longest increasing subsequence ending at each position; entry order
    // in the word is exactly chain order in the poset.
    let mut rank_by_value = vec![0usize; n];
    let mut rank_by_pos = vec![0usize; n];
    for p in 0..n {
        let mut best = 0;
        for q in 0..p {
            if word[q] < word[p] {
                best = best.max(rank_by_pos[q]);
            }
        }
        rank_by_pos[p] = best + 1;
        rank_by_value[word[p] as usize - 1] = best + 1;
    }
    RankedPoset { n, leq, rank: rank_by_value }
}

/// The layered hull: one layer per rank of the value order, layer sizes
/// the rank multiplicities in increasing rank order. Layered permutations
/// are exactly its fixed points.
pub fn conv(perm: &Permutation) -> Permutation {
    let mult = perm_poset(perm).rank_multiplicities();
    build_layered(&mult).expect("rank multiplicities are positive and length-preserving")
}
