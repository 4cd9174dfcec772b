//! Enumerating avoidance classes: counting sequences, explicit member
//! lists, occurrence-constrained counts, and the brute-force
//! cross-check.

use permlab::enumerate::{
    brute_force_count, count_avoiders, count_with_occurrences, list_avoiders, Basis,
};
use permlab::EngineConfig;

fn main() {
    let cfg = EngineConfig::default();

    // The class avoiding 132 is counted by the Catalan numbers.
    let basis = Basis::parse("132").unwrap();
    let seq = count_avoiders(&basis, 10, &cfg).unwrap();
    let terms: Vec<String> = (1..=10).map(|n| seq.term(n).to_string()).collect();
    println!("s_n(132) for n = 1..=10: {}", terms.join(", "));

    // Joint bases intersect the classes; canonical text sorts and
    // deduplicates the patterns.
    let joint = Basis::parse("123;321").unwrap();
    let seq = count_avoiders(&joint, 8, &cfg).unwrap();
    let terms: Vec<String> = (1..=8).map(|n| seq.term(n).to_string()).collect();
    println!("s_n({}) for n = 1..=8: {}", joint.canonical_text(), terms.join(", "));
    println!("  (zero from n = 5 on: every length-5 word has a monotone triple)");

    // Small members can be listed outright.
    let members = list_avoiders(&Basis::parse("231").unwrap(), 4, &cfg).unwrap();
    let listed: Vec<String> = members.iter().map(|p| p.compact()).collect();
    println!("the {} avoiders of 231 at n = 4: {}", members.len(), listed.join(" "));

    // Exact occurrence counts generalize avoidance: avoidance is the
    // zero-occurrence case.
    let pattern: permlab::Permutation = "21".parse().unwrap();
    for r in 0..=3u64 {
        let count = count_with_occurrences(4, &[(pattern.clone(), r)], &cfg).unwrap();
        println!("permutations of length 4 with exactly {r} inversions: {count}");
    }

    // An independent brute-force filter cross-checks the frontier
    // enumerator on anything small.
    let basis = Basis::parse("1324").unwrap();
    for n in 1..=7 {
        let fast = count_avoiders(&basis, n, &cfg).unwrap().term(n).clone();
        let slow = brute_force_count(&basis, n);
        assert_eq!(fast.to_string(), slow.to_string());
    }
    println!("frontier counts match the brute filter for 1324 up to n = 7");
}
