//! Stack sorting end to end: the greedy one-pass operator, multi-pass
//! sortability, count parities, the serial stack machine with
//! replayable witnesses, and the shortest unsortable permutations.

use permlab::stacksort::{
    count_west_sortable, fibonacci_parity_count, general_sortable, greedy_stack_sort,
    parity_report, shortest_unsortable, west_sortable, witness_sorts, ShortestUnsortable,
    Sortability,
};
use permlab::{EngineConfig, Permutation};

fn p(text: &str) -> Permutation {
    text.parse().unwrap()
}

fn main() {
    let cfg = EngineConfig::default();

    // One greedy pass through a single stack; iterating it eventually
    // sorts anything.
    let mut chain = vec![p("2341")];
    while !chain.last().unwrap().is_identity() {
        let next = greedy_stack_sort(chain.last().unwrap());
        chain.push(next);
    }
    let rendered: Vec<String> = chain.iter().map(|q| q.compact()).collect();
    println!("iterating the operator on 2341: {}", rendered.join(" -> "));
    println!(
        "2-pass sortable: {}, 3-pass sortable: {}",
        west_sortable(&p("2341"), 2),
        west_sortable(&p("2341"), 3)
    );

    // Exhaustive counts: one pass gives the Catalan numbers.
    let one_pass: Vec<String> = (1..=7)
        .map(|n| count_west_sortable(n, 1, &cfg).unwrap().to_string())
        .collect();
    println!("one-pass sortable counts, n = 1..=7: {}", one_pass.join(", "));

    // Parities against the recorded rules: odd at n = 2^k - 1 for one
    // pass; for two passes, odd exactly at binary expansions with no
    // adjacent ones that end in 1.
    for t in [1usize, 2] {
        let rows = parity_report(t, 8, &cfg).unwrap();
        let odd: Vec<usize> = rows.iter().filter(|r| r.odd).map(|r| r.n).collect();
        println!("{t}-pass counts odd at n = {odd:?} (rule matches: {})",
            rows.iter().all(|r| r.matches() != Some(false)));
    }
    let fib = fibonacci_parity_count(10).unwrap();
    println!(
        "two-pass rule integers in [1, 2^10]: {} = F_10 = {}",
        fib.count, fib.fibonacci
    );

    // The serial machine searches actual move sequences; witnesses
    // replay deterministically.
    match general_sortable(&p("2435761"), 3, &cfg).unwrap() {
        Sortability::Sortable(moves) => {
            let word = permlab::stacksort::witness_string(&moves);
            println!("2435761 sorts on 3 stacks; witness {word}");
            assert!(witness_sorts(&p("2435761"), 3, &moves));
        }
        Sortability::Unsortable => unreachable!("it is sortable on three stacks"),
    }

    // On two stacks nothing shorter than length 7 is unsortable, and at
    // length 7 exactly 22 permutations are.
    match shortest_unsortable(2, 7, &cfg).unwrap() {
        ShortestUnsortable::Found { len, perms } => {
            println!("shortest unsortable on 2 stacks: length {len}, {} permutations", perms.len());
            let first: Vec<String> = perms.iter().take(5).map(|q| q.compact()).collect();
            println!("  first few: {}", first.join(" "));
        }
        ShortestUnsortable::NoneUpTo(len) => {
            println!("all permutations up to length {len} are sortable");
        }
    }
}
