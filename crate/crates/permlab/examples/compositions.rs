//! Pattern containment inside integer compositions, the pruned count of
//! 123-avoiders, and the recorded generating function expanded next to
//! the exhaustive counts.

use permlab::compositions::{
    compositions_of, count_123_avoiding_compositions, savage_wilf_report, Composition,
    ProductRange,
};
use permlab::Permutation;

fn main() {
    let pattern: Permutation = "123".parse().unwrap();

    // Containment is strict order isomorphism on parts: equal parts
    // never realize distinct pattern values, so 2+2+2 avoids 123 while
    // 1+2+4 contains it.
    for text in ["1+2+4", "2+2+2", "3+1+2+4"] {
        let c: Composition = text.parse().unwrap();
        println!("{c} contains 123: {}", c.contains_pattern(&pattern));
    }

    // Generation follows one canonical order: first part descending,
    // then the remainder recursively.
    let all: Vec<String> = compositions_of(4).iter().map(|c| c.to_string()).collect();
    println!("compositions of 4 in canonical order: {}", all.join("  "));

    // The pruned counter shares its traversal with an exactness
    // invariant: pruned subtrees are added back as whole blocks and the
    // total must hit 2^(n-1).
    let counts = count_123_avoiding_compositions(10).unwrap();
    let rendered: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
    println!("123-avoiding compositions of n = 1..=10: {}", rendered.join(", "));

    // The recorded series admits one finite reading (factors with j > i
    // only, outer sum capped); its expansion is printed next to the
    // counts without pretending they agree.
    let report = savage_wilf_report(8, ProductRange::LargerIndices).unwrap();
    println!("series vs counts (policy: {}):", report.series.policy);
    for row in &report.rows {
        println!(
            "  n = {}: series {} vs count {} ({})",
            row.n,
            row.series_coefficient,
            row.brute_count,
            if row.agrees { "agree" } else { "differ" }
        );
    }
    for note in &report.notes {
        println!("note: {note}");
    }

    // The other reading is rejected, not silently repaired.
    match savage_wilf_report(6, ProductRange::AllOtherIndices) {
        Err(e) => println!("all-other-indices reading: {e}"),
        Ok(_) => unreachable!("the expansion is ill-defined"),
    }
}
