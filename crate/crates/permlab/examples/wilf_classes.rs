//! Grouping patterns by their counting sequences: one class for all of
//! S_3, exactly three for S_4.

use permlab::enumerate::wilf_classes;
use permlab::perm::all_permutations;
use permlab::EngineConfig;

fn main() {
    let cfg = EngineConfig::default();

    // Every length-3 pattern is counted by the Catalan numbers, so the
    // classification collapses to a single class.
    let patterns: Vec<_> = all_permutations(3).collect();
    let classes = wilf_classes(&patterns, 8, &cfg).unwrap();
    println!("length 3, horizon n = 8: {} class(es)", classes.classes.len());

    // Length 4 splits into three classes. Equality of counting
    // sequences is established only up to the horizon — the grouping is
    // a finite-n statement, which is why the horizon is always printed.
    let patterns: Vec<_> = all_permutations(4).collect();
    let classes = wilf_classes(&patterns, 9, &cfg).unwrap();
    println!("length 4, horizon n = 9: {} class(es)", classes.classes.len());
    for (i, class) in classes.classes.iter().enumerate() {
        let members: Vec<String> = class.patterns.iter().map(|p| p.compact()).collect();
        let terms: Vec<String> = class.terms.iter().map(|t| t.to_string()).collect();
        println!(
            "class {} ({} members): {}",
            i + 1,
            class.patterns.len(),
            members.join(" ")
        );
        println!("  terms: {}", terms.join(", "));
    }
}
