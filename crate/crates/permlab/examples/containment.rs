//! Pattern containment from the ground up: building permutations,
//! testing containment, listing occurrences, and exploiting symmetry.

use permlab::perm::Symmetry;
use permlab::Permutation;

fn main() {
    // Permutations parse from comma-separated or compact digit text.
    let host: Permutation = "5,2,4,1,3".parse().unwrap();
    let pattern: Permutation = "231".parse().unwrap();
    println!("host    = {host}   (compact {})", host.compact());
    println!("pattern = {pattern}");

    // Containment asks for positions whose values are order-isomorphic
    // to the pattern.
    println!("host contains pattern: {}", host.contains(&pattern));
    println!("occurrences: {}", host.count_occurrences(&pattern));
    for occ in host.occurrences(&pattern) {
        let values: Vec<String> = occ
            .indices
            .iter()
            .map(|&p| host.value_at(p).to_string())
            .collect();
        println!("  positions {:?} carry values {}", occ.indices, values.join(","));
        assert!(occ.is_valid_in(&host));
    }

    // The eight symmetries of the square act on containment: an
    // occurrence survives reversing, complementing, and inverting both
    // sides.
    for sym in [Symmetry::Reverse, Symmetry::Complement, Symmetry::Inverse] {
        let h = host.symmetry(sym);
        let p = pattern.symmetry(sym);
        println!(
            "{sym:?}: {h} contains {p}: {}",
            h.contains(&p)
        );
    }

    // Any list of distinct comparables flattens to the pattern it
    // realizes.
    let reduced = Permutation::pattern_of(&[31, 2, 75, 29]).unwrap();
    println!("pattern of [31, 2, 75, 29] = {reduced}");

    // The identity contains only identities; the decreasing pattern
    // none of length two or more.
    let id = Permutation::identity(6);
    println!(
        "identity of length 6 avoids 21: {}",
        id.avoids(&"21".parse().unwrap())
    );
}
