//! Structural operations: sums, inflation, layered permutations, the
//! ranked containment poset of a permutation's prefixes, and the
//! layer-merge map conv.

use permlab::algebra::{
    build_layered, conv, direct_sum, inflate, is_layered, layer_sizes, perm_poset, skew_sum,
};
use permlab::Permutation;

fn p(text: &str) -> Permutation {
    text.parse().unwrap()
}

fn main() {
    // Sums place blocks on the diagonal or antidiagonal.
    println!("21 + 132  = {}", direct_sum(&p("21"), &p("132")).unwrap());
    println!("21 - 132  = {}", skew_sum(&p("21"), &p("132")).unwrap());

    // Inflation substitutes a block for every entry of a skeleton.
    let inflated = inflate(&p("132"), &[p("12"), p("21"), p("1")]).unwrap();
    println!("132[12, 21, 1] = {inflated}");

    // Layered permutations are sums of descending blocks; they are
    // exactly the shapes the layer-merge map conv fixes.
    let layered = build_layered(&[2, 3, 1]).unwrap();
    println!("layers [2, 3, 1] -> {layered}");
    println!("  layered: {}, sizes {:?}", is_layered(&layered), layer_sizes(&layered));

    // The poset of a permutation ranks each entry by the longest
    // increasing subsequence ending there.
    let pattern = p("416352");
    let poset = perm_poset(&pattern);
    println!("poset of {pattern}:");
    print!("{}", poset.export_text());
    println!("rank multiplicities: {:?}", poset.rank_multiplicities());

    // conv rebuilds a layered permutation from those multiplicities:
    // the running example merges to 215436.
    let merged = conv(&pattern);
    println!("conv({}) = {}", pattern.compact(), merged.compact());
    assert_eq!(merged, p("215436"));
    assert_eq!(conv(&merged), merged, "layered permutations are fixed points");
}
