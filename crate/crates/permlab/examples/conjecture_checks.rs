//! Running the recorded conjecture checkers and reading their reports:
//! verdicts, strictness accounting, witnesses, and budget handling.

use permlab::cache::SequenceSource;
use permlab::conjectures::{
    check_bona, check_burstein, parity_conjectures, stankova_west_crossing, BursteinVariant,
};
use permlab::{EngineConfig, Permutation};

fn p(text: &str) -> Permutation {
    text.parse().unwrap()
}

fn main() {
    let cfg = EngineConfig::default();
    let mut source = SequenceSource::uncached(&cfg);

    // Middle-block comparison: inflating 123 with an increasing or
    // decreasing middle block of length 2 pits 1234 against 1324. The
    // classes tie through n = 6 and separate in the conjectured
    // direction from n = 7.
    let variant = BursteinVariant::Three { sigma1: p("1"), t: 2, sigma3: p("1") };
    let report = check_burstein(&variant, 8, &mut source).unwrap();
    println!("{}", report.render_plain());

    // Degenerate blocks can collapse both sides into one Wilf class.
    // Equality under a strict claim is reported as failed strictness,
    // never as a violation.
    let degenerate = BursteinVariant::One { sigma: [p("1"), p("1"), p("1")] };
    let report = check_burstein(&degenerate, 6, &mut source).unwrap();
    println!("degenerate variant-1 verdict: {}", report.verdict);
    println!("  witnesses recorded: {}", report.witnesses.len());

    // The layer-merge comparison on the running example 416352.
    let report = check_bona(&p("416352"), 7, &mut source).unwrap();
    println!(
        "layer-merge comparison of 416352 vs {}: {}",
        report.parameters["conv"], report.verdict
    );

    // The recorded inequality s_n(pi) <= s_n(conv(pi)) is not safe to
    // assume: 4231 refutes it. Its class counts like the class of 1324
    // (reversal symmetry), which overtakes the class of its merge 3214
    // at n = 7 — the checker returns a violation with the counts.
    let report = check_bona(&p("4231"), 7, &mut source).unwrap();
    println!(
        "layer-merge comparison of 4231 vs {}: {}",
        report.parameters["conv"], report.verdict
    );
    for witness in &report.witnesses {
        if let permlab::conjectures::Witness::Comparison { n, left_count, right_count, relation, .. } = witness {
            println!("  n = {n}: {left_count} {relation} {right_count}");
        }
    }

    // The two length-5 classes: ties through n = 6, then a strict gap;
    // the recorded reversal at n = 13 is opt-in long-running.
    let report = stankova_west_crossing(8, false, &mut source).unwrap();
    println!("length-5 class comparison to n = 8: {}", report.verdict);
    for witness in &report.witnesses {
        if let permlab::conjectures::Witness::Comparison { n, note, .. } = witness {
            println!("  n = {n}: {note}");
        }
    }

    // Budgets produce inconclusive verdicts, never silent truncation.
    let tight = EngineConfig { enum_node_limit: 100, ..EngineConfig::default() };
    let mut tight_source = SequenceSource::uncached(&tight);
    let report = check_bona(&p("2143"), 9, &mut tight_source).unwrap();
    println!(
        "under a 100-node budget: {} (completed to n = {})",
        report.verdict, report.range.completed_max
    );

    // The parity aggregate bundles the sortable-count rules.
    let report = parity_conjectures(7, &cfg).unwrap();
    println!("parity rules to n = 7: {}", report.verdict);
}
