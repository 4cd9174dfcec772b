//! Guessing linear recurrences with polynomial coefficients from raw
//! terms, verifying them on held-out data, and reading sequence files.

use num_bigint::BigInt;
use permlab::recurrence::{
    fit_recurrence, read_sequence_file, search_recurrence, verify_recurrence, Verification,
};

fn catalan(count: usize) -> Vec<BigInt> {
    let mut terms: Vec<BigInt> = vec![BigInt::from(1)];
    while terms.len() < count {
        let next: BigInt = (0..terms.len())
            .map(|i| &terms[i] * &terms[terms.len() - 1 - i])
            .sum();
        terms.push(next);
    }
    terms
}

fn main() {
    // Catalan numbers satisfy (n+2) c_{n+1} = (4n+2) c_n. Twelve terms
    // pin the shape (order 1, degree 1) down to a one-dimensional
    // solution space.
    let terms = catalan(12);
    let fit = fit_recurrence(&terms, 1, 1, 0).unwrap();
    println!(
        "catalan, shape (1, 1): {} equations, {} unknowns, solution space {}",
        fit.equations, fit.unknowns, fit.nullspace_dim
    );
    let rec = fit.recurrence.unwrap();
    println!("  {rec}");

    // Fits are conjectures from finitely many terms; holding out later
    // terms and re-verifying is the honest check.
    let more = catalan(30);
    match verify_recurrence(&rec, &more, 0).unwrap() {
        Verification::Valid => println!("  verified on 30 terms"),
        Verification::FailsAt { index } => println!("  fails at index {index}"),
    }

    // The search walks shapes in order of parameter count and returns
    // the first that fits.
    let powers: Vec<BigInt> = (0u32..10).map(|k| BigInt::from(3).pow(k)).collect();
    let found = search_recurrence(&powers, 3, 3, 0).unwrap().unwrap();
    println!(
        "powers of three: search picked order {}, degree {}: {}",
        found.order,
        found.degree,
        found.recurrence.unwrap()
    );

    // A sequence that satisfies no small recurrence comes back empty
    // rather than force-fitted.
    let digits: Vec<BigInt> =
        [3, 1, 4, 1, 5, 9, 2, 6, 5, 3, 5, 8, 9, 7, 9, 3].map(BigInt::from).to_vec();
    match search_recurrence(&digits, 2, 2, 1).unwrap() {
        Some(_) => println!("unexpected fit for arbitrary digits"),
        None => println!("arbitrary digits: no recurrence of order <= 2, degree <= 2 fits"),
    }

    // Sequence files hold plain terms, `n: value` lines, or count-cache
    // records.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("factorial.txt");
    let mut text = String::from("# factorials\n");
    let mut product = 1u64;
    for n in 1..=10u64 {
        product *= n;
        text.push_str(&format!("{n}: {product}\n"));
    }
    std::fs::write(&path, text).unwrap();
    let file = read_sequence_file(&path).unwrap();
    let fit = fit_recurrence(&file.terms, 1, 1, file.index_base).unwrap();
    println!("factorial file: {}", fit.recurrence.unwrap());
}
