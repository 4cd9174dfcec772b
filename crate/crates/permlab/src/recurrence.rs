//! Guessing linear recurrences with polynomial coefficients.
//!
//! A sequence `s` satisfies such a recurrence of order `r` and degree
//! `d` when polynomials `p_0, …, p_r` in `n`, each of degree at most
//! `d` and not all zero, give
//!
//! ```text
//! p_r(n)·s(n+r) + … + p_1(n)·s(n+1) + p_0(n)·s(n) = 0
//! ```
//!
//! for every `n` in range. Fitting is exact linear algebra over the
//! rationals — no floating point — and demands more equations than
//! unknowns by a fixed margin, so a reported recurrence is never a
//! coincidence of barely-enough data. It is still only *guessed* from
//! finitely many terms; [`verify_recurrence`] re-checks any candidate
//! against further terms.

use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// How many more equations than unknowns a fit must have.
const EQUATION_MARGIN: usize = 3;

/// A guessed recurrence with polynomial coefficients.
///
/// `coeffs[i]` holds the coefficients of `p_i` in ascending powers of
/// `n`, with trailing zeros trimmed (an empty vector is the zero
/// polynomial). The vector for the leading polynomial `p_order` is
/// always nonempty with a positive leading coefficient, and the
/// coefficients across all polynomials have no common factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recurrence {
    /// Highest shift `r` with `p_r` nonzero.
    pub order: usize,
    /// Largest degree among the `p_i`.
    pub degree: usize,
    /// Coefficients of `p_0, …, p_order`, ascending powers.
    pub coeffs: Vec<Vec<BigInt>>,
    /// The recurrence is asserted for `n ≥ index_base`.
    pub index_base: i64,
}

impl Recurrence {
    /// Evaluates `p_i` at `n`.
    pub fn poly_at(&self, i: usize, n: i64) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs[i].iter().rev() {
            acc = acc * BigInt::from(n) + c;
        }
        acc
    }
}

fn poly_string(coeffs: &[BigInt]) -> String {
    if coeffs.iter().all(|c| c.is_zero()) {
        return "0".to_string();
    }
    let mut out = String::new();
    for (a, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let sign_positive = c.is_positive();
        if out.is_empty() {
            if !sign_positive {
                out.push('-');
            }
        } else {
            out.push_str(if sign_positive { " + " } else { " - " });
        }
        let mag = c.abs();
        let show_mag = !mag.is_one() || a == 0;
        if show_mag {
            out.push_str(&mag.to_string());
        }
        match a {
            0 => {}
            1 => out.push('n'),
            _ => out.push_str(&format!("n^{a}")),
        }
    }
    out
}

impl fmt::Display for Recurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in (0..=self.order).rev() {
            if self.coeffs[i].iter().all(|c| c.is_zero()) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let shift = if i == 0 { "n".to_string() } else { format!("n+{i}") };
            write!(f, "({})*s({})", poly_string(&self.coeffs[i]), shift)?;
        }
        write!(f, " = 0 for n >= {}", self.index_base)
    }
}

/// Outcome of one fitting attempt at a fixed order and degree.
#[derive(Debug, Clone)]
pub struct FitResult {
    /// Order requested.
    pub order: usize,
    /// Degree requested.
    pub degree: usize,
    /// Number of linear equations imposed.
    pub equations: usize,
    /// Number of unknown coefficients.
    pub unknowns: usize,
    /// Dimension of the solution space.
    pub nullspace_dim: usize,
    /// The normalized recurrence, when the solution space is nonempty.
    pub recurrence: Option<Recurrence>,
}

/// Reduces `matrix` to reduced row-echelon form in place, pivoting on
/// the first nonzero entry in each column; returns the pivot columns.
fn rref(matrix: &mut [Vec<BigRational>]) -> Vec<usize> {
    let rows = matrix.len();
    let cols = if rows == 0 { 0 } else { matrix[0].len() };
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        let Some(pivot_row) = (row..rows).find(|&r| !matrix[r][col].is_zero()) else {
            continue;
        };
        matrix.swap(row, pivot_row);
        let pivot = matrix[row][col].clone();
        for entry in &mut matrix[row] {
            *entry /= pivot.clone();
        }
        for r in 0..rows {
            if r != row && !matrix[r][col].is_zero() {
                let factor = matrix[r][col].clone();
                for c in 0..cols {
                    let delta = &factor * &matrix[row][c];
                    matrix[r][c] -= delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Evaluates `n^a` as a `BigInt`.
fn power(n: i64, a: usize) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..a {
        acc *= BigInt::from(n);
    }
    acc
}

fn normalize(solution: Vec<BigRational>, order: usize, degree: usize, index_base: i64) -> Recurrence {
    // Clear denominators, then divide out the content.
    let denom_lcm = solution
        .iter()
        .map(|q| q.denom().clone())
        .fold(BigInt::one(), |acc, d| num_integer::lcm(acc, d));
    let mut ints: Vec<BigInt> =
        solution.iter().map(|q| (q * BigRational::from(denom_lcm.clone())).to_integer()).collect();
    let content = ints
        .iter()
        .filter(|c| !c.is_zero())
        .fold(BigInt::zero(), |acc, c| num_integer::gcd(acc, c.abs()));
    if !content.is_zero() && !content.is_one() {
        for c in &mut ints {
            *c /= &content;
        }
    }
    let mut coeffs: Vec<Vec<BigInt>> = ints
        .chunks(degree + 1)
        .map(|chunk| {
            let mut poly = chunk.to_vec();
            while poly.last().is_some_and(|c| c.is_zero()) {
                poly.pop();
            }
            poly
        })
        .collect();
    debug_assert_eq!(coeffs.len(), order + 1);
    while coeffs.len() > 1 && coeffs.last().is_some_and(|p| p.is_empty()) {
        coeffs.pop();
    }
    if coeffs.last().and_then(|p| p.last()).is_some_and(|c| c.is_negative()) {
        for poly in &mut coeffs {
            for c in poly.iter_mut() {
                *c = -std::mem::take(c);
            }
        }
    }
    let actual_order = coeffs.len() - 1;
    let actual_degree = coeffs.iter().map(|p| p.len().saturating_sub(1)).max().unwrap_or(0);
    Recurrence { order: actual_order, degree: actual_degree, coeffs, index_base }
}

/// Fits a recurrence of the given order and degree to `terms`, which
/// are `s(index_base), s(index_base + 1), …`.
///
/// Requires [`EQUATION_MARGIN`] more equations than unknowns; with `r`
/// the order and `u` the unknown count that means `u + r + 3` terms.
pub fn fit_recurrence(
    terms: &[BigInt],
    order: usize,
    degree: usize,
    index_base: i64,
) -> Result<FitResult> {
    if order == 0 {
        return Err(Error::InvalidArgument("a recurrence needs order at least 1".to_string()));
    }
    if terms.iter().all(|t| t.is_zero()) {
        return Err(Error::AllZeroSequence);
    }
    let unknowns = (order + 1) * (degree + 1);
    let needed = unknowns + order + EQUATION_MARGIN;
    if terms.len() < needed {
        return Err(Error::InsufficientTerms { needed, got: terms.len() });
    }
    let equations = terms.len() - order;
    // Row for shift k: sum over i, a of c_{i,a} · n^a · s(n+i) with
    // n = index_base + k.
    let mut matrix: Vec<Vec<BigRational>> = (0..equations)
        .map(|k| {
            let n = index_base + k as i64;
            let mut row = Vec::with_capacity(unknowns);
            for i in 0..=order {
                for a in 0..=degree {
                    row.push(BigRational::from(power(n, a) * &terms[k + i]));
                }
            }
            row
        })
        .collect();
    let pivots = rref(&mut matrix);
    let nullspace_dim = unknowns - pivots.len();
    if nullspace_dim == 0 {
        return Ok(FitResult { order, degree, equations, unknowns, nullspace_dim, recurrence: None });
    }
    // When the space has several dimensions, report the solution built
    // from the first free column — deterministic and usually the
    // lowest-order representative after normalization.
    let first_free = (0..unknowns).find(|c| !pivots.contains(c)).unwrap();
    let mut solution = vec![BigRational::zero(); unknowns];
    solution[first_free] = BigRational::one();
    for (row, &col) in pivots.iter().enumerate() {
        solution[col] = -matrix[row][first_free].clone();
    }
    let recurrence = normalize(solution, order, degree, index_base);
    debug_assert!(matches!(
        verify_recurrence(&recurrence, terms, index_base),
        Ok(Verification::Valid)
    ));
    Ok(FitResult {
        order,
        degree,
        equations,
        unknowns,
        nullspace_dim,
        recurrence: Some(recurrence),
    })
}

/// What re-checking a recurrence against a sequence found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verification {
    /// Every applicable equation held.
    Valid,
    /// The equation at `n = index` is violated.
    FailsAt {
        /// First index where the recurrence breaks.
        index: i64,
    },
}

/// Checks `rec` against `terms` (being `s(index_base), …`) at every
/// index where the full window is available.
pub fn verify_recurrence(
    rec: &Recurrence,
    terms: &[BigInt],
    index_base: i64,
) -> Result<Verification> {
    if terms.len() <= rec.order {
        return Err(Error::InsufficientTerms { needed: rec.order + 1, got: terms.len() });
    }
    for k in 0..terms.len() - rec.order {
        let n = index_base + k as i64;
        let mut acc = BigInt::zero();
        for i in 0..=rec.order {
            acc += rec.poly_at(i, n) * &terms[k + i];
        }
        if !acc.is_zero() {
            return Ok(Verification::FailsAt { index: n });
        }
    }
    Ok(Verification::Valid)
}

/// Tries shapes in order of unknown count (ties broken by lower order)
/// and returns the first that fits, or `None` when no shape within the
/// bounds does.
///
/// Shapes whose margin demands more terms than supplied are skipped;
/// if every shape is skipped that is an [`Error::InsufficientTerms`].
pub fn search_recurrence(
    terms: &[BigInt],
    max_order: usize,
    max_degree: usize,
    index_base: i64,
) -> Result<Option<FitResult>> {
    if max_order == 0 {
        return Err(Error::InvalidArgument("a recurrence needs order at least 1".to_string()));
    }
    let mut shapes: Vec<(usize, usize)> = (1..=max_order)
        .flat_map(|r| (0..=max_degree).map(move |d| (r, d)))
        .collect();
    shapes.sort_by_key(|&(r, d)| ((r + 1) * (d + 1), r, d));
    let mut any_tried = false;
    let mut smallest_needed = usize::MAX;
    for (r, d) in shapes {
        let needed = (r + 1) * (d + 1) + r + EQUATION_MARGIN;
        if terms.len() < needed {
            smallest_needed = smallest_needed.min(needed);
            continue;
        }
        any_tried = true;
        let fit = fit_recurrence(terms, r, d, index_base)?;
        if fit.recurrence.is_some() {
            return Ok(Some(fit));
        }
    }
    if !any_tried {
        return Err(Error::InsufficientTerms { needed: smallest_needed, got: terms.len() });
    }
    Ok(None)
}

/// A sequence read from disk, ready for fitting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceFile {
    /// The terms, consecutively indexed.
    pub terms: Vec<BigInt>,
    /// Index of the first term.
    pub index_base: i64,
}

/// Reads a sequence from `path`. Three layouts are accepted, not mixed:
/// plain decimal integers one per line (indexed from 1), `n: value`
/// lines, or count-cache records (which must all share one basis).
/// Indexed layouts must cover a contiguous range. Blank lines and lines
/// starting with `#` are skipped.
pub fn read_sequence_file(path: &Path) -> Result<SequenceFile> {
    let text = std::fs::read_to_string(path)?;
    let path_str = path.display().to_string();
    let fail = |line: usize, reason: String| Error::FileFormat {
        path: path_str.clone(),
        line,
        reason,
    };

    #[derive(PartialEq, Clone, Copy)]
    enum Layout {
        Plain,
        Indexed,
        Cache,
    }
    let mut layout: Option<Layout> = None;
    let mut plain: Vec<BigInt> = Vec::new();
    let mut indexed: Vec<(i64, BigInt, usize)> = Vec::new();
    let mut cache_basis: Option<String> = None;

    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let this = if line.starts_with("basis=") {
            Layout::Cache
        } else if line.contains(':') {
            Layout::Indexed
        } else {
            Layout::Plain
        };
        match layout {
            None => layout = Some(this),
            Some(l) if l != this => {
                return Err(fail(lineno, "mixes sequence layouts".to_string()));
            }
            _ => {}
        }
        match this {
            Layout::Plain => {
                let term: BigInt = line
                    .parse()
                    .map_err(|_| fail(lineno, format!("not a decimal integer: {line:?}")))?;
                plain.push(term);
            }
            Layout::Indexed => {
                let (idx, value) = line.split_once(':').unwrap();
                let idx: i64 = idx
                    .trim()
                    .parse()
                    .map_err(|_| fail(lineno, format!("bad index: {:?}", idx.trim())))?;
                let value: BigInt = value
                    .trim()
                    .parse()
                    .map_err(|_| fail(lineno, format!("bad value: {:?}", value.trim())))?;
                indexed.push((idx, value, lineno));
            }
            Layout::Cache => {
                let mut basis = None;
                let mut n = None;
                let mut count = None;
                for field in line.split('\t') {
                    match field.split_once('=') {
                        Some(("basis", v)) => basis = Some(v.to_string()),
                        Some(("n", v)) => {
                            n = Some(v.parse::<i64>().map_err(|_| {
                                fail(lineno, format!("bad n field: {v:?}"))
                            })?)
                        }
                        Some(("count", v)) => {
                            count = Some(v.parse::<BigInt>().map_err(|_| {
                                fail(lineno, format!("bad count field: {v:?}"))
                            })?)
                        }
                        _ => return Err(fail(lineno, format!("unrecognized field: {field:?}"))),
                    }
                }
                let (Some(basis), Some(n), Some(count)) = (basis, n, count) else {
                    return Err(fail(lineno, "record needs basis, n and count".to_string()));
                };
                match &cache_basis {
                    None => cache_basis = Some(basis),
                    Some(b) if *b != basis => {
                        return Err(fail(
                            lineno,
                            format!("expected all records to use basis {b}, found {basis}"),
                        ));
                    }
                    _ => {}
                }
                indexed.push((n, count, lineno));
            }
        }
    }

    match layout {
        None => Err(fail(1, "no sequence terms found".to_string())),
        Some(Layout::Plain) => Ok(SequenceFile { terms: plain, index_base: 1 }),
        Some(Layout::Indexed) | Some(Layout::Cache) => {
            indexed.sort_by_key(|&(n, _, _)| n);
            for pair in indexed.windows(2) {
                let (a, b) = (&pair[0], &pair[1]);
                if a.0 == b.0 {
                    return Err(fail(b.2, format!("duplicate index {}", b.0)));
                }
                if b.0 != a.0 + 1 {
                    return Err(fail(b.2, format!("gap between indices {} and {}", a.0, b.0)));
                }
            }
            let index_base = indexed.first().map(|&(n, _, _)| n).unwrap();
            Ok(SequenceFile {
                terms: indexed.into_iter().map(|(_, t, _)| t).collect(),
                index_base,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn big(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    /// Catalan numbers `C_1, C_2, …` by the convolution, an oracle
    /// independent of any enumeration in this crate.
    fn catalan(count: usize) -> Vec<BigInt> {
        let mut with_zero = vec![BigInt::one()];
        for n in 0..count {
            let next: BigInt = (0..=n).map(|i| &with_zero[i] * &with_zero[n - i]).sum();
            with_zero.push(next);
        }
        with_zero[1..].to_vec()
    }

    fn factorials(count: usize) -> Vec<BigInt> {
        let mut terms = Vec::with_capacity(count);
        let mut acc = BigInt::one();
        for n in 1..=count {
            acc *= n;
            terms.push(acc.clone());
        }
        terms
    }

    #[test]
    fn recovers_the_factorial_recurrence() {
        let fit = fit_recurrence(&factorials(10), 1, 1, 1).unwrap();
        assert_eq!(fit.nullspace_dim, 1);
        let rec = fit.recurrence.unwrap();
        // s(n+1) - (n+1)·s(n) = 0.
        assert_eq!(rec.order, 1);
        assert_eq!(rec.degree, 1);
        assert_eq!(rec.coeffs, vec![big(&[-1, -1]), big(&[1])]);
        assert_eq!(rec.to_string(), "(1)*s(n+1) + (-n - 1)*s(n) = 0 for n >= 1");
    }

    #[test]
    fn recovers_the_catalan_recurrence() {
        let fit = fit_recurrence(&catalan(12), 1, 1, 1).unwrap();
        assert_eq!(fit.nullspace_dim, 1);
        let rec = fit.recurrence.unwrap();
        // (n+2)·s(n+1) - (4n+2)·s(n) = 0.
        assert_eq!(rec.coeffs, vec![big(&[-2, -4]), big(&[2, 1])]);
    }

    #[test]
    fn fitted_recurrences_predict_unseen_terms() {
        let rec = fit_recurrence(&catalan(12), 1, 1, 1).unwrap().recurrence.unwrap();
        // Fresh, longer oracle data.
        assert_eq!(verify_recurrence(&rec, &catalan(32), 1).unwrap(), Verification::Valid);

        let rec = fit_recurrence(&factorials(10), 1, 1, 1).unwrap().recurrence.unwrap();
        assert_eq!(verify_recurrence(&rec, &factorials(30), 1).unwrap(), Verification::Valid);
    }

    #[test]
    fn cross_verification_pinpoints_the_first_failure() {
        let factorial_rec = fit_recurrence(&factorials(10), 1, 1, 1).unwrap().recurrence.unwrap();
        // Catalan starts 1, 2 just like factorials, diverges at C_3 = 5:
        // the n = 2 equation s(3) - 3·s(2) = 5 - 6 is the first broken one.
        assert_eq!(
            verify_recurrence(&factorial_rec, &catalan(12), 1).unwrap(),
            Verification::FailsAt { index: 2 }
        );
        assert!(matches!(
            verify_recurrence(&factorial_rec, &catalan(1), 1),
            Err(Error::InsufficientTerms { needed: 2, got: 1 })
        ));
    }

    #[test]
    fn margin_and_degenerate_inputs_are_rejected() {
        assert!(matches!(
            fit_recurrence(&catalan(7), 1, 1, 1),
            Err(Error::InsufficientTerms { needed: 8, got: 7 })
        ));
        assert!(matches!(
            fit_recurrence(&big(&[0, 0, 0, 0, 0, 0, 0, 0]), 1, 1, 1),
            Err(Error::AllZeroSequence)
        ));
        assert!(fit_recurrence(&catalan(10), 0, 1, 1).is_err());
    }

    #[test]
    fn random_sequences_admit_no_recurrence() {
        // Digits of pi pass no exact linear test.
        let junk = big(&[3, 1, 4, 1, 5, 9, 2, 6, 5, 3, 5, 8, 9, 7, 9, 3]);
        let fit = fit_recurrence(&junk, 1, 1, 1).unwrap();
        assert_eq!(fit.nullspace_dim, 0);
        assert!(fit.recurrence.is_none());
        assert!(search_recurrence(&junk, 2, 2, 1).unwrap().is_none());
    }

    #[test]
    fn search_prefers_cheap_shapes() {
        let fit = search_recurrence(&catalan(25), 3, 3, 1).unwrap().unwrap();
        // (r, d) = (1, 1) has 4 unknowns, beaten only by degree-0 shapes
        // that cannot fit Catalan.
        assert_eq!((fit.order, fit.degree), (1, 1));
        // A geometric sequence fits already with constant coefficients.
        let powers: Vec<BigInt> = (0..10).map(|k| BigInt::from(3).pow(k)).collect();
        let fit = search_recurrence(&powers, 2, 2, 0).unwrap().unwrap();
        let rec = fit.recurrence.unwrap();
        assert_eq!((rec.order, rec.degree), (1, 0));
        assert_eq!(rec.coeffs, vec![big(&[-3]), big(&[1])]);
    }

    #[test]
    fn index_base_shifts_consistently() {
        // The same data declared to start at 0 instead of 1 must still
        // fit, with coefficients shifted accordingly: for factorials
        // starting at 0!: s(n+1) = (n+1)·s(n) still, since s(n) = n!.
        let mut from_zero = vec![BigInt::one()];
        from_zero.extend(factorials(9));
        let rec = fit_recurrence(&from_zero, 1, 1, 0).unwrap().recurrence.unwrap();
        assert_eq!(rec.coeffs, vec![big(&[-1, -1]), big(&[1])]);
        assert_eq!(rec.index_base, 0);
        assert_eq!(verify_recurrence(&rec, &from_zero, 0).unwrap(), Verification::Valid);
    }

    #[test]
    fn dimension_above_one_still_yields_a_valid_normalized_pick() {
        // Overparameterize: fit factorials at degree 2. The solution
        // space gains spurious dimensions but the reported recurrence
        // must still hold and be content-normalized.
        let fit = fit_recurrence(&factorials(16), 2, 2, 1).unwrap();
        assert!(fit.nullspace_dim >= 1);
        let rec = fit.recurrence.unwrap();
        assert_eq!(verify_recurrence(&rec, &factorials(24), 1).unwrap(), Verification::Valid);
        let content = rec
            .coeffs
            .iter()
            .flatten()
            .fold(BigInt::zero(), |acc, c| num_integer::gcd(acc, c.abs()));
        assert!(content.is_one());
        assert!(rec.coeffs.last().unwrap().last().unwrap().is_positive());
    }

    #[test]
    fn reads_all_three_file_layouts() {
        let dir = tempfile::tempdir().unwrap();

        let plain = dir.path().join("plain.txt");
        std::fs::write(&plain, "# a comment\n1\n2\n\n6\n24\n").unwrap();
        assert_eq!(
            read_sequence_file(&plain).unwrap(),
            SequenceFile { terms: big(&[1, 2, 6, 24]), index_base: 1 }
        );

        let indexed = dir.path().join("indexed.txt");
        std::fs::write(&indexed, "5: 42\n3: 9\n4: 20\n").unwrap();
        assert_eq!(
            read_sequence_file(&indexed).unwrap(),
            SequenceFile { terms: big(&[9, 20, 42]), index_base: 3 }
        );

        let cache = dir.path().join("cache.txt");
        let mut f = std::fs::File::create(&cache).unwrap();
        writeln!(f, "basis=1,3,2\tn=1\tcount=1").unwrap();
        writeln!(f, "basis=1,3,2\tn=2\tcount=2").unwrap();
        writeln!(f, "basis=1,3,2\tn=3\tcount=5").unwrap();
        drop(f);
        assert_eq!(
            read_sequence_file(&cache).unwrap(),
            SequenceFile { terms: big(&[1, 2, 5]), index_base: 1 }
        );
    }

    #[test]
    fn rejects_malformed_sequence_files() {
        let dir = tempfile::tempdir().unwrap();
        let check = |name: &str, content: &str, needle: &str| {
            let path = dir.path().join(name);
            std::fs::write(&path, content).unwrap();
            match read_sequence_file(&path) {
                Err(Error::FileFormat { reason, .. }) => {
                    assert!(reason.contains(needle), "reason {reason:?} lacks {needle:?}")
                }
                other => panic!("expected a format error for {name}, got {other:?}"),
            }
        };
        check("gap.txt", "1: 1\n3: 5\n", "gap");
        check("dup.txt", "1: 1\n1: 2\n", "duplicate");
        check("mixed.txt", "1\n2: 2\n", "mixes");
        check("junk.txt", "one\n", "not a decimal integer");
        check("empty.txt", "# nothing\n", "no sequence terms");
        check(
            "bases.txt",
            "basis=1,2\tn=1\tcount=1\nbasis=2,1\tn=2\tcount=0\n",
            "expected all records",
        );
        check("fields.txt", "basis=1,2\tn=1\n", "needs basis, n and count");
    }
}
