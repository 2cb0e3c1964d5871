//! The golden matrix semigroup: two 2×2 matrices over the golden ring
//! whose products are pairwise distinct, realized combinatorially by
//! ladder-shaped graphs paired against boundary caps.
//!
//! Run with: cargo run --example semigroup_words

use gpoly::semigroup::{
    distinct_count, format_word, matrices, parse_word, ping_pong_certificate, word_matrix,
    Letter, SemigroupChecker,
};

fn main() {
    // The generators and their squares in closed form.
    let (a, b, a2, b2) = matrices();
    println!("A  = {a}");
    println!("B  = {b}");
    println!("A² = {a2}");
    println!("B² = {b2}");
    assert_eq!(&a * &a, a2);
    assert_eq!(&b * &b, b2);
    assert_ne!(&a2 * &b2, &b2 * &a2, "the squares do not commute");

    // Words multiply left to right; lowercase letters abbreviate squares.
    let word = parse_word("aab").expect("valid word");
    println!(
        "\nword {} has matrix {}",
        format_word(&word),
        word_matrix(&word)
    );

    // Freeness at the level of squares: all 2ⁿ products of A², B² are
    // distinct, and the number of values a single matrix entry takes
    // grows exponentially.
    println!("\nlength  words  distinct  max entry values");
    for n in [2, 4, 6, 8, 10, 12] {
        let count = distinct_count(n).expect("supported length");
        println!(
            "  {n:>4}  {:>5}  {:>8}  {:>16}",
            count.words, count.matrices, count.entry_values
        );
        assert_eq!(count.matrices, count.words, "all products distinct");
        assert!(
            count.entry_values as f64 >= 2f64.powf(n as f64 / 4.0),
            "entry values grow at least like 2^(n/4)"
        );
    }

    // The ping-pong certificate: each squared generator maps the positive
    // cone strictly inside its own target cone, so no two distinct words
    // can agree.
    let report = ping_pong_certificate();
    assert!(report.passed());
    println!("\nping-pong certificate: {} checks passed", report.num_passed());

    // Matrix entries are graph pairings: a word names a ladder of rungs,
    // the indices pick boundary caps, and the golden-point flow value of
    // the resulting closed graph reproduces the matrix arithmetic.
    let checker = SemigroupChecker::new();
    for (i, j) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        let via_flow = checker.pairing_via_flow(&word, i, j).expect("valid slot");
        let via_matrix = checker.pairing_via_matrices(&word, i, j).expect("valid slot");
        println!("  pairing ({i},{j}): flow engine {via_flow}  matrices {via_matrix}");
        assert_eq!(via_flow, via_matrix);
    }

    let report = checker.crosscheck_words(4).expect("small length");
    assert!(report.passed());
    println!(
        "cross-engine agreement on all words up to length 4 ({} checks)",
        report.num_passed()
    );

    // The growth certificate in graph language: a word of m squared
    // letters is a graph on n = 4m internal vertices, and some pairing
    // slot takes at least 2^(n/16) distinct golden values.
    let report = checker.growth_lower_bound(&[1, 2, 3, 4, 5, 6]).expect("supported lengths");
    assert!(report.passed());
    println!("growth lower bound 2^(n/16): {} checks passed", report.num_passed());

    // At Q = 4 the squared generators act integrally on the two caps.
    let completions: Vec<(Vec<Letter>, usize)> = vec![
        (vec![], 1),
        (vec![], 2),
        (vec![Letter::A], 1),
        (vec![Letter::B], 2),
        (vec![Letter::A, Letter::B], 1),
        (vec![Letter::B, Letter::A], 2),
        (vec![Letter::A, Letter::A], 1),
        (vec![Letter::B, Letter::B], 2),
        (vec![Letter::A, Letter::B, Letter::A], 1),
        (vec![Letter::B, Letter::A, Letter::B], 2),
    ];
    let report = checker.q4_action_check(&completions).expect("valid completions");
    assert!(report.passed());
    println!(
        "integral action at Q = 4 verified against {} completions",
        completions.len()
    );
}
