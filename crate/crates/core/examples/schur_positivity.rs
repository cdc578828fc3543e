//! Matchings weighted by unmatched points and crossings, expanded in
//! fundamental quasisymmetric functions, against the Schur expansion.
//!
//! Run with `cargo run --example schur_positivity -- 5`.

use cyclic_descents::symfun::{lhs_main0, rhs_main0, schur_descent_multiset, verify_main0};
use cyclic_descents::tableau::partitions;

fn main() {
    let n: usize = std::env::args().nth(1).map(|a| a.parse().expect("integer")).unwrap_or(5);

    println!("Schur functions of degree {n} in the fundamental basis:");
    for shape in partitions(n) {
        let terms: Vec<String> = schur_descent_multiset(&shape)
            .iter()
            .map(|(d, c)| if c == 1 { format!("F{d}") } else { format!("{c} F{d}") })
            .collect();
        println!("  s({shape}) weight q^{} t^{}: {}", shape.odd_cols(), shape.height() / 2, terms.join(" + "));
    }

    let (lhs, rhs) = (lhs_main0(n), rhs_main0(n));
    println!(
        "\n{} matchings, {} tableaux, {} distinct (q, t, D) terms",
        lhs.terms().len(),
        rhs.terms().len(),
        lhs.terms().distinct()
    );
    let report = verify_main0(n);
    println!("{}", serde_json::to_string_pretty(&report).expect("json"));

    let eval = lhs.eval(3).expect("valid");
    println!("in three variables: {} monomials counted with multiplicity", eval.len());
}
