//! Row insertion, its inverse, jeu de taquin deletion, and the inverse
//! recording map for shuffles.
//!
//! Run with `cargo run --example robinson_schensted`.

use cyclic_descents::tableau::{q_inverse_extractions, q_inverse_shuffle, rs_inverse, rs_pair};
use cyclic_descents::{Permutation, StandardTableau};

fn main() {
    let p: Permutation = "[6,2,4,3,7,1,5,8]".parse().expect("one-line notation");
    let (pt, qt) = rs_pair(&p);
    println!("pi = {p}");
    println!("P  = {pt}");
    println!("Q  = {qt}");
    println!("Des(pi) = {}, Des(Q) = {}", p.des(), qt.des().expect("standard"));
    assert_eq!(rs_inverse(&pt, &qt).expect("same shape"), p);

    // an involution has P = Q, and its fixed points count the odd columns
    let inv: Permutation = "[2,1,4,3,5]".parse().expect("one-line notation");
    let (pi, qi) = rs_pair(&inv);
    println!(
        "\n{inv}: P = {pi}, Q = {qi}, {} fixed points, {} odd columns",
        inv.fixed_points().len(),
        qi.shape().odd_cols()
    );

    let t: StandardTableau = "1,2,4,6/3,5,8/7".parse().expect("tableau");
    let deleted = t.jdt_delete(3).expect("3 is present");
    println!("\njeu de taquin: delete 3 from {t} -> {deleted}");

    let (positions, residue) = q_inverse_extractions(&t, 2).expect("two odd columns");
    println!("\nextractions from Q = {t}: positions {positions:?}, residue {residue}");
    println!("shuffle with Q as recording tableau: {}", q_inverse_shuffle(&t, 2).expect("valid"));
}
