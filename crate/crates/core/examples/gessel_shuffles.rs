//! Permutations whose cycles carry two fixed patterns, compared by descent
//! set with the shuffles of those patterns.
//!
//! Run with `cargo run --example gessel_shuffles`.

use cyclic_descents::perm::parse_cycles;
use cyclic_descents::report::Multiset;
use cyclic_descents::symfun::{gessel_class, gessel_shuffles, verify_gessel_all};
use cyclic_descents::Permutation;

fn main() {
    let pi = parse_cycles("(1,3,2)", 3).expect("cycles");
    let sigma = Permutation::identity(1);
    let class = gessel_class(&pi, &sigma).expect("coprime cycle types");
    let shuf = gessel_shuffles(&pi, &sigma).expect("disjoint letters");
    println!("{:<24} {:<24}", "class", "shuffles");
    for (a, b) in class.iter().zip(&shuf) {
        println!("{:<12} {:<11} {:<12} {:<11}", a.to_string(), a.des().to_string(), b.to_string(), b.des().to_string());
    }
    let da: Multiset<_> = class.iter().map(Permutation::des).collect();
    let db: Multiset<_> = shuf.iter().map(Permutation::des).collect();
    println!("same descent distribution: {}", da == db);

    let report = verify_gessel_all(6).expect("small size");
    println!("\nall coprime pairs up to size 6: ok={} pairs={}", report.ok, report.counts["pairs"]);
}
