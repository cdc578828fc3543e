//! Crossing and nesting numbers: the joint distribution over perfect
//! matchings, its symmetry, and agreement with the brute-force definition.
//!
//! Run with `cargo run --example crossing_nesting -- 8`.

use std::collections::BTreeMap;

use cyclic_descents::matching::enumerate_matchings;

fn main() {
    let n: usize = std::env::args().nth(1).map(|a| a.parse().expect("integer")).unwrap_or(8);
    let ms = enumerate_matchings(n, 0).expect("even size");
    let mut table: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for m in &ms {
        *table.entry((m.crossing_number(), m.nesting_number())).or_default() += 1;
        assert_eq!(m.crossing_number(), m.crossing_number_oracle().expect("small"));
        assert_eq!(m.nesting_number(), m.nesting_number_oracle().expect("small"));
    }
    // every arc is a crossing family and a nesting family of size one
    let (low, top) = (usize::from(n > 0), n / 2);
    println!("perfect matchings on {n} points by (cr, ne), {} in total", ms.len());
    print!("cr\\ne");
    for ne in low..=top {
        print!("{ne:>6}");
    }
    println!();
    for cr in low..=top {
        print!("{cr:>5}");
        for ne in low..=top {
            print!("{:>6}", table.get(&(cr, ne)).copied().unwrap_or(0));
        }
        println!();
    }
    let symmetric = table.iter().all(|(&(c, e), &v)| table.get(&(e, c)) == Some(&v));
    println!("symmetric: {symmetric}");
}
