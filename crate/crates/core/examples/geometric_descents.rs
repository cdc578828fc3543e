//! Standard, geometric and cyclic geometric descents of a matching, and how
//! the cyclic ones shift under rotation.
//!
//! Run with `cargo run --example geometric_descents`.

use cyclic_descents::Matching;

fn main() {
    let m = Matching::parse("1-6,3-4,5-7", 8).expect("valid arcs");
    println!("matching        {m} on {} points", m.n());
    println!("as involution   {}", m.to_involution());
    println!("Des             {}", m.des());
    println!("MDes            {}", m.mdes());
    println!("cMDes           {}", m.cmdes());

    let r = m.rotate();
    println!();
    println!("rotated         {r}");
    println!("cMDes           {}", r.cmdes());
    println!("shifted cMDes   {}", m.cmdes().shift());
    assert_eq!(r.cmdes(), m.cmdes().shift());

    println!();
    println!("{:<12} {:<10} {:<10} {:<12}", "matching", "Des", "MDes", "cMDes");
    for m in cyclic_descents::matching::enumerate_matchings(4, 0).expect("valid size") {
        println!(
            "{:<12} {:<10} {:<10} {:<12}",
            m.to_string(),
            m.des().to_string(),
            m.mdes().to_string(),
            m.cmdes().to_string()
        );
    }
}
