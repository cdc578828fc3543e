//! Sundaram's bijection to oscillating tableaux, Chen's involution obtained by
//! transposing, and the descent sets read off the tableau.
//!
//! Run with `cargo run --example sundaram_chen`.

use cyclic_descents::oscillating::{chen_iota_involution, sundaram, sundaram_inverse, sundaram_tableaux};
use cyclic_descents::perm::parse_cycles;
use cyclic_descents::Matching;

fn main() {
    let pi = parse_cycles("(1,5)(2,4)(3,8)(6,7)", 8).expect("cycle notation");
    println!("pi = {}", pi.format_cycles());
    for (step, t) in sundaram_tableaux(&pi).expect("fixed-point-free").iter().enumerate() {
        println!("  T{step} = {t}");
    }
    let o = sundaram(&pi).expect("fixed-point-free");
    println!("s(pi)    = {o}");
    println!("tr s(pi) = {}", o.transpose());
    println!("Kim descents of s(pi) = {}, Des(pi) = {}", o.kim_des(), pi.des());
    assert_eq!(sundaram_inverse(&o).expect("valid"), pi);

    let image = chen_iota_involution(&pi).expect("fixed-point-free");
    let (m, mi) =
        (Matching::from_involution(&pi).expect("involution"), Matching::from_involution(&image).expect("involution"));
    println!("\niota(pi) = {}", image.format_cycles());
    println!("cr(pi) = {}, ne(pi) = {}", m.crossing_number(), m.nesting_number());
    println!("cr(iota) = {}, ne(iota) = {}", mi.crossing_number(), mi.nesting_number());
    println!("MDes(pi) = {}, Des(iota(pi)) = {}", m.mdes(), image.des());
}
