//! The bijection on involutions with fixed points, traced through its
//! intermediate shuffle.
//!
//! Run with `cargo run --example iota_hat -- '[4,2,6,1,5,3]'`.

use cyclic_descents::bijection::{iota_hat, iota_hat_inverse, phi, q_map, res};
use cyclic_descents::{Matching, Permutation};

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "[4,2,6,1,5,3]".into());
    let pi: Permutation = arg.parse().expect("an involution in one-line notation");
    let (fixed, sigma) = res(&pi).expect("an involution");
    let tau = phi(&pi).expect("an involution");
    let image = q_map(&tau);
    assert_eq!(iota_hat(&pi).expect("an involution"), image);

    let m = Matching::from_involution(&pi).expect("an involution");
    let mi = Matching::from_involution(&image).expect("an involution");
    println!("pi             {pi}  {}", pi.format_cycles());
    println!("fixed points   {fixed:?}");
    println!("restriction    {sigma}");
    println!("shuffle phi    {tau}");
    println!("image          {image}  {}", image.format_cycles());
    println!();
    println!("MDes(pi) = {}   Des(image) = {}", m.mdes(), image.des());
    println!("cr(pi)   = {}        ne(image)  = {}", m.crossing_number(), mi.nesting_number());
    println!("inverse recovers pi: {}", iota_hat_inverse(&image).expect("an involution") == pi);
}
