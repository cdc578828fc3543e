//! Cyclic descent sets on involutions and tableaux: the orbits of the
//! transported rotation and which classes are Escherian.
//!
//! Run with `cargo run --example cyclic_extension -- 6 2`.

use cyclic_descents::cyclic::{
    cdes_involution, classify_escherian, orbits, p_map_involution, verify_cdes, verify_cdes_involutions,
    verify_cdes_syt, TableExtension,
};
use cyclic_descents::matching::enumerate_inkj;

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let (n, k) = (args.first().copied().unwrap_or(6), args.get(1).copied().unwrap_or(2));

    for j in 0..=(n - k) / 2 {
        let ground = enumerate_inkj(n, k, j).expect("valid parameters");
        if ground.is_empty() {
            continue;
        }
        println!("I_{{{n},{k},{j}}}: {} involutions, {}", ground.len(), classify_escherian(n, k, j).expect("valid"));
        for orbit in orbits(&ground, p_map_involution).expect("a bijection") {
            let chain: Vec<String> = orbit
                .iter()
                .map(|p| format!("{} {}", p.format_cycles(), cdes_involution(p).expect("involution")))
                .collect();
            println!("  {}", chain.join(" -> "));
        }
        let inv = verify_cdes_involutions(n, k, j).expect("valid");
        let syt = verify_cdes_syt(n, k, j).expect("valid");
        println!("  involutions: {}", serde_json::to_string(&inv).expect("json"));
        println!("  tableaux:    {}", serde_json::to_string(&syt).expect("json"));
    }

    let table = TableExtension::transpositions_s4();
    let report =
        verify_cdes("transpositions in S4", &table.ground(), |p| Ok(p.des()), |p| table.cdes(p), |p| table.p(p))
            .expect("a bijection");
    println!("\nhand-built table on S4 transpositions: {}", serde_json::to_string(&report).expect("json"));
}
