//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use cyclic_descents::bijection::{iota_hat, iota_hat_inverse, q_map, ShuffleElement};
use cyclic_descents::cyclic::verify_cdes_classes;
use cyclic_descents::matching::{enumerate_all_matchings, enumerate_involutions, enumerate_matchings};
use cyclic_descents::oscillating::{
    chen_iota_involution, sundaram, verify_chen, verify_kim, verify_roby, verify_sundaram_roundtrip,
};
use cyclic_descents::perm::{
    all_involutions, all_permutations, binomial, parse_cycles, parse_one_line, perfect_matching_count, shuffles,
};
use cyclic_descents::report::Multiset;
use cyclic_descents::symfun::{
    gessel_class, verify_gessel_all, verify_lemma_main1, verify_main0, verify_main11, verify_main111,
};
use cyclic_descents::tableau::{
    enumerate_syt_nk, q_inverse_extractions, q_inverse_shuffle, recording_tableau, rs_inverse, rs_pair,
};
use cyclic_descents::{DescentSet, Matching, Permutation, StandardTableau};

/// Failures collected while a criterion runs.
#[derive(Default)]
struct Check {
    failures: Vec<String>,
}

impl Check {
    fn that(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, got: T, want: T, what: &str) {
        if got != want {
            self.failures.push(format!("{what}: got {got:?}, want {want:?}"));
        }
    }
}

fn lin(n: usize, d: &[usize]) -> DescentSet {
    DescentSet::linear(n, d.iter().copied()).unwrap()
}

fn cyc(n: usize, d: &[usize]) -> DescentSet {
    DescentSet::cyclic(n, d.iter().copied()).unwrap()
}

fn perm(s: &str) -> Permutation {
    parse_one_line(s).unwrap()
}

fn worked_examples(c: &mut Check) {
    let m = Matching::parse("1-6,3-4,5-7", 8).unwrap();
    c.eq(m.mdes(), lin(8, &[2, 3, 5, 6]), "arc diagram MDes");
    c.eq(m.des(), lin(8, &[1, 3, 5]), "arc diagram Des");
    c.eq(m.cmdes(), cyc(8, &[2, 3, 5, 6, 8]), "chord diagram cMDes");
    let r = m.rotate();
    c.eq(r.to_string(), "2-7,4-5,6-8".to_string(), "rotation");
    c.eq(r.cmdes(), cyc(8, &[1, 3, 4, 6, 7]), "rotated cMDes");

    let pi = parse_cycles("(1,5)(2,4)(3,8)(6,7)", 8).unwrap();
    c.eq(sundaram(&pi).unwrap().to_string(), "-;1;1,1;2,1;2;1;1,1;1;-".to_string(), "Sundaram shapes");
    c.eq(chen_iota_involution(&pi).unwrap().format_cycles(), "(1,4)(2,7)(3,5)(6,8)".to_string(), "Chen iota");

    let x = perm("[4,2,6,1,5,3]");
    let y = iota_hat(&x).unwrap();
    c.eq(y.clone(), perm("[1,6,4,3,5,2]"), "iota-hat image");
    let (mx, my) = (Matching::from_involution(&x).unwrap(), Matching::from_involution(&y).unwrap());
    c.eq(mx.mdes(), lin(6, &[2, 3, 5]), "MDes of input");
    c.eq(y.des(), lin(6, &[2, 3, 5]), "Des of output");
    c.eq((mx.crossing_number(), my.nesting_number()), (2, 2), "cr(in), ne(out)");

    let q: StandardTableau = "1,2,4,6/3,5,8/7".parse().unwrap();
    c.eq(q_inverse_shuffle(&q, 2).unwrap(), perm("[3,5,1,7,6,8,2,4]"), "q inverse shuffle");
    c.eq(q_inverse_extractions(&q, 2).unwrap().0.first().copied(), Some(6), "first extraction");

    let class: BTreeSet<Permutation> =
        gessel_class(&parse_cycles("(1,3,2)", 3).unwrap(), &Permutation::identity(1)).unwrap().into_iter().collect();
    let want: BTreeSet<Permutation> =
        ["[3,1,2,4]", "[4,1,3,2]", "[4,2,1,3]", "[1,4,2,3]"].iter().map(|s| perm(s)).collect();
    c.eq(class.clone(), want, "Gessel class");
    let shuf = shuffles(&[3, 1, 2], &[4]).unwrap();
    let des = |v: &mut dyn Iterator<Item = &Permutation>| v.map(Permutation::des).collect::<Multiset<_>>();
    c.eq(des(&mut class.iter()), des(&mut shuf.iter()), "Gessel descent multisets");
}

fn counting(c: &mut Check) {
    for (n2, want) in [(2, 1), (4, 3), (6, 15), (8, 105), (10, 945)] {
        c.eq(enumerate_matchings(n2, 0).unwrap().len(), want, &format!("|M_{{{n2},0}}|"));
    }
    for n in 0..=9 {
        for k in (n % 2..=n).step_by(2) {
            let want = binomial(n, k) * perfect_matching_count(n - k);
            c.eq(enumerate_involutions(n, k).unwrap().len(), want, &format!("|I_{{{n},{k}}}|"));
            c.eq(enumerate_syt_nk(n, k).unwrap().len(), want, &format!("|SYT_{{{n},{k}}}|"));
        }
    }
}

fn equidistribution(c: &mut Check) {
    for n2 in (0..=10).step_by(2) {
        let r = verify_lemma_main1(n2).unwrap();
        c.that(r.ok, || format!("matching symmetry 2n={n2}: {:?}", r.witness_diff));
    }
    for n in 0..=9 {
        for k in (n % 2..=n).step_by(2) {
            let r = verify_main11(n, k).unwrap();
            c.that(r.ok, || format!("cr/MDes vs ne/Des n={n} k={k}: {:?}", r.witness_diff));
            let r = verify_main111(n, k).unwrap();
            c.that(r.ok, || format!("cr,ne/MDes vs ne,cr/Des n={n} k={k}: {:?}", r.witness_diff));
        }
        let r = verify_main0(n);
        c.that(r.ok, || format!("Schur expansion n={n}: {:?}", r.witness_diff));
    }
}

fn round_trips(c: &mut Check) {
    for n2 in (0..=10).step_by(2) {
        let r = verify_sundaram_roundtrip(n2).unwrap();
        c.that(r.ok, || format!("Sundaram 2n={n2}: {:?}", r.witness_diff));
    }
    for n in 0..=8 {
        for k in (n % 2..=n).step_by(2) {
            for x in enumerate_involutions(n, k).unwrap() {
                let back = iota_hat_inverse(&iota_hat(&x).unwrap()).unwrap();
                c.that(back == x, || format!("iota-hat round trip at {x}"));
            }
        }
    }
    for n in 0..=7 {
        for p in all_permutations(n) {
            let (pt, qt) = rs_pair(&p);
            c.that(rs_inverse(&pt, &qt).unwrap() == p, || format!("RS round trip at {p}"));
        }
    }
    for n in 0..=8 {
        for k in (n % 2..=n).step_by(2) {
            let tail: Vec<usize> = (n - k + 1..=n).collect();
            for sigma in enumerate_involutions(n - k, 0).unwrap() {
                for tau in shuffles(sigma.images(), &tail).unwrap() {
                    let q = recording_tableau(&tau);
                    c.that(q_inverse_shuffle(&q, k).unwrap() == tau, || format!("q inverse at {tau}"));
                    let t = ShuffleElement::new(tau.clone(), k).unwrap();
                    c.that(recording_tableau(&q_map(&t)) == q, || format!("q keeps the recording tableau of {tau}"));
                }
            }
        }
    }
}

fn structural(c: &mut Check) {
    for n2 in (0..=10).step_by(2) {
        let r = verify_chen(n2).unwrap();
        c.that(r.ok, || format!("Chen transport 2n={n2}: {:?}", r.witness_diff));
        let r = verify_kim(n2).unwrap();
        c.that(r.ok, || format!("Kim descents 2n={n2}: {:?}", r.witness_diff));
    }
    for n2 in (0..=8).step_by(2) {
        let r = verify_roby(n2).unwrap();
        c.that(r.ok, || format!("w0 reversal 2n={n2}: {:?}", r.witness_diff));
    }
    for n in 0..=8 {
        for p in all_involutions(n) {
            let ne = Matching::from_involution(&p).unwrap().nesting_number();
            let h = recording_tableau(&p).height();
            c.that(ne == h / 2, || format!("ne({p}) = {ne}, height {h}"));
        }
    }
    // Chen's map applied to the moved points only, fixed points left alone
    let pi = parse_cycles("(1,4)(2,5)", 5).unwrap();
    let sigma = cyclic_descents::bijection::chen_iota_partial(&Matching::from_involution(&pi).unwrap()).unwrap();
    c.eq(sigma.to_involution().format_cycles(), "(1,5)(2,4)".to_string(), "partial Chen image");
    let m = Matching::from_involution(&pi).unwrap();
    c.eq((pi.des(), sigma.mdes()), (lin(5, &[2, 3]), lin(5, &[3])), "Des(pi), MDes(sigma)");
    c.eq((sigma.des(), m.mdes()), (lin(5, &[1, 2, 3, 4]), lin(5, &[1, 3, 4])), "Des(sigma), MDes(pi)");
    c.that(pi.des() != sigma.mdes() && sigma.des() != m.mdes(), || "descent transport unexpectedly holds".into());
}

fn cyclic_suite(c: &mut Check) {
    for n in 0..=8 {
        for k in (n % 2..=n).step_by(2) {
            let r = verify_cdes_classes(n, k, None).unwrap();
            c.that(r.ok, || format!("cyclic extension n={n} k={k}: {:?}", r.witness_diff));
        }
    }
}

fn gessel(c: &mut Check) {
    let r = verify_gessel_all(7).unwrap();
    c.that(r.ok, || format!("Gessel: {:?}", r.witness_diff));
    c.that(r.counts.get("pairs").copied().unwrap_or(0) > 0, || "no pairs checked".into());
}

fn oracle(c: &mut Check) {
    for n in 0..=9 {
        for m in enumerate_all_matchings(n) {
            let cr = m.crossing_number_oracle().unwrap();
            let ne = m.nesting_number_oracle().unwrap();
            c.that((m.crossing_number(), m.nesting_number()) == (cr, ne), || format!("{m} on {n} points"));
        }
    }
}

type Criterion = (&'static str, fn(&mut Check), Option<Duration>);

fn main() {
    let criteria: [Criterion; 8] = [
        ("worked examples", worked_examples, Some(Duration::from_secs(1))),
        ("counting identities", counting, None),
        ("equidistribution", equidistribution, Some(Duration::from_secs(60))),
        ("bijection round trips", round_trips, None),
        ("structural transport", structural, None),
        ("cyclic extensions", cyclic_suite, None),
        ("Gessel shuffles", gessel, Some(Duration::from_secs(30))),
        ("oracle equivalence", oracle, None),
    ];
    let mut failed = 0;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let mut c = Check::default();
        let start = Instant::now();
        run(&mut c);
        let elapsed = start.elapsed();
        if let Some(b) = budget.filter(|&b| elapsed > b) {
            c.failures.push(format!("took {elapsed:?}, budget {b:?}"));
        }
        if c.failures.is_empty() {
            println!("criterion {} ({name}): PASS in {:.3}s", i + 1, elapsed.as_secs_f64());
        } else {
            failed += 1;
            println!("criterion {} ({name}): FAIL in {:.3}s", i + 1, elapsed.as_secs_f64());
            for f in c.failures.iter().take(10) {
                println!("    {f}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
