//! Randomized invariants beyond the exhaustively checked sizes.

use proptest::prelude::*;

use cyclic_descents::bijection::{iota_hat, iota_hat_inverse};
use cyclic_descents::cyclic::{cdes_involution, p_map_involution};
use cyclic_descents::oscillating::{chen_iota_involution, sundaram, sundaram_inverse};
use cyclic_descents::perm::{parse_cycles, standardize};
use cyclic_descents::tableau::{recording_tableau, rs_inverse, rs_pair};
use cyclic_descents::{Matching, OscillatingTableau, Permutation, StandardTableau};

fn permutation(max: usize) -> impl Strategy<Value = Permutation> {
    (0..=max)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

/// An involution on `[n]` pairing the first `n-k` letters of a shuffled list.
fn involution(max: usize, fixed_point_free: bool) -> impl Strategy<Value = Permutation> {
    let n = if fixed_point_free { (0..=max / 2).prop_map(|m| 2 * m).boxed() } else { (0..=max).boxed() };
    n.prop_flat_map(move |n| {
        let k = if fixed_point_free { Just(0).boxed() } else { (0..=n / 2).prop_map(move |h| n - 2 * h).boxed() };
        (Just((1..=n).collect::<Vec<_>>()).prop_shuffle(), k)
    })
    .prop_map(|(v, k)| {
        let n = v.len();
        let mut images: Vec<usize> = (1..=n).collect();
        for pair in v[..n - k].chunks(2) {
            images[pair[0] - 1] = pair[1];
            images[pair[1] - 1] = pair[0];
        }
        Permutation::new(images).unwrap()
    })
}

fn matching(p: &Permutation) -> Matching {
    Matching::from_involution(p).unwrap()
}

proptest! {
    #[test]
    fn one_line_codec_round_trips(p in permutation(12)) {
        prop_assert_eq!(p.to_string().parse::<Permutation>().unwrap(), p);
    }

    #[test]
    fn cycle_codec_round_trips(p in permutation(12)) {
        prop_assert_eq!(parse_cycles(&p.format_cycles(), p.n()).unwrap(), p);
    }

    #[test]
    fn standardize_is_idempotent(p in permutation(10), shift in 1usize..50) {
        let word: Vec<usize> = p.images().iter().map(|x| 3 * x + shift).collect();
        let s = standardize(&word).unwrap();
        prop_assert_eq!(&s, &p);
        prop_assert_eq!(standardize(s.images()).unwrap(), s);
    }

    #[test]
    fn w0_conjugation_is_an_involution(p in permutation(12)) {
        let c = p.conjugate_w0();
        prop_assert_eq!(c.conjugate_w0(), p.clone());
        let n = p.n();
        let reflected: Vec<usize> = p.des().iter().map(|i| n - i).collect();
        let mut sorted = reflected.clone();
        sorted.sort_unstable();
        prop_assert_eq!(c.des().members(), sorted);
    }

    #[test]
    fn rs_round_trips(p in permutation(10)) {
        let (pt, qt) = rs_pair(&p);
        prop_assert_eq!(rs_inverse(&pt, &qt).unwrap(), p.clone());
        prop_assert_eq!(rs_pair(&p.inverse()), (qt, pt));
    }

    #[test]
    fn tableau_codec_round_trips(p in permutation(10)) {
        let t = recording_tableau(&p);
        prop_assert_eq!(t.to_string().parse::<StandardTableau>().unwrap(), t);
    }

    #[test]
    fn sundaram_round_trips(p in involution(14, true)) {
        let o = sundaram(&p).unwrap();
        prop_assert_eq!(o.to_string().parse::<OscillatingTableau>().unwrap(), o.clone());
        prop_assert_eq!(sundaram_inverse(&o).unwrap(), p.clone());
        let image = chen_iota_involution(&p).unwrap();
        prop_assert_eq!(matching(&image).des(), matching(&p).mdes());
        prop_assert_eq!(matching(&image).nesting_number(), matching(&p).crossing_number());
    }

    #[test]
    fn iota_hat_transports_statistics(p in involution(12, false)) {
        let y = iota_hat(&p).unwrap();
        prop_assert_eq!(matching(&p).mdes(), y.des());
        prop_assert_eq!(matching(&p).crossing_number(), matching(&y).nesting_number());
        prop_assert_eq!(y.fixed_points().len(), p.fixed_points().len());
        prop_assert_eq!(iota_hat_inverse(&y).unwrap(), p);
    }

    #[test]
    fn cyclic_descents_are_an_extension(p in involution(11, false)) {
        prop_assume!(p.n() > 0);
        let c = cdes_involution(&p).unwrap();
        prop_assert_eq!(c.restrict_linear(), p.des());
        let next = p_map_involution(&p).unwrap();
        prop_assert_eq!(cdes_involution(&next).unwrap(), c.shift());
        prop_assert_eq!(matching(&next).nesting_number(), matching(&p).nesting_number());
    }

    #[test]
    fn crossing_and_nesting_match_the_oracle(p in involution(16, false)) {
        let m = matching(&p);
        prop_assert_eq!(m.crossing_number(), m.crossing_number_oracle().unwrap());
        prop_assert_eq!(m.nesting_number(), m.nesting_number_oracle().unwrap());
    }

    #[test]
    fn matching_codecs_round_trip(p in involution(14, false)) {
        let m = matching(&p);
        prop_assert_eq!(Matching::parse(&m.to_string(), m.n()).unwrap(), m.clone());
        let json = serde_json::to_string(&m).unwrap();
        prop_assert_eq!(serde_json::from_str::<Matching>(&json).unwrap(), m.clone());
        let mut r = m.clone();
        for _ in 0..m.n() {
            r = r.rotate();
        }
        prop_assert_eq!(r, m);
    }
}
