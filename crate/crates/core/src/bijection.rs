//! The composite bijection `ι̂ = q ∘ φ` on `I_{n,k}` and its pieces.
//!
//! `φ` strips the fixed points, applies `ι` to the remaining perfect
//! matching and re-inserts the fixed positions as the increasing run
//! `n-k+1, …, n`; `q` sends such a shuffle to the involution sharing its
//! recording tableau. Together they carry `MDes` to `Des` and the crossing
//! number to the nesting number.

use std::fmt;

use crate::error::{Error, Result};
use crate::matching::Matching;
use crate::oscillating::chen_iota_involution;
use crate::perm::{standardize, Permutation};
use crate::tableau::{q_inverse_shuffle, recording_tableau, rs_inverse, StandardTableau};

/// A permutation in `I_{n-k,0} ⧢ [n-k+1, …, n]`: the `k` largest letters
/// appear in increasing order and the remaining letters form a
/// fixed-point-free involution.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ShuffleElement {
    word: Permutation,
    k: usize,
}

impl ShuffleElement {
    pub fn new(word: Permutation, k: usize) -> Result<Self> {
        let n = word.n();
        if k > n || (n - k) % 2 == 1 {
            return Err(Error::Parity { n, k });
        }
        let big: Vec<usize> = word.images().iter().copied().filter(|&x| x > n - k).collect();
        if big.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidShuffle(format!("letters {}..={n} of {word} are not increasing", n - k + 1)));
        }
        let t = ShuffleElement { word, k };
        let small = t.small_word();
        if !small.is_involution() || !small.fixed_points().is_empty() {
            return Err(Error::InvalidShuffle(format!(
                "letters 1..={} of {} do not form a fixed-point-free involution",
                n - k,
                t.word
            )));
        }
        Ok(t)
    }

    pub fn word(&self) -> &Permutation {
        &self.word
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.word.n()
    }

    /// Positions holding the letters `n-k+1, …, n`, ascending.
    pub fn big_positions(&self) -> Vec<usize> {
        let n = self.n();
        (1..=n).filter(|&i| self.word.at(i) > n - self.k).collect()
    }

    /// The word with the `k` largest letters deleted, a permutation of `[n-k]`.
    pub fn small_word(&self) -> Permutation {
        let n = self.n();
        let small: Vec<usize> = self.word.images().iter().copied().filter(|&x| x <= n - self.k).collect();
        Permutation::from_images_unchecked(small)
    }
}

impl fmt::Display for ShuffleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word.fmt(f)
    }
}

/// Splits an involution into its fixed-point set and the standardized
/// fixed-point-free involution on the remaining points.
pub fn res(p: &Permutation) -> Result<(Vec<usize>, Permutation)> {
    if !p.is_involution() {
        return Err(Error::NotInvolution);
    }
    let fixed = p.fixed_points();
    let moved: Vec<usize> = (1..=p.n()).filter(|&i| p.at(i) != i).map(|i| p.at(i)).collect();
    Ok((fixed, standardize(&moved)?))
}

/// Inverse of [`res`]: fixes the points of `fixed` and lays `sigma` on the rest.
pub fn unres(fixed: &[usize], sigma: &Permutation) -> Result<Permutation> {
    let n = fixed.len() + sigma.n();
    let free = complement(fixed, n)?;
    let mut images: Vec<usize> = (1..=n).collect();
    for (a, &pos) in free.iter().enumerate() {
        images[pos - 1] = free[sigma.images()[a] - 1];
    }
    Ok(Permutation::from_images_unchecked(images))
}

/// Sorted complement of `set` in `[n]`, checking that `set ⊆ [n]` has no repeats.
fn complement(set: &[usize], n: usize) -> Result<Vec<usize>> {
    let mut mark = vec![false; n + 1];
    for &x in set {
        if x == 0 || x > n {
            return Err(Error::OutOfRange { value: x, n });
        }
        if std::mem::replace(&mut mark[x], true) {
            return Err(Error::RepeatedLetter(x));
        }
    }
    Ok((1..=n).filter(|&i| !mark[i]).collect())
}

/// The shuffle with `n-k+1, …, n` at the positions `big` (increasing) and the
/// one-line word of `sigma` elsewhere.
pub fn emb(big: &[usize], sigma: &Permutation) -> Result<ShuffleElement> {
    let k = big.len();
    let n = k + sigma.n();
    let mut sorted = big.to_vec();
    sorted.sort_unstable();
    let free = complement(&sorted, n)?;
    let mut images = vec![0; n];
    for (step, &pos) in sorted.iter().enumerate() {
        images[pos - 1] = n - k + 1 + step;
    }
    for (a, &pos) in free.iter().enumerate() {
        images[pos - 1] = sigma.images()[a];
    }
    ShuffleElement::new(Permutation::new(images)?, k)
}

/// `ι` extended to involutions with fixed points by leaving the fixed points
/// in place and applying `ι` to the standardized remainder.
pub fn chen_iota_partial(m: &Matching) -> Result<Matching> {
    let (fixed, sigma) = res(&m.to_involution())?;
    Matching::from_involution(&unres(&fixed, &chen_iota_involution(&sigma)?)?)
}

/// `φ = emb ∘ (id, ι) ∘ res`.
pub fn phi(p: &Permutation) -> Result<ShuffleElement> {
    let (fixed, sigma) = res(p)?;
    emb(&fixed, &chen_iota_involution(&sigma)?)
}

pub fn phi_inverse(t: &ShuffleElement) -> Result<Permutation> {
    let sigma = chen_iota_involution(&t.small_word())?;
    unres(&t.big_positions(), &sigma)
}

/// `q(τ) = RS⁻¹(Q_τ, Q_τ)`.
pub fn q_map(t: &ShuffleElement) -> Permutation {
    let q = recording_tableau(t.word());
    rs_inverse(&q, &q).expect("a recording tableau is standard")
}

pub fn q_map_inverse(p: &Permutation) -> Result<ShuffleElement> {
    if !p.is_involution() {
        return Err(Error::NotInvolution);
    }
    let k = p.fixed_points().len();
    let word = q_inverse_shuffle(&recording_tableau(p), k)?;
    ShuffleElement::new(word, k)
}

/// `ι̂ = q ∘ φ`, a bijection of `I_{n,k}` with `MDes(π) = Des(ι̂(π))` and
/// `cr(π) = ne(ι̂(π))`.
pub fn iota_hat(p: &Permutation) -> Result<Permutation> {
    Ok(q_map(&phi(p)?))
}

pub fn iota_hat_inverse(p: &Permutation) -> Result<Permutation> {
    phi_inverse(&q_map_inverse(p)?)
}

/// `h = Q ∘ ι̂ : I_{n,k} → SYT_{n,k}`.
pub fn h_map(p: &Permutation) -> Result<StandardTableau> {
    Ok(recording_tableau(&iota_hat(p)?))
}

pub fn h_map_inverse(t: &StandardTableau) -> Result<Permutation> {
    iota_hat_inverse(&rs_inverse(t, t)?)
}

/// Crossing and nesting numbers of a shuffle, read from its small letters.
pub fn shuffle_cr_ne(t: &ShuffleElement) -> (usize, usize) {
    let m = Matching::from_involution(&t.small_word()).expect("validated on construction");
    (m.crossing_number(), m.nesting_number())
}

/// `I_{n-k,0} ⧢ [n-k+1, …, n]` in full.
pub fn enumerate_shuffle_elements(n: usize, k: usize) -> Result<Vec<ShuffleElement>> {
    crate::tableau::check_nk(n, k)?;
    let inner = crate::matching::enumerate_involutions(n - k, 0)?;
    let tail: Vec<usize> = (n - k + 1..=n).collect();
    let mut out = Vec::new();
    for sigma in inner {
        for word in crate::perm::shuffles(sigma.images(), &tail)? {
            out.push(ShuffleElement::new(word, k)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::matching::enumerate_involutions;
    use crate::perm::{binomial, parse_cycles, perfect_matching_count};
    use crate::tableau::rs_pair;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn stats(x: &Permutation) -> Matching {
        Matching::from_involution(x).unwrap()
    }

    fn cases(max: usize) -> impl Iterator<Item = (usize, usize)> {
        (0..=max).flat_map(|n| (n % 2..=n).step_by(2).map(move |k| (n, k)))
    }

    #[test]
    fn res_examples() {
        assert_eq!(res(&p(&[4, 2, 6, 1, 5, 3])).unwrap(), (vec![2, 5], parse_cycles("(1,3)(2,4)", 4).unwrap()));
        assert_eq!(res(&Permutation::identity(3)).unwrap(), (vec![1, 2, 3], Permutation::identity(0)));
        assert_eq!(res(&p(&[2, 1])).unwrap(), (vec![], p(&[2, 1])));
        assert_eq!(res(&p(&[2, 3, 1])), Err(Error::NotInvolution));
    }

    #[test]
    fn emb_examples() {
        let sigma = parse_cycles("(1,4)(2,3)", 4).unwrap();
        assert_eq!(emb(&[2, 5], &sigma).unwrap().word(), &p(&[4, 5, 3, 2, 6, 1]));
        assert_eq!(emb(&[], &sigma).unwrap().word(), &sigma);
        assert_eq!(emb(&[1, 2, 3], &Permutation::identity(0)).unwrap().word(), &Permutation::identity(3));
        assert!(emb(&[7], &sigma).is_err());
    }

    #[test]
    fn shuffle_element_validation() {
        assert!(ShuffleElement::new(p(&[3, 4, 5, 1, 6, 2]), 2).is_ok());
        assert!(ShuffleElement::new(p(&[3, 4, 6, 1, 5, 2]), 2).is_err());
        assert!(ShuffleElement::new(p(&[1, 2, 3]), 2).is_err());
        assert!(ShuffleElement::new(p(&[2, 3, 1]), 0).is_err());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&p(&[4, 2, 6, 1, 5, 3])).unwrap().word(), &p(&[4, 5, 3, 2, 6, 1]));
        let fpf = parse_cycles("(1,5)(2,4)(3,8)(6,7)", 8).unwrap();
        assert_eq!(phi(&fpf).unwrap().word(), &chen_iota_involution(&fpf).unwrap());
        assert_eq!(phi(&Permutation::identity(4)).unwrap().word(), &Permutation::identity(4));
    }

    #[test]
    fn q_map_examples() {
        let t = ShuffleElement::new(p(&[4, 5, 3, 2, 6, 1]), 2).unwrap();
        assert_eq!(q_map(&t), p(&[1, 6, 4, 3, 5, 2]));
        let sigma = parse_cycles("(1,3)(2,5)(4,6)", 6).unwrap();
        assert_eq!(q_map(&ShuffleElement::new(sigma.clone(), 0).unwrap()), sigma);
        let tau = ShuffleElement::new(p(&[3, 5, 1, 7, 6, 8, 2, 4]), 2).unwrap();
        let q: StandardTableau = "1,2,4,6/3,5,8/7".parse().unwrap();
        assert_eq!(q_map(&tau), rs_inverse(&q, &q).unwrap());
        assert_eq!(q_map_inverse(&q_map(&tau)).unwrap(), tau);
    }

    #[test]
    fn iota_hat_example() {
        let x = p(&[4, 2, 6, 1, 5, 3]);
        let y = iota_hat(&x).unwrap();
        assert_eq!(y, p(&[1, 6, 4, 3, 5, 2]));
        assert_eq!(y.format_cycles(), "(2,6)(3,4)");
        assert_eq!(stats(&x).mdes(), y.des());
        assert_eq!(y.des(), crate::DescentSet::linear(6, [2, 3, 5]).unwrap());
        assert_eq!(stats(&x).crossing_number(), 2);
        assert_eq!(stats(&y).nesting_number(), 2);
        assert_eq!(iota_hat_inverse(&y).unwrap(), x);
        assert_eq!(iota_hat(&Permutation::identity(5)).unwrap(), Permutation::identity(5));
    }

    #[test]
    fn h_examples() {
        let x = p(&[4, 2, 6, 1, 5, 3]);
        let h = h_map(&x).unwrap();
        assert_eq!(h, rs_pair(&p(&[1, 6, 4, 3, 5, 2])).1);
        assert_eq!(h.shape().odd_cols(), 2);
        assert_eq!(h_map_inverse(&h).unwrap(), x);
        assert_eq!(h_map(&Permutation::identity(4)).unwrap(), "1,2,3,4".parse().unwrap());
        let images: BTreeSet<StandardTableau> =
            enumerate_involutions(6, 2).unwrap().iter().map(|x| h_map(x).unwrap()).collect();
        assert_eq!(images.len(), 45);
    }

    #[test]
    fn shuffle_statistics() {
        let t = ShuffleElement::new(p(&[3, 4, 5, 1, 6, 2]), 2).unwrap();
        assert_eq!(shuffle_cr_ne(&t), (2, 1));
        let sigma = parse_cycles("(1,4)(2,3)", 4).unwrap();
        let m = stats(&sigma);
        assert_eq!(shuffle_cr_ne(&ShuffleElement::new(sigma, 0).unwrap()), (m.crossing_number(), m.nesting_number()));
        assert_eq!(shuffle_cr_ne(&ShuffleElement::new(Permutation::identity(4), 4).unwrap()), (0, 0));
    }

    #[test]
    fn chen_with_fixed_points_breaks_descent_transport() {
        let x = parse_cycles("(1,4)(2,5)", 5).unwrap();
        let image = chen_iota_partial(&stats(&x)).unwrap();
        assert_eq!(image.to_involution().format_cycles(), "(1,5)(2,4)");
        assert_eq!(x.des(), crate::DescentSet::linear(5, [2, 3]).unwrap());
        assert_eq!(image.mdes(), crate::DescentSet::linear(5, [3]).unwrap());
        assert_eq!(image.des(), crate::DescentSet::linear(5, [1, 2, 3, 4]).unwrap());
        assert_eq!(stats(&x).mdes(), crate::DescentSet::linear(5, [1, 3, 4]).unwrap());
        assert_ne!(x.des(), image.mdes());
        assert_ne!(image.des(), stats(&x).mdes());
    }

    #[test]
    fn phi_transports_statistics() {
        for (n, k) in cases(8) {
            let mut images = BTreeSet::new();
            for x in enumerate_involutions(n, k).unwrap() {
                let m = stats(&x);
                let t = phi(&x).unwrap();
                let (cr, ne) = shuffle_cr_ne(&t);
                assert_eq!(m.mdes(), t.word().des(), "{x}");
                assert_eq!((m.nesting_number(), m.crossing_number()), (cr, ne), "{x}");
                assert_eq!(phi_inverse(&t).unwrap(), x);
                images.insert(t);
            }
            let all: BTreeSet<_> = enumerate_shuffle_elements(n, k).unwrap().into_iter().collect();
            assert_eq!(all.len(), binomial(n, k) * perfect_matching_count(n - k));
            assert_eq!(images, all, "n={n} k={k}");
        }
    }

    #[test]
    fn q_transports_descents_and_nesting() {
        let mut saw_crossing_change = false;
        for (n, k) in cases(8) {
            for t in enumerate_shuffle_elements(n, k).unwrap() {
                let (cr, ne) = shuffle_cr_ne(&t);
                let (pt, qt) = rs_pair(t.word());
                assert_eq!(ne, qt.height() / 2);
                assert_eq!(qt.shape().odd_cols(), k);
                // the k largest letters of P sit at the bottoms of the odd columns, left to right
                let cols = pt.transpose();
                let bottoms: Vec<usize> =
                    cols.rows().iter().filter(|c| c.len() % 2 == 1).map(|c| *c.last().unwrap()).collect();
                assert_eq!(bottoms, (n - k + 1..=n).collect::<Vec<_>>(), "{t}");
                let image = q_map(&t);
                let m = stats(&image);
                assert_eq!(m.unmatched(), k);
                assert_eq!(image.des(), t.word().des());
                assert_eq!(m.nesting_number(), ne);
                saw_crossing_change |= m.crossing_number() != cr;
                assert_eq!(q_map_inverse(&image).unwrap(), t);
                assert_eq!(q_inverse_shuffle(&qt, k).unwrap(), *t.word());
            }
        }
        assert!(saw_crossing_change);
    }

    #[test]
    fn iota_hat_exhaustive() {
        for (n, k) in cases(8) {
            let all = enumerate_involutions(n, k).unwrap();
            let mut images = BTreeSet::new();
            for x in &all {
                let y = iota_hat(x).unwrap();
                let (mx, my) = (stats(x), stats(&y));
                assert_eq!(my.unmatched(), k);
                assert_eq!(mx.mdes(), y.des());
                assert_eq!(mx.crossing_number(), my.nesting_number());
                assert_eq!(iota_hat_inverse(&y).unwrap(), *x);
                images.insert(y);
            }
            assert_eq!(images.len(), all.len());
        }
    }
}
