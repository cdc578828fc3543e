//! Partial matchings on `n` labelled points: standard, geometric and cyclic
//! geometric descents, crossing and nesting numbers, rotation, enumeration.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::descent::DescentSet;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tableau::{check_nk, check_nkj};
use crate::MAX_N;

/// A set of pairwise disjoint arcs on the points `1..=n`.
///
/// Identified with the involution swapping the endpoints of every arc;
/// unmatched points are its fixed points.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "MatchingRepr", into = "MatchingRepr")]
pub struct Matching {
    n: usize,
    // partner[i-1] = j for an arc {i,j}, 0 when i is unmatched
    partner: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct MatchingRepr {
    n: usize,
    arcs: Vec<[usize; 2]>,
}

impl TryFrom<MatchingRepr> for Matching {
    type Error = Error;

    fn try_from(r: MatchingRepr) -> Result<Self> {
        Matching::new(r.n, r.arcs.iter().map(|a| (a[0], a[1])))
    }
}

impl From<Matching> for MatchingRepr {
    fn from(m: Matching) -> Self {
        MatchingRepr { n: m.n, arcs: m.arcs().into_iter().map(|(i, j)| [i, j]).collect() }
    }
}

/// The statistics tabulated for a matching.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct StatTuple {
    pub des: DescentSet,
    pub mdes: DescentSet,
    pub cmdes: DescentSet,
    pub cr: usize,
    pub ne: usize,
    pub um: usize,
}

fn arcs_cross((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    let (a, b) = (a.min(b), a.max(b));
    let (c, d) = (c.min(d), c.max(d));
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

impl Matching {
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(n: usize, arcs: I) -> Result<Self> {
        if n > MAX_N {
            return Err(Error::TooLarge(n));
        }
        let mut partner = vec![0; n];
        for (i, j) in arcs {
            for x in [i, j] {
                if x == 0 || x > n {
                    return Err(Error::OutOfRange { value: x, n });
                }
            }
            if i == j {
                return Err(Error::Parse(format!("arc {i}-{j} joins a point to itself")));
            }
            for x in [i, j] {
                if partner[x - 1] != 0 {
                    return Err(Error::OverlappingCycles(x));
                }
            }
            partner[i - 1] = j;
            partner[j - 1] = i;
        }
        Ok(Matching { n, partner })
    }

    /// The matching with no arcs.
    pub fn empty(n: usize) -> Self {
        Matching { n, partner: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Partner of point `i`, if matched.
    pub fn partner(&self, i: usize) -> Option<usize> {
        match self.partner[i - 1] {
            0 => None,
            j => Some(j),
        }
    }

    /// Arcs `(i, j)` with `i < j`, sorted by left endpoint.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (1..=self.n).filter_map(|i| self.partner(i).filter(|&j| j > i).map(|j| (i, j))).collect()
    }

    /// Number of unmatched points.
    pub fn unmatched(&self) -> usize {
        self.partner.iter().filter(|&&j| j == 0).count()
    }

    pub fn unmatched_points(&self) -> Vec<usize> {
        (1..=self.n).filter(|&i| self.partner(i).is_none()).collect()
    }

    pub fn is_perfect(&self) -> bool {
        self.unmatched() == 0
    }

    pub fn to_involution(&self) -> Permutation {
        Permutation::from_images_unchecked((1..=self.n).map(|i| self.partner(i).unwrap_or(i)).collect())
    }

    pub fn from_involution(p: &Permutation) -> Result<Self> {
        if !p.is_involution() {
            return Err(Error::NotInvolution);
        }
        let partner = (1..=p.n()).map(|i| if p.at(i) == i { 0 } else { p.at(i) }).collect();
        Ok(Matching { n: p.n(), partner })
    }

    /// Descent set of the corresponding involution.
    pub fn des(&self) -> DescentSet {
        self.to_involution().des()
    }

    fn geometric_descent_at(&self, i: usize, next: usize) -> bool {
        match (self.partner(i), self.partner(next)) {
            (Some(a), _) if a == next => true,
            (Some(a), Some(b)) => arcs_cross((i, a), (next, b)),
            (None, Some(_)) => true,
            _ => false,
        }
    }

    /// Geometric descents: `i ∈ [n-1]` such that `{i,i+1}` is an arc, the arcs
    /// at `i` and `i+1` cross, or `i` is unmatched while `i+1` is matched.
    pub fn mdes(&self) -> DescentSet {
        let mut d = DescentSet::empty(self.n);
        for i in 1..self.n {
            if self.geometric_descent_at(i, i + 1) {
                d.insert(i);
            }
        }
        d
    }

    /// Cyclic geometric descents: the same three conditions for `i ∈ [n]`
    /// with `i+1` read modulo `n` and arcs drawn as chords of a circle.
    ///
    /// Two chords with distinct endpoints meet inside the circle exactly when
    /// their endpoints interleave, which is the linear crossing test.
    pub fn cmdes(&self) -> DescentSet {
        let mut d = DescentSet::empty_cyclic(self.n);
        for i in 1..=self.n {
            if self.geometric_descent_at(i, i % self.n + 1) {
                d.insert(i);
            }
        }
        d
    }

    /// Rotation `i ↦ i+1 (mod n)` of every label.
    pub fn rotate(&self) -> Matching {
        let n = self.n;
        let mut partner = vec![0; n];
        for i in 1..=n {
            if let Some(j) = self.partner(i) {
                partner[i % n] = j % n + 1;
            }
        }
        Matching { n, partner }
    }

    /// Arcs spanning each gap `t` (`i ≤ t < j`), sorted by left endpoint.
    fn spanning_right_ends(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        let arcs = self.arcs();
        (1..self.n).map(move |t| arcs.iter().filter(|&&(i, j)| i <= t && t < j).map(|&(_, j)| j).collect())
    }

    /// Largest family of pairwise crossing arcs.
    ///
    /// A crossing family `i₁<…<i_r<j₁<…<j_r` is exactly a set of arcs that all
    /// span the gap after `i_r` and whose right ends increase with the left
    /// ends, so the answer is a longest increasing run per gap.
    pub fn crossing_number(&self) -> usize {
        self.spanning_right_ends().map(|ends| longest_increasing(ends.iter().copied())).max().unwrap_or(0)
    }

    /// Largest family of pairwise nested arcs; decreasing right ends per gap.
    pub fn nesting_number(&self) -> usize {
        self.spanning_right_ends()
            .map(|ends| longest_increasing(ends.iter().map(|&j| usize::MAX - j)))
            .max()
            .unwrap_or(0)
    }

    /// Crossing number by scanning every subset of arcs.
    pub fn crossing_number_oracle(&self) -> Result<usize> {
        self.subset_oracle(|(a, b), (c, d)| a < c && c < b && b < d)
    }

    /// Nesting number by scanning every subset of arcs.
    pub fn nesting_number_oracle(&self) -> Result<usize> {
        self.subset_oracle(|(a, b), (c, d)| a < c && c < d && d < b)
    }

    fn subset_oracle(&self, related: impl Fn((usize, usize), (usize, usize)) -> bool) -> Result<usize> {
        const MAX_ARCS: usize = 16;
        let arcs = self.arcs();
        if arcs.len() > MAX_ARCS {
            return Err(Error::OracleGuard { found: arcs.len(), max: MAX_ARCS });
        }
        let mut best = 0;
        for mask in 0u32..1 << arcs.len() {
            let chosen: Vec<_> = (0..arcs.len()).filter(|b| mask >> b & 1 == 1).map(|b| arcs[b]).collect();
            let ok = chosen.iter().enumerate().all(|(s, &x)| chosen[s + 1..].iter().all(|&y| related(x, y)));
            if ok {
                best = best.max(chosen.len());
            }
        }
        Ok(best)
    }

    pub fn stats(&self) -> StatTuple {
        StatTuple {
            des: self.des(),
            mdes: self.mdes(),
            cmdes: self.cmdes(),
            cr: self.crossing_number(),
            ne: self.nesting_number(),
            um: self.unmatched(),
        }
    }

    /// Parses the arc list codec `1-6,3-4,5-7` on `n` points.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() || compact == "-" {
            return Ok(Matching::empty(n));
        }
        let arcs = compact
            .split(',')
            .map(|tok| {
                let (a, b) = tok.split_once('-').ok_or_else(|| Error::Parse(format!("expected i-j, got {tok:?}")))?;
                let parse = |s: &str| s.parse::<usize>().map_err(|_| Error::Parse(format!("bad point {s:?}")));
                Ok((parse(a)?, parse(b)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Matching::new(n, arcs)
    }
}

/// Arc list codec, e.g. `1-6,3-4,5-7`; `-` for the empty matching.
impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arcs = self.arcs();
        if arcs.is_empty() {
            return f.write_str("-");
        }
        let parts: Vec<String> = arcs.iter().map(|(i, j)| format!("{i}-{j}")).collect();
        f.write_str(&parts.join(","))
    }
}

fn longest_increasing(seq: impl Iterator<Item = usize>) -> usize {
    let mut tails: Vec<usize> = Vec::new();
    for x in seq {
        let pos = tails.partition_point(|&t| t < x);
        if pos == tails.len() {
            tails.push(x);
        } else {
            tails[pos] = x;
        }
    }
    tails.len()
}

/// `M_{n,k}`: matchings on `n` points with exactly `k` unmatched points.
///
/// The smallest undecided point is either left unmatched or paired with a
/// larger point, in that order, giving a fixed canonical sequence.
pub fn enumerate_matchings(n: usize, k: usize) -> Result<Vec<Matching>> {
    check_nk(n, k)?;
    let mut out = Vec::new();
    let mut partner = vec![usize::MAX; n];
    matchings_rec(&mut partner, k, &mut out);
    Ok(out)
}

fn matchings_rec(partner: &mut Vec<usize>, budget: usize, out: &mut Vec<Matching>) {
    let Some(p) = partner.iter().position(|&x| x == usize::MAX) else {
        out.push(Matching { n: partner.len(), partner: partner.clone() });
        return;
    };
    let undecided = partner.iter().filter(|&&x| x == usize::MAX).count();
    if budget > 0 {
        partner[p] = 0;
        matchings_rec(partner, budget - 1, out);
    }
    if undecided > budget {
        for q in p + 1..partner.len() {
            if partner[q] == usize::MAX {
                partner[p] = q + 1;
                partner[q] = p + 1;
                matchings_rec(partner, budget, out);
                partner[q] = usize::MAX;
            }
        }
    }
    partner[p] = usize::MAX;
}

/// `M_n`: all matchings on `n` points, grouped by increasing number of
/// unmatched points.
pub fn enumerate_all_matchings(n: usize) -> Vec<Matching> {
    (n % 2..=n).step_by(2).flat_map(|k| enumerate_matchings(n, k).expect("valid parity")).collect()
}

/// `I_{n,k,j}`: involutions with `k` fixed points and nesting number `j`.
pub fn enumerate_inkj(n: usize, k: usize, j: usize) -> Result<Vec<Permutation>> {
    check_nkj(n, k, j)?;
    Ok(enumerate_matchings(n, k)?.into_iter().filter(|m| m.nesting_number() == j).map(|m| m.to_involution()).collect())
}

/// `I_{n,k}` as involutions.
pub fn enumerate_involutions(n: usize, k: usize) -> Result<Vec<Permutation>> {
    Ok(enumerate_matchings(n, k)?.iter().map(Matching::to_involution).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{binomial, perfect_matching_count};
    use crate::tableau::recording_tableau;

    fn m(n: usize, s: &str) -> Matching {
        Matching::parse(s, n).unwrap()
    }

    fn lin(n: usize, v: &[usize]) -> DescentSet {
        DescentSet::linear(n, v.iter().copied()).unwrap()
    }

    fn cyc(n: usize, v: &[usize]) -> DescentSet {
        DescentSet::cyclic(n, v.iter().copied()).unwrap()
    }

    #[test]
    fn involution_identification() {
        let fig = m(8, "1-6,3-4,5-7");
        assert_eq!(fig.to_involution().images(), &[6, 2, 4, 3, 7, 1, 5, 8]);
        assert_eq!(Matching::empty(3).to_involution(), Permutation::identity(3));
        let x = Matching::from_involution(&Permutation::new(vec![2, 1, 4, 3]).unwrap()).unwrap();
        assert_eq!(x.arcs(), vec![(1, 2), (3, 4)]);
        assert_eq!(Matching::from_involution(&Permutation::new(vec![2, 3, 1]).unwrap()), Err(Error::NotInvolution));
    }

    #[test]
    fn descent_examples() {
        let fig = m(8, "1-6,3-4,5-7");
        assert_eq!(fig.des(), lin(8, &[1, 3, 5]));
        assert_eq!(fig.mdes(), lin(8, &[2, 3, 5, 6]));
        assert_eq!(fig.cmdes(), cyc(8, &[2, 3, 5, 6, 8]));
        assert!(Matching::empty(5).des().is_empty());
        assert!(Matching::empty(5).mdes().is_empty());
        assert_eq!(m(4, "1-3,2-4").des(), lin(4, &[2]));
        assert_eq!(m(4, "1-3,2-4").mdes(), lin(4, &[1, 2, 3]));
        assert_eq!(m(2, "1-2").cmdes(), cyc(2, &[1, 2]));
    }

    #[test]
    fn rotation_examples() {
        let fig = m(8, "1-6,3-4,5-7");
        let r = fig.rotate();
        assert_eq!(r, m(8, "2-7,4-5,6-8"));
        assert_eq!(r.cmdes(), cyc(8, &[1, 3, 4, 6, 7]));
        assert_eq!(r.mdes(), lin(8, &[1, 3, 4, 6, 7]));
        assert_eq!(Matching::empty(4).rotate(), Matching::empty(4));
        let mut x = fig.clone();
        for _ in 0..8 {
            x = x.rotate();
        }
        assert_eq!(x, fig);
    }

    #[test]
    fn crossing_nesting_examples() {
        let fig = m(8, "1-6,3-4,5-7");
        assert_eq!((fig.crossing_number(), fig.nesting_number()), (2, 2));
        assert_eq!((m(5, "2-4").crossing_number(), m(5, "2-4").nesting_number()), (1, 1));
        assert_eq!((m(4, "1-3,2-4").crossing_number(), m(4, "1-3,2-4").nesting_number()), (2, 1));
        assert_eq!((m(4, "1-4,2-3").crossing_number(), m(4, "1-4,2-3").nesting_number()), (1, 2));
        assert_eq!(Matching::empty(3).crossing_number(), 0);
        assert_eq!(Matching::empty(3).nesting_number_oracle().unwrap(), 0);
        let diam = Matching::new(8, (1..=4).map(|i| (i, i + 4))).unwrap();
        assert_eq!(diam.crossing_number(), 4);
        assert_eq!(diam.crossing_number_oracle().unwrap(), 4);
    }

    #[test]
    fn oracle_agreement_exhaustive() {
        for n in 0..=9 {
            for x in enumerate_all_matchings(n) {
                assert_eq!(x.crossing_number(), x.crossing_number_oracle().unwrap(), "{x}");
                assert_eq!(x.nesting_number(), x.nesting_number_oracle().unwrap(), "{x}");
            }
        }
    }

    #[test]
    fn oracle_guard() {
        let big = Matching::new(34, (1..=17).map(|i| (i, i + 17))).unwrap();
        assert_eq!(big.crossing_number_oracle(), Err(Error::OracleGuard { found: 17, max: 16 }));
    }

    #[test]
    fn cyclic_observations() {
        let mut saw_nesting_change = false;
        for n in 1..=9 {
            for x in enumerate_all_matchings(n) {
                let c = x.cmdes();
                assert_eq!(c.restrict_linear(), x.mdes());
                assert_eq!(x.rotate().cmdes(), c.shift());
                assert_eq!(x.rotate().crossing_number(), x.crossing_number());
                saw_nesting_change |= x.rotate().nesting_number() != x.nesting_number();
                let k = x.unmatched();
                assert_eq!(c.is_empty(), k == n, "{x}");
                assert_eq!(c.is_full(), k == 0 && 2 * x.crossing_number() == n, "{x}");
            }
        }
        assert!(saw_nesting_change);
    }

    #[test]
    fn nesting_is_half_height() {
        for n in 0..=8 {
            for x in enumerate_all_matchings(n) {
                let q = recording_tableau(&x.to_involution());
                assert_eq!(x.nesting_number(), q.height() / 2);
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_matchings(4, 0).unwrap().len(), 3);
        assert_eq!(enumerate_involutions(6, 2).unwrap().len(), 45);
        let perfect: Vec<usize> = [2, 4, 6, 8, 10].iter().map(|&n| enumerate_matchings(n, 0).unwrap().len()).collect();
        assert_eq!(perfect, vec![1, 3, 15, 105, 945]);
        assert!(enumerate_matchings(5, 0).is_err());
        assert!(enumerate_inkj(6, 2, 3).is_err());
        for n in 0..=9 {
            for k in (n % 2..=n).step_by(2) {
                let all = enumerate_matchings(n, k).unwrap();
                assert_eq!(all.len(), binomial(n, k) * perfect_matching_count(n - k));
                assert!(all.iter().all(|x| x.unmatched() == k));
                let mut sorted = all.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted.len(), all.len());
            }
        }
        for p in enumerate_inkj(6, 2, 1).unwrap() {
            assert_eq!(Matching::from_involution(&p).unwrap().nesting_number(), 1);
        }
    }

    #[test]
    fn codecs() {
        let fig = m(8, "1-6, 3-4,5-7");
        assert_eq!(fig.to_string(), "1-6,3-4,5-7");
        let json = serde_json::to_string(&fig).unwrap();
        assert_eq!(json, r#"{"n":8,"arcs":[[1,6],[3,4],[5,7]]}"#);
        let back: Matching = serde_json::from_str(&json).unwrap();
        assert_eq!(back, fig);
        assert!(serde_json::from_str::<Matching>(r#"{"n":3,"arcs":[[1,2],[2,3]]}"#).is_err());
        assert!(Matching::parse("1-9", 8).is_err());
        assert!(Matching::parse("1-2,2-3", 3).is_err());
        assert_eq!(Matching::parse("-", 3).unwrap(), Matching::empty(3));
    }
}
