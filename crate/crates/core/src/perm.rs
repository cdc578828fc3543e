//! Permutations in one-line form, their descent statistics, cycle structure
//! and shuffles.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::descent::DescentSet;
use crate::error::{Error, Result};
use crate::MAX_N;

/// A permutation of `[n]` stored in one-line notation; `images[i-1] = π(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

/// Cycle lengths sorted in non-increasing order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Permutation {
    /// Validates that `images` lists every value of `[n]` exactly once.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n > MAX_N {
            return Err(Error::TooLarge(n));
        }
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n {
                return Err(Error::OutOfRange { value: v, n });
            }
            if seen[v] {
                return Err(Error::NotPermutation { n, detail: format!("{v} repeated") });
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// The longest element `i ↦ n+1-i`.
    pub fn longest(n: usize) -> Self {
        Permutation { images: (1..=n).rev().collect() }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `π(i)` for `i` in `[n]`.
    pub fn at(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Permutation { images: other.images.iter().map(|&i| self.at(i)).collect() }
    }

    pub fn des(&self) -> DescentSet {
        let mut d = DescentSet::empty(self.n());
        for (i, w) in self.images.windows(2).enumerate() {
            if w[0] > w[1] {
                d.insert(i + 1);
            }
        }
        d
    }

    /// Cellini's cyclic descent set, reading `π(n+1)` as `π(1)`.
    pub fn cellini_cdes(&self) -> DescentSet {
        let n = self.n();
        let mut d = DescentSet::empty_cyclic(n);
        for i in 1..=n {
            if self.at(i) > self.at(i % n + 1) {
                d.insert(i);
            }
        }
        d
    }

    /// `[π_n, π_1, …, π_{n-1}]`, the rotation paired with Cellini's cyclic descents.
    pub fn rotate_one_line(&self) -> Permutation {
        let mut images = self.images.clone();
        images.rotate_right(1);
        Permutation { images }
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.at(i) == i).collect()
    }

    pub fn is_involution(&self) -> bool {
        (1..=self.n()).all(|i| self.at(self.at(i)) == i)
    }

    /// Disjoint cycles, each starting at its smallest element, ordered by
    /// that element. Fixed points appear as singletons.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.at(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.at(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut parts: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { parts }
    }

    /// `w₀ · π · w₀` with `w₀(i) = n+1-i`.
    pub fn conjugate_w0(&self) -> Permutation {
        let n = self.n();
        Permutation { images: (1..=n).map(|i| n + 1 - self.at(n + 1 - i)).collect() }
    }

    /// Cycle notation with fixed points omitted, e.g. `(1,6)(3,4)(5,7)`.
    pub fn format_cycles(&self) -> String {
        self.cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                format!("({})", inner.join(","))
            })
            .collect()
    }

    /// One-line notation, e.g. `[6,2,4,3,7,1,5,8]`.
    pub fn format_one_line(&self) -> String {
        let inner: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        format!("[{}]", inner.join(","))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_one_line())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_one_line(s)
    }
}

fn parse_int(tok: &str) -> Result<usize> {
    tok.trim().parse::<usize>().map_err(|_| Error::Parse(format!("expected an integer, got {tok:?}")))
}

/// Parses `[a,b,c,…]`. Whitespace is ignored.
pub fn parse_one_line(text: &str) -> Result<Permutation> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("one-line notation must be bracketed: {text:?}")))?;
    if inner.is_empty() {
        return Ok(Permutation::identity(0));
    }
    let images = inner.split(',').map(parse_int).collect::<Result<Vec<_>>>()?;
    Permutation::new(images)
}

/// Parses cycle notation such as `(1,6)(3,4)(5,7)` on `[n]`. Fixed points may
/// be omitted or written as `(k)`.
pub fn parse_cycles(text: &str, n: usize) -> Result<Permutation> {
    if n > MAX_N {
        return Err(Error::TooLarge(n));
    }
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut images: Vec<usize> = (1..=n).collect();
    let mut used = vec![false; n + 1];
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(|| Error::Parse(format!("expected '(' in {text:?}")))?;
        let close = body.find(')').ok_or_else(|| Error::Parse(format!("unclosed cycle in {text:?}")))?;
        let cycle = body[..close].split(',').map(parse_int).collect::<Result<Vec<_>>>()?;
        for &x in &cycle {
            if x == 0 || x > n {
                return Err(Error::OutOfRange { value: x, n });
            }
            if used[x] {
                return Err(Error::OverlappingCycles(x));
            }
            used[x] = true;
        }
        for (idx, &x) in cycle.iter().enumerate() {
            images[x - 1] = cycle[(idx + 1) % cycle.len()];
        }
        rest = &body[close + 1..];
    }
    Ok(Permutation { images })
}

/// The permutation of `[len]` order-isomorphic to `word`.
pub fn standardize(word: &[usize]) -> Result<Permutation> {
    if word.len() > MAX_N {
        return Err(Error::TooLarge(word.len()));
    }
    let mut sorted = word.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::RepeatedLetter(w[0]));
    }
    let images = word.iter().map(|x| sorted.binary_search(x).unwrap() + 1).collect();
    Ok(Permutation { images })
}

/// All interleavings of `a` and `b` that keep each word's internal order,
/// standardized to permutations of `[|a|+|b|]`.
///
/// Ordered lexicographically by the set of positions taken by `a`.
pub fn shuffles(a: &[usize], b: &[usize]) -> Result<Vec<Permutation>> {
    let letters_a: BTreeSet<usize> = a.iter().copied().collect();
    if letters_a.len() != a.len() {
        return Err(Error::RepeatedLetter(first_repeat(a)));
    }
    let letters_b: BTreeSet<usize> = b.iter().copied().collect();
    if letters_b.len() != b.len() {
        return Err(Error::RepeatedLetter(first_repeat(b)));
    }
    if let Some(&x) = letters_a.intersection(&letters_b).next() {
        return Err(Error::OverlappingLetters(x));
    }
    let n = a.len() + b.len();
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(n);
    shuffle_rec(a, b, &mut word, &mut out)?;
    debug_assert_eq!(out.len(), binomial(n, a.len()));
    Ok(out)
}

fn shuffle_rec(a: &[usize], b: &[usize], word: &mut Vec<usize>, out: &mut Vec<Permutation>) -> Result<()> {
    if a.is_empty() && b.is_empty() {
        out.push(standardize(word)?);
        return Ok(());
    }
    // Taking from `a` first yields lexicographic order on a's position sets.
    if let Some((&x, rest)) = a.split_first() {
        word.push(x);
        shuffle_rec(rest, b, word, out)?;
        word.pop();
    }
    if let Some((&y, rest)) = b.split_first() {
        word.push(y);
        shuffle_rec(a, rest, word, out)?;
        word.pop();
    }
    Ok(())
}

fn first_repeat(word: &[usize]) -> usize {
    let mut seen = BTreeSet::new();
    word.iter().copied().find(|x| !seen.insert(*x)).unwrap_or_default()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// `(m-1)!! = (m-1)(m-3)⋯1` for even `m`, the number of perfect matchings on `m` points.
pub fn perfect_matching_count(m: usize) -> usize {
    if m % 2 == 1 {
        return 0;
    }
    (1..m).step_by(2).product()
}

/// Every permutation of `[n]` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (1..=n).collect();
    loop {
        out.push(Permutation { images: current.clone() });
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}

/// Every involution of `[n]`, lexicographic in one-line form.
pub fn all_involutions(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut images = vec![0; n];
    involutions_rec(&mut images, &mut out);
    out.sort();
    out
}

fn involutions_rec(images: &mut Vec<usize>, out: &mut Vec<Permutation>) {
    let Some(p) = images.iter().position(|&v| v == 0) else {
        out.push(Permutation { images: images.clone() });
        return;
    };
    images[p] = p + 1;
    involutions_rec(images, out);
    for q in p + 1..images.len() {
        if images[q] == 0 {
            images[p] = q + 1;
            images[q] = p + 1;
            involutions_rec(images, out);
            images[q] = 0;
        }
    }
    images[p] = 0;
}
