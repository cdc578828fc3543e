//! Subsets of `[n-1]` (linear descent sets) and `[n]` (cyclic descent sets).

use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};
use crate::MAX_N;

/// A descent set with its ambient size.
///
/// Linear sets live in `[n-1]`, cyclic ones in `[n]`. The flag keeps the two
/// from being compared by accident: a cyclic set never equals a linear one.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DescentSet {
    n: usize,
    cyclic: bool,
    bits: u128,
}

impl DescentSet {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_N, "ambient size {n} exceeds {MAX_N}");
        DescentSet { n, cyclic: false, bits: 0 }
    }

    pub fn empty_cyclic(n: usize) -> Self {
        assert!(n <= MAX_N, "ambient size {n} exceeds {MAX_N}");
        DescentSet { n, cyclic: true, bits: 0 }
    }

    /// Builds a linear descent set, rejecting members outside `[n-1]`.
    pub fn linear<I: IntoIterator<Item = usize>>(n: usize, members: I) -> Result<Self> {
        Self::build(Self::empty_checked(n, false)?, members)
    }

    /// Builds a cyclic descent set, rejecting members outside `[n]`.
    pub fn cyclic<I: IntoIterator<Item = usize>>(n: usize, members: I) -> Result<Self> {
        Self::build(Self::empty_checked(n, true)?, members)
    }

    /// All of `[n-1]`.
    pub fn full(n: usize) -> Self {
        let mut d = Self::empty(n);
        for i in 1..n {
            d.insert(i);
        }
        d
    }

    /// All of `[n]`.
    pub fn full_cyclic(n: usize) -> Self {
        let mut d = Self::empty_cyclic(n);
        for i in 1..=n {
            d.insert(i);
        }
        d
    }

    fn empty_checked(n: usize, cyclic: bool) -> Result<Self> {
        if n > MAX_N {
            return Err(Error::TooLarge(n));
        }
        Ok(DescentSet { n, cyclic, bits: 0 })
    }

    fn build<I: IntoIterator<Item = usize>>(mut d: Self, members: I) -> Result<Self> {
        let max = d.max_member();
        for i in members {
            if i == 0 || i > max {
                return Err(Error::OutOfRange { value: i, n: max });
            }
            d.insert(i);
        }
        Ok(d)
    }

    fn max_member(&self) -> usize {
        if self.cyclic {
            self.n
        } else {
            self.n.saturating_sub(1)
        }
    }

    pub(crate) fn insert(&mut self, i: usize) {
        debug_assert!(i >= 1 && i <= self.max_member());
        self.bits |= 1u128 << i;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_cyclic(&self) -> bool {
        self.cyclic
    }

    pub fn contains(&self, i: usize) -> bool {
        i < 128 && self.bits >> i & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// True when every admissible position is a member.
    pub fn is_full(&self) -> bool {
        self.len() == self.max_member()
    }

    pub fn members(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.max_member()).filter(move |&i| self.contains(i))
    }

    /// Intersection with `[n-1]`, returned as a linear set.
    pub fn restrict_linear(&self) -> Self {
        let mut d = Self::empty(self.n);
        for i in self.iter().filter(|&i| i < self.n) {
            d.insert(i);
        }
        d
    }

    /// `1 + D (mod n)` for a cyclic set, with residues taken in `[n]`.
    pub fn shift(&self) -> Self {
        assert!(self.cyclic, "shift is defined on cyclic descent sets");
        let mut d = Self::empty_cyclic(self.n);
        for i in self.iter() {
            d.insert(i % self.n + 1);
        }
        d
    }

    /// Raw bitmask with bit `i` standing for member `i`.
    pub fn bits(&self) -> u128 {
        self.bits
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, i) in self.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for DescentSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for i in self.iter() {
            seq.serialize_element(&i)?;
        }
        seq.end()
    }
}
