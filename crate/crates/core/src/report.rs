//! Multisets and the machine-readable verification report.

use std::collections::BTreeMap;
use std::fmt::Debug;
use std::time::Instant;

use serde::Serialize;

/// At most this many entries of a failing comparison are reported.
pub const WITNESS_CAP: usize = 20;

/// A finite multiset with deterministic iteration order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Multiset<K: Ord> {
    counts: BTreeMap<K, usize>,
}

impl<K: Ord> Default for Multiset<K> {
    fn default() -> Self {
        Multiset { counts: BTreeMap::new() }
    }
}

impl<K: Ord> Multiset<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, key: K) {
        *self.counts.entry(key).or_insert(0) += 1;
    }

    pub fn insert_many(&mut self, key: K, mult: usize) {
        if mult > 0 {
            *self.counts.entry(key).or_insert(0) += mult;
        }
    }

    pub fn count(&self, key: &K) -> usize {
        self.counts.get(key).copied().unwrap_or(0)
    }

    /// Total number of elements counted with multiplicity.
    pub fn len(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn distinct(&self) -> usize {
        self.counts.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, usize)> {
        self.counts.iter().map(|(k, &c)| (k, c))
    }

    /// Entries whose multiplicities differ, as `(key, left count, right count)`.
    pub fn diff<'a>(&'a self, other: &'a Self) -> Vec<(&'a K, usize, usize)> {
        let mut out = Vec::new();
        for (k, &c) in &self.counts {
            let d = other.count(k);
            if c != d {
                out.push((k, c, d));
            }
        }
        for (k, &d) in &other.counts {
            if !self.counts.contains_key(k) {
                out.push((k, 0, d));
            }
        }
        out
    }

    /// Symmetric difference rendered for a report, capped at [`WITNESS_CAP`].
    pub fn witness_diff(&self, other: &Self, render: impl Fn(&K) -> String) -> Vec<String> {
        self.diff(other)
            .into_iter()
            .take(WITNESS_CAP)
            .map(|(k, l, r)| format!("{}: lhs {l} rhs {r}", render(k)))
            .collect()
    }
}

impl<K: Ord> FromIterator<K> for Multiset<K> {
    fn from_iter<I: IntoIterator<Item = K>>(iter: I) -> Self {
        let mut m = Multiset::new();
        for k in iter {
            m.insert(k);
        }
        m
    }
}

/// Parameters echoed in a report; absent ones serialize as `null`.
#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Params {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub j: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max: Option<usize>,
}

impl Params {
    pub fn n(n: usize) -> Self {
        Params { n: Some(n), ..Default::default() }
    }

    pub fn nk(n: usize, k: usize) -> Self {
        Params { n: Some(n), k: Some(k), ..Default::default() }
    }

    pub fn nkj(n: usize, k: usize, j: usize) -> Self {
        Params { n: Some(n), k: Some(k), j: Some(j), max: None }
    }

    pub fn max(max: usize) -> Self {
        Params { max: Some(max), ..Default::default() }
    }
}

/// Outcome of one identity check.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub params: Params,
    pub ok: bool,
    pub witness_diff: Vec<String>,
    pub elapsed_ms: u64,
    pub counts: BTreeMap<String, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<String>,
}

/// Accumulates counts and witnesses while a check runs.
pub struct ReportBuilder {
    identity: String,
    params: Params,
    started: Instant,
    counts: BTreeMap<String, usize>,
    witnesses: Vec<String>,
    failed: bool,
}

impl ReportBuilder {
    pub fn new(identity: &str, params: Params) -> Self {
        ReportBuilder {
            identity: identity.to_string(),
            params,
            started: Instant::now(),
            counts: BTreeMap::new(),
            witnesses: Vec::new(),
            failed: false,
        }
    }

    pub fn count(&mut self, key: &str, value: usize) -> &mut Self {
        *self.counts.entry(key.to_string()).or_insert(0) += value;
        self
    }

    /// Records a failed element; the witness text is kept while under the cap.
    pub fn fail(&mut self, witness: impl FnOnce() -> String) {
        self.failed = true;
        if self.witnesses.len() < WITNESS_CAP {
            self.witnesses.push(witness());
        }
    }

    /// Records the outcome of a multiset comparison.
    pub fn compare<K: Ord>(&mut self, lhs: &Multiset<K>, rhs: &Multiset<K>, render: impl Fn(&K) -> String) {
        if lhs != rhs {
            self.failed = true;
            let room = WITNESS_CAP - self.witnesses.len();
            self.witnesses.extend(lhs.witness_diff(rhs, render).into_iter().take(room));
        }
    }

    pub fn finish(self) -> VerificationReport {
        VerificationReport {
            identity: self.identity,
            params: self.params,
            ok: !self.failed,
            witness_diff: self.witnesses,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
            counts: self.counts,
            classification: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiset_equality_ignores_order() {
        let a: Multiset<u8> = [3, 1, 3].into_iter().collect();
        let b: Multiset<u8> = [3, 3, 1].into_iter().collect();
        assert_eq!(a, b);
        assert_eq!(a.len(), 3);
        assert_eq!(a.distinct(), 2);
    }

    #[test]
    fn diff_is_capped() {
        let a: Multiset<u32> = (0..50).collect();
        let b: Multiset<u32> = (25..75).collect();
        assert_eq!(a.diff(&b).len(), 50);
        assert_eq!(a.witness_diff(&b, |k| k.to_string()).len(), WITNESS_CAP);
        let mut rb = ReportBuilder::new("x", Params::n(1));
        rb.compare(&a, &b, |k| k.to_string());
        let r = rb.finish();
        assert!(!r.ok);
        assert_eq!(r.witness_diff.len(), WITNESS_CAP);
        assert_eq!(r.witness_diff[0], "0: lhs 1 rhs 0");
    }

    #[test]
    fn report_json_keys() {
        let r = ReportBuilder::new("main11", Params::nk(8, 2)).finish();
        let v = serde_json::to_value(&r).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(|s| s.as_str()).collect();
        for key in ["identity", "params", "ok", "witness_diff", "elapsed_ms", "counts"] {
            assert!(keys.contains(&key));
        }
        assert_eq!(v["params"]["j"], serde_json::Value::Null);
        assert_eq!(v["params"]["k"], 2);
    }
}
