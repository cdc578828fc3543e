//! Cyclic descent extensions on `I_{n,k,j}` and `SYT_{n,k,j}`.
//!
//! On matchings `cMDes` and the rotation `r` already satisfy the extension
//! and equivariance axioms with respect to `MDes`; conjugating by `ι̂` (or by
//! `h = Q ∘ ι̂` for tableaux) carries them over to `Des`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::bijection::{h_map, h_map_inverse, iota_hat, iota_hat_inverse};
use crate::descent::DescentSet;
use crate::error::{Error, Result};
use crate::matching::{enumerate_inkj, Matching};
use crate::perm::Permutation;
use crate::report::{Params, ReportBuilder, VerificationReport, WITNESS_CAP};
use crate::tableau::{check_nkj, enumerate_syt_nkj, StandardTableau};

/// `cMDes ∘ ι̂⁻¹`.
pub fn cdes_involution(p: &Permutation) -> Result<DescentSet> {
    Ok(Matching::from_involution(&iota_hat_inverse(p)?)?.cmdes())
}

/// `ι̂ ∘ r ∘ ι̂⁻¹`.
pub fn p_map_involution(p: &Permutation) -> Result<Permutation> {
    let m = Matching::from_involution(&iota_hat_inverse(p)?)?;
    iota_hat(&m.rotate().to_involution())
}

/// `cMDes ∘ h⁻¹`.
pub fn cdes_syt(t: &StandardTableau) -> Result<DescentSet> {
    Ok(Matching::from_involution(&h_map_inverse(t)?)?.cmdes())
}

/// `h ∘ r ∘ h⁻¹`.
pub fn p_map_syt(t: &StandardTableau) -> Result<StandardTableau> {
    let m = Matching::from_involution(&h_map_inverse(t)?)?;
    h_map(&m.rotate().to_involution())
}

/// Outcome of checking the three cyclic-extension axioms on a finite set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdesReport {
    pub set_id: String,
    pub extension_ok: bool,
    pub equivariance_ok: bool,
    pub non_escher_ok: bool,
    /// Elements whose cyclic descent set is empty or everything.
    pub escher_witnesses: Vec<String>,
    /// Elements breaking extension or equivariance.
    pub violations: Vec<String>,
    pub orbit_sizes: Vec<usize>,
}

impl CdesReport {
    /// Extension and equivariance both hold.
    pub fn is_extension(&self) -> bool {
        self.extension_ok && self.equivariance_ok
    }

    pub fn all_ok(&self) -> bool {
        self.is_extension() && self.non_escher_ok
    }
}

impl Serialize for CdesReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut axioms = BTreeMap::new();
        axioms.insert("extension", self.extension_ok);
        axioms.insert("equivariance", self.equivariance_ok);
        axioms.insert("non_escher", self.non_escher_ok);
        let fields = if self.violations.is_empty() { 4 } else { 5 };
        let mut s = serializer.serialize_struct("CdesReport", fields)?;
        s.serialize_field("set_id", &self.set_id)?;
        s.serialize_field("axioms", &Axioms(self))?;
        s.serialize_field("witnesses", &self.escher_witnesses)?;
        s.serialize_field("orbit_sizes", &self.orbit_sizes)?;
        if !self.violations.is_empty() {
            s.serialize_field("violations", &self.violations)?;
        }
        s.end()
    }
}

struct Axioms<'a>(&'a CdesReport);

impl Serialize for Axioms<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("axioms", 3)?;
        s.serialize_field("extension", &self.0.extension_ok)?;
        s.serialize_field("equivariance", &self.0.equivariance_ok)?;
        s.serialize_field("non_escher", &self.0.non_escher_ok)?;
        s.end()
    }
}

/// Orbits of `p_fn` on `ground`, each listed from its first element in
/// ground-set order. Fails unless `p_fn` permutes `ground`.
pub fn orbits<T, P>(ground: &[T], p_fn: P) -> Result<Vec<Vec<T>>>
where
    T: Ord + Clone + fmt::Display,
    P: Fn(&T) -> Result<T>,
{
    let index: BTreeMap<&T, usize> = ground.iter().enumerate().map(|(i, x)| (x, i)).collect();
    if index.len() != ground.len() {
        return Err(Error::NotBijective("ground set has repeated elements".into()));
    }
    let mut next = vec![0; ground.len()];
    let mut hit = vec![false; ground.len()];
    for (i, x) in ground.iter().enumerate() {
        let y = p_fn(x)?;
        let Some(&t) = index.get(&y) else {
            return Err(Error::NotBijective(format!("{x} maps to {y}, outside the set")));
        };
        if std::mem::replace(&mut hit[t], true) {
            return Err(Error::NotBijective(format!("{y} is hit twice")));
        }
        next[i] = t;
    }
    let mut seen = vec![false; ground.len()];
    let mut out = Vec::new();
    for start in 0..ground.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            orbit.push(ground[i].clone());
            i = next[i];
        }
        out.push(orbit);
    }
    Ok(out)
}

/// Checks extension, equivariance and non-Escher for `(cdes_fn, p_fn)` over
/// `ground` against the linear statistic `des_fn`.
pub fn verify_cdes<T, D, C, P>(set_id: &str, ground: &[T], des_fn: D, cdes_fn: C, p_fn: P) -> Result<CdesReport>
where
    T: Ord + Clone + fmt::Display,
    D: Fn(&T) -> Result<DescentSet>,
    C: Fn(&T) -> Result<DescentSet>,
    P: Fn(&T) -> Result<T>,
{
    let orbit_list = orbits(ground, &p_fn)?;
    let mut report = CdesReport {
        set_id: set_id.to_string(),
        extension_ok: true,
        equivariance_ok: true,
        non_escher_ok: true,
        escher_witnesses: Vec::new(),
        violations: Vec::new(),
        orbit_sizes: orbit_list.iter().map(Vec::len).collect(),
    };
    report.orbit_sizes.sort_unstable();
    let cdes: BTreeMap<&T, DescentSet> = ground.iter().map(|x| Ok((x, cdes_fn(x)?))).collect::<Result<_>>()?;
    for x in ground {
        let c = cdes[x];
        let des = des_fn(x)?;
        if c.restrict_linear() != des {
            report.extension_ok = false;
            push_capped(&mut report.violations, format!("{x}: cDes {c} restricts away from Des {des}"));
        }
        let image = p_fn(x)?;
        if cdes[&image] != c.shift() {
            report.equivariance_ok = false;
            push_capped(&mut report.violations, format!("{x} -> {image}: cDes {c} -> {}", cdes[&image]));
        }
        if c.is_empty() || c.is_full() {
            report.non_escher_ok = false;
            push_capped(&mut report.escher_witnesses, format!("{x}: cDes {c}"));
        }
    }
    Ok(report)
}

fn push_capped(list: &mut Vec<String>, item: String) {
    if list.len() < WITNESS_CAP {
        list.push(item);
    }
}

/// Whether a class admits a non-Escherian cyclic extension.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Escher {
    NonEscherian,
    Escherian,
}

impl fmt::Display for Escher {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Escher::NonEscherian => "non_escherian",
            Escher::Escherian => "escherian",
        })
    }
}

/// `I_{n,k,j}` is Escherian exactly when `k = n`, or `k = 0` and `j = n/2`.
pub fn classify_escherian(n: usize, k: usize, j: usize) -> Result<Escher> {
    check_nkj(n, k, j)?;
    Ok(if k == n || (k == 0 && 2 * j == n) { Escher::Escherian } else { Escher::NonEscherian })
}

/// `verify_cdes` on `I_{n,k,j}` with the transported pair.
pub fn verify_cdes_involutions(n: usize, k: usize, j: usize) -> Result<CdesReport> {
    let ground = enumerate_inkj(n, k, j)?;
    verify_cdes(&format!("I_{{{n},{k},{j}}}"), &ground, |p| Ok(p.des()), cdes_involution, p_map_involution)
}

/// `verify_cdes` on `SYT_{n,k,j}` with the transported pair.
pub fn verify_cdes_syt(n: usize, k: usize, j: usize) -> Result<CdesReport> {
    let ground = enumerate_syt_nkj(n, k, j)?;
    verify_cdes(&format!("SYT_{{{n},{k},{j}}}"), &ground, StandardTableau::des, cdes_syt, p_map_syt)
}

/// Runs both class checks and compares the non-Escher outcome with
/// [`classify_escherian`]. With `j = None` every admissible `j` is covered.
pub fn verify_cdes_classes(n: usize, k: usize, j: Option<usize>) -> Result<VerificationReport> {
    let params = match j {
        Some(j) => Params::nkj(n, k, j),
        None => Params::nk(n, k),
    };
    crate::tableau::check_nk(n, k)?;
    let js: Vec<usize> = match j {
        Some(j) => vec![j],
        None => (0..=(n - k) / 2).collect(),
    };
    let mut rb = ReportBuilder::new("cdes", params);
    let mut classes = BTreeSet::new();
    for j in js {
        let expected = classify_escherian(n, k, j)?;
        classes.insert(expected.to_string());
        for report in [verify_cdes_involutions(n, k, j)?, verify_cdes_syt(n, k, j)?] {
            if !report.is_extension() {
                rb.fail(|| format!("{}: {}", report.set_id, report.violations.join("; ")));
            }
            let empty = report.orbit_sizes.is_empty();
            if !empty && report.non_escher_ok != (expected == Escher::NonEscherian) {
                rb.fail(|| format!("{}: non-Escher {} but class is {expected}", report.set_id, report.non_escher_ok));
            }
            if let Some(bad) = report.orbit_sizes.iter().find(|&&s| !n.is_multiple_of(s)) {
                rb.fail(|| format!("{}: orbit of size {bad}", report.set_id));
            }
            rb.count(
                if report.set_id.starts_with('I') { "involutions" } else { "tableaux" },
                report.orbit_sizes.iter().sum(),
            );
        }
    }
    let mut out = rb.finish();
    out.classification = Some(classes.into_iter().collect::<Vec<_>>().join(","));
    Ok(out)
}

/// The hand-built cyclic extension on the transpositions of `S₄`, with its
/// descent sets and rotation map given as a table.
#[derive(Clone, Debug)]
pub struct TableExtension {
    rows: BTreeMap<Permutation, (DescentSet, Permutation)>,
}

impl TableExtension {
    pub fn transpositions_s4() -> Self {
        let table: [(&str, &[usize], &str); 6] = [
            ("2134", &[1, 4], "3214"),
            ("3214", &[1, 2], "1432"),
            ("1432", &[2, 3], "1243"),
            ("1243", &[3, 4], "2134"),
            ("4231", &[1, 3], "1324"),
            ("1324", &[2, 4], "4231"),
        ];
        let word = |s: &str| Permutation::new(s.bytes().map(|b| (b - b'0') as usize).collect()).expect("fixture");
        let rows = table
            .iter()
            .map(|&(x, d, y)| (word(x), (DescentSet::cyclic(4, d.iter().copied()).expect("fixture"), word(y))))
            .collect();
        TableExtension { rows }
    }

    pub fn ground(&self) -> Vec<Permutation> {
        self.rows.keys().cloned().collect()
    }

    pub fn cdes(&self, x: &Permutation) -> Result<DescentSet> {
        self.rows.get(x).map(|r| r.0).ok_or_else(|| Error::NotBijective(format!("{x} is outside the table")))
    }

    pub fn p(&self, x: &Permutation) -> Result<Permutation> {
        self.rows.get(x).map(|r| r.1.clone()).ok_or_else(|| Error::NotBijective(format!("{x} is outside the table")))
    }
}
