//! Oscillating tableaux of empty shape, Sundaram's bijection with
//! fixed-point-free involutions, transposition, and the crossing/nesting
//! swapping involution `ι = s⁻¹ ∘ tr ∘ s`.

use std::fmt;
use std::str::FromStr;

use crate::descent::DescentSet;
use crate::error::{Error, Result};
use crate::matching::{enumerate_matchings, Matching};
use crate::perm::Permutation;
use crate::report::{Params, ReportBuilder, VerificationReport};
use crate::tableau::{Shape, StandardTableau};

/// One step of a walk in Young's lattice.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Step {
    /// A box added in the given row (1-based).
    Add(usize),
    /// A box removed from the given row (1-based).
    Remove(usize),
}

/// First violated invariant of a candidate shape sequence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Validation {
    Ok,
    Violation { index: usize, reason: String },
}

impl Validation {
    pub fn is_ok(&self) -> bool {
        matches!(self, Validation::Ok)
    }
}

/// Classifies the move from `a` to `b`, if it is a single box.
fn step_between(a: &Shape, b: &Shape) -> Option<Step> {
    let rows = a.height().max(b.height());
    let diffs: Vec<(usize, isize)> =
        (1..=rows).map(|r| (r, b.row_len(r) as isize - a.row_len(r) as isize)).filter(|&(_, d)| d != 0).collect();
    match diffs.as_slice() {
        [(r, 1)] => Some(Step::Add(*r)),
        [(r, -1)] => Some(Step::Remove(*r)),
        _ => None,
    }
}

/// Checks that the sequence starts and ends empty and moves one box at a
/// time. Endpoints are checked before steps.
pub fn validate(shapes: &[Shape]) -> Validation {
    let violation = |index: usize, reason: &str| Validation::Violation { index, reason: reason.to_string() };
    match shapes.first() {
        None => return violation(0, "sequence is empty"),
        Some(s) if !s.is_empty() => return violation(0, "first shape is nonempty"),
        _ => {}
    }
    if !shapes.last().unwrap().is_empty() {
        return violation(shapes.len() - 1, "last shape is nonempty");
    }
    for (i, w) in shapes.windows(2).enumerate() {
        if step_between(&w[0], &w[1]).is_none() {
            return violation(i + 1, "step does not add or remove exactly one box");
        }
    }
    Validation::Ok
}

/// A closed walk `∅ = λ⁰, λ¹, …, λ^{2n} = ∅` in Young's lattice.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct OscillatingTableau {
    shapes: Vec<Shape>,
}

impl OscillatingTableau {
    pub fn new(shapes: Vec<Shape>) -> Result<Self> {
        match validate(&shapes) {
            Validation::Ok => Ok(OscillatingTableau { shapes }),
            Validation::Violation { index, reason } => {
                Err(Error::InvalidOscillating(format!("shape {index}: {reason}")))
            }
        }
    }

    pub fn shapes(&self) -> &[Shape] {
        &self.shapes
    }

    /// Length of the walk, `2n`.
    pub fn size(&self) -> usize {
        self.shapes.len() - 1
    }

    pub fn steps(&self) -> Vec<Step> {
        self.shapes.windows(2).map(|w| step_between(&w[0], &w[1]).expect("validated")).collect()
    }

    /// Transposes every shape.
    pub fn transpose(&self) -> OscillatingTableau {
        OscillatingTableau { shapes: self.shapes.iter().map(Shape::transpose).collect() }
    }

    pub fn reverse(&self) -> OscillatingTableau {
        OscillatingTableau { shapes: self.shapes.iter().rev().cloned().collect() }
    }

    /// Descent set read off the walk: `i` is a descent when steps `i, i+1`
    /// are add-then-remove, add-then-add in a strictly lower row, or
    /// remove-then-remove from a strictly higher row.
    pub fn kim_des(&self) -> DescentSet {
        let steps = self.steps();
        let mut d = DescentSet::empty(self.size());
        for (i, w) in steps.windows(2).enumerate() {
            let hit = match (w[0], w[1]) {
                (Step::Add(_), Step::Remove(_)) => true,
                (Step::Add(a), Step::Add(b)) => b > a,
                (Step::Remove(a), Step::Remove(b)) => b < a,
                (Step::Remove(_), Step::Add(_)) => false,
            };
            if hit {
                d.insert(i + 1);
            }
        }
        d
    }
}

/// Codec: shapes joined by `;`, each a comma list or `-` when empty.
impl fmt::Display for OscillatingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.shapes.iter().map(|s| s.to_string()).collect();
        f.write_str(&parts.join(";"))
    }
}

impl FromStr for OscillatingTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let shapes = s.split(';').map(str::parse::<Shape>).collect::<Result<Vec<_>>>()?;
        OscillatingTableau::new(shapes)
    }
}

fn require_fixed_point_free(p: &Permutation) -> Result<()> {
    if !p.is_involution() {
        return Err(Error::NotInvolution);
    }
    let fixed = p.fixed_points().len();
    if fixed > 0 {
        return Err(Error::HasFixedPoints(fixed));
    }
    if p.n() % 2 == 1 {
        return Err(Error::OddSize(p.n()));
    }
    Ok(())
}

/// The labelled tableaux `T⁰, …, T^{2n}` of Sundaram's construction: at an
/// arc's left end its right end is row-inserted; at the right end that
/// letter is deleted by jeu de taquin.
pub fn sundaram_tableaux(p: &Permutation) -> Result<Vec<StandardTableau>> {
    require_fixed_point_free(p)?;
    let mut current = StandardTableau::empty();
    let mut out = vec![current.clone()];
    for d in 1..=p.n() {
        let partner = p.at(d);
        current = if d < partner { current.rs_insert(partner)?.0 } else { current.jdt_delete(d)? };
        out.push(current.clone());
    }
    Ok(out)
}

/// Sundaram's bijection `s : I_{2n,0} → O_{2n}`.
pub fn sundaram(p: &Permutation) -> Result<OscillatingTableau> {
    let shapes = sundaram_tableaux(p)?.iter().map(StandardTableau::shape).collect();
    Ok(OscillatingTableau { shapes })
}

/// Inverse of [`sundaram`]. Walks backwards from `λ^{2n}`: an added box is
/// undone by reverse insertion from that corner, which ejects the partner of
/// the current step; a removed box is undone by sliding the step's own
/// letter back in from the vacated corner.
pub fn sundaram_inverse(o: &OscillatingTableau) -> Result<Permutation> {
    let size = o.size();
    if size % 2 == 1 {
        return Err(Error::OddSize(size));
    }
    let mut images = vec![0; size];
    let mut current = StandardTableau::empty();
    for d in (1..=size).rev() {
        let before = &o.shapes[d - 1];
        match step_between(before, &o.shapes[d]).expect("validated") {
            Step::Add(r) => {
                let (t, x) = current.reverse_insert(r)?;
                if x <= d || images[x - 1] != 0 {
                    return Err(Error::InvalidOscillating(format!("step {d} ejects {x}")));
                }
                images[d - 1] = x;
                images[x - 1] = d;
                current = t;
            }
            Step::Remove(r) => {
                current = current.reverse_jdt_place(d, (r, before.row_len(r)))?;
            }
        }
    }
    Permutation::new(images)
}

/// The involution `ι = s⁻¹ ∘ tr ∘ s` on fixed-point-free involutions.
pub fn chen_iota_involution(p: &Permutation) -> Result<Permutation> {
    sundaram_inverse(&sundaram(p)?.transpose())
}

/// The involution `ι` on perfect matchings; it satisfies `cr(m) = ne(ι(m))`.
pub fn chen_iota(m: &Matching) -> Result<Matching> {
    if !m.is_perfect() {
        return Err(Error::HasFixedPoints(m.unmatched()));
    }
    Matching::from_involution(&chen_iota_involution(&m.to_involution())?)
}

fn perfect_matchings(n2: usize) -> Result<Vec<Matching>> {
    if n2 % 2 == 1 {
        return Err(Error::OddSize(n2));
    }
    enumerate_matchings(n2, 0)
}

/// `s⁻¹ ∘ s = id` on `I_{2n,0}`, images pairwise distinct, and `s ∘ s⁻¹ = id`
/// on the images.
pub fn verify_sundaram_roundtrip(n2: usize) -> Result<VerificationReport> {
    let mut rb = ReportBuilder::new("sundaram-roundtrip", Params::n(n2));
    let mut images = std::collections::BTreeSet::new();
    for m in perfect_matchings(n2)? {
        let p = m.to_involution();
        let o = sundaram(&p)?;
        match sundaram_inverse(&o) {
            Ok(back) if back == p => {}
            _ => rb.fail(|| format!("{} does not round-trip", p.format_cycles())),
        }
        if sundaram(&sundaram_inverse(&o)?)? != o {
            rb.fail(|| format!("{o} does not round-trip"));
        }
        if !images.insert(o.clone()) {
            rb.fail(|| format!("{o} hit twice"));
        }
        rb.count("involutions", 1);
    }
    Ok(rb.finish())
}

/// `kim_des(s(π)) = Des(π)` on `I_{2n,0}`.
pub fn verify_kim(n2: usize) -> Result<VerificationReport> {
    let mut rb = ReportBuilder::new("kim", Params::n(n2));
    for m in perfect_matchings(n2)? {
        let p = m.to_involution();
        let o = sundaram(&p)?;
        if o.kim_des() != p.des() {
            rb.fail(|| format!("{}: kim {} des {}", p.format_cycles(), o.kim_des(), p.des()));
        }
        rb.count("involutions", 1);
    }
    Ok(rb.finish())
}

/// `s(w₀πw₀)` is the reverse of `s(π)` on `I_{2n,0}`.
pub fn verify_roby(n2: usize) -> Result<VerificationReport> {
    let mut rb = ReportBuilder::new("roby", Params::n(n2));
    for m in perfect_matchings(n2)? {
        let p = m.to_involution();
        if sundaram(&p.conjugate_w0())? != sundaram(&p)?.reverse() {
            rb.fail(|| p.format_cycles());
        }
        rb.count("involutions", 1);
    }
    Ok(rb.finish())
}

/// `ι` is an involution with `cr(m) = ne(ι(m))` and `Des(ι(m)) = MDes(m)`.
pub fn verify_chen(n2: usize) -> Result<VerificationReport> {
    let mut rb = ReportBuilder::new("chen", Params::n(n2));
    for m in perfect_matchings(n2)? {
        let image = chen_iota(&m)?;
        if chen_iota(&image)? != m {
            rb.fail(|| format!("{m}: not an involution"));
        }
        if m.crossing_number() != image.nesting_number() {
            rb.fail(|| format!("{m}: cr {} but ne(ι) {}", m.crossing_number(), image.nesting_number()));
        }
        if image.des() != m.mdes() {
            rb.fail(|| format!("{m}: MDes {} but Des(ι) {}", m.mdes(), image.des()));
        }
        rb.count("matchings", 1);
    }
    Ok(rb.finish())
}
