//! Quasisymmetric generating functions as descent multisets.
//!
//! A sum `Σ q^a t^b F_{n,D}` is stored as the multiset of its `(a, b, D)`
//! terms; since the `F_{n,D}` are a basis, two sums agree exactly when the
//! multisets do. A Schur function `s_λ` is the multiset of descent sets of
//! `SYT(λ)`.

use std::collections::BTreeSet;

use crate::descent::DescentSet;
use crate::error::{Error, Result};
use crate::matching::{enumerate_all_matchings, enumerate_matchings, Matching};
use crate::perm::{all_permutations, shuffles, Permutation};
use crate::report::{Multiset, Params, ReportBuilder, VerificationReport};
use crate::tableau::{check_nk, enumerate_syt, partitions, Shape};

/// Pairs `(X, Y)` of subsets standing for monomials `x^X y^Y`.
pub type JointDistribution = Multiset<(DescentSet, DescentSet)>;

/// `Σ q^a t^b F_{n,D}` as a multiset of `(a, b, D)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormalQSym {
    n: usize,
    terms: Multiset<(usize, usize, DescentSet)>,
}

impl FormalQSym {
    pub fn new(n: usize) -> Self {
        FormalQSym { n, terms: Multiset::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &Multiset<(usize, usize, DescentSet)> {
        &self.terms
    }

    /// Adds `q^a t^b F_{n,D}`.
    pub fn push(&mut self, a: usize, b: usize, d: DescentSet) -> Result<()> {
        check_linear(self.n, &d)?;
        self.terms.insert((a, b, d));
        Ok(())
    }

    /// Expands every term in `num_vars` variables, keeping the `q, t` exponents.
    pub fn eval(&self, num_vars: usize) -> Result<Multiset<(usize, usize, Vec<usize>)>> {
        let mut out = Multiset::new();
        for (&(a, b, d), mult) in self.terms.iter() {
            for (exp, c) in fundamental_eval(self.n, &d, num_vars)?.iter() {
                out.insert_many((a, b, exp.clone()), c * mult);
            }
        }
        Ok(out)
    }
}

fn check_linear(n: usize, d: &DescentSet) -> Result<()> {
    if d.is_cyclic() || d.n() != n {
        return Err(Error::SizeMismatch(format!("{d} is not a subset of [{}]", n.saturating_sub(1))));
    }
    Ok(())
}

/// `F_{n,D}` in `num_vars` variables, as the multiset of exponent vectors of
/// its monomials (each with coefficient one).
pub fn fundamental_eval(n: usize, d: &DescentSet, num_vars: usize) -> Result<Multiset<Vec<usize>>> {
    check_linear(n, d)?;
    if num_vars == 0 {
        return Err(Error::SizeMismatch("at least one variable is needed".into()));
    }
    let mut out = Multiset::new();
    let mut exp = vec![0; num_vars];
    chains(n, d, 1, 0, &mut exp, &mut out);
    Ok(out)
}

/// Extends a chain `i₁ ≤ … ≤ i_{pos-1}` ending at variable `last`.
fn chains(n: usize, d: &DescentSet, pos: usize, last: usize, exp: &mut Vec<usize>, out: &mut Multiset<Vec<usize>>) {
    if pos > n {
        out.insert(exp.clone());
        return;
    }
    let lo = if pos > 1 && d.contains(pos - 1) { last + 1 } else { last.max(1) };
    for v in lo.max(1)..=exp.len() {
        exp[v - 1] += 1;
        chains(n, d, pos + 1, v, exp, out);
        exp[v - 1] -= 1;
    }
}

/// `s_λ` in the fundamental basis: `{Des(T) : T ∈ SYT(λ)}`.
pub fn schur_descent_multiset(shape: &Shape) -> Multiset<DescentSet> {
    enumerate_syt(shape).iter().map(|t| t.des().expect("enumerated tableaux are standard")).collect()
}

/// `Σ_{m ∈ M_n} q^{um(m)} t^{cr(m)} F_{n,MDes(m)}`.
pub fn lhs_main0(n: usize) -> FormalQSym {
    let mut f = FormalQSym::new(n);
    for m in enumerate_all_matchings(n) {
        f.push(m.unmatched(), m.crossing_number(), m.mdes()).expect("same ambient size");
    }
    f
}

/// `Σ_{λ ⊢ n} q^{oc(λ)} t^{⌊height(λ)/2⌋} s_λ`.
pub fn rhs_main0(n: usize) -> FormalQSym {
    let mut f = FormalQSym::new(n);
    for shape in partitions(n) {
        let (a, b) = (shape.odd_cols(), shape.height() / 2);
        for (d, mult) in schur_descent_multiset(&shape).iter() {
            f.terms.insert_many((a, b, *d), mult);
        }
    }
    f
}

fn render_qtd(&(a, b, d): &(usize, usize, DescentSet)) -> String {
    format!("q^{a} t^{b} F{d}")
}

/// Matchings counted by unmatched points and crossings against Schur functions
/// weighted by odd columns and half-height.
pub fn verify_main0(n: usize) -> VerificationReport {
    let mut rb = ReportBuilder::new("main0", Params::n(n));
    let (lhs, rhs) = (lhs_main0(n), rhs_main0(n));
    rb.count("matchings", lhs.terms.len()).count("tableaux", rhs.terms.len());
    rb.compare(&lhs.terms, &rhs.terms, render_qtd);
    rb.finish()
}

/// `Σ x^{Des} y^{MDes}` over perfect matchings is symmetric under `x ↔ y`,
/// also after attaching `q^{cr} t^{ne}` and swapping `q ↔ t`.
pub fn verify_lemma_main1(n2: usize) -> Result<VerificationReport> {
    if n2 % 2 == 1 {
        return Err(Error::OddSize(n2));
    }
    let mut rb = ReportBuilder::new("main1", Params::n(n2));
    let ms = enumerate_matchings(n2, 0)?;
    let pairs: JointDistribution = ms.iter().map(|m| (m.des(), m.mdes())).collect();
    let swapped: JointDistribution = ms.iter().map(|m| (m.mdes(), m.des())).collect();
    rb.compare(&pairs, &swapped, |(x, y)| format!("x^{x} y^{y}"));
    let refined: Multiset<_> =
        ms.iter().map(|m| (m.mdes(), m.des(), m.crossing_number(), m.nesting_number())).collect();
    let refined_swapped: Multiset<_> =
        ms.iter().map(|m| (m.des(), m.mdes(), m.nesting_number(), m.crossing_number())).collect();
    rb.compare(&refined, &refined_swapped, |(x, y, q, t)| format!("x^{x} y^{y} q^{q} t^{t}"));
    rb.count("matchings", ms.len());
    Ok(rb.finish())
}

/// `{(cr, MDes)} = {(ne, Des)}` over `M_{n,k}`.
pub fn verify_main11(n: usize, k: usize) -> Result<VerificationReport> {
    let mut rb = ReportBuilder::new("main11", Params::nk(n, k));
    let ms = enumerate_matchings(n, k)?;
    let lhs: Multiset<_> = ms.iter().map(|m| (m.crossing_number(), m.mdes())).collect();
    let rhs: Multiset<_> = ms.iter().map(|m| (m.nesting_number(), m.des())).collect();
    rb.compare(&lhs, &rhs, |(q, d)| format!("q^{q} x^{d}"));
    rb.count("matchings", ms.len());
    Ok(rb.finish())
}

/// `{(cr, ne, MDes)} = {(ne, cr, Des)}` over `M_{n,k}`.
pub fn verify_main111(n: usize, k: usize) -> Result<VerificationReport> {
    let mut rb = ReportBuilder::new("main111", Params::nk(n, k));
    let ms = enumerate_matchings(n, k)?;
    let lhs: Multiset<_> = ms.iter().map(|m| (m.crossing_number(), m.nesting_number(), m.mdes())).collect();
    let rhs: Multiset<_> = ms.iter().map(|m| (m.nesting_number(), m.crossing_number(), m.des())).collect();
    rb.compare(&lhs, &rhs, |(q, t, d)| format!("q^{q} t^{t} x^{d}"));
    rb.count("matchings", ms.len());
    Ok(rb.finish())
}

/// Runs `verify_main11` or `verify_main111` for one `(n, k)`, or for every
/// admissible `k` when `k` is `None`, merging into one report.
pub fn verify_matching_identity(identity: &str, n: usize, k: Option<usize>) -> Result<VerificationReport> {
    let run = |k| match identity {
        "main11" => verify_main11(n, k),
        _ => verify_main111(n, k),
    };
    let ks: Vec<usize> = match k {
        Some(k) => {
            check_nk(n, k)?;
            vec![k]
        }
        None => (n % 2..=n).step_by(2).collect(),
    };
    let params = match k {
        Some(k) => Params::nk(n, k),
        None => Params::n(n),
    };
    let mut rb = ReportBuilder::new(identity, params);
    for k in ks {
        let r = run(k)?;
        for (key, v) in &r.counts {
            rb.count(key, *v);
        }
        for w in r.witness_diff.iter().cloned().chain((!r.ok && r.witness_diff.is_empty()).then(String::new)) {
            rb.fail(|| format!("k={k}: {w}"));
        }
    }
    Ok(rb.finish())
}

/// `A_{π,σ}`: permutations of cycle type `μ ⊔ ν` whose cycles of `μ`-lengths
/// carry a copy of `π` and whose remaining cycles carry a copy of `σ`, both
/// in relative order. Here `π ∈ S_m` and `σ ∈ S_n` act on `[m]` and
/// `[m+1, m+n]` after shifting, so their supports are disjoint by
/// construction. Sorted lexicographically.
pub fn gessel_class(pi: &Permutation, sigma: &Permutation) -> Result<Vec<Permutation>> {
    check_coprime(pi, sigma)?;
    let (m, n) = (pi.n(), sigma.n());
    let total = m + n;
    if total > 24 {
        return Err(Error::TooLarge(total));
    }
    let mut out = Vec::new();
    for mask in 0u32..1 << total {
        if mask.count_ones() as usize != m {
            continue;
        }
        let (u, v): (Vec<usize>, Vec<usize>) = (1..=total).partition(|&i| mask >> (i - 1) & 1 == 1);
        let mut images = vec![0; total];
        for i in 1..=m {
            images[u[i - 1] - 1] = u[pi.at(i) - 1];
        }
        for i in 1..=n {
            images[v[i - 1] - 1] = v[sigma.at(i) - 1];
        }
        out.push(Permutation::new(images)?);
    }
    out.sort();
    Ok(out)
}

fn check_coprime(pi: &Permutation, sigma: &Permutation) -> Result<()> {
    let mu: BTreeSet<usize> = pi.cycle_type().parts().iter().copied().collect();
    if let Some(&part) = sigma.cycle_type().parts().iter().find(|p| mu.contains(p)) {
        return Err(Error::SharedPart(part));
    }
    Ok(())
}

/// `π ⧢ σ` with `σ`'s letters shifted past `π`'s.
pub fn gessel_shuffles(pi: &Permutation, sigma: &Permutation) -> Result<Vec<Permutation>> {
    let shifted: Vec<usize> = sigma.images().iter().map(|x| x + pi.n()).collect();
    shuffles(pi.images(), &shifted)
}

/// Descent multisets of `A_{π,σ}` and `π ⧢ σ` agree.
pub fn verify_gessel(pi: &Permutation, sigma: &Permutation) -> Result<bool> {
    let class: Multiset<DescentSet> = gessel_class(pi, sigma)?.iter().map(Permutation::des).collect();
    let shuf: Multiset<DescentSet> = gessel_shuffles(pi, sigma)?.iter().map(Permutation::des).collect();
    Ok(class == shuf)
}

/// [`verify_gessel`] on every ordered pair `π ∈ S_m`, `σ ∈ S_n` with
/// `m, n ≥ 1`, `m + n ≤ max` and no common cycle-type part.
pub fn verify_gessel_all(max: usize) -> Result<VerificationReport> {
    if max > 10 {
        return Err(Error::TooLarge(max));
    }
    let mut rb = ReportBuilder::new("gessel", Params::max(max));
    let perms: Vec<Vec<Permutation>> = (0..max).map(all_permutations).collect();
    for m in 1..max {
        for n in 1..=max - m {
            for pi in &perms[m] {
                for sigma in &perms[n] {
                    if check_coprime(pi, sigma).is_err() {
                        continue;
                    }
                    if !verify_gessel(pi, sigma)? {
                        rb.fail(|| format!("pi={} sigma={}", pi.format_cycles(), sigma.format_cycles()));
                    }
                    rb.count("pairs", 1);
                }
            }
        }
    }
    Ok(rb.finish())
}

/// Sum of `q^{um} t^{cr}` monomials over all of `M_n`, handy for tables.
pub fn um_cr_distribution(n: usize) -> Multiset<(usize, usize)> {
    enumerate_all_matchings(n).iter().map(|m: &Matching| (m.unmatched(), m.crossing_number())).collect()
}
