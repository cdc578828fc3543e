//! Integer partitions, standard Young tableaux, Robinson–Schensted insertion
//! in both directions, jeu-de-taquin slides and the reverse-bumping recovery
//! of shuffles from their recording tableaux.
//!
//! Cells are addressed `(row, column)`, both 1-based, rows drawn top to
//! bottom (English notation).

use std::fmt;
use std::str::FromStr;

use crate::descent::DescentSet;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::MAX_N;

/// A cell `(row, column)`, 1-based.
pub type Cell = (usize, usize);

/// An integer partition given by its row lengths.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Shape {
    parts: Vec<usize>,
}

impl Shape {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Shape { parts })
    }

    pub fn empty() -> Self {
        Shape::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn height(&self) -> usize {
        self.parts.len()
    }

    /// Length of row `r` (1-based); zero past the last row.
    pub fn row_len(&self, r: usize) -> usize {
        self.parts.get(r.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Shape {
        let width = self.parts.first().copied().unwrap_or(0);
        Shape { parts: (1..=width).map(|c| self.parts.iter().filter(|&&p| p >= c).count()).collect() }
    }

    /// Number of columns of odd length.
    pub fn odd_cols(&self) -> usize {
        self.transpose().parts.iter().filter(|&&p| p % 2 == 1).count()
    }

    pub fn contains_cell(&self, (r, c): Cell) -> bool {
        r >= 1 && c >= 1 && self.row_len(r) >= c
    }

    /// Whether a box may be added in row `r`.
    pub fn is_addable(&self, r: usize) -> bool {
        r >= 1 && r <= self.height() + 1 && (r == 1 || self.row_len(r - 1) > self.row_len(r))
    }

    /// Whether the last box of row `r` may be removed.
    pub fn is_removable(&self, r: usize) -> bool {
        r >= 1 && r <= self.height() && self.row_len(r + 1) < self.row_len(r)
    }

    pub fn add_box(&self, r: usize) -> Result<Shape> {
        if !self.is_addable(r) {
            return Err(Error::InvalidShape(format!("cannot add a box in row {r} of {self}")));
        }
        let mut parts = self.parts.clone();
        if r > parts.len() {
            parts.push(1);
        } else {
            parts[r - 1] += 1;
        }
        Ok(Shape { parts })
    }

    pub fn remove_box(&self, r: usize) -> Result<Shape> {
        if !self.is_removable(r) {
            return Err(Error::InvalidShape(format!("cannot remove a box from row {r} of {self}")));
        }
        let mut parts = self.parts.clone();
        parts[r - 1] -= 1;
        if parts[r - 1] == 0 {
            parts.pop();
        }
        Ok(Shape { parts })
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Shape {
    type Err = Error;

    /// Comma list such as `4,3,2`; `-` or the empty string is the empty shape.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Shape::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad shape part {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Shape::new(parts)
    }
}

/// All partitions of `n`, in reverse lexicographic order starting with `(n)`.
pub fn partitions(n: usize) -> Vec<Shape> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Shape>) {
        if rest == 0 {
            out.push(Shape { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// A tableau with distinct positive entries, strictly increasing along rows
/// and down columns.
///
/// Entries need not be `1..=n`: the intermediate tableaux of the oscillating
/// construction carry arbitrary letters. Operations that need a standard
/// filling of `[n]` check it themselves.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = StandardTableau { rows };
        t.validate()?;
        Ok(t)
    }

    pub fn empty() -> Self {
        StandardTableau::default()
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidTableau(msg));
        if self.rows.iter().any(Vec::is_empty) {
            return bad("empty row".into());
        }
        if self.rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return bad("row lengths are not weakly decreasing".into());
        }
        let mut all: Vec<usize> = self.rows.iter().flatten().copied().collect();
        if all.len() > MAX_N {
            return Err(Error::TooLarge(all.len()));
        }
        if all.contains(&0) {
            return bad("entries must be positive".into());
        }
        all.sort_unstable();
        if let Some(w) = all.windows(2).find(|w| w[0] == w[1]) {
            return bad(format!("entry {} repeated", w[0]));
        }
        for (r, row) in self.rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return bad(format!("row {} is not increasing", r + 1));
            }
            if r > 0 {
                let above = &self.rows[r - 1];
                if let Some(c) = (0..row.len()).find(|&c| above[c] >= row[c]) {
                    return bad(format!("column {} is not increasing at row {}", c + 1, r + 1));
                }
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Shape {
        Shape { parts: self.rows.iter().map(Vec::len).collect() }
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn entry(&self, (r, c): Cell) -> Option<usize> {
        self.rows.get(r.wrapping_sub(1))?.get(c.wrapping_sub(1)).copied()
    }

    pub fn position(&self, x: usize) -> Option<Cell> {
        self.rows.iter().enumerate().find_map(|(r, row)| row.iter().position(|&y| y == x).map(|c| (r + 1, c + 1)))
    }

    /// True when the entries are exactly `1..=size`.
    pub fn is_standard_filling(&self) -> bool {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        self.rows.iter().flatten().all(|&x| x <= n && !std::mem::replace(&mut seen[x], true))
    }

    fn require_standard_filling(&self) -> Result<()> {
        if self.is_standard_filling() {
            Ok(())
        } else {
            Err(Error::InvalidTableau(format!("{self} is not filled with 1..={}", self.size())))
        }
    }

    /// `{i : i+1 lies in a strictly lower row than i}`.
    pub fn des(&self) -> Result<DescentSet> {
        self.require_standard_filling()?;
        let n = self.size();
        let mut row_of = vec![0; n + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &x in row {
                row_of[x] = r;
            }
        }
        let mut d = DescentSet::empty(n);
        for i in 1..n {
            if row_of[i + 1] > row_of[i] {
                d.insert(i);
            }
        }
        Ok(d)
    }

    /// Relabels the entries by rank so that they become `1..=size`.
    pub fn standardized(&self) -> StandardTableau {
        let mut all: Vec<usize> = self.rows.iter().flatten().copied().collect();
        all.sort_unstable();
        let rows =
            self.rows.iter().map(|row| row.iter().map(|x| all.binary_search(x).unwrap() + 1).collect()).collect();
        StandardTableau { rows }
    }

    pub fn transpose(&self) -> StandardTableau {
        let width = self.rows.first().map_or(0, Vec::len);
        let rows =
            (0..width).map(|c| self.rows.iter().take_while(|row| row.len() > c).map(|row| row[c]).collect()).collect();
        StandardTableau { rows }
    }

    /// Row insertion of `x`: bump the smallest entry larger than `x` from
    /// each row in turn. Returns the new tableau and the added cell.
    pub fn rs_insert(&self, x: usize) -> Result<(StandardTableau, Cell)> {
        if x == 0 {
            return Err(Error::InvalidTableau("entries must be positive".into()));
        }
        if self.position(x).is_some() {
            return Err(Error::LetterPresent(x));
        }
        let mut rows = self.rows.clone();
        let cell = insert_rows(&mut rows, x);
        Ok((StandardTableau { rows }, cell))
    }

    /// Removes `x` and slides the hole outward, always pulling in the smaller
    /// of the right and lower neighbours, until it reaches an outer corner.
    pub fn jdt_delete(&self, x: usize) -> Result<StandardTableau> {
        self.jdt_delete_with_corner(x).map(|(t, _)| t)
    }

    /// As [`jdt_delete`](Self::jdt_delete), also returning the vacated corner.
    pub fn jdt_delete_with_corner(&self, x: usize) -> Result<(StandardTableau, Cell)> {
        let (r0, c0) = self.position(x).ok_or(Error::LetterAbsent(x))?;
        let mut rows = self.rows.clone();
        let (mut r, mut c) = (r0 - 1, c0 - 1);
        loop {
            let right = rows[r].get(c + 1).copied();
            let below = rows.get(r + 1).and_then(|row| row.get(c)).copied();
            let next = match (right, below) {
                (None, None) => break,
                (Some(_), None) => (r, c + 1),
                (None, Some(_)) => (r + 1, c),
                (Some(a), Some(b)) => {
                    if a < b {
                        (r, c + 1)
                    } else {
                        (r + 1, c)
                    }
                }
            };
            rows[r][c] = rows[next.0][next.1];
            (r, c) = next;
        }
        rows[r].pop();
        if rows[r].is_empty() {
            rows.pop();
        }
        Ok((StandardTableau { rows }, (r + 1, c + 1)))
    }

    /// Inverse of [`jdt_delete`](Self::jdt_delete): opens a hole at the
    /// addable `corner`, slides it inward past the larger of the left and upper
    /// neighbours while that neighbour exceeds `x`, then writes `x` there.
    pub fn reverse_jdt_place(&self, x: usize, corner: Cell) -> Result<StandardTableau> {
        if x == 0 {
            return Err(Error::InvalidTableau("entries must be positive".into()));
        }
        if self.position(x).is_some() {
            return Err(Error::LetterPresent(x));
        }
        let (cr, cc) = corner;
        let shape = self.shape();
        if !shape.is_addable(cr) || shape.row_len(cr) + 1 != cc {
            return Err(Error::InvalidCorner(cr, cc));
        }
        let mut rows = self.rows.clone();
        if cr > rows.len() {
            rows.push(Vec::new());
        }
        rows[cr - 1].push(0);
        let (mut r, mut c) = (cr - 1, cc - 1);
        loop {
            let left = if c > 0 { Some(rows[r][c - 1]) } else { None };
            let above = if r > 0 { Some(rows[r - 1][c]) } else { None };
            let (from, v) = match (left, above) {
                (None, None) => break,
                (Some(a), None) => ((r, c - 1), a),
                (None, Some(b)) => ((r - 1, c), b),
                (Some(a), Some(b)) => {
                    if a > b {
                        ((r, c - 1), a)
                    } else {
                        ((r - 1, c), b)
                    }
                }
            };
            if v < x {
                break;
            }
            rows[r][c] = v;
            (r, c) = from;
        }
        rows[r][c] = x;
        Ok(StandardTableau { rows })
    }

    /// Removes the corner at the end of row `r` and reverse-bumps its entry
    /// up to the first row. Returns the tableau and the letter ejected from
    /// row 1.
    pub fn reverse_insert(&self, r: usize) -> Result<(StandardTableau, usize)> {
        if !self.shape().is_removable(r) {
            return Err(Error::InvalidCorner(r, self.shape().row_len(r)));
        }
        let mut rows = self.rows.clone();
        let x = reverse_bump(&mut rows, r - 1);
        Ok((StandardTableau { rows }, x))
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("-");
        }
        let rows: Vec<String> =
            self.rows.iter().map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")).collect();
        f.write_str(&rows.join("/"))
    }
}

impl FromStr for StandardTableau {
    type Err = Error;

    /// Rows separated by `/`, entries by `,`: `1,2,4,6/3,5,8/7`.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() || s == "-" {
            return Ok(StandardTableau::empty());
        }
        let rows = s
            .split('/')
            .map(|row| {
                row.split(',')
                    .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad tableau entry {t:?}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        StandardTableau::new(rows)
    }
}

fn insert_rows(rows: &mut Vec<Vec<usize>>, mut x: usize) -> Cell {
    for r in 0.. {
        if r == rows.len() {
            rows.push(vec![x]);
            return (r + 1, 1);
        }
        let row = &mut rows[r];
        match row.iter().position(|&y| y > x) {
            Some(c) => std::mem::swap(&mut row[c], &mut x),
            None => {
                row.push(x);
                return (r + 1, row.len());
            }
        }
    }
    unreachable!()
}

/// Pops the last entry of row `r` (0-based) and bumps it upward: in each
/// higher row it replaces the largest smaller entry. Returns the letter
/// that leaves the first row.
fn reverse_bump(rows: &mut Vec<Vec<usize>>, r: usize) -> usize {
    let mut x = rows[r].pop().expect("corner row is nonempty");
    if rows[r].is_empty() {
        rows.pop();
    }
    for rr in (0..r).rev() {
        let row = &mut rows[rr];
        let c = row.iter().rposition(|&y| y < x).expect("a smaller entry exists in the row above");
        std::mem::swap(&mut row[c], &mut x);
    }
    x
}

/// The Robinson–Schensted pair `(P, Q)`: insertion and recording tableaux.
pub fn rs_pair(p: &Permutation) -> (StandardTableau, StandardTableau) {
    let mut ins: Vec<Vec<usize>> = Vec::new();
    let mut rec: Vec<Vec<usize>> = Vec::new();
    for (step, &x) in p.images().iter().enumerate() {
        let (r, _) = insert_rows(&mut ins, x);
        if r > rec.len() {
            rec.push(Vec::new());
        }
        rec[r - 1].push(step + 1);
    }
    (StandardTableau { rows: ins }, StandardTableau { rows: rec })
}

/// The recording tableau `Q_π`.
pub fn recording_tableau(p: &Permutation) -> StandardTableau {
    rs_pair(p).1
}

/// The unique permutation whose RS pair is `(p_tab, q_tab)`.
pub fn rs_inverse(p_tab: &StandardTableau, q_tab: &StandardTableau) -> Result<Permutation> {
    if p_tab.shape() != q_tab.shape() {
        return Err(Error::ShapeMismatch);
    }
    p_tab.require_standard_filling()?;
    q_tab.require_standard_filling()?;
    let n = p_tab.size();
    let mut ins = p_tab.rows.clone();
    let mut rec = q_tab.rows.clone();
    let mut images = vec![0; n];
    for m in (1..=n).rev() {
        let r = rec.iter().position(|row| row.last() == Some(&m)).expect("largest entry sits at a row end");
        rec[r].pop();
        if rec[r].is_empty() {
            rec.pop();
        }
        images[m - 1] = reverse_bump(&mut ins, r);
    }
    Ok(Permutation::from_images_unchecked(images))
}

/// Column lengths, left to right.
fn column_lengths(rows: &[Vec<usize>]) -> Vec<usize> {
    let width = rows.first().map_or(0, Vec::len);
    (0..width).map(|c| rows.iter().take_while(|row| row.len() > c).count()).collect()
}

/// Runs the `k` reverse-bumping extractions on a recording tableau with `k`
/// odd columns, each starting from the bottom cell of the rightmost odd
/// column.
///
/// Returns the extracted positions `τ⁻¹(n), τ⁻¹(n-1), …, τ⁻¹(n-k+1)` in that
/// order, together with the residual tableau `T_{n-k}`.
pub fn q_inverse_extractions(q_tab: &StandardTableau, k: usize) -> Result<(Vec<usize>, StandardTableau)> {
    q_tab.require_standard_filling()?;
    let found = q_tab.shape().odd_cols();
    if found != k {
        return Err(Error::OddColumns { found, expected: k });
    }
    let mut rows = q_tab.rows.clone();
    let mut extracted = Vec::with_capacity(k);
    for _ in 0..k {
        let cols = column_lengths(&rows);
        let c = cols.iter().rposition(|&len| len % 2 == 1).expect("an odd column remains");
        // The rightmost odd column ends at a row end: a longer row would
        // force an equally long, hence odd, column further right.
        extracted.push(reverse_bump(&mut rows, cols[c] - 1));
    }
    Ok((extracted, StandardTableau { rows }))
}

/// The unique `τ ∈ I_{n-k,0} ⧢ [n-k+1,…,n]` whose recording tableau is `q_tab`.
pub fn q_inverse_shuffle(q_tab: &StandardTableau, k: usize) -> Result<Permutation> {
    let n = q_tab.size();
    let (extracted, residue) = q_inverse_extractions(q_tab, k)?;
    let q_sigma = residue.standardized();
    let sigma = rs_inverse(&q_sigma, &q_sigma)?;
    let mut images = vec![0; n];
    for (step, &pos) in extracted.iter().enumerate() {
        images[pos - 1] = n - step;
    }
    let free = (0..n).filter(|&i| images[i] == 0).collect::<Vec<_>>();
    for (slot, &i) in free.iter().enumerate() {
        images[i] = sigma.images()[slot];
    }
    Ok(Permutation::from_images_unchecked(images))
}

/// Every standard Young tableau of the given shape.
pub fn enumerate_syt(shape: &Shape) -> Vec<StandardTableau> {
    fn rec(shape: &Shape, next: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<StandardTableau>) {
        if next > shape.size() {
            out.push(StandardTableau { rows: rows.clone() });
            return;
        }
        for r in 0..=rows.len() {
            let len = rows.get(r).map_or(0, Vec::len);
            let fits = len < shape.row_len(r + 1) && (r == 0 || rows[r - 1].len() > len);
            if !fits {
                continue;
            }
            if r == rows.len() {
                rows.push(Vec::new());
            }
            rows[r].push(next);
            rec(shape, next + 1, rows, out);
            rows[r].pop();
            if rows[r].is_empty() {
                rows.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(shape, 1, &mut Vec::new(), &mut out);
    out
}

/// Every standard Young tableau of size `n`.
pub fn enumerate_syt_n(n: usize) -> Vec<StandardTableau> {
    partitions(n).iter().flat_map(enumerate_syt).collect()
}

pub(crate) fn check_nk(n: usize, k: usize) -> Result<()> {
    if k > n || (n - k) % 2 == 1 {
        return Err(Error::Parity { n, k });
    }
    if n > MAX_N {
        return Err(Error::TooLarge(n));
    }
    Ok(())
}

pub(crate) fn check_nkj(n: usize, k: usize, j: usize) -> Result<()> {
    check_nk(n, k)?;
    if 2 * j > n - k {
        return Err(Error::InvalidNesting { n, k, j });
    }
    Ok(())
}

/// `SYT_{n,k}`: tableaux of size `n` with exactly `k` odd columns.
pub fn enumerate_syt_nk(n: usize, k: usize) -> Result<Vec<StandardTableau>> {
    check_nk(n, k)?;
    Ok(partitions(n).iter().filter(|s| s.odd_cols() == k).flat_map(enumerate_syt).collect())
}

/// `SYT_{n,k,j}`: tableaux in `SYT_{n,k}` with `2j ≤ height ≤ 2j+1`.
pub fn enumerate_syt_nkj(n: usize, k: usize, j: usize) -> Result<Vec<StandardTableau>> {
    check_nkj(n, k, j)?;
    Ok(partitions(n).iter().filter(|s| s.odd_cols() == k && s.height() / 2 == j).flat_map(enumerate_syt).collect())
}
